use std::collections::BTreeSet;

use crate::brick::{check_s_equals_dual, validate_prebrick, DualCheck, GBrick};
use crate::error::{Error, Result};
use crate::fan::{cones_tile, positive_octant, Cone, Fan, Tiling};
use crate::lattice::{GroupType, LatticePoint};

/// A brick for every maximal cone of a fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brickset {
    group: GroupType,
    entries: Vec<(Cone, GBrick)>,
}

impl Brickset {
    /// Cones are rebuilt from their sorted rays; entries are kept sorted by those lists.
    pub fn new(group: &GroupType, entries: Vec<(Cone, GBrick)>) -> Result<Self> {
        if let Some((_, b)) = entries.iter().find(|(_, b)| b.group() != group) {
            return Err(Error::Mismatch(format!("brick over {} in a brickset over {group}", b.group())));
        }
        let mut entries = entries
            .into_iter()
            .map(|(c, b)| Ok((Cone::new(c.ray_set().into_iter().collect())?, b)))
            .collect::<Result<Vec<_>>>()?;
        entries.sort_by_key(|(c, _)| c.ray_set().into_iter().collect::<Vec<_>>());
        Ok(Brickset { group: *group, entries })
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn entries(&self) -> &[(Cone, GBrick)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bricks(&self) -> Vec<GBrick> {
        self.entries.iter().map(|(_, b)| b.clone()).collect()
    }

    pub fn fan(&self) -> Result<Fan> {
        let cones: Vec<Cone> = self.entries.iter().map(|(c, _)| c.clone()).collect();
        Fan::from_cones(&self.group, &cones)
    }

    pub fn brick_for(&self, cone: &Cone) -> Option<&GBrick> {
        self.entries.iter().find(|(c, _)| c.same_rays(cone)).map(|(_, b)| b)
    }

    /// The same bricks with cone rays mapped through `f`.
    pub fn map_cones(&self, group: &GroupType, f: impl Fn(&LatticePoint) -> Option<LatticePoint>) -> Result<Vec<Cone>> {
        self.entries
            .iter()
            .map(|(c, _)| {
                let rays = c
                    .rays()
                    .iter()
                    .map(|p| f(p).ok_or_else(|| Error::NotInLattice(format!("{} has no image over {group}", self.group.fmt_point(p)))))
                    .collect::<Result<Vec<_>>>()?;
                Cone::new(rays)
            })
            .collect()
    }
}

/// Verdict for one entry of a brickset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub cone: Cone,
    /// Failed brick axioms, if any.
    pub axioms: Option<String>,
    pub dual: DualCheck,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.axioms.is_none() && self.dual.ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BricksetReport {
    pub entries: Vec<EntryReport>,
    pub repeated_cones: Vec<Cone>,
    pub tiling: Tiling,
}

impl BricksetReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok()) && self.repeated_cones.is_empty() && self.tiling.ok
    }

    pub fn failures(&self) -> Vec<&EntryReport> {
        self.entries.iter().filter(|e| !e.ok()).collect()
    }
}

pub fn verify_brickset(b: &Brickset) -> BricksetReport {
    let g = b.group();
    let mut seen: BTreeSet<BTreeSet<LatticePoint>> = BTreeSet::new();
    let mut repeated_cones = Vec::new();
    let mut entries = Vec::new();
    for (cone, brick) in b.entries() {
        if !seen.insert(cone.ray_set()) {
            repeated_cones.push(cone.clone());
        }
        let axioms = validate_prebrick(g, brick.monomials()).err().map(|r| r.to_string());
        let dual = check_s_equals_dual(brick, cone);
        entries.push(EntryReport { cone: cone.clone(), axioms, dual });
    }
    let tiling = match b.fan() {
        Ok(f) => cones_tile(&f, &positive_octant(g)),
        Err(e) => Tiling { ok: false, problems: vec![e.to_string()] },
    };
    BricksetReport { entries, repeated_cones, tiling }
}
