use crate::brick::{lift_brick, GBrick};
use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::lattice::{is_good_subdivision, GroupType, LatticePoint, Monomial, RoundDownContext};

use super::brickset::{verify_brickset, Brickset};
use super::ghilb::ghilb;

/// How to obtain the sub-brickset over one σ_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// σ_k smooth: the single brick {1}.
    Trivial,
    /// The restricted fan is G_k-Hilb.
    Ghilb,
    /// Recurse at a center given in the G_k frame.
    Recurse(LatticePoint, Box<[Strategy; 3]>),
    /// A ready-made G_k-brickset.
    Load(Brickset),
    /// Trivial, Ghilb, or the first workable recursion center, in that order.
    Auto,
}

/// How a brickset was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Trivial,
    Ghilb,
    Loaded,
    Split { center: LatticePoint, contexts: Vec<RoundDownContext>, children: Vec<BuildNode> },
}

/// One node of the recursion tree with its verified brickset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildNode {
    pub group: GroupType,
    pub fan: Fan,
    pub brickset: Brickset,
    pub kind: NodeKind,
}

impl BuildNode {
    pub fn depth(&self) -> usize {
        match &self.kind {
            NodeKind::Split { children, .. } => 1 + children.iter().map(|c| c.depth()).max().unwrap_or(0),
            _ => 0,
        }
    }
}

/// Restriction of a fan to the three cones σ_k of a star subdivision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restriction {
    /// Sub-fans in the G_k frames, indexed by k.
    Fans(Vec<Fan>),
    /// Maximal cones lying in no σ_k: the model has no morphism to the subdivision.
    Straddling(Vec<Cone>),
}

pub fn contexts(g: &GroupType, center: &LatticePoint) -> Result<Vec<RoundDownContext>> {
    (0..3).map(|k| RoundDownContext::new(g, center, k)).collect()
}

fn sub_cone(ctx: &RoundDownContext) -> Cone {
    Cone::new(ctx.sub_cone_rays().to_vec()).expect("σ_k is full dimensional")
}

/// The cones of the fan inside σ_k, in the G_k frame.
pub fn restrict_fan(fan: &Fan, ctx: &RoundDownContext) -> Result<Fan> {
    let sk = sub_cone(ctx);
    let sub = ctx.subgroup();
    let cones: Vec<Cone> = fan
        .cones()
        .into_iter()
        .filter(|c| c.rays().iter().all(|p| sk.contains(&p.0)))
        .map(|c| {
            let rays = c
                .rays()
                .iter()
                .map(|p| ctx.to_sub_point(p).ok_or_else(|| Error::NotInLattice(fan.group().fmt_point(p))))
                .collect::<Result<Vec<_>>>()?;
            Cone::new(rays)
        })
        .collect::<Result<_>>()?;
    if cones.is_empty() {
        return Err(Error::Mismatch(format!("no cone of the fan lies in {}", sk.display(fan.group()))));
    }
    Fan::from_cones(sub, &cones)
}

pub fn restrict_all(fan: &Fan, center: &LatticePoint) -> Result<Restriction> {
    let ctxs = contexts(fan.group(), center)?;
    let sks: Vec<Cone> = ctxs.iter().map(sub_cone).collect();
    let straddling: Vec<Cone> = fan
        .cones()
        .into_iter()
        .filter(|c| !sks.iter().any(|s| c.rays().iter().all(|p| s.contains(&p.0))))
        .collect();
    if !straddling.is_empty() {
        return Ok(Restriction::Straddling(straddling));
    }
    Ok(Restriction::Fans(ctxs.iter().map(|c| restrict_fan(fan, c)).collect::<Result<_>>()?))
}

/// The chain {1, x_k, …} lifted from the trivial brick of a smooth σ_k.
pub fn smooth_cone_brick(ctx: &RoundDownContext) -> Result<GBrick> {
    if ctx.a_k() != 1 {
        return Err(Error::InvalidCenter(format!("σ_{} is not smooth: a_k = {}", ctx.axis() + 1, ctx.a_k())));
    }
    let one = GBrick::from_transversal(ctx.subgroup(), &[Monomial::one()])?;
    lift_brick(ctx, &one)
}

fn base_node(g: &GroupType, fan: &Fan, kind: NodeKind, set: Brickset) -> Result<BuildNode> {
    let got = set.fan()?;
    if !got.same_cones(fan) {
        let missing = fan.cones().into_iter().find(|c| set.brick_for(c).is_none());
        let what = match missing {
            Some(c) => format!("cone {} has no brick", c.display(g)),
            None => "brickset has cones outside the fan".to_string(),
        };
        return Err(Error::Mismatch(format!("{what} over {g}")));
    }
    Ok(BuildNode { group: *g, fan: fan.clone(), brickset: set, kind })
}

fn build_with(g: &GroupType, fan: &Fan, strategy: &Strategy) -> Result<BuildNode> {
    match strategy {
        Strategy::Trivial => {
            if !g.is_trivial() {
                return Err(Error::InvalidCenter(format!("trivial strategy over the nontrivial group {g}")));
            }
            let (_, set) = ghilb(g)?;
            base_node(g, fan, NodeKind::Trivial, set)
        }
        Strategy::Ghilb => {
            let (_, set) = ghilb(g)?;
            base_node(g, fan, NodeKind::Ghilb, set)
        }
        Strategy::Load(set) => {
            if set.group() != g {
                return Err(Error::Mismatch(format!("loaded brickset is over {}, expected {g}", set.group())));
            }
            let report = verify_brickset(set);
            if !report.ok() {
                return Err(Error::InvalidBrick(format!("loaded brickset over {g} fails verification")));
            }
            base_node(g, fan, NodeKind::Loaded, set.clone())
        }
        Strategy::Recurse(v, subs) => build_brickset(g, fan, v, subs),
        Strategy::Auto => build_auto(g, fan),
    }
}

/// Candidate recursion centers: non-axis rays of the fan by age, then class.
pub fn candidate_centers(fan: &Fan) -> Vec<LatticePoint> {
    let g = fan.group();
    let axes = g.axes();
    let mut c: Vec<LatticePoint> = fan.rays().iter().filter(|p| !axes.contains(p)).copied().collect();
    c.sort_by_key(|p| (g.age(p), g.class_of(p).unwrap_or(i64::MAX), *p));
    c
}

pub fn build_auto(g: &GroupType, fan: &Fan) -> Result<BuildNode> {
    if g.is_trivial() {
        return build_with(g, fan, &Strategy::Trivial);
    }
    let (hfan, set) = ghilb(g)?;
    if hfan.same_cones(fan) {
        return base_node(g, fan, NodeKind::Ghilb, set);
    }
    let mut errors = Vec::new();
    for v in candidate_centers(fan) {
        if !is_good_subdivision(g, &v).good {
            continue;
        }
        match build_brickset(g, fan, &v, &[Strategy::Auto, Strategy::Auto, Strategy::Auto]) {
            Ok(node) => return Ok(node),
            Err(e) => errors.push(format!("{}: {e}", g.fmt_point(&v))),
        }
    }
    Err(Error::Mismatch(format!("no recursion center works over {g}: [{}]", errors.join("; "))))
}

/// Lifts sub-bricksets over the three σ_k of the star subdivision at `center`.
pub fn build_brickset(g: &GroupType, fan: &Fan, center: &LatticePoint, strategies: &[Strategy; 3]) -> Result<BuildNode> {
    if fan.group() != g {
        return Err(Error::Mismatch(format!("fan over {} used with {g}", fan.group())));
    }
    let good = is_good_subdivision(g, center);
    if !good.good {
        return Err(Error::InvalidCenter(format!("{} is not a good center: {}", g.fmt_point(center), good.violations.join("; "))));
    }
    let subfans = match restrict_all(fan, center)? {
        Restriction::Fans(f) => f,
        Restriction::Straddling(cs) => {
            let names: Vec<String> = cs.iter().map(|c| c.display(g)).collect();
            return Err(Error::Mismatch(format!(
                "no morphism to the subdivision at {}: {} straddle",
                g.fmt_point(center),
                names.join(", ")
            )));
        }
    };
    let ctxs = contexts(g, center)?;
    let mut children = Vec::new();
    let mut entries: Vec<(Cone, GBrick)> = Vec::new();
    for ((ctx, sub_fan), strategy) in ctxs.iter().zip(&subfans).zip(strategies) {
        let sub = ctx.subgroup();
        assert!(sub.order() < g.order(), "subgroup order must drop");
        let child = build_with(sub, sub_fan, strategy)?;
        let cones = child.brickset.map_cones(g, |q| ctx.from_sub_point(q))?;
        for ((_, b), cone) in child.brickset.entries().iter().zip(cones) {
            entries.push((cone, lift_brick(ctx, b)?));
        }
        children.push(child);
    }
    let set = Brickset::new(g, entries)?;
    if !set.fan()?.same_cones(fan) {
        return Err(Error::Mismatch("lifted cones differ from the model's cones".into()));
    }
    let report = verify_brickset(&set);
    if !report.ok() {
        let first = report
            .failures()
            .first()
            .map(|e| format!("{}: {}", e.cone.display(g), e.axioms.clone().or(e.dual.witness.clone()).unwrap_or_default()))
            .unwrap_or_else(|| report.tiling.problems.join("; "));
        return Err(Error::InvalidBrick(format!("lifted brickset over {g} fails: {first}")));
    }
    Ok(BuildNode {
        group: *g,
        fan: fan.clone(),
        brickset: set,
        kind: NodeKind::Split { center: *center, contexts: ctxs, children },
    })
}
