//! G-bricks: weight-indexed sets of Laurent monomials and their semigroups and cones.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::fan::Cone;
use crate::geom::{cross, dot, primitive, rank, V3};
use crate::hilbert::hilbert_basis;
use crate::lattice::{GroupType, LatticePoint, Monomial, RoundDownContext};
use crate::semigroup::{Membership, SemigroupPresentation};

/// A G-prebrick: entry i is the unique monomial of weight i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GBrick {
    group: GroupType,
    monomials: Vec<Monomial>,
}

/// A violated brick axiom with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingOne,
    WrongSize { expected: usize, got: usize },
    DuplicateWeight { weight: usize, first: Monomial, second: Monomial },
    /// `lower` and `upper` lie in Γ, `lower` divides `upper`, but `missing` between them does not.
    Unsaturated { lower: Monomial, upper: Monomial, missing: Monomial },
    Disconnected { unreachable: Vec<Monomial> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingOne => write!(f, "the monomial 1 is missing"),
            Violation::WrongSize { expected, got } => write!(f, "expected {expected} monomials, got {got}"),
            Violation::DuplicateWeight { weight, first, second } => {
                write!(f, "{first} and {second} both have weight {weight}")
            }
            Violation::Unsaturated { lower, upper, missing } => {
                write!(f, "{lower} divides {upper} but {missing} is missing")
            }
            Violation::Disconnected { unreachable } => {
                let s: Vec<String> = unreachable.iter().map(|m| m.to_string()).collect();
                write!(f, "not connected to 1: {}", s.join(", "))
            }
        }
    }
}

/// Every violated axiom of a candidate brick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrebrickReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for PrebrickReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join("; "))
    }
}

impl From<PrebrickReport> for Error {
    fn from(r: PrebrickReport) -> Self {
        Error::InvalidBrick(r.to_string())
    }
}

pub fn validate_prebrick(g: &GroupType, candidate: &[Monomial]) -> std::result::Result<GBrick, PrebrickReport> {
    let r = g.order() as usize;
    let mut violations = Vec::new();
    let set: BTreeSet<Monomial> = candidate.iter().copied().collect();
    if !set.contains(&Monomial::one()) {
        violations.push(Violation::MissingOne);
    }
    if candidate.len() != r {
        violations.push(Violation::WrongSize { expected: r, got: candidate.len() });
    }
    let mut slots: Vec<Option<Monomial>> = vec![None; r];
    for m in candidate {
        let w = g.weight_of(m);
        match slots[w] {
            Some(first) => violations.push(Violation::DuplicateWeight { weight: w, first, second: *m }),
            None => slots[w] = Some(*m),
        }
    }
    if let Some(v) = saturation_violation(&set) {
        violations.push(v);
    }
    let unreachable = unreachable_from_one(&set);
    if !unreachable.is_empty() && set.contains(&Monomial::one()) {
        violations.push(Violation::Disconnected { unreachable });
    }
    if violations.is_empty() {
        Ok(GBrick { group: *g, monomials: slots.into_iter().map(|m| m.unwrap()).collect() })
    } else {
        Err(PrebrickReport { violations })
    }
}

fn saturation_violation(set: &BTreeSet<Monomial>) -> Option<Violation> {
    for a in set {
        for b in set {
            if a == b || !a.divides(b) {
                continue;
            }
            for i in 0..3 {
                if a.0[i] < b.0[i] {
                    let step = *a * Monomial::var(i);
                    if !set.contains(&step) {
                        return Some(Violation::Unsaturated { lower: *a, upper: *b, missing: step });
                    }
                }
            }
        }
    }
    None
}

fn unreachable_from_one(set: &BTreeSet<Monomial>) -> Vec<Monomial> {
    let one = Monomial::one();
    if !set.contains(&one) {
        return set.iter().copied().collect();
    }
    let mut seen = BTreeSet::from([one]);
    let mut queue = VecDeque::from([one]);
    while let Some(m) = queue.pop_front() {
        for i in 0..3 {
            let x = Monomial::var(i);
            for n in [m * x, m / x] {
                if set.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
    }
    set.iter().filter(|m| !seen.contains(m)).copied().collect()
}

/// The dual cone σ(Γ) of S(Γ), with its actual dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickCone {
    pub rays: Vec<LatticePoint>,
    pub dim: usize,
}

impl BrickCone {
    pub fn to_cone(&self) -> Result<Cone> {
        if self.dim != 3 {
            return Err(Error::NotFullDimensional);
        }
        Cone::new(self.rays.clone())
    }
}

impl GBrick {
    /// A weight transversal without the saturation and connectivity axioms.
    pub fn from_transversal(g: &GroupType, list: &[Monomial]) -> Result<Self> {
        let r = g.order() as usize;
        if list.len() != r {
            return Err(Error::InvalidBrick(format!("expected {r} monomials, got {}", list.len())));
        }
        let mut slots: Vec<Option<Monomial>> = vec![None; r];
        for m in list {
            let w = g.weight_of(m);
            if let Some(first) = slots[w] {
                return Err(Error::InvalidBrick(format!("{first} and {m} both have weight {w}")));
            }
            slots[w] = Some(*m);
        }
        if slots[0] != Some(Monomial::one()) {
            return Err(Error::InvalidBrick("the monomial 1 is missing".into()));
        }
        Ok(GBrick { group: *g, monomials: slots.into_iter().map(|m| m.unwrap()).collect() })
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn entry(&self, w: usize) -> Monomial {
        self.monomials[w]
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials[self.group.weight_of(m)] == *m
    }

    /// The entry of Γ with the weight of m.
    pub fn wt(&self, m: &Monomial) -> Monomial {
        self.monomials[self.group.weight_of(m)]
    }

    pub fn weight_of_member(&self, m: &Monomial) -> Option<usize> {
        let w = self.group.weight_of(m);
        (self.monomials[w] == *m).then_some(w)
    }

    /// Weights j with x_i·m_w = m_j.
    pub fn successors(&self, w: usize) -> Vec<usize> {
        (0..3).filter_map(|i| self.weight_of_member(&(self.monomials[w] * Monomial::var(i)))).collect()
    }

    /// The degree-one ratios (x_i·m)/wt_Γ(x_i·m), deduplicated, identity removed.
    pub fn semigroup_generators(&self) -> SemigroupPresentation {
        let mut gens = BTreeSet::new();
        for m in &self.monomials {
            for i in 0..3 {
                let n = *m * Monomial::var(i);
                let q = n / self.wt(&n);
                if !q.is_one() {
                    gens.insert(q);
                }
            }
        }
        SemigroupPresentation::new(gens.into_iter().collect())
    }

    pub fn brick_cone(&self) -> BrickCone {
        let gens: Vec<V3> = self.semigroup_generators().generators().iter().map(|m| m.0).collect();
        cone_dual_to(&self.group, &gens)
    }

    pub fn is_brick(&self) -> bool {
        self.brick_cone().dim == 3
    }

    pub fn border_basis(&self) -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for m in &self.monomials {
            for i in 0..3 {
                let n = *m * Monomial::var(i);
                if !self.contains(&n) {
                    out.insert(n);
                }
            }
        }
        out
    }

    pub fn is_submodule_basis(&self, weights: &BTreeSet<usize>) -> bool {
        weights.iter().all(|&w| w < self.len() && self.successors(w).iter().all(|s| weights.contains(s)))
    }

    pub fn render(&self, names: [&str; 3]) -> String {
        let s: Vec<String> = self.monomials.iter().map(|m| m.render(names)).collect();
        format!("{{{}}}", s.join(", "))
    }
}

impl fmt::Display for GBrick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["x", "y", "z"]))
    }
}

/// Smallest multiple of a primitive integer direction lying in L, as numerators over r.
pub fn l_primitive(g: &GroupType, d: &V3) -> LatticePoint {
    (1..=g.order())
        .map(|k| LatticePoint(d.map(|x| x * k)))
        .find(|p| g.contains(p))
        .expect("r times an integer vector lies in L")
}

/// Extreme rays of {u : ⟨u, g⟩ ≥ 0 for all g}, given that the cone is pointed.
pub fn cone_dual_to(g: &GroupType, gens: &[V3]) -> BrickCone {
    let mut dirs: Vec<V3> = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = primitive(cross(&gens[i], &gens[j]));
            if c == [0, 0, 0] {
                continue;
            }
            for cand in [c, c.map(|x| -x)] {
                if dirs.contains(&cand) || gens.iter().any(|m| dot(&cand, m) < 0) {
                    continue;
                }
                let tight: Vec<V3> = gens.iter().filter(|m| dot(&cand, m) == 0).copied().collect();
                if rank(&tight) == 2 {
                    dirs.push(cand);
                }
            }
        }
    }
    let rays: Vec<LatticePoint> = dirs.iter().map(|d| l_primitive(g, d)).collect();
    let dim = rank(&dirs);
    let mut rays = rays;
    rays.sort();
    BrickCone { rays, dim }
}

/// Witnessed outcome of comparing S(Γ) with σ∨ ∩ M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCheck {
    pub ok: bool,
    pub witness: Option<String>,
}

pub fn check_s_equals_dual(brick: &GBrick, sigma: &Cone) -> DualCheck {
    let g = brick.group();
    let fail = |w: String| DualCheck { ok: false, witness: Some(w) };
    let pres = brick.semigroup_generators();
    for m in pres.generators() {
        if let Some(u) = sigma.rays().iter().find(|u| u.pair(m) < 0) {
            return fail(format!("generator {m} pairs negatively with {}", g.fmt_point(u)));
        }
    }
    let bc = brick.brick_cone();
    let same = bc.dim == 3 && bc.rays.iter().copied().collect::<BTreeSet<_>>() == sigma.ray_set();
    if !same {
        let rays: Vec<String> = bc.rays.iter().map(|p| g.fmt_point(p)).collect();
        return fail(format!("sigma(brick) has rays [{}] of dimension {}", rays.join(", "), bc.dim));
    }
    let hb = match hilbert_basis(g, sigma) {
        Ok(hb) => hb,
        Err(e) => return fail(format!("Hilbert basis failed: {e}")),
    };
    let height = sigma.interior_point();
    let mut cache = HashMap::new();
    for h in hb {
        match pres.contains_with(&h, &height, &mut cache) {
            Membership::Yes => {}
            Membership::No => return fail(format!("Hilbert basis element {h} is not in S(brick)")),
            Membership::Inconclusive => return fail(format!("membership of {h} is inconclusive")),
        }
    }
    DualCheck { ok: true, witness: None }
}

/// Upper bound on the preimage exploration in `lift_brick`, as a multiple of r.
pub const LIFT_LIMIT_FACTOR: usize = 10;

/// The natural inverse {m : φ_k(m) ∈ Γ′}, found by exploring from 1.
pub fn lift_brick(ctx: &RoundDownContext, sub: &GBrick) -> Result<GBrick> {
    if sub.group() != ctx.subgroup() {
        return Err(Error::Mismatch(format!(
            "brick of {} cannot be lifted through a context for {}",
            sub.group(),
            ctx.subgroup()
        )));
    }
    let g = ctx.parent();
    let r = g.order() as usize;
    let inside = |m: &Monomial| sub.contains(&ctx.round_down(m));
    let one = Monomial::one();
    let mut found = BTreeSet::from([one]);
    let mut queue = VecDeque::from([one]);
    let mut visited = 1usize;
    while let Some(m) = queue.pop_front() {
        for i in 0..3 {
            let x = Monomial::var(i);
            for n in [m * x, m / x] {
                if found.contains(&n) {
                    continue;
                }
                visited += 1;
                if visited > LIFT_LIMIT_FACTOR * r * 6 || found.len() > LIFT_LIMIT_FACTOR * r {
                    return Err(Error::SearchLimit(format!(
                        "lifting {sub} explored {visited} monomials and kept {} without closing up",
                        found.len()
                    )));
                }
                if inside(&n) {
                    found.insert(n);
                    queue.push_back(n);
                }
            }
        }
    }
    let list: Vec<Monomial> = found.into_iter().collect();
    Ok(validate_prebrick(g, &list)?)
}

/// Closed subsets of a brick: successor-closed sets of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleBasis {
    weights: BTreeSet<usize>,
}

impl SubmoduleBasis {
    pub fn new(brick: &GBrick, weights: BTreeSet<usize>) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w >= brick.len()) {
            return Err(Error::InvalidBrick(format!("weight {w} out of range")));
        }
        for &w in &weights {
            if let Some(s) = brick.successors(w).into_iter().find(|s| !weights.contains(s)) {
                return Err(Error::InvalidBrick(format!(
                    "{} is in the set but its successor {} is not",
                    brick.entry(w),
                    brick.entry(s)
                )));
            }
        }
        Ok(SubmoduleBasis { weights })
    }

    pub fn weights(&self) -> &BTreeSet<usize> {
        &self.weights
    }

    pub fn is_proper(&self, brick: &GBrick) -> bool {
        !self.weights.is_empty() && self.weights.len() < brick.len()
    }

    pub fn monomials(&self, brick: &GBrick) -> Vec<Monomial> {
        self.weights.iter().map(|&w| brick.entry(w)).collect()
    }
}

/// Fibres of the round-down map restricted to a brick, keyed by image.
pub fn fibres(ctx: &RoundDownContext, brick: &GBrick) -> BTreeMap<Monomial, Vec<usize>> {
    let mut out: BTreeMap<Monomial, Vec<usize>> = BTreeMap::new();
    for (w, m) in brick.monomials().iter().enumerate() {
        out.entry(ctx.round_down(m)).or_default().push(w);
    }
    out
}
