//! Stability parameters, pushforwards, partial solutions θ_P and stability margins.

pub mod linsolve;
pub mod margin;
pub mod theta;
pub mod vartheta;

use num::{BigInt, ToPrimitive};

use crate::brick::GBrick;
use crate::error::{Error, Result};
use crate::lattice::{GroupType, RoundDownContext};
use crate::scalar::Scalar;

pub use margin::{affine_margin, min_margin, min_margin_bruteforce, AffineMargin, StabilityMargin};
pub use theta::{pushforward, AffineValue, ThetaOf};
pub use vartheta::{check_vartheta_properties, search_vartheta, vartheta_catalog, VarthetaFamily, VarthetaProperties};

pub fn theta_basis<T: Scalar>(g: &GroupType, i: usize) -> Result<ThetaOf<T>> {
    ThetaOf::basis(g.order() as usize, i)
}

pub fn theta_plus<T: Scalar>(g: &GroupType) -> ThetaOf<T> {
    ThetaOf::plus(g.order() as usize)
}

/// Result of solving (φ_k)⋆θ = θ^(k) for all contexts at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSolution<T> {
    /// The solution with all free coordinates zero, when the system is consistent.
    pub theta: Option<ThetaOf<T>>,
    /// Rank of the combined pushforward map Θ → ⊕Θ^(k).
    pub rank: usize,
    /// Σ(a_k − 1), the dimension of ⊕Θ^(k).
    pub target_dim: usize,
}

impl<T> PartialSolution<T> {
    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }

    pub fn feasible(&self) -> bool {
        self.theta.is_some()
    }
}

/// Rows of the combined pushforward in the basis θ_1, …, θ_{r−1}, one per nontrivial χ_j of each G_k.
fn pushforward_rows<T: Scalar>(r: usize, ctxs: &[RoundDownContext]) -> Vec<Vec<T>> {
    let mut rows = Vec::new();
    for ctx in ctxs {
        let ak = ctx.a_k() as usize;
        for j in 1..ak {
            rows.push((1..r).map(|i| if ctx.induced_character(i) == j { T::one() } else { T::zero() }).collect());
        }
    }
    rows
}

pub fn pushforward_rank(g: &GroupType, ctxs: &[RoundDownContext]) -> usize {
    let r = g.order() as usize;
    let rows = pushforward_rows::<crate::Q>(r, ctxs);
    linsolve::rank(&rows, r.saturating_sub(1))
}

pub fn solve_partial<T: Scalar>(
    g: &GroupType,
    ctxs: &[RoundDownContext],
    targets: &[ThetaOf<T>],
) -> Result<PartialSolution<T>> {
    if ctxs.len() != targets.len() {
        return Err(Error::Mismatch(format!("{} contexts but {} targets", ctxs.len(), targets.len())));
    }
    for (ctx, t) in ctxs.iter().zip(targets) {
        if ctx.parent() != g {
            return Err(Error::Mismatch(format!("context over {} used with {g}", ctx.parent())));
        }
        if t.len() != ctx.a_k() as usize {
            return Err(Error::Mismatch(format!("target of length {} for a subgroup of order {}", t.len(), ctx.a_k())));
        }
    }
    let r = g.order() as usize;
    let rows = pushforward_rows::<T>(r, ctxs);
    let rhs: Vec<T> = targets.iter().flat_map(|t| t.values()[1..].to_vec()).collect();
    let target_dim = rhs.len();
    let sol = linsolve::solve(&rows, &rhs, r - 1);
    let theta = match sol.x {
        Some(c) => {
            let total = c.iter().fold(T::zero(), |a, b| a + b.clone());
            let mut v = vec![-total];
            v.extend(c);
            Some(ThetaOf::new(v)?)
        }
        None => None,
    };
    Ok(PartialSolution { theta, rank: sol.rank, target_dim })
}

/// Whether θ satisfies (φ_k)⋆θ = θ^(k) for every context.
pub fn verify_partial<T: Scalar>(ctxs: &[RoundDownContext], targets: &[ThetaOf<T>], theta: &ThetaOf<T>) -> bool {
    ctxs.len() == targets.len() && ctxs.iter().zip(targets).all(|(c, t)| &pushforward(c, theta) == t)
}

/// Certificate that every brick is θ-stable for θ = θ_P + m·ϑ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityCertificate<T> {
    pub theta_p: ThetaOf<T>,
    pub vartheta: ThetaOf<T>,
    pub m: u64,
    /// Per brick; `None` for one-element bricks.
    pub margins: Vec<Option<AffineMargin<T>>>,
    /// Smallest integer m ≥ 1 stabilizing each brick on its own.
    pub thresholds: Vec<u64>,
}

impl<T: Scalar> StabilityCertificate<T> {
    pub fn theta(&self) -> ThetaOf<T> {
        self.theta_p.combine(&T::from_int(self.m as i64), &self.vartheta)
    }

    /// Recomputes every margin at m and checks positivity.
    pub fn verify(&self, bricks: &[GBrick]) -> Result<bool> {
        if bricks.len() != self.margins.len() {
            return Ok(false);
        }
        let theta = self.theta();
        for b in bricks {
            if let Some(mm) = min_margin(b, &theta)? {
                if !mm.is_stable() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Why no m ≤ m_max stabilizes the bricks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FindMFailure<T> {
    /// A closed set whose θ-value is affine with nonpositive slope and nonpositive at m.
    Unbounded { brick: usize, m: u64, margin: AffineMargin<T> },
    /// The next candidate exceeds m_max.
    Exhausted { brick: usize, m: u64, next: Option<u64>, margin: AffineMargin<T> },
}

impl<T: Scalar> FindMFailure<T> {
    pub fn brick(&self) -> usize {
        match self {
            FindMFailure::Unbounded { brick, .. } | FindMFailure::Exhausted { brick, .. } => *brick,
        }
    }
}

pub const DEFAULT_M_MAX: u64 = 1 << 20;

/// Smallest integer m' > m with p + q·m' > 0, for q > 0.
fn next_candidate<T: Scalar>(a: &AffineValue<T>, m: u64) -> u64 {
    let p = a.constant.to_big_ratio();
    let q = a.slope.to_big_ratio();
    let root = -p / q;
    let next: BigInt = root.floor().to_integer() + 1;
    next.to_u64().unwrap_or(u64::MAX).max(m + 1)
}

enum Step<T> {
    Stable(Vec<Option<AffineMargin<T>>>),
    Jump(u64),
    Fail(FindMFailure<T>),
}

fn step<T: Scalar>(bricks: &[GBrick], tp: &ThetaOf<T>, vt: &ThetaOf<T>, m: u64, m_max: u64) -> Result<Step<T>> {
    let mt = T::from_int(m as i64);
    let mut margins = Vec::with_capacity(bricks.len());
    let mut jump: Option<(u64, usize, AffineMargin<T>)> = None;
    for (i, b) in bricks.iter().enumerate() {
        let am = affine_margin(b, tp, vt, &mt)?;
        if let Some(a) = &am {
            if !a.margin.is_stable() {
                if !a.affine.slope.is_positive() {
                    return Ok(Step::Fail(FindMFailure::Unbounded { brick: i, m, margin: a.clone() }));
                }
                let n = next_candidate(&a.affine, m);
                if jump.as_ref().is_none_or(|(j, _, _)| n > *j) {
                    jump = Some((n, i, a.clone()));
                }
            }
        }
        margins.push(am);
    }
    match jump {
        None => Ok(Step::Stable(margins)),
        Some((n, i, a)) if n > m_max => {
            Ok(Step::Fail(FindMFailure::Exhausted { brick: i, m, next: (n < u64::MAX).then_some(n), margin: a }))
        }
        Some((n, _, _)) => Ok(Step::Jump(n)),
    }
}

/// Smallest integer m ≥ 1 making all margins of θ_P + m·ϑ positive.
///
/// At an unstable m the witness's affine function bounds the concave margin from above, so
/// the search jumps to the first integer where that function turns positive.
pub fn find_m<T: Scalar>(
    bricks: &[GBrick],
    theta_p: &ThetaOf<T>,
    vartheta: &ThetaOf<T>,
    m_max: u64,
) -> Result<std::result::Result<StabilityCertificate<T>, FindMFailure<T>>> {
    if let Some(b) = bricks.iter().find(|b| b.len() != theta_p.len() || b.len() != vartheta.len()) {
        return Err(Error::Mismatch(format!("brick of size {} with θ of size {}", b.len(), theta_p.len())));
    }
    let mut m = 1u64;
    let margins = loop {
        match step(bricks, theta_p, vartheta, m, m_max)? {
            Step::Stable(ms) => break ms,
            Step::Jump(n) => m = n,
            Step::Fail(f) => return Ok(Err(f)),
        }
    };
    let mut thresholds = Vec::with_capacity(bricks.len());
    for b in bricks {
        let mut t = 1u64;
        loop {
            match step(std::slice::from_ref(b), theta_p, vartheta, t, m)? {
                Step::Stable(_) => break,
                Step::Jump(n) => t = n,
                Step::Fail(_) => return Err(Error::Mismatch("brick threshold exceeds the joint m".into())),
            }
        }
        thresholds.push(t);
    }
    Ok(Ok(StabilityCertificate { theta_p: theta_p.clone(), vartheta: vartheta.clone(), m, margins, thresholds }))
}
