use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::RoundDownContext;
use crate::scalar::Scalar;

use super::theta::{pushforward, ThetaOf};

/// The families of groups 1/r(1,a,b) with a known ϑ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarthetaFamily {
    /// r = abc + a + b + 1 with gcd(a,b) = 1.
    Case1 { a: i64, b: i64, c: i64 },
    /// r = abc + a − 2b + 1 with b = ak + 1, c ≥ 2.
    Case2a { a: i64, k: i64, c: i64 },
    /// r = ab + a − 2b + 1 with b = ak + 1.
    Case2b { a: i64, k: i64 },
    /// Piecewise-constant runs (start, end exclusive, value) over weights 0..r.
    Custom { r: i64, pieces: Vec<(i64, i64, i64)> },
}

impl VarthetaFamily {
    pub fn order(&self) -> i64 {
        match *self {
            VarthetaFamily::Case1 { a, b, c } => a * b * c + a + b + 1,
            VarthetaFamily::Case2a { a, k, c } => {
                let b = a * k + 1;
                a * b * c + a - 2 * b + 1
            }
            VarthetaFamily::Case2b { a, k } => {
                let b = a * k + 1;
                a * b + a - 2 * b + 1
            }
            VarthetaFamily::Custom { r, .. } => r,
        }
    }

    /// The weights (1, a, b) of the family's group, when it has one.
    pub fn weights(&self) -> Option<[i64; 3]> {
        match *self {
            VarthetaFamily::Case1 { a, b, .. } => Some([1, a, b]),
            VarthetaFamily::Case2a { a, k, .. } | VarthetaFamily::Case2b { a, k } => Some([1, a, a * k + 1]),
            VarthetaFamily::Custom { .. } => None,
        }
    }
}

impl fmt::Display for VarthetaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarthetaFamily::Case1 { a, b, c } => write!(f, "case1(a={a},b={b},c={c})"),
            VarthetaFamily::Case2a { a, k, c } => write!(f, "case2a(a={a},b={},c={c},k={k})", a * k + 1),
            VarthetaFamily::Case2b { a, k } => write!(f, "case2b(a={a},b={},k={k})", a * k + 1),
            VarthetaFamily::Custom { r, pieces } => write!(f, "custom(r={r},{} pieces)", pieces.len()),
        }
    }
}

struct Builder {
    r: i64,
    values: Vec<i64>,
    set: Vec<bool>,
}

impl Builder {
    fn new(r: i64) -> Self {
        Builder { r, values: vec![0; r as usize], set: vec![false; r as usize] }
    }

    fn put(&mut self, w: i64, v: i64) -> Result<()> {
        if w < 0 || w >= self.r {
            return Err(Error::InvalidTheta(format!("breakpoint weight {w} outside 0..{}", self.r)));
        }
        let i = w as usize;
        if self.set[i] {
            return Err(Error::InvalidTheta(format!("breakpoint collision at weight {w}")));
        }
        self.set[i] = true;
        self.values[i] = v;
        Ok(())
    }

    fn range(&mut self, lo: i64, hi: i64, v: i64) -> Result<()> {
        (lo..hi).try_for_each(|w| self.put(w, v))
    }
}

/// The ϑ of a family, indexed by weights in the presentation 1/r(1,a,b).
pub fn vartheta_catalog<T: Scalar>(family: &VarthetaFamily) -> Result<ThetaOf<T>> {
    let r = family.order();
    if r < 2 {
        return Err(Error::InvalidTheta(format!("{family} has order {r}")));
    }
    let mut b_ = Builder::new(r);
    match *family {
        VarthetaFamily::Case1 { a, b, c } => {
            if a < 1 || b < 1 || c < 1 || num::integer::gcd(a, b) != 1 {
                return Err(Error::InvalidTheta(format!("{family} needs positive parameters with gcd(a,b) = 1")));
            }
            // 1/r(1,a,b) and 1/r(1,b,a) are the same group; the formula wants the larger weight last.
            let (a, b) = (a.min(b), a.max(b));
            if a * c == 1 {
                return Err(Error::Unsupported(format!("{family}: the pieces at a+b and r−b−1 overlap when a = c = 1")));
            }
            b_.range(0, b, -1)?;
            b_.put(a + b, -1)?;
            b_.range(r - b - 1, r, 1)?;
        }
        VarthetaFamily::Case2a { a, k, c } => {
            if k < 1 || c < 2 {
                return Err(Error::InvalidTheta(format!("{family} needs k ≥ 1 and c ≥ 2")));
            }
            if a < 4 {
                return Err(Error::Unsupported(format!("{family}: no catalog ϑ for a < 4")));
            }
            let b = a * k + 1;
            b_.range(0, b, -1)?;
            b_.put(2 * a * b - 5 * b + 3, -1)?;
            b_.put(r - a - b + 2, 1)?;
            b_.range(r - b, r, 1)?;
        }
        VarthetaFamily::Case2b { a, k } => {
            if k < 1 {
                return Err(Error::InvalidTheta(format!("{family} needs k ≥ 1")));
            }
            if a < 6 {
                return Err(Error::Unsupported(format!("{family}: no catalog ϑ for a < 6")));
            }
            let b = a * k + 1;
            b_.range(0, b, -1)?;
            b_.put(a * b - 5 * b + 3, -1)?;
            b_.put(r - a - b + 2, 1)?;
            b_.range(r - b, r, 1)?;
        }
        VarthetaFamily::Custom { ref pieces, .. } => {
            for &(lo, hi, v) in pieces {
                if lo >= hi {
                    return Err(Error::InvalidTheta(format!("empty piece {lo}..{hi}")));
                }
                b_.range(lo, hi, v)?;
            }
        }
    }
    let theta = ThetaOf::from_ints(&b_.values)?;
    if theta.is_zero() {
        return Err(Error::InvalidTheta("ϑ must be nonzero".into()));
    }
    Ok(theta)
}

/// Outcome of the three ϑ-properties for one round-down context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextProperties<T> {
    pub axis: usize,
    pub a_k: i64,
    /// First residue class mod a_k with nonzero sum.
    pub residue_witness: Option<(usize, T)>,
    /// First weight below a_k (center presentation) where ϑ is not negative.
    pub low_witness: Option<(usize, T)>,
    /// First weight i ≥ a_k whose x_k-fibre set has ϑ ≤ 0.
    pub fibre_witness: Option<(usize, T)>,
}

impl<T> ContextProperties<T> {
    pub fn residues_vanish(&self) -> bool {
        self.residue_witness.is_none()
    }

    pub fn negative_below_a_k(&self) -> bool {
        self.low_witness.is_none()
    }

    pub fn fibres_positive(&self) -> bool {
        self.fibre_witness.is_none()
    }

    pub fn all(&self) -> bool {
        self.residues_vanish() && self.negative_below_a_k() && self.fibres_positive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarthetaProperties<T> {
    pub contexts: Vec<ContextProperties<T>>,
}

impl<T> VarthetaProperties<T> {
    pub fn all(&self) -> bool {
        self.contexts.iter().all(|c| c.all())
    }
}

/// ϑ re-indexed by the center's presentation.
fn in_center_presentation<T: Scalar>(ctx: &RoundDownContext, theta: &ThetaOf<T>) -> Vec<T> {
    let mut out = vec![T::zero(); theta.len()];
    for (i, v) in theta.values().iter().enumerate() {
        out[ctx.center_weight(i)] = v.clone();
    }
    out
}

pub fn check_context<T: Scalar>(ctx: &RoundDownContext, theta: &ThetaOf<T>) -> ContextProperties<T> {
    let ak = ctx.a_k() as usize;
    let push = pushforward(ctx, theta);
    let residue_witness = push.values().iter().enumerate().find(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone()));
    let c = in_center_presentation(ctx, theta);
    let r = c.len();
    let low_witness = (0..ak.min(r)).find(|&j| !c[j].is_negative()).map(|j| (j, c[j].clone()));
    // The x_k-fibre of a weight-i monomial has weights i, i + a_k, … below r.
    let mut tail = vec![T::zero(); r + ak];
    for i in (0..r).rev() {
        tail[i] = c[i].clone() + tail[i + ak].clone();
    }
    let fibre_witness = (ak..r).find(|&i| !tail[i].is_positive()).map(|i| (i, tail[i].clone()));
    ContextProperties { axis: ctx.axis(), a_k: ctx.a_k(), residue_witness, low_witness, fibre_witness }
}

pub fn check_vartheta_properties<T: Scalar>(ctxs: &[RoundDownContext], theta: &ThetaOf<T>) -> VarthetaProperties<T> {
    VarthetaProperties { contexts: ctxs.iter().map(|c| check_context(c, theta)).collect() }
}

/// Extra ±1 units tried on top of the base template.
pub const TEMPLATE_MAX_EXTRA: usize = 2;

/// Searches ϑ of the form −1 on [0,A), +1 on [r−A,r) plus up to two extra −1 and two extra +1 units.
///
/// A is the largest a_k; all contexts must share one center. The first hit in order of
/// extra count, then lexicographic positions, is returned.
pub fn search_vartheta<T: Scalar>(ctxs: &[RoundDownContext]) -> Result<Option<ThetaOf<T>>> {
    let first = ctxs.first().ok_or_else(|| Error::InvalidTheta("no contexts".into()))?;
    if ctxs.iter().any(|c| c.center() != first.center() || c.parent() != first.parent()) {
        return Err(Error::Mismatch("contexts have different centers".into()));
    }
    let r = first.parent().order() as usize;
    let big_a = ctxs.iter().map(|c| c.a_k() as usize).max().unwrap_or(1);
    if 2 * big_a > r {
        return Ok(None);
    }
    let mut base = vec![0i64; r];
    base[..big_a].fill(-1);
    base[r - big_a..].fill(1);
    for extra in 0..=TEMPLATE_MAX_EXTRA {
        let placements = multisets(r, extra);
        for neg in &placements {
            for pos in &placements {
                let mut v = base.clone();
                neg.iter().for_each(|&i| v[i] -= 1);
                pos.iter().for_each(|&i| v[i] += 1);
                let values: Vec<T> = (0..r).map(|i| T::from_int(v[first.center_weight(i)])).collect();
                let theta = ThetaOf::new(values)?;
                if check_vartheta_properties(ctxs, &theta).all() {
                    return Ok(Some(theta));
                }
            }
        }
    }
    Ok(None)
}

/// Nondecreasing index sequences of length k in 0..n.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}
