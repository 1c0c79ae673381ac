use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::lattice::RoundDownContext;
use crate::scalar::{format_ratio, Scalar};

/// A stability parameter: one value per character, summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaOf<T> {
    values: Vec<T>,
}

impl<T: Scalar> ThetaOf<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidTheta("empty vector".into()));
        }
        let s = values.iter().fold(T::zero(), |a, b| a + b.clone());
        if !s.is_zero() {
            return Err(Error::InvalidTheta(format!("values sum to {}, not 0", format_ratio(&s))));
        }
        Ok(ThetaOf { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        ThetaOf::new(values.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn zero(r: usize) -> Self {
        ThetaOf { values: vec![T::zero(); r] }
    }

    /// θ_i: +1 at ρ_i and −1 at ρ₀.
    pub fn basis(r: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= r {
            return Err(Error::InvalidTheta(format!("basis index {i} must lie in 1..{r}")));
        }
        let mut v = vec![T::zero(); r];
        v[0] = -T::one();
        v[i] = T::one();
        Ok(ThetaOf { values: v })
    }

    /// The G-Hilb chamber representative: 1 off the trivial character, −(r−1) on it.
    pub fn plus(r: usize) -> Self {
        let mut v = vec![T::one(); r];
        v[0] = T::from_int(1 - r as i64);
        ThetaOf { values: v }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, i: usize) -> &T {
        &self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn eval<I: IntoIterator<Item = usize>>(&self, weights: I) -> T {
        weights.into_iter().fold(T::zero(), |a, w| a + self.values[w].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        ThetaOf { values: self.values.iter().map(|v| v.clone() * c.clone()).collect() }
    }

    /// θ_P + m·ϑ.
    pub fn combine(&self, m: &T, other: &Self) -> Self {
        self.clone() + other.scale(m)
    }

    /// Reads a vector indexed by the center's presentation, (t·i) mod r, back into weights.
    pub fn from_center_presentation(ctx: &RoundDownContext, values: &[T]) -> Result<Self> {
        let r = ctx.parent().order() as usize;
        if values.len() != r {
            return Err(Error::InvalidTheta(format!("expected {r} values, got {}", values.len())));
        }
        ThetaOf::new((0..r).map(|i| values[ctx.center_weight(i)].clone()).collect())
    }

    pub fn convert<U: Scalar>(&self) -> Option<ThetaOf<U>> {
        let values = self.values.iter().map(|v| U::from_big_ratio(&v.to_big_ratio())).collect::<Option<Vec<U>>>()?;
        Some(ThetaOf { values })
    }
}

impl<T: Scalar> Add for ThetaOf<T> {
    type Output = ThetaOf<T>;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.len(), o.len(), "theta vectors of different lengths");
        ThetaOf { values: self.values.into_iter().zip(o.values).map(|(a, b)| a + b).collect() }
    }
}

impl<T: Scalar> Mul<T> for ThetaOf<T> {
    type Output = ThetaOf<T>;
    fn mul(self, c: T) -> Self {
        self.scale(&c)
    }
}

impl<T: Scalar> fmt::Display for ThetaOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(format_ratio).collect();
        write!(f, "({})", s.join(","))
    }
}

/// [(φ_k)⋆θ](χ_j) = Σ over i with φ_k(ρ_i) = χ_j of θ(ρ_i).
pub fn pushforward<T: Scalar>(ctx: &RoundDownContext, theta: &ThetaOf<T>) -> ThetaOf<T> {
    let ak = ctx.a_k() as usize;
    let mut out = vec![T::zero(); ak];
    for (i, v) in theta.values().iter().enumerate() {
        let j = ctx.induced_character(i);
        out[j] = out[j].clone() + v.clone();
    }
    ThetaOf { values: out }
}

/// A value p + q·m, affine in the multiplier m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineValue<T> {
    pub constant: T,
    pub slope: T,
}

impl<T: Scalar> AffineValue<T> {
    pub fn at(&self, m: &T) -> T {
        self.constant.clone() + self.slope.clone() * m.clone()
    }
}

impl<T: Scalar> fmt::Display for AffineValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}m", format_ratio(&self.constant), format_ratio(&self.slope))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{GroupType, LatticePoint};
    use crate::Q64;

    #[test]
    fn basis_vectors() {
        let t: ThetaOf<Q64> = ThetaOf::basis(20, 5).unwrap();
        assert_eq!(t.get(5), &Q64::from_int(1));
        assert_eq!(t.get(0), &Q64::from_int(-1));
        assert!(ThetaOf::<Q64>::basis(20, 0).is_err());
        let total = (1..20).map(|i| ThetaOf::<Q64>::basis(20, i).unwrap()).fold(ThetaOf::zero(20), |a, b| a + b);
        assert_eq!(total.get(0), &Q64::from_int(-19));
        assert!(ThetaOf::<Q64>::from_ints(&[1, 1]).is_err());
    }

    #[test]
    fn plus_vectors() {
        assert_eq!(ThetaOf::<Q64>::plus(3), ThetaOf::from_ints(&[-2, 1, 1]).unwrap());
        assert_eq!(ThetaOf::<Q64>::plus(4), ThetaOf::from_ints(&[-3, 1, 1, 1]).unwrap());
    }

    #[test]
    fn example_pushforwards() {
        let g = GroupType::new(20, [1, 3, 4]).unwrap();
        let v = LatticePoint([1, 3, 4]);
        let mut tp = vec![0i64; 20];
        tp[0] = -3;
        tp[5] = 1;
        tp[6] = 1;
        tp[7] = 1;
        let tp: ThetaOf<Q64> = ThetaOf::from_ints(&tp).unwrap();
        let c2 = RoundDownContext::new(&g, &v, 1).unwrap();
        let c3 = RoundDownContext::new(&g, &v, 2).unwrap();
        assert_eq!(pushforward(&c2, &tp), ThetaOf::from_ints(&[-2, 1, 1]).unwrap());
        assert_eq!(pushforward(&c3, &tp), ThetaOf::from_ints(&[-3, 1, 1, 1]).unwrap());
        assert!(pushforward(&c2, &ThetaOf::<Q64>::zero(20)).is_zero());
    }
}
