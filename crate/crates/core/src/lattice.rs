//! Cyclic groups of type 1/r(α₁,α₂,α₃), their lattices, weights and round-down maps.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num::integer::gcd;
use num::rational::Ratio;
use num::{BigRational, Integer, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A diagonal cyclic subgroup of GL₃ of type 1/r(α₁,α₂,α₃).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType {
    r: i64,
    weights: [i64; 3],
}

/// A Laurent monomial x^a y^b z^c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [i64; 3]);

/// A point of L stored as numerators over the group order r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub [i64; 3]);

/// Result of testing a rational point against L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub point: Option<LatticePoint>,
    pub class: Option<i64>,
    pub primitive: bool,
}

impl Membership {
    pub fn in_lattice(&self) -> bool {
        self.class.is_some()
    }
}

impl GroupType {
    pub fn new(r: i64, weights: [i64; 3]) -> Result<Self> {
        if r < 1 {
            return Err(Error::NonPositiveOrder(r));
        }
        let weights = weights.map(|a| a.rem_euclid(r));
        let g = weights.iter().fold(r, |acc, &a| gcd(acc, a));
        if g > 1 {
            return Err(Error::NotFaithful { effective: r / g });
        }
        Ok(GroupType { r, weights })
    }

    pub fn trivial() -> Self {
        GroupType { r: 1, weights: [0, 0, 0] }
    }

    pub fn order(&self) -> i64 {
        self.r
    }

    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    pub fn is_trivial(&self) -> bool {
        self.r == 1
    }

    pub fn weight_of(&self, m: &Monomial) -> usize {
        let s: i128 = (0..3).map(|i| self.weights[i] as i128 * m.0[i] as i128).sum();
        s.rem_euclid(self.r as i128) as usize
    }

    pub fn is_invariant(&self, m: &Monomial) -> bool {
        self.weight_of(m) == 0
    }

    pub fn axis(&self, i: usize) -> LatticePoint {
        let mut n = [0; 3];
        n[i] = self.r;
        LatticePoint(n)
    }

    pub fn axes(&self) -> [LatticePoint; 3] {
        [self.axis(0), self.axis(1), self.axis(2)]
    }

    /// The representative (1/r)(tα mod r) of class t.
    pub fn point(&self, t: i64) -> LatticePoint {
        LatticePoint(self.weights.map(|a| (t * a).rem_euclid(self.r)))
    }

    /// The class t ∈ [0, r) with n ≡ tα (mod r), if n ∈ L.
    pub fn class_of(&self, p: &LatticePoint) -> Option<i64> {
        let r = self.r;
        let fits = |t: i64| (0..3).all(|i| (p.0[i] - t * self.weights[i]).rem_euclid(r) == 0);
        for i in 0..3 {
            let e = num::integer::Integer::extended_gcd(&self.weights[i], &r);
            if e.gcd == 1 {
                let t = (p.0[i] * e.x).rem_euclid(r);
                return fits(t).then_some(t);
            }
        }
        (0..r).find(|&t| fits(t))
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.class_of(p).is_some()
    }

    pub fn is_primitive(&self, p: &LatticePoint) -> bool {
        if p.0 == [0, 0, 0] || !self.contains(p) {
            return false;
        }
        let g = p.0.iter().fold(0i64, |acc, &x| gcd(acc, x));
        (2..=g).filter(|d| g % d == 0).all(|d| !self.contains(&LatticePoint(p.0.map(|x| x / d))))
    }

    /// Tests an exact rational triple for membership in L.
    pub fn member(&self, p: &[BigRational; 3]) -> Membership {
        let r = BigRational::from_integer(self.r.into());
        let mut n = [0i64; 3];
        for i in 0..3 {
            let x = &p[i] * &r;
            if !x.is_integer() {
                return Membership { point: None, class: None, primitive: false };
            }
            match x.to_integer().to_i64() {
                Some(v) => n[i] = v,
                None => return Membership { point: None, class: None, primitive: false },
            }
        }
        let lp = LatticePoint(n);
        let class = self.class_of(&lp);
        let primitive = class.is_some() && self.is_primitive(&lp);
        Membership { point: Some(lp), class, primitive }
    }

    /// One genuine monomial of each weight, found in order of total degree.
    pub fn weight_representatives(&self) -> Vec<Monomial> {
        let r = self.r as usize;
        let mut reps: Vec<Option<Monomial>> = vec![None; r];
        let mut found = 0;
        let mut queue = VecDeque::from([Monomial::one()]);
        let mut seen = std::collections::HashSet::from([Monomial::one()]);
        while let Some(m) = queue.pop_front() {
            let w = self.weight_of(&m);
            if reps[w].is_none() {
                reps[w] = Some(m);
                found += 1;
                if found == r {
                    break;
                }
            }
            for i in 0..3 {
                let n = m * Monomial::var(i);
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        reps.into_iter().map(|m| m.expect("faithful group reaches every weight")).collect()
    }

    /// Age of a point, (n₁+n₂+n₃)/r.
    pub fn age(&self, p: &LatticePoint) -> Ratio<i64> {
        Ratio::new(p.0.iter().sum(), self.r)
    }

    /// Nonzero class representatives (1/r)(tα mod r) with their age.
    pub fn box_points(&self) -> Vec<(i64, LatticePoint, Ratio<i64>)> {
        (1..self.r)
            .map(|t| {
                let p = self.point(t);
                (t, p, self.age(&p))
            })
            .collect()
    }

    /// Box points of age one.
    pub fn junior_points(&self) -> Vec<(i64, LatticePoint)> {
        self.box_points()
            .into_iter()
            .filter(|(_, _, age)| age.is_one())
            .map(|(t, p, _)| (t, p))
            .collect()
    }

    pub fn fmt_point(&self, p: &LatticePoint) -> String {
        p.display_over(self.r)
    }

    /// The same group with coordinates permuted: new slot i is old slot perm[i].
    pub fn permuted(&self, perm: [usize; 3]) -> GroupType {
        GroupType { r: self.r, weights: perm.map(|i| self.weights[i]) }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "1/{}({},{},{})", self.r, a, b, c)
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a type like 1/20(1,3,4), got {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s.strip_prefix("1/").ok_or_else(bad)?;
        let (r, tail) = rest.split_once('(').ok_or_else(bad)?;
        let inner = tail.strip_suffix(')').ok_or_else(bad)?;
        let r: i64 = r.parse().map_err(|_| bad())?;
        let ws: Vec<i64> = inner
            .split(',')
            .map(|x| x.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let ws: [i64; 3] = ws.try_into().map_err(|_| bad())?;
        GroupType::new(r, ws)
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial([0, 0, 0])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Monomial([a, b, c])
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn is_genuine(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.map(|e| -e))
    }

    pub fn pow(&self, k: i64) -> Self {
        Monomial(self.0.map(|e| e * k))
    }

    /// True when other/self is a genuine monomial.
    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: [&str; 3]) -> String {
        let parts: Vec<String> = (0..3)
            .filter(|&i| self.0[i] != 0)
            .map(|i| match self.0[i] {
                1 => names[i].to_string(),
                e => format!("{}^{}", names[i], e),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, o: Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, o: Monomial) -> Monomial {
        Monomial([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["x", "y", "z"]))
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses products like `x^2*y^-1*z`, or `1`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut e = [0i64; 3];
        for part in s.split('*') {
            let (v, k) = match part.split_once('^') {
                Some((v, k)) => (v, k.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?),
                None => (part, 1),
            };
            let i = match v {
                "x" => 0,
                "y" => 1,
                "z" => 2,
                _ => return Err(Error::Parse(format!("unknown variable {v:?}"))),
            };
            e[i] += k;
        }
        Ok(Monomial(e))
    }
}

impl LatticePoint {
    /// The integer pairing n·m; the lattice pairing is this divided by r.
    pub fn pair(&self, m: &Monomial) -> i64 {
        (0..3).map(|i| self.0[i] * m.0[i]).sum()
    }

    pub fn display_over(&self, r: i64) -> String {
        let [a, b, c] = self.0;
        if r == 1 {
            format!("({a},{b},{c})")
        } else {
            format!("({a},{b},{c})/{r}")
        }
    }

    pub fn numerator_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Round-down data for one cone σ_k of the star subdivision at a center v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundDownContext {
    parent: GroupType,
    center: LatticePoint,
    axis: usize,
    class: i64,
    subgroup: GroupType,
}

impl RoundDownContext {
    /// `axis` is zero-based.
    pub fn new(parent: &GroupType, center: &LatticePoint, axis: usize) -> Result<Self> {
        let r = parent.order();
        let label = parent.fmt_point(center);
        if axis > 2 {
            return Err(Error::InvalidCenter(format!("axis {axis} out of range")));
        }
        let class = parent.class_of(center).ok_or_else(|| Error::NotInLattice(label.clone()))?;
        if gcd(class, r) != 1 {
            return Err(Error::NotGenerating(label));
        }
        if center.0.iter().any(|&a| a < 0) {
            return Err(Error::InvalidCenter(format!("{label} lies outside the positive octant")));
        }
        let ak = center.0[axis];
        if ak < 1 {
            return Err(Error::InvalidCenter(format!("{label} has zero numerator on axis {}", axis + 1)));
        }
        let mut sub = center.0;
        sub[axis] = -r;
        let subgroup = GroupType::new(ak, sub)?;
        let ctx = RoundDownContext { parent: *parent, center: *center, axis, class, subgroup };
        ctx.self_check()?;
        Ok(ctx)
    }

    fn self_check(&self) -> Result<()> {
        for (i, m) in self.parent.weight_representatives().iter().enumerate() {
            let got = self.subgroup.weight_of(&self.round_down(m));
            let want = self.induced_character(i);
            if got != want {
                return Err(Error::CharacterMismatch(format!(
                    "weight {i} via {m}: round-down has weight {got}, character map gives {want}"
                )));
            }
            for j in 0..3 {
                let n = *m * Monomial::var(j);
                if self.subgroup.weight_of(&self.round_down(&n)) != self.induced_character(self.parent.weight_of(&n)) {
                    return Err(Error::CharacterMismatch(format!("weight of {n}")));
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &GroupType {
        &self.parent
    }

    pub fn center(&self) -> &LatticePoint {
        &self.center
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    /// The class t of the center, so that the center is (1/r)(tα mod r).
    pub fn class(&self) -> i64 {
        self.class
    }

    pub fn subgroup(&self) -> &GroupType {
        &self.subgroup
    }

    pub fn a_k(&self) -> i64 {
        self.center.0[self.axis]
    }

    pub fn round_down(&self, m: &Monomial) -> Monomial {
        let s: i64 = self.center.pair(m);
        let mut out = m.0;
        out[self.axis] = s.div_euclid(self.parent.order());
        Monomial(out)
    }

    /// Exact ξ-coordinates of m, defined when m pairs integrally with the center.
    pub fn to_eigen(&self, m: &Monomial) -> Option<Monomial> {
        let s = self.center.pair(m);
        if s.rem_euclid(self.parent.order()) != 0 {
            return None;
        }
        Some(self.round_down(m))
    }

    /// Position of weight i in the center's own presentation, (t·i) mod r.
    pub fn center_weight(&self, i: usize) -> usize {
        (self.class * i as i64).rem_euclid(self.parent.order()) as usize
    }

    pub fn induced_character(&self, i: usize) -> usize {
        (self.center_weight(i) as i64).rem_euclid(self.a_k()) as usize
    }

    /// ξ_j = x_j·x_k^(−a_j/a_k) for j ≠ k and ξ_k = x_k^(r/a_k), as rational exponent vectors.
    pub fn eigenbasis(&self) -> [[Ratio<i64>; 3]; 3] {
        let k = self.axis;
        let ak = self.a_k();
        let mut basis = [[Ratio::zero(); 3]; 3];
        for (j, row) in basis.iter_mut().enumerate() {
            if j == k {
                row[k] = Ratio::new(self.parent.order(), ak);
            } else {
                row[j] = Ratio::one();
                row[k] = Ratio::new(-self.center.0[j], ak);
            }
        }
        basis
    }

    /// Converts a point of L lying in σ_k's span to numerators over a_k in the G_k frame.
    pub fn to_sub_point(&self, p: &LatticePoint) -> Option<LatticePoint> {
        let (k, r, ak) = (self.axis, self.parent.order(), self.a_k());
        let mut out = [0i64; 3];
        for j in 0..3 {
            if j == k {
                out[j] = p.0[k];
            } else {
                let num = ak * p.0[j] - self.center.0[j] * p.0[k];
                if num.rem_euclid(r) != 0 {
                    return None;
                }
                out[j] = num / r;
            }
        }
        Some(LatticePoint(out))
    }

    /// Inverse of `to_sub_point`.
    pub fn from_sub_point(&self, q: &LatticePoint) -> Option<LatticePoint> {
        let (k, r, ak) = (self.axis, self.parent.order(), self.a_k());
        let mut out = [0i64; 3];
        for j in 0..3 {
            if j == k {
                out[j] = q.0[k];
            } else {
                let num = r * q.0[j] + self.center.0[j] * q.0[k];
                if num.rem_euclid(ak) != 0 {
                    return None;
                }
                out[j] = num / ak;
            }
        }
        Some(LatticePoint(out))
    }

    /// Rays of σ_k: the axes with e_k replaced by the center.
    pub fn sub_cone_rays(&self) -> [LatticePoint; 3] {
        let mut rays = self.parent.axes();
        rays[self.axis] = self.center;
        rays
    }

    /// Weight classes of G grouped by their image character.
    pub fn fibers(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.parent.order() as usize {
            out.entry(self.induced_character(i)).or_default().push(i);
        }
        out
    }
}

/// Outcome of the goodness test for a star subdivision center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Goodness {
    pub good: bool,
    pub violations: Vec<String>,
}

pub fn is_good_subdivision(g: &GroupType, v: &LatticePoint) -> Goodness {
    let mut violations = Vec::new();
    let r = g.order();
    match g.class_of(v) {
        None => violations.push(format!("{} is not in L", g.fmt_point(v))),
        Some(t) if gcd(t, r) != 1 => {
            violations.push(format!("class {t} is not a unit mod {r}, so the center does not generate L/Z^3"))
        }
        _ => {}
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let s = v.0[i] + v.0[j];
            if s > r {
                violations.push(format!("a{} + a{} = {s} > {r}", i + 1, j + 1));
            }
        }
    }
    Goodness { good: violations.is_empty(), violations }
}

/// Greatest common divisor of an integer triple.
pub fn content(v: &[i64; 3]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g20() -> GroupType {
        GroupType::new(20, [1, 3, 4]).unwrap()
    }

    #[test]
    fn group_construction() {
        assert_eq!(g20().to_string(), "1/20(1,3,4)");
        assert!(GroupType::new(1, [0, 0, 0]).unwrap().is_trivial());
        assert_eq!(GroupType::new(6, [2, 4, 2]), Err(Error::NotFaithful { effective: 3 }));
        assert_eq!(GroupType::new(5, [6, -1, 0]).unwrap().weights(), [1, 4, 0]);
        assert_eq!("1/39(1,5,11)".parse::<GroupType>().unwrap(), GroupType::new(39, [1, 5, 11]).unwrap());
        assert!("1/39(1,5)".parse::<GroupType>().is_err());
    }

    #[test]
    fn weights() {
        let g = g20();
        assert_eq!(g.weight_of(&Monomial::new(0, 1, 2)), 11);
        assert_eq!(g.weight_of(&Monomial::one()), 0);
        assert_eq!(g.weight_of(&Monomial::new(0, 3, -2)), 1);
        let reps = g.weight_representatives();
        assert_eq!(reps.len(), 20);
        for (i, m) in reps.iter().enumerate() {
            assert_eq!(g.weight_of(m), i);
            assert!(m.is_genuine());
        }
    }

    #[test]
    fn membership() {
        let g = g20();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let m = g.member(&[q(7, 20), q(1, 20), q(8, 20)]);
        assert_eq!(m.class, Some(7));
        assert!(m.primitive);
        let m = g.member(&[q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(m.class, Some(0));
        assert!(m.primitive);
        assert!(!g.member(&[q(1, 3), q(0, 1), q(0, 1)]).in_lattice());
        assert!(!g.is_primitive(&LatticePoint([2, 6, 8])));
        let h = GroupType::new(39, [1, 5, 11]).unwrap();
        let m = h.member(&[q(8, 39), q(1, 39), q(10, 39)]);
        assert_eq!(m.class, Some(8));
        assert!(m.primitive);
    }

    #[test]
    fn contexts_of_the_examples() {
        let g = g20();
        let v = LatticePoint([1, 3, 4]);
        let c2 = RoundDownContext::new(&g, &v, 1).unwrap();
        assert_eq!(c2.subgroup().to_string(), "1/3(1,1,1)");
        let c3 = RoundDownContext::new(&g, &v, 2).unwrap();
        assert_eq!(c3.subgroup().to_string(), "1/4(1,3,0)");
        let c1 = RoundDownContext::new(&g, &v, 0).unwrap();
        assert!(c1.subgroup().is_trivial());
        let h = GroupType::new(39, [1, 5, 11]).unwrap();
        let u = LatticePoint([4, 20, 5]);
        assert_eq!(RoundDownContext::new(&h, &u, 0).unwrap().subgroup().to_string(), "1/4(1,0,1)");
        assert_eq!(RoundDownContext::new(&h, &u, 1).unwrap().subgroup().to_string(), "1/20(4,1,5)");
        assert_eq!(RoundDownContext::new(&h, &u, 2).unwrap().subgroup().to_string(), "1/5(4,0,1)");
        assert!(matches!(RoundDownContext::new(&g, &LatticePoint([2, 6, 8]), 1), Err(Error::NotGenerating(_))));
    }

    #[test]
    fn round_down_examples() {
        let g = g20();
        let v = LatticePoint([1, 3, 4]);
        let c2 = RoundDownContext::new(&g, &v, 1).unwrap();
        let c3 = RoundDownContext::new(&g, &v, 2).unwrap();
        assert_eq!(c2.round_down(&Monomial::new(0, 3, 2)), Monomial::new(0, 0, 2));
        assert_eq!(c2.round_down(&Monomial::one()), Monomial::one());
        assert_eq!(c3.round_down(&Monomial::new(0, 3, -2)), Monomial::new(0, 3, 0));
        assert_eq!(c3.round_down(&Monomial::new(0, 0, -1)), Monomial::new(0, 0, -1));
        assert_eq!(c2.induced_character(7), 1);
        assert_eq!(c2.induced_character(0), 0);
        assert_eq!(c3.induced_character(19), 3);
    }

    #[test]
    fn eigen_frame() {
        let g = g20();
        let v = LatticePoint([1, 3, 4]);
        let c2 = RoundDownContext::new(&g, &v, 1).unwrap();
        assert_eq!(c2.to_sub_point(&LatticePoint([7, 1, 8])), Some(LatticePoint([1, 1, 1])));
        assert_eq!(c2.to_sub_point(&v), Some(LatticePoint([0, 3, 0])));
        assert_eq!(c2.to_sub_point(&g.axis(0)), Some(LatticePoint([3, 0, 0])));
        let c3 = RoundDownContext::new(&g, &v, 2).unwrap();
        assert_eq!(c3.to_sub_point(&LatticePoint([15, 5, 0])), Some(LatticePoint([3, 1, 0])));
        assert_eq!(c3.from_sub_point(&LatticePoint([3, 1, 0])), Some(LatticePoint([15, 5, 0])));
        let basis = c3.eigenbasis();
        assert_eq!(basis[2], [Ratio::zero(), Ratio::zero(), Ratio::new(5, 1)]);
        assert_eq!(basis[0], [Ratio::one(), Ratio::zero(), Ratio::new(-1, 4)]);
    }

    #[test]
    fn goodness() {
        assert!(is_good_subdivision(&g20(), &LatticePoint([1, 3, 4])).good);
        let g2 = GroupType::new(2, [1, 1, 1]).unwrap();
        assert!(is_good_subdivision(&g2, &LatticePoint([1, 1, 1])).good);
        let h = GroupType::new(39, [1, 5, 11]).unwrap();
        assert!(is_good_subdivision(&h, &LatticePoint([4, 20, 5])).good);
        assert!(is_good_subdivision(&h, &LatticePoint([25, 8, 2])).good);
        let g = GroupType::new(7, [1, 2, 4]).unwrap();
        let v = g.point(6);
        let rep = is_good_subdivision(&g, &v);
        assert!(!rep.good, "{:?}", rep);
    }

    #[test]
    fn monomial_text() {
        let m: Monomial = "x^2*y^-1*z".parse().unwrap();
        assert_eq!(m, Monomial::new(2, -1, 1));
        assert_eq!(m.to_string(), "x^2*y^-1*z");
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::one());
    }
}
