//! Support monomials, Reid's terminal and canonical criteria, discrepancies and nefness.

use std::collections::BTreeMap;

use num::rational::Ratio;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::geom::{coordinates, cross, dot, Q128};
use crate::lattice::{GroupType, LatticePoint, Monomial};

/// The rational m ∈ M_Q pairing to 1 with every ray of a cone, as exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportMonomial(pub [Q128; 3]);

impl SupportMonomial {
    /// ⟨p, m⟩ for p given by numerators over r.
    pub fn pair(&self, r: i64, p: &LatticePoint) -> Q128 {
        let s: Q128 = (0..3).map(|i| self.0[i] * Q128::from(p.0[i] as i128)).fold(Q128::zero(), |a, b| a + b);
        s / Q128::from(r as i128)
    }

    pub fn integral(&self) -> Option<Monomial> {
        if self.0.iter().all(|q| q.is_integer()) {
            Some(Monomial(self.0.map(|q| q.to_integer() as i64)))
        } else {
            None
        }
    }
}

pub fn support_monomial(g: &GroupType, c: &Cone) -> Option<SupportMonomial> {
    let r = g.order() as i128;
    let rays = c.rays();
    let (a, b, d) = (&rays[0].0, &rays[1].0, &rays[2].0);
    let det = crate::geom::det(a, b, d);
    if det == 0 {
        return None;
    }
    // Solve N·m = r·(1,1,1), N having the rays as rows: m = r·(b×d + d×a + a×b)/det.
    let (x, y, z) = (cross(b, d), cross(d, a), cross(a, b));
    let m = SupportMonomial([0, 1, 2].map(|i| Q128::new(r * (x[i] + y[i] + z[i]), det)));
    if rays.iter().all(|u| m.pair(g.order(), u) == Q128::one()) {
        Some(m)
    } else {
        None
    }
}

/// Classification of a simplicial cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeClass {
    pub smooth: bool,
    pub terminal: bool,
    pub canonical: bool,
    pub gorenstein: bool,
    pub support: SupportMonomial,
    /// Lattice points other than 0 and the rays found at level ≤ 1.
    pub witnesses: Vec<(LatticePoint, Q128)>,
}

impl ConeClass {
    pub fn label(&self) -> &'static str {
        if self.smooth {
            "smooth"
        } else if self.terminal {
            "terminal"
        } else if self.canonical {
            "canonical"
        } else {
            "none"
        }
    }
}

/// Points of L in {Σλᵢuᵢ : λ ≥ 0, Σλᵢ ≤ 1} other than 0 and the rays, with Σλᵢ.
pub fn low_points(g: &GroupType, c: &Cone) -> Result<Vec<(LatticePoint, Q128)>> {
    if !c.is_simplicial() {
        return Err(Error::InvalidCone("criterion needs a simplicial cone".into()));
    }
    let rays = c.rays();
    let mut lo = [0i64; 3];
    let mut hi = [0i64; 3];
    for u in rays {
        for i in 0..3 {
            lo[i] = lo[i].min(u.0[i]);
            hi[i] = hi[i].max(u.0[i]);
        }
    }
    let mut out = Vec::new();
    let zero = Q128::zero();
    let one = Q128::one();
    for a in lo[0]..=hi[0] {
        for b in lo[1]..=hi[1] {
            for d in lo[2]..=hi[2] {
                let p = LatticePoint([a, b, d]);
                if p.0 == [0, 0, 0] || rays.contains(&p) || !g.contains(&p) {
                    continue;
                }
                let lam = coordinates(&rays[0].0, &rays[1].0, &rays[2].0, &p.0).ok_or(Error::NotFullDimensional)?;
                let s = lam[0] + lam[1] + lam[2];
                if lam.iter().all(|l| *l >= zero) && s <= one {
                    out.push((p, s));
                }
            }
        }
    }
    Ok(out)
}

pub fn is_smooth(g: &GroupType, c: &Cone) -> bool {
    let rays = c.rays();
    let r = g.order() as i128;
    c.is_simplicial() && crate::geom::det(&rays[0].0, &rays[1].0, &rays[2].0).abs() == r * r
}

pub fn classify_cone(g: &GroupType, c: &Cone) -> Result<ConeClass> {
    if !c.is_simplicial() {
        return Err(Error::InvalidCone("classification needs a simplicial cone".into()));
    }
    let support = support_monomial(g, c).ok_or_else(|| Error::InvalidCone("criterion inapplicable".into()))?;
    let witnesses = low_points(g, c)?;
    let terminal = witnesses.is_empty();
    let canonical = witnesses.iter().all(|(_, s)| *s >= Q128::one());
    let gorenstein = support.integral().map(|m| g.is_invariant(&m)).unwrap_or(false);
    Ok(ConeClass { smooth: is_smooth(g, c), terminal, canonical, gorenstein, support, witnesses })
}

/// ⟨u, x₁x₂x₃⟩ − 1 for every ray off the coordinate axes.
pub fn discrepancies(g: &GroupType, fan: &Fan) -> BTreeMap<LatticePoint, Ratio<i64>> {
    let axes = g.axes();
    fan.rays()
        .iter()
        .filter(|p| !axes.contains(p))
        .map(|p| (*p, Ratio::new(p.numerator_sum() - g.order(), g.order())))
        .collect()
}

/// Result of the relative nefness test for K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefReport {
    pub nef: bool,
    /// First violation: cone index, ray, and the pairing value below one.
    pub violation: Option<(usize, LatticePoint, Q128)>,
}

/// Support monomial of a cone with any number of coplanar rays.
pub fn cone_support(g: &GroupType, c: &Cone) -> Option<SupportMonomial> {
    let t = c.triangulate();
    let m = support_monomial(g, &Cone::new(t[0].to_vec()).ok()?)?;
    c.rays().iter().all(|u| m.pair(g.order(), u) == Q128::one()).then_some(m)
}

pub fn is_relatively_nef_k(g: &GroupType, fan: &Fan) -> Result<NefReport> {
    for (i, c) in fan.cones().iter().enumerate() {
        let m = cone_support(g, c).ok_or_else(|| Error::InvalidCone(format!("{} has no support monomial", c.display(g))))?;
        for u in fan.rays() {
            let v = m.pair(g.order(), u);
            if v < Q128::one() {
                return Ok(NefReport { nef: false, violation: Some((i, *u, v)) });
            }
        }
    }
    Ok(NefReport { nef: true, violation: None })
}

/// Primitive L-points on the plane through three points, lying in the closed region.
///
/// The spanning points and the region's rays are excluded.
pub fn coplanar_lattice_points(g: &GroupType, spanning: &[LatticePoint; 3], region: &Cone) -> Result<Vec<LatticePoint>> {
    let [p, q, s] = spanning.map(|x| x.0);
    let d1 = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
    let d2 = [s[0] - p[0], s[1] - p[1], s[2] - p[2]];
    let n = cross(&d1, &d2);
    if n == [0, 0, 0] {
        return Err(Error::InvalidCone("spanning points are collinear".into()));
    }
    let nn = crate::geom::primitive(n);
    let level = dot(&nn, &p);
    let r = g.order();
    let bound = spanning.iter().chain(region.rays()).flat_map(|x| x.0).map(|x| x.abs()).max().unwrap_or(r).max(r);
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            // Solve for the third coordinate when possible, else scan it.
            let cs: Vec<i64> = if nn[2] != 0 {
                let rest = level - nn[0] as i128 * a as i128 - nn[1] as i128 * b as i128;
                if rest % nn[2] as i128 != 0 {
                    continue;
                }
                vec![(rest / nn[2] as i128) as i64]
            } else {
                (-bound..=bound).collect()
            };
            for cc in cs {
                let x = LatticePoint([a, b, cc]);
                if cc.abs() > bound || dot(&nn, &x.0) != level {
                    continue;
                }
                if spanning.contains(&x) || region.rays().contains(&x) || !region.contains(&x.0) {
                    continue;
                }
                if g.is_primitive(&x) {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
