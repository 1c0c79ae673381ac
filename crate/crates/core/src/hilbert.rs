//! Dual cones in M and Hilbert bases of σ∨ ∩ M.

use num::integer::gcd;

use crate::error::{Error, Result};
use crate::fan::Cone;
use crate::geom::{coordinates, dot, Q128, V3};
use crate::lattice::{GroupType, Monomial};

/// Upper bound on candidate points examined by `hilbert_basis`.
pub const CANDIDATE_LIMIT: i128 = 1_000_000;

/// Primitive generators in M of the rays of the dual cone.
pub fn dual_generators(g: &GroupType, c: &Cone) -> Result<Vec<Monomial>> {
    let normals = c.facet_normals()?;
    let r = g.order();
    Ok(normals.iter().map(|n| scale_into_m(g, r, n)).collect())
}

fn scale_into_m(g: &GroupType, r: i64, n: &V3) -> Monomial {
    let w = g.weight_of(&Monomial(*n)) as i64;
    let k = r / gcd(r, w);
    Monomial(n.map(|x| x * k))
}

/// Height of a monomial against the interior point of the cone.
pub fn height(c: &Cone, m: &Monomial) -> i128 {
    dot(&c.interior_point(), &m.0)
}

pub fn in_dual(c: &Cone, m: &Monomial) -> bool {
    c.rays().iter().all(|u| u.pair(m) >= 0)
}

/// Pairs of dual rays spanning a two-dimensional face of the dual cone.
fn dual_adjacent(c: &Cone, a: &Monomial, b: &Monomial) -> bool {
    c.rays().iter().any(|u| u.pair(a) == 0 && u.pair(b) == 0)
}

/// The minimal generating set of σ∨ ∩ M, sorted by height then exponents.
pub fn hilbert_basis(g: &GroupType, c: &Cone) -> Result<Vec<Monomial>> {
    let gens = dual_generators(g, c)?;
    let simplices: Vec<[Monomial; 3]> = match gens.len() {
        3 => vec![[gens[0], gens[1], gens[2]]],
        4 => {
            let d = (1..4).find(|&j| !dual_adjacent(c, &gens[0], &gens[j])).ok_or(Error::NotPointed)?;
            let others: Vec<usize> = (1..4).filter(|&j| j != d).collect();
            vec![
                [gens[0], gens[d], gens[others[0]]],
                [gens[0], gens[d], gens[others[1]]],
            ]
        }
        _ => return Err(Error::InvalidCone("unsupported dual cone".into())),
    };
    let mut candidates: Vec<Monomial> = Vec::new();
    for s in &simplices {
        parallelepiped_points(g, s, &mut candidates)?;
    }
    candidates.extend(gens.iter().copied());
    candidates.sort_by_key(|m| (height(c, m), *m));
    candidates.dedup();
    let mut basis: Vec<Monomial> = Vec::new();
    for x in candidates {
        if x.is_one() {
            continue;
        }
        let reducible = basis.iter().any(|h| in_dual(c, &(x / *h)));
        if !reducible {
            basis.push(x);
        }
    }
    Ok(basis)
}

/// Points of M in the half-open parallelepiped spanned by three dual rays.
fn parallelepiped_points(g: &GroupType, s: &[Monomial; 3], out: &mut Vec<Monomial>) -> Result<()> {
    let mut lo = [0i64; 3];
    let mut hi = [0i64; 3];
    for m in s {
        for i in 0..3 {
            lo[i] += m.0[i].min(0);
            hi[i] += m.0[i].max(0);
        }
    }
    let count: i128 = (0..3).map(|i| (hi[i] - lo[i] + 1) as i128).product();
    if count > CANDIDATE_LIMIT {
        return Err(Error::SearchLimit(format!(
            "{count} candidate points in the zonotope exceed the limit {CANDIDATE_LIMIT}"
        )));
    }
    let zero = Q128::from(0);
    let one = Q128::from(1);
    for a in lo[0]..=hi[0] {
        for b in lo[1]..=hi[1] {
            for cc in lo[2]..=hi[2] {
                let m = Monomial([a, b, cc]);
                if !g.is_invariant(&m) {
                    continue;
                }
                let Some(lam) = coordinates(&s[0].0, &s[1].0, &s[2].0, &m.0) else {
                    return Err(Error::NotFullDimensional);
                };
                if lam.iter().all(|l| *l >= zero && *l < one) {
                    out.push(m);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::positive_octant;
    use crate::lattice::LatticePoint;
    use std::collections::BTreeSet;

    #[test]
    fn smooth_cone_duals() {
        let g = GroupType::new(20, [1, 3, 4]).unwrap();
        let [_, e2, e3] = g.axes();
        let c = Cone::new(vec![LatticePoint([1, 3, 4]), e2, e3]).unwrap();
        let want: BTreeSet<Monomial> =
            [Monomial::new(20, 0, 0), Monomial::new(-3, 1, 0), Monomial::new(-4, 0, 1)].into_iter().collect();
        let got: BTreeSet<Monomial> = dual_generators(&g, &c).unwrap().into_iter().collect();
        assert_eq!(got, want);
        let hb: BTreeSet<Monomial> = hilbert_basis(&g, &c).unwrap().into_iter().collect();
        assert_eq!(hb, want);
    }

    #[test]
    fn octant_bases() {
        let g = GroupType::new(3, [1, 1, 1]).unwrap();
        let hb = hilbert_basis(&g, &positive_octant(&g)).unwrap();
        assert_eq!(hb.len(), 10);
        assert!(hb.iter().all(|m| m.degree() == 3 && m.is_genuine()));
        let t = GroupType::trivial();
        let hb: BTreeSet<Monomial> = hilbert_basis(&t, &positive_octant(&t)).unwrap().into_iter().collect();
        assert_eq!(hb, (0..3).map(Monomial::var).collect());
    }

    #[test]
    fn four_ray_dual() {
        let g = GroupType::new(39, [1, 5, 11]).unwrap();
        let [e1, e2, _] = g.axes();
        let c = Cone::new(vec![e1, e2, LatticePoint([1, 5, 11]), LatticePoint([8, 1, 10])]).unwrap();
        let gens = dual_generators(&g, &c).unwrap();
        assert_eq!(gens.len(), 4);
        for m in &gens {
            assert!(g.is_invariant(m));
            assert_eq!(c.rays().iter().filter(|u| u.pair(m) == 0).count(), 2);
        }
        let hb = hilbert_basis(&g, &c).unwrap();
        for m in &gens {
            assert!(hb.contains(m));
        }
    }
}
