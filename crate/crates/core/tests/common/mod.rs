//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num::rational::Ratio;
use num::{Signed, Zero};
use toric_bricks::GroupType;

pub type R = Ratio<i128>;

/// Numerator triple p lies in L = Z³ + Z·α/r.
pub fn in_lattice(g: &GroupType, p: [i64; 3]) -> bool {
    let (r, w) = (g.order(), g.weights());
    (0..r).any(|t| (0..3).all(|i| (p[i] - t * w[i]).rem_euclid(r) == 0))
}

pub fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Coefficients λ with p = Σ λ_i rays[i], by Cramer's rule; None if the rays are dependent.
pub fn coefficients(rays: [[i64; 3]; 3], p: [i64; 3]) -> Option<[R; 3]> {
    let cols = rays.map(|v| v.map(|x| x as i128));
    let m = |c: [[i128; 3]; 3]| [[c[0][0], c[1][0], c[2][0]], [c[0][1], c[1][1], c[2][1]], [c[0][2], c[1][2], c[2][2]]];
    let d = det3(m(cols));
    if d == 0 {
        return None;
    }
    let mut out = [R::zero(), R::zero(), R::zero()];
    for (i, o) in out.iter_mut().enumerate() {
        let mut c = cols;
        c[i] = p.map(|x| x as i128);
        *o = R::new(det3(m(c)), d);
    }
    Some(out)
}

/// Lattice points u = Σλ_i v_i with λ ≥ 0 and Σλ ≤ 1 (or < 1), numerators in a box.
pub fn simplex_points(g: &GroupType, rays: [[i64; 3]; 3], strict: bool) -> Vec<[i64; 3]> {
    let hi: Vec<i64> = (0..3).map(|i| rays.iter().map(|v| v[i]).max().unwrap()).collect();
    let lo: Vec<i64> = (0..3).map(|i| rays.iter().map(|v| v[i]).min().unwrap().min(0)).collect();
    let mut out = Vec::new();
    for a in lo[0]..=hi[0] {
        for b in lo[1]..=hi[1] {
            for c in lo[2]..=hi[2] {
                let p = [a, b, c];
                if !in_lattice(g, p) {
                    continue;
                }
                let Some(l) = coefficients(rays, p) else { continue };
                if l.iter().any(|x| x.is_negative()) {
                    continue;
                }
                let s: R = l.iter().cloned().sum();
                let one = R::from_integer(1);
                if (strict && s < one) || (!strict && s <= one) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Rank over Q by fraction-free elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let (a, b) = (rows[rank][col], rows[i][col]);
                for j in 0..ncols {
                    rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
                }
                let g = rows[i].iter().fold(0i128, |acc, &x| num::integer::gcd(acc, x));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of ⊕(φ_k)⋆ on Θ in the basis θ_i = ρ_i − ρ_0, using ρ_i ↦ (t·i mod r) mod a_k.
pub fn pushforward_rank_oracle(r: i64, t: i64, aks: &[i64]) -> usize {
    let mut rows = Vec::new();
    for &ak in aks {
        for j in 1..ak {
            rows.push((1..r).map(|i| i128::from(((t * i).rem_euclid(r)) % ak == j)).collect());
        }
    }
    rank(rows)
}
