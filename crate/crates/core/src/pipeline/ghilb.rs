use std::collections::HashSet;

use crate::brick::{validate_prebrick, GBrick};
use crate::error::{Error, Result};
use crate::fan::{cones_tile, positive_octant, Cone, Fan};
use crate::lattice::{GroupType, Monomial};

use super::brickset::Brickset;

/// Largest order accepted by the staircase enumeration.
pub const GHILB_MAX_ORDER: i64 = 60;

fn order_key(m: &Monomial) -> (i64, [i64; 3]) {
    (m.degree(), m.0)
}

/// All G-graphs: sets of genuine monomials containing 1, closed under division, one per weight.
pub fn g_graphs(g: &GroupType) -> Result<Vec<Vec<Monomial>>> {
    let r = g.order();
    if r > GHILB_MAX_ORDER {
        return Err(Error::Unsupported(format!("G-graph enumeration limited to r ≤ {GHILB_MAX_ORDER}, got {r}")));
    }
    let mut out = Vec::new();
    let mut chosen = vec![Monomial::one()];
    let mut members: HashSet<Monomial> = chosen.iter().copied().collect();
    let mut used = vec![false; r as usize];
    used[0] = true;
    grow(g, &mut chosen, &mut members, &mut used, &mut out);
    Ok(out)
}

fn grow(
    g: &GroupType,
    chosen: &mut Vec<Monomial>,
    members: &mut HashSet<Monomial>,
    used: &mut [bool],
    out: &mut Vec<Vec<Monomial>>,
) {
    if chosen.len() == used.len() {
        out.push(chosen.clone());
        return;
    }
    let last = order_key(chosen.last().expect("1 is always present"));
    let mut cands: Vec<Monomial> = Vec::new();
    for s in chosen.iter() {
        for i in 0..3 {
            let m = *s * Monomial::var(i);
            if order_key(&m) <= last || members.contains(&m) || used[g.weight_of(&m)] {
                continue;
            }
            let closed = (0..3).all(|j| m.0[j] == 0 || members.contains(&(m / Monomial::var(j))));
            if closed {
                cands.push(m);
            }
        }
    }
    cands.sort_by_key(order_key);
    cands.dedup();
    for m in cands {
        let w = g.weight_of(&m);
        chosen.push(m);
        members.insert(m);
        used[w] = true;
        grow(g, chosen, members, used, out);
        used[w] = false;
        members.remove(&m);
        chosen.pop();
    }
}

/// The fan and brickset of G-Hilb: G-graphs with three-dimensional cones.
pub fn ghilb(g: &GroupType) -> Result<(Fan, Brickset)> {
    let mut entries: Vec<(Cone, GBrick)> = Vec::new();
    for list in g_graphs(g)? {
        let brick = validate_prebrick(g, &list)?;
        let bc = brick.brick_cone();
        if bc.dim == 3 {
            entries.push((bc.to_cone()?, brick));
        }
    }
    let set = Brickset::new(g, entries)?;
    let fan = set.fan()?;
    let tiling = cones_tile(&fan, &positive_octant(g));
    if !tiling.ok {
        return Err(Error::Mismatch(format!("G-graph cones do not tile: {}", tiling.problems.join("; "))));
    }
    Ok((fan, set))
}
