use std::collections::BTreeSet;

use num::{BigInt, ToPrimitive};
use petgraph::algo::ford_fulkerson;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::EdgeRef;
use petgraph::Direction;

use crate::brick::{GBrick, SubmoduleBasis};
use crate::error::{Error, Result};
use crate::scalar::{common_denominator, Scalar};

use super::theta::{AffineValue, ThetaOf};

/// Largest order accepted by the exhaustive oracle.
pub const BRUTE_FORCE_MAX_ORDER: i64 = 18;

/// The minimum of θ over nonempty proper closed subsets of a brick, with an attaining set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityMargin<T> {
    pub value: T,
    pub witness: SubmoduleBasis,
}

impl<T: Scalar> StabilityMargin<T> {
    pub fn is_stable(&self) -> bool {
        self.value.is_positive()
    }
}

/// Margin of θ_P + m·ϑ together with the affine function of m it is attained by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMargin<T> {
    pub margin: StabilityMargin<T>,
    pub affine: AffineValue<T>,
}

pub fn theta_of_set<T: Scalar>(theta: &ThetaOf<T>, set: &SubmoduleBasis) -> T {
    theta.eval(set.weights().iter().copied())
}

fn check_length<T: Scalar>(brick: &GBrick, theta: &ThetaOf<T>) -> Result<()> {
    if theta.len() != brick.len() {
        return Err(Error::Mismatch(format!("θ has {} entries but the brick has {}", theta.len(), brick.len())));
    }
    Ok(())
}

fn has_proper_subsets(brick: &GBrick) -> bool {
    brick.len() > 1
}

/// Exact minimum via one minimum-weight closure per (forced-in sink, forced-out source) pair.
///
/// Returns `None` for a one-element brick, which has no nonempty proper closed subset.
pub fn min_margin<T: Scalar>(brick: &GBrick, theta: &ThetaOf<T>) -> Result<Option<StabilityMargin<T>>> {
    check_length(brick, theta)?;
    if !has_proper_subsets(brick) {
        return Ok(None);
    }
    let n = brick.len();
    let succ: Vec<Vec<usize>> = (0..n).map(|w| brick.successors(w)).collect();
    let mut has_pred = vec![false; n];
    for s in succ.iter().flatten() {
        has_pred[*s] = true;
    }
    let sinks: Vec<usize> = (0..n).filter(|&w| succ[w].is_empty()).collect();
    let sources: Vec<usize> = (0..n).filter(|&w| !has_pred[w]).collect();
    let weights = integer_weights(theta)?;

    let mut best: Option<(i128, BTreeSet<usize>)> = None;
    for &s_in in &sinks {
        for &t_out in &sources {
            if s_in == t_out {
                continue;
            }
            let (value, set) = closure_cut(&succ, &weights, s_in, t_out)?;
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, set));
            }
        }
    }
    let (_, set) = best.ok_or_else(|| Error::InvalidBrick("no nonempty proper closed subset".into()))?;
    let witness = SubmoduleBasis::new(brick, set)?;
    let value = theta_of_set(theta, &witness);
    Ok(Some(StabilityMargin { value, witness }))
}

/// θ scaled by the common denominator of its entries, as machine integers.
fn integer_weights<T: Scalar>(theta: &ThetaOf<T>) -> Result<Vec<i128>> {
    let d = num::BigRational::from_integer(common_denominator(theta.values()));
    theta
        .values()
        .iter()
        .map(|v| {
            let s = v.to_big_ratio() * d.clone();
            let n: BigInt = s.to_integer();
            n.to_i128().ok_or_else(|| Error::SearchLimit("θ does not fit 128-bit flow capacities".into()))
        })
        .collect()
}

/// Minimum of the scaled θ over closed sets containing `s_in` and missing `t_out`.
fn closure_cut(succ: &[Vec<usize>], w: &[i128], s_in: usize, t_out: usize) -> Result<(i128, BTreeSet<usize>)> {
    let n = succ.len();
    let neg: i128 = w.iter().filter(|x| **x < 0).map(|x| -x).sum();
    let pos: i128 = w.iter().filter(|x| **x > 0).sum();
    let inf = u128::try_from(neg + pos + 1).map_err(|_| Error::SearchLimit("capacity overflow".into()))?;
    let mut g: DiGraph<(), u128> = DiGraph::with_capacity(n + 2, 4 * n);
    let nodes: Vec<NodeIndex> = (0..n).map(|_| g.add_node(())).collect();
    let src = g.add_node(());
    let dst = g.add_node(());
    for (a, ss) in succ.iter().enumerate() {
        for &b in ss {
            g.add_edge(nodes[a], nodes[b], inf);
        }
        if w[a] > 0 {
            g.add_edge(nodes[a], dst, w[a] as u128);
        } else if w[a] < 0 {
            g.add_edge(src, nodes[a], (-w[a]) as u128);
        }
    }
    g.add_edge(src, nodes[s_in], inf);
    g.add_edge(nodes[t_out], dst, inf);
    let (flow, flows) = ford_fulkerson(&g, src, dst);
    if flow >= inf {
        return Err(Error::InvalidBrick("forced pair admits no closed set".into()));
    }
    // The source side of the residual graph is the smallest optimal closed set.
    let mut seen = vec![false; g.node_count()];
    let mut stack = vec![src];
    seen[src.index()] = true;
    while let Some(u) = stack.pop() {
        for e in g.edges_directed(u, Direction::Outgoing) {
            let v = e.target();
            if !seen[v.index()] && flows[e.id().index()] < *e.weight() {
                seen[v.index()] = true;
                stack.push(v);
            }
        }
        for e in g.edges_directed(u, Direction::Incoming) {
            let v = e.source();
            if !seen[v.index()] && flows[e.id().index()] > 0 {
                seen[v.index()] = true;
                stack.push(v);
            }
        }
    }
    let set: BTreeSet<usize> = (0..n).filter(|&i| seen[nodes[i].index()]).collect();
    let value = flow as i128 - neg;
    debug_assert_eq!(value, set.iter().map(|&i| w[i]).sum::<i128>());
    Ok((value, set))
}

/// Visits every closed subset of the brick's weights.
pub fn closed_sets(brick: &GBrick, mut visit: impl FnMut(&BTreeSet<usize>)) {
    let n = brick.len();
    let succ: Vec<Vec<usize>> = (0..n).map(|w| brick.successors(w)).collect();
    let order = reverse_topological(&succ);
    let mut chosen = vec![false; n];
    fn go(
        i: usize,
        order: &[usize],
        succ: &[Vec<usize>],
        chosen: &mut Vec<bool>,
        visit: &mut dyn FnMut(&BTreeSet<usize>),
    ) {
        if i == order.len() {
            let set: BTreeSet<usize> = (0..chosen.len()).filter(|&w| chosen[w]).collect();
            visit(&set);
            return;
        }
        let w = order[i];
        go(i + 1, order, succ, chosen, visit);
        if succ[w].iter().all(|&s| chosen[s]) {
            chosen[w] = true;
            go(i + 1, order, succ, chosen, visit);
            chosen[w] = false;
        }
    }
    go(0, &order, &succ, &mut chosen, &mut visit);
}

/// Nodes ordered so that every successor precedes its predecessors.
fn reverse_topological(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut state = vec![0u8; n];
    let mut out = Vec::with_capacity(n);
    fn dfs(u: usize, succ: &[Vec<usize>], state: &mut [u8], out: &mut Vec<usize>) {
        state[u] = 1;
        for &v in &succ[u] {
            if state[v] == 0 {
                dfs(v, succ, state, out);
            }
        }
        state[u] = 2;
        out.push(u);
    }
    for u in 0..n {
        if state[u] == 0 {
            dfs(u, succ, &mut state, &mut out);
        }
    }
    out
}

/// Exhaustive oracle for `min_margin`.
pub fn min_margin_bruteforce<T: Scalar>(brick: &GBrick, theta: &ThetaOf<T>) -> Result<Option<StabilityMargin<T>>> {
    check_length(brick, theta)?;
    let r = brick.group().order();
    if r > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::Unsupported(format!("exhaustive enumeration limited to r ≤ {BRUTE_FORCE_MAX_ORDER}, got {r}")));
    }
    if !has_proper_subsets(brick) {
        return Ok(None);
    }
    let n = brick.len();
    let mut best: Option<(T, BTreeSet<usize>)> = None;
    closed_sets(brick, |set| {
        if set.is_empty() || set.len() == n {
            return;
        }
        let v = theta.eval(set.iter().copied());
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, set.clone()));
        }
    });
    let (value, set) = best.ok_or_else(|| Error::InvalidBrick("no nonempty proper closed subset".into()))?;
    Ok(Some(StabilityMargin { value, witness: SubmoduleBasis::new(brick, set)? }))
}

/// Margin of θ_P + m·ϑ at a given m, with the affine function realised by its witness.
pub fn affine_margin<T: Scalar>(
    brick: &GBrick,
    theta_p: &ThetaOf<T>,
    vartheta: &ThetaOf<T>,
    m: &T,
) -> Result<Option<AffineMargin<T>>> {
    let theta = theta_p.combine(m, vartheta);
    Ok(min_margin(brick, &theta)?.map(|margin| {
        let affine = AffineValue {
            constant: theta_of_set(theta_p, &margin.witness),
            slope: theta_of_set(vartheta, &margin.witness),
        };
        AffineMargin { margin, affine }
    }))
}
