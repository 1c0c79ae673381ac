use std::collections::BTreeMap;

use num::rational::Ratio;
use num::BigRational;

use crate::error::{Error, Result};
use crate::fan::{cones_tile, positive_octant, Cone, Fan, Tiling};
use crate::lattice::{is_good_subdivision, GroupType, LatticePoint};
use crate::reid::{classify_cone, discrepancies, is_relatively_nef_k, ConeClass, NefReport};
use crate::scalar::common_denominator;
use crate::stability::{
    check_vartheta_properties, find_m, min_margin, search_vartheta, solve_partial, theta_plus, vartheta_catalog,
    FindMFailure, PartialSolution, StabilityCertificate, ThetaOf, DEFAULT_M_MAX,
};
use crate::Q;

use super::build::{build_brickset, candidate_centers, restrict_all, BuildNode, NodeKind, Restriction, Strategy};
use super::family::{detect_family, FamilyTag};

/// Where a split node's ϑ came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarthetaSource {
    Catalog(FamilyTag),
    TemplateSearch,
}

/// A stabilizing θ for one node of the recursion tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCertificate {
    pub group: GroupType,
    /// Integral and positively rescaled.
    pub theta: ThetaOf<Q>,
    pub detail: CertDetail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertDetail {
    /// θ is zero on the trivial group.
    Trivial,
    /// θ is the G-Hilb chamber representative.
    ThetaPlus,
    Split {
        center: LatticePoint,
        source: VarthetaSource,
        partial: Box<PartialSolution<Q>>,
        certificate: StabilityCertificate<Q>,
        children: Vec<NodeCertificate>,
    },
}

/// A diagnosis of why no certificate was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    NoFamily,
    NoMorphism { center: LatticePoint, straddling: Vec<Cone> },
    Build { center: LatticePoint, message: String },
    /// The combined pushforward is not onto ⊕Θ^(k); `consistent` records whether these targets are still hit.
    NotSurjective { group: GroupType, center: LatticePoint, rank: usize, target_dim: usize, consistent: bool },
    NoVartheta { group: GroupType, center: LatticePoint },
    FindM { group: GroupType, center: LatticePoint, failure: Box<FindMFailure<Q>> },
    BaseUnstable { group: GroupType },
}

fn pt(p: &LatticePoint) -> String {
    format!("({},{},{})", p.0[0], p.0[1], p.0[2])
}

impl Failure {
    /// How far the pipeline got before failing.
    pub fn stage(&self) -> u8 {
        match self {
            Failure::NoFamily => 0,
            Failure::NoMorphism { .. } => 1,
            Failure::Build { .. } => 2,
            Failure::BaseUnstable { .. } | Failure::NotSurjective { .. } => 3,
            Failure::NoVartheta { .. } => 4,
            Failure::FindM { .. } => 5,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Failure::NoFamily => "the group is in no covered family".into(),
            Failure::NoMorphism { center, straddling } => {
                format!("no morphism to the subdivision at {}: {} cones straddle", pt(center), straddling.len())
            }
            Failure::Build { center, message } => format!("building at {} failed: {message}", pt(center)),
            Failure::NotSurjective { group, center, rank, target_dim, consistent } => format!(
                "pushforward over {group} at {} is not surjective: rank {rank} < {target_dim}; targets {}",
                pt(center),
                if *consistent { "still attained" } else { "not attained" }
            ),
            Failure::NoVartheta { group, center } => format!("no ϑ with the required properties over {group} at {}", pt(center)),
            Failure::FindM { group, failure, .. } => {
                format!("no stabilizing m over {group}; worst brick {}", failure.brick())
            }
            Failure::BaseUnstable { group } => format!("base brickset over {group} is not stable for θ₊"),
        }
    }
}

/// The certified model: tag and center used, build tree and certificate tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified {
    pub tag: FamilyTag,
    pub center: LatticePoint,
    pub node: BuildNode,
    pub certificate: NodeCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndToEnd {
    pub outcome: std::result::Result<Certified, Failure>,
    pub log: Vec<String>,
}

/// Rescales θ by the common denominator of its entries.
fn integral(theta: &ThetaOf<Q>) -> ThetaOf<Q> {
    let d = BigRational::from_integer(common_denominator(theta.values()));
    theta.scale(&d)
}

fn tag_for(g: &GroupType, center: &LatticePoint) -> Option<FamilyTag> {
    detect_family(g).into_iter().find(|t| t.center() == *center)
}

fn choose_vartheta(
    g: &GroupType,
    center: &LatticePoint,
    ctxs: &[crate::lattice::RoundDownContext],
    log: &mut Vec<String>,
) -> Result<Option<(ThetaOf<Q>, VarthetaSource)>> {
    if let Some(tag) = tag_for(g, center) {
        match vartheta_catalog::<Q>(&tag.family) {
            Ok(t) if check_vartheta_properties(ctxs, &t).all() => return Ok(Some((t, VarthetaSource::Catalog(tag)))),
            Ok(_) => log.push(format!("{g}: catalog ϑ for {} lacks the required properties", tag.family)),
            Err(e) => log.push(format!("{g}: family {} detected, ϑ catalog unsupported ({e})", tag.family)),
        }
    }
    let found = search_vartheta::<Q>(ctxs)?;
    if found.is_some() {
        log.push(format!("{g}: ϑ from the template search at {}", g.fmt_point(center)));
    }
    Ok(found.map(|t| (t, VarthetaSource::TemplateSearch)))
}

/// Certifies every node bottom-up.
pub fn certify_node(node: &BuildNode, log: &mut Vec<String>) -> Result<std::result::Result<NodeCertificate, Failure>> {
    let g = node.group;
    match &node.kind {
        NodeKind::Trivial => Ok(Ok(NodeCertificate { group: g, theta: ThetaOf::zero(1), detail: CertDetail::Trivial })),
        NodeKind::Ghilb | NodeKind::Loaded => {
            let theta = theta_plus::<Q>(&g);
            for b in node.brickset.bricks() {
                if let Some(m) = min_margin(&b, &theta)? {
                    if !m.is_stable() {
                        return Ok(Err(Failure::BaseUnstable { group: g }));
                    }
                }
            }
            Ok(Ok(NodeCertificate { group: g, theta, detail: CertDetail::ThetaPlus }))
        }
        NodeKind::Split { center, contexts, children } => {
            let mut subs = Vec::new();
            for c in children {
                match certify_node(c, log)? {
                    Ok(s) => subs.push(s),
                    Err(f) => return Ok(Err(f)),
                }
            }
            let targets: Vec<ThetaOf<Q>> = subs.iter().map(|s| s.theta.clone()).collect();
            let partial = solve_partial(&g, contexts, &targets)?;
            log.push(format!(
                "{g}: pushforward rank {} of {}{}",
                partial.rank,
                partial.target_dim,
                if partial.feasible() { "" } else { ", system inconsistent" }
            ));
            if !partial.surjective() {
                return Ok(Err(Failure::NotSurjective {
                    group: g,
                    center: *center,
                    rank: partial.rank,
                    target_dim: partial.target_dim,
                    consistent: partial.feasible(),
                }));
            }
            let theta_p = partial.theta.clone().expect("a surjective system is consistent");
            let Some((vartheta, source)) = choose_vartheta(&g, center, contexts, log)? else {
                return Ok(Err(Failure::NoVartheta { group: g, center: *center }));
            };
            let bricks = node.brickset.bricks();
            let cert = match find_m(&bricks, &theta_p, &vartheta, DEFAULT_M_MAX)? {
                Ok(c) => c,
                Err(failure) => return Ok(Err(Failure::FindM { group: g, center: *center, failure: Box::new(failure) })),
            };
            log.push(format!("{g}: stable from m = {}", cert.m));
            let theta = integral(&cert.theta());
            Ok(Ok(NodeCertificate {
                group: g,
                theta,
                detail: CertDetail::Split { center: *center, source, partial: Box::new(partial), certificate: cert, children: subs },
            }))
        }
    }
}

/// Keeps the failure that progressed furthest, the earlier one on ties.
fn keep(last: &mut Failure, f: Failure) {
    if f.stage() > last.stage() {
        *last = f;
    }
}

const AUTO: [Strategy; 3] = [Strategy::Auto, Strategy::Auto, Strategy::Auto];

/// Detects the family, builds the brickset over its center (or a fallback center) and certifies it.
pub fn end_to_end(g: &GroupType, fan: &Fan) -> Result<EndToEnd> {
    let mut log = Vec::new();
    let tags = detect_family(g);
    if tags.is_empty() {
        log.push(format!("{g}: no family detected"));
        return Ok(EndToEnd { outcome: Err(Failure::NoFamily), log });
    }
    let mut last = Failure::NoFamily;
    for tag in tags {
        log.push(format!("trying {tag}"));
        let v = tag.center();
        let mut centers = vec![v];
        if let Restriction::Straddling(cs) = restrict_all(fan, &v)? {
            log.push(format!("{} cones straddle the subdivision at {}; scanning fallback centers", cs.len(), g.fmt_point(&v)));
            keep(&mut last, Failure::NoMorphism { center: v, straddling: cs });
            centers = candidate_centers(fan)
                .into_iter()
                .filter(|u| *u != v && is_good_subdivision(g, u).good)
                .filter(|u| matches!(restrict_all(fan, u), Ok(Restriction::Fans(_))))
                .collect();
        }
        for center in centers {
            let node = match build_brickset(g, fan, &center, &AUTO) {
                Ok(n) => n,
                Err(e) => {
                    log.push(format!("build at {} failed: {e}", g.fmt_point(&center)));
                    keep(&mut last, Failure::Build { center, message: e.to_string() });
                    continue;
                }
            };
            log.push(format!("brickset of {} bricks built at {}, depth {}", node.brickset.len(), g.fmt_point(&center), node.depth()));
            match certify_node(&node, &mut log)? {
                Ok(certificate) => {
                    return Ok(EndToEnd { outcome: Ok(Certified { tag, center, node, certificate }), log });
                }
                Err(f) => {
                    log.push(f.summary());
                    keep(&mut last, f);
                }
            }
        }
    }
    Ok(EndToEnd { outcome: Err(last), log })
}

/// Birational data of a model fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelReport {
    pub simplicial: bool,
    pub classes: Vec<(Cone, Option<ConeClass>)>,
    pub terminal: bool,
    pub smooth: bool,
    pub nef: Option<NefReport>,
    pub discrepancies: BTreeMap<LatticePoint, Ratio<i64>>,
    pub tiling: Tiling,
}

impl ModelReport {
    /// Q-factorial, terminal and K-nef.
    pub fn is_minimal_model(&self) -> bool {
        self.simplicial && self.terminal && self.nef.as_ref().is_some_and(|n| n.nef) && self.tiling.ok
    }
}

pub fn certify_model(g: &GroupType, fan: &Fan) -> Result<ModelReport> {
    if fan.group() != g {
        return Err(Error::Mismatch(format!("fan over {} used with {g}", fan.group())));
    }
    let cones = fan.cones();
    let simplicial = cones.iter().all(|c| c.is_simplicial());
    let classes: Vec<(Cone, Option<ConeClass>)> = cones
        .iter()
        .map(|c| (c.clone(), if c.is_simplicial() { classify_cone(g, c).ok() } else { None }))
        .collect();
    let terminal = classes.iter().all(|(_, k)| k.as_ref().is_some_and(|k| k.terminal));
    let smooth = classes.iter().all(|(_, k)| k.as_ref().is_some_and(|k| k.smooth));
    let nef = is_relatively_nef_k(g, fan).ok();
    Ok(ModelReport {
        simplicial,
        classes,
        terminal,
        smooth,
        nef,
        discrepancies: discrepancies(g, fan),
        tiling: cones_tile(fan, &positive_octant(g)),
    })
}
