//! JSON documents for groups, fans, bricks, bricksets, θ vectors, certificates and reports.
//!
//! Every document carries `kind` and `version`; unknown fields are rejected. Rationals are
//! strings `p` or `p/q` in lowest terms, fan rays are numerator triples over r.

use serde::{Deserialize, Serialize};

use crate::brick::GBrick;
use crate::error::{Error, Result};
use crate::fan::{Cone, Fan};
use crate::lattice::{GroupType, LatticePoint, Monomial, RoundDownContext};
use crate::pipeline::certify::{CertDetail, NodeCertificate, VarthetaSource};
use crate::pipeline::Brickset;
use crate::scalar::{format_ratio, parse_ratio, Scalar};
use crate::stability::{AffineMargin, ThetaOf};

pub const FORMAT_VERSION: &str = "1";

fn version() -> String {
    FORMAT_VERSION.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub r: i64,
    pub weights: [i64; 3],
}

impl GroupSpec {
    pub fn of(g: &GroupType) -> Self {
        GroupSpec { r: g.order(), weights: g.weights() }
    }

    pub fn group(&self) -> Result<GroupType> {
        GroupType::new(self.r, self.weights)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default = "version")]
    pub version: String,
    pub r: i64,
    pub weights: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    #[serde(default = "version")]
    pub version: String,
    pub group: GroupSpec,
    /// Sorted lexicographically.
    pub rays: Vec<[i64; 3]>,
    /// Ray indices, each list sorted.
    pub cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextRef {
    pub parent: GroupSpec,
    pub center: [i64; 3],
    /// 1-based coordinate replaced by the center.
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrickDoc {
    #[serde(default = "version")]
    pub version: String,
    pub group: GroupSpec,
    /// Exponent vectors in weight order.
    pub monomials: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BricksetEntry {
    pub cone: Vec<[i64; 3]>,
    pub monomials: Vec<[i64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BricksetDoc {
    #[serde(default = "version")]
    pub version: String,
    pub group: GroupSpec,
    pub entries: Vec<BricksetEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaDoc {
    #[serde(default = "version")]
    pub version: String,
    pub r: usize,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineDoc {
    #[serde(rename = "const")]
    pub constant: String,
    pub slope: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarginDoc {
    pub brick: usize,
    pub value: String,
    pub symbolic: AffineDoc,
    /// Weights of the attaining closed set.
    pub witness: Vec<usize>,
    pub threshold: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertNodeDoc {
    pub group: GroupSpec,
    pub theta: Vec<String>,
    /// `trivial`, `theta_plus` or `split`.
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDoc {
    pub center: [i64; 3],
    pub vartheta_source: String,
    pub rank: usize,
    pub target_dim: usize,
    pub theta_p: Vec<String>,
    pub vartheta: Vec<String>,
    pub m: u64,
    pub margins: Vec<MarginDoc>,
    pub children: Vec<CertNodeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    #[serde(default = "version")]
    pub version: String,
    pub family: String,
    pub root: CertNodeDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    #[serde(default = "version")]
    pub version: String,
    pub report: String,
    pub ok: bool,
    pub details: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDoc {
    #[serde(default = "version")]
    pub version: String,
    pub code: i32,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Group(GroupDoc),
    Fan(FanDoc),
    Brick(BrickDoc),
    Brickset(BricksetDoc),
    Theta(ThetaDoc),
    Certificate(CertificateDoc),
    Report(ReportDoc),
    Error(ErrorDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Fan(_) => "fan",
            Document::Brick(_) => "brick",
            Document::Brickset(_) => "brickset",
            Document::Theta(_) => "theta",
            Document::Certificate(_) => "certificate",
            Document::Report(_) => "report",
            Document::Error(_) => "error",
        }
    }

    fn version(&self) -> &str {
        match self {
            Document::Group(d) => &d.version,
            Document::Fan(d) => &d.version,
            Document::Brick(d) => &d.version,
            Document::Brickset(d) => &d.version,
            Document::Theta(d) => &d.version,
            Document::Certificate(d) => &d.version,
            Document::Report(d) => &d.version,
            Document::Error(d) => &d.version,
        }
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.version() != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported version {:?}", doc.version())));
    }
    Ok(doc)
}

pub fn serialize(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn expect_kind(doc: Document, kind: &str) -> Result<Document> {
    if doc.kind() == kind {
        Ok(doc)
    } else {
        Err(Error::Parse(format!("expected a {kind} document, found {}", doc.kind())))
    }
}

pub fn group_doc(g: &GroupType) -> Document {
    Document::Group(GroupDoc { version: version(), r: g.order(), weights: g.weights() })
}

pub fn group_from(doc: Document) -> Result<GroupType> {
    match expect_kind(doc, "group")? {
        Document::Group(d) => GroupType::new(d.r, d.weights),
        _ => unreachable!(),
    }
}

pub fn fan_doc(f: &Fan) -> Document {
    Document::Fan(FanDoc {
        version: version(),
        group: GroupSpec::of(f.group()),
        rays: f.rays().iter().map(|p| p.0).collect(),
        cones: f.cone_indices().to_vec(),
    })
}

pub fn fan_from(doc: Document) -> Result<Fan> {
    match expect_kind(doc, "fan")? {
        Document::Fan(d) => {
            let g = d.group.group()?;
            let rays: Vec<LatticePoint> = d.rays.iter().map(|p| LatticePoint(*p)).collect();
            Fan::from_indexed(&g, &rays, &d.cones)
        }
        _ => unreachable!(),
    }
}

fn exps(b: &GBrick) -> Vec<[i64; 3]> {
    b.monomials().iter().map(|m| m.0).collect()
}

pub fn brick_doc(b: &GBrick, ctx: Option<&RoundDownContext>) -> Document {
    Document::Brick(BrickDoc {
        version: version(),
        group: GroupSpec::of(b.group()),
        monomials: exps(b),
        context: ctx.map(|c| ContextRef { parent: GroupSpec::of(c.parent()), center: c.center().0, k: c.axis() + 1 }),
    })
}

fn brick_of(g: &GroupType, ms: &[[i64; 3]]) -> Result<GBrick> {
    let list: Vec<Monomial> = ms.iter().map(|m| Monomial(*m)).collect();
    let b = GBrick::from_transversal(g, &list)?;
    if b.monomials() != list.as_slice() {
        return Err(Error::Parse("brick monomials must be listed in weight order".into()));
    }
    Ok(b)
}

/// The brick with its context, if one is recorded.
pub fn brick_from(doc: Document) -> Result<(GBrick, Option<RoundDownContext>)> {
    match expect_kind(doc, "brick")? {
        Document::Brick(d) => {
            let g = d.group.group()?;
            let b = brick_of(&g, &d.monomials)?;
            let ctx = match d.context {
                Some(c) => {
                    if c.k == 0 || c.k > 3 {
                        return Err(Error::Parse(format!("context coordinate {} out of 1..=3", c.k)));
                    }
                    let ctx = RoundDownContext::new(&c.parent.group()?, &LatticePoint(c.center), c.k - 1)?;
                    if ctx.subgroup() != &g {
                        return Err(Error::Parse("context subgroup differs from the brick's group".into()));
                    }
                    Some(ctx)
                }
                None => None,
            };
            Ok((b, ctx))
        }
        _ => unreachable!(),
    }
}

pub fn brickset_doc(s: &Brickset) -> Document {
    Document::Brickset(BricksetDoc {
        version: version(),
        group: GroupSpec::of(s.group()),
        entries: s
            .entries()
            .iter()
            .map(|(c, b)| {
                let mut rays: Vec<[i64; 3]> = c.rays().iter().map(|p| p.0).collect();
                rays.sort();
                BricksetEntry { cone: rays, monomials: exps(b) }
            })
            .collect(),
    })
}

pub fn brickset_from(doc: Document) -> Result<Brickset> {
    match expect_kind(doc, "brickset")? {
        Document::Brickset(d) => {
            let g = d.group.group()?;
            let entries = d
                .entries
                .iter()
                .map(|e| {
                    let cone = Cone::new(e.cone.iter().map(|p| LatticePoint(*p)).collect())?;
                    Ok((cone, brick_of(&g, &e.monomials)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Brickset::new(&g, entries)
        }
        _ => unreachable!(),
    }
}

pub fn ratio_strings<T: Scalar>(t: &ThetaOf<T>) -> Vec<String> {
    t.values().iter().map(format_ratio).collect()
}

pub fn theta_doc<T: Scalar>(t: &ThetaOf<T>) -> Document {
    Document::Theta(ThetaDoc { version: version(), r: t.len(), values: ratio_strings(t) })
}

pub fn theta_from_strings<T: Scalar>(values: &[String]) -> Result<ThetaOf<T>> {
    let vals = values
        .iter()
        .map(|s| {
            let q = parse_ratio(s).ok_or_else(|| Error::Parse(format!("{s:?} is not a rational")))?;
            T::from_big_ratio(&q).ok_or_else(|| Error::Parse(format!("{s} does not fit the scalar type")))
        })
        .collect::<Result<Vec<T>>>()?;
    ThetaOf::new(vals)
}

pub fn theta_from<T: Scalar>(doc: Document) -> Result<ThetaOf<T>> {
    match expect_kind(doc, "theta")? {
        Document::Theta(d) => {
            if d.values.len() != d.r {
                return Err(Error::Parse(format!("r = {} but {} values", d.r, d.values.len())));
            }
            theta_from_strings(&d.values)
        }
        _ => unreachable!(),
    }
}

pub fn affine_doc<T: Scalar>(a: &AffineMargin<T>) -> AffineDoc {
    AffineDoc { constant: format_ratio(&a.affine.constant), slope: format_ratio(&a.affine.slope) }
}

fn node_doc(n: &NodeCertificate) -> CertNodeDoc {
    let group = GroupSpec::of(&n.group);
    let theta = ratio_strings(&n.theta);
    match &n.detail {
        CertDetail::Trivial => CertNodeDoc { group, theta, basis: "trivial".into(), split: None },
        CertDetail::ThetaPlus => CertNodeDoc { group, theta, basis: "theta_plus".into(), split: None },
        CertDetail::Split { center, source, partial, certificate, children } => {
            let margins = certificate
                .margins
                .iter()
                .enumerate()
                .filter_map(|(i, m)| {
                    m.as_ref().map(|a| MarginDoc {
                        brick: i,
                        value: format_ratio(&a.margin.value),
                        symbolic: affine_doc(a),
                        witness: a.margin.witness.weights().iter().copied().collect(),
                        threshold: certificate.thresholds[i],
                    })
                })
                .collect();
            let source = match source {
                VarthetaSource::Catalog(tag) => tag.family.to_string(),
                VarthetaSource::TemplateSearch => "template search".to_string(),
            };
            CertNodeDoc {
                group,
                theta,
                basis: "split".into(),
                split: Some(SplitDoc {
                    center: center.0,
                    vartheta_source: source,
                    rank: partial.rank,
                    target_dim: partial.target_dim,
                    theta_p: ratio_strings(&certificate.theta_p),
                    vartheta: ratio_strings(&certificate.vartheta),
                    m: certificate.m,
                    margins,
                    children: children.iter().map(node_doc).collect(),
                }),
            }
        }
    }
}

pub fn certificate_doc(family: &str, root: &NodeCertificate) -> Document {
    Document::Certificate(CertificateDoc { version: version(), family: family.to_string(), root: node_doc(root) })
}

pub fn report_doc(report: &str, ok: bool, details: serde_json::Value) -> Document {
    Document::Report(ReportDoc { version: version(), report: report.to_string(), ok, details })
}

pub fn error_doc(code: i32, message: &str) -> Document {
    Document::Error(ErrorDoc { version: version(), code, message: message.to_string() })
}
