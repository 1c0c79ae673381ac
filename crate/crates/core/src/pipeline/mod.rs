//! Bricksets for toric models: G-Hilb, star-subdivision recursion, families and certificates.

pub mod brickset;
pub mod build;
pub mod certify;
pub mod family;
pub mod ghilb;

pub use brickset::{verify_brickset, Brickset, BricksetReport};
pub use build::{build_auto, build_brickset, restrict_all, restrict_fan, smooth_cone_brick, BuildNode, NodeKind, Restriction, Strategy};
pub use certify::{certify_model, certify_node, end_to_end, Certified, EndToEnd, Failure, ModelReport, NodeCertificate};
pub use family::{canonical_model_fan, detect_family, FamilyTag};
pub use ghilb::ghilb;
