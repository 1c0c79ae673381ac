use std::fmt;

use num::integer::gcd;

use crate::error::{Error, Result};
use crate::fan::{star_subdivide, Cone, Fan};
use crate::lattice::{GroupType, LatticePoint};
use crate::stability::VarthetaFamily;

/// A family matched by a group, with the coordinate slots carrying the weights 1, a, b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub family: VarthetaFamily,
    pub slots: [usize; 3],
}

impl FamilyTag {
    /// Places family coordinates (p₁, p_a, p_b) into the group's slots.
    pub fn place(&self, p: [i64; 3]) -> LatticePoint {
        let mut out = [0i64; 3];
        for i in 0..3 {
            out[self.slots[i]] = p[i];
        }
        LatticePoint(out)
    }

    /// v = (1,a,b)/r.
    pub fn center(&self) -> LatticePoint {
        let w = self.family.weights().expect("tags carry named families");
        self.place(w)
    }

    /// w = ((r+1)/a, 1, (r+b)/a)/r, for the second family.
    pub fn w_point(&self) -> Option<LatticePoint> {
        let r = self.family.order();
        let [_, a, b] = self.family.weights()?;
        match self.family {
            VarthetaFamily::Case2a { .. } | VarthetaFamily::Case2b { .. } => {
                if (r + 1) % a != 0 || (r + b) % a != 0 {
                    return None;
                }
                Some(self.place([(r + 1) / a, 1, (r + b) / a]))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on slots {:?}", self.family, self.slots)
    }
}

/// Every family identity matched by the group's weights, case1 before case2.
pub fn detect_family(g: &GroupType) -> Vec<FamilyTag> {
    let r = g.order();
    let w = g.weights();
    let mut case1 = Vec::new();
    let mut case2 = Vec::new();
    for one in 0..3 {
        if w[one] != 1 {
            continue;
        }
        for (sa, sb) in [((one + 1) % 3, (one + 2) % 3), ((one + 2) % 3, (one + 1) % 3)] {
            let (a, b) = (w[sa], w[sb]);
            if a < 1 || b < 1 {
                continue;
            }
            let slots = [one, sa, sb];
            let rest = r - a - b - 1;
            if a < b && gcd(a, b) == 1 && rest > 0 && rest % (a * b) == 0 {
                case1.push(FamilyTag { family: VarthetaFamily::Case1 { a, b, c: rest / (a * b) }, slots });
            }
            let rest = r - a + 2 * b - 1;
            if (b - 1) % a == 0 && b > 1 && rest > 0 && rest % (a * b) == 0 && gcd(a, b) == 1 {
                let (k, c) = ((b - 1) / a, rest / (a * b));
                let family = if c == 1 { VarthetaFamily::Case2b { a, k } } else { VarthetaFamily::Case2a { a, k, c } };
                case2.push(FamilyTag { family, slots });
            }
        }
    }
    case1.extend(case2);
    case1.dedup();
    case1
}

/// The relative canonical model over the tag's center: the star subdivision for case1,
/// the five- or four-cone fans with the point w for case2.
pub fn canonical_model_fan(g: &GroupType, tag: &FamilyTag) -> Result<Fan> {
    let v = tag.center();
    let e = [tag.place([g.order(), 0, 0]), tag.place([0, g.order(), 0]), tag.place([0, 0, g.order()])];
    match tag.family {
        VarthetaFamily::Case1 { .. } => star_subdivide(&Fan::positive_octant(g), &v),
        VarthetaFamily::Case2a { .. } => {
            let w = tag.w_point().ok_or_else(|| Error::InvalidCenter("w is not a lattice point".into()))?;
            Fan::from_ray_lists(
                g,
                &[
                    vec![v, e[1], e[2]],
                    vec![e[0], e[1], v],
                    vec![w, v, e[2]],
                    vec![e[0], v, w],
                    vec![e[0], w, e[2]],
                ],
            )
        }
        VarthetaFamily::Case2b { .. } => {
            let w = tag.w_point().ok_or_else(|| Error::InvalidCenter("w is not a lattice point".into()))?;
            let cones = vec![
                Cone::new(vec![v, e[1], e[2]])?,
                Cone::new(vec![e[0], e[1], v, w])?,
                Cone::new(vec![w, v, e[2]])?,
                Cone::new(vec![e[0], w, e[2]])?,
            ];
            Fan::from_cones(g, &cones)
        }
        VarthetaFamily::Custom { .. } => Err(Error::Unsupported("custom families have no canonical model".into())),
    }
}
