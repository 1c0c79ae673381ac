//! Worked examples: the groups 1/20(1,3,4) and 1/39(1,5,11) with their model fans.

use crate::error::Result;
use crate::fan::{star_subdivide, Fan};
use crate::lattice::{GroupType, LatticePoint, RoundDownContext};
use crate::pipeline::{canonical_model_fan, detect_family};
use crate::scalar::Scalar;
use crate::stability::ThetaOf;

pub fn g20() -> GroupType {
    GroupType::new(20, [1, 3, 4]).expect("valid group")
}

pub fn g39() -> GroupType {
    GroupType::new(39, [1, 5, 11]).expect("valid group")
}

fn p(a: i64, b: i64, c: i64) -> LatticePoint {
    LatticePoint([a, b, c])
}

/// Star subdivision of the octant at (1,3,4)/20.
pub fn fig3() -> Fan {
    star_subdivide(&Fan::positive_octant(&g20()), &p(1, 3, 4)).expect("valid subdivision")
}

/// A relative minimal model of 1/20(1,3,4) over the star subdivision at v.
pub fn fig4() -> Fan {
    let g = g20();
    let [e1, e2, e3] = g.axes();
    let (v, v5, v7, v10, v15) = (p(1, 3, 4), p(5, 15, 0), p(7, 1, 8), p(10, 10, 0), p(15, 5, 0));
    Fan::from_ray_lists(
        &g,
        &[
            vec![v, e2, e3],
            vec![e1, v, v7],
            vec![v, e3, v7],
            vec![e1, v7, e3],
            vec![e2, v5, v],
            vec![v5, v10, v],
            vec![v10, v15, v],
            vec![v15, e1, v],
        ],
    )
    .expect("valid fan")
}

/// Box points v_i = i·(1,5,11)/39 used by the models of 1/39(1,5,11).
pub fn v39(i: i64) -> LatticePoint {
    g39().point(i)
}

/// Model Y of 1/39(1,5,11): admits a morphism to the subdivision at v₁.
pub fn model_y() -> Fan {
    let g = g39();
    let [e1, e2, e3] = g.axes();
    let [v1, v4, v8, v11, v18, v25, v32] = [1, 4, 8, 11, 18, 25, 32].map(v39);
    Fan::from_ray_lists(
        &g,
        &[
            vec![v1, e2, e3],
            vec![v1, v8, e3],
            vec![e1, v8, e3],
            vec![e1, v8, v1],
            vec![v1, e1, v32],
            vec![v1, v32, v25],
            vec![v1, v25, v18],
            vec![v1, v18, v11],
            vec![v1, v11, v4],
            vec![e2, e1, v32],
            vec![e2, v32, v25],
            vec![e2, v25, v18],
            vec![e2, v18, v11],
            vec![e2, v11, v4],
            vec![v1, v4, e2],
        ],
    )
    .expect("valid fan")
}

/// Model Z of 1/39(1,5,11): no morphism to the subdivision at v₁.
pub fn model_z() -> Fan {
    let g = g39();
    let [e1, e2, e3] = g.axes();
    let [v1, v4, v8, v11, v18, v25, v32] = [1, 4, 8, 11, 18, 25, 32].map(v39);
    Fan::from_ray_lists(
        &g,
        &[
            vec![v1, e2, e3],
            vec![v1, v8, e3],
            vec![e1, v8, e3],
            vec![v8, e1, v32],
            vec![v8, v32, v25],
            vec![v8, v25, v18],
            vec![v8, v18, v11],
            vec![v8, v11, v4],
            vec![v8, v4, v1],
            vec![e2, e1, v32],
            vec![e2, v32, v25],
            vec![e2, v25, v18],
            vec![e2, v18, v11],
            vec![e2, v11, v4],
            vec![e2, v4, v1],
        ],
    )
    .expect("valid fan")
}

/// The relative canonical model of 1/39(1,5,11), with the non-simplicial cone.
pub fn x_can_39() -> Result<Fan> {
    let g = g39();
    let tag = detect_family(&g).into_iter().next().expect("1/39(1,5,11) is in the second family");
    canonical_model_fan(&g, &tag)
}

/// The center u = v₄ of the alternative subdivision.
pub fn center_u() -> LatticePoint {
    v39(4)
}

/// The table for ϑ at u, indexed in u's presentation, exactly as printed (sums to 1).
pub fn z_vartheta_printed() -> Vec<i64> {
    (0..39).map(|i| if i <= 18 { -1 } else { 1 }).collect()
}

/// The printed table with the entry at 19 set to 0 so that it sums to zero.
pub fn z_vartheta<T: Scalar>() -> Result<ThetaOf<T>> {
    let ctx = RoundDownContext::new(&g39(), &center_u(), 0)?;
    let values: Vec<T> = (0..39).map(|i| T::from_int(if i <= 18 { -1 } else if i == 19 { 0 } else { 1 })).collect();
    ThetaOf::from_center_presentation(&ctx, &values)
}
