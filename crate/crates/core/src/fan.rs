//! Cones and fans over L, star subdivisions and tiling checks.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::geom::{self, cross, det, dot, primitive, V3};
use crate::lattice::{GroupType, LatticePoint};

/// A pointed full-dimensional cone: simplicial, or a four-ray cone with planar cross-section.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    rays: Vec<LatticePoint>,
}

impl Cone {
    /// Simplicial cones keep the given order; four-ray cones are put in cyclic order.
    pub fn new(rays: Vec<LatticePoint>) -> Result<Self> {
        let vs: Vec<V3> = rays.iter().map(|p| p.0).collect();
        for i in 0..vs.len() {
            if vs[i] == [0, 0, 0] {
                return Err(Error::InvalidCone("zero ray".into()));
            }
            for j in i + 1..vs.len() {
                if cross(&vs[i], &vs[j]) == [0, 0, 0] {
                    return Err(Error::InvalidCone(format!("rays {:?} and {:?} are proportional", vs[i], vs[j])));
                }
            }
        }
        match vs.len() {
            3 => {
                if det(&vs[0], &vs[1], &vs[2]) == 0 {
                    return Err(Error::NotFullDimensional);
                }
                Ok(Cone { rays })
            }
            4 => {
                if geom::rank(&vs) < 3 {
                    return Err(Error::NotFullDimensional);
                }
                let cone = Cone { rays };
                let order = cone.cyclic_order()?;
                Ok(Cone { rays: order.into_iter().map(|i| cone.rays[i]).collect() })
            }
            n => Err(Error::InvalidCone(format!("{n} rays; only 3 or 4 are supported"))),
        }
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == 3
    }

    pub fn ray_vectors(&self) -> Vec<V3> {
        self.rays.iter().map(|p| p.0).collect()
    }

    /// Inner facet normals as primitive integer vectors, one per facet.
    pub fn facet_normals(&self) -> Result<Vec<V3>> {
        let vs = self.ray_vectors();
        let mut out: Vec<V3> = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let c = primitive(cross(&vs[i], &vs[j]));
                for cand in [c, c.map(|x| -x)] {
                    let vals: Vec<i128> = vs.iter().map(|u| dot(&cand, u)).collect();
                    if vals.iter().all(|&x| x >= 0) && vals.iter().any(|&x| x > 0) && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        if out.len() < vs.len() {
            return Err(Error::NotPointed);
        }
        if vs.len() == 4 {
            for c in &out {
                let zeros = vs.iter().filter(|u| dot(c, u) == 0).count();
                if zeros != 2 {
                    return Err(Error::InvalidCone("four-ray cone whose cross-section is not a quadrilateral".into()));
                }
            }
        }
        Ok(out)
    }

    /// Indices of the rays in cyclic order around the cone.
    fn cyclic_order(&self) -> Result<Vec<usize>> {
        let vs = self.ray_vectors();
        let normals = self.facet_normals()?;
        if normals.len() != vs.len() {
            return Err(Error::InvalidCone("unexpected facet count".into()));
        }
        let adjacent = |a: usize, b: usize| normals.iter().any(|c| dot(c, &vs[a]) == 0 && dot(c, &vs[b]) == 0);
        let mut order = vec![0usize];
        while order.len() < vs.len() {
            let last = *order.last().unwrap();
            let next = (0..vs.len())
                .find(|&j| !order.contains(&j) && adjacent(last, j))
                .ok_or_else(|| Error::InvalidCone("rays do not form a cycle".into()))?;
            order.push(next);
        }
        Ok(order)
    }

    /// Pairs of rays spanning two-dimensional faces.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.rays.len();
        if n == 3 {
            vec![(self.rays[0], self.rays[1]), (self.rays[1], self.rays[2]), (self.rays[0], self.rays[2])]
        } else {
            (0..n).map(|i| (self.rays[i], self.rays[(i + 1) % n])).collect()
        }
    }

    /// Closed containment of a point (any integer scaling of L coordinates).
    pub fn contains(&self, p: &V3) -> bool {
        self.facet_normals().map(|ns| ns.iter().all(|c| dot(c, p) >= 0)).unwrap_or(false)
    }

    pub fn contains_in_interior(&self, p: &V3) -> bool {
        self.facet_normals().map(|ns| ns.iter().all(|c| dot(c, p) > 0)).unwrap_or(false)
    }

    /// Rays as a set, for comparisons that ignore order.
    pub fn ray_set(&self) -> BTreeSet<LatticePoint> {
        self.rays.iter().copied().collect()
    }

    pub fn same_rays(&self, other: &Cone) -> bool {
        self.ray_set() == other.ray_set()
    }

    /// A point in the interior: the sum of the rays.
    pub fn interior_point(&self) -> V3 {
        let mut s = [0i64; 3];
        for p in &self.rays {
            for i in 0..3 {
                s[i] += p.0[i];
            }
        }
        s
    }

    /// Split into simplicial cones without new rays.
    pub fn triangulate(&self) -> Vec<[LatticePoint; 3]> {
        if self.is_simplicial() {
            vec![[self.rays[0], self.rays[1], self.rays[2]]]
        } else {
            let r = &self.rays;
            vec![[r[0], r[1], r[2]], [r[0], r[2], r[3]]]
        }
    }

    pub fn display(&self, g: &GroupType) -> String {
        let parts: Vec<String> = self.rays.iter().map(|p| label_point(g, p)).collect();
        format!("Cone({})", parts.join(", "))
    }
}

/// e1, e2, e3 for the axes, v<t> for box points, numerators otherwise.
pub fn label_point(g: &GroupType, p: &LatticePoint) -> String {
    for i in 0..3 {
        if *p == g.axis(i) {
            return format!("e{}", i + 1);
        }
    }
    if p.0.iter().all(|&x| (0..g.order()).contains(&x)) {
        if let Some(t) = g.class_of(p) {
            if g.point(t) == *p {
                return format!("v{t}");
            }
        }
    }
    g.fmt_point(p)
}

/// A fan of maximal cones over L, stored with a canonical ray order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fan {
    group: GroupType,
    rays: Vec<LatticePoint>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn from_cones(group: &GroupType, cones: &[Cone]) -> Result<Self> {
        let mut rays: BTreeSet<LatticePoint> = BTreeSet::new();
        for c in cones {
            for p in c.rays() {
                if !group.is_primitive(p) {
                    return Err(Error::NotInLattice(format!("{} is not a primitive point of L", group.fmt_point(p))));
                }
                rays.insert(*p);
            }
        }
        let rays: Vec<LatticePoint> = rays.into_iter().collect();
        let mut idx: Vec<Vec<usize>> = cones
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.rays().iter().map(|p| rays.binary_search(p).unwrap()).collect();
                v.sort();
                v
            })
            .collect();
        idx.sort();
        idx.dedup();
        Ok(Fan { group: *group, rays, cones: idx })
    }

    pub fn from_ray_lists(group: &GroupType, lists: &[Vec<LatticePoint>]) -> Result<Self> {
        let cones: Vec<Cone> = lists.iter().map(|l| Cone::new(l.clone())).collect::<Result<_>>()?;
        Fan::from_cones(group, &cones)
    }

    /// Builds from an explicit ray table and index lists.
    pub fn from_indexed(group: &GroupType, rays: &[LatticePoint], cones: &[Vec<usize>]) -> Result<Self> {
        let lists: Vec<Vec<LatticePoint>> = cones
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| rays.get(i).copied().ok_or_else(|| Error::InvalidCone(format!("ray index {i} out of range"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let fan = Fan::from_ray_lists(group, &lists)?;
        let used: BTreeSet<LatticePoint> = fan.rays.iter().copied().collect();
        if let Some(p) = rays.iter().find(|p| !used.contains(p)) {
            return Err(Error::InvalidCone(format!("ray {} belongs to no cone", group.fmt_point(p))));
        }
        Ok(fan)
    }

    pub fn positive_octant(group: &GroupType) -> Self {
        Fan::from_cones(group, &[positive_octant(group)]).expect("octant is a valid cone")
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn cone_indices(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn cone(&self, i: usize) -> Cone {
        Cone::new(self.cones[i].iter().map(|&j| self.rays[j]).collect()).expect("fan cones are validated")
    }

    pub fn cones(&self) -> Vec<Cone> {
        (0..self.cones.len()).map(|i| self.cone(i)).collect()
    }

    pub fn find_cone(&self, c: &Cone) -> Option<usize> {
        (0..self.cones.len()).find(|&i| self.cone(i).same_rays(c))
    }

    /// Same maximal cones, ignoring storage order.
    pub fn same_cones(&self, other: &Fan) -> bool {
        let a: BTreeSet<BTreeSet<LatticePoint>> = self.cones().iter().map(|c| c.ray_set()).collect();
        let b: BTreeSet<BTreeSet<LatticePoint>> = other.cones().iter().map(|c| c.ray_set()).collect();
        a == b
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cones() {
            writeln!(f, "{}", c.display(&self.group))?;
        }
        Ok(())
    }
}

pub fn positive_octant(g: &GroupType) -> Cone {
    Cone::new(g.axes().to_vec()).expect("axes span")
}

/// Star subdivision of every cone of the fan containing v.
pub fn star_subdivide(fan: &Fan, v: &LatticePoint) -> Result<Fan> {
    let g = fan.group();
    if !g.contains(v) {
        return Err(Error::NotInLattice(g.fmt_point(v)));
    }
    if !g.is_primitive(v) {
        return Err(Error::InvalidCenter(format!("{} is not primitive", g.fmt_point(v))));
    }
    let mut out: Vec<Cone> = Vec::new();
    let mut touched = false;
    for c in fan.cones() {
        if !c.contains(&v.0) || c.rays().contains(v) {
            out.push(c);
            continue;
        }
        touched = true;
        for (a, b) in c.edges() {
            let facet_normal = primitive(cross(&a.0, &b.0));
            let on_facet = dot(&facet_normal, &v.0) == 0;
            if !on_facet {
                out.push(Cone::new(vec![a, b, *v])?);
            }
        }
    }
    if !touched && !fan.rays().contains(v) {
        return Err(Error::InvalidCenter(format!("{} lies in no cone of the fan", g.fmt_point(v))));
    }
    Fan::from_cones(g, &out)
}

/// Verdict of `cones_tile` with the first problem found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub ok: bool,
    pub problems: Vec<String>,
}

/// Cross-section area of a simplicial cone by the plane n₁+n₂+n₃ = 1, up to a fixed constant.
fn section_volume(t: &[LatticePoint; 3]) -> BigRational {
    let d = det(&t[0].0, &t[1].0, &t[2].0).abs();
    let s: i128 = t.iter().map(|p| p.numerator_sum() as i128).product();
    BigRational::new(d.into(), s.into())
}

pub fn cone_volume(c: &Cone) -> BigRational {
    c.triangulate().iter().map(section_volume).fold(BigRational::zero(), |a, b| a + b)
}

/// Checks that the maximal cones cover the ambient cone with disjoint interiors and meet in faces.
pub fn cones_tile(fan: &Fan, ambient: &Cone) -> Tiling {
    let g = fan.group();
    let mut problems = Vec::new();
    let cones = fan.cones();
    for p in ambient.rays().iter().chain(fan.rays()) {
        if p.0.iter().any(|&x| x < 0) || p.numerator_sum() <= 0 {
            problems.push(format!("ray {} leaves the positive octant", g.fmt_point(p)));
        }
    }
    if !problems.is_empty() {
        return Tiling { ok: false, problems };
    }
    for p in fan.rays() {
        if !ambient.contains(&p.0) {
            problems.push(format!("ray {} lies outside {}", label_point(g, p), ambient.display(g)));
        }
    }
    let normals: Vec<Vec<V3>> = cones.iter().map(|c| c.facet_normals().unwrap_or_default()).collect();
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let separated = |a: usize, b: usize| {
                normals[a].iter().any(|n| cones[b].rays().iter().all(|u| dot(n, &u.0) <= 0))
            };
            if !separated(i, j) && !separated(j, i) {
                problems.push(format!(
                    "{} and {} overlap",
                    cones[i].display(g),
                    cones[j].display(g)
                ));
            }
        }
    }
    for c in &cones {
        for p in fan.rays() {
            if !c.rays().contains(p) && c.contains(&p.0) {
                problems.push(format!("ray {} meets {} outside a common face", label_point(g, p), c.display(g)));
            }
        }
    }
    let total = cones.iter().map(cone_volume).fold(BigRational::zero(), |a, b| a + b);
    let want = cone_volume(ambient);
    if total != want {
        problems.push(format!("cross-section area {total} differs from the ambient {want}"));
    }
    Tiling { ok: problems.is_empty(), problems }
}
