//! Exact rational polytopes in dimension 3.
//!
//! `Polytope` is the public exact layer: rational vertices, facet
//! halfspaces with primitive integer normals and rational offsets.
//! All hull work clears denominators and runs the integer hull core.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::hullcore::{affine_rank3, facets3, hull2, vertices3};
use crate::latpoly::{LatPoint, LatPolytope};
use crate::poly2::{Point2, Polygon};
use crate::rat::{is_integer, rat, rat_ceil, rat_floor, Int, Rat};

pub type Point3 = [Rat; 3];

pub fn pt3(x: i64, y: i64, z: i64) -> Point3 {
    [rat(x), rat(y), rat(z)]
}

pub fn pt3_from_lat(p: &LatPoint) -> Point3 {
    [rat(p[0]), rat(p[1]), rat(p[2])]
}

/// `<normal, x> <= offset` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: [Int; 3],
    pub offset: Rat,
}

/// Convex hull of finitely many rational points.
///
/// `verts` is the canonical (lexicographically sorted) list of extreme
/// points. `facets` is populated only when `dim == 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    verts: Vec<Point3>,
    facets: Vec<Halfspace>,
    dim: i32,
}

fn lcm_denoms3(pts: &[Point3]) -> Int {
    let mut l = Int::one();
    for p in pts {
        for c in p {
            l = l.lcm(c.denom());
        }
    }
    l
}

fn scale_pt3(p: &Point3, l: &Int) -> [Int; 3] {
    let s = |c: &Rat| (c * Rat::from_integer(l.clone())).to_integer();
    [s(&p[0]), s(&p[1]), s(&p[2])]
}

fn dot_int_rat3(n: &[Int; 3], p: &Point3) -> Rat {
    Rat::from_integer(n[0].clone()) * &p[0]
        + Rat::from_integer(n[1].clone()) * &p[1]
        + Rat::from_integer(n[2].clone()) * &p[2]
}

impl Polytope {
    /// Convex hull. Lower-dimensional inputs keep only the extreme points.
    pub fn hull(points: &[Point3]) -> Self {
        assert!(!points.is_empty(), "hull of empty point set");
        let l = lcm_denoms3(points);
        let mut scaled: Vec<[Int; 3]> = points.iter().map(|p| scale_pt3(p, &l)).collect();
        scaled.sort();
        scaled.dedup();
        let rank = affine_rank3(&scaled);
        let unscale = |q: &[Int; 3]| -> Point3 {
            [
                Rat::new(q[0].clone(), l.clone()),
                Rat::new(q[1].clone(), l.clone()),
                Rat::new(q[2].clone(), l.clone()),
            ]
        };
        match rank {
            3 => {
                let facets_scaled = facets3(&scaled);
                let mut vs = vertices3(&scaled, &facets_scaled);
                vs.sort();
                let verts = vs.iter().map(unscale).collect();
                let facets = facets_scaled
                    .into_iter()
                    .map(|(n, c)| Halfspace {
                        offset: Rat::new(c, l.clone()),
                        normal: n,
                    })
                    .collect();
                Polytope { verts, facets, dim: 3 }
            }
            2 => {
                // project out the normal's largest coordinate, hull in 2D
                let a = &scaled[0];
                let mut n = [Int::from(0), Int::from(0), Int::from(0)];
                'outer: for i in 1..scaled.len() {
                    for j in (i + 1)..scaled.len() {
                        let u = [&scaled[i][0] - &a[0], &scaled[i][1] - &a[1], &scaled[i][2] - &a[2]];
                        let v = [&scaled[j][0] - &a[0], &scaled[j][1] - &a[1], &scaled[j][2] - &a[2]];
                        let c = [
                            &u[1] * &v[2] - &u[2] * &v[1],
                            &u[2] * &v[0] - &u[0] * &v[2],
                            &u[0] * &v[1] - &u[1] * &v[0],
                        ];
                        if c.iter().any(|x| *x != Int::from(0)) {
                            n = c;
                            break 'outer;
                        }
                    }
                }
                let drop = (0..3)
                    .max_by_key(|&i| {
                        let v: &Int = &n[i];
                        if v < &Int::from(0) { -v.clone() } else { v.clone() }
                    })
                    .unwrap();
                let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
                let proj: Vec<[Int; 2]> = scaled
                    .iter()
                    .map(|p| [p[keep[0]].clone(), p[keep[1]].clone()])
                    .collect();
                let ring = hull2(&proj);
                let mut verts: Vec<Point3> = ring
                    .iter()
                    .map(|q| {
                        let idx = proj.iter().position(|p| p == q).unwrap();
                        unscale(&scaled[idx])
                    })
                    .collect();
                verts.sort();
                verts.dedup();
                Polytope { verts, facets: Vec::new(), dim: 2 }
            }
            1 => {
                let mut vs = vec![scaled.first().unwrap().clone(), scaled.last().unwrap().clone()];
                vs.sort();
                let verts = vs.iter().map(unscale).collect();
                Polytope { verts, facets: Vec::new(), dim: 1 }
            }
            _ => Polytope {
                verts: vec![unscale(&scaled[0])],
                facets: Vec::new(),
                dim: 0,
            },
        }
    }

    pub fn from_lat(lp: &LatPolytope) -> Self {
        Polytope::hull(&lp.verts.iter().map(pt3_from_lat).collect::<Vec<_>>())
    }

    /// Integer-vertex polytopes convert to the fast lattice layer.
    pub fn to_lat(&self) -> Option<LatPolytope> {
        if self.dim != 3 {
            return None;
        }
        let mut pts = Vec::with_capacity(self.verts.len());
        for v in &self.verts {
            let mut p = [0i64; 3];
            for i in 0..3 {
                if !is_integer(&v[i]) {
                    return None;
                }
                p[i] = i64::try_from(v[i].numer()).ok()?;
            }
            pts.push(p);
        }
        LatPolytope::try_hull(&pts)
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    /// Canonical (lexicographically sorted) vertex list.
    pub fn vertices(&self) -> &[Point3] {
        &self.verts
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn contains(&self, p: &Point3) -> bool {
        match self.dim {
            3 => self
                .facets
                .iter()
                .all(|f| dot_int_rat3(&f.normal, p) <= f.offset),
            0 => self.verts[0] == *p,
            1 => {
                let a = &self.verts[0];
                let b = &self.verts[1];
                let d = [&b[0] - &a[0], &b[1] - &a[1], &b[2] - &a[2]];
                let v = [&p[0] - &a[0], &p[1] - &a[1], &p[2] - &a[2]];
                let cross_zero = (0..3).all(|i| {
                    let j = (i + 1) % 3;
                    &d[i] * &v[j] - &d[j] * &v[i] == rat(0)
                });
                if !cross_zero {
                    return false;
                }
                let t = (0..3).map(|i| &d[i] * &v[i]).sum::<Rat>();
                let len2 = (0..3).map(|i| &d[i] * &d[i]).sum::<Rat>();
                t >= rat(0) && t <= len2
            }
            _ => {
                // planar: extend with the point and compare hulls
                let mut pts = self.verts.clone();
                pts.push(p.clone());
                Polytope::hull(&pts).verts == self.verts
            }
        }
    }

    pub fn strictly_contains(&self, p: &Point3) -> bool {
        self.dim == 3
            && self
                .facets
                .iter()
                .all(|f| dot_int_rat3(&f.normal, p) < f.offset)
    }

    fn bbox_int(&self) -> ([i64; 3], [i64; 3]) {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for p in &self.verts {
            for i in 0..3 {
                let f: i64 = i64::try_from(&rat_floor(&p[i])).expect("coordinate fits i64");
                let c: i64 = i64::try_from(&rat_ceil(&p[i])).expect("coordinate fits i64");
                lo[i] = lo[i].min(f);
                hi[i] = hi[i].max(c);
            }
        }
        (lo, hi)
    }

    /// All integer points, lexicographically sorted.
    pub fn integer_points(&self) -> Vec<LatPoint> {
        let (lo, hi) = self.bbox_int();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if self.contains(&pt3(x, y, z)) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// No integer point in the interior. Requires full dimension.
    pub fn is_lattice_free(&self) -> bool {
        assert_eq!(self.dim, 3, "lattice-freeness needs a full-dimensional polytope");
        let (lo, hi) = self.bbox_int();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if self.strictly_contains(&pt3(x, y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact volume via a fan triangulation from the first vertex.
    pub fn volume(&self) -> Rat {
        assert_eq!(self.dim, 3, "volume needs a full-dimensional polytope");
        let apex = &self.verts[0];
        let mut six_vol = rat(0);
        for (fi, f) in self.facets.iter().enumerate() {
            if dot_int_rat3(&f.normal, apex) == f.offset {
                continue;
            }
            let ring = self.facet_ring(fi);
            for k in 1..ring.len() - 1 {
                let d = |p: &Point3| [&p[0] - &apex[0], &p[1] - &apex[1], &p[2] - &apex[2]];
                let u = d(&ring[0]);
                let v = d(&ring[k]);
                let w = d(&ring[k + 1]);
                let det = &u[0] * (&v[1] * &w[2] - &v[2] * &w[1])
                    - &u[1] * (&v[0] * &w[2] - &v[2] * &w[0])
                    + &u[2] * (&v[0] * &w[1] - &v[1] * &w[0]);
                six_vol += if det < rat(0) { -det } else { det };
            }
        }
        six_vol / rat(6)
    }

    /// Vertices of facet `fi` in cyclic order.
    pub fn facet_ring(&self, fi: usize) -> Vec<Point3> {
        let f = &self.facets[fi];
        let tight: Vec<Point3> = self
            .verts
            .iter()
            .filter(|v| dot_int_rat3(&f.normal, v) == f.offset)
            .cloned()
            .collect();
        let l = lcm_denoms3(&tight);
        let scaled: Vec<[Int; 3]> = tight.iter().map(|p| scale_pt3(p, &l)).collect();
        let drop = (0..3)
            .max_by_key(|&i| {
                let v: &Int = &f.normal[i];
                if v < &Int::from(0) { -v.clone() } else { v.clone() }
            })
            .unwrap();
        let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
        let proj: Vec<[Int; 2]> = scaled
            .iter()
            .map(|p| [p[keep[0]].clone(), p[keep[1]].clone()])
            .collect();
        hull2(&proj)
            .iter()
            .map(|q| {
                let idx = proj.iter().position(|p| p == q).unwrap();
                tight[idx].clone()
            })
            .collect()
    }

    /// P - P, the difference body.
    pub fn difference_body(&self) -> Polytope {
        let mut diffs = Vec::with_capacity(self.verts.len() * self.verts.len());
        for a in &self.verts {
            for b in &self.verts {
                diffs.push([&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]);
            }
        }
        Polytope::hull(&diffs)
    }

    pub fn support(&self, u: &[i64; 3]) -> Rat {
        let n = [BigInt::from(u[0]), BigInt::from(u[1]), BigInt::from(u[2])];
        self.verts
            .iter()
            .map(|p| dot_int_rat3(&n, p))
            .max()
            .expect("support of empty polytope")
    }

    pub fn width_in_direction(&self, u: &[i64; 3]) -> Rat {
        self.support(u) + self.support(&[-u[0], -u[1], -u[2]])
    }

    /// Integer point in the relative interior of facet `fi`, if any.
    pub fn facet_interior_point(&self, fi: usize) -> Option<LatPoint> {
        assert_eq!(self.dim, 3);
        let f = &self.facets[fi];
        let ring = self.facet_ring(fi);
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for p in &ring {
            for i in 0..3 {
                lo[i] = lo[i].min(i64::try_from(&rat_floor(&p[i])).unwrap());
                hi[i] = hi[i].max(i64::try_from(&rat_ceil(&p[i])).unwrap());
            }
        }
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = pt3(x, y, z);
                    if dot_int_rat3(&f.normal, &p) != f.offset {
                        continue;
                    }
                    let strict_elsewhere = self
                        .facets
                        .iter()
                        .enumerate()
                        .all(|(j, g)| j == fi || dot_int_rat3(&g.normal, &p) < g.offset);
                    if strict_elsewhere {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Intersection with the plane x3 = t, projected to the first two
    /// coordinates.
    pub fn slice_at_height(&self, t: &Rat) -> Polygon {
        assert_eq!(self.dim, 3, "slice needs a full-dimensional polytope");
        let mut pts: Vec<Point2> = Vec::new();
        for v in &self.verts {
            if &v[2] == t {
                pts.push([v[0].clone(), v[1].clone()]);
            }
        }
        let n = self.verts.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.is_edge(i, j) {
                    continue;
                }
                let (a, b) = (&self.verts[i], &self.verts[j]);
                let da = &a[2] - t;
                let db = &b[2] - t;
                if (&da < &rat(0) && &db > &rat(0)) || (&da > &rat(0) && &db < &rat(0)) {
                    let s = (t - &a[2]) / (&b[2] - &a[2]);
                    pts.push([
                        &a[0] + &s * (&b[0] - &a[0]),
                        &a[1] + &s * (&b[1] - &a[1]),
                    ]);
                }
            }
        }
        if pts.is_empty() {
            return Polygon::empty();
        }
        Polygon::hull(&pts)
    }

    /// Vertices i, j share an edge iff their common tight facets span
    /// a rank-2 normal space.
    fn is_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.verts[i], &self.verts[j]);
        let common: Vec<&Halfspace> = self
            .facets
            .iter()
            .filter(|f| {
                dot_int_rat3(&f.normal, a) == f.offset && dot_int_rat3(&f.normal, b) == f.offset
            })
            .collect();
        for (x, f) in common.iter().enumerate() {
            for g in common.iter().skip(x + 1) {
                let c = [
                    &f.normal[1] * &g.normal[2] - &f.normal[2] * &g.normal[1],
                    &f.normal[2] * &g.normal[0] - &f.normal[0] * &g.normal[2],
                    &f.normal[0] * &g.normal[1] - &f.normal[1] * &g.normal[0],
                ];
                if c.iter().any(|v| *v != Int::from(0)) {
                    return true;
                }
            }
        }
        false
    }

    pub fn translate(&self, v: &Point3) -> Polytope {
        let pts: Vec<Point3> = self
            .verts
            .iter()
            .map(|p| [&p[0] + &v[0], &p[1] + &v[1], &p[2] + &v[2]])
            .collect();
        Polytope::hull(&pts)
    }

    pub fn is_integral(&self) -> bool {
        self.verts.iter().all(|p| p.iter().all(is_integer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;

    fn cube() -> Polytope {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(pt3(x, y, z));
                }
            }
        }
        Polytope::hull(&pts)
    }

    #[test]
    fn cube_basics() {
        let c = cube();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.volume(), rat(1));
        assert_eq!(c.integer_points().len(), 8);
        assert!(c.is_lattice_free());
    }

    #[test]
    fn double_cube_volume_and_interior() {
        let pts: Vec<Point3> = [[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2], [2, 2, 0], [2, 0, 2], [0, 2, 2], [2, 2, 2]]
            .iter()
            .map(|p| pt3(p[0], p[1], p[2]))
            .collect();
        let c = Polytope::hull(&pts);
        assert_eq!(c.volume(), rat(8));
        assert!(!c.is_lattice_free());
        assert!(c.strictly_contains(&pt3(1, 1, 1)));
    }

    #[test]
    fn rational_simplex_volume() {
        // conv(o, e1/2, e2, e3): volume 1/12
        let s = Polytope::hull(&[
            pt3(0, 0, 0),
            [rat_frac(1, 2), rat(0), rat(0)],
            pt3(0, 1, 0),
            pt3(0, 0, 1),
        ]);
        assert_eq!(s.volume(), rat_frac(1, 12));
    }

    #[test]
    fn lat_round_trip() {
        let c = cube();
        let lp = c.to_lat().unwrap();
        assert_eq!(lp.verts.len(), 8);
        assert_eq!(Polytope::from_lat(&lp), c);
    }

    #[test]
    fn planar_hull_keeps_extremes() {
        let p = Polytope::hull(&[pt3(0, 0, 0), pt3(2, 0, 0), pt3(0, 2, 0), pt3(1, 1, 0)]);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices().len(), 3);
        assert!(p.contains(&pt3(1, 1, 0)));
        assert!(!p.contains(&pt3(2, 2, 0)));
        assert!(!p.contains(&pt3(1, 1, 1)));
    }

    #[test]
    fn segment_and_point_hulls() {
        let seg = Polytope::hull(&[pt3(0, 0, 0), pt3(1, 1, 1), pt3(2, 2, 2)]);
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices().len(), 2);
        assert!(seg.contains(&pt3(1, 1, 1)));
        assert!(!seg.contains(&pt3(3, 3, 3)));
        let pt = Polytope::hull(&[pt3(5, 5, 5)]);
        assert_eq!(pt.dim(), 0);
        assert!(pt.contains(&pt3(5, 5, 5)));
        assert!(!pt.contains(&pt3(5, 5, 6)));
    }

    #[test]
    fn difference_body_of_cube() {
        let d = cube().difference_body();
        assert_eq!(d.volume(), rat(8));
        assert!(d.contains(&pt3(0, 0, 0)));
        // o-symmetry
        for v in d.vertices() {
            let neg = [-&v[0], -&v[1], -&v[2]];
            assert!(d.vertices().contains(&neg));
        }
    }

    #[test]
    fn slice_of_simplex() {
        // conv(o, 2e1, 2e2, 2e3) sliced at height 1 is conv((0,0),(1,0),(0,1))
        let s = Polytope::hull(&[pt3(0, 0, 0), pt3(2, 0, 0), pt3(0, 2, 0), pt3(0, 0, 2)]);
        let slice = s.slice_at_height(&rat(1));
        assert_eq!(slice.dim(), 2);
        assert_eq!(
            slice.canonical_vertices(),
            vec![pt2_(0, 0), pt2_(0, 1), pt2_(1, 0)]
        );
        // slice at apex height is a single point
        let top = s.slice_at_height(&rat(2));
        assert_eq!(top.dim(), 0);
        // empty slice above
        assert!(s.slice_at_height(&rat(3)).is_empty());
        // half-integral slice
        let half = s.slice_at_height(&rat_frac(1, 2));
        assert_eq!(half.dim(), 2);
        assert!(half.contains(&[rat_frac(3, 2), rat(0)]));
    }

    fn pt2_(x: i64, y: i64) -> crate::poly2::Point2 {
        [rat(x), rat(y)]
    }

    #[test]
    fn facet_interior_point_on_simplex() {
        // conv(o, 2e1, 2e2, 2e3): no facet has an integer point in its
        // relative interior, e.g. (1,1,0) lies on the edge shared by the
        // z=0 facet and the slanted facet
        let s = Polytope::hull(&[pt3(0, 0, 0), pt3(2, 0, 0), pt3(0, 2, 0), pt3(0, 0, 2)]);
        let blocked = (0..s.facets().len())
            .filter(|&fi| s.facet_interior_point(fi).is_some())
            .count();
        assert_eq!(blocked, 0);
        // conv(o, 4e1, 4e2, 2e3) by contrast has every facet blocked
        let m = Polytope::hull(&[pt3(0, 0, 0), pt3(4, 0, 0), pt3(0, 4, 0), pt3(0, 0, 2)]);
        let blocked_m = (0..m.facets().len())
            .filter(|&fi| m.facet_interior_point(fi).is_some())
            .count();
        assert_eq!(blocked_m, 4);
    }

    #[test]
    fn width_of_cube() {
        let c = cube();
        assert_eq!(c.width_in_direction(&[1, 0, 0]), rat(1));
        assert_eq!(c.width_in_direction(&[1, 1, 1]), rat(3));
    }
}
