//! Full-dimensional integral polytopes with `i64` coordinates.
//!
//! This is the workhorse of the search pipeline: every polytope arising
//! there has small integer vertices, so all predicates run in machine
//! integer arithmetic (`i128` intermediates, which cannot overflow at the
//! coordinate ranges the search produces). The general rational layer in
//! `poly3` mirrors these operations for arbitrary exact inputs.

use crate::hullcore::{affine_rank3, det3, facets3, vertices3};

pub type LatPoint = [i64; 3];

/// `<normal, x> <= offset`, normal primitive and outward.
pub type LatFacet = ([i64; 3], i64);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatPolytope {
    /// Extreme points, lexicographically sorted.
    pub verts: Vec<LatPoint>,
    /// Irredundant facet halfspaces, sorted.
    pub facets: Vec<LatFacet>,
}

fn widen(p: &LatPoint) -> [i128; 3] {
    [p[0] as i128, p[1] as i128, p[2] as i128]
}

fn narrow(p: &[i128; 3]) -> LatPoint {
    [p[0] as i64, p[1] as i64, p[2] as i64]
}

pub fn dot(n: &[i64; 3], p: &LatPoint) -> i128 {
    n[0] as i128 * p[0] as i128 + n[1] as i128 * p[1] as i128 + n[2] as i128 * p[2] as i128
}

pub fn gcd3_i64(v: &[i64; 3]) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    gcd(gcd(v[0], v[1]), v[2])
}

impl LatPolytope {
    /// Hull of a point set; `None` when the set is not full-dimensional.
    pub fn try_hull(points: &[LatPoint]) -> Option<Self> {
        let wide: Vec<[i128; 3]> = points.iter().map(widen).collect();
        if affine_rank3(&wide) < 3 {
            return None;
        }
        let facets_wide = facets3(&wide);
        let verts_wide = vertices3(&wide, &facets_wide);
        let verts: Vec<LatPoint> = verts_wide.iter().map(narrow).collect();
        let mut facets: Vec<LatFacet> = facets_wide
            .iter()
            .map(|(n, c)| ([n[0] as i64, n[1] as i64, n[2] as i64], *c as i64))
            .collect();
        facets.sort();
        Some(LatPolytope { verts, facets })
    }

    pub fn hull(points: &[LatPoint]) -> Self {
        Self::try_hull(points).expect("point set is not full-dimensional")
    }

    pub fn contains(&self, p: &LatPoint) -> bool {
        self.facets.iter().all(|(n, c)| dot(n, p) <= *c as i128)
    }

    pub fn strictly_contains(&self, p: &LatPoint) -> bool {
        self.facets.iter().all(|(n, c)| dot(n, p) < *c as i128)
    }

    pub fn bbox(&self) -> (LatPoint, LatPoint) {
        let mut lo = self.verts[0];
        let mut hi = self.verts[0];
        for v in &self.verts {
            for i in 0..3 {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        (lo, hi)
    }

    /// All integer points of the polytope, lexicographically sorted.
    pub fn integer_points(&self) -> Vec<LatPoint> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    if self.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// No integer point in the interior.
    pub fn is_lattice_free(&self) -> bool {
        let (lo, hi) = self.bbox();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if self.strictly_contains(&[x, y, z]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Max over integer-point pairs of the gcd of the difference; 0 when the
    /// polytope holds at most one integer point. Also returns a witness pair.
    pub fn lattice_diameter(&self) -> (i64, Option<(LatPoint, LatPoint)>) {
        let pts = self.integer_points();
        let mut best = 0i64;
        let mut wit = None;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let d = [
                    pts[j][0] - pts[i][0],
                    pts[j][1] - pts[i][1],
                    pts[j][2] - pts[i][2],
                ];
                let g = gcd3_i64(&d);
                if g > best {
                    best = g;
                    wit = Some((pts[i], pts[j]));
                }
            }
        }
        (best, wit)
    }

    /// Early-exit check that no integer-point pair has gcd above `l`;
    /// integer points are collected incrementally so a violating pair
    /// aborts the bounding-box scan.
    pub fn lattice_diameter_at_most(&self, l: i64) -> bool {
        let (lo, hi) = self.bbox();
        let mut pts: Vec<LatPoint> = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    if !self.contains(&p) {
                        continue;
                    }
                    for q in &pts {
                        let d = [p[0] - q[0], p[1] - q[1], p[2] - q[2]];
                        if gcd3_i64(&d) > l {
                            return false;
                        }
                    }
                    pts.push(p);
                }
            }
        }
        true
    }

    /// 6 times the volume (an exact integer for integral polytopes).
    pub fn volume6(&self) -> i128 {
        let v0 = widen(&self.verts[0]);
        let mut total: i128 = 0;
        for (n, c) in &self.facets {
            if dot(n, &self.verts[0]) == *c as i128 {
                continue;
            }
            let tight: Vec<LatPoint> = self
                .verts
                .iter()
                .copied()
                .filter(|v| dot(n, v) == *c as i128)
                .collect();
            let ring = facet_ring(&tight, n);
            for i in 1..ring.len() - 1 {
                let a = widen(&ring[0]);
                let b = widen(&ring[i]);
                let c3 = widen(&ring[i + 1]);
                let d = det3(
                    &[a[0] - v0[0], a[1] - v0[1], a[2] - v0[2]],
                    &[b[0] - v0[0], b[1] - v0[1], b[2] - v0[2]],
                    &[c3[0] - v0[0], c3[1] - v0[1], c3[2] - v0[2]],
                );
                total += d.abs();
            }
        }
        total
    }

    /// Hull of all pairwise vertex differences; o-symmetric.
    pub fn difference_body(&self) -> LatPolytope {
        let mut pts = Vec::with_capacity(self.verts.len() * self.verts.len());
        for a in &self.verts {
            for b in &self.verts {
                pts.push([a[0] - b[0], a[1] - b[1], a[2] - b[2]]);
            }
        }
        LatPolytope::hull(&pts)
    }

    pub fn is_o_symmetric(&self) -> bool {
        self.verts
            .iter()
            .all(|v| self.verts.binary_search(&[-v[0], -v[1], -v[2]]).is_ok())
    }

    /// For an o-symmetric body `C`: true iff (1/4)C contains no nonzero
    /// integer point, i.e. the first successive minimum exceeds 1/4.
    pub fn first_minimum_exceeds_quarter(&self) -> bool {
        assert!(self.is_o_symmetric(), "difference body must be o-symmetric");
        let (lo, hi) = self.bbox();
        let lo = [lo[0].div_euclid(4), lo[1].div_euclid(4), lo[2].div_euclid(4)];
        let hi = [
            hi[0].div_euclid(4) + 1,
            hi[1].div_euclid(4) + 1,
            hi[2].div_euclid(4) + 1,
        ];
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if x == 0 && y == 0 && z == 0 {
                        continue;
                    }
                    // x in (1/4)C  <=>  4x in C
                    if self.contains(&[4 * x, 4 * y, 4 * z]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Integer point in the relative interior of facet `idx`, if any:
    /// on the facet plane and strictly inside every other facet.
    pub fn facet_interior_point(&self, idx: usize) -> Option<LatPoint> {
        let (n, c) = &self.facets[idx];
        let tight: Vec<LatPoint> = self
            .verts
            .iter()
            .copied()
            .filter(|v| dot(n, v) == *c as i128)
            .collect();
        let mut lo = tight[0];
        let mut hi = tight[0];
        for v in &tight {
            for i in 0..3 {
                lo[i] = lo[i].min(v[i]);
                hi[i] = hi[i].max(v[i]);
            }
        }
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    let p = [x, y, z];
                    if dot(n, &p) != *c as i128 {
                        continue;
                    }
                    let inside = self
                        .facets
                        .iter()
                        .enumerate()
                        .all(|(j, (m, d))| j == idx || dot(m, &p) < *d as i128);
                    if inside {
                        return Some(p);
                    }
                }
            }
        }
        None
    }

    /// Every facet holds an integer point in its relative interior.
    pub fn all_facets_blocked(&self) -> bool {
        (0..self.facets.len()).all(|i| self.facet_interior_point(i).is_some())
    }
}

/// Orders the vertices of a facet into a convex ring by projecting out the
/// normal's largest component (the projection keeps convex position).
fn facet_ring(tight: &[LatPoint], normal: &[i64; 3]) -> Vec<LatPoint> {
    let drop = (0..3)
        .max_by_key(|&i| normal[i].abs())
        .unwrap();
    let keep: [usize; 2] = match drop {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let proj: Vec<[i128; 2]> = tight
        .iter()
        .map(|v| [v[keep[0]] as i128, v[keep[1]] as i128])
        .collect();
    let ring2 = crate::hullcore::hull2(&proj);
    ring2
        .iter()
        .map(|q| {
            tight
                .iter()
                .copied()
                .find(|v| v[keep[0]] as i128 == q[0] && v[keep[1]] as i128 == q[1])
                .expect("projected ring point present")
        })
        .collect()
}

/// Width of a point set in an integer direction (no hull needed).
pub fn width_of_points(points: &[LatPoint], dir: &[i64; 3]) -> i128 {
    let mut lo = dot(dir, &points[0]);
    let mut hi = lo;
    for p in &points[1..] {
        let s = dot(dir, p);
        lo = lo.min(s);
        hi = hi.max(s);
    }
    hi - lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_cube() -> LatPolytope {
        LatPolytope::hull(&[
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
        ])
    }

    #[test]
    fn cube_basics() {
        let c = unit_cube();
        assert_eq!(c.verts.len(), 8);
        assert_eq!(c.facets.len(), 6);
        assert_eq!(c.volume6(), 6);
        assert_eq!(c.integer_points().len(), 8);
        assert!(c.is_lattice_free());
    }

    #[test]
    fn double_cube_has_interior_point() {
        let c = LatPolytope::hull(&[
            [0, 0, 0],
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 2],
            [2, 2, 0],
            [2, 0, 2],
            [0, 2, 2],
            [2, 2, 2],
        ]);
        assert!(!c.is_lattice_free());
        assert!(c.strictly_contains(&[1, 1, 1]));
    }

    #[test]
    fn diameter_of_segment_hulls() {
        // conv(o, 3e1) thickened to full dimension keeps the axis segment
        let p = LatPolytope::hull(&[[0, 0, 0], [3, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let (ld, wit) = p.lattice_diameter();
        assert_eq!(ld, 3);
        let (a, b) = wit.unwrap();
        assert_eq!(gcd3_i64(&[b[0] - a[0], b[1] - a[1], b[2] - a[2]]), 3);
    }

    #[test]
    fn difference_body_of_cube() {
        let c = unit_cube();
        let d = c.difference_body();
        assert!(d.is_o_symmetric());
        assert_eq!(d.volume6(), 8 * 6);
        assert!(d.first_minimum_exceeds_quarter()); // (1/4)[-1,1]^3 has only o
    }

    #[test]
    fn quarter_test_detects_large_body() {
        let c = LatPolytope::hull(&[
            [-5, -5, -5],
            [5, -5, -5],
            [-5, 5, -5],
            [-5, -5, 5],
            [5, 5, -5],
            [5, -5, 5],
            [-5, 5, 5],
            [5, 5, 5],
        ]);
        assert!(!c.first_minimum_exceeds_quarter()); // e1 lies in (1/4)C
    }

    #[test]
    fn tetrahedron_difference_body_factor_20() {
        let t = LatPolytope::hull(&[[0, 0, 0], [2, 0, 0], [0, 1, 0], [0, 0, 3]]);
        assert_eq!(t.volume6(), 6);
        assert_eq!(t.difference_body().volume6(), 20 * 6);
    }

    #[test]
    fn blocked_facets_of_m44() {
        let m = LatPolytope::hull(&[[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 2]]);
        // base facet z = 0 holds (1,1,0) in its relative interior
        let base = m
            .facets
            .iter()
            .position(|(n, c)| *n == [0, 0, -1] && *c == 0)
            .unwrap();
        assert_eq!(m.facet_interior_point(base), Some([1, 1, 0]));
        assert!(m.all_facets_blocked());
    }

    #[test]
    fn unit_simplex_facet_not_blocked() {
        let s = LatPolytope::hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert!(!s.all_facets_blocked());
    }
}
