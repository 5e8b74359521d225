//! Exact rational polygons (dimension 2 layer).
//!
//! Polygons appear as horizontal slices of 3D polytopes and as the
//! half-integral catalog Q2..Q5. Arithmetic is exact: coordinates are
//! `Rat`, hull computation clears denominators and runs on `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::hullcore::{hull2, ring_edges2};
use crate::rat::{is_half_integer, is_integer, rat, rat_ceil, rat_floor, Int, Rat};

pub type Point2 = [Rat; 2];

pub fn pt2(x: i64, y: i64) -> Point2 {
    [rat(x), rat(y)]
}

/// `<normal, x> <= offset` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge2 {
    pub normal: [Int; 2],
    pub offset: Rat,
}

/// Convex hull of finitely many rational points in the plane.
///
/// `ring` lists the extreme points: counterclockwise starting at the
/// lexicographically smallest vertex when full-dimensional, sorted
/// lexicographically otherwise. `dim` is -1 for the empty polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    ring: Vec<Point2>,
    edges: Vec<Edge2>,
    dim: i32,
}

fn lcm_denoms2(pts: &[Point2]) -> Int {
    let mut l = Int::one();
    for p in pts {
        for c in p {
            l = l.lcm(c.denom());
        }
    }
    l
}

fn scale_pt2(p: &Point2, l: &Int) -> [Int; 2] {
    [
        (&p[0] * Rat::from_integer(l.clone())).to_integer(),
        (&p[1] * Rat::from_integer(l.clone())).to_integer(),
    ]
}

fn dot_int_rat2(n: &[Int; 2], p: &Point2) -> Rat {
    Rat::from_integer(n[0].clone()) * &p[0] + Rat::from_integer(n[1].clone()) * &p[1]
}

impl Polygon {
    pub fn empty() -> Self {
        Polygon { ring: Vec::new(), edges: Vec::new(), dim: -1 }
    }

    /// Convex hull; degenerate inputs yield dim < 2 with extreme points only.
    pub fn hull(points: &[Point2]) -> Self {
        if points.is_empty() {
            return Self::empty();
        }
        let l = lcm_denoms2(points);
        let scaled: Vec<[Int; 2]> = points.iter().map(|p| scale_pt2(p, &l)).collect();
        let ring_scaled = hull2(&scaled);
        let unscale = |q: &[Int; 2]| -> Point2 {
            [
                Rat::new(q[0].clone(), l.clone()),
                Rat::new(q[1].clone(), l.clone()),
            ]
        };
        if ring_scaled.len() <= 2 {
            let ring: Vec<Point2> = ring_scaled.iter().map(unscale).collect();
            let dim = ring.len() as i32 - 1;
            return Polygon { ring, edges: Vec::new(), dim };
        }
        // rotate ring to start at the lexicographic minimum
        let start = (0..ring_scaled.len())
            .min_by(|&a, &b| ring_scaled[a].cmp(&ring_scaled[b]))
            .unwrap();
        let rotated: Vec<[Int; 2]> = (0..ring_scaled.len())
            .map(|i| ring_scaled[(start + i) % ring_scaled.len()].clone())
            .collect();
        let edges = ring_edges2(&rotated)
            .into_iter()
            .map(|(n, c)| Edge2 {
                offset: Rat::new(c, l.clone()),
                normal: n,
            })
            .collect();
        let ring = rotated.iter().map(unscale).collect();
        Polygon { ring, edges, dim: 2 }
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    /// Extreme points in ring order (CCW when full-dimensional).
    pub fn vertices(&self) -> &[Point2] {
        &self.ring
    }

    pub fn edges(&self) -> &[Edge2] {
        &self.edges
    }

    /// Vertices in canonical (lexicographic) order.
    pub fn canonical_vertices(&self) -> Vec<Point2> {
        let mut v = self.ring.clone();
        v.sort();
        v
    }

    pub fn contains(&self, p: &Point2) -> bool {
        match self.dim {
            -1 => false,
            0 => self.ring[0] == *p,
            1 => {
                let a = &self.ring[0];
                let b = &self.ring[1];
                let d = [&b[0] - &a[0], &b[1] - &a[1]];
                let v = [&p[0] - &a[0], &p[1] - &a[1]];
                if &d[0] * &v[1] - &d[1] * &v[0] != rat(0) {
                    return false;
                }
                let t = &d[0] * &v[0] + &d[1] * &v[1];
                let len2 = &d[0] * &d[0] + &d[1] * &d[1];
                t >= rat(0) && t <= len2
            }
            _ => self
                .edges
                .iter()
                .all(|e| dot_int_rat2(&e.normal, p) <= e.offset),
        }
    }

    pub fn strictly_contains(&self, p: &Point2) -> bool {
        self.dim == 2
            && self
                .edges
                .iter()
                .all(|e| dot_int_rat2(&e.normal, p) < e.offset)
    }

    pub fn contains_polygon(&self, other: &Polygon) -> bool {
        other.ring.iter().all(|p| self.contains(p))
    }

    fn bbox_int(&self) -> Option<([i64; 2], [i64; 2])> {
        if self.is_empty() {
            return None;
        }
        let mut lo = [i64::MAX; 2];
        let mut hi = [i64::MIN; 2];
        for p in &self.ring {
            for i in 0..2 {
                let f: i64 = i64::try_from(&rat_floor(&p[i])).expect("coordinate fits i64");
                let c: i64 = i64::try_from(&rat_ceil(&p[i])).expect("coordinate fits i64");
                lo[i] = lo[i].min(f);
                hi[i] = hi[i].max(c);
            }
        }
        Some((lo, hi))
    }

    /// All integer points of the polygon, lexicographically sorted.
    pub fn integer_points(&self) -> Vec<[i64; 2]> {
        let Some((lo, hi)) = self.bbox_int() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if self.contains(&pt2(x, y)) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    /// No integer point in the (2D) interior; degenerate polygons are
    /// vacuously lattice-free.
    pub fn is_lattice_free(&self) -> bool {
        if self.dim < 2 {
            return true;
        }
        let (lo, hi) = self.bbox_int().unwrap();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if self.strictly_contains(&pt2(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Integer point in the relative interior of edge `idx`, if any.
    pub fn edge_interior_integer_point(&self, idx: usize) -> Option<[i64; 2]> {
        assert_eq!(self.dim, 2);
        let m = self.ring.len();
        let a = &self.ring[idx];
        let b = &self.ring[(idx + 1) % m];
        let lo = [
            i64::try_from(&rat_floor(if a[0] < b[0] { &a[0] } else { &b[0] })).unwrap(),
            i64::try_from(&rat_floor(if a[1] < b[1] { &a[1] } else { &b[1] })).unwrap(),
        ];
        let hi = [
            i64::try_from(&rat_ceil(if a[0] > b[0] { &a[0] } else { &b[0] })).unwrap(),
            i64::try_from(&rat_ceil(if a[1] > b[1] { &a[1] } else { &b[1] })).unwrap(),
        ];
        let e = &self.edges[idx];
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                let p = pt2(x, y);
                if dot_int_rat2(&e.normal, &p) != e.offset {
                    continue;
                }
                let strict_elsewhere = self
                    .edges
                    .iter()
                    .enumerate()
                    .all(|(j, f)| j == idx || dot_int_rat2(&f.normal, &p) < f.offset);
                if strict_elsewhere {
                    return Some([x, y]);
                }
            }
        }
        None
    }

    /// Hull of pairwise vertex sums, conv(V(A)) + conv(V(B)) = conv(V(A)+V(B)).
    pub fn minkowski_sum(&self, other: &Polygon) -> Polygon {
        assert!(!self.is_empty() && !other.is_empty(), "Minkowski sum of empty polygon");
        let mut sums = Vec::with_capacity(self.ring.len() * other.ring.len());
        for a in &self.ring {
            for b in &other.ring {
                sums.push([&a[0] + &b[0], &a[1] + &b[1]]);
            }
        }
        Polygon::hull(&sums)
    }

    pub fn scale(&self, s: &Rat) -> Polygon {
        assert!(s > &rat(0));
        let pts: Vec<Point2> = self.ring.iter().map(|p| [s * &p[0], s * &p[1]]).collect();
        Polygon::hull(&pts)
    }

    pub fn translate(&self, v: &Point2) -> Polygon {
        let pts: Vec<Point2> = self
            .ring
            .iter()
            .map(|p| [&p[0] + &v[0], &p[1] + &v[1]])
            .collect();
        Polygon::hull(&pts)
    }

    pub fn is_half_integral(&self) -> bool {
        self.ring
            .iter()
            .all(|p| is_half_integer(&p[0]) && is_half_integer(&p[1]))
    }

    pub fn is_integral(&self) -> bool {
        self.ring
            .iter()
            .all(|p| is_integer(&p[0]) && is_integer(&p[1]))
    }

    pub fn non_integral_vertices(&self) -> Vec<Point2> {
        self.ring
            .iter()
            .filter(|p| !(is_integer(&p[0]) && is_integer(&p[1])))
            .cloned()
            .collect()
    }

    pub fn support(&self, u: &[i64; 2]) -> Rat {
        let n = [BigInt::from(u[0]), BigInt::from(u[1])];
        self.ring
            .iter()
            .map(|p| dot_int_rat2(&n, p))
            .max()
            .expect("support of empty polygon")
    }

    pub fn width_in_direction(&self, u: &[i64; 2]) -> Rat {
        self.support(u) + self.support(&[-u[0], -u[1]])
    }
}

/// Check that a claimed edge normal really is primitive (used in tests).
pub fn edge_normal_is_primitive(e: &Edge2) -> bool {
    let g = e.normal[0].gcd(&e.normal[1]);
    g.is_one() && !(e.normal[0].is_zero() && e.normal[1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;

    fn unit_square() -> Polygon {
        Polygon::hull(&[pt2(0, 0), pt2(1, 0), pt2(1, 1), pt2(0, 1)])
    }

    #[test]
    fn square_structure() {
        let s = unit_square();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.vertices().len(), 4);
        assert_eq!(s.edges().len(), 4);
        assert!(s.edges().iter().all(edge_normal_is_primitive));
        assert_eq!(s.integer_points().len(), 4);
        assert!(s.is_lattice_free());
    }

    #[test]
    fn minkowski_square_plus_square() {
        let s = unit_square();
        let sum = s.minkowski_sum(&s);
        assert_eq!(
            sum.canonical_vertices(),
            vec![pt2(0, 0), pt2(0, 2), pt2(2, 0), pt2(2, 2)]
        );
    }

    #[test]
    fn minkowski_of_segments_is_box() {
        let a = Polygon::hull(&[pt2(-1, 0), pt2(1, 0)]);
        let b = Polygon::hull(&[pt2(0, -1), pt2(0, 1)]);
        let sum = a.minkowski_sum(&b);
        assert_eq!(
            sum.canonical_vertices(),
            vec![pt2(-1, -1), pt2(-1, 1), pt2(1, -1), pt2(1, 1)]
        );
    }

    #[test]
    fn q2_is_lattice_free_with_blocked_edges() {
        let q2 = Polygon::hull(&[pt2(0, 0), pt2(2, 0), pt2(0, 2)]);
        assert!(q2.is_lattice_free());
        for i in 0..3 {
            assert!(q2.edge_interior_integer_point(i).is_some(), "edge {i}");
        }
    }

    #[test]
    fn square_edges_not_blocked() {
        let s = unit_square();
        for i in 0..4 {
            assert!(s.edge_interior_integer_point(i).is_none());
        }
    }

    #[test]
    fn half_integral_detection() {
        let q5 = Polygon::hull(&[
            [rat_frac(-1, 2), rat_frac(1, 2)],
            [rat_frac(1, 2), rat_frac(3, 2)],
            [rat_frac(3, 2), rat_frac(1, 2)],
            [rat_frac(1, 2), rat_frac(-1, 2)],
        ]);
        assert!(q5.is_half_integral());
        assert!(!q5.is_integral());
        assert_eq!(q5.non_integral_vertices().len(), 4);
        assert!(q5.is_lattice_free());
    }

    #[test]
    fn degenerate_membership() {
        let seg = Polygon::hull(&[pt2(0, 0), pt2(2, 2)]);
        assert_eq!(seg.dim(), 1);
        assert!(seg.contains(&pt2(1, 1)));
        assert!(!seg.contains(&pt2(1, 0)));
        assert!(!seg.contains(&pt2(3, 3)));
        assert_eq!(seg.integer_points(), vec![[0, 0], [1, 1], [2, 2]]);
    }

    #[test]
    fn width_examples() {
        let q2 = Polygon::hull(&[pt2(0, 0), pt2(2, 0), pt2(0, 2)]);
        assert_eq!(q2.width_in_direction(&[1, 1]), rat(2));
    }
}
