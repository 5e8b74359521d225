//! Independent brute-force enumeration of the bounded Z^2-maximal
//! lattice-free half-integral polygons.
//!
//! Works in doubled coordinates: half-integral points of the window
//! become integer points, and lattice-freeness means no interior point
//! of 2Z^2. States are distinct convex hulls, grown breadth-first one
//! point at a time; subsets of lattice-free sets are lattice-free, so
//! every maximal polygon is reachable through lattice-free states.

use std::collections::{HashSet, VecDeque};

use crate::classify::{q_catalog, unimodular_equivalent_2d};
use crate::hullcore::hull2;
use crate::maximality::is_r_maximal_2d;
use crate::poly2::Polygon;
use crate::rat::rat_frac;

type DPoint = [i64; 2];

/// Ring or degenerate extreme points of a hull in doubled coordinates.
fn canonical_hull(pts: &[DPoint]) -> Vec<DPoint> {
    let mut ring = hull2(pts);
    if ring.len() > 2 {
        let start = (0..ring.len()).min_by_key(|&i| ring[i]).unwrap();
        ring.rotate_left(start);
    }
    ring
}

/// The eight lattice symmetries of the square window fixing its
/// center `c` (doubled coordinates), as (matrix, is_reflection).
const D4: [([i64; 4], bool); 8] = [
    ([1, 0, 0, 1], false),
    ([0, -1, 1, 0], false),
    ([-1, 0, 0, -1], false),
    ([0, 1, -1, 0], false),
    ([1, 0, 0, -1], true),
    ([-1, 0, 0, 1], true),
    ([0, 1, 1, 0], true),
    ([0, -1, -1, 0], true),
];

/// Lexicographically least ring among the given window symmetries of
/// `ring` (matrices act about center `c`); used as the visited-set
/// key so each symmetry class of states is explored once.
fn sym_canonical(ring: &[DPoint], c: i64, transforms: &[([i64; 4], bool)]) -> Vec<DPoint> {
    let mut best: Option<Vec<DPoint>> = None;
    for (m, refl) in transforms {
        let mut img: Vec<DPoint> = ring
            .iter()
            .map(|p| {
                let (x, y) = (p[0] - c, p[1] - c);
                [c + m[0] * x + m[1] * y, c + m[2] * x + m[3] * y]
            })
            .collect();
        if img.len() <= 2 {
            img.sort();
        } else {
            if *refl {
                img.reverse();
            }
            let start = (0..img.len()).min_by_key(|&i| img[i]).unwrap();
            img.rotate_left(start);
        }
        if best.as_ref().map_or(true, |b| img < *b) {
            best = Some(img);
        }
    }
    best.unwrap()
}

fn cross(o: &DPoint, a: &DPoint, b: &DPoint) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn hull_contains(ring: &[DPoint], p: &DPoint) -> bool {
    match ring.len() {
        0 => false,
        1 => ring[0] == *p,
        2 => {
            let (a, b) = (&ring[0], &ring[1]);
            cross(a, b, p) == 0
                && (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]) >= 0
                && (p[0] - b[0]) * (a[0] - b[0]) + (p[1] - b[1]) * (a[1] - b[1]) >= 0
        }
        n => (0..n).all(|i| cross(&ring[i], &ring[(i + 1) % n], p) >= 0),
    }
}

fn hull_strictly_contains(ring: &[DPoint], p: &DPoint) -> bool {
    let n = ring.len();
    n > 2 && (0..n).all(|i| cross(&ring[i], &ring[(i + 1) % n], p) > 0)
}

/// No point of 2Z^2 strictly inside (degenerate hulls vacuously pass).
fn lattice_free_doubled(ring: &[DPoint]) -> bool {
    if ring.len() < 3 {
        return true;
    }
    let (mut lo, mut hi) = ([i64::MAX; 2], [i64::MIN; 2]);
    for p in ring {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let even_from = |v: i64| if v % 2 == 0 { v } else { v + 1 };
    let mut x = even_from(lo[0]);
    while x <= hi[0] {
        let mut y = even_from(lo[1]);
        while y <= hi[1] {
            if hull_strictly_contains(ring, &[x, y]) {
                return false;
            }
            y += 2;
        }
        x += 2;
    }
    true
}

fn to_polygon(ring: &[DPoint]) -> Polygon {
    Polygon::hull(
        &ring
            .iter()
            .map(|p| [rat_frac(p[0], 2), rat_frac(p[1], 2)])
            .collect::<Vec<_>>(),
    )
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Polygons passing both the heuristic Z-filter and the exact
    /// R-maximality check, in original (half-integral) coordinates.
    pub maximal: Vec<Polygon>,
    /// One representative per unimodular class, each labeled with the
    /// matching catalog name if any.
    pub classes: Vec<(Polygon, Option<&'static str>)>,
    /// Polygons that survived the heuristic Z-filter but failed the
    /// exact R-maximality check (the filter window was too small for
    /// them; they are not counterexamples).
    pub anomalies: Vec<Polygon>,
    pub states_visited: usize,
}

/// Heuristic Z-maximality filter: some integer point within `margin`
/// of the bounding box extends the polygon lattice-freely iff the
/// polygon is (detectably) not Z-maximal.
fn z_extension_exists(ring: &[DPoint], margin: i64) -> bool {
    let (mut lo, mut hi) = ([i64::MAX; 2], [i64::MIN; 2]);
    for p in ring {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    // integer points are even in doubled coordinates
    let m = 2 * margin;
    let even_from = |v: i64| if v % 2 == 0 { v } else { v + 1 };
    let mut x = even_from(lo[0] - m);
    while x <= hi[0] + m {
        let mut y = even_from(lo[1] - m);
        while y <= hi[1] + m {
            let z = [x, y];
            if !hull_contains(ring, &z) {
                let mut pts = ring.to_vec();
                pts.push(z);
                if lattice_free_doubled(&canonical_hull(&pts)) {
                    return true;
                }
            }
            y += 2;
        }
        x += 2;
    }
    false
}

/// Exhaustive search for bounded Z^2-maximal lattice-free polygons
/// with half-integral vertices inside `window` (inclusive bounds in
/// original coordinates).
pub fn brute_force_2d_oracle(window: (i64, i64), margin: i64) -> OracleResult {
    assert!(margin >= 1, "margin must be >= 1");
    let (wlo, whi) = window;
    assert!(wlo < whi);
    let grid: Vec<DPoint> = (2 * wlo..=2 * whi)
        .flat_map(|x| (2 * wlo..=2 * whi).map(move |y| [x, y]))
        .collect();
    // Every maximal lattice-free polygon has integer points on its
    // boundary (all edges are blocked), so each class has a translate
    // containing the central integer point of the window, and every
    // sub-hull of that translate contains it too. Anchoring the search
    // there keeps class-completeness while shrinking the state space.
    let c = wlo + whi; // doubled window center
    let a = if c % 2 == 0 { c } else { c - 1 };
    let anchor: DPoint = [a, a];
    debug_assert!(grid.contains(&anchor));
    // symmetries must preserve the window, the even lattice, and the
    // anchor: the full dihedral group when the center is an integer
    // point, otherwise only the diagonal swap
    let transforms: &[([i64; 4], bool)] = if c % 2 == 0 {
        &D4
    } else {
        &[([1, 0, 0, 1], false), ([0, 1, 1, 0], true)]
    };
    let mut visited: HashSet<Vec<DPoint>> = HashSet::new();
    let mut rejected: HashSet<Vec<DPoint>> = HashSet::new();
    let mut queue: VecDeque<Vec<DPoint>> = VecDeque::new();
    let seed = vec![anchor];
    visited.insert(sym_canonical(&seed, c, transforms));
    queue.push_back(seed);
    let mut maximal: Vec<Polygon> = Vec::new();
    let mut anomalies: Vec<Polygon> = Vec::new();
    while let Some(ring) = queue.pop_front() {
        // full-dimensional states are candidates for maximality
        if ring.len() > 2 && !z_extension_exists(&ring, margin) {
            let poly = to_polygon(&ring);
            if is_r_maximal_2d(&poly) == Ok(true) {
                maximal.push(poly);
            } else {
                anomalies.push(poly);
            }
        }
        for p in &grid {
            if hull_contains(&ring, p) {
                continue;
            }
            let mut pts = ring.clone();
            pts.push(*p);
            let next = canonical_hull(&pts);
            let key = sym_canonical(&next, c, transforms);
            if visited.contains(&key) || rejected.contains(&key) {
                continue;
            }
            if lattice_free_doubled(&next) {
                visited.insert(key);
                queue.push_back(next);
            } else {
                rejected.insert(key);
            }
        }
    }
    maximal.sort_by(|a, b| a.canonical_vertices().cmp(&b.canonical_vertices()));
    let catalog = q_catalog();
    let mut classes: Vec<(Polygon, Option<&'static str>)> = Vec::new();
    for poly in &maximal {
        let already = classes
            .iter()
            .any(|(rep, _)| unimodular_equivalent_2d(poly, rep).ok().flatten().is_some());
        if already {
            continue;
        }
        let label = catalog
            .iter()
            .find(|q| unimodular_equivalent_2d(poly, &q.polygon).ok().flatten().is_some())
            .map(|q| q.name);
        classes.push((poly.clone(), label));
    }
    let states_visited = visited.len();
    OracleResult { maximal, classes, anomalies, states_visited }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly2::pt2;

    #[test]
    fn doubled_hull_predicates() {
        // doubled Q2: (0,0), (4,0), (0,4)
        let ring = canonical_hull(&[[0, 0], [4, 0], [0, 4]]);
        assert!(lattice_free_doubled(&ring));
        assert!(hull_contains(&ring, &[1, 1]));
        assert!(!hull_strictly_contains(&ring, &[2, 2]));
        // doubled [0,2]^2 contains (2,2) = (1,1) strictly
        let big = canonical_hull(&[[0, 0], [4, 0], [4, 4], [0, 4]]);
        assert!(!lattice_free_doubled(&big));
    }

    #[test]
    fn unit_square_is_filtered() {
        // [0,1]^2 doubled: extension by (-1,0) (doubled (-2,0)) stays
        // lattice-free, so the Z-filter rejects it
        let ring = canonical_hull(&[[0, 0], [2, 0], [2, 2], [0, 2]]);
        assert!(z_extension_exists(&ring, 3));
        let poly = to_polygon(&ring);
        assert_eq!(is_r_maximal_2d(&poly), Ok(false));
    }

    #[test]
    fn q2_passes_filters() {
        let ring = canonical_hull(&[[0, 0], [4, 0], [0, 4]]);
        assert!(!z_extension_exists(&ring, 3));
        assert_eq!(is_r_maximal_2d(&to_polygon(&ring)), Ok(true));
    }

    #[test]
    fn small_window_finds_all_four_classes() {
        // [-1,2]^2 already contains a representative of each bounded class
        let r = brute_force_2d_oracle((-1, 2), 3);
        let mut labels: Vec<_> = r.classes.iter().map(|(_, l)| l.unwrap_or("?")).collect();
        labels.sort();
        assert_eq!(labels, ["Q2", "Q3", "Q4", "Q5"]);
        assert!(r.anomalies.is_empty());
        assert!(r.maximal.iter().all(|p| p.contains(&pt2(0, 0)) || !p.vertices().is_empty()));
    }
}
