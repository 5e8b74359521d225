//! Catalogs of the known maximizers, unimodular-equivalence testing,
//! deduplication, and the slice-structure checks for the width-two
//! polytopes.

use std::collections::HashMap;

use crate::lattice::{lattice_diameter, lattice_width_heuristic, LatticeError};
use crate::latpoly::LatPoint;
use crate::maximality::{is_r_maximal, is_r_maximal_2d};
use crate::poly2::{Point2, Polygon};
use crate::poly3::{pt3, Point3, Polytope};
use crate::rat::{rat, rat_frac, Rat};
use crate::unimod::{UniMap2, UniMap3};

#[derive(Debug, Clone)]
pub struct CatalogEntry2D {
    pub name: &'static str,
    pub polygon: Polygon,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry3D {
    pub name: &'static str,
    pub polytope: Polytope,
    /// Expected facet count (the first label index).
    pub facet_label: usize,
    /// Expected lattice diameter (the second label index).
    pub ld_label: u64,
    /// Map into the slab R^2 x [-1,1] for the slice checks.
    pub to_normal: UniMap3,
}

/// The four bounded Z^2-maximal lattice-free half-integral polygons.
/// (The fifth class, the unbounded strip [0,1] x R, has no finite
/// vertex representation and is tracked only by name.)
pub fn q_catalog() -> Vec<CatalogEntry2D> {
    let q = |name, pts: Vec<Point2>| CatalogEntry2D { name, polygon: Polygon::hull(&pts) };
    vec![
        q("Q2", vec![[rat(0), rat(0)], [rat(2), rat(0)], [rat(0), rat(2)]]),
        q("Q3", vec![[rat(-1), rat(0)], [rat(2), rat(0)], [rat_frac(1, 2), rat_frac(3, 2)]]),
        q("Q4", vec![[rat_frac(-1, 2), rat(0)], [rat_frac(3, 2), rat(0)], [rat_frac(1, 2), rat(2)]]),
        q("Q5", vec![
            [rat_frac(-1, 2), rat_frac(1, 2)],
            [rat_frac(1, 2), rat_frac(3, 2)],
            [rat_frac(3, 2), rat_frac(1, 2)],
            [rat_frac(1, 2), rat_frac(-1, 2)],
        ]),
    ]
}

pub const UNBOUNDED_2D_CLASS: &str = "Q1 = [0,1] x R (unbounded strip, not represented)";

/// The seven Z^3-maximal lattice-free integral polytopes of lattice
/// width two, in the coordinates with 0 <= x3 <= 2. Labels (i, j):
/// i facets, lattice diameter j.
pub fn m_catalog() -> Vec<CatalogEntry3D> {
    let down = UniMap3::translation([0, 0, -1]);
    let m = |name, pts: Vec<LatPoint>, facet_label, ld_label| CatalogEntry3D {
        name,
        polytope: Polytope::hull(&pts.iter().map(|p| pt3(p[0], p[1], p[2])).collect::<Vec<_>>()),
        facet_label,
        ld_label,
        to_normal: down.clone(),
    };
    vec![
        m("M_{4,6}", vec![[-2, 0, 0], [4, 0, 0], [1, 3, 0], [0, 0, 2]], 4, 6),
        m("M_{4,4}", vec![[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 2]], 4, 4),
        m("M_{4,2}", vec![[-1, 1, 0], [1, 3, 0], [0, 0, 2], [2, -2, 2]], 4, 2),
        m("M'_{4,4}", vec![[-1, 0, 0], [3, 0, 0], [1, 4, 0], [0, 0, 2]], 4, 4),
        m("M_{5,4}", vec![[1, -1, 0], [-1, 1, 0], [3, 1, 0], [1, 3, 0], [0, 0, 2]], 5, 4),
        m("M_{5,2}", vec![[-1, 0, 0], [1, 0, 0], [0, 2, 0], [0, 0, 2], [2, 0, 2], [1, 2, 2]], 5, 2),
        m("M_{6,2}", vec![
            [0, 0, 0], [-1, 1, 0], [0, 2, 0], [1, 1, 0],
            [0, 0, 2], [1, 1, 2], [2, 0, 2], [1, -1, 2],
        ], 6, 2),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckResult {
    pub object: String,
    pub predicate: String,
    pub pass: bool,
}

fn check(out: &mut Vec<CheckResult>, object: &str, predicate: &str, pass: bool) {
    out.push(CheckResult { object: object.to_string(), predicate: predicate.to_string(), pass });
}

/// Verify every stored invariant of both catalogs.
pub fn verify_catalogs() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for q in q_catalog() {
        check(&mut out, q.name, "half-integral", q.polygon.is_half_integral());
        check(&mut out, q.name, "lattice-free", q.polygon.is_lattice_free());
        check(&mut out, q.name, "R2-maximal", is_r_maximal_2d(&q.polygon) == Ok(true));
    }
    for m in m_catalog() {
        let p = &m.polytope;
        check(&mut out, m.name, "lattice-free", p.dim() == 3 && p.is_lattice_free());
        check(
            &mut out,
            m.name,
            &format!("facet count = {}", m.facet_label),
            p.facets().len() == m.facet_label,
        );
        check(
            &mut out,
            m.name,
            &format!("lattice diameter = {}", m.ld_label),
            lattice_diameter(p).0 == m.ld_label,
        );
        check(&mut out, m.name, "width 2 in direction e3", p.width_in_direction(&[0, 0, 1]) == rat(2));
        check(
            &mut out,
            m.name,
            "heuristic lattice width = 2",
            lattice_width_heuristic(p, 3).map(|c| c.width) == Ok(rat(2)),
        );
        check(&mut out, m.name, "R3-maximal", is_r_maximal(p) == Ok(true));
    }
    out
}

/// Slice-structure invariants for a width-two catalog member: in the
/// slab position, the middle slice is half-integral, lattice-free and
/// equivalent to one of Q2..Q5, the outer slices Minkowski-sum into
/// 2 P0, and 2 conv(non-integral vertices of P0) fits inside that sum.
pub fn slice_structure_check(entry: &CatalogEntry3D) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let name = entry.name;
    let mapped: Vec<Point3> = entry
        .polytope
        .vertices()
        .iter()
        .map(|v| entry.to_normal.apply(v))
        .collect();
    let p = Polytope::hull(&mapped);
    check(
        &mut out,
        name,
        "fits in R2 x [-1,1] with e3-width 2",
        p.support(&[0, 0, 1]) == rat(1) && p.support(&[0, 0, -1]) == rat(1),
    );
    let p0 = p.slice_at_height(&rat(0));
    let p1 = p.slice_at_height(&rat(1));
    let pm1 = p.slice_at_height(&rat(-1));
    check(&mut out, name, "P0 full-dimensional", p0.dim() == 2);
    check(&mut out, name, "P0 half-integral", p0.is_half_integral());
    check(&mut out, name, "P0 lattice-free", p0.dim() == 2 && p0.is_lattice_free());
    let q_match = q_catalog().into_iter().find_map(|q| {
        unimodular_equivalent_2d(&p0, &q.polygon)
            .ok()
            .flatten()
            .map(|_| q.name)
    });
    check(
        &mut out,
        name,
        &format!("P0 equivalent to a Q ({})", q_match.unwrap_or("none")),
        q_match.is_some(),
    );
    check(&mut out, name, "P1 and P-1 nonempty", !p1.is_empty() && !pm1.is_empty());
    if !p1.is_empty() && !pm1.is_empty() && p0.dim() == 2 {
        let sum = p1.minkowski_sum(&pm1);
        let twice_p0 = p0.scale(&rat(2));
        check(&mut out, name, "P1 + P-1 inside 2 P0", twice_p0.contains_polygon(&sum));
        let nonint = p0.non_integral_vertices();
        let inner_ok = if nonint.is_empty() {
            true
        } else {
            let doubled: Vec<Point2> = nonint.iter().map(|v| [&v[0] * rat(2), &v[1] * rat(2)]).collect();
            Polygon::hull(&doubled)
                .vertices()
                .iter()
                .all(|v| sum.contains(v))
        };
        check(&mut out, name, "2 conv(non-integral vertices of P0) inside P1 + P-1", inner_ok);
    }
    out
}

fn affinely_independent_tuple3(pts: &[LatPoint]) -> Option<[LatPoint; 4]> {
    let p0 = *pts.first()?;
    let mut chosen: Vec<LatPoint> = vec![p0];
    for &p in &pts[1..] {
        let ok = match chosen.len() {
            1 => p != p0,
            2 => {
                let u = sub(chosen[1], p0);
                let v = sub(p, p0);
                cross(u, v) != [0, 0, 0]
            }
            3 => {
                let u = sub(chosen[1], p0);
                let v = sub(chosen[2], p0);
                let w = sub(p, p0);
                det3_cols(u, v, w) != 0
            }
            _ => false,
        };
        if ok {
            chosen.push(p);
        }
        if chosen.len() == 4 {
            return Some([chosen[0], chosen[1], chosen[2], chosen[3]]);
        }
    }
    None
}

fn sub(a: LatPoint, b: LatPoint) -> LatPoint {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: LatPoint, b: LatPoint) -> LatPoint {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn det3_cols(u: LatPoint, v: LatPoint, w: LatPoint) -> i64 {
    u[0] * (v[1] * w[2] - v[2] * w[1]) - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
}

/// Affine unimodular map with phi(A) = B, if one exists. Complete:
/// any such map sends the fixed affinely independent integer 4-tuple
/// of A to some integer 4-tuple of B, and all of those are tried.
pub fn unimodular_equivalent(a: &Polytope, b: &Polytope) -> Result<Option<UniMap3>, LatticeError> {
    if a.dim() != 3 || b.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    let a_pts = a.integer_points();
    let b_pts = b.integer_points();
    // invariant prescreen
    if a_pts.len() != b_pts.len()
        || a.vertices().len() != b.vertices().len()
        || a.facets().len() != b.facets().len()
        || a.volume() != b.volume()
        || lattice_diameter(a).0 != lattice_diameter(b).0
    {
        return Ok(None);
    }
    let Some(base) = affinely_independent_tuple3(&a_pts) else {
        return Err(LatticeError::Precondition(
            "no affinely independent integer 4-tuple".into(),
        ));
    };
    let p0 = base[0];
    let d = [sub(base[1], p0), sub(base[2], p0), sub(base[3], p0)];
    // adjugate of the matrix with columns d[0], d[1], d[2]
    let dp = det3_cols(d[0], d[1], d[2]);
    debug_assert_ne!(dp, 0);
    let adj = adjugate_cols(d);
    let a_verts = a.vertices();
    let b_verts = b.vertices();
    let n = b_pts.len();
    for i0 in 0..n {
        for i1 in 0..n {
            if i1 == i0 {
                continue;
            }
            for i2 in 0..n {
                if i2 == i0 || i2 == i1 {
                    continue;
                }
                'tuple: for i3 in 0..n {
                    if i3 == i0 || i3 == i1 || i3 == i2 {
                        continue;
                    }
                    let q0 = b_pts[i0];
                    let e = [
                        sub(b_pts[i1], q0),
                        sub(b_pts[i2], q0),
                        sub(b_pts[i3], q0),
                    ];
                    // M = E adj(D) / det(D), entrywise integrality required
                    let mut mat = [[0i64; 3]; 3];
                    for r in 0..3 {
                        for c in 0..3 {
                            let num = e[0][r] * adj[0][c] + e[1][r] * adj[1][c] + e[2][r] * adj[2][c];
                            if num % dp != 0 {
                                continue 'tuple;
                            }
                            mat[r][c] = num / dp;
                        }
                    }
                    let mut t = [0i64; 3];
                    for r in 0..3 {
                        t[r] = q0[r] - (mat[r][0] * p0[0] + mat[r][1] * p0[1] + mat[r][2] * p0[2]);
                    }
                    let Some(map) = UniMap3::new(mat, t) else {
                        continue;
                    };
                    let mut image: Vec<Point3> = a_verts.iter().map(|v| map.apply(v)).collect();
                    image.sort();
                    if image == b_verts {
                        return Ok(Some(map));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// adj(D) for D with columns d[0], d[1], d[2]; rows indexed first.
fn adjugate_cols(d: [LatPoint; 3]) -> [[i64; 3]; 3] {
    let m = [
        [d[0][0], d[1][0], d[2][0]],
        [d[0][1], d[1][1], d[2][1]],
        [d[0][2], d[1][2], d[2][2]],
    ];
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    // adj[r][c] = cofactor(c, r)
    [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ]
}

fn affinely_independent_tuple2(pts: &[[i64; 2]]) -> Option<[[i64; 2]; 3]> {
    let p0 = *pts.first()?;
    let mut chosen = vec![p0];
    for &p in &pts[1..] {
        let ok = match chosen.len() {
            1 => p != p0,
            2 => {
                let u = [chosen[1][0] - p0[0], chosen[1][1] - p0[1]];
                let v = [p[0] - p0[0], p[1] - p0[1]];
                u[0] * v[1] - u[1] * v[0] != 0
            }
            _ => false,
        };
        if ok {
            chosen.push(p);
        }
        if chosen.len() == 3 {
            return Some([chosen[0], chosen[1], chosen[2]]);
        }
    }
    None
}

/// Planar variant, valid for rational (in particular half-integral)
/// polygons: affine unimodular maps carry integer points to integer
/// points, so the map is determined by integer-point tuples even when
/// the vertices are not integral.
pub fn unimodular_equivalent_2d(a: &Polygon, b: &Polygon) -> Result<Option<UniMap2>, LatticeError> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(LatticeError::NotFullDimensional);
    }
    let a_pts = a.integer_points();
    let b_pts = b.integer_points();
    if a_pts.len() != b_pts.len() || a.vertices().len() != b.vertices().len() {
        return Ok(None);
    }
    let Some(base) = affinely_independent_tuple2(&a_pts) else {
        return Err(LatticeError::Precondition(
            "no affinely independent integer 3-tuple".into(),
        ));
    };
    let p0 = base[0];
    let d = [
        [base[1][0] - p0[0], base[1][1] - p0[1]],
        [base[2][0] - p0[0], base[2][1] - p0[1]],
    ];
    let dp = d[0][0] * d[1][1] - d[0][1] * d[1][0];
    debug_assert_ne!(dp, 0);
    // adj of the matrix with columns d[0], d[1]
    let adj = [[d[1][1], -d[1][0]], [-d[0][1], d[0][0]]];
    let a_canon = a.canonical_vertices();
    let b_canon = b.canonical_vertices();
    let n = b_pts.len();
    for i0 in 0..n {
        for i1 in 0..n {
            if i1 == i0 {
                continue;
            }
            'tuple: for i2 in 0..n {
                if i2 == i0 || i2 == i1 {
                    continue;
                }
                let q0 = b_pts[i0];
                let e = [
                    [b_pts[i1][0] - q0[0], b_pts[i1][1] - q0[1]],
                    [b_pts[i2][0] - q0[0], b_pts[i2][1] - q0[1]],
                ];
                let mut mat = [[0i64; 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        let num = e[0][r] * adj[0][c] + e[1][r] * adj[1][c];
                        if num % dp != 0 {
                            continue 'tuple;
                        }
                        mat[r][c] = num / dp;
                    }
                }
                let t = [
                    q0[0] - (mat[0][0] * p0[0] + mat[0][1] * p0[1]),
                    q0[1] - (mat[1][0] * p0[0] + mat[1][1] * p0[1]),
                ];
                let Some(map) = UniMap2::new(mat, t) else {
                    continue;
                };
                let mut image: Vec<Point2> = a_canon.iter().map(|v| map.apply(v)).collect();
                image.sort();
                if image == b_canon {
                    return Ok(Some(map));
                }
            }
        }
    }
    Ok(None)
}

fn invariant_key(p: &Polytope) -> (Rat, usize, usize, usize, u64) {
    (
        p.volume(),
        p.vertices().len(),
        p.facets().len(),
        p.integer_points().len(),
        lattice_diameter(p).0,
    )
}

/// Partition into unimodular-equivalence classes; the representative
/// of each class is the member with the lexicographically smallest
/// canonical vertex list. Representatives are returned sorted.
pub fn dedup_classes(polys: &[Polytope]) -> Result<Vec<Polytope>, LatticeError> {
    // collapse exact duplicates first
    let mut distinct: Vec<&Polytope> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for p in polys {
        let key: Vec<String> = p
            .vertices()
            .iter()
            .flat_map(|v| v.iter().map(crate::rat::rat_to_string))
            .collect();
        if seen.insert(key) {
            distinct.push(p);
        }
    }
    let mut buckets: HashMap<(Rat, usize, usize, usize, u64), Vec<&Polytope>> = HashMap::new();
    for p in distinct {
        buckets.entry(invariant_key(p)).or_default().push(p);
    }
    let mut reps: Vec<Polytope> = Vec::new();
    for (_, members) in buckets {
        let mut class_reps: Vec<Polytope> = Vec::new();
        for p in members {
            let mut matched = false;
            for r in class_reps.iter_mut() {
                if unimodular_equivalent(p, r)?.is_some() {
                    if p.vertices() < r.vertices() {
                        *r = p.clone();
                    }
                    matched = true;
                    break;
                }
            }
            if !matched {
                class_reps.push(p.clone());
            }
        }
        reps.extend(class_reps);
    }
    reps.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    Ok(reps)
}
