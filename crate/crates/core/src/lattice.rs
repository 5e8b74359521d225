//! Lattice functionals on polytopes: integer points, lattice-freeness,
//! lattice diameter, lattice width, the first successive minimum test,
//! and the apex normalization shear.

use num_integer::Integer;
use thiserror::Error;

use crate::latpoly::{width_of_points, LatPoint};
use crate::poly3::{pt3, Point3, Polytope};
use crate::rat::{rat, Rat};
use crate::unimod::UniMap3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope is not centrally symmetric about the origin")]
    NotCentrallySymmetric,
    #[error("polytope is not lattice-free")]
    NotLatticeFree,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// All integer points of P, lexicographically sorted.
pub fn integer_points(p: &Polytope) -> Vec<LatPoint> {
    p.integer_points()
}

/// True iff no integer point lies in the interior of P.
pub fn is_lattice_free(p: &Polytope) -> Result<bool, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    Ok(p.is_lattice_free())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDiameterWitness {
    pub z: LatPoint,
    pub z_prime: LatPoint,
    pub value: u64,
}

fn gcd3_u64(v: [i64; 3]) -> u64 {
    let g = v[0].unsigned_abs().gcd(&v[1].unsigned_abs()).gcd(&v[2].unsigned_abs());
    g
}

/// Lattice diameter: the largest g such that P contains a segment
/// [z, z'] with g + 1 collinear equally spaced integer points, i.e.
/// the maximum of gcd(z - z') over integer points z, z' of P.
pub fn lattice_diameter(p: &Polytope) -> (u64, Option<LatticeDiameterWitness>) {
    let pts = p.integer_points();
    let mut best = 0u64;
    let mut wit = None;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = [pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]];
            let g = gcd3_u64(d);
            if g > best {
                best = g;
                wit = Some(LatticeDiameterWitness { z: pts[i], z_prime: pts[j], value: g });
            }
        }
    }
    (best, wit)
}

/// lambda_1(C) > 1/4 for an o-symmetric body C, tested exactly:
/// (1/4)C contains no nonzero integer point, i.e. no z != o with 4z in C.
pub fn first_minimum_exceeds_quarter(c: &Polytope) -> Result<bool, LatticeError> {
    if c.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    let verts = c.vertices();
    for v in verts {
        let neg: Point3 = [-&v[0], -&v[1], -&v[2]];
        if !verts.contains(&neg) {
            return Err(LatticeError::NotCentrallySymmetric);
        }
    }
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in verts {
        for i in 0..3 {
            let f = crate::rat::rat_floor(&v[i]);
            let cl = crate::rat::rat_ceil(&v[i]);
            lo[i] = lo[i].min(i64::try_from(&f).unwrap().div_euclid(4) - 1);
            hi[i] = hi[i].max(i64::try_from(&cl).unwrap().div_euclid(4) + 1);
        }
    }
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if (x, y, z) == (0, 0, 0) {
                    continue;
                }
                if c.contains(&pt3(4 * x, 4 * y, 4 * z)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Direction set for the width-three test at apex a = (a1, a2, h):
/// nonzero v with |v1|, |v2|, |v1 - v2| <= 2 and
/// -2 <= v1 a1 + v2 a2 + v3 h <= 2.
pub fn vset(apex: LatPoint) -> Vec<LatPoint> {
    let [a1, a2, h] = apex;
    assert!(h >= 1);
    let mut out = Vec::new();
    for v1 in -2i64..=2 {
        for v2 in -2i64..=2 {
            if (v1 - v2).abs() > 2 {
                continue;
            }
            let s = v1 * a1 + v2 * a2;
            // v3 in [(-2 - s)/h, (2 - s)/h]
            let lo = (-2 - s).div_euclid(h) + if (-2 - s).rem_euclid(h) == 0 { 0 } else { 1 };
            let hi = (2 - s).div_euclid(h);
            for v3 in lo..=hi {
                if (v1, v2, v3) != (0, 0, 0) {
                    out.push([v1, v2, v3]);
                }
            }
        }
    }
    out
}

/// Width test on a raw point set against a precomputed direction set.
/// Valid when conv(points) contains o, e1, e2 and the apex that
/// produced `dirs`.
pub fn width_at_least_three_points(points: &[LatPoint], dirs: &[LatPoint]) -> bool {
    dirs.iter().all(|d| width_of_points(points, d) >= 3)
}

/// lw(P) >= 3 via the finite direction set of the apex lemma.
/// Requires o, e1, e2 and the apex to lie in P.
pub fn width_at_least_three(p: &Polytope, apex: LatPoint) -> Result<bool, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    if apex[2] < 1 {
        return Err(LatticeError::Precondition("apex height must be >= 1".into()));
    }
    for q in [[0, 0, 0], [1, 0, 0], [0, 1, 0], apex] {
        if !p.contains(&pt3(q[0], q[1], q[2])) {
            return Err(LatticeError::Precondition(format!(
                "required point ({}, {}, {}) not in polytope",
                q[0], q[1], q[2]
            )));
        }
    }
    let dirs = vset(apex);
    for d in dirs {
        if p.width_in_direction(&d) < rat(3) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthCertificate {
    pub direction: LatPoint,
    pub width: Rat,
    pub radius: i64,
}

/// Minimum width over primitive directions with infinity norm at most
/// `radius`. An upper bound for lw(P), exact whenever the true optimum
/// is attained within the window. Ties break to the canonical
/// (sign-normalized, lexicographically first) direction.
pub fn lattice_width_heuristic(p: &Polytope, radius: i64) -> Result<WidthCertificate, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    if radius < 1 {
        return Err(LatticeError::Precondition("radius must be >= 1".into()));
    }
    let mut best: Option<WidthCertificate> = None;
    for x in -radius..=radius {
        for y in -radius..=radius {
            for z in -radius..=radius {
                let v = [x, y, z];
                if v == [0, 0, 0] {
                    continue;
                }
                // sign normalization: first nonzero coordinate positive
                let first = v.iter().find(|&&c| c != 0).unwrap();
                if *first < 0 {
                    continue;
                }
                let g = x.unsigned_abs().gcd(&y.unsigned_abs()).gcd(&z.unsigned_abs());
                if g != 1 {
                    continue;
                }
                let w = p.width_in_direction(&v);
                if best.as_ref().map_or(true, |b| w < b.width) {
                    best = Some(WidthCertificate { direction: v, width: w, radius });
                }
            }
        }
    }
    Ok(best.unwrap())
}

/// True iff facet `idx` contains an integer point in its relative
/// interior.
pub fn facet_blocked(p: &Polytope, idx: usize) -> Result<bool, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    if idx >= p.facets().len() {
        return Err(LatticeError::Precondition(format!("facet index {idx} out of range")));
    }
    Ok(p.facet_interior_point(idx).is_some())
}

/// Shear fixing the base plane that moves the apex into the
/// fundamental box 0 <= a1, a2 <= h - 1.
pub fn normalize_apex(apex: LatPoint) -> Result<(UniMap3, LatPoint), LatticeError> {
    let [a1, a2, h] = apex;
    if h < 1 {
        return Err(LatticeError::Precondition("apex height must be >= 1".into()));
    }
    let k1 = a1.div_euclid(h);
    let k2 = a2.div_euclid(h);
    let map = UniMap3::new([[1, 0, -k1], [0, 1, -k2], [0, 0, 1]], [0, 0, 0]).unwrap();
    Ok((map.clone(), map.apply_lat(&apex)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly3::pt3;

    fn cube2() -> Polytope {
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    pts.push(pt3(x, y, z));
                }
            }
        }
        Polytope::hull(&pts)
    }

    #[test]
    fn diameter_of_cube() {
        let (ld, wit) = lattice_diameter(&cube2());
        assert_eq!(ld, 2);
        let w = wit.unwrap();
        assert_eq!(gcd3_u64([w.z[0] - w.z_prime[0], w.z[1] - w.z_prime[1], w.z[2] - w.z_prime[2]]), 2);
    }

    #[test]
    fn diameter_degenerate_counts() {
        let single = Polytope::hull(&[pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, 1)]);
        // unit simplex: all pairwise differences are primitive
        assert_eq!(lattice_diameter(&single).0, 1);
    }

    #[test]
    fn quarter_test_small_and_large() {
        let small = cube2().difference_body();
        // [-2,2]^3 contains 4*(1,0,0)? no: 4 > 2, and any 4z with z != o
        // leaves the box, so the first minimum is 1/2 > 1/4
        assert_eq!(first_minimum_exceeds_quarter(&small), Ok(true));
        let mut pts = Vec::new();
        for x in [-4, 4] {
            for y in [-4, 4] {
                for z in [-4, 4] {
                    pts.push(pt3(x, y, z));
                }
            }
        }
        let big = Polytope::hull(&pts);
        assert_eq!(first_minimum_exceeds_quarter(&big), Ok(false));
    }

    #[test]
    fn quarter_test_requires_symmetry() {
        let simplex = Polytope::hull(&[pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, 1)]);
        assert_eq!(
            first_minimum_exceeds_quarter(&simplex),
            Err(LatticeError::NotCentrallySymmetric)
        );
    }

    #[test]
    fn vset_is_symmetric_and_small() {
        let v = vset([0, 0, 3]);
        assert!(!v.is_empty());
        for d in &v {
            assert!(v.contains(&[-d[0], -d[1], -d[2]]));
            assert!(d.iter().all(|c| c.abs() <= 5));
            assert_ne!(*d, [0, 0, 0]);
        }
        // (0,0,v3): need -2 <= 3 v3 <= 2, so only v3 = 0, excluded
        assert!(!v.iter().any(|d| d[0] == 0 && d[1] == 0));
        // (1,0,v3): -3 <= ... wait, -2 <= v3*3 <= 2 gives v3 = 0
        assert!(v.contains(&[1, 0, 0]));
    }

    #[test]
    fn width_test_matches_directions() {
        // pyramid over conv(o, 2e1, e2) with apex (0,0,3): thin, width < 3
        let p = Polytope::hull(&[pt3(0, 0, 0), pt3(2, 0, 0), pt3(0, 1, 0), pt3(0, 0, 3)]);
        assert_eq!(width_at_least_three(&p, [0, 0, 3]), Ok(false));
        // a fat box has width 3 in every direction of the set
        let b = Polytope::hull(&[
            pt3(-3, -3, -3),
            pt3(6, -3, -3),
            pt3(-3, 6, -3),
            pt3(-3, -3, 6),
            pt3(6, 6, -3),
            pt3(6, -3, 6),
            pt3(-3, 6, 6),
            pt3(6, 6, 6),
        ]);
        assert_eq!(width_at_least_three(&b, [0, 0, 3]), Ok(true));
    }

    #[test]
    fn width_test_precondition() {
        let p = Polytope::hull(&[pt3(5, 5, 5), pt3(7, 5, 5), pt3(5, 7, 5), pt3(5, 5, 7)]);
        assert!(matches!(
            width_at_least_three(&p, [0, 0, 3]),
            Err(LatticeError::Precondition(_))
        ));
    }

    #[test]
    fn heuristic_width_cube() {
        let c = cube2();
        let cert = lattice_width_heuristic(&c, 2).unwrap();
        assert_eq!(cert.width, rat(2));
        assert_eq!(cert.direction, [0, 0, 1]);
    }

    #[test]
    fn normalize_apex_box() {
        let (map, a) = normalize_apex([7, -2, 3]).unwrap();
        assert_eq!(a, [1, 1, 3]);
        assert_eq!(map.apply_lat(&[7, -2, 3]), a);
        // base plane is fixed pointwise
        assert_eq!(map.apply_lat(&[4, -9, 0]), [4, -9, 0]);
        assert!(normalize_apex([0, 0, 0]).is_err());
    }

    #[test]
    fn facet_blocked_cube() {
        let c = cube2();
        for fi in 0..c.facets().len() {
            assert_eq!(facet_blocked(&c, fi), Ok(true));
        }
        assert!(facet_blocked(&c, 99).is_err());
    }
}
