//! Maximality checks: exact R-maximality via blocked facets and a
//! window-based search for Z-nonmaximality certificates.

use crate::lattice::LatticeError;
use crate::latpoly::{LatPoint, LatPolytope};
use crate::poly2::Polygon;
use crate::poly3::{pt3, Polytope};

/// Outcome of assessing a lattice-free polytope.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MaximalityVerdict {
    pub r_maximal: bool,
    /// Integer point p outside P with conv(P u {p}) lattice-free,
    /// if one exists within the search window.
    pub z_certificate: Option<LatPoint>,
    /// Margin by which the bounding box was inflated for the
    /// certificate search.
    pub window_margin: i64,
}

/// A lattice-free P is maximal among lattice-free convex sets iff
/// every facet contains an integer point in its relative interior.
pub fn is_r_maximal(p: &Polytope) -> Result<bool, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    if !p.is_lattice_free() {
        return Err(LatticeError::NotLatticeFree);
    }
    Ok((0..p.facets().len()).all(|fi| p.facet_interior_point(fi).is_some()))
}

/// Planar analogue: every edge must contain an integer point in its
/// relative interior.
pub fn is_r_maximal_2d(q: &Polygon) -> Result<bool, LatticeError> {
    if q.dim() != 2 {
        return Err(LatticeError::NotFullDimensional);
    }
    if !q.is_lattice_free() {
        return Err(LatticeError::NotLatticeFree);
    }
    Ok((0..q.edges().len()).all(|i| q.edge_interior_integer_point(i).is_some()))
}

/// First (in lexicographic order) integer point p in the bounding box
/// inflated by `margin` such that p is outside P and conv(P u {p}) is
/// lattice-free. Such a p certifies that P is not Z-maximal.
pub fn z_nonmaximality_certificate(p: &Polytope, margin: i64) -> Result<Option<LatPoint>, LatticeError> {
    if p.dim() != 3 {
        return Err(LatticeError::NotFullDimensional);
    }
    if !p.is_lattice_free() {
        return Err(LatticeError::NotLatticeFree);
    }
    if margin < 1 {
        return Err(LatticeError::Precondition("margin must be >= 1".into()));
    }
    if let Some(lp) = p.to_lat() {
        return Ok(z_certificate_lat(&lp, margin));
    }
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in p.vertices() {
        for i in 0..3 {
            lo[i] = lo[i].min(i64::try_from(&crate::rat::rat_floor(&v[i])).unwrap() - margin);
            hi[i] = hi[i].max(i64::try_from(&crate::rat::rat_ceil(&v[i])).unwrap() + margin);
        }
    }
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let q = pt3(x, y, z);
                if p.contains(&q) {
                    continue;
                }
                let mut pts = p.vertices().to_vec();
                pts.push(q);
                if Polytope::hull(&pts).is_lattice_free() {
                    return Ok(Some([x, y, z]));
                }
            }
        }
    }
    Ok(None)
}

/// Fast path on the integer lattice layer, same contract.
pub fn z_certificate_lat(p: &LatPolytope, margin: i64) -> Option<LatPoint> {
    let (lo, hi) = p.bbox();
    for x in lo[0] - margin..=hi[0] + margin {
        for y in lo[1] - margin..=hi[1] + margin {
            for z in lo[2] - margin..=hi[2] + margin {
                let q = [x, y, z];
                if p.contains(&q) {
                    continue;
                }
                let mut pts = p.verts.clone();
                pts.push(q);
                let ext = LatPolytope::hull(&pts);
                if ext.is_lattice_free() {
                    return Some(q);
                }
            }
        }
    }
    None
}

/// Certificate search first, exact facet check second.
pub fn assess(p: &Polytope, margin: i64) -> Result<MaximalityVerdict, LatticeError> {
    let cert = z_nonmaximality_certificate(p, margin)?;
    let r_max = is_r_maximal(p)?;
    Ok(MaximalityVerdict { r_maximal: r_max, z_certificate: cert, window_margin: margin })
}
