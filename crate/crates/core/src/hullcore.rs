//! Convex-hull primitives over exact integer coordinates.
//!
//! Everything here is generic over the integer scalar: the search pipeline
//! instantiates it with `i128` for speed, the rational layer clears
//! denominators and instantiates it with `BigInt`. Instance sizes are tiny
//! (tens of points), so facet enumeration is done by brute force over point
//! triples; simplicity and verifiability beat asymptotics at this scale.

use num_integer::Integer;
use num_traits::Signed;

/// Integer scalar usable as an exact hull coordinate.
pub trait HullInt: Integer + Signed + Clone + std::fmt::Debug {}
impl<T: Integer + Signed + Clone + std::fmt::Debug> HullInt for T {}

pub fn sub3<I: HullInt>(a: &[I; 3], b: &[I; 3]) -> [I; 3] {
    [
        a[0].clone() - b[0].clone(),
        a[1].clone() - b[1].clone(),
        a[2].clone() - b[2].clone(),
    ]
}

pub fn dot3<I: HullInt>(a: &[I; 3], b: &[I; 3]) -> I {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross3<I: HullInt>(a: &[I; 3], b: &[I; 3]) -> [I; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn det3<I: HullInt>(a: &[I; 3], b: &[I; 3], c: &[I; 3]) -> I {
    dot3(a, &cross3(b, c))
}

pub fn gcd3<I: HullInt>(v: &[I; 3]) -> I {
    v[0].gcd(&v[1]).gcd(&v[2])
}

/// Divides a nonzero vector by the gcd of its components.
pub fn primitive3<I: HullInt>(v: &[I; 3]) -> [I; 3] {
    let g = gcd3(v);
    assert!(!g.is_zero(), "zero vector has no primitive form");
    [
        v[0].clone() / g.clone(),
        v[1].clone() / g.clone(),
        v[2].clone() / g,
    ]
}

/// Affine rank of a 3D point set (0 for a single point, 3 for full dim).
pub fn affine_rank3<I: HullInt>(pts: &[[I; 3]]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = &pts[0];
    let diffs: Vec<[I; 3]> = pts[1..].iter().map(|p| sub3(p, base)).collect();
    let mut rank1 = None;
    for d in &diffs {
        if !d[0].is_zero() || !d[1].is_zero() || !d[2].is_zero() {
            rank1 = Some(d.clone());
            break;
        }
    }
    let Some(u) = rank1 else { return 0 };
    let mut rank2 = None;
    for d in &diffs {
        let c = cross3(&u, d);
        if !(c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
            rank2 = Some(d.clone());
            break;
        }
    }
    let Some(v) = rank2 else { return 1 };
    for d in &diffs {
        if !det3(&u, &v, d).is_zero() {
            return 3;
        }
    }
    2
}

/// Irredundant outward facet halfspaces `<n, x> <= c` of a full-dimensional
/// point set, with primitive integer normals. Brute force over point triples.
pub fn facets3<I: HullInt>(pts: &[[I; 3]]) -> Vec<([I; 3], I)> {
    let n = pts.len();
    let mut out: Vec<([I; 3], I)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let u = sub3(&pts[j], &pts[i]);
                let v = sub3(&pts[k], &pts[i]);
                let nor = cross3(&u, &v);
                if nor[0].is_zero() && nor[1].is_zero() && nor[2].is_zero() {
                    continue;
                }
                let base = dot3(&nor, &pts[i]);
                let mut pos = false;
                let mut neg = false;
                for p in pts {
                    let s = dot3(&nor, p) - base.clone();
                    if s.is_positive() {
                        pos = true;
                    } else if s.is_negative() {
                        neg = true;
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                let oriented = if pos {
                    [
                        -nor[0].clone(),
                        -nor[1].clone(),
                        -nor[2].clone(),
                    ]
                } else {
                    nor
                };
                let prim = primitive3(&oriented);
                let off = dot3(&prim, &pts[i]);
                out.push((prim, off));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Extreme points of a full-dimensional point set given its facet list:
/// a point is a vertex iff its tight facet normals span R^3.
pub fn vertices3<I: HullInt>(pts: &[[I; 3]], facets: &[([I; 3], I)]) -> Vec<[I; 3]> {
    let mut verts: Vec<[I; 3]> = Vec::new();
    for p in pts {
        let tight: Vec<&[I; 3]> = facets
            .iter()
            .filter(|(n, c)| dot3(n, p) == *c)
            .map(|(n, _)| n)
            .collect();
        if tight.len() < 3 {
            continue;
        }
        let mut full = false;
        'outer: for a in 0..tight.len() {
            for b in (a + 1)..tight.len() {
                for c in (b + 1)..tight.len() {
                    if !det3(tight[a], tight[b], tight[c]).is_zero() {
                        full = true;
                        break 'outer;
                    }
                }
            }
        }
        if full {
            verts.push(p.clone());
        }
    }
    verts.sort();
    verts.dedup();
    verts
}

// ---- 2D ----

pub fn sub2<I: HullInt>(a: &[I; 2], b: &[I; 2]) -> [I; 2] {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()]
}

pub fn dot2<I: HullInt>(a: &[I; 2], b: &[I; 2]) -> I {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone()
}

pub fn cross2<I: HullInt>(a: &[I; 2], b: &[I; 2]) -> I {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}

pub fn primitive2<I: HullInt>(v: &[I; 2]) -> [I; 2] {
    let g = v[0].gcd(&v[1]);
    assert!(!g.is_zero());
    [v[0].clone() / g.clone(), v[1].clone() / g]
}

/// Counterclockwise hull ring via monotone chain. Collinear points are
/// dropped, so the ring is irredundant. Degenerate input (affine dim < 2)
/// yields the sorted extreme points: 1 point, or the 2 segment endpoints.
pub fn hull2<I: HullInt>(points: &[[I; 2]]) -> Vec<[I; 2]> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: &[I; 2], a: &[I; 2], b: &[I; 2]| cross2(&sub2(a, o), &sub2(b, o));
    let mut lower: Vec<[I; 2]> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<[I; 2]> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    if lower.len() == 2 && upper.len() == 2 {
        // all points collinear: endpoints only
        return vec![lower[0].clone(), lower[1].clone()];
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Outward edge halfspaces `<n, x> <= c` of a CCW ring, primitive normals,
/// one per ring edge, in ring order.
pub fn ring_edges2<I: HullInt>(ring: &[[I; 2]]) -> Vec<([I; 2], I)> {
    let m = ring.len();
    assert!(m >= 3, "edge system needs a full-dimensional ring");
    (0..m)
        .map(|i| {
            let a = &ring[i];
            let b = &ring[(i + 1) % m];
            let d = sub2(b, a);
            let n = primitive2(&[d[1].clone(), -d[0].clone()]);
            let c = dot2(&n, a);
            (n, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    type P3 = [i128; 3];

    #[test]
    fn unit_simplex_facets_and_vertices() {
        let pts: Vec<P3> = vec![[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]];
        let f = facets3(&pts);
        assert_eq!(f.len(), 4);
        assert!(f.contains(&([1, 1, 1], 1)));
        assert!(f.contains(&([-1, 0, 0], 0)));
        let v = vertices3(&pts, &f);
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn interior_and_boundary_points_are_not_vertices() {
        // midpoint of an edge plus the simplex corners
        let pts: Vec<P3> = vec![
            [0, 0, 0],
            [2, 0, 0],
            [0, 2, 0],
            [0, 0, 2],
            [1, 1, 0],
        ];
        let f = facets3(&pts);
        let v = vertices3(&pts, &f);
        assert_eq!(v.len(), 4);
        assert!(!v.contains(&[1, 1, 0]));
    }

    #[test]
    fn cube_hull_from_lattice_points() {
        let mut pts: Vec<P3> = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push([x, y, z]);
                }
            }
        }
        let f = facets3(&pts);
        assert_eq!(f.len(), 6);
        let v = vertices3(&pts, &f);
        assert_eq!(v.len(), 8);
    }

    #[test]
    fn hull2_square_and_degenerate() {
        let ring = hull2(&[[0i128, 0], [2, 0], [2, 2], [0, 2], [1, 1], [1, 0]]);
        assert_eq!(ring.len(), 4);
        let seg = hull2(&[[0i128, 0], [1, 1], [3, 3]]);
        assert_eq!(seg, vec![[0, 0], [3, 3]]);
        let pt = hull2(&[[5i128, 5], [5, 5]]);
        assert_eq!(pt, vec![[5, 5]]);
    }

    #[test]
    fn affine_rank_cases() {
        let r0 = affine_rank3::<i128>(&[[1, 2, 3]]);
        let r1 = affine_rank3::<i128>(&[[0, 0, 0], [2, 2, 2]]);
        let r2 = affine_rank3::<i128>(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        let r3 = affine_rank3::<i128>(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!((r0, r1, r2, r3), (0, 1, 2, 3));
    }
}
