//! Affine unimodular maps: x -> M x + t with integer M, |det M| = 1.
//!
//! These are exactly the affine bijections of the integer lattice, so
//! every lattice functional in this crate is invariant under them.

use crate::latpoly::LatPoint;
use crate::poly3::Point3;
use crate::rat::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniMap3 {
    pub mat: [[i64; 3]; 3],
    pub t: [i64; 3],
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

impl UniMap3 {
    pub fn new(mat: [[i64; 3]; 3], t: [i64; 3]) -> Option<Self> {
        if det3(&mat).abs() == 1 {
            Some(UniMap3 { mat, t })
        } else {
            None
        }
    }

    pub fn identity() -> Self {
        UniMap3 { mat: [[1, 0, 0], [0, 1, 0], [0, 0, 1]], t: [0, 0, 0] }
    }

    pub fn translation(t: [i64; 3]) -> Self {
        UniMap3 { mat: [[1, 0, 0], [0, 1, 0], [0, 0, 1]], t }
    }

    pub fn det(&self) -> i64 {
        det3(&self.mat)
    }

    pub fn apply_lat(&self, p: &LatPoint) -> LatPoint {
        let mut out = [0i64; 3];
        for i in 0..3 {
            out[i] = self.mat[i][0] * p[0] + self.mat[i][1] * p[1] + self.mat[i][2] * p[2]
                + self.t[i];
        }
        out
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        let row = |i: usize| -> Rat {
            rat(self.mat[i][0]) * &p[0]
                + rat(self.mat[i][1]) * &p[1]
                + rat(self.mat[i][2]) * &p[2]
                + rat(self.t[i])
        };
        [row(0), row(1), row(2)]
    }

    /// self after other: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &UniMap3) -> UniMap3 {
        let mut mat = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    mat[i][j] += self.mat[i][k] * other.mat[k][j];
                }
            }
        }
        let mut t = self.t;
        for i in 0..3 {
            for k in 0..3 {
                t[i] += self.mat[i][k] * other.t[k];
            }
        }
        UniMap3 { mat, t }
    }

    /// Integer inverse, exists because |det| = 1.
    pub fn inverse(&self) -> UniMap3 {
        let m = &self.mat;
        let d = det3(m);
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| -> i64 {
            m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
        };
        // adjugate / det, det is +-1
        let inv = [
            [cof(1, 2, 1, 2) * d, -cof(0, 2, 1, 2) * d, cof(0, 1, 1, 2) * d],
            [-cof(1, 2, 0, 2) * d, cof(0, 2, 0, 2) * d, -cof(0, 1, 0, 2) * d],
            [cof(1, 2, 0, 1) * d, -cof(0, 2, 0, 1) * d, cof(0, 1, 0, 1) * d],
        ];
        let mut t = [0i64; 3];
        for i in 0..3 {
            for k in 0..3 {
                t[i] -= inv[i][k] * self.t[k];
            }
        }
        UniMap3 { mat: inv, t }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniMap2 {
    pub mat: [[i64; 2]; 2],
    pub t: [i64; 2],
}

impl UniMap2 {
    pub fn new(mat: [[i64; 2]; 2], t: [i64; 2]) -> Option<Self> {
        if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]).abs() == 1 {
            Some(UniMap2 { mat, t })
        } else {
            None
        }
    }

    pub fn identity() -> Self {
        UniMap2 { mat: [[1, 0], [0, 1]], t: [0, 0] }
    }

    pub fn det(&self) -> i64 {
        self.mat[0][0] * self.mat[1][1] - self.mat[0][1] * self.mat[1][0]
    }

    pub fn apply(&self, p: &crate::poly2::Point2) -> crate::poly2::Point2 {
        [
            rat(self.mat[0][0]) * &p[0] + rat(self.mat[0][1]) * &p[1] + rat(self.t[0]),
            rat(self.mat[1][0]) * &p[0] + rat(self.mat[1][1]) * &p[1] + rat(self.t[1]),
        ]
    }

    pub fn inverse(&self) -> UniMap2 {
        let d = self.det();
        let inv = [
            [self.mat[1][1] * d, -self.mat[0][1] * d],
            [-self.mat[1][0] * d, self.mat[0][0] * d],
        ];
        let t = [
            -(inv[0][0] * self.t[0] + inv[0][1] * self.t[1]),
            -(inv[1][0] * self.t[0] + inv[1][1] * self.t[1]),
        ];
        UniMap2 { mat: inv, t }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly3::pt3;

    #[test]
    fn rejects_non_unimodular() {
        assert!(UniMap3::new([[2, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0]).is_none());
        assert!(UniMap2::new([[1, 1], [1, 1]], [0, 0]).is_none());
    }

    #[test]
    fn inverse_round_trip_3d() {
        let m = UniMap3::new([[1, 2, 3], [0, 1, 4], [0, 0, -1]], [5, -7, 2]).unwrap();
        let inv = m.inverse();
        let id = m.compose(&inv);
        assert_eq!(id, UniMap3::identity());
        let p = [3, -4, 9];
        assert_eq!(inv.apply_lat(&m.apply_lat(&p)), p);
        let q = pt3(1, 2, 3);
        assert_eq!(inv.apply(&m.apply(&q)), q);
    }

    #[test]
    fn inverse_round_trip_2d() {
        let m = UniMap2::new([[2, 1], [1, 1]], [3, -2]).unwrap();
        let inv = m.inverse();
        let p = [crate::rat::rat_frac(1, 2), crate::rat::rat(4)];
        assert_eq!(inv.apply(&m.apply(&p)), p);
    }

    #[test]
    fn compose_applies_right_first() {
        let a = UniMap3::translation([1, 0, 0]);
        let b = UniMap3::new([[0, 1, 0], [1, 0, 0], [0, 0, 1]], [0, 0, 0]).unwrap();
        let c = a.compose(&b);
        assert_eq!(c.apply_lat(&[2, 3, 4]), [4, 2, 4]);
    }
}
