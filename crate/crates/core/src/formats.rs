//! On-disk polytope format: JSON with rational coordinates serialized
//! as strings ("p" or "p/q") so round-trips are exact and byte-stable.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::poly3::Polytope;
use crate::rat::{parse_rat, rat_to_string, Rat};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolytopeFile {
    pub name: String,
    /// Vertex coordinates as exact rational strings.
    pub vertices: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertex {index}, coordinate {coord}: invalid rational {text:?}")]
    BadCoordinate { index: usize, coord: usize, text: String },
    #[error("polytope has no vertices")]
    Empty,
}

impl PolytopeFile {
    pub fn from_polytope(name: &str, p: &Polytope) -> Self {
        let vertices = p
            .vertices()
            .iter()
            .map(|v| {
                [
                    rat_to_string(&v[0]),
                    rat_to_string(&v[1]),
                    rat_to_string(&v[2]),
                ]
            })
            .collect();
        PolytopeFile { name: name.to_string(), vertices, metadata: BTreeMap::new() }
    }

    pub fn to_polytope(&self) -> Result<Polytope, FormatError> {
        if self.vertices.is_empty() {
            return Err(FormatError::Empty);
        }
        let mut pts: Vec<[Rat; 3]> = Vec::with_capacity(self.vertices.len());
        for (index, v) in self.vertices.iter().enumerate() {
            let mut p: Vec<Rat> = Vec::with_capacity(3);
            for (coord, s) in v.iter().enumerate() {
                match parse_rat(s) {
                    Ok(r) => p.push(r),
                    Err(_) => {
                        return Err(FormatError::BadCoordinate {
                            index,
                            coord,
                            text: s.clone(),
                        })
                    }
                }
            }
            pts.push([p[0].clone(), p[1].clone(), p[2].clone()]);
        }
        Ok(Polytope::hull(&pts))
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Deterministic pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly3::pt3;
    use crate::rat::rat_frac;

    #[test]
    fn round_trip_is_byte_identical_after_canonicalization() {
        let p = Polytope::hull(&[
            pt3(0, 0, 0),
            pt3(4, 0, 0),
            pt3(0, 4, 0),
            [rat_frac(1, 2), rat_frac(1, 2), rat_frac(3, 2)],
        ]);
        let f1 = PolytopeFile::from_polytope("demo", &p);
        let j1 = f1.to_json();
        let f2 = PolytopeFile::parse(&j1).unwrap();
        let p2 = f2.to_polytope().unwrap();
        let j2 = PolytopeFile::from_polytope("demo", &p2).to_json();
        assert_eq!(j1, j2);
        assert_eq!(p.vertices(), p2.vertices());
    }

    #[test]
    fn parse_diagnostics_name_the_bad_coordinate() {
        let f = PolytopeFile {
            name: "bad".into(),
            vertices: vec![["0".into(), "1/0".into(), "2".into()]],
            metadata: BTreeMap::new(),
        };
        let err = f.to_polytope().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("vertex 0"), "{msg}");
        assert!(msg.contains("coordinate 1"), "{msg}");
    }

    #[test]
    fn interior_points_are_dropped_by_hull_canonicalization() {
        let f = PolytopeFile {
            name: "t".into(),
            vertices: vec![
                ["0".into(), "0".into(), "0".into()],
                ["2".into(), "0".into(), "0".into()],
                ["0".into(), "2".into(), "0".into()],
                ["0".into(), "0".into(), "2".into()],
                ["1/2".into(), "1/2".into(), "1/2".into()],
            ],
            metadata: BTreeMap::new(),
        };
        let p = f.to_polytope().unwrap();
        assert_eq!(p.vertices().len(), 4);
    }
}
