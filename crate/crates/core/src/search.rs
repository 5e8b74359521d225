//! The width-at-least-three computer search: fixed bases, apex
//! enumeration, candidate vertices, polytope growth, and maximality
//! assessment of the survivors.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::dedup_classes;
use crate::lattice::{vset, width_at_least_three_points};
use crate::latpoly::{dot, LatPoint, LatPolytope};
use crate::maximality::z_certificate_lat;
use crate::poly3::Polytope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("lattice diameter must be 1, 2 or 3, got {0}")]
    BadDiameter(u8),
    #[error("configuration invalid: {0}")]
    BadConfig(String),
    #[error("survivor is potentially Z-maximal but not R-maximal: vertices {0:?}")]
    MaximalityContradiction(Vec<LatPoint>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub ld_values: Vec<u8>,
    pub certificate_margin: i64,
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { ld_values: vec![1, 2, 3], certificate_margin: 2, jobs: 0 }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.ld_values.is_empty() {
            return Err(SearchError::BadConfig("ld_values must be nonempty".into()));
        }
        for &l in &self.ld_values {
            if !(1..=3).contains(&l) {
                return Err(SearchError::BadDiameter(l));
            }
        }
        if self.certificate_margin < 1 {
            return Err(SearchError::BadConfig("certificate margin must be >= 1".into()));
        }
        Ok(())
    }
}

/// Base triangle in the plane x3 = 0 for each lattice diameter.
pub fn fixed_base(l: u8) -> Result<[LatPoint; 3], SearchError> {
    match l {
        1 => Ok([[-1, -1, 0], [1, 0, 0], [0, 1, 0]]),
        2 => Ok([[0, 0, 0], [2, 0, 0], [0, 1, 0]]),
        3 => Ok([[0, 0, 0], [3, 0, 0], [0, 1, 0]]),
        _ => Err(SearchError::BadDiameter(l)),
    }
}

/// Twice the base area (integral for all three bases).
fn base_area_doubled(l: u8) -> i64 {
    match l {
        1 | 3 => 3,
        _ => 2,
    }
}

/// Maximum apex height: a sharper double-pyramid argument for l = 1,
/// the difference-body volume bound floor(648 / (20 area(B)))
/// otherwise.
pub fn height_bound(l: u8) -> Result<i64, SearchError> {
    match l {
        1 => Ok(12),
        2 | 3 => Ok(648 / (10 * base_area_doubled(l))),
        _ => Err(SearchError::BadDiameter(l)),
    }
}

#[derive(Debug, Clone)]
pub struct ApexCandidate {
    pub ld: u8,
    pub apex: LatPoint,
    pub pyramid: LatPolytope,
}

/// All valid apexes for a given lattice diameter: a = (a1, a2, h) with
/// 3 <= h <= height_bound, 0 <= a1, a2 <= h - 1, such that the pyramid
/// T = conv(B u {a}) is lattice-free, has lattice diameter l, and
/// satisfies the first-minimum filter on T - T.
pub fn enumerate_apexes(l: u8) -> Result<Vec<ApexCandidate>, SearchError> {
    let base = fixed_base(l)?;
    let hmax = height_bound(l)?;
    let mut out = Vec::new();
    for h in 3..=hmax {
        for a1 in 0..h {
            for a2 in 0..h {
                let apex = [a1, a2, h];
                let t = LatPolytope::hull(&[base[0], base[1], base[2], apex]);
                if !t.is_lattice_free() {
                    continue;
                }
                if !t.lattice_diameter_at_most(l as i64) {
                    continue;
                }
                // ld(T) >= ld(B) = l holds since B is a facet of T
                debug_assert_eq!(t.lattice_diameter().0, l as i64);
                if !t.difference_body().first_minimum_exceeds_quarter() {
                    continue;
                }
                out.push(ApexCandidate { ld: l, apex, pyramid: t });
            }
        }
    }
    Ok(out)
}

/// Integer points of the homothet lambda T + (1 - lambda) c clipped to
/// the slab 0 <= x3 <= h, with lambda = 4 (27 / vol(T) - 1) + 1. Every
/// vertex of a valid survivor containing T lies here.
pub fn search_region(t: &LatPolytope, h: i64) -> Vec<LatPoint> {
    let v6 = t.volume6();
    debug_assert!(v6 > 0 && v6 <= 162);
    // lambda = p / q in sixth-volume units
    let p: i128 = 648 - 3 * v6;
    let q: i128 = v6;
    debug_assert!(p >= q);
    let vsum: [i128; 3] = t.verts.iter().fold([0; 3], |acc, v| {
        [acc[0] + v[0] as i128, acc[1] + v[1] as i128, acc[2] + v[2] as i128]
    });
    // homothet vertex i is (4 p v_i + (q - p) vsum) / (4 q); bbox from those
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in &t.verts {
        for i in 0..3 {
            let num = 4 * p * v[i] as i128 + (q - p) * vsum[i];
            let den = 4 * q;
            let f = num.div_euclid(den);
            let c = f + if num.rem_euclid(den) == 0 { 0 } else { 1 };
            lo[i] = lo[i].min(i64::try_from(f).unwrap());
            hi[i] = hi[i].max(i64::try_from(c).unwrap());
        }
    }
    lo[2] = lo[2].max(0);
    hi[2] = hi[2].min(h);
    // facet condition: 4 q <n, x> <= 4 p c_f + (q - p) <n, vsum>
    let bounds: Vec<([i64; 3], i128)> = t
        .facets
        .iter()
        .map(|(n, c)| {
            let nv = n[0] as i128 * vsum[0] + n[1] as i128 * vsum[1] + n[2] as i128 * vsum[2];
            (*n, 4 * p * *c as i128 + (q - p) * nv)
        })
        .collect();
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let pt = [x, y, z];
                if bounds.iter().all(|(n, b)| 4 * q * dot(n, &pt) <= *b) {
                    out.push(pt);
                }
            }
        }
    }
    out
}

/// C(T): search-region points (excluding the pyramid's own vertices)
/// whose join with T stays lattice-free with unchanged lattice
/// diameter, sorted by decreasing |x2| with lexicographic tie-break.
pub fn candidate_vertices(t: &LatPolytope, l: u8, h: i64) -> Vec<LatPoint> {
    let mut out: Vec<LatPoint> = Vec::new();
    for v in search_region(t, h) {
        if t.verts.binary_search(&v).is_ok() {
            continue;
        }
        let mut pts = t.verts.clone();
        pts.push(v);
        let ext = LatPolytope::hull(&pts);
        if !ext.is_lattice_free() {
            continue;
        }
        if !ext.lattice_diameter_at_most(l as i64) {
            continue;
        }
        out.push(v);
    }
    out.sort_by_key(|v| (-(v[1].abs()), v[0], v[1], v[2]));
    out
}

struct GrowNode {
    poly: LatPolytope,
    /// min/max of <d, x> over the polytope, per direction in the V-set.
    mins: Vec<i128>,
    maxs: Vec<i128>,
}

fn extremes(points: &[LatPoint], dirs: &[LatPoint]) -> (Vec<i128>, Vec<i128>) {
    let mut mins = vec![i128::MAX; dirs.len()];
    let mut maxs = vec![i128::MIN; dirs.len()];
    for p in points {
        for (i, d) in dirs.iter().enumerate() {
            let s = dot(d, p);
            mins[i] = mins[i].min(s);
            maxs[i] = maxs[i].max(s);
        }
    }
    (mins, maxs)
}

/// All lattice-free P with V(P) inside V(T) u C(T), T inside P,
/// ld(P) = l and lw(P) >= 3, grown one candidate at a time with the
/// width-feasibility pruning rule.
pub fn grow_polytopes(cand: &ApexCandidate, candidates: &[LatPoint]) -> Vec<LatPolytope> {
    let dirs = vset(cand.apex);
    let k = candidates.len();
    // suffix extreme dot products: entry i covers candidates[i..]
    let mut suf_min = vec![vec![i128::MAX; dirs.len()]; k + 1];
    let mut suf_max = vec![vec![i128::MIN; dirs.len()]; k + 1];
    for i in (0..k).rev() {
        for (di, d) in dirs.iter().enumerate() {
            let s = dot(d, &candidates[i]);
            suf_min[i][di] = suf_min[i + 1][di].min(s);
            suf_max[i][di] = suf_max[i + 1][di].max(s);
        }
    }
    let feasible = |node: &GrowNode, suffix: usize| -> bool {
        (0..dirs.len()).all(|di| {
            let hi = node.maxs[di].max(suf_max[suffix][di]);
            let lo = node.mins[di].min(suf_min[suffix][di]);
            hi - lo >= 3
        })
    };
    let (mins, maxs) = extremes(&cand.pyramid.verts, &dirs);
    let root = GrowNode { poly: cand.pyramid.clone(), mins, maxs };
    let mut cur: Vec<GrowNode> = if feasible(&root, 0) { vec![root] } else { Vec::new() };
    for i in 0..k {
        let mut seen: HashSet<Vec<LatPoint>> = HashSet::new();
        let mut next: Vec<GrowNode> = Vec::new();
        for node in cur {
            // extension by candidates[i]
            if !node.poly.contains(&candidates[i]) {
                let mut pts = node.poly.verts.clone();
                pts.push(candidates[i]);
                let ext = LatPolytope::hull(&pts);
                if !seen.contains(&ext.verts)
                    && ext.is_lattice_free()
                    && ext.lattice_diameter_at_most(cand.ld as i64)
                {
                    let mut mins = node.mins.clone();
                    let mut maxs = node.maxs.clone();
                    for (di, d) in dirs.iter().enumerate() {
                        let s = dot(d, &candidates[i]);
                        mins[di] = mins[di].min(s);
                        maxs[di] = maxs[di].max(s);
                    }
                    let ext_node = GrowNode { poly: ext, mins, maxs };
                    if feasible(&ext_node, i + 1) {
                        seen.insert(ext_node.poly.verts.clone());
                        next.push(ext_node);
                    }
                }
            }
            // the unextended polytope survives iff still width-feasible
            if feasible(&node, i + 1) && !seen.contains(&node.poly.verts) {
                seen.insert(node.poly.verts.clone());
                next.push(node);
            }
        }
        cur = next;
    }
    // final width check is exact: suffix is empty, so feasibility at
    // level k is lw >= 3 on the polytope itself
    cur.into_iter()
        .filter(|n| width_at_least_three_points(&n.poly.verts, &dirs))
        .map(|n| n.poly)
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurvivorRecord {
    pub ld: u8,
    pub apex: LatPoint,
    pub vertices: Vec<LatPoint>,
    pub r_maximal: bool,
    pub z_certificate: Option<LatPoint>,
    pub volume6: i64,
    pub size_bounds_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApexSummary {
    pub ld: u8,
    pub apex_count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub apex_counts: Vec<ApexSummary>,
    pub apex_total: usize,
    pub survivor_total: usize,
    pub survivors: Vec<SurvivorRecord>,
    pub maximal_survivor_count: usize,
    pub maximal_class_count: usize,
    pub class_vertices: Vec<Vec<LatPoint>>,
}

fn assess_survivor(p: &LatPolytope, ld: u8, apex: LatPoint, margin: i64) -> SurvivorRecord {
    let cert = z_certificate_lat(p, margin);
    let r_max = p.all_facets_blocked();
    let v6 = p.volume6();
    let diff = p.difference_body();
    let size_ok = v6 <= 162
        && diff.volume6() <= 6 * 216
        && diff.first_minimum_exceeds_quarter()
        && p.lattice_diameter_at_most(3);
    SurvivorRecord {
        ld,
        apex,
        vertices: p.verts.clone(),
        r_maximal: r_max,
        z_certificate: cert,
        volume6: i64::try_from(v6).unwrap(),
        size_bounds_ok: size_ok,
    }
}

/// Full pipeline: apex enumeration, growth, assessment, invariant
/// assertions, deduplication. Deterministic for a fixed config
/// regardless of the worker count.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    cfg.validate()?;
    let mut lds = cfg.ld_values.clone();
    lds.sort_unstable();
    lds.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| SearchError::BadConfig(e.to_string()))?;
    let mut apex_counts = Vec::new();
    let mut all_apexes: Vec<ApexCandidate> = Vec::new();
    for &l in &lds {
        let apexes = enumerate_apexes(l)?;
        apex_counts.push(ApexSummary { ld: l, apex_count: apexes.len() });
        all_apexes.extend(apexes);
    }
    let apex_total = all_apexes.len();
    let margin = cfg.certificate_margin;
    // one task per apex; results collected in apex order, so the merge
    // is deterministic
    let per_apex: Vec<Vec<SurvivorRecord>> = pool.install(|| {
        all_apexes
            .par_iter()
            .map(|ac| {
                let h = ac.apex[2];
                let cands = candidate_vertices(&ac.pyramid, ac.ld, h);
                let grown = grow_polytopes(ac, &cands);
                let mut recs: Vec<SurvivorRecord> = grown
                    .iter()
                    .map(|p| assess_survivor(p, ac.ld, ac.apex, margin))
                    .collect();
                recs.sort_by(|a, b| a.vertices.cmp(&b.vertices));
                recs
            })
            .collect()
    });
    let mut survivors: Vec<SurvivorRecord> = per_apex.into_iter().flatten().collect();
    // invariant assertion: a survivor without a certificate must be
    // R-maximal, otherwise the equivalence would be contradicted
    for s in &survivors {
        if s.z_certificate.is_none() && !s.r_maximal {
            return Err(SearchError::MaximalityContradiction(s.vertices.clone()));
        }
        if !s.size_bounds_ok {
            return Err(SearchError::BadConfig(format!(
                "size-bound assertion failed for survivor {:?}",
                s.vertices
            )));
        }
    }
    let maximal: Vec<Polytope> = survivors
        .iter()
        .filter(|s| s.r_maximal)
        .map(|s| Polytope::from_lat(&LatPolytope::hull(&s.vertices)))
        .collect();
    let maximal_survivor_count = maximal.len();
    let classes = dedup_classes(&maximal).map_err(|e| SearchError::BadConfig(e.to_string()))?;
    let class_vertices: Vec<Vec<LatPoint>> = classes
        .iter()
        .map(|p| p.to_lat().expect("integral survivor").verts)
        .collect();
    survivors.sort_by(|a, b| (a.ld, &a.apex, &a.vertices).cmp(&(b.ld, &b.apex, &b.vertices)));
    Ok(SearchReport {
        config: cfg.clone(),
        apex_counts,
        apex_total,
        survivor_total: survivors.len(),
        maximal_survivor_count,
        maximal_class_count: class_vertices.len(),
        class_vertices,
        survivors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_and_bounds() {
        assert_eq!(fixed_base(1).unwrap()[0], [-1, -1, 0]);
        assert_eq!(fixed_base(2).unwrap()[1], [2, 0, 0]);
        assert_eq!(fixed_base(3).unwrap()[1], [3, 0, 0]);
        assert!(fixed_base(0).is_err());
        assert_eq!(height_bound(1), Ok(12));
        assert_eq!(height_bound(2), Ok(32));
        assert_eq!(height_bound(3), Ok(21));
        assert!(height_bound(4).is_err());
        // base areas: 3/2, 1, 3/2
        for (l, a2) in [(1u8, 3i64), (2, 2), (3, 3)] {
            let b = fixed_base(l).unwrap();
            let u = [b[1][0] - b[0][0], b[1][1] - b[0][1]];
            let v = [b[2][0] - b[0][0], b[2][1] - b[0][1]];
            assert_eq!((u[0] * v[1] - u[1] * v[0]).abs(), a2);
        }
    }

    #[test]
    fn region_lambda_extremes() {
        // unit-volume tetrahedron: lambda = 105; the region must contain
        // every slab point whose join with T keeps volume at most 27
        let t = LatPolytope::hull(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 6]]);
        assert_eq!(t.volume6(), 6);
        let region = search_region(&t, 6);
        for x in -15..=15 {
            for y in -15..=15 {
                for z in 0..=6 {
                    let p = [x, y, z];
                    if t.contains(&p) {
                        continue;
                    }
                    let mut pts = t.verts.clone();
                    pts.push(p);
                    if LatPolytope::hull(&pts).volume6() <= 162 {
                        assert!(region.contains(&p), "{p:?} missing from region");
                    }
                }
            }
        }
        for p in &region {
            assert!((0..=6).contains(&p[2]));
        }
    }

    #[test]
    fn region_at_volume_27_is_t_itself() {
        // vol = 27 gives lambda = 1: region is exactly T's integer points
        let t = LatPolytope::hull(&[[0, 0, 0], [9, 0, 0], [0, 6, 0], [0, 0, 3]]);
        assert_eq!(t.volume6(), 162);
        let mut region = search_region(&t, 3);
        region.sort();
        assert_eq!(region, t.integer_points());
    }

    #[test]
    fn candidate_ordering() {
        let t = LatPolytope::hull(&[[0, 0, 0], [2, 0, 0], [0, 1, 0], [0, 0, 3]]);
        let c = candidate_vertices(&t, 2, 3);
        // sorted by |x2| descending, lexicographic among ties
        for w in c.windows(2) {
            let ka = (-(w[0][1].abs()), w[0][0], w[0][1], w[0][2]);
            let kb = (-(w[1][1].abs()), w[1][0], w[1][1], w[1][2]);
            assert!(ka <= kb);
        }
        // pyramid vertices are excluded
        for v in &t.verts {
            assert!(!c.contains(v));
        }
        // every candidate extends lattice-freely by construction
        for v in c.iter().take(5) {
            let mut pts = t.verts.clone();
            pts.push(*v);
            assert!(LatPolytope::hull(&pts).is_lattice_free());
        }
    }

    #[test]
    fn apex_filters_reject_bad_heights() {
        // (0,0,3) over the l = 2 base contains (0,0,0) and (0,0,3):
        // gcd 3 > 2, so the lattice-diameter filter rejects it
        let t = LatPolytope::hull(&[[0, 0, 0], [2, 0, 0], [0, 1, 0], [0, 0, 3]]);
        assert!(!t.lattice_diameter_at_most(2));
        assert!(!enumerate_apexes(2).unwrap().iter().any(|a| a.apex == [0, 0, 3]));
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        assert!(SearchConfig { ld_values: vec![], ..Default::default() }.validate().is_err());
        assert!(SearchConfig { ld_values: vec![4], ..Default::default() }.validate().is_err());
        assert!(
            SearchConfig { certificate_margin: 0, ..Default::default() }.validate().is_err()
        );
    }
}
