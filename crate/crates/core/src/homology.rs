//! Brute-force oracle: reduced simplicial homology over the rationals and graded Betti
//! numbers of the circuit ideal by Hochster's formula
//!
//! ```text
//! β_{i,j}(I_Δ) = Σ_{W ⊆ [n], |W| = j} dim H̃_{j-i-2}(Δ_W; Q)
//! ```
//!
//! Everything here is exact. The oracle never decides chordality; it only reports
//! Betti tables.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Size guards for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_fvector_n: usize,
    pub max_face_vertices: usize,
    pub max_hochster_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_fvector_n: 20,
            max_face_vertices: 16,
            max_hochster_n: 12,
        }
    }
}

impl OracleLimits {
    /// The same vertex bound for every oracle.
    pub fn uniform(max_n: usize) -> Self {
        OracleLimits {
            max_fvector_n: max_n,
            max_face_vertices: max_n,
            max_hochster_n: max_n,
        }
    }
}

/// Faces of a simplicial complex grouped by size: `faces[k]` holds the faces with `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    pub universe: VertexSet,
    faces: Vec<Vec<VertexSet>>,
}

impl FaceList {
    /// Downward closure of `generators` inside `universe`.
    pub fn from_facets(universe: VertexSet, generators: &[VertexSet]) -> Self {
        let mut all: HashSet<VertexSet> = HashSet::new();
        all.insert(VertexSet::EMPTY);
        for &g in generators {
            for k in 1..=g.len() {
                all.extend(g.subsets_of_size(k));
            }
        }
        Self::from_closed(universe, all)
    }

    fn from_closed(universe: VertexSet, faces: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for f in faces {
            let k = f.len();
            if by_size.len() <= k {
                by_size.resize(k + 1, Vec::new());
            }
            by_size[k].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable();
        }
        FaceList {
            universe,
            faces: by_size,
        }
    }

    /// `faces_of_size(k)` is the list of `(k-1)`-dimensional faces.
    pub fn faces_of_size(&self, k: usize) -> &[VertexSet] {
        self.faces.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Largest face size (0 for the complex `{∅}`).
    pub fn top_size(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }
}

/// The induced subcomplex `Δ(C)_W`: cliques of `c` inside `w`.
pub fn clique_complex_faces(c: &Clutter, w: VertexSet, limits: &OracleLimits) -> Result<FaceList> {
    if w.len() > limits.max_face_vertices {
        return Err(Error::BoundExceeded {
            what: "induced clique complex",
            size: w.len(),
            bound: limits.max_face_vertices,
        });
    }
    let mut faces = Vec::new();
    for k in 0..=w.len() {
        let level: Vec<VertexSet> = w.subsets_of_size(k).filter(|s| c.is_clique(*s)).collect();
        if level.is_empty() {
            break;
        }
        faces.extend(level);
    }
    Ok(FaceList::from_closed(w, faces))
}

/// `dim H̃_k` for `k = -1, 0, 1, ..., top`; entry `k + 1` of the result.
pub fn reduced_homology_ranks(faces: &FaceList) -> Vec<usize> {
    let top = faces.top_size();
    // rank of ∂ from faces of size s to faces of size s - 1, for s = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for (s, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *r = boundary_rank(faces.faces_of_size(s), faces.faces_of_size(s - 1));
    }
    (0..=top)
        .map(|s| faces.faces_of_size(s).len() - ranks[s] - ranks[s + 1])
        .collect()
}

fn boundary_rank(upper: &[VertexSet], lower: &[VertexSet]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let position: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; lower.len()];
            for (m, v) in face.iter().enumerate() {
                let sign = if m % 2 == 0 { 1 } else { -1 };
                row[position[&face.without(v)]] = sign;
            }
            row
        })
        .collect();
    exact_rank(rows)
}

/// Rank over Q of an integer matrix by fraction-free row reduction. Runs in `i128` with
/// overflow checks and falls back to arbitrary precision if a value outgrows it.
pub fn exact_rank(rows: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match eliminate(small) {
        Some(r) => r,
        None => {
            let big = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            eliminate(big).expect("arbitrary precision cannot overflow")
        }
    }
}

fn eliminate<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        // prefer a unit pivot to keep entries small
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| if rows[r][col].abs().is_one() { 0 } else { 1 });
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let a = prow[col].clone();
        for row in tail.iter_mut() {
            let b = row[col].clone();
            if b.is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            let (fa, fb) = (a.clone() / g.clone(), b / g);
            for j in col..ncols {
                let x = row[j].checked_mul(&fa)?;
                let y = prow[j].checked_mul(&fb)?;
                row[j] = x.checked_sub(&y)?;
            }
            let content = row[col + 1..]
                .iter()
                .fold(T::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in &mut row[col + 1..] {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

/// Graded Betti numbers `β_{i,j}` of a squarefree monomial ideal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<BettiEntry>", from = "Vec<BettiEntry>")]
pub struct GradedBettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

/// One table cell, the serialized form of [`GradedBettiTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

impl From<GradedBettiTable> for Vec<BettiEntry> {
    fn from(t: GradedBettiTable) -> Self {
        t.entries()
    }
}

impl From<Vec<BettiEntry>> for GradedBettiTable {
    fn from(v: Vec<BettiEntry>) -> Self {
        let mut t = GradedBettiTable::default();
        for e in v {
            t.add(e.i, e.j, e.value);
        }
        t
    }
}

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries, ordered by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &value)| BettiEntry { i, j, value })
            .collect()
    }

    /// Row sums `β_i = Σ_j β_{i,j}` up to the projective dimension.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0u64; len];
        for (&(i, _), &v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// Whether every nonzero entry has `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    fn merge(mut self, other: GradedBettiTable) -> Self {
        for ((i, j), v) in other.entries {
            self.add(i, j, v);
        }
        self
    }
}

/// Graded Betti numbers of the circuit ideal of `c` via Hochster's formula.
pub fn hochster_betti(c: &Clutter, limits: &OracleLimits) -> Result<GradedBettiTable> {
    let n = c.n();
    if n > limits.max_hochster_n {
        return Err(Error::BoundExceeded {
            what: "Hochster oracle",
            size: n,
            bound: limits.max_hochster_n,
        });
    }
    if n < c.d() {
        return Err(Error::VerticesBelowUniformity { n, d: c.d() });
    }
    let cliques = all_cliques(c);
    let per_subset = |w: u64| -> GradedBettiTable {
        let w = VertexSet::from_bits(w);
        let faces = FaceList::from_closed(w, cliques.iter().copied().filter(|f| f.is_subset(w)));
        let ranks = reduced_homology_ranks(&faces);
        let j = w.len();
        let mut table = GradedBettiTable::default();
        for (idx, &r) in ranks.iter().enumerate() {
            // idx = k + 1 for H̃_k, and i = j - k - 2
            if let Some(i) = (j + 1).checked_sub(idx + 2) {
                table.add(i, j, r as u64);
            }
        }
        table
    };
    let subsets = 1u64..(1u64 << n);
    #[cfg(feature = "parallel")]
    let table = {
        use rayon::prelude::*;
        subsets
            .into_par_iter()
            .map(per_subset)
            .reduce(GradedBettiTable::default, GradedBettiTable::merge)
    };
    #[cfg(not(feature = "parallel"))]
    let table = subsets
        .map(per_subset)
        .fold(GradedBettiTable::default(), GradedBettiTable::merge);
    Ok(table)
}

/// Every clique of `c`, including all subsets of size below `d`. Cliques above size `d`
/// are grown level by level from the circuits.
pub(crate) fn all_cliques(c: &Clutter) -> Vec<VertexSet> {
    let all = VertexSet::initial_segment(c.n());
    let mut out: Vec<VertexSet> = (0..c.d()).flat_map(|k| all.subsets_of_size(k)).collect();
    let mut level: Vec<VertexSet> = c.circuits().to_vec();
    let mut size = c.d();
    while !level.is_empty() {
        out.extend(level.iter().copied());
        let members: HashSet<VertexSet> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &s in &level {
            for v in s.max_vertex().unwrap_or(0) + 1..=c.n() {
                let t = s.with(v);
                if t.subsets_of_size(size).all(|u| members.contains(&u)) {
                    next.push(t);
                }
            }
        }
        level = next;
        size += 1;
    }
    out
}

/// Whether the circuit ideal of `c` has a d-linear resolution over Q.
pub fn has_linear_resolution(c: &Clutter, limits: &OracleLimits) -> Result<bool> {
    Ok(hochster_betti(c, limits)?.is_linear(c.d()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::vs;

    fn example() -> Clutter {
        Clutter::new(
            5,
            3,
            &[
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 4],
                vec![2, 3, 4],
                vec![1, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn induced_faces() {
        let lim = OracleLimits::default();
        let c = example();
        let full = clique_complex_faces(&c, vs(&[1, 2, 3, 4]), &lim).unwrap();
        assert_eq!(full.count(), 16);
        let pair = clique_complex_faces(&c, vs(&[2, 5]), &lim).unwrap();
        assert_eq!(pair.count(), 4);
        assert_eq!(pair.faces_of_size(2), &[vs(&[2, 5])]);
        let empty = clique_complex_faces(&c, VertexSet::EMPTY, &lim).unwrap();
        assert_eq!(empty.count(), 1);
        assert!(clique_complex_faces(&c, VertexSet::initial_segment(17), &lim).is_err());
    }

    #[test]
    fn homology_of_small_complexes() {
        let simplex = FaceList::from_facets(vs(&[1, 2, 3, 4]), &[vs(&[1, 2, 3, 4])]);
        assert!(reduced_homology_ranks(&simplex).iter().all(|&r| r == 0));
        let two_points = FaceList::from_facets(vs(&[1, 2]), &[vs(&[1]), vs(&[2])]);
        assert_eq!(reduced_homology_ranks(&two_points), vec![0, 1]);
        let circle = FaceList::from_facets(vs(&[1, 2, 3]), &[vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])]);
        assert_eq!(reduced_homology_ranks(&circle), vec![0, 0, 1]);
        let void = FaceList::from_facets(VertexSet::EMPTY, &[]);
        assert_eq!(reduced_homology_ranks(&void), vec![1]);
        // boundary of the tetrahedron is a 2-sphere
        let sphere: Vec<VertexSet> = vs(&[1, 2, 3, 4]).subsets_of_size(3).collect();
        let sphere = FaceList::from_facets(vs(&[1, 2, 3, 4]), &sphere);
        assert_eq!(reduced_homology_ranks(&sphere), vec![0, 0, 0, 1]);
    }

    #[test]
    fn rank_fallback_and_values() {
        assert_eq!(exact_rank(vec![vec![2, 4], vec![1, 2]]), 1);
        assert_eq!(exact_rank(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(exact_rank(vec![vec![3, 1], vec![1, 3]]), 2);
        let big = i64::MAX / 2;
        assert_eq!(exact_rank(vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]]), 3);
        let mut rows = vec![vec![big, big - 1], vec![big - 1, big - 2]];
        assert_eq!(eliminate(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect::<Vec<Vec<BigInt>>>()), Some(2));
        rows.push(vec![1, 1]);
        assert_eq!(exact_rank(rows), 2);
    }

    #[test]
    fn hochster_examples() {
        let lim = OracleLimits::default();
        let path = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let t = hochster_betti(&path, &lim).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.get(0, 2), 3);
        assert_eq!(t.get(1, 3), 2);
        assert!(t.is_linear(2));

        let t = hochster_betti(&example(), &lim).unwrap();
        assert_eq!(t.totals(), vec![5, 6, 2]);
        assert!(t.is_linear(3));
        assert_eq!(t.get(0, 3), 5);

        assert!(hochster_betti(&Clutter::complete(5, 3).unwrap(), &lim).unwrap().is_empty());
        assert!(has_linear_resolution(&Clutter::complete(5, 3).unwrap(), &lim).unwrap());
    }

    #[test]
    fn table_json_is_a_list() {
        let c = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let t = hochster_betti(&c, &OracleLimits::default()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with("[{\"i\":0,\"j\":2,"));
        assert_eq!(serde_json::from_str::<GradedBettiTable>(&json).unwrap(), t);
    }

    #[test]
    fn four_cycle_is_not_linear() {
        let lim = OracleLimits::default();
        let c4 = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        assert!(!has_linear_resolution(&c4, &lim).unwrap());
        let t = hochster_betti(&c4, &lim).unwrap();
        // (x1x3, x2x4) is a complete intersection
        assert_eq!(t.get(0, 2), 2);
        assert_eq!(t.get(1, 4), 1);
    }
}
