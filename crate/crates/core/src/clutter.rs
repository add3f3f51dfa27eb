//! d-uniform clutters on `[n]` and their elementary operations.

use std::collections::{BTreeMap, HashSet};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A d-uniform clutter: a set of d-subsets (circuits) of `[n]`.
///
/// Circuits are kept sorted lexicographically and deduplicated, so equality
/// and hashing only depend on `(n, d, circuit set)`.
#[derive(Clone)]
pub struct Clutter {
    n: usize,
    d: usize,
    circuits: Vec<VertexSet>,
    index: HashSet<u64>,
}

impl Clutter {
    /// Canonical clutter from explicit vertex lists. Duplicate circuits collapse.
    pub fn new(n: usize, d: usize, circuits: &[Vec<usize>]) -> Result<Self> {
        check_dims(n, d)?;
        let sets = circuits
            .iter()
            .map(|c| VertexSet::from_vertices(c, n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sets(n, d, sets)
    }

    /// Canonical clutter from vertex sets.
    pub fn from_sets(n: usize, d: usize, circuits: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_dims(n, d)?;
        let range = VertexSet::initial_segment(n);
        let mut sets: Vec<VertexSet> = circuits.into_iter().collect();
        for &c in &sets {
            if !c.is_subset(range) {
                let vertex = c.difference(range).min_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if c.len() != d {
                return Err(Error::WrongCardinality {
                    circuit: c.to_string(),
                    expected: d,
                    found: c.len(),
                });
            }
        }
        if n < d && !sets.is_empty() {
            return Err(Error::CircuitsBelowUniformity { n, d });
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(Self::from_sorted_unchecked(n, d, sets))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, d: usize, circuits: Vec<VertexSet>) -> Self {
        let index = circuits.iter().map(|c| c.bits()).collect();
        Clutter {
            n,
            d,
            circuits,
            index,
        }
    }

    /// The empty clutter on `[n]`.
    pub fn empty(n: usize, d: usize) -> Result<Self> {
        check_dims(n, d)?;
        Ok(Self::from_sorted_unchecked(n, d, Vec::new()))
    }

    /// All d-subsets of `[n]`; no circuits at all when `n < d`.
    pub fn complete(n: usize, d: usize) -> Result<Self> {
        check_dims(n, d)?;
        let circuits = VertexSet::initial_segment(n).subsets_of_size(d).collect();
        Ok(Self::from_sorted_unchecked(n, d, circuits))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn circuits(&self) -> &[VertexSet] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, circuit: VertexSet) -> bool {
        self.index.contains(&circuit.bits())
    }

    pub fn is_complete(&self) -> bool {
        self.n >= self.d && self.circuits.len() as u128 == small_binomial(self.n, self.d)
    }

    /// The d-subsets of `[n]` that are not circuits.
    pub fn complement(&self) -> Result<Clutter> {
        self.require_n_ge_d()?;
        let circuits = VertexSet::initial_segment(self.n)
            .subsets_of_size(self.d)
            .filter(|c| !self.contains(*c))
            .collect();
        Ok(Self::from_sorted_unchecked(self.n, self.d, circuits))
    }

    /// All (d-1)-sets contained in some circuit, sorted.
    pub fn submaximal_circuits(&self) -> Vec<VertexSet> {
        self.neighborhoods().into_keys().collect()
    }

    /// Every submaximal circuit mapped to its open neighborhood, in one pass over the circuits.
    pub fn neighborhoods(&self) -> BTreeMap<VertexSet, VertexSet> {
        let mut map = BTreeMap::new();
        for &f in &self.circuits {
            for v in f.iter() {
                let e = f.without(v);
                let entry = map.entry(e).or_insert(VertexSet::EMPTY);
                *entry = entry.with(v);
            }
        }
        map
    }

    /// `{c : e ∪ {c} is a circuit}`.
    pub fn open_neighborhood(&self, e: VertexSet) -> Result<VertexSet> {
        self.check_submaximal_size(e)?;
        Ok(self.open_neighborhood_unchecked(e))
    }

    pub(crate) fn open_neighborhood_unchecked(&self, e: VertexSet) -> VertexSet {
        let mut nbhd = VertexSet::EMPTY;
        for c in VertexSet::initial_segment(self.n).difference(e).iter() {
            if self.contains(e.with(c)) {
                nbhd = nbhd.with(c);
            }
        }
        nbhd
    }

    /// `e ∪ N(e)`.
    pub fn closed_neighborhood(&self, e: VertexSet) -> Result<VertexSet> {
        Ok(e.union(self.open_neighborhood(e)?))
    }

    /// True iff every d-subset of `v` is a circuit. Sets smaller than d are cliques.
    pub fn is_clique(&self, v: VertexSet) -> bool {
        v.len() < self.d || v.subsets_of_size(self.d).all(|f| self.contains(f))
    }

    /// Removes every circuit containing `e`.
    pub fn delete(&self, e: VertexSet) -> Result<Clutter> {
        self.check_submaximal_size(e)?;
        Ok(self.delete_unchecked(e))
    }

    pub(crate) fn delete_unchecked(&self, e: VertexSet) -> Clutter {
        let circuits = self
            .circuits
            .iter()
            .copied()
            .filter(|f| !e.is_subset(*f))
            .collect();
        Self::from_sorted_unchecked(self.n, self.d, circuits)
    }

    /// The squarefree ideal generated by the complement's circuits.
    pub fn circuit_ideal(&self) -> Result<SquarefreeIdeal> {
        let complement = self.complement()?;
        Ok(SquarefreeIdeal::from_minimal_unchecked(
            self.n,
            complement.circuits,
        ))
    }

    fn require_n_ge_d(&self) -> Result<()> {
        if self.n < self.d {
            return Err(Error::VerticesBelowUniformity {
                n: self.n,
                d: self.d,
            });
        }
        Ok(())
    }

    fn check_submaximal_size(&self, e: VertexSet) -> Result<()> {
        if e.len() + 1 != self.d {
            return Err(Error::WrongCardinality {
                circuit: e.to_string(),
                expected: self.d - 1,
                found: e.len(),
            });
        }
        if !e.is_subset(VertexSet::initial_segment(self.n)) {
            return Err(Error::VertexOutOfRange {
                vertex: e.max_vertex().unwrap_or(0),
                n: self.n,
            });
        }
        Ok(())
    }
}

fn check_dims(n: usize, d: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    if d == 0 {
        return Err(Error::ZeroUniformity);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

fn small_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

impl PartialEq for Clutter {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.circuits == other.circuits
    }
}

impl Eq for Clutter {}

impl Hash for Clutter {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.d.hash(state);
        self.circuits.hash(state);
    }
}

impl std::fmt::Debug for Clutter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let circuits: Vec<String> = self.circuits.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "Clutter(n={}, d={}, {{{}}})",
            self.n,
            self.d,
            circuits.join(",")
        )
    }
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

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        list.iter().map(|s| vs(s)).collect()
    }

    #[test]
    fn construction() {
        assert_eq!(example().len(), 5);
        assert!(Clutter::new(4, 3, &[]).unwrap().is_empty());
        let dup = Clutter::new(5, 3, &[vec![1, 2, 3], vec![3, 2, 1], vec![1, 2, 4]]).unwrap();
        assert_eq!(dup.len(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Clutter::new(5, 3, &[vec![1, 2]]),
            Err(Error::WrongCardinality { .. })
        ));
        assert!(matches!(
            Clutter::new(5, 3, &[vec![1, 2, 6]]),
            Err(Error::VertexOutOfRange { vertex: 6, .. })
        ));
        assert!(matches!(
            Clutter::new(2, 3, &[vec![1, 2, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(Clutter::new(0, 3, &[]), Err(Error::ZeroVertices)));
        assert!(matches!(
            Clutter::new(65, 3, &[]),
            Err(Error::TooManyVertices { .. })
        ));
        assert!(matches!(
            Clutter::from_sets(2, 3, [vs(&[1, 2])]),
            Err(Error::WrongCardinality { .. })
        ));
    }

    #[test]
    fn complete_clutters() {
        assert_eq!(
            Clutter::complete(4, 3).unwrap().circuits(),
            sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        assert_eq!(Clutter::complete(3, 3).unwrap().len(), 1);
        let points = Clutter::complete(2, 3).unwrap();
        assert!(points.is_empty());
        assert_eq!(points.n(), 2);
        assert!(Clutter::complete(7, 3).unwrap().is_complete());
        assert_eq!(Clutter::complete(8, 4).unwrap().len(), 70);
    }

    #[test]
    fn complement_and_involution() {
        let c = example();
        let comp = c.complement().unwrap();
        assert_eq!(
            comp.circuits(),
            sets(&[&[1, 2, 5], &[1, 3, 5], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]])
        );
        assert_eq!(comp.complement().unwrap(), c);
        assert!(Clutter::complete(4, 3).unwrap().complement().unwrap().is_empty());
        assert!(matches!(
            Clutter::empty(2, 3).unwrap().complement(),
            Err(Error::VerticesBelowUniformity { .. })
        ));
    }

    #[test]
    fn submaximal() {
        assert_eq!(
            example().submaximal_circuits(),
            sets(&[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[3, 4], &[4, 5]])
        );
        assert!(Clutter::empty(4, 3).unwrap().submaximal_circuits().is_empty());
        assert_eq!(Clutter::complete(4, 3).unwrap().submaximal_circuits().len(), 6);
    }

    #[test]
    fn neighborhoods() {
        let c = example();
        assert_eq!(c.open_neighborhood(vs(&[1, 4])).unwrap(), vs(&[2, 3, 5]));
        assert_eq!(c.open_neighborhood(vs(&[2, 5])).unwrap(), VertexSet::EMPTY);
        assert_eq!(c.open_neighborhood(vs(&[1, 5])).unwrap(), vs(&[4]));
        assert_eq!(c.closed_neighborhood(vs(&[1, 5])).unwrap(), vs(&[1, 4, 5]));
        assert!(matches!(
            c.open_neighborhood(vs(&[1])),
            Err(Error::WrongCardinality { .. })
        ));
        for (e, nb) in c.neighborhoods() {
            assert_eq!(c.open_neighborhood(e).unwrap(), nb);
        }
    }

    #[test]
    fn cliques() {
        let c = example();
        assert!(c.is_clique(vs(&[1, 2, 3, 4])));
        assert!(!c.is_clique(vs(&[1, 2, 5])));
        assert!(c.is_clique(vs(&[2, 5])));
        assert!(!c.is_clique(vs(&[1, 2, 4, 5])));
        assert!(c.is_clique(VertexSet::EMPTY));
    }

    #[test]
    fn deletion() {
        let c = example();
        assert_eq!(
            c.delete(vs(&[1, 5])).unwrap().circuits(),
            sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        assert_eq!(c.delete(vs(&[2, 5])).unwrap(), c);
        assert_eq!(
            Clutter::complete(4, 3).unwrap().delete(vs(&[1, 2])).unwrap().circuits(),
            sets(&[&[1, 3, 4], &[2, 3, 4]])
        );
        assert!(c.delete(vs(&[1, 2, 3])).is_err());
    }

    #[test]
    fn circuit_ideals() {
        let gens = example().circuit_ideal().unwrap();
        assert_eq!(
            gens.generators(),
            sets(&[&[1, 2, 5], &[1, 3, 5], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]])
        );
        assert!(Clutter::complete(5, 3).unwrap().circuit_ideal().unwrap().is_zero());
        let path = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        assert_eq!(
            path.circuit_ideal().unwrap().generators(),
            sets(&[&[1, 3], &[1, 4], &[2, 4]])
        );
    }

    #[test]
    fn equal_clutters_hash_equal() {
        use std::collections::hash_map::DefaultHasher;
        let a = Clutter::new(5, 3, &[vec![1, 4, 5], vec![1, 2, 3]]).unwrap();
        let b = Clutter::new(5, 3, &[vec![3, 2, 1], vec![5, 4, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(a, b);
        let h = |c: &Clutter| {
            let mut s = DefaultHasher::new();
            c.hash(&mut s);
            s.finish()
        };
        assert_eq!(h(&a), h(&b));
    }
}
