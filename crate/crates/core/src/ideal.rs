use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A squarefree monomial ideal in `K[x_1, ..., x_n]`, each generator `x_F` stored as the set `F`.
///
/// Generators are the minimal ones, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<VertexSet>,
    degree: Option<usize>,
}

impl SquarefreeIdeal {
    /// The ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(n: usize, gens: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let range = VertexSet::initial_segment(n);
        let mut gens: Vec<VertexSet> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(range)) {
            return Err(Error::VertexOutOfRange {
                vertex: bad.difference(range).min_vertex().unwrap_or(0),
                n,
            });
        }
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<VertexSet> = gens
            .iter()
            .copied()
            .filter(|g| !gens.iter().any(|h| h != g && h.is_subset(*g)))
            .collect();
        Ok(Self::from_minimal_unchecked(n, minimal))
    }

    pub(crate) fn from_minimal_unchecked(n: usize, gens: Vec<VertexSet>) -> Self {
        let degree = match gens.first() {
            Some(g) if gens.iter().all(|h| h.len() == g.len()) => Some(g.len()),
            _ => None,
        };
        SquarefreeIdeal { n, gens, degree }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    /// Common generator degree, if the ideal is nonzero and equigenerated.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the squarefree monomial `x_F` lies in the ideal.
    pub fn contains(&self, f: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(f))
    }
}
