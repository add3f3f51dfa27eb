//! Simplicial elements, simplicial orders and the chordality decision.
//!
//! A clutter is chordal when it is empty or some simplicial submaximal
//! circuit can be deleted leaving a chordal clutter. Whether every greedy
//! choice extends to a full order is not known, so [`find_simplicial_order`]
//! backtracks over all choices and memoizes clutters already shown to fail.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest `|SC(C)|` accepted by [`enumerate_simplicial_orders`].
pub const MAX_ENUMERATION_SUBMAXIMAL: usize = 24;

/// One deletion step: the simplicial element and the size of its open neighborhood at that point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub element: VertexSet,
    pub neighborhood: usize,
}

/// A sequence of simplicial deletions that empties a clutter.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplicialOrder {
    steps: Vec<Step>,
}

impl SimplicialOrder {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.steps.iter().map(|s| s.element)
    }

    pub fn multiset(&self) -> Multiset {
        simplicial_multiset(self)
    }

    /// Replays `elements` on `c`, recording neighborhood sizes. Fails unless
    /// every element is simplicial when deleted and the clutter ends up empty.
    pub fn replay(c: &Clutter, elements: &[VertexSet]) -> Result<SimplicialOrder> {
        let steps = replay_sequence(c, elements)?.0;
        let order = SimplicialOrder { steps };
        let rest = order
            .elements()
            .fold(c.clone(), |acc, e| acc.delete_unchecked(e));
        if !rest.is_empty() {
            return Err(Error::InvalidOrder {
                step: elements.len(),
                reason: format!("{} circuits remain after the last step", rest.len()),
            });
        }
        Ok(order)
    }

    /// Checks this order against `c`, including the recorded neighborhood sizes.
    pub fn verify(&self, c: &Clutter) -> Result<()> {
        let elements: Vec<VertexSet> = self.elements().collect();
        let replayed = SimplicialOrder::replay(c, &elements)?;
        for (i, (a, b)) in self.steps.iter().zip(&replayed.steps).enumerate() {
            if a.neighborhood != b.neighborhood {
                return Err(Error::InvalidOrder {
                    step: i + 1,
                    reason: format!(
                        "recorded N = {} but replay gives {}",
                        a.neighborhood, b.neighborhood
                    ),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for SimplicialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("({},{})", s.element, s.neighborhood))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn replay_sequence(c: &Clutter, elements: &[VertexSet]) -> Result<(Vec<Step>, Clutter)> {
    let mut current = c.clone();
    let mut steps = Vec::with_capacity(elements.len());
    for (i, &e) in elements.iter().enumerate() {
        if e.len() + 1 != c.d() {
            return Err(Error::InvalidOrder {
                step: i + 1,
                reason: format!("{e} does not have {} vertices", c.d() - 1),
            });
        }
        let nb = current.open_neighborhood_unchecked(e);
        if nb.is_empty() {
            return Err(Error::InvalidOrder {
                step: i + 1,
                reason: format!("{e} is not a submaximal circuit"),
            });
        }
        if !current.is_clique(e.union(nb)) {
            return Err(Error::InvalidOrder {
                step: i + 1,
                reason: format!("{e} is not simplicial"),
            });
        }
        steps.push(Step {
            element: e,
            neighborhood: nb.len(),
        });
        current = current.delete_unchecked(e);
    }
    Ok((steps, current))
}

/// Neighborhood sizes of a simplicial order, as value -> multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
}

impl Multiset {
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        for s in sizes {
            *counts.entry(s).or_insert(0) += 1;
        }
        Multiset { counts }
    }

    /// The multiset with `λ_i` copies of `i`.
    pub fn from_lambda(lambda: &LambdaSequence) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (i, l) in lambda.entries().iter().enumerate() {
            let count = l.to_usize().ok_or_else(|| Error::NegativeLambda {
                index: i + 1,
                value: l.to_string(),
            })?;
            if count > 0 {
                counts.insert(i + 1, count);
            }
        }
        Ok(Multiset { counts })
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Elements in increasing order, repeated by multiplicity.
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .flat_map(|(&v, &k)| std::iter::repeat_n(v, k))
    }

    /// `Σ N_k`, which equals the number of circuits deleted.
    pub fn weighted_sum(&self) -> usize {
        self.counts.iter().map(|(v, k)| v * k).sum()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `λ_i` = number of steps with neighborhood size `i`; stored from `λ_1`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LambdaSequence {
    pub n: usize,
    pub d: usize,
    #[serde(with = "crate::serde_int::vec")]
    entries: Vec<BigInt>,
}

impl LambdaSequence {
    /// `entries[0]` is `λ_1`. Trailing zeros are dropped.
    pub fn new(n: usize, d: usize, mut entries: Vec<BigInt>) -> Self {
        while entries.last().is_some_and(|x| x.is_zero()) {
            entries.pop();
        }
        LambdaSequence { n, d, entries }
    }

    pub fn from_u64(n: usize, d: usize, entries: &[u64]) -> Self {
        Self::new(n, d, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `λ_i` for `i >= 1`; zero past the stored range.
    pub fn get(&self, i: usize) -> BigInt {
        assert!(i >= 1, "lambda is indexed from 1");
        self.entries.get(i - 1).cloned().unwrap_or_default()
    }

    /// Index of the last nonzero entry (0 for the zero sequence).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

impl fmt::Display for LambdaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Result of the chordality decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Chordal(SimplicialOrder),
    NotChordal,
    /// The configured state budget ran out before the search finished. Proves nothing.
    Inconclusive { states_explored: usize },
}

impl SearchOutcome {
    pub fn order(&self) -> Option<&SimplicialOrder> {
        match self {
            SearchOutcome::Chordal(o) => Some(o),
            _ => None,
        }
    }

    pub fn is_chordal(&self) -> bool {
        matches!(self, SearchOutcome::Chordal(_))
    }
}

/// Resource limits for the backtracking searches. The default has no cutoff.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of distinct clutters expanded before giving up.
    pub max_states: Option<usize>,
}

/// Submaximal circuits whose closed neighborhood is a clique, with their open neighborhoods,
/// in lexicographic order.
pub fn simplicial_with_neighborhoods(c: &Clutter) -> Vec<(VertexSet, VertexSet)> {
    c.neighborhoods()
        .into_iter()
        .filter(|&(e, nb)| closed_neighborhood_is_clique(c, e, nb))
        .collect()
}

/// `Simp(C)`.
pub fn simplicial_elements(c: &Clutter) -> Vec<VertexSet> {
    simplicial_with_neighborhoods(c)
        .into_iter()
        .map(|(e, _)| e)
        .collect()
}

fn closed_neighborhood_is_clique(c: &Clutter, e: VertexSet, nb: VertexSet) -> bool {
    // d-subsets that contain e are circuits by definition of nb
    e.union(nb)
        .subsets_of_size(c.d())
        .all(|f| e.is_subset(f) || c.contains(f))
}

/// `|N_k|` multiset of an order.
pub fn simplicial_multiset(order: &SimplicialOrder) -> Multiset {
    Multiset::from_sizes(order.steps.iter().map(|s| s.neighborhood))
}

pub fn lambda_sequence(multiset: &Multiset, n: usize, d: usize) -> LambdaSequence {
    let len = multiset.max().unwrap_or(0);
    let mut entries = vec![BigInt::zero(); len];
    for (&v, &k) in multiset.counts() {
        if v >= 1 {
            entries[v - 1] = BigInt::from(k);
        }
    }
    LambdaSequence::new(n, d, entries)
}

/// Chordality with default (unbounded) search.
pub fn find_simplicial_order(c: &Clutter) -> SearchOutcome {
    find_simplicial_order_with(c, &SearchConfig::default())
}

/// Depth-first search over simplicial deletions, candidates in lexicographic order.
/// The witness for a chordal clutter is the lexicographically first complete order.
pub fn find_simplicial_order_with(c: &Clutter, config: &SearchConfig) -> SearchOutcome {
    let mut search = Backtrack {
        failed: HashSet::new(),
        expanded: 0,
        max_states: config.max_states,
    };
    let mut steps = Vec::new();
    match search.dfs(c, &mut steps) {
        Ok(true) => SearchOutcome::Chordal(SimplicialOrder { steps }),
        Ok(false) => SearchOutcome::NotChordal,
        Err(Cutoff) => SearchOutcome::Inconclusive {
            states_explored: search.expanded,
        },
    }
}

struct Cutoff;

struct Backtrack {
    failed: HashSet<Vec<VertexSet>>,
    expanded: usize,
    max_states: Option<usize>,
}

impl Backtrack {
    fn dfs(&mut self, c: &Clutter, steps: &mut Vec<Step>) -> std::result::Result<bool, Cutoff> {
        if c.is_empty() {
            return Ok(true);
        }
        if self.failed.contains(c.circuits()) {
            return Ok(false);
        }
        if self.max_states.is_some_and(|m| self.expanded >= m) {
            return Err(Cutoff);
        }
        self.expanded += 1;
        for (e, nb) in simplicial_with_neighborhoods(c) {
            steps.push(Step {
                element: e,
                neighborhood: nb.len(),
            });
            if self.dfs(&c.delete_unchecked(e), steps)? {
                return Ok(true);
            }
            steps.pop();
        }
        self.failed.insert(c.circuits().to_vec());
        Ok(false)
    }
}

/// Deletes the lexicographically smallest simplicial element until stuck.
/// `None` means the greedy path got stuck, which does not prove non-chordality.
pub fn greedy_simplicial_order(c: &Clutter) -> Option<SimplicialOrder> {
    let mut current = c.clone();
    let mut steps = Vec::new();
    while !current.is_empty() {
        let (e, nb) = current
            .neighborhoods()
            .into_iter()
            .find(|&(e, nb)| closed_neighborhood_is_clique(&current, e, nb))?;
        steps.push(Step {
            element: e,
            neighborhood: nb.len(),
        });
        current = current.delete_unchecked(e);
    }
    Some(SimplicialOrder { steps })
}

/// Every complete simplicial order of `c`, up to `limit` of them.
pub fn enumerate_simplicial_orders(c: &Clutter, limit: usize) -> Result<Vec<SimplicialOrder>> {
    let sc = c.submaximal_circuits().len();
    if sc > MAX_ENUMERATION_SUBMAXIMAL {
        return Err(Error::BoundExceeded {
            what: "simplicial order enumeration",
            size: sc,
            bound: MAX_ENUMERATION_SUBMAXIMAL,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    enumerate_rec(c, &mut steps, &mut out, limit);
    Ok(out)
}

fn enumerate_rec(c: &Clutter, steps: &mut Vec<Step>, out: &mut Vec<SimplicialOrder>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    if c.is_empty() {
        out.push(SimplicialOrder {
            steps: steps.clone(),
        });
        return;
    }
    for (e, nb) in simplicial_with_neighborhoods(c) {
        steps.push(Step {
            element: e,
            neighborhood: nb.len(),
        });
        enumerate_rec(&c.delete_unchecked(e), steps, out, limit);
        steps.pop();
        if out.len() >= limit {
            return;
        }
    }
}

/// Co-chordality: a simplicial sequence in the complete clutter whose deletions leave exactly `c`.
/// Returns the sequence when one exists.
pub fn is_co_chordal(c: &Clutter) -> Result<Option<Vec<Step>>> {
    match co_chordal_with(c, &SearchConfig::default())? {
        CoChordality::Yes(w) => Ok(Some(w)),
        CoChordality::No => Ok(None),
        CoChordality::Inconclusive { .. } => unreachable!("no budget configured"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoChordality {
    Yes(Vec<Step>),
    No,
    Inconclusive { states_explored: usize },
}

pub fn co_chordal_with(c: &Clutter, config: &SearchConfig) -> Result<CoChordality> {
    let complete = Clutter::complete(c.n(), c.d())?;
    if c.n() < c.d() {
        return Ok(CoChordality::Yes(Vec::new()));
    }
    // deleting any e inside a circuit of c would destroy that circuit
    let forbidden: HashSet<VertexSet> = c.submaximal_circuits().into_iter().collect();
    let mut search = CoSearch {
        target: c,
        forbidden,
        failed: HashSet::new(),
        expanded: 0,
        max_states: config.max_states,
    };
    let mut steps = Vec::new();
    Ok(match search.dfs(&complete, &mut steps) {
        Ok(true) => CoChordality::Yes(steps),
        Ok(false) => CoChordality::No,
        Err(Cutoff) => CoChordality::Inconclusive {
            states_explored: search.expanded,
        },
    })
}

struct CoSearch<'a> {
    target: &'a Clutter,
    forbidden: HashSet<VertexSet>,
    failed: HashSet<Vec<VertexSet>>,
    expanded: usize,
    max_states: Option<usize>,
}

impl CoSearch<'_> {
    fn dfs(&mut self, current: &Clutter, steps: &mut Vec<Step>) -> std::result::Result<bool, Cutoff> {
        if current.len() == self.target.len() {
            // current is always a superset of the target
            return Ok(true);
        }
        if self.failed.contains(current.circuits()) {
            return Ok(false);
        }
        if self.max_states.is_some_and(|m| self.expanded >= m) {
            return Err(Cutoff);
        }
        self.expanded += 1;
        for (e, nb) in simplicial_with_neighborhoods(current) {
            if self.forbidden.contains(&e) {
                continue;
            }
            steps.push(Step {
                element: e,
                neighborhood: nb.len(),
            });
            if self.dfs(&current.delete_unchecked(e), steps)? {
                return Ok(true);
            }
            steps.pop();
        }
        self.failed.insert(current.circuits().to_vec());
        Ok(false)
    }
}
