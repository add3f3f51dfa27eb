//! Random instances: chordal clutters built backwards along a simplicial order, trees,
//! arbitrary graphs and squarefree strongly stable ideals.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chordality::SimplicialOrder;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::macaulay::strongly_stable_closure;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn check_dims(n: usize, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroUniformity);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    if n < d {
        return Err(Error::VerticesBelowUniformity { n, d });
    }
    Ok(())
}

/// A random chordal d-clutter on `[n]` with at most `steps` simplicial elements, together
/// with a simplicial order of it.
///
/// Each step picks a `(d-1)`-set `e` that is not yet submaximal and a vertex set `A` such
/// that every d-subset of `e ∪ A` other than the new circuits `e ∪ {a}` is already present.
/// Adding those circuits makes `e` simplicial, so reading the steps backwards gives an order.
/// `extend` is the chance of trying to enlarge `A` by one more vertex.
pub fn random_chordal<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    steps: usize,
    extend: f64,
    rng: &mut R,
) -> Result<(Clutter, SimplicialOrder)> {
    check_dims(n, d)?;
    let ground = VertexSet::initial_segment(n);
    let mut current = Clutter::empty(n, d)?;
    let mut elements = Vec::new();
    for _ in 0..steps {
        let submaximal: std::collections::HashSet<VertexSet> =
            current.submaximal_circuits().into_iter().collect();
        let mut fresh: Vec<VertexSet> = ground
            .subsets_of_size(d - 1)
            .filter(|e| !submaximal.contains(e))
            .collect();
        if fresh.is_empty() {
            break;
        }
        fresh.shuffle(rng);
        let e = fresh[0];
        let mut outside: Vec<usize> = ground.difference(e).iter().collect();
        outside.shuffle(rng);
        let mut a = VertexSet::EMPTY;
        for &v in &outside {
            if !a.is_empty() && !rng.gen_bool(extend) {
                break;
            }
            // the d-subsets through v that avoid containing e
            let pool = e.union(a);
            let ok = pool
                .subsets_of_size(d - 1)
                .map(|s| s.with(v))
                .filter(|s| !e.is_subset(*s))
                .all(|s| current.contains(s));
            if ok {
                a = a.with(v);
            }
        }
        let mut circuits = current.circuits().to_vec();
        circuits.extend(a.iter().map(|v| e.with(v)));
        current = Clutter::from_sets(n, d, circuits)?;
        elements.push(e);
    }
    elements.reverse();
    let order = SimplicialOrder::replay(&current, &elements)?;
    Ok((current, order))
}

/// Uniformly random labelled tree on `[n]` (as a 2-clutter) from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Clutter> {
    check_dims(n, 2)?;
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (1..=n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push(VertexSet::singleton(leaf).with(v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    edges.push(VertexSet::singleton(rest[0]).with(rest[1]));
    Clutter::from_sets(n, 2, edges)
}

/// Random graph on `[n]` with each edge present with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Clutter> {
    check_dims(n, 2)?;
    let edges: Vec<VertexSet> = VertexSet::initial_segment(n)
        .subsets_of_size(2)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Clutter::from_sets(n, 2, edges)
}

/// Strongly stable closure of `seeds` random d-sets of `[n]`.
pub fn random_strongly_stable<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    seeds: usize,
    rng: &mut R,
) -> Result<SquarefreeIdeal> {
    check_dims(n, d)?;
    let all: Vec<VertexSet> = VertexSet::initial_segment(n).subsets_of_size(d).collect();
    let chosen = all.choose_multiple(rng, seeds.clamp(1, all.len())).copied();
    strongly_stable_closure(n, chosen)
}
