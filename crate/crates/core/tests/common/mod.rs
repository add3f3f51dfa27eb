//! Oracles written independently of the library, shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use clutterlab::macaulay::is_m_sequence;
use clutterlab::Clutter;

/// Adjacency matrix of a 2-clutter, 1-indexed.
pub fn adjacency(c: &Clutter) -> Vec<Vec<bool>> {
    let n = c.n();
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for e in c.circuits() {
        let v = e.to_vec();
        adj[v[0]][v[1]] = true;
        adj[v[1]][v[0]] = true;
    }
    adj
}

/// Maximum cardinality search followed by a perfect elimination ordering check.
pub fn graph_is_chordal(c: &Clutter) -> bool {
    assert_eq!(c.d(), 2);
    let n = c.n();
    let adj = adjacency(c);
    let mut weight = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        visit_order.push(v);
        for u in 1..=n {
            if adj[v][u] && !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // the reverse of the visit order is a perfect elimination ordering iff the graph is chordal
    let mut position = vec![0usize; n + 1];
    for (k, &v) in visit_order.iter().enumerate() {
        position[v] = k;
    }
    visit_order.iter().all(|&v| {
        let earlier: Vec<usize> = (1..=n)
            .filter(|&u| adj[v][u] && position[u] < position[v])
            .collect();
        earlier
            .iter()
            .all(|&a| earlier.iter().all(|&b| a == b || adj[a][b]))
    })
}

/// All graphs on `[n]`, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Clutter> {
    let pairs: Vec<Vec<usize>> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| vec![a, b]))
        .collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        let chosen: Vec<Vec<usize>> = (0..m)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| pairs[k].clone())
            .collect();
        Clutter::new(n, 2, &chosen).unwrap()
    })
}

pub fn binom_u(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Macaulay representation by trying every strictly decreasing top sequence. Small inputs only.
pub fn naive_macaulay(a: u64, i: usize) -> Vec<(u64, usize)> {
    fn go(rest: u64, k: usize, cap: u64, acc: &mut Vec<(u64, usize)>) -> bool {
        if rest == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        // try tops from large to small so the first hit is the greedy one
        for top in (k as u64..cap).rev() {
            let b = binom_u(top, k as u64);
            if b <= rest {
                acc.push((top, k));
                if go(rest - b, k - 1, top, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    assert!(go(a, i, a + i as u64 + 1, &mut acc));
    acc
}

/// Every M-sequence `(1, l_1, ..., l_len-1)` with `l_1 <= d` and all entries at most `cap`.
pub fn m_sequences(len: usize, d: u64, cap: u64) -> Vec<Vec<BigInt>> {
    fn extend(prefix: &mut Vec<BigInt>, len: usize, d: u64, cap: u64, out: &mut Vec<Vec<BigInt>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let top = if prefix.len() == 1 { d.min(cap) } else { cap };
        for x in 0..=top {
            prefix.push(BigInt::from(x));
            if is_m_sequence(prefix) {
                extend(prefix, len, d, cap, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![BigInt::from(1)], len, d, cap, &mut out);
    out
}

pub fn to_u64s(v: &[BigInt]) -> Vec<u64> {
    v.iter().map(|x| x.to_u64().unwrap()).collect()
}
