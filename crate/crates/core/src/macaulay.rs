//! Macaulay representations, M-sequences and the correspondence between λ-sequences of
//! chordal clutters and generator counts of squarefree strongly stable ideals.
//!
//! For `n > d > 0` the integers `α_j` are defined by
//!
//! ```text
//! Σ_j α_j s^j = Σ_{j=0}^{n-d} C(n, d+j) (s-1)^{j+1}
//! ```
//!
//! and a λ-sequence is realizable by a chordal clutter `C ≠ C_{n,d}` exactly when
//! `l_j = m_{d+j}`, recovered from λ and α, is an M-sequence with `l_1 <= d`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binom, binomial};
use crate::chordality::LambdaSequence;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::poly::IntPolynomial;
use crate::vertex_set::VertexSet;

/// `a = C(a(i), i) + C(a(i-1), i-1) + ... + C(a(j), j)` with `a(i) > a(i-1) > ... > a(j) >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub degree: usize,
    /// `(a(k), k)` pairs, `k` descending from `degree`.
    pub terms: Vec<(u64, usize)>,
}

impl MacaulayRep {
    /// Sum of the binomials.
    pub fn value(&self) -> BigInt {
        self.terms.iter().map(|&(top, k)| binom(top as usize, k)).sum()
    }

    /// `a^{<i>}`: every term shifted to `C(a(k)+1, k+1)`.
    pub fn shifted(&self) -> BigInt {
        self.terms
            .iter()
            .map(|&(top, k)| binom(top as usize + 1, k + 1))
            .sum()
    }
}

/// Largest `m >= k` with `C(m, k) <= a`, for `a >= 1`.
fn largest_top(a: &BigInt, k: usize) -> u64 {
    let fits = |m: u64| binom(m as usize, k) <= *a;
    let mut lo = k as u64;
    let mut hi = lo.max(1) * 2;
    while fits(hi) {
        lo = hi;
        hi *= 2;
    }
    // fits(lo) and !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `i`-th Macaulay representation of `a >= 1`, by the greedy algorithm.
pub fn macaulay_representation(a: &BigInt, i: usize) -> Result<MacaulayRep> {
    if !a.is_positive() || i == 0 {
        return Err(Error::InvalidParameters {
            n: a.to_usize().unwrap_or(0),
            d: i,
        });
    }
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut k = i;
    while rest.is_positive() {
        debug_assert!(k >= 1);
        let top = largest_top(&rest, k);
        rest -= binom(top as usize, k);
        terms.push((top, k));
        k -= 1;
    }
    Ok(MacaulayRep { degree: i, terms })
}

/// `a^{<i>}`, with `0^{<i>} = 0`.
pub fn macaulay_bound(a: &BigInt, i: usize) -> Result<BigInt> {
    if a.is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(macaulay_representation(a, i)?.shifted())
}

/// `l_0 = 1`, all entries non-negative, and `l_{i+1} <= l_i^{<i>}` for `i >= 1`.
pub fn is_m_sequence(l: &[BigInt]) -> bool {
    first_m_sequence_violation(l).is_none()
}

/// Index of the first entry breaking the M-sequence conditions.
pub fn first_m_sequence_violation(l: &[BigInt]) -> Option<usize> {
    if l.first().is_none_or(|x| !x.is_one()) {
        return Some(0);
    }
    if let Some(i) = l.iter().position(|x| x.is_negative()) {
        return Some(i);
    }
    (1..l.len().saturating_sub(1)).find_map(|i| {
        let bound = macaulay_bound(&l[i], i).expect("i >= 1 and l_i >= 0");
        (l[i + 1] > bound).then_some(i + 1)
    })
}

/// `(α_0, ..., α_{n-d+1})` for fixed `(n, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaSequence {
    pub n: usize,
    pub d: usize,
    #[serde(with = "crate::serde_int::vec")]
    alpha: Vec<BigInt>,
}

impl AlphaSequence {
    pub fn entries(&self) -> &[BigInt] {
        &self.alpha
    }

    /// `α_k`, zero outside `0..=n-d+1`.
    pub fn get(&self, k: usize) -> BigInt {
        self.alpha.get(k).cloned().unwrap_or_default()
    }

    /// `σ_j = -Σ_{i<=j} α_i` for `j = 0..=n-d+1`.
    pub fn partial_sums(&self) -> Vec<BigInt> {
        let mut acc = BigInt::zero();
        self.alpha
            .iter()
            .map(|a| {
                acc -= a;
                acc.clone()
            })
            .collect()
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.alpha.clone())
    }

    /// `σ_j >= 0`, `σ_{n-d+1} = 0`, and `p_{n,d}` has non-negative coefficients with
    /// leading coefficient 1 in degree `n - d`.
    pub fn check_partial_sums(&self) -> bool {
        let sigma = self.partial_sums();
        let p = p_polynomial(self.n, self.d).expect("n > d");
        sigma.iter().all(|s| !s.is_negative())
            && sigma.last().is_some_and(Zero::is_zero)
            && p.coeffs().iter().all(|c| !c.is_negative())
            && p.degree() == Some(self.n - self.d)
            && p.coeffs().last().is_some_and(One::is_one)
    }
}

/// Expands the generating function of `α`. Requires `n > d > 0`.
pub fn alpha_sequence(n: usize, d: usize) -> Result<AlphaSequence> {
    check_n_gt_d(n, d)?;
    let p: IntPolynomial = (0..=n - d)
        .map(|j| IntPolynomial::linear_power(-1, 1, j + 1).scale(&binom(n, d + j)))
        .sum();
    let alpha = p.padded(n - d + 2);
    let seq = AlphaSequence { n, d, alpha };
    debug_assert!(seq.check_partial_sums(), "alpha sequence ({n}, {d}) breaks the partial sum identities");
    Ok(seq)
}

/// `α_k = Σ_{j=max(k,1)}^{n-d+1} (-1)^{j-k} C(n, d+j-1) C(j, k)`.
///
/// The sum starts at `j = 1` because the lowest power of `(s-1)` in the generating
/// function is the first.
pub fn alpha_closed_form(n: usize, d: usize, k: usize) -> BigInt {
    (k.max(1)..=n + 1 - d)
        .map(|j| {
            let term = binom(n, d + j - 1) * binom(j, k);
            if (j - k).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `p_{n,d}(s) = Σ_{j=0}^{n-d} C(n, d+j) (s-1)^j` for `n >= d >= 0`.
pub fn p_polynomial(n: usize, d: usize) -> Result<IntPolynomial> {
    if d > n {
        return Err(Error::VerticesBelowUniformity { n, d });
    }
    Ok((0..=n - d)
        .map(|j| IntPolynomial::linear_power(-1, 1, j).scale(&binom(n, d + j)))
        .sum())
}

fn check_n_gt_d(n: usize, d: usize) -> Result<()> {
    if d == 0 || n <= d {
        return Err(Error::InvalidParameters { n, d });
    }
    Ok(())
}

/// `λ_{n-d-i} = α_{n-d-i} + l_i - l_{i+1}` for `i = 0..n-d`, given `l = (l_0, ..., l_{n-d})`.
pub fn lambda_from_lsequence(n: usize, d: usize, l: &[BigInt]) -> Result<LambdaSequence> {
    check_n_gt_d(n, d)?;
    let top = n - d;
    if l.len() != top + 1 {
        return Err(Error::LSequenceLength {
            expected: top + 1,
            found: l.len(),
        });
    }
    if !l[0].is_one() {
        return Err(Error::LSequenceStart);
    }
    let alpha = alpha_sequence(n, d)?;
    let mut lambda = vec![BigInt::zero(); top];
    for i in 0..top {
        let idx = top - i;
        let value = alpha.get(idx) + &l[i] - &l[i + 1];
        if value.is_negative() {
            return Err(Error::NegativeLambda {
                index: idx,
                value: value.to_string(),
            });
        }
        lambda[idx - 1] = value;
    }
    Ok(LambdaSequence::new(n, d, lambda))
}

/// Inverts [`lambda_from_lsequence`]:
/// `m_{n-j} = σ_j - Σ_{i=j+1}^{n-d+1} λ_i` and `l_{n-d-j} = m_{n-j}`.
pub fn lsequence_from_lambda(n: usize, d: usize, lambda: &LambdaSequence) -> Result<Vec<BigInt>> {
    check_n_gt_d(n, d)?;
    let top = n - d;
    if let Some((i, x)) = lambda.entries().iter().enumerate().find(|(_, x)| x.is_negative()) {
        return Err(Error::NegativeLambda {
            index: i + 1,
            value: x.to_string(),
        });
    }
    if lambda.len() > top {
        return Err(Error::LambdaTooLong { index: lambda.len() });
    }
    let sigma = alpha_sequence(n, d)?.partial_sums();
    let mut l = vec![BigInt::zero(); top + 1];
    for j in 0..=top {
        let tail: BigInt = (j + 1..=top + 1).map(|i| lambda.get(i)).sum();
        let m = &sigma[j] - tail;
        if m.is_negative() {
            return Err(Error::NegativeGeneratorCount {
                index: n - j,
                value: m.to_string(),
            });
        }
        l[top - j] = m;
    }
    Ok(l)
}

/// Outcome of [`is_valid_lambda`]: the recovered l-sequence when it exists and the
/// reason for rejection otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaDiagnosis {
    pub valid: bool,
    #[serde(with = "crate::serde_int::option_vec")]
    pub lsequence: Option<Vec<BigInt>>,
    pub problem: Option<String>,
}

/// Whether `λ` is the λ-sequence of a chordal d-clutter on `[n]` other than `C_{n,d}`.
pub fn is_valid_lambda(n: usize, d: usize, lambda: &LambdaSequence) -> LambdaDiagnosis {
    let reject = |lsequence, problem: String| LambdaDiagnosis {
        valid: false,
        lsequence,
        problem: Some(problem),
    };
    let l = match lsequence_from_lambda(n, d, lambda) {
        Ok(l) => l,
        Err(e) => return reject(None, e.to_string()),
    };
    if let Some(i) = first_m_sequence_violation(&l) {
        let problem = format!("l-sequence is not an M-sequence at l_{i}");
        return reject(Some(l), problem);
    }
    if l.len() > 1 && l[1] > BigInt::from(d) {
        let problem = format!("l_1 = {} exceeds d = {d}", l[1]);
        return reject(Some(l), problem);
    }
    LambdaDiagnosis {
        valid: true,
        lsequence: Some(l),
        problem: None,
    }
}

fn check_index(n: usize, d: usize, i: usize) -> Result<()> {
    check_n_gt_d(n, d)?;
    if i == 0 || i > n - d {
        return Err(Error::IndexOutOfRange { i, max: n - d });
    }
    Ok(())
}

/// Largest `λ_i` over chordal d-clutters on `[n]` other than `C_{n,d}`: `α_i + C(n-1-i, d-1)`.
pub fn lambda_max(n: usize, d: usize, i: usize) -> Result<BigInt> {
    check_index(n, d, i)?;
    Ok(alpha_sequence(n, d)?.get(i) + binom(n - 1 - i, d - 1))
}

/// The whole λ-sequence of a clutter attaining [`lambda_max`] at `i`.
pub fn extremal_lambda_profile(n: usize, d: usize, i: usize) -> Result<LambdaSequence> {
    check_index(n, d, i)?;
    let alpha = alpha_sequence(n, d)?;
    let entries = (1..=n - d)
        .map(|j| {
            let a = alpha.get(j);
            match j.cmp(&i) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Equal => a + binom(n - 1 - j, d - 1),
                std::cmp::Ordering::Greater => a - binomial((n - 1 - j) as i64, d as i64 - 2),
            }
        })
        .collect();
    Ok(LambdaSequence::new(n, d, entries))
}

/// `{F ⊂ [n] : |F| = d, F ⊄ [n-i]}`, the clutter with strongly stable circuit ideal
/// attaining [`lambda_max`] at `i`.
pub fn extremal_clutter(n: usize, d: usize, i: usize) -> Result<Clutter> {
    check_index(n, d, i)?;
    let low = VertexSet::initial_segment(n - i);
    let circuits: Vec<VertexSet> = VertexSet::initial_segment(n)
        .subsets_of_size(d)
        .filter(|f| !f.is_subset(low))
        .collect();
    Clutter::from_sets(n, d, circuits)
}

/// `λ_i(C_{n,d}) = C(n-1-i, d-2)` for `1 <= i <= n-d+1`. Requires `n >= d >= 2`.
pub fn complete_lambda(n: usize, d: usize) -> Result<LambdaSequence> {
    if d < 2 || n < d {
        return Err(Error::InvalidParameters { n, d });
    }
    let entries = (1..=n - d + 1).map(|i| binom(n - 1 - i, d - 2)).collect();
    Ok(LambdaSequence::new(n, d, entries))
}

/// For every generator `u`, `j ∈ u` and `i < j` with `i ∉ u`, the set `(u \ j) ∪ i` lies in the ideal.
pub fn is_squarefree_strongly_stable(ideal: &SquarefreeIdeal) -> bool {
    ideal.generators().iter().all(|&u| {
        u.iter().all(|j| {
            (1..j)
                .filter(|&i| !u.contains(i))
                .all(|i| ideal.contains(u.without(j).with(i)))
        })
    })
}

fn equigenerated_degree(ideal: &SquarefreeIdeal) -> Result<usize> {
    ideal.degree().ok_or(Error::NotEquigenerated)
}

/// `(m_d, ..., m_n)` with `m_k` the number of generators whose largest vertex is `k`.
pub fn m_vector(ideal: &SquarefreeIdeal) -> Result<Vec<usize>> {
    let d = equigenerated_degree(ideal)?;
    let mut m = vec![0usize; ideal.n() - d + 1];
    for g in ideal.generators() {
        m[g.max_vertex().expect("generators of positive degree") - d] += 1;
    }
    Ok(m)
}

/// Number of squarefree monomials of degree `d + j` in the ideal, counted by enumeration.
pub fn mu_direct(ideal: &SquarefreeIdeal, j: usize) -> Result<BigInt> {
    let d = equigenerated_degree(ideal)?;
    let count = VertexSet::initial_segment(ideal.n())
        .subsets_of_size(d + j)
        .filter(|&s| ideal.contains(s))
        .count();
    Ok(BigInt::from(count))
}

/// `μ_{d+j} = Σ_i C(n-d-i, j) m_{d+i}`, valid for squarefree strongly stable ideals only.
pub fn mu_via_lemma(ideal: &SquarefreeIdeal, j: usize) -> Result<BigInt> {
    if !is_squarefree_strongly_stable(ideal) {
        return Err(Error::NotStronglyStable);
    }
    let d = equigenerated_degree(ideal)?;
    let n = ideal.n();
    Ok(m_vector(ideal)?
        .iter()
        .enumerate()
        .map(|(i, &m)| binomial((n - d - i) as i64, j as i64) * BigInt::from(m))
        .sum())
}

/// Smallest squarefree strongly stable ideal containing `gens`.
pub fn strongly_stable_closure(n: usize, gens: impl IntoIterator<Item = VertexSet>) -> Result<SquarefreeIdeal> {
    let mut seen: std::collections::HashSet<VertexSet> = std::collections::HashSet::new();
    let mut stack: Vec<VertexSet> = gens.into_iter().collect();
    while let Some(u) = stack.pop() {
        if !seen.insert(u) {
            continue;
        }
        for j in u.iter() {
            for i in (1..j).filter(|&i| !u.contains(i)) {
                stack.push(u.without(j).with(i));
            }
        }
    }
    SquarefreeIdeal::new(n, seen)
}

/// A squarefree strongly stable ideal in degree `d` with `m_{d+j} = l_j`: for each largest
/// vertex `k = d + j`, take the `l_j` lexicographically first sets `F ∪ {k}`, `F ⊂ [k-1]`.
/// The result is verified before it is returned.
pub fn strongly_stable_witness(n: usize, d: usize, l: &[BigInt]) -> Result<SquarefreeIdeal> {
    check_n_gt_d(n, d)?;
    let failed = || Error::WitnessFailed(format!("{l:?}"));
    if l.len() != n - d + 1 {
        return Err(Error::LSequenceLength {
            expected: n - d + 1,
            found: l.len(),
        });
    }
    let mut gens = Vec::new();
    for (j, count) in l.iter().enumerate() {
        let k = d + j;
        let count = count.to_usize().ok_or_else(failed)?;
        let chosen: Vec<VertexSet> = VertexSet::initial_segment(k - 1)
            .subsets_of_size(d - 1)
            .take(count)
            .map(|f| f.with(k))
            .collect();
        if chosen.len() < count {
            return Err(failed());
        }
        gens.extend(chosen);
    }
    let ideal = SquarefreeIdeal::new(n, gens)?;
    let expected: Vec<usize> = l.iter().map(|x| x.to_usize().unwrap()).collect();
    if ideal.is_zero() || !is_squarefree_strongly_stable(&ideal) || m_vector(&ideal)? != expected {
        return Err(failed());
    }
    Ok(ideal)
}
