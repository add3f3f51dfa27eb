//! f-, h- and Betti invariants of chordal clutters computed from the simplicial multiset,
//! together with the face-counting route used to check them.
//!
//! For a chordal d-clutter on `[n]` with multiset `{N_1, ..., N_r}` and
//! clique complex `Δ`:
//!
//! ```text
//! f_Δ(t) = Σ_{i<d} C(n,i) t^i + t^{d-1} Σ_k ((1+t)^{N_k} - 1)
//! ```
//!
//! and `dim Δ = max N_k + d - 2`. The h-vector and the Betti numbers of the
//! circuit ideal follow by polynomial substitutions, all over exact integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::binom;
use crate::chordality::Multiset;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::homology::OracleLimits;
use crate::poly::IntPolynomial;

/// `(f_{-1}, f_0, ..., f_{δ-1})` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector {
    #[serde(with = "crate::serde_int::vec")]
    f: Vec<BigInt>,
}

impl FVector {
    pub fn new(f: Vec<BigInt>) -> Self {
        let p = IntPolynomial::new(f);
        FVector { f: p.coeffs().to_vec() }
    }

    pub fn from_polynomial(p: &IntPolynomial) -> Self {
        FVector { f: p.coeffs().to_vec() }
    }

    pub fn from_u64(f: &[u64]) -> Self {
        Self::new(f.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.f
    }

    /// `δ = dim Δ + 1`.
    pub fn delta(&self) -> usize {
        self.f.len().saturating_sub(1)
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.f.clone())
    }
}

/// `(h_0, ..., h_δ)`; entries may be negative and the vector keeps its full length `δ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector {
    #[serde(with = "crate::serde_int::vec")]
    h: Vec<BigInt>,
}

impl HVector {
    pub fn new(h: Vec<BigInt>) -> Self {
        assert!(!h.is_empty(), "an h-vector has at least h_0");
        HVector { h }
    }

    pub fn from_i64(h: &[i64]) -> Self {
        Self::new(h.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.h
    }

    pub fn delta(&self) -> usize {
        self.h.len() - 1
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.h.clone())
    }
}

/// Total Betti numbers `(β_0, ..., β_p)` of an ideal with a linear resolution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiSequence {
    #[serde(with = "crate::serde_int::vec")]
    beta: Vec<BigInt>,
}

impl BettiSequence {
    pub fn new(beta: Vec<BigInt>) -> Self {
        BettiSequence { beta }
    }

    pub fn from_u64(beta: &[u64]) -> Self {
        Self::new(beta.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.beta
    }

    /// `None` for the zero ideal.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.beta.len().checked_sub(1)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[BigInt]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in entries.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.f)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.h)
    }
}

impl fmt::Display for BettiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.beta)
    }
}

fn binomial_part(n: usize, d: usize) -> IntPolynomial {
    IntPolynomial::new((0..d).map(|i| binom(n, i)).collect())
}

/// `f_Δ(t)` from the multiset, via `M_i = Σ_k C(N_k, i)`. The `(1+t)^{N_k}` form is
/// computed as well and must agree.
pub fn f_polynomial_from_multiset(n: usize, d: usize, multiset: &Multiset) -> IntPolynomial {
    let top = multiset.max().unwrap_or(0);
    let m: Vec<BigInt> = (0..=top)
        .map(|i| {
            if i == 0 {
                BigInt::zero()
            } else {
                multiset.sizes().map(|nk| binom(nk, i)).sum()
            }
        })
        .collect();
    let via_m = &binomial_part(n, d) + &IntPolynomial::new(m).shift(d - 1);

    let via_powers = &binomial_part(n, d)
        + &multiset
            .sizes()
            .map(|nk| &IntPolynomial::linear_power(1, 1, nk) - &IntPolynomial::one())
            .sum::<IntPolynomial>()
            .shift(d - 1);
    assert_eq!(via_m, via_powers, "the two f-polynomial expansions disagree");
    via_m
}

pub fn f_vector_from_multiset(n: usize, d: usize, multiset: &Multiset) -> FVector {
    FVector::from_polynomial(&f_polynomial_from_multiset(n, d, multiset))
}

/// Counts the cliques of `c` by size, subsets smaller than `d` included.
pub fn f_vector_direct(c: &Clutter, limits: &OracleLimits) -> Result<FVector> {
    if c.n() > limits.max_fvector_n {
        return Err(Error::BoundExceeded {
            what: "f-vector enumeration",
            size: c.n(),
            bound: limits.max_fvector_n,
        });
    }
    let mut counts: Vec<u64> = Vec::new();
    for clique in crate::homology::all_cliques(c) {
        let k = clique.len();
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    let f = counts.into_iter().map(BigInt::from).collect();
    Ok(FVector::new(f))
}

/// `h_k = Σ_{i<=k} (-1)^{k-i} C(δ-i, k-i) f_{i-1}`.
pub fn h_from_f(f: &FVector) -> HVector {
    let delta = f.delta();
    let h = (0..=delta)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binom(delta - i, k - i) * &f.f[i];
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    HVector::new(h)
}

/// `f_{k-1} = Σ_{i<=k} C(δ-i, k-i) h_i`.
pub fn f_from_h(h: &HVector) -> FVector {
    let delta = h.delta();
    let f = (0..=delta)
        .map(|k| (0..=k).map(|i| binom(delta - i, k - i) * &h.h[i]).sum())
        .collect();
    FVector::new(f)
}

/// `δ = N + d - 1` for a nonempty multiset with maximum `N`, else `d - 1`.
pub fn delta_from_multiset(d: usize, multiset: &Multiset) -> usize {
    multiset.max().unwrap_or(0) + d - 1
}

/// `Σ h_i t^i = Σ_{i<d} C(n,i) t^i (1-t)^{N+d-i-1} + t^{d-1} Σ_k ((1-t)^{N-N_k} - (1-t)^N)`.
pub fn h_polynomial_from_multiset(n: usize, d: usize, multiset: &Multiset) -> IntPolynomial {
    let top = multiset.max().unwrap_or(0);
    let low: IntPolynomial = (0..d)
        .map(|i| IntPolynomial::linear_power(1, -1, top + d - i - 1).shift(i).scale(&binom(n, i)))
        .sum();
    let full = IntPolynomial::linear_power(1, -1, top);
    let high: IntPolynomial = multiset
        .sizes()
        .map(|nk| &IntPolynomial::linear_power(1, -1, top - nk) - &full)
        .sum();
    &low + &high.shift(d - 1)
}

/// The h-vector with its full length `δ + 1`.
pub fn h_vector_from_multiset(n: usize, d: usize, multiset: &Multiset) -> HVector {
    let delta = delta_from_multiset(d, multiset);
    HVector::new(h_polynomial_from_multiset(n, d, multiset).padded(delta + 1))
}

/// The coefficient-wise closed form of the h-vector, split at `k = d`.
pub fn h_vector_explicit(n: usize, d: usize, multiset: &Multiset) -> HVector {
    let top = multiset.max().unwrap_or(0);
    let delta = top + d - 1;
    let m = |i: usize| -> BigInt { multiset.sizes().map(|nk| binom(nk, i)).sum() };
    let signed = |k: usize, i: usize, x: BigInt| {
        let term = binom(delta - i, k - i) * x;
        if (k - i).is_multiple_of(2) {
            term
        } else {
            -term
        }
    };
    let h = (0..=delta)
        .map(|k| {
            let low: BigInt = (0..=k.min(d - 1)).map(|i| signed(k, i, binom(n, i))).sum();
            let high: BigInt = (d..=k).map(|i| signed(k, i, m(i - d + 1))).sum();
            low + high
        })
        .collect();
    HVector::new(h)
}

/// h-vector when every `N_k = 1` (so `dim Δ = d - 1`) and there are `r` circuits.
pub fn h_vector_all_ones(n: usize, d: usize, r: usize) -> HVector {
    let mut h: Vec<BigInt> = (0..d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binom(d - i, k - i) * binom(n, i);
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    let top: BigInt = (0..d)
        .map(|i| {
            let b = binom(n, i);
            if (d - i).is_multiple_of(2) {
                b
            } else {
                -b
            }
        })
        .sum();
    h.push(BigInt::from(r) + top);
    HVector::new(h)
}

/// Reads `β_i` off `1 + Σ (-1)^{i+1} β_i t^{i+d}`, enforcing the sign pattern of a
/// d-linear resolution: constant 1, nothing below degree d, then strictly alternating
/// signs with no gaps.
fn decode_linear_betti(p: &IntPolynomial, d: usize) -> Result<BettiSequence> {
    let violation = |k: usize| Error::SignPattern {
        degree: k,
        coefficient: p.coeff(k).to_string(),
    };
    if !p.coeff(0).is_one() {
        return Err(violation(0));
    }
    if let Some(k) = (1..d).find(|&k| !p.coeff(k).is_zero()) {
        return Err(violation(k));
    }
    let top = p.degree().unwrap_or(0);
    let mut beta = Vec::new();
    for k in d..=top {
        let i = k - d;
        let c = p.coeff(k);
        let b = if i.is_multiple_of(2) { -c } else { c };
        if !b.is_positive() {
            // zero here is a gap, because p has a nonzero coefficient further up
            return Err(violation(k));
        }
        beta.push(b);
    }
    Ok(BettiSequence::new(beta))
}

/// Betti numbers from `1 + Σ (-1)^{i+1} β_i t^{i+d} = (1-t)^{n-δ} h(t)`.
pub fn betti_from_h(n: usize, d: usize, h: &HVector) -> Result<BettiSequence> {
    let delta = h.delta();
    if delta > n {
        return Err(Error::VerticesBelowUniformity { n, d: delta });
    }
    let p = &IntPolynomial::linear_power(1, -1, n - delta) * &h.polynomial();
    decode_linear_betti(&p, d)
}

/// The Betti polynomial of the circuit ideal straight from the multiset.
pub fn betti_polynomial_from_multiset(n: usize, d: usize, multiset: &Multiset) -> Result<IntPolynomial> {
    if n < d {
        return Err(Error::VerticesBelowUniformity { n, d });
    }
    let cap = n - d + 1;
    if let Some(bad) = multiset.max().filter(|&m| m > cap) {
        return Err(Error::MultisetOutOfRange { value: bad, max: cap });
    }
    let low: IntPolynomial = (0..d)
        .map(|i| IntPolynomial::linear_power(1, -1, n - i).shift(i).scale(&binom(n, i)))
        .sum();
    let full = IntPolynomial::linear_power(1, -1, cap);
    let high: IntPolynomial = multiset
        .sizes()
        .map(|nk| &IntPolynomial::linear_power(1, -1, cap - nk) - &full)
        .sum();
    Ok(&low + &high.shift(d - 1))
}

/// Betti sequence of the circuit ideal of a chordal clutter with this multiset.
pub fn betti_from_multiset(n: usize, d: usize, multiset: &Multiset) -> Result<BettiSequence> {
    let p = betti_polynomial_from_multiset(n, d, multiset)?;
    if p == IntPolynomial::one() {
        return Err(Error::ZeroIdeal);
    }
    decode_linear_betti(&p, d)
}

/// Number of circuits of `c`, `M_1 = Σ N_k` for a chordal clutter.
pub fn multiplicity(c: &Clutter) -> usize {
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn ms(sizes: &[usize]) -> Multiset {
        Multiset::from_sizes(sizes.iter().copied())
    }

    #[test]
    fn f_from_multiset_example() {
        let p = f_polynomial_from_multiset(5, 3, &ms(&[2, 1, 1, 1]));
        assert_eq!(p, IntPolynomial::from_i64(&[1, 5, 10, 5, 1]));
        // dim Δ = N + d - 2 = 3, so the top coefficient sits at t^{dim+1}
        assert_eq!(p.degree(), Some(4));
        assert_eq!(
            f_polynomial_from_multiset(6, 3, &Multiset::default()),
            IntPolynomial::from_i64(&[1, 6, 15])
        );
    }

    #[test]
    fn f_direct() {
        let lim = OracleLimits::default();
        assert_eq!(f_vector_direct(&example(), &lim).unwrap(), FVector::from_u64(&[1, 5, 10, 5, 1]));
        assert_eq!(f_vector_direct(&Clutter::empty(4, 3).unwrap(), &lim).unwrap(), FVector::from_u64(&[1, 4, 6]));
        assert_eq!(
            f_vector_direct(&Clutter::complete(4, 3).unwrap(), &lim).unwrap(),
            FVector::from_u64(&[1, 4, 6, 4, 1])
        );
        assert!(matches!(
            f_vector_direct(&Clutter::empty(21, 3).unwrap(), &lim),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn h_f_transforms() {
        let f = FVector::from_u64(&[1, 5, 10, 5, 1]);
        let h = h_from_f(&f);
        assert_eq!(h, HVector::from_i64(&[1, 1, 1, -4, 2]));
        assert_eq!(f_from_h(&h), f);
        // tree on n vertices: f = (1, n, n-1), h = (1, n-2, 0)
        for n in 2u64..10 {
            let h = h_from_f(&FVector::from_u64(&[1, n, n - 1]));
            assert_eq!(h, HVector::from_i64(&[1, n as i64 - 2, 0]));
        }
    }

    #[test]
    fn h_from_multiset_routes() {
        let m = ms(&[2, 1, 1, 1]);
        assert_eq!(h_vector_from_multiset(5, 3, &m), HVector::from_i64(&[1, 1, 1, -4, 2]));
        assert_eq!(h_vector_explicit(5, 3, &m), HVector::from_i64(&[1, 1, 1, -4, 2]));
        assert_eq!(h_vector_from_multiset(4, 2, &ms(&[1, 1, 1])), HVector::from_i64(&[1, 2, 0]));
        assert_eq!(h_vector_all_ones(4, 2, 3), HVector::from_i64(&[1, 2, 0]));
        // empty multiset: Σ C(n,i) t^i (1-t)^{d-1-i}
        let expected: IntPolynomial = (0..3)
            .map(|i| IntPolynomial::linear_power(1, -1, 2 - i).shift(i).scale(&binom(6, i)))
            .sum();
        assert_eq!(h_polynomial_from_multiset(6, 3, &Multiset::default()), expected);
    }

    #[test]
    fn betti_from_h_examples() {
        assert_eq!(
            betti_from_h(4, 2, &HVector::from_i64(&[1, 2, 0])).unwrap(),
            BettiSequence::from_u64(&[3, 2])
        );
        assert_eq!(
            betti_from_h(5, 3, &HVector::from_i64(&[1, 1, 1, -4, 2])).unwrap(),
            BettiSequence::from_u64(&[5, 6, 2])
        );
        // 4-cycle: h = (1, 2, 1), δ = 2, (1-t)^2 (1+2t+t^2) = 1 - 2t^2 + t^4 has a gap at t^3
        assert!(matches!(
            betti_from_h(4, 2, &HVector::from_i64(&[1, 2, 1])),
            Err(Error::SignPattern { degree: 3, .. })
        ));
        assert!(matches!(
            betti_from_h(4, 2, &HVector::from_i64(&[1, 3, 0])),
            Err(Error::SignPattern { degree: 1, .. })
        ));
    }

    #[test]
    fn betti_from_multiset_examples() {
        let b = betti_from_multiset(5, 3, &ms(&[2, 1, 1, 1])).unwrap();
        assert_eq!(b, BettiSequence::from_u64(&[5, 6, 2]));
        assert_eq!(b.projective_dimension(), Some(2));
        let tree = betti_from_multiset(5, 2, &ms(&[1, 1, 1, 1])).unwrap();
        assert_eq!(tree, BettiSequence::from_u64(&[6, 8, 3]));
        assert_eq!(tree.projective_dimension(), Some(5 - 3));
        // C_{4,3} has multiset {2,1,1}
        assert!(matches!(betti_from_multiset(4, 3, &ms(&[2, 1, 1])), Err(Error::ZeroIdeal)));
        assert!(matches!(
            betti_from_multiset(4, 3, &ms(&[3])),
            Err(Error::MultisetOutOfRange { value: 3, max: 2 })
        ));
    }

    #[test]
    fn multiplicity_counts_circuits() {
        assert_eq!(multiplicity(&example()), 5);
        assert_eq!(multiplicity(&Clutter::empty(4, 3).unwrap()), 0);
        assert_eq!(multiplicity(&Clutter::complete(5, 3).unwrap()), 10);
    }
}
