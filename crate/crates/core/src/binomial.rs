//! Exact binomial coefficients backed by a shared, lazily grown Pascal triangle.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows beyond this are computed multiplicatively instead of cached.
const CACHE_ROWS: usize = 256;

fn triangle() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static TRIANGLE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    TRIANGLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n >= CACHE_ROWS {
        return binomial_direct(n, k);
    }
    {
        let rows = triangle().read().expect("binomial cache poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = triangle().write().expect("binomial cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `C(n, k)` for unsigned arguments.
pub fn binom(n: usize, k: usize) -> BigInt {
    binomial(n as i64, k as i64)
}

fn binomial_direct(n: usize, k: usize) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
