//! Exact binomial coefficients.
//!
//! Ranking needs `C(a, b)` for `a <= 64` on every call, so that range is
//! served from a table computed at compile time. Every entry of Pascal's
//! triangle up to row 64 fits in a `u64` (the largest is `C(64, 32)`).

use crate::error::{Error, Result};

/// Largest vertex count supported by the ranking routines.
pub const MAX_ORDER: usize = 64;

const ROWS: usize = MAX_ORDER + 1;

static PASCAL: [[u64; ROWS]; ROWS] = build_pascal();

const fn build_pascal() -> [[u64; ROWS]; ROWS] {
    let mut t = [[0u64; ROWS]; ROWS];
    let mut a = 0;
    while a < ROWS {
        t[a][0] = 1;
        let mut b = 1;
        while b <= a {
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
            b += 1;
        }
        a += 1;
    }
    t
}

/// `C(a, b)` from the table; zero when `b > a`.
///
/// Panics if `a > MAX_ORDER`. Callers validate orders on construction.
#[inline]
pub fn choose_small(a: usize, b: usize) -> u64 {
    if b > a {
        0
    } else {
        PASCAL[a][b]
    }
}

/// Exact `C(n, k)` for arbitrary arguments, failing on 64-bit overflow.
///
/// Uses the convention `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    if (n as usize) <= MAX_ORDER {
        return Ok(PASCAL[n as usize][k as usize]);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) / i is exact at every step: it equals C(n - k + i, i).
        acc = acc * u128::from(n - k + i) / u128::from(i);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow { n, k });
        }
    }
    Ok(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(10, 3).unwrap(), 120);
        assert_eq!(binomial(50, 3).unwrap(), 19600);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(choose_small(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn table_matches_multiplicative_formula() {
        for n in 65..=80u64 {
            for k in 0..=n {
                let via_row = binomial(n - 1, k).unwrap_or(u64::MAX);
                let via_prev = if k == 0 {
                    0
                } else {
                    binomial(n - 1, k - 1).unwrap_or(u64::MAX)
                };
                match binomial(n, k) {
                    Ok(v) => assert_eq!(u128::from(v), u128::from(via_row) + u128::from(via_prev)),
                    Err(Error::Overflow { .. }) => {
                        assert!(u128::from(via_row) + u128::from(via_prev) > u128::from(u64::MAX))
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(binomial(200, 100), Err(Error::Overflow { .. })));
    }
}
