//! Binomial coefficients, factorials, and exact integer powers.
//!
//! Every displayed sum in the recursions is weighted by binomial
//! coefficients with small, heavily repeated arguments, so `binom` reads
//! from a shared triangular Pascal table that grows on demand. Reads are
//! concurrent; growth is serialized behind a write lock.

use crate::error::{Error, Result};
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

static PASCAL: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();

fn pascal() -> &'static RwLock<Vec<Vec<BigInt>>> {
    PASCAL.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Binomial coefficient C(n, k).
///
/// Out-of-range arguments (k < 0, k > n, or n < 0) give 0. The recursions
/// rely on this convention: boundary assignments produce index underflows
/// like C(a, a_i - 1) with a_i = 0, and those terms must vanish.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = pascal().read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = pascal().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let len = prev.len();
        let mut next = Vec::with_capacity(len + 1);
        next.push(BigInt::one());
        for i in 1..len {
            next.push(&prev[i - 1] + &prev[i]);
        }
        next.push(BigInt::one());
        rows.push(next);
    }
    rows[n][k].clone()
}

/// C(n, k) as a rational, for use inside rational-valued sums.
pub fn binom_rat(n: i64, k: i64) -> Rat {
    Rat::from(binom(n, k))
}

/// n! as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Exact integer power `base^exp`, with negative exponents allowed.
///
/// Needed for the closed-form cover count d^{d-3} (2d-2)!/d!, where the
/// exponent is negative for d = 1, 2.
pub fn ipow(base: i64, exp: i32) -> Result<Rat> {
    if base == 0 && exp < 0 {
        return Err(Error::ZeroToNegativePower);
    }
    let magnitude = BigInt::from(base).pow(exp.unsigned_abs());
    let r = Rat::from(magnitude);
    if exp < 0 {
        Ok(r.recip())
    } else {
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(7, 2), BigInt::from(21));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(19, 9), BigInt::from(92378));
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(-2, 0), BigInt::zero());
    }

    #[test]
    fn row_sums_are_powers_of_two() {
        for n in 0..=64i64 {
            let sum: BigInt = (0..=n).map(|k| binom(n, k)).sum();
            assert_eq!(sum, BigInt::from(2).pow(n as u32), "row {n}");
        }
    }

    #[test]
    fn symmetry() {
        for n in 0..=20i64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom(n, n - k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(ipow(2, -1).unwrap(), Rat::frac(1, 2));
        assert_eq!(ipow(1, -2).unwrap(), Rat::one());
        assert_eq!(ipow(3, 0).unwrap(), Rat::one());
        assert_eq!(ipow(5, 3).unwrap(), Rat::from(125i64));
        assert_eq!(ipow(-2, 3).unwrap(), Rat::from(-8i64));
        assert_eq!(ipow(0, -1), Err(Error::ZeroToNegativePower));
    }

    #[test]
    fn concurrent_growth_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| {
                std::thread::spawn(move || {
                    let n = 40 + t * 7;
                    binom(n, n / 2)
                })
            })
            .collect();
        for h in handles {
            assert!(h.join().unwrap() > BigInt::zero());
        }
    }
}
