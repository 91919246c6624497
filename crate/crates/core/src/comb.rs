//! Exact combinatorial scalars: factorials, binomials, Pochhammer symbols,
//! and the terminating 2F0 hypergeometric sum.
//!
//! All values are arbitrary-precision; nothing here can overflow or round.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k) via the falling factorial, so that any
/// integer `n` is accepted and C(n, k) = 0 whenever k < 0, in particular
/// C(n, -1) = 0.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
    }
    num / factorial(k as usize)
}

/// C(n, k) for machine-size nonnegative arguments; 0 when k > n.
pub fn binom_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - (k - i)) as u128 / i as u128;
    }
    result as usize
}

/// Falling factorial n!/(n-k)!, the number of k-arrangements of an n-set;
/// 0 when k > n.
pub fn falling_factorial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Rising factorial (Pochhammer symbol) (a)_j = a(a+1)...(a+j-1).
pub fn pochhammer(a: i64, j: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j {
        acc *= BigInt::from(a + i as i64);
    }
    acc
}

/// Terminating 2F0 hypergeometric sum
/// `sum_j (a)_j (b)_j x^j / j!` for a nonpositive integer `a`,
/// evaluated exactly over the rationals. The series stops at j = -a.
pub fn eval_2f0(a: i64, b: i64, x: &BigRational) -> Result<BigRational> {
    if a > 0 {
        return Err(Error::NonTerminatingSeries { a });
    }
    let top = (-a) as usize;
    let mut sum = BigRational::zero();
    let mut xpow = BigRational::one();
    for j in 0..=top {
        let term = BigRational::from(pochhammer(a, j) * pochhammer(b, j))
            / BigRational::from(factorial(j));
        sum += term * &xpow;
        xpow *= x;
    }
    Ok(sum)
}

/// Convenience: an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    /// Pascal-triangle oracle, independent of the multiplicative formula.
    fn binom_pascal(n: usize, k: usize) -> BigInt {
        let mut row: Vec<BigInt> = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(BigInt::one());
            row = next;
        }
        row.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_against_pascal() {
        assert_eq!(binom(30, 15), BigInt::from(155117520u64));
        for n in 0..=12i64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom_pascal(n as usize, k as usize));
            }
        }
    }

    #[test]
    fn binom_usize_matches_bigint() {
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(
                    BigInt::from(binom_usize(n, k)),
                    binom(n as i64, k as i64)
                );
            }
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(3, 3), BigInt::from(6));
        assert_eq!(falling_factorial(3, 4), BigInt::zero());
        assert_eq!(falling_factorial(7, 0), BigInt::one());
    }

    #[test]
    fn two_f0_empty_product_is_one() {
        for b in [-3i64, 0, 2, 7] {
            assert_eq!(eval_2f0(0, b, &rat(5, 3)).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn two_f0_rejects_positive_first_parameter() {
        assert!(eval_2f0(1, 2, &rat(1, 1)).is_err());
    }

    #[test]
    fn two_f0_known_values() {
        // 1! * 2F0(-1, 2; -1) = 3
        assert_eq!(eval_2f0(-1, 2, &rat(-1, 1)).unwrap(), rat(3, 1));
        // -(2F0(-3, 2; 1)) = 11
        let v = eval_2f0(-3, 2, &rat(1, 1)).unwrap();
        assert_eq!(-v.to_integer().to_i64().unwrap(), 11);
    }

    #[test]
    fn two_f0_matches_pochhammer_sum() {
        // 2F0(-n, 1; -x) = sum_j C(n,j) j! x^j, checked by direct summation.
        for n in 0..=6i64 {
            for x in 0..=4i64 {
                let lhs = eval_2f0(-n, 1, &rat(-x, 1)).unwrap();
                let mut rhs = BigInt::zero();
                for j in 0..=n {
                    rhs += binom(n, j) * factorial(j as usize) * BigInt::from(x).pow(j as u32);
                }
                assert_eq!(lhs, BigRational::from(rhs));
            }
        }
    }
}
