//! Exact characteristic polynomials of integer matrices via the
//! Faddeev-LeVerrier recursion over the rationals. Every intermediate
//! division is by a small integer and the final coefficients are integers
//! whenever the input is.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::unipoly::UniPoly;

/// det(xI - M) for a square integer matrix, monic of degree dim(M).
pub fn charpoly(m: &ExactMatrix) -> Result<UniPoly> {
    let ints = m.as_int_entries().ok_or(Error::NonIntegerMatrix)?;
    let n = m.dim();
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let a: Vec<BigRational> = ints.into_iter().map(BigRational::from).collect();

    // c[n] = 1; M_1 = A, c[n-1] = -tr M_1; M_{k} = A (M_{k-1} + c[n-k+1] I),
    // c[n-k] = -tr(M_k) / k.
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = a.clone();
    for k in 1..=n {
        if k > 1 {
            // mk <- A * (mk + c[n-k+1] I)
            let shift = coeffs[n - k + 1].clone();
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[i * n + i] += &shift;
            }
            let mut next = vec![BigRational::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigRational::zero();
                    for l in 0..n {
                        if !a[i * n + l].is_zero() {
                            acc += &a[i * n + l] * &shifted[l * n + j];
                        }
                    }
                    next[i * n + j] = acc;
                }
            }
            mk = next;
        }
        let mut trace = BigRational::zero();
        for i in 0..n {
            trace += &mk[i * n + i];
        }
        coeffs[n - k] = -trace / BigRational::from(BigInt::from(k));
    }

    let mut ints = Vec::with_capacity(n + 1);
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::NonIntegralResult);
        }
        ints.push(c.to_integer());
    }
    Ok(UniPoly::from_coeffs(ints))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    /// Fraction-free Bareiss determinant, the independent oracle.
    fn det_bareiss(entries: &[Vec<i64>]) -> BigInt {
        let n = entries.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = entries
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    fn x_minus_m(lambda: i64, entries: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = entries.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { lambda - entries[i][j] } else { -entries[i][j] })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn identity_two_by_two() {
        let p = charpoly(&ExactMatrix::identity(2)).unwrap();
        assert_eq!(p.to_string_with("x"), "x^2-2*x+1");
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(charpoly(&ExactMatrix::zeros(0)).unwrap(), UniPoly::one());
    }

    #[test]
    fn rejects_symbolic_entries() {
        let m = ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(2));
        assert!(charpoly(&m).is_err());
    }

    #[test]
    fn matches_bareiss_on_random_matrices() {
        let mut rng = SplitMix64::new(0xC0FFEE);
        for n in 1..=8usize {
            let entries: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.next_range(-4, 4)).collect())
                .collect();
            let p = charpoly(&ExactMatrix::from_int_rows(&entries).unwrap()).unwrap();
            for lambda in [-2i64, 0, 1, 3] {
                assert_eq!(
                    p.eval(&BigInt::from(lambda)),
                    det_bareiss(&x_minus_m(lambda, &entries)),
                    "n={n} lambda={lambda}"
                );
            }
        }
    }
}
