//! Permanent kernels and zeon powers.
//!
//! Three constructions of the same objects live here:
//! * [`permanent`] computes per(X), dispatching integer matrices to a
//!   Gray-code Ryser kernel and symbolic matrices to expansion over
//!   permutations with zero-entry pruning;
//! * [`zeon_power_perm`] builds the induced matrix X^(ell) entry by entry
//!   from subpermanents (the definition);
//! * [`zeon_power_sum`] builds (sI + tX)^(ell) from the expansion over
//!   common-index subsets, using only the lower zeon powers of X.
//!
//! [`per_via_traces`] assembles per(sI + tX) as the generating function of
//! the traces of the zeon powers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::subsets::{mask_elements, rank_subset, subset_masks};

/// Exact permanent. Dimension 0 gives 1 by the empty-product convention.
pub fn permanent(m: &ExactMatrix) -> BiPoly {
    match m.as_int_entries() {
        Some(ints) => BiPoly::constant(permanent_ryser(&ints, m.dim())),
        None => permanent_expansion(m),
    }
}

/// Ryser's inclusion-exclusion permanent over row-major integer entries,
/// with Gray-code column updates: each step toggles one column in the
/// running row sums.
pub fn permanent_ryser(entries: &[BigInt], n: usize) -> BigInt {
    assert_eq!(entries.len(), n * n, "entries must be a dense n x n grid");
    if n == 0 {
        return BigInt::from(1);
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray_prev = 0u64;
    for k in 1u64..(1 << n) {
        let gray = k ^ (k >> 1);
        let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
        if gray >> flipped & 1 == 1 {
            for i in 0..n {
                row_sums[i] += &entries[i * n + flipped];
            }
        } else {
            for i in 0..n {
                row_sums[i] -= &entries[i * n + flipped];
            }
        }
        gray_prev = gray;

        let mut product = BigInt::from(1);
        for s in &row_sums {
            if s.is_zero() {
                product = BigInt::zero();
                break;
            }
            product *= s;
        }
        // sign (-1)^{n - |S|}
        if (n as u32 - gray.count_ones()) % 2 == 1 {
            total -= product;
        } else {
            total += product;
        }
    }
    total
}

/// Permanent by expansion over permutations, skipping zero entries.
/// This is the auditable symbolic path; it is kept naive on purpose.
pub fn permanent_expansion(m: &ExactMatrix) -> BiPoly {
    fn expand(m: &ExactMatrix, row: usize, used_cols: u64, acc: &BiPoly, total: &mut BiPoly) {
        if row == m.dim() {
            *total += acc;
            return;
        }
        for col in 0..m.dim() {
            if used_cols >> col & 1 == 1 {
                continue;
            }
            let entry = m.get(row, col);
            if entry.is_zero() {
                continue;
            }
            let next = acc * entry;
            expand(m, row + 1, used_cols | 1 << col, &next, total);
        }
    }
    let mut total = BiPoly::zero();
    expand(m, 0, 0, &BiPoly::one(), &mut total);
    total
}

/// The ell-th zeon power by the subpermanent definition: entry (I, J) is
/// the permanent of the submatrix with rows I and columns J, indexed by
/// lexicographic subset rank.
pub fn zeon_power_perm(m: &ExactMatrix, ell: usize) -> Result<ExactMatrix> {
    let n = m.dim();
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let masks = subset_masks(n, ell);
    let dim = masks.len();
    let index_sets: Vec<Vec<usize>> = masks
        .iter()
        .map(|&mask| mask_elements(mask).into_iter().map(|e| e - 1).collect())
        .collect();
    let rows: Vec<Vec<BiPoly>> = crate::par::map_indexed(dim, |i| {
        (0..dim)
            .map(|j| permanent(&m.submatrix(&index_sets[i], &index_sets[j])))
            .collect()
    });
    let mut out = ExactMatrix::zeros(dim);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, value) in row.into_iter().enumerate() {
            out.set(i, j, value);
        }
    }
    Ok(out)
}

/// (sI + tX)^(ell) assembled from the expansion
/// sum_j s^(ell-j) t^j sum_{A subset of I n J, |A| = ell-j}
///   (X^(j))_{I\A, J\A},
/// reusing the zeon powers X^(0), ..., X^(ell) of X itself.
pub fn zeon_power_sum(x: &ExactMatrix, ell: usize) -> Result<ExactMatrix> {
    let n = x.dim();
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let powers: Vec<ExactMatrix> = (0..=ell)
        .map(|j| zeon_power_perm(x, j))
        .collect::<Result<_>>()?;
    let masks = subset_masks(n, ell);
    let dim = masks.len();
    let mut out = ExactMatrix::zeros(dim);
    for i in 0..dim {
        for j_col in 0..dim {
            let meet = masks[i] & masks[j_col];
            let mut entry = BiPoly::zero();
            // subsets A of the intersection; |A| = ell - j leaves a j-point frame
            let mut a = meet;
            loop {
                let removed = a.count_ones() as usize;
                if removed <= ell {
                    let j = ell - removed;
                    let rows_rest = masks[i] & !a;
                    let cols_rest = masks[j_col] & !a;
                    let ri = rank_subset(n, j, rows_rest)?;
                    let ci = rank_subset(n, j, cols_rest)?;
                    let sub = powers[j].get(ri, ci);
                    if !sub.is_zero() {
                        let st = BiPoly::monomial(BigInt::from(1), (ell - j) as u32, j as u32);
                        entry += &(&st * sub);
                    }
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & meet;
            }
            out.set(i, j_col, entry);
        }
    }
    Ok(out)
}

/// per(sI + tX) as the trace generating function
/// sum_j s^(n-j) t^j tr X^(j).
pub fn per_via_traces(x: &ExactMatrix) -> Result<BiPoly> {
    let n = x.dim();
    let mut acc = BiPoly::zero();
    for j in 0..=n {
        let trace = zeon_power_perm(x, j)?.trace();
        let st = BiPoly::monomial(BigInt::from(1), (n - j) as u32, j as u32);
        acc += &(&st * &trace);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    /// n!-term oracle used to pin the fast paths.
    fn permanent_naive(m: &ExactMatrix) -> BiPoly {
        let n = m.dim();
        let mut total = BiPoly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        fn heap(k: usize, perm: &mut Vec<usize>, m: &ExactMatrix, total: &mut BiPoly) {
            if k <= 1 {
                let mut prod = BiPoly::one();
                for (i, &j) in perm.iter().enumerate() {
                    prod = &prod * m.get(i, j);
                }
                *total += &prod;
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, m, total);
                if k.is_multiple_of(2) {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        if n == 0 {
            return BiPoly::one();
        }
        heap(n, &mut perm, m, &mut total);
        total
    }

    #[test]
    fn two_by_two_symbolic() {
        // [[a, b], [c, d]] with scalar stand-ins -> ad + bc
        let m = ExactMatrix::from_int_rows(&[vec![2, 3], vec![5, 7]]).unwrap();
        assert_eq!(permanent(&m), BiPoly::constant(2 * 7 + 3 * 5));
        let sym = ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(2));
        assert_eq!(permanent(&sym).to_string(), "s^2+2*s*t+2*t^2");
    }

    #[test]
    fn derangement_count_from_hollow_matrix() {
        // per(J - I) at n = 3 counts the 2 derangements of [3]
        let m = ExactMatrix::from_int_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(permanent(&m), BiPoly::constant(2));
    }

    #[test]
    fn empty_matrix_has_permanent_one() {
        assert_eq!(permanent(&ExactMatrix::zeros(0)), BiPoly::one());
        assert_eq!(permanent_ryser(&[], 0), BigInt::from(1));
    }

    #[test]
    fn ryser_naive_symbolic_agree() {
        let mut rng = SplitMix64::new(2024);
        for n in 1..=8usize {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.next_range(-3, 4)).collect())
                .collect();
            let m = ExactMatrix::from_int_rows(&rows).unwrap();
            let naive = permanent_naive(&m);
            let ryser = BiPoly::constant(permanent_ryser(&m.as_int_entries().unwrap(), n));
            let symbolic = permanent_expansion(&m);
            assert_eq!(naive, ryser, "ryser vs naive at n={n}");
            assert_eq!(naive, symbolic, "expansion vs naive at n={n}");
        }
    }

    #[test]
    fn full_level_zeon_power_is_the_permanent() {
        let mut rng = SplitMix64::new(5);
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..4).map(|_| rng.next_range(0, 3)).collect())
            .collect();
        let m = ExactMatrix::from_int_rows(&rows).unwrap();
        let top = zeon_power_perm(&m, 4).unwrap();
        assert_eq!(top.dim(), 1);
        assert_eq!(top.get(0, 0), &permanent(&m));
    }

    #[test]
    fn all_ones_zeon_power_entries() {
        let j = ExactMatrix::all_ones(5);
        let m = zeon_power_perm(&j, 3).unwrap();
        for i in 0..m.dim() {
            for k in 0..m.dim() {
                assert_eq!(m.get(i, k), &BiPoly::constant(6));
            }
        }
    }

    #[test]
    fn sum_construction_matches_subpermanents() {
        let mut rng = SplitMix64::new(11);
        for n in 1..=5usize {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.next_range(0, 1)).collect())
                .collect();
            let x = ExactMatrix::from_int_rows(&rows).unwrap();
            let sitx = ExactMatrix::si_plus_tx(&x);
            for ell in 0..=n {
                assert_eq!(
                    zeon_power_sum(&x, ell).unwrap(),
                    zeon_power_perm(&sitx, ell).unwrap(),
                    "n={n} ell={ell}"
                );
            }
        }
    }

    #[test]
    fn sum_construction_on_all_ones() {
        let j = ExactMatrix::all_ones(4);
        let sitj = ExactMatrix::si_plus_tx(&j);
        assert_eq!(
            zeon_power_sum(&j, 2).unwrap(),
            zeon_power_perm(&sitj, 2).unwrap()
        );
    }

    #[test]
    fn sum_construction_level_zero() {
        let x = ExactMatrix::all_ones(3);
        let m = zeon_power_sum(&x, 0).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &BiPoly::one());
    }

    #[test]
    fn level_out_of_range_rejected() {
        let x = ExactMatrix::all_ones(3);
        assert!(zeon_power_perm(&x, 4).is_err());
        assert!(zeon_power_sum(&x, 4).is_err());
    }

    #[test]
    fn trace_formula_all_ones_n2() {
        let per = per_via_traces(&ExactMatrix::all_ones(2)).unwrap();
        assert_eq!(per.to_string(), "s^2+2*s*t+2*t^2");
    }

    #[test]
    fn trace_formula_zero_matrix() {
        let per = per_via_traces(&ExactMatrix::zeros(4)).unwrap();
        assert_eq!(per.to_string(), "s^4");
    }

    #[test]
    fn trace_formula_matches_direct_permanent() {
        let mut rng = SplitMix64::new(31);
        for n in 1..=6usize {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.next_range(-2, 2)).collect())
                .collect();
            let x = ExactMatrix::from_int_rows(&rows).unwrap();
            assert_eq!(
                per_via_traces(&x).unwrap(),
                permanent(&ExactMatrix::si_plus_tx(&x)),
                "n={n}"
            );
        }
    }
}
