//! Johnson scheme matrices on ell-subsets, their integer eigenvalues, and
//! the closed-form expansion and spectrum of (sI + tJ)^(ell).
//!
//! Both the Johnson distance k and the eigenvalue index alpha range over
//! 0..=min(ell, n-ell); the multiplicity of the alpha eigenspace is
//! C(n, alpha) - C(n, alpha-1), which at alpha = 0 relies on C(n,-1) = 0.

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::comb::{binom, factorial};
use crate::error::{Error, Result};
use crate::exppoly::h_poly;
use crate::matrix::ExactMatrix;
use crate::subsets::{johnson_distance, subset_masks};

/// One eigenspace of an induced matrix: the eigenvalue as a polynomial in
/// (s, t), its multiplicity, and the index alpha it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub alpha: usize,
    pub eigenvalue: BiPoly,
    pub multiplicity: usize,
}

fn check_level(n: usize, ell: usize) -> Result<usize> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    Ok(ell.min(n - ell))
}

/// Number of distinct Johnson distances minus one: k, alpha <= this.
pub fn max_distance(n: usize, ell: usize) -> Result<usize> {
    check_level(n, ell)
}

/// The 0/1 adjacency matrix of distance exactly k on ell-subsets of \[n\].
pub fn js_matrix(n: usize, ell: usize, k: usize) -> Result<ExactMatrix> {
    let kmax = check_level(n, ell)?;
    if k > kmax {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as i64,
        });
    }
    let masks = subset_masks(n, ell);
    let dim = masks.len();
    let mut m = ExactMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            if johnson_distance(masks[i], masks[j])? == k {
                m.set(i, j, BiPoly::one());
            }
        }
    }
    Ok(m)
}

/// Eigenvalue of JS_k on the alpha eigenspace:
/// sum_i C(ell-a,i) C(n-ell-a+i,i) C(ell-i,k-i) (-1)^(k-i).
pub fn js_eigenvalue(n: usize, ell: usize, k: usize, alpha: usize) -> Result<BigInt> {
    let kmax = check_level(n, ell)?;
    if k > kmax {
        return Err(Error::OutOfRange {
            name: "k",
            value: k as i64,
        });
    }
    if alpha > kmax {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha as i64,
        });
    }
    let (n, ell, k, alpha) = (n as i64, ell as i64, k as i64, alpha as i64);
    let mut acc = BigInt::from(0);
    for i in 0..=k {
        let term = binom(ell - alpha, i) * binom(n - ell - alpha + i, i) * binom(ell - i, k - i);
        if (k - i) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Multiplicity C(n, alpha) - C(n, alpha-1) of the alpha eigenspace.
pub fn js_multiplicity(n: usize, alpha: usize) -> usize {
    use num_traits::ToPrimitive;
    let m = binom(n as i64, alpha as i64) - binom(n as i64, alpha as i64 - 1);
    m.to_usize().expect("multiplicity is a small nonnegative integer")
}

/// Coefficients of (sI + tJ)^(ell) in the Johnson basis: the JS_k
/// coefficient is h_{ell-k,k}(s,t).
pub fn expand_si_plus_tj(n: usize, ell: usize) -> Result<Vec<(usize, BiPoly)>> {
    let kmax = check_level(n, ell)?;
    Ok((0..=kmax).map(|k| (k, h_poly(ell - k, k))).collect())
}

/// Assemble sum_k coeff_k JS_k as a dense matrix.
pub fn assemble_expansion(n: usize, ell: usize) -> Result<ExactMatrix> {
    let masks = subset_masks(n, ell);
    let coeffs: Vec<BiPoly> = expand_si_plus_tj(n, ell)?
        .into_iter()
        .map(|(_, c)| c)
        .collect();
    let dim = masks.len();
    let mut m = ExactMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let k = johnson_distance(masks[i], masks[j])?;
            m.set(i, j, coeffs[k].clone());
        }
    }
    Ok(m)
}

/// The spectrum of (sI + tJ)^(ell):
/// eigenvalue(alpha) = sum_i s^(ell-i) t^i C(ell-a,i) C(n-ell-a+i,i) i!,
/// with multiplicity C(n,alpha) - C(n,alpha-1), listed by ascending alpha.
pub fn spectrum_si_plus_tj(n: usize, ell: usize) -> Result<Vec<SpectrumEntry>> {
    let kmax = check_level(n, ell)?;
    let mut out = Vec::with_capacity(kmax + 1);
    for alpha in 0..=kmax {
        let mut eig = BiPoly::zero();
        for i in 0..=(ell - alpha) {
            let c = binom((ell - alpha) as i64, i as i64)
                * binom((n - ell - alpha + i) as i64, i as i64)
                * factorial(i);
            eig.add_term(c, (ell - i) as u32, i as u32);
        }
        out.push(SpectrumEntry {
            alpha,
            eigenvalue: eig,
            multiplicity: js_multiplicity(n, alpha),
        });
    }
    Ok(out)
}

/// Row sum of (sI + tJ)^(ell):
/// sum_i C(ell,i) C(n-ell+i,i) i! s^(ell-i) t^i.
pub fn rowsum_poly(n: usize, ell: usize) -> Result<BiPoly> {
    check_level(n, ell)?;
    let mut out = BiPoly::zero();
    for i in 0..=ell {
        let c = binom(ell as i64, i as i64) * binom((n - ell + i) as i64, i as i64) * factorial(i);
        out.add_term(c, (ell - i) as u32, i as u32);
    }
    Ok(out)
}

/// Trace of (sI + tJ)^(ell):
/// (n!/(n-ell)!) sum_{k<=ell} s^k t^(ell-k) / k!, exactly in integers.
pub fn trace_poly(n: usize, ell: usize) -> Result<BiPoly> {
    check_level(n, ell)?;
    let ff = crate::comb::falling_factorial(n, ell);
    let mut out = BiPoly::zero();
    for k in 0..=ell {
        let c = &ff / factorial(k);
        out.add_term(c, k as u32, (ell - k) as u32);
    }
    Ok(out)
}

/// prod_alpha (x - eigenvalue(alpha)|_{s0,t0})^multiplicity as an integer
/// polynomial, for comparing against the characteristic polynomial of the
/// specialized matrix.
pub fn charpoly_from_spectrum(
    spectrum: &[SpectrumEntry],
    s0: &BigInt,
    t0: &BigInt,
) -> crate::unipoly::UniPoly {
    let roots: Vec<(BigInt, usize)> = spectrum
        .iter()
        .map(|e| (e.eigenvalue.eval(s0, t0), e.multiplicity))
        .collect();
    crate::unipoly::UniPoly::from_roots(&roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::charpoly;
    use num_traits::One;
    use crate::comb::{eval_2f0, rat};
    use crate::permanent::zeon_power_perm;
    use num_rational::BigRational;
    use num_traits::Zero;

    #[test]
    fn distance_zero_matrix_is_identity() {
        for (n, ell) in [(4, 2), (5, 3), (6, 1)] {
            assert_eq!(js_matrix(n, ell, 0).unwrap(), ExactMatrix::identity(
                crate::comb::binom_usize(n, ell)
            ));
        }
    }

    #[test]
    fn js_matrices_partition_all_pairs() {
        let (n, ell) = (5, 2);
        let mut total = ExactMatrix::zeros(10);
        for k in 0..=max_distance(n, ell).unwrap() {
            let m = js_matrix(n, ell, k).unwrap();
            for i in 0..10 {
                for j in 0..10 {
                    let sum = total.get(i, j) + m.get(i, j);
                    total.set(i, j, sum);
                }
            }
        }
        assert_eq!(total, ExactMatrix::all_ones(10));
    }

    #[test]
    fn complement_pairing_at_top_distance() {
        // n=4, ell=2, k=2 pairs each 2-set with its complement
        let m = js_matrix(4, 2, 2).unwrap();
        assert!(m.is_permutation_matrix());
        for i in 0..6 {
            assert_eq!(m.row_sum(i), BiPoly::one());
        }
    }

    #[test]
    fn valency_row_sums() {
        // row sums of JS_k equal C(ell,k) C(n-ell,k)
        let m = js_matrix(5, 2, 1).unwrap();
        for i in 0..10 {
            assert_eq!(m.row_sum(i), BiPoly::constant(6));
        }
        assert_eq!(js_eigenvalue(5, 2, 1, 0).unwrap(), BigInt::from(6));
    }

    #[test]
    fn k_out_of_range_rejected() {
        assert!(js_matrix(4, 2, 3).is_err());
        assert!(js_eigenvalue(4, 2, 1, 3).is_err());
    }

    #[test]
    fn eigenvalue_at_k_zero_is_one() {
        for alpha in 0..=2usize {
            assert_eq!(js_eigenvalue(5, 2, 0, alpha).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn hollow_matrices_have_zero_weighted_trace() {
        // sum_alpha mult(alpha) Lambda_k(alpha) = tr JS_k = 0 for k >= 1
        let (n, ell) = (5, 2);
        for k in 1..=2usize {
            let mut acc = BigInt::zero();
            for alpha in 0..=2usize {
                acc += BigInt::from(js_multiplicity(n, alpha)) * js_eigenvalue(n, ell, k, alpha).unwrap();
            }
            assert_eq!(acc, BigInt::zero(), "k={k}");
        }
    }

    #[test]
    fn expansion_coefficients_n4_l2() {
        let coeffs = expand_si_plus_tj(4, 2).unwrap();
        let strings: Vec<(usize, String)> =
            coeffs.iter().map(|(k, c)| (*k, c.to_string())).collect();
        assert_eq!(
            strings,
            vec![
                (0, "s^2+2*s*t+2*t^2".to_string()),
                (1, "s*t+2*t^2".to_string()),
                (2, "2*t^2".to_string()),
            ]
        );
    }

    #[test]
    fn expansion_at_full_level_recovers_permanent() {
        // ell = n: single k=0 coefficient equals per(sI + tJ) = h_{n,0}
        let coeffs = expand_si_plus_tj(4, 4).unwrap();
        assert_eq!(coeffs.len(), 1);
        let per = crate::permanent::permanent(&ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(4)));
        assert_eq!(coeffs[0].1, per);
    }

    #[test]
    fn assembly_matches_subpermanents() {
        for (n, ell) in [(4, 2), (5, 2), (5, 3)] {
            let assembled = assemble_expansion(n, ell).unwrap();
            let direct =
                zeon_power_perm(&ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(n)), ell).unwrap();
            assert_eq!(assembled, direct, "n={n} ell={ell}");
        }
    }

    #[test]
    fn spectrum_n4_l2() {
        let spec = spectrum_si_plus_tj(4, 2).unwrap();
        let got: Vec<(usize, String, usize)> = spec
            .iter()
            .map(|e| (e.alpha, e.eigenvalue.to_string(), e.multiplicity))
            .collect();
        assert_eq!(
            got,
            vec![
                (0, "s^2+6*s*t+12*t^2".to_string(), 1),
                (1, "s^2+2*s*t".to_string(), 3),
                (2, "s^2".to_string(), 2),
            ]
        );
    }

    #[test]
    fn top_alpha_eigenvalue_is_pure_s_power() {
        // alpha = ell = min(ell, n-ell): only i = 0 survives
        let spec = spectrum_si_plus_tj(6, 3).unwrap();
        let last = spec.last().unwrap();
        assert_eq!(last.alpha, 3);
        assert_eq!(last.eigenvalue.to_string(), "s^3");
    }

    #[test]
    fn spectrum_specialization_n5_l3() {
        // at (s,t) = (-1,1): eigenvalues 32, -3, 0 with multiplicities 1, 4, 5
        let spec = spectrum_si_plus_tj(5, 3).unwrap();
        let vals: Vec<(BigInt, usize)> = spec
            .iter()
            .map(|e| (e.eigenvalue.eval(&BigInt::from(-1), &BigInt::one()), e.multiplicity))
            .collect();
        assert_eq!(
            vals,
            vec![
                (BigInt::from(32), 1),
                (BigInt::from(-3), 4),
                (BigInt::from(0), 5),
            ]
        );
    }

    #[test]
    fn multiplicities_fill_the_space() {
        for (n, ell) in [(4, 2), (5, 3), (6, 3), (7, 2)] {
            let spec = spectrum_si_plus_tj(n, ell).unwrap();
            let total: usize = spec.iter().map(|e| e.multiplicity).sum();
            assert_eq!(total, crate::comb::binom_usize(n, ell));
        }
    }

    #[test]
    fn rowsum_and_trace_examples() {
        assert_eq!(trace_poly(4, 2).unwrap().to_string(), "6*s^2+12*s*t+12*t^2");
        assert_eq!(rowsum_poly(4, 2).unwrap().to_string(), "s^2+6*s*t+12*t^2");
        assert_eq!(rowsum_poly(5, 0).unwrap(), BiPoly::one());
        assert_eq!(trace_poly(5, 0).unwrap(), BiPoly::one());
    }

    #[test]
    fn rowsum_matches_assembled_matrix() {
        let m = zeon_power_perm(&ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(5)), 2).unwrap();
        let expect = rowsum_poly(5, 2).unwrap();
        for i in 0..m.dim() {
            assert_eq!(m.row_sum(i), expect);
        }
    }

    #[test]
    fn trace_identity_against_spectrum() {
        for n in 2..=7usize {
            for ell in 0..=n {
                let spec = spectrum_si_plus_tj(n, ell).unwrap();
                let mut acc = BiPoly::zero();
                for e in &spec {
                    acc += &e.eigenvalue.scale(&BigInt::from(e.multiplicity));
                }
                assert_eq!(acc, trace_poly(n, ell).unwrap(), "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn spectrum_polynomial_identity_with_h() {
        // eigenvalue(alpha) * t^(n-ell-alpha) * (n-ell-alpha)!
        //   = s^alpha * h_{ell-alpha, n-ell-alpha}
        for n in 1..=7usize {
            for ell in 0..=n {
                for entry in spectrum_si_plus_tj(n, ell).unwrap() {
                    let a = entry.alpha;
                    let lhs = &entry.eigenvalue
                        * &BiPoly::monomial(factorial(n - ell - a), 0, (n - ell - a) as u32);
                    let rhs = &BiPoly::monomial(BigInt::one(), a as u32, 0)
                        * &h_poly(ell - a, n - ell - a);
                    assert_eq!(lhs, rhs, "n={n} ell={ell} alpha={a}");
                }
            }
        }
    }

    #[test]
    fn spectrum_matches_eigenvalue_expansion_route() {
        // independent route: eigenvalue(alpha) = sum_k h_{ell-k,k} Lambda_k(alpha)
        for (n, ell) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
            let spec = spectrum_si_plus_tj(n, ell).unwrap();
            let coeffs = expand_si_plus_tj(n, ell).unwrap();
            for entry in &spec {
                let mut acc = BiPoly::zero();
                for (k, c) in &coeffs {
                    acc += &c.scale(&js_eigenvalue(n, ell, *k, entry.alpha).unwrap());
                }
                assert_eq!(acc, entry.eigenvalue, "n={n} ell={ell} alpha={}", entry.alpha);
            }
        }
    }

    #[test]
    fn hypergeometric_eigenvalues_at_positive_integers() {
        for (s0, t0) in [(1i64, 1i64), (2, 3)] {
            for (n, ell) in [(5usize, 2usize), (6, 3)] {
                for entry in spectrum_si_plus_tj(n, ell).unwrap() {
                    let direct = BigRational::from(
                        entry.eigenvalue.eval(&BigInt::from(s0), &BigInt::from(t0)),
                    );
                    let a = entry.alpha as i64;
                    let hyper = rat(s0, 1).pow(ell as i32)
                        * eval_2f0(
                            a - ell as i64,
                            1 + n as i64 - ell as i64 - a,
                            &rat(-t0, s0),
                        )
                        .unwrap();
                    assert_eq!(direct, hyper, "s={s0} t={t0} n={n} ell={ell} alpha={a}");
                }
            }
        }
    }

    #[test]
    fn charpoly_consistency_at_specializations() {
        for n in 1..=6usize {
            for ell in 0..=n {
                let assembled = assemble_expansion(n, ell).unwrap();
                let spec = spectrum_si_plus_tj(n, ell).unwrap();
                for (s0, t0) in [(-1i64, 1i64), (1, 1), (2, 3)] {
                    let special = assembled.eval(&BigInt::from(s0), &BigInt::from(t0));
                    let cp = charpoly(&special).unwrap();
                    let from_spec =
                        charpoly_from_spectrum(&spec, &BigInt::from(s0), &BigInt::from(t0));
                    assert_eq!(cp, from_spec, "n={n} ell={ell} s={s0} t={t0}");
                }
            }
        }
    }

    #[test]
    fn submatrix_permanent_depends_only_on_distance() {
        // per((sI + tJ)[I, J]) = P_{ell,k} = h_{ell-k,k} at distance k
        use crate::subsets::{mask_elements, unrank_subset};
        let mut rng = crate::rng::SplitMix64::new(4242);
        for n in 2..=5usize {
            let sitj = ExactMatrix::si_plus_tx(&ExactMatrix::all_ones(n));
            for ell in 1..=n {
                let count = crate::comb::binom_usize(n, ell);
                for _ in 0..6 {
                    let i_mask =
                        unrank_subset(n, ell, (rng.next_u64() % count as u64) as usize).unwrap();
                    let j_mask =
                        unrank_subset(n, ell, (rng.next_u64() % count as u64) as usize).unwrap();
                    let k = crate::subsets::johnson_distance(i_mask, j_mask).unwrap();
                    let rows: Vec<usize> =
                        mask_elements(i_mask).into_iter().map(|e| e - 1).collect();
                    let cols: Vec<usize> =
                        mask_elements(j_mask).into_iter().map(|e| e - 1).collect();
                    let per = crate::permanent::permanent(&sitj.submatrix(&rows, &cols));
                    assert_eq!(per, h_poly(ell - k, k), "n={n} ell={ell} k={k}");
                }
            }
        }
    }
}
