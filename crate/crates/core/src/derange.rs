//! Generalized derangement numbers D_{n,ell} and arrangement numbers
//! A_{n,ell}: the integer specializations of the permanent triangle at
//! (s,t) = (-1,1) and (1,1). Each family comes with several closed forms,
//! a recurrence, brute-force counting oracles, and the specialized
//! spectra of (J-I)^(ell) and (I+J)^(ell).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bipoly::BiPoly;
use crate::comb::{binom, factorial, falling_factorial};
use crate::error::{Error, Result};
use crate::johnson::{js_multiplicity, max_distance};
use crate::matrix::ExactMatrix;
use crate::subsets::{johnson_distance, subset_masks};

/// Which specialization of the triangle a number family comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    /// (s,t) = (-1,1): permutations deranging a fixed set.
    Derangement,
    /// (s,t) = (1,1): arrangements containing a fixed set.
    Arrangement,
}

/// A triangle of counts for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountFamily {
    pub kind: CountKind,
    pub table: Vec<Vec<BigInt>>,
}

fn check(n: usize, ell: usize) -> Result<()> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    Ok(())
}

/// D_{n,ell} = sum_{j=ell}^{n} (-1)^(n-j) C(n-ell, n-j) j!.
pub fn derangement_number(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in ell..=n {
        let term = binom((n - ell) as i64, (n - j) as i64) * factorial(j);
        if (n - j) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Inclusion-exclusion form D_{n,ell} = sum_j (-1)^j C(n-ell, j) (n-j)!.
pub fn derangement_incl_excl(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in 0..=(n - ell) {
        let term = binom((n - ell) as i64, j as i64) * factorial(n - j);
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// D_{n,ell} = sum_j C(ell, j) d_{n-j} with d the classic derangement
/// numbers.
pub fn derangement_from_classics(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in 0..=ell {
        acc += binom(ell as i64, j as i64) * derangement_number(n - j, 0)?;
    }
    Ok(acc)
}

/// The full D triangle generated by the recurrence
/// D_{n,ell} = D_{n,ell-1} + D_{n-1,ell-1}, seeded by the first column.
pub fn derangement_triangle(nmax: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut row = vec![derangement_number(n, 0).expect("ell = 0 is valid")];
        for ell in 1..=n {
            let up = rows[n - 1][ell - 1].clone();
            let left = row[ell - 1].clone();
            row.push(left + up);
        }
        rows.push(row);
    }
    rows
}

/// A_{n,ell} = sum_{j=ell}^{n} C(n-ell, n-j) j!.
pub fn arrangement_number(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in ell..=n {
        acc += binom((n - ell) as i64, (n - j) as i64) * factorial(j);
    }
    Ok(acc)
}

/// Convolution form A_{n,ell} = sum_{j=ell}^n A(j,ell) A(n-ell, j-ell)
/// where A(n,k) = n!/(n-k)! counts k-arrangements of an n-set.
pub fn arrangement_convolution(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in ell..=n {
        acc += falling_factorial(j, ell) * falling_factorial(n - ell, j - ell);
    }
    Ok(acc)
}

/// Alternating form A_{n,ell} = sum_j (-1)^j C(ell,j) a_{n-j} with
/// a_n = A_{n,0} the total arrangement counts.
pub fn arrangement_from_totals(n: usize, ell: usize) -> Result<BigInt> {
    check(n, ell)?;
    let mut acc = BigInt::zero();
    for j in 0..=ell {
        let term = binom(ell as i64, j as i64) * arrangement_number(n - j, 0)?;
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// The full A triangle generated by the recurrence
/// A_{n,ell} = A_{n,ell-1} - A_{n-1,ell-1}, seeded by the first column.
pub fn arrangement_triangle(nmax: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut row = vec![arrangement_number(n, 0).expect("ell = 0 is valid")];
        for ell in 1..=n {
            let up = rows[n - 1][ell - 1].clone();
            let left = row[ell - 1].clone();
            row.push(left - up);
        }
        rows.push(row);
    }
    rows
}

pub fn count_family(kind: CountKind, nmax: usize) -> CountFamily {
    let table = match kind {
        CountKind::Derangement => derangement_triangle(nmax),
        CountKind::Arrangement => arrangement_triangle(nmax),
    };
    CountFamily { kind, table }
}

const DERANGEMENT_ORACLE_BOUND: usize = 9;
const ARRANGEMENT_ORACLE_BOUND: usize = 8;

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    // Heap's algorithm over 1-based images
    let mut items: Vec<usize> = (1..=n).collect();
    if n == 0 {
        visit(&items);
        return;
    }
    fn heap(k: usize, items: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k {
            heap(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut visit);
}

/// All permutations of \[n\] (one-line, 1-based) in which no point of
/// {1, ..., n-ell} is fixed, sorted lexicographically.
pub fn deranged_permutations(n: usize, ell: usize) -> Result<Vec<Vec<usize>>> {
    check(n, ell)?;
    if n > DERANGEMENT_ORACLE_BOUND {
        return Err(Error::EnumerationBound {
            n,
            bound: DERANGEMENT_ORACLE_BOUND,
        });
    }
    let mut out = Vec::new();
    for_each_permutation(n, |perm| {
        let deranged = (0..n - ell).all(|i| perm[i] != i + 1);
        if deranged {
            out.push(perm.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

/// Brute-force count of permutations of \[n\] deranging {1, ..., n-ell}.
pub fn oracle_deranged_count(n: usize, ell: usize) -> Result<BigInt> {
    Ok(BigInt::from(deranged_permutations(n, ell)?.len()))
}

/// All arrangements of \[n\] (permutations of subsets, 1-based) whose
/// underlying set contains {1, ..., ell}, sorted.
pub fn arrangements_containing(n: usize, ell: usize) -> Result<Vec<Vec<usize>>> {
    check(n, ell)?;
    if n > ARRANGEMENT_ORACLE_BOUND {
        return Err(Error::EnumerationBound {
            n,
            bound: ARRANGEMENT_ORACLE_BOUND,
        });
    }
    let required: u64 = if ell == 0 { 0 } else { (1 << ell) - 1 };
    let mut out = Vec::new();
    for subset in 0u64..(1 << n) {
        if subset & required != required {
            continue;
        }
        let elements: Vec<usize> = crate::subsets::mask_elements(subset);
        let k = elements.len();
        // enumerate every ordering of the chosen subset
        let mut index_perm: Vec<usize> = (0..k).collect();
        if k == 0 {
            out.push(Vec::new());
            continue;
        }
        fn heap(
            k: usize,
            idx: &mut Vec<usize>,
            elements: &[usize],
            out: &mut Vec<Vec<usize>>,
        ) {
            if k <= 1 {
                out.push(idx.iter().map(|&i| elements[i]).collect());
                return;
            }
            for i in 0..k {
                heap(k - 1, idx, elements, out);
                if k.is_multiple_of(2) {
                    idx.swap(i, k - 1);
                } else {
                    idx.swap(0, k - 1);
                }
            }
        }
        heap(k, &mut index_perm, &elements, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Brute-force count of arrangements of \[n\] containing \[ell\].
pub fn oracle_arrangement_count(n: usize, ell: usize) -> Result<BigInt> {
    Ok(BigInt::from(arrangements_containing(n, ell)?.len()))
}

/// One integer eigenspace of a specialized induced matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSpectrumEntry {
    pub alpha: usize,
    pub eigenvalue: BigInt,
    pub multiplicity: usize,
}

/// The spectrum of (J-I)^(ell) or (I+J)^(ell) on ell-subsets of \[n\],
/// read off the triangles by knight's moves:
/// derangements: (-1)^alpha D_{n-2a, n-ell-a} / (n-ell-a)!,
/// arrangements:          A_{n-2a, n-ell-a} / (n-ell-a)!.
pub fn specialized_spectrum(kind: CountKind, n: usize, ell: usize) -> Result<Vec<IntSpectrumEntry>> {
    let amax = max_distance(n, ell)?;
    let mut out = Vec::with_capacity(amax + 1);
    for alpha in 0..=amax {
        let col = n - ell - alpha;
        let value = match kind {
            CountKind::Derangement => derangement_number(n - 2 * alpha, col)?,
            CountKind::Arrangement => arrangement_number(n - 2 * alpha, col)?,
        };
        let scale = factorial(col);
        let (quot, rem) = num_integer::Integer::div_rem(&value, &scale);
        assert!(rem.is_zero(), "triangle value must be divisible by {col}!");
        let eigenvalue = match kind {
            CountKind::Derangement if alpha % 2 == 1 => -quot,
            _ => quot,
        };
        out.push(IntSpectrumEntry {
            alpha,
            eigenvalue,
            multiplicity: js_multiplicity(n, alpha),
        });
    }
    Ok(out)
}

/// Recover the Johnson basis from an induced matrix of J-I or I+J by
/// grouping equal entries. Fails when two expansion coefficients
/// coincide (as for (J-I)^(2)), because the grouping then merges two
/// distance classes.
pub fn read_off_johnson_basis(m: &ExactMatrix, n: usize, ell: usize) -> Result<Vec<ExactMatrix>> {
    let kmax = max_distance(n, ell)?;
    let masks = subset_masks(n, ell);
    let dim = masks.len();
    if m.dim() != dim {
        return Err(Error::NonSquare {
            rows: m.dim(),
            cols: dim,
        });
    }
    let mut groups: std::collections::BTreeMap<String, ExactMatrix> = Default::default();
    for i in 0..dim {
        for j in 0..dim {
            let key = m.get(i, j).to_string();
            let indicator = groups
                .entry(key)
                .or_insert_with(|| ExactMatrix::zeros(dim));
            indicator.set(i, j, BiPoly::one());
        }
    }
    if groups.len() != kmax + 1 {
        return Err(Error::CoincidentCoefficients);
    }
    // identify each group's distance by any of its positions and verify
    let mut by_distance: Vec<Option<ExactMatrix>> = vec![None; kmax + 1];
    for (_, indicator) in groups {
        let (i, j) = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .find(|&(i, j)| !indicator.get(i, j).is_zero())
            .expect("indicator group is nonempty");
        let k = johnson_distance(masks[i], masks[j])?;
        if by_distance[k].is_some() {
            return Err(Error::CoincidentCoefficients);
        }
        by_distance[k] = Some(indicator);
    }
    let recovered: Vec<ExactMatrix> = by_distance.into_iter().flatten().collect();
    for (k, indicator) in recovered.iter().enumerate() {
        if indicator != &crate::johnson::js_matrix(n, ell, k)? {
            return Err(Error::CoincidentCoefficients);
        }
    }
    Ok(recovered)
}

/// Classic derangement numbers d_n as machine integers, for display.
pub fn classic_derangement(n: usize) -> u64 {
    derangement_number(n, 0)
        .expect("ell = 0 is valid")
        .to_u64()
        .expect("desk-scale value")
}
