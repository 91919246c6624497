//! Exponential moment polynomials h_{n,m}(s,t), the permanent triangle
//! P_{n,ell} with its recurrence and identities, and the associated
//! polynomials Q_n with their asymptotics.
//!
//! `h_poly` is the single source of truth for closed-form values; the
//! triangle is generated independently by its recurrence and cross-checked
//! against `h_poly` in tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bipoly::BiPoly;
use crate::comb::{binom, factorial};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// h_{n,m}(s,t) = sum_j C(n,j) (m+j)! s^(n-j) t^(m+j).
pub fn h_poly(n: usize, m: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    for j in 0..=n {
        let coeff = binom(n as i64, j as i64) * factorial(m + j);
        out.add_term(coeff, (n - j) as u32, (m + j) as u32);
    }
    out
}

/// The four equivalent summation forms of h_{n-m,m}(s,t), for n >= m:
/// direct, index-shifted, complement-binomial, and order-reversed.
/// They must all produce the same polynomial.
pub fn h_diag_forms(n: usize, m: usize) -> [BiPoly; 4] {
    assert!(m <= n, "h_diag_forms needs m <= n");
    let nm = n - m;
    let mut f0 = BiPoly::zero();
    for j in 0..=nm {
        f0.add_term(
            binom(nm as i64, j as i64) * factorial(m + j),
            (nm - j) as u32,
            (m + j) as u32,
        );
    }
    let mut f1 = BiPoly::zero();
    for j in m..=n {
        f1.add_term(
            binom(nm as i64, (j - m) as i64) * factorial(j),
            (n - j) as u32,
            j as u32,
        );
    }
    let mut f2 = BiPoly::zero();
    for j in m..=n {
        f2.add_term(
            binom(nm as i64, (n - j) as i64) * factorial(j),
            (n - j) as u32,
            j as u32,
        );
    }
    let mut f3 = BiPoly::zero();
    for j in 0..=nm {
        f3.add_term(
            binom(nm as i64, j as i64) * factorial(n - j),
            j as u32,
            (n - j) as u32,
        );
    }
    [f0, f1, f2, f3]
}

/// The n x n matrix with the first n-ell diagonal entries s+t and every
/// other entry t. M(n, 0) = sI + tJ and M(n, n) = tJ.
pub fn m_matrix(n: usize, ell: usize) -> Result<ExactMatrix> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let s_plus_t = &BiPoly::var_s() + &BiPoly::var_t();
    let t = BiPoly::var_t();
    let mut m = ExactMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let e = if i == j && i < n - ell { s_plus_t.clone() } else { t.clone() };
            m.set(i, j, e);
        }
    }
    Ok(m)
}

/// Triangle of polynomials (or of their integer specializations), rows
/// indexed by n, row n holding entries for ell = 0..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub rows: Vec<Vec<BiPoly>>,
}

impl Triangle {
    pub fn entry(&self, n: usize, ell: usize) -> &BiPoly {
        &self.rows[n][ell]
    }

    /// Specialize every entry at integer (s, t).
    pub fn eval(&self, s: &BigInt, t: &BigInt) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|p| p.eval(s, t)).collect())
            .collect()
    }
}

/// First-column seed P_{n,0} = per(sI + tJ) = sum_j (n!/(n-j)!) s^(n-j) t^j,
/// written out directly so the triangle does not depend on `h_poly`.
fn p_initial(n: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    let nf = factorial(n);
    for j in 0..=n {
        out.add_term(&nf / factorial(n - j), (n - j) as u32, j as u32);
    }
    out
}

/// The full triangle P_{n,ell} for n <= nmax via the L-shaped recurrence
/// P_{n,ell} = P_{n,ell-1} - s P_{n-1,ell-1}.
pub fn p_triangle(nmax: usize) -> Triangle {
    let s = BiPoly::var_s();
    let mut rows: Vec<Vec<BiPoly>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut row = vec![p_initial(n)];
        for ell in 1..=n {
            let above = if n == 0 { BiPoly::zero() } else { rows[n - 1][ell - 1].clone() };
            let prev = &row[ell - 1];
            row.push(prev - &(&s * &above));
        }
        rows.push(row);
    }
    Triangle { rows }
}

/// Closed form P_{n,ell} = h_{n-ell,ell}.
pub fn p_poly(n: usize, ell: usize) -> Result<BiPoly> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    Ok(h_poly(n - ell, ell))
}

/// P_{n,ell} from the initial sequence:
/// sum_j C(ell,j) (-1)^j s^j P_{n-j,0}.
pub fn pst_sum_from_initial(n: usize, ell: usize) -> Result<BiPoly> {
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let s = BiPoly::var_s();
    let mut acc = BiPoly::zero();
    for j in 0..=ell {
        let mut term = p_initial(n - j);
        term = &term * &s.pow(j as u32);
        let mut c = binom(ell as i64, j as i64);
        if j % 2 == 1 {
            c = -c;
        }
        acc += &term.scale(&c);
    }
    Ok(acc)
}

/// The complementary alternating sum
/// sum_ell C(n,ell) (-1)^ell P_{n,ell}, which collapses to s^n.
pub fn pst_alternating_sum(n: usize) -> BiPoly {
    let tri = p_triangle(n);
    let mut acc = BiPoly::zero();
    for ell in 0..=n {
        let mut c = binom(n as i64, ell as i64);
        if ell % 2 == 1 {
            c = -c;
        }
        acc += &tri.entry(n, ell).scale(&c);
    }
    acc
}

/// Associated polynomial Q_n(x) = sum_ell C(n,ell) x^ell P_{n,ell} for an
/// exact rational x. The result equals P_{n,0}(s, t + x t); its
/// coefficients are integers whenever x is an integer, and a rational x
/// whose powers do not clear the denominators yields `NonIntegralResult`.
pub fn q_poly(n: usize, x: &BigRational) -> Result<BiPoly> {
    let tri = p_triangle(n);
    let mut terms: std::collections::BTreeMap<(u32, u32), BigRational> = Default::default();
    let mut xpow = BigRational::one();
    for ell in 0..=n {
        let weight = BigRational::from(binom(n as i64, ell as i64)) * &xpow;
        for (&(ds, dt), c) in tri.entry(n, ell).iter() {
            let slot = terms.entry((ds, dt)).or_insert_with(BigRational::zero);
            *slot += BigRational::from(c.clone()) * &weight;
        }
        xpow *= x;
    }
    terms.retain(|_, c| !c.is_zero());
    BiPoly::from_rational_terms(&terms)
}

/// Q_n(x)|_{s=s0,t=t0} divided by t0^n (1+x0)^n n!, as a float. As n grows
/// this ratio converges to exp(s0 / (t0 + t0 x0)).
pub fn q_asymptotic_ratio(
    n: usize,
    s0: &BigRational,
    t0: &BigRational,
    x0: &BigRational,
) -> Result<f64> {
    if t0.is_zero() {
        return Err(Error::DivisionByZero("t0 must be nonzero"));
    }
    let one_plus_x = BigRational::one() + x0;
    if one_plus_x.is_zero() {
        return Err(Error::DivisionByZero("x0 must differ from -1"));
    }
    // evaluate Q_n(x0) at (s0, t0) exactly through the triangle entries
    let tri = p_triangle(n);
    let mut q_value = BigRational::zero();
    let mut xpow = BigRational::one();
    for ell in 0..=n {
        let mut entry = BigRational::zero();
        for (&(ds, dt), c) in tri.entry(n, ell).iter() {
            entry += BigRational::from(c.clone()) * s0.pow(ds as i32) * t0.pow(dt as i32);
        }
        q_value += BigRational::from(binom(n as i64, ell as i64)) * &xpow * entry;
        xpow *= x0;
    }
    let denom = t0.pow(n as i32) * one_plus_x.pow(n as i32) * BigRational::from(factorial(n));
    let ratio = q_value / denom;
    ratio
        .to_f64()
        .ok_or(Error::DivisionByZero("ratio does not fit in a float"))
}
