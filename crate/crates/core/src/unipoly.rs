//! Dense univariate polynomials with big-integer coefficients, used for
//! characteristic polynomials and generating functions in a single formal
//! variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The formal variable.
    pub fn var() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// prod_i (x - root_i)^mult_i, exactly.
    pub fn from_roots(roots: &[(BigInt, usize)]) -> Self {
        let mut acc = Self::one();
        for (root, mult) in roots {
            let factor = Self::from_coeffs(vec![-root.clone(), BigInt::one()]);
            for _ in 0..*mult {
                acc = &acc * &factor;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divide by (x - root); None if the division leaves a remainder.
    pub fn deflate(&self, root: &BigInt) -> Option<UniPoly> {
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for i in (0..self.coeffs.len()).rev() {
            let value = &self.coeffs[i] + &carry;
            if i == 0 {
                if !value.is_zero() {
                    return None;
                }
            } else {
                carry = &value * root;
                quotient[i - 1] = value;
            }
        }
        Some(UniPoly::from_coeffs(quotient))
    }

    /// Complete factorization into integer linear factors, as
    /// (root, multiplicity) pairs sorted by descending root. Returns None
    /// if the polynomial is not monic or has a non-linear irreducible part.
    pub fn integer_linear_factors(&self) -> Option<Vec<(BigInt, usize)>> {
        if !self.is_monic() {
            return None;
        }
        let mut rest = self.clone();
        let mut roots: Vec<(BigInt, usize)> = Vec::new();
        // strip powers of x first
        let mut zero_mult = 0usize;
        while rest.degree() > Some(0) && rest.coeff(0).is_zero() {
            rest = rest.deflate(&BigInt::zero())?;
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((BigInt::zero(), zero_mult));
        }
        while rest.degree() > Some(0) {
            let constant = rest.coeff(0).abs();
            let root = divisors_up_to(&constant, 1_000_000_000_000u64)?
                .into_iter()
                .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
                .find(|cand| rest.eval(cand).is_zero())?;
            let mut mult = 0usize;
            while let Some(next) = rest.deflate(&root) {
                rest = next;
                mult += 1;
                if rest.degree() == Some(0) {
                    break;
                }
            }
            roots.push((root, mult));
        }
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        Some(roots)
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (deg, coeff)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let abs = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || deg == 0 {
                factors.push(abs.to_string());
            }
            if deg == 1 {
                factors.push(var.to_string());
            } else if deg > 1 {
                factors.push(format!("{var}^{deg}"));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Factored rendering like `x^5*(x-32)*(x+3)^4` when the polynomial
    /// splits into integer linear factors; falls back to the expanded form.
    pub fn to_factored_string(&self, var: &str) -> String {
        match self.integer_linear_factors() {
            Some(roots) if !roots.is_empty() => {
                let mut parts = Vec::new();
                for (root, mult) in roots {
                    let base = if root.is_zero() {
                        var.to_string()
                    } else if root.is_negative() {
                        format!("({var}+{})", root.abs())
                    } else {
                        format!("({var}-{root})")
                    };
                    parts.push(if mult == 1 { base } else { format!("{base}^{mult}") });
                }
                parts.join("*")
            }
            _ => self.to_string_with(var),
        }
    }
}

/// All positive divisors of |n|, or None when |n| exceeds `cap` (divisor
/// search would be too slow to be useful).
fn divisors_up_to(n: &BigInt, cap: u64) -> Option<Vec<u64>> {
    use num_traits::ToPrimitive;
    let n = n.abs().to_u64()?;
    if n == 0 || n > cap {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_trims_leading_zeros() {
        let p = UniPoly::from_coeffs(vec![BigInt::from(1), BigInt::zero(), BigInt::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert!(UniPoly::from_coeffs(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn from_roots_expands() {
        // (x-1)^2 = x^2 - 2x + 1
        let p = UniPoly::from_roots(&[(BigInt::one(), 2)]);
        assert_eq!(p.to_string_with("x"), "x^2-2*x+1");
    }

    #[test]
    fn eval_horner() {
        let p = UniPoly::from_coeffs(vec![BigInt::from(2), BigInt::from(-3), BigInt::one()]);
        assert_eq!(p.eval(&BigInt::from(5)), BigInt::from(12));
    }

    #[test]
    fn factors_recovered() {
        let p = UniPoly::from_roots(&[
            (BigInt::from(32), 1),
            (BigInt::from(-3), 4),
            (BigInt::zero(), 5),
        ]);
        let roots = p.integer_linear_factors().unwrap();
        assert_eq!(
            roots,
            vec![
                (BigInt::from(32), 1),
                (BigInt::zero(), 5),
                (BigInt::from(-3), 4)
            ]
        );
        assert_eq!(p.to_factored_string("x"), "(x-32)*x^5*(x+3)^4");
    }

    #[test]
    fn irreducible_quadratic_has_no_linear_factorization() {
        // x^2 + 1
        let p = UniPoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        assert!(p.integer_linear_factors().is_none());
        assert_eq!(p.to_factored_string("x"), "x^2+1");
    }
}
