//! Exact bivariate polynomials in the formal variables `s` and `t` with
//! big-integer coefficients.
//!
//! This is the universal value type of the crate: matrix entries, traces,
//! eigenvalues and triangle entries are all [`BiPoly`] values. The
//! representation is sparse, keyed by the exponent pair `(deg_s, deg_t)`,
//! and canonical: zero coefficients are never stored.
//!
//! The canonical string form joins terms with `+`/`-`, orders them by
//! descending degree in `s` and then ascending degree in `t`, elides `^1`
//! and unit coefficients, and separates factors with `*`, as in
//! `s^2+2*s*t+2*t^2`. [`BiPoly::from_str`] parses that grammar, accepting
//! arbitrary whitespace and an optional `*`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), 0, 0);
        p
    }

    /// The variable `s`.
    pub fn var_s() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    /// The variable `t`.
    pub fn var_t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `coeff * s^deg_s * t^deg_t`.
    pub fn monomial(coeff: BigInt, deg_s: u32, deg_t: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, deg_s, deg_t);
        p
    }

    /// Add `coeff * s^deg_s * t^deg_t` in place, dropping the term if the
    /// resulting coefficient is zero.
    pub fn add_term(&mut self, coeff: BigInt, deg_s: u32, deg_t: u32) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((deg_s, deg_t)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(deg_s, deg_t));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(coefficient) if the polynomial is a constant (including 0).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, deg_s: u32, deg_t: u32) -> BigInt {
        self.terms
            .get(&(deg_s, deg_t))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn deg_s(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Total degree of the highest term, 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0 + k.1).max().unwrap_or(0)
    }

    /// True when every term has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|k| k.0 + k.1 == d)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (&(ds, dt), coeff) in &self.terms {
            out.add_term(coeff * c, ds, dt);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at integer points.
    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(ds, dt), coeff) in &self.terms {
            acc += coeff * s.pow(ds) * t.pow(dt);
        }
        acc
    }

    /// Exact evaluation at rational points.
    pub fn eval_rat(&self, s: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(ds, dt), coeff) in &self.terms {
            acc += BigRational::from(coeff.clone()) * s.pow(ds as i32) * t.pow(dt as i32);
        }
        acc
    }

    /// Reinterpret as a univariate polynomial in `t`; None if `s` occurs.
    pub fn as_unipoly_t(&self) -> Option<crate::unipoly::UniPoly> {
        if self.terms.keys().any(|k| k.0 != 0) {
            return None;
        }
        let deg = self.deg_t() as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (&(_, dt), c) in &self.terms {
            coeffs[dt as usize] = c.clone();
        }
        Some(crate::unipoly::UniPoly::from_coeffs(coeffs))
    }

    /// Build an integer polynomial from rational coefficients, failing if
    /// any coefficient has a denominator.
    pub fn from_rational_terms(terms: &BTreeMap<(u32, u32), BigRational>) -> Result<Self> {
        let mut out = Self::zero();
        for (&(ds, dt), c) in terms {
            if !c.is_integer() {
                return Err(Error::NonIntegralResult);
            }
            out.add_term(c.to_integer(), ds, dt);
        }
        Ok(out)
    }

    /// Terms in canonical print order: descending `s` degree, then
    /// ascending `t` degree.
    fn print_order(&self) -> Vec<(&(u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(&(ds, dt), _)| (std::cmp::Reverse(ds), dt));
        v
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(ds, dt), coeff)) in self.print_order().into_iter().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let abs = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (ds == 0 && dt == 0) {
                factors.push(abs.to_string());
            }
            if ds > 0 {
                factors.push(if ds == 1 { "s".into() } else { format!("s^{ds}") });
            }
            if dt > 0 {
                factors.push(if dt == 1 { "t".into() } else { format!("t^{dt}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let mut poly = BiPoly::zero();
        let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pos = 0;
        let mut first = true;
        while pos < chars.len() {
            let mut sign = 1i32;
            if first {
                if chars[pos] == '-' {
                    sign = -1;
                    pos += 1;
                } else if chars[pos] == '+' {
                    pos += 1;
                }
            } else {
                match chars[pos] {
                    '+' => pos += 1,
                    '-' => {
                        sign = -1;
                        pos += 1;
                    }
                    c => return Err(Error::Parse(format!("expected + or -, found `{c}`"))),
                }
            }
            first = false;

            let digits_start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if pos > digits_start {
                let text: String = chars[digits_start..pos].iter().collect();
                text.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad coefficient `{text}`: {e}")))?
            } else {
                BigInt::one()
            };
            if sign < 0 {
                coeff = -coeff;
            }

            let mut deg_s = 0u32;
            let mut deg_t = 0u32;
            let mut saw_var = false;
            loop {
                if pos < chars.len() && chars[pos] == '*' {
                    if pos == digits_start && !saw_var {
                        return Err(Error::Parse("`*` with no preceding factor".into()));
                    }
                    pos += 1;
                    if pos >= chars.len() {
                        return Err(Error::Parse("dangling `*`".into()));
                    }
                }
                match chars.get(pos) {
                    Some('s') | Some('t') => {
                        let var = chars[pos];
                        pos += 1;
                        let mut exp = 1u32;
                        if chars.get(pos) == Some(&'^') {
                            pos += 1;
                            let e_start = pos;
                            while pos < chars.len() && chars[pos].is_ascii_digit() {
                                pos += 1;
                            }
                            if pos == e_start {
                                return Err(Error::Parse("missing exponent after `^`".into()));
                            }
                            let text: String = chars[e_start..pos].iter().collect();
                            exp = text
                                .parse::<u32>()
                                .map_err(|e| Error::Parse(format!("bad exponent `{text}`: {e}")))?;
                        }
                        saw_var = true;
                        if var == 's' {
                            deg_s += exp;
                        } else {
                            deg_t += exp;
                        }
                    }
                    _ => break,
                }
            }
            if pos == digits_start && !saw_var {
                return Err(Error::Parse(format!(
                    "expected a term at position {pos} of `{input}`"
                )));
            }
            poly.add_term(coeff, deg_s, deg_t);
        }
        Ok(poly)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(ds, dt), c) in &rhs.terms {
            self.add_term(c.clone(), ds, dt);
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(ds, dt), c) in &rhs.terms {
            out.add_term(-c.clone(), ds, dt);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ds1, dt1), c1) in &self.terms {
            for (&(ds2, dt2), c2) in &rhs.terms {
                out.add_term(c1 * c2, ds1 + ds2, dt1 + dt2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        &BiPoly::zero() - self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}
