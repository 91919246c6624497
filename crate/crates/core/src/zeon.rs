//! The zeon algebra: commuting generators e_1, ..., e_n with e_i^2 = 0.
//! Basis elements are indexed by subsets of \[n\] (bitmasks), so the product
//! of basis elements is e_A e_B = e_{Au B} when A and B are disjoint and 0
//! otherwise. Induced matrices on ell-subsets are obtained by expanding
//! products of the row elements y_i = sum_j X_ij e_j.

use std::collections::BTreeMap;
use std::fmt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::subsets::{mask_elements, subset_masks};

/// Finitely supported map from subsets of \[n\] to polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeonElement {
    n: usize,
    terms: BTreeMap<u64, BiPoly>,
}

impl ZeonElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A scalar multiple of the empty product e_{} = 1.
    pub fn scalar(n: usize, value: BiPoly) -> Self {
        let mut z = Self::zero(n);
        z.add_term(0, value);
        z
    }

    /// The generator e_i (1-based).
    pub fn generator(n: usize, i: usize) -> Self {
        debug_assert!(1 <= i && i <= n);
        let mut z = Self::zero(n);
        z.add_term(1 << (i - 1), BiPoly::one());
        z
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, mask: u64, coeff: BiPoly) {
        debug_assert!(self.n == 64 || mask >> self.n == 0);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(BiPoly::zero);
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn coeff(&self, mask: u64) -> BiPoly {
        self.terms.get(&mask).cloned().unwrap_or_else(BiPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &ZeonElement) -> Result<ZeonElement> {
        if self.n != rhs.n {
            return Err(Error::AmbientMismatch { a: self.n, b: rhs.n });
        }
        let mut out = self.clone();
        for (&mask, coeff) in &rhs.terms {
            out.add_term(mask, coeff.clone());
        }
        Ok(out)
    }

    /// Bilinear product with square-zero commuting generators:
    /// e_A e_B = e_{A u B} when A and B are disjoint, 0 otherwise.
    pub fn mul(&self, rhs: &ZeonElement) -> Result<ZeonElement> {
        if self.n != rhs.n {
            return Err(Error::AmbientMismatch { a: self.n, b: rhs.n });
        }
        let mut out = ZeonElement::zero(self.n);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                if a & b == 0 {
                    out.add_term(a | b, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// The row element y_i = sum_j X_ij e_j for a matrix X (i is 1-based).
    pub fn row_element(x: &ExactMatrix, i: usize) -> ZeonElement {
        let n = x.dim();
        let mut z = ZeonElement::zero(n);
        for j in 0..n {
            let c = x.get(i - 1, j);
            if !c.is_zero() {
                z.add_term(1 << j, c.clone());
            }
        }
        z
    }
}

impl fmt::Display for ZeonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&mask, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let basis = if mask == 0 {
                String::new()
            } else {
                let elems: Vec<String> =
                    mask_elements(mask).into_iter().map(|e| e.to_string()).collect();
                format!("e{{{}}}", elems.join(","))
            };
            match coeff.as_constant() {
                Some(c) if basis.is_empty() => write!(f, "{c}")?,
                Some(c) if num_traits::One::is_one(&c) => write!(f, "{basis}")?,
                Some(c) => write!(f, "{c}*{basis}")?,
                None if basis.is_empty() => write!(f, "({coeff})")?,
                None => write!(f, "({coeff})*{basis}")?,
            }
        }
        Ok(())
    }
}

/// The ell-th induced matrix of X computed by direct algebra
/// multiplication: row I is the expansion of y_I = prod_{i in I} y_i, and
/// the (I, J) entry is the coefficient of e_J. Rows and columns are in
/// lexicographic subset-rank order; ell = 0 gives the 1x1 matrix \[1\].
pub fn induced_matrix_zeon(x: &ExactMatrix, ell: usize) -> Result<ExactMatrix> {
    let n = x.dim();
    if ell > n {
        return Err(Error::LevelOutOfRange { ell, n });
    }
    let row_masks = subset_masks(n, ell);
    let dim = row_masks.len();
    let rows: Vec<Vec<BiPoly>> = crate::par::map_indexed(dim, |r| {
        let mut product = ZeonElement::scalar(n, BiPoly::one());
        for i in mask_elements(row_masks[r]) {
            product = product
                .mul(&ZeonElement::row_element(x, i))
                .expect("same ambient dimension");
        }
        row_masks
            .iter()
            .map(|&col| product.coeff(col))
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
