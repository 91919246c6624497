//! Formal power-series check of the exponential generating function for
//! the moment polynomials: with seq\[n\] = h_{n,m}(s,t),
//!
//!   (1 / (t^m m!)) sum_n z^n/n! seq\[n\]  =  e^{zs} (1 - tz)^{-(1+m)}
//!
//! as series in z, through a given order. The right-hand side is expanded
//! independently by convolving the exponential series with the negative
//! binomial series, so this acts as an oracle for the closed form.

use crate::bipoly::BiPoly;
use crate::comb::{binom, factorial};
use crate::error::{Error, Result};

/// True iff the generating-function identity holds through z^order.
/// Both sides are compared after clearing the denominators n! and t^m m!,
/// i.e. seq\[n\] is matched against
///   sum_{a+b=n} (n!/a!) C(m+b, b) m! s^a t^{m+b}.
pub fn expgf_check(seq: &[BiPoly], m: usize, order: usize) -> Result<bool> {
    if seq.len() <= order {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            need: order + 1,
        });
    }
    for (n, given) in seq.iter().enumerate().take(order + 1) {
        let mut expect = BiPoly::zero();
        for b in 0..=n {
            let a = n - b;
            let coeff = (factorial(n) / factorial(a))
                * binom((m + b) as i64, b as i64)
                * factorial(m);
            expect.add_term(coeff, a as u32, (m + b) as u32);
        }
        if given != &expect {
            return Ok(false);
        }
    }
    Ok(true)
}
