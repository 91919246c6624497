//! Canonical machine-readable renderings shared by the CLI and the C
//! API. Key order is fixed by the struct declarations, and polynomial
//! values use the canonical string grammar, so emitted JSON re-serializes
//! byte-identically after parsing.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::derange;
use crate::error::Result;
use crate::exppoly;
use crate::johnson;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleKind {
    Poly,
    Derangement,
    Arrangement,
}

impl TriangleKind {
    pub fn label(self) -> &'static str {
        match self {
            TriangleKind::Poly => "poly",
            TriangleKind::Derangement => "derangement",
            TriangleKind::Arrangement => "arrangement",
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ExpandDoc {
    pub n: usize,
    pub ell: usize,
    pub coeffs: Vec<CoeffDoc>,
}

#[derive(Serialize, Deserialize)]
pub struct CoeffDoc {
    pub k: usize,
    pub poly: String,
}

#[derive(Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub n: usize,
    pub ell: usize,
    pub spectrum: Vec<SpectrumEntryDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct SpectrumEntryDoc {
    pub alpha: usize,
    pub eigenvalue: String,
    pub multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
pub struct TriangleDoc {
    pub kind: String,
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn expand_doc(n: usize, ell: usize) -> Result<ExpandDoc> {
    Ok(ExpandDoc {
        n,
        ell,
        coeffs: johnson::expand_si_plus_tj(n, ell)?
            .into_iter()
            .map(|(k, poly)| CoeffDoc {
                k,
                poly: poly.to_string(),
            })
            .collect(),
    })
}

pub fn expand_json(n: usize, ell: usize) -> Result<String> {
    Ok(serde_json::to_string(&expand_doc(n, ell)?)?)
}

/// The spectrum document, optionally specialized at integer (s, t) and
/// optionally carrying the factored characteristic polynomial (which
/// requires the specialization).
pub fn spectrum_doc(
    n: usize,
    ell: usize,
    at: Option<(&BigInt, &BigInt)>,
    with_charpoly: bool,
) -> Result<SpectrumDoc> {
    let spectrum = johnson::spectrum_si_plus_tj(n, ell)?;
    let entries: Vec<SpectrumEntryDoc> = spectrum
        .iter()
        .map(|e| SpectrumEntryDoc {
            alpha: e.alpha,
            eigenvalue: match at {
                Some((s0, t0)) => e.eigenvalue.eval(s0, t0).to_string(),
                None => e.eigenvalue.to_string(),
            },
            multiplicity: e.multiplicity,
        })
        .collect();
    let charpoly = if with_charpoly {
        let (s0, t0) = at.ok_or_else(|| {
            crate::error::Error::Parse("charpoly needs an (s, t) specialization".into())
        })?;
        Some(johnson::charpoly_from_spectrum(&spectrum, s0, t0).to_factored_string("x"))
    } else {
        None
    };
    Ok(SpectrumDoc {
        n,
        ell,
        spectrum: entries,
        charpoly,
    })
}

pub fn spectrum_json(
    n: usize,
    ell: usize,
    at: Option<(&BigInt, &BigInt)>,
    with_charpoly: bool,
) -> Result<String> {
    Ok(serde_json::to_string(&spectrum_doc(n, ell, at, with_charpoly)?)?)
}

/// Triangle rows as canonical strings, row n holding ell = 0..=n.
pub fn triangle_rows(kind: TriangleKind, n: usize) -> Vec<Vec<String>> {
    match kind {
        TriangleKind::Poly => exppoly::p_triangle(n)
            .rows
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect(),
        TriangleKind::Derangement => derange::derangement_triangle(n)
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
        TriangleKind::Arrangement => derange::arrangement_triangle(n)
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

pub fn triangle_json(kind: TriangleKind, n: usize) -> Result<String> {
    Ok(serde_json::to_string(&TriangleDoc {
        kind: kind.label().to_string(),
        n,
        rows: triangle_rows(kind, n),
    })?)
}

/// Zero-padded square CSV layout, one row per n, matching the layout of
/// the reference tables.
pub fn triangle_csv(kind: TriangleKind, n: usize) -> String {
    let width = n + 1;
    let mut out = String::new();
    for row in triangle_rows(kind, n) {
        let mut padded = row;
        padded.resize(width, "0".to_string());
        out.push_str(&padded.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_doc_round_trips() {
        let text = expand_json(4, 2).unwrap();
        let doc: ExpandDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), text);
    }

    #[test]
    fn spectrum_doc_specializes() {
        let doc = spectrum_doc(5, 3, Some((&BigInt::from(-1), &BigInt::from(1))), true).unwrap();
        assert_eq!(doc.spectrum[0].eigenvalue, "32");
        assert_eq!(doc.charpoly.as_deref(), Some("(x-32)*x^5*(x+3)^4"));
        assert!(spectrum_doc(5, 3, None, true).is_err());
    }

    #[test]
    fn csv_is_zero_padded_square() {
        let text = triangle_csv(TriangleKind::Derangement, 2);
        assert_eq!(text, "1,0,0\n0,1,0\n1,1,2\n");
    }
}
