//! Dense square matrices over [`BiPoly`], together with the JSON file
//! format consumed by the CLI:
//!
//! ```json
//! {"n": 3, "entries": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}
//! ```
//!
//! Entries may be integers or strings in the canonical polynomial grammar.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BiPoly>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BiPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BiPoly::one());
        }
        m
    }

    /// The all-ones matrix J.
    pub fn all_ones(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BiPoly::one(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self> {
        let dim = rows.len();
        for row in &rows {
            if row.len() != dim {
                return Err(Error::NonSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BiPoly::constant(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BiPoly) {
        self.entries[i * self.dim + j] = value;
    }

    /// s*I + t*X with formal variables s and t.
    pub fn si_plus_tx(x: &ExactMatrix) -> ExactMatrix {
        let n = x.dim;
        let s = BiPoly::var_s();
        let t = BiPoly::var_t();
        let mut m = ExactMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut e = &t * x.get(i, j);
                if i == j {
                    e += &s;
                }
                m.set(i, j, e);
            }
        }
        m
    }

    /// Fresh copy of the submatrix with the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let k = rows.len();
        debug_assert_eq!(k, cols.len());
        let mut m = ExactMatrix::zeros(k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> BiPoly {
        let mut acc = BiPoly::zero();
        for i in 0..self.dim {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn row_sum(&self, i: usize) -> BiPoly {
        let mut acc = BiPoly::zero();
        for j in 0..self.dim {
            acc += self.get(i, j);
        }
        acc
    }

    pub fn matmul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::NonSquare {
                rows: self.dim,
                cols: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = ExactMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BiPoly::zero();
                for k in 0..n {
                    let prod = self.get(i, k) * rhs.get(k, j);
                    acc += &prod;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Substitute integers for (s, t) in every entry.
    pub fn eval(&self, s: &BigInt, t: &BigInt) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, BiPoly::constant(self.get(i, j).eval(s, t)));
            }
        }
        out
    }

    /// Row-major integer entries, or None if any entry is non-constant.
    pub fn as_int_entries(&self) -> Option<Vec<BigInt>> {
        self.entries.iter().map(|e| e.as_constant()).collect()
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        (0..self.dim).all(|j| self.get(i, j).is_zero())
    }

    /// True if this is a 0/1 matrix with exactly one 1 per row and column.
    pub fn is_permutation_matrix(&self) -> bool {
        let Some(ints) = self.as_int_entries() else {
            return false;
        };
        let n = self.dim;
        let mut col_seen = vec![false; n];
        for i in 0..n {
            let mut ones = 0;
            for j in 0..n {
                let v = &ints[i * n + j];
                if v.is_one() {
                    ones += 1;
                    if col_seen[j] {
                        return false;
                    }
                    col_seen[j] = true;
                } else if !v.is_zero() {
                    return false;
                }
            }
            if ones != 1 {
                return false;
            }
        }
        true
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("matrix JSON must be an object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field `n`".into()))? as usize;
        let rows = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field `entries`".into()))?;
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        let mut m = ExactMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("row {i} is not an array")))?;
            if cells.len() != n {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {n}",
                    cells.len()
                )));
            }
            for (j, cell) in cells.iter().enumerate() {
                let poly = match cell {
                    Value::Number(num) => {
                        let int = num
                            .as_i64()
                            .ok_or_else(|| Error::Parse(format!("entry ({i},{j}) not an integer")))?;
                        BiPoly::constant(int)
                    }
                    Value::String(text) => text.parse()?,
                    other => {
                        return Err(Error::Parse(format!(
                            "entry ({i},{j}) has unsupported type: {other}"
                        )))
                    }
                };
                m.set(i, j, poly);
            }
        }
        Ok(m)
    }

    /// Canonical JSON with every entry rendered as a polynomial string.
    pub fn to_json_string(&self) -> String {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        serde_json::to_string(&serde_json::json!({
            "n": self.dim,
            "entries": rows,
        }))
        .expect("matrix JSON serialization cannot fail")
    }
}
