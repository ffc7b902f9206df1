use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Exec;

use super::Quiver;

/// Dense matrix of naturals, row-major. Incidence matrices are the square
/// case, indexed `[source][target]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

pub type IncidenceMatrix = NatMatrix;

impl NatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NatMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {cols} columns, found {}",
                bad.len()
            )));
        }
        Ok(NatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn total(&self) -> u64 {
        self.data.iter().sum()
    }

    pub fn transpose(&self) -> NatMatrix {
        let mut t = NatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &NatMatrix) -> Result<NatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = NatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    *out.get_mut(i, j) += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl Serialize for NatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u64>>::deserialize(d)?;
        NatMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Square matrix of arbitrary-precision naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigMatrix {
    n: usize,
    data: Vec<BigUint>,
}

impl BigMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigUint::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigUint::from(1u32);
        }
        BigMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.n + j]
    }

    pub fn total(&self) -> BigUint {
        self.data.iter().sum()
    }

    /// `self · m`, rows computed under `exec`.
    pub fn mul_nat(&self, m: &NatMatrix, exec: Exec) -> BigMatrix {
        let n = self.n;
        let rows = exec.map_range(n, |i| {
            let mut row = vec![BigUint::zero(); n];
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    let b = m.get(k, j);
                    if b != 0 {
                        *slot += a * b;
                    }
                }
            }
            row
        });
        BigMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

/// `M^n` for the incidence matrix `M` of `q`, by repeated multiplication.
/// Entry `(u, v)` counts the length-`n` paths from `u` to `v`.
pub fn count_paths(q: &Quiver, n: usize) -> BigMatrix {
    count_paths_with(q, n, Exec::default())
}

pub fn count_paths_with(q: &Quiver, n: usize, exec: Exec) -> BigMatrix {
    let m = q.incidence();
    (0..n).fold(BigMatrix::identity(q.num_vertices()), |acc, _| {
        acc.mul_nat(&m, exec)
    })
}

/// Total number of length-`n` paths for every `n` in `0..=max_len`.
pub fn path_count_totals(q: &Quiver, max_len: usize, exec: Exec) -> Vec<BigUint> {
    let m = q.incidence();
    let mut acc = BigMatrix::identity(q.num_vertices());
    let mut out = vec![acc.total()];
    for _ in 0..max_len {
        acc = acc.mul_nat(&m, exec);
        out.push(acc.total());
    }
    out
}
