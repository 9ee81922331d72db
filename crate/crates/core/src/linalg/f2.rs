use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A dense matrix over 𝔽₂, one byte per entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl F2Matrix {
    /// Entries are reduced mod 2.
    pub fn new(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(F2Matrix {
            rows,
            cols,
            bits: entries.iter().map(|&x| x.rem_euclid(2) as u8).collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            bits: alloc::vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.bits[i * self.cols + j] = v & 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn vstack(&self, other: &F2Matrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Ok(F2Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            bits,
        })
    }

    pub fn hstack(&self, other: &F2Matrix) -> Result<Self> {
        Ok(self.transpose().vstack(&other.transpose())?.transpose())
    }

    /// `self · v` for a column vector of bits.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| acc ^ (self.get(i, j) & v[j])))
            .collect()
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) == 1) else {
                continue;
            };
            for j in 0..m.cols {
                m.bits.swap(r * m.cols + j, p * m.cols + j);
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) == 1 {
                    for j in 0..m.cols {
                        let v = m.get(i, j) ^ m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, r)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of `{x : self · x = 0}`, one vector per row.
    pub fn kernel(&self) -> F2Matrix {
        let (r, pivots, _) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            k.set(row, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                k.set(row, p, r.get(i, f));
            }
        }
        k
    }

    /// Canonical basis of the column space, one vector per row.
    pub fn image(&self) -> F2Matrix {
        let (r, _, rank) = self.transpose().rref();
        F2Matrix {
            rows: rank,
            cols: self.rows,
            bits: r.bits[..rank * self.rows].to_vec(),
        }
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "empty({}x{})", self.rows, self.cols);
        }
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
