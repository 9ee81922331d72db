use alloc::format;
use core::fmt;

use super::{Prop, Semiring};
use crate::boxes::BoxValue;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Rational};
use crate::perm::Permutation;

/// A matrix over a semiring. A value `n → m` is an `m × n` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemiMatrix {
    semiring: Semiring,
    m: ExactMatrix,
}

impl SemiMatrix {
    /// Entries are mapped onto the semiring's carrier.
    pub fn new(semiring: Semiring, m: ExactMatrix) -> Result<Self> {
        let data = m
            .entries()
            .iter()
            .map(|q| semiring.normalize(q))
            .collect::<Result<_>>()?;
        Ok(SemiMatrix {
            semiring,
            m: ExactMatrix::new(m.rows(), m.cols(), data)?,
        })
    }

    pub fn from_i64(semiring: Semiring, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Self::new(semiring, ExactMatrix::from_i64(rows, cols, data)?)
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.m
    }

    pub fn rows(&self) -> usize {
        self.m.rows()
    }

    pub fn cols(&self) -> usize {
        self.m.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.m.get(i, j)
    }

    /// Product `self · other` in the semiring.
    pub fn mul(&self, other: &SemiMatrix) -> Result<SemiMatrix> {
        if self.semiring != other.semiring {
            return Err(Error::DimensionMismatch(format!(
                "product of {} and {} matrices",
                self.semiring.name(),
                other.semiring.name()
            )));
        }
        Self::new(self.semiring, self.m.mul(&other.m)?)
    }
}

impl fmt::Display for SemiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}

impl fmt::Debug for SemiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.semiring.name(), self.m)
    }
}

/// Matrices over a semiring; tensor is the direct sum.
#[derive(Debug, Clone, Copy)]
pub struct MatProp(pub Semiring);

impl Prop for MatProp {
    type Value = SemiMatrix;

    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn arity(&self, v: &SemiMatrix) -> (usize, usize) {
        (v.cols(), v.rows())
    }

    fn identity(&self, n: usize) -> SemiMatrix {
        SemiMatrix {
            semiring: self.0,
            m: ExactMatrix::identity(n),
        }
    }

    fn compose(&self, f: &SemiMatrix, g: &SemiMatrix) -> Result<SemiMatrix> {
        g.mul(f)
    }

    fn tensor(&self, f: &SemiMatrix, g: &SemiMatrix) -> SemiMatrix {
        SemiMatrix {
            semiring: self.0,
            m: f.m.direct_sum(&g.m),
        }
    }

    fn permutation(&self, p: &Permutation) -> SemiMatrix {
        let n = p.len();
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(p.apply(i), i, self.0.one());
        }
        SemiMatrix { semiring: self.0, m }
    }

    fn equal(&self, a: &SemiMatrix, b: &SemiMatrix) -> bool {
        a == b
    }

    fn from_box(&self, b: &BoxValue) -> Result<SemiMatrix> {
        match b {
            BoxValue::Perm(p) => Ok(self.permutation(p)),
            BoxValue::Mat(m) if m.semiring == self.0 => Ok(m.clone()),
            other => Err(Error::BackendMismatch {
                backend: self.name(),
                found: other.kind(),
            }),
        }
    }
}
