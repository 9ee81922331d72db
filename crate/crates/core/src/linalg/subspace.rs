use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::fmt_vector;
use super::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// A subspace of ℚ^d kept as its canonical reduced echelon basis, so two
/// subspaces are equal iff their representations are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
}

impl Subspace {
    /// Row space of `m`.
    pub fn from_rows(m: &ExactMatrix) -> Self {
        let (r, _, rank) = m.rref();
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: ExactMatrix::from_rows(m.cols(), rows).expect("rows of equal length"),
        }
    }

    pub fn spanned_by(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        Ok(Self::from_rows(&ExactMatrix::from_rows(ambient, vectors)?))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis vectors as rows, in reduced echelon form.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of dimension {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient {}",
                v.len(),
                self.ambient
            )));
        }
        let row = ExactMatrix::from_rows(self.ambient, alloc::vec![v.to_vec()])?;
        Ok(self.basis.vstack(&row)?.rank() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.sum(self)?.dim() == other.dim())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::from_rows(&self.basis.vstack(&other.basis)?))
    }

    /// `{y : ⟨x, y⟩ = 0 for all x in self}`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel_basis()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }
}

/// Equality of canonical bases, with a dimension check.
pub fn subspace_equal(u: &Subspace, v: &Subspace) -> Result<bool> {
    u.check(v)?;
    Ok(u == v)
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for i in 0..self.dim() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&fmt_vector(self.basis.row(i)))?;
        }
        write!(f, "}} in Q^{}", self.ambient)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
