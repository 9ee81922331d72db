//! Objects of an ℕ₀-colored prop: finite lists of positive wire sizes.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A list of cable sizes. The empty list is the monoidal unit `0`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizedObject(Vec<usize>);

impl SizedObject {
    /// Builds an object, rejecting zero-sized cables.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::ZeroSize);
        }
        Ok(SizedObject(sizes))
    }

    pub fn empty() -> Self {
        SizedObject(Vec::new())
    }

    /// `k·1`: k simple wires.
    pub fn simple(k: usize) -> Self {
        SizedObject(alloc::vec![1; k])
    }

    /// `1·n`: one cable of size n, or the unit when n = 0.
    pub fn cable(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            SizedObject(alloc::vec![n])
        }
    }

    /// `k·n`: k cables of size n.
    pub fn repeated(k: usize, n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            SizedObject(alloc::vec![n; k])
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of cables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total strand count.
    pub fn global_size(&self) -> usize {
        self.0.iter().sum()
    }

    /// True when every cable is a simple wire.
    pub fn is_simple(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }

    pub fn concat(&self, other: &SizedObject) -> SizedObject {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SizedObject(v)
    }

    /// Cables `range` as a new object.
    pub fn slice(&self, start: usize, end: usize) -> SizedObject {
        SizedObject(self.0[start..end].to_vec())
    }

    /// Strand offset of cable `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.0[..i].iter().sum()
    }
}

/// Global size of an object: the sum of its cable sizes.
pub fn global_size(a: &SizedObject) -> usize {
    a.global_size()
}

impl fmt::Display for SizedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("⟩")
    }
}

impl fmt::Debug for SizedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<&[usize]> for SizedObject {
    type Error = Error;

    fn try_from(value: &[usize]) -> Result<Self> {
        SizedObject::new(value.to_vec())
    }
}

/// Shorthand for literal objects in tests and builders. Panics on a zero entry.
#[macro_export]
macro_rules! obj {
    () => { $crate::object::SizedObject::empty() };
    ($($s:expr),+ $(,)?) => {
        $crate::object::SizedObject::new($crate::__alloc_vec![$($s),+]).expect("positive sizes")
    };
}
