//! Strand permutations. `images[i]` is the output position of input strand i.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadArity(alloc::format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Transposition of strands `i` and `i+1` on `n` strands.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// Block rotation `a + b → b + a` on strand counts.
    pub fn block_swap(a: usize, b: usize) -> Self {
        Permutation {
            images: (0..a).map(|i| b + i).chain((0..b).map(|i| i)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), next.len());
        Permutation {
            images: self.images.iter().map(|&i| next.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint union, `self` on the first strands.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        Permutation {
            images: self
                .images
                .iter()
                .copied()
                .chain(other.images.iter().map(|&j| j + n))
                .collect(),
        }
    }

    /// Positions `j` of adjacent transpositions `(j, j+1)` whose composite,
    /// applied left to right, is `self`.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        let mut target = self.images.clone();
        let mut out = Vec::new();
        let n = target.len();
        loop {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1) {
                if target[j] > target[j + 1] {
                    target.swap(j, j + 1);
                    out.push(j);
                    swapped = true;
                }
            }
            if !swapped {
                return out;
            }
        }
    }

    /// Permutes a slice: `out[images[i]] = items[i]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = alloc::vec![None; items.len()];
        for (i, x) in items.iter().enumerate() {
            out[self.images[i]] = Some(x.clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, j) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
