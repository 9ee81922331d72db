//! Forward and backward matrix arrows in ℐℋ, cups and caps, spans and
//! cospans of arrows, and the column collapse of ZW arrows.

use alloc::vec::Vec;

use super::{SemiMatrix, Semiring};
use crate::boxes::{matrix_to_diagram, Flavor};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::linalg::{rat, ExactMatrix};
use crate::object::SizedObject;
use crate::perm::Permutation;
use crate::wire::{inverse_wiring, transposition_network};

fn gen(name: &str, n: usize, m: usize) -> Diagram {
    Diagram::generator(name, Vec::new(), SizedObject::simple(n), SizedObject::simple(m))
}

/// `bunit ; bcomon : 0 → 2`.
pub fn cup() -> Diagram {
    gen("bunit", 0, 1).then(&gen("bcomon", 1, 2)).expect("typed")
}

/// `bmon ; bcounit : 2 → 0`.
pub fn cap() -> Diagram {
    gen("bmon", 2, 1).then(&gen("bcounit", 1, 0)).expect("typed")
}

/// The forward arrow of an m × n matrix: a diagram n → m. Negative entries
/// go through the antipode.
pub fn forward_arrow(a: &ExactMatrix) -> Result<Diagram> {
    matrix_to_diagram(a, Flavor::Hopf)
}

// (a1, b1, a2, b2, ...) → (a1..ak, b1..bk)
fn unzip(k: usize) -> Diagram {
    let images = (0..2 * k).map(|t| if t % 2 == 0 { t / 2 } else { k + t / 2 }).collect();
    transposition_network(&Permutation::new(images).expect("bijection"))
}

/// The backward arrow of an m × n matrix A: a diagram m → n, the forward
/// arrow bent around by n cups and m caps.
pub fn backward_arrow(a: &ExactMatrix) -> Result<Diagram> {
    let (m, n) = (a.rows(), a.cols());
    let cups = Diagram::par_all((0..n).map(|_| cup()));
    let opened = Diagram::seq_trimmed(&SizedObject::empty(), [cups, unzip(n)])?;
    let forward = forward_arrow(a)?;
    let caps = Diagram::par_all((0..m).map(|_| cap()));
    let closing = Diagram::seq_trimmed(&SizedObject::simple(2 * m), [inverse_wiring(&unzip(m))?, caps])?;
    Diagram::seq_trimmed(
        &SizedObject::simple(m),
        [
            Diagram::layer(&SizedObject::simple(m), opened, &SizedObject::empty()),
            Diagram::layer(&SizedObject::simple(m), forward, &SizedObject::simple(n)),
            Diagram::layer(&SizedObject::empty(), closing, &SizedObject::simple(n)),
        ],
    )
}

/// `backward(C) ; forward(D)` for C: n × k and D: m × k, a diagram n → m.
pub fn span_diagram(c: &ExactMatrix, d: &ExactMatrix) -> Result<Diagram> {
    if c.cols() != d.cols() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "span legs with {} and {} columns",
            c.cols(),
            d.cols()
        )));
    }
    backward_arrow(c)?.then(&forward_arrow(d)?)
}

/// `forward(A) ; backward(B)` for A: r × n and B: r × m, a diagram n → m.
pub fn cospan_diagram(a: &ExactMatrix, b: &ExactMatrix) -> Result<Diagram> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "cospan legs with {} and {} rows",
            a.rows(),
            b.rows()
        )));
    }
    forward_arrow(a)?.then(&backward_arrow(b)?)
}

/// Replaces every column containing a 2 by a column of 2s. ZW arrows of
/// a matrix and of its canonical form have equal values.
pub fn zw_canonicalize(a: &SemiMatrix) -> Result<SemiMatrix> {
    let a = SemiMatrix::new(Semiring::Sat2, a.matrix().clone())?;
    let mut out = a.matrix().clone();
    for j in 0..a.cols() {
        if (0..a.rows()).any(|i| a.get(i, j) == &rat(2)) {
            for i in 0..a.rows() {
                out.set(i, j, rat(2));
            }
        }
    }
    SemiMatrix::new(Semiring::Sat2, out)
}
