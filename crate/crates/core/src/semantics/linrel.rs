use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{Prop, Semiring};
use crate::boxes::BoxValue;
use crate::error::{Error, Result};
use crate::linalg::{subspace_equal, ExactMatrix, Rational, Subspace};
use crate::perm::Permutation;

/// A linear relation `n → m`: a subspace of ℚ^(n+m), inputs first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearRelation {
    n: usize,
    m: usize,
    space: Subspace,
}

impl LinearRelation {
    pub fn new(n: usize, m: usize, space: Subspace) -> Result<Self> {
        if space.ambient() != n + m {
            return Err(Error::DimensionMismatch(format!(
                "relation {n} -> {m} in a space of dimension {}",
                space.ambient()
            )));
        }
        Ok(LinearRelation { n, m, space })
    }

    /// `{(x, A·x)}` for an `m × n` matrix A.
    pub fn graph(a: &ExactMatrix) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let rows = (0..n)
            .map(|j| {
                let mut v = alloc::vec![Rational::zero(); n + m];
                v[j] = Rational::one();
                for i in 0..m {
                    v[n + i] = a.get(i, j).clone();
                }
                v
            })
            .collect();
        LinearRelation {
            n,
            m,
            space: Subspace::spanned_by(n + m, rows).expect("rows of length n+m"),
        }
    }

    pub fn inputs(&self) -> usize {
        self.n
    }

    pub fn outputs(&self) -> usize {
        self.m
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, x: &[Rational], y: &[Rational]) -> Result<bool> {
        let mut v = x.to_vec();
        v.extend_from_slice(y);
        self.space.contains(&v)
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.n, self.m, self.space)
    }
}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn columns(m: &ExactMatrix, start: usize, end: usize) -> ExactMatrix {
    let rows = (0..m.rows()).map(|i| m.row(i)[start..end].to_vec()).collect();
    ExactMatrix::from_rows(end - start, rows).expect("uniform rows")
}

/// Linear relations over ℚ; composition is relational, tensor the direct sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct LinRelProp;

impl Prop for LinRelProp {
    type Value = LinearRelation;

    fn name(&self) -> &'static str {
        "linrel"
    }

    fn arity(&self, v: &LinearRelation) -> (usize, usize) {
        (v.n, v.m)
    }

    fn identity(&self, n: usize) -> LinearRelation {
        LinearRelation::graph(&ExactMatrix::identity(n))
    }

    /// `{(x, z) : ∃y. (x, y) ∈ f, (y, z) ∈ g}`: combinations `a·F + b·G`
    /// whose middle parts cancel, projected to the outer coordinates.
    fn compose(&self, f: &LinearRelation, g: &LinearRelation) -> Result<LinearRelation> {
        let (n, m, p) = (f.n, f.m, g.m);
        let fb = f.space.basis();
        let gb = g.space.basis();
        let fy = columns(fb, n, n + m);
        let gy = columns(gb, 0, m);
        let constraint = fy.vstack(&gy.neg())?.transpose();
        let kernel = constraint.kernel_basis();
        let kf = fb.rows();
        let mut rows = Vec::with_capacity(kernel.dim());
        for r in 0..kernel.dim() {
            let coeffs = kernel.basis().row(r);
            let mut v = alloc::vec![Rational::zero(); n + p];
            for (i, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if i < kf {
                    for j in 0..n {
                        v[j] += c * fb.get(i, j);
                    }
                } else {
                    for j in 0..p {
                        v[n + j] += c * gb.get(i - kf, m + j);
                    }
                }
            }
            rows.push(v);
        }
        LinearRelation::new(n, p, Subspace::spanned_by(n + p, rows)?)
    }

    fn tensor(&self, f: &LinearRelation, g: &LinearRelation) -> LinearRelation {
        let (n1, m1, n2, m2) = (f.n, f.m, g.n, g.m);
        let d = n1 + n2 + m1 + m2;
        let mut rows = Vec::new();
        for i in 0..f.space.dim() {
            let r = f.space.basis().row(i);
            let mut v = alloc::vec![Rational::zero(); d];
            v[..n1].clone_from_slice(&r[..n1]);
            v[n1 + n2..n1 + n2 + m1].clone_from_slice(&r[n1..]);
            rows.push(v);
        }
        for i in 0..g.space.dim() {
            let r = g.space.basis().row(i);
            let mut v = alloc::vec![Rational::zero(); d];
            v[n1..n1 + n2].clone_from_slice(&r[..n2]);
            v[n1 + n2 + m1..].clone_from_slice(&r[n2..]);
            rows.push(v);
        }
        LinearRelation {
            n: n1 + n2,
            m: m1 + m2,
            space: Subspace::spanned_by(d, rows).expect("rows of the ambient length"),
        }
    }

    fn permutation(&self, p: &Permutation) -> LinearRelation {
        let n = p.len();
        let mut a = ExactMatrix::zeros(n, n);
        for i in 0..n {
            a.set(p.apply(i), i, Rational::one());
        }
        LinearRelation::graph(&a)
    }

    fn equal(&self, a: &LinearRelation, b: &LinearRelation) -> bool {
        a == b
    }

    /// Permutation boxes, and matrix boxes over ℕ, ℤ or ℚ read as graphs.
    fn from_box(&self, b: &BoxValue) -> Result<LinearRelation> {
        match b {
            BoxValue::Perm(p) => Ok(self.permutation(p)),
            BoxValue::Mat(m) if matches!(m.semiring(), Semiring::Nat | Semiring::Int | Semiring::Rational) => {
                Ok(LinearRelation::graph(m.matrix()))
            }
            other => Err(Error::BackendMismatch {
                backend: "linrel",
                found: other.kind(),
            }),
        }
    }
}

/// The relation `Im(A; B)`, for A: n × k and B: m × k.
pub fn relation_from_span(a: &ExactMatrix, b: &ExactMatrix) -> Result<LinearRelation> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "span legs with {} and {} columns",
            a.cols(),
            b.cols()
        )));
    }
    LinearRelation::new(a.rows(), b.rows(), a.vstack(b)?.image_basis())
}

/// The relation `Ker[C | −D]`, for C: r × n and D: r × m.
pub fn relation_from_cospan(c: &ExactMatrix, d: &ExactMatrix) -> Result<LinearRelation> {
    if c.rows() != d.rows() {
        return Err(Error::DimensionMismatch(format!(
            "cospan legs with {} and {} rows",
            c.rows(),
            d.rows()
        )));
    }
    LinearRelation::new(c.cols(), d.cols(), c.hstack(&d.neg())?.kernel_basis())
}

/// `Im(C; D) = Ker[A | −B]`: the span of (C, D) equals the cospan of (A, B).
pub fn span_cospan_condition(
    a: &ExactMatrix,
    b: &ExactMatrix,
    c: &ExactMatrix,
    d: &ExactMatrix,
) -> Result<bool> {
    let span = relation_from_span(c, d)?;
    let cospan = relation_from_cospan(a, b)?;
    if (span.n, span.m) != (cospan.n, cospan.m) {
        return Err(Error::DimensionMismatch(format!(
            "span {} -> {} against cospan {} -> {}",
            span.n, span.m, cospan.n, cospan.m
        )));
    }
    subspace_equal(&span.space, &cospan.space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn m(r: usize, c: usize, d: &[i64]) -> ExactMatrix {
        ExactMatrix::from_i64(r, c, d).unwrap()
    }

    fn rel(n: usize, k: usize, vs: &[&[i64]]) -> LinearRelation {
        let rows = vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
        LinearRelation::new(n, k, Subspace::spanned_by(n + k, rows).unwrap()).unwrap()
    }

    #[test]
    fn symmetry_relation() {
        let s = LinRelProp.symmetry(1, 1);
        assert_eq!(s, rel(2, 2, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]));
    }

    #[test]
    fn span_and_cospan_examples() {
        let one = m(1, 1, &[1]);
        assert_eq!(relation_from_span(&one, &one).unwrap(), rel(1, 1, &[&[1, 1]]));
        assert_eq!(relation_from_cospan(&one, &one).unwrap(), rel(1, 1, &[&[1, 1]]));
        let s = relation_from_span(&m(2, 1, &[1, 0]), &m(2, 1, &[0, 1])).unwrap();
        assert_eq!(s, rel(2, 2, &[&[1, 0, 0, 1]]));
        assert!(span_cospan_condition(&one, &one, &one, &one).unwrap());
        let zero = m(1, 1, &[0]);
        // Im(0; 1) = {0}×ℚ and Ker[1 | 0] = {0}×ℚ
        assert!(span_cospan_condition(&one, &zero, &zero, &one).unwrap());
    }

    #[test]
    fn graph_composition() {
        let a = m(2, 1, &[1, 2]);
        let b = m(1, 2, &[3, -1]);
        let composed = LinRelProp
            .compose(&LinearRelation::graph(&a), &LinearRelation::graph(&b))
            .unwrap();
        assert_eq!(composed, LinearRelation::graph(&b.mul(&a).unwrap()));
    }

    #[test]
    fn scalar_relations() {
        let unit = rel(0, 1, &[]);
        let counit = rel(1, 0, &[]);
        let scalar = LinRelProp.compose(&unit, &counit).unwrap();
        assert_eq!(scalar, LinRelProp.identity(0));
        assert_eq!(scalar.space().dim(), 0);
    }
}
