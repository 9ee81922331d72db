use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use super::{default_fold, Prop};
use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::wire::trace;

/// Entrywise tolerance for qubit comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// A linear map from n qubits to m qubits: a dense `2^m × 2^n` complex
/// matrix, row-major, first wire most significant.
#[derive(Clone, PartialEq)]
pub struct QubitMap {
    n: usize,
    m: usize,
    data: Vec<Complex64>,
}

impl QubitMap {
    pub fn new(n: usize, m: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != (1usize << m) * (1usize << n) {
            return Err(Error::BadArity(format!(
                "{} entries for a map from {n} to {m} qubits",
                data.len()
            )));
        }
        Ok(QubitMap { n, m, data })
    }

    /// From real entries, row-major.
    pub fn real(n: usize, m: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, m, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn inputs(&self) -> usize {
        self.n
    }

    pub fn outputs(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        1 << self.m
    }

    pub fn cols(&self) -> usize {
        1 << self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols() + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn scale(&self, s: Complex64) -> QubitMap {
        QubitMap {
            n: self.n,
            m: self.m,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn transpose(&self) -> QubitMap {
        let (r, c) = (self.rows(), self.cols());
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); r * c];
        for i in 0..r {
            for j in 0..c {
                data[j * r + i] = self.data[i * c + j];
            }
        }
        QubitMap {
            n: self.m,
            m: self.n,
            data,
        }
    }

    /// True iff every entry is within [`TOLERANCE`] of the other's.
    pub fn approx_eq(&self, other: &QubitMap) -> bool {
        self.n == other.n
            && self.m == other.m
            && self.data.iter().zip(&other.data).all(|(a, b)| {
                let d = a - b;
                d.re * d.re + d.im * d.im <= TOLERANCE * TOLERANCE
            })
    }
}

/// A real number with 12 significant digits, trailing zeros removed.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return String::from("0");
    }
    let mut y = if x < 0.0 { -x } else { x };
    let mut e: i32 = 0;
    while y >= 10.0 {
        y /= 10.0;
        e += 1;
    }
    while y < 1.0 {
        y *= 10.0;
        e -= 1;
    }
    let decimals = (11 - e).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = String::from("0");
    }
    s
}

fn fmt_complex(z: Complex64) -> String {
    let tiny = |x: f64| x * x <= TOLERANCE * TOLERANCE * 1e-6;
    match (tiny(z.re), tiny(z.im)) {
        (_, true) => fmt_real(z.re),
        (true, false) => format!("{}i", fmt_real(z.im)),
        (false, false) if z.im < 0.0 => format!("{}-{}i", fmt_real(z.re), fmt_real(-z.im)),
        (false, false) => format!("{}+{}i", fmt_real(z.re), fmt_real(z.im)),
    }
}

impl fmt::Display for QubitMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols() {
                if j > 0 {
                    f.write_str(",")?;
                }
                f.write_str(&fmt_complex(self.get(i, j)))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QubitMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

// Index of the basis state obtained by moving bit i of x (MSB first) to position p(i).
fn permute_bits(p: &Permutation, x: usize) -> usize {
    let k = p.len();
    let mut y = 0;
    for i in 0..k {
        if x >> (k - 1 - i) & 1 == 1 {
            y |= 1 << (k - 1 - p.apply(i));
        }
    }
    y
}

// Evaluation plan: wire subterms become one permutation, generators dense maps.
enum Plan {
    Wire(Permutation),
    Map(QubitMap),
    Seq(Vec<Plan>),
    Par(usize, usize, usize, usize, Vec<Plan>),
}

// `state` is indexed by (pre, x, post) with x over the `a` wires a plan acts on.
fn run(plan: &Plan, a: usize, state: Vec<Complex64>, pre: usize, post: usize) -> (usize, Vec<Complex64>) {
    let zero = Complex64::new(0.0, 0.0);
    match plan {
        Plan::Wire(p) => {
            if p.is_identity() {
                return (a, state);
            }
            let dim = 1usize << a;
            let mut out = alloc::vec![zero; state.len()];
            let table: Vec<usize> = (0..dim).map(|x| permute_bits(p, x)).collect();
            for q in 0..pre {
                for x in 0..dim {
                    let src = (q * dim + x) * post;
                    let dst = (q * dim + table[x]) * post;
                    out[dst..dst + post].copy_from_slice(&state[src..src + post]);
                }
            }
            (a, out)
        }
        Plan::Map(m) => {
            let (din, dout) = (m.cols(), m.rows());
            let mut out = alloc::vec![zero; pre * dout * post];
            for q in 0..pre {
                for x in 0..din {
                    let src = (q * din + x) * post;
                    let col = &state[src..src + post];
                    if col.iter().all(|c| c.re == 0.0 && c.im == 0.0) {
                        continue;
                    }
                    for y in 0..dout {
                        let coeff = m.get(y, x);
                        if coeff.re == 0.0 && coeff.im == 0.0 {
                            continue;
                        }
                        let dst = (q * dout + y) * post;
                        for t in 0..post {
                            out[dst + t] += coeff * col[t];
                        }
                    }
                }
            }
            (m.m, out)
        }
        Plan::Seq(parts) => {
            let mut width = a;
            let mut st = state;
            for p in parts {
                let (w, s) = run(p, width, st, pre, post);
                width = w;
                st = s;
            }
            (width, st)
        }
        Plan::Par(fin, fout, gin, gout, parts) => {
            let (_, st) = run(&parts[0], *fin, state, pre, (1 << gin) * post);
            let (_, st) = run(&parts[1], *gin, st, pre << fout, post);
            (fout + gout, st)
        }
    }
}

/// Qubit maps; tensor is the Kronecker product.
#[derive(Debug, Clone, Copy, Default)]
pub struct QubitProp;

impl QubitProp {
    fn plan(
        &self,
        d: &Diagram,
        leaf: &mut dyn FnMut(&Diagram) -> Result<QubitMap>,
    ) -> Result<Plan> {
        if d.is_wire_term() {
            return Ok(Plan::Wire(trace(d)?));
        }
        Ok(match d.node() {
            Node::Seq(f, g) => {
                let mut parts = Vec::new();
                for part in [f, g] {
                    match self.plan(part, leaf)? {
                        Plan::Seq(inner) => parts.extend(inner),
                        p => parts.push(p),
                    }
                }
                Plan::Seq(parts)
            }
            Node::Par(f, g) => Plan::Par(
                f.dom().global_size(),
                f.cod().global_size(),
                g.dom().global_size(),
                g.cod().global_size(),
                alloc::vec![self.plan(f, leaf)?, self.plan(g, leaf)?],
            ),
            _ => Plan::Map(leaf(d)?),
        })
    }
}

impl Prop for QubitProp {
    type Value = QubitMap;

    fn name(&self) -> &'static str {
        "qubit"
    }

    fn arity(&self, v: &QubitMap) -> (usize, usize) {
        (v.n, v.m)
    }

    fn identity(&self, n: usize) -> QubitMap {
        self.permutation(&Permutation::identity(n))
    }

    fn compose(&self, f: &QubitMap, g: &QubitMap) -> Result<QubitMap> {
        let (r, k, c) = (g.rows(), g.cols(), f.cols());
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); r * c];
        for i in 0..r {
            for t in 0..k {
                let a = g.data[i * k + t];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..c {
                    data[i * c + j] += a * f.data[t * c + j];
                }
            }
        }
        Ok(QubitMap { n: f.n, m: g.m, data })
    }

    fn tensor(&self, f: &QubitMap, g: &QubitMap) -> QubitMap {
        let (fr, fc, gr, gc) = (f.rows(), f.cols(), g.rows(), g.cols());
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); fr * gr * fc * gc];
        let cols = fc * gc;
        for i1 in 0..fr {
            for j1 in 0..fc {
                let a = f.data[i1 * fc + j1];
                for i2 in 0..gr {
                    for j2 in 0..gc {
                        data[(i1 * gr + i2) * cols + j1 * gc + j2] = a * g.data[i2 * gc + j2];
                    }
                }
            }
        }
        QubitMap {
            n: f.n + g.n,
            m: f.m + g.m,
            data,
        }
    }

    fn permutation(&self, p: &Permutation) -> QubitMap {
        let k = p.len();
        let dim = 1usize << k;
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); dim * dim];
        for x in 0..dim {
            data[permute_bits(p, x) * dim + x] = Complex64::new(1.0, 0.0);
        }
        QubitMap { n: k, m: k, data }
    }

    fn equal(&self, a: &QubitMap, b: &QubitMap) -> bool {
        a.approx_eq(b)
    }

    /// Applies the diagram to every basis state instead of multiplying
    /// dense layer matrices, so wide layers such as `id_k ⊗ g` stay cheap.
    fn fold(
        &self,
        d: &Diagram,
        leaf: &mut dyn FnMut(&Diagram) -> Result<QubitMap>,
    ) -> Result<QubitMap> {
        if d.is_wire_term() || matches!(d.node(), Node::Gen { .. } | Node::Box(_)) {
            return default_fold(self, d, leaf);
        }
        let plan = self.plan(d, leaf)?;
        let n = d.dom().global_size();
        let dim = 1usize << n;
        let mut state = alloc::vec![Complex64::new(0.0, 0.0); dim * dim];
        for x in 0..dim {
            state[x * dim + x] = Complex64::new(1.0, 0.0);
        }
        let (m, data) = run(&plan, n, state, 1, dim);
        QubitMap::new(n, m, data)
    }
}
