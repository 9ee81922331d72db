//! The box construction: one generator `□_f` per value f of a semantic
//! prop, its evaluation `unwrap`, the single-box normal form, and `unbox`
//! into the scalable language of a presentation (permutations, ℳ, ℬ, ℋ).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::linalg::{rat, ExactMatrix};
use crate::object::SizedObject;
use crate::perm::Permutation;
use crate::semantics::{FinFn, FunProp, Interpretation, MatProp, PermProp, Prop, SemiMatrix};
use crate::wire::{gather_all, gather_obj, split_all, split_obj, transposition_network};

/// A value of one of the boxable props.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BoxValue {
    Perm(Permutation),
    Fun(FinFn),
    Mat(SemiMatrix),
}

impl BoxValue {
    /// `(inputs, outputs)`.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            BoxValue::Perm(p) => (p.len(), p.len()),
            BoxValue::Fun(f) => (f.dom(), f.cod()),
            BoxValue::Mat(m) => (m.cols(), m.rows()),
        }
    }

    /// Backend tag: `perm`, `fun` or the semiring name.
    pub fn kind(&self) -> &'static str {
        match self {
            BoxValue::Perm(_) => "perm",
            BoxValue::Fun(_) => "fun",
            BoxValue::Mat(m) => m.semiring().name(),
        }
    }
}

impl fmt::Display for BoxValue {
    /// `perm[..]`, `fun<m>[..]` or `box<semiring>[matrix literal]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxValue::Perm(p) => write!(f, "perm{p}"),
            BoxValue::Fun(g) => write!(f, "{g}"),
            BoxValue::Mat(m) => write!(f, "box<{}>[{m}]", m.semiring().name()),
        }
    }
}

impl fmt::Debug for BoxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `□_f : ⟨n⟩ → ⟨m⟩`.
pub fn box_diagram(value: BoxValue) -> Diagram {
    Diagram::boxed(value)
}

/// `B(f) = Γ_n ; □_f ; Δ_m`, a box between simple wires.
pub fn framed_box(value: BoxValue) -> Diagram {
    let (n, m) = value.arity();
    Diagram::seq_trimmed(
        &SizedObject::simple(n),
        [gather_all(n), Diagram::boxed(value), split_all(m)],
    )
    .expect("frame types match")
}

fn unwrap_in<P: Prop>(prop: P, d: &Diagram, into: impl Fn(P::Value) -> BoxValue) -> Result<BoxValue> {
    Ok(into(Interpretation::new(prop).evaluate(d)?))
}

/// The functor O: evaluates a diagram of boxes and wires in the boxes'
/// prop. A diagram without boxes is read as a permutation.
pub fn unwrap(d: &Diagram) -> Result<BoxValue> {
    let mut first: Option<BoxValue> = None;
    let mut mismatch = None;
    d.visit(&mut |n| {
        if let Node::Box(b) = n.node() {
            match &first {
                None => first = Some(b.clone()),
                Some(f) if f.kind() != b.kind() && mismatch.is_none() => {
                    mismatch = Some(Error::BackendMismatch {
                        backend: f.kind(),
                        found: b.kind(),
                    })
                }
                _ => {}
            }
        }
    });
    if let Some(e) = mismatch {
        return Err(e);
    }
    match first {
        None | Some(BoxValue::Perm(_)) => unwrap_in(PermProp, d, BoxValue::Perm),
        Some(BoxValue::Fun(_)) => unwrap_in(FunProp, d, BoxValue::Fun),
        Some(BoxValue::Mat(m)) => unwrap_in(MatProp(m.semiring()), d, BoxValue::Mat),
    }
}

/// `Γ_cod ∘ B(unwrap(d)) ∘ Δ_dom`. Frames around a single cable that
/// already has the box's size are left out.
pub fn boxed_normal_form(d: &Diagram) -> Result<Diagram> {
    let value = unwrap(d)?;
    let (n, m) = value.arity();
    let mut parts = Vec::new();
    if d.dom() != &SizedObject::cable(n) {
        parts.push(split_obj(d.dom()));
        parts.push(gather_all(n));
    }
    parts.push(Diagram::boxed(value));
    if d.cod() != &SizedObject::cable(m) {
        parts.push(split_all(m));
        parts.push(gather_obj(d.cod()));
    }
    Diagram::seq_trimmed(d.dom(), parts)
}

/// The presentation a box value is translated into by [`unbox`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// 𝒫: permutations as symmetries.
    Perm,
    /// ℳ: functions as monoid trees.
    Fun,
    /// ℬ: ℕ-matrices as copy/add diagrams.
    Bialgebra,
    /// ℋ: ℤ-matrices, negative legs through the antipode.
    Hopf,
}

fn simple_gen(name: &str, n: usize, m: usize) -> Diagram {
    Diagram::generator(name, Vec::new(), SizedObject::simple(n), SizedObject::simple(m))
}

// Left-combed copy tree 1 → c legs (the counit when c = 0).
fn copy_tree(c: usize) -> Diagram {
    match c {
        0 => simple_gen("bcounit", 1, 0),
        1 => Diagram::simple_id(1),
        _ => copy_tree(c - 1)
            .then(&Diagram::layer(
                &SizedObject::empty(),
                simple_gen("bcomon", 1, 2),
                &SizedObject::simple(c - 2),
            ))
            .expect("tree widths match"),
    }
}

// Mirror of `copy_tree`: r legs → 1 (the unit when r = 0).
fn add_tree(r: usize) -> Diagram {
    match r {
        0 => simple_gen("unit", 0, 1),
        1 => Diagram::simple_id(1),
        _ => Diagram::layer(&SizedObject::empty(), simple_gen("mon", 2, 1), &SizedObject::simple(r - 2))
            .then(&add_tree(r - 1))
            .expect("tree widths match"),
    }
}

/// The arrow of an m × n matrix: input j is copied once per unit of
/// `A[i][j]`, the legs are routed and added into output i.
///
/// With [`Flavor::Hopf`] a negative entry contributes |A[i][j]| legs that
/// each pass through one `antipode`; with [`Flavor::Bialgebra`] negative
/// entries are rejected.
pub fn matrix_to_diagram(a: &ExactMatrix, flavor: Flavor) -> Result<Diagram> {
    let (m, n) = (a.rows(), a.cols());
    if !matches!(flavor, Flavor::Bialgebra | Flavor::Hopf) {
        return Err(Error::BackendMismatch {
            backend: "matrix arrow",
            found: if flavor == Flavor::Perm { "perm" } else { "fun" },
        });
    }
    // legs in column-major order: (row, col, negated)
    let mut legs = Vec::new();
    let mut per_col = alloc::vec![0usize; n];
    let mut per_row = alloc::vec![0usize; m];
    for j in 0..n {
        for i in 0..m {
            let x = a.get(i, j);
            if !x.is_integer() {
                return Err(Error::NotInSemiring(x.to_string(), "int"));
            }
            if x.is_negative() && flavor == Flavor::Bialgebra {
                return Err(Error::NegativeEntry(x.to_string()));
            }
            let k = x.abs().to_integer().to_usize().ok_or_else(|| Error::BadArity(x.to_string()))?;
            for _ in 0..k {
                legs.push((i, j, x.is_negative()));
            }
            per_col[j] += k;
            per_row[i] += k;
        }
    }
    let copies = Diagram::par_all(per_col.iter().map(|&c| copy_tree(c)));
    let has_negative = legs.iter().any(|l| l.2);
    let antipodes = if has_negative {
        Diagram::par_all(legs.iter().map(|&(_, _, neg)| {
            if neg {
                simple_gen("antipode", 1, 1)
            } else {
                Diagram::simple_id(1)
            }
        }))
    } else {
        Diagram::simple_id(legs.len())
    };
    let mut order: Vec<usize> = (0..legs.len()).collect();
    order.sort_by_key(|&t| (legs[t].0, legs[t].1, t));
    let mut images = alloc::vec![0; legs.len()];
    for (pos, &t) in order.iter().enumerate() {
        images[t] = pos;
    }
    let routing = transposition_network(&Permutation::new(images)?);
    let adds = Diagram::par_all(per_row.iter().map(|&r| add_tree(r)));
    let d = Diagram::seq_trimmed(&SizedObject::simple(n), [copies, antipodes, routing, adds])?;
    Ok(d.simplify())
}

/// A function `n → m` as a diagram of `mon` and `unit` only.
pub fn function_to_diagram(f: &FinFn) -> Diagram {
    let mut a = ExactMatrix::zeros(f.cod(), f.dom());
    for j in 0..f.dom() {
        a.set(f.apply(j), j, rat(1));
    }
    matrix_to_diagram(&a, Flavor::Bialgebra).expect("0/1 matrix")
}

/// The diagram presenting a single box value in the given flavor.
pub fn value_to_diagram(v: &BoxValue, flavor: Flavor) -> Result<Diagram> {
    match (flavor, v) {
        (_, BoxValue::Perm(p)) => Ok(transposition_network(p)),
        (Flavor::Fun, BoxValue::Fun(f)) => Ok(function_to_diagram(f)),
        (Flavor::Bialgebra | Flavor::Hopf, BoxValue::Mat(m)) => matrix_to_diagram(m.matrix(), flavor),
        (_, other) => Err(Error::BackendMismatch {
            backend: match flavor {
                Flavor::Perm => "perm",
                Flavor::Fun => "fun",
                Flavor::Bialgebra => "bialgebra",
                Flavor::Hopf => "hopf",
            },
            found: other.kind(),
        }),
    }
}

/// `Γ_cod ∘ value_to_diagram(unwrap(d)) ∘ Δ_dom`, a term of the scalable language.
pub fn unbox(d: &Diagram, flavor: Flavor) -> Result<Diagram> {
    let core = value_to_diagram(&unwrap(d)?, flavor)?;
    Diagram::seq_trimmed(d.dom(), [split_obj(d.dom()), core, gather_obj(d.cod())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obj;
    use crate::semantics::{catalog, Semiring};
    use crate::wire::regroup;

    fn nat(r: usize, c: usize, d: &[i64]) -> BoxValue {
        BoxValue::Mat(SemiMatrix::from_i64(Semiring::Nat, r, c, d).unwrap())
    }

    #[test]
    fn box_types() {
        let b = box_diagram(nat(1, 2, &[1, 1]));
        assert_eq!((b.dom(), b.cod()), (&obj![2], &obj![1]));
        let one = box_diagram(nat(1, 1, &[1]));
        assert_eq!((one.dom(), one.cod()), (&obj![1], &obj![1]));
    }

    #[test]
    fn swap_equation() {
        let swap = BoxValue::Perm(Permutation::new(alloc::vec![1, 0]).unwrap());
        let wired = Diagram::seq_all(
            &obj![2],
            [
                Diagram::div(1).unwrap(),
                Diagram::sym(obj![1], obj![1]),
                Diagram::gat(1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(unwrap(&wired).unwrap(), swap);
        assert_eq!(unwrap(&box_diagram(swap.clone())).unwrap(), swap);
    }

    #[test]
    fn comp_and_tens() {
        let f = nat(2, 1, &[1, 2]);
        let g = nat(1, 2, &[3, 1]);
        let fg = box_diagram(f.clone()).then(&box_diagram(g.clone())).unwrap();
        assert_eq!(unwrap(&fg).unwrap(), nat(1, 1, &[5]));
        let tensor = Diagram::seq_all(
            &obj![3],
            [
                regroup(&obj![3], &obj![1, 2]),
                Diagram::par(box_diagram(f), box_diagram(g)),
                regroup(&obj![2, 1], &obj![3]),
            ],
        )
        .unwrap();
        assert_eq!(unwrap(&tensor).unwrap(), nat(3, 3, &[1, 0, 0, 2, 0, 0, 0, 3, 1]));
    }

    #[test]
    fn mixed_backends_rejected() {
        let d = Diagram::par(
            box_diagram(nat(1, 1, &[1])),
            box_diagram(BoxValue::Fun(FinFn::new(alloc::vec![0], 1).unwrap())),
        );
        assert!(matches!(unwrap(&d), Err(Error::BackendMismatch { .. })));
    }

    #[test]
    fn normal_form_examples() {
        let b = box_diagram(nat(1, 2, &[1, 1]));
        assert_eq!(boxed_normal_form(&b).unwrap(), b);
        let d = box_diagram(nat(2, 1, &[1, 1])).then(&box_diagram(nat(1, 2, &[1, 1]))).unwrap();
        assert_eq!(boxed_normal_form(&d).unwrap(), box_diagram(nat(1, 1, &[2])));
        let with_sym = Diagram::seq(
            Diagram::sym(obj![1], obj![1]),
            Diagram::par(box_diagram(nat(1, 1, &[2])), box_diagram(nat(1, 1, &[3]))),
        )
        .unwrap();
        let nf = boxed_normal_form(&with_sym).unwrap();
        assert_eq!(nf.count(|n| matches!(n, Node::Box(_))), 1);
        assert_eq!(nf.count(|n| matches!(n, Node::Sym(..))), 0);
        assert_eq!(unwrap(&nf).unwrap(), nat(2, 2, &[0, 2, 3, 0]));
        assert_eq!(boxed_normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn arrow_examples() {
        let one = ExactMatrix::from_i64(1, 1, &[1]).unwrap();
        assert_eq!(matrix_to_diagram(&one, Flavor::Bialgebra).unwrap(), Diagram::simple_id(1));
        let add = ExactMatrix::from_i64(1, 2, &[1, 1]).unwrap();
        assert_eq!(matrix_to_diagram(&add, Flavor::Bialgebra).unwrap(), simple_gen("mon", 2, 1));
        let a = ExactMatrix::from_i64(2, 2, &[1, 0, 2, 1]).unwrap();
        let d = matrix_to_diagram(&a, Flavor::Bialgebra).unwrap();
        assert_eq!(d.count(|n| matches!(n, Node::Gen { name, .. } if name == "bcomon")), 2);
        assert_eq!(d.count(|n| matches!(n, Node::Gen { name, .. } if name == "mon")), 2);
        assert_eq!(catalog::nat().evaluate(&d).unwrap().matrix(), &a);
        let neg = ExactMatrix::from_i64(1, 1, &[-2]).unwrap();
        assert!(matches!(matrix_to_diagram(&neg, Flavor::Bialgebra), Err(Error::NegativeEntry(_))));
        let d = matrix_to_diagram(&neg, Flavor::Hopf).unwrap();
        assert_eq!(catalog::int().evaluate(&d).unwrap().matrix(), &neg);
    }

    #[test]
    fn function_arrows() {
        let id = FinFn::new(alloc::vec![0, 1], 2).unwrap();
        assert_eq!(function_to_diagram(&id), Diagram::simple_id(2));
        let merge = FinFn::new(alloc::vec![0, 0], 1).unwrap();
        assert_eq!(function_to_diagram(&merge), simple_gen("mon", 2, 1));
        let hit_first = FinFn::new(alloc::vec![0], 2).unwrap();
        let d = function_to_diagram(&hit_first);
        assert_eq!(catalog::fun().evaluate(&d).unwrap(), hit_first);
    }

    #[test]
    fn unbox_examples() {
        let one = unbox(&box_diagram(nat(1, 1, &[1])), Flavor::Bialgebra).unwrap();
        assert_eq!(catalog::nat().evaluate(&one).unwrap().to_string(), "1");
        let add = unbox(&box_diagram(nat(1, 2, &[1, 1])), Flavor::Bialgebra).unwrap();
        assert_eq!(catalog::nat().evaluate(&add).unwrap().to_string(), "1,1");
        let swap = BoxValue::Perm(Permutation::new(alloc::vec![1, 0]).unwrap());
        let d = unbox(&box_diagram(swap), Flavor::Perm).unwrap();
        assert_eq!(d.count(|n| matches!(n, Node::Sym(..))), 1);
        assert_eq!((d.dom(), d.cod()), (&obj![2], &obj![2]));
    }
}
