//! The wire calculus: dividers, gatherers, their n-ary composites, and the
//! normal form `Γ_cod ∘ σ ∘ Δ_dom` of a wire term.
//!
//! A wire term is normalized by strand tracing: strands of the domain are
//! numbered left to right and pushed through every node. Dividers and
//! gatherers keep strand order, `Sym(a, b)` rotates its two blocks. The
//! resulting permutation is a complete invariant of the term modulo the
//! expansion (`γ_n ∘ δ_n = id`) and elimination (`δ_n ∘ γ_n = id`) laws.

use alloc::vec::Vec;

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::object::SizedObject;
use crate::perm::Permutation;

/// `δ_n`, with the convention `δ_0 = id_1`.
pub fn divider(n: usize) -> Diagram {
    if n == 0 {
        Diagram::simple_id(1)
    } else {
        Diagram::div(n).expect("n > 0")
    }
}

/// `γ_n`, with the convention `γ_0 = id_1`.
pub fn gatherer(n: usize) -> Diagram {
    if n == 0 {
        Diagram::simple_id(1)
    } else {
        Diagram::gat(n).expect("n > 0")
    }
}

/// `Δ_n : ⟨n⟩ → n·1`, a chain of n−1 dividers of decreasing size.
pub fn split_all(n: usize) -> Diagram {
    match n {
        0 => Diagram::id(SizedObject::empty()),
        1 => Diagram::simple_id(1),
        2 => divider(1),
        _ => Diagram::seq(
            divider(n - 1),
            Diagram::par(Diagram::simple_id(1), split_all(n - 1)),
        )
        .expect("δ_{n-1} feeds id_1 ⊠ Δ_{n-1}"),
    }
}

/// `Γ_m : m·1 → ⟨m⟩`, the mirror image of [`split_all`].
pub fn gather_all(m: usize) -> Diagram {
    match m {
        0 => Diagram::id(SizedObject::empty()),
        1 => Diagram::simple_id(1),
        2 => gatherer(1),
        _ => Diagram::seq(
            Diagram::par(Diagram::simple_id(1), gather_all(m - 1)),
            gatherer(m - 1),
        )
        .expect("id_1 ⊠ Γ_{m-1} feeds γ_{m-1}"),
    }
}

fn per_cable(a: &SizedObject, each: fn(usize) -> Diagram) -> Diagram {
    let mut parts = Vec::new();
    let mut simple_run = 0usize;
    for &s in a.sizes() {
        if s == 1 {
            simple_run += 1;
            continue;
        }
        if simple_run > 0 {
            parts.push(Diagram::simple_id(simple_run));
            simple_run = 0;
        }
        parts.push(each(s));
    }
    if simple_run > 0 {
        parts.push(Diagram::simple_id(simple_run));
    }
    Diagram::par_all(parts)
}

/// `Δ_a`: splits every cable of `a` into simple wires. Runs of simple
/// cables are kept as a single identity.
pub fn split_obj(a: &SizedObject) -> Diagram {
    per_cable(a, split_all)
}

/// `Γ_b`: gathers simple wires into the cables of `b`.
pub fn gather_obj(b: &SizedObject) -> Diagram {
    per_cable(b, gather_all)
}

/// The strand permutation of a wire term.
pub fn trace(d: &Diagram) -> Result<Permutation> {
    match d.node() {
        Node::Id(a) => Ok(Permutation::identity(a.global_size())),
        Node::Div(n) | Node::Gat(n) => Ok(Permutation::identity(n + 1)),
        Node::Sym(a, b) => Ok(Permutation::block_swap(a.global_size(), b.global_size())),
        Node::Seq(f, g) => Ok(trace(f)?.then(&trace(g)?)),
        Node::Par(f, g) => Ok(trace(f)?.tensor(&trace(g)?)),
        Node::Gen { .. } => Err(Error::NotAWireTerm("generator")),
        Node::Box(_) => Err(Error::NotAWireTerm("box")),
    }
}

/// `(dom, σ, cod)` with `d ≡ Γ_cod ∘ σ ∘ Δ_dom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringNormalForm {
    pub dom: SizedObject,
    pub perm: Permutation,
    pub cod: SizedObject,
}

impl WiringNormalForm {
    pub fn new(dom: SizedObject, perm: Permutation, cod: SizedObject) -> Result<Self> {
        if dom.global_size() != perm.len() || cod.global_size() != perm.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{dom} -> {cod} with a permutation of {}",
                perm.len()
            )));
        }
        Ok(WiringNormalForm { dom, perm, cod })
    }
}

pub fn normalize_wiring(d: &Diagram) -> Result<WiringNormalForm> {
    let perm = trace(d)?;
    Ok(WiringNormalForm {
        dom: d.dom().clone(),
        perm,
        cod: d.cod().clone(),
    })
}

/// Adjacent transpositions on `n` simple wires realizing `perm`.
pub fn transposition_network(perm: &Permutation) -> Diagram {
    let n = perm.len();
    let layers = perm.adjacent_transpositions().into_iter().map(|j| {
        Diagram::layer(
            &SizedObject::simple(j),
            Diagram::sym(SizedObject::simple(1), SizedObject::simple(1)),
            &SizedObject::simple(n - j - 2),
        )
    });
    Diagram::seq_all(&SizedObject::simple(n), layers).expect("layers on n simple wires")
}

/// `Γ_cod ∘ σ ∘ Δ_dom`, leaving out identity pieces.
pub fn wiring_from_normal_form(nf: &WiringNormalForm) -> Diagram {
    Diagram::seq_trimmed(
        &nf.dom,
        [
            split_obj(&nf.dom),
            transposition_network(&nf.perm),
            gather_obj(&nf.cod),
        ],
    )
    .expect("normal form pieces compose")
}

/// The strand-order-preserving wire term `a → b` (equal global sizes).
pub fn regroup(a: &SizedObject, b: &SizedObject) -> Diagram {
    assert_eq!(a.global_size(), b.global_size(), "regrouping changes no strand count");
    wiring_from_normal_form(&WiringNormalForm {
        dom: a.clone(),
        perm: Permutation::identity(a.global_size()),
        cod: b.clone(),
    })
}

/// A wire term realizing the inverse of `d`.
pub fn inverse_wiring(d: &Diagram) -> Result<Diagram> {
    let nf = normalize_wiring(d)?;
    Ok(wiring_from_normal_form(&WiringNormalForm {
        dom: nf.cod,
        perm: nf.perm.inverse(),
        cod: nf.dom,
    }))
}

/// Equality of wire terms: same boundaries and same strand permutation.
pub fn wire_equal(d1: &Diagram, d2: &Diagram) -> Result<bool> {
    let a = normalize_wiring(d1)?;
    let b = normalize_wiring(d2)?;
    Ok(a == b)
}

// Leaves of a tensor tree, left to right.
fn par_leaves(d: &Diagram, out: &mut Vec<Diagram>) {
    match d.node() {
        Node::Par(f, g) => {
            par_leaves(f, out);
            par_leaves(g, out);
        }
        _ => out.push(d.clone()),
    }
}

// Rebuilds a tensor tree with the same shape, replacing its leaves in order.
fn rebuild_par(d: &Diagram, leaves: &mut impl Iterator<Item = Diagram>) -> Diagram {
    match d.node() {
        Node::Par(f, g) => {
            let f = rebuild_par(f, leaves);
            let g = rebuild_par(g, leaves);
            Diagram::par(f, g)
        }
        _ => leaves.next().expect("leaf count preserved"),
    }
}

fn last_atom(d: &Diagram) -> &Diagram {
    match d.node() {
        Node::Seq(_, g) => last_atom(g),
        _ => d,
    }
}

fn first_atom(d: &Diagram) -> &Diagram {
    match d.node() {
        Node::Seq(f, _) => first_atom(f),
        _ => d,
    }
}

fn replace_last(d: &Diagram, new: Diagram) -> Result<Diagram> {
    match d.node() {
        Node::Seq(f, g) => Diagram::seq(f.clone(), replace_last(g, new)?),
        _ => Ok(new),
    }
}

fn replace_first(d: &Diagram, new: Diagram) -> Result<Diagram> {
    match d.node() {
        Node::Seq(f, g) => Diagram::seq(replace_first(f, new)?, g.clone()),
        _ => Ok(new),
    }
}

/// Cable offsets of tensor leaves, measured on the given side.
fn offsets(leaves: &[Diagram], cod_side: bool) -> Vec<usize> {
    let mut acc = 0;
    leaves
        .iter()
        .map(|l| {
            let o = acc;
            acc += if cod_side { l.cod().len() } else { l.dom().len() };
            o
        })
        .collect()
}

/// Contractions at a sequential boundary: a divider whose two outputs feed a
/// gatherer of the same size (expansion law), or a gatherer whose output
/// feeds a divider of the same size (elimination law).
fn contractions(f: &Diagram, g: &Diagram) -> Vec<Diagram> {
    let mut out = Vec::new();
    let (fl, gf) = (last_atom(f), first_atom(g));
    let mut fleaves = Vec::new();
    let mut gleaves = Vec::new();
    par_leaves(fl, &mut fleaves);
    par_leaves(gf, &mut gleaves);
    let fo = offsets(&fleaves, true);
    let go = offsets(&gleaves, false);
    for (i, fleaf) in fleaves.iter().enumerate() {
        let Some(j) = go.iter().position(|&o| o == fo[i]) else {
            continue;
        };
        let gleaf = &gleaves[j];
        let merged = match (fleaf.node(), gleaf.node()) {
            (Node::Div(n), Node::Gat(m)) if n == m => SizedObject::cable(n + 1),
            (Node::Gat(n), Node::Div(m)) if n == m => {
                SizedObject::new(alloc::vec![1, *n]).expect("positive")
            }
            _ => continue,
        };
        let mut fl_new = fleaves.clone();
        fl_new[i] = Diagram::id(merged.clone());
        let mut gl_new = gleaves.clone();
        gl_new[j] = Diagram::id(merged);
        let new_fl = rebuild_par(fl, &mut fl_new.into_iter());
        let new_gf = rebuild_par(gf, &mut gl_new.into_iter());
        if let (Ok(f2), Ok(g2)) = (replace_last(f, new_fl), replace_first(g, new_gf)) {
            if let Ok(d) = Diagram::seq(f2, g2) {
                out.push(d);
            }
        }
    }
    out
}

/// Expansions of an identity node: one cable of size s ≥ 2 becomes
/// `δ_{s-1} ; γ_{s-1}`, an adjacent pair `⟨1,n⟩` becomes `γ_n ; δ_n`.
fn expansions(a: &SizedObject) -> Vec<Diagram> {
    let mut out = Vec::new();
    let sizes = a.sizes();
    for (c, &s) in sizes.iter().enumerate() {
        if s >= 2 {
            let mid = Diagram::seq(divider(s - 1), gatherer(s - 1)).expect("δ;γ");
            out.push(Diagram::layer(&a.slice(0, c), mid, &a.slice(c + 1, sizes.len())));
        }
        if s == 1 && c + 1 < sizes.len() {
            let n = sizes[c + 1];
            let mid = Diagram::seq(gatherer(n), divider(n)).expect("γ;δ");
            out.push(Diagram::layer(&a.slice(0, c), mid, &a.slice(c + 2, sizes.len())));
        }
    }
    out
}

/// Every diagram obtained from `d` by one application of an expansion or
/// elimination law, in either direction, at any position.
pub fn rewrite_steps(d: &Diagram) -> Vec<Diagram> {
    let mut out = Vec::new();
    match d.node() {
        Node::Id(a) => out.extend(expansions(a)),
        Node::Seq(f, g) => {
            out.extend(contractions(f, g));
            for f2 in rewrite_steps(f) {
                out.push(Diagram::seq(f2, g.clone()).expect("type preserved"));
            }
            for g2 in rewrite_steps(g) {
                out.push(Diagram::seq(f.clone(), g2).expect("type preserved"));
            }
        }
        Node::Par(f, g) => {
            for f2 in rewrite_steps(f) {
                out.push(Diagram::par(f2, g.clone()));
            }
            for g2 in rewrite_steps(g) {
                out.push(Diagram::par(f.clone(), g2));
            }
        }
        _ => {}
    }
    out
}
