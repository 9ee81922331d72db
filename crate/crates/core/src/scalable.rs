//! The scalable construction 𝒮L over a monochromatic language L: L on
//! cables of any size plus the wire calculus.
//!
//! Every term factors as `Γ_cod ∘ core ∘ Δ_dom` where the core is a term of
//! L on simple wires, obtained by the wire stripper. Multiplexing `g_k`
//! runs k transversal copies of g, copy j acting on strand j of every
//! cable (cable-major strand order).

use alloc::vec::Vec;

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::language::{Equation, GraphicalLanguage};
use crate::languages::wire_equations;
use crate::object::SizedObject;
use crate::param::Param;
use crate::semantics::{Interpretation, Prop};
use crate::signature::{typecheck, Discipline, GeneratorDecl, Signature};
use crate::wire::{gather_obj, split_obj};

/// 𝒮L for a monochromatic base language L.
#[derive(Debug, Clone)]
pub struct ScalableLanguage {
    base: GraphicalLanguage,
    sig: Signature,
}

impl ScalableLanguage {
    pub fn new(base: GraphicalLanguage) -> Result<Self> {
        if base.signature().discipline() != Discipline::Monochromatic {
            return Err(Error::DisciplineMismatch);
        }
        let mut sig = Signature::new(Discipline::Sized);
        for g in base.signature().generators() {
            sig.declare(g.clone())?;
        }
        Ok(ScalableLanguage { base, sig })
    }

    pub fn base(&self) -> &GraphicalLanguage {
        &self.base
    }

    /// The base generators re-declared in the sized discipline.
    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// `(dom, cod)` of a term of 𝒮L; box nodes are rejected.
    pub fn typecheck(&self, d: &Diagram) -> Result<(SizedObject, SizedObject)> {
        if d.count(|n| matches!(n, Node::Box(_))) > 0 {
            return Err(Error::BoxInScalableTerm);
        }
        typecheck(d, &self.sig)
    }

    /// The base equations together with the wire laws up to cable size `max`.
    pub fn language(&self, max: usize) -> GraphicalLanguage {
        let mut equations: Vec<Equation> = self.base.equations().to_vec();
        equations.extend(wire_equations(max));
        GraphicalLanguage::new(self.sig.clone(), equations).expect("base and wire equations typecheck")
    }
}

// Result of stripping, and whether it is an identity produced by erasing wiring.
fn strip_inner(d: &Diagram) -> Result<(Diagram, bool)> {
    let collapsed = |a: &SizedObject| (Diagram::simple_id(a.global_size()), true);
    Ok(match d.node() {
        Node::Gen { .. } => {
            if !d.is_simple_typed() {
                return Err(Error::NotMonochromaticDiagram(d.dom().clone(), d.cod().clone()));
            }
            (d.clone(), false)
        }
        Node::Box(_) => return Err(Error::BoxInScalableTerm),
        Node::Div(_) | Node::Gat(_) => collapsed(d.dom()),
        Node::Id(a) if a.is_simple() => (d.clone(), false),
        Node::Id(a) => collapsed(a),
        Node::Sym(a, b) => (
            Diagram::sym(
                SizedObject::simple(a.global_size()),
                SizedObject::simple(b.global_size()),
            ),
            false,
        ),
        Node::Seq(f, g) => {
            let (f2, cf) = strip_inner(f)?;
            let (g2, cg) = strip_inner(g)?;
            if cf {
                (g2, cg)
            } else if cg {
                (f2, false)
            } else {
                (Diagram::seq(f2, g2)?, false)
            }
        }
        Node::Par(f, g) => {
            let (f2, cf) = strip_inner(f)?;
            let (g2, cg) = strip_inner(g)?;
            if (cf || cg) && f2.is_identity_node() && g2.is_identity_node() {
                collapsed(&d.dom().clone())
            } else {
                (Diagram::par(f2, g2), false)
            }
        }
    })
}

/// The wire stripper: dividers and gatherers become identities, every
/// object a becomes `|a|` simple wires, generators are kept. Identities
/// that only come from erased wiring are dropped from sequential
/// composites, so terms of the base language are returned unchanged.
pub fn strip(d: &Diagram) -> Result<Diagram> {
    Ok(strip_inner(d)?.0)
}

/// The base language embedded in 𝒮L. Base terms already live on simple
/// wires, so this is the identity on terms.
pub fn embed(d: &Diagram) -> Result<Diagram> {
    if !d.is_simple_typed() {
        return Err(Error::NotMonochromaticDiagram(d.dom().clone(), d.cod().clone()));
    }
    Ok(d.clone())
}

fn cables(sizes: impl IntoIterator<Item = usize>) -> SizedObject {
    SizedObject::new(sizes.into_iter().collect()).expect("positive sizes")
}

// One step `g_{k+1}` from the first copy and `g_k`.
fn multiplex_step(first: &Diagram, rest: &Diagram, k: usize) -> Result<Diagram> {
    let n = first.dom().len();
    let m = first.cod().len();
    let dom = SizedObject::repeated(n, k + 1);
    let split = Diagram::par_all((0..n).map(|_| Diagram::div(k).expect("k > 0")));
    let interleaved_in = cables((0..n).flat_map(|_| [1, k]));
    let to_blocks: Vec<usize> = (0..2 * n).map(|c| if c % 2 == 0 { c / 2 } else { n + c / 2 }).collect();
    let route_in = Diagram::cable_permutation(&interleaved_in, &to_blocks);
    let blocks_out = cables((0..m).map(|_| 1).chain((0..m).map(|_| k)));
    let from_blocks: Vec<usize> = (0..2 * m).map(|c| if c < m { 2 * c } else { 2 * (c - m) + 1 }).collect();
    let route_out = Diagram::cable_permutation(&blocks_out, &from_blocks);
    let gather = Diagram::par_all((0..m).map(|_| Diagram::gat(k).expect("k > 0")));
    Diagram::seq_trimmed(
        &dom,
        [split, route_in, Diagram::par(first.clone(), rest.clone()), route_out, gather],
    )
}

fn multiplex_with(k: usize, copy: &dyn Fn(usize) -> Result<Diagram>) -> Result<Diagram> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    // build g_k from the innermost copy outwards
    let mut acc = embed(&copy(k - 1)?)?;
    for j in (0..k - 1).rev() {
        acc = multiplex_step(&embed(&copy(j)?)?, &acc, k - 1 - j)?;
    }
    Ok(acc)
}

/// `g_k : n·k → m·k` (n cables of size k) for a base term `g : n → m`.
pub fn multiplex(g: &Diagram, k: usize) -> Result<Diagram> {
    multiplex_with(k, &|_| Ok(g.clone()))
}

/// `g_k(α)`: like [`multiplex`], copy j being `g(α[j])`.
pub fn multiplex_indexed(g: &GeneratorDecl, alpha: &[Param]) -> Result<Diagram> {
    if alpha.is_empty() {
        return Err(Error::ParameterArityMismatch {
            expected: 1,
            found: 0,
        });
    }
    multiplex_with(alpha.len(), &|j| g.diagram(alloc::vec![alpha[j].clone()]))
}

/// `(dom, core, cod)` with the term equal to `Γ_cod ∘ core ∘ Δ_dom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureNormalForm {
    pub dom: SizedObject,
    pub core: Diagram,
    pub cod: SizedObject,
}

pub fn structure_normal_form(d: &Diagram) -> Result<StructureNormalForm> {
    Ok(StructureNormalForm {
        dom: d.dom().clone(),
        core: strip(d)?,
        cod: d.cod().clone(),
    })
}

/// `Γ_cod ∘ core ∘ Δ_dom`, leaving out identity pieces.
pub fn reconstitute(nf: &StructureNormalForm) -> Result<Diagram> {
    Diagram::seq_trimmed(&nf.dom, [split_obj(&nf.dom), embed(&nf.core)?, gather_obj(&nf.cod)])
}

/// Equality in 𝒮L relative to a complete interpretation of the base.
pub fn sl_equal<P: Prop>(d1: &Diagram, d2: &Diagram, interp: &Interpretation<P>) -> Result<bool> {
    if d1.dom() != d2.dom() || d1.cod() != d2.cod() {
        return Ok(false);
    }
    let a = interp.evaluate(&strip(d1)?)?;
    let b = interp.evaluate(&strip(d2)?)?;
    Ok(interp.equal(&a, &b))
}

/// A value of the base model together with the cable partitions of its boundary.
#[derive(Debug, Clone)]
pub struct ScaledValue<V> {
    pub value: V,
    pub dom: SizedObject,
    pub cod: SizedObject,
}

pub fn scaled_evaluate<P: Prop>(d: &Diagram, interp: &Interpretation<P>) -> Result<ScaledValue<P::Value>> {
    Ok(ScaledValue {
        value: interp.evaluate(&strip(d)?)?,
        dom: d.dom().clone(),
        cod: d.cod().clone(),
    })
}
