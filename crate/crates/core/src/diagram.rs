//! Immutable diagram terms with cached boundary types.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::boxes::BoxValue;
use crate::error::{Error, Result};
use crate::object::SizedObject;
use crate::param::Param;

/// The constructors of a diagram term.
#[derive(Clone, PartialEq, Eq)]
pub enum Node {
    Gen { name: String, params: Vec<Param> },
    Id(SizedObject),
    /// Block symmetry `σ_{a,b} : a⊠b → b⊠a`.
    Sym(SizedObject, SizedObject),
    /// Divider `δ_n : ⟨n+1⟩ → ⟨1,n⟩`, n ≥ 1.
    Div(usize),
    /// Gatherer `γ_n : ⟨1,n⟩ → ⟨n+1⟩`, n ≥ 1.
    Gat(usize),
    Box(BoxValue),
    /// `Seq(f, g)` is f followed by g.
    Seq(Diagram, Diagram),
    Par(Diagram, Diagram),
}

#[derive(PartialEq, Eq)]
struct Inner {
    node: Node,
    dom: SizedObject,
    cod: SizedObject,
    wire_only: bool,
    size: usize,
}

/// A typed diagram. Cloning is cheap; terms are shared and never mutated.
#[derive(Clone)]
pub struct Diagram(Arc<Inner>);

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Diagram {}

impl Diagram {
    fn make(node: Node, dom: SizedObject, cod: SizedObject) -> Self {
        let (wire_only, size) = match &node {
            Node::Gen { .. } | Node::Box(_) => (false, 1),
            Node::Id(_) | Node::Sym(..) | Node::Div(_) | Node::Gat(_) => (true, 1),
            Node::Seq(f, g) | Node::Par(f, g) => {
                (f.is_wire_term() && g.is_wire_term(), 1 + f.size() + g.size())
            }
        };
        Diagram(Arc::new(Inner {
            node,
            dom,
            cod,
            wire_only,
            size,
        }))
    }

    /// A generator use with an explicit type. Use [`crate::Signature::gen`]
    /// for a use checked against a declaration.
    pub fn generator(
        name: impl Into<String>,
        params: Vec<Param>,
        dom: SizedObject,
        cod: SizedObject,
    ) -> Self {
        Self::make(
            Node::Gen {
                name: name.into(),
                params,
            },
            dom,
            cod,
        )
    }

    pub fn id(a: SizedObject) -> Self {
        Self::make(Node::Id(a.clone()), a.clone(), a)
    }

    /// Identity on k simple wires.
    pub fn simple_id(k: usize) -> Self {
        Self::id(SizedObject::simple(k))
    }

    pub fn sym(a: SizedObject, b: SizedObject) -> Self {
        let dom = a.concat(&b);
        let cod = b.concat(&a);
        Self::make(Node::Sym(a, b), dom, cod)
    }

    pub fn div(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let dom = SizedObject::cable(n + 1);
        let cod = SizedObject::new(alloc::vec![1, n])?;
        Ok(Self::make(Node::Div(n), dom, cod))
    }

    pub fn gat(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let dom = SizedObject::new(alloc::vec![1, n])?;
        let cod = SizedObject::cable(n + 1);
        Ok(Self::make(Node::Gat(n), dom, cod))
    }

    /// A single box node `⟨n⟩ → ⟨m⟩` for a backend value of arity n → m.
    pub fn boxed(value: BoxValue) -> Self {
        let (n, m) = value.arity();
        Self::make(Node::Box(value), SizedObject::cable(n), SizedObject::cable(m))
    }

    /// Sequential composition, failing eagerly on a boundary mismatch.
    pub fn seq(f: Diagram, g: Diagram) -> Result<Self> {
        if f.cod() != g.dom() {
            return Err(Error::BoundaryMismatch {
                position: 0,
                expected: f.cod().clone(),
                found: g.dom().clone(),
            });
        }
        let dom = f.dom().clone();
        let cod = g.cod().clone();
        Ok(Self::make(Node::Seq(f, g), dom, cod))
    }

    pub fn par(f: Diagram, g: Diagram) -> Self {
        let dom = f.dom().concat(g.dom());
        let cod = f.cod().concat(g.cod());
        Self::make(Node::Par(f, g), dom, cod)
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Diagram) -> Result<Self> {
        Self::seq(self.clone(), g.clone())
    }

    pub fn tensor(&self, g: &Diagram) -> Self {
        Self::par(self.clone(), g.clone())
    }

    /// Left-nested sequential composite of `parts`; identity on `dom` if empty.
    pub fn seq_all(dom: &SizedObject, parts: impl IntoIterator<Item = Diagram>) -> Result<Self> {
        let mut acc: Option<Diagram> = None;
        for p in parts {
            acc = Some(match acc {
                None => {
                    if p.dom() != dom {
                        return Err(Error::BoundaryMismatch {
                            position: 0,
                            expected: dom.clone(),
                            found: p.dom().clone(),
                        });
                    }
                    p
                }
                Some(a) => Self::seq(a, p)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::id(dom.clone())))
    }

    /// Like [`Diagram::seq_all`] but skipping parts that are identity nodes.
    pub fn seq_trimmed(dom: &SizedObject, parts: impl IntoIterator<Item = Diagram>) -> Result<Self> {
        Self::seq_all(dom, parts.into_iter().filter(|p| !p.is_identity_node()))
    }

    /// Left-nested tensor of `parts`; `id_0` if empty.
    pub fn par_all(parts: impl IntoIterator<Item = Diagram>) -> Self {
        parts
            .into_iter()
            .reduce(Self::par)
            .unwrap_or_else(|| Self::id(SizedObject::empty()))
    }

    /// `id_prefix ⊠ mid ⊠ id_suffix`, leaving out empty identities.
    pub fn layer(prefix: &SizedObject, mid: Diagram, suffix: &SizedObject) -> Self {
        let mut d = mid;
        if !prefix.is_empty() {
            d = Self::par(Self::id(prefix.clone()), d);
        }
        if !suffix.is_empty() {
            d = Self::par(d, Self::id(suffix.clone()));
        }
        d
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn dom(&self) -> &SizedObject {
        &self.0.dom
    }

    pub fn cod(&self) -> &SizedObject {
        &self.0.cod
    }

    /// True when the term only contains identities, symmetries, dividers and gatherers.
    pub fn is_wire_term(&self) -> bool {
        self.0.wire_only
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn is_identity_node(&self) -> bool {
        matches!(self.node(), Node::Id(_))
    }

    /// True when both boundaries consist of simple wires only.
    pub fn is_simple_typed(&self) -> bool {
        self.dom().is_simple() && self.cod().is_simple()
    }

    /// Visits every node in pre-order.
    pub fn visit(&self, f: &mut impl FnMut(&Diagram)) {
        f(self);
        if let Node::Seq(a, b) | Node::Par(a, b) = self.node() {
            a.visit(f);
            b.visit(f);
        }
    }

    /// Number of nodes satisfying `pred`.
    pub fn count(&self, mut pred: impl FnMut(&Node) -> bool) -> usize {
        let mut n = 0;
        self.visit(&mut |d| {
            if pred(d.node()) {
                n += 1;
            }
        });
        n
    }

    /// Rebuilds the term bottom-up, replacing leaves through `leaf`.
    pub fn map_leaves(&self, leaf: &mut impl FnMut(&Diagram) -> Result<Diagram>) -> Result<Diagram> {
        match self.node() {
            Node::Seq(f, g) => Self::seq(f.map_leaves(leaf)?, g.map_leaves(leaf)?),
            Node::Par(f, g) => Ok(Self::par(f.map_leaves(leaf)?, g.map_leaves(leaf)?)),
            _ => leaf(self),
        }
    }

    /// Applies the monoidal unit laws: drops identity sides of `Seq`,
    /// merges tensors of identities, and turns empty symmetries into identities.
    pub fn simplify(&self) -> Diagram {
        match self.node() {
            Node::Sym(a, b) if a.is_empty() || b.is_empty() => Self::id(self.dom().clone()),
            Node::Seq(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                if f.is_identity_node() {
                    g
                } else if g.is_identity_node() {
                    f
                } else {
                    Self::make(Node::Seq(f, g), self.dom().clone(), self.cod().clone())
                }
            }
            Node::Par(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                if f.is_identity_node() && g.is_identity_node() {
                    Self::id(self.dom().clone())
                } else if f.dom().is_empty() && f.cod().is_empty() && f.is_identity_node() {
                    g
                } else if g.dom().is_empty() && g.cod().is_empty() && g.is_identity_node() {
                    f
                } else {
                    Self::par(f, g)
                }
            }
            _ => self.clone(),
        }
    }

    /// `σ_{a,b}` assembled from swaps of adjacent single cables.
    pub fn block_symmetry(a: &SizedObject, b: &SizedObject) -> Diagram {
        let p = a.len();
        let q = b.len();
        let images: Vec<usize> = (0..p).map(|i| q + i).chain(0..q).collect();
        Self::cable_permutation(&a.concat(b), &images)
    }

    /// Routes cable `i` of `obj` to position `images[i]` using adjacent
    /// single-cable swaps (bubble sort order).
    pub fn cable_permutation(obj: &SizedObject, images: &[usize]) -> Diagram {
        debug_assert_eq!(obj.len(), images.len());
        let mut cables: Vec<usize> = obj.sizes().to_vec();
        let mut target: Vec<usize> = images.to_vec();
        let mut layers = Vec::new();
        let n = cables.len();
        loop {
            let mut swapped = false;
            for j in 0..n.saturating_sub(1) {
                if target[j] > target[j + 1] {
                    let prefix = SizedObject::new(cables[..j].to_vec()).expect("positive");
                    let suffix = SizedObject::new(cables[j + 2..].to_vec()).expect("positive");
                    let swap = Self::sym(SizedObject::cable(cables[j]), SizedObject::cable(cables[j + 1]));
                    layers.push(Self::layer(&prefix, swap, &suffix));
                    cables.swap(j, j + 1);
                    target.swap(j, j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        Self::seq_all(obj, layers).expect("layers are composable")
    }
}

fn fmt_sym_obj(o: &SizedObject, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match o.sizes() {
        [] => f.write_str("0"),
        [s] => write!(f, "{s}"),
        sizes => {
            f.write_str("[")?;
            for (i, s) in sizes.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str("]")
        }
    }
}

fn fmt_obj_list(o: &SizedObject, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if o.is_empty() {
        return f.write_str("0");
    }
    for (i, s) in o.sizes().iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

/// Prints the term in the textual diagram syntax: `;` for sequential
/// composition (left to right), `*` for tensor, `id<..>`, `sym<a,b>`,
/// `div<n>`, `gat<n>`, generator names with optional parameters.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Gen { name, params } => {
                f.write_str(name)?;
                if !params.is_empty() {
                    f.write_str("(")?;
                    for (i, p) in params.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{p}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
            Node::Id(a) => {
                f.write_str("id<")?;
                fmt_obj_list(a, f)?;
                f.write_str(">")
            }
            Node::Sym(a, b) => {
                f.write_str("sym<")?;
                fmt_sym_obj(a, f)?;
                f.write_str(",")?;
                fmt_sym_obj(b, f)?;
                f.write_str(">")
            }
            Node::Div(n) => write!(f, "div<{n}>"),
            Node::Gat(n) => write!(f, "gat<{n}>"),
            Node::Box(b) => write!(f, "{b}"),
            Node::Seq(a, b) => {
                write!(f, "{a} ; ")?;
                if matches!(b.node(), Node::Seq(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Node::Par(a, b) => {
                if matches!(a.node(), Node::Seq(..)) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str(" * ")?;
                if matches!(b.node(), Node::Seq(..) | Node::Par(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} : {} -> {}", self.dom(), self.cod())
    }
}
