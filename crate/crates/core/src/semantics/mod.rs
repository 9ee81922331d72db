//! Semantic props and interpretations of graphical languages in them.
//!
//! A [`Prop`] supplies identities, composition, tensor and the action of
//! strand permutations on its values. An [`Interpretation`] adds a value
//! for every generator and evaluates diagrams by the homomorphic fold:
//! `Seq ↦ compose`, `Par ↦ tensor`, wire terms ↦ their strand permutation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::fmt;

use crate::boxes::BoxValue;
use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::param::Param;
use crate::perm::Permutation;
use crate::wire::trace;

pub mod arrows;
pub mod catalog;
mod fun;
mod linrel;
mod mat;
mod permutations;
mod qubit;
mod semiring;

pub use fun::{FinFn, FunProp};
pub use linrel::{relation_from_cospan, relation_from_span, span_cospan_condition, LinRelProp, LinearRelation};
pub use mat::{MatProp, SemiMatrix};
pub use permutations::PermProp;
pub use qubit::{fmt_real, QubitMap, QubitProp, TOLERANCE};
pub use semiring::Semiring;

/// A strict symmetric monoidal category on ℕ whose values can be compared.
pub trait Prop: Clone {
    type Value: Clone + fmt::Debug + fmt::Display;

    fn name(&self) -> &'static str;

    /// `(inputs, outputs)` of a value.
    fn arity(&self, v: &Self::Value) -> (usize, usize);

    fn identity(&self, n: usize) -> Self::Value;

    /// `f` followed by `g`.
    fn compose(&self, f: &Self::Value, g: &Self::Value) -> Result<Self::Value>;

    fn tensor(&self, f: &Self::Value, g: &Self::Value) -> Self::Value;

    /// The value of a wire permutation; `images[i]` is where strand i goes.
    fn permutation(&self, p: &Permutation) -> Self::Value;

    fn symmetry(&self, a: usize, b: usize) -> Self::Value {
        self.permutation(&Permutation::block_swap(a, b))
    }

    fn equal(&self, a: &Self::Value, b: &Self::Value) -> bool;

    /// Reads a box value. Permutation boxes are accepted everywhere.
    fn from_box(&self, b: &BoxValue) -> Result<Self::Value> {
        match b {
            BoxValue::Perm(p) => Ok(self.permutation(p)),
            other => Err(Error::BackendMismatch {
                backend: self.name(),
                found: other.kind(),
            }),
        }
    }

    /// Evaluates `d`, reading generators and boxes through `leaf`.
    fn fold(
        &self,
        d: &Diagram,
        leaf: &mut dyn FnMut(&Diagram) -> Result<Self::Value>,
    ) -> Result<Self::Value> {
        default_fold(self, d, leaf)
    }

    fn compose_checked(&self, f: &Self::Value, g: &Self::Value) -> Result<Self::Value> {
        let (a, b) = self.arity(f);
        let (c, e) = self.arity(g);
        if b != c {
            return Err(Error::ComposeMismatch(a, b, c, e));
        }
        self.compose(f, g)
    }
}

/// The homomorphic fold; maximal wire subterms are evaluated as one permutation.
pub fn default_fold<P: Prop + ?Sized>(
    prop: &P,
    d: &Diagram,
    leaf: &mut dyn FnMut(&Diagram) -> Result<P::Value>,
) -> Result<P::Value> {
    if d.is_wire_term() {
        return Ok(prop.permutation(&trace(d)?));
    }
    match d.node() {
        Node::Seq(f, g) => {
            let a = default_fold(prop, f, leaf)?;
            let b = default_fold(prop, g, leaf)?;
            prop.compose_checked(&a, &b)
        }
        Node::Par(f, g) => {
            let a = default_fold(prop, f, leaf)?;
            let b = default_fold(prop, g, leaf)?;
            Ok(prop.tensor(&a, &b))
        }
        _ => leaf(d),
    }
}

/// Parameterised value family; `None` rejects the parameters.
pub type Family<V> = Arc<dyn Fn(&[Param]) -> Option<V> + Send + Sync>;

#[derive(Clone)]
pub enum Assignment<V> {
    Value(V),
    Family(Family<V>),
}

impl<V: fmt::Debug> fmt::Debug for Assignment<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assignment::Value(v) => write!(f, "{v:?}"),
            Assignment::Family(_) => f.write_str("<family>"),
        }
    }
}

/// A prop together with a value for every generator name.
#[derive(Clone, Debug)]
pub struct Interpretation<P: Prop> {
    prop: P,
    assignment: BTreeMap<String, Assignment<P::Value>>,
}

impl<P: Prop> Interpretation<P> {
    pub fn new(prop: P) -> Self {
        Interpretation {
            prop,
            assignment: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: P::Value) -> Self {
        self.assignment.insert(name.to_string(), Assignment::Value(value));
        self
    }

    pub fn with_family(mut self, name: &str, family: Family<P::Value>) -> Self {
        self.assignment.insert(name.to_string(), Assignment::Family(family));
        self
    }

    pub fn prop(&self) -> &P {
        &self.prop
    }

    pub fn assigns(&self, name: &str) -> bool {
        self.assignment.contains_key(name)
    }

    /// The value of generator `name` at `params`.
    pub fn value_of(&self, name: &str, params: &[Param]) -> Result<P::Value> {
        match self.assignment.get(name) {
            None => Err(Error::MissingAssignment(name.to_string())),
            Some(Assignment::Value(v)) if params.is_empty() => Ok(v.clone()),
            Some(Assignment::Value(_)) => Err(Error::BadParameterArity {
                name: name.to_string(),
                expected: 0,
                found: params.len(),
            }),
            Some(Assignment::Family(f)) => f(params).ok_or_else(|| Error::BadParameterArity {
                name: name.to_string(),
                expected: 1,
                found: params.len(),
            }),
        }
    }

    fn leaf(&self, d: &Diagram) -> Result<P::Value> {
        let v = match d.node() {
            Node::Gen { name, params } => {
                let v = self.value_of(name, params)?;
                let (i, o) = self.prop.arity(&v);
                let (n, m) = (d.dom().global_size(), d.cod().global_size());
                if (i, o) != (n, m) {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        dom: n,
                        cod: m,
                        found_in: i,
                        found_out: o,
                    });
                }
                v
            }
            Node::Box(b) => self.prop.from_box(b)?,
            _ => self.prop.permutation(&trace(d)?),
        };
        Ok(v)
    }

    /// Evaluates a diagram. Dividers and gatherers denote identities.
    pub fn evaluate(&self, d: &Diagram) -> Result<P::Value> {
        self.prop.fold(d, &mut |leaf| self.leaf(leaf))
    }

    pub fn equal(&self, a: &P::Value, b: &P::Value) -> bool {
        self.prop.equal(a, b)
    }
}
