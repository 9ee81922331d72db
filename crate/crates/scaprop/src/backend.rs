//! Backends selectable by name.

use scaprop_core::semantics::{
    catalog, FunProp, Interpretation, LinRelProp, MatProp, PermProp, Prop, QubitProp, Semiring,
};
use scaprop_core::scalable::strip;
use scaprop_core::{Diagram, Node, Result};

pub const NAMES: [&str; 11] = [
    "perm", "fun", "nat", "int", "bool", "sat2", "f2", "linrel", "zx", "zh", "zw",
];

pub enum Backend {
    Perm(Interpretation<PermProp>),
    Fun(Interpretation<FunProp>),
    Mat(Interpretation<MatProp>),
    LinRel(Interpretation<LinRelProp>),
    Qubit(Interpretation<QubitProp>),
}

/// Outcome of comparing two diagrams.
pub struct Comparison {
    pub equal: bool,
    pub same_type: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Backend {
    pub fn by_name(name: &str) -> Option<Backend> {
        Some(match name {
            "perm" => Backend::Perm(catalog::perm()),
            "fun" => Backend::Fun(catalog::fun()),
            "linrel" => Backend::LinRel(catalog::linrel()),
            "zx" => Backend::Qubit(catalog::zx()),
            "zh" => Backend::Qubit(catalog::zh()),
            "zw" => Backend::Qubit(catalog::zw()),
            "rational" => return None,
            other => Backend::Mat(catalog::mat(Semiring::from_name(other)?)),
        })
    }

    /// The built-in language a backend interprets.
    pub fn default_language(name: &str) -> Option<&'static str> {
        Some(match name {
            "perm" => "P",
            "fun" => "M",
            "nat" | "bool" | "sat2" | "f2" | "zh" | "zw" => "B",
            "int" => "H",
            "linrel" | "zx" => "IH",
            _ => return None,
        })
    }

    pub fn evaluate(&self, d: &Diagram) -> Result<String> {
        match self {
            Backend::Perm(i) => value(i, d).map(|v| v.to_string()),
            Backend::Fun(i) => value(i, d).map(|v| v.to_string()),
            Backend::Mat(i) => value(i, d).map(|v| v.to_string()),
            Backend::LinRel(i) => value(i, d).map(|v| v.to_string()),
            Backend::Qubit(i) => value(i, d).map(|v| v.to_string()),
        }
    }

    pub fn compare(&self, a: &Diagram, b: &Diagram) -> Result<Comparison> {
        match self {
            Backend::Perm(i) => compare(i, a, b),
            Backend::Fun(i) => compare(i, a, b),
            Backend::Mat(i) => compare(i, a, b),
            Backend::LinRel(i) => compare(i, a, b),
            Backend::Qubit(i) => compare(i, a, b),
        }
    }
}

fn has_boxes(d: &Diagram) -> bool {
    d.count(|n| matches!(n, Node::Box(_))) > 0
}

// Terms without boxes go through the wire stripper; boxes are read directly.
fn value<P: Prop>(interp: &Interpretation<P>, d: &Diagram) -> Result<P::Value> {
    if has_boxes(d) {
        interp.evaluate(d)
    } else {
        interp.evaluate(&strip(d)?)
    }
}

fn compare<P: Prop>(interp: &Interpretation<P>, a: &Diagram, b: &Diagram) -> Result<Comparison> {
    let (va, vb) = (value(interp, a)?, value(interp, b)?);
    let same_type = a.dom() == b.dom() && a.cod() == b.cod();
    Ok(Comparison {
        equal: same_type && interp.equal(&va, &vb),
        same_type,
        lhs: va.to_string(),
        rhs: vb.to_string(),
    })
}
