//! Graphical languages (signature + equations), their sums and quotients,
//! and translations between them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::semantics::{Interpretation, Prop};
use crate::signature::{typecheck, GeneratorDecl, Signature};

/// A pair of parallel diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Diagram,
    pub rhs: Diagram,
}

impl Equation {
    pub fn new(lhs: Diagram, rhs: Diagram) -> Result<Self> {
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            return Err(Error::EquationTypeMismatch(
                lhs.dom().clone(),
                lhs.cod().clone(),
                rhs.dom().clone(),
                rhs.cod().clone(),
            ));
        }
        Ok(Equation { lhs, rhs })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalLanguage {
    sig: Signature,
    equations: Vec<Equation>,
}

impl GraphicalLanguage {
    /// Checks every equation against the signature. Identical pairs are kept once.
    pub fn new(sig: Signature, equations: Vec<Equation>) -> Result<Self> {
        let mut lang = GraphicalLanguage {
            sig,
            equations: Vec::new(),
        };
        lang.push_equations(equations)?;
        Ok(lang)
    }

    /// The free language on `sig`.
    pub fn free(sig: Signature) -> Self {
        GraphicalLanguage {
            sig,
            equations: Vec::new(),
        }
    }

    fn push_equations(&mut self, equations: Vec<Equation>) -> Result<()> {
        for eq in equations {
            typecheck(&eq.lhs, &self.sig)?;
            typecheck(&eq.rhs, &self.sig)?;
            if !self.equations.contains(&eq) {
                self.equations.push(eq);
            }
        }
        Ok(())
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }
}

/// Renames generators inside a diagram; names missing from `map` are kept.
pub fn rename_generators(d: &Diagram, map: &BTreeMap<String, String>) -> Diagram {
    d.map_leaves(&mut |leaf| {
        Ok(match leaf.node() {
            Node::Gen { name, params } => match map.get(name) {
                Some(new) => Diagram::generator(
                    new.clone(),
                    params.clone(),
                    leaf.dom().clone(),
                    leaf.cod().clone(),
                ),
                None => leaf.clone(),
            },
            _ => leaf.clone(),
        })
    })
    .expect("renaming preserves types")
}

/// Sum of two languages: both signatures and both equation lists. A
/// generator of `y` whose name is taken in `l` is renamed to `name_k`
/// with the smallest free k ≥ 2.
pub fn language_sum(l: &GraphicalLanguage, y: &GraphicalLanguage) -> Result<GraphicalLanguage> {
    if l.sig.discipline() != y.sig.discipline() {
        return Err(Error::DisciplineMismatch);
    }
    let mut sig = l.sig.clone();
    let mut renaming = BTreeMap::new();
    for g in y.sig.generators() {
        let mut name = g.name.clone();
        if sig.contains(&name) {
            let mut k = 2;
            loop {
                let candidate = format!("{}_{k}", g.name);
                if !sig.contains(&candidate) && !y.sig.contains(&candidate) {
                    name = candidate;
                    break;
                }
                k += 1;
            }
            renaming.insert(g.name.clone(), name.clone());
        }
        sig.declare(GeneratorDecl { name, ..g.clone() })?;
    }
    let mut equations = l.equations.clone();
    for eq in &y.equations {
        equations.push(Equation {
            lhs: rename_generators(&eq.lhs, &renaming),
            rhs: rename_generators(&eq.rhs, &renaming),
        });
    }
    GraphicalLanguage::new(sig, equations)
}

/// Same signature, `extra` appended to the equations.
pub fn language_quotient(l: &GraphicalLanguage, extra: Vec<Equation>) -> Result<GraphicalLanguage> {
    let mut out = l.clone();
    out.push_equations(extra)?;
    Ok(out)
}

/// Reverses a diagram: sequential order flips, dividers become gatherers,
/// generators are renamed through `rename` with domain and codomain swapped.
pub fn opposite_diagram(d: &Diagram, rename: &BTreeMap<String, String>) -> Diagram {
    match d.node() {
        Node::Gen { name, params } => Diagram::generator(
            rename.get(name).cloned().unwrap_or_else(|| name.clone()),
            params.clone(),
            d.cod().clone(),
            d.dom().clone(),
        ),
        Node::Id(_) => d.clone(),
        Node::Sym(a, b) => Diagram::sym(b.clone(), a.clone()),
        Node::Div(n) => Diagram::gat(*n).expect("n > 0"),
        Node::Gat(n) => Diagram::div(*n).expect("n > 0"),
        Node::Box(_) => d.clone(),
        Node::Seq(f, g) => Diagram::seq(opposite_diagram(g, rename), opposite_diagram(f, rename))
            .expect("reversed composite is well typed"),
        Node::Par(f, g) => Diagram::par(opposite_diagram(f, rename), opposite_diagram(g, rename)),
    }
}

/// The opposite language, with generators renamed through `rename`.
pub fn opposite_language(
    l: &GraphicalLanguage,
    rename: &BTreeMap<String, String>,
) -> Result<GraphicalLanguage> {
    let mut sig = Signature::new(l.sig.discipline());
    for g in l.sig.generators() {
        sig.declare(GeneratorDecl {
            name: rename.get(&g.name).cloned().unwrap_or_else(|| g.name.clone()),
            dom: g.cod.clone(),
            cod: g.dom.clone(),
            param: g.param,
        })?;
    }
    let equations = l
        .equations
        .iter()
        .map(|eq| Equation {
            lhs: opposite_diagram(&eq.lhs, rename),
            rhs: opposite_diagram(&eq.rhs, rename),
        })
        .collect();
    GraphicalLanguage::new(sig, equations)
}

/// A type-preserving assignment of a target diagram to every source generator.
#[derive(Debug, Clone)]
pub struct Translation {
    pub source: GraphicalLanguage,
    pub target: GraphicalLanguage,
    map: BTreeMap<String, Diagram>,
}

impl Translation {
    pub fn new(
        source: GraphicalLanguage,
        target: GraphicalLanguage,
        map: BTreeMap<String, Diagram>,
    ) -> Result<Self> {
        for g in source.signature().generators() {
            let image = map
                .get(&g.name)
                .ok_or_else(|| Error::MissingTranslation(g.name.clone()))?;
            typecheck(image, target.signature())?;
            if image.dom() != &g.dom || image.cod() != &g.cod {
                return Err(Error::GeneratorTypeMismatch {
                    name: g.name.clone(),
                    dom: g.dom.clone(),
                    cod: g.cod.clone(),
                    found_dom: image.dom().clone(),
                    found_cod: image.cod().clone(),
                });
            }
        }
        Ok(Translation { source, target, map })
    }

    /// Sends every generator to itself. Parameterised generators keep their
    /// parameters under [`apply_translation`].
    pub fn identity(lang: &GraphicalLanguage) -> Self {
        let map = lang
            .signature()
            .generators()
            .map(|g| {
                (
                    g.name.clone(),
                    Diagram::generator(g.name.clone(), Vec::new(), g.dom.clone(), g.cod.clone()),
                )
            })
            .collect();
        Translation {
            source: lang.clone(),
            target: lang.clone(),
            map,
        }
    }

    pub fn image(&self, name: &str) -> Option<&Diagram> {
        self.map.get(name)
    }
}

/// Homomorphic extension of the generator assignment. Wire nodes and boxes
/// are kept; a parameterised generator mapped to a same-named generator
/// keeps its parameters.
pub fn apply_translation(t: &Translation, d: &Diagram) -> Result<Diagram> {
    typecheck(d, t.source.signature())?;
    d.map_leaves(&mut |leaf| match leaf.node() {
        Node::Gen { name, params } => {
            let image = t
                .map
                .get(name)
                .ok_or_else(|| Error::MissingTranslation(name.clone()))?;
            match image.node() {
                Node::Gen { name: target, params: p } if p.is_empty() && !params.is_empty() => {
                    Ok(Diagram::generator(
                        target.clone(),
                        params.clone(),
                        image.dom().clone(),
                        image.cod().clone(),
                    ))
                }
                _ => Ok(image.clone()),
            }
        }
        _ => Ok(leaf.clone()),
    })
}

/// True iff every source equation is sent to a pair of diagrams with equal
/// values in `backend` (an interpretation of the target).
pub fn check_translation_soundness<P: Prop>(
    t: &Translation,
    backend: &Interpretation<P>,
) -> Result<bool> {
    for eq in t.source.equations() {
        let l = backend.evaluate(&apply_translation(t, &eq.lhs)?)?;
        let r = backend.evaluate(&apply_translation(t, &eq.rhs)?)?;
        if !backend.prop().equal(&l, &r) {
            return Ok(false);
        }
    }
    Ok(true)
}
