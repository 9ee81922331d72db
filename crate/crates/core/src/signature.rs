//! Signatures: named generators with sized types.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::object::SizedObject;
use crate::param::Param;

/// Whether a signature lives on simple wires only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Discipline {
    Monochromatic,
    Sized,
}

/// Sort of the (single) index carried by a parameterised generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamSort {
    None,
    Rational,
    Complex,
    Token,
}

impl ParamSort {
    /// Number of parameters a use of the generator carries.
    pub fn arity(self) -> usize {
        match self {
            ParamSort::None => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorDecl {
    pub name: String,
    pub dom: SizedObject,
    pub cod: SizedObject,
    pub param: ParamSort,
}

impl GeneratorDecl {
    pub fn new(name: impl Into<String>, dom: SizedObject, cod: SizedObject) -> Self {
        GeneratorDecl {
            name: name.into(),
            dom,
            cod,
            param: ParamSort::None,
        }
    }

    /// A monochromatic generator `n → m`.
    pub fn simple(name: impl Into<String>, n: usize, m: usize) -> Self {
        Self::new(name, SizedObject::simple(n), SizedObject::simple(m))
    }

    pub fn with_param(mut self, sort: ParamSort) -> Self {
        self.param = sort;
        self
    }

    pub fn is_monochromatic(&self) -> bool {
        self.dom.is_simple() && self.cod.is_simple()
    }

    /// The diagram consisting of this generator alone.
    pub fn diagram(&self, params: Vec<Param>) -> Result<Diagram> {
        if params.len() != self.param.arity() || params.iter().any(|p| p.sort() != self.param) {
            return Err(Error::BadParameterArity {
                name: self.name.clone(),
                expected: self.param.arity(),
                found: params.len(),
            });
        }
        Ok(Diagram::generator(
            self.name.clone(),
            params,
            self.dom.clone(),
            self.cod.clone(),
        ))
    }
}

/// A set of generators, kept in name order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    discipline: Discipline,
    generators: BTreeMap<String, GeneratorDecl>,
}

impl Signature {
    pub fn new(discipline: Discipline) -> Self {
        Signature {
            discipline,
            generators: BTreeMap::new(),
        }
    }

    pub fn from_decls(
        discipline: Discipline,
        decls: impl IntoIterator<Item = GeneratorDecl>,
    ) -> Result<Self> {
        let mut sig = Signature::new(discipline);
        for d in decls {
            sig.declare(d)?;
        }
        Ok(sig)
    }

    pub fn declare(&mut self, decl: GeneratorDecl) -> Result<()> {
        if self.discipline == Discipline::Monochromatic && !decl.is_monochromatic() {
            return Err(Error::NotMonochromatic(decl.name));
        }
        if self.generators.contains_key(&decl.name) {
            return Err(Error::DuplicateGenerator(decl.name));
        }
        self.generators.insert(decl.name.clone(), decl);
        Ok(())
    }

    pub fn discipline(&self) -> Discipline {
        self.discipline
    }

    pub fn get(&self, name: &str) -> Option<&GeneratorDecl> {
        self.generators.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.generators.contains_key(name)
    }

    pub fn generators(&self) -> impl Iterator<Item = &GeneratorDecl> {
        self.generators.values()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generator use, checked against its declaration.
    pub fn gen(&self, name: &str, params: Vec<Param>) -> Result<Diagram> {
        self.get(name)
            .ok_or_else(|| Error::UndeclaredGenerator(name.into()))?
            .diagram(params)
    }
}

/// Recomputes the type of `d` and checks every generator against `sig`.
///
/// Sequential boundaries are re-verified even though the constructors
/// already enforce them. Nodes are numbered in pre-order.
pub fn typecheck(d: &Diagram, sig: &Signature) -> Result<(SizedObject, SizedObject)> {
    let mut counter = 0usize;
    check(d, sig, &mut counter)
}

fn check(d: &Diagram, sig: &Signature, counter: &mut usize) -> Result<(SizedObject, SizedObject)> {
    let position = *counter;
    *counter += 1;
    match d.node() {
        Node::Gen { name, params } => {
            let decl = sig
                .get(name)
                .ok_or_else(|| Error::UndeclaredGenerator(name.clone()))?;
            if params.len() != decl.param.arity() || params.iter().any(|p| p.sort() != decl.param) {
                return Err(Error::BadParameterArity {
                    name: name.clone(),
                    expected: decl.param.arity(),
                    found: params.len(),
                });
            }
            if &decl.dom != d.dom() || &decl.cod != d.cod() {
                return Err(Error::GeneratorTypeMismatch {
                    name: name.clone(),
                    dom: decl.dom.clone(),
                    cod: decl.cod.clone(),
                    found_dom: d.dom().clone(),
                    found_cod: d.cod().clone(),
                });
            }
            Ok((decl.dom.clone(), decl.cod.clone()))
        }
        Node::Seq(f, g) => {
            let (a, b) = check(f, sig, counter)?;
            let (b2, c) = check(g, sig, counter)?;
            if b != b2 {
                return Err(Error::BoundaryMismatch {
                    position,
                    expected: b,
                    found: b2,
                });
            }
            Ok((a, c))
        }
        Node::Par(f, g) => {
            let (a, b) = check(f, sig, counter)?;
            let (c, e) = check(g, sig, counter)?;
            Ok((a.concat(&c), b.concat(&e)))
        }
        _ => Ok((d.dom().clone(), d.cod().clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages;
    use crate::obj;

    #[test]
    fn mon_has_monoid_type() {
        let m = languages::monoid();
        let d = m.signature().gen("mon", Vec::new()).unwrap();
        assert_eq!(typecheck(&d, m.signature()).unwrap(), (obj![1, 1], obj![1]));
    }

    #[test]
    fn undeclared_generator() {
        let m = languages::monoid();
        let d = Diagram::generator("foo", Vec::new(), obj![1], obj![1]);
        assert!(matches!(
            typecheck(&d, m.signature()),
            Err(Error::UndeclaredGenerator(n)) if n == "foo"
        ));
    }

    #[test]
    fn bad_parameter_arity() {
        let mut sig = Signature::new(Discipline::Monochromatic);
        sig.declare(GeneratorDecl::simple("z", 1, 1).with_param(ParamSort::Rational))
            .unwrap();
        assert!(matches!(
            sig.gen("z", Vec::new()),
            Err(Error::BadParameterArity { expected: 1, found: 0, .. })
        ));
        let d = Diagram::generator("z", Vec::new(), obj![1], obj![1]);
        assert!(matches!(typecheck(&d, &sig), Err(Error::BadParameterArity { .. })));
        assert!(sig.gen("z", alloc::vec![Param::int(1)]).is_ok());
    }

    #[test]
    fn monochromatic_discipline_enforced() {
        let mut sig = Signature::new(Discipline::Monochromatic);
        let err = sig.declare(GeneratorDecl::new("big", obj![2], obj![1]));
        assert_eq!(err, Err(Error::NotMonochromatic("big".into())));
        assert_eq!(
            sig.declare(GeneratorDecl::simple("a", 1, 1))
                .and_then(|_| sig.declare(GeneratorDecl::simple("a", 2, 1))),
            Err(Error::DuplicateGenerator("a".into()))
        );
    }

    #[test]
    fn div_then_gat_typechecks() {
        let sig = Signature::new(Discipline::Sized);
        let d = Diagram::div(2).unwrap().then(&Diagram::gat(2).unwrap()).unwrap();
        assert_eq!(typecheck(&d, &sig).unwrap(), (obj![3], obj![3]));
    }
}
