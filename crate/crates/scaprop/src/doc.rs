//! JSON signature and language documents.
//!
//! ```json
//! {"discipline": "mono",
//!  "generators": [{"name": "mon", "dom": [1, 1], "cod": [1], "param": "none"}],
//!  "equations": [{"lhs": "mon * unit ; mon", "rhs": "id<1>"}]}
//! ```
//!
//! `equations` is only read by [`load_language`]; expression strings use the
//! DSL over the document's own generators.

use serde::{Deserialize, Serialize};

use scaprop_core::{
    Discipline, Equation, GeneratorDecl, GraphicalLanguage, ParamSort, Signature, SizedObject,
};

use crate::dsl::{self, DslError};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("generator `{0}`: sizes must be positive")]
    ZeroSize(String),
    #[error(transparent)]
    Core(#[from] scaprop_core::Error),
    #[error("equation {index} ({side}): {error}")]
    Expr {
        index: usize,
        side: &'static str,
        error: DslError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DisciplineDoc {
    Mono,
    Sized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamDoc {
    #[default]
    None,
    Rational,
    Complex,
    Token,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    #[serde(default)]
    pub param: ParamDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationDoc {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageDoc {
    pub discipline: DisciplineDoc,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equations: Vec<EquationDoc>,
}

fn sort_of(p: ParamDoc) -> ParamSort {
    match p {
        ParamDoc::None => ParamSort::None,
        ParamDoc::Rational => ParamSort::Rational,
        ParamDoc::Complex => ParamSort::Complex,
        ParamDoc::Token => ParamSort::Token,
    }
}

fn doc_of(p: ParamSort) -> ParamDoc {
    match p {
        ParamSort::None => ParamDoc::None,
        ParamSort::Rational => ParamDoc::Rational,
        ParamSort::Complex => ParamDoc::Complex,
        ParamSort::Token => ParamDoc::Token,
    }
}

impl LanguageDoc {
    pub fn signature(&self) -> Result<Signature, DocError> {
        let discipline = match self.discipline {
            DisciplineDoc::Mono => Discipline::Monochromatic,
            DisciplineDoc::Sized => Discipline::Sized,
        };
        let mut decls = Vec::new();
        for g in &self.generators {
            let obj = |v: &[usize]| SizedObject::new(v.to_vec()).map_err(|_| DocError::ZeroSize(g.name.clone()));
            decls.push(GeneratorDecl::new(g.name.clone(), obj(&g.dom)?, obj(&g.cod)?).with_param(sort_of(g.param)));
        }
        Ok(Signature::from_decls(discipline, decls)?)
    }

    pub fn language(&self) -> Result<GraphicalLanguage, DocError> {
        let sig = self.signature()?;
        let mut eqs = Vec::new();
        for (index, e) in self.equations.iter().enumerate() {
            let side = |side: &'static str, text: &str| {
                dsl::parse(text, &sig).map_err(|error| DocError::Expr { index, side, error })
            };
            eqs.push(Equation::new(side("lhs", &e.lhs)?, side("rhs", &e.rhs)?)?);
        }
        Ok(GraphicalLanguage::new(sig, eqs)?)
    }

    pub fn from_signature(sig: &Signature) -> Self {
        LanguageDoc {
            discipline: match sig.discipline() {
                Discipline::Monochromatic => DisciplineDoc::Mono,
                Discipline::Sized => DisciplineDoc::Sized,
            },
            generators: sig
                .generators()
                .map(|g| GeneratorDoc {
                    name: g.name.clone(),
                    dom: g.dom.sizes().to_vec(),
                    cod: g.cod.sizes().to_vec(),
                    param: doc_of(g.param),
                })
                .collect(),
            equations: Vec::new(),
        }
    }

    pub fn from_language(lang: &GraphicalLanguage) -> Self {
        let mut doc = Self::from_signature(lang.signature());
        doc.equations = lang
            .equations()
            .iter()
            .map(|e| EquationDoc {
                lhs: dsl::print(&e.lhs),
                rhs: dsl::print(&e.rhs),
            })
            .collect();
        doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

pub fn load_signature(text: &str) -> Result<Signature, DocError> {
    serde_json::from_str::<LanguageDoc>(text)?.signature()
}

pub fn load_language(text: &str) -> Result<GraphicalLanguage, DocError> {
    serde_json::from_str::<LanguageDoc>(text)?.language()
}
