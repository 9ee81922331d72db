use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::Prop;
use crate::boxes::BoxValue;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A function `{0..n} → {0..m}` given by its table of images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinFn {
    images: Vec<usize>,
    cod: usize,
}

impl FinFn {
    pub fn new(images: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&i| i >= cod) {
            return Err(Error::BadArity(format!("image {bad} outside a codomain of size {cod}")));
        }
        Ok(FinFn { images, cod })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn dom(&self) -> usize {
        self.images.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }
}

impl fmt::Display for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fun<{}>[", self.cod)?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The prop of finite functions, tensor = disjoint union.
#[derive(Debug, Clone, Copy, Default)]
pub struct FunProp;

impl Prop for FunProp {
    type Value = FinFn;

    fn name(&self) -> &'static str {
        "fun"
    }

    fn arity(&self, v: &FinFn) -> (usize, usize) {
        (v.dom(), v.cod)
    }

    fn identity(&self, n: usize) -> FinFn {
        FinFn {
            images: (0..n).collect(),
            cod: n,
        }
    }

    fn compose(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        Ok(FinFn {
            images: f.images.iter().map(|&i| g.images[i]).collect(),
            cod: g.cod,
        })
    }

    fn tensor(&self, f: &FinFn, g: &FinFn) -> FinFn {
        let mut images = f.images.clone();
        images.extend(g.images.iter().map(|&i| i + f.cod));
        FinFn {
            images,
            cod: f.cod + g.cod,
        }
    }

    fn permutation(&self, p: &Permutation) -> FinFn {
        FinFn {
            images: p.images().to_vec(),
            cod: p.len(),
        }
    }

    fn equal(&self, a: &FinFn, b: &FinFn) -> bool {
        a == b
    }

    fn from_box(&self, b: &BoxValue) -> Result<FinFn> {
        match b {
            BoxValue::Perm(p) => Ok(self.permutation(p)),
            BoxValue::Fun(f) => Ok(f.clone()),
            other => Err(Error::BackendMismatch {
                backend: "fun",
                found: other.kind(),
            }),
        }
    }
}
