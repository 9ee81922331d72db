use super::Prop;
use crate::error::Result;
use crate::perm::Permutation;

/// The prop of permutations.
#[derive(Debug, Clone, Copy, Default)]
pub struct PermProp;

impl Prop for PermProp {
    type Value = Permutation;

    fn name(&self) -> &'static str {
        "perm"
    }

    fn arity(&self, v: &Permutation) -> (usize, usize) {
        (v.len(), v.len())
    }

    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }

    fn compose(&self, f: &Permutation, g: &Permutation) -> Result<Permutation> {
        Ok(f.then(g))
    }

    fn tensor(&self, f: &Permutation, g: &Permutation) -> Permutation {
        f.tensor(g)
    }

    fn permutation(&self, p: &Permutation) -> Permutation {
        p.clone()
    }

    fn equal(&self, a: &Permutation, b: &Permutation) -> bool {
        a == b
    }
}
