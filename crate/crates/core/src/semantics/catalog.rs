//! The standard interpretations of the languages in [`crate::languages`].

use alloc::vec::Vec;

use super::{
    FinFn, FunProp, Interpretation, LinRelProp, LinearRelation, MatProp, PermProp, QubitMap, QubitProp,
    SemiMatrix, Semiring,
};
use crate::linalg::{rat, Subspace};

/// 𝒫 in permutations.
pub fn perm() -> Interpretation<PermProp> {
    Interpretation::new(PermProp)
}

/// ℳ in finite functions: `mon` is the unique map {1,2} → {1}, `unit` the
/// unique map ∅ → {1}.
pub fn fun() -> Interpretation<FunProp> {
    Interpretation::new(FunProp)
        .with("mon", FinFn::new(alloc::vec![0, 0], 1).expect("valid"))
        .with("unit", FinFn::new(Vec::new(), 1).expect("valid"))
}

fn mat_of(s: Semiring, rows: usize, cols: usize, data: &[i64]) -> SemiMatrix {
    SemiMatrix::from_i64(s, rows, cols, data).expect("entries in every semiring")
}

/// ℬ in matrices over `s`: `mon = (1 1)`, `bcomon = (1 1)ᵀ`, units empty.
/// Where −1 exists, `antipode = (−1)`.
pub fn mat(s: Semiring) -> Interpretation<MatProp> {
    let interp = Interpretation::new(MatProp(s))
        .with("mon", mat_of(s, 1, 2, &[1, 1]))
        .with("unit", mat_of(s, 1, 0, &[]))
        .with("bcomon", mat_of(s, 2, 1, &[1, 1]))
        .with("bcounit", mat_of(s, 0, 1, &[]));
    match s {
        Semiring::Int | Semiring::Rational | Semiring::F2 => interp.with("antipode", mat_of(s, 1, 1, &[-1])),
        _ => interp,
    }
}

pub fn nat() -> Interpretation<MatProp> {
    mat(Semiring::Nat)
}

/// ℋ in integer matrices.
pub fn int() -> Interpretation<MatProp> {
    mat(Semiring::Int)
}

fn relation(n: usize, m: usize, vectors: &[&[i64]]) -> LinearRelation {
    let rows = vectors.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
    LinearRelation::new(n, m, Subspace::spanned_by(n + m, rows).expect("vector lengths"))
        .expect("ambient n + m")
}

/// ℐℋ in linear relations over ℚ.
pub fn linrel() -> Interpretation<LinRelProp> {
    Interpretation::new(LinRelProp)
        // {(x, y, z) : x + y = z}
        .with("mon", relation(2, 1, &[&[1, 0, 1], &[0, 1, 1]]))
        .with("unit", relation(0, 1, &[]))
        // {(z, x, y) : z = x + y}
        .with("comon", relation(1, 2, &[&[1, 1, 0], &[1, 0, 1]]))
        .with("counit", relation(1, 0, &[]))
        .with("bcomon", relation(1, 2, &[&[1, 1, 1]]))
        .with("bmon", relation(2, 1, &[&[1, 1, 1]]))
        .with("bcounit", relation(1, 0, &[&[1]]))
        .with("bunit", relation(0, 1, &[&[1]]))
        .with("antipode", relation(1, 1, &[&[1, -1]]))
}

fn q(n: usize, m: usize, entries: &[f64]) -> QubitMap {
    QubitMap::real(n, m, entries).expect("2^m x 2^n entries")
}

/// The comonoid shared by the three qubit bialgebras.
fn qubit_comonoid() -> Interpretation<QubitProp> {
    Interpretation::new(QubitProp)
        .with("bcomon", q(1, 2, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]))
        .with("bcounit", q(1, 0, &[1.0, 1.0]))
}

/// The ZH bialgebra.
pub fn zh() -> Interpretation<QubitProp> {
    qubit_comonoid()
        .with("mon", q(2, 1, &[1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0]))
        .with("unit", q(0, 1, &[1.0, 0.0]))
}

/// The ZW bialgebra.
pub fn zw() -> Interpretation<QubitProp> {
    qubit_comonoid()
        .with("mon", q(2, 1, &[1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0]))
        .with("unit", q(0, 1, &[1.0, 0.0]))
}

/// The ZX bialgebra, extended to ℐℋ by transposition; the antipode is the
/// identity since −1 = 1 in 𝔽₂.
pub fn zx() -> Interpretation<QubitProp> {
    let mon = q(2, 1, &[1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0]);
    let unit = q(0, 1, &[1.0, 0.0]);
    let bcomon = q(1, 2, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    let bcounit = q(1, 0, &[1.0, 1.0]);
    Interpretation::new(QubitProp)
        .with("comon", mon.transpose())
        .with("counit", unit.transpose())
        .with("bmon", bcomon.transpose())
        .with("bunit", bcounit.transpose())
        .with("mon", mon)
        .with("unit", unit)
        .with("bcomon", bcomon)
        .with("bcounit", bcounit)
        .with("antipode", q(1, 1, &[1.0, 0.0, 0.0, 1.0]))
}
