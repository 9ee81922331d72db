//! The standard graphical languages: permutations 𝒫, commutative monoids ℳ,
//! commutative bialgebras ℬ, Hopf algebras ℋ, interacting Hopf algebras ℐℋ,
//! and the wire calculus 𝒲.
//!
//! Generator names: `mon`, `unit` (white monoid), `bcomon`, `bcounit`
//! (black comonoid), `comon`, `counit` (white comonoid), `bmon`, `bunit`
//! (black monoid) and `antipode`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::Diagram;
use crate::language::{language_quotient, language_sum, opposite_language, Equation, GraphicalLanguage};
use crate::object::SizedObject;
use crate::signature::{Discipline, GeneratorDecl, Signature};

fn id(n: usize) -> Diagram {
    Diagram::simple_id(n)
}

fn sym() -> Diagram {
    Diagram::sym(SizedObject::simple(1), SizedObject::simple(1))
}

fn g(sig: &Signature, name: &str) -> Diagram {
    sig.gen(name, Vec::new()).expect("declared")
}

fn seq(parts: &[Diagram]) -> Diagram {
    Diagram::seq_all(parts[0].dom(), parts.iter().cloned()).expect("well typed")
}

fn eq(lhs: Diagram, rhs: Diagram) -> Equation {
    Equation::new(lhs, rhs).expect("equal types")
}

fn renaming(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|&(a, b)| (a.into(), b.into())).collect()
}

/// 𝒫: the empty monochromatic language, whose diagrams are permutations.
pub fn permutations() -> GraphicalLanguage {
    GraphicalLanguage::free(Signature::new(Discipline::Monochromatic))
}

/// ℳ: `mon : 2 → 1`, `unit : 0 → 1`, associative, unital, commutative.
pub fn monoid() -> GraphicalLanguage {
    let sig = Signature::from_decls(
        Discipline::Monochromatic,
        [GeneratorDecl::simple("mon", 2, 1), GeneratorDecl::simple("unit", 0, 1)],
    )
    .expect("distinct names");
    let mon = g(&sig, "mon");
    let unit = g(&sig, "unit");
    let equations = vec![
        eq(
            seq(&[Diagram::par(mon.clone(), id(1)), mon.clone()]),
            seq(&[Diagram::par(id(1), mon.clone()), mon.clone()]),
        ),
        eq(seq(&[Diagram::par(unit, id(1)), mon.clone()]), id(1)),
        eq(seq(&[sym(), mon.clone()]), mon),
    ];
    GraphicalLanguage::new(sig, equations).expect("equations typecheck")
}

/// ℳᵒᵖ with the black comonoid names `bcomon`, `bcounit`.
pub fn comonoid() -> GraphicalLanguage {
    opposite_language(&monoid(), &renaming(&[("mon", "bcomon"), ("unit", "bcounit")]))
        .expect("renaming is injective")
}

/// ℬ = ℳ + ℳᵒᵖ with the bialgebra, copy, co-copy and scalar laws.
pub fn bialgebra() -> GraphicalLanguage {
    let base = language_sum(&monoid(), &comonoid()).expect("same discipline");
    let sig = base.signature().clone();
    let (mon, unit, bcomon, bcounit) = (
        g(&sig, "mon"),
        g(&sig, "unit"),
        g(&sig, "bcomon"),
        g(&sig, "bcounit"),
    );
    let extra = vec![
        eq(
            seq(&[mon.clone(), bcomon.clone()]),
            seq(&[
                Diagram::par(bcomon.clone(), bcomon.clone()),
                Diagram::par(Diagram::par(id(1), sym()), id(1)),
                Diagram::par(mon.clone(), mon.clone()),
            ]),
        ),
        eq(seq(&[unit.clone(), bcomon]), Diagram::par(unit.clone(), unit.clone())),
        eq(seq(&[mon, bcounit.clone()]), Diagram::par(bcounit.clone(), bcounit.clone())),
        eq(seq(&[unit, bcounit]), Diagram::id(SizedObject::empty())),
    ];
    language_quotient(&base, extra).expect("equations typecheck")
}

fn antipode_language() -> GraphicalLanguage {
    GraphicalLanguage::free(
        Signature::from_decls(Discipline::Monochromatic, [GeneratorDecl::simple("antipode", 1, 1)])
            .expect("single generator"),
    )
}

/// ℋ = ℬ + antipode, with the Hopf law.
pub fn hopf() -> GraphicalLanguage {
    let base = language_sum(&bialgebra(), &antipode_language()).expect("same discipline");
    let sig = base.signature().clone();
    let lhs = seq(&[
        g(&sig, "bcomon"),
        Diagram::par(g(&sig, "antipode"), id(1)),
        g(&sig, "mon"),
    ]);
    let rhs = seq(&[g(&sig, "bcounit"), g(&sig, "unit")]);
    language_quotient(&base, vec![eq(lhs, rhs)]).expect("equation typechecks")
}

/// ℐℋ: ℬ, its opposite with the colours exchanged (`comon`, `counit`,
/// `bmon`, `bunit`), and the antipode. Equality in ℐℋ is decided in
/// linear relations, so only the bialgebra equations are listed.
pub fn interacting_hopf() -> GraphicalLanguage {
    let b = bialgebra();
    let op = opposite_language(
        &b,
        &renaming(&[
            ("mon", "comon"),
            ("unit", "counit"),
            ("bcomon", "bmon"),
            ("bcounit", "bunit"),
        ]),
    )
    .expect("renaming is injective");
    let both = language_sum(&b, &op).expect("same discipline");
    language_sum(&both, &antipode_language()).expect("same discipline")
}

/// 𝒟 (or 𝒢): the sized language with no generators. Dividers and
/// gatherers are built-in node kinds.
pub fn dividers() -> GraphicalLanguage {
    GraphicalLanguage::free(Signature::new(Discipline::Sized))
}

/// The expansion `δ_n ; γ_n = id` and elimination `γ_n ; δ_n = id` laws for n ≤ `max`.
pub fn wire_equations(max: usize) -> Vec<Equation> {
    let mut out = Vec::new();
    for n in 1..=max {
        let d = Diagram::div(n).expect("n > 0");
        let gt = Diagram::gat(n).expect("n > 0");
        out.push(eq(d.then(&gt).expect("typed"), Diagram::id(SizedObject::cable(n + 1))));
        out.push(eq(gt.then(&d).expect("typed"), Diagram::id(d.cod().clone())));
    }
    out
}

/// 𝒲 = (𝒟 + 𝒢)/(Exp, Elim), with the laws listed up to size `max`.
pub fn wire_calculus(max: usize) -> GraphicalLanguage {
    let pre = language_sum(&dividers(), &dividers()).expect("same discipline");
    language_quotient(&pre, wire_equations(max)).expect("wire equations typecheck")
}

/// Looks a language up by its short name: `P`, `M`, `Mop`, `B`, `H`, `IH`.
pub fn by_name(name: &str) -> Option<GraphicalLanguage> {
    Some(match name {
        "P" => permutations(),
        "M" => monoid(),
        "Mop" => comonoid(),
        "B" => bialgebra(),
        "H" => hopf(),
        "IH" => interacting_hopf(),
        _ => return None,
    })
}
