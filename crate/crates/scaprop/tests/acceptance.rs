//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Seeds are fixed per criterion; `SCAPROP_SEED` shifts all of them.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

use scaprop::gen::{self, Bounds, TestRng};
use scaprop::{dsl, render};
use scaprop_core::boxes::{boxed_normal_form, box_diagram, matrix_to_diagram, unwrap, BoxValue, Flavor};
use scaprop_core::language::{check_translation_soundness, Translation};
use scaprop_core::linalg::{rat, subspace_equal, ExactMatrix, F2Matrix, Rational};
use scaprop_core::scalable::{
    embed, multiplex, reconstitute, scaled_evaluate, sl_equal, strip, structure_normal_form,
};
use scaprop_core::semantics::arrows::{cospan_diagram, span_diagram, zw_canonicalize};
use scaprop_core::semantics::{
    catalog, relation_from_cospan, relation_from_span, span_cospan_condition, FinFn, Interpretation, MatProp,
    QubitMap, QubitProp, SemiMatrix, Semiring,
};
use scaprop_core::wire::{
    gather_all, normalize_wiring, regroup, rewrite_steps, split_all, trace, transposition_network,
    wiring_from_normal_form, WiringNormalForm,
};
use scaprop_core::{languages, Diagram, Error, GeneratorDecl, ParamSort, Permutation, Signature, SizedObject};

type Outcome = Result<String, String>;

fn seed(n: u64) -> u64 {
    gen::env_seed(0).wrapping_mul(1_000).wrapping_add(n)
}

fn rng(n: u64) -> TestRng {
    gen::rng(seed(n))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: scaprop_core::Result<T>, ctx: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", ctx()))
}

fn gen_d(name: &str, n: usize, m: usize) -> Diagram {
    Diagram::generator(name, Vec::new(), SizedObject::simple(n), SizedObject::simple(m))
}

fn seq(parts: &[Diagram]) -> Diagram {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, p| Diagram::seq(acc, p.clone()).expect("composable"))
}

fn bialgebra_sig() -> Signature {
    languages::bialgebra().signature().clone()
}

// 1 -------------------------------------------------------------------------

fn rewiring() -> Outcome {
    let mut rng = rng(1);
    let start = Instant::now();
    let mut redexes = 0;
    for _ in 0..1000 {
        let d = gen::wire_term(&mut rng, Bounds::default());
        let nf = core(normalize_wiring(&d), || format!("normalize {d}"))?;
        let rebuilt = wiring_from_normal_form(&nf);
        ensure(rebuilt.dom() == d.dom() && rebuilt.cod() == d.cod(), || format!("retyped {d}"))?;
        let again = core(normalize_wiring(&rebuilt), || format!("renormalize {rebuilt}"))?;
        ensure(again == nf, || format!("round trip of {d}"))?;
        for step in rewrite_steps(&d) {
            redexes += 1;
            let p = core(trace(&step), || format!("trace {step}"))?;
            ensure(p == nf.perm && step.dom() == d.dom() && step.cod() == d.cod(), || {
                format!("rewrite {d} => {step} changed the permutation")
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("1000 terms, {redexes} redex applications, {:.2}s", elapsed.as_secs_f64()))
}

// 2 -------------------------------------------------------------------------

fn is_boundary_mismatch<T>(r: scaprop_core::Result<T>) -> bool {
    matches!(r, Err(Error::BoundaryMismatch { .. }))
}

fn global_size_guard() -> Outcome {
    for n in 1..=5 {
        for d in [Diagram::div(n).unwrap(), Diagram::gat(n).unwrap()] {
            ensure(d.dom().global_size() == d.cod().global_size(), || format!("{d}"))?;
        }
        for m in 1..=5 {
            let s = Diagram::sym(SizedObject::cable(n), SizedObject::cable(m));
            ensure(s.dom().global_size() == s.cod().global_size(), || format!("{s}"))?;
        }
    }
    let mut rng = rng(2);
    let mut negatives = 0;
    for _ in 0..1000 {
        let f = gen::wire_term(&mut rng, Bounds::default());
        let g = gen::wire_term(&mut rng, Bounds::default());
        ensure(f.dom().global_size() == f.cod().global_size(), || format!("{f}"))?;
        if f.cod().global_size() != g.dom().global_size() {
            negatives += 1;
            ensure(is_boundary_mismatch(Diagram::seq(f.clone(), g.clone())), || {
                format!("{f} ; {g} was accepted")
            })?;
        }
    }
    let directed = [
        (Diagram::div(2).unwrap(), Diagram::gat(1).unwrap()),
        (Diagram::id(SizedObject::cable(3)), Diagram::gat(1).unwrap()),
        (Diagram::gat(1).unwrap(), Diagram::div(2).unwrap()),
        (
            Diagram::sym(SizedObject::cable(1), SizedObject::cable(2)),
            Diagram::id(SizedObject::simple(3)),
        ),
    ];
    for (f, g) in directed {
        ensure(is_boundary_mismatch(Diagram::seq(f.clone(), g.clone())), || format!("{f} ; {g}"))?;
        negatives += 1;
    }
    let perm = Permutation::identity(3);
    ensure(
        WiringNormalForm::new(SizedObject::cable(3), perm, SizedObject::cable(2)).is_err(),
        || "normal form 3 -> 2 accepted".into(),
    )?;
    Ok(format!("1000 terms size-preserving, {negatives} mismatched compositions rejected"))
}

// 3 -------------------------------------------------------------------------

fn structure_theorem() -> Outcome {
    let sig = bialgebra_sig();
    let nat = catalog::nat();
    let mut rng = rng(3);
    for _ in 0..500 {
        let d = gen::sl_term(&mut rng, &sig, Bounds::default());
        let nf = core(structure_normal_form(&d), || format!("normal form of {d}"))?;
        let r = core(reconstitute(&nf), || format!("reconstitute {d}"))?;
        ensure(r.dom() == d.dom() && r.cod() == d.cod(), || format!("retyped {d}"))?;
        let nf2 = core(structure_normal_form(&r), || format!("normal form of {r}"))?;
        ensure(nf2 == nf, || format!("not idempotent on {d}"))?;
        let (sd, sr) = (strip(&d).unwrap(), core(strip(&r), || format!("strip {r}"))?);
        ensure(sd == sr, || format!("strip {d} = {sd} but strip of normal form = {sr}"))?;
        let vd = core(scaled_evaluate(&d, &nat), || format!("evaluate {d}"))?;
        let vr = core(scaled_evaluate(&r, &nat), || format!("evaluate {r}"))?;
        ensure(vd.dom == vr.dom && vd.cod == vr.cod && vd.value == vr.value, || {
            format!("value of {d}: {} vs {}", vd.value, vr.value)
        })?;
    }
    Ok("500 terms over the bialgebra signature".into())
}

// 4 -------------------------------------------------------------------------

fn strip_embed() -> Outcome {
    let sig = bialgebra_sig();
    let mut rng = rng(4);
    for _ in 0..500 {
        let inputs = rng.gen_range(0..=3);
        let w = gen::base_term(&mut rng, &sig, inputs, 8, 6);
        let e = core(embed(&w), || format!("embed {w}"))?;
        let s = core(strip(&e), || format!("strip {e}"))?;
        ensure(s == w, || format!("strip(embed({w})) = {s}"))?;
    }
    Ok("500 base terms".into())
}

// 5 -------------------------------------------------------------------------

fn multiplex_functor() -> Outcome {
    let sig = bialgebra_sig();
    let nat = catalog::nat();
    let mut rng = rng(5);
    for k in 1..=4 {
        for _ in 0..200 {
            let a = rng.gen_range(0..=3);
            let g = gen::base_term(&mut rng, &sig, a, 5, 5);
            let h = gen::base_term(&mut rng, &sig, g.cod().len(), 5, 5);
            let gh = Diagram::seq(g.clone(), h.clone()).unwrap();
            let lhs = core(multiplex(&gh, k), || format!("multiplex {gh}"))?;
            let rhs = Diagram::seq(multiplex(&g, k).unwrap(), multiplex(&h, k).unwrap()).unwrap();
            ensure(core(sl_equal(&lhs, &rhs, &nat), || "sl_equal".into())?, || {
                format!("({g} ; {h})_{k} differs from {g}_{k} ; {h}_{k}")
            })?;
            let id = Diagram::simple_id(a);
            let id_k = core(multiplex(&id, k), || "multiplex identity".into())?;
            let expected = Diagram::id(SizedObject::repeated(a, k));
            ensure(core(sl_equal(&id_k, &expected, &nat), || "sl_equal".into())?, || {
                format!("identity on {a} wires scaled by {k}")
            })?;
        }
    }
    Ok("k = 1..4, 200 composable pairs each".into())
}

// 6 -------------------------------------------------------------------------

// Sends copy-major index j*n+i to cable-major index i*k+j.
fn shuffle_matrix(n: usize, k: usize) -> ExactMatrix {
    let mut q = ExactMatrix::zeros(n * k, n * k);
    for i in 0..n {
        for j in 0..k {
            q.set(i * k + j, j * n + i, rat(1));
        }
    }
    q
}

fn transversality() -> Outcome {
    let sig = bialgebra_sig();
    let nat = catalog::nat();
    let mut rng = rng(6);
    for _ in 0..200 {
        let inputs = rng.gen_range(0..=3);
        let g = gen::base_term(&mut rng, &sig, inputs, 6, 4);
        let k = rng.gen_range(1..=4);
        let gv = nat.evaluate(&g).unwrap();
        let (n, m) = (g.dom().len(), g.cod().len());
        let sum = (1..k).fold(gv.matrix().clone(), |acc, _| acc.direct_sum(gv.matrix()));
        let expected = shuffle_matrix(m, k)
            .mul(&sum)
            .unwrap()
            .mul(&shuffle_matrix(n, k).transpose())
            .unwrap();
        let stripped = core(strip(&multiplex(&g, k).unwrap()), || format!("strip {g}_{k}"))?;
        let got = core(nat.evaluate(&stripped), || format!("evaluate {stripped}"))?;
        ensure(got.matrix() == &expected, || format!("{g} scaled by {k}: {got} vs {expected}"))?;
    }
    Ok("200 generators' composites, k = 1..4".into())
}

// 7 -------------------------------------------------------------------------

const BOX_KINDS: [&str; 8] = ["perm", "fun", "nat", "int", "bool", "sat2", "f2", "rational"];

fn value_of_permutation(kind: &str, p: &Permutation) -> BoxValue {
    let n = p.len();
    match kind {
        "perm" => BoxValue::Perm(p.clone()),
        "fun" => BoxValue::Fun(FinFn::new(p.images().to_vec(), n).unwrap()),
        s => {
            let mut a = ExactMatrix::zeros(n, n);
            for i in 0..n {
                a.set(p.apply(i), i, rat(1));
            }
            BoxValue::Mat(SemiMatrix::new(Semiring::from_name(s).unwrap(), a).unwrap())
        }
    }
}

fn compose_values(f: &BoxValue, g: &BoxValue) -> BoxValue {
    match (f, g) {
        (BoxValue::Perm(p), BoxValue::Perm(q)) => BoxValue::Perm(p.then(q)),
        (BoxValue::Fun(p), BoxValue::Fun(q)) => {
            BoxValue::Fun(FinFn::new(p.images().iter().map(|&i| q.apply(i)).collect(), q.cod()).unwrap())
        }
        (BoxValue::Mat(a), BoxValue::Mat(b)) => {
            BoxValue::Mat(SemiMatrix::new(a.semiring(), b.matrix().mul(a.matrix()).unwrap()).unwrap())
        }
        _ => unreachable!("same kind"),
    }
}

fn tensor_values(f: &BoxValue, g: &BoxValue) -> BoxValue {
    match (f, g) {
        (BoxValue::Perm(p), BoxValue::Perm(q)) => BoxValue::Perm(p.tensor(q)),
        (BoxValue::Fun(p), BoxValue::Fun(q)) => {
            let images = p.images().iter().copied().chain(q.images().iter().map(|&i| i + p.cod()));
            BoxValue::Fun(FinFn::new(images.collect(), p.cod() + q.cod()).unwrap())
        }
        (BoxValue::Mat(a), BoxValue::Mat(b)) => {
            BoxValue::Mat(SemiMatrix::new(a.semiring(), a.matrix().direct_sum(b.matrix())).unwrap())
        }
        _ => unreachable!("same kind"),
    }
}

fn box_laws() -> Outcome {
    let mut rng = rng(7);
    let mut cases = 0;
    for kind in BOX_KINDS {
        for _ in 0..200 {
            let dims = |rng: &mut TestRng| {
                let n = rng.gen_range(0..=4);
                (n, if kind == "perm" { n } else { rng.gen_range(0..=4) })
            };
            // unwrap ∘ box = id
            let (n, m) = dims(&mut rng);
            let v = gen::box_value(&mut rng, kind, n, m);
            let back = core(unwrap(&box_diagram(v.clone())), || format!("unwrap {v}"))?;
            ensure(back == v, || format!("unwrap(box({v})) = {back}"))?;

            // Swap: a permutation box equals its wiring
            let n = rng.gen_range(1..=4);
            let p = gen::random_permutation(&mut rng, n);
            let pv = value_of_permutation(kind, &p);
            let wiring = Diagram::seq_trimmed(
                &SizedObject::cable(n),
                [split_all(n), transposition_network(&p), gather_all(n)],
            )
            .unwrap();
            let id_box = box_diagram(value_of_permutation(kind, &Permutation::identity(n)));
            let lhs = core(unwrap(&Diagram::seq(wiring, id_box).unwrap()), || "unwrap wiring".into())?;
            ensure(lhs == pv, || format!("swap law for {p} in {kind}: {lhs} vs {pv}"))?;

            // Comp
            let (a, b) = dims(&mut rng);
            let c = if kind == "perm" { b } else { rng.gen_range(0..=4) };
            let f = gen::box_value(&mut rng, kind, a, b);
            let g = gen::box_value(&mut rng, kind, f.arity().1, c);
            let fg = Diagram::seq(box_diagram(f.clone()), box_diagram(g.clone())).unwrap();
            let got = core(unwrap(&fg), || format!("unwrap {fg}"))?;
            ensure(got == compose_values(&f, &g), || format!("comp law for {f}, {g}: {got}"))?;

            // Tens
            let (a1, b1) = dims(&mut rng);
            let (a2, b2) = dims(&mut rng);
            let f = gen::box_value(&mut rng, kind, a1, b1);
            let g = gen::box_value(&mut rng, kind, a2, b2);
            let ((a1, b1), (a2, b2)) = (f.arity(), g.arity());
            let (c, cc) = (SizedObject::cable(a1), SizedObject::cable(a2));
            let (o, oo) = (SizedObject::cable(b1), SizedObject::cable(b2));
            let t = Diagram::seq_all(
                &SizedObject::cable(a1 + a2),
                [
                    regroup(&SizedObject::cable(a1 + a2), &c.concat(&cc)),
                    Diagram::par(box_diagram(f.clone()), box_diagram(g.clone())),
                    regroup(&o.concat(&oo), &SizedObject::cable(b1 + b2)),
                ],
            )
            .unwrap();
            let got = core(unwrap(&t), || format!("unwrap {t}"))?;
            ensure(got == tensor_values(&f, &g), || format!("tens law for {f}, {g}: {got}"))?;

            // boxed normal form
            let d = gen::box_term(&mut rng, kind, Bounds::default());
            let nf = core(boxed_normal_form(&d), || format!("boxed normal form of {d}"))?;
            let nf2 = core(boxed_normal_form(&nf), || format!("boxed normal form of {nf}"))?;
            ensure(nf2 == nf, || format!("not idempotent on {d}"))?;
            ensure(nf.dom() == d.dom() && nf.cod() == d.cod(), || format!("retyped {d}"))?;
            let (u, un) = (unwrap(&d).unwrap(), unwrap(&nf).unwrap());
            ensure(u == un, || format!("unwrap changed on {d}: {u} vs {un}"))?;
            cases += 1;
        }
    }
    Ok(format!("{} backends, {} cases of each law per backend", BOX_KINDS.len(), cases / BOX_KINDS.len()))
}

// 8 -------------------------------------------------------------------------

fn interleave(n: usize) -> Diagram {
    let images = (0..2 * n).map(|t| if t % 2 == 0 { t / 2 } else { n + t / 2 }).collect();
    transposition_network(&Permutation::new(images).unwrap())
}

fn copy_n(n: usize) -> Diagram {
    seq(&[Diagram::par_all((0..n).map(|_| gen_d("bcomon", 1, 2))), interleave(n)])
}

fn add_n(n: usize) -> Diagram {
    let inv = scaprop_core::wire::inverse_wiring(&interleave(n)).unwrap();
    seq(&[inv, Diagram::par_all((0..n).map(|_| gen_d("mon", 2, 1)))])
}

fn erase_n(n: usize) -> Diagram {
    Diagram::par_all((0..n).map(|_| gen_d("bcounit", 1, 0)))
}

fn zero_n(n: usize) -> Diagram {
    Diagram::par_all((0..n).map(|_| gen_d("unit", 0, 1)))
}

fn arrow_laws(interp: &Interpretation<MatProp>, a: &ExactMatrix, b: &ExactMatrix, flavor: Flavor) -> Result<(), String> {
    let (m, n) = (a.rows(), a.cols());
    let da = core(matrix_to_diagram(a, flavor), || format!("arrow of {a}"))?;
    let db = core(matrix_to_diagram(b, flavor), || format!("arrow of {b}"))?;
    let eval = |d: &Diagram| core(interp.evaluate(d), || format!("evaluate {d}"));
    let va = eval(&da)?;
    ensure(va.matrix() == a, || format!("arrow of {a} evaluates to {va}"))?;
    let copy_l = eval(&seq(&[da.clone(), copy_n(m)]))?;
    let copy_r = eval(&seq(&[copy_n(n), Diagram::par(da.clone(), da.clone())]))?;
    ensure(copy_l == copy_r, || format!("copy law for {a}"))?;
    let erase_l = eval(&seq(&[da.clone(), erase_n(m)]))?;
    ensure(erase_l == eval(&erase_n(n))?, || format!("erase law for {a}"))?;
    let zero_l = eval(&seq(&[zero_n(n), da.clone()]))?;
    ensure(zero_l == eval(&zero_n(m))?, || format!("zero law for {a}"))?;
    let sum = eval(&seq(&[copy_n(n), Diagram::par(da, db), add_n(m)]))?;
    let mut ab = a.clone();
    for i in 0..m {
        for j in 0..n {
            ab.set(i, j, a.get(i, j) + b.get(i, j));
        }
    }
    let expected = SemiMatrix::new(sum.semiring(), ab).unwrap();
    ensure(sum == expected, || format!("addition law for {a} + {b}: {sum}"))?;
    Ok(())
}

fn matrix_arrows() -> Outcome {
    let mut rng = rng(8);
    let nat = catalog::nat();
    let int = catalog::int();
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
        let a = gen::int_matrix(&mut rng, r, c, 0, 3);
        let b = gen::int_matrix(&mut rng, r, c, 0, 3);
        arrow_laws(&nat, &a, &b, Flavor::Bialgebra)?;
    }
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
        let a = gen::int_matrix(&mut rng, r, c, -3, 3);
        let b = gen::int_matrix(&mut rng, r, c, -3, 3);
        arrow_laws(&int, &a, &b, Flavor::Hopf)?;
    }
    Ok("200 N-matrices, 200 Z-matrices with antipode".into())
}

// 9 -------------------------------------------------------------------------

fn bialgebra_axioms() -> Vec<(&'static str, Diagram, Diagram)> {
    let id1 = Diagram::simple_id(1);
    let swap = Diagram::sym(SizedObject::simple(1), SizedObject::simple(1));
    vec![
        (
            "bimonoid",
            seq(&[gen_d("mon", 2, 1), gen_d("bcomon", 1, 2)]),
            seq(&[
                Diagram::par(gen_d("bcomon", 1, 2), gen_d("bcomon", 1, 2)),
                Diagram::par_all([id1.clone(), swap, id1.clone()]),
                Diagram::par(gen_d("mon", 2, 1), gen_d("mon", 2, 1)),
            ]),
        ),
        (
            "unit-copy",
            seq(&[gen_d("unit", 0, 1), gen_d("bcomon", 1, 2)]),
            Diagram::par(gen_d("unit", 0, 1), gen_d("unit", 0, 1)),
        ),
        (
            "multiply-erase",
            seq(&[gen_d("mon", 2, 1), gen_d("bcounit", 1, 0)]),
            Diagram::par(gen_d("bcounit", 1, 0), gen_d("bcounit", 1, 0)),
        ),
        (
            "unit-erase",
            seq(&[gen_d("unit", 0, 1), gen_d("bcounit", 1, 0)]),
            Diagram::id(SizedObject::empty()),
        ),
    ]
}

fn qubit_axioms(name: &str, interp: &Interpretation<QubitProp>, failures: &mut Vec<String>) {
    for (law, lhs, rhs) in bialgebra_axioms() {
        let (l, r) = (interp.evaluate(&lhs).unwrap(), interp.evaluate(&rhs).unwrap());
        if !l.approx_eq(&r) {
            failures.push(format!("{name} {law}: {l} vs {r}"));
        }
    }
}

fn bialgebra_hopf() -> Outcome {
    let mut failures = Vec::new();
    let nat = catalog::nat();
    for (law, lhs, rhs) in bialgebra_axioms() {
        let (l, r) = (nat.evaluate(&lhs).unwrap(), nat.evaluate(&rhs).unwrap());
        if l != r {
            failures.push(format!("nat {law}: {l} vs {r}"));
        }
    }
    qubit_axioms("ZH", &catalog::zh(), &mut failures);
    qubit_axioms("ZW", &catalog::zw(), &mut failures);
    qubit_axioms("ZX", &catalog::zx(), &mut failures);
    let int = catalog::int();
    let hopf = seq(&[
        gen_d("bcomon", 1, 2),
        Diagram::par(gen_d("antipode", 1, 1), Diagram::simple_id(1)),
        gen_d("mon", 2, 1),
    ]);
    let h = int.evaluate(&hopf).unwrap();
    let e = int.evaluate(&seq(&[gen_d("bcounit", 1, 0), gen_d("unit", 0, 1)])).unwrap();
    let zero = SemiMatrix::from_i64(Semiring::Int, 1, 1, &[0]).unwrap();
    if h != zero || e != zero {
        failures.push(format!("Hopf law in Z: {h}, unit after counit: {e}"));
    }
    if failures.is_empty() {
        Ok("4 axioms in nat, ZH, ZW, ZX; Hopf law gives (0)".into())
    } else {
        Err(failures.join("; "))
    }
}

// 10 ------------------------------------------------------------------------

fn exactly(q: &QubitMap, entries: &[f64]) -> bool {
    q.entries().len() == entries.len()
        && q.entries().iter().zip(entries).all(|(z, &x)| z.re == x && z.im == 0.0)
}

fn semiring_collapses() -> Outcome {
    let copy_mul = seq(&[gen_d("bcomon", 1, 2), gen_d("mon", 2, 1)]);
    let copy3_mul3 = seq(&[
        gen_d("bcomon", 1, 2),
        Diagram::par(gen_d("bcomon", 1, 2), Diagram::simple_id(1)),
        Diagram::par(gen_d("mon", 2, 1), Diagram::simple_id(1)),
        gen_d("mon", 2, 1),
    ]);
    let erase_unit = seq(&[gen_d("bcounit", 1, 0), gen_d("unit", 0, 1)]);
    let zh = catalog::zh().evaluate(&copy_mul).unwrap();
    ensure(exactly(&zh, &[1.0, 0.0, 0.0, 1.0]), || format!("ZH 2=1: {zh}"))?;
    let zw = catalog::zw();
    let (two, three) = (zw.evaluate(&copy_mul).unwrap(), zw.evaluate(&copy3_mul3).unwrap());
    ensure(exactly(&two, &[1.0, 0.0, 0.0, 0.0]), || format!("ZW 2-fold: {two}"))?;
    ensure(exactly(&three, &[1.0, 0.0, 0.0, 0.0]), || format!("ZW 3-fold: {three}"))?;
    let zx = catalog::zx();
    let (cm, eu) = (zx.evaluate(&copy_mul).unwrap(), zx.evaluate(&erase_unit).unwrap());
    ensure(exactly(&cm, &[1.0, 1.0, 0.0, 0.0]), || format!("ZX 2=0: {cm}"))?;
    ensure(exactly(&eu, &[1.0, 1.0, 0.0, 0.0]), || format!("ZX unit after counit: {eu}"))?;
    Ok("ZH 2=1, ZW 2=3, ZX 2=0".into())
}

// 11 ------------------------------------------------------------------------

fn zw_quotient() -> Outcome {
    let zw = catalog::zw();
    let mut rng = rng(11);
    let mut collapsed = 0;
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = SemiMatrix::new(Semiring::Sat2, gen::int_matrix(&mut rng, r, c, 0, 2)).unwrap();
        let canon = zw_canonicalize(&a).unwrap();
        if canon != a {
            collapsed += 1;
        }
        let va = zw.evaluate(&matrix_to_diagram(a.matrix(), Flavor::Bialgebra).unwrap()).unwrap();
        let vc = zw.evaluate(&matrix_to_diagram(canon.matrix(), Flavor::Bialgebra).unwrap()).unwrap();
        ensure(va.approx_eq(&vc), || format!("ZW arrows of {a} and {canon}: {va} vs {vc}"))?;
    }
    Ok(format!("100 matrices, {collapsed} changed by the column collapse"))
}

// 12 ------------------------------------------------------------------------

fn split_columns(m: &ExactMatrix, at: usize) -> (ExactMatrix, ExactMatrix) {
    let take = |lo: usize, hi: usize| {
        let rows = (0..m.rows()).map(|i| m.row(i)[lo..hi].to_vec()).collect();
        ExactMatrix::from_rows(hi - lo, rows).unwrap()
    };
    (take(0, at), take(at, m.cols()))
}

// Independent check of Im(C;D) = Ker[A | -B]: every spanning vector
// satisfies A x = B y, and the dimensions agree.
fn relations_agree(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> bool {
    let cd = c.vstack(d).unwrap();
    let (n, p) = (c.rows(), c.cols());
    for z in 0..p {
        let x: Vec<Rational> = (0..n).map(|i| cd.get(i, z).clone()).collect();
        let y: Vec<Rational> = (n..cd.rows()).map(|i| cd.get(i, z).clone()).collect();
        for r in 0..a.rows() {
            let ax: Rational = (0..n).map(|j| a.get(r, j) * &x[j]).sum();
            let by: Rational = (0..y.len()).map(|j| b.get(r, j) * &y[j]).sum();
            if ax != by {
                return false;
            }
        }
    }
    let kernel_dim = a.cols() + b.cols() - a.hstack(&b.neg()).unwrap().rank();
    cd.rank() == kernel_dim
}

fn perturb(rng: &mut TestRng, ms: &mut [ExactMatrix; 4]) {
    let candidates: Vec<usize> = (0..4).filter(|&i| ms[i].rows() * ms[i].cols() > 0).collect();
    let t = *candidates.choose(rng).expect("some leg is non-empty");
    let (i, j) = (rng.gen_range(0..ms[t].rows()), rng.gen_range(0..ms[t].cols()));
    let delta = if rng.gen_bool(0.5) { 1 } else { -1 };
    let v = ms[t].get(i, j) + rat(delta);
    ms[t].set(i, j, v);
}

fn span_cospan() -> Outcome {
    let mut rng = rng(12);
    let (mut flips, mut kept) = (0, 0);
    for _ in 0..100 {
        let total = rng.gen_range(1..=6);
        let n = rng.gen_range(0..=total);
        let m = total - n;
        let p = rng.gen_range(0..=3);
        let c = gen::int_matrix(&mut rng, n, p, -2, 2);
        let d = gen::int_matrix(&mut rng, m, p, -2, 2);
        let span = relation_from_span(&c, &d).unwrap();
        let ann = span.space().annihilator();
        let (a, b_neg) = split_columns(ann.basis(), n);
        let b = b_neg.neg();
        let cospan = relation_from_cospan(&a, &b).unwrap();
        ensure(subspace_equal(span.space(), cospan.space()).unwrap(), || {
            format!("built instance C={c} D={d} A={a} B={b} differs")
        })?;
        ensure(span_cospan_condition(&a, &b, &c, &d).unwrap(), || "condition false on built instance".into())?;
        ensure(relations_agree(&a, &b, &c, &d), || "oracle rejects built instance".into())?;

        let mut ms = [a, b, c, d];
        perturb(&mut rng, &mut ms);
        let [a, b, c, d] = ms;
        let cond = span_cospan_condition(&a, &b, &c, &d).unwrap();
        let equal = subspace_equal(
            relation_from_span(&c, &d).unwrap().space(),
            relation_from_cospan(&a, &b).unwrap().space(),
        )
        .unwrap();
        let oracle = relations_agree(&a, &b, &c, &d);
        ensure(equal == cond && cond == oracle, || {
            format!("perturbed A={a} B={b} C={c} D={d}: equal {equal}, condition {cond}, oracle {oracle}")
        })?;
        if cond {
            kept += 1;
        } else {
            flips += 1;
        }
    }
    Ok(format!("100 instances; perturbation flipped {flips}, kept {kept}"))
}

// 13 ------------------------------------------------------------------------

fn bits(v: usize, width: usize) -> Vec<u8> {
    (0..width).map(|i| ((v >> (width - 1 - i)) & 1) as u8).collect()
}

fn index(v: &[u8]) -> usize {
    v.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

fn f2(m: &F2Matrix) -> ExactMatrix {
    let data: Vec<i64> = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| m.get(i, j) as i64))
        .collect();
    ExactMatrix::from_i64(m.rows(), m.cols(), &data).unwrap()
}

fn random_f2(rng: &mut TestRng, rows: usize, cols: usize) -> F2Matrix {
    let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(0..=1)).collect();
    F2Matrix::new(rows, cols, &data).unwrap()
}

// Σ_z |Dz⟩⟨Cz|
fn span_oracle(c: &F2Matrix, d: &F2Matrix) -> QubitMap {
    let (n, m, p) = (c.rows(), d.rows(), c.cols());
    let mut data = vec![Complex64::new(0.0, 0.0); (1 << m) * (1 << n)];
    for z in 0..1usize << p {
        let z = bits(z, p);
        data[index(&d.apply(&z)) * (1 << n) + index(&c.apply(&z))] += 1.0;
    }
    QubitMap::new(n, m, data).unwrap()
}

// Σ_{Ax=By} |y⟩⟨x|
fn cospan_oracle(a: &F2Matrix, b: &F2Matrix) -> QubitMap {
    let (n, m) = (a.cols(), b.cols());
    let mut data = vec![Complex64::new(0.0, 0.0); (1 << m) * (1 << n)];
    for x in 0..1usize << n {
        for y in 0..1usize << m {
            if a.apply(&bits(x, n)) == b.apply(&bits(y, m)) {
                data[y * (1 << n) + x] += 1.0;
            }
        }
    }
    QubitMap::new(n, m, data).unwrap()
}

fn scaled_zx() -> Outcome {
    let zx = catalog::zx();
    let mut rng = rng(13);
    let (mut holds, mut with_kernel, mut twice) = (0, 0, 0);
    let mut first_failure = None;
    for _ in 0..50 {
        let total = rng.gen_range(1..=5);
        let n = rng.gen_range(0..=total);
        let m = total - n;
        let p = rng.gen_range(0..=3);
        let c = random_f2(&mut rng, n, p);
        let d = random_f2(&mut rng, m, p);
        let cd = c.vstack(&d).unwrap();
        let ab = cd.transpose().kernel();
        let r = ab.rows();
        let pick = |lo: usize, hi: usize| {
            let mut out = F2Matrix::zeros(r, hi - lo);
            for i in 0..r {
                for j in lo..hi {
                    out.set(i, j - lo, ab.get(i, j));
                }
            }
            out
        };
        let (a, b) = (pick(0, n), pick(n, n + m));
        let k = cd.kernel_dim();

        let span = core(zx.evaluate(&span_diagram(&f2(&c), &f2(&d)).unwrap()), || "span value".into())?;
        let cospan = core(zx.evaluate(&cospan_diagram(&f2(&a), &f2(&b)).unwrap()), || "cospan value".into())?;
        ensure(span.approx_eq(&span_oracle(&c, &d)), || format!("span of C={c}, D={d} misses its oracle"))?;
        ensure(cospan.approx_eq(&cospan_oracle(&a, &b)), || {
            format!("cospan of A={a}, B={b} misses its oracle")
        })?;

        let claimed = cospan.scale(Complex64::new(0.5f64.sqrt().powi(k as i32), 0.0));
        if k > 0 {
            with_kernel += 1;
        }
        if span.approx_eq(&claimed) {
            holds += 1;
        } else {
            if span.approx_eq(&cospan.scale(Complex64::new(2f64.powi(k as i32), 0.0))) {
                twice += 1;
            }
            first_failure.get_or_insert_with(|| format!("k={k}, C={c}, D={d}: span {span}, cospan {cospan}"));
        }
    }
    match first_failure {
        None => Ok(format!("50 instances, {with_kernel} with k > 0")),
        Some(f) => Err(format!(
            "span = (1/sqrt2)^k cospan in {holds}/50; the other {} (all k > 0) satisfy span = 2^k cospan: {twice}; first: {f}",
            50 - holds
        )),
    }
}

// 14 ------------------------------------------------------------------------

fn translations() -> Outcome {
    let check = |name: &str, ok: scaprop_core::Result<bool>| match ok {
        Ok(true) => Ok(()),
        other => Err(format!("identity translation of {name}: {other:?}")),
    };
    check("P", check_translation_soundness(&Translation::identity(&languages::permutations()), &catalog::perm()))?;
    check("M", check_translation_soundness(&Translation::identity(&languages::monoid()), &catalog::fun()))?;
    check("B", check_translation_soundness(&Translation::identity(&languages::bialgebra()), &catalog::nat()))?;
    check("H", check_translation_soundness(&Translation::identity(&languages::hopf()), &catalog::int()))?;
    check(
        "IH",
        check_translation_soundness(&Translation::identity(&languages::interacting_hopf()), &catalog::linrel()),
    )?;
    let hopf = languages::hopf();
    let mut map = BTreeMap::new();
    for g in hopf.signature().generators() {
        let image = if g.name == "antipode" {
            Diagram::simple_id(1)
        } else {
            Diagram::generator(g.name.clone(), Vec::new(), g.dom.clone(), g.cod.clone())
        };
        map.insert(g.name.clone(), image);
    }
    let t = Translation::new(hopf.clone(), hopf, map).unwrap();
    match check_translation_soundness(&t, &catalog::int()) {
        Ok(false) => Ok("identities on P, M, B, H, IH sound; antipode to identity rejected".into()),
        other => Err(format!("antipode to identity: {other:?}")),
    }
}

// 15 ------------------------------------------------------------------------

fn cli() -> Outcome {
    let mut sig = languages::interacting_hopf().signature().clone();
    for (name, sort) in [("phase", ParamSort::Complex), ("scalar", ParamSort::Rational), ("tag", ParamSort::Token)] {
        sig.declare(GeneratorDecl::simple(name, 1, 1).with_param(sort)).unwrap();
    }
    let mut rng = rng(15);
    for _ in 0..1000 {
        let d = gen::dsl_term(&mut rng, &sig, Bounds::default());
        let text = dsl::print(&d);
        match dsl::parse(&text, &sig) {
            Ok(back) => ensure(back == d, || format!("`{text}` reparsed as `{}`", dsl::print(&back)))?,
            Err(e) => return Err(format!("`{text}`: {e}")),
        }
    }

    let bin = env!("CARGO_BIN_EXE_scaprop");
    let cases: [(&[&str], i32); 6] = [
        (&["eq", "div<1> ; gat<1>", "id<2>", "--backend", "nat"], 0),
        (&["eq", "id<2>", "id<1,1>", "--backend", "nat"], 1),
        (&["eq", "undeclared", "id<1>", "--backend", "nat"], 2),
        (&["check", "mon ; (bcomon"], 3),
        (&["eval", "box<int>[-1]", "--backend", "nat"], 4),
        (&["eval", "mon", "--backend", "nosuch"], 5),
    ];
    for (args, code) in cases {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(code), || format!("{args:?} exited with {:?}", out.status.code()))?;
    }

    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let ih = languages::interacting_hopf().signature().clone();
    for (file, expr) in [
        ("divider.dot", "div<2>"),
        ("bialgebra.dot", "mon ; bcomon"),
        ("interacting.dot", "div<1> ; antipode * comon ; id<1> * bmon ; gat<1>"),
    ] {
        let expected = std::fs::read_to_string(golden.join(file)).map_err(|e| e.to_string())?;
        let got = render::to_dot(&dsl::parse(expr, &ih).unwrap());
        ensure(got == expected, || format!("{file} differs"))?;
    }
    Ok("1000 round trips, exit codes 0-5, 3 golden dot files".into())
}

/// Criteria that fail with the stated model values; see the decisions ledger.
/// 9: the ZW multiplication followed by the shared counit is [1,1,1,0], not [1,1,1,1].
/// 13: the span value is 2^k times the cospan value, not (1/sqrt2)^k times.
/// The run exits non-zero if any other criterion fails or if one of these passes.
const KNOWN_RED: [usize; 2] = [9, 13];

fn main() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("rewiring", rewiring),
        ("global-size guard", global_size_guard),
        ("structure theorem", structure_theorem),
        ("strip after embed", strip_embed),
        ("multiplexing is functorial", multiplex_functor),
        ("transversality", transversality),
        ("box laws", box_laws),
        ("matrix arrows", matrix_arrows),
        ("bialgebra and Hopf axioms", bialgebra_hopf),
        ("semiring collapses", semiring_collapses),
        ("ZW column quotient", zw_quotient),
        ("span = cospan over Q", span_cospan),
        ("scaled ZX span/cospan", scaled_zx),
        ("translation soundness", translations),
        ("CLI", cli),
    ];
    let start = Instant::now();
    let (mut failed, mut surprises) = (Vec::new(), Vec::new());
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        let known = KNOWN_RED.contains(&id);
        match outcome {
            Ok(detail) => {
                println!("PASS {id:>2} {name}: {detail} [{secs:.2}s]");
                if known {
                    surprises.push(format!("{id} now passes"));
                }
            }
            Err(detail) => {
                failed.push(id);
                let tag = if known { " (known red)" } else { "" };
                println!("FAIL {id:>2} {name}{tag}: {detail} [{secs:.2}s]");
                if !known {
                    surprises.push(format!("{id} failed"));
                }
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed {failed:?} [{:.2}s]",
        criteria.len() - failed.len(),
        failed.len(),
        start.elapsed().as_secs_f64()
    );
    if !surprises.is_empty() {
        println!("acceptance: unexpected outcome: {}", surprises.join(", "));
        std::process::exit(1);
    }
}
