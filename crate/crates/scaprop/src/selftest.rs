//! `scaprop selftest`: a quick randomized run of the core consistency checks.

use std::io::Write;

use scaprop_core::boxes::{box_diagram, matrix_to_diagram, unwrap, Flavor};
use scaprop_core::languages;
use scaprop_core::scalable::{embed, multiplex, sl_equal, strip};
use scaprop_core::semantics::catalog;
use scaprop_core::wire::{normalize_wiring, rewrite_steps, trace, wiring_from_normal_form};
use scaprop_core::Diagram;

use crate::dsl;
use crate::gen::{self, Bounds, TestRng};

type Check = fn(&mut TestRng) -> Result<(), String>;

fn rewiring(rng: &mut TestRng) -> Result<(), String> {
    let d = gen::wire_term(rng, Bounds::default());
    let nf = normalize_wiring(&d).map_err(|e| e.to_string())?;
    let back = normalize_wiring(&wiring_from_normal_form(&nf)).map_err(|e| e.to_string())?;
    if back != nf {
        return Err(format!("round trip changed the normal form of {d}"));
    }
    for step in rewrite_steps(&d) {
        if trace(&step).map_err(|e| e.to_string())? != nf.perm {
            return Err(format!("rewrite of {d} changed its permutation"));
        }
    }
    Ok(())
}

fn strip_embed(rng: &mut TestRng) -> Result<(), String> {
    let sig = languages::bialgebra().signature().clone();
    let w = gen::base_term(rng, &sig, 2, 6, 5);
    let s = strip(&embed(&w).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if s != w {
        return Err(format!("strip(embed({w})) = {s}"));
    }
    Ok(())
}

fn multiplex_composition(rng: &mut TestRng) -> Result<(), String> {
    use rand::Rng;
    let sig = languages::bialgebra().signature().clone();
    let g = gen::base_term(rng, &sig, 2, 4, 4);
    let h = gen::base_term(rng, &sig, g.cod().len(), 4, 4);
    let k = rng.gen_range(1..=4);
    let gh = Diagram::seq(g.clone(), h.clone()).map_err(|e| e.to_string())?;
    let lhs = multiplex(&gh, k).map_err(|e| e.to_string())?;
    let rhs = Diagram::seq(
        multiplex(&g, k).map_err(|e| e.to_string())?,
        multiplex(&h, k).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    match sl_equal(&lhs, &rhs, &catalog::nat()) {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!("multiplex by {k} does not respect {g} ; {h}")),
        Err(e) => Err(e.to_string()),
    }
}

fn box_unwrap(rng: &mut TestRng) -> Result<(), String> {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let kind = *["perm", "fun", "nat", "int", "f2"].choose(rng).unwrap();
    let n = rng.gen_range(0..=4);
    let m = if kind == "perm" { n } else { rng.gen_range(0..=4) };
    let v = gen::box_value(rng, kind, n, m);
    let back = unwrap(&box_diagram(v.clone())).map_err(|e| e.to_string())?;
    if back != v {
        return Err(format!("unwrap(box({v})) = {back}"));
    }
    Ok(())
}

fn matrix_arrows(rng: &mut TestRng) -> Result<(), String> {
    use rand::Rng;
    let (r, c) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
    let a = gen::int_matrix(rng, r, c, 0, 3);
    let d = matrix_to_diagram(&a, Flavor::Bialgebra).map_err(|e| e.to_string())?;
    let v = catalog::nat().evaluate(&d).map_err(|e| e.to_string())?;
    if v.matrix() != &a {
        return Err(format!("arrow of {a} evaluates to {v}"));
    }
    Ok(())
}

fn dsl_round_trip(rng: &mut TestRng) -> Result<(), String> {
    let sig = languages::interacting_hopf().signature().clone();
    let d = gen::dsl_term(rng, &sig, Bounds::default());
    let text = dsl::print(&d);
    match dsl::parse(&text, &sig) {
        Ok(back) if back == d => Ok(()),
        Ok(back) => Err(format!("`{text}` reparsed as `{}`", dsl::print(&back))),
        Err(e) => Err(format!("`{text}`: {e}")),
    }
}

const CHECKS: [(&str, Check); 6] = [
    ("rewiring", rewiring),
    ("strip-embed", strip_embed),
    ("multiplex-composition", multiplex_composition),
    ("box-unwrap", box_unwrap),
    ("matrix-arrows", matrix_arrows),
    ("dsl-round-trip", dsl_round_trip),
];

/// Runs every check `count` times from `seed`. Returns 0 if all pass, 1 otherwise.
pub fn run(count: usize, seed: u64, out: &mut dyn Write) -> i32 {
    let mut failed = false;
    for (i, (name, check)) in CHECKS.iter().enumerate() {
        let mut rng = gen::rng(seed.wrapping_add(i as u64));
        let failure = (0..count).find_map(|_| check(&mut rng).err());
        let _ = match failure {
            None => writeln!(out, "ok    {name} ({count} cases, seed {seed})"),
            Some(msg) => {
                failed = true;
                writeln!(out, "FAIL  {name}: {msg}")
            }
        };
    }
    i32::from(failed)
}
