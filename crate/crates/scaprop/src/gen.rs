//! Seeded random terms and values for property checks and `selftest`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scaprop_core::boxes::BoxValue;
use scaprop_core::linalg::{ExactMatrix, Rational};
use scaprop_core::scalable::multiplex;
use scaprop_core::semantics::{FinFn, SemiMatrix, Semiring};
use scaprop_core::{Diagram, GeneratorDecl, Param, ParamSort, Permutation, Signature, SizedObject};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed from `SCAPROP_SEED`, or `default` when unset or unparsable.
pub fn env_seed(default: u64) -> u64 {
    std::env::var("SCAPROP_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Bounds for random terms.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub layers: usize,
    pub max_size: usize,
    pub max_cables: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            layers: 8,
            max_size: 5,
            max_cables: 6,
        }
    }
}

fn obj(v: &[usize]) -> SizedObject {
    SizedObject::new(v.to_vec()).expect("positive sizes")
}

/// Folds composable parts into a randomly shaped `Seq` tree.
pub fn seq_tree(rng: &mut TestRng, dom: &SizedObject, parts: &[Diagram]) -> Diagram {
    match parts.len() {
        0 => Diagram::id(dom.clone()),
        1 => parts[0].clone(),
        n => {
            let k = rng.gen_range(1..n);
            let f = seq_tree(rng, dom, &parts[..k]);
            let g = seq_tree(rng, f.cod(), &parts[k..]);
            Diagram::seq(f, g).expect("parts compose")
        }
    }
}

pub fn random_object(rng: &mut TestRng, b: Bounds) -> SizedObject {
    let k = rng.gen_range(1..=b.max_cables);
    obj(&(0..k).map(|_| rng.gen_range(1..=b.max_size)).collect::<Vec<_>>())
}

// A random divider, gatherer or block symmetry applicable to `cables`, as a
// full-width layer. Updates `cables`.
fn wire_layer(rng: &mut TestRng, cables: &mut Vec<usize>, b: Bounds) -> Option<Diagram> {
    let n = cables.len();
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                let cands: Vec<usize> = (0..n).filter(|&i| cables[i] >= 2).collect();
                if n >= b.max_cables || cands.is_empty() {
                    continue;
                }
                let i = *cands.choose(rng).unwrap();
                let s = cables[i];
                let d = Diagram::layer(&obj(&cables[..i]), Diagram::div(s - 1).unwrap(), &obj(&cables[i + 1..]));
                cables.splice(i..=i, [1, s - 1]);
                return Some(d);
            }
            1 => {
                let cands: Vec<usize> = (0..n.saturating_sub(1))
                    .filter(|&i| cables[i] == 1 && cables[i + 1] < b.max_size)
                    .collect();
                if cands.is_empty() {
                    continue;
                }
                let i = *cands.choose(rng).unwrap();
                let s = cables[i + 1];
                let d = Diagram::layer(&obj(&cables[..i]), Diagram::gat(s).unwrap(), &obj(&cables[i + 2..]));
                cables.splice(i..=i + 1, [s + 1]);
                return Some(d);
            }
            2 if n >= 1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(i..=n);
                let k = rng.gen_range(j..=n);
                let d = Diagram::layer(
                    &obj(&cables[..i]),
                    Diagram::sym(obj(&cables[i..j]), obj(&cables[j..k])),
                    &obj(&cables[k..]),
                );
                cables[i..k].rotate_left(j - i);
                return Some(d);
            }
            _ => return Some(Diagram::id(obj(cables))),
        }
    }
    None
}

/// A random wire term on `dom` with at most `b.layers` layers.
pub fn wire_term_on(rng: &mut TestRng, dom: &SizedObject, b: Bounds) -> Diagram {
    if b.layers >= 2 && dom.len() >= 2 && rng.gen_bool(0.25) {
        let cut = rng.gen_range(1..dom.len());
        let left = cut + b.max_cables.saturating_sub(dom.len()) / 2;
        let bl = Bounds {
            layers: b.layers / 2,
            max_cables: left,
            ..b
        };
        let br = Bounds {
            max_cables: b.max_cables.max(dom.len()) - left,
            ..bl
        };
        let f = wire_term_on(rng, &dom.slice(0, cut), bl);
        let g = wire_term_on(rng, &dom.slice(cut, dom.len()), br);
        return Diagram::par(f, g);
    }
    let mut cables = dom.sizes().to_vec();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(0..=b.layers) {
        if let Some(l) = wire_layer(rng, &mut cables, b) {
            parts.push(l);
        }
    }
    seq_tree(rng, dom, &parts)
}

pub fn wire_term(rng: &mut TestRng, b: Bounds) -> Diagram {
    let dom = random_object(rng, b);
    wire_term_on(rng, &dom, b)
}

fn monochromatic_gens(sig: &Signature) -> Vec<GeneratorDecl> {
    sig.generators().filter(|g| g.is_monochromatic()).cloned().collect()
}

pub fn random_param(rng: &mut TestRng, sort: ParamSort) -> Vec<Param> {
    let q = |rng: &mut TestRng| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
    match sort {
        ParamSort::None => Vec::new(),
        ParamSort::Rational => vec![Param::Rational(q(rng))],
        ParamSort::Complex => vec![Param::Complex(q(rng), q(rng))],
        ParamSort::Token => {
            let tokens = ["a", "pi", "x_1", "two words", "q\"uote", "7"];
            vec![Param::Token(tokens.choose(rng).unwrap().to_string())]
        }
    }
}

/// A random term over the monochromatic generators of `sig` with domain
/// `inputs` simple wires and width at most `max_width`.
pub fn base_term(rng: &mut TestRng, sig: &Signature, inputs: usize, layers: usize, max_width: usize) -> Diagram {
    let gens = monochromatic_gens(sig);
    if layers >= 2 && inputs >= 2 && rng.gen_bool(0.2) {
        let cut = rng.gen_range(1..inputs);
        let f = base_term(rng, sig, cut, layers / 2, max_width / 2 + 1);
        let g = base_term(rng, sig, inputs - cut, layers / 2, max_width / 2 + 1);
        return Diagram::par(f, g);
    }
    let mut w = inputs;
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(0..=layers) {
        let choice = rng.gen_range(0..gens.len() + 2);
        if choice == gens.len() {
            if w >= 2 {
                let i = rng.gen_range(0..w - 1);
                let swap = Diagram::sym(SizedObject::simple(1), SizedObject::simple(1));
                parts.push(Diagram::layer(&SizedObject::simple(i), swap, &SizedObject::simple(w - i - 2)));
            }
            continue;
        }
        if choice > gens.len() {
            if rng.gen_bool(0.3) {
                parts.push(Diagram::simple_id(w));
            }
            continue;
        }
        let g = &gens[choice];
        let (n, m) = (g.dom.len(), g.cod.len());
        if n > w || w - n + m > max_width {
            continue;
        }
        let i = rng.gen_range(0..=w - n);
        let d = g.diagram(random_param(rng, g.param)).expect("params of the right sort");
        parts.push(Diagram::layer(&SizedObject::simple(i), d, &SizedObject::simple(w - i - n)));
        w = w - n + m;
    }
    seq_tree(rng, &SizedObject::simple(inputs), &parts)
}

/// A random scalable-language term: wire layers, generators on simple wires
/// and multiplexed generators on equal-size cables.
pub fn sl_term(rng: &mut TestRng, sig: &Signature, b: Bounds) -> Diagram {
    let gens = monochromatic_gens(sig);
    let dom = random_object(rng, Bounds { max_cables: 4, ..b });
    let mut cables = dom.sizes().to_vec();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(0..=b.layers) {
        if rng.gen_bool(0.5) {
            if let Some(l) = wire_layer(rng, &mut cables, b) {
                parts.push(l);
            }
            continue;
        }
        let g = gens.choose(rng).unwrap();
        let (n, m) = (g.dom.len(), g.cod.len());
        let k = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=b.max_size.min(3)) };
        if cables.len() - n.min(cables.len()) + m > b.max_cables {
            continue;
        }
        let starts: Vec<usize> = (0..=cables.len().saturating_sub(n))
            .filter(|&i| i + n <= cables.len() && cables[i..i + n].iter().all(|&s| s == k))
            .collect();
        let Some(&i) = starts.choose(rng) else { continue };
        let base = g.diagram(random_param(rng, g.param)).expect("params of the right sort");
        let op = if k == 1 { base } else { multiplex(&base, k).expect("simple generator") };
        parts.push(Diagram::layer(&obj(&cables[..i]), op, &obj(&cables[i + n..])));
        cables.splice(i..i + n, std::iter::repeat(k).take(m));
    }
    seq_tree(rng, &dom, &parts)
}

pub fn random_permutation(rng: &mut TestRng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 0..n")
}

pub fn random_function(rng: &mut TestRng, n: usize, m: usize) -> FinFn {
    let m = if n > 0 { m.max(1) } else { m };
    FinFn::new((0..n).map(|_| rng.gen_range(0..m)).collect(), m).expect("images below m")
}

/// A `rows × cols` integer matrix with entries in `lo..=hi`.
pub fn int_matrix(rng: &mut TestRng, rows: usize, cols: usize, lo: i64, hi: i64) -> ExactMatrix {
    let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(lo..=hi)).collect();
    ExactMatrix::from_i64(rows, cols, &data).expect("rows * cols entries")
}

/// A box value of backend `kind` (`perm`, `fun` or a semiring name) with
/// `n` inputs. Permutations have as many outputs as inputs.
pub fn box_value(rng: &mut TestRng, kind: &str, n: usize, m: usize) -> BoxValue {
    match kind {
        "perm" => BoxValue::Perm(random_permutation(rng, n)),
        "fun" => BoxValue::Fun(random_function(rng, n, m)),
        name => {
            let s = Semiring::from_name(name).expect("known semiring");
            let (lo, hi) = match s {
                Semiring::Int | Semiring::Rational | Semiring::F2 => (-3, 3),
                _ => (0, 3),
            };
            let a = int_matrix(rng, m, n, lo, hi);
            BoxValue::Mat(SemiMatrix::new(s, a).expect("integer entries"))
        }
    }
}

/// Terms mixing everything the parser accepts: wire layers, generators with
/// parameters, multiplexed generators and boxes.
pub fn dsl_term(rng: &mut TestRng, sig: &Signature, b: Bounds) -> Diagram {
    let mut d = sl_term(rng, sig, b);
    for _ in 0..rng.gen_range(0..=2) {
        let cables = d.cod().sizes().to_vec();
        if cables.is_empty() {
            break;
        }
        let i = rng.gen_range(0..cables.len());
        let n = cables[i];
        let kinds = ["perm", "fun", "nat", "int", "bool", "sat2", "f2", "rational"];
        let kind = *kinds.choose(rng).unwrap();
        let m = if kind == "perm" { n } else { rng.gen_range(1..=3) };
        let bx = Diagram::boxed(box_value(rng, kind, n, m));
        let layer = Diagram::layer(&obj(&cables[..i]), bx, &obj(&cables[i + 1..]));
        d = Diagram::seq(d, layer).expect("layer fits");
    }
    d
}

/// Wire layers interleaved with boxes of backend `kind` on single cables.
pub fn box_term(rng: &mut TestRng, kind: &str, b: Bounds) -> Diagram {
    let dom = random_object(rng, Bounds { max_cables: 4, ..b });
    let mut cables = dom.sizes().to_vec();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(1..=b.layers) {
        if rng.gen_bool(0.5) {
            if let Some(l) = wire_layer(rng, &mut cables, b) {
                parts.push(l);
            }
            continue;
        }
        if cables.is_empty() {
            continue;
        }
        let i = rng.gen_range(0..cables.len());
        let n = cables[i];
        let m = if kind == "perm" { n } else { rng.gen_range(1..=b.max_size.min(3)) };
        let bx = Diagram::boxed(box_value(rng, kind, n, m));
        parts.push(Diagram::layer(&obj(&cables[..i]), bx, &obj(&cables[i + 1..])));
        cables[i] = m;
    }
    seq_tree(rng, &dom, &parts)
}
