//! Graphviz output.
//!
//! Every generator, box, divider and gatherer becomes a node `nK`, numbered
//! in left-to-right term order. Boundary wires start at point nodes `inK`
//! and end at `outK`. Identities and symmetries only reroute wires. Edges
//! are labelled with the cable size and nodes at the same depth share a rank.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use scaprop_core::{Diagram, Node};

#[derive(Clone)]
struct End {
    node: String,
    size: usize,
    depth: usize,
}

#[derive(Default)]
struct Graph {
    nodes: Vec<(String, String)>,
    edges: Vec<(End, String)>,
    ranks: BTreeMap<usize, Vec<String>>,
}

impl Graph {
    fn op(&mut self, label: String, inputs: Vec<End>, outputs: &[usize]) -> Vec<End> {
        let id = format!("n{}", self.nodes.len());
        let depth = 1 + inputs.iter().map(|e| e.depth).max().unwrap_or(0);
        for e in inputs {
            self.edges.push((e, id.clone()));
        }
        self.nodes.push((id.clone(), label));
        self.ranks.entry(depth).or_default().push(id.clone());
        outputs
            .iter()
            .map(|&size| End {
                node: id.clone(),
                size,
                depth,
            })
            .collect()
    }

    fn walk(&mut self, d: &Diagram, inputs: Vec<End>) -> Vec<End> {
        match d.node() {
            Node::Id(_) => inputs,
            Node::Sym(a, _) => {
                let mut v = inputs;
                v.rotate_left(a.len());
                v
            }
            Node::Seq(f, g) => {
                let mid = self.walk(f, inputs);
                self.walk(g, mid)
            }
            Node::Par(f, g) => {
                let mut left = inputs;
                let right = left.split_off(f.dom().len());
                let mut out = self.walk(f, left);
                out.extend(self.walk(g, right));
                out
            }
            Node::Gen { .. } | Node::Box(_) | Node::Div(_) | Node::Gat(_) => {
                self.op(d.to_string(), inputs, d.cod().sizes())
            }
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// The diagram as a `digraph` in the dot language.
pub fn to_dot(d: &Diagram) -> String {
    let mut g = Graph::default();
    let inputs: Vec<End> = d
        .dom()
        .sizes()
        .iter()
        .enumerate()
        .map(|(i, &size)| End {
            node: format!("in{i}"),
            size,
            depth: 0,
        })
        .collect();
    let outputs = g.walk(d, inputs);

    let mut s = String::new();
    s.push_str("digraph diagram {\n  rankdir=LR;\n  node [shape=box];\n");
    for i in 0..d.dom().len() {
        writeln!(s, "  in{i} [shape=point];").unwrap();
    }
    for (id, label) in &g.nodes {
        writeln!(s, "  {id} [label={}];", quote(label)).unwrap();
    }
    for i in 0..d.cod().len() {
        writeln!(s, "  out{i} [shape=point];").unwrap();
    }
    for (from, to) in &g.edges {
        writeln!(s, "  {} -> {to} [label=\"{}\"];", from.node, from.size).unwrap();
    }
    for (i, e) in outputs.iter().enumerate() {
        writeln!(s, "  {} -> out{i} [label=\"{}\"];", e.node, e.size).unwrap();
    }
    if !d.dom().is_empty() {
        let ids: Vec<String> = (0..d.dom().len()).map(|i| format!("in{i}")).collect();
        writeln!(s, "  {{ rank=source; {}; }}", ids.join("; ")).unwrap();
    }
    for ids in g.ranks.values() {
        writeln!(s, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    if !d.cod().is_empty() {
        let ids: Vec<String> = (0..d.cod().len()).map(|i| format!("out{i}")).collect();
        writeln!(s, "  {{ rank=sink; {}; }}", ids.join("; ")).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Number of operation nodes and of edges (boundary edges included).
pub fn dot_counts(dot: &str) -> (usize, usize) {
    let nodes = dot
        .lines()
        .filter(|l| l.trim_start().starts_with('n') && l.contains("[label=") && !l.contains(" -> "))
        .count();
    let edges = dot.lines().filter(|l| l.contains(" -> ")).count();
    (nodes, edges)
}
