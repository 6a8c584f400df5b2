//! The truncated translation quiver `N(Γ, Λ^op)` with its principal-sequence
//! labels.

use std::fmt::Write;
use std::sync::Arc;

use preproj::rep::build_m;
use preproj::weyl::principal_reduced_criterion;
use preproj::{AdmissibleSeq, Quiver, Result};
use serde_json::{json, Value};

/// Node `(level, x)` of the component, labeled by `S_{level+1, x}`.
#[derive(Clone, Debug)]
pub struct Node {
    pub level: usize,
    pub vertex: usize,
    pub sequence: AdmissibleSeq,
    pub reduced: bool,
    /// `dim M(S)`, present exactly when the word is reduced.
    pub dims: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub nodes: Vec<Node>,
    /// One entry per arrow; parallel arrows repeat.
    pub arrows: Vec<((usize, usize), (usize, usize))>,
}

pub fn component(quiver: &Arc<Quiver>, levels: usize) -> Result<Component> {
    let mut nodes = Vec::new();
    for level in 0..levels {
        for x in 1..=quiver.n() {
            let sequence = AdmissibleSeq::principal(quiver, level + 1, x)?;
            let reduced = principal_reduced_criterion(&sequence)?;
            let dims = if reduced { Some(build_m(&sequence)?.dims().to_vec()) } else { None };
            nodes.push(Node { level, vertex: x, sequence, reduced, dims });
        }
    }
    let mut arrows = Vec::new();
    for level in 0..levels {
        for &(u, v) in quiver.arrows() {
            arrows.push(((level, v), (level, u)));
            if level + 1 < levels {
                arrows.push(((level, u), (level + 1, v)));
            }
        }
    }
    arrows.sort();
    Ok(Component { nodes, arrows })
}

fn node_id((level, x): (usize, usize)) -> String {
    format!("n{level}_{x}")
}

fn dims_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn export_component(quiver: &Arc<Quiver>, levels: usize) -> Result<String> {
    Ok(to_dot(&component(quiver, levels)?))
}

pub fn to_dot(c: &Component) -> String {
    let mut s = String::from("digraph component {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for node in &c.nodes {
        let mut label = format!("({},{})\\nS = {}", node.level, node.vertex, node.sequence);
        match &node.dims {
            Some(d) => write!(label, "\\nreduced\\ndim {}", dims_text(d)).unwrap(),
            None => label.push_str("\\nnot reduced"),
        }
        let style = if node.reduced { "" } else { ", style=dashed" };
        writeln!(s, "  {} [label=\"{label}\"{style}];", node_id((node.level, node.vertex))).unwrap();
    }
    for &(from, to) in &c.arrows {
        writeln!(s, "  {} -> {};", node_id(from), node_id(to)).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn to_text(c: &Component) -> String {
    let mut s = String::new();
    for node in &c.nodes {
        let status = match &node.dims {
            Some(d) => format!("reduced dim {}", dims_text(d)),
            None => "not reduced".to_string(),
        };
        writeln!(s, "({},{}) S = {} {status}", node.level, node.vertex, node.sequence).unwrap();
    }
    for &((a, x), (b, y)) in &c.arrows {
        writeln!(s, "({a},{x}) -> ({b},{y})").unwrap();
    }
    s
}

pub fn to_json(c: &Component) -> Value {
    let nodes: Vec<Value> = c
        .nodes
        .iter()
        .map(|n| {
            json!({
                "level": n.level,
                "vertex": n.vertex,
                "sequence": n.sequence.letters(),
                "reduced": n.reduced,
                "dims": n.dims,
            })
        })
        .collect();
    let arrows: Vec<Value> = c
        .arrows
        .iter()
        .map(|&((a, x), (b, y))| json!({ "from": [a, x], "to": [b, y] }))
        .collect();
    json!({ "nodes": nodes, "arrows": arrows })
}
