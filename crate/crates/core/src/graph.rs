//! Plumbing graphs: data model, text format, intersection matrix and shape.
//!
//! The text format is line oriented, `#` starts a comment:
//!
//! ```text
//! graph e8
//! vertex c euler=-2 genus=0
//! vertex a1 euler=-2 genus=0
//! edge c a1
//! arrow c
//! ```
//!
//! Repeating an `edge` line creates a multi-edge and `edge a a` a loop.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate vertex `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: unknown vertex `{id}`")]
    DanglingEndpoint { line: usize, id: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: String,
    pub euler: i64,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct PlumbingGraph {
    pub name: Option<String>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(String, String)>,
    pub arrows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", content = "nodes")]
pub enum ShapeClass {
    Chain,
    Star(String),
    Cycle,
    General(Vec<String>),
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn named(name: impl Into<String>) -> Self {
        PlumbingGraph { name: Some(name.into()), ..Self::default() }
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, euler: i64, genus: u32) -> &mut Self {
        self.vertices.push(Vertex { id: id.into(), euler, genus });
        self
    }

    pub fn add_edge(&mut self, a: impl Into<String>, b: impl Into<String>) -> &mut Self {
        self.edges.push((a.into(), b.into()));
        self
    }

    pub fn add_arrow(&mut self, v: impl Into<String>) -> &mut Self {
        self.arrows.push(v.into());
        self
    }

    /// Linear chain with Euler numbers `eulers`, ids `prefix0, prefix1, ...`.
    pub fn chain(prefix: &str, eulers: &[i64]) -> Self {
        let mut g = PlumbingGraph::new();
        for (i, &e) in eulers.iter().enumerate() {
            g.add_vertex(format!("{prefix}{i}"), e, 0);
            if i > 0 {
                g.add_edge(format!("{prefix}{}", i - 1), format!("{prefix}{i}"));
            }
        }
        g
    }

    /// Cycle with Euler numbers `eulers` in cyclic order (a loop when of
    /// length one, a double edge when of length two).
    pub fn cycle(prefix: &str, eulers: &[i64]) -> Self {
        let mut g = PlumbingGraph::chain(prefix, eulers);
        let k = eulers.len();
        if k > 0 {
            g.add_edge(format!("{prefix}{}", k - 1), format!("{prefix}0"));
        }
        g
    }

    /// Star-shaped graph: a center `c` and legs `l{i}_{j}` listed center-outward.
    pub fn star(center_euler: i64, center_genus: u32, legs: &[Vec<i64>]) -> Self {
        let mut g = PlumbingGraph::new();
        g.add_vertex("c", center_euler, center_genus);
        for (i, leg) in legs.iter().enumerate() {
            let mut prev = "c".to_string();
            for (j, &e) in leg.iter().enumerate() {
                let id = format!("l{i}_{j}");
                g.add_vertex(id.clone(), e, 0);
                g.add_edge(prev, id.clone());
                prev = id;
            }
        }
        g
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn index_map(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect()
    }

    /// Number of edge ends at `id`; loops count twice, arrows not at all.
    pub fn valency(&self, id: &str) -> usize {
        self.edges
            .iter()
            .map(|(a, b)| (a == id) as usize + (b == id) as usize)
            .sum()
    }

    pub fn arrow_count(&self, id: &str) -> usize {
        self.arrows.iter().filter(|a| *a == id).count()
    }

    pub fn loop_count(&self, id: &str) -> usize {
        self.edges.iter().filter(|(a, b)| a == id && b == id).count()
    }

    /// Neighbor ids of `id` with repetition, one entry per non-loop edge.
    pub fn neighbors(&self, id: &str) -> Vec<String> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == id && b != id {
                    Some(b.clone())
                } else if b == id && a != id {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    /// A node has positive genus or valency at least three.
    pub fn is_node(&self, id: &str) -> bool {
        self.vertex(id).map(|v| v.genus > 0).unwrap_or(false) || self.valency(id) >= 3
    }

    pub fn nodes(&self) -> Vec<String> {
        self.vertices.iter().filter(|v| self.is_node(&v.id)).map(|v| v.id.clone()).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let idx = self.index_map();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (a, b) in &self.edges {
            let (i, j) = (idx[a.as_str()], idx[b.as_str()]);
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks that every edge and arrow endpoint names a declared vertex.
    pub fn validate(&self) -> Result<(), GraphError> {
        let idx = self.index_map();
        if idx.len() != self.vertices.len() {
            let mut seen = HashMap::new();
            for v in &self.vertices {
                if seen.insert(v.id.as_str(), ()).is_some() {
                    return Err(GraphError::DuplicateVertex { line: 0, id: v.id.clone() });
                }
            }
        }
        for id in self.edges.iter().flat_map(|(a, b)| [a, b]).chain(self.arrows.iter()) {
            if !idx.contains_key(id.as_str()) {
                return Err(GraphError::UnknownVertex(id.clone()));
            }
        }
        Ok(())
    }

    /// Canonical text form; [`parse_plumbing`] reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "graph {name}");
        }
        for v in &self.vertices {
            let _ = writeln!(out, "vertex {} euler={} genus={}", v.id, v.euler, v.genus);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "edge {a} {b}");
        }
        for a in &self.arrows {
            let _ = writeln!(out, "arrow {a}");
        }
        out
    }

    /// Graphviz rendering; arrowheads become diamond nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.name.as_deref().unwrap_or("plumbing");
        let _ = writeln!(out, "graph \"{name}\" {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\\ne={}, g={}\"];", v.id, v.id, v.euler, v.genus);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        for (i, a) in self.arrows.iter().enumerate() {
            let _ = writeln!(out, "  \"arrow{i}\" [shape=diamond, label=\"\"];");
            let _ = writeln!(out, "  \"{a}\" -- \"arrow{i}\";");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for PlumbingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn parse_plumbing(text: &str) -> Result<PlumbingGraph, GraphError> {
    let mut g = PlumbingGraph::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&kw, rest)) = toks.split_first() else { continue };
        let syntax = |msg: &str| GraphError::Syntax { line, msg: msg.to_string() };
        match kw {
            "graph" => {
                if rest.len() != 1 {
                    return Err(syntax("expected `graph <name>`"));
                }
                g.name = Some(rest[0].to_string());
            }
            "vertex" => {
                let (&id, attrs) = rest.split_first().ok_or_else(|| syntax("vertex needs an id"))?;
                if id.contains('=') {
                    return Err(syntax("vertex id missing"));
                }
                let mut euler = None;
                let mut genus = None;
                for attr in attrs {
                    let (k, v) = attr.split_once('=').ok_or_else(|| syntax("expected key=value"))?;
                    match k {
                        "euler" => euler = Some(v.parse::<i64>().map_err(|_| syntax("bad euler number"))?),
                        "genus" => genus = Some(v.parse::<u32>().map_err(|_| syntax("bad genus"))?),
                        _ => return Err(syntax(&format!("unknown attribute `{k}`"))),
                    }
                }
                let euler = euler.ok_or_else(|| syntax("vertex needs euler=<int>"))?;
                let genus = genus.ok_or_else(|| syntax("vertex needs genus=<uint>"))?;
                if ids.insert(id.to_string(), g.vertices.len()).is_some() {
                    return Err(GraphError::DuplicateVertex { line, id: id.to_string() });
                }
                g.add_vertex(id, euler, genus);
            }
            "edge" => {
                if rest.len() != 2 {
                    return Err(syntax("expected `edge <id> <id>`"));
                }
                for id in rest {
                    if !ids.contains_key(*id) {
                        return Err(GraphError::DanglingEndpoint { line, id: id.to_string() });
                    }
                }
                g.add_edge(rest[0], rest[1]);
            }
            "arrow" => {
                if rest.len() != 1 {
                    return Err(syntax("expected `arrow <id>`"));
                }
                if !ids.contains_key(rest[0]) {
                    return Err(GraphError::DanglingEndpoint { line, id: rest[0].to_string() });
                }
                g.add_arrow(rest[0]);
            }
            other => return Err(syntax(&format!("unknown keyword `{other}`"))),
        }
    }
    Ok(g)
}

/// Symmetric integer matrix indexed like `g.vertices`.
pub fn intersection_matrix(g: &PlumbingGraph) -> Vec<Vec<i64>> {
    let idx = g.index_map();
    let n = g.vertices.len();
    let mut a = vec![vec![0i64; n]; n];
    for (i, v) in g.vertices.iter().enumerate() {
        a[i][i] = v.euler;
    }
    for (u, v) in &g.edges {
        let (i, j) = (idx[u.as_str()], idx[v.as_str()]);
        if i == j {
            a[i][i] += 2;
        } else {
            a[i][j] += 1;
            a[j][i] += 1;
        }
    }
    a
}

/// Leading principal minors of `a`, computed by fraction-free elimination.
pub fn leading_minors(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            // Later minors are not determined by this elimination; callers
            // only need to know the sign pattern has already failed.
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Negative definiteness by the alternating sign of leading principal minors.
pub fn is_negative_definite(a: &[Vec<i64>]) -> bool {
    let minors = leading_minors(a);
    minors.len() == a.len()
        && minors.iter().enumerate().all(|(k, d)| {
            if k % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}

pub fn classify_shape(g: &PlumbingGraph) -> Result<ShapeClass, GraphError> {
    g.validate()?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let nodes = g.nodes();
    let tree = g.edges.len() + 1 == g.vertices.len();
    match nodes.len() {
        _ if g.vertices.is_empty() => Ok(ShapeClass::Chain),
        0 if tree => Ok(ShapeClass::Chain),
        0 => Ok(ShapeClass::Cycle),
        1 if tree => Ok(ShapeClass::Star(nodes[0].clone())),
        _ => Ok(ShapeClass::General(nodes)),
    }
}

/// Vertices along a chain graph, starting from an end vertex.
pub fn chain_order(g: &PlumbingGraph) -> Vec<String> {
    if g.vertices.is_empty() {
        return Vec::new();
    }
    let start = g
        .vertices
        .iter()
        .find(|v| g.valency(&v.id) <= 1)
        .unwrap_or(&g.vertices[0])
        .id
        .clone();
    walk_path(g, &start)
}

/// Walks from `start` along unvisited neighbors until stuck.
fn walk_path(g: &PlumbingGraph, start: &str) -> Vec<String> {
    let mut order = vec![start.to_string()];
    let mut seen: BTreeMap<String, ()> = BTreeMap::new();
    seen.insert(start.to_string(), ());
    let mut cur = start.to_string();
    loop {
        let next = g.neighbors(&cur).into_iter().find(|n| !seen.contains_key(n));
        match next {
            Some(n) => {
                seen.insert(n.clone(), ());
                order.push(n.clone());
                cur = n;
            }
            None => return order,
        }
    }
}

/// Vertices of a cycle graph in cyclic order, starting from the first vertex.
pub fn cycle_order(g: &PlumbingGraph) -> Vec<String> {
    match g.vertices.first() {
        Some(v) => walk_path(g, &v.id),
        None => Vec::new(),
    }
}
