//! JSJ splitting, enumeration of short-arc components on a dlt model, their
//! winding classes, and conjugacy of arc-generators.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::arc::{ArcComponent, ComponentKind, FamilyTag, Generator, HomotopyType, WindingClass};
use crate::calculus::{minimal_dlt_model, CalculusError, DltKind, DltModel, SingClass};
use crate::cusp::{enumerate_cusp_components_named, v_sequence, CuspError, CuspGeometry, CuspNames, CuspSequence};
use crate::graph::{cycle_order, PlumbingGraph};
use crate::hjcf::{bracket, chain_exponent};
use crate::seifert::interior_homotopy;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComponentsError {
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Cusp(#[from] CuspError),
    #[error("graph has no node; use the cusp or quotient routines")]
    NoNodes,
    #[error("quotient singularity: its components are conjugacy classes of the local group")]
    QuotientRoute,
    #[error("component does not belong to this model: {0}")]
    Mismatch(String),
    #[error("not an arc-generator (exponents must be positive): {0}")]
    NotArcGenerator(String),
    #[error("need 0 <= i < j <= {s} on a chain of length {s}, got i={i}, j={j}")]
    BadIndex { i: usize, j: usize, s: usize },
    #[error("need n_i >= 0 and n_(i+1) > 0")]
    BadTarget,
}

/// A maximal chain joining two nodes (possibly the same node).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRecord {
    pub from: String,
    pub to: String,
    /// Interior vertices, from `from` towards `to`.
    pub vertices: Vec<String>,
    /// Edge indices along the chain, starting at `from`.
    pub edges: Vec<usize>,
    /// The edge cut by the splitting: the first one.
    pub cut_edge: usize,
    /// `b` values of the interior vertices.
    pub terms: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsjSplit {
    pub pieces: Vec<PlumbingGraph>,
    pub chains: Vec<ChainRecord>,
    /// Piece name (its node) for every vertex of the input.
    pub owner: BTreeMap<String, String>,
}

fn other_end(g: &PlumbingGraph, e: usize, from: &str) -> String {
    let (a, b) = &g.edges[e];
    if a == from { b.clone() } else { a.clone() }
}

fn incident_edges(g: &PlumbingGraph, v: &str) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, (a, b)) in g.edges.iter().enumerate() {
        if a == v {
            out.push(i);
        }
        if b == v {
            out.push(i);
        }
    }
    out
}

pub fn jsj_split(g: &PlumbingGraph) -> Result<JsjSplit, ComponentsError> {
    g.validate().map_err(CalculusError::from)?;
    let nodes = g.nodes();
    if nodes.is_empty() {
        return Err(ComponentsError::NoNodes);
    }
    let mut chains = Vec::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let mut owner: BTreeMap<String, String> = BTreeMap::new();
    for n in &nodes {
        owner.insert(n.clone(), n.clone());
    }
    for n in &nodes {
        for e0 in incident_edges(g, n) {
            if used.contains(&e0) {
                continue;
            }
            let mut edges = vec![e0];
            let mut vertices = Vec::new();
            let mut cur = other_end(g, e0, n);
            let mut last = e0;
            let mut ok = true;
            while !g.is_node(&cur) {
                let next = incident_edges(g, &cur).into_iter().find(|&e| e != last);
                match next {
                    Some(e) => {
                        vertices.push(cur.clone());
                        edges.push(e);
                        last = e;
                        cur = other_end(g, e, &cur);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue; // a leg, not a chain
            }
            used.extend(edges.iter().copied());
            let terms = vertices.iter().map(|v| -g.vertex(v).expect("vertex").euler).collect();
            for v in &vertices {
                owner.insert(v.clone(), cur.clone());
            }
            chains.push(ChainRecord { from: n.clone(), to: cur, vertices, edges, cut_edge: e0, terms });
        }
    }
    // Remaining non-node vertices lie on legs; they belong to the node the
    // leg hangs from.
    loop {
        let mut changed = false;
        for (a, b) in &g.edges {
            match (owner.get(a).cloned(), owner.get(b).cloned()) {
                (Some(o), None) => {
                    owner.insert(b.clone(), o);
                    changed = true;
                }
                (None, Some(o)) => {
                    owner.insert(a.clone(), o);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let cut: BTreeSet<usize> = chains.iter().map(|c| c.cut_edge).collect();
    let mut pieces = Vec::new();
    for n in &nodes {
        let mut p = PlumbingGraph::named(n.clone());
        for v in g.vertices.iter().filter(|v| owner.get(&v.id) == Some(n)) {
            p.add_vertex(v.id.clone(), v.euler, v.genus);
        }
        for (i, (a, b)) in g.edges.iter().enumerate() {
            if !cut.contains(&i) && owner.get(a) == Some(n) && owner.get(b) == Some(n) {
                p.add_edge(a.clone(), b.clone());
            }
        }
        for a in g.arrows.iter().filter(|a| owner.get(*a) == Some(n)) {
            p.add_arrow(a.clone());
        }
        for c in &chains {
            if &c.from == n {
                p.add_arrow(n.clone());
            }
            if &c.to == n {
                p.add_arrow(c.vertices.first().unwrap_or(&c.to).clone());
            }
        }
        pieces.push(p);
    }
    Ok(JsjSplit { pieces, chains, owner })
}

/// Curve names and sector edges of a cusp cycle, in the order used for its
/// cusp sequence.
pub fn cusp_names(residual: &PlumbingGraph) -> (CuspSequence, CuspNames) {
    let order = cycle_order(residual);
    let k = order.len();
    let b = order.iter().map(|v| -residual.vertex(v).expect("vertex").euler).collect();
    let mut used = BTreeSet::new();
    let mut sector_edges = Vec::new();
    for i in 0..k {
        let u = &order[(i + k - 1) % k];
        let v = &order[i];
        let e = residual
            .edges
            .iter()
            .enumerate()
            .find(|(j, (a, b))| !used.contains(j) && ((a == u && b == v) || (a == v && b == u)))
            .map(|(j, _)| j)
            .expect("cycle edge");
        used.insert(e);
        sector_edges.push(e);
    }
    (CuspSequence::new(b).expect("cusp cycle"), CuspNames { curves: order, sector_edges })
}

fn curve_generator(d: &DltModel, owner: &BTreeMap<String, String>, v: &str) -> (String, Generator) {
    if d.source.is_node(v) {
        (v.to_string(), Generator::Central)
    } else {
        (owner.get(v).cloned().unwrap_or_else(|| v.to_string()), Generator::Vertex(v.to_string()))
    }
}

pub fn enumerate_components(d: &DltModel, n: u64) -> Result<Vec<ArcComponent>, ComponentsError> {
    if d.kind == DltKind::SelfDlt {
        return Err(ComponentsError::QuotientRoute);
    }
    if let SingClass::Cusp(_) = d.class {
        let (c, names) = cusp_names(&d.residual);
        let mut out = enumerate_cusp_components_named(&c, n, &names);
        out.sort();
        return Ok(out);
    }
    let split = jsj_split(&d.source)?;
    let single = d.residual.vertex_count() == 1;
    let (curve_family, point_family) =
        if single { (FamilyTag::OneParameterFamily, FamilyTag::Unique) } else { (FamilyTag::NotApplicable, FamilyTag::NotApplicable) };
    let mut out = Vec::new();
    for v in &d.residual.vertices {
        let points = d.orbifold_points.iter().filter(|p| p.host == v.id).count();
        let r = (d.residual.valency(&v.id) + points) as u64;
        let (piece, generator) = curve_generator(d, &split.owner, &v.id);
        for m in 1..=n {
            let m = BigInt::from(m);
            out.push(ArcComponent {
                kind: ComponentKind::CurveInterior { vertex: v.id.clone(), m: m.clone() },
                winding: WindingClass::SeifertWord { piece: piece.clone(), generator: generator.clone(), exponent: m.clone() },
                homotopy: interior_homotopy(v.genus, r, -v.euler, &m),
                family: curve_family,
            });
        }
    }
    for (e, (u, v)) in d.residual.edges.iter().enumerate() {
        for total in 2..=n {
            for mu in 1..total {
                let (mu, mv) = (BigInt::from(mu), BigInt::from(total - mu));
                out.push(ArcComponent {
                    kind: ComponentKind::NodePoint { edge: e, u: u.clone(), v: v.clone(), mu: mu.clone(), mv: mv.clone() },
                    winding: WindingClass::EdgeTorus { chain: e, u: u.clone(), v: v.clone(), exponents: (mu, mv) },
                    homotopy: HomotopyType::TwoTorus,
                    family: FamilyTag::NotApplicable,
                });
            }
        }
    }
    for p in &d.orbifold_points {
        let piece = split.owner.get(&p.host).cloned().unwrap_or_else(|| p.host.clone());
        for k in 1..=n {
            let k = BigInt::from(k);
            if k.is_multiple_of(&p.m) {
                continue;
            }
            out.push(ArcComponent {
                kind: ComponentKind::OrbifoldPoint { vertex: p.host.clone(), leg: p.leg.clone(), numerator: k.clone(), m: p.m.clone() },
                winding: WindingClass::SeifertWord {
                    piece: piece.clone(),
                    generator: Generator::Leg { id: p.leg.clone(), alpha: p.m.clone() },
                    exponent: k,
                },
                homotopy: HomotopyType::Circle,
                family: point_family,
            });
        }
    }
    out.sort();
    Ok(out)
}

pub fn winding_class(c: &ArcComponent, d: &DltModel) -> Result<WindingClass, ComponentsError> {
    let mismatch = || ComponentsError::Mismatch(c.kind.to_string());
    if d.kind == DltKind::SelfDlt {
        return Err(ComponentsError::QuotientRoute);
    }
    if let SingClass::Cusp(_) = d.class {
        let (seq, names) = cusp_names(&d.residual);
        let k = seq.len();
        let vs = v_sequence(&seq, 0, k as i64);
        return match &c.kind {
            ComponentKind::CurveInterior { vertex, m } => {
                let j = names.curves.iter().position(|x| x == vertex).ok_or_else(mismatch)?;
                // curves[j] is E_{j+1}; E_k is also E_0
                let i = (j + 1) % k;
                Ok(WindingClass::CuspLattice(vs[i].scale(m)))
            }
            ComponentKind::NodePoint { edge, mu, mv, .. } => {
                let i = names.sector_edges.iter().position(|e| e == edge).ok_or_else(mismatch)?;
                Ok(WindingClass::CuspLattice(vs[i].scale(mu).add(&vs[i + 1].scale(mv))))
            }
            ComponentKind::OrbifoldPoint { .. } => Err(mismatch()),
        };
    }
    let split = jsj_split(&d.source)?;
    match &c.kind {
        ComponentKind::CurveInterior { vertex, m } => {
            d.residual.vertex(vertex).ok_or_else(mismatch)?;
            let (piece, generator) = curve_generator(d, &split.owner, vertex);
            Ok(WindingClass::SeifertWord { piece, generator, exponent: m.clone() })
        }
        ComponentKind::NodePoint { edge, u, v, mu, mv } => {
            let (a, b) = d.residual.edges.get(*edge).ok_or_else(mismatch)?;
            if (a, b) != (u, v) {
                return Err(mismatch());
            }
            Ok(WindingClass::EdgeTorus { chain: *edge, u: u.clone(), v: v.clone(), exponents: (mu.clone(), mv.clone()) })
        }
        ComponentKind::OrbifoldPoint { vertex, leg, numerator, m } => {
            let p = d.orbifold_points.iter().find(|p| &p.host == vertex && &p.leg == leg && &p.m == m).ok_or_else(mismatch)?;
            let piece = split.owner.get(&p.host).cloned().unwrap_or_else(|| p.host.clone());
            Ok(WindingClass::SeifertWord {
                piece,
                generator: Generator::Leg { id: p.leg.clone(), alpha: p.m.clone() },
                exponent: numerator.clone(),
            })
        }
    }
}

/// Canonical form of an arc-generator on a model: the label it maps to.
fn normalize(w: &WindingClass, d: &DltModel, owner: &BTreeMap<String, String>) -> Result<WindingClass, ComponentsError> {
    let bad = || ComponentsError::NotArcGenerator(w.to_string());
    match w {
        WindingClass::CuspLattice(v) => {
            let SingClass::Cusp(b) = &d.class else {
                return Err(ComponentsError::Mismatch(w.to_string()));
            };
            let geo = CuspGeometry::new(&CuspSequence::new(b.clone())?);
            let (rep, _) = geo.reduce(v).map_err(|_| bad())?;
            Ok(WindingClass::CuspLattice(rep))
        }
        WindingClass::EdgeTorus { exponents: (a, b), .. } => {
            if !a.is_positive() || !b.is_positive() {
                return Err(bad());
            }
            Ok(w.clone())
        }
        WindingClass::SeifertWord { piece, generator, exponent } => {
            if !exponent.is_positive() {
                return Err(bad());
            }
            let mismatch = || ComponentsError::Mismatch(w.to_string());
            let mut exponent = exponent.clone();
            let (host, mut generator) = match generator {
                Generator::Central => {
                    if !d.source.is_node(piece) {
                        return Err(mismatch());
                    }
                    (piece.clone(), Generator::Central)
                }
                Generator::Leg { id, alpha } => {
                    let p = d.orbifold_points.iter().find(|p| &p.leg == id && &p.m == alpha).ok_or_else(mismatch)?;
                    (p.host.clone(), generator.clone())
                }
                Generator::Vertex(v) if d.residual.vertex(v).is_some() => {
                    if d.source.is_node(v) {
                        (v.clone(), Generator::Central)
                    } else {
                        (v.clone(), generator.clone())
                    }
                }
                Generator::Vertex(v) => {
                    // A curve contracted into a tail: gamma_i = g^det[b_s..b_(i+1)].
                    let (p, i) = d
                        .orbifold_points
                        .iter()
                        .find_map(|p| tail_position(d, p, v).map(|i| (p, i)))
                        .ok_or_else(mismatch)?;
                    exponent *= chain_exponent(i, &p.terms).map_err(|_| mismatch())?;
                    (p.host.clone(), Generator::Leg { id: p.leg.clone(), alpha: p.m.clone() })
                }
            };
            if let Generator::Leg { alpha, .. } = &generator {
                if exponent.is_multiple_of(alpha) {
                    exponent /= alpha;
                    generator = Generator::Central;
                }
            }
            let piece = owner.get(&host).cloned().unwrap_or(host);
            Ok(WindingClass::SeifertWord { piece, generator, exponent })
        }
    }
}

/// Position (1-based, node outward) of `v` in the tail behind point `p`.
fn tail_position(d: &DltModel, p: &crate::calculus::OrbifoldPoint, v: &str) -> Option<usize> {
    let mut prev = p.host.clone();
    let mut cur = p.leg.clone();
    for i in 1..=p.terms.len() {
        if cur == v {
            return Some(i);
        }
        let next = d.source.neighbors(&cur).into_iter().find(|n| *n != prev)?;
        prev = std::mem::replace(&mut cur, next);
    }
    None
}

/// Decides whether two arc-generators on `g` are conjugate in the
/// fundamental group of the link, by comparing the components they label.
pub fn are_conjugate(w1: &WindingClass, w2: &WindingClass, g: &PlumbingGraph) -> Result<bool, ComponentsError> {
    let d = minimal_dlt_model(g)?;
    if d.kind == DltKind::SelfDlt {
        return Err(ComponentsError::QuotientRoute);
    }
    let owner = match d.class {
        SingClass::Cusp(_) => BTreeMap::new(),
        _ => jsj_split(&d.source)?.owner,
    };
    Ok(normalize(w1, &d, &owner)? == normalize(w2, &d, &owner)?)
}

/// Whether `gamma_i^n_i gamma_(i+1)^n_(i+1) = gamma_j^m_j gamma_(j+1)^m_(j+1)`
/// has a solution with `m_j >= 0`, `m_(j+1) > 0` along a chain with the
/// given `b` values (positions `0` and `s+1` are the end nodes).
pub fn chain_system_solvable(b: &[i64], i: usize, j: usize, n_i: &BigInt, n_i1: &BigInt) -> Result<bool, ComponentsError> {
    let s = b.len();
    if !(i < j && j <= s) {
        return Err(ComponentsError::BadIndex { i, j, s });
    }
    if n_i.is_negative() || !n_i1.is_positive() {
        return Err(ComponentsError::BadTarget);
    }
    let (ji, jj) = (j as isize, j as isize - 1);
    let b1 = bracket(b, i + 1, ji);
    let b2 = bracket(b, i + 1, jj);
    let b3 = bracket(b, i + 2, ji);
    let b4 = bracket(b, i + 2, jj);
    // The matrix ((b1, b2), (-b3, -b4)) has determinant 1.
    debug_assert_eq!(&b2 * &b3 - &b1 * &b4, BigInt::from(1));
    let m_j1 = -(&b4 * n_i1) - &b2 * n_i;
    let m_j = &b3 * n_i1 + &b1 * n_i;
    debug_assert_eq!(&b1 * &m_j1 + &b2 * &m_j, *n_i1);
    debug_assert_eq!(-(&b3 * &m_j1) - &b4 * &m_j, *n_i);
    Ok(!m_j.is_negative() && m_j1.is_positive())
}
