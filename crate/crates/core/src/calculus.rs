//! Plumbing calculus: minimal log resolution, rational chain tails and the
//! minimal dlt model.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::graph::{
    chain_order, classify_shape, cycle_order, intersection_matrix, is_negative_definite, GraphError,
    PlumbingGraph, ShapeClass,
};
use crate::hjcf::hj_numerator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalculusError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("the whole graph is a rational chain; it is a cyclic quotient")]
    WholeGraphIsChain,
    #[error("vertex `{0}` has self-intersection above -2 on a chain; graph is not minimal")]
    NotMinimal(String),
}

/// Classification of the singularity from its minimal log resolution graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingClass {
    /// `m = 1` (with `q = 0`) is a smooth point.
    CyclicQuotient { m: BigInt, q: BigInt },
    NonCyclicQuotient([BigInt; 3]),
    Cusp(Vec<i64>),
    General,
}

impl SingClass {
    pub fn is_quotient(&self) -> bool {
        matches!(self, SingClass::CyclicQuotient { .. } | SingClass::NonCyclicQuotient(_))
    }

    pub fn label(&self) -> String {
        match self {
            SingClass::CyclicQuotient { m, q } => format!("CyclicQuotient({m},{q})"),
            SingClass::NonCyclicQuotient([a, b, c]) => format!("NonCyclicQuotient({a},{b},{c})"),
            SingClass::Cusp(b) => format!(
                "Cusp({})",
                b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            SingClass::General => "General".to_string(),
        }
    }
}

/// A maximal rational chain meeting the rest of the graph in one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    /// Leaf first, the vertex adjacent to `attached_to` last.
    pub vertices: Vec<String>,
    pub attached_to: String,
    /// `b` values read from the surviving curve outward.
    pub terms: Vec<i64>,
}

impl Tail {
    /// Id of the tail vertex next to the surviving curve.
    pub fn leg_id(&self) -> &str {
        self.vertices.last().expect("tails are nonempty")
    }

    pub fn alpha(&self) -> BigInt {
        hj_numerator(&self.terms)
    }

    pub fn omega(&self) -> BigInt {
        hj_numerator(&self.terms[1..])
    }
}

/// Cyclic quotient point left on a surviving curve by a contracted tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldPoint {
    pub host: String,
    pub m: BigInt,
    pub omega: BigInt,
    pub leg: String,
    pub terms: Vec<i64>,
}

impl OrbifoldPoint {
    /// The `q` of the local model `1/m(q, 1)`. We take `q = omega`; the
    /// other chart convention would use its inverse mod `m`, which does not
    /// change any component count.
    pub fn chart_q(&self) -> BigInt {
        self.omega.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DltKind {
    /// Quotient singularity: its own minimal dlt modification.
    SelfDlt,
    Model,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DltModel {
    pub kind: DltKind,
    pub class: SingClass,
    /// Surviving curves and their intersections; empty for `SelfDlt`.
    pub residual: PlumbingGraph,
    pub orbifold_points: Vec<OrbifoldPoint>,
    /// The minimal log resolution the model was built from.
    pub source: PlumbingGraph,
}

fn is_contractible(g: &PlumbingGraph, id: &str) -> bool {
    let v = g.vertex(id).expect("vertex exists");
    v.euler == -1 && v.genus == 0 && g.loop_count(id) == 0 && g.arrow_count(id) == 0 && g.valency(id) <= 2
}

/// Blows down the (-1)-curve `id`; its neighbors get joined by a new edge.
pub fn blow_down(g: &PlumbingGraph, id: &str) -> PlumbingGraph {
    let nbrs = g.neighbors(id);
    let mut out = PlumbingGraph { name: g.name.clone(), ..PlumbingGraph::default() };
    for v in g.vertices.iter().filter(|v| v.id != id) {
        let bump = nbrs.iter().filter(|n| **n == v.id).count() as i64;
        out.add_vertex(v.id.clone(), v.euler + bump, v.genus);
    }
    for (a, b) in g.edges.iter().filter(|(a, b)| a != id && b != id) {
        out.add_edge(a.clone(), b.clone());
    }
    if let [a, b] = nbrs.as_slice() {
        out.add_edge(a.clone(), b.clone());
    }
    out.arrows = g.arrows.clone();
    out
}

pub fn minimal_log_resolution(g: &PlumbingGraph) -> Result<PlumbingGraph, CalculusError> {
    g.validate()?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if !is_negative_definite(&intersection_matrix(g)) {
        return Err(CalculusError::NotNegativeDefinite);
    }
    let mut cur = g.clone();
    while let Some(id) = cur.vertices.iter().map(|v| v.id.clone()).find(|id| is_contractible(&cur, id)) {
        cur = blow_down(&cur, &id);
    }
    Ok(cur)
}

fn chain_terms(g: &PlumbingGraph) -> Result<Vec<i64>, CalculusError> {
    chain_order(g)
        .into_iter()
        .map(|id| {
            let b = -g.vertex(&id).expect("vertex exists").euler;
            if b < 2 {
                Err(CalculusError::NotMinimal(id))
            } else {
                Ok(b)
            }
        })
        .collect()
}

fn tail_from_leaf(g: &PlumbingGraph, leaf: &str, marks: &dyn Fn(&str) -> usize) -> Option<Tail> {
    let node = |id: &str| g.is_node(id) || g.valency(id) + marks(id) >= 3;
    let plain = |id: &str| {
        let v = g.vertex(id).expect("vertex exists");
        v.genus == 0 && g.arrow_count(id) == 0 && g.loop_count(id) == 0 && marks(id) == 0 && !node(id)
    };
    if !plain(leaf) || g.valency(leaf) != 1 {
        return None;
    }
    let mut vertices = vec![leaf.to_string()];
    let mut prev = String::new();
    let mut cur = leaf.to_string();
    loop {
        let next = g.neighbors(&cur).into_iter().find(|n| *n != prev)?;
        if node(&next) {
            let terms = vertices.iter().rev().map(|id| -g.vertex(id).expect("vertex").euler).collect();
            return Some(Tail { vertices, attached_to: next, terms });
        }
        if !plain(&next) || g.valency(&next) != 2 {
            return None;
        }
        vertices.push(next.clone());
        prev = cur;
        cur = next;
    }
}

/// All maximal rational chain tails, in vertex order of their leaves.
pub fn rational_chain_tails(g: &PlumbingGraph) -> Result<Vec<Tail>, CalculusError> {
    match classify_shape(g)? {
        ShapeClass::Chain => Err(CalculusError::WholeGraphIsChain),
        ShapeClass::Cycle => Ok(Vec::new()),
        ShapeClass::Star(_) | ShapeClass::General(_) => {
            Ok(g.vertices.iter().filter_map(|v| tail_from_leaf(g, &v.id, &|_| 0)).collect())
        }
    }
}

/// Contracts the given tails, leaving orbifold points on their hosts.
pub fn contract_tails(g: &PlumbingGraph, tails: &[Tail]) -> (PlumbingGraph, Vec<OrbifoldPoint>) {
    let gone: Vec<&String> = tails.iter().flat_map(|t| t.vertices.iter()).collect();
    let mut residual = PlumbingGraph { name: g.name.clone(), ..PlumbingGraph::default() };
    for v in g.vertices.iter().filter(|v| !gone.contains(&&v.id)) {
        residual.add_vertex(v.id.clone(), v.euler, v.genus);
    }
    for (a, b) in g.edges.iter().filter(|(a, b)| !gone.contains(&a) && !gone.contains(&b)) {
        residual.add_edge(a.clone(), b.clone());
    }
    residual.arrows = g.arrows.iter().filter(|a| !gone.contains(a)).cloned().collect();
    let points = tails
        .iter()
        .map(|t| OrbifoldPoint {
            host: t.attached_to.clone(),
            m: t.alpha(),
            omega: t.omega(),
            leg: t.leg_id().to_string(),
            terms: t.terms.clone(),
        })
        .collect();
    (residual, points)
}

pub fn singularity_class(g: &PlumbingGraph) -> Result<SingClass, CalculusError> {
    if !is_negative_definite(&intersection_matrix(g)) {
        return Err(CalculusError::NotNegativeDefinite);
    }
    match classify_shape(g)? {
        ShapeClass::Chain if g.is_empty() => {
            Ok(SingClass::CyclicQuotient { m: BigInt::one(), q: BigInt::from(0) })
        }
        ShapeClass::Chain => {
            let terms = chain_terms(g)?;
            Ok(SingClass::CyclicQuotient { m: hj_numerator(&terms), q: hj_numerator(&terms[1..]) })
        }
        ShapeClass::Cycle => {
            let b = cycle_order(g).iter().map(|id| -g.vertex(id).expect("vertex").euler).collect();
            Ok(SingClass::Cusp(b))
        }
        ShapeClass::Star(center) => {
            let c = g.vertex(&center).expect("center exists");
            if c.genus != 0 || g.valency(&center) != 3 {
                return Ok(SingClass::General);
            }
            let tails = rational_chain_tails(g)?;
            if tails.len() != 3 {
                return Ok(SingClass::General);
            }
            let mut alphas: Vec<BigInt> = tails.iter().map(Tail::alpha).collect();
            alphas.sort();
            let sum: BigRational = alphas.iter().map(|a| BigRational::new(BigInt::one(), a.clone())).sum();
            if sum > BigRational::one() {
                let [a, b, c]: [BigInt; 3] = alphas.try_into().expect("three legs");
                Ok(SingClass::NonCyclicQuotient([a, b, c]))
            } else {
                Ok(SingClass::General)
            }
        }
        ShapeClass::General(_) => Ok(SingClass::General),
    }
}

pub fn minimal_dlt_model(g: &PlumbingGraph) -> Result<DltModel, CalculusError> {
    let class = singularity_class(g)?;
    if class.is_quotient() {
        return Ok(DltModel {
            kind: DltKind::SelfDlt,
            class,
            residual: PlumbingGraph::default(),
            orbifold_points: Vec::new(),
            source: g.clone(),
        });
    }
    let tails = rational_chain_tails(g)?;
    let (residual, orbifold_points) = contract_tails(g, &tails);
    Ok(DltModel { kind: DltKind::Model, class, residual, orbifold_points, source: g.clone() })
}

/// Tails left in the residual graph of a model, where each orbifold point
/// counts towards the valency of its host. Empty for every model built by
/// [`minimal_dlt_model`].
pub fn residual_tails(d: &DltModel) -> Vec<Tail> {
    let marks = |id: &str| d.orbifold_points.iter().filter(|p| p.host == id).count();
    d.residual.vertices.iter().filter_map(|v| tail_from_leaf(&d.residual, &v.id, &marks)).collect()
}

/// Resolves to the minimal log resolution first, then builds the dlt model.
pub fn analyze_graph(g: &PlumbingGraph) -> Result<DltModel, CalculusError> {
    minimal_dlt_model(&minimal_log_resolution(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn e8() -> PlumbingGraph {
        PlumbingGraph::star(-2, 0, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]])
    }

    fn sigma237() -> PlumbingGraph {
        PlumbingGraph::star(-1, 0, &[vec![-2], vec![-3], vec![-7]])
    }

    #[test]
    fn blow_down_single() {
        let g = PlumbingGraph::chain("v", &[-1, -3]);
        let r = minimal_log_resolution(&g).unwrap();
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.vertices[0].euler, -2);
    }

    #[test]
    fn blow_down_cascade() {
        // (-2)-(-1)-(-3) -> (-1)-(-2) -> (-1) -> smooth point
        let g = PlumbingGraph::chain("v", &[-2, -1, -3]);
        let step = blow_down(&g, "v1");
        assert_eq!(step.vertices.iter().map(|v| v.euler).collect::<Vec<_>>(), vec![-1, -2]);
        assert_eq!(step.edges, vec![("v0".to_string(), "v2".to_string())]);
        let r = minimal_log_resolution(&g).unwrap();
        assert!(r.is_empty());
        assert_eq!(singularity_class(&r).unwrap(), SingClass::CyclicQuotient { m: big(1), q: big(0) });
    }

    #[test]
    fn degenerate_chain_rejected() {
        let g = PlumbingGraph::chain("v", &[-2, -1, -2]);
        assert_eq!(minimal_log_resolution(&g), Err(CalculusError::NotNegativeDefinite));
    }

    #[test]
    fn blow_down_with_double_neighbor_makes_loop() {
        // -1 curve meeting u twice: u gains +2 and a loop.
        let mut g = PlumbingGraph::new();
        g.add_vertex("u", -6, 0).add_vertex("e", -1, 0).add_edge("u", "e").add_edge("u", "e");
        let r = blow_down(&g, "e");
        assert_eq!(r.vertices[0].euler, -4);
        assert_eq!(r.edges, vec![("u".to_string(), "u".to_string())]);
        // self-intersection goes from -6 to -6 + 4
        assert_eq!(intersection_matrix(&r), vec![vec![-2]]);
    }

    #[test]
    fn e8_is_fixed() {
        assert_eq!(minimal_log_resolution(&e8()).unwrap(), e8());
    }

    #[test]
    fn tails() {
        let t = rational_chain_tails(&e8()).unwrap();
        let mut lens: Vec<usize> = t.iter().map(|t| t.vertices.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 2, 4]);
        assert!(t.iter().all(|t| t.attached_to == "c"));
        assert_eq!(rational_chain_tails(&PlumbingGraph::cycle("v", &[-3, -3, -3])).unwrap(), vec![]);
        assert_eq!(
            rational_chain_tails(&PlumbingGraph::chain("v", &[-2, -2])),
            Err(CalculusError::WholeGraphIsChain)
        );
    }

    #[test]
    fn tail_reads_from_survivor_outward() {
        let g = PlumbingGraph::star(-1, 0, &[vec![-2], vec![-3], vec![-3, -2]]);
        let t = rational_chain_tails(&g).unwrap();
        let long = t.iter().find(|t| t.vertices.len() == 2).unwrap();
        assert_eq!(long.terms, vec![3, 2]);
        assert_eq!(long.vertices, vec!["l2_1".to_string(), "l2_0".to_string()]);
        assert_eq!((long.alpha(), long.omega()), (big(5), big(2)));
    }

    #[test]
    fn classes() {
        assert_eq!(
            singularity_class(&PlumbingGraph::chain("v", &[-2, -2, -2, -2])).unwrap(),
            SingClass::CyclicQuotient { m: big(5), q: big(4) }
        );
        assert_eq!(singularity_class(&e8()).unwrap(), SingClass::NonCyclicQuotient([big(2), big(3), big(5)]));
        assert_eq!(singularity_class(&sigma237()).unwrap(), SingClass::General);
        assert_eq!(
            singularity_class(&PlumbingGraph::cycle("v", &[-3, -3, -3])).unwrap(),
            SingClass::Cusp(vec![3, 3, 3])
        );
    }

    #[test]
    fn dlt_models() {
        let d = minimal_dlt_model(&sigma237()).unwrap();
        assert_eq!(d.kind, DltKind::Model);
        assert_eq!(d.residual.vertex_count(), 1);
        let pts: Vec<(BigInt, BigInt)> = d.orbifold_points.iter().map(|p| (p.m.clone(), p.omega.clone())).collect();
        assert_eq!(pts, vec![(big(2), big(1)), (big(3), big(1)), (big(7), big(1))]);

        let cusp = PlumbingGraph::cycle("v", &[-3, -3, -3]);
        let d = minimal_dlt_model(&cusp).unwrap();
        assert_eq!(d.kind, DltKind::Model);
        assert_eq!(d.residual, cusp);
        assert!(d.orbifold_points.is_empty());

        let a4 = minimal_dlt_model(&PlumbingGraph::chain("v", &[-2, -2, -2, -2])).unwrap();
        assert_eq!(a4.kind, DltKind::SelfDlt);
        assert_eq!(minimal_dlt_model(&e8()).unwrap().kind, DltKind::SelfDlt);
    }

    #[test]
    fn contracting_again_is_a_no_op() {
        let mut g = PlumbingGraph::star(-2, 0, &[vec![-2], vec![-3], vec![-2, -2]]);
        g.add_vertex("d", -2, 1).add_edge("l2_1", "d");
        let d = minimal_dlt_model(&g).unwrap();
        assert_eq!(d.orbifold_points.len(), 2);
        assert!(residual_tails(&d).is_empty());
        let (again, pts) = contract_tails(&d.residual, &residual_tails(&d));
        assert_eq!(again, d.residual);
        assert!(pts.is_empty());
    }
}
