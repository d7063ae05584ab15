//! Star-shaped graphs: Seifert invariants, fundamental group presentations
//! and the short-arc components of Seifert links.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::arc::{ArcComponent, ComponentKind, FamilyTag, Generator, HomotopyType, WindingClass};
use crate::graph::{classify_shape, GraphError, PlumbingGraph, ShapeClass};
use crate::hjcf::{hj_expand, hj_numerator, HjError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hj(#[from] HjError),
    #[error("graph is not star-shaped")]
    NotStar,
    #[error("boundary legs present; the link is not closed")]
    HasBoundary,
    #[error("fundamental group is finite; use the quotient module")]
    FinitePi1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    /// Id of the leg vertex next to the center.
    pub id: String,
    pub alpha: BigInt,
    pub omega: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub center: String,
    pub b: i64,
    pub g: u32,
    pub legs: Vec<Leg>,
    /// Number of boundary legs.
    pub arrows: usize,
}

impl SeifertData {
    /// Star graph realizing the data, with legs from the continued
    /// fraction expansions of `alpha/omega`.
    pub fn to_graph(&self) -> Result<PlumbingGraph, SeifertError> {
        let legs = self
            .legs
            .iter()
            .map(|l| Ok(hj_expand(&l.alpha, &l.omega)?.into_iter().map(|b| -b).collect()))
            .collect::<Result<Vec<Vec<i64>>, HjError>>()?;
        let mut g = PlumbingGraph::star(-self.b, self.g, &legs);
        for _ in 0..self.arrows {
            g.add_arrow("c");
        }
        Ok(g)
    }

    pub fn orbifold_euler_sum(&self) -> BigRational {
        self.legs.iter().map(|l| BigRational::new(BigInt::one(), l.alpha.clone())).sum()
    }
}

pub fn seifert_data(g: &PlumbingGraph) -> Result<SeifertData, SeifertError> {
    let center = match classify_shape(g)? {
        ShapeClass::Star(c) => c,
        ShapeClass::Chain if g.vertex_count() == 1 => g.vertices[0].id.clone(),
        _ => return Err(SeifertError::NotStar),
    };
    let cv = g.vertex(&center).expect("center exists");
    let mut legs = Vec::new();
    let mut arrows = g.arrow_count(&center);
    for first in g.neighbors(&center) {
        let mut chain = vec![first.clone()];
        let mut prev = center.clone();
        let mut cur = first.clone();
        while let Some(next) = g.neighbors(&cur).into_iter().find(|n| *n != prev) {
            chain.push(next.clone());
            prev = cur;
            cur = next;
        }
        let leg_arrows: usize = chain.iter().map(|v| g.arrow_count(v)).sum();
        if leg_arrows > 0 {
            arrows += 1;
            continue;
        }
        let terms: Vec<i64> = chain.iter().map(|v| -g.vertex(v).expect("vertex").euler).collect();
        legs.push(Leg { id: first, alpha: hj_numerator(&terms), omega: hj_numerator(&terms[1..]) });
    }
    Ok(SeifertData { center, b: -cv.euler, g: cv.genus, legs, arrows })
}

pub type Word = Vec<(String, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let parts: Vec<String> = w
        .iter()
        .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
        .collect();
    parts.join("*")
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        for r in &self.relations {
            writeln!(f, "{} = {}", word_text(&r.lhs), word_text(&r.rhs))?;
        }
        Ok(())
    }
}

impl Presentation {
    pub fn is_well_formed(&self) -> bool {
        self.relations
            .iter()
            .flat_map(|r| r.lhs.iter().chain(r.rhs.iter()))
            .all(|(g, _)| self.generators.contains(g))
    }
}

fn commutator(a: &str, b: &str) -> Word {
    vec![(a.into(), 1), (b.into(), 1), (a.into(), -1), (b.into(), -1)]
}

pub fn pi1_presentation(sd: &SeifertData) -> Presentation {
    let n = sd.legs.len();
    let gs: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
    // With boundary, the last f and the relation defining it are eliminated.
    let kept_f = sd.arrows.saturating_sub(1);
    let fs: Vec<String> = (1..=kept_f).map(|t| format!("f{t}")).collect();
    let ab: Vec<String> = (1..=sd.g).flat_map(|m| [format!("a{m}"), format!("b{m}")]).collect();

    let mut generators = vec!["h".to_string()];
    generators.extend(gs.iter().cloned());
    generators.extend(fs.iter().cloned());
    generators.extend(ab.iter().cloned());

    let mut relations: Vec<Relation> = generators[1..]
        .iter()
        .map(|x| Relation { lhs: vec![("h".into(), 1), (x.clone(), 1)], rhs: vec![(x.clone(), 1), ("h".into(), 1)] })
        .collect();
    for (g, leg) in gs.iter().zip(&sd.legs) {
        let alpha = i64::try_from(&leg.alpha).unwrap_or(i64::MAX);
        relations.push(Relation { lhs: vec![(g.clone(), alpha)], rhs: vec![("h".into(), 1)] });
    }
    if sd.arrows == 0 {
        let mut rhs: Word = Vec::new();
        for m in 1..=sd.g {
            rhs.extend(commutator(&format!("a{m}"), &format!("b{m}")));
        }
        for (g, leg) in gs.iter().zip(&sd.legs) {
            let omega = i64::try_from(&leg.omega).unwrap_or(i64::MAX);
            rhs.push((g.clone(), omega));
        }
        let lhs = if sd.b == 0 { Vec::new() } else { vec![("h".to_string(), sd.b)] };
        relations.push(Relation { lhs, rhs });
    }
    Presentation { generators, relations }
}

pub fn has_finite_pi1(sd: &SeifertData) -> Result<bool, SeifertError> {
    if sd.arrows > 0 {
        return Err(SeifertError::HasBoundary);
    }
    let n = sd.legs.len();
    Ok(sd.g == 0 && (n <= 2 || (n == 3 && sd.orbifold_euler_sum() > BigRational::one())))
}

/// Homotopy type of the arcs through the interior of a curve of genus
/// `genus`, self-intersection `-b`, meeting `r` special points.
pub fn interior_homotopy(genus: u32, r: u64, b: i64, m: &BigInt) -> HomotopyType {
    if r == 0 {
        HomotopyType::CircleBundleOverClosedSurface { genus, chern: m * BigInt::from(b) }
    } else {
        HomotopyType::CircleTimesWedge(2 * genus as u64 + r - 1)
    }
}

pub fn enumerate_seifert_components(sd: &SeifertData, n: u64) -> Result<Vec<ArcComponent>, SeifertError> {
    if has_finite_pi1(sd)? {
        return Err(SeifertError::FinitePi1);
    }
    let mut out = Vec::new();
    let r = sd.legs.len() as u64;
    for m in 1..=n {
        let m = BigInt::from(m);
        out.push(ArcComponent {
            kind: ComponentKind::CurveInterior { vertex: sd.center.clone(), m: m.clone() },
            winding: WindingClass::SeifertWord { piece: sd.center.clone(), generator: Generator::Central, exponent: m.clone() },
            homotopy: interior_homotopy(sd.g, r, sd.b, &m),
            family: FamilyTag::OneParameterFamily,
        });
    }
    for leg in &sd.legs {
        for k in 1..=n {
            let k = BigInt::from(k);
            if k.is_multiple_of(&leg.alpha) {
                continue;
            }
            out.push(ArcComponent {
                kind: ComponentKind::OrbifoldPoint {
                    vertex: sd.center.clone(),
                    leg: leg.id.clone(),
                    numerator: k.clone(),
                    m: leg.alpha.clone(),
                },
                winding: WindingClass::SeifertWord {
                    piece: sd.center.clone(),
                    generator: Generator::Leg { id: leg.id.clone(), alpha: leg.alpha.clone() },
                    exponent: k,
                },
                homotopy: HomotopyType::Circle,
                family: FamilyTag::Unique,
            });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn alphas(sd: &SeifertData) -> Vec<(BigInt, BigInt)> {
        sd.legs.iter().map(|l| (l.alpha.clone(), l.omega.clone())).collect()
    }

    fn sigma237() -> PlumbingGraph {
        PlumbingGraph::star(-1, 0, &[vec![-2], vec![-3], vec![-7]])
    }

    #[test]
    fn data_from_graphs() {
        let e8 = PlumbingGraph::star(-2, 0, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]]);
        let sd = seifert_data(&e8).unwrap();
        assert_eq!((sd.b, sd.g), (2, 0));
        assert_eq!(alphas(&sd), vec![(big(2), big(1)), (big(3), big(2)), (big(5), big(4))]);

        let mut single = PlumbingGraph::new();
        single.add_vertex("v", -3, 2);
        let sd = seifert_data(&single).unwrap();
        assert_eq!((sd.b, sd.g, sd.legs.len()), (3, 2, 0));

        let sd = seifert_data(&sigma237()).unwrap();
        assert_eq!(alphas(&sd), vec![(big(2), big(1)), (big(3), big(1)), (big(7), big(1))]);
        assert_eq!(seifert_data(&PlumbingGraph::cycle("v", &[-3, -3])), Err(SeifertError::NotStar));
    }

    #[test]
    fn rebuild_roundtrip() {
        let g = PlumbingGraph::star(-2, 1, &[vec![-3, -2], vec![-2, -4, -2], vec![-5]]);
        let sd = seifert_data(&g).unwrap();
        let again = seifert_data(&sd.to_graph().unwrap()).unwrap();
        assert_eq!((again.b, again.g), (sd.b, sd.g));
        assert_eq!(alphas(&again), alphas(&sd));
    }

    #[test]
    fn presentations() {
        let lens = SeifertData { center: "c".into(), b: 2, g: 0, legs: vec![], arrows: 0 };
        let p = pi1_presentation(&lens);
        assert_eq!(p.generators, vec!["h"]);
        assert_eq!(p.relations, vec![Relation { lhs: vec![("h".into(), 2)], rhs: vec![] }]);

        let e8 = seifert_data(&PlumbingGraph::star(-2, 0, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]])).unwrap();
        let p = pi1_presentation(&e8);
        assert_eq!(p.generators.len(), 4);
        let last = p.relations.last().unwrap();
        assert_eq!(last.lhs, vec![("h".to_string(), 2)]);
        assert_eq!(last.rhs, vec![("g1".to_string(), 1), ("g2".to_string(), 2), ("g3".to_string(), 4)]);
        assert!(p.is_well_formed());
        assert!(p.to_string().contains("g3^5 = h"));

        let mut bounded = e8.clone();
        bounded.arrows = 2;
        bounded.g = 1;
        let p = pi1_presentation(&bounded);
        assert!(p.generators.contains(&"f1".to_string()) && !p.generators.contains(&"f2".to_string()));
        assert!(p.relations.iter().all(|r| !r.lhs.iter().any(|(g, e)| g == "h" && *e == 2)));
        assert!(p.is_well_formed());
    }

    #[test]
    fn finiteness() {
        let sd = |a: &[i64], g: u32| SeifertData {
            center: "c".into(),
            b: 1,
            g,
            legs: a.iter().map(|&x| Leg { id: format!("l{x}"), alpha: big(x), omega: big(1) }).collect(),
            arrows: 0,
        };
        assert!(has_finite_pi1(&sd(&[2, 3, 5], 0)).unwrap());
        assert!(!has_finite_pi1(&sd(&[2, 3, 7], 0)).unwrap());
        assert!(!has_finite_pi1(&sd(&[], 1)).unwrap());
        assert!(has_finite_pi1(&sd(&[4, 7], 0)).unwrap());
        assert!(!has_finite_pi1(&sd(&[2, 2, 2, 2], 0)).unwrap());
        let mut b = sd(&[2], 0);
        b.arrows = 1;
        assert_eq!(has_finite_pi1(&b), Err(SeifertError::HasBoundary));
    }

    #[test]
    fn sigma_237_components() {
        let sd = seifert_data(&sigma237()).unwrap();
        let comps = enumerate_seifert_components(&sd, 6).unwrap();
        assert_eq!(comps.len(), 19);
        assert_eq!(enumerate_seifert_components(&sd, 1).unwrap().len(), 4);
        let e8 = seifert_data(&PlumbingGraph::star(-2, 0, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]])).unwrap();
        assert_eq!(enumerate_seifert_components(&e8, 3), Err(SeifertError::FinitePi1));
    }
}
