//! Labels for connected components of the short-arc space.

use std::fmt;

use num_bigint::BigInt;

use crate::hjcf::Vec2;

/// Where the generic arc of a component has its center, with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    /// Arcs meeting the interior of curve `vertex` with multiplicity `m`.
    CurveInterior { vertex: String, m: BigInt },
    /// Arcs through a node point; `edge` indexes the residual graph edges.
    NodePoint { edge: usize, u: String, v: String, mu: BigInt, mv: BigInt },
    /// Arcs through a cyclic quotient point on `vertex`, intersection
    /// number `numerator / m`.
    OrbifoldPoint { vertex: String, leg: String, numerator: BigInt, m: BigInt },
}

impl ComponentKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ComponentKind::CurveInterior { .. } => "curve",
            ComponentKind::NodePoint { .. } => "node",
            ComponentKind::OrbifoldPoint { .. } => "orbifold",
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::CurveInterior { vertex, m } => write!(f, "SA({vertex}, {m})"),
            ComponentKind::NodePoint { u, v, mu, mv, .. } => write!(f, "SA({u}|{v}, {mu}, {mv})"),
            ComponentKind::OrbifoldPoint { vertex, leg, numerator, m } => {
                write!(f, "SA({vertex}@{leg}, {numerator}/{m})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomotopyType {
    /// `S^1` times a wedge of this many circles.
    CircleTimesWedge(u64),
    CircleBundleOverClosedSurface { genus: u32, chern: BigInt },
    TwoTorus,
    Circle,
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyType::CircleTimesWedge(n) => write!(f, "S1 x wedge({n})"),
            HomotopyType::CircleBundleOverClosedSurface { genus, chern } => {
                write!(f, "S1-bundle(g={genus}, c={chern})")
            }
            HomotopyType::TwoTorus => write!(f, "T2"),
            HomotopyType::Circle => write!(f, "S1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// The class `h` of a regular fiber of the piece.
    Central,
    /// The generator `g_i` at the end of a contracted leg.
    Leg { id: String, alpha: BigInt },
    /// The fiber class of a curve that is not a node.
    Vertex(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindingClass {
    SeifertWord { piece: String, generator: Generator, exponent: BigInt },
    /// `gamma_u^mu gamma_v^mv` in the torus around an edge.
    EdgeTorus { chain: usize, u: String, v: String, exponents: (BigInt, BigInt) },
    CuspLattice(Vec2),
}

impl fmt::Display for WindingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindingClass::SeifertWord { piece, generator, exponent } => match generator {
                Generator::Central => write!(f, "h[{piece}]^{exponent}"),
                Generator::Leg { id, .. } => write!(f, "g[{id}]^{exponent}"),
                Generator::Vertex(v) => write!(f, "gamma[{v}]^{exponent}"),
            },
            WindingClass::EdgeTorus { u, v, exponents: (a, b), .. } => {
                write!(f, "gamma[{u}]^{a} gamma[{v}]^{b}")
            }
            WindingClass::CuspLattice(w) => write!(f, "lattice{w}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    OneParameterFamily,
    Unique,
    NotApplicable,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::OneParameterFamily => "one-parameter-family",
            FamilyTag::Unique => "unique",
            FamilyTag::NotApplicable => "n/a",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcComponent {
    pub kind: ComponentKind,
    pub winding: WindingClass,
    pub homotopy: HomotopyType,
    pub family: FamilyTag,
}

impl fmt::Display for ArcComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  winding {}  homotopy {}  family {}", self.kind, self.winding, self.homotopy, self.family)
    }
}
