//! Serializable reports shared by the command line and the bindings.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arc::{ArcComponent, ComponentKind};
use crate::calculus::{analyze_graph, CalculusError, DltKind, DltModel, SingClass};
use crate::components::{enumerate_components, ComponentsError};
use crate::cusp::{check_duality, CuspSequence};
use crate::graph::{intersection_matrix, is_negative_definite, PlumbingGraph};
use crate::quotient::{cyclic_quotient_components, Center};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ComponentRecord {
    pub kind: String,
    pub location: String,
    pub multiplicity: String,
    pub winding: String,
    pub homotopy: String,
    pub family: String,
}

impl From<&ArcComponent> for ComponentRecord {
    fn from(c: &ArcComponent) -> Self {
        let (location, multiplicity) = match &c.kind {
            ComponentKind::CurveInterior { vertex, m } => (vertex.clone(), m.to_string()),
            ComponentKind::NodePoint { u, v, mu, mv, .. } => (format!("{u}-{v}"), format!("{mu},{mv}")),
            ComponentKind::OrbifoldPoint { vertex, leg, numerator, m } => {
                (format!("{vertex}/{leg}"), format!("{numerator}/{m}"))
            }
        };
        ComponentRecord {
            kind: c.kind.tag().to_string(),
            location,
            multiplicity,
            winding: c.winding.to_string(),
            homotopy: c.homotopy.to_string(),
            family: c.family.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DltSummary {
    pub kind: String,
    pub residual: Vec<String>,
    pub orbifold_points: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualitySummary {
    pub sequence: String,
    pub dual: String,
    pub monodromy: String,
    pub trace: String,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub negative_definite: bool,
    pub duality: Option<DualitySummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: String,
    pub class: String,
    pub dlt: DltSummary,
    pub bound: u64,
    pub components: Vec<ComponentRecord>,
    pub validation: Validation,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Components(#[from] ComponentsError),
    #[error("{0}")]
    Other(String),
}

fn dlt_summary(d: &DltModel) -> DltSummary {
    DltSummary {
        kind: match d.kind {
            DltKind::SelfDlt => "self-dlt".into(),
            DltKind::Model => "model".into(),
        },
        residual: d.residual.vertices.iter().map(|v| format!("{} e={} g={}", v.id, v.euler, v.genus)).collect(),
        orbifold_points: d
            .orbifold_points
            .iter()
            .map(|p| format!("{} on {} ({}/{})", p.leg, p.host, p.omega, p.m))
            .collect(),
    }
}

fn cyclic_records(m: &BigInt, q: &BigInt, n: u64) -> Result<Vec<ComponentRecord>, ReportError> {
    let labels = cyclic_quotient_components(m, q, n).map_err(|e| ReportError::Other(e.to_string()))?;
    Ok(labels
        .iter()
        .map(|l| ComponentRecord {
            kind: "cyclic".into(),
            location: match l.center {
                Center::OnCurve => "on-curve".into(),
                Center::AtOrigin => "origin".into(),
            },
            multiplicity: format!("{}/{}", l.a, l.m),
            winding: format!("t -> (t^{}, t^{})", l.m1, l.c),
            homotopy: String::new(),
            family: String::new(),
        })
        .collect())
}

/// Components of a model as report records, sorted by kind, location and
/// multiplicity. Non-cyclic quotients report none: their components are
/// the conjugacy classes of the local group.
pub fn component_records(d: &DltModel, n: u64) -> Result<Vec<ComponentRecord>, ReportError> {
    let mut out = match (&d.kind, &d.class) {
        (DltKind::SelfDlt, SingClass::CyclicQuotient { m, q }) => cyclic_records(m, q, n)?,
        (DltKind::SelfDlt, _) => Vec::new(),
        _ => enumerate_components(d, n)?.iter().map(ComponentRecord::from).collect(),
    };
    out.sort_by_cached_key(|r| (r.kind.clone(), r.location.clone(), mult_key(&r.multiplicity)));
    Ok(out)
}

fn mult_key(s: &str) -> Vec<i64> {
    s.split([',', '/']).map(|t| t.parse().unwrap_or(i64::MAX)).collect()
}

pub fn analyze(g: &PlumbingGraph, n: u64) -> Result<AnalysisReport, ReportError> {
    let negative_definite = is_negative_definite(&intersection_matrix(g));
    let d = analyze_graph(g)?;
    let duality = match &d.class {
        SingClass::Cusp(b) => {
            let c = CuspSequence::new(b.clone()).map_err(|e| ReportError::Other(e.to_string()))?;
            let r = check_duality(&c);
            Some(DualitySummary {
                sequence: r.b.to_string(),
                dual: r.b_star.canonical().to_string(),
                monodromy: r.m.to_string(),
                trace: r.m.trace().to_string(),
                identity_holds: r.t_identity_holds && r.traces_equal,
            })
        }
        _ => None,
    };
    Ok(AnalysisReport {
        schema: SCHEMA,
        input: g.name.clone().unwrap_or_default(),
        class: d.class.label(),
        dlt: dlt_summary(&d),
        bound: n,
        components: component_records(&d, n)?,
        validation: Validation { negative_definite, duality },
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input));
        out.push_str(&format!("class: {}\n", self.class));
        out.push_str(&format!("negative definite: {}\n", self.validation.negative_definite));
        out.push_str(&format!("dlt: {}\n", self.dlt.kind));
        for r in &self.dlt.residual {
            out.push_str(&format!("  curve {r}\n"));
        }
        for p in &self.dlt.orbifold_points {
            out.push_str(&format!("  point {p}\n"));
        }
        if let Some(d) = &self.validation.duality {
            out.push_str(&format!(
                "cusp {} dual {} monodromy {} MT=TM*: {}\n",
                d.sequence, d.dual, d.monodromy, d.identity_holds
            ));
        }
        out.push_str(&format!("components (bound {}): {}\n", self.bound, self.components.len()));
        for c in &self.components {
            out.push_str(&format!("  {} {} {} {}", c.kind, c.location, c.multiplicity, c.winding));
            if !c.homotopy.is_empty() {
                out.push_str(&format!(" [{}]", c.homotopy));
            }
            out.push('\n');
        }
        out
    }
}
