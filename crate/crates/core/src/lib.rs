//! Short-arc components of normal surface singularities, computed from
//! plumbing graphs.
//!
//! The crate works with the dual resolution graph of a singularity. From it
//! we build the minimal dlt model and enumerate the connected components of
//! the short-arc space, each tagged with the conjugacy class its boundary
//! circle winds around in the fundamental group of the link.

pub mod arc;
pub mod calculus;
pub mod checks;
pub mod cli;
pub mod components;
pub mod cusp;
pub mod graph;
pub mod inoue;
pub mod hjcf;
pub mod quadratic;
pub mod quotient;
pub mod report;
pub mod seifert;

pub use calculus::{
    analyze_graph, minimal_dlt_model, minimal_log_resolution, rational_chain_tails, singularity_class,
    CalculusError, DltKind, DltModel, OrbifoldPoint, SingClass, Tail,
};
pub use graph::{classify_shape, intersection_matrix, is_negative_definite, parse_plumbing, GraphError, PlumbingGraph, ShapeClass};
pub use hjcf::{bracket, chain_exponent, hj_expand, hj_numerator, mono_product, HjError, HjFraction, Mat2, Vec2};
pub use quadratic::{QuadElement, QuadError};
pub use components::{enumerate_components, jsj_split, winding_class, ComponentsError};
pub use cusp::{check_duality, dual_sequence, monodromy, recover_sequence, CuspError, CuspSequence};
pub use inoue::{inoue_cross_check, quad_mult_matrix, sign_cone, InoueError, Lattice, SignCone};
pub use quotient::{conjugacy_classes, cyclic_quotient_components, group_closure, mckay_report, QuotientError};
pub use report::{analyze, AnalysisReport};
pub use seifert::{enumerate_seifert_components, pi1_presentation, seifert_data, SeifertError};
