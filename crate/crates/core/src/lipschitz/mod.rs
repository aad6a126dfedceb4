//! Secant directions, projection certificates, graph ideals, invariance
//! pipelines and Veronese cones.

mod certify;
mod graph;
mod pipelines;
mod projection;
mod search;
mod secant;
mod variety;
mod veronese;

pub use certify::{center_forms, certify_projection, certify_with_cone, Verdict};
pub use graph::{graph_ideal, AlgebraicMap};
pub use pipelines::{
    graph_parametrization, verify_degree_invariance, verify_multiplicity_invariance, CertificateKind, DegreeReport,
    MultiplicityReport, NumericFallback,
};
pub use projection::LinearProjection;
pub use search::{random_center_search, search_with_cone, SearchConfig, SearchOutcome};
pub use secant::{
    direction_ring, projective_empty_intersection, projective_empty_intersection_by_radical, secant_cone,
    secant_cone_by_minors, secant_cone_parametric, secant_direction, SecantCone, SecantRoute,
};
pub use variety::Variety;
pub use veronese::{binomial, normality_proxy_report, veronese_cone, veronese_parametrization, NormalityProxyReport};
