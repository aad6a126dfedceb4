//! Degree and multiplicity invariance under maps whose graph projects
//! bi-Lipschitz onto both factors.

use serde::{Deserialize, Serialize};

use super::graph::{graph_ideal, AlgebraicMap};
use super::secant::{projective_empty_intersection, secant_cone, secant_cone_parametric, SecantCone, SecantRoute};
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::{eliminate_split, VariableSplit};
use crate::invariants::{degree, multiplicity, tangent_cone, AffinePoint};
use crate::poly::{Parametrization, Polynomial};
use crate::sampler::{distance_to_coordinate_subspace, secant_cloud};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Symbolic,
    /// Sampled secant directions stay away from both centers; not a proof.
    Numeric,
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CertificateKind::Symbolic => "symbolic certificate",
            CertificateKind::Numeric => "numeric certificate",
        })
    }
}

/// Settings for the sampled fallback used when Σ of the graph exceeds the budget.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericFallback {
    pub pairs: usize,
    pub seed: u64,
    /// Minimal sup distance from every sampled direction to each center.
    pub threshold: f64,
}

impl Default for NumericFallback {
    fn default() -> Self {
        NumericFallback {
            pairs: 2000,
            seed: 0,
            threshold: 1e-3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree_source: u64,
    pub degree_graph: u64,
    pub degree_image: u64,
    /// Both coordinate projections of the graph avoid its Σ.
    pub certified: bool,
    pub certificate: CertificateKind,
    pub secant_route: Option<SecantRoute>,
    pub degrees_agree: bool,
}

impl DegreeReport {
    /// Certified but with differing degrees.
    pub fn violated(&self) -> bool {
        self.certified && !self.degrees_agree
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub mult_source: u64,
    pub mult_graph: u64,
    pub mult_image: u64,
    /// The tangent cone of the graph misses both projection centers.
    pub certified: bool,
    pub multiplicities_agree: bool,
}

impl MultiplicityReport {
    pub fn violated(&self) -> bool {
        self.certified && !self.multiplicities_agree
    }
}

/// Forms cutting out the centers of the projections of the graph onto the
/// source (first `n` variables) and onto the target (the rest).
fn factor_forms(ring: &crate::poly::Ring, n: usize) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let all: Vec<Polynomial> = (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect();
    let (x, y) = all.split_at(n);
    (x.to_vec(), y.to_vec())
}

fn both_centers_avoid(cone: &Ideal, n: usize, budget: &Budget) -> Result<bool> {
    let (x, y) = factor_forms(cone.ring(), n);
    Ok(projective_empty_intersection(cone, &x, budget)? && projective_empty_intersection(cone, &y, budget)?)
}

fn image_ideal(f: &AlgebraicMap, graph: &Ideal, budget: &Budget) -> Result<Ideal> {
    let xs: Vec<usize> = (0..f.source.ring().arity()).collect();
    eliminate_split(graph, &VariableSplit::from_indices(graph.ring(), &xs), budget)
}

/// Parametrization of the graph over the parameters of `p`.
pub fn graph_parametrization(f: &AlgebraicMap, p: &Parametrization) -> Result<Parametrization> {
    if p.target != *f.source.ring() {
        return Err(Error::RingMismatch);
    }
    if !f.is_polynomial() {
        return Err(Error::precondition("graph parametrization needs a polynomial map"));
    }
    let ring = f.source.ring();
    let mut map: Vec<Polynomial> = (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect();
    map.extend(f.components.iter().cloned());
    p.then(f.graph_ring()?, &map)
}

fn numeric_certificate(graph_param: &Parametrization, n: usize, fallback: &NumericFallback) -> Result<bool> {
    let total = graph_param.target.arity();
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..total).collect();
    let cloud = secant_cloud(graph_param, fallback.pairs, fallback.seed)?;
    Ok(!cloud.is_empty()
        && cloud.iter().all(|d| {
            distance_to_coordinate_subspace(d, &xs) > fallback.threshold
                && distance_to_coordinate_subspace(d, &ys) > fallback.threshold
        }))
}

/// Degrees of `X`, of the graph `Γ` of `f` and of `Y = f(X)`.
///
/// Σ of `Γ` is computed from the graph parametrization when `param` (a
/// parametrization of `X`) is given, and from the graph ideal otherwise. If
/// that exceeds the budget and a parametrization is available, sampled
/// secant directions stand in and the report says so. Injectivity of `f` is
/// not checked.
pub fn verify_degree_invariance(
    f: &AlgebraicMap,
    param: Option<&Parametrization>,
    fallback: &NumericFallback,
    budget: &Budget,
) -> Result<DegreeReport> {
    let n = f.source.ring().arity();
    let graph = graph_ideal(f, budget)?;
    let image = image_ideal(f, &graph, budget)?;
    let degree_source = degree(&f.source, budget)?;
    let degree_graph = degree(&graph, budget)?;
    let degree_image = degree(&image, budget)?;

    let graph_param = match param {
        Some(p) if f.is_polynomial() => Some(graph_parametrization(f, p)?),
        _ => None,
    };
    let symbolic: Result<(SecantCone, SecantRoute)> = match &graph_param {
        Some(gp) => secant_cone_parametric(gp, budget).map(|c| (c, SecantRoute::Parametric)),
        None => secant_cone(&graph, budget).map(|c| (c, SecantRoute::Scaling)),
    };
    let (certified, certificate, secant_route) = match symbolic {
        Ok((cone, route)) => (both_centers_avoid(&cone.ideal, n, budget)?, CertificateKind::Symbolic, Some(route)),
        Err(e) if e.is_budget() && graph_param.is_some() => {
            let ok = numeric_certificate(graph_param.as_ref().unwrap(), n, fallback)?;
            (ok, CertificateKind::Numeric, None)
        }
        Err(e) => return Err(e),
    };
    Ok(DegreeReport {
        degree_source,
        degree_graph,
        degree_image,
        certified,
        certificate,
        secant_route,
        degrees_agree: degree_source == degree_graph && degree_graph == degree_image,
    })
}

/// Multiplicities of `X` at `p`, of `Γ` at `(p, f(p))` and of `Y` at `f(p)`.
pub fn verify_multiplicity_invariance(f: &AlgebraicMap, p: &AffinePoint, budget: &Budget) -> Result<MultiplicityReport> {
    let n = f.source.ring().arity();
    if p.coordinates().len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            actual: p.coordinates().len(),
        });
    }
    if !p.lies_on(&f.source)? {
        return Err(Error::PointNotOnVariety);
    }
    let fp = f
        .evaluate(p.coordinates())?
        .ok_or_else(|| Error::precondition("map is not defined at the point"))?;
    let graph = graph_ideal(f, budget)?;
    let image = image_ideal(f, &graph, budget)?;
    let q = AffinePoint(p.coordinates().iter().chain(&fp).cloned().collect());
    let fp = AffinePoint(fp);
    let mult_source = multiplicity(&f.source, p, budget)?;
    let mult_graph = multiplicity(&graph, &q, budget)?;
    let mult_image = multiplicity(&image, &fp, budget)?;
    let cone = tangent_cone(&graph, &q, budget)?;
    let certified = both_centers_avoid(&cone, n, budget)?;
    Ok(MultiplicityReport {
        mult_source,
        mult_graph,
        mult_image,
        certified,
        multiplicities_agree: mult_source == mult_graph && mult_graph == mult_image,
    })
}
