use serde::{Deserialize, Serialize};

use super::search::{search_with_cone, SearchConfig, SearchOutcome};
use super::variety::Variety;
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::implicitize;
use crate::invariants::{zariski_tangent_dim, AffinePoint};
use crate::poly::{Monomial, Parametrization, Polynomial, Rational, Ring};

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of degree `d` in `vars` variables, lexicographically decreasing.
fn exponents(vars: usize, d: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|e| {
            exponents(vars - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

/// All degree-`d` monomials in `a0..ar`, as a map into `C^{binom(r+d, d)}`
/// with coordinates `z0, z1, ...`.
pub fn veronese_parametrization(r: usize, d: u32) -> Result<Parametrization> {
    if r == 0 || d == 0 {
        return Err(Error::precondition("need r ≥ 1 and d ≥ 1"));
    }
    let params = Ring::new((0..=r).map(|i| format!("a{i}")))?;
    let monomials = exponents(r + 1, d);
    let target = Ring::new((0..monomials.len()).map(|i| format!("z{i}")))?;
    let comps = monomials
        .into_iter()
        .map(|e| Polynomial::monomial(&params, Monomial::from_exponents(e), Rational::from_integer(1.into())))
        .collect();
    Parametrization::new(target, comps)
}

/// Ideal of the affine cone over the `d`-tuple embedding of `P^r`.
pub fn veronese_cone(r: usize, d: u32, budget: &Budget) -> Result<Ideal> {
    implicitize(&veronese_parametrization(r, d)?, budget)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalityProxyReport {
    pub r: usize,
    pub d: u32,
    pub target: usize,
    pub ambient_dim: usize,
    pub cone_tangent_dim: usize,
    /// Rows of the certified projection, as `p/q` strings.
    pub projection: Option<Vec<Vec<String>>>,
    pub attempts: usize,
    pub image_tangent_dim: Option<usize>,
    pub tangent_dim_drops: bool,
    pub conclusion: String,
}

/// Tangent dimension of the Veronese cone at its vertex, a certified
/// projection to `C^target`, and the tangent dimension of the image.
///
/// A strict drop means the projection, though a bi-Lipschitz homeomorphism
/// onto its image, is not biregular. Normality of the image is not decided
/// here; the report only states the implied conclusion.
pub fn normality_proxy_report(
    r: usize,
    d: u32,
    target: usize,
    seed: u64,
    attempts: usize,
    budget: &Budget,
) -> Result<NormalityProxyReport> {
    let p = veronese_parametrization(r, d)?;
    let ambient_dim = p.target.arity();
    if target < 2 * r + 1 {
        return Err(Error::precondition(format!("need target ≥ 2r + 1 = {}", 2 * r + 1)));
    }
    let cone = Variety::from_parametrization(p, budget)?;
    let vertex = AffinePoint::origin(ambient_dim);
    let cone_tangent_dim = zariski_tangent_dim(&cone.ideal, &vertex, budget)?;
    let (secants, _) = cone.secant_cone(budget)?;
    let config = SearchConfig { target, seed, attempts };
    let (projection, image_tangent_dim) = match search_with_cone(&secants, &config, budget)? {
        SearchOutcome::Certified { projection, .. } => {
            let image = cone.image_ideal(&projection, budget)?;
            let dim = zariski_tangent_dim(&image, &AffinePoint::origin(target), budget)?;
            (Some(projection.to_strings()), Some(dim))
        }
        // zero padding adds linear equations only, so the tangent space is unchanged
        SearchOutcome::Embedding { rows } => (
            Some(rows.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()),
            Some(cone_tangent_dim),
        ),
        _ => (None, None),
    };
    let tangent_dim_drops = image_tangent_dim.is_some_and(|t| t < cone_tangent_dim);
    let conclusion = if tangent_dim_drops {
        "implied: the image is bi-Lipschitz but not biregularly equivalent to the normal cone, so it is not normal"
    } else if projection.is_none() {
        "no certified projection found; nothing implied"
    } else {
        "tangent dimension did not drop; nothing implied"
    };
    Ok(NormalityProxyReport {
        r,
        d,
        target,
        ambient_dim,
        cone_tangent_dim,
        projection,
        attempts,
        image_tangent_dim,
        tangent_dim_drops,
        conclusion: conclusion.to_string(),
    })
}
