use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::certify::certify_with_cone;
use super::projection::LinearProjection;
use super::secant::{SecantCone, SecantRoute};
use super::variety::Variety;
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::invariants::dimension;
use crate::linalg;
use crate::poly::{integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub target: usize,
    pub seed: u64,
    pub attempts: usize,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A projection certified bi-Lipschitz on the `attempt`-th draw (1-based).
    Certified {
        projection: LinearProjection,
        attempt: usize,
    },
    /// `target ≥ n`: the identity followed by zero rows embeds isometrically.
    Embedding { rows: Vec<Vec<Rational>> },
    /// No draw was certified. Says nothing about existence.
    Inconclusive { attempts: usize },
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        !matches!(self, SearchOutcome::Inconclusive { .. })
    }

    pub fn rows(&self) -> Option<&[Vec<Rational>]> {
        match self {
            SearchOutcome::Certified { projection, .. } => Some(projection.rows()),
            SearchOutcome::Embedding { rows } => Some(rows),
            SearchOutcome::Inconclusive { .. } => None,
        }
    }
}

fn padded_identity(n: usize, target: usize) -> Vec<Vec<Rational>> {
    (0..target)
        .map(|i| (0..n).map(|j| integer(i64::from(i == j))).collect())
        .collect()
}

/// Draws `target × n` integer matrices from the box `[-a, a]` on attempt `a`
/// and returns the first one whose center misses Σ.
pub fn search_with_cone(cone: &SecantCone, config: &SearchConfig, budget: &Budget) -> Result<SearchOutcome> {
    let n = cone.arity();
    if config.target == 0 {
        return Err(Error::precondition("target dimension must be positive"));
    }
    if config.target >= n {
        return Ok(SearchOutcome::Embedding {
            rows: padded_identity(n, config.target),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for attempt in 1..=config.attempts {
        let bound = attempt as i64;
        let rows: Vec<Vec<Rational>> = (0..config.target)
            .map(|_| (0..n).map(|_| integer(rng.gen_range(-bound..=bound))).collect())
            .collect();
        if linalg::rank(&rows) < config.target {
            continue;
        }
        let m = LinearProjection::new(rows)?;
        if certify_with_cone(cone, &m, budget)?.is_bi_lipschitz() {
            return Ok(SearchOutcome::Certified { projection: m, attempt });
        }
    }
    Ok(SearchOutcome::Inconclusive {
        attempts: config.attempts,
    })
}

/// Random projection to `C^target`, certified exactly. Requires
/// `target ≥ 2·dim X + 1`.
pub fn random_center_search(
    x: &Variety,
    config: &SearchConfig,
    budget: &Budget,
) -> Result<(SearchOutcome, Option<SecantRoute>)> {
    let dim = dimension(&x.ideal, budget)?;
    if config.target < 2 * dim + 1 {
        return Err(Error::precondition(format!(
            "target {} is below 2·{dim} + 1",
            config.target
        )));
    }
    if config.target >= x.ring().arity() {
        let outcome = search_with_cone(&trivial_cone(x.ring().arity()), config, budget)?;
        return Ok((outcome, None));
    }
    let (cone, route) = x.secant_cone(budget)?;
    Ok((search_with_cone(&cone, config, budget)?, Some(route)))
}

fn trivial_cone(n: usize) -> SecantCone {
    let ring = super::secant::direction_ring(n);
    SecantCone {
        ideal: crate::groebner::Ideal::zero(&ring),
        ring,
    }
}
