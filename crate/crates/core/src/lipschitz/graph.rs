use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::{radical_membership, saturate};
use crate::poly::{Polynomial, Rational, Ring};

/// A map `X → C^m` given by `(f1, ..., fm) / d` on the set where `d ≠ 0`.
#[derive(Clone, Debug)]
pub struct AlgebraicMap {
    pub source: Ideal,
    pub components: Vec<Polynomial>,
    pub denominator: Option<Polynomial>,
    /// Coordinates of the target space.
    pub target: Ring,
}

impl AlgebraicMap {
    /// Target coordinates are named `v1..vm`, renamed if they clash with the source.
    pub fn new(source: Ideal, components: Vec<Polynomial>, denominator: Option<Polynomial>) -> Result<Self> {
        let names: Vec<String> = (1..=components.len())
            .map(|i| source.ring().fresh_name(&format!("v{i}")))
            .collect();
        if names.is_empty() {
            return Err(Error::precondition("map needs at least one component"));
        }
        let target = Ring::new(names)?;
        AlgebraicMap::with_target(source, components, denominator, target)
    }

    pub fn with_target(
        source: Ideal,
        components: Vec<Polynomial>,
        denominator: Option<Polynomial>,
        target: Ring,
    ) -> Result<Self> {
        if components.len() != target.arity() {
            return Err(Error::ArityMismatch {
                expected: target.arity(),
                actual: components.len(),
            });
        }
        let ring = source.ring();
        if components.iter().chain(denominator.iter()).any(|f| f.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        if target.variables().iter().any(|v| ring.contains(v)) {
            return Err(Error::InvalidRing("source and target names overlap".into()));
        }
        if matches!(&denominator, Some(d) if d.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        let denominator = denominator.filter(|d| !(d.is_constant() && d.constant_term() == Rational::from_integer(1.into())));
        Ok(AlgebraicMap {
            source,
            components,
            denominator,
            target,
        })
    }

    pub fn identity(source: Ideal) -> Result<Self> {
        let ring = source.ring().clone();
        let comps = (0..ring.arity()).map(|i| Polynomial::var(&ring, i)).collect();
        AlgebraicMap::new(source, comps, None)
    }

    /// The ring `x ⊕ target` of the graph.
    pub fn graph_ring(&self) -> Result<Ring> {
        self.source.ring().concat(&self.target)
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_none()
    }

    /// `f(p)`, or `None` where the denominator vanishes.
    pub fn evaluate(&self, p: &[Rational]) -> Result<Option<Vec<Rational>>> {
        let d = match &self.denominator {
            Some(d) => d.evaluate(p)?,
            None => Rational::from_integer(1.into()),
        };
        if num_traits::Zero::is_zero(&d) {
            return Ok(None);
        }
        let vals = self
            .components
            .iter()
            .map(|f| f.evaluate(p).map(|v| v / &d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(vals))
    }
}

/// Ideal of the closure of the graph: `I_X + ⟨d·v_j − f_j⟩`, saturated by `d`.
pub fn graph_ideal(f: &AlgebraicMap, budget: &Budget) -> Result<Ideal> {
    let n = f.source.ring().arity();
    let ring = f.graph_ring()?;
    let xs: Vec<usize> = (0..n).collect();
    let d = f.denominator.as_ref().map(|d| d.embed(&ring, &xs));
    if let Some(den) = &f.denominator {
        if radical_membership(den, &f.source, budget)? {
            return Err(Error::precondition("denominator vanishes on the source"));
        }
    }
    let mut gens: Vec<Polynomial> = f.source.generators().iter().map(|g| g.embed(&ring, &xs)).collect();
    for (j, c) in f.components.iter().enumerate() {
        let v = Polynomial::var(&ring, n + j);
        let lhs = match &d {
            Some(d) => d * &v,
            None => v,
        };
        gens.push(&lhs - &c.embed(&ring, &xs));
    }
    let ideal = Ideal::new(&ring, gens)?;
    match d {
        Some(d) => saturate(&ideal, &d, budget),
        None => Ok(ideal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(v: &[&str]) -> Ring {
        Ring::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn polynomial_graph() {
        let b = Budget::default();
        let r = ring(&["x", "y"]);
        let phi = AlgebraicMap::new(
            Ideal::zero(&r),
            vec![Polynomial::parse("x", &r).unwrap(), Polynomial::parse("y + x^2", &r).unwrap()],
            None,
        )
        .unwrap();
        let g = graph_ideal(&phi, &b).unwrap();
        let gr = ring(&["x", "y", "v1", "v2"]);
        assert!(g.same_ideal(&Ideal::parse(&gr, &["v1 - x", "v2 - y - x^2"]).unwrap(), &b).unwrap());
    }

    #[test]
    fn hyperbola_from_reciprocal() {
        let b = Budget::default();
        let r = ring(&["x"]);
        let one = Polynomial::one(&r);
        let f = AlgebraicMap::new(Ideal::zero(&r), vec![one], Some(Polynomial::var(&r, 0))).unwrap();
        let g = graph_ideal(&f, &b).unwrap();
        let gr = ring(&["x", "v1"]);
        assert!(g.same_ideal(&Ideal::parse(&gr, &["x*v1 - 1"]).unwrap(), &b).unwrap());
    }

    #[test]
    fn denominator_vanishing_on_source_is_rejected() {
        let b = Budget::default();
        let r = ring(&["x", "y"]);
        let axis = Ideal::parse(&r, &["x"]).unwrap();
        let f = AlgebraicMap::new(axis, vec![Polynomial::var(&r, 1)], Some(Polynomial::var(&r, 0))).unwrap();
        assert!(matches!(graph_ideal(&f, &b), Err(Error::Precondition(_))));
    }

    #[test]
    fn target_names_avoid_source() {
        let r = ring(&["v1", "y"]);
        let f = AlgebraicMap::identity(Ideal::zero(&r)).unwrap();
        assert!(!f.target.contains("v1"));
    }
}
