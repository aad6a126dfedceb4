//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::Ring;

use num_traits::ToPrimitive;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator out of f64 range: fall back through the quotient
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// A polynomial map from parameter space into affine space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    /// Ring of the image coordinates.
    pub target: Ring,
    /// One polynomial per target coordinate, all in the same parameter ring.
    pub components: Vec<Polynomial>,
}

impl Parametrization {
    pub fn new(target: Ring, components: Vec<Polynomial>) -> crate::Result<Self> {
        if components.len() != target.arity() {
            return Err(crate::Error::ArityMismatch {
                expected: target.arity(),
                actual: components.len(),
            });
        }
        let params = components[0].ring().clone();
        if components.iter().any(|c| *c.ring() != params) {
            return Err(crate::Error::RingMismatch);
        }
        if params.variables().iter().any(|v| target.contains(v)) {
            return Err(crate::Error::InvalidRing(
                "parameter and coordinate names overlap".into(),
            ));
        }
        Ok(Parametrization { target, components })
    }

    pub fn params(&self) -> &Ring {
        self.components[0].ring()
    }

    pub fn evaluate(&self, params: &[Rational]) -> crate::Result<Vec<Rational>> {
        self.components.iter().map(|c| c.evaluate(params)).collect()
    }

    /// Post-composition with a polynomial map whose components live in the target ring.
    pub fn then(&self, target: Ring, map: &[Polynomial]) -> crate::Result<Parametrization> {
        let comps = map
            .iter()
            .map(|f| f.compose(&self.components))
            .collect::<crate::Result<Vec<_>>>()?;
        Parametrization::new(target, comps)
    }
}
