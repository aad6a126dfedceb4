//! Dimension, degree, tangent cones, multiplicity and Zariski tangent dimension.

mod hilbert;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Budget, Ideal};
use crate::ideal_ops::translate;
use crate::linalg;
use crate::poly::{MonomialOrder, Polynomial, Rational, Ring};

/// Dimension and degree of `V(I)`, the latter being the degree of the
/// projective closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dimension: usize,
    pub degree: u64,
}

/// Affine Hilbert polynomial data of `I` from the leading-term ideal of a
/// grevlex basis. The zero ideal gives `(arity, 1)`.
pub fn hilbert_data(ideal: &Ideal, budget: &Budget) -> Result<HilbertData> {
    let gb = ideal.basis(budget)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ring().arity();
    let lms: Vec<Vec<u32>> = gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
    let numerator = hilbert::HilbertNumerator::default().compute(lms);
    let (dimension, degree) = hilbert::dimension_and_degree(&numerator, n).ok_or(Error::UnitIdeal)?;
    Ok(HilbertData {
        dimension,
        degree: u64::try_from(degree).expect("Hilbert polynomial has positive leading coefficient"),
    })
}

pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    hilbert_data(ideal, budget).map(|h| h.dimension)
}

pub fn degree(ideal: &Ideal, budget: &Budget) -> Result<u64> {
    hilbert_data(ideal, budget).map(|h| h.degree)
}

/// A point of affine space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoint(pub Vec<Rational>);

impl AffinePoint {
    pub fn origin(arity: usize) -> Self {
        AffinePoint(vec![Rational::zero(); arity])
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    /// Exact check that every generator vanishes here.
    pub fn lies_on(&self, ideal: &Ideal) -> Result<bool> {
        for g in ideal.generators() {
            if !g.evaluate(&self.0)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn require_on_variety(ideal: &Ideal, p: &AffinePoint) -> Result<()> {
    if p.0.len() != ideal.ring().arity() {
        return Err(Error::ArityMismatch {
            expected: ideal.ring().arity(),
            actual: p.0.len(),
        });
    }
    if !p.lies_on(ideal)? {
        return Err(Error::PointNotOnVariety);
    }
    Ok(())
}

/// Tangent cone of `V(I)` at `p`, translated to the origin.
///
/// The generators are translated, homogenized with a new variable `h`, and a
/// Gröbner basis is taken under the order "total degree, then larger power
/// of `h`". Setting `h = 1` in that basis yields a standard basis for the
/// local degree order, whose lowest-degree forms generate the cone.
pub fn tangent_cone(ideal: &Ideal, p: &AffinePoint, budget: &Budget) -> Result<Ideal> {
    require_on_variety(ideal, p)?;
    let ring = ideal.ring();
    let moved = translate(ideal, &p.0)?;
    if moved.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let hname = ring.fresh_name("h");
    let hring = Ring::new([hname])?.concat(ring)?;
    let homog: Vec<Polynomial> = moved.generators().iter().map(|g| g.homogenize_into(&hring, 0)).collect();
    let n = hring.arity();
    let mut h_weight = vec![0u64; n];
    h_weight[0] = 1;
    let ord = MonomialOrder::Weighted {
        weights: vec![1; n],
        tiebreak: Box::new(MonomialOrder::Weighted {
            weights: h_weight,
            tiebreak: Box::new(MonomialOrder::GrevLex),
        }),
    };
    let gb = groebner_basis(&homog, &hring, &ord, budget)?;
    if gb.is_unit() {
        // unreachable for points of V(I)
        return Err(Error::PointNotOnVariety);
    }
    let forms: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(|g| g.dehomogenize_into(ring, 0).lowest_form())
        .collect();
    Ideal::new(ring, forms)
}

/// Multiplicity of `V(I)` at `p`: the degree of the tangent cone.
pub fn multiplicity(ideal: &Ideal, p: &AffinePoint, budget: &Budget) -> Result<u64> {
    let cone = tangent_cone(ideal, p, budget)?;
    degree(&cone, budget)
}

/// `arity − rank J(p)`, with `J` the Jacobian of the reduced grevlex basis of `I`.
pub fn zariski_tangent_dim(ideal: &Ideal, p: &AffinePoint, budget: &Budget) -> Result<usize> {
    require_on_variety(ideal, p)?;
    let n = ideal.ring().arity();
    let gb = ideal.basis(budget)?;
    let rows = gb
        .elements()
        .iter()
        .map(|g| (0..n).map(|i| g.derivative(i).evaluate(&p.0)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(n - linalg::rank(&rows))
}
