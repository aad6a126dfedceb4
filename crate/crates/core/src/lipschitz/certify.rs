use serde::{Deserialize, Serialize};

use super::projection::LinearProjection;
use super::secant::{projective_empty_intersection, secant_cone, SecantCone};
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::linear_form;
use crate::poly::Polynomial;

/// Outcome of testing a projection against Σ. Budget exhaustion is an error,
/// not a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    BiLipschitz,
    NotBiLipschitz,
}

impl Verdict {
    pub fn is_bi_lipschitz(self) -> bool {
        self == Verdict::BiLipschitz
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::BiLipschitz => "BiLipschitz",
            Verdict::NotBiLipschitz => "NotBiLipschitz",
        })
    }
}

/// Rows of `M` as linear forms in the direction variables; they cut out the center.
pub fn center_forms(cone: &SecantCone, m: &LinearProjection) -> Result<Vec<Polynomial>> {
    if m.source_dim() != cone.arity() {
        return Err(Error::ArityMismatch {
            expected: cone.arity(),
            actual: m.source_dim(),
        });
    }
    Ok(m.rows().iter().map(|r| linear_form(&cone.ring, r)).collect())
}

/// `π_M` restricted to the set is bi-Lipschitz iff the center misses Σ.
pub fn certify_with_cone(cone: &SecantCone, m: &LinearProjection, budget: &Budget) -> Result<Verdict> {
    let forms = center_forms(cone, m)?;
    if m.has_empty_center() {
        return Ok(Verdict::BiLipschitz);
    }
    Ok(if projective_empty_intersection(&cone.ideal, &forms, budget)? {
        Verdict::BiLipschitz
    } else {
        Verdict::NotBiLipschitz
    })
}

pub fn certify_projection(ideal: &Ideal, m: &LinearProjection, budget: &Budget) -> Result<Verdict> {
    if m.source_dim() != ideal.ring().arity() {
        return Err(Error::ArityMismatch {
            expected: ideal.ring().arity(),
            actual: m.source_dim(),
        });
    }
    if m.has_empty_center() {
        return Ok(Verdict::BiLipschitz);
    }
    certify_with_cone(&secant_cone(ideal, budget)?, m, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{integer, Ring};

    #[test]
    fn plane_examples() {
        let b = Budget::default();
        let r = Ring::new(["x", "y"]).unwrap();
        let drop_y = LinearProjection::coordinates(2, &[0]).unwrap();
        let parabola = Ideal::parse(&r, &["y - x^2"]).unwrap();
        assert_eq!(certify_projection(&parabola, &drop_y, &b).unwrap(), Verdict::NotBiLipschitz);
        let axis = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(certify_projection(&axis, &drop_y, &b).unwrap(), Verdict::BiLipschitz);
        let id = LinearProjection::identity(2);
        assert_eq!(certify_projection(&parabola, &id, &b).unwrap(), Verdict::BiLipschitz);
        let diagonal = LinearProjection::new(vec![vec![integer(1), integer(-1)]]).unwrap();
        let line = Ideal::parse(&r, &["y - x"]).unwrap();
        assert_eq!(certify_projection(&line, &diagonal, &b).unwrap(), Verdict::NotBiLipschitz);
    }
}
