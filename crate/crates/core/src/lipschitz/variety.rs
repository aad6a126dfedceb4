use super::projection::LinearProjection;
use super::secant::{secant_cone, secant_cone_parametric, SecantCone, SecantRoute};
use crate::error::Result;
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::{eliminate_split, implicitize, linear_form, VariableSplit};
use crate::poly::{Parametrization, Polynomial, Ring};

/// A variety given by its ideal, and optionally by a parametrization of a
/// dense subset, which enables cheaper secant computations.
#[derive(Clone, Debug)]
pub struct Variety {
    pub ideal: Ideal,
    pub parametrization: Option<Parametrization>,
}

impl Variety {
    pub fn from_ideal(ideal: Ideal) -> Self {
        Variety {
            ideal,
            parametrization: None,
        }
    }

    pub fn from_parametrization(p: Parametrization, budget: &Budget) -> Result<Self> {
        Ok(Variety {
            ideal: implicitize(&p, budget)?,
            parametrization: Some(p),
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn secant_cone(&self, budget: &Budget) -> Result<(SecantCone, SecantRoute)> {
        match &self.parametrization {
            Some(p) => Ok((secant_cone_parametric(p, budget)?, SecantRoute::Parametric)),
            None => Ok((secant_cone(&self.ideal, budget)?, SecantRoute::Scaling)),
        }
    }

    /// Ideal of the closure of `M(X)` in `C^k`, coordinates `w1..wk`.
    pub fn image_ideal(&self, m: &LinearProjection, budget: &Budget) -> Result<Ideal> {
        let k = m.target_dim();
        match &self.parametrization {
            Some(p) => {
                let names = (1..=k).map(|i| p.params().fresh_name(&format!("w{i}")));
                let target = Ring::new(names)?;
                let forms: Vec<Polynomial> = m.rows().iter().map(|r| linear_form(&p.target, r)).collect();
                implicitize(&p.then(target, &forms)?, budget)
            }
            None => {
                let source = self.ring();
                let names = (1..=k).map(|i| source.fresh_name(&format!("w{i}")));
                let ring = source.concat(&Ring::new(names)?)?;
                let n = source.arity();
                let xs: Vec<usize> = (0..n).collect();
                let mut gens: Vec<Polynomial> = self.ideal.generators().iter().map(|g| g.embed(&ring, &xs)).collect();
                for (j, r) in m.rows().iter().enumerate() {
                    let form = linear_form(source, r).embed(&ring, &xs);
                    gens.push(&Polynomial::var(&ring, n + j) - &form);
                }
                eliminate_split(&Ideal::new(&ring, gens)?, &VariableSplit::from_indices(&ring, &xs), budget)
            }
        }
    }
}
