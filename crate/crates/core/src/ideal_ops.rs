//! Ideal-level constructions built on the Gröbner engine.

use crate::error::{Error, Result};
use crate::groebner::{Budget, GroebnerBasis, Ideal};
use crate::poly::{Monomial, MonomialOrder, Parametrization, Polynomial, Rational, Ring};

/// Partition of a ring's variables into an eliminated block and a kept block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSplit {
    pub ring: Ring,
    pub eliminated: Vec<usize>,
    pub kept: Vec<usize>,
}

impl VariableSplit {
    pub fn new(ring: &Ring, drop: &[&str]) -> Result<Self> {
        let mut eliminated = Vec::with_capacity(drop.len());
        for name in drop {
            let i = ring
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !eliminated.contains(&i) {
                eliminated.push(i);
            }
        }
        eliminated.sort_unstable();
        let kept = (0..ring.arity()).filter(|i| !eliminated.contains(i)).collect();
        Ok(VariableSplit {
            ring: ring.clone(),
            eliminated,
            kept,
        })
    }

    pub fn from_indices(ring: &Ring, eliminated: &[usize]) -> Self {
        let mut eliminated = eliminated.to_vec();
        eliminated.sort_unstable();
        eliminated.dedup();
        let kept = (0..ring.arity()).filter(|i| !eliminated.contains(i)).collect();
        VariableSplit {
            ring: ring.clone(),
            eliminated,
            kept,
        }
    }
}

/// `I ∩ k[kept]`, as an ideal of the ring on the kept variables.
///
/// Uses a block order with the eliminated variables first (grevlex in each
/// block). The basis elements free of eliminated variables form the reduced
/// grevlex basis of the elimination ideal, which is cached on the result.
pub fn eliminate(ideal: &Ideal, drop: &[&str], budget: &Budget) -> Result<Ideal> {
    let split = VariableSplit::new(ideal.ring(), drop)?;
    eliminate_split(ideal, &split, budget)
}

pub fn eliminate_split(ideal: &Ideal, split: &VariableSplit, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    if split.kept.is_empty() {
        return Err(Error::precondition("cannot eliminate every variable"));
    }
    let kept_ring = ring.select(&split.kept)?;
    if split.eliminated.is_empty() {
        return Ok(ideal.clone());
    }
    // reorder: eliminated block first, then kept block
    let order: Vec<usize> = split.eliminated.iter().chain(split.kept.iter()).copied().collect();
    let work_ring = ring.select(&order)?;
    let mut position = vec![0; ring.arity()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.embed(&work_ring, &position)).collect();
    let ord = MonomialOrder::elimination(split.eliminated.len());
    let gb = crate::groebner::groebner_basis(&gens, &work_ring, &ord, budget)?;
    let kept_positions: Vec<usize> = (split.eliminated.len()..order.len()).collect();
    let elements: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter_map(|g| g.restrict(&kept_ring, &kept_positions))
        .collect();
    Ok(Ideal::from_basis(GroebnerBasis::from_reduced_parts(
        kept_ring,
        MonomialOrder::GrevLex,
        elements,
    )))
}

/// Ideal of the Zariski closure of the image of `p`.
pub fn implicitize(p: &Parametrization, budget: &Budget) -> Result<Ideal> {
    let params = p.params();
    let ring = params.concat(&p.target)?;
    let np = params.arity();
    let param_map: Vec<usize> = (0..np).collect();
    let gens: Vec<Polynomial> = p
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| &Polynomial::var(&ring, np + i) - &c.embed(&ring, &param_map))
        .collect();
    let ideal = Ideal::new(&ring, gens)?;
    let split = VariableSplit::from_indices(&ring, &param_map);
    eliminate_split(&ideal, &split, budget)
}

/// Ring extended by one fresh variable (appended last).
fn extend_ring(ring: &Ring, base: &str) -> Result<(Ring, usize)> {
    let name = ring.fresh_name(base);
    let ext = ring.concat(&Ring::new([name])?)?;
    Ok((ext, ring.arity()))
}

fn lift(ideal: &Ideal, ext: &Ring) -> Vec<Polynomial> {
    let map: Vec<usize> = (0..ideal.ring().arity()).collect();
    ideal.generators().iter().map(|g| g.embed(ext, &map)).collect()
}

/// `I : g^∞` by the Rabinowitsch trick.
pub fn saturate(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if g.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let (ext, w) = extend_ring(ideal.ring(), "w")?;
    let map: Vec<usize> = (0..ideal.ring().arity()).collect();
    let mut gens = lift(ideal, &ext);
    let gw = &Polynomial::var(&ext, w) * &g.embed(&ext, &map);
    gens.push(&Polynomial::one(&ext) - &gw);
    let split = VariableSplit::from_indices(&ext, &[w]);
    eliminate_split(&Ideal::new(&ext, gens)?, &split, budget)
}

/// `I : J^∞`, the intersection of the saturations by the generators of `J`.
pub fn saturate_ideal(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    if by.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if by.is_zero_ideal() {
        // I : 0 is the whole ring
        return Ok(Ideal::unit(ideal.ring()));
    }
    if by.generators().iter().any(Polynomial::is_constant) {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let s = saturate(ideal, g, budget)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s, budget)?,
        });
    }
    Ok(acc.expect("at least one generator"))
}

/// `I ∩ J` by eliminating `w` from `w·I + (1 − w)·J`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(a.ring()));
    }
    let (ext, w) = extend_ring(a.ring(), "w")?;
    let wv = Polynomial::var(&ext, w);
    let one_minus = &Polynomial::one(&ext) - &wv;
    let mut gens: Vec<Polynomial> = lift(a, &ext).iter().map(|g| &wv * g).collect();
    gens.extend(lift(b, &ext).iter().map(|g| &one_minus * g));
    let split = VariableSplit::from_indices(&ext, &[w]);
    eliminate_split(&Ideal::new(&ext, gens)?, &split, budget)
}

/// Homogenizes a grevlex Gröbner basis of `I` with a new first variable, so
/// the result is the ideal of the projective closure.
pub fn homogenize(ideal: &Ideal, newvar: &str, budget: &Budget) -> Result<Ideal> {
    if ideal.ring().contains(newvar) {
        return Err(Error::precondition(format!("variable `{newvar}` already in the ring")));
    }
    let target = Ring::new([newvar.to_string()])?.concat(ideal.ring())?;
    let gb = ideal.basis(budget)?;
    let gens = gb.elements().iter().map(|g| g.homogenize_into(&target, 0)).collect();
    Ideal::new(&target, gens)
}

/// Sets `var = 1`.
pub fn dehomogenize(ideal: &Ideal, var: &str) -> Result<Ideal> {
    let ring = ideal.ring();
    let idx = ring
        .index_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    let rest: Vec<usize> = (0..ring.arity()).filter(|&i| i != idx).collect();
    let target = ring.select(&rest)?;
    let gens = ideal.generators().iter().map(|g| g.dehomogenize_into(&target, idx)).collect();
    Ideal::new(&target, gens)
}

/// `f ∈ √I`, tested as `1 ∈ I + ⟨1 − w·f⟩`.
pub fn radical_membership(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let (ext, w) = extend_ring(ideal.ring(), "w")?;
    let map: Vec<usize> = (0..ideal.ring().arity()).collect();
    let mut gens = lift(ideal, &ext);
    gens.push(&Polynomial::one(&ext) - &(&Polynomial::var(&ext, w) * &f.embed(&ext, &map)));
    let gb = crate::groebner::groebner_basis(&gens, &ext, &MonomialOrder::GrevLex, budget)?;
    Ok(gb.is_unit())
}

/// Translates coordinates so that `point` becomes the origin: `f(x) ↦ f(x + point)`.
pub fn translate(ideal: &Ideal, point: &[Rational]) -> Result<Ideal> {
    let ring = ideal.ring();
    if point.len() != ring.arity() {
        return Err(Error::ArityMismatch {
            expected: ring.arity(),
            actual: point.len(),
        });
    }
    let images: Vec<Polynomial> = point
        .iter()
        .enumerate()
        .map(|(i, c)| &Polynomial::var(ring, i) + &Polynomial::constant(ring, c.clone()))
        .collect();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.compose(&images))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Linear form `Σ coeffs[i]·x_i`.
pub fn linear_form(ring: &Ring, coeffs: &[Rational]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::variable(ring.arity(), i), c.clone())),
    )
}
