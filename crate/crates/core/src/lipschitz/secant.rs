//! The variety Σ of limiting secant directions, as a homogeneous ideal in
//! direction variables `u1..un`.
//!
//! The default route eliminates `x, y, λ` from
//! `I(x) + I(y) + ⟨u − λ(x − y)⟩`. The image of `(x, y, λ) ↦ λ(x − y)` is
//! the cone over the secant directions, so the elimination ideal cuts out the
//! cone over Σ. The minors route (`u ∧ (x − y) = 0`, then saturation by the
//! diagonal) computes the same ideal with more variables and is kept as a
//! cross-check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::{eliminate_split, radical_membership, saturate_ideal, VariableSplit};
use crate::poly::{Monomial, Parametrization, Polynomial, Rational, Ring};

/// Homogeneous ideal in `u1..un` whose affine variety is the cone over Σ.
#[derive(Clone, Debug)]
pub struct SecantCone {
    pub ring: Ring,
    pub ideal: Ideal,
}

impl SecantCone {
    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    /// Whether Σ is the whole `P^{n-1}`.
    pub fn is_everything(&self, budget: &Budget) -> Result<bool> {
        Ok(self.ideal.basis(budget)?.is_zero_ideal())
    }

    /// Whether the direction `d` lies on the cone (exact).
    pub fn contains_direction(&self, d: &[Rational]) -> Result<bool> {
        for g in self.ideal.generators() {
            if !num_traits::Zero::is_zero(&g.evaluate(d)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Names `u1..un`, shared by every secant cone of arity `n`.
pub fn direction_ring(n: usize) -> Ring {
    Ring::new((1..=n).map(|i| format!("u{i}"))).expect("u1..un are valid names")
}

fn numbered(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

fn finish(work: &Ring, gens: Vec<Polynomial>, eliminated: usize, budget: &Budget) -> Result<SecantCone> {
    let ideal = Ideal::new(work, gens)?;
    let drop: Vec<usize> = (0..eliminated).collect();
    let cone = eliminate_split(&ideal, &VariableSplit::from_indices(work, &drop), budget)?;
    let ring = direction_ring(work.arity() - eliminated);
    let gb = cone.basis(budget)?;
    let map: Vec<usize> = (0..ring.arity()).collect();
    let gens = gb.elements().iter().map(|g| g.embed(&ring, &map)).collect();
    Ok(SecantCone {
        ideal: Ideal::new(&ring, gens)?,
        ring,
    })
}

/// Σ of `V(I)` by eliminating `x, y, λ` from `I(x) + I(y) + ⟨u − λ(x − y)⟩`.
pub fn secant_cone(ideal: &Ideal, budget: &Budget) -> Result<SecantCone> {
    if ideal.is_unit(budget)? {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ring().arity();
    // variables: lambda, a1..an, b1..bn, u1..un
    let names = std::iter::once("lambda".to_string())
        .chain(numbered("a", n))
        .chain(numbered("b", n))
        .chain(numbered("u", n));
    let work = Ring::new(names)?;
    let xs: Vec<usize> = (1..=n).collect();
    let ys: Vec<usize> = (n + 1..=2 * n).collect();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.embed(&work, &xs));
        gens.push(g.embed(&work, &ys));
    }
    let lambda = Polynomial::var(&work, 0);
    for i in 0..n {
        let diff = &Polynomial::var(&work, xs[i]) - &Polynomial::var(&work, ys[i]);
        gens.push(&Polynomial::var(&work, 2 * n + 1 + i) - &(&lambda * &diff));
    }
    finish(&work, gens, 2 * n + 1, budget)
}

/// Σ of `V(I)` by the minors of `(u | x − y)`, saturated by the diagonal
/// ideal `⟨x − y⟩`, then eliminating `x, y`. Slower than [`secant_cone`].
pub fn secant_cone_by_minors(ideal: &Ideal, budget: &Budget) -> Result<SecantCone> {
    if ideal.is_unit(budget)? {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ring().arity();
    let names = numbered("a", n).chain(numbered("b", n)).chain(numbered("u", n));
    let work = Ring::new(names)?;
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.embed(&work, &xs));
        gens.push(g.embed(&work, &ys));
    }
    let diffs: Vec<Polynomial> = (0..n)
        .map(|i| &Polynomial::var(&work, xs[i]) - &Polynomial::var(&work, ys[i]))
        .collect();
    let u = |i: usize| Polynomial::var(&work, 2 * n + i);
    for i in 0..n {
        for j in i + 1..n {
            gens.push(&(&u(i) * &diffs[j]) - &(&u(j) * &diffs[i]));
        }
    }
    let j = Ideal::new(&work, gens)?;
    let diagonal = Ideal::new(&work, diffs)?;
    let off_diagonal = saturate_ideal(&j, &diagonal, budget)?;
    finish(&work, off_diagonal.generators().to_vec(), 2 * n, budget)
}

/// `(p(t) − p(s)) / (t − s)` for a polynomial in one variable, moved into
/// `work` with `t ↦ t_index`, `s ↦ s_index`.
fn divided_difference(p: &Polynomial, work: &Ring, t_index: usize, s_index: usize) -> Polynomial {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let k = m.exponent(0);
        // (t^k − s^k)/(t − s) = Σ_{i+j=k−1} t^i s^j
        for i in 0..k {
            let mut e = Monomial::one(work.arity());
            e.set_exponent(t_index, i);
            e.set_exponent(s_index, k - 1 - i);
            terms.push((e, c.clone()));
        }
    }
    Polynomial::from_terms(work, terms)
}

/// Σ of the closure of the image of `p`.
///
/// For a curve the differences are divided by `t − s`, so the eliminated
/// variables are `t, s, λ` and tangent directions appear without a
/// saturation step. With more parameters the undivided differences are used.
pub fn secant_cone_parametric(p: &Parametrization, budget: &Budget) -> Result<SecantCone> {
    let k = p.params().arity();
    let n = p.components.len();
    let names = std::iter::once("lambda".to_string())
        .chain(numbered("t", k))
        .chain(numbered("s", k))
        .chain(numbered("u", n));
    let work = Ring::new(names)?;
    let ts: Vec<usize> = (1..=k).collect();
    let ss: Vec<usize> = (k + 1..=2 * k).collect();
    let lambda = Polynomial::var(&work, 0);
    let gens = p
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let dir = if k == 1 {
                divided_difference(c, &work, ts[0], ss[0])
            } else {
                &c.embed(&work, &ts) - &c.embed(&work, &ss)
            };
            &Polynomial::var(&work, 2 * k + 1 + i) - &(&lambda * &dir)
        })
        .collect();
    finish(&work, gens, 2 * k + 1, budget)
}

fn check_projective_input(a: &Ideal, b: &[Polynomial]) -> Result<()> {
    if !a.is_homogeneous() {
        return Err(Error::precondition("ideal is not homogeneous"));
    }
    if b.iter().any(|f| *f.ring() != *a.ring()) {
        return Err(Error::RingMismatch);
    }
    if b.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::precondition("cutting forms must be homogeneous"));
    }
    Ok(())
}

/// Whether `V(A) ∩ V(B)` is empty in projective space.
///
/// For a homogeneous ideal this holds exactly when the affine variety is the
/// origin alone, i.e. the ideal is zero-dimensional: each variable has a pure
/// power among the leading monomials of a grevlex basis.
pub fn projective_empty_intersection(a: &Ideal, b: &[Polynomial], budget: &Budget) -> Result<bool> {
    check_projective_input(a, b)?;
    let sum = a.with_generators(b.iter().cloned())?;
    let gb = sum.basis(budget)?;
    if gb.is_unit() {
        return Ok(true);
    }
    let n = a.ring().arity();
    let mut pure = vec![false; n];
    for m in gb.leading_monomials() {
        if let Some(i) = m.pure_power_var() {
            pure[i] = true;
        }
    }
    Ok(pure.into_iter().all(|p| p))
}

/// Same answer as [`projective_empty_intersection`], by testing
/// `ui ∈ √(A + ⟨B⟩)` for every variable.
pub fn projective_empty_intersection_by_radical(a: &Ideal, b: &[Polynomial], budget: &Budget) -> Result<bool> {
    check_projective_input(a, b)?;
    let sum = a.with_generators(b.iter().cloned())?;
    for i in 0..a.ring().arity() {
        if !radical_membership(&Polynomial::var(a.ring(), i), &sum, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact secant direction `p(t) − p(s)`.
pub fn secant_direction(p: &Parametrization, t: &[Rational], s: &[Rational]) -> Result<Vec<Rational>> {
    let a = p.evaluate(t)?;
    let b = p.evaluate(s)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

/// Which route produced a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantRoute {
    Scaling,
    Minors,
    Parametric,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::integer;

    fn ring(v: &[&str]) -> Ring {
        Ring::new(v.iter().copied()).unwrap()
    }

    fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|j| integer(i64::from(i == j))).collect()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn line_has_one_direction() {
        let r = ring(&["x", "y"]);
        let line = Ideal::parse(&r, &["y"]).unwrap();
        let cone = secant_cone(&line, &b()).unwrap();
        let u = direction_ring(2);
        assert!(cone.ideal.same_ideal(&Ideal::parse(&u, &["u2"]).unwrap(), &b()).unwrap());
        let minors = secant_cone_by_minors(&line, &b()).unwrap();
        assert!(minors.ideal.same_ideal(&cone.ideal, &b()).unwrap());
    }

    #[test]
    fn parabola_fills_the_line_at_infinity() {
        let r = ring(&["x", "y"]);
        let parabola = Ideal::parse(&r, &["y - x^2"]).unwrap();
        let cone = secant_cone(&parabola, &b()).unwrap();
        assert!(cone.is_everything(&b()).unwrap());
        assert!(secant_cone_by_minors(&parabola, &b()).unwrap().is_everything(&b()).unwrap());
        let t = ring(&["t"]);
        let p = Parametrization::new(
            r.clone(),
            vec![Polynomial::parse("t", &t).unwrap(), Polynomial::parse("t^2", &t).unwrap()],
        )
        .unwrap();
        assert!(secant_cone_parametric(&p, &b()).unwrap().is_everything(&b()).unwrap());
    }

    #[test]
    fn two_points_on_a_line() {
        let r = ring(&["x"]);
        let pts = Ideal::parse(&r, &["x^2 - x"]).unwrap();
        let cone = secant_cone(&pts, &b()).unwrap();
        assert!(cone.is_everything(&b()).unwrap());
        assert_eq!(cone.arity(), 1);
    }

    #[test]
    fn single_point_has_no_directions() {
        let r = ring(&["x", "y"]);
        let pt = Ideal::parse(&r, &["x", "y"]).unwrap();
        let cone = secant_cone(&pt, &b()).unwrap();
        assert!(projective_empty_intersection(&cone.ideal, &[], &b()).unwrap());
    }

    #[test]
    fn divided_difference_of_cube() {
        let t = ring(&["t"]);
        let w = ring(&["t", "s"]);
        let q = divided_difference(&Polynomial::parse("t^3 - 2*t", &t).unwrap(), &w, 0, 1);
        assert_eq!(q, Polynomial::parse("t^2 + t*s + s^2 - 2", &w).unwrap());
    }

    #[test]
    fn emptiness_examples() {
        let u = direction_ring(2);
        let u1 = Polynomial::var(&u, 0);
        let a = Ideal::parse(&u, &["u2"]).unwrap();
        assert!(projective_empty_intersection(&a, &[u1.clone()], &b()).unwrap());
        assert!(!projective_empty_intersection(&Ideal::zero(&u), &[u1.clone()], &b()).unwrap());
        let a = Ideal::parse(&u, &["u1*u2"]).unwrap();
        let diag = Polynomial::parse("u1 - u2", &u).unwrap();
        assert!(projective_empty_intersection(&a, &[diag.clone()], &b()).unwrap());
        assert!(projective_empty_intersection_by_radical(&a, &[diag], &b()).unwrap());
        let inhom = Ideal::parse(&u, &["u1 - 1"]).unwrap();
        assert!(matches!(
            projective_empty_intersection(&inhom, &[], &b()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sampled_directions_lie_on_cone() {
        let t = ring(&["t"]);
        let x = ring(&["x", "y", "z"]);
        let p = Parametrization::new(
            x,
            ["t", "t^3 + t^2", "t^5"].iter().map(|s| Polynomial::parse(s, &t).unwrap()).collect(),
        )
        .unwrap();
        let cone = secant_cone_parametric(&p, &b()).unwrap();
        for (a, c) in [(1, 2), (-3, 5), (7, -1)] {
            let d = secant_direction(&p, &[integer(a)], &[integer(c)]).unwrap();
            assert!(cone.contains_direction(&d).unwrap());
        }
        assert!(cone.contains_direction(&unit_vector(3, 2)).unwrap());
    }
}
