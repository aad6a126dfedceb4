//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use bilip_core::poly::{integer, Monomial};
use bilip_core::{Parametrization, Polynomial, Rational, Ring};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ring(names: &[&str]) -> Ring {
    Ring::new(names.iter().copied()).unwrap()
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

pub fn param(params: &[&str], target: &[&str], comps: &[&str]) -> Parametrization {
    let p = ring(params);
    Parametrization::new(ring(target), comps.iter().map(|c| poly(&p, c)).collect()).unwrap()
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Q, low degree first

pub type Dense = Vec<Rational>;

fn trim(mut f: Dense) -> Dense {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

/// Coefficients of a polynomial in a one-variable ring.
pub fn dense(f: &Polynomial) -> Dense {
    assert_eq!(f.ring().arity(), 1);
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in f.terms() {
        out[m.exponent(0) as usize] += c;
    }
    trim(out)
}

fn derivative(f: &Dense) -> Dense {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * integer(i as i64))
            .collect(),
    )
}

fn rem(f: &Dense, g: &Dense) -> Dense {
    let mut r = f.clone();
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let shift = r.len() - g.len();
        let q = r.last().unwrap() / &lg;
        for (i, c) in g.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd(f: &Dense, g: &Dense) -> Dense {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Number of distinct complex roots: `deg f − deg gcd(f, f')`.
pub fn distinct_roots(f: &Dense) -> usize {
    let f = trim(f.clone());
    if f.len() <= 1 {
        return 0;
    }
    let g = gcd(&f, &derivative(&f));
    (f.len() - 1) - (g.len() - 1)
}

/// Distinct roots of `Σ aᵢ pᵢ(t) − d` for `draws` random integer hyperplanes.
/// For a generically injective curve parametrization this is its degree.
/// Hyperplanes through a point at infinity (pullback of lower degree) are
/// redrawn.
pub fn hyperplane_root_counts(p: &Parametrization, draws: usize, seed: u64) -> Vec<usize> {
    assert_eq!(p.params().arity(), 1);
    let top = p.components.iter().filter_map(Polynomial::total_degree).max().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(draws);
    while out.len() < draws {
        let mut pull = Polynomial::constant(p.params(), integer(rng.gen_range(-50..=50)));
        for c in &p.components {
            let a = integer(rng.gen_range(-50..=50));
            pull = pull.checked_add(&c.scale(&a)).unwrap();
        }
        if pull.total_degree() == Some(top) {
            out.push(distinct_roots(&dense(&pull)));
        }
    }
    out
}

/// Distinct roots of a plane curve `f` on `draws` random affine lines.
pub fn line_root_counts(f: &Polynomial, draws: usize, seed: u64) -> Vec<usize> {
    assert_eq!(f.ring().arity(), 2);
    let s = ring(&["s"]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..draws)
        .map(|_| {
            let mut coord = || {
                let base = integer(rng.gen_range(-20..=20));
                let dir = integer(rng.gen_range(1..=20));
                Polynomial::constant(&s, base)
                    .checked_add(&Polynomial::var(&s, 0).scale(&dir))
                    .unwrap()
            };
            let line = [coord(), coord()];
            distinct_roots(&dense(&f.compose(&line).unwrap()))
        })
        .collect()
}

/// `g(p(t)) ≡ 0`.
pub fn vanishes_on(g: &Polynomial, p: &Parametrization) -> bool {
    g.compose(&p.components).unwrap().is_zero()
}

pub fn random_rationals(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into()))
        .collect()
}

pub fn one() -> Rational {
    Rational::one()
}

// ---------------------------------------------------------------------------
// proptest strategies

pub fn monomial(arity: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(Monomial::from_exponents)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Polynomials with up to `terms` terms and total degree at most `max_deg`.
pub fn polynomial(r: Ring, max_deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let arity = r.arity();
    prop::collection::vec((monomial(arity, max_deg), small_rational()), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(&r, ts.into_iter().filter(|(m, _)| m.degree() <= u64::from(max_deg)))
    })
}

/// Small random ideals: up to `gens` nonzero generators.
pub fn generators(r: Ring, max_deg: u32, gens: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(polynomial(r, max_deg, 3), 1..=gens)
        .prop_map(|gs| gs.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>())
        .prop_filter("need a nonzero generator", |gs| !gs.is_empty())
}
