mod common;

use bilip_core::groebner::{groebner_basis_with, normal_form, s_polynomial, Selection};
use bilip_core::poly::integer;
use bilip_core::{Budget, Error, GroebnerBasis, Ideal, MonomialOrder, Polynomial, Ring};
use common::*;
use proptest::prelude::*;

fn buchberger_post_check(gb: &GroebnerBasis) -> bool {
    let g = gb.elements();
    (0..g.len()).all(|i| {
        (i + 1..g.len()).all(|j| {
            let s = s_polynomial(&g[i], &g[j], gb.order()).unwrap();
            normal_form(&s, g, gb.order()).unwrap().is_zero()
        })
    })
}

#[test]
fn twisted_cubic_lex() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    let gb = i.groebner(&MonomialOrder::Lex, &Budget::default()).unwrap();
    assert!(!gb.is_unit());
    assert!(buchberger_post_check(&gb));
    let curve = param(&["t"], &["x", "y", "z"], &["t", "t^2", "t^3"]);
    for g in gb.elements() {
        assert!(vanishes_on(g, &curve));
    }
    for f in ["y - x^2", "z - x^3", "y^3 - z^2"] {
        let f = poly(&r, f);
        assert!(vanishes_on(&f, &curve));
        assert!(normal_form(&f, gb.elements(), &MonomialOrder::Lex).unwrap().is_zero());
    }
}

#[test]
fn membership_examples() {
    let b = Budget::default();
    let r = ring(&["x", "y"]);
    let xy = Ideal::parse(&r, &["x", "y"]).unwrap();
    assert!(xy.contains(&poly(&r, "x - y"), &b).unwrap());
    assert!(!Ideal::parse(&r, &["x^2"]).unwrap().contains(&poly(&r, "x"), &b).unwrap());
    assert!(Ideal::zero(&r).contains(&Polynomial::zero(&r), &b).unwrap());
    assert!(Ideal::parse(&r, &["x", "x + 1"]).unwrap().is_unit(&b).unwrap());
}

#[test]
fn s_polynomial_examples() {
    let r = ring(&["x", "y", "z"]);
    let ord = MonomialOrder::GrevLex;
    let f = poly(&r, "x^2 - y");
    let g = poly(&r, "x*y - z");
    // lcm = x^2 y, so S = y f - x g
    let by_definition = &(&poly(&r, "y") * &f) - &(&poly(&r, "x") * &g);
    assert_eq!(s_polynomial(&f, &g, &ord).unwrap(), by_definition);
    assert_eq!(by_definition, poly(&r, "x*z - y^2"));
    assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
    let (x, y) = (poly(&r, "x"), poly(&r, "y"));
    let s = s_polynomial(&x, &y, &ord).unwrap();
    assert!(normal_form(&s, &[x, y], &ord).unwrap().is_zero());
}

#[test]
fn degenerate_inputs() {
    let b = Budget::default();
    let r = ring(&["x"]);
    let zero = Ideal::zero(&r).basis(&b).unwrap();
    assert!(zero.elements().is_empty());
    let unit = Ideal::parse(&r, &["x^2 - 1", "x"]).unwrap().basis(&b).unwrap();
    assert!(unit.is_unit());
}

#[test]
fn budget_is_an_error() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::parse(&r, &["x^2 - y", "x*y - z", "y^2 - x*z + 1"]).unwrap();
    // some S-pair must be reduced, so a zero pair budget is exceeded
    assert!(matches!(i.basis(&Budget::new(0, None)), Err(Error::Budget(_))));
    let expired = Budget::new(1_000, Some(std::time::Duration::ZERO));
    assert!(matches!(i.basis(&expired), Err(Error::Budget(_))));
    assert!(i.basis(&Budget::default()).is_ok());
}

fn three() -> Ring {
    ring(&["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn post_check_and_canonicity(gens in generators(three(), 3, 4), seed in 0u64..1000) {
        let b = Budget::new(20_000, None);
        let r = three();
        for ord in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = match Ideal::new(&r, gens.clone()).unwrap().groebner(&ord, &b) {
                Err(Error::Budget(_)) => return Ok(()),
                other => other.unwrap(),
            };
            prop_assert!(buchberger_post_check(&gb));
            // permuted, rescaled generators
            let mut other = gens.clone();
            let shift = (seed as usize) % other.len();
            other.rotate_left(shift);
            other.reverse();
            let other: Vec<Polynomial> = other
                .iter()
                .enumerate()
                .map(|(k, g)| g.scale(&integer(if k % 2 == 0 { -3 } else { 7 })))
                .collect();
            let gb2 = Ideal::new(&r, other).unwrap().groebner(&ord, &b).unwrap();
            prop_assert_eq!(gb.elements(), gb2.elements());
            let normal = groebner_basis_with(&gens, &r, &ord, Selection::Normal, &b).unwrap();
            prop_assert_eq!(gb.elements(), normal.elements());
        }
    }

    #[test]
    fn membership_consistency(
        gens in generators(three(), 2, 3),
        c1 in polynomial(three(), 2, 3),
        c2 in polynomial(three(), 2, 3),
    ) {
        let b = Budget::default();
        let r = three();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        // explicit combination of generators
        let mut f = Polynomial::zero(&r);
        for (k, g) in gens.iter().enumerate() {
            let c = if k % 2 == 0 { &c1 } else { &c2 };
            f = &f + &(c * g);
        }
        prop_assert!(i.contains(&f, &b).unwrap());
        // a nonzero remainder of the basis is never a member
        let gb = i.basis(&b).unwrap();
        let h = normal_form(&c1, gb.elements(), gb.order()).unwrap();
        if !h.is_zero() {
            prop_assert!(!i.contains(&h, &b).unwrap());
            prop_assert!(!i.contains(&(&f + &h), &b).unwrap());
        }
    }
}
