//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use bilip_core::groebner::{normal_form, s_polynomial};
use bilip_core::ideal_ops::implicitize;
use bilip_core::invariants::{hilbert_data, multiplicity, tangent_cone, zariski_tangent_dim, AffinePoint};
use bilip_core::lipschitz::{
    certify_projection, normality_proxy_report, random_center_search, secant_cone, secant_cone_parametric,
    secant_direction, verify_degree_invariance, verify_multiplicity_invariance, veronese_cone, AlgebraicMap,
    LinearProjection, NumericFallback, SearchConfig, SearchOutcome, SecantCone, Variety, Verdict,
};
use bilip_core::poly::{integer, Monomial};
use bilip_core::sampler::{distortion, Norm, SamplerConfig};
use bilip_core::{Budget, GroebnerBasis, Ideal, Parametrization, Polynomial, Rational};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn ex24() -> Parametrization {
    param(&["t"], &["x1", "x2", "x3", "x4"], &["t^4", "t^5", "t^6", "t^7"])
}

fn ex25_x() -> Parametrization {
    param(&["t"], &["x", "y", "z"], &["t", "t^3 + t^2", "t^5"])
}

fn ex25_y() -> Parametrization {
    param(&["t"], &["x", "y", "z"], &["t", "t^3 + 2*t^2", "t^5"])
}

fn post_check(gb: &GroebnerBasis) -> bool {
    let g = gb.elements();
    (0..g.len()).all(|i| {
        (i + 1..g.len()).all(|j| {
            let s = s_polynomial(&g[i], &g[j], gb.order()).unwrap();
            normal_form(&s, g, gb.order()).unwrap().is_zero()
        })
    })
}

fn random_generator(rng: &mut ChaCha8Rng, r: &bilip_core::Ring) -> Polynomial {
    loop {
        let terms: Vec<(Monomial, Rational)> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let mut e = [0u32; 3];
                for _ in 0..rng.gen_range(0..=4) {
                    e[rng.gen_range(0..3)] += 1;
                }
                let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (Monomial::from_exponents(e), integer(c))
            })
            .collect();
        let f = Polynomial::from_terms(r, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn criterion_1() -> Outcome {
    let r = ring(&["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 0..25 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=4)).map(|_| random_generator(&mut rng, &r)).collect();
        let gb = Ideal::new(&r, gens.clone()).unwrap().basis(&budget()).map_err(|e| e.to_string())?;
        let mut permuted = gens.clone();
        permuted.reverse();
        let shift = k % permuted.len();
        permuted.rotate_left(shift);
        let gb2 = Ideal::new(&r, permuted).unwrap().basis(&budget()).map_err(|e| e.to_string())?;
        if !post_check(&gb) || gb.elements() != gb2.elements() {
            bad.push(k);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        bad.is_empty() && secs < 60.0,
        format!("25 ideals, failing {bad:?}, {secs:.2} s"),
    )
}

fn curve_degree(p: &Parametrization) -> Result<(usize, u64, Vec<usize>), String> {
    let i = implicitize(p, &budget()).map_err(|e| e.to_string())?;
    let h = hilbert_data(&i, &budget()).map_err(|e| e.to_string())?;
    Ok((h.dimension, h.degree, hyperplane_root_counts(p, 10, 17)))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    let cubic = param(&["t"], &["x", "y", "z"], &["t", "t^2", "t^3"]);
    for (name, p, dim, deg) in [
        ("twisted cubic", cubic, 1, 3),
        ("ex25 X", ex25_x(), 1, 5),
        ("ex25 Y", ex25_y(), 1, 5),
        ("ex24 m=4", ex24(), 1, 7),
    ] {
        let (d, g, counts) = curve_degree(&p)?;
        ok &= (d, g) == (dim, deg) && counts.iter().all(|&c| c as u64 == g);
        lines.push(format!("{name} ({d},{g})"));
    }
    let r = ring(&["x", "y"]);
    let conic = Ideal::parse(&r, &["x^2 + y^2 - 1"]).unwrap();
    let h = hilbert_data(&conic, &budget()).map_err(|e| e.to_string())?;
    let counts = line_root_counts(&conic.generators()[0], 10, 17);
    ok &= (h.dimension, h.degree) == (1, 2) && counts.iter().all(|&c| c == 2);
    lines.push(format!("conic ({},{})", h.dimension, h.degree));
    let secs = start.elapsed().as_secs_f64();
    check(ok && secs < 120.0, format!("{}; oracle 10 draws each; {secs:.2} s", lines.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let b = budget();
    let r = ring(&["x", "y"]);
    let cusp = Ideal::parse(&r, &["y^2 - x^3"]).unwrap();
    let m_cusp = multiplicity(&cusp, &AffinePoint::origin(2), &b).map_err(|e| e.to_string())?;
    let ex = implicitize(&ex24(), &b).map_err(|e| e.to_string())?;
    let m_ex = multiplicity(&ex, &AffinePoint::origin(4), &b).map_err(|e| e.to_string())?;
    let smooth_cusp = AffinePoint(vec![integer(1), integer(1)]);
    let smooth_ex = AffinePoint(ex24().evaluate(&[integer(2)]).unwrap());
    let m_s1 = multiplicity(&cusp, &smooth_cusp, &b).map_err(|e| e.to_string())?;
    let m_s2 = multiplicity(&ex, &smooth_ex, &b).map_err(|e| e.to_string())?;
    let homogeneous = [
        tangent_cone(&cusp, &AffinePoint::origin(2), &b),
        tangent_cone(&ex, &AffinePoint::origin(4), &b),
        tangent_cone(&cusp, &smooth_cusp, &b),
    ]
    .into_iter()
    .all(|c| c.is_ok_and(|c| c.generators().iter().all(Polynomial::is_homogeneous)));
    let secs = start.elapsed().as_secs_f64();
    check(
        (m_cusp, m_ex, m_s1, m_s2) == (2, 4, 1, 1) && homogeneous && secs < 120.0,
        format!("cusp {m_cusp}, ex24 {m_ex}, smooth {m_s1}/{m_s2}, cones homogeneous {homogeneous}; {secs:.2} s"),
    )
}

fn criterion_4() -> Outcome {
    let b = budget();
    let ex = implicitize(&ex24(), &b).map_err(|e| e.to_string())?;
    let a = zariski_tangent_dim(&ex, &AffinePoint::origin(4), &b).map_err(|e| e.to_string())?;
    let v3 = veronese_cone(1, 3, &b).map_err(|e| e.to_string())?;
    let c = zariski_tangent_dim(&v3, &AffinePoint::origin(4), &b).map_err(|e| e.to_string())?;
    let v4 = veronese_cone(1, 4, &b).map_err(|e| e.to_string())?;
    let d = zariski_tangent_dim(&v4, &AffinePoint::origin(5), &b).map_err(|e| e.to_string())?;
    check((a, c, d) == (4, 4, 5), format!("ex24 {a}, veronese(1,3) {c}, veronese(1,4) {d}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let b = budget();
    let r = ring(&["x", "y"]);
    let drop_y = LinearProjection::new(vec![vec![integer(1), integer(0)]]).unwrap();
    let parabola = Ideal::parse(&r, &["y - x^2"]).unwrap();
    let axis = Ideal::parse(&r, &["y"]).unwrap();
    let v_par = certify_projection(&parabola, &drop_y, &b).map_err(|e| e.to_string())?;
    let v_axis = certify_projection(&axis, &drop_y, &b).map_err(|e| e.to_string())?;
    let config = SamplerConfig {
        pairs: 10_000,
        scales: (0..=10).collect(),
        seed: 0,
        norm: Norm::Sup,
    };
    let onto = param(&["t"], &["w"], &["t"]);
    let par = distortion(&param(&["t"], &["x", "y"], &["t", "t^2"]), &onto, &config).map_err(|e| e.to_string())?;
    let mins = par.min_ratios();
    let decreasing = mins.windows(2).all(|w| w[1] < w[0]);
    let collapse = mins.last().unwrap() < &(0.1 * mins[0]);
    let line = distortion(&param(&["t"], &["x", "y"], &["t", "0"]), &onto, &config).map_err(|e| e.to_string())?;
    let constant = line.records.iter().all(|r| r.min_ratio == 1.0 && r.max_ratio == 1.0);
    let secs = start.elapsed().as_secs_f64();
    check(
        v_par == Verdict::NotBiLipschitz
            && v_axis == Verdict::BiLipschitz
            && decreasing
            && collapse
            && constant
            && secs < 60.0,
        format!(
            "parabola {v_par}, min ratio {:.4} -> {:.6} strictly decreasing {decreasing}; axis {v_axis}, ratios 1 {constant}; {secs:.2} s",
            mins[0],
            mins.last().unwrap()
        ),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let r = ring(&["x", "y", "z"]);
    let x = Ideal::parse(&r, &["y - x^3 - x^2", "z - x^5"]).unwrap();
    let comps = ["x", "y + x^2", "z"].map(|c| poly(&r, c)).to_vec();
    let f = AlgebraicMap::new(x, comps, None).unwrap();
    let rep = verify_degree_invariance(&f, Some(&ex25_x()), &NumericFallback::default(), &budget())
        .map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    check(
        (rep.degree_source, rep.degree_graph, rep.degree_image) == (5, 5, 5) && rep.certified && secs < 600.0,
        format!(
            "deg X={} deg Γ={} deg Y={} certified={} ({}); {secs:.2} s",
            rep.degree_source, rep.degree_graph, rep.degree_image, rep.certified, rep.certificate
        ),
    )
}

fn criterion_7() -> Outcome {
    let r = ring(&["x", "y"]);
    let cusp = Ideal::parse(&r, &["y^2 - x^3"]).unwrap();
    let f = AlgebraicMap::new(cusp, vec![poly(&r, "x"), poly(&r, "y + x^2")], None).unwrap();
    let rep = verify_multiplicity_invariance(&f, &AffinePoint::origin(2), &budget()).map_err(|e| e.to_string())?;
    check(
        (rep.mult_source, rep.mult_graph, rep.mult_image) == (2, 2, 2),
        format!(
            "mult {} = {} = {}, certified={}",
            rep.mult_source, rep.mult_graph, rep.mult_image, rep.certified
        ),
    )
}

fn criterion_8() -> Outcome {
    let b = budget();
    let x = Variety::from_parametrization(ex24(), &b).map_err(|e| e.to_string())?;
    let source_dim = zariski_tangent_dim(&x.ideal, &AffinePoint::origin(4), &b).map_err(|e| e.to_string())?;
    let mut found = 0;
    let mut lines = Vec::new();
    for seed in 1..=5 {
        let config = SearchConfig { target: 3, seed, attempts: 20 };
        let (outcome, _) = random_center_search(&x, &config, &b).map_err(|e| e.to_string())?;
        match outcome {
            SearchOutcome::Certified { projection, attempt } => {
                let image = x.image_ideal(&projection, &b).map_err(|e| e.to_string())?;
                let dim = zariski_tangent_dim(&image, &AffinePoint::origin(3), &b).map_err(|e| e.to_string())?;
                if dim <= 3 && source_dim == 4 {
                    found += 1;
                }
                lines.push(format!("seed {seed}: attempt {attempt}, image tangent dim {dim}"));
            }
            other => lines.push(format!("seed {seed}: {other:?}")),
        }
    }
    check(
        found >= 4,
        format!("{found}/5 certified; source tangent dim {source_dim}; {}", lines.join("; ")),
    )
}

fn criterion_9() -> Outcome {
    let rep = normality_proxy_report(1, 3, 3, 0, 20, &budget()).map_err(|e| e.to_string())?;
    let ok = rep.cone_tangent_dim == 4 && rep.projection.is_some() && rep.image_tangent_dim.is_some_and(|d| d <= 3);
    check(
        ok,
        format!(
            "cone tangent dim {}, projection {}, image tangent dim {:?}; {}",
            rep.cone_tangent_dim,
            if rep.projection.is_some() { "certified" } else { "none" },
            rep.image_tangent_dim,
            rep.conclusion
        ),
    )
}

fn directions_on_cone(cone: &SecantCone, p: &Parametrization, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0;
    let mut drawn = 0;
    while drawn < 100 {
        let t = random_rationals(&mut rng, 1, 50);
        let s = random_rationals(&mut rng, 1, 50);
        let d = secant_direction(p, &t, &s).map_err(|e| e.to_string())?;
        if d.iter().all(|c| *c == integer(0)) {
            continue;
        }
        drawn += 1;
        if cone.contains_direction(&d).map_err(|e| e.to_string())? {
            hits += 1;
        }
    }
    Ok(hits)
}

fn criterion_10() -> Outcome {
    let b = budget();
    let r = ring(&["x", "y"]);
    let line = secant_cone(&Ideal::parse(&r, &["y"]).unwrap(), &b).map_err(|e| e.to_string())?;
    let parabola = secant_cone(&Ideal::parse(&r, &["y - x^2"]).unwrap(), &b).map_err(|e| e.to_string())?;
    let ex25 = secant_cone_parametric(&ex25_x(), &b).map_err(|e| e.to_string())?;
    let counts = [
        directions_on_cone(&line, &param(&["t"], &["x", "y"], &["t", "0"]), 1)?,
        directions_on_cone(&parabola, &param(&["t"], &["x", "y"], &["t", "t^2"]), 2)?,
        directions_on_cone(&ex25, &ex25_x(), 3)?,
    ];
    check(
        counts == [100, 100, 100],
        format!(
            "line {}/100, parabola {}/100, ex25 X {}/100 (cone generators: {}, {}, {})",
            counts[0],
            counts[1],
            counts[2],
            line.ideal.generators().len(),
            parabola.ideal.generators().len(),
            ex25.ideal.generators().len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("groebner post-check and permutation invariance", criterion_1),
        ("degree and dimension with root-count oracles", criterion_2),
        ("multiplicities and homogeneous tangent cones", criterion_3),
        ("Zariski tangent dimensions", criterion_4),
        ("projection certificates against the sampler", criterion_5),
        ("degree invariance on the ex25 map", criterion_6),
        ("multiplicity invariance on the cusp", criterion_7),
        ("random center search on ex24", criterion_8),
        ("normality proxy for the (1,3) Veronese cone", criterion_9),
        ("secant directions satisfy the cone generators", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {name}: {detail} [{:.2} s]", k + 1, secs(took));
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}
