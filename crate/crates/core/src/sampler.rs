//! Numeric cross-checks: empirical distortion of maps and clouds of secant
//! directions.
//!
//! Parameter values are dyadic rationals `S·k/1024` with `|k| ≤ 1024`, so
//! every ratio is computed exactly and only converted to `f64` for reporting.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{integer, rational_to_f64, Parametrization, Polynomial, Rational};

/// Grid resolution of a sampled parameter inside `[-S, S]`.
const GRID: i64 = 1024;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "BILIP_THREADS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Norm {
    #[default]
    Sup,
    Euclidean,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub pairs: usize,
    /// Exponents `k` of the scales `2^k`.
    pub scales: Vec<u32>,
    pub seed: u64,
    pub norm: Norm,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            pairs: 10_000,
            scales: (0..=10).collect(),
            seed: 0,
            norm: Norm::Sup,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleRecord {
    pub scale: u64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub argmin_t: Vec<f64>,
    pub argmin_s: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistortionReport {
    pub norm: Norm,
    pub seed: u64,
    pub pairs: usize,
    /// Sampled pairs with `p(t) = p(s)`, left out of the ratios.
    pub skipped: u64,
    pub records: Vec<ScaleRecord>,
}

impl DistortionReport {
    pub fn to_csv(&self) -> String {
        let join = |v: &[f64]| v.iter().map(f64::to_string).collect::<Vec<_>>().join(";");
        let mut out = String::from("scale,min_ratio,max_ratio,argmin_t,argmin_s\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.scale,
                r.min_ratio,
                r.max_ratio,
                join(&r.argmin_t),
                join(&r.argmin_s)
            ));
        }
        out
    }

    pub fn min_ratios(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.min_ratio).collect()
    }
}

/// Thread pool honouring [`THREADS_ENV`]; rayon's default size otherwise.
pub fn thread_pool() -> rayon::ThreadPool {
    let n = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool")
}

type Point = Vec<Rational>;

fn scale_value(exp: u32) -> Result<i64> {
    if exp > 40 {
        return Err(Error::precondition(format!("scale 2^{exp} is out of range")));
    }
    Ok(1i64 << exp)
}

/// `pairs` distinct parameter pairs inside `[-2^exp, 2^exp]^k`.
fn draw_pairs(rng: &mut ChaCha8Rng, k: usize, exp: u32, pairs: usize) -> Result<Vec<(Point, Point)>> {
    let s = scale_value(exp)?;
    let draw = |rng: &mut ChaCha8Rng| -> Point {
        (0..k)
            .map(|_| Rational::new((s * rng.gen_range(-GRID..=GRID)).into(), GRID.into()))
            .collect()
    };
    let mut out = Vec::with_capacity(pairs);
    while out.len() < pairs {
        let t = draw(rng);
        let u = draw(rng);
        if t != u {
            out.push((t, u));
        }
    }
    Ok(out)
}

fn difference(p: &Parametrization, t: &[Rational], s: &[Rational]) -> Result<Vec<Rational>> {
    let a = p.evaluate(t)?;
    let b = p.evaluate(s)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

/// `‖v‖_∞`, or `‖v‖²₂` for the Euclidean norm (compared squared, rooted at the end).
fn norm_key(v: &[Rational], norm: Norm) -> Rational {
    match norm {
        Norm::Sup => v.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero),
        Norm::Euclidean => v.iter().map(|x| x * x).sum(),
    }
}

fn key_to_ratio(key: &Rational, norm: Norm) -> f64 {
    let x = rational_to_f64(key);
    match norm {
        Norm::Sup => x,
        Norm::Euclidean => x.sqrt(),
    }
}

fn to_f64(v: &[Rational]) -> Vec<f64> {
    v.iter().map(rational_to_f64).collect()
}

fn check_shared_params(p: &Parametrization, q: &Parametrization) -> Result<()> {
    if p.params() != q.params() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Empirical ratios `‖q(t) − q(s)‖ / ‖p(t) − p(s)‖` per scale.
pub fn distortion(p: &Parametrization, q: &Parametrization, config: &SamplerConfig) -> Result<DistortionReport> {
    check_shared_params(p, q)?;
    if config.pairs == 0 {
        return Err(Error::precondition("need at least one pair"));
    }
    let k = p.params().arity();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pool = thread_pool();
    let mut skipped = 0u64;
    let mut records = Vec::with_capacity(config.scales.len());
    for &exp in &config.scales {
        let pairs = draw_pairs(&mut rng, k, exp, config.pairs)?;
        let ratios: Vec<Option<Rational>> = pool.install(|| {
            pairs
                .par_iter()
                .map(|(t, s)| -> Result<Option<Rational>> {
                    let below = norm_key(&difference(p, t, s)?, config.norm);
                    if below.is_zero() {
                        return Ok(None);
                    }
                    Ok(Some(norm_key(&difference(q, t, s)?, config.norm) / below))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        // first index wins ties, so the result does not depend on scheduling
        let mut min: Option<(usize, &Rational)> = None;
        let mut max: Option<&Rational> = None;
        for (i, r) in ratios.iter().enumerate() {
            let Some(r) = r else {
                skipped += 1;
                continue;
            };
            if min.map_or(true, |(_, m)| r < m) {
                min = Some((i, r));
            }
            if max.map_or(true, |m| r > m) {
                max = Some(r);
            }
        }
        let Some((at, lo)) = min else {
            return Err(Error::precondition(format!(
                "every sampled pair at scale 2^{exp} is degenerate"
            )));
        };
        records.push(ScaleRecord {
            scale: 1u64 << exp,
            min_ratio: key_to_ratio(lo, config.norm),
            max_ratio: key_to_ratio(max.expect("set with min"), config.norm),
            argmin_t: to_f64(&pairs[at].0),
            argmin_s: to_f64(&pairs[at].1),
        });
    }
    Ok(DistortionReport {
        norm: config.norm,
        seed: config.seed,
        pairs: config.pairs,
        skipped,
        records,
    })
}

/// Exact nonzero secant directions `p(t) − p(s)`, with the scale of each pair
/// drawn from `scales`. Degenerate pairs are dropped.
pub fn secant_directions(p: &Parametrization, pairs: usize, seed: u64, scales: &[u32]) -> Result<Vec<Vec<Rational>>> {
    if scales.is_empty() {
        return Err(Error::precondition("empty scale list"));
    }
    let k = p.params().arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let exp = scales[rng.gen_range(0..scales.len())];
        draws.extend(draw_pairs(&mut rng, k, exp, 1)?);
    }
    let pool = thread_pool();
    let dirs = pool.install(|| {
        draws
            .par_iter()
            .map(|(t, s)| difference(p, t, s))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(dirs.into_iter().filter(|d| d.iter().any(|x| !x.is_zero())).collect())
}

/// Secant directions normalized to unit sup norm, over the scales `2^0..2^10`.
pub fn secant_cloud(p: &Parametrization, pairs: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let scales: Vec<u32> = (0..=10).collect();
    Ok(secant_directions(p, pairs, seed, &scales)?
        .into_iter()
        .map(|d| {
            let m = d.iter().map(Signed::abs).max().expect("nonempty direction");
            d.iter().map(|x| rational_to_f64(&(x / &m))).collect()
        })
        .collect())
}

/// Largest `|g(d)| / Σ|coefficients of g|` over generators and directions.
/// For sup-normalized `d` this is at most 1 and vanishes on the cone.
pub fn cone_residual(generators: &[Polynomial], cloud: &[Vec<f64>]) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in generators {
        let weight: f64 = g.terms().iter().map(|(_, c)| rational_to_f64(c).abs()).sum();
        for d in cloud {
            let r = g.evaluate_f64(d)?.abs() / weight;
            worst = worst.max(r);
        }
    }
    Ok(worst)
}

/// Sup distance from a sup-normalized direction to the coordinate subspace
/// where the listed coordinates vanish.
pub fn distance_to_coordinate_subspace(d: &[f64], zeroed: &[usize]) -> f64 {
    zeroed.iter().map(|&i| d[i].abs()).fold(0.0, f64::max)
}

/// A dyadic parameter value, as used by the sampler.
pub fn grid_point(exp: u32, k: i64) -> Rational {
    integer(1i64 << exp) * Rational::new(k.into(), GRID.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn param(target: &[&str], comps: &[&str]) -> Parametrization {
        let t = Ring::new(["t"]).unwrap();
        Parametrization::new(
            Ring::new(target.iter().copied()).unwrap(),
            comps.iter().map(|c| Polynomial::parse(c, &t).unwrap()).collect(),
        )
        .unwrap()
    }

    fn small(seed: u64) -> SamplerConfig {
        SamplerConfig {
            pairs: 300,
            scales: vec![0, 3, 6],
            seed,
            norm: Norm::Sup,
        }
    }

    #[test]
    fn identity_ratios_are_one() {
        let p = param(&["x", "y"], &["t", "t^2"]);
        let r = distortion(&p, &p, &small(3)).unwrap();
        for rec in &r.records {
            assert_eq!((rec.min_ratio, rec.max_ratio), (1.0, 1.0));
        }
        let e = distortion(&p, &p, &SamplerConfig { norm: Norm::Euclidean, ..small(3) }).unwrap();
        assert!(e.records.iter().all(|rec| rec.min_ratio == 1.0));
    }

    #[test]
    fn deterministic_per_seed() {
        let p = param(&["x", "y"], &["t", "t^2"]);
        let q = param(&["x"], &["t"]);
        assert_eq!(distortion(&p, &q, &small(9)).unwrap(), distortion(&p, &q, &small(9)).unwrap());
        assert_ne!(distortion(&p, &q, &small(9)).unwrap(), distortion(&p, &q, &small(10)).unwrap());
    }

    #[test]
    fn degenerate_pairs_are_counted() {
        // t ↦ t^2 identifies t and −t
        let p = param(&["x"], &["t^2"]);
        let r = distortion(&p, &p, &SamplerConfig { pairs: 4000, ..small(1) }).unwrap();
        assert!(r.skipped > 0);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let p = param(&["x"], &["t"]);
        let csv = distortion(&p, &p, &small(0)).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "scale,min_ratio,max_ratio,argmin_t,argmin_s");
        assert_eq!(lines.len(), 4);
        assert!(lines[2].starts_with("8,1,1,"));
    }

    #[test]
    fn cloud_of_a_line() {
        let p = param(&["x", "y"], &["t", "0"]);
        for d in secant_cloud(&p, 50, 2).unwrap() {
            assert!(d == vec![1.0, 0.0] || d == vec![-1.0, 0.0]);
        }
    }

    #[test]
    fn grid_points_are_dyadic() {
        assert_eq!(grid_point(3, 512), integer(4));
        assert_eq!(grid_point(0, -256), Rational::new((-1).into(), 4.into()));
    }
}
