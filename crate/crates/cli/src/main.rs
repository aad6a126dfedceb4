mod problem;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bilip_core::groebner::{groebner_basis, normal_form};
use bilip_core::ideal_ops::{eliminate, implicitize, intersect, saturate};
use bilip_core::invariants::{self, AffinePoint};
use bilip_core::lipschitz::{
    self, certify_with_cone, graph_ideal, normality_proxy_report, random_center_search, secant_cone,
    secant_cone_by_minors, secant_cone_parametric, verify_degree_invariance, verify_multiplicity_invariance,
    AlgebraicMap, NumericFallback, SearchConfig, SearchOutcome, SecantCone, SecantRoute, Variety,
};
use bilip_core::sampler::{self, Norm, SamplerConfig};
use bilip_core::{Budget, Error, Ideal, MonomialOrder, Parametrization, Polynomial, Ring};

use problem::{ParseError, ProblemFile};
use report::*;

const PARSE_ERROR: u8 = 2;
const BUDGET_EXCEEDED: u8 = 3;
const PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(name = "bilip", version, about = "Exact secant varieties and bi-Lipschitz projection certificates")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Monomial order for `gb` and `nf`.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximal number of S-pair reductions per Gröbner basis.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_PAIR_REDUCTIONS)]
    max_steps: u64,
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_TIMEOUT.as_secs())]
    timeout_seconds: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Scale exponents `k` (scale `2^k`), as `a..b` or a comma list.
    #[arg(long, global = true, default_value = "0..10", value_parser = parse_scales)]
    scales: Scales,
    /// Sampled pairs per scale.
    #[arg(long, global = true, default_value_t = 10_000)]
    pairs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Auto,
    Scaling,
    Minors,
    Parametric,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Sup,
    Euclidean,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the ideal.
    Gb { file: PathBuf },
    /// Normal form of a polynomial against the Gröbner basis of the ideal.
    Nf { file: PathBuf, poly: String },
    /// Elimination ideal.
    Eliminate {
        file: PathBuf,
        /// Comma-separated variables to eliminate.
        #[arg(long, value_delimiter = ',')]
        drop: Vec<String>,
    },
    /// Ideal of the closure of a parametrized set.
    Implicitize { file: PathBuf },
    /// Saturation `I : g^∞`.
    Saturate { file: PathBuf, by: String },
    /// Intersection of two ideals over the same variables.
    Intersect { first: PathBuf, second: PathBuf },
    /// Dimension of the variety.
    Dim { file: PathBuf },
    /// Degree of the variety (of its top-dimensional part).
    Degree { file: PathBuf },
    /// Tangent cone at the point (default: origin), translated to the origin.
    TangentCone { file: PathBuf },
    /// Multiplicity at the point (default: origin).
    Mult { file: PathBuf },
    /// Dimension of the Zariski tangent space at the point.
    TangentDim { file: PathBuf },
    /// Homogeneous ideal of the cone over the secant directions.
    Secant {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
    },
    /// Decide whether the matrix restricted to the set is bi-Lipschitz.
    CertifyProjection { file: PathBuf },
    /// Ideal of the graph of the map.
    Graph { file: PathBuf },
    /// Degrees of source, graph and image of the map.
    VerifyDegree { file: PathBuf },
    /// Multiplicities of source, graph and image at the point.
    VerifyMult { file: PathBuf },
    /// Search for a certified projection to `C^target`.
    CenterSearch {
        file: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = 20)]
        attempts: usize,
    },
    /// Ideal of the affine cone over the d-tuple embedding of P^r.
    Veronese { r: usize, d: u32 },
    /// Tangent dimensions of a Veronese cone and of a certified projection of it.
    NormalityProxy {
        r: usize,
        d: u32,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = 20)]
        attempts: usize,
    },
    /// Empirical distortion of the map (or matrix) along the parametrization.
    Distortion {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = NormArg::Sup)]
        norm: NormArg,
    },
    /// Sampled unit secant directions of the parametrization.
    SecantCloud {
        file: PathBuf,
        /// Also report the residual against the symbolic secant cone.
        #[arg(long)]
        residual: bool,
    },
}

#[derive(Clone)]
struct Scales(Vec<u32>);

fn parse_scales(s: &str) -> Result<Scales, String> {
    let bad = |_| format!("bad scale list `{s}`");
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(bad)?;
        let b: u32 = b.trim().parse().map_err(bad)?;
        if a > b {
            return Err(format!("empty scale range `{s}`"));
        }
        return Ok(Scales((a..=b).collect()));
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(bad))
        .collect::<Result<_, _>>()
        .map(Scales)
}

enum Failure {
    Parse(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => PARSE_ERROR,
            Failure::Math(Error::Syntax { .. } | Error::UnknownVariable(_)) => PARSE_ERROR,
            Failure::Math(Error::Budget(_)) => BUDGET_EXCEEDED,
            Failure::Math(_) => PRECONDITION,
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

struct Ctx {
    budget: Budget,
    format: Format,
    order: OrderArg,
    seed: u64,
    scales: Vec<u32>,
    pairs: usize,
}

impl Ctx {
    fn emit<R: Report>(&self, r: R) -> Outcome {
        let out = match self.format {
            Format::Text => r.text(),
            Format::Json => serde_json::to_string_pretty(&r).expect("reports serialize"),
        };
        Ok((out, r.exit_code()))
    }
}

fn load(path: &Path) -> Result<ProblemFile, Failure> {
    ProblemFile::read(path).map_err(|e| Failure::Parse(format!("{}:{e}", path.display())))
}

fn missing(what: &str) -> Failure {
    Failure::Math(Error::precondition(format!("problem file has no {what}")))
}

fn ideal_of(pf: &ProblemFile, budget: &Budget) -> Result<Ideal, Failure> {
    match (&pf.ideal, &pf.parametrization) {
        (Some(i), _) => Ok(i.clone()),
        (None, Some(p)) => Ok(implicitize(p, budget)?),
        (None, None) => Err(missing("ideal or parametrization")),
    }
}

fn variety_of(pf: &ProblemFile, budget: &Budget) -> Result<Variety, Failure> {
    Ok(Variety {
        ideal: ideal_of(pf, budget)?,
        parametrization: pf.parametrization.clone(),
    })
}

fn point_of(pf: &ProblemFile, arity: usize) -> AffinePoint {
    pf.point.clone().unwrap_or_else(|| AffinePoint::origin(arity))
}

fn map_of(pf: &ProblemFile, source: Ideal) -> Result<AlgebraicMap, Failure> {
    let m = pf.map.as_ref().ok_or_else(|| missing("map on the variables"))?;
    Ok(AlgebraicMap::new(source, m.components.clone(), m.denominator.clone())?)
}

fn parametrization_of(pf: &ProblemFile) -> Result<&Parametrization, Failure> {
    pf.parametrization.as_ref().ok_or_else(|| missing("parametrization"))
}

fn cone_report(cone: &SecantCone, route: SecantRoute, budget: &Budget) -> Result<SecantReport, Failure> {
    Ok(SecantReport {
        route,
        ring: cone.ring.variables().to_vec(),
        generators: cone.ideal.generators().iter().map(|g| g.to_string()).collect(),
        everything: cone.is_everything(budget)?,
    })
}

fn run(cli: Cli) -> Outcome {
    let g = cli.global;
    let timeout = (g.timeout_seconds > 0).then(|| Duration::from_secs(g.timeout_seconds));
    let ctx = Ctx {
        budget: Budget::new(g.max_steps, timeout),
        format: g.format,
        order: g.order,
        seed: g.seed,
        scales: g.scales.0,
        pairs: g.pairs,
    };
    let b = &ctx.budget;
    match cli.command {
        Command::Gb { file } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            let (name, ord) = match ctx.order {
                OrderArg::Lex => ("lex", MonomialOrder::Lex),
                OrderArg::Grevlex => ("grevlex", MonomialOrder::GrevLex),
            };
            let gb = groebner_basis(ideal.generators(), ideal.ring(), &ord, b)?;
            ctx.emit(BasisReport::new(name, &gb))
        }
        Command::Nf { file, poly } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            let f = Polynomial::parse(&poly, ideal.ring())?;
            let ord = match ctx.order {
                OrderArg::Lex => MonomialOrder::Lex,
                OrderArg::Grevlex => MonomialOrder::GrevLex,
            };
            let gb = ideal.groebner(&ord, b)?;
            let r = normal_form(&f, gb.elements(), &ord)?;
            ctx.emit(NormalFormReport {
                polynomial: f.to_string(),
                member: r.is_zero(),
                normal_form: r.to_string(),
            })
        }
        Command::Eliminate { file, drop } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            let names: Vec<&str> = drop.iter().map(String::as_str).collect();
            ctx.emit(IdealReport::new(&eliminate(&ideal, &names, b)?))
        }
        Command::Implicitize { file } => {
            let pf = load(&file)?;
            ctx.emit(IdealReport::new(&implicitize(parametrization_of(&pf)?, b)?))
        }
        Command::Saturate { file, by } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            let g = Polynomial::parse(&by, ideal.ring())?;
            ctx.emit(IdealReport::new(&saturate(&ideal, &g, b)?))
        }
        Command::Intersect { first, second } => {
            let a = ideal_of(&load(&first)?, b)?;
            let c = ideal_of(&load(&second)?, b)?;
            ctx.emit(IdealReport::new(&intersect(&a, &c, b)?))
        }
        Command::Dim { file } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            ctx.emit(ValueReport {
                quantity: "dimension".into(),
                value: invariants::dimension(&ideal, b)? as u64,
            })
        }
        Command::Degree { file } => {
            let ideal = ideal_of(&load(&file)?, b)?;
            ctx.emit(ValueReport {
                quantity: "degree".into(),
                value: invariants::degree(&ideal, b)?,
            })
        }
        Command::TangentCone { file } => {
            let pf = load(&file)?;
            let ideal = ideal_of(&pf, b)?;
            let p = point_of(&pf, ideal.ring().arity());
            ctx.emit(IdealReport::new(&invariants::tangent_cone(&ideal, &p, b)?))
        }
        Command::Mult { file } => {
            let pf = load(&file)?;
            let ideal = ideal_of(&pf, b)?;
            let p = point_of(&pf, ideal.ring().arity());
            ctx.emit(ValueReport {
                quantity: "multiplicity".into(),
                value: invariants::multiplicity(&ideal, &p, b)?,
            })
        }
        Command::TangentDim { file } => {
            let pf = load(&file)?;
            let ideal = ideal_of(&pf, b)?;
            let p = point_of(&pf, ideal.ring().arity());
            ctx.emit(ValueReport {
                quantity: "tangent_dimension".into(),
                value: invariants::zariski_tangent_dim(&ideal, &p, b)? as u64,
            })
        }
        Command::Secant { file, route } => {
            let pf = load(&file)?;
            let (cone, route) = match route {
                RouteArg::Auto => variety_of(&pf, b)?.secant_cone(b)?,
                RouteArg::Scaling => (secant_cone(&ideal_of(&pf, b)?, b)?, SecantRoute::Scaling),
                RouteArg::Minors => (secant_cone_by_minors(&ideal_of(&pf, b)?, b)?, SecantRoute::Minors),
                RouteArg::Parametric => (secant_cone_parametric(parametrization_of(&pf)?, b)?, SecantRoute::Parametric),
            };
            ctx.emit(cone_report(&cone, route, b)?)
        }
        Command::CertifyProjection { file } => {
            let pf = load(&file)?;
            let m = pf.matrix.clone().ok_or_else(|| missing("matrix"))?;
            let x = variety_of(&pf, b)?;
            let (cone, _) = x.secant_cone(b)?;
            ctx.emit(CertifyReport {
                verdict: certify_with_cone(&cone, &m, b)?,
                matrix: m.to_strings(),
            })
        }
        Command::Graph { file } => {
            let pf = load(&file)?;
            let source = source_ideal(&pf, b)?;
            ctx.emit(IdealReport::new(&graph_ideal(&map_of(&pf, source)?, b)?))
        }
        Command::VerifyDegree { file } => {
            let pf = load(&file)?;
            let f = map_of(&pf, source_ideal(&pf, b)?)?;
            let fallback = NumericFallback {
                seed: ctx.seed,
                ..NumericFallback::default()
            };
            ctx.emit(verify_degree_invariance(&f, pf.parametrization.as_ref(), &fallback, b)?)
        }
        Command::VerifyMult { file } => {
            let pf = load(&file)?;
            let f = map_of(&pf, source_ideal(&pf, b)?)?;
            let p = point_of(&pf, f.source.ring().arity());
            ctx.emit(verify_multiplicity_invariance(&f, &p, b)?)
        }
        Command::CenterSearch { file, target, attempts } => {
            let pf = load(&file)?;
            let x = variety_of(&pf, b)?;
            let config = SearchConfig {
                target,
                seed: ctx.seed,
                attempts,
            };
            let (outcome, route) = random_center_search(&x, &config, b)?;
            ctx.emit(search_report(&x, &config, outcome, route, b)?)
        }
        Command::Veronese { r, d } => ctx.emit(IdealReport::new(&lipschitz::veronese_cone(r, d, b)?)),
        Command::NormalityProxy { r, d, target, attempts } => {
            ctx.emit(normality_proxy_report(r, d, target, ctx.seed, attempts, b)?)
        }
        Command::Distortion { file, norm } => {
            let pf = load(&file)?;
            let p = parametrization_of(&pf)?;
            let q = match (&pf.map, &pf.matrix) {
                (Some(_), _) => {
                    let f = map_of(&pf, Ideal::zero(&p.target))?;
                    if !f.is_polynomial() {
                        return Err(Failure::Math(Error::precondition("distortion needs a polynomial map")));
                    }
                    p.then(f.target.clone(), &f.components)?
                }
                (None, Some(m)) => {
                    let names = (1..=m.target_dim()).map(|i| p.params().fresh_name(&format!("w{i}")));
                    let image = Ring::new(names)?;
                    let forms: Vec<Polynomial> = m
                        .rows()
                        .iter()
                        .map(|r| bilip_core::ideal_ops::linear_form(&p.target, r))
                        .collect();
                    p.then(image, &forms)?
                }
                (None, None) => return Err(missing("map or matrix")),
            };
            let config = SamplerConfig {
                pairs: ctx.pairs,
                scales: ctx.scales.clone(),
                seed: ctx.seed,
                norm: match norm {
                    NormArg::Sup => Norm::Sup,
                    NormArg::Euclidean => Norm::Euclidean,
                },
            };
            ctx.emit(sampler::distortion(p, &q, &config)?)
        }
        Command::SecantCloud { file, residual } => {
            let pf = load(&file)?;
            let p = parametrization_of(&pf)?;
            let directions = sampler::secant_cloud(p, ctx.pairs, ctx.seed)?;
            let residual = if residual {
                let cone = secant_cone_parametric(p, b)?;
                Some(sampler::cone_residual(cone.ideal.generators(), &directions)?)
            } else {
                None
            };
            ctx.emit(CloudReport { directions, residual })
        }
    }
}

/// The source of a map: the ideal if given, else the implicitized
/// parametrization, else the whole space.
fn source_ideal(pf: &ProblemFile, budget: &Budget) -> Result<Ideal, Failure> {
    if pf.ideal.is_none() && pf.parametrization.is_none() {
        let ring = pf.vars.as_ref().ok_or_else(|| missing("vars"))?;
        return Ok(Ideal::zero(ring));
    }
    ideal_of(pf, budget)
}

fn search_report(
    x: &Variety,
    config: &SearchConfig,
    outcome: SearchOutcome,
    route: Option<SecantRoute>,
    budget: &Budget,
) -> Result<SearchReport, Failure> {
    let origin = AffinePoint::origin(x.ring().arity());
    let at_origin = origin.lies_on(&x.ideal)?;
    let (status, attempts, matrix, dims) = match &outcome {
        SearchOutcome::Certified { projection, attempt } => {
            let dims = if at_origin {
                let image = x.image_ideal(projection, budget)?;
                let src = invariants::zariski_tangent_dim(&x.ideal, &origin, budget)?;
                let img = invariants::zariski_tangent_dim(&image, &AffinePoint::origin(config.target), budget)?;
                Some((src, img))
            } else {
                None
            };
            (SearchStatus::Certified, *attempt, Some(projection.to_strings()), dims)
        }
        SearchOutcome::Embedding { rows } => (
            SearchStatus::Embedding,
            0,
            Some(rows.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect()),
            None,
        ),
        SearchOutcome::Inconclusive { attempts } => (SearchStatus::Inconclusive, *attempts, None, None),
    };
    Ok(SearchReport {
        target: config.target,
        seed: config.seed,
        status,
        attempts,
        matrix,
        secant_route: route,
        source_tangent_dim: dims.map(|d| d.0),
        image_tangent_dim: dims.map(|d| d.1),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            let code = f.exit_code();
            match f {
                Failure::Parse(msg) => eprintln!("error: {msg}"),
                Failure::Math(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
