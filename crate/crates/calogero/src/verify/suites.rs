use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::config::{Suite, SuiteConfig};
use super::status::{Check, Status};
use crate::construct::{Basis, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::harmonics::harmonics_check;
use crate::limits::{
    bound_checks, modulus_rate, moment_convergence_batch, pointwise_convergence, ratio_rate,
    BetaParams, LimitReport, BOUND_BETAS, DEFAULT_LADDER,
};
use crate::operators::{
    apply_d1, difference_eigenvalue, difference_series, eigenvalue_e, sample_point,
};
use crate::pieri::{
    chained_norm_ratio, mehta_macdonald, norm_formula, norm_ratio, norm_recurrence_check,
    pieri_full_b_check, pieri_r1_check, pieri_structure_a_check,
};
use crate::scalars::{format_rational, int, ExactScalar, Family, Params, Rational};
use crate::sympoly::{GaussianFunctional, Partition, SymPoly};

/// Coupling values of one case, as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Couplings {
    pub g0: String,
    pub g1: String,
    pub omega: String,
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseRecord {
    pub schema_version: u32,
    pub suite: String,
    pub family: Family,
    pub n: usize,
    pub couplings: Couplings,
    pub lambda: Option<Vec<u32>>,
    pub r: Option<usize>,
    pub status: Status,
    pub residual_term_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl CaseRecord {
    fn new(
        suite: Suite,
        params: &Params,
        lambda: Option<&Partition>,
        r: Option<usize>,
        check: Check,
    ) -> Self {
        CaseRecord {
            schema_version: SCHEMA_VERSION,
            suite: suite.name().to_string(),
            family: params.family(),
            n: params.n(),
            couplings: Couplings {
                g0: format_rational(params.g0()),
                g1: format_rational(params.g1()),
                omega: format_rational(params.omega()),
            },
            lambda: lambda.map(|l| l.parts().to_vec()),
            r,
            status: check.status,
            residual_term_count: check.residual_term_count,
            detail: check.detail,
            extra: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Per-parameter context shared by the cases of a run.
struct Context {
    params: Params,
    basis: Basis,
    functional: Option<GaussianFunctional>,
}

impl Context {
    fn new(params: Params) -> Result<Self> {
        let functional = match params.integer_couplings() {
            Ok(_) => Some(GaussianFunctional::new(&params)?),
            Err(_) => None,
        };
        Ok(Context {
            basis: Basis::new(&params),
            params,
            functional,
        })
    }
}

struct Case {
    ctx: usize,
    lambda: Partition,
    r: Option<usize>,
    index: usize,
}

/// Number of worker threads: `CALOGERO_THREADS` if set, else rayon's default.
pub fn thread_count() -> usize {
    std::env::var("CALOGERO_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

fn suite_accepts(suite: Suite, params: &Params, cfg: &SuiteConfig) -> bool {
    if suite.needs_integer_couplings() && params.integer_couplings().is_err() {
        return false;
    }
    match suite {
        Suite::DifferenceLimit => params.n() <= 2 || (cfg.deep && params.n() == 3),
        Suite::WeightsLimit => params.n() <= 2,
        _ => true,
    }
}

fn cases_for(
    suite: Suite,
    ctx: &Context,
    cfg: &SuiteConfig,
) -> Result<Vec<(Partition, Option<usize>)>> {
    let params = &ctx.params;
    let n = params.n();
    let lambdas = cfg.partitions(params)?;
    let mut out = Vec::new();
    match suite {
        Suite::Mehta => out.push((Partition::zero(n), None)),
        Suite::Norms => {
            for l in lambdas {
                out.push((l.clone(), None));
                out.extend(cfg.orders(n).into_iter().map(|r| (l.clone(), Some(r))));
            }
        }
        Suite::Pieri => {
            for l in lambdas {
                out.push((l.clone(), None));
                let structured = params.family() == Family::B || ctx.functional.is_some();
                if structured {
                    out.extend(cfg.orders(n).into_iter().map(|r| (l.clone(), Some(r))));
                }
            }
        }
        Suite::DifferenceLimit => {
            let max_r = if n == 3 { 2 } else { n };
            for l in lambdas {
                for r in cfg.orders(n).into_iter().filter(|&r| r <= max_r) {
                    out.push((l.clone(), Some(r)));
                }
            }
        }
        Suite::WeightsLimit => out.push((Partition::zero(n), None)),
        _ => out.extend(lambdas.into_iter().map(|l| (l, None))),
    }
    Ok(out)
}

/// Runs one suite over the grid; records come back in canonical case order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<CaseRecord>> {
    let contexts: Vec<Context> = cfg
        .params()?
        .into_iter()
        .filter(|p| suite_accepts(suite, p, cfg))
        .map(Context::new)
        .collect::<Result<_>>()?;
    let mut cases = Vec::new();
    for (i, ctx) in contexts.iter().enumerate() {
        for (lambda, r) in cases_for(suite, ctx, cfg)? {
            let index = cases.len();
            cases.push(Case {
                ctx: i,
                lambda,
                r,
                index,
            });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let nested: Vec<Vec<CaseRecord>> = pool.install(|| {
        cases
            .par_iter()
            .map(|case| run_case(suite, case, &contexts[case.ctx], cfg))
            .collect::<Result<_>>()
    })?;
    Ok(nested.into_iter().flatten().collect())
}

fn run_case(
    suite: Suite,
    case: &Case,
    ctx: &Context,
    cfg: &SuiteConfig,
) -> Result<Vec<CaseRecord>> {
    let lambda = &case.lambda;
    let params = &ctx.params;
    let record = |check: Result<Check>| -> Result<CaseRecord> {
        Ok(CaseRecord::new(
            suite,
            params,
            Some(lambda),
            case.r,
            Check::from_result(check)?,
        ))
    };
    let one = match suite {
        Suite::Orthogonality => record(orthogonality(lambda, ctx, cfg))?,
        Suite::Norms => match case.r {
            None => norms(lambda, ctx)?,
            Some(r) => record(norm_recurrence_check(lambda, r, params))?,
        },
        Suite::Pieri => match case.r {
            None => record(pieri_r1_check(lambda, &ctx.basis))?,
            Some(r) => match params.family() {
                Family::B => record(pieri_full_b_check(r, lambda, &ctx.basis))?,
                Family::A => {
                    let report = pieri_structure_a_check(r, lambda, &ctx.basis);
                    let count = report.as_ref().map(|s| s.subleading.len()).unwrap_or(0);
                    record(report.map(|s| s.check))?.with("subleadingCount", json!(count))
                }
            },
        },
        Suite::Diffeq => record(diffeq(lambda, ctx))?,
        Suite::DifferenceLimit => {
            difference_limit(lambda, case.r.unwrap_or(1), case.index, ctx, cfg)?
        }
        Suite::Harmonics => match harmonics_check(lambda, params) {
            Ok(report) => CaseRecord::new(suite, params, Some(lambda), None, report.check)
                .with("projectionAgrees", json!(report.projection_agrees)),
            Err(e) => record(Err(e))?,
        },
        Suite::Mehta => mehta(ctx)?,
        Suite::Normalization => record(normalization(lambda, ctx))?,
        Suite::WeightsLimit => return weights_limit(ctx, cfg),
    };
    Ok(vec![one])
}

fn count_check(failures: usize, detail: impl FnOnce() -> String) -> Check {
    if failures == 0 {
        Check::pass()
    } else {
        Check::fail(failures, detail())
    }
}

fn orthogonality(lambda: &Partition, ctx: &Context, cfg: &SuiteConfig) -> Result<Check> {
    let functional = ctx
        .functional
        .as_ref()
        .expect("suite filtered to integer couplings");
    let p = ctx.basis.monic(lambda)?;
    let mut bad = Vec::new();
    let others = Partition::up_to_weight(ctx.params.n(), cfg.max_weight.max(lambda.weight()));
    for mu in others.iter().filter(|mu| *mu > lambda) {
        let q = ctx.basis.monic(mu)?;
        let v = functional.inner_rational(p.poly.poly(), q.poly.poly());
        if !v.is_zero() {
            bad.push(format!("<p{lambda}, p{mu}> = {}", format_rational(&v)));
        }
    }
    Ok(count_check(bad.len(), || bad.join("; ")))
}

fn representable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotRepresentable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn norms(lambda: &Partition, ctx: &Context) -> Result<CaseRecord> {
    let params = &ctx.params;
    let mut problems = Vec::new();
    let ratio = match norm_ratio(lambda, params) {
        Err(Error::NonGeneric(msg)) => {
            let check = Check::from_result(Err(Error::NonGeneric(msg)))?;
            return Ok(CaseRecord::new(
                Suite::Norms,
                params,
                Some(lambda),
                None,
                check,
            ));
        }
        other => other?,
    };
    if chained_norm_ratio(lambda, params)? != ratio {
        problems.push("chained recurrence differs from the ratio form".to_string());
    }
    let mehta = representable(mehta_macdonald(params))?;
    let formula = representable(norm_formula(lambda, params))?;
    let from_ratio = mehta.as_ref().map(|m| m.scale(&ratio));
    if let (Some(f), Some(r)) = (&formula, &from_ratio) {
        if f != r {
            problems.push(format!("Γ form {f} vs ratio form {r}"));
        }
    }
    let mut gram_checked = false;
    if let Some(functional) = &ctx.functional {
        let p = ctx.basis.monic(lambda)?;
        let gram = functional.inner(&p.poly, &p.poly);
        gram_checked = true;
        for (name, value) in [("ratio form", &from_ratio), ("Γ form", &formula)] {
            match value {
                Some(v) if *v != gram => problems.push(format!("{name} {v} vs Gram {gram}")),
                None => problems.push(format!("{name} not representable at integer couplings")),
                _ => {}
            }
        }
    }
    let check = count_check(problems.len(), || problems.join("; "));
    Ok(
        CaseRecord::new(Suite::Norms, params, Some(lambda), None, check)
            .with("gramChecked", json!(gram_checked))
            .with("formulaRepresentable", json!(formula.is_some())),
    )
}

fn diffeq(lambda: &Partition, ctx: &Context) -> Result<Check> {
    let p = ctx.basis.monic(lambda)?;
    let e = eigenvalue_e(1, lambda, &ctx.params)?;
    let residual = apply_d1(&p.poly, &ctx.params)?.sub(&p.poly.scale(&e));
    Ok(count_check(residual.poly().len(), || {
        format!("D1 p - E1 p = {residual}")
    }))
}

const DIFFERENCE_POINTS: usize = 3;

fn difference_limit(
    lambda: &Partition,
    r: usize,
    index: usize,
    ctx: &Context,
    cfg: &SuiteConfig,
) -> Result<CaseRecord> {
    let params = &ctx.params;
    let p = ctx.basis.monic(lambda)?;
    let observed = difference_eigenvalue(r, lambda, params)?;
    let paper = eigenvalue_e(r, lambda, params)?;
    let sign = if r % 2 == 0 { int(1) } else { int(-1) };
    let mut rng = ChaCha8Rng::seed_from_u64(
        cfg.seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(index as u64),
    );
    let (mut prefix_zero, mut leading_ok, mut paper_ok) = (true, true, true);
    let mut nonzero = 0;
    for _ in 0..DIFFERENCE_POINTS {
        let x = sample_point(&mut rng, params);
        let series = difference_series(&p.poly, r, &x, params)?;
        let prefix = series[..2 * r].iter().filter(|c| !c.is_zero()).count();
        nonzero += prefix;
        prefix_zero &= prefix == 0;
        let leading = &series[2 * r] * &sign;
        let value = p.poly.eval(&x);
        leading_ok &= leading == &observed * &value;
        paper_ok &= leading == &paper * &value;
    }
    let check = if prefix_zero && leading_ok {
        Check::pass()
    } else {
        Check::fail(
            nonzero + usize::from(!leading_ok),
            format!("prefix zero: {prefix_zero}, leading coefficient matches: {leading_ok}"),
        )
    };
    Ok(
        CaseRecord::new(Suite::DifferenceLimit, params, Some(lambda), Some(r), check)
            .with("seriesPrefixZero", json!(prefix_zero))
            .with("leadingCoeffMatches", json!(leading_ok))
            .with("paperEigenvalueMatches", json!(paper_ok)),
    )
}

fn mehta(ctx: &Context) -> Result<CaseRecord> {
    let params = &ctx.params;
    let zero = Partition::zero(params.n());
    let functional = ctx
        .functional
        .as_ref()
        .expect("suite filtered to integer couplings");
    let gram = functional.moment(&crate::sympoly::Poly::one(params.n()));
    let mut problems = Vec::new();
    let closed: ExactScalar = mehta_macdonald(params)?;
    if closed != gram {
        problems.push(format!("Mehta-Macdonald {closed} vs Gram {gram}"));
    }
    let formula = norm_formula(&zero, params)?;
    if formula != gram {
        problems.push(format!("norm formula at 0 {formula} vs Gram {gram}"));
    }
    let check = count_check(problems.len(), || problems.join("; "));
    Ok(
        CaseRecord::new(Suite::Mehta, params, Some(&zero), None, check)
            .with("value", json!(gram.to_string())),
    )
}

fn normalization(lambda: &Partition, ctx: &Context) -> Result<Check> {
    let params = &ctx.params;
    let p = ctx.basis.pieri(lambda)?;
    let n = params.n();
    let (what, value) = match params.family() {
        Family::B => ("P(0)", p.poly.eval(&vec![Rational::zero(); n])),
        Family::A => (
            "c·J(1,…,1)",
            p.poly
                .homogeneous_part(lambda.weight())
                .eval(&vec![Rational::one(); n]),
        ),
    };
    Ok(count_check(usize::from(!value.is_one()), || {
        format!("{what} = {}", format_rational(&value))
    }))
}

/// Splits ω = ω/3 + 2ω/3 and g₁ = g₁/2 + g₁/2 so that every factor type is exercised.
fn beta_split(params: &Params) -> (Rational, Rational) {
    (params.omega() / int(3), params.g1() / int(2))
}

fn limit_record(params: &Params, lambda: Option<&Partition>, row: LimitReport) -> CaseRecord {
    let check = if row.passed() {
        Check::pass()
    } else {
        Check::fail(0, format!("{} failed at beta = {}", row.check, row.beta))
    };
    CaseRecord::new(Suite::WeightsLimit, params, lambda, None, check)
        .with("check", json!(row.check))
        .with("beta", json!(row.beta))
        .with("maxAbsError", json!(row.max_abs_error))
        .with("rateEstimate", json!(row.rate_estimate))
}

/// Moment convergence is checked for monomials up to this degree in x.
const MOMENT_MAX_DEGREE: u32 = 4;

fn weights_limit(ctx: &Context, cfg: &SuiteConfig) -> Result<Vec<CaseRecord>> {
    let params = &ctx.params;
    let (varpi, gg1) = beta_split(params);
    let tol = cfg.tol.unwrap_or(1e-3);
    let bp = BetaParams::split(params, &varpi, &gg1, 0.1)?;
    let mut rows = Vec::new();
    let ys = [0.0, 0.4, -1.0, 2.5];
    for alpha in [bp.varpi, bp.varpi_prime] {
        rows.extend(modulus_rate(alpha, &ys, &DEFAULT_LADDER));
    }
    let mut ratio_cases = vec![(bp.g0, 0.0)];
    if params.family() == Family::B {
        ratio_cases.push((bp.gg1, 0.0));
        ratio_cases.push((bp.gg1_prime, 0.5));
    }
    for &(a, b) in &ratio_cases {
        rows.extend(ratio_rate(a, b, &[2.0, 0.6, -1.4], &DEFAULT_LADDER));
    }
    for alpha in [bp.varpi, bp.varpi_prime] {
        rows.extend(bound_checks(alpha, &BOUND_BETAS, &ratio_cases));
    }
    let points: Vec<Vec<f64>> = [[0.45, -1.15], [1.6, 0.35], [-0.7, 1.9]]
        .iter()
        .map(|p| p[..params.n()].to_vec())
        .collect();
    rows.extend(pointwise_convergence(
        &bp,
        &points,
        &DEFAULT_LADDER[..3],
        tol,
    )?);
    let mut out: Vec<CaseRecord> = rows
        .into_iter()
        .map(|row| limit_record(params, None, row))
        .collect();

    let lambdas: Vec<Partition> = cfg
        .partitions(params)?
        .into_iter()
        .filter(|l| match params.family() {
            Family::A => l.weight(),
            Family::B => 2 * l.weight(),
        } <= MOMENT_MAX_DEGREE)
        .collect();
    let ps: Vec<SymPoly> = lambdas
        .iter()
        .map(|l| SymPoly::msym(l, params.is_even()))
        .collect();
    let moments = moment_convergence_batch(&ps, params, &varpi, &gg1, &[1e-1, 1e-2], tol)?;
    for ((lambda, p), rows) in lambdas.iter().zip(&ps).zip(moments) {
        let degree = json!(p.degree().unwrap_or(0));
        out.extend(
            rows.into_iter()
                .map(|row| limit_record(params, Some(lambda), row).with("degree", degree.clone())),
        );
    }
    Ok(out)
}

/// Summary counts of a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub non_generic: usize,
}

pub fn summarize(records: &[CaseRecord]) -> Summary {
    let mut s = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in records {
        match r.status {
            Status::Pass => s.passed += 1,
            Status::Fail => s.failed += 1,
            Status::NonGeneric => s.non_generic += 1,
        }
    }
    s
}
