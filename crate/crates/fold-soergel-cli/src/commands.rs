//! The five commands.  Each returns its report as text plus an exit status;
//! nothing here prints, so the binary and the tests share one code path.

use fold_soergel::equiv::{EqObj, Indec};
use fold_soergel::foldcat::{parse_expr, Evaluator, Relation};
use fold_soergel::grring::{self, RingElem};
use fold_soergel::homsolve;
use fold_soergel::polyring::LaurentInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog_file::{parse_jsonl, read_catalog, SHIPPED_CATALOG};
use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::morphism_json::SumMorJson;

/// A command line request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Verify { only: Option<String> },
    Hom { src: String, dst: String, max_degree: Option<i32>, basis: bool },
    Decompose { word: String },
    Ring { expr: String, specialize: Option<i64> },
    Eval { expr: String },
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn render<T: Serialize>(value: &T, format: Format, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(value),
    }
}

/// Runs a command; errors are reported with exit status 2.
pub fn run(command: &Command, config: &RunConfig) -> Outcome {
    let result = match command {
        Command::Verify { only } => verify(only.as_deref(), config),
        Command::Hom { src, dst, max_degree, basis } => {
            hom(src, dst, max_degree.unwrap_or(config.degree_bound), *basis, config)
        }
        Command::Decompose { word } => decompose(word, config),
        Command::Ring { expr, specialize } => ring(expr, *specialize, config),
        Command::Eval { expr } => eval(expr, config),
    };
    result.unwrap_or_else(|e| Outcome { code: e.exit_code(), stdout: format!("error: {}\n", e) })
}

// ---------------------------------------------------------------- verify

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub id: String,
    pub kind: String,
    pub origin: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub relations: Vec<RelationResult>,
}

/// Checks relations in parallel; results keep the catalog order.
pub fn verify_relations(relations: &[Relation], config: &RunConfig) -> VerifyReport {
    let ev = Evaluator::new();
    let results: Vec<RelationResult> = config.pool().install(|| {
        relations
            .par_iter()
            .map(|r| {
                let (pass, error) = match r.verify(&ev) {
                    Ok(b) => (b, None),
                    Err(e) => (false, Some(e.to_string())),
                };
                RelationResult {
                    id: r.id.clone(),
                    kind: r.kind.as_str().to_string(),
                    origin: r.origin.clone(),
                    pass,
                    error,
                }
            })
            .collect()
    });
    let passed = results.iter().filter(|r| r.pass).count();
    VerifyReport { total: results.len(), passed, failed: results.len() - passed, relations: results }
}

fn load_catalog(config: &RunConfig) -> Result<Vec<Relation>, CliError> {
    match &config.catalog {
        Some(p) => read_catalog(p),
        None => parse_jsonl(SHIPPED_CATALOG),
    }
}

fn verify(only: Option<&str>, config: &RunConfig) -> Result<Outcome, CliError> {
    let mut relations = load_catalog(config)?;
    if let Some(id) = only {
        relations.retain(|r| r.id == id);
        if relations.is_empty() {
            return Err(CliError::Unknown(format!("relation id {:?}", id)));
        }
    }
    let report = verify_relations(&relations, config);
    let code = if report.relations.iter().any(|r| r.error.is_some()) {
        2
    } else if report.failed > 0 {
        1
    } else {
        0
    };
    let stdout = render(&report, config.format, |r| {
        let mut s = String::new();
        for x in &r.relations {
            let status = if x.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("{} {} [{}] {}\n", status, x.id, x.kind, x.origin));
            if let Some(e) = &x.error {
                s.push_str(&format!("  error: {}\n", e));
            }
        }
        s.push_str(&format!("{} of {} relations hold\n", r.passed, r.total));
        s
    });
    Ok(Outcome { code, stdout })
}

// ---------------------------------------------------------------- hom

/// Parses an object such as `Y`, `1`, `YZ`, `X*Z[1]` into an equivariant object.
pub fn parse_object(text: &str) -> Result<EqObj, CliError> {
    let word = grring::parse_word(text)?;
    Ok(word.iter().fold(EqObj::unit(), |acc, (n, k)| acc.tensor(&EqObj::indecomposable(*n, *k))))
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeDim {
    pub degree: i32,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeBasis {
    pub degree: i32,
    pub maps: Vec<SumMorJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub src: String,
    pub dst: String,
    pub max_degree: i32,
    pub min_degree: i32,
    pub dims: Vec<DegreeDim>,
    pub series: String,
    /// `p(v)` with `series = p(v) / ((1 - v^2)(1 - v^4))`, checked through `max_degree`.
    pub numerator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<DegreeBasis>>,
}

/// Graded dimensions (and optionally bases) of `Hom(src, dst)`, one degree per task.
pub fn hom_report(
    src: &str,
    dst: &str,
    max_degree: i32,
    with_basis: bool,
    config: &RunConfig,
) -> Result<HomReport, CliError> {
    let a = parse_object(src)?;
    let b = parse_object(dst)?;
    let lo = homsolve::min_degree(&a, &b);
    let degrees: Vec<i32> = (lo..=max_degree).collect();
    let per_degree: Vec<(i32, usize, Option<Vec<SumMorJson>>)> = config.pool().install(|| {
        degrees
            .par_iter()
            .map(|d| {
                if with_basis {
                    let h = homsolve::hom_basis(&a, &b, *d);
                    let maps = h.basis.iter().map(|m| SumMorJson::from_sum(&m.map)).collect();
                    (*d, h.dim(), Some(maps))
                } else {
                    (*d, homsolve::hom_dim(&a, &b, *d), None)
                }
            })
            .collect()
    });
    let dims: Vec<(i32, usize)> = per_degree.iter().map(|(d, n, _)| (*d, *n)).collect();
    let series = homsolve::series_from_dims(&dims);
    let (numerator, numerator_error) = match homsolve::numerator_checked(&series, max_degree) {
        Ok(p) => (Some(p.to_string()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let basis = with_basis.then(|| {
        per_degree
            .into_iter()
            .filter(|(_, n, _)| *n > 0)
            .map(|(degree, _, maps)| DegreeBasis { degree, maps: maps.unwrap_or_default() })
            .collect()
    });
    Ok(HomReport {
        src: src.to_string(),
        dst: dst.to_string(),
        max_degree,
        min_degree: lo,
        dims: dims.iter().map(|(degree, dim)| DegreeDim { degree: *degree, dim: *dim }).collect(),
        series: series.to_string(),
        numerator,
        numerator_error,
        basis,
    })
}

fn hom(src: &str, dst: &str, max_degree: i32, with_basis: bool, config: &RunConfig) -> Result<Outcome, CliError> {
    if max_degree < 0 {
        return Err(CliError::Config(format!("max degree must be nonnegative, got {}", max_degree)));
    }
    let report = hom_report(src, dst, max_degree, with_basis, config)?;
    let stdout = render(&report, config.format, |r| {
        let mut s = format!("Hom({}, {}) through degree {}\n", r.src, r.dst, r.max_degree);
        for d in &r.dims {
            s.push_str(&format!("  degree {:>3}: {}\n", d.degree, d.dim));
        }
        s.push_str(&format!("series: {}\n", r.series));
        match (&r.numerator, &r.numerator_error) {
            (Some(p), _) => {
                s.push_str(&format!("numerator over R^tau: {} (checked through degree {})\n", p, r.max_degree))
            }
            (None, Some(e)) => s.push_str(&format!("numerator: {}\n", e)),
            _ => {}
        }
        s
    });
    Ok(Outcome { code: 0, stdout })
}

// ---------------------------------------------------------------- decompose

#[derive(Clone, Debug, Serialize)]
pub struct SummandJson {
    pub object: String,
    pub shift: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub word: String,
    pub summands: Vec<SummandJson>,
    pub class: String,
}

fn decompose(word: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let w = grring::parse_word(word)?;
    let parts = grring::decompose_word(&w);
    let report = DecomposeReport {
        word: word.to_string(),
        summands: parts.iter().map(|(n, k)| SummandJson { object: n.name().to_string(), shift: *k }).collect(),
        class: grring::class_of(&parts).to_string(),
    };
    let text = grring::render_summands(&parts);
    let stdout = render(&report, config.format, |r| format!("{} = {}\nclass: {}\n", r.word, text, r.class));
    Ok(Outcome { code: 0, stdout })
}

// ---------------------------------------------------------------- ring

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialize: Option<i64>,
    pub normal_form: String,
    /// Coefficients on the basis, in basis order.
    pub coefficients: Vec<BasisCoeff>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisCoeff {
    pub basis: String,
    pub coeff: String,
}

fn ring(expr: &str, specialize: Option<i64>, config: &RunConfig) -> Result<Outcome, CliError> {
    let e = RingElem::parse(expr)?;
    let (normal_form, coefficients) = match specialize {
        None => (
            e.to_string(),
            Indec::ALL
                .iter()
                .map(|n| BasisCoeff { basis: n.name().to_string(), coeff: e.coeff(*n).to_string() })
                .collect(),
        ),
        Some(x) => {
            let s = e.specialize(x)?;
            let names = ["1", "Y", "Z"];
            let coeffs = names
                .iter()
                .zip(&s.coeffs)
                .map(|(n, c)| BasisCoeff { basis: n.to_string(), coeff: c.to_string() })
                .collect();
            (s.to_string(), coeffs)
        }
    };
    let report = RingReport { input: expr.to_string(), specialize, normal_form, coefficients };
    let stdout = render(&report, config.format, |r| format!("{}\n", r.normal_form));
    Ok(Outcome { code: 0, stdout })
}

// ---------------------------------------------------------------- eval

#[derive(Clone, Debug, Serialize)]
pub struct EvalReport {
    pub expr: String,
    pub src: String,
    pub tgt: String,
    pub degree: i32,
    pub equivariant: bool,
    pub map: SumMorJson,
}

fn eval(expr: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let e = parse_expr(expr)?;
    let (s, t, d) = e.shape()?;
    let m = Evaluator::new().eval(&e)?;
    let report = EvalReport {
        expr: e.to_string(),
        src: s.to_string(),
        tgt: t.to_string(),
        degree: d,
        equivariant: m.is_equivariant(),
        map: SumMorJson::from_sum(&m.map),
    };
    let stdout = render(&report, config.format, |r| {
        format!("{} : {} -> {} (degree {})\n{}\n", r.expr, r.src, r.tgt, r.degree, m.map)
    });
    Ok(Outcome { code: 0, stdout })
}

/// `graded_dim` through the configured bound, for use by callers that only
/// need the series.
pub fn graded_dim(src: &EqObj, dst: &EqObj, config: &RunConfig) -> LaurentInt {
    let degrees: Vec<i32> = (homsolve::min_degree(src, dst)..=config.degree_bound).collect();
    let dims: Vec<(i32, usize)> =
        config.pool().install(|| degrees.par_iter().map(|d| (*d, homsolve::hom_dim(src, dst, *d))).collect());
    homsolve::series_from_dims(&dims)
}
