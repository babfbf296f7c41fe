use serde_json::{json, Value};
use thiserror::Error;

use g2skein::annulus11::A11Algebra;
use g2skein::qscalar::{CyclotomicField, Field, RationalFunctions};
use g2skein::verify::{self, search_transparent, search_transparent_generic, Status, TransparentSubspace, VerifyReport};
use g2skein::weblambda::{to_eprime, LLPoly};
use g2skein::xyring::{p_int, q_int, XYPoly};
use g2skein::{Error, ParseError};

use crate::{CheckParams, Command, Which};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => CliError::Usage(p.message),
            other => CliError::Compute(other),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.message)
    }
}

/// How the process should exit once output is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

type Output = Result<(String, Outcome), CliError>;

/// Runs a command, returning the text to emit.
pub fn run(cmd: &Command, as_json: bool) -> Output {
    match cmd {
        Command::Pq { k, which } => pq(*k, *which, as_json),
        Command::Estar { m } => match m {
            Some(m) => estar(CyclotomicField::new(*m), as_json),
            None => estar(RationalFunctions, as_json),
        },
        Command::Fmap { expr, m } => match m {
            Some(m) => fmap(CyclotomicField::new(*m), expr, as_json),
            None => fmap(RationalFunctions, expr, as_json),
        },
        Command::Defect { poly, m } => match m {
            Some(m) => defect(CyclotomicField::new(*m), poly, as_json),
            None => defect(RationalFunctions, poly, as_json),
        },
        Command::Verify { name, params } => verify_cmd(name, params, as_json),
        Command::Search { m, bound } => match m {
            Some(m) => {
                let field = CyclotomicField::new(*m);
                let sub = search_transparent(&field, *bound)?;
                search_output(&field, &sub, as_json)
            }
            None => search_output(&RationalFunctions, &search_transparent_generic(*bound)?, as_json),
        },
    }
}

fn emit(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn pq(k: u32, which: Which, as_json: bool) -> Output {
    let poly = match which {
        Which::P => p_int(k as usize),
        Which::Q => q_int(k as usize),
    };
    let name = if which == Which::P { "P" } else { "Q" };
    let text = if as_json {
        let (a, b) = poly.bidegree()?;
        emit(json!({"which": name, "k": k, "poly": poly.to_string(), "bidegree": [a, b]}))
    } else {
        format!("{poly}\n")
    };
    Ok((text, Outcome::Pass))
}

fn estar<F: Field>(field: F, as_json: bool) -> Output {
    let label = field.label();
    let alg = A11Algebra::new(field)?;
    let items = [
        ("x^*", alg.x_up_star()),
        ("y^*", alg.y_up_star()),
        ("x_*", alg.x_down_star()),
        ("y_*", alg.y_down_star()),
        ("y_bar", alg.y_bar()),
        ("y_under", alg.y_under()),
    ];
    let text = if as_json {
        let mut obj = serde_json::Map::new();
        obj.insert("field".into(), json!(label));
        for (name, e) in items {
            obj.insert(name.into(), json!(e.to_string()));
        }
        emit(Value::Object(obj))
    } else {
        items.iter().map(|(n, e)| format!("{n} = {e}\n")).collect()
    };
    Ok((text, Outcome::Pass))
}

fn fmap<F: Field>(field: F, expr: &str, as_json: bool) -> Output {
    let p = LLPoly::parse(&field, expr)?;
    let e = match to_eprime(&field, &p) {
        Ok(e) => e,
        Err(Error::NotSymmetric) => {
            return Err(CliError::Usage(format!("`{expr}` is not symmetric under l1 <-> l2")))
        }
        Err(other) => return Err(other.into()),
    };
    let label = field.label();
    let alg = A11Algebra::new(field)?;
    let (up, down) = (alg.f_up(&e), alg.f_down(&e));
    let text = if as_json {
        emit(json!({
            "field": label,
            "input": p.to_string(),
            "eprime": e.to_string(),
            "f_up": up.to_string(),
            "f_down": down.to_string(),
        }))
    } else {
        format!("E' form: {e}\nF^* = {up}\nF_* = {down}\n")
    };
    Ok((text, Outcome::Pass))
}

fn defect<F: Field>(field: F, poly: &str, as_json: bool) -> Output {
    let s = XYPoly::parse(&field, poly)?;
    let label = field.label();
    let alg = A11Algebra::new(field)?;
    let d = alg.transparency_defect(&s);
    let text = if as_json {
        emit(json!({
            "field": label,
            "poly": s.to_string(),
            "defect": d.to_string(),
            "transparent": d.is_zero(),
        }))
    } else if d.is_zero() {
        format!("defect over {label} = 0 (transparent)\n")
    } else {
        format!("defect over {label} = {d}\n")
    };
    Ok((text, Outcome::Pass))
}

fn search_output<F: Field>(field: &F, sub: &TransparentSubspace<F::Elem>, as_json: bool) -> Output {
    let polys: Vec<String> = sub.polys(field).iter().map(ToString::to_string).collect();
    let text = if as_json {
        emit(json!({
            "field": field.label(),
            "m": sub.m,
            "bound": [sub.bound.0, sub.bound.1],
            "candidates": sub.labels.len(),
            "dim": sub.dim(),
            "basis": polys,
        }))
    } else {
        let mut s = format!(
            "transparent subspace over {} below ({}, {}): dimension {} of {}\n",
            field.label(),
            sub.bound.0,
            sub.bound.1,
            sub.dim(),
            sub.labels.len()
        );
        for p in polys {
            s.push_str(&format!("  {p}\n"));
        }
        s
    };
    Ok((text, Outcome::Pass))
}

impl CheckParams {
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (set, name) in [
            (self.k.is_some(), "k"),
            (self.which.is_some(), "which"),
            (self.n.is_some(), "n"),
            (self.m.is_some(), "m"),
            (self.bound.is_some(), "bound"),
            (self.seed.is_some(), "seed"),
            (self.samples.is_some(), "samples"),
        ] {
            if set {
                out.push(name);
            }
        }
        out
    }
}

/// Flags each check accepts.
fn accepted(name: &str) -> &'static [&'static str] {
    match name {
        "known_values" | "leading_terms" | "degree_shift" | "tilde" => &["k"],
        "power_sums" => &["k", "n"],
        "composition" => &["k", "n"],
        "a11_presentation" | "star_consistency" => &["samples", "bound", "seed"],
        "transparency" => &["n", "m"],
        "denominator_guard" => &["m"],
        "not_transparent" => &["k", "which", "m"],
        "search" => &["m", "bound"],
        "round_trip" => &["seed", "samples"],
        _ => &[],
    }
}

fn single(name: &str, p: &CheckParams) -> Result<VerifyReport, CliError> {
    Ok(match name {
        "known_values" => verify::check_known_values(p.k.unwrap_or(20)),
        "power_sums" => verify::check_power_sums(p.k.unwrap_or(20), p.n.unwrap_or(3), 6),
        "composition" => verify::check_composition(p.n.unwrap_or(4), p.k.unwrap_or(4)),
        "leading_terms" => verify::check_leading_terms(p.k.unwrap_or(4)),
        "a11_presentation" => {
            let index_bound = p.bound.map_or(6, |b| b.0 as u32);
            verify::check_a11_presentation(p.samples.unwrap_or(100), index_bound, p.seed.unwrap_or(1))
        }
        "star_consistency" => verify::check_star_consistency(
            p.samples.unwrap_or(10),
            p.bound.unwrap_or((8, 8)),
            p.seed.unwrap_or(2),
        ),
        "degree_shift" => verify::check_degree_shift(i64::from(p.k.unwrap_or(4))),
        "tilde" => verify::check_tilde(p.k.unwrap_or(6)),
        "transparency" => match (p.n, p.m) {
            (Some(n), Some(m)) => verify::check_transparent(n, m),
            _ => return Err(CliError::Usage("transparency needs both --n and --m".into())),
        },
        "denominator_guard" => verify::check_denominator_guard(&[p.m.unwrap_or(4)]),
        "not_transparent" => {
            let k = p.k.ok_or_else(|| CliError::Usage("not_transparent needs --k".into()))?;
            let s = match p.which.unwrap_or(Which::P) {
                Which::P => p_int(k as usize),
                Which::Q => q_int(k as usize),
            };
            verify::check_not_transparent(&s.to_string(), p.m.unwrap_or(10))
        }
        "search" => verify::check_search(p.m, p.bound.unwrap_or((10, 10))),
        "round_trip" => verify::check_round_trip(p.seed.unwrap_or(3), p.samples.unwrap_or(60) as usize),
        _ => unreachable!("names are validated before dispatch"),
    })
}

fn verify_cmd(name: &str, params: &CheckParams, as_json: bool) -> Output {
    let names = verify::check_names();
    let given = params.given();
    let reports = if name == "all" {
        if !given.is_empty() {
            return Err(CliError::Usage("`verify all` takes no check parameters".into()));
        }
        verify::run_suite(None)
    } else if !names.contains(&name) {
        return Err(CliError::Usage(format!(
            "unknown check `{name}`; expected `all` or one of: {}",
            names.join(", ")
        )));
    } else if given.is_empty() {
        verify::run_suite(Some(name))
    } else {
        let ok = accepted(name);
        if let Some(bad) = given.iter().find(|g| !ok.contains(g)) {
            return Err(CliError::Usage(format!(
                "check `{name}` does not take --{bad} (accepted: {})",
                if ok.is_empty() { "none".to_string() } else { ok.iter().map(|f| format!("--{f}")).collect::<Vec<_>>().join(", ") }
            )));
        }
        vec![single(name, params)?]
    };
    let outcome = if reports.iter().any(|r| r.status == Status::Error) {
        Outcome::Error
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        Outcome::Fail
    } else {
        Outcome::Pass
    };
    let lines: Vec<String> = reports.iter().map(VerifyReport::summary_line).collect();
    let text = if as_json {
        // the per-check summary goes to stderr so stdout stays valid JSON
        for l in &lines {
            eprintln!("{l}");
        }
        emit(serde_json::to_value(&reports).expect("reports serialize"))
    } else {
        let passed = reports.iter().filter(|r| r.passed()).count();
        format!("{}\n{passed} of {} checks passed\n", lines.join("\n"), reports.len())
    };
    Ok((text, outcome))
}
