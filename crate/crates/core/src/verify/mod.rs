//! The verification suite: each check recomputes an identity exactly and
//! returns a [`VerifyReport`].

mod checks;
pub mod sample;
pub mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub use checks::*;
pub use search::{
    coordinates, expected_truncation, order_of_q_squared, pq_labels, search_transparent,
    search_transparent_generic,
    TransparentSubspace,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// Outcome of one check. A failing report always carries a witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(rename = "check")]
    pub check_name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One human-readable line, e.g. `PASS  transparency {"m":10,"n":5} (17 ms)`.
    pub fn summary_line(&self) -> String {
        let params = serde_json::to_string(&self.params).unwrap_or_default();
        let mut line = format!(
            "{:<5} {} {} ({} ms)",
            self.status, self.check_name, params, self.elapsed_ms
        );
        if let (false, Some(w)) = (self.passed(), &self.witness) {
            line.push_str(": ");
            line.push_str(&clip(w, 300));
        }
        line
    }
}

/// Shortens long witnesses for one-line output.
pub(crate) fn clip(s: &str, max: usize) -> String {
    if s.chars().count() <= max {
        s.to_string()
    } else {
        let head: String = s.chars().take(max).collect();
        format!("{head}...")
    }
}

/// Runs `body`, timing it. `Ok(None)` passes, `Ok(Some(witness))` fails and
/// `Err` becomes an error report.
pub(crate) fn run_check(
    name: &str,
    params: Value,
    body: impl FnOnce() -> Result<Option<String>>,
) -> VerifyReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let params = match params {
        Value::Object(map) => map.into_iter().collect(),
        Value::Null => BTreeMap::new(),
        other => BTreeMap::from([("value".to_string(), other)]),
    };
    let (status, witness) = match outcome {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) => (Status::Error, Some(e.to_string())),
    };
    VerifyReport {
        check_name: name.to_string(),
        params,
        status,
        witness,
        elapsed_ms,
    }
}

type CheckFn = Box<dyn Fn() -> VerifyReport + Send + Sync>;

/// A named entry of the default suite.
pub struct SuiteEntry {
    pub name: &'static str,
    pub run: CheckFn,
}

fn entry(name: &'static str, run: impl Fn() -> VerifyReport + Send + Sync + 'static) -> SuiteEntry {
    SuiteEntry {
        name,
        run: Box::new(run),
    }
}

/// Orders used for the transparency checks, as `(n, m)`.
pub const TRANSPARENCY_CASES: [(u32, u32); 5] = [(1, 1), (1, 2), (5, 10), (7, 14), (8, 16)];

/// Orders at which the structure constants must be rejected.
pub const VANISHING_ORDERS: [u32; 2] = [4, 8];

/// Every check with its default parameters, in a fixed order.
pub fn default_suite() -> Vec<SuiteEntry> {
    let mut out = vec![
        entry("elementary_sums", check_elementary_sums),
        entry("elementary_sums_mutation", check_elementary_sums_mutation),
        entry("known_values", || check_known_values(20)),
        entry("power_sums", || check_power_sums(20, 3, 6)),
        entry("composition", || check_composition(4, 4)),
        entry("leading_terms", || check_leading_terms(4)),
        entry("a11_presentation", || check_a11_presentation(100, 6, 1)),
        entry("star_consistency", || check_star_consistency(10, (8, 8), 2)),
        entry("degree_shift", || check_degree_shift(4)),
        entry("tilde", || check_tilde(6)),
    ];
    for (n, m) in TRANSPARENCY_CASES {
        out.push(entry("transparency", move || check_transparent(n, m)));
    }
    out.push(entry("denominator_guard", || {
        check_denominator_guard(&VANISHING_ORDERS)
    }));
    for k in 1..=4 {
        out.push(entry("not_transparent", move || {
            check_not_transparent(&crate::xyring::p_int(k).to_string(), 10)
        }));
    }
    out.push(entry("search", || check_search(Some(10), (10, 10))));
    out.push(entry("search", || check_search(None, GENERIC_SEARCH_BOUND)));
    out.push(entry("search", || check_search(Some(1), (10, 10))));
    out.push(entry("round_trip", || check_round_trip(3, 60)));
    out
}

/// Names accepted by [`run_suite`], without duplicates.
pub fn check_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = Vec::new();
    for e in default_suite() {
        if !names.contains(&e.name) {
            names.push(e.name);
        }
    }
    names
}

/// Runs the default suite (or the entries named `only`) in parallel; the
/// result order is the suite order regardless of completion order.
pub fn run_suite(only: Option<&str>) -> Vec<VerifyReport> {
    default_suite()
        .into_par_iter()
        .filter(|e| only.is_none_or(|n| n == e.name))
        .map(|e| (e.run)())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn report_json_shape() {
        let r = run_check("demo", serde_json::json!({"n": 5}), || Ok(Some("w".into())));
        let v: Value = serde_json::to_value(&r).unwrap();
        let obj = v.as_object().unwrap();
        let mut keys: Vec<_> = obj.keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["check", "elapsed_ms", "params", "status", "witness"]);
        assert_eq!(obj["status"], "fail");
        assert_eq!(obj["params"]["n"], 5);
        let back: VerifyReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn error_reports_carry_message() {
        let r = run_check("demo", Value::Null, || Err(Error::NoACTerm));
        assert_eq!(r.status, Status::Error);
        assert!(r.witness.unwrap().contains("a^i*c^j"));
    }

    #[test]
    fn names_are_unique_and_ordered() {
        let names = check_names();
        assert_eq!(names[0], "elementary_sums");
        assert!(names.contains(&"search"));
        assert_eq!(names.iter().filter(|n| **n == "transparency").count(), 1);
    }
}
