//! The subcommands. Each returns its rendered output and whether every
//! check it made passed.

use std::fmt::Write as _;
use std::fs;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use shpf_core::characters::{
    clifford_character, exterior_character, naive_character, naive_character_by_traces, pf_character,
    spin_naive_character, ClassFunction,
};
use shpf_core::counting::{catalan, schroeder};
use shpf_core::parking::{enumerate_pf, enumerate_schroeder_paths, enumerate_sorted_naive, enumerate_sorted_pf};
use shpf_core::shifted::{enumerate_garages, enumerate_sorted_odd, is_garage_word};
use shpf_core::symfunc::{expand_odd_v, naive_v_expansion, pf_symfunc, sh_symfunc, t_graded};
use shpf_core::verify::{self, Check};

use crate::cache::{Cache, CacheKey};
use crate::config::{Basis, CharacterKind, CommandSpec, Family, Format, RunConfig, Target};
use crate::error::CliError;
use crate::json::{ClassFunctionJson, ClassValueJson, ObjectJson, SymFuncJson, TermValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub success: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, success: true }
    }
}

/// Runs the configured command and writes its output to `--out` if given.
/// The returned body is what would go to stdout otherwise.
pub fn execute(cfg: &RunConfig) -> Result<Output, CliError> {
    let output = run(cfg)?;
    if let Some(path) = &cfg.out {
        fs::write(path, &output.body).map_err(|e| CliError::io(path, e))?;
    }
    Ok(output)
}

pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    match &cfg.command {
        CommandSpec::Expand { n, target, basis } => {
            let json = expand(*n, *target, *basis, &cfg.cache)?;
            Ok(Output::ok(render_symfunc(&json, cfg.format)?))
        }
        CommandSpec::Count { ns, what } => {
            let ns: Vec<usize> = ns.clone().collect();
            let rows =
                with_pool(cfg.jobs, || ns.par_iter().map(|&n| count_row(*what, n)).collect::<Result<Vec<_>, _>>())??;
            let success = rows.iter().all(|r| r.status == "PASS");
            Ok(Output { body: render_counts(&rows, cfg.format)?, success })
        }
        CommandSpec::Verify { suite, config } => {
            let tasks = verify::tasks(*suite, config);
            let checks: Vec<Check> = with_pool(cfg.jobs, || tasks.par_iter().map(|t| t.run(config)).collect())?;
            let success = checks.iter().all(Check::passed);
            Ok(Output { body: render_checks(&checks, cfg.format)?, success })
        }
        CommandSpec::Enumerate { n, what } => Ok(Output::ok(enumerate(*n, *what, cfg.format)?)),
        CommandSpec::Character { n, which } => {
            let json = character(*n, *which, &cfg.cache)?;
            Ok(Output::ok(render_class_function(&json, cfg.format)?))
        }
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {j} worker threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Format(e.to_string()))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Format(e.to_string())
}

fn pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn tuple(xs: &[impl ToString]) -> String {
    format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn spaced(xs: &[impl ToString]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Drops a `/1` denominator for text output.
fn short(q: &str) -> &str {
    q.strip_suffix("/1").unwrap_or(q)
}

// expand

fn value_name<T: clap::ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

pub fn expand(n: usize, target: Target, basis: Basis, cache: &Cache) -> Result<SymFuncJson, CliError> {
    let key = CacheKey::new(format!("expand/{}/{}", value_name(&target), value_name(&basis)), n);
    let (json, _) = cache.get_or_compute(&key, || -> Result<SymFuncJson, CliError> {
        Ok(match (target, basis) {
            (Target::Pf, Basis::P) => SymFuncJson::from(&pf_symfunc(n)?),
            (Target::Sh, Basis::P) => SymFuncJson::from(&sh_symfunc(n)?),
            (Target::Sh, Basis::VOdd) => SymFuncJson::from_coefficients(n, "v", &expand_odd_v(&sh_symfunc(n)?)?),
            (Target::Sh, Basis::VNaive) => SymFuncJson::from_coefficients(n, "v", &naive_v_expansion(n)),
            (Target::ShT, Basis::P) => SymFuncJson::from(&t_graded(n).0),
            _ => return Err(CliError::Usage("unsupported target and basis combination".into())),
        })
    })?;
    Ok(json)
}

fn render_symfunc(json: &SymFuncJson, format: Format) -> Result<String, CliError> {
    let symbol = if json.basis == "v" { "V" } else { "p" };
    match format {
        Format::Json => pretty(json),
        Format::Text => {
            let mut out = String::new();
            for t in &json.terms {
                let coeff = match &t.value {
                    TermValue::Coeff(c) => short(c).to_string(),
                    TermValue::Poly(cs) => {
                        let parts: Vec<String> = cs
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.starts_with("0/"))
                            .map(|(k, c)| match k {
                                0 => short(c).to_string(),
                                1 => format!("{}t", short(c)),
                                _ => format!("{}t^{k}", short(c)),
                            })
                            .collect();
                        format!("({})", parts.join(" + "))
                    }
                };
                writeln!(out, "{coeff} {symbol}{}", tuple(&t.partition)).expect("write to String");
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv_writer();
            for t in &json.terms {
                match &t.value {
                    TermValue::Coeff(c) => w.serialize((spaced(&t.partition), c)).map_err(csv_err)?,
                    TermValue::Poly(cs) => {
                        for (k, c) in cs.iter().enumerate() {
                            w.serialize((spaced(&t.partition), k, c)).map_err(csv_err)?;
                        }
                    }
                }
            }
            finish_csv(w)
        }
    }
}

// count

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub what: &'static str,
    pub n: usize,
    pub count: String,
    pub expected: String,
    pub status: &'static str,
}

fn count_row(what: Family, n: usize) -> Result<CountRow, CliError> {
    let big = BigUint::from;
    let parking_total = || big(n + 1).pow(n as u32 - 1);
    let (count, expected) = match what {
        Family::Pf => (big(enumerate_pf(n).count()), parking_total()),
        Family::SortedPf => (big(enumerate_sorted_pf(n).count()), catalan(n)),
        Family::Naive => {
            let total: usize = enumerate_sorted_naive(n).map(|x| x.class_members().len()).sum();
            (big(total), (big(1) << n) * parking_total())
        }
        Family::SortedNaive => (big(enumerate_sorted_naive(n).count()), schroeder(n)),
        Family::SortedOdd => (big(enumerate_sorted_odd(n).count()), schroeder(n)),
        Family::SchroederPaths => (big(enumerate_schroeder_paths(n).len()), schroeder(n)),
        Family::Garages => {
            let by_word = enumerate_sorted_naive(n).filter(is_garage_word).count();
            (big(enumerate_garages(n).count()), big(by_word))
        }
        Family::MatchingPaths => {
            return Err(CliError::Usage("matching paths have no closed-form count; use enumerate".into()))
        }
    };
    let status = if count == expected { "PASS" } else { "FAIL" };
    Ok(CountRow { what: what.name(), n, count: count.to_string(), expected: expected.to_string(), status })
}

fn render_counts(rows: &[CountRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => pretty(&rows),
        Format::Csv => {
            let mut w = csv_writer();
            for r in rows {
                w.serialize(r).map_err(csv_err)?;
            }
            finish_csv(w)
        }
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                writeln!(out, "{} n={}: {} (expected {}) {}", r.what, r.n, r.count, r.expected, r.status)
                    .expect("write to String");
            }
            Ok(out)
        }
    }
}

// verify

#[derive(Serialize)]
struct CheckJson<'a> {
    suite: &'static str,
    claim: &'static str,
    n: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a str>,
}

impl<'a> From<&'a Check> for CheckJson<'a> {
    fn from(c: &'a Check) -> Self {
        CheckJson {
            suite: c.suite.name(),
            claim: c.claim,
            n: c.n,
            status: if c.passed() { "PASS" } else { "FAIL" },
            counterexample: c.outcome.as_ref().err().map(String::as_str),
        }
    }
}

fn render_checks(checks: &[Check], format: Format) -> Result<String, CliError> {
    let failed = checks.iter().filter(|c| !c.passed()).count();
    match format {
        Format::Json => {
            let rows: Vec<CheckJson> = checks.iter().map(CheckJson::from).collect();
            pretty(&serde_json::json!({ "passed": failed == 0, "failed": failed, "checks": rows }))
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["suite", "claim", "n", "status", "counterexample"]).map_err(csv_err)?;
            for c in checks {
                let row = CheckJson::from(c);
                let n = row.n.to_string();
                w.write_record([row.suite, row.claim, &n, row.status, row.counterexample.unwrap_or("")])
                    .map_err(csv_err)?;
            }
            finish_csv(w)
        }
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                writeln!(out, "{c}").expect("write to String");
            }
            writeln!(out, "{} checks, {failed} failed", checks.len()).expect("write to String");
            Ok(out)
        }
    }
}

// enumerate

enum Item {
    Tuple(Vec<usize>),
    Object(ObjectJson, String),
    Word(String),
}

fn enumerate(n: usize, what: Family, format: Format) -> Result<String, CliError> {
    let items: Vec<Item> = match what {
        Family::Pf => enumerate_pf(n).map(|p| Item::Tuple(p.entries().to_vec())).collect(),
        Family::SortedPf => enumerate_sorted_pf(n).map(|p| Item::Tuple(p.entries().to_vec())).collect(),
        Family::SortedNaive => {
            enumerate_sorted_naive(n).map(|x| Item::Object(ObjectJson::naive(&x), x.to_string())).collect()
        }
        Family::MatchingPaths => {
            enumerate_sorted_naive(n).map(|x| Item::Object(ObjectJson::with_path(&x), x.to_string())).collect()
        }
        Family::Garages => enumerate_garages(n).map(|g| Item::Object(ObjectJson::garage(&g), g.to_string())).collect(),
        Family::SortedOdd => {
            enumerate_sorted_odd(n).map(|y| Item::Object(ObjectJson::odd(&y), y.to_string())).collect()
        }
        Family::SchroederPaths => enumerate_schroeder_paths(n).into_iter().map(|p| Item::Word(p.to_string())).collect(),
        Family::Naive => return Err(CliError::Usage("enumerate lists sorted objects; use sorted-naive".into())),
    };
    match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = items
                .iter()
                .map(|item| match item {
                    Item::Tuple(p) => serde_json::to_value(p),
                    Item::Object(o, _) => serde_json::to_value(o),
                    Item::Word(w) => serde_json::to_value(w),
                })
                .collect::<Result<_, _>>()?;
            pretty(&values)
        }
        Format::Text => {
            let mut out = String::new();
            for item in &items {
                match item {
                    Item::Tuple(p) => writeln!(out, "{}", tuple(p)),
                    Item::Object(o, shown) => match &o.path {
                        Some(path) => writeln!(out, "{shown} {path}"),
                        None => writeln!(out, "{shown}"),
                    },
                    Item::Word(w) => writeln!(out, "{w}"),
                }
                .expect("write to String");
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv_writer();
            for item in &items {
                match item {
                    Item::Tuple(p) => w.write_record([spaced(p)]),
                    Item::Word(s) => w.write_record([s]),
                    Item::Object(o, _) => {
                        let tau = o
                            .tau
                            .as_ref()
                            .map(|arcs| arcs.iter().map(|[i, k]| format!("{i}-{k}")).collect::<Vec<_>>().join(" "));
                        let mut record = vec![spaced(&o.p), spaced(&o.sbar)];
                        record.extend(tau);
                        record.extend(o.path.clone());
                        w.write_record(&record)
                    }
                }
                .map_err(csv_err)?;
            }
            finish_csv(w)
        }
    }
}

// character

pub fn character(n: usize, which: CharacterKind, cache: &Cache) -> Result<ClassFunctionJson, CliError> {
    let key = CacheKey::new(format!("character/{}", which.name()), n);
    let (json, _) = cache.get_or_compute(&key, || -> Result<ClassFunctionJson, CliError> {
        let chi: ClassFunction = match which {
            CharacterKind::Pf => pf_character(n),
            CharacterKind::Exterior => exterior_character(n),
            CharacterKind::Naive => naive_character(n),
            CharacterKind::NaiveTraces => naive_character_by_traces(n),
            CharacterKind::Clifford => clifford_character(n)?,
            CharacterKind::SpinNaive => spin_naive_character(n)?,
        };
        Ok(ClassFunctionJson::from(&chi))
    })?;
    Ok(json)
}

fn render_class_function(json: &ClassFunctionJson, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => pretty(json),
        Format::Text => {
            let mut out = String::new();
            for entry in &json.values {
                let value = match &entry.value {
                    ClassValueJson::Ordinary(v) => short(v).to_string(),
                    ClassValueJson::Spin([a, b]) => format!("{} + {}·√2", short(a), short(b)),
                };
                writeln!(out, "{} {value}", tuple(&entry.cycle_type)).expect("write to String");
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv_writer();
            for entry in &json.values {
                let cycle_type = spaced(&entry.cycle_type);
                match &entry.value {
                    ClassValueJson::Ordinary(v) => w.write_record([&cycle_type, v]),
                    ClassValueJson::Spin([a, b]) => w.write_record([&cycle_type, a, b]),
                }
                .map_err(csv_err)?;
            }
            finish_csv(w)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use shpf_core::verify::Suite;

    #[test]
    fn failed_checks_carry_the_counterexample() {
        let checks = [
            Check { suite: Suite::Combinatorics, claim: "a", n: 1, outcome: Ok(()) },
            Check { suite: Suite::Combinatorics, claim: "b", n: 2, outcome: Err("((1,1),(1,0))".into()) },
        ];
        let json: serde_json::Value = serde_json::from_str(&render_checks(&checks, Format::Json).unwrap()).unwrap();
        assert_eq!(json["passed"], false);
        assert_eq!(json["failed"], 1);
        assert!(json["checks"][0].get("counterexample").is_none());
        assert_eq!(json["checks"][1]["counterexample"], "((1,1),(1,0))");
        let text = render_checks(&checks, Format::Text).unwrap();
        assert!(text.ends_with("2 checks, 1 failed\n"));
        let csv = render_checks(&checks, Format::Csv).unwrap();
        assert!(csv.contains("combinatorics,b,2,FAIL,\"((1,1),(1,0))\""));
    }
}
