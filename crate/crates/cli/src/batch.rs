//! Batch files: one command per line, `#` comments, shell-style quoting.
//!
//! A line may end in expectations that are checked against the result:
//!
//! ```text
//! verify "(x, x*y)" "(2*x, x*y)" expect=faithful growth=linear,linear,bounded
//! commutator "(x+y^2, y+1)" "(x+y, y)" result="(x - 1, y)"
//! degseq "(x, x*y)" --n 5 degrees="2 3 4 5 6"
//! claim-solve --mu 3+2*x --lambda2 2 --max-deg 4 dimension=1
//! ```

use std::path::Path;

use clap::Parser;
use cremona::dynamics::GrowthClass;
use cremona::io::parse_map;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{class_name, execute, Outcome};
use crate::config::{Format, Settings};
use crate::{Cli, Command, Status};

const EXPECTATION_KEYS: &[&str] = &["expect", "growth", "result", "degrees", "dimension"];

#[derive(Debug, Serialize)]
struct LineResult {
    line: usize,
    input: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    mismatches: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<serde_json::Value>,
    #[serde(skip)]
    summary: String,
    #[serde(skip)]
    severity: Status,
}

fn parse_class(s: &str) -> Option<GrowthClass> {
    Some(match s.to_ascii_lowercase().as_str() {
        "bounded" | "elliptic" => GrowthClass::Bounded,
        "linear" | "twist" | "jonquieres" => GrowthClass::Linear,
        "quadratic" | "halphen" => GrowthClass::Quadratic,
        "exponential" | "hyperbolic" => GrowthClass::Exponential,
        "indeterminate" => GrowthClass::Indeterminate,
        _ => return None,
    })
}

/// Split trailing `key=value` expectations off a tokenized line.
fn split_expectations(mut words: Vec<String>) -> (Vec<String>, Vec<(String, String)>) {
    let mut expects = Vec::new();
    while let Some(last) = words.last() {
        match last.split_once('=') {
            Some((k, v)) if EXPECTATION_KEYS.contains(&k) => {
                expects.push((k.to_string(), v.to_string()));
                words.pop();
            }
            _ => break,
        }
    }
    expects.reverse();
    (words, expects)
}

fn check(out: &Outcome, key: &str, want: &str) -> Result<(), String> {
    let f = &out.facts;
    let missing = || format!("{key}: not reported by this command");
    match key {
        "expect" => {
            let want_faithful = match want {
                "faithful" => true,
                "unfaithful" => false,
                _ => return Err(format!("expect: unknown value `{want}` (faithful|unfaithful)")),
            };
            let got = f.faithful.ok_or_else(missing)?;
            if got != want_faithful {
                let got = if got { "faithful" } else { "unfaithful" };
                return Err(format!("expected {want}, got {got}"));
            }
        }
        "growth" => {
            let want: Vec<GrowthClass> = want
                .split(',')
                .map(|s| parse_class(s.trim()).ok_or_else(|| format!("growth: unknown class `{s}`")))
                .collect::<Result<_, _>>()?;
            if f.growth.is_empty() {
                return Err(missing());
            }
            if want != f.growth {
                let got: Vec<String> = f.growth.iter().map(|c| class_name(*c)).collect();
                let want: Vec<String> = want.iter().map(|c| class_name(*c)).collect();
                return Err(format!("expected growth {}, got {}", want.join(","), got.join(",")));
            }
        }
        "result" => {
            let want_map = parse_map(want).map_err(|e| format!("result: {e}"))?;
            let got = f.map.as_ref().ok_or_else(missing)?;
            if !got.same_map(&want_map) {
                return Err(format!("expected {want}, got {}", cremona::io::render_map(got)));
            }
        }
        "degrees" => {
            let want: Vec<u32> = want
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| format!("degrees: bad entry `{s}`")))
                .collect::<Result<_, _>>()?;
            let got = f.degrees.as_ref().ok_or_else(missing)?;
            if *got != want {
                return Err(format!("expected degrees {want:?}, got {got:?}"));
            }
        }
        "dimension" => {
            let want: usize = want.parse().map_err(|_| format!("dimension: bad value `{want}`"))?;
            let got = f.dimension.ok_or_else(missing)?;
            if got != want {
                return Err(format!("expected dimension {want}, got {got}"));
            }
        }
        _ => unreachable!("expectation keys"),
    }
    Ok(())
}

fn run_line(line: usize, text: &str, settings: &Settings) -> LineResult {
    let mut result = LineResult {
        line,
        input: text.to_string(),
        status: "error",
        mismatches: Vec::new(),
        error: None,
        report: None,
        summary: String::new(),
        severity: Status::Usage,
    };
    let words = match shlex::split(text) {
        Some(w) => w,
        None => {
            result.error = Some("unbalanced quotes".into());
            return result;
        }
    };
    let (words, expects) = split_expectations(words);
    let cli = match Cli::try_parse_from(std::iter::once("cremona".to_string()).chain(words)) {
        Ok(cli) => cli,
        Err(e) => {
            result.error = Some(e.to_string().lines().next().unwrap_or_default().to_string());
            return result;
        }
    };
    if matches!(cli.command, Command::Batch { .. }) {
        result.error = Some("batch files cannot nest".into());
        return result;
    }
    let settings = match settings.overlay(&cli.global) {
        Ok(s) => s,
        Err(e) => {
            result.error = Some(e);
            return result;
        }
    };
    match execute(&cli.command, &settings) {
        Ok(out) => {
            result.mismatches = expects
                .iter()
                .filter_map(|(k, v)| check(&out, k, v).err())
                .collect();
            result.severity = if result.mismatches.is_empty() { out.status } else { Status::Negative };
            result.status = if result.severity == Status::Ok { "ok" } else { "fail" };
            result.report = Some(serde_json::to_value(&out.doc).expect("documents serialize"));
            result.summary = out.summary;
        }
        Err(e) => {
            result.severity = e.status();
            result.status = if e.status() == Status::Usage { "error" } else { "fail" };
            result.error = Some(e.to_string());
        }
    }
    result
}

pub fn run(path: &Path, settings: &Settings) -> Status {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return Status::Usage;
        }
    };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let work = || -> Vec<LineResult> {
        lines
            .par_iter()
            .map(|(n, l)| run_line(*n, l, settings))
            .collect()
    };
    let results = match settings.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(work),
            Err(e) => {
                eprintln!("error: cannot start {j} workers: {e}");
                return Status::Usage;
            }
        },
        None => work(),
    };
    match settings.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&results).expect("results serialize")),
        Format::Human => {
            for r in &results {
                let detail = r.error.as_deref().unwrap_or(&r.summary);
                println!("{}: {} {}", r.line, r.status, detail);
                for m in &r.mismatches {
                    println!("    {m}");
                }
            }
            let failed = results.iter().filter(|r| r.severity != Status::Ok).count();
            println!("{} lines, {} ok, {} not ok", results.len(), results.len() - failed, failed);
        }
    }
    results.iter().map(|r| r.severity).max().unwrap_or(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expectations_come_off_the_end() {
        let words = shlex::split(r#"family torus1 delta=1 gamma=2 s=1 a=x --verify expect=faithful growth=linear,linear,bounded"#)
            .unwrap();
        let (rest, exp) = split_expectations(words);
        assert_eq!(rest.last().unwrap(), "--verify");
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[1].1, "linear,linear,bounded");
    }

    #[test]
    fn line_outcomes() {
        let s = Settings::default();
        let ok = run_line(1, r#"commutator "(x, x*y)" "(2*x, x*y)" result="(x, 2*y)""#, &s);
        assert_eq!(ok.status, "ok", "{ok:?}");
        let bad = run_line(2, r#"commutator "(x, x*y)" "(2*x, x*y)" result="(x, 3*y)""#, &s);
        assert_eq!(bad.severity, Status::Negative);
        let err = run_line(3, r#"commutator "(x, x*" "(2*x, x*y)""#, &s);
        assert_eq!(err.severity, Status::Usage);
        assert!(err.error.unwrap().contains("column"));
    }
}
