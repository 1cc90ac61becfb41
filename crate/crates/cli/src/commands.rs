//! Single-command execution, shared by the direct and batch paths.

use std::fmt::Write as _;

use cremona::dynamics::{degree_sequence, growth_report, GrowthClass, GrowthReport, Thresholds};
use cremona::dynamics::{DEFAULT_N_MAX, DEFAULT_N_MAX_JONQ};
use cremona::heisenberg::{
    build_family, check_family_constraints, claim_solve, commutator_constant, verify_embedding, HeisenbergError,
    VerifyOptions,
};
use cremona::io::{
    parse_family_args, parse_map, parse_ratfunc, parse_scalar, render_family, render_map, to_json, ClaimDoc,
    ClaimInput, ConstraintDoc, DegreesDoc, EmbeddingDoc, EmbeddingInput, FamilyDoc, GrowthDoc, MapDoc, ReportDoc,
    VERSION,
};
use cremona::{BirMap, EmbeddingReport, Mobius};

use crate::config::{Format, Settings};
use crate::{Command, Status};

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    /// Bad input: syntax, unknown names, out-of-domain parameters.
    #[error("{0}")]
    Usage(String),
    /// The computation itself failed, e.g. a cap was hit.
    #[error("{0}")]
    Math(String),
}

impl CmdError {
    pub fn status(&self) -> Status {
        match self {
            CmdError::Usage(_) => Status::Usage,
            CmdError::Math(_) => Status::Negative,
        }
    }
}

fn math(e: impl std::fmt::Display) -> CmdError {
    CmdError::Math(e.to_string())
}

fn heis(e: HeisenbergError) -> CmdError {
    match e {
        HeisenbergError::Domain(_) | HeisenbergError::NotAffine => CmdError::Usage(e.to_string()),
        e => math(e),
    }
}

/// What a command established, for batch expectations.
#[derive(Clone, Debug, Default)]
pub struct Facts {
    pub map: Option<BirMap>,
    pub degrees: Option<Vec<u32>>,
    pub growth: Vec<GrowthClass>,
    pub faithful: Option<bool>,
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub human: String,
    /// One-line summary used by batch output.
    pub summary: String,
    pub doc: ReportDoc,
    pub status: Status,
    pub facts: Facts,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human.trim_end().to_string(),
            Format::Json => to_json(&self.doc),
        }
    }
}

fn resolve_map(text: &str, settings: &Settings) -> Result<BirMap, CmdError> {
    if let Some(m) = settings.maps.iter().find(|m| m.name == text) {
        return Ok(m.map.clone());
    }
    parse_map(text).map_err(|e| CmdError::Usage(format!("cannot parse map `{text}`: {e}")))
}

fn default_depth(f: &BirMap, settings: &Settings) -> usize {
    settings.n_max.unwrap_or(match f {
        BirMap::Jonq(_) => DEFAULT_N_MAX_JONQ,
        BirMap::Proj(_) => DEFAULT_N_MAX,
    })
}

pub fn class_name(c: GrowthClass) -> String {
    c.to_string().to_lowercase()
}

fn growth_line(r: &GrowthReport) -> String {
    let mut s = format!("{} ({})", class_name(r.class), r.class.map_type());
    if r.truncated {
        s.push_str(", truncated by caps");
    }
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn map_outcome(op: &str, inputs: &[&String], result: BirMap) -> Outcome {
    let text = render_map(&result);
    Outcome {
        human: text.clone(),
        summary: text.clone(),
        doc: ReportDoc::Map(MapDoc {
            op: op.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            degree: result.degree(),
            result: text,
            version: VERSION.to_string(),
        }),
        status: Status::Ok,
        facts: Facts {
            map: Some(result),
            ..Facts::default()
        },
    }
}

fn verify_opts(settings: &Settings) -> VerifyOptions {
    VerifyOptions {
        n_max: settings.n_max,
        caps: settings.caps,
        thresholds: Thresholds::default(),
        relation_bound: settings.relation_bound,
    }
}

fn embedding_outcome(input: EmbeddingInput, r: &EmbeddingReport, strict: bool, prefix: String) -> Outcome {
    let mut human = prefix;
    let _ = writeln!(human, "h = {}", render_map(&r.h));
    let _ = writeln!(human, "[f,h] = id: {}", yes(r.fh_commutes));
    let _ = writeln!(human, "[g,h] = id: {}", yes(r.gh_commutes));
    let order = &r.h_infinite_order;
    let method = serde_json::to_value(order.method).expect("method serializes");
    let _ = writeln!(
        human,
        "h has infinite order: {} (by {})",
        yes(order.value),
        method.as_str().unwrap_or_default()
    );
    let _ = writeln!(human, "growth of f: {}", growth_line(&r.growth_f));
    let _ = writeln!(human, "growth of g: {}", growth_line(&r.growth_g));
    let _ = writeln!(human, "growth of h: {}", growth_line(&r.growth_h));
    for c in &r.constraints {
        let _ = writeln!(human, "constraint {}: {}", c.name, if c.satisfied { "holds" } else { "violated" });
    }
    for f in &r.failures {
        let _ = writeln!(human, "failure: {f}");
    }
    let _ = writeln!(human, "faithful: {}", yes(r.faithful));
    let classes = [r.growth_f.class, r.growth_g.class, r.growth_h.class];
    let summary = format!(
        "faithful={} h={} growth={}",
        r.faithful,
        render_map(&r.h),
        classes.map(class_name).join(",")
    );
    Outcome {
        human,
        summary,
        doc: ReportDoc::Embedding(EmbeddingDoc::new(input, r)),
        status: if strict && !r.faithful { Status::Negative } else { Status::Ok },
        facts: Facts {
            map: Some(r.h.clone()),
            growth: classes.to_vec(),
            faithful: Some(r.faithful),
            ..Facts::default()
        },
    }
}

pub fn execute(command: &Command, settings: &Settings) -> Result<Outcome, CmdError> {
    match command {
        Command::Compose { a, b } => {
            let (f, g) = (resolve_map(a, settings)?, resolve_map(b, settings)?);
            Ok(map_outcome("compose", &[a, b], f.compose(&g).map_err(math)?))
        }
        Command::Invert { a } => {
            let f = resolve_map(a, settings)?;
            Ok(map_outcome("invert", &[a], f.inverse().map_err(math)?))
        }
        Command::Commutator { a, b } => {
            let (f, g) = (resolve_map(a, settings)?, resolve_map(b, settings)?);
            let h = cremona::birmap::commutator(&f, &g).map_err(math)?;
            Ok(map_outcome("commutator", &[a, b], h))
        }
        Command::Degseq { a, n } => {
            let f = resolve_map(a, settings)?;
            let n = n.unwrap_or_else(|| default_depth(&f, settings));
            if n == 0 {
                return Err(CmdError::Usage("--n must be positive".into()));
            }
            let seq = degree_sequence(&f, n, &settings.caps).map_err(math)?;
            let line = seq.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let mut human = line.clone();
            if seq.truncated {
                let _ = write!(human, "\ntruncated after {} iterates by caps", seq.degrees.len());
            }
            Ok(Outcome {
                human,
                summary: line,
                doc: ReportDoc::Degrees(DegreesDoc {
                    input: a.clone(),
                    degrees: seq.degrees.clone(),
                    truncated: seq.truncated,
                    version: VERSION.to_string(),
                }),
                status: Status::Ok,
                facts: Facts {
                    degrees: Some(seq.degrees),
                    ..Facts::default()
                },
            })
        }
        Command::Classify { a, n } => {
            let f = resolve_map(a, settings)?;
            let n = n.unwrap_or_else(|| default_depth(&f, settings));
            let r = growth_report(&f, n, &settings.caps, &Thresholds::default()).map_err(math)?;
            let mut human = format!("class: {}\n", growth_line(&r));
            let degrees = r.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            let _ = writeln!(human, "degrees: {degrees}");
            if let Some(l) = r.dyn_degree_estimate {
                let _ = writeln!(human, "dynamical degree ≈ {l:.6}");
            }
            if let Some(c) = r.growth_constant_estimate {
                let _ = writeln!(human, "growth constant ≈ {c:.6}");
            }
            Ok(Outcome {
                human,
                summary: class_name(r.class),
                status: Status::Ok,
                facts: Facts {
                    degrees: Some(r.degrees.clone()),
                    growth: vec![r.class],
                    ..Facts::default()
                },
                doc: ReportDoc::Growth(GrowthDoc::new(a.clone(), r)),
            })
        }
        Command::Verify { a, b, strict } => {
            let (f, g) = (resolve_map(a, settings)?, resolve_map(b, settings)?);
            let r = verify_embedding(&f, &g, &verify_opts(settings)).map_err(heis)?;
            let input = EmbeddingInput {
                f: a.clone(),
                g: b.clone(),
                family: None,
            };
            Ok(embedding_outcome(input, &r, *strict, String::new()))
        }
        Command::Family {
            variant,
            params,
            verify,
            strict,
        } => {
            let spec = parse_family_args(variant, params).map_err(|e| CmdError::Usage(e.to_string()))?;
            spec.validate().map_err(heis)?;
            let (f, g) = build_family(&spec).map_err(heis)?;
            let (ft, gt) = (render_map(&f), render_map(&g));
            let spec_text = render_family(&spec);
            let constraints = check_family_constraints(&spec);
            let kappa = commutator_constant(&spec).ok();
            let mut human = format!("f = {ft}\ng = {gt}\n");
            if let Some(k) = &kappa {
                let _ = writeln!(human, "commutator constant: {k}");
            }
            if *verify {
                let mut r = verify_embedding(&f, &g, &verify_opts(settings)).map_err(heis)?;
                for c in constraints.iter().filter(|c| !c.satisfied) {
                    r.failures.push(format!("constraint violated: {}", c.name));
                }
                r.constraints = constraints;
                let input = EmbeddingInput {
                    f: ft,
                    g: gt,
                    family: Some(spec_text),
                };
                return Ok(embedding_outcome(input, &r, *strict, human));
            }
            for c in &constraints {
                let _ = writeln!(human, "constraint {}: {}", c.name, if c.satisfied { "holds" } else { "violated" });
            }
            Ok(Outcome {
                summary: format!("f={ft} g={gt}"),
                human,
                doc: ReportDoc::Family(FamilyDoc {
                    spec: spec_text,
                    f: ft,
                    g: gt,
                    constraints: constraints.iter().map(ConstraintDoc::from).collect(),
                    commutator_constant: kappa.map(|k| k.to_string()),
                    version: VERSION.to_string(),
                }),
                status: Status::Ok,
                facts: Facts::default(),
            })
        }
        Command::ClaimSolve { mu, lambda2, max_deg } => {
            let usage = |e: &dyn std::fmt::Display| CmdError::Usage(e.to_string());
            let r = parse_ratfunc(mu, "x").map_err(|e| usage(&format!("--mu: {e}")))?;
            let m = Mobius::from_ratfunc(&r)
                .ok_or_else(|| usage(&format!("--mu: `{mu}` is not a Möbius transformation of x")))?;
            let l2 = parse_scalar(lambda2).map_err(|e| usage(&format!("--lambda2: {e}")))?;
            let sol = claim_solve(&m, &l2, *max_deg).map_err(heis)?;
            let doc = ClaimDoc::new(
                ClaimInput {
                    mu: mu.clone(),
                    lambda2: lambda2.clone(),
                    max_deg: *max_deg,
                },
                &sol,
            );
            let mut human = format!("dimension: {}\n", doc.dimension);
            for p in &doc.basis {
                let _ = writeln!(human, "basis: {p}");
            }
            Ok(Outcome {
                summary: format!("dimension={} basis=[{}]", doc.dimension, doc.basis.join(", ")),
                human,
                status: Status::Ok,
                facts: Facts {
                    dimension: Some(doc.dimension),
                    ..Facts::default()
                },
                doc: ReportDoc::Claim(doc),
            })
        }
        Command::Batch { .. } => Err(CmdError::Usage("batch files cannot nest".into())),
    }
}
