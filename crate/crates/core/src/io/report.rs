//! JSON documents for reports.
//!
//! Every document carries a `kind` tag and the library version.  Field
//! order is fixed by the struct definitions, so identical inputs give
//! byte-identical output, and unknown fields are rejected on input.

use serde::{Deserialize, Serialize};

use crate::algebra::GaussRational;
use crate::dynamics::GrowthReport;
use crate::heisenberg::{ClaimSolution, Constraint, EmbeddingReport, OrderDecision};

use super::render::{render_map, render_unipoly};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum ReportDoc {
    Embedding(EmbeddingDoc),
    Growth(GrowthDoc),
    Degrees(DegreesDoc),
    Claim(ClaimDoc),
    Map(MapDoc),
    Family(FamilyDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingInput {
    pub f: String,
    pub g: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationsDoc {
    pub fh: bool,
    pub gh: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthTriple {
    pub f: GrowthReport,
    pub g: GrowthReport,
    pub h: GrowthReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintDoc {
    pub name: String,
    pub satisfied: bool,
    pub witness: Option<String>,
}

impl From<&Constraint<GaussRational>> for ConstraintDoc {
    fn from(c: &Constraint<GaussRational>) -> Self {
        ConstraintDoc {
            name: c.name.clone(),
            satisfied: c.satisfied,
            witness: c.witness.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDoc {
    pub input: EmbeddingInput,
    pub h: String,
    pub relations: RelationsDoc,
    pub h_is_identity: bool,
    pub h_infinite_order: OrderDecision,
    pub faithful: bool,
    pub growth: GrowthTriple,
    pub constraints: Vec<ConstraintDoc>,
    pub failures: Vec<String>,
    pub version: String,
}

impl EmbeddingDoc {
    pub fn new(input: EmbeddingInput, r: &EmbeddingReport<GaussRational>) -> Self {
        EmbeddingDoc {
            input,
            h: render_map(&r.h),
            relations: RelationsDoc {
                fh: r.fh_commutes,
                gh: r.gh_commutes,
            },
            h_is_identity: r.h_is_identity,
            h_infinite_order: r.h_infinite_order.clone(),
            faithful: r.faithful,
            growth: GrowthTriple {
                f: r.growth_f.clone(),
                g: r.growth_g.clone(),
                h: r.growth_h.clone(),
            },
            constraints: r.constraints.iter().map(ConstraintDoc::from).collect(),
            failures: r.failures.clone(),
            version: VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthDoc {
    pub input: String,
    pub growth: GrowthReport,
    pub map_type: String,
    pub version: String,
}

impl GrowthDoc {
    pub fn new(input: String, growth: GrowthReport) -> Self {
        GrowthDoc {
            input,
            map_type: growth.class.map_type().to_string(),
            growth,
            version: VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreesDoc {
    pub input: String,
    pub degrees: Vec<u32>,
    pub truncated: bool,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimInput {
    pub mu: String,
    pub lambda2: String,
    pub max_deg: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimDoc {
    pub input: ClaimInput,
    pub basis: Vec<String>,
    pub dimension: usize,
    pub max_degree_searched: usize,
    pub version: String,
}

impl ClaimDoc {
    pub fn new(input: ClaimInput, sol: &ClaimSolution<GaussRational>) -> Self {
        ClaimDoc {
            input,
            basis: sol.basis.iter().map(|p| render_unipoly(p, "x")).collect(),
            dimension: sol.dimension,
            max_degree_searched: sol.max_degree_searched,
            version: VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub op: String,
    pub inputs: Vec<String>,
    pub result: String,
    pub degree: u32,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub spec: String,
    pub f: String,
    pub g: String,
    pub constraints: Vec<ConstraintDoc>,
    pub commutator_constant: Option<String>,
    pub version: String,
}

/// A document that does not match the schema, with the path of the
/// offending field.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("schema violation at `{path}`: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

pub fn to_json(doc: &ReportDoc) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

/// Parse a document.  The `kind` tag is resolved first so that schema
/// errors inside the document report the full field path.
pub fn from_json(text: &str) -> Result<ReportDoc, SchemaError> {
    let mut value: serde_json::Value = serde_json::from_str(text).map_err(|e| SchemaError {
        path: ".".into(),
        message: e.to_string(),
    })?;
    let kind = value
        .as_object_mut()
        .and_then(|o| o.remove("kind"))
        .ok_or_else(|| SchemaError {
            path: "kind".into(),
            message: "missing document kind".into(),
        })?;
    fn inner<T: serde::de::DeserializeOwned>(v: serde_json::Value) -> Result<T, SchemaError> {
        serde_path_to_error::deserialize(v).map_err(|e| SchemaError {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }
    match kind.as_str() {
        Some("embedding") => inner(value).map(ReportDoc::Embedding),
        Some("growth") => inner(value).map(ReportDoc::Growth),
        Some("degrees") => inner(value).map(ReportDoc::Degrees),
        Some("claim") => inner(value).map(ReportDoc::Claim),
        Some("map") => inner(value).map(ReportDoc::Map),
        Some("family") => inner(value).map(ReportDoc::Family),
        _ => Err(SchemaError {
            path: "kind".into(),
            message: format!("unknown document kind {kind}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{verify_embedding, VerifyOptions};
    use crate::io::parse_map;

    fn embedding_doc() -> ReportDoc {
        let f = parse_map("(x, x*y)").unwrap();
        let g = parse_map("(2*x, x*y)").unwrap();
        let r = verify_embedding(&f, &g, &VerifyOptions::default()).unwrap();
        let input = EmbeddingInput {
            f: "(x, x*y)".into(),
            g: "(2*x, x*y)".into(),
            family: None,
        };
        ReportDoc::Embedding(EmbeddingDoc::new(input, &r))
    }

    #[test]
    fn embedding_json() {
        let doc = embedding_doc();
        let text = to_json(&doc);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["h"], "(x, 2*y)");
        assert_eq!(v["faithful"], true);
        assert_eq!(v["kind"], "embedding");
        assert_eq!(v["relations"]["fh"], true);
        assert_eq!(v["h_infinite_order"]["method"], "diagonal");
        assert_eq!(from_json(&text).unwrap(), doc);
        assert_eq!(to_json(&embedding_doc()), text);
    }

    #[test]
    fn float_estimates_round_trip() {
        let seq = [2, 5, 12, 29, 70, 169, 408, 985];
        let growth = crate::dynamics::classify_growth(&seq).unwrap();
        let doc = ReportDoc::Growth(GrowthDoc::new("pell".into(), growth));
        let text = to_json(&doc);
        assert_eq!(from_json(&text).unwrap(), doc);
    }

    #[test]
    fn unknown_fields_are_rejected_with_a_path() {
        let mut v: serde_json::Value = serde_json::from_str(&to_json(&embedding_doc())).unwrap();
        v["relations"]["fg"] = true.into();
        let err = from_json(&v.to_string()).unwrap_err();
        assert!(err.path.contains("relations"), "{err}");
        assert!(err.message.contains("fg"), "{err}");
    }
}
