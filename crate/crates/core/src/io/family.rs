//! `family <variant> key=value ...` text for family specifications.

use std::collections::BTreeMap;

use crate::algebra::{GaussRational, RatFunc, UniPoly};
use crate::heisenberg::FamilySpec;

use super::render::{render_ratfunc, render_unipoly};
use super::{parse_ratfunc, parse_scalar, parse_unipoly, IoError};

/// Variant names with their keys, in canonical order.  `P`, `Q` are
/// polynomials in `y`; `a`, `b`, `c`, `d` are rational functions in `x`
/// for the torus-type variants; everything else is a constant.
pub const FAMILY_VARIANTS: &[(&str, &[&str])] = &[
    ("pgl3", &["alpha", "beta", "gamma", "delta"]),
    ("elema", &["a", "alpha", "c", "gamma", "P", "Q"]),
    ("elemb", &["a", "alpha", "b", "beta", "gamma", "P", "Q"]),
    ("torus1", &["delta", "gamma", "s", "a"]),
    ("torus2", &["delta", "gamma", "s", "a"]),
    ("order2", &["delta", "gamma", "s", "b"]),
    ("torusgen", &["lambda", "delta", "c", "d"]),
];

struct Values<'a> {
    map: BTreeMap<&'a str, &'a str>,
}

impl Values<'_> {
    fn raw(&self, key: &str) -> &str {
        self.map[key]
    }

    fn scalar(&self, key: &str) -> Result<GaussRational, IoError> {
        parse_scalar(self.raw(key)).map_err(|e| IoError::Value(format!("{key}: {e}")))
    }

    fn ratfunc(&self, key: &str) -> Result<RatFunc<GaussRational>, IoError> {
        parse_ratfunc(self.raw(key), "x").map_err(|e| IoError::Value(format!("{key}: {e}")))
    }

    fn poly_y(&self, key: &str) -> Result<UniPoly<GaussRational>, IoError> {
        parse_unipoly(self.raw(key), "y").map_err(|e| IoError::Value(format!("{key}: {e}")))
    }

    fn sign(&self, key: &str) -> Result<i32, IoError> {
        match self.raw(key) {
            "1" | "+1" => Ok(1),
            "-1" => Ok(-1),
            other => Err(IoError::Value(format!("{key}: expected +1 or -1, got `{other}`"))),
        }
    }
}

/// Parse a variant name and its `key=value` arguments.
pub fn parse_family_args<S: AsRef<str>>(variant: &str, args: &[S]) -> Result<FamilySpec<GaussRational>, IoError> {
    let (name, keys) = FAMILY_VARIANTS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(variant))
        .ok_or_else(|| {
            let names: Vec<&str> = FAMILY_VARIANTS.iter().map(|(n, _)| *n).collect();
            IoError::Value(format!("unknown family `{variant}`; expected one of {}", names.join(", ")))
        })?;
    let mut map = BTreeMap::new();
    for arg in args {
        let arg = arg.as_ref();
        let (k, v) = arg
            .split_once('=')
            .ok_or_else(|| IoError::Value(format!("expected key=value, got `{arg}`")))?;
        let key = keys
            .iter()
            .find(|key| **key == k || (matches!(**key, "P" | "Q") && key.eq_ignore_ascii_case(k)))
            .ok_or_else(|| IoError::Value(format!("unknown key \"{k}\" for family {name}")))?;
        if map.insert(*key, v).is_some() {
            return Err(IoError::Value(format!("duplicate key \"{k}\"")));
        }
    }
    if let Some(missing) = keys.iter().find(|k| !map.contains_key(*k)) {
        return Err(IoError::Value(format!("missing key \"{missing}\" for family {name}")));
    }
    let v = Values { map };
    Ok(match *name {
        "pgl3" => FamilySpec::Pgl3 {
            alpha: v.scalar("alpha")?,
            beta: v.scalar("beta")?,
            gamma: v.scalar("gamma")?,
            delta: v.scalar("delta")?,
        },
        "elema" => FamilySpec::ElemA {
            a: v.scalar("a")?,
            alpha: v.scalar("alpha")?,
            c: v.scalar("c")?,
            gamma: v.scalar("gamma")?,
            p: v.poly_y("P")?,
            q: v.poly_y("Q")?,
        },
        "elemb" => FamilySpec::ElemB {
            a: v.scalar("a")?,
            alpha: v.scalar("alpha")?,
            b: v.scalar("b")?,
            beta: v.scalar("beta")?,
            gamma: v.scalar("gamma")?,
            p: v.poly_y("P")?,
            q: v.poly_y("Q")?,
        },
        "torus1" | "torus2" => {
            let (delta, gamma, s, a) = (v.scalar("delta")?, v.scalar("gamma")?, v.sign("s")?, v.ratfunc("a")?);
            if *name == "torus1" {
                FamilySpec::TorusPm1 { delta, gamma, s, a }
            } else {
                FamilySpec::TorusPm2 { delta, gamma, s, a }
            }
        }
        "order2" => FamilySpec::Order2 {
            delta: v.scalar("delta")?,
            gamma: v.scalar("gamma")?,
            s: v.sign("s")?,
            b: v.ratfunc("b")?,
        },
        "torusgen" => FamilySpec::TorusGen {
            lambda: v.scalar("lambda")?,
            delta: v.scalar("delta")?,
            c: v.ratfunc("c")?,
            d: v.ratfunc("d")?,
        },
        _ => unreachable!("variant table"),
    })
}

/// Parse `family <variant> key=value ...`; values containing spaces are
/// quoted shell-style, e.g. `a="x + 1"`.
pub fn parse_family(text: &str) -> Result<FamilySpec<GaussRational>, IoError> {
    let words = shlex::split(text).ok_or_else(|| IoError::Value("unbalanced quotes".into()))?;
    let mut words = words.iter().map(String::as_str);
    if words.next() != Some("family") {
        return Err(IoError::Value("expected `family <variant> key=value ...`".into()));
    }
    let variant = words.next().ok_or_else(|| IoError::Value("missing family variant".into()))?;
    let rest: Vec<&str> = words.collect();
    parse_family_args(variant, &rest)
}

/// Canonical text for a family specification, accepted by [`parse_family`].
pub fn render_family(spec: &FamilySpec<GaussRational>) -> String {
    let s = |v: &GaussRational| v.to_string();
    let sign = |v: i32| if v > 0 { "+1".to_string() } else { "-1".to_string() };
    let fields: Vec<(&str, String)> = match spec {
        FamilySpec::Pgl3 { alpha, beta, gamma, delta } => {
            vec![("alpha", s(alpha)), ("beta", s(beta)), ("gamma", s(gamma)), ("delta", s(delta))]
        }
        FamilySpec::ElemA { a, alpha, c, gamma, p, q } => vec![
            ("a", s(a)),
            ("alpha", s(alpha)),
            ("c", s(c)),
            ("gamma", s(gamma)),
            ("P", render_unipoly(p, "y")),
            ("Q", render_unipoly(q, "y")),
        ],
        FamilySpec::ElemB { a, alpha, b, beta, gamma, p, q } => vec![
            ("a", s(a)),
            ("alpha", s(alpha)),
            ("b", s(b)),
            ("beta", s(beta)),
            ("gamma", s(gamma)),
            ("P", render_unipoly(p, "y")),
            ("Q", render_unipoly(q, "y")),
        ],
        FamilySpec::TorusPm1 { delta, gamma, s: e, a } | FamilySpec::TorusPm2 { delta, gamma, s: e, a } => vec![
            ("delta", s(delta)),
            ("gamma", s(gamma)),
            ("s", sign(*e)),
            ("a", render_ratfunc(a, "x")),
        ],
        FamilySpec::Order2 { delta, gamma, s: e, b } => vec![
            ("delta", s(delta)),
            ("gamma", s(gamma)),
            ("s", sign(*e)),
            ("b", render_ratfunc(b, "x")),
        ],
        FamilySpec::TorusGen { lambda, delta, c, d } => vec![
            ("lambda", s(lambda)),
            ("delta", s(delta)),
            ("c", render_ratfunc(c, "x")),
            ("d", render_ratfunc(d, "x")),
        ],
    };
    let mut out = format!("family {}", spec.variant_name());
    for (k, v) in fields {
        out.push(' ');
        if v.chars().all(|c| c.is_ascii_alphanumeric() || "+-*/^()._".contains(c)) {
            out.push_str(&format!("{k}={v}"));
        } else {
            out.push_str(&format!("{k}='{v}'"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GaussRational;

    #[test]
    fn torus_spec() {
        let spec = parse_family("family torus1 delta=1 gamma=2 s=+1 a=x").unwrap();
        assert_eq!(
            spec,
            FamilySpec::TorusPm1 { delta: G::from(1), gamma: G::from(2), s: 1, a: RatFunc::x() }
        );
        assert_eq!(render_family(&spec), "family torus1 delta=1 gamma=2 s=+1 a=x");
    }

    #[test]
    fn unknown_and_missing_keys() {
        let err = parse_family("family torus1 beta=1").unwrap_err().to_string();
        assert!(err.contains("\"beta\""), "{err}");
        let err = parse_family("family torus1 delta=1 gamma=2 s=1").unwrap_err().to_string();
        assert!(err.contains("\"a\""), "{err}");
        assert!(parse_family("family nope a=1").is_err());
        assert!(parse_family("family torus1 delta=1 gamma=2 s=3 a=x").is_err());
    }

    #[test]
    fn quoted_values_round_trip() {
        let text = "family elemb a=1 alpha=2 b=3 beta=-1 gamma=1/2 P='y^2 + 1' Q=y";
        let spec = parse_family(text).unwrap();
        let again = parse_family(&render_family(&spec)).unwrap();
        assert_eq!(spec, again);
        assert!(render_family(&spec).contains("P='y^2 + 1'"));
    }
}
