//! `.maps` files: one `name = <map>` per line, `#` starts a comment.

use crate::algebra::GaussRational;
use crate::birmap::BirMap;

use super::{parse_map, IoError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub text: String,
    pub map: BirMap<GaussRational>,
    pub line: usize,
}

/// Parse a `.maps` document.  Errors are prefixed with their line number.
pub fn parse_maps_file(text: &str) -> Result<Vec<NamedMap>, IoError> {
    let mut out: Vec<NamedMap> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (name, body) = content
            .split_once('=')
            .ok_or_else(|| IoError::Value(format!("line {line}: expected `name = <map>`")))?;
        let name = name.trim();
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(IoError::Value(format!("line {line}: bad map name `{name}`")));
        }
        if out.iter().any(|m| m.name == name) {
            return Err(IoError::Value(format!("line {line}: duplicate map name `{name}`")));
        }
        let body = body.trim();
        let map = parse_map(body).map_err(|e| match e {
            IoError::Parse(mut p) => {
                // positions are relative to the map text on that line
                p.line = line;
                IoError::Parse(p)
            }
            other => IoError::Value(format!("line {line}: {other}")),
        })?;
        out.push(NamedMap {
            name: name.to_string(),
            text: body.to_string(),
            map,
            line,
        });
    }
    Ok(out)
}
