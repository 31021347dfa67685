//! Line-oriented group files.
//!
//! One JSON object per line:
//!
//! ```text
//! # Sym(3)
//! {"name": "sym3", "degree": 3, "order": 6, "generators": [[1,0,2], [1,2,0]]}
//! ```
//!
//! Generators are 0-based image arrays. A string generator is read as cycle
//! notation on the declared degree, e.g. `"(0 1)(2 3)"`. Blank lines and
//! lines starting with `#` are skipped.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use hallcheck_core::{FiniteGroup, Permutation};
use serde_json::Value;

use crate::error::{Result, VerifierError};
use crate::spec::{Construction, GroupSpec};

#[derive(Debug, Clone)]
pub struct IngestedGroup {
    pub line: usize,
    pub spec: GroupSpec,
    pub group: Arc<FiniteGroup>,
}

fn parse_err(line: usize, field: &str, message: impl Into<String>) -> VerifierError {
    VerifierError::Parse {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

fn field<'a>(
    obj: &'a serde_json::Map<String, Value>,
    line: usize,
    name: &str,
) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| parse_err(line, name, "missing"))
}

fn uint(obj: &serde_json::Map<String, Value>, line: usize, name: &str) -> Result<u64> {
    field(obj, line, name)?
        .as_u64()
        .ok_or_else(|| parse_err(line, name, "expected a non-negative integer"))
}

fn generator(v: &Value, degree: usize, line: usize, idx: usize) -> Result<Vec<u32>> {
    let at = format!("generators[{idx}]");
    let perm = match v {
        Value::String(s) => Permutation::parse_cycles(degree, s),
        Value::Array(items) => {
            let images = items
                .iter()
                .map(|x| {
                    x.as_u64()
                        .and_then(|n| u32::try_from(n).ok())
                        .ok_or_else(|| parse_err(line, &at, "image entries must be integers"))
                })
                .collect::<Result<Vec<u32>>>()?;
            if images.len() != degree {
                return Err(parse_err(
                    line,
                    &at,
                    format!("{} images for degree {degree}", images.len()),
                ));
            }
            Permutation::from_images(images)
        }
        _ => {
            return Err(parse_err(
                line,
                &at,
                "expected an image array or a cycle string",
            ))
        }
    };
    perm.map(Vec::from)
        .map_err(|e| parse_err(line, &at, e.to_string()))
}

/// Parses one record into a spec and its declared order; `line` is 1-based
/// and only used for messages.
pub fn parse_line(text: &str, line: usize) -> Result<(GroupSpec, u64)> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_err(line, "<json>", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err(line, "<json>", "expected an object"))?;
    let name = field(obj, line, "name")?
        .as_str()
        .ok_or_else(|| parse_err(line, "name", "expected a string"))?
        .to_string();
    let degree = uint(obj, line, "degree")? as usize;
    if degree == 0 {
        return Err(parse_err(line, "degree", "must be positive"));
    }
    let order = uint(obj, line, "order")?;
    let gens = field(obj, line, "generators")?
        .as_array()
        .ok_or_else(|| parse_err(line, "generators", "expected an array"))?;
    let generators = if gens.is_empty() {
        vec![(0..degree as u32).collect()]
    } else {
        gens.iter()
            .enumerate()
            .map(|(i, g)| generator(g, degree, line, i))
            .collect::<Result<_>>()?
    };
    Ok((
        GroupSpec::new(name, Construction::Raw { degree, generators }),
        order,
    ))
}

pub fn ingest_str(text: &str) -> Result<Vec<IngestedGroup>> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (spec, declared) = parse_line(t, line)?;
        if !names.insert(spec.name.clone()) {
            return Err(VerifierError::DuplicateName(spec.name));
        }
        let group = spec.materialise()?;
        if group.order() != declared {
            return Err(VerifierError::OrderMismatch {
                line,
                name: spec.name,
                declared,
                actual: group.order(),
            });
        }
        out.push(IngestedGroup { line, spec, group });
    }
    Ok(out)
}

pub fn ingest(path: &Path) -> Result<Vec<IngestedGroup>> {
    ingest_str(&std::fs::read_to_string(path)?)
}

/// One line of the ingestion format for `group`.
pub fn export_line(name: &str, group: &FiniteGroup) -> String {
    serde_json::json!({
        "name": name,
        "degree": group.degree(),
        "order": group.order(),
        "generators": group.generator_perms().iter().map(|g| g.images().to_vec()).collect::<Vec<_>>(),
    })
    .to_string()
}
