use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use qdl_core::json::{CategoryJson, QuantaleJson, StandardJson};
use qdl_core::qcat::QCategory;
use qdl_core::quantale::{FiniteQuantale, QuantaleTable};
use qdl_core::tnorm::OrdinalSumTNorm;
use serde::de::DeserializeOwned;
use serde_json::Value;

fn read_value(path: &Path) -> Result<Value> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: invalid JSON", path.display()))
}

/// Deserializes with the JSON path of the first offending field in the message.
fn from_value<T: DeserializeOwned>(value: Value, origin: &str) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let at = e.path().to_string();
        anyhow::anyhow!("{origin}: at `{at}`: {}", e.into_inner())
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    from_value(read_value(path)?, &path.display().to_string())
}

pub fn load_tnorm(path: &Path) -> Result<OrdinalSumTNorm> {
    read_json(path)
}

/// A quantale is a table object or `{"standard": …}`.
fn quantale_from_value(value: Value, origin: &str) -> Result<FiniteQuantale> {
    if value.get("standard").is_some() {
        let s: StandardJson = from_value(value, origin)?;
        return FiniteQuantale::standard(s.standard).with_context(|| origin.to_string());
    }
    let j: QuantaleJson = from_value(value, origin)?;
    j.build().with_context(|| origin.to_string())
}

pub fn load_quantale(path: &Path) -> Result<FiniteQuantale> {
    quantale_from_value(read_value(path)?, &path.display().to_string())
}

/// The raw table, for reporting violations instead of failing on them.
/// Standard quantales have no table to report on and are returned built.
pub fn load_quantale_table(path: &Path) -> Result<Result<QuantaleTable, FiniteQuantale>> {
    let origin = path.display().to_string();
    let value = read_value(path)?;
    if value.get("standard").is_some() {
        return Ok(Err(quantale_from_value(value, &origin)?));
    }
    let j: QuantaleJson = from_value(value, &origin)?;
    Ok(Ok(j.table().with_context(|| origin)?))
}

/// The quantale and the unvalidated category description.
pub fn load_category_parts(path: &Path) -> Result<(Arc<FiniteQuantale>, CategoryJson)> {
    let origin = path.display().to_string();
    let j: CategoryJson = from_value(read_value(path)?, &origin)?;
    let q = match &j.quantale {
        Value::String(rel) => {
            let base = path.parent().unwrap_or(Path::new("."));
            load_quantale(&base.join(rel))?
        }
        inline => quantale_from_value(inline.clone(), &format!("{origin}: quantale"))?,
    };
    Ok((Arc::new(q), j))
}

/// The `quantale` field is inline or a path relative to the category file.
pub fn load_category(path: &Path) -> Result<QCategory> {
    let (q, j) = load_category_parts(path)?;
    j.build(q).with_context(|| path.display().to_string())
}
