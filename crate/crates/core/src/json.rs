//! JSON shapes for quantales and Q-categories. Elements and objects are
//! referred to by label; rationals are `"p/q"` strings.
//!
//! ```json
//! {"elements":["0","1"],"le":[[1,1],[0,1]],"tensor":[["0","0"],["0","1"]],"unit":"1"}
//! {"quantale":"bool.json","objects":["a","b"],"hom":[["1","1"],["0","1"]]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcat::QCategory;
use crate::quantale::{FiniteQuantale, QuantaleTable, Standard};

/// An order-matrix entry: `0`/`1` or `false`/`true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Bit {
    Bool(bool),
    Int(u8),
}

impl Bit {
    fn get(self) -> Result<bool> {
        match self {
            Bit::Bool(b) => Ok(b),
            Bit::Int(0) => Ok(false),
            Bit::Int(1) => Ok(true),
            Bit::Int(n) => Err(Error::Shape(format!(
                "order entries must be 0 or 1, got {n}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantaleJson {
    pub elements: Vec<String>,
    pub le: Vec<Vec<Bit>>,
    pub tensor: Vec<Vec<String>>,
    pub unit: String,
}

/// `{"standard": {"kind": "godel_chain", "n": 3}}`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StandardJson {
    pub standard: Standard,
}

fn lookup(labels: &[String], l: &str) -> Result<usize> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| Error::UnknownElement(l.to_string()))
}

impl QuantaleJson {
    pub fn table(&self) -> Result<QuantaleTable> {
        let le = self
            .le
            .iter()
            .map(|row| row.iter().map(|b| b.get()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let tensor = self
            .tensor
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| lookup(&self.elements, l))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let unit = lookup(&self.elements, &self.unit)?;
        Ok(QuantaleTable {
            elements: self.elements.clone(),
            le,
            tensor,
            unit,
        })
    }

    pub fn build(&self) -> Result<FiniteQuantale> {
        FiniteQuantale::new(self.table()?)
    }

    pub fn from_quantale(q: &FiniteQuantale) -> Self {
        let t = q.table();
        QuantaleJson {
            le: t
                .le
                .iter()
                .map(|r| r.iter().map(|&b| Bit::Int(b as u8)).collect())
                .collect(),
            tensor: t
                .tensor
                .iter()
                .map(|r| r.iter().map(|&e| t.elements[e].clone()).collect())
                .collect(),
            unit: t.elements[t.unit].clone(),
            elements: t.elements,
        }
    }
}

/// A Q-category whose quantale is given inline or as a path.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub quantale: serde_json::Value,
    pub objects: Vec<String>,
    pub hom: Vec<Vec<String>>,
}

impl CategoryJson {
    pub fn build(&self, q: Arc<FiniteQuantale>) -> Result<QCategory> {
        let hom = self
            .hom
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| q.index_of(l))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QCategory::new(q, self.objects.clone(), hom)
    }

    /// The category with its quantale inlined.
    pub fn from_category(a: &QCategory) -> Self {
        let q = a.quantale();
        CategoryJson {
            quantale: serde_json::to_value(QuantaleJson::from_quantale(q)).expect("serializable"),
            objects: a.labels().to_vec(),
            hom: a
                .hom_matrix()
                .iter()
                .map(|r| r.iter().map(|&e| q.label(e).to_string()).collect())
                .collect(),
        }
    }
}
