//! JSON file formats for spaces, functions and tensor elements.
//!
//! ```json
//! {"points": ["a","b"], "opens": [[], ["b"], ["a","b"]]}
//! {"space": "space.json", "field": {"kind":"p-adic","p":2}, "values": {"a":"1","b":"2"}}
//! {"space": {...}, "terms": [{"coefficient": "x mod x^2+x+1", "function": {"a":"1","b":"0"}}]}
//! ```
//!
//! A `space` entry is either an inline space or a path, resolved relative to
//! the file that mentions it.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::compactify::{Extension, TensorElement};
use crate::error::{Error, Result};
use crate::funcalg::{BoundedFunction, SpaceRef};
use crate::topo::FiniteSpace;
use crate::valfield::FieldSpec;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceJson {
    pub fn build(&self) -> Result<FiniteSpace> {
        FiniteSpace::from_labels(self.points.clone(), &self.opens)
    }
}

impl From<&FiniteSpace> for SpaceJson {
    fn from(x: &FiniteSpace) -> Self {
        Self {
            points: x.points().to_vec(),
            opens: x.opens().iter().map(|&u| x.labels_of(u)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceSource {
    Path(PathBuf),
    Inline(SpaceJson),
}

impl SpaceSource {
    pub fn resolve(&self, base_dir: &Path) -> Result<FiniteSpace> {
        match self {
            SpaceSource::Inline(s) => s.build(),
            SpaceSource::Path(p) => load_space(&base_dir.join(p)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctionJson {
    pub space: SpaceSource,
    pub field: FieldSpec,
    pub values: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub function: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorJson {
    pub space: SpaceSource,
    pub terms: Vec<TermJson>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn dir_of(path: &Path) -> &Path {
    path.parent().unwrap_or_else(|| Path::new("."))
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    serde_json::from_str::<SpaceJson>(text)?.build()
}

pub fn load_space(path: &Path) -> Result<FiniteSpace> {
    parse_space(&read(path)?)
}

pub fn function_from_json(json: &FunctionJson, base_dir: &Path) -> Result<BoundedFunction> {
    let space: SpaceRef = Arc::new(json.space.resolve(base_dir)?);
    let field = json.field.build()?;
    BoundedFunction::from_labels(
        space,
        field,
        json.values.iter().map(|(k, v)| (k.as_str(), v.as_str())),
    )
}

pub fn load_function(path: &Path) -> Result<BoundedFunction> {
    let json: FunctionJson = serde_json::from_str(&read(path)?)?;
    function_from_json(&json, dir_of(path))
}

pub fn function_to_json(f: &BoundedFunction) -> FunctionJson {
    FunctionJson {
        space: SpaceSource::Inline(SpaceJson::from(&**f.space())),
        field: FieldSpec::from(f.field()),
        values: f.render().into_iter().collect(),
    }
}

pub fn tensor_from_json(
    json: &TensorJson,
    extension: Extension,
    base_dir: &Path,
) -> Result<TensorElement> {
    let space: SpaceRef = Arc::new(json.space.resolve(base_dir)?);
    let (k, big) = (extension.base_field(), extension.ext_field());
    let terms = json
        .terms
        .iter()
        .map(|t| {
            let c = big.parse_scalar(&t.coefficient)?;
            let g = BoundedFunction::from_labels(
                space.clone(),
                k.clone(),
                t.function.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )?;
            Ok((c, g))
        })
        .collect::<Result<Vec<_>>>()?;
    TensorElement::new(extension, space, terms)
}

pub fn load_tensor(path: &Path, extension: Extension) -> Result<TensorElement> {
    let json: TensorJson = serde_json::from_str(&read(path)?)?;
    tensor_from_json(&json, extension, dir_of(path))
}

/// Point labels of each member of a point-set family.
pub fn label_sets(space: &FiniteSpace, sets: impl IntoIterator<Item = u64>) -> Vec<Vec<String>> {
    sets.into_iter().map(|s| space.labels_of(s)).collect()
}

pub fn component_labels(space: &FiniteSpace) -> Vec<Vec<String>> {
    label_sets(space, space.components().iter().copied())
}

/// Checks that a label set is a subset of the space, returning its mask.
pub fn mask_of(space: &FiniteSpace, labels: &[String]) -> Result<u64> {
    labels
        .iter()
        .try_fold(0u64, |m, l| Ok(m | 1 << space.point_index(l)?))
        .map(|m: u64| m & bits::full(space.len()))
}
