//! Reference data shipped with the crate.
//!
//! Every file is compiled in. Setting `QCT_FIXTURES` to a directory with the same layout
//! makes the loaders read from there instead.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_poly, parse_rational, Poly, RfMatrix};
use crate::error::{Error, Result};
use crate::toric::Fan;

pub const ENV_VAR: &str = "QCT_FIXTURES";

macro_rules! embedded {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/", $path)))),*]
    };
}

static EMBEDDED: &[(&str, &str)] = embedded!(
    "fans/fl123_res.fan",
    "fans/fl123_sing.fan",
    "fans/gr24_res.fan",
    "fans/gr24_sing.fan",
    "fans/gr25_res.fan",
    "fans/gr25_sing.fan",
    "matrices/fl123_p1.json",
    "matrices/fl123_p2.json",
    "matrices/fl123res_N.json",
    "matrices/fl123res_fp1.json",
    "matrices/fl123res_fp2.json",
    "matrices/fl123res_fp3.json",
    "matrices/gr24_d.json",
    "matrices/gr24_delta.json",
    "matrices/gr24res_N.json",
    "matrices/gr24res_m1.json",
    "matrices/gr24res_m2.json",
    "matrices/gr25_w10.json",
    "gr25res_operators.json",
    "gr25res_products.json",
    "transitions.json",
);

/// Relative paths of all known fixtures.
pub fn list() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(p, _)| *p).collect()
}

/// Contents of a fixture, from `$QCT_FIXTURES` when set.
pub fn read(path: &str) -> Result<String> {
    if let Ok(dir) = std::env::var(ENV_VAR) {
        let full = PathBuf::from(dir).join(path);
        return std::fs::read_to_string(&full).map_err(|source| Error::Io { path: full.display().to_string(), source });
    }
    EMBEDDED.iter().find(|(p, _)| *p == path).map(|(_, s)| s.to_string()).ok_or_else(|| Error::Io {
        path: path.into(),
        source: std::io::Error::new(std::io::ErrorKind::NotFound, "unknown fixture"),
    })
}

pub fn fan(name: &str) -> Result<Fan> {
    Fan::parse(&read(&format!("fans/{name}.fan"))?)
}

/// A multiplication (or residue) matrix; `rows[k][i]` is the `k`-th coordinate of `element ⋆ basis[i]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFixture {
    pub note: String,
    #[serde(default)]
    pub convention: Option<String>,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub element: String,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFixture {
    pub fn to_matrix(&self) -> Result<RfMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| parse_rational(e, &self.variables).map_err(Error::from)).collect())
            .collect::<Result<Vec<_>>>()?;
        RfMatrix::from_rows(self.variables.len(), rows)
    }

    /// Basis elements as polynomials in the generators.
    pub fn basis_polys(&self) -> Result<Vec<(String, Poly)>> {
        self.basis.iter().map(|b| Ok((b.clone(), parse_poly(b, &self.generators)?))).collect()
    }
}

pub fn matrix(name: &str) -> Result<MatrixFixture> {
    Ok(serde_json::from_str(&read(&format!("matrices/{name}.json"))?)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

/// Quantum products written as expressions in the generators and Novikov variables.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductsFixture {
    pub note: String,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub products: Vec<ProductEntry>,
}

pub fn gr25_products() -> Result<ProductsFixture> {
    Ok(serde_json::from_str(&read("gr25res_products.json")?)?)
}

/// One operator per basis element; `dk` is `z q_k ∂/∂q_k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorsFixture {
    pub note: String,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub operators: Vec<String>,
}

pub fn gr25_operators() -> Result<OperatorsFixture> {
    Ok(serde_json::from_str(&read("gr25res_operators.json")?)?)
}

/// Subspaces and comparison maps for one transition.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub struct TransitionFixture {
    pub note: String,
    pub resolution_generators: Vec<String>,
    pub smoothing_generators: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    #[serde(rename = "W_minus1", default)]
    pub w_minus1: Option<Vec<String>>,
    #[serde(rename = "W_minus2", default)]
    pub w_minus2: Option<Vec<String>>,
    #[serde(rename = "W0", default)]
    pub w0: Option<Vec<String>>,
    pub image_pi: Vec<String>,
    #[serde(default)]
    pub ker_r: Option<Vec<String>>,
    #[serde(default)]
    pub image_r: Option<Vec<String>>,
    #[serde(default)]
    pub betti_sing: Option<Vec<u32>>,
    pub r_star: Vec<(String, String)>,
    pub theta: Vec<(String, String)>,
    #[serde(default)]
    pub conifold_class: Option<String>,
}

pub fn transitions() -> Result<BTreeMap<String, TransitionFixture>> {
    Ok(serde_json::from_str(&read("transitions.json")?)?)
}
