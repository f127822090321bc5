use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::ring::Presentation;

use super::divisor::DivisorClassData;
use super::fan::Fan;

/// Linear and monomial relations of the cohomology ring of a smooth complete toric variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyReisner {
    /// For each coordinate `u`, the coefficients `⟨u, r_i⟩` of `Σ_i ⟨u, r_i⟩ R_i = 0`.
    pub linear_relations: Vec<Vec<i64>>,
    pub primitive_collections: Vec<Vec<usize>>,
}

pub fn stanley_reisner(fan: &Fan) -> Result<StanleyReisner> {
    if !fan.is_smooth() {
        return Err(Error::UnsupportedFan("fan is not smooth".into()));
    }
    let linear_relations = (0..fan.dim()).map(|t| fan.rays().iter().map(|r| r[t]).collect()).collect();
    Ok(StanleyReisner { linear_relations, primitive_collections: fan.primitive_collections() })
}

/// The monomial relations rewritten in the nef basis.
pub fn sr_relations(fan: &Fan, data: &DivisorClassData) -> Result<Vec<Poly>> {
    let sr = stanley_reisner(fan)?;
    Ok(sr
        .primitive_collections
        .iter()
        .map(|p| p.iter().fold(Poly::one(data.rank()), |acc, &i| &acc * &data.ray_class(i)))
        .collect())
}

/// Presentation of `H^*` in the nef generators; `basis = None` picks standard monomials.
pub fn sr_presentation(fan: &Fan, data: &DivisorClassData, basis: Option<Vec<(String, Poly)>>) -> Result<Presentation> {
    let rels = sr_relations(fan, data)?;
    let gens = data.nef_names().to_vec();
    let weights = vec![1; gens.len()];
    match basis {
        Some(b) => Presentation::new(gens, weights, rels, b),
        None => Presentation::with_monomial_basis(gens, weights, rels),
    }
}

/// `∫ Π_{i∈σ} R_i = 1` for a maximal cone `σ` of a smooth fan.
pub fn point_class(fan: &Fan, data: &DivisorClassData) -> Poly {
    fan.cones()[0].iter().fold(Poly::one(data.rank()), |acc, &i| &acc * &data.ray_class(i))
}
