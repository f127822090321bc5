use super::ifunction::{z_coefficient, IFunction};
use super::operator::{find_extraction_operators, Extraction};
use crate::algebra::fit::{rational_from_series, DEFAULT_DEGREE_CAP, DEFAULT_MARGIN};
use crate::algebra::{Poly, RationalFunction, RfMatrix, Scalar, TruncatedSeries};
use crate::error::{structural, Error, Result};
use crate::ring::GradedRing;

/// How truncated coefficients are turned into rational functions.
#[derive(Clone, Debug)]
pub struct FitConfig {
    /// Allowed denominator factors, each to the first power.
    pub ansatz: Vec<Poly>,
    pub degree_cap: u32,
    pub margin: u32,
}

impl FitConfig {
    pub fn new(ansatz: Vec<Poly>) -> Self {
        FitConfig { ansatz, degree_cap: DEFAULT_DEGREE_CAP, margin: DEFAULT_MARGIN }
    }

    pub fn fit(&self, s: &TruncatedSeries<Scalar>) -> Result<RationalFunction> {
        rational_from_series(s, &self.ansatz, self.degree_cap, self.margin)
    }
}

/// Truncated quantum multiplication by each nef generator, as series matrices.
///
/// Entry `(k, i)` of matrix `j` is the `z^0` coefficient of `zD_j (D_i Ĩ)` along `φ_k`.
pub fn generator_series_matrices(ifn: &IFunction, ex: &Extraction) -> Vec<Vec<Vec<TruncatedSeries<Scalar>>>> {
    let n = ifn.ring().dim();
    (0..ifn.data().rank())
        .map(|j| {
            let cols: Vec<Vec<TruncatedSeries<Scalar>>> =
                ex.applied.iter().map(|a| z_coefficient(&ifn.apply_zd(j, a), 0, n)).collect();
            (0..n).map(|k| (0..n).map(|i| cols[i][k].clone()).collect()).collect()
        })
        .collect()
}

/// The output of the mirror computation for one toric variety.
#[derive(Clone, Debug)]
pub struct MirrorResult {
    pub extraction: Extraction,
    pub generator_matrices: Vec<RfMatrix>,
    pub quantum: GradedRing,
}

/// Quantum multiplication matrices of the nef generators in closed form.
pub fn extract_quantum_matrices(ifn: &IFunction, ex: &Extraction, fit: &FitConfig) -> Result<Vec<RfMatrix>> {
    let nv = ifn.data().rank();
    let names = ifn.data().nef_names();
    generator_series_matrices(ifn, ex)
        .into_iter()
        .enumerate()
        .map(|(j, m)| {
            let rows = m
                .iter()
                .enumerate()
                .map(|(k, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(i, s)| {
                            fit.fit(s).map_err(|e| match e {
                                Error::NoClosedForm { series } => Error::NoClosedForm {
                                    series: format!("{} matrix entry ({k}, {i}): {series}", names[j]),
                                },
                                other => other,
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            RfMatrix::from_rows(nv, rows)
        })
        .collect()
}

/// Compute `Ĩ`, extract the basis operators, fit the generator matrices and assemble the ring.
///
/// `classical` must carry the presentation whose generators are the nef classes.
pub fn quantum_ring(ifn: &IFunction, fit: &FitConfig, novikov: Vec<String>) -> Result<MirrorResult> {
    let classical = ifn.ring();
    let pres = classical.presentation().ok_or_else(|| structural("classical ring has no presentation"))?;
    if pres.generators().len() != ifn.data().rank() {
        return Err(structural("presentation generators must be the nef classes"));
    }
    let targets: Vec<Poly> = pres.basis().iter().map(|(_, p)| p.clone()).collect();
    let extraction = find_extraction_operators(ifn, &targets)?;
    let generator_matrices = extract_quantum_matrices(ifn, &extraction, fit)?;
    let quantum =
        GradedRing::from_generator_matrices(classical, &generator_matrices, novikov, ifn.data().novikov_degrees())?;
    Ok(MirrorResult { extraction, generator_matrices, quantum })
}
