use crate::algebra::{parse_poly, Matrix, RfVector, Subspace, Vector};
use crate::error::{structural, Error, Result};
use crate::ring::GradedRing;

/// Classical coordinates of a polynomial expression.
///
/// Uses the ring's presentation when it has one; otherwise the variables are the basis names
/// and products are cup products.
pub fn classical_element(ring: &GradedRing, expr: &str) -> Result<Vector> {
    if ring.presentation().is_some() {
        return ring.reduce_expr(expr);
    }
    let p = parse_poly(expr, ring.names())?;
    let cl = ring.classical_limit()?;
    let values: Vec<RfVector> = (0..cl.dim()).map(|k| cl.basis_vector(k)).collect();
    cl.eval_poly(&p, &values)?
        .iter()
        .map(|x| x.as_scalar())
        .collect::<Option<Vector>>()
        .ok_or_else(|| structural(format!("{expr} is not a constant class")))
}

/// A linear map defined on the span of some source vectors by their images.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    ambient: usize,
    target_dim: usize,
    sources: Vec<Vector>,
    labels: Vec<String>,
    images: Vec<Vector>,
}

impl ThetaMap {
    /// Fails if two descriptions of the same vector disagree.
    pub fn new(ambient: usize, target_dim: usize, pairs: impl IntoIterator<Item = (Vector, Vector)>) -> Result<Self> {
        let labelled = pairs.into_iter().enumerate().map(|(k, (s, i))| (format!("v{k}"), s, i));
        ThetaMap::labelled(ambient, target_dim, labelled)
    }

    /// As [`ThetaMap::new`], with a display label for each source.
    pub fn labelled(
        ambient: usize,
        target_dim: usize,
        pairs: impl IntoIterator<Item = (String, Vector, Vector)>,
    ) -> Result<Self> {
        let mut t = ThetaMap { ambient, target_dim, sources: Vec::new(), labels: Vec::new(), images: Vec::new() };
        for (label, s, i) in pairs {
            if s.len() != ambient || i.len() != target_dim {
                return Err(structural("θ pair has the wrong length"));
            }
            match t.apply(&s) {
                Some(prev) if prev != i => {
                    return Err(Error::TheoremViolation("θ is not well defined: inconsistent images".into()));
                }
                Some(_) => {}
                None => {
                    t.sources.push(s);
                    t.labels.push(label);
                    t.images.push(i);
                }
            }
        }
        Ok(t)
    }

    /// Read `(source, target)` expression pairs.
    pub fn from_exprs(source: &GradedRing, target: &GradedRing, pairs: &[(String, String)]) -> Result<Self> {
        let parsed = pairs
            .iter()
            .map(|(a, b)| Ok((a.clone(), classical_element(source, a)?, classical_element(target, b)?)))
            .collect::<Result<Vec<_>>>()?;
        ThetaMap::labelled(source.dim(), target.dim(), parsed)
    }

    pub fn domain(&self) -> Subspace {
        Subspace::span(self.ambient, self.sources.iter().cloned())
    }

    /// Independent source vectors, in the order given.
    pub fn sources(&self) -> &[Vector] {
        &self.sources
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// `None` outside the domain.
    pub fn apply(&self, v: &[crate::algebra::Scalar]) -> Option<Vector> {
        if self.sources.is_empty() {
            return crate::algebra::linalg::is_zero_vec(v).then(|| crate::algebra::linalg::zero_vec(self.target_dim));
        }
        let s = Matrix::from_cols(self.ambient, &self.sources);
        let c = s.solve(v)?;
        Some(Matrix::from_cols(self.target_dim, &self.images).mul_vec(&c))
    }

    pub fn kernel(&self) -> Subspace {
        if self.sources.is_empty() {
            return Subspace::zero(self.ambient);
        }
        let img = Matrix::from_cols(self.target_dim, &self.images);
        let s = Matrix::from_cols(self.ambient, &self.sources);
        Subspace::span(self.ambient, img.kernel().into_iter().map(|c| s.mul_vec(&c)))
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.target_dim, self.images.iter().cloned())
    }

    /// The same map with `v ↦ -θ(v)` on the given source and unchanged on the others.
    pub fn with_negated(&self, index: usize) -> ThetaMap {
        let mut t = self.clone();
        t.images[index] = t.images[index].iter().map(|x| -x).collect();
        t
    }
}
