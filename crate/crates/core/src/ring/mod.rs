//! Graded (quantum) rings with rational-function structure constants.

mod presentation;
mod subquotient;

pub use presentation::Presentation;
pub use subquotient::{subquotient, QuotientRep};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::linalg::unit_vec;
use crate::algebra::rfmatrix::{rf_axpy, rf_vec_from_scalar, rf_vec_zero};
use crate::algebra::{Matrix, Poly, RationalFunction, RfMatrix, RfVector, Scalar, Vector};
use crate::error::{structural, Error, Result};
use crate::verdict::Verdict;

/// Basis of a free module over the Novikov ring with a product table and a pairing.
///
/// Degrees are real degrees. `mult[i][j]` holds the coordinates of `b_i ⋆ b_j`.
#[derive(Clone, Debug)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<i64>,
    unit: Option<usize>,
    novikov: Vec<String>,
    novikov_degrees: Vec<i64>,
    mult: Vec<Vec<RfVector>>,
    pairing: Matrix,
    presentation: Option<Presentation>,
}

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<i64>,
        unit: Option<usize>,
        novikov: Vec<String>,
        novikov_degrees: Vec<i64>,
        mult: Vec<Vec<RfVector>>,
        pairing: Matrix,
    ) -> Result<Self> {
        let n = names.len();
        let nv = novikov.len();
        if degrees.len() != n || novikov_degrees.len() != nv {
            return Err(structural("degree lists do not match the basis"));
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(structural("product table has the wrong shape"));
        }
        if mult.iter().flatten().flatten().any(|x| x.nvars() != nv) {
            return Err(structural("product table uses a different Novikov variable count"));
        }
        if pairing.rows() != n || pairing.cols() != n {
            return Err(structural("pairing has the wrong shape"));
        }
        if unit.is_some_and(|u| u >= n) {
            return Err(structural("unit index out of range"));
        }
        Ok(GradedRing { names, degrees, unit, novikov, novikov_degrees, mult, pairing, presentation: None })
    }

    /// Classical ring of a presentation, with `∫ normalization = value`.
    pub fn from_presentation(pres: Presentation, normalization: &Poly, value: Scalar) -> Result<Self> {
        let n = pres.basis().len();
        let top = pres.top_index();
        let c = pres.reduce(normalization)[top].clone();
        if c.is_zero() {
            return Err(structural("normalization class has no top-degree component"));
        }
        let top_value = value * c.inv();
        let unit = pres.basis().iter().position(|(_, p)| *p == Poly::one(p.nvars()));
        let mut mult = vec![vec![Vec::new(); n]; n];
        let mut pairing = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let prod = &pres.basis()[i].1 * &pres.basis()[j].1;
                let v = pres.reduce(&prod);
                pairing.set(i, j, &v[top] * &top_value);
                mult[i][j] = rf_vec_from_scalar(&v, 0);
            }
        }
        let names = pres.basis().iter().map(|(s, _)| s.clone()).collect();
        let degrees = pres.basis_degrees().iter().map(|&d| 2 * d as i64).collect();
        let mut ring = GradedRing::new(names, degrees, unit, vec![], vec![], mult, pairing)?;
        ring.presentation = Some(pres);
        Ok(ring)
    }

    /// Quantum ring from quantum multiplication matrices of the presentation generators.
    ///
    /// `generator_matrices[j]` is the matrix of `g_j ⋆` in the basis of `classical`.
    pub fn from_generator_matrices(
        classical: &GradedRing,
        generator_matrices: &[RfMatrix],
        novikov: Vec<String>,
        novikov_degrees: Vec<i64>,
    ) -> Result<Self> {
        let pres = classical.presentation.as_ref().ok_or_else(|| structural("classical ring has no presentation"))?;
        let n = classical.dim();
        let nv = novikov.len();
        if generator_matrices.len() != pres.generators().len() {
            return Err(structural("one matrix per generator expected"));
        }
        if generator_matrices.iter().any(|m| m.dim() != n || m.nvars() != nv) {
            return Err(structural("generator matrix has the wrong shape"));
        }
        let unit = classical.unit.ok_or_else(|| structural("classical ring has no unit"))?;
        let mut by_degree: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
        for i in 0..n {
            by_degree.entry(classical.degrees[i]).or_default().push(i);
        }
        let ng = pres.generators().len();
        let mut ops: Vec<Option<RfMatrix>> = vec![None; n];
        for (&deg, block) in &by_degree {
            // naive[i] = Σ_j g_j ⋆ R_j(classical), which is b_i plus quantum corrections
            let mut naive = Vec::with_capacity(block.len());
            for &i in block {
                let p = &pres.basis()[i].1;
                if p.is_constant() {
                    naive.push(RfMatrix::identity(n, nv).scale_rf(&RationalFunction::constant(nv, p.constant_term())));
                    continue;
                }
                let mut parts = vec![Poly::zero(ng); ng];
                for (m, c) in p.terms() {
                    let j = m.0.iter().position(|&e| e > 0).expect("non-constant monomial");
                    let rest = m.checked_sub(&crate::algebra::MultiIndex::unit(ng, j)).expect("divisible");
                    parts[j].add_term(rest, c.clone());
                }
                let mut acc = RfMatrix::zero(n, nv);
                for (j, r) in parts.iter().enumerate() {
                    if r.is_empty() {
                        continue;
                    }
                    let mut s = RfMatrix::zero(n, nv);
                    for (u, coef) in pres.reduce(r).iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let lu = ops[u].as_ref().ok_or_else(|| {
                            structural(format!("basis element {} needed before it is built", classical.names[u]))
                        })?;
                        s = s.add(&lu.scale_rf(&RationalFunction::constant(nv, coef.clone())));
                    }
                    acc = acc.add(&generator_matrices[j].mul(&s));
                }
                naive.push(acc);
            }
            // naive[i] = Σ_{u in block} A[i][u] L_u + Σ_{u lower} c_u L_u
            let k = block.len();
            let mut a = RfMatrix::zero(k, nv);
            for (t, &i) in block.iter().enumerate() {
                let corr = naive[t].col(unit);
                for (u, c) in corr.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(s) = block.iter().position(|&x| x == u) {
                        a.set(t, s, c.clone());
                    } else if classical.degrees[u] < deg {
                        let lu = ops[u].as_ref().expect("lower degree already built");
                        naive[t] = naive[t].sub(&lu.scale_rf(c));
                    } else {
                        return Err(structural(format!(
                            "quantum correction of {} has a component along {} of higher degree",
                            classical.names[i], classical.names[u]
                        )));
                    }
                }
            }
            let ainv = a.inverse().ok_or_else(|| structural(format!("degree {deg} block is not invertible")))?;
            for (t, &i) in block.iter().enumerate() {
                let mut l = RfMatrix::zero(n, nv);
                for (s, m) in naive.iter().enumerate() {
                    let c = ainv.get(t, s);
                    if !c.is_zero() {
                        l = l.add(&m.scale_rf(c));
                    }
                }
                ops[i] = Some(l);
            }
        }
        let mult = (0..n)
            .map(|i| {
                let op = ops[i].as_ref().expect("all built");
                (0..n).map(|k| op.col(k)).collect()
            })
            .collect();
        let mut ring = GradedRing::new(
            classical.names.clone(),
            classical.degrees.clone(),
            Some(unit),
            novikov,
            novikov_degrees,
            mult,
            classical.pairing.clone(),
        )?;
        ring.presentation = classical.presentation.clone();
        Ok(ring)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn novikov(&self) -> &[String] {
        &self.novikov
    }

    pub fn novikov_degrees(&self) -> &[i64] {
        &self.novikov_degrees
    }

    pub fn nvars(&self) -> usize {
        self.novikov.len()
    }

    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn product(&self, i: usize, j: usize) -> &RfVector {
        &self.mult[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> RfVector {
        rf_vec_from_scalar(&unit_vec(self.dim(), i), self.nvars())
    }

    pub fn lift(&self, v: &[Scalar]) -> RfVector {
        rf_vec_from_scalar(v, self.nvars())
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, a: &[RationalFunction], b: &[RationalFunction]) -> RfVector {
        let n = self.dim();
        let mut out = rf_vec_zero(n, self.nvars());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                rf_axpy(&mut out, &(x * y), &self.mult[i][j]);
            }
        }
        out
    }

    /// Matrix of multiplication by an element; column `k` is `a ⋆ b_k`.
    pub fn mul_matrix(&self, a: &[RationalFunction]) -> RfMatrix {
        let cols: Vec<RfVector> = (0..self.dim()).map(|k| self.mul(a, &self.basis_vector(k))).collect();
        RfMatrix::from_cols(self.nvars(), &cols).expect("square")
    }

    /// Classical coordinates of a polynomial in the presentation generators.
    pub fn reduce(&self, p: &Poly) -> Result<Vector> {
        let pres = self.presentation.as_ref().ok_or_else(|| structural("ring has no presentation"))?;
        Ok(pres.reduce(p))
    }

    pub fn reduce_expr(&self, expr: &str) -> Result<Vector> {
        let pres = self.presentation.as_ref().ok_or_else(|| structural("ring has no presentation"))?;
        pres.parse_and_reduce(expr)
    }

    /// Coordinates of an expression in the generators and Novikov variables, such as
    /// `(m1-m2)*m3*q2/(1-q2)`. Denominators may only involve Novikov variables.
    pub fn parse_element(&self, expr: &str) -> Result<RfVector> {
        let pres = self.presentation.as_ref().ok_or_else(|| structural("ring has no presentation"))?;
        let ng = pres.generators().len();
        let nv = self.nvars();
        let names: Vec<String> = pres.generators().iter().chain(&self.novikov).cloned().collect();
        let f = crate::algebra::parse_rational(expr, &names)?;
        let qs: Vec<usize> = (ng..ng + nv).collect();
        let den = RationalFunction::new(Poly::one(ng + nv), f.denominator().iter().map(|(p, k)| (p.clone(), *k)))?
            .restrict(&qs)
            .ok_or_else(|| structural(format!("denominator of {expr} involves a generator")))?;
        let mut parts: std::collections::BTreeMap<Vec<u32>, Poly> = Default::default();
        for (m, c) in f.numerator().terms() {
            let e = parts.entry(m.0[..ng].to_vec()).or_insert_with(|| Poly::zero(nv));
            e.add_term(crate::algebra::MultiIndex(m.0[ng..].to_vec()), c.clone());
        }
        let mut out = rf_vec_zero(self.dim(), nv);
        for (g, qpoly) in parts {
            let v = pres.reduce(&Poly::monomial(ng, crate::algebra::MultiIndex(g), Scalar::from_int(1)));
            let coef = den.mul_poly(&qpoly);
            rf_axpy(&mut out, &coef, &rf_vec_from_scalar(&v, nv));
        }
        Ok(out)
    }

    /// Evaluate a polynomial on given elements using this ring's product.
    pub fn eval_poly(&self, p: &Poly, values: &[RfVector]) -> Result<RfVector> {
        let n = self.dim();
        let one = self.unit.map(|u| self.basis_vector(u)).ok_or_else(|| structural("ring has no unit"))?;
        let mut out = rf_vec_zero(n, self.nvars());
        for (m, c) in p.terms() {
            let mut term = one.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term = self.mul(&term, &values[k]);
                }
            }
            rf_axpy(&mut out, &RationalFunction::constant(self.nvars(), c.clone()), &term);
        }
        Ok(out)
    }

    pub fn pair(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        crate::algebra::linalg::dot(a, &self.pairing.mul_vec(b))
    }

    /// Substitute values for Novikov variables; the variables stay in the table.
    pub fn evaluate(&self, assignments: &[(usize, Scalar)]) -> Result<GradedRing> {
        let names = self.novikov.clone();
        let mut mult = self.mult.clone();
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                for x in v.iter_mut() {
                    *x = x.substitute_all(assignments, &names).map_err(|_| Error::EvaluationPole {
                        left: self.names[i].clone(),
                        right: self.names[j].clone(),
                    })?;
                }
            }
        }
        let mut out = self.clone();
        out.mult = mult;
        Ok(out)
    }

    /// All Novikov variables set to zero.
    pub fn classical_limit(&self) -> Result<GradedRing> {
        let zero: Vec<(usize, Scalar)> = (0..self.nvars()).map(|k| (k, Scalar::zero())).collect();
        let ev = self.evaluate(&zero)?;
        let mult = ev
            .mult
            .iter()
            .map(|r| r.iter().map(|v| v.iter().map(|x| x.restrict(&[]).expect("constant")).collect()).collect())
            .collect();
        let mut out = GradedRing::new(
            self.names.clone(),
            self.degrees.clone(),
            self.unit,
            vec![],
            vec![],
            mult,
            self.pairing.clone(),
        )?;
        out.presentation = self.presentation.clone();
        Ok(out)
    }

    /// Keep only the listed Novikov variables; fails if a dropped one still occurs.
    pub fn restrict_novikov(&self, keep: &[usize]) -> Result<GradedRing> {
        let mut mult = Vec::with_capacity(self.dim());
        for row in &self.mult {
            let mut r = Vec::with_capacity(self.dim());
            for v in row {
                let w: Option<RfVector> = v.iter().map(|x| x.restrict(keep)).collect();
                r.push(w.ok_or_else(|| structural("a dropped Novikov variable still occurs"))?);
            }
            mult.push(r);
        }
        let mut out = GradedRing::new(
            self.names.clone(),
            self.degrees.clone(),
            self.unit,
            keep.iter().map(|&k| self.novikov[k].clone()).collect(),
            keep.iter().map(|&k| self.novikov_degrees[k]).collect(),
            mult,
            self.pairing.clone(),
        )?;
        out.presentation = self.presentation.clone();
        Ok(out)
    }

    /// Rename basis elements and Novikov variables (display only).
    pub fn renamed(mut self, names: Option<Vec<String>>, novikov: Option<Vec<String>>) -> Self {
        if let Some(n) = names {
            assert_eq!(n.len(), self.dim());
            self.names = n;
        }
        if let Some(n) = novikov {
            assert_eq!(n.len(), self.nvars());
            self.novikov = n;
        }
        self
    }

    pub fn check_commutative(&self) -> Verdict {
        let n = self.dim();
        let bad =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| self.mult[i][j] != self.mult[j][i]);
        Verdict::from_witness("commutative", bad.map(|(i, j)| format!("{} * {}", self.names[i], self.names[j])))
    }

    pub fn check_unit(&self) -> Verdict {
        let Some(u) = self.unit else {
            return Verdict::fail("unit", "no unit");
        };
        let n = self.dim();
        let bad = (0..n).find(|&k| self.mult[u][k] != self.basis_vector(k) || self.mult[k][u] != self.basis_vector(k));
        Verdict::from_witness("unit", bad.map(|k| self.names[k].clone()))
    }

    /// Every entry of `b_i ⋆ b_j` along `b_k` is homogeneous of degree `deg i + deg j - deg k`.
    pub fn check_grading(&self) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = &self.mult[i][j][k];
                    if x.is_zero() {
                        continue;
                    }
                    let want = self.degrees[i] + self.degrees[j] - self.degrees[k];
                    let ok = x.weighted_degrees(&self.novikov_degrees).is_some_and(|d| d == [want]);
                    if !ok {
                        return Verdict::fail(
                            "grading",
                            format!(
                                "{} * {} along {}: {}",
                                self.names[i],
                                self.names[j],
                                self.names[k],
                                x.format_with(&self.novikov)
                            ),
                        );
                    }
                }
            }
        }
        Verdict::pass("grading")
    }

    /// Symmetric, nondegenerate, and pairing only complementary degrees.
    pub fn check_pairing(&self) -> Verdict {
        let n = self.dim();
        if self.pairing != self.pairing.transpose() {
            return Verdict::fail("pairing", "not symmetric");
        }
        if n > 0 && self.pairing.det().is_zero() {
            return Verdict::fail("pairing", "degenerate");
        }
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        for i in 0..n {
            for j in 0..n {
                if !self.pairing.get(i, j).is_zero() && self.degrees[i] + self.degrees[j] != top {
                    return Verdict::fail(
                        "pairing",
                        format!("{} and {} are not complementary", self.names[i], self.names[j]),
                    );
                }
            }
        }
        Verdict::pass("pairing")
    }

    /// `(a⋆b, c)` is fully symmetric in `a, b, c`.
    pub fn check_frobenius(&self) -> Verdict {
        let n = self.dim();
        let nv = self.nvars();
        let mut t = vec![vec![vec![RationalFunction::zero(nv); n]; n]; n];
        for a in 0..n {
            for b in a..n {
                for c in 0..n {
                    let mut s = RationalFunction::zero(nv);
                    for (l, x) in self.mult[a][b].iter().enumerate() {
                        let p = self.pairing.get(l, c);
                        if !x.is_zero() && !p.is_zero() {
                            s = &s + &x.scale(p);
                        }
                    }
                    t[a][b][c] = s.clone();
                    t[b][a][c] = s;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t[a][b][c] != t[b][c][a] {
                        return Verdict::fail(
                            "frobenius",
                            format!(
                                "({}*{}, {}) != ({}, {}*{})",
                                self.names[a],
                                self.names[b],
                                self.names[c],
                                self.names[a],
                                self.names[b],
                                self.names[c]
                            ),
                        );
                    }
                }
            }
        }
        Verdict::pass("frobenius")
    }

    pub fn check_associative(&self) -> Verdict {
        let n = self.dim();
        for a in 0..n {
            for b in a..n {
                let ab = &self.mult[a][b];
                for c in 0..n {
                    let left = self.mul(ab, &self.basis_vector(c));
                    let right = self.mul(&self.basis_vector(a), &self.mult[b][c]);
                    if left != right {
                        return Verdict::fail(
                            "associative",
                            format!("({}*{})*{}", self.names[a], self.names[b], self.names[c]),
                        );
                    }
                }
            }
        }
        Verdict::pass("associative")
    }

    /// The structural checks every ring produced by the engine must pass.
    pub fn check_all(&self) -> Vec<Verdict> {
        vec![
            self.check_unit(),
            self.check_commutative(),
            self.check_grading(),
            self.check_pairing(),
            self.check_frobenius(),
            self.check_associative(),
        ]
    }

    /// Same ring up to basis order and names? Here: identical tables after matching by position.
    pub fn same_products(&self, o: &GradedRing) -> Option<String> {
        if self.dim() != o.dim() {
            return Some(format!("dimension {} vs {}", self.dim(), o.dim()));
        }
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.mult[i][j] != o.mult[i][j] {
                    return Some(format!("{} * {}", self.names[i], self.names[j]));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> RingJson {
        let n = self.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = &self.mult[i][j];
                let terms: Vec<(String, String)> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (self.names[k].clone(), x.format_with(&self.novikov)))
                    .collect();
                products.push(ProductJson { left: self.names[i].clone(), right: self.names[j].clone(), terms });
            }
        }
        RingJson {
            basis: self
                .names
                .iter()
                .zip(&self.degrees)
                .map(|(n, &d)| NamedDegree { name: n.clone(), degree: d })
                .collect(),
            unit: self.unit.map(|u| self.names[u].clone()),
            novikov: self
                .novikov
                .iter()
                .zip(&self.novikov_degrees)
                .map(|(n, &d)| NamedDegree { name: n.clone(), degree: d })
                .collect(),
            products,
            pairing: (0..n).map(|i| (0..n).map(|j| self.pairing.get(i, j).to_string()).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedDegree {
    pub name: String,
    pub degree: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductJson {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingJson {
    pub basis: Vec<NamedDegree>,
    pub unit: Option<String>,
    pub novikov: Vec<NamedDegree>,
    pub products: Vec<ProductJson>,
    pub pairing: Vec<Vec<String>>,
}

/// The nonzero scalar `c` with `a = c·b`, if any.
pub fn proportionality(a: &[Scalar], b: &[Scalar]) -> Option<Scalar> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] * &b[k].inv();
    let scaled: Vector = b.iter().map(|x| x * &c).collect();
    (scaled.as_slice() == a && !c.is_zero()).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use num_traits::One;

    pub(crate) fn fl_classical() -> GradedRing {
        let pres = Presentation::parse(
            &["p1", "p2"],
            &[1, 1],
            &["p1^2 + p2^2 - p1*p2", "p1^3", "p2^3", "p1^2*p2 - p1*p2^2"],
            &[("1", "1"), ("p1", "p1"), ("p2", "p2"), ("p1^2", "p1^2"), ("p2^2", "p2^2"), ("p1^2*p2", "p1^2*p2")],
        )
        .unwrap();
        let names = pres.generators().to_vec();
        GradedRing::from_presentation(pres, &parse_poly("p1^2*p2", &names).unwrap(), Scalar::one()).unwrap()
    }

    #[test]
    fn classical_flag_ring_is_consistent() {
        let r = fl_classical();
        for v in r.check_all() {
            assert!(v.pass, "{v:?}");
        }
        // p1^3 = 0
        let p1 = r.basis_vector(1);
        let cube = r.mul(&r.mul(&p1, &p1), &p1);
        assert!(cube.iter().all(RationalFunction::is_zero));
    }

    #[test]
    fn perturbed_entry_breaks_frobenius() {
        let mut r = fl_classical();
        r.mult[1][1][5] = RationalFunction::one(0);
        r.mult[1][1][3] = RationalFunction::constant(0, Scalar::from_int(2));
        assert!(!r.check_frobenius().pass);
    }

    #[test]
    fn quantum_flag_ring_from_generator_matrices() {
        // the quantum multiplication by p1, p2 on QH*(Fl(1,2,3)) in the basis 1,p1,p2,p1^2,p2^2,p1^2p2
        let cl = fl_classical();
        let names = vec!["q1".to_string(), "q2".to_string()];
        let m = |rows: [[&str; 6]; 6]| {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|s| crate::algebra::parse_rational(s, &names).unwrap()).collect())
                .collect();
            RfMatrix::from_rows(2, rows).unwrap()
        };
        let p1 = m([
            ["0", "q1", "0", "0", "0", "q1*q2"],
            ["1", "0", "0", "0", "0", "0"],
            ["0", "0", "0", "q1", "0", "0"],
            ["0", "1", "1", "0", "0", "0"],
            ["0", "0", "1", "0", "0", "q1"],
            ["0", "0", "0", "0", "1", "0"],
        ]);
        let p2 = m([
            ["0", "0", "q2", "0", "0", "q1*q2"],
            ["0", "0", "0", "0", "q2", "0"],
            ["1", "0", "0", "0", "0", "0"],
            ["0", "1", "0", "0", "0", "q2"],
            ["0", "1", "1", "0", "0", "0"],
            ["0", "0", "0", "1", "0", "0"],
        ]);
        let q = GradedRing::from_generator_matrices(&cl, &[p1.clone(), p2], names, vec![4, 4]).unwrap();
        for v in q.check_all() {
            assert!(v.pass, "{v:?}");
        }
        assert_eq!(q.mul_matrix(&q.basis_vector(1)), p1);
    }
}
