use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::ifunction::{max_z_power, z_coefficient, IFunction, ZVec};
use crate::algebra::fit::rational_from_series;
use crate::algebra::{parse_poly, series_mul, Coeff, MultiIndex, Poly, Scalar, TruncatedSeries, Truncation};
use crate::error::{structural, Error, Result};

/// `Σ c(q) z^a (zD)^b` with coefficients to the left of the derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    rank: usize,
    truncation: Truncation,
    terms: BTreeMap<(u32, MultiIndex), TruncatedSeries<Scalar>>,
}

impl Operator {
    pub fn zero(rank: usize, truncation: Truncation) -> Self {
        Operator { rank, truncation, terms: BTreeMap::new() }
    }

    /// `c · z^a (zD)^b`.
    pub fn term(rank: usize, truncation: Truncation, a: u32, b: MultiIndex, c: TruncatedSeries<Scalar>) -> Self {
        let mut op = Operator::zero(rank, truncation);
        op.add_term(a, b, &c);
        op
    }

    /// A polynomial in the generators with `m_j` replaced by `zD_j`.
    pub fn from_generator_poly(p: &Poly, truncation: Truncation) -> Self {
        let mut op = Operator::zero(p.nvars(), truncation.clone());
        for (m, c) in p.terms() {
            let mut s = TruncatedSeries::zero(truncation.clone());
            s.add_term(MultiIndex::zero(truncation.bounds.len()), c);
            op.add_term(0, m.clone(), &s);
        }
        op
    }

    /// Parse an expression in `d1..dr`, `z` and `q1..qr`; `dk` means `z q_k ∂/∂q_k`.
    pub fn parse(expr: &str, rank: usize, truncation: Truncation) -> Result<Self> {
        let mut names: Vec<String> = (1..=rank).map(|k| format!("d{k}")).collect();
        names.push("z".into());
        names.extend((1..=rank).map(|k| format!("q{k}")));
        let p = parse_poly(expr, &names)?;
        let mut op = Operator::zero(rank, truncation.clone());
        for (m, c) in p.terms() {
            let b = MultiIndex(m.0[..rank].to_vec());
            let a = m.0[rank];
            let beta = MultiIndex(m.0[rank + 1..].to_vec());
            let mut s = TruncatedSeries::zero(truncation.clone());
            s.add_term(beta, c);
            op.add_term(a, b, &s);
        }
        Ok(op)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, MultiIndex), TruncatedSeries<Scalar>> {
        &self.terms
    }

    fn add_term(&mut self, a: u32, b: MultiIndex, c: &TruncatedSeries<Scalar>) {
        let e = self.terms.entry((a, b.clone())).or_insert_with(|| TruncatedSeries::zero(self.truncation.clone()));
        *e = e.add(c).expect("same truncation");
        if e.terms().is_empty() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, o: &Operator) -> Operator {
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(*a, b.clone(), c);
        }
        out
    }

    /// Left multiplication by `c(q) z^k`.
    pub fn times(&self, c: &TruncatedSeries<Scalar>, k: u32) -> Result<Operator> {
        let mut out = Operator::zero(self.rank, self.truncation.clone());
        for ((a, b), s) in &self.terms {
            out.add_term(a + k, b.clone(), &series_mul(c, s)?);
        }
        Ok(out)
    }

    /// Coefficients fitted to closed forms, printed in `d1..dr`, `z`, `q1..qr`.
    pub fn format_fitted(&self, ansatz: &[Poly], degree_cap: u32, margin: u32) -> String {
        let qnames: Vec<String> = (1..=self.rank).map(|k| format!("q{k}")).collect();
        let mut parts = Vec::new();
        for ((a, b), s) in &self.terms {
            let coeff = match rational_from_series(s, ansatz, degree_cap, margin) {
                Ok(f) => f.format_with(&qnames),
                Err(_) => format!("[{}]", s.to_poly().format_with(&qnames)),
            };
            let mut factors = Vec::new();
            if *a > 0 {
                factors.push(if *a == 1 { "z".to_string() } else { format!("z^{a}") });
            }
            for (k, &e) in b.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("d{}", k + 1));
                } else if e > 1 {
                    factors.push(format!("d{}^{e}", k + 1));
                }
            }
            let mono = factors.join("*");
            parts.push(match (coeff.as_str(), mono.is_empty()) {
                (c, true) => c.to_string(),
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                (c, false) => format!("({c})*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Applies operators to `Ĩ`, caching `(zD)^b Ĩ`.
pub struct Applier<'a> {
    ifn: &'a IFunction,
    cache: HashMap<MultiIndex, TruncatedSeries<ZVec>>,
}

impl<'a> Applier<'a> {
    pub fn new(ifn: &'a IFunction) -> Self {
        Applier { ifn, cache: HashMap::new() }
    }

    pub fn ifunction(&self) -> &IFunction {
        self.ifn
    }

    fn power(&mut self, b: &MultiIndex) -> TruncatedSeries<ZVec> {
        if let Some(s) = self.cache.get(b) {
            return s.clone();
        }
        let s = match b.0.iter().position(|&e| e > 0) {
            None => self.ifn.terms().clone(),
            Some(j) => {
                let prev = self.power(&b.checked_sub(&MultiIndex::unit(b.len(), j)).expect("positive"));
                self.ifn.apply_zd(j, &prev)
            }
        };
        self.cache.insert(b.clone(), s.clone());
        s
    }

    pub fn apply(&mut self, op: &Operator) -> Result<TruncatedSeries<ZVec>> {
        let mut out = TruncatedSeries::zero(self.ifn.truncation().clone());
        for ((a, b), c) in &op.terms {
            let p = self.power(b);
            let shifted = p.map(|z| z.shift(*a as i32));
            out = out.add(&shifted.mul_scalar_series(c)?)?;
        }
        Ok(out)
    }
}

/// Operators `D_i` with `D_i Ĩ = φ_i + O(z^{-1})`, and the series `D_i Ĩ`.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub operators: Vec<Operator>,
    pub applied: Vec<TruncatedSeries<ZVec>>,
}

/// Does `s = φ_target + O(z^{-1})` hold exactly within the truncation?
pub fn leading_term_is(s: &TruncatedSeries<ZVec>, target: usize, dim: usize) -> Option<String> {
    if let Some(k) = max_z_power(s) {
        if k > 0 {
            return Some(format!("positive power z^{k} survives"));
        }
    }
    let z0 = z_coefficient(s, 0, dim);
    for (t, c) in z0.iter().enumerate() {
        let want = if t == target { Scalar::from_int(1) } else { Scalar::zero() };
        let mut d = c.clone();
        d.add_term(MultiIndex::zero(c.variable_count()), &-want);
        if !d.terms().is_empty() {
            return Some(format!("z^0 coefficient along basis element {t} is {}", d.to_poly()));
        }
    }
    None
}

/// Greedy search, by increasing degree then basis order: start from `P_i(zD)` and cancel
/// non-negative powers of `z` with series multiples of operators already found.
pub fn find_extraction_operators(ifn: &IFunction, targets: &[Poly]) -> Result<Extraction> {
    let n = ifn.ring().dim();
    if targets.len() != n {
        return Err(structural("one target per basis element expected"));
    }
    let trunc = ifn.truncation().clone();
    let nv = trunc.bounds.len();
    let degrees = ifn.basis_degrees().to_vec();
    let mut applier = Applier::new(ifn);
    let mut ops: Vec<Option<Operator>> = vec![None; n];
    let mut applied: Vec<Option<TruncatedSeries<ZVec>>> = vec![None; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| degrees[i]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match blocks.last_mut() {
            Some(b) if degrees[b[0]] == degrees[i] => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    for block in blocks {
        let k = block.len();
        let mut e = vec![vec![TruncatedSeries::zero(trunc.clone()); k]; k];
        let mut bops = Vec::new();
        let mut bres = Vec::new();
        for (t, &i) in block.iter().enumerate() {
            let mut op = Operator::from_generator_poly(&targets[i], trunc.clone());
            let mut res = applier.apply(&op)?;
            let top = max_z_power(&res).unwrap_or(0);
            for power in (0..=top.max(0)).rev() {
                let mut coeffs = z_coefficient(&res, power, n);
                if power == 0 {
                    coeffs[i].add_term(MultiIndex::zero(nv), &Scalar::from_int(-1));
                }
                for (u, c) in coeffs.into_iter().enumerate() {
                    if c.terms().is_empty() {
                        continue;
                    }
                    if let Some(s) = block.iter().position(|&x| x == u).filter(|_| power == 0) {
                        e[t][s] = c;
                        continue;
                    }
                    let (Some(du), Some(au)) = (&ops[u], &applied[u]) else {
                        return Err(Error::InsufficientTruncation(format!(
                            "cancelling z^{power} in the operator for basis element {i} needs basis element {u}, not yet available"
                        )));
                    };
                    let neg = c.neg();
                    op = op.add(&du.times(&neg, power as u32)?);
                    res = res.add(&au.map(|z| z.shift(power)).mul_scalar_series(&neg)?)?;
                }
            }
            bops.push(op);
            bres.push(res);
        }
        // D'_t Ĩ = Σ_s (I + E)_{ts} φ_s + O(z^{-1}); invert I + E over the truncated series
        let inv = series_matrix_inverse(&e, &trunc)?;
        for (t, &i) in block.iter().enumerate() {
            let mut op = Operator::zero(nv, trunc.clone());
            let mut res = TruncatedSeries::zero(trunc.clone());
            for s in 0..k {
                if inv[t][s].terms().is_empty() {
                    continue;
                }
                op = op.add(&bops[s].times(&inv[t][s], 0)?);
                res = res.add(&bres[s].mul_scalar_series(&inv[t][s])?)?;
            }
            if let Some(w) = leading_term_is(&res, i, n) {
                return Err(Error::InsufficientTruncation(format!("operator for basis element {i}: {w}")));
            }
            ops[i] = Some(op);
            applied[i] = Some(res);
        }
    }
    Ok(Extraction {
        operators: ops.into_iter().map(|o| o.expect("built")).collect(),
        applied: applied.into_iter().map(|o| o.expect("built")).collect(),
    })
}

/// `(I + E)^{-1}` for `E` without constant terms, by the Neumann series.
fn series_matrix_inverse(
    e: &[Vec<TruncatedSeries<Scalar>>],
    trunc: &Truncation,
) -> Result<Vec<Vec<TruncatedSeries<Scalar>>>> {
    let k = e.len();
    let nv = trunc.bounds.len();
    let one = {
        let mut s = TruncatedSeries::zero(trunc.clone());
        s.add_term(MultiIndex::zero(nv), &Scalar::from_int(1));
        s
    };
    if e.iter().flatten().any(|s| s.get(&MultiIndex::zero(nv)).is_some_and(|c| !c.is_null())) {
        return Err(structural("same-degree correction has a constant term"));
    }
    let ident: Vec<Vec<TruncatedSeries<Scalar>>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { one.clone() } else { TruncatedSeries::zero(trunc.clone()) }).collect())
        .collect();
    let mut acc = ident.clone();
    let mut power = ident;
    loop {
        // power ← -E · power
        let mut next = vec![vec![TruncatedSeries::zero(trunc.clone()); k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut s = TruncatedSeries::zero(trunc.clone());
                for l in 0..k {
                    if e[i][l].terms().is_empty() || power[l][j].terms().is_empty() {
                        continue;
                    }
                    s = s.add(&series_mul(&e[i][l], &power[l][j])?)?;
                }
                next[i][j] = s.neg();
            }
        }
        if next.iter().flatten().all(|s| s.terms().is_empty()) {
            return Ok(acc);
        }
        for i in 0..k {
            for j in 0..k {
                acc[i][j] = acc[i][j].add(&next[i][j])?;
            }
        }
        power = next;
    }
}
