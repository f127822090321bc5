use rayon::prelude::*;

use crate::algebra::rfmatrix::{rf_axpy, rf_vec_from_scalar, rf_vec_monomial_parts, rf_vec_zero};
use crate::algebra::{Matrix, RationalFunction, RfVector, Scalar, Subspace, Vector};
use crate::error::{structural, Error, Result};
use crate::ring::{subquotient, GradedRing, QuotientRep};
use crate::verdict::Verdict;

use super::theta::ThetaMap;

/// Everything needed to compare a subquotient of the resolution's quantum ring with the smoothing.
pub struct TransitionInput<'a> {
    pub ring: &'a GradedRing,
    pub v: &'a Subspace,
    pub w: &'a Subspace,
    /// Novikov variables set to 1.
    pub exceptional: &'a [usize],
    /// `(resolution variable, smoothing variable)`; must cover every smoothing variable once.
    pub identification: &'a [(usize, usize)],
    pub theta: &'a ThetaMap,
    /// Named divisor classes in `V` whose operators are compared.
    pub divisors: &'a [(String, Vector)],
    pub target: &'a GradedRing,
}

#[derive(Clone, Debug)]
pub struct TransitionOutcome {
    pub verdicts: Vec<Verdict>,
    pub quotient: Option<GradedRing>,
    /// Columns: θ of the quotient representatives.
    pub theta_matrix: Option<Matrix>,
}

impl TransitionOutcome {
    pub fn pass(&self) -> bool {
        crate::verdict::all_pass(&self.verdicts)
    }
}

/// Indices of representatives of `V/W` taken from `candidates` in order.
pub fn choose_representatives(v: &Subspace, w: &Subspace, candidates: &[Vector]) -> Result<Vec<usize>> {
    let mut acc = w.clone();
    let mut out = Vec::new();
    for (k, c) in candidates.iter().enumerate() {
        if v.contains(c) && !acc.contains(c) {
            acc = acc.sum(&Subspace::span(v.ambient(), [c.clone()]));
            out.push(k);
        }
    }
    if acc.dim() != v.dim() {
        return Err(structural(format!("candidates span {} of the {} dimensions of V", acc.dim(), v.dim())));
    }
    Ok(out)
}

fn evaluate_at_one(ring: &GradedRing, p: &mut RfVector, exceptional: &[usize]) -> Result<()> {
    let point: Vec<(usize, Scalar)> = exceptional.iter().map(|&k| (k, Scalar::from_int(1))).collect();
    for x in p.iter_mut() {
        *x = x.substitute_all(&point, ring.novikov())?;
    }
    Ok(())
}

/// Products of a basis of `V` built from `reps` and a basis of `W`: regular at the exceptional point,
/// landing in `V`, and `W ⋆ V ⊆ W`.
pub fn check_products(
    ring: &GradedRing,
    reps: &[Vector],
    w: &Subspace,
    v: &Subspace,
    exceptional: &[usize],
) -> Vec<Verdict> {
    let basis: Vec<(Vector, bool)> =
        reps.iter().map(|r| (r.clone(), false)).chain(w.basis().iter().map(|b| (b.clone(), true))).collect();
    let pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|i| (i..basis.len()).map(move |j| (i, j))).collect();
    struct Pair {
        i: usize,
        j: usize,
        pole: bool,
        escapes_v: bool,
        escapes_w: bool,
    }
    let results: Vec<Pair> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut p = ring.mul(&ring.lift(&basis[i].0), &ring.lift(&basis[j].0));
            if evaluate_at_one(ring, &mut p, exceptional).is_err() {
                return Pair { i, j, pole: true, escapes_v: false, escapes_w: false };
            }
            let parts = rf_vec_monomial_parts(&p);
            let in_v = parts.iter().all(|x| v.contains(x));
            let in_w = !(basis[i].1 || basis[j].1) || parts.iter().all(|x| w.contains(x));
            Pair { i, j, pole: false, escapes_v: !in_v, escapes_w: !in_w }
        })
        .collect();
    let first =
        |f: fn(&Pair) -> bool| results.iter().find(|r| f(r)).map(|r| format!("basis elements {} and {}", r.i, r.j));
    vec![
        Verdict::from_witness("products in V are regular at q_exc = 1", first(|r| r.pole)),
        Verdict::from_witness("products in V stay in V", first(|r| r.escapes_v)),
        Verdict::from_witness("W ⋆ V ⊆ W", first(|r| r.escapes_w)),
    ]
}

fn apply_scalar(m: &Matrix, v: &[RationalFunction], nvars: usize) -> RfVector {
    let mut out = rf_vec_zero(m.rows(), nvars);
    for (k, x) in v.iter().enumerate() {
        rf_axpy(&mut out, x, &rf_vec_from_scalar(&m.col(k), nvars));
    }
    out
}

fn show(v: &[RationalFunction], names: &[String]) -> String {
    format!("[{}]", v.iter().map(|x| x.format_with(names)).collect::<Vec<_>>().join(", "))
}

/// The comparison: closure at `q_exc = 1`, intertwining of divisor operators, products and pairing.
pub fn verify_transition(input: &TransitionInput) -> Result<TransitionOutcome> {
    let ring = input.ring;
    let target = input.target;
    let mut verdicts = Vec::new();

    let mut ident = input.identification.to_vec();
    ident.sort_by_key(|&(_, t)| t);
    let keep: Vec<usize> = ident.iter().map(|&(r, _)| r).collect();
    let covers = ident.iter().map(|&(_, t)| t).eq(0..target.nvars());
    let degrees_match = ident.iter().all(|&(r, t)| ring.novikov_degrees()[r] == target.novikov_degrees()[t]);
    verdicts.push(Verdict::from_witness(
        "Novikov identification preserves degrees",
        (!covers || !degrees_match).then(|| format!("{:?}", input.identification)),
    ));
    if !covers {
        return Ok(TransitionOutcome { verdicts, quotient: None, theta_matrix: None });
    }

    let chosen = choose_representatives(input.v, input.w, input.theta.sources())?;
    let reps: Vec<Vector> = chosen.iter().map(|&k| input.theta.sources()[k].clone()).collect();
    verdicts.extend(check_products(ring, &reps, input.w, input.v, input.exceptional));
    let kernel = input.theta.kernel().intersect(input.v);
    verdicts.push(Verdict::from_witness(
        "ker θ = W",
        (kernel != *input.w).then(|| format!("dim ker θ = {}, dim W = {}", kernel.dim(), input.w.dim())),
    ));

    let named: Vec<QuotientRep> = chosen
        .iter()
        .map(|&k| QuotientRep::new(input.theta.labels()[k].clone(), input.theta.sources()[k].clone()))
        .collect();
    let evaluation: Vec<(usize, Scalar)> = input.exceptional.iter().map(|&k| (k, Scalar::from_int(1))).collect();
    let quotient = match subquotient(ring, input.v, input.w, &evaluation, &named, &keep) {
        Ok(q) => q,
        Err(e @ (Error::EvaluationPole { .. } | Error::NotClosed { .. } | Error::DegeneratePairing)) => {
            verdicts.push(Verdict::fail("quotient ring exists", e.to_string()));
            return Ok(TransitionOutcome { verdicts, quotient: None, theta_matrix: None });
        }
        Err(e) => return Err(e),
    };

    let cols = reps
        .iter()
        .map(|r| input.theta.apply(r).ok_or_else(|| structural("representative outside the domain of θ")))
        .collect::<Result<Vec<_>>>()?;
    let th = Matrix::from_cols(target.dim(), &cols);
    let r = reps.len();
    let injective = th.rank() == r;
    let surjective = th.rank() == target.dim();
    verdicts.push(Verdict::from_witness(
        "θ injective on V/W",
        (!injective).then(|| format!("rank {} on a quotient of dimension {r}", th.rank())),
    ));
    verdicts.push(
        Verdict::pass(if surjective { "θ is onto" } else { "θ is onto a proper subspace" }).with_note(format!(
            "image dimension {} of {}",
            th.rank(),
            target.dim()
        )),
    );

    let nv = quotient.nvars();
    let mut basis_w = reps.clone();
    basis_w.extend(input.w.basis().iter().cloned());
    let full = Matrix::from_cols(ring.dim(), &basis_w);
    for (name, g) in input.divisors {
        let coords = full.solve(g).ok_or_else(|| structural(format!("divisor {name} is not in V")))?;
        let gq = rf_vec_from_scalar(&coords[..r], nv);
        let tg = input.theta.apply(g).ok_or_else(|| structural(format!("θ undefined on {name}")))?;
        let mq = quotient.mul_matrix(&gq);
        let mt = target.mul_matrix(&rf_vec_from_scalar(&tg, nv));
        let mut bad = None;
        for t in 0..r {
            let lhs = apply_scalar(&th, &mq.col(t), nv);
            let rhs = mt.mul_vec(&rf_vec_from_scalar(&th.col(t), nv));
            if lhs != rhs {
                bad = Some(format!(
                    "on {}: θ({name}⋆x) = {}, θ({name})⋆θ(x) = {}",
                    quotient.names()[t],
                    show(&lhs, target.novikov()),
                    show(&rhs, target.novikov())
                ));
                break;
            }
        }
        verdicts.push(Verdict::from_witness(format!("θ intertwines {name}⋆"), bad));
    }

    let mut bad = None;
    'outer: for a in 0..r {
        for b in a..r {
            let lhs = apply_scalar(&th, quotient.product(a, b), nv);
            let rhs = target.mul(&rf_vec_from_scalar(&th.col(a), nv), &rf_vec_from_scalar(&th.col(b), nv));
            if lhs != rhs {
                bad = Some(format!(
                    "{} ⋆ {}: {} vs {}",
                    quotient.names()[a],
                    quotient.names()[b],
                    show(&lhs, target.novikov()),
                    show(&rhs, target.novikov())
                ));
                break 'outer;
            }
        }
    }
    let products_ok = bad.is_none();
    verdicts.push(Verdict::from_witness("θ(a⋆b) = θ(a)⋆θ(b)", bad));

    let induced = &(&th.transpose() * target.pairing()) * &th;
    let pairing_bad = (0..r)
        .flat_map(|a| (0..r).map(move |b| (a, b)))
        .find(|&(a, b)| induced.get(a, b) != quotient.pairing().get(a, b));
    verdicts.push(Verdict::from_witness(
        "θ preserves the pairing",
        pairing_bad.map(|(a, b)| {
            format!(
                "<θ{0}, θ{1}> = {2}, <{0}, {1}> = {3}",
                quotient.names()[a],
                quotient.names()[b],
                induced.get(a, b),
                quotient.pairing().get(a, b)
            )
        }),
    ));

    let generated =
        generated_dim(&quotient, input.divisors.iter().map(|(_, g)| full.solve(g).expect("checked")[..r].to_vec()));
    let intertwined = verdicts.iter().filter(|v| v.check.starts_with("θ intertwines")).all(|v| v.pass);
    let how = match generated {
        Some(d) if d == r => "divisors generate the quotient".to_string(),
        Some(d) => format!("divisors generate {d} of {r} dimensions; all products compared directly"),
        None => "no unit among the representatives; all products compared directly".to_string(),
    };
    let ok = (generated == Some(r) && intertwined) || products_ok;
    verdicts.push(Verdict::from_witness("θ is a ring map on the quotient", (!ok).then(|| how.clone())).with_note(how));

    Ok(TransitionOutcome { verdicts, quotient: Some(quotient), theta_matrix: Some(th) })
}

/// Dimension spanned by the unit under repeated classical divisor operators.
fn generated_dim(quotient: &GradedRing, divisors: impl Iterator<Item = Vector>) -> Option<usize> {
    let cl = quotient.classical_limit().ok()?;
    let u = cl.unit()?;
    let ops: Vec<Matrix> =
        divisors.map(|g| cl.mul_matrix(&rf_vec_from_scalar(&g, 0)).to_scalar().expect("classical")).collect();
    let n = cl.dim();
    let mut span = Subspace::span(n, [crate::algebra::linalg::unit_vec(n, u)]);
    loop {
        let next = ops.iter().fold(span.clone(), |acc, m| acc.sum(&span.map(m)));
        if next.dim() == span.dim() {
            return Some(span.dim());
        }
        span = next;
    }
}
