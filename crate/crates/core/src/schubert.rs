//! Quantum Schubert calculus on Gr(2,n), and the quantum rings of the smoothings.

use std::collections::BTreeMap;

use crate::algebra::rfmatrix::rf_vec_zero;
use crate::algebra::{parse_poly, Matrix, MultiIndex, Poly, RationalFunction, RfMatrix, RfVector, Scalar, Vector};
use crate::error::{structural, Result};
use crate::fixtures;
use crate::ring::{GradedRing, Presentation};

/// A Schubert class of Gr(2,n), `n-2 ≥ a1 ≥ a2 ≥ 0`.
pub type Pair = (usize, usize);

/// Schubert classes of Gr(2,n) in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertBasis {
    n: usize,
    pairs: Vec<Pair>,
}

impl SchubertBasis {
    /// Ordered by degree, then by `a1`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(structural("Gr(2,n) needs n ≥ 3"));
        }
        let mut pairs: Vec<Pair> = (0..=n - 2).flat_map(|a| (0..=a).map(move |b| (a, b))).collect();
        pairs.sort_by_key(|&(a, b)| (a + b, a));
        Ok(SchubertBasis { n, pairs })
    }

    pub fn with_order(n: usize, pairs: Vec<Pair>) -> Result<Self> {
        let mut want = SchubertBasis::new(n)?.pairs;
        let mut got = pairs.clone();
        want.sort_unstable();
        got.sort_unstable();
        if want != got {
            return Err(structural(format!("not an ordering of the Schubert classes of Gr(2,{n})")));
        }
        Ok(SchubertBasis { n, pairs })
    }

    /// From names `w<a1><a2>`.
    pub fn from_names(n: usize, names: &[String]) -> Result<Self> {
        let pairs = names.iter().map(|s| parse_name(s)).collect::<Result<_>>()?;
        SchubertBasis::with_order(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn index_of(&self, p: Pair) -> Option<usize> {
        self.pairs.iter().position(|&x| x == p)
    }

    pub fn names(&self) -> Vec<String> {
        self.pairs.iter().map(|&p| name(p)).collect()
    }

    /// Poincaré dual class.
    pub fn dual(&self, (a, b): Pair) -> Pair {
        (self.n - 2 - b, self.n - 2 - a)
    }

    fn check(&self, p: Pair) -> Result<()> {
        if p.0 > self.n - 2 || p.1 > p.0 {
            return Err(structural(format!("({}, {}) is not a Schubert class of Gr(2,{})", p.0, p.1, self.n)));
        }
        Ok(())
    }
}

pub fn name((a, b): Pair) -> String {
    format!("w{a}{b}")
}

fn parse_name(s: &str) -> Result<Pair> {
    let digits: Vec<u32> =
        s.strip_prefix('w').map(|r| r.chars().filter_map(|c| c.to_digit(10)).collect()).unwrap_or_default();
    match digits[..] {
        [a, b] if s.len() == 3 => Ok((a as usize, b as usize)),
        _ => Err(structural(format!("bad Schubert class name {s:?}"))),
    }
}

/// `s_λ s_μ` in two variables: `Σ_j s_{(a+c-j, b+d+j)}` for `0 ≤ j ≤ min(a-b, c-d)`.
fn schur_product((a, b): Pair, (c, d): Pair) -> Vec<Pair> {
    (0..=(a - b).min(c - d)).map(|j| (a + c - j, b + d + j)).collect()
}

/// Strip `n`-rim hooks until the shape fits in the `2 × (n-2)` box.
/// Returns `(sign, q power, shape)`, or `None` when the class vanishes.
fn rim_hook_reduce(n: usize, (a, b): Pair) -> Option<(i64, u32, Pair)> {
    // beta numbers λ_i + 2 - i
    let (mut b0, mut b1) = (a + 1, b);
    let mut sign = 1;
    let mut qpow = 0;
    while b0 >= n {
        let r = b0 - n;
        if r == b1 {
            return None;
        }
        if r < b1 {
            // hook of height 2: sign (-1)^(2-2)
            (b0, b1) = (b1, r);
        } else {
            sign = -sign;
            b0 = r;
        }
        qpow += 1;
    }
    Some((sign, qpow, (b0 - 1, b1)))
}

/// `σ_λ ⋆ σ_μ` as `(shape, q power) → coefficient`.
pub fn quantum_product(basis: &SchubertBasis, l: Pair, m: Pair) -> Result<BTreeMap<(Pair, u32), i64>> {
    basis.check(l)?;
    basis.check(m)?;
    let mut out = BTreeMap::new();
    for shape in schur_product(l, m) {
        if let Some((s, k, nu)) = rim_hook_reduce(basis.n, shape) {
            *out.entry((nu, k)).or_insert(0) += s;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// The quantum ring of Gr(2,n) on the Schubert basis, Novikov variable `q` of degree `2n`.
pub fn grassmannian_ring(basis: &SchubertBasis) -> Result<GradedRing> {
    let n = basis.pairs.len();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, &l) in basis.pairs.iter().enumerate() {
        for (j, &m) in basis.pairs.iter().enumerate() {
            let mut v: Vec<Poly> = vec![Poly::zero(1); n];
            for ((nu, k), c) in quantum_product(basis, l, m)? {
                let t = basis.index_of(nu).expect("reduced shape lies in the box");
                v[t].add_term(MultiIndex(vec![k]), Scalar::from_int(c));
            }
            mult[i][j] = v.into_iter().map(RationalFunction::from_poly).collect();
        }
    }
    let mut pairing = Matrix::zero(n, n);
    for (i, &p) in basis.pairs.iter().enumerate() {
        let j = basis.index_of(basis.dual(p)).expect("dual in the box");
        pairing.set(i, j, Scalar::from_int(1));
    }
    let degrees = basis.pairs.iter().map(|&(a, b)| 2 * (a + b) as i64).collect();
    GradedRing::new(
        basis.names(),
        degrees,
        basis.index_of((0, 0)),
        vec!["q".into()],
        vec![2 * basis.n as i64],
        mult,
        pairing,
    )
}

/// Coordinates of each presentation basis element, with the generators sent to `generators`.
fn basis_change(classical: &GradedRing, pres: &Presentation, generators: &[RfVector]) -> Result<Matrix> {
    let cols = pres
        .basis()
        .iter()
        .map(|(_, p)| {
            let v = classical.eval_poly(p, generators)?;
            v.iter()
                .map(|x| x.as_scalar().ok_or_else(|| structural("classical value expected")))
                .collect::<Result<Vector>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(classical.dim(), &cols))
}

/// Re-express a quantum ring in the basis of a presentation, with the presentation's generators
/// sent to the given classes, and assemble the quantum ring of the presentation from the
/// transported generator matrices.
pub fn transport_to_presentation(
    quantum: &GradedRing,
    pres: Presentation,
    generators: &[Pair],
    basis: &SchubertBasis,
    normalization: &Poly,
    value: Scalar,
) -> Result<GradedRing> {
    let nv = quantum.nvars();
    let classical_schubert = quantum.classical_limit()?;
    let gens: Vec<RfVector> = generators
        .iter()
        .map(|&p| {
            basis.index_of(p).map(|i| classical_schubert.basis_vector(i)).ok_or_else(|| structural("unknown class"))
        })
        .collect::<Result<_>>()?;
    let p = basis_change(&classical_schubert, &pres, &gens)?;
    let pinv = p.inverse().ok_or_else(|| structural("presentation basis is not a basis"))?;
    let (p, pinv) = (RfMatrix::from_scalar(&p, nv), RfMatrix::from_scalar(&pinv, nv));
    let matrices: Vec<RfMatrix> = gens.iter().map(|g| pinv.mul(&quantum.mul_matrix(&lift_rf(g, nv))).mul(&p)).collect();
    let classical = GradedRing::from_presentation(pres, normalization, value)?;
    GradedRing::from_generator_matrices(
        &classical,
        &matrices,
        quantum.novikov().to_vec(),
        quantum.novikov_degrees().to_vec(),
    )
}

fn lift_rf(v: &[RationalFunction], nv: usize) -> RfVector {
    let mut out = rf_vec_zero(v.len(), nv);
    for (o, x) in out.iter_mut().zip(v) {
        *o = RationalFunction::constant(nv, x.as_scalar().expect("classical"));
    }
    out
}

/// Gr(2,4) presented by `d = ω_(1,0)` and `δ = ω_(1,1)`.
pub fn gr24_presentation() -> Result<Presentation> {
    Presentation::parse(
        &["d", "delta"],
        &[1, 2],
        &["d^3 - 2*d*delta", "d^2*delta - delta^2"],
        &[("1", "1"), ("d", "d"), ("d^2", "d^2"), ("d^2-2*delta", "d^2-2*delta"), ("d^3", "d^3"), ("d^4", "d^4")],
    )
}

pub fn gr24_ring() -> Result<GradedRing> {
    let basis = SchubertBasis::new(4)?;
    let q = grassmannian_ring(&basis)?;
    let pres = gr24_presentation()?;
    let norm = parse_poly("d^4", pres.generators())?;
    transport_to_presentation(&q, pres, &[(1, 0), (1, 1)], &basis, &norm, Scalar::from_int(2))
}

/// Gr(2,5) on the Schubert basis in the order used by the reference matrices.
pub fn gr25_ring() -> Result<GradedRing> {
    let fx = fixtures::matrix("gr25_w10")?;
    grassmannian_ring(&SchubertBasis::from_names(5, &fx.basis)?)
}

/// Fl(1,2,3): classical ring from its presentation, quantum products from the reference
/// matrices of `p1⋆` and `p2⋆`. Ring axioms are checked here.
pub fn fl123_ring() -> Result<GradedRing> {
    let pres = Presentation::parse(
        &["p1", "p2"],
        &[1, 1],
        &["p1^2 + p2^2 - p1*p2", "p1^3", "p2^3", "p1^2*p2 - p1*p2^2"],
        &[("1", "1"), ("p1", "p1"), ("p2", "p2"), ("p1^2", "p1^2"), ("p2^2", "p2^2"), ("p1^2*p2", "p1^2*p2")],
    )?;
    let norm = parse_poly("p1^2*p2", pres.generators())?;
    let classical = GradedRing::from_presentation(pres, &norm, Scalar::from_int(1))?;
    let p1 = fixtures::matrix("fl123_p1")?;
    let p2 = fixtures::matrix("fl123_p2")?;
    if p1.basis != classical.names() || p2.basis != classical.names() {
        return Err(structural("reference matrices use a different basis"));
    }
    let q = GradedRing::from_generator_matrices(
        &classical,
        &[p1.to_matrix()?, p2.to_matrix()?],
        p1.variables.clone(),
        vec![4, 4],
    )?;
    if let Some(v) = q.check_all().into_iter().find(|v| !v.pass) {
        return Err(structural(format!(
            "Fl(1,2,3) reference ring fails {}: {}",
            v.check,
            v.witness.unwrap_or_default()
        )));
    }
    if q.classical_limit()?.same_products(&classical).is_some() {
        return Err(structural("classical limit of the Fl(1,2,3) ring differs from its presentation"));
    }
    Ok(q)
}
