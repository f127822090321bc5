//! Rational fans: parsing, validation, faces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Matrix, Scalar, Vector};
use crate::error::{structural, Result};

pub type Ray = Vec<i64>;

/// Rays and maximal cones (0-based ray indices, sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub rays: usize,
    pub maximal_cones: usize,
    pub primitive_rays: bool,
    pub simplicial: bool,
    pub smooth: bool,
    /// Every facet of a maximal cone lies in exactly two maximal cones.
    pub facet_pairing: bool,
    pub sampled_directions: usize,
    pub sampled_covered: usize,
    /// Facet pairing plus coverage of every sampled direction; necessary, not sufficient.
    pub pseudo_complete: bool,
}

pub(crate) fn to_vector(r: &[i64]) -> Vector {
    r.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn ray_matrix(rays: &[&Ray]) -> Matrix {
    Matrix::from_rows(rays.iter().map(|r| to_vector(r)).collect())
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Ray>, cones: Vec<Vec<usize>>) -> Result<Self> {
        if rays.iter().any(|r| r.len() != dim) {
            return Err(structural("ray of the wrong dimension"));
        }
        let mut cs = Vec::with_capacity(cones.len());
        for c in cones {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            if set.len() != c.len() || c.iter().any(|&i| i >= rays.len()) {
                return Err(structural(format!("malformed cone {c:?}")));
            }
            cs.push(set.into_iter().collect());
        }
        Ok(Fan { dim, rays, cones: cs })
    }

    /// Text format: optional `#` comment lines, one ray per line, a blank line,
    /// then one maximal cone per line as 1-based ray indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rays = Vec::new();
        let mut cones = Vec::new();
        let mut in_cones = false;
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !rays.is_empty() {
                    in_cones = true;
                }
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| structural(format!("bad integer {t:?} in fan file"))))
                .collect::<Result<Vec<_>>>()?;
            if in_cones {
                let idx = nums
                    .iter()
                    .map(|&k| if k >= 1 { Ok(k as usize - 1) } else { Err(structural("ray indices are 1-based")) })
                    .collect::<Result<Vec<_>>>()?;
                cones.push(idx);
            } else {
                rays.push(nums);
            }
        }
        let dim = rays.first().map_or(0, Vec::len);
        Fan::new(dim, rays, cones)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rays {
            out.push_str(&r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out.push('\n');
        for c in &self.cones {
            out.push_str(&c.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    fn cone_matrix(&self, c: &[usize]) -> Matrix {
        ray_matrix(&c.iter().map(|&i| &self.rays[i]).collect::<Vec<_>>())
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| c.len() == self.dim && self.cone_matrix(c).rank() == self.dim)
    }

    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && self.cones.iter().all(|c| {
                let d = self.cone_matrix(c).det();
                d == Scalar::from_int(1) || d == Scalar::from_int(-1)
            })
    }

    /// Facets of a maximal cone as ray-index sets.
    pub fn facets_of(&self, c: &[usize]) -> Vec<Vec<usize>> {
        if c.len() == self.dim {
            return (0..c.len())
                .map(|k| c.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &i)| i).collect())
                .collect();
        }
        let mut out = BTreeSet::new();
        for sub in subsets(c, self.dim - 1) {
            let Some(u) = hyperplane_normal(self.dim, &sub.iter().map(|&i| &self.rays[i]).collect::<Vec<_>>()) else {
                continue;
            };
            let vals: Vec<Scalar> =
                c.iter().map(|&i| crate::algebra::linalg::dot(&u, &to_vector(&self.rays[i]))).collect();
            let pos = vals.iter().any(|v| v.re.is_positive());
            let neg = vals.iter().any(|v| v.re.is_negative());
            if pos && neg {
                continue;
            }
            let face: Vec<usize> = c.iter().zip(&vals).filter(|(_, v)| v.is_zero()).map(|(&i, _)| i).collect();
            out.insert(face);
        }
        out.into_iter().collect()
    }

    fn facet_pairing(&self) -> bool {
        let mut count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &self.cones {
            for f in self.facets_of(c) {
                *count.entry(f).or_default() += 1;
            }
        }
        !count.is_empty() && count.values().all(|&k| k == 2)
    }

    /// Is `p` in the (closed) cone?
    pub fn cone_contains(&self, c: &[usize], p: &[Scalar]) -> bool {
        // Carathéodory: p lies in some simplicial cone on independent rays of c
        for sub in subsets(c, self.dim) {
            let m = self.cone_matrix(&sub).transpose();
            if m.rank() < self.dim {
                continue;
            }
            if let Some(x) = m.solve(p) {
                if x.iter().all(|v| !v.re.is_negative()) {
                    return true;
                }
            }
        }
        false
    }

    pub fn validate(&self, samples: usize, seed: u64) -> FanReport {
        let primitive_rays = self.rays.iter().all(|r| r.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1);
        let simplicial = self.is_simplicial();
        let smooth = simplicial && self.is_smooth();
        let facet_pairing = self.facet_pairing();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut covered = 0;
        for _ in 0..samples {
            let p: Vector = (0..self.dim).map(|_| Scalar::from_int(rng.gen_range(-1000..=1000))).collect();
            if self.cones.iter().any(|c| self.cone_contains(c, &p)) {
                covered += 1;
            }
        }
        FanReport {
            rays: self.rays.len(),
            maximal_cones: self.cones.len(),
            primitive_rays,
            simplicial,
            smooth,
            facet_pairing,
            sampled_directions: samples,
            sampled_covered: covered,
            pseudo_complete: facet_pairing && covered == samples,
        }
    }

    /// Is the ray set a face of some maximal cone? (simplicial fans)
    pub fn is_face(&self, s: &[usize]) -> bool {
        self.cones.iter().any(|c| s.iter().all(|i| c.contains(i)))
    }

    /// Minimal ray sets that span no cone of the fan.
    pub fn primitive_collections(&self) -> Vec<Vec<usize>> {
        let n = self.rays.len();
        let mut out = Vec::new();
        for size in 1..=n {
            for s in subsets(&(0..n).collect::<Vec<_>>(), size) {
                if self.is_face(&s) {
                    continue;
                }
                let minimal = (0..s.len()).all(|k| {
                    let t: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &i)| i).collect();
                    self.is_face(&t)
                });
                if minimal {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Same rays and cones as sets of vectors, ignoring ray order.
    pub fn same_as(&self, o: &Fan) -> bool {
        let rays: BTreeSet<&Ray> = self.rays.iter().collect();
        let orays: BTreeSet<&Ray> = o.rays.iter().collect();
        let cones = |f: &Fan| -> BTreeSet<BTreeSet<Ray>> {
            f.cones.iter().map(|c| c.iter().map(|&i| f.rays[i].clone()).collect()).collect()
        };
        self.dim == o.dim && rays == orays && cones(self) == cones(o)
    }

    /// Find `A ∈ GL(d, Z)` and a ray bijection `σ` with `A r_i = r'_{σ(i)}` mapping cones to cones.
    /// Only the images of a basis are searched; incidence counts prune the search.
    pub fn unimodular_match(&self, o: &Fan) -> Option<(Matrix, Vec<usize>)> {
        let n = self.rays.len();
        if self.dim != o.dim || n != o.rays.len() || self.cones.len() != o.cones.len() {
            return None;
        }
        let basis = independent_subset(&self.rays, self.dim)?;
        let src_inv = ray_matrix(&basis.iter().map(|&i| &self.rays[i]).collect::<Vec<_>>()).transpose().inverse()?;
        let target_cones: BTreeSet<Vec<usize>> = o.cones.iter().cloned().collect();
        let target_rays: BTreeMap<&Ray, usize> = o.rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let (inc_a, inc_b) = (incidence(self), incidence(o));

        let mut images = Vec::with_capacity(basis.len());
        let mut try_map = |images: &[usize]| -> Option<(Matrix, Vec<usize>)> {
            let dst = ray_matrix(&images.iter().map(|&j| &o.rays[j]).collect::<Vec<_>>()).transpose();
            let a = &dst * &src_inv;
            if (0..self.dim).any(|i| (0..self.dim).any(|j| a.get(i, j).to_integer().is_none())) {
                return None;
            }
            let det = a.det();
            if det != Scalar::from_int(1) && det != Scalar::from_int(-1) {
                return None;
            }
            let mut perm = Vec::with_capacity(n);
            for r in &self.rays {
                let img: Ray = a
                    .mul_vec(&to_vector(r))
                    .iter()
                    .map(|x| x.to_integer().and_then(|z| i64::try_from(z).ok()))
                    .collect::<Option<Vec<i64>>>()?;
                perm.push(*target_rays.get(&img)?);
            }
            let mapped: BTreeSet<Vec<usize>> = self
                .cones
                .iter()
                .map(|c| {
                    let mut m: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            (mapped == target_cones).then_some((a, perm))
        };
        assign(&basis, &inc_a, &inc_b, &mut images, &mut try_map)
    }
}

/// `inc[i][j]`: number of maximal cones containing rays `i` and `j` (`inc[i][i]` for `i` alone).
fn incidence(f: &Fan) -> Vec<Vec<usize>> {
    let n = f.rays.len();
    let mut inc = vec![vec![0; n]; n];
    for c in &f.cones {
        for &i in c {
            for &j in c {
                inc[i][j] += 1;
            }
        }
    }
    inc
}

fn assign<T>(
    basis: &[usize],
    inc_a: &[Vec<usize>],
    inc_b: &[Vec<usize>],
    images: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    let k = images.len();
    if k == basis.len() {
        return f(images);
    }
    let b = basis[k];
    for v in 0..inc_b.len() {
        if images.contains(&v) || inc_b[v][v] != inc_a[b][b] {
            continue;
        }
        if (0..k).any(|t| inc_b[images[t]][v] != inc_a[basis[t]][b]) {
            continue;
        }
        images.push(v);
        if let Some(t) = assign(basis, inc_a, inc_b, images, f) {
            return Some(t);
        }
        images.pop();
    }
    None
}

fn independent_subset(rays: &[Ray], d: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..rays.len() {
        let mut t = chosen.clone();
        t.push(i);
        if ray_matrix(&t.iter().map(|&k| &rays[k]).collect::<Vec<_>>()).rank() == t.len() {
            chosen = t;
        }
        if chosen.len() == d {
            return Some(chosen);
        }
    }
    None
}

/// Normal of the hyperplane through the origin spanned by `d-1` vectors, if they are independent.
pub(crate) fn hyperplane_normal(d: usize, vs: &[&Ray]) -> Option<Vector> {
    if vs.is_empty() {
        return (d == 1).then(|| vec![Scalar::from_int(1)]);
    }
    let m = ray_matrix(vs);
    let k = m.kernel();
    (k.len() == 1).then(|| k.into_iter().next().expect("one vector"))
}

/// All `k`-element subsets, in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn projective_plane() -> Fan {
        Fan::parse("1 0\n0 1\n-1 -1\n\n1 2\n2 3\n1 3\n").unwrap()
    }

    #[test]
    fn simplex_fan_is_complete_and_smooth() {
        let r = projective_plane().validate(32, 7);
        assert!(r.simplicial && r.smooth && r.pseudo_complete && r.primitive_rays);
        assert_eq!(projective_plane().primitive_collections(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn missing_cone_is_detected() {
        let f = Fan::parse("1 0\n0 1\n-1 -1\n\n1 2\n2 3\n").unwrap();
        let r = f.validate(64, 1);
        assert!(!r.facet_pairing && !r.pseudo_complete);
    }

    #[test]
    fn malformed_index_is_structural() {
        assert!(Fan::parse("1 0\n0 1\n\n1 3\n").is_err());
    }

    #[test]
    fn round_trip_and_self_match() {
        let f = projective_plane();
        assert_eq!(Fan::parse(&f.to_text()).unwrap(), f);
        let (a, _) = f.unimodular_match(&f).unwrap();
        assert!(a.det() == Scalar::from_int(1) || a.det() == Scalar::from_int(-1));
    }

    #[test]
    fn non_simplicial_facets() {
        // cone over a square
        let f = Fan::parse("1 0 1\n0 1 1\n-1 0 1\n0 -1 1\n\n1 2 3 4\n").unwrap();
        assert_eq!(f.facets_of(&[0, 1, 2, 3]).len(), 4);
        assert!(!f.is_simplicial());
    }
}
