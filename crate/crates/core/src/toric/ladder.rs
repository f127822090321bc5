//! Toric degenerations of partial flag varieties from ladder diagrams.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::divisor::DivisorClassData;
use super::fan::{hyperplane_normal, subsets, to_vector, Fan, Ray};
use crate::algebra::linalg::dot;
use crate::algebra::{Matrix, Scalar, Vector};
use crate::error::{structural, Error, Result};

pub type Vertex = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub tail: Vertex,
    pub head: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderBox {
    pub lower_left: Vertex,
    /// Edges at the lower left vertex.
    pub corner: [usize; 2],
    /// Edges at the upper right vertex.
    pub anti_corner: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderDiagram {
    pub n: i64,
    pub steps: Vec<i64>,
    /// Ordered by `i` ascending, then `j` descending; dot `k` is coordinate `k`.
    pub dots: Vec<Vertex>,
    pub stars: Vec<Vertex>,
    /// Ordered by tail, the downward edge before the rightward one.
    pub edges: Vec<Edge>,
    pub roofs: Vec<Vec<usize>>,
    pub boxes: Vec<LadderBox>,
}

fn vertex_order(a: &Vertex, b: &Vertex) -> std::cmp::Ordering {
    a.0.cmp(&b.0).then(b.1.cmp(&a.1))
}

impl LadderDiagram {
    pub fn new(n: i64, steps: &[i64]) -> Result<Self> {
        if steps.is_empty() || steps[0] <= 0 || steps.windows(2).any(|w| w[0] >= w[1]) || *steps.last().unwrap() >= n {
            return Err(structural("steps must satisfy 0 < n_1 < ... < n_l < n"));
        }
        let l = steps.len();
        let mut dots: BTreeSet<Vertex> = BTreeSet::new();
        for &np in steps {
            for i in 0..n - np {
                for j in 0..np {
                    dots.insert((i, j));
                }
            }
        }
        let mut stars = vec![(n - steps[0], 0)];
        for p in 1..l {
            stars.push((n - steps[p], steps[p - 1]));
        }
        stars.push((0, steps[l - 1]));
        let mut dots: Vec<Vertex> = dots.into_iter().collect();
        dots.sort_by(vertex_order);
        let mut vertices: Vec<Vertex> = dots.iter().chain(&stars).copied().collect();
        vertices.sort_by(vertex_order);
        let is_vertex = |v: Vertex| vertices.contains(&v);
        let mut edges = Vec::new();
        for &t in &vertices {
            for h in [(t.0, t.1 - 1), (t.0 + 1, t.1)] {
                if is_vertex(h) {
                    edges.push(Edge { tail: t, head: h });
                }
            }
        }
        let find = |t: Vertex, h: Vertex| -> Result<usize> {
            edges
                .iter()
                .position(|e| e.tail == t && e.head == h)
                .ok_or_else(|| Error::ConstructionFailure(format!("edge {t:?} -> {h:?} missing")))
        };
        let mut roofs = Vec::new();
        for i in 1..=l {
            let ni = steps[i - 1];
            let prev = if i >= 2 { steps[i - 2] } else { 0 };
            let next = if i < l { steps[i] } else { n };
            let mut r = vec![find((n - next, ni), (n - next, ni - 1))?];
            for p in n - next..=n - ni - 2 {
                r.push(find((p, ni - 1), (p + 1, ni - 1))?);
            }
            for q in prev + 1..=ni - 1 {
                r.push(find((n - ni - 1, q), (n - ni - 1, q - 1))?);
            }
            r.push(find((n - ni - 1, prev), (n - ni, prev))?);
            r.sort_unstable();
            roofs.push(r);
        }
        let mut boxes = Vec::new();
        for &(i, j) in &vertices {
            if [(i + 1, j), (i, j + 1), (i + 1, j + 1)].iter().all(|&v| is_vertex(v)) {
                boxes.push(LadderBox {
                    lower_left: (i, j),
                    corner: [find((i, j + 1), (i, j))?, find((i, j), (i + 1, j))?],
                    anti_corner: [find((i, j + 1), (i + 1, j + 1))?, find((i + 1, j + 1), (i + 1, j))?],
                });
            }
        }
        Ok(LadderDiagram { n, steps: steps.to_vec(), dots, stars, edges, roofs, boxes })
    }

    pub fn dim(&self) -> usize {
        self.dots.len()
    }

    /// `r_e = e_{h(e)} - e_{t(e)}`, with `e_s = 0` for stars.
    pub fn rays(&self) -> Vec<Ray> {
        let d = self.dim();
        let unit = |v: Vertex| -> Vec<i64> {
            let mut e = vec![0; d];
            if let Some(k) = self.dots.iter().position(|&x| x == v) {
                e[k] = 1;
            }
            e
        };
        self.edges.iter().map(|e| unit(e.head).iter().zip(unit(e.tail)).map(|(a, b)| a - b).collect()).collect()
    }

    /// `R_e·C` for the roof curves followed by the box curves.
    pub fn curve_classes(&self) -> Vec<Vec<i64>> {
        let m = self.edges.len();
        let mut out = Vec::new();
        for r in &self.roofs {
            let mut c = vec![0; m];
            for &e in r {
                c[e] = 1;
            }
            out.push(c);
        }
        for b in &self.boxes {
            let mut c = vec![0; m];
            for &e in &b.corner {
                c[e] += 1;
            }
            for &e in &b.anti_corner {
                c[e] -= 1;
            }
            out.push(c);
        }
        out
    }

    /// Every roof and box relation holds among the rays.
    pub fn relations_hold(&self) -> bool {
        let rays = self.rays();
        self.curve_classes()
            .iter()
            .all(|c| (0..self.dim()).all(|t| rays.iter().zip(c).map(|(r, k)| r[t] * k).sum::<i64>() == 0))
    }

    /// The collections the resolution is required to have as primitive collections.
    pub fn prescribed_collections(&self) -> BTreeSet<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = self.roofs.iter().cloned().collect();
        for b in &self.boxes {
            let mut c = b.corner.to_vec();
            c.sort_unstable();
            out.insert(c);
        }
        out
    }

    /// Nef basis dual to the roof and box curves.
    pub fn divisor_data(&self, fan: &Fan) -> Result<DivisorClassData> {
        let curves = self.curve_classes();
        let names = (1..=curves.len()).map(|k| format!("m{k}")).collect();
        let coeffs = (0..self.edges.len()).map(|e| curves.iter().map(|c| c[e]).collect()).collect();
        DivisorClassData::new(fan, names, coeffs)
    }
}

/// Cones over the facets of the convex hull of the rays.
pub fn face_fan(rays: &[Ray]) -> Result<Fan> {
    let d = rays.first().map_or(0, Vec::len);
    let all: Vec<usize> = (0..rays.len()).collect();
    let mut facets = BTreeSet::new();
    for sub in subsets(&all, d) {
        let m = Matrix::from_rows(sub.iter().map(|&i| to_vector(&rays[i])).collect());
        if m.rank() < d {
            continue;
        }
        let u = m.solve(&vec![Scalar::from_int(1); d]).expect("invertible");
        let vals: Vec<Scalar> = rays.iter().map(|r| dot(&u, &to_vector(r))).collect();
        let one = Scalar::from_int(1);
        if vals.iter().any(|v| v.re > one.re) {
            continue;
        }
        facets.insert(all.iter().copied().filter(|&i| vals[i] == one).collect::<Vec<_>>());
    }
    Fan::new(d, rays.to_vec(), facets.into_iter().collect())
}

/// Every smooth complete fan on the given rays refining `sing`.
pub fn smooth_subdivisions(sing: &Fan, seed: u64) -> Vec<Fan> {
    let d = sing.dim();
    let rays = sing.rays();
    let mut cands: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in sing.cones() {
        for s in subsets(c, d) {
            let m = Matrix::from_rows(s.iter().map(|&i| to_vector(&rays[i])).collect());
            let det = m.det();
            if det == Scalar::from_int(1) || det == Scalar::from_int(-1) {
                cands.insert(s);
            }
        }
    }
    let cands: Vec<Vec<usize>> = cands.into_iter().collect();
    let mut normals: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
    for c in &cands {
        for k in 0..d {
            let f: Vec<usize> = c.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &i)| i).collect();
            if let std::collections::btree_map::Entry::Vacant(e) = normals.entry(f) {
                let n =
                    hyperplane_normal(d, &e.key().iter().map(|&i| &rays[i]).collect::<Vec<_>>()).expect("independent");
                e.insert(n);
            }
        }
    }
    let side = |f: &[usize], r: usize| -> i32 {
        let v = dot(&normals[f], &to_vector(&rays[r]));
        if v.re.is_positive() {
            1
        } else if v.re.is_negative() {
            -1
        } else {
            0
        }
    };
    let p = generic_point(sing, &normals, seed);
    let seeds: Vec<usize> = (0..cands.len())
        .filter(|&k| {
            let m = Matrix::from_rows(cands[k].iter().map(|&i| to_vector(&rays[i])).collect()).transpose();
            m.solve(&p).is_some_and(|x| x.iter().all(|v| v.re.is_positive()))
        })
        .collect();

    struct State<'a> {
        cands: &'a [Vec<usize>],
        chosen: Vec<usize>,
        facets: BTreeMap<Vec<usize>, Vec<usize>>,
        found: BTreeSet<Vec<Vec<usize>>>,
    }
    fn facets_of(c: &[usize]) -> Vec<(Vec<usize>, usize)> {
        (0..c.len()).map(|k| (c.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &i)| i).collect(), c[k])).collect()
    }
    fn add(st: &mut State, k: usize) {
        st.chosen.push(k);
        for (f, _) in facets_of(&st.cands[k]) {
            st.facets.entry(f).or_default().push(k);
        }
    }
    fn remove(st: &mut State, k: usize) {
        st.chosen.pop();
        for (f, _) in facets_of(&st.cands[k]) {
            let v = st.facets.get_mut(&f).expect("present");
            v.pop();
            if v.is_empty() {
                st.facets.remove(&f);
            }
        }
    }
    fn dfs(st: &mut State, side: &dyn Fn(&[usize], usize) -> i32) {
        let open = st.facets.iter().find(|(_, v)| v.len() == 1).map(|(f, v)| (f.clone(), v[0]));
        let Some((f, owner)) = open else {
            let mut fan: Vec<Vec<usize>> = st.chosen.iter().map(|&k| st.cands[k].clone()).collect();
            fan.sort();
            st.found.insert(fan);
            return;
        };
        let a = *st.cands[owner].iter().find(|i| !f.contains(i)).expect("apex");
        let sa = side(&f, a);
        for k in 0..st.cands.len() {
            let c = &st.cands[k];
            if st.chosen.contains(&k) || !f.iter().all(|i| c.contains(i)) {
                continue;
            }
            let b = *c.iter().find(|i| !f.contains(i)).expect("apex");
            if side(&f, b) != -sa {
                continue;
            }
            let ok = facets_of(c).iter().all(|(g, apex)| match st.facets.get(g).map(Vec::as_slice) {
                None => true,
                Some([other]) => {
                    let oa = *st.cands[*other].iter().find(|i| !g.contains(i)).expect("apex");
                    side(g, oa) == -side(g, *apex)
                }
                Some(_) => false,
            });
            if ok {
                add(st, k);
                dfs(st, side);
                remove(st, k);
            }
        }
    }
    let mut st = State { cands: &cands, chosen: Vec::new(), facets: BTreeMap::new(), found: BTreeSet::new() };
    for s in seeds {
        add(&mut st, s);
        dfs(&mut st, &side);
        remove(&mut st, s);
    }
    st.found
        .into_iter()
        .filter_map(|cones| Fan::new(d, rays.to_vec(), cones).ok())
        .filter(|f| f.validate(16, seed).pseudo_complete)
        .collect()
}

fn generic_point(sing: &Fan, normals: &BTreeMap<Vec<usize>, Vector>, seed: u64) -> Vector {
    let d = sing.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<i64> =
        (0..d).map(|t| sing.cones()[0].iter().map(|&i| sing.rays()[i][t]).sum::<i64>() * 1000).collect();
    loop {
        let p: Vector = base.iter().map(|&b| Scalar::from_int(b + rng.gen_range(-3..=3))).collect();
        if normals.values().all(|n| !dot(n, &p).is_zero()) {
            return p;
        }
    }
}

#[derive(Clone, Debug)]
pub struct LadderFans {
    pub diagram: LadderDiagram,
    pub sing: Fan,
    /// All smooth subdivisions of `sing` on the same rays.
    pub candidates: Vec<Fan>,
    /// Index of the candidate whose primitive collections are exactly the roofs and corners.
    pub recipe: Option<usize>,
}

impl LadderFans {
    pub fn recipe_fan(&self) -> Option<&Fan> {
        self.recipe.map(|k| &self.candidates[k])
    }

    /// Candidate with exactly the given primitive collections.
    pub fn with_collections(&self, pc: &BTreeSet<Vec<usize>>) -> Option<&Fan> {
        self.candidates.iter().find(|f| &f.primitive_collections().into_iter().collect::<BTreeSet<_>>() == pc)
    }
}

pub fn ladder_fans(n: i64, steps: &[i64]) -> Result<LadderFans> {
    let diagram = LadderDiagram::new(n, steps)?;
    if !diagram.relations_hold() {
        return Err(Error::ConstructionFailure("roof or box relation fails".into()));
    }
    let sing = face_fan(&diagram.rays())?;
    let candidates = smooth_subdivisions(&sing, 17);
    if candidates.is_empty() {
        return Err(Error::ConstructionFailure("no smooth subdivision on the given rays".into()));
    }
    let want = diagram.prescribed_collections();
    let recipe = candidates.iter().position(|f| f.primitive_collections().into_iter().collect::<BTreeSet<_>>() == want);
    Ok(LadderFans { diagram, sing, candidates, recipe })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_line() {
        let lf = ladder_fans(2, &[1]).unwrap();
        assert_eq!(lf.diagram.dots.len(), 1);
        assert_eq!(lf.diagram.stars.len(), 2);
        assert_eq!(lf.diagram.edges.len(), 2);
        assert_eq!(lf.candidates.len(), 1);
        assert!(lf.recipe.is_some());
    }

    #[test]
    fn grassmannian_rays_in_ladder_order() {
        let d = LadderDiagram::new(5, &[2]).unwrap();
        let rays = d.rays();
        assert_eq!(rays.len(), 9);
        assert_eq!(rays[0], vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(rays[8], vec![0, 0, 0, 0, 0, -1]);
        assert_eq!(d.roofs, vec![vec![0, 2, 5, 7, 8]]);
        assert_eq!(d.boxes.len(), 2);
        assert!(d.relations_hold());
    }

    #[test]
    fn bad_steps() {
        assert!(LadderDiagram::new(3, &[2, 1]).is_err());
        assert!(LadderDiagram::new(3, &[3]).is_err());
    }
}
