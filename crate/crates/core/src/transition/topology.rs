use crate::algebra::{Subspace, Vector};
use crate::error::Result;
use crate::verdict::Verdict;

use super::theta::ThetaMap;

/// Pullbacks along the resolution and the smoothing, given by bases and values.
#[derive(Clone, Debug)]
pub struct Topology {
    pub image_pi: Subspace,
    /// `r*∘(π*)⁻¹` on a spanning set of the image of `π*`.
    pub r_star: ThetaMap,
    pub ker_r: Option<Subspace>,
    pub image_r: Option<Subspace>,
    pub betti_sing: Option<Vec<u32>>,
}

/// `θ∘π* = r*`, the position of the image of `π*` between `W` and `V`, and the kernel of `r*`.
pub fn check_topology_diagram(t: &Topology, v: &Subspace, w: &Subspace, theta: &ThetaMap) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    out.push(Verdict::from_witness(
        "image π* ⊆ V",
        (!v.contains_space(&t.image_pi)).then(|| "not contained".to_string()),
    ));
    out.push(Verdict::from_witness(
        "W ⊆ image π*",
        (!t.image_pi.contains_space(w)).then(|| "not contained".to_string()),
    ));
    out.push(Verdict::pass("codimension of image π* in V").with_note(format!(
        "{} in {}, codimension {}",
        t.image_pi.dim(),
        v.dim(),
        v.dim().saturating_sub(t.image_pi.dim())
    )));
    if let Some(b) = &t.betti_sing {
        let total: u32 = b.iter().sum();
        out.push(Verdict::from_witness(
            "π* injective",
            (total as usize != t.image_pi.dim())
                .then(|| format!("total Betti number {total}, image dimension {}", t.image_pi.dim())),
        ));
    }
    let domain = t.r_star.domain();
    out.push(Verdict::from_witness(
        "r* is given on classes in image π*",
        (!t.image_pi.contains_space(&domain)).then(|| "a listed class is outside image π*".to_string()),
    ));
    let covered = domain == t.image_pi;
    out.push(Verdict::pass("r* coverage").with_note(format!(
        "listed on {} of {} dimensions",
        domain.dim(),
        t.image_pi.dim()
    )));

    let bad = t.r_star.sources().iter().zip(t.r_star.labels()).find_map(|(s, label)| {
        let lhs: Option<Vector> = theta.apply(s);
        let rhs = t.r_star.apply(s);
        (lhs != rhs).then(|| format!("at {label}"))
    });
    out.push(Verdict::from_witness("θ∘π* = r*", bad));

    let ker = t.r_star.kernel();
    if covered {
        out.push(Verdict::from_witness(
            "π*(ker r*) = W",
            (ker != *w).then(|| format!("dim {} vs dim W = {}", ker.dim(), w.dim())),
        ));
    }
    if let Some(k) = &t.ker_r {
        out.push(Verdict::from_witness("listed ker r* = W", (k != w).then(|| "spans differ".to_string())));
    }
    let image = t.r_star.image();
    if let Some(i) = &t.image_r {
        out.push(Verdict::from_witness(
            "listed image r* = image r*",
            (*i != image).then(|| "spans differ".to_string()),
        ));
    }
    out.push(Verdict::pass("r* rank").with_note(format!(
        "image dimension {} in {}, kernel dimension {}",
        image.dim(),
        t.r_star.target_dim(),
        ker.dim()
    )));
    Ok(out)
}
