//! Residues along exceptional divisors, the filtrations they cut out, and the comparison of the
//! resulting subquotient with the quantum ring of the smoothing.

mod conifold;
mod filtration;
mod residue;
mod theta;
mod topology;
mod verify;

pub use conifold::{multiple_cover_identity, rank_one_model, RankOneMatch};
pub use filtration::{compute_filtration, jordan_blocks, orthogonal, weight_filtration, Filtration, WeightFiltration};
pub use residue::{compute_residues, residue_matrix, residue_matrix_reversed, self_adjoint, Residue, ResidueData};
pub use theta::{classical_element, ThetaMap};
pub use topology::{check_topology_diagram, Topology};
pub use verify::{check_products, choose_representatives, verify_transition, TransitionInput, TransitionOutcome};
