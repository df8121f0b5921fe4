//! The wreath group of order 72: element arithmetic, its grid and coordinate
//! actions, exhaustive subgroup enumeration up to conjugacy, and graph
//! automorphism groups.

pub mod gamma;
pub mod graphaut;
pub mod perm;
pub mod subgroup;

pub use gamma::{gamma, GammaElt, GAMMA_ORDER};
pub use graphaut::{grid_graph, Graph, VertexGroup};
pub use perm::{Perm, Perm3};
pub use subgroup::{
    a3_x_a3, a3_x_one, all_subgroups, all_subgroups_via_cyclic_joins, diagonal_a3, is_conjugate,
    one_x_a3, subgroups_up_to_conjugacy, sylow, GammaSubgroup, SubgroupClass, SubgroupLabel,
    FULL_GROUP,
};
