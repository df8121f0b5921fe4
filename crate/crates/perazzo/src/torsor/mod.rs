//! The monomial chart from affine 9-space onto the fourfold, its base-locus
//! double-three, the equivariant lift of the wreath action, and the pulled
//! back cubics for surface sections.

pub mod chart;
pub mod doublethree;
pub mod lift;
pub mod surface;

pub use chart::{
    monomial_map, row_monomial, col_monomial, torsor_census, torsor_eval, verify_identity,
    TorsorCensus, Z_NAMES,
};
pub use doublethree::{
    double_three, verify_double_three_structure, verify_double_vanishing, DoubleThree,
    DoubleThreeReport,
};
pub use lift::{check_equivariance_all, lift_images, TwistScaling};
pub use surface::{split_surface_section, surface_torsor_cubics, SplitSurfaceReport};
