//! Projective hypersurfaces over the rationals and prime fields: singular
//! loci, Milnor data, dual degrees, plane configurations, certified
//! nine-nodal sections, and the incidence graph.

pub mod fourfold;
pub mod hypersurface;
pub mod incidence;
pub mod planes;
pub mod section;
pub mod singular;

pub use fourfold::{fourfold_equation, standard_fourfold, StandardFourfold};
pub use hypersurface::{Hypersurface, LinearSubspace};
pub use incidence::{incidence_graph, IncidenceGraph, TorusSkeletonReport};
pub use planes::{gaussian_binomial, planes_in_hypersurface_fp};
pub use section::{
    class_rank_bookkeeping, nine_nodal_section, plane_ideal_identity, reconstruct_coordinates,
    search_section, standard_section_coeffs, NineNodalSection, SectionCertificate,
};
pub use singular::{
    classify_singularity, dual_degree, projective_points, singular_points_fp,
    SingularPointReport,
};
