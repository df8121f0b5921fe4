//! The incidence graph of the planes on a nine-nodal threefold, and its
//! certification against the reference grid graph (the 1-skeleton of the
//! product-of-two-triangles cell structure on the torus).

use serde::Serialize;

use crate::error::Error;
use crate::exact::field::Field;
use crate::geometry::hypersurface::LinearSubspace;
use crate::wreath::graphaut::{grid_graph, Graph};
use crate::wreath::perm::Perm;

/// Incidence graph: vertices are planes, edges join planes meeting in a line.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    pub graph: Graph,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusSkeletonReport {
    pub vertices: usize,
    pub edges: usize,
    pub four_regular: bool,
    pub triangle_count: usize,
    pub each_edge_in_unique_triangle: bool,
    pub grid_isomorphic: bool,
    pub automorphism_order: usize,
    pub pass: bool,
}

/// Build the incidence graph of a family of planes: an edge wherever two
/// planes meet in a line.
pub fn incidence_graph<F: Field>(planes: &[LinearSubspace<F>]) -> Result<IncidenceGraph, Error> {
    let n = planes.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if planes[a].same_subspace(&planes[b]) {
                return Err(Error::DegeneratePlane(format!(
                    "planes {a} and {b} coincide"
                )));
            }
            if planes[a].intersection_dim(&planes[b]) == Some(1) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::new(n, &edges);
    let triangles = graph.triangles();
    Ok(IncidenceGraph { graph, triangles })
}

impl IncidenceGraph {
    /// Check the torus 1-skeleton structure: 9 vertices, 18 edges,
    /// 4-regular, six triangles each covering every edge once, isomorphic
    /// to the reference grid graph, automorphism group of order 72.
    pub fn check_torus_skeleton(&self) -> TorusSkeletonReport {
        let g = &self.graph;
        let vertices = g.n();
        let edges = g.edge_count();
        let four_regular = (0..vertices).all(|v| g.degree(v) == 4);
        let triangle_count = self.triangles.len();
        let mut edge_cover = std::collections::BTreeMap::new();
        for t in &self.triangles {
            for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                *edge_cover.entry((u, v)).or_insert(0usize) += 1;
            }
        }
        let each_edge_in_unique_triangle = edge_cover.len() == edges
            && edge_cover.values().all(|&c| c == 1)
            && edges == 18;
        let grid_isomorphic = vertices == 9 && g.isomorphism_to(&grid_graph()).is_some();
        let automorphism_order = if vertices <= 9 {
            g.automorphism_group().order()
        } else {
            0
        };
        let pass = vertices == 9
            && edges == 18
            && four_regular
            && triangle_count == 6
            && each_edge_in_unique_triangle
            && grid_isomorphic
            && automorphism_order == 72;
        TorusSkeletonReport {
            vertices,
            edges,
            four_regular,
            triangle_count,
            each_edge_in_unique_triangle,
            grid_isomorphic,
            automorphism_order,
            pass,
        }
    }

    /// An explicit isomorphism onto the reference grid graph.
    pub fn grid_isomorphism(&self) -> Option<Perm> {
        self.graph.isomorphism_to(&grid_graph())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat_int, Rationals};
    use crate::exact::fmat::Mat;

    #[test]
    fn reference_grid_graph_passes_its_own_certificate() {
        let g = grid_graph();
        let ig = IncidenceGraph {
            triangles: g.triangles(),
            graph: g,
        };
        let report = ig.check_torus_skeleton();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn coincident_planes_are_rejected() {
        let mk = || {
            LinearSubspace::<Rationals>::from_points(Mat::from_rows(
                Rationals,
                vec![
                    vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
                    vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)],
                    vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
                ],
            ))
            .unwrap()
        };
        assert!(matches!(
            incidence_graph(&[mk(), mk()]),
            Err(Error::DegeneratePlane(_))
        ));
    }
}
