//! Exact automorphism groups of small simple graphs by exhaustive search,
//! with a backtracking isomorphism test.  Only graphs on at most a dozen or
//! so vertices ever show up here, so brute force is the honest tool.

use crate::wreath::gamma::gamma;
use crate::wreath::perm::Perm;

/// A simple undirected graph with adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u16>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        assert!(n <= 16);
        let mut adj = vec![0u16; n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "simple graph only");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    continue;
                }
                for w in v + 1..self.n {
                    if self.has_edge(u, w) && self.has_edge(v, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }


    /// The full automorphism group, by exhaustive search with degree pruning.
    pub fn automorphism_group(&self) -> VertexGroup {
        let mut elements = Vec::new();
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.search(0, &mut image, &mut used, &mut elements);
        elements.sort();
        VertexGroup {
            n: self.n,
            elements,
        }
    }

    fn search(
        &self,
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Perm>,
    ) {
        if depth == self.n {
            out.push(Perm(image.clone()));
            return;
        }
        for cand in 0..self.n {
            if used[cand] || self.degree(cand) != self.degree(depth) {
                continue;
            }
            // adjacency with the already-placed prefix must match
            let ok = (0..depth)
                .all(|u| self.has_edge(u, depth) == self.has_edge(image[u], cand));
            if !ok {
                continue;
            }
            image[depth] = cand;
            used[cand] = true;
            self.search(depth + 1, image, used, out);
            used[cand] = false;
            image[depth] = usize::MAX;
        }
    }

    /// A graph isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Perm> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        iso_search(self, other, 0, &mut image, &mut used)
    }
}

fn iso_search(
    a: &Graph,
    b: &Graph,
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Perm> {
    if depth == a.n {
        return Some(Perm(image.clone()));
    }
    for cand in 0..a.n {
        if used[cand] || a.degree(depth) != b.degree(cand) {
            continue;
        }
        let ok = (0..depth).all(|u| a.has_edge(u, depth) == b.has_edge(image[u], cand));
        if !ok {
            continue;
        }
        image[depth] = cand;
        used[cand] = true;
        if let Some(p) = iso_search(a, b, depth + 1, image, used) {
            return Some(p);
        }
        used[cand] = false;
        image[depth] = usize::MAX;
    }
    None
}

/// A permutation group on graph vertices, stored by its full element list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexGroup {
    n: usize,
    elements: Vec<Perm>,
}

impl VertexGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }

    /// Whether this group is exactly the image of the whole wreath group
    /// under the grid action on the nine positions, which exhibits the
    /// isomorphism explicitly.
    pub fn equals_wreath_grid_image(&self) -> bool {
        if self.n != 9 || self.order() != 72 {
            return false;
        }
        let mut image: Vec<Perm> = gamma().elements().iter().map(|e| e.grid_perm()).collect();
        image.sort();
        image == self.elements
    }
}

/// The reference graph on the 3x3 grid: vertices `(i, j)` as `3i + j`,
/// edges between positions sharing a row or a column.
pub fn grid_graph() -> Graph {
    let mut edges = Vec::new();
    for a in 0..9 {
        for b in a + 1..9 {
            let (ai, aj) = (a / 3, a % 3);
            let (bi, bj) = (b / 3, b % 3);
            if ai == bi || aj == bj {
                edges.push((a, b));
            }
        }
    }
    Graph::new(9, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_k3() {
        let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.automorphism_group().order(), 6);
    }

    #[test]
    fn edgeless_graph_on_four_vertices() {
        let g = Graph::new(4, &[]);
        assert_eq!(g.automorphism_group().order(), 24);
    }

    #[test]
    fn path_graph_has_two_automorphisms() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.automorphism_group().order(), 2);
    }

    #[test]
    fn grid_graph_shape() {
        let g = grid_graph();
        assert_eq!(g.edge_count(), 18);
        assert!((0..9).all(|v| g.degree(v) == 4));
        assert_eq!(g.triangles().len(), 6);
    }

    #[test]
    fn grid_graph_automorphisms_realize_the_wreath_group() {
        let aut = grid_graph().automorphism_group();
        assert_eq!(aut.order(), 72);
        assert!(aut.is_closed());
        assert!(aut.equals_wreath_grid_image());
    }

    #[test]
    fn isomorphism_search_finds_relabelings() {
        let g = grid_graph();
        // relabel by an arbitrary permutation and ask for an isomorphism back
        let relabel = Perm(vec![4, 7, 0, 2, 8, 3, 1, 5, 6]);
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (relabel.apply(u), relabel.apply(v)))
            .collect();
        let h = Graph::new(9, &edges);
        let iso = g.isomorphism_to(&h).expect("isomorphic by construction");
        for (u, v) in g.edges() {
            assert!(h.has_edge(iso.apply(u), iso.apply(v)));
        }
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]);
        assert!(k3.isomorphism_to(&p3).is_none());
    }
}
