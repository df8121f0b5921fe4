//! Integer lattices with an action of the wreath group, presented by a free
//! cover with relations.
//!
//! A module is built from action matrices on a few generators; the action of
//! every group element is then filled in by breadth-first products over the
//! Cayley graph.  Every non-tree edge reached twice is asserted equal, which
//! amounts to checking the defining relations of the group on the nose, so a
//! bad convention cannot survive construction.  Realization (an honest basis
//! for the quotient lattice) is derived from one Smith normal form of the
//! relation matrix and requires the quotient to be torsion-free, which holds
//! for every module this crate ships.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::intmat::IntMatrix;
use crate::wreath::gamma::{gamma, GammaElt, GAMMA_ORDER};
use crate::wreath::subgroup::{GammaSubgroup, FULL_GROUP};

/// A finite abelian group by its invariant factors (each at least 2,
/// each dividing the next); the empty list is the trivial group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FinAbGroup {
    pub factors: Vec<u64>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 2);
        FinAbGroup { factors: vec![n] }
    }

    pub fn from_invariant_factors(factors: impl IntoIterator<Item = BigInt>) -> Self {
        let factors: Vec<u64> = factors
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| {
                use num_traits::ToPrimitive;
                d.to_u64().expect("invariant factor fits u64")
            })
            .collect();
        for w in factors.windows(2) {
            assert_eq!(w[1] % w[0], 0, "divisibility chain broken");
        }
        FinAbGroup { factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            write!(f, "0")
        } else {
            let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// A lattice with wreath-group action, presented as free cover modulo the
/// row space of a relation matrix.
#[derive(Clone)]
pub struct ZGModule {
    name: String,
    labels: Vec<String>,
    /// The subgroup whose action is defined (the full group for the
    /// standard modules).
    acting: GammaSubgroup,
    /// r x n; rows span the relation lattice inside the free cover.
    relations: IntMatrix,
    /// Cover action matrix (n x n) per group element index, for elements of
    /// the acting subgroup.
    cover_action: Vec<Option<IntMatrix>>,
    /// Rank of the quotient.
    rank: usize,
    /// proj (rank x n) and sect (n x rank) with proj * sect = identity;
    /// proj kills exactly the relation lattice.
    proj: IntMatrix,
    sect: IntMatrix,
    /// Realized action matrices (rank x rank) per group element index.
    realized_action: Vec<Option<IntMatrix>>,
}

impl ZGModule {
    /// Build a module with an action of the full wreath group.
    pub fn new(
        name: &str,
        labels: Vec<String>,
        relations: IntMatrix,
        generator_action: &[(GammaElt, IntMatrix)],
    ) -> ZGModule {
        ZGModule::new_for_subgroup(name, labels, relations, generator_action, FULL_GROUP)
    }

    /// Build a module whose action is only defined on a subgroup.  Panics if
    /// the generator matrices are inconsistent, if the generators do not
    /// generate the stated subgroup, if some action fails to preserve the
    /// relation lattice, or if the quotient has torsion.
    pub fn new_for_subgroup(
        name: &str,
        labels: Vec<String>,
        relations: IntMatrix,
        generator_action: &[(GammaElt, IntMatrix)],
        acting: GammaSubgroup,
    ) -> ZGModule {
        let n = labels.len();
        assert!(relations.rows() == 0 || relations.cols() == n);
        for (_, a) in generator_action {
            assert_eq!(a.rows(), n);
            assert_eq!(a.cols(), n);
        }

        let cover_action = propagate_action(generator_action, n, acting);

        // the relation lattice must be preserved by the whole group
        let rel_t = relations.transpose();
        let rel_snf = if relations.rows() > 0 {
            Some(rel_t.snf())
        } else {
            None
        };
        if let Some(snf) = &rel_snf {
            for a in cover_action.iter().flatten() {
                for i in 0..relations.rows() {
                    let moved = a.mul_vec(relations.row(i));
                    assert!(
                        snf.solve_integer(&moved).is_some(),
                        "action of some group element does not preserve the relations of {name}"
                    );
                }
            }
        }

        // realization: with U * rel^T * V = D, the quotient coordinates are
        // the rows of U beyond the rank, provided all invariant factors are 1
        let (rank, proj, sect) = match &rel_snf {
            None => (n, IntMatrix::identity(n), IntMatrix::identity(n)),
            Some(snf) => {
                assert!(
                    snf.invariant_factors().iter().all(|d| d.is_one()),
                    "quotient of {name} has torsion"
                );
                let m = n - snf.rank;
                let mut proj = IntMatrix::zero(m, n);
                let mut sect = IntMatrix::zero(n, m);
                for i in 0..m {
                    for j in 0..n {
                        *proj.at_mut(i, j) = snf.u.at(snf.rank + i, j).clone();
                        *sect.at_mut(j, i) = snf.u_inv.at(j, snf.rank + i).clone();
                    }
                }
                (m, proj, sect)
            }
        };
        debug_assert_eq!(proj.mul(&sect), IntMatrix::identity(rank));

        let realized_action: Vec<Option<IntMatrix>> = cover_action
            .iter()
            .map(|a| a.as_ref().map(|a| proj.mul(a).mul(&sect)))
            .collect();

        ZGModule {
            name: name.to_string(),
            labels,
            acting,
            relations,
            cover_action,
            rank,
            proj,
            sect,
            realized_action,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn free_rank(&self) -> usize {
        self.labels.len()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Rank of the quotient lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Torsion of the quotient presentation (empty for every shipped module;
    /// kept as a checked report value).
    pub fn presentation_torsion(&self) -> FinAbGroup {
        if self.relations.rows() == 0 {
            return FinAbGroup::trivial();
        }
        FinAbGroup::from_invariant_factors(self.relations.transpose().snf().invariant_factors())
    }

    /// The subgroup whose action is defined.
    pub fn acting_subgroup(&self) -> GammaSubgroup {
        self.acting
    }

    pub fn has_action_of(&self, w: &GammaSubgroup) -> bool {
        w.is_subgroup_of(&self.acting)
    }

    pub fn cover_action(&self, g: &GammaElt) -> &IntMatrix {
        self.cover_action[g.index()]
            .as_ref()
            .unwrap_or_else(|| panic!("action of {g} undefined on {}", self.name))
    }

    pub fn action(&self, g: &GammaElt) -> &IntMatrix {
        self.realized_action[g.index()]
            .as_ref()
            .unwrap_or_else(|| panic!("action of {g} undefined on {}", self.name))
    }

    /// Quotient coordinates of a cover vector.
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.proj.mul_vec(v)
    }

    /// A cover representative of a quotient vector.
    pub fn section(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.sect.mul_vec(v)
    }

    pub fn proj_matrix(&self) -> &IntMatrix {
        &self.proj
    }

    pub fn sect_matrix(&self) -> &IntMatrix {
        &self.sect
    }

    pub fn label_index(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("no basis label `{label}` in {}", self.name))
    }

    /// Class of a single cover basis element.
    pub fn class_of_label(&self, label: &str) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.free_rank()];
        v[self.label_index(label)] = BigInt::one();
        self.project(&v)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .acting
            .small_generating_set()
            .iter()
            .map(|g| {
                serde_json::json!({
                    "generator": g.to_notation(),
                    "matrix": int_matrix_rows(self.cover_action(g)),
                })
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "basis": self.labels,
            "relations": int_matrix_rows(&self.relations),
            "rank": self.rank,
            "action": gens,
        })
    }
}

fn int_matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect()
}

/// Fill in the action of every element of `acting` from generators by
/// breadth-first products, asserting consistency on every revisited element;
/// the consistency checks amount to verifying the defining relations of the
/// subgroup on the nose.
fn propagate_action(
    generator_action: &[(GammaElt, IntMatrix)],
    n: usize,
    acting: GammaSubgroup,
) -> Vec<Option<IntMatrix>> {
    let t = gamma();
    let mut matrices: Vec<Option<IntMatrix>> = vec![None; GAMMA_ORDER];
    matrices[GammaElt::IDENTITY.index()] = Some(IntMatrix::identity(n));
    let mut queue = vec![GammaElt::IDENTITY.index()];
    while let Some(h) = queue.pop() {
        let mh = matrices[h].clone().expect("queued element has a matrix");
        for (g, mg) in generator_action {
            let gh = t.mul_idx(g.index(), h);
            let prod = mg.mul(&mh);
            match &matrices[gh] {
                None => {
                    matrices[gh] = Some(prod);
                    queue.push(gh);
                }
                Some(existing) => {
                    assert_eq!(
                        existing, &prod,
                        "inconsistent action matrices: generators do not satisfy the group relations"
                    );
                }
            }
        }
    }
    let reached = GammaSubgroup::from_elements(
        &(0..GAMMA_ORDER)
            .filter(|&i| matrices[i].is_some())
            .map(GammaElt::from_index)
            .collect::<Vec<_>>(),
    );
    assert_eq!(
        reached.0, acting.0,
        "generators do not generate the stated acting subgroup"
    );
    matrices
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finabgroup_display_and_order() {
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert_eq!(FinAbGroup::cyclic(3).to_string(), "Z/3");
        let g = FinAbGroup::from_invariant_factors(vec![
            BigInt::one(),
            BigInt::from(2),
            BigInt::from(4),
        ]);
        assert_eq!(g.to_string(), "Z/2 x Z/4");
        assert_eq!(g.order(), 8);
    }
}
