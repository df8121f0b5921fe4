//! The standard lattices: the free module on the nine planes, the relation
//! module, the class lattice of the smooth locus, the node module, the class
//! lattice of the blown-up threefold, and the character lattices of the
//! three tori.
//!
//! Grid position `(i, j)` (0-based) is index `3 i + j`; plane labels use the
//! 1-based names `L11 .. L33`.  The hyperplane class is identified with the
//! first row sum `R1 = L11 + L12 + L13`; that all row and column sums have
//! equal class is a checked lemma, not an assumption.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::intmat::IntMatrix;
use crate::lattice::module::ZGModule;
use crate::wreath::gamma::GammaElt;
use crate::wreath::perm::Perm3;

fn grid_label(prefix: &str, pos: usize) -> String {
    format!("{}{}{}", prefix, pos / 3 + 1, pos % 3 + 1)
}

fn grid_labels(prefix: &str) -> Vec<String> {
    (0..9).map(|p| grid_label(prefix, p)).collect()
}

/// The generators used to present every standard module.
pub fn standard_generators() -> [GammaElt; 3] {
    [
        GammaElt::new(Perm3([1, 2, 0]), Perm3::IDENTITY, false),
        GammaElt::new(Perm3([1, 0, 2]), Perm3::IDENTITY, false),
        GammaElt::IOTA,
    ]
}

/// Permutation matrix of the grid action of `g` on 9 basis vectors.
fn grid_perm_matrix(g: &GammaElt) -> IntMatrix {
    let mut m = IntMatrix::zero(9, 9);
    for pos in 0..9 {
        *m.at_mut(g.grid_apply(pos), pos) = BigInt::one();
    }
    m
}

/// Signed action on the difference generators: `q_ij -> q_{g(i,j)}` for
/// grid elements, `q_ij -> -q_ji` for the factor flip.
fn difference_action_matrix(g: &GammaElt) -> IntMatrix {
    let mut m = IntMatrix::zero(9, 9);
    let sign = if g.eps { -1i64 } else { 1 };
    for pos in 0..9 {
        *m.at_mut(g.grid_apply(pos), pos) = BigInt::from(sign);
    }
    m
}

/// The vector of `R_i - C_j` in the free cover on the nine planes.
pub fn row_minus_col(i: usize, j: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 9];
    for q in 0..3 {
        v[3 * i + q] += 1;
        v[3 * q + j] -= 1;
    }
    v
}

fn perm_action_gens(prefix_matrix: fn(&GammaElt) -> IntMatrix) -> Vec<(GammaElt, IntMatrix)> {
    standard_generators()
        .iter()
        .map(|g| (*g, prefix_matrix(g)))
        .collect()
}

/// `F`: free on the nine plane classes.
pub fn module_f() -> ZGModule {
    ZGModule::new(
        "F",
        grid_labels("L"),
        IntMatrix::zero(0, 9),
        &perm_action_gens(grid_perm_matrix),
    )
}

/// `P`: the class lattice of the smooth locus, free cover on the planes
/// modulo all `R_i - C_j`.
pub fn module_p() -> ZGModule {
    let mut rel = IntMatrix::zero(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            let v = row_minus_col(i, j);
            for (c, x) in v.into_iter().enumerate() {
                *rel.at_mut(3 * i + j, c) = x;
            }
        }
    }
    ZGModule::new(
        "P",
        grid_labels("L"),
        rel,
        &perm_action_gens(grid_perm_matrix),
    )
}

/// `Q`: the relation module, generated by the differences `R_i - C_j`.
pub fn module_q() -> ZGModule {
    module_q_named("Q", "q")
}

fn module_q_named(name: &str, prefix: &str) -> ZGModule {
    // relations = kernel of q_ij -> R_i - C_j into the free cover of F
    let mut to_f = IntMatrix::zero(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            let v = row_minus_col(i, j);
            for (r, x) in v.into_iter().enumerate() {
                *to_f.at_mut(r, 3 * i + j) = x;
            }
        }
    }
    let rel_rows = to_f.kernel_lattice();
    let rel = IntMatrix::from_rows_big(rel_rows);
    ZGModule::new(
        name,
        grid_labels(prefix),
        rel,
        &perm_action_gens(difference_action_matrix),
    )
}

/// The cover-level matrix of the inclusion `Q -> F`, `q_ij -> R_i - C_j`.
pub fn map_q_into_f() -> IntMatrix {
    let mut m = IntMatrix::zero(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            let v = row_minus_col(i, j);
            for (r, x) in v.into_iter().enumerate() {
                *m.at_mut(r, 3 * i + j) = x;
            }
        }
    }
    m
}

/// `E`: free on the nine exceptional classes over the nodes, with the grid
/// action on the node indices.
pub fn module_e() -> ZGModule {
    ZGModule::new(
        "E",
        grid_labels("E"),
        IntMatrix::zero(0, 9),
        &perm_action_gens(grid_perm_matrix),
    )
}

/// `PicTilde`: the class lattice of the blow-up.  Cover basis: the nine
/// strict transforms `P_ij`, the nine exceptional classes `E_pq`, and the
/// hyperplane pull-back `H`.  The hyperplane section cut by `x_i = 0` is the
/// three planes of row `i` together with the exceptional divisors over the
/// nodes lying on it (`v_pq` with `p != i`), and dually for columns; those
/// six relations present the lattice.
pub fn module_pictilde() -> ZGModule {
    let mut labels = grid_labels("P");
    labels.extend(grid_labels("E"));
    labels.push("H".to_string());
    let n = 19;

    let mut rel = IntMatrix::zero(6, n);
    for i in 0..3 {
        // row relation: sum_j P_ij + sum_{p != i, q} E_pq - H = 0
        for j in 0..3 {
            *rel.at_mut(i, 3 * i + j) = BigInt::one();
        }
        for p in 0..3 {
            if p == i {
                continue;
            }
            for q in 0..3 {
                *rel.at_mut(i, 9 + 3 * p + q) = BigInt::one();
            }
        }
        *rel.at_mut(i, 18) = -BigInt::one();
    }
    for j in 0..3 {
        // column relation: sum_i P_ij + sum_{p, q != j} E_pq - H = 0
        for i in 0..3 {
            *rel.at_mut(3 + j, 3 * i + j) = BigInt::one();
        }
        for p in 0..3 {
            for q in 0..3 {
                if q == j {
                    continue;
                }
                *rel.at_mut(3 + j, 9 + 3 * p + q) = BigInt::one();
            }
        }
        *rel.at_mut(3 + j, 18) = -BigInt::one();
    }

    let action = standard_generators()
        .iter()
        .map(|g| {
            let mut m = IntMatrix::zero(n, n);
            for pos in 0..9 {
                *m.at_mut(g.grid_apply(pos), pos) = BigInt::one();
                *m.at_mut(9 + g.grid_apply(pos), 9 + pos) = BigInt::one();
            }
            *m.at_mut(18, 18) = BigInt::one();
            (*g, m)
        })
        .collect::<Vec<_>>();

    ZGModule::new("PicTilde", labels, rel, &action)
}

/// Cover matrix of `E -> PicTilde`.
pub fn map_e_into_pictilde() -> IntMatrix {
    let mut m = IntMatrix::zero(19, 9);
    for pos in 0..9 {
        *m.at_mut(9 + pos, pos) = BigInt::one();
    }
    m
}

/// Cover matrix of `PicTilde -> P` (strict transforms to classes, the
/// exceptional block to zero, `H` to `R1`).
pub fn map_pictilde_onto_p() -> IntMatrix {
    let mut m = IntMatrix::zero(9, 19);
    for pos in 0..9 {
        *m.at_mut(pos, pos) = BigInt::one();
    }
    for j in 0..3 {
        *m.at_mut(j, 18) = BigInt::one();
    }
    m
}

/// Character lattice of the big torus: structurally the same presentation
/// and action as `Q` under `s_ij = x_i / y_j`.
pub fn module_s_hat() -> ZGModule {
    module_q_named("S_hat", "s")
}

/// Character lattice of the intermediate torus: the free module on the
/// plane classes.
pub fn module_m_hat() -> ZGModule {
    let mut m = module_f();
    m.rename("M_hat");
    m
}

/// Character lattice of the torus of the torsor: isomorphic to `P`.
pub fn module_s0_hat() -> ZGModule {
    let mut m = module_p();
    m.rename("S0_hat");
    m
}

/// The permutation module on the six coordinate labels.
pub fn module_coordinate_perm() -> ZGModule {
    let labels = crate::wreath::gamma::COORD_NAMES
        .iter()
        .map(|s| s.to_string())
        .collect();
    let action = standard_generators()
        .iter()
        .map(|g| {
            let mut m = IntMatrix::zero(6, 6);
            for label in 0..6 {
                *m.at_mut(g.coord_apply(label), label) = BigInt::one();
            }
            (*g, m)
        })
        .collect::<Vec<_>>();
    ZGModule::new("Coords", labels, IntMatrix::zero(0, 6), &action)
}

/// The rank-one kernel sequence over the row rotation: the difference of
/// the first two column sums, the free module on the first two columns of
/// planes, and the class lattice.
pub fn factor_case_sequence() -> Result<crate::lattice::exactseq::ExactnessReport, Error> {
    use crate::lattice::exactseq::ShortExactSequence;
    let w = crate::wreath::subgroup::a3_x_one();
    let rot = GammaElt::new(Perm3([1, 2, 0]), Perm3::IDENTITY, false);

    // the difference C1 - C2 is fixed by row rotation
    let z = ZGModule::new_for_subgroup(
        "Z.(C1-C2)",
        vec!["C1-C2".to_string()],
        IntMatrix::zero(0, 1),
        &[(rot, IntMatrix::identity(1))],
        w,
    );

    // free module on the first two columns of planes
    let pos6: Vec<usize> = (0..3).flat_map(|i| [3 * i, 3 * i + 1]).collect();
    let labels6: Vec<String> = pos6.iter().map(|&p| grid_label("L", p)).collect();
    let mut rot_action = IntMatrix::zero(6, 6);
    for (col, &p) in pos6.iter().enumerate() {
        let target = pos6
            .iter()
            .position(|&t| t == rot.grid_apply(p))
            .expect("row rotation preserves the column pair");
        *rot_action.at_mut(target, col) = BigInt::one();
    }
    let p1 = ZGModule::new_for_subgroup(
        "P1",
        labels6,
        IntMatrix::zero(0, 6),
        &[(rot, rot_action)],
        w,
    );

    // C1 - C2 in the column pair, and the inclusion into the class lattice
    let mut f_map = IntMatrix::zero(6, 1);
    for (row, &p) in pos6.iter().enumerate() {
        *f_map.at_mut(row, 0) = if p % 3 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
    }
    let p = module_p();
    let mut g_map = IntMatrix::zero(9, 6);
    for (col, &pcover) in pos6.iter().enumerate() {
        *g_map.at_mut(pcover, col) = BigInt::one();
    }
    ShortExactSequence {
        a: &z,
        b: &p1,
        c: &p,
        f: f_map,
        g: g_map,
    }
    .verify()
}

/// Standard module lookup by name.
pub fn standard_module(name: &str) -> Result<ZGModule, Error> {
    match name {
        "F" => Ok(module_f()),
        "Q" => Ok(module_q()),
        "P" => Ok(module_p()),
        "E" => Ok(module_e()),
        "PicTilde" => Ok(module_pictilde()),
        "S_hat" => Ok(module_s_hat()),
        "S0_hat" => Ok(module_s0_hat()),
        "M_hat" => Ok(module_m_hat()),
        other => Err(Error::UnknownModule(other.to_string())),
    }
}

pub const STANDARD_MODULE_NAMES: [&str; 8] =
    ["F", "Q", "P", "E", "PicTilde", "S_hat", "S0_hat", "M_hat"];

/// A formal integer combination of the nine plane classes and the
/// hyperplane class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorExpr {
    pub planes: [i64; 9],
    pub h: i64,
}

impl DivisorExpr {
    pub fn zero() -> Self {
        DivisorExpr {
            planes: [0; 9],
            h: 0,
        }
    }

    pub fn plane(i: usize, j: usize) -> Self {
        let mut d = DivisorExpr::zero();
        d.planes[3 * i + j] = 1;
        d
    }

    pub fn hyperplane() -> Self {
        DivisorExpr {
            planes: [0; 9],
            h: 1,
        }
    }

    pub fn add(&self, other: &DivisorExpr) -> DivisorExpr {
        let mut planes = [0i64; 9];
        for (k, p) in planes.iter_mut().enumerate() {
            *p = self.planes[k] + other.planes[k];
        }
        DivisorExpr {
            planes,
            h: self.h + other.h,
        }
    }

    pub fn scale(&self, c: i64) -> DivisorExpr {
        let mut planes = [0i64; 9];
        for (k, p) in planes.iter_mut().enumerate() {
            *p = c * self.planes[k];
        }
        DivisorExpr {
            planes,
            h: c * self.h,
        }
    }

    pub fn neg(&self) -> DivisorExpr {
        self.scale(-1)
    }

    /// Move the planes along the grid action; the hyperplane class is fixed
    /// (all row and column sums have the same class, a checked lemma).
    pub fn gamma_apply(&self, g: &GammaElt) -> DivisorExpr {
        let mut planes = [0i64; 9];
        for pos in 0..9 {
            planes[g.grid_apply(pos)] = self.planes[pos];
        }
        DivisorExpr { planes, h: self.h }
    }

    /// Vector in the free cover of `P`, with `H` expanded as `R1`.
    pub fn cover_vector(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.planes.iter().map(|&c| BigInt::from(c)).collect();
        for j in 0..3 {
            v[j] += BigInt::from(self.h);
        }
        v
    }

    /// Class in the realized lattice of `p`.
    pub fn class_in(&self, p: &ZGModule) -> Vec<BigInt> {
        p.project(&self.cover_vector())
    }

    pub fn is_principal(&self, p: &ZGModule) -> bool {
        self.class_in(p).iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_and_torsion_of_standard_modules() {
        let expect = [
            ("F", 9),
            ("Q", 4),
            ("P", 5),
            ("E", 9),
            ("PicTilde", 14),
            ("S_hat", 4),
            ("S0_hat", 5),
            ("M_hat", 9),
        ];
        for (name, rank) in expect {
            let m = standard_module(name).unwrap();
            assert_eq!(m.rank(), rank, "rank of {name}");
            assert!(
                m.presentation_torsion().is_trivial(),
                "torsion in {name}"
            );
        }
        assert!(matches!(
            standard_module("nope"),
            Err(Error::UnknownModule(_))
        ));
    }

    #[test]
    fn relation_matrix_of_p_has_rank_four_with_unit_factors() {
        let p = module_p();
        let snf = p.relations().transpose().snf();
        assert_eq!(snf.rank, 4);
        assert!(snf.invariant_factors().iter().all(|d| d.is_one()));
        assert_eq!(p.rank(), 9 - 4);
    }

    #[test]
    fn displayed_relation_is_zero_in_p() {
        // L11 + L13 - L22 - L32
        let p = module_p();
        let d = DivisorExpr::plane(0, 0)
            .add(&DivisorExpr::plane(0, 2))
            .add(&DivisorExpr::plane(1, 1).neg())
            .add(&DivisorExpr::plane(2, 1).neg());
        assert!(d.is_principal(&p));
    }

    #[test]
    fn all_row_and_column_sums_share_one_class() {
        let p = module_p();
        let h = DivisorExpr::hyperplane().class_in(&p);
        for i in 0..3 {
            let mut r = DivisorExpr::zero();
            for j in 0..3 {
                r = r.add(&DivisorExpr::plane(i, j));
            }
            assert_eq!(r.class_in(&p), h, "row {i}");
            let mut c = DivisorExpr::zero();
            for j in 0..3 {
                c = c.add(&DivisorExpr::plane(j, i));
            }
            assert_eq!(c.class_in(&p), h, "column {i}");
        }
    }

    #[test]
    fn single_plane_is_not_principal() {
        let p = module_p();
        assert!(!DivisorExpr::plane(0, 0).is_principal(&p));
        assert!(DivisorExpr::zero().is_principal(&p));
    }

    #[test]
    fn action_permutes_plane_classes() {
        let p = module_p();
        let g = GammaElt::parse("((123),(12),1)").unwrap();
        for pos in 0..9 {
            let d = DivisorExpr {
                planes: {
                    let mut a = [0; 9];
                    a[pos] = 1;
                    a
                },
                h: 0,
            };
            let lhs = p.action(&g).mul_vec(&d.class_in(&p));
            let rhs = d.gamma_apply(&g).class_in(&p);
            assert_eq!(lhs, rhs);
        }
    }
}
