//! The subgroup-by-subgroup classification of `H^1(W, Pic)`: one row per
//! conjugacy class of subgroups of the wreath group, the two-torsion
//! vanishing with its filtration replay, the blow-up comparison, and the
//! class-level check behind the explicit nontrivial element.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::exact::intmat::IntMatrix;
use crate::lattice::cohomology::h1;
use crate::lattice::module::{FinAbGroup, ZGModule};
use crate::lattice::standard::{module_e, module_p, module_pictilde, DivisorExpr};
use crate::wreath::gamma::GammaElt;
use crate::wreath::perm::Perm3;
use crate::wreath::subgroup::{
    all_subgroups, subgroups_up_to_conjugacy, GammaSubgroup, SubgroupLabel, FULL_GROUP,
};

/// One row of the classification table.
#[derive(Clone, Debug, Serialize)]
pub struct BrauerRow {
    pub label: String,
    pub order: usize,
    pub class_size: usize,
    pub generators: Vec<String>,
    pub h1_pic: FinAbGroup,
    pub h1_pic_blowup: FinAbGroup,
    pub h1_exceptional: FinAbGroup,
    /// `trivial` or `Z/3`; anything else would break the dichotomy.
    pub verdict: String,
    /// Whether the row is one of the named cases (the factor copy, the
    /// diagonal, the full Sylow 3-subgroup, a 2-group, or the trivial
    /// subgroup); other rows extend the named classification.
    pub named_case: bool,
    pub blowup_comparison_ok: bool,
    pub exceptional_vanishes: bool,
    pub dichotomy_ok: bool,
}

/// The full table over every conjugacy class of subgroups, in canonical
/// (order, representative) order.
pub fn brauer_table() -> Result<Vec<BrauerRow>, Error> {
    let p = module_p();
    let pt = module_pictilde();
    let e = module_e();
    let mut rows = Vec::new();
    for class in subgroups_up_to_conjugacy(FULL_GROUP) {
        let w = class.representative;
        let h1_pic = h1(&w, &p)?;
        let h1_pt = h1(&w, &pt)?;
        let h1_e = h1(&w, &e)?;
        let verdict = if h1_pic.is_trivial() {
            "trivial".to_string()
        } else if h1_pic == FinAbGroup::cyclic(3) {
            "Z/3".to_string()
        } else {
            format!("unexpected: {h1_pic}")
        };
        let named_case = !matches!(class.label, SubgroupLabel::Other);
        let blowup_comparison_ok = h1_pic == h1_pt;
        let exceptional_vanishes = h1_e.is_trivial();
        let dichotomy_ok = verdict == "trivial" || verdict == "Z/3";
        rows.push(BrauerRow {
            label: class.label.as_str().to_string(),
            order: class.order,
            class_size: class.class_size,
            generators: w
                .small_generating_set()
                .iter()
                .map(|g| g.to_notation())
                .collect(),
            h1_pic,
            h1_pic_blowup: h1_pt,
            h1_exceptional: h1_e,
            verdict,
            named_case,
            blowup_comparison_ok,
            exceptional_vanishes,
            dichotomy_ok,
        });
    }
    Ok(rows)
}

/// Blow-up comparison for a single subgroup: the exceptional block has
/// vanishing `H^1` and the two class lattices have the same `H^1`.
pub fn verify_blowup_comparison(w: &GammaSubgroup) -> Result<bool, Error> {
    let p = module_p();
    let pt = module_pictilde();
    let e = module_e();
    Ok(h1(w, &e)?.is_trivial() && h1(w, &p)? == h1(w, &pt)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    /// Rank of the sublattice spanned by the four inner plane classes.
    pub m_rank: usize,
    /// The sublattice is saturated, so the quotient is torsion-free.
    pub m_saturated: bool,
    pub quotient_rank: usize,
    /// The image of `L12` generates the quotient.
    pub x_generates: bool,
    /// Integer `k` with `L11 = k * x` in the quotient.
    pub l11_coefficient: i64,
    /// The inner 2x2 block is permuted by the stabilizer Sylow 2-subgroup.
    pub m_stable_under_stabilizer: bool,
    /// `H^1` of the sub and the quotient vanish for every subgroup of the
    /// stabilizer Sylow 2-subgroup.
    pub h1_sub_and_quotient_vanish: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoTorsionReport {
    pub two_subgroup_count: usize,
    pub all_h1_vanish: bool,
    pub filtration: FiltrationReport,
    pub pass: bool,
}

/// The Sylow 2-subgroup stabilizing the corner plane: both wreath factors
/// move only the last two letters, plus the factor flip.
pub fn corner_sylow_two() -> GammaSubgroup {
    let swap23 = Perm3([0, 2, 1]);
    GammaSubgroup::generated_by(&[
        GammaElt::new(swap23, Perm3::IDENTITY, false),
        GammaElt::new(Perm3::IDENTITY, swap23, false),
        GammaElt::IOTA,
    ])
}

/// Direct vanishing of `H^1(W, P)` over every 2-subgroup, plus the replay
/// of the filtration argument through the inner 2x2 block.
pub fn two_torsion_vanishing() -> Result<TwoTorsionReport, Error> {
    let p = module_p();

    // every subgroup of every Sylow 2-subgroup is just every 2-subgroup
    let two_subgroups: Vec<GammaSubgroup> = all_subgroups(FULL_GROUP)
        .into_iter()
        .filter(|h| h.order().is_power_of_two())
        .collect();
    let mut all_vanish = true;
    for w in &two_subgroups {
        if !h1(w, &p)?.is_trivial() {
            all_vanish = false;
        }
    }

    // the inner block: grid positions with both coordinates >= 2 (1-based)
    let inner: [usize; 4] = [4, 5, 7, 8];
    let m_vectors: Vec<Vec<BigInt>> = inner
        .iter()
        .map(|&pos| {
            let mut v = vec![BigInt::zero(); 9];
            v[pos] = BigInt::from(1);
            p.project(&v)
        })
        .collect();
    let m_matrix = IntMatrix::from_rows_big(m_vectors.clone()).transpose();
    let snf = m_matrix.snf();
    let m_rank = snf.rank;
    let m_saturated = snf.invariant_factors().iter().all(num_traits::One::is_one);

    // quotient P / M via rational coordinates in the complement
    // (the quotient is torsion-free exactly when M is saturated)
    let quotient_rank = p.rank() - m_rank;

    // x = class of L12 (grid position 1), and the coefficient of L11
    let class_of_pos = |pos: usize| {
        let mut v = vec![BigInt::zero(); 9];
        v[pos] = BigInt::from(1);
        p.project(&v)
    };
    // quotient map: cokernel coordinates from the Smith form of m_matrix
    // (row of U past the rank)
    let x_img = quotient_image(&snf, &class_of_pos(1));
    let l11_img = quotient_image(&snf, &class_of_pos(0));
    let x_generates = x_img.len() == 1 && (x_img[0] == BigInt::from(1) || x_img[0] == BigInt::from(-1));
    let l11_coefficient = if x_generates {
        let k = &l11_img[0] / &x_img[0];
        use num_traits::ToPrimitive;
        k.to_i64().unwrap_or(i64::MAX)
    } else {
        i64::MAX
    };

    // the stabilizer Sylow 2-subgroup permutes the inner block
    let s2 = corner_sylow_two();
    let mut m_stable = s2.order() == 8;
    for g in s2.elements() {
        for &pos in &inner {
            if !inner.contains(&g.grid_apply(pos)) {
                m_stable = false;
            }
        }
    }

    // the sub and quotient as modules over the stabilizer subgroup
    let inner_labels: Vec<String> = inner.iter().map(|&k| format!("L{}{}", k / 3 + 1, k % 3 + 1)).collect();
    let gens = s2.small_generating_set();
    let m_action: Vec<(GammaElt, IntMatrix)> = gens
        .iter()
        .map(|g| {
            let mut a = IntMatrix::zero(4, 4);
            for (col, &pos) in inner.iter().enumerate() {
                let target = inner.iter().position(|&t| t == g.grid_apply(pos)).expect("stable");
                *a.at_mut(target, col) = BigInt::from(1);
            }
            (*g, a)
        })
        .collect();
    let m_module = ZGModule::new_for_subgroup("M_inner", inner_labels, IntMatrix::zero(0, 4), &m_action, s2);

    // quotient module: P with the four inner generators also killed
    let grid_action: Vec<(GammaElt, IntMatrix)> = gens
        .iter()
        .map(|g| {
            let mut a = IntMatrix::zero(9, 9);
            for pos in 0..9 {
                *a.at_mut(g.grid_apply(pos), pos) = BigInt::from(1);
            }
            (*g, a)
        })
        .collect();
    let quotient_module = ZGModule::new_for_subgroup(
        "P_mod_inner",
        (0..9).map(|k| format!("L{}{}", k / 3 + 1, k % 3 + 1)).collect(),
        IntMatrix::from_rows_big(module_p_relations_plus_inner(&inner)),
        &grid_action,
        s2,
    );

    let mut h1_vanish = quotient_module.rank() == 1;
    for w in all_subgroups(s2) {
        if !h1(&w, &m_module)?.is_trivial() || !h1(&w, &quotient_module)?.is_trivial() {
            h1_vanish = false;
        }
    }

    let filtration = FiltrationReport {
        m_rank,
        m_saturated,
        quotient_rank,
        x_generates,
        l11_coefficient,
        m_stable_under_stabilizer: m_stable,
        h1_sub_and_quotient_vanish: h1_vanish,
    };
    let pass = all_vanish
        && m_rank == 4
        && m_saturated
        && quotient_rank == 1
        && x_generates
        && m_stable
        && h1_vanish;
    Ok(TwoTorsionReport {
        two_subgroup_count: two_subgroups.len(),
        all_h1_vanish: all_vanish,
        filtration,
        pass,
    })
}

fn module_p_relations_plus_inner(inner: &[usize; 4]) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            rows.push(
                crate::lattice::standard::row_minus_col(i, j),
            );
        }
    }
    for &pos in inner {
        let mut v = vec![BigInt::zero(); 9];
        v[pos] = BigInt::from(1);
        rows.push(v);
    }
    rows
}

/// Coordinates of a vector in the cokernel of the column lattice of the
/// Smith-decomposed matrix (which must be saturated).
fn quotient_image(snf: &crate::exact::intmat::SnfResult, v: &[BigInt]) -> Vec<BigInt> {
    let uv = snf.u.mul_vec(v);
    uv[snf.rank..].to_vec()
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementClassReport {
    pub orbit_sum_principal: bool,
    pub divisor_alone_principal: bool,
    pub triple_divisor_principal: bool,
    pub pass: bool,
}

/// The class-level premise of the explicit nontrivial element: the orbit sum
/// of `sum L_ii - H` under the row rotation is principal, while the divisor
/// itself (and its triple) is not.
pub fn verify_element_class() -> ElementClassReport {
    let p = module_p();
    let sigma = GammaElt::new(Perm3([1, 2, 0]), Perm3::IDENTITY, false);
    let d = DivisorExpr::plane(0, 0)
        .add(&DivisorExpr::plane(1, 1))
        .add(&DivisorExpr::plane(2, 2))
        .add(&DivisorExpr::hyperplane().neg());
    let mut orbit_sum = DivisorExpr::zero();
    let mut moved = d.clone();
    for _ in 0..3 {
        orbit_sum = orbit_sum.add(&moved);
        moved = moved.gamma_apply(&sigma);
    }
    let orbit_sum_principal = orbit_sum.is_principal(&p);
    let divisor_alone_principal = d.is_principal(&p);
    let triple_divisor_principal = d.scale(3).is_principal(&p);
    ElementClassReport {
        orbit_sum_principal,
        divisor_alone_principal,
        triple_divisor_principal,
        pass: orbit_sum_principal && !divisor_alone_principal && !triple_divisor_principal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::subgroup::{a3_x_a3, a3_x_one, diagonal_a3};

    #[test]
    fn named_rows_match_the_classification() {
        let rows = brauer_table().unwrap();
        let find = |label: &str| rows.iter().find(|r| r.label == label).unwrap();
        assert_eq!(find("A3x1").h1_pic, FinAbGroup::cyclic(3));
        assert!(find("Delta").h1_pic.is_trivial());
        assert_eq!(find("A3xA3").h1_pic, FinAbGroup::cyclic(3));
        assert!(find("trivial").h1_pic.is_trivial());
        assert!(find("Sylow2").h1_pic.is_trivial());
    }

    #[test]
    fn dichotomy_and_blowup_comparison_hold_on_every_row() {
        let rows = brauer_table().unwrap();
        assert_eq!(rows.len(), 26);
        for row in &rows {
            assert!(row.dichotomy_ok, "row {row:?}");
            assert!(row.blowup_comparison_ok, "row {row:?}");
            assert!(row.exceptional_vanishes, "row {row:?}");
        }
    }

    #[test]
    fn trichotomy_inside_the_sylow_three_subgroup() {
        // subgroups of the Sylow 3-subgroup: trivial, the factor copies,
        // the diagonals, and the whole group
        let p = module_p();
        let z3 = FinAbGroup::cyclic(3);
        assert_eq!(h1(&a3_x_one(), &p).unwrap(), z3);
        assert_eq!(h1(&a3_x_a3(), &p).unwrap(), z3);
        assert!(h1(&diagonal_a3(), &p).unwrap().is_trivial());
        assert!(h1(&GammaSubgroup::trivial(), &p).unwrap().is_trivial());
    }

    #[test]
    fn conjugate_subgroups_share_a_row() {
        let p = module_p();
        let w = a3_x_one();
        for g in [GammaElt::IOTA, GammaElt::parse("((12),(123),0)").unwrap()] {
            let conj = w.conjugate_by_idx(g.index());
            assert_eq!(h1(&w, &p).unwrap(), h1(&conj, &p).unwrap());
        }
    }

    #[test]
    fn two_torsion_vanishes_and_filtration_replays() {
        let report = two_torsion_vanishing().unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.filtration.m_rank, 4);
        assert_eq!(report.filtration.quotient_rank, 1);
        // the corner class is minus the generator in the quotient; the
        // exact lattice computation pins the coefficient
        assert_eq!(report.filtration.l11_coefficient, -1);
    }

    #[test]
    fn element_class_checks() {
        let r = verify_element_class();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn blowup_comparison_for_named_subgroups() {
        assert!(verify_blowup_comparison(&a3_x_a3()).unwrap());
        assert!(verify_blowup_comparison(&diagonal_a3()).unwrap());
        assert!(verify_blowup_comparison(&FULL_GROUP).unwrap());
    }
}
