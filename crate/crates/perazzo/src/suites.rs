//! The composite verification suites behind `verify`: each function appends
//! check records to a shared report.  These are the same checks the
//! acceptance tests pin down, packaged for the command line.

use serde_json::json;

use crate::error::Error;
use crate::exact::field::PrimeField;
use crate::exact::intmat::IntMatrix;
use crate::lattice::module::FinAbGroup;
use crate::lattice::standard::{
    map_e_into_pictilde, map_pictilde_onto_p, map_q_into_f, module_coordinate_perm, module_e,
    module_f, module_p, module_pictilde, module_q, module_s0_hat, module_s_hat, module_m_hat,
    DivisorExpr,
};
use crate::lattice::{h1, h1_cyclic, h2_cyclic, ShortExactSequence};
use crate::report::Report;
use crate::wreath::gamma::gamma;
use crate::wreath::subgroup::{subgroups_up_to_conjugacy, GammaSubgroup, FULL_GROUP};

/// Lattice structure: relation matrix rank, torsion-freeness, the displayed
/// relation, and the exact sequences.
pub fn lattice_suite(report: &mut Report) -> Result<(), Error> {
    let p = module_p();
    let snf = p.relations().transpose().snf();
    let unit_factors = snf.invariant_factors().iter().all(num_traits::One::is_one);
    report.push(
        "lattice-relations",
        "relation matrix has rank 4 with unit invariant factors",
        snf.rank == 4 && unit_factors,
        json!({ "rank": snf.rank, "invariant_factors": snf.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>() }),
    );
    report.push(
        "lattice-class-rank",
        "class lattice is torsion-free of rank 5",
        p.rank() == 5 && p.presentation_torsion().is_trivial(),
        json!({ "rank": p.rank(), "torsion": p.presentation_torsion() }),
    );
    let d = DivisorExpr::plane(0, 0)
        .add(&DivisorExpr::plane(0, 2))
        .add(&DivisorExpr::plane(1, 1).neg())
        .add(&DivisorExpr::plane(2, 1).neg());
    report.push(
        "lattice-displayed-relation",
        "L11 + L13 - L22 - L32 maps to zero",
        d.is_principal(&p),
        json!({ "class": d.class_in(&p).iter().map(|x| x.to_string()).collect::<Vec<_>>() }),
    );

    // exact sequences
    let q = module_q();
    let f = module_f();
    let seqs: Vec<(&str, ShortExactSequence)> = vec![
        (
            "relation-sequence",
            ShortExactSequence {
                a: &q,
                b: &f,
                c: &p,
                f: map_q_into_f(),
                g: IntMatrix::identity(9),
            },
        ),
    ];
    for (id, seq) in seqs {
        let r = seq.verify()?;
        report.push_serializable(id, "short exact sequence certificate", r.pass, &r);
    }
    let e = module_e();
    let pt = module_pictilde();
    let blowup = ShortExactSequence {
        a: &e,
        b: &pt,
        c: &p,
        f: map_e_into_pictilde(),
        g: map_pictilde_onto_p(),
    }
    .verify()?;
    report.push_serializable(
        "blowup-sequence",
        "exceptional block, blow-up lattice, class lattice",
        blowup.pass,
        &blowup,
    );
    let s_hat = module_s_hat();
    let m_hat = module_m_hat();
    let s0_hat = module_s0_hat();
    let chars = ShortExactSequence {
        a: &s_hat,
        b: &m_hat,
        c: &s0_hat,
        f: map_q_into_f(),
        g: IntMatrix::identity(9),
    }
    .verify()?;
    report.push_serializable(
        "character-sequence",
        "character lattices of the three tori",
        chars.pass,
        &chars,
    );

    // the cyclic-case sequence over the row-rotation subgroup
    let cyclic_seq = crate::lattice::standard::factor_case_sequence()?;
    report.push_serializable(
        "factor-case-sequence",
        "rank-one kernel sequence over the row rotation",
        cyclic_seq.pass,
        &cyclic_seq,
    );

    // permutation-module vanishing over every conjugacy class
    let coords = module_coordinate_perm();
    let mut perm_vanish = true;
    for class in subgroups_up_to_conjugacy(FULL_GROUP) {
        for m in [&f, &e, &coords] {
            if !h1(&class.representative, m)?.is_trivial() {
                perm_vanish = false;
            }
        }
    }
    report.push(
        "permutation-vanishing",
        "H1 vanishes on the three permutation modules for every class",
        perm_vanish,
        json!({}),
    );

    // cyclic cross-validation and the long-exact-sequence bound
    let mut cyclic_ok = true;
    let mut les_ok = true;
    let modules = [&f, &q, &p, &e, &pt];
    let mut seen = std::collections::BTreeSet::new();
    for elt in gamma().elements() {
        let w = GammaSubgroup::generated_by(&[*elt]);
        if !seen.insert(w) {
            continue;
        }
        for m in modules {
            if h1(&w, m)? != h1_cyclic(&w, m)? {
                cyclic_ok = false;
            }
        }
        // H1(W, F) = 0 so the order of H1(W, P) must divide |H2(W, Q)|
        let h1f = h1_cyclic(&w, &f)?;
        if h1f.is_trivial() {
            let h1p = h1_cyclic(&w, &p)?;
            let h2q = h2_cyclic(&w, &q)?;
            if h1p.order() != 0 && h2q.order() % h1p.order() != 0 {
                les_ok = false;
            }
        }
    }
    report.push(
        "cyclic-cross-validation",
        "presentation route equals the Tate route on every cyclic subgroup",
        cyclic_ok,
        json!({}),
    );
    report.push(
        "connecting-bound",
        "H1 of the class lattice divides H2 of the relation module, cyclic case",
        les_ok,
        json!({}),
    );
    Ok(())
}

/// The classification table, two-torsion vanishing, blow-up comparison, and
/// the element-class check.
pub fn brauer_suite(report: &mut Report) -> Result<(), Error> {
    let rows = crate::brauer::brauer_table()?;
    let named = |label: &str| rows.iter().find(|r| r.label == label);
    let z3 = FinAbGroup::cyclic(3);
    let named_ok = named("A3x1").map(|r| r.h1_pic == z3) == Some(true)
        && named("Delta").map(|r| r.h1_pic.is_trivial()) == Some(true)
        && named("A3xA3").map(|r| r.h1_pic == z3) == Some(true)
        && named("Sylow2").map(|r| r.h1_pic.is_trivial()) == Some(true);
    report.push(
        "named-classes",
        "factor copy and Sylow-3 give Z/3; diagonal and 2-groups vanish",
        named_ok,
        json!({}),
    );
    let dichotomy = rows.iter().all(|r| r.dichotomy_ok);
    report.push(
        "dichotomy",
        "H1 is trivial or Z/3 for every conjugacy class (extends the named cases)",
        dichotomy,
        json!({ "rows": rows.len(), "nontrivial": rows.iter().filter(|r| r.verdict == "Z/3").count() }),
    );
    let blowup = rows
        .iter()
        .all(|r| r.blowup_comparison_ok && r.exceptional_vanishes);
    report.push(
        "blowup-comparison",
        "H1 agrees on the blow-up lattice and vanishes on the exceptional block, all classes",
        blowup,
        json!({}),
    );
    let two = crate::brauer::two_torsion_vanishing()?;
    report.push_serializable(
        "two-torsion",
        "H1 vanishes for every 2-subgroup; filtration replay",
        two.pass,
        &two,
    );
    let elt = crate::brauer::verify_element_class();
    report.push_serializable(
        "element-class",
        "orbit sum of the diagonal divisor is principal, the divisor is not",
        elt.pass,
        &elt,
    );
    report.push_serializable(
        "classification-table",
        "full table",
        dichotomy && blowup,
        &rows,
    );
    Ok(())
}

/// Chart identity, equivariance, double-three, and the unit censuses.
pub fn torsor_suite(report: &mut Report) -> Result<(), Error> {
    report.push(
        "chart-identity",
        "defining cubic pulls back to zero; both products equal the full product",
        crate::torsor::verify_identity(),
        json!({}),
    );
    let eq = crate::torsor::check_equivariance_all();
    report.push(
        "chart-equivariance",
        "lift is equivariant for all 72 elements",
        eq == Ok(72),
        json!({ "checked": eq.unwrap_or(0) }),
    );
    let dt = crate::torsor::verify_double_three_structure();
    report.push_serializable(
        "double-three",
        "span, triple meets, disjointness, unique split, 36 vanishing checks",
        dt.pass,
        &dt,
    );
    for q in [2u64, 3, 5] {
        let c = crate::torsor::torsor_census(&PrimeField::new(q));
        report.push_serializable(
            &format!("chart-census-q{q}"),
            "constant fibers of size (q-1)^5, surjective onto the open locus",
            c.pass,
            &c,
        );
    }
    Ok(())
}

/// The certified section: nodes, planes, incidence, reconstruction, dual
/// degrees, and the graded ideal identity.
pub fn geometry_suite(report: &mut Report, seed: u64, trunc: u32) -> Result<(), Error> {
    let coeffs = crate::geometry::standard_section_coeffs();
    let section = crate::geometry::nine_nodal_section(&coeffs)?;
    let cert = section.certify(trunc, seed, 3)?;
    let nodes_ok = cert.node_reports.iter().all(|r| r.is_node && r.m == 2);
    report.push(
        "section-nodes",
        "nine distinct ordinary nodes over the rationals, censused at three good primes",
        nodes_ok && cert.good_primes.len() >= 3,
        json!({
            "good_primes": cert.good_primes,
            "skipped": cert.skipped_primes,
            "point_census": cert.point_census,
            "nodes": cert.node_reports,
        }),
    );
    report.push(
        "section-incidence",
        "nine planes, four nodes each, grid incidence with automorphism order 72",
        cert.incidence.pass,
        serde_json::to_value(&cert.incidence).expect("serializes"),
    );
    report.push(
        "nine-n-equals-four-f",
        "incidence count: 9 nodes x 4 planes = 4 nodes x 9 planes",
        cert.planes_per_node == 4 && cert.nodes_per_plane == 4,
        json!({ "planes_per_node": cert.planes_per_node, "nodes_per_plane": cert.nodes_per_plane }),
    );

    // plane censuses over the small good primes
    let mut plane_counts = Vec::new();
    let mut plane_ok = true;
    for &p in cert.good_primes.iter().filter(|&&p| p <= 5) {
        let fp = PrimeField::new(p);
        let xp = section
            .threefold
            .reduce_mod(&fp)
            .ok_or_else(|| Error::CheckFailed("good prime reduction failed".into()))?;
        let planes = crate::geometry::planes_in_hypersurface_fp(&xp, 2)?;
        if planes.len() != 9 {
            plane_ok = false;
        }
        plane_counts.push((p, planes.len()));
    }
    report.push(
        "section-plane-census",
        "exactly nine planes over the small good primes",
        plane_ok && !plane_counts.is_empty(),
        json!({ "counts": plane_counts }),
    );

    // reconstruction from the labeled planes, plus a relabeled run
    let rec = crate::geometry::reconstruct_coordinates(&section.threefold, &section.planes)?;
    let relabel = {
        let g = crate::wreath::gamma::GammaElt::parse("((123),(12),1)").unwrap();
        let mut moved = section.planes.clone();
        for (pos, plane) in section.planes.iter().enumerate() {
            moved[g.grid_apply(pos)] = plane.clone();
        }
        crate::geometry::reconstruct_coordinates(&section.threefold, &moved)
    };
    report.push(
        "section-reconstruction",
        "row and column forms with the product pencil identity, stable under relabeling",
        relabel.is_ok(),
        json!({
            "alpha": rec.alpha.to_string(),
            "beta": rec.beta.to_string(),
        }),
    );

    // dual degrees
    let smooth_dual = crate::geometry::dual_degree(&[]);
    report.push(
        "dual-degrees",
        "smooth 24, nine-nodal 6, ten-nodal 4",
        smooth_dual == 24 && cert.dual_degree == 6,
        json!({ "smooth": smooth_dual, "nine_nodal": cert.dual_degree }),
    );

    let ideal = crate::geometry::plane_ideal_identity(3, 6)?;
    report.push_serializable(
        "ideal-identity",
        "intersection of the six coordinate ideals equals the two-generator ideal, degrees 3..6",
        ideal.pass,
        &ideal,
    );
    Ok(())
}

/// The ten-nodal side: standard model, the two fitted models, censuses and
/// Grassmannian counts.
pub fn segre_suite(report: &mut Report, seed: u64) -> Result<(), Error> {
    let model = crate::segre::verify_segre_standard(9, seed)?;
    report.push_serializable(
        "ten-nodal-model",
        "ten nodes with sign patterns, fifteen planes, dual degree four",
        model.pass,
        &model,
    );

    let matrix_cubic = crate::segre::standard_fitted_cubic()?;
    let quadrics_cubic = crate::segre::quadrics_model_cubic(60, seed)?;
    let ca = crate::segre::fitted_cubic_census(matrix_cubic, 7)?;
    let cb = crate::segre::fitted_cubic_census(&quadrics_cubic, 7)?;
    let equivalence = crate::segre::signed_permutation_equivalence(matrix_cubic, &quadrics_cubic);
    report.push(
        "two-models",
        "matrix-quotient and quadrics models fit cubics with identical censuses",
        ca == cb && ca.0 == 10 && ca.1 == 15,
        json!({
            "matrix_census": { "singular": ca.0, "planes": ca.1, "points": ca.2 },
            "quadrics_census": { "singular": cb.0, "planes": cb.1, "points": cb.2 },
            "signed_permutation_equivalence": equivalence.map(|(p, s)| json!({"perm": p, "signs": s})),
        }),
    );

    for q in [3u64, 5] {
        let census = crate::segre::census(q, matrix_cubic)?;
        report.push_serializable(
            &format!("quotient-census-q{q}"),
            "free locus equals smooth points times the group order",
            census.pass,
            &census,
        );
    }
    report.push(
        "free-action-spot-check",
        "sampled stabilizers are exactly the central pair",
        crate::segre::free_action_spot_check(200, seed)?,
        json!({ "samples": 200 }),
    );

    let g2 = crate::segre::grassmann_counts(2)?;
    let g3 = crate::segre::grassmann_counts(3)?;
    report.push(
        "grassmannian-counts",
        "Gaussian binomial equals the echelon enumeration",
        g2.agree && g3.agree && g2.by_formula == 651,
        json!({ "q2": g2, "q3": g3 }),
    );
    Ok(())
}

/// Euler-characteristic bookkeeping tied back to the lattice and torus ranks.
pub fn bookkeeping_suite(report: &mut Report) -> Result<(), Error> {
    let nine = crate::geometry::class_rank_bookkeeping(9)?;
    let ten = crate::geometry::class_rank_bookkeeping(10)?;
    let p = module_p();
    let torus_rank = crate::segre::quotient_torus_character_rank();
    let pass = nine.euler_characteristic == 30
        && nine.class_rank == 5
        && nine.class_rank == p.rank() as i64
        && nine.b2_of_blowup == 14
        && ten.euler_characteristic == 34
        && ten.class_rank == 6
        && ten.class_rank == torus_rank as i64;
    report.push(
        "bookkeeping",
        "Euler characteristics, blow-up Betti numbers and class ranks line up",
        pass,
        json!({ "nine": nine, "ten": ten, "class_lattice_rank": p.rank(), "torus_character_rank": torus_rank }),
    );
    report.push(
        "bookkeeping-rejects-other-counts",
        "formula is only asserted for nine or ten nodes",
        crate::geometry::class_rank_bookkeeping(8).is_err(),
        json!({}),
    );
    Ok(())
}
