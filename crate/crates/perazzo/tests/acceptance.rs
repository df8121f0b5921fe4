//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line.  Every tolerance here is exact: the arithmetic is rational or
//! modular, so "pass" means equality on the nose.

use num_traits::One;

use perazzo::exact::field::PrimeField;
use perazzo::lattice::module::FinAbGroup;
use perazzo::lattice::standard::{module_e, module_p, module_pictilde, DivisorExpr};
use perazzo::lattice::{h1, h1_cyclic};
use perazzo::wreath::subgroup::{
    a3_x_a3, a3_x_one, all_subgroups, diagonal_a3, subgroups_up_to_conjugacy, FULL_GROUP,
};

const SEED: u64 = perazzo::cli::DEFAULT_SEED;

fn verdict(criterion: &str, pass: bool) {
    println!(
        "{} criterion {criterion}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

#[test]
fn criterion_1_h1_classification() {
    let p = module_p();
    let z3 = FinAbGroup::cyclic(3);
    let named = h1(&a3_x_one(), &p).unwrap() == z3
        && h1(&diagonal_a3(), &p).unwrap().is_trivial()
        && h1(&a3_x_a3(), &p).unwrap() == z3;
    let two_groups = all_subgroups(FULL_GROUP)
        .into_iter()
        .filter(|w| w.order().is_power_of_two())
        .all(|w| h1(&w, &p).unwrap().is_trivial());
    let dichotomy = subgroups_up_to_conjugacy(FULL_GROUP).into_iter().all(|c| {
        let h = h1(&c.representative, &p).unwrap();
        h.is_trivial() || h == z3
    });
    verdict(
        "1 (cohomology classification incl. dichotomy over all classes)",
        named && two_groups && dichotomy,
    );
}

#[test]
fn criterion_2_blowup_comparison() {
    let p = module_p();
    let pt = module_pictilde();
    let e = module_e();
    let ok = subgroups_up_to_conjugacy(FULL_GROUP).into_iter().all(|c| {
        let w = c.representative;
        h1(&w, &e).unwrap().is_trivial() && h1(&w, &p).unwrap() == h1(&w, &pt).unwrap()
    });
    verdict("2 (blow-up comparison on every class)", ok);
}

#[test]
fn criterion_3_lattice_structure() {
    let p = module_p();
    let snf = p.relations().transpose().snf();
    let relation = DivisorExpr::plane(0, 0)
        .add(&DivisorExpr::plane(0, 2))
        .add(&DivisorExpr::plane(1, 1).neg())
        .add(&DivisorExpr::plane(2, 1).neg());
    let ok = snf.rank == 4
        && snf.invariant_factors().iter().all(|d| d.is_one())
        && p.rank() == 5
        && p.presentation_torsion().is_trivial()
        && relation.is_principal(&p);
    verdict("3 (lattice structure)", ok);
}

#[test]
fn criterion_4_torsor_map() {
    let identity = perazzo::torsor::verify_identity();
    let equivariance = perazzo::torsor::check_equivariance_all() == Ok(72);
    let dt = perazzo::torsor::verify_double_three_structure();
    let mut censuses = true;
    for q in [2u64, 3, 5] {
        let c = perazzo::torsor::torsor_census(&PrimeField::new(q));
        censuses &= c.pass && c.fiber_size == (q - 1).pow(5);
    }
    verdict(
        "4 (chart identity, equivariance, double-three, censuses)",
        identity && equivariance && dt.pass && dt.double_vanishing_passed == 36 && censuses,
    );
}

#[test]
fn criterion_5_certified_section() {
    let coeffs = perazzo::geometry::standard_section_coeffs();
    let section = perazzo::geometry::nine_nodal_section(&coeffs).unwrap();
    let cert = section.certify(10, SEED, 3).unwrap();
    let nodes_ok = cert.node_reports.len() == 9
        && cert
            .node_reports
            .iter()
            .all(|r| r.is_node && r.mu == 1 && r.mu_prime == 1 && r.m == 2);
    let incidence_ok = cert.incidence.pass && cert.incidence.automorphism_order == 72;
    let mut plane_census_ok = false;
    for &p in cert.good_primes.iter().filter(|&&p| p <= 5) {
        let fp = PrimeField::new(p);
        let xp = section.threefold.reduce_mod(&fp).unwrap();
        let planes = perazzo::geometry::planes_in_hypersurface_fp(&xp, 2).unwrap();
        plane_census_ok = planes.len() == 9;
        // four nodes on each plane: 9 * 4 = 4 * 9
        let nodes = perazzo::geometry::singular_points_fp(&xp).unwrap();
        for plane in &planes {
            let on = nodes.iter().filter(|n| plane.contains_point(n)).count();
            plane_census_ok &= on == 4;
        }
        break;
    }
    verdict(
        "5 (certified nine-nodal section)",
        cert.good_primes.len() >= 3
            && nodes_ok
            && incidence_ok
            && plane_census_ok
            && cert.planes_per_node == 4
            && cert.nodes_per_plane == 4,
    );
}

#[test]
fn criterion_6_dual_degrees() {
    let smooth = perazzo::geometry::dual_degree(&[]);
    let coeffs = perazzo::geometry::standard_section_coeffs();
    let section = perazzo::geometry::nine_nodal_section(&coeffs).unwrap();
    let cert = section.certify(10, SEED, 3).unwrap();
    let segre = perazzo::segre::verify_segre_standard(9, SEED).unwrap();
    verdict(
        "6 (dual degrees 24, 6, 4)",
        smooth == 24 && cert.dual_degree == 6 && segre.dual_degree == 4,
    );
}

#[test]
fn criterion_7_ideal_identity() {
    let report = perazzo::geometry::plane_ideal_identity(3, 6).unwrap();
    verdict(
        "7 (graded ideal identity, degrees 3..6)",
        report.pass && report.degrees == vec![3, 4, 5, 6] && report.equal_row_spaces,
    );
}

#[test]
fn criterion_8_ten_nodal_censuses() {
    let model = perazzo::segre::verify_segre_standard(9, SEED).unwrap();
    let matrix_cubic = perazzo::segre::standard_fitted_cubic().unwrap();
    let quadrics_cubic = perazzo::segre::quadrics_model_cubic(60, SEED).unwrap();
    let ca = perazzo::segre::fitted_cubic_census(matrix_cubic, 7).unwrap();
    let cb = perazzo::segre::fitted_cubic_census(&quadrics_cubic, 7).unwrap();
    let mut censuses = true;
    for q in [3u64, 5] {
        let c = perazzo::segre::census(q, matrix_cubic).unwrap();
        censuses &= c.pass && c.identity_holds;
    }
    let g2 = perazzo::segre::grassmann_counts(2).unwrap();
    verdict(
        "8 (ten-nodal model and quotient censuses)",
        model.pass
            && model.f7_singular_count == 10
            && model.f7_plane_count == 15
            && ca == cb
            && censuses
            && g2.agree
            && g2.by_formula == 651,
    );
}

#[test]
fn criterion_9_bookkeeping() {
    let nine = perazzo::geometry::class_rank_bookkeeping(9).unwrap();
    let ten = perazzo::geometry::class_rank_bookkeeping(10).unwrap();
    let p = module_p();
    let torus = perazzo::segre::quotient_torus_character_rank();
    verdict(
        "9 (Euler bookkeeping and rank cross-checks)",
        nine.euler_characteristic == 30
            && nine.class_rank == 5
            && nine.class_rank == p.rank() as i64
            && ten.euler_characteristic == 34
            && ten.class_rank == 6
            && ten.class_rank == torus as i64,
    );
}

#[test]
fn criterion_10_determinism() {
    // two library runs with the same seed must serialize identically
    let run = || {
        let args = <perazzo::cli::CliArgs as clap::Parser>::parse_from([
            "perazzo", "verify", "all", "--seed", "12345",
        ]);
        let (report, code) = perazzo::cli::run(&args);
        (report.to_json_string(), code)
    };
    let (a, code_a) = run();
    let (b, code_b) = run();
    verdict(
        "10 (byte-identical reports for a fixed seed)",
        a == b && code_a == 0 && code_b == 0,
    );
}

#[test]
fn cyclic_routes_agree_everywhere() {
    // supporting contract for criterion 1: the two cohomology routes agree
    // on every cyclic subgroup for the class lattice
    let p = module_p();
    let mut seen = std::collections::BTreeSet::new();
    let mut ok = true;
    for e in perazzo::wreath::gamma::gamma().elements() {
        let w = perazzo::wreath::subgroup::GammaSubgroup::generated_by(&[*e]);
        if !seen.insert(w) {
            continue;
        }
        ok &= h1(&w, &p).unwrap() == h1_cyclic(&w, &p).unwrap();
    }
    verdict("1-support (cyclic cross-validation)", ok);
}
