//! Property tests for the exact-arithmetic substrate: decomposition
//! round-trips, fraction-field consistency, the substitution homomorphism,
//! and graded-piece dimensions against a combinatorial oracle.

use num_traits::{One, Zero};
use proptest::prelude::*;

use perazzo::exact::field::{rat_int, PrimeField, Rationals};
use perazzo::exact::graded::graded_piece;
use perazzo::exact::intmat::IntMatrix;
use perazzo::exact::mpoly::{monomials_of_degree, MPoly, Monomial};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=12, 1usize..=12).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
    })
}

fn small_poly(nvars: usize) -> impl Strategy<Value = MPoly<Rationals>> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..=2, nvars),
            -5i64..=5,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        let mut p = MPoly::zero(Rationals, nvars);
        for (exp, c) in terms {
            p.add_term(Monomial(exp), rat_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_round_trip_and_divisibility(rows in small_matrix()) {
        let a = IntMatrix::from_rows_i64(&rows);
        let s = a.snf();
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        let factors = s.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(factors.iter().all(|d| d > &num_bigint::BigInt::zero()));
    }

    #[test]
    fn rank_consistency_across_fields(rows in small_matrix()) {
        let a = IntMatrix::from_rows_i64(&rows);
        let s = a.snf();
        // rank over the rationals from row reduction
        prop_assert_eq!(s.rank, a.to_rational().rank());
        // rank over F_p for primes not dividing any invariant factor
        for p in [2u64, 3, 5, 7] {
            let divides = s
                .invariant_factors()
                .iter()
                .any(|d| (d % num_bigint::BigInt::from(p)).is_zero());
            if divides {
                continue;
            }
            let fp = PrimeField::new(p);
            let ap = perazzo::exact::Mat::from_fn(fp, a.rows(), a.cols(), |i, j| {
                fp.reduce_int(a.at(i, j))
            });
            prop_assert_eq!(ap.rank(), s.rank);
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        f in small_poly(3),
        g in small_poly(3),
        images in proptest::collection::vec(small_poly(2), 3),
    ) {
        let lhs = f.mul(&g).substitute(&images).unwrap();
        let rhs = f.substitute(&images).unwrap().mul(&g.substitute(&images).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_ideal_graded_dimension_matches_divisibility_count(
        gens_exp in proptest::collection::vec(proptest::collection::vec(0u32..=2, 3), 1..4),
        d in 0u32..=5,
    ) {
        // for monomial generators the degree-d piece has a combinatorial
        // dimension: the number of degree-d monomials divisible by some
        // generator
        let gens: Vec<MPoly<Rationals>> = gens_exp
            .iter()
            .map(|e| {
                let mut p = MPoly::zero(Rationals, 3);
                p.add_term(Monomial(e.clone()), rat_int(1));
                p
            })
            .collect();
        let piece = graded_piece(Rationals, 3, &gens, d).unwrap();
        let oracle = monomials_of_degree(3, d)
            .into_iter()
            .filter(|m| gens_exp.iter().any(|g| Monomial(g.clone()).divides(m)))
            .count();
        prop_assert_eq!(piece.dimension(), oracle);
    }

    #[test]
    fn graded_dimension_monotone_in_generators(
        gens_exp in proptest::collection::vec(proptest::collection::vec(0u32..=2, 3), 2..5),
        d in 0u32..=4,
    ) {
        let gens: Vec<MPoly<Rationals>> = gens_exp
            .iter()
            .map(|e| {
                let mut p = MPoly::zero(Rationals, 3);
                p.add_term(Monomial(e.clone()), rat_int(1));
                p
            })
            .collect();
        let fewer = graded_piece(Rationals, 3, &gens[..gens.len() - 1], d).unwrap();
        let more = graded_piece(Rationals, 3, &gens, d).unwrap();
        prop_assert!(more.dimension() >= fewer.dimension());
    }

    #[test]
    fn text_format_round_trips(p in small_poly(3)) {
        let vars = ["x1", "x2", "y1"];
        let text = p.to_text(&vars);
        let back = MPoly::parse(&text, &vars).unwrap();
        prop_assert_eq!(&back, &p);
        // canonical writer is a fixed point
        prop_assert_eq!(back.to_text(&vars), text);
        // JSON round trip is exact as well
        let (from_json, _) = MPoly::from_json(&p.to_json(&vars)).unwrap();
        prop_assert_eq!(from_json, p);
    }

    #[test]
    fn kernel_vectors_annihilate_and_count(rows in small_matrix()) {
        let a = IntMatrix::from_rows_i64(&rows);
        let ker = a.kernel_lattice_fast();
        prop_assert_eq!(ker.len(), a.cols() - a.to_rational().rank());
        let mut saturated = true;
        for v in &ker {
            prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        // saturation: any rational-kernel vector, cleared to a primitive
        // integer vector, must be an integer combination of the basis
        if !ker.is_empty() {
            let basis = IntMatrix::from_rows_big(ker.clone()).transpose();
            for v in a.to_rational().kernel_basis() {
                let prim = perazzo::exact::intmat::primitive_integer_vector(&v);
                if basis.solve_integer(&prim).is_none() {
                    saturated = false;
                }
            }
        }
        prop_assert!(saturated);
    }
}
