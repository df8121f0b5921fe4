//! The ten-nodal cubic threefold and its quotient model by 2x6 matrices:
//! the standard equations, the quadrics-through-five-points model, bracket
//! invariants, and the finite-field censuses.

pub mod census;
pub mod matching;
pub mod model;

pub use census::{
    census, free_action_spot_check, free_locus_count_naive, free_locus_count_structured,
    grassmann_counts, sl2_count_by_enumeration, CensusReport, GrassmannCount,
};
pub use matching::{
    all_matchings, basis_matchings, full_matching_vector, m_loci_membership, matching_map,
    matching_polynomials, LocusMembership, Matching, TwoSixMatrix,
};
pub use model::{
    fit_cubic, fitted_cubic_census, quadrics_model_cubic, quadrics_through_five_points,
    segre_cubic_equation, segre_standard, verify_segre_standard, SegreModel, SegreReport,
};

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;

use crate::error::Error;
use crate::exact::field::{rat_int, Rationals};
use crate::exact::mpoly::MPoly;

/// The matching-model cubic at the canonical sampling parameters, cached.
pub fn standard_fitted_cubic() -> Result<&'static MPoly<Rationals>, Error> {
    static CUBIC: std::sync::OnceLock<Result<MPoly<Rationals>, String>> =
        std::sync::OnceLock::new();
    CUBIC
        .get_or_init(|| fitted_matching_cubic(70, 2024).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::CheckFailed(e.clone()))
}

/// Sample the matching map on random integer matrices in the free locus and
/// fit the image cubic, certified symbolically: composing the fitted cubic
/// with the five basis matching polynomials gives the zero polynomial in
/// the twelve matrix entries.
pub fn fitted_matching_cubic(samples: usize, seed: u64) -> Result<MPoly<Rationals>, Error> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    while points.len() < samples {
        // small entries keep the fit's exact linear algebra light
        let mut entries: [[BigRational; 6]; 2] = Default::default();
        for row in &mut entries {
            for x in row.iter_mut() {
                *x = rat_int(rng.gen_range(-3i64..=3));
            }
        }
        let a = TwoSixMatrix::<Rationals> { entries };
        if m_loci_membership(&Rationals, &a) != LocusMembership::Free {
            continue;
        }
        let Some(image) = matching_map(&Rationals, &a) else {
            continue;
        };
        let prim = crate::exact::intmat::primitive_integer_vector(&image);
        points.push(prim.into_iter().map(BigRational::from_integer).collect());
    }
    let cubic = fit_cubic(&points)?;

    // symbolic certificate on the whole free locus
    let basis = basis_matchings();
    let all_polys = matching_polynomials();
    let all = all_matchings();
    let images: Vec<MPoly<Rationals>> = basis
        .iter()
        .map(|m| {
            let k = all.iter().position(|x| x == m).expect("basis matching");
            all_polys[k].clone()
        })
        .collect();
    let composed = cubic.substitute(&images)?;
    if !composed.is_zero() {
        return Err(Error::CheckFailed(
            "fitted cubic does not annihilate the matching map".into(),
        ));
    }
    Ok(cubic)
}

/// Search the finite orbit of coordinate permutations and sign flips for an
/// exact projective equivalence between two fitted cubics.  Returns the
/// witness `(permutation, signs)` when found.
pub fn signed_permutation_equivalence(
    a: &MPoly<Rationals>,
    b: &MPoly<Rationals>,
) -> Option<(Vec<usize>, Vec<i64>)> {
    let a = a.primitive_integer();
    let b = b.primitive_integer();
    let perms = permutations(5);
    for perm in &perms {
        for signs in 0..32u32 {
            let sign_vec: Vec<i64> = (0..5)
                .map(|k| if signs & (1 << k) != 0 { -1 } else { 1 })
                .collect();
            let mut images = Vec::with_capacity(5);
            for k in 0..5 {
                let v = MPoly::var(Rationals, 5, perm[k]);
                images.push(v.scale(&rat_int(sign_vec[k])));
            }
            let moved = a.substitute(&images).expect("arity").primitive_integer();
            if moved == b {
                return Some((perm.clone(), sign_vec));
            }
        }
    }
    None
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    out
}

/// Rank of the character lattice of the quotient torus: vectors of even
/// coordinate sum inside the full weight lattice of the six scalings.
pub fn quotient_torus_character_rank() -> usize {
    use crate::exact::intmat::IntMatrix;
    // basis of the even-sum sublattice: e0 + e5, ..., e4 + e5, 2 e5
    let mut m = IntMatrix::zero(6, 6);
    for k in 0..5 {
        *m.at_mut(k, k) = 1.into();
        *m.at_mut(5, k) = 1.into();
    }
    *m.at_mut(5, 5) = 2.into();
    m.snf().rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_fit_matches_the_quadrics_fit_censuses() {
        let a = standard_fitted_cubic().unwrap();
        let b = quadrics_model_cubic(60, 23).unwrap();
        let ca = fitted_cubic_census(a, 7).unwrap();
        let cb = fitted_cubic_census(&b, 7).unwrap();
        assert_eq!(ca, cb);
        assert_eq!(ca.0, 10);
        assert_eq!(ca.1, 15);
    }

    #[test]
    fn torus_character_rank_is_six() {
        assert_eq!(quotient_torus_character_rank(), 6);
    }
}
