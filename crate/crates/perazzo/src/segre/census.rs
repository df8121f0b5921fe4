//! Finite-field censuses of the quotient model: the free locus of 2x6
//! matrices, the quotient identity against the ten-nodal cubic, the
//! free-action spot check, and the Grassmannian counts.
//!
//! At `q = 3` the sum-of-cubes equations collapse (cubing is additive in
//! characteristic three), so the point counts on the threefold side use the
//! fitted quotient-model cubic, whose integer coefficients reduce well; at
//! `q = 5` both that model and the standard equations are counted and must
//! agree.

use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{Field, PrimeField, Rationals, Ring};
use crate::exact::mpoly::MPoly;
use crate::geometry::hypersurface::Hypersurface;
use crate::geometry::section::count_points_fp;
use crate::geometry::singular::singular_points_fp;
use crate::segre::matching::{full_matching_vector, TwoSixMatrix};
use crate::segre::model::segre_cubic_equation;

/// Exact census results over one odd prime.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub free_locus_count: u64,
    pub threefold_points: u64,
    pub rational_nodes: u64,
    pub smooth_locus_points: u64,
    pub sl2_count: u64,
    pub group_count: u64,
    pub identity_holds: bool,
    /// Whether the standard sum-of-cubes model was also counted and agreed
    /// (only possible away from characteristic three).
    pub standard_model_agrees: Option<bool>,
    /// Filled at `q = 3`: every fiber of the quotient map over the image
    /// has exactly the group size.
    pub fibers_all_group_sized: Option<bool>,
    pub pass: bool,
}

/// `#SL_2(F_q)` by brute force over all 2x2 matrices.
pub fn sl2_count_by_enumeration(fp: &PrimeField) -> u64 {
    let q = fp.modulus();
    let mut count = 0;
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = fp.sub(&fp.mul(&a, &d), &fp.mul(&b, &c));
                    if det == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Count of the free locus by column-structured enumeration: each nonzero
/// column is a proportionality class (a point of the projective line) and a
/// unit scalar, and the condition is that no class occurs three times.
/// Scalars multiply the count by `(q-1)^6`.
pub fn free_locus_count_structured(fp: &PrimeField) -> u64 {
    let q = fp.modulus();
    let classes = q + 1;
    // depth-first over the class tuple with per-class multiplicity cap 2
    fn rec(depth: usize, counts: &mut Vec<u8>, total: &mut u64) {
        if depth == 6 {
            *total += 1;
            return;
        }
        for k in 0..counts.len() {
            if counts[k] == 2 {
                continue;
            }
            counts[k] += 1;
            rec(depth + 1, counts, total);
            counts[k] -= 1;
        }
    }
    let mut tuples = 0u64;
    rec(0, &mut vec![0u8; classes as usize], &mut tuples);
    // with at most two of six columns per class there are at least three
    // distinct classes, so the rank condition holds automatically
    tuples * (q - 1).pow(6)
}

/// Naive oracle: enumerate every 2x6 matrix over `F_q` and test the
/// conditions directly.  Only meant for `q = 3`.
pub fn free_locus_count_naive(fp: &PrimeField) -> u64 {
    let q = fp.modulus();
    assert!(q <= 3, "naive enumeration is only budgeted for q = 3");
    let mut count = 0u64;
    let total = (q as u128).pow(12);
    for code in 0..total {
        let mut c = code;
        let mut entries = [[0u64; 6]; 2];
        for r in 0..2 {
            for j in 0..6 {
                entries[r][j] = (c % q as u128) as u64;
                c /= q as u128;
            }
        }
        let a = TwoSixMatrix::<PrimeField> {
            entries,
        };
        if a.rank(fp) != 2 {
            continue;
        }
        if (0..6).any(|j| a.column(j).iter().all(|&x| x == 0)) {
            continue;
        }
        let mut bad = false;
        'trip: for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    if a.bracket(fp, i, j) == 0
                        && a.bracket(fp, i, k) == 0
                        && a.bracket(fp, j, k) == 0
                    {
                        bad = true;
                        break 'trip;
                    }
                }
            }
        }
        if !bad {
            count += 1;
        }
    }
    count
}

/// The ten boundary matrices whose images are the nodes: three columns in
/// one proportionality class, three in another, split by a partition of the
/// columns into two triples.  The image coordinates are the five basis
/// matching products (nonzero there, because the ten remaining products are
/// identically linear in the basis five).
fn node_images(fp: &PrimeField) -> Vec<Vec<u64>> {
    let mut out = std::collections::BTreeSet::new();
    // partitions of {0..5} into two unordered triples, 0 always in the first
    for b in 1..6 {
        for c in (b + 1)..6 {
            let first = [0, b, c];
            let second: Vec<usize> = (1..6).filter(|x| !first.contains(x)).collect();
            let mut entries = [[0u64; 6]; 2];
            for &j in &first {
                entries[0][j] = 1;
            }
            for &j in &second {
                entries[1][j] = 1;
            }
            let a = TwoSixMatrix::<PrimeField> { entries };
            let v = crate::segre::matching::matching_map(fp, &a)
                .expect("boundary image is nonzero in basis coordinates");
            out.insert(normalize_projective(fp, &v));
        }
    }
    out.into_iter().collect()
}

fn normalize_projective(fp: &PrimeField, v: &[u64]) -> Vec<u64> {
    let lead = v
        .iter()
        .position(|&c| c != 0)
        .expect("nonzero vector");
    let inv = fp.inv(&v[lead]).expect("nonzero");
    v.iter().map(|c| fp.mul(c, &inv)).collect()
}

/// Full census at an odd prime.  `fitted` is the quotient-model cubic (from
/// the matching fit); the identity `#free = #smooth * #SL2 * (q-1)^6` is
/// checked with the threefold counted by enumeration.
pub fn census(q: u64, fitted: &MPoly<Rationals>) -> Result<CensusReport, Error> {
    if q != 3 && q != 5 {
        return Err(Error::Usage(format!(
            "census is budgeted for q in {{3, 5}}, got {q}"
        )));
    }
    let fp = PrimeField::new(q);

    let free = free_locus_count_structured(&fp);
    let mut fibers_ok = None;
    if q == 3 {
        let naive = free_locus_count_naive(&fp);
        if naive != free {
            return Err(Error::CheckFailed(format!(
                "structured count {free} disagrees with the naive oracle {naive}"
            )));
        }
        fibers_ok = Some(fiber_analysis_q3(&fp, free)?);
    }

    let sl2_formula = q * (q * q - 1);
    let sl2_enum = sl2_count_by_enumeration(&fp);
    if sl2_enum != sl2_formula {
        return Err(Error::CheckFailed("special linear group count is off".into()));
    }
    let group = sl2_formula * (q - 1).pow(6);

    // threefold side, on the fitted model
    let x = Hypersurface::new(fitted.clone())
        .reduce_mod(&fp)
        .ok_or_else(|| Error::CheckFailed(format!("fitted cubic degenerates at {q}")))?;
    let points = count_points_fp(&x);
    let singular = singular_points_fp(&x)?;
    let nodes = node_images(&fp);
    if singular.len() != 10 {
        return Err(Error::CheckFailed(format!(
            "fitted cubic has {} singular points over F_{q}",
            singular.len()
        )));
    }
    // the singular points are exactly the images of the boundary matrices
    let mut sing_sorted: Vec<Vec<u64>> = singular
        .iter()
        .map(|v| normalize_projective(&fp, v))
        .collect();
    sing_sorted.sort();
    let mut nodes_sorted = nodes.clone();
    nodes_sorted.sort();
    if sing_sorted != nodes_sorted {
        return Err(Error::CheckFailed(
            "singular points are not the boundary images".into(),
        ));
    }

    let smooth = points - 10;
    let identity = free == smooth * sl2_formula * (q - 1).pow(6);

    // away from characteristic three the standard model must agree
    let standard_agrees = if q != 3 {
        let std_model = Hypersurface::new(segre_cubic_equation())
            .reduce_mod(&fp)
            .ok_or_else(|| Error::CheckFailed(format!("standard model degenerates at {q}")))?;
        Some(count_points_fp(&std_model) == points)
    } else {
        None
    };

    let pass = identity
        && standard_agrees != Some(false)
        && fibers_ok != Some(false);
    Ok(CensusReport {
        q,
        free_locus_count: free,
        threefold_points: points,
        rational_nodes: 10,
        smooth_locus_points: smooth,
        sl2_count: sl2_enum,
        group_count: group,
        identity_holds: identity,
        standard_model_agrees: standard_agrees,
        fibers_all_group_sized: fibers_ok,
        pass,
    })
}

/// Enumerate the whole free locus over `F_3`, push every matrix through the
/// full matching vector, and check that every fiber has exactly the group
/// size (which also proves the invariants separate the orbits there).
fn fiber_analysis_q3(fp: &PrimeField, expected_total: u64) -> Result<bool, Error> {
    let q = fp.modulus();
    let group_size = q * (q * q - 1) * (q - 1).pow(6);
    let mut fibers: std::collections::BTreeMap<Vec<u64>, u64> = std::collections::BTreeMap::new();
    let total = (q as u128).pow(12);
    let mut seen = 0u64;
    for code in 0..total {
        let mut c = code;
        let mut entries = [[0u64; 6]; 2];
        for r in 0..2 {
            for j in 0..6 {
                entries[r][j] = (c % q as u128) as u64;
                c /= q as u128;
            }
        }
        let a = TwoSixMatrix::<PrimeField> { entries };
        if !matches!(
            crate::segre::matching::m_loci_membership(fp, &a),
            crate::segre::matching::LocusMembership::Free
        ) {
            continue;
        }
        seen += 1;
        let v = full_matching_vector(fp, &a);
        *fibers.entry(normalize_projective(fp, &v)).or_insert(0) += 1;
    }
    if seen != expected_total {
        return Err(Error::CheckFailed(
            "free-locus enumeration disagrees with the structured count".into(),
        ));
    }
    Ok(fibers.values().all(|&c| c == group_size))
}

/// Stabilizer spot check at `q = 3`: for sampled free-locus matrices the
/// joint stabilizer inside the product group is exactly the central pair.
pub fn free_action_spot_check(samples: usize, seed: u64) -> Result<bool, Error> {
    use rand::Rng;
    use rand::SeedableRng;
    let fp = PrimeField::new(3);
    let q = 3u64;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);

    // all of SL2(F_3)
    let mut sl2 = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if fp.sub(&fp.mul(&a, &d), &fp.mul(&b, &c)) == 1 {
                        sl2.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    // all unit diagonal scalings
    let mut diags = Vec::new();
    let units = [1u64, 2];
    for t0 in units {
        for t1 in units {
            for t2 in units {
                for t3 in units {
                    for t4 in units {
                        for t5 in units {
                            diags.push([t0, t1, t2, t3, t4, t5]);
                        }
                    }
                }
            }
        }
    }

    let mut checked = 0usize;
    while checked < samples {
        let mut entries = [[0u64; 6]; 2];
        for r in &mut entries {
            for x in r.iter_mut() {
                *x = rng.gen_range(0..q);
            }
        }
        let a = TwoSixMatrix::<PrimeField> { entries };
        if !matches!(
            crate::segre::matching::m_loci_membership(&fp, &a),
            crate::segre::matching::LocusMembership::Free
        ) {
            continue;
        }
        checked += 1;
        let mut stabilizer = 0usize;
        for g in &sl2 {
            for t in &diags {
                let mut fixed = true;
                'col: for j in 0..6 {
                    let col = a.column(j);
                    let top = fp.mul(&fp.add(&fp.mul(&g[0], &col[0]), &fp.mul(&g[1], &col[1])), &t[j]);
                    let bot = fp.mul(&fp.add(&fp.mul(&g[2], &col[0]), &fp.mul(&g[3], &col[1])), &t[j]);
                    if top != col[0] || bot != col[1] {
                        fixed = false;
                        break 'col;
                    }
                }
                if fixed {
                    stabilizer += 1;
                }
            }
        }
        // (1, 1) and (-1, -1): the central identification
        if stabilizer != 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Grassmannian counts: the Gaussian binomial against reduced row echelon
/// enumeration, and the punctured-cone count.
#[derive(Clone, Debug, Serialize)]
pub struct GrassmannCount {
    pub q: u64,
    pub by_formula: u128,
    pub by_enumeration: u128,
    pub punctured_cone: u128,
    pub agree: bool,
}

pub fn grassmann_counts(q: u64) -> Result<GrassmannCount, Error> {
    if q > 16 {
        return Err(Error::BoundExceeded("Grassmannian count budget".into()));
    }
    let fp = PrimeField::new(q);
    let by_formula = crate::geometry::planes::gaussian_binomial(6, 2, q);
    let mut by_enumeration = 0u128;
    crate::geometry::planes::for_each_rref(fp, 6, 2, |_| by_enumeration += 1);
    Ok(GrassmannCount {
        q,
        by_formula,
        by_enumeration,
        punctured_cone: by_formula * (q as u128 - 1),
        agree: by_formula == by_enumeration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segre::standard_fitted_cubic;

    #[test]
    fn structured_count_matches_hand_combinatorics_at_three() {
        // classes: 4; multiplicity patterns (2,2,2) and (2,2,1,1):
        // 4 * 90 + 6 * 180 = 1440 tuples, times 2^6 scalars
        let fp = PrimeField::new(3);
        assert_eq!(free_locus_count_structured(&fp), 1440 * 64);
    }

    #[test]
    fn sl2_counts() {
        assert_eq!(sl2_count_by_enumeration(&PrimeField::new(3)), 24);
        assert_eq!(sl2_count_by_enumeration(&PrimeField::new(5)), 120);
    }

    #[test]
    fn census_at_three_with_fibers() {
        let fitted = standard_fitted_cubic().unwrap();
        let report = census(3, fitted).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.smooth_locus_points, 60);
        assert_eq!(report.threefold_points, 70);
        assert_eq!(report.fibers_all_group_sized, Some(true));
    }

    #[test]
    fn census_at_five_cross_checks_the_standard_model() {
        let fitted = standard_fitted_cubic().unwrap();
        let report = census(5, fitted).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.standard_model_agrees, Some(true));
        assert_eq!(report.threefold_points, 256);
        assert_eq!(report.smooth_locus_points, 246);
    }

    #[test]
    fn free_action_sampled_stabilizers_are_central() {
        assert!(free_action_spot_check(200, 99).unwrap());
    }

    #[test]
    fn grassmann_count_at_two() {
        let g = grassmann_counts(2).unwrap();
        assert_eq!(g.by_formula, 651);
        assert!(g.agree);
        assert_eq!(g.punctured_cone, 651);
        let g3 = grassmann_counts(3).unwrap();
        assert!(g3.agree);
    }
}
