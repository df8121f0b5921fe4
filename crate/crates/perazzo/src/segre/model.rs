//! The standard ten-nodal cubic threefold: the sum-of-cubes model on the
//! sum-zero hyperplane, its ten nodes and fifteen planes, the
//! quadrics-through-five-points model, and exact cubic fitting.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{rat_int, PrimeField, Rationals};
use crate::exact::fmat::Mat;
use crate::exact::mpoly::{monomials_of_degree, MPoly, Monomial};
use crate::geometry::hypersurface::{Hypersurface, LinearSubspace};
use crate::geometry::planes::planes_in_hypersurface_fp;
use crate::geometry::singular::{classify_singularity, singular_points_fp};
use crate::segre::matching::{all_matchings, Matching};

/// The ten-nodal cubic with its distinguished data, in the five coordinates
/// left after eliminating the last one against the linear equation.
pub struct SegreModel {
    pub cubic: Hypersurface<Rationals>,
    /// Sign patterns in the six ambient coordinates, one per node; the last
    /// coordinate is normalized to -1.
    pub node_patterns: Vec<Vec<i64>>,
    /// The nodes in the five model coordinates.
    pub nodes: Vec<Vec<BigRational>>,
    /// Fifteen planes, one per perfect matching of the six coordinates.
    pub planes: Vec<LinearSubspace<Rationals>>,
    pub matchings: Vec<Matching>,
}

/// `sum x_i^3` restricted to `sum x_i = 0`, eliminated to five variables.
pub fn segre_cubic_equation() -> MPoly<Rationals> {
    let mut f = MPoly::zero(Rationals, 5);
    let mut sum = MPoly::zero(Rationals, 5);
    for k in 0..5 {
        f = f.add(&MPoly::var(Rationals, 5, k).pow(3));
        sum = sum.add(&MPoly::var(Rationals, 5, k));
    }
    f.sub(&sum.pow(3)).primitive_integer()
}

pub fn segre_standard() -> SegreModel {
    let cubic = Hypersurface::new(segre_cubic_equation());

    // nodes: three +1 among the first five coordinates, last coordinate -1
    let mut node_patterns = Vec::with_capacity(10);
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                let mut v = vec![-1i64; 6];
                v[a] = 1;
                v[b] = 1;
                v[c] = 1;
                node_patterns.push(v);
            }
        }
    }
    let nodes: Vec<Vec<BigRational>> = node_patterns
        .iter()
        .map(|v| v[..5].iter().map(|&c| rat_int(c)).collect())
        .collect();

    // planes: for each matching, the three pair sums vanish
    let matchings = all_matchings();
    let mut planes = Vec::with_capacity(15);
    for m in &matchings {
        let mut forms = Vec::new();
        for &(a, b) in m.pairs() {
            // x_a + x_b restricted to x_5 = -(x_0 + .. + x_4)
            let mut form = vec![BigRational::zero(); 5];
            for (k, f) in form.iter_mut().enumerate() {
                if k == a || k == b {
                    *f += BigRational::one();
                }
                if a == 5 || b == 5 {
                    *f -= BigRational::one();
                }
            }
            forms.push(form);
        }
        planes.push(
            LinearSubspace::from_forms(Rationals, forms, 5).expect("matching plane"),
        );
    }

    SegreModel {
        cubic,
        node_patterns,
        nodes,
        planes,
        matchings,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SegreReport {
    pub nodes_on_cubic: bool,
    pub nodes_are_ordinary: bool,
    pub f7_singular_count: usize,
    pub f7_singular_matches_patterns: bool,
    pub planes_on_cubic: bool,
    pub f7_plane_count: usize,
    pub dual_degree: i64,
    pub symmetric_group_preserves_equations: bool,
    pub pass: bool,
}

/// Full verification of the standard model: nodes are the sign patterns
/// (checked over the rationals and against the census over `F_7`), the
/// fifteen matching planes lie on the cubic and are all of them over `F_7`,
/// the dual degree comes out of the classified singularities, and the full
/// symmetric group preserves the pair of ambient equations.
pub fn verify_segre_standard(trunc: u32, seed: u64) -> Result<SegreReport, Error> {
    let model = segre_standard();
    let nodes_on_cubic = model
        .nodes
        .iter()
        .all(|v| model.cubic.contains_point(v));

    let mut reports = Vec::new();
    let mut nodes_are_ordinary = true;
    for node in &model.nodes {
        let rep = classify_singularity(&model.cubic, node, trunc, seed)?;
        if !rep.is_node || rep.m != 2 {
            nodes_are_ordinary = false;
        }
        reports.push(rep);
    }
    let dual = crate::geometry::singular::dual_degree(&reports);

    let f7 = PrimeField::new(7);
    let cubic7 = model
        .cubic
        .reduce_mod(&f7)
        .ok_or_else(|| Error::CheckFailed("bad reduction at 7".into()))?;
    let mut census = singular_points_fp(&cubic7)?;
    census.sort();
    let mut reduced: Vec<Vec<u64>> = model
        .nodes
        .iter()
        .map(|v| {
            let ints = crate::exact::intmat::primitive_integer_vector(v);
            crate::geometry::section::normalize_point_fp(
                &f7,
                &ints.iter().map(|x| f7.reduce_int(x)).collect::<Vec<u64>>(),
            )
        })
        .collect();
    reduced.sort();
    reduced.dedup();
    let f7_matches = census == reduced && census.len() == 10;

    let planes_on_cubic = model
        .planes
        .iter()
        .all(|p| p.dim() == 2 && model.cubic.contains_subspace(p));
    let f7_planes = planes_in_hypersurface_fp(&cubic7, 2)?;

    let symmetric = symmetric_group_preserves_equations();

    let pass = nodes_on_cubic
        && nodes_are_ordinary
        && f7_matches
        && planes_on_cubic
        && f7_planes.len() == 15
        && dual == 4
        && symmetric;
    Ok(SegreReport {
        nodes_on_cubic,
        nodes_are_ordinary,
        f7_singular_count: census.len(),
        f7_singular_matches_patterns: f7_matches,
        planes_on_cubic,
        f7_plane_count: f7_planes.len(),
        dual_degree: dual,
        symmetric_group_preserves_equations: symmetric,
        pass,
    })
}

/// The permutation action of the full symmetric group on the six ambient
/// coordinates preserves both defining equations (checked on a
/// transposition and a 6-cycle, which generate).
pub fn symmetric_group_preserves_equations() -> bool {
    let mut cubes = MPoly::zero(Rationals, 6);
    let mut sum = MPoly::zero(Rationals, 6);
    for k in 0..6 {
        cubes = cubes.add(&MPoly::var(Rationals, 6, k).pow(3));
        sum = sum.add(&MPoly::var(Rationals, 6, k));
    }
    let transposition: Vec<usize> = vec![1, 0, 2, 3, 4, 5];
    let six_cycle: Vec<usize> = vec![1, 2, 3, 4, 5, 0];
    [transposition, six_cycle].iter().all(|perm| {
        cubes.permute_vars(perm) == cubes && sum.permute_vars(perm) == sum
    })
}

// ---- quadrics through five points ----

/// Basis of the space of quadrics through the five standard points of
/// 3-space (the four coordinate points and the all-ones point).
pub fn quadrics_through_five_points() -> Vec<MPoly<Rationals>> {
    let monomials = monomials_of_degree(4, 2);
    assert_eq!(monomials.len(), 10);
    let mut pts: Vec<Vec<BigRational>> = (0..4)
        .map(|k| {
            let mut v = vec![BigRational::zero(); 4];
            v[k] = BigRational::one();
            v
        })
        .collect();
    pts.push(vec![BigRational::one(); 4]);

    let eval = Mat::from_fn(Rationals, pts.len(), monomials.len(), |i, j| {
        monomial_eval(&monomials[j], &pts[i])
    });
    assert_eq!(eval.rank(), 5, "five independent point conditions");
    eval.kernel_basis()
        .into_iter()
        .map(|coeffs| {
            let mut p = MPoly::zero(Rationals, 4);
            for (j, c) in coeffs.into_iter().enumerate() {
                if !c.is_zero() {
                    p.add_term(monomials[j].clone(), c);
                }
            }
            p
        })
        .collect()
}

fn monomial_eval(m: &Monomial, pt: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for (v, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            acc *= &pt[v];
        }
    }
    acc
}

/// Fit the unique cubic through a family of points of projective 4-space.
/// Returns the primitive integer cubic; fails unless the kernel of the
/// evaluation matrix is exactly one-dimensional.
pub fn fit_cubic(points: &[Vec<BigRational>]) -> Result<MPoly<Rationals>, Error> {
    let monomials = monomials_of_degree(5, 3);
    assert_eq!(monomials.len(), 35);
    let eval = Mat::from_fn(Rationals, points.len(), monomials.len(), |i, j| {
        monomial_eval(&monomials[j], &points[i])
    });
    let kernel = eval.kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::CheckFailed(format!(
            "cubic fit kernel has dimension {}, expected 1",
            kernel.len()
        )));
    }
    let mut p = MPoly::zero(Rationals, 5);
    for (j, c) in kernel.into_iter().next().unwrap().into_iter().enumerate() {
        if !c.is_zero() {
            p.add_term(monomials[j].clone(), c);
        }
    }
    Ok(p.primitive_integer())
}

/// Sample the quadrics map at deterministic pseudo-random parameters and
/// fit the image cubic; the fit is then certified symbolically: composing
/// the cubic with the five quadrics gives the zero polynomial.
pub fn quadrics_model_cubic(samples: usize, seed: u64) -> Result<MPoly<Rationals>, Error> {
    let quadrics = quadrics_through_five_points();
    assert_eq!(quadrics.len(), 5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    while points.len() < samples {
        let t: Vec<BigRational> = (0..4).map(|_| rat_int(rng.gen_range(-5i64..=5))).collect();
        let image: Vec<BigRational> = quadrics
            .iter()
            .map(|q| q.eval(&t).expect("arity"))
            .collect();
        if image.iter().all(|c| c.is_zero()) {
            continue; // base point
        }
        let prim = crate::exact::intmat::primitive_integer_vector(&image);
        points.push(prim.into_iter().map(BigRational::from_integer).collect());
    }
    let cubic = fit_cubic(&points)?;
    // exact certificate: the cubic vanishes on the whole image
    let composed = cubic.substitute(&quadrics)?;
    if !composed.is_zero() {
        return Err(Error::CheckFailed(
            "fitted cubic does not vanish on the quadrics image".into(),
        ));
    }
    Ok(cubic)
}

/// Census of a fitted cubic over a prime: `(singular points, planes,
/// rational points)`.
pub fn fitted_cubic_census(
    cubic: &MPoly<Rationals>,
    p: u64,
) -> Result<(usize, usize, u64), Error> {
    let fp = PrimeField::new(p);
    let x = Hypersurface::new(cubic.clone())
        .reduce_mod(&fp)
        .ok_or_else(|| Error::CheckFailed(format!("bad reduction at {p}")))?;
    let sing = singular_points_fp(&x)?.len();
    let planes = planes_in_hypersurface_fp(&x, 2)?.len();
    let count = crate::geometry::section::count_points_fp(&x);
    Ok((sing, planes, count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_verifies() {
        let report = verify_segre_standard(8, 17).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.f7_singular_count, 10);
        assert_eq!(report.f7_plane_count, 15);
        assert_eq!(report.dual_degree, 4);
    }

    #[test]
    fn quadric_space_has_dimension_five_and_base_points_blow_up() {
        let quadrics = quadrics_through_five_points();
        assert_eq!(quadrics.len(), 5);
        // all five quadrics vanish at each base point
        let mut pts: Vec<Vec<BigRational>> = (0..4)
            .map(|k| {
                let mut v = vec![BigRational::zero(); 4];
                v[k] = BigRational::one();
                v
            })
            .collect();
        pts.push(vec![BigRational::one(); 4]);
        for pt in &pts {
            for q in &quadrics {
                assert!(q.eval(pt).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn quadrics_image_is_a_ten_nodal_cubic() {
        let cubic = quadrics_model_cubic(60, 23).unwrap();
        let (sing, planes, _) = fitted_cubic_census(&cubic, 7).unwrap();
        assert_eq!(sing, 10);
        assert_eq!(planes, 15);
    }
}
