//! Singular points over prime fields by exhaustive enumeration, Milnor data
//! through truncated local algebras, and the dual-degree count for cubic
//! threefolds.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{Field, PrimeField, Ring};
use crate::exact::local::local_algebra_dim;
use crate::exact::mpoly::MPoly;
use crate::exact::Mat;
use crate::geometry::hypersurface::Hypersurface;

/// Canonical representatives of projective space over `F_p`: first nonzero
/// coordinate equal to one, enumerated in lexicographic order.
pub fn projective_points(fp: &PrimeField, ambient_dim: usize) -> Vec<Vec<u64>> {
    let n = ambient_dim + 1;
    let p = fp.modulus();
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let mut counter = vec![0u64; free];
        loop {
            let mut pt = vec![0u64; n];
            pt[lead] = 1;
            for (k, &c) in counter.iter().enumerate() {
                pt[lead + 1 + k] = c;
            }
            out.push(pt);
            // odometer
            let mut k = free;
            loop {
                if k == 0 {
                    break;
                }
                counter[k - 1] += 1;
                if counter[k - 1] < p {
                    break;
                }
                counter[k - 1] = 0;
                k -= 1;
            }
            if k == 0 {
                break;
            }
        }
    }
    out
}

/// All singular points of `x` over its prime field, by enumeration.
/// The search space `p^(N+1)` must stay at desk scale.
pub fn singular_points_fp(x: &Hypersurface<PrimeField>) -> Result<Vec<Vec<u64>>, Error> {
    let fp = *x.equation().ring();
    let n = x.nvars() as u32;
    let space = (fp.modulus() as f64).powi(n as i32);
    if space > 1.0e8 {
        return Err(Error::BoundExceeded(format!(
            "p^(N+1) = {space:.0} exceeds the enumeration budget"
        )));
    }
    let partials = x.partials();
    let mut out = Vec::new();
    'point: for pt in projective_points(&fp, x.ambient_dim()) {
        if !fp.is_zero(&x.equation().eval(&pt).expect("arity")) {
            continue;
        }
        for d in &partials {
            if !fp.is_zero(&d.eval(&pt).expect("arity")) {
                continue 'point;
            }
        }
        out.push(pt);
    }
    Ok(out)
}

/// Per-singularity data.
#[derive(Clone, Debug, Serialize)]
pub struct SingularPointReport {
    pub point: Vec<String>,
    pub mu: u32,
    pub mu_prime: u32,
    pub m: u32,
    pub is_node: bool,
    pub hessian_rank: usize,
    pub slice_seed: u64,
}

/// Affine local equation of `x` at `point`: coordinates are centered at the
/// point in the chart where the last nonzero coordinate is scaled to one.
pub fn local_equation<F: Field>(
    x: &Hypersurface<F>,
    point: &[F::Elt],
) -> (MPoly<F>, usize) {
    let field = x.equation().ring().clone();
    let n = x.nvars();
    let chart = (0..n)
        .rev()
        .find(|&k| !field.is_zero(&point[k]))
        .expect("projective point is nonzero");
    // rescale so the chart coordinate is 1
    let inv = field.inv(&point[chart]).expect("nonzero");
    let scaled: Vec<F::Elt> = point.iter().map(|c| field.mul(c, &inv)).collect();
    // substitute x_m -> scaled_m + u_{index(m)} for m != chart, x_chart -> 1
    let mut images = Vec::with_capacity(n);
    let mut u = 0usize;
    for (m, base) in scaled.iter().enumerate() {
        if m == chart {
            images.push(MPoly::constant(field.clone(), n - 1, field.one()));
        } else {
            let c = MPoly::constant(field.clone(), n - 1, base.clone());
            images.push(c.add(&MPoly::var(field.clone(), n - 1, u)));
            u += 1;
        }
    }
    (
        x.equation().substitute(&images).expect("arity"),
        chart,
    )
}

/// Rank of the Hessian of the local equation at the origin.
pub fn hessian_rank_at<F: Field>(local: &MPoly<F>) -> usize {
    let field = local.ring().clone();
    let n = local.nvars();
    let origin = vec![field.zero(); n];
    let h = Mat::from_fn(field.clone(), n, n, |a, b| {
        local.partial(a).partial(b).eval(&origin).expect("arity")
    });
    h.rank()
}

/// Classify an isolated singular point: Milnor number, Milnor number of a
/// pseudo-random hyperplane slice (with reseeded retries), their sum, and
/// the node test via the Hessian.
pub fn classify_singularity<F: Field>(
    x: &Hypersurface<F>,
    point: &[F::Elt],
    trunc: u32,
    seed: u64,
) -> Result<SingularPointReport, Error> {
    let field = x.equation().ring().clone();
    assert!(x.contains_point(point), "point not on the hypersurface");
    for d in x.partials() {
        assert!(
            field.is_zero(&d.eval(point).expect("arity")),
            "point is not singular"
        );
    }
    let (local, _) = local_equation(x, point);
    let n = local.nvars();
    let mu = local_algebra_dim(&local, trunc)?;
    let hessian_rank = hessian_rank_at(&local);

    // generic slice: substitute the last variable by a seeded random
    // combination of the others, retrying on non-stabilization
    let mut slice_seed = seed;
    let mut mu_prime = None;
    for attempt in 0..5 {
        slice_seed = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(slice_seed);
        let mut combo = MPoly::zero(field.clone(), n - 1);
        for v in 0..n - 1 {
            let c = field.from_i64(rng.gen_range(-9i64..=9));
            combo = combo.add(&MPoly::var(field.clone(), n - 1, v).scale(&c));
        }
        let mut images: Vec<MPoly<F>> = (0..n - 1)
            .map(|v| MPoly::var(field.clone(), n - 1, v))
            .collect();
        images.push(combo);
        let sliced = local.substitute(&images).expect("arity");
        match local_algebra_dim(&sliced, trunc) {
            Ok(v) => {
                mu_prime = Some(v);
                break;
            }
            Err(Error::Unstable { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let Some(mu_prime) = mu_prime else {
        return Err(Error::Unstable { trunc });
    };

    let is_node = hessian_rank == n;
    Ok(SingularPointReport {
        point: point.iter().map(|c| format!("{c:?}")).collect(),
        mu,
        mu_prime,
        m: mu + mu_prime,
        is_node,
        hessian_rank,
        slice_seed,
    })
}

/// Degree of the dual variety of a cubic threefold with isolated,
/// classified singularities: `3 * 2^3` minus the sum of the classes.
pub fn dual_degree(reports: &[SingularPointReport]) -> i64 {
    24 - reports.iter().map(|r| i64::from(r.m)).sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat_int, Rationals};

    #[test]
    fn projective_point_count() {
        let f5 = PrimeField::new(5);
        assert_eq!(projective_points(&f5, 2).len(), 31);
        let f2 = PrimeField::new(2);
        assert_eq!(projective_points(&f2, 5).len(), 63);
    }

    #[test]
    fn smooth_quadric_has_no_singular_points() {
        let f5 = PrimeField::new(5);
        let vars = ["x0", "x1", "x2", "x3"];
        let q = MPoly::parse("x0^2 + x1^2 + x2^2 - x3^2", &vars)
            .unwrap()
            .reduce_mod(&f5)
            .unwrap();
        let x = Hypersurface::new(q);
        assert!(singular_points_fp(&x).unwrap().is_empty());
    }

    #[test]
    fn cone_point_is_found_and_classified() {
        let vars = ["x0", "x1", "x2", "x3"];
        let f = MPoly::parse("x0^2 + x1^2 + x2^2", &vars).unwrap();
        let x = Hypersurface::new(f);
        let pt = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        let rep = classify_singularity(&x, &pt, 8, 7).unwrap();
        assert_eq!(rep.mu, 1);
        assert_eq!(rep.mu_prime, 1);
        assert_eq!(rep.m, 2);
        assert!(rep.is_node);
    }

    #[test]
    fn a2_point_has_class_three() {
        // affine x^2 + y^2 + z^3 at the coordinate point
        let vars = ["x0", "x1", "x2", "x3"];
        let f = MPoly::parse("x0^2*x3 + x1^2*x3 + x2^3", &vars).unwrap();
        let x = Hypersurface::new(f);
        let pt = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        let rep = classify_singularity(&x, &pt, 9, 11).unwrap();
        assert_eq!(rep.mu, 2);
        assert_eq!(rep.mu_prime, 1);
        assert_eq!(rep.m, 3);
        assert!(!rep.is_node);
    }

    #[test]
    fn non_isolated_singularity_errors() {
        let vars = ["x0", "x1", "x2", "x3"];
        let f = MPoly::parse("x0*x1*x2", &vars).unwrap();
        let x = Hypersurface::new(f);
        let pt = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        assert!(matches!(
            classify_singularity(&x, &pt, 7, 1),
            Err(Error::Unstable { .. })
        ));
    }

    #[test]
    fn dual_degree_of_smooth_cubic() {
        assert_eq!(dual_degree(&[]), 24);
    }

    #[test]
    fn rationals_smoke_for_local_equation() {
        let vars = ["x", "y", "z"];
        let f = MPoly::parse("x*y - z^2", &vars).unwrap();
        let x = Hypersurface::<Rationals>::new(f);
        let pt = [rat_int(1), rat_int(4), rat_int(2)];
        assert!(x.contains_point(&pt));
        let (local, chart) = local_equation(&x, &pt);
        assert_eq!(chart, 2);
        let origin = [rat_int(0), rat_int(0)];
        assert!(local.ring().is_zero(&local.eval(&origin).unwrap()));
    }
}
