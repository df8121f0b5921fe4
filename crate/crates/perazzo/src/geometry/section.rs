//! Nine-nodal threefolds as certified hyperplane sections of the standard
//! fourfold, coordinate reconstruction from the labeled plane configuration,
//! the graded ideal identity behind the reconstruction argument, and the
//! Euler-characteristic bookkeeping for the class rank.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{Field, PrimeField, Rationals, Ring};
use crate::exact::fmat::Mat;
use crate::exact::graded::{graded_piece, graded_piece_of_intersection};
use crate::exact::intmat::primitive_integer_vector;
use crate::exact::mpoly::{monomials_of_degree, MPoly};
use crate::geometry::fourfold::fourfold_equation;
use crate::geometry::hypersurface::{Hypersurface, LinearSubspace};
use crate::geometry::incidence::{incidence_graph, IncidenceGraph, TorusSkeletonReport};
use crate::geometry::singular::{
    classify_singularity, local_equation, hessian_rank_at, singular_points_fp,
    SingularPointReport,
};
use crate::wreath::gamma::COORD_NAMES;
use crate::wreath::graphaut::grid_graph;

/// A hyperplane section of the standard fourfold with its nine nodes and
/// nine planes, all in the coordinates of the section.
pub struct NineNodalSection {
    /// The six hyperplane coefficients on `x1,x2,x3,y1,y2,y3`.
    pub hyperplane: Vec<BigRational>,
    /// The section as a cubic in the five retained coordinates.
    pub threefold: Hypersurface<Rationals>,
    /// Index of the ambient coordinate eliminated.
    pub eliminated: usize,
    /// `nodes[3p + q]` is the meeting point of the hyperplane with the
    /// singular line through the `p`-th x-point and `q`-th y-point.
    pub nodes: Vec<Vec<BigRational>>,
    /// `planes[3i + j]` is the section of the plane `x_{i+1} = y_{j+1} = 0`.
    pub planes: Vec<LinearSubspace<Rationals>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionCertificate {
    pub node_reports: Vec<SingularPointReport>,
    pub good_primes: Vec<u64>,
    pub skipped_primes: Vec<(u64, String)>,
    pub planes_per_node: usize,
    pub nodes_per_plane: usize,
    pub incidence: TorusSkeletonReport,
    pub dual_degree: i64,
    /// Per good prime: `(p, #X(F_p), predicted count)`, where the prediction
    /// comes from blowing down nine rational exceptional quadrics from the
    /// smooth model with second Betti number 14.
    pub point_census: Vec<(u64, u64, u64)>,
    /// How the "exactly nine singular points" claim is certified.
    pub certificate_kind: String,
}

/// Names of the five retained coordinates after eliminating index `k`.
pub fn section_var_names(eliminated: usize) -> Vec<&'static str> {
    COORD_NAMES
        .iter()
        .enumerate()
        .filter(|(m, _)| *m != eliminated)
        .map(|(_, s)| *s)
        .collect()
}

/// Cut the fourfold by the hyperplane with the given coefficients.  Fails
/// when some coefficient vanishes: the hyperplane would pass through a
/// distinguished point and the section degenerates.
pub fn nine_nodal_section(hyperplane: &[BigRational]) -> Result<NineNodalSection, Error> {
    assert_eq!(hyperplane.len(), 6);
    if let Some(k) = hyperplane.iter().position(|c| c.is_zero()) {
        return Err(Error::BadSection(format!(
            "coefficient of {} vanishes, so the hyperplane passes through a distinguished point",
            COORD_NAMES[k]
        )));
    }
    let eliminated = 5usize;
    let hk = hyperplane[eliminated].clone();

    // x_eliminated = -(sum of the other terms) / h_k, then drop the variable
    let mut images: Vec<MPoly<Rationals>> = Vec::with_capacity(6);
    let mut new_index = vec![0usize; 6];
    {
        let mut idx = 0usize;
        for m in 0..6 {
            if m != eliminated {
                new_index[m] = idx;
                idx += 1;
            }
        }
    }
    for m in 0..6 {
        if m == eliminated {
            let mut sub = MPoly::zero(Rationals, 5);
            for t in 0..6 {
                if t == eliminated {
                    continue;
                }
                let c = -&hyperplane[t] / &hk;
                sub = sub.add(&MPoly::var(Rationals, 5, new_index[t]).scale(&c));
            }
            images.push(sub);
        } else {
            images.push(MPoly::var(Rationals, 5, new_index[m]));
        }
    }
    let restricted = fourfold_equation()
        .substitute(&images)
        .expect("arity")
        .primitive_integer();
    if restricted.is_zero() || restricted.degree() != Some(3) {
        return Err(Error::BadSection("section is not a cubic".into()));
    }
    let threefold = Hypersurface::new(restricted);

    // node over the (p, q) singular line: b_q e_p - a_p e_{3+q}
    let mut nodes = Vec::with_capacity(9);
    for p in 0..3 {
        for q in 0..3 {
            let mut v6 = vec![BigRational::zero(); 6];
            v6[p] = hyperplane[3 + q].clone();
            v6[3 + q] = -hyperplane[p].clone();
            let v5: Vec<BigRational> = (0..6)
                .filter(|m| *m != eliminated)
                .map(|m| v6[m].clone())
                .collect();
            nodes.push(v5);
        }
    }
    for a in 0..9 {
        for b in a + 1..9 {
            if crate::geometry::fourfold::projectively_equal(&nodes[a], &nodes[b]) {
                return Err(Error::BadSection("node points collide".into()));
            }
        }
    }

    // plane sections: {x_i = y_j = H = 0} pushed into the retained coordinates
    let mut planes = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let mut forms = Vec::new();
            let mut xi = vec![BigRational::zero(); 6];
            xi[i] = BigRational::one();
            let mut yj = vec![BigRational::zero(); 6];
            yj[3 + j] = BigRational::one();
            forms.push(xi);
            forms.push(yj);
            forms.push(hyperplane.to_vec());
            let in_p5 = LinearSubspace::from_forms(Rationals, forms, 6)?;
            let pts = in_p5.spanning_points();
            let rows: Vec<Vec<BigRational>> = (0..pts.rows())
                .map(|r| {
                    (0..6)
                        .filter(|m| *m != eliminated)
                        .map(|m| pts.at(r, m).clone())
                        .collect()
                })
                .collect();
            let plane = LinearSubspace::from_points(Mat::from_rows(Rationals, rows))?;
            if plane.dim() != 2 {
                return Err(Error::BadSection(format!(
                    "plane section ({i},{j}) has dimension {}",
                    plane.dim()
                )));
            }
            planes.push(plane);
        }
    }

    Ok(NineNodalSection {
        hyperplane: hyperplane.to_vec(),
        threefold,
        eliminated,
        nodes,
        planes,
    })
}

impl NineNodalSection {
    /// Nodes as primitive integer vectors, for reduction mod p.
    fn integer_nodes(&self) -> Vec<Vec<BigInt>> {
        self.nodes.iter().map(|v| primitive_integer_vector(v)).collect()
    }

    /// The incidence graph of the nine plane sections.
    pub fn incidence(&self) -> Result<IncidenceGraph, Error> {
        incidence_graph(&self.planes)
    }

    /// Certify the section: exact node verification over the rationals plus
    /// exhaustive agreement of the singular locus over at least
    /// `want_good_primes` good primes.
    pub fn certify(
        &self,
        trunc: u32,
        seed: u64,
        want_good_primes: usize,
    ) -> Result<SectionCertificate, Error> {
        // exact node checks over the rationals
        let mut node_reports = Vec::with_capacity(9);
        for node in &self.nodes {
            if !self.threefold.contains_point(node) {
                return Err(Error::BadSection("claimed node is off the section".into()));
            }
            let report = classify_singularity(&self.threefold, node, trunc, seed)?;
            if !report.is_node || report.m != 2 {
                return Err(Error::BadSection(format!(
                    "singular point is not an ordinary node: {report:?}"
                )));
            }
            node_reports.push(report);
        }

        // plane/node incidence: four nodes on each plane, four planes
        // through each node, and the combinatorial pattern i != p, j != q
        let mut plane_counts = [0usize; 9];
        let mut node_counts = [0usize; 9];
        for (pl, plane) in self.planes.iter().enumerate() {
            let (i, j) = (pl / 3, pl % 3);
            for (nd, node) in self.nodes.iter().enumerate() {
                let (p, q) = (nd / 3, nd % 3);
                let on = plane.contains_point(node);
                if on != (i != p && j != q) {
                    return Err(Error::BadSection(
                        "plane-node incidence differs from the grid pattern".into(),
                    ));
                }
                if on {
                    plane_counts[pl] += 1;
                    node_counts[nd] += 1;
                }
            }
        }
        if plane_counts.iter().any(|&c| c != 4) || node_counts.iter().any(|&c| c != 4) {
            return Err(Error::BadSection("incidence counts are off".into()));
        }

        let incidence = self.incidence()?.check_torus_skeleton();

        // good primes: nodes stay distinct and nondegenerate; at a good
        // prime the exhaustive singular census must be exactly the nine nodes
        let int_nodes = self.integer_nodes();
        let mut good_primes = Vec::new();
        let mut skipped = Vec::new();
        let mut point_census = Vec::new();
        let mut mismatches = 0usize;
        for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            if good_primes.len() >= want_good_primes {
                break;
            }
            let fp = PrimeField::new(p);
            let Some(xp) = self.threefold.reduce_mod(&fp) else {
                skipped.push((p, "cubic degenerates".to_string()));
                continue;
            };
            let mut reduced: Vec<Vec<u64>> = Vec::with_capacity(9);
            for v in &int_nodes {
                reduced.push(normalize_point_fp(
                    &fp,
                    &v.iter().map(|x| fp.reduce_int(x)).collect::<Vec<u64>>(),
                ));
            }
            let mut distinct = true;
            for a in 0..9 {
                if reduced[a].iter().all(|&c| c == 0) {
                    distinct = false;
                }
                for b in a + 1..9 {
                    if reduced[a] == reduced[b] {
                        distinct = false;
                    }
                }
            }
            if !distinct {
                skipped.push((p, "nodes collide".to_string()));
                continue;
            }
            let mut nondegenerate = true;
            for pt in &reduced {
                if !xp.contains_point(pt) {
                    nondegenerate = false;
                    break;
                }
                let (local, _) = local_equation(&xp, pt);
                if hessian_rank_at(&local) != 4 {
                    nondegenerate = false;
                    break;
                }
            }
            if !nondegenerate {
                skipped.push((p, "node degenerates".to_string()));
                continue;
            }
            // the census must agree exactly; a single disagreeing prime is
            // bad reduction away from the nodes and is skipped, but repeated
            // disagreement means the section genuinely has more singular
            // points and the certificate must fail
            let mut census = singular_points_fp(&xp)?;
            census.sort();
            let mut expected = reduced.clone();
            expected.sort();
            if census != expected {
                mismatches += 1;
                skipped.push((p, "singular census mismatch".to_string()));
                if mismatches >= 3 {
                    return Err(Error::BadSection(
                        "singular census disagrees at three primes; the section does not have exactly nine singular points".into(),
                    ));
                }
                continue;
            }
            // point count through the blow-up: with exactly nine nodes the
            // smooth model has 14 rational cycle classes and no odd
            // cohomology, so #X(F_p) = 1 + 14p + 14p^2 + p^3 + 9 - sum of
            // the tangent-cone quadric counts.  A hidden extra singular
            // point (rational or not) breaks this at almost every prime.
            let actual = count_points_fp(&xp);
            let mut predicted: i128 =
                1 + 14 * p as i128 + 14 * (p as i128).pow(2) + (p as i128).pow(3) + 9;
            for pt in &reduced {
                let (local, _) = local_equation(&xp, pt);
                let cone = local.homogeneous_part(2);
                predicted -= i128::from(count_quadric_points(&fp, &cone));
            }
            if i128::from(actual) != predicted {
                mismatches += 1;
                skipped.push((p, "blow-up point count mismatch".to_string()));
                if mismatches >= 3 {
                    return Err(Error::BadSection(
                        "blow-up point counts disagree at three primes; the section does not have exactly nine nodes".into(),
                    ));
                }
                continue;
            }
            point_census.push((p, actual, predicted as u64));
            good_primes.push(p);
        }
        if good_primes.len() < want_good_primes {
            return Err(Error::BadSection(format!(
                "found only {} good primes",
                good_primes.len()
            )));
        }

        let dual = crate::geometry::singular::dual_degree(&node_reports);

        Ok(SectionCertificate {
            node_reports,
            good_primes,
            skipped_primes: skipped,
            planes_per_node: 4,
            nodes_per_plane: 4,
            incidence,
            dual_degree: dual,
            point_census,
            certificate_kind:
                "exact node verification over Q; singular locus and blow-up point counts exhaustive at good primes"
                    .to_string(),
        })
    }
}

/// Number of points of the hypersurface over its prime field.
pub fn count_points_fp(x: &Hypersurface<PrimeField>) -> u64 {
    let fp = *x.equation().ring();
    projective_points_count_on(&fp, x)
}

fn projective_points_count_on(fp: &PrimeField, x: &Hypersurface<PrimeField>) -> u64 {
    let mut count = 0u64;
    for pt in crate::geometry::singular::projective_points(fp, x.ambient_dim()) {
        if fp.is_zero(&x.equation().eval(&pt).expect("arity")) {
            count += 1;
        }
    }
    count
}

/// Number of points of the quadric `q = 0` in the projective space on the
/// variables of `q`.
fn count_quadric_points(fp: &PrimeField, q: &MPoly<PrimeField>) -> u64 {
    let n = q.nvars();
    let mut count = 0u64;
    for pt in crate::geometry::singular::projective_points(fp, n - 1) {
        if fp.is_zero(&q.eval(&pt).expect("arity")) {
            count += 1;
        }
    }
    count
}

/// Scale a nonzero point so its first nonzero coordinate is one.
pub fn normalize_point_fp(fp: &PrimeField, v: &[u64]) -> Vec<u64> {
    let Some(lead) = v.iter().position(|&c| c != 0) else {
        return v.to_vec();
    };
    let inv = fp.inv(&v[lead]).expect("nonzero");
    v.iter().map(|c| fp.mul(c, &inv)).collect()
}

/// The hyperplane coefficients used for the shipped certified section.
/// Small-height, no coefficient divisible by 2, 3 or 5, so the small-prime
/// censuses stay usable; found by `search_section` and frozen.
pub fn standard_section_coeffs() -> Vec<BigRational> {
    [1i64, 7, 11, 13, 17, 19]
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

/// First hyperplane from the candidate list that certifies with the wanted
/// number of good primes.
pub fn search_section(
    candidates: &[[i64; 6]],
    trunc: u32,
    seed: u64,
    want_good_primes: usize,
) -> Option<(NineNodalSection, SectionCertificate)> {
    for cand in candidates {
        let coeffs: Vec<BigRational> = cand
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let Ok(section) = nine_nodal_section(&coeffs) else {
            continue;
        };
        if let Ok(cert) = section.certify(trunc, seed, want_good_primes) {
            return Some((section, cert));
        }
    }
    None
}

// ---- coordinate reconstruction ----

#[derive(Clone, Debug)]
pub struct ReconstructedCoordinates {
    /// Row forms: the linear form cutting the span of row `i` of planes.
    pub x_forms: Vec<Vec<BigRational>>,
    /// Column forms.
    pub y_forms: Vec<Vec<BigRational>>,
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// Recover the six linear forms and the two scalars with
/// `alpha * x1 x2 x3 - beta * y1 y2 y3` vanishing identically on the
/// section, from the grid-labeled planes alone.  The labeling is first
/// checked against the grid incidence pattern.
pub fn reconstruct_coordinates(
    threefold: &Hypersurface<Rationals>,
    labeled_planes: &[LinearSubspace<Rationals>],
) -> Result<ReconstructedCoordinates, Error> {
    assert_eq!(labeled_planes.len(), 9);
    let ig = incidence_graph(labeled_planes)?;
    let reference = grid_graph();
    for a in 0..9 {
        for b in a + 1..9 {
            if ig.graph.has_edge(a, b) != reference.has_edge(a, b) {
                return Err(Error::DegeneratePlane(
                    "labeling is inconsistent with the grid incidence pattern".into(),
                ));
            }
        }
    }

    let span_form = |members: &[usize]| -> Result<Vec<BigRational>, Error> {
        let mut rows = Vec::new();
        for &m in members {
            let pts = labeled_planes[m].spanning_points();
            for r in 0..pts.rows() {
                rows.push(pts.row(r).to_vec());
            }
        }
        let mat = Mat::from_rows(Rationals, rows);
        let ker = mat.kernel_basis();
        if ker.len() != 1 {
            return Err(Error::DegeneratePlane(
                "row or column span is not a hyperplane".into(),
            ));
        }
        let prim = primitive_integer_vector(&ker[0]);
        let mut v: Vec<BigRational> = prim.into_iter().map(BigRational::from_integer).collect();
        if v.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()) == Some(true) {
            for c in &mut v {
                *c = -&*c;
            }
        }
        Ok(v)
    };

    let mut x_forms = Vec::with_capacity(3);
    let mut y_forms = Vec::with_capacity(3);
    for i in 0..3 {
        x_forms.push(span_form(&[3 * i, 3 * i + 1, 3 * i + 2])?);
    }
    for j in 0..3 {
        y_forms.push(span_form(&[j, 3 + j, 6 + j])?);
    }

    // fit f = alpha * prod(x) - beta * prod(y)
    let n = threefold.nvars();
    let form_poly = |coeffs: &[BigRational]| {
        let mut p = MPoly::zero(Rationals, n);
        for (v, c) in coeffs.iter().enumerate() {
            p = p.add(&MPoly::var(Rationals, n, v).scale(c));
        }
        p
    };
    let prod_x = x_forms.iter().map(|f| form_poly(f)).fold(
        MPoly::one(Rationals, n),
        |acc, p| acc.mul(&p),
    );
    let prod_y = y_forms.iter().map(|f| form_poly(f)).fold(
        MPoly::one(Rationals, n),
        |acc, p| acc.mul(&p),
    );

    let basis = monomials_of_degree(n, 3);
    let index: std::collections::BTreeMap<_, _> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut system = Mat::zero(Rationals, basis.len(), 2);
    for (m, c) in prod_x.terms() {
        *system.at_mut(index[m], 0) = c.clone();
    }
    for (m, c) in prod_y.terms() {
        *system.at_mut(index[m], 1) = -c.clone();
    }
    let mut rhs = vec![BigRational::zero(); basis.len()];
    for (m, c) in threefold.equation().terms() {
        rhs[index[m]] = c.clone();
    }
    let sol = system
        .solve(&rhs)
        .ok_or_else(|| Error::DegeneratePlane("section equation is not a product pencil".into()))?;
    let (alpha, beta) = (sol[0].clone(), sol[1].clone());

    // exact identity check
    let recomposed = prod_x.scale(&alpha).sub(&prod_y.scale(&beta));
    if recomposed != *threefold.equation() {
        return Err(Error::DegeneratePlane(
            "reconstructed pencil does not reproduce the equation".into(),
        ));
    }

    Ok(ReconstructedCoordinates {
        x_forms,
        y_forms,
        alpha,
        beta,
    })
}

// ---- graded ideal identity ----

#[derive(Clone, Debug, Serialize)]
pub struct IdealIdentityReport {
    pub degrees: Vec<u32>,
    pub dimensions: Vec<usize>,
    pub expected_dimensions: Vec<usize>,
    pub equal_row_spaces: bool,
    pub pass: bool,
}

/// Compare, degree by degree, the intersection of the six coordinate ideals
/// `(x_i, y_j)` for `i != 1` with the ideal `(x2 x3, y1 y2 y3)`, in the six
/// ambient coordinates.  The expected dimensions come from the
/// complete-intersection count for a (2,3) pair in six variables.
pub fn plane_ideal_identity(d_min: u32, d_max: u32) -> Result<IdealIdentityReport, Error> {
    let nm = |s: &str| MPoly::parse(s, &COORD_NAMES).expect("fixed source");
    let six: Vec<Vec<MPoly<Rationals>>> = [1usize, 2]
        .iter()
        .flat_map(|&i| {
            (0..3).map(move |j| {
                vec![
                    nm(&format!("x{}", i + 1)),
                    nm(&format!("y{}", j + 1)),
                ]
            })
        })
        .collect();
    let rhs_gens = vec![nm("x2*x3"), nm("y1*y2*y3")];

    let choose5 = |m: i64| -> i64 {
        if m < 5 {
            0
        } else {
            (m - 4..=m).product::<i64>() / 120
        }
    };
    let mut degrees = Vec::new();
    let mut dims = Vec::new();
    let mut expected = Vec::new();
    let mut equal = true;
    for d in d_min..=d_max {
        let lhs = graded_piece_of_intersection(Rationals, 6, &six, d)?;
        let rhs = graded_piece(Rationals, 6, &rhs_gens, d)?;
        if !lhs.same_space(&rhs) {
            equal = false;
        }
        degrees.push(d);
        dims.push(rhs.dimension());
        let di = d as i64;
        let quotient = choose5(di + 5) - choose5(di + 3) - choose5(di + 2) + choose5(di);
        expected.push((choose5(di + 5) - quotient) as usize);
    }
    let pass = equal && dims == expected;
    Ok(IdealIdentityReport {
        degrees,
        dimensions: dims,
        expected_dimensions: expected,
        equal_row_spaces: equal,
        pass,
    })
}

// ---- Euler characteristic bookkeeping ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBookkeeping {
    pub nodes: i64,
    pub euler_characteristic: i64,
    pub b2_of_blowup: i64,
    pub class_rank: i64,
}

/// Betti bookkeeping for the blow-up of a `d`-nodal cubic threefold with
/// `b3 = 0`: `e = -6 + 4 d`, `b2 = (e - 2) / 2`, class rank `b2 - d`.
/// Only the two node counts that occur are supported.
pub fn class_rank_bookkeeping(d: i64) -> Result<RankBookkeeping, Error> {
    if d != 9 && d != 10 {
        return Err(Error::Usage(format!(
            "bookkeeping formula is only asserted for 9 or 10 nodes, got {d}"
        )));
    }
    let e = -6 + 4 * d;
    let b2 = (e - 2) / 2;
    Ok(RankBookkeeping {
        nodes: d,
        euler_characteristic: e,
        b2_of_blowup: b2,
        class_rank: b2 - d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: [i64; 6]) -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    #[test]
    fn zero_coefficient_is_rejected() {
        // x1 = x2 has zero coefficients elsewhere
        let h = coeffs([1, -1, 0, 0, 0, 0]);
        assert!(matches!(
            nine_nodal_section(&h),
            Err(Error::BadSection(_))
        ));
    }

    #[test]
    fn standard_section_has_nine_nodes_and_planes() {
        let s = nine_nodal_section(&standard_section_coeffs()).unwrap();
        assert_eq!(s.nodes.len(), 9);
        assert_eq!(s.planes.len(), 9);
        for node in &s.nodes {
            assert!(s.threefold.contains_point(node));
        }
        for plane in &s.planes {
            assert!(s.threefold.contains_subspace(plane));
        }
    }

    #[test]
    fn bookkeeping_values() {
        let nine = class_rank_bookkeeping(9).unwrap();
        assert_eq!(nine.euler_characteristic, 30);
        assert_eq!(nine.b2_of_blowup, 14);
        assert_eq!(nine.class_rank, 5);
        let ten = class_rank_bookkeeping(10).unwrap();
        assert_eq!(ten.euler_characteristic, 34);
        assert_eq!(ten.b2_of_blowup, 16);
        assert_eq!(ten.class_rank, 6);
        assert!(class_rank_bookkeeping(8).is_err());
    }

    #[test]
    fn ideal_identity_in_low_degrees() {
        let report = plane_ideal_identity(3, 4).unwrap();
        assert!(report.pass, "{report:?}");
        // degree 3: six multiples of the quadric plus one cubic
        assert_eq!(report.dimensions[0], 7);
    }
}
