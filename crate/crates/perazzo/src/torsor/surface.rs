//! Pulled-back cubics for surface sections: two independent linear forms in
//! the six ambient coordinates give two cubics in the chart variables, each
//! singular along the whole double-three; and the split normal form
//! `l1 l2 l3 = m1 m2 m3` of a surface is re-embedded as a codimension-two
//! linear section of the fourfold.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{PrimeField, Rationals};
use crate::exact::fmat::Mat;
use crate::exact::intmat::primitive_integer_vector;
use crate::exact::mpoly::MPoly;
use crate::geometry::fourfold::fourfold_equation;
use crate::geometry::hypersurface::Hypersurface;
use crate::geometry::singular::singular_points_fp;
use crate::torsor::chart::monomial_map;
use crate::torsor::doublethree::{double_three, verify_double_vanishing};

/// Pull back two independent linear forms through the chart map.  Each
/// result is a cubic in the nine chart variables; double vanishing along
/// all six planes of the double-three is certified on the spot.
pub fn surface_torsor_cubics(
    l1: &[BigRational],
    l2: &[BigRational],
) -> Result<(MPoly<Rationals>, MPoly<Rationals>), Error> {
    assert_eq!(l1.len(), 6);
    assert_eq!(l2.len(), 6);
    let rank = Mat::from_rows(Rationals, vec![l1.to_vec(), l2.to_vec()]).rank();
    if rank != 2 {
        return Err(Error::DegeneratePlane(
            "the two linear forms are dependent".into(),
        ));
    }
    let m = monomial_map();
    let pull = |l: &[BigRational]| {
        let mut p = MPoly::zero(Rationals, 9);
        for (c, coeff) in l.iter().enumerate() {
            p = p.add(&m[c].scale(coeff));
        }
        p
    };
    let v1 = pull(l1);
    let v2 = pull(l2);
    let dt = double_three();
    for plane in &dt.planes {
        if !verify_double_vanishing(&v1, plane) || !verify_double_vanishing(&v2, plane) {
            return Err(Error::CheckFailed(
                "pulled-back cubic is not double along the double-three".into(),
            ));
        }
    }
    Ok((v1, v2))
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitSurfaceReport {
    /// The surface equation in the four surface coordinates, as text.
    pub equation: String,
    /// The six forms span the full space of linear forms on the surface
    /// ambient space.
    pub embedding_rank_ok: bool,
    /// Coefficients of the two ambient hyperplanes cutting the section.
    pub ambient_relations: Vec<Vec<String>>,
    /// The pulled-back fourfold equation equals the surface equation.
    pub pullback_matches: bool,
    /// Singular census of the surface over small primes (should be empty
    /// for a smooth example).
    pub singular_counts: Vec<(u64, usize)>,
    pub pass: bool,
}

/// Re-embed the split surface `l1 l2 l3 = m1 m2 m3` (six linear forms in
/// four variables) as a codimension-two linear section of the fourfold:
/// the forms define a linear map to projective 5-space whose image is cut
/// by the two linear relations among the forms, and the fourfold equation
/// pulls back to the surface equation on the nose.
pub fn split_surface_section(
    l_forms: &[Vec<BigRational>; 3],
    m_forms: &[Vec<BigRational>; 3],
    smoothness_primes: &[u64],
) -> Result<SplitSurfaceReport, Error> {
    let all: Vec<&Vec<BigRational>> = l_forms.iter().chain(m_forms.iter()).collect();
    for f in &all {
        assert_eq!(f.len(), 4);
    }
    // columns = form coefficient vectors; relations = kernel vectors
    let coeff = Mat::from_fn(Rationals, 4, 6, |i, j| all[j][i].clone());
    let embedding_rank_ok = coeff.rank() == 4;
    let relations = coeff.kernel_basis();
    let relations_ok = relations.len() == 2;

    // surface equation = l1 l2 l3 - m1 m2 m3 in the four coordinates
    let form_poly = |f: &Vec<BigRational>| {
        let mut p = MPoly::zero(Rationals, 4);
        for (v, c) in f.iter().enumerate() {
            p = p.add(&MPoly::var(Rationals, 4, v).scale(c));
        }
        p
    };
    let lprod = l_forms.iter().map(form_poly).fold(MPoly::one(Rationals, 4), |a, b| a.mul(&b));
    let mprod = m_forms.iter().map(form_poly).fold(MPoly::one(Rationals, 4), |a, b| a.mul(&b));
    let equation = lprod.sub(&mprod);
    if equation.is_zero() {
        return Err(Error::DegeneratePlane("surface equation vanishes".into()));
    }

    // pull the fourfold equation back along (l1:l2:l3:m1:m2:m3)
    let images: Vec<MPoly<Rationals>> = all.iter().map(|f| form_poly(f)).collect();
    let pulled = fourfold_equation().substitute(&images).expect("arity");
    let pullback_matches = pulled == equation;

    // smoothness evidence over small primes
    let surf = Hypersurface::new(equation.clone().primitive_integer());
    let mut singular_counts = Vec::new();
    for &p in smoothness_primes {
        let fp = PrimeField::new(p);
        if let Some(sp) = surf.reduce_mod(&fp) {
            singular_counts.push((p, singular_points_fp(&sp)?.len()));
        }
    }
    let smooth_evidence = singular_counts.iter().any(|&(_, n)| n == 0);

    let names = ["u0", "u1", "u2", "u3"];
    let pass = embedding_rank_ok && relations_ok && pullback_matches && smooth_evidence;
    Ok(SplitSurfaceReport {
        equation: surf.equation().to_text(&names),
        embedding_rank_ok,
        ambient_relations: relations
            .iter()
            .map(|r| {
                primitive_integer_vector(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect()
            })
            .collect(),
        pullback_matches,
        singular_counts,
        pass,
    })
}

/// A fixed smooth split example used by the command-line checks: the zero
/// locus of `u0 u1 u2 - m1 m2 m3` for three small generic forms.
pub fn example_split_surface() -> ([Vec<BigRational>; 3], [Vec<BigRational>; 3]) {
    let f = |v: [i64; 4]| -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect()
    };
    (
        [f([1, 0, 0, 0]), f([0, 1, 0, 0]), f([0, 0, 1, 0])],
        [f([0, 0, 0, 1]), f([1, 1, 1, 1]), f([1, -1, 2, 3])],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat_int;

    #[test]
    fn pulled_back_cubics_are_double_along_the_double_three() {
        // l1 = x1 + y1, l2 = x2 - y3
        let mut l1 = vec![rat_int(0); 6];
        l1[0] = rat_int(1);
        l1[3] = rat_int(1);
        let mut l2 = vec![rat_int(0); 6];
        l2[1] = rat_int(1);
        l2[5] = rat_int(-1);
        let (v1, v2) = surface_torsor_cubics(&l1, &l2).unwrap();
        assert_eq!(v1.degree(), Some(3));
        assert_eq!(v2.degree(), Some(3));
    }

    #[test]
    fn single_coordinate_form_pulls_back_to_a_row_product() {
        let mut l1 = vec![rat_int(0); 6];
        l1[0] = rat_int(1);
        let mut l2 = vec![rat_int(0); 6];
        l2[4] = rat_int(1);
        let (v1, v2) = surface_torsor_cubics(&l1, &l2).unwrap();
        assert_eq!(v1, crate::torsor::chart::row_monomial(0));
        assert_eq!(v2, crate::torsor::chart::col_monomial(1));
    }

    #[test]
    fn dependent_forms_are_rejected() {
        let l = vec![rat_int(1); 6];
        assert!(matches!(
            surface_torsor_cubics(&l, &l),
            Err(Error::DegeneratePlane(_))
        ));
    }

    #[test]
    fn example_split_surface_re_embeds() {
        let (l, m) = example_split_surface();
        let report = split_surface_section(&l, &m, &[7, 11, 13]).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.ambient_relations.len(), 2);
    }
}
