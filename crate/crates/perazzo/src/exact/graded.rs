//! Graded pieces of homogeneous ideals as row spaces over the coefficient
//! field, which is all the ideal theory the crate needs: no Groebner bases,
//! just degree-by-degree linear algebra.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exact::field::Field;
use crate::exact::fmat::Mat;
use crate::exact::mpoly::{monomials_of_degree, Monomial, MPoly};

/// The degree-`d` piece of a homogeneous ideal, held as an RREF coefficient
/// matrix over a fixed sorted monomial basis.
#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    pub basis: Mat<F>,
}

impl<F: Field> GradedPiece<F> {
    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    fn coeff_vector(&self, p: &MPoly<F>, index: &BTreeMap<Monomial, usize>) -> Vec<F::Elt> {
        let field = p.ring().clone();
        let mut v = vec![field.zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    }

    /// Whether a homogeneous polynomial of the right degree lies in the piece.
    pub fn contains(&self, p: &MPoly<F>) -> bool {
        if p.is_zero() {
            return true;
        }
        if !p.is_homogeneous() || p.degree() != Some(self.degree) {
            return false;
        }
        let index: BTreeMap<Monomial, usize> = self
            .monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        self.basis.row_space_contains(&self.coeff_vector(p, &index))
    }

    /// Intersection with another piece of the same degree.
    pub fn intersect(&self, other: &GradedPiece<F>) -> GradedPiece<F> {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.monomials, other.monomials);
        GradedPiece {
            degree: self.degree,
            monomials: self.monomials.clone(),
            basis: self.basis.row_space_intersection(&other.basis),
        }
    }

    pub fn same_space(&self, other: &GradedPiece<F>) -> bool {
        self.degree == other.degree && self.basis.same_row_space(&other.basis)
    }
}

/// Degree-`d` piece of the ideal generated by homogeneous `gens`: the span
/// of `g * m` over generators `g` and monomials `m` with `deg(g m) = d`.
pub fn graded_piece<F: Field>(
    field: F,
    nvars: usize,
    gens: &[MPoly<F>],
    d: u32,
) -> Result<GradedPiece<F>, Error> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        if !g.is_zero() {
            assert_eq!(g.nvars(), nvars, "generator in wrong polynomial ring");
        }
    }
    let monomials = monomials_of_degree(nvars, d);
    let index: BTreeMap<Monomial, usize> = monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Mat::zero(field.clone(), 0, monomials.len());
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - e) {
            let prod = g.mul(&MPoly::from_terms(
                field.clone(),
                nvars,
                vec![(m, field.one())],
            ));
            let mut row = vec![field.zero(); monomials.len()];
            for (mm, c) in prod.terms() {
                row[index[mm]] = c.clone();
            }
            rows.push_row(row);
        }
    }
    Ok(GradedPiece {
        degree: d,
        monomials,
        basis: rows.row_space_basis(),
    })
}

/// Degree-`d` piece of an intersection of ideals, each given by generators.
pub fn graded_piece_of_intersection<F: Field>(
    field: F,
    nvars: usize,
    ideal_gens: &[Vec<MPoly<F>>],
    d: u32,
) -> Result<GradedPiece<F>, Error> {
    let mut pieces = ideal_gens
        .iter()
        .map(|gens| graded_piece(field.clone(), nvars, gens, d));
    let mut acc = pieces.next().expect("at least one ideal")?;
    for p in pieces {
        acc = acc.intersect(&p?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::Rationals;

    fn var(n: usize, k: usize) -> MPoly<Rationals> {
        MPoly::var(Rationals, n, k)
    }

    #[test]
    fn principal_ideal_linear_piece() {
        let x1 = var(2, 0);
        let p = graded_piece(Rationals, 2, &[x1.clone()], 1).unwrap();
        assert_eq!(p.dimension(), 1);
        assert!(p.contains(&x1));
        assert!(!p.contains(&var(2, 1)));
    }

    #[test]
    fn two_generator_cubic_piece_dimension() {
        // In six variables (x1,x2,x3,y1,y2,y3): the ideal (x2*x3, y1*y2*y3)
        // in degree 3 is spanned by the six linear multiples of x2*x3 plus
        // the one extra cubic, so dimension 7.
        let x2x3 = var(6, 1).mul(&var(6, 2));
        let yyy = var(6, 3).mul(&var(6, 4)).mul(&var(6, 5));
        let p = graded_piece(Rationals, 6, &[x2x3, yyy], 3).unwrap();
        assert_eq!(p.dimension(), 7);
    }

    #[test]
    fn non_homogeneous_generator_rejected() {
        let g = var(2, 0).add(&MPoly::one(Rationals, 2));
        assert!(matches!(
            graded_piece(Rationals, 2, &[g], 2),
            Err(Error::NonHomogeneous)
        ));
    }

    #[test]
    fn dimension_monotone_in_generators() {
        let x = var(3, 0);
        let y = var(3, 1);
        let small = graded_piece(Rationals, 3, &[x.clone()], 3).unwrap();
        let large = graded_piece(Rationals, 3, &[x, y], 3).unwrap();
        assert!(large.dimension() >= small.dimension());
    }

    #[test]
    fn brute_force_span_agreement() {
        // (x^2, xy) in degree 3 over 2 variables: spanned by x^3, x^2 y, x y^2
        let x = var(2, 0);
        let y = var(2, 1);
        let p = graded_piece(Rationals, 2, &[x.pow(2), x.mul(&y)], 3).unwrap();
        assert_eq!(p.dimension(), 3);
        assert!(p.contains(&x.pow(3)));
        assert!(p.contains(&x.pow(2).mul(&y)));
        assert!(p.contains(&x.mul(&y.pow(2))));
        assert!(!p.contains(&y.pow(3)));
    }
}
