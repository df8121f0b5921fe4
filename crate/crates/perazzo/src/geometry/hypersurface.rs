//! Projective hypersurfaces and linear subspaces over an exact field.

use crate::error::Error;
use crate::exact::field::{Field, PrimeField, Rationals};
use crate::exact::fmat::Mat;
use crate::exact::mpoly::MPoly;

/// A hypersurface `f = 0` in projective `N`-space.
#[derive(Clone, Debug)]
pub struct Hypersurface<F: Field> {
    f: MPoly<F>,
    ambient_dim: usize,
}

impl<F: Field> Hypersurface<F> {
    pub fn new(f: MPoly<F>) -> Self {
        assert!(!f.is_zero(), "hypersurface equation must be nonzero");
        assert!(f.is_homogeneous(), "hypersurface equation must be homogeneous");
        let ambient_dim = f.nvars() - 1;
        Hypersurface { f, ambient_dim }
    }

    pub fn equation(&self) -> &MPoly<F> {
        &self.f
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.f.degree().expect("nonzero")
    }

    pub fn partials(&self) -> Vec<MPoly<F>> {
        (0..self.f.nvars()).map(|k| self.f.partial(k)).collect()
    }

    pub fn contains_point(&self, point: &[F::Elt]) -> bool {
        let field = self.f.ring();
        field.is_zero(&self.f.eval(point).expect("arity"))
    }

    /// Whether the subspace lies on the hypersurface: substitute a
    /// parametrization and demand the zero polynomial.
    pub fn contains_subspace(&self, sub: &LinearSubspace<F>) -> bool {
        let field = self.f.ring().clone();
        let points = sub.spanning_points();
        let params = points.rows();
        // x_m = sum_a t_a * (point_a)_m
        let images: Vec<MPoly<F>> = (0..self.nvars())
            .map(|m| {
                let mut p = MPoly::zero(field.clone(), params);
                for a in 0..params {
                    let t = MPoly::var(field.clone(), params, a);
                    p = p.add(&t.scale(points.at(a, m)));
                }
                p
            })
            .collect();
        self.f.substitute(&images).expect("arity").is_zero()
    }
}

impl Hypersurface<Rationals> {
    pub fn reduce_mod(&self, fp: &PrimeField) -> Option<Hypersurface<PrimeField>> {
        let f = self.f.primitive_integer().reduce_mod(fp)?;
        if f.is_zero() || f.degree() != self.f.degree() {
            return None;
        }
        Some(Hypersurface::new(f))
    }
}

/// A linear subspace of projective space, carried as both a spanning point
/// set and a defining set of linear forms, mutually annihilating.
#[derive(Clone, Debug)]
pub struct LinearSubspace<F: Field> {
    /// (dim+1) x (N+1), rows are spanning points in RREF.
    points: Mat<F>,
    /// (N - dim) x (N+1), rows are coefficient vectors of linear forms.
    forms: Mat<F>,
}

impl<F: Field> LinearSubspace<F> {
    pub fn from_points(points: Mat<F>) -> Result<Self, Error> {
        let basis = points.row_space_basis();
        if basis.rows() == 0 {
            return Err(Error::DegeneratePlane("no spanning points".into()));
        }
        let forms_vecs = basis.kernel_basis();
        let forms = Mat::from_rows(basis.field().clone(), forms_vecs).row_space_basis();
        Ok(LinearSubspace {
            points: basis,
            forms,
        })
    }

    pub fn from_forms(field: F, forms_rows: Vec<Vec<F::Elt>>, nvars: usize) -> Result<Self, Error> {
        let forms_in = if forms_rows.is_empty() {
            Mat::zero(field.clone(), 0, nvars)
        } else {
            Mat::from_rows(field.clone(), forms_rows)
        };
        let forms = forms_in.row_space_basis();
        let points_vecs = if forms.rows() == 0 {
            Mat::identity(field.clone(), nvars).kernel_basis()
        } else {
            forms.kernel_basis()
        };
        let points = if points_vecs.is_empty() {
            return Err(Error::DegeneratePlane("forms cut out the empty set".into()));
        } else {
            Mat::from_rows(field, points_vecs).row_space_basis()
        };
        Ok(LinearSubspace { points, forms })
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.points.rows() - 1
    }

    pub fn ambient_vars(&self) -> usize {
        self.points.cols()
    }

    pub fn spanning_points(&self) -> &Mat<F> {
        &self.points
    }

    pub fn defining_forms(&self) -> &Mat<F> {
        &self.forms
    }

    /// The two descriptions annihilate each other.
    pub fn is_consistent(&self) -> bool {
        let field = self.points.field();
        for i in 0..self.forms.rows() {
            for j in 0..self.points.rows() {
                let mut acc = field.zero();
                for k in 0..self.points.cols() {
                    acc = field.add(&acc, &field.mul(self.forms.at(i, k), self.points.at(j, k)));
                }
                if !field.is_zero(&acc) {
                    return false;
                }
            }
        }
        self.forms.rows() + self.points.rows() == self.points.cols()
    }

    pub fn contains_point(&self, point: &[F::Elt]) -> bool {
        let field = self.points.field();
        (0..self.forms.rows()).all(|i| {
            let mut acc = field.zero();
            for k in 0..self.forms.cols() {
                acc = field.add(&acc, &field.mul(self.forms.at(i, k), &point[k]));
            }
            field.is_zero(&acc)
        })
    }

    /// Projective dimension of the intersection; `None` when empty.
    pub fn intersection_dim(&self, other: &Self) -> Option<usize> {
        let mut stacked = self.points.clone();
        for i in 0..other.points.rows() {
            stacked.push_row(other.points.row(i).to_vec());
        }
        let joint = stacked.rank();
        let linear_dim = self.points.rows() + other.points.rows();
        linear_dim.checked_sub(joint).and_then(|d| d.checked_sub(1))
    }

    pub fn same_subspace(&self, other: &Self) -> bool {
        self.points.same_row_space(&other.points)
    }

    /// The intersection subspace, if nonempty.
    pub fn intersect(&self, other: &Self) -> Option<LinearSubspace<F>> {
        let pts = self.points.row_space_intersection(&other.points);
        if pts.rows() == 0 {
            return None;
        }
        Some(LinearSubspace::from_points(pts).expect("nonempty"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat_int;

    fn q_points(rows: Vec<Vec<i64>>) -> Mat<Rationals> {
        Mat::from_rows(
            Rationals,
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn subspace_descriptions_annihilate() {
        // the line through e0, e1 in P^3
        let l = LinearSubspace::from_points(q_points(vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
        ]))
        .unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(l.defining_forms().rows(), 2);
        assert!(l.is_consistent());
        assert!(l.contains_point(&[rat_int(2), rat_int(-5), rat_int(0), rat_int(0)]));
        assert!(!l.contains_point(&[rat_int(0), rat_int(0), rat_int(1), rat_int(0)]));
    }

    #[test]
    fn intersection_dims() {
        let plane1 = LinearSubspace::from_points(q_points(vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ]))
        .unwrap();
        let plane2 = LinearSubspace::from_points(q_points(vec![
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ]))
        .unwrap();
        assert_eq!(plane1.intersection_dim(&plane2), Some(1));
        let pt = LinearSubspace::from_points(q_points(vec![vec![0, 0, 0, 1]])).unwrap();
        assert_eq!(plane1.intersection_dim(&pt), None);
    }

    #[test]
    fn hypersurface_subspace_containment() {
        // the quadric xw - yz contains the plane x = y = 0... no wait,
        // it contains the plane x = z = 0 and the line x = y = z = 0
        let vars = ["x", "y", "z", "w"];
        let f = MPoly::parse("x*w - y*z", &vars).unwrap();
        let q = Hypersurface::new(f);
        let plane = LinearSubspace::from_forms(
            Rationals,
            vec![
                vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
            ],
            4,
        )
        .unwrap();
        assert!(q.contains_subspace(&plane));
        let bad = LinearSubspace::from_forms(
            Rationals,
            vec![vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)]],
            4,
        )
        .unwrap();
        assert!(!q.contains_subspace(&bad));
    }
}
