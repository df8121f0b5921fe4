//! The lift of the wreath action to the chart variables: grid elements
//! permute the 3x3 variable grid, the factor flip transposes it.  The lift
//! is validated by the exact polynomial identity
//! `monomial(c) o lift(g) = monomial(g(c))`, checked for all 72 elements.

use num_rational::BigRational;
use num_traits::One;

use crate::exact::field::Rationals;
use crate::exact::mpoly::MPoly;
use crate::torsor::chart::monomial_map;
use crate::wreath::gamma::{gamma, GammaElt};

/// Substitution images of the lifted action: variable `z_pos` maps to
/// `z_{g(pos)}`.
pub fn lift_images(g: &GammaElt) -> Vec<MPoly<Rationals>> {
    (0..9)
        .map(|pos| MPoly::var(Rationals, 9, g.grid_apply(pos)))
        .collect()
}

/// Equivariance of the lift against the coordinate action, as an exact
/// polynomial identity for every group element; returns the number of
/// elements checked.
pub fn check_equivariance_all() -> Result<usize, ()> {
    let monomials = monomial_map();
    let mut checked = 0;
    for g in gamma().elements() {
        let grid = g.grid_perm();
        for (label, m) in monomials.iter().enumerate() {
            let moved = m.permute_vars(&grid.0);
            let target = &monomials[g.coord_apply(label)];
            if &moved != target {
                return Err(());
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// A formal scalar rescaling of the chart map: each coordinate monomial is
/// multiplied by a constant.  This is the shape of a twisted chart; it still
/// lands on the fourfold exactly when the two products of constants agree.
#[derive(Clone, Debug)]
pub struct TwistScaling {
    pub x_scales: [BigRational; 3],
    pub y_scales: [BigRational; 3],
}

impl TwistScaling {
    pub fn is_compatible(&self) -> bool {
        let px = self.x_scales.iter().product::<BigRational>();
        let py = self.y_scales.iter().product::<BigRational>();
        px == py
    }

    /// The rescaled coordinate polynomials.
    pub fn scaled_map(&self) -> [MPoly<Rationals>; 6] {
        let m = monomial_map();
        [
            m[0].scale(&self.x_scales[0]),
            m[1].scale(&self.x_scales[1]),
            m[2].scale(&self.x_scales[2]),
            m[3].scale(&self.y_scales[0]),
            m[4].scale(&self.y_scales[1]),
            m[5].scale(&self.y_scales[2]),
        ]
    }

    /// Whether the rescaled map still satisfies the fourfold equation
    /// identically.
    pub fn lands_on_fourfold(&self) -> bool {
        let pulled = crate::geometry::fourfold::fourfold_equation()
            .substitute(&self.scaled_map())
            .expect("arity");
        pulled.is_zero()
    }
}

impl Default for TwistScaling {
    fn default() -> Self {
        TwistScaling {
            x_scales: [
                BigRational::one(),
                BigRational::one(),
                BigRational::one(),
            ],
            y_scales: [
                BigRational::one(),
                BigRational::one(),
                BigRational::one(),
            ],
        }
    }
}
