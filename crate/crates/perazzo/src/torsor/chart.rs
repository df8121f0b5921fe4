//! The monomial map from the 3x3 chart variables onto the fourfold:
//! each x-coordinate is a row product, each y-coordinate a column product.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::exact::field::{Field, PrimeField, Rationals, Ring};
use crate::exact::mpoly::MPoly;
use crate::geometry::fourfold::fourfold_equation;

/// Chart variable names; `z_ij` sits at index `3 i + j`.
pub const Z_NAMES: [&str; 9] = [
    "z11", "z12", "z13", "z21", "z22", "z23", "z31", "z32", "z33",
];

/// `z_i1 z_i2 z_i3`.
pub fn row_monomial(i: usize) -> MPoly<Rationals> {
    let mut p = MPoly::one(Rationals, 9);
    for q in 0..3 {
        p = p.mul(&MPoly::var(Rationals, 9, 3 * i + q));
    }
    p
}

/// `z_1j z_2j z_3j`.
pub fn col_monomial(j: usize) -> MPoly<Rationals> {
    let mut p = MPoly::one(Rationals, 9);
    for q in 0..3 {
        p = p.mul(&MPoly::var(Rationals, 9, 3 * q + j));
    }
    p
}

/// The six coordinate polynomials of the chart map, in the order
/// `x1, x2, x3, y1, y2, y3`.
pub fn monomial_map() -> [MPoly<Rationals>; 6] {
    [
        row_monomial(0),
        row_monomial(1),
        row_monomial(2),
        col_monomial(0),
        col_monomial(1),
        col_monomial(2),
    ]
}

/// The defining identity: the fourfold equation pulls back to zero, and
/// both triple products equal the product of all nine variables.
pub fn verify_identity() -> bool {
    let images = monomial_map();
    let pulled = fourfold_equation().substitute(&images).expect("arity");
    if !pulled.is_zero() {
        return false;
    }
    let all = (0..9).fold(MPoly::one(Rationals, 9), |acc, k| {
        acc.mul(&MPoly::var(Rationals, 9, k))
    });
    let rows = (0..3).fold(MPoly::one(Rationals, 9), |acc, i| acc.mul(&row_monomial(i)));
    let cols = (0..3).fold(MPoly::one(Rationals, 9), |acc, j| acc.mul(&col_monomial(j)));
    rows == all && cols == all
}

/// Evaluate the chart at nine scalars.  Fails on the base locus, where all
/// six products vanish; otherwise the image point satisfies the fourfold
/// equation, which the caller can trust because the pullback identity is an
/// exact polynomial identity (and is still asserted here).
pub fn torsor_eval<F: Field>(field: &F, z: &[F::Elt]) -> Result<Vec<F::Elt>, Error> {
    assert_eq!(z.len(), 9);
    let prod = |idx: [usize; 3]| {
        idx.iter()
            .fold(field.one(), |acc, &k| field.mul(&acc, &z[k]))
    };
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        out.push(prod([3 * i, 3 * i + 1, 3 * i + 2]));
    }
    for j in 0..3 {
        out.push(prod([j, 3 + j, 6 + j]));
    }
    if out.iter().all(|c| field.is_zero(c)) {
        return Err(Error::DegeneratePlane(
            "all six products vanish: the point lies in the base locus".into(),
        ));
    }
    let x = field.mul(&field.mul(&out[0], &out[1]), &out[2]);
    let y = field.mul(&field.mul(&out[3], &out[4]), &out[5]);
    debug_assert!(field.is_zero(&field.sub(&x, &y)));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsorCensus {
    pub q: u64,
    /// Number of distinct image points of the all-units chart domain.
    pub image_size: u64,
    /// Points of the fourfold with all six coordinates nonzero.
    pub open_locus_size: u64,
    pub surjective_onto_open_locus: bool,
    pub fiber_size: u64,
    pub fiber_size_constant: bool,
    pub expected_fiber_size: u64,
    pub pass: bool,
}

/// Exhaustive census over `F_q`: the image of the all-units domain must be
/// exactly the all-coordinates-nonzero locus of the fourfold, with every
/// fiber of size `(q-1)^5`.
pub fn torsor_census(fp: &PrimeField) -> TorsorCensus {
    let q = fp.modulus();
    let mut fibers: BTreeMap<Vec<u64>, u64> = BTreeMap::new();

    // odometer over (F_q^x)^9
    let mut z = vec![1u64; 9];
    loop {
        let image = torsor_eval(fp, &z).expect("all-units point is off the base locus");
        // normalize projectively: scale so the first coordinate is 1
        let inv = fp.inv(&image[0]).expect("row product of units is a unit");
        let key: Vec<u64> = image.iter().map(|c| fp.mul(c, &inv)).collect();
        *fibers.entry(key).or_insert(0) += 1;

        let mut k = 9;
        loop {
            if k == 0 {
                break;
            }
            z[k - 1] += 1;
            if z[k - 1] < q {
                break;
            }
            z[k - 1] = 1;
            k -= 1;
        }
        if k == 0 {
            break;
        }
    }

    // open locus: x1 = 1, x2, x3, y1, y2 units, y3 = x2 x3 / (y1 y2)
    let mut open_locus = std::collections::BTreeSet::new();
    for x2 in fp.units() {
        for x3 in fp.units() {
            for y1 in fp.units() {
                for y2 in fp.units() {
                    let num = fp.mul(&x2, &x3);
                    let den = fp.mul(&y1, &y2);
                    let y3 = fp.mul(&num, &fp.inv(&den).expect("unit"));
                    open_locus.insert(vec![1, x2, x3, y1, y2, y3]);
                }
            }
        }
    }

    let expected_fiber = (q - 1).pow(5);
    let image_size = fibers.len() as u64;
    let open_locus_size = open_locus.len() as u64;
    let surjective = fibers.keys().cloned().collect::<std::collections::BTreeSet<_>>() == open_locus;
    let fiber_size_constant = fibers.values().all(|&c| c == expected_fiber);
    let fiber_size = fibers.values().next().copied().unwrap_or(0);
    let pass = surjective && fiber_size_constant;
    TorsorCensus {
        q,
        image_size,
        open_locus_size,
        surjective_onto_open_locus: surjective,
        fiber_size,
        fiber_size_constant,
        expected_fiber_size: expected_fiber,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::rat_int;

    #[test]
    fn identity_holds_and_perturbed_map_fails() {
        assert!(verify_identity());
        // negative control: swap one monomial
        let mut images = monomial_map();
        images.swap(0, 3);
        images[0] = col_monomial(1);
        let pulled = fourfold_equation().substitute(&images).expect("arity");
        assert!(!pulled.is_zero());
    }

    #[test]
    fn all_ones_maps_to_all_ones() {
        let z = vec![rat_int(1); 9];
        let img = torsor_eval(&Rationals, &z).unwrap();
        assert!(img.iter().all(|c| c == &rat_int(1)));
    }

    #[test]
    fn identity_pattern_hits_the_base_locus() {
        // z_ij = 1 exactly on the diagonal: every row and column contains a
        // zero, so all six products vanish
        let z: Vec<_> = (0..9)
            .map(|k| if k % 4 == 0 { rat_int(1) } else { rat_int(0) })
            .collect();
        assert!(torsor_eval(&Rationals, &z).is_err());
    }

    #[test]
    fn census_at_two_and_three() {
        for q in [2u64, 3] {
            let c = torsor_census(&PrimeField::new(q));
            assert!(c.pass, "{c:?}");
            assert_eq!(c.fiber_size, (q - 1).pow(5));
            assert_eq!(c.image_size, (q - 1).pow(4));
        }
    }
}
