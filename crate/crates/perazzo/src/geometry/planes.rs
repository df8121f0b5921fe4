//! Exhaustive search for linear subspaces on hypersurfaces over prime
//! fields.  Subspaces are enumerated as reduced row echelon representatives
//! of the Grassmannian; candidates are filtered by point evaluation and then
//! confirmed by exact symbolic substitution.

use crate::error::Error;
use crate::exact::field::{PrimeField, Ring};
use crate::exact::fmat::Mat;
use crate::geometry::hypersurface::{Hypersurface, LinearSubspace};
use crate::geometry::singular::projective_points;

/// Number of `k`-dimensional linear subspaces of an `n`-dimensional space
/// over `F_q`, as the Gaussian binomial coefficient.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // product formula evaluated exactly in u128
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Row-echelon representatives of all rank-`r` row spaces in `F_q^n`,
/// streamed to the visitor.
pub fn for_each_rref<FN: FnMut(&Mat<PrimeField>)>(fp: PrimeField, n: usize, r: usize, mut f: FN) {
    assert!(r >= 1 && r <= n);
    let q = fp.modulus();
    // choose pivot columns, then fill the free entries by an odometer
    let mut pivots: Vec<usize> = (0..r).collect();
    loop {
        // free positions: (row i, col j) with j > pivots[i], j not a pivot
        let mut free_pos = Vec::new();
        for i in 0..r {
            for j in pivots[i] + 1..n {
                if !pivots.contains(&j) {
                    free_pos.push((i, j));
                }
            }
        }
        let mut counter = vec![0u64; free_pos.len()];
        loop {
            let mut m = Mat::zero(fp, r, n);
            for (i, &pc) in pivots.iter().enumerate() {
                *m.at_mut(i, pc) = 1;
            }
            for (s, &(i, j)) in free_pos.iter().enumerate() {
                *m.at_mut(i, j) = counter[s];
            }
            f(&m);
            let mut k = counter.len();
            loop {
                if k == 0 {
                    break;
                }
                counter[k - 1] += 1;
                if counter[k - 1] < q {
                    break;
                }
                counter[k - 1] = 0;
                k -= 1;
            }
            if k == 0 {
                break;
            }
        }
        // next pivot combination in lexicographic order
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] + 1 <= n - (r - i) {
                pivots[i] += 1;
                for t in i + 1..r {
                    pivots[t] = pivots[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All projective `k`-planes contained in the hypersurface, by exhaustive
/// RREF enumeration.  Containment is certified symbolically.
pub fn planes_in_hypersurface_fp(
    x: &Hypersurface<PrimeField>,
    k: usize,
) -> Result<Vec<LinearSubspace<PrimeField>>, Error> {
    let fp = *x.equation().ring();
    let n = x.nvars();
    let count = gaussian_binomial(n as u64, (k + 1) as u64, fp.modulus());
    if count > 10_000_000 {
        return Err(Error::BoundExceeded(format!(
            "Grassmannian enumeration of size {count} exceeds the budget"
        )));
    }
    // points of a k-plane, as parameter representatives reused per candidate
    let params = projective_points(&fp, k);
    let mut found = Vec::new();
    for_each_rref(fp, n, k + 1, |basis| {
        // quick reject: the form must vanish at every point of the plane
        for t in &params {
            let mut pt = vec![0u64; n];
            for (row, &c) in t.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, p) in pt.iter_mut().enumerate() {
                    *p = fp.add(p, &fp.mul(&c, basis.at(row, j)));
                }
            }
            if !fp.is_zero(&x.equation().eval(&pt).expect("arity")) {
                return;
            }
        }
        let sub = LinearSubspace::from_points(basis.clone()).expect("rank r by construction");
        if x.contains_subspace(&sub) {
            found.push(sub);
        }
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mpoly::MPoly;
    use crate::geometry::fourfold::fourfold_equation;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 3), 4);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        // lines in P^3 over F_2: [4 choose 2]_2
        assert_eq!(gaussian_binomial(6, 2, 2), 651);
    }

    #[test]
    fn rref_enumeration_counts_subspaces() {
        let f3 = PrimeField::new(3);
        let mut count = 0u128;
        for_each_rref(f3, 4, 2, |_| count += 1);
        assert_eq!(count, gaussian_binomial(4, 2, 3));
    }

    #[test]
    fn quadric_surface_lines_over_f3() {
        // xw - yz = 0 contains two rulings of lines: 2(q+1) = 8 over F_3
        let f3 = PrimeField::new(3);
        let vars = ["x", "y", "z", "w"];
        let q = MPoly::parse("x*w - y*z", &vars).unwrap().reduce_mod(&f3).unwrap();
        let x = Hypersurface::new(q);
        let lines = planes_in_hypersurface_fp(&x, 1).unwrap();
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn fourfold_contains_exactly_nine_three_planes_over_f3() {
        let f3 = PrimeField::new(3);
        let x = Hypersurface::new(fourfold_equation().reduce_mod(&f3).unwrap());
        let planes = planes_in_hypersurface_fp(&x, 3).unwrap();
        assert_eq!(planes.len(), 9);
        // each is a coordinate plane x_i = y_j = 0
        for plane in &planes {
            assert_eq!(plane.dim(), 3);
            let forms = plane.defining_forms();
            assert_eq!(forms.rows(), 2);
        }
    }
}
