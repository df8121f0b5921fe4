//! Milnor numbers by truncated local algebras.
//!
//! For `f` with a critical point at the origin of affine `n`-space the
//! Milnor number is the dimension of the local ring modulo the Jacobian
//! ideal.  We compute `dim K[x]/(J + m^(t+1))` for increasing `t`: the
//! sequence is non-decreasing and, once two consecutive values agree, it has
//! reached the true dimension (Krull intersection), so equal consecutive
//! values are the stabilization certificate.  Non-stabilization by the
//! truncation cap is how a non-isolated singularity announces itself.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exact::field::Field;
use crate::exact::fmat::Mat;
use crate::exact::mpoly::{monomials_up_to_degree, Monomial, MPoly};

/// Dimension of the local algebra of the Jacobian ideal of `f` at the
/// origin, i.e. the Milnor number for an isolated critical point.
pub fn local_algebra_dim<F: Field>(f: &MPoly<F>, trunc: u32) -> Result<u32, Error> {
    let field = f.ring().clone();
    let n = f.nvars();
    let partials: Vec<MPoly<F>> = (0..n).map(|k| f.partial(k)).collect();

    let mut prev: Option<u32> = None;
    for t in 1..=trunc {
        let d = truncated_quotient_dim(&field, n, &partials, t);
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
    }
    Err(Error::Unstable { trunc })
}

fn truncated_quotient_dim<F: Field>(field: &F, n: usize, gens: &[MPoly<F>], t: u32) -> u32 {
    let basis = monomials_up_to_degree(n, t);
    let index: BTreeMap<Monomial, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows = Mat::zero(field.clone(), 0, basis.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let ord = g.terms().map(|(m, _)| m.degree()).min().unwrap_or(0);
        for m in &basis {
            if ord + m.degree() > t {
                continue;
            }
            let prod = g.mul(&MPoly::from_terms(
                field.clone(),
                n,
                vec![(m.clone(), field.one())],
            ));
            let mut row = vec![field.zero(); basis.len()];
            let mut nonzero = false;
            for (mm, c) in prod.terms() {
                if mm.degree() <= t {
                    row[index[&mm.clone()]] = c.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push_row(row);
            }
        }
    }
    (basis.len() - rows.rank()) as u32
}
