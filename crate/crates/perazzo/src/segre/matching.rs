//! Perfect matchings of six letters, bracket invariants of 2x6 matrices,
//! the matching-product map realizing the quotient by the group action, and
//! membership in the rank/column loci.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::field::{Field, Rationals};
use crate::exact::mpoly::MPoly;

/// A perfect matching of `{0..5}` as three sorted pairs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Matching(pub [(usize, usize); 3]);

/// The fifteen perfect matchings in canonical order.
pub fn all_matchings() -> Vec<Matching> {
    let mut out = Vec::with_capacity(15);
    // 0 pairs with a; the remaining four letters split into two pairs
    for a in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != a).collect();
        for b in 1..4 {
            let p2 = (rest[0], rest[b]);
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[b]).collect();
            let p3 = (others[0], others[1]);
            out.push(Matching([(0, a), p2, p3]));
        }
    }
    out.sort();
    assert_eq!(out.len(), 15);
    out
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize); 3] {
        &self.0
    }

    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|(a, b)| format!("{}{}", a + 1, b + 1))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// A 2x6 matrix over a field, the raw material of the quotient model.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSixMatrix<F: Field> {
    pub entries: [[F::Elt; 6]; 2],
}

impl<F: Field> TwoSixMatrix<F> {
    pub fn from_rows(top: [F::Elt; 6], bottom: [F::Elt; 6]) -> Self {
        TwoSixMatrix {
            entries: [top, bottom],
        }
    }

    pub fn column(&self, j: usize) -> [F::Elt; 2] {
        [self.entries[0][j].clone(), self.entries[1][j].clone()]
    }

    /// The 2x2 minor on columns `i < j`.
    pub fn bracket(&self, field: &F, i: usize, j: usize) -> F::Elt {
        field.sub(
            &field.mul(&self.entries[0][i], &self.entries[1][j]),
            &field.mul(&self.entries[0][j], &self.entries[1][i]),
        )
    }

    /// Product of the three brackets of a matching.
    pub fn matching_product(&self, field: &F, m: &Matching) -> F::Elt {
        let mut acc = field.one();
        for &(a, b) in m.pairs() {
            acc = field.mul(&acc, &self.bracket(field, a, b));
        }
        acc
    }

    pub fn rank(&self, field: &F) -> usize {
        let any_nonzero = self
            .entries
            .iter()
            .any(|row| row.iter().any(|c| !field.is_zero(c)));
        if !any_nonzero {
            return 0;
        }
        for i in 0..6 {
            for j in i + 1..6 {
                if !field.is_zero(&self.bracket(field, i, j)) {
                    return 2;
                }
            }
        }
        1
    }
}

/// Where a matrix sits relative to the two loci of the quotient model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LocusMembership {
    /// Rank below two.
    OutsideRankLocus,
    /// Rank two, but some column vanishes or three columns are
    /// proportional; the witness carries the offending columns.
    Intermediate { witness: Vec<usize> },
    /// Rank two, no zero column, no three proportional columns.
    Free,
}

/// Classify a matrix with a witness for the violated condition.
pub fn m_loci_membership<F: Field>(field: &F, a: &TwoSixMatrix<F>) -> LocusMembership {
    if a.rank(field) < 2 {
        return LocusMembership::OutsideRankLocus;
    }
    for j in 0..6 {
        let col = a.column(j);
        if col.iter().all(|c| field.is_zero(c)) {
            return LocusMembership::Intermediate { witness: vec![j] };
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                if field.is_zero(&a.bracket(field, i, j))
                    && field.is_zero(&a.bracket(field, i, k))
                    && field.is_zero(&a.bracket(field, j, k))
                {
                    return LocusMembership::Intermediate {
                        witness: vec![i, j, k],
                    };
                }
            }
        }
    }
    LocusMembership::Free
}

/// The five matchings used as coordinates of the quotient map, chosen as
/// the lexicographically first matchings whose products are linearly
/// independent as functions; cached, since the choice is deterministic.
pub fn basis_matchings() -> &'static [Matching] {
    static BASIS: std::sync::OnceLock<Vec<Matching>> = std::sync::OnceLock::new();
    BASIS.get_or_init(|| {
        let all = all_matchings();
        let idx = independent_matching_indices();
        idx.into_iter().map(|k| all[k]).collect()
    })
}

/// Indices of a lexicographically-first independent five among the fifteen
/// matching products, computed from their expansions in the twelve matrix
/// entries (exact linear algebra, no sampling).
fn independent_matching_indices() -> Vec<usize> {
    let polys = matching_polynomials();
    let mut basis: Vec<&MPoly<Rationals>> = Vec::new();
    let mut idx = Vec::new();
    for (k, p) in polys.iter().enumerate() {
        if idx.len() == 5 {
            break;
        }
        let mut cand: Vec<&MPoly<Rationals>> = basis.clone();
        cand.push(p);
        if polynomial_rank(&cand) == cand.len() {
            basis.push(p);
            idx.push(k);
        }
    }
    assert_eq!(idx.len(), 5, "matching products span rank five");
    idx
}

/// The fifteen matching products as polynomials in the twelve entries of a
/// symbolic 2x6 matrix (variables `a_0j`, then `a_1j`).
pub fn matching_polynomials() -> Vec<MPoly<Rationals>> {
    let var = |r: usize, c: usize| MPoly::var(Rationals, 12, 6 * r + c);
    let bracket =
        |i: usize, j: usize| var(0, i).mul(&var(1, j)).sub(&var(0, j).mul(&var(1, i)));
    all_matchings()
        .iter()
        .map(|m| {
            m.pairs()
                .iter()
                .fold(MPoly::one(Rationals, 12), |acc, &(a, b)| {
                    acc.mul(&bracket(a, b))
                })
        })
        .collect()
}

/// Rank of a family of polynomials as vectors of coefficients.
pub fn polynomial_rank(polys: &[&MPoly<Rationals>]) -> usize {
    use std::collections::BTreeMap;
    let mut monomials: BTreeMap<crate::exact::mpoly::Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = monomials.len();
            monomials.entry(m.clone()).or_insert(next);
        }
    }
    let mut rows = Vec::new();
    for p in polys {
        let mut row = vec![BigRational::zero(); monomials.len()];
        for (m, c) in p.terms() {
            row[monomials[m]] = c.clone();
        }
        rows.push(row);
    }
    crate::exact::fmat::Mat::from_rows(Rationals, rows).rank()
}

/// Image of a matrix under the quotient map: the values of the five basis
/// matchings, as a projective point.  The matrix should lie in the free
/// locus; on the boundary some coordinates may vanish jointly, which is
/// reported as `None` only when all five do.
pub fn matching_map<F: Field>(field: &F, a: &TwoSixMatrix<F>) -> Option<Vec<F::Elt>> {
    let coords: Vec<F::Elt> = basis_matchings()
        .iter()
        .map(|m| a.matching_product(field, m))
        .collect();
    if coords.iter().all(|c| field.is_zero(c)) {
        None
    } else {
        Some(coords)
    }
}

/// The full fifteen-product vector, used for exact fiber analysis.
pub fn full_matching_vector<F: Field>(field: &F, a: &TwoSixMatrix<F>) -> Vec<F::Elt> {
    all_matchings()
        .iter()
        .map(|m| a.matching_product(field, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat_int, Ring};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng) -> TwoSixMatrix<Rationals> {
        let mut mk = || {
            let mut row = [
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0),
            ];
            for c in row.iter_mut() {
                *c = rat_int(rng.gen_range(-9i64..=9));
            }
            row
        };
        TwoSixMatrix::from_rows(mk(), mk())
    }

    #[test]
    fn fifteen_matchings() {
        let all = all_matchings();
        assert_eq!(all.len(), 15);
        for m in &all {
            let mut seen = [false; 6];
            for &(a, b) in m.pairs() {
                assert!(a < b);
                seen[a] = true;
                seen[b] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn pluecker_relation_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..25 {
            let a = random_matrix(&mut rng);
            for i in 0..3 {
                for j in i + 1..4 {
                    for k in j + 1..5 {
                        for l in k + 1..6 {
                            let lhs = Rationals.sub(
                                &Rationals.add(
                                    &Rationals.mul(
                                        &a.bracket(&Rationals, i, j),
                                        &a.bracket(&Rationals, k, l),
                                    ),
                                    &Rationals.mul(
                                        &a.bracket(&Rationals, i, l),
                                        &a.bracket(&Rationals, j, k),
                                    ),
                                ),
                                &Rationals.mul(
                                    &a.bracket(&Rationals, i, k),
                                    &a.bracket(&Rationals, j, l),
                                ),
                            );
                            assert!(lhs.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn matching_products_span_rank_five() {
        let polys = matching_polynomials();
        let refs: Vec<&MPoly<Rationals>> = polys.iter().collect();
        assert_eq!(polynomial_rank(&refs), 5);
        assert_eq!(basis_matchings().len(), 5);
        // cross-check by evaluation at random rational matrices
        let mut rng = ChaCha8Rng::seed_from_u64(97);
        let mut rows = Vec::new();
        for _ in 0..25 {
            let a = random_matrix(&mut rng);
            rows.push(full_matching_vector(&Rationals, &a));
        }
        let value_matrix = crate::exact::fmat::Mat::from_rows(Rationals, rows);
        assert_eq!(value_matrix.rank(), 5);
        // kernel of the value matrix = linear relations among the products
        assert_eq!(value_matrix.kernel_basis().len(), 10);
    }

    #[test]
    fn map_is_invariant_under_the_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_matrix(&mut rng);
            if m_loci_membership(&Rationals, &a) != LocusMembership::Free {
                continue;
            }
            let base = matching_map(&Rationals, &a).unwrap();

            // left multiplication by a determinant-one matrix
            let (p, q, r) = (
                rat_int(rng.gen_range(-4i64..=4)),
                rat_int(rng.gen_range(-4i64..=4)),
                rat_int(rng.gen_range(1i64..=4)),
            );
            // [[r, p], [q, (1+pq)/r]] has determinant 1
            let s = (rat_int(1) + &p * &q) / &r;
            let g = [[r.clone(), p.clone()], [q.clone(), s]];
            let mut ga = a.clone();
            for j in 0..6 {
                let col = a.column(j);
                ga.entries[0][j] = &g[0][0] * &col[0] + &g[0][1] * &col[1];
                ga.entries[1][j] = &g[1][0] * &col[0] + &g[1][1] * &col[1];
            }
            let moved = matching_map(&Rationals, &ga).unwrap();
            assert_eq!(moved, base, "left action changed the image");

            // right scaling by units multiplies every product by the same
            // total scalar
            let mut ta = a.clone();
            let mut total = rat_int(1);
            for j in 0..6 {
                let t = rat_int(rng.gen_range(1i64..=5));
                total *= &t;
                ta.entries[0][j] = &ta.entries[0][j] * &t;
                ta.entries[1][j] = &ta.entries[1][j] * &t;
            }
            let scaled = matching_map(&Rationals, &ta).unwrap();
            for (s, b) in scaled.iter().zip(&base) {
                assert_eq!(s, &(b * &total));
            }
        }
    }

    #[test]
    fn loci_classification_with_witnesses() {
        // rank one
        let ones = || {
            [
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(1),
            ]
        };
        let a = TwoSixMatrix::<Rationals>::from_rows(ones(), ones());
        assert_eq!(
            m_loci_membership(&Rationals, &a),
            LocusMembership::OutsideRankLocus
        );
        // three equal columns
        let b = TwoSixMatrix::<Rationals>::from_rows(
            [
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(0),
                rat_int(0),
                rat_int(1),
            ],
            [
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(1),
                rat_int(1),
                rat_int(0),
            ],
        );
        assert_eq!(
            m_loci_membership(&Rationals, &b),
            LocusMembership::Intermediate {
                witness: vec![0, 1, 2]
            }
        );
        // generic
        let c = TwoSixMatrix::<Rationals>::from_rows(
            [
                rat_int(1),
                rat_int(0),
                rat_int(1),
                rat_int(2),
                rat_int(3),
                rat_int(1),
            ],
            [
                rat_int(0),
                rat_int(1),
                rat_int(1),
                rat_int(1),
                rat_int(2),
                rat_int(5),
            ],
        );
        assert_eq!(m_loci_membership(&Rationals, &c), LocusMembership::Free);
    }
}
