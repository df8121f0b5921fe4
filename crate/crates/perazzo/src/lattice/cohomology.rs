//! Group cohomology of subgroups of the wreath group on presented lattices.
//!
//! `H^1(W, M)` is computed from a finite presentation of `W`: one block of
//! cocycle unknowns per generator, one linear constraint block per defining
//! relator, where the relators come from the non-tree edges of a spanning
//! tree of the Cayley graph.  Cocycles form the saturated kernel lattice of
//! the constraint matrix; coboundaries embed with integer coordinates, and
//! the quotient's invariant factors drop out of one small Smith normal form.
//!
//! For cyclic `W` the Tate description `ker N / im T` (with `T = s - 1` and
//! `N` the norm) is implemented separately and cross-validated against the
//! presentation route, and `ker T / im N` gives the Tate `H^0`, which by
//! periodicity is `H^2` for cyclic groups.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::exact::field::Rationals;
use crate::exact::fmat::Mat;
use crate::exact::intmat::IntMatrix;
use crate::lattice::module::{FinAbGroup, ZGModule};
use crate::wreath::gamma::{gamma, GammaElt};
use crate::wreath::subgroup::GammaSubgroup;

/// A letter in a relator word: generator index and whether it is inverted.
type Letter = (usize, bool);

/// Defining relators for `w` over the given generators, from the non-tree
/// edges of a breadth-first spanning tree of the Cayley graph.
pub fn presentation_relators(w: &GammaSubgroup, gens: &[GammaElt]) -> Vec<Vec<Letter>> {
    let t = gamma();
    let id = GammaElt::IDENTITY.index();
    // breadth-first tree of words, following right multiplication by gens
    let mut word: Vec<Option<Vec<Letter>>> = vec![None; crate::wreath::gamma::GAMMA_ORDER];
    word[id] = Some(Vec::new());
    let mut reached = 1usize;
    let mut queue = std::collections::VecDeque::from([id]);
    let mut relators = Vec::new();
    while let Some(v) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let u = t.mul_idx(v, g.index());
            debug_assert!(w.contains_idx(u));
            if let Some(wu) = &word[u] {
                // non-tree edge: word(v) * g * word(u)^-1 is a relator
                let mut rel = word[v].clone().unwrap();
                rel.push((k, false));
                rel.extend(wu.iter().rev().map(|&(k, inv)| (k, !inv)));
                if !rel.is_empty() {
                    relators.push(rel);
                }
            } else {
                let mut wv = word[v].clone().unwrap();
                wv.push((k, false));
                word[u] = Some(wv);
                reached += 1;
                queue.push_back(u);
            }
        }
    }
    assert_eq!(reached, w.order(), "generators do not generate");
    relators
}

/// Invariant factors of `(lattice spanned by `basis`) / (span of `gens`)`,
/// where every generator must lie in the lattice with integer coordinates.
/// The quotient must be finite.
fn lattice_quotient(basis: &[Vec<BigInt>], gens: &[Vec<BigInt>]) -> FinAbGroup {
    let r = basis.len();
    if r == 0 {
        return FinAbGroup::trivial();
    }
    let n = basis[0].len();
    let basis_mat = Mat::from_fn(Rationals, n, r, |i, j| {
        num_rational::BigRational::from_integer(basis[j][i].clone())
    });
    let mut coords = IntMatrix::zero(r, gens.len());
    for (c, g) in gens.iter().enumerate() {
        let rhs: Vec<num_rational::BigRational> = g
            .iter()
            .map(|x| num_rational::BigRational::from_integer(x.clone()))
            .collect();
        let x = basis_mat
            .solve(&rhs)
            .expect("subgroup generator outside the lattice span");
        for (i, xi) in x.into_iter().enumerate() {
            assert!(
                xi.is_integer(),
                "subgroup generator has non-integer coordinates in a saturated basis"
            );
            *coords.at_mut(i, c) = xi.to_integer();
        }
    }
    if gens.is_empty() || coords.is_zero() {
        assert_eq!(r, 0, "infinite quotient: no relations on a positive-rank lattice");
        return FinAbGroup::trivial();
    }
    let snf = coords.snf();
    assert_eq!(
        snf.rank, r,
        "quotient has free part; first cohomology of a finite group must be finite"
    );
    FinAbGroup::from_invariant_factors(snf.invariant_factors())
}

/// `H^1(W, M)` via a finite presentation of `W`.
pub fn h1(w: &GammaSubgroup, m: &ZGModule) -> Result<FinAbGroup, Error> {
    if !m.has_action_of(w) {
        return Err(Error::Usage(format!(
            "action of the given subgroup is undefined on {}",
            m.name()
        )));
    }
    let gens = w.small_generating_set();
    h1_with_generators(w, &gens, m)
}

/// `H^1` with a caller-chosen generating set (used to test independence of
/// the generating set).
pub fn h1_with_generators(
    w: &GammaSubgroup,
    gens: &[GammaElt],
    m: &ZGModule,
) -> Result<FinAbGroup, Error> {
    if !m.has_action_of(w) {
        return Err(Error::Usage(format!(
            "action of the given subgroup is undefined on {}",
            m.name()
        )));
    }
    let rank = m.rank();
    if gens.is_empty() {
        return Ok(FinAbGroup::trivial());
    }
    let relators = presentation_relators(w, gens);
    let t = gamma();
    let unknowns = gens.len() * rank;

    // constraint block per relator: sum over letters of
    //   +action(prefix before letter) * c_gen   for a positive letter,
    //   -action(prefix through letter) * c_gen  for an inverse letter.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for rel in &relators {
        let mut block = vec![vec![BigInt::zero(); unknowns]; rank];
        let mut prefix = GammaElt::IDENTITY.index();
        for &(k, inv) in rel {
            let (act_idx, sign) = if inv {
                let next = t.mul_idx(prefix, t.inv_idx(gens[k].index()));
                prefix = next;
                (next, -1i64)
            } else {
                let here = prefix;
                prefix = t.mul_idx(prefix, gens[k].index());
                (here, 1)
            };
            let a = m.action(&GammaElt::from_index(act_idx));
            for r in 0..rank {
                for c in 0..rank {
                    let v = a.at(r, c) * BigInt::from(sign);
                    block[r][k * rank + c] += v;
                }
            }
        }
        debug_assert_eq!(prefix, GammaElt::IDENTITY.index());
        rows.extend(block);
    }

    let cocycles = if rows.is_empty() {
        // free group on the generators: every choice of values is a cocycle
        (0..unknowns)
            .map(|i| {
                let mut v = vec![BigInt::zero(); unknowns];
                v[i] = BigInt::from(1);
                v
            })
            .collect()
    } else {
        IntMatrix::from_rows_big(rows).kernel_lattice_fast()
    };

    // coboundaries: m0 -> (g·m0 - m0) per generator
    let cobs: Vec<Vec<BigInt>> = (0..rank)
        .map(|basis_i| {
            let mut e = vec![BigInt::zero(); rank];
            e[basis_i] = BigInt::from(1);
            let mut v = Vec::with_capacity(unknowns);
            for g in gens {
                let moved = m.action(g).mul_vec(&e);
                for (r, x) in moved.into_iter().enumerate() {
                    v.push(x - &e[r]);
                }
            }
            v
        })
        .collect();

    Ok(lattice_quotient(&cocycles, &cobs))
}

/// `H^1` of a cyclic group by the Tate description `ker N / im T`.
pub fn h1_cyclic(w: &GammaSubgroup, m: &ZGModule) -> Result<FinAbGroup, Error> {
    tate_cyclic(w, m, false)
}

/// `H^2` of a cyclic group, which by periodicity is the Tate `H^0`,
/// `ker T / im N`.
pub fn h2_cyclic(w: &GammaSubgroup, m: &ZGModule) -> Result<FinAbGroup, Error> {
    tate_cyclic(w, m, true)
}

fn tate_cyclic(w: &GammaSubgroup, m: &ZGModule, swap: bool) -> Result<FinAbGroup, Error> {
    if !m.has_action_of(w) {
        return Err(Error::Usage(format!(
            "action of the given subgroup is undefined on {}",
            m.name()
        )));
    }
    let Some(s) = w.cyclic_generator() else {
        return Err(Error::NotCyclic);
    };
    let rank = m.rank();
    let a = m.action(&s).clone();
    let k = s.order();
    let mut norm = IntMatrix::zero(rank, rank);
    let mut power = IntMatrix::identity(rank);
    for step in 0..k {
        for i in 0..rank {
            for j in 0..rank {
                let v = norm.at(i, j) + power.at(i, j);
                *norm.at_mut(i, j) = v;
            }
        }
        if step + 1 < k {
            power = a.mul(&power);
        }
    }
    let mut t_mat = a.clone();
    for i in 0..rank {
        let v = t_mat.at(i, i) - BigInt::from(1);
        *t_mat.at_mut(i, i) = v;
    }
    let (ker_of, im_of) = if swap { (t_mat.clone(), norm.clone()) } else { (norm.clone(), t_mat.clone()) };
    let kernel = ker_of.kernel_lattice_fast();
    let image: Vec<Vec<BigInt>> = (0..rank).map(|j| im_of.col(j)).collect();
    Ok(lattice_quotient(&kernel, &image))
}

/// The fixed sublattice `M^W`, as a saturated basis in realized coordinates.
pub struct FixedLattice {
    pub basis: Vec<Vec<BigInt>>,
}

impl FixedLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if self.basis.is_empty() {
            return v.iter().all(|x| x.is_zero());
        }
        let m = IntMatrix::from_rows_big(self.basis.clone()).transpose();
        m.solve_integer(v).is_some()
    }
}

/// `H^0(W, M)`: the full fixed sublattice.
pub fn h0(w: &GammaSubgroup, m: &ZGModule) -> Result<FixedLattice, Error> {
    if !m.has_action_of(w) {
        return Err(Error::Usage(format!(
            "action of the given subgroup is undefined on {}",
            m.name()
        )));
    }
    let rank = m.rank();
    let gens = w.small_generating_set();
    if gens.is_empty() {
        return Ok(FixedLattice {
            basis: (0..rank)
                .map(|i| {
                    let mut v = vec![BigInt::zero(); rank];
                    v[i] = BigInt::from(1);
                    v
                })
                .collect(),
        });
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in &gens {
        let a = m.action(g);
        for i in 0..rank {
            let mut row: Vec<BigInt> = a.row(i).to_vec();
            row[i] -= 1;
            rows.push(row);
        }
    }
    let basis = IntMatrix::from_rows_big(rows).kernel_lattice_fast();
    Ok(FixedLattice { basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::*;
    use crate::wreath::subgroup::{a3_x_one, diagonal_a3, one_x_a3, GammaSubgroup};

    #[test]
    fn h1_of_row_rotation_on_p_is_z3() {
        let p = module_p();
        assert_eq!(h1(&a3_x_one(), &p).unwrap(), FinAbGroup::cyclic(3));
        assert_eq!(h1(&one_x_a3(), &p).unwrap(), FinAbGroup::cyclic(3));
    }

    #[test]
    fn h1_of_diagonal_on_p_is_trivial() {
        let p = module_p();
        assert!(h1(&diagonal_a3(), &p).unwrap().is_trivial());
    }

    #[test]
    fn h1_of_trivial_group_vanishes() {
        for name in STANDARD_MODULE_NAMES {
            let m = standard_module(name).unwrap();
            assert!(h1(&GammaSubgroup::trivial(), &m).unwrap().is_trivial());
        }
    }

    #[test]
    fn cyclic_route_agrees_with_presentation_route_on_p() {
        let p = module_p();
        for e in crate::wreath::gamma::gamma().elements() {
            let w = GammaSubgroup::generated_by(&[*e]);
            assert_eq!(
                h1(&w, &p).unwrap(),
                h1_cyclic(&w, &p).unwrap(),
                "mismatch at generator {e}"
            );
        }
    }

    #[test]
    fn h1_independent_of_generating_set() {
        let p = module_p();
        let w = crate::wreath::subgroup::a3_x_a3();
        let default = h1(&w, &p).unwrap();
        // a redundant generating set
        let gens: Vec<_> = w.elements().into_iter().filter(|e| !e.is_identity()).collect();
        assert_eq!(h1_with_generators(&w, &gens, &p).unwrap(), default);
        assert_eq!(default, FinAbGroup::cyclic(3));
    }

    #[test]
    fn h0_of_full_group_on_f_is_the_plane_sum() {
        let f = module_f();
        let fixed = h0(&crate::wreath::subgroup::FULL_GROUP, &f).unwrap();
        assert_eq!(fixed.rank(), 1);
        // the all-ones cover vector is fixed and must lie in the lattice
        let ones = vec![BigInt::from(1); 9];
        assert!(fixed.contains(&f.project(&ones)));
    }

    #[test]
    fn h0_of_full_group_on_p_is_the_hyperplane_class() {
        let p = module_p();
        let fixed = h0(&crate::wreath::subgroup::FULL_GROUP, &p).unwrap();
        assert_eq!(fixed.rank(), 1);
        let h = DivisorExpr::hyperplane().class_in(&p);
        assert!(fixed.contains(&h));
        // and the basis vector is the hyperplane class up to sign
        assert!(fixed.basis[0] == h || fixed.basis[0].iter().zip(&h).all(|(a, b)| *a == -b));
    }

    #[test]
    fn h0_of_trivial_group_is_everything() {
        let p = module_p();
        let fixed = h0(&GammaSubgroup::trivial(), &p).unwrap();
        assert_eq!(fixed.rank(), p.rank());
    }

    #[test]
    fn permutation_module_vanishing_for_cyclic_groups() {
        // brute-force Shapiro-style check: cyclic subgroups on the
        // permutation modules F and E
        let f = module_f();
        let e = module_e();
        for elt in crate::wreath::gamma::gamma().elements() {
            let w = GammaSubgroup::generated_by(&[*elt]);
            assert!(h1_cyclic(&w, &f).unwrap().is_trivial());
            assert!(h1_cyclic(&w, &e).unwrap().is_trivial());
        }
    }

    #[test]
    fn not_cyclic_is_reported() {
        let p = module_p();
        assert!(matches!(
            h1_cyclic(&crate::wreath::subgroup::a3_x_a3(), &p),
            Err(Error::NotCyclic)
        ));
    }
}
