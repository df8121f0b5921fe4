//! Exactness certificates for short exact sequences of presented lattices.
//!
//! Maps are given on free covers; they must send relations into relations
//! and commute with the group action.  Exactness at the middle is verified
//! on the realized lattices: composition zero, rank bookkeeping, and
//! saturation of the image (invariant factors all one), which together pin
//! down image = kernel as sublattices, not merely up to finite index.

use num_traits::One;
use serde::Serialize;

use crate::error::Error;
use crate::exact::intmat::IntMatrix;
use crate::lattice::module::ZGModule;
use crate::wreath::subgroup::GammaSubgroup;

/// A short exact sequence candidate `0 -> A -> B -> C -> 0` with maps given
/// on the free covers.
pub struct ShortExactSequence<'a> {
    pub a: &'a ZGModule,
    pub b: &'a ZGModule,
    pub c: &'a ZGModule,
    /// cover of B x cover of A
    pub f: IntMatrix,
    /// cover of C x cover of B
    pub g: IntMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub sequence: String,
    pub equivariant: bool,
    pub relations_preserved: bool,
    pub composition_zero: bool,
    pub injective: bool,
    pub image_saturated: bool,
    pub rank_additivity: bool,
    pub surjective: bool,
    pub pass: bool,
}

impl ShortExactSequence<'_> {
    /// The realized matrix of a cover-level map.
    fn realize(map: &IntMatrix, from: &ZGModule, to: &ZGModule) -> IntMatrix {
        to.proj_matrix().mul(map).mul(from.sect_matrix())
    }

    fn relations_into_relations(map: &IntMatrix, from: &ZGModule, to: &ZGModule) -> bool {
        if from.relations().rows() == 0 {
            return true;
        }
        if to.relations().rows() == 0 {
            // the image of each relation must vanish in the realized lattice
            return (0..from.relations().rows()).all(|i| {
                let v = map.mul_vec(from.relations().row(i));
                to.project(&v).iter().all(num_traits::Zero::is_zero)
            });
        }
        let rel_t = to.relations().transpose();
        let snf = rel_t.snf();
        (0..from.relations().rows()).all(|i| {
            let v = map.mul_vec(from.relations().row(i));
            snf.solve_integer(&v).is_some()
        })
    }

    /// Verify the sequence with respect to the common acting subgroup.
    pub fn verify(&self) -> Result<ExactnessReport, Error> {
        let acting = GammaSubgroup(
            self.a.acting_subgroup().0 & self.b.acting_subgroup().0 & self.c.acting_subgroup().0,
        );
        let gens = acting.small_generating_set();

        let relations_preserved = Self::relations_into_relations(&self.f, self.a, self.b)
            && Self::relations_into_relations(&self.g, self.b, self.c);

        let rf = Self::realize(&self.f, self.a, self.b);
        let rg = Self::realize(&self.g, self.b, self.c);

        let equivariant = gens.iter().all(|e| {
            self.b.action(e).mul(&rf) == rf.mul(self.a.action(e))
                && self.c.action(e).mul(&rg) == rg.mul(self.b.action(e))
        });
        if !equivariant {
            return Err(Error::NonEquivariant);
        }

        let composition_zero = rg.mul(&rf).is_zero();
        let snf_f = rf.snf();
        let snf_g = rg.snf();
        let injective = snf_f.rank == self.a.rank();
        let image_saturated = snf_f.invariant_factors().iter().all(|d| d.is_one());
        let rank_additivity = snf_f.rank + snf_g.rank == self.b.rank();
        let surjective =
            snf_g.rank == self.c.rank() && snf_g.invariant_factors().iter().all(|d| d.is_one());

        let pass = relations_preserved
            && composition_zero
            && injective
            && image_saturated
            && rank_additivity
            && surjective;

        Ok(ExactnessReport {
            sequence: format!(
                "0 -> {} -> {} -> {} -> 0",
                self.a.name(),
                self.b.name(),
                self.c.name()
            ),
            equivariant,
            relations_preserved,
            composition_zero,
            injective,
            image_saturated,
            rank_additivity,
            surjective,
            pass,
        })
    }
}
