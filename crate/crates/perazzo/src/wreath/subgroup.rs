//! Subgroups of the order-72 wreath group as 72-bit masks, exhaustive
//! enumeration, conjugacy classes, structural labels and Sylow subgroups.
//!
//! Two independent enumeration strategies are kept side by side: breadth
//! first closure over added generators, and the join lattice generated by
//! the cyclic subgroups.  They must agree, and the conjugacy-class report
//! cross-checks the class sizes against normalizer indices.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::wreath::gamma::{gamma, GammaElt, GAMMA_ORDER};

/// A subgroup of the wreath group, as a bitmask over element indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GammaSubgroup(pub u128);

pub const FULL_GROUP: GammaSubgroup = GammaSubgroup((1u128 << GAMMA_ORDER) - 1);

impl GammaSubgroup {
    pub fn trivial() -> Self {
        GammaSubgroup(1u128 << GammaElt::IDENTITY.index())
    }

    pub fn from_elements(elts: &[GammaElt]) -> Self {
        let mut m = 0u128;
        for e in elts {
            m |= 1 << e.index();
        }
        GammaSubgroup(m)
    }

    /// Closure of a set of generators (plus the identity) under products.
    pub fn generated_by(gens: &[GammaElt]) -> Self {
        let t = gamma();
        let mut mask = 1u128 << GammaElt::IDENTITY.index();
        let mut work: Vec<usize> = vec![GammaElt::IDENTITY.index()];
        let gen_idx: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        while let Some(a) = work.pop() {
            for &g in &gen_idx {
                for b in [t.mul_idx(a, g), t.mul_idx(g, a)] {
                    if mask & (1 << b) == 0 {
                        mask |= 1 << b;
                        work.push(b);
                    }
                }
            }
        }
        GammaSubgroup(mask)
    }

    pub fn order(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, e: &GammaElt) -> bool {
        self.0 & (1 << e.index()) != 0
    }

    pub fn contains_idx(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subgroup_of(&self, other: &GammaSubgroup) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn element_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..GAMMA_ORDER).filter(move |i| self.contains_idx(*i))
    }

    pub fn elements(&self) -> Vec<GammaElt> {
        self.element_indices().map(GammaElt::from_index).collect()
    }

    /// Whether the mask is closed under product and inverse.
    pub fn is_group(&self) -> bool {
        let t = gamma();
        if !self.contains(&GammaElt::IDENTITY) {
            return false;
        }
        let idx: Vec<usize> = self.element_indices().collect();
        idx.iter().all(|&a| {
            self.contains_idx(t.inv_idx(a)) && idx.iter().all(|&b| self.contains_idx(t.mul_idx(a, b)))
        })
    }

    pub fn conjugate_by_idx(&self, g: usize) -> GammaSubgroup {
        let t = gamma();
        let mut m = 0u128;
        for h in self.element_indices() {
            m |= 1 << t.conj_idx(g, h);
        }
        GammaSubgroup(m)
    }

    /// Join `<self, other>` inside the ambient group.
    pub fn join(&self, other: &GammaSubgroup) -> GammaSubgroup {
        let mut gens = self.elements();
        gens.extend(other.elements());
        GammaSubgroup::generated_by(&gens)
    }

    /// A small generating set: greedily add elements that enlarge the
    /// closure, scanning in canonical index order.
    pub fn small_generating_set(&self) -> Vec<GammaElt> {
        let mut gens: Vec<GammaElt> = Vec::new();
        let mut closure = GammaSubgroup::trivial();
        // favor high-order elements to keep the set short
        let mut candidates = self.elements();
        candidates.sort_by_key(|e| (std::cmp::Reverse(e.order()), e.index()));
        for e in candidates {
            if closure.0 == self.0 {
                break;
            }
            if !closure.contains(&e) {
                gens.push(e);
                closure = GammaSubgroup::generated_by(&gens);
            }
        }
        debug_assert_eq!(closure.0, self.0);
        gens
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements()
            .iter()
            .any(|e| GammaSubgroup::generated_by(&[*e]).0 == self.0)
    }

    pub fn cyclic_generator(&self) -> Option<GammaElt> {
        self.elements()
            .into_iter()
            .find(|e| GammaSubgroup::generated_by(&[*e]).0 == self.0)
    }

    /// Orders of the projections to the two `S_3` factors, for elements with
    /// `eps = 0`; `None` when some element flips the factors.
    fn projection_orders(&self) -> Option<(usize, usize)> {
        let mut rhos = BTreeSet::new();
        let mut taus = BTreeSet::new();
        for e in self.elements() {
            if e.eps {
                return None;
            }
            rhos.insert(e.rho);
            taus.insert(e.tau);
        }
        Some((rhos.len(), taus.len()))
    }
}

/// Every subgroup of `g`, by breadth-first closure over added generators.
pub fn all_subgroups(g: GammaSubgroup) -> Vec<GammaSubgroup> {
    let mut found: HashSet<u128> = HashSet::new();
    let mut queue: Vec<GammaSubgroup> = vec![GammaSubgroup::trivial()];
    found.insert(GammaSubgroup::trivial().0);
    let elements = g.elements();
    let mut out = Vec::new();
    while let Some(h) = queue.pop() {
        out.push(h);
        for e in &elements {
            if h.contains(e) {
                continue;
            }
            let mut gens = h.elements();
            gens.push(*e);
            let k = GammaSubgroup::generated_by(&gens);
            if k.is_subgroup_of(&g) && found.insert(k.0) {
                queue.push(k);
            }
        }
    }
    out.sort();
    out
}

/// Every subgroup of `g`, as the join-closure of the cyclic subgroups.
/// Independent cross-check for `all_subgroups`.
pub fn all_subgroups_via_cyclic_joins(g: GammaSubgroup) -> Vec<GammaSubgroup> {
    let mut cyclic: BTreeSet<GammaSubgroup> = BTreeSet::new();
    for e in g.elements() {
        cyclic.insert(GammaSubgroup::generated_by(&[e]));
    }
    let mut all: BTreeSet<GammaSubgroup> = cyclic.clone();
    all.insert(GammaSubgroup::trivial());
    loop {
        let snapshot: Vec<GammaSubgroup> = all.iter().cloned().collect();
        let mut grew = false;
        for h in &snapshot {
            for c in &cyclic {
                let j = h.join(c);
                if j.is_subgroup_of(&g) && all.insert(j) {
                    grew = true;
                }
            }
        }
        if !grew {
            return all.into_iter().collect();
        }
    }
}

/// Structural label of a subgroup class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum SubgroupLabel {
    Trivial,
    /// Order 3, trivial projection to one wreath factor.
    A3xOne,
    /// Order 3, both projections nontrivial: a (possibly twisted)
    /// diagonal copy of `A_3`.
    DiagonalA3,
    A3xA3,
    /// A full Sylow 2-subgroup (order 8).
    Sylow2,
    /// A proper nontrivial 2-group (order 2 or 4).
    TwoGroup,
    Other,
}

impl SubgroupLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            SubgroupLabel::Trivial => "trivial",
            SubgroupLabel::A3xOne => "A3x1",
            SubgroupLabel::DiagonalA3 => "Delta",
            SubgroupLabel::A3xA3 => "A3xA3",
            SubgroupLabel::Sylow2 => "Sylow2",
            SubgroupLabel::TwoGroup => "2-group",
            SubgroupLabel::Other => "other",
        }
    }
}

impl std::fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: GammaSubgroup,
    pub order: usize,
    pub label: SubgroupLabel,
    pub class_size: usize,
    pub normalizer_order: usize,
}

/// Label a class, looking at every member so the answer does not depend on
/// the chosen representative.
fn label_class(members: &[GammaSubgroup], _ambient: GammaSubgroup) -> SubgroupLabel {
    let order = members[0].order();
    match order {
        1 => SubgroupLabel::Trivial,
        2 | 4 => SubgroupLabel::TwoGroup,
        8 => SubgroupLabel::Sylow2,
        3 => {
            // all order-3 subgroups sit inside A3 x A3; tell the factor
            // copies apart from the diagonals by their projections
            let mut saw_factor_copy = false;
            let mut saw_diagonal = false;
            for m in members {
                match m.projection_orders() {
                    Some((3, 1)) | Some((1, 3)) => saw_factor_copy = true,
                    Some((3, 3)) => saw_diagonal = true,
                    _ => return SubgroupLabel::Other,
                }
            }
            match (saw_factor_copy, saw_diagonal) {
                (true, false) => SubgroupLabel::A3xOne,
                (false, true) => SubgroupLabel::DiagonalA3,
                _ => SubgroupLabel::Other,
            }
        }
        9 => {
            let all_in_even = members.iter().all(|m| {
                m.elements()
                    .iter()
                    .all(|e| !e.eps && e.rho.is_even() && e.tau.is_even())
            });
            if all_in_even {
                SubgroupLabel::A3xA3
            } else {
                SubgroupLabel::Other
            }
        }
        _ => SubgroupLabel::Other,
    }
}

/// Conjugacy classes of subgroups of `g`, canonically ordered by
/// (order, representative mask).
pub fn subgroups_up_to_conjugacy(g: GammaSubgroup) -> Vec<SubgroupClass> {
    let subs = all_subgroups(g);
    let conjugators: Vec<usize> = g.element_indices().collect();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut classes = Vec::new();
    for h in &subs {
        if seen.contains(&h.0) {
            continue;
        }
        let mut members: BTreeSet<GammaSubgroup> = BTreeSet::new();
        for &c in &conjugators {
            members.insert(h.conjugate_by_idx(c));
        }
        for m in &members {
            seen.insert(m.0);
        }
        let members: Vec<GammaSubgroup> = members.into_iter().collect();
        let normalizer_order = conjugators
            .iter()
            .filter(|&&c| h.conjugate_by_idx(c).0 == h.0)
            .count();
        classes.push(SubgroupClass {
            representative: members[0],
            order: h.order(),
            label: label_class(&members, g),
            class_size: members.len(),
            normalizer_order,
        });
    }
    classes.sort_by_key(|c| (c.order, c.representative));
    classes
}

/// Conjugacy test with witness.
pub fn is_conjugate(
    w1: &GammaSubgroup,
    w2: &GammaSubgroup,
    ambient: &GammaSubgroup,
) -> Option<GammaElt> {
    ambient
        .element_indices()
        .find(|&c| w1.conjugate_by_idx(c).0 == w2.0)
        .map(GammaElt::from_index)
}

/// A Sylow `p`-subgroup of `g`.
pub fn sylow(g: &GammaSubgroup, p: usize) -> Option<GammaSubgroup> {
    let n = g.order();
    if n % p != 0 {
        return None;
    }
    let mut pk = 1;
    while n % (pk * p) == 0 {
        pk *= p;
    }
    all_subgroups(*g).into_iter().find(|h| h.order() == pk)
}

// ---- named subgroups ----

const THREE_CYCLE: crate::wreath::perm::Perm3 = crate::wreath::perm::Perm3([1, 2, 0]);
const ID3: crate::wreath::perm::Perm3 = crate::wreath::perm::Perm3::IDENTITY;

/// The copy of `A_3` acting on rows only.
pub fn a3_x_one() -> GammaSubgroup {
    GammaSubgroup::generated_by(&[GammaElt::new(THREE_CYCLE, ID3, false)])
}

/// The copy of `A_3` acting on columns only.
pub fn one_x_a3() -> GammaSubgroup {
    GammaSubgroup::generated_by(&[GammaElt::new(ID3, THREE_CYCLE, false)])
}

/// The diagonal copy of `A_3`.
pub fn diagonal_a3() -> GammaSubgroup {
    GammaSubgroup::generated_by(&[GammaElt::new(THREE_CYCLE, THREE_CYCLE, false)])
}

/// The unique Sylow 3-subgroup.
pub fn a3_x_a3() -> GammaSubgroup {
    a3_x_one().join(&one_x_a3())
}
