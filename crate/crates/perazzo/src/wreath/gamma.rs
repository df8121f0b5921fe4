//! The wreath group of order 72 acting on the 3x3 grid of planes and on the
//! six coordinate labels.
//!
//! Elements are triples `(rho, tau, eps)` with the product convention
//! `(rho, tau, eps) * (rho', tau', eps') = (rho s, tau t, eps ^ eps')` where
//! `(s, t)` is `(rho', tau')` for `eps = 0` and `(tau', rho')` for `eps = 1`.
//! The grid-action homomorphism test below makes any slip in this convention
//! fail loudly.

use std::fmt;
use std::sync::OnceLock;

use crate::error::Error;
use crate::wreath::perm::{Perm, Perm3};

pub const GAMMA_ORDER: usize = 72;

/// Coordinate labels in declared order.
pub const COORD_NAMES: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];

/// An element of the wreath group.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GammaElt {
    pub rho: Perm3,
    pub tau: Perm3,
    pub eps: bool,
}

impl GammaElt {
    pub const IDENTITY: GammaElt = GammaElt {
        rho: Perm3::IDENTITY,
        tau: Perm3::IDENTITY,
        eps: false,
    };

    /// The factor-switching involution.
    pub const IOTA: GammaElt = GammaElt {
        rho: Perm3::IDENTITY,
        tau: Perm3::IDENTITY,
        eps: true,
    };

    pub fn new(rho: Perm3, tau: Perm3, eps: bool) -> Self {
        GammaElt { rho, tau, eps }
    }

    pub fn multiply(&self, other: &GammaElt) -> GammaElt {
        let (s, t) = if self.eps {
            (other.tau, other.rho)
        } else {
            (other.rho, other.tau)
        };
        GammaElt {
            rho: self.rho.compose(&s),
            tau: self.tau.compose(&t),
            eps: self.eps ^ other.eps,
        }
    }

    pub fn inverse(&self) -> GammaElt {
        // solve g * h = 1 for h
        if self.eps {
            GammaElt {
                rho: self.tau.inverse(),
                tau: self.rho.inverse(),
                eps: true,
            }
        } else {
            GammaElt {
                rho: self.rho.inverse(),
                tau: self.tau.inverse(),
                eps: false,
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == GammaElt::IDENTITY
    }

    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut n = 1;
        while !g.is_identity() {
            g = g.multiply(self);
            n += 1;
        }
        n
    }

    /// Canonical index in `0..72`.
    pub fn index(&self) -> usize {
        (self.rho.index() * 6 + self.tau.index()) * 2 + usize::from(self.eps)
    }

    pub fn from_index(idx: usize) -> GammaElt {
        assert!(idx < GAMMA_ORDER);
        let all = Perm3::all();
        GammaElt {
            rho: all[idx / 12],
            tau: all[(idx / 2) % 6],
            eps: idx % 2 == 1,
        }
    }

    /// Grid position `(i, j)` is stored as `3 i + j`.
    pub fn grid_apply(&self, pos: usize) -> usize {
        let (mut i, mut j) = (pos / 3, pos % 3);
        if self.eps {
            std::mem::swap(&mut i, &mut j);
        }
        3 * self.rho.apply(i) + self.tau.apply(j)
    }

    /// The induced permutation of the nine grid positions.
    pub fn grid_perm(&self) -> Perm {
        Perm((0..9).map(|p| self.grid_apply(p)).collect())
    }

    /// The induced permutation of the six coordinate labels
    /// `x1, x2, x3, y1, y2, y3` (indices `0..6`).
    pub fn coord_apply(&self, label: usize) -> usize {
        let (is_y, i) = (label >= 3, label % 3);
        if self.eps {
            // x_i -> y_{tau(i)}, y_j -> x_{rho(j)}
            if is_y {
                self.rho.apply(i)
            } else {
                3 + self.tau.apply(i)
            }
        } else if is_y {
            3 + self.tau.apply(i)
        } else {
            self.rho.apply(i)
        }
    }

    pub fn coord_perm(&self) -> Perm {
        Perm((0..6).map(|l| self.coord_apply(l)).collect())
    }

    /// Format as `(rho,tau,eps)` with cycles, e.g. `((123),1,0)`.
    pub fn to_notation(&self) -> String {
        format!(
            "({},{},{})",
            self.rho.to_cycles(),
            self.tau.to_cycles(),
            u8::from(self.eps)
        )
    }

    /// Parse `((123),(12),0)` style notation.
    pub fn parse(s: &str) -> Result<GammaElt, Error> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad group element `{s}`")))?;
        // split on the two commas that sit at paren depth zero
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut cur = String::new();
        for c in inner.chars() {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c);
                }
                ')' => {
                    depth -= 1;
                    cur.push(c);
                }
                ',' if depth == 0 => {
                    parts.push(cur.trim().to_string());
                    cur = String::new();
                }
                c => cur.push(c),
            }
        }
        parts.push(cur.trim().to_string());
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected three components in `{s}`")));
        }
        let rho = Perm3::parse(&parts[0])?;
        let tau = Perm3::parse(&parts[1])?;
        let eps = match parts[2].as_str() {
            "0" => false,
            "1" => true,
            other => return Err(Error::Parse(format!("bad flip bit `{other}`"))),
        };
        Ok(GammaElt { rho, tau, eps })
    }
}

impl fmt::Display for GammaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_notation())
    }
}

/// Precomputed multiplication data for the whole group.
pub struct Gamma {
    elements: Vec<GammaElt>,
    mul: Vec<[u8; GAMMA_ORDER]>,
    inv: [u8; GAMMA_ORDER],
}

impl Gamma {
    pub fn elements(&self) -> &[GammaElt] {
        &self.elements
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj_idx(&self, g: usize, h: usize) -> usize {
        // g h g^-1
        self.mul_idx(self.mul_idx(g, h), self.inv_idx(g))
    }
}

/// The shared multiplication table.
pub fn gamma() -> &'static Gamma {
    static TABLE: OnceLock<Gamma> = OnceLock::new();
    TABLE.get_or_init(|| {
        let elements: Vec<GammaElt> = (0..GAMMA_ORDER).map(GammaElt::from_index).collect();
        let mut mul = vec![[0u8; GAMMA_ORDER]; GAMMA_ORDER];
        let mut inv = [0u8; GAMMA_ORDER];
        for (a, ga) in elements.iter().enumerate() {
            for (b, gb) in elements.iter().enumerate() {
                mul[a][b] = ga.multiply(gb).index() as u8;
            }
            inv[a] = ga.inverse().index() as u8;
        }
        Gamma { elements, mul, inv }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_of_order_72_with_identity_and_inverses() {
        let g = gamma();
        assert_eq!(g.elements().len(), 72);
        let e = GammaElt::IDENTITY.index();
        for a in 0..72 {
            assert_eq!(g.mul_idx(a, e), a);
            assert_eq!(g.mul_idx(e, a), a);
            assert_eq!(g.mul_idx(a, g.inv_idx(a)), e);
        }
    }

    #[test]
    fn associativity_spot_check_and_elementwise_exponent() {
        let g = gamma();
        for a in 0..72 {
            for b in (0..72).step_by(5) {
                for c in (0..72).step_by(7) {
                    assert_eq!(
                        g.mul_idx(g.mul_idx(a, b), c),
                        g.mul_idx(a, g.mul_idx(b, c))
                    );
                }
            }
            // g^72 = identity
            let ga = g.elements()[a];
            let mut acc = GammaElt::IDENTITY;
            for _ in 0..72 {
                acc = acc.multiply(&ga);
            }
            assert!(acc.is_identity());
        }
    }

    #[test]
    fn iota_is_an_involution_and_swaps_factors() {
        let iota = GammaElt::IOTA;
        assert!(iota.multiply(&iota).is_identity());
        for rho in Perm3::all() {
            for tau in Perm3::all() {
                let g = GammaElt::new(rho, tau, false);
                let conj = iota.multiply(&g).multiply(&iota);
                assert_eq!(conj, GammaElt::new(tau, rho, false));
            }
        }
    }

    #[test]
    fn grid_and_coord_actions_are_injective_homomorphisms() {
        let g = gamma();
        for a in 0..72 {
            let ga = g.elements()[a];
            if !ga.is_identity() {
                assert!(!ga.grid_perm().is_identity(), "grid action has kernel");
                assert!(!ga.coord_perm().is_identity(), "coord action has kernel");
            }
            for b in 0..72 {
                let gb = g.elements()[b];
                let gab = g.elements()[g.mul_idx(a, b)];
                assert_eq!(ga.grid_perm().compose(&gb.grid_perm()), gab.grid_perm());
                assert_eq!(ga.coord_perm().compose(&gb.coord_perm()), gab.coord_perm());
            }
        }
    }

    #[test]
    fn iota_transposes_grid_and_swaps_xy() {
        let iota = GammaElt::IOTA;
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(iota.grid_apply(3 * i + j), 3 * j + i);
            }
            assert_eq!(iota.coord_apply(i), 3 + i);
            assert_eq!(iota.coord_apply(3 + i), i);
        }
    }

    #[test]
    fn notation_round_trip() {
        for idx in 0..72 {
            let e = GammaElt::from_index(idx);
            assert_eq!(GammaElt::parse(&e.to_notation()).unwrap(), e);
            assert_eq!(e.index(), idx);
        }
        assert_eq!(
            GammaElt::parse("((123),1,0)").unwrap(),
            GammaElt::new(Perm3::parse("(123)").unwrap(), Perm3::IDENTITY, false)
        );
    }

    #[test]
    fn subgroup_without_flip_has_index_two() {
        let count = gamma().elements().iter().filter(|e| !e.eps).count();
        assert_eq!(count, 36);
    }
}
