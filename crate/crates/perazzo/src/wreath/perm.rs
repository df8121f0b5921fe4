//! Small permutations: elements of `S_3` for the wreath factors, and
//! variable-size permutations for vertex groups and grid actions.

use std::fmt;

use crate::error::Error;

/// A permutation of `{0,1,2}`, stored as its image tuple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    /// The six elements of `S_3` in a fixed canonical order.
    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn index(&self) -> usize {
        Perm3::all().iter().position(|p| p == self).expect("valid S3 element")
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` after `other`: `(a.compose(b))(i) = a(b(i))`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
        ])
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0u8; 3];
        for i in 0..3 {
            inv[self.0[i] as usize] = i as u8;
        }
        Perm3(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm3::IDENTITY
    }

    /// Whether the permutation is even, i.e. lies in `A_3`.
    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// Cycle notation over the letters 1..3; identity prints as `1`.
    pub fn to_cycles(&self) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut seen = [false; 3];
        let mut out = String::new();
        for start in 0..3 {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut i = start;
            loop {
                seen[i] = true;
                out.push_str(&(i + 1).to_string());
                i = self.apply(i);
                if i == start {
                    break;
                }
            }
            out.push(')');
        }
        out
    }

    /// Parse cycle notation: `1`, `()`, `(12)`, `(123)`, `(12)(3)` etc.
    pub fn parse(s: &str) -> Result<Perm3, Error> {
        let s = s.trim();
        if s == "1" || s == "()" || s.is_empty() || s == "id" {
            return Ok(Perm3::IDENTITY);
        }
        let mut img = [0u8, 1, 2];
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            if c != '(' {
                return Err(Error::Parse(format!("bad cycle notation `{s}`")));
            }
            let mut cycle = Vec::new();
            for c in chars.by_ref() {
                if c == ')' {
                    break;
                }
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad cycle notation `{s}`")))?;
                if !(1..=3).contains(&d) {
                    return Err(Error::Parse(format!("letter out of range in `{s}`")));
                }
                cycle.push(d as usize - 1);
            }
            for w in 0..cycle.len() {
                img[cycle[w]] = cycle[(w + 1) % cycle.len()] as u8;
            }
        }
        Ok(Perm3(img))
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

/// A permutation of `{0, .., n-1}` as an image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_six_elements_and_group_laws_hold() {
        let all = Perm3::all();
        for a in all {
            assert_eq!(a.compose(&a.inverse()), Perm3::IDENTITY);
            for b in all {
                let c = a.compose(&b);
                assert!(all.contains(&c));
            }
        }
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 3);
    }

    #[test]
    fn cycle_notation_round_trip() {
        for p in Perm3::all() {
            let s = p.to_cycles();
            assert_eq!(Perm3::parse(&s).unwrap(), p);
        }
        assert_eq!(Perm3::parse("(123)").unwrap().apply(0), 1);
        assert_eq!(Perm3::parse("(123)").unwrap().apply(2), 0);
        assert_eq!(Perm3::parse("(12)").unwrap().apply(2), 2);
    }

    #[test]
    fn general_perm_compose() {
        let a = Perm(vec![1, 2, 0]);
        let b = Perm(vec![0, 2, 1]);
        // (a.compose(b))(1) = a(b(1)) = a(2) = 0
        assert_eq!(a.compose(&b).apply(1), 0);
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
    }
}
