//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Terms are kept in a `BTreeMap` keyed by graded-lexicographic monomial
//! order (declared variable order breaks degree ties), so iteration order is
//! deterministic everywhere it leaks into output.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::field::{PrimeField, Rationals, Ring};

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree exactly `d`,
/// in increasing monomial order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, d);
    fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, rem: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=rem {
            cur[pos] = e;
            fill(out, cur, pos + 1, rem - e);
        }
        cur[pos] = 0;
    }
    out.sort();
    out
}

/// All monomials of total degree at most `d`.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(monomials_of_degree(nvars, k));
    }
    out
}

/// Sparse multivariate polynomial.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Monomial, R::Elt>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        MPoly {
            ring,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elt) -> Self {
        let mut p = MPoly::zero(ring, nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let c = ring.one();
        MPoly::constant(ring, nvars, c)
    }

    /// The variable `x_k` as a polynomial.
    pub fn var(ring: R, nvars: usize, k: usize) -> Self {
        assert!(k < nvars);
        let mut p = MPoly::zero(ring, nvars);
        let c = p.ring.one();
        p.add_term(Monomial::var(nvars, k), c);
        p
    }

    pub fn from_terms(ring: R, nvars: usize, terms: Vec<(Monomial, R::Elt)>) -> Self {
        let mut p = MPoly::zero(ring, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elt {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &R::Elt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: R::Elt) {
        assert_eq!(m.0.len(), self.nvars, "monomial arity mismatch");
        if self.ring.is_zero(&c) {
            return;
        }
        let ring = self.ring.clone();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ring.add(e.get(), &c);
                if ring.is_zero(&s) {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &R::Elt) -> Self {
        if self.ring.is_zero(s) {
            return MPoly::zero(self.ring.clone(), self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.mul(c, s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.ring.clone(), self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MPoly::one(self.ring.clone(), self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at a point.
    pub fn eval(&self, point: &[R::Elt]) -> Result<R::Elt, Error> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = self.ring.mul(&t, &point[v]);
                }
            }
            acc = self.ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Partial derivative with respect to `x_k`.
    pub fn partial(&self, k: usize) -> Self {
        assert!(k < self.nvars);
        let mut out = MPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[k] -= 1;
            let fac = self.ring.from_i64(e as i64);
            out.add_term(m2, self.ring.mul(c, &fac));
        }
        out
    }

    /// Substitute a polynomial for every variable.  The images must all live
    /// in a common polynomial ring; substitution is a ring homomorphism.
    pub fn substitute(&self, images: &[MPoly<R>]) -> Result<MPoly<R>, Error> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target_vars = images.first().map_or(0, |p| p.nvars);
        if images.iter().any(|p| p.nvars != target_vars) {
            return Err(Error::ArityMismatch {
                expected: target_vars,
                got: images.iter().map(|p| p.nvars).max().unwrap_or(0),
            });
        }
        let mut out = MPoly::zero(self.ring.clone(), target_vars);
        // memoized powers per variable
        let mut powers: Vec<Vec<MPoly<R>>> = images
            .iter()
            .map(|p| vec![MPoly::one(self.ring.clone(), target_vars), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(self.ring.clone(), target_vars, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                t = t.mul(&powers[v][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Substitute a polynomial for one variable, leaving the others alone.
    pub fn substitute_var(&self, k: usize, image: &MPoly<R>) -> Result<MPoly<R>, Error> {
        let mut images = Vec::with_capacity(self.nvars);
        for v in 0..self.nvars {
            if v == k {
                images.push(image.clone());
            } else {
                images.push(MPoly::var(self.ring.clone(), image.nvars, v));
            }
        }
        self.substitute(&images)
    }

    /// The degree-`d` homogeneous part.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MPoly {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    /// Apply a variable permutation: variable `k` of `self` becomes variable
    /// `perm[k]` of the result.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MPoly::zero(self.ring.clone(), self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.nvars];
            for (v, &x) in m.0.iter().enumerate() {
                e[perm[v]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl MPoly<Rationals> {
    /// Clear denominators and content, and normalize the sign of the leading
    /// coefficient to be positive.  Result spans the same line over `Q`.
    pub fn primitive_integer(&self) -> MPoly<Rationals> {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let scale = BigRational::new(den_lcm, num_gcd);
        let mut out = self.scale(&scale);
        if out
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            out = out.neg();
        }
        out
    }

    /// Reduce mod `p`; the coefficients must be `p`-integral.
    pub fn reduce_mod(&self, fp: &PrimeField) -> Option<MPoly<PrimeField>> {
        let mut out = MPoly::zero(*fp, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), fp.reduce_rational(c)?);
        }
        Some(out)
    }
}

// ---- text format ----

fn format_coeff_q(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl MPoly<Rationals> {
    /// Canonical text form, leading term first: `2*x1^2*x3 - 1/3*x2`.
    pub fn to_text(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        vars[v].to_string()
                    } else {
                        format!("{}^{}", vars[v], e)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_coeff_q(&abs));
            } else if abs.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format_coeff_q(&abs));
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Parse the text format against a declared variable list.
    pub fn parse(text: &str, vars: &[&str]) -> Result<MPoly<Rationals>, Error> {
        let nvars = vars.len();
        let mut out = MPoly::zero(Rationals, nvars);
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(out);
        }
        // split into signed summands
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign_neg = false;
        let mut first = true;
        let mut prev_op = true; // at a position where a sign is a prefix
        for ch in text.chars() {
            match ch {
                '+' | '-' if prev_op || !cur.trim().is_empty() => {
                    if prev_op && cur.trim().is_empty() {
                        if ch == '-' {
                            sign_neg = !sign_neg;
                        }
                        continue;
                    }
                    chunks.push((sign_neg, cur.trim().to_string()));
                    cur = String::new();
                    sign_neg = ch == '-';
                    first = false;
                    prev_op = true;
                }
                c if c.is_whitespace() => {
                    if !cur.is_empty() {
                        cur.push(' ');
                    }
                }
                c => {
                    cur.push(c);
                    prev_op = false;
                }
            }
        }
        let _ = first;
        if !cur.trim().is_empty() {
            chunks.push((sign_neg, cur.trim().to_string()));
        }
        for (neg, chunk) in chunks {
            let (m, c) = parse_term(&chunk, vars, nvars)?;
            let c = if neg { -c } else { c };
            out.add_term(m, c);
        }
        Ok(out)
    }
}

fn parse_term(chunk: &str, vars: &[&str], nvars: usize) -> Result<(Monomial, BigRational), Error> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; nvars];
    for factor in chunk.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{chunk}`")));
        }
        if f.chars().next().unwrap().is_ascii_digit() {
            // numeric factor, possibly a fraction
            let r: BigRational = if let Some((n, d)) = f.split_once('/') {
                let n: BigInt = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number `{f}`")))?;
                let d: BigInt = d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number `{f}`")))?;
                BigRational::new(n, d)
            } else {
                let n: BigInt = f
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number `{f}`")))?;
                BigRational::from_integer(n)
            };
            coeff *= r;
        } else {
            let (name, exp) = match f.split_once('^') {
                Some((name, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
                    (name.trim(), e)
                }
                None => (f, 1),
            };
            let v = vars
                .iter()
                .position(|w| *w == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[v] += exp;
        }
    }
    Ok((Monomial(exps), coeff))
}

// ---- JSON format ----

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    terms: Vec<JsonTerm>,
}

impl MPoly<Rationals> {
    pub fn to_json(&self, vars: &[&str]) -> serde_json::Value {
        assert_eq!(vars.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                exp: m.0.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        serde_json::to_value(JsonPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            modulus: None,
            terms,
        })
        .expect("poly serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<(MPoly<Rationals>, Vec<String>), Error> {
        let jp: JsonPoly =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if jp.modulus.is_some() {
            return Err(Error::Parse("expected rational coefficients".into()));
        }
        let nvars = jp.vars.len();
        let mut p = MPoly::zero(Rationals, nvars);
        for t in jp.terms {
            if t.exp.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: t.exp.len(),
                });
            }
            let num: BigInt = t.num.parse().map_err(|_| Error::Parse("bad num".into()))?;
            let den: BigInt = t.den.parse().map_err(|_| Error::Parse("bad den".into()))?;
            p.add_term(Monomial(t.exp), BigRational::new(num, den));
        }
        Ok((p, jp.vars))
    }
}

impl MPoly<PrimeField> {
    pub fn to_json(&self, vars: &[&str]) -> serde_json::Value {
        assert_eq!(vars.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                exp: m.0.clone(),
                num: c.to_string(),
                den: "1".to_string(),
            })
            .collect();
        serde_json::to_value(JsonPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            modulus: Some(self.ring.modulus()),
            terms,
        })
        .expect("poly serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat, rat_int};

    fn xyz() -> [MPoly<Rationals>; 3] {
        [
            MPoly::var(Rationals, 3, 0),
            MPoly::var(Rationals, 3, 1),
            MPoly::var(Rationals, 3, 2),
        ]
    }

    #[test]
    fn grlex_order() {
        // x^2 > xy > y^2 > x > y > 1 with vars (x, y)
        let m = |a, b| Monomial(vec![a, b]);
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 1) > m(0, 2));
        assert!(m(0, 2) > m(1, 0));
        assert!(m(1, 0) > m(0, 1));
        assert!(m(0, 1) > m(0, 0));
    }

    #[test]
    fn partial_derivative_of_product() {
        let [x, y, z] = xyz();
        let f = x.mul(&y).mul(&z);
        assert_eq!(f.partial(1), x.mul(&z));
    }

    #[test]
    fn substitution_is_ring_hom() {
        let [x, y, z] = xyz();
        let f = x.mul(&y).add(&z.pow(2));
        let g = x.sub(&y).add(&MPoly::one(Rationals, 3));
        let images = [y.add(&z), x.mul(&x), z.sub(&x)];
        let lhs = f.mul(&g).substitute(&images).unwrap();
        let rhs = f
            .substitute(&images)
            .unwrap()
            .mul(&g.substitute(&images).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_segre_form_at_balanced_point() {
        // sum of six cubes at (1,1,1,-1,-1,-1)
        let mut f = MPoly::zero(Rationals, 6);
        for k in 0..6 {
            f = f.add(&MPoly::var(Rationals, 6, k).pow(3));
        }
        let pt: Vec<_> = [1, 1, 1, -1, -1, -1].iter().map(|&n| rat_int(n)).collect();
        assert!(f.eval(&pt).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let vars = ["x1", "x2", "y1"];
        let samples = [
            "0",
            "x1",
            "-x1 + x2",
            "2*x1^2*y1 - 1/3*x2 + 7",
            "x1*x2*y1 - 1",
        ];
        for s in samples {
            let p = MPoly::parse(s, &vars).unwrap();
            let emitted = p.to_text(&vars);
            let q = MPoly::parse(&emitted, &vars).unwrap();
            assert_eq!(p, q);
            assert_eq!(emitted, q.to_text(&vars), "canonical form unstable: {s}");
        }
        // canonical writer output parses back to itself bit-for-bit
        let p = MPoly::parse("1*x1^1 + 0*x2 + 4/2", &vars).unwrap();
        assert_eq!(p.to_text(&vars), "x1 + 2");
    }

    #[test]
    fn json_round_trip() {
        let vars = ["x1", "x2", "y1"];
        let p = MPoly::parse("3/4*x1^2 - y1 + 5", &vars).unwrap();
        let v = p.to_json(&vars);
        let (q, names) = MPoly::from_json(&v).unwrap();
        assert_eq!(p, q);
        assert_eq!(names, vec!["x1", "x2", "y1"]);
        assert_eq!(v, q.to_json(&vars));
    }

    #[test]
    fn primitive_integer_normalization() {
        let vars = ["x", "y"];
        let p = MPoly::parse("-2/3*x - 4*y", &vars).unwrap();
        let q = p.primitive_integer();
        assert_eq!(q.to_text(&vars), "x + 6*y");
    }

    #[test]
    fn homogeneous_parts() {
        let vars = ["x", "y"];
        let p = MPoly::parse("x^2 + x*y + y + 3", &vars).unwrap();
        assert!(!p.is_homogeneous());
        assert_eq!(p.homogeneous_part(2).to_text(&vars), "x^2 + x*y");
        assert_eq!(p.homogeneous_part(1).to_text(&vars), "y");
        assert!(p.homogeneous_part(3).is_zero());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn eval_arity_checked() {
        let [x, _, _] = xyz();
        assert!(matches!(
            x.eval(&[rat(1, 1)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn mod_p_reduction() {
        let vars = ["x", "y"];
        let p = MPoly::parse("5*x + 3*y + 10", &vars).unwrap();
        let f5 = PrimeField::new(5);
        let q = p.reduce_mod(&f5).unwrap();
        assert_eq!(q.num_terms(), 1);
        assert_eq!(q.coeff(&Monomial(vec![0, 1])), 3);
    }
}
