use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::text::{self, Term};
use crate::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials in `nvars` variables of total degree exactly `degree`,
    /// in ascending graded-lex order.
    pub fn of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(nvars, degree, &mut Vec::new(), &mut out);
        out
    }

    /// All monomials of total degree at most `max_degree`, ascending.
    pub fn up_to_degree(nvars: usize, max_degree: u32) -> Vec<Monomial> {
        (0..=max_degree).flat_map(|d| Monomial::of_degree(nvars, d)).collect()
    }

    fn write_with(&self, var: &str, out: &mut String) {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(var);
            out.push_str(&(j + 1).to_string());
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Z[w_1, ..., w_N]`, stored as a sparse map without zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepRingPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl RepRingPoly {
    pub fn zero(nvars: usize) -> Self {
        RepRingPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    /// The generator `w_{j+1}` (index `j` is 0-based).
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::monomial(Monomial::var(nvars, j), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let nvars = m.0.len();
        let mut p = RepRingPoly::zero(nvars);
        p.add_term(m, c.into());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return RepRingPoly::zero(self.nvars);
        }
        RepRingPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        RepRingPoly { nvars: self.nvars, terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RepRingPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism to `Z` sending `w_j` to `values[j]`.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars, "evaluation point has the wrong length");
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Substitutes `images[j]` for the generator `j`.
    pub fn substitute(&self, images: &[RepRingPoly]) -> RepRingPoly {
        assert_eq!(images.len(), self.nvars, "substitution has the wrong length");
        let target_vars = images.first().map_or(0, RepRingPoly::nvars);
        let mut powers: Vec<Vec<RepRingPoly>> = images.iter().map(|p| vec![RepRingPoly::one(p.nvars)]).collect();
        let mut out = RepRingPoly::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = RepRingPoly::constant(target_vars, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap() * &images[j];
                    powers[j].push(next);
                }
                t = &t * &powers[j][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Canonical text with generators named `{var}1`, `{var}2`, ...
    pub fn to_string_with(&self, var: &str) -> String {
        let terms = self.terms.iter().rev().map(|(m, c)| {
            let mut body = String::new();
            m.write_with(var, &mut body);
            (c, body)
        });
        text::format_terms(terms)
    }

    /// Parses the canonical text form, e.g. `3*w1^2*w2 - w2 + 5`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Self::parse_with(s, nvars, "w")
    }

    pub fn parse_with(s: &str, nvars: usize, var: &str) -> Result<Self> {
        let mut p = RepRingPoly::zero(nvars);
        for Term { coeff, factors } in text::split_terms(s)? {
            let mut exps = vec![0u32; nvars];
            let mut c = coeff;
            for f in factors {
                if let Ok(n) = f.parse::<BigInt>() {
                    c *= n;
                    continue;
                }
                let rest = f.strip_prefix(var).ok_or_else(|| Error::parse(s, format!("unexpected factor {f:?}")))?;
                let (idx, exp) = match rest.split_once('^') {
                    Some((i, e)) => {
                        (i, e.parse::<u32>().map_err(|_| Error::parse(s, format!("bad exponent in {f:?}")))?)
                    }
                    None => (rest, 1),
                };
                let idx: usize = idx.parse().map_err(|_| Error::parse(s, format!("bad generator index in {f:?}")))?;
                if idx == 0 || idx > nvars {
                    return Err(Error::parse(s, format!("generator {f:?} out of range for rank {nvars}")));
                }
                exps[idx - 1] += exp;
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }
}

impl fmt::Display for RepRingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("w"))
    }
}

impl Serialize for RepRingPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a RepRingPoly> for &'a RepRingPoly {
    type Output = RepRingPoly;

    fn add(self, rhs: &RepRingPoly) -> RepRingPoly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials of different rank");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a RepRingPoly> for &'a RepRingPoly {
    type Output = RepRingPoly;

    fn sub(self, rhs: &RepRingPoly) -> RepRingPoly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials of different rank");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a RepRingPoly> for &'a RepRingPoly {
    type Output = RepRingPoly;

    fn mul(self, rhs: &RepRingPoly) -> RepRingPoly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials of different rank");
        let mut out = RepRingPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &RepRingPoly {
    type Output = RepRingPoly;

    fn neg(self) -> RepRingPoly {
        RepRingPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $f:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $f(self, rhs: $ty) -> $ty { $tr::$f(&self, &rhs) }
        }
    )*};
}
forward_owned!(RepRingPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for RepRingPoly {
    type Output = RepRingPoly;

    fn neg(self) -> RepRingPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, j: usize) -> RepRingPoly {
        RepRingPoly::var(n, j)
    }

    #[test]
    fn canonical_text() {
        let p = RepRingPoly::parse("3*w1^2*w2 - w2 + 5", 2).unwrap();
        assert_eq!(p.to_string(), "3*w1^2*w2 - w2 + 5");
        assert_eq!(RepRingPoly::zero(2).to_string(), "0");
        assert_eq!(RepRingPoly::constant(1, -1).to_string(), "-1");
        assert_eq!((-&w(2, 0)).to_string(), "-w1");
        let q = RepRingPoly::parse("5 + w2 -w2 + w1*w1", 2).unwrap();
        assert_eq!(q.to_string(), "w1^2 + 5");
        assert!(RepRingPoly::parse("w3", 2).is_err());
        assert!(RepRingPoly::parse("w1 +", 2).is_err());
        assert!(RepRingPoly::parse("x1", 2).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let mut ms = Monomial::up_to_degree(2, 2);
        ms.sort();
        let text: Vec<String> = ms.iter().map(|m| RepRingPoly::monomial(m.clone(), 1).to_string()).collect();
        assert_eq!(text, ["1", "w2", "w1", "w2^2", "w1*w2", "w1^2"]);
        assert_eq!(Monomial::up_to_degree(3, 3).len(), 20);
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = RepRingPoly::parse("w1^2", 1).unwrap();
        let images = [RepRingPoly::parse("w1 + 2", 1).unwrap()];
        assert_eq!(p.substitute(&images).to_string(), "w1^2 + 4*w1 + 4");
        let q = RepRingPoly::parse("w1^2 - w2", 2).unwrap();
        assert_eq!(q.evaluate(&[BigInt::from(3), BigInt::from(3)]), BigInt::from(6));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = RepRingPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..=5), 0..6).prop_map(move |terms| {
            let mut p = RepRingPoly::zero(n);
            for (e, c) in terms {
                p.add_term(Monomial(e), BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly(3)) {
            let s = p.to_string();
            let q = RepRingPoly::parse(&s, 3).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), s);
        }

        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!(!(&a * &RepRingPoly::one(2)).terms().any(|(_, c)| c.is_zero()));
        }
    }
}
