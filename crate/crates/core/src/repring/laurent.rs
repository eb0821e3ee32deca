use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::text::{self, Term};
use crate::cartan::{Weight, WeylElement};
use crate::{Error, Result};

/// Element of `Z[P]`: a finite integer combination of weights, i.e. a Laurent
/// polynomial in the torus variables `z_i = e^{w_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentWeightPoly {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentWeightPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentWeightPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::term(vec![0; rank], c)
    }

    /// The single term `c * z^mu`.
    pub fn term(mu: Vec<i64>, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentWeightPoly::zero(mu.len());
        p.add_term(mu, c.into());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the exponent vector.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &[i64]) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn multiplicity(&self, mu: &Weight) -> BigInt {
        self.coeff(mu.coords())
    }

    pub fn add_term(&mut self, mu: Vec<i64>, c: BigInt) {
        debug_assert_eq!(mu.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentWeightPoly::zero(self.rank);
        }
        LaurentWeightPoly { rank: self.rank, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplies by the monomial `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentWeightPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients: the augmentation `z_i -> 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Relocates every term `z^mu` to `z^{w(mu)}`.
    pub fn relocate(&self, w: &WeylElement) -> Self {
        assert_eq!(w.rank(), self.rank, "Weyl element of the wrong rank");
        let mut out = LaurentWeightPoly::zero(self.rank);
        for (mu, c) in &self.terms {
            out.add_term(w.apply(mu), c.clone());
        }
        out
    }

    /// Largest absolute value of any exponent, 0 for the zero polynomial.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().flat_map(|m| m.iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentWeightPoly::one(self.rank);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the canonical form, e.g. `z(1,0) - 2*z(-1,1)`. Bare integers are
    /// accepted as constants.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let mut p = LaurentWeightPoly::zero(rank);
        for Term { coeff, factors } in text::split_terms(s)? {
            let mut c = coeff;
            let mut mu = vec![0i64; rank];
            for f in factors {
                if let Ok(n) = f.parse::<BigInt>() {
                    c *= n;
                    continue;
                }
                let inner = f
                    .strip_prefix("z(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::parse(s, format!("unexpected factor {f:?}")))?;
                let coords: Vec<i64> = inner
                    .split(',')
                    .map(|x| x.parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::parse(s, format!("bad weight in {f:?}")))?;
                if coords.len() != rank {
                    return Err(Error::parse(s, format!("weight {f:?} does not have rank {rank}")));
                }
                for (a, b) in mu.iter_mut().zip(coords) {
                    *a += b;
                }
            }
            p.add_term(mu, c);
        }
        Ok(p)
    }
}

fn weight_body(mu: &[i64]) -> String {
    let coords: Vec<String> = mu.iter().map(i64::to_string).collect();
    format!("z({})", coords.join(","))
}

impl fmt::Display for LaurentWeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(m, c)| (c, weight_body(m)));
        f.write_str(&text::format_terms(terms))
    }
}

impl Serialize for LaurentWeightPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a LaurentWeightPoly> for &'a LaurentWeightPoly {
    type Output = LaurentWeightPoly;

    fn add(self, rhs: &LaurentWeightPoly) -> LaurentWeightPoly {
        assert_eq!(self.rank, rhs.rank, "adding Laurent polynomials of different rank");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentWeightPoly> for &'a LaurentWeightPoly {
    type Output = LaurentWeightPoly;

    fn sub(self, rhs: &LaurentWeightPoly) -> LaurentWeightPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentWeightPoly> for &'a LaurentWeightPoly {
    type Output = LaurentWeightPoly;

    fn mul(self, rhs: &LaurentWeightPoly) -> LaurentWeightPoly {
        assert_eq!(self.rank, rhs.rank, "multiplying Laurent polynomials of different rank");
        let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::with_capacity(self.terms.len().max(rhs.terms.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let key: Vec<i64> = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                *acc.entry(key).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentWeightPoly { rank: self.rank, terms }
    }
}

impl Neg for &LaurentWeightPoly {
    type Output = LaurentWeightPoly;

    fn neg(self) -> LaurentWeightPoly {
        LaurentWeightPoly { rank: self.rank, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}
