use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::cartan::{CartanDatum, WeylElement};
use crate::koszul::subsets;
use crate::repring::LaurentWeightPoly;
use crate::{Error, Result};

/// Element of `Lambda^k Omega^1(R(T))` in the basis `dz_{i_1} ^ ... ^ dz_{i_k}`
/// (0-based, strictly increasing tuples).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusForm {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, LaurentWeightPoly>,
}

/// Sign of the shuffle that sorts the concatenation of two disjoint increasing tuples.
fn shuffle_sign(a: &[usize], b: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut inversions = 0usize;
    for x in a {
        for y in b {
            if x == y {
                return None;
            }
            if x > y {
                inversions += 1;
            }
        }
    }
    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
    merged.sort_unstable();
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, merged))
}

impl TorusForm {
    pub fn zero(rank: usize, degree: usize) -> Self {
        TorusForm { rank, degree, coeffs: BTreeMap::new() }
    }

    /// A degree-0 form, i.e. a function on the torus.
    pub fn function(f: LaurentWeightPoly) -> Self {
        let mut x = TorusForm::zero(f.rank(), 0);
        x.add_term(&[], f).expect("empty tuple is valid in degree 0");
        x
    }

    /// `dz_S` for a 0-based increasing tuple `S`.
    pub fn basis(rank: usize, tuple: &[usize]) -> Result<Self> {
        let mut x = TorusForm::zero(rank, tuple.len());
        x.add_term(tuple, LaurentWeightPoly::one(rank))?;
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentWeightPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, tuple: &[usize]) -> LaurentWeightPoly {
        self.coeffs.get(tuple).cloned().unwrap_or_else(|| LaurentWeightPoly::zero(self.rank))
    }

    pub fn add_term(&mut self, tuple: &[usize], f: LaurentWeightPoly) -> Result<()> {
        let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
        if tuple.len() != self.degree || !increasing || tuple.iter().any(|&i| i >= self.rank) {
            return Err(Error::InvalidTuple(tuple.to_vec()));
        }
        if f.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: f.rank() });
        }
        if f.is_zero() {
            return Ok(());
        }
        match self.coeffs.get_mut(tuple) {
            None => {
                self.coeffs.insert(tuple.to_vec(), f);
            }
            Some(old) => {
                for (mu, c) in f.terms() {
                    old.add_term(mu.clone(), c.clone());
                }
                if old.is_zero() {
                    self.coeffs.remove(tuple);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &TorusForm) -> Result<TorusForm> {
        if other.degree != self.degree {
            return Err(Error::InvalidDegree {
                degree: other.degree,
                reason: format!("expected degree {}", self.degree),
            });
        }
        let mut out = self.clone();
        for (t, f) in &other.coeffs {
            out.add_term(t, f.clone())?;
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a function.
    pub fn scale(&self, f: &LaurentWeightPoly) -> TorusForm {
        let mut out = TorusForm::zero(self.rank, self.degree);
        for (t, c) in &self.coeffs {
            let v = c * f;
            if !v.is_zero() {
                out.coeffs.insert(t.clone(), v);
            }
        }
        out
    }

    pub fn wedge(&self, other: &TorusForm) -> TorusForm {
        assert_eq!(self.rank, other.rank, "wedge of forms of different rank");
        let mut out = TorusForm::zero(self.rank, self.degree + other.degree);
        if out.degree > self.rank {
            return out;
        }
        for (s, f) in &self.coeffs {
            for (t, g) in &other.coeffs {
                if let Some((sign, merged)) = shuffle_sign(s, t) {
                    let c = (f * g).scale(&BigInt::from(sign));
                    out.add_term(&merged, c).expect("merged tuple is increasing");
                }
            }
        }
        out
    }

    /// Window coordinates: every `(tuple, weight)` pair with a non-zero coefficient.
    pub fn coordinates(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<i64>, &BigInt)> {
        self.coeffs.iter().flat_map(|(t, f)| f.terms().map(move |(mu, c)| (t, mu, c)))
    }
}

impl fmt::Display for TorusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(t, c)| {
                if t.is_empty() {
                    format!("({c})")
                } else {
                    let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
                    format!("({c})*dz{{{}}}", idx.join(","))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for TorusForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Kähler differential `d(z^mu) = sum_i mu_i z^(mu - e_i) dz_i`.
pub fn formal_differential(datum: &CartanDatum, f: &LaurentWeightPoly) -> Result<TorusForm> {
    if f.rank() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: f.rank() });
    }
    Ok(differential(f))
}

pub(crate) fn differential(f: &LaurentWeightPoly) -> TorusForm {
    let n = f.rank();
    let mut out = TorusForm::zero(n, 1);
    for (mu, c) in f.terms() {
        for i in 0..n {
            if mu[i] == 0 {
                continue;
            }
            let mut nu = mu.clone();
            nu[i] -= 1;
            out.add_term(&[i], LaurentWeightPoly::term(nu, c * mu[i])).expect("valid tuple");
        }
    }
    out
}

/// Exterior derivative `d(f dz_S) = df ^ dz_S`.
pub fn exterior_derivative(x: &TorusForm) -> TorusForm {
    let n = x.rank;
    let mut out = TorusForm::zero(n, x.degree + 1);
    for (t, f) in &x.coeffs {
        let basis = TorusForm::basis(n, t).expect("stored tuples are valid");
        out = out.add(&differential(f).wedge(&basis)).expect("degrees agree");
    }
    out
}

/// Determinant of the `k x k` integer matrix `m`, fraction-free elimination.
fn small_det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else { return 0 };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    if k == 0 {
        1
    } else {
        sign * m[k - 1][k - 1]
    }
}

/// The Weyl group action on forms induced by `z^mu -> z^(w mu)`:
/// coefficients are relocated and `dz_i` goes to `d(z^(w w_i))`.
///
/// Each `d(z^(w w_i))` is `sum_j (w w_i)_j z^(w w_i - e_j) dz_j`, so the image of
/// `dz_T` is `sum_U det(M[T, U]) z^(sum_T w w_i - e_U) dz_U` with `M[i][j] = (w w_i)_j`.
pub fn weyl_action_on_form(datum: &CartanDatum, w: &WeylElement, x: &TorusForm) -> Result<TorusForm> {
    if w.rank() != datum.rank() || x.rank != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: x.rank });
    }
    let n = x.rank;
    let images: Vec<Vec<i64>> = (0..n).map(|i| w.image_of_fundamental(i)).collect();
    let targets = subsets(n, x.degree);
    let mut out = TorusForm::zero(n, x.degree);
    for (t, f) in &x.coeffs {
        let moved = f.relocate(w);
        let weight: Vec<i64> = (0..n).map(|j| t.iter().map(|&i| images[i][j]).sum()).collect();
        for u in &targets {
            let minor = t.iter().map(|&i| u.iter().map(|&j| i128::from(images[i][j])).collect()).collect();
            let det = small_det(minor);
            if det == 0 {
                continue;
            }
            let mut shift = weight.clone();
            for &j in u {
                shift[j] -= 1;
            }
            out.add_term(u, moved.shift(&shift).scale(&BigInt::from(det)))?;
        }
    }
    Ok(out)
}

/// Every increasing tuple of every degree `0..=n`.
pub(crate) fn all_tuples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=n).flat_map(move |k| subsets(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::weyl_group;

    fn a1() -> CartanDatum {
        CartanDatum::from_type_str("A1").unwrap()
    }

    fn lp(s: &str, n: usize) -> LaurentWeightPoly {
        LaurentWeightPoly::parse(s, n).unwrap()
    }

    #[test]
    fn differential_examples() {
        let d = a1();
        assert!(formal_differential(&d, &LaurentWeightPoly::one(1)).unwrap().is_zero());
        let form = formal_differential(&d, &lp("z(1) + z(-1)", 1)).unwrap();
        assert_eq!(form.coeff(&[0]), lp("1 - z(-2)", 1));
        let form = formal_differential(&d, &lp("z(2)", 1)).unwrap();
        assert_eq!(form.coeff(&[0]), lp("2*z(1)", 1));
    }

    #[test]
    fn wedge_signs() {
        let dz1 = TorusForm::basis(3, &[0]).unwrap();
        let dz2 = TorusForm::basis(3, &[1]).unwrap();
        let dz3 = TorusForm::basis(3, &[2]).unwrap();
        assert_eq!(dz2.wedge(&dz1).coeff(&[0, 1]), lp("-1", 3));
        assert!(dz1.wedge(&dz1).is_zero());
        assert_eq!(dz3.wedge(&dz1.wedge(&dz2)).coeff(&[0, 1, 2]), lp("1", 3));
        assert_eq!(dz2.wedge(&dz3.wedge(&dz1)).coeff(&[0, 1, 2]), lp("1", 3));
    }

    #[test]
    fn weyl_action_in_rank_one() {
        let d = a1();
        let w = weyl_group(&d).unwrap();
        let dz = TorusForm::basis(1, &[0]).unwrap();
        assert_eq!(weyl_action_on_form(&d, &w[0], &dz).unwrap(), dz);
        let moved = weyl_action_on_form(&d, &w[1], &dz).unwrap();
        assert_eq!(moved.coeff(&[0]), lp("-z(-2)", 1));
        let inv = TorusForm::basis(1, &[0]).unwrap().scale(&lp("1 - z(-2)", 1));
        assert_eq!(weyl_action_on_form(&d, &w[1], &inv).unwrap(), inv);
        let zdz = TorusForm::basis(1, &[0]).unwrap().scale(&lp("z(1)", 1));
        assert_eq!(weyl_action_on_form(&d, &w[1], &zdz).unwrap().coeff(&[0]), lp("-z(-3)", 1));
    }

    /// Chain rule applied literally: relocate, then wedge the images of the `dz_i`.
    fn action_by_chain_rule(w: &WeylElement, x: &TorusForm) -> TorusForm {
        let n = x.rank();
        let images: Vec<TorusForm> =
            (0..n).map(|i| differential(&LaurentWeightPoly::term(w.image_of_fundamental(i), 1))).collect();
        let mut out = TorusForm::zero(n, x.degree());
        for (t, f) in x.terms() {
            let mut term = TorusForm::function(f.relocate(w));
            for &i in t {
                term = term.wedge(&images[i]);
            }
            out = out.add(&term).unwrap();
        }
        out
    }

    #[test]
    fn action_matches_chain_rule() {
        for s in ["A2", "B2", "G2", "A3"] {
            let d = CartanDatum::from_type_str(s).unwrap();
            let n = d.rank();
            let f = &LaurentWeightPoly::term(vec![1; n], 2)
                + &LaurentWeightPoly::term((0..n as i64).map(|i| i - 1).collect(), -3);
            for w in weyl_group(&d).unwrap() {
                for t in all_tuples(n) {
                    let x = TorusForm::basis(n, &t).unwrap().scale(&f);
                    assert_eq!(weyl_action_on_form(&d, w, &x).unwrap(), action_by_chain_rule(w, &x), "{s} {t:?}");
                }
            }
        }
    }

    #[test]
    fn minors() {
        assert_eq!(small_det(vec![]), 1);
        assert_eq!(small_det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(small_det(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), 4);
    }

    #[test]
    fn display() {
        let x = TorusForm::basis(2, &[0, 1]).unwrap().scale(&lp("z(1,0) - z(0,0)", 2));
        assert_eq!(x.to_string(), "(z(1,0) - z(0,0))*dz{1,2}");
        assert_eq!(TorusForm::zero(2, 1).to_string(), "0");
    }
}
