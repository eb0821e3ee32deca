//! The Koszul complex of `R(K)` on the sequence `w_j - d_j`.
//!
//! In degree `k` the complex is the free `R(K)`-module with basis
//! `e_{i_1} ^ ... ^ e_{i_k}` (`i_1 < ... < i_k`) and
//!
//! ```text
//! d(e_{i_1} ^ ... ^ e_{i_k}) = sum_j (-1)^(j-1) (w_{i_j} - d_{i_j}) e_{i_1} ^ .. (omit i_j) .. ^ e_{i_k}
//! ```
//!
//! It is augmented by `eps: R(K) -> Z`, `eps(w_j) = d_j`. After the change of
//! variables `y_j = w_j - d_j` the differential multiplies by the `y_j`, the
//! augmentation becomes evaluation at `y = 0`, and the augmented complex is
//! graded by `|a| + k` on `y^a e_S`. Exactness is certified on each graded
//! piece, and an explicit `Z`-linear contracting homotopy is provided.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cartan::CartanDatum;
use crate::homology::{homology_at, FgAbGroup, IntMatrix};
use crate::repring::{Monomial, RepRingPoly};
use crate::{Error, Result};

/// Deliberate corruptions of the differential, used to exercise failure paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Uses `w_1 + d_1` in place of `w_1 - d_1`.
    DSign,
}

/// Which generators polynomial coefficients are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinates {
    /// The fundamental classes `w_j`.
    Rep,
    /// The shifted generators `y_j = w_j - d_j`.
    Y,
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-element subsets of `0..n` as increasing tuples, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Formats a 0-based index tuple as the 1-based wedge label `e{1,2}`.
pub fn wedge_label(tuple: &[usize]) -> String {
    let idx: Vec<String> = tuple.iter().map(|i| (i + 1).to_string()).collect();
    format!("e{{{}}}", idx.join(","))
}

/// An element of `Lambda^k Omega`: polynomial coefficients on wedge basis elements.
/// Index tuples are 0-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulElement {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, RepRingPoly>,
}

impl KoszulElement {
    pub fn zero(rank: usize, degree: usize) -> Self {
        KoszulElement { rank, degree, coeffs: BTreeMap::new() }
    }

    /// Degree-0 element given by a polynomial.
    pub fn from_poly(p: RepRingPoly) -> Self {
        let mut x = KoszulElement::zero(p.nvars(), 0);
        x.add_term(&[], p).expect("empty tuple is valid in degree 0");
        x
    }

    /// The basis element `e_S`.
    pub fn basis(rank: usize, tuple: &[usize]) -> Result<Self> {
        let mut x = KoszulElement::zero(rank, tuple.len());
        x.add_term(tuple, RepRingPoly::one(rank))?;
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RepRingPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, tuple: &[usize]) -> RepRingPoly {
        self.coeffs.get(tuple).cloned().unwrap_or_else(|| RepRingPoly::zero(self.rank))
    }

    /// The underlying polynomial of a degree-0 element.
    pub fn as_poly(&self) -> Result<RepRingPoly> {
        if self.degree != 0 {
            return Err(Error::InvalidDegree { degree: self.degree, reason: "expected a degree-0 element".into() });
        }
        Ok(self.coeff(&[]))
    }

    pub fn add_term(&mut self, tuple: &[usize], p: RepRingPoly) -> Result<()> {
        let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
        if tuple.len() != self.degree || !increasing || tuple.iter().any(|&i| i >= self.rank) {
            return Err(Error::InvalidTuple(tuple.to_vec()));
        }
        if p.nvars() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: p.nvars() });
        }
        if p.is_zero() {
            return Ok(());
        }
        let sum = match self.coeffs.remove(tuple) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.coeffs.insert(tuple.to_vec(), sum);
        }
        Ok(())
    }

    /// Multiplies every coefficient by `p` (the module action).
    pub fn scale(&self, p: &RepRingPoly) -> Self {
        let mut out = KoszulElement::zero(self.rank, self.degree);
        for (t, c) in &self.coeffs {
            let v = c * p;
            if !v.is_zero() {
                out.coeffs.insert(t.clone(), v);
            }
        }
        out
    }

    pub fn add(&self, other: &KoszulElement) -> Result<Self> {
        if self.degree != other.degree || self.rank != other.rank {
            return Err(Error::InvalidDegree {
                degree: other.degree,
                reason: format!("cannot add to an element of degree {}", self.degree),
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KoszulElement) -> Result<Self> {
        self.add(&other.scale(&RepRingPoly::constant(self.rank, -1)))
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RepRingPoly) -> RepRingPoly) -> Self {
        let mut out = KoszulElement::zero(self.rank, self.degree);
        for (t, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                out.coeffs.insert(t.clone(), v);
            }
        }
        out
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(t, c)| {
                let poly = c.to_string_with(var);
                if t.is_empty() {
                    format!("({poly})")
                } else {
                    format!("({poly})*{}", wedge_label(t))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for KoszulElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("w"))
    }
}

/// The augmented Koszul complex of a Cartan datum.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    datum: CartanDatum,
    dims: Vec<BigInt>,
    fault: Option<Fault>,
}

impl KoszulComplex {
    pub fn new(datum: CartanDatum) -> Self {
        let dims = datum.fundamental_dimensions();
        KoszulComplex { datum, dims, fault: None }
    }

    pub fn with_fault(mut self, fault: Option<Fault>) -> Self {
        self.fault = fault;
        self
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `d_j = dim V(w_j)`.
    pub fn dims(&self) -> &[BigInt] {
        &self.dims
    }

    /// Ranks `binom(N, k)` of the free modules `Lambda^k Omega`.
    pub fn module_ranks(&self) -> Vec<usize> {
        (0..=self.rank()).map(|k| binomial(self.rank(), k)).collect()
    }

    /// The element the differential multiplies by when removing `e_i`.
    pub fn factor(&self, i: usize, coords: Coordinates) -> RepRingPoly {
        let n = self.rank();
        let faulted = self.fault == Some(Fault::DSign) && i == 0;
        match coords {
            Coordinates::Rep => {
                let d = if faulted { self.dims[i].clone() } else { -self.dims[i].clone() };
                &RepRingPoly::var(n, i) + &RepRingPoly::constant(n, d)
            }
            Coordinates::Y => {
                let shift = if faulted { &self.dims[i] * 2 } else { BigInt::zero() };
                &RepRingPoly::var(n, i) + &RepRingPoly::constant(n, shift)
            }
        }
    }

    pub fn differential_in(&self, coords: Coordinates, x: &KoszulElement) -> Result<KoszulElement> {
        self.check_element(x)?;
        if x.degree == 0 {
            return Err(Error::InvalidDegree {
                degree: 0,
                reason: "the differential starts in degree 1; use the augmentation in degree 0".into(),
            });
        }
        let factors: Vec<RepRingPoly> = (0..self.rank()).map(|i| self.factor(i, coords)).collect();
        let mut out = KoszulElement::zero(self.rank(), x.degree - 1);
        for (tuple, coeff) in &x.coeffs {
            for (pos, &i) in tuple.iter().enumerate() {
                let mut face = tuple.clone();
                face.remove(pos);
                let mut term = coeff * &factors[i];
                if pos % 2 == 1 {
                    term = -term;
                }
                out.add_term(&face, term)?;
            }
        }
        Ok(out)
    }

    /// Augmentation of a degree-0 element written in `w`-coordinates.
    pub fn augment_in(&self, coords: Coordinates, x: &KoszulElement) -> Result<BigInt> {
        self.check_element(x)?;
        let p = x.as_poly()?;
        Ok(match coords {
            Coordinates::Rep => p.evaluate(&self.dims),
            Coordinates::Y => p.constant_term(),
        })
    }

    fn check_element(&self, x: &KoszulElement) -> Result<()> {
        if x.rank != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: x.rank });
        }
        Ok(())
    }

    /// `y_j = w_j - d_j` images of the `w_j`: `w_j -> y_j + d_j`.
    fn to_y_images(&self) -> Vec<RepRingPoly> {
        let n = self.rank();
        (0..n).map(|j| &RepRingPoly::var(n, j) + &RepRingPoly::constant(n, self.dims[j].clone())).collect()
    }

    fn w_images(&self) -> Vec<RepRingPoly> {
        let n = self.rank();
        (0..n).map(|j| &RepRingPoly::var(n, j) - &RepRingPoly::constant(n, self.dims[j].clone())).collect()
    }
}

/// The Koszul differential in `w`-coordinates.
pub fn koszul_differential(cx: &KoszulComplex, x: &KoszulElement) -> Result<KoszulElement> {
    cx.differential_in(Coordinates::Rep, x)
}

/// The Koszul differential in `y`-coordinates, multiplication by the `y_{i_j}`.
pub fn y_differential(cx: &KoszulComplex, x: &KoszulElement) -> Result<KoszulElement> {
    cx.differential_in(Coordinates::Y, x)
}

/// The augmentation `eps(w_j) = d_j` on a degree-0 element.
pub fn augment(cx: &KoszulComplex, x: &KoszulElement) -> Result<BigInt> {
    cx.augment_in(Coordinates::Rep, x)
}

/// Rewrites a polynomial in the `w_j` as a polynomial in the `y_j = w_j - d_j`.
pub fn to_y_coordinates(cx: &KoszulComplex, p: &RepRingPoly) -> RepRingPoly {
    p.substitute(&cx.to_y_images())
}

/// Inverse of [`to_y_coordinates`].
pub fn from_y_coordinates(cx: &KoszulComplex, q: &RepRingPoly) -> RepRingPoly {
    q.substitute(&cx.w_images())
}

pub fn element_to_y(cx: &KoszulComplex, x: &KoszulElement) -> KoszulElement {
    let images = cx.to_y_images();
    x.map_coeffs(|p| p.substitute(&images))
}

pub fn element_from_y(cx: &KoszulComplex, x: &KoszulElement) -> KoszulElement {
    let images = cx.w_images();
    x.map_coeffs(|p| p.substitute(&images))
}

/// Checks that `d o d = 0` in degrees `>= 2` and `eps o d = 0` in degree 1,
/// on every basis element and on every basis element times every monomial of
/// total degree `<= max_degree`.
pub fn verify_d_squared(cx: &KoszulComplex, max_degree: u32) -> Result<bool> {
    Ok(d_squared_violation(cx, max_degree)?.is_none())
}

/// The first element on which the augmented differential fails to square to
/// zero, as text.
pub fn d_squared_violation(cx: &KoszulComplex, max_degree: u32) -> Result<Option<String>> {
    let n = cx.rank();
    let mut multipliers = vec![Monomial::one(n)];
    multipliers.extend(Monomial::up_to_degree(n, max_degree));
    for k in 1..=n {
        for tuple in subsets(n, k) {
            let basis = KoszulElement::basis(n, &tuple)?;
            for m in &multipliers {
                let x = basis.scale(&RepRingPoly::monomial(m.clone(), 1));
                let dx = koszul_differential(cx, &x)?;
                let ok = if k == 1 { augment(cx, &dx)?.is_zero() } else { koszul_differential(cx, &dx)?.is_zero() };
                if !ok {
                    let what = if k == 1 { "eps o d" } else { "d o d" };
                    return Ok(Some(format!("{what} is non-zero on {x}")));
                }
            }
        }
    }
    Ok(None)
}

/// The contracting homotopy on an element written in `y`-coordinates.
///
/// On a monomial `y^a e_S` let `i` be the smallest index with `a_i > 0` or
/// `i in S`. If `i` is not in `S` the result is `y^(a - e_i) e_i ^ e_S`;
/// otherwise (and on constants in degree 0) it is zero. This is the tensor
/// product of the rank-one contractions `y^a -> y^(a-1) e`.
pub fn contracting_homotopy(cx: &KoszulComplex, x: &KoszulElement) -> Result<KoszulElement> {
    cx.check_element(x)?;
    let n = cx.rank();
    let mut out = KoszulElement::zero(n, x.degree + 1);
    if x.degree == n {
        return Ok(out);
    }
    for (tuple, coeff) in &x.coeffs {
        let first_in_s = tuple.first().copied().unwrap_or(n);
        for (m, c) in coeff.terms() {
            let Some(i) = m.exponents().iter().position(|&e| e > 0) else { continue };
            if i >= first_in_s {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            let mut wedge = Vec::with_capacity(tuple.len() + 1);
            wedge.push(i);
            wedge.extend_from_slice(tuple);
            out.add_term(&wedge, RepRingPoly::monomial(Monomial(exps), c.clone()))?;
        }
    }
    Ok(out)
}

/// `(d s + s d)(x) - (x - eta eps x)` in `y`-coordinates; zero iff the
/// homotopy identity holds on `x`.
pub fn homotopy_defect(cx: &KoszulComplex, x: &KoszulElement) -> Result<KoszulElement> {
    let n = cx.rank();
    let s = contracting_homotopy(cx, x)?;
    let ds = y_differential(cx, &s)?;
    let lhs = if x.degree == 0 {
        ds
    } else {
        let dx = y_differential(cx, x)?;
        ds.add(&contracting_homotopy(cx, &dx)?)?
    };
    let mut rhs = x.clone();
    if x.degree == 0 {
        let eps = cx.augment_in(Coordinates::Y, x)?;
        rhs = rhs.sub(&KoszulElement::from_poly(RepRingPoly::constant(n, eps)))?;
    }
    lhs.sub(&rhs)
}

/// Checks the homotopy identity on every `y^a e_S` with `|a| <= max_y_degree`.
/// Returns the first violating basis element, if any.
pub fn homotopy_violation(cx: &KoszulComplex, max_y_degree: u32) -> Result<Option<String>> {
    let n = cx.rank();
    let monomials = Monomial::up_to_degree(n, max_y_degree);
    for k in 0..=n {
        for tuple in subsets(n, k) {
            for m in &monomials {
                let mut x = KoszulElement::zero(n, k);
                x.add_term(&tuple, RepRingPoly::monomial(m.clone(), 1))?;
                if !homotopy_defect(cx, &x)?.is_zero() {
                    return Ok(Some(format!("homotopy identity fails on {}", x.to_string_with("y"))));
                }
            }
        }
    }
    Ok(None)
}

/// Homology of one graded piece at one position of the augmented complex.
/// Position `-1` is the augmentation target `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub position: i64,
    pub y_degree: usize,
    pub rank: usize,
    pub group: FgAbGroup,
}

/// Degreewise homology of the augmented complex in `y`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    #[serde(rename = "type")]
    pub type_string: String,
    pub max_y_degree: usize,
    pub entries: Vec<HomologyEntry>,
    pub exact: bool,
    /// The certificate covers only the graded pieces listed.
    pub scope: &'static str,
}

/// Basis of the graded piece of total degree `delta` in position `k`:
/// `y^a e_S` with `|S| = k` and `|a| = delta - k`.
pub fn graded_basis(n: usize, k: usize, delta: usize) -> Vec<(Vec<usize>, Monomial)> {
    if delta < k {
        return Vec::new();
    }
    let monomials = Monomial::of_degree(n, (delta - k) as u32);
    subsets(n, k).into_iter().flat_map(|s| monomials.iter().map(move |m| (s.clone(), m.clone()))).collect()
}

/// Matrix of the `y`-differential from position `k` to `k - 1` on the graded
/// piece of total degree `delta`, in the bases `y^a e_S` ordered by `S` then `a`.
pub fn graded_differential(cx: &KoszulComplex, k: usize, delta: usize) -> Result<IntMatrix> {
    let n = cx.rank();
    let source = graded_basis(n, k, delta);
    let target = graded_basis(n, k - 1, delta);
    cx.datum().limits().check_cells("graded Koszul differential", target.len(), source.len())?;
    let index: HashMap<(&Vec<usize>, &Monomial), usize> =
        target.iter().enumerate().map(|(r, (s, m))| ((s, m), r)).collect();
    let mut mat = IntMatrix::zeros(target.len(), source.len());
    for (col, (s, m)) in source.iter().enumerate() {
        let mut x = KoszulElement::zero(n, k);
        x.add_term(s, RepRingPoly::monomial(m.clone(), 1))?;
        for (face, coeff) in y_differential(cx, &x)?.terms() {
            for (mono, c) in coeff.terms() {
                let row = index.get(&(face, mono)).ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "differential is not homogeneous in y-coordinates on {}",
                        x.to_string_with("y")
                    ))
                })?;
                mat[(*row, col)] = c.clone();
            }
        }
    }
    Ok(mat)
}

/// Matrix of the augmentation from position 0 to the `Z` at position `-1`.
fn graded_augmentation(cx: &KoszulComplex, delta: usize) -> IntMatrix {
    let n = cx.rank();
    let source = graded_basis(n, 0, delta);
    let rows = usize::from(delta == 0);
    let mut mat = IntMatrix::zeros(rows, source.len());
    if delta == 0 {
        mat[(0, 0)] = BigInt::one();
    }
    mat
}

/// Certifies exactness of the augmented complex on every graded piece of
/// total `y`-degree `<= max_y_degree`.
pub fn truncated_exactness(cx: &KoszulComplex, max_y_degree: usize) -> Result<HomologyReport> {
    let n = cx.rank();
    let mut entries = Vec::new();
    for delta in 0..=max_y_degree {
        // maps[k] : position k -> position k - 1, for k = 0..=n (k = 0 is eps).
        let mut maps = vec![graded_augmentation(cx, delta)];
        for k in 1..=n {
            maps.push(graded_differential(cx, k, delta)?);
        }
        let z_rank = usize::from(delta == 0);
        for position in (-1..=n as i64).rev() {
            let outgoing = usize::try_from(position).ok().map(|k| &maps[k]);
            let size = outgoing.map_or(z_rank, IntMatrix::cols);
            let d_in = match maps.get((position + 1) as usize) {
                Some(m) => m.clone(),
                None => IntMatrix::zeros(size, 0),
            };
            let d_out = outgoing.cloned().unwrap_or_else(|| IntMatrix::zeros(0, size));
            let group = homology_at(&d_in, &d_out)?;
            entries.push(HomologyEntry { position, y_degree: delta, rank: size, group });
        }
    }
    let exact = entries.iter().all(|e| e.group.is_trivial());
    Ok(HomologyReport {
        type_string: cx.datum().type_string(),
        max_y_degree,
        entries,
        exact,
        scope: "graded pieces of total y-degree up to max_y_degree",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(s: &str) -> KoszulComplex {
        KoszulComplex::new(CartanDatum::from_type_str(s).unwrap())
    }

    fn poly(s: &str, n: usize) -> RepRingPoly {
        RepRingPoly::parse(s, n).unwrap()
    }

    #[test]
    fn binomials_and_subsets() {
        assert_eq!((0..=4).map(|k| binomial(4, k)).collect::<Vec<_>>(), [1, 4, 6, 4, 1]);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(complex("A3").module_ranks().iter().sum::<usize>(), 8);
    }

    #[test]
    fn element_invariants() {
        let mut x = KoszulElement::zero(3, 2);
        assert!(x.add_term(&[1, 0], RepRingPoly::one(3)).is_err());
        assert!(x.add_term(&[1, 1], RepRingPoly::one(3)).is_err());
        assert!(x.add_term(&[0, 3], RepRingPoly::one(3)).is_err());
        assert!(x.add_term(&[0], RepRingPoly::one(3)).is_err());
        x.add_term(&[0, 2], poly("w1", 3)).unwrap();
        x.add_term(&[0, 2], poly("-w1", 3)).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn differential_of_top_form_in_rank_two() {
        let cx = complex("A2");
        let e12 = KoszulElement::basis(2, &[0, 1]).unwrap();
        let d = koszul_differential(&cx, &e12).unwrap();
        assert_eq!(d.coeff(&[1]), poly("w1 - 3", 2));
        assert_eq!(d.coeff(&[0]), poly("-w2 + 3", 2));
    }

    #[test]
    fn differential_of_generators() {
        let cx = complex("G2");
        for j in 0..2 {
            let d = koszul_differential(&cx, &KoszulElement::basis(2, &[j]).unwrap()).unwrap();
            let expected = &RepRingPoly::var(2, j) - &RepRingPoly::constant(2, cx.dims()[j].clone());
            assert_eq!(d.as_poly().unwrap(), expected);
        }
        let a1 = complex("A1");
        let x = KoszulElement::basis(1, &[0]).unwrap().scale(&poly("w1", 1));
        assert_eq!(koszul_differential(&a1, &x).unwrap().as_poly().unwrap(), poly("w1^2 - 2*w1", 1));
        assert!(koszul_differential(&a1, &KoszulElement::from_poly(poly("w1", 1))).is_err());
    }

    #[test]
    fn augmentation_examples() {
        let a1 = complex("A1");
        assert_eq!(augment(&a1, &KoszulElement::from_poly(RepRingPoly::one(1))).unwrap(), BigInt::one());
        assert!(augment(&a1, &KoszulElement::from_poly(poly("w1 - 2", 1))).unwrap().is_zero());
        let a2 = complex("A2");
        assert_eq!(augment(&a2, &KoszulElement::from_poly(poly("w1*w2", 2))).unwrap(), BigInt::from(9));
        assert!(augment(&a2, &KoszulElement::basis(2, &[0]).unwrap()).is_err());
    }

    #[test]
    fn d_squared_vanishes() {
        for s in ["A1", "A2", "A3"] {
            assert!(verify_d_squared(&complex(s), 2).unwrap(), "{s}");
        }
    }

    #[test]
    fn d_sign_fault_is_detected() {
        for s in ["A1", "A2"] {
            let cx = complex(s).with_fault(Some(Fault::DSign));
            assert!(!verify_d_squared(&cx, 1).unwrap(), "{s}");
        }
    }

    #[test]
    fn y_coordinates() {
        let a1 = complex("A1");
        assert_eq!(to_y_coordinates(&a1, &poly("w1^2", 1)).to_string_with("y"), "y1^2 + 4*y1 + 4");
        let a2 = complex("A2");
        let p = poly("3*w1^2*w2 - w2 + 5", 2);
        assert_eq!(from_y_coordinates(&a2, &to_y_coordinates(&a2, &p)), p);
    }

    #[test]
    fn homotopy_rank_one() {
        let a1 = complex("A1");
        let one = KoszulElement::from_poly(RepRingPoly::one(1));
        assert!(contracting_homotopy(&a1, &one).unwrap().is_zero());
        let y1 = KoszulElement::from_poly(RepRingPoly::var(1, 0));
        let s = contracting_homotopy(&a1, &y1).unwrap();
        assert_eq!(s, KoszulElement::basis(1, &[0]).unwrap());
        assert_eq!(y_differential(&a1, &s).unwrap(), y1);
    }

    #[test]
    fn homotopy_identity_small_degrees() {
        for s in ["A1", "A2", "B2"] {
            assert_eq!(homotopy_violation(&complex(s), 3).unwrap(), None, "{s}");
        }
    }

    #[test]
    fn exactness_of_graded_pieces() {
        let report = truncated_exactness(&complex("A1"), 4).unwrap();
        assert!(report.exact);
        let report = truncated_exactness(&complex("A2"), 0).unwrap();
        assert!(report.exact);
        // Position 0 and the augmentation target are both Z in degree 0.
        let ranks: Vec<(i64, usize)> = report.entries.iter().map(|e| (e.position, e.rank)).collect();
        assert_eq!(ranks, vec![(2, 0), (1, 0), (0, 1), (-1, 1)]);
    }

    #[test]
    fn degree_two_piece_of_a2_is_exact() {
        let cx = complex("A2");
        let d2 = graded_differential(&cx, 2, 2).unwrap();
        let d1 = graded_differential(&cx, 1, 2).unwrap();
        let d0 = graded_augmentation(&cx, 2);
        assert!(homology_at(&d2, &d1).unwrap().is_trivial());
        assert!(homology_at(&d1, &d0).unwrap().is_trivial());
        assert_eq!((d1.rows(), d1.cols()), (3, 4));
    }

    #[test]
    fn exactness_respects_the_matrix_cap() {
        let datum = CartanDatum::from_type_str("A3")
            .unwrap()
            .with_limits(crate::Limits { max_matrix_cells: 10, ..Default::default() });
        assert!(truncated_exactness(&KoszulComplex::new(datum), 3).unwrap_err().is_cap());
    }
}
