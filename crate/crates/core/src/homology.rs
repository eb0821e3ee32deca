//! Exact integer linear algebra: Smith normal form, kernels, integer solving
//! and homology of complexes of finitely generated free abelian groups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for matrices without rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for (j, x) in r.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        Ok(m)
    }

    /// Convenience constructor for non-empty literal matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(cols, &owned).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &m[(n - 1, n - 1)] })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] -= q * row[src]`
    fn row_sub(&mut self, target: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j] * q;
            if !s.is_zero() {
                self.data[target * self.cols + j] -= s;
            }
        }
    }

    /// `col[target] -= q * col[src]`
    fn col_sub(&mut self, target: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src] * q;
            if !s.is_zero() {
                self.data[i * self.cols + target] -= s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(&BigIntSeq(self.row(i)))?;
        }
        seq.end()
    }
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    BigIntSeq(v).serialize(s)
}

/// Serializes integers as JSON numbers when they fit in 64 bits, else as strings.
pub(crate) struct BigIntSeq<'a>(pub &'a [BigInt]);

impl Serialize for BigIntSeq<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

/// Result of [`smith_normal_form`]: `u * a * v == s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Non-zero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Position of the smallest non-zero absolute value in the block `[t.., t..]`,
/// ties broken by row-major order.
fn smallest_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows {
        for j in t..s.cols {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen as the smallest non-zero entry (by absolute value, then
/// row-major position), so the output is deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&s, t) else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                s.row_sub(i, t, &q);
                u.row_sub(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                s.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                // A remainder is smaller than the pivot: move the smallest
                // entry of row/column t into the pivot slot and repeat.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !s[(i, t)].is_zero() && s[(i, t)].abs() < s[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !s[(t, j)].is_zero() && s[(t, j)].abs() < s[best].abs() {
                        best = (t, j);
                    }
                }
                s.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&s[(t, t)]));
            match offender {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    s.row_sub(t, i, &minus_one);
                    u.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, s, v }
}

/// Column-style elimination on sparse columns. Returns the rank and a
/// unimodular `V` (as columns) such that `a * V` has its first `rank` columns
/// in echelon form and the rest zero.
fn column_echelon(a: &IntMatrix) -> (usize, Vec<Vec<BigInt>>) {
    let cols = (0..a.cols)
        .map(|j| (0..a.rows).filter(|&i| !a[(i, j)].is_zero()).map(|i| (i, a[(i, j)].clone())).collect())
        .collect();
    sparse_column_echelon(a.rows, cols)
}

/// Sparse column `j` of a matrix: row index to non-zero entry.
pub(crate) type SparseColumn = BTreeMap<usize, BigInt>;

fn sparse_column_echelon(rows: usize, mut cols: Vec<SparseColumn>) -> (usize, Vec<Vec<BigInt>>) {
    let n = cols.len();
    let mut v: Vec<Vec<BigInt>> =
        (0..n).map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut r = 0;
    for i in 0..rows {
        if r == n {
            break;
        }
        loop {
            let active: Vec<usize> = (r..n).filter(|&j| cols[j].contains_key(&i)).collect();
            let Some(&p) = active.iter().min_by(|&&x, &&y| cols[x][&i].abs().cmp(&cols[y][&i].abs())) else {
                break;
            };
            if active.len() == 1 {
                cols.swap(r, p);
                v.swap(r, p);
                r += 1;
                break;
            }
            let pivot = cols[p][&i].clone();
            let pivot_col = cols[p].clone();
            for &j in active.iter().filter(|&&j| j != p) {
                let q = cols[j][&i].div_floor(&pivot);
                for (row, x) in &pivot_col {
                    let e = cols[j].entry(*row).or_default();
                    *e -= &q * x;
                    if e.is_zero() {
                        cols[j].remove(row);
                    }
                }
                let (vp, vj) = if p < j {
                    let (lo, hi) = v.split_at_mut(j);
                    (&lo[p], &mut hi[0])
                } else {
                    let (lo, hi) = v.split_at_mut(p);
                    (&hi[0], &mut lo[j])
                };
                for (t, x) in vj.iter_mut().zip(vp) {
                    *t -= &q * x;
                }
            }
        }
    }
    (r, v)
}

pub fn rank(a: &IntMatrix) -> usize {
    column_echelon(a).0
}

/// Dimension of the kernel of `a` acting on column vectors.
pub fn kernel_rank(a: &IntMatrix) -> usize {
    a.cols - rank(a)
}

/// A `Z`-basis of the kernel of `a` (as column vectors).
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (r, v) = column_echelon(a);
    v.into_iter().skip(r).collect()
}

/// [`kernel_basis`] for a matrix given by sparse columns with `rows` rows.
pub(crate) fn sparse_kernel_basis(rows: usize, cols: Vec<SparseColumn>) -> Vec<Vec<BigInt>> {
    let (r, v) = sparse_column_echelon(rows, cols);
    v.into_iter().skip(r).collect()
}

/// An integer solution of `a * x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows {
        return Err(Error::ShapeMismatch(format!("right-hand side of length {} for {} rows", b.len(), a.rows)));
    }
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b)?;
    let factors = snf.invariant_factors();
    let mut y = vec![BigInt::zero(); a.cols];
    for (i, c) in ub.iter().enumerate() {
        match factors.get(i) {
            Some(d) => {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            None if !c.is_zero() => return Ok(None),
            None => {}
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: the returned
/// basis is echelon, pivots positive, and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_basis(rows: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out_rows = 0;
    for col in 0..width {
        if out_rows == m.len() {
            break;
        }
        loop {
            let pivot = (out_rows..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()).then(a.cmp(&b)));
            let Some(p) = pivot else { break };
            m.swap(out_rows, p);
            let mut done = true;
            for i in out_rows + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[out_rows][col]);
                let src = m[out_rows].clone();
                for (x, s) in m[i].iter_mut().zip(&src) {
                    *x -= &q * s;
                }
                done &= m[i][col].is_zero();
            }
            if done {
                break;
            }
        }
        if (out_rows..m.len()).all(|i| m[i][col].is_zero()) {
            continue;
        }
        if m[out_rows][col].is_negative() {
            for x in m[out_rows].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let src = m[out_rows].clone();
        for row in m.iter_mut().take(out_rows) {
            let q = row[col].div_floor(&src[col]);
            if !q.is_zero() {
                for (x, s) in row.iter_mut().zip(&src) {
                    *x -= &q * s;
                }
            }
        }
        out_rows += 1;
    }
    m.truncate(out_rows);
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    m
}

/// Finitely generated abelian group `Z^r + Z/d_1 + ... + Z/d_k` with `d_1 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgAbGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FgAbGroup", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &BigIntSeq(&self.torsion))?;
        st.end()
    }
}

/// Homology `ker(d_out) / im(d_in)` at the middle term of `A --d_in--> B --d_out--> C`.
///
/// `ker(d_out)` is a direct summand of `B`, so the torsion of the quotient is the
/// torsion of `coker(d_in)`.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FgAbGroup> {
    if d_out.cols != d_in.rows {
        return Err(Error::ShapeMismatch(format!(
            "incoming map lands in Z^{} but outgoing map starts at Z^{}",
            d_in.rows, d_out.cols
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    let middle = d_in.rows;
    let rank_out = rank(d_out);
    let snf_in = smith_normal_form(d_in);
    let factors = snf_in.invariant_factors();
    let torsion: Vec<BigInt> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    Ok(FgAbGroup { free_rank: middle - rank_out - factors.len(), torsion })
}
