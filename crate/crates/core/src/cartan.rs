//! Root data, weight lattice and Weyl groups of simply connected compact
//! semisimple groups.
//!
//! Weights are always written in the basis of fundamental weights, so the
//! weight lattice is literally `Z^N`. Simple roots are numbered as in
//! Bourbaki. Row `j` of the Cartan matrix is the simple root `alpha_j`
//! expressed in fundamental-weight coordinates, i.e. `a[j][i] = <alpha_j, alpha_i^v>`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, Limits, Result};

/// Series letter of a simple Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// One simple factor `X_n` of a semisimple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let valid = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if valid {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType {
                token: format!("{}{}", series.letter(), rank),
                reason: "no simple Lie algebra of this series and rank".into(),
            })
        }
    }

    /// Gram matrix of the simple roots, scaled to be integral.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        match self.series {
            Series::A => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Series::B => {
                g[n - 1][n - 1] = 1;
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Series::C => {
                g[n - 1][n - 1] = 4;
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Series::E => {
                // 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4.
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Series::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Series::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let token = s.trim();
        let mut chars = token.chars();
        let series = chars
            .next()
            .and_then(Series::from_char)
            .ok_or_else(|| Error::InvalidType { token: token.into(), reason: "unknown series letter".into() })?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType { token: token.into(), reason: "rank is not a positive integer".into() })?;
        SimpleType::new(series, rank)
    }
}

/// Parses a semisimple type such as `A2`, `b3` or `A1xA1` (factors separated by `x`).
pub fn parse_type(s: &str) -> Result<Vec<SimpleType>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidType { token: s.into(), reason: "empty type string".into() });
    }
    s.split(['x', 'X']).map(str::parse).collect()
}

/// Parses a comma-separated list of semisimple types, e.g. `A2, B3, A1xA1`.
pub fn parse_type_list(s: &str) -> Result<Vec<Vec<SimpleType>>> {
    s.split(',').map(parse_type).collect()
}

/// Canonical string for a list of factors, e.g. `A1xA1`.
pub fn type_string(factors: &[SimpleType]) -> String {
    factors.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight with index `j` (0-based).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[j] = 1;
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the Weyl group, as an integer matrix acting on weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    word_length: usize,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement { rank, matrix, word_length: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.rank + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank.max(1)).take(self.rank).map(<[i64]>::to_vec).collect()
    }

    /// Matrix product `self * other`; the word length of the result is not tracked.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    matrix[i * n + j] += a * other.matrix[k * n + j];
                }
            }
        }
        WeylElement { rank: n, matrix, word_length: 0 }
    }

    /// Applies the element to a coordinate vector without rank checks.
    pub(crate) fn apply(&self, mu: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n).map(|i| (0..n).map(|j| self.matrix[i * n + j] * mu[j]).sum()).collect()
    }

    /// Image of the fundamental weight `j`, i.e. column `j` of the matrix.
    pub fn image_of_fundamental(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.entry(i, j)).collect()
    }
}

/// Root datum of a simply connected compact semisimple group.
#[derive(Debug)]
pub struct CartanDatum {
    factors: Vec<SimpleType>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    root_norms: Vec<i64>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    limits: Limits,
    weyl: OnceLock<Vec<WeylElement>>,
}

impl Clone for CartanDatum {
    fn clone(&self) -> Self {
        CartanDatum {
            factors: self.factors.clone(),
            rank: self.rank,
            cartan: self.cartan.clone(),
            root_norms: self.root_norms.clone(),
            symmetrizers: self.symmetrizers.clone(),
            positive_roots: self.positive_roots.clone(),
            positive_root_coords: self.positive_root_coords.clone(),
            limits: self.limits,
            weyl: self.weyl.clone(),
        }
    }
}

/// Builds the direct-sum Cartan datum of the given simple factors.
pub fn build_cartan(factors: &[SimpleType]) -> Result<CartanDatum> {
    if factors.is_empty() {
        return Err(Error::InvalidType { token: String::new(), reason: "no simple factors".into() });
    }
    for f in factors {
        SimpleType::new(f.series, f.rank)?;
    }
    let rank: usize = factors.iter().map(|f| f.rank).sum();
    let mut gram = vec![vec![0i64; rank]; rank];
    let mut symmetrizers = Vec::with_capacity(rank);
    let mut offset = 0;
    for f in factors {
        let g = f.gram();
        let longest = (0..f.rank).map(|i| g[i][i]).max().unwrap_or(2);
        for i in 0..f.rank {
            for j in 0..f.rank {
                gram[offset + i][offset + j] = g[i][j];
            }
            symmetrizers.push(longest / g[i][i]);
        }
        offset += f.rank;
    }
    let root_norms: Vec<i64> = (0..rank).map(|i| gram[i][i]).collect();
    let cartan: Vec<Vec<i64>> = (0..rank).map(|j| (0..rank).map(|i| 2 * gram[j][i] / gram[i][i]).collect()).collect();

    let positive_root_coords = positive_roots_by_closure(&cartan);
    let positive_roots = positive_root_coords
        .iter()
        .map(|c| {
            let mut w = vec![0i64; rank];
            for (j, &cj) in c.iter().enumerate() {
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi += cj * cartan[j][i];
                }
            }
            Weight(w)
        })
        .collect();

    Ok(CartanDatum {
        factors: factors.to_vec(),
        rank,
        cartan,
        root_norms,
        symmetrizers,
        positive_roots,
        positive_root_coords,
        limits: Limits::default(),
        weyl: OnceLock::new(),
    })
}

/// Every root is Weyl-conjugate to a simple root, so closing the simple roots
/// under simple reflections yields the whole root system. Roots are tracked in
/// simple-root coordinates; `s_i` subtracts `<beta, alpha_i^v>` from coordinate `i`.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let pairing = |c: &[i64], i: usize| -> i64 { (0..n).map(|j| c[j] * cartan[j][i]).sum() };
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut c = vec![0i64; n];
        c[i] = 1;
        seen.insert(c.clone(), ());
        queue.push_back(c);
    }
    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let p = pairing(&c, i);
            if p == 0 {
                continue;
            }
            let mut next = c.clone();
            next[i] -= p;
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen.into_keys().filter(|c| c.iter().all(|&x| x >= 0)).collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    positive
}

impl CartanDatum {
    /// Parses and builds a datum from a type string such as `G2` or `A1xA1`.
    pub fn from_type_str(s: &str) -> Result<Self> {
        build_cartan(&parse_type(s)?)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self.weyl = OnceLock::new();
        self
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn type_string(&self) -> String {
        type_string(&self.factors)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Row `j` is the simple root `alpha_j` in fundamental-weight coordinates.
    pub fn simple_roots_in_weight_coords(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Squared lengths of the simple roots, scaled per factor to be integral.
    pub fn root_norms(&self) -> &[i64] {
        &self.root_norms
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, in the same order as [`Self::positive_roots`].
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    /// The Weyl vector, all ones in fundamental-weight coordinates.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Twice the inner product of a weight with a root given in simple-root coordinates.
    pub(crate) fn pair_doubled(&self, weight: &[i64], root_coords: &[i64]) -> i64 {
        (0..self.rank).map(|i| root_coords[i] * weight[i] * self.root_norms[i]).sum()
    }

    pub(crate) fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: mu.rank() });
        }
        Ok(())
    }

    /// Order of the Weyl group from the exponents, read off the height
    /// distribution of the positive roots. Needs no enumeration.
    pub fn weyl_group_order(&self) -> BigInt {
        self.parabolic_order(&vec![true; self.rank])
    }

    /// Order of the subgroup generated by the simple reflections `s_i` with `generators[i]`.
    pub fn parabolic_order(&self, generators: &[bool]) -> BigInt {
        let heights: Vec<usize> = self
            .positive_root_coords
            .iter()
            .filter(|c| c.iter().zip(generators).all(|(&x, &g)| g || x == 0))
            .map(|c| c.iter().sum::<i64>() as usize)
            .collect();
        let max_h = heights.iter().copied().max().unwrap_or(0);
        let count = |h: usize| heights.iter().filter(|&&x| x == h).count();
        let mut order = BigInt::one();
        for h in 1..=max_h {
            let exps = count(h) - count(h + 1);
            for _ in 0..exps {
                order *= BigInt::from(h + 1);
            }
        }
        order
    }

    /// Dimensions `d_j` of the fundamental representations.
    pub fn fundamental_dimensions(&self) -> Vec<BigInt> {
        (0..self.rank)
            .map(|j| {
                weyl_dimension(self, &Weight::fundamental(self.rank, j)).expect("fundamental weights are dominant")
            })
            .collect()
    }

    /// Simple reflection `s_i` as a Weyl element.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank;
        let mut w = WeylElement::identity(n);
        for k in 0..n {
            w.matrix[k * n + i] -= self.cartan[i][k];
        }
        w.word_length = 1;
        w
    }
}

/// Weyl dimension formula, evaluated in exact integer arithmetic.
pub fn weyl_dimension(datum: &CartanDatum, lambda: &Weight) -> Result<BigInt> {
    datum.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    let shifted: Vec<i64> = lambda.0.iter().map(|c| c + 1).collect();
    let rho = vec![1i64; datum.rank];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for c in &datum.positive_root_coords {
        num *= BigInt::from(datum.pair_doubled(&shifted, c));
        den *= BigInt::from(datum.pair_doubled(&rho, c));
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("Weyl dimension {num}/{den} is not integral")));
    }
    Ok(q)
}

/// Enumerates the Weyl group by breadth-first closure under simple reflections.
///
/// Element 0 is the identity and word lengths are BFS depths. The result is
/// memoized on the datum.
pub fn weyl_group(datum: &CartanDatum) -> Result<&[WeylElement]> {
    if let Some(w) = datum.weyl.get() {
        return Ok(w);
    }
    let elements = enumerate_weyl_group(datum)?;
    Ok(datum.weyl.get_or_init(|| elements))
}

fn enumerate_weyl_group(datum: &CartanDatum) -> Result<Vec<WeylElement>> {
    let n = datum.rank;
    let cap = datum.limits.max_weyl_order;
    if datum.weyl_group_order() > BigInt::from(cap) {
        return Err(Error::cap(format!("Weyl group of order {}", datum.weyl_group_order()), cap));
    }
    let rho = datum.rho();
    let reflections: Vec<WeylElement> = (0..n).map(|i| datum.simple_reflection(i)).collect();
    let mut elements = vec![WeylElement::identity(n)];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(rho.0.clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let depth = elements[head].word_length;
        for s in &reflections {
            let mut next = s.compose(&elements[head]);
            // w is determined by the image of the regular weight rho.
            let key = next.apply(&rho.0);
            if index.contains_key(&key) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::cap("Weyl group enumeration", cap));
            }
            next.word_length = depth + 1;
            index.insert(key, elements.len());
            elements.push(next);
        }
        head += 1;
    }
    Ok(elements)
}

/// Applies a Weyl element to a weight.
pub fn weyl_action(w: &WeylElement, mu: &Weight) -> Result<Weight> {
    if w.rank != mu.rank() {
        return Err(Error::RankMismatch { expected: w.rank, found: mu.rank() });
    }
    Ok(Weight(w.apply(&mu.0)))
}

/// Determinant of a small integer matrix by fraction-free elimination.
pub(crate) fn small_determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Checks that `D * A` is symmetric positive definite (Sylvester's criterion).
pub fn symmetrized_form_is_positive_definite(datum: &CartanDatum) -> bool {
    let n = datum.rank;
    let sym: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| datum.symmetrizers[i] * datum.cartan[i][j]).collect()).collect();
    let symmetric = (0..n).all(|i| (0..n).all(|j| sym[i][j] == sym[j][i]));
    symmetric
        && (1..=n).all(|k| {
            let minor: Vec<Vec<i64>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            small_determinant(&minor).is_positive()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_type_str(s).unwrap()
    }

    #[test]
    fn rank_one() {
        let a1 = datum("A1");
        assert_eq!(a1.rank(), 1);
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);
        assert_eq!(a1.positive_roots().len(), 1);
    }

    #[test]
    fn cartan_matrices_follow_bourbaki() {
        assert_eq!(datum("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(datum("G2").cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(datum("B2").cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(datum("A2").positive_roots().len(), 3);
        assert_eq!(datum("G2").positive_roots().len(), 6);
    }

    #[test]
    fn rejects_invalid_types() {
        for bad in ["Z9", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "A0", "A", "", "A1x"] {
            let err = CartanDatum::from_type_str(bad).unwrap_err();
            assert!(matches!(err, Error::InvalidType { .. }), "{bad}: {err}");
        }
        let msg = CartanDatum::from_type_str("A1xD3").unwrap_err().to_string();
        assert!(msg.contains("D3"), "{msg}");
    }

    #[test]
    fn parses_case_insensitively() {
        let t = parse_type("a1Xb2").unwrap();
        assert_eq!(type_string(&t), "A1xB2");
        let list = parse_type_list("A2, B3,A1xA1").unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(type_string(&list[2]), "A1xA1");
    }

    #[test]
    fn cartan_invariants_hold() {
        for s in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xG2"] {
            let d = datum(s);
            let a = d.cartan_matrix();
            for i in 0..d.rank() {
                assert_eq!(a[i][i], 2);
                for j in 0..d.rank() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
            assert!(symmetrized_form_is_positive_definite(&d), "{s}");
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A3", 6),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("A1xA1", 2),
        ];
        for (s, n) in expected {
            assert_eq!(datum(s).positive_roots().len(), n, "{s}");
        }
    }

    #[test]
    fn dimensions_of_small_representations() {
        let g2 = datum("G2");
        let dims: Vec<i64> = g2.fundamental_dimensions().iter().map(|d| d.to_i64().unwrap()).collect();
        assert_eq!(dims, vec![7, 14]);
        let a1 = datum("A1");
        assert_eq!(weyl_dimension(&a1, &Weight(vec![1])).unwrap(), BigInt::from(2));
        assert_eq!(weyl_dimension(&g2, &Weight(vec![0, 0])).unwrap(), BigInt::one());
        let b2 = datum("B2");
        let dims: Vec<BigInt> = b2.fundamental_dimensions();
        assert_eq!(dims, vec![BigInt::from(5), BigInt::from(4)]);
        let e8 = datum("E8");
        let dims: Vec<String> = e8.fundamental_dimensions().iter().map(ToString::to_string).collect();
        assert_eq!(dims, ["3875", "147250", "6696000", "6899079264", "146325270", "2450240", "30380", "248"]);
    }

    #[test]
    fn weyl_dimension_rejects_non_dominant() {
        let a2 = datum("A2");
        assert!(matches!(weyl_dimension(&a2, &Weight(vec![1, -1])), Err(Error::NonDominant(_))));
        assert!(matches!(weyl_dimension(&a2, &Weight(vec![1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(weyl_group(&datum("A1")).unwrap().len(), 2);
        assert_eq!(weyl_group(&datum("A2")).unwrap().len(), 6);
        assert_eq!(weyl_group(&datum("B2")).unwrap().len(), 8);
        assert_eq!(weyl_group(&datum("G2")).unwrap().len(), 12);
    }

    #[test]
    fn weyl_group_cap_is_reported() {
        let d = datum("B3").with_limits(Limits { max_weyl_order: 10, ..Limits::default() });
        let err = weyl_group(&d).unwrap_err();
        assert!(err.is_cap());
        assert!(err.to_string().contains("10"));
    }

    #[test]
    fn weyl_action_examples() {
        let a1 = datum("A1");
        let w = weyl_group(&a1).unwrap();
        assert_eq!(weyl_action(&w[0], &Weight(vec![1])).unwrap(), Weight(vec![1]));
        assert_eq!(weyl_action(&w[1], &Weight(vec![1])).unwrap(), Weight(vec![-1]));

        let a2 = datum("A2");
        let w = weyl_group(&a2).unwrap();
        let longest = w.iter().max_by_key(|e| e.word_length()).unwrap();
        assert_eq!(longest.word_length(), 3);
        assert_eq!(weyl_action(longest, &Weight(vec![1, 0])).unwrap(), Weight(vec![0, -1]));
        assert!(weyl_action(longest, &Weight(vec![1])).is_err());
    }

    #[test]
    fn order_from_exponents_matches_enumeration() {
        for s in ["A1", "A3", "B3", "C3", "D4", "F4", "G2", "A1xB2"] {
            let d = datum(s);
            assert_eq!(d.weyl_group_order(), BigInt::from(weyl_group(&d).unwrap().len()), "{s}");
        }
        assert_eq!(datum("E8").weyl_group_order().to_string(), "696729600");
    }
}
