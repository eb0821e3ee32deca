//! The representation ring `R(K) = Z[w_1, ..., w_N]`, the character ring
//! `R(T) = Z[P]` of the maximal torus, and the maps between them.

mod laurent;
mod poly;
mod text;

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use laurent::LaurentWeightPoly;
pub use poly::{Monomial, RepRingPoly};

use crate::cartan::{weyl_group, CartanDatum, Weight};
use crate::homology::{self, IntMatrix};
use crate::{Error, Result};

/// Reflects `mu` into the dominant chamber, adjusting `depth` so that it stays
/// the simple-root coordinates of `lambda - mu`.
fn to_dominant(cartan: &[Vec<i64>], mu: &mut [i64], depth: &mut [i64]) {
    while let Some(i) = mu.iter().position(|&x| x < 0) {
        let c = mu[i];
        depth[i] += c;
        for (t, m) in mu.iter_mut().enumerate() {
            *m -= c * cartan[i][t];
        }
    }
}

/// The Weyl orbit of a dominant weight.
fn orbit(cartan: &[Vec<i64>], mu: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([mu.to_vec()]);
    let mut frontier = vec![mu.to_vec()];
    while let Some(nu) = frontier.pop() {
        for (i, &c) in nu.iter().enumerate() {
            if c > 0 {
                let image: Vec<i64> = nu.iter().enumerate().map(|(t, &x)| x - c * cartan[i][t]).collect();
                if seen.insert(image.clone()) {
                    frontier.push(image);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Character of the irreducible representation with highest weight `lambda`,
/// computed with Freudenthal's multiplicity recursion on dominant weights and
/// expanded over Weyl orbits.
///
/// Weights are tracked by their depth below `lambda` in simple-root
/// coordinates, so every inner product the recursion needs is an integer
/// combination of the simple root norms.
pub fn character(datum: &CartanDatum, lambda: &Weight) -> Result<LaurentWeightPoly> {
    datum.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    let n = datum.rank();
    let cap = datum.limits().max_weights;
    let cartan = datum.cartan_matrix();
    let norms = datum.root_norms();
    let roots = datum.positive_root_coords();
    let weight_at = |depth: &[i64]| -> Vec<i64> {
        let mut mu = lambda.0.clone();
        for (j, &k) in depth.iter().enumerate() {
            if k != 0 {
                for (i, m) in mu.iter_mut().enumerate() {
                    *m -= k * cartan[j][i];
                }
            }
        }
        mu
    };

    // Dominant weights below lambda, connected to it by positive-root steps.
    let mut dominant: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
    let mut frontier = vec![vec![0i64; n]];
    dominant.insert((0, vec![0; n]));
    while let Some(depth) = frontier.pop() {
        for c in roots {
            let next: Vec<i64> = depth.iter().zip(c).map(|(d, x)| d + x).collect();
            if weight_at(&next).iter().all(|&x| x >= 0) && dominant.insert((next.iter().sum(), next.clone())) {
                frontier.push(next);
            }
            if dominant.len() > cap {
                return Err(Error::cap(format!("weight system of {lambda}"), cap));
            }
        }
    }

    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for (height, depth) in &dominant {
        if *height == 0 {
            mult.insert(depth.clone(), BigInt::one());
            continue;
        }
        let mu = weight_at(depth);
        // 2 * (lambda - mu, lambda + mu + 2 rho)
        let den: i64 = (0..n).map(|i| depth[i] * (lambda.0[i] + mu[i] + 2) * norms[i]).sum();
        let mut num = BigInt::zero();
        for c in roots {
            let mut shifted = depth.clone();
            loop {
                for (s, ci) in shifted.iter_mut().zip(c) {
                    *s -= ci;
                }
                let nu = weight_at(&shifted);
                let mut dom = nu.clone();
                let mut dom_depth = shifted.clone();
                to_dominant(cartan, &mut dom, &mut dom_depth);
                let Some(m) = mult.get(&dom_depth) else { break };
                num += m * BigInt::from(datum.pair_doubled(&nu, c));
            }
        }
        num *= 2;
        if den <= 0 {
            return Err(Error::Inconsistent(format!("multiplicity recursion failed at weight {mu:?}")));
        }
        let (m, r) = num.div_rem(&BigInt::from(den));
        if !r.is_zero() || m.is_negative() {
            return Err(Error::Inconsistent(format!("non-integral multiplicity at weight {mu:?}")));
        }
        if !m.is_zero() {
            mult.insert(depth.clone(), m);
        }
    }

    let mut support = BigInt::zero();
    for depth in mult.keys() {
        let mu = weight_at(depth);
        let stabilizer: Vec<bool> = mu.iter().map(|&x| x == 0).collect();
        support += datum.weyl_group_order() / datum.parabolic_order(&stabilizer);
    }
    if support > BigInt::from(cap) {
        return Err(Error::cap(format!("weight system of {lambda}"), cap));
    }
    let mut chi = LaurentWeightPoly::zero(n);
    for (depth, m) in &mult {
        for nu in orbit(cartan, &weight_at(depth)) {
            chi.add_term(nu, m.clone());
        }
    }
    Ok(chi)
}

/// Characters of the fundamental representations, `chi_j = restrict(w_j)`.
pub fn fundamental_characters(datum: &CartanDatum) -> Result<Vec<LaurentWeightPoly>> {
    (0..datum.rank()).map(|j| character(datum, &Weight::fundamental(datum.rank(), j))).collect()
}

/// The restriction homomorphism `R(K) -> R(T)` with cached powers of the
/// fundamental characters.
#[derive(Debug, Clone)]
pub struct Restriction {
    rank: usize,
    powers: Vec<Vec<LaurentWeightPoly>>,
}

impl Restriction {
    pub fn new(datum: &CartanDatum) -> Result<Self> {
        let powers = fundamental_characters(datum)?
            .into_iter()
            .map(|chi| vec![LaurentWeightPoly::one(datum.rank()), chi])
            .collect();
        Ok(Restriction { rank: datum.rank(), powers })
    }

    pub fn generator(&self, j: usize) -> &LaurentWeightPoly {
        &self.powers[j][1]
    }

    fn power(&mut self, j: usize, e: u32) -> &LaurentWeightPoly {
        while self.powers[j].len() <= e as usize {
            let next = self.powers[j].last().unwrap() * &self.powers[j][1];
            self.powers[j].push(next);
        }
        &self.powers[j][e as usize]
    }

    pub fn monomial(&mut self, m: &Monomial) -> LaurentWeightPoly {
        let mut acc = LaurentWeightPoly::one(self.rank);
        for (j, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                acc = &acc * self.power(j, e);
            }
        }
        acc
    }

    pub fn apply(&mut self, p: &RepRingPoly) -> Result<LaurentWeightPoly> {
        if p.nvars() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: p.nvars() });
        }
        let mut out = LaurentWeightPoly::zero(self.rank);
        for (m, c) in p.terms() {
            out = &out + &self.monomial(m).scale(c);
        }
        Ok(out)
    }
}

/// Restriction of a virtual representation to the maximal torus.
pub fn restrict(datum: &CartanDatum, p: &RepRingPoly) -> Result<LaurentWeightPoly> {
    Restriction::new(datum)?.apply(p)
}

/// The augmentation `w_j -> d_j = dim V(w_j)`.
pub fn augmentation(datum: &CartanDatum, p: &RepRingPoly) -> Result<BigInt> {
    if p.nvars() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: p.nvars() });
    }
    Ok(p.evaluate(&datum.fundamental_dimensions()))
}

/// True iff `f` is fixed by every element of the Weyl group.
pub fn weyl_invariant(datum: &CartanDatum, f: &LaurentWeightPoly) -> Result<bool> {
    if f.rank() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: f.rank() });
    }
    Ok(weyl_group(datum)?.iter().all(|w| &f.relocate(w) == f))
}

/// Outcome of the injectivity check for `R(K) -> R(T)` on a degree window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionInjectivity {
    pub degree_cap: u32,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub kernel_rank: usize,
    /// A non-zero polynomial in the kernel, when there is one.
    pub kernel_witness: Option<RepRingPoly>,
}

/// Matrix of restriction on the monomials of degree `<= degree_cap`, with the
/// weights that occur as codomain basis, and its kernel rank.
pub fn injectivity_witness_restrict(datum: &CartanDatum, degree_cap: u32) -> Result<RestrictionInjectivity> {
    let n = datum.rank();
    let monomials = Monomial::up_to_degree(n, degree_cap);
    let mut res = Restriction::new(datum)?;
    let images: Vec<LaurentWeightPoly> = monomials.iter().map(|m| res.monomial(m)).collect();
    let weights: BTreeSet<&Vec<i64>> = images.iter().flat_map(|p| p.terms().map(|(mu, _)| mu)).collect();
    let row_of: HashMap<&Vec<i64>, usize> = weights.iter().enumerate().map(|(i, mu)| (*mu, i)).collect();
    datum.limits().check_cells("restriction", weights.len(), monomials.len())?;

    let mut matrix = IntMatrix::zeros(weights.len(), monomials.len());
    for (col, image) in images.iter().enumerate() {
        for (mu, c) in image.terms() {
            matrix[(row_of[mu], col)] = c.clone();
        }
    }
    let kernel = homology::kernel_basis(&matrix);
    let kernel_witness = kernel.first().map(|v| {
        let mut p = RepRingPoly::zero(n);
        for (m, c) in monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    });
    Ok(RestrictionInjectivity {
        degree_cap,
        domain_dim: monomials.len(),
        codomain_dim: weights.len(),
        kernel_rank: kernel.len(),
        kernel_witness,
    })
}
