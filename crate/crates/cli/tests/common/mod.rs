//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use koszulkt::cartan::{Series, SimpleType};

/// `x mod p` in `[0, p)`.
pub fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r < BigInt::from(0) { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` of a dense matrix given by rows.
pub fn rank_mod_p(rows: &[Vec<BigInt>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for j in c..cols {
            m[rank][j] = ((m[rank][j] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in c..cols {
                    let sub = (f as u128 * m[rank][j] as u128 % p as u128) as u64;
                    m[r][j] = (m[r][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimensions of the fundamental representations from the classical
/// constructions (exterior powers, spin and the exceptional tables), Bourbaki order.
pub fn classical_fundamental_dims(t: &SimpleType) -> Vec<u64> {
    let n = t.rank as u64;
    match t.series {
        Series::A => (1..=n).map(|j| binom(n + 1, j)).collect(),
        Series::B => (1..n).map(|j| binom(2 * n + 1, j)).chain([1 << n]).collect(),
        Series::C => (1..=n).map(|j| binom(2 * n, j) - if j >= 2 { binom(2 * n, j - 2) } else { 0 }).collect(),
        Series::D => (1..n - 1).map(|j| binom(2 * n, j)).chain([1 << (n - 1), 1 << (n - 1)]).collect(),
        Series::E => match n {
            6 => vec![27, 78, 351, 2925, 351, 27],
            7 => vec![133, 912, 8645, 365750, 27664, 1539, 56],
            _ => vec![3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248],
        },
        Series::F => vec![52, 1274, 273, 26],
        Series::G => vec![7, 14],
    }
}

pub fn product_dims(factors: &[SimpleType]) -> Vec<u64> {
    factors.iter().flat_map(classical_fundamental_dims).collect()
}
