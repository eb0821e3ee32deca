use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::comparison::ComparisonMap;
use super::forms::{weyl_action_on_form, TorusForm};
use crate::cartan::CartanDatum;
use crate::homology::{hermite_basis, kernel_basis, solve_integer, IntMatrix};
use crate::koszul::subsets;
use crate::repring::{LaurentWeightPoly, Monomial};
use crate::{Error, Result};

/// Largest rank accepted by [`invariant_part_window`].
pub const WINDOW_MAX_RANK: usize = 2;

/// Result of a window-relative comparison between Weyl-invariant forms and the
/// image of the comparison map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    #[serde(rename = "type")]
    pub type_string: String,
    pub k: usize,
    pub weight_cap: u32,
    pub window_size: usize,
    /// Hermite-reduced basis of the invariant forms supported in the window.
    pub invariant_basis: Vec<TorusForm>,
    /// Membership of each basis element in the projected image.
    pub members: Vec<bool>,
    pub all_in_image: bool,
    /// Total degree bound on the coefficient polynomials of the image generators.
    pub generator_degree: u32,
    pub scope: String,
}

type Coord = (Vec<usize>, Vec<i64>);

/// Weights with every coordinate in `[-cap, cap]`, in descending lexicographic order.
fn window_weights(rank: usize, cap: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-cap..=cap).rev().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn coordinate_form(rank: usize, (tuple, mu): &Coord) -> TorusForm {
    TorusForm::basis(rank, tuple).expect("window tuples are valid").scale(&LaurentWeightPoly::term(mu.clone(), 1))
}

fn form_from_vector(rank: usize, degree: usize, coords: &[Coord], v: &[BigInt]) -> TorusForm {
    let mut x = TorusForm::zero(rank, degree);
    for ((tuple, mu), c) in coords.iter().zip(v) {
        if !c.is_zero() {
            x.add_term(tuple, LaurentWeightPoly::term(mu.clone(), c.clone())).expect("window tuples are valid");
        }
    }
    x
}

/// Solves the Weyl fixed-point equations over `Z` for degree-`k` forms whose
/// coefficients are supported in `|mu_i| <= weight_cap`, and tests each basis
/// element for membership in the span of the comparison-map images
/// `restrict(m) * psi_k(e_S)`, `deg m <= rank * weight_cap`, projected onto the window.
pub fn invariant_part_window(datum: &CartanDatum, k: usize, weight_cap: u32) -> Result<WindowReport> {
    let n = datum.rank();
    if n > WINDOW_MAX_RANK {
        return Err(Error::Unsupported(format!("window computation needs rank <= {WINDOW_MAX_RANK}, got {n}")));
    }
    if k > n {
        return Err(Error::InvalidDegree { degree: k, reason: format!("exceeds the rank {n}") });
    }
    let cap = i64::from(weight_cap);
    let tuples = subsets(n, k);
    let coords: Vec<Coord> =
        tuples.iter().flat_map(|t| window_weights(n, cap).into_iter().map(move |mu| (t.clone(), mu))).collect();
    let index: BTreeMap<&Coord, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();

    // (s_i - 1) applied to each window coordinate, for every simple reflection.
    let reflections: Vec<_> = (0..n).map(|i| datum.simple_reflection(i)).collect();
    let mut columns: Vec<BTreeMap<(usize, Coord), BigInt>> = Vec::with_capacity(coords.len());
    let mut targets = BTreeSet::new();
    for c in &coords {
        let x = coordinate_form(n, c);
        let mut col = BTreeMap::new();
        for (i, s) in reflections.iter().enumerate() {
            let moved = weyl_action_on_form(datum, s, &x)?;
            let mut diff: BTreeMap<Coord, BigInt> = BTreeMap::new();
            for (t, mu, v) in moved.coordinates() {
                *diff.entry((t.clone(), mu.clone())).or_default() += v;
            }
            *diff.entry(c.clone()).or_default() -= 1;
            for (coord, v) in diff {
                if !v.is_zero() {
                    targets.insert((i, coord.clone()));
                    col.insert((i, coord), v);
                }
            }
        }
        columns.push(col);
    }
    datum.limits().check_cells("window fixed-point system", targets.len(), coords.len())?;
    let row_of: BTreeMap<&(usize, Coord), usize> = targets.iter().enumerate().map(|(r, t)| (t, r)).collect();
    let mut equations = IntMatrix::zeros(targets.len(), coords.len());
    for (j, col) in columns.iter().enumerate() {
        for (t, v) in col {
            equations[(row_of[t], j)] = v.clone();
        }
    }
    let basis = hermite_basis(&kernel_basis(&equations), coords.len());

    let generator_degree = weight_cap.saturating_mul(n as u32);
    let mut psi = ComparisonMap::new(datum)?;
    let monomials = Monomial::up_to_degree(n, generator_degree);
    let gen_count = tuples.len() * monomials.len();
    datum.limits().check_cells("window image generators", coords.len(), gen_count)?;
    let mut generators = IntMatrix::zeros(coords.len(), gen_count);
    let mut col = 0;
    for t in &tuples {
        for m in &monomials {
            let image = psi.image(m, t)?;
            for (tt, mu, v) in image.coordinates() {
                if let Some(&row) = index.get(&(tt.clone(), mu.clone())) {
                    generators[(row, col)] = v.clone();
                }
            }
            col += 1;
        }
    }
    let mut members = Vec::with_capacity(basis.len());
    for v in &basis {
        members.push(solve_integer(&generators, v)?.is_some());
    }

    Ok(WindowReport {
        type_string: datum.type_string(),
        k,
        weight_cap,
        window_size: coords.len(),
        invariant_basis: basis.iter().map(|v| form_from_vector(n, k, &coords, v)).collect(),
        all_in_image: members.iter().all(|&b| b),
        members,
        generator_degree,
        scope: "window-relative".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::comparison::form_is_invariant;

    fn lp(s: &str, n: usize) -> LaurentWeightPoly {
        LaurentWeightPoly::parse(s, n).unwrap()
    }

    #[test]
    fn weights_descend() {
        let w = window_weights(2, 1);
        assert_eq!(w.len(), 9);
        assert_eq!(w[0], vec![1, 1]);
        assert_eq!(w[8], vec![-1, -1]);
    }

    #[test]
    fn a1_functions() {
        let d = CartanDatum::from_type_str("A1").unwrap();
        let r = invariant_part_window(&d, 0, 2).unwrap();
        let got: Vec<LaurentWeightPoly> = r.invariant_basis.iter().map(|x| x.coeff(&[])).collect();
        assert_eq!(got, vec![lp("z(2) + z(-2)", 1), lp("z(1) + z(-1)", 1), lp("1", 1)]);
        assert!(r.all_in_image);
        assert_eq!(r.window_size, 5);
    }

    #[test]
    fn a1_one_forms() {
        let d = CartanDatum::from_type_str("A1").unwrap();
        let r = invariant_part_window(&d, 1, 2).unwrap();
        assert_eq!(r.invariant_basis.len(), 1);
        assert_eq!(r.invariant_basis[0].coeff(&[0]), lp("1 - z(-2)", 1));
        assert!(r.all_in_image);
    }

    #[test]
    fn basis_elements_are_invariant() {
        for s in ["A2", "B2"] {
            let d = CartanDatum::from_type_str(s).unwrap();
            for k in 0..=2 {
                let r = invariant_part_window(&d, k, 2).unwrap();
                for x in &r.invariant_basis {
                    assert!(form_is_invariant(&d, x).unwrap(), "{s} k={k} {x}");
                }
                assert!(r.all_in_image, "{s} k={k}");
            }
        }
    }

    #[test]
    fn rank_guard() {
        let d = CartanDatum::from_type_str("A3").unwrap();
        assert!(matches!(invariant_part_window(&d, 0, 1), Err(Error::Unsupported(_))));
    }
}
