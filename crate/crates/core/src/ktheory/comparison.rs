//! The comparison map from the exterior algebra over `R(K)` into differential
//! forms on the torus: `e_{i_1} ^ ... ^ e_{i_k} -> d chi_{i_1} ^ ... ^ d chi_{i_k}`,
//! semilinear over restriction.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::forms::{all_tuples, differential, weyl_action_on_form, TorusForm};
use crate::cartan::{weyl_group, CartanDatum};
use crate::homology::{sparse_kernel_basis, SparseColumn};
use crate::koszul::{binomial, subsets, wedge_label};
use crate::repring::{Monomial, Restriction};
use crate::{Error, Result};

/// The comparison map with its restriction cache.
#[derive(Debug, Clone)]
pub struct ComparisonMap {
    rank: usize,
    max_form_products: u64,
    restriction: Restriction,
    dchi: Vec<TorusForm>,
}

impl ComparisonMap {
    pub fn new(datum: &CartanDatum) -> Result<Self> {
        let restriction = Restriction::new(datum)?;
        let dchi = (0..datum.rank()).map(|i| differential(restriction.generator(i))).collect();
        Ok(ComparisonMap { rank: datum.rank(), max_form_products: datum.limits().max_form_products, restriction, dchi })
    }

    fn check_tuple(&self, tuple: &[usize]) -> Result<()> {
        let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
        if !increasing || tuple.iter().any(|&i| i >= self.rank) {
            return Err(Error::InvalidTuple(tuple.to_vec()));
        }
        Ok(())
    }

    /// Image of the basis element `e_S` (0-based tuple).
    pub fn basis_image(&self, tuple: &[usize]) -> Result<TorusForm> {
        self.check_tuple(tuple)?;
        let mut out = TorusForm::function(crate::repring::LaurentWeightPoly::one(self.rank));
        for &i in tuple {
            let products = (out.coordinates().count() * self.dchi[i].coordinates().count()) as u64;
            if products > self.max_form_products {
                return Err(Error::cap(
                    format!("wedge for {} needing {products} coefficient products", wedge_label(tuple)),
                    self.max_form_products as usize,
                ));
            }
            out = out.wedge(&self.dchi[i]);
        }
        Ok(out)
    }

    /// Upper bound on the term products needed to expand `m * psi(e_S)` over
    /// the given tuples and monomials.
    pub fn expansion_estimate(&self, tuples: &[Vec<usize>], monomials: &[Monomial]) -> Result<f64> {
        let sizes: Vec<f64> = (0..self.rank).map(|i| self.restriction.generator(i).len() as f64).collect();
        let per_monomial: f64 = monomials
            .iter()
            .map(|m| m.exponents().iter().zip(&sizes).map(|(&e, &c)| c.powi(e as i32)).product::<f64>())
            .sum();
        let mut base = 0.0;
        for t in tuples {
            base += self.basis_image(t)?.coordinates().count() as f64;
        }
        Ok(base * per_monomial)
    }

    /// Image of `m * e_S` for a monomial `m` in the fundamental classes.
    pub fn image(&mut self, m: &Monomial, tuple: &[usize]) -> Result<TorusForm> {
        let base = self.basis_image(tuple)?;
        Ok(base.scale(&self.restriction.monomial(m)))
    }
}

/// `psi_k(e_S)`, expanded in the `dz` basis. `tuple` is 0-based and must have length `k`.
pub fn comparison_map(datum: &CartanDatum, k: usize, tuple: &[usize]) -> Result<TorusForm> {
    if tuple.len() != k {
        return Err(Error::InvalidTuple(tuple.to_vec()));
    }
    ComparisonMap::new(datum)?.basis_image(tuple)
}

/// True iff `x` is fixed by every Weyl group element.
pub fn form_is_invariant(datum: &CartanDatum, x: &TorusForm) -> Result<bool> {
    for w in weyl_group(datum)? {
        if &weyl_action_on_form(datum, w, x)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first basis image `psi_k(e_S)` moved by some Weyl element, if any.
pub fn image_invariance_violation(datum: &CartanDatum) -> Result<Option<String>> {
    let psi = ComparisonMap::new(datum)?;
    let group = weyl_group(datum)?;
    for tuple in all_tuples(datum.rank()) {
        let image = psi.basis_image(&tuple)?;
        let sweep = (group.len() * image.coordinates().count() * binomial(datum.rank(), tuple.len())) as u64;
        if sweep > datum.limits().max_form_products {
            return Err(Error::cap(
                format!("Weyl sweep over the image of {} needing {sweep} operations", wedge_label(&tuple)),
                datum.limits().max_form_products as usize,
            ));
        }
        for (idx, w) in group.iter().enumerate() {
            if weyl_action_on_form(datum, w, &image)? != image {
                return Ok(Some(format!(
                    "image of {} is moved by Weyl element #{idx} (length {})",
                    wedge_label(&tuple),
                    w.word_length()
                )));
            }
        }
    }
    Ok(None)
}

/// Checks that every `psi_k(e_S)` is fixed by every Weyl group element.
pub fn verify_image_invariance(datum: &CartanDatum) -> Result<bool> {
    Ok(image_invariance_violation(datum)?.is_none())
}

/// Kernel computation for the comparison map on a degree window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub k: usize,
    pub degree_cap: u32,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub kernel_rank: usize,
    /// A non-zero element of the kernel, as `sum coeff * w^a * e_S`.
    pub kernel_witness: Option<String>,
}

/// Matrix of `psi_k` on `{ m * e_S : |S| = k, deg m <= degree_cap }` and its kernel rank.
pub fn verify_injectivity(datum: &CartanDatum, k: usize, degree_cap: u32) -> Result<InjectivityReport> {
    let n = datum.rank();
    if k > n {
        return Err(Error::InvalidDegree { degree: k, reason: format!("exceeds the rank {n}") });
    }
    let mut psi = ComparisonMap::new(datum)?;
    let monomials = Monomial::up_to_degree(n, degree_cap);
    let work = psi.expansion_estimate(&subsets(n, k), &monomials)?;
    if work > datum.limits().max_product_terms as f64 {
        return Err(Error::cap(
            format!("comparison map expansion of about {work:.2e} term products"),
            usize::try_from(datum.limits().max_product_terms).unwrap_or(usize::MAX),
        ));
    }
    let domain: Vec<(Vec<usize>, Monomial)> =
        subsets(n, k).into_iter().flat_map(|s| monomials.iter().map(move |m| (s.clone(), m.clone()))).collect();
    let mut images = Vec::with_capacity(domain.len());
    for (s, m) in &domain {
        images.push(psi.image(m, s)?);
    }
    let coords: BTreeSet<(&Vec<usize>, &Vec<i64>)> =
        images.iter().flat_map(|x| x.coordinates().map(|(t, mu, _)| (t, mu))).collect();
    let row_of: HashMap<(&Vec<usize>, &Vec<i64>), usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let nonzeros: usize = images.iter().map(|x| x.coordinates().count()).sum();
    if nonzeros > datum.limits().max_matrix_cells {
        return Err(Error::cap(
            format!("comparison map with {nonzeros} non-zero entries"),
            datum.limits().max_matrix_cells,
        ));
    }
    let columns: Vec<SparseColumn> =
        images.iter().map(|x| x.coordinates().map(|(t, mu, c)| (row_of[&(t, mu)], c.clone())).collect()).collect();
    let kernel = sparse_kernel_basis(coords.len(), columns);
    let kernel_witness = kernel.first().map(|v| {
        let parts: Vec<String> = domain
            .iter()
            .zip(v)
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|((s, m), c)| {
                let p = crate::repring::RepRingPoly::monomial(m.clone(), c.clone());
                format!("({p})*{}", wedge_label(s))
            })
            .collect();
        parts.join(" + ")
    });
    Ok(InjectivityReport {
        k,
        degree_cap,
        domain_dim: domain.len(),
        codomain_dim: coords.len(),
        kernel_rank: kernel.len(),
        kernel_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktheory::forms::exterior_derivative;
    use crate::repring::LaurentWeightPoly;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_type_str(s).unwrap()
    }

    #[test]
    fn rank_one_image() {
        let d = datum("A1");
        let x = comparison_map(&d, 1, &[0]).unwrap();
        assert_eq!(x.coeff(&[0]), LaurentWeightPoly::parse("1 - z(-2)", 1).unwrap());
        assert_eq!(comparison_map(&d, 0, &[]).unwrap(), TorusForm::function(LaurentWeightPoly::one(1)));
        assert!(comparison_map(&d, 1, &[1]).is_err());
        assert!(comparison_map(&d, 2, &[0]).is_err());
    }

    #[test]
    fn top_degree_image_is_the_jacobian() {
        let d = datum("A2");
        let psi = ComparisonMap::new(&d).unwrap();
        let top = psi.basis_image(&[0, 1]).unwrap();
        let d1 = &psi.dchi[0];
        let d2 = &psi.dchi[1];
        let jac = &(&d1.coeff(&[0]) * &d2.coeff(&[1])) - &(&d1.coeff(&[1]) * &d2.coeff(&[0]));
        assert_eq!(top.coeff(&[0, 1]), jac);
        assert!(!jac.is_zero());
    }

    #[test]
    fn images_are_closed() {
        for s in ["A2", "B2"] {
            let d = datum(s);
            let psi = ComparisonMap::new(&d).unwrap();
            for tuple in all_tuples(2) {
                let x = psi.basis_image(&tuple).unwrap();
                assert!(exterior_derivative(&x).is_zero(), "{s} {tuple:?}");
            }
        }
    }

    #[test]
    fn invariance_small_types() {
        assert!(verify_image_invariance(&datum("A1")).unwrap());
        assert!(verify_image_invariance(&datum("A2")).unwrap());
    }

    #[test]
    fn injectivity_small_windows() {
        let r = verify_injectivity(&datum("A1"), 1, 3).unwrap();
        assert_eq!(r.kernel_rank, 0);
        assert_eq!(r.domain_dim, 4);
        let r = verify_injectivity(&datum("G2"), 0, 0).unwrap();
        assert_eq!((r.domain_dim, r.kernel_rank), (1, 0));
        assert!(verify_injectivity(&datum("A1"), 2, 0).is_err());
    }
}
