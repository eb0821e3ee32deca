//! The full verification suite behind `koszulkt verify`.

use crate::cartan::{weyl_dimension, CartanDatum, Weight};
use crate::koszul::{d_squared_violation, homotopy_violation, truncated_exactness, Fault, KoszulComplex};
use crate::ktheory::{
    image_invariance_violation, invariant_part_window, k_groups, verify_injectivity, CheckResult, KTheoryReport,
    WINDOW_MAX_RANK,
};
use crate::repring::character;
use crate::{Error, Result, SCHEMA_VERSION};
use num_bigint::BigInt;
use serde::Serialize;

/// Summary of a Cartan type, as printed by `koszulkt describe`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Description {
    pub schema_version: String,
    #[serde(rename = "type")]
    pub type_string: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: usize,
    #[serde(serialize_with = "crate::homology::serialize_bigint")]
    pub weyl_group_order: BigInt,
    #[serde(serialize_with = "crate::homology::serialize_bigints")]
    pub fundamental_dims: Vec<BigInt>,
    pub resolution_ranks: Vec<usize>,
}

pub fn describe(datum: &CartanDatum) -> Description {
    Description {
        schema_version: SCHEMA_VERSION.to_string(),
        type_string: datum.type_string(),
        rank: datum.rank(),
        cartan_matrix: datum.cartan_matrix().to_vec(),
        positive_roots: datum.positive_roots().len(),
        weyl_group_order: datum.weyl_group_order(),
        fundamental_dims: datum.fundamental_dimensions(),
        resolution_ranks: crate::ktheory::resolution_ranks(datum.rank()).expect("rank is positive"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest total `y`-degree of the graded pieces checked for exactness.
    pub max_y_degree: u32,
    pub homotopy_degree: u32,
    pub injectivity_degree: u32,
    pub window_cap: u32,
    /// Degree of the monomial multipliers used in the `d o d` check.
    pub d_squared_degree: u32,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_y_degree: 4,
            homotopy_degree: 5,
            injectivity_degree: 3,
            window_cap: 3,
            d_squared_degree: 1,
            fault: None,
        }
    }
}

/// Cap errors abort the run; mathematical inconsistencies become failures.
fn settle(r: Result<CheckResult>) -> Result<CheckResult> {
    match r {
        Ok(c) => Ok(c),
        Err(e @ (Error::Inconsistent(_) | Error::NotAComplex)) => Ok(CheckResult::fail(e.to_string())),
        Err(e) => Err(e),
    }
}

pub fn check_characters(datum: &CartanDatum) -> Result<CheckResult> {
    let n = datum.rank();
    for j in 0..n {
        let lambda = Weight::fundamental(n, j);
        let total = character(datum, &lambda)?.coefficient_sum();
        let dim = weyl_dimension(datum, &lambda)?;
        if total != dim {
            return Ok(CheckResult::fail(format!(
                "character of w{} has {total} weights with multiplicity, Weyl dimension is {dim}",
                j + 1
            )));
        }
    }
    Ok(CheckResult::pass(format!("{n} fundamental characters match the Weyl dimension formula")))
}

pub fn check_d_squared(cx: &KoszulComplex, degree: u32) -> Result<CheckResult> {
    let v = d_squared_violation(cx, degree)?;
    Ok(CheckResult::from_violation(
        v,
        format!("d o d = 0 and eps o d = 0 on basis elements times monomials of degree <= {degree}"),
    ))
}

pub fn check_exactness(cx: &KoszulComplex, max_y_degree: u32) -> Result<CheckResult> {
    let report = truncated_exactness(cx, max_y_degree as usize)?;
    if report.exact {
        return Ok(CheckResult::pass(format!(
            "{} graded homology groups trivial up to y-degree {max_y_degree}",
            report.entries.len()
        )));
    }
    let bad = report.entries.iter().find(|e| !e.group.is_trivial()).expect("inexact report has a witness");
    Ok(CheckResult::fail(format!("homology {} at position {} in y-degree {}", bad.group, bad.position, bad.y_degree)))
}

pub fn check_homotopy(cx: &KoszulComplex, degree: u32) -> Result<CheckResult> {
    let v = homotopy_violation(cx, degree)?;
    Ok(CheckResult::from_violation(v, format!("ds + sd = 1 - eta eps on every y^a e_S with |a| <= {degree}")))
}

pub fn check_invariance(datum: &CartanDatum) -> Result<CheckResult> {
    let v = image_invariance_violation(datum)?;
    Ok(CheckResult::from_violation(v, "every comparison image is Weyl invariant"))
}

pub fn check_injectivity(datum: &CartanDatum, degree: u32) -> Result<CheckResult> {
    for k in 0..=datum.rank() {
        let r = verify_injectivity(datum, k, degree)?;
        if r.kernel_rank != 0 {
            return Ok(CheckResult::fail(format!(
                "kernel of rank {} in degree {k}: {}",
                r.kernel_rank,
                r.kernel_witness.unwrap_or_default()
            )));
        }
    }
    Ok(CheckResult::pass(format!("trivial kernel for coefficients of degree <= {degree}")))
}

pub fn check_window(datum: &CartanDatum, cap: u32) -> Result<CheckResult> {
    if datum.rank() > WINDOW_MAX_RANK {
        return Ok(CheckResult::skipped(format!("window check runs only for rank <= {WINDOW_MAX_RANK}")));
    }
    let mut sizes = Vec::new();
    for k in 0..=datum.rank() {
        let r = invariant_part_window(datum, k, cap)?;
        if let Some(pos) = r.members.iter().position(|&m| !m) {
            return Ok(CheckResult::fail(format!(
                "invariant {} is not in the image within the window",
                r.invariant_basis[pos]
            )));
        }
        sizes.push(r.invariant_basis.len().to_string());
    }
    Ok(CheckResult::pass(format!(
        "window-relative: invariant bases of sizes [{}] lie in the image for |weight| <= {cap}",
        sizes.join(", ")
    )))
}

/// Runs every check in order and records the results in a [`KTheoryReport`].
pub fn run_verification(datum: &CartanDatum, cfg: &VerifyConfig) -> Result<KTheoryReport> {
    let mut report = k_groups(datum);
    let cx = KoszulComplex::new(datum.clone()).with_fault(cfg.fault);
    let checks = &mut report.checks;
    checks.characters = settle(check_characters(datum))?;
    checks.d_squared = settle(check_d_squared(&cx, cfg.d_squared_degree))?;
    checks.exactness = settle(check_exactness(&cx, cfg.max_y_degree))?;
    checks.homotopy = settle(check_homotopy(&cx, cfg.homotopy_degree))?;
    checks.invariance = settle(check_invariance(datum))?;
    checks.injectivity = settle(check_injectivity(datum, cfg.injectivity_degree))?;
    checks.window = settle(check_window(datum, cfg.window_cap))?;
    Ok(report)
}
