//! Even/odd K-groups from the Koszul resolution, together with the comparison
//! map into Weyl-invariant differential forms on the maximal torus.
//!
//! The groups are free `R(K)`-modules, so they are reported by rank and by the
//! generating wedge monomials `e_{i_1} ^ ... ^ e_{i_k}`, split by the parity of `k`.

mod comparison;
mod forms;
mod window;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cartan::CartanDatum;
use crate::koszul::{binomial, subsets};
use crate::{Error, Result, SCHEMA_VERSION};

pub use comparison::{
    comparison_map, form_is_invariant, image_invariance_violation, verify_image_invariance, verify_injectivity,
    ComparisonMap, InjectivityReport,
};
pub use forms::{exterior_derivative, formal_differential, weyl_action_on_form, TorusForm};
pub use window::{invariant_part_window, WindowReport, WINDOW_MAX_RANK};

/// `[binom(N, 0), ..., binom(N, N)]`.
pub fn resolution_ranks(n: usize) -> Result<Vec<usize>> {
    if n < 1 {
        return Err(Error::InvalidDegree { degree: n, reason: "rank must be at least 1".into() });
    }
    Ok((0..=n).map(|k| binomial(n, k)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Entry {
    pub m: usize,
    /// Degree mod 2.
    pub parity: u8,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct D1Flag {
    /// Source column; the map runs `E1_{m,*} -> E1_{m-1,*}`.
    pub m: usize,
    pub trivial: bool,
}

/// The first page of the spectral sequence of the resolution, as free `R(K)`-module ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralPage {
    pub entries: Vec<E1Entry>,
    pub differentials: Vec<D1Flag>,
    pub justification: String,
}

impl SpectralPage {
    pub fn rank(&self, m: usize, parity: u8) -> Option<usize> {
        self.entries.iter().find(|e| e.m == m && e.parity == parity).map(|e| e.rank)
    }

    pub fn all_trivial(&self) -> bool {
        self.differentials.iter().all(|d| d.trivial)
    }
}

pub fn e1_page(datum: &CartanDatum) -> SpectralPage {
    let ranks = resolution_ranks(datum.rank()).expect("rank is positive");
    let entries = ranks
        .iter()
        .enumerate()
        .flat_map(|(m, &r)| [E1Entry { m, parity: 0, rank: r }, E1Entry { m, parity: 1, rank: 0 }])
        .collect();
    let differentials = (1..ranks.len()).map(|m| D1Flag { m, trivial: true }).collect();
    SpectralPage {
        entries,
        differentials,
        justification: "each term is a crossed product by a homogeneous space, Morita equivalent to C*(K), \
                        whose K-theory is even and free; the induced d1 vanish"
            .into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    NotRun,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(detail: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Pass, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Fail, detail: detail.into() }
    }

    pub fn skipped(detail: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Skipped, detail: detail.into() }
    }

    pub fn not_run() -> Self {
        CheckResult { status: CheckStatus::NotRun, detail: String::new() }
    }

    pub fn from_violation(violation: Option<String>, ok: impl Into<String>) -> Self {
        match violation {
            None => CheckResult::pass(ok),
            Some(v) => CheckResult::fail(v),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub characters: CheckResult,
    pub d_squared: CheckResult,
    pub exactness: CheckResult,
    pub homotopy: CheckResult,
    pub invariance: CheckResult,
    pub injectivity: CheckResult,
    pub window: CheckResult,
}

impl Checks {
    pub fn not_run() -> Self {
        Checks {
            characters: CheckResult::not_run(),
            d_squared: CheckResult::not_run(),
            exactness: CheckResult::not_run(),
            homotopy: CheckResult::not_run(),
            invariance: CheckResult::not_run(),
            injectivity: CheckResult::not_run(),
            window: CheckResult::not_run(),
        }
    }

    /// Checks in execution order.
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &CheckResult)> {
        [
            ("characters", &self.characters),
            ("d_squared", &self.d_squared),
            ("exactness", &self.exactness),
            ("homotopy", &self.homotopy),
            ("invariance", &self.invariance),
            ("injectivity", &self.injectivity),
            ("window", &self.window),
        ]
        .into_iter()
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.iter().find(|(_, c)| c.failed()).map(|(name, _)| name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KTheoryReport {
    pub schema_version: String,
    #[serde(rename = "type")]
    pub type_string: String,
    pub rank: usize,
    #[serde(serialize_with = "crate::homology::serialize_bigints")]
    pub fundamental_dims: Vec<BigInt>,
    pub resolution_ranks: Vec<usize>,
    pub k0_rank: usize,
    pub k1_rank: usize,
    /// 1-based index tuples of the even wedge generators.
    pub generators_even: Vec<Vec<usize>>,
    pub generators_odd: Vec<Vec<usize>>,
    pub e1_page: SpectralPage,
    pub checks: Checks,
}

/// Generators of `Lambda^k` for every `k` with the given parity, 1-based.
fn generators(n: usize, parity: usize) -> Vec<Vec<usize>> {
    (0..=n)
        .filter(|k| k % 2 == parity)
        .flat_map(|k| subsets(n, k))
        .map(|t| t.into_iter().map(|i| i + 1).collect())
        .collect()
}

/// `K_0` and `K_1` as free `R(K)`-modules. Checks are left as `not_run`.
pub fn k_groups(datum: &CartanDatum) -> KTheoryReport {
    let n = datum.rank();
    let generators_even = generators(n, 0);
    let generators_odd = generators(n, 1);
    KTheoryReport {
        schema_version: SCHEMA_VERSION.to_string(),
        type_string: datum.type_string(),
        rank: n,
        fundamental_dims: datum.fundamental_dimensions(),
        resolution_ranks: resolution_ranks(n).expect("rank is positive"),
        k0_rank: generators_even.len(),
        k1_rank: generators_odd.len(),
        generators_even,
        generators_odd,
        e1_page: e1_page(datum),
        checks: Checks::not_run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        CartanDatum::from_type_str(s).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(resolution_ranks(1).unwrap(), vec![1, 1]);
        assert_eq!(resolution_ranks(2).unwrap(), vec![1, 2, 1]);
        assert_eq!(resolution_ranks(3).unwrap(), vec![1, 3, 3, 1]);
        assert!(resolution_ranks(0).is_err());
    }

    #[test]
    fn page() {
        let p = e1_page(&datum("A1"));
        assert_eq!((p.rank(0, 0), p.rank(1, 0), p.rank(1, 1)), (Some(1), Some(1), Some(0)));
        assert!(p.all_trivial());
        let p = e1_page(&datum("A2"));
        assert_eq!([0, 1, 2].map(|m| p.rank(m, 0).unwrap()), [1, 2, 1]);
    }

    #[test]
    fn groups() {
        let r = k_groups(&datum("A1"));
        assert_eq!((r.k0_rank, r.k1_rank), (1, 1));
        assert_eq!(r.generators_even, vec![Vec::<usize>::new()]);
        assert_eq!(r.generators_odd, vec![vec![1]]);
        let r = k_groups(&datum("A2"));
        assert_eq!(r.generators_even, vec![vec![], vec![1, 2]]);
        assert_eq!(r.generators_odd, vec![vec![1], vec![2]]);
        let r = k_groups(&datum("A3"));
        assert_eq!((r.k0_rank, r.k1_rank), (4, 4));
        assert_eq!(r.checks.first_failure(), None);
    }
}
