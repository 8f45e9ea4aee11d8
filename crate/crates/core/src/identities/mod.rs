//! Verification engine for the closed-form identities of the bicomplex
//! third-order Jacobsthal quaternions. Every identity in the registry
//! compares a definitional computation (windows of sequence terms,
//! exact products) against a candidate closed form, and returns a typed
//! report instead of asserting: some catalog formulas are genuinely
//! false and are registered with that expectation, each carrying its
//! minimal counterexample, next to a corrected variant that is proved.
//!
//! Two proof strengths appear. Single-index identities are decided for
//! every n at once through the exponential-polynomial normal form of
//! [`exp_poly`]; two-index identities are checked exactly on a finite
//! grid and say so in their reports.

pub mod checks;
pub mod exp_poly;
pub mod report;

use std::fmt;

pub use report::{IdentityReport, Verdict};

/// Ranges used by the grid-based checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridParams {
    /// Upper bound for two-index grids: n runs below this value.
    pub grid_n: u64,
    /// Width of the second index window: m runs over n+1 ..= n+gap.
    pub gap: u64,
    /// Inclusive upper bound for single-index grid checks.
    pub unary_n: u64,
    /// Number of power-series coefficients compared.
    pub series_n: usize,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            grid_n: 30,
            gap: 30,
            unary_n: 200,
            series_n: 64,
        }
    }
}

/// Outcome the arithmetic supports for a registered identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Holds,
    Refuted,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Holds => "holds",
            Expected::Refuted => "refuted",
        })
    }
}

/// A named identity check together with its recorded expectation.
#[derive(Debug)]
pub struct IdentityEntry {
    pub name: &'static str,
    pub expected: Expected,
    pub run: fn(&GridParams) -> IdentityReport,
}

/// All identity checks in a fixed, documented order.
pub const REGISTRY: &[IdentityEntry] = &[
    IdentityEntry {
        name: "conj_product_i",
        expected: Expected::Holds,
        run: checks::conj_product_i,
    },
    IdentityEntry {
        name: "conj_product_j",
        expected: Expected::Holds,
        run: checks::conj_product_j,
    },
    IdentityEntry {
        name: "conj_product_ij",
        expected: Expected::Holds,
        run: checks::conj_product_ij,
    },
    IdentityEntry {
        name: "norm_i",
        expected: Expected::Refuted,
        run: checks::norm_i,
    },
    IdentityEntry {
        name: "norm_j",
        expected: Expected::Holds,
        run: checks::norm_j,
    },
    IdentityEntry {
        name: "norm_ij",
        expected: Expected::Holds,
        run: checks::norm_ij,
    },
    IdentityEntry {
        name: "sum_theorem",
        expected: Expected::Holds,
        run: checks::sum_theorem,
    },
    IdentityEntry {
        name: "genfun",
        expected: Expected::Holds,
        run: checks::genfun,
    },
    IdentityEntry {
        name: "partial_fractions",
        expected: Expected::Holds,
        run: checks::partial_fractions,
    },
    IdentityEntry {
        name: "binet",
        expected: Expected::Holds,
        run: checks::binet,
    },
    IdentityEntry {
        name: "binet_compact",
        expected: Expected::Holds,
        run: checks::binet_compact,
    },
    IdentityEntry {
        name: "binet_scalar",
        expected: Expected::Holds,
        run: checks::binet_scalar,
    },
    IdentityEntry {
        name: "vsum_zero",
        expected: Expected::Holds,
        run: checks::vsum_zero,
    },
    IdentityEntry {
        name: "quadratic_approx",
        expected: Expected::Holds,
        run: checks::quadratic_approx,
    },
    IdentityEntry {
        name: "docagne",
        expected: Expected::Refuted,
        run: checks::docagne,
    },
    IdentityEntry {
        name: "cassini",
        expected: Expected::Refuted,
        run: checks::cassini,
    },
    IdentityEntry {
        name: "sum_squares",
        expected: Expected::Refuted,
        run: checks::sum_squares,
    },
    IdentityEntry {
        name: "bcv_squares_const",
        expected: Expected::Holds,
        run: checks::bcv_squares_const,
    },
    IdentityEntry {
        name: "docagne_corrected",
        expected: Expected::Holds,
        run: checks::docagne_corrected,
    },
    IdentityEntry {
        name: "cassini_corrected",
        expected: Expected::Holds,
        run: checks::cassini_corrected,
    },
    IdentityEntry {
        name: "sum_squares_corrected",
        expected: Expected::Holds,
        run: checks::sum_squares_corrected,
    },
    IdentityEntry {
        name: "docagne_cassini_link",
        expected: Expected::Refuted,
        run: checks::docagne_cassini_link,
    },
    IdentityEntry {
        name: "docagne_cassini_link_corrected",
        expected: Expected::Holds,
        run: checks::docagne_cassini_link_corrected,
    },
];

/// Looks up one registry entry by name.
pub fn find(name: &str) -> Option<&'static IdentityEntry> {
    REGISTRY.iter().find(|entry| entry.name == name)
}

/// Resolves a list of names, in the order given, rejecting the first
/// unknown one before any check runs.
pub fn select(names: &[String]) -> Result<Vec<&'static IdentityEntry>, String> {
    names
        .iter()
        .map(|name| find(name).ok_or_else(|| name.clone()))
        .collect()
}

/// Runs every registered check with the given ranges, in registry order.
pub fn verify_all(params: &GridParams) -> Vec<IdentityReport> {
    REGISTRY.iter().map(|entry| (entry.run)(params)).collect()
}

/// True when a result contradicts the recorded expectation in the
/// direction that signals a broken build: an identity expected to hold
/// came back refuted.
pub fn is_regression(entry: &IdentityEntry, report: &IdentityReport) -> bool {
    entry.expected == Expected::Holds && report.verdict == Verdict::Refuted
}
