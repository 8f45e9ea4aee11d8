//! Timing harness over the interchangeable term-computation strategies.
//! Correctness comes first: every strategy is cross-checked against the
//! plain recurrence before any clock starts, and a disagreement aborts
//! the whole run naming the strategy and index, so timings can never be
//! reported for wrong arithmetic. Determinant evaluation is capped
//! because its cost grows cubically with the matrix order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bcq::{bcj, bcj_binet, bcj_iter, Bc};
use crate::detmat::bcj_via_det;

/// Largest index the determinant strategy is asked to reach.
pub const DET_CAP: u64 = 64;

/// One way of computing sequence terms.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Recurrence,
    Matpow,
    Binet,
    Det,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Recurrence,
        Strategy::Matpow,
        Strategy::Binet,
        Strategy::Det,
    ];

    fn compute_all(self, limit: u64) -> Vec<Bc> {
        let count = limit as usize + 1;
        match self {
            Strategy::Recurrence => bcj_iter().take(count).collect(),
            Strategy::Matpow => (0..=limit).map(bcj).collect(),
            Strategy::Binet => (0..=limit).map(bcj_binet).collect(),
            Strategy::Det => (0..=limit).map(bcj_via_det).collect(),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Recurrence => "recurrence",
            Strategy::Matpow => "matpow",
            Strategy::Binet => "binet",
            Strategy::Det => "det",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrence" => Ok(Strategy::Recurrence),
            "matpow" => Ok(Strategy::Matpow),
            "binet" => Ok(Strategy::Binet),
            "det" => Ok(Strategy::Det),
            other => Err(format!(
                "unknown strategy '{other}' (expected recurrence, matpow, binet, or det)"
            )),
        }
    }
}

/// Timing result for one strategy after its cross-check passed.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub strategy: Strategy,
    /// Number of terms the strategy computed, including index 0.
    pub terms: u64,
    /// Wall-clock milliseconds for the timed pass; not deterministic.
    pub wall_ms: u128,
    /// Always true in emitted rows: disagreement aborts instead.
    pub agree: bool,
}

/// Cross-checks every requested strategy against the recurrence up to
/// n_max (the determinant route up to its cap), then times each one. A
/// mismatch aborts with the offending strategy and index.
pub fn run(n_max: u64, strategies: &[Strategy]) -> Result<Vec<BenchRow>, (Strategy, u64)> {
    let reference: Vec<Bc> = bcj_iter().take(n_max as usize + 1).collect();
    let mut rows = Vec::new();
    for &strategy in strategies {
        let limit = match strategy {
            Strategy::Det => n_max.min(DET_CAP),
            _ => n_max,
        };
        let values = strategy.compute_all(limit);
        for (n, value) in values.iter().enumerate() {
            if *value != reference[n] {
                return Err((strategy, n as u64));
            }
        }
        let started = Instant::now();
        std::hint::black_box(strategy.compute_all(limit));
        let wall_ms = started.elapsed().as_millis();
        rows.push(BenchRow {
            strategy,
            terms: limit + 1,
            wall_ms,
            agree: true,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategy_names_round_trip() {
        for strategy in Strategy::ALL {
            assert_eq!(strategy.to_string().parse::<Strategy>(), Ok(strategy));
        }
        assert!("fastest".parse::<Strategy>().is_err());
        assert_eq!(
            serde_json::to_string(&Strategy::Matpow).unwrap(),
            "\"matpow\""
        );
    }

    #[test]
    fn all_strategies_agree_on_a_short_run() {
        let rows = run(40, &Strategy::ALL).expect("strategies agree");
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert!(row.agree);
            assert_eq!(row.terms, 41);
        }
    }

    #[test]
    fn determinant_terms_are_capped() {
        let rows = run(70, &[Strategy::Det, Strategy::Binet]).expect("strategies agree");
        assert_eq!(rows[0].terms, DET_CAP + 1);
        assert_eq!(rows[1].terms, 71);
    }
}
