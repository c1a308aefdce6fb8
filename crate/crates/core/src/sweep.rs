//! Batch runs over many small graphs: the full atlas of connected graphs, or
//! seeded random samples checked against a list of invariants.
//!
//! Graphs are processed in parallel; results are collected in input order,
//! so the summaries are identical from run to run.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::{canonical_code, connected_codes_upto, graph_from_code, CANON_MAX_ORDER};
use crate::conditions::{implication_check, report_unchecked};
use crate::error::DomainError;
use crate::graph::Graph;
use crate::hist::{exact_search, oracle_enumerate, SearchOutcome};
use crate::io::encode_graph6;
use crate::obstructions::match_family;
use crate::sampling::{prng, random_connected, shuffle_labels};
use crate::solve::{solve, SolveOptions, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepLimits {
    /// Node budget per exact search.
    pub budget: u64,
    /// Tree cap per oracle run.
    pub cap: u64,
}

impl Default for SweepLimits {
    fn default() -> Self {
        SweepLimits {
            budget: 10_000_000,
            cap: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub graphs: usize,
    pub with_hist: usize,
    pub agree: usize,
    pub disagree: usize,
    /// Graphs where the search ran out of budget or the oracle hit its cap.
    pub undecided: usize,
    /// Graphs with `2·NC ≥ n − 1` and no HIST, in graph6.
    pub nc_without_hist: Vec<String>,
    /// Graphs where search and oracle disagree, in graph6.
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtlasSummary {
    pub mode: &'static str,
    pub n_max: usize,
    pub graphs: usize,
    pub agreement_percent: f64,
    pub orders: Vec<OrderSummary>,
}

enum Verdict {
    Agree(bool),
    Disagree,
    Undecided,
}

fn compare(g: &Graph, limits: SweepLimits) -> Result<Verdict, DomainError> {
    let search = match exact_search(g, limits.budget)?.outcome {
        SearchOutcome::Found(_) => Some(true),
        SearchOutcome::NoHist => Some(false),
        SearchOutcome::BudgetExceeded => None,
    };
    let oracle = oracle_enumerate(g, limits.cap)?.has_hist();
    Ok(match (search, oracle) {
        (Some(a), Some(b)) if a == b => Verdict::Agree(a),
        (Some(_), Some(_)) => Verdict::Disagree,
        _ => Verdict::Undecided,
    })
}

/// Compares exact search with the oracle on every connected graph of order
/// `1..=n_max`.
pub fn atlas_sweep(n_max: usize, limits: SweepLimits) -> Result<AtlasSummary, DomainError> {
    let mut orders = Vec::new();
    for (i, codes) in connected_codes_upto(n_max)?.into_iter().enumerate() {
        let n = i + 1;
        let rows: Vec<(Verdict, bool, String)> = codes
            .par_iter()
            .map(|&c| {
                let g = graph_from_code(n, c);
                let verdict = compare(&g, limits)?;
                let nc = report_unchecked(&g).nc_condition();
                Ok((verdict, nc, encode_graph6(&g)))
            })
            .collect::<Result<_, DomainError>>()?;
        let mut s = OrderSummary {
            n,
            graphs: rows.len(),
            ..OrderSummary::default()
        };
        for (verdict, nc, g6) in rows {
            match verdict {
                Verdict::Agree(has) => {
                    s.agree += 1;
                    if has {
                        s.with_hist += 1;
                    } else if nc {
                        s.nc_without_hist.push(g6);
                    }
                }
                Verdict::Disagree => {
                    s.disagree += 1;
                    s.disagreements.push(g6);
                }
                Verdict::Undecided => s.undecided += 1,
            }
        }
        orders.push(s);
    }
    let graphs: usize = orders.iter().map(|o| o.graphs).sum();
    let agree: usize = orders.iter().map(|o| o.agree).sum();
    Ok(AtlasSummary {
        mode: "atlas",
        n_max,
        graphs,
        agreement_percent: if graphs == 0 { 100.0 } else { 100.0 * agree as f64 / graphs as f64 },
        orders,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sample: usize,
    pub graph6: String,
    pub invariant: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomSummary {
    pub mode: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub n_max: usize,
    pub with_hist: usize,
    pub without_hist: usize,
    pub undecided: usize,
    /// Samples where the oracle hit its cap and only `solve` decided.
    pub oracle_capped: usize,
    pub violations: Vec<Violation>,
}

/// Invariants checked on each sample:
///
/// * `σ ≥ n − 1` implies `2·NC ≥ n − 1`;
/// * `solve` succeeds and its decision matches the oracle;
/// * an obstruction certificate implies the oracle finds no HIST;
/// * the canonical code survives a relabeling.
fn check_sample(g: &Graph, seed: u64, limits: SweepLimits) -> (Option<bool>, bool, Vec<String>) {
    let mut bad = Vec::new();
    if !implication_check(g) {
        bad.push("sigma >= n-1 without 2NC >= n-1".to_string());
    }
    let oracle = oracle_enumerate(g, limits.cap).ok().and_then(|o| o.has_hist());
    let opts = SolveOptions {
        budget: limits.budget,
        seed,
        ..SolveOptions::default()
    };
    let decided = match solve(g, &opts) {
        Ok(r) => match r.status {
            Status::Hist => Some(true),
            Status::NoHist => Some(false),
            Status::Unknown => None,
        },
        Err(e) => {
            bad.push(format!("solve failed: {e}"));
            None
        }
    };
    if let (Some(a), Some(b)) = (decided, oracle) {
        if a != b {
            bad.push(format!("solve says {a}, oracle says {b}"));
        }
    }
    if match_family(g).is_obstruction() && oracle == Some(true) {
        bad.push("obstruction certificate on a graph with a HIST".to_string());
    }
    if g.n() <= CANON_MAX_ORDER {
        let h = shuffle_labels(g, seed);
        if canonical_code(g).ok() != canonical_code(&h).ok() {
            bad.push("canonical code changed under relabeling".to_string());
        }
    }
    (decided.or(oracle), oracle.is_none(), bad)
}

/// Checks the invariants on `samples` random connected graphs with
/// `2 ≤ n ≤ n_max`.
pub fn random_sweep(
    samples: usize,
    n_max: usize,
    seed: u64,
    limits: SweepLimits,
) -> Result<RandomSummary, DomainError> {
    if !(2..=crate::hist::ORACLE_MAX_ORDER).contains(&n_max) {
        return Err(DomainError::new("random_sweep: n_max must lie in 2..=128"));
    }
    let mut rng = prng(seed);
    let plan: Vec<(usize, f64, u64)> = (0..samples)
        .map(|_| (rng.random_range(2..=n_max), rng.random_range(0.25..0.9), rng.random()))
        .collect();
    let rows: Vec<(String, Option<bool>, bool, Vec<String>)> = plan
        .par_iter()
        .map(|&(n, p, s)| {
            let g = random_connected(n, p, s, 10_000)?;
            let (decided, capped, bad) = check_sample(&g, s, limits);
            Ok((encode_graph6(&g), decided, capped, bad))
        })
        .collect::<Result<_, DomainError>>()?;
    let mut summary = RandomSummary {
        mode: "random",
        seed,
        samples,
        n_max,
        with_hist: 0,
        without_hist: 0,
        undecided: 0,
        oracle_capped: 0,
        violations: Vec::new(),
    };
    for (i, (g6, decided, capped, bad)) in rows.into_iter().enumerate() {
        summary.oracle_capped += usize::from(capped);
        match decided {
            Some(true) => summary.with_hist += 1,
            Some(false) => summary.without_hist += 1,
            None => summary.undecided += 1,
        }
        summary.violations.extend(bad.into_iter().map(|invariant| Violation {
            sample: i,
            graph6: g6.clone(),
            invariant,
        }));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_atlas_agrees() {
        let s = atlas_sweep(6, SweepLimits::default()).unwrap();
        assert_eq!(s.graphs, 1 + 1 + 2 + 6 + 21 + 112);
        assert_eq!(s.agreement_percent, 100.0);
        // On four vertices: the star, the paw, the diamond and K4.
        let with: Vec<usize> = s.orders.iter().map(|o| o.with_hist).collect();
        assert_eq!(&with[..4], &[1, 1, 0, 4]);
    }

    #[test]
    fn random_is_clean_and_repeatable() {
        let a = random_sweep(60, 10, 5, SweepLimits::default()).unwrap();
        assert!(a.violations.is_empty(), "{:?}", a.violations);
        assert_eq!(a.undecided, 0);
        assert_eq!(a, random_sweep(60, 10, 5, SweepLimits::default()).unwrap());
    }
}
