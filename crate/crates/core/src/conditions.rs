//! Degree and neighborhood-union parameters and the sufficient-condition
//! thresholds they are compared against.
//!
//! * `delta` is the minimum degree.
//! * `sigma` is the minimum of `d(u) + d(v)` over nonadjacent pairs.
//! * `nc` is the minimum of `|N(u) ∪ N(v)|` over nonadjacent pairs.
//!
//! On complete graphs there is no nonadjacent pair and both minima are
//! reported as [`Bound::Infinite`].

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{domain, DomainError};
use crate::graph::{Graph, Vertex};
use crate::structure::is_connected;

/// A minimum over a possibly empty set of pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(usize),
    Infinite,
}

impl Bound {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(v) => Some(v),
            Bound::Infinite => None,
        }
    }

    /// `self >= k`, with infinity dominating every integer.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Bound::Finite(v) => v >= k,
            Bound::Infinite => true,
        }
    }

    /// `2·self ≥ n − 1` in integers.
    pub fn half_of_n_minus_one(self, n: usize) -> bool {
        match self {
            Bound::Finite(v) => 2 * v + 1 >= n,
            Bound::Infinite => true,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            (Bound::Finite(_), Bound::Infinite) => Ordering::Less,
            (Bound::Infinite, Bound::Finite(_)) => Ordering::Greater,
            (Bound::Infinite, Bound::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(v) => s.serialize_u64(*v as u64),
            Bound::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub sigma: Bound,
    pub nc: Bound,
    /// `δ² ≥ 16n`.
    pub meets_thm12: bool,
    /// `σ ≥ n − 1` and `n ≥ 8`.
    pub meets_thm13: bool,
    /// `2·NC ≥ n − 1` and `n ≥ 270`.
    pub meets_thm15: bool,
    pub complete: bool,
}

impl ConditionReport {
    /// `2·NC ≥ n − 1`, ignoring the order threshold.
    pub fn nc_condition(&self) -> bool {
        self.nc.half_of_n_minus_one(self.n)
    }
}

/// Minimum order at which the neighborhood-union theorem applies.
pub const THM15_MIN_ORDER: usize = 270;
/// Minimum order at which the degree-sum theorem applies.
pub const THM13_MIN_ORDER: usize = 8;

/// `δ² ≥ 16n`, the integer form of `δ ≥ 4√n`.
pub fn dense_degree_condition(delta: usize, n: usize) -> bool {
    delta * delta >= 16 * n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PairMinima {
    sigma: usize,
    nc: usize,
    nc_pair: (Vertex, Vertex),
}

fn pair_minima(g: &Graph) -> Option<PairMinima> {
    let n = g.n();
    // Each row reports its own minima; rows are merged in vertex order so the
    // witness is the lexicographically least attaining pair.
    let rows: Vec<Option<PairMinima>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let nu = g.neighbor_bits(u);
            let du = g.degree(u);
            let mut best: Option<PairMinima> = None;
            for v in (u + 1)..n {
                if nu.contains(v) {
                    continue;
                }
                let union = du + g.degree(v) - nu.intersection_count(g.neighbor_bits(v));
                let sigma = du + g.degree(v);
                best = Some(match best {
                    None => PairMinima {
                        sigma,
                        nc: union,
                        nc_pair: (u, v),
                    },
                    Some(b) => PairMinima {
                        sigma: b.sigma.min(sigma),
                        nc: b.nc.min(union),
                        nc_pair: if union < b.nc { (u, v) } else { b.nc_pair },
                    },
                });
            }
            best
        })
        .collect();
    rows.into_iter().flatten().reduce(|a, b| PairMinima {
        sigma: a.sigma.min(b.sigma),
        nc: a.nc.min(b.nc),
        nc_pair: if b.nc < a.nc { b.nc_pair } else { a.nc_pair },
    })
}

pub fn condition_report(g: &Graph) -> Result<ConditionReport, DomainError> {
    if g.n() == 0 {
        return domain("condition_report: graph has no vertices");
    }
    if !is_connected(g) {
        return domain("condition_report: graph is disconnected");
    }
    Ok(report_unchecked(g))
}

pub(crate) fn report_unchecked(g: &Graph) -> ConditionReport {
    let n = g.n();
    let delta = g.min_degree();
    let (sigma, nc) = match pair_minima(g) {
        Some(p) => (Bound::Finite(p.sigma), Bound::Finite(p.nc)),
        None => (Bound::Infinite, Bound::Infinite),
    };
    ConditionReport {
        n,
        m: g.m(),
        delta,
        sigma,
        nc,
        meets_thm12: dense_degree_condition(delta, n),
        meets_thm13: n >= THM13_MIN_ORDER && sigma.at_least(n.saturating_sub(1)),
        meets_thm15: n >= THM15_MIN_ORDER && nc.half_of_n_minus_one(n),
        complete: sigma == Bound::Infinite,
    }
}

/// The lexicographically least nonadjacent pair attaining `NC(g)`.
pub fn nc_pair_witness(g: &Graph) -> Result<(Vertex, Vertex, usize), DomainError> {
    match pair_minima(g) {
        Some(p) => Ok((p.nc_pair.0, p.nc_pair.1, p.nc)),
        None => domain("nc_pair_witness: graph is complete"),
    }
}

/// Whether `σ ≥ n − 1 ⟹ 2·NC ≥ n − 1` holds on `g`.
pub fn implication_check(g: &Graph) -> bool {
    let r = report_unchecked(g);
    !r.sigma.at_least(r.n.saturating_sub(1)) || r.nc_condition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstructions::{generate_h, Family};

    #[test]
    fn petersen_values() {
        let r = condition_report(&Graph::petersen()).unwrap();
        assert_eq!((r.delta, r.sigma, r.nc), (3, Bound::Finite(6), Bound::Finite(5)));
        assert!(!r.meets_thm13);
        assert!(!r.meets_thm15);
        assert!(r.nc_condition());
        assert!(!r.complete);
    }

    #[test]
    fn complete_is_infinite() {
        let r = condition_report(&Graph::complete(4)).unwrap();
        assert_eq!((r.delta, r.sigma, r.nc), (3, Bound::Infinite, Bound::Infinite));
        assert!(r.complete);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["sigma"], "inf");
        assert_eq!(json["nc"], "inf");
        let single = condition_report(&Graph::complete(1)).unwrap();
        assert!(single.complete);
    }

    #[test]
    fn path_values() {
        let r = condition_report(&Graph::path(4)).unwrap();
        assert_eq!((r.delta, r.sigma, r.nc), (1, Bound::Finite(2), Bound::Finite(2)));
    }

    #[test]
    fn disconnected_rejected() {
        assert!(condition_report(&Graph::empty(2)).is_err());
        assert!(condition_report(&Graph::empty(0)).is_err());
    }

    #[test]
    fn witness_examples() {
        assert_eq!(nc_pair_witness(&Graph::path(4)).unwrap(), (0, 2, 2));
        let h1 = generate_h(Family::H1, 9, false).unwrap();
        assert_eq!(nc_pair_witness(&h1).unwrap(), (0, 2, 4));
        assert_eq!(nc_pair_witness(&Graph::cycle(5)).unwrap().2, 3);
        assert!(nc_pair_witness(&Graph::complete(3)).is_err());
    }

    #[test]
    fn implication_examples() {
        assert!(implication_check(&Graph::petersen()));
        assert!(implication_check(&Graph::complete(5)));
    }

    #[test]
    fn threshold_flags_are_integer_exact() {
        // δ = 8, n = 4: 64 ≥ 64.
        assert!(dense_degree_condition(8, 4));
        assert!(!dense_degree_condition(7, 4));
        assert!(Bound::Finite(4).half_of_n_minus_one(9));
        assert!(!Bound::Finite(4).half_of_n_minus_one(10));
    }
}
