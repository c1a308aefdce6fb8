//! Branch-and-bound HIST search, checked against the exhaustive oracle on
//! random graphs.

use hist::hist::{exact_search, oracle_enumerate, verify_hist, SearchOutcome, DEFAULT_CAP};
use hist::sampling::random_connected;

fn main() {
    let mut found = 0;
    for seed in 0..200 {
        let g = random_connected(10, 0.35, seed, 1000).unwrap();
        let r = exact_search(&g, 1_000_000).unwrap();
        let oracle = oracle_enumerate(&g, DEFAULT_CAP).unwrap().has_hist();
        let has = match &r.outcome {
            SearchOutcome::Found(t) => {
                assert!(verify_hist(&g, t));
                true
            }
            SearchOutcome::NoHist => false,
            SearchOutcome::BudgetExceeded => unreachable!("10 vertices fit any budget"),
        };
        assert_eq!(Some(has), oracle, "seed {seed}");
        found += usize::from(has);
    }
    println!("200 random graphs on 10 vertices: {found} with a HIST, all agree with the oracle");
}
