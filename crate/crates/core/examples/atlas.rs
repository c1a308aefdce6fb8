//! Enumerates the connected graphs on up to eight vertices up to
//! isomorphism and counts those with a HIST.

use hist::atlas::connected_graphs;
use hist::hist::{exact_search, SearchOutcome};

fn main() {
    for n in 1..=8 {
        let graphs = connected_graphs(n).unwrap();
        let with = graphs
            .iter()
            .filter(|g| matches!(exact_search(g, u64::MAX).unwrap().outcome, SearchOutcome::Found(_)))
            .count();
        println!("n = {n}: {:6} connected graphs, {:6} with a HIST", graphs.len(), with);
    }
}
