//! The `solve` pipeline on a handful of graphs, printing which stage
//! decided each one.

use hist::obstructions::{generate_h, Family};
use hist::sampling::nc_instance;
use hist::solve::{solve, SolveOptions};
use hist::Graph;

fn main() {
    let cases = [
        ("Petersen", Graph::petersen()),
        ("C5", Graph::cycle(5)),
        ("H2(9)", generate_h(Family::H2, 9, false).unwrap()),
        ("K8", Graph::complete(8)),
        ("G(300, 0.7)", nc_instance(300, 0.7, 1, 100).unwrap()),
    ];
    for (name, g) in cases {
        let r = solve(&g, &SolveOptions::default()).unwrap();
        println!(
            "{name:>12}: {:?} via {:?} ({} search nodes)",
            r.status, r.method, r.stats.nodes_explored
        );
    }
}
