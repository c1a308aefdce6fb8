//! Counts spanning trees and HISTs by exhaustive deletion and contraction.

use hist::hist::{oracle_enumerate, DEFAULT_CAP};
use hist::Graph;

fn main() {
    let cases = [
        ("K4", Graph::complete(4)),
        ("C4", Graph::cycle(4)),
        ("K_{1,12}", Graph::star(12)),
        ("Petersen", Graph::petersen()),
        ("K7", Graph::complete(7)),
    ];
    for (name, g) in cases {
        println!("{name:>9}: {:?}", oracle_enumerate(&g, DEFAULT_CAP).unwrap());
    }
}
