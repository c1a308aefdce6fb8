//! Verification reports the first defect of a candidate tree.

use hist::hist::check_hist;
use hist::{Graph, SpanningTree};

fn main() {
    let k4 = Graph::complete(4);
    let p4 = Graph::path(4);
    let cases = [
        ("star in K4", &k4, SpanningTree::star(&k4, 0)),
        ("P4 in itself", &p4, SpanningTree::new(4, [(0, 1), (1, 2), (2, 3)])),
        ("foreign edge", &p4, SpanningTree::new(4, [(0, 1), (1, 2), (0, 3)])),
        ("too few edges", &k4, SpanningTree::new(4, [(0, 1)])),
    ];
    for (name, g, t) in cases {
        match check_hist(g, &t) {
            Ok(()) => println!("{name}: HIST"),
            Err(d) => println!("{name}: {d}"),
        }
    }
}
