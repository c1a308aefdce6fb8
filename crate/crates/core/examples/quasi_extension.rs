//! Glues a HIST of an attached set onto the center of a 1-quasi-HIT.

use hist::hist::{classify_subtree, extend_quasi1};
use hist::{Graph, Subtree, VertexSet};

fn main() {
    // A star 0–{1,2,3} with 3 continued to 4; vertex 3 is the center.
    // S = {3, 5, 6, 7} is a clique attached at 3.
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (3, 4)];
    edges.extend([(3, 5), (3, 6), (3, 7), (5, 6), (5, 7), (6, 7)]);
    let g = Graph::from_edges(8, edges).unwrap();

    let t = Subtree::from_edges([(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
    println!("before: {:?}", classify_subtree(&t));
    let s = VertexSet::from_iter(8, [3, 5, 6, 7]);
    let out = extend_quasi1(&g, &t, &s, &[(3, 5), (3, 6), (3, 7)]).unwrap();
    println!("after:  {:?}", classify_subtree(&out));
    println!("edges:  {:?}", out.edges);
}
