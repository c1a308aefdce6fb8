//! graph6 and edge-list round trips.

use hist::io::{encode_edgelist, encode_graph6, parse_edgelist, parse_graph6};
use hist::Graph;

fn main() {
    let g = Graph::petersen();
    let g6 = encode_graph6(&g);
    println!("Petersen in graph6: {g6}");
    assert_eq!(parse_graph6(&g6).unwrap(), g);

    let el = encode_edgelist(&Graph::cycle(5));
    print!("C5 as an edge list:\n{el}");
    assert_eq!(parse_edgelist(&el).unwrap(), Graph::cycle(5));
}
