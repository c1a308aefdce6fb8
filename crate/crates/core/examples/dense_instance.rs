//! A dense random graph conditioned on `2·NC ≥ n − 1`, with its full trace
//! as JSON.

use hist::sampling::nc_instance;
use hist::{condition_report, construct_theorem15, verify_hist, Construction};

fn main() {
    let g = nc_instance(300, 0.7, 42, 100).unwrap();
    let r = condition_report(&g).unwrap();
    println!("n = {}, δ = {}, NC = {}", r.n, r.delta, r.nc);
    match construct_theorem15(&g).unwrap() {
        Construction::Hist { tree, trace } => {
            assert!(verify_hist(&g, &tree));
            assert_eq!(trace.replay(&g).unwrap(), tree);
            println!("{}", serde_json::to_string_pretty(&trace).unwrap());
        }
        other => println!("{other:?}"),
    }
}
