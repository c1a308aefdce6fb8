//! Runs the case machine on a theorem-scale graph from each planted
//! template and prints the fired cases.

use hist::constructive::construct_audited;
use hist::sampling::{planted, Planted};
use hist::{verify_hist, Construction};

fn main() {
    for kind in Planted::ALL {
        let n = if kind.needs_odd() { 301 } else { 300 };
        let g = planted(kind, n, 7).unwrap();
        let audit = construct_audited(&g);
        let Ok(Construction::Hist { tree, trace }) = &audit.result else {
            panic!("{kind:?}: {:?}", audit.result);
        };
        assert!(verify_hist(&g, tree));
        let ids: Vec<&str> = trace.case_ids().collect();
        println!(
            "{kind:?}: {} checks, {} failed, cases {}",
            audit.checks.len(),
            audit.failed_claims().count(),
            ids.join(" → ")
        );
    }
}
