//! The two sweep modes behind `hist sweep`.

use hist::sweep::{atlas_sweep, random_sweep, SweepLimits};

fn main() {
    let atlas = atlas_sweep(7, SweepLimits::default()).unwrap();
    println!("atlas to n = 7: {} graphs, {}% agreement", atlas.graphs, atlas.agreement_percent);
    for o in &atlas.orders {
        println!(
            "  n = {}: {} with HIST, {} meet 2·NC ≥ n − 1 without one",
            o.n,
            o.with_hist,
            o.nc_without_hist.len()
        );
    }
    let random = random_sweep(200, 9, 1, SweepLimits::default()).unwrap();
    println!(
        "random: {} samples, {} violations",
        random.samples,
        random.violations.len()
    );
}
