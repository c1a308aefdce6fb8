//! Degree parameters of the Petersen graph and of the exceptional families.
//!
//! The families sit exactly on the boundary `2·NC = n − 1`.

use hist::obstructions::{generate_h, Family};
use hist::{condition_report, Graph};

fn main() {
    let p = condition_report(&Graph::petersen()).unwrap();
    println!("Petersen: δ = {}, σ = {}, NC = {}", p.delta, p.sigma, p.nc);

    for n in [9, 21, 41] {
        for fam in [Family::H1, Family::H2, Family::H3] {
            let r = condition_report(&generate_h(fam, n, false).unwrap()).unwrap();
            println!("{fam:?}({n}): δ = {}, σ = {}, NC = {} (n−1)/2 = {}", r.delta, r.sigma, r.nc, (n - 1) / 2);
        }
    }
}
