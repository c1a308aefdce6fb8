//! Generates H1, H2 and H3 for every odd order from 9 to 41 and shows that
//! each is recognized, and that exhaustive search agrees at small orders.

use hist::hist::{exact_search, SearchOutcome};
use hist::obstructions::{generate_h, match_family, Family};

fn main() {
    for n in (9..=41).step_by(2) {
        let mut row = Vec::new();
        for (fam, coincide) in [
            (Family::H1, false),
            (Family::H2, false),
            (Family::H3, false),
            (Family::H3, true),
        ] {
            let g = generate_h(fam, n, coincide).unwrap();
            row.push(format!("{:?}", match_family(&g).kind));
            if n <= 13 {
                let r = exact_search(&g, 1_000_000).unwrap();
                assert_eq!(r.outcome, SearchOutcome::NoHist);
            }
        }
        println!("n = {n:2}: {}", row.join(" "));
    }
    println!("exact search confirms no HIST for n = 9, 11, 13");
}
