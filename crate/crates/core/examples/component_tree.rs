//! Trees on a clique plus one attached vertex in which only the attached
//! vertex may keep degree 2.

use hist::constructive::{check_component_tree, lemma214_component_tree};
use hist::sampling::clique_attachment_fixture;

fn main() {
    for seed in 0..8 {
        let (g, c, u_l) = clique_attachment_fixture(seed);
        let ct = lemma214_component_tree(&g, &c, u_l).unwrap();
        check_component_tree(&g, &c, u_l, &ct.tree).unwrap();
        println!(
            "|C| = {:2}, |N_C(u_l)| = {:2}: {} with d_T(u_l) = {}",
            c.len(),
            g.degree_in(u_l, &c),
            ct.branch.case_id(),
            ct.tree.degree(u_l)
        );
    }
}
