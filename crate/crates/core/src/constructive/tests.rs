use super::*;
use crate::hist::verify_hist;
use crate::obstructions::{generate_h, Family, ObstructionKind};
use crate::sampling::{planted, Planted};

fn hist_of(g: &Graph) -> (SpanningTree, ConstructionTrace) {
    match construct_theorem15(g).unwrap() {
        Construction::Hist { tree, trace } => (tree, trace),
        other => panic!("expected a HIST, got {other:?}"),
    }
}

#[test]
fn complete_graphs() {
    let (t, trace) = hist_of(&Graph::complete(300));
    assert_eq!(t, SpanningTree::star(&Graph::complete(300), 0));
    assert_eq!(trace.case_ids().collect::<Vec<_>>(), ["complete-star"]);
    assert!(matches!(
        construct_theorem15(&Graph::complete(3)).unwrap(),
        Construction::NoHist { .. }
    ));
    hist_of(&Graph::complete(1));
    hist_of(&Graph::complete(2));
}

#[test]
fn families_are_refused() {
    let g = generate_h(Family::H1, 271, false).unwrap();
    match construct_theorem15(&g).unwrap() {
        Construction::NoHist { obstruction, .. } => assert_eq!(obstruction.kind, ObstructionKind::H1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn disconnected_is_an_error() {
    assert!(construct_theorem15(&Graph::empty(3)).is_err());
    assert!(construct_theorem15(&Graph::empty(0)).is_err());
}

#[test]
fn small_graphs_fall_back() {
    assert!(matches!(
        construct_theorem15(&Graph::petersen()).unwrap(),
        Construction::Fallback { .. }
    ));
    assert!(matches!(
        construct_theorem15(&Graph::cycle(6)).unwrap(),
        Construction::Fallback { .. }
    ));
}

#[test]
fn every_template_reaches_its_case() {
    for kind in Planted::ALL {
        let g = planted(kind, 301, 11).unwrap();
        let audit = construct_audited(&g);
        let (tree, trace) = match audit.result {
            Ok(Construction::Hist { tree, trace }) => (tree, trace),
            other => panic!("{kind:?}: {other:?}"),
        };
        assert!(verify_hist(&g, &tree), "{kind:?}");
        assert_eq!(trace.replay(&g).unwrap(), tree);
        let ids: Vec<&str> = trace.case_ids().collect();
        assert!(ids.contains(&kind.expected_case()), "{kind:?}: {ids:?}");
        assert_eq!(audit.checks.iter().filter(|c| !c.holds).count(), 0, "{kind:?}");
    }
}

#[test]
fn lemma213_needs_two_vertices_in_s() {
    let g = planted(Planted::ConnectedSeveral, 280, 3).unwrap();
    let ctx = build_context(&g).unwrap();
    let v = ctx.w_set.first().unwrap();
    let quasi = Subtree::singleton(v);
    let s = VertexSet::from_iter(g.n(), [v]);
    assert!(matches!(
        lemma213_extend(&g, &ctx, &quasi, v, &s),
        Err(ConstructionError::Domain(_))
    ));
}

#[test]
fn detached_third_neighbor_is_handled_off_hypothesis() {
    let g = crate::sampling::detached_fixture(301, 5).unwrap();
    assert!(!crate::conditions::report_unchecked(&g).nc_condition());
    let mut m = Machine::new(&g, build_context(&g).unwrap());
    m.run().unwrap();
    assert!(m.trace.case_ids().any(|id| id == "5.2.2-case2-7b"));
    let t = m.trace.replay(&g).unwrap();
    assert!(verify_hist(&g, &t));
}
