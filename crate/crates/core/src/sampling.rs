//! Seeded graph generators.
//!
//! All randomness comes from SplitMix64, so every generator is a pure
//! function of its arguments on every platform. [`planted`] builds
//! theorem-scale graphs with `2·NC ≥ n − 1` whose shape steers the case
//! machine into a chosen branch.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::conditions::report_unchecked;
use crate::error::{domain, DomainError};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::obstructions::match_family;
use crate::structure::is_connected;

pub type Prng = SplitMix64;

pub fn prng(seed: u64) -> Prng {
    SplitMix64::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`. Pairs are visited in lexicographic order with one
/// draw each.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, DomainError> {
    gnp_with(n, p, &mut prng(seed))
}

pub fn gnp_with(n: usize, p: f64, rng: &mut Prng) -> Result<Graph, DomainError> {
    if !(0.0..=1.0).contains(&p) {
        return domain(format!("gnp: p = {p} is not a probability"));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("valid edges"))
}

/// Samples `G(n, p)` until it is connected, up to `tries` draws.
pub fn random_connected(n: usize, p: f64, seed: u64, tries: usize) -> Result<Graph, DomainError> {
    let mut rng = prng(seed);
    for _ in 0..tries {
        let g = gnp_with(n, p, &mut rng)?;
        if n > 0 && is_connected(&g) {
            return Ok(g);
        }
    }
    domain(format!("random_connected: no connected sample in {tries} tries"))
}

/// Rejection-samples `G(n, p)` until it is connected and `2·NC ≥ n − 1`.
pub fn nc_instance(n: usize, p: f64, seed: u64, tries: usize) -> Result<Graph, DomainError> {
    let mut rng = prng(seed);
    for _ in 0..tries {
        let g = gnp_with(n, p, &mut rng)?;
        if n > 0 && is_connected(&g) && report_unchecked(&g).nc_condition() {
            return Ok(g);
        }
    }
    domain(format!("nc_instance: no sample met 2·NC ≥ n − 1 in {tries} tries"))
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffle_labels(g: &Graph, seed: u64) -> Graph {
    let mut rng = prng(seed);
    let n = g.n();
    let perm: Vec<Vertex> = sample(&mut rng, n, n).into_vec();
    Graph::from_edges(n, g.edges().map(|(a, b)| (perm[a], perm[b]))).expect("permuted edges")
}

/// Planted templates. Labels are canonical: `u = 0`, `N(u) = 1..=δ`, then
/// the rest of `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Planted {
    /// `G[W]` dense random; one neighbor of `u` sees all of `W`.
    ConnectedStar,
    /// `G[W]` dense random; every neighbor of `u` has at most one `W`-neighbor.
    ConnectedSingle,
    /// `G[W]` dense random; the largest `U_i` has between 2 and `|W| − 1` members.
    ConnectedSeveral,
    /// `δ = 2`, `u_1u_2 ∉ E`, `U_1 ∩ U_2 ≠ ∅`.
    CommonNeighbor,
    /// `δ = 2`, `u_1u_2 ∉ E`, disjoint `U_1`, `U_2` joined by a shortest path
    /// on 2 vertices.
    Path2,
    /// As [`Planted::Path2`] with one clique between the two sides.
    Path3,
    /// As [`Planted::Path2`] with two cliques in series between the sides.
    Path4,
    /// `W` is two cliques and a connector `c` that sees all of the second.
    SplitAll,
    /// The connector sees exactly one vertex of the second clique.
    SplitOne,
    /// The connector sees several but not all vertices of the second clique.
    SplitSome,
    /// `δ = 2`, `G[W]` two cliques, a neighbor of `u` sees both.
    CrossTwo,
    /// `δ = 2`, `G[W]` two cliques, `u_1u_2 ∈ E`, each side seen by one neighbor.
    AdjacentTwo,
    /// `δ ≥ 3`, a neighbor of `u` sees both cliques.
    BothSides,
    /// `δ ≥ 3`, each clique is seen by some neighbor with two or more `W`-neighbors.
    BigBoth,
    /// `δ ≥ 3`, every `|U_i| ≤ 1`.
    SmallBoth,
    /// `δ ≥ 4`, one clique is seen only through single attachments.
    BigOneSide,
    /// `δ = 3`, `N(u)` a clique, one side seen only through a single attachment.
    Delta3Adjacent,
    /// `δ = 3`, `u_1u_2 ∉ E`, `u_3` sees two vertices of `C_1 + u_1`.
    Delta3TwoHits,
    /// `δ = 3`, `u_1u_2 ∉ E`, `u_3` sees `u_1` and one vertex of `C_2`.
    Delta3OneHit,
}

impl Planted {
    pub const ALL: [Planted; 19] = [
        Planted::ConnectedStar,
        Planted::ConnectedSingle,
        Planted::ConnectedSeveral,
        Planted::CommonNeighbor,
        Planted::Path2,
        Planted::Path3,
        Planted::Path4,
        Planted::SplitAll,
        Planted::SplitOne,
        Planted::SplitSome,
        Planted::CrossTwo,
        Planted::AdjacentTwo,
        Planted::BothSides,
        Planted::BigBoth,
        Planted::SmallBoth,
        Planted::BigOneSide,
        Planted::Delta3Adjacent,
        Planted::Delta3TwoHits,
        Planted::Delta3OneHit,
    ];

    /// Whether the template needs odd `n`.
    pub fn needs_odd(self) -> bool {
        matches!(
            self,
            Planted::Path4
                | Planted::CrossTwo
                | Planted::AdjacentTwo
                | Planted::Delta3TwoHits
                | Planted::Delta3OneHit
        )
    }

    /// The case id the template is built to reach.
    pub fn expected_case(self) -> &'static str {
        match self {
            Planted::ConnectedStar => "5.1.1-star",
            Planted::ConnectedSingle => "5.1.1-U1eq1",
            Planted::ConnectedSeveral => "5.1.1-U1ge2",
            Planted::CommonNeighbor => "5.1.2-common-nbr",
            Planted::Path2 | Planted::Path3 | Planted::Path4 => "5.1.2-path-k",
            Planted::SplitAll => "L2.13-case2.1",
            Planted::SplitOne => "L2.13-case2.2",
            Planted::SplitSome => "L2.13-case2.3",
            Planted::CrossTwo => "5.2.1-cross",
            Planted::AdjacentTwo => "5.2.1-adj",
            Planted::BothSides => "5.2.2-case1",
            Planted::BigBoth => "5.2.2-case2-a",
            Planted::SmallBoth => "5.2.2-case2-b",
            Planted::BigOneSide => "5.2.2-case2-c",
            Planted::Delta3Adjacent => "5.2.2-case2-7a",
            Planted::Delta3TwoHits => "5.2.2-case2-8a",
            Planted::Delta3OneHit => "5.2.2-case2-8b",
        }
    }
}

/// Smallest order accepted by [`planted`].
pub const PLANTED_MIN_ORDER: usize = 61;

/// A graph of the given template. Each attempt draws fresh random choices;
/// the first that is connected, meets `2·NC ≥ n − 1`, matches no
/// exceptional family and keeps vertex 0 at minimum degree is returned.
pub fn planted(kind: Planted, n: usize, seed: u64) -> Result<Graph, DomainError> {
    if n < PLANTED_MIN_ORDER {
        return domain(format!("planted: n = {n} is below {PLANTED_MIN_ORDER}"));
    }
    if kind.needs_odd() && n % 2 == 0 {
        return domain(format!("planted: {kind:?} needs odd n"));
    }
    let mut rng = prng(seed);
    for _ in 0..64 {
        let g = build(kind, n, &mut rng);
        if accept(&g) {
            return Ok(g);
        }
    }
    domain(format!("planted: no {kind:?} instance on {n} vertices met the hypotheses"))
}

fn accept(g: &Graph) -> bool {
    is_connected(g)
        && g.degree(0) == g.min_degree()
        && report_unchecked(g).nc_condition()
        && !match_family(g).is_obstruction()
}

struct Plan {
    n: usize,
    edges: Vec<Edge>,
}

impl Plan {
    fn new(n: usize) -> Self {
        Plan { n, edges: Vec::new() }
    }

    fn clique(&mut self, vs: &[Vertex]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edges.push((a, b));
            }
        }
    }

    fn join(&mut self, v: Vertex, ws: &[Vertex]) {
        self.edges.extend(ws.iter().filter(|&&w| w != v).map(|&w| (v, w)));
    }

    fn complete_bipartite(&mut self, xs: &[Vertex], ys: &[Vertex]) {
        for &x in xs {
            self.join(x, ys);
        }
    }

    fn random(&mut self, vs: &[Vertex], p: f64, rng: &mut Prng) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if rng.random_bool(p) {
                    self.edges.push((a, b));
                }
            }
        }
    }

    fn build(self) -> Graph {
        Graph::from_edges(self.n, self.edges).expect("planted edges are in range")
    }
}

/// `k` members of `pool` chosen uniformly, in ascending order.
fn pick(rng: &mut Prng, pool: &[Vertex], k: usize) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = sample(rng, pool.len(), k.min(pool.len())).iter().map(|i| pool[i]).collect();
    out.sort_unstable();
    out
}

/// Between `lo` and `hi` members of `pool`, both inclusive.
fn pick_between(rng: &mut Prng, pool: &[Vertex], lo: usize, hi: usize) -> Vec<Vertex> {
    let k = rng.random_range(lo..=hi.max(lo));
    pick(rng, pool, k)
}

fn range(a: usize, b: usize) -> Vec<Vertex> {
    (a..b).collect()
}

/// Clique sizes `(k_a, k_b)` with `k_a + k_b = n − 1 − δ` and both in
/// `[⌈(n+1)/2⌉ − δ, ⌊(n−3)/2⌋]`.
fn split_sizes(n: usize, delta: usize, rng: &mut Prng) -> (usize, usize) {
    let total = n - 1 - delta;
    let lo = ((n + 2) / 2).saturating_sub(delta).max(1);
    let hi = (n - 3) / 2;
    let lo_a = lo.max(total.saturating_sub(hi));
    let hi_a = hi.min(total - lo);
    let ka = if lo_a <= hi_a { rng.random_range(lo_a..=hi_a) } else { total / 2 };
    (ka, total - ka)
}

fn build(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    use Planted::*;
    match kind {
        ConnectedStar | ConnectedSingle | ConnectedSeveral => connected_w(kind, n, rng),
        CommonNeighbor | Path2 => two_sided_w(kind, n, rng),
        Path3 | Path4 => chained_w(kind, n, rng),
        SplitAll | SplitOne | SplitSome => split_w(kind, n, rng),
        CrossTwo | AdjacentTwo => delta_two_split(kind, n, rng),
        BothSides | BigBoth | SmallBoth | BigOneSide | Delta3Adjacent => general_split(kind, n, rng),
        Delta3TwoHits | Delta3OneHit => delta_three(kind, n, rng),
    }
}

fn connected_w(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let delta = if rng.random_bool(0.25) { 2 } else { rng.random_range(3..=12) };
    let nbrs = range(1, delta + 1);
    let w = range(delta + 1, n);
    let mut plan = Plan::new(n);
    plan.join(0, &nbrs);
    plan.clique(&nbrs);
    let p = rng.random_range(0.65..0.9);
    plan.random(&w, p, rng);
    let lead = rng.random_range(1..=delta);
    for &x in &nbrs {
        let k = match kind {
            Planted::ConnectedStar if x == lead => w.len(),
            Planted::ConnectedStar => rng.random_range(0..=3),
            Planted::ConnectedSingle if x == lead => 1,
            Planted::ConnectedSingle => rng.random_range(0..=1),
            _ if x == lead => rng.random_range(2..=w.len() / 2),
            _ => rng.random_range(0..=2),
        };
        let targets = pick(rng, &w, k);
        plan.join(x, &targets);
    }
    plan.build()
}

fn two_sided_w(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let w = range(3, n);
    let mut plan = Plan::new(n);
    plan.join(0, &[1, 2]);
    let p = rng.random_range(0.65..0.9);
    plan.random(&w, p, rng);
    let half = w.len() / 2;
    let (u1, u2) = if kind == Planted::CommonNeighbor {
        let a = pick_between(rng, &w, half, half + half / 2);
        let b = pick_between(rng, &w, 2, half);
        (a, b)
    } else {
        let perm = sample(rng, w.len(), w.len()).into_vec();
        let cut = half + rng.random_range(0..=half / 4);
        let mut a: Vec<Vertex> = perm[..cut].iter().map(|&i| w[i]).collect();
        let mut b: Vec<Vertex> = perm[cut..].iter().map(|&i| w[i]).collect();
        a.sort_unstable();
        b.sort_unstable();
        (a, b)
    };
    plan.join(1, &u1);
    plan.join(2, &u2);
    plan.build()
}

fn chained_w(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let wn = n - 3;
    let mut plan = Plan::new(n);
    plan.join(0, &[1, 2]);
    let (a, mids, b) = if kind == Planted::Path3 {
        let r = rng.random_range(wn / 4..=wn / 3);
        let ka = (wn - r) / 2;
        let a = range(3, 3 + ka);
        let m = range(3 + ka, 3 + ka + r);
        let b = range(3 + ka + r, n);
        plan.clique(&m);
        plan.complete_bipartite(&m, &a);
        plan.complete_bipartite(&m, &b);
        (a, vec![m], b)
    } else {
        let half = wn / 2;
        let r = rng.random_range(wn / 10..=wn / 6);
        let a = range(3, 3 + half - r);
        let r1 = range(3 + half - r, 3 + half);
        let r2 = range(3 + half, 3 + half + r);
        let b = range(3 + half + r, n);
        plan.clique(&r1);
        plan.clique(&r2);
        plan.complete_bipartite(&r1, &r2);
        plan.complete_bipartite(&r1, &a);
        plan.complete_bipartite(&r2, &b);
        (a, vec![r1, r2], b)
    };
    debug_assert!(!mids.is_empty());
    plan.clique(&a);
    plan.clique(&b);
    plan.join(1, &a);
    plan.join(2, &b);
    plan.build()
}

fn split_w(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let delta = rng.random_range(4..=10);
    let nbrs = range(1, delta + 1);
    let total = n - 2 - delta;
    let ka = total / 2 + rng.random_range(0..=total / 8);
    let a = range(delta + 1, delta + 1 + ka);
    let c = delta + 1 + ka;
    let b = range(c + 1, n);
    let mut plan = Plan::new(n);
    plan.join(0, &nbrs);
    plan.clique(&nbrs);
    plan.clique(&a);
    plan.clique(&b);
    plan.join(c, &a);
    let seen = match kind {
        Planted::SplitAll => b.clone(),
        Planted::SplitOne => pick(rng, &b, 1),
        _ => pick_between(rng, &b, 2, b.len() - 1),
    };
    plan.join(c, &seen);
    plan.join(1, &[a[0], c]);
    let w: Vec<Vertex> = a.iter().chain(&b).copied().collect();
    for &x in &nbrs[1..] {
        let k = rng.random_range(1..=2);
        let targets = pick(rng, &w, k);
        plan.join(x, &targets);
    }
    plan.build()
}

fn delta_two_split(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let k = (n - 3) / 2;
    let a = range(3, 3 + k);
    let b = range(3 + k, n);
    let mut plan = Plan::new(n);
    plan.join(0, &[1, 2]);
    plan.clique(&a);
    plan.clique(&b);
    if kind == Planted::CrossTwo {
        let t1 = pick_between(rng, &a, 1, k / 2);
        let t2 = pick_between(rng, &b, 1, k / 2);
        plan.join(1, &t1);
        plan.join(1, &t2);
        if rng.random_bool(0.5) {
            plan.edges.push((1, 2));
            let side = if rng.random_bool(0.5) { &a } else { &b };
            let t = pick_between(rng, side, 0, 3);
            plan.join(2, &t);
        } else {
            let all: Vec<Vertex> = a.iter().chain(&b).copied().collect();
            let t = pick_between(rng, &all, k, k + k / 2);
            plan.join(2, &t);
        }
    } else {
        plan.edges.push((1, 2));
        let t1 = pick_between(rng, &a, 2, k / 2);
        let t2 = pick_between(rng, &b, 1, k / 2);
        plan.join(1, &t1);
        plan.join(2, &t2);
    }
    plan.build()
}

fn general_split(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let delta = match kind {
        Planted::Delta3Adjacent => 3,
        Planted::BigOneSide => rng.random_range(4..=12),
        _ => rng.random_range(3..=12),
    };
    let nbrs = range(1, delta + 1);
    let (ka, _) = split_sizes(n, delta, rng);
    let a = range(delta + 1, delta + 1 + ka);
    let b = range(delta + 1 + ka, n);
    let mut plan = Plan::new(n);
    plan.join(0, &nbrs);
    plan.clique(&nbrs);
    plan.clique(&a);
    plan.clique(&b);
    let big = |rng: &mut Prng, side: &[Vertex]| pick_between(rng, side, 2, side.len().min(12));
    let one = |rng: &mut Prng, side: &[Vertex]| pick(rng, side, 1);
    // Roles for the first two neighbors, the rest fill in at random.
    let ia = rng.random_range(0..delta);
    let ib = (ia + rng.random_range(1..delta)) % delta;
    for (i, &x) in nbrs.iter().enumerate() {
        let targets = match kind {
            Planted::BothSides if i == ia => {
                let mut t = big(rng, &a);
                t.extend(big(rng, &b));
                t
            }
            Planted::BothSides => match rng.random_range(0..3) {
                0 => Vec::new(),
                1 => big(rng, &a),
                _ => big(rng, &b),
            },
            Planted::BigBoth if i == ia => big(rng, &a),
            Planted::BigBoth if i == ib => big(rng, &b),
            Planted::BigBoth => match rng.random_range(0..4) {
                0 => Vec::new(),
                1 => big(rng, &a),
                2 => one(rng, &a),
                _ => one(rng, &b),
            },
            Planted::SmallBoth if i == ia => one(rng, &a),
            Planted::SmallBoth if i == ib => one(rng, &b),
            Planted::SmallBoth => match rng.random_range(0..3) {
                0 => Vec::new(),
                1 => one(rng, &a),
                _ => one(rng, &b),
            },
            _ if i == ia => big(rng, &a),
            _ if i == ib => one(rng, &b),
            _ => match rng.random_range(0..4) {
                0 => Vec::new(),
                1 => big(rng, &a),
                2 => one(rng, &a),
                _ => one(rng, &b),
            },
        };
        plan.join(x, &targets);
    }
    plan.build()
}

fn delta_three(kind: Planted, n: usize, rng: &mut Prng) -> Graph {
    let ka = (n - 5) / 2;
    let a = range(4, 4 + ka);
    let b = range(4 + ka, n);
    let mut plan = Plan::new(n);
    plan.join(0, &[1, 2, 3]);
    plan.clique(&a);
    plan.clique(&b);
    let x3 = pick(rng, &b, 1);
    plan.join(2, &x3);
    match kind {
        Planted::Delta3TwoHits => {
            plan.edges.push((2, 3));
            plan.join(1, &a);
            let hits = pick_between(rng, &a, 2, ka / 2);
            plan.join(3, &hits);
            if rng.random_bool(0.5) {
                plan.edges.push((1, 3));
            }
        }
        _ => {
            plan.edges.push((2, 3));
            plan.join(1, &a);
            plan.edges.push((1, 3));
            let z = pick(rng, &b, 1);
            plan.join(3, &z);
        }
    }
    plan.build()
}

/// `δ = 3` with `u_1u_2 ∈ E` and `u_3` seeing only `C_1` minus two
/// neighbors of `u_1`. The pair `(u_2, u_3)` then has a neighborhood union of
/// at most `(n − 3)/2`, so this shape never meets `2·NC ≥ n − 1`; it exists to
/// drive the corresponding handler directly.
pub fn detached_fixture(n: usize, seed: u64) -> Result<Graph, DomainError> {
    if n < PLANTED_MIN_ORDER || n % 2 == 0 {
        return domain("detached_fixture: needs odd n ≥ 61");
    }
    let mut rng = prng(seed);
    let ka = (n - 5) / 2;
    let a = range(4, 4 + ka);
    let b = range(4 + ka, n);
    let mut plan = Plan::new(n);
    plan.join(0, &[1, 2, 3]);
    plan.clique(&a);
    plan.clique(&b);
    plan.edges.push((1, 2));
    let x3 = pick(&mut rng, &b, 1);
    plan.join(2, &x3);
    let u1 = pick_between(&mut rng, &a, 2, ka / 2);
    let rest: Vec<Vertex> = a.iter().copied().filter(|v| *v != u1[0] && *v != u1[1]).collect();
    plan.join(1, &u1);
    plan.join(3, &rest);
    Ok(plan.build())
}

/// A clique `C` on `k ∈ [5, 40]` vertices plus an outside vertex `u_l`
/// joined to all of `C`, one vertex of `C`, or a random proper subset, with a few extra vertices
/// hanging off `u_l`. Returns the graph, `C` and `u_l`.
pub fn clique_attachment_fixture(seed: u64) -> (Graph, VertexSet, Vertex) {
    let mut rng = prng(seed);
    let k = rng.random_range(5..=40);
    let extra = rng.random_range(0..=3);
    let n = k + 1 + extra;
    let c = range(0, k);
    let u_l = k;
    let mut plan = Plan::new(n);
    plan.clique(&c);
    let chosen = match rng.random_range(0..3) {
        0 => c.clone(),
        1 => pick(&mut rng, &c, 1),
        _ => pick_between(&mut rng, &c, 2, k - 1),
    };
    plan.join(u_l, &chosen);
    plan.join(u_l, &range(k + 1, n));
    (plan.build(), VertexSet::from_iter(n, c), u_l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_is_deterministic() {
        let a = gnp(30, 0.4, 7).unwrap();
        let b = gnp(30, 0.4, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, gnp(30, 0.4, 8).unwrap());
        assert!(gnp(5, 1.5, 0).is_err());
    }

    #[test]
    fn shuffle_preserves_degrees() {
        let g = gnp(20, 0.3, 1).unwrap();
        let h = shuffle_labels(&g, 9);
        let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        assert_eq!(dg, dh);
    }

    #[test]
    fn planted_rejects_wrong_parity() {
        assert!(planted(Planted::CrossTwo, 300, 0).is_err());
        assert!(planted(Planted::CrossTwo, 20, 0).is_err());
    }
}
