//! The case machine. Each handler re-checks the numeric thresholds it relies
//! on (a failed threshold halts with [`Halt::Threshold`]) and the structural
//! facts the proof derives from them (a failed claim halts with
//! [`Halt::Claim`]).

use std::cmp::Reverse;

use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::hist::{classify_subtree, extend_quasi1, extend_quasi2, QuasiKind, Subtree};
use crate::structure::{components, find_induced_p3, find_xy_path_within, is_clique};

use super::context::{lemma28_clique_check, DecompositionContext};
use super::lemmas::{lemma214_component_tree, star, sub_hist, without, SubFailure, SUB_BUDGET};
use super::trace::{Check, CheckKind, ConstructionTrace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Halt {
    Threshold(String),
    Claim(String),
    Search(String),
}

pub(crate) type Step<T> = Result<T, Halt>;

pub(crate) struct Machine<'g> {
    pub g: &'g Graph,
    pub ctx: DecompositionContext,
    pub trace: ConstructionTrace,
    pub checks: Vec<Check>,
}

fn set(n: usize, it: impl IntoIterator<Item = Vertex>) -> VertexSet {
    VertexSet::from_iter(n, it)
}

fn two_least(s: &VertexSet) -> Option<(Vertex, Vertex)> {
    let mut it = s.iter();
    Some((it.next()?, it.next()?))
}

impl<'g> Machine<'g> {
    pub fn new(g: &'g Graph, ctx: DecompositionContext) -> Self {
        Machine {
            g,
            ctx,
            trace: ConstructionTrace::default(),
            checks: Vec::new(),
        }
    }

    fn record(&mut self, id: &'static str, kind: CheckKind, holds: bool, detail: String) {
        self.checks.push(Check {
            id,
            kind,
            holds,
            detail,
        });
    }

    pub fn threshold(&mut self, id: &'static str, holds: bool, detail: impl Into<String>) -> Step<()> {
        let detail = detail.into();
        self.record(id, CheckKind::Threshold, holds, detail.clone());
        if holds {
            Ok(())
        } else {
            Err(Halt::Threshold(format!("{id}: {detail}")))
        }
    }

    pub fn claim(&mut self, id: &'static str, holds: bool, detail: impl Into<String>) -> Step<()> {
        let detail = detail.into();
        self.record(id, CheckKind::Claim, holds, detail.clone());
        if holds {
            Ok(())
        } else {
            Err(Halt::Claim(format!("{id}: {detail}")))
        }
    }

    /// Unwraps a value whose existence the proof guarantees.
    fn claim_some<T>(&mut self, id: &'static str, v: Option<T>, detail: &str) -> Step<T> {
        self.claim(id, v.is_some(), detail)?;
        Ok(v.expect("checked"))
    }

    fn claim_ok<T, E: std::fmt::Display>(&mut self, id: &'static str, v: Result<T, E>) -> Step<T> {
        match v {
            Ok(t) => {
                self.record(id, CheckKind::Claim, true, String::new());
                Ok(t)
            }
            Err(e) => {
                let msg = e.to_string();
                self.claim(id, false, msg)?;
                unreachable!()
            }
        }
    }

    /// HIST edges of `G[s]`, which the proof obtains from Lemma 2.10(iii).
    fn hist_of(&mut self, s: &VertexSet) -> Step<Vec<Edge>> {
        match sub_hist(self.g, s, SUB_BUDGET) {
            Ok(e) => {
                self.record("L2.10(iii)", CheckKind::Claim, true, format!("HIST on {} vertices", s.len()));
                Ok(e)
            }
            Err(SubFailure::NoHist(m)) => {
                self.claim("L2.10(iii)", false, m)?;
                unreachable!()
            }
            Err(SubFailure::Budget(m)) => Err(Halt::Search(m)),
        }
    }

    fn lemma214(&mut self, c: &VertexSet, ul: Vertex) -> Step<()> {
        let ct = lemma214_component_tree(self.g, c, ul);
        let ct = self.claim_ok("L2.14", ct)?;
        let mut detail = format!("u_l = {ul}, |N_C(u_l)| = {}", self.g.degree_in(ul, c));
        if ct.searched {
            detail.push_str(", tree from constrained search");
        }
        self.trace.push(ct.branch.case_id(), detail, ct.tree.edges);
        Ok(())
    }

    pub fn run(&mut self) -> Step<()> {
        let deficit = self.ctx.degree_deficit.clone();
        self.claim(
            "e4",
            deficit.is_empty(),
            format!("vertices of W with 2·d_W(w) < n − 1 − 2δ: {deficit:?}"),
        )?;
        if self.ctx.w_connected() {
            self.w_connected()
        } else {
            self.w_disconnected()
        }
    }

    // ---- W connected ----

    fn w_connected(&mut self) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        if ctx.delta == 2 && !g.has_edge(ctx.nbrs[0], ctx.nbrs[1]) {
            return self.case_512();
        }
        let i1 = (0..ctx.delta)
            .max_by_key(|&i| (ctx.u_size(i), Reverse(ctx.nbrs[i])))
            .expect("δ ≥ 1");
        self.case_511(i1)
    }

    fn case_511(&mut self, i1: usize) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let (n, delta, u) = (ctx.n, ctx.delta, ctx.u);
        let u1 = ctx.nbrs[i1];
        let big_u1 = &ctx.u_sets[i1];
        let w = &ctx.w_set;
        if big_u1.len() == w.len() {
            let edges = if delta != 2 {
                let mut e = star(u, ctx.nbrs.iter().copied());
                e.extend(star(u1, big_u1.iter()));
                e
            } else {
                star(u1, g.neighbors(u1).iter().copied())
            };
            self.trace.push("5.1.1-star", format!("u_1 = {u1} sees all of W"), edges);
            return Ok(());
        }
        self.claim("5.1.1-U1", !big_u1.is_empty(), "G connected and W nonempty give |U_1| ≥ 1")?;
        let p3 = find_induced_p3(g, w, u1);
        let (x1, x2) = self.claim_ok("L2.4", p3)?;
        let (quasi, s, id) = if big_u1.len() == 1 {
            self.claim("5.1.1-delta", delta >= 2, "δ ≥ 2")?;
            self.threshold("L2.8", 2 * delta + 3 < n, format!("2δ = {} < n − 3 = {}", 2 * delta, n as isize - 3))?;
            let clique = lemma28_clique_check(&ctx, g);
            self.claim("L2.8", clique, "N(u) is a clique when every |U_i| ≤ 1")?;
            let mut e = star(u1, ctx.closed_nbhd().iter());
            e.extend([(u1, x1), (x1, x2)]);
            (e, set(n, [x1, x2]), "5.1.1-U1eq1")
        } else {
            let x3 = big_u1.iter().find(|&x| x != x1).expect("|U_1| ≥ 2");
            let e = if delta == 2 {
                let u2 = ctx.nbrs[1 - i1];
                vec![(u, u1), (u1, u2), (u1, x1), (u1, x3), (x1, x2)]
            } else {
                let mut e = star(u, ctx.nbrs.iter().copied());
                e.extend([(u1, x1), (x1, x2), (u1, x3)]);
                e
            };
            (e, set(n, [x1, x2, x3]), "5.1.1-U1ge2")
        };
        self.trace.push(id, format!("u_1 = {u1}, |U_1| = {}, x_1 = {x1}, x_2 = {x2}", big_u1.len()), quasi.clone());
        self.lemma213(quasi, s, x1)
    }

    fn case_512(&mut self) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let n = ctx.n;
        let u = ctx.u;
        let i1 = if ctx.u_size(1) > ctx.u_size(0) { 1 } else { 0 };
        let (u1, u2) = (ctx.nbrs[i1], ctx.nbrs[1 - i1]);
        let (big_u1, big_u2) = (&ctx.u_sets[i1], &ctx.u_sets[1 - i1]);
        self.claim("5.1.2-U1", big_u1.len() >= 2, format!("|U_1| = {} ≥ 2", big_u1.len()))?;
        self.claim("5.1.2-U2", !big_u2.is_empty(), "u_2 has a W-neighbor")?;
        if let Some(v1) = big_u1.intersection(big_u2).first() {
            let u1p = big_u1.iter().find(|&x| x != v1).expect("|U_1| ≥ 2");
            let quasi = vec![(u, u1), (u1, v1), (u1, u1p), (u2, v1)];
            self.trace.push("5.1.2-common-nbr", format!("v_1 = {v1}"), quasi.clone());
            return self.lemma213(quasi, set(n, [v1, u1p]), v1);
        }
        let path = find_xy_path_within(g, big_u1, big_u2, &ctx.w_set);
        let path = self.claim_ok("L2.5", path)?;
        let k = path.len();
        self.claim("5.1.2-k", k <= 5, format!("shortest (U_1,U_2)-path has k = {k} ≤ 5"))?;
        let v1 = path[0];
        let vk = path[k - 1];
        let u2p = big_u1.iter().find(|&x| x != v1).expect("|U_1| ≥ 2");
        let mut used = set(n, path.iter().copied());
        used.insert(u2p);
        let mut quasi: Vec<Edge> = path.windows(2).map(|p| (p[0], p[1])).collect();
        quasi.extend([(u, u1), (u1, u2p), (u1, v1), (u2, vk)]);
        for &vi in &path[..k - 1] {
            let free = g.neighbors_in(vi, &ctx.w_set).difference(&used).first();
            let vp = self.claim_some("5.1.2-pendant", free, "each path vertex has a fresh W-neighbor")?;
            used.insert(vp);
            quasi.push((vi, vp));
        }
        self.trace.push("5.1.2-path-k", format!("k = {k}"), quasi.clone());
        self.lemma213(quasi, used, vk)
    }

    pub fn lemma213(&mut self, quasi_edges: Vec<Edge>, s: VertexSet, v: Vertex) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let (n, delta) = (ctx.n, ctx.delta);
        let sl = s.len();
        self.threshold(
            "L2.13",
            n >= 259 && sl >= 2 && 4 * sl + 4 * delta < n + 5,
            format!("n = {n} ≥ 259, 2 ≤ |S| = {sl}, 4|S| + 4δ < n + 5"),
        )?;
        let quasi = Subtree::from_edges(quasi_edges);
        let quasi = self.claim_ok("L2.13-quasi", quasi)?;
        let q = classify_subtree(&quasi);
        self.claim(
            "L2.13-quasi",
            q.class == QuasiKind::Quasi1 && q.deg2_vertices == [v],
            format!("1-quasi-HIT centered at {v}, found degree-2 set {:?}", q.deg2_vertices),
        )?;
        let span = ctx.closed_nbhd().union(&s);
        self.claim("L2.13-quasi", quasi.vertex_set(n) == span, "quasi-HIT spans N[u] ∪ S")?;
        let s_prime = without(&s, &[v]);
        let rest = ctx.w_set.difference(&s_prime);
        let comps = components(g, Some(&rest));
        self.claim("L2.9", comps.len() <= 2, format!("W ∖ S' has {} components", comps.len()))?;
        if comps.len() == 1 {
            let t = self.hist_of(&rest)?;
            let done = extend_quasi1(g, &quasi, &rest, &t);
            self.claim_ok("L2.11", done)?;
            self.trace.push("L2.13-case1", format!("HIST of W ∖ S' attached at {v}"), t);
            return Ok(());
        }
        let (c1, c2) = if comps[0].contains(v) {
            (&comps[0], &comps[1])
        } else {
            (&comps[1], &comps[0])
        };
        self.claim("L2.13-v", c1.contains(v), "v lies in W ∖ S'")?;
        for c in [c1, c2] {
            let k = c.len();
            self.claim(
                "L2.10(i)",
                2 * k + 2 * delta + 2 * s_prime.len() >= n + 1 && 2 * k + 3 <= n,
                format!("|C| = {k}"),
            )?;
        }
        let x = s_prime.iter().find(|&x| g.degree_in(x, c2) > 0);
        let x = self.claim_some("L2.13-x", x, "some vertex of S' sees C_2")?;
        let nx = g.neighbors_in(x, c2);
        if nx.len() == c2.len() {
            let ext = star(x, c2.iter());
            let grown = Subtree::from_edges(quasi.edges.iter().copied().chain(ext.iter().copied()));
            let grown = self.claim_ok("L2.13-case2.1", grown)?;
            let t1 = self.hist_of(c1)?;
            let done = extend_quasi1(g, &grown, c1, &t1);
            self.claim_ok("L2.11", done)?;
            let mut edges = ext;
            edges.extend(t1);
            self.trace.push("L2.13-case2.1", format!("x = {x} sees all of C_2"), edges);
            return Ok(());
        }
        let p3 = find_induced_p3(g, c2, x);
        let (x1, x2) = self.claim_ok("L2.4", p3)?;
        let (add, s_set, u_set, id) = if nx.len() == 1 {
            let x3 = g.neighbors_in(x, c1).iter().find(|&y| y != v);
            let x3 = self.claim_some("L2.13-x3", x3, "x has a neighbor in C_1 other than v")?;
            (
                vec![(x, x1), (x, x3), (x1, x2)],
                without(c1, &[x3]),
                without(c2, &[x2]),
                "L2.13-case2.2",
            )
        } else {
            let x4 = nx.iter().find(|&y| y != x1).expect("|N_C2(x)| ≥ 2");
            (
                vec![(x, x1), (x, x4), (x1, x2)],
                c1.clone(),
                without(c2, &[x2, x4]),
                "L2.13-case2.3",
            )
        };
        let grown = Subtree::from_edges(quasi.edges.iter().copied().chain(add.iter().copied()));
        let grown = self.claim_ok("L2.13-grow", grown)?;
        let ts = self.hist_of(&s_set)?;
        let tu = self.hist_of(&u_set)?;
        let done = extend_quasi2(g, &grown, v, &s_set, &ts, x1, &u_set, &tu);
        self.claim_ok("L2.12", done)?;
        let mut edges = add;
        edges.extend(ts);
        edges.extend(tu);
        self.trace.push(id, format!("x = {x}, x_1 = {x1}, x_2 = {x2}"), edges);
        Ok(())
    }

    // ---- W disconnected ----

    fn w_disconnected(&mut self) -> Step<()> {
        let ctx = self.ctx.clone();
        let (n, delta) = (ctx.n, ctx.delta);
        self.threshold("L2.9", 4 * delta < n + 5, format!("4δ = {} < n + 5", 4 * delta))?;
        let k = ctx.w_components.len();
        self.claim("L2.9", k == 2, format!("G[W] has {k} components"))?;
        for c in &ctx.w_components {
            let k = c.len();
            self.claim(
                "L2.10(i)",
                2 * k + 2 * delta >= n + 1 && 2 * k + 3 <= n,
                format!("(n+1)/2 − δ ≤ |C| = {k} ≤ (n−3)/2"),
            )?;
        }
        self.claim("5.2-delta", delta >= 2, "δ ≥ 2")?;
        if delta == 2 {
            self.case_521()
        } else {
            self.case_522()
        }
    }

    fn case_521(&mut self) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let (n, u) = (ctx.n, ctx.u);
        let (c1, c2) = (&ctx.w_components[0], &ctx.w_components[1]);
        for c in [c1, c2] {
            self.claim(
                "5.2.1-cliques",
                is_clique(g, c) && 2 * c.len() + 3 == n,
                format!("C is a clique of order (n−3)/2, found |C| = {}", c.len()),
            )?;
        }
        let cross = (0..2).find(|&i| !ctx.u_sets[i].is_disjoint(c1) && !ctx.u_sets[i].is_disjoint(c2));
        if let Some(i) = cross {
            let (u1, u2) = (ctx.nbrs[i], ctx.nbrs[1 - i]);
            let big_u1 = &ctx.u_sets[i];
            let p1 = big_u1.intersection(c1).first().expect("meets C_1");
            let p2 = big_u1.intersection(c2).first().expect("meets C_2");
            let x = g.neighbors(u2).iter().copied().find(|&y| y != u);
            let x = self.claim_some("5.2.1-x", x, "d(u_2) ≥ 2")?;
            let mut edges = vec![(u, u1), (u1, p1), (u1, p2), (x, u2)];
            if [u1, p1, p2].contains(&x) {
                edges.extend(star(p1, c1.iter()));
                edges.extend(star(p2, c2.iter()));
            } else {
                let ((ca, pa), (cb, pb)) = if c1.contains(x) {
                    ((c1, p1), (c2, p2))
                } else {
                    ((c2, p2), (c1, p1))
                };
                self.claim("5.2.1-x", ca.contains(x), "x lies in W")?;
                let xp = g.neighbors_in(x, ca).iter().find(|&y| y != pa);
                let xp = self.claim_some("5.2.1-x'", xp, "x has a neighbor in its clique besides the root")?;
                edges.push((x, xp));
                edges.extend(star(pa, without(ca, &[xp]).iter()));
                edges.extend(star(pb, cb.iter()));
            }
            self.trace.push("5.2.1-cross", format!("u_1 = {u1}, x = {x}"), edges);
            return Ok(());
        }
        let (a, b) = (ctx.nbrs[0], ctx.nbrs[1]);
        self.claim("5.2.1-adj", g.has_edge(a, b), "u_1u_2 ∈ E, otherwise G is H1")?;
        let i1 = if ctx.u_size(1) > ctx.u_size(0) { 1 } else { 0 };
        self.claim("5.2.1-adj", ctx.u_size(i1) >= 2, "some |U_i| ≥ 2, otherwise G is H2")?;
        let (u1, u2) = (ctx.nbrs[i1], ctx.nbrs[1 - i1]);
        let (big_u1, big_u2) = (&ctx.u_sets[i1], &ctx.u_sets[1 - i1]);
        let (ca, cb) = if big_u1.is_subset(c1) { (c1, c2) } else { (c2, c1) };
        self.claim(
            "5.2.1-adj",
            big_u1.is_subset(ca) && !big_u2.is_empty() && big_u2.is_subset(cb),
            "U_1 and U_2 lie in different components",
        )?;
        let (q1, q2) = two_least(big_u1).expect("|U_1| ≥ 2");
        let r = big_u2.first().expect("nonempty");
        let mut edges = vec![(u, u2), (u1, u2), (u1, q1), (u1, q2), (u2, r)];
        edges.extend(star(q1, without(ca, &[q2]).iter()));
        edges.extend(star(r, cb.iter()));
        self.trace.push("5.2.1-adj", format!("u_1 = {u1}, u_2 = {u2}"), edges);
        Ok(())
    }

    fn case_522(&mut self) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let (n, delta, u) = (ctx.n, ctx.delta, ctx.u);
        self.threshold(
            "L2.14",
            n >= 143 && 4 * delta < n + 1,
            format!("n = {n} ≥ 143, 4δ = {} < n + 1", 4 * delta),
        )?;
        let comps = [&ctx.w_components[0], &ctx.w_components[1]];
        let meets = |i: usize, c: &VertexSet| !ctx.u_sets[i].is_disjoint(c);
        if let Some(j) = (0..delta).find(|&j| meets(j, comps[0]) && meets(j, comps[1])) {
            let uj = ctx.nbrs[j];
            self.trace.push("5.2.2-case1", format!("u_j = {uj} sees both components"), star(u, ctx.nbrs.iter().copied()));
            self.lemma214(comps[0], uj)?;
            return self.lemma214(comps[1], uj);
        }
        let q: [Vec<usize>; 2] =
            [0, 1].map(|s| (0..delta).filter(|&i| meets(i, comps[s])).collect());
        self.claim("5.2.2-Q", !q[0].is_empty() && !q[1].is_empty(), "both Q_1 and Q_2 are nonempty")?;
        let big = |s: usize| q[s].iter().copied().find(|&i| ctx.u_size(i) >= 2);
        match (big(0), big(1)) {
            (Some(a), Some(b)) => {
                self.trace.push("5.2.2-case2-a", "both sides have |U_i| ≥ 2", star(u, ctx.nbrs.iter().copied()));
                self.lemma214(comps[0], ctx.nbrs[a])?;
                self.lemma214(comps[1], ctx.nbrs[b])
            }
            (None, None) => {
                self.threshold("L2.8", 2 * delta + 3 < n, format!("2δ = {} < n − 3", 2 * delta))?;
                let clique = lemma28_clique_check(&ctx, g);
                self.claim("L2.8", clique, "N(u) is a clique when every |U_i| ≤ 1")?;
                let (ua, ub) = (ctx.nbrs[q[0][0]], ctx.nbrs[q[1][0]]);
                let ud = ctx.nbrs.iter().copied().find(|&x| x != ua && x != ub).expect("δ ≥ 3");
                let mut edges = star(ua, without(&ctx.closed_nbhd(), &[ud]).iter());
                edges.push((ub, ud));
                self.trace.push("5.2.2-case2-b", format!("u_a = {ua}, u_b = {ub}, u_δ = {ud}"), edges);
                self.lemma214(comps[0], ua)?;
                self.lemma214(comps[1], ub)
            }
            (Some(i1), None) => self.case_522c(0, i1, q[1][0]),
            (None, Some(i1)) => self.case_522c(1, i1, q[0][0]),
        }
    }

    fn case_522c(&mut self, side_a: usize, i1: usize, i2: usize) -> Step<()> {
        let ctx = self.ctx.clone();
        let g = self.g;
        let (n, delta, u) = (ctx.n, ctx.delta, ctx.u);
        let ca = &ctx.w_components[side_a];
        let cb = &ctx.w_components[1 - side_a];
        let (u1, u2) = (ctx.nbrs[i1], ctx.nbrs[i2]);
        if delta >= 4 {
            let uj = ctx.nbrs.iter().copied().find(|&x| g.has_edge(x, u2));
            let uj = self.claim_some("5.2.2-c", uj, "u_2 has a neighbor in N(u)")?;
            let mut edges = star(u, ctx.nbrs.iter().copied().filter(|&x| x != uj));
            edges.push((uj, u2));
            self.trace.push("5.2.2-case2-c", format!("u_1 = {u1}, u_2 = {u2}, u_j = {uj}"), edges);
            self.lemma214(ca, u1)?;
            return self.lemma214(cb, u2);
        }
        for c in [ca, cb] {
            self.claim("5.2.2-cliques", is_clique(g, c), "both components are cliques when δ = 3")?;
        }
        let i3 = (0..3).find(|&i| i != i1 && i != i2).expect("δ = 3");
        let u3 = ctx.nbrs[i3];
        let big_u2 = &ctx.u_sets[i2];
        if g.has_edge(u1, u2) {
            let (y1, y2) = two_least(&ctx.u_sets[i1]).expect("|U_1| ≥ 2");
            let yp = big_u2.first().expect("nonempty");
            let cand = [u1, u2, y1, y2, yp].into_iter().filter(|&y| g.has_edge(u3, y)).min();
            let mut edges = vec![(u, u2), (u1, u2), (u1, y1), (u1, y2), (u2, yp)];
            edges.extend(star(yp, cb.iter()));
            if let Some(y) = cand {
                let (yc, yo) = if y == y2 { (y2, y1) } else { (y1, y2) };
                edges.push((u3, y));
                edges.extend(star(yc, without(ca, &[yo]).iter()));
                self.trace.push("5.2.2-case2-7a", format!("u_3 = {u3} attaches at y = {y}"), edges);
            } else {
                let y = g.neighbors(u3).iter().copied().find(|&x| x != u);
                let y = self.claim_some("5.2.2-7b", y, "d(u_3) ≥ 2")?;
                self.claim("5.2.2-7b", ca.contains(y), "u_3 has a neighbor in C_A")?;
                let y3 = g.neighbors_in(y1, ca).iter().find(|&x| x != y && x != y2);
                let y3 = self.claim_some("5.2.2-7b", y3, "|C_A| ≥ 4")?;
                edges.extend([(u3, y), (y1, y3)]);
                edges.extend(star(y, without(ca, &[y2, y3]).iter()));
                self.trace.push("5.2.2-case2-7b", format!("u_3 = {u3} attaches at y = {y}"), edges);
            }
            return Ok(());
        }
        self.claim("5.2.2-8", g.has_edge(u2, u3), "u_2u_3 ∈ E")?;
        self.claim("5.2.2-8", 2 * ca.len() + 5 == n, format!("|C_A| = (n−5)/2, found {}", ca.len()))?;
        let mut c1p = ca.clone();
        c1p.insert(u1);
        self.claim("5.2.2-8", is_clique(g, &c1p), "C_A + u_1 is a clique")?;
        self.claim("5.2.2-8", big_u2.len() == 1, "|U_2| = 1")?;
        let x3 = big_u2.first().expect("nonempty");
        let seen = g.neighbors_in(u3, &c1p.union(cb));
        let in_a = seen.intersection(&c1p);
        if let Some((x1, x2)) = two_least(&in_a) {
            let mut edges = vec![(u, u2), (u2, u3), (u2, x3), (u3, x1), (u3, x2)];
            edges.extend(star(x1, without(&c1p, &[x2]).iter()));
            edges.extend(star(x3, cb.iter()));
            self.trace.push("5.2.2-case2-8a", format!("u_3 = {u3} sees x_1 = {x1}, x_2 = {x2}"), edges);
            return Ok(());
        }
        if seen.len() >= 2 {
            self.claim(
                "5.2.2-8b",
                in_a.to_vec() == [u1] && seen.len() == 2,
                "N(u_3) meets C_A + u_1 and C_B in exactly u_1 and one z",
            )?;
            let z = seen.iter().find(|&x| x != u1).expect("two members");
            let mut edges = vec![(u, u1), (u1, u3), (u3, u2), (u3, z)];
            edges.extend(star(u1, ca.iter()));
            edges.extend(star(z, cb.iter()));
            self.trace.push("5.2.2-case2-8b", format!("u_3 = {u3}, z = {z}"), edges);
            return Ok(());
        }
        self.claim("5.2.2-8c", false, "remaining configuration is H3, which family matching should have caught")
    }
}
