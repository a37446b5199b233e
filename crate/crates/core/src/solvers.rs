//! One decision procedure per tractable pattern family.
//!
//! Every procedure returns an [`Answer`]; positive answers carry a model
//! that has been re-checked, and a failed re-check is reported as an
//! internal error rather than as a negative answer.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::catalog::{self, PatternClass};
use crate::graph::{ContractionTrace, Graph, GraphError};
use crate::model::{lift_through_trace, Answer, Method, Model, ModelError, Violation};
use crate::oracle::{clique_minor_test, induced_minor_exhaustive, induced_subgraph_search, rooted_clique_minor};
use crate::oracle::{OracleConfig, OracleError};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("pattern is not a {0}")]
    Misclassified(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<GraphError> for SolveError {
    fn from(e: GraphError) -> Self {
        SolveError::Internal(e.to_string())
    }
}

impl From<Violation> for SolveError {
    fn from(v: Violation) -> Self {
        SolveError::Model(ModelError::Internal(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct SolverConfig {
    pub oracle: OracleConfig,
    /// Search for a model even when a structure theorem already decides.
    pub require_witness: bool,
}


pub fn gem_pattern() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| catalog::named_graph("gem").expect("catalog name"))
}

pub fn full_house_pattern() -> &'static Graph {
    static G: OnceLock<Graph> = OnceLock::new();
    G.get_or_init(|| catalog::named_graph("full_house").expect("catalog name"))
}

fn yes<'p, 'h>(pattern: &'p Graph, host: &'h Graph, bags: Vec<VertexSet>, method: Method) -> Result<Answer<'p, 'h>, SolveError> {
    let m = Model::new(pattern, host, bags)?.certify()?;
    Ok(Answer::yes(m, method))
}

/// Bags over a subgraph mapped back through its vertex map.
fn remap(bags: &[VertexSet], map: &[usize], n: usize) -> Vec<VertexSet> {
    bags.iter()
        .map(|b| VertexSet::from_iter_in(n, b.iter().map(|v| map[v])))
        .collect()
}

fn inverse(map: &[usize], n: usize) -> Vec<usize> {
    let mut inv = vec![usize::MAX; n];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

// ---------------------------------------------------------------------------
// Embedding enumeration

/// Injective maps `pattern -> host` where adjacency is exact on every pair
/// except the listed free pairs.
struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    free: Vec<VertexSet>,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, free_pairs: &[(usize, usize)]) -> Self {
        let k = pattern.vertex_count();
        let mut free = vec![VertexSet::new(k); k];
        for &(a, b) in free_pairs {
            free[a].insert(b);
            free[b].insert(a);
        }
        // Connected-first order: most placed neighbours, then degree.
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::new(k);
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| {
                    let back = pattern.adjacency(v).intersection(&placed).len();
                    (back, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex");
            placed.insert(next);
            order.push(next);
        }
        Embedder {
            host,
            pattern,
            order,
            free,
        }
    }

    /// Calls `f` on each embedding (indexed by pattern vertex) until it
    /// returns true; returns whether it did.
    fn for_each(&self, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let k = self.pattern.vertex_count();
        if k > self.host.vertex_count() {
            return false;
        }
        let mut map = vec![usize::MAX; k];
        let mut used = self.host.empty_set();
        self.rec(0, &mut map, &mut used, f)
    }

    fn rec(&self, i: usize, map: &mut [usize], used: &mut VertexSet, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == self.order.len() {
            return f(map);
        }
        let u = self.order[i];
        let mut cand = used.complement(self.host.vertex_count());
        for &w in &self.order[..i] {
            if self.free[u].contains(w) {
                continue;
            }
            let nb = self.host.adjacency(map[w]);
            if self.pattern.has_edge(u, w) {
                cand &= nb;
            } else {
                cand -= nb;
            }
        }
        for x in cand.iter() {
            map[u] = x;
            used.insert(x);
            let stop = self.rec(i + 1, map, used, f);
            used.remove(x);
            if stop {
                return true;
            }
        }
        map[u] = usize::MAX;
        false
    }
}

// ---------------------------------------------------------------------------
// Disjoint paths, cliques

pub fn solve_disjoint_paths<'p, 'h>(g: &'h Graph, h: &'p Graph) -> Result<Answer<'p, 'h>, SolveError> {
    if !catalog::is_disjoint_paths(h) {
        return Err(SolveError::Misclassified("disjoint union of paths"));
    }
    match induced_subgraph_search(g, h) {
        Some(map) => Ok(Answer::yes(Model::from_embedding(h, g, &map)?.certify()?, Method::DisjointPaths)),
        None => Ok(Answer::no(Method::DisjointPaths)),
    }
}

/// Induced `K_k` minors are exactly `K_k` minors.
pub fn solve_clique<'p, 'h>(g: &'h Graph, h: &'p Graph, cfg: &SolverConfig) -> Result<Answer<'p, 'h>, SolveError> {
    if !catalog::is_complete(h) {
        return Err(SolveError::Misclassified("complete graph"));
    }
    match clique_minor_test(g, h.vertex_count(), &cfg.oracle)? {
        Some(bags) => yes(h, g, bags, Method::Clique),
        None => Ok(Answer::no(Method::Clique)),
    }
}

/// `K_k + K_1`: a clique model in `G \ N[x]` for some `x`.
pub fn solve_clique_plus_isolated<'p, 'h>(
    g: &'h Graph,
    h: &'p Graph,
    cfg: &SolverConfig,
) -> Result<Answer<'p, 'h>, SolveError> {
    let (clique, iso) = catalog::clique_plus_isolated(h).ok_or(SolveError::Misclassified("clique plus isolated vertex"))?;
    let n = g.vertex_count();
    for x in 0..n {
        let mut closed = g.adjacency(x).clone();
        closed.insert(x);
        let (sub, map) = g.without(&closed);
        if let Some(bags) = clique_minor_test(&sub, clique.len(), &cfg.oracle)? {
            let lifted = remap(&bags, &map, n);
            let mut out = vec![VertexSet::new(n); h.vertex_count()];
            for (i, &c) in clique.iter().enumerate() {
                out[c] = lifted[i].clone();
            }
            out[iso] = VertexSet::singleton(n, x);
            return yes(h, g, out, Method::CliquePlusIsolated);
        }
    }
    Ok(Answer::no(Method::CliquePlusIsolated))
}

// ---------------------------------------------------------------------------
// One non-trivial bag

/// Whether `u` is a vertex the single-bag search is valid for: a flower
/// centre or the `u` role of a generalized house.
pub fn is_snt_vertex(h: &Graph, u: usize) -> bool {
    u < h.vertex_count()
        && (catalog::flower_at(h, u).is_some()
            || matches!(catalog::house_roles_with_u(h, u), Some(PatternClass::GeneralizedHouse(_))))
}

/// Exact test for patterns with a model whose only non-singleton bag is `u`.
pub fn solve_snt_single<'p, 'h>(g: &'h Graph, h: &'p Graph, u: usize) -> Result<Answer<'p, 'h>, SolveError> {
    if !is_snt_vertex(h, u) {
        return Err(SolveError::Misclassified("flower centre or house vertex"));
    }
    Ok(snt_search(g, h, u)?)
}

/// The single-bag search without the pattern check; only exact when `h`
/// admits such models.
pub fn snt_search<'p, 'h>(g: &'h Graph, h: &'p Graph, u: usize) -> Result<Answer<'p, 'h>, ModelError> {
    let n = g.vertex_count();
    let k = h.vertex_count();
    if k > n {
        return Ok(Answer::no(Method::SntSingle));
    }
    let mut rest = h.vertices();
    rest.remove(u);
    let (hu, hmap) = h.induced_subgraph(&rest);
    let nu = h.adjacency(u);
    let all = g.vertices();
    let mut found: Option<Vec<VertexSet>> = None;
    Embedder::new(g, &hu, &[]).for_each(&mut |phi| {
        let mut y = g.empty_set();
        let mut z = g.empty_set();
        for (i, &x) in phi.iter().enumerate() {
            if nu.contains(hmap[i]) {
                y.insert(x);
            } else {
                z.insert(x);
            }
        }
        let mut region = all.difference(&y);
        region -= &g.closed_neighborhood_of_set(&z);
        let hit = g.components_within(&region).into_iter().find(|c| {
            let reach = g.neighborhood_union(c);
            y.iter().all(|w| reach.contains(w))
        });
        if let Some(c) = hit {
            let mut bags = vec![VertexSet::new(n); k];
            for (i, &x) in phi.iter().enumerate() {
                bags[hmap[i]] = VertexSet::singleton(n, x);
            }
            bags[u] = c;
            found = Some(bags);
            return true;
        }
        false
    });
    match found {
        Some(bags) => Ok(Answer::yes(Model::new(h, g, bags)?.certify()?, Method::SntSingle)),
        None => Ok(Answer::no(Method::SntSingle)),
    }
}

// ---------------------------------------------------------------------------
// Generalized houses and bulls

pub fn solve_house_bull<'p, 'h>(g: &'h Graph, h: &'p Graph) -> Result<Answer<'p, 'h>, SolveError> {
    let roles = match catalog::is_generalized_house_or_bull(h) {
        Some(PatternClass::GeneralizedHouse(r)) | Some(PatternClass::GeneralizedBull { roles: r, .. }) => r,
        _ => return Err(SolveError::Misclassified("generalized house or bull")),
    };
    let n = g.vertex_count();
    if h.vertex_count() > n {
        return Ok(Answer::no(Method::HouseBull));
    }
    let b = roles.path[0];
    let c = *roles.path.last().expect("path has two vertices");
    let internal = &roles.path[1..roles.path.len() - 1];
    let all = g.vertices();
    let mut found: Option<Vec<VertexSet>> = None;
    let emb = Embedder::new(g, h, &[(roles.u, roles.v), (roles.u, b)]);
    emb.for_each(&mut |phi| {
        let (xa, xu, xv, xb, xc) = (phi[roles.a], phi[roles.u], phi[roles.v], phi[b], phi[c]);
        let mut inner_closed = g.empty_set();
        for &w in internal {
            inner_closed |= g.adjacency(phi[w]);
            inner_closed.insert(phi[w]);
        }
        // Region for X_u: away from c and the inner path, off a, v, b.
        let mut region_u = all.difference(&inner_closed);
        region_u -= g.adjacency(xc);
        for x in [xa, xv, xb, xc] {
            region_u.remove(x);
        }
        // Region for X_v: away from b and the inner path, off a, c, u.
        let mut region_v = all.difference(&inner_closed);
        region_v -= g.adjacency(xb);
        for x in [xa, xb, xc, xu] {
            region_v.remove(x);
        }
        // BFS tree from x_v; every tree path is a candidate X_v.
        let mut parent = vec![usize::MAX; n];
        let mut seen = VertexSet::singleton(n, xv);
        let mut queue = std::collections::VecDeque::from([xv]);
        while let Some(z) = queue.pop_front() {
            let mut tz = VertexSet::singleton(n, z);
            let mut p = z;
            while parent[p] != usize::MAX {
                p = parent[p];
                tz.insert(p);
            }
            let within = region_u.difference(&tz);
            if within.contains(xu) {
                let k = g.component_of(xu, &within);
                let reach = g.neighborhood_union(&k);
                if reach.contains(xb) && reach.intersects(&tz) {
                    let mut bags: Vec<VertexSet> = phi.iter().map(|&x| VertexSet::singleton(n, x)).collect();
                    bags[roles.u] = k;
                    bags[roles.v] = tz;
                    found = Some(bags);
                    return true;
                }
            }
            for w in g.adjacency(z).intersection(&region_v).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    parent[w] = z;
                    queue.push_back(w);
                }
            }
        }
        false
    });
    match found {
        Some(bags) => yes(h, g, bags, Method::HouseBull),
        None => Ok(Answer::no(Method::HouseBull)),
    }
}

// ---------------------------------------------------------------------------
// Complete split graphs

/// Inclusion-minimal sets meeting every family member, sorted.
fn minimal_hitting_sets(family: &[VertexSet], n: usize) -> Vec<VertexSet> {
    let mut all = BTreeSet::new();
    let mut cur = VertexSet::new(n);
    fn pick(i: usize, family: &[VertexSet], cur: &mut VertexSet, out: &mut BTreeSet<VertexSet>) {
        if i == family.len() {
            out.insert(cur.clone());
            return;
        }
        if family[i].intersects(cur) {
            pick(i + 1, family, cur, out);
            return;
        }
        for x in family[i].iter() {
            cur.insert(x);
            pick(i + 1, family, cur, out);
            cur.remove(x);
        }
    }
    pick(0, family, &mut cur, &mut all);
    all.into_iter()
        .filter(|z| {
            z.iter().all(|x| {
                let mut smaller = z.clone();
                smaller.remove(x);
                family.iter().any(|f| !f.intersects(&smaller))
            })
        })
        .collect()
}

/// `S_{k,p}` with `k <= 3`: singleton independent bags, then a rooted
/// clique model seeded by minimal hitting sets of their neighbourhoods.
pub fn solve_complete_split<'p, 'h>(g: &'h Graph, h: &'p Graph) -> Result<Answer<'p, 'h>, SolveError> {
    let (k, p, clique, independent) = catalog::is_complete_split(h).ok_or(SolveError::Misclassified("complete split graph"))?;
    if k > 3 {
        return Err(SolveError::Unsupported(format!(
            "complete split pattern with a clique of size {k}; singleton-independent models need k <= 3"
        )));
    }
    let n = g.vertex_count();
    if k + p > n {
        return Ok(Answer::no(Method::CompleteSplit));
    }
    let mut xs = Vec::with_capacity(p);
    let mut found = None;
    independent_tuples(g, p, 0, &mut xs, &mut |xs| {
        let taken = g.set_of(xs.iter().copied());
        let rest = taken.complement(n);
        let family: Vec<VertexSet> = xs.iter().map(|&x| g.adjacency(x).intersection(&rest)).collect();
        if family.iter().any(VertexSet::is_empty) {
            return Ok(false);
        }
        let seeds = minimal_hitting_sets(&family, n);
        let (sub, map) = g.induced_subgraph(&rest);
        let inv = inverse(&map, n);
        let mut chosen = Vec::with_capacity(k);
        let mut res = None;
        choose_disjoint(&seeds, k, 0, &mut chosen, &mut |roots: &[&VertexSet]| {
            let local: Vec<VertexSet> = roots
                .iter()
                .map(|r| VertexSet::from_iter_in(sub.vertex_count(), r.iter().map(|v| inv[v])))
                .collect();
            if let Some(bags) = rooted_clique_minor(&sub, &local)? {
                res = Some(remap(&bags, &map, n));
                return Ok(true);
            }
            Ok(false)
        })?;
        if let Some(cb) = res {
            let mut bags = vec![VertexSet::new(n); k + p];
            for (i, &c) in clique.iter().enumerate() {
                bags[c] = cb[i].clone();
            }
            for (j, &v) in independent.iter().enumerate() {
                bags[v] = VertexSet::singleton(n, xs[j]);
            }
            found = Some(bags);
            return Ok(true);
        }
        Ok(false)
    })?;
    match found {
        Some(bags) => yes(h, g, bags, Method::CompleteSplit),
        None => Ok(Answer::no(Method::CompleteSplit)),
    }
}

/// Increasing tuples of `p` pairwise non-adjacent vertices.
fn independent_tuples(g: &Graph, p: usize, from: usize, xs: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<bool, SolveError>) -> Result<bool, SolveError> {
    if xs.len() == p {
        return f(xs);
    }
    for x in from..g.vertex_count() {
        if xs.iter().any(|&y| g.has_edge(x, y)) {
            continue;
        }
        xs.push(x);
        let stop = independent_tuples(g, p, x + 1, xs, f)?;
        xs.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Increasing index tuples of `k` pairwise disjoint sets.
fn choose_disjoint<'s>(
    sets: &'s [VertexSet],
    k: usize,
    from: usize,
    chosen: &mut Vec<&'s VertexSet>,
    f: &mut dyn FnMut(&[&'s VertexSet]) -> Result<bool, SolveError>,
) -> Result<bool, SolveError> {
    if chosen.len() == k {
        return f(chosen);
    }
    for i in from..sets.len() {
        if chosen.iter().any(|c| c.intersects(&sets[i])) {
            continue;
        }
        chosen.push(&sets[i]);
        let stop = choose_disjoint(sets, k, i + 1, chosen, f)?;
        chosen.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Bounded bags in P_t-free hosts

/// Largest bag a minimal model can need for a vertex of degree `deg`.
pub fn pt_free_bag_bound(deg: usize, t: usize) -> usize {
    if deg <= 1 {
        1
    } else {
        1 + deg * t.saturating_sub(2)
    }
}

/// Connected subsets of `allowed` with at most `cap` vertices, smaller
/// sets first within each minimum vertex. Stops when `f` returns true.
pub(crate) fn for_each_connected_set(g: &Graph, allowed: &VertexSet, cap: usize, f: &mut dyn FnMut(&VertexSet) -> bool) -> bool {
    fn grow(
        g: &Graph,
        region: &VertexSet,
        cap: usize,
        s: &VertexSet,
        ext: &VertexSet,
        excl: &VertexSet,
        f: &mut dyn FnMut(&VertexSet) -> bool,
    ) -> bool {
        let Some(w) = ext.first().filter(|_| s.len() < cap) else {
            return f(s);
        };
        let mut ext2 = ext.clone();
        ext2.remove(w);
        let mut excl2 = excl.clone();
        excl2.insert(w);
        if grow(g, region, cap, s, &ext2, &excl2, f) {
            return true;
        }
        let mut s2 = s.clone();
        s2.insert(w);
        let mut fresh = g.adjacency(w).intersection(region);
        fresh -= &s2;
        fresh -= excl;
        ext2 |= &fresh;
        grow(g, region, cap, &s2, &ext2, excl, f)
    }
    if cap == 0 {
        return false;
    }
    for v in allowed.iter() {
        let region = allowed.above(v);
        let s = VertexSet::singleton(g.vertex_count(), v);
        let ext = g.adjacency(v).intersection(&region);
        if grow(g, &region, cap, &s, &ext, &VertexSet::new(g.vertex_count()), f) {
            return true;
        }
    }
    false
}

struct BoundedSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    caps: Vec<usize>,
}

impl BoundedSearch<'_> {
    fn new<'a>(g: &'a Graph, h: &'a Graph, t: usize) -> BoundedSearch<'a> {
        let k = h.vertex_count();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&u| (std::cmp::Reverse(h.degree(u)), u));
        let caps = (0..k).map(|u| pt_free_bag_bound(h.degree(u), t)).collect();
        BoundedSearch { g, h, order, caps }
    }

    fn run(&self) -> Option<Vec<VertexSet>> {
        let k = self.h.vertex_count();
        if k > self.g.vertex_count() {
            return None;
        }
        let mut bags = vec![self.g.empty_set(); k];
        let mut used = self.g.empty_set();
        self.rec(0, &mut bags, &mut used).then_some(bags)
    }

    /// Host vertices a bag for `x` may use given the bags placed so far.
    fn region(&self, x: usize, bags: &[VertexSet], used: &VertexSet) -> VertexSet {
        let mut r = used.complement(self.g.vertex_count());
        for (w, b) in bags.iter().enumerate() {
            if w != x && !b.is_empty() && !self.h.has_edge(x, w) {
                r -= &self.g.closed_neighborhood_of_set(b);
            }
        }
        r
    }

    fn feasible(&self, i: usize, bags: &[VertexSet], used: &VertexSet) -> bool {
        self.order[i..].iter().all(|&x| {
            let r = self.region(x, bags, used);
            !r.is_empty()
                && self.h.adjacency(x).iter().all(|w| {
                    bags[w].is_empty() || self.g.neighborhood_union(&bags[w]).intersects(&r)
                })
        })
    }

    fn rec(&self, i: usize, bags: &mut Vec<VertexSet>, used: &mut VertexSet) -> bool {
        if i == self.order.len() {
            return true;
        }
        let u = self.order[i];
        let allowed = self.region(u, bags, used);
        let reach: Vec<VertexSet> = self
            .h
            .adjacency(u)
            .iter()
            .filter(|&w| !bags[w].is_empty())
            .map(|w| self.g.neighborhood_union(&bags[w]))
            .collect();
        let path_like = self.h.degree(u) == 2;
        let g = self.g;
        let mut stack = std::mem::take(bags);
        let found = for_each_connected_set(g, &allowed, self.caps[u], &mut |s| {
            if !reach.iter().all(|r| r.intersects(s)) {
                return false;
            }
            // Minimal models use induced paths for degree-two vertices.
            if path_like && g.path_order(s).is_none() {
                return false;
            }
            stack[u] = s.clone();
            *used |= s;
            let ok = self.feasible(i + 1, &stack, used) && self.rec(i + 1, &mut stack, used);
            if !ok {
                *used -= s;
                stack[u] = g.empty_set();
            }
            ok
        });
        *bags = stack;
        found
    }
}

/// Exhaustive search over bags of bounded size, exact on `P_t`-free hosts.
pub fn solve_pt_free<'p, 'h>(g: &'h Graph, h: &'p Graph, t: usize) -> Result<Answer<'p, 'h>, SolveError> {
    if t == 0 || !g.is_pt_free(t) {
        return Err(SolveError::Precondition(format!("host is not P{t}-free")));
    }
    match BoundedSearch::new(g, h, t).run() {
        Some(bags) => yes(h, g, bags, Method::PtFree),
        None => Ok(Answer::no(Method::PtFree)),
    }
}

// ---------------------------------------------------------------------------
// Block-wise structure solvers

/// Outcome of deciding one block (or one graph).
#[derive(Debug)]
enum Verdict {
    No,
    /// Bags over the graph that was decided.
    Yes(Vec<VertexSet>),
    /// Positive by a structure theorem; carries the graph part that
    /// should be searched for a model.
    Structure(VertexSet),
}

type BlockFn<'a> = &'a dyn Fn(&Graph) -> Result<Verdict, SolveError>;

/// Decides every block with at least `min` vertices; a witness from any
/// block wins over a structure-only answer.
fn scan_blocks(g: &Graph, min: usize, block: BlockFn<'_>) -> Result<Verdict, SolveError> {
    let n = g.vertex_count();
    let mut structure = None;
    for set in g.biconnected_components().into_iter().filter(|b| b.len() >= min) {
        let (bg, map) = g.induced_subgraph(&set);
        match block(&bg)? {
            Verdict::No => {}
            Verdict::Yes(bags) => return Ok(Verdict::Yes(remap(&bags, &map, n))),
            Verdict::Structure(_) => {
                structure.get_or_insert(set);
            }
        }
    }
    Ok(structure.map_or(Verdict::No, Verdict::Structure))
}

fn core_oracle(cfg: &SolverConfig) -> OracleConfig {
    OracleConfig {
        max_host_size: 64,
        ..cfg.oracle
    }
}

/// Model of `pattern` in the quotient `tr.target()`, lifted to the source.
fn lift_core(tr: &ContractionTrace<'_>, pattern: &Graph, cfg: &SolverConfig) -> Result<Vec<VertexSet>, SolveError> {
    let m = induced_minor_exhaustive(tr.target(), pattern, &core_oracle(cfg))?
        .ok_or_else(|| SolveError::Internal("reduced core has no model".into()))?;
    Ok(lift_through_trace(&m, tr)?.into_bags())
}

/// Shrinks `g` by deletions and contractions that keep the answer positive
/// until the exhaustive search applies, then lifts its model.
fn self_reduce(g: &Graph, pattern: &Graph, cfg: &SolverConfig, decide: &dyn Fn(&Graph) -> Result<Verdict, SolveError>) -> Result<Vec<VertexSet>, SolveError> {
    let n = g.vertex_count();
    let lift = |parts: &[VertexSet], bags: &[VertexSet]| -> Vec<VertexSet> {
        bags.iter()
            .map(|b| {
                let mut out = VertexSet::new(n);
                for x in b.iter() {
                    out |= &parts[x];
                }
                out
            })
            .collect()
    };
    let mut parts: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
    let mut cur = g.clone();
    'outer: loop {
        if cur.vertex_count() <= cfg.oracle.max_host_size {
            let m = induced_minor_exhaustive(&cur, pattern, &cfg.oracle)?
                .ok_or_else(|| SolveError::Internal("self-reduction lost the model".into()))?;
            return Ok(lift(&parts, m.bags()));
        }
        for x in 0..cur.vertex_count() {
            let (next, map) = cur.without(&VertexSet::singleton(cur.vertex_count(), x));
            let next_parts: Vec<VertexSet> = map.iter().map(|&i| parts[i].clone()).collect();
            match decide(&next)? {
                Verdict::No => {}
                Verdict::Yes(bags) => return Ok(lift(&next_parts, &bags)),
                Verdict::Structure(_) => {
                    cur = next;
                    parts = next_parts;
                    continue 'outer;
                }
            }
        }
        for (a, b) in cur.edges() {
            let tr = cur.contract_edges_traced(&[(a, b)])?;
            let next_parts: Vec<VertexSet> = tr.preimages().iter().map(|pre| lift(&parts, std::slice::from_ref(pre)).remove(0)).collect();
            let next = tr.target().clone();
            match decide(&next)? {
                Verdict::No => {}
                Verdict::Yes(bags) => return Ok(lift(&next_parts, &bags)),
                Verdict::Structure(_) => {
                    cur = next;
                    parts = next_parts;
                    continue 'outer;
                }
            }
        }
        return Err(SolveError::Internal("self-reduction stalled".into()));
    }
}

/// Turns a graph-level verdict into an answer for the catalog pattern.
fn finish<'h>(
    g: &'h Graph,
    pattern: &'static Graph,
    verdict: Verdict,
    method: Method,
    cfg: &SolverConfig,
    decide: &dyn Fn(&Graph) -> Result<Verdict, SolveError>,
) -> Result<Answer<'static, 'h>, SolveError> {
    match verdict {
        Verdict::No => Ok(Answer::no(method)),
        Verdict::Yes(bags) => yes(pattern, g, bags, method),
        Verdict::Structure(set) => {
            let (bg, map) = g.induced_subgraph(&set);
            let local = if bg.vertex_count() <= cfg.oracle.max_host_size {
                induced_minor_exhaustive(&bg, pattern, &cfg.oracle)?
                    .ok_or_else(|| SolveError::Internal("structure theorem answer without a model".into()))?
                    .into_bags()
            } else if cfg.require_witness {
                self_reduce(&bg, pattern, cfg, decide)?
            } else {
                return Ok(Answer::certified(method));
            };
            yes(pattern, g, remap(&local, &map, g.vertex_count()), method)
        }
    }
}

// ---------------------------------------------------------------------------
// Gem

/// A set of at most six vertices whose removal leaves only cographs and
/// paths with inner vertices of degree two.
pub fn gem_separator(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    let ok = |x: &VertexSet| {
        let rest = x.complement(n);
        g.components_within(&rest).iter().all(|c| {
            g.induced_subgraph(c).0.is_p4_free() || thin_path(g, c).is_some()
        })
    };
    (0..=6.min(n)).find_map(|size| first_subset(n, size, &ok))
}

/// Path order of `c` when its inner vertices have degree two in `g`.
fn thin_path(g: &Graph, c: &VertexSet) -> Option<Vec<usize>> {
    let order = g.path_order(c)?;
    let inner = &order[1..order.len().saturating_sub(1).max(1)];
    inner.iter().all(|&v| g.degree(v) == 2).then_some(order)
}

/// First `size`-subset of `0..n` in lexicographic order satisfying `ok`.
fn first_subset(n: usize, size: usize, ok: &dyn Fn(&VertexSet) -> bool) -> Option<VertexSet> {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let s = VertexSet::from_iter_in(n, idx.iter().copied());
        if ok(&s) {
            return Some(s);
        }
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Upper end of the induced-path bound after path compression.
const GEM_T: usize = 28;

fn gem_block(bg: &Graph) -> Result<Verdict, SolveError> {
    let n = bg.vertex_count();
    let Some(x) = gem_separator(bg) else {
        return Ok(Verdict::Structure(bg.vertices()));
    };
    // Collapse the inner vertices of every long thin path into one.
    let mut parts = Vec::new();
    let mut covered = bg.empty_set();
    for c in bg.components_within(&x.complement(n)) {
        if bg.induced_subgraph(&c).0.is_p4_free() {
            continue;
        }
        let order = thin_path(bg, &c).expect("separator components are cographs or paths");
        let inner = VertexSet::from_iter_in(n, order[1..order.len() - 1].iter().copied());
        covered |= &inner;
        parts.push(inner);
    }
    for v in covered.complement(n).iter() {
        parts.push(VertexSet::singleton(n, v));
    }
    parts.sort();
    let tr = ContractionTrace::from_parts(bg, parts, false)?;
    let t = tr
        .target()
        .pt_free_threshold(GEM_T)
        .ok_or_else(|| SolveError::Internal(format!("compressed block has an induced path on {GEM_T} vertices")))?;
    match BoundedSearch::new(tr.target(), gem_pattern(), t).run() {
        Some(bags) => Ok(Verdict::Yes(bags.iter().map(|b| tr.lift_set(b)).collect())),
        None => Ok(Verdict::No),
    }
}

fn gem_graph(g: &Graph) -> Result<Verdict, SolveError> {
    scan_blocks(g, 5, &gem_block)
}

pub fn solve_gem<'h>(g: &'h Graph, cfg: &SolverConfig) -> Result<Answer<'static, 'h>, SolveError> {
    let verdict = gem_graph(g)?;
    finish(g, gem_pattern(), verdict, Method::Gem, cfg, &gem_graph)
}

// ---------------------------------------------------------------------------
// Full house

/// Whether two twins attached to `attached` of the `cycle_len` vertices
/// of an induced cycle, `independent` of them in total, give a full house.
pub fn ci_formula(cycle_len: usize, independent: usize, attached: usize) -> bool {
    independent >= 2
        && ((attached < cycle_len && cycle_len >= 4 && attached >= 3) || (attached == cycle_len && cycle_len >= 5))
}

/// Longest induced path bound for wheel plus complete multipartite hosts.
const FH_T: usize = 24;

/// A subdivided chain between two branch vertices.
struct Chain {
    ends: (usize, usize),
    inner: Vec<usize>,
}

/// Branch vertices and chains when `g` is a subdivision of a simple graph
/// with minimum degree three.
fn subdivision_base(g: &Graph) -> Option<(Vec<usize>, Vec<Chain>)> {
    let branch: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= 3).collect();
    if branch.is_empty() || (0..g.vertex_count()).any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut chains = Vec::new();
    let mut pairs = BTreeSet::new();
    for &b in &branch {
        for w in g.adjacency(b).iter() {
            let (mut prev, mut cur) = (b, w);
            let mut inner = Vec::new();
            while g.degree(cur) == 2 {
                inner.push(cur);
                let next = g.adjacency(cur).iter().find(|&x| x != prev)?;
                prev = cur;
                cur = next;
            }
            if cur == b {
                return None;
            }
            if b < cur {
                if !pairs.insert((b, cur)) {
                    return None;
                }
                chains.push(Chain { ends: (b, cur), inner });
            }
        }
    }
    Some((branch, chains))
}

enum BaseKind {
    K4,
    Prism,
    K33,
}

fn fh_subdivision(bg: &Graph, cfg: &SolverConfig) -> Result<Option<Verdict>, SolveError> {
    let Some((branch, chains)) = subdivision_base(bg) else {
        return Ok(None);
    };
    let pos = inverse(&branch, bg.vertex_count());
    let base_edges: Vec<(usize, usize)> = chains.iter().map(|c| (pos[c.ends.0], pos[c.ends.1])).collect();
    let base = Graph::from_edges(branch.len(), &base_edges)?;
    let kind = [
        (BaseKind::K4, "k4"),
        (BaseKind::Prism, "prism"),
        (BaseKind::K33, "k33"),
    ]
    .into_iter()
    .find(|(_, name)| base.is_isomorphic(&catalog::named_graph(name).expect("catalog name")))
    .map(|(k, _)| k);
    let Some(kind) = kind else {
        return Ok(None);
    };
    let in_triangle = |(x, y): (usize, usize)| base.adjacency(x).intersects(base.adjacency(y));
    let chosen = chains.iter().zip(&base_edges).position(|(c, &e)| {
        !c.inner.is_empty()
            && match kind {
                BaseKind::K4 => false,
                BaseKind::Prism => in_triangle(e),
                BaseKind::K33 => true,
            }
    });
    let Some(chosen) = chosen else {
        return Ok(Some(Verdict::No));
    };
    // Core: the base with the chosen edge subdivided once.
    let n = bg.vertex_count();
    let mut parts: Vec<VertexSet> = branch.iter().map(|&b| VertexSet::singleton(n, b)).collect();
    for (i, c) in chains.iter().enumerate() {
        if i != chosen {
            for &v in &c.inner {
                parts[pos[c.ends.0]].insert(v);
            }
        }
    }
    parts.push(VertexSet::from_iter_in(n, chains[chosen].inner.iter().copied()));
    let tr = ContractionTrace::from_parts(bg, parts, false)?;
    Ok(Some(Verdict::Yes(lift_core(&tr, full_house_pattern(), cfg)?)))
}

/// A wheel on at most five vertices whose complement side is complete
/// multipartite.
pub fn wheel_multipartite_split(g: &Graph) -> Option<VertexSet> {
    let n = g.vertex_count();
    [4, 5].into_iter().filter(|&s| s <= n).find_map(|size| {
        first_subset(n, size, &|w| {
            g.induced_subgraph(w).0.is_wheel() && g.induced_subgraph(&w.complement(n)).0.is_complete_multipartite().is_some()
        })
    })
}

/// An independent set of false twins whose removal leaves an induced
/// cycle, as (cycle in order, twins).
pub fn cycle_twin_split(g: &Graph) -> Option<(Vec<usize>, VertexSet)> {
    let n = g.vertex_count();
    let mut classes: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for v in 0..n {
        classes.entry(g.adjacency(v).clone()).or_insert_with(|| g.empty_set()).insert(v);
    }
    for class in classes.values() {
        let members = class.to_vec();
        for drop in 0..=2.min(members.len() - 1) {
            let hit = first_subset(members.len(), drop, &|r| {
                let i = VertexSet::from_iter_in(n, members.iter().enumerate().filter(|(j, _)| !r.contains(*j)).map(|(_, &v)| v));
                g.is_cycle_set(&i.complement(n))
            });
            if let Some(r) = hit {
                let i = VertexSet::from_iter_in(n, members.iter().enumerate().filter(|(j, _)| !r.contains(*j)).map(|(_, &v)| v));
                let c = i.complement(n);
                return Some((cycle_order(g, &c), i));
            }
        }
    }
    None
}

/// Vertices of an induced cycle in cyclic order from its smallest vertex.
fn cycle_order(g: &Graph, c: &VertexSet) -> Vec<usize> {
    let start = c.first().expect("cycle is non-empty");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.adjacency(start).intersection(c).first().expect("cycle vertex has neighbours");
    while cur != start {
        order.push(cur);
        let next = g
            .adjacency(cur)
            .intersection(c)
            .iter()
            .find(|&x| x != prev)
            .expect("cycle vertex has two neighbours");
        prev = cur;
        cur = next;
    }
    order
}

fn fh_cycle_twins(bg: &Graph, cycle: &[usize], twins: &VertexSet, cfg: &SolverConfig) -> Result<Verdict, SolveError> {
    let n = bg.vertex_count();
    let m = cycle.len();
    let rep = twins.first().expect("twin class is non-empty");
    let attach = bg.adjacency(rep);
    let attached: Vec<usize> = (0..m).filter(|&i| attach.contains(cycle[i])).collect();
    if !ci_formula(m, twins.len(), attached.len()) {
        return Ok(Verdict::No);
    }
    let arc = |idx: &mut dyn Iterator<Item = usize>| VertexSet::from_iter_in(n, idx.map(|i| cycle[i % m]));
    let mut parts = if attached.len() < m {
        // Rotate so that an unattached vertex closes the cycle.
        let z = (0..m).find(|&i| !attach.contains(cycle[i])).expect("unattached vertex");
        let rot = |i: usize| (i + m - z - 1) % m;
        let mut q: Vec<usize> = attached.iter().map(|&i| rot(i)).collect();
        q.sort();
        let r = q.len();
        let off = z + 1;
        vec![
            arc(&mut (q[r - 1] + 1..m + q[0]).map(|i| i + off)),
            arc(&mut (q[0]..q[1]).map(|i| i + off)),
            arc(&mut (q[1]..q[2]).map(|i| i + off)),
            arc(&mut (q[2]..=q[r - 1]).map(|i| i + off)),
        ]
    } else {
        let mut p: Vec<VertexSet> = (0..4).map(|i| arc(&mut std::iter::once(i))).collect();
        p.push(arc(&mut (4..m)));
        p
    };
    parts.extend(twins.iter().take(2).map(|v| VertexSet::singleton(n, v)));
    let tr = ContractionTrace::from_parts(bg, parts, true)?;
    Ok(Verdict::Yes(lift_core(&tr, full_house_pattern(), cfg)?))
}

fn fh_block(bg: &Graph, cfg: &SolverConfig) -> Result<Verdict, SolveError> {
    if clique_minor_test(bg, 4, &cfg.oracle)?.is_none() {
        return Ok(Verdict::No);
    }
    if let Some(v) = fh_subdivision(bg, cfg)? {
        return Ok(v);
    }
    if wheel_multipartite_split(bg).is_some() {
        return match bg.pt_free_threshold(FH_T) {
            Some(t) => Ok(BoundedSearch::new(bg, full_house_pattern(), t).run().map_or(Verdict::No, Verdict::Yes)),
            None if bg.vertex_count() <= cfg.oracle.max_host_size => Ok(induced_minor_exhaustive(bg, full_house_pattern(), &cfg.oracle)?
                .map_or(Verdict::No, |m| Verdict::Yes(m.into_bags()))),
            None => Err(SolveError::Internal(format!("wheel plus multipartite block has an induced path on {FH_T} vertices"))),
        };
    }
    if let Some((cycle, twins)) = cycle_twin_split(bg) {
        return fh_cycle_twins(bg, &cycle, &twins, cfg);
    }
    Ok(Verdict::Structure(bg.vertices()))
}

pub fn solve_full_house<'h>(g: &'h Graph, cfg: &SolverConfig) -> Result<Answer<'static, 'h>, SolveError> {
    let decide = |x: &Graph| scan_blocks(x, 5, &|b| fh_block(b, cfg));
    let verdict = decide(g)?;
    finish(g, full_house_pattern(), verdict, Method::FullHouse, cfg, &decide)
}

/// Re-expresses a model of a catalog pattern over an isomorphic pattern.
pub fn transfer<'p, 'h>(m: &Model<'_, 'h>, h: &'p Graph) -> Result<Model<'p, 'h>, SolveError> {
    let iso = h
        .find_isomorphism(m.pattern())
        .ok_or(SolveError::Misclassified("pattern isomorphic to the catalog graph"))?;
    let bags = iso.iter().map(|&j| m.bag(j).clone()).collect();
    Ok(Model::new(h, m.host(), bags)?.certify()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn oracle(g: &Graph, h: &Graph) -> bool {
        induced_minor_exhaustive(g, h, &OracleConfig::default()).unwrap().is_some()
    }

    fn check(a: &Answer<'_, '_>) {
        if let Some(m) = &a.witness {
            assert!(m.is_valid());
        }
    }

    #[test]
    fn connected_sets_are_enumerated_once() {
        let g = Graph::cycle(5);
        let mut seen = BTreeSet::new();
        for_each_connected_set(&g, &g.vertices(), 5, &mut |s| {
            assert!(g.is_connected_set(s));
            assert!(seen.insert(s.clone()));
            false
        });
        // 5 singletons, 5 of each size 2..4, one full cycle.
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn disjoint_paths_examples() {
        let c6 = Graph::cycle(6);
        let p5 = Graph::path(5);
        assert!(solve_disjoint_paths(&c6, &p5).unwrap().contains);
        let k4 = Graph::complete(4);
        assert!(!solve_disjoint_paths(&k4, &Graph::path(3)).unwrap().contains);
        let house = named_graph("house").unwrap();
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!solve_disjoint_paths(&house, &two_k2).unwrap().contains);
    }

    #[test]
    fn snt_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let sub = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let a = solve_snt_single(&sub, &star, 0).unwrap();
        assert!(a.contains);
        check(&a);
        let c5 = Graph::cycle(5);
        let c9 = Graph::cycle(9);
        let a = solve_snt_single(&c9, &c5, 0).unwrap();
        assert!(a.contains);
        assert!(a.witness.unwrap().nontrivial_bags().len() <= 1);
        assert!(matches!(solve_snt_single(&c9, &Graph::complete(4), 0), Err(SolveError::Misclassified(_))));
    }

    #[test]
    fn house_bull_examples() {
        let house = named_graph("house").unwrap();
        assert!(solve_house_bull(&house, &house).unwrap().contains);
        assert!(!solve_house_bull(&Graph::cycle(5), &house).unwrap().contains);
        let bull = named_graph("bull").unwrap();
        assert!(solve_house_bull(&house, &bull).unwrap().contains == oracle(&house, &bull));
    }

    #[test]
    fn complete_split_examples() {
        let k5m = named_graph("k5_minus").unwrap();
        let s32 = catalog::complete_split(3, 2);
        assert!(solve_complete_split(&k5m, &s32).unwrap().contains);
        let crown = named_graph("crown").unwrap();
        let c6 = Graph::cycle(6);
        assert_eq!(solve_complete_split(&c6, &crown).unwrap().contains, oracle(&c6, &crown));
        let s42 = catalog::complete_split(4, 2);
        assert!(matches!(solve_complete_split(&c6, &s42), Err(SolveError::Unsupported(_))));
    }

    #[test]
    fn pt_free_examples() {
        let k5 = Graph::complete(5);
        let k3 = Graph::complete(3);
        let a = solve_pt_free(&k5, &k3, 3).unwrap();
        assert!(a.witness.unwrap().bags().iter().all(|b| b.len() == 1));
        let c4 = Graph::cycle(4);
        assert!(solve_pt_free(&c4, &c4, 4).unwrap().contains);
        assert!(matches!(solve_pt_free(&Graph::path(5), &k3, 4), Err(SolveError::Precondition(_))));
    }

    #[test]
    fn gem_examples() {
        let gem = named_graph("gem").unwrap();
        assert!(solve_gem(&gem, &cfg()).unwrap().contains);
        for n in 3..=9 {
            let c = Graph::cycle(n);
            assert!(!solve_gem(&c, &cfg()).unwrap().contains);
        }
        let mut e = Graph::cycle(6).edges();
        e.extend((0..6).map(|i| (i, 6)));
        let w6 = Graph::from_edges(7, &e).unwrap();
        let a = solve_gem(&w6, &cfg()).unwrap();
        assert_eq!(a.contains, oracle(&w6, &gem));
        check(&a);
    }

    #[test]
    fn full_house_examples() {
        let fh = named_graph("full_house").unwrap();
        let prism = named_graph("prism").unwrap();
        assert!(!solve_full_house(&prism, &cfg()).unwrap().contains);
        let sub = prism.subdivide_edge(0, 1).unwrap();
        let a = solve_full_house(&sub, &cfg()).unwrap();
        assert!(a.contains && oracle(&sub, &fh));
        check(&a);
        // C4 plus two twins on three consecutive cycle vertices.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]).unwrap();
        let a = solve_full_house(&g, &cfg()).unwrap();
        assert!(a.contains && oracle(&g, &fh));
        check(&a);
    }

    #[test]
    fn clique_plus_isolated_examples() {
        let k3k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(solve_clique_plus_isolated(&k3k1, &k3k1, &cfg()).unwrap().contains);
        let k1k1 = Graph::empty(2);
        assert!(!solve_clique_plus_isolated(&Graph::complete(5), &k1k1, &cfg()).unwrap().contains);
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(solve_clique_plus_isolated(&two, &k3k1, &cfg()).unwrap().contains);
    }

    #[test]
    fn transfer_relabels_bags() {
        let gem = named_graph("gem").unwrap();
        let perm = [4, 0, 1, 2, 3];
        let h = gem.relabel(&perm);
        let a = solve_gem(&gem, &cfg()).unwrap();
        let m = transfer(a.witness.as_ref().unwrap(), &h).unwrap();
        assert!(m.is_valid());
    }
}
