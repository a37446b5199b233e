//! Exhaustive reference procedures.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::model::Model;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("host has {n} vertices, above the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("roots {0} and {1} overlap")]
    OverlappingRoots(usize, usize),
    #[error("root {index} contains vertex {vertex} out of range")]
    RootOutOfRange { index: usize, vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest host accepted by the exhaustive searches.
    pub max_host_size: usize,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_host_size: 12,
            parallel: true,
        }
    }
}

/// Hard limit of the word-based search.
const WORD: usize = 64;

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

struct Assign {
    k: usize,
    order: Vec<usize>,
    /// Vertices at positions strictly after each index.
    future: Vec<u64>,
    adj: Vec<u64>,
    padj: Vec<u64>,
}

impl Assign {
    fn new(host: &Graph, pattern: &Graph) -> Self {
        let n = host.vertex_count();
        let adj: Vec<u64> = (0..n).map(|v| host.adjacency(v).low_word()).collect();
        let padj = (0..pattern.vertex_count())
            .map(|u| pattern.adjacency(u).low_word())
            .collect();
        // breadth-first order so bags close early
        let mut order = Vec::with_capacity(n);
        let mut seen = 0u64;
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            seen |= 1 << s;
            let start = order.len();
            order.push(s);
            let mut i = start;
            while i < order.len() {
                let v = order[i];
                for w in bits(adj[v] & !seen) {
                    seen |= 1 << w;
                    order.push(w);
                }
                i += 1;
            }
        }
        let mut future = vec![0u64; n];
        let mut acc = 0u64;
        for i in (0..n).rev() {
            future[i] = acc;
            acc |= 1 << order[i];
        }
        Assign {
            k: pattern.vertex_count(),
            order,
            future,
            adj,
            padj,
        }
    }

    #[inline]
    fn reach(&self, m: u64) -> u64 {
        bits(m).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Component of `m` containing its lowest vertex.
    fn first_component(&self, m: u64) -> u64 {
        let mut comp = m & m.wrapping_neg();
        loop {
            let next = (comp | self.reach(comp)) & m;
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    /// Places `order[idx]` in bag `lab` (`lab == k` deletes it); returns
    /// whether the partial assignment survives pruning.
    fn place(&self, idx: usize, lab: usize, bags: &mut [u64]) -> bool {
        let v = self.order[idx];
        if lab < self.k {
            for j in 0..self.k {
                if j != lab && bags[j] & self.adj[v] != 0 && self.padj[lab] >> j & 1 == 0 {
                    return false;
                }
            }
            bags[lab] |= 1 << v;
        }
        self.feasible(idx, bags)
    }

    fn feasible(&self, idx: usize, bags: &[u64]) -> bool {
        let fut = self.future[idx];
        let empty = bags.iter().filter(|&&b| b == 0).count();
        if empty > fut.count_ones() as usize {
            return false;
        }
        for (i, &b) in bags.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let r = self.reach(b);
            if r & fut == 0 {
                // closed: must already be a finished bag
                if self.first_component(b) != b {
                    return false;
                }
                if bits(self.padj[i]).any(|j| bags[j] & r == 0) {
                    return false;
                }
            } else {
                let mut rest = b;
                while rest != 0 {
                    let c = self.first_component(rest);
                    if c != b && self.reach(c) & fut == 0 {
                        return false;
                    }
                    rest &= !c;
                }
            }
        }
        true
    }

    fn search(&self, idx: usize, bags: &mut Vec<u64>) -> bool {
        if idx == self.order.len() {
            return true;
        }
        for lab in 0..=self.k {
            let saved = if lab < self.k { bags[lab] } else { 0 };
            if self.place(idx, lab, bags) && self.search(idx + 1, bags) {
                return true;
            }
            if lab < self.k {
                bags[lab] = saved;
            }
        }
        false
    }

    /// Surviving assignments of the first `depth` positions, in search order.
    fn prefixes(&self, depth: usize) -> Vec<(usize, Vec<u64>)> {
        let mut out = vec![(0, vec![0u64; self.k])];
        for idx in 0..depth.min(self.order.len()) {
            let mut next = Vec::new();
            for (_, bags) in out {
                for lab in 0..=self.k {
                    let mut b = bags.clone();
                    if self.place(idx, lab, &mut b) {
                        next.push((idx + 1, b));
                    }
                }
            }
            out = next;
        }
        out
    }
}

/// Exhaustive search for an induced minor model of `pattern` in `host`.
///
/// Every host vertex is given a pattern label or deleted; the first model in
/// search order is returned, so the result is deterministic with or without
/// parallelism.
pub fn induced_minor_exhaustive<'p, 'h>(
    host: &'h Graph,
    pattern: &'p Graph,
    cfg: &OracleConfig,
) -> Result<Option<Model<'p, 'h>>, OracleError> {
    let n = host.vertex_count();
    let cap = cfg.max_host_size.min(WORD);
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let k = pattern.vertex_count();
    if k > n {
        return Ok(None);
    }
    if k > WORD {
        return Err(OracleError::CapExceeded { n: k, cap: WORD });
    }
    let s = Assign::new(host, pattern);
    let found = if cfg.parallel && n >= 8 {
        s.prefixes(2).into_par_iter().find_map_first(|(idx, mut bags)| {
            s.search(idx, &mut bags).then_some(bags)
        })
    } else {
        let mut bags = vec![0u64; k];
        s.search(0, &mut bags).then_some(bags)
    };
    Ok(found.map(|bags| {
        let bags = bags.into_iter().map(|w| VertexSet::from_word(n, w)).collect();
        Model::new(pattern, host, bags).expect("bags are in range")
    }))
}

/// Injective map `pattern -> host` realizing `pattern` as an induced
/// subgraph, lexicographically first.
pub fn induced_subgraph_search(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    let used = host.empty_set();
    subgraph_rec(host, pattern, &mut map, &used).then_some(map)
}

fn subgraph_rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &VertexSet) -> bool {
    let i = map.len();
    if i == pattern.vertex_count() {
        return true;
    }
    let mut cand = used.complement(host.vertex_count());
    for (j, &x) in map.iter().enumerate() {
        if pattern.has_edge(i, j) {
            cand &= host.adjacency(x);
        } else {
            cand -= host.adjacency(x);
        }
    }
    let deg = pattern.degree(i);
    for x in cand.iter() {
        if host.degree(x) < deg {
            continue;
        }
        map.push(x);
        let mut u = used.clone();
        u.insert(x);
        if subgraph_rec(host, pattern, map, &u) {
            return true;
        }
        map.pop();
    }
    false
}

struct Rooted<'a> {
    g: &'a Graph,
    bags: Vec<VertexSet>,
    forbidden: Vec<VertexSet>,
    free: VertexSet,
}

impl Rooted<'_> {
    fn region(&self, i: usize) -> VertexSet {
        let open = self.free.difference(&self.forbidden[i]);
        if self.bags[i].is_empty() {
            return open;
        }
        let mut within = open;
        within |= &self.bags[i];
        let mut reach = self.bags[i].clone();
        loop {
            let next = self.g.neighborhood_union(&reach).intersection(&within);
            let mut grown = reach.clone();
            grown |= &next;
            if grown == reach {
                return reach;
            }
            reach = grown;
        }
    }

    fn hopeless(&self) -> bool {
        let k = self.bags.len();
        let regions: Vec<VertexSet> = (0..k).map(|i| self.region(i)).collect();
        for i in 0..k {
            let b = &self.bags[i];
            if let Some(v) = b.first() {
                if !b.is_subset(&self.g.component_of(v, &regions[i])) {
                    return true;
                }
            } else if regions[i].is_empty() {
                return true;
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                if !regions[i].intersects(&regions[j])
                    && !self.g.sets_adjacent(&regions[i], &regions[j])
                {
                    return true;
                }
            }
        }
        false
    }

    fn grow(&mut self, i: usize, cands: &VertexSet) -> bool {
        let mut banned = Vec::new();
        let mut ok = false;
        for w in cands.iter() {
            if self.forbidden[i].contains(w) || !self.free.contains(w) {
                continue;
            }
            self.bags[i].insert(w);
            self.free.remove(w);
            if self.run() {
                ok = true;
                break;
            }
            self.bags[i].remove(w);
            self.free.insert(w);
            self.forbidden[i].insert(w);
            banned.push(w);
        }
        if !ok {
            for w in banned {
                self.forbidden[i].remove(w);
            }
        }
        ok
    }

    fn run(&mut self) -> bool {
        if self.hopeless() {
            return false;
        }
        let k = self.bags.len();
        if let Some(i) = (0..k).find(|&i| self.bags[i].is_empty()) {
            let cands = self.free.clone();
            return self.grow(i, &cands);
        }
        for i in 0..k {
            let b = &self.bags[i];
            let c = self.g.component_of(b.first().expect("non-empty"), b);
            if c != *b {
                let cands = self.g.open_neighborhood_of_set(&c);
                return self.grow(i, &cands);
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                if !self.g.sets_adjacent(&self.bags[i], &self.bags[j]) {
                    let ci = self.g.open_neighborhood_of_set(&self.bags[i]);
                    let cj = self.g.open_neighborhood_of_set(&self.bags[j]);
                    let mut banned = Vec::new();
                    for w in ci.iter() {
                        if self.forbidden[i].contains(w) || !self.free.contains(w) {
                            continue;
                        }
                        self.bags[i].insert(w);
                        self.free.remove(w);
                        if self.run() {
                            return true;
                        }
                        self.bags[i].remove(w);
                        self.free.insert(w);
                        self.forbidden[i].insert(w);
                        banned.push(w);
                    }
                    let ok = self.grow(j, &cj);
                    if !ok {
                        for w in banned {
                            self.forbidden[i].remove(w);
                        }
                    }
                    return ok;
                }
            }
        }
        true
    }
}

/// A model of `K_k` (`k = roots.len()`) whose bag `i` contains `roots[i]`.
/// Empty roots leave the bag unconstrained.
pub fn rooted_clique_minor(host: &Graph, roots: &[VertexSet]) -> Result<Option<Vec<VertexSet>>, OracleError> {
    let n = host.vertex_count();
    let mut free = host.vertices();
    for (i, r) in roots.iter().enumerate() {
        if let Some(v) = r.last().filter(|&v| v >= n) {
            return Err(OracleError::RootOutOfRange { index: i, vertex: v });
        }
        for (j, s) in roots.iter().enumerate().take(i) {
            if r.intersects(s) {
                return Err(OracleError::OverlappingRoots(j, i));
            }
        }
        free -= r;
    }
    let mut st = Rooted {
        g: host,
        bags: roots
            .iter()
            .map(|r| VertexSet::from_iter_in(n, r.iter()))
            .collect(),
        forbidden: vec![host.empty_set(); roots.len()],
        free,
    };
    Ok(st.run().then_some(st.bags))
}

/// A model of `K_k` in `host`, as bags indexed `0..k`.
pub fn clique_minor_test(host: &Graph, k: usize, cfg: &OracleConfig) -> Result<Option<Vec<VertexSet>>, OracleError> {
    let n = host.vertex_count();
    let one = |v| VertexSet::singleton(n, v);
    match k {
        0 => Ok(Some(Vec::new())),
        1 => Ok((n > 0).then(|| vec![one(0)])),
        2 => Ok(host.edges().first().map(|&(u, v)| vec![one(u), one(v)])),
        3 => Ok(triangle_minor(host)),
        4 => Ok(k4_minor(host)),
        _ => {
            if n > cfg.max_host_size {
                return Err(OracleError::CapExceeded {
                    n,
                    cap: cfg.max_host_size,
                });
            }
            rooted_clique_minor(host, &vec![host.empty_set(); k])
        }
    }
}

fn triangle_minor(g: &Graph) -> Option<Vec<VertexSet>> {
    let n = g.vertex_count();
    for (u, v) in g.edges() {
        let rest = g.without_edge(u, v).expect("edge exists");
        let path = rest.shortest_path_avoiding(
            &VertexSet::singleton(n, v),
            &VertexSet::singleton(n, u),
            &VertexSet::new(n),
        );
        if let Some(p) = path {
            let inner = VertexSet::from_iter_in(n, p[1..p.len() - 1].iter().copied());
            return Some(vec![
                VertexSet::singleton(n, u),
                VertexSet::singleton(n, v),
                inner,
            ]);
        }
    }
    None
}

type PathMap = HashMap<(usize, usize), Vec<usize>>;

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Path stored for edge `ab`, oriented from `a` to `b`.
fn oriented(paths: &PathMap, a: usize, b: usize) -> Vec<usize> {
    let p = &paths[&key(a, b)];
    if a < b {
        p.clone()
    } else {
        p.iter().rev().copied().collect()
    }
}

/// Deletes vertices of degree at most one and bypasses vertices of degree
/// two until neither applies. Returns the surviving vertices; they span a
/// graph of minimum degree three, empty exactly when there is no `K_4`
/// minor. With `paths`, every surviving edge remembers the host path it
/// stands for.
fn series_parallel_reduce(adj: &mut [VertexSet], mut paths: Option<&mut PathMap>) -> VertexSet {
    let n = adj.len();
    let mut alive = VertexSet::full(n);
    loop {
        let Some(x) = alive.iter().find(|&x| adj[x].len() <= 2) else {
            return alive;
        };
        alive.remove(x);
        let nb = adj[x].to_vec();
        for &y in &nb {
            adj[y].remove(x);
        }
        adj[x].clear();
        if let [a, b] = nb[..] {
            let fresh = !adj[a].contains(b);
            if let Some(paths) = paths.as_deref_mut() {
                let mut p = oriented(paths, a, x);
                p.extend(oriented(paths, x, b).into_iter().skip(1));
                paths.remove(&key(a, x));
                paths.remove(&key(x, b));
                if fresh {
                    if a > b {
                        p.reverse();
                    }
                    paths.insert(key(a, b), p);
                }
            }
            if fresh {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        } else if let Some(paths) = paths.as_deref_mut() {
            for &y in &nb {
                paths.remove(&key(x, y));
            }
        }
    }
}

fn has_k4_minor(adj: &[VertexSet]) -> bool {
    let mut a = adj.to_vec();
    !series_parallel_reduce(&mut a, None).is_empty()
}

fn k4_minor(g: &Graph) -> Option<Vec<VertexSet>> {
    let n = g.vertex_count();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.adjacency(v).clone()).collect();
    let mut paths: PathMap = g.edges().into_iter().map(|(u, v)| ((u, v), vec![u, v])).collect();
    let alive = series_parallel_reduce(&mut adj, Some(&mut paths));
    if alive.is_empty() {
        return None;
    }
    // drop every edge the minor does not need; what is left is a subdivided K4
    for (u, v) in edge_list(&adj) {
        adj[u].remove(v);
        adj[v].remove(u);
        if !has_k4_minor(&adj) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    debug_assert_eq!(branch.len(), 4);
    let index = |v: usize| branch.iter().position(|&b| b == v);
    let mut bags: Vec<VertexSet> = branch.iter().map(|&b| VertexSet::singleton(n, b)).collect();
    for (i, &b) in branch.iter().enumerate() {
        for first in adj[b].iter() {
            let mut route = vec![b, first];
            while index(*route.last().expect("non-empty")).is_none() {
                let cur = route[route.len() - 1];
                let prev = route[route.len() - 2];
                let next = adj[cur].iter().find(|&w| w != prev).expect("degree two");
                route.push(next);
            }
            let j = index(*route.last().expect("non-empty")).expect("branch vertex");
            if j < i {
                continue;
            }
            for w in route.windows(2) {
                let p = oriented(&paths, w[0], w[1]);
                for &x in &p[..p.len() - 1] {
                    bags[i].insert(x);
                }
            }
        }
    }
    Some(bags)
}

fn edge_list(adj: &[VertexSet]) -> Vec<(usize, usize)> {
    (0..adj.len())
        .flat_map(|u| adj[u].above(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
        .collect()
}
