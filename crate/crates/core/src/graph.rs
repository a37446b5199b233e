//! Simple undirected graphs over dense vertex identifiers.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid contraction trace: {0}")]
    InvalidTrace(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected {expected} vertex labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// An immutable simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Labelled equality of the edge sets; vertex labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency sets; the caller guarantees symmetry.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!((0..n).all(|u| !adj[u].contains(u)
            && adj[u].iter().all(|v| v < n && adj[v].contains(u))));
        Graph {
            n,
            adj,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].above(u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighbourhood of `v`; panics when `v` is out of range.
    #[inline]
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter_in(self.n, it)
    }

    /// `∪_{v ∈ s} N(v)` (may intersect `s`).
    pub fn neighborhood_union(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out |= &self.adj[v];
        }
        out
    }

    /// `N[s] = ∪_{v ∈ s} N[v]`.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood_union(s);
        out |= s;
        out
    }

    /// `N(s) = N[s] \ s`.
    pub fn open_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood_union(s);
        out -= s;
        out
    }

    /// Whether some edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().any(|v| self.adj[v].intersects(b))
    }

    /// Subgraph induced by `s`, renumbered in ascending order, with the map
    /// from new identifiers to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let k = old.len();
        let adj = old
            .iter()
            .map(|&v| VertexSet::from_iter_in(k, self.adj[v].iter().filter_map(|w| {
                let i = new_of[w];
                (i != usize::MAX).then_some(i)
            })))
            .collect();
        let mut g = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(old.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, old)
    }

    /// `G \ s`, i.e. the subgraph induced by the complement of `s`.
    pub fn without(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&s.complement(self.n))
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, &edges).expect("union of simple graphs is simple")
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Copy of this graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Replace edge `uv` by a path `u - w - v`; `w` gets identifier `vertex_count()`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let w = self.n;
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| !((a, b) == (u.min(v), u.max(v))))
            .collect();
        edges.push((u, w));
        edges.push((v, w));
        Graph::from_edges(self.n + 1, &edges)
    }

    /// Contract the listed edges left to right, each merging into its
    /// smaller-index endpoint; identifiers are compacted after every step.
    pub fn contract_edges_traced(
        &self,
        edges: &[(usize, usize)],
    ) -> Result<ContractionTrace<'_>, GraphError> {
        let mut parts: Vec<VertexSet> = (0..self.n)
            .map(|v| VertexSet::singleton(self.n, v))
            .collect();
        let mut quotient_adj: Vec<VertexSet> = self.adj.clone();
        for &(a, b) in edges {
            let cur = parts.len();
            if a >= cur || b >= cur {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n: cur,
                });
            }
            if a == b || !quotient_adj[a].contains(b) {
                return Err(GraphError::NotAnEdge(a, b));
            }
            let (keep, gone) = (a.min(b), a.max(b));
            let merged = parts[gone].clone();
            parts[keep] |= &merged;
            parts.remove(gone);
            // rebuild the quotient adjacency over compacted ids
            let gone_adj = quotient_adj.remove(gone);
            let mut keep_adj = quotient_adj[keep].union(&gone_adj);
            keep_adj.remove(keep);
            keep_adj.remove(gone);
            quotient_adj[keep] = keep_adj;
            let k = parts.len();
            let old_adj = std::mem::take(&mut quotient_adj);
            quotient_adj = old_adj
                .into_iter()
                .enumerate()
                .map(|(i, s)| {
                    let mut out = VertexSet::new(k);
                    for j in s.iter() {
                        let j = if j == gone {
                            keep
                        } else if j > gone {
                            j - 1
                        } else {
                            j
                        };
                        if j != i {
                            out.insert(j);
                        }
                    }
                    out
                })
                .collect();
        }
        ContractionTrace::from_parts(self, parts, false)
    }

    /// Connected components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.component_of(v, within);
            left -= &comp;
            out.push(comp);
        }
        out
    }

    /// Vertex set of the component of `G[within]` containing `v`.
    pub fn component_of(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n, v);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = self.neighborhood_union(&frontier);
            next &= within;
            next -= &comp;
            comp |= &next;
            frontier = next;
        }
        comp
    }

    /// Whether `G[s]` is connected (the empty set is not).
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            Some(v) => self.component_of(v, s).len() == s.len(),
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(&self.vertices())
    }

    /// Blocks: maximal 2-connected subgraphs and bridges, as vertex sets.
    /// Isolated vertices form singleton blocks. Order is deterministic.
    pub fn biconnected_components(&self) -> Vec<VertexSet> {
        let n = self.n;
        let lists: Vec<Vec<usize>> = self.adj.iter().map(VertexSet::to_vec).collect();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if lists[root].is_empty() {
                disc[root] = timer;
                timer += 1;
                blocks.push(VertexSet::singleton(n, root));
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < lists[v].len() {
                    let w = lists[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = VertexSet::new(n);
                            while let Some((a, b)) = edge_stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (p, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    /// Number of vertices of a longest induced path, capped at `cap`
    /// (the search stops as soon as `cap` is reached).
    pub fn longest_induced_path(&self, cap: usize) -> usize {
        fn extend(
            g: &Graph,
            last: usize,
            len: usize,
            blocked: &VertexSet,
            cap: usize,
            best: &mut usize,
        ) -> bool {
            if len > *best {
                *best = len;
            }
            if *best >= cap {
                return true;
            }
            let cands = g.adj[last].difference(blocked);
            if cands.is_empty() {
                return false;
            }
            let mut next_blocked = blocked.clone();
            next_blocked |= &g.adj[last];
            next_blocked.insert(last);
            for w in cands.iter() {
                if extend(g, w, len + 1, &next_blocked, cap, best) {
                    return true;
                }
            }
            false
        }
        let mut best = 0;
        for s in 0..self.n {
            let blocked = VertexSet::singleton(self.n, s);
            if extend(self, s, 1, &blocked, cap, &mut best) {
                break;
            }
        }
        best.min(cap)
    }

    /// True iff there is no induced path on `t` vertices.
    pub fn is_pt_free(&self, t: usize) -> bool {
        assert!(t >= 1, "t must be positive");
        self.longest_induced_path(t) < t
    }

    /// Smallest `t <= limit` such that the graph is `P_t`-free.
    pub fn pt_free_threshold(&self, limit: usize) -> Option<usize> {
        let longest = self.longest_induced_path(limit);
        (longest < limit).then_some(longest + 1)
    }

    /// Cograph test: true iff no induced `P_4`. Checks every edge `bc` as
    /// the middle of a candidate `a-b-c-d`.
    pub fn is_p4_free(&self) -> bool {
        for (b, c) in self.edges() {
            let mut ends_b = self.adj[b].difference(&self.adj[c]);
            ends_b.remove(c);
            if ends_b.is_empty() {
                continue;
            }
            let mut ends_c = self.adj[c].difference(&self.adj[b]);
            ends_c.remove(b);
            if ends_c.is_empty() {
                continue;
            }
            for a in ends_b.iter() {
                if !ends_c.is_subset(&self.adj[a]) {
                    return false;
                }
            }
        }
        true
    }

    /// Parts of a complete multipartite structure (classes of the
    /// non-adjacency relation, ordered by smallest vertex), if one exists.
    pub fn is_complete_multipartite(&self) -> Option<Vec<VertexSet>> {
        let all = self.vertices();
        let mut parts = Vec::new();
        let mut seen = self.empty_set();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let class = all.difference(&self.adj[v]);
            for w in class.iter() {
                if all.difference(&self.adj[w]) != class {
                    return None;
                }
            }
            seen |= &class;
            parts.push(class);
        }
        Some(parts)
    }

    /// Whether `G[s]` is a chordless cycle on at least three vertices.
    pub fn is_cycle_set(&self, s: &VertexSet) -> bool {
        s.len() >= 3
            && s.iter().all(|v| self.adj[v].intersection(s).len() == 2)
            && self.is_connected_set(s)
    }

    pub fn is_cycle(&self) -> bool {
        self.is_cycle_set(&self.vertices())
    }

    /// If `G[s]` is an induced path, its vertices in order from the smaller end.
    pub fn path_order(&self, s: &VertexSet) -> Option<Vec<usize>> {
        let k = s.len();
        if k == 0 {
            return None;
        }
        if k == 1 {
            return Some(s.to_vec());
        }
        let mut ends = Vec::new();
        for v in s.iter() {
            match self.adj[v].intersection(s).len() {
                1 => ends.push(v),
                2 => {}
                _ => return None,
            }
        }
        if ends.len() != 2 {
            return None;
        }
        let mut order = vec![ends[0]];
        let mut prev = usize::MAX;
        let mut cur = ends[0];
        while order.len() < k {
            let next = self.adj[cur]
                .intersection(s)
                .iter()
                .find(|&w| w != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        (cur == ends[1]).then_some(order)
    }

    /// A cycle plus one vertex adjacent to at least one cycle vertex.
    pub fn is_wheel(&self) -> bool {
        self.wheel_hub().is_some()
    }

    /// Smallest vertex `w` such that `G - w` is a cycle and `w` has a neighbour.
    pub fn wheel_hub(&self) -> Option<usize> {
        if self.n < 4 {
            return None;
        }
        let all = self.vertices();
        (0..self.n).find(|&w| {
            let mut rest = all.clone();
            rest.remove(w);
            self.degree(w) >= 1 && self.is_cycle_set(&rest)
        })
    }

    /// BFS distances from `sources` inside `allowed` (`usize::MAX` = unreachable).
    pub fn distances_within(&self, sources: &VertexSet, allowed: &VertexSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in sources.iter().filter(|&s| allowed.contains(s)) {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v].iter() {
                if dist[w] == usize::MAX && allowed.contains(w) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path in `G \ forbidden` from a vertex of `from` to a vertex
    /// of `to`; among shortest paths, the lexicographically smallest vertex
    /// sequence.
    pub fn shortest_path_avoiding(
        &self,
        from: &VertexSet,
        to: &VertexSet,
        forbidden: &VertexSet,
    ) -> Option<Vec<usize>> {
        let allowed = forbidden.complement(self.n);
        let dist = self.distances_within(to, &allowed);
        let start = from
            .iter()
            .filter(|&v| v < self.n && dist[v] != usize::MAX && allowed.contains(v))
            .min_by_key(|&v| (dist[v], v))?;
        let mut path = vec![start];
        let mut cur = start;
        while dist[cur] > 0 {
            cur = self.adj[cur]
                .iter()
                .find(|&w| dist[w] == dist[cur] - 1)
                .expect("BFS layers are consistent");
            path.push(cur);
        }
        Some(path)
    }

    /// An isomorphism `self -> other` as a vertex map, if one exists.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return None;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        let order = {
            let mut o: Vec<usize> = (0..self.n).collect();
            o.sort_by_key(|&v| (std::cmp::Reverse(da[v]), v));
            o
        };
        {
            let (mut sa, mut sb) = (da.clone(), db.clone());
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = other.empty_set();
        fn go(
            a: &Graph,
            b: &Graph,
            order: &[usize],
            i: usize,
            map: &mut [usize],
            used: &mut VertexSet,
            da: &[usize],
            db: &[usize],
        ) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            for w in 0..b.n {
                if used.contains(w) || da[v] != db[w] {
                    continue;
                }
                let ok = order[..i]
                    .iter()
                    .all(|&x| a.has_edge(v, x) == b.has_edge(w, map[x]));
                if !ok {
                    continue;
                }
                map[v] = w;
                used.insert(w);
                if go(a, b, order, i + 1, map, used, da, db) {
                    return true;
                }
                used.remove(w);
                map[v] = usize::MAX;
            }
            false
        }
        let found = go(self, other, &order, 0, &mut map, &mut used, &da, &db);
        da.clear();
        db.clear();
        found.then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

/// Result of contracting (and possibly deleting) vertices of `source`:
/// target vertex `i` stands for the connected set `preimage[i]`.
#[derive(Clone, Debug)]
pub struct ContractionTrace<'g> {
    source: &'g Graph,
    target: Graph,
    preimage: Vec<VertexSet>,
    allows_deletion: bool,
}

impl<'g> ContractionTrace<'g> {
    pub fn identity(g: &'g Graph) -> Self {
        ContractionTrace {
            source: g,
            target: g.clone(),
            preimage: (0..g.n).map(|v| VertexSet::singleton(g.n, v)).collect(),
            allows_deletion: false,
        }
    }

    /// Quotient of `source` by the given parts. Parts must be non-empty,
    /// disjoint and connected; unless `allows_deletion`, they must cover
    /// every source vertex.
    pub fn from_parts(
        source: &'g Graph,
        parts: Vec<VertexSet>,
        allows_deletion: bool,
    ) -> Result<Self, GraphError> {
        let mut covered = source.empty_set();
        for (i, p) in parts.iter().enumerate() {
            source.check_set(p)?;
            if p.is_empty() {
                return Err(GraphError::InvalidTrace(format!("part {i} is empty")));
            }
            if covered.intersects(p) {
                return Err(GraphError::InvalidTrace(format!("part {i} overlaps an earlier part")));
            }
            if !source.is_connected_set(p) {
                return Err(GraphError::InvalidTrace(format!("part {i} is not connected")));
            }
            covered |= p;
        }
        if !allows_deletion && covered.len() != source.n {
            return Err(GraphError::InvalidTrace(
                "parts do not cover the source graph".into(),
            ));
        }
        let k = parts.len();
        let mut adj = vec![VertexSet::new(k); k];
        let reach: Vec<VertexSet> = parts.iter().map(|p| source.neighborhood_union(p)).collect();
        for i in 0..k {
            for j in i + 1..k {
                if reach[i].intersects(&parts[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Ok(ContractionTrace {
            source,
            target: Graph::from_adjacency(adj),
            preimage: parts,
            allows_deletion,
        })
    }

    pub fn source(&self) -> &'g Graph {
        self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn preimage(&self, v: usize) -> &VertexSet {
        &self.preimage[v]
    }

    pub fn preimages(&self) -> &[VertexSet] {
        &self.preimage
    }

    pub fn allows_deletion(&self) -> bool {
        self.allows_deletion
    }

    /// Union of the preimages of the vertices in `s`.
    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.source.empty_set();
        for v in s {
            out |= &self.preimage[v];
        }
        out
    }
}
