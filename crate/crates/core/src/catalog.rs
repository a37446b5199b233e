//! Named patterns and recognition of the tractable pattern families.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown pattern name `{0}`")]
pub struct UnknownPattern(pub String);

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graphs are simple")
}

/// Names accepted by [`named_graph`]; `path_n`, `cycle_n` and `complete_n`
/// take a vertex count suffix.
pub const NAMES: &[&str] = &[
    "path_n", "cycle_n", "complete_n", "house", "bull", "gem", "full_house", "crown",
    "k5_minus", "k23", "w4", "prism", "k33", "k4",
];

/// Catalog graphs with fixed numbering:
///
/// - `house`: square 0-1-2-3, roof vertex 4 on 0 and 1
/// - `bull`: triangle 0,1,2 with horns 3-0 and 4-1
/// - `gem`: path 0-1-2-3 plus 4 adjacent to all of it
/// - `full_house`: K4 on 0..3 plus 4 adjacent to 0 and 1
/// - `crown`: clique {0,1} complete to the independent set {2,3,4}
/// - `k5_minus`: K5 without the edge 3-4
/// - `k23`: parts {0,1} and {2,3,4}
/// - `w4`: cycle 0-1-2-3 plus hub 4
/// - `prism`: triangles 0,1,2 and 3,4,5 matched 0-3, 1-4, 2-5
/// - `k33`: parts {0,1,2} and {3,4,5}
pub fn named_graph(name: &str) -> Result<Graph, UnknownPattern> {
    let sized = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
    };
    if let Some(n) = sized("path_") {
        return Ok(Graph::path(n));
    }
    if let Some(n) = sized("cycle_").filter(|&n| n >= 3) {
        return Ok(Graph::cycle(n));
    }
    if let Some(n) = sized("complete_") {
        return Ok(Graph::complete(n));
    }
    Ok(match name {
        "house" => build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]),
        "bull" => build(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (4, 1)]),
        "gem" => build(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
        "full_house" => {
            let mut e: Vec<_> = Graph::complete(4).edges();
            e.extend([(0, 4), (1, 4)]);
            build(5, &e)
        }
        "crown" => complete_split(2, 3),
        "k5_minus" => Graph::complete(5).without_edge(3, 4).expect("edge of K5"),
        "k23" => complete_bipartite(2, 3),
        "w4" => build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]),
        "prism" => build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
        "k33" => complete_bipartite(3, 3),
        "k4" => Graph::complete(4),
        _ => return Err(UnknownPattern(name.to_string())),
    })
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    build(a + b, &edges)
}

/// `S_{k,p}`: clique `0..k` complete to the independent set `k..k+p`.
pub fn complete_split(k: usize, p: usize) -> Graph {
    let mut edges = Graph::complete(k).edges();
    edges.extend((0..k).flat_map(|u| (k..k + p).map(move |v| (u, v))));
    build(k + p, &edges)
}

/// Flower with centre 0 built from paths given by vertex count and the
/// number of attached extremities (0, 1 or 2), plus a number of sepals.
pub fn flower(sepals: usize, paths: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..sepals {
        edges.extend([(next, next + 1), (next + 1, next + 2)]);
        edges.extend([(0, next), (0, next + 1), (0, next + 2)]);
        next += 3;
    }
    for &(len, attached) in paths {
        assert!(len >= 1 && attached <= 2 && (len > 1 || attached <= 1));
        for i in 1..len {
            edges.push((next + i - 1, next + i));
        }
        if attached >= 1 {
            edges.push((0, next));
        }
        if attached == 2 {
            edges.push((0, next + len - 1));
        }
        next += len;
    }
    build(next, &edges)
}

/// Triangle a,u,v with `b` on `u`, `c` on `v`, joined by a path on `r`
/// vertices (house) or split after `s` vertices (bull).
/// Numbering: a=0, u=1, v=2, path 3..3+r.
pub fn generalized_house(r: usize, split: Option<usize>) -> Graph {
    assert!(r >= 2);
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 2 + r)];
    for i in 1..r {
        if split != Some(i) {
            edges.push((2 + i, 3 + i));
        }
    }
    build(3 + r, &edges)
}

/// A tractable family together with the roles of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternClass {
    DisjointPaths,
    Clique(usize),
    CliquePlusIsolated { clique: Vec<usize>, isolated: usize },
    /// `detached` marks a path component with no edge to the centre.
    Flower { center: usize, detached: bool },
    GeneralizedHouse(HouseRoles),
    GeneralizedBull { roles: HouseRoles, s: usize },
    CompleteSplit {
        k: usize,
        p: usize,
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    Gem,
    FullHouse,
    Unsupported,
}

/// Roles of a generalized house or bull; `path` is `b = b_1, .., b_r = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HouseRoles {
    pub a: usize,
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

impl PatternClass {
    pub fn name(&self) -> &'static str {
        match self {
            PatternClass::DisjointPaths => "disjoint_paths",
            PatternClass::Clique(_) => "clique",
            PatternClass::CliquePlusIsolated { .. } => "clique_plus_isolated",
            PatternClass::Flower { .. } => "flower",
            PatternClass::GeneralizedHouse(_) => "generalized_house",
            PatternClass::GeneralizedBull { .. } => "generalized_bull",
            PatternClass::CompleteSplit { .. } => "complete_split",
            PatternClass::Gem => "gem",
            PatternClass::FullHouse => "full_house",
            PatternClass::Unsupported => "unsupported",
        }
    }

    /// Rebuilds the pattern from the roles, as a graph on `n` vertices.
    /// Returns `None` for classes that carry no roles.
    pub fn reconstruct(&self, n: usize) -> Option<Graph> {
        let mut edges = Vec::new();
        match self {
            PatternClass::Clique(k) => return Some(Graph::complete(*k)),
            PatternClass::CliquePlusIsolated { clique, .. } => {
                for (i, &x) in clique.iter().enumerate() {
                    edges.extend(clique[i + 1..].iter().map(|&y| (x, y)));
                }
            }
            PatternClass::GeneralizedHouse(r) | PatternClass::GeneralizedBull { roles: r, .. } => {
                let split = match self {
                    PatternClass::GeneralizedBull { s, .. } => Some(*s),
                    _ => None,
                };
                edges.extend([(r.a, r.u), (r.a, r.v), (r.u, r.v), (r.u, r.path[0])]);
                edges.push((r.v, *r.path.last()?));
                for i in 1..r.path.len() {
                    if split != Some(i) {
                        edges.push((r.path[i - 1], r.path[i]));
                    }
                }
            }
            PatternClass::CompleteSplit {
                clique, independent, ..
            } => {
                for (i, &x) in clique.iter().enumerate() {
                    edges.extend(clique[i + 1..].iter().map(|&y| (x, y)));
                    edges.extend(independent.iter().map(|&y| (x, y)));
                }
            }
            _ => return None,
        }
        Graph::from_edges(n, &edges).ok()
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_disjoint_paths(h: &Graph) -> bool {
    h.connected_components()
        .iter()
        .all(|c| h.path_order(c).is_some())
}

pub fn is_complete(h: &Graph) -> bool {
    let n = h.vertex_count();
    h.edge_count() == n * n.saturating_sub(1) / 2
}

/// `K_k + K_1` as (clique vertices, isolated vertex).
pub fn clique_plus_isolated(h: &Graph) -> Option<(Vec<usize>, usize)> {
    let n = h.vertex_count();
    if n < 2 {
        return None;
    }
    let iso: Vec<usize> = (0..n).filter(|&v| h.degree(v) == 0).collect();
    let x = *iso.first()?;
    let mut rest = h.vertices();
    rest.remove(x);
    let (sub, _) = h.induced_subgraph(&rest);
    is_complete(&sub).then(|| (rest.to_vec(), x))
}

/// Smallest flower centre, with whether some petal-less path is detached.
pub fn is_flower(h: &Graph) -> Option<(usize, bool)> {
    (0..h.vertex_count()).find_map(|u| flower_at(h, u).map(|d| (u, d)))
}

pub(crate) fn flower_at(h: &Graph, u: usize) -> Option<bool> {
    let mut rest = h.vertices();
    rest.remove(u);
    let nu = h.adjacency(u);
    let mut detached = false;
    for comp in h.components_within(&rest) {
        let order = h.path_order(&comp)?;
        let attach = comp.intersection(nu);
        let ends = h.set_of([order[0], order[order.len() - 1]]);
        let sepal = order.len() == 3 && attach.len() == 3;
        if !sepal && !attach.is_subset(&ends) {
            return None;
        }
        detached |= attach.is_empty();
    }
    Some(detached)
}

/// Generalized house or bull roles, smallest `(u, v, a, b, c)` first.
pub fn is_generalized_house_or_bull(h: &Graph) -> Option<PatternClass> {
    house_search(h, None)
}

/// Generalized house or bull roles in which `u` plays the role `u`.
pub(crate) fn house_roles_with_u(h: &Graph, u: usize) -> Option<PatternClass> {
    house_search(h, Some(u))
}

fn house_search(h: &Graph, only_u: Option<usize>) -> Option<PatternClass> {
    let n = h.vertex_count();
    if n < 5 {
        return None;
    }
    for u in 0..n {
        if h.degree(u) != 3 || only_u.is_some_and(|x| x != u) {
            continue;
        }
        for v in h.adjacency(u).iter() {
            if h.degree(v) != 3 {
                continue;
            }
            for a in h.adjacency(u).intersection(h.adjacency(v)).iter() {
                if h.degree(a) != 2 {
                    continue;
                }
                let pick = |x: usize, y: usize| {
                    let mut s = h.adjacency(x).clone();
                    s.remove(a);
                    s.remove(y);
                    s.first()
                };
                let (Some(b), Some(c)) = (pick(u, v), pick(v, u)) else {
                    continue;
                };
                if b == c {
                    continue;
                }
                if let Some(class) = house_tail(h, a, u, v, b, c) {
                    return Some(class);
                }
            }
        }
    }
    None
}

fn house_tail(h: &Graph, a: usize, u: usize, v: usize, b: usize, c: usize) -> Option<PatternClass> {
    let mut rest = h.vertices();
    for x in [a, u, v] {
        rest.remove(x);
    }
    let comps = h.components_within(&rest);
    let oriented = |comp: &VertexSet, start: usize| -> Option<Vec<usize>> {
        let mut p = h.path_order(comp)?;
        if p[0] != start {
            p.reverse();
        }
        (p[0] == start).then_some(p)
    };
    match comps.as_slice() {
        [one] => {
            let path = oriented(one, b)?;
            (*path.last()? == c).then_some(PatternClass::GeneralizedHouse(HouseRoles { a, u, v, path }))
        }
        [x, y] => {
            let (cb, cc) = if x.contains(b) { (x, y) } else { (y, x) };
            if !cb.contains(b) || !cc.contains(c) {
                return None;
            }
            let mut path = oriented(cb, b)?;
            let s = path.len();
            let mut tail = oriented(cc, c)?;
            tail.reverse();
            path.extend(tail);
            Some(PatternClass::GeneralizedBull {
                roles: HouseRoles { a, u, v, path },
                s,
            })
        }
        _ => None,
    }
}

/// `(k, p, clique, independent)` when `h` is `S_{k,p}` with `k, p >= 1`.
/// Complete graphs come out as `S_{n-1,1}`.
pub fn is_complete_split(h: &Graph) -> Option<(usize, usize, Vec<usize>, Vec<usize>)> {
    let n = h.vertex_count();
    if n < 2 {
        return None;
    }
    if is_complete(h) {
        return Some((n - 1, 1, (0..n - 1).collect(), vec![n - 1]));
    }
    let (clique, independent): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| h.degree(v) == n - 1);
    let indep = h.set_of(independent.iter().copied());
    let ok = !clique.is_empty()
        && independent.len() >= 2
        && independent.iter().all(|&v| !h.adjacency(v).intersects(&indep));
    ok.then_some((clique.len(), independent.len(), clique, independent))
}

/// Every applicable family, most specific solver first; always ends with
/// `Unsupported` when nothing else applies.
pub fn classify(h: &Graph) -> Vec<PatternClass> {
    let mut out = Vec::new();
    if is_disjoint_paths(h) {
        out.push(PatternClass::DisjointPaths);
    }
    if is_complete(h) && h.vertex_count() >= 1 {
        out.push(PatternClass::Clique(h.vertex_count()));
    }
    if let Some((clique, isolated)) = clique_plus_isolated(h) {
        out.push(PatternClass::CliquePlusIsolated { clique, isolated });
    }
    if let Some((center, detached)) = is_flower(h) {
        out.push(PatternClass::Flower { center, detached });
    }
    if let Some(c) = is_generalized_house_or_bull(h) {
        out.push(c);
    }
    if let Some((k, p, clique, independent)) = is_complete_split(h) {
        out.push(PatternClass::CompleteSplit {
            k,
            p,
            clique,
            independent,
        });
    }
    if h.vertex_count() == 5 {
        if h.is_isomorphic(&named_graph("gem").expect("catalog")) {
            out.push(PatternClass::Gem);
        }
        if h.is_isomorphic(&named_graph("full_house").expect("catalog")) {
            out.push(PatternClass::FullHouse);
        }
    }
    if out.is_empty() {
        out.push(PatternClass::Unsupported);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    #[test]
    fn named_numbering() {
        let gem = g("gem");
        assert_eq!(gem.edge_count(), 7);
        assert_eq!(gem.adjacency(4).to_vec(), vec![0, 1, 2, 3]);
        let fh = g("full_house");
        assert_eq!(fh.adjacency(4).to_vec(), vec![0, 1]);
        assert_eq!(fh.edge_count(), 8);
        let prism = g("prism");
        assert!(prism.has_edge(0, 3) && prism.has_edge(1, 4) && prism.has_edge(2, 5));
        assert_eq!(prism.edge_count(), 9);
        assert!(g("k5_minus").is_isomorphic(&complete_split(3, 2)));
        assert!(g("cycle_7").is_cycle());
        assert!(named_graph("petersen").is_err());
        assert!(named_graph("cycle_2").is_err());
        let (sq, _) = g("house").induced_subgraph(&VertexSet::from_iter_in(5, 0..4));
        assert!(sq.is_cycle());
    }

    #[test]
    fn classify_examples() {
        let p4 = classify(&Graph::path(4));
        assert_eq!(p4[0], PatternClass::DisjointPaths);
        assert!(p4.iter().any(|c| matches!(c, PatternClass::Flower { .. })));
        let k5m = classify(&g("k5_minus"));
        assert!(k5m.iter().any(|c| matches!(c, PatternClass::CompleteSplit { k: 3, p: 2, .. })));
        assert_eq!(classify(&g("gem")), vec![PatternClass::Gem]);
        assert_eq!(classify(&g("full_house")), vec![PatternClass::FullHouse]);
        assert_eq!(classify(&g("w4")), vec![PatternClass::Unsupported]);
        assert_eq!(classify(&g("prism")), vec![PatternClass::Unsupported]);
    }

    #[test]
    fn flower_examples() {
        let spider = flower(0, &[(2, 1), (3, 1), (1, 1)]);
        assert_eq!(is_flower(&spider).map(|f| f.0), Some(0));
        assert_eq!(is_flower(&Graph::cycle(5)), Some((0, false)));
        assert_eq!(is_flower(&g("house")), None);
        let detached = flower(0, &[(2, 2), (2, 0)]);
        assert_eq!(is_flower(&detached), Some((0, true)));
        let diamond_center = flower(1, &[]);
        assert_eq!(is_flower(&diamond_center).map(|f| f.0), Some(0));
    }

    #[test]
    fn house_and_bull_roles() {
        match is_generalized_house_or_bull(&g("house")) {
            Some(PatternClass::GeneralizedHouse(r)) => assert_eq!(r.path.len(), 2),
            other => panic!("{other:?}"),
        }
        match is_generalized_house_or_bull(&g("bull")) {
            Some(PatternClass::GeneralizedBull { roles, s }) => {
                assert_eq!((roles.path.len(), s), (2, 1));
            }
            other => panic!("{other:?}"),
        }
        let horns = generalized_house(4, Some(2));
        match is_generalized_house_or_bull(&horns) {
            Some(PatternClass::GeneralizedBull { roles, s }) => {
                assert_eq!((roles.path.len(), s), (4, 2));
            }
            other => panic!("{other:?}"),
        }
        assert!(is_generalized_house_or_bull(&g("gem")).is_none());
    }

    #[test]
    fn complete_split_examples() {
        let (k, p, _, _) = is_complete_split(&g("crown")).unwrap();
        assert_eq!((k, p), (2, 3));
        let (k, p, _, _) = is_complete_split(&g("k5_minus")).unwrap();
        assert_eq!((k, p), (3, 2));
        assert!(is_complete_split(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn roles_reconstruct_pattern() {
        for name in ["house", "bull", "crown", "k5_minus", "k4"] {
            let h = g(name);
            for class in classify(&h) {
                if let Some(r) = class.reconstruct(h.vertex_count()) {
                    assert_eq!(r, h, "{name} {class:?}");
                }
            }
        }
    }
}
