//! Induced-minor models, premodels, verification and the bag reductions.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{ContractionTrace, Graph, GraphError};
use crate::io;

/// Why a bag collection fails to be a model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("bag of {pattern_vertex} contains host vertex {vertex} out of range")]
    OutOfRange { pattern_vertex: usize, vertex: usize },
    #[error("bag of {0} is empty")]
    Empty(usize),
    #[error("bags of {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("bag of {0} is not connected")]
    Disconnected(usize),
    #[error("pattern edge {0}-{1} has no host edge between the bags")]
    MissingAdjacency(usize, usize),
    #[error("bags of non-adjacent {0} and {1} are adjacent")]
    ExtraAdjacency(usize, usize),
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("expected {expected} bags, got {got}")]
    BagCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bags of {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("model and premodel refer to different graphs")]
    GraphMismatch,
    #[error("invalid model: {0}")]
    Invalid(#[from] Violation),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed witness: {0}")]
    Witness(String),
    #[error("internal error: constructed witness failed verification ({0})")]
    Internal(Violation),
}

fn check_bags(pattern: &Graph, host: &Graph, bags: &[VertexSet]) -> Result<(), ModelError> {
    if bags.len() != pattern.vertex_count() {
        return Err(ModelError::BagCount {
            expected: pattern.vertex_count(),
            got: bags.len(),
        });
    }
    for b in bags {
        host.check_set(b)?;
    }
    Ok(())
}

/// A candidate model of `pattern` in `host`: one bag per pattern vertex.
///
/// Construction only checks bag count and vertex range; validity is decided
/// by [`Model::check`].
#[derive(Clone)]
pub struct Model<'p, 'h> {
    pattern: &'p Graph,
    host: &'h Graph,
    bags: Vec<VertexSet>,
}

impl<'p, 'h> Model<'p, 'h> {
    pub fn new(pattern: &'p Graph, host: &'h Graph, bags: Vec<VertexSet>) -> Result<Self, ModelError> {
        check_bags(pattern, host, &bags)?;
        Ok(Model { pattern, host, bags })
    }

    pub fn from_lists(
        pattern: &'p Graph,
        host: &'h Graph,
        bags: &[Vec<usize>],
    ) -> Result<Self, ModelError> {
        let bags = bags
            .iter()
            .map(|b| VertexSet::from_iter_in(host.vertex_count(), b.iter().copied()))
            .collect();
        Self::new(pattern, host, bags)
    }

    /// Singleton bags from an injective vertex map.
    pub fn from_embedding(pattern: &'p Graph, host: &'h Graph, map: &[usize]) -> Result<Self, ModelError> {
        let bags = map
            .iter()
            .map(|&v| VertexSet::singleton(host.vertex_count(), v))
            .collect();
        Self::new(pattern, host, bags)
    }

    pub fn pattern(&self) -> &'p Graph {
        self.pattern
    }

    pub fn host(&self) -> &'h Graph {
        self.host
    }

    pub fn bag(&self, u: usize) -> &VertexSet {
        &self.bags[u]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn into_bags(self) -> Vec<VertexSet> {
        self.bags
    }

    /// Union of all bags.
    pub fn support(&self) -> VertexSet {
        let mut s = self.host.empty_set();
        for b in &self.bags {
            s |= b;
        }
        s
    }

    /// Pattern vertices whose bag has more than one vertex.
    pub fn nontrivial_bags(&self) -> Vec<usize> {
        (0..self.bags.len()).filter(|&u| self.bags[u].len() > 1).collect()
    }

    /// Full validity check, reporting the first violation found.
    pub fn check(&self) -> Result<(), Violation> {
        let n = self.host.vertex_count();
        let k = self.bags.len();
        let mut seen = self.host.empty_set();
        for (u, b) in self.bags.iter().enumerate() {
            if let Some(v) = b.last().filter(|&v| v >= n) {
                return Err(Violation::OutOfRange { pattern_vertex: u, vertex: v });
            }
            if b.is_empty() {
                return Err(Violation::Empty(u));
            }
            if seen.intersects(b) {
                let w = (0..u).find(|&w| self.bags[w].intersects(b)).unwrap_or(u);
                return Err(Violation::Overlap(w, u));
            }
            seen |= b;
            if !self.host.is_connected_set(b) {
                return Err(Violation::Disconnected(u));
            }
        }
        let reach: Vec<VertexSet> = self
            .bags
            .iter()
            .map(|b| self.host.neighborhood_union(b))
            .collect();
        for u in 0..k {
            for v in u + 1..k {
                let touching = reach[u].intersects(&self.bags[v]);
                match (self.pattern.has_edge(u, v), touching) {
                    (true, false) => return Err(Violation::MissingAdjacency(u, v)),
                    (false, true) => return Err(Violation::ExtraAdjacency(u, v)),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Re-verifies a model a solver just built.
    pub(crate) fn certify(self) -> Result<Self, ModelError> {
        self.check().map_err(ModelError::Internal)?;
        Ok(self)
    }

    pub fn with_bag(&self, u: usize, bag: VertexSet) -> Self {
        let mut m = self.clone();
        m.bags[u] = bag;
        m
    }

    /// The same bags, checked against an equal copy of the host.
    pub fn rehost<'g>(self, host: &'g Graph) -> Result<Model<'p, 'g>, ModelError> {
        if *host != *self.host {
            return Err(ModelError::GraphMismatch);
        }
        Ok(Model {
            pattern: self.pattern,
            host,
            bags: self.bags,
        })
    }

    /// Witness JSON (see [`Witness`]).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_witness()).expect("witness serialization cannot fail")
    }

    pub fn to_witness(&self) -> Witness {
        Witness {
            pattern_n: self.pattern.vertex_count(),
            host_graph6: io::to_graph6(self.host),
            bags: self.bags.iter().map(VertexSet::to_vec).collect(),
        }
    }

    /// Rebuilds a model from a witness, checking that it was produced for
    /// these graphs.
    pub fn from_witness(pattern: &'p Graph, host: &'h Graph, w: &Witness) -> Result<Self, ModelError> {
        if w.pattern_n != pattern.vertex_count() {
            return Err(ModelError::Witness(format!(
                "pattern_n is {}, pattern has {} vertices",
                w.pattern_n,
                pattern.vertex_count()
            )));
        }
        if w.host_graph6 != io::to_graph6(host) {
            return Err(ModelError::Witness("host_graph6 does not match the host".into()));
        }
        Self::from_lists(pattern, host, &w.bags)
    }
}

impl fmt::Debug for Model<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.bags.iter().enumerate()).finish()
    }
}

pub fn verify_model(m: &Model<'_, '_>) -> bool {
    m.is_valid()
}

/// Serialized model: bags keyed by pattern vertex, arrays ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern_n: usize,
    pub host_graph6: String,
    pub bags: Vec<Vec<usize>>,
}

struct BagMap<'a>(&'a [Vec<usize>]);

impl Serialize for BagMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (u, bag) in self.0.iter().enumerate() {
            map.serialize_entry(&u.to_string(), bag)?;
        }
        map.end()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Witness", 3)?;
        st.serialize_field("pattern_n", &self.pattern_n)?;
        st.serialize_field("host_graph6", &self.host_graph6)?;
        st.serialize_field("bags", &BagMap(&self.bags))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawWitness {
    pattern_n: usize,
    host_graph6: String,
    bags: BTreeMap<String, Vec<usize>>,
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = RawWitness::deserialize(d)?;
        let mut bags = vec![None; raw.pattern_n];
        for (key, mut bag) in raw.bags {
            let u: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bag key `{key}` is not a vertex")))?;
            let slot = bags
                .get_mut(u)
                .ok_or_else(|| D::Error::custom(format!("bag key {u} out of range")))?;
            bag.sort_unstable();
            *slot = Some(bag);
        }
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(u, b)| b.ok_or_else(|| D::Error::custom(format!("missing bag {u}"))))
            .collect::<Result<_, _>>()?;
        Ok(Witness {
            pattern_n: raw.pattern_n,
            host_graph6: raw.host_graph6,
            bags,
        })
    }
}

/// Disjoint, possibly empty bags awaiting extension to a model.
#[derive(Clone, Debug)]
pub struct Premodel<'p, 'h> {
    pattern: &'p Graph,
    host: &'h Graph,
    bags: Vec<VertexSet>,
}

impl<'p, 'h> Premodel<'p, 'h> {
    pub fn new(pattern: &'p Graph, host: &'h Graph, bags: Vec<VertexSet>) -> Result<Self, ModelError> {
        check_bags(pattern, host, &bags)?;
        for u in 0..bags.len() {
            for v in u + 1..bags.len() {
                if bags[u].intersects(&bags[v]) {
                    return Err(ModelError::Overlap(u, v));
                }
            }
        }
        Ok(Premodel { pattern, host, bags })
    }

    pub fn empty(pattern: &'p Graph, host: &'h Graph) -> Self {
        Premodel {
            pattern,
            host,
            bags: vec![host.empty_set(); pattern.vertex_count()],
        }
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }
}

/// Whether every premodel bag lies inside the matching model bag.
pub fn extends(m: &Model<'_, '_>, p: &Premodel<'_, '_>) -> Result<bool, ModelError> {
    if m.pattern != p.pattern || m.host != p.host {
        return Err(ModelError::GraphMismatch);
    }
    Ok(p.bags.iter().zip(&m.bags).all(|(a, b)| a.is_subset(b)))
}

/// Replaces `X_u` by a minimal bag when `deg(u) <= 2`: a single vertex for
/// degree at most one, otherwise the lexicographically smallest shortest
/// path inside `X_u` between the two attachments.
pub fn shrink_small_degree_bag<'p, 'h>(m: &Model<'p, 'h>, u: usize) -> Result<Model<'p, 'h>, ModelError> {
    m.check()?;
    let h = m.pattern;
    let g = m.host;
    if u >= h.vertex_count() {
        return Err(ModelError::Precondition(format!("pattern vertex {u} out of range")));
    }
    let xu = &m.bags[u];
    let nbrs = h.adjacency(u).to_vec();
    let bag = match nbrs.as_slice() {
        [] => VertexSet::singleton(g.vertex_count(), xu.first().expect("bags are non-empty")),
        &[v] => {
            let touch = g.neighborhood_union(&m.bags[v]).intersection(xu);
            VertexSet::singleton(g.vertex_count(), touch.first().expect("valid model"))
        }
        &[v, w] => {
            let a = g.neighborhood_union(&m.bags[v]).intersection(xu);
            let b = g.neighborhood_union(&m.bags[w]).intersection(xu);
            let outside = xu.complement(g.vertex_count());
            let path = g
                .shortest_path_avoiding(&a, &b, &outside)
                .expect("bags are connected");
            g.set_of(path)
        }
        _ => {
            return Err(ModelError::Precondition(format!(
                "pattern vertex {u} has degree {}",
                nbrs.len()
            )))
        }
    };
    m.with_bag(u, bag).certify()
}

/// Makes the bags of the internal vertices of the pattern path `p`
/// singletons, moving surplus vertices into the bag of its last vertex.
/// `p` may be closed (first vertex equal to last).
pub fn straighten_path_bags<'p, 'h>(m: &Model<'p, 'h>, p: &[usize]) -> Result<Model<'p, 'h>, ModelError> {
    m.check()?;
    let h = m.pattern;
    let g = m.host;
    let k = h.vertex_count();
    if p.iter().any(|&u| u >= k) {
        return Err(ModelError::Precondition("path vertex out of range".into()));
    }
    if p.windows(2).any(|w| !h.has_edge(w[0], w[1])) {
        return Err(ModelError::Precondition("consecutive path vertices are not adjacent".into()));
    }
    let closed = p.len() > 1 && p[0] == p[p.len() - 1];
    let distinct = if closed { &p[..p.len() - 1] } else { p };
    let mut seen = VertexSet::new(k);
    if distinct.iter().any(|&u| !seen.insert(u)) || (closed && distinct.len() < 3) {
        return Err(ModelError::Precondition("path repeats a vertex".into()));
    }
    if p.len() <= 2 {
        return Ok(m.clone());
    }
    let internal = &p[1..p.len() - 1];
    if let Some(&u) = internal.iter().find(|&&u| h.degree(u) != 2) {
        return Err(ModelError::Precondition(format!(
            "internal vertex {u} has degree {}",
            h.degree(u)
        )));
    }
    let mut cur = m.clone();
    for &u in internal {
        cur = shrink_small_degree_bag(&cur, u)?;
    }
    let mut q = g.empty_set();
    for &u in internal {
        q |= &cur.bags[u];
    }
    let first = p[0];
    let last = p[p.len() - 1];
    let order = g
        .path_order(&q)
        .ok_or_else(|| ModelError::Internal(Violation::Disconnected(internal[0])))?;
    let start = cur.bags[internal[0]]
        .intersection(&g.neighborhood_union(&cur.bags[first]))
        .first()
        .expect("valid model");
    let order: Vec<usize> = if order[0] == start {
        order
    } else {
        order.into_iter().rev().collect()
    };
    let n = g.vertex_count();
    for (i, &u) in internal.iter().enumerate() {
        cur.bags[u] = VertexSet::singleton(n, order[i]);
    }
    for &x in &order[internal.len()..] {
        cur.bags[last].insert(x);
    }
    cur.certify()
}

/// Replaces each bag over `tr.target()` by the union of preimages.
pub fn lift_through_trace<'p, 'g>(
    m: &Model<'p, '_>,
    tr: &ContractionTrace<'g>,
) -> Result<Model<'p, 'g>, ModelError> {
    if m.host != tr.target() {
        return Err(ModelError::GraphMismatch);
    }
    let bags = m.bags.iter().map(|b| tr.lift_set(b)).collect();
    Model::new(m.pattern, tr.source(), bags)
}

/// Name of the procedure that decided an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Trivial,
    DisjointPaths,
    Clique,
    CliquePlusIsolated,
    SntSingle,
    HouseBull,
    CompleteSplit,
    PtFree,
    Gem,
    FullHouse,
    Oracle,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Trivial => "trivial",
            Method::DisjointPaths => "disjoint_paths",
            Method::Clique => "clique",
            Method::CliquePlusIsolated => "clique_plus_isolated",
            Method::SntSingle => "snt_single",
            Method::HouseBull => "house_bull",
            Method::CompleteSplit => "complete_split",
            Method::PtFree => "pt_free",
            Method::Gem => "gem",
            Method::FullHouse => "full_house",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub struct Answer<'p, 'h> {
    pub contains: bool,
    pub witness: Option<Model<'p, 'h>>,
    pub method: Method,
    pub certified_without_witness: bool,
}

impl<'p, 'h> Answer<'p, 'h> {
    pub fn yes(witness: Model<'p, 'h>, method: Method) -> Self {
        debug_assert!(witness.is_valid());
        Answer {
            contains: true,
            witness: Some(witness),
            method,
            certified_without_witness: false,
        }
    }

    pub fn no(method: Method) -> Self {
        Answer {
            contains: false,
            witness: None,
            method,
            certified_without_witness: false,
        }
    }

    /// Positive answer from a structure theorem, without a model.
    pub fn certified(method: Method) -> Self {
        Answer {
            contains: true,
            witness: None,
            method,
            certified_without_witness: true,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        let id = Model::from_embedding(&c5, &c5, &[0, 1, 2, 3, 4]).unwrap();
        assert!(verify_model(&id));
        let c3 = Graph::cycle(3);
        let c4 = Graph::cycle(4);
        let m = Model::from_lists(&c3, &c4, &[vec![0], vec![1], vec![2, 3]]).unwrap();
        assert!(verify_model(&m));
        let p3 = Graph::path(3);
        let m = Model::from_embedding(&c3, &p3, &[0, 1, 2]).unwrap();
        assert_eq!(m.check(), Err(Violation::MissingAdjacency(0, 2)));
        assert!(Model::from_embedding(&c3, &p3, &[0, 1, 5]).is_err());
        assert!(Model::from_embedding(&c3, &p3, &[0, 1]).is_err());
    }

    #[test]
    fn violations() {
        let p2 = Graph::path(2);
        let p4 = Graph::path(4);
        let bad = |bags: &[Vec<usize>]| Model::from_lists(&p2, &p4, bags).unwrap().check();
        assert_eq!(bad(&[vec![], vec![1]]), Err(Violation::Empty(0)));
        assert_eq!(bad(&[vec![0, 1], vec![1]]), Err(Violation::Overlap(0, 1)));
        assert_eq!(bad(&[vec![0, 2], vec![1]]), Err(Violation::Disconnected(0)));
        assert_eq!(bad(&[vec![0], vec![2]]), Err(Violation::MissingAdjacency(0, 1)));
        let e2 = Graph::empty(2);
        let m = Model::from_lists(&e2, &p4, &[vec![0], vec![1]]).unwrap();
        assert_eq!(m.check(), Err(Violation::ExtraAdjacency(0, 1)));
    }

    #[test]
    fn extends_examples() {
        let p2 = Graph::path(2);
        let p4 = Graph::path(4);
        let m = Model::from_lists(&p2, &p4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(extends(&m, &Premodel::empty(&p2, &p4)).unwrap());
        let n = 4;
        let pm = |a: &[usize]| {
            Premodel::new(&p2, &p4, vec![VertexSet::new(n), VertexSet::from_iter_in(n, a.iter().copied())])
                .unwrap()
        };
        assert!(extends(&m, &pm(&[3])).unwrap());
        let m2 = Model::from_lists(&p2, &p4, &[vec![0, 1], vec![2]]).unwrap();
        assert!(!extends(&m2, &pm(&[3])).unwrap());
        let other = Graph::path(5);
        assert!(extends(&m, &Premodel::empty(&p2, &other)).is_err());
        let overlap = vec![VertexSet::singleton(n, 1), VertexSet::singleton(n, 1)];
        assert!(Premodel::new(&p2, &p4, overlap).is_err());
    }

    #[test]
    fn shrink_degree_one() {
        let p2 = Graph::path(2);
        let p4 = Graph::path(4);
        let m = Model::from_lists(&p2, &p4, &[vec![0, 1], vec![2]]).unwrap();
        let s = shrink_small_degree_bag(&m, 0).unwrap();
        assert_eq!(s.bag(0).to_vec(), vec![1]);
        let again = shrink_small_degree_bag(&s, 0).unwrap();
        assert_eq!(again.bags(), s.bags());
    }

    #[test]
    fn shrink_degree_two_on_hexagon_with_pendants() {
        // C6 on 0..5, pendant 6 on 2 and pendant 7 on 3; X_u is the arc 1..4
        let host = g(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 6), (3, 7)]);
        let p3 = Graph::path(3);
        let m = Model::from_lists(&p3, &host, &[vec![6], vec![1, 2, 3, 4], vec![7]]).unwrap();
        assert!(m.is_valid());
        let s = shrink_small_degree_bag(&m, 1).unwrap();
        assert_eq!(s.bag(1).to_vec(), vec![2, 3]);
        assert!(shrink_small_degree_bag(&m, 5).is_err());
    }

    #[test]
    fn straighten_on_cycle_host() {
        let p4 = Graph::path(4);
        let c7 = Graph::cycle(7);
        let m = Model::from_lists(&p4, &c7, &[vec![0], vec![1, 2], vec![3, 4], vec![5]]).unwrap();
        let s = straighten_path_bags(&m, &[0, 1, 2, 3]).unwrap();
        assert_eq!(s.bag(1).len(), 1);
        assert_eq!(s.bag(2).len(), 1);
        assert_eq!(s.bag(0).to_vec(), vec![0]);
        assert!(s.support().is_subset(&m.support()));
        assert_eq!(s.bag(3).to_vec(), vec![3, 4, 5]);
        let single = straighten_path_bags(&m, &[2]).unwrap();
        assert_eq!(single.bags(), m.bags());
        assert!(straighten_path_bags(&m, &[0, 2]).is_err());
    }

    #[test]
    fn straighten_closed_path() {
        let c4 = Graph::cycle(4);
        let c8 = Graph::cycle(8);
        let m = Model::from_lists(&c4, &c8, &[vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap();
        let s = straighten_path_bags(&m, &[0, 1, 2, 3, 0]).unwrap();
        assert!(s.is_valid());
        assert_eq!(s.nontrivial_bags(), vec![0]);
    }

    #[test]
    fn lift_examples() {
        let c4 = Graph::cycle(4);
        let tr = c4.contract_edges_traced(&[(2, 3)]).unwrap();
        let c3 = Graph::cycle(3);
        let m = Model::from_embedding(&c3, tr.target(), &[0, 1, 2]).unwrap();
        let lifted = lift_through_trace(&m, &tr).unwrap();
        assert!(lifted.is_valid());
        assert_eq!(lifted.bag(2).to_vec(), vec![2, 3]);
        let id = ContractionTrace::identity(&c4);
        let m4 = Model::from_embedding(&c4, &c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(lift_through_trace(&m4, &id).unwrap().bags(), m4.bags());
        assert!(lift_through_trace(&m4, &tr).is_err());
    }

    #[test]
    fn witness_json_round_trip() {
        let c3 = Graph::cycle(3);
        let c4 = Graph::cycle(4);
        let m = Model::from_lists(&c3, &c4, &[vec![0], vec![1], vec![2, 3]]).unwrap();
        let json = m.to_json();
        assert_eq!(
            json,
            r#"{"pattern_n":3,"host_graph6":"Cl","bags":{"0":[0],"1":[1],"2":[2,3]}}"#
        );
        let w: Witness = serde_json::from_str(&json).unwrap();
        let back = Model::from_witness(&c3, &c4, &w).unwrap();
        assert_eq!(back.bags(), m.bags());
        assert!(Model::from_witness(&c3, &Graph::path(4), &w).is_err());
    }
}
