//! Paired dominating sets: verification, private neighbours and the A/B/C/D
//! partition of a set relative to a fixed perfect matching.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// An undirected edge stored as `(low, high)`.
pub type Edge = (usize, usize);

pub fn normalize(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("loop {0}-{0} cannot be a matching edge")]
    Loop(usize),
    #[error("vertex {0} is covered by two matching edges")]
    SharedVertex(usize),
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self, MatchingError> {
        let mut covered = VertexSet::EMPTY;
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(MatchingError::Loop(u));
            }
            for w in [u, v] {
                if covered.contains(w) {
                    return Err(MatchingError::SharedVertex(w));
                }
                covered.insert(w);
            }
            out.push(normalize(u, v));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, &(u, v)| acc.with(u).with(v))
    }

    /// The vertex matched to `v`, written `v̄` in the literature.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&normalize(u, v)).is_ok()
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = MatchingError;

    fn try_from(edges: Vec<Edge>) -> Result<Self, MatchingError> {
        Matching::new(edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

/// A vertex set together with a matching that is meant to be perfect on it.
///
/// Construction does not check anything; use [`verify_pds`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairedDomSet {
    pub s: VertexSet,
    pub m: Matching,
}

impl PairedDomSet {
    pub fn new(s: VertexSet, m: Matching) -> Self {
        PairedDomSet { s, m }
    }

    /// The set spanned by `m`, with `m` as its matching.
    pub fn from_matching(m: Matching) -> Self {
        PairedDomSet { s: m.vertices(), m }
    }

    pub fn size(&self) -> usize {
        self.s.len()
    }

    /// `ū`, the partner of `u` in the matching.
    pub fn partner(&self, u: usize) -> Option<usize> {
        self.m.partner(u)
    }

    /// The pair `S_u` as a vertex set.
    pub fn pair_of(&self, u: usize) -> Option<VertexSet> {
        self.partner(u).map(|w| VertexSet::singleton(u).with(w))
    }
}

/// A reason why a [`PairedDomSet`] is not valid in a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    VertexOutOfRange(usize),
    /// A matching edge is not an edge of the graph.
    NotAnEdge(Edge),
    /// A matching edge has an endpoint outside `S`.
    EdgeLeavesSet(Edge),
    /// A vertex of `S` is not covered by the matching.
    Unmatched(usize),
    /// A vertex is neither in `S` nor adjacent to it.
    Undominated(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::NotAnEdge((u, v)) => write!(f, "matching edge {u}-{v} is not in the graph"),
            Violation::EdgeLeavesSet((u, v)) => write!(f, "matching edge {u}-{v} leaves S"),
            Violation::Unmatched(v) => write!(f, "vertex {v} of S is unmatched"),
            Violation::Undominated(v) => write!(f, "vertex {v} undominated"),
        }
    }
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of_set(s.intersection(g.vertices())) == g.vertices()
}

/// `λ(S)`: the number of edges of `G[S]`.
pub fn lambda(g: &Graph, s: VertexSet) -> usize {
    g.induced_edge_count(s)
}

/// A perfect matching of `G[s]`, if one exists.
///
/// Exhaustive: the lowest uncovered vertex is matched to each of its
/// uncovered neighbours in turn, and uncovered sets known to have no perfect
/// matching are memoised.
pub fn find_perfect_matching(g: &Graph, s: VertexSet) -> Option<Matching> {
    fn go(g: &Graph, rest: VertexSet, dead: &mut HashSet<u64>, acc: &mut Vec<Edge>) -> bool {
        let Some(v) = rest.first() else {
            return true;
        };
        if dead.contains(&rest.bits()) {
            return false;
        }
        let rest_v = rest.without(v);
        for w in g.neighbors(v).intersection(rest_v) {
            acc.push((v, w));
            if go(g, rest_v.without(w), dead, acc) {
                return true;
            }
            acc.pop();
        }
        dead.insert(rest.bits());
        false
    }
    if s.len() % 2 == 1 || !s.is_subset(g.vertices()) {
        return None;
    }
    let mut acc = Vec::with_capacity(s.len() / 2);
    go(g, s, &mut HashSet::new(), &mut acc)
        .then(|| Matching::new(acc).expect("disjoint by construction"))
}

/// Every perfect matching of `G[s]`, in lexicographic order.
pub fn all_perfect_matchings(g: &Graph, s: VertexSet) -> Vec<Matching> {
    fn go(g: &Graph, rest: VertexSet, acc: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        let Some(v) = rest.first() else {
            out.push(Matching::new(acc.iter().copied()).expect("disjoint"));
            return;
        };
        let rest_v = rest.without(v);
        for w in g.neighbors(v).intersection(rest_v) {
            acc.push((v, w));
            go(g, rest_v.without(w), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if s.len().is_multiple_of(2) && s.is_subset(g.vertices()) {
        go(g, s, &mut Vec::new(), &mut out);
    }
    out
}

/// Checks that `p.m` is a perfect matching of `G[p.s]` and that `p.s`
/// dominates the graph. All violations are reported.
pub fn verify_pds(g: &Graph, p: &PairedDomSet) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    let all = g.vertices();
    for v in p.s.difference(all) {
        violations.push(Violation::VertexOutOfRange(v));
    }
    for &(u, v) in p.m.edges() {
        if !g.has_edge(u, v) {
            violations.push(Violation::NotAnEdge((u, v)));
        }
        if !p.s.contains(u) || !p.s.contains(v) {
            violations.push(Violation::EdgeLeavesSet((u, v)));
        }
    }
    for v in p.s.intersection(all).difference(p.m.vertices()) {
        violations.push(Violation::Unmatched(v));
    }
    let dominated = g.closed_neighborhood_of_set(p.s.intersection(all));
    for v in all.difference(dominated) {
        violations.push(Violation::Undominated(v));
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// `N_S(x)`.
pub fn neighbors_in(g: &Graph, x: usize, s: VertexSet) -> VertexSet {
    g.neighbors(x).intersection(s)
}

/// For every vertex `u`, the outside vertices `x` with `N_S(x) = {u}`.
/// Entries for vertices outside `s` are empty.
pub fn private_neighbors(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY; g.n()];
    for x in g.vertices().difference(s) {
        let ns = neighbors_in(g, x, s);
        if ns.len() == 1 {
            out[ns.first().expect("one element")].insert(x);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Label::A => "A",
            Label::B => "B",
            Label::C => "C",
            Label::D => "D",
        };
        f.write_str(c)
    }
}

/// The A/B/C/D labelling of `S` relative to a matching, with the private
/// neighbours it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<Option<Label>>,
    privates: Vec<VertexSet>,
}

impl Partition {
    pub fn label(&self, v: usize) -> Option<Label> {
        self.labels.get(v).copied().flatten()
    }

    /// All vertices carrying `label`.
    pub fn members(&self, label: Label) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Some(label))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn privates(&self, v: usize) -> VertexSet {
        self.privates.get(v).copied().unwrap_or_default()
    }

    /// `|A ∪ B|`, counted in vertices.
    pub fn ab_size(&self) -> usize {
        self.labels
            .iter()
            .filter(|l| matches!(l, Some(Label::A | Label::B)))
            .count()
    }
}

/// Labels every matched pair of `p`.
///
/// A pair whose two vertices have at least two private neighbours between
/// them is an A-pair. Otherwise a vertex with a private neighbour is B and
/// its partner C, and a pair with none is a D-pair.
pub fn classify_pairs(g: &Graph, p: &PairedDomSet) -> Partition {
    let privates = private_neighbors(g, p.s);
    let mut labels = vec![None; g.n()];
    for &(u, v) in p.m.edges() {
        let (pu, pv) = (privates[u].len(), privates[v].len());
        let (lu, lv) = if pu + pv >= 2 {
            (Label::A, Label::A)
        } else if pu == 1 {
            (Label::B, Label::C)
        } else if pv == 1 {
            (Label::C, Label::B)
        } else {
            (Label::D, Label::D)
        };
        labels[u] = Some(lu);
        labels[v] = Some(lv);
    }
    Partition { labels, privates }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairKind {
    /// Both endpoints are leaves of `G[S]`.
    Solo,
    Linked,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}-{1} is not an edge of the matching")]
pub struct NotAPair(pub usize, pub usize);

pub fn pair_kind(g: &Graph, p: &PairedDomSet, pair: Edge) -> Result<PairKind, NotAPair> {
    let (u, v) = pair;
    if !p.m.contains_edge(u, v) {
        return Err(NotAPair(u, v));
    }
    let leaf = |w: usize| neighbors_in(g, w, p.s).len() == 1;
    Ok(if leaf(u) && leaf(v) {
        PairKind::Solo
    } else {
        PairKind::Linked
    })
}
