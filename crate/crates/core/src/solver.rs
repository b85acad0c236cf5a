//! Exact paired domination number and enumeration of minimum paired
//! dominating sets.
//!
//! A paired dominating set is the vertex set of a disjoint edge set that
//! dominates the graph, so the search runs over disjoint edge sets. At each
//! node the undominated vertex with the fewest candidate edges is chosen
//! (ties to the lowest index) and every disjoint edge with an endpoint in its
//! closed neighbourhood is tried.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::pds::{
    all_perfect_matchings, find_perfect_matching, is_dominating, normalize, Edge, Matching,
    PairedDomSet,
};

/// Largest graph accepted by [`brute_force_oracle`].
pub const ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("vertex {0} is isolated, so no paired dominating set exists")]
    IsolatedVertex(usize),
    #[error("graph has {n} vertices, the brute-force oracle is limited to {limit}")]
    OracleTooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaPr {
    pub value: usize,
    pub witness: PairedDomSet,
}

/// One minimum paired dominating set with every perfect matching of `G[S]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPds {
    pub s: VertexSet,
    pub matchings: Vec<Matching>,
}

fn check_isolated(g: &Graph) -> Result<(), SolveError> {
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(SolveError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

struct Search<'g> {
    g: &'g Graph,
    /// Upper bound on how many vertices a single pair dominates.
    max_cover: usize,
    explored: HashSet<u64>,
    enumerate: bool,
    found: Vec<Vec<Edge>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, enumerate: bool) -> Self {
        // |N[a] ∪ N[b]| <= deg(a) + deg(b) when ab is an edge.
        let max_cover = (2 * g.max_degree()).max(2);
        Search {
            g,
            max_cover,
            explored: HashSet::new(),
            enumerate,
            found: Vec::new(),
        }
    }

    /// Disjoint candidate edges that would dominate `v`.
    fn options(&self, v: usize, used: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for a in self.g.closed_neighborhood(v).difference(used) {
            for b in self.g.neighbors(a).difference(used) {
                let e = normalize(a, b);
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Returns true when the search should stop.
    fn dfs(&mut self, used: VertexSet, pairs_left: usize, chosen: &mut Vec<Edge>) -> bool {
        if !self.explored.insert(used.bits()) {
            return false;
        }
        let g = self.g;
        let undominated = g.vertices().difference(g.closed_neighborhood_of_set(used));
        if undominated.is_empty() {
            self.found.push(chosen.clone());
            return !self.enumerate;
        }
        if pairs_left == 0 || undominated.len() > pairs_left * self.max_cover {
            return false;
        }
        let mut best: Option<Vec<Edge>> = None;
        for v in undominated {
            let opts = self.options(v, used);
            if best.as_ref().is_none_or(|b| opts.len() < b.len()) {
                let empty = opts.is_empty();
                best = Some(opts);
                if empty {
                    break;
                }
            }
        }
        for (a, b) in best.unwrap_or_default() {
            chosen.push((a, b));
            let stop = self.dfs(used.with(a).with(b), pairs_left - 1, chosen);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn first_feasible_pairs(g: &Graph) -> usize {
    let cover = (2 * g.max_degree()).max(2);
    g.n().div_ceil(cover).max(1)
}

/// Computes `γ_pr(G)` with a witness set.
pub fn gamma_pr(g: &Graph) -> Result<GammaPr, SolveError> {
    check_isolated(g)?;
    if g.n() == 0 {
        return Ok(GammaPr {
            value: 0,
            witness: PairedDomSet::from_matching(Matching::default()),
        });
    }
    for k in first_feasible_pairs(g)..=g.n() / 2 {
        let mut search = Search::new(g, false);
        if search.dfs(VertexSet::EMPTY, k, &mut Vec::new()) {
            let edges = search.found.pop().expect("stopped on a solution");
            let m = Matching::new(edges).expect("search keeps edges disjoint");
            return Ok(GammaPr {
                value: 2 * m.len(),
                witness: PairedDomSet::from_matching(m),
            });
        }
    }
    unreachable!("a graph without isolated vertices has a paired dominating set")
}

/// All minimum paired dominating sets, sorted by vertex set, each with the
/// complete list of perfect matchings of its induced subgraph.
pub fn enumerate_min_pds(g: &Graph) -> Result<(usize, Vec<MinPds>), SolveError> {
    let gamma = gamma_pr(g)?.value;
    if gamma == 0 {
        return Ok((
            0,
            vec![MinPds {
                s: VertexSet::EMPTY,
                matchings: vec![Matching::default()],
            }],
        ));
    }
    let mut search = Search::new(g, true);
    search.dfs(VertexSet::EMPTY, gamma / 2, &mut Vec::new());
    let sets: BTreeSet<VertexSet> = search
        .found
        .iter()
        .map(|edges| {
            edges
                .iter()
                .fold(VertexSet::EMPTY, |s, &(a, b)| s.with(a).with(b))
        })
        .collect();
    let list = sets
        .into_iter()
        .map(|s| MinPds {
            s,
            matchings: all_perfect_matchings(g, s),
        })
        .collect();
    Ok((gamma, list))
}

/// Independent reference value: scans vertex subsets by increasing size and
/// returns the first size holding a dominating set with a perfect matching.
pub fn brute_force_oracle(g: &Graph) -> Result<usize, SolveError> {
    if g.n() > ORACLE_MAX_N {
        return Err(SolveError::OracleTooLarge {
            n: g.n(),
            limit: ORACLE_MAX_N,
        });
    }
    check_isolated(g)?;
    let n = g.n();
    for k in (0..=n).step_by(2) {
        for mask in 0u64..(1u64 << n) {
            let s = VertexSet::from_bits(mask);
            if s.len() == k && is_dominating(g, s) && find_perfect_matching(g, s).is_some() {
                return Ok(k);
            }
        }
    }
    unreachable!("a graph without isolated vertices has a paired dominating set")
}
