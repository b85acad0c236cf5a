//! Canonical minimum paired dominating sets and the structural properties
//! they are known to satisfy.
//!
//! Among all minimum `(S, M)` the canonical ones minimise `λ(S)` first and
//! `|A ∪ B|` second. Every co-minimal choice is kept.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::pds::{
    classify_pairs, find_perfect_matching, lambda, neighbors_in, normalize, pair_kind, verify_pds,
    Edge, Label, Matching, PairKind, PairedDomSet, Partition, Violation,
};
use crate::solver::{enumerate_min_pds, SolveError};

/// `(|S|, λ(S), |A ∪ B|)`, compared lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rank {
    pub size: usize,
    pub lambda: usize,
    pub ab_size: usize,
}

pub fn rank(g: &Graph, p: &PairedDomSet) -> Rank {
    Rank {
        size: p.size(),
        lambda: lambda(g, p.s),
        ab_size: classify_pairs(g, p).ab_size(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalChoice {
    pub pds: PairedDomSet,
    pub lambda_value: usize,
    pub ab_size: usize,
    /// Number of co-minimal candidates, this one included.
    pub ties: usize,
    pub partition: Partition,
}

impl CanonicalChoice {
    /// Wraps an arbitrary `(S, M)` with its derived values; `ties` is 1.
    /// Used to feed non-canonical sets through the checkers.
    pub fn from_pds(g: &Graph, pds: PairedDomSet) -> Self {
        let partition = classify_pairs(g, &pds);
        CanonicalChoice {
            lambda_value: lambda(g, pds.s),
            ab_size: partition.ab_size(),
            ties: 1,
            partition,
            pds,
        }
    }

    pub fn rank(&self) -> Rank {
        Rank {
            size: self.pds.size(),
            lambda: self.lambda_value,
            ab_size: self.ab_size,
        }
    }
}

/// All minimum `(S, M)` with minimum `λ(S)` and then minimum `|A ∪ B|`,
/// ordered by `S` and then by `M`.
pub fn canonical_pds(g: &Graph) -> Result<Vec<CanonicalChoice>, SolveError> {
    let (_, sets) = enumerate_min_pds(g)?;
    let mut best: Vec<CanonicalChoice> = Vec::new();
    for entry in sets {
        for m in entry.matchings {
            let choice = CanonicalChoice::from_pds(g, PairedDomSet::new(entry.s, m));
            match best.first().map(|b| choice.rank().cmp(&b.rank())) {
                Some(Ordering::Greater) => {}
                Some(Ordering::Equal) => best.push(choice),
                Some(Ordering::Less) | None => best = vec![choice],
            }
        }
    }
    let ties = best.len();
    for c in &mut best {
        c.ties = ties;
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplaceError {
    #[error("edge {0:?} is not in the matching")]
    NotInMatching(Edge),
    #[error("edge {0:?} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("inserted edges overlap at vertex {0}")]
    Overlap(usize),
}

/// Result of replacing matching edges: the new candidate and whether it is a
/// paired dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    pub candidate: PairedDomSet,
    pub verdict: Result<(), Vec<Violation>>,
}

impl Replacement {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// Replaces the matching edges `e_out` by `e_in`:
/// `S' = S \ V(e_out) ∪ V(e_in)` and `M' = (M \ e_out) ∪ e_in`.
pub fn replace_edges(
    g: &Graph,
    p: &PairedDomSet,
    e_out: &[Edge],
    e_in: &[Edge],
) -> Result<Replacement, ReplaceError> {
    let mut removed = VertexSet::EMPTY;
    let mut kept: Vec<Edge> = p.m.edges().to_vec();
    for &(u, v) in e_out {
        let e = normalize(u, v);
        let Some(pos) = kept.iter().position(|&k| k == e) else {
            return Err(ReplaceError::NotInMatching(e));
        };
        kept.remove(pos);
        removed = removed.with(u).with(v);
    }
    let mut covered = kept
        .iter()
        .fold(VertexSet::EMPTY, |acc, &(a, b)| acc.with(a).with(b));
    let mut added = VertexSet::EMPTY;
    for &(u, v) in e_in {
        if !g.has_edge(u, v) {
            return Err(ReplaceError::NotAnEdge(normalize(u, v)));
        }
        for w in [u, v] {
            if covered.contains(w) {
                return Err(ReplaceError::Overlap(w));
            }
            covered.insert(w);
        }
        added = added.with(u).with(v);
        kept.push(normalize(u, v));
    }
    let candidate = PairedDomSet::new(
        p.s.difference(removed).union(added),
        Matching::new(kept).expect("overlap checked"),
    );
    let verdict = verify_pds(g, &candidate);
    Ok(Replacement { candidate, verdict })
}

/// Outcome of testing the swap `S' = S \ X ∪ Y` against a minimum set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwapOutcome {
    /// The swap does not meet the hypotheses (`S'` must dominate `X`, be
    /// strictly smaller and have a perfect matching).
    NotApplicable,
    /// A vertex outside `S ∪ Y` whose `S`-neighbours all lie in `X`.
    Witness(usize),
    /// The hypotheses hold and no witness exists, so `S'` is a smaller
    /// paired dominating set and the input was not minimum.
    Counterexample(PairedDomSet),
}

/// Swap test for a minimum paired dominating set `p`.
pub fn swap_check(g: &Graph, p: &PairedDomSet, x_set: VertexSet, y_set: VertexSet) -> SwapOutcome {
    if !x_set.is_subset(p.s) || !y_set.is_subset(g.vertices().difference(p.s)) {
        return SwapOutcome::NotApplicable;
    }
    let s2 = p.s.difference(x_set).union(y_set);
    if s2.len() >= p.s.len() || !x_set.is_subset(g.closed_neighborhood_of_set(s2)) {
        return SwapOutcome::NotApplicable;
    }
    let Some(m2) = find_perfect_matching(g, s2) else {
        return SwapOutcome::NotApplicable;
    };
    let outside = g.vertices().difference(p.s.union(y_set));
    match outside
        .iter()
        .find(|&x| neighbors_in(g, x, p.s).is_subset(x_set))
    {
        Some(x) => SwapOutcome::Witness(x),
        None => SwapOutcome::Counterexample(PairedDomSet::new(s2, m2)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    /// Every C vertex is a leaf of `G[S]`.
    CIsLeaf,
    /// Every D pair has an endpoint that is a leaf of `G[S]`.
    DPairHasLeaf,
    /// Adjacent `u, v ∈ B ∪ D` from different pairs span an induced `P4`
    /// and some outside `x` has `N_S(x) = {ū, v̄}`.
    BdEdgeShape,
    /// In components without adjacent D pairs, an A pair with a vertex that
    /// has no private neighbour is solo.
    APairWithBareVertexIsSolo,
    /// In components without adjacent D pairs, no D vertex has exactly one
    /// neighbour in each of A, B and D.
    NoDVertexWithOneABD,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::CIsLeaf,
        Property::DPairHasLeaf,
        Property::BdEdgeShape,
        Property::APairWithBareVertexIsSolo,
        Property::NoDVertexWithOneABD,
    ];

    pub fn letter(self) -> char {
        match self {
            Property::CIsLeaf => 'a',
            Property::DPairHasLeaf => 'b',
            Property::BdEdgeShape => 'c',
            Property::APairWithBareVertexIsSolo => 'd',
            Property::NoDVertexWithOneABD => 'e',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructuralViolation {
    CNotLeaf(usize),
    DPairWithoutLeaf(Edge),
    NotInducedP4 { u: usize, v: usize },
    NoSharedOutsider { u: usize, v: usize },
    LinkedAPair(Edge),
    DVertexWithOneABD(usize),
}

impl fmt::Display for StructuralViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CNotLeaf(v) => write!(f, "C vertex {v} is not a leaf of G[S]"),
            Self::DPairWithoutLeaf((u, v)) => write!(f, "D pair {u}-{v} has no leaf"),
            Self::NotInducedP4 { u, v } => write!(f, "pairs of {u} and {v} do not induce a P4"),
            Self::NoSharedOutsider { u, v } => {
                write!(
                    f,
                    "no outside vertex sees exactly the partners of {u} and {v}"
                )
            }
            Self::LinkedAPair((u, v)) => {
                write!(f, "A pair {u}-{v} has a bare vertex but is linked")
            }
            Self::DVertexWithOneABD(u) => {
                write!(f, "D vertex {u} has one A, one B and one D neighbour")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub property: Property,
    pub violations: Vec<StructuralViolation>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl StructuralReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    pub fn outcome(&self, property: Property) -> &PropertyOutcome {
        self.outcomes
            .iter()
            .find(|o| o.property == property)
            .expect("every property is reported")
    }
}

fn is_leaf(g: &Graph, v: usize, s: VertexSet) -> bool {
    neighbors_in(g, v, s).len() == 1
}

/// True if `comp` contains an edge of `G[S]` joining two different D pairs.
fn has_adjacent_d_pairs(g: &Graph, p: &PairedDomSet, part: &Partition, comp: VertexSet) -> bool {
    let d = part.members(Label::D).intersection(comp);
    d.iter().any(|u| {
        let partner = p.partner(u);
        neighbors_in(g, u, d).iter().any(|w| Some(w) != partner)
    })
}

/// Evaluates the structural properties (a)–(e) on `c`.
pub fn check_structural_properties(g: &Graph, c: &CanonicalChoice) -> StructuralReport {
    let p = &c.pds;
    let part = &c.partition;
    let s = p.s;
    let mut outcomes: Vec<PropertyOutcome> = Property::ALL
        .iter()
        .map(|&property| PropertyOutcome {
            property,
            violations: Vec::new(),
        })
        .collect();

    for v in part.members(Label::C) {
        if !is_leaf(g, v, s) {
            outcomes[0]
                .violations
                .push(StructuralViolation::CNotLeaf(v));
        }
    }

    for &(u, v) in p.m.edges() {
        if part.label(u) == Some(Label::D) && !is_leaf(g, u, s) && !is_leaf(g, v, s) {
            outcomes[1]
                .violations
                .push(StructuralViolation::DPairWithoutLeaf((u, v)));
        }
    }

    let bd = part.members(Label::B).union(part.members(Label::D));
    for (u, v) in g.edges() {
        if !bd.contains(u) || !bd.contains(v) || p.partner(u) == Some(v) {
            continue;
        }
        let (ub, vb) = (
            p.partner(u).expect("matched"),
            p.partner(v).expect("matched"),
        );
        let quad = VertexSet::from_iter([u, ub, v, vb]);
        if g.induced_edge_count(quad) != 3 {
            outcomes[2]
                .violations
                .push(StructuralViolation::NotInducedP4 { u, v });
        }
        let target = VertexSet::from_iter([ub, vb]);
        let shared = g
            .vertices()
            .difference(s)
            .iter()
            .any(|x| neighbors_in(g, x, s) == target);
        if !shared {
            outcomes[2]
                .violations
                .push(StructuralViolation::NoSharedOutsider { u, v });
        }
    }

    for comp in g.components(s) {
        if has_adjacent_d_pairs(g, p, part, comp) {
            continue;
        }
        for &(u, v) in p.m.edges() {
            if !comp.contains(u) || part.label(u) != Some(Label::A) {
                continue;
            }
            let bare = part.privates(u).is_empty() || part.privates(v).is_empty();
            if bare && pair_kind(g, p, (u, v)) == Ok(PairKind::Linked) {
                outcomes[3]
                    .violations
                    .push(StructuralViolation::LinkedAPair((u, v)));
            }
        }
        for u in part.members(Label::D).intersection(comp) {
            let count = |l: Label| neighbors_in(g, u, part.members(l)).len();
            if count(Label::A) == 1 && count(Label::B) == 1 && count(Label::D) == 1 {
                outcomes[4]
                    .violations
                    .push(StructuralViolation::DVertexWithOneABD(u));
            }
        }
    }

    StructuralReport { outcomes }
}

/// A constraint pair `{w1, w2}` of a solo D pair `S_u`, where `x` is an
/// outside neighbour of `ū` seeing `w1` and `y` an outside neighbour of `u`
/// seeing `w2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintPair {
    pub w1: usize,
    pub w2: usize,
    /// An outside `t` with `N_S(t) ⊆ {u, ū, w̄1, w̄2}`; `None` flags a
    /// counterexample.
    pub witness: Option<usize>,
}

impl ConstraintPair {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintPairError {
    #[error("{0:?} is not a matching edge")]
    NotAPair(Edge),
    #[error("{0:?} is not a solo D pair")]
    NotSoloD(Edge),
    #[error("the endpoints of {0:?} share an outside neighbour")]
    CommonNeighbour(Edge),
}

/// Lists the constraint pairs of the solo D pair `pair = (u, ū)` and checks
/// for each one that some outside `t` has `N_S(t) ⊆ {u, ū, w̄1, w̄2}`.
pub fn find_constraint_pairs(
    g: &Graph,
    c: &CanonicalChoice,
    pair: Edge,
) -> Result<Vec<ConstraintPair>, ConstraintPairError> {
    let p = &c.pds;
    let part = &c.partition;
    let (u, ub) = pair;
    let kind = pair_kind(g, p, pair).map_err(|_| ConstraintPairError::NotAPair(pair))?;
    if kind != PairKind::Solo || part.label(u) != Some(Label::D) {
        return Err(ConstraintPairError::NotSoloD(pair));
    }
    let outside = g.vertices().difference(p.s);
    let ys = g.neighbors(u).intersection(outside);
    let xs = g.neighbors(ub).intersection(outside);
    if !ys.is_disjoint(xs) {
        return Err(ConstraintPairError::CommonNeighbour(pair));
    }
    let su = VertexSet::from_iter([u, ub]);
    let d = part.members(Label::D);
    let mut found: Vec<(usize, usize)> = Vec::new();
    for x in xs {
        for y in ys {
            for w1 in neighbors_in(g, x, d).difference(su) {
                for w2 in neighbors_in(g, y, d).difference(su) {
                    if w1 != w2 && p.partner(w1) != Some(w2) && !found.contains(&(w1, w2)) {
                        found.push((w1, w2));
                    }
                }
            }
        }
    }
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|(w1, w2)| {
            let allowed = VertexSet::from_iter([
                u,
                ub,
                p.partner(w1).expect("matched"),
                p.partner(w2).expect("matched"),
            ]);
            let witness = outside
                .iter()
                .find(|&t| neighbors_in(g, t, p.s).is_subset(allowed));
            ConstraintPair { w1, w2, witness }
        })
        .collect())
}

/// Solo D pairs of `c` whose endpoints have no common outside neighbour.
pub fn constraint_pair_candidates(g: &Graph, c: &CanonicalChoice) -> Vec<Edge> {
    c.pds
        .m
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            c.partition.label(u) == Some(Label::D)
                && pair_kind(g, &c.pds, (u, v)) == Ok(PairKind::Solo)
                && g.neighbors(u)
                    .intersection(g.neighbors(v))
                    .is_subset(c.pds.s)
        })
        .collect()
}
