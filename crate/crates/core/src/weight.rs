//! The discharging weight function on boundary edges `[V \ S, S]` and the
//! per-component certificate derived from it.
//!
//! Weights are integer twelfths throughout. For an outside vertex `x`:
//!
//! 1. a private neighbour `x` of `u` gives `f(xu) = 1`;
//! 2. if `N_S(x)` lies inside one of `A`, `B ∪ C` or `D`, its edges share
//!    the unit weight equally;
//! 3. if `N_S(x)` meets `D` and another class, A-edges get `0`, `B ∪ C`
//!    edges `1/6` and the D-edges split the remainder equally;
//! 4. if `N_S(x)` mixes `A` with `B ∪ C` and has no D vertex, A-edges get
//!    `0` and the `B ∪ C` edges split the unit weight equally.
//!
//! Every outside vertex then sends total weight exactly 1, and a component
//! of `G[S]` with `k` pairs is certified when it receives at least `3k/2`.
//! If all components are certified then `3|S|/4 <= |V \ S|`, i.e.
//! `7|S| <= 4n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canonical::CanonicalChoice;
use crate::graph::{Graph, VertexSet};
use crate::pds::{neighbors_in, Edge, Label, PairedDomSet, Partition};

/// An exact non-negative rational with denominator 12.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u32);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const ONE: Weight = Weight(12);

    pub const fn from_twelfths(t: u32) -> Self {
        Weight(t)
    }

    pub const fn twelfths(self) -> u32 {
        self.0
    }

    /// `num/den` if it is a whole number of twelfths.
    pub fn ratio(num: u32, den: u32) -> Option<Self> {
        (den != 0 && (12 * num).is_multiple_of(den)).then(|| Weight(12 * num / den))
    }
}

/// Values a single boundary edge may take, in twelfths:
/// `{0, 1/6, 1/3, 5/12, 1/2, 2/3, 5/6, 1}`.
pub const CODOMAIN: [u32; 8] = [0, 2, 4, 5, 6, 8, 10, 12];
/// Values an edge into `B ∪ C` may take: `{1/6, 1/3, 1/2, 1}`.
pub const BC_VALUES: [u32; 4] = [2, 4, 6, 12];
/// Values an edge into `D` may take: `{1/3, 5/12, 1/2, 2/3, 5/6, 1}`.
pub const D_VALUES: [u32; 6] = [4, 5, 6, 8, 10, 12];

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/12", self.0)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight at outside vertex {0} is not a whole number of twelfths")]
    NotRepresentable(usize),
    #[error("certification needs a cubic graph")]
    NotCubic,
    #[error("no canonical choices supplied")]
    NoTies,
}

/// `f` on every boundary edge, keyed by `(x, u)` with `x ∉ S`, `u ∈ S`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<Edge, Weight>,
}

impl WeightAssignment {
    pub fn get(&self, x: usize, u: usize) -> Option<Weight> {
        self.weights.get(&(x, u)).copied()
    }

    /// Overwrites one value. Only useful for fault injection.
    pub fn set(&mut self, x: usize, u: usize, w: Weight) {
        self.weights.insert((x, u), w);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Weight)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total(&self) -> Weight {
        self.weights.values().copied().sum()
    }

    /// `f(T)`: total weight on edges from `T ⊆ S` to the outside.
    pub fn weight_of(&self, t: VertexSet) -> Weight {
        self.weights
            .iter()
            .filter(|((_, u), _)| t.contains(*u))
            .map(|(_, &w)| w)
            .sum()
    }
}

fn class_of(label: Label) -> usize {
    match label {
        Label::A => 0,
        Label::B | Label::C => 1,
        Label::D => 2,
    }
}

/// Evaluates `f` for `(S, M)` with partition `part`.
pub fn assign_weights_for(
    g: &Graph,
    p: &PairedDomSet,
    part: &Partition,
) -> Result<WeightAssignment, WeightError> {
    let mut out = WeightAssignment::default();
    for x in g.vertices().difference(p.s) {
        let ns = neighbors_in(g, x, p.s);
        let mut counts = [0u32; 3];
        for u in ns {
            counts[class_of(part.label(u).expect("S is fully labelled"))] += 1;
        }
        let [a, bc, d] = counts;
        let share =
            |num: u32, den: u32| Weight::ratio(num, den).ok_or(WeightError::NotRepresentable(x));
        // (A, B∪C, D) weights for this x.
        let per_class: [Weight; 3] = if ns.len() == 1 {
            [Weight::ONE; 3]
        } else if bc == 0 && d == 0 {
            [share(1, a)?, Weight::ZERO, Weight::ZERO]
        } else if a == 0 && d == 0 {
            [Weight::ZERO, share(1, bc)?, Weight::ZERO]
        } else if d > 0 {
            // Covers D-only as well: with a = bc = 0 this is 1/|N_D(x)|.
            let rest = 12 - 2 * bc;
            let dw = (rest % d == 0)
                .then(|| Weight::from_twelfths(rest / d))
                .ok_or(WeightError::NotRepresentable(x))?;
            [Weight::ZERO, Weight::from_twelfths(2), dw]
        } else {
            [Weight::ZERO, share(1, bc)?, Weight::ZERO]
        };
        for u in ns {
            let w = per_class[class_of(part.label(u).expect("labelled"))];
            out.weights.insert((x, u), w);
        }
    }
    Ok(out)
}

pub fn assign_weights(g: &Graph, c: &CanonicalChoice) -> Result<WeightAssignment, WeightError> {
    assign_weights_for(g, &c.pds, &c.partition)
}

/// The individual checks run by [`check_assignment`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WeightCheck {
    /// The assignment is defined on exactly `[S, V \ S]`.
    Domain,
    /// `Σ_{u ∈ N_S(x)} f(xu) = 1` for every `x ∉ S`.
    SumToOne,
    /// Every value lies in the eight-element codomain.
    Codomain,
    /// Edges into `B ∪ C` take values in `{1/6, 1/3, 1/2, 1}`.
    BcValues,
    /// Edges into `D` take values in `{1/3, 5/12, 1/2, 2/3, 5/6, 1}`, and
    /// `1/3` occurs exactly when `N_S(x)` is three D vertices.
    DValues,
    /// The total weight equals `|V \ S|`.
    Total,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightFailure {
    pub check: WeightCheck,
    /// Outside vertex involved, if the failure is local.
    pub x: Option<usize>,
    pub u: Option<usize>,
    pub value: Weight,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub failures: Vec<WeightFailure>,
}

impl WeightReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_of(&self, check: WeightCheck) -> impl Iterator<Item = &WeightFailure> {
        self.failures.iter().filter(move |f| f.check == check)
    }
}

/// Re-checks an assignment against the properties `f` is meant to have.
pub fn check_assignment(g: &Graph, c: &CanonicalChoice, w: &WeightAssignment) -> WeightReport {
    let s = c.pds.s;
    let part = &c.partition;
    let outside = g.vertices().difference(s);
    let mut failures = Vec::new();
    let mut fail = |check, x: Option<usize>, u: Option<usize>, value| {
        failures.push(WeightFailure { check, x, u, value })
    };

    let mut expected_edges = 0usize;
    for x in outside {
        let ns = neighbors_in(g, x, s);
        expected_edges += ns.len();
        let mut sum = Weight::ZERO;
        for u in ns {
            let Some(value) = w.get(x, u) else {
                fail(WeightCheck::Domain, Some(x), Some(u), Weight::ZERO);
                continue;
            };
            sum += value;
            if !CODOMAIN.contains(&value.twelfths()) {
                fail(WeightCheck::Codomain, Some(x), Some(u), value);
            }
            match part.label(u) {
                Some(Label::B | Label::C) if !BC_VALUES.contains(&value.twelfths()) => {
                    fail(WeightCheck::BcValues, Some(x), Some(u), value);
                }
                Some(Label::D) => {
                    let all_d = ns.len() == 3 && ns.is_subset(part.members(Label::D));
                    let third = value.twelfths() == 4;
                    if !D_VALUES.contains(&value.twelfths()) || third != all_d {
                        fail(WeightCheck::DValues, Some(x), Some(u), value);
                    }
                }
                _ => {}
            }
        }
        if sum != Weight::ONE {
            fail(WeightCheck::SumToOne, Some(x), None, sum);
        }
    }
    if w.len() != expected_edges
        || w.iter()
            .any(|((x, u), _)| !outside.contains(x) || !s.contains(u) || !g.has_edge(x, u))
    {
        fail(
            WeightCheck::Domain,
            None,
            None,
            Weight::from_twelfths(w.len() as u32),
        );
    }
    let total = w.total();
    if total != Weight::from_twelfths(12 * outside.len() as u32) {
        fail(WeightCheck::Total, None, None, total);
    }
    WeightReport { failures }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTotal {
    pub vertices: Vec<usize>,
    pub pairs: usize,
    pub total: Weight,
    /// `3/2` per pair.
    pub required: Weight,
    pub ok: bool,
}

impl ComponentTotal {
    fn deficit(&self) -> u32 {
        self.required
            .twelfths()
            .saturating_sub(self.total.twelfths())
    }
}

/// Certificate for one graph, built from the best canonical choice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub graph_id: String,
    pub n: usize,
    pub gamma_pr: usize,
    pub s: Vec<usize>,
    pub m: Vec<Edge>,
    /// Index of the reported choice among the canonical ties.
    pub tie_index: usize,
    pub ties_examined: usize,
    pub components: Vec<ComponentTotal>,
    pub total_weight: Weight,
    pub weight_checks_passed: bool,
    /// Every component reaches `3/2` per pair.
    pub verdict: bool,
    /// First component below its requirement, if any.
    pub failing_component: Option<usize>,
    /// `4n - 7|S|`.
    pub slack: i64,
    /// When the verdict holds: total weight is `|V \ S|`, at least
    /// `3|S|/4`, and `7|S| <= 4n`.
    pub chain_consistent: bool,
}

impl Certificate {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = id.into();
        self
    }

    fn total_deficit(&self) -> u32 {
        self.components.iter().map(ComponentTotal::deficit).sum()
    }
}

fn certify_one(
    g: &Graph,
    c: &CanonicalChoice,
    tie_index: usize,
) -> Result<Certificate, WeightError> {
    let w = assign_weights(g, c)?;
    let report = check_assignment(g, c, &w);
    let s = c.pds.s;
    let components: Vec<ComponentTotal> = g
        .components(s)
        .into_iter()
        .map(|comp| {
            let pairs = comp.len() / 2;
            let total = w.weight_of(comp);
            let required = Weight::from_twelfths(18 * pairs as u32);
            ComponentTotal {
                vertices: comp.to_vec(),
                pairs,
                total,
                required,
                ok: total >= required,
            }
        })
        .collect();
    let total_weight: Weight = components.iter().map(|c| c.total).sum();
    let verdict = components.iter().all(|c| c.ok);
    let size = s.len();
    let n = g.n();
    let slack = 4 * n as i64 - 7 * size as i64;
    let outside = (n - size) as u32;
    let chain_consistent = !verdict
        || (total_weight.twelfths() == 12 * outside
            && 9 * size as u32 <= total_weight.twelfths()
            && slack >= 0);
    Ok(Certificate {
        graph_id: String::new(),
        n,
        gamma_pr: size,
        s: s.to_vec(),
        m: c.pds.m.edges().to_vec(),
        tie_index,
        ties_examined: 0,
        failing_component: components.iter().position(|c| !c.ok),
        components,
        total_weight,
        weight_checks_passed: report.passed(),
        verdict,
        slack,
        chain_consistent,
    })
}

/// Certifies `|S| <= 4n/7` from the canonical ties of a cubic graph.
///
/// Ties are tried in order and the first fully certified one is returned;
/// otherwise the tie with the smallest total deficit (lowest index on
/// equality) is returned with `verdict == false`.
pub fn certify_bound(g: &Graph, ties: &[CanonicalChoice]) -> Result<Certificate, WeightError> {
    if !g.is_cubic() {
        return Err(WeightError::NotCubic);
    }
    let mut best: Option<Certificate> = None;
    for (i, c) in ties.iter().enumerate() {
        let cert = certify_one(g, c, i)?;
        if cert.verdict {
            return Ok(Certificate {
                ties_examined: i + 1,
                ..cert
            });
        }
        if best
            .as_ref()
            .is_none_or(|b| cert.total_deficit() < b.total_deficit())
        {
            best = Some(cert);
        }
    }
    let best = best.ok_or(WeightError::NoTies)?;
    Ok(Certificate {
        ties_examined: ties.len(),
        ..best
    })
}
