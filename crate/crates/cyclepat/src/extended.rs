//! Extended cycle patterns: cycle signs enriched with a same-endpoint
//! path-comparison oracle, and the comparison-only Bellman–Ford it enables.
//!
//! A plain cycle pattern answers "is this cycle negative?" — enough to
//! decide mean-payoff winners, but not to navigate. The extension also
//! answers "which of these two paths between the same endpoints is
//! lighter?", and that single extra query type suffices to run shortest
//! path machinery with no numeric weights in sight: [`ext_negative_cycle`]
//! and [`ext_shortest_walk`] are Bellman–Ford adaptations that store one
//! candidate path per vertex and consult only an [`ExtendedOracle`].
//!
//! When a relaxation would re-enter its own path, the closed-up cycle is
//! handed to the sign oracle instead: a negative answer is a certificate
//! (and ends the search), anything else means the detour cannot improve
//! the prefix and is skipped. Every stored path therefore stays simple,
//! which both bounds the search and makes the walks it returns canonical:
//! ties are broken toward fewer edges, then lexicographic edge ids.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_rational::BigRational;

use crate::graph::{Cycle, Digraph, EdgeId, GraphError, VertexId, WeightFn};
use crate::pattern::{CyclePattern, PatternError, Sign};

/// Errors from oracle construction, validation, and the oracle-only search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtendedError {
    /// Underlying graph defect.
    Graph(GraphError),
    /// Underlying pattern defect (unknown cycle, missing weight, ...).
    Pattern(PatternError),
    /// An edge sequence is not a directed path.
    NotAPath(&'static str),
    /// The two paths of a comparison do not share both endpoints.
    EndpointMismatch,
    /// A strict path pair shares an internal vertex.
    InteriorOverlap(VertexId),
    /// The oracle's answers contradicted each other.
    OracleInconsistent,
    /// A negative cycle lies on a walk between the queried endpoints.
    NegativeCycleReachable,
}

impl fmt::Display for ExtendedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedError::Graph(e) => write!(f, "{e}"),
            ExtendedError::Pattern(e) => write!(f, "{e}"),
            ExtendedError::NotAPath(why) => write!(f, "not a directed path: {why}"),
            ExtendedError::EndpointMismatch => f.write_str("paths do not share endpoints"),
            ExtendedError::InteriorOverlap(v) => {
                write!(f, "paths share the internal vertex {v}")
            }
            ExtendedError::OracleInconsistent => f.write_str("oracle answers are inconsistent"),
            ExtendedError::NegativeCycleReachable => {
                f.write_str("a reachable negative cycle makes the walk weight unbounded")
            }
        }
    }
}

impl From<GraphError> for ExtendedError {
    fn from(e: GraphError) -> Self {
        ExtendedError::Graph(e)
    }
}

impl From<PatternError> for ExtendedError {
    fn from(e: PatternError) -> Self {
        ExtendedError::Pattern(e)
    }
}

/// The visited vertices of a validated path; for an `e`-edge path this has
/// `e + 1` entries (a lone vertex for the empty path is not expressible,
/// so empty sequences validate to `None`).
fn path_vertices(graph: &Digraph, ids: &[EdgeId]) -> Result<Option<Vec<VertexId>>, ExtendedError> {
    if ids.is_empty() {
        return Ok(None);
    }
    let mut verts: Vec<VertexId> = Vec::with_capacity(ids.len() + 1);
    for id in ids {
        let e = graph
            .edge(id.as_str())
            .ok_or_else(|| ExtendedError::Graph(GraphError::UnknownId(String::from(id.as_str()))))?;
        match verts.last() {
            None => verts.push(e.src.clone()),
            Some(last) => {
                if *last != e.src {
                    return Err(ExtendedError::NotAPath("edges do not chain up"));
                }
            }
        }
        verts.push(e.dst.clone());
    }
    // simple: no repeated vertex, except that the path may close into its
    // own start (a closed path compares like any other walk of its weight)
    for (i, v) in verts.iter().enumerate() {
        for u in &verts[i + 1..verts.len() - usize::from(i == 0)] {
            if u == v {
                return Err(ExtendedError::NotAPath("repeated vertex"));
            }
        }
    }
    Ok(Some(verts))
}

/// An ordered pair of interior-disjoint directed paths with shared
/// endpoints — the comparisons a weight function is quotiented by.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathPair {
    /// First path, as consecutive edge ids.
    pub p1: Vec<EdgeId>,
    /// Second path, same start and end vertex as `p1`.
    pub p2: Vec<EdgeId>,
}

impl PathPair {
    /// Validates both sequences as simple directed paths of `graph` with
    /// equal endpoints and disjoint interiors.
    pub fn new(graph: &Digraph, p1: Vec<EdgeId>, p2: Vec<EdgeId>) -> Result<PathPair, ExtendedError> {
        let v1 = path_vertices(graph, &p1)?;
        let v2 = path_vertices(graph, &p2)?;
        match (&v1, &v2) {
            (Some(a), Some(b)) => {
                if a.first() != b.first() || a.last() != b.last() {
                    return Err(ExtendedError::EndpointMismatch);
                }
                for v in &a[1..a.len() - 1] {
                    if b[1..b.len() - 1].contains(v) {
                        return Err(ExtendedError::InteriorOverlap(v.clone()));
                    }
                }
            }
            // an empty side stands for the trivial path at the shared
            // endpoint, so the other side must close into its start
            (Some(a), None) | (None, Some(a)) => {
                if a.first() != a.last() {
                    return Err(ExtendedError::EndpointMismatch);
                }
            }
            (None, None) => {}
        }
        Ok(PathPair { p1, p2 })
    }
}

/// Sign and comparison queries over one digraph's cycles and paths.
///
/// `compare_paths` accepts any two same-endpoint directed paths, including
/// ones that share internal vertices — a superset of the interior-disjoint
/// pairs of [`PathPair`] that the relaxation steps below genuinely need.
/// Implementations must be antisymmetric: swapping the arguments reverses
/// the sign.
pub trait ExtendedOracle {
    /// The sign of a cycle's total weight.
    fn cycle_sign(&self, cycle: &Cycle) -> Result<Sign, ExtendedError>;
    /// The sign of `w(p1) - w(p2)` for same-endpoint directed paths.
    fn compare_paths(&self, p1: &[EdgeId], p2: &[EdgeId]) -> Result<Sign, ExtendedError>;
    /// Comparison of a validated interior-disjoint pair.
    fn compare_pair(&self, pair: &PathPair) -> Result<Sign, ExtendedError> {
        self.compare_paths(&pair.p1, &pair.p2)
    }
}

/// The extended pattern a weight function induces.
pub struct WeightOracle {
    pattern: CyclePattern,
    weights: WeightFn,
}

/// Wraps exact rational weights as an [`ExtendedOracle`]: cycle signs come
/// from the induced pattern, comparisons from exact weight sums.
///
/// Panics if `weights` misses an edge of `graph`.
pub fn oracle_from_weights(graph: Digraph, weights: WeightFn) -> WeightOracle {
    for e in graph.edges() {
        assert!(
            weights.contains_key(&e.id),
            "weight function must be total, missing {}",
            e.id
        );
    }
    WeightOracle {
        pattern: CyclePattern::from_weights(graph, weights.clone()),
        weights,
    }
}

impl WeightOracle {
    fn path_weight(&self, ids: &[EdgeId]) -> BigRational {
        ids.iter().map(|id| self.weights[id].clone()).sum()
    }
}

impl ExtendedOracle for WeightOracle {
    fn cycle_sign(&self, cycle: &Cycle) -> Result<Sign, ExtendedError> {
        Ok(self.pattern.sign_of(cycle)?)
    }

    fn compare_paths(&self, p1: &[EdgeId], p2: &[EdgeId]) -> Result<Sign, ExtendedError> {
        let v1 = path_vertices(&self.pattern.graph, p1)?;
        let v2 = path_vertices(&self.pattern.graph, p2)?;
        let ok = match (&v1, &v2) {
            (Some(a), Some(b)) => a.first() == b.first() && a.last() == b.last(),
            (Some(a), None) | (None, Some(a)) => a.first() == a.last(),
            (None, None) => true,
        };
        if !ok {
            return Err(ExtendedError::EndpointMismatch);
        }
        Ok(Sign::of_rational(&(self.path_weight(p1) - self.path_weight(p2))))
    }
}

// ---------------------------------------------------------------------------
// Comparison-only Bellman–Ford
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Entry {
    edges: Vec<EdgeId>,
    /// Visited vertex positions including the source; `edges.len() + 1` long.
    verts: Vec<usize>,
}

enum BfOutcome {
    NegCycle(Cycle),
    Stable(Vec<Option<Entry>>),
}

/// Relaxation rounds over edges in id order, one stored simple path per
/// vertex, every decision routed through the oracle. Stops at the first
/// negative closed cycle, or when a round passes without improvement —
/// round `n` at the latest unless a negative cycle exists.
fn bf_from_source<O: ExtendedOracle + ?Sized>(
    graph: &Digraph,
    oracle: &O,
    source: &VertexId,
) -> Result<BfOutcome, ExtendedError> {
    let n = graph.vertex_count();
    let spos = graph
        .vertex_pos(source.as_str())
        .ok_or_else(|| ExtendedError::Graph(GraphError::UnknownId(String::from(source.as_str()))))?;
    let mut eorder: Vec<usize> = (0..graph.edge_count()).collect();
    eorder.sort_by(|&a, &b| graph.edges()[a].id.cmp(&graph.edges()[b].id));
    let endpoints: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|e| {
            (
                graph.vertex_pos(e.src.as_str()).expect("endpoints exist"),
                graph.vertex_pos(e.dst.as_str()).expect("endpoints exist"),
            )
        })
        .collect();

    let mut state: Vec<Option<Entry>> = vec![None; n];
    state[spos] = Some(Entry {
        edges: Vec::new(),
        verts: vec![spos],
    });

    // A consistent oracle admits at most one strict improvement per simple
    // path, so rounds beyond n!·n can only come from contradictory answers.
    let cap = (1..=n as u128)
        .try_fold(1u128, u128::checked_mul)
        .and_then(|f| f.checked_mul(n as u128))
        .and_then(|f| f.checked_add(n as u128 + 2))
        .unwrap_or(u128::MAX);

    let mut rounds: u128 = 0;
    loop {
        let mut changed = false;
        for &ep in &eorder {
            let (u, v) = endpoints[ep];
            let Some(pu) = state[u].clone() else { continue };
            let e = &graph.edges()[ep];
            if let Some(i) = pu.verts.iter().position(|&x| x == v) {
                // the extension closes a cycle; negative settles the search,
                // anything else cannot beat the stored prefix
                let mut dids: Vec<EdgeId> = pu.edges[i..].to_vec();
                dids.push(e.id.clone());
                let cyc = Cycle::from_edge_ids(graph, &dids)?;
                if oracle.cycle_sign(&cyc)? == Sign::Minus {
                    return Ok(BfOutcome::NegCycle(cyc));
                }
                continue;
            }
            let mut cand = pu.edges.clone();
            cand.push(e.id.clone());
            let accept = match &state[v] {
                None => true,
                Some(q) => match oracle.compare_paths(&cand, &q.edges)? {
                    Sign::Minus => true,
                    Sign::Plus => false,
                    Sign::Zero => {
                        cand.len() < q.edges.len()
                            || (cand.len() == q.edges.len() && cand < q.edges)
                    }
                },
            };
            if accept {
                let mut verts = pu.verts;
                verts.push(v);
                state[v] = Some(Entry { edges: cand, verts });
                changed = true;
            }
        }
        if !changed {
            return Ok(BfOutcome::Stable(state));
        }
        rounds += 1;
        if rounds > cap {
            return Err(ExtendedError::OracleInconsistent);
        }
    }
}

/// Finds a negative cycle using only oracle queries, or reports that none
/// exists. Sources are tried in vertex-id order, so the result is
/// deterministic for a deterministic oracle.
pub fn ext_negative_cycle<O: ExtendedOracle + ?Sized>(
    graph: &Digraph,
    oracle: &O,
) -> Result<Option<Cycle>, ExtendedError> {
    let mut order: Vec<&VertexId> = graph.vertices().iter().collect();
    order.sort();
    for s in order {
        if let BfOutcome::NegCycle(c) = bf_from_source(graph, oracle, s)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// The minimum-weight walk from `s` to `t` using only oracle queries.
///
/// Returns `Ok(None)` when `t` is unreachable, and
/// [`ExtendedError::NegativeCycleReachable`] when a negative cycle lies on
/// some `s`-to-`t` walk (which drives the infimum to minus infinity);
/// negative cycles off every such walk are ignored. With `s = t` the empty
/// walk is the answer unless a negative cycle shares a strongly connected
/// component with `s` (a closed walk may detour through it).
pub fn ext_shortest_walk<O: ExtendedOracle + ?Sized>(
    graph: &Digraph,
    oracle: &O,
    s: &VertexId,
    t: &VertexId,
) -> Result<Option<Vec<EdgeId>>, ExtendedError> {
    for v in [s, t] {
        if graph.vertex_pos(v.as_str()).is_none() {
            return Err(ExtendedError::Graph(GraphError::UnknownId(String::from(
                v.as_str(),
            ))));
        }
    }
    let forward = crate::graph::reachable_from(graph, s);
    if !forward.contains(t) {
        return Ok(None);
    }
    // only vertices on some s-to-t walk matter; a negative cycle elsewhere
    // does not change the infimum
    let backward = co_reachable(graph, t);
    let region: alloc::collections::BTreeSet<VertexId> =
        forward.intersection(&backward).cloned().collect();
    let sub = graph.induced(&region);
    match bf_from_source(&sub, oracle, s)? {
        BfOutcome::NegCycle(_) => Err(ExtendedError::NegativeCycleReachable),
        BfOutcome::Stable(state) => {
            let tpos = sub.vertex_pos(t.as_str()).expect("t is in its own region");
            let entry = state[tpos].as_ref().expect("t is reachable in the region");
            Ok(Some(entry.edges.clone()))
        }
    }
}

fn co_reachable(graph: &Digraph, target: &VertexId) -> alloc::collections::BTreeSet<VertexId> {
    let n = graph.vertex_count();
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in graph.edges() {
        let s = graph.vertex_pos(e.src.as_str()).expect("endpoints exist");
        let d = graph.vertex_pos(e.dst.as_str()).expect("endpoints exist");
        rev[d].push(s);
    }
    let Some(tpos) = graph.vertex_pos(target.as_str()) else {
        return alloc::collections::BTreeSet::new();
    };
    let mut seen = alloc::collections::BTreeSet::from([tpos]);
    let mut stack = vec![tpos];
    while let Some(v) = stack.pop() {
        for &p in &rev[v] {
            if seen.insert(p) {
                stack.push(p);
            }
        }
    }
    seen.into_iter()
        .map(|p| graph.vertices()[p].clone())
        .collect()
}
