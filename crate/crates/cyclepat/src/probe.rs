//! Sign-query instrumentation of the iterative solvers, and the
//! boundary-hyperplane experiment.
//!
//! Both potential reduction and energy lifting branch on nothing but signs
//! of values that are linear in the input weights, so each run of either
//! solver is a root-to-leaf walk in a linear decision tree whose inner
//! nodes test `sign(a · w)` for integer vectors `a`. [`traced_solve`] makes
//! that walk observable: it runs the solver on scalars that carry their own
//! formal linear form next to the concrete value and record every sign test
//! into a [`QueryTrace`]. [`replay_partition`] is the converse experiment —
//! it re-runs the solver on forms alone, answering each sign test from the
//! recorded trace, and recovers the same partition without ever reading a
//! weight.
//!
//! [`boundary_probe`] walks the decision boundary itself: for a chosen
//! cycle `C` it builds a weighting that puts the instance on the hyperplane
//! `χ(C) · w = 0` and solves on both sides of it, witnessing that an
//! arbitrarily small slide along `χ(C)` flips the partition.

use alloc::collections::BTreeSet;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::games::{
    certify_partition, energy_core, gkk_core, solve_gkk, vplus_from_measure, GameError,
    GameScalar, Partition,
};
use crate::graph::{validate, Arena, Cycle, Digraph, EdgeId, Player, VertexId, WeightFn};
use crate::pattern::Sign;

// ---------------------------------------------------------------------------
// Query traces
// ---------------------------------------------------------------------------

/// One recorded sign test: the solver asked for `sign(vector · w)` and the
/// concrete run answered `outcome`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QueryRecord {
    /// Integer coefficients over the graph's edge order.
    pub vector: Vec<BigInt>,
    /// The sign the concrete evaluation produced.
    pub outcome: Sign,
}

/// The full sign-query transcript of one solver run.
///
/// `queries` is the ordered walk; `hyperplanes` collects the distinct query
/// directions after scaling to a primitive vector whose first nonzero entry
/// is positive (two queries that test opposite sides of the same hyperplane
/// normalize identically). Every recorded vector is nonzero: a sign test on
/// the identically-zero form has a fixed answer and is not a query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QueryTrace {
    /// Recorded sign tests in execution order.
    pub queries: Vec<QueryRecord>,
    /// Deduplicated normalized query directions.
    pub hyperplanes: BTreeSet<Vec<BigInt>>,
}

impl QueryTrace {
    fn from_queries(queries: Vec<QueryRecord>) -> QueryTrace {
        let hyperplanes = queries
            .iter()
            .filter_map(|q| Self::normalize_direction(&q.vector))
            .collect();
        QueryTrace {
            queries,
            hyperplanes,
        }
    }

    /// Scales an integer vector to the canonical normal of its hyperplane:
    /// entries divided by their gcd, then negated if the first nonzero
    /// entry is negative. Returns `None` for the zero vector. Idempotent.
    pub fn normalize_direction(v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut g = BigInt::zero();
        for x in v {
            g = gcd(g, x.abs());
        }
        if g.is_zero() {
            return None;
        }
        let mut out: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
        if let Some(first) = out.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut out {
                    *x = -(x.clone());
                }
            }
        }
        Some(out)
    }

    /// Number of recorded queries.
    pub fn len(&self) -> usize {
        self.queries.len()
    }

    /// True if the run never branched on the weights.
    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = core::mem::replace(&mut b, r);
    }
    a
}

// ---------------------------------------------------------------------------
// Recording and replaying scalars
// ---------------------------------------------------------------------------

/// A linear form over the edge weights carried symbolically alongside its
/// concrete evaluation; `sign` records the form and the answer.
#[derive(Clone)]
struct TracedForm {
    coeffs: Vec<BigInt>,
    value: BigRational,
    tape: Rc<RefCell<Vec<QueryRecord>>>,
}

impl TracedForm {
    fn proto(num_edges: usize, tape: Rc<RefCell<Vec<QueryRecord>>>) -> TracedForm {
        TracedForm {
            coeffs: vec![BigInt::zero(); num_edges],
            value: BigRational::zero(),
            tape,
        }
    }
}

impl GameScalar for TracedForm {
    fn zero(&self) -> Self {
        TracedForm {
            coeffs: vec![BigInt::zero(); self.coeffs.len()],
            value: BigRational::zero(),
            tape: self.tape.clone(),
        }
    }
    fn embed_weight(&self, pos: usize, value: &BigRational) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        coeffs[pos] = BigInt::from(1);
        TracedForm {
            coeffs,
            value: value.clone(),
            tape: self.tape.clone(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        TracedForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            value: &self.value + &other.value,
            tape: self.tape.clone(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        TracedForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            value: &self.value - &other.value,
            tape: self.tape.clone(),
        }
    }
    fn sign(&self) -> Sign {
        let outcome = Sign::of_rational(&self.value);
        if self.coeffs.iter().any(|c| !c.is_zero()) {
            self.tape.borrow_mut().push(QueryRecord {
                vector: self.coeffs.clone(),
                outcome,
            });
        }
        outcome
    }
}

struct ReplayCursor {
    queries: Vec<QueryRecord>,
    at: usize,
}

/// A linear form with no concrete value at all; `sign` answers from the
/// recorded trace, insisting that the query matches what was recorded.
#[derive(Clone)]
struct ReplayForm {
    coeffs: Vec<BigInt>,
    cursor: Rc<RefCell<ReplayCursor>>,
}

impl GameScalar for ReplayForm {
    fn zero(&self) -> Self {
        ReplayForm {
            coeffs: vec![BigInt::zero(); self.coeffs.len()],
            cursor: self.cursor.clone(),
        }
    }
    fn embed_weight(&self, pos: usize, _value: &BigRational) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        coeffs[pos] = BigInt::from(1);
        ReplayForm {
            coeffs,
            cursor: self.cursor.clone(),
        }
    }
    fn add(&self, other: &Self) -> Self {
        ReplayForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            cursor: self.cursor.clone(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        ReplayForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            cursor: self.cursor.clone(),
        }
    }
    fn sign(&self) -> Sign {
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return Sign::Zero;
        }
        let mut cur = self.cursor.borrow_mut();
        let at = cur.at;
        cur.at += 1;
        let rec = cur
            .queries
            .get(at)
            .unwrap_or_else(|| panic!("replay ran past the {at}-query trace"));
        assert_eq!(
            rec.vector, self.coeffs,
            "replay diverged from the recorded trace at query {at}"
        );
        rec.outcome
    }
}

// ---------------------------------------------------------------------------
// Traced solving
// ---------------------------------------------------------------------------

/// Which instrumented solver to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TracedSolver {
    /// Potential reduction.
    Gkk,
    /// Energy lifting.
    ValueIteration,
}

/// Runs the chosen solver on a strongly connected arena while recording
/// every sign test it makes as an integer combination of the input weights.
///
/// The partition equals the uninstrumented solver's output exactly,
/// certificate strategies included (they are attached by the same
/// post-pass; the trace covers the decision sequence that determines the
/// partition). All queries are homogeneous, so rescaling the weights by any
/// positive rational leaves both the trace vectors and their outcomes
/// unchanged.
pub fn traced_solve(
    arena: &Arena,
    weights: &WeightFn,
    solver: TracedSolver,
) -> Result<(Partition, QueryTrace), GameError> {
    validate(&arena.graph, true)?;
    let tape: Rc<RefCell<Vec<QueryRecord>>> = Rc::new(RefCell::new(Vec::new()));
    let proto = TracedForm::proto(arena.graph.edge_count(), tape.clone());
    let v_plus = match solver {
        TracedSolver::Gkk => gkk_core(arena, weights, &proto)?,
        TracedSolver::ValueIteration => {
            let f = energy_core(arena, weights, &proto)?;
            vplus_from_measure(arena, &f)
        }
    };
    let (sigma, tau) = certify_partition(arena, weights, &v_plus)?;
    let queries = core::mem::take(&mut *tape.borrow_mut());
    Ok((
        Partition {
            v_plus,
            max_strategy: Some(sigma),
            min_strategy: Some(tau),
        },
        QueryTrace::from_queries(queries),
    ))
}

/// Re-runs the solver as a pure decision tree: every sign test is answered
/// from `trace`, and no weight value is ever consulted (the run is handed
/// all-zero weights as inert placeholders). Returns the winning set the
/// replayed walk arrives at.
///
/// Panics if the replay asks a different query than the trace recorded or
/// runs past its end — both only happen when the trace belongs to a
/// different arena or solver.
pub fn replay_partition(
    arena: &Arena,
    solver: TracedSolver,
    trace: &QueryTrace,
) -> Result<BTreeSet<VertexId>, GameError> {
    let placeholders: WeightFn = arena
        .graph
        .edges()
        .iter()
        .map(|e| (e.id.clone(), BigRational::zero()))
        .collect();
    let cursor = Rc::new(RefCell::new(ReplayCursor {
        queries: trace.queries.clone(),
        at: 0,
    }));
    let proto = ReplayForm {
        coeffs: vec![BigInt::zero(); arena.graph.edge_count()],
        cursor: cursor.clone(),
    };
    let v_plus = match solver {
        TracedSolver::Gkk => gkk_core(arena, &placeholders, &proto)?,
        TracedSolver::ValueIteration => {
            let f = energy_core(arena, &placeholders, &proto)?;
            vplus_from_measure(arena, &f)
        }
    };
    let consumed = cursor.borrow().at;
    assert_eq!(
        consumed,
        trace.queries.len(),
        "replay consumed {consumed} of {} recorded queries",
        trace.queries.len()
    );
    Ok(v_plus)
}

// ---------------------------------------------------------------------------
// The boundary experiment
// ---------------------------------------------------------------------------

/// A weighting that places an arena exactly on the decision hyperplane of
/// one cycle, together with the perturbation size used to step off it.
///
/// `w` is zero on the cycle and on a shortest-path forest leading into it,
/// `+|V|` on every other Min-owned edge and `-|V|` on every other Max-owned
/// edge. Every cycle other than `C` then has weight of absolute value more
/// than `|V|/2` under any perturbation bounded by ½, while `C` itself sits
/// at zero — so the partition with all vertices winning for Max holds on
/// one side of `χ(C) · w = 0` and fails on the other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryProbe {
    /// The probed cycle.
    pub cycle: Cycle,
    /// The vertex set whose winning region sits on the boundary: all of V.
    pub u: BTreeSet<VertexId>,
    /// The base weighting on the hyperplane.
    pub w: WeightFn,
    /// Perturbation magnitude, a rational in (0, ½).
    pub epsilon: BigRational,
}

impl BoundaryProbe {
    /// Builds the base weighting for `cycle` in a strongly connected arena.
    ///
    /// Panics if `epsilon` is outside (0, ½); graph and cycle defects are
    /// returned as errors.
    pub fn new(arena: &Arena, cycle: &Cycle, epsilon: &BigRational) -> Result<BoundaryProbe, GameError> {
        assert!(
            epsilon > &BigRational::zero() && epsilon < &BigRational::new(1.into(), 2.into()),
            "perturbation must lie strictly between 0 and 1/2"
        );
        let g = &arena.graph;
        validate(g, true)?;
        let canon = Cycle::from_edge_ids(g, &cycle.edges).map_err(GameError::Graph)?;

        let forest = shortest_path_forest(g, &canon);
        let keep_zero: BTreeSet<&EdgeId> = canon.edges.iter().chain(forest.iter()).collect();
        let big = BigRational::from_integer(BigInt::from(g.vertex_count()));
        let mut w = WeightFn::new();
        for e in g.edges() {
            let value = if keep_zero.contains(&e.id) {
                BigRational::zero()
            } else if arena.owner_of(&e.src) == Player::Min {
                big.clone()
            } else {
                -big.clone()
            };
            w.insert(e.id.clone(), value);
        }
        Ok(BoundaryProbe {
            cycle: canon,
            u: g.vertices().iter().cloned().collect(),
            w,
            epsilon: epsilon.clone(),
        })
    }

    /// The base weighting slid off the hyperplane: `w ± (ε/|C|) · χ(C)`.
    pub fn perturbed(&self, positive: bool) -> WeightFn {
        let step = &self.epsilon / BigRational::from_integer(BigInt::from(self.cycle.len()));
        let mut w = self.w.clone();
        for id in &self.cycle.edges {
            let entry = w.get_mut(id).expect("cycle edges are weighted");
            if positive {
                *entry += &step;
            } else {
                *entry -= &step;
            }
        }
        w
    }
}

/// One out-edge per off-cycle vertex along a shortest path into the cycle,
/// ties broken toward the smallest edge id.
fn shortest_path_forest(g: &Digraph, cycle: &Cycle) -> BTreeSet<EdgeId> {
    let n = g.vertex_count();
    let on_cycle: BTreeSet<usize> = cycle
        .vertex_seq
        .iter()
        .map(|v| g.vertex_pos(v.as_str()).expect("validated cycle"))
        .collect();
    // Reverse multi-source BFS gives each vertex its hop distance to the cycle.
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut endpoints = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let s = g.vertex_pos(e.src.as_str()).expect("validated");
        let d = g.vertex_pos(e.dst.as_str()).expect("validated");
        rev[d].push(s);
        endpoints.push((s, d));
    }
    let mut dist = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = on_cycle.iter().copied().collect();
    for &v in &frontier {
        dist[v] = 0;
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &p in &rev[v] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[v] + 1;
                    next.push(p);
                }
            }
        }
        frontier = next;
    }

    let mut forest = BTreeSet::new();
    for (vpos, _) in g.vertices().iter().enumerate() {
        if on_cycle.contains(&vpos) {
            continue;
        }
        debug_assert!(dist[vpos] != usize::MAX, "strong connectivity");
        let chosen = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(p, _)| endpoints[p].0 == vpos && dist[endpoints[p].1] + 1 == dist[vpos])
            .map(|(_, e)| e.id.clone())
            .min()
            .expect("some out-edge decreases the distance");
        forest.insert(chosen);
    }
    forest
}

/// Builds the boundary weighting for `cycle` and solves the arena on both
/// sides of its hyperplane, returning the base weights and both partitions.
///
/// Asserts the boundary behaviour: the positive side must make every vertex
/// winning for Max and the negative side must not. Solver errors and
/// malformed inputs are returned as errors; `eps` outside (0, ½) panics.
pub fn boundary_probe(
    arena: &Arena,
    cycle: &Cycle,
    eps: &BigRational,
) -> Result<(WeightFn, Partition, Partition), GameError> {
    let probe = BoundaryProbe::new(arena, cycle, eps)?;
    let part_plus = solve_gkk(arena, &probe.perturbed(true))?;
    let part_minus = solve_gkk(arena, &probe.perturbed(false))?;
    assert_eq!(
        part_plus.v_plus.len(),
        arena.graph.vertex_count(),
        "positive perturbation must hand the whole arena to Max"
    );
    assert_ne!(part_minus, part_plus, "the hyperplane must separate");
    Ok((probe.w, part_plus, part_minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{solve_energy, GameError};
    use crate::graph::weights_from_i64;
    use alloc::vec::Vec;

    fn loop_arena(weight: i64) -> (Arena, WeightFn) {
        let arena = Arena::build(&["v"], &["v"], &[("l", "v", "v")]).unwrap();
        (arena, weights_from_i64([("l", weight)]))
    }

    fn triangle_arena() -> Arena {
        Arena::build(
            &["a", "b", "c"],
            &["a", "b", "c"],
            &[("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")],
        )
        .unwrap()
    }

    /// A digon between a Max and a Min vertex plus a Min-owned spur vertex
    /// with a self-loop; strongly connected, both owners, off-cycle vertex.
    fn spur_arena() -> Arena {
        Arena::build(
            &["a", "b", "c"],
            &["a"],
            &[
                ("ab", "a", "b"),
                ("ba", "b", "a"),
                ("bc", "b", "c"),
                ("ca", "c", "a"),
                ("cc", "c", "c"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_loop_gkk_trace_is_the_loop_query() {
        let (arena, w) = loop_arena(1);
        let (part, trace) = traced_solve(&arena, &w, TracedSolver::Gkk).unwrap();
        assert_eq!(part.v_plus.len(), 1);
        let chi = vec![BigInt::from(1)];
        assert!(trace.queries.iter().any(|q| q.vector == chi));
        assert!(trace.queries.iter().all(|q| q.vector.iter().any(|c| !c.is_zero())));
        assert_eq!(trace.hyperplanes.len(), 1);
    }

    #[test]
    fn tracing_changes_nothing_and_scaling_changes_no_outcome() {
        let arena = spur_arena();
        for (signs, scale) in [(1i64, 3i64), (-1, 5)] {
            let w = weights_from_i64([("ab", 2 * signs), ("ba", -signs), ("bc", 1), ("ca", 0), ("cc", -2)]);
            let scaled: WeightFn = w
                .iter()
                .map(|(k, v)| (k.clone(), v * BigRational::from_integer(BigInt::from(scale))))
                .collect();
            for solver in [TracedSolver::Gkk, TracedSolver::ValueIteration] {
                let (part, trace) = traced_solve(&arena, &w, solver).unwrap();
                let plain = match solver {
                    TracedSolver::Gkk => solve_gkk(&arena, &w).unwrap(),
                    TracedSolver::ValueIteration => solve_energy(&arena, &w).unwrap(),
                };
                assert_eq!(part, plain);
                let (part3, trace3) = traced_solve(&arena, &scaled, solver).unwrap();
                assert_eq!(part3.v_plus, part.v_plus);
                assert_eq!(trace3, trace, "homogeneous queries ignore scaling");
            }
        }
    }

    #[test]
    fn replay_reproduces_partitions_blind() {
        let arenas: Vec<(Arena, WeightFn)> = alloc::vec![
            loop_arena(1),
            loop_arena(-1),
            (spur_arena(), weights_from_i64([("ab", 2), ("ba", -1), ("bc", 1), ("ca", 0), ("cc", -2)])),
            (spur_arena(), weights_from_i64([("ab", -2), ("ba", 1), ("bc", 4), ("ca", -1), ("cc", 3)])),
        ];
        for (arena, w) in &arenas {
            for solver in [TracedSolver::Gkk, TracedSolver::ValueIteration] {
                let (part, trace) = traced_solve(arena, w, solver).unwrap();
                let replayed = replay_partition(arena, solver, &trace).unwrap();
                assert_eq!(replayed, part.v_plus);
            }
        }
    }

    #[test]
    fn normalization_is_canonical_and_idempotent() {
        let raw = vec![BigInt::from(-2), BigInt::from(4)];
        let n1 = QueryTrace::normalize_direction(&raw).unwrap();
        assert_eq!(n1, vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(QueryTrace::normalize_direction(&n1).unwrap(), n1);
        let shifted = vec![BigInt::from(0), BigInt::from(-3), BigInt::from(6)];
        assert_eq!(
            QueryTrace::normalize_direction(&shifted).unwrap(),
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(-2)]
        );
        assert_eq!(QueryTrace::normalize_direction(&[BigInt::zero()]), None);
    }

    #[test]
    fn boundary_probe_on_the_bare_cycle() {
        let arena = triangle_arena();
        let cycle = Cycle::from_edge_ids(&arena.graph, &["e1", "e2", "e3"].map(EdgeId::from)).unwrap();
        for (num, den) in [(1i32, 4i32), (1, 8)] {
            let eps = BigRational::new(num.into(), den.into());
            let (w_base, plus, minus) = boundary_probe(&arena, &cycle, &eps).unwrap();
            assert!(w_base.values().all(|v| v.is_zero()), "no off-cycle edges");
            assert_eq!(plus.v_plus.len(), 3);
            assert!(minus.v_plus.is_empty());
        }
    }

    #[test]
    fn boundary_probe_routes_the_spur_through_the_forest() {
        let arena = spur_arena();
        let digon = Cycle::from_edge_ids(&arena.graph, &["ab", "ba"].map(EdgeId::from)).unwrap();
        let eps = BigRational::new(1.into(), 4.into());
        let (w_base, plus, minus) = boundary_probe(&arena, &digon, &eps).unwrap();
        // c reaches the digon via ca (its lone distance-decreasing edge), so
        // ca joins the zero set while bc and the self-loop get +|V|.
        assert!(w_base[&EdgeId::from("ca")].is_zero());
        assert_eq!(w_base[&EdgeId::from("bc")], BigRational::from_integer(3.into()));
        assert_eq!(w_base[&EdgeId::from("cc")], BigRational::from_integer(3.into()));
        assert_eq!(plus.v_plus.len(), 3);
        assert!(minus.v_plus.is_empty());
    }

    /// The differing queries between the two perturbed runs are exactly the
    /// recorded tests that are not orthogonal to χ(C); on the one-vertex
    /// loop arena that leaves a single query, the cycle indicator itself.
    #[test]
    fn separation_shows_up_in_the_traces() {
        // one-vertex loop: the verbatim uniqueness statement
        let (arena, _) = loop_arena(0);
        let looped = Cycle::from_edge_ids(&arena.graph, &["l"].map(EdgeId::from)).unwrap();
        let probe = BoundaryProbe::new(&arena, &looped, &BigRational::new(1.into(), 4.into())).unwrap();
        let (_, t_plus) = traced_solve(&arena, &probe.perturbed(true), TracedSolver::Gkk).unwrap();
        let (_, t_minus) = traced_solve(&arena, &probe.perturbed(false), TracedSolver::Gkk).unwrap();
        let diffs = outcome_divergence(&t_plus, &t_minus);
        assert_eq!(diffs, vec![vec![BigInt::from(1)]], "only χ(C) flips");

        // three-cycle: every flipped query leans on χ(C), several do
        let arena = triangle_arena();
        let cycle = Cycle::from_edge_ids(&arena.graph, &["e1", "e2", "e3"].map(EdgeId::from)).unwrap();
        let probe = BoundaryProbe::new(&arena, &cycle, &BigRational::new(1.into(), 4.into())).unwrap();
        let (_, t_plus) = traced_solve(&arena, &probe.perturbed(true), TracedSolver::Gkk).unwrap();
        let (_, t_minus) = traced_solve(&arena, &probe.perturbed(false), TracedSolver::Gkk).unwrap();
        let chi = cycle.chi(&arena.graph);
        let diffs = outcome_divergence(&t_plus, &t_minus);
        assert!(!diffs.is_empty());
        for v in &diffs {
            let dot: BigInt = v.iter().zip(&chi).map(|(a, b)| a * b).sum();
            assert!(!dot.is_zero(), "a flipped query must cross the hyperplane");
        }
    }

    /// Vectors of the queries whose outcomes differ, walking both traces
    /// while they still ask the same questions.
    fn outcome_divergence(a: &QueryTrace, b: &QueryTrace) -> Vec<Vec<BigInt>> {
        a.queries
            .iter()
            .zip(&b.queries)
            .take_while(|(x, y)| x.vector == y.vector)
            .filter(|(x, y)| x.outcome != y.outcome)
            .map(|(x, _)| x.vector.clone())
            .collect()
    }

    #[test]
    fn traced_solve_requires_strong_connectivity() {
        let arena = Arena::build(
            &["a", "b"],
            &["a"],
            &[("aa", "a", "a"), ("ab", "a", "b"), ("bb", "b", "b")],
        )
        .unwrap();
        let w = weights_from_i64([("aa", 1), ("ab", 0), ("bb", -1)]);
        assert!(matches!(
            traced_solve(&arena, &w, TracedSolver::Gkk),
            Err(GameError::Graph(_))
        ));
    }
}
