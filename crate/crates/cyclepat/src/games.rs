//! Sign-of-mean-payoff games: the zero-mean partition and its certificates.
//!
//! On an arena whose vertices are split between Max and Min, the *partition*
//! question asks from which vertices Max can force every cycle formed by the
//! play to carry sign `0` or `+` (the set `V+`), Min forcing sign `-` from
//! the rest. Positional strategies suffice for both players, so a partition
//! can always be certified by a pair of strategy subgraphs whose reachable
//! cycles all have the right signs; [`verify_partition`] checks exactly
//! that, and [`certify_partition`] reconstructs such a pair for any correct
//! partition out of energy progress measures.
//!
//! Solvers:
//! - [`solve_oracle`] enumerates positional strategies outright: reliable on
//!   tiny arenas and the reference point everything else is tested against.
//! - [`solve_pattern_only`] answers the same question when only cycle signs
//!   (not weights) are available, plus closed-form shortcuts for one-player
//!   strongly connected arenas.
//! - [`solve_gkk`] runs the potential-reduction iteration of Gurvich,
//!   Karzanov, and Khachiyan (USSR Comput. Math. 1988) with exact rational
//!   potentials.
//! - [`solve_energy`] runs small-progress-measure lifting in the style of
//!   Brim, Chaloupka, Doyen, Gentilini, Raskin (Formal Methods Syst. Des.
//!   2011).
//! - [`solve_general`] peels bottom strongly connected components with an
//!   inner solver and stitches attractor strategies into whole-arena
//!   certificates.
//!
//! The iteration cores are generic over [`GameScalar`] so that a caller can
//! substitute an instrumented scalar and observe every sign test the solver
//! performs; plain rational arithmetic is the default instantiation.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::{
    enumerate_cycles_budgeted, sccs, Arena, Cycle, Digraph, EdgeId, GraphError, Player,
    PriorityFn, StrategySubgraph, VertexId, WeightFn,
};

fn reach_from_set(graph: &Digraph, seeds: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let mut seen: BTreeSet<VertexId> = seeds
        .iter()
        .filter(|v| graph.vertex_pos(v.as_str()).is_some())
        .cloned()
        .collect();
    let mut stack: Vec<VertexId> = seen.iter().cloned().collect();
    while let Some(v) = stack.pop() {
        for e in graph.out_edges_of(v.as_str()) {
            if seen.insert(e.dst.clone()) {
                stack.push(e.dst.clone());
            }
        }
    }
    seen
}
use crate::parity::parity_to_weights;
use crate::pattern::{CyclePattern, PatternError, Sign};

/// Cap on positional strategies an enumeration solver will visit.
pub const DEFAULT_STRATEGY_BUDGET: usize = 1_000_000;

/// Errors from game solving.
#[derive(Clone, Debug)]
pub enum GameError {
    /// Propagated graph failure (cycle budget, malformed subgraph, ...).
    Graph(GraphError),
    /// Propagated pattern failure.
    Pattern(PatternError),
    /// The potential iteration exceeded its `2^n + 1` round allowance.
    IterationBudgetExceeded {
        /// The allowance that was exhausted.
        budget: u128,
    },
    /// Strategy enumeration would visit more strategies than allowed.
    StrategyBudgetExceeded {
        /// The allowance that was exhausted.
        budget: usize,
    },
    /// A partition was presented for verification without its strategies.
    MissingCertificate,
    /// Certificate extraction failed, meaning the claimed partition is wrong.
    CertificationFailed,
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::Graph(e) => write!(f, "{e}"),
            GameError::Pattern(e) => write!(f, "{e}"),
            GameError::IterationBudgetExceeded { budget } => {
                write!(f, "potential iteration exceeded {budget} rounds")
            }
            GameError::StrategyBudgetExceeded { budget } => {
                write!(f, "more than {budget} positional strategies")
            }
            GameError::MissingCertificate => f.write_str("partition carries no strategies"),
            GameError::CertificationFailed => {
                f.write_str("claimed partition admits no certificate")
            }
        }
    }
}

impl From<GraphError> for GameError {
    fn from(e: GraphError) -> GameError {
        GameError::Graph(e)
    }
}

impl From<PatternError> for GameError {
    fn from(e: PatternError) -> GameError {
        GameError::Pattern(e)
    }
}

/// A zero-mean partition together with optional strategy certificates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    /// Vertices from which Max forces every cycle into `{0, +}`.
    pub v_plus: BTreeSet<VertexId>,
    /// A Max strategy on `v_plus` whose reachable cycles all have sign
    /// `0`/`+`, when available.
    pub max_strategy: Option<StrategySubgraph>,
    /// A Min strategy on the complement whose reachable cycles are all
    /// negative, when available.
    pub min_strategy: Option<StrategySubgraph>,
}

fn weight_of(weights: &WeightFn, id: &EdgeId) -> Result<BigRational, GameError> {
    weights
        .get(id)
        .cloned()
        .ok_or_else(|| GameError::Pattern(PatternError::MissingWeight(id.clone())))
}

// ---------------------------------------------------------------------------
// Generic scalar
// ---------------------------------------------------------------------------

/// Arithmetic a potential/progress solver needs, with every comparison
/// funneled through a single `sign` operation so instrumented scalars can
/// observe the full query sequence.
///
/// New scalars are derived from a prototype (`zero`, `embed_weight` are
/// methods, not associated functions) so an instrumented implementation can
/// thread shared recording state through every value it creates.
pub trait GameScalar: Clone {
    /// A zero derived from this scalar's instrumentation context.
    fn zero(&self) -> Self;
    /// Embeds the weight of the edge at position `pos`.
    fn embed_weight(&self, pos: usize, value: &BigRational) -> Self;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Difference.
    fn sub(&self, other: &Self) -> Self;
    /// The sign of the scalar — the only way any solver inspects a value.
    fn sign(&self) -> Sign;
}

/// Plain exact rational arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlainScalar(pub BigRational);

impl Default for PlainScalar {
    fn default() -> Self {
        PlainScalar(BigRational::zero())
    }
}

impl GameScalar for PlainScalar {
    fn zero(&self) -> Self {
        PlainScalar(BigRational::zero())
    }
    fn embed_weight(&self, _pos: usize, value: &BigRational) -> Self {
        PlainScalar(value.clone())
    }
    fn add(&self, other: &Self) -> Self {
        PlainScalar(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        PlainScalar(&self.0 - &other.0)
    }
    fn sign(&self) -> Sign {
        Sign::of_rational(&self.0)
    }
}

fn cmp_scalar<S: GameScalar>(a: &S, b: &S) -> Sign {
    a.sub(b).sign()
}

// ---------------------------------------------------------------------------
// Arena scaffolding shared by the iterative solvers
// ---------------------------------------------------------------------------

struct Layout {
    /// Vertex positions in id order.
    vorder: Vec<usize>,
    /// Out-edges per vertex position as `(edge_pos, dst_pos)`, id-sorted.
    out: Vec<Vec<(usize, usize)>>,
    /// In-neighbours per vertex position, id-sorted, deduplicated.
    preds: Vec<Vec<usize>>,
    owner: Vec<Player>,
}

impl Layout {
    fn new(arena: &Arena) -> Layout {
        let g = &arena.graph;
        let n = g.vertex_count();
        let mut vorder: Vec<usize> = (0..n).collect();
        vorder.sort_by(|&a, &b| g.vertices()[a].cmp(&g.vertices()[b]));
        let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut preds: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut edge_order: Vec<usize> = (0..g.edge_count()).collect();
        edge_order.sort_by(|&a, &b| g.edges()[a].id.cmp(&g.edges()[b].id));
        for &epos in &edge_order {
            let e = &g.edges()[epos];
            let s = g.vertex_pos(e.src.as_str()).expect("validated");
            let d = g.vertex_pos(e.dst.as_str()).expect("validated");
            out[s].push((epos, d));
            preds[d].insert(s);
        }
        let owner = g.vertices().iter().map(|v| arena.owner_of(v)).collect();
        Layout {
            vorder,
            out,
            preds: preds.into_iter().map(|s| s.into_iter().collect()).collect(),
            owner,
        }
    }
}

/// Rescales weights by the common denominator so all values are integral;
/// signs of all cycle weights are preserved.
fn integral_weights(arena: &Arena, weights: &WeightFn) -> Result<Vec<BigRational>, GameError> {
    let g = &arena.graph;
    let mut l = BigInt::one();
    let mut raw = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let w = weight_of(weights, &e.id)?;
        l = l.lcm(w.denom());
        raw.push(w);
    }
    let scale = BigRational::from_integer(l);
    Ok(raw.into_iter().map(|w| w * &scale).collect())
}

// ---------------------------------------------------------------------------
// Energy lifting
// ---------------------------------------------------------------------------

/// Progress-measure lifting over any [`GameScalar`]; `None` encodes the top
/// value (Max cannot keep this vertex nonnegative with any finite credit).
///
/// Lifts arrive through a FIFO queue seeded with all vertices in id order;
/// a change re-queues the in-neighbours. Finite values strictly exceeding
/// the absolute-weight sum `B` jump to top, which bounds the lift count.
pub(crate) fn energy_core<S: GameScalar>(
    arena: &Arena,
    weights: &WeightFn,
    proto: &S,
) -> Result<Vec<Option<S>>, GameError> {
    let layout = Layout::new(arena);
    let m = arena.graph.edge_count();
    let n = arena.graph.vertex_count();
    let ints = integral_weights(arena, weights)?;
    let wf: Vec<S> = (0..m).map(|p| proto.embed_weight(p, &ints[p])).collect();
    let zero = proto.zero();
    let mut bound = proto.zero();
    for f in &wf {
        let a = if f.sign() == Sign::Minus { zero.sub(f) } else { f.clone() };
        bound = bound.add(&a);
    }

    let mut f: Vec<Option<S>> = vec![Some(proto.zero()); n];
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = layout.vorder.iter().copied().collect();

    // None is top: strictly greater than every finite value.
    let gt = |a: &Option<S>, b: &Option<S>| -> bool {
        match (a, b) {
            (None, None) => false,
            (None, Some(_)) => true,
            (Some(_), None) => false,
            (Some(x), Some(y)) => cmp_scalar(x, y) == Sign::Plus,
        }
    };

    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let mut best: Option<Option<S>> = None;
        for &(epos, dst) in &layout.out[v] {
            let val: Option<S> = match &f[dst] {
                None => None,
                Some(fu) => {
                    let lift = fu.sub(&wf[epos]);
                    if lift.sign() == Sign::Minus {
                        Some(zero.clone())
                    } else {
                        Some(lift)
                    }
                }
            };
            best = Some(match best {
                None => val,
                Some(cur) => match layout.owner[v] {
                    Player::Max => {
                        if gt(&cur, &val) {
                            val
                        } else {
                            cur
                        }
                    }
                    Player::Min => {
                        if gt(&val, &cur) {
                            val
                        } else {
                            cur
                        }
                    }
                },
            });
        }
        let mut target = best.expect("arena vertices have out-edges");
        if let Some(t) = &target {
            if cmp_scalar(t, &bound) == Sign::Plus {
                target = None;
            }
        }
        if gt(&target, &f[v]) {
            f[v] = target;
            for &p in &layout.preds[v] {
                if !queued[p] {
                    queued[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    Ok(f)
}

/// Reference implementation of the same fixpoint by repeated full sweeps in
/// vertex id order; used to cross-check the queued variant.
fn energy_by_sweeps(arena: &Arena, weights: &WeightFn) -> Result<Vec<Option<PlainScalar>>, GameError> {
    let layout = Layout::new(arena);
    let n = arena.graph.vertex_count();
    let ints = integral_weights(arena, weights)?;
    let mut bound = BigRational::zero();
    for w in &ints {
        bound += w.abs();
    }
    let mut f: Vec<Option<BigRational>> = vec![Some(BigRational::zero()); n];
    loop {
        let mut changed = false;
        for &v in &layout.vorder {
            let mut best: Option<Option<BigRational>> = None;
            for &(epos, dst) in &layout.out[v] {
                let val = f[dst].as_ref().map(|fu| {
                    let lift = fu - &ints[epos];
                    if lift < BigRational::zero() {
                        BigRational::zero()
                    } else {
                        lift
                    }
                });
                let gt = |a: &Option<BigRational>, b: &Option<BigRational>| match (a, b) {
                    (None, None) => false,
                    (None, Some(_)) => true,
                    (Some(_), None) => false,
                    (Some(x), Some(y)) => x > y,
                };
                best = Some(match best {
                    None => val,
                    Some(cur) => match layout.owner[v] {
                        Player::Max => {
                            if gt(&cur, &val) {
                                val
                            } else {
                                cur
                            }
                        }
                        Player::Min => {
                            if gt(&val, &cur) {
                                val
                            } else {
                                cur
                            }
                        }
                    },
                });
            }
            let mut target = best.expect("arena vertices have out-edges");
            if let Some(t) = &target {
                if *t > bound {
                    target = None;
                }
            }
            let is_greater = match (&target, &f[v]) {
                (None, None) => false,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (Some(x), Some(y)) => x > y,
            };
            if is_greater {
                f[v] = target;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(f
        .into_iter()
        .map(|x| x.map(PlainScalar))
        .collect())
}

pub(crate) fn vplus_from_measure<S>(arena: &Arena, f: &[Option<S>]) -> BTreeSet<VertexId> {
    arena
        .graph
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| f[*i].is_some())
        .map(|(_, v)| v.clone())
        .collect()
}

/// Solves by energy lifting and certifies the result.
pub fn solve_energy(arena: &Arena, weights: &WeightFn) -> Result<Partition, GameError> {
    let f = energy_core(arena, weights, &PlainScalar::default())?;
    let v_plus = vplus_from_measure(arena, &f);
    let (sigma, tau) = certify_partition(arena, weights, &v_plus)?;
    Ok(Partition {
        v_plus,
        max_strategy: Some(sigma),
        min_strategy: Some(tau),
    })
}

/// Same fixpoint computed by whole-arena sweeps; primarily a reference point.
pub fn solve_energy_by_sweeps(arena: &Arena, weights: &WeightFn) -> Result<Partition, GameError> {
    let f = energy_by_sweeps(arena, weights)?;
    let v_plus = vplus_from_measure(arena, &f);
    let (sigma, tau) = certify_partition(arena, weights, &v_plus)?;
    Ok(Partition {
        v_plus,
        max_strategy: Some(sigma),
        min_strategy: Some(tau),
    })
}

// ---------------------------------------------------------------------------
// GKK potential iteration
// ---------------------------------------------------------------------------

/// The potential-reduction iteration over any [`GameScalar`].
///
/// Maintains a potential `eps`, reduced weights `w'(u,v) = w + eps(u) -
/// eps(v)`, and the least fixpoint `L` of "Min can step negative or stay
/// zero inside L / Max must". Raising the potential of all of `L` by the
/// smallest reduced-weight magnitude crossing the cut that actually changes
/// `L` makes progress; when no candidate changes `L` the iteration is done
/// and `V+` is the complement of `L`. Rounds are capped at `2^n + 1`.
pub(crate) fn gkk_core<S: GameScalar>(
    arena: &Arena,
    weights: &WeightFn,
    proto: &S,
) -> Result<BTreeSet<VertexId>, GameError> {
    let layout = Layout::new(arena);
    let g = &arena.graph;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut eps: Vec<S> = (0..n).map(|_| proto.zero()).collect();
    let wf: Vec<S> = (0..m)
        .map(|p| {
            let id = &g.edges()[p].id;
            Ok(proto.embed_weight(p, &weight_of(weights, id)?))
        })
        .collect::<Result<_, GameError>>()?;
    let src_dst: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            (
                g.vertex_pos(e.src.as_str()).expect("validated"),
                g.vertex_pos(e.dst.as_str()).expect("validated"),
            )
        })
        .collect();

    let reduced = |eps: &[S], p: usize| -> S {
        let (s, d) = src_dst[p];
        wf[p].add(&eps[s]).sub(&eps[d])
    };
    let all_signs = |eps: &[S]| -> Vec<Sign> { (0..m).map(|p| reduced(eps, p).sign()).collect() };

    let budget: u128 = if n >= 100 {
        u128::MAX
    } else {
        (1u128 << n) + 1
    };
    let mut rounds: u128 = 0;
    loop {
        let signs = all_signs(&eps);
        let l = least_fixpoint(&layout, &signs);
        // Candidate steps: magnitudes of nonzero reduced weights crossing
        // the cut, in increasing order; the first that changes L is taken.
        let mut cands: Vec<S> = Vec::new();
        for p in 0..m {
            let (s, d) = src_dst[p];
            if l.contains(&s) == l.contains(&d) || signs[p] == Sign::Zero {
                continue;
            }
            let r = reduced(&eps, p);
            let mag = if signs[p] == Sign::Minus {
                proto.zero().sub(&r)
            } else {
                r
            };
            // insertion sort keeps comparisons deterministic and the list
            // deduplicated
            let mut lo = 0;
            let mut dup = false;
            while lo < cands.len() {
                match cmp_scalar(&mag, &cands[lo]) {
                    Sign::Minus => break,
                    Sign::Zero => {
                        dup = true;
                        break;
                    }
                    Sign::Plus => lo += 1,
                }
            }
            if !dup {
                cands.insert(lo, mag);
            }
        }
        let mut advanced = false;
        for t in &cands {
            let mut trial = eps.clone();
            for &v in &l {
                trial[v] = trial[v].add(t);
            }
            let trial_signs = all_signs(&trial);
            let l2 = least_fixpoint(&layout, &trial_signs);
            if l2 != l {
                eps = trial;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(g
                .vertices()
                .iter()
                .enumerate()
                .filter(|(i, _)| !l.contains(i))
                .map(|(_, v)| v.clone())
                .collect());
        }
        rounds += 1;
        if rounds > budget {
            return Err(GameError::IterationBudgetExceeded { budget });
        }
    }
}

/// Least fixpoint of the "Min locally wins" operator: a Min vertex joins if
/// some reduced edge is negative or zero into the set; a Max vertex joins if
/// all its reduced edges are.
fn least_fixpoint(layout: &Layout, signs: &[Sign]) -> BTreeSet<usize> {
    let mut l: BTreeSet<usize> = BTreeSet::new();
    loop {
        let mut changed = false;
        for &v in &layout.vorder {
            if l.contains(&v) {
                continue;
            }
            let good = |&(epos, dst): &(usize, usize)| -> bool {
                signs[epos] == Sign::Minus || (signs[epos] == Sign::Zero && l.contains(&dst))
            };
            let joins = match layout.owner[v] {
                Player::Min => layout.out[v].iter().any(&good),
                Player::Max => layout.out[v].iter().all(good),
            };
            if joins {
                l.insert(v);
                changed = true;
            }
        }
        if !changed {
            return l;
        }
    }
}

/// Solves by potential reduction and certifies the result.
pub fn solve_gkk(arena: &Arena, weights: &WeightFn) -> Result<Partition, GameError> {
    let v_plus = gkk_core(arena, weights, &PlainScalar::default())?;
    let (sigma, tau) = certify_partition(arena, weights, &v_plus)?;
    Ok(Partition {
        v_plus,
        max_strategy: Some(sigma),
        min_strategy: Some(tau),
    })
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Rebuilds strategy certificates for a correct partition.
///
/// The Max side is an energy measure on the `V+`-induced subarena (possible
/// because Min cannot leave `V+` and Max never profits from doing so), with
/// choices at the lowest-id lift-attaining edges — a progress measure, so
/// every strategy cycle is nonnegative. The Min side is the same machinery
/// on the complement with roles swapped and integral weights sent through
/// `w -> -m*w - 1`: a cycle of at most `m` edges then satisfies
/// `sum(-m*w - 1) >= 0` exactly when its original weight was negative, so a
/// "Max" certificate of the transformed subarena is a Min certificate of
/// the original. Fails with [`GameError::CertificationFailed`] when the
/// claimed partition is not correct.
pub fn certify_partition(
    arena: &Arena,
    weights: &WeightFn,
    v_plus: &BTreeSet<VertexId>,
) -> Result<(StrategySubgraph, StrategySubgraph), GameError> {
    let sigma = if v_plus.is_empty() {
        BTreeMap::new()
    } else {
        let sub = arena
            .induced(v_plus)
            .map_err(|_| GameError::CertificationFailed)?;
        measure_strategy(&sub, weights)?
    };
    let v_minus: BTreeSet<VertexId> = arena
        .graph
        .vertices()
        .iter()
        .filter(|v| !v_plus.contains(*v))
        .cloned()
        .collect();
    let tau = if v_minus.is_empty() {
        BTreeMap::new()
    } else {
        let sub = arena
            .induced(&v_minus)
            .map_err(|_| GameError::CertificationFailed)?;
        let dual = flip_owners(&sub);
        let ints = integral_weights(&sub, weights)?;
        let m = BigInt::from(sub.graph.edge_count() as u64);
        let mut dual_weights = WeightFn::new();
        for (pos, e) in sub.graph.edges().iter().enumerate() {
            let w = -(&ints[pos] * BigRational::from_integer(m.clone()))
                - BigRational::one();
            dual_weights.insert(e.id.clone(), w);
        }
        measure_strategy(&dual, &dual_weights)?
    };
    Ok((
        StrategySubgraph {
            player: Player::Max,
            choice: sigma,
        },
        StrategySubgraph {
            player: Player::Min,
            choice: tau,
        },
    ))
}

fn flip_owners(arena: &Arena) -> Arena {
    let owner = arena
        .owner
        .iter()
        .map(|(v, p)| (v.clone(), p.opponent()))
        .collect();
    Arena {
        graph: arena.graph.clone(),
        owner,
    }
}

/// Runs the energy fixpoint and reads off lowest-id attaining choices for
/// Max vertices; fails if any vertex has no finite measure.
fn measure_strategy(
    arena: &Arena,
    weights: &WeightFn,
) -> Result<BTreeMap<VertexId, EdgeId>, GameError> {
    let f = energy_core(arena, weights, &PlainScalar::default())?;
    if f.iter().any(|x| x.is_none()) {
        return Err(GameError::CertificationFailed);
    }
    let layout = Layout::new(arena);
    let g = &arena.graph;
    let ints = integral_weights(arena, weights)?;
    let mut choice = BTreeMap::new();
    for &v in &layout.vorder {
        if layout.owner[v] != Player::Max {
            continue;
        }
        let fv = f[v].as_ref().expect("finite").0.clone();
        let mut pick: Option<&EdgeId> = None;
        for &(epos, dst) in &layout.out[v] {
            let fu = &f[dst].as_ref().expect("finite").0;
            let mut val = fu - &ints[epos];
            if val < BigRational::zero() {
                val = BigRational::zero();
            }
            if val <= fv {
                pick = Some(&g.edges()[epos].id);
                break; // out-edges are id-sorted: first attaining is lowest
            }
        }
        match pick {
            Some(id) => {
                choice.insert(g.vertices()[v].clone(), id.clone());
            }
            None => return Err(GameError::CertificationFailed),
        }
    }
    Ok(choice)
}

/// Checks a partition against its strategy certificates.
///
/// The Max strategy must offer a choice at every Max vertex reachable from
/// `V+` in its strategy subgraph and all cycles reachable there must have
/// sign `0`/`+`; symmetrically all cycles the Min strategy allows from the
/// complement must be negative. Absent strategies are an error rather than
/// a `false`, since nothing can be checked.
pub fn verify_partition(
    arena: &Arena,
    weights: &WeightFn,
    partition: &Partition,
    cycle_budget: usize,
) -> Result<bool, GameError> {
    let Some(sigma) = &partition.max_strategy else {
        return Err(GameError::MissingCertificate);
    };
    let Some(tau) = &partition.min_strategy else {
        return Err(GameError::MissingCertificate);
    };
    let v_minus: BTreeSet<VertexId> = arena
        .graph
        .vertices()
        .iter()
        .filter(|v| !partition.v_plus.contains(*v))
        .cloned()
        .collect();
    let good_plus = check_strategy_side(
        arena,
        weights,
        sigma,
        Player::Max,
        &partition.v_plus,
        &[Sign::Zero, Sign::Plus],
        cycle_budget,
    )?;
    if !good_plus {
        return Ok(false);
    }
    check_strategy_side(
        arena,
        weights,
        tau,
        Player::Min,
        &v_minus,
        &[Sign::Minus],
        cycle_budget,
    )
}

fn check_strategy_side(
    arena: &Arena,
    weights: &WeightFn,
    strat: &StrategySubgraph,
    player: Player,
    region: &BTreeSet<VertexId>,
    good: &[Sign],
    cycle_budget: usize,
) -> Result<bool, GameError> {
    if strat.player != player {
        return Ok(false);
    }
    for (v, e) in &strat.choice {
        if arena.graph.vertex_pos(v.as_str()).is_none() {
            return Ok(false);
        }
        let Some(edge) = arena.graph.edge(e.as_str()) else {
            return Ok(false);
        };
        if edge.src != *v || arena.owner_of(v) != player {
            return Ok(false);
        }
    }
    if region.is_empty() {
        return Ok(true);
    }
    // Strategy subgraph: the opponent keeps all options, `player` moves only
    // along chosen edges.
    let g = &arena.graph;
    let mut kept: BTreeSet<EdgeId> = BTreeSet::new();
    for e in g.edges() {
        if arena.owner_of(&e.src) != player {
            kept.insert(e.id.clone());
        }
    }
    for e in strat.choice.values() {
        kept.insert(e.clone());
    }
    let sub = g.edge_subgraph(&kept);
    let reach = reach_from_set(&sub, region);
    // Every `player` vertex the opponent can steer into must have a choice.
    for v in &reach {
        if arena.owner_of(v) == player && !strat.choice.contains_key(v) {
            return Ok(false);
        }
    }
    let reach_sub = sub.induced(&reach);
    for cycle in enumerate_cycles_budgeted(&reach_sub, cycle_budget)? {
        let mut total = BigRational::zero();
        for e in &cycle.edges {
            total += weight_of(weights, e)?;
        }
        if !good.contains(&Sign::of_rational(&total)) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Strategy enumeration (oracle)
// ---------------------------------------------------------------------------

struct StrategySpace {
    /// Player-owned vertex positions, id-sorted.
    vs: Vec<usize>,
    /// Out-edge positions per owned vertex, id-sorted.
    options: Vec<Vec<usize>>,
}

impl StrategySpace {
    fn new(layout: &Layout, player: Player) -> StrategySpace {
        let vs: Vec<usize> = layout
            .vorder
            .iter()
            .copied()
            .filter(|&v| layout.owner[v] == player)
            .collect();
        let options = vs
            .iter()
            .map(|&v| layout.out[v].iter().map(|&(e, _)| e).collect())
            .collect();
        StrategySpace { vs, options }
    }

    /// Visits every positional strategy in lexicographic order (vertices by
    /// id, edges by id) until the visitor says stop or the budget trips.
    fn for_each<F>(&self, budget: usize, mut visit: F) -> Result<(), GameError>
    where
        F: FnMut(&[usize]) -> Result<bool, GameError>, // true = keep going
    {
        let mut idx = vec![0usize; self.vs.len()];
        let mut count = 0usize;
        loop {
            if count >= budget {
                return Err(GameError::StrategyBudgetExceeded { budget });
            }
            count += 1;
            let chosen: Vec<usize> = idx
                .iter()
                .enumerate()
                .map(|(i, &k)| self.options[i][k])
                .collect();
            if !visit(&chosen)? {
                return Ok(());
            }
            // odometer
            let mut i = self.vs.len();
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < self.options[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }
}

/// The vertices from which every cycle reachable in the strategy subgraph
/// satisfies `good`.
fn covered_set(
    arena: &Arena,
    layout: &Layout,
    player: Player,
    chosen: &[usize],
    sign_of: &mut dyn FnMut(&Cycle) -> Result<Sign, GameError>,
    good: &[Sign],
    cycle_budget: usize,
) -> Result<BTreeSet<usize>, GameError> {
    let g = &arena.graph;
    let mut kept: BTreeSet<EdgeId> = BTreeSet::new();
    for e in g.edges() {
        let src = g.vertex_pos(e.src.as_str()).expect("validated");
        if layout.owner[src] != player {
            kept.insert(e.id.clone());
        }
    }
    for &epos in chosen {
        kept.insert(g.edges()[epos].id.clone());
    }
    let sub = g.edge_subgraph(&kept);
    let mut bad: BTreeSet<VertexId> = BTreeSet::new();
    for cycle in enumerate_cycles_budgeted(&sub, cycle_budget)? {
        if !good.contains(&sign_of(&cycle)?) {
            bad.extend(cycle.vertex_seq.iter().cloned());
        }
    }
    // covered = cannot reach any bad vertex in the strategy subgraph
    let tainted = reverse_reachable(&sub, &bad);
    Ok((0..g.vertex_count())
        .filter(|&v| !tainted.contains(&g.vertices()[v]))
        .collect())
}

fn reverse_reachable(graph: &Digraph, seeds: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let mut hit: BTreeSet<VertexId> = seeds.clone();
    let mut frontier: Vec<VertexId> = seeds.iter().cloned().collect();
    // predecessor lists
    let mut preds: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
    for e in graph.edges() {
        preds.entry(&e.dst).or_default().push(&e.src);
    }
    while let Some(v) = frontier.pop() {
        if let Some(ps) = preds.get(&v) {
            for &p in ps {
                if hit.insert(p.clone()) {
                    frontier.push(p.clone());
                }
            }
        }
    }
    hit
}

fn oracle_engine(
    arena: &Arena,
    sign_of: &mut dyn FnMut(&Cycle) -> Result<Sign, GameError>,
    cycle_budget: usize,
    strategy_budget: usize,
) -> Result<Partition, GameError> {
    let layout = Layout::new(arena);
    let g = &arena.graph;
    let good_plus = [Sign::Zero, Sign::Plus];
    let good_minus = [Sign::Minus];

    // Pass 1: V+ as the union over Max strategies of covered vertices.
    let max_space = StrategySpace::new(&layout, Player::Max);
    let mut v_plus_pos: BTreeSet<usize> = BTreeSet::new();
    max_space.for_each(strategy_budget, |chosen| {
        let c = covered_set(
            arena, &layout, Player::Max, chosen, sign_of, &good_plus, cycle_budget,
        )?;
        v_plus_pos.extend(c);
        Ok(true)
    })?;

    // Pass 2: first Max strategy covering all of V+, restricted to V+.
    let mut max_strategy: Option<StrategySubgraph> = None;
    max_space.for_each(strategy_budget, |chosen| {
        let c = covered_set(
            arena, &layout, Player::Max, chosen, sign_of, &good_plus, cycle_budget,
        )?;
        if c == v_plus_pos {
            let choice = max_space
                .vs
                .iter()
                .zip(chosen.iter())
                .filter(|(v, _)| v_plus_pos.contains(*v))
                .map(|(&v, &e)| (g.vertices()[v].clone(), g.edges()[e].id.clone()))
                .collect();
            max_strategy = Some(StrategySubgraph {
                player: Player::Max,
                choice,
            });
            return Ok(false);
        }
        Ok(true)
    })?;

    // Pass 3: first Min strategy forcing negativity on all of the complement.
    let v_minus_pos: BTreeSet<usize> = (0..g.vertex_count())
        .filter(|v| !v_plus_pos.contains(v))
        .collect();
    let min_space = StrategySpace::new(&layout, Player::Min);
    let mut min_strategy: Option<StrategySubgraph> = None;
    min_space.for_each(strategy_budget, |chosen| {
        let c = covered_set(
            arena, &layout, Player::Min, chosen, sign_of, &good_minus, cycle_budget,
        )?;
        if c.is_superset(&v_minus_pos) {
            let choice = min_space
                .vs
                .iter()
                .zip(chosen.iter())
                .filter(|(v, _)| v_minus_pos.contains(*v))
                .map(|(&v, &e)| (g.vertices()[v].clone(), g.edges()[e].id.clone()))
                .collect();
            min_strategy = Some(StrategySubgraph {
                player: Player::Min,
                choice,
            });
            return Ok(false);
        }
        Ok(true)
    })?;

    Ok(Partition {
        v_plus: v_plus_pos
            .iter()
            .map(|&v| g.vertices()[v].clone())
            .collect(),
        max_strategy,
        min_strategy,
    })
}

/// Solves by exhaustive positional-strategy enumeration over the weights.
pub fn solve_oracle(
    arena: &Arena,
    weights: &WeightFn,
    cycle_budget: usize,
) -> Result<Partition, GameError> {
    solve_oracle_with(arena, weights, cycle_budget, DEFAULT_STRATEGY_BUDGET)
}

/// [`solve_oracle`] with an explicit strategy budget.
pub fn solve_oracle_with(
    arena: &Arena,
    weights: &WeightFn,
    cycle_budget: usize,
    strategy_budget: usize,
) -> Result<Partition, GameError> {
    let mut sign_of = |c: &Cycle| -> Result<Sign, GameError> {
        let mut total = BigRational::zero();
        for e in &c.edges {
            total += weight_of(weights, e)?;
        }
        Ok(Sign::of_rational(&total))
    };
    oracle_engine(arena, &mut sign_of, cycle_budget, strategy_budget)
}

/// Solves from cycle signs alone (no weights anywhere).
///
/// One-player strongly connected arenas collapse to a single scan of the
/// cycle list: an all-Max arena is winning everywhere iff some cycle is
/// nonnegative (Max funnels play onto it), an all-Min arena is losing
/// everywhere iff some cycle is negative. Everything else enumerates.
pub fn solve_pattern_only(
    arena: &Arena,
    pattern: &CyclePattern,
    cycle_budget: usize,
) -> Result<Partition, GameError> {
    solve_pattern_only_with(arena, pattern, cycle_budget, DEFAULT_STRATEGY_BUDGET)
}

/// [`solve_pattern_only`] with an explicit strategy budget.
pub fn solve_pattern_only_with(
    arena: &Arena,
    pattern: &CyclePattern,
    cycle_budget: usize,
    strategy_budget: usize,
) -> Result<Partition, GameError> {
    let owners: BTreeSet<Player> = arena.owner.values().copied().collect();
    let strongly_connected = sccs(&arena.graph).len() == 1;
    if owners.len() == 1 && strongly_connected {
        let solo = *owners.iter().next().expect("nonempty");
        return one_player_shortcut(arena, pattern, solo, cycle_budget);
    }
    let mut sign_of =
        |c: &Cycle| -> Result<Sign, GameError> { pattern.sign_of(c).map_err(GameError::from) };
    oracle_engine(arena, &mut sign_of, cycle_budget, strategy_budget)
}

fn one_player_shortcut(
    arena: &Arena,
    pattern: &CyclePattern,
    solo: Player,
    cycle_budget: usize,
) -> Result<Partition, GameError> {
    let g = &arena.graph;
    let all: BTreeSet<VertexId> = g.vertices().iter().cloned().collect();
    let signed = pattern.signed_cycles(cycle_budget)?;
    let empty = || StrategySubgraph {
        player: Player::Max,
        choice: BTreeMap::new(),
    };
    let empty_min = || StrategySubgraph {
        player: Player::Min,
        choice: BTreeMap::new(),
    };
    match solo {
        Player::Max => {
            let target = signed.iter().find(|(_, s)| *s != Sign::Minus);
            match target {
                Some((cycle, _)) => Ok(Partition {
                    v_plus: all,
                    max_strategy: Some(StrategySubgraph {
                        player: Player::Max,
                        choice: funnel_choices(g, cycle),
                    }),
                    min_strategy: Some(empty_min()),
                }),
                None => Ok(Partition {
                    v_plus: BTreeSet::new(),
                    max_strategy: Some(empty()),
                    min_strategy: Some(empty_min()),
                }),
            }
        }
        Player::Min => {
            let target = signed.iter().find(|(_, s)| *s == Sign::Minus);
            match target {
                Some((cycle, _)) => Ok(Partition {
                    v_plus: BTreeSet::new(),
                    max_strategy: Some(empty()),
                    min_strategy: Some(StrategySubgraph {
                        player: Player::Min,
                        choice: funnel_choices(g, cycle),
                    }),
                }),
                None => Ok(Partition {
                    v_plus: all,
                    max_strategy: Some(empty()),
                    min_strategy: Some(empty_min()),
                }),
            }
        }
    }
}

/// A positional strategy steering every vertex onto the given cycle: cycle
/// vertices follow the cycle, others take the lowest-id edge on a shortest
/// path toward it.
fn funnel_choices(graph: &Digraph, cycle: &Cycle) -> BTreeMap<VertexId, EdgeId> {
    let mut choice: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    for (i, v) in cycle.vertex_seq.iter().enumerate() {
        choice.insert(v.clone(), cycle.order[i].clone());
    }
    // Distances toward the cycle via reverse BFS.
    let n = graph.vertex_count();
    let mut dist: Vec<Option<usize>> = vec![None; n];
    let mut frontier: Vec<usize> = Vec::new();
    for v in &cycle.vertex_seq {
        let p = graph.vertex_pos(v.as_str()).expect("cycle vertex");
        if dist[p].is_none() {
            dist[p] = Some(0);
            frontier.push(p);
        }
    }
    // reverse adjacency
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in graph.edges() {
        let s = graph.vertex_pos(e.src.as_str()).expect("validated");
        let d = graph.vertex_pos(e.dst.as_str()).expect("validated");
        preds[d].push(s);
    }
    let mut head = 0;
    while head < frontier.len() {
        let v = frontier[head];
        head += 1;
        for &p in &preds[v] {
            if dist[p].is_none() {
                dist[p] = Some(dist[v].expect("visited") + 1);
                frontier.push(p);
            }
        }
    }
    // lowest-id descending edge for every off-cycle vertex
    let mut edge_order: Vec<usize> = (0..graph.edge_count()).collect();
    edge_order.sort_by(|&a, &b| graph.edges()[a].id.cmp(&graph.edges()[b].id));
    for (vpos, v) in graph.vertices().iter().enumerate() {
        if choice.contains_key(v) {
            continue;
        }
        let Some(dv) = dist[vpos] else { continue };
        for &epos in &edge_order {
            let e = &graph.edges()[epos];
            if e.src != *v {
                continue;
            }
            let tpos = graph.vertex_pos(e.dst.as_str()).expect("validated");
            if dist[tpos].is_some_and(|dt| dt + 1 == dv) {
                choice.insert(v.clone(), e.id.clone());
                break;
            }
        }
    }
    choice
}

// ---------------------------------------------------------------------------
// SCC decomposition
// ---------------------------------------------------------------------------

/// Inner solver selection for [`solve_general`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InnerAlgo {
    /// Potential reduction.
    Gkk,
    /// Energy lifting.
    Energy,
    /// Strategy enumeration.
    Oracle {
        /// Cap on positional strategies per component.
        strategy_budget: usize,
    },
}

/// Solves by repeatedly resolving a bottom strongly connected component and
/// removing the attractors of both winning regions.
///
/// A bottom component of what remains is closed, so the inner solve is
/// exact there. The Max attractor of its `V+` joins the global `V+` (with
/// lowest-id attractor edges recorded the round each vertex joins), then
/// the Min attractor of its `V-` joins the complement. Removal order makes
/// the stitched strategies globally sound: a surviving Min vertex never has
/// an edge into a removed Min attractor (it would have been absorbed), so
/// departures from a Max region only ever reach earlier Max regions, where
/// the recorded strategies already win — and symmetrically for Min.
pub fn solve_general(
    arena: &Arena,
    weights: &WeightFn,
    inner: InnerAlgo,
    cycle_budget: usize,
) -> Result<Partition, GameError> {
    let mut remaining: BTreeSet<VertexId> = arena.graph.vertices().iter().cloned().collect();
    let mut v_plus: BTreeSet<VertexId> = BTreeSet::new();
    let mut sigma: BTreeMap<VertexId, EdgeId> = BTreeMap::new();
    let mut tau: BTreeMap<VertexId, EdgeId> = BTreeMap::new();

    while !remaining.is_empty() {
        let sub = arena.induced(&remaining)?;
        let comps = sccs(&sub.graph);
        let bottom: BTreeSet<VertexId> = comps[0].iter().cloned().collect();
        let scc_arena = sub.induced(&bottom)?;
        let part = match inner {
            InnerAlgo::Gkk => {
                let vp = gkk_core(&scc_arena, weights, &PlainScalar::default())?;
                let (s, t) = certify_partition(&scc_arena, weights, &vp)?;
                Partition {
                    v_plus: vp,
                    max_strategy: Some(s),
                    min_strategy: Some(t),
                }
            }
            InnerAlgo::Energy => solve_energy(&scc_arena, weights)?,
            InnerAlgo::Oracle { strategy_budget } => {
                solve_oracle_with(&scc_arena, weights, cycle_budget, strategy_budget)?
            }
        };
        let scc_plus = part.v_plus.clone();
        let scc_minus: BTreeSet<VertexId> = bottom
            .iter()
            .filter(|v| !scc_plus.contains(*v))
            .cloned()
            .collect();
        if let Some(s) = part.max_strategy {
            sigma.extend(s.choice);
        }
        if let Some(t) = part.min_strategy {
            tau.extend(t.choice);
        }

        if !scc_plus.is_empty() {
            let (aplus, moves) = attractor_with_moves(&sub, &scc_plus, Player::Max);
            sigma.extend(moves);
            v_plus.extend(aplus.iter().cloned());
            for v in &aplus {
                remaining.remove(v);
            }
        }
        if !scc_minus.is_empty() {
            let still: BTreeSet<VertexId> = scc_minus
                .iter()
                .filter(|v| remaining.contains(*v))
                .cloned()
                .collect();
            if !still.is_empty() {
                let sub2 = arena.induced(&remaining)?;
                let (aminus, moves) = attractor_with_moves(&sub2, &still, Player::Min);
                tau.extend(moves);
                for v in &aminus {
                    remaining.remove(v);
                }
            }
        }
    }

    // Strategies extend beyond their regions only by stitching bookkeeping;
    // trim to the certified domains.
    sigma.retain(|v, _| v_plus.contains(v) && arena.owner_of(v) == Player::Max);
    tau.retain(|v, _| !v_plus.contains(v) && arena.owner_of(v) == Player::Min);
    Ok(Partition {
        v_plus,
        max_strategy: Some(StrategySubgraph {
            player: Player::Max,
            choice: sigma,
        }),
        min_strategy: Some(StrategySubgraph {
            player: Player::Min,
            choice: tau,
        }),
    })
}

/// Solves a parity-priority game by the sign-preserving weight translation
/// `w(e) = (-n)^{p(e)}` and the general solver.
pub fn solve_parity_game(
    arena: &Arena,
    priorities: &PriorityFn,
    inner: InnerAlgo,
    cycle_budget: usize,
) -> Result<Partition, GameError> {
    let weights = parity_to_weights(&arena.graph, priorities)?;
    solve_general(arena, &weights, inner, cycle_budget)
}

/// Attractor computation in synchronous rounds, recording for each newly
/// attracted `player` vertex the lowest-id edge into the previous round's
/// set. Round indices strictly decrease along recorded moves, so they can
/// never close a cycle among attractor-only vertices.
fn attractor_with_moves(
    arena: &Arena,
    target: &BTreeSet<VertexId>,
    player: Player,
) -> (BTreeSet<VertexId>, BTreeMap<VertexId, EdgeId>) {
    let g = &arena.graph;
    let mut set = target.clone();
    let mut moves = BTreeMap::new();
    loop {
        let mut added: Vec<(VertexId, Option<EdgeId>)> = Vec::new();
        for v in g.vertices() {
            if set.contains(v) {
                continue;
            }
            let outs = g.out_edges_of(v.as_str());
            if arena.owner_of(v) == player {
                let mut into: Vec<&EdgeId> = outs
                    .iter()
                    .filter(|e| set.contains(&e.dst))
                    .map(|e| &e.id)
                    .collect();
                into.sort();
                if let Some(&first) = into.first() {
                    added.push((v.clone(), Some(first.clone())));
                }
            } else if !outs.is_empty() && outs.iter().all(|e| set.contains(&e.dst)) {
                added.push((v.clone(), None));
            }
        }
        if added.is_empty() {
            return (set, moves);
        }
        for (v, mv) in added {
            if let Some(e) = mv {
                moves.insert(v.clone(), e);
            }
            set.insert(v);
        }
    }
}

// ---------------------------------------------------------------------------
// Star centers
// ---------------------------------------------------------------------------

/// The canonical interior point of the weight vectors realizing partition
/// `u`: `+1` on edges leaving `u`, `-1` elsewhere.
pub fn star_center(arena: &Arena, u: &BTreeSet<VertexId>) -> WeightFn {
    arena
        .graph
        .edges()
        .iter()
        .map(|e| {
            let w = if u.contains(&e.src) {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            (e.id.clone(), w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{weights_from_i64, DEFAULT_CYCLE_BUDGET};

    /// Three vertices: `a` (Max), `b`, `c` (Min); the self-loop at `c`
    /// decides the whole partition regardless of the `a<->b` cycle weight.
    fn funnel_arena() -> Arena {
        Arena::build(
            &["a", "b", "c"],
            &["a"],
            &[
                ("ab", "a", "b"),
                ("ba", "b", "a"),
                ("ac", "a", "c"),
                ("bc", "b", "c"),
                ("cc", "c", "c"),
            ],
        )
        .unwrap()
    }

    fn loop_weights(loop_w: i64, ab_cycle_w: i64) -> WeightFn {
        weights_from_i64([
            ("ab", ab_cycle_w),
            ("ba", 0),
            ("ac", 0),
            ("bc", 0),
            ("cc", loop_w),
        ])
    }

    fn all_vertices(arena: &Arena) -> BTreeSet<VertexId> {
        arena.graph.vertices().iter().cloned().collect()
    }

    #[test]
    fn loop_sign_decides_funnel_arena() {
        let arena = funnel_arena();
        for ab in [-7, 0, 9] {
            let wp = loop_weights(1, ab);
            let wm = loop_weights(-1, ab);
            for (w, expect_all) in [(&wp, true), (&wm, false)] {
                let expected = if expect_all {
                    all_vertices(&arena)
                } else {
                    BTreeSet::new()
                };
                for part in [
                    solve_oracle(&arena, w, DEFAULT_CYCLE_BUDGET).unwrap(),
                    solve_gkk(&arena, w).unwrap(),
                    solve_energy(&arena, w).unwrap(),
                    solve_energy_by_sweeps(&arena, w).unwrap(),
                    solve_general(&arena, w, InnerAlgo::Gkk, DEFAULT_CYCLE_BUDGET).unwrap(),
                    solve_general(&arena, w, InnerAlgo::Energy, DEFAULT_CYCLE_BUDGET).unwrap(),
                ] {
                    assert_eq!(part.v_plus, expected, "ab={ab} loop sign mismatch");
                    assert!(
                        verify_partition(&arena, w, &part, DEFAULT_CYCLE_BUDGET).unwrap(),
                        "certificate rejected for ab={ab}"
                    );
                }
            }
        }
    }

    #[test]
    fn digon_contest_goes_to_the_cycle_sign() {
        let arena = Arena::build(
            &["u", "v"],
            &["u"],
            &[("uv", "u", "v"), ("vu", "v", "u")],
        )
        .unwrap();
        let w = weights_from_i64([("uv", 3), ("vu", -2)]);
        let part = solve_gkk(&arena, &w).unwrap();
        assert_eq!(part.v_plus, all_vertices(&arena));
        let w2 = weights_from_i64([("uv", 1), ("vu", -2)]);
        let part2 = solve_gkk(&arena, &w2).unwrap();
        assert!(part2.v_plus.is_empty());
        let w3 = weights_from_i64([("uv", 2), ("vu", -2)]);
        let part3 = solve_gkk(&arena, &w3).unwrap();
        assert_eq!(part3.v_plus, all_vertices(&arena), "zero cycles favour Max");
    }

    #[test]
    fn energy_queue_and_sweeps_agree() {
        let arena = funnel_arena();
        for (lw, ab) in [(1, -3), (-1, 5), (2, 0), (-4, -4)] {
            let w = loop_weights(lw, ab);
            let a = solve_energy(&arena, &w).unwrap();
            let b = solve_energy_by_sweeps(&arena, &w).unwrap();
            assert_eq!(a.v_plus, b.v_plus);
        }
    }

    #[test]
    fn tampered_partition_fails_verification() {
        let arena = funnel_arena();
        let w = loop_weights(1, 2);
        let part = solve_gkk(&arena, &w).unwrap();
        let mut doctored = part.clone();
        doctored.v_plus.remove(&VertexId::from("c"));
        assert!(!verify_partition(&arena, &w, &doctored, DEFAULT_CYCLE_BUDGET).unwrap());
        let stripped = Partition {
            v_plus: part.v_plus.clone(),
            max_strategy: None,
            min_strategy: part.min_strategy.clone(),
        };
        assert!(matches!(
            verify_partition(&arena, &w, &stripped, DEFAULT_CYCLE_BUDGET),
            Err(GameError::MissingCertificate)
        ));
    }

    #[test]
    fn pattern_only_matches_weight_solvers() {
        let arena = funnel_arena();
        let w = loop_weights(-1, 6);
        let pattern = CyclePattern::from_weights(arena.graph.clone(), w.clone());
        let by_pattern = solve_pattern_only(&arena, &pattern, DEFAULT_CYCLE_BUDGET).unwrap();
        let by_weights = solve_oracle(&arena, &w, DEFAULT_CYCLE_BUDGET).unwrap();
        assert_eq!(by_pattern.v_plus, by_weights.v_plus);
    }

    #[test]
    fn one_player_shortcuts_cover_both_owners() {
        // strongly connected all-Max ring with one chord making a + cycle
        let max_ring = Arena::build(
            &["x", "y"],
            &["x", "y"],
            &[("xy", "x", "y"), ("yx", "y", "x"), ("yy", "y", "y")],
        )
        .unwrap();
        let w = weights_from_i64([("xy", -1), ("yx", -1), ("yy", 4)]);
        let pattern = CyclePattern::from_weights(max_ring.graph.clone(), w.clone());
        let part = solve_pattern_only(&max_ring, &pattern, DEFAULT_CYCLE_BUDGET).unwrap();
        assert_eq!(part.v_plus, all_vertices(&max_ring));
        assert!(verify_partition(&max_ring, &w, &part, DEFAULT_CYCLE_BUDGET).unwrap());

        let min_ring = Arena::build(
            &["x", "y"],
            &[],
            &[("xy", "x", "y"), ("yx", "y", "x"), ("yy", "y", "y")],
        )
        .unwrap();
        let part2 = solve_pattern_only(&min_ring, &pattern, DEFAULT_CYCLE_BUDGET).unwrap();
        assert!(part2.v_plus.is_empty());
        assert!(verify_partition(&min_ring, &w, &part2, DEFAULT_CYCLE_BUDGET).unwrap());
    }

    #[test]
    fn strategy_budget_trips() {
        let arena = funnel_arena();
        let w = loop_weights(1, 1);
        assert!(matches!(
            solve_oracle_with(&arena, &w, DEFAULT_CYCLE_BUDGET, 1),
            Err(GameError::StrategyBudgetExceeded { budget: 1 })
        ));
    }

    #[test]
    fn star_center_weights_by_source_membership() {
        let arena = funnel_arena();
        let mut u = BTreeSet::new();
        u.insert(VertexId::from("a"));
        u.insert(VertexId::from("c"));
        let z = star_center(&arena, &u);
        assert_eq!(z[&EdgeId::from("ab")], BigRational::one());
        assert_eq!(z[&EdgeId::from("ac")], BigRational::one());
        assert_eq!(z[&EdgeId::from("cc")], BigRational::one());
        assert_eq!(z[&EdgeId::from("ba")], -BigRational::one());
        assert_eq!(z[&EdgeId::from("bc")], -BigRational::one());
    }

    #[test]
    fn parity_game_follows_top_priority() {
        // digon where the dominant priority is odd: Min wins everywhere
        let arena = Arena::build(
            &["u", "v"],
            &["u"],
            &[("uv", "u", "v"), ("vu", "v", "u")],
        )
        .unwrap();
        let mut pr = PriorityFn::new();
        pr.insert(EdgeId::from("uv"), 3);
        pr.insert(EdgeId::from("vu"), 2);
        let part = solve_parity_game(&arena, &pr, InnerAlgo::Gkk, DEFAULT_CYCLE_BUDGET).unwrap();
        assert!(part.v_plus.is_empty());
        pr.insert(EdgeId::from("uv"), 4);
        let part2 = solve_parity_game(&arena, &pr, InnerAlgo::Energy, DEFAULT_CYCLE_BUDGET).unwrap();
        assert_eq!(part2.v_plus, all_vertices(&arena));
    }
}
