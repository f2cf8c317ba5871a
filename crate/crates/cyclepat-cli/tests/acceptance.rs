//! The eleven acceptance checks. Each prints one PASS/FAIL line; the run
//! exits nonzero if any check fails or overruns its time budget. The target
//! opts out of the test harness so the lines always reach the console.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use cyclepat::extended::{
    ext_negative_cycle, ext_shortest_walk, oracle_from_weights, ExtendedError,
};
use cyclepat::families::{gen_gi, gen_reduction_arenas, reduction_weights};
use cyclepat::games::{
    solve_energy, solve_gkk, solve_oracle, solve_pattern_only, star_center, verify_partition,
};
use cyclepat::graph::{
    cycle_space_rank, enumerate_cycles_budgeted, Arena, Cycle, Digraph, EdgeId, VertexId, WeightFn,
};
use cyclepat::parity::{
    check_parity_realizable, parity_to_weights, verify_mixed_set, ParityRealizability,
};
use cyclepat::pattern::{zero_weight_cycle, CyclePattern, Sign};
use cyclepat::probe::boundary_probe;
use cyclepat::realize::{
    check_realizable, minimal_linf, minimal_witness, verify_witness, Realizability,
};
use cyclepat_cli::rng::{
    random_digraph, random_priorities, random_strongly_connected, random_weights, rng_from_seed,
};

const BUDGET: usize = 1_000_000;

type Check = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, u64, Check); 11] = [
        ("minimal witness on the four-cycle example", 1, c01),
        ("max-weight bound on random realizable patterns", 120, c02),
        ("fibonacci gaps in minimal realizations", 1800, c03),
        ("weight-realizable but parity-mixed complete graph", 1, c04),
        ("parity round trip through peeling and weights", 120, c05),
        ("cross-solver agreement with verified certificates", 600, c06),
        ("no single weight vector preserves all six arenas", 300, c07),
        ("star-convexity of the realization region", 300, c08),
        ("boundary probes separate the two perturbations", 120, c09),
        ("comparison-only shortest walks match numeric ones", 120, c10),
        ("cycle space rank on strongly connected multigraphs", 60, c11),
    ];
    let mut failures = Vec::new();
    for (idx, (name, budget_secs, check)) in criteria.into_iter().enumerate() {
        let number = idx + 1;
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| String::from(*s))
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| String::from("panicked"));
            Err(format!("panic: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and(if elapsed > Duration::from_secs(budget_secs) {
            Err(format!("overran the {budget_secs}s budget"))
        } else {
            Ok(())
        });
        match outcome {
            Ok(()) => println!("PASS {number:2}. {name} ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                println!(
                    "FAIL {number:2}. {name} ({:.2}s): {msg}",
                    elapsed.as_secs_f64()
                );
                failures.push(format!("{number}. {name}: {msg}"));
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("acceptance criteria failed:\n{}", failures.join("\n"));
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn err<E: core::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn four_cycle_example() -> CyclePattern {
    let graph = Digraph::build(
        &["v1", "v2", "v3", "v4"],
        &[
            ("f1", "v1", "v4"),
            ("f2", "v4", "v1"),
            ("f3", "v1", "v3"),
            ("f4", "v3", "v4"),
            ("f5", "v4", "v2"),
            ("f6", "v2", "v1"),
        ],
    );
    let mut table: BTreeMap<Vec<EdgeId>, Sign> = BTreeMap::new();
    for (ids, sign) in [
        (vec!["f1", "f2"], Sign::Plus),
        (vec!["f3", "f4", "f5", "f6"], Sign::Plus),
        (vec!["f1", "f5", "f6"], Sign::Minus),
        (vec!["f2", "f3", "f4"], Sign::Minus),
    ] {
        let ids: Vec<EdgeId> = ids.into_iter().map(EdgeId::from).collect();
        let cycle = Cycle::from_edge_ids(&graph, &ids).expect("known cycles");
        table.insert(cycle.edges.clone(), sign);
    }
    CyclePattern::explicit(graph, table)
}

fn complete_four_graph() -> (Digraph, WeightFn) {
    let names = ["v1", "v2", "v3", "v4"];
    let mut edges: Vec<(String, &str, &str)> = Vec::new();
    for s in names {
        for d in names {
            if s != d {
                edges.push((format!("{s}{d}"), s, d));
            }
        }
    }
    let borrowed: Vec<(&str, &str, &str)> =
        edges.iter().map(|(i, s, d)| (i.as_str(), *s, *d)).collect();
    let graph = Digraph::build(&names, &borrowed);
    let paired = |a: &str, b: &str| (a == "v1" || a == "v2") == (b == "v1" || b == "v2");
    let weights = graph
        .edges()
        .iter()
        .map(|e| {
            let w = if paired(e.src.as_str(), e.dst.as_str()) {
                3
            } else {
                -2
            };
            (e.id.clone(), BigRational::from_integer(BigInt::from(w)))
        })
        .collect();
    (graph, weights)
}

fn random_owned_arena(
    rng: &mut rand_chacha::ChaCha8Rng,
    n: usize,
    extra: usize,
    wmax: i64,
) -> (Arena, WeightFn) {
    let graph = random_strongly_connected(rng, n, extra);
    let owner: BTreeMap<VertexId, cyclepat::graph::Player> = graph
        .vertices()
        .iter()
        .map(|v| {
            (
                v.clone(),
                if rng.gen_bool(0.5) {
                    cyclepat::graph::Player::Max
                } else {
                    cyclepat::graph::Player::Min
                },
            )
        })
        .collect();
    let weights = random_weights(rng, &graph, wmax);
    (Arena::new(graph, owner).expect("ring arenas are valid"), weights)
}

fn patterns_equal(a: &CyclePattern, b: &CyclePattern) -> Result<bool, String> {
    Ok(a.signed_cycles(BUDGET).map_err(err)? == b.signed_cycles(BUDGET).map_err(err)?)
}

fn integer_weight(w: &BigRational) -> Result<BigInt, String> {
    if w.is_integer() {
        Ok(w.to_integer())
    } else {
        Err(format!("realization weight {w} is not integral"))
    }
}

/// Fibonacci numbers with `F_1 = F_2 = 1`.
fn fib(k: usize) -> BigInt {
    assert!(k >= 1);
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 2..k {
        let c = &a + &b;
        a = b;
        b = c;
    }
    b
}

fn cycle_weight(w: &WeightFn, cycle: &Cycle) -> BigRational {
    cycle.edges.iter().map(|e| w[e].clone()).sum()
}

// ---------------------------------------------------------------------------
// 1. Minimal witness on the four-cycle example
// ---------------------------------------------------------------------------

fn c01() -> Result<(), String> {
    let pattern = four_cycle_example();
    match check_realizable(&pattern, BUDGET).map_err(err)? {
        Realizability::Realizable { .. } => {
            return Err(String::from("the pattern must not be realizable"))
        }
        Realizability::NotRealizable { witness } => {
            if !verify_witness(&pattern, &witness, BUDGET).map_err(err)? {
                return Err(String::from("returned witness does not verify"));
            }
        }
    }
    let minimal = minimal_witness(&pattern, BUDGET).map_err(err)?;
    if minimal.total_multiplicity() != BigInt::from(4) {
        return Err(format!(
            "minimal witness multiplicity is {}, expected 4",
            minimal.total_multiplicity()
        ));
    }
    if !verify_witness(&pattern, &minimal, BUDGET).map_err(err)? {
        return Err(String::from("minimal witness does not verify"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 2. Max-weight bound on random realizable patterns
// ---------------------------------------------------------------------------

fn c02() -> Result<(), String> {
    let mut rng = rng_from_seed(0xC2);
    for inst in 0..100usize {
        let n = 2 + inst % 5;
        let graph = random_strongly_connected(&mut rng, n, inst % 4);
        let m = graph.edge_count();
        let weights = random_weights(&mut rng, &graph, 5);
        let pattern = CyclePattern::from_weights(graph.clone(), weights);
        let returned = match check_realizable(&pattern, BUDGET).map_err(err)? {
            Realizability::Realizable { weights } => weights,
            Realizability::NotRealizable { .. } => {
                return Err(format!("instance {inst}: induced pattern deemed unrealizable"))
            }
        };
        let mut max_abs = BigInt::zero();
        for w in returned.values() {
            let a = integer_weight(w)?.abs();
            if a > max_abs {
                max_abs = a;
            }
        }
        // compare squared so the (n+1)^{(m-n+1)/2} bound stays integral
        let bound_sq = num_traits::pow(BigInt::from(n + 1), m - n + 1);
        if &max_abs * &max_abs > bound_sq {
            return Err(format!(
                "instance {inst}: max |w| = {max_abs} beats (n+1)^((m-n+1)/2) with n={n}, m={m}"
            ));
        }
        let induced = CyclePattern::from_weights(graph, returned);
        if !patterns_equal(&induced, &pattern)? {
            return Err(format!("instance {inst}: realization induces a different pattern"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 3. Fibonacci gaps in minimal realizations
// ---------------------------------------------------------------------------

fn c03() -> Result<(), String> {
    let mut k_star = Vec::new();
    for i in [1usize, 2] {
        let (graph, priorities) = gen_gi(i);
        let pattern = CyclePattern::from_priorities(graph, priorities);
        let minimal = minimal_linf(&pattern, BUDGET).map_err(err)?;
        for j in 4..=4 * i {
            let hi = integer_weight(&minimal.weights[&EdgeId::from(format!("e{}", 2 * j).as_str())])?;
            let lo =
                integer_weight(&minimal.weights[&EdgeId::from(format!("e{}", 2 * j - 1).as_str())])?;
            let gap = &hi - &lo;
            let floor = fib(j - 3);
            if gap <= floor {
                return Err(format!(
                    "family {i}: w_{} - w_{} = {gap} is not above F_{} = {floor}",
                    2 * j,
                    2 * j - 1,
                    j - 3
                ));
            }
        }
        k_star.push(minimal.max_abs);
    }
    if k_star[1] <= k_star[0] {
        return Err(format!(
            "minimal max-weights must grow: k*(G2) = {} vs k*(G1) = {}",
            k_star[1], k_star[0]
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 4. Weight-realizable but parity-mixed complete graph
// ---------------------------------------------------------------------------

fn c04() -> Result<(), String> {
    let (graph, weights) = complete_four_graph();
    let all_edges: BTreeSet<EdgeId> = graph.edges().iter().map(|e| e.id.clone()).collect();
    let pattern = CyclePattern::from_weights(graph, weights);
    match check_realizable(&pattern, BUDGET).map_err(err)? {
        Realizability::Realizable { .. } => (),
        Realizability::NotRealizable { .. } => {
            return Err(String::from("weighted pattern must be realizable"))
        }
    }
    match check_parity_realizable(&pattern, BUDGET).map_err(err)? {
        ParityRealizability::Realizable { .. } => {
            Err(String::from("pattern must not be parity-realizable"))
        }
        ParityRealizability::NotRealizable { mixed } => {
            if mixed != all_edges {
                return Err(format!(
                    "mixed set has {} edges, expected all {}",
                    mixed.len(),
                    all_edges.len()
                ));
            }
            if !verify_mixed_set(&pattern, &mixed, BUDGET).map_err(err)? {
                return Err(String::from("mixed set does not verify"));
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// 5. Parity round trip through peeling and weights
// ---------------------------------------------------------------------------

fn c05() -> Result<(), String> {
    let mut rng = rng_from_seed(0xC5);
    for inst in 0..100usize {
        let n = 2 + inst % 5;
        let graph = random_strongly_connected(&mut rng, n, inst % 4);
        let priorities = random_priorities(&mut rng, &graph, 6);
        let pattern = CyclePattern::from_priorities(graph.clone(), priorities);
        let peeled = match check_parity_realizable(&pattern, BUDGET).map_err(err)? {
            ParityRealizability::Realizable { priorities } => priorities,
            ParityRealizability::NotRealizable { .. } => {
                return Err(format!("instance {inst}: parity-induced pattern rejected"))
            }
        };
        let reinduced = CyclePattern::from_priorities(graph.clone(), peeled.clone());
        if !patterns_equal(&reinduced, &pattern)? {
            return Err(format!("instance {inst}: peeled priorities induce a different pattern"));
        }
        let weights = parity_to_weights(&graph, &peeled).map_err(err)?;
        let weighted = CyclePattern::from_weights(graph, weights);
        if !patterns_equal(&weighted, &pattern)? {
            return Err(format!("instance {inst}: derived weights induce a different pattern"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 6. Cross-solver agreement with verified certificates
// ---------------------------------------------------------------------------

fn c06() -> Result<(), String> {
    let mut rng = rng_from_seed(0xC6);
    for inst in 0..200usize {
        let n = 1 + inst % 5;
        let (arena, weights) = random_owned_arena(&mut rng, n, inst % 5, 4);
        let by_oracle = solve_oracle(&arena, &weights, BUDGET).map_err(err)?;
        let by_gkk = solve_gkk(&arena, &weights).map_err(err)?;
        let by_energy = solve_energy(&arena, &weights).map_err(err)?;
        let pattern = CyclePattern::from_weights(arena.graph.clone(), weights.clone());
        let by_pattern = solve_pattern_only(&arena, &pattern, BUDGET).map_err(err)?;
        for (label, part) in [
            ("oracle", &by_oracle),
            ("energy", &by_energy),
            ("pattern-only", &by_pattern),
        ] {
            if part.v_plus != by_gkk.v_plus {
                return Err(format!(
                    "instance {inst}: {label} disagrees with the zero-mean partition"
                ));
            }
        }
        if !verify_partition(&arena, &weights, &by_gkk, BUDGET).map_err(err)? {
            return Err(format!("instance {inst}: certificate fails verification"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 7. No single weight vector preserves all six arenas
// ---------------------------------------------------------------------------

fn c07() -> Result<(), String> {
    let m = 6usize;
    let arenas = gen_reduction_arenas(m);
    let shared = reduction_weights(m);
    let restrict = |arena: &Arena, full: &WeightFn| -> WeightFn {
        arena
            .graph
            .edges()
            .iter()
            .map(|e| (e.id.clone(), full[&e.id].clone()))
            .collect()
    };
    let mut base = Vec::new();
    for arena in &arenas {
        base.push(solve_gkk(arena, &restrict(arena, &shared)).map_err(err)?.v_plus);
    }
    let mut digits = vec![0u8; m];
    let mut preserving = 0usize;
    'vectors: loop {
        let candidate: WeightFn = (1..=m)
            .map(|j| {
                (
                    EdgeId::from(format!("e{j}").as_str()),
                    BigRational::from_integer(BigInt::from(i64::from(digits[j - 1]) - 1)),
                )
            })
            .collect();
        let mut all = true;
        for (arena, base_vp) in arenas.iter().zip(&base) {
            let part = solve_gkk(arena, &restrict(arena, &candidate)).map_err(err)?;
            if &part.v_plus != base_vp {
                all = false;
                break;
            }
        }
        if all {
            preserving += 1;
        }
        let mut place = 0;
        loop {
            if place == m {
                break 'vectors;
            }
            digits[place] += 1;
            if digits[place] == 3 {
                digits[place] = 0;
                place += 1;
            } else {
                break;
            }
        }
    }
    if preserving != 0 {
        return Err(format!(
            "{preserving} of 3^{m} unit-bounded vectors preserve every partition"
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 8. Star-convexity of the realization region
// ---------------------------------------------------------------------------

fn c08() -> Result<(), String> {
    let mut rng = rng_from_seed(0xC8);
    for inst in 0..50usize {
        let n = 1 + inst % 5;
        let (arena, weights) = random_owned_arena(&mut rng, n, inst % 4, 4);
        let base = solve_gkk(&arena, &weights).map_err(err)?;
        let center = star_center(&arena, &base.v_plus);
        let at_center = solve_gkk(&arena, &center).map_err(err)?;
        if at_center.v_plus != base.v_plus {
            return Err(format!("instance {inst}: the center solves differently"));
        }
        for k in 1..=3u32 {
            let lambda = BigRational::new(BigInt::from(k), BigInt::from(4));
            let complement = BigRational::one() - lambda.clone();
            let sample: WeightFn = arena
                .graph
                .edges()
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        &complement * &center[&e.id] + &lambda * &weights[&e.id],
                    )
                })
                .collect();
            let at_sample = solve_gkk(&arena, &sample).map_err(err)?;
            if at_sample.v_plus != base.v_plus {
                return Err(format!(
                    "instance {inst}: segment point {k}/4 solves differently"
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 9. Boundary probes separate the two perturbations
// ---------------------------------------------------------------------------

fn c09() -> Result<(), String> {
    let mut rng = rng_from_seed(0xC9);
    let eps = BigRational::new(BigInt::from(1), BigInt::from(4));
    for inst in 0..20usize {
        let n = 2 + inst % 4;
        let (arena, _) = random_owned_arena(&mut rng, n, 1 + inst % 3, 3);
        let cycles = enumerate_cycles_budgeted(&arena.graph, BUDGET).map_err(err)?;
        let cycle = &cycles[rng.gen_range(0..cycles.len())];
        let (_, part_plus, part_minus) = boundary_probe(&arena, cycle, &eps).map_err(err)?;
        if part_plus.v_plus.len() != arena.graph.vertex_count() {
            return Err(format!(
                "instance {inst}: positive perturbation leaves vertices outside V+"
            ));
        }
        if part_minus.v_plus == part_plus.v_plus {
            return Err(format!("instance {inst}: perturbations do not separate"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 10. Comparison-only shortest walks match numeric ones
// ---------------------------------------------------------------------------

fn reach_positions(graph: &Digraph, start: usize, forward: bool) -> BTreeSet<usize> {
    let pos = |v: &VertexId| graph.vertex_pos(v.as_str()).expect("endpoint exists");
    let mut seen = BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for e in graph.edges() {
            let (from, to) = if forward {
                (pos(&e.src), pos(&e.dst))
            } else {
                (pos(&e.dst), pos(&e.src))
            };
            if from == v && seen.insert(to) {
                queue.push(to);
            }
        }
    }
    seen
}

/// Textbook relaxation over the `reach(s) ∩ co-reach(t)` region.
/// `Err(())` reports a negative cycle lying on some s-to-t walk.
fn numeric_shortest_walk(
    graph: &Digraph,
    weights: &WeightFn,
    s: &VertexId,
    t: &VertexId,
) -> Result<Option<BigRational>, ()> {
    let sp = graph.vertex_pos(s.as_str()).expect("source exists");
    let tp = graph.vertex_pos(t.as_str()).expect("target exists");
    let forward = reach_positions(graph, sp, true);
    let backward = reach_positions(graph, tp, false);
    let region: BTreeSet<usize> = forward.intersection(&backward).copied().collect();
    if !region.contains(&tp) || !region.contains(&sp) {
        return Ok(None);
    }
    let pos = |v: &VertexId| graph.vertex_pos(v.as_str()).expect("endpoint exists");
    let mut dist: BTreeMap<usize, BigRational> = BTreeMap::new();
    dist.insert(sp, BigRational::zero());
    let relax_all = |dist: &mut BTreeMap<usize, BigRational>| -> bool {
        let mut changed = false;
        for e in graph.edges() {
            let (a, b) = (pos(&e.src), pos(&e.dst));
            if !region.contains(&a) || !region.contains(&b) {
                continue;
            }
            let Some(da) = dist.get(&a).cloned() else {
                continue;
            };
            let cand = da + &weights[&e.id];
            if dist.get(&b).is_none_or(|db| &cand < db) {
                dist.insert(b, cand);
                changed = true;
            }
        }
        changed
    };
    for _ in 1..region.len() {
        if !relax_all(&mut dist) {
            break;
        }
    }
    if relax_all(&mut dist) {
        return Err(());
    }
    Ok(Some(dist[&tp].clone()))
}

fn c10() -> Result<(), String> {
    let mut rng = rng_from_seed(0xCA);
    for inst in 0..100usize {
        // rejection-sample until no cycle weighs exactly zero
        let (graph, weights) = loop {
            let n = 2 + inst % 5;
            let graph = random_digraph(&mut rng, n, n + 1 + inst % 5);
            let weights = random_weights(&mut rng, &graph, 4);
            if zero_weight_cycle(&graph, &weights, BUDGET)
                .map_err(err)?
                .is_none()
            {
                break (graph, weights);
            }
        };
        let oracle = oracle_from_weights(graph.clone(), weights.clone());
        let cycles = enumerate_cycles_budgeted(&graph, BUDGET).map_err(err)?;

        let found = ext_negative_cycle(&graph, &oracle).map_err(err)?;
        let exists = cycles
            .iter()
            .any(|c| cycle_weight(&weights, c) < BigRational::zero());
        match &found {
            Some(c) if cycle_weight(&weights, c) >= BigRational::zero() => {
                return Err(format!("instance {inst}: reported cycle is not negative"));
            }
            Some(_) if !exists => {
                return Err(format!("instance {inst}: cycle reported but none exists"));
            }
            None if exists => {
                return Err(format!("instance {inst}: negative cycle missed"));
            }
            _ => (),
        }

        let vertices = graph.vertices().to_vec();
        let edge_ends: BTreeMap<EdgeId, (VertexId, VertexId)> = graph
            .edges()
            .iter()
            .map(|e| (e.id.clone(), (e.src.clone(), e.dst.clone())))
            .collect();
        for _ in 0..3 {
            let s = &vertices[rng.gen_range(0..vertices.len())];
            let t = &vertices[rng.gen_range(0..vertices.len())];
            if s == t {
                // closed walks can detour through any negative cycle in the
                // strongly connected component of s
                let sp = graph.vertex_pos(s.as_str()).expect("source exists");
                let scc: BTreeSet<usize> = reach_positions(&graph, sp, true)
                    .intersection(&reach_positions(&graph, sp, false))
                    .copied()
                    .collect();
                let reachable = cycles.iter().any(|c| {
                    cycle_weight(&weights, c) < BigRational::zero()
                        && c.vertex_seq.iter().any(|v| {
                            scc.contains(&graph.vertex_pos(v.as_str()).expect("cycle vertex"))
                        })
                });
                match ext_shortest_walk(&graph, &oracle, s, t) {
                    Ok(Some(walk)) if walk.is_empty() && !reachable => (),
                    Err(ExtendedError::NegativeCycleReachable) if reachable => (),
                    other => {
                        return Err(format!(
                            "instance {inst}: closed walk at {s:?} answered {other:?}"
                        ))
                    }
                }
                continue;
            }
            let mine = ext_shortest_walk(&graph, &oracle, s, t);
            match numeric_shortest_walk(&graph, &weights, s, t) {
                Err(()) => {
                    if !matches!(mine, Err(ExtendedError::NegativeCycleReachable)) {
                        return Err(format!(
                            "instance {inst}: route {s:?}->{t:?} must report a negative cycle, got {mine:?}"
                        ));
                    }
                }
                Ok(None) => {
                    if !matches!(mine, Ok(None)) {
                        return Err(format!(
                            "instance {inst}: route {s:?}->{t:?} must be unreachable, got {mine:?}"
                        ));
                    }
                }
                Ok(Some(expected)) => {
                    let walk = match mine {
                        Ok(Some(walk)) => walk,
                        other => {
                            return Err(format!(
                                "instance {inst}: route {s:?}->{t:?} expected weight {expected}, got {other:?}"
                            ))
                        }
                    };
                    let mut at = s.clone();
                    let mut total = BigRational::zero();
                    for id in &walk {
                        let (src, dst) = edge_ends
                            .get(id)
                            .ok_or_else(|| format!("instance {inst}: unknown edge {id:?}"))?;
                        if src != &at {
                            return Err(format!("instance {inst}: walk does not chain"));
                        }
                        total += &weights[id];
                        at = dst.clone();
                    }
                    if &at != t {
                        return Err(format!("instance {inst}: walk stops at {at:?}"));
                    }
                    if total != expected {
                        return Err(format!(
                            "instance {inst}: walk weighs {total}, reference says {expected}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// 11. Cycle space rank on strongly connected multigraphs
// ---------------------------------------------------------------------------

fn c11() -> Result<(), String> {
    let mut rng = rng_from_seed(0xCB);
    for inst in 0..100usize {
        let n = 1 + inst % 7;
        let graph = random_strongly_connected(&mut rng, n, inst % 6);
        let rank = cycle_space_rank(&graph, BUDGET).map_err(err)?;
        let expected = graph.edge_count() - n + 1;
        if rank != expected {
            return Err(format!(
                "instance {inst}: rank {rank} but m-n+1 = {expected}"
            ));
        }
    }
    Ok(())
}
