//! Seeded random instances for experiments and test suites.
//!
//! All generators draw from a caller-supplied ChaCha stream, so identical
//! seeds give identical instances on every platform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use cyclepat::graph::{Arena, Digraph, Edge, EdgeId, Player, PriorityFn, VertexId, WeightFn};

/// The deterministic generator all randomized commands use.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// A strongly connected multigraph: a random Hamiltonian ring through all
/// vertices plus `extra` random edges (parallels and self-loops allowed).
pub fn random_strongly_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Digraph {
    assert!(n >= 1);
    let names = vertex_names(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<Edge> = Vec::new();
    for k in 0..n {
        let src = order[k];
        let dst = order[(k + 1) % n];
        if n == 1 && k == 0 {
            // a 1-ring is a self-loop
            edges.push(Edge {
                id: EdgeId::from(format!("e{}", edges.len() + 1).as_str()),
                src: VertexId::from(names[src].as_str()),
                dst: VertexId::from(names[src].as_str()),
            });
            continue;
        }
        edges.push(Edge {
            id: EdgeId::from(format!("e{}", edges.len() + 1).as_str()),
            src: VertexId::from(names[src].as_str()),
            dst: VertexId::from(names[dst].as_str()),
        });
    }
    for _ in 0..extra {
        let src = rng.gen_range(0..n);
        let dst = rng.gen_range(0..n);
        edges.push(Edge {
            id: EdgeId::from(format!("e{}", edges.len() + 1).as_str()),
            src: VertexId::from(names[src].as_str()),
            dst: VertexId::from(names[dst].as_str()),
        });
    }
    Digraph::from_parts(
        names.iter().map(|s| VertexId::from(s.as_str())).collect(),
        edges,
    )
}

/// A digraph that need not be strongly connected: random edges over `n`
/// vertices; vertices may lack out-edges entirely.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Digraph {
    assert!(n >= 1);
    let names = vertex_names(n);
    let edges = (1..=m)
        .map(|j| Edge {
            id: EdgeId::from(format!("e{j}").as_str()),
            src: VertexId::from(names[rng.gen_range(0..n)].as_str()),
            dst: VertexId::from(names[rng.gen_range(0..n)].as_str()),
        })
        .collect();
    Digraph::from_parts(
        names.iter().map(|s| VertexId::from(s.as_str())).collect(),
        edges,
    )
}

/// Uniform integer weights in `[-wmax, wmax]` for every edge.
pub fn random_weights(rng: &mut ChaCha8Rng, graph: &Digraph, wmax: i64) -> WeightFn {
    graph
        .edges()
        .iter()
        .map(|e| {
            (
                e.id.clone(),
                BigRational::from_integer(BigInt::from(rng.gen_range(-wmax..=wmax))),
            )
        })
        .collect()
}

/// Uniform priorities in `[0, pmax]` for every edge.
pub fn random_priorities(rng: &mut ChaCha8Rng, graph: &Digraph, pmax: u64) -> PriorityFn {
    graph
        .edges()
        .iter()
        .map(|e| (e.id.clone(), rng.gen_range(0..=pmax)))
        .collect()
}

/// A strongly connected arena with random owners and random weights.
pub fn random_arena(
    rng: &mut ChaCha8Rng,
    n: usize,
    extra: usize,
    wmax: i64,
) -> (Arena, WeightFn) {
    let graph = random_strongly_connected(rng, n, extra);
    let owner: BTreeMap<VertexId, Player> = graph
        .vertices()
        .iter()
        .map(|v| {
            (
                v.clone(),
                if rng.gen_bool(0.5) {
                    Player::Max
                } else {
                    Player::Min
                },
            )
        })
        .collect();
    let weights = random_weights(rng, &graph, wmax);
    let arena = Arena::new(graph, owner).expect("ring guarantees out-edges");
    (arena, weights)
}
