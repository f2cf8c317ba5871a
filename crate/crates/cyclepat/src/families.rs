//! Generators for the hard-instance families and lower-bound gadgets.
//!
//! Four constructions plus one integer sequence:
//!
//! - [`gen_gi`]: the four-vertex multigraph whose parity pattern forces a
//!   Fibonacci gap between the paired weights of every integer realization
//!   — the base exponential-weights family.
//! - [`gen_fas1_variant`]: the same pattern re-hosted on a simple graph of
//!   feedback arc set number 1, by subdividing every edge and splitting the
//!   anchor vertex in two.
//! - [`gen_simple_variant`]: a simple (no parallel edges) variant on a
//!   `k`-cycle with shared splitter vertices; requires `3 | k` so that
//!   consecutive cycle vertices never share a splitter.
//! - [`gen_reduction_arenas`]: a family of `m` single-anchor arenas over a
//!   shared edge-id space `e1..em` with intended weights `(-2)^j`, built so
//!   that no small replacement weight vector preserves all `m` zero-mean
//!   partitions at once.
//! - [`exp_integer_seq`]: the tight integer solution to the inequality
//!   system behind that impossibility bound.
//!
//! All generators are deterministic; ids follow the indexing the instances
//! are usually cited by (`e1..e{8i}` for the base family, weight-index ids
//! `e{j}` for the reduction arenas).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::graph::{Arena, Digraph, Edge, EdgeId, Player, PriorityFn, VertexId, WeightFn};

/// The four-vertex family: `v1..v4` on a directed cycle, each consecutive
/// pair joined by `2i` parallel edges, with priority equal to edge index.
///
/// Edge ids are `e1..e{8i}`; the vertex `v_k` carries the out-edges with
/// indices `8(j-1)+2k-1` and `8(j-1)+2k` for `j = 1..i`. The graph has
/// exactly `(2i)^4` simple cycles — one per choice of parallel edge on each
/// of the four legs.
///
/// Panics if `i == 0`.
pub fn gen_gi(i: usize) -> (Digraph, PriorityFn) {
    assert!(i >= 1, "family parameter i must be at least 1");
    let vertices: Vec<VertexId> = (1..=4).map(|k| VertexId(format!("v{k}"))).collect();
    let mut edges = Vec::with_capacity(8 * i);
    let mut priorities = PriorityFn::new();
    for j in 1..=i {
        for k in 1..=4usize {
            for off in [0usize, 1] {
                let index = 8 * (j - 1) + 2 * k - 1 + off;
                let id = EdgeId(format!("e{index}"));
                priorities.insert(id.clone(), index as u64);
                edges.push(Edge {
                    id,
                    src: VertexId(format!("v{k}")),
                    dst: VertexId(format!("v{}", k % 4 + 1)),
                });
            }
        }
    }
    (Digraph::from_parts(vertices, edges), priorities)
}

/// The feedback-arc-set-1 variant: every edge of [`gen_gi`] subdivided
/// through a fresh vertex `u{j}` (both halves keep priority `j`), the
/// anchor `v1` split into `v1in` (all incoming) and `v1out` (all outgoing),
/// and the single back edge `e0: v1in -> v1out` with priority 0.
///
/// The result is a simple digraph with `4 + 8i + 1` vertices whose parity
/// pattern corresponds to the base family's cycle for cycle; removing `e0`
/// (the unique priority-0 edge) leaves the graph acyclic.
///
/// Panics if `i == 0`.
pub fn gen_fas1_variant(i: usize) -> (Digraph, PriorityFn) {
    let (base, base_pr) = gen_gi(i);
    let mut vertices: Vec<VertexId> = vec![VertexId::from("v1in"), VertexId::from("v1out")];
    vertices.extend((2..=4).map(|k| VertexId(format!("v{k}"))));
    vertices.extend((1..=8 * i).map(|j| VertexId(format!("u{j}"))));

    let rename = |v: &VertexId, outgoing: bool| -> VertexId {
        if v.as_str() == "v1" {
            VertexId::from(if outgoing { "v1out" } else { "v1in" })
        } else {
            v.clone()
        }
    };

    let mut edges = Vec::with_capacity(16 * i + 1);
    let mut priorities = PriorityFn::new();
    for e in base.edges() {
        let j = base_pr[&e.id];
        let mid = VertexId(format!("u{j}"));
        let first = EdgeId(format!("{}a", e.id));
        let second = EdgeId(format!("{}b", e.id));
        priorities.insert(first.clone(), j);
        priorities.insert(second.clone(), j);
        edges.push(Edge {
            id: first,
            src: rename(&e.src, true),
            dst: mid.clone(),
        });
        edges.push(Edge {
            id: second,
            src: mid,
            dst: rename(&e.dst, false),
        });
    }
    let marked = EdgeId::from("e0");
    priorities.insert(marked.clone(), 0);
    edges.push(Edge {
        id: marked,
        src: VertexId::from("v1in"),
        dst: VertexId::from("v1out"),
    });
    (Digraph::from_parts(vertices, edges), priorities)
}

/// The simple variant on a `k`-cycle with shared splitters.
///
/// Cycle vertices `v1..vk` are joined by base edges `b{p}: v_p -> v_{p+1}`
/// of priority 0. Vertex `v_p` additionally carries priorities `2jk+2p-1`
/// and `2jk+2p` for `j = 0..i-1` toward its successor; the edge of its
/// `a`-th smallest priority is split through the shared vertex `s{a}_{b}`
/// with `b = p mod 3` (taking 3 for 0), both halves keeping the priority
/// (ids `p{q}a`, `p{q}b` for priority `q`). Divisibility of `k` by 3 keeps
/// the result simple. Total: `k + 6i` vertices, `k(4i + 1)` edges.
///
/// Panics unless `k >= 3`, `3 | k`, and `i >= 1`.
pub fn gen_simple_variant(k: usize, i: usize) -> (Digraph, PriorityFn) {
    assert!(k >= 3 && k.is_multiple_of(3), "k must be a multiple of 3, at least 3");
    assert!(i >= 1, "family parameter i must be at least 1");
    let mut vertices: Vec<VertexId> = (1..=k).map(|p| VertexId(format!("v{p}"))).collect();
    for a in 1..=2 * i {
        for b in 1..=3 {
            vertices.push(VertexId(format!("s{a}_{b}")));
        }
    }
    let mut edges = Vec::with_capacity(k * (4 * i + 1));
    let mut priorities = PriorityFn::new();
    for p in 1..=k {
        let id = EdgeId(format!("b{p}"));
        priorities.insert(id.clone(), 0);
        edges.push(Edge {
            id,
            src: VertexId(format!("v{p}")),
            dst: VertexId(format!("v{}", p % k + 1)),
        });
    }
    for p in 1..=k {
        let b = if p % 3 == 0 { 3 } else { p % 3 };
        for rank0 in 0..2 * i {
            let q = 2 * (rank0 / 2) * k + 2 * p - 1 + (rank0 % 2);
            let a = rank0 + 1;
            let splitter = VertexId(format!("s{a}_{b}"));
            let first = EdgeId(format!("p{q}a"));
            let second = EdgeId(format!("p{q}b"));
            priorities.insert(first.clone(), q as u64);
            priorities.insert(second.clone(), q as u64);
            edges.push(Edge {
                id: first,
                src: VertexId(format!("v{p}")),
                dst: splitter.clone(),
            });
            edges.push(Edge {
                id: second,
                src: splitter,
                dst: VertexId(format!("v{}", p % k + 1)),
            });
        }
    }
    (Digraph::from_parts(vertices, edges), priorities)
}

/// The intended shared weighting of [`gen_reduction_arenas`]: edge `e{j}`
/// carries `(-2)^j`.
pub fn reduction_weights(m: usize) -> WeightFn {
    let mut w = WeightFn::new();
    let mut value = BigInt::from(1);
    for j in 1..=m {
        value *= -2;
        w.insert(EdgeId(format!("e{j}")), BigRational::from_integer(value.clone()));
    }
    w
}

/// The reduction-impossibility family: `m` arenas over the shared edge ids
/// `e1..em`, each id appearing exactly once per arena.
///
/// Arena `2i-1` has a cycle `C` (weight indices `2i-1, 2, 4, .., 2i-2`)
/// owned by Max and a cycle `C'` through the anchor `v1` with Min interior
/// (the odd indices except `2i-1`); the unused even indices become self
/// loops on the first non-anchor `C'` vertex, in index order. Arena `2i`
/// mirrors the roles. Under the [`reduction_weights`] weighting the odd
/// arenas solve to an empty `V+` and the even ones to everything.
///
/// When `C'` has no interior vertex (only at `m = 4`) the leftover loops
/// must sit on `v1` itself; `v1` is then assigned to the cycle owner's
/// opponent, which keeps the intended partitions (the opponent still
/// prefers its own all-`C'` play and ignores the hostile loops).
///
/// Panics unless `m` is even and at least 4.
pub fn gen_reduction_arenas(m: usize) -> Vec<Arena> {
    assert!(m >= 4 && m.is_multiple_of(2), "m must be even, at least 4");
    (1..=m).map(|r| reduction_arena(m, r)).collect()
}

fn reduction_arena(m: usize, r: usize) -> Arena {
    let i = r.div_ceil(2);
    let odd = r % 2 == 1;
    let cycle_owner = if odd { Player::Max } else { Player::Min };

    // Weight indices of C (top index first, then ascending), C' (ascending),
    // and the leftover loops (ascending).
    let mut c_idx: Vec<usize> = vec![r];
    let mut cp_idx: Vec<usize> = Vec::new();
    let mut loose: Vec<usize> = Vec::new();
    if odd {
        c_idx.extend((2..=2 * (i - 1)).step_by(2));
        cp_idx.extend((1..=m - 1).step_by(2).filter(|&j| j != r));
        loose.extend((2 * i..=m).step_by(2));
    } else {
        c_idx.extend((1..=m - 1).step_by(2).take(i - 1));
        cp_idx.extend((2..=m).step_by(2).filter(|&j| j != r));
        loose.extend((1..=m - 1).step_by(2).filter(|&j| !c_idx.contains(&j)));
    }
    debug_assert_eq!(c_idx.len(), i);
    debug_assert_eq!(c_idx.len() + cp_idx.len() + loose.len(), m);

    let c_interior = c_idx.len() - 1;
    let cp_interior = cp_idx.len() - 1;
    let mut vertices: Vec<VertexId> = vec![VertexId::from("v1")];
    vertices.extend((1..=c_interior).map(|t| VertexId(format!("c{t}"))));
    vertices.extend((1..=cp_interior).map(|t| VertexId(format!("x{t}"))));

    let ring = |prefix: &str, len: usize, t: usize| -> VertexId {
        // t-th vertex along a cycle of `len` edges anchored at v1
        if t == 0 || t == len {
            VertexId::from("v1")
        } else {
            VertexId(format!("{prefix}{t}"))
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (t, &j) in c_idx.iter().enumerate() {
        edges.push(Edge {
            id: EdgeId(format!("e{j}")),
            src: ring("c", c_idx.len(), t),
            dst: ring("c", c_idx.len(), t + 1),
        });
    }
    for (t, &j) in cp_idx.iter().enumerate() {
        edges.push(Edge {
            id: EdgeId(format!("e{j}")),
            src: ring("x", cp_idx.len(), t),
            dst: ring("x", cp_idx.len(), t + 1),
        });
    }
    let host = if cp_interior >= 1 {
        VertexId::from("x1")
    } else {
        VertexId::from("v1")
    };
    for &j in &loose {
        edges.push(Edge {
            id: EdgeId(format!("e{j}")),
            src: host.clone(),
            dst: host.clone(),
        });
    }

    let mut owner: BTreeMap<VertexId, Player> = BTreeMap::new();
    owner.insert(VertexId::from("v1"), cycle_owner);
    for t in 1..=c_interior {
        owner.insert(VertexId(format!("c{t}")), cycle_owner);
    }
    for t in 1..=cp_interior {
        owner.insert(VertexId(format!("x{t}")), cycle_owner.opponent());
    }
    if host.as_str() == "v1" {
        owner.insert(VertexId::from("v1"), cycle_owner.opponent());
    }
    Arena::new(Digraph::from_parts(vertices, edges), owner).expect("construction is total")
}

/// The tight integer solution of the exponential-growth inequality system:
/// `a_i = floor(-2^(i-2))`, `b_i = floor(2^(i-2))`, `c_i = 0`, so that
/// `a_1 + .. + a_{i-1} + b_i + c_i >= 0` and
/// `b_1 + .. + b_{i-1} + a_i + c_i < 0` hold for all `i <= k` while
/// `max(|a_k|, |b_k|)` meets the forced lower bound `2^(k-2)` exactly.
///
/// Panics if `k == 0`.
pub fn exp_integer_seq(k: usize) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    assert!(k >= 1, "sequence length must be at least 1");
    let mut a = vec![BigInt::from(-1)];
    let mut b = vec![BigInt::from(0)];
    let mut power = BigInt::from(1); // 2^(i-2) for i = 2
    for _ in 2..=k {
        a.push(-power.clone());
        b.push(power.clone());
        power *= 2;
    }
    let c = vec![BigInt::from(0); k];
    (a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_cycles_budgeted, sccs, Cycle};
    use crate::pattern::{CyclePattern, Sign};
    use alloc::collections::BTreeSet;
    use alloc::string::String;
    use num_traits::Zero;

    #[test]
    fn gi_shape_and_cycle_census() {
        let (g, pr) = gen_gi(1);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 8);
        for k in 1..=4usize {
            let prios: BTreeSet<u64> = g
                .out_edges_of(&format!("v{k}"))
                .iter()
                .map(|e| pr[&e.id])
                .collect();
            let want: BTreeSet<u64> = [(2 * k - 1) as u64, (2 * k) as u64].into();
            assert_eq!(prios, want, "out-priorities of v{k}");
        }
        assert_eq!(enumerate_cycles_budgeted(&g, 10_000).unwrap().len(), 16);

        let (g2, pr2) = gen_gi(2);
        assert_eq!(g2.edge_count(), 16);
        assert_eq!(enumerate_cycles_budgeted(&g2, 10_000).unwrap().len(), 256);
        let c = Cycle::from_edge_ids(
            &g2,
            &["e1", "e4", "e13", "e8"].map(EdgeId::from),
        )
        .unwrap();
        let pattern = CyclePattern::from_priorities(g2, pr2);
        assert_eq!(pattern.sign_of(&c).unwrap(), Sign::Minus);
    }

    #[test]
    fn fas1_is_simple_with_one_feedback_edge() {
        let (g, pr) = gen_fas1_variant(1);
        assert_eq!(g.vertex_count(), 4 + 8 + 1);
        // simple: no duplicate (src, dst) pairs, no self-loops
        let mut seen = BTreeSet::new();
        for e in g.edges() {
            assert_ne!(e.src, e.dst, "self-loop {}", e.id);
            assert!(seen.insert((e.src.clone(), e.dst.clone())), "parallel {}", e.id);
        }
        assert_eq!(enumerate_cycles_budgeted(&g, 10_000).unwrap().len(), 16);
        // the unique priority-0 edge is the feedback edge
        let marked: Vec<&EdgeId> = pr.iter().filter(|(_, &p)| p == 0).map(|(e, _)| e).collect();
        assert_eq!(marked, [&EdgeId::from("e0")]);
        let keep: BTreeSet<EdgeId> = g
            .edges()
            .iter()
            .map(|e| e.id.clone())
            .filter(|id| id != marked[0])
            .collect();
        let without = g.edge_subgraph(&keep);
        assert!(sccs(&without).iter().all(|comp| comp.len() == 1));
        assert!(enumerate_cycles_budgeted(&without, 10).unwrap().is_empty());
    }

    #[test]
    fn fas1_signs_track_the_base_family() {
        let (g, pr) = gen_fas1_variant(1);
        let pattern = CyclePattern::from_priorities(g.clone(), pr);
        // legs 1,3,5,7 plus the feedback edge: top priority 7, odd
        let ids: Vec<EdgeId> = ["e1a", "e1b", "e3a", "e3b", "e5a", "e5b", "e7a", "e7b", "e0"]
            .map(EdgeId::from)
            .to_vec();
        let c = Cycle::from_edge_ids(&g, &ids).unwrap();
        assert_eq!(pattern.sign_of(&c).unwrap(), Sign::Minus);
        // swapping the last leg to 8 flips the sign
        let ids: Vec<EdgeId> = ["e1a", "e1b", "e3a", "e3b", "e5a", "e5b", "e8a", "e8b", "e0"]
            .map(EdgeId::from)
            .to_vec();
        let c = Cycle::from_edge_ids(&g, &ids).unwrap();
        assert_eq!(pattern.sign_of(&c).unwrap(), Sign::Plus);
    }

    #[test]
    fn simple_variant_counts_and_simplicity() {
        let (g, _) = gen_simple_variant(6, 3);
        assert_eq!(g.vertex_count(), 6 + 18);
        assert_eq!(g.edge_count(), 6 * 13);
        let mut seen = BTreeSet::new();
        for e in g.edges() {
            assert_ne!(e.src, e.dst);
            assert!(seen.insert((e.src.clone(), e.dst.clone())), "parallel {}", e.id);
        }
        // k=3, i=1: each splitter serves a single cycle vertex, so the cycle
        // census is exactly (2i+1)^k
        let (g3, _) = gen_simple_variant(3, 1);
        assert_eq!(g3.vertex_count(), 3 + 6);
        assert_eq!(enumerate_cycles_budgeted(&g3, 10_000).unwrap().len(), 27);
    }

    #[test]
    fn simple_variant_contains_the_six_priority_gadget() {
        let (g, pr) = gen_simple_variant(6, 3);
        let pattern = CyclePattern::from_priorities(g.clone(), pr);
        // legs of priorities 13 (at v1), 15 (v2), 18 (v3), closed by base edges
        let plus = Cycle::from_edge_ids(
            &g,
            &["p13a", "p13b", "p15a", "p15b", "p18a", "p18b", "b4", "b5", "b6"].map(EdgeId::from),
        )
        .unwrap();
        assert_eq!(pattern.sign_of(&plus).unwrap(), Sign::Plus);
        let minus = Cycle::from_edge_ids(
            &g,
            &["p14a", "p14b", "p16a", "p16b", "p17a", "p17b", "b4", "b5", "b6"].map(EdgeId::from),
        )
        .unwrap();
        assert_eq!(pattern.sign_of(&minus).unwrap(), Sign::Minus);
    }

    #[test]
    fn reduction_arenas_have_the_intended_partitions() {
        use crate::games::solve_oracle;
        for m in [4usize, 6] {
            let arenas = gen_reduction_arenas(m);
            let w = reduction_weights(m);
            assert_eq!(arenas.len(), m);
            for (idx, arena) in arenas.iter().enumerate() {
                let r = idx + 1;
                let i = r.div_ceil(2);
                assert_eq!(
                    arena.graph.vertex_count(),
                    m / 2 + i - 2,
                    "vertex count of arena {r} (m={m})"
                );
                assert_eq!(arena.graph.edge_count(), m);
                let ids: BTreeSet<String> = arena
                    .graph
                    .edges()
                    .iter()
                    .map(|e| String::from(e.id.as_str()))
                    .collect();
                assert_eq!(ids.len(), m, "each weight index once");
                let part = solve_oracle(arena, &w, 10_000).unwrap();
                if r % 2 == 1 {
                    assert!(part.v_plus.is_empty(), "arena {r} of m={m} should be all-Min");
                } else {
                    assert_eq!(
                        part.v_plus.len(),
                        arena.graph.vertex_count(),
                        "arena {r} of m={m} should be all-Max"
                    );
                }
            }
        }
    }

    #[test]
    fn exp_sequence_is_tight() {
        let (a, b, c) = exp_integer_seq(2);
        assert_eq!(a, vec![BigInt::from(-1), BigInt::from(-1)]);
        assert_eq!(b, vec![BigInt::from(0), BigInt::from(1)]);
        assert!(c.iter().all(|x| x.is_zero()));

        for k in 1..=12usize {
            let (a, b, c) = exp_integer_seq(k);
            for i in 1..=k {
                let head_a: BigInt = a[..i - 1].iter().sum();
                let head_b: BigInt = b[..i - 1].iter().sum();
                assert!(&head_a + &b[i - 1] + &c[i - 1] >= BigInt::from(0), "k={k} i={i}");
                assert!(&head_b + &a[i - 1] + &c[i - 1] < BigInt::from(0), "k={k} i={i}");
            }
            let bound = if k == 1 {
                BigInt::from(1)
            } else {
                BigInt::from(1) << (k - 2)
            };
            let attained = a[k - 1].magnitude().max(b[k - 1].magnitude());
            assert_eq!(BigInt::from(attained.clone()), bound, "tightness at k={k}");
        }
    }
}
