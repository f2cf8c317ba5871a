//! Parity realizability: inducing a pattern from edge priorities.
//!
//! A priority function `p : E -> N` induces the sign `+` on a cycle when the
//! largest priority along it is even and `-` when it is odd; no cycle ever
//! gets sign `0`. A zero-free pattern is *parity realizable* when some
//! priority function induces it.
//!
//! The decision procedure peels edges greedily from the top priority down.
//! If some edge lies only on cycles of a single sign (within the not yet
//! assigned subgraph), it can safely receive the largest remaining priority
//! with the matching parity: every cycle through it is dominated by that
//! priority and already has the right sign, and all other cycles are
//! untouched. When no such edge exists, every remaining cycle edge lies on
//! both a positive and a negative cycle inside the residual set — and such a
//! *mixed set* is an obstruction no priority function can overcome, because
//! whichever residual edge were to carry the overall maximum priority would
//! dominate one cycle of each sign.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::graph::{Cycle, Digraph, EdgeId, PriorityFn, WeightFn};
use crate::pattern::{CyclePattern, PatternError, Sign};

/// Errors from parity realizability.
#[derive(Clone, Debug)]
pub enum ParityError {
    /// Propagated pattern/graph failure.
    Pattern(PatternError),
    /// Priorities never induce sign `0`, so a zero cycle rules the whole
    /// question out; the offending cycle is attached.
    ZeroCycle(Cycle),
}

impl fmt::Display for ParityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityError::Pattern(e) => write!(f, "{e}"),
            ParityError::ZeroCycle(c) => {
                write!(f, "pattern assigns sign 0 to cycle {:?}", c.edges)
            }
        }
    }
}

impl From<PatternError> for ParityError {
    fn from(e: PatternError) -> ParityError {
        ParityError::Pattern(e)
    }
}

/// Outcome of a parity realizability test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParityRealizability {
    /// Priorities inducing the pattern, compacted into `[0, 2m]`.
    Realizable {
        /// The priority assignment.
        priorities: PriorityFn,
    },
    /// A mixed set: every member edge lies on both a positive and a
    /// negative cycle consisting solely of member edges.
    NotRealizable {
        /// The obstruction.
        mixed: BTreeSet<EdgeId>,
    },
}

/// Decides parity realizability by peeling.
pub fn check_parity_realizable(
    pattern: &CyclePattern,
    budget: usize,
) -> Result<ParityRealizability, ParityError> {
    let graph = &pattern.graph;
    let m = graph.edge_count();
    let signed = pattern.signed_cycles(budget)?;

    struct Rec {
        positions: Vec<usize>,
        plus: bool,
    }
    let mut alive: Vec<Rec> = Vec::with_capacity(signed.len());
    for (cycle, sign) in signed {
        let plus = match sign {
            Sign::Plus => true,
            Sign::Minus => false,
            Sign::Zero => return Err(ParityError::ZeroCycle(cycle)),
        };
        let positions = cycle
            .edges
            .iter()
            .map(|e| graph.edge_pos(e.as_str()).expect("cycle edge exists"))
            .collect();
        alive.push(Rec { positions, plus });
    }

    // Edge positions in id order, for the deterministic tie-break.
    let mut by_id: Vec<usize> = (0..m).collect();
    by_id.sort_by(|&a, &b| graph.edges()[a].id.cmp(&graph.edges()[b].id));

    let mut in_residual = vec![true; m];
    let mut assigned: BTreeMap<EdgeId, u64> = BTreeMap::new();
    let mut next: u64 = 2 * m as u64;

    loop {
        alive.retain(|c| c.positions.iter().all(|&p| in_residual[p]));
        if alive.is_empty() {
            break;
        }
        let mut on_plus = vec![false; m];
        let mut on_minus = vec![false; m];
        for c in &alive {
            for &p in &c.positions {
                if c.plus {
                    on_plus[p] = true;
                } else {
                    on_minus[p] = true;
                }
            }
        }
        let candidate = by_id.iter().copied().find(|&p| {
            in_residual[p] && (on_plus[p] != on_minus[p])
        });
        match candidate {
            Some(pos) => {
                let want_even = on_plus[pos];
                let mut q = next;
                if q.is_multiple_of(2) != want_even {
                    q -= 1;
                }
                assigned.insert(graph.edges()[pos].id.clone(), q);
                next = q - 1;
                in_residual[pos] = false;
            }
            None => {
                let mixed = (0..m)
                    .filter(|&p| on_plus[p] || on_minus[p])
                    .map(|p| graph.edges()[p].id.clone())
                    .collect();
                return Ok(ParityRealizability::NotRealizable { mixed });
            }
        }
    }
    // Whatever is left lies on no residual cycle; every cycle through it is
    // dominated by some already-assigned priority, so park it at even 0.
    for (edge, residual) in graph.edges().iter().zip(&in_residual) {
        if *residual {
            assigned.insert(edge.id.clone(), 0);
        }
    }
    Ok(ParityRealizability::Realizable {
        priorities: compact_priorities(&assigned),
    })
}

/// Renumbers priorities onto the smallest values preserving relative order
/// and the parity of every value; the result lives in `[0, 2m]`.
pub fn compact_priorities(priorities: &PriorityFn) -> PriorityFn {
    let distinct: BTreeSet<u64> = priorities.values().copied().collect();
    let mut remap: BTreeMap<u64, u64> = BTreeMap::new();
    let mut prev: Option<u64> = None;
    for &v in &distinct {
        let c = match prev {
            None => v % 2,
            Some(pc) => {
                if (pc + 1) % 2 == v % 2 {
                    pc + 1
                } else {
                    pc + 2
                }
            }
        };
        remap.insert(v, c);
        prev = Some(c);
    }
    priorities
        .iter()
        .map(|(e, v)| (e.clone(), remap[v]))
        .collect()
}

/// Checks that every edge of the set lies on a positive and on a negative
/// cycle drawn entirely from the set.
pub fn verify_mixed_set(
    pattern: &CyclePattern,
    mixed: &BTreeSet<EdgeId>,
    budget: usize,
) -> Result<bool, PatternError> {
    if mixed.is_empty() {
        return Ok(false);
    }
    let mut plus_cover: BTreeSet<&EdgeId> = BTreeSet::new();
    let mut minus_cover: BTreeSet<&EdgeId> = BTreeSet::new();
    for (cycle, sign) in pattern.signed_cycles(budget)? {
        if !cycle.edges.iter().all(|e| mixed.contains(e)) {
            continue;
        }
        let cover = match sign {
            Sign::Plus => &mut plus_cover,
            Sign::Minus => &mut minus_cover,
            Sign::Zero => continue,
        };
        for e in &cycle.edges {
            if let Some(k) = mixed.get(e) {
                cover.insert(k);
            }
        }
    }
    Ok(plus_cover.len() == mixed.len() && minus_cover.len() == mixed.len())
}

/// Converts priorities into weights inducing the same signs:
/// `w(e) = (-n)^{p(e)}` with `n` the vertex count.
///
/// On any cycle, all edges of maximal priority contribute the same sign and
/// the at most `n - 1` lower terms are each smaller in magnitude by a factor
/// of `n`, so the top priority's parity decides the sum's sign.
pub fn parity_to_weights(graph: &Digraph, priorities: &PriorityFn) -> Result<WeightFn, PatternError> {
    let n = graph.vertex_count() as i64;
    let base = BigInt::from(-n);
    let mut weights = WeightFn::new();
    for edge in graph.edges() {
        let p = priorities
            .get(&edge.id)
            .ok_or_else(|| PatternError::MissingPriority(edge.id.clone()))?;
        let w = base.pow(u32::try_from(*p).expect("priority fits in u32"));
        weights.insert(edge.id.clone(), BigRational::from_integer(w));
    }
    Ok(weights)
}
