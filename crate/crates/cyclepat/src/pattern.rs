//! Cycle patterns: sign assignments on the simple cycles of a digraph.
//!
//! A pattern maps every simple cycle to a sign in {-, 0, +}. Three backings
//! exist: an explicit cycle-to-sign table, weight-induced (the sign of the
//! cycle's weight sum), and parity-induced (even maximum priority is +, odd
//! is -; a parity pattern never assigns 0). [`CyclePattern::materialize`]
//! converts any backing into an explicit table by enumerating all cycles.
//!
//! Sign queries validate that the queried cycle really is a simple cycle of
//! the pattern's graph, so an explicit table can never be silently consulted
//! about foreign cycles.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::{
    cycle_weight, enumerate_cycles_budgeted, Cycle, Digraph, EdgeId, GraphError, PriorityFn,
    WeightFn,
};

/// The sign of a cycle: negative, zero, or positive weight sum.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    /// Strictly negative.
    Minus,
    /// Exactly zero.
    Zero,
    /// Strictly positive.
    Plus,
}

impl Sign {
    /// The sign of an exact rational.
    pub fn of_rational(x: &BigRational) -> Sign {
        match x.cmp(&BigRational::zero()) {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Plus,
        }
    }

    /// The sign as the conventional character `-`, `0`, or `+`.
    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    /// Parses `-`, `0`, or `+`.
    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Errors from pattern queries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PatternError {
    /// The queried edge set is not a simple cycle of the pattern's graph.
    UnknownCycle(String),
    /// An explicit table has no entry for the cycle.
    MissingSign(Vec<EdgeId>),
    /// A weight-induced pattern lacks a weight for this edge.
    MissingWeight(EdgeId),
    /// A parity-induced pattern lacks a priority for this edge.
    MissingPriority(EdgeId),
    /// Propagated graph error (enumeration budget, validation).
    Graph(GraphError),
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::UnknownCycle(why) => write!(f, "not a cycle of this graph: {why}"),
            PatternError::MissingSign(edges) => {
                write!(f, "pattern table has no sign for cycle {edges:?}")
            }
            PatternError::MissingWeight(e) => write!(f, "no weight for edge {e}"),
            PatternError::MissingPriority(e) => write!(f, "no priority for edge {e}"),
            PatternError::Graph(g) => write!(f, "{g}"),
        }
    }
}

impl From<GraphError> for PatternError {
    fn from(e: GraphError) -> Self {
        PatternError::Graph(e)
    }
}

/// How a pattern's signs are determined.
#[derive(Clone, Debug)]
pub enum Backing {
    /// Explicit table keyed by the cycle's sorted edge-id set.
    Explicit(BTreeMap<Vec<EdgeId>, Sign>),
    /// Signs induced by exact rational edge weights.
    WeightInduced(WeightFn),
    /// Signs induced by max-parity priorities (even max is +, odd is -).
    ParityInduced(PriorityFn),
}

/// A cycle pattern over a fixed digraph.
#[derive(Clone, Debug)]
pub struct CyclePattern {
    /// The graph whose cycles are being signed.
    pub graph: Digraph,
    /// Where the signs come from.
    pub backing: Backing,
}

impl CyclePattern {
    /// A pattern backed by an explicit cycle-to-sign table.
    pub fn explicit(graph: Digraph, table: BTreeMap<Vec<EdgeId>, Sign>) -> CyclePattern {
        CyclePattern {
            graph,
            backing: Backing::Explicit(table),
        }
    }

    /// The pattern induced by edge weights.
    pub fn from_weights(graph: Digraph, weights: WeightFn) -> CyclePattern {
        CyclePattern {
            graph,
            backing: Backing::WeightInduced(weights),
        }
    }

    /// The pattern induced by max-parity priorities.
    pub fn from_priorities(graph: Digraph, priorities: PriorityFn) -> CyclePattern {
        CyclePattern {
            graph,
            backing: Backing::ParityInduced(priorities),
        }
    }

    /// Checks that `cycle` is a simple cycle of this pattern's graph.
    fn check_cycle(&self, cycle: &Cycle) -> Result<(), PatternError> {
        match Cycle::from_edge_ids(&self.graph, &cycle.edges) {
            Ok(canonical) if canonical.edges == cycle.edges => Ok(()),
            Ok(_) => Err(PatternError::UnknownCycle(String::from(
                "edge set canonicalizes differently",
            ))),
            Err(e) => {
                let mut msg = String::new();
                fmt::write(&mut msg, format_args!("{e}")).ok();
                Err(PatternError::UnknownCycle(msg))
            }
        }
    }

    /// The sign of a cycle under this pattern.
    pub fn sign_of(&self, cycle: &Cycle) -> Result<Sign, PatternError> {
        self.check_cycle(cycle)?;
        match &self.backing {
            Backing::Explicit(table) => table
                .get(&cycle.edges)
                .copied()
                .ok_or_else(|| PatternError::MissingSign(cycle.edges.clone())),
            Backing::WeightInduced(w) => {
                for e in &cycle.edges {
                    if !w.contains_key(e) {
                        return Err(PatternError::MissingWeight(e.clone()));
                    }
                }
                let total = cycle_weight(w, cycle)?;
                Ok(Sign::of_rational(&total))
            }
            Backing::ParityInduced(pr) => {
                let mut max_priority: Option<u64> = None;
                for e in &cycle.edges {
                    match pr.get(e) {
                        Some(&p) => {
                            max_priority = Some(max_priority.map_or(p, |m| m.max(p)));
                        }
                        None => return Err(PatternError::MissingPriority(e.clone())),
                    }
                }
                let p = max_priority.expect("cycles are nonempty");
                Ok(if p.is_multiple_of(2) { Sign::Plus } else { Sign::Minus })
            }
        }
    }

    /// Converts any backing into an explicit table over all simple cycles.
    pub fn materialize(&self, budget: usize) -> Result<CyclePattern, PatternError> {
        let cycles = enumerate_cycles_budgeted(&self.graph, budget)?;
        let mut table = BTreeMap::new();
        for c in &cycles {
            let s = self.sign_of(c)?;
            table.insert(c.edges.clone(), s);
        }
        Ok(CyclePattern::explicit(self.graph.clone(), table))
    }

    /// All cycles of the graph paired with their signs, in canonical order.
    pub fn signed_cycles(&self, budget: usize) -> Result<Vec<(Cycle, Sign)>, PatternError> {
        let cycles = enumerate_cycles_budgeted(&self.graph, budget)?;
        cycles
            .into_iter()
            .map(|c| {
                let s = self.sign_of(&c)?;
                Ok((c, s))
            })
            .collect()
    }
}

/// First cycle (canonical order) whose induced signs differ under `w1` and `w2`.
pub fn distinguish(
    graph: &Digraph,
    w1: &WeightFn,
    w2: &WeightFn,
    budget: usize,
) -> Result<Option<Cycle>, PatternError> {
    let p1 = CyclePattern::from_weights(graph.clone(), w1.clone());
    let p2 = CyclePattern::from_weights(graph.clone(), w2.clone());
    for c in enumerate_cycles_budgeted(graph, budget)? {
        if p1.sign_of(&c)? != p2.sign_of(&c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// First cycle (canonical order) whose weight sum is exactly zero.
pub fn zero_weight_cycle(
    graph: &Digraph,
    w: &WeightFn,
    budget: usize,
) -> Result<Option<Cycle>, PatternError> {
    for c in enumerate_cycles_budgeted(graph, budget)? {
        for e in &c.edges {
            if !w.contains_key(e) {
                return Err(PatternError::MissingWeight(e.clone()));
            }
        }
        if cycle_weight(w, &c)?.is_zero() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::weights_from_i64;

    fn two_cycle_graph() -> Digraph {
        Digraph::build(&["a", "b"], &[("e1", "a", "b"), ("e2", "b", "a")])
    }

    #[test]
    fn weight_induced_signs() {
        let g = two_cycle_graph();
        let w = weights_from_i64([("e1", 2), ("e2", -2)]);
        let p = CyclePattern::from_weights(g.clone(), w);
        let c = Cycle::from_edge_ids(&g, &[EdgeId::from("e1"), EdgeId::from("e2")]).unwrap();
        assert_eq!(p.sign_of(&c).unwrap(), Sign::Zero);
    }

    #[test]
    fn parity_signs_are_never_zero() {
        let g = two_cycle_graph();
        let pr: PriorityFn = [(EdgeId::from("e1"), 2), (EdgeId::from("e2"), 1)]
            .into_iter()
            .collect();
        let p = CyclePattern::from_priorities(g.clone(), pr);
        let c = Cycle::from_edge_ids(&g, &[EdgeId::from("e1"), EdgeId::from("e2")]).unwrap();
        assert_eq!(p.sign_of(&c).unwrap(), Sign::Plus); // max priority 2 is even
    }

    #[test]
    fn sign_of_rejects_foreign_cycles() {
        let g = two_cycle_graph();
        let other = Digraph::build(&["x"], &[("z", "x", "x")]);
        let c = Cycle::from_edge_ids(&other, &[EdgeId::from("z")]).unwrap();
        let p = CyclePattern::from_weights(g, weights_from_i64([("e1", 1), ("e2", 1)]));
        assert!(matches!(p.sign_of(&c), Err(PatternError::UnknownCycle(_))));
    }

    #[test]
    fn distinguish_and_zero_cycle() {
        let g = two_cycle_graph();
        let w1 = weights_from_i64([("e1", 1), ("e2", 1)]);
        let w2 = weights_from_i64([("e1", 1), ("e2", -1)]);
        let diff = distinguish(&g, &w1, &w2, 1000).unwrap();
        assert!(diff.is_some());
        assert!(zero_weight_cycle(&g, &w1, 1000).unwrap().is_none());
        assert!(zero_weight_cycle(&g, &w2, 1000).unwrap().is_some());
    }
}
