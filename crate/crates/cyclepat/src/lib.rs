//! Cycle patterns of directed graphs.
//!
//! A *cycle pattern* assigns a sign in {-, 0, +} to every simple cycle of a
//! directed multigraph. Patterns induced by edge weights (the sign of the
//! weight sum around each cycle) are called *realizable*; this crate decides
//! realizability exactly and produces either an integral realization or a
//! Farkas-style witness that no realization exists. On top of that sit:
//!
//! * parity realizability: whether a pattern is induced by a priority
//!   assignment under max-parity semantics, decided by a constructive
//!   peeling procedure ([`parity`]);
//! * zero-mean partitions of mean-payoff games, solved by a brute-force
//!   strategy-enumeration oracle, a potential-reduction solver, and an
//!   energy value iteration that must all agree ([`games`]);
//! * hard-instance family generators with exponential weight lower bounds
//!   ([`families`]);
//! * sign-query instrumentation that records every weight comparison a
//!   solver makes as an integer linear form, for decision-tree lower-bound
//!   experiments ([`probe`]);
//! * a comparison-only Bellman-Ford over extended patterns (cycle signs
//!   plus path comparisons) ([`extended`]).
//!
//! All arithmetic is exact: weights are integers or arbitrary-precision
//! rationals, never floats. Every search and iteration order is
//! deterministic, so identical inputs produce identical outputs.
//!
//! The crate is `no_std` + `alloc`; anything touching files, JSON, or
//! randomness lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod extended;
pub mod families;
pub mod games;
pub mod graph;
pub mod lp;
pub mod parity;
pub mod pattern;
pub mod probe;
pub mod realize;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
