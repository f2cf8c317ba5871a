//! Exact rational linear and integer-linear feasibility.
//!
//! Systems here have the fixed shape coming from realization cones:
//!
//! ```text
//!   A w >= 1   (strict rows; >= 1 is the integer-scaled form of > 0)
//!   B w  = 0   (equality rows)
//!   lo <= w <= hi  (optional per-variable bounds)
//! ```
//!
//! [`lp_feasible`] decides rational feasibility and returns either a point or
//! an exact Farkas certificate `(y, z)` with `y >= 0`, `sum y >= 1`,
//! `y^T A + z^T B = 0` whenever even the unbounded cone is empty.
//!
//! Feasibility is decided on the dual: maximize `1^T y + lo^T p - hi^T q`
//! subject to `A^T y + B^T z + p - q = 0` with `y, p, q >= 0`. That program
//! is homogeneous, so the origin is always feasible, every simplex pivot is
//! degenerate, and Bland's rule guarantees termination without any phase 1.
//! If the optimum is 0, the simplex multipliers of the equality rows are a
//! feasible primal point; if the objective is unbounded, the improving ray is
//! the Farkas certificate. The tableau has one row per *variable* rather
//! than one per cycle row, which is what keeps branch-and-bound affordable
//! on instances with hundreds of cycles.
//!
//! [`ilp_feasible`] runs branch-and-bound over boxed systems (branching on
//! the most fractional coordinate, lowest index on ties, lower branch first),
//! warm-starting each node from its parent's basis: changing `lo`/`hi` only
//! changes dual objective coefficients, never the constraint matrix.
//!
//! [`ilp_minimize`] minimizes a linear objective over such a system with a
//! classic two-phase primal simplex (rows are constraints; witness programs
//! have few constraints) under the same branch-and-bound rules.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A linear system `A w >= 1`, `B w = 0`, optionally `lo <= w <= hi`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    /// Number of variables (columns of the rows).
    pub num_vars: usize,
    /// Rows `a` demanding `a . w >= 1`.
    pub strict: Vec<Vec<BigInt>>,
    /// Rows `b` demanding `b . w = 0`.
    pub eq: Vec<Vec<BigInt>>,
    /// Per-variable lower bounds, if any.
    pub lower: Option<Vec<BigInt>>,
    /// Per-variable upper bounds, if any.
    pub upper: Option<Vec<BigInt>>,
}

impl LinearSystem {
    /// A system without box constraints.
    pub fn cone(num_vars: usize, strict: Vec<Vec<BigInt>>, eq: Vec<Vec<BigInt>>) -> LinearSystem {
        let sys = LinearSystem {
            num_vars,
            strict,
            eq,
            lower: None,
            upper: None,
        };
        sys.assert_shape();
        sys
    }

    /// The same system with the box `-k <= w_j <= k` for every variable.
    pub fn with_linf_box(mut self, k: &BigInt) -> LinearSystem {
        self.lower = Some(vec![-k.clone(); self.num_vars]);
        self.upper = Some(vec![k.clone(); self.num_vars]);
        self
    }

    fn assert_shape(&self) {
        for row in self.strict.iter().chain(self.eq.iter()) {
            assert_eq!(row.len(), self.num_vars, "row arity mismatch");
        }
        if let Some(lo) = &self.lower {
            assert_eq!(lo.len(), self.num_vars);
        }
        if let Some(hi) = &self.upper {
            assert_eq!(hi.len(), self.num_vars);
        }
    }

    fn has_box(&self) -> bool {
        self.lower.is_some() || self.upper.is_some()
    }
}

/// Result of rational feasibility.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LpOutcome {
    /// A rational point satisfying all constraints (including any box).
    Feasible(Vec<BigRational>),
    /// Even without the box no solution exists; `(y, z)` is an integral
    /// Farkas certificate: `y >= 0`, `sum y >= 1`, `y^T A + z^T B = 0`.
    ConeInfeasible {
        /// Multipliers on the strict rows.
        y: Vec<BigInt>,
        /// Multipliers on the equality rows.
        z: Vec<BigInt>,
    },
    /// The unboxed system is feasible but the box excludes every solution.
    BoxInfeasible,
}

/// Errors from integer minimization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IlpError {
    /// The relaxation's objective is unbounded below.
    Unbounded,
}

impl fmt::Display for IlpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IlpError::Unbounded => f.write_str("objective unbounded below"),
        }
    }
}

/// An integer optimum: objective value and attaining point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IlpOptimum {
    /// Minimal objective value.
    pub value: BigInt,
    /// A point attaining it.
    pub point: Vec<BigInt>,
}

fn rat(i: &BigInt) -> BigRational {
    BigRational::from_integer(i.clone())
}

// ---------------------------------------------------------------------------
// Homogeneous dual simplex (feasibility engine)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ColKind {
    Strict(usize),
    EqPos(usize),
    EqNeg(usize),
    Lower(usize),
    Upper(usize),
}

/// Simplex state for the homogeneous dual. All basic values are permanently
/// zero, so feasibility never needs restoring and cloning the state gives a
/// valid warm start after a cost change.
#[derive(Clone)]
struct HomSolver {
    nrows: usize,
    /// Original variable index carried by each kept row.
    row_var: Vec<usize>,
    kinds: Vec<ColKind>,
    /// Current tableau columns `B^{-1} a_j`, column-major over kept rows.
    tab: Vec<Vec<BigRational>>,
    /// Original columns restricted to kept rows (for multiplier extraction).
    orig: Vec<Vec<BigRational>>,
    cost: Vec<BigRational>,
    /// Reduced costs.
    red: Vec<BigRational>,
    /// Basic column per row.
    basic: Vec<usize>,
    in_basis: Vec<bool>,
}

enum HomOutcome {
    Optimal,
    Unbounded { enter: usize },
}

impl HomSolver {
    /// Builds columns for `sys`, picks an initial basis by Gaussian pivots,
    /// and drops linearly dependent rows.
    fn new(sys: &LinearSystem, use_box: bool) -> HomSolver {
        let m = sys.num_vars;
        let mut kinds = Vec::new();
        let mut full_cols: Vec<Vec<BigRational>> = Vec::new();
        let mut cost: Vec<BigRational> = Vec::new();

        for (i, row) in sys.strict.iter().enumerate() {
            kinds.push(ColKind::Strict(i));
            full_cols.push(row.iter().map(rat).collect());
            cost.push(BigRational::one());
        }
        for (i, row) in sys.eq.iter().enumerate() {
            kinds.push(ColKind::EqPos(i));
            full_cols.push(row.iter().map(rat).collect());
            cost.push(BigRational::zero());
            kinds.push(ColKind::EqNeg(i));
            full_cols.push(row.iter().map(|x| -rat(x)).collect());
            cost.push(BigRational::zero());
        }
        if use_box {
            if let Some(lo) = &sys.lower {
                for (j, l) in lo.iter().enumerate() {
                    kinds.push(ColKind::Lower(j));
                    let mut col = vec![BigRational::zero(); m];
                    col[j] = BigRational::one();
                    full_cols.push(col);
                    cost.push(rat(l));
                }
            }
            if let Some(hi) = &sys.upper {
                for (j, h) in hi.iter().enumerate() {
                    kinds.push(ColKind::Upper(j));
                    let mut col = vec![BigRational::zero(); m];
                    col[j] = -BigRational::one();
                    full_cols.push(col);
                    cost.push(-rat(h));
                }
            }
        }

        let ncols = full_cols.len();
        let mut tab = full_cols.clone();
        let mut in_basis = vec![false; ncols];
        let mut basic_of_row: Vec<Option<usize>> = vec![None; m];

        // Gaussian pivots to form a starting basis; rows with no pivot are
        // linearly dependent on the others and get dropped (their primal
        // coordinate is fixed to zero, which the remaining constraints
        // already force to be consistent).
        for i in 0..m {
            let Some(j) = (0..ncols).find(|&j| !in_basis[j] && !tab[j][i].is_zero()) else {
                continue;
            };
            pivot_cols(&mut tab, i, j);
            in_basis[j] = true;
            basic_of_row[i] = Some(j);
        }

        let kept: Vec<usize> = (0..m).filter(|&i| basic_of_row[i].is_some()).collect();
        let compact = |col: &Vec<BigRational>| -> Vec<BigRational> {
            kept.iter().map(|&i| col[i].clone()).collect()
        };
        let tab: Vec<Vec<BigRational>> = tab.iter().map(compact).collect();
        let orig: Vec<Vec<BigRational>> = full_cols.iter().map(compact).collect();
        let basic: Vec<usize> = kept.iter().map(|&i| basic_of_row[i].unwrap()).collect();

        let mut solver = HomSolver {
            nrows: kept.len(),
            row_var: kept,
            kinds,
            tab,
            orig,
            cost,
            red: vec![BigRational::zero(); ncols],
            basic,
            in_basis,
        };
        solver.recompute_reduced_costs();
        solver
    }

    fn recompute_reduced_costs(&mut self) {
        let cb: Vec<BigRational> = self.basic.iter().map(|&j| self.cost[j].clone()).collect();
        for j in 0..self.tab.len() {
            let mut r = self.cost[j].clone();
            for (t, c) in self.tab[j].iter().zip(&cb) {
                if !t.is_zero() && !c.is_zero() {
                    r -= c * t;
                }
            }
            self.red[j] = r;
        }
    }

    /// Replaces the box costs with new bounds and refreshes pricing.
    fn set_box(&mut self, lo: &[BigInt], hi: &[BigInt]) {
        for j in 0..self.kinds.len() {
            match self.kinds[j] {
                ColKind::Lower(v) => self.cost[j] = rat(&lo[v]),
                ColKind::Upper(v) => self.cost[j] = -rat(&hi[v]),
                _ => {}
            }
        }
        self.recompute_reduced_costs();
    }

    /// Bland's rule until optimal or an unbounded improving ray appears.
    fn optimize(&mut self) -> HomOutcome {
        loop {
            let Some(enter) = (0..self.tab.len())
                .find(|&j| !self.in_basis[j] && self.red[j] > BigRational::zero())
            else {
                return HomOutcome::Optimal;
            };
            // All basic values are zero, so every eligible ratio is zero;
            // Bland leaves the positive-coefficient row whose basic column
            // index is smallest.
            let leave = (0..self.nrows)
                .filter(|&i| self.tab[enter][i] > BigRational::zero())
                .min_by_key(|&i| self.basic[i]);
            let Some(row) = leave else {
                return HomOutcome::Unbounded { enter };
            };
            self.pivot(enter, row);
        }
    }

    fn pivot(&mut self, enter: usize, row: usize) {
        let ecol = self.tab[enter].clone();
        let pv = ecol[row].clone();
        for col in self.tab.iter_mut() {
            if col[row].is_zero() {
                continue;
            }
            let cr = &col[row] / &pv;
            for (k, e) in ecol.iter().enumerate() {
                if k != row && !e.is_zero() {
                    let delta = e * &cr;
                    col[k] -= delta;
                }
            }
            col[row] = cr;
        }
        let rf = self.red[enter].clone();
        if !rf.is_zero() {
            for j in 0..self.red.len() {
                if !self.tab[j][row].is_zero() {
                    let delta = &rf * &self.tab[j][row];
                    self.red[j] -= delta;
                }
            }
        }
        self.in_basis[self.basic[row]] = false;
        self.in_basis[enter] = true;
        self.basic[row] = enter;
    }

    /// At optimality, the equality-row multipliers are a feasible primal
    /// point: solve `Bk^T pi = c_B` over the kept rows, zero elsewhere.
    fn primal_point(&self, num_vars: usize) -> Vec<BigRational> {
        let n = self.nrows;
        // Build the transposed basis matrix with the right-hand side c_B.
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let j = self.basic[r];
                let mut row: Vec<BigRational> = (0..n).map(|i| self.orig[j][i].clone()).collect();
                row.push(self.cost[j].clone());
                row
            })
            .collect();
        // Gaussian elimination with exact pivots.
        let mut pivot_row_of_col = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for col in 0..n {
            let Some(pr) = (0..n).find(|&r| !used[r] && !m[r][col].is_zero()) else {
                continue;
            };
            used[pr] = true;
            pivot_row_of_col[col] = pr;
            let pv = m[pr][col].clone();
            for x in m[pr].iter_mut() {
                *x /= pv.clone();
            }
            let prow = m[pr].clone();
            for (r, mrow) in m.iter_mut().enumerate() {
                if r != pr && !mrow[col].is_zero() {
                    let f = mrow[col].clone();
                    for (x, p) in mrow.iter_mut().zip(prow.iter()) {
                        *x -= &f * p;
                    }
                }
            }
        }
        let mut point = vec![BigRational::zero(); num_vars];
        for col in 0..n {
            if pivot_row_of_col[col] != usize::MAX {
                point[self.row_var[col]] = m[pivot_row_of_col[col]][n].clone();
            }
        }
        point
    }

    /// The improving ray at an unbounded pricing step, over columns.
    fn ray(&self, enter: usize) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); self.tab.len()];
        x[enter] = BigRational::one();
        for i in 0..self.nrows {
            let d = &self.tab[enter][i];
            debug_assert!(*d <= BigRational::zero(), "ray would violate a sign bound");
            if !d.is_zero() {
                x[self.basic[i]] = -d.clone();
            }
        }
        x
    }
}

fn pivot_cols(tab: &mut [Vec<BigRational>], row: usize, enter: usize) {
    let ecol = tab[enter].clone();
    let pv = ecol[row].clone();
    for col in tab.iter_mut() {
        if col[row].is_zero() {
            continue;
        }
        let cr = &col[row] / &pv;
        for (k, e) in ecol.iter().enumerate() {
            if k != row && !e.is_zero() {
                let delta = e * &cr;
                col[k] -= delta;
            }
        }
        col[row] = cr;
    }
}

/// Scales a rational vector to coprime integers (multiply by the common
/// denominator, divide by the common gcd).
pub fn scale_to_integers(xs: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = xs.iter().map(|x| (x * rat(&l)).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.iter().map(|v| v / &g).collect()
}

fn extract_certificate(solver: &HomSolver, ray: &[BigRational], sys: &LinearSystem) -> (Vec<BigInt>, Vec<BigInt>) {
    let ints = scale_to_integers(ray);
    let mut y = vec![BigInt::zero(); sys.strict.len()];
    let mut z = vec![BigInt::zero(); sys.eq.len()];
    for (j, kind) in solver.kinds.iter().enumerate() {
        match *kind {
            ColKind::Strict(i) => y[i] += &ints[j],
            ColKind::EqPos(i) => z[i] += &ints[j],
            ColKind::EqNeg(i) => z[i] -= &ints[j],
            ColKind::Lower(_) | ColKind::Upper(_) => {
                debug_assert!(ints[j].is_zero(), "box multipliers in a cone certificate")
            }
        }
    }
    (y, z)
}

/// Decides rational feasibility of the system (with its box, if any).
pub fn lp_feasible(sys: &LinearSystem) -> LpOutcome {
    sys.assert_shape();
    if sys.has_box() {
        let (lo, hi) = default_bounds(sys);
        if lo.iter().zip(hi.iter()).any(|(l, h)| l > h) {
            // The box itself is contradictory; classify against the cone.
            return match lp_feasible_unboxed(sys) {
                LpOutcome::Feasible(_) => LpOutcome::BoxInfeasible,
                other => other,
            };
        }
        let mut solver = HomSolver::new(sys, true);
        solver.set_box(&lo, &hi);
        match solver.optimize() {
            HomOutcome::Optimal => LpOutcome::Feasible(solver.primal_point(sys.num_vars)),
            HomOutcome::Unbounded { .. } => match lp_feasible_unboxed(sys) {
                LpOutcome::Feasible(_) => LpOutcome::BoxInfeasible,
                other => other,
            },
        }
    } else {
        lp_feasible_unboxed(sys)
    }
}

fn lp_feasible_unboxed(sys: &LinearSystem) -> LpOutcome {
    let mut solver = HomSolver::new(sys, false);
    match solver.optimize() {
        HomOutcome::Optimal => LpOutcome::Feasible(solver.primal_point(sys.num_vars)),
        HomOutcome::Unbounded { enter } => {
            let ray = solver.ray(enter);
            let (y, z) = extract_certificate(&solver, &ray, sys);
            debug_assert!(y.iter().sum::<BigInt>() >= BigInt::one());
            LpOutcome::ConeInfeasible { y, z }
        }
    }
}

fn default_bounds(sys: &LinearSystem) -> (Vec<BigInt>, Vec<BigInt>) {
    let lo = sys
        .lower
        .clone()
        .expect("boxed solve requires lower bounds");
    let hi = sys
        .upper
        .clone()
        .expect("boxed solve requires upper bounds");
    (lo, hi)
}

/// Searches for an integral point inside a boxed system.
///
/// Branch-and-bound: branch on the most fractional coordinate (lowest index
/// on ties), explore the lower branch first, warm-start every node from its
/// parent's basis. Requires both bounds, which guarantee termination.
pub fn ilp_feasible(sys: &LinearSystem) -> Option<Vec<BigInt>> {
    sys.assert_shape();
    let (lo, hi) = default_bounds(sys);
    let root = HomSolver::new(sys, true);
    let mut stack: Vec<(Vec<BigInt>, Vec<BigInt>, HomSolver)> = vec![(lo, hi, root)];
    while let Some((lo, hi, mut solver)) = stack.pop() {
        if lo.iter().zip(hi.iter()).any(|(l, h)| l > h) {
            continue;
        }
        solver.set_box(&lo, &hi);
        match solver.optimize() {
            HomOutcome::Unbounded { .. } => continue, // this node is infeasible
            HomOutcome::Optimal => {
                let point = solver.primal_point(sys.num_vars);
                match most_fractional(&point) {
                    None => {
                        return Some(point.iter().map(|x| x.to_integer()).collect());
                    }
                    Some(j) => {
                        let f = point[j].floor().to_integer();
                        let mut lo_up = lo.clone();
                        lo_up[j] = (&f) + 1;
                        let mut hi_dn = hi.clone();
                        hi_dn[j] = f;
                        // lower branch explored first: push it last
                        stack.push((lo_up, hi, solver.clone()));
                        stack.push((lo, hi_dn, solver));
                    }
                }
            }
        }
    }
    None
}

/// Index of the coordinate farthest from an integer, if any is fractional.
fn most_fractional(point: &[BigRational]) -> Option<usize> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut best: Option<(BigRational, usize)> = None;
    for (j, x) in point.iter().enumerate() {
        if x.is_integer() {
            continue;
        }
        let frac = x - x.floor();
        let dist = if frac > half { BigRational::one() - frac } else { frac };
        match &best {
            Some((d, _)) if *d >= dist => {}
            _ => best = Some((dist, j)),
        }
    }
    best.map(|(_, j)| j)
}

// ---------------------------------------------------------------------------
// Two-phase primal simplex (optimization engine)
// ---------------------------------------------------------------------------

enum Lp2Result {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<BigRational>, value: BigRational },
}

/// Minimizes `c . x` subject to `rows` (over nonnegative `x`).
/// Each row is `(coeffs, is_eq, rhs)`; inequality rows mean `coeffs . x >= rhs`.
fn solve_lp2(nvars: usize, rows: &[(Vec<BigRational>, bool, BigRational)], c: &[BigRational]) -> Lp2Result {
    let nrows = rows.len();
    // Columns: structural vars, then one slack per inequality, then artificials.
    let mut slack_of_row: Vec<Option<usize>> = vec![None; nrows];
    let mut nslack = 0;
    for (i, (_, is_eq, _)) in rows.iter().enumerate() {
        if !*is_eq {
            slack_of_row[i] = Some(nslack);
            nslack += 1;
        }
    }
    let width = nvars + nslack;
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(nrows);
    let mut b: Vec<BigRational> = Vec::with_capacity(nrows);
    for (i, (coeffs, _, rhs)) in rows.iter().enumerate() {
        let mut row = vec![BigRational::zero(); width];
        row[..nvars].clone_from_slice(coeffs);
        if let Some(s) = slack_of_row[i] {
            row[nvars + s] = -BigRational::one();
        }
        let mut rhs = rhs.clone();
        if rhs < BigRational::zero() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            rhs = -rhs;
        }
        a.push(row);
        b.push(rhs);
    }

    // Basis: a slack if its coefficient came out +1, else an artificial.
    let mut basic: Vec<usize> = Vec::with_capacity(nrows);
    let mut nart = 0;
    for i in 0..nrows {
        let slack_ok = slack_of_row[i]
            .map(|s| a[i][nvars + s] == BigRational::one())
            .unwrap_or(false);
        if slack_ok {
            basic.push(nvars + slack_of_row[i].unwrap());
        } else {
            // extend all rows with the artificial column
            for (r, row) in a.iter_mut().enumerate() {
                row.push(if r == i {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            basic.push(width + nart);
            nart += 1;
        }
    }
    let total = width + nart;

    // Phase 1: minimize the artificial sum.
    if nart > 0 {
        let mut c1 = vec![BigRational::zero(); total];
        c1[width..].fill(BigRational::one());
        match simplex_min(&mut a, &mut b, &mut basic, &c1, &vec![false; total]) {
            SimplexEnd::Unbounded => unreachable!("phase-1 objective is bounded below by zero"),
            SimplexEnd::Optimal(value) => {
                if value > BigRational::zero() {
                    return Lp2Result::Infeasible;
                }
            }
        }
        // Pivot leftover artificials out of the basis, dropping redundant rows.
        let mut drop_rows = Vec::new();
        for i in 0..basic.len() {
            if basic[i] >= width {
                if let Some(j) = (0..width).find(|&j| !a[i][j].is_zero()) {
                    pivot_rows(&mut a, &mut b, i, j);
                    basic[i] = j;
                } else {
                    drop_rows.push(i);
                }
            }
        }
        for &i in drop_rows.iter().rev() {
            a.remove(i);
            b.remove(i);
            basic.remove(i);
        }
    }

    // Phase 2: the real objective; artificials are banned from re-entering.
    let mut c2 = vec![BigRational::zero(); total];
    c2[..nvars].clone_from_slice(c);
    let mut banned = vec![false; total];
    for flag in banned.iter_mut().take(total).skip(width) {
        *flag = true;
    }
    match simplex_min(&mut a, &mut b, &mut basic, &c2, &banned) {
        SimplexEnd::Unbounded => Lp2Result::Unbounded,
        SimplexEnd::Optimal(value) => {
            let mut x = vec![BigRational::zero(); nvars];
            for (i, &bj) in basic.iter().enumerate() {
                if bj < nvars {
                    x[bj] = b[i].clone();
                }
            }
            Lp2Result::Optimal { x, value }
        }
    }
}

enum SimplexEnd {
    Optimal(BigRational),
    Unbounded,
}

/// Bland-rule minimization on an explicit row tableau.
fn simplex_min(
    a: &mut [Vec<BigRational>],
    b: &mut [BigRational],
    basic: &mut [usize],
    c: &[BigRational],
    banned: &[bool],
) -> SimplexEnd {
    let nrows = a.len();
    let ncols = c.len();
    loop {
        let cb: Vec<BigRational> = basic.iter().map(|&j| c[j].clone()).collect();
        let mut enter = None;
        for j in 0..ncols {
            if banned[j] || basic.contains(&j) {
                continue;
            }
            let mut r = c[j].clone();
            for i in 0..nrows {
                if !cb[i].is_zero() && !a[i][j].is_zero() {
                    r -= &cb[i] * &a[i][j];
                }
            }
            if r < BigRational::zero() {
                enter = Some(j);
                break;
            }
        }
        let Some(j) = enter else {
            let mut value = BigRational::zero();
            for i in 0..nrows {
                if !cb[i].is_zero() {
                    value += &cb[i] * &b[i];
                }
            }
            return SimplexEnd::Optimal(value);
        };
        let mut leave: Option<(BigRational, usize)> = None;
        for i in 0..nrows {
            if a[i][j] > BigRational::zero() {
                let ratio = &b[i] / &a[i][j];
                match &leave {
                    Some((best, bi)) => {
                        if ratio < *best || (ratio == *best && basic[i] < basic[*bi]) {
                            leave = Some((ratio, i));
                        }
                    }
                    None => leave = Some((ratio, i)),
                }
            }
        }
        let Some((_, row)) = leave else {
            return SimplexEnd::Unbounded;
        };
        pivot_rows_slice(a, b, row, j);
        basic[row] = j;
    }
}

fn pivot_rows(a: &mut Vec<Vec<BigRational>>, b: &mut Vec<BigRational>, row: usize, col: usize) {
    pivot_rows_slice(a.as_mut_slice(), b.as_mut_slice(), row, col);
}

fn pivot_rows_slice(a: &mut [Vec<BigRational>], b: &mut [BigRational], row: usize, col: usize) {
    let pv = a[row][col].clone();
    for x in a[row].iter_mut() {
        *x /= pv.clone();
    }
    b[row] /= pv;
    let prow = a[row].clone();
    let pb = b[row].clone();
    for i in 0..a.len() {
        if i == row || a[i][col].is_zero() {
            continue;
        }
        let f = a[i][col].clone();
        for (x, p) in a[i].iter_mut().zip(prow.iter()) {
            *x -= &f * p;
        }
        b[i] -= &f * &pb;
    }
}

/// Minimizes an integer objective over the integral points of the system.
///
/// Returns `Ok(None)` when no integral point exists and `Err(Unbounded)`
/// when the relaxation is unbounded below. Termination is guaranteed for
/// nonnegative objectives (the incumbent then bounds every variable with a
/// positive coefficient); all in-crate callers pass all-ones objectives.
pub fn ilp_minimize(objective: &[BigInt], sys: &LinearSystem) -> Result<Option<IlpOptimum>, IlpError> {
    sys.assert_shape();
    assert_eq!(objective.len(), sys.num_vars);
    let n = sys.num_vars;
    let lo0: Vec<BigInt> = sys.lower.clone().unwrap_or_else(|| vec![BigInt::zero(); n]);
    let hi0: Vec<Option<BigInt>> = match &sys.upper {
        Some(h) => h.iter().cloned().map(Some).collect(),
        None => vec![None; n],
    };
    let c: Vec<BigRational> = objective.iter().map(rat).collect();
    let all_nonneg = objective.iter().all(|x| !x.is_negative());

    let mut best: Option<IlpOptimum> = None;
    let mut stack: Vec<(Vec<BigInt>, Vec<Option<BigInt>>)> = vec![(lo0, hi0)];
    let mut at_root = true;
    while let Some((lo, hi)) = stack.pop() {
        let root = at_root;
        at_root = false;
        let mut hi = hi;
        // Once an incumbent exists, a nonnegative objective caps every
        // positively weighted variable; this is what bounds the search tree.
        if all_nonneg {
            if let Some(inc) = &best {
                let budget: BigInt = &inc.value - 1;
                for j in 0..n {
                    if objective[j].is_positive() {
                        let cap = budget.div_floor(&objective[j]);
                        let tighter = hi[j].as_ref().map(|h| h.min(&cap) == h).unwrap_or(false);
                        if !tighter {
                            hi[j] = Some(cap.clone());
                        }
                    }
                }
            }
        }
        if lo
            .iter()
            .zip(hi.iter())
            .any(|(l, h)| h.as_ref().is_some_and(|h| l > h))
        {
            continue;
        }

        // Shift x = lo + x' and assemble rows over x' >= 0.
        let mut rows: Vec<(Vec<BigRational>, bool, BigRational)> = Vec::new();
        for row in &sys.strict {
            let shift: BigInt = row.iter().zip(lo.iter()).map(|(a, l)| a * l).sum();
            rows.push((row.iter().map(rat).collect(), false, rat(&(BigInt::one() - shift))));
        }
        for row in &sys.eq {
            let shift: BigInt = row.iter().zip(lo.iter()).map(|(a, l)| a * l).sum();
            rows.push((row.iter().map(rat).collect(), true, rat(&-shift)));
        }
        for j in 0..n {
            if let Some(h) = &hi[j] {
                // x_j <= h  becomes  -x'_j >= lo_j - h
                let mut coeffs = vec![BigRational::zero(); n];
                coeffs[j] = -BigRational::one();
                rows.push((coeffs, false, rat(&(&lo[j] - h))));
            }
        }

        match solve_lp2(n, &rows, &c) {
            Lp2Result::Infeasible => continue,
            Lp2Result::Unbounded => {
                if root {
                    return Err(IlpError::Unbounded);
                }
                unreachable!("child node unbounded though the root was bounded");
            }
            Lp2Result::Optimal { x, value } => {
                let offset: BigInt = objective.iter().zip(lo.iter()).map(|(a, l)| a * l).sum();
                let total = value + rat(&offset);
                if let Some(inc) = &best {
                    if total >= rat(&inc.value) {
                        continue;
                    }
                }
                let shifted: Vec<BigRational> =
                    x.iter().zip(lo.iter()).map(|(xi, l)| xi + rat(l)).collect();
                match most_fractional(&shifted) {
                    None => {
                        let point: Vec<BigInt> = shifted.iter().map(|v| v.to_integer()).collect();
                        let value: BigInt = objective
                            .iter()
                            .zip(point.iter())
                            .map(|(a, p)| a * p)
                            .sum();
                        best = Some(IlpOptimum { value, point });
                    }
                    Some(j) => {
                        let f = shifted[j].floor().to_integer();
                        let mut lo_up = lo.clone();
                        lo_up[j] = (&f) + 1;
                        let mut hi_dn = hi.clone();
                        let cap = match &hi_dn[j] {
                            Some(h) => h.clone().min(f.clone()),
                            None => f.clone(),
                        };
                        hi_dn[j] = Some(cap);
                        stack.push((lo_up, hi));
                        stack.push((lo, hi_dn));
                    }
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn row(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| bi(x)).collect()
    }

    #[test]
    fn single_strict_row_yields_unit_point() {
        let sys = LinearSystem::cone(1, vec![row(&[1])], vec![]);
        match lp_feasible(&sys) {
            LpOutcome::Feasible(p) => {
                assert_eq!(p, vec![BigRational::from_integer(bi(1))]);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn opposing_rows_are_cone_infeasible() {
        let sys = LinearSystem::cone(1, vec![row(&[1]), row(&[-1])], vec![]);
        match lp_feasible(&sys) {
            LpOutcome::ConeInfeasible { y, z } => {
                assert_eq!(y, vec![bi(1), bi(1)]);
                assert!(z.is_empty());
                // y^T A = 1*(1) + 1*(-1) = 0
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn box_infeasible_is_distinguished() {
        // w >= 1 is satisfiable, but not inside [-1/2's integer box shrunk to 0]
        let sys = LinearSystem {
            num_vars: 1,
            strict: vec![row(&[1])],
            eq: vec![],
            lower: Some(row(&[-0])),
            upper: Some(row(&[0])),
        };
        assert_eq!(lp_feasible(&sys), LpOutcome::BoxInfeasible);
    }

    #[test]
    fn equalities_are_respected() {
        // w1 + w2 >= 1, w1 - w2 = 0
        let sys = LinearSystem::cone(2, vec![row(&[1, 1])], vec![row(&[1, -1])]);
        match lp_feasible(&sys) {
            LpOutcome::Feasible(p) => {
                assert_eq!(p[0], p[1]);
                assert!(&p[0] + &p[1] >= BigRational::one());
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn ilp_feasible_picks_the_integral_corner() {
        let sys = LinearSystem {
            num_vars: 2,
            strict: vec![row(&[1, 1])],
            eq: vec![row(&[1, -1])],
            lower: Some(row(&[-1, -1])),
            upper: Some(row(&[1, 1])),
        };
        assert_eq!(ilp_feasible(&sys), Some(vec![bi(1), bi(1)]));
    }

    #[test]
    fn ilp_feasible_detects_emptiness() {
        // 2w >= 1 with w in [-0, 0] has no integer (or rational) solution
        let sys = LinearSystem {
            num_vars: 1,
            strict: vec![row(&[2])],
            eq: vec![],
            lower: Some(row(&[0])),
            upper: Some(row(&[0])),
        };
        assert_eq!(ilp_feasible(&sys), None);
    }

    #[test]
    fn ilp_minimize_covers_the_unit_simplex() {
        // minimize y1 + y2 subject to y1 + y2 >= 1, y >= 0
        let sys = LinearSystem {
            num_vars: 2,
            strict: vec![row(&[1, 1])],
            eq: vec![],
            lower: Some(row(&[0, 0])),
            upper: None,
        };
        let opt = ilp_minimize(&row(&[1, 1]), &sys).unwrap().unwrap();
        assert_eq!(opt.value, bi(1));
        assert_eq!(opt.point, vec![bi(1), bi(0)]);
    }

    #[test]
    fn ilp_minimize_reports_infeasible_as_none() {
        // y >= 1 and -y >= 1 cannot both hold for y >= 0
        let sys = LinearSystem {
            num_vars: 1,
            strict: vec![row(&[1]), row(&[-1])],
            eq: vec![],
            lower: Some(row(&[0])),
            upper: None,
        };
        assert_eq!(ilp_minimize(&row(&[1]), &sys).unwrap(), None);
    }

    #[test]
    fn ilp_minimize_flags_unbounded_objectives() {
        let sys = LinearSystem {
            num_vars: 1,
            strict: vec![row(&[1])],
            eq: vec![],
            lower: Some(row(&[0])),
            upper: None,
        };
        assert_eq!(ilp_minimize(&row(&[-1]), &sys), Err(IlpError::Unbounded));
    }

    #[test]
    fn fractional_lp_point_still_rounds_to_integer_solution() {
        // 2w1 + 2w2 >= 1 (LP corner at 1/2) with box [0,1]^2
        let sys = LinearSystem {
            num_vars: 2,
            strict: vec![row(&[2, 2])],
            eq: vec![],
            lower: Some(row(&[0, 0])),
            upper: Some(row(&[1, 1])),
        };
        let p = ilp_feasible(&sys).expect("integral point exists");
        let val = &p[0] * 2 + &p[1] * 2;
        assert!(val >= bi(1));
    }
}
