//! Directed multigraphs, game arenas, and simple-cycle machinery.
//!
//! Graphs here are finite directed multigraphs: parallel edges and self-loops
//! are allowed, and every edge carries its own opaque string id. A *simple
//! cycle* visits pairwise distinct vertices and is identified by its edge-id
//! set, so two parallel edges give two distinct 2-cycles between the same
//! vertex pair and a self-loop is a 1-cycle.
//!
//! Cycle enumeration follows Johnson's algorithm (Johnson, "Finding all the
//! elementary circuits of a directed graph", SIAM J. Comput. 1975), extended
//! to multigraphs by iterating over out-edges instead of successor vertices
//! and emitting self-loops as 1-cycles up front. Enumeration is capped by a
//! caller-supplied budget because the cycle count can be exponential.
//!
//! All orders are deterministic: vertices and edges keep insertion order,
//! derived listings sort lexicographically on ids, and strongly connected
//! components come out in reverse topological order (bottom components
//! first), which is the order the game pipeline consumes them in.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Opaque vertex identifier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub String);

/// Opaque edge identifier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub String);

impl VertexId {
    /// The id as a plain string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl EdgeId {
    /// The id as a plain string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(String::from(s))
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId(String::from(s))
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for EdgeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// A directed edge. Parallel edges and self-loops are legal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    /// Unique id of this edge.
    pub id: EdgeId,
    /// Source vertex id.
    pub src: VertexId,
    /// Target vertex id.
    pub dst: VertexId,
}

/// Exact rational edge weights. Integers are rationals with denominator 1.
pub type WeightFn = BTreeMap<EdgeId, BigRational>;

/// Nonnegative integer edge priorities (max-parity semantics).
pub type PriorityFn = BTreeMap<EdgeId, u64>;

/// Builds a [`WeightFn`] from integer weights keyed by edge id.
pub fn weights_from_i64<'a, I>(pairs: I) -> WeightFn
where
    I: IntoIterator<Item = (&'a str, i64)>,
{
    pairs
        .into_iter()
        .map(|(id, w)| (EdgeId::from(id), BigRational::from_integer(BigInt::from(w))))
        .collect()
}

/// Errors from graph validation, construction, and enumeration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// Two vertices share an id.
    DuplicateVertexId(VertexId),
    /// Two edges share an id.
    DuplicateEdgeId(EdgeId),
    /// An edge endpoint names a vertex that does not exist.
    DanglingEndpoint {
        /// The offending edge.
        edge: EdgeId,
        /// The missing endpoint.
        vertex: VertexId,
    },
    /// The graph is not strongly connected but was required to be.
    NotStronglyConnected,
    /// An arena vertex has no outgoing edge.
    NoOutEdge(VertexId),
    /// An edge-id list does not describe a simple cycle of the graph.
    NotACycle(&'static str),
    /// An id was not found in the graph.
    UnknownId(String),
    /// Cycle enumeration exceeded its budget.
    CycleBudgetExceeded {
        /// The budget that was exhausted.
        budget: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertexId(v) => write!(f, "duplicate vertex id {v}"),
            GraphError::DuplicateEdgeId(e) => write!(f, "duplicate edge id {e}"),
            GraphError::DanglingEndpoint { edge, vertex } => {
                write!(f, "edge {edge} references unknown vertex {vertex}")
            }
            GraphError::NotStronglyConnected => f.write_str("graph is not strongly connected"),
            GraphError::NoOutEdge(v) => write!(f, "vertex {v} has no outgoing edge"),
            GraphError::NotACycle(why) => write!(f, "edge set is not a simple cycle: {why}"),
            GraphError::UnknownId(id) => write!(f, "unknown id {id}"),
            GraphError::CycleBudgetExceeded { budget } => {
                write!(f, "cycle enumeration exceeded budget of {budget}")
            }
        }
    }
}

/// Default cap on the number of enumerated simple cycles.
pub const DEFAULT_CYCLE_BUDGET: usize = 1_000_000;

/// A finite directed multigraph with string-identified vertices and edges.
///
/// Construction does not validate; call [`validate`] after building from
/// untrusted input. Vertices and edges keep their insertion order.
#[derive(Clone, Debug)]
pub struct Digraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    vertex_index: BTreeMap<VertexId, usize>,
    edge_index: BTreeMap<EdgeId, usize>,
    out_edges: Vec<Vec<usize>>,
}

impl Digraph {
    /// Assembles a graph from raw parts without validating them.
    pub fn from_parts(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        let vertex_index: BTreeMap<VertexId, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            if let Some(&src) = vertex_index.get(&e.src) {
                out_edges[src].push(i);
            }
        }
        let edge_index = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        Digraph {
            vertices,
            edges,
            vertex_index,
            edge_index,
            out_edges,
        }
    }

    /// Convenience constructor from string slices, for tests and generators.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        let vs = vertices.iter().map(|v| VertexId::from(*v)).collect();
        let es = edges
            .iter()
            .map(|(id, src, dst)| Edge {
                id: EdgeId::from(*id),
                src: VertexId::from(*src),
                dst: VertexId::from(*dst),
            })
            .collect();
        Digraph::from_parts(vs, es)
    }

    /// Vertices in insertion order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Looks up a vertex position by id.
    pub fn vertex_pos(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    /// Looks up an edge position by id.
    pub fn edge_pos(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    /// The edge stored at `pos`.
    pub fn edge_at(&self, pos: usize) -> &Edge {
        &self.edges[pos]
    }

    /// Looks up an edge by id.
    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edge_pos(id).map(|i| &self.edges[i])
    }

    /// Positions of the out-edges of the vertex at `vpos`, in insertion order.
    pub fn out_edge_positions(&self, vpos: usize) -> &[usize] {
        &self.out_edges[vpos]
    }

    /// Out-edges of a vertex by id. Empty if the vertex is unknown.
    pub fn out_edges_of(&self, v: &str) -> Vec<&Edge> {
        match self.vertex_pos(v) {
            Some(i) => self.out_edges[i].iter().map(|&e| &self.edges[e]).collect(),
            None => Vec::new(),
        }
    }

    /// The subgraph induced by a vertex set (keeps edges with both endpoints inside).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Digraph {
        let vertices: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|v| keep.contains(*v))
            .cloned()
            .collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.src) && keep.contains(&e.dst))
            .cloned()
            .collect();
        Digraph::from_parts(vertices, edges)
    }

    /// The subgraph keeping only the given edges (all vertices retained).
    pub fn edge_subgraph(&self, keep: &BTreeSet<EdgeId>) -> Digraph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.id))
            .cloned()
            .collect();
        Digraph::from_parts(self.vertices.clone(), edges)
    }
}

/// Checks id uniqueness, endpoint integrity, and optionally strong connectivity.
pub fn validate(graph: &Digraph, require_strongly_connected: bool) -> Result<(), GraphError> {
    let mut seen_v = BTreeSet::new();
    for v in graph.vertices() {
        if !seen_v.insert(v.clone()) {
            return Err(GraphError::DuplicateVertexId(v.clone()));
        }
    }
    let mut seen_e = BTreeSet::new();
    for e in graph.edges() {
        if !seen_e.insert(e.id.clone()) {
            return Err(GraphError::DuplicateEdgeId(e.id.clone()));
        }
        for endpoint in [&e.src, &e.dst] {
            if !seen_v.contains(endpoint) {
                return Err(GraphError::DanglingEndpoint {
                    edge: e.id.clone(),
                    vertex: endpoint.clone(),
                });
            }
        }
    }
    if require_strongly_connected && sccs(graph).len() != 1 {
        return Err(GraphError::NotStronglyConnected);
    }
    Ok(())
}

/// Strongly connected components in reverse topological order (bottom first).
///
/// Iterative Tarjan; each component's members are sorted lexicographically.
/// Tarjan completes a component only after every component reachable from it,
/// so its emission order is already the one wanted here.
pub fn sccs(graph: &Digraph) -> Vec<Vec<VertexId>> {
    let n = graph.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut components: Vec<Vec<VertexId>> = Vec::new();

    // (vertex, next out-edge offset to process)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut off)) = call.last_mut() {
            if *off < graph.out_edges[v].len() {
                let epos = graph.out_edges[v][*off];
                *off += 1;
                let w = graph.vertex_index[&graph.edges[epos].dst];
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(graph.vertices[w].clone());
                        if w == v {
                            break;
                        }
                    }
                    comp.sort();
                    components.push(comp);
                }
            }
        }
    }
    components
}

/// A simple cycle, identified by its (sorted) edge-id set.
///
/// `order` lists the edges in traversal order and `vertex_seq` the visited
/// vertices, both rotated to start at the lexicographically least vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle {
    /// Sorted edge ids; this is the cycle's identity.
    pub edges: Vec<EdgeId>,
    /// Edge ids in traversal order, starting at the least vertex.
    pub order: Vec<EdgeId>,
    /// Visited vertices in traversal order, starting at the least vertex.
    pub vertex_seq: Vec<VertexId>,
}

impl Cycle {
    /// Builds a cycle from edges in traversal order, canonicalizing rotation.
    /// `path` must already be a closed simple walk.
    fn from_path(graph: &Digraph, path: &[usize]) -> Cycle {
        debug_assert!(!path.is_empty());
        let verts: Vec<&VertexId> = path.iter().map(|&e| &graph.edges[e].src).collect();
        let least = verts
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .expect("nonempty cycle");
        let rotated: Vec<usize> = (0..path.len()).map(|k| path[(least + k) % path.len()]).collect();
        let order: Vec<EdgeId> = rotated.iter().map(|&e| graph.edges[e].id.clone()).collect();
        let vertex_seq: Vec<VertexId> = rotated
            .iter()
            .map(|&e| graph.edges[e].src.clone())
            .collect();
        let mut edges = order.clone();
        edges.sort();
        Cycle {
            edges,
            order,
            vertex_seq,
        }
    }

    /// Validates an edge-id set as a simple cycle of `graph` and canonicalizes it.
    ///
    /// The edges must exist, visit pairwise distinct vertices, and close up
    /// into a single cycle.
    pub fn from_edge_ids(graph: &Digraph, ids: &[EdgeId]) -> Result<Cycle, GraphError> {
        if ids.is_empty() {
            return Err(GraphError::NotACycle("empty edge set"));
        }
        let mut positions = Vec::with_capacity(ids.len());
        for id in ids {
            match graph.edge_pos(id.as_str()) {
                Some(p) => positions.push(p),
                None => return Err(GraphError::UnknownId(String::from(id.as_str()))),
            }
        }
        // Each vertex on the cycle has exactly one outgoing and one incoming
        // edge within the set.
        let mut next: BTreeMap<&VertexId, usize> = BTreeMap::new();
        let mut seen_dst: BTreeSet<&VertexId> = BTreeSet::new();
        for &p in &positions {
            let e = &graph.edges[p];
            if next.insert(&e.src, p).is_some() {
                return Err(GraphError::NotACycle("vertex with two outgoing edges"));
            }
            if !seen_dst.insert(&e.dst) {
                return Err(GraphError::NotACycle("vertex with two incoming edges"));
            }
        }
        // Walk from the first edge; the walk must traverse every edge and
        // return to its starting vertex.
        let mut path = Vec::with_capacity(positions.len());
        let start = &graph.edges[positions[0]].src;
        let mut at = start;
        loop {
            let &p = next
                .get(at)
                .ok_or(GraphError::NotACycle("walk leaves the edge set"))?;
            path.push(p);
            at = &graph.edges[p].dst;
            if at == start {
                break;
            }
            if path.len() > positions.len() {
                return Err(GraphError::NotACycle("walk does not close"));
            }
        }
        if path.len() != positions.len() {
            return Err(GraphError::NotACycle("edge set splits into several cycles"));
        }
        Ok(Cycle::from_path(graph, &path))
    }

    /// Number of edges on the cycle.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// True if the cycle has no edges (never holds for a valid cycle).
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True if the cycle uses the given edge.
    pub fn contains_edge(&self, id: &EdgeId) -> bool {
        self.edges.binary_search(id).is_ok()
    }

    /// The 0/1 incidence vector of the cycle over `graph`'s edge order.
    pub fn chi(&self, graph: &Digraph) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); graph.edge_count()];
        for id in &self.edges {
            if let Some(p) = graph.edge_pos(id.as_str()) {
                v[p] = BigInt::from(1);
            }
        }
        v
    }
}

/// Sums a weight function over a cycle's edges.
///
/// Fails with [`GraphError::UnknownId`] if an edge has no weight.
pub fn cycle_weight(w: &WeightFn, cycle: &Cycle) -> Result<BigRational, GraphError> {
    let mut total = BigRational::zero();
    for e in &cycle.edges {
        match w.get(e) {
            Some(x) => total += x,
            None => return Err(GraphError::UnknownId(String::from(e.as_str()))),
        }
    }
    Ok(total)
}

/// Enumerates all simple cycles with the default budget.
pub fn enumerate_cycles(graph: &Digraph) -> Result<Vec<Cycle>, GraphError> {
    enumerate_cycles_budgeted(graph, DEFAULT_CYCLE_BUDGET)
}

/// Enumerates all simple cycles, erroring once more than `budget` are found.
///
/// Output is sorted lexicographically by sorted edge-id set, independent of
/// traversal order.
pub fn enumerate_cycles_budgeted(graph: &Digraph, budget: usize) -> Result<Vec<Cycle>, GraphError> {
    let mut cycles: Vec<Cycle> = Vec::new();

    // Self-loops are 1-cycles; Johnson's circuit search below skips them.
    for (pos, e) in graph.edges().iter().enumerate() {
        if e.src == e.dst {
            if cycles.len() == budget {
                return Err(GraphError::CycleBudgetExceeded { budget });
            }
            cycles.push(Cycle::from_path(graph, &[pos]));
        }
    }

    let n = graph.vertex_count();
    for s in 0..n {
        // Work inside the SCC of s in the subgraph on vertices >= s.
        let scc = scc_of_from(graph, s);
        if scc.iter().filter(|&&b| b).count() < 2 {
            continue;
        }
        let mut state = Johnson {
            graph,
            scc: &scc,
            s,
            blocked: vec![false; n],
            blist: vec![BTreeSet::new(); n],
            path: Vec::new(),
            cycles: &mut cycles,
            budget,
        };
        state.circuit(s)?;
    }

    cycles.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(cycles)
}

/// Membership mask of the SCC containing `s` in the subgraph induced on
/// vertices with position >= `s`.
fn scc_of_from(graph: &Digraph, s: usize) -> Vec<bool> {
    let n = graph.vertex_count();
    // Forward reachability from s.
    let mut fwd = vec![false; n];
    let mut stack = vec![s];
    fwd[s] = true;
    while let Some(v) = stack.pop() {
        for &e in &graph.out_edges[v] {
            let w = graph.vertex_index[&graph.edges[e].dst];
            if w >= s && !fwd[w] {
                fwd[w] = true;
                stack.push(w);
            }
        }
    }
    // Backward reachability from s (scan all edges; desk-scale graphs).
    let mut bwd = vec![false; n];
    bwd[s] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for e in graph.edges() {
            let (Some(&u), Some(&w)) = (graph.vertex_index.get(&e.src), graph.vertex_index.get(&e.dst))
            else {
                continue;
            };
            if u >= s && w >= s && bwd[w] && !bwd[u] {
                bwd[u] = true;
                changed = true;
            }
        }
    }
    (0..n).map(|v| fwd[v] && bwd[v]).collect()
}

struct Johnson<'a> {
    graph: &'a Digraph,
    scc: &'a [bool],
    s: usize,
    blocked: Vec<bool>,
    blist: Vec<BTreeSet<usize>>,
    path: Vec<usize>,
    cycles: &'a mut Vec<Cycle>,
    budget: usize,
}

impl Johnson<'_> {
    fn unblock(&mut self, v: usize) {
        self.blocked[v] = false;
        let wake: Vec<usize> = self.blist[v].iter().copied().collect();
        self.blist[v].clear();
        for w in wake {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> Result<bool, GraphError> {
        let mut found = false;
        self.blocked[v] = true;
        for i in 0..self.graph.out_edges[v].len() {
            let epos = self.graph.out_edges[v][i];
            let w = self.graph.vertex_index[&self.graph.edges[epos].dst];
            if !self.scc[w] || w == v {
                continue; // outside the component, or a self-loop (emitted already)
            }
            if w == self.s {
                if self.cycles.len() == self.budget {
                    return Err(GraphError::CycleBudgetExceeded {
                        budget: self.budget,
                    });
                }
                self.path.push(epos);
                self.cycles.push(Cycle::from_path(self.graph, &self.path));
                self.path.pop();
                found = true;
            } else if !self.blocked[w] {
                self.path.push(epos);
                let sub = self.circuit(w)?;
                self.path.pop();
                found |= sub;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for i in 0..self.graph.out_edges[v].len() {
                let epos = self.graph.out_edges[v][i];
                let w = self.graph.vertex_index[&self.graph.edges[epos].dst];
                if self.scc[w] && w != v {
                    self.blist[w].insert(v);
                }
            }
        }
        Ok(found)
    }
}

/// Rank over the rationals of the set of all cycle incidence vectors.
///
/// Requires a strongly connected graph; the rank then equals `m - n + 1`.
/// Incidence vectors live in the circulation space, whose dimension for a
/// connected graph is `m - n + 1`, so elimination stops early once that many
/// independent vectors have been found.
pub fn cycle_space_rank(graph: &Digraph, budget: usize) -> Result<usize, GraphError> {
    validate(graph, true)?;
    let cycles = enumerate_cycles_budgeted(graph, budget)?;
    let m = graph.edge_count();
    let n = graph.vertex_count();
    let cap = m + 1 - n;
    let mut basis: Vec<Vec<BigRational>> = Vec::new(); // rows in echelon form
    let mut pivot_cols: Vec<usize> = Vec::new();
    for c in &cycles {
        if basis.len() == cap {
            break;
        }
        let mut row: Vec<BigRational> = c
            .chi(graph)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        for (b, &pc) in basis.iter().zip(pivot_cols.iter()) {
            if !row[pc].is_zero() {
                let factor = row[pc].clone();
                for j in 0..m {
                    let sub = &b[j] * &factor;
                    row[j] -= sub;
                }
            }
        }
        if let Some(pc) = (0..m).find(|&j| !row[j].is_zero()) {
            let inv = row[pc].clone();
            for x in row.iter_mut() {
                *x /= inv.clone();
            }
            basis.push(row);
            pivot_cols.push(pc);
        }
    }
    Ok(basis.len())
}

/// The two players of a mean-payoff / parity game.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Player {
    /// Maximizer: wants cycle signs in {0, +}.
    Max,
    /// Minimizer: wants cycle sign -.
    Min,
}

impl Player {
    /// The other player.
    pub fn opponent(self) -> Player {
        match self {
            Player::Max => Player::Min,
            Player::Min => Player::Max,
        }
    }
}

/// A game arena: a digraph plus vertex ownership, every vertex with an out-edge.
#[derive(Clone, Debug)]
pub struct Arena {
    /// The underlying multigraph.
    pub graph: Digraph,
    /// Owner of each vertex.
    pub owner: BTreeMap<VertexId, Player>,
}

impl Arena {
    /// Validates ownership totality and the out-edge requirement.
    pub fn new(graph: Digraph, owner: BTreeMap<VertexId, Player>) -> Result<Arena, GraphError> {
        validate(&graph, false)?;
        for (i, v) in graph.vertices().iter().enumerate() {
            if !owner.contains_key(v) {
                return Err(GraphError::UnknownId(String::from(v.as_str())));
            }
            if graph.out_edges[i].is_empty() {
                return Err(GraphError::NoOutEdge(v.clone()));
            }
        }
        Ok(Arena { graph, owner })
    }

    /// Convenience constructor; `max_vertices` lists Max's vertices, the rest are Min's.
    pub fn build(
        vertices: &[&str],
        max_vertices: &[&str],
        edges: &[(&str, &str, &str)],
    ) -> Result<Arena, GraphError> {
        let graph = Digraph::build(vertices, edges);
        let maxset: BTreeSet<&str> = max_vertices.iter().copied().collect();
        let owner = vertices
            .iter()
            .map(|v| {
                (
                    VertexId::from(*v),
                    if maxset.contains(v) {
                        Player::Max
                    } else {
                        Player::Min
                    },
                )
            })
            .collect();
        Arena::new(graph, owner)
    }

    /// Owner of a vertex; panics on unknown vertices (arena is validated).
    pub fn owner_of(&self, v: &VertexId) -> Player {
        self.owner[v]
    }

    /// The subarena induced by a vertex set.
    ///
    /// The caller must ensure every kept vertex retains an out-edge.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<Arena, GraphError> {
        let graph = self.graph.induced(keep);
        let owner = self
            .owner
            .iter()
            .filter(|(v, _)| keep.contains(*v))
            .map(|(v, &p)| (v.clone(), p))
            .collect();
        Arena::new(graph, owner)
    }
}

/// A positional strategy for one player: a choice of out-edge per owned vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrategySubgraph {
    /// Whose strategy this is.
    pub player: Player,
    /// Chosen out-edge per vertex owned by `player`.
    pub choice: BTreeMap<VertexId, EdgeId>,
}

impl StrategySubgraph {
    /// The edges of the induced subgraph: all opponent edges plus the choices.
    pub fn edge_ids(&self, arena: &Arena) -> BTreeSet<EdgeId> {
        let mut keep = BTreeSet::new();
        for e in arena.graph.edges() {
            if arena.owner_of(&e.src) != self.player {
                keep.insert(e.id.clone());
            }
        }
        for id in self.choice.values() {
            keep.insert(id.clone());
        }
        keep
    }

    /// The induced subgraph itself.
    pub fn subgraph(&self, arena: &Arena) -> Digraph {
        arena.graph.edge_subgraph(&self.edge_ids(arena))
    }
}

/// Vertices from which `player` can force the play into `target`.
///
/// Standard attractor fixpoint: a `player` vertex joins if some edge enters
/// the set, an opponent vertex joins if all its edges do. The result includes
/// `target` itself.
pub fn attractor(arena: &Arena, target: &BTreeSet<VertexId>, player: Player) -> BTreeSet<VertexId> {
    let mut attr: BTreeSet<VertexId> = target.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for (i, v) in arena.graph.vertices().iter().enumerate() {
            if attr.contains(v) {
                continue;
            }
            let outs = &arena.graph.out_edges[i];
            let joins = if arena.owner_of(v) == player {
                outs.iter().any(|&e| attr.contains(&arena.graph.edges[e].dst))
            } else {
                outs.iter().all(|&e| attr.contains(&arena.graph.edges[e].dst))
            };
            if joins {
                attr.insert(v.clone());
                changed = true;
            }
        }
    }
    attr
}

/// Vertices reachable from `start` (inclusive) within the graph.
pub fn reachable_from(graph: &Digraph, start: &VertexId) -> BTreeSet<VertexId> {
    let mut seen = BTreeSet::new();
    let Some(s) = graph.vertex_pos(start.as_str()) else {
        return seen;
    };
    let mut stack = vec![s];
    seen.insert(graph.vertices[s].clone());
    while let Some(v) = stack.pop() {
        for &e in &graph.out_edges[v] {
            let dst = &graph.edges[e].dst;
            if let Some(w) = graph.vertex_pos(dst.as_str()) {
                if seen.insert(dst.clone()) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}
