//! The JSON file formats: graphs (with optional owners, weights,
//! priorities) and explicit cycle patterns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use cyclepat::graph::{
    enumerate_cycles_budgeted, validate, Arena, Cycle, Digraph, Edge, EdgeId, Player, PriorityFn,
    VertexId, WeightFn,
};
use cyclepat::pattern::{CyclePattern, PatternError, Sign};

use crate::exact::{emit_exact, parse_exact};
use crate::report::CmdError;

/// Who moves at a vertex.
#[derive(Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Debug)]
pub enum OwnerDoc {
    /// The maximizer.
    Max,
    /// The minimizer.
    Min,
}

/// One vertex row of a graph document.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    /// Vertex id, unique within the document.
    pub id: String,
    /// Owner, for game arenas.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub owner: Option<OwnerDoc>,
}

/// One edge row of a graph document.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    /// Edge id, unique within the document.
    pub id: String,
    /// Source vertex id.
    pub src: String,
    /// Target vertex id.
    pub dst: String,
    /// Exact weight (`"p"`, `"p/q"`, or decimal string).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    /// Nonnegative priority, for parity conditions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub priority: Option<u64>,
}

/// A directed multigraph with optional per-vertex owners and per-edge
/// weights/priorities.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    /// Vertex rows; order is preserved.
    pub vertices: Vec<VertexDoc>,
    /// Edge rows; order is preserved.
    pub edges: Vec<EdgeDoc>,
}

/// A graph document in usable form: the digraph plus whatever annotations
/// the file carried (possibly partial — commands check totality).
pub struct LoadedGraph {
    /// The digraph itself, validated.
    pub graph: Digraph,
    /// Weights for the edges that had them.
    pub weights: WeightFn,
    /// Priorities for the edges that had them.
    pub priorities: PriorityFn,
    /// Owners for the vertices that had them.
    pub owners: BTreeMap<VertexId, Player>,
}

impl GraphDocument {
    /// Validates and converts the document.
    pub fn into_loaded(self) -> Result<LoadedGraph, CmdError> {
        let vertices: Vec<VertexId> = self.vertices.iter().map(|v| VertexId::from(v.id.as_str())).collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                id: EdgeId::from(e.id.as_str()),
                src: VertexId::from(e.src.as_str()),
                dst: VertexId::from(e.dst.as_str()),
            })
            .collect();
        let graph = Digraph::from_parts(vertices, edges);
        validate(&graph, false)?;
        let mut weights = WeightFn::new();
        let mut priorities = PriorityFn::new();
        for e in &self.edges {
            if let Some(w) = &e.weight {
                let value = parse_exact(w).map_err(CmdError::Usage)?;
                weights.insert(EdgeId::from(e.id.as_str()), value);
            }
            if let Some(p) = e.priority {
                priorities.insert(EdgeId::from(e.id.as_str()), p);
            }
        }
        let mut owners = BTreeMap::new();
        for v in &self.vertices {
            if let Some(o) = v.owner {
                owners.insert(
                    VertexId::from(v.id.as_str()),
                    match o {
                        OwnerDoc::Max => Player::Max,
                        OwnerDoc::Min => Player::Min,
                    },
                );
            }
        }
        Ok(LoadedGraph {
            graph,
            weights,
            priorities,
            owners,
        })
    }

    /// Rebuilds a document from graph data; annotation maps may be partial.
    pub fn from_parts(
        graph: &Digraph,
        owners: Option<&BTreeMap<VertexId, Player>>,
        weights: Option<&WeightFn>,
        priorities: Option<&PriorityFn>,
    ) -> GraphDocument {
        let vertices = graph
            .vertices()
            .iter()
            .map(|v| VertexDoc {
                id: String::from(v.as_str()),
                owner: owners.and_then(|o| o.get(v)).map(|p| match p {
                    Player::Max => OwnerDoc::Max,
                    Player::Min => OwnerDoc::Min,
                }),
            })
            .collect();
        let edges = graph
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: String::from(e.id.as_str()),
                src: String::from(e.src.as_str()),
                dst: String::from(e.dst.as_str()),
                weight: weights.and_then(|w| w.get(&e.id)).map(emit_exact),
                priority: priorities.and_then(|p| p.get(&e.id)).copied(),
            })
            .collect();
        GraphDocument { vertices, edges }
    }
}

impl LoadedGraph {
    /// The weight function, required total.
    pub fn require_weights(&self) -> Result<&WeightFn, CmdError> {
        for e in self.graph.edges() {
            if !self.weights.contains_key(&e.id) {
                return Err(PatternError::MissingWeight(e.id.clone()).into());
            }
        }
        Ok(&self.weights)
    }

    /// The priority function, required total.
    pub fn require_priorities(&self) -> Result<&PriorityFn, CmdError> {
        for e in self.graph.edges() {
            if !self.priorities.contains_key(&e.id) {
                return Err(CmdError::domain(
                    "pattern",
                    format!("edge {} has no priority", e.id),
                ));
            }
        }
        Ok(&self.priorities)
    }

    /// The game arena, requiring a total owner assignment.
    pub fn require_arena(&self) -> Result<Arena, CmdError> {
        for v in self.graph.vertices() {
            if !self.owners.contains_key(v) {
                return Err(CmdError::domain(
                    "graph",
                    format!("vertex {v} has no owner; an arena needs one per vertex"),
                ));
            }
        }
        Ok(Arena::new(self.graph.clone(), self.owners.clone())?)
    }
}

/// One signed cycle row of a pattern document.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PatternCycleDoc {
    /// The cycle's edges, in any order that chains up.
    pub edges: Vec<String>,
    /// `"+"`, `"0"`, or `"-"`.
    pub sign: String,
}

/// An explicit cycle pattern: every simple cycle of the graph signed.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PatternDocument {
    /// Signed cycles; must cover the graph's cycles exactly.
    pub cycles: Vec<PatternCycleDoc>,
}

impl PatternDocument {
    /// Validates each row as a cycle of `graph`, checks totality against the
    /// full cycle list, and builds the explicit pattern.
    pub fn into_pattern(self, graph: &Digraph, budget: usize) -> Result<CyclePattern, CmdError> {
        let mut table: BTreeMap<Vec<EdgeId>, Sign> = BTreeMap::new();
        for row in &self.cycles {
            let ids: Vec<EdgeId> = row.edges.iter().map(|s| EdgeId::from(s.as_str())).collect();
            let cycle = Cycle::from_edge_ids(graph, &ids)?;
            let sign = parse_sign(&row.sign)?;
            if table.insert(cycle.edges.clone(), sign).is_some() {
                return Err(CmdError::domain(
                    "pattern",
                    format!("cycle {{{}}} listed twice", row.edges.join(", ")),
                ));
            }
        }
        for cycle in enumerate_cycles_budgeted(graph, budget)? {
            if !table.contains_key(&cycle.edges) {
                return Err(PatternError::MissingSign(cycle.edges.clone()).into());
            }
        }
        Ok(CyclePattern::explicit(graph.clone(), table))
    }

    /// Lists a pattern cycle-by-cycle (used to materialize induced patterns).
    pub fn from_pattern(pattern: &CyclePattern, budget: usize) -> Result<PatternDocument, CmdError> {
        let cycles = pattern
            .signed_cycles(budget)?
            .into_iter()
            .map(|(c, s)| PatternCycleDoc {
                edges: c.order.iter().map(|e| String::from(e.as_str())).collect(),
                sign: s.symbol().to_string(),
            })
            .collect();
        Ok(PatternDocument { cycles })
    }
}

fn parse_sign(s: &str) -> Result<Sign, CmdError> {
    let mut chars = s.chars();
    match (chars.next().and_then(Sign::from_symbol), chars.next()) {
        (Some(sign), None) => Ok(sign),
        _ => Err(CmdError::Usage(format!(
            "invalid sign {s:?}: expected \"+\", \"0\", or \"-\""
        ))),
    }
}

/// Reads and deserializes a JSON document; all failures are usage errors.
pub fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::Usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CmdError::Usage(format!("cannot parse {path}: {e}")))
}

/// Serializes a document in the canonical on-disk form.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
