//! Report assembly: every command answers with one JSON object, and errors
//! are data too. A plain-text table renderer covers `--output table`.

use serde_json::{json, Map, Value};

use cyclepat::extended::ExtendedError;
use cyclepat::games::{GameError, Partition};
use cyclepat::graph::{Cycle, GraphError, PriorityFn, StrategySubgraph, WeightFn};
use cyclepat::parity::ParityError;
use cyclepat::pattern::PatternError;
use cyclepat::realize::{FarkasWitness, RealizeError};

use crate::exact::emit_exact;

/// A command failure: usage/parse problems exit 1, domain problems exit 2,
/// both as machine-readable error objects.
#[derive(Debug)]
pub enum CmdError {
    /// Bad invocation or unreadable/ill-formed input file.
    Usage(String),
    /// The inputs parsed but the requested object does not exist or the
    /// data is semantically invalid.
    Domain {
        /// Stable machine-readable error class.
        kind: String,
        /// Human-readable description.
        message: String,
        /// Extra structured payload (witness, weights, mixed set, ...).
        extra: Map<String, Value>,
    },
}

impl CmdError {
    /// A domain error with no extra payload.
    pub fn domain(kind: &str, message: impl Into<String>) -> CmdError {
        CmdError::Domain {
            kind: String::from(kind),
            message: message.into(),
            extra: Map::new(),
        }
    }

    /// A domain error carrying extra structured fields.
    pub fn domain_with(
        kind: &str,
        message: impl Into<String>,
        extra: Vec<(&str, Value)>,
    ) -> CmdError {
        CmdError::Domain {
            kind: String::from(kind),
            message: message.into(),
            extra: extra
                .into_iter()
                .map(|(k, v)| (String::from(k), v))
                .collect(),
        }
    }
}

impl From<GraphError> for CmdError {
    fn from(e: GraphError) -> CmdError {
        CmdError::domain("graph", e.to_string())
    }
}

impl From<PatternError> for CmdError {
    fn from(e: PatternError) -> CmdError {
        CmdError::domain("pattern", e.to_string())
    }
}

impl From<ParityError> for CmdError {
    fn from(e: ParityError) -> CmdError {
        CmdError::domain("parity", e.to_string())
    }
}

impl From<GameError> for CmdError {
    fn from(e: GameError) -> CmdError {
        CmdError::domain("game", e.to_string())
    }
}

impl From<ExtendedError> for CmdError {
    fn from(e: ExtendedError) -> CmdError {
        match e {
            ExtendedError::NegativeCycleReachable => {
                CmdError::domain("negative-cycle-reachable", e.to_string())
            }
            other => CmdError::domain("extended", other.to_string()),
        }
    }
}

impl From<RealizeError> for CmdError {
    fn from(e: RealizeError) -> CmdError {
        match e {
            RealizeError::Pattern(p) => p.into(),
            RealizeError::Realizable => {
                CmdError::domain("realizable", "pattern is realizable; no witness exists")
            }
            RealizeError::NotRealizable { witness } => CmdError::domain_with(
                "not-realizable",
                "pattern is not realizable",
                vec![("witness", witness_json(&witness))],
            ),
        }
    }
}

/// A cycle as JSON: edges in traversal order plus the visited vertices.
pub fn cycle_json(c: &Cycle) -> Value {
    json!({
        "edges": c.order.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
        "vertices": c.vertex_seq.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
    })
}

/// A weight function as JSON: edge id to exact string.
pub fn weights_json(w: &WeightFn) -> Value {
    Value::Object(
        w.iter()
            .map(|(id, v)| (String::from(id.as_str()), Value::String(emit_exact(v))))
            .collect(),
    )
}

/// A priority function as JSON: edge id to nonnegative integer.
pub fn priorities_json(p: &PriorityFn) -> Value {
    Value::Object(
        p.iter()
            .map(|(id, v)| (String::from(id.as_str()), json!(v)))
            .collect(),
    )
}

/// A non-realizability witness as JSON, multiplicities as exact strings.
pub fn witness_json(w: &FarkasWitness) -> Value {
    json!({
        "signed": w.signed.iter().map(|(c, s, y)| json!({
            "cycle": cycle_json(c),
            "sign": s.symbol().to_string(),
            "multiplicity": y.to_string(),
        })).collect::<Vec<_>>(),
        "zero": w.zero.iter().map(|(c, z)| json!({
            "cycle": cycle_json(c),
            "multiplicity": z.to_string(),
        })).collect::<Vec<_>>(),
        "supportSize": w.support_size(),
        "totalMultiplicity": w.total_multiplicity().to_string(),
    })
}

fn strategy_json(s: &Option<StrategySubgraph>) -> Value {
    match s {
        None => Value::Null,
        Some(st) => Value::Object(
            st.choice
                .iter()
                .map(|(v, e)| (String::from(v.as_str()), Value::String(String::from(e.as_str()))))
                .collect(),
        ),
    }
}

/// A zero-mean partition as JSON: `vPlus` plus both strategy certificates.
pub fn partition_json(p: &Partition) -> Value {
    json!({
        "vPlus": p.v_plus.iter().map(|v| v.as_str()).collect::<Vec<_>>(),
        "maxStrategy": strategy_json(&p.max_strategy),
        "minStrategy": strategy_json(&p.min_strategy),
    })
}

/// The success report for a command.
pub fn ok_report(command: &str, payload: Value) -> Value {
    json!({"command": command, "status": "ok", "payload": payload})
}

/// The failure report; the exit code is 1 for usage errors, 2 otherwise.
pub fn error_report(command: Option<&str>, err: &CmdError) -> (Value, i32) {
    match err {
        CmdError::Usage(message) => {
            let mut obj = Map::new();
            if let Some(c) = command {
                obj.insert(String::from("command"), json!(c));
            }
            obj.insert(String::from("status"), json!("error"));
            obj.insert(
                String::from("error"),
                json!({"kind": "usage", "message": message}),
            );
            (Value::Object(obj), 1)
        }
        CmdError::Domain {
            kind,
            message,
            extra,
        } => {
            let mut error = Map::new();
            error.insert(String::from("kind"), json!(kind));
            error.insert(String::from("message"), json!(message));
            for (k, v) in extra {
                error.insert(k.clone(), v.clone());
            }
            let mut obj = Map::new();
            if let Some(c) = command {
                obj.insert(String::from("command"), json!(c));
            }
            obj.insert(String::from("status"), json!("error"));
            obj.insert(String::from("error"), Value::Object(error));
            (Value::Object(obj), 2)
        }
    }
}

// ---------------------------------------------------------------------------
// Table rendering
// ---------------------------------------------------------------------------

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::from("null")),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn is_scalar_row(v: &Value) -> bool {
    matches!(v, Value::Object(m) if m.values().all(|x| scalar_text(x).is_some()))
}

fn push_indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                push_indent(out, depth);
                if let Some(s) = scalar_text(val) {
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(&s);
                    out.push('\n');
                } else {
                    out.push_str(k);
                    out.push_str(":\n");
                    render_into(out, val, depth + 1);
                }
            }
        }
        Value::Array(items) if items.iter().all(|x| scalar_text(x).is_some()) => {
            push_indent(out, depth);
            let cells: Vec<String> = items.iter().map(|x| scalar_text(x).expect("scalar")).collect();
            out.push('[');
            out.push_str(&cells.join(", "));
            out.push_str("]\n");
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(is_scalar_row) => {
            // homogeneous-enough object rows become an aligned column table
            let mut cols: Vec<String> = Vec::new();
            for item in items {
                if let Value::Object(m) = item {
                    for k in m.keys() {
                        if !cols.contains(k) {
                            cols.push(k.clone());
                        }
                    }
                }
            }
            let mut rows: Vec<Vec<String>> = vec![cols.clone()];
            for item in items {
                if let Value::Object(m) = item {
                    rows.push(
                        cols.iter()
                            .map(|c| m.get(c).and_then(scalar_text).unwrap_or_default())
                            .collect(),
                    );
                }
            }
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(i, _)| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
                .collect();
            for row in rows {
                push_indent(out, depth);
                let mut line = String::new();
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(cell);
                    for _ in cell.len()..widths[i] {
                        line.push(' ');
                    }
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        Value::Array(items) => {
            for item in items {
                push_indent(out, depth);
                out.push_str("-\n");
                render_into(out, item, depth + 1);
            }
        }
        scalar => {
            push_indent(out, depth);
            out.push_str(&scalar_text(scalar).expect("scalar"));
            out.push('\n');
        }
    }
}

/// Renders a report as indented plain text with aligned row tables.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}
