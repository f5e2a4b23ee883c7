//! Text formats: edge-list and JSON graph encodings, DOT rendering, and
//! witness documents for round-tripping search results through files.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructors::{ParityWitness, TheoremTag, WitnessObject};
use crate::graph::{build_graph, Circuit, Cycle, EdgeId, Graph, Parity, Target, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

fn parse_error(line: usize, message: impl Into<String>) -> CodecError {
    CodecError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
/// 0-based endpoints. Blank lines and `#` comments are ignored anywhere.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = rows
        .next()
        .ok_or_else(|| parse_error(0, "empty input, expected an `n m` header"))?;
    let mut fields = header.split_whitespace();
    let mut read_count = |name: &str| -> Result<usize, CodecError> {
        fields
            .next()
            .ok_or_else(|| parse_error(header_line, format!("header is missing {name}")))?
            .parse::<usize>()
            .map_err(|_| parse_error(header_line, format!("{name} is not a number")))
    };
    let n = read_count("the vertex count")?;
    let m = read_count("the edge count")?;
    if fields.next().is_some() {
        return Err(parse_error(header_line, "header has trailing fields"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, row) in rows {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than {m} edge lines")));
        }
        let mut ends = row.split_whitespace().map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_error(line, format!("bad endpoint: {f}")))
        });
        let (u, v) = match (ends.next(), ends.next(), ends.next()) {
            (Some(u), Some(v), None) => (u?, v?),
            _ => return Err(parse_error(line, "expected exactly two endpoints")),
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count(),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok(build_graph(n, &edges)?)
}

/// Writes the edge-list format; `parse_edge_list` inverts it exactly.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edge_pairs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Parses `{"n": int, "edges": [[u,v], ...]}`.
pub fn parse_graph_json(text: &str) -> Result<Graph, CodecError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
    Ok(build_graph(doc.n, &doc.edges)?)
}

/// Writes the JSON graph format; `parse_graph_json` inverts it exactly.
pub fn write_graph_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.vertex_count(),
        edges: g.edge_pairs(),
    };
    serde_json::to_string(&doc).expect("graph documents always serialize")
}

/// Renders an undirected DOT graph, highlighting the witness walk and its
/// target when given.
pub fn to_dot(g: &Graph, witness: Option<&ParityWitness>) -> String {
    let mut hot_edges = vec![false; g.edge_count()];
    let mut hot_vertices = vec![false; g.vertex_count()];
    if let Some(w) = witness {
        let edges = match &w.object {
            WitnessObject::Cycle(c) => c.edges(),
            WitnessObject::Circuit(t) => t.edges(),
        };
        for &e in edges {
            hot_edges[e.index()] = true;
        }
        match w.target {
            Target::Vertex(v) => hot_vertices[v.index()] = true,
            Target::Edge(e) => hot_edges[e.index()] = true,
        }
    }
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        if hot_vertices[v.index()] {
            out.push_str(&format!("  {v} [color=red, penwidth=2.0];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (i, (u, v)) in g.edge_pairs().into_iter().enumerate() {
        if hot_edges[i] {
            out.push_str(&format!("  {u} -- {v} [color=red, penwidth=2.0];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// A witness as stored on disk; the same shape [`ParityWitness`] serializes
/// to, but with nothing resolved against a graph yet.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub object: WitnessObjectDoc,
    pub target: TargetDoc,
    pub parity: Parity,
    pub theorem_tag: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessObjectDoc {
    Cycle {
        vertices: Vec<usize>,
        edges: Vec<usize>,
    },
    Circuit {
        walk: Vec<usize>,
        edges: Vec<usize>,
    },
}

#[derive(Copy, Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetDoc {
    Vertex(usize),
    Edge(usize),
}

impl From<Target> for TargetDoc {
    fn from(t: Target) -> TargetDoc {
        match t {
            Target::Vertex(v) => TargetDoc::Vertex(v.index()),
            Target::Edge(e) => TargetDoc::Edge(e.index()),
        }
    }
}

impl From<TargetDoc> for Target {
    fn from(t: TargetDoc) -> Target {
        match t {
            TargetDoc::Vertex(v) => Target::Vertex(VertexId::new(v)),
            TargetDoc::Edge(e) => Target::Edge(EdgeId::new(e)),
        }
    }
}

pub fn parse_witness_json(text: &str) -> Result<WitnessDoc, CodecError> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))
}

/// Resolves a stored witness against a graph, rebuilding the walk through
/// the validating constructors and checking the stored edge ids against the
/// resolved ones.
pub fn resolve_witness(g: &Graph, doc: &WitnessDoc) -> Result<ParityWitness, String> {
    let theorem: TheoremTag = doc.theorem_tag.parse()?;
    let (object, claimed): (WitnessObject, &[usize]) = match &doc.object {
        WitnessObjectDoc::Cycle { vertices, edges } => {
            let vs: Vec<VertexId> = vertices.iter().map(|&i| VertexId::new(i)).collect();
            let cycle = Cycle::from_vertices(g, &vs).map_err(|e| e.to_string())?;
            (WitnessObject::Cycle(cycle), edges)
        }
        WitnessObjectDoc::Circuit { walk, edges } => {
            let vs: Vec<VertexId> = walk.iter().map(|&i| VertexId::new(i)).collect();
            let circuit = Circuit::from_closed_walk(g, &vs).map_err(|e| e.to_string())?;
            (WitnessObject::Circuit(circuit), edges)
        }
    };
    let resolved = match &object {
        WitnessObject::Cycle(c) => c.edges(),
        WitnessObject::Circuit(t) => t.edges(),
    };
    let claimed_ids: Vec<EdgeId> = claimed.iter().map(|&i| EdgeId::new(i)).collect();
    if claimed_ids != resolved {
        return Err("stored edge ids do not match the walk".to_string());
    }
    Ok(ParityWitness {
        object,
        target: Target::from(doc.target),
        parity: doc.parity,
        theorem,
    })
}
