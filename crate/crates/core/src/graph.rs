//! Simple undirected graphs with dense integer ids.
//!
//! Vertices are `0..n` with no gaps; edges get dense ids in insertion order.
//! Every structural change (`subdivide_edge`, `delete_vertex`, `delete_edge`)
//! returns a fresh graph plus an explicit id relabeling, so callers can map
//! results back instead of guessing how ids moved. Loops and parallel edges
//! are rejected at construction.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index. Valid ids are `0..n` for the graph at hand.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense edge index, assigned in insertion order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(usize);

impl EdgeId {
    pub fn new(index: usize) -> Self {
        EdgeId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Length parity of a walk.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(len: usize) -> Self {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn matches(self, len: usize) -> bool {
        Parity::of_len(len) == self
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A vertex or an edge; the element a witness is required to pass through.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Vertex(VertexId),
    Edge(EdgeId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("repeated vertex {0} in walk")]
    RepeatedVertex(VertexId),
    #[error("repeated edge {0} in walk")]
    RepeatedEdge(EdgeId),
    #[error("walk is empty")]
    EmptyWalk,
    #[error("closed walk needs at least 3 edges, got {0}")]
    TooShort(usize),
    #[error("walk does not return to its start")]
    NotClosed,
}

/// Immutable simple undirected graph.
///
/// Equality compares vertex count and the edge list (normalized endpoints in
/// id order), so `parse(serialize(g)) == g` holds for the text codecs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    /// `adjacency[v]` sorted by neighbor id; drives every lowest-id tie-break.
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    /// Edge endpoints with the lower vertex first, indexed by `EdgeId`.
    edges: Vec<(VertexId, VertexId)>,
}

/// How vertex and edge ids of a graph map into a derived graph.
///
/// `None` marks a deleted element; surviving ids stay in the original
/// relative order and are compacted to stay dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub vertex_map: Vec<Option<VertexId>>,
    pub edge_map: Vec<Option<EdgeId>>,
}

impl Relabeling {
    /// Old id of the new vertex `v`.
    pub fn vertex_preimage(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map
            .iter()
            .position(|m| *m == Some(v))
            .map(VertexId::new)
    }

    /// Old id of the new edge `e`.
    pub fn edge_preimage(&self, e: EdgeId) -> Option<EdgeId> {
        self.edge_map
            .iter()
            .position(|m| *m == Some(e))
            .map(EdgeId::new)
    }
}

/// Builds a graph on `n` vertices from endpoint pairs.
///
/// Edge ids follow the order of `edges`. Loops, duplicate pairs (in either
/// orientation), and out-of-range endpoints are rejected.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut adjacency = vec![Vec::new(); n];
    let mut normalized = Vec::with_capacity(edges.len());
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in edges {
        for v in [a, b] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(GraphError::LoopEdge(VertexId(a)));
        }
        let (lo, hi) = (a.min(b), a.max(b));
        if !seen.insert((lo, hi)) {
            return Err(GraphError::DuplicateEdge(VertexId(lo), VertexId(hi)));
        }
        let id = EdgeId(normalized.len());
        normalized.push((VertexId(lo), VertexId(hi)));
        adjacency[lo].push((VertexId(hi), id));
        adjacency[hi].push((VertexId(lo), id));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph {
        adjacency,
        edges: normalized,
    })
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v.0 < self.adjacency.len()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.adjacency.len()).map(VertexId)
    }

    /// Edge ids in id order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    /// Neighbors of `v` with the connecting edge, sorted by neighbor id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    /// Endpoints of `e`, lower id first.
    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges
            .get(e.0)
            .copied()
            .ok_or(GraphError::UnknownEdge(e))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.adjacency.get(u.0)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// The vertex of `e` that is not `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> Result<VertexId, GraphError> {
        let (a, b) = self.endpoints(e)?;
        if v == a {
            Ok(b)
        } else if v == b {
            Ok(a)
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Edge list as index pairs, lower endpoint first, in edge id order.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(a, b)| (a.0, b.0)).collect()
    }

    /// Replaces edge `e = {u, v}` by a path `u - w - v` through a fresh vertex.
    ///
    /// The fresh vertex gets id `n`; `e`'s id is reused for `{u, w}` and the
    /// new id `m` goes to `{w, v}` (`u < v`); all other ids are unchanged.
    pub fn subdivide_edge(&self, e: EdgeId) -> Result<(Graph, VertexId), GraphError> {
        let (u, v) = self.endpoints(e)?;
        let w = self.vertex_count();
        let mut pairs = self.edge_pairs();
        pairs[e.index()] = (u.0, w);
        pairs.push((w, v.0));
        let graph = build_graph(w + 1, &pairs).expect("subdivision keeps the graph simple");
        Ok((graph, VertexId(w)))
    }

    /// Deletes vertex `v` with its incident edges, compacting both id spaces.
    pub fn delete_vertex(&self, v: VertexId) -> Result<(Graph, Relabeling), GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let n = self.vertex_count();
        let vertex_map: Vec<Option<VertexId>> = (0..n)
            .map(|i| match i.cmp(&v.0) {
                std::cmp::Ordering::Less => Some(VertexId(i)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(VertexId(i - 1)),
            })
            .collect();
        let mut edge_map = vec![None; self.edge_count()];
        let mut pairs = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                continue;
            }
            edge_map[i] = Some(EdgeId(pairs.len()));
            pairs.push((
                vertex_map[a.0].expect("endpoint survives").0,
                vertex_map[b.0].expect("endpoint survives").0,
            ));
        }
        let graph = build_graph(n - 1, &pairs).expect("deletion keeps the graph simple");
        Ok((graph, Relabeling { vertex_map, edge_map }))
    }

    /// Deletes edge `e`, compacting edge ids; vertex ids are unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<(Graph, Relabeling), GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        let vertex_map = (0..self.vertex_count()).map(|i| Some(VertexId(i))).collect();
        let mut edge_map = vec![None; self.edge_count()];
        let mut pairs = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == e.0 {
                continue;
            }
            edge_map[i] = Some(EdgeId(pairs.len()));
            pairs.push((a.0, b.0));
        }
        let graph = build_graph(self.vertex_count(), &pairs).expect("subset of a simple graph");
        Ok((graph, Relabeling { vertex_map, edge_map }))
    }
}

/// Simple path: distinct vertices, consecutive ones adjacent. Length is the
/// edge count and may be 0 (a single vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Path {
    /// Validates `vertices` against `g` and resolves the connecting edges.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Path, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyWalk);
        }
        let mut seen = std::collections::HashSet::new();
        for &v in vertices {
            if !g.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        let edges = resolve_edges(g, vertices)?;
        Ok(Path {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are non-empty")
    }

    pub fn reversed(&self) -> Path {
        Path {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }
}

/// Simple cycle: at least 3 distinct vertices in cyclic order, each
/// consecutive pair (including last-to-first) adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    /// Cyclic vertex order; the first vertex is not repeated at the end.
    vertices: Vec<VertexId>,
    /// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`.
    edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Cycle, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::TooShort(vertices.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in vertices {
            if !g.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        let mut closed: Vec<VertexId> = vertices.to_vec();
        closed.push(vertices[0]);
        let edges = resolve_edges(g, &closed)?;
        Ok(Cycle {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    /// Number of edges; at least three by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.len())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Splits the cycle at two of its vertices into the two arcs between
    /// them. Both arcs run from `a` to `b`; their lengths sum to the cycle
    /// length, so on an odd cycle they have opposite parities.
    pub fn arcs_between(&self, g: &Graph, a: VertexId, b: VertexId) -> Option<(Path, Path)> {
        let pa = self.vertices.iter().position(|&v| v == a)?;
        let pb = self.vertices.iter().position(|&v| v == b)?;
        if pa == pb {
            return None;
        }
        let n = self.vertices.len();
        let forward: Vec<VertexId> = (0..=(pb + n - pa) % n)
            .map(|k| self.vertices[(pa + k) % n])
            .collect();
        let backward: Vec<VertexId> = (0..=(pa + n - pb) % n)
            .map(|k| self.vertices[(pb + k) % n])
            .rev()
            .collect();
        let first = Path::from_vertices(g, &forward).expect("arc of a valid cycle");
        let second = Path::from_vertices(g, &backward).expect("arc of a valid cycle");
        Some((first, second))
    }

    /// The cycle as a closed walk starting and ending at `start`.
    pub fn walk_from(&self, start: VertexId) -> Option<Vec<VertexId>> {
        let p = self.vertices.iter().position(|&v| v == start)?;
        let n = self.vertices.len();
        let mut walk: Vec<VertexId> = (0..n).map(|k| self.vertices[(p + k) % n]).collect();
        walk.push(start);
        Some(walk)
    }
}

/// Closed trail: a closed walk with at least 3 edges, all distinct; vertices
/// may repeat. Every simple cycle is also a circuit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circuit {
    /// Closed walk; the first vertex equals the last.
    #[serde(rename = "walk")]
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Circuit {
    pub fn from_closed_walk(g: &Graph, walk: &[VertexId]) -> Result<Circuit, GraphError> {
        if walk.is_empty() {
            return Err(GraphError::EmptyWalk);
        }
        if walk[0] != *walk.last().expect("non-empty") {
            return Err(GraphError::NotClosed);
        }
        if walk.len() < 4 {
            return Err(GraphError::TooShort(walk.len().saturating_sub(1)));
        }
        for &v in walk {
            if !g.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        let edges = resolve_edges(g, walk)?;
        let mut seen = std::collections::HashSet::new();
        for &e in &edges {
            if !seen.insert(e) {
                return Err(GraphError::RepeatedEdge(e));
            }
        }
        Ok(Circuit {
            vertices: walk.to_vec(),
            edges,
        })
    }

    pub fn from_cycle(cycle: &Cycle) -> Circuit {
        let mut vertices = cycle.vertices().to_vec();
        vertices.push(vertices[0]);
        Circuit {
            vertices,
            edges: cycle.edges().to_vec(),
        }
    }

    /// Number of edges; at least three by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.len())
    }

    /// Closed vertex walk, first vertex repeated at the end.
    pub fn walk(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }
}

fn resolve_edges(g: &Graph, walk: &[VertexId]) -> Result<Vec<EdgeId>, GraphError> {
    walk.windows(2)
        .map(|w| {
            g.edge_between(w[0], w[1])
                .ok_or(GraphError::NotAdjacent(w[0], w[1]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        build_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn k4() -> Graph {
        build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Bowtie: triangles 0-1-2 and 2-3-4 sharing vertex 2.
    fn bowtie() -> Graph {
        build_graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_c4_with_chord() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![3, 2, 3, 2]);
        assert_eq!(g.edge_between(VertexId(0), VertexId(2)), Some(EdgeId(4)));
        assert_eq!(g.edge_between(VertexId(1), VertexId(3)), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            build_graph(3, &[(1, 1)]).unwrap_err(),
            GraphError::LoopEdge(VertexId(1))
        );
        assert_eq!(
            build_graph(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(VertexId(0), VertexId(1))
        );
        assert_eq!(
            build_graph(2, &[(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 5, n: 2 }
        );
    }

    #[test]
    fn subdivision_turns_triangle_into_c4() {
        let (g, w) = triangle().subdivide_edge(EdgeId(0)).unwrap();
        assert_eq!(w, VertexId(3));
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(w), 2);
        assert_eq!(g.edge_between(VertexId(0), VertexId(1)), None);
        assert!(g.edge_between(VertexId(0), w).is_some());
        assert!(g.edge_between(VertexId(1), w).is_some());
        // Untouched edges keep their ids.
        assert_eq!(g.endpoints(EdgeId(1)).unwrap(), (VertexId(1), VertexId(2)));
        assert_eq!(g.endpoints(EdgeId(2)).unwrap(), (VertexId(0), VertexId(2)));
    }

    #[test]
    fn contracting_the_subdivision_restores_the_graph() {
        let g = k4();
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e).unwrap();
            let (sub, w) = g.subdivide_edge(e).unwrap();
            let (mut back, relab) = sub.delete_vertex(w).unwrap();
            assert_eq!(relab.vertex_map[w.index()], None);
            let mut pairs = back.edge_pairs();
            pairs.push((u.index(), v.index()));
            back = build_graph(g.vertex_count(), &pairs).unwrap();
            let mut want: Vec<(usize, usize)> = g.edge_pairs();
            let mut got = back.edge_pairs();
            want.sort_unstable();
            got.sort_unstable();
            assert_eq!(want, got, "edge {e:?}");
        }
    }

    #[test]
    fn delete_vertex_from_k4_leaves_triangle() {
        let (g, relab) = k4().delete_vertex(VertexId(3)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(relab.vertex_map, vec![Some(VertexId(0)), Some(VertexId(1)), Some(VertexId(2)), None]);
        // Edges (0,3), (1,3), (2,3) die; survivors compact in order.
        assert_eq!(
            relab.edge_map,
            vec![Some(EdgeId(0)), Some(EdgeId(1)), None, Some(EdgeId(2)), None, None]
        );
    }

    #[test]
    fn delete_vertex_relabels_shifted_ids() {
        let (g, relab) = bowtie().delete_vertex(VertexId(2)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        // Old vertices 3, 4 become 2, 3 and stay adjacent.
        assert_eq!(relab.vertex_map[3], Some(VertexId(2)));
        assert_eq!(relab.vertex_map[4], Some(VertexId(3)));
        assert!(g.edge_between(VertexId(2), VertexId(3)).is_some());
        assert_eq!(relab.edge_preimage(EdgeId(1)).unwrap(), EdgeId(5));
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        let (g, relab) = triangle().delete_edge(EdgeId(1)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(relab.edge_map, vec![Some(EdgeId(0)), None, Some(EdgeId(1))]);
        assert_eq!(relab.edge_preimage(EdgeId(1)).unwrap(), EdgeId(2));
    }

    #[test]
    fn path_validation() {
        let g = k4();
        let p = Path::from_vertices(&g, &[VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.first(), VertexId(0));
        assert_eq!(p.last(), VertexId(2));
        let single = Path::from_vertices(&g, &[VertexId(3)]).unwrap();
        assert_eq!(single.len(), 0);
        assert_eq!(
            Path::from_vertices(&g, &[VertexId(0), VertexId(0)]).unwrap_err(),
            GraphError::RepeatedVertex(VertexId(0))
        );
    }

    #[test]
    fn cycle_validation_and_arcs() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = Cycle::from_vertices(
            &g,
            &[VertexId(0), VertexId(1), VertexId(2), VertexId(3), VertexId(4)],
        )
        .unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.parity(), Parity::Odd);
        let (a, b) = c.arcs_between(&g, VertexId(1), VertexId(3)).unwrap();
        assert_eq!(a.first(), VertexId(1));
        assert_eq!(a.last(), VertexId(3));
        assert_eq!(b.first(), VertexId(1));
        assert_eq!(b.last(), VertexId(3));
        assert_eq!(a.len() + b.len(), 5);
        assert_ne!(Parity::of_len(a.len()), Parity::of_len(b.len()));

        assert_eq!(
            Cycle::from_vertices(&g, &[VertexId(0), VertexId(1), VertexId(3)]).unwrap_err(),
            GraphError::NotAdjacent(VertexId(1), VertexId(3))
        );
    }

    #[test]
    fn circuit_validation() {
        let g = bowtie();
        // Figure-eight through the shared vertex.
        let walk = [2usize, 0, 1, 2, 3, 4, 2].map(VertexId);
        let t = Circuit::from_closed_walk(&g, &walk).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.parity(), Parity::Even);
        assert!(t.contains_vertex(VertexId(2)));

        let repeated = [0usize, 1, 2, 0, 1, 2, 0].map(VertexId);
        assert_eq!(
            Circuit::from_closed_walk(&g, &repeated).unwrap_err(),
            GraphError::RepeatedEdge(EdgeId(0))
        );
        let open = [0usize, 1, 2].map(VertexId);
        assert_eq!(
            Circuit::from_closed_walk(&g, &open).unwrap_err(),
            GraphError::NotClosed
        );
    }
}
