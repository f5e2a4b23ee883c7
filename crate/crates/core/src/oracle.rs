//! Exhaustive ground truth for small graphs: enumeration of simple cycles and
//! closed trails through a target, parity existence checks, and an
//! independent witness validator.
//!
//! Everything here is deliberately separate from the constructive search: the
//! validator re-walks witnesses against raw adjacency and shares no helper
//! code with the constructors, and the enumerators refuse inputs beyond an
//! explicit budget instead of silently truncating.

use std::collections::HashSet;

use thiserror::Error;

use crate::constructors::{ParityWitness, WitnessObject};
use crate::graph::{Circuit, Cycle, EdgeId, Graph, Parity, Target, VertexId};

/// Size limits for exhaustive enumeration.
///
/// Cycle enumeration accepts graphs within `max_vertices`/`max_edges`; trail
/// enumeration additionally requires at most `max_trail_edges` edges, since
/// closed trails can use every edge and their count grows much faster.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_trail_edges: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_vertices: 16,
            max_edges: 24,
            max_trail_edges: 20,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{quantity} is {actual}, over the enumeration budget of {limit}")]
    BudgetExceeded {
        quantity: &'static str,
        limit: usize,
        actual: usize,
    },
}

fn check_cycle_budget(g: &Graph, budget: &EnumerationBudget) -> Result<(), OracleError> {
    if g.vertex_count() > budget.max_vertices {
        return Err(OracleError::BudgetExceeded {
            quantity: "vertex count",
            limit: budget.max_vertices,
            actual: g.vertex_count(),
        });
    }
    if g.edge_count() > budget.max_edges {
        return Err(OracleError::BudgetExceeded {
            quantity: "edge count",
            limit: budget.max_edges,
            actual: g.edge_count(),
        });
    }
    Ok(())
}

fn check_trail_budget(g: &Graph, budget: &EnumerationBudget) -> Result<(), OracleError> {
    if g.vertex_count() > budget.max_vertices {
        return Err(OracleError::BudgetExceeded {
            quantity: "vertex count",
            limit: budget.max_vertices,
            actual: g.vertex_count(),
        });
    }
    if g.edge_count() > budget.max_trail_edges {
        return Err(OracleError::BudgetExceeded {
            quantity: "edge count",
            limit: budget.max_trail_edges,
            actual: g.edge_count(),
        });
    }
    Ok(())
}

// ----- Simple cycle enumeration -----

/// All simple cycles of `g`, each listed once, sorted by (length, vertex
/// sequence). A cycle is reported starting at its lowest vertex, in the
/// direction whose second vertex is smaller.
pub fn enumerate_cycles(g: &Graph, budget: &EnumerationBudget) -> Result<Vec<Cycle>, OracleError> {
    check_cycle_budget(g, budget)?;
    let mut found: Vec<Vec<VertexId>> = Vec::new();
    let mut path: Vec<VertexId> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for root in g.vertices() {
        path.push(root);
        on_path[root.index()] = true;
        cycle_dfs(g, root, &mut path, &mut on_path, &mut found);
        on_path[root.index()] = false;
        path.pop();
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(found
        .into_iter()
        .map(|vs| Cycle::from_vertices(g, &vs).expect("enumerated walks are simple cycles"))
        .collect())
}

fn cycle_dfs(
    g: &Graph,
    root: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<VertexId>>,
) {
    let v = *path.last().expect("path holds at least the root");
    for &(w, _) in g.neighbors(v) {
        if w == root && path.len() >= 3 && path[1] < path[path.len() - 1] {
            found.push(path.clone());
        }
        if w > root && !on_path[w.index()] {
            path.push(w);
            on_path[w.index()] = true;
            cycle_dfs(g, root, path, on_path, found);
            on_path[w.index()] = false;
            path.pop();
        }
    }
}

/// Simple cycles through the target, sorted by (length, vertex sequence).
pub fn enumerate_cycles_through(
    g: &Graph,
    target: Target,
    budget: &EnumerationBudget,
) -> Result<Vec<Cycle>, OracleError> {
    Ok(enumerate_cycles(g, budget)?
        .into_iter()
        .filter(|c| match target {
            Target::Vertex(v) => c.contains_vertex(v),
            Target::Edge(e) => c.contains_edge(e),
        })
        .collect())
}

// ----- Closed trail enumeration -----

/// All closed trails of `g` (at least 3 edges, no repeated edge), up to
/// rotation and direction, sorted by (length, edge sequence of the canonical
/// form). Vertices may repeat, so figure-eight trails are included.
pub fn enumerate_closed_trails(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<Vec<Circuit>, OracleError> {
    check_trail_budget(g, budget)?;
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    let mut out: Vec<(Vec<EdgeId>, Vec<VertexId>)> = Vec::new();
    for anchor in g.edge_ids() {
        // The anchor is the lowest edge id on the trail, crossed low-to-high
        // endpoint first; that pins one linearization per trail class.
        let (a, b) = g.endpoints(anchor).expect("edge id from the graph");
        let mut walk = vec![a, b];
        let mut edges = vec![anchor];
        let mut used = vec![false; g.edge_count()];
        used[anchor.index()] = true;
        trail_dfs(g, a, anchor, &mut walk, &mut edges, &mut used, &mut |edges, walk| {
            let key = canonical_trail_edges(edges);
            if seen.insert(key) {
                out.push((edges.to_vec(), walk.to_vec()));
            }
        });
    }
    out.sort_by(|(ea, wa), (eb, wb)| {
        (ea.len(), canonical_trail_edges(ea), wa).cmp(&(eb.len(), canonical_trail_edges(eb), wb))
    });
    Ok(out
        .into_iter()
        .map(|(_, walk)| Circuit::from_closed_walk(g, &walk).expect("enumerated walks are trails"))
        .collect())
}

fn trail_dfs(
    g: &Graph,
    home: VertexId,
    anchor: EdgeId,
    walk: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    used: &mut [bool],
    record: &mut impl FnMut(&[EdgeId], &[VertexId]),
) {
    let v = *walk.last().expect("walk holds at least the anchor");
    if v == home && edges.len() >= 3 {
        record(edges, walk);
        // A trail may pass through `home` and close later, so keep extending.
    }
    for &(w, e) in g.neighbors(v) {
        if e <= anchor || used[e.index()] {
            continue;
        }
        used[e.index()] = true;
        walk.push(w);
        edges.push(e);
        trail_dfs(g, home, anchor, walk, edges, used, record);
        edges.pop();
        walk.pop();
        used[e.index()] = false;
    }
}

/// Lexicographically smallest edge-id sequence over all rotations of both
/// directions; two closed trails are the same trail iff these forms agree.
pub fn canonical_trail_edges(edges: &[EdgeId]) -> Vec<EdgeId> {
    let k = edges.len();
    let mut best: Option<Vec<EdgeId>> = None;
    let reversed: Vec<EdgeId> = edges.iter().rev().copied().collect();
    for seq in [edges, reversed.as_slice()] {
        for shift in 0..k {
            let rotated: Vec<EdgeId> = (0..k).map(|i| seq[(shift + i) % k]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// The cycle's vertex sequence rotated to start at its lowest vertex, in the
/// direction whose second vertex is smaller. Idempotent.
pub fn canonical_cycle_vertices(vertices: &[VertexId]) -> Vec<VertexId> {
    let n = vertices.len();
    let start = (0..n)
        .min_by_key(|&i| vertices[i])
        .expect("cycles are non-empty");
    let forward: Vec<VertexId> = (0..n).map(|i| vertices[(start + i) % n]).collect();
    let backward: Vec<VertexId> = (0..n).map(|i| vertices[(start + n - i) % n]).collect();
    if forward[1.min(n - 1)] <= backward[1.min(n - 1)] {
        forward
    } else {
        backward
    }
}

/// Closed trails through the target, same order as [`enumerate_closed_trails`].
pub fn enumerate_closed_trails_through(
    g: &Graph,
    target: Target,
    budget: &EnumerationBudget,
) -> Result<Vec<Circuit>, OracleError> {
    Ok(enumerate_closed_trails(g, budget)?
        .into_iter()
        .filter(|t| match target {
            Target::Vertex(v) => t.contains_vertex(v),
            Target::Edge(e) => t.contains_edge(e),
        })
        .collect())
}

// ----- Parity existence via the cycle space -----

/// Per-target parity existence, computed in one sweep.
///
/// Every connected even-degree edge set is traversable as one closed trail,
/// and such sets with all degrees two are exactly the simple cycles; sweeping
/// the cycle space (all even-degree edge sets) therefore decides existence
/// without materializing any trail.
#[derive(Clone, Debug)]
pub struct ExistenceTables {
    cycle_vertex: Vec<[bool; 2]>,
    cycle_edge: Vec<[bool; 2]>,
    circuit_vertex: Vec<[bool; 2]>,
    circuit_edge: Vec<[bool; 2]>,
}

impl ExistenceTables {
    pub fn cycle(&self, target: Target, parity: Parity) -> bool {
        let p = parity_slot(parity);
        match target {
            Target::Vertex(v) => self.cycle_vertex[v.index()][p],
            Target::Edge(e) => self.cycle_edge[e.index()][p],
        }
    }

    pub fn circuit(&self, target: Target, parity: Parity) -> bool {
        let p = parity_slot(parity);
        match target {
            Target::Vertex(v) => self.circuit_vertex[v.index()][p],
            Target::Edge(e) => self.circuit_edge[e.index()][p],
        }
    }
}

fn parity_slot(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

/// Builds [`ExistenceTables`] by sweeping all 2^mu cycle-space members, where
/// mu = m - n + (number of components).
pub fn existence_tables(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<ExistenceTables, OracleError> {
    check_cycle_budget(g, budget)?;
    let n = g.vertex_count();
    let m = g.edge_count();

    // BFS spanning forest; every non-tree edge contributes a basis vector.
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut tree_edge = vec![false; m];
    for root in g.vertices() {
        if visited[root.index()] {
            continue;
        }
        visited[root.index()] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !visited[w.index()] {
                    visited[w.index()] = true;
                    parent[w.index()] = Some((v, e));
                    depth[w.index()] = depth[v.index()] + 1;
                    tree_edge[e.index()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis: Vec<u64> = Vec::new();
    for e in g.edge_ids() {
        if tree_edge[e.index()] {
            continue;
        }
        let (mut a, mut b) = g.endpoints(e).expect("edge id from the graph");
        let mut mask = 1u64 << e.index();
        while depth[a.index()] > depth[b.index()] {
            let (p, pe) = parent[a.index()].expect("deeper vertex has a parent");
            mask ^= 1 << pe.index();
            a = p;
        }
        while depth[b.index()] > depth[a.index()] {
            let (p, pe) = parent[b.index()].expect("deeper vertex has a parent");
            mask ^= 1 << pe.index();
            b = p;
        }
        while a != b {
            let (pa, ea) = parent[a.index()].expect("roots meet before running out");
            let (pb, eb) = parent[b.index()].expect("roots meet before running out");
            mask ^= (1 << ea.index()) | (1 << eb.index());
            a = pa;
            b = pb;
        }
        basis.push(mask);
    }
    let mu = basis.len();
    if mu > 24 {
        return Err(OracleError::BudgetExceeded {
            quantity: "cycle space dimension",
            limit: 24,
            actual: mu,
        });
    }

    let mut tables = ExistenceTables {
        cycle_vertex: vec![[false; 2]; n],
        cycle_edge: vec![[false; 2]; m],
        circuit_vertex: vec![[false; 2]; n],
        circuit_edge: vec![[false; 2]; m],
    };
    let mut degree = vec![0u8; n];
    let mut mask = 0u64;
    let mut touched: Vec<VertexId> = Vec::new();
    let mut stack: Vec<VertexId> = Vec::new();
    let mut seen_epoch = vec![0u32; n];
    // Gray-code walk: step i flips exactly one basis vector.
    for i in 1u64..(1u64 << mu) {
        mask ^= basis[i.trailing_zeros() as usize];
        if mask == 0 {
            continue;
        }
        let count = mask.count_ones() as usize;
        touched.clear();
        let mut bits = mask;
        while bits != 0 {
            let e = EdgeId::new(bits.trailing_zeros() as usize);
            bits &= bits - 1;
            let (a, b) = g.endpoints(e).expect("mask bits are edge ids");
            for v in [a, b] {
                if degree[v.index()] == 0 {
                    touched.push(v);
                }
                degree[v.index()] += 1;
            }
        }
        // Connectivity of the selected subgraph, by BFS over selected edges.
        let epoch = i as u32;
        let mut reached = 1;
        seen_epoch[touched[0].index()] = epoch;
        stack.push(touched[0]);
        while let Some(v) = stack.pop() {
            for &(w, e) in g.neighbors(v) {
                if mask & (1 << e.index()) != 0 && seen_epoch[w.index()] != epoch {
                    seen_epoch[w.index()] = epoch;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let connected = reached == touched.len();
        if connected {
            let slot = count % 2; // 0 = even, 1 = odd
            let is_cycle = touched.iter().all(|&v| degree[v.index()] == 2);
            let mut bits = mask;
            while bits != 0 {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                tables.circuit_edge[e][slot] = true;
                if is_cycle {
                    tables.cycle_edge[e][slot] = true;
                }
            }
            for &v in &touched {
                tables.circuit_vertex[v.index()][slot] = true;
                if is_cycle {
                    tables.cycle_vertex[v.index()][slot] = true;
                }
            }
        }
        for &v in &touched {
            degree[v.index()] = 0;
        }
    }
    Ok(tables)
}

/// True iff some simple cycle of the given parity passes through the target.
pub fn exists_parity_cycle(
    g: &Graph,
    target: Target,
    parity: Parity,
    budget: &EnumerationBudget,
) -> Result<bool, OracleError> {
    Ok(existence_tables(g, budget)?.cycle(target, parity))
}

/// True iff some closed trail of the given parity passes through the target.
pub fn exists_parity_circuit(
    g: &Graph,
    target: Target,
    parity: Parity,
    budget: &EnumerationBudget,
) -> Result<bool, OracleError> {
    Ok(existence_tables(g, budget)?.circuit(target, parity))
}

// ----- Witness validation -----

/// Why a witness was rejected.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WitnessDefect {
    UnknownVertex,
    NotClosed,
    TooShort,
    RepeatedVertex,
    RepeatedEdge,
    MissingEdge,
    EdgeEndpointMismatch,
    ParityMismatch,
    TargetMissed,
}

impl std::fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WitnessDefect::UnknownVertex => "a vertex is not in the graph",
            WitnessDefect::NotClosed => "the walk does not return to its start",
            WitnessDefect::TooShort => "fewer than 3 edges",
            WitnessDefect::RepeatedVertex => "a cycle repeats a vertex",
            WitnessDefect::RepeatedEdge => "an edge is used twice",
            WitnessDefect::MissingEdge => "consecutive vertices are not adjacent",
            WitnessDefect::EdgeEndpointMismatch => "a listed edge id does not join its vertices",
            WitnessDefect::ParityMismatch => "the length does not have the claimed parity",
            WitnessDefect::TargetMissed => "the walk does not pass through the target",
        };
        f.write_str(s)
    }
}

/// Re-checks a witness from raw adjacency; independent of how it was built.
pub fn validate_witness(g: &Graph, witness: &ParityWitness) -> Result<(), WitnessDefect> {
    let (closed_walk, claimed_edges): (Vec<VertexId>, &[EdgeId]) = match &witness.object {
        WitnessObject::Cycle(c) => {
            let mut walk = c.vertices().to_vec();
            if walk.is_empty() {
                return Err(WitnessDefect::TooShort);
            }
            let mut distinct = HashSet::new();
            for &v in &walk {
                if !distinct.insert(v) {
                    return Err(WitnessDefect::RepeatedVertex);
                }
            }
            walk.push(walk[0]);
            (walk, c.edges())
        }
        WitnessObject::Circuit(t) => {
            let walk = t.walk().to_vec();
            if walk.first() != walk.last() || walk.is_empty() {
                return Err(WitnessDefect::NotClosed);
            }
            (walk, t.edges())
        }
    };
    let steps = closed_walk.len() - 1;
    if steps < 3 {
        return Err(WitnessDefect::TooShort);
    }
    if claimed_edges.len() != steps {
        return Err(WitnessDefect::MissingEdge);
    }
    for &v in &closed_walk {
        if v.index() >= g.vertex_count() {
            return Err(WitnessDefect::UnknownVertex);
        }
    }
    let mut used = HashSet::new();
    for (i, pair) in closed_walk.windows(2).enumerate() {
        let e = claimed_edges[i];
        if e.index() >= g.edge_count() {
            return Err(WitnessDefect::MissingEdge);
        }
        let (a, b) = g.endpoints(e).expect("checked range");
        if (a, b) != (pair[0].min(pair[1]), pair[0].max(pair[1])) {
            return Err(WitnessDefect::EdgeEndpointMismatch);
        }
        if !used.insert(e) {
            return Err(WitnessDefect::RepeatedEdge);
        }
    }
    if !witness.parity.matches(steps) {
        return Err(WitnessDefect::ParityMismatch);
    }
    let hits = match witness.target {
        Target::Vertex(v) => closed_walk.contains(&v),
        Target::Edge(e) => claimed_edges.contains(&e),
    };
    if !hits {
        return Err(WitnessDefect::TargetMissed);
    }
    Ok(())
}
