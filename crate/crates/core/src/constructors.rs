//! Constructive search for cycles and circuits of a requested parity through
//! a target vertex or edge.
//!
//! Every public operation first checks its structural hypotheses and reports
//! all violations it finds; on success it returns a [`ParityWitness`] whose
//! object is rebuilt through the validating constructors in [`crate::graph`],
//! so a returned witness is correct by construction and can additionally be
//! re-checked with [`crate::oracle::validate_witness`].
//!
//! The shared engine behind the edge operations: given an odd cycle `C` and a
//! target edge `e` not on it, subdivide-and-connect finds two disjoint paths
//! from the endpoints of `e` to `C`, trims each at its first vertex on `C`,
//! and closes through whichever arc of `C` gives the requested parity; the
//! two arcs have opposite parities because `C` is odd, so both parities are
//! always achievable. Tie-breaking is by lowest id throughout, making every
//! witness deterministic.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::checks::{
    bfs_levels, bfs_path, bfs_path_to_set, bipartite_or_odd_cycle, components,
    is_two_connected, is_two_edge_connected, odd_cycle_avoiding_edge, side_degree_sums,
    BipartiteCheck, OddCycleCertificate,
};
use crate::disjoint::{edge_to_edge_disjoint_paths, PathMode};
use crate::graph::{Circuit, Cycle, EdgeId, Graph, Parity, Path, Target, VertexId};

/// Which search routine produced a witness; also the names the CLI accepts
/// for routine selection.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremTag {
    /// Cycle of chosen parity through an edge, given an odd cycle avoiding it.
    Thm0,
    /// Odd cycle through an edge of a non-bipartite graph.
    Cor1,
    /// Even cycle through an edge when some k >= 3 divides all degrees.
    Thm1,
    /// Even cycle through a vertex of degree at least 3.
    Thm2,
    /// Even cycle through a vertex of odd degree.
    Thm3,
    /// Circuit of chosen parity through an edge, given an odd cycle avoiding it.
    Thm00,
    /// Even circuit through an edge when some k >= 3 divides all degrees.
    Thm5,
    /// Even circuit through a vertex of degree at least 3.
    Thm6,
    /// Odd circuit through an edge of a non-bipartite graph.
    Thm7,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 9] = [
        TheoremTag::Thm0,
        TheoremTag::Cor1,
        TheoremTag::Thm1,
        TheoremTag::Thm2,
        TheoremTag::Thm3,
        TheoremTag::Thm00,
        TheoremTag::Thm5,
        TheoremTag::Thm6,
        TheoremTag::Thm7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::Thm0 => "thm0",
            TheoremTag::Cor1 => "cor1",
            TheoremTag::Thm1 => "thm1",
            TheoremTag::Thm2 => "thm2",
            TheoremTag::Thm3 => "thm3",
            TheoremTag::Thm00 => "thm00",
            TheoremTag::Thm5 => "thm5",
            TheoremTag::Thm6 => "thm6",
            TheoremTag::Thm7 => "thm7",
        }
    }
}

impl std::fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem tag: {s}"))
    }
}

/// A hypothesis an operation requires but the input fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "which", rename_all = "snake_case")]
pub enum Violation {
    NotTwoConnected,
    NotTwoEdgeConnected,
    Bipartite,
    DegreeNotDivisible { k: usize, vertex: VertexId, degree: usize },
    DegreeTooSmall { vertex: VertexId, degree: usize, required: usize },
    DegreeEven { vertex: VertexId, degree: usize },
    EdgeOnGivenOddCycle { edge: EdgeId },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotTwoConnected => write!(f, "the graph is not 2-connected"),
            Violation::NotTwoEdgeConnected => write!(f, "the graph is not 2-edge-connected"),
            Violation::Bipartite => write!(f, "the graph is bipartite"),
            Violation::DegreeNotDivisible { k, vertex, degree } => {
                write!(f, "degree {degree} of vertex {vertex} is not divisible by {k}")
            }
            Violation::DegreeTooSmall { vertex, degree, required } => {
                write!(f, "vertex {vertex} has degree {degree}, needs at least {required}")
            }
            Violation::DegreeEven { vertex, degree } => {
                write!(f, "vertex {vertex} has even degree {degree}")
            }
            Violation::EdgeOnGivenOddCycle { edge } => {
                write!(f, "edge {edge} lies on the supplied odd cycle")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("hypotheses violated: {}", join_violations(.0))]
    Hypothesis(Vec<Violation>),
    /// A step the hypotheses guarantee cannot fail did fail; always a bug.
    #[error("internal contradiction: {0}")]
    Internal(&'static str),
}

fn join_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

fn hyp(violations: Vec<Violation>) -> ConstructError {
    ConstructError::Hypothesis(violations)
}

/// The found object: a simple cycle or a closed trail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessObject {
    Cycle(Cycle),
    Circuit(Circuit),
}

impl WitnessObject {
    pub fn len(&self) -> usize {
        match self {
            WitnessObject::Cycle(c) => c.len(),
            WitnessObject::Circuit(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.len())
    }

    pub fn contains(&self, target: Target) -> bool {
        match (self, target) {
            (WitnessObject::Cycle(c), Target::Vertex(v)) => c.contains_vertex(v),
            (WitnessObject::Cycle(c), Target::Edge(e)) => c.contains_edge(e),
            (WitnessObject::Circuit(t), Target::Vertex(v)) => t.contains_vertex(v),
            (WitnessObject::Circuit(t), Target::Edge(e)) => t.contains_edge(e),
        }
    }
}

/// A parity-constrained cycle or circuit through a target, with the routine
/// that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityWitness {
    pub object: WitnessObject,
    pub target: Target,
    pub parity: Parity,
    #[serde(rename = "theorem_tag")]
    pub theorem: TheoremTag,
}

fn two_connected_or(g: &Graph, violations: &mut Vec<Violation>) {
    if !is_two_connected(g) {
        violations.push(Violation::NotTwoConnected);
    }
}

fn two_edge_connected_or(g: &Graph, violations: &mut Vec<Violation>) {
    if !is_two_edge_connected(g) {
        violations.push(Violation::NotTwoEdgeConnected);
    }
}

fn divisible_or(g: &Graph, k: usize, violations: &mut Vec<Violation>) {
    assert!(k >= 3, "the divisor must be at least 3");
    if let Some(v) = g.vertices().find(|&v| g.degree(v) % k != 0) {
        violations.push(Violation::DegreeNotDivisible {
            k,
            vertex: v,
            degree: g.degree(v),
        });
    }
}

fn check_certificate(g: &Graph, c: &OddCycleCertificate) {
    let rebuilt = Cycle::from_vertices(g, c.cycle.vertices())
        .expect("certificate cycle must lie in the graph");
    assert_eq!(rebuilt, c.cycle, "certificate edge ids must match the graph");
    assert_eq!(c.cycle.parity(), Parity::Odd, "certificate cycle must be odd");
}

/// The shortest cycle through `e`: a BFS path between its endpoints avoiding
/// `e`, closed by `e`. `None` when `e` lies on no cycle.
pub fn cycle_through_edge(g: &Graph, e: EdgeId) -> Option<Cycle> {
    let (lo, hi) = g.endpoints(e).ok()?;
    let path = bfs_path(g, lo, hi, None, Some(e))?;
    Some(Cycle::from_vertices(g, &path).expect("a chordless closure is a cycle"))
}

/// Greatest common divisor of all vertex degrees; 0 on an edgeless graph.
/// This is the largest usable divisor for the divisible-degree operations.
pub fn inferred_degree_divisor(g: &Graph) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    g.vertices().map(|v| g.degree(v)).fold(0, gcd)
}

/// Core engine: an object of parity `want` through `e`, built from the
/// supplied odd cycle avoiding `e`. Vertex mode yields a simple cycle, edge
/// mode a closed trail. Connectivity hypotheses are the caller's business;
/// the certificate is re-validated here.
fn parity_object_through_edge(
    g: &Graph,
    e: EdgeId,
    cycle: &Cycle,
    want: Parity,
    mode: PathMode,
) -> Result<WitnessObject, ConstructError> {
    if cycle.contains_edge(e) {
        return Err(hyp(vec![Violation::EdgeOnGivenOddCycle { edge: e }]));
    }
    let anchor = cycle
        .edges()
        .iter()
        .copied()
        .min()
        .expect("cycles have edges");
    let paths = edge_to_edge_disjoint_paths(g, e, anchor, mode).ok_or_else(|| {
        // The subdivided graph keeps the input's connectivity, so a missing
        // pair exposes a connectivity failure the caller's check missed.
        hyp(vec![match mode {
            PathMode::Vertex => Violation::NotTwoConnected,
            PathMode::Edge => Violation::NotTwoEdgeConnected,
        }])
    })?;
    let mut on_cycle = vec![false; g.vertex_count()];
    for &v in cycle.vertices() {
        on_cycle[v.index()] = true;
    }
    let trim = |p: &Path| -> Path {
        let i = p
            .vertices()
            .iter()
            .position(|v| on_cycle[v.index()])
            .expect("paths end on the anchor edge's cycle");
        Path::from_vertices(g, &p.vertices()[..=i]).expect("prefix of a path")
    };
    let p = trim(&paths.from_lo);
    let q = trim(&paths.from_hi);
    let (u, w) = (p.last(), q.last());

    if u == w {
        // Only reachable in edge mode: both paths first touch the cycle at
        // the same vertex. Close the trail directly; if its parity is wrong,
        // splice the whole odd cycle in at the shared vertex.
        if mode == PathMode::Vertex {
            return Err(ConstructError::Internal(
                "vertex-disjoint paths reached the cycle at one vertex",
            ));
        }
        let mut walk = p.vertices().to_vec();
        if !want.matches(1 + p.len() + q.len()) {
            let detour = cycle.walk_from(u).expect("u lies on the cycle");
            walk.extend_from_slice(&detour[1..]);
        }
        walk.extend_from_slice(&q.reversed().vertices()[1..]);
        walk.push(p.first());
        let trail = Circuit::from_closed_walk(g, &walk)
            .map_err(|_| ConstructError::Internal("assembled walk is not a trail"))?;
        return Ok(WitnessObject::Circuit(trail));
    }

    let (first_arc, second_arc) = cycle
        .arcs_between(g, u, w)
        .expect("trimmed paths end on the cycle");
    let fits = |arc: &Path| want.matches(1 + p.len() + arc.len() + q.len());
    let arc = if fits(&first_arc) {
        first_arc
    } else if fits(&second_arc) {
        second_arc
    } else {
        return Err(ConstructError::Internal(
            "neither arc of an odd cycle completes the requested parity",
        ));
    };
    let mut vertices = p.vertices().to_vec();
    vertices.extend_from_slice(&arc.vertices()[1..]);
    vertices.extend_from_slice(&q.reversed().vertices()[1..]);
    match mode {
        PathMode::Vertex => {
            let cycle = Cycle::from_vertices(g, &vertices)
                .map_err(|_| ConstructError::Internal("assembled walk is not a simple cycle"))?;
            Ok(WitnessObject::Cycle(cycle))
        }
        PathMode::Edge => {
            let mut walk = vertices;
            walk.push(p.first());
            let trail = Circuit::from_closed_walk(g, &walk)
                .map_err(|_| ConstructError::Internal("assembled walk is not a trail"))?;
            Ok(WitnessObject::Circuit(trail))
        }
    }
}

/// Simple cycle of parity `want` through `e`, given an odd cycle avoiding
/// `e` in a 2-connected graph. Both parities are achievable.
pub fn cycle_with_parity_through_edge(
    g: &Graph,
    e: EdgeId,
    certificate: &OddCycleCertificate,
    want: Parity,
) -> Result<ParityWitness, ConstructError> {
    check_certificate(g, certificate);
    let mut violations = Vec::new();
    two_connected_or(g, &mut violations);
    if certificate.cycle.contains_edge(e) {
        violations.push(Violation::EdgeOnGivenOddCycle { edge: e });
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let object = parity_object_through_edge(g, e, &certificate.cycle, want, PathMode::Vertex)?;
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: want,
        theorem: TheoremTag::Thm0,
    })
}

/// Closed trail of parity `want` through `e`, given an odd cycle avoiding
/// `e` in a 2-edge-connected graph.
pub fn circuit_with_parity_through_edge(
    g: &Graph,
    e: EdgeId,
    certificate: &OddCycleCertificate,
    want: Parity,
) -> Result<ParityWitness, ConstructError> {
    check_certificate(g, certificate);
    let mut violations = Vec::new();
    two_edge_connected_or(g, &mut violations);
    if certificate.cycle.contains_edge(e) {
        violations.push(Violation::EdgeOnGivenOddCycle { edge: e });
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let object = parity_object_through_edge(g, e, &certificate.cycle, want, PathMode::Edge)?;
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: want,
        theorem: TheoremTag::Thm00,
    })
}

/// Even cycle through `e` in a 2-connected graph all of whose degrees are
/// divisible by `k`. Panics if `k < 3`.
pub fn even_cycle_through_edge(
    g: &Graph,
    e: EdgeId,
    k: usize,
) -> Result<ParityWitness, ConstructError> {
    let mut violations = Vec::new();
    two_connected_or(g, &mut violations);
    divisible_or(g, k, &mut violations);
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let object = match bipartite_or_odd_cycle(g) {
        BipartiteCheck::Bipartite(_) => {
            // Every cycle is even here; the shortest one through e will do.
            let cycle = cycle_through_edge(g, e)
                .ok_or(ConstructError::Internal("no cycle through an edge of a 2-connected graph"))?;
            if cycle.parity() != Parity::Even {
                return Err(ConstructError::Internal("odd cycle in a bipartite graph"));
            }
            WitnessObject::Cycle(cycle)
        }
        BipartiteCheck::NonBipartite(_) => {
            let avoiding = odd_cycle_avoiding_edge(g, e)
                .expect("edge id was validated")
                .ok_or_else(|| all_odd_cycles_meet_edge_contradiction(g, e))?;
            parity_object_through_edge(g, e, &avoiding.cycle, Parity::Even, PathMode::Vertex)?
        }
    };
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: Parity::Even,
        theorem: TheoremTag::Thm1,
    })
}

/// With every degree divisible by some k >= 3, removing `e` cannot leave a
/// bipartite graph whose odd cycles all used `e`: both sides of such a
/// bipartition would sum the same edge count, yet the degree sums force the
/// sides apart by 2 mod k. Asserts that arithmetic before reporting the bug.
fn all_odd_cycles_meet_edge_contradiction(g: &Graph, e: EdgeId) -> ConstructError {
    let (reduced, _) = g.delete_edge(e).expect("edge id was validated");
    if let BipartiteCheck::Bipartite(cert) = bipartite_or_odd_cycle(&reduced) {
        let (x, y) = side_degree_sums(&reduced, &cert);
        assert_eq!(x, reduced.edge_count(), "side sums double-count the edges");
        assert_eq!(x, y, "both sides carry every edge exactly once");
    }
    ConstructError::Internal("every odd cycle passes through the edge despite divisible degrees")
}

/// Even cycle through `e` in a 2-connected regular graph; the divisor is
/// inferred from the degrees, and the result matches
/// [`even_cycle_through_edge`] with that divisor exactly.
pub fn even_cycle_through_edge_regular(g: &Graph, e: EdgeId) -> Result<ParityWitness, ConstructError> {
    let k = inferred_degree_divisor(g);
    if k < 3 {
        let mut violations = Vec::new();
        two_connected_or(g, &mut violations);
        let vertex = g
            .vertices()
            .find(|&v| g.degree(v) % 3 != 0)
            .unwrap_or(VertexId::new(0));
        violations.push(Violation::DegreeNotDivisible {
            k: 3,
            vertex,
            degree: g.degree(vertex),
        });
        return Err(hyp(violations));
    }
    even_cycle_through_edge(g, e, k)
}

/// Even circuit through `e` in a 2-edge-connected graph all of whose degrees
/// are divisible by `k`. Panics if `k < 3`.
pub fn even_circuit_through_edge(
    g: &Graph,
    e: EdgeId,
    k: usize,
) -> Result<ParityWitness, ConstructError> {
    let mut violations = Vec::new();
    two_edge_connected_or(g, &mut violations);
    divisible_or(g, k, &mut violations);
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let object = match bipartite_or_odd_cycle(g) {
        BipartiteCheck::Bipartite(_) => {
            let cycle = cycle_through_edge(g, e).ok_or(ConstructError::Internal(
                "no cycle through an edge of a 2-edge-connected graph",
            ))?;
            if cycle.parity() != Parity::Even {
                return Err(ConstructError::Internal("odd cycle in a bipartite graph"));
            }
            WitnessObject::Circuit(Circuit::from_cycle(&cycle))
        }
        BipartiteCheck::NonBipartite(_) => {
            let avoiding = odd_cycle_avoiding_edge(g, e)
                .expect("edge id was validated")
                .ok_or_else(|| all_odd_cycles_meet_edge_contradiction(g, e))?;
            parity_object_through_edge(g, e, &avoiding.cycle, Parity::Even, PathMode::Edge)?
        }
    };
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: Parity::Even,
        theorem: TheoremTag::Thm5,
    })
}

/// Even circuit through `e` with the divisor inferred from the degrees; the
/// circuit analog of [`even_cycle_through_edge_regular`].
pub fn even_circuit_through_edge_regular(
    g: &Graph,
    e: EdgeId,
) -> Result<ParityWitness, ConstructError> {
    let k = inferred_degree_divisor(g);
    if k < 3 {
        let mut violations = Vec::new();
        two_edge_connected_or(g, &mut violations);
        let vertex = g
            .vertices()
            .find(|&v| g.degree(v) % 3 != 0)
            .unwrap_or(VertexId::new(0));
        violations.push(Violation::DegreeNotDivisible {
            k: 3,
            vertex,
            degree: g.degree(vertex),
        });
        return Err(hyp(violations));
    }
    even_circuit_through_edge(g, e, k)
}

/// Odd cycle through `e` in a 2-connected non-bipartite graph.
pub fn odd_cycle_through_edge(g: &Graph, e: EdgeId) -> Result<ParityWitness, ConstructError> {
    let mut violations = Vec::new();
    two_connected_or(g, &mut violations);
    let check = bipartite_or_odd_cycle(g);
    if matches!(check, BipartiteCheck::Bipartite(_)) {
        violations.push(Violation::Bipartite);
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let BipartiteCheck::NonBipartite(certificate) = check else {
        unreachable!("bipartite inputs were rejected above");
    };
    let object = if certificate.cycle.contains_edge(e) {
        WitnessObject::Cycle(certificate.cycle)
    } else {
        parity_object_through_edge(g, e, &certificate.cycle, Parity::Odd, PathMode::Vertex)?
    };
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: Parity::Odd,
        theorem: TheoremTag::Cor1,
    })
}

/// Odd circuit through `e` in a 2-edge-connected non-bipartite graph.
pub fn odd_circuit_through_edge(g: &Graph, e: EdgeId) -> Result<ParityWitness, ConstructError> {
    let mut violations = Vec::new();
    two_edge_connected_or(g, &mut violations);
    let check = bipartite_or_odd_cycle(g);
    if matches!(check, BipartiteCheck::Bipartite(_)) {
        violations.push(Violation::Bipartite);
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let BipartiteCheck::NonBipartite(certificate) = check else {
        unreachable!("bipartite inputs were rejected above");
    };
    let object = if certificate.cycle.contains_edge(e) {
        WitnessObject::Circuit(Circuit::from_cycle(&certificate.cycle))
    } else {
        parity_object_through_edge(g, e, &certificate.cycle, Parity::Odd, PathMode::Edge)?
    };
    Ok(ParityWitness {
        object,
        target: Target::Edge(e),
        parity: Parity::Odd,
        theorem: TheoremTag::Thm7,
    })
}

/// A cycle through the lowest-id edge at `v`, and if it is odd, the lowest-id
/// spare edge at `v` to reroute through.
fn cycle_at_vertex(g: &Graph, v: VertexId) -> Option<(Cycle, Option<EdgeId>)> {
    let (_, lowest) = g
        .neighbors(v)
        .iter()
        .copied()
        .min_by_key(|&(_, e)| e)?;
    let cycle = cycle_through_edge(g, lowest)?;
    let on_cycle: HashSet<EdgeId> = cycle.edges().iter().copied().collect();
    let spare = g
        .neighbors(v)
        .iter()
        .map(|&(_, e)| e)
        .filter(|e| !on_cycle.contains(e))
        .min();
    Some((cycle, spare))
}

/// Even cycle through a vertex of degree at least 3 in a 2-connected graph.
pub fn even_cycle_through_vertex(g: &Graph, v: VertexId) -> Result<ParityWitness, ConstructError> {
    assert!(g.has_vertex(v), "vertex must be in the graph");
    let mut violations = Vec::new();
    two_connected_or(g, &mut violations);
    if g.degree(v) < 3 {
        violations.push(Violation::DegreeTooSmall {
            vertex: v,
            degree: g.degree(v),
            required: 3,
        });
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let (cycle, spare) =
        cycle_at_vertex(g, v).ok_or(ConstructError::Internal("no cycle at a vertex of a 2-connected graph"))?;
    let object = if cycle.parity() == Parity::Even {
        WitnessObject::Cycle(cycle)
    } else {
        let e = spare.ok_or(ConstructError::Internal(
            "degree 3 leaves an edge off any cycle through the vertex",
        ))?;
        // The rerouted cycle passes through e, and v is an endpoint of e.
        parity_object_through_edge(g, e, &cycle, Parity::Even, PathMode::Vertex)?
    };
    Ok(ParityWitness {
        object,
        target: Target::Vertex(v),
        parity: Parity::Even,
        theorem: TheoremTag::Thm2,
    })
}

/// Even circuit through a vertex of degree at least 3 in a 2-edge-connected
/// graph. This succeeds on inputs where no even simple cycle exists, such as
/// two triangles sharing the vertex.
pub fn even_circuit_through_vertex(g: &Graph, v: VertexId) -> Result<ParityWitness, ConstructError> {
    assert!(g.has_vertex(v), "vertex must be in the graph");
    let mut violations = Vec::new();
    two_edge_connected_or(g, &mut violations);
    if g.degree(v) < 3 {
        violations.push(Violation::DegreeTooSmall {
            vertex: v,
            degree: g.degree(v),
            required: 3,
        });
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }
    let (cycle, spare) = cycle_at_vertex(g, v).ok_or(ConstructError::Internal(
        "no cycle at a vertex of a 2-edge-connected graph",
    ))?;
    let object = if cycle.parity() == Parity::Even {
        WitnessObject::Circuit(Circuit::from_cycle(&cycle))
    } else {
        let e = spare.ok_or(ConstructError::Internal(
            "degree 3 leaves an edge off any cycle through the vertex",
        ))?;
        parity_object_through_edge(g, e, &cycle, Parity::Even, PathMode::Edge)?
    };
    Ok(ParityWitness {
        object,
        target: Target::Vertex(v),
        parity: Parity::Even,
        theorem: TheoremTag::Thm6,
    })
}

/// The three candidate cycles through an odd-degree vertex, of which at least
/// one is even: `c3.len() == c1.len() + c2.len() - 2 * overlap` holds
/// exactly, and an odd `c1` and `c2` force `c3` even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateTriple {
    pub c1: Cycle,
    pub c2: Cycle,
    pub c3: Cycle,
    /// Edge count `c1` and `c2` share: the spoke to the far attachment plus
    /// the common piece of the connecting path.
    pub overlap: usize,
}

/// Builds [`CandidateTriple`] at a vertex of odd degree in a 2-edge-connected
/// graph.
///
/// Deleting `v` leaves components each seeing at least two of its neighbors;
/// were every count exactly two, the degree would be even, so some component
/// sees three. Take its three lowest neighbors, join the closest pair by a
/// shortest path `M`, run the third to `M` by a shortest path `N` meeting it
/// at `w`, and close three cycles through `v`: around `M`, and around each
/// half of `M` extended along `N`.
pub fn even_cycle_candidates_at_odd_vertex(
    g: &Graph,
    v: VertexId,
) -> Result<CandidateTriple, ConstructError> {
    assert!(g.has_vertex(v), "vertex must be in the graph");
    let mut violations = Vec::new();
    two_edge_connected_or(g, &mut violations);
    if g.degree(v) % 2 == 0 {
        violations.push(Violation::DegreeEven {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if !violations.is_empty() {
        return Err(hyp(violations));
    }

    let (h, relabeling) = g.delete_vertex(v).expect("vertex id was validated");
    let to_h = |x: VertexId| relabeling.vertex_map[x.index()].expect("x survives the deletion");
    let to_g = |x: VertexId| {
        relabeling
            .vertex_preimage(x)
            .expect("every vertex of the reduced graph has a preimage")
    };
    let comps = components(&h);
    let mut comp_of = vec![usize::MAX; h.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &x in comp {
            comp_of[x.index()] = i;
        }
    }
    let neighbors: Vec<VertexId> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
    let mut seen_per_comp = vec![0usize; comps.len()];
    for &w in &neighbors {
        seen_per_comp[comp_of[to_h(w).index()]] += 1;
    }
    if seen_per_comp.iter().any(|&c| c < 2) {
        return Err(ConstructError::Internal(
            "a component after deleting the vertex sees fewer than two of its neighbors",
        ));
    }
    // Neighbors are sorted, so this picks the qualifying component holding
    // the lowest-id neighbor.
    let chosen = neighbors
        .iter()
        .map(|&w| comp_of[to_h(w).index()])
        .find(|&c| seen_per_comp[c] >= 3)
        .ok_or(ConstructError::Internal(
            "every component sees exactly two neighbors, forcing an even degree",
        ))?;
    let anchors: Vec<VertexId> = neighbors
        .iter()
        .copied()
        .filter(|&w| comp_of[to_h(w).index()] == chosen)
        .take(3)
        .collect();
    let &[x, y, z] = anchors.as_slice() else {
        unreachable!("the chosen component holds at least three neighbors");
    };

    // Closest pair among the three, ties toward lower ids.
    let dist = |a: VertexId, b: VertexId| -> usize {
        bfs_levels(&h, to_h(a), None)[to_h(b).index()]
            .expect("anchors share a component")
    };
    let (a, b, c) = [(x, y, z), (x, z, y), (y, z, x)]
        .into_iter()
        .min_by_key(|&(a, b, _)| (dist(a, b), a, b))
        .expect("three candidate pairs");

    let m_h = bfs_path(&h, to_h(a), to_h(b), None, None).expect("anchors share a component");
    let m_set: HashSet<VertexId> = m_h.iter().copied().collect();
    let n_h = bfs_path_to_set(&h, to_h(c), &m_set, None).expect("anchors share a component");
    let w_h = *n_h.last().expect("paths are non-empty");
    let split = m_h
        .iter()
        .position(|&u| u == w_h)
        .expect("the connector ends on the path");

    let lift = |hs: &[VertexId]| -> Vec<VertexId> { hs.iter().map(|&u| to_g(u)).collect() };
    let m = lift(&m_h);
    let n = lift(&n_h);
    let first_half = &m[..=split];
    let second_half = &m[split..];
    let n_rev: Vec<VertexId> = n.iter().rev().copied().collect();

    // c1: v, a ..M.. b, v.
    let mut c1 = vec![v];
    c1.extend_from_slice(&m);
    // c2: v, b ..reverse second half.. w ..N.. c, v.
    let mut c2 = vec![v];
    c2.extend(second_half.iter().rev().copied());
    c2.extend_from_slice(&n_rev[1..]);
    // c3: v, a ..first half.. w ..N.. c, v.
    let mut c3 = vec![v];
    c3.extend_from_slice(first_half);
    c3.extend_from_slice(&n_rev[1..]);

    let build = |vs: &[VertexId]| {
        Cycle::from_vertices(g, vs)
            .map_err(|_| ConstructError::Internal("candidate walk is not a simple cycle"))
    };
    let triple = CandidateTriple {
        c1: build(&c1)?,
        c2: build(&c2)?,
        c3: build(&c3)?,
        overlap: 1 + (m_h.len() - 1 - split),
    };
    assert_eq!(
        triple.c3.len() + 2 * triple.overlap,
        triple.c1.len() + triple.c2.len(),
        "the three candidate lengths must satisfy the overlap identity",
    );
    Ok(triple)
}

/// Even cycle through a vertex of odd degree in a 2-edge-connected graph:
/// the first even member of [`even_cycle_candidates_at_odd_vertex`].
pub fn even_cycle_through_odd_degree_vertex(
    g: &Graph,
    v: VertexId,
) -> Result<ParityWitness, ConstructError> {
    let triple = even_cycle_candidates_at_odd_vertex(g, v)?;
    let object = [&triple.c1, &triple.c2, &triple.c3]
        .into_iter()
        .find(|c| c.parity() == Parity::Even)
        .cloned()
        .map(WitnessObject::Cycle)
        .ok_or(ConstructError::Internal(
            "the overlap identity guarantees an even candidate",
        ))?;
    Ok(ParityWitness {
        object,
        target: Target::Vertex(v),
        parity: Parity::Even,
        theorem: TheoremTag::Thm3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::oracle::validate_witness;

    fn k4() -> Graph {
        build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        build_graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn k33() -> Graph {
        build_graph(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap()
    }

    fn triangle_certificate(g: &Graph, vs: [usize; 3]) -> OddCycleCertificate {
        let cycle = Cycle::from_vertices(g, &vs.map(VertexId::new)).unwrap();
        OddCycleCertificate { cycle }
    }

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    fn e(i: usize) -> EdgeId {
        EdgeId::new(i)
    }

    #[test]
    fn both_parities_through_a_k4_edge() {
        let g = k4();
        let cert = triangle_certificate(&g, [0, 1, 2]);
        // Edge 5 = {2,3}? No: id 2 = {0,3}, off the triangle.
        for (want, len) in [(Parity::Even, 4), (Parity::Odd, 3)] {
            let w = cycle_with_parity_through_edge(&g, e(2), &cert, want).unwrap();
            assert_eq!(w.object.len(), len);
            assert!(w.object.contains(Target::Edge(e(2))));
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }
    }

    #[test]
    fn chord_against_a_five_cycle_realizes_zero_length_trims() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let cycle = Cycle::from_vertices(&g, &[0, 1, 2, 3, 4].map(VertexId::new)).unwrap();
        let cert = OddCycleCertificate { cycle };
        let even = cycle_with_parity_through_edge(&g, e(5), &cert, Parity::Even).unwrap();
        assert_eq!(even.object.len(), 4);
        let odd = cycle_with_parity_through_edge(&g, e(5), &cert, Parity::Odd).unwrap();
        assert_eq!(odd.object.len(), 3);
    }

    #[test]
    fn edge_on_the_certificate_is_a_violation() {
        let g = k4();
        let cert = triangle_certificate(&g, [0, 1, 2]);
        let err = cycle_with_parity_through_edge(&g, e(0), &cert, Parity::Even).unwrap_err();
        assert_eq!(
            err,
            ConstructError::Hypothesis(vec![Violation::EdgeOnGivenOddCycle { edge: e(0) }])
        );
    }

    #[test]
    fn cut_vertices_fail_the_cycle_engine_but_not_the_circuit_engine() {
        let g = bowtie();
        let cert = triangle_certificate(&g, [0, 1, 2]);
        let err = cycle_with_parity_through_edge(&g, e(5), &cert, Parity::Even).unwrap_err();
        assert_eq!(err, ConstructError::Hypothesis(vec![Violation::NotTwoConnected]));

        // Edge 5 = {3,4}: the trail detours around the left triangle.
        let even = circuit_with_parity_through_edge(&g, e(5), &cert, Parity::Even).unwrap();
        assert_eq!(even.object.len(), 6);
        assert_eq!(validate_witness(&g, &even), Ok(()));
        let odd = circuit_with_parity_through_edge(&g, e(5), &cert, Parity::Odd).unwrap();
        assert_eq!(odd.object.len(), 3);
        assert_eq!(validate_witness(&g, &odd), Ok(()));
    }

    #[test]
    fn divisible_degree_dispatch() {
        let g = k4();
        for edge in g.edge_ids() {
            let w = even_cycle_through_edge(&g, edge, 3).unwrap();
            assert_eq!(w.parity, Parity::Even);
            assert_eq!(w.theorem, TheoremTag::Thm1);
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }

        let g = k33();
        for edge in g.edge_ids() {
            let w = even_cycle_through_edge(&g, edge, 3).unwrap();
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }

        // Two triangles sharing an edge: degrees 3, 3, 2, 2.
        let book = build_graph(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let err = even_cycle_through_edge(&book, e(0), 3).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::Hypothesis(ref vs)
                if matches!(vs[0], Violation::DegreeNotDivisible { k: 3, .. })
        ));
    }

    #[test]
    fn regular_wrapper_matches_the_divisible_path() {
        let g = k4();
        for edge in g.edge_ids() {
            assert_eq!(
                even_cycle_through_edge_regular(&g, edge),
                even_cycle_through_edge(&g, edge, 3)
            );
        }
        for edge in g.edge_ids() {
            assert_eq!(
                even_circuit_through_edge_regular(&g, edge),
                even_circuit_through_edge(&g, edge, 3)
            );
        }
        let path = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let err = even_cycle_through_edge_regular(&path, e(0)).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::Hypothesis(ref vs)
                if vs.contains(&Violation::NotTwoConnected)
                    && matches!(vs[1], Violation::DegreeNotDivisible { k: 3, .. })
        ));
        let err = even_circuit_through_edge_regular(&path, e(0)).unwrap_err();
        assert!(matches!(
            err,
            ConstructError::Hypothesis(ref vs)
                if vs.contains(&Violation::NotTwoEdgeConnected)
                    && matches!(vs[1], Violation::DegreeNotDivisible { k: 3, .. })
        ));
    }

    #[test]
    fn odd_cycle_ops_reuse_or_reroute() {
        let c5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for edge in c5.edge_ids() {
            let w = odd_cycle_through_edge(&c5, edge).unwrap();
            assert_eq!(w.object.len(), 5);
        }
        let g = k4();
        for edge in g.edge_ids() {
            let w = odd_cycle_through_edge(&g, edge).unwrap();
            assert_eq!(w.object.len(), 3, "K4 keeps every edge on a triangle");
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }
    }

    #[test]
    fn odd_cycle_violations() {
        // A pendant edge hanging off a triangle: not 2-connected.
        let pendant = build_graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let err = odd_cycle_through_edge(&pendant, e(3)).unwrap_err();
        assert_eq!(err, ConstructError::Hypothesis(vec![Violation::NotTwoConnected]));

        let c6 = build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let err = odd_cycle_through_edge(&c6, e(0)).unwrap_err();
        assert_eq!(err, ConstructError::Hypothesis(vec![Violation::Bipartite]));
        let err = odd_circuit_through_edge(&c6, e(0)).unwrap_err();
        assert_eq!(err, ConstructError::Hypothesis(vec![Violation::Bipartite]));
    }

    #[test]
    fn odd_circuit_on_the_bowtie() {
        let g = bowtie();
        for edge in g.edge_ids() {
            let w = odd_circuit_through_edge(&g, edge).unwrap();
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }
    }

    #[test]
    fn even_cycle_through_high_degree_vertex() {
        let g = k4();
        for vertex in g.vertices() {
            let w = even_cycle_through_vertex(&g, vertex).unwrap();
            assert_eq!(w.object.len(), 4);
            assert!(w.object.contains(Target::Vertex(vertex)));
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }

        // Wheel on five rim vertices; the hub is vertex 0.
        let wheel = build_graph(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        let w = even_cycle_through_vertex(&wheel, v(0)).unwrap();
        assert_eq!(w.parity, Parity::Even);
        assert_eq!(validate_witness(&wheel, &w), Ok(()));
    }

    #[test]
    fn vertex_op_violations() {
        let err = even_cycle_through_vertex(&bowtie(), v(2)).unwrap_err();
        assert_eq!(err, ConstructError::Hypothesis(vec![Violation::NotTwoConnected]));

        let c5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let err = even_cycle_through_vertex(&c5, v(1)).unwrap_err();
        assert_eq!(
            err,
            ConstructError::Hypothesis(vec![Violation::DegreeTooSmall {
                vertex: v(1),
                degree: 2,
                required: 3,
            }])
        );
    }

    #[test]
    fn bowtie_center_gets_the_even_figure_eight() {
        let g = bowtie();
        let w = even_circuit_through_vertex(&g, v(2)).unwrap();
        assert_eq!(w.object.len(), 6, "no even cycle exists, only the full trail");
        assert!(w.object.contains(Target::Vertex(v(2))));
        assert_eq!(validate_witness(&g, &w), Ok(()));
    }

    #[test]
    fn odd_degree_vertex_candidates_satisfy_the_identity() {
        let g = k4();
        for vertex in g.vertices() {
            let triple = even_cycle_candidates_at_odd_vertex(&g, vertex).unwrap();
            assert_eq!(
                triple.c3.len() + 2 * triple.overlap,
                triple.c1.len() + triple.c2.len()
            );
            let w = even_cycle_through_odd_degree_vertex(&g, vertex).unwrap();
            assert_eq!(w.object.len(), 4);
            assert_eq!(validate_witness(&g, &w), Ok(()));
        }
    }

    #[test]
    fn even_degree_vertex_is_a_violation() {
        let g = bowtie();
        let err = even_cycle_through_odd_degree_vertex(&g, v(2)).unwrap_err();
        assert_eq!(
            err,
            ConstructError::Hypothesis(vec![Violation::DegreeEven {
                vertex: v(2),
                degree: 4,
            }])
        );
    }

    #[test]
    fn odd_degree_vertex_on_asymmetric_input() {
        // Two squares sharing a path, vertex 0 of degree 3.
        let g = build_graph(
            6,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 0)],
        )
        .unwrap();
        assert_eq!(g.degree(v(0)), 3);
        let w = even_cycle_through_odd_degree_vertex(&g, v(0)).unwrap();
        assert_eq!(w.parity, Parity::Even);
        assert!(w.object.contains(Target::Vertex(v(0))));
        assert_eq!(validate_witness(&g, &w), Ok(()));
    }

    #[test]
    fn inferred_divisor() {
        assert_eq!(inferred_degree_divisor(&k4()), 3);
        assert_eq!(inferred_degree_divisor(&k33()), 3);
        assert_eq!(inferred_degree_divisor(&bowtie()), 2);
        let empty = build_graph(3, &[]).unwrap();
        assert_eq!(inferred_degree_divisor(&empty), 0);
    }

    #[test]
    fn theorem_tags_round_trip() {
        for tag in TheoremTag::ALL {
            assert_eq!(tag.name().parse::<TheoremTag>().unwrap(), tag);
            assert_eq!(serde_json::to_string(&tag).unwrap(), format!("\"{tag}\""));
        }
    }
}
