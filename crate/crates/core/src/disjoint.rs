//! Two disjoint paths between endpoints, found with unit-capacity max flow.
//!
//! Vertex mode asks for paths sharing no interior vertex, edge mode for paths
//! sharing no edge. Both reduce to a flow of value 2: edge mode puts mutually
//! reverse unit arcs on every edge, vertex mode additionally splits each
//! interior vertex into an in/out pair joined by a unit arc. Augmentation is
//! shortest-path BFS over arcs in insertion order, so results are
//! deterministic for a given graph.

use crate::graph::{Graph, Path, VertexId};

/// Which kind of disjointness a path pair must satisfy.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PathMode {
    /// No shared vertex except the two endpoints.
    Vertex,
    /// No shared edge; interior vertices may coincide.
    Edge,
}

/// Two paths with common endpoints, disjoint per the requested mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPathPair {
    pub first: Path,
    pub second: Path,
}

/// Paths from the two endpoints of one edge to the two endpoints of another,
/// produced by [`edge_to_edge_disjoint_paths`]. Neither path uses either
/// edge. A path may have length zero when the edges share an endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeToEdgePaths {
    /// Starts at the lower endpoint of the first edge.
    pub from_lo: Path,
    /// Starts at the higher endpoint of the first edge.
    pub from_hi: Path,
}

struct Arc {
    to: usize,
    cap: i32,
    flow: i32,
}

/// Unit-capacity flow network; arcs are stored as mutual-reverse pairs at
/// indices 2k and 2k+1.
struct FlowNet {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_pair(&mut self, a: usize, b: usize, cap_ab: i32, cap_ba: i32) {
        let i = self.arcs.len();
        self.arcs.push(Arc { to: b, cap: cap_ab, flow: 0 });
        self.arcs.push(Arc { to: a, cap: cap_ba, flow: 0 });
        self.out[a].push(i);
        self.out[b].push(i + 1);
    }

    /// One shortest augmenting path of value 1; false when none exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &i in &self.out[x] {
                let arc = &self.arcs[i];
                if arc.cap - arc.flow > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    pred[arc.to] = Some(i);
                    if arc.to == sink {
                        break 'bfs;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let i = pred[x].expect("reached nodes have a predecessor arc");
            self.arcs[i].flow += 1;
            self.arcs[i ^ 1].flow -= 1;
            x = self.arcs[i ^ 1].to;
        }
        true
    }

    /// Follows positive flow from source to sink, consuming it; call once per
    /// unit of flow value.
    fn extract_walk(&mut self, source: usize, sink: usize) -> Vec<usize> {
        let mut walk = vec![source];
        let mut x = source;
        while x != sink {
            let i = *self.out[x]
                .iter()
                .find(|&&i| self.arcs[i].flow > 0)
                .expect("flow conservation leads every unit to the sink");
            self.arcs[i].flow -= 1;
            x = self.arcs[i].to;
            walk.push(x);
        }
        walk
    }
}

/// Removes every loop from a walk, keeping the first visit of each vertex.
fn loop_erased(walk: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = Vec::new();
    for &v in walk {
        if let Some(pos) = out.iter().position(|&u| u == v) {
            out.truncate(pos + 1);
        } else {
            out.push(v);
        }
    }
    out
}

/// Two paths from `s` to `t`, disjoint per `mode`, or `None` when no such
/// pair exists. Panics if `s == t` or either vertex is out of range.
pub fn two_disjoint_paths(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    mode: PathMode,
) -> Option<DisjointPathPair> {
    assert!(g.has_vertex(s) && g.has_vertex(t), "endpoints must be in the graph");
    assert_ne!(s, t, "endpoints must differ");
    let walks = match mode {
        PathMode::Vertex => {
            // in(v) = 2v, out(v) = 2v + 1; s and t are not split, so flow
            // can only leave out(s) and only arrive at in(t).
            let n = g.vertex_count();
            let mut net = FlowNet::new(2 * n);
            for v in g.vertices() {
                if v != s && v != t {
                    net.add_pair(2 * v.index(), 2 * v.index() + 1, 1, 0);
                }
            }
            for (a, b) in g.edge_pairs() {
                net.add_pair(2 * a + 1, 2 * b, 1, 0);
                net.add_pair(2 * b + 1, 2 * a, 1, 0);
            }
            let (source, sink) = (2 * s.index() + 1, 2 * t.index());
            if !(net.augment(source, sink) && net.augment(source, sink)) {
                return None;
            }
            let a = net.extract_walk(source, sink);
            let b = net.extract_walk(source, sink);
            [a, b].map(|w| {
                let mut vs: Vec<VertexId> = w.iter().map(|&x| VertexId::new(x / 2)).collect();
                vs.dedup();
                vs
            })
        }
        PathMode::Edge => {
            let mut net = FlowNet::new(g.vertex_count());
            for (a, b) in g.edge_pairs() {
                net.add_pair(a, b, 1, 1);
            }
            let (source, sink) = (s.index(), t.index());
            if !(net.augment(source, sink) && net.augment(source, sink)) {
                return None;
            }
            let a = net.extract_walk(source, sink);
            let b = net.extract_walk(source, sink);
            [a, b].map(|w| w.into_iter().map(VertexId::new).collect::<Vec<_>>())
        }
    };
    let [first, second] = walks.map(|w| {
        Path::from_vertices(g, &loop_erased(&w)).expect("extracted walks respect adjacency")
    });
    Some(DisjointPathPair { first, second })
}

/// Checks a pair independently: both paths run `s` to `t` and satisfy the
/// mode's disjointness.
pub fn pair_is_valid(
    pair: &DisjointPathPair,
    s: VertexId,
    t: VertexId,
    mode: PathMode,
) -> bool {
    let (p, q) = (&pair.first, &pair.second);
    if p.first() != s || q.first() != s || p.last() != t || q.last() != t {
        return false;
    }
    fn interior(p: &Path) -> &[VertexId] {
        let vs = p.vertices();
        vs.get(1..vs.len().saturating_sub(1)).unwrap_or(&[])
    }
    match mode {
        PathMode::Vertex => {
            let shared: std::collections::HashSet<VertexId> =
                interior(p).iter().copied().collect();
            interior(q).iter().all(|v| !shared.contains(v))
        }
        PathMode::Edge => {
            let edges: std::collections::HashSet<_> = p.edges().iter().copied().collect();
            q.edges().iter().all(|e| !edges.contains(e))
        }
    }
}

/// Two disjoint paths joining the endpoints of edge `e` to the endpoints of
/// edge `f`, neither using `e` or `f`.
///
/// Built by subdividing both edges and running [`two_disjoint_paths`] between
/// the fresh midpoints: a midpoint has degree two, so the pair leaves through
/// both endpoints of `e` and arrives at both endpoints of `f`. Stripping the
/// midpoints leaves paths in the original graph. Panics if `e == f` or either
/// edge is unknown.
pub fn edge_to_edge_disjoint_paths(
    g: &Graph,
    e: crate::graph::EdgeId,
    f: crate::graph::EdgeId,
    mode: PathMode,
) -> Option<EdgeToEdgePaths> {
    assert_ne!(e, f, "edges must differ");
    let (e_lo, _) = g.endpoints(e).expect("first edge must be in the graph");
    let _ = g.endpoints(f).expect("second edge must be in the graph");
    let (g1, mid_e) = g.subdivide_edge(e).expect("checked above");
    let (g2, mid_f) = g1.subdivide_edge(f).expect("subdividing e keeps f's id");
    let pair = two_disjoint_paths(&g2, mid_e, mid_f, mode)?;
    let strip = |p: &Path| -> Path {
        let inner: Vec<VertexId> = p
            .vertices()
            .iter()
            .copied()
            .filter(|&v| v != mid_e && v != mid_f)
            .collect();
        Path::from_vertices(g, &inner).expect("stripped walks lie in the original graph")
    };
    let (a, b) = (strip(&pair.first), strip(&pair.second));
    let (from_lo, from_hi) = if a.first() == e_lo { (a, b) } else { (b, a) };
    Some(EdgeToEdgePaths { from_lo, from_hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeId};

    fn k4() -> Graph {
        build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn bowtie() -> Graph {
        build_graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    /// Brute force: do two mode-disjoint s-t paths exist? Tries all pairs of
    /// simple paths.
    fn brute_force_pair_exists(g: &Graph, s: VertexId, t: VertexId, mode: PathMode) -> bool {
        fn all_paths(g: &Graph, s: VertexId, t: VertexId) -> Vec<Vec<VertexId>> {
            fn extend(
                g: &Graph,
                t: VertexId,
                seq: &mut Vec<VertexId>,
                out: &mut Vec<Vec<VertexId>>,
            ) {
                let last = *seq.last().unwrap();
                if last == t {
                    out.push(seq.clone());
                    return;
                }
                for &(w, _) in g.neighbors(last) {
                    if !seq.contains(&w) {
                        seq.push(w);
                        extend(g, t, seq, out);
                        seq.pop();
                    }
                }
            }
            let mut out = Vec::new();
            extend(g, t, &mut vec![s], &mut out);
            out
        }
        let paths = all_paths(g, s, t);
        for (i, p) in paths.iter().enumerate() {
            for q in &paths[i + 1..] {
                let pp = Path::from_vertices(g, p).unwrap();
                let qq = Path::from_vertices(g, q).unwrap();
                let pair = DisjointPathPair { first: pp, second: qq };
                if pair_is_valid(&pair, s, t, mode) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn square_splits_around_both_sides() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let pair = two_disjoint_paths(&g, v(0), v(2), PathMode::Vertex).unwrap();
        assert!(pair_is_valid(&pair, v(0), v(2), PathMode::Vertex));
        let mut lens = [pair.first.len(), pair.second.len()];
        lens.sort();
        assert_eq!(lens, [2, 2]);
    }

    #[test]
    fn path_graph_has_no_pair() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(two_disjoint_paths(&g, v(0), v(2), PathMode::Vertex), None);
        assert_eq!(two_disjoint_paths(&g, v(0), v(2), PathMode::Edge), None);
    }

    #[test]
    fn bowtie_separates_the_modes() {
        // Every 0-3 path passes the center, so vertex mode fails while edge
        // mode routes around both triangles.
        let g = bowtie();
        assert_eq!(two_disjoint_paths(&g, v(0), v(3), PathMode::Vertex), None);
        let pair = two_disjoint_paths(&g, v(0), v(3), PathMode::Edge).unwrap();
        assert!(pair_is_valid(&pair, v(0), v(3), PathMode::Edge));
    }

    #[test]
    fn agrees_with_brute_force_on_fixtures() {
        let fixtures = [
            k4(),
            bowtie(),
            build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            build_graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
            build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap(),
        ];
        for g in fixtures {
            for s in g.vertices() {
                for t in g.vertices() {
                    if s >= t {
                        continue;
                    }
                    for mode in [PathMode::Vertex, PathMode::Edge] {
                        let got = two_disjoint_paths(&g, s, t, mode);
                        assert_eq!(
                            got.is_some(),
                            brute_force_pair_exists(&g, s, t, mode),
                            "{s} {t} {mode:?}"
                        );
                        if let Some(pair) = got {
                            assert!(pair_is_valid(&pair, s, t, mode));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn results_are_deterministic() {
        let g = k4();
        let a = two_disjoint_paths(&g, v(0), v(3), PathMode::Vertex).unwrap();
        let b = two_disjoint_paths(&g, v(0), v(3), PathMode::Vertex).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn edge_to_edge_on_a_five_cycle() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let got = edge_to_edge_disjoint_paths(&g, EdgeId::new(0), EdgeId::new(2), PathMode::Vertex)
            .unwrap();
        // Edge {0,1} to edge {2,3}: around one way 1-2, around the other 0-4-3.
        assert_eq!(got.from_lo.vertices(), &[v(0), v(4), v(3)]);
        assert_eq!(got.from_hi.vertices(), &[v(1), v(2)]);
    }

    #[test]
    fn edge_to_edge_with_a_shared_endpoint() {
        let g = k4();
        // Edges {0,1} and {0,2} share vertex 0; one path degenerates to it.
        let got = edge_to_edge_disjoint_paths(&g, EdgeId::new(0), EdgeId::new(1), PathMode::Vertex)
            .unwrap();
        assert_eq!(got.from_lo.vertices(), &[v(0)]);
        assert_eq!(got.from_hi.first(), v(1));
        assert_eq!(got.from_hi.last(), v(2));
        assert!(!got.from_hi.vertices().contains(&v(0)));
    }

    #[test]
    fn edge_to_edge_avoids_both_edges() {
        let g = k4();
        for e in g.edge_ids() {
            for f in g.edge_ids() {
                if e >= f {
                    continue;
                }
                for mode in [PathMode::Vertex, PathMode::Edge] {
                    let got = edge_to_edge_disjoint_paths(&g, e, f, mode)
                        .unwrap_or_else(|| panic!("K4 joins any two edges ({e}, {f})"));
                    for p in [&got.from_lo, &got.from_hi] {
                        assert!(!p.edges().contains(&e));
                        assert!(!p.edges().contains(&f));
                    }
                    let (e_lo, e_hi) = g.endpoints(e).unwrap();
                    let (f_lo, f_hi) = g.endpoints(f).unwrap();
                    assert_eq!(got.from_lo.first(), e_lo);
                    assert_eq!(got.from_hi.first(), e_hi);
                    let mut ends = [got.from_lo.last(), got.from_hi.last()];
                    ends.sort();
                    assert_eq!(ends, [f_lo, f_hi]);
                }
            }
        }
    }

    #[test]
    fn edge_mode_pair_may_share_a_vertex() {
        let g = bowtie();
        let pair = two_disjoint_paths(&g, v(0), v(4), PathMode::Edge).unwrap();
        assert!(pair_is_valid(&pair, v(0), v(4), PathMode::Edge));
        assert!(
            pair.first.vertices().contains(&v(2)) && pair.second.vertices().contains(&v(2)),
            "both routes must squeeze through the center"
        );
    }
}
