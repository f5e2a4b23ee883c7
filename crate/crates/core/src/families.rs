//! Generators for counterexample families and for seeded random instances
//! that satisfy the hypotheses the constructors need.
//!
//! Every generator returns the graph together with a designated target (the
//! distinguished edge or vertex the family is about). Random families use a
//! seeded generator and rejection sampling, so the same spec always produces
//! the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::checks::{connectivity_report, degrees_divisible_by, is_two_connected};
use crate::graph::{build_graph, EdgeId, Graph, Target, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams(msg.into())
}

/// A parameterized instance description. `generate` turns it into a graph
/// plus the designated target.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// An odd cycle of the given length plus a pendant edge; the pendant
    /// edge is a bridge, so it lies in no cycle at all.
    PendantOnOddCycle { len: usize },
    /// `pages` odd cycles of length `page` sharing one common edge; the
    /// shared edge lies only in odd cycles.
    OddBook { pages: usize, page: usize },
    /// A connected k-regular graph (k odd) with a bridge; the bridge lies
    /// in no cycle.
    RegularWithBridge { k: usize },
    /// `t` triangles sharing one center vertex; the center has even degree
    /// 2t and lies in no even cycle.
    Friendship { t: usize },
    /// A seeded 2-connected graph; the target is its lowest vertex of odd
    /// degree, and sampling rejects graphs where every degree is even.
    RandomTwoConnected { n: usize, seed: u64 },
    /// A seeded 2-connected k-regular graph via the pairing model.
    RandomKRegularTwoConnected { n: usize, k: usize, seed: u64 },
    /// A seeded 2-connected graph with every degree divisible by k; half
    /// the seeds merge in a clique blob so the result is not regular.
    RandomDivisibleDegree { n: usize, k: usize, seed: u64 },
}

impl FamilySpec {
    /// The family name used by the command line and in sidecar files.
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::PendantOnOddCycle { .. } => "pendant-on-odd-cycle",
            FamilySpec::OddBook { .. } => "odd-book",
            FamilySpec::RegularWithBridge { .. } => "regular-with-bridge",
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::RandomTwoConnected { .. } => "random-two-connected",
            FamilySpec::RandomKRegularTwoConnected { .. } => "random-k-regular",
            FamilySpec::RandomDivisibleDegree { .. } => "random-divisible-degree",
        }
    }

    /// The parameters as name/value pairs, in declaration order.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            FamilySpec::PendantOnOddCycle { len } => vec![("len", len as u64)],
            FamilySpec::OddBook { pages, page } => {
                vec![("p", pages as u64), ("page", page as u64)]
            }
            FamilySpec::RegularWithBridge { k } => vec![("k", k as u64)],
            FamilySpec::Friendship { t } => vec![("t", t as u64)],
            FamilySpec::RandomTwoConnected { n, seed } => {
                vec![("n", n as u64), ("seed", seed)]
            }
            FamilySpec::RandomKRegularTwoConnected { n, k, seed } => {
                vec![("n", n as u64), ("k", k as u64), ("seed", seed)]
            }
            FamilySpec::RandomDivisibleDegree { n, k, seed } => {
                vec![("n", n as u64), ("k", k as u64), ("seed", seed)]
            }
        }
    }

    /// Builds a spec from a family name and `key=value` parameter pairs,
    /// the form the command line passes through.
    pub fn from_cli(family: &str, params: &str, seed: u64) -> Result<FamilySpec, FamilyError> {
        let mut map = Vec::new();
        for item in params.split(',').filter(|s| !s.trim().is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got `{item}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| invalid(format!("`{key}` is not a number")))?;
            map.push((key.trim().to_string(), value));
        }
        let mut take = |key: &str| -> Result<usize, FamilyError> {
            let at = map
                .iter()
                .position(|(k, _)| k == key)
                .ok_or_else(|| invalid(format!("missing parameter `{key}`")))?;
            Ok(map.remove(at).1)
        };
        let spec = match family {
            "pendant-on-odd-cycle" => FamilySpec::PendantOnOddCycle { len: take("len")? },
            "odd-book" => FamilySpec::OddBook {
                pages: take("p")?,
                page: take("page")?,
            },
            "regular-with-bridge" => FamilySpec::RegularWithBridge { k: take("k")? },
            "friendship" => FamilySpec::Friendship { t: take("t")? },
            "random-two-connected" => FamilySpec::RandomTwoConnected { n: take("n")?, seed },
            "random-k-regular" => FamilySpec::RandomKRegularTwoConnected {
                n: take("n")?,
                k: take("k")?,
                seed,
            },
            "random-divisible-degree" => FamilySpec::RandomDivisibleDegree {
                n: take("n")?,
                k: take("k")?,
                seed,
            },
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        if let Some((key, _)) = map.first() {
            return Err(invalid(format!(
                "unknown parameter `{key}` for family `{family}`"
            )));
        }
        Ok(spec)
    }
}

/// Generates the graph and designated target a spec describes.
pub fn generate(spec: FamilySpec) -> Result<(Graph, Target), FamilyError> {
    match spec {
        FamilySpec::PendantOnOddCycle { len } => pendant_on_odd_cycle(len),
        FamilySpec::OddBook { pages, page } => odd_book(pages, page),
        FamilySpec::RegularWithBridge { k } => regular_with_bridge(k),
        FamilySpec::Friendship { t } => friendship(t),
        FamilySpec::RandomTwoConnected { n, seed } => random_two_connected(n, seed),
        FamilySpec::RandomKRegularTwoConnected { n, k, seed } => random_k_regular(n, k, seed),
        FamilySpec::RandomDivisibleDegree { n, k, seed } => random_divisible_degree(n, k, seed),
    }
}

fn odd_at_least(value: usize, floor: usize, what: &str) -> Result<(), FamilyError> {
    if value % 2 == 0 {
        return Err(invalid(format!("{what} must be odd, got {value}")));
    }
    if value < floor {
        return Err(invalid(format!("{what} must be at least {floor}, got {value}")));
    }
    Ok(())
}

fn pendant_on_odd_cycle(len: usize) -> Result<(Graph, Target), FamilyError> {
    odd_at_least(len, 3, "cycle length")?;
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.push((0, len));
    let g = build_graph(len + 1, &edges).expect("pendant family edges are simple");
    Ok((g, Target::Edge(EdgeId::new(len))))
}

fn odd_book(pages: usize, page: usize) -> Result<(Graph, Target), FamilyError> {
    if pages < 2 {
        return Err(invalid(format!("page count must be at least 2, got {pages}")));
    }
    odd_at_least(page, 3, "page length")?;
    let inner = page - 2;
    let mut edges = vec![(0, 1)];
    for p in 0..pages {
        let base = 2 + p * inner;
        let chain: Vec<usize> = std::iter::once(0)
            .chain(base..base + inner)
            .chain(std::iter::once(1))
            .collect();
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    let g = build_graph(2 + pages * inner, &edges).expect("book family edges are simple");
    Ok((g, Target::Edge(EdgeId::new(0))))
}

/// One half of the bridge construction: a clique on `k + 2` vertices minus
/// a near-perfect matching leaves everything at degree k except the
/// unmatched vertex; removing one edge at the unmatched vertex then leaves
/// exactly one vertex at degree k - 1.
fn bridge_gadget(k: usize, offset: usize, edges: &mut Vec<(usize, usize)>) {
    let banned = |i: usize, j: usize| {
        (i == 0 && j == 1) || (j == i + 1 && i % 2 == 1)
    };
    for i in 0..k + 2 {
        for j in i + 1..k + 2 {
            if !banned(i, j) {
                edges.push((offset + i, offset + j));
            }
        }
    }
}

fn regular_with_bridge(k: usize) -> Result<(Graph, Target), FamilyError> {
    odd_at_least(k, 3, "degree")?;
    let mut edges = Vec::new();
    bridge_gadget(k, 0, &mut edges);
    bridge_gadget(k, k + 2, &mut edges);
    edges.push((1, k + 3));
    let g = build_graph(2 * (k + 2), &edges).expect("bridge family edges are simple");
    let bridge = EdgeId::new(g.edge_count() - 1);
    if !degrees_divisible_by(&g, k) || g.vertices().any(|v| g.degree(v) != k) {
        return Err(FamilyError::GenerationFailed("gadget is not regular".into()));
    }
    let report = connectivity_report(&g);
    if report.components.len() != 1 || !report.bridges.contains(&bridge) {
        return Err(FamilyError::GenerationFailed(
            "gadget join lost the bridge".into(),
        ));
    }
    Ok((g, Target::Edge(bridge)))
}

fn friendship(t: usize) -> Result<(Graph, Target), FamilyError> {
    if t < 2 {
        return Err(invalid(format!("triangle count must be at least 2, got {t}")));
    }
    let mut edges = Vec::new();
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    let g = build_graph(2 * t + 1, &edges).expect("friendship family edges are simple");
    Ok((g, Target::Vertex(VertexId::new(0))))
}

const SAMPLING_ATTEMPTS: usize = 10_000;

fn sampling_exhausted() -> FamilyError {
    FamilyError::GenerationFailed(format!(
        "no acceptable sample in {SAMPLING_ATTEMPTS} attempts"
    ))
}

fn random_two_connected(n: usize, seed: u64) -> Result<(Graph, Target), FamilyError> {
    if n < 4 {
        return Err(invalid(format!(
            "need at least 4 vertices for an odd-degree target, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_ATTEMPTS {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.45) {
                    edges.push((i, j));
                }
            }
        }
        let g = build_graph(n, &edges).expect("sampled pairs are distinct");
        if !is_two_connected(&g) {
            continue;
        }
        if let Some(v) = g.vertices().find(|&v| g.degree(v) % 2 == 1) {
            return Ok((g, Target::Vertex(v)));
        }
    }
    Err(sampling_exhausted())
}

/// One pairing-model draw: k points per vertex, shuffled and paired off.
/// Returns the edge list only when it is loop-free and duplicate-free.
fn pairing_draw(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n * k).collect();
    points.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = points
        .chunks_exact(2)
        .map(|pair| {
            let (u, v) = (pair[0] / k, pair[1] / k);
            (u.min(v), u.max(v))
        })
        .collect();
    edges.sort_unstable();
    let simple = edges.iter().all(|&(u, v)| u != v)
        && edges.windows(2).all(|w| w[0] != w[1]);
    simple.then_some(edges)
}

fn check_regular_params(n: usize, k: usize) -> Result<(), FamilyError> {
    if k < 3 {
        return Err(invalid(format!("degree must be at least 3, got {k}")));
    }
    if n <= k {
        return Err(invalid(format!("need more than {k} vertices, got {n}")));
    }
    if n * k % 2 == 1 {
        return Err(invalid(format!("{n} vertices of degree {k} is an odd total")));
    }
    Ok(())
}

fn random_k_regular(n: usize, k: usize, seed: u64) -> Result<(Graph, Target), FamilyError> {
    check_regular_params(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_ATTEMPTS {
        let Some(edges) = pairing_draw(n, k, &mut rng) else {
            continue;
        };
        let g = build_graph(n, &edges).expect("draw was checked simple");
        if is_two_connected(&g) {
            return Ok((g, Target::Edge(EdgeId::new(0))));
        }
    }
    Err(sampling_exhausted())
}

fn random_divisible_degree(n: usize, k: usize, seed: u64) -> Result<(Graph, Target), FamilyError> {
    check_regular_params(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (base, _) = random_k_regular(n, k, seed)?;
    if !rng.gen_bool(0.5) {
        return Ok((base, Target::Edge(EdgeId::new(0))));
    }
    // Merge in a k-regular clique blob at two base vertices. The two merge
    // points end up with degree 2k, and sharing two vertices with a
    // 2-connected blob preserves 2-connectivity. The merge pair is chosen
    // nonadjacent so no blob edge duplicates a base edge.
    let Some((u1, u2)) = nonadjacent_pair(&base) else {
        return Err(FamilyError::GenerationFailed(
            "base graph has no nonadjacent pair to merge at".into(),
        ));
    };
    let blob = if k % 2 == 1 { k + 1 } else { k + 2 };
    let matched = |i: usize, j: usize| k % 2 == 0 && i % 2 == 0 && j == i + 1;
    let to_host = |i: usize| match i {
        0 => u1,
        1 => u2,
        _ => n + i - 2,
    };
    let mut edges = base.edge_pairs();
    for i in 0..blob {
        for j in i + 1..blob {
            if !matched(i, j) {
                edges.push((to_host(i), to_host(j)));
            }
        }
    }
    let g = build_graph(n + blob - 2, &edges).expect("merge pair is nonadjacent");
    if !degrees_divisible_by(&g, k) || !is_two_connected(&g) {
        return Err(FamilyError::GenerationFailed(
            "blob merge broke the invariants".into(),
        ));
    }
    Ok((g, Target::Edge(EdgeId::new(0))))
}

fn nonadjacent_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| g.edge_between(VertexId::new(i), VertexId::new(j)).is_none())
}
