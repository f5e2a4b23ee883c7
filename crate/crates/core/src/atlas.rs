//! Exhaustive catalog of small graphs, one representative per isomorphism
//! class, for sweep-style tests that want "every graph up to n vertices".

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::checks::is_connected;
use crate::graph::{build_graph, Graph};

/// The catalog covers 0 through 7 vertices; 8 would already cost minutes.
pub const MAX_CATALOG_VERTICES: usize = 7;

/// All graphs on exactly `n` vertices up to isomorphism, in a fixed order.
/// Panics when `n` exceeds [`MAX_CATALOG_VERTICES`].
pub fn graphs_up_to_iso(n: usize) -> &'static [Graph] {
    assert!(
        n <= MAX_CATALOG_VERTICES,
        "catalog is sized for at most {MAX_CATALOG_VERTICES} vertices"
    );
    &catalog()[n]
}

/// The connected members of [`graphs_up_to_iso`].
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<&'static Graph> {
    graphs_up_to_iso(n).iter().filter(|g| is_connected(g)).collect()
}

fn catalog() -> &'static Vec<Vec<Graph>> {
    static CATALOG: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut by_n = vec![vec![build_graph(0, &[]).expect("empty graph")]];
        for n in 1..=MAX_CATALOG_VERTICES {
            let next = extend(&by_n[n - 1], n);
            by_n.push(next);
        }
        by_n
    })
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn pair_index_matrix(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    for (p, (i, j)) in vertex_pairs(n).into_iter().enumerate() {
        idx[i][j] = p;
        idx[j][i] = p;
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            cur.swap(i, k - 1);
            go(cur, k - 1, out);
            cur.swap(i, k - 1);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect::<Vec<usize>>(), n, &mut out);
    out
}

/// One relabeling table per permutation: where each pair-bit lands.
fn relabel_tables(n: usize) -> Vec<Vec<u8>> {
    let pairs = vertex_pairs(n);
    let idx = pair_index_matrix(n);
    permutations(n)
        .into_iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(i, j)| idx[perm[i]][perm[j]] as u8)
                .collect()
        })
        .collect()
}

/// The lexicographically least adjacency bitmask over all relabelings.
fn canonical_mask(mask: u32, tables: &[Vec<u8>]) -> u32 {
    tables
        .iter()
        .map(|table| {
            let mut out = 0u32;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                out |= 1 << table[bit];
                rest &= rest - 1;
            }
            out
        })
        .min()
        .expect("at least the identity relabeling")
}

/// Every n-vertex class arises from an (n-1)-vertex class by attaching the
/// new vertex to some neighborhood, so trying all of them is exhaustive.
fn extend(prev: &[Graph], n: usize) -> Vec<Graph> {
    let pairs = vertex_pairs(n);
    let idx = pair_index_matrix(n);
    let tables = relabel_tables(n);
    let mut seen = HashSet::new();
    for g in prev {
        let mut base = 0u32;
        for (u, v) in g.edge_pairs() {
            base |= 1 << idx[u][v];
        }
        for neighborhood in 0u32..1 << (n - 1) {
            let mut mask = base;
            for (i, row) in idx.iter().enumerate().take(n - 1) {
                if neighborhood >> i & 1 == 1 {
                    mask |= 1 << row[n - 1];
                }
            }
            seen.insert(canonical_mask(mask, &tables));
        }
    }
    let mut reps: Vec<u32> = seen.into_iter().collect();
    reps.sort_unstable();
    reps.into_iter()
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(p, _)| mask >> p & 1 == 1)
                .map(|(_, &pair)| pair)
                .collect();
            build_graph(n, &edges).expect("catalog masks are simple graphs")
        })
        .collect()
}
