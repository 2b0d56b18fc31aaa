//! Small named graph families used by tests, the acceptance corpus and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroundSystem, Mode};

/// `v0, v1, ...`, zero-padded so lexicographic order matches numeric order.
pub fn vertex_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> GroundSystem {
    let names = vertex_names(n);
    let edges: Vec<[String; 2]> = edges
        .into_iter()
        .map(|(u, v)| [names[u].clone(), names[v].clone()])
        .collect();
    GroundSystem::new(Mode::Graph, names.clone(), edges).expect("generated graph is well-formed")
}

pub fn edgeless(n: usize) -> GroundSystem {
    from_index_edges(n, [])
}

pub fn path(n: usize) -> GroundSystem {
    from_index_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> GroundSystem {
    assert!(n >= 3, "a cycle needs at least three vertices");
    from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> GroundSystem {
    from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// The `rows × cols` grid; vertex `(r, c)` gets index `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> GroundSystem {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    from_index_edges(rows * cols, edges)
}

/// Erdős–Rényi `G(n, p)` from a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> GroundSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    from_index_edges(n, edges)
}
