//! Reproducible graph corpora: every labelled graph on few vertices, or
//! seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const EXHAUSTIVE_LIMIT: usize = 6;
const MAX_ATTEMPTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusMode {
    ExhaustiveLabeled,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub mode: CorpusMode,
    /// Number of graphs in random mode; ignored when exhaustive.
    pub count: usize,
    pub seed: u64,
    pub connected_only: bool,
}

impl CorpusSpec {
    pub fn exhaustive(min_vertices: usize, max_vertices: usize, connected_only: bool) -> CorpusSpec {
        CorpusSpec { min_vertices, max_vertices, mode: CorpusMode::ExhaustiveLabeled, count: 0, seed: 0, connected_only }
    }

    pub fn random(min_vertices: usize, max_vertices: usize, count: usize, seed: u64, connected_only: bool) -> CorpusSpec {
        CorpusSpec { min_vertices, max_vertices, mode: CorpusMode::Random, count, seed, connected_only }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// All `2^(n(n−1)/2)` graphs on the labels `1..=n`, in order of the edge
/// bitmask.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    let total: u64 = 1 << ps.len();
    (0..total).map(move |mask| {
        let edges = ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        numbered(n, edges)
    })
}

fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_parts((1..=n).map(|i| i.to_string()).collect(), edges).expect("simple edge set")
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    numbered(n, edges)
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    if spec.min_vertices > spec.max_vertices {
        return Err(Error::InvalidArgument(format!(
            "empty vertex range {}..={}",
            spec.min_vertices, spec.max_vertices
        )));
    }
    match spec.mode {
        CorpusMode::ExhaustiveLabeled => {
            if spec.max_vertices > EXHAUSTIVE_LIMIT {
                return Err(Error::InvalidArgument(format!(
                    "exhaustive corpora are limited to {EXHAUSTIVE_LIMIT} vertices"
                )));
            }
            Ok((spec.min_vertices..=spec.max_vertices)
                .flat_map(labeled_graphs)
                .filter(|g| !spec.connected_only || g.is_connected())
                .collect())
        }
        CorpusMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut out = Vec::with_capacity(spec.count);
            let mut attempts = 0;
            while out.len() < spec.count {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(Error::InvalidArgument("connectivity filter rejected too many samples".into()));
                }
                let n = rng.gen_range(spec.min_vertices..=spec.max_vertices);
                let p = rng.gen_range(0.25..0.75);
                let g = random_graph(&mut rng, n, p);
                if !spec.connected_only || g.is_connected() {
                    out.push(g);
                }
            }
            Ok(out)
        }
    }
}
