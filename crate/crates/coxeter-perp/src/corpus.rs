//! Seeded random corpora of connected Coxeter graphs for property testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{CoxeterGraph, CoxeterMatrix, Label};

/// The default label pool `{2,3,4,5,∞}`.
pub fn default_pool() -> Vec<Label> {
    vec![
        Label::Finite(2),
        Label::Finite(3),
        Label::Finite(4),
        Label::Finite(5),
        Label::Infinite,
    ]
}

/// Vertex names `v1, v2, …`, zero-padded so that name order is index order.
fn names(rank: usize, max_rank: usize) -> Vec<String> {
    let width = max_rank.to_string().len();
    (1..=rank).map(|i| format!("v{i:0width$}")).collect()
}

/// Generate `count` graphs of rank `1..=max_rank` with labels drawn from
/// `pool`.
///
/// Each graph is connected whenever the pool contains a label other than 2:
/// a random spanning tree is labelled from the non-2 part of the pool, and
/// every other pair is labelled uniformly from the whole pool. The seed
/// fully determines the output.
pub fn corpus_generate(seed: u64, count: usize, max_rank: usize, pool: &[Label]) -> Vec<CoxeterGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_rank = max_rank.max(1);
    let pool: Vec<Label> = if pool.is_empty() { default_pool() } else { pool.to_vec() };
    let linking: Vec<Label> = pool.iter().copied().filter(|&m| m != Label::Finite(2)).collect();
    (0..count)
        .map(|_| {
            let rank = rng.gen_range(1..=max_rank);
            let mut m = CoxeterMatrix::new(rank);
            for i in 0..rank {
                for j in i + 1..rank {
                    m.set(i, j, *pool.choose(&mut rng).expect("nonempty pool"));
                }
            }
            if !linking.is_empty() {
                let mut order: Vec<usize> = (0..rank).collect();
                order.shuffle(&mut rng);
                for k in 1..rank {
                    let parent = order[rng.gen_range(0..k)];
                    m.set(order[k], parent, *linking.choose(&mut rng).expect("nonempty"));
                }
            }
            CoxeterGraph::from_matrix(&names(rank, max_rank), &m).expect("generated names are valid")
        })
        .collect()
}

/// Render a corpus in the text format, one `# graph N` block per graph.
pub fn corpus_to_text(graphs: &[CoxeterGraph]) -> String {
    let mut out = String::new();
    for (i, g) in graphs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# graph {}\n", i + 1));
        out.push_str(&g.to_text());
    }
    out
}

/// Split a corpus file produced by [`corpus_to_text`] back into graphs.
pub fn corpus_parse(src: &str) -> Result<Vec<CoxeterGraph>> {
    let mut blocks: Vec<String> = Vec::new();
    for line in src.lines() {
        if line.starts_with("# graph") {
            blocks.push(String::new());
        } else if let Some(b) = blocks.last_mut() {
            b.push_str(line);
            b.push('\n');
        }
    }
    blocks.iter().map(|b| CoxeterGraph::parse_text(b)).collect()
}
