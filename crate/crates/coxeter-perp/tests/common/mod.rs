#![allow(dead_code)]

use coxeter_perp::corpus::{corpus_generate, default_pool};
use coxeter_perp::graph::{CoxeterGraph, Label, Vertex};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One random connected graph from the default pool.
pub fn random_graph(seed: u64, max_rank: usize) -> CoxeterGraph {
    corpus_generate(seed, 1, max_rank, &default_pool()).remove(0)
}

/// One random connected graph whose labels avoid ∞, so that finite groups
/// are common.
pub fn random_spherical_candidate(seed: u64, max_rank: usize) -> CoxeterGraph {
    let f = Label::Finite;
    corpus_generate(seed, 1, max_rank, &[f(2), f(2), f(2), f(3), f(3), f(4), f(5)]).remove(0)
}

/// Rename the vertices by a random permutation. Returns the new graph and
/// the map from old vertex index to new vertex index.
pub fn relabel(g: &CoxeterGraph, seed: u64) -> (CoxeterGraph, Vec<Vertex>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.len()).collect();
    perm.shuffle(&mut rng);
    let new_name = |i: usize| format!("w{:03}", perm[i]);
    let h = g
        .relabeled(|n| new_name(g.vertex(n).expect("own vertex")))
        .expect("renaming is injective");
    let map = (0..g.len()).map(|i| h.vertex(&new_name(i)).expect("renamed")).collect();
    (h, map)
}
