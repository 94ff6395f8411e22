//! The fixed graph corpus used by cross-validation tests: every family at
//! small parameters plus seeded random graphs, so "for all corpus graphs"
//! means the same thing in every test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{family, Graph};

/// Seed for the random part of the corpus; changing it changes frozen
/// expectations, so don't.
pub const CORPUS_SEED: u64 = 0x5747_2020;

/// Every named family at small parameters.
pub fn family_corpus() -> Vec<Graph> {
    let mut specs = vec!["null".to_string(), "octahedron".to_string()];
    for k in 1..=5 {
        specs.push(format!("path:{k}"));
        specs.push(format!("cycle:{k}"));
    }
    for t in 0..=4 {
        specs.push(format!("complete:{t}"));
        specs.push(format!("star:{t}"));
        specs.push(format!("discrete:{t}"));
    }
    for p in 1..=3 {
        for q in p..=3 {
            specs.push(format!("biclique:{p},{q}"));
        }
    }
    for d in 1..=3 {
        specs.push(format!("hypercube:{d}"));
    }
    specs.push("grid:2,2".into());
    specs.push("grid:2,3".into());
    specs
        .iter()
        .map(|s| family(s).expect("corpus specs are valid"))
        .collect()
}

/// `count` seeded random graphs on 1..=5 vertices; each possible edge is
/// included with probability 1/2.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let m = rng.gen_range(1..=5);
            let mut edges = Vec::new();
            for a in 0..m {
                for b in a + 1..m {
                    if rng.gen_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            Graph::new(m, edges, Some(format!("random:{i}")))
                .expect("random graphs are valid by construction")
        })
        .collect()
}

/// The full cross-validation corpus: families plus 50 seeded random graphs.
pub fn corpus() -> Vec<Graph> {
    let mut graphs = family_corpus();
    graphs.extend(random_corpus(50, CORPUS_SEED));
    graphs
}
