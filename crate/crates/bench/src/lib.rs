//! Shared inputs for the criterion benchmarks.

use flowcensus_core::{CombinatorialMap, GenerationConfig};

/// A fixed five-edge map used to time canonical coding.
pub fn sample_map() -> CombinatorialMap {
    CombinatorialMap::from_rotation_system(&[&[0, 1, 2], &[0, 3], &[1, 4, 3], &[2, 4]])
        .expect("valid rotation system")
}

pub fn config(n_edges: usize, jobs: usize) -> GenerationConfig {
    GenerationConfig {
        jobs,
        ..GenerationConfig::new(n_edges)
    }
}
