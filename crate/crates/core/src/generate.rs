//! Isomorph-free generation of connected spherical maps with a fixed number
//! of edges.
//!
//! With `alpha` fixed to `(0 1)(2 3)…`, every map on `E` edges appears as some
//! `sigma` on the `2E` darts. The generator walks all `(2E)!` candidates,
//! keeps the connected spherical ones, collapses them to rooted maps through
//! the breadth-first trace from dart 0, and finally deduplicates the rooted
//! maps by canonical code. Work is sharded on `sigma(0)`.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combmap::{
    next_permutation, rooted_trace, CanonicalCode, CodeBuilder, CombinatorialMap, Dart, Equivalence,
};
use crate::marks::{Mark, MarkKind};

pub const MAX_EDGES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationConfig {
    pub n_edges: usize,
    pub equivalence: Equivalence,
    /// Worker threads; 0 lets the runtime pick.
    pub jobs: usize,
}

impl GenerationConfig {
    pub fn new(n_edges: usize) -> Self {
        Self {
            n_edges,
            equivalence: Equivalence::default(),
            jobs: 0,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("edge count {0} outside the supported range 1..={MAX_EDGES}")]
    EdgeCountOutOfRange(usize),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// One equivalence class of maps with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapClass {
    pub code: CanonicalCode,
    pub map: CombinatorialMap,
}

fn check_config(cfg: &GenerationConfig) -> Result<(), GenerateError> {
    if (1..=MAX_EDGES).contains(&cfg.n_edges) {
        Ok(())
    } else {
        Err(GenerateError::EdgeCountOutOfRange(cfg.n_edges))
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, GenerateError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| GenerateError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

fn cycle_count(n: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut seen = 0u32;
    let mut cycles = 0;
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        cycles += 1;
        let mut d = start;
        while seen & (1 << d) == 0 {
            seen |= 1 << d;
            d = f(d);
        }
    }
    cycles
}

fn connected(sigma: &[Dart]) -> bool {
    let n = sigma.len();
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let d = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        for x in [sigma[d], d ^ 1] {
            if seen & (1 << x) == 0 {
                seen |= 1 << x;
                frontier |= 1 << x;
            }
        }
    }
    seen == full
}

/// Candidate filter with `alpha(d) = d ^ 1`.
fn is_spherical_connected(sigma: &[Dart]) -> bool {
    let n = sigma.len();
    let v = cycle_count(n, |d| sigma[d]);
    let f = cycle_count(n, |d| sigma[d ^ 1]);
    v + f == n / 2 + 2 && connected(sigma)
}

fn pack(trace: &[u32]) -> u128 {
    trace.iter().fold(0u128, |acc, &w| (acc << 4) | w as u128)
}

fn unpack(key: u128, n: usize) -> CombinatorialMap {
    let mut words = vec![0u32; 2 * n];
    let mut k = key;
    for w in words.iter_mut().rev() {
        *w = (k & 0xf) as u32;
        k >>= 4;
    }
    let sigma = words.iter().step_by(2).map(|&w| w as Dart).collect();
    let alpha = words
        .iter()
        .skip(1)
        .step_by(2)
        .map(|&w| w as Dart)
        .collect();
    CombinatorialMap::new_unchecked(sigma, alpha)
}

/// Rooted (oriented) maps found among the candidates with `sigma(0) = first`.
fn rooted_keys_in_shard(n: usize, first: Dart) -> HashSet<u128> {
    let alpha: Vec<Dart> = (0..n).map(|d| d ^ 1).collect();
    let mut sigma = Vec::with_capacity(n);
    sigma.push(first);
    sigma.extend((0..n).filter(|&d| d != first));
    let mut keys = HashSet::new();
    loop {
        if is_spherical_connected(&sigma) {
            keys.insert(pack(&rooted_trace(&sigma, &alpha, 0)));
        }
        if !next_permutation(&mut sigma[1..]) {
            break;
        }
    }
    keys
}

/// All connected spherical maps with `cfg.n_edges` edges, one per class,
/// sorted by canonical code. Output does not depend on `cfg.jobs`.
pub fn generate_maps(cfg: &GenerationConfig) -> Result<Vec<MapClass>, GenerateError> {
    check_config(cfg)?;
    let n = 2 * cfg.n_edges;
    let eq = cfg.equivalence;
    let codes: BTreeSet<CanonicalCode> = with_pool(cfg.jobs, || {
        let rooted: HashSet<u128> = (0..n)
            .into_par_iter()
            .map(|first| rooted_keys_in_shard(n, first))
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let rooted: Vec<u128> = rooted.into_iter().collect();
        rooted
            .par_iter()
            .map(|&key| CodeBuilder::new(&unpack(key, n), eq).code(None))
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    })?;
    Ok(codes
        .into_iter()
        .map(|code| MapClass {
            map: code.map(),
            code,
        })
        .collect())
}

/// A map together with one of its loop-free degree-3 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree3Vertex {
    pub map_code: CanonicalCode,
    pub map: CombinatorialMap,
    /// Darts at the vertex, counterclockwise.
    pub vertex: Vec<Dart>,
    /// Key of the (map, vertex) pair: the least T-mark code over its darts.
    pub key: CanonicalCode,
}

/// Every (map, loop-free degree-3 vertex) pair, one per class of pairs,
/// sorted by map code and then pair key.
pub fn generate_maps_with_degree3_vertex(
    cfg: &GenerationConfig,
) -> Result<Vec<Degree3Vertex>, GenerateError> {
    let maps = generate_maps(cfg)?;
    let mut out = Vec::new();
    for class in maps {
        let builder = CodeBuilder::new(&class.map, cfg.equivalence);
        let mut seen = BTreeSet::new();
        let mut found = Vec::new();
        for vertex in class.map.orbits(crate::combmap::Cells::Vertices) {
            if vertex.len() != 3 || vertex.iter().any(|&d| vertex.contains(&class.map.alpha(d))) {
                continue;
            }
            let key = vertex
                .iter()
                .map(|&d| {
                    builder.code(Some(Mark {
                        kind: MarkKind::T,
                        dart: d,
                    }))
                })
                .min()
                .expect("degree 3");
            if seen.insert(key.clone()) {
                found.push((key, vertex));
            }
        }
        found.sort();
        out.extend(found.into_iter().map(|(key, vertex)| Degree3Vertex {
            map_code: class.code.clone(),
            map: class.map.clone(),
            vertex,
            key,
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_walk_visits_everything() {
        let mut v = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(v, vec![3, 2, 1, 0]);
    }

    #[test]
    fn pack_round_trip() {
        let seg = CombinatorialMap::new(vec![0, 1], vec![1, 0]).unwrap();
        let key = pack(&rooted_trace(seg.sigma_images(), seg.alpha_images(), 0));
        assert_eq!(unpack(key, 2), seg);
    }

    #[test]
    fn edge_range_is_enforced() {
        assert_eq!(
            generate_maps(&GenerationConfig::new(0)).unwrap_err(),
            GenerateError::EdgeCountOutOfRange(0)
        );
        assert_eq!(
            generate_maps(&GenerationConfig::new(6)).unwrap_err(),
            GenerateError::EdgeCountOutOfRange(6)
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(generate_maps(&GenerationConfig::new(1)).unwrap().len(), 2);
        assert_eq!(generate_maps(&GenerationConfig::new(2)).unwrap().len(), 4);
        assert_eq!(generate_maps(&GenerationConfig::new(3)).unwrap().len(), 14);
    }

    #[test]
    fn degree3_vertices_with_two_and_three_edges() {
        assert!(generate_maps_with_degree3_vertex(&GenerationConfig::new(2))
            .unwrap()
            .is_empty());
        let three = generate_maps_with_degree3_vertex(&GenerationConfig::new(3)).unwrap();
        let mut shapes: Vec<(usize, usize)> = three
            .iter()
            .map(|x| (x.map.n_vertices(), x.map.n_faces()))
            .collect();
        shapes.sort();
        // theta, double edge with tail, Y-graph
        assert_eq!(shapes, vec![(2, 3), (3, 2), (4, 1)]);
    }
}
