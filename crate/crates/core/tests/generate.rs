//! Generation output is deterministic and complete.

use std::collections::BTreeSet;

use flowcensus_core::catalog::{labels, map_catalog};
use flowcensus_core::generate::generate_maps_with_degree3_vertex;
use flowcensus_core::{
    canonical_code, generate_maps, CombinatorialMap, Dart, Equivalence, GenerationConfig,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg(n_edges: usize, equivalence: Equivalence, jobs: usize) -> GenerationConfig {
    GenerationConfig {
        n_edges,
        equivalence,
        jobs,
    }
}

#[test]
fn thread_count_does_not_change_output() {
    for eq in [Equivalence::Unoriented, Equivalence::Oriented] {
        for n in 1..=5 {
            let serial = generate_maps(&cfg(n, eq, 1)).unwrap();
            let parallel = generate_maps(&cfg(n, eq, 4)).unwrap();
            assert_eq!(serial, parallel);
        }
    }
}

#[test]
fn random_maps_land_in_the_generated_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=5 {
        for eq in [Equivalence::Unoriented, Equivalence::Oriented] {
            let codes: BTreeSet<_> = generate_maps(&cfg(n, eq, 0))
                .unwrap()
                .into_iter()
                .map(|c| c.code)
                .collect();
            let alpha: Vec<Dart> = (0..2 * n).map(|d| d ^ 1).collect();
            let mut hits = 0;
            for _ in 0..1000 {
                let mut sigma: Vec<Dart> = (0..2 * n).collect();
                sigma.shuffle(&mut rng);
                if let Ok(m) = CombinatorialMap::new(sigma, alpha.clone()) {
                    hits += 1;
                    assert!(codes.contains(&canonical_code(&m, None, eq).unwrap()));
                }
            }
            assert!(hits > 0);
        }
    }
}

#[test]
fn map_set_is_closed_under_duality() {
    for n in 1..=5 {
        let maps = generate_maps(&cfg(n, Equivalence::Unoriented, 0)).unwrap();
        let codes: BTreeSet<_> = maps.iter().map(|c| c.code.clone()).collect();
        for c in &maps {
            let d = canonical_code(&c.map.dual(), None, Equivalence::Unoriented).unwrap();
            assert!(codes.contains(&d));
        }
    }
}

#[test]
fn degree3_vertex_pairs_with_three_edges() {
    // Theta graph, double edge with a tail, and the three-leaf star; the
    // loop-and-tail map with two edges has no loop-free degree-3 vertex.
    let three = generate_maps_with_degree3_vertex(&cfg(3, Equivalence::Unoriented, 0)).unwrap();
    assert_eq!(three.len(), 3);
    assert!(
        generate_maps_with_degree3_vertex(&cfg(2, Equivalence::Unoriented, 0))
            .unwrap()
            .is_empty()
    );
}

#[test]
fn every_small_map_has_a_label() {
    let names = labels(Equivalence::Unoriented);
    for n in 1..=3 {
        let cat = map_catalog(n, Equivalence::Unoriented, 0).unwrap();
        for e in &cat.entries {
            let label = e
                .label
                .as_deref()
                .unwrap_or_else(|| panic!("no label for {}", e.code));
            assert!(label.starts_with(&format!("G^{n}_")));
            assert_eq!(
                names.get(&e.code.to_string()).map(String::as_str),
                Some(label)
            );
        }
    }
}

#[test]
fn every_small_flow_has_a_label() {
    use flowcensus_core::catalog::{bifurcation_catalog, CatalogKind};
    let u = Equivalence::Unoriented;
    let mut labelled = Vec::new();
    for (kind, n) in [
        (CatalogKind::SaddleNode, 1),
        (CatalogKind::SaddleNode, 2),
        (CatalogKind::SaddleConnection, 2),
    ] {
        for e in bifurcation_catalog(kind, n, u, 0).unwrap().entries {
            labelled.push(e.label.unwrap_or_else(|| panic!("no label for {}", e.code)));
        }
    }
    let numbers: BTreeSet<usize> = labelled
        .iter()
        .map(|l| l.split(':').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(numbers, (1..=16).collect());
}
