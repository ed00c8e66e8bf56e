//! Graphs embedded in the sphere, encoded as combinatorial maps.
//!
//! A map on `E` edges has `2E` darts (half-edges) numbered `0..2E`. Two
//! permutations describe it:
//!
//! - `sigma` sends a dart to the next dart counterclockwise around its vertex;
//! - `alpha` is the fixed-point-free involution pairing the two darts of an edge.
//!
//! Faces are the orbits of `phi = sigma ∘ alpha`, so the face of a dart is the
//! one on its left when walking along it away from its vertex.

mod canon;

pub use canon::{
    are_equivalent, canonical_code, CanonicalCode, CodeParseError, Embedded, EquivalenceError,
};
pub(crate) use canon::{rooted_trace, CodeBuilder};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a half-edge.
pub type Dart = usize;

/// Which isomorphisms identify two embedded graphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equivalence {
    /// Orientation-reversing homeomorphisms of the sphere are allowed.
    #[default]
    Unoriented,
    /// Only orientation-preserving homeomorphisms.
    Oriented,
}

impl Equivalence {
    pub fn allows_reflection(self) -> bool {
        matches!(self, Equivalence::Unoriented)
    }
}

/// Kind of cell a dart orbit represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cells {
    Vertices,
    Edges,
    Faces,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("a map needs at least one edge")]
    NoEdges,
    #[error("sigma has {sigma} entries but alpha has {alpha}")]
    LengthMismatch { sigma: usize, alpha: usize },
    #[error("{which} is not a permutation of 0..{n}")]
    NotPermutation { which: &'static str, n: usize },
    #[error("alpha is not a fixed-point-free involution (fails at dart {dart})")]
    NotInvolution { dart: Dart },
    #[error("the darts do not form a connected graph")]
    NotConnected,
    #[error("not spherical: V - E + F = {euler} (expected 2)")]
    NotSpherical { euler: i64 },
    #[error("malformed rotation system: {0}")]
    BadRotation(String),
}

/// Cell counts of a validated map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapStats {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: usize,
}

/// Checks the three map invariants (involution, connectivity, Euler
/// characteristic 2) and returns the cell counts.
pub fn validate(sigma: &[Dart], alpha: &[Dart]) -> Result<MapStats, MapError> {
    if sigma.len() != alpha.len() {
        return Err(MapError::LengthMismatch {
            sigma: sigma.len(),
            alpha: alpha.len(),
        });
    }
    let n = sigma.len();
    if n == 0 {
        return Err(MapError::NoEdges);
    }
    if !is_permutation(sigma) {
        return Err(MapError::NotPermutation { which: "sigma", n });
    }
    if !is_permutation(alpha) {
        return Err(MapError::NotPermutation { which: "alpha", n });
    }
    if let Some(dart) = (0..n).find(|&d| alpha[d] == d || alpha[alpha[d]] != d) {
        return Err(MapError::NotInvolution { dart });
    }
    if !is_connected(sigma, alpha) {
        return Err(MapError::NotConnected);
    }
    let n_vertices = count_cycles(n, |d| sigma[d]);
    let n_faces = count_cycles(n, |d| sigma[alpha[d]]);
    let n_edges = n / 2;
    let euler = n_vertices as i64 - n_edges as i64 + n_faces as i64;
    if euler != 2 {
        return Err(MapError::NotSpherical { euler });
    }
    Ok(MapStats {
        n_vertices,
        n_edges,
        n_faces,
    })
}

fn is_permutation(p: &[Dart]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn is_connected(sigma: &[Dart], alpha: &[Dart]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(d) = stack.pop() {
        for next in [sigma[d], alpha[d]] {
            if !seen[next] {
                seen[next] = true;
                reached += 1;
                stack.push(next);
            }
        }
    }
    reached == n
}

fn count_cycles(n: usize, f: impl Fn(Dart) -> Dart) -> usize {
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = f(d);
        }
    }
    cycles
}

/// Orbits of a permutation, each listed from its smallest dart along the
/// permutation, ordered by smallest dart.
fn cycles_of(n: usize, f: impl Fn(Dart) -> Dart) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            orbit.push(d);
            d = f(d);
        }
        out.push(orbit);
    }
    out
}

/// A connected graph embedded in the sphere.
///
/// Values are immutable once constructed and always satisfy the invariants
/// checked by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    alpha: Vec<Dart>,
}

impl CombinatorialMap {
    pub fn new(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Result<Self, MapError> {
        validate(&sigma, &alpha)?;
        Ok(Self { sigma, alpha })
    }

    pub(crate) fn new_unchecked(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Self {
        debug_assert!(validate(&sigma, &alpha).is_ok());
        Self { sigma, alpha }
    }

    /// Builds a map from per-vertex counterclockwise lists of edge ids.
    ///
    /// Edge `e` must occur exactly twice over all lists (twice in one list for
    /// a loop). Its first occurrence becomes dart `2e`, the second `2e + 1`.
    pub fn from_rotation_system(rotations: &[&[usize]]) -> Result<Self, MapError> {
        let total: usize = rotations.iter().map(|r| r.len()).sum();
        if total == 0 {
            return Err(MapError::NoEdges);
        }
        if !total.is_multiple_of(2) {
            return Err(MapError::BadRotation("odd number of edge ends".into()));
        }
        let n_edges = total / 2;
        let mut uses = vec![0usize; n_edges];
        let mut darts = Vec::with_capacity(rotations.len());
        for rot in rotations {
            let mut ds = Vec::with_capacity(rot.len());
            for &e in rot.iter() {
                if e >= n_edges || uses[e] == 2 {
                    return Err(MapError::BadRotation(format!("edge {e} used incorrectly")));
                }
                ds.push(2 * e + uses[e]);
                uses[e] += 1;
            }
            darts.push(ds);
        }
        if uses.iter().any(|&u| u != 2) {
            return Err(MapError::BadRotation("every edge needs two ends".into()));
        }
        let mut sigma = vec![0; total];
        for ds in &darts {
            for (i, &d) in ds.iter().enumerate() {
                sigma[d] = ds[(i + 1) % ds.len()];
            }
        }
        let alpha = (0..total).map(|d| d ^ 1).collect();
        Self::new(sigma, alpha)
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// Next dart along the face to the left of `d`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.alpha[d]]
    }

    pub fn sigma_images(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn alpha_images(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn sigma_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0; self.sigma.len()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inv[s] = d;
        }
        inv
    }

    pub fn orbits(&self, which: Cells) -> Vec<Vec<Dart>> {
        let n = self.n_darts();
        match which {
            Cells::Vertices => cycles_of(n, |d| self.sigma[d]),
            Cells::Edges => cycles_of(n, |d| self.alpha[d]),
            Cells::Faces => cycles_of(n, |d| self.phi(d)),
        }
    }

    /// For every dart, the index of its orbit in [`orbits`](Self::orbits).
    pub fn orbit_index(&self, which: Cells) -> Vec<usize> {
        let mut idx = vec![0; self.n_darts()];
        for (i, orbit) in self.orbits(which).iter().enumerate() {
            for &d in orbit {
                idx[d] = i;
            }
        }
        idx
    }

    pub fn n_vertices(&self) -> usize {
        count_cycles(self.n_darts(), |d| self.sigma[d])
    }

    pub fn n_faces(&self) -> usize {
        count_cycles(self.n_darts(), |d| self.phi(d))
    }

    pub fn stats(&self) -> MapStats {
        MapStats {
            n_vertices: self.n_vertices(),
            n_edges: self.n_edges(),
            n_faces: self.n_faces(),
        }
    }

    /// Vertex degrees, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.orbits(Cells::Vertices).iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Face sizes (number of darts on the boundary walk), largest first.
    pub fn face_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.orbits(Cells::Faces).iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn vertex_degree(&self, d: Dart) -> usize {
        let mut k = 1;
        let mut x = self.sigma[d];
        while x != d {
            k += 1;
            x = self.sigma[x];
        }
        k
    }

    /// Darts around the vertex of `d`, counterclockwise starting at `d`.
    pub fn vertex_darts(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.sigma[d];
        while x != d {
            out.push(x);
            x = self.sigma[x];
        }
        out
    }

    pub fn same_vertex(&self, a: Dart, b: Dart) -> bool {
        self.vertex_darts(a).contains(&b)
    }

    pub fn same_face(&self, a: Dart, b: Dart) -> bool {
        let mut x = a;
        loop {
            if x == b {
                return true;
            }
            x = self.phi(x);
            if x == a {
                return false;
            }
        }
    }

    /// Both ends of the edge of `d` sit at the same vertex.
    pub fn is_loop(&self, d: Dart) -> bool {
        self.same_vertex(d, self.alpha[d])
    }

    /// The edge of `d` borders a single face; on the sphere this is exactly
    /// an edge whose removal disconnects the graph.
    pub fn is_bridge(&self, d: Dart) -> bool {
        self.same_face(d, self.alpha[d])
    }

    /// The dual map: vertices become faces and faces become vertices.
    ///
    /// Darts keep their ids. The dual's vertex orbits are this map's face
    /// orbits and vice versa, and `m.dual().dual() == m` exactly.
    pub fn dual(&self) -> Self {
        let sigma = (0..self.n_darts()).map(|d| self.phi(d)).collect();
        Self::new_unchecked(sigma, self.alpha.clone())
    }

    /// The mirror image (orientation reversed).
    pub fn mirror(&self) -> Self {
        Self::new_unchecked(self.sigma_inverse(), self.alpha.clone())
    }

    /// Renames dart `d` to `perm[d]`.
    pub fn relabel(&self, perm: &[Dart]) -> Result<Self, MapError> {
        let n = self.n_darts();
        if perm.len() != n || !is_permutation(perm) {
            return Err(MapError::NotPermutation {
                which: "relabeling",
                n,
            });
        }
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            sigma[perm[d]] = perm[self.sigma[d]];
            alpha[perm[d]] = perm[self.alpha[d]];
        }
        Ok(Self::new_unchecked(sigma, alpha))
    }

    /// Undirected incidence of the underlying multigraph: one `(u, v)` pair
    /// with `u <= v` per edge, vertex ids as in [`orbits`](Self::orbits), sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let vertex = self.orbit_index(Cells::Vertices);
        let mut edges: Vec<(usize, usize)> = (0..self.n_darts())
            .filter(|&d| d < self.alpha[d])
            .map(|d| {
                let (a, b) = (vertex[d], vertex[self.alpha[d]]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Isomorphism invariant of the underlying multigraph: the least sorted
    /// edge list over all vertex relabelings. Two maps share a key exactly
    /// when their graphs agree once the embedding is forgotten. Cost grows as
    /// `V!`, so keep `V` small.
    pub fn underlying_graph_key(&self) -> Vec<(usize, usize)> {
        let edges = self.edge_list();
        let mut perm: Vec<usize> = (0..self.n_vertices()).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut relabeled: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            relabeled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                best = Some(relabeled);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.expect("at least one labeling")
    }
}

/// Next lexicographic permutation in place; false once the last is reached.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segment() -> CombinatorialMap {
        CombinatorialMap::new(vec![0, 1], vec![1, 0]).unwrap()
    }

    fn loop_map() -> CombinatorialMap {
        CombinatorialMap::new(vec![1, 0], vec![1, 0]).unwrap()
    }

    fn theta() -> CombinatorialMap {
        CombinatorialMap::from_rotation_system(&[&[0, 1, 2], &[2, 1, 0]]).unwrap()
    }

    #[test]
    fn segment_and_loop_cell_counts() {
        let s = segment().stats();
        assert_eq!((s.n_vertices, s.n_edges, s.n_faces), (2, 1, 1));
        let l = loop_map().stats();
        assert_eq!((l.n_vertices, l.n_edges, l.n_faces), (1, 1, 2));
    }

    #[test]
    fn orbits_of_the_loop_and_segment() {
        let l = loop_map();
        assert_eq!(l.orbits(Cells::Vertices), vec![vec![0, 1]]);
        assert_eq!(l.orbits(Cells::Faces), vec![vec![0], vec![1]]);
        let s = segment();
        assert_eq!(s.orbits(Cells::Vertices), vec![vec![0], vec![1]]);
        assert_eq!(s.orbits(Cells::Faces), vec![vec![0, 1]]);
        assert_eq!(s.orbits(Cells::Edges), vec![vec![0, 1]]);
    }

    #[test]
    fn theta_has_three_faces() {
        let t = theta();
        assert_eq!(t.n_vertices(), 2);
        assert_eq!(t.n_faces(), 3);
        assert_eq!(t.degree_sequence(), vec![3, 3]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = CombinatorialMap::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2]).unwrap_err();
        assert_eq!(err, MapError::NotConnected);
    }

    #[test]
    fn bad_involution_is_rejected() {
        let err = validate(&[1, 2, 0], &[1, 2, 0]).unwrap_err();
        assert!(matches!(err, MapError::NotInvolution { .. }));
        let err = validate(&[0, 1], &[0, 1]).unwrap_err();
        assert_eq!(err, MapError::NotInvolution { dart: 0 });
    }

    #[test]
    fn torus_is_rejected() {
        // One vertex, two edges interleaved: a + b - a - b - on the torus.
        let err = CombinatorialMap::from_rotation_system(&[&[0, 1, 0, 1]]).unwrap_err();
        assert_eq!(err, MapError::NotSpherical { euler: 0 });
    }

    #[test]
    fn empty_map_is_rejected() {
        assert_eq!(validate(&[], &[]).unwrap_err(), MapError::NoEdges);
    }

    #[test]
    fn non_permutation_is_rejected() {
        let err = validate(&[0, 0], &[1, 0]).unwrap_err();
        assert!(matches!(
            err,
            MapError::NotPermutation { which: "sigma", .. }
        ));
    }

    #[test]
    fn dual_swaps_vertices_and_faces() {
        let s = segment();
        let d = s.dual();
        assert_eq!(d.n_vertices(), s.n_faces());
        assert_eq!(d.n_faces(), s.n_vertices());
        assert_eq!(d.dual(), s);
        assert_eq!(d, loop_map());
    }

    #[test]
    fn loops_and_bridges() {
        let s = segment();
        assert!(!s.is_loop(0));
        assert!(s.is_bridge(0));
        let l = loop_map();
        assert!(l.is_loop(0));
        assert!(!l.is_bridge(0));
    }

    #[test]
    fn rotation_system_rejects_dangling_edges() {
        assert!(CombinatorialMap::from_rotation_system(&[&[0], &[1]]).is_err());
        assert!(CombinatorialMap::from_rotation_system(&[&[0, 0, 0]]).is_err());
    }

    #[test]
    fn edge_list_of_path() {
        let p = CombinatorialMap::from_rotation_system(&[&[0], &[0, 1], &[1]]).unwrap();
        assert_eq!(p.edge_list(), vec![(0, 1), (1, 2)]);
    }
}
