//! Separatrix diagrams of the flows encoded by marked maps.
//!
//! Vertices of the map are sources, faces are sinks and edges are saddles
//! whose stable separatrices run from the two end vertices and whose
//! unstable separatrices run into the two side faces. A mark then changes
//! the picture locally:
//!
//! - source mark: the marked half-edge is contracted, fusing its vertex and
//!   its saddle into a saddle-node;
//! - sink mark: the dual construction, fusing a face with a saddle;
//! - T-mark: the T-vertex is a saddle whose stable manifold is the two
//!   collinear edges, and one of its unstable separatrices runs along the
//!   perpendicular edge into a second saddle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combmap::{CanonicalCode, Cells, CombinatorialMap, Dart, Equivalence};
use crate::marks::{check_mark, MarkError, MarkKind, MarkedMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    Source,
    Sink,
    Saddle,
    SaddleNodeSource,
    SaddleNodeSink,
}

/// The cell (or cells) of the marked map a singular point comes from.
/// Indices refer to [`CombinatorialMap::orbits`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "cell", rename_all = "kebab-case")]
pub enum Origin {
    Vertex {
        index: usize,
    },
    Face {
        index: usize,
    },
    Edge {
        index: usize,
    },
    /// Saddle-node fused from a vertex and the marked edge.
    VertexEdge {
        vertex: usize,
        edge: usize,
    },
    /// Saddle-node fused from a face and the marked edge.
    FaceEdge {
        face: usize,
        edge: usize,
    },
    /// Saddle sitting at the T-vertex.
    TVertex {
        vertex: usize,
    },
    /// Saddle on the perpendicular edge.
    Perpendicular {
        edge: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularPoint {
    pub id: usize,
    pub kind: PointKind,
    pub origin: Origin,
}

/// A directed separatrix `from → to`.
///
/// `owner` is the saddle (or saddle-node) whose invariant manifold contains
/// the arc and `stable` says whether it is part of the stable manifold of
/// the owner. `dart` is the half-edge of the map the arc was built from: for
/// stable arcs it runs along the dart, for unstable arcs it crosses into the
/// face on the dart's left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Separatrix {
    pub from: usize,
    pub to: usize,
    pub owner: usize,
    pub stable: bool,
    pub dart: Dart,
    /// The arc joins two saddles.
    #[serde(default)]
    pub connection: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatrixDiagram {
    pub code: CanonicalCode,
    pub mark: MarkKind,
    pub points: Vec<SingularPoint>,
    pub separatrices: Vec<Separatrix>,
    pub saddle_connection: Option<(usize, usize)>,
}

/// Singular point counts by kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointSummary {
    pub sources: usize,
    pub sinks: usize,
    pub saddles: usize,
    pub saddle_node_sources: usize,
    pub saddle_node_sinks: usize,
    pub saddle_connections: usize,
}

impl PointSummary {
    pub fn total(&self) -> usize {
        self.sources + self.sinks + self.saddles + self.saddle_node_sources + self.saddle_node_sinks
    }

    /// Counts of the Morse (codimension zero) flow of an unmarked map.
    pub fn morse(map: &CombinatorialMap) -> Self {
        let s = map.stats();
        PointSummary {
            sources: s.n_vertices,
            sinks: s.n_faces,
            saddles: s.n_edges,
            ..Default::default()
        }
    }

    /// Counts predicted from the cell numbers of a marked map.
    pub fn expected(m: &MarkedMap) -> Self {
        let s = m.map().stats();
        match m.kind() {
            MarkKind::Source => PointSummary {
                sources: s.n_vertices - 1,
                sinks: s.n_faces,
                saddles: s.n_edges - 1,
                saddle_node_sources: 1,
                ..Default::default()
            },
            MarkKind::Sink => PointSummary {
                sources: s.n_vertices,
                sinks: s.n_faces - 1,
                saddles: s.n_edges - 1,
                saddle_node_sinks: 1,
                ..Default::default()
            },
            MarkKind::T => PointSummary {
                sources: s.n_vertices - 1,
                sinks: s.n_faces,
                saddles: s.n_edges - 1,
                saddle_connections: 1,
                ..Default::default()
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    InvalidMark(#[from] MarkError),
    #[error(
        "point {point} ({kind:?}) has {incoming} incoming and {outgoing} outgoing separatrices"
    )]
    BadValence {
        point: usize,
        kind: PointKind,
        incoming: usize,
        outgoing: usize,
    },
    #[error("separatrices form a directed cycle")]
    Cycle,
    #[error("point counts {found:?} differ from the expected {expected:?}")]
    WrongCounts {
        found: PointSummary,
        expected: PointSummary,
    },
    #[error("saddle connection record does not match the mark")]
    ConnectionMismatch,
}

struct Builder {
    points: Vec<SingularPoint>,
    separatrices: Vec<Separatrix>,
}

impl Builder {
    fn point(&mut self, kind: PointKind, origin: Origin) -> usize {
        let id = self.points.len();
        self.points.push(SingularPoint { id, kind, origin });
        id
    }

    fn arc(&mut self, from: usize, to: usize, owner: usize, stable: bool, dart: Dart) {
        self.separatrices.push(Separatrix {
            from,
            to,
            owner,
            stable,
            dart,
            connection: false,
        });
    }
}

struct Cellular {
    vertex: Vec<usize>,
    face: Vec<usize>,
    edge: Vec<usize>,
    n_vertices: usize,
    n_faces: usize,
}

impl Cellular {
    fn of(map: &CombinatorialMap) -> Self {
        Self {
            vertex: map.orbit_index(Cells::Vertices),
            face: map.orbit_index(Cells::Faces),
            edge: map.orbit_index(Cells::Edges),
            n_vertices: map.n_vertices(),
            n_faces: map.n_faces(),
        }
    }
}

/// Diagram of a source-marked map.
fn realize_source(map: &CombinatorialMap, d: Dart) -> Builder {
    let cells = Cellular::of(map);
    let mut b = Builder {
        points: Vec::new(),
        separatrices: Vec::new(),
    };
    let merged_vertex = cells.vertex[d];
    let merged_edge = cells.edge[d];
    let sn = b.point(
        PointKind::SaddleNodeSource,
        Origin::VertexEdge {
            vertex: merged_vertex,
            edge: merged_edge,
        },
    );
    let vertex_point: Vec<usize> = (0..cells.n_vertices)
        .map(|v| {
            if v == merged_vertex {
                sn
            } else {
                b.point(PointKind::Source, Origin::Vertex { index: v })
            }
        })
        .collect();
    let face_point: Vec<usize> = (0..cells.n_faces)
        .map(|f| b.point(PointKind::Sink, Origin::Face { index: f }))
        .collect();
    for x in 0..map.n_darts() {
        let y = map.alpha(x);
        if x > y {
            continue;
        }
        if cells.edge[x] == merged_edge {
            let other = if x == d { y } else { x };
            b.arc(vertex_point[cells.vertex[other]], sn, sn, true, other);
            b.arc(sn, face_point[cells.face[x]], sn, false, x);
            b.arc(sn, face_point[cells.face[y]], sn, false, y);
            continue;
        }
        let s = b.point(
            PointKind::Saddle,
            Origin::Edge {
                index: cells.edge[x],
            },
        );
        for z in [x, y] {
            b.arc(vertex_point[cells.vertex[z]], s, s, true, z);
            b.arc(s, face_point[cells.face[z]], s, false, z);
        }
    }
    b
}

/// Diagram of a T-marked map with perpendicular dart `p`.
fn realize_t(map: &CombinatorialMap, p: Dart) -> (Builder, (usize, usize)) {
    let cells = Cellular::of(map);
    let mut b = Builder {
        points: Vec::new(),
        separatrices: Vec::new(),
    };
    let t = cells.vertex[p];
    let c1 = map.sigma(p);
    let c2 = map.sigma(c1);
    let s1 = b.point(PointKind::Saddle, Origin::TVertex { vertex: t });
    let s2 = b.point(
        PointKind::Saddle,
        Origin::Perpendicular {
            edge: cells.edge[p],
        },
    );
    let vertex_point: Vec<Option<usize>> = (0..cells.n_vertices)
        .map(|v| (v != t).then(|| b.point(PointKind::Source, Origin::Vertex { index: v })))
        .collect();
    let face_point: Vec<usize> = (0..cells.n_faces)
        .map(|f| b.point(PointKind::Sink, Origin::Face { index: f }))
        .collect();
    let source_at = |x: Dart| vertex_point[cells.vertex[x]].expect("no loops at the T-vertex");

    for c in [c1, c2] {
        let far = map.alpha(c);
        b.arc(source_at(far), s1, s1, true, far);
    }
    // The unstable side of the T-saddle away from the perpendicular edge
    // opens into the face cornered between the two collinear darts.
    b.arc(s1, face_point[cells.face[c2]], s1, false, c2);
    b.separatrices.push(Separatrix {
        from: s1,
        to: s2,
        owner: s1,
        stable: false,
        dart: p,
        connection: true,
    });
    let far = map.alpha(p);
    b.arc(source_at(far), s2, s2, true, far);
    b.arc(s2, face_point[cells.face[p]], s2, false, p);
    b.arc(s2, face_point[cells.face[far]], s2, false, far);

    let at_t = [p, c1, c2];
    for x in 0..map.n_darts() {
        let y = map.alpha(x);
        if x > y || at_t.contains(&x) || at_t.contains(&y) {
            continue;
        }
        let s = b.point(
            PointKind::Saddle,
            Origin::Edge {
                index: cells.edge[x],
            },
        );
        for z in [x, y] {
            b.arc(source_at(z), s, s, true, z);
            b.arc(s, face_point[cells.face[z]], s, false, z);
        }
    }
    (b, (s1, s2))
}

/// Swaps the roles of vertices and faces, turning a diagram built on the
/// dual map into the diagram of the reversed flow.
fn reverse_builder(b: &mut Builder) {
    for p in &mut b.points {
        p.kind = match p.kind {
            PointKind::Source => PointKind::Sink,
            PointKind::Sink => PointKind::Source,
            PointKind::Saddle => PointKind::Saddle,
            PointKind::SaddleNodeSource => PointKind::SaddleNodeSink,
            PointKind::SaddleNodeSink => PointKind::SaddleNodeSource,
        };
        p.origin = match p.origin {
            Origin::Vertex { index } => Origin::Face { index },
            Origin::Face { index } => Origin::Vertex { index },
            Origin::VertexEdge { vertex, edge } => Origin::FaceEdge { face: vertex, edge },
            Origin::FaceEdge { face, edge } => Origin::VertexEdge { vertex: face, edge },
            other => other,
        };
    }
    for s in &mut b.separatrices {
        std::mem::swap(&mut s.from, &mut s.to);
        s.stable = !s.stable;
    }
}

/// Builds the separatrix diagram of the flow encoded by `m`; the stored code
/// uses the default equivalence.
pub fn realize(m: &MarkedMap) -> Result<SeparatrixDiagram, DiagramError> {
    realize_with(m, Equivalence::default())
}

pub fn realize_with(m: &MarkedMap, eq: Equivalence) -> Result<SeparatrixDiagram, DiagramError> {
    let mark = m.mark();
    check_mark(m.map(), mark)?;
    let (builder, connection) = match mark.kind {
        MarkKind::Source => (realize_source(m.map(), mark.dart), None),
        MarkKind::Sink => {
            // The dual's vertex orbits are this map's faces with the same
            // indices, so origins translate directly.
            let mut b = realize_source(&m.map().dual(), mark.dart);
            reverse_builder(&mut b);
            (b, None)
        }
        MarkKind::T => {
            let (b, pair) = realize_t(m.map(), mark.dart);
            (b, Some(pair))
        }
    };
    let diagram = SeparatrixDiagram {
        code: m.code(eq),
        mark: mark.kind,
        points: builder.points,
        separatrices: builder.separatrices,
        saddle_connection: connection,
    };
    diagram.check()?;
    let expected = PointSummary::expected(m);
    if diagram.summary() != expected {
        return Err(DiagramError::WrongCounts {
            found: diagram.summary(),
            expected,
        });
    }
    Ok(diagram)
}

impl SeparatrixDiagram {
    pub fn summary(&self) -> PointSummary {
        let mut s = PointSummary::default();
        for p in &self.points {
            match p.kind {
                PointKind::Source => s.sources += 1,
                PointKind::Sink => s.sinks += 1,
                PointKind::Saddle => s.saddles += 1,
                PointKind::SaddleNodeSource => s.saddle_node_sources += 1,
                PointKind::SaddleNodeSink => s.saddle_node_sinks += 1,
            }
        }
        s.saddle_connections = usize::from(self.saddle_connection.is_some());
        s
    }

    /// Checks local valences, the absence of directed cycles and the
    /// consistency of the saddle connection record.
    pub fn check(&self) -> Result<(), DiagramError> {
        let n = self.points.len();
        let mut incoming = vec![0usize; n];
        let mut outgoing = vec![0usize; n];
        let mut owned_in = vec![0usize; n];
        let mut owned_out = vec![0usize; n];
        for s in &self.separatrices {
            outgoing[s.from] += 1;
            incoming[s.to] += 1;
            let owned_here = if s.stable { s.to } else { s.from };
            if owned_here == s.owner {
                if s.stable {
                    owned_in[s.owner] += 1;
                } else {
                    owned_out[s.owner] += 1;
                }
            }
        }
        for p in &self.points {
            let i = p.id;
            let ok = match p.kind {
                PointKind::Source => incoming[i] == 0,
                PointKind::Sink => outgoing[i] == 0,
                PointKind::Saddle => incoming[i] == 2 && outgoing[i] == 2,
                PointKind::SaddleNodeSource => owned_in[i] == 1 && owned_out[i] == 2,
                PointKind::SaddleNodeSink => owned_in[i] == 2 && owned_out[i] == 1,
            };
            if !ok {
                let (inc, out) = match p.kind {
                    PointKind::SaddleNodeSource | PointKind::SaddleNodeSink => {
                        (owned_in[i], owned_out[i])
                    }
                    _ => (incoming[i], outgoing[i]),
                };
                return Err(DiagramError::BadValence {
                    point: i,
                    kind: p.kind,
                    incoming: inc,
                    outgoing: out,
                });
            }
        }
        let connections: Vec<(usize, usize)> = self
            .separatrices
            .iter()
            .filter(|s| s.connection)
            .map(|s| (s.from, s.to))
            .collect();
        let recorded: Vec<(usize, usize)> = self.saddle_connection.into_iter().collect();
        if connections != recorded
            || connections.iter().any(|&(a, b)| {
                self.points[a].kind != PointKind::Saddle || self.points[b].kind != PointKind::Saddle
            })
            || (self.mark == MarkKind::T) != self.saddle_connection.is_some()
        {
            return Err(DiagramError::ConnectionMismatch);
        }
        // Kahn's algorithm over the directed arcs.
        let mut indeg = incoming.clone();
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut done = 0;
        while let Some(i) = ready.pop() {
            done += 1;
            for s in self.separatrices.iter().filter(|s| s.from == i) {
                indeg[s.to] -= 1;
                if indeg[s.to] == 0 {
                    ready.push(s.to);
                }
            }
        }
        if done != n {
            return Err(DiagramError::Cycle);
        }
        Ok(())
    }

    /// The graph of stable manifolds read back from the diagram: one
    /// `(u, v)` pair per edge of the marked map, with `u <= v` the vertex
    /// indices of the map, sorted.
    pub fn stable_edge_list(&self) -> Vec<(usize, usize)> {
        let vertex_of = |id: usize| match self.points[id].origin {
            Origin::Vertex { index } => Some(index),
            Origin::VertexEdge { vertex, .. } | Origin::TVertex { vertex } => Some(vertex),
            _ => None,
        };
        let mut edges = Vec::new();
        for p in &self.points {
            let feeders: Vec<usize> = self
                .separatrices
                .iter()
                .filter(|s| s.to == p.id && ((s.stable && s.owner == p.id) || s.connection))
                .filter_map(|s| vertex_of(s.from))
                .collect();
            match p.origin {
                Origin::TVertex { vertex } => {
                    edges.extend(feeders.iter().map(|&u| (vertex, u)));
                }
                Origin::VertexEdge { vertex, .. } => {
                    edges.extend(feeders.iter().map(|&u| (vertex, u)));
                }
                Origin::Edge { .. } | Origin::FaceEdge { .. } | Origin::Perpendicular { .. } => {
                    if let [u, v] = feeders[..] {
                        edges.push((u, v));
                    }
                }
                Origin::Vertex { .. } | Origin::Face { .. } => {}
            }
        }
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marks::Mark;

    fn rot(r: &[&[usize]]) -> CombinatorialMap {
        CombinatorialMap::from_rotation_system(r).unwrap()
    }

    #[test]
    fn segment_source_has_three_points() {
        let m = MarkedMap::new(rot(&[&[0], &[0]]), Mark::source(0)).unwrap();
        let d = realize(&m).unwrap();
        let s = d.summary();
        assert_eq!(s.total(), 3);
        assert_eq!((s.sources, s.sinks, s.saddle_node_sources), (1, 1, 1));
    }

    #[test]
    fn loop_sink_has_three_points() {
        let m = MarkedMap::new(rot(&[&[0, 0]]), Mark::sink(0)).unwrap();
        let d = realize(&m).unwrap();
        let s = d.summary();
        assert_eq!((s.sources, s.sinks, s.saddle_node_sinks), (1, 1, 1));
        assert_eq!(d.stable_edge_list(), vec![(0, 0)]);
    }

    #[test]
    fn chain_central_source_has_five_points() {
        let chain = rot(&[&[0], &[0, 1], &[1]]);
        let m = MarkedMap::new(chain.clone(), Mark::source(1)).unwrap();
        let d = realize(&m).unwrap();
        assert_eq!(d.summary().total(), 5);
        assert_eq!(d.stable_edge_list(), chain.edge_list());
    }

    #[test]
    fn y_graph_t_mark() {
        let star = rot(&[&[0, 1, 2], &[0], &[1], &[2]]);
        let m = MarkedMap::new(star.clone(), Mark::t(0)).unwrap();
        let d = realize(&m).unwrap();
        let s = d.summary();
        assert_eq!(
            (s.sources, s.sinks, s.saddles, s.saddle_connections),
            (3, 1, 2, 1)
        );
        assert_eq!(s.total(), 6);
        assert_eq!(d.stable_edge_list(), star.edge_list());
    }

    #[test]
    fn check_catches_cycles() {
        let m = MarkedMap::new(rot(&[&[0], &[0]]), Mark::source(0)).unwrap();
        let mut d = realize(&m).unwrap();
        let first = d.separatrices[0];
        d.separatrices.push(Separatrix {
            from: first.to,
            to: first.from,
            ..first
        });
        assert!(d.check().is_err());
    }
}
