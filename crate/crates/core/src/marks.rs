//! Marked maps: a spherical graph with one selected element.
//!
//! A single dart carries each mark and the kind says how to read it:
//!
//! - [`MarkKind::Source`]: the edge of the dart and its end at the dart's
//!   vertex (a saddle merging with a source). The edge must not be a loop.
//! - [`MarkKind::Sink`]: the edge of the dart and the face on the dart's left
//!   (a saddle merging with a sink). The edge must border two distinct faces.
//! - [`MarkKind::T`]: the perpendicular dart at a T-vertex (a saddle
//!   connection). The vertex has degree 3 and no loop.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combmap::{CanonicalCode, Cells, CodeBuilder, CombinatorialMap, Dart, Equivalence};
use crate::generate::{generate_maps, GenerateError, GenerationConfig, MapClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MarkKind {
    Source,
    Sink,
    T,
}

impl MarkKind {
    pub(crate) fn tag(self) -> u32 {
        match self {
            MarkKind::Source => 0,
            MarkKind::Sink => 1,
            MarkKind::T => 2,
        }
    }

    pub(crate) fn from_tag(tag: u32) -> Option<Self> {
        match tag {
            0 => Some(MarkKind::Source),
            1 => Some(MarkKind::Sink),
            2 => Some(MarkKind::T),
            _ => None,
        }
    }

    /// Spelling used in code tokens and catalogs.
    pub fn token(self) -> &'static str {
        match self {
            MarkKind::Source => "source",
            MarkKind::Sink => "sink",
            MarkKind::T => "t",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        match s {
            "source" => Some(MarkKind::Source),
            "sink" => Some(MarkKind::Sink),
            "t" => Some(MarkKind::T),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mark {
    pub kind: MarkKind,
    pub dart: Dart,
}

impl Mark {
    pub fn source(dart: Dart) -> Self {
        Mark {
            kind: MarkKind::Source,
            dart,
        }
    }

    pub fn sink(dart: Dart) -> Self {
        Mark {
            kind: MarkKind::Sink,
            dart,
        }
    }

    pub fn t(dart: Dart) -> Self {
        Mark {
            kind: MarkKind::T,
            dart,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkError {
    #[error("mark dart {dart} is outside 0..{n_darts}")]
    DartOutOfRange { dart: Dart, n_darts: usize },
    #[error("a source mark cannot sit on a loop (dart {0})")]
    LoopEdge(Dart),
    #[error("a sink mark needs an edge between two distinct faces (dart {0})")]
    BridgeEdge(Dart),
    #[error("a T-vertex must have degree 3, found {degree}")]
    NotDegreeThree { degree: usize },
    #[error("a T-vertex must not carry a loop")]
    LoopAtTVertex,
    #[error("saddle count {n} outside the supported range {min}..={max}")]
    SaddleCountOutOfRange { n: usize, min: usize, max: usize },
    #[error("only saddle-node marks can be reversed")]
    NotReversible,
}

/// Checks mark legality on a map.
pub fn check_mark(map: &CombinatorialMap, mark: Mark) -> Result<(), MarkError> {
    let d = mark.dart;
    if d >= map.n_darts() {
        return Err(MarkError::DartOutOfRange {
            dart: d,
            n_darts: map.n_darts(),
        });
    }
    match mark.kind {
        MarkKind::Source if map.is_loop(d) => Err(MarkError::LoopEdge(d)),
        MarkKind::Sink if map.is_bridge(d) => Err(MarkError::BridgeEdge(d)),
        MarkKind::T => {
            let around = map.vertex_darts(d);
            if around.len() != 3 {
                return Err(MarkError::NotDegreeThree {
                    degree: around.len(),
                });
            }
            if around.iter().any(|&x| around.contains(&map.alpha(x))) {
                return Err(MarkError::LoopAtTVertex);
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// A distinguishing graph: a spherical map with one legal mark.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedMap {
    map: CombinatorialMap,
    mark: Mark,
}

impl MarkedMap {
    pub fn new(map: CombinatorialMap, mark: Mark) -> Result<Self, MarkError> {
        check_mark(&map, mark)?;
        Ok(Self { map, mark })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn mark(&self) -> Mark {
        self.mark
    }

    pub fn kind(&self) -> MarkKind {
        self.mark.kind
    }

    /// Number of saddles of the encoded flow. The T-vertex splits one saddle's
    /// stable manifold into two edges, so T-marked maps have one extra edge.
    pub fn n_saddles(&self) -> usize {
        match self.mark.kind {
            MarkKind::T => self.map.n_edges() - 1,
            _ => self.map.n_edges(),
        }
    }

    /// Number of singular points of the encoded flow.
    pub fn n_singular_points(&self) -> usize {
        match self.mark.kind {
            MarkKind::T => 2 * self.n_saddles() + 2,
            _ => 2 * self.n_saddles() + 1,
        }
    }

    pub fn code(&self, eq: Equivalence) -> CanonicalCode {
        CodeBuilder::new(&self.map, eq).code(Some(self.mark))
    }

    pub fn relabel(&self, perm: &[Dart]) -> Result<Self, crate::combmap::MapError> {
        Ok(Self {
            map: self.map.relabel(perm)?,
            mark: Mark {
                kind: self.mark.kind,
                dart: perm[self.mark.dart],
            },
        })
    }
}

/// One equivalence class of marked maps with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedClass {
    pub code: CanonicalCode,
    pub marked: MarkedMap,
}

impl MarkedClass {
    fn from_code(code: CanonicalCode) -> Self {
        let marked = code
            .marked_map()
            .expect("codes of legal marks decode to legal marks");
        Self { code, marked }
    }
}

fn classes_for_darts(
    map: &CombinatorialMap,
    kind: MarkKind,
    darts: impl Iterator<Item = Dart>,
    eq: Equivalence,
) -> Vec<MarkedClass> {
    let builder = CodeBuilder::new(map, eq);
    let codes: BTreeSet<CanonicalCode> = darts
        .map(|dart| builder.code(Some(Mark { kind, dart })))
        .collect();
    codes.into_iter().map(MarkedClass::from_code).collect()
}

/// Saddle-source classes on one map, sorted by code.
pub fn enumerate_source_marks(map: &CombinatorialMap, eq: Equivalence) -> Vec<MarkedClass> {
    let legal = (0..map.n_darts()).filter(|&d| !map.is_loop(d));
    classes_for_darts(map, MarkKind::Source, legal, eq)
}

/// Saddle-sink classes on one map, sorted by code.
pub fn enumerate_sink_marks(map: &CombinatorialMap, eq: Equivalence) -> Vec<MarkedClass> {
    let legal = (0..map.n_darts()).filter(|&d| !map.is_bridge(d));
    classes_for_darts(map, MarkKind::Sink, legal, eq)
}

/// Darts that may be the perpendicular dart of a T-vertex.
pub fn t_eligible_darts(map: &CombinatorialMap) -> Vec<Dart> {
    (0..map.n_darts())
        .filter(|&d| check_mark(map, Mark::t(d)).is_ok())
        .collect()
}

/// Saddle-connection classes on one map, sorted by code.
pub fn enumerate_t_marks_on(map: &CombinatorialMap, eq: Equivalence) -> Vec<MarkedClass> {
    classes_for_darts(map, MarkKind::T, t_eligible_darts(map).into_iter(), eq)
}

pub const MIN_T_SADDLES: usize = 2;
pub const MAX_T_SADDLES: usize = 4;
pub const MIN_SN_SADDLES: usize = 1;
pub const MAX_SN_SADDLES: usize = 4;

fn check_range(n: usize, min: usize, max: usize) -> Result<(), MarkError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(MarkError::SaddleCountOutOfRange { n, min, max })
    }
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Mark(#[from] MarkError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
}

/// Saddle-connection classes of flows with `n_saddles` saddles, over all maps
/// with `n_saddles + 1` edges, sorted by code.
pub fn enumerate_t_marks(
    n_saddles: usize,
    eq: Equivalence,
    jobs: usize,
) -> Result<Vec<MarkedClass>, CensusError> {
    check_range(n_saddles, MIN_T_SADDLES, MAX_T_SADDLES)?;
    let maps = generate_maps(&GenerationConfig {
        n_edges: n_saddles + 1,
        equivalence: eq,
        jobs,
    })?;
    Ok(maps
        .iter()
        .flat_map(|c| enumerate_t_marks_on(&c.map, eq))
        .collect())
}

/// Saddle-node classes of flows with `n_saddles` saddles (both kinds), sorted
/// by code.
pub fn enumerate_saddle_node_marks(
    n_saddles: usize,
    eq: Equivalence,
    jobs: usize,
) -> Result<Vec<MarkedClass>, CensusError> {
    check_range(n_saddles, MIN_SN_SADDLES, MAX_SN_SADDLES)?;
    let maps = generate_maps(&GenerationConfig {
        n_edges: n_saddles,
        equivalence: eq,
        jobs,
    })?;
    let mut all: Vec<MarkedClass> = maps
        .iter()
        .flat_map(|c| {
            let mut v = enumerate_source_marks(&c.map, eq);
            v.extend(enumerate_sink_marks(&c.map, eq));
            v
        })
        .collect();
    all.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(all)
}

/// The reversed flow: the dual map with the mark of the opposite kind on the
/// same dart. A source mark's vertex is the dual's face on that dart's left.
pub fn reverse(m: &MarkedMap) -> Result<MarkedMap, MarkError> {
    let kind = match m.kind() {
        MarkKind::Source => MarkKind::Sink,
        MarkKind::Sink => MarkKind::Source,
        MarkKind::T => return Err(MarkError::NotReversible),
    };
    MarkedMap::new(
        m.map().dual(),
        Mark {
            kind,
            dart: m.mark().dart,
        },
    )
}

/// Saddle-node class counts on one map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerGraphCount {
    pub code: CanonicalCode,
    pub n_vertices: usize,
    pub n_faces: usize,
    pub source_classes: usize,
    pub sink_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaddleNodeCensus {
    pub n_saddles: usize,
    pub singular_points: usize,
    pub n_maps: usize,
    pub source_classes: usize,
    pub sink_classes: usize,
    /// `source_classes + sink_classes`.
    pub total: usize,
    /// `2 × source_classes`, the count obtained by doubling through duality.
    pub twice_source: usize,
    /// Maps on which reversing every sink class gives exactly the source
    /// classes of the dual map.
    pub duality_bijection_maps: usize,
    pub per_graph: Vec<PerGraphCount>,
    /// Source classes grouped by number of vertices of the map.
    pub source_by_vertices: BTreeMap<usize, usize>,
}

impl SaddleNodeCensus {
    pub fn duality_bijection_holds(&self) -> bool {
        self.duality_bijection_maps == self.n_maps
    }
}

pub fn saddle_node_census(
    n_saddles: usize,
    eq: Equivalence,
    jobs: usize,
) -> Result<SaddleNodeCensus, CensusError> {
    check_range(n_saddles, MIN_SN_SADDLES, MAX_SN_SADDLES)?;
    let maps = generate_maps(&GenerationConfig {
        n_edges: n_saddles,
        equivalence: eq,
        jobs,
    })?;
    let by_code: BTreeMap<&CanonicalCode, &MapClass> = maps.iter().map(|c| (&c.code, c)).collect();
    let mut per_graph = Vec::with_capacity(maps.len());
    let mut source_by_vertices = BTreeMap::new();
    let mut bijection = 0;
    for class in &maps {
        let sources = enumerate_source_marks(&class.map, eq);
        let sinks = enumerate_sink_marks(&class.map, eq);
        let stats = class.map.stats();
        *source_by_vertices.entry(stats.n_vertices).or_insert(0) += sources.len();

        let dual = class.map.dual();
        let dual_code = CodeBuilder::new(&dual, eq).code(None);
        if let Some(dual_class) = by_code.get(&dual_code) {
            let reversed: BTreeSet<CanonicalCode> = sinks
                .iter()
                .map(|s| reverse(&s.marked).expect("sink marks reverse").code(eq))
                .collect();
            let dual_sources: BTreeSet<CanonicalCode> = enumerate_source_marks(&dual_class.map, eq)
                .into_iter()
                .map(|c| c.code)
                .collect();
            if reversed == dual_sources && reversed.len() == sinks.len() {
                bijection += 1;
            }
        }
        per_graph.push(PerGraphCount {
            code: class.code.clone(),
            n_vertices: stats.n_vertices,
            n_faces: stats.n_faces,
            source_classes: sources.len(),
            sink_classes: sinks.len(),
        });
    }
    let source_classes = per_graph.iter().map(|p| p.source_classes).sum();
    let sink_classes = per_graph.iter().map(|p| p.sink_classes).sum();
    Ok(SaddleNodeCensus {
        n_saddles,
        singular_points: 2 * n_saddles + 1,
        n_maps: maps.len(),
        source_classes,
        sink_classes,
        total: source_classes + sink_classes,
        twice_source: 2 * source_classes,
        duality_bijection_maps: bijection,
        per_graph,
        source_by_vertices,
    })
}

/// How the perpendicular edge of a T-mark sits in the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerpendicularPlacement {
    /// Removing the perpendicular edge leaves the graph connected.
    NonSeparating,
    /// The perpendicular edge ends at a vertex of degree 1.
    Pendant,
    /// Removing it splits off a subgraph with this many edges (at least one).
    Separating { far_edges: usize },
}

/// Classifies the perpendicular edge of a T-marked map.
pub fn perpendicular_placement(m: &MarkedMap) -> Option<PerpendicularPlacement> {
    if m.kind() != MarkKind::T {
        return None;
    }
    let map = m.map();
    let p = m.mark().dart;
    if !map.is_bridge(p) {
        return Some(PerpendicularPlacement::NonSeparating);
    }
    // Count edges on the far side of the bridge.
    let far = map.alpha(p);
    let vertex = map.orbit_index(Cells::Vertices);
    let mut seen_vertex = vec![false; map.n_vertices()];
    let mut stack = vec![vertex[far]];
    seen_vertex[vertex[far]] = true;
    let mut far_darts = 0;
    let orbits = map.orbits(Cells::Vertices);
    while let Some(v) = stack.pop() {
        for &d in &orbits[v] {
            if d == far {
                continue;
            }
            far_darts += 1;
            let w = vertex[map.alpha(d)];
            if !seen_vertex[w] {
                seen_vertex[w] = true;
                stack.push(w);
            }
        }
    }
    let far_edges = far_darts / 2;
    Some(if far_edges == 0 {
        PerpendicularPlacement::Pendant
    } else {
        PerpendicularPlacement::Separating { far_edges }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaddleConnectionCensus {
    pub n_saddles: usize,
    pub singular_points: usize,
    pub total: usize,
    pub non_separating: usize,
    pub pendant: usize,
    /// Separating perpendicular edges keyed by the edge count of the split-off side.
    pub separating_by_far_edges: BTreeMap<usize, usize>,
}

pub fn saddle_connection_census(
    n_saddles: usize,
    eq: Equivalence,
    jobs: usize,
) -> Result<SaddleConnectionCensus, CensusError> {
    let classes = enumerate_t_marks(n_saddles, eq, jobs)?;
    let mut census = SaddleConnectionCensus {
        n_saddles,
        singular_points: 2 * n_saddles + 2,
        total: classes.len(),
        non_separating: 0,
        pendant: 0,
        separating_by_far_edges: BTreeMap::new(),
    };
    for c in &classes {
        match perpendicular_placement(&c.marked).expect("T classes") {
            PerpendicularPlacement::NonSeparating => census.non_separating += 1,
            PerpendicularPlacement::Pendant => census.pendant += 1,
            PerpendicularPlacement::Separating { far_edges } => {
                *census.separating_by_far_edges.entry(far_edges).or_insert(0) += 1
            }
        }
    }
    Ok(census)
}
