use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{CombinatorialMap, Dart, Equivalence, MapError};
use crate::marks::{Mark, MarkError, MarkKind, MarkedMap};

const UNSET: u32 = u32::MAX;

/// Key identifying a map, or a map with one mark, up to the configured
/// equivalence.
///
/// The words are the breadth-first trace `(sigma(i), alpha(i))` for labels
/// `i = 0..2E`, followed by `(mark label, kind tag)` for marked maps. Among all
/// start darts and allowed orientations the lexicographically smallest trace
/// is kept, so equal codes mean equivalent objects.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n_edges: u32,
    words: Vec<u32>,
}

impl CanonicalCode {
    pub fn n_edges(&self) -> usize {
        self.n_edges as usize
    }

    fn n_darts(&self) -> usize {
        2 * self.n_edges as usize
    }

    pub fn sigma_images(&self) -> Vec<Dart> {
        self.words[..2 * self.n_darts()]
            .iter()
            .step_by(2)
            .map(|&w| w as Dart)
            .collect()
    }

    pub fn alpha_images(&self) -> Vec<Dart> {
        self.words[1..2 * self.n_darts()]
            .iter()
            .step_by(2)
            .map(|&w| w as Dart)
            .collect()
    }

    pub fn mark(&self) -> Option<Mark> {
        let tail = &self.words[2 * self.n_darts()..];
        match tail {
            [label, tag] => Some(Mark {
                kind: MarkKind::from_tag(*tag)?,
                dart: *label as Dart,
            }),
            _ => None,
        }
    }

    /// The map in canonical labeling. Equivalent to every map with this code.
    pub fn map(&self) -> CombinatorialMap {
        CombinatorialMap::new_unchecked(self.sigma_images(), self.alpha_images())
    }

    /// The marked map in canonical labeling, if this code carries a mark.
    pub fn marked_map(&self) -> Option<MarkedMap> {
        let mark = self.mark()?;
        MarkedMap::new(self.map(), mark).ok()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<Dart>| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "E:{};s:{};a:{};m:",
            self.n_edges,
            join(self.sigma_images()),
            join(self.alpha_images())
        )?;
        match self.mark() {
            Some(m) => write!(f, "{},{}", m.kind.token(), m.dart),
            None => write!(f, "-"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeParseError {
    #[error("malformed code token: {0}")]
    Syntax(String),
    #[error("code does not describe a valid map: {0}")]
    InvalidMap(#[from] MapError),
    #[error("code carries an invalid mark: {0}")]
    InvalidMark(#[from] MarkError),
    #[error("token is a valid map but not in canonical form")]
    NotCanonical,
}

impl FromStr for CanonicalCode {
    type Err = CodeParseError;

    /// Parses a token and checks that it is the canonical code of the map it
    /// describes under at least one of the two equivalences.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |what: &str| CodeParseError::Syntax(format!("{what} in {s:?}"));
        let parts: Vec<&str> = s.trim().split(';').collect();
        let [e, sg, al, mk] = parts.as_slice() else {
            return Err(syntax("expected four ';'-separated fields"));
        };
        let field = |part: &str, key: &str| -> Result<String, CodeParseError> {
            part.strip_prefix(key)
                .map(str::to_owned)
                .ok_or_else(|| syntax(&format!("missing {key}")))
        };
        let list = |body: String| -> Result<Vec<Dart>, CodeParseError> {
            body.split(',')
                .map(|x| x.parse::<Dart>().map_err(|_| syntax("bad dart id")))
                .collect()
        };
        let n_edges: usize = field(e, "E:")?
            .parse()
            .map_err(|_| syntax("bad edge count"))?;
        let sigma = list(field(sg, "s:")?)?;
        let alpha = list(field(al, "a:")?)?;
        if sigma.len() != 2 * n_edges {
            return Err(syntax("edge count does not match sigma"));
        }
        let map = CombinatorialMap::new(sigma, alpha)?;
        let mark_body = field(mk, "m:")?;
        let mark = if mark_body == "-" {
            None
        } else {
            let (kind, label) = mark_body
                .split_once(',')
                .ok_or_else(|| syntax("bad mark"))?;
            let kind = MarkKind::from_token(kind).ok_or_else(|| syntax("unknown mark kind"))?;
            let dart = label.parse().map_err(|_| syntax("bad mark dart"))?;
            Some(Mark { kind, dart })
        };
        if let Some(m) = mark {
            crate::marks::check_mark(&map, m)?;
        }
        let token = s.trim();
        for eq in [Equivalence::Unoriented, Equivalence::Oriented] {
            let code = canonical_code(&map, mark, eq)?;
            if code.to_string() == token {
                return Ok(code);
            }
        }
        Err(CodeParseError::NotCanonical)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Breadth-first relabeling from `root`: labels are assigned in first-visit
/// order, visiting the sigma successor before the alpha partner. Writes the
/// `(sigma, alpha)` label pairs into `out` and the label of every dart into
/// `label`.
fn trace(sigma: &[Dart], alpha: &[Dart], root: Dart, label: &mut [u32], out: &mut Vec<u32>) {
    let n = sigma.len();
    label.fill(UNSET);
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for x in [sigma[d], alpha[d]] {
            if label[x] == UNSET {
                label[x] = order.len() as u32;
                order.push(x);
            }
        }
    }
    out.clear();
    for &d in &order {
        out.push(label[sigma[d]]);
        out.push(label[alpha[d]]);
    }
}

/// Orientation-preserving trace from one root, used as a cheap rooted-map key.
pub(crate) fn rooted_trace(sigma: &[Dart], alpha: &[Dart], root: Dart) -> Vec<u32> {
    let mut label = vec![UNSET; sigma.len()];
    let mut out = Vec::with_capacity(2 * sigma.len());
    trace(sigma, alpha, root, &mut label, &mut out);
    out
}

/// Precomputed minimal traces of one map, reused for each mark placed on it.
pub(crate) struct CodeBuilder<'a> {
    map: &'a CombinatorialMap,
    best: Vec<u32>,
    /// Dart labelings achieving `best`, with whether the orientation is reversed.
    optimal: Vec<(bool, Vec<u32>)>,
}

impl<'a> CodeBuilder<'a> {
    pub(crate) fn new(map: &'a CombinatorialMap, eq: Equivalence) -> Self {
        let n = map.n_darts();
        let forward = map.sigma_images().to_vec();
        let mut orientations = vec![(false, forward)];
        if eq.allows_reflection() {
            orientations.push((true, map.sigma_inverse()));
        }
        let mut best: Option<Vec<u32>> = None;
        let mut optimal = Vec::new();
        let mut label = vec![UNSET; n];
        let mut words = Vec::with_capacity(2 * n);
        for (reversed, sigma) in &orientations {
            for root in 0..n {
                trace(sigma, map.alpha_images(), root, &mut label, &mut words);
                let better = match &best {
                    None => true,
                    Some(b) => match words.cmp(b) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => {
                            optimal.push((*reversed, label.clone()));
                            false
                        }
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some(words.clone());
                    optimal.clear();
                    optimal.push((*reversed, label.clone()));
                }
            }
        }
        Self {
            map,
            best: best.expect("maps have at least one dart"),
            optimal,
        }
    }

    pub(crate) fn code(&self, mark: Option<Mark>) -> CanonicalCode {
        let mut words = self.best.clone();
        if let Some(m) = mark {
            let label = self
                .optimal
                .iter()
                .map(|(reversed, label)| {
                    // Reversing orientation moves a face to the other side of
                    // each dart, so a face mark is carried by the partner dart.
                    let d = if *reversed && m.kind == MarkKind::Sink {
                        self.map.alpha(m.dart)
                    } else {
                        m.dart
                    };
                    label[d]
                })
                .min()
                .expect("at least one optimal labeling");
            words.push(label);
            words.push(m.kind.tag());
        }
        CanonicalCode {
            n_edges: self.map.n_edges() as u32,
            words,
        }
    }
}

/// Canonical code of a map with an optional mark.
pub fn canonical_code(
    map: &CombinatorialMap,
    mark: Option<Mark>,
    eq: Equivalence,
) -> Result<CanonicalCode, MarkError> {
    if let Some(m) = mark {
        if m.dart >= map.n_darts() {
            return Err(MarkError::DartOutOfRange {
                dart: m.dart,
                n_darts: map.n_darts(),
            });
        }
    }
    Ok(CodeBuilder::new(map, eq).code(mark))
}

/// Anything that is a spherical map with at most one mark.
pub trait Embedded {
    fn map(&self) -> &CombinatorialMap;
    fn mark(&self) -> Option<Mark>;
}

impl Embedded for CombinatorialMap {
    fn map(&self) -> &CombinatorialMap {
        self
    }

    fn mark(&self) -> Option<Mark> {
        None
    }
}

impl Embedded for MarkedMap {
    fn map(&self) -> &CombinatorialMap {
        MarkedMap::map(self)
    }

    fn mark(&self) -> Option<Mark> {
        Some(MarkedMap::mark(self))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivalenceError {
    #[error("cannot compare a {left} structure with a {right} structure")]
    KindMismatch {
        left: &'static str,
        right: &'static str,
    },
}

fn kind_name(mark: Option<Mark>) -> &'static str {
    match mark {
        None => "unmarked",
        Some(m) => m.kind.token(),
    }
}

/// Whether two (marked) maps are related by a homeomorphism of the sphere
/// that carries mark to mark.
pub fn are_equivalent<A: Embedded + ?Sized, B: Embedded + ?Sized>(
    a: &A,
    b: &B,
    eq: Equivalence,
) -> Result<bool, EquivalenceError> {
    let (ma, mb) = (a.mark(), b.mark());
    if ma.map(|m| m.kind) != mb.map(|m| m.kind) {
        return Err(EquivalenceError::KindMismatch {
            left: kind_name(ma),
            right: kind_name(mb),
        });
    }
    if a.map().n_darts() != b.map().n_darts() {
        return Ok(false);
    }
    let ca = CodeBuilder::new(a.map(), eq).code(ma);
    let cb = CodeBuilder::new(b.map(), eq).code(mb);
    Ok(ca == cb)
}
