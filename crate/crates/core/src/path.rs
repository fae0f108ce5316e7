//! Paths from a fixed source and the path systems that contain them.

use std::fmt;

use crate::error::PathError;
use crate::graph::{Graph, Road, RoadKey, VertexId};

/// A road sequence starting at `source`. The empty sequence is the special
/// path `(s,s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    roads: Vec<RoadKey>,
    // vertices[0] is the source; vertices.len() == roads.len() + 1
    vertices: Vec<VertexId>,
}

impl Path {
    /// The special path `(s,s)`.
    pub fn trivial(source: VertexId) -> Path {
        Path {
            roads: Vec::new(),
            vertices: vec![source],
        }
    }

    /// Builds a path by chaining road keys from `source`.
    pub fn from_roads(g: &Graph, source: VertexId, keys: &[RoadKey]) -> Result<Path, PathError> {
        if !g.contains_vertex(source) {
            return Err(PathError::BadSource(source));
        }
        let mut p = Path::trivial(source);
        for &key in keys {
            let road = g.road(key).ok_or(PathError::UnknownRoad(key))?;
            p.push(road)?;
        }
        Ok(p)
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    /// `t(P)`.
    pub fn terminal(&self) -> VertexId {
        *self.vertices.last().expect("path has a source")
    }

    pub fn roads(&self) -> &[RoadKey] {
        &self.roads
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of roads.
    pub fn len(&self) -> usize {
        self.roads.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.roads.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// No vertex repeats.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Appends `road`, which must start at the current terminal.
    pub fn push(&mut self, road: &Road) -> Result<(), PathError> {
        if road.from != self.terminal() {
            return Err(PathError::BrokenChain {
                key: road.key,
                start: road.from,
                end: self.terminal(),
            });
        }
        self.roads.push(road.key);
        self.vertices.push(road.to);
        Ok(())
    }

    /// Drops the last road. Returns `None` on `(s,s)`.
    pub fn pop(&mut self) -> Option<RoadKey> {
        let key = self.roads.pop()?;
        self.vertices.pop();
        Some(key)
    }

    /// The son `P + road`.
    pub fn extended(&self, road: &Road) -> Result<Path, PathError> {
        let mut p = self.clone();
        p.push(road)?;
        Ok(p)
    }

    /// The father `FP`; `None` for `(s,s)`.
    pub fn father(&self) -> Option<Path> {
        let mut p = self.clone();
        p.pop().map(|_| p)
    }

    /// The prefix with the first `k` roads.
    pub fn prefix(&self, k: usize) -> Path {
        Path {
            roads: self.roads[..k].to_vec(),
            vertices: self.vertices[..=k].to_vec(),
        }
    }

    /// `self ≺ other`: a strict prefix with the same source.
    pub fn precedes(&self, other: &Path) -> bool {
        self.source() == other.source()
            && self.len() < other.len()
            && other.roads.starts_with(&self.roads)
    }

    /// `self ⪯ other`.
    pub fn precedes_or_eq(&self, other: &Path) -> bool {
        self == other || self.precedes(other)
    }
}

/// `s=0 -> 1[k0] -> 3[k6]`
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}", self.source())?;
        for (key, v) in self.roads.iter().zip(&self.vertices[1..]) {
            write!(f, " -> {v}[{key}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// Paths without circles.
    SimplePaths,
    /// Every chained road sequence from the source.
    AllPaths,
}

/// A path system on `[G, s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    pub kind: SystemKind,
    pub source: VertexId,
}

impl PathSystem {
    pub fn simple(source: VertexId) -> Self {
        PathSystem {
            kind: SystemKind::SimplePaths,
            source,
        }
    }

    pub fn all(source: VertexId) -> Self {
        PathSystem {
            kind: SystemKind::AllPaths,
            source,
        }
    }

    pub fn contains(&self, p: &Path) -> bool {
        p.source() == self.source
            && match self.kind {
                SystemKind::SimplePaths => p.is_simple(),
                SystemKind::AllPaths => true,
            }
    }

    /// Whether `p + road` is a member, given that `p` is one.
    pub fn admits_extension(&self, p: &Path, road: &Road) -> bool {
        road.from == p.terminal()
            && match self.kind {
                SystemKind::SimplePaths => !p.contains_vertex(road.to),
                SystemKind::AllPaths => true,
            }
    }
}
