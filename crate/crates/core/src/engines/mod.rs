//! Shortest-path engines: spanning-tree construction (STA), extended Dijkstra
//! (EDA), extended Moore-Bellman-Ford (EMBFA), and classic Dijkstra.

mod dijkstra;
mod eda;
mod embfa;
mod sta;

use std::fmt::Write as _;

pub use dijkstra::dijkstra_classic;
pub use eda::eda;
pub use embfa::embfa;
pub use sta::sta;

use crate::error::EngineError;
use crate::function::{PathFunction, Property};
use crate::graph::{Graph, RoadKey, VertexId};
use crate::path::{Path, PathSystem};
use crate::value::ExtReal;

/// An arborescence rooted at `source`, stored as parent links.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortestPathTree {
    pub source: VertexId,
    /// `(parent vertex, road key)` for every covered vertex but the source.
    pub parent: Vec<Option<(VertexId, RoadKey)>>,
    /// `f(P_T(v))` for covered vertices. Empty slots for STA trees.
    pub value: Vec<Option<ExtReal>>,
    /// Discovery order `v(0) = s, v(1), ...`; EDA and STA only.
    pub order: Vec<VertexId>,
    pub covered: Vec<bool>,
}

impl ShortestPathTree {
    pub(crate) fn rooted(n: usize, source: VertexId) -> Self {
        let mut covered = vec![false; n];
        covered[source] = true;
        ShortestPathTree {
            source,
            parent: vec![None; n],
            value: vec![None; n],
            order: vec![source],
            covered,
        }
    }

    pub fn n(&self) -> usize {
        self.covered.len()
    }

    pub fn is_covered(&self, v: VertexId) -> bool {
        self.covered.get(v).copied().unwrap_or(false)
    }

    pub fn covered_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).filter(|&v| self.covered[v])
    }

    /// `P_T(v)` rebuilt from parent links. `None` if `v` is not covered or the
    /// links do not lead back to the source.
    pub fn path_to(&self, g: &Graph, v: VertexId) -> Option<Path> {
        if !self.is_covered(v) {
            return None;
        }
        let mut keys = Vec::new();
        let mut cur = v;
        while cur != self.source {
            if keys.len() >= self.n() {
                return None;
            }
            let (p, key) = self.parent[cur]?;
            keys.push(key);
            cur = p;
        }
        keys.reverse();
        Path::from_roads(g, self.source, &keys).ok()
    }

    /// One line per covered vertex:
    /// `<v> value=<f or inf> path=<path>`; `value=-` when unset.
    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for v in self.covered_vertices() {
            let value = self.value[v].map_or_else(|| "-".to_string(), |x| x.to_string());
            let path = self
                .path_to(g, v)
                .map_or_else(|| "?".to_string(), |p| p.to_string());
            writeln!(out, "{v} value={value} path={path}").unwrap();
        }
        out
    }
}

/// Operation counts of one engine run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// `extend` evaluations.
    pub extend_calls: u64,
    /// EMBFA rounds, or EDA/STA selection steps.
    pub iterations: u64,
    /// Successful label updates.
    pub relaxations: u64,
}

impl RunStats {
    pub fn render(&self) -> String {
        format!(
            "# extend_calls={} relaxations={} rounds={}",
            self.extend_calls, self.relaxations, self.iterations
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub tree: ShortestPathTree,
    pub stats: RunStats,
}

/// Whether an engine checks the function's declared properties before
/// running.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Gate {
    #[default]
    Checked,
    /// Run regardless; the result carries no guarantee.
    Forced,
}

fn require(
    algorithm: &'static str,
    f: &dyn PathFunction,
    system: &PathSystem,
    required: &[Property],
    gate: Gate,
) -> Result<(), EngineError> {
    if gate == Gate::Forced {
        return Ok(());
    }
    let missing = f.declared().closure(system.kind).missing(required);
    if missing.is_empty() {
        Ok(())
    } else {
        Err(EngineError::MissingProperty {
            algorithm,
            function: f.name().to_string(),
            missing,
        })
    }
}

fn check_source(g: &Graph, s: VertexId) -> Result<(), EngineError> {
    if g.contains_vertex(s) {
        Ok(())
    } else {
        Err(EngineError::BadSource(s))
    }
}
