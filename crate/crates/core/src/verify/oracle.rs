use std::fmt::Write as _;

use super::enumerate::{walk, Descend};
use super::{PropertyReport, Witness};
use crate::engines::ShortestPathTree;
use crate::error::VerifyError;
use crate::function::PathFunction;
use crate::graph::{Graph, VertexId};
use crate::path::{Path, PathSystem};
use crate::value::ExtReal;

/// Per-vertex minima over simple paths, with the first minimising path in
/// enumeration order as witness. Vertices with no path are `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub source: VertexId,
    pub minimum: Vec<Option<ExtReal>>,
    pub witness: Vec<Option<Path>>,
    pub enumerated: u64,
}

impl OracleResult {
    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.minimum.get(v).is_some_and(Option::is_some)
    }

    /// Same line grammar as a rendered tree, plus `# enumerated=<count>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, (m, w)) in self.minimum.iter().zip(&self.witness).enumerate() {
            if let (Some(m), Some(w)) = (m, w) {
                writeln!(out, "{v} value={m} path={w}").unwrap();
            }
        }
        writeln!(out, "# enumerated={}", self.enumerated).unwrap();
        out
    }
}

/// Brute-force `m_f(v)` over every simple path from `source`.
///
/// Exact for the simple-path system, and for the all-paths system whenever
/// `f` has no negative circles.
pub fn oracle_min(g: &Graph, source: VertexId, f: &dyn PathFunction) -> OracleResult {
    let n = g.n();
    let mut minimum: Vec<Option<ExtReal>> = vec![None; n];
    let mut witness: Vec<Option<Path>> = vec![None; n];
    let mut enumerated = 0u64;
    walk(
        g,
        PathSystem::simple(source),
        f,
        n.saturating_sub(1),
        |p, values| {
            enumerated += 1;
            let v = p.terminal();
            let value = *values.last().expect("nonempty");
            if minimum[v].is_none_or(|m| value < m) {
                minimum[v] = Some(value);
                witness[v] = Some(p.clone());
            }
            Descend::Yes
        },
    );
    OracleResult {
        source,
        minimum,
        witness,
        enumerated,
    }
}

/// Per-vertex minimum over members of `system` with at most `max_roads`
/// roads.
pub fn bounded_minima(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    max_roads: usize,
) -> Vec<Option<ExtReal>> {
    let mut minimum: Vec<Option<ExtReal>> = vec![None; g.n()];
    walk(g, system, f, max_roads, |p, values| {
        let v = p.terminal();
        let value = *values.last().expect("nonempty");
        if minimum[v].is_none_or(|m| value < m) {
            minimum[v] = Some(value);
        }
        Descend::Yes
    });
    minimum
}

/// Covered sets must match exactly and values agree within `tol`. A failing
/// report names the worst vertex: a coverage mismatch first, otherwise the
/// largest deviation.
pub fn compare_tree_to_oracle(
    tree: &ShortestPathTree,
    oracle: &OracleResult,
    tol: f64,
) -> Result<PropertyReport, VerifyError> {
    if tree.source != oracle.source {
        return Err(VerifyError::SourceMismatch {
            tree: tree.source,
            oracle: oracle.source,
        });
    }
    let n = oracle.minimum.len();
    let mut report = PropertyReport::new("tree-vs-oracle", n.saturating_sub(1));
    let mut worst: Option<(f64, VertexId)> = None;
    for v in 0..n {
        report.cases += 1;
        let t = if tree.is_covered(v) { tree.value.get(v).copied().flatten() } else { None };
        let o = oracle.minimum[v];
        if tree.is_covered(v) != o.is_some() {
            report.violated(Witness::Deviation {
                vertex: v,
                tree: t,
                oracle: o,
            });
            return Ok(report);
        }
        if tree.is_covered(v) && t.is_none() {
            report.violated(Witness::Deviation {
                vertex: v,
                tree: t,
                oracle: o,
            });
            return Ok(report);
        }
        if let (Some(t), Some(o)) = (t, o) {
            let dev = t.distance(o);
            if dev > tol && worst.is_none_or(|(w, _)| dev > w) {
                worst = Some((dev, v));
            }
        }
    }
    if let Some((_, v)) = worst {
        report.violated(Witness::Deviation {
            vertex: v,
            tree: tree.value[v],
            oracle: oracle.minimum[v],
        });
    }
    Ok(report)
}
