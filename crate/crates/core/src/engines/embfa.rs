use super::{check_source, require, Gate, RunStats, ShortestPathTree, Solution};
use crate::error::EngineError;
use crate::function::{PathFunction, Property};
use crate::graph::Graph;
use crate::path::{PathSystem, SystemKind};

/// Extended Moore-Bellman-Ford.
///
/// Starts from `value(s) = f((s,s))` with every other vertex unlabelled,
/// then runs `n` rounds; each round scans all roads in ascending key order
/// and sets `P_T(v) ← P_T(u) + (u,v)` whenever that member path beats the
/// current label of `v`. An unlabelled vertex is beaten by any path, even one
/// of value `∞`.
///
/// Requires OP and no negative circles. Shortest paths need at most `n - 1`
/// rounds, so a successful update in round `n` is reported as a negative
/// circle. Under [`SystemKind::AllPaths`] an improving extension that
/// revisits its own target is a direct circle witness and is reported
/// immediately; under [`SystemKind::SimplePaths`] it is not a member and is
/// skipped.
pub fn embfa(g: &Graph, system: PathSystem, f: &dyn PathFunction, gate: Gate) -> Result<Solution, EngineError> {
    let s = system.source;
    check_source(g, s)?;
    require("EMBFA", f, &system, &[Property::NoNegativeCircles, Property::Op], gate)?;

    let n = g.n();
    let mut tree = ShortestPathTree::rooted(n, s);
    tree.order.clear();
    tree.value[s] = Some(f.base());
    let mut stats = RunStats::default();

    for round in 1..=n {
        stats.iterations += 1;
        for road in g.roads() {
            let (u, v) = (road.from, road.to);
            let Some(value_u) = tree.value[u] else { continue };
            let path_u = tree
                .path_to(g, u)
                .expect("parent links stay acyclic and rooted");
            let revisits = path_u.contains_vertex(v);
            if revisits && system.kind == SystemKind::SimplePaths {
                continue;
            }
            stats.extend_calls += 1;
            let cand = f.extend(value_u, &path_u, road);
            let improves = tree.value[v].is_none_or(|cur| cand < cur);
            if !improves {
                continue;
            }
            if revisits {
                return Err(EngineError::NegativeCircle(format!(
                    "extending P_T({u}) by road {} back to vertex {v} lowers its value to {cand}",
                    road.key
                )));
            }
            if round == n {
                return Err(EngineError::NegativeCircle(format!(
                    "road {} still relaxes vertex {v} in round {n}",
                    road.key
                )));
            }
            tree.parent[v] = Some((u, road.key));
            tree.value[v] = Some(cand);
            tree.covered[v] = true;
            stats.relaxations += 1;
        }
    }

    Ok(Solution { tree, stats })
}
