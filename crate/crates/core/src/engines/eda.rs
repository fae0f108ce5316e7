use super::{check_source, require, Gate, RunStats, ShortestPathTree, Solution};
use crate::error::EngineError;
use crate::function::{PathFunction, Property};
use crate::graph::{Graph, RoadKey, VertexId};
use crate::path::{Path, PathSystem};
use crate::value::ExtReal;

/// Best known way into an uncovered vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    value: ExtReal,
    from: VertexId,
    key: RoadKey,
}

/// Extended Dijkstra.
///
/// Grows the covered set `𝒞` from the source. Each step picks the pair
/// `(u', v')`, `u' ∈ 𝒞`, `v' ∉ 𝒞`, minimising `f(P_T(u') + (u',v'))` over
/// member extensions, and fixes `P_T(v') = P_T(u') + (u',v')`. Ties go to the
/// smallest `v'`, then `u'`, then road key. Stops when no member extension
/// leaves `𝒞`.
///
/// Requires SOPSP, WISP and NDSP (checked against the declared properties
/// unless `gate` is [`Gate::Forced`]). Tree paths are fixed once chosen, so
/// only roads out of a newly covered vertex are evaluated: at most one
/// `extend` per road.
pub fn eda(g: &Graph, system: PathSystem, f: &dyn PathFunction, gate: Gate) -> Result<Solution, EngineError> {
    let s = system.source;
    check_source(g, s)?;
    require(
        "EDA",
        f,
        &system,
        &[Property::Sopsp, Property::Wisp, Property::Ndsp],
        gate,
    )?;

    let n = g.n();
    let mut tree = ShortestPathTree::rooted(n, s);
    let mut stats = RunStats::default();
    let mut paths: Vec<Option<Path>> = vec![None; n];
    let mut best: Vec<Option<Candidate>> = vec![None; n];

    tree.value[s] = Some(f.base());
    paths[s] = Some(Path::trivial(s));

    let mut newest = s;
    loop {
        let path_u = paths[newest].as_ref().expect("covered vertex has a path");
        let value_u = tree.value[newest].expect("covered vertex has a value");
        for road in g.out_roads(newest) {
            if tree.covered[road.to] || !system.admits_extension(path_u, road) {
                continue;
            }
            stats.extend_calls += 1;
            let cand = Candidate {
                value: f.extend(value_u, path_u, road),
                from: newest,
                key: road.key,
            };
            if best[road.to].is_none_or(|cur| cand < cur) {
                best[road.to] = Some(cand);
                stats.relaxations += 1;
            }
        }

        let next = (0..n)
            .filter(|&v| !tree.covered[v])
            .filter_map(|v| best[v].map(|c| (c.value, v)))
            .min();
        let Some((_, v)) = next else { break };
        let c = best[v].expect("selected vertex has a candidate");
        let road = g.road(c.key).expect("candidate road exists");
        let path_v = paths[c.from]
            .as_ref()
            .expect("parent is covered")
            .extended(road)
            .expect("candidate road starts at its parent");

        tree.parent[v] = Some((c.from, c.key));
        tree.value[v] = Some(c.value);
        tree.covered[v] = true;
        tree.order.push(v);
        paths[v] = Some(path_v);
        stats.iterations += 1;
        newest = v;
    }

    Ok(Solution { tree, stats })
}
