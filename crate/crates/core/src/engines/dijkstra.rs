use crate::error::EngineError;
use crate::graph::{Graph, VertexId};
use crate::value::ExtReal;

/// Classic nonnegative-weight distances from `s`, `∞` where unreachable.
/// Array-scan form, `O(n² + m)`.
pub fn dijkstra_classic(g: &Graph, s: VertexId) -> Result<Vec<ExtReal>, EngineError> {
    if !g.contains_vertex(s) {
        return Err(EngineError::BadSource(s));
    }
    if let Some(r) = g.roads().iter().find(|r| r.weight < 0.0) {
        return Err(EngineError::NegativeWeight(r.key));
    }
    let n = g.n();
    let mut dist = vec![ExtReal::INFINITY; n];
    let mut done = vec![false; n];
    dist[s] = ExtReal::ZERO;
    loop {
        let next = (0..n)
            .filter(|&v| !done[v] && dist[v].is_finite())
            .min_by_key(|&v| dist[v]);
        let Some(u) = next else { break };
        done[u] = true;
        for r in g.out_roads(u) {
            let cand = dist[u] + r.weight;
            if cand < dist[r.to] {
                dist[r.to] = cand;
            }
        }
    }
    Ok(dist)
}
