use crate::graph::{Graph, RoadKey, VertexId};
use crate::path::Path;
use crate::value::ExtReal;

/// Risk of `p` evaluated from its closed form rather than by recurrence:
///
/// `r(P) = max{ d(P), max_{1≤i≤k} [ d(v_i → v_k along P) + d_{G\(v_{i-1},v_i)}(s, v_i) ] }`
///
/// where the `i = k` term is the detour to `t(P)` around the last road.
/// `detour(key, origin, target)` supplies blocked-road distances, so callers
/// can plug in an independent implementation. `r((s,s)) = 0`.
pub fn anti_risk_direct<D>(g: &Graph, p: &Path, detour: D) -> ExtReal
where
    D: Fn(RoadKey, VertexId, VertexId) -> ExtReal,
{
    if p.is_trivial() {
        return ExtReal::ZERO;
    }
    let weights: Vec<f64> = p
        .roads()
        .iter()
        .map(|&k| g.road(k).expect("path road exists").weight)
        .collect();
    let s = p.source();
    let total: f64 = weights.iter().sum();
    let mut risk = ExtReal::finite(total);
    for (i, &key) in p.roads().iter().enumerate() {
        // road i enters vertices[i + 1]; the rest of the path follows it
        let rest: f64 = weights[i + 1..].iter().sum();
        let term = detour(key, s, p.vertices()[i + 1]) + rest;
        risk = risk.max(term);
    }
    risk
}
