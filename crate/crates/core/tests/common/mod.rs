//! Brute-force references shared by the integration tests. Nothing here
//! calls into `pathfn::verify`.
#![allow(dead_code)]

use pathfn::{generate_random, ExtReal, GenMode, GenParams, Graph, GraphBuilder, RoadKey, VertexId};

/// s=0, a=1, b=2, t=3; undirected s-a 1, s-b 2, a-b 1, a-t 1, b-t 2.
/// Keys: 0 s→a, 1 a→s, 2 s→b, 3 b→s, 4 a→b, 5 b→a, 6 a→t, 7 t→a, 8 b→t, 9 t→b.
pub fn diamond() -> Graph {
    let mut b = GraphBuilder::new(4);
    b.edge(0, 1, 1.0).unwrap();
    b.edge(0, 2, 2.0).unwrap();
    b.edge(1, 2, 1.0).unwrap();
    b.edge(1, 3, 1.0).unwrap();
    b.edge(2, 3, 2.0).unwrap();
    b.build()
}

pub fn random(seed: u64, n: usize, m: usize, mode: GenMode) -> Graph {
    generate_random(&GenParams {
        n,
        m,
        weight_low: 0.0,
        weight_high: 10.0,
        mode,
        seed,
    })
    .unwrap()
}

/// Every simple path from `s` as a road-key list, `(s,s)` included.
pub fn simple_paths(g: &Graph, s: VertexId) -> Vec<Vec<RoadKey>> {
    fn go(g: &Graph, at: VertexId, seen: &mut Vec<bool>, keys: &mut Vec<RoadKey>, out: &mut Vec<Vec<RoadKey>>) {
        out.push(keys.clone());
        for r in g.roads() {
            if r.from == at && !seen[r.to] {
                seen[r.to] = true;
                keys.push(r.key);
                go(g, r.to, seen, keys, out);
                keys.pop();
                seen[r.to] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut out = Vec::new();
    go(g, s, &mut seen, &mut Vec::new(), &mut out);
    out
}

pub fn terminal(g: &Graph, s: VertexId, keys: &[RoadKey]) -> VertexId {
    keys.last().map_or(s, |&k| g.road(k).unwrap().to)
}

pub fn weight_sum(g: &Graph, keys: &[RoadKey]) -> f64 {
    keys.iter().map(|&k| g.road(k).unwrap().weight).sum()
}

/// Minimum weight over simple `x → y` paths avoiding road `skip`.
pub fn brute_distance(g: &Graph, skip: Option<RoadKey>, x: VertexId, y: VertexId) -> ExtReal {
    simple_paths(g, x)
        .into_iter()
        .filter(|p| terminal(g, x, p) == y && skip.is_none_or(|k| !p.contains(&k)))
        .map(|p| ExtReal::finite(weight_sum(g, &p)))
        .min()
        .unwrap_or(ExtReal::INFINITY)
}

/// All-pairs Floyd-Warshall; `d[v][v] < 0` exactly when a negative cycle
/// passes through `v`.
pub fn floyd(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for r in g.roads() {
        d[r.from][r.to] = d[r.from][r.to].min(r.weight);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}
