//! Detour distances `d_{G\(u',v')}(x, y)`: the classic distance from `x` to
//! `y` once road `(u',v')` is removed.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::engines::dijkstra_classic;
use crate::error::{EngineError, FunctionError, GraphError};
use crate::graph::{Graph, RoadKey, VertexId};
use crate::value::ExtReal;

/// Lazily filled detour cache for one immutable graph with nonnegative
/// weights.
///
/// One classic Dijkstra run is cached per `(deleted road, origin)` and
/// answers every target. Concurrent fills of the same entry compute the same
/// vector; the last write wins.
#[derive(Debug)]
pub struct DetourTable {
    graph: Arc<Graph>,
    cache: RwLock<HashMap<(RoadKey, VertexId), Arc<Vec<ExtReal>>>>,
}

impl DetourTable {
    pub fn new(graph: Arc<Graph>) -> Result<Self, FunctionError> {
        if let Some(r) = graph.roads().iter().find(|r| r.weight < 0.0) {
            return Err(FunctionError::NegativeWeight(r.key));
        }
        Ok(DetourTable {
            graph,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Classic distance from `origin` to `target` in `G` minus road `deleted`;
    /// `∞` when unreachable.
    pub fn distance(&self, deleted: RoadKey, origin: VertexId, target: VertexId) -> Result<ExtReal, GraphError> {
        let n = self.graph.n();
        for v in [origin, target] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        let hit = self
            .cache
            .read()
            .expect("detour cache poisoned")
            .get(&(deleted, origin))
            .cloned();
        let dist = match hit {
            Some(d) => d,
            None => {
                let reduced = self.graph.remove_road(deleted)?;
                let d = match dijkstra_classic(&reduced, origin) {
                    Ok(d) => Arc::new(d),
                    Err(EngineError::NegativeWeight(k)) => {
                        unreachable!("table built for nonnegative graph, found negative road {k}")
                    }
                    Err(e) => unreachable!("{e}"),
                };
                self.cache
                    .write()
                    .expect("detour cache poisoned")
                    .insert((deleted, origin), Arc::clone(&d));
                d
            }
        };
        Ok(dist[target])
    }

    /// Number of cached Dijkstra runs.
    pub fn cached_runs(&self) -> usize {
        self.cache.read().expect("detour cache poisoned").len()
    }
}
