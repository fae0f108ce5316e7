//! Directed multigraphs with weighted, keyed roads.
//!
//! A road is a directed connection `from -> to` carrying a finite weight and
//! a key that is unique within its graph. Parallel roads are distinct roads
//! with distinct keys. An undirected edge is two roads, one per direction.

use std::fmt;

use crate::error::GraphError;

pub type VertexId = usize;

/// Identifier of a road, stable across [`Graph::remove_road`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoadKey(pub usize);

impl fmt::Display for RoadKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Road {
    pub key: RoadKey,
    pub from: VertexId,
    pub to: VertexId,
    pub weight: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Vertex {
    pub id: VertexId,
    pub label: Option<String>,
}

/// Immutable graph. Build one with [`GraphBuilder`], the text parser, or the
/// random generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    // sorted by key
    roads: Vec<Road>,
    // per vertex, positions into `roads` of outgoing roads, ascending key
    out: Vec<Vec<usize>>,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.roads.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// All roads in ascending key order.
    pub fn roads(&self) -> &[Road] {
        &self.roads
    }

    pub fn road(&self, key: RoadKey) -> Option<&Road> {
        self.roads
            .binary_search_by_key(&key, |r| r.key)
            .ok()
            .map(|i| &self.roads[i])
    }

    /// Outgoing roads of `v` in ascending key order.
    pub fn out_roads(&self, v: VertexId) -> impl Iterator<Item = &Road> + '_ {
        self.out[v].iter().map(move |&i| &self.roads[i])
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v < self.n()
    }

    /// `|δ(v)|`: number of roads with `v` as either endpoint.
    pub fn degree(&self, v: VertexId) -> usize {
        self.roads
            .iter()
            .filter(|r| r.from == v || r.to == v)
            .count()
    }

    /// `Δ(G)`, the largest vertex degree.
    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n()];
        for r in &self.roads {
            deg[r.from] += 1;
            if r.to != r.from {
                deg[r.to] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn has_negative_weight(&self) -> bool {
        self.roads.iter().any(|r| r.weight < 0.0)
    }

    /// A copy of the graph without the road `key`. Other keys are unchanged.
    pub fn remove_road(&self, key: RoadKey) -> Result<Graph, GraphError> {
        let pos = self
            .roads
            .binary_search_by_key(&key, |r| r.key)
            .map_err(|_| GraphError::UnknownRoad(key))?;
        let mut roads = self.roads.clone();
        roads.remove(pos);
        Ok(Graph::from_parts(self.vertices.clone(), roads))
    }

    fn from_parts(vertices: Vec<Vertex>, roads: Vec<Road>) -> Graph {
        let mut out = vec![Vec::new(); vertices.len()];
        for (i, r) in roads.iter().enumerate() {
            out[r.from].push(i);
        }
        Graph {
            vertices,
            roads,
            out,
        }
    }
}

/// Incremental construction of a [`Graph`]. Keys are assigned 0, 1, 2, ...
/// in insertion order.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    roads: Vec<Road>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            vertices: (0..n).map(|id| Vertex { id, label: None }).collect(),
            roads: Vec::new(),
        }
    }

    pub fn label(&mut self, v: VertexId, label: impl Into<String>) -> Result<(), GraphError> {
        let n = self.vertices.len();
        let vertex = self
            .vertices
            .get_mut(v)
            .ok_or(GraphError::VertexOutOfRange { vertex: v, n })?;
        vertex.label = Some(label.into());
        Ok(())
    }

    /// Adds the directed road `from -> to`.
    pub fn arc(&mut self, from: VertexId, to: VertexId, weight: f64) -> Result<RoadKey, GraphError> {
        let n = self.vertices.len();
        for v in [from, to] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if from == to {
            return Err(GraphError::SelfLoop(from));
        }
        if !weight.is_finite() {
            return Err(GraphError::NonFiniteWeight(weight));
        }
        let key = RoadKey(self.roads.len());
        self.roads.push(Road {
            key,
            from,
            to,
            weight,
        });
        Ok(key)
    }

    /// Adds an undirected edge as two roads, `u -> v` first.
    pub fn edge(&mut self, u: VertexId, v: VertexId, weight: f64) -> Result<(RoadKey, RoadKey), GraphError> {
        let forward = self.arc(u, v, weight)?;
        let backward = self.arc(v, u, weight)?;
        Ok((forward, backward))
    }

    pub fn build(self) -> Graph {
        Graph::from_parts(self.vertices, self.roads)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        let mut b = GraphBuilder::new(3);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(1, 2, 1.0).unwrap();
        b.arc(0, 2, 3.0).unwrap();
        b.build()
    }

    #[test]
    fn remove_road_keeps_other_keys() {
        let g = triangle();
        let h = g.remove_road(RoadKey(1)).unwrap();
        let keys: Vec<_> = h.roads().iter().map(|r| r.key.0).collect();
        assert_eq!(keys, vec![0, 2]);
        assert_eq!(h.n(), 3);
        assert_eq!(g.m(), 3, "original untouched");
        assert_eq!(h.out_roads(0).map(|r| r.key.0).collect::<Vec<_>>(), vec![0, 2]);
        assert!(h.out_roads(1).next().is_none());
    }

    #[test]
    fn remove_only_road() {
        let mut b = GraphBuilder::new(2);
        b.arc(0, 1, 5.0).unwrap();
        let h = b.build().remove_road(RoadKey(0)).unwrap();
        assert_eq!((h.n(), h.m()), (2, 0));
    }

    #[test]
    fn remove_unknown_road() {
        let err = triangle().remove_road(RoadKey(99)).unwrap_err();
        assert_eq!(err.to_string(), "unknown road key k99");
    }

    #[test]
    fn star_degree() {
        let mut b = GraphBuilder::new(4);
        for t in 1..4 {
            b.arc(0, t, 1.0).unwrap();
        }
        let g = b.build();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(2), 1);
    }

    #[test]
    fn single_road_degree() {
        let mut b = GraphBuilder::new(2);
        b.arc(0, 1, 1.0).unwrap();
        assert_eq!(b.build().max_degree(), 1);
    }

    #[test]
    fn builder_rejects_bad_roads() {
        let mut b = GraphBuilder::new(2);
        assert!(matches!(b.arc(0, 0, 1.0), Err(GraphError::SelfLoop(0))));
        assert!(matches!(b.arc(0, 2, 1.0), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(b.arc(0, 1, f64::NAN), Err(GraphError::NonFiniteWeight(_))));
    }

    #[test]
    fn undirected_edge_is_two_roads() {
        let mut b = GraphBuilder::new(2);
        let (f, r) = b.edge(0, 1, 3.0).unwrap();
        let g = b.build();
        assert_eq!((f.0, r.0), (0, 1));
        assert_eq!(g.road(f).unwrap().to, 1);
        assert_eq!(g.road(r).unwrap().to, 0);
        assert_eq!(g.road(r).unwrap().weight, 3.0);
    }

    #[test]
    fn parallel_roads_are_distinct() {
        let mut b = GraphBuilder::new(2);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(0, 1, 2.0).unwrap();
        let g = b.build();
        assert_eq!(g.out_roads(0).count(), 2);
        assert_eq!(g.max_degree(), 2);
    }
}
