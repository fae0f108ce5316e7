use super::{check_source, ShortestPathTree};
use crate::error::EngineError;
use crate::graph::{Graph, RoadKey, VertexId};

/// Spanning arborescence of `g` rooted at `s`, grown one road at a time.
/// Each step attaches the smallest uncovered vertex that has a road from the
/// covered set, through the smallest such covered vertex and road key.
/// Fails if some vertex is not reachable from `s`.
pub fn sta(g: &Graph, s: VertexId) -> Result<ShortestPathTree, EngineError> {
    check_source(g, s)?;
    let n = g.n();
    let mut tree = ShortestPathTree::rooted(n, s);
    let mut link: Vec<Option<(VertexId, RoadKey)>> = vec![None; n];

    let attach = |u: VertexId, tree: &ShortestPathTree, link: &mut Vec<Option<(VertexId, RoadKey)>>| {
        for r in g.out_roads(u) {
            if tree.covered[r.to] {
                continue;
            }
            let cand = (u, r.key);
            if link[r.to].is_none_or(|cur| cand < cur) {
                link[r.to] = Some(cand);
            }
        }
    };
    attach(s, &tree, &mut link);

    while let Some(v) = (0..n).find(|&v| !tree.covered[v] && link[v].is_some()) {
        tree.parent[v] = link[v];
        tree.covered[v] = true;
        tree.order.push(v);
        attach(v, &tree, &mut link);
    }

    match (0..n).find(|&v| !tree.covered[v]) {
        Some(v) => Err(EngineError::Unreachable(v)),
        None => Ok(tree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn single_road() {
        let mut b = GraphBuilder::new(2);
        b.arc(0, 1, 1.0).unwrap();
        let t = sta(&b.build(), 0).unwrap();
        assert_eq!(t.parent[1], Some((0, RoadKey(0))));
        assert_eq!(t.parent[0], None);
        assert_eq!(t.order, vec![0, 1]);
    }

    #[test]
    fn triangle_spans() {
        let mut b = GraphBuilder::new(3);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(0, 2, 1.0).unwrap();
        b.arc(1, 2, 1.0).unwrap();
        let g = b.build();
        let t = sta(&g, 0).unwrap();
        assert_eq!(t.parent.iter().filter(|p| p.is_some()).count(), 2);
        assert!(t.parent[0].is_none());
        assert!(t.covered.iter().all(|&c| c));
        for v in 0..3 {
            assert_eq!(t.path_to(&g, v).unwrap().terminal(), v);
        }
        assert!(t.value.iter().all(Option::is_none));
    }

    #[test]
    fn isolated_vertex() {
        let mut b = GraphBuilder::new(4);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(1, 2, 1.0).unwrap();
        let e = sta(&b.build(), 0).unwrap_err();
        assert_eq!(e.to_string(), "vertex 3 unreachable from source");
    }
}
