use crate::function::PathFunction;
use crate::graph::Graph;
use crate::path::{Path, PathSystem};
use crate::value::ExtReal;

/// Depth-first stream of the members of `system` with at most `max_roads`
/// roads. Yields `(s,s)` first; children are visited in road-key order.
#[derive(Clone, Debug)]
pub struct PathEnumerator<'g> {
    g: &'g Graph,
    system: PathSystem,
    max_roads: usize,
    path: Path,
    // cursor[d]: next out-road index to try at depth d
    cursor: Vec<usize>,
    started: bool,
}

pub fn enumerate_paths(g: &Graph, system: PathSystem, max_roads: usize) -> PathEnumerator<'_> {
    PathEnumerator {
        g,
        system,
        max_roads,
        path: Path::trivial(system.source),
        cursor: vec![0],
        started: false,
    }
}

impl Iterator for PathEnumerator<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if !self.started {
            self.started = true;
            if !self.g.contains_vertex(self.system.source) {
                self.cursor.clear();
                return None;
            }
            return Some(self.path.clone());
        }
        loop {
            let start = *self.cursor.last()?;
            let level = self.cursor.len() - 1;
            if level < self.max_roads {
                let u = self.path.terminal();
                let mut idx = start;
                let roads = self.g.out_roads(u).skip(idx);
                for road in roads {
                    idx += 1;
                    if self.system.admits_extension(&self.path, road) {
                        self.cursor[level] = idx;
                        self.path.push(road).expect("road leaves the terminal");
                        self.cursor.push(0);
                        return Some(self.path.clone());
                    }
                }
            }
            self.cursor.pop();
            self.path.pop()?;
        }
    }
}

/// Whether [`walk`] should descend below the path just visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Descend {
    Yes,
    No,
}

/// Depth-first walk over the same paths as [`enumerate_paths`], carrying
/// the value of every prefix: `values[i] = f(prefix with i roads)`.
pub(crate) fn walk<F>(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    max_roads: usize,
    mut visit: F,
) where
    F: FnMut(&Path, &[ExtReal]) -> Descend,
{
    if !g.contains_vertex(system.source) {
        return;
    }
    let mut path = Path::trivial(system.source);
    let mut values = vec![f.base()];
    walk_from(g, system, f, max_roads, &mut path, &mut values, &mut visit);
}

fn walk_from<F>(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    max_roads: usize,
    path: &mut Path,
    values: &mut Vec<ExtReal>,
    visit: &mut F,
) where
    F: FnMut(&Path, &[ExtReal]) -> Descend,
{
    if visit(path, values) == Descend::No || path.len() >= max_roads {
        return;
    }
    for road in g.out_roads(path.terminal()) {
        if !system.admits_extension(path, road) {
            continue;
        }
        let value = f.extend(*values.last().expect("nonempty"), path, road);
        path.push(road).expect("road leaves the terminal");
        values.push(value);
        walk_from(g, system, f, max_roads, path, values, visit);
        values.pop();
        path.pop();
    }
}
