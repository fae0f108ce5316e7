use super::enumerate::{walk, Descend};
use super::oracle::oracle_min;
use super::{Evaluated, PropertyReport, Witness, TOLERANCE};
use crate::engines::ShortestPathTree;
use crate::error::VerifyError;
use crate::function::{path_value, PathFunction, Property};
use crate::graph::{Graph, VertexId};
use crate::path::{Path, PathSystem, SystemKind};
use crate::value::ExtReal;

/// Accepts the names printed by [`Property::name`], case-insensitively.
pub fn parse_property(name: &str) -> Result<Property, VerifyError> {
    name.parse()
        .map_err(|_| VerifyError::UnknownProperty(name.to_string()))
}

fn is_minimum(value: ExtReal, minimum: Option<ExtReal>) -> bool {
    minimum.is_some_and(|m| value.approx_eq(m, TOLERANCE))
}

fn clearly_less(a: ExtReal, b: ExtReal) -> bool {
    match (a.is_infinite(), b.is_infinite()) {
        (false, true) => true,
        (true, _) => false,
        (false, false) => a.get() < b.get() - TOLERANCE,
    }
}

fn at_most(a: ExtReal, b: ExtReal) -> bool {
    a <= b || a.approx_eq(b, TOLERANCE)
}

fn eval(path: &Path, value: ExtReal) -> Evaluated {
    Evaluated {
        path: path.clone(),
        value,
    }
}

/// Exhaustive bounded test of one property over members of `system` with at
/// most `max_roads` roads (extensions may reach `max_roads + 1`).
///
/// Shortest-path variants restrict the hypothesis side to minimum paths,
/// with minima from [`oracle_min`]. WISP ignores `max_roads` and searches
/// all simple paths. Circle properties enumerate the all-paths system and
/// hold vacuously on simple paths.
pub fn check_property(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    property: Property,
    max_roads: usize,
) -> PropertyReport {
    match property {
        Property::Ndsp | Property::Insp => check_sons(g, system, f, property, max_roads),
        Property::Sop
        | Property::Sopsp
        | Property::Wop
        | Property::Wopsp
        | Property::Op
        | Property::Opsp => check_pairs(g, system, f, property, max_roads),
        Property::Wisp => check_wisp(g, system, f),
        Property::NoNegativeCircles | Property::NoNonPositiveCircles => {
            let sign = if property == Property::NoNegativeCircles {
                CircleSign::Negative
            } else {
                CircleSign::NonPositive
            };
            if system.kind == SystemKind::SimplePaths {
                PropertyReport::new(sign.property_name(), max_roads)
            } else {
                check_no_negative_circles(g, system.source, f, max_roads, sign)
            }
        }
    }
}

fn check_sons(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    property: Property,
    max_roads: usize,
) -> PropertyReport {
    let minimum = oracle_min(g, system.source, f).minimum;
    let mut report = PropertyReport::new(property.name(), max_roads);
    walk(g, system, f, max_roads, |p, values| {
        let value = *values.last().expect("nonempty");
        if !is_minimum(value, minimum[p.terminal()]) {
            return Descend::Yes;
        }
        for road in g.out_roads(p.terminal()) {
            if !system.admits_extension(p, road) {
                continue;
            }
            report.cases += 1;
            let son = f.extend(value, p, road);
            let ok = match property {
                Property::Ndsp => at_most(value, son),
                _ => value < son,
            };
            if !ok {
                report.violated(Witness::Son {
                    parent: eval(p, value),
                    son: eval(&p.extended(road).expect("chained"), son),
                });
                return Descend::No;
            }
        }
        Descend::Yes
    });
    report
}

fn check_pairs(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    property: Property,
    max_roads: usize,
) -> PropertyReport {
    let shortest_only = matches!(property, Property::Sopsp | Property::Wopsp | Property::Opsp);
    let minimum = if shortest_only {
        oracle_min(g, system.source, f).minimum
    } else {
        Vec::new()
    };

    let mut by_terminal: Vec<Vec<(Path, ExtReal)>> = vec![Vec::new(); g.n()];
    walk(g, system, f, max_roads, |p, values| {
        by_terminal[p.terminal()].push((p.clone(), *values.last().expect("nonempty")));
        Descend::Yes
    });

    let mut report = PropertyReport::new(property.name(), max_roads);
    for (u, group) in by_terminal.iter().enumerate() {
        for road in g.out_roads(u) {
            let sons: Vec<(usize, ExtReal)> = group
                .iter()
                .enumerate()
                .filter(|(_, (p, _))| system.admits_extension(p, road))
                .map(|(i, (p, v))| (i, f.extend(*v, p, road)))
                .collect();
            for &(i, son_i) in &sons {
                let (p, fp) = &group[i];
                if shortest_only && !is_minimum(*fp, minimum[u]) {
                    continue;
                }
                for &(j, son_j) in &sons {
                    if i == j {
                        continue;
                    }
                    let (q, fq) = &group[j];
                    let ok = match property {
                        Property::Sop | Property::Sopsp => {
                            !(fp <= fq) || at_most(son_i, son_j)
                        }
                        Property::Wop | Property::Wopsp => !clearly_less(*fp, *fq) || son_i < son_j,
                        _ => {
                            (!clearly_less(*fp, *fq) || son_i < son_j)
                                && (!fp.approx_eq(*fq, TOLERANCE) || son_i.approx_eq(son_j, TOLERANCE))
                        }
                    };
                    report.cases += 1;
                    if !ok {
                        report.violated(Witness::Pair {
                            lhs: eval(p, *fp),
                            rhs: eval(q, *fq),
                            lhs_son: eval(&p.extended(road).expect("chained"), son_i),
                            rhs_son: eval(&q.extended(road).expect("chained"), son_j),
                        });
                        return report;
                    }
                }
            }
        }
    }
    report
}

/// Which circle condition to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleSign {
    /// `f(P + C) - f(P) ≥ 0`.
    Negative,
    /// `f(P + C) - f(P) > 0`.
    NonPositive,
}

impl CircleSign {
    fn property_name(self) -> &'static str {
        match self {
            CircleSign::Negative => Property::NoNegativeCircles.name(),
            CircleSign::NonPositive => Property::NoNonPositiveCircles.name(),
        }
    }
}

/// Scans every all-paths member `P + C` with at most `max_roads` roads,
/// where `C` is a circle returning to `t(P)`, and compares `f(P + C)` with
/// `f(P)`.
pub fn check_no_negative_circles(
    g: &Graph,
    source: VertexId,
    f: &dyn PathFunction,
    max_roads: usize,
    sign: CircleSign,
) -> PropertyReport {
    let mut report = PropertyReport::new(sign.property_name(), max_roads);
    walk(g, PathSystem::all(source), f, max_roads, |p, values| {
        let v = p.terminal();
        let looped = values[p.len()];
        for (j, &w) in p.vertices()[..p.len()].iter().enumerate() {
            if w != v {
                continue;
            }
            report.cases += 1;
            let base = values[j];
            let ok = match sign {
                CircleSign::Negative => !clearly_less(looped, base),
                CircleSign::NonPositive => looped > base,
            };
            if !ok {
                report.violated(Witness::Circle {
                    base: eval(&p.prefix(j), base),
                    looped: eval(p, looped),
                });
                return Descend::No;
            }
        }
        if report.passed() {
            Descend::Yes
        } else {
            Descend::No
        }
    });
    report
}

/// WISP: every reachable `v ≠ s` needs a path all of whose nonempty
/// prefixes are minimum paths. A simple such path exists whenever any does,
/// so only simple paths are searched, and a branch is abandoned as soon as
/// a prefix is not minimal.
pub fn check_wisp(g: &Graph, system: PathSystem, f: &dyn PathFunction) -> PropertyReport {
    let n = g.n();
    let minimum = oracle_min(g, system.source, f).minimum;
    let mut inherited = vec![false; n];
    let mut report = PropertyReport::new(Property::Wisp.name(), n.saturating_sub(1));
    walk(
        g,
        PathSystem::simple(system.source),
        f,
        n.saturating_sub(1),
        |p, values| {
            if p.is_trivial() {
                return Descend::Yes;
            }
            report.cases += 1;
            let v = p.terminal();
            if is_minimum(values[p.len()], minimum[v]) {
                inherited[v] = true;
                Descend::Yes
            } else {
                Descend::No
            }
        },
    );
    let lacking = (0..n).find(|&v| v != system.source && minimum[v].is_some() && !inherited[v]);
    if let Some(v) = lacking {
        report.violated(Witness::NoInheritedPath {
            vertex: v,
            minimum: minimum[v].expect("reachable"),
        });
    }
    report
}

/// Arborescence invariants of an engine output: the source has no parent,
/// every other covered vertex has exactly one parent link through an
/// existing road from a covered vertex, links lead back to the source
/// without cycles, every `P_T(v)` is a member of `system`, and when `f` is
/// given each value equals the fold of `f` along `P_T(v)` exactly.
pub fn check_tree_structure(
    g: &Graph,
    system: PathSystem,
    f: Option<&dyn PathFunction>,
    tree: &ShortestPathTree,
) -> PropertyReport {
    let n = g.n();
    let mut report = PropertyReport::new("arborescence", n.saturating_sub(1));
    let fail = |report: &mut PropertyReport, vertex: VertexId, reason: String| {
        report.violated(Witness::Structure { vertex, reason });
    };
    let s = tree.source;
    if tree.n() != n || tree.parent.len() != n || tree.value.len() != n {
        fail(&mut report, s, format!("tree sized for {} vertices, graph has {n}", tree.n()));
        return report;
    }
    if s != system.source || !tree.is_covered(s) {
        fail(&mut report, s, "source not the covered root".into());
        return report;
    }
    for v in 0..n {
        report.cases += 1;
        if !tree.is_covered(v) {
            if tree.parent[v].is_some() || tree.value[v].is_some() {
                fail(&mut report, v, "uncovered vertex carries a parent or value".into());
            }
            continue;
        }
        match (v == s, tree.parent[v]) {
            (true, Some(_)) => fail(&mut report, v, "source has a parent".into()),
            (false, None) => fail(&mut report, v, "covered vertex without parent".into()),
            (false, Some((u, key))) => match g.road(key) {
                Some(r) if r.from == u && r.to == v && tree.is_covered(u) => {}
                _ => fail(&mut report, v, format!("parent link ({u}, {key}) is not a road from a covered vertex")),
            },
            (true, None) => {}
        }
        let Some(path) = tree.path_to(g, v) else {
            fail(&mut report, v, "parent links do not lead back to the source".into());
            continue;
        };
        if !system.contains(&path) {
            fail(&mut report, v, format!("P_T({v}) = {path} is not a member"));
        }
        if let (Some(f), Some(value)) = (f, tree.value[v]) {
            let folded = path_value(f, g, &path).expect("tree path is chained");
            if folded != value {
                fail(&mut report, v, format!("value {value} but f(P_T) = {folded}"));
            }
        }
        if !report.passed() {
            break;
        }
    }
    report
}

/// Values never decrease from parent to child.
pub fn check_monotone_tree(tree: &ShortestPathTree) -> PropertyReport {
    let mut report = PropertyReport::new("tree-monotone", tree.n().saturating_sub(1));
    for v in tree.covered_vertices() {
        let Some((u, _)) = tree.parent[v] else { continue };
        report.cases += 1;
        if let (Some(pu), Some(pv)) = (tree.value[u], tree.value[v]) {
            if pv < pu {
                report.violated(Witness::Structure {
                    vertex: v,
                    reason: format!("value {pv} below parent {u} value {pu}"),
                });
                break;
            }
        }
    }
    report
}
