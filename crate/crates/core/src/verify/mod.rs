//! Exhaustive checks for small instances.
//!
//! [`oracle_min`] computes true per-vertex minima by enumerating simple
//! paths, which is exact for any function without negative circles. The
//! property checkers scan every quantified case within an enumeration bound
//! and return either `no-violation-found` (bounded evidence) or a concrete
//! witness.
//!
//! All value comparisons use an absolute tolerance, [`TOLERANCE`] by default.

mod anti_risk;
mod checks;
mod enumerate;
mod oracle;

use std::fmt;

pub use anti_risk::anti_risk_direct;
pub use checks::{
    check_monotone_tree, check_no_negative_circles, check_property, check_tree_structure, check_wisp,
    parse_property, CircleSign,
};
pub use enumerate::{enumerate_paths, PathEnumerator};
pub use oracle::{bounded_minima, compare_tree_to_oracle, oracle_min, OracleResult};

use crate::graph::VertexId;
use crate::path::Path;
use crate::value::ExtReal;

pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoViolationFound,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoViolationFound => "no-violation-found",
            Verdict::Violated => "violated",
        })
    }
}

/// A path with its value.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluated {
    pub path: Path,
    pub value: ExtReal,
}

impl fmt::Display for Evaluated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] f={}", self.path, self.value)
    }
}

/// Concrete evidence of a violation.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A minimum path and a son breaking NDSP/INSP.
    Son { parent: Evaluated, son: Evaluated },
    /// Two paths to the same vertex and their extensions by a common road.
    Pair {
        lhs: Evaluated,
        rhs: Evaluated,
        lhs_son: Evaluated,
        rhs_son: Evaluated,
    },
    /// `looped = base + C` for a circle `C`.
    Circle { base: Evaluated, looped: Evaluated },
    /// A vertex without a path whose prefixes are all minimum paths.
    NoInheritedPath { vertex: VertexId, minimum: ExtReal },
    /// Tree value or coverage disagreeing with the oracle.
    Deviation {
        vertex: VertexId,
        tree: Option<ExtReal>,
        oracle: Option<ExtReal>,
    },
    /// A broken tree invariant.
    Structure { vertex: VertexId, reason: String },
}

fn opt(v: Option<ExtReal>) -> String {
    v.map_or_else(|| "absent".to_string(), |x| x.to_string())
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Son { parent, son } => write!(f, "P={parent}; SP={son}"),
            Witness::Pair {
                lhs,
                rhs,
                lhs_son,
                rhs_son,
            } => write!(f, "P={lhs}; P'={rhs}; SP={lhs_son}; SP'={rhs_son}"),
            Witness::Circle { base, looped } => write!(f, "P={base}; P+C={looped}"),
            Witness::NoInheritedPath { vertex, minimum } => {
                write!(f, "vertex {vertex} (minimum {minimum}) has no prefix-minimal path")
            }
            Witness::Deviation { vertex, tree, oracle } => {
                write!(f, "vertex {vertex}: tree {} vs oracle {}", opt(*tree), opt(*oracle))
            }
            Witness::Structure { vertex, reason } => write!(f, "vertex {vertex}: {reason}"),
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Enumeration bound (roads per path).
    pub max_roads: usize,
    /// Number of quantified cases examined.
    pub cases: u64,
}

impl PropertyReport {
    fn new(property: impl Into<String>, max_roads: usize) -> Self {
        PropertyReport {
            property: property.into(),
            verdict: Verdict::NoViolationFound,
            witness: None,
            max_roads,
            cases: 0,
        }
    }

    fn violated(&mut self, witness: Witness) {
        if self.verdict == Verdict::NoViolationFound {
            self.verdict = Verdict::Violated;
            self.witness = Some(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::NoViolationFound
    }
}

/// `property=<name> verdict=<...> scope=max_roads:<L> witness=<... or ->`
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "property={} verdict={} scope=max_roads:{} witness=",
            self.property, self.verdict, self.max_roads
        )?;
        match &self.witness {
            Some(w) => write!(f, "{w}"),
            None => f.write_str("-"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::classic_distance;
    use crate::engines::{eda, Gate};
    use crate::function::{PathFunction, Property, PropertySet};
    use crate::graph::{Graph, GraphBuilder, Road};
    use crate::path::PathSystem;

    fn diamond() -> Graph {
        let mut b = GraphBuilder::new(4);
        b.edge(0, 1, 1.0).unwrap();
        b.edge(0, 2, 2.0).unwrap();
        b.edge(1, 2, 1.0).unwrap();
        b.edge(1, 3, 1.0).unwrap();
        b.edge(2, 3, 2.0).unwrap();
        b.build()
    }

    struct Parity;

    impl PathFunction for Parity {
        fn name(&self) -> &str {
            "parity"
        }
        fn base(&self) -> ExtReal {
            ExtReal::ZERO
        }
        fn extend(&self, value: ExtReal, _: &Path, _: &Road) -> ExtReal {
            ExtReal::finite(1.0 - value.get())
        }
        fn declared(&self) -> PropertySet {
            PropertySet::default()
        }
    }

    #[test]
    fn diamond_has_eleven_simple_paths() {
        let g = diamond();
        assert_eq!(enumerate_paths(&g, PathSystem::simple(0), 3).count(), 11);
        assert_eq!(oracle_min(&g, 0, &classic_distance(&g)).enumerated, 11);
    }

    #[test]
    fn oracle_classic_values() {
        let g = diamond();
        let o = oracle_min(&g, 0, &classic_distance(&g));
        let want = [0.0, 1.0, 2.0, 2.0];
        for (v, w) in want.iter().enumerate() {
            assert_eq!(o.minimum[v], Some(ExtReal::finite(*w)));
        }
    }

    #[test]
    fn corrupted_tree_is_caught() {
        let g = diamond();
        let f = classic_distance(&g);
        let mut tree = eda(&g, PathSystem::simple(0), &f, Gate::Checked).unwrap().tree;
        let o = oracle_min(&g, 0, &f);
        assert!(compare_tree_to_oracle(&tree, &o, TOLERANCE).unwrap().passed());
        assert!(check_tree_structure(&g, PathSystem::simple(0), Some(&f), &tree).passed());
        tree.value[3] = tree.value[3].map(|x| x + 1.0);
        let report = compare_tree_to_oracle(&tree, &o, TOLERANCE).unwrap();
        assert!(!report.passed());
        assert!(matches!(report.witness, Some(Witness::Deviation { vertex: 3, .. })));
        assert!(!check_tree_structure(&g, PathSystem::simple(0), Some(&f), &tree).passed());
    }

    #[test]
    fn classic_passes_its_declared_properties() {
        let g = diamond();
        let f = classic_distance(&g);
        for system in [PathSystem::simple(0), PathSystem::all(0)] {
            for p in f.declared().closure(system.kind).iter() {
                let r = check_property(&g, system, &f, p, 4);
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn parity_breaks_ndsp_on_odd_chain() {
        let mut b = GraphBuilder::new(3);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(1, 2, 1.0).unwrap();
        let g = b.build();
        let r = check_property(&g, PathSystem::simple(0), &Parity, Property::Ndsp, 2);
        assert!(!r.passed());
        // every vertex of the diamond has an even simple path, so NDSP holds there
        let g = diamond();
        assert!(check_property(&g, PathSystem::simple(0), &Parity, Property::Ndsp, 3).passed());
        assert!(!check_wisp(&g, PathSystem::simple(0), &Parity).passed());
    }

    #[test]
    fn negative_cycle_found() {
        let mut b = GraphBuilder::new(3);
        b.arc(0, 1, 1.0).unwrap();
        b.arc(1, 2, -3.0).unwrap();
        b.arc(2, 1, 1.0).unwrap();
        let g = b.build();
        let f = classic_distance(&g);
        let r = check_no_negative_circles(&g, 0, &f, 4, CircleSign::Negative);
        assert!(!r.passed());
        assert!(matches!(r.witness, Some(Witness::Circle { .. })));
        assert!(check_property(&g, PathSystem::simple(0), &f, Property::NoNegativeCircles, 4).passed());
    }

    #[test]
    fn zero_cycle_is_nonpositive_only() {
        let mut b = GraphBuilder::new(2);
        b.edge(0, 1, 0.0).unwrap();
        let g = b.build();
        let f = classic_distance(&g);
        assert!(check_no_negative_circles(&g, 0, &f, 4, CircleSign::Negative).passed());
        assert!(!check_no_negative_circles(&g, 0, &f, 4, CircleSign::NonPositive).passed());
    }

    #[test]
    fn report_line() {
        let g = diamond();
        let r = check_property(&g, PathSystem::simple(0), &classic_distance(&g), Property::Sop, 3);
        assert_eq!(r.to_string(), "property=SOP verdict=no-violation-found scope=max_roads:3 witness=-");
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(parse_property(p.name()).unwrap(), p);
        }
        assert!(parse_property("bogus").is_err());
    }
}
