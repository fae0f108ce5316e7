//! Built-in path functions: classic distance, anti-risk, blocked cost and
//! expected cost.
//!
//! The three detour-based functions assume nonnegative weights and consult a
//! shared [`DetourTable`]. Each `extend` is one cache lookup after warm-up;
//! a cold lookup runs one `O(n²)` Dijkstra.

use std::sync::Arc;

use crate::detour::DetourTable;
use crate::error::FunctionError;
use crate::function::{PathFunction, Property, PropertySet};
use crate::graph::{Graph, Road};
use crate::path::Path;
use crate::value::ExtReal;

/// `d(P)`, the sum of road weights.
#[derive(Clone, Debug)]
pub struct ClassicDistance {
    declared: PropertySet,
}

pub fn classic_distance(g: &Graph) -> ClassicDistance {
    let declared = if g.has_negative_weight() {
        // conservative weights are assumed, not checked
        PropertySet::of(&[Property::Op, Property::NoNegativeCircles])
    } else {
        PropertySet::of(&[
            Property::Ndsp,
            Property::Sop,
            Property::Op,
            Property::Wisp,
            Property::NoNegativeCircles,
        ])
    };
    ClassicDistance { declared }
}

impl PathFunction for ClassicDistance {
    fn name(&self) -> &str {
        "classic"
    }

    fn base(&self) -> ExtReal {
        ExtReal::ZERO
    }

    fn extend(&self, value: ExtReal, _parent: &Path, road: &Road) -> ExtReal {
        value + road.weight
    }

    fn declared(&self) -> PropertySet {
        self.declared
    }
}

fn detour(table: &DetourTable, road: &Road, origin: usize, target: usize) -> ExtReal {
    table
        .distance(road.key, origin, target)
        .expect("road and vertices belong to the table's graph")
}

fn check_probability(p: f64) -> Result<(), FunctionError> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(FunctionError::Probability(p))
    }
}

/// Risk `r(P)`: the worst travel cost along `P` when at most one road may
/// turn out blocked. Extended by
/// `r(P + (u,v)) = max(d_{G\(u,v)}(s, v), w(u,v) + r(P))`, with `r((s,s)) = 0`.
#[derive(Clone, Debug)]
pub struct AntiRisk {
    table: Arc<DetourTable>,
}

pub fn anti_risk(table: Arc<DetourTable>) -> AntiRisk {
    AntiRisk { table }
}

impl PathFunction for AntiRisk {
    fn name(&self) -> &str {
        "antirisk"
    }

    fn base(&self) -> ExtReal {
        ExtReal::ZERO
    }

    fn extend(&self, value: ExtReal, parent: &Path, road: &Road) -> ExtReal {
        let blocked = detour(&self.table, road, parent.source(), road.to);
        blocked.max(value + road.weight)
    }

    fn declared(&self) -> PropertySet {
        PropertySet::of(&[Property::Ndsp, Property::Sop, Property::Wisp])
    }

    fn cost_note(&self) -> &str {
        "one detour lookup; O(n²) on a cache miss"
    }
}

/// `c(P + (u,v)) = p·d_{G\(u,v)}(u, v) + w(u,v) + c(P)`, `c((s,s)) = 0`.
///
/// Normal cost plus a `p`-weighted surcharge for rerouting around a blocked
/// road.
#[derive(Clone, Debug)]
pub struct BlockedCost {
    table: Arc<DetourTable>,
    p: f64,
}

pub fn blocked_cost(table: Arc<DetourTable>, p: f64) -> Result<BlockedCost, FunctionError> {
    check_probability(p)?;
    Ok(BlockedCost { table, p })
}

impl PathFunction for BlockedCost {
    fn name(&self) -> &str {
        "blocked-cost"
    }

    fn base(&self) -> ExtReal {
        ExtReal::ZERO
    }

    fn extend(&self, value: ExtReal, _parent: &Path, road: &Road) -> ExtReal {
        let around = detour(&self.table, road, road.from, road.to);
        self.p * around + road.weight + value
    }

    fn declared(&self) -> PropertySet {
        PropertySet::of(&[Property::Ndsp, Property::Sop, Property::Wisp])
    }

    fn cost_note(&self) -> &str {
        "one detour lookup; O(n²) on a cache miss"
    }
}

/// `e(P + (u,v)) = p·d_{G\(u,v)}(u, v) + (1 - p)·(w(u,v) + e(P))`,
/// `e((s,s)) = 0`. Mean cost when each road is blocked with probability `p`.
#[derive(Clone, Debug)]
pub struct ExpectedCost {
    table: Arc<DetourTable>,
    p: f64,
}

pub fn expected_cost(table: Arc<DetourTable>, p: f64) -> Result<ExpectedCost, FunctionError> {
    check_probability(p)?;
    Ok(ExpectedCost { table, p })
}

impl PathFunction for ExpectedCost {
    fn name(&self) -> &str {
        "expected-cost"
    }

    fn base(&self) -> ExtReal {
        ExtReal::ZERO
    }

    fn extend(&self, value: ExtReal, _parent: &Path, road: &Road) -> ExtReal {
        let around = detour(&self.table, road, road.from, road.to);
        self.p * around + (1.0 - self.p) * (value + road.weight)
    }

    fn declared(&self) -> PropertySet {
        PropertySet::of(&[Property::Op])
    }

    fn cost_note(&self) -> &str {
        "one detour lookup; O(n²) on a cache miss"
    }
}

/// Built-in function selector, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Builtin {
    Classic,
    AntiRisk,
    BlockedCost(f64),
    ExpectedCost(f64),
}

impl Builtin {
    /// `name` is one of `classic`, `antirisk`, `blocked-cost`,
    /// `expected-cost`; the last two need `p`.
    pub fn from_name(name: &str, p: Option<f64>) -> Result<Builtin, String> {
        match (name, p) {
            ("classic", _) => Ok(Builtin::Classic),
            ("antirisk", _) => Ok(Builtin::AntiRisk),
            ("blocked-cost", Some(p)) => Ok(Builtin::BlockedCost(p)),
            ("expected-cost", Some(p)) => Ok(Builtin::ExpectedCost(p)),
            ("blocked-cost" | "expected-cost", None) => Err(format!("function `{name}` requires --p")),
            (other, _) => Err(format!("unknown function `{other}`")),
        }
    }

    pub fn build(self, graph: &Arc<Graph>) -> Result<Box<dyn PathFunction>, FunctionError> {
        if self == Builtin::Classic {
            return Ok(Box::new(classic_distance(graph)));
        }
        let table = Arc::new(DetourTable::new(Arc::clone(graph))?);
        Ok(match self {
            Builtin::Classic => unreachable!(),
            Builtin::AntiRisk => Box::new(anti_risk(table)),
            Builtin::BlockedCost(p) => Box::new(blocked_cost(table, p)?),
            Builtin::ExpectedCost(p) => Box::new(expected_cost(table, p)?),
        })
    }
}
