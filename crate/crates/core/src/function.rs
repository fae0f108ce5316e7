//! The path-function abstraction.
//!
//! A path function is given recursively: a value for `(s,s)` and a rule that
//! extends a path's value by one road. The value of any path is the fold of
//! that rule along its roads.

use std::fmt;
use std::str::FromStr;

use crate::error::PathError;
use crate::graph::{Graph, Road};
use crate::path::{Path, SystemKind};
use crate::value::ExtReal;

/// Structural properties a path function may declare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Non-decreasing when a minimum path is extended by one road.
    Ndsp,
    /// Strictly increasing when a minimum path is extended by one road.
    Insp,
    /// Extending two paths by the same road preserves `≤`.
    Sop,
    /// [`Property::Sop`] restricted to a minimum path on the smaller side.
    Sopsp,
    /// Preserves `<` and `=`.
    Op,
    Opsp,
    /// Preserves `<`.
    Wop,
    Wopsp,
    /// Every reachable vertex has a minimum path whose prefixes are all
    /// minimum paths.
    Wisp,
    NoNegativeCircles,
    NoNonPositiveCircles,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Ndsp,
        Property::Insp,
        Property::Sop,
        Property::Sopsp,
        Property::Op,
        Property::Opsp,
        Property::Wop,
        Property::Wopsp,
        Property::Wisp,
        Property::NoNegativeCircles,
        Property::NoNonPositiveCircles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Ndsp => "NDSP",
            Property::Insp => "INSP",
            Property::Sop => "SOP",
            Property::Sopsp => "SOPSP",
            Property::Op => "OP",
            Property::Opsp => "OPSP",
            Property::Wop => "WOP",
            Property::Wopsp => "WOPSP",
            Property::Wisp => "WISP",
            Property::NoNegativeCircles => "no-negative-circles",
            Property::NoNonPositiveCircles => "no-non-positive-circles",
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| s.to_string())
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PropertySet(u16);

impl PropertySet {
    pub const EMPTY: PropertySet = PropertySet(0);

    pub fn of(props: &[Property]) -> Self {
        props.iter().fold(Self::EMPTY, |s, &p| s.with(p))
    }

    pub fn with(self, p: Property) -> Self {
        PropertySet(self.0 | p.bit())
    }

    pub fn contains(self, p: Property) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn iter(self) -> impl Iterator<Item = Property> {
        Property::ALL.into_iter().filter(move |&p| self.contains(p))
    }

    /// Adds every property implied by the declared ones on a system of the
    /// given kind: unrestricted properties imply their shortest-path
    /// variants, OP implies WOP and SOP, INSP implies NDSP, no non-positive
    /// circles implies no negative circles, and on simple-path systems both
    /// circle conditions hold vacuously.
    pub fn closure(self, kind: SystemKind) -> Self {
        let mut s = self;
        if kind == SystemKind::SimplePaths {
            s = s.with(Property::NoNonPositiveCircles);
        }
        loop {
            let before = s;
            let rules: [(Property, Property); 8] = [
                (Property::Op, Property::Wop),
                (Property::Op, Property::Sop),
                (Property::Op, Property::Opsp),
                (Property::Opsp, Property::Wopsp),
                (Property::Wop, Property::Wopsp),
                (Property::Sop, Property::Sopsp),
                (Property::Insp, Property::Ndsp),
                (Property::NoNonPositiveCircles, Property::NoNegativeCircles),
            ];
            for (from, to) in rules {
                if s.contains(from) {
                    s = s.with(to);
                }
            }
            if s == before {
                return s;
            }
        }
    }

    /// Members of `required` not in `self`.
    pub fn missing(self, required: &[Property]) -> Vec<Property> {
        required.iter().copied().filter(|&p| !self.contains(p)).collect()
    }
}

impl fmt::Debug for PropertySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A path function on paths from one source.
///
/// `extend` receives the parent's value, the parent path itself and the road
/// being appended. It must be deterministic. Evaluating it is the unit of
/// cost the engines count.
pub trait PathFunction: Send + Sync {
    fn name(&self) -> &str;

    /// Value of `(s,s)`.
    fn base(&self) -> ExtReal;

    /// Value of `parent + road`, given `value = f(parent)`.
    fn extend(&self, value: ExtReal, parent: &Path, road: &Road) -> ExtReal;

    /// Properties the function claims. The engines trust these.
    fn declared(&self) -> PropertySet;

    /// Cost of one `extend` call, for documentation.
    fn cost_note(&self) -> &str {
        "O(1)"
    }
}

/// `f(P)`: folds `extend` over the roads of `p` starting from `base`.
pub fn path_value<F: PathFunction + ?Sized>(f: &F, g: &Graph, p: &Path) -> Result<ExtReal, PathError> {
    let mut prefix = Path::trivial(p.source());
    let mut value = f.base();
    for &key in p.roads() {
        let road = g.road(key).ok_or(PathError::UnknownRoad(key))?;
        if road.from != prefix.terminal() {
            return Err(PathError::BrokenChain {
                key,
                start: road.from,
                end: prefix.terminal(),
            });
        }
        value = f.extend(value, &prefix, road);
        prefix.push(road)?;
    }
    Ok(value)
}
