//! Seeded random graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, GraphBuilder};

/// Weights are drawn on a dyadic grid so that sums along paths are exact in
/// binary floating point.
const GRID: f64 = 1024.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// `m` random arcs.
    Directed,
    /// `m` random undirected edges, i.e. `2m` roads.
    Undirected,
    /// `m` random arcs with `w(u,v) = c(u,v) + π(u) - π(v)`, `c ≥ 0`.
    /// Every directed circle has nonnegative total weight.
    Conservative,
}

impl FromStr for GenMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "directed" => Ok(GenMode::Directed),
            "undirected" => Ok(GenMode::Undirected),
            "conservative" => Ok(GenMode::Conservative),
            other => Err(format!("unknown generator mode `{other}`")),
        }
    }
}

impl fmt::Display for GenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenMode::Directed => "directed",
            GenMode::Undirected => "undirected",
            GenMode::Conservative => "conservative",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    pub weight_low: f64,
    pub weight_high: f64,
    pub mode: GenMode,
    pub seed: u64,
}

fn quantize(x: f64, low: f64, high: f64) -> f64 {
    ((x * GRID).round() / GRID).clamp(low, high)
}

fn draw(rng: &mut ChaCha8Rng, low: f64, high: f64) -> f64 {
    if low == high {
        low
    } else {
        quantize(rng.gen_range(low..=high), low, high)
    }
}

pub fn generate_random(p: &GenParams) -> Result<Graph, GraphError> {
    let invalid = |msg: &str| Err(GraphError::InvalidParameters(msg.to_string()));
    if p.n < 2 {
        return invalid("n must be at least 2");
    }
    if !(p.weight_low.is_finite() && p.weight_high.is_finite()) {
        return invalid("weights must be finite");
    }
    if p.weight_low > p.weight_high {
        return invalid("weight_low exceeds weight_high");
    }
    if p.mode == GenMode::Conservative && p.weight_low < 0.0 {
        return invalid("conservative mode needs weight_low >= 0");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let potential: Vec<f64> = match p.mode {
        GenMode::Conservative => (0..p.n).map(|_| draw(&mut rng, 0.0, p.weight_high)).collect(),
        _ => Vec::new(),
    };

    let mut b = GraphBuilder::new(p.n);
    for _ in 0..p.m {
        let u = rng.gen_range(0..p.n);
        let mut v = rng.gen_range(0..p.n - 1);
        if v >= u {
            v += 1;
        }
        let c = draw(&mut rng, p.weight_low, p.weight_high);
        match p.mode {
            GenMode::Directed => {
                b.arc(u, v, c)?;
            }
            GenMode::Undirected => {
                b.edge(u, v, c)?;
            }
            GenMode::Conservative => {
                b.arc(u, v, c + potential[u] - potential[v])?;
            }
        }
    }
    Ok(b.build())
}
