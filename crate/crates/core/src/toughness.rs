//! Exact toughness by separator enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`toughness`]; the search visits `2^n` sets.
pub const MAX_TOUGHNESS_VERTICES: usize = 24;

/// Toughness of a connected graph: an exact non-negative rational, or
/// infinity for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Ratio<u64>),
    Infinite,
}

impl Toughness {
    pub fn ratio(num: u64, den: u64) -> Self {
        Toughness::Finite(Ratio::new(num, den))
    }

    /// `self >= t` for an integer threshold `t`.
    pub fn is_at_least(&self, t: u64) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(r) => *r >= Ratio::from_integer(t),
        }
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Toughness together with a separating set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessReport {
    pub toughness: Toughness,
    /// `None` for complete graphs. Among minimisers the smallest set is
    /// kept, ties going to the lowest bitmask.
    pub separator: Option<Vec<usize>>,
    pub components: usize,
}

/// Exact toughness of a connected graph.
pub fn toughness(g: &Graph) -> Result<Toughness> {
    toughness_report(g).map(|r| r.toughness)
}

pub fn toughness_report(g: &Graph) -> Result<ToughnessReport> {
    let n = g.n();
    if n > MAX_TOUGHNESS_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_TOUGHNESS_VERTICES });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok(ToughnessReport { toughness: Toughness::Infinite, separator: None, components: 1 });
    }
    let mut best: Option<(Ratio<u64>, u32, u64, usize)> = None;
    for mask in 1u64..(1 << n) {
        let size = mask.count_ones();
        if size as usize + 2 > n {
            continue;
        }
        let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let c = g.components_after_removal(&removed)?.count;
        if c < 2 {
            continue;
        }
        let r = Ratio::new(size as u64, c as u64);
        let better = match &best {
            None => true,
            Some((br, bs, _, _)) => r < *br || (r == *br && size < *bs),
        };
        if better {
            best = Some((r, size, mask, c));
        }
    }
    let (r, _, mask, c) = best.ok_or_else(|| Error::invariant("non-complete connected graph without separator"))?;
    Ok(ToughnessReport {
        toughness: Toughness::Finite(r),
        separator: Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()),
        components: c,
    })
}
