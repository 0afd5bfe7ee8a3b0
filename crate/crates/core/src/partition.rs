//! Integer partitions and bounded index-tuple enumeration.
//!
//! Partitions double as multivolumes of stacked objects and as elements of
//! the projection poset, so they live here rather than in either consumer.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || !is_weakly_decreasing(&parts) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// The all-ones partition `(1, …, 1)` of height `h`; the bottom of the
    /// projection order at that height.
    pub fn ones(h: usize) -> Result<Self> {
        if h == 0 {
            return Err(Error::ZeroHeight);
        }
        Ok(Partition(vec![1; h]))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Colexicographic comparison: the last parts are compared first.
    pub fn colex_cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }

    /// Parses `"4,2,1"` (spaces tolerated).
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl AsRef<[u32]> for Partition {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

pub fn is_weakly_decreasing(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Partitions of `weight` with exactly `height` parts, in colex order.
pub fn partitions_with_height(weight: u32, height: usize) -> Vec<Partition> {
    if height == 0 || (height as u32) > weight {
        return Vec::new();
    }
    let mut out: Vec<Partition> = tuples_with_sum(height, weight, weight, true)
        .into_iter()
        .map(Partition)
        .collect();
    out.sort_by(Partition::colex_cmp);
    out
}

/// All partitions of `weight`, ordered by height then colex.
pub fn partitions_of(weight: u32) -> Vec<Partition> {
    (1..=weight as usize)
        .flat_map(|h| partitions_with_height(weight, h))
        .collect()
}

/// Every tuple of `height` positive integers with sum at most `bound`, in
/// lexicographic order. With `decreasing` set only weakly decreasing tuples
/// are produced.
pub fn tuples_within(height: usize, bound: u32, decreasing: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if height == 0 || (height as u32) > bound {
        return out;
    }
    let mut current = Vec::with_capacity(height);
    extend_tuples(height, bound, u32::MAX, decreasing, None, &mut current, &mut out);
    out
}

/// Tuples of `height` positive integers with sum exactly `sum` and every
/// entry at most `cap`.
fn tuples_with_sum(height: usize, sum: u32, cap: u32, decreasing: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(height);
    extend_tuples(height, sum, cap, decreasing, Some(sum), &mut current, &mut out);
    out
}

fn extend_tuples(
    remaining_slots: usize,
    remaining_budget: u32,
    cap: u32,
    decreasing: bool,
    exact: Option<u32>,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining_slots == 0 {
        let total: u32 = current.iter().sum();
        if exact.is_none_or(|s| s == total) {
            out.push(current.clone());
        }
        return;
    }
    // every later slot still needs at least 1
    let reserve = remaining_slots as u32 - 1;
    if remaining_budget < reserve + 1 {
        return;
    }
    let mut hi = remaining_budget - reserve;
    if decreasing {
        hi = hi.min(cap);
    }
    let lo = match exact {
        // remaining slots cannot exceed the current entry when decreasing,
        // so the entry must be large enough to absorb the remainder
        Some(_) if decreasing => remaining_budget.div_ceil(remaining_slots as u32),
        Some(_) if remaining_slots == 1 => remaining_budget,
        _ => 1,
    };
    for x in lo.max(1)..=hi {
        current.push(x);
        extend_tuples(
            remaining_slots - 1,
            remaining_budget - x,
            x,
            decreasing,
            exact,
            current,
            out,
        );
        current.pop();
    }
}
