use std::collections::BTreeSet;
use std::ops::Bound::{Excluded, Unbounded};

use crate::error::{Error, Result};

/// A dynamic set of 1-based positions with logarithmic order queries.
///
/// Queries return `None` when no member qualifies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderedIndexSet {
    members: BTreeSet<usize>,
}

impl OrderedIndexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, pos: usize) -> Result<()> {
        if self.members.insert(pos) {
            Ok(())
        } else {
            Err(Error::Duplicate(pos))
        }
    }

    pub fn remove(&mut self, pos: usize) -> Result<()> {
        if self.members.remove(&pos) {
            Ok(())
        } else {
            Err(Error::Missing(pos))
        }
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.members.contains(&pos)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    /// Largest member strictly below `i`.
    pub fn pred_below(&self, i: usize) -> Option<usize> {
        self.members.range(..i).next_back().copied()
    }

    /// Smallest member at or above `i`.
    pub fn succ_at_least(&self, i: usize) -> Option<usize> {
        self.members.range(i..).next().copied()
    }

    /// Smallest member strictly above `i`.
    pub fn succ_above(&self, i: usize) -> Option<usize> {
        self.members.range((Excluded(i), Unbounded)).next().copied()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<usize> for OrderedIndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        OrderedIndexSet {
            members: iter.into_iter().collect(),
        }
    }
}
