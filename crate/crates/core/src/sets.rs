//! Point sets over a fixed, ordered point list and the interior/closure pairs used
//! to represent open sets of both space tiers.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard upper bound on the number of points of any space.
pub const MAX_POINTS: usize = 64;

/// A subset of `{0, .., n-1}` for some `n <= MAX_POINTS`.
///
/// Ordering is lexicographic on the ascending member lists, so `{0, 5} < {1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> PointSet {
        PointSet(1u64 << x)
    }

    pub fn from_bits(bits: u64) -> PointSet {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 & (1u64 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// Image under a point permutation `x -> perm[x]`.
    pub fn map(self, perm: &[usize]) -> PointSet {
        self.iter().map(|x| perm[x]).collect()
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A set known through its interior members and closure members.
///
/// For poset spaces the closure is the order closure of the interior. For metric
/// spaces the pair comes from strict versus non-strict ball inequalities and is
/// carried through set operations conservatively.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SampledSet {
    pub interior: PointSet,
    pub closure: PointSet,
    #[serde(skip)]
    universe: usize,
}

impl SampledSet {
    pub fn new(universe: usize, interior: PointSet, closure: PointSet) -> Result<SampledSet> {
        if universe > MAX_POINTS {
            return Err(Error::TooLarge(format!(
                "{universe} points exceeds the {MAX_POINTS}-point limit"
            )));
        }
        if !interior.is_subset(closure) || !closure.is_subset(PointSet::full(universe)) {
            return Err(Error::Invalid(format!(
                "interior {interior:?} must lie inside closure {closure:?} within {universe} points"
            )));
        }
        Ok(SampledSet {
            interior,
            closure,
            universe,
        })
    }

    /// A set whose interior and closure coincide.
    pub fn exact(universe: usize, members: PointSet) -> SampledSet {
        SampledSet::new(universe, members, members).expect("exact set within universe")
    }

    pub fn empty(universe: usize) -> SampledSet {
        SampledSet::exact(universe, PointSet::EMPTY)
    }

    pub fn whole(universe: usize) -> SampledSet {
        SampledSet::exact(universe, PointSet::full(universe))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn boundary(&self) -> PointSet {
        self.closure.difference(self.interior)
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    fn check(&self, other: &SampledSet) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::SpaceMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        Ok(())
    }

    /// Interior is exact; the closure is stored as the intersection of closures,
    /// which contains the true closure.
    pub fn intersect(&self, other: &SampledSet) -> Result<SampledSet> {
        self.check(other)?;
        Ok(SampledSet {
            interior: self.interior.intersection(other.interior),
            closure: self.closure.intersection(other.closure),
            universe: self.universe,
        })
    }

    /// Closure is exact; the interior is stored as the union of interiors.
    pub fn union(&self, other: &SampledSet) -> Result<SampledSet> {
        self.check(other)?;
        Ok(SampledSet {
            interior: self.interior.union(other.interior),
            closure: self.closure.union(other.closure),
            universe: self.universe,
        })
    }

    pub fn complement(&self) -> SampledSet {
        SampledSet {
            interior: self.closure.complement(self.universe),
            closure: self.interior.complement(self.universe),
            universe: self.universe,
        }
    }

    pub fn diff(&self, other: &SampledSet) -> Result<SampledSet> {
        self.check(other)?;
        self.intersect(&other.complement())
    }

    /// The closed set `cl S` viewed as a set in its own right.
    pub fn closed_part(&self) -> SampledSet {
        SampledSet::exact(self.universe, self.closure)
    }

    /// Image under a point permutation.
    pub fn map(&self, perm: &[usize]) -> SampledSet {
        SampledSet {
            interior: self.interior.map(perm),
            closure: self.closure.map(perm),
            universe: self.universe,
        }
    }
}

impl fmt::Debug for SampledSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "int{:?}/cl{:?}", self.interior, self.closure)
    }
}

/// Common surface of the two space tiers.
pub trait Space {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn point_ids(&self) -> &[String];

    fn index_of(&self, id: &str) -> Result<usize> {
        self.point_ids()
            .iter()
            .position(|p| p == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Recomputes whatever part of a set the space determines exactly
    /// (poset closures); identity for sampled metric sets.
    fn normalize(&self, set: SampledSet) -> SampledSet;

    /// Names of the members of a point set, in point order.
    fn names(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|x| self.point_ids()[x].clone()).collect()
    }
}
