//! Finite T0 Alexandrov spaces presented as partial orders.
//!
//! Opens are the up-sets of `<=`, so the minimal open neighbourhood of `x` is the
//! principal up-set `{y : x <= y}` and closures are down-sets.

use crate::error::{Error, Result};
use crate::search::{least_multiplicity_cover, DEFAULT_NODE_BUDGET};
use crate::sets::{PointSet, SampledSet, Space, MAX_POINTS};

/// Default point cap for [`FinitePoset::covering_dimension`].
pub const DIMENSION_SIZE_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    ids: Vec<String>,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl FinitePoset {
    /// Builds the order generated by `pairs` (reflexive-transitive closure); cycles are rejected.
    pub fn from_relation<S: AsRef<str>>(points: &[S], pairs: &[(S, S)]) -> Result<FinitePoset> {
        let ids = check_ids(points)?;
        let n = ids.len();
        let index = |id: &str| {
            ids.iter()
                .position(|p| p == id)
                .ok_or_else(|| Error::UnknownPoint(id.to_string()))
        };
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (a, b) in pairs {
            let (a, b) = (index(a.as_ref())?, index(b.as_ref())?);
            up[a].insert(b);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Invalid(format!(
                        "order has a cycle through `{}` and `{}`",
                        ids[i], ids[j]
                    )));
                }
            }
        }
        Ok(FinitePoset::from_up_sets(ids, up))
    }

    /// Builds from a full `leq` matrix, checking the partial-order axioms.
    pub fn from_matrix<S: AsRef<str>>(points: &[S], leq: &[Vec<bool>]) -> Result<FinitePoset> {
        let ids = check_ids(points)?;
        let n = ids.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid(format!("leq must be a {n}x{n} matrix")));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::Invalid(format!("`{}` is not <= itself", ids[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Invalid(format!(
                        "antisymmetry fails for `{}` and `{}`",
                        ids[i], ids[j]
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::Invalid(format!(
                            "transitivity fails at `{}` <= `{}` <= `{}`",
                            ids[i], ids[j], ids[k]
                        )));
                    }
                }
            }
        }
        let up = (0..n)
            .map(|i| (0..n).filter(|&j| leq[i][j]).collect())
            .collect();
        Ok(FinitePoset::from_up_sets(ids, up))
    }

    fn from_up_sets(ids: Vec<String>, up: Vec<PointSet>) -> FinitePoset {
        let n = ids.len();
        let down = (0..n)
            .map(|j| (0..n).filter(|&i| up[i].contains(j)).collect())
            .collect();
        FinitePoset { ids, up, down }
    }

    /// `k` pairwise incomparable points `p0 .. p{k-1}`.
    pub fn antichain(k: usize) -> FinitePoset {
        let ids: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
        FinitePoset::from_relation::<String>(&ids, &[]).expect("antichain")
    }

    /// `c0 < c1 < .. < c{k-1}`.
    pub fn chain(k: usize) -> FinitePoset {
        let ids: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(String, String)> = (1..k).map(|i| (ids[i - 1].clone(), ids[i].clone())).collect();
        FinitePoset::from_relation(&ids, &pairs).expect("chain")
    }

    /// Four-point model of the circle: `x1, x2 < e1, e2`.
    pub fn circle() -> FinitePoset {
        FinitePoset::from_relation(
            &["x1", "x2", "e1", "e2"],
            &[("x1", "e1"), ("x1", "e2"), ("x2", "e1"), ("x2", "e2")],
        )
        .expect("circle model")
    }

    /// Disjoint union; point ids are prefixed with `a.` and `b.`.
    pub fn disjoint_union(&self, other: &FinitePoset) -> Result<FinitePoset> {
        let n = self.len() + other.len();
        if n > MAX_POINTS {
            return Err(Error::TooLarge(format!("{n} points")));
        }
        let mut ids: Vec<String> = self.ids.iter().map(|p| format!("a.{p}")).collect();
        ids.extend(other.ids.iter().map(|p| format!("b.{p}")));
        let shift = self.len();
        let mut up = self.up.clone();
        up.extend(
            other
                .up
                .iter()
                .map(|s| s.iter().map(|x| x + shift).collect::<PointSet>()),
        );
        Ok(FinitePoset::from_up_sets(ids, up))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// Smallest open set containing the named point.
    pub fn minimal_open(&self, id: &str) -> Result<PointSet> {
        Ok(self.up[self.index_of(id)?])
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    /// Largest up-closed subset of `s`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        s.iter().filter(|&x| self.up[x].is_subset(s)).collect()
    }

    pub fn boundary(&self, s: PointSet) -> PointSet {
        self.closure(s).difference(self.interior(s))
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    /// An open set as a region: interior is the set, closure its down-closure.
    pub fn open_region(&self, s: PointSet) -> Result<SampledSet> {
        if !self.is_open(s) {
            return Err(Error::Invalid(format!(
                "{:?} is not an up-set",
                self.names(s)
            )));
        }
        SampledSet::new(self.len(), s, self.closure(s))
    }

    pub fn minimal_points(&self) -> PointSet {
        (0..self.len())
            .filter(|&x| self.down[x] == PointSet::singleton(x))
            .collect()
    }

    /// Connected components of the comparability graph, ordered by least member.
    pub fn components(&self) -> Vec<PointSet> {
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |acc, x| acc.union(self.up[x]).union(self.down[x]));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Every up-set contained in `within` (which must itself be open), in a fixed order.
    pub fn open_subsets(&self, within: PointSet) -> Vec<PointSet> {
        // Decide points from the top down: when x is decided every y > x already is.
        let mut order: Vec<usize> = within.iter().collect();
        order.sort_by_key(|&x| (self.up[x].len(), x));
        let mut out = Vec::new();
        self.collect_up_sets(&order, 0, PointSet::EMPTY, &mut out);
        out.sort();
        out
    }

    fn collect_up_sets(&self, order: &[usize], i: usize, current: PointSet, out: &mut Vec<PointSet>) {
        if i == order.len() {
            out.push(current);
            return;
        }
        let x = order[i];
        self.collect_up_sets(order, i + 1, current, out);
        let mut above = self.up[x];
        above.remove(x);
        if above.is_subset(current) {
            let mut with = current;
            with.insert(x);
            self.collect_up_sets(order, i + 1, with, out);
        }
    }

    /// All open sets of the space.
    pub fn open_sets(&self) -> Vec<PointSet> {
        self.open_subsets(self.all())
    }

    /// Covering dimension by exhaustive search.
    ///
    /// Every open cover is refined by the cover by minimal opens, so the dimension is
    /// the least multiplicity (minus one) of an open cover each of whose members lies
    /// in some minimal open. Those members are enumerated and searched exhaustively.
    pub fn covering_dimension(&self, size_cap: usize) -> Result<usize> {
        if self.len() > size_cap {
            return Err(Error::TooLarge(format!(
                "covering dimension search is capped at {size_cap} points, space has {}",
                self.len()
            )));
        }
        if self.is_empty() {
            return Ok(0);
        }
        let mut candidates: Vec<PointSet> = (0..self.len())
            .flat_map(|x| self.open_subsets(self.up[x]))
            .filter(|s| !s.is_empty())
            .collect();
        candidates.sort();
        candidates.dedup();
        let outcome = least_multiplicity_cover(self.all(), &candidates, DEFAULT_NODE_BUDGET)?
            .expect("minimal opens always cover");
        Ok(outcome.dimension())
    }
}

fn check_ids<S: AsRef<str>>(points: &[S]) -> Result<Vec<String>> {
    if points.len() > MAX_POINTS {
        return Err(Error::TooLarge(format!(
            "{} points exceeds the {MAX_POINTS}-point limit",
            points.len()
        )));
    }
    let ids: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
    for (i, id) in ids.iter().enumerate() {
        if ids[..i].contains(id) {
            return Err(Error::Invalid(format!("duplicate point id `{id}`")));
        }
    }
    Ok(ids)
}

impl Space for FinitePoset {
    fn len(&self) -> usize {
        self.ids.len()
    }

    fn point_ids(&self) -> &[String] {
        &self.ids
    }

    fn normalize(&self, set: SampledSet) -> SampledSet {
        SampledSet::new(self.len(), set.interior, self.closure(set.interior))
            .expect("closure contains interior")
    }
}
