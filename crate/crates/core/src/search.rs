//! Branch-and-bound search for a least-multiplicity cover drawn from a finite
//! family of candidate sets.
//!
//! Candidates are ranked lexicographically by (maximum multiplicity, number of
//! elements, sorted element list). The search always branches on the least
//! uncovered point, so every irredundant cover is reachable.

use crate::error::{Error, Result};
use crate::sets::{PointSet, MAX_POINTS};

/// Default node budget before the search gives up with a cap error.
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Indices into the candidate list, sorted by candidate order.
    pub chosen: Vec<usize>,
    /// Maximum number of chosen candidates containing one point.
    pub multiplicity: usize,
}

impl SearchOutcome {
    pub fn dimension(&self) -> usize {
        self.multiplicity.saturating_sub(1)
    }
}

struct Search<'a> {
    target: PointSet,
    candidates: &'a [PointSet],
    by_point: Vec<Vec<usize>>,
    best: Option<(usize, Vec<usize>)>,
    nodes: u64,
    budget: u64,
}

/// Finds the best cover of `target` by members of `candidates`; `None` when the
/// candidates do not cover `target` at all.
pub fn least_multiplicity_cover(
    target: PointSet,
    candidates: &[PointSet],
    budget: u64,
) -> Result<Option<SearchOutcome>> {
    if target.is_empty() {
        return Ok(Some(SearchOutcome {
            chosen: Vec::new(),
            multiplicity: 0,
        }));
    }
    let mut by_point = vec![Vec::new(); MAX_POINTS];
    for p in target.iter() {
        let mut list: Vec<usize> = (0..candidates.len())
            .filter(|&c| candidates[c].contains(p))
            .collect();
        list.sort_by(|&a, &b| {
            candidates[b]
                .len()
                .cmp(&candidates[a].len())
                .then_with(|| candidates[a].cmp(&candidates[b]))
        });
        if list.is_empty() {
            return Ok(None);
        }
        by_point[p] = list;
    }
    let mut search = Search {
        target,
        candidates,
        by_point,
        best: None,
        nodes: 0,
        budget,
    };
    let mut mult = [0u8; MAX_POINTS];
    let mut chosen = Vec::new();
    search.descend(PointSet::EMPTY, &mut mult, 0, &mut chosen)?;
    Ok(search.best.map(|(multiplicity, mut chosen)| {
        chosen.sort_by(|&a, &b| candidates[a].cmp(&candidates[b]).then(a.cmp(&b)));
        SearchOutcome {
            chosen,
            multiplicity,
        }
    }))
}

impl Search<'_> {
    fn worse_than_best(&self, multiplicity: usize, count: usize) -> bool {
        match &self.best {
            None => false,
            Some((m, c)) => (multiplicity, count) > (*m, c.len()),
        }
    }

    fn sorted_sets(&self, chosen: &[usize]) -> Vec<PointSet> {
        let mut sets: Vec<PointSet> = chosen.iter().map(|&c| self.candidates[c]).collect();
        sets.sort();
        sets
    }

    fn descend(
        &mut self,
        covered: PointSet,
        mult: &mut [u8; MAX_POINTS],
        current_max: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::TooLarge(format!(
                "cover search exceeded its budget of {} nodes",
                self.budget
            )));
        }
        let uncovered = self.target.difference(covered);
        let Some(p) = uncovered.first() else {
            let better = match &self.best {
                None => true,
                Some((m, c)) => {
                    (current_max, chosen.len()) < (*m, c.len())
                        || ((current_max, chosen.len()) == (*m, c.len())
                            && self.sorted_sets(chosen) < self.sorted_sets(c))
                }
            };
            if better {
                self.best = Some((current_max, chosen.clone()));
            }
            return Ok(());
        };
        let options = self.by_point[p].clone();
        for c in options {
            let set = self.candidates[c];
            let new_max = set
                .iter()
                .map(|x| mult[x] as usize + 1)
                .max()
                .unwrap_or(0)
                .max(current_max);
            let complete = self.target.is_subset(covered.union(set));
            let lower_count = chosen.len() + if complete { 1 } else { 2 };
            if self.worse_than_best(new_max, lower_count) {
                continue;
            }
            for x in set.iter() {
                mult[x] += 1;
            }
            chosen.push(c);
            self.descend(covered.union(set), mult, new_max, chosen)?;
            chosen.pop();
            for x in set.iter() {
                mult[x] -= 1;
            }
        }
        Ok(())
    }
}
