//! Covers as indexed families of sets with multiplicity, refinement and
//! equivariance predicates.
//!
//! Elements are compared extensionally (as sets), never by label. Families that
//! fail to cover are allowed and flagged by [`Cover::is_cover`].

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Action;
use crate::metric::FiniteMetricSpace;
use crate::rational::{format_rational, Rational};
use crate::sets::{PointSet, SampledSet, Space};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    universe: usize,
    elements: Vec<SampledSet>,
    labels: Vec<String>,
}

impl Cover {
    pub fn new(universe: usize, elements: Vec<SampledSet>, labels: Vec<String>) -> Result<Cover> {
        if elements.len() != labels.len() {
            return Err(Error::Invalid(format!(
                "{} elements but {} labels",
                elements.len(),
                labels.len()
            )));
        }
        if let Some(e) = elements.iter().find(|e| e.universe() != universe) {
            return Err(Error::SpaceMismatch {
                left: universe,
                right: e.universe(),
            });
        }
        Ok(Cover {
            universe,
            elements,
            labels,
        })
    }

    /// Labels `U0, U1, ..` in element order.
    pub fn unlabeled(universe: usize, elements: Vec<SampledSet>) -> Result<Cover> {
        let labels = (0..elements.len()).map(|i| format!("U{i}")).collect();
        Cover::new(universe, elements, labels)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn elements(&self) -> &[SampledSet] {
        &self.elements
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &SampledSet {
        &self.elements[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn union_of_interiors(&self) -> PointSet {
        self.elements
            .iter()
            .fold(PointSet::EMPTY, |acc, e| acc.union(e.interior))
    }

    /// Whether the interiors cover every point; otherwise this is only a collection.
    pub fn is_cover(&self) -> bool {
        self.union_of_interiors() == PointSet::full(self.universe)
    }

    pub fn multiplicity_at(&self, z: usize) -> usize {
        self.elements.iter().filter(|e| e.interior.contains(z)).count()
    }

    pub fn multiplicity(&self) -> usize {
        (0..self.universe)
            .map(|z| self.multiplicity_at(z))
            .max()
            .unwrap_or(0)
    }

    /// Maximum multiplicity minus one (0 for an empty family).
    pub fn dimension(&self) -> usize {
        self.multiplicity().saturating_sub(1)
    }

    /// Indices of elements whose interior contains `z`.
    pub fn containing(&self, z: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].interior.contains(z))
            .collect()
    }

    pub fn contains_set(&self, s: &SampledSet) -> bool {
        self.elements.contains(s)
    }

    /// Drops extensional duplicates, keeping the first label of each set.
    pub fn dedup(&self) -> Cover {
        let mut seen = BTreeSet::new();
        let mut elements = Vec::new();
        let mut labels = Vec::new();
        for (e, l) in self.elements.iter().zip(&self.labels) {
            if seen.insert(*e) {
                elements.push(*e);
                labels.push(l.clone());
            }
        }
        Cover {
            universe: self.universe,
            elements,
            labels,
        }
    }

    pub fn without_empty(&self) -> Cover {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| !self.elements[i].is_empty()).collect();
        Cover {
            universe: self.universe,
            elements: keep.iter().map(|&i| self.elements[i]).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// The family as a set of sets.
    pub fn as_set(&self) -> BTreeSet<SampledSet> {
        self.elements.iter().copied().collect()
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Result<Cover> {
        Cover::new(self.universe, self.elements.clone(), labels)
    }

    /// Same elements in a different order (labels travel with their sets).
    pub fn permuted(&self, order: &[usize]) -> Cover {
        Cover {
            universe: self.universe,
            elements: order.iter().map(|&i| self.elements[i]).collect(),
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

/// Containment witness for a refinement check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementWitness {
    pub refines: bool,
    /// For each fine element, the least coarse index containing it.
    pub map: Vec<Option<usize>>,
}

/// Interior-wise refinement: every fine element lies in some coarse element.
pub fn is_refinement(fine: &Cover, coarse: &Cover) -> Result<RefinementWitness> {
    if fine.universe != coarse.universe {
        return Err(Error::SpaceMismatch {
            left: fine.universe,
            right: coarse.universe,
        });
    }
    let map: Vec<Option<usize>> = fine
        .elements
        .iter()
        .map(|f| {
            coarse
                .elements
                .iter()
                .position(|c| f.interior.is_subset(c.interior))
        })
        .collect();
    Ok(RefinementWitness {
        refines: map.iter().all(Option::is_some),
        map,
    })
}

/// One failure of the equivariance or disjoint-or-equal law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GCoverViolation {
    pub element: usize,
    pub set: String,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `g.U` is not a member of the cover.
    NotEquivariant,
    /// `g.U` meets `U` without being equal to it.
    OverlappingTranslate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GCoverReport {
    pub is_equivariant: bool,
    pub is_gcover: bool,
    pub witnesses: Vec<GCoverViolation>,
}

pub fn gcover_check<S: Space>(cover: &Cover, action: &Action<S>) -> GCoverReport {
    let members = cover.as_set();
    let mut witnesses = Vec::new();
    for g in 0..action.group().order() {
        for (i, u) in cover.elements.iter().enumerate() {
            let gu = action.act_on_set(g, u);
            if !members.contains(&gu) {
                witnesses.push(GCoverViolation {
                    element: g,
                    set: cover.labels[i].clone(),
                    kind: ViolationKind::NotEquivariant,
                });
            }
            if gu != *u && gu.interior.intersects(u.interior) {
                witnesses.push(GCoverViolation {
                    element: g,
                    set: cover.labels[i].clone(),
                    kind: ViolationKind::OverlappingTranslate,
                });
            }
        }
    }
    let is_equivariant = !witnesses
        .iter()
        .any(|w| w.kind == ViolationKind::NotEquivariant);
    GCoverReport {
        is_equivariant,
        is_gcover: is_equivariant && witnesses.is_empty(),
        witnesses,
    }
}

/// `|{U in reference : W not inside U, U meets W}|`, all interior-wise.
pub fn crossing_count(w: &SampledSet, reference: &Cover) -> usize {
    reference
        .elements
        .iter()
        .filter(|u| !w.interior.is_subset(u.interior) && u.interior.intersects(w.interior))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallnessReport {
    pub delta: String,
    pub k: usize,
    pub max_diameter: String,
    pub diameter_violators: Vec<String>,
    pub max_crossings: usize,
    pub crossing_violators: Vec<String>,
    pub passed: bool,
}

/// Checks `diam(W) < delta` and the crossing bound `<= k` element-wise.
pub fn smallness_check(
    cover: &Cover,
    space: &FiniteMetricSpace,
    delta: Rational,
    reference: &Cover,
    k: usize,
) -> Result<SmallnessReport> {
    if !delta.is_positive() {
        return Err(Error::Invalid("delta must be positive".into()));
    }
    let mut max_diameter = Rational::zero();
    let mut diameter_violators = Vec::new();
    let mut max_crossings = 0;
    let mut crossing_violators = Vec::new();
    for (w, label) in cover.elements.iter().zip(&cover.labels) {
        let d = space.diameter(w);
        max_diameter = max_diameter.max(d);
        if d >= delta {
            diameter_violators.push(label.clone());
        }
        let c = crossing_count(w, reference);
        max_crossings = max_crossings.max(c);
        if c > k {
            crossing_violators.push(label.clone());
        }
    }
    Ok(SmallnessReport {
        delta: format_rational(&delta),
        k,
        max_diameter: format_rational(&max_diameter),
        passed: diameter_violators.is_empty() && crossing_violators.is_empty(),
        diameter_violators,
        max_crossings,
        crossing_violators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{PermGroup, GROUP_ELEMENT_CAP};
    use crate::poset::FinitePoset;
    use crate::rational::{int, ratio};

    fn z6() -> FiniteMetricSpace {
        FiniteMetricSpace::cycle(6, int(1)).unwrap()
    }

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    /// Per-point counts, written out independently of `Cover::dimension`.
    fn max_count(sets: &[PointSet], n: usize) -> usize {
        (0..n)
            .map(|z| sets.iter().filter(|s| s.contains(z)).count())
            .max()
            .unwrap()
    }

    #[test]
    fn dimension_examples() {
        let s = z6();
        let two = Cover::unlabeled(6, vec![s.ball(0, ratio(3, 2)).unwrap(), s.ball(3, ratio(3, 2)).unwrap()])
            .unwrap();
        assert_eq!(max_count(&[set(&[5, 0, 1]), set(&[2, 3, 4])], 6) - 1, 0);
        assert_eq!(two.dimension(), 0);
        assert!(two.is_cover());
        assert_eq!(Cover::unlabeled(6, vec![SampledSet::whole(6)]).unwrap().dimension(), 0);
        let triple = Cover::unlabeled(
            6,
            vec![
                SampledSet::exact(6, set(&[0, 1, 2])),
                SampledSet::exact(6, set(&[2, 3, 4])),
                SampledSet::exact(6, set(&[4, 5, 0])),
            ],
        )
        .unwrap();
        assert_eq!(max_count(&[set(&[0, 1, 2]), set(&[2, 3, 4]), set(&[4, 5, 0])], 6) - 1, 1);
        assert_eq!(triple.dimension(), 1);
    }

    fn circle_open_cover(p: &FinitePoset, sets: &[&[&str]]) -> Cover {
        let elements = sets
            .iter()
            .map(|names| {
                let s: PointSet = names.iter().map(|n| p.index_of(n).unwrap()).collect();
                p.open_region(s).unwrap()
            })
            .collect();
        Cover::unlabeled(p.len(), elements).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let p = FinitePoset::circle();
        let basis = Cover::unlabeled(4, (0..4).map(|x| p.open_region(p.up_set(x)).unwrap()).collect()).unwrap();
        let whole = Cover::unlabeled(4, vec![p.open_region(p.all()).unwrap()]).unwrap();
        assert!(is_refinement(&basis, &whole).unwrap().refines);
        let pair = circle_open_cover(&p, &[&["x1", "e1", "e2"], &["x2", "e1", "e2"]]);
        let w = is_refinement(&pair, &pair).unwrap();
        assert!(w.refines);
        assert_eq!(w.map, vec![Some(0), Some(1)]);

        let s = z6();
        let units = Cover::unlabeled(6, (0..6).map(|i| s.ball(i, int(1)).unwrap()).collect()).unwrap();
        let halves = Cover::unlabeled(6, vec![s.ball(0, ratio(3, 2)).unwrap(), s.ball(3, ratio(3, 2)).unwrap()])
            .unwrap();
        let w = is_refinement(&units, &halves).unwrap();
        assert!(w.refines);
        assert_eq!(w.map[1], Some(0));
        assert_eq!(w.map[2], Some(1));
    }

    #[test]
    fn gcover_examples() {
        let p = FinitePoset::circle();
        let swap = PermGroup::generated(4, vec![vec![1, 0, 3, 2]], GROUP_ELEMENT_CAP).unwrap();
        let action = Action::new(swap, p.clone()).unwrap();
        let pair = circle_open_cover(&p, &[&["x1", "e1", "e2"], &["x2", "e1", "e2"]]);
        let r = gcover_check(&pair, &action);
        assert!(r.is_equivariant);
        assert!(!r.is_gcover);
        assert!(r
            .witnesses
            .iter()
            .all(|w| w.kind == ViolationKind::OverlappingTranslate));

        let whole = Cover::unlabeled(4, vec![p.open_region(p.all()).unwrap()]).unwrap();
        assert!(gcover_check(&whole, &action).is_gcover);

        let double = p.disjoint_union(&p).unwrap();
        let g = PermGroup::generated(8, vec![vec![4, 5, 6, 7, 0, 1, 2, 3]], GROUP_ELEMENT_CAP).unwrap();
        let action = Action::new(g, double.clone()).unwrap();
        let comps = Cover::unlabeled(
            8,
            double
                .components()
                .into_iter()
                .map(|c| double.open_region(c).unwrap())
                .collect(),
        )
        .unwrap();
        assert!(gcover_check(&comps, &action).is_gcover);
        // Label independence.
        let relabeled = comps.relabeled(vec!["B".into(), "A".into()]).unwrap().permuted(&[1, 0]);
        let r = gcover_check(&relabeled, &action);
        assert!(r.is_gcover && r.is_equivariant);
    }

    #[test]
    fn non_equivariant_cover_is_flagged() {
        let p = FinitePoset::circle();
        let swap = PermGroup::generated(4, vec![vec![1, 0, 3, 2]], GROUP_ELEMENT_CAP).unwrap();
        let action = Action::new(swap, p.clone()).unwrap();
        let lopsided = circle_open_cover(&p, &[&["x1", "e1", "e2"], &["x2", "e1", "e2"], &["e1"]]);
        let r = gcover_check(&lopsided, &action);
        assert!(!r.is_equivariant && !r.is_gcover);
    }

    #[test]
    fn smallness_examples() {
        let s = z6();
        let units = Cover::unlabeled(6, (0..6).map(|i| s.ball(i, int(1)).unwrap()).collect()).unwrap();
        let whole = Cover::unlabeled(6, vec![SampledSet::whole(6)]).unwrap();
        let r = smallness_check(&units, &s, ratio(5, 2), &whole, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.max_diameter, "2");
        let r = smallness_check(&units, &s, int(2), &whole, 0).unwrap();
        assert!(!r.passed);
        assert_eq!(r.diameter_violators.len(), 6);
        // k = |U| makes the crossing bound vacuous.
        let r = smallness_check(&units, &s, ratio(5, 2), &units, units.len()).unwrap();
        assert!(r.crossing_violators.is_empty());
        assert!(smallness_check(&units, &s, int(0), &whole, 0).is_err());
    }
}
