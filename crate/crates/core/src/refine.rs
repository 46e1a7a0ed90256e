//! Equivariant refinement through the orbit space.
//!
//! An F-cover `U` is projected to `F \ Z`, refined there to a cover `V` of small
//! dimension, and lifted back as `W = { p^-1(V) ∩ h.U_V : V in V, h in F }` where
//! `U_V` is a chosen member of `U` with `V ⊆ p(U_V)`. Every postcondition of the
//! construction is re-checked on the output rather than assumed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cover::{gcover_check, is_refinement, Cover, GCoverReport};
use crate::error::{Error, Result};
use crate::group::{quotient_metric, quotient_poset, Action, Quotient, Symmetric};
use crate::metric::FiniteMetricSpace;
use crate::poset::FinitePoset;
use crate::search::{least_multiplicity_cover, DEFAULT_NODE_BUDGET};
use crate::sets::{PointSet, SampledSet, Space};

/// Spaces whose orbit spaces can be formed and searched for refinements.
pub trait Refinable: Symmetric + Clone + Sized {
    fn quotient(action: &Action<Self>) -> Result<Quotient<Self>>;

    /// The searchable open sets lying inside some member of `coarse`.
    fn refinement_candidates(&self, coarse: &Cover) -> Vec<SampledSet>;
}

impl Refinable for FinitePoset {
    fn quotient(action: &Action<Self>) -> Result<Quotient<Self>> {
        quotient_poset(action)
    }

    fn refinement_candidates(&self, coarse: &Cover) -> Vec<SampledSet> {
        coarse
            .elements()
            .iter()
            .flat_map(|e| self.open_subsets(self.interior(e.interior)))
            .filter(|s| !s.is_empty())
            .map(|s| self.open_region(s).expect("enumerated sets are open"))
            .collect()
    }
}

impl Refinable for FiniteMetricSpace {
    fn quotient(action: &Action<Self>) -> Result<Quotient<Self>> {
        quotient_metric(action)
    }

    fn refinement_candidates(&self, coarse: &Cover) -> Vec<SampledSet> {
        self.tight_balls()
            .into_iter()
            .map(|(_, _, b)| b)
            .filter(|b| coarse.elements().iter().any(|e| b.interior.is_subset(e.interior)))
            .collect()
    }
}

/// Image of every element under the projection, deduplicated as sets.
pub fn project_cover<S: Space>(cover: &Cover, quotient: &Quotient<S>) -> Cover {
    let elements: Vec<SampledSet> = cover.elements().iter().map(|u| quotient.project_set(u)).collect();
    let labels = cover.labels().iter().map(|l| format!("p({l})")).collect();
    Cover::new(quotient.space.len(), elements, labels)
        .expect("projected elements share the quotient universe")
        .dedup()
}

/// Least-dimension refinement of `coarse` drawn from the space's searchable opens.
///
/// Ties are broken by fewer elements, then lexicographically.
pub fn refine_in_quotient<S: Refinable>(space: &S, coarse: &Cover, target_dim: usize) -> Result<Cover> {
    refine_with_budget(space, coarse, target_dim, DEFAULT_NODE_BUDGET)
}

pub fn refine_with_budget<S: Refinable>(
    space: &S,
    coarse: &Cover,
    target_dim: usize,
    budget: u64,
) -> Result<Cover> {
    // One candidate per interior, keeping the smallest closure.
    let mut by_interior: BTreeMap<PointSet, SampledSet> = BTreeMap::new();
    for c in space.refinement_candidates(coarse) {
        by_interior
            .entry(c.interior)
            .and_modify(|kept| {
                if (c.closure.len(), c.closure) < (kept.closure.len(), kept.closure) {
                    *kept = c;
                }
            })
            .or_insert(c);
    }
    let candidates: Vec<SampledSet> = by_interior.into_values().collect();
    let interiors: Vec<PointSet> = candidates.iter().map(|c| c.interior).collect();
    let outcome = least_multiplicity_cover(space.all(), &interiors, budget)?;
    let Some(outcome) = outcome else {
        return Err(Error::Unachievable {
            target: target_dim,
            best: "no searchable refinement covers the space".into(),
        });
    };
    if outcome.dimension() > target_dim {
        return Err(Error::Unachievable {
            target: target_dim,
            best: format!("dimension {}", outcome.dimension()),
        });
    }
    let elements: Vec<SampledSet> = outcome.chosen.iter().map(|&i| candidates[i]).collect();
    let labels = (0..elements.len()).map(|i| format!("V{i}")).collect();
    Cover::new(space.len(), elements, labels)
}

/// How `U_V` is picked among the members of `U` whose image contains `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SelectionRule {
    /// Least index.
    #[default]
    First,
    /// Greatest index.
    Last,
}

#[derive(Debug, Clone)]
pub struct RefinementPlan<S> {
    pub quotient: Quotient<S>,
    pub projected: Cover,
    /// The refinement `V` of the projected cover.
    pub refinement: Cover,
    /// `selection[v]` is the index in `U` of `U_V`.
    pub selection: Vec<usize>,
}

/// Where an element `p^-1(V) ∩ h.U_V` of the output came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub v: usize,
    pub h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementCertificate {
    pub covers: bool,
    pub refines: bool,
    pub gcover: GCoverReport,
    pub dimension: usize,
    pub quotient_dimension: usize,
    pub target: usize,
    pub dimension_bound: bool,
}

impl RefinementCertificate {
    pub fn passed(&self) -> bool {
        self.covers && self.refines && self.gcover.is_gcover && self.dimension_bound
    }
}

#[derive(Debug, Clone)]
pub struct EquivariantRefinement<S> {
    pub cover: Cover,
    pub provenance: Vec<Provenance>,
    pub plan: RefinementPlan<S>,
    pub certificate: RefinementCertificate,
}

/// Builds an open F-refinement of the F-cover `cover` with dimension at most `n`.
pub fn equivariant_refine<S: Refinable>(
    cover: &Cover,
    action: &Action<S>,
    n: usize,
) -> Result<EquivariantRefinement<S>> {
    equivariant_refine_with(cover, action, n, SelectionRule::First)
}

pub fn equivariant_refine_with<S: Refinable>(
    cover: &Cover,
    action: &Action<S>,
    n: usize,
    rule: SelectionRule,
) -> Result<EquivariantRefinement<S>> {
    let space = action.space();
    if cover.universe() != space.len() {
        return Err(Error::SpaceMismatch {
            left: cover.universe(),
            right: space.len(),
        });
    }
    if !cover.is_cover() {
        return Err(Error::Precondition("input family does not cover the space".into()));
    }
    let report = gcover_check(cover, action);
    if !report.is_gcover {
        let w = &report.witnesses[0];
        return Err(Error::Precondition(format!(
            "input is not an F-cover: group element {} moves `{}` ({:?})",
            w.element, w.set, w.kind
        )));
    }

    let quotient = S::quotient(action)?;
    let projected = project_cover(cover, &quotient);
    let refinement = refine_in_quotient(&quotient.space, &projected, n)?;

    let images: Vec<PointSet> = cover
        .elements()
        .iter()
        .map(|u| quotient.project(u.interior))
        .collect();
    let mut selection = Vec::with_capacity(refinement.len());
    for v in refinement.elements() {
        let fits = |i: &usize| v.interior.is_subset(images[*i]);
        let pick = match rule {
            SelectionRule::First => (0..cover.len()).find(fits),
            SelectionRule::Last => (0..cover.len()).rev().find(fits),
        };
        selection.push(pick.expect("V refines the projected cover"));
    }

    let mut elements = Vec::new();
    let mut labels = Vec::new();
    let mut provenance = Vec::new();
    for (vi, v) in refinement.elements().iter().enumerate() {
        let lifted = quotient.preimage_set(v, space.len());
        let u = cover.get(selection[vi]);
        for h in 0..action.group().order() {
            let w = space.normalize(lifted.intersect(&action.act_on_set(h, u))?);
            if w.is_empty() || elements.contains(&w) {
                continue;
            }
            elements.push(w);
            labels.push(format!("W{vi}.{h}"));
            provenance.push(Provenance { v: vi, h });
        }
    }
    let output = Cover::new(space.len(), elements, labels)?;

    let certificate = RefinementCertificate {
        covers: output.is_cover(),
        refines: is_refinement(&output, cover)?.refines,
        gcover: gcover_check(&output, action),
        dimension: output.dimension(),
        quotient_dimension: refinement.dimension(),
        target: n,
        dimension_bound: output.dimension() <= refinement.dimension() && refinement.dimension() <= n,
    };
    Ok(EquivariantRefinement {
        cover: output,
        provenance,
        plan: RefinementPlan {
            quotient,
            projected,
            refinement,
            selection,
        },
        certificate,
    })
}

impl<S: Space> EquivariantRefinement<S> {
    /// `W -> p(W)` restricted to the members containing `z` is well defined into
    /// `V` and injective.
    pub fn pi_z_injection_check(&self, z: usize) -> bool {
        let quotient = &self.plan.quotient;
        let mut images = Vec::new();
        for i in self.cover.containing(z) {
            let image = quotient.project(self.cover.get(i).interior);
            let v = self.plan.refinement.get(self.provenance[i].v);
            if image != v.interior || !v.interior.contains(quotient.projection[z]) {
                return false;
            }
            images.push(image);
        }
        let count = images.len();
        images.sort();
        images.dedup();
        images.len() == count
    }

    /// Pointwise form of the dimension bound: multiplicity of `W` at `z` is at
    /// most that of `V` at `p(z)`.
    pub fn multiplicity_dominated(&self, z: usize) -> bool {
        self.cover.multiplicity_at(z)
            <= self
                .plan
                .refinement
                .multiplicity_at(self.plan.quotient.projection[z])
    }
}
