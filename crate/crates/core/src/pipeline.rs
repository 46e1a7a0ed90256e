//! The assembled graded-cover construction on finite metric spaces with a group
//! of isometries: small F-covers around every point, the pull-back of the
//! canonical cover of the nerve, and the shrinking step, each stage certified.
//!
//! Compactness arguments become finite searches over rational grids: radii are
//! multiples of the resolution floor `rho`, shrink scales and `delta` are
//! multiples of `1 / m_cap`.

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cover::{crossing_count, gcover_check, smallness_check, Cover, GCoverReport, SmallnessReport};
use crate::error::{Error, Result};
use crate::group::Action;
use crate::metric::FiniteMetricSpace;
use crate::nerve::pull_back_canonical;
use crate::rational::{format_rational, Extended, Rational};
use crate::refine::{equivariant_refine, EquivariantRefinement, RefinementCertificate};
use crate::sets::{PointSet, SampledSet, Space};

/// Default bound on the denominators of shrink scales and `delta`.
pub const DEFAULT_M_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub k: usize,
    pub holds: bool,
    /// Labels of the first subfamily of size `k + 1` whose boundaries share a point.
    pub witness: Option<Vec<String>>,
    /// Points on all boundaries of the witness.
    pub common_boundary: Vec<String>,
}

/// Whether every subfamily of more than `k` elements has disjoint boundaries.
///
/// Subfamilies of size `k + 1` are enumerated in index order; larger ones meet
/// in subsets of their boundaries and need no separate check.
pub fn hypothesis_check<S: Space>(space: &S, cover: &Cover, k: usize) -> HypothesisReport {
    let boundaries: Vec<PointSet> = cover.elements().iter().map(SampledSet::boundary).collect();
    let crowded = (0..cover.universe()).any(|z| boundaries.iter().filter(|b| b.contains(z)).count() > k);
    if crowded {
        for family in (0..cover.len()).combinations(k + 1) {
            let common = family
                .iter()
                .fold(PointSet::full(cover.universe()), |acc, &i| acc.intersection(boundaries[i]));
            if !common.is_empty() {
                return HypothesisReport {
                    k,
                    holds: false,
                    witness: Some(family.iter().map(|&i| cover.label(i).to_string()).collect()),
                    common_boundary: space.names(common),
                };
            }
        }
    }
    HypothesisReport {
        k,
        holds: true,
        witness: None,
        common_boundary: Vec::new(),
    }
}

/// Whether the translates of `ball` around `z` by elements moving `z` miss it.
fn orbit_disjoint(action: &Action<FiniteMetricSpace>, z: usize, ball: &SampledSet) -> bool {
    (0..action.group().order())
        .filter(|&g| action.act(g, z) != z)
        .all(|g| !action.act_on_points(g, ball.interior).intersects(ball.interior))
}

/// The grid ball `B(z, i * rho)` with the largest interior among those passing
/// `ok`; ties go to the smaller radius.
fn largest_grid_ball(
    space: &FiniteMetricSpace,
    z: usize,
    ok: impl Fn(Rational, &SampledSet) -> bool,
) -> Option<(Rational, SampledSet)> {
    let rho = space.rho();
    let stop = space.max_distance() + rho;
    let mut best: Option<(Rational, SampledSet)> = None;
    let mut radius = rho;
    while radius <= stop {
        let ball = space.ball(z, radius).expect("grid radii respect rho");
        if ok(radius, &ball) && best.as_ref().is_none_or(|(_, b)| ball.interior.len() > b.interior.len()) {
            best = Some((radius, ball));
        }
        radius += rho;
    }
    best
}

/// The ball of radius close to `delta / 2` whose closure has diameter below `delta`.
fn delta_ball(space: &FiniteMetricSpace, z: usize, delta: Rational) -> Result<SampledSet> {
    let half = delta / Rational::from_integer(2);
    let below = space
        .distance_levels(z)
        .into_iter()
        .filter(|d| *d < half)
        .max()
        .unwrap_or_else(Rational::zero);
    let radius = ((below + half) / Rational::from_integer(2)).max(space.rho());
    if radius >= half {
        return Err(Error::Resolution(format!(
            "no ball of radius at least rho = {} fits inside delta / 2 = {}",
            format_rational(&space.rho()),
            format_rational(&half)
        )));
    }
    space.ball(z, radius)
}

/// How the set around one point was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum PointCase {
    /// The point lies outside every closure; a single ball is used.
    Outside { radius: String },
    /// The point meets some closure.
    Inside {
        orbit_radius: String,
        /// Crossings of the intersection of the cover around the point.
        crossings: usize,
        /// Elements of the collection with the point on their boundary.
        boundary_count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointConstruction {
    pub point: String,
    #[serde(flatten)]
    pub case: PointCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverOfZCertificate {
    pub dimension: usize,
    pub target: usize,
    pub dimension_ok: bool,
    pub covers: bool,
    pub smallness: SmallnessReport,
    pub gcover: GCoverReport,
}

impl CoverOfZCertificate {
    pub fn passed(&self) -> bool {
        self.dimension_ok && self.covers && self.smallness.passed && self.gcover.is_equivariant
    }
}

#[derive(Debug, Clone)]
pub struct CoverOfZ {
    /// The final cover, of dimension at most the target.
    pub cover: Cover,
    /// The F-cover `{W_z}` before the dimension reduction.
    pub initial: Cover,
    pub points: Vec<PointConstruction>,
    pub refinement: RefinementCertificate,
    pub certificate: CoverOfZCertificate,
}

/// Builds an F-cover of the space with small diameters, few crossings of `u`
/// and dimension at most `n`.
pub fn cover_of_z(
    action: &Action<FiniteMetricSpace>,
    u: &Cover,
    k: usize,
    n: usize,
    delta: Rational,
) -> Result<CoverOfZ> {
    let space = action.space();
    let size = space.len();
    if u.universe() != size {
        return Err(Error::SpaceMismatch {
            left: u.universe(),
            right: size,
        });
    }
    if delta <= Rational::zero() {
        return Err(Error::Invalid("delta must be positive".into()));
    }
    if !gcover_check(u, action).is_equivariant {
        return Err(Error::Precondition("the collection is not F-equivariant".into()));
    }
    let hypothesis = hypothesis_check(space, u, k);
    if let Some(w) = &hypothesis.witness {
        return Err(Error::Precondition(format!(
            "boundaries of {} share {}",
            w.join(", "),
            hypothesis.common_boundary.join(", ")
        )));
    }

    let closures = u
        .elements()
        .iter()
        .fold(PointSet::EMPTY, |acc, e| acc.union(e.closure));
    let half = delta / Rational::from_integer(2);

    // C_z for every point, before intersecting over the orbit.
    let mut c = Vec::with_capacity(size);
    let mut points = Vec::with_capacity(size);
    for z in 0..size {
        let name = space.point_ids()[z].clone();
        if !closures.contains(z) {
            let (radius, ball) = largest_grid_ball(space, z, |r, b| {
                r < half
                    && space.diameter(b) < delta
                    && !b.interior.intersects(closures)
                    && orbit_disjoint(action, z, b)
            })
            .ok_or_else(|| {
                Error::Resolution(format!("no grid radius around `{name}` avoids the closures"))
            })?;
            points.push(PointConstruction {
                point: name,
                case: PointCase::Outside {
                    radius: format_rational(&radius),
                },
            });
            c.push(ball);
            continue;
        }
        let mut a = SampledSet::whole(size);
        for e in u.elements() {
            if e.interior.contains(z) {
                a = a.intersect(e)?;
            } else if !e.closure.contains(z) {
                let outside = e.closure.complement(size);
                a = a.intersect(&SampledSet::exact(size, outside))?;
            }
        }
        let (orbit_radius, b) = largest_grid_ball(space, z, |_, b| orbit_disjoint(action, z, b))
            .ok_or_else(|| {
                Error::Resolution(format!("no grid ball around `{name}` misses its translates"))
            })?;
        let cz = a.intersect(&b)?.intersect(&delta_ball(space, z, delta)?)?;
        points.push(PointConstruction {
            point: name,
            case: PointCase::Inside {
                orbit_radius: format_rational(&orbit_radius),
                crossings: crossing_count(&a, u),
                boundary_count: u.elements().iter().filter(|e| e.boundary().contains(z)).count(),
            },
        });
        c.push(cz);
    }

    // W_z = intersection over g of g^-1 C_{gz}.
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    for z in 0..size {
        let mut w = if closures.contains(z) {
            SampledSet::whole(size)
        } else {
            c[z]
        };
        if closures.contains(z) {
            for g in 0..action.group().order() {
                let gz = action.act(g, z);
                w = w.intersect(&action.act_on_set(action.inverse_of(g), &c[gz]))?;
            }
        }
        if !elements.contains(&w) {
            elements.push(w);
            labels.push(format!("W[{}]", space.point_ids()[z]));
        }
    }
    let initial = Cover::new(size, elements, labels)?;

    let refined: EquivariantRefinement<FiniteMetricSpace> = equivariant_refine(&initial, action, n)?;
    let cover = refined.cover.clone();
    let certificate = CoverOfZCertificate {
        dimension: cover.dimension(),
        target: n,
        dimension_ok: cover.dimension() <= n,
        covers: cover.is_cover(),
        smallness: smallness_check(&cover, space, delta, u, k)?,
        gcover: gcover_check(&cover, action),
    };
    Ok(CoverOfZ {
        cover,
        initial,
        points,
        refinement: refined.certificate,
        certificate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShrinkParams {
    pub m: usize,
    pub m_cap: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub epsilon: Rational,
}

#[derive(Debug, Clone)]
pub struct Shrunk {
    pub cover: Cover,
    /// Index in the input of each surviving element.
    pub kept: Vec<usize>,
    pub params: ShrinkParams,
    /// Every shrunk closure lies inside the interior it came from.
    pub closure_inside: bool,
}

/// `V_eps` with interior the erosion `V^-eps` and closure its dilation, both at
/// scale `eps`.
pub fn shrink_element(space: &FiniteMetricSpace, v: &SampledSet, eps: Rational) -> SampledSet {
    let interior = space.erode(v.interior, eps);
    let closure = space.dilate(interior, eps);
    SampledSet::new(space.len(), interior, closure).expect("dilation contains its argument")
}

/// Least `m <= m_cap` for which the sets `V_{1/m}` still cover; empty sets are dropped.
pub fn shrink(space: &FiniteMetricSpace, cover: &Cover, m_cap: usize) -> Result<Shrunk> {
    if !cover.is_cover() {
        return Err(Error::Precondition("shrink needs a cover".into()));
    }
    let all = space.all();
    let mut deficit = 0;
    for m in 1..=m_cap {
        let eps = Rational::one() / Rational::from_integer(m as i64);
        let shrunk: Vec<SampledSet> = cover
            .elements()
            .iter()
            .map(|v| shrink_element(space, v, eps))
            .collect();
        let covered = shrunk.iter().fold(PointSet::EMPTY, |acc, s| acc.union(s.interior));
        if covered != all {
            deficit = all.difference(covered).len();
            continue;
        }
        let kept: Vec<usize> = (0..shrunk.len()).filter(|&i| !shrunk[i].is_empty()).collect();
        let closure_inside = kept
            .iter()
            .all(|&i| shrunk[i].closure.is_subset(cover.get(i).interior));
        let elements = kept.iter().map(|&i| shrunk[i]).collect();
        let labels = kept.iter().map(|&i| cover.label(i).to_string()).collect();
        return Ok(Shrunk {
            cover: Cover::new(space.len(), elements, labels)?,
            kept,
            params: ShrinkParams { m, m_cap, epsilon: eps },
            closure_inside,
        });
    }
    Err(Error::Resolution(format!(
        "no shrink scale 1/m with m <= {m_cap} covers; {deficit} points uncovered at m = {m_cap}"
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedElement {
    pub label: String,
    pub grade: usize,
    pub set: SampledSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: &'static str,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl PropertyCheck {
    fn new(property: &'static str, witnesses: Vec<String>) -> PropertyCheck {
        PropertyCheck {
            property,
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedParams {
    pub delta: String,
    pub k: usize,
    pub n: usize,
    pub shrink: ShrinkParams,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedCoverResult {
    pub params: GradedParams,
    /// `grades[j]` is the family of grade `j`.
    pub grades: Vec<Vec<GradedElement>>,
    /// Largest count in the grade-prefix intersection bound, per grade.
    pub prefix_counts: Vec<usize>,
    pub stages: StageSummary,
    pub properties: Vec<PropertyCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub cover_of_z: CoverOfZCertificate,
    pub initial_size: usize,
    pub cover_size: usize,
    pub nerve_f_vector: Vec<usize>,
    pub pull_back_passed: bool,
    pub shrink_closure_inside: bool,
}

impl GradedCoverResult {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    /// All grades as one labelled family.
    pub fn flatten(&self, universe: usize) -> Result<Cover> {
        let (elements, labels) = self
            .grades
            .iter()
            .flatten()
            .map(|e| (e.set, e.label.clone()))
            .unzip();
        Cover::new(universe, elements, labels)
    }
}

/// Runs the full construction and checks the seven output properties directly.
pub fn proposition_33(
    action: &Action<FiniteMetricSpace>,
    u: &Cover,
    k: usize,
    n: usize,
    delta: Rational,
    m_cap: usize,
) -> Result<GradedCoverResult> {
    let space = action.space();
    let size = space.len();
    let stage_one = cover_of_z(action, u, k, n, delta).map_err(|e| e.at("cover_of_z"))?;
    let w = &stage_one.cover;
    let pull_back = pull_back_canonical(space, w).map_err(|e| e.at("pull_back"))?;
    let pull_back_passed = pull_back.check(w).passed();
    let flat = pull_back.as_cover(size).map_err(|e| e.at("pull_back"))?;
    let grade_of: Vec<usize> = pull_back
        .grades
        .iter()
        .enumerate()
        .flat_map(|(j, g)| std::iter::repeat_n(j, g.len()))
        .collect();
    let shrunk = shrink(space, &flat, m_cap).map_err(|e| e.at("shrink"))?;

    let mut grades: Vec<Vec<GradedElement>> = vec![Vec::new(); pull_back.grades.len()];
    for (pos, &i) in shrunk.kept.iter().enumerate() {
        let set = *shrunk.cover.get(pos);
        let grade = grade_of[i];
        if grades[grade].iter().any(|e| e.set == set) {
            continue;
        }
        grades[grade].push(GradedElement {
            label: shrunk.cover.label(pos).to_string(),
            grade,
            set,
        });
    }

    let eps = shrunk.params.epsilon;
    let (properties, prefix_counts) = certify(action, u, &grades, k, delta, eps);
    Ok(GradedCoverResult {
        params: GradedParams {
            delta: format_rational(&delta),
            k,
            n,
            shrink: shrunk.params,
        },
        grades,
        prefix_counts,
        stages: StageSummary {
            cover_of_z: stage_one.certificate,
            initial_size: stage_one.initial.len(),
            cover_size: w.len(),
            nerve_f_vector: pull_back.nerve.f_vector(),
            pull_back_passed,
            shrink_closure_inside: shrunk.closure_inside,
        },
        properties,
    })
}

/// Checks properties (i)-(vii) of a graded family by enumeration.
pub fn certify(
    action: &Action<FiniteMetricSpace>,
    u: &Cover,
    grades: &[Vec<GradedElement>],
    k: usize,
    delta: Rational,
    eps: Rational,
) -> (Vec<PropertyCheck>, Vec<usize>) {
    let space = action.space();
    let all: Vec<&GradedElement> = grades.iter().flatten().collect();

    let covered = all.iter().fold(PointSet::EMPTY, |acc, e| acc.union(e.set.interior));
    let uncovered = space.all().difference(covered);
    let i = PropertyCheck::new(
        "(i) open cover",
        if uncovered.is_empty() {
            Vec::new()
        } else {
            vec![format!("uncovered: {}", space.names(uncovered).join(","))]
        },
    );

    let ii = PropertyCheck::new(
        "(ii) diam(V) < delta",
        all.iter()
            .filter(|e| space.diameter(&e.set) >= delta)
            .map(|e| format!("{} has diameter {}", e.label, format_rational(&space.diameter(&e.set))))
            .collect(),
    );

    let iii = PropertyCheck::new(
        "(iii) at most k crossings",
        all.iter()
            .filter(|e| crossing_count(&e.set, u) > k)
            .map(|e| format!("{} crosses {}", e.label, crossing_count(&e.set, u)))
            .collect(),
    );

    let mut prefix_counts = vec![0; grades.len()];
    let mut iv_witnesses = Vec::new();
    for e in &all {
        let count = all
            .iter()
            .filter(|o| o.grade <= e.grade && o.set.interior.intersects(e.set.interior))
            .count();
        prefix_counts[e.grade] = prefix_counts[e.grade].max(count);
        if count > (1usize << (e.grade + 1)) - 1 {
            iv_witnesses.push(format!("{} meets {count}", e.label));
        }
    }
    let iv = PropertyCheck::new("(iv) at most 2^(j+1)-1 meeting", iv_witnesses);

    let mut v_witnesses = Vec::new();
    for grade in grades {
        for (a, b) in grade.iter().tuple_combinations() {
            if a.set != b.set && a.set.closure.intersects(b.set.closure) {
                v_witnesses.push(format!("closures of {} and {} meet", a.label, b.label));
            }
        }
    }
    let v = PropertyCheck::new("(v) same-grade closures disjoint", v_witnesses);

    let mut vi_witnesses = Vec::new();
    for g in 0..action.group().order() {
        for e in &all {
            let moved = action.act_on_set(g, &e.set);
            if !grades[e.grade].iter().any(|o| o.set == moved) {
                vi_witnesses.push(format!("element {g} moves {} out of grade {}", e.label, e.grade));
            }
        }
    }
    let vi = PropertyCheck::new("(vi) grades are F-invariant", vi_witnesses);

    let vii = PropertyCheck::new(
        "(vii) interior of closure is V",
        all.iter()
            .filter(|e| space.erode(e.set.closure, eps) != e.set.interior)
            .map(|e| e.label.clone())
            .collect(),
    );

    (vec![i, ii, iii, iv, v, vi, vii], prefix_counts)
}

#[derive(Debug, Clone, Serialize)]
pub struct Proposition32Report {
    pub delta: String,
    pub group_order: usize,
    pub target: usize,
    pub vf_size: usize,
    pub vf_dimension: usize,
    pub vf_dimension_ok: bool,
    pub refinement: RefinementCertificate,
    /// `alpha ⊆ cl alpha ⊆ beta ⊆ cl beta ⊆ U` for every element.
    pub chain_holds: bool,
    pub chain_witnesses: Vec<String>,
    /// Boundaries of more than `n + 1` candidates meet nowhere. Observed, not guaranteed.
    pub boundary_condition: HypothesisReport,
    /// `beta(gU) = g beta(U)`; only meaningful when `alpha` is equivariant.
    pub beta_equivariant: Option<bool>,
}

impl Proposition32Report {
    /// The certified parts: the dimension bound and the chain of inclusions.
    pub fn certified(&self) -> bool {
        self.vf_dimension_ok && self.refinement.passed() && self.chain_holds
    }
}

#[derive(Debug, Clone)]
pub struct Proposition32 {
    pub delta: Rational,
    pub vf: Cover,
    pub beta: Cover,
    pub report: Proposition32Report,
}

/// The computable part of the general-position step: `delta`, the F-refinement
/// `V_F` of a small ball cover, and a candidate `beta` built from `alpha`.
pub fn proposition_32_partial(
    action: &Action<FiniteMetricSpace>,
    u: &Cover,
    alpha: &[SampledSet],
    n: usize,
    m_cap: usize,
) -> Result<Proposition32> {
    let space = action.space();
    let size = space.len();
    if alpha.len() != u.len() {
        return Err(Error::Invalid(format!(
            "{} alpha sets for {} elements",
            alpha.len(),
            u.len()
        )));
    }
    for (i, a) in alpha.iter().enumerate() {
        if a.universe() != size {
            return Err(Error::SpaceMismatch {
                left: size,
                right: a.universe(),
            });
        }
        if !a.closure.is_subset(u.get(i).interior) {
            return Err(Error::Precondition(format!(
                "closure of alpha({}) is not inside it",
                u.label(i)
            )));
        }
    }

    // Largest grid delta with cl alpha(U) ⊆ U^-delta for every U.
    let mut bound = Extended::Infinity;
    for (i, a) in alpha.iter().enumerate() {
        for z in a.closure.iter() {
            bound = bound.min(space.dist_to_complement(u.get(i), z));
        }
    }
    let cap = space.max_distance().max(space.rho());
    let limit = match bound {
        Extended::Finite(b) => b.min(cap),
        Extended::Infinity => cap,
    };
    let grid = Rational::from_integer(m_cap as i64);
    let delta = (limit * grid).floor() / grid;
    if delta <= Rational::zero() {
        return Err(Error::Resolution(format!(
            "no delta on the 1/{m_cap} grid fits below {}",
            format_rational(&limit)
        )));
    }

    // Balls of radius at most delta / 3 that miss their translates.
    let third = delta / Rational::from_integer(3);
    let mut balls = Vec::new();
    let mut labels = Vec::new();
    for z in 0..size {
        let (_, ball) = largest_grid_ball(space, z, |r, b| r <= third && orbit_disjoint(action, z, b))
            .ok_or_else(|| {
                Error::Resolution(format!(
                    "rho = {} exceeds delta / 3 = {} or no ball around `{}` misses its translates",
                    format_rational(&space.rho()),
                    format_rational(&third),
                    space.point_ids()[z]
                ))
            })?;
        if !balls.contains(&ball) {
            balls.push(ball);
            labels.push(format!("B[{}]", space.point_ids()[z]));
        }
    }
    let ball_cover = Cover::new(size, balls, labels)?;
    let refined = equivariant_refine(&ball_cover, action, n).map_err(|e| e.at("refine"))?;
    let vf = refined.cover.clone();

    let mut beta = Vec::with_capacity(u.len());
    let mut chain_witnesses = Vec::new();
    for (i, a) in alpha.iter().enumerate() {
        let mut b = *a;
        for v in vf.elements() {
            if v.closure.intersects(a.closure) {
                b = b.union(v)?;
            }
        }
        let ok = a.interior.is_subset(a.closure)
            && a.closure.is_subset(b.interior)
            && b.interior.is_subset(b.closure)
            && b.closure.is_subset(u.get(i).interior);
        if !ok {
            chain_witnesses.push(u.label(i).to_string());
        }
        beta.push(b);
    }
    let beta_labels = u.labels().iter().map(|l| format!("beta({l})")).collect();
    let beta = Cover::new(size, beta, beta_labels)?;

    let beta_equivariant = alpha_is_equivariant(action, u, alpha).then(|| {
        (0..action.group().order()).all(|g| {
            (0..u.len()).all(|i| {
                let moved = action.act_on_set(g, u.get(i));
                let j = u.elements().iter().position(|x| *x == moved).expect("checked");
                beta.get(j) == &action.act_on_set(g, beta.get(i))
            })
        })
    });

    let report = Proposition32Report {
        delta: format_rational(&delta),
        group_order: action.group().order(),
        target: n,
        vf_size: vf.len(),
        vf_dimension: vf.dimension(),
        vf_dimension_ok: vf.dimension() <= n,
        refinement: refined.certificate,
        chain_holds: chain_witnesses.is_empty(),
        chain_witnesses,
        boundary_condition: hypothesis_check(space, &beta, n + 1),
        beta_equivariant,
    };
    Ok(Proposition32 {
        delta,
        vf,
        beta,
        report,
    })
}

/// `alpha(gU) = g alpha(U)` with `gU` located in `u` extensionally.
fn alpha_is_equivariant(action: &Action<FiniteMetricSpace>, u: &Cover, alpha: &[SampledSet]) -> bool {
    (0..action.group().order()).all(|g| {
        (0..u.len()).all(|i| {
            let moved = action.act_on_set(g, u.get(i));
            match u.elements().iter().position(|x| *x == moved) {
                Some(j) => alpha[j] == action.act_on_set(g, &alpha[i]),
                None => false,
            }
        })
    })
}
