//! Seeded random instances: group actions on posets and cycles, random
//! F-covers, complexes and ball covers.
//!
//! Every generator is a pure function of the RNG state, so a seed reproduces
//! the same instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cover::Cover;
use crate::group::{compose, Action, PermGroup, Symmetric, GROUP_ELEMENT_CAP};
use crate::metric::FiniteMetricSpace;
use crate::nerve::SimplicialComplex;
use crate::pipeline::hypothesis_check;
use crate::poset::FinitePoset;
use crate::rational::{format_rational, int, ratio, Rational};
use crate::sets::{PointSet, SampledSet, Space};

/// Independent RNG for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// The small groups used by the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    C2,
    C3,
    C2xC2,
    S3,
    S4,
}

impl GroupKind {
    pub const ALL: [GroupKind; 5] = [GroupKind::C2, GroupKind::C3, GroupKind::C2xC2, GroupKind::S3, GroupKind::S4];

    /// The group as permutations of its natural set of letters.
    pub fn natural(self) -> PermGroup {
        let gens: (usize, Vec<Vec<usize>>) = match self {
            GroupKind::C2 => (2, vec![vec![1, 0]]),
            GroupKind::C3 => (3, vec![vec![1, 2, 0]]),
            GroupKind::C2xC2 => (4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
            GroupKind::S3 => (3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
            GroupKind::S4 => (4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
        };
        PermGroup::generated(gens.0, gens.1, GROUP_ELEMENT_CAP).expect("small group")
    }

    fn pick(rng: &mut impl Rng, from: &[GroupKind]) -> GroupKind {
        from[rng.random_range(0..from.len())]
    }
}

/// Poset of a random invariant family of nonempty subsets of the letters,
/// ordered by inclusion, with the induced action.
pub fn subset_poset(rng: &mut impl Rng, kind: GroupKind, max_points: usize) -> Action<FinitePoset> {
    let g = kind.natural();
    let letters = g.degree();
    let mut orbits: Vec<Vec<PointSet>> = Vec::new();
    for bits in 1u64..(1 << letters) {
        let s = PointSet::from_bits(bits);
        if orbits.iter().any(|o| o.contains(&s)) {
            continue;
        }
        let mut orbit: Vec<PointSet> = g.elements().iter().map(|p| s.map(p)).collect();
        orbit.sort();
        orbit.dedup();
        orbits.push(orbit);
    }
    let mut chosen: Vec<PointSet> = Vec::new();
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    shuffle(rng, &mut order);
    for i in order {
        if chosen.len() + orbits[i].len() <= max_points && (chosen.is_empty() || rng.random_bool(0.7)) {
            chosen.extend(&orbits[i]);
        }
    }
    chosen.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let names: Vec<String> = chosen
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
        .collect();
    let pairs: Vec<(String, String)> = (0..chosen.len())
        .flat_map(|a| (0..chosen.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && chosen[a].is_subset(chosen[b]))
        .map(|(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    let poset = FinitePoset::from_relation(&names, &pairs).expect("inclusion is a partial order");
    let perms: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|p| {
            chosen
                .iter()
                .map(|s| chosen.iter().position(|t| *t == s.map(p)).expect("family is invariant"))
                .collect()
        })
        .collect();
    let group = PermGroup::generated(chosen.len(), perms, GROUP_ELEMENT_CAP).expect("image of a small group");
    Action::new(group, poset).expect("inclusion is preserved")
}

/// `G x Q` with `G` acting on the first factor, for a random poset `Q`.
pub fn free_poset(rng: &mut impl Rng, kind: GroupKind, max_points: usize) -> Option<Action<FinitePoset>> {
    let g = kind.natural();
    let order = g.order();
    let q = max_points / order;
    if q == 0 {
        return None;
    }
    let q = rng.random_range(1..=q);
    let mut below = vec![Vec::new(); q];
    for (b, row) in below.iter_mut().enumerate() {
        for a in 0..b {
            if rng.random_bool(0.4) {
                row.push(a);
            }
        }
    }
    let name = |e: usize, a: usize| format!("g{e}.q{a}");
    let names: Vec<String> = (0..order).flat_map(|e| (0..q).map(move |a| name(e, a))).collect();
    let mut pairs = Vec::new();
    for e in 0..order {
        for (b, row) in below.iter().enumerate() {
            for &a in row {
                pairs.push((name(e, a), name(e, b)));
            }
        }
    }
    let poset = FinitePoset::from_relation(&names, &pairs).expect("edges go up in index");
    let perms: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|h| {
            (0..order * q)
                .map(|x| {
                    let (e, a) = (x / q, x % q);
                    let he = g.index_of(&compose(h, &g.elements()[e])).expect("closed");
                    he * q + a
                })
                .collect()
        })
        .collect();
    let group = PermGroup::generated(order * q, perms, GROUP_ELEMENT_CAP).expect("regular action");
    Some(Action::new(group, poset).expect("acts on the first factor"))
}

/// A cycle with one of the groups that act on it by isometries.
pub fn cycle_action(rng: &mut impl Rng, max_points: usize) -> (GroupKind, Action<FiniteMetricSpace>) {
    let kinds = [GroupKind::C2, GroupKind::C3, GroupKind::C2xC2, GroupKind::S3];
    loop {
        let kind = GroupKind::pick(rng, &kinds);
        let n = rng.random_range(3..=max_points);
        let group = match kind {
            GroupKind::C2 if n % 2 == 0 => PermGroup::rotations(n, n / 2),
            GroupKind::C3 if n % 3 == 0 => PermGroup::rotations(n, n / 3),
            GroupKind::C2xC2 if n % 2 == 0 => PermGroup::dihedral(n, n / 2),
            GroupKind::S3 if n % 3 == 0 => PermGroup::dihedral(n, n / 3),
            _ => continue,
        };
        let rho = if rng.random_bool(0.5) { int(1) } else { ratio(1, 2) };
        let space = FiniteMetricSpace::cycle(n, rho).expect("cycle");
        return (kind, Action::new(group.expect("valid rotation"), space).expect("isometries"));
    }
}

/// Grows `s` by the translates that meet it until every translate is disjoint or equal.
pub fn saturate_translates<S: Space>(action: &Action<S>, s: SampledSet) -> SampledSet {
    let space = action.space();
    let mut current = s;
    loop {
        let mut next = current;
        for g in 0..action.group().order() {
            let moved = action.act_on_set(g, &current);
            if moved.interior.intersects(current.interior) {
                next = next.union(&moved).expect("same universe");
            }
        }
        let next = space.normalize(next);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// An F-cover grown from random seed sets: each seed is saturated and added with its orbit.
pub fn random_gcover<S: Symmetric>(
    rng: &mut ChaCha8Rng,
    action: &Action<S>,
    mut seed_set: impl FnMut(&mut ChaCha8Rng, usize) -> SampledSet,
) -> Cover {
    let space = action.space();
    let n = space.len();
    let mut elements: Vec<SampledSet> = Vec::new();
    let add = |s: SampledSet, elements: &mut Vec<SampledSet>| {
        let s = saturate_translates(action, s);
        for g in 0..action.group().order() {
            let moved = action.act_on_set(g, &s);
            if !elements.contains(&moved) {
                elements.push(moved);
            }
        }
    };
    for _ in 0..rng.random_range(0..=3) {
        let x = rng.random_range(0..n);
        let s = seed_set(rng, x);
        add(s, &mut elements);
    }
    loop {
        let covered = elements.iter().fold(PointSet::EMPTY, |acc, e| acc.union(e.interior));
        let Some(x) = space.all().difference(covered).first() else {
            break;
        };
        let s = seed_set(rng, x);
        add(s, &mut elements);
    }
    Cover::unlabeled(n, elements).expect("same universe")
}

/// Up-set of `x` and possibly a few more random points.
pub fn random_open(rng: &mut impl Rng, poset: &FinitePoset, x: usize) -> SampledSet {
    let mut s = poset.up_set(x);
    for _ in 0..rng.random_range(0..=1) {
        s = s.union(poset.up_set(rng.random_range(0..poset.len())));
    }
    poset.open_region(s).expect("unions of up-sets are open")
}

/// A ball around `x` with a radius of one to three multiples of `rho`.
pub fn random_ball(rng: &mut impl Rng, space: &FiniteMetricSpace, x: usize) -> SampledSet {
    let radius = space.rho() * Rational::from_integer(rng.random_range(1..=3));
    space.ball(x, radius).expect("radius is at least rho")
}

#[derive(Debug, Clone)]
pub struct PosetInstance {
    pub kind: GroupKind,
    pub action: Action<FinitePoset>,
    pub cover: Cover,
}

/// A poset with at most `max_points` points, one of the five groups and a random F-cover.
pub fn random_poset_instance(rng: &mut ChaCha8Rng, max_points: usize) -> PosetInstance {
    let kind = GroupKind::pick(rng, &GroupKind::ALL);
    let action = match rng.random_bool(0.5) {
        true => free_poset(rng, kind, max_points),
        false => None,
    }
    .unwrap_or_else(|| subset_poset(rng, kind, max_points));
    let poset = action.space().clone();
    let cover = random_gcover(rng, &action, |rng, x| random_open(rng, &poset, x));
    PosetInstance { kind, action, cover }
}

#[derive(Debug, Clone)]
pub struct MetricInstance {
    pub kind: GroupKind,
    pub action: Action<FiniteMetricSpace>,
    pub cover: Cover,
}

pub fn random_metric_instance(rng: &mut ChaCha8Rng, max_points: usize) -> MetricInstance {
    let (kind, action) = cycle_action(rng, max_points);
    let space = action.space().clone();
    let cover = random_gcover(rng, &action, |rng, x| random_ball(rng, &space, x));
    MetricInstance { kind, action, cover }
}

/// Face closure of a few random simplices on at most `max_vertices` vertices.
pub fn random_complex(rng: &mut impl Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.random_range(1..=max_vertices);
    let vertices = (0..n).map(|i| format!("v{i}")).collect();
    let facets: Vec<PointSet> = (0..rng.random_range(1..=4))
        .map(|_| {
            let mut f: PointSet = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            if f.is_empty() {
                f.insert(rng.random_range(0..n));
            }
            f
        })
        .collect();
    SimplicialComplex::from_facets(vertices, &facets).expect("at most 6 vertices")
}

/// Random balls (radius `rho` to `3 rho`) added until the space is covered.
pub fn random_ball_cover(rng: &mut impl Rng, space: &FiniteMetricSpace) -> Cover {
    let n = space.len();
    let mut elements: Vec<SampledSet> = Vec::new();
    let mut covered = PointSet::EMPTY;
    while covered != space.all() {
        let center = rng.random_range(0..n);
        let mut s = random_ball(rng, space, center);
        if rng.random_bool(0.3) {
            let center = rng.random_range(0..n);
            let other = random_ball(rng, space, center);
            s = s.union(&other).expect("same universe");
        }
        if !elements.contains(&s) {
            covered = covered.union(s.interior);
            elements.push(s);
        }
    }
    Cover::unlabeled(n, elements).expect("same universe")
}

/// Inputs for the graded construction that satisfy its boundary hypothesis.
#[derive(Debug, Clone)]
pub struct GradedInstance {
    pub action: Action<FiniteMetricSpace>,
    pub collection: Cover,
    pub k: usize,
    pub n: usize,
    pub delta: Rational,
}

impl GradedInstance {
    pub fn describe(&self) -> String {
        format!(
            "Z{} |F|={} |U|={} k={} n={} delta={}",
            self.action.space().len(),
            self.action.group().order(),
            self.collection.len(),
            self.k,
            self.n,
            format_rational(&self.delta)
        )
    }
}

/// A cycle of even length up to 12 with a rotation group, an equivariant
/// collection of ball orbits, and `k` the largest boundary multiplicity.
pub fn random_graded_instance(rng: &mut impl Rng) -> GradedInstance {
    let n = [6usize, 8, 10, 12][rng.random_range(0..4)];
    let steps: Vec<usize> = [n / 2, n / 3, n]
        .into_iter()
        .filter(|&s| s > 0 && n.is_multiple_of(s))
        .collect();
    let step = steps[rng.random_range(0..steps.len())];
    let space = FiniteMetricSpace::cycle(n, int(1)).expect("cycle");
    let action = Action::new(PermGroup::rotations(n, step).expect("rotation"), space.clone()).expect("isometry");
    let mut elements: Vec<SampledSet> = Vec::new();
    for _ in 0..rng.random_range(1..=2) {
        let radius = [ratio(3, 2), int(2), ratio(5, 2), int(3)][rng.random_range(0..4)];
        let ball = space.ball(rng.random_range(0..n), radius).expect("radius above rho");
        for g in 0..action.group().order() {
            let moved = action.act_on_set(g, &ball);
            if !elements.contains(&moved) {
                elements.push(moved);
            }
        }
    }
    let collection = Cover::unlabeled(n, elements).expect("same universe");
    let k = (0..n)
        .map(|z| collection.elements().iter().filter(|e| e.boundary().contains(z)).count())
        .max()
        .unwrap_or(0);
    debug_assert!(hypothesis_check(&space, &collection, k).holds);
    let delta = [ratio(5, 2), int(3), ratio(7, 2)][rng.random_range(0..3)];
    GradedInstance {
        action,
        collection,
        k,
        n: 1,
        delta,
    }
}

fn shuffle<T>(rng: &mut impl Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, rng.random_range(0..=i));
    }
}
