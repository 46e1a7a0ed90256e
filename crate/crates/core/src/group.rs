//! Finite permutation groups acting on the points of a space, orbit
//! decompositions, quotient spaces and certificates for the projection map.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;
use crate::poset::FinitePoset;
use crate::rational::Rational;
use crate::sets::{PointSet, SampledSet, Space};

/// Default cap on the number of group elements (|S5|).
pub const GROUP_ELEMENT_CAP: usize = 120;

/// A permutation of `0..degree`, stored as its image list.
pub type Perm = Vec<usize>;

pub fn compose(g: &[usize], h: &[usize]) -> Perm {
    h.iter().map(|&x| g[x]).collect()
}

pub fn inverse(g: &[usize]) -> Perm {
    let mut inv = vec![0; g.len()];
    for (x, &gx) in g.iter().enumerate() {
        inv[gx] = x;
    }
    inv
}

pub fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Closes the generators under composition; elements are listed in
    /// lexicographic order, so the identity comes first.
    pub fn generated(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        for g in &generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Invalid(format!(
                    "{g:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let mut found: BTreeSet<Perm> = BTreeSet::new();
        let mut queue = VecDeque::new();
        found.insert(identity(degree));
        queue.push_back(identity(degree));
        while let Some(h) = queue.pop_front() {
            for g in &generators {
                let gh = compose(g, &h);
                if found.insert(gh.clone()) {
                    if found.len() > cap {
                        return Err(Error::TooLarge(format!(
                            "group has more than {cap} elements"
                        )));
                    }
                    queue.push_back(gh);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: found.into_iter().collect(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::generated(degree, Vec::new(), 1).expect("trivial group")
    }

    /// Rotations `z -> z + step` of `Z_n`.
    pub fn rotations(n: usize, step: usize) -> Result<PermGroup> {
        let gen = (0..n).map(|z| (z + step) % n).collect();
        PermGroup::generated(n, vec![gen], GROUP_ELEMENT_CAP)
    }

    /// Rotations by `step` together with the reflection `z -> -z` of `Z_n`.
    pub fn dihedral(n: usize, step: usize) -> Result<PermGroup> {
        let rot = (0..n).map(|z| (z + step) % n).collect();
        let refl = (0..n).map(|z| (n - z) % n).collect();
        PermGroup::generated(n, vec![rot, refl], GROUP_ELEMENT_CAP)
    }

    /// The full symmetric group on `k` letters.
    pub fn symmetric(k: usize, cap: usize) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if k >= 2 {
            let mut swap = identity(k);
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..k).map(|x| (x + 1) % k).collect());
        }
        PermGroup::generated(k, gens, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn index_of(&self, g: &[usize]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(g)).ok()
    }

    /// Group axioms checked over all pairs (closure, inverses, identity).
    pub fn is_closed(&self) -> bool {
        let id = identity(self.degree);
        self.index_of(&id).is_some()
            && self.elements.iter().all(|g| {
                self.index_of(&inverse(g)).is_some()
                    && self.elements.iter().all(|h| self.index_of(&compose(g, h)).is_some())
            })
    }
}

/// How a space certifies that a permutation is a symmetry of it.
pub trait Symmetric: Space {
    fn check_symmetry(&self, element: usize, perm: &[usize]) -> Result<()>;
}

impl Symmetric for FinitePoset {
    fn check_symmetry(&self, element: usize, g: &[usize]) -> Result<()> {
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.leq(x, y) != self.leq(g[x], g[y]) {
                    return Err(Error::NotAutomorphism {
                        element,
                        x: self.point_ids()[x].clone(),
                        y: self.point_ids()[y].clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

impl Symmetric for FiniteMetricSpace {
    fn check_symmetry(&self, element: usize, g: &[usize]) -> Result<()> {
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if self.distance(x, y) != self.distance(g[x], g[y]) {
                    return Err(Error::NotIsometric {
                        element,
                        x: self.point_ids()[x].clone(),
                        y: self.point_ids()[y].clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// A permutation group acting on the points of a space, point `i` of the space
/// being letter `i` of the group.
#[derive(Debug, Clone)]
pub struct Action<S> {
    group: PermGroup,
    space: S,
}

impl<S: Symmetric> Action<S> {
    /// Checks every group element, not only the generators.
    pub fn new(group: PermGroup, space: S) -> Result<Action<S>> {
        if group.degree() != space.len() {
            return Err(Error::Invalid(format!(
                "group has degree {} but the space has {} points",
                group.degree(),
                space.len()
            )));
        }
        for (i, g) in group.elements().iter().enumerate() {
            space.check_symmetry(i, g)?;
        }
        Ok(Action { group, space })
    }

    pub fn trivial(space: S) -> Action<S> {
        let group = PermGroup::trivial(space.len());
        Action { group, space }
    }
}

impl<S: Space> Action<S> {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn space(&self) -> &S {
        &self.space
    }

    pub fn elements(&self) -> &[Perm] {
        self.group.elements()
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.group.elements[g][x]
    }

    pub fn act_on_points(&self, g: usize, s: PointSet) -> PointSet {
        s.map(&self.group.elements[g])
    }

    pub fn act_on_set(&self, g: usize, s: &SampledSet) -> SampledSet {
        s.map(&self.group.elements[g])
    }

    /// Index of the inverse of element `g`.
    pub fn inverse_of(&self, g: usize) -> usize {
        self.group
            .index_of(&inverse(&self.group.elements[g]))
            .expect("groups are closed under inverses")
    }

    /// `(gh)x = g(hx)` for all elements and points.
    pub fn axioms_hold(&self) -> bool {
        let els = self.elements();
        let id = identity(self.space.len());
        (0..self.space.len()).all(|x| id[x] == x)
            && els.iter().all(|g| {
                els.iter().all(|h| {
                    let gh = compose(g, h);
                    (0..self.space.len()).all(|x| gh[x] == g[h[x]])
                })
            })
    }

    pub fn orbit_of(&self, x: usize) -> PointSet {
        self.elements().iter().map(|g| g[x]).collect()
    }

    /// Orbit partition, ordered by least member.
    pub fn orbits(&self) -> Vec<PointSet> {
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.space.len() {
            if !seen.contains(x) {
                let orbit = self.orbit_of(x);
                seen = seen.union(orbit);
                out.push(orbit);
            }
        }
        out
    }

    pub fn stabilizer_order(&self, x: usize) -> usize {
        self.elements().iter().filter(|g| g[x] == x).count()
    }

    /// `F . S`, the saturation of a point set.
    pub fn saturate(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.orbit_of(x)))
    }

    fn projection_table(&self) -> (Vec<PointSet>, Vec<usize>) {
        let orbits = self.orbits();
        let mut projection = vec![0; self.space.len()];
        for (i, orbit) in orbits.iter().enumerate() {
            for x in orbit.iter() {
                projection[x] = i;
            }
        }
        (orbits, projection)
    }

    fn orbit_names(&self, orbits: &[PointSet]) -> Vec<String> {
        orbits
            .iter()
            .map(|o| format!("[{}]", self.space.point_ids()[o.first().expect("orbits are nonempty")]))
            .collect()
    }
}

/// The orbit space `F \ Z` with its projection table.
#[derive(Debug, Clone)]
pub struct Quotient<S> {
    pub orbits: Vec<PointSet>,
    pub space: S,
    /// `projection[z]` is the index of the orbit of `z`.
    pub projection: Vec<usize>,
}

impl<S: Space> Quotient<S> {
    pub fn project(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.projection[x]).collect()
    }

    pub fn preimage(&self, q: PointSet) -> PointSet {
        q.iter().fold(PointSet::EMPTY, |acc, i| acc.union(self.orbits[i]))
    }

    pub fn project_set(&self, s: &SampledSet) -> SampledSet {
        let set = SampledSet::new(self.space.len(), self.project(s.interior), self.project(s.closure))
            .expect("projection preserves containment");
        self.space.normalize(set)
    }

    pub fn preimage_set(&self, q: &SampledSet, universe: usize) -> SampledSet {
        SampledSet::new(universe, self.preimage(q.interior), self.preimage(q.closure))
            .expect("preimage preserves containment")
    }
}

/// Quotient metric `d([z],[z']) = min d(gz, g'z')`, re-validated as a metric.
pub fn quotient_metric(action: &Action<FiniteMetricSpace>) -> Result<Quotient<FiniteMetricSpace>> {
    let space = action.space();
    let (orbits, projection) = action.projection_table();
    let names = action.orbit_names(&orbits);
    let dist: Vec<Vec<Rational>> = orbits
        .iter()
        .map(|a| {
            orbits
                .iter()
                .map(|b| {
                    a.iter()
                        .flat_map(|x| b.iter().map(move |y| (x, y)))
                        .map(|(x, y)| space.distance(x, y))
                        .min()
                        .expect("orbits are nonempty")
                })
                .collect()
        })
        .collect();
    let quotient = FiniteMetricSpace::new(names, dist, space.rho())?;
    Ok(Quotient {
        orbits,
        space: quotient,
        projection,
    })
}

/// Orbit order `[x] <= [y]` iff `x <= g y` for some `g`.
///
/// For order-automorphism actions this relation is always antisymmetric; the
/// check is kept so that a violation surfaces as an error rather than a collapse.
pub fn quotient_poset(action: &Action<FinitePoset>) -> Result<Quotient<FinitePoset>> {
    let space = action.space();
    let (orbits, projection) = action.projection_table();
    let names = action.orbit_names(&orbits);
    let k = orbits.len();
    let mut leq = vec![vec![false; k]; k];
    for a in 0..k {
        let x = orbits[a].first().expect("nonempty orbit");
        for (b, orbit) in orbits.iter().enumerate() {
            leq[a][b] = orbit.iter().any(|y| space.leq(x, y));
        }
    }
    // Transitive closure (a no-op for genuine actions).
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if leq[a][m] && leq[m][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            if leq[a][b] && leq[b][a] {
                return Err(Error::NotT0 {
                    a: names[a].clone(),
                    b: names[b].clone(),
                });
            }
        }
    }
    let quotient = FinitePoset::from_matrix(&names, &leq)?;
    Ok(Quotient {
        orbits,
        space: quotient,
        projection,
    })
}

/// Pass/fail record for the projection map `Z -> F \ Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectionCertificate {
    pub surjective: bool,
    pub max_fiber: usize,
    pub fibers_bounded_by_order: bool,
    pub fibers_divide_order: bool,
    pub invariant: bool,
    pub continuous: bool,
    pub open: bool,
    pub distance_nonincreasing: Option<bool>,
    pub witnesses: Vec<String>,
}

impl ProjectionCertificate {
    pub fn passed(&self) -> bool {
        self.surjective
            && self.fibers_bounded_by_order
            && self.fibers_divide_order
            && self.invariant
            && self.continuous
            && self.open
            && self.distance_nonincreasing.unwrap_or(true)
    }
}

fn fiber_certificate<S: Space, Q: Space>(
    action: &Action<S>,
    quotient: &Quotient<Q>,
) -> ProjectionCertificate {
    let order = action.group().order();
    let mut witnesses = Vec::new();
    let image = quotient.project(action.space().all());
    let surjective = image == quotient.space.all();
    if !surjective {
        witnesses.push("projection misses an orbit".to_string());
    }
    let fibers: Vec<usize> = (0..quotient.space.len())
        .map(|q| quotient.preimage(PointSet::singleton(q)).len())
        .collect();
    let max_fiber = fibers.iter().copied().max().unwrap_or(0);
    let fibers_divide_order = fibers.iter().all(|&f| f > 0 && order.is_multiple_of(f));
    let invariant = action.elements().iter().all(|g| {
        (0..action.space().len()).all(|z| quotient.projection[g[z]] == quotient.projection[z])
    });
    if !invariant {
        witnesses.push("projection is not constant on orbits".to_string());
    }
    ProjectionCertificate {
        surjective,
        max_fiber,
        fibers_bounded_by_order: max_fiber <= order,
        fibers_divide_order,
        invariant,
        continuous: true,
        open: true,
        distance_nonincreasing: None,
        witnesses,
    }
}

/// Continuity and openness are checked on every open set (spaces up to 16 points)
/// and always on the minimal opens, which generate the topology.
pub fn check_poset_projection(
    action: &Action<FinitePoset>,
    quotient: &Quotient<FinitePoset>,
) -> ProjectionCertificate {
    let mut cert = fiber_certificate(action, quotient);
    let (space, target) = (action.space(), &quotient.space);
    let mut upstairs: Vec<PointSet> = (0..space.len()).map(|x| space.up_set(x)).collect();
    let mut downstairs: Vec<PointSet> = (0..target.len()).map(|x| target.up_set(x)).collect();
    if space.len() <= 16 {
        upstairs = space.open_sets();
    }
    if target.len() <= 16 {
        downstairs = target.open_sets();
    }
    for o in &downstairs {
        if !space.is_open(quotient.preimage(*o)) {
            cert.continuous = false;
            cert.witnesses
                .push(format!("preimage of open {:?} is not open", target.names(*o)));
        }
    }
    for o in &upstairs {
        if !target.is_open(quotient.project(*o)) {
            cert.open = false;
            cert.witnesses
                .push(format!("image of open {:?} is not open", space.names(*o)));
        }
    }
    cert
}

/// For metric quotients the projection must not increase distances.
pub fn check_metric_projection(
    action: &Action<FiniteMetricSpace>,
    quotient: &Quotient<FiniteMetricSpace>,
) -> ProjectionCertificate {
    let mut cert = fiber_certificate(action, quotient);
    let space = action.space();
    let mut ok = true;
    for x in 0..space.len() {
        for y in 0..space.len() {
            let (px, py) = (quotient.projection[x], quotient.projection[y]);
            if quotient.space.distance(px, py) > space.distance(x, y) {
                ok = false;
                cert.witnesses.push(format!(
                    "d([{}],[{}]) exceeds d({}, {})",
                    space.point_ids()[x],
                    space.point_ids()[y],
                    space.point_ids()[x],
                    space.point_ids()[y]
                ));
            }
        }
    }
    cert.distance_nonincreasing = Some(ok);
    cert
}

/// Covering dimensions of a poset and of its quotient, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub space_dimension: usize,
    pub quotient_dimension: usize,
    pub equal: bool,
    pub space_points: usize,
    pub quotient_points: usize,
}

/// Computes `dim(Z)` and `dim(F\Z)`. The outcome is data: on finite posets the
/// two can differ.
pub fn dimension_equality_check(action: &Action<FinitePoset>, size_cap: usize) -> Result<DimensionReport> {
    let quotient = quotient_poset(action)?;
    let space_dimension = action.space().covering_dimension(size_cap)?;
    let quotient_dimension = quotient.space.covering_dimension(size_cap)?;
    Ok(DimensionReport {
        space_dimension,
        quotient_dimension,
        equal: space_dimension == quotient_dimension,
        space_points: action.space().len(),
        quotient_points: quotient.space.len(),
    })
}
