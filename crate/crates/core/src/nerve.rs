//! Simplicial complexes, barycentric subdivision, canonical star covers, nerves
//! of covers and the weighted nerve map with its pull-backs.
//!
//! Open subsets of a realization `|K|` are never given coordinates. A point of
//! `|K|` lies in the interior of exactly one simplex of the subdivision `bK`, so
//! an open set is a coface-closed family of `bK` simplices (chains of `K`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::group::Action;
use crate::metric::FiniteMetricSpace;
use crate::rational::{format_rational, Extended, Rational};
use crate::sets::{PointSet, SampledSet, Space, MAX_POINTS};

/// Largest number of simplices a complex may have.
pub const SIMPLEX_CAP: usize = 4096;
/// Largest number of chains a subdivision may have.
pub const CHAIN_CAP: usize = 200_000;
/// Largest dimension accepted by [`canonical_cover_check`].
pub const CANONICAL_DIM_CAP: usize = 5;

/// A finite abstract simplicial complex on at most 64 vertices.
///
/// Simplices are vertex sets, stored sorted by dimension and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<PointSet>,
    index: BTreeMap<PointSet, usize>,
}

impl SimplicialComplex {
    /// The face closure of `facets`; every vertex becomes a 0-simplex.
    pub fn from_facets(vertices: Vec<String>, facets: &[PointSet]) -> Result<SimplicialComplex> {
        if vertices.len() > MAX_POINTS {
            return Err(Error::TooLarge(format!(
                "{} vertices (at most {MAX_POINTS} supported)",
                vertices.len()
            )));
        }
        if let Some(dup) = vertices.iter().duplicates().next() {
            return Err(Error::Invalid(format!("duplicate vertex `{dup}`")));
        }
        let all = PointSet::full(vertices.len());
        let mut faces = std::collections::BTreeSet::new();
        for v in 0..vertices.len() {
            faces.insert(PointSet::singleton(v));
        }
        for &f in facets {
            if f.is_empty() {
                return Err(Error::Invalid("empty simplex".into()));
            }
            if !f.is_subset(all) {
                return Err(Error::Invalid(format!("simplex {f:?} uses an unknown vertex")));
            }
            if f.len() > 13 {
                return Err(Error::TooLarge(format!("simplex of dimension {}", f.len() - 1)));
            }
            let members = f.to_vec();
            for mask in 1u64..(1 << members.len()) {
                let face: PointSet = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
                if faces.len() > SIMPLEX_CAP {
                    return Err(Error::TooLarge(format!("more than {SIMPLEX_CAP} simplices")));
                }
            }
        }
        let mut simplices: Vec<PointSet> = faces.into_iter().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let index = simplices.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(SimplicialComplex {
            vertices,
            simplices,
            index,
        })
    }

    /// Builds a complex from named simplices; vertices are numbered by first appearance.
    pub fn from_named<S: AsRef<str>>(simplices: &[Vec<S>]) -> Result<SimplicialComplex> {
        let mut vertices: Vec<String> = Vec::new();
        let mut facets = Vec::new();
        for s in simplices {
            let mut f = PointSet::EMPTY;
            for name in s {
                let name = name.as_ref();
                let v = match vertices.iter().position(|x| x == name) {
                    Some(v) => v,
                    None => {
                        vertices.push(name.to_string());
                        vertices.len() - 1
                    }
                };
                if v >= MAX_POINTS {
                    return Err(Error::TooLarge(format!("more than {MAX_POINTS} vertices")));
                }
                f.insert(v);
            }
            facets.push(f);
        }
        SimplicialComplex::from_facets(vertices, &facets)
    }

    /// The full simplex on vertices `v0 .. vn`.
    pub fn simplex(n: usize) -> Result<SimplicialComplex> {
        let vertices = (0..=n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::from_facets(vertices, &[PointSet::full(n + 1)])
    }

    /// Disjoint union; vertex names are prefixed with `a.` and `b.`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let shift = self.vertices.len();
        let vertices = self
            .vertices
            .iter()
            .map(|v| format!("a.{v}"))
            .chain(other.vertices.iter().map(|v| format!("b.{v}")))
            .collect();
        let facets: Vec<PointSet> = self
            .simplices
            .iter()
            .copied()
            .chain(
                other
                    .simplices
                    .iter()
                    .map(|s| s.iter().map(|v| v + shift).collect()),
            )
            .collect();
        SimplicialComplex::from_facets(vertices, &facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[PointSet] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, simplex: PointSet) -> Option<usize> {
        self.index.get(&simplex).copied()
    }

    pub fn contains(&self, simplex: PointSet) -> bool {
        self.index.contains_key(&simplex)
    }

    /// Dimension of the complex; 0 for the empty complex.
    pub fn dim(&self) -> usize {
        self.simplices.last().map_or(0, |s| s.len() - 1)
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for s in &self.simplices {
            f[s.len() - 1] += 1;
        }
        f
    }

    /// Simplices contained in no other simplex.
    pub fn facets(&self) -> Vec<PointSet> {
        self.simplices
            .iter()
            .copied()
            .filter(|&s| !self.simplices.iter().any(|&t| t != s && s.is_subset(t)))
            .collect()
    }

    /// `{a,b}` style name of a simplex.
    pub fn name(&self, simplex: PointSet) -> String {
        format!(
            "{{{}}}",
            simplex.iter().map(|v| self.vertices[v].as_str()).join(",")
        )
    }

    /// Graphviz rendering of the 1-skeleton; higher simplices are listed as comments.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for s in &self.simplices {
            match s.len() {
                2 => {
                    let e = s.to_vec();
                    let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.vertices[e[0]], self.vertices[e[1]]);
                }
                n if n > 2 => {
                    let _ = writeln!(out, "  // {}-simplex {}", n - 1, self.name(*s));
                }
                _ => {}
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The barycentric subdivision `bK`: one vertex per simplex of `K`, one simplex
/// per chain `s0 ⊂ s1 ⊂ ..`.
#[derive(Debug, Clone)]
pub struct Subdivision {
    base: SimplicialComplex,
    /// Chains as increasing lists of simplex indices of the base complex.
    chains: Vec<Vec<usize>>,
    chain_index: BTreeMap<Vec<usize>, usize>,
}

pub fn barycentric_subdivision(k: &SimplicialComplex) -> Result<Subdivision> {
    let n = k.len();
    // Proper cofaces of each simplex.
    let up: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && k.simplices[i].is_subset(k.simplices[j]))
                .collect()
        })
        .collect();
    let mut chains = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("chains are nonempty");
        for &next in &up[last] {
            let mut longer = chain.clone();
            longer.push(next);
            stack.push(longer);
        }
        chains.push(chain);
        if chains.len() > CHAIN_CAP {
            return Err(Error::TooLarge(format!("subdivision has more than {CHAIN_CAP} simplices")));
        }
    }
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let chain_index = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    Ok(Subdivision {
        base: k.clone(),
        chains,
        chain_index,
    })
}

impl Subdivision {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// Number of vertices of `bK`, i.e. simplices of `K`.
    pub fn vertex_count(&self) -> usize {
        self.base.len()
    }

    pub fn dim(&self) -> usize {
        self.chains.last().map_or(0, |c| c.len() - 1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for c in &self.chains {
            f[c.len() - 1] += 1;
        }
        f
    }

    pub fn chain_index(&self, chain: &[usize]) -> Option<usize> {
        self.chain_index.get(chain).copied()
    }

    /// Open star of the barycenter of base simplex `sigma`: every chain through it.
    pub fn star(&self, sigma: usize) -> RealizationOpen {
        RealizationOpen {
            chains: (0..self.chains.len())
                .filter(|&c| self.chains[c].contains(&sigma))
                .collect(),
        }
    }

    /// Whether a family of chains is closed under passing to longer chains.
    pub fn is_coface_closed(&self, open: &RealizationOpen) -> bool {
        open.chains.iter().all(|&c| {
            let chain = &self.chains[c];
            (0..self.chains.len())
                .filter(|&d| self.chains[d].len() > chain.len() && chain.iter().all(|x| self.chains[d].contains(x)))
                .all(|d| open.contains(d))
        })
    }

    pub fn chain_name(&self, chain: usize) -> String {
        self.chains[chain]
            .iter()
            .map(|&s| self.base.name(self.base.simplices[s]))
            .join("<")
    }

    /// Graphviz rendering of the 1-skeleton of `bK`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for s in self.base.simplices() {
            let _ = writeln!(out, "  \"{}\";", self.base.name(*s));
        }
        for c in self.chains.iter().filter(|c| c.len() == 2) {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.base.name(self.base.simplices[c[0]]),
                self.base.name(self.base.simplices[c[1]])
            );
        }
        out.push_str("}\n");
        out
    }
}

/// An open subset of `|K|`: a coface-closed set of chain indices of `bK`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealizationOpen {
    chains: Vec<usize>,
}

impl RealizationOpen {
    pub fn chains(&self) -> &[usize] {
        &self.chains
    }

    pub fn contains(&self, chain: usize) -> bool {
        self.chains.binary_search(&chain).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn intersects(&self, other: &RealizationOpen) -> bool {
        self.chains.iter().any(|&c| other.contains(c))
    }

    pub fn intersection(&self, other: &RealizationOpen) -> RealizationOpen {
        RealizationOpen {
            chains: self.chains.iter().copied().filter(|&c| other.contains(c)).collect(),
        }
    }
}

/// Graded canonical cover: `grades[j]` holds `(sigma, st(sigma^))` for every j-simplex.
#[derive(Debug, Clone)]
pub struct CanonicalCover {
    pub grades: Vec<Vec<(usize, RealizationOpen)>>,
}

pub fn canonical_cover(sub: &Subdivision) -> CanonicalCover {
    let k = sub.base();
    let mut grades = vec![Vec::new(); k.dim() + 1];
    for (i, s) in k.simplices().iter().enumerate() {
        grades[s.len() - 1].push((i, sub.star(i)));
    }
    CanonicalCover { grades }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCount {
    pub simplex: String,
    pub dim: usize,
    /// Stars of grade at most `dim` meeting this simplex's star.
    pub count: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalCoverReport {
    pub covering: bool,
    pub same_grade_disjoint: bool,
    /// Meeting stars always belong to nested simplices.
    pub meeting_implies_nested: bool,
    pub counts: Vec<StarCount>,
    pub bound_holds: bool,
    pub witnesses: Vec<String>,
}

impl CanonicalCoverReport {
    pub fn passed(&self) -> bool {
        self.covering && self.same_grade_disjoint && self.meeting_implies_nested && self.bound_holds
    }
}

/// Verifies the canonical cover of `bK` by enumerating chains.
pub fn canonical_cover_check(k: &SimplicialComplex) -> Result<CanonicalCoverReport> {
    if k.dim() > CANONICAL_DIM_CAP {
        return Err(Error::TooLarge(format!(
            "dimension {} exceeds the cap {CANONICAL_DIM_CAP}",
            k.dim()
        )));
    }
    let sub = barycentric_subdivision(k)?;
    let cover = canonical_cover(&sub);
    let stars: Vec<(usize, &RealizationOpen)> = cover
        .grades
        .iter()
        .flat_map(|g| g.iter().map(|(s, o)| (*s, o)))
        .collect();
    let mut witnesses = Vec::new();

    let covering = (0..sub.chains().len()).all(|c| stars.iter().any(|(_, o)| o.contains(c)));
    if !covering {
        witnesses.push("some chain lies in no star".to_string());
    }

    let mut same_grade_disjoint = true;
    for grade in &cover.grades {
        for ((a, sa), (b, sb)) in grade.iter().tuple_combinations() {
            if sa.intersects(sb) {
                same_grade_disjoint = false;
                witnesses.push(format!(
                    "stars of {} and {} meet",
                    k.name(k.simplices()[*a]),
                    k.name(k.simplices()[*b])
                ));
            }
        }
    }

    let mut meeting_implies_nested = true;
    for ((a, sa), (b, sb)) in stars.iter().tuple_combinations() {
        let (x, y) = (k.simplices()[*a], k.simplices()[*b]);
        if sa.intersects(sb) && !x.is_subset(y) && !y.is_subset(x) {
            meeting_implies_nested = false;
            witnesses.push(format!("stars of {} and {} meet", k.name(x), k.name(y)));
        }
    }

    let mut counts = Vec::new();
    let mut bound_holds = true;
    for &(s, star) in &stars {
        let sigma = k.simplices()[s];
        let dim = sigma.len() - 1;
        let count = stars
            .iter()
            .filter(|(t, other)| k.simplices()[*t].len() <= sigma.len() && other.intersects(star))
            .count();
        let bound = (1usize << (dim + 1)) - 1;
        if count > bound {
            bound_holds = false;
            witnesses.push(format!("{} meets {count} stars (bound {bound})", k.name(sigma)));
        }
        counts.push(StarCount {
            simplex: k.name(sigma),
            dim,
            count,
            bound,
        });
    }

    Ok(CanonicalCoverReport {
        covering,
        same_grade_disjoint,
        meeting_implies_nested,
        counts,
        bound_holds,
        witnesses,
    })
}

/// Nerve of a cover: one vertex per element (named by its label), one simplex per
/// subfamily whose interiors share a point.
pub fn nerve(cover: &Cover) -> Result<SimplicialComplex> {
    if cover.len() > MAX_POINTS {
        return Err(Error::TooLarge(format!(
            "cover with {} elements (nerve supports {MAX_POINTS})",
            cover.len()
        )));
    }
    if let Some(i) = (0..cover.len()).find(|&i| cover.get(i).interior.is_empty()) {
        return Err(Error::Invalid(format!(
            "element `{}` has empty interior",
            cover.label(i)
        )));
    }
    let facets: Vec<PointSet> = (0..cover.universe())
        .map(|z| cover.containing(z).into_iter().collect::<PointSet>())
        .filter(|s| !s.is_empty())
        .collect();
    SimplicialComplex::from_facets(cover.labels().to_vec(), &facets)
}

/// A point of the nerve's realization in barycentric coordinates, one per cover element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NervePoint {
    #[serde(serialize_with = "serialize_coords")]
    pub coords: Vec<Rational>,
}

fn serialize_coords<S: serde::Serializer>(coords: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(coords.iter().map(format_rational))
}

impl NervePoint {
    pub fn support(&self) -> PointSet {
        (0..self.coords.len())
            .filter(|&i| self.coords[i] > Rational::zero())
            .collect()
    }

    /// The threshold sets `{W : coord_W >= t}` over the distinct positive
    /// coordinate values, smallest set first.
    pub fn carrier_chain(&self) -> Vec<PointSet> {
        let mut levels: Vec<Rational> = self
            .coords
            .iter()
            .copied()
            .filter(|c| *c > Rational::zero())
            .collect();
        levels.sort_by(|a, b| b.cmp(a));
        levels.dedup();
        levels
            .into_iter()
            .map(|t| (0..self.coords.len()).filter(|&i| self.coords[i] >= t).collect())
            .collect()
    }

    /// Membership in the open star of the barycenter of `sigma` in the subdivided nerve.
    pub fn in_star(&self, sigma: PointSet) -> bool {
        self.carrier_chain().contains(&sigma)
    }

    /// Membership in the closed star: `sigma` is nested with every threshold set.
    pub fn in_closed_star(&self, sigma: PointSet) -> bool {
        self.carrier_chain()
            .iter()
            .all(|&t| t.is_subset(sigma) || sigma.is_subset(t))
    }
}

/// Free-function form of [`NervePoint::carrier_chain`].
pub fn carrier_chain(p: &NervePoint) -> Vec<PointSet> {
    p.carrier_chain()
}

/// `f(z) = sum_W d(z, Z \ W) / sum_W' d(z, Z \ W') [W]`.
///
/// When some interior is the whole space its distance is `+∞`; the weight is
/// then split evenly among those elements and all others get zero.
pub fn nerve_map(space: &FiniteMetricSpace, cover: &Cover, z: usize) -> Result<NervePoint> {
    if cover.universe() != space.len() {
        return Err(Error::SpaceMismatch {
            left: cover.universe(),
            right: space.len(),
        });
    }
    if z >= space.len() {
        return Err(Error::Invalid(format!("point index {z} out of range")));
    }
    let distances: Vec<Extended> = cover
        .elements()
        .iter()
        .map(|w| space.dist_to_complement(w, z))
        .collect();
    let infinite = distances.iter().filter(|d| **d == Extended::Infinity).count();
    let coords: Vec<Rational> = if infinite > 0 {
        let share = Rational::one() / Rational::from_integer(infinite as i64);
        distances
            .iter()
            .map(|d| if *d == Extended::Infinity { share } else { Rational::zero() })
            .collect()
    } else {
        let weights: Vec<Rational> = distances.iter().map(|d| d.finite().expect("finite")).collect();
        let total: Rational = weights.iter().copied().sum();
        if total.is_zero() {
            return Err(Error::Invalid(format!(
                "point `{}` lies in no interior of the cover",
                space.point_ids()[z]
            )));
        }
        weights.into_iter().map(|w| w / total).collect()
    };
    Ok(NervePoint { coords })
}

/// Checks `f(g z)_{g W} = f(z)_W` for every group element, point and element.
///
/// Returns `None` when the cover is not closed under the action.
pub fn nerve_map_equivariant(action: &Action<FiniteMetricSpace>, cover: &Cover) -> Result<Option<bool>> {
    let space = action.space();
    let points: Vec<NervePoint> = (0..space.len())
        .map(|z| nerve_map(space, cover, z))
        .collect::<Result<_>>()?;
    for g in 0..action.group().order() {
        let mut image = Vec::with_capacity(cover.len());
        for w in cover.elements() {
            let moved = action.act_on_set(g, w);
            match cover.elements().iter().position(|x| *x == moved) {
                Some(i) => image.push(i),
                None => return Ok(None),
            }
        }
        for z in 0..space.len() {
            let gz = action.act(g, z);
            if (0..cover.len()).any(|i| points[gz].coords[image[i]] != points[z].coords[i]) {
                return Ok(Some(false));
            }
        }
    }
    Ok(Some(true))
}

/// One element `f^-1(st(sigma^))` of the pulled-back canonical cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PulledElement {
    /// Simplex of the nerve, as a set of cover element indices.
    pub simplex: PointSet,
    /// Interior from the open star, closure from the closed star.
    pub set: SampledSet,
}

#[derive(Debug, Clone)]
pub struct PullBack {
    pub nerve: SimplicialComplex,
    pub points: Vec<NervePoint>,
    /// `grades[j]` holds the nonempty preimages of stars of j-simplices.
    pub grades: Vec<Vec<PulledElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PullBackReport {
    pub covers: bool,
    /// Every element lies inside an element of the cover that is a vertex of its simplex.
    pub refines: bool,
    pub same_grade_disjoint: bool,
    pub prefix_counts_bounded: bool,
    pub max_prefix_count: Vec<usize>,
    pub witnesses: Vec<String>,
}

impl PullBackReport {
    pub fn passed(&self) -> bool {
        self.covers && self.refines && self.same_grade_disjoint && self.prefix_counts_bounded
    }
}

/// Pulls the canonical cover of the subdivided nerve back along the nerve map.
pub fn pull_back_canonical(space: &FiniteMetricSpace, cover: &Cover) -> Result<PullBack> {
    let nerve = nerve(cover)?;
    let n = space.len();
    let points: Vec<NervePoint> = (0..n).map(|z| nerve_map(space, cover, z)).collect::<Result<_>>()?;
    let chains: Vec<Vec<PointSet>> = points.iter().map(NervePoint::carrier_chain).collect();
    let mut grades = vec![Vec::new(); nerve.dim() + 1];
    for &sigma in nerve.simplices() {
        let interior: PointSet = (0..n).filter(|&z| chains[z].contains(&sigma)).collect();
        if interior.is_empty() {
            continue;
        }
        let closure: PointSet = (0..n)
            .filter(|&z| chains[z].iter().all(|&t| t.is_subset(sigma) || sigma.is_subset(t)))
            .collect();
        let set = SampledSet::new(n, interior, closure)?;
        grades[sigma.len() - 1].push(PulledElement { simplex: sigma, set });
    }
    Ok(PullBack {
        nerve,
        points,
        grades,
    })
}

impl PullBack {
    /// All grades flattened into one family, labelled by the nerve simplex.
    pub fn as_cover(&self, universe: usize) -> Result<Cover> {
        let (elements, labels) = self
            .grades
            .iter()
            .flatten()
            .map(|e| (e.set, format!("st{}", self.nerve.name(e.simplex))))
            .unzip();
        Cover::new(universe, elements, labels)
    }

    pub fn check(&self, cover: &Cover) -> PullBackReport {
        let mut witnesses = Vec::new();
        let flat: Vec<(usize, &PulledElement)> = self
            .grades
            .iter()
            .enumerate()
            .flat_map(|(j, g)| g.iter().map(move |e| (j, e)))
            .collect();

        let covered = flat
            .iter()
            .fold(PointSet::EMPTY, |acc, (_, e)| acc.union(e.set.interior));
        let covers = covered == PointSet::full(cover.universe());
        if !covers {
            witnesses.push(format!("uncovered points {:?}", PointSet::full(cover.universe()).difference(covered)));
        }

        let mut refines = true;
        for (_, e) in &flat {
            let inside = e
                .simplex
                .iter()
                .any(|w| e.set.interior.is_subset(cover.get(w).interior));
            if !inside {
                refines = false;
                witnesses.push(format!("st{} lies in none of its vertices", self.nerve.name(e.simplex)));
            }
        }

        let mut same_grade_disjoint = true;
        for grade in &self.grades {
            for (a, b) in grade.iter().tuple_combinations() {
                if a.set.interior.intersects(b.set.interior) {
                    same_grade_disjoint = false;
                    witnesses.push(format!(
                        "st{} meets st{}",
                        self.nerve.name(a.simplex),
                        self.nerve.name(b.simplex)
                    ));
                }
            }
        }

        let mut prefix_counts_bounded = true;
        let mut max_prefix_count = vec![0; self.grades.len()];
        for &(j, e) in &flat {
            let count = flat
                .iter()
                .filter(|(i, other)| *i <= j && other.set.interior.intersects(e.set.interior))
                .count();
            max_prefix_count[j] = max_prefix_count[j].max(count);
            if count > (1 << (j + 1)) - 1 {
                prefix_counts_bounded = false;
                witnesses.push(format!("st{} meets {count} elements", self.nerve.name(e.simplex)));
            }
        }

        PullBackReport {
            covers,
            refines,
            same_grade_disjoint,
            prefix_counts_bounded,
            max_prefix_count,
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::rational::{int, ratio};

    fn triple_cover() -> (FiniteMetricSpace, Cover) {
        let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
        let elements = [1, 3, 5].iter().map(|&c| z6.ball(c, ratio(3, 2)).unwrap()).collect();
        let cover = Cover::new(6, elements, vec!["W1".into(), "W2".into(), "W3".into()]).unwrap();
        (z6, cover)
    }

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    /// Counts chains of the face lattice by brute force over ordered subsets.
    fn chain_count_oracle(k: &SimplicialComplex, len: usize) -> usize {
        k.simplices()
            .iter()
            .permutations(len)
            .filter(|p| p.windows(2).all(|w| w[0].is_subset(*w[1]) && w[0] != w[1]))
            .count()
    }

    #[test]
    fn subdivision_examples() {
        let edge = SimplicialComplex::from_named(&[vec!["a", "b"]]).unwrap();
        let b = barycentric_subdivision(&edge).unwrap();
        assert_eq!(b.f_vector(), vec![3, 2]);

        let point = SimplicialComplex::simplex(0).unwrap();
        assert_eq!(barycentric_subdivision(&point).unwrap().f_vector(), vec![1]);

        let tri = SimplicialComplex::simplex(2).unwrap();
        let b = barycentric_subdivision(&tri).unwrap();
        assert_eq!(b.f_vector(), vec![7, 12, 6]);
        assert_eq!(b.dim(), tri.dim());
        for len in 1..=3 {
            assert_eq!(b.f_vector()[len - 1], chain_count_oracle(&tri, len));
        }
    }

    #[test]
    fn canonical_cover_examples() {
        let tri = SimplicialComplex::simplex(2).unwrap();
        let sub = barycentric_subdivision(&tri).unwrap();
        let cover = canonical_cover(&sub);
        let sizes: Vec<usize> = cover.grades.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 1]);
        for grade in &cover.grades {
            for (_, star) in grade {
                assert!(sub.is_coface_closed(star));
            }
        }

        let report = canonical_cover_check(&tri).unwrap();
        assert!(report.passed());
        let edge = report.counts.iter().find(|c| c.dim == 1).unwrap();
        assert_eq!(edge.count, 3);

        let point = SimplicialComplex::simplex(0).unwrap();
        let sub = barycentric_subdivision(&point).unwrap();
        let cover = canonical_cover(&sub);
        assert_eq!(cover.grades[0].len(), 1);
        assert_eq!(cover.grades[0][0].1.len(), sub.chains().len());
    }

    #[test]
    fn tetrahedron_top_count_is_fifteen() {
        let report = canonical_cover_check(&SimplicialComplex::simplex(3).unwrap()).unwrap();
        assert!(report.passed());
        let top = report.counts.iter().find(|c| c.dim == 3).unwrap();
        assert_eq!((top.count, top.bound), (15, 15));
    }

    #[test]
    fn disjoint_simplices_pass() {
        let k = SimplicialComplex::simplex(2)
            .unwrap()
            .disjoint_union(&SimplicialComplex::simplex(1).unwrap())
            .unwrap();
        assert!(canonical_cover_check(&k).unwrap().passed());
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let k = SimplicialComplex::simplex(6).unwrap();
        assert!(matches!(canonical_cover_check(&k), Err(Error::TooLarge(_))));
    }

    #[test]
    fn nerve_examples() {
        let (_, cover) = triple_cover();
        let n = nerve(&cover).unwrap();
        assert_eq!(n.f_vector(), vec![3, 3]);

        let apart = Cover::unlabeled(
            4,
            vec![SampledSet::exact(4, set(&[0, 1])), SampledSet::exact(4, set(&[2, 3]))],
        )
        .unwrap();
        assert_eq!(nerve(&apart).unwrap().f_vector(), vec![2]);

        let common = Cover::unlabeled(
            3,
            vec![
                SampledSet::exact(3, set(&[0, 1])),
                SampledSet::exact(3, set(&[0, 2])),
                SampledSet::exact(3, set(&[0])),
            ],
        )
        .unwrap();
        assert_eq!(nerve(&common).unwrap().f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn nerve_map_examples() {
        let (z6, cover) = triple_cover();
        let p = nerve_map(&z6, &cover, 1).unwrap();
        assert_eq!(p.coords, vec![int(1), int(0), int(0)]);
        let p = nerve_map(&z6, &cover, 2).unwrap();
        assert_eq!(p.coords, vec![ratio(1, 2), ratio(1, 2), int(0)]);
        for z in 0..6 {
            let p = nerve_map(&z6, &cover, z).unwrap();
            assert_eq!(p.coords.iter().copied().sum::<Rational>(), int(1));
            for w in 0..3 {
                assert_eq!(p.coords[w] > int(0), cover.get(w).interior.contains(z));
            }
        }
    }

    #[test]
    fn whole_space_elements_share_weight() {
        let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
        let cover = Cover::unlabeled(6, vec![SampledSet::whole(6)]).unwrap();
        assert_eq!(nerve_map(&z6, &cover, 4).unwrap().coords, vec![int(1)]);
    }

    #[test]
    fn carrier_chain_examples() {
        let p = NervePoint {
            coords: vec![ratio(1, 2), ratio(1, 2), int(0)],
        };
        assert_eq!(carrier_chain(&p), vec![set(&[0, 1])]);
        let p = NervePoint {
            coords: vec![ratio(2, 3), ratio(1, 3), int(0)],
        };
        assert_eq!(carrier_chain(&p), vec![set(&[0]), set(&[0, 1])]);
        assert!(p.in_star(set(&[0])) && p.in_star(set(&[0, 1])) && !p.in_star(set(&[1])));
        let p = NervePoint {
            coords: vec![int(0), int(1)],
        };
        assert_eq!(carrier_chain(&p), vec![set(&[1])]);
    }

    #[test]
    fn pull_back_examples() {
        let (z6, cover) = triple_cover();
        let pb = pull_back_canonical(&z6, &cover).unwrap();
        let edge = pb.grades[1].iter().find(|e| e.simplex == set(&[0, 1])).unwrap();
        assert_eq!(edge.set.interior, set(&[2]));
        let report = pb.check(&cover);
        assert!(report.passed(), "{report:?}");

        let one = Cover::unlabeled(6, vec![SampledSet::whole(6)]).unwrap();
        let pb = pull_back_canonical(&z6, &one).unwrap();
        assert_eq!(pb.grades.len(), 1);
        assert_eq!(pb.grades[0][0].set.interior, PointSet::full(6));
    }

    #[test]
    fn nerve_map_is_equivariant_under_rotation() {
        let (z6, cover) = triple_cover();
        let rot = Action::new(PermGroup::rotations(6, 2).unwrap(), z6).unwrap();
        assert_eq!(nerve_map_equivariant(&rot, &cover).unwrap(), Some(true));
    }

    #[test]
    fn dot_export_lists_edges() {
        let (_, cover) = triple_cover();
        let dot = nerve(&cover).unwrap().to_dot("nerve");
        assert!(dot.contains("\"W1\" -- \"W2\";"));
        let sub = barycentric_subdivision(&SimplicialComplex::simplex(1).unwrap()).unwrap();
        assert_eq!(sub.to_dot("b").matches(" -- ").count(), 2);
    }
}
