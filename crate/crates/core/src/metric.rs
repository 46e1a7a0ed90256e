//! Finite metric spaces with exact rational distances.
//!
//! Ball membership is strict for interiors and non-strict for closures; the
//! resolution floor `rho` bounds every radius from below.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Extended, Rational};
use crate::sets::{PointSet, SampledSet, Space, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetricSpace {
    ids: Vec<String>,
    dist: Vec<Vec<Rational>>,
    rho: Rational,
}

/// One ball of a ball-union set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ball {
    #[serde(rename = "c")]
    pub center: String,
    #[serde(rename = "r", with = "crate::rational::serde_str")]
    pub radius: Rational,
}

/// A union of balls, the concrete form of metric cover elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallUnionSet {
    pub balls: Vec<Ball>,
}

impl FiniteMetricSpace {
    /// Validates the metric axioms exhaustively (including every triangle).
    pub fn new(ids: Vec<String>, dist: Vec<Vec<Rational>>, rho: Rational) -> Result<FiniteMetricSpace> {
        let n = ids.len();
        if n > MAX_POINTS {
            return Err(Error::TooLarge(format!(
                "{n} points exceeds the {MAX_POINTS}-point limit"
            )));
        }
        for (i, id) in ids.iter().enumerate() {
            if ids[..i].contains(id) {
                return Err(Error::Invalid(format!("duplicate point id `{id}`")));
            }
        }
        if !rho.is_positive() {
            return Err(Error::Invalid("resolution floor rho must be positive".into()));
        }
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid(format!("dist must be a {n}x{n} matrix")));
        }
        for i in 0..n {
            if !dist[i][i].is_zero() {
                return Err(Error::Invalid(format!("d({0},{0}) must be 0", ids[i])));
            }
            for j in 0..n {
                if i != j && !dist[i][j].is_positive() {
                    return Err(Error::Invalid(format!(
                        "d({},{}) must be positive",
                        ids[i], ids[j]
                    )));
                }
                if dist[i][j] != dist[j][i] {
                    return Err(Error::Invalid(format!(
                        "d({},{}) is not symmetric",
                        ids[i], ids[j]
                    )));
                }
                for k in 0..n {
                    if dist[i][k] > dist[i][j] + dist[j][k] {
                        return Err(Error::Invalid(format!(
                            "triangle inequality fails for ({}, {}, {})",
                            ids[i], ids[j], ids[k]
                        )));
                    }
                }
            }
        }
        Ok(FiniteMetricSpace { ids, dist, rho })
    }

    /// The `n`-cycle with arc metric `d(i,j) = min(|i-j|, n-|i-j|)`; points are named `"0".."n-1"`.
    pub fn cycle(n: usize, rho: Rational) -> Result<FiniteMetricSpace> {
        let ids = (0..n).map(|i| i.to_string()).collect();
        let dist = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = i.abs_diff(j);
                        Rational::from_integer(a.min(n - a) as i64)
                    })
                    .collect()
            })
            .collect();
        FiniteMetricSpace::new(ids, dist, rho)
    }

    pub fn rho(&self) -> Rational {
        self.rho
    }

    pub fn with_rho(&self, rho: Rational) -> Result<FiniteMetricSpace> {
        FiniteMetricSpace::new(self.ids.clone(), self.dist.clone(), rho)
    }

    pub fn distance(&self, x: usize, y: usize) -> Rational {
        self.dist[x][y]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.dist
    }

    /// Largest distance in the space (0 for fewer than two points).
    pub fn max_distance(&self) -> Rational {
        self.dist
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Single ball around the point with index `center`.
    pub fn ball(&self, center: usize, radius: Rational) -> Result<SampledSet> {
        if radius < self.rho {
            return Err(Error::BelowResolution {
                radius: format_rational(&radius),
                rho: format_rational(&self.rho),
            });
        }
        let interior = (0..self.len())
            .filter(|&z| self.dist[center][z] < radius)
            .collect();
        let closure = (0..self.len())
            .filter(|&z| self.dist[center][z] <= radius)
            .collect();
        SampledSet::new(self.len(), interior, closure)
    }

    pub fn ball_union(&self, set: &BallUnionSet) -> Result<SampledSet> {
        let mut out = SampledSet::empty(self.len());
        for b in &set.balls {
            let c = self.index_of(&b.center)?;
            out = out.union(&self.ball(c, b.radius)?)?;
        }
        Ok(out)
    }

    /// Maximum pairwise distance over the closure members; 0 for the empty set.
    pub fn diameter(&self, set: &SampledSet) -> Rational {
        self.diameter_of(set.closure)
    }

    pub fn diameter_of(&self, members: PointSet) -> Rational {
        let pts: Vec<usize> = members.iter().collect();
        let mut best = Rational::zero();
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                best = best.max(self.dist[a][b]);
            }
        }
        best
    }

    /// `d(z, Z \ W)` measured against the interior members of `W`.
    pub fn dist_to_complement(&self, w: &SampledSet, z: usize) -> Extended {
        w.interior
            .complement(self.len())
            .iter()
            .map(|y| self.dist[z][y])
            .min()
            .map_or(Extended::Infinity, Extended::Finite)
    }

    /// Distance from `z` to a point set; `+∞` for the empty set.
    pub fn dist_to_set(&self, z: usize, set: PointSet) -> Extended {
        set.iter()
            .map(|y| self.dist[z][y])
            .min()
            .map_or(Extended::Infinity, Extended::Finite)
    }

    /// `{z : every y with d(z,y) < eps lies in set}`.
    pub fn erode(&self, set: PointSet, eps: Rational) -> PointSet {
        (0..self.len())
            .filter(|&z| (0..self.len()).all(|y| self.dist[z][y] >= eps || set.contains(y)))
            .collect()
    }

    /// `{z : some y in set has d(z,y) < eps}`.
    pub fn dilate(&self, set: PointSet, eps: Rational) -> PointSet {
        (0..self.len())
            .filter(|&z| set.iter().any(|y| self.dist[z][y] < eps))
            .collect()
    }

    /// Distinct distances from `center`, ascending (starting with 0).
    pub fn distance_levels(&self, center: usize) -> Vec<Rational> {
        let mut levels: Vec<Rational> = self.dist[center].clone();
        levels.sort();
        levels.dedup();
        levels
    }

    /// One ball per distinct achievable interior around each center, with the
    /// radius chosen to make the closure as small as possible.
    pub fn tight_balls(&self) -> Vec<(usize, Rational, SampledSet)> {
        let mut out = Vec::new();
        for c in 0..self.len() {
            let levels = self.distance_levels(c);
            for (i, &t) in levels.iter().enumerate() {
                // Interior {d <= t} needs a radius in (t, next].
                let radius = match levels.get(i + 1) {
                    Some(&next) => {
                        if self.rho > next {
                            continue;
                        }
                        let mid = (t + next) / Rational::from_integer(2);
                        mid.max(self.rho)
                    }
                    None => (t + self.rho).max(self.rho),
                };
                let ball = self.ball(c, radius).expect("radius respects rho");
                out.push((c, radius, ball));
            }
        }
        out
    }
}

impl Space for FiniteMetricSpace {
    fn len(&self) -> usize {
        self.ids.len()
    }

    fn point_ids(&self) -> &[String] {
        &self.ids
    }

    fn normalize(&self, set: SampledSet) -> SampledSet {
        set
    }
}
