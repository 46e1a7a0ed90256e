//! JSON file formats.
//!
//! * poset: `{"points":["a","b"],"leq":[["a","b"]]}`
//! * metric space: `{"points":["0","1"],"dist":[[0,1],[1,0]],"rho":"1/2"}`
//! * group: `{"generators":[[1,0,3,2]]}`, permutations of point indices
//! * cover: `[{"label":"U0","balls":[{"c":"0","r":"3/2"}]},{"label":"U1","points":["a"]}]`
//! * complex: `{"simplices":[["a","b","c"]]}`
//!
//! Rationals are `"p/q"` strings; integers are accepted as numbers too.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::metric::{Ball, FiniteMetricSpace};
use crate::nerve::SimplicialComplex;
use crate::poset::FinitePoset;
use crate::rational::{format_rational, Rational};
use crate::sets::{PointSet, SampledSet, Space};

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Either kind of space, told apart by the `leq` or `dist` key.
#[derive(Debug, Clone)]
pub enum AnySpace {
    Poset(FinitePoset),
    Metric(FiniteMetricSpace),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    points: Vec<String>,
    #[serde(default)]
    leq: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct Rat(#[serde(with = "crate::rational::serde_str")] Rational);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MetricFile {
    points: Vec<String>,
    dist: Vec<Vec<Rat>>,
    rho: Rat,
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let file: PosetFile = parse_json(text, "poset")?;
    FinitePoset::from_relation(&file.points, &file.leq)
}

pub fn parse_metric(text: &str) -> Result<FiniteMetricSpace> {
    let file: MetricFile = parse_json(text, "metric space")?;
    let dist = file
        .dist
        .into_iter()
        .map(|row| row.into_iter().map(|r| r.0).collect())
        .collect();
    FiniteMetricSpace::new(file.points, dist, file.rho.0)
}

pub fn parse_space(text: &str) -> Result<AnySpace> {
    let value: Value = parse_json(text, "space")?;
    if value.get("dist").is_some() {
        parse_metric(text).map(AnySpace::Metric)
    } else if value.get("leq").is_some() || value.get("points").is_some() {
        parse_poset(text).map(AnySpace::Poset)
    } else {
        Err(Error::Parse("space: expected a `leq` or `dist` key".into()))
    }
}

pub fn poset_to_json(p: &FinitePoset) -> Value {
    let ids = p.point_ids();
    let leq: Vec<(&str, &str)> = (0..p.len())
        .flat_map(|x| {
            p.up_set(x)
                .iter()
                .filter(move |&y| y != x)
                .map(move |y| (ids[x].as_str(), ids[y].as_str()))
        })
        .collect();
    json!({ "points": ids, "leq": leq })
}

pub fn metric_to_json(m: &FiniteMetricSpace) -> Value {
    let dist: Vec<Vec<String>> = m
        .matrix()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    json!({ "points": m.point_ids(), "dist": dist, "rho": format_rational(&m.rho()) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    generators: Vec<Vec<usize>>,
}

/// Generators are permutations of the space's point indices.
pub fn parse_group(text: &str, degree: usize, cap: usize) -> Result<PermGroup> {
    let file: GroupFile = parse_json(text, "group")?;
    PermGroup::generated(degree, file.generators, cap)
}

pub fn group_to_json(g: &PermGroup) -> Value {
    json!({ "generators": g.generators() })
}

/// One element of a cover file.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SetDescriptor {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub balls: Option<Vec<Ball>>,
    /// Interior members; `interior` is accepted as an alias.
    #[serde(default, alias = "interior", skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    /// Closure members for explicit metric sets; defaults to the points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<Vec<String>>,
}

fn point_set<S: Space>(space: &S, names: &[String]) -> Result<PointSet> {
    names.iter().map(|n| space.index_of(n)).collect()
}

fn descriptor_to_poset_set(p: &FinitePoset, d: &SetDescriptor) -> Result<SampledSet> {
    if d.balls.is_some() {
        return Err(Error::Invalid(format!(
            "`{}`: poset sets are given by their points only",
            d.label
        )));
    }
    let points = d
        .points
        .as_ref()
        .ok_or_else(|| Error::Invalid(format!("`{}` has no points", d.label)))?;
    let s = point_set(p, points)?;
    let set = p
        .open_region(s)
        .map_err(|_| Error::Invalid(format!("`{}` is not open (not an up-set)", d.label)))?;
    if let Some(closure) = &d.closure {
        if point_set(p, closure)? != set.closure {
            return Err(Error::Invalid(format!("`{}`: closure does not match the points", d.label)));
        }
    }
    Ok(set)
}

fn descriptor_to_metric_set(m: &FiniteMetricSpace, d: &SetDescriptor) -> Result<SampledSet> {
    match (&d.balls, &d.points) {
        (Some(balls), None) if d.closure.is_none() => m.ball_union(&crate::metric::BallUnionSet { balls: balls.clone() }),
        (None, Some(points)) => {
            let interior = point_set(m, points)?;
            let closure = match &d.closure {
                Some(c) => point_set(m, c)?,
                None => interior,
            };
            SampledSet::new(m.len(), interior, closure)
        }
        _ => Err(Error::Invalid(format!(
            "`{}` needs exactly one of `balls` or `points`",
            d.label
        ))),
    }
}

fn parse_descriptors(text: &str) -> Result<Vec<SetDescriptor>> {
    parse_json(text, "cover")
}

fn build_cover(
    universe: usize,
    descriptors: &[SetDescriptor],
    mut to_set: impl FnMut(&SetDescriptor) -> Result<SampledSet>,
) -> Result<Cover> {
    let elements = descriptors.iter().map(&mut to_set).collect::<Result<_>>()?;
    Cover::new(universe, elements, descriptors.iter().map(|d| d.label.clone()).collect())
}

pub fn parse_cover(text: &str, space: &AnySpace) -> Result<Cover> {
    let descriptors = parse_descriptors(text)?;
    match space {
        AnySpace::Poset(p) => build_cover(p.len(), &descriptors, |d| descriptor_to_poset_set(p, d)),
        AnySpace::Metric(m) => build_cover(m.len(), &descriptors, |d| descriptor_to_metric_set(m, d)),
    }
}

/// Sets keyed by the labels of `cover`, in cover order; missing labels are empty.
pub fn parse_alpha(text: &str, space: &FiniteMetricSpace, cover: &Cover) -> Result<Vec<SampledSet>> {
    let descriptors = parse_descriptors(text)?;
    let mut out = vec![SampledSet::empty(space.len()); cover.len()];
    for d in &descriptors {
        let i = cover
            .labels()
            .iter()
            .position(|l| *l == d.label)
            .ok_or_else(|| Error::Invalid(format!("alpha names unknown element `{}`", d.label)))?;
        out[i] = descriptor_to_metric_set(space, d)?;
    }
    Ok(out)
}

/// Explicit form of a cover that [`parse_cover`] reads back.
pub fn cover_to_json<S: Space>(space: &S, cover: &Cover) -> Value {
    Value::Array(
        cover
            .elements()
            .iter()
            .zip(cover.labels())
            .map(|(e, l)| set_to_json(space, l, e))
            .collect(),
    )
}

pub fn set_to_json<S: Space>(space: &S, label: &str, set: &SampledSet) -> Value {
    json!({
        "label": label,
        "interior": space.names(set.interior),
        "closure": space.names(set.closure),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    simplices: Vec<Vec<String>>,
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = parse_json(text, "complex")?;
    SimplicialComplex::from_named(&file.simplices)
}

pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    let facets: Vec<Vec<&str>> = k
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| k.vertices()[v].as_str()).collect())
        .collect();
    json!({ "simplices": facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn poset_round_trip() {
        let p = FinitePoset::circle();
        let back = parse_poset(&poset_to_json(&p).to_string()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn metric_round_trip_and_integer_entries() {
        let m = FiniteMetricSpace::cycle(4, ratio(1, 2)).unwrap();
        assert_eq!(parse_metric(&metric_to_json(&m).to_string()).unwrap(), m);
        let text = r#"{"points":["a","b"],"dist":[[0,"3/2"],["3/2",0]],"rho":1}"#;
        let m = parse_metric(text).unwrap();
        assert_eq!(m.distance(0, 1), ratio(3, 2));
        assert_eq!(m.rho(), int(1));
    }

    #[test]
    fn space_kind_is_detected() {
        assert!(matches!(parse_space(r#"{"points":["a"],"leq":[]}"#).unwrap(), AnySpace::Poset(_)));
        assert!(matches!(
            parse_space(r#"{"points":["a"],"dist":[[0]],"rho":1}"#).unwrap(),
            AnySpace::Metric(_)
        ));
        assert!(matches!(parse_space("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn covers_parse_for_both_tiers() {
        let p = AnySpace::Poset(FinitePoset::circle());
        let c = parse_cover(r#"[{"label":"A","points":["e1"]},{"label":"B","points":["x1","e1","e2"]}]"#, &p).unwrap();
        assert_eq!(c.labels(), &["A".to_string(), "B".to_string()]);
        assert!(parse_cover(r#"[{"label":"A","points":["x1"]}]"#, &p).is_err());

        let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
        let m = AnySpace::Metric(z6.clone());
        let c = parse_cover(r#"[{"label":"U","balls":[{"c":"0","r":"3/2"}]}]"#, &m).unwrap();
        assert_eq!(c.get(0), &z6.ball(0, ratio(3, 2)).unwrap());
        let again = parse_cover(&cover_to_json(&z6, &c).to_string(), &m).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn complex_round_trip() {
        let k = parse_complex(r#"{"simplices":[["a","b","c"],["c","d"]]}"#).unwrap();
        assert_eq!(k.f_vector(), vec![4, 4, 1]);
        let back = parse_complex(&complex_to_json(&k).to_string()).unwrap();
        assert_eq!(back.f_vector(), k.f_vector());
    }
}
