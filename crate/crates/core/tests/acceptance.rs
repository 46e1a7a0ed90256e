//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails. Every check below is exact; no tolerances apply.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use equicover::generate::{
    free_poset, instance_rng, random_ball_cover, random_complex, random_graded_instance, random_metric_instance,
    random_poset_instance, subset_poset, GroupKind,
};
use equicover::group::{dimension_equality_check, quotient_metric};
use equicover::metric::FiniteMetricSpace;
use equicover::nerve::{canonical_cover_check, pull_back_canonical, SimplicialComplex};
use equicover::pipeline::{proposition_32_partial, proposition_33, GradedCoverResult, DEFAULT_M_CAP};
use equicover::rational::{int, ratio, Rational};
use equicover::refine::{equivariant_refine, EquivariantRefinement, Refinable};
use equicover::{Action, Cover, FinitePoset, PermGroup, PointSet, SampledSet, Space};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], summary: String) -> Outcome {
        let detail = match failures.first() {
            None => summary,
            Some(first) => format!("{summary}; {} failures, first: {first}", failures.len()),
        };
        Outcome {
            passed: failures.is_empty(),
            detail,
        }
    }
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

// ---------- independent oracles ----------

fn oracle_multiplicity(cover: &Cover, z: usize) -> usize {
    cover.elements().iter().filter(|e| e.interior.contains(z)).count()
}

fn oracle_dimension(cover: &Cover, points: usize) -> usize {
    (0..points).map(|z| oracle_multiplicity(cover, z)).max().unwrap_or(0).saturating_sub(1)
}

/// Translates of each element are equal to it or disjoint from it, and the
/// family is closed under the action.
fn oracle_gcover<S: Space>(action: &Action<S>, cover: &Cover) -> bool {
    action.elements().iter().all(|g| {
        cover.elements().iter().all(|e| {
            let moved: PointSet = e.interior.iter().map(|x| g[x]).collect();
            let closed = cover.elements().iter().any(|o| o.interior == moved);
            closed && (moved == e.interior || !moved.intersects(e.interior))
        })
    })
}

fn oracle_refinement<S: Refinable>(
    action: &Action<S>,
    coarse: &Cover,
    out: &EquivariantRefinement<S>,
) -> Vec<String> {
    let n = action.space().len();
    let mut failures = Vec::new();
    let fine = &out.cover;
    if !(0..n).all(|z| oracle_multiplicity(fine, z) > 0) {
        failures.push("does not cover".into());
    }
    if !fine
        .elements()
        .iter()
        .all(|w| coarse.elements().iter().any(|u| w.interior.is_subset(u.interior)))
    {
        failures.push("does not refine".into());
    }
    if !oracle_gcover(action, fine) {
        failures.push("not an F-cover".into());
    }
    let q = &out.plan.quotient;
    if oracle_dimension(fine, n) > oracle_dimension(&out.plan.refinement, q.space.len()) {
        failures.push("dimension grew".into());
    }
    if !out.certificate.passed() {
        failures.push("certificate disagrees".into());
    }
    failures
}

/// Each member containing `z` maps to a distinct element of the quotient
/// refinement that contains the image of `z`.
fn oracle_injection<S: Refinable>(out: &EquivariantRefinement<S>, z: usize) -> bool {
    let q = &out.plan.quotient;
    let mut seen = BTreeSet::new();
    for (i, w) in out.cover.elements().iter().enumerate() {
        if !w.interior.contains(z) {
            continue;
        }
        let image: PointSet = w.interior.iter().map(|x| q.projection[x]).collect();
        let v = out.plan.refinement.get(out.provenance[i].v);
        if image != v.interior || !v.interior.contains(q.projection[z]) || !seen.insert(image.bits()) {
            return false;
        }
    }
    true
}

fn faces_of(complex: &SimplicialComplex) -> BTreeSet<u64> {
    let mut faces = BTreeSet::new();
    for facet in complex.facets() {
        let members = facet.to_vec();
        for mask in 1u64..(1 << members.len()) {
            let face: PointSet = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            faces.insert(face.bits());
        }
    }
    faces
}

/// Star of one barycenter meets star of another exactly when some chain
/// contains both simplices, that is when they are nested.
fn oracle_star_count(faces: &BTreeSet<u64>, sigma: PointSet) -> usize {
    faces
        .iter()
        .map(|&b| PointSet::from_bits(b))
        .filter(|tau| tau.len() <= sigma.len() && (tau.is_subset(sigma) || sigma.is_subset(*tau)))
        .count()
}

fn oracle_metric_axioms(m: &FiniteMetricSpace) -> bool {
    let n = m.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let d = m.distance(x, y);
            (d == Rational::from_integer(0)) == (x == y)
                && d == m.distance(y, x)
                && (0..n).all(|w| d <= m.distance(x, w) + m.distance(w, y))
        })
    })
}

fn oracle_graded(action: &Action<FiniteMetricSpace>, out: &GradedCoverResult, delta: Rational) -> Vec<String> {
    let m = action.space();
    let mut failures = Vec::new();
    let all: Vec<(usize, SampledSet)> = out
        .grades
        .iter()
        .enumerate()
        .flat_map(|(j, g)| g.iter().map(move |e| (j, e.set)))
        .collect();
    if !(0..m.len()).all(|z| all.iter().any(|(_, s)| s.interior.contains(z))) {
        failures.push("(i)".into());
    }
    let diam = |s: PointSet| {
        s.iter()
            .flat_map(|a| s.iter().map(move |b| (a, b)))
            .map(|(a, b)| m.distance(a, b))
            .max()
            .unwrap_or_else(|| int(0))
    };
    if all.iter().any(|(_, s)| diam(s.closure) >= delta) {
        failures.push("(ii)".into());
    }
    for (j, s) in &all {
        let count = all
            .iter()
            .filter(|(i, o)| i <= j && o.interior.intersects(s.interior))
            .count();
        if count > (1 << (j + 1)) - 1 {
            failures.push(format!("(iv) grade {j} count {count}"));
        }
    }
    for grade in &out.grades {
        for (i, a) in grade.iter().enumerate() {
            for b in &grade[i + 1..] {
                if a.set != b.set && a.set.closure.intersects(b.set.closure) {
                    failures.push("(v)".into());
                }
            }
        }
    }
    for g in action.elements() {
        for (j, s) in &all {
            let moved = s.map(g);
            if !out.grades[*j].iter().any(|o| o.set == moved) {
                failures.push("(vi)".into());
            }
        }
    }
    if !out.passed() {
        let bad: Vec<&str> = out
            .properties
            .iter()
            .filter(|p| !p.passed)
            .map(|p| p.property)
            .collect();
        failures.push(format!("certifier reports {bad:?}"));
    }
    failures
}

// ---------- criteria ----------

/// Criteria 1 and 2 share their 200 instances.
fn criteria_1_and_2() -> (Outcome, Outcome) {
    let mut fail1 = Vec::new();
    let mut fail2 = Vec::new();
    let mut points_checked = 0;
    let mut kinds = BTreeSet::new();
    for i in 0..200u64 {
        let mut rng = instance_rng(1, i);
        if i % 2 == 0 {
            let inst = random_poset_instance(&mut rng, 12);
            kinds.insert(format!("{:?}", inst.kind));
            run_refinement(i, &inst.action, &inst.cover, &mut fail1, &mut fail2, &mut points_checked);
        } else {
            let inst = random_metric_instance(&mut rng, 12);
            kinds.insert(format!("{:?}", inst.kind));
            run_refinement(i, &inst.action, &inst.cover, &mut fail1, &mut fail2, &mut points_checked);
        }
    }
    (
        Outcome::new(&fail1, format!("200 instances, groups {kinds:?}")),
        Outcome::new(&fail2, format!("{points_checked} points over 200 instances")),
    )
}

fn run_refinement<S: Refinable>(
    index: u64,
    action: &Action<S>,
    cover: &Cover,
    fail1: &mut Vec<String>,
    fail2: &mut Vec<String>,
    points_checked: &mut usize,
) {
    let n = action.space().len();
    // The coarse cover's own dimension is always an admissible target.
    let target = oracle_dimension(cover, n);
    match equivariant_refine(cover, action, target) {
        Ok(out) => {
            for f in oracle_refinement(action, cover, &out) {
                fail1.push(format!("instance {index}: {f}"));
            }
            for z in 0..n {
                *points_checked += 1;
                if !oracle_injection(&out, z) || !out.pi_z_injection_check(z) {
                    fail2.push(format!("instance {index}, point {z}"));
                }
            }
        }
        Err(e) => fail1.push(format!("instance {index}: {e}")),
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut complexes: Vec<(String, SimplicialComplex)> = (1..=3)
        .map(|d| (format!("simplex of dim {d}"), SimplicialComplex::simplex(d).unwrap()))
        .collect();
    for i in 0..100u64 {
        let mut rng = instance_rng(3, i);
        complexes.push((format!("random complex {i}"), random_complex(&mut rng, 6)));
    }
    let mut stars = 0;
    for (name, k) in &complexes {
        let report = match canonical_cover_check(k) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        if !(report.covering && report.same_grade_disjoint && report.meeting_implies_nested) {
            failures.push(format!("{name}: {:?}", report.witnesses));
        }
        let faces = faces_of(k);
        for &sigma in k.simplices() {
            stars += 1;
            let Some(count) = report.counts.iter().find(|c| c.simplex == k.name(sigma)) else {
                failures.push(format!("{name}: no count for {}", k.name(sigma)));
                continue;
            };
            let exact = (1usize << (count.dim + 1)) - 1;
            if count.count != exact || oracle_star_count(&faces, sigma) != exact {
                failures.push(format!("{name}: {} meets {} stars, expected {exact}", count.simplex, count.count));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome::new(
        &failures,
        format!("{} complexes, {stars} stars with exact counts, {:.2}s", complexes.len(), elapsed.as_secs_f64()),
    )
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut elements = 0;
    for i in 0..100u64 {
        let mut rng = instance_rng(4, i);
        let n = if i % 2 == 0 { 6 } else { 12 };
        let space = FiniteMetricSpace::cycle(n, int(1)).unwrap();
        let cover = random_ball_cover(&mut rng, &space);
        let pb = match pull_back_canonical(&space, &cover) {
            Ok(pb) => pb,
            Err(e) => {
                failures.push(format!("instance {i}: {e}"));
                continue;
            }
        };
        for e in pb.grades.iter().flatten() {
            elements += 1;
            // Points of a pulled star lie in every element named by the simplex.
            let inside_all = e.simplex.iter().all(|v| e.set.interior.is_subset(cover.get(v).interior));
            let inside_one = e.simplex.iter().any(|v| e.set.interior.is_subset(cover.get(v).interior));
            if !(inside_all && inside_one) {
                failures.push(format!("instance {i}: st{}", pb.nerve.name(e.simplex)));
            }
        }
        let report = pb.check(&cover);
        if !report.passed() {
            failures.push(format!("instance {i}: {:?}", report.witnesses));
        }
    }
    Outcome::new(&failures, format!("100 covers, {elements} pulled-back elements"))
}

fn ball_union(m: &FiniteMetricSpace, centers: &[usize], r: Rational) -> SampledSet {
    centers
        .iter()
        .map(|&c| m.ball(c, r).unwrap())
        .reduce(|a, b| a.union(&b).unwrap())
        .unwrap()
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut cases: Vec<(String, Action<FiniteMetricSpace>, Cover, usize, usize, Rational)> = Vec::new();

    let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
    let c3 = Action::new(PermGroup::rotations(6, 2).unwrap(), z6.clone()).unwrap();
    let whole = Cover::unlabeled(6, vec![SampledSet::whole(6)]).unwrap();
    cases.push(("Z6/C3".into(), c3, whole, 0, 1, ratio(5, 2)));

    let z12 = FiniteMetricSpace::cycle(12, int(1)).unwrap();
    let c2 = Action::new(PermGroup::rotations(12, 6).unwrap(), z12.clone()).unwrap();
    let antipodal = Cover::unlabeled(
        12,
        vec![ball_union(&z12, &[0, 6], ratio(5, 2)), ball_union(&z12, &[3, 9], ratio(5, 2))],
    )
    .unwrap();
    cases.push(("Z12/C2".into(), c2, antipodal, 2, 1, int(3)));

    for i in 0..50u64 {
        let mut rng = instance_rng(5, i);
        let inst = random_graded_instance(&mut rng);
        cases.push((inst.describe(), inst.action, inst.collection, inst.k, inst.n, inst.delta));
    }

    let mut worst: Vec<usize> = Vec::new();
    for (name, action, u, k, n, delta) in &cases {
        match proposition_33(action, u, *k, *n, *delta, DEFAULT_M_CAP) {
            Ok(out) => {
                for f in oracle_graded(action, &out, *delta) {
                    failures.push(format!("{name}: {f}"));
                }
                for (j, &c) in out.prefix_counts.iter().enumerate() {
                    let bound = (1 << (j + 1)) - 1;
                    if c > bound {
                        failures.push(format!("{name}: grade {j} needs {c} > {bound}"));
                    }
                    if worst.len() <= j {
                        worst.resize(j + 1, 0);
                    }
                    worst[j] = worst[j].max(c);
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    Outcome::new(
        &failures,
        format!(
            "{} instances, largest prefix count per grade {worst:?} against bounds 1, 3, 7, ...",
            cases.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    const N: usize = 1;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    let mut actions: Vec<(String, usize, PermGroup)> = Vec::new();
    for step in [12, 6, 4, 2, 1] {
        actions.push((format!("C{} on Z24", 24 / step), 24, PermGroup::rotations(24, step).unwrap()));
    }
    for (size, step) in [(24, 12), (24, 4), (24, 2), (12, 6), (12, 2), (12, 1)] {
        actions.push((format!("D{} on Z{size}", size / step), size, PermGroup::dihedral(size, step).unwrap()));
    }
    let mut orders = BTreeSet::new();
    for (name, size, group) in actions {
        let order = group.order();
        if ![2, 4, 6, 12, 24].contains(&order) {
            failures.push(format!("{name} has order {order}"));
            continue;
        }
        orders.insert(order);
        let space = FiniteMetricSpace::cycle(size, int(1)).unwrap();
        let action = Action::new(group, space.clone()).unwrap();
        let u = Cover::unlabeled(size, vec![SampledSet::whole(size)]).unwrap();
        let alpha = vec![space.ball(0, ratio(3, 2)).unwrap()];
        match proposition_32_partial(&action, &u, &alpha, N, DEFAULT_M_CAP) {
            Ok(out) => {
                let dim = oracle_dimension(&out.vf, size);
                rows.push(format!("|F|={order}:{dim}"));
                if dim > N || dim != out.report.vf_dimension || !out.report.certified() || !oracle_gcover(&action, &out.vf)
                {
                    failures.push(format!("{name}: dim {dim}, report {:?}", out.report));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if orders != BTreeSet::from([2, 4, 6, 12, 24]) {
        failures.push(format!("orders covered {orders:?}"));
    }
    Outcome::new(&failures, format!("n = {N}, dim(V_F) per run [{}]", rows.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut quotients = 0;
    let mut check = |name: String, action: &Action<FiniteMetricSpace>, failures: &mut Vec<String>| {
        let q = match quotient_metric(action) {
            Ok(q) => q,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                return;
            }
        };
        quotients += 1;
        let m = action.space();
        let brute = |a: PointSet, b: PointSet| {
            a.iter()
                .flat_map(|x| b.iter().map(move |y| (x, y)))
                .map(|(x, y)| m.distance(x, y))
                .min()
                .unwrap()
        };
        let formula = (0..q.orbits.len())
            .all(|i| (0..q.orbits.len()).all(|j| q.space.distance(i, j) == brute(q.orbits[i], q.orbits[j])));
        if !formula || !oracle_metric_axioms(&q.space) {
            failures.push(name);
        }
    };

    let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
    let rot3 = Action::new(PermGroup::rotations(6, 3).unwrap(), z6).unwrap();
    check("Z6 rotation by 3".into(), &rot3, &mut failures);
    let q = quotient_metric(&rot3).unwrap();
    let d02 = q.space.distance(q.projection[0], q.projection[2]);
    if d02 != int(1) {
        failures.push(format!("d([0],[2]) = {d02}"));
    }
    for size in [4, 6, 8, 10, 12, 24] {
        for step in 1..size {
            if size % step == 0 {
                let space = FiniteMetricSpace::cycle(size, int(1)).unwrap();
                for (kind, group) in [
                    ("rotations", PermGroup::rotations(size, step)),
                    ("dihedral", PermGroup::dihedral(size, step)),
                ] {
                    let action = Action::new(group.unwrap(), space.clone()).unwrap();
                    check(format!("Z{size} {kind} step {step}"), &action, &mut failures);
                }
            }
        }
    }
    for i in 0..100u64 {
        let mut rng = instance_rng(1, 2 * i + 1);
        let inst = random_metric_instance(&mut rng, 12);
        check(format!("criterion-1 instance {}", 2 * i + 1), &inst.action, &mut failures);
    }
    Outcome::new(&failures, format!("{quotients} quotients, d([0],[2]) = {d02}"))
}

/// Least multiplicity of an open refinement of the minimal-open-set cover,
/// found by exhaustive search; minus one, this is the covering dimension.
fn oracle_covering_dimension(p: &FinitePoset) -> Option<usize> {
    let n = p.len();
    let up = |x: usize| -> PointSet { (0..n).filter(|&y| p.leq(x, y)).collect() };
    let minimal: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| y == x || !p.leq(y, x))).collect();
    let opens: Vec<PointSet> = (1u64..(1 << n))
        .map(PointSet::from_bits)
        .filter(|s| s.iter().all(|x| up(x).is_subset(*s)))
        .filter(|s| minimal.iter().any(|&m| s.is_subset(up(m))))
        .collect();
    if opens.len() > 20 {
        return None;
    }
    let mut best = usize::MAX;
    for mask in 1u64..(1 << opens.len()) {
        let chosen: Vec<PointSet> = (0..opens.len()).filter(|i| mask >> i & 1 == 1).map(|i| opens[i]).collect();
        let mult = (0..n).map(|z| chosen.iter().filter(|s| s.contains(z)).count());
        if mult.clone().all(|c| c > 0) {
            best = best.min(mult.max().unwrap());
        }
    }
    Some(best - 1)
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut fixtures: Vec<(String, Action<FinitePoset>)> = Vec::new();
    let p4 = FinitePoset::circle();
    let perm = |g: Vec<usize>| PermGroup::generated(4, vec![g], 120).unwrap();
    fixtures.push(("P4/C2".into(), Action::new(perm(vec![1, 0, 3, 2]), p4.clone()).unwrap()));
    fixtures.push(("P4/trivial".into(), Action::trivial(p4.clone())));
    fixtures.push(("P4/swap minima".into(), Action::new(perm(vec![1, 0, 2, 3]), p4.clone()).unwrap()));
    fixtures.push(("P4/swap maxima".into(), Action::new(perm(vec![0, 1, 3, 2]), p4.clone()).unwrap()));
    let klein = PermGroup::generated(4, vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]], 120).unwrap();
    fixtures.push(("P4/C2xC2".into(), Action::new(klein, p4.clone()).unwrap()));
    let double = p4.disjoint_union(&p4).unwrap();
    let swap = PermGroup::generated(8, vec![vec![4, 5, 6, 7, 0, 1, 2, 3]], 120).unwrap();
    fixtures.push(("2P4/swap".into(), Action::new(swap, double).unwrap()));
    fixtures.push(("Sierpinski".into(), Action::trivial(FinitePoset::chain(2))));
    fixtures.push(("chain 3".into(), Action::trivial(FinitePoset::chain(3))));
    fixtures.push((
        "antichain 4/S4".into(),
        Action::new(PermGroup::symmetric(4, 120).unwrap(), FinitePoset::antichain(4)).unwrap(),
    ));
    fixtures.push((
        "antichain 2/C2".into(),
        Action::new(PermGroup::rotations(2, 1).unwrap(), FinitePoset::antichain(2)).unwrap(),
    ));
    for (i, kind) in GroupKind::ALL.iter().enumerate() {
        for j in 0..2u64 {
            let mut rng = instance_rng(8, (i as u64) * 10 + j);
            fixtures.push((format!("subset poset {kind:?} #{j}"), subset_poset(&mut rng, *kind, 12)));
            let mut rng = instance_rng(8, 100 + (i as u64) * 10 + j);
            if let Some(a) = free_poset(&mut rng, *kind, 12) {
                fixtures.push((format!("free poset {kind:?} #{j}"), a));
            }
        }
    }

    let mut divergent = Vec::new();
    let mut brute_checked = 0;
    for (name, action) in &fixtures {
        match dimension_equality_check(action, 14) {
            Ok(report) => {
                if !report.equal {
                    divergent.push(name.clone());
                }
                if let Some(d) = oracle_covering_dimension(action.space()) {
                    brute_checked += 1;
                    if d != report.space_dimension {
                        failures.push(format!("{name}: dimension {} but search finds {d}", report.space_dimension));
                    }
                }
                if name == "P4/C2" && (report.space_dimension, report.quotient_dimension) != (1, 0) {
                    failures.push(format!(
                        "P4/C2 gives {} vs {}",
                        report.space_dimension, report.quotient_dimension
                    ));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if fixtures.len() < 20 {
        failures.push(format!("only {} fixtures", fixtures.len()));
    }
    Outcome::new(
        &failures,
        format!(
            "{} fixtures ({brute_checked} cross-checked by search), P4/C2 = 1 vs 0, divergent: {}",
            fixtures.len(),
            divergent.join(", ")
        ),
    )
}

fn criterion_9() -> Outcome {
    let f = fixtures();
    let fx = |name: &str| f.join(name).to_string_lossy().into_owned();
    let runs: Vec<Vec<String>> = vec![
        vec!["fuzz".into(), "--certifier".into(), "refine-poset".into(), "--count".into(), "40".into(), "--seed".into(), "9".into()],
        vec!["fuzz".into(), "--certifier".into(), "p33".into(), "--count".into(), "20".into(), "--seed".into(), "9".into()],
        vec!["fuzz".into(), "--certifier".into(), "pullback".into(), "--count".into(), "20".into(), "--seed".into(), "3".into()],
        vec![
            "p33".into(), "--space".into(), fx("z12.json"), "--group".into(), fx("z12_rot6.json"),
            "--collection".into(), fx("z12_antipodal.json"), "-k".into(), "2".into(), "-n".into(), "1".into(),
            "--delta".into(), "3".into(),
        ],
        vec![
            "refine".into(), "--space".into(), fx("z6.json"), "--group".into(), fx("z6_rot3.json"),
            "--cover".into(), fx("z6_balls.json"), "--dim".into(), "0".into(), "--certify".into(),
        ],
        vec!["canonical-cover".into(), "--complex".into(), fx("delta3.json")],
        vec!["pullback".into(), "--space".into(), fx("z6.json"), "--cover".into(), fx("z6_pullback.json")],
    ];
    let mut failures = Vec::new();
    for args in &runs {
        let once = || Command::new(env!("CARGO_BIN_EXE_equicover")).args(args).output().unwrap();
        let (a, b) = (once(), once());
        if a.stdout != b.stdout || a.status != b.status || a.stdout.is_empty() {
            failures.push(args.join(" "));
        }
    }
    Outcome::new(&failures, format!("{} commands run twice, byte-identical", runs.len()))
}

fn main() {
    let (c1, c2) = criteria_1_and_2();
    let results = vec![
        ("1 equivariant refinement", c1),
        ("2 projection injection", c2),
        ("3 canonical cover counts", criterion_3()),
        ("4 pull-back refinement", criterion_4()),
        ("5 graded pipeline", criterion_5()),
        ("6 dimension independent of group order", criterion_6()),
        ("7 quotient metric", criterion_7()),
        ("8 dimension bookkeeping", criterion_8()),
        ("9 determinism", criterion_9()),
    ];
    let mut all = true;
    for (name, outcome) in &results {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {}", outcome.detail);
        all &= outcome.passed;
    }
    if !all {
        std::process::exit(1);
    }
}
