use equicover::generate::{instance_rng, random_complex};
use equicover::group::quotient_metric;
use equicover::metric::FiniteMetricSpace;
use equicover::nerve::{barycentric_subdivision, canonical_cover_check};
use equicover::rational::{int, ratio};
use equicover::{Action, PermGroup, PointSet, Space};
use proptest::prelude::*;

fn cycle_and_divisor() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=16).prop_flat_map(|n| {
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        (Just(n), proptest::sample::select(divisors))
    })
}

proptest! {
    #[test]
    fn erosion_and_dilation_are_adjoint(bits in 0u64..(1 << 12), num in 1i64..12, den in 1i64..4) {
        let m = FiniteMetricSpace::cycle(12, int(1)).unwrap();
        let s = PointSet::from_bits(bits);
        let eps = ratio(num, den);
        let d = m.dilate(s, eps);
        let e = m.erode(s, eps);
        prop_assert_eq!(m.dilate(m.erode(d, eps), eps), d);
        prop_assert_eq!(m.erode(m.dilate(e, eps), eps), e);
        prop_assert!(m.dilate(e, eps).is_subset(s));
        prop_assert!(s.is_subset(m.erode(d, eps)));
    }

    #[test]
    fn quotient_of_a_cycle_is_a_cycle((n, step) in cycle_and_divisor()) {
        let m = FiniteMetricSpace::cycle(n, int(1)).unwrap();
        let action = Action::new(PermGroup::rotations(n, step).unwrap(), m).unwrap();
        let q = quotient_metric(&action).unwrap();
        prop_assert_eq!(q.space.len(), step);
        let expected = FiniteMetricSpace::cycle(q.space.len(), int(1)).unwrap();
        for i in 0..q.space.len() {
            for j in 0..q.space.len() {
                prop_assert_eq!(q.space.distance(q.projection[i], q.projection[j]), expected.distance(i, j));
            }
        }
    }

    #[test]
    fn subdivision_counts_chains(seed in 0u64..10_000) {
        let k = random_complex(&mut instance_rng(seed, 0), 5);
        let sub = barycentric_subdivision(&k).unwrap();
        // Vertices of bK are the simplices of K.
        prop_assert_eq!(sub.vertex_count(), k.len());
        prop_assert!(canonical_cover_check(&k).unwrap().passed());
    }
}
