use fintop::axioms::{axiom_vector_in, Classifier};
use fintop::{alexandrov, class_space, disjoint_union, specialization, validate_topology};
use fintop::{AxiomId, FiniteTopology, Mode, PointSet, Preorder};
use proptest::prelude::*;

fn preorder(max_n: usize) -> impl Strategy<Value = Preorder> {
    (0..=max_n).prop_flat_map(|n| {
        let k = n.max(1);
        prop::collection::vec((0..k, 0..k), 0..=2 * n)
            .prop_map(move |pairs| Preorder::closure_of(n, pairs.into_iter().filter(|&(x, y)| x < n && y < n)).unwrap())
    })
}

fn space(max_n: usize) -> impl Strategy<Value = FiniteTopology> {
    preorder(max_n).prop_map(|p| alexandrov(&p))
}

// Oracle: intersection of every closed superset.
fn closure_oracle(t: &FiniteTopology, a: PointSet) -> PointSet {
    t.closed_sets().filter(|f| a.is_subset(*f)).fold(t.points(), |acc, f| acc & f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn round_trip_and_validation(t in space(7)) {
        prop_assert_eq!(alexandrov(&specialization(&t)), t.clone());
        prop_assert_eq!(validate_topology(t.len(), t.opens().iter().copied()).unwrap(), t);
    }

    #[test]
    fn closure_matches_oracle(t in space(6)) {
        for a in PointSet::all_subsets(t.len()) {
            prop_assert_eq!(t.closure(a), closure_oracle(&t, a));
        }
    }

    #[test]
    fn modes_agree_beyond_exhaustive_range(t in space(7)) {
        let c = Classifier::new(&t);
        for a in AxiomId::ALL.into_iter().filter(|&a| a != AxiomId::SD) {
            let d = c.check_space(a, Mode::Definitional);
            let ch = c.check_space(a, Mode::Characterized);
            prop_assert_eq!(d.verdict, ch.verdict, "{}", a);
            for r in [&d, &ch] {
                prop_assert!(r.witness.is_none() || c.replays(r), "{} {:?}", a, r);
            }
        }
    }

    #[test]
    fn verdicts_survive_relabeling(t in space(6), seed in any::<u64>()) {
        let n = t.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let u = t.permuted(&perm);
        for m in [Mode::Definitional, Mode::Characterized] {
            let a = axiom_vector_in(&t, m);
            let b = axiom_vector_in(&u, m);
            for (k, r) in &a {
                prop_assert_eq!(r.verdict, b[k].verdict, "{}", k);
            }
        }
    }

    #[test]
    fn class_space_is_t0_and_idempotent(t in space(7)) {
        let (q, map) = class_space(&t);
        prop_assert!(Classifier::new(&q).holds(AxiomId::T0, Mode::Definitional));
        prop_assert_eq!(map.iter().copied().max().map_or(0, |m| m + 1), q.len());
        prop_assert_eq!(class_space(&q).0, q);
    }

    #[test]
    fn union_invariance(x in space(4), y in space(4)) {
        let u = disjoint_union(&[x.clone(), y.clone()]);
        for a in [AxiomId::TMinus1, AxiomId::T12, AxiomId::T13, AxiomId::T14] {
            for m in [Mode::Definitional, Mode::Characterized] {
                let (cx, cy, cu) = (Classifier::new(&x), Classifier::new(&y), Classifier::new(&u));
                prop_assert_eq!(cu.holds(a, m), cx.holds(a, m) && cy.holds(a, m), "{}", a);
            }
        }
    }
}
