use fintop::enumerate::{
    count_topologies, enumerate_preorders, enumerate_topologies, enumerate_topologies_direct, family_code,
    implication_matrix, par_map_preorders, partitions, theorem, verify,
};
use fintop::{validate_topology, AxiomId, Mode, Preorder};

fn sorted_codes_via_preorders(n: usize) -> Vec<u128> {
    let mut v: Vec<u128> = enumerate_topologies(n).unwrap().map(|t| family_code(&t)).collect();
    v.sort_unstable();
    v
}

#[test]
fn both_methods_produce_the_same_families() {
    for n in 0..=5 {
        let a = sorted_codes_via_preorders(n);
        let mut b = enumerate_topologies_direct(n).unwrap();
        b.sort_unstable();
        assert!(a.windows(2).all(|w| w[0] < w[1]), "duplicate from preorders at n={n}");
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn six_points() {
    assert_eq!(count_topologies(6).unwrap(), 209_527);
    assert_eq!(enumerate_topologies_direct(6).unwrap().len(), 209_527);
}

#[test]
fn every_enumerated_relation_is_a_preorder_and_topology() {
    for n in 0..=4 {
        for p in enumerate_preorders(n).unwrap() {
            let rows: Vec<u64> = (0..n).map(|x| p.up_row(x).bits()).collect();
            assert_eq!(Preorder::from_up_rows(n, rows).unwrap(), p);
        }
        for t in enumerate_topologies(n).unwrap() {
            assert_eq!(validate_topology(n, t.opens().iter().copied()).unwrap(), t);
        }
    }
}

#[test]
fn order_is_stable() {
    let a: Vec<u64> = enumerate_preorders(5).unwrap().map(|p| p.encoding()).collect();
    let b: Vec<u64> = enumerate_preorders(5).unwrap().map(|p| p.encoding()).collect();
    assert_eq!(a, b);
    assert_eq!(par_map_preorders(5, |p| p.encoding()).unwrap(), a);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let f = verify(theorem("SD_lemma_literal").unwrap(), 4).unwrap();
            let m = implication_matrix(4, &[AxiomId::T14, AxiomId::T12, AxiomId::C0, AxiomId::CR], Mode::Characterized)
                .unwrap();
            (f.status, f.spaces_checked, m)
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn partitions_are_distinct_and_cover() {
    let all: Vec<_> = partitions(5).collect();
    assert_eq!(all.len(), 52);
    for (i, d) in all.iter().enumerate() {
        assert_eq!(d.blocks().iter().map(|b| b.len()).sum::<usize>(), 5);
        assert!(all[..i].iter().all(|e| e != d));
    }
}
