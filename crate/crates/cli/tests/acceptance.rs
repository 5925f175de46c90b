//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fintop::axioms::check_space;
use fintop::decomp::{lemma001_check, tau_f};
use fintop::dynamics::{classify, recurrent_points};
use fintop::enumerate::{self, Kind};
use fintop::{alexandrov, disjoint_union, order, validate_topology, AxiomId, FiniteTopology, Mode, PointSet, Preorder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const COUNTS: [u64; 6] = [1, 1, 4, 29, 355, 6942];
const ENUMERATION_BUDGET: Duration = Duration::from_secs(10);
const HARNESS_BUDGET: Duration = Duration::from_secs(300);
const DECOMP_BUDGET: Duration = Duration::from_secs(120);
const MIN_CLAIMS: usize = 20;
const RANDOM_PAIRS: usize = 1000;
const RANDOM_SEED: u64 = 0x5eed_f1e7;
const JOBS: [&str; 3] = ["1", "2", "8"];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(n: usize, xs: &[usize]) -> PointSet {
    PointSet::from_indices(n, xs.iter().copied())
}

fn enumeration_counts() -> Outcome {
    let start = Instant::now();
    for (n, &expected) in COUNTS.iter().enumerate() {
        let by_order: BTreeSet<u128> = enumerate::enumerate_topologies(n).unwrap().map(|t| t.family_code()).collect();
        let by_family: BTreeSet<u128> = enumerate::enumerate_topologies_direct(n).unwrap().into_iter().collect();
        ensure(by_order.len() as u64 == expected, || format!("n={n}: preorder search gave {}", by_order.len()))?;
        ensure(by_family.len() as u64 == expected, || format!("n={n}: open-family search gave {}", by_family.len()))?;
        ensure(by_order == by_family, || format!("n={n}: the two searches disagree"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ENUMERATION_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{COUNTS:?} by both searches in {} ms", elapsed.as_millis()))
}

fn round_trip() -> Outcome {
    let mut checked = 0;
    for n in 0..=4 {
        for t in enumerate::enumerate_topologies(n).unwrap() {
            ensure(alexandrov(&t.specialization()) == t, || format!("fails on {:?}", t.opens()))?;
            checked += 1;
        }
    }
    let expected: u64 = COUNTS[..5].iter().sum();
    ensure(checked == expected, || format!("checked {checked}, expected {expected}"))?;
    Ok(format!("{checked} topologies on 0..=4 points"))
}

fn theorem_harness() -> Outcome {
    let start = Instant::now();
    let findings = enumerate::verify_all(5, Kind::Claim).unwrap();
    let elapsed = start.elapsed();
    ensure(findings.len() >= MIN_CLAIMS, || format!("only {} claims", findings.len()))?;
    let refuted: Vec<_> = findings.iter().filter(|f| !f.is_verified()).collect();
    for f in &refuted {
        ensure(f.replays(), || format!("{} refuted without a replayable counterexample", f.theorem.id))?;
    }
    ensure(refuted.is_empty(), || format!("refuted: {:?}", refuted.iter().map(|f| f.theorem.id).collect::<Vec<_>>()))?;
    ensure(elapsed < HARNESS_BUDGET, || format!("took {elapsed:?}"))?;
    let inputs: u64 = findings.iter().map(|f| f.spaces_checked).sum();
    Ok(format!("{} claims verified at n <= 5 over {inputs} inputs in {} ms", findings.len(), elapsed.as_millis()))
}

fn golden_examples() -> Outcome {
    let four =
        validate_topology(4, [set(4, &[]), set(4, &[2]), set(4, &[0, 1]), set(4, &[0, 1, 2]), PointSet::full(4)])
            .unwrap();
    let flags = classify(&four);
    ensure(!flags.iter().all(|f| f.recurrent), || "4-point space is recurrent".into())?;
    ensure(recurrent_points(&four) == set(4, &[0, 1, 3]), || "4-point recurrent set".into())?;
    ensure(flags.iter().all(|f| !f.hyperbolic_like), || "4-point space has a hyperbolic-like point".into())?;

    let pair = classify(&FiniteTopology::indiscrete(2));
    ensure(pair.iter().all(|f| f.recurrent && f.weakly_non_indifferent), || "indiscrete pair".into())?;

    let s1 = alexandrov(&Preorder::closure_of(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap());
    ensure(order::is_min_s1(&s1.specialization(), 0, 1, 2, 3), || "min-S1 pattern".into())?;
    for mode in [Mode::Definitional, Mode::Characterized] {
        ensure(!check_space(&s1, AxiomId::SY, mode).verdict, || format!("min-S1 satisfies SY ({mode:?})"))?;
        ensure(check_space(&s1, AxiomId::S14, mode).verdict, || format!("min-S1 fails S1/4 ({mode:?})"))?;
    }
    Ok("4-point space, indiscrete pair and min-S1 reproduce".into())
}

fn implication_chains() -> Outcome {
    use AxiomId::*;
    let chains = [
        (T1, CR),
        (CR, C0),
        (C0, CD),
        (CR, CN),
        (S1, C0),
        (C0, Recurrent),
        (S12, LambdaSpace),
        (LambdaSpace, S14),
        (S12, S13),
        (S13, S14),
        (TYS, T14),
        (SYS, S14),
        (SYS, SQ),
        (CR, SQ),
        (Nested, SQ),
    ];
    let axioms: Vec<AxiomId> = chains.iter().flat_map(|&(a, b)| [a, b]).collect::<BTreeSet<_>>().into_iter().collect();
    let matrix = enumerate::implication_matrix(5, &axioms, Mode::Definitional).unwrap();
    for (a, b) in chains {
        let e = matrix.iter().find(|e| e.antecedent == a && e.consequent == b).unwrap();
        ensure(e.implies, || format!("{a} => {b} fails on {:?}", e.counterexample.as_ref().map(|c| c.space.opens())))?;
    }
    // the converse half of SYS = S1/4 and SQ
    let mut spaces = 0;
    for n in 0..=5 {
        for t in enumerate::enumerate_topologies(n).unwrap() {
            let v = |a| check_space(&t, a, Mode::Definitional).verdict;
            ensure(v(SYS) == (v(S14) && v(SQ)), || format!("SYS != S1/4 and SQ on {:?}", t.opens()))?;
            spaces += 1;
        }
    }
    Ok(format!("{} chain links plus SYS = S1/4 and SQ on {spaces} spaces", chains.len()))
}

fn finite_collapses() -> Outcome {
    let mut spaces = 0;
    for n in 0..=5 {
        for t in enumerate::enumerate_topologies(n).unwrap() {
            for mode in [Mode::Definitional, Mode::Characterized] {
                let v = |a| check_space(&t, a, mode).verdict;
                ensure(v(AxiomId::Recurrent) == v(AxiomId::C0), || format!("recurrent != C0 on {:?}", t.opens()))?;
                ensure(v(AxiomId::T13) == v(AxiomId::T12), || format!("T1/3 != T1/2 on {:?}", t.opens()))?;
            }
            spaces += 1;
        }
    }
    let readme = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md"))
        .map_err(|e| format!("README: {e}"))?;
    ensure(readme.contains("## Finite collapses"), || "README lacks the finite-collapse section".into())?;
    Ok(format!("recurrent <=> C0 and T1/3 <=> T1/2 on {spaces} spaces, both modes; README documents them"))
}

fn decomposition_suite() -> Outcome {
    let (t, d) = enumerate::tau_f_counterexample(5).unwrap().ok_or("no 5-point witness")?;
    ensure(t.len() == 5, || format!("witness has {} points", t.len()))?;
    // replay: some pair of saturated opens meets outside the family
    let r = tau_f(&t, &d);
    let saturated: Vec<PointSet> = t.opens().iter().map(|&u| d.saturate(u)).collect();
    let closed = saturated.iter().all(|&a| saturated.iter().all(|&b| saturated.contains(&(a & b))));
    ensure(!r.is_topology && !closed, || "witness does not replay".into())?;
    let smaller = (0..5).find(|&n| enumerate::tau_f_counterexample(n).unwrap().is_some());

    let start = Instant::now();
    let finding = enumerate::verify(enumerate::theorem("lemma001").unwrap(), 4).unwrap();
    let elapsed = start.elapsed();
    ensure(finding.is_verified(), || format!("lemma001 refuted: {:?}", finding.counterexample()))?;
    let mut direct = 0u64;
    for n in 0..=4 {
        for t in enumerate::enumerate_topologies(n).unwrap() {
            for p in enumerate::partitions(n) {
                ensure(lemma001_check(&t, &p).holds, || format!("lemma001 fails on {:?}", t.opens()))?;
                direct += 1;
            }
        }
    }
    ensure(direct == finding.spaces_checked, || format!("{direct} pairs vs {}", finding.spaces_checked))?;
    ensure(elapsed < DECOMP_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "5-point witness with {} opens, blocks {:?}, replays (smallest witness size {}); lemma001 on {direct} pairs in {} ms",
        t.opens().len(),
        d.blocks().iter().map(|b| b.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        smaller.map_or(5, |n| n),
        elapsed.as_millis()
    ))
}

fn random_topology(rng: &mut ChaCha8Rng) -> FiniteTopology {
    let n = rng.gen_range(1..=5);
    let density: f64 = rng.gen();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|_| rng.gen_bool(density)).collect();
    alexandrov(&Preorder::closure_of(n, pairs).unwrap())
}

fn disjoint_union_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let axioms = [AxiomId::TMinus1, AxiomId::T14, AxiomId::T13, AxiomId::T12];
    let mut satisfied = 0;
    for _ in 0..RANDOM_PAIRS {
        let x = random_topology(&mut rng);
        let y = random_topology(&mut rng);
        let u = disjoint_union(&[x.clone(), y.clone()]);
        ensure(u.len() == x.len() + y.len(), || "union size".into())?;
        for a in axioms {
            for mode in [Mode::Definitional, Mode::Characterized] {
                let parts = check_space(&x, a, mode).verdict && check_space(&y, a, mode).verdict;
                let whole = check_space(&u, a, mode).verdict;
                ensure(parts == whole, || format!("{a} ({mode:?}) on {:?} + {:?}", x.opens(), y.opens()))?;
                satisfied += whole as usize;
            }
        }
    }
    Ok(format!("{RANDOM_PAIRS} seeded pairs, 4 axioms, both modes ({satisfied} positive cases)"))
}

fn fintop(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fintop")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn determinism() -> Outcome {
    let input = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance-four-point.json");
    std::fs::write(&input, r#"{"points": 4, "opens": [[], [2], [0, 1], [0, 1, 2], [0, 1, 2, 3]]}"#)
        .map_err(|e| e.to_string())?;
    let input = input.to_str().unwrap();
    let first = fintop(&["classify", input])?;
    ensure(first.0 == 0, || format!("classify exited {}", first.0))?;
    ensure(fintop(&["classify", input])? == first, || "classify differs between runs".into())?;

    let mut runs = Vec::new();
    for jobs in JOBS {
        for _ in 0..2 {
            runs.push(fintop(&["verify", "all", "--n-max", "4", "--jobs", jobs])?);
        }
    }
    ensure(runs.iter().all(|r| *r == runs[0]), || "verify output differs across runs or --jobs".into())?;
    ensure(runs[0].0 == 0, || format!("verify all exited {}", runs[0].0))?;
    Ok(format!("classify twice, verify all x{} across --jobs {JOBS:?}", runs.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("enumeration counts", enumeration_counts),
        ("round trip", round_trip),
        ("theorem harness", theorem_harness),
        ("golden classifications", golden_examples),
        ("implication chains", implication_chains),
        ("finite collapses", finite_collapses),
        ("decomposition suite", decomposition_suite),
        ("disjoint-union invariance", disjoint_union_invariance),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
