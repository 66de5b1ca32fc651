//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the checked tolerance when it holds.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zenomata::automaton::ReversibleAutomaton;
use zenomata::logic::{build_partition_logic, experiment_partition, Partition};
use zenomata::perm::{
    enumerate_permutations, is_doubly_stochastic, perm_from_matrix, Permutation, SquareMatrix,
};
use zenomata::qubit::{
    classical_fixed_point_search, eigensystem_not, fixed_point_not, OneQubitOperator, Qubit,
};
use zenomata::zeno::{
    diagonal_adversary, run_zeno, DeciderSpec, TableProgram, ToyProgram, ZenoOutcome,
    ZenoSchedule,
};

const TOL: f64 = 1e-12;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_str()
        .expect("utf-8 path")
        .to_string()
}

fn load(name: &str) -> ReversibleAutomaton {
    let text = std::fs::read_to_string(data(name)).expect("fixture readable");
    ReversibleAutomaton::from_json(&text).expect("fixture valid")
}

fn word(symbols: &str) -> Vec<String> {
    symbols.chars().map(|c| c.to_string()).collect()
}

fn random_automaton(rng: &mut impl Rng) -> ReversibleAutomaton {
    let n_states = rng.gen_range(1..=4);
    let n_inputs = rng.gen_range(1..=3);
    let degree = n_states * n_inputs;
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    let perm = Permutation::from_images(images).expect("shuffle is a permutation");
    ReversibleAutomaton::from_permutation(&perm, n_states, n_inputs).expect("factors match")
}

fn random_permutation(rng: &mut impl Rng, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle is a permutation")
}

#[test]
fn acceptance_01_table1_round_trip() {
    let automaton = load("table1.aut");
    let perm = automaton.to_permutation();
    assert_eq!(perm, Permutation::from_one_line(&[3, 2, 4, 1]).unwrap());
    assert_eq!(perm.order(), 3);
    let rebuilt = ReversibleAutomaton::from_permutation(&perm, 2, 2).unwrap();
    assert_eq!(rebuilt, automaton);
    println!("acceptance 1: PASS - two-state fixture maps to 3,2,4,1 with order 3 and rebuilds exactly");
}

#[test]
fn acceptance_02_label_evolution_columns() {
    let automaton = load("table2.aut");
    let psi0 = automaton.canonical_labels();
    let expect = |raw: &[(&str, &str)]| {
        raw.iter()
            .map(|(s, i)| (s.to_string(), i.to_string()))
            .collect::<Vec<_>>()
    };
    let columns = [
        expect(&[("s1", "2"), ("s3", "2"), ("s2", "1"), ("s1", "1"), ("s3", "1"), ("s2", "2")]),
        expect(&[("s3", "2"), ("s2", "2"), ("s2", "1"), ("s1", "2"), ("s3", "1"), ("s1", "1")]),
        expect(&[("s2", "2"), ("s1", "1"), ("s2", "1"), ("s3", "2"), ("s3", "1"), ("s1", "2")]),
        expect(&[("s1", "1"), ("s1", "2"), ("s2", "1"), ("s2", "2"), ("s3", "1"), ("s3", "2")]),
    ];
    for (n, expected) in columns.iter().enumerate() {
        let evolved = automaton.evolve_labels(&psi0, n as u64 + 1).unwrap();
        assert_eq!(evolved.labels(), expected.as_slice(), "column {}", n + 1);
    }
    assert_eq!(automaton.evolve_labels(&psi0, 4).unwrap(), psi0);
    println!("acceptance 2: PASS - four evolution columns reproduced entry-for-entry, step 4 = step 0");
}

#[test]
fn acceptance_03_partition_fixtures() {
    let automaton = load("table2.aut");
    let ground = ["s1", "s2", "s3"];
    let v = |w: &str| experiment_partition(&automaton, &word(w)).unwrap();

    assert_eq!(
        v("1"),
        Partition::from_names(&ground, &[&["s1"], &["s2", "s3"]]).unwrap()
    );
    assert_eq!(
        v("2"),
        Partition::from_names(&ground, &[&["s1", "s3"], &["s2"]]).unwrap()
    );
    assert_eq!(
        v("2222"),
        Partition::from_names(&ground, &[&["s1"], &["s2"], &["s3"]]).unwrap()
    );
    for n in 1..=16 {
        assert_eq!(v(&"1".repeat(n)), v("1"), "repetition length {n}");
    }
    println!("acceptance 3: PASS - partition fixtures exact, single-symbol repetitions stable to length 16");
}

#[test]
fn acceptance_04_mo2_classification() {
    let automaton = load("table2.aut");
    let v1 = experiment_partition(&automaton, &word("1")).unwrap();
    let v2 = experiment_partition(&automaton, &word("2")).unwrap();
    let logic = build_partition_logic(&[v1, v2]).unwrap();

    assert_eq!(logic.element_count(), 6);
    let atoms = logic.atoms();
    assert_eq!(atoms.len(), 4);
    for &a in &atoms {
        for &b in &atoms {
            if a != b {
                assert!(!logic.leq(a, b), "atoms must be pairwise incomparable");
            }
        }
    }
    let mut pairs = BTreeSet::new();
    for &a in &atoms {
        let c = logic.complement(a);
        assert!(atoms.contains(&c) && c != a);
        pairs.insert((a.min(c), a.max(c)));
    }
    assert_eq!(pairs.len(), 2);
    assert!(logic.is_mo2());

    let (x, y, z) = logic.find_nondistributive_triple().expect("witness exists");
    let lhs = logic.meet(x, logic.join(y, z).unwrap()).unwrap();
    let rhs = logic
        .join(logic.meet(x, y).unwrap(), logic.meet(x, z).unwrap())
        .unwrap();
    assert_ne!(lhs, rhs, "witness must violate distributivity");
    println!("acceptance 4: PASS - pasted logic is MO2 with a verified nondistributive triple");
}

#[test]
fn acceptance_05_symmetric_group_enumeration() {
    assert_eq!(
        enumerate_permutations(1).unwrap(),
        vec![Permutation::identity(1)]
    );

    // the six degree-3 matrices, transcribed row by row
    let listed = [
        [[1., 0., 0.], [0., 1., 0.], [0., 0., 1.]],
        [[1., 0., 0.], [0., 0., 1.], [0., 1., 0.]],
        [[0., 1., 0.], [0., 0., 1.], [1., 0., 0.]],
        [[0., 1., 0.], [1., 0., 0.], [0., 0., 1.]],
        [[0., 0., 1.], [1., 0., 0.], [0., 1., 0.]],
        [[0., 0., 1.], [0., 1., 0.], [1., 0., 0.]],
    ];
    let expected: BTreeSet<Permutation> = listed
        .iter()
        .map(|rows| {
            let m = SquareMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
                .unwrap();
            perm_from_matrix(&m).unwrap()
        })
        .collect();
    let enumerated: BTreeSet<Permutation> =
        enumerate_permutations(3).unwrap().into_iter().collect();
    assert_eq!(enumerated, expected);

    let mut factorial = 1usize;
    for n in 1..=7usize {
        factorial *= n;
        assert_eq!(enumerate_permutations(n).unwrap().len(), factorial);
    }
    println!("acceptance 5: PASS - degree-3 listing matches as a set, counts equal n! through degree 7");
}

#[test]
fn acceptance_06_birkhoff_vertex_check() {
    for n in 1..=5usize {
        for p in enumerate_permutations(n).unwrap() {
            let m = p.matrix();
            assert!(is_doubly_stochastic(&m, 0.0));
            assert_eq!(perm_from_matrix(&m).unwrap(), p);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xb1e4);
    let mut negatives = 0usize;
    let mut attempts = 0usize;
    while negatives < 1000 {
        attempts += 1;
        assert!(attempts < 100_000, "negative sampling should be easy");
        let n = rng.gen_range(1..=5);
        let entries: Vec<f64> = (0..n * n)
            .map(|_| if rng.gen_bool(0.4) { 1.0 } else { 0.0 })
            .collect();
        let m = SquareMatrix::new(n, entries).unwrap();
        let stochastic = is_doubly_stochastic(&m, 0.0);
        let accepted = perm_from_matrix(&m).is_ok();
        assert_eq!(
            stochastic, accepted,
            "0/1 doubly stochastic and permutation must coincide"
        );
        if !stochastic {
            negatives += 1;
        }
    }
    println!("acceptance 6: PASS - vertices accepted exhaustively to degree 5, {negatives} random 0/1 negatives rejected");
}

#[test]
fn acceptance_07_schedule_formulas() {
    for tenths in 1..=9u32 {
        let k = f64::from(tenths) / 10.0;
        let schedule = ZenoSchedule::new(k).unwrap();
        let mut running = 0.0f64;
        for t in 0..=64u64 {
            if t > 0 {
                running += k.powf(t as f64);
            }
            assert!(
                (schedule.proper_time(t) - running).abs() <= TOL,
                "summation k={k} t={t}"
            );
            if t >= 1 {
                let lhs = schedule.proper_time(t + 1) - schedule.proper_time(t);
                let rhs = k * (schedule.proper_time(t) - schedule.proper_time(t - 1));
                assert!((lhs - rhs).abs() <= TOL, "recurrence k={k} t={t}");
            }
        }
    }
    assert!((ZenoSchedule::new(0.5).unwrap().limit_time() - 1.0).abs() <= TOL);
    assert!((ZenoSchedule::new(2.0 / 3.0).unwrap().limit_time() - 2.0).abs() <= TOL);
    println!("acceptance 7: PASS - closed form, recurrence and limits hold within 1e-12");
}

#[test]
fn acceptance_08_limit_completeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11a7);
    let schedule = ZenoSchedule::new(0.5).unwrap();
    let budget = schedule.limit_time();
    for case in 0..100 {
        let states = rng.gen_range(1..=64);
        let mut step: Vec<usize> = (0..states).map(|_| rng.gen_range(0..states)).collect();
        let mut halting = BTreeSet::new();
        for s in 0..states {
            if rng.gen_bool(0.15) {
                halting.insert(s);
                step[s] = s;
            }
        }
        let start = rng.gen_range(0..states);
        let table = TableProgram::new(states, step.clone(), halting.clone(), vec![start]).unwrap();
        let outcome = run_zeno(&ToyProgram::Table(table), "0", &schedule, budget).unwrap();

        // independent oracle: step the raw table for states+1 moves
        let mut probe = start;
        let mut halts = false;
        for _ in 0..=states {
            if halting.contains(&probe) {
                halts = true;
                break;
            }
            probe = step[probe];
        }
        match outcome {
            ZenoOutcome::Halted { .. } => assert!(halts, "case {case}"),
            ZenoOutcome::NonHalting { .. } => assert!(!halts, "case {case}"),
            ZenoOutcome::Exhausted { .. } => panic!("case {case}: limit-complete run exhausted"),
        }
    }
    println!("acceptance 8: PASS - 100 limit-complete runs, zero exhaustions, verdicts match brute force");
}

#[test]
fn acceptance_09_diagonal_defeat() {
    let mut deciders = vec![
        DeciderSpec::ConstantHalts,
        DeciderSpec::ConstantLoops,
        DeciderSpec::ExactMeta,
    ];
    deciders.extend((1..=1000).map(|bound| DeciderSpec::StepBounded { bound }));

    let total = deciders.len();
    for decider in deciders {
        let (_, report) = diagonal_adversary(&decider);
        assert!(report.defeated, "decider {decider} survived");
        match (report.verdict, report.outcome) {
            (zenomata::zeno::Verdict::Halts, ZenoOutcome::NonHalting { .. }) => {}
            (zenomata::zeno::Verdict::Loops, ZenoOutcome::Halted { .. }) => {}
            other => panic!("decider {decider}: inconsistent report {other:?}"),
        }
    }
    println!("acceptance 9: PASS - all {total} deciders wrong on their own adversary");
}

#[test]
fn acceptance_10_qubit_identities() {
    let not = OneQubitOperator::not();
    let star = fixed_point_not();
    assert!(not.apply(&star).distance(&star) <= TOL);

    let [(plus_val, plus), (minus_val, minus)] = eigensystem_not();
    assert_eq!(plus_val, 1.0);
    assert_eq!(minus_val, -1.0);
    for (value, state) in [(plus_val, plus), (minus_val, minus)] {
        let (a, b) = state.amplitudes();
        let scaled = Qubit::new(a * value, b * value).unwrap();
        assert!(not.apply(&state).distance(&scaled) <= TOL);
    }
    assert!(plus.inner(&minus).norm() <= TOL);
    assert!(star.equals_up_to_phase(&plus, TOL));

    let (p0, p1) = star.probabilities();
    assert!((p0 - 0.5).abs() <= TOL);
    assert!((p1 - 0.5).abs() <= TOL);
    assert!(classical_fixed_point_search().is_empty());
    println!("acceptance 10: PASS - fixed point, eigensystem and fifty-fifty probabilities within 1e-12");
}

#[test]
fn acceptance_11_randomized_property_suites() {
    let cases = 500usize;

    // combined step map is a bijection on the pair set
    let mut rng = ChaCha8Rng::seed_from_u64(0xaaa1);
    for _ in 0..cases {
        let a = random_automaton(&mut rng);
        let mut targets: Vec<(String, String)> = Vec::new();
        for state in a.states() {
            for input in a.inputs() {
                targets.push(a.step(state, input).unwrap());
            }
        }
        targets.sort();
        targets.dedup();
        assert_eq!(targets.len(), a.n_states() * a.n_inputs());
    }

    // reversing the gear inverts the pair permutation
    let mut rng = ChaCha8Rng::seed_from_u64(0xaaa2);
    for _ in 0..cases {
        let a = random_automaton(&mut rng);
        let composed = a
            .to_permutation()
            .compose(&a.reverse().to_permutation())
            .unwrap();
        assert!(composed.is_identity());
    }

    // longer experiments only refine
    let mut rng = ChaCha8Rng::seed_from_u64(0xaaa3);
    for _ in 0..cases {
        let a = random_automaton(&mut rng);
        let pick = |rng: &mut ChaCha8Rng, len: usize| -> Vec<String> {
            (0..len)
                .map(|_| a.inputs()[rng.gen_range(0..a.n_inputs())].clone())
                .collect()
        };
        let len_u = rng.gen_range(1..=3);
        let len_ext = rng.gen_range(1..=3);
        let u = pick(&mut rng, len_u);
        let mut uv = u.clone();
        uv.extend(pick(&mut rng, len_ext));
        let coarse = experiment_partition(&a, &u).unwrap();
        let fine = experiment_partition(&a, &uv).unwrap();
        assert!(fine.refines(&coarse));
    }

    // group axioms at random degrees
    let mut rng = ChaCha8Rng::seed_from_u64(0xaaa4);
    for _ in 0..cases {
        let degree = rng.gen_range(1..=8);
        let p = random_permutation(&mut rng, degree);
        let q = random_permutation(&mut rng, degree);
        let r = random_permutation(&mut rng, degree);
        let id = Permutation::identity(degree);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    println!("acceptance 11: PASS - four property suites, {cases} randomized instances each, zero failures");
}

#[test]
fn acceptance_12_cli_goldens_are_stable() {
    let table2 = data("table2.aut");
    let invocations: [&[&str]; 4] = [
        &["validate", &table2],
        &["experiment", &table2, "--word", "1"],
        &["zeno", "--k", "0.5", "--t", "3"],
        &["logic", &table2, "--max-len", "1"],
    ];
    for args in invocations {
        let run = || {
            let output = Command::new(env!("CARGO_BIN_EXE_zenomata"))
                .args(args)
                .output()
                .expect("binary runs");
            assert!(output.status.success(), "{args:?}");
            output.stdout
        };
        let first = run();
        let second = run();
        assert!(!first.is_empty());
        assert_eq!(first, second, "{args:?} output must be byte-identical");
    }
    println!("acceptance 12: PASS - four documented invocations byte-stable across consecutive runs");
}
