use cambrian_core::checks::{run_suite, Suite, SuiteParams};
use cambrian_core::coxeter::DEFAULT_ELEMENT_CAP;
use cambrian_core::{Cambrian, CoxeterSystem, CoxeterWord, MCambrian};
use proptest::prelude::*;

fn params(group: &str, m: usize, all_words: bool) -> SuiteParams {
    let sys = CoxeterSystem::from_label(group).unwrap();
    SuiteParams {
        group: group.into(),
        words: if all_words {
            Vec::new()
        } else {
            vec![CoxeterWord::linear(&sys)]
        },
        m,
        k: 2,
        grid: Vec::new(),
        cap: DEFAULT_ELEMENT_CAP,
    }
}

fn assert_suite(suite: Suite, group: &str, m: usize, all_words: bool) {
    let report = run_suite(suite, &params(group, m, all_words)).unwrap();
    assert!(
        report.passed(),
        "{} {group} m={m}: {:?}",
        suite.name(),
        report.failures
    );
    assert!(report.checked > 0);
}

#[test]
fn greedy_on_every_instance() {
    let mut cases = Vec::new();
    for m in 1..=4 {
        cases.push(("A2", m));
        cases.push(("B2", m));
    }
    for m in 1..=3 {
        cases.push(("I2(5)", m));
        cases.push(("I2(6)", m));
    }
    cases.push(("A3", 1));
    cases.push(("A3", 2));
    for (group, m) in cases {
        assert_suite(Suite::Greedy, group, m, m <= 2);
    }
}

#[test]
fn unique_increasing_chain_is_longest() {
    for (group, m) in [("A2", 1), ("A2", 2), ("A2", 3), ("B2", 1), ("B2", 2)] {
        assert_suite(Suite::Chains, group, m, true);
    }
}

#[test]
fn rotation_lemmas() {
    for (group, m) in [
        ("A2", 1),
        ("A2", 2),
        ("A2", 3),
        ("B2", 2),
        ("B2", 3),
        ("I2(5)", 2),
        ("A3", 2),
    ] {
        assert_suite(Suite::Lemmas, group, m, group != "A3");
    }
}

#[test]
fn criterion_matches_rotation_order() {
    for (group, m) in [("A2", 3), ("B2", 3), ("I2(5)", 3), ("I2(6)", 2), ("A3", 2)] {
        assert_suite(Suite::Criterion, group, m, true);
    }
}

#[test]
fn criterion_is_a_partial_order() {
    for (group, m) in [("A2", 3), ("B2", 2), ("I2(5)", 2)] {
        let sys = CoxeterSystem::from_label(group).unwrap();
        let camb = Cambrian::new(&sys, CoxeterWord::linear(&sys)).unwrap();
        let mc = MCambrian::new(&camb, m);
        let chains = mc.multichains().unwrap();
        let n = chains.len();
        let rel: Vec<Vec<bool>> = chains
            .iter()
            .map(|a| {
                chains
                    .iter()
                    .map(|b| mc.mleq_criterion(a, b).unwrap().holds())
                    .collect()
            })
            .collect();
        for i in 0..n {
            assert!(rel[i][i]);
            for j in 0..n {
                if i != j && rel[i][j] {
                    assert!(!rel[j][i], "{group} m={m}");
                }
                if rel[i][j] {
                    for (k, &jk) in rel[j].iter().enumerate() {
                        if jk {
                            assert!(rel[i][k], "{group} m={m}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn embeddings_onto_intervals() {
    for (group, m) in [("A2", 2), ("B2", 2), ("A2", 3), ("I2(5)", 2)] {
        assert_suite(Suite::Embedding, group, m, true);
    }
}

fn instance() -> impl Strategy<Value = (&'static str, usize, usize, usize, usize)> {
    (
        prop::sample::select(vec!["A2", "B2", "I2(5)", "A3", "A1xA2"]),
        1usize..=3,
        any::<usize>(),
        any::<usize>(),
        any::<usize>(),
    )
        .prop_filter("desk scale", |(g, m, ..)| *g != "A3" || *m <= 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_chain_replays_to_the_target((group, m, w, x, y) in instance()) {
        let sys = CoxeterSystem::from_label(group).unwrap();
        let words = CoxeterWord::all(&sys);
        let camb = Cambrian::new(&sys, words[w % words.len()].clone()).unwrap();
        let mc = MCambrian::new(&camb, m);
        let p = mc.nc_poset().unwrap();
        let (i, j) = (x % p.len(), y % p.len());
        let cert = mc.greedy_chain(p.label(i), p.label(j));
        prop_assert_eq!(cert.comparable, p.le(i, j));
        if cert.comparable {
            let steps = mc.chain_elements(p.label(i), &cert.chain).unwrap();
            prop_assert_eq!(steps.last().unwrap_or(p.label(i)), p.label(j));
            prop_assert!(cert.chain.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(cert.witness.is_none());
        } else {
            prop_assert!(cert.witness.is_some());
        }
        let (a, b) = (mc.to_multichain(p.label(i)), mc.to_multichain(p.label(j)));
        prop_assert_eq!(mc.mleq_criterion(&a, &b).unwrap().holds(), p.le(i, j));
        prop_assert_eq!(&mc.from_multichain(&a).unwrap(), p.label(i));
    }
}

#[test]
fn decreasing_two_chains_occur() {
    let sys = CoxeterSystem::from_label("B2").unwrap();
    let camb = Cambrian::new(&sys, CoxeterWord::linear(&sys)).unwrap();
    let mc = MCambrian::new(&camb, 2);
    let mut count = 0;
    for f in mc.factorizations().unwrap() {
        for (r, g) in mc.upper_covers(&f) {
            for (r2, h) in mc.upper_covers(&g) {
                if r2 < r {
                    count += 1;
                    assert!(f.contains(r2));
                    assert!(mc.greedy_le(&mc.rotate(&f, r2).unwrap(), &h));
                }
            }
        }
    }
    assert!(count > 0);
}
