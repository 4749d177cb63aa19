use std::collections::{HashMap, VecDeque};

use cambrian_core::orders::{kreweras, nc_lattice, noncrossing_partitions};
use cambrian_core::{CoxeterSystem, CoxeterWord, Elem};
use proptest::prelude::*;

const SMALL: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(7)", "A1xA1"];

/// Distances from the identity in the Cayley graph with the given generators.
fn cayley_distances(sys: &CoxeterSystem, gens: &[Elem]) -> HashMap<Elem, usize> {
    let mut dist = HashMap::from([(Elem::IDENTITY, 0)]);
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for &g in gens {
            let v = sys.mul(w, g);
            dist.entry(v).or_insert_with(|| {
                queue.push_back(v);
                d + 1
            });
        }
    }
    dist
}

fn simple(sys: &CoxeterSystem) -> Vec<Elem> {
    (0..sys.rank()).map(|g| sys.generator(g)).collect()
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn classical_orders() {
    let fact = |n: usize| (1..=n).product::<usize>();
    let cases = [
        ("A1", 2),
        ("A3", fact(4)),
        ("A4", fact(5)),
        ("B3", 8 * fact(3)),
        ("B4", 16 * fact(4)),
        ("D4", 8 * fact(4)),
        ("F4", 1152),
        ("I2(5)", 10),
        ("I2(8)", 16),
        ("A1xA2", 12),
        ("A1xA1xA1", 8),
    ];
    for (label, order) in cases {
        let sys = CoxeterSystem::from_label(label).unwrap();
        assert_eq!(sys.order(), order, "{label}");
        assert_eq!(
            cayley_distances(&sys, &simple(&sys)).len(),
            order,
            "{label}"
        );
    }
}

#[test]
fn length_is_inversions_and_word_distance() {
    for label in SMALL {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let dist = cayley_distances(&sys, &simple(&sys));
        let w0 = sys.longest_element();
        for w in sys.elements() {
            assert_eq!(sys.length(w), dist[&w], "{label}");
            assert_eq!(sys.length(w), sys.inversion_set(w).len(), "{label}");
            assert_eq!(
                sys.length(sys.mul(w0, w)),
                sys.length(w0) - sys.length(w),
                "{label}"
            );
            assert_eq!(sys.word_element(&sys.reduced_word(w)).unwrap(), w);
        }
    }
}

#[test]
fn reflections_are_odd_involutions() {
    for label in SMALL {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let refl = sys.reflections();
        assert_eq!(refl.len(), sys.length(sys.longest_element()));
        for &t in refl {
            assert_eq!(sys.mul(t, t), Elem::IDENTITY);
            assert_eq!(sys.length(t) % 2, 1);
        }
    }
}

#[test]
fn absolute_length_is_reflection_distance() {
    for label in SMALL.iter().chain(&["D4"]) {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let dist = cayley_distances(&sys, sys.reflections());
        for w in sys.elements() {
            assert_eq!(sys.absolute_length(w), dist[&w], "{label}");
            assert_eq!(sys.absolute_length(sys.inverse(w)), dist[&w]);
        }
        for u in sys.elements() {
            for w in sys.elements() {
                let le = dist[&u] + dist[&sys.mul(sys.inverse(u), w)] == dist[&w];
                assert_eq!(sys.absolute_le(u, w), le, "{label}");
            }
        }
    }
}

#[test]
fn absolute_order_is_a_partial_order() {
    for label in ["A3", "B3"] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let all: Vec<Elem> = sys.elements().collect();
        for &u in &all {
            assert!(sys.absolute_le(u, u));
            for &v in &all {
                if u != v && sys.absolute_le(u, v) {
                    assert!(!sys.absolute_le(v, u));
                    for &w in &all {
                        if sys.absolute_le(v, w) {
                            assert!(sys.absolute_le(u, w));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn weak_order_is_inversion_containment() {
    for label in ["A3", "B3", "I2(5)"] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for u in sys.elements() {
            let iu = sys.inversion_set(u);
            for w in sys.elements() {
                let iw = sys.inversion_set(w);
                assert_eq!(sys.weak_le(u, w), iu.iter().all(|t| iw.contains(t)));
            }
        }
    }
}

#[test]
fn noncrossing_counts() {
    let catalan = |n: u128| binom(2 * n, n) / (n + 1);
    let cases: Vec<(&str, u128)> = vec![
        ("A1", 2),
        ("A2", catalan(3)),
        ("A3", catalan(4)),
        ("A4", catalan(5)),
        ("B2", binom(4, 2)),
        ("B3", binom(6, 3)),
        ("D4", 10 * binom(6, 3) / 4),
        ("F4", 105),
        ("I2(5)", 7),
        ("I2(7)", 9),
        ("A1xA1", 4),
    ];
    for (label, count) in cases {
        let sys = CoxeterSystem::from_label(label).unwrap();
        assert_eq!(sys.fuss_catalan(1), count, "{label}");
        let words = if sys.rank() <= 3 {
            CoxeterWord::all(&sys)
        } else {
            vec![CoxeterWord::linear(&sys)]
        };
        for word in words {
            let c = word.element(&sys);
            let nc = noncrossing_partitions(&sys, c).unwrap();
            assert_eq!(nc.len() as u128, count, "{label}");
        }
    }
}

#[test]
fn noncrossing_lattice_is_graded_and_self_dual() {
    for label in ["A2", "A3", "B3", "I2(5)", "A1xA1"] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let c = word.element(&sys);
            let p = nc_lattice(&sys, c).unwrap();
            assert!(p.is_lattice());
            for &(a, b) in p.hasse_edges() {
                assert_eq!(
                    sys.absolute_length(*p.label(b)),
                    sys.absolute_length(*p.label(a)) + 1
                );
            }
            let k: Vec<usize> = p
                .labels()
                .iter()
                .map(|&w| p.index_of(&kreweras(&sys, c, w).unwrap()).unwrap())
                .collect();
            let mut seen = k.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), p.len());
            for i in 0..p.len() {
                for j in 0..p.len() {
                    assert_eq!(p.le(i, j), p.le(k[j], k[i]));
                }
            }
        }
        assert!(kreweras(&sys, sys.generator(0), sys.longest_element()).is_err());
    }
}

fn group_and_word() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    prop::sample::select(vec!["A3", "B3", "D4", "F4", "I2(7)", "A1xA2"]).prop_flat_map(|label| {
        let rank = CoxeterSystem::from_label(label).unwrap().rank();
        (Just(label), prop::collection::vec(0..rank, 0..24))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_laws((label, word) in group_and_word()) {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let w = sys.word_element(&word).unwrap();
        let l = sys.length(w);
        prop_assert!(l <= word.len());
        prop_assert_eq!(l % 2, word.len() % 2);
        prop_assert_eq!(l, sys.count_inverted_roots(w));
        prop_assert_eq!(sys.length(sys.inverse(w)), l);
        let w0 = sys.longest_element();
        prop_assert_eq!(sys.length(sys.mul(w, w0)), sys.length(w0) - l);
    }

    #[test]
    fn absolute_length_laws((label, word) in group_and_word(), g in 0usize..4) {
        let sys = CoxeterSystem::from_label(label).unwrap();
        let w = sys.word_element(&word).unwrap();
        let lr = sys.absolute_length(w);
        prop_assert!(lr <= sys.length(w));
        prop_assert!(lr <= sys.rank());
        prop_assert_eq!(lr % 2, sys.length(w) % 2);
        prop_assert_eq!(sys.absolute_length(sys.inverse(w)), lr);
        let x = sys.generator(g % sys.rank());
        prop_assert_eq!(sys.absolute_length(sys.conjugate(w, x)), lr);
        let t = sys.conjugate(x, w);
        prop_assert!(sys.is_reflection(t));
        prop_assert_eq!(sys.absolute_length(t), 1);
    }
}
