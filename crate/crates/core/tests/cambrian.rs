use std::collections::BTreeSet;

use cambrian_core::cambrian::{increasing_words, is_sortable, iso_three_versions, sorting_word};
use cambrian_core::checks::{align_rows, pentagon_expected, three_version_table};
use cambrian_core::{Cambrian, ColoredReflection, CoxeterSystem, CoxeterWord, Elem, MCambrian};

const GROUPS: [&str; 9] = [
    "A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(6)", "I2(7)", "A1xA1",
];

/// Greedy leftmost reduced subword of `c c c ...`, split into copies of `c`.
fn sorting_blocks(sys: &CoxeterSystem, c: &[usize], w: Elem) -> Vec<Vec<usize>> {
    let mut rest = w;
    let mut blocks = Vec::new();
    while rest != Elem::IDENTITY {
        let mut block = Vec::new();
        for &s in c {
            let next = sys.mul(sys.generator(s), rest);
            if sys.length(next) < sys.length(rest) {
                block.push(s);
                rest = next;
            }
        }
        blocks.push(block);
    }
    blocks
}

#[test]
fn pentagon_for_st() {
    let sys = CoxeterSystem::from_label("A2").unwrap();
    let camb = Cambrian::parse(&sys, "st").unwrap();
    assert_eq!(sys.format_word(&camb.search_word()), "ststs");
    let names: Vec<String> = camb
        .reflection_order()
        .reflections()
        .iter()
        .map(|&t| sys.format_element(t))
        .collect();
    assert_eq!(names, ["s", "sts", "t"]);
    let table = three_version_table(&camb).unwrap();
    assert_eq!(
        align_rows(&table, &pentagon_expected()).unwrap(),
        pentagon_expected()
    );
}

#[test]
fn three_versions_for_every_coxeter_word() {
    for label in GROUPS {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let camb = Cambrian::new(&sys, word).unwrap();
            let tv = iso_three_versions(&camb).unwrap();
            assert!(tv.isomorphic(), "{label}: {:?}", tv.counterexample);
            assert_eq!(tv.sort.len() as u128, sys.fuss_catalan(1));
            assert!(tv.sort.is_lattice());
        }
    }
}

#[test]
fn sortable_elements_match_nested_supports() {
    for label in ["A3", "B3", "I2(5)", "A1xA2"] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let c = word.letters().to_vec();
            let mut count = 0u128;
            for w in sys.elements() {
                let blocks = sorting_blocks(&sys, &c, w);
                let sw = sorting_word(&sys, &word, w);
                assert_eq!(sw.letters(), blocks.concat());
                assert_eq!(sw.len(), sys.length(w));
                let supports: Vec<BTreeSet<usize>> =
                    blocks.iter().map(|b| b.iter().copied().collect()).collect();
                let nested = supports.windows(2).all(|p| p[1].is_subset(&p[0]));
                assert_eq!(is_sortable(&sys, &word, w), nested, "{label}");
                count += nested as u128;
            }
            assert_eq!(count, sys.fuss_catalan(1));
        }
    }
}

#[test]
fn increasing_words_are_unique_and_spell_their_element() {
    for label in ["A3", "B3", "I2(7)", "A1xA1"] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let camb = Cambrian::new(&sys, word).unwrap();
            let order = camb.reflection_order();
            assert_eq!(order.len(), sys.num_reflections());
            for &w in camb.noncrossing() {
                let all = increasing_words(&sys, order, w);
                assert_eq!(all.len(), 1, "{label}");
                let product = all[0]
                    .iter()
                    .fold(Elem::IDENTITY, |acc, &i| sys.mul(acc, order.get(i)));
                assert_eq!(product, w);
                assert_eq!(all[0].len(), sys.absolute_length(w));
                assert_eq!(camb.increasing_word(w).unwrap(), &all[0][..]);
            }
        }
    }
}

#[test]
fn facets_have_rank_many_positions() {
    for (label, m) in [("A2", 3), ("B2", 2), ("A3", 2), ("I2(6)", 2), ("A1xA1", 3)] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let camb = Cambrian::new(&sys, word).unwrap();
            let mc = MCambrian::new(&camb, m);
            let sc = mc.subword_complex().unwrap();
            let n = sys.length(sys.longest_element());
            assert_eq!(sc.word().len(), sys.rank() + m * n);
            for f in sc.facets() {
                assert_eq!(f.len(), sc.word().len() - m * n);
            }
        }
    }
}

#[test]
fn rotations_raise_the_letter_sequence() {
    for (label, m) in [("A2", 3), ("B2", 3), ("A3", 2), ("I2(5)", 2)] {
        let sys = CoxeterSystem::from_label(label).unwrap();
        for word in CoxeterWord::all(&sys) {
            let camb = Cambrian::new(&sys, word).unwrap();
            let mc = MCambrian::new(&camb, m);
            for f in mc.factorizations().unwrap() {
                assert!(f.letters().windows(2).all(|w| w[0] < w[1]));
                for (r, g) in mc.upper_covers(&f) {
                    assert!(g.letters() > f.letters());
                    let keep = f.letters().iter().take_while(|&&l| l < r).count();
                    assert_eq!(&g.letters()[..keep], &f.letters()[..keep]);
                    assert!(!g.contains(r));
                }
            }
        }
    }
}

#[test]
fn a_cover_keeping_the_colors() {
    let sys = CoxeterSystem::from_label("A2").unwrap();
    let camb = Cambrian::parse(&sys, "st").unwrap();
    let mc = MCambrian::new(&camb, 1);
    let f = mc
        .factorization(vec![
            ColoredReflection::new(0, 1),
            ColoredReflection::new(1, 0),
        ])
        .unwrap();
    let g = mc.rotate(&f, ColoredReflection::new(0, 1)).unwrap();
    assert_eq!(g.to_string(), "[3^0 2^1]");
    assert_eq!(g.color_sum(), f.color_sum());
}
