//! Search words, the greedy comparison algorithm, the vertical and diagonal
//! criterion, and the structural maps between m-Cambrian lattices (shift
//! operator, rank reduction, embeddings and projections).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::braid::PositiveBraid;
use crate::cambrian::{Cambrian, CoxeterWord};
use crate::coxeter::{CoxeterSystem, Elem, Word};
use crate::error::{Error, Result};
use crate::factorization::{ColoredReflection, MCambrian, MFactorization};
use crate::poset::FinitePoset;
use crate::subword::Facet;

/// Why the greedy algorithm stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbortRule {
    /// The letter is in the current factorization but not the target, and
    /// has the top color so it cannot be rotated.
    TopColor,
    /// The letter is in the target but missing from the current
    /// factorization.
    MissingInSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub letter: ColoredReflection,
    pub rule: AbortRule,
    /// Number of rotations performed before the abort.
    pub step: usize,
}

/// Result of the greedy algorithm: the c-increasing chain on success, the
/// offending letter otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificate {
    pub comparable: bool,
    pub chain: Vec<ColoredReflection>,
    pub witness: Option<Witness>,
}

impl<'a> MCambrian<'a> {
    /// `c` followed by the c-sorting word of `Δ^m`: the letters of `c^∞`
    /// are scanned and kept while the kept prefix still divides `Δ^m`.
    pub fn search_word(&self) -> Word {
        let sys = self.system();
        let c = self.base().coxeter_word().letters();
        let target = self.m() * sys.length(sys.longest_element());
        let mut word = Vec::with_capacity(target);
        let mut braid = PositiveBraid::new();
        let mut idle = 0;
        for &g in c.iter().cycle() {
            if word.len() == target || idle > c.len() {
                break;
            }
            let mut next = braid.clone();
            next.push(sys, g);
            if next.divides_delta_power(self.m()) {
                braid = next;
                word.push(g);
                idle = 0;
            } else {
                idle += 1;
            }
        }
        let mut q = c.to_vec();
        q.extend(word);
        q
    }

    /// Runs the greedy algorithm from `f` towards `g`.
    pub fn greedy_chain(&self, f: &MFactorization, g: &MFactorization) -> ChainCertificate {
        let mut current = f.clone();
        let mut chain = Vec::new();
        for letter in self.alphabet() {
            let in_current = current.contains(letter);
            if in_current == g.contains(letter) {
                continue;
            }
            let rule = if !in_current {
                AbortRule::MissingInSource
            } else if letter.color == self.m() {
                AbortRule::TopColor
            } else {
                current = self
                    .rotate(&current, letter)
                    .expect("rotation at a present letter of lower color");
                chain.push(letter);
                continue;
            };
            return ChainCertificate {
                comparable: false,
                witness: Some(Witness {
                    letter,
                    rule,
                    step: chain.len(),
                }),
                chain,
            };
        }
        debug_assert_eq!(&current, g);
        ChainCertificate {
            comparable: true,
            chain,
            witness: None,
        }
    }

    pub fn greedy_le(&self, f: &MFactorization, g: &MFactorization) -> bool {
        self.greedy_chain(f, g).comparable
    }

    /// The factorizations visited by the chain of a successful certificate.
    pub fn chain_elements(
        &self,
        f: &MFactorization,
        chain: &[ColoredReflection],
    ) -> Result<Vec<MFactorization>> {
        let mut out = vec![f.clone()];
        for &r in chain {
            let next = self.rotate(out.last().expect("non-empty"), r)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Checks the vertical and diagonal conditions between two
    /// m-noncrossing partitions.
    pub fn mleq_criterion(&self, a: &[Elem], b: &[Elem]) -> Result<CriterionOutcome> {
        self.from_multichain(a)?;
        self.from_multichain(b)?;
        let sys = self.system();
        let one = MCambrian::new(self.base(), 1);
        for i in 0..self.m() {
            let x = one.from_multichain(&[a[i]])?;
            let y = one.from_multichain(&[b[i]])?;
            if !one.greedy_le(&x, &y) {
                return Ok(CriterionOutcome::Fails(CriterionFailure {
                    condition: Condition::Vertical,
                    index: i + 1,
                    lower: a[i],
                    upper: b[i],
                }));
            }
        }
        for i in 0..self.m().saturating_sub(1) {
            if !sys.absolute_le(a[i], b[i + 1]) {
                return Ok(CriterionOutcome::Fails(CriterionFailure {
                    condition: Condition::Diagonal,
                    index: i + 1,
                    lower: a[i],
                    upper: b[i + 1],
                }));
            }
        }
        Ok(CriterionOutcome::Holds)
    }

    /// The m-Cambrian lattice on multichains ordered by the vertical and
    /// diagonal conditions.
    pub fn criterion_poset(&self) -> Result<FinitePoset<Vec<Elem>>> {
        let chains = self.multichains()?;
        let one = MCambrian::new(self.base(), 1);
        let nc = self.base().noncrossing();
        let ones: HashMap<Elem, MFactorization> = nc
            .iter()
            .map(|&x| Ok((x, one.from_multichain(&[x])?)))
            .collect::<Result<_>>()?;
        let camb: HashMap<(Elem, Elem), bool> = nc
            .iter()
            .flat_map(|&x| nc.iter().map(move |&y| (x, y)))
            .map(|(x, y)| ((x, y), one.greedy_le(&ones[&x], &ones[&y])))
            .collect();
        let sys = self.system();
        let m = self.m();
        let copy = chains.clone();
        FinitePoset::from_relation(chains, |i, j| {
            let (a, b) = (&copy[i], &copy[j]);
            (0..m).all(|k| camb[&(a[k], b[k])])
                && (0..m.saturating_sub(1)).all(|k| sys.absolute_le(a[k], b[k + 1]))
        })
    }

    /// `ψ^m(g)`: conjugation of the generator `g` by `w0^m`.
    pub fn twisted_generator(&self, g: usize) -> usize {
        let sys = self.system();
        if self.m().is_multiple_of(2) {
            return g;
        }
        let w0 = sys.longest_element();
        let t = sys.conjugate(sys.generator(g), w0);
        (0..sys.rank())
            .find(|&h| sys.generator(h) == t)
            .expect("w0 permutes the simple reflections")
    }

    /// The shift operator: moves the first letter of the search word to the
    /// end (twisted by `w0^m`) and transports the facet to the search word
    /// of the shifted Coxeter word.
    pub fn shift(&self, facet: &Facet) -> Result<Shifted> {
        let q = self.search_word();
        let p = q.len();
        let mut rotated: Word = q[1..].to_vec();
        rotated.push(self.twisted_generator(q[0]));
        let mut moved: Vec<usize> = facet
            .positions()
            .iter()
            .filter(|&&i| i > 0)
            .map(|&i| i - 1)
            .collect();
        if facet.contains(0) {
            moved.push(p - 1);
        }
        let word = self.base().coxeter_word().shifted();
        let shifted = Cambrian::new(self.system(), word.clone())?;
        let target = MCambrian::new(&shifted, self.m()).search_word();
        if !commutation_equivalent(self.system(), &rotated, &target) {
            return Err(Error::Invariant(
                "shifted word is not commutation equivalent to the search word".into(),
            ));
        }
        let map = occurrence_map(&rotated, &target);
        Ok(Shifted {
            word,
            facet: Facet::new(moved.into_iter().map(|i| map[i]).collect()),
        })
    }

    /// The whole shift map as a list of facet pairs, together with the
    /// flip posets on both sides.
    pub fn shift_operator(&self) -> Result<ShiftMap> {
        let source = self.subword_complex()?;
        let poset = source.flip_poset()?;
        let mut images = Vec::with_capacity(poset.len());
        let mut word = None;
        for f in poset.labels() {
            let s = self.shift(f)?;
            word = Some(s.word.clone());
            images.push(s.facet);
        }
        let word = word.unwrap_or_else(|| self.base().coxeter_word().shifted());
        let shifted = Cambrian::new(self.system(), word.clone())?;
        let target = MCambrian::new(&shifted, self.m())
            .with_cap(self.cap())
            .sc_poset()?;
        let map = images
            .iter()
            .map(|f| {
                target
                    .index_of(f)
                    .ok_or_else(|| Error::Invariant(format!("shifted facet {f} is not a facet")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ShiftMap {
            word,
            source: poset,
            target,
            map,
        })
    }

    /// The facets containing all positions of `e`, with the parabolic
    /// m-Cambrian lattice they are isomorphic to.
    pub fn restrict_to_common(&self, e: &Facet) -> Result<Restriction> {
        let sc = self.subword_complex()?;
        let poset = sc.flip_poset()?;
        let members: Vec<usize> = (0..poset.len())
            .filter(|&i| e.positions().iter().all(|&p| poset.label(i).contains(p)))
            .collect();
        if members.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "{e} is contained in no facet"
            )));
        }
        let (bottom, top) = poset.as_interval(&members).ok_or_else(|| {
            Error::Invariant(format!("facets containing {e} do not form an interval"))
        })?;
        let interval = poset.induced(&members);
        let sys = self.system();
        let bottom_facet = poset.label(bottom).clone();
        let roots = sc.colored_roots(&bottom_facet);
        let gens: Vec<Elem> = bottom_facet
            .positions()
            .iter()
            .zip(&roots)
            .filter(|(p, _)| !e.contains(**p))
            .map(|(_, &(_, root))| sys.reflection_of_root(root))
            .collect();
        let generators = sys.canonical_generators(&gens);
        let parabolic = sys.parabolic_subgroup(&generators)?;
        let sub = &parabolic.system;
        let mut words = vec![CoxeterWord::linear(sub)];
        words.extend(CoxeterWord::all(sub));
        let mut found = None;
        for word in words {
            let camb = Cambrian::new(sub, word.clone())?;
            let model = MCambrian::new(&camb, self.m())
                .with_cap(self.cap())
                .sc_poset()?;
            if let Some(iso) = interval.find_isomorphism(&model) {
                if interval.verify_isomorphism(&model, &iso).is_ok() {
                    found = Some((word, model.len()));
                    break;
                }
            }
        }
        let (word, size) = found.ok_or_else(|| {
            Error::Invariant(format!(
                "no parabolic m-Cambrian lattice matches the facets containing {e}"
            ))
        })?;
        Ok(Restriction {
            bottom,
            top,
            interval,
            generators,
            coxeter_word: word.letters().to_vec(),
            parabolic_size: size,
            rank: sub.rank(),
        })
    }

    /// Shifts every color of an m'-factorization by `offset`.
    pub fn embed(
        &self,
        small: &MCambrian<'_>,
        f: &MFactorization,
        offset: usize,
    ) -> Result<MFactorization> {
        if offset + small.m() > self.m() {
            return Err(Error::InvalidArgument(format!(
                "offset {offset} with m' = {} exceeds m = {}",
                small.m(),
                self.m()
            )));
        }
        self.factorization(
            f.letters()
                .iter()
                .map(|r| ColoredReflection::new(r.color + offset, r.index))
                .collect(),
        )
    }

    /// The factorization with every letter of the c-increasing word of `c`
    /// in the given color.
    pub fn monochromatic(&self, color: usize) -> Result<MFactorization> {
        let word = self.base().increasing_word(self.base().coxeter_element())?;
        self.factorization(
            word.iter()
                .map(|&i| ColoredReflection::new(color, i))
                .collect(),
        )
    }

    /// Keeps the components `window.start .. window.start + m'` of the
    /// multichain.
    pub fn project(
        &self,
        small: &MCambrian<'_>,
        f: &MFactorization,
        start: usize,
    ) -> Result<MFactorization> {
        if start + small.m() > self.m() {
            return Err(Error::InvalidArgument(format!(
                "window {start}..{} exceeds m = {}",
                start + small.m(),
                self.m()
            )));
        }
        let chain = self.to_multichain(f);
        small.from_multichain(&chain[start..start + small.m()])
    }
}

/// A facet of the search word of the shifted Coxeter word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shifted {
    pub word: CoxeterWord,
    pub facet: Facet,
}

/// The shift operator between the flip posets of `c` and of `c'`.
#[derive(Debug)]
pub struct ShiftMap {
    pub word: CoxeterWord,
    pub source: FinitePoset<Facet>,
    pub target: FinitePoset<Facet>,
    /// Source index to target index.
    pub map: Vec<usize>,
}

impl ShiftMap {
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.len() == self.target.len()
            && self
                .map
                .iter()
                .all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    /// Whether the map restricted to `subset` is an isomorphism onto its
    /// image, both sides with the induced orders.
    pub fn restriction_is_isomorphism(&self, subset: &[usize]) -> bool {
        let image: Vec<usize> = subset.iter().map(|&i| self.map[i]).collect();
        subset.iter().enumerate().all(|(a, &i)| {
            subset
                .iter()
                .enumerate()
                .all(|(b, &j)| self.source.le(i, j) == self.target.le(image[a], image[b]))
        })
    }

    /// Indices of the facets containing (`true`) or avoiding (`false`) the
    /// first position of the search word.
    pub fn split(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.source.len()).partition(|&i| self.source.label(i).contains(0))
    }
}

#[derive(Debug)]
pub struct Restriction {
    pub bottom: usize,
    pub top: usize,
    pub interval: FinitePoset<Facet>,
    /// Canonical generators of the parabolic subgroup.
    pub generators: Vec<Elem>,
    /// Coxeter word of the parabolic subgroup realising the isomorphism.
    pub coxeter_word: Word,
    pub parabolic_size: usize,
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Vertical,
    Diagonal,
}

/// The first condition that fails, with 1-based index `i`: vertical compares
/// `a_i` and `b_i` in the Cambrian lattice, diagonal compares `a_i` and
/// `b_{i+1}` in absolute order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionFailure {
    pub condition: Condition,
    pub index: usize,
    pub lower: Elem,
    pub upper: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionOutcome {
    Holds,
    Fails(CriterionFailure),
}

impl CriterionOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CriterionOutcome::Holds)
    }

    pub fn failure(&self) -> Option<CriterionFailure> {
        match self {
            CriterionOutcome::Holds => None,
            CriterionOutcome::Fails(f) => Some(*f),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Vertical => write!(f, "vertical"),
            Condition::Diagonal => write!(f, "diagonal"),
        }
    }
}

/// Lexicographically smallest word in the commutation class: repeatedly
/// take the smallest letter that commutes with everything before it.
pub fn commutation_normal_form(sys: &CoxeterSystem, word: &[usize]) -> Word {
    let mut rest = word.to_vec();
    let mut out = Vec::with_capacity(word.len());
    let commute = |a: usize, b: usize| a != b && sys.coxeter_matrix()[a][b] == 2;
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..rest.len() {
            if rest[..k].iter().all(|&x| commute(x, rest[k]))
                && best.is_none_or(|b| rest[k] < rest[b])
            {
                best = Some(k);
            }
        }
        let k = best.expect("the first letter is always available");
        out.push(rest.remove(k));
    }
    out
}

pub fn commutation_equivalent(sys: &CoxeterSystem, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && commutation_normal_form(sys, a) == commutation_normal_form(sys, b)
}

/// Matches the k-th occurrence of each letter in `from` with the k-th
/// occurrence in `to`.
fn occurrence_map(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut positions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &g) in to.iter().enumerate() {
        positions.entry(g).or_default().push(j);
    }
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    from.iter()
        .map(|&g| {
            let k = seen.entry(g).or_default();
            let j = positions[&g][*k];
            *k += 1;
            j
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::from_label("A2").unwrap()
    }

    #[test]
    fn search_words() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        assert_eq!(MCambrian::new(&camb, 1).search_word(), vec![0, 1, 0, 1, 0]);
        assert_eq!(
            MCambrian::new(&camb, 2).search_word(),
            vec![0, 1, 0, 1, 0, 1, 0, 1]
        );
        let a1 = CoxeterSystem::from_label("A1").unwrap();
        let camb = Cambrian::new(&a1, CoxeterWord::linear(&a1)).unwrap();
        assert_eq!(MCambrian::new(&camb, 3).search_word(), vec![0; 4]);
    }

    #[test]
    fn search_word_closed_form() {
        for label in ["A2", "A3", "B2", "B3", "I2(5)", "A1xA1"] {
            let sys = CoxeterSystem::from_label(label).unwrap();
            let h = sys
                .components()
                .iter()
                .map(|c| c.coxeter_number())
                .max()
                .unwrap() as usize;
            if sys.components().len() > 1
                && sys
                    .components()
                    .iter()
                    .any(|c| c.coxeter_number() as usize != h)
            {
                continue;
            }
            for word in CoxeterWord::all(&sys) {
                let camb = Cambrian::new(&sys, word.clone()).unwrap();
                let w0 =
                    crate::cambrian::sorting_word(&sys, &word, sys.longest_element()).letters();
                for m in 1..=3 {
                    let c = word.letters();
                    let mut expected = c.to_vec();
                    let copies = if m % 2 == 0 {
                        h * m / 2
                    } else {
                        h * (m - 1) / 2
                    };
                    for _ in 0..copies {
                        expected.extend_from_slice(c);
                    }
                    if m % 2 == 1 {
                        expected.extend_from_slice(&w0);
                    }
                    let q = MCambrian::new(&camb, m).search_word();
                    assert!(commutation_equivalent(&sys, &q, &expected), "{label} m={m}");
                }
            }
        }
    }

    #[test]
    fn greedy_bottom_to_top() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let cert = mc.greedy_chain(&mc.bottom(), &mc.top());
        assert!(cert.comparable);
        let chain: Vec<usize> = cert.chain.iter().map(|r| r.index).collect();
        assert_eq!(chain, vec![0, 1, 2]);
        let back = mc.greedy_chain(&mc.top(), &mc.bottom());
        assert!(!back.comparable);
        assert_eq!(back.witness.unwrap().rule, AbortRule::MissingInSource);
    }

    #[test]
    fn certificate_json() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let cert = mc.greedy_chain(&mc.top(), &mc.bottom());
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["comparable"], false);
        assert_eq!(json["witness"]["rule"], "missing-in-source");
        let cert = mc.greedy_chain(&mc.bottom(), &mc.bottom());
        assert_eq!(
            serde_json::to_value(&cert).unwrap()["chain"],
            serde_json::json!([])
        );
    }

    #[test]
    fn commutation_classes() {
        let a3 = CoxeterSystem::from_label("A3").unwrap();
        assert!(commutation_equivalent(&a3, &[0, 2, 1], &[2, 0, 1]));
        assert!(!commutation_equivalent(&a3, &[0, 1, 2], &[1, 0, 2]));
        assert_eq!(
            commutation_normal_form(&a3, &[2, 1, 0, 2]),
            vec![2, 1, 0, 2]
        );
        assert_eq!(commutation_normal_form(&a3, &[2, 0, 1]), vec![0, 2, 1]);
    }

    #[test]
    fn shift_on_a2() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let shift = mc.shift_operator().unwrap();
        assert!(shift.is_bijection());
        assert_eq!(shift.word.letters(), &[1, 0]);
        let (with, without) = shift.split();
        let with_facets: Vec<String> = with
            .iter()
            .map(|&i| shift.source.label(i).to_string())
            .collect();
        assert_eq!(with_facets, vec!["{1,2}", "{1,5}"]);
        assert!(shift.source.as_interval(&with).is_some());
        assert!(shift.source.as_interval(&without).is_some());
        assert!(shift.restriction_is_isomorphism(&with));
        assert!(shift.restriction_is_isomorphism(&without));
    }

    #[test]
    fn restriction_examples() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let whole = mc.restrict_to_common(&Facet::new(vec![])).unwrap();
        assert_eq!(whole.interval.len(), 5);
        assert_eq!(whole.rank, 2);
        let one = mc.restrict_to_common(&Facet::new(vec![0])).unwrap();
        assert_eq!(one.interval.len(), 2);
        assert_eq!(one.rank, 1);
        let full = mc.restrict_to_common(&Facet::new(vec![0, 1])).unwrap();
        assert_eq!(full.interval.len(), 1);
        assert_eq!(full.rank, 0);
        assert!(mc.restrict_to_common(&Facet::new(vec![0, 2])).is_err());
    }
}
