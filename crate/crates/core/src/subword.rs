//! Subword complexes: facets, flips and flip posets, plus the colored root
//! function that reads an m-factorization off a facet.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::PositiveBraid;
use crate::coxeter::{CoxeterSystem, Elem, Word};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// What the complement of a facet must spell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// A reduced word for the element.
    Element(Elem),
    /// A positive word for `Δ^m` in the Artin monoid.
    DeltaPower(usize),
}

/// A set of positions in a word, stored 0-based and sorted. Displayed and
/// serialized 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet(Vec<usize>);

impl Facet {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        Facet(positions)
    }

    /// Builds a facet from 1-based positions.
    pub fn from_one_based(positions: &[usize]) -> Result<Self> {
        if positions.contains(&0) {
            return Err(Error::InvalidArgument("positions are 1-based".into()));
        }
        Ok(Facet::new(positions.iter().map(|p| p - 1).collect()))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p + 1).collect()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Facet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Facet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Facet::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone)]
enum Prefix {
    Element(Elem),
    Braid(PositiveBraid),
}

/// The subword complex of a word `Q` and a target: facets are the position
/// sets whose complement spells the target.
#[derive(Clone, Debug)]
pub struct SubwordComplex<'a> {
    sys: &'a CoxeterSystem,
    word: Word,
    target: Target,
    facets: Vec<Facet>,
    index: HashMap<Facet, usize>,
}

impl<'a> SubwordComplex<'a> {
    /// Enumerates the facets by a depth-first scan over prefixes of `word`,
    /// pruning prefixes of the complement that cannot extend to the target.
    pub fn new(sys: &'a CoxeterSystem, word: Word, target: Target, cap: usize) -> Result<Self> {
        if word.iter().any(|&g| g >= sys.rank()) {
            return Err(Error::InvalidWord(format!("{word:?}")));
        }
        let a = match target {
            Target::Element(w) => sys.length(w),
            Target::DeltaPower(m) => m * sys.length(sys.longest_element()),
        };
        if a > word.len() {
            return Err(Error::Subword("target longer than the word".into()));
        }
        let start = match target {
            Target::Element(_) => Prefix::Element(Elem::IDENTITY),
            Target::DeltaPower(_) => Prefix::Braid(PositiveBraid::new()),
        };
        let mut facets = Vec::new();
        let mut current = Vec::new();
        let mut search = Search {
            sys,
            word: &word,
            target,
            skips: word.len() - a,
            cap,
            facets: &mut facets,
        };
        search.run(0, start, &mut current)?;
        if facets.is_empty() {
            return Err(Error::Subword(
                "the target has no subword in the word".into(),
            ));
        }
        facets.sort();
        let index = facets
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        Ok(SubwordComplex {
            sys,
            word,
            target,
            facets,
            index,
        })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_facet(&self, f: &Facet) -> bool {
        self.index.contains_key(f)
    }

    /// All facets `J` adjacent to `facet` with `facet \ {i} = J \ {j}`,
    /// with a flag telling whether the flip is increasing (`i < j`).
    pub fn flips(&self, facet: &Facet, i: usize) -> Result<Vec<(Facet, bool)>> {
        if !self.is_facet(facet) {
            return Err(Error::Subword(format!("{facet} is not a facet")));
        }
        if !facet.contains(i) {
            return Err(Error::Subword(format!("position {} not in {facet}", i + 1)));
        }
        let rest: Vec<usize> = facet
            .positions()
            .iter()
            .copied()
            .filter(|&p| p != i)
            .collect();
        Ok((0..self.word.len())
            .filter(|&j| !facet.contains(j))
            .filter_map(|j| {
                let mut cand = rest.clone();
                cand.push(j);
                let cand = Facet::new(cand);
                self.is_facet(&cand).then_some((cand, i < j))
            })
            .collect())
    }

    /// The flip at `i` when it is unique, as for the Cambrian search word.
    pub fn flip(&self, facet: &Facet, i: usize) -> Result<(Facet, bool)> {
        let mut all = self.flips(facet, i)?;
        match all.len() {
            0 => Err(Error::Subword(format!(
                "{facet} cannot be flipped at {}",
                i + 1
            ))),
            1 => Ok(all.pop().expect("one flip")),
            k => Err(Error::Subword(format!(
                "{facet} has {k} flips at {}",
                i + 1
            ))),
        }
    }

    /// Transitive closure of the increasing flips between adjacent facets.
    pub fn flip_poset(&self) -> Result<FinitePoset<Facet>> {
        let mut ridges: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
        for (a, f) in self.facets.iter().enumerate() {
            for &i in f.positions() {
                let ridge: Vec<usize> = f.positions().iter().copied().filter(|&p| p != i).collect();
                ridges.entry(ridge).or_default().push((i, a));
            }
        }
        let mut edges = Vec::new();
        for group in ridges.values() {
            for &(i, a) in group {
                for &(j, b) in group {
                    if i < j {
                        edges.push((a, b));
                    }
                }
            }
        }
        edges.sort_unstable();
        FinitePoset::from_covers(self.facets.clone(), edges)
    }

    /// See [`colored_roots`].
    pub fn colored_roots(&self, facet: &Facet) -> Vec<(usize, usize)> {
        colored_roots(self.sys, &self.word, facet)
    }
}

/// For each position `k` of `facet`, the pair `(color, root)` obtained by
/// walking back from `α_{q_k}` through the earlier complement letters:
/// meeting the root `α_{q_j}` raises the color, any other letter acts by
/// `s_{q_j}`.
pub fn colored_roots(sys: &CoxeterSystem, word: &[usize], facet: &Facet) -> Vec<(usize, usize)> {
    let complement: Vec<usize> = (0..word.len()).filter(|&j| !facet.contains(j)).collect();
    facet
        .positions()
        .iter()
        .map(|&k| {
            let mut root = sys.simple_root(word[k]);
            let mut color = 0;
            for &j in complement.iter().rev().filter(|&&j| j < k) {
                let g = word[j];
                if root == sys.simple_root(g) {
                    color += 1;
                } else {
                    root = sys.apply_generator_to_root(g, root);
                }
            }
            (color, root)
        })
        .collect()
}

struct Search<'s> {
    sys: &'s CoxeterSystem,
    word: &'s [usize],
    target: Target,
    skips: usize,
    cap: usize,
    facets: &'s mut Vec<Facet>,
}

impl Search<'_> {
    fn extend(&self, prefix: &Prefix, g: usize) -> Option<Prefix> {
        match (prefix, self.target) {
            (Prefix::Element(p), Target::Element(w)) => {
                let sys = self.sys;
                if sys.is_right_descent(*p, g) {
                    return None;
                }
                let next = sys.mul_generator(*p, g);
                let rest = sys.mul(sys.inverse(next), w);
                (sys.length(next) + sys.length(rest) == sys.length(w))
                    .then_some(Prefix::Element(next))
            }
            (Prefix::Braid(b), Target::DeltaPower(m)) => {
                let mut next = b.clone();
                next.push(self.sys, g);
                next.divides_delta_power(m).then_some(Prefix::Braid(next))
            }
            _ => unreachable!("prefix kind follows the target"),
        }
    }

    fn run(&mut self, pos: usize, prefix: Prefix, current: &mut Vec<usize>) -> Result<()> {
        if pos == self.word.len() {
            if self.facets.len() >= self.cap {
                return Err(Error::CapExceeded {
                    what: "facets",
                    cap: self.cap,
                });
            }
            self.facets.push(Facet(current.clone()));
            return Ok(());
        }
        if current.len() < self.skips {
            current.push(pos);
            self.run(pos + 1, prefix.clone(), current)?;
            current.pop();
        }
        let remaining = self.word.len() - pos;
        if self.skips - current.len() < remaining {
            if let Some(next) = self.extend(&prefix, self.word[pos]) {
                self.run(pos + 1, next, current)?;
            }
        }
        Ok(())
    }
}
