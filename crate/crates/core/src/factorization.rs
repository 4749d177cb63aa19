//! m-factorizations of a Coxeter element, their rotations, and the two
//! models (noncrossing and subword complex) of the m-Cambrian lattice.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cambrian::Cambrian;
use crate::coxeter::{CoxeterSystem, Elem, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::subword::{colored_roots, Facet, SubwordComplex, Target};

/// A letter of `R(c)^{m+1}`: the copy (color) and the position in `R(c)`.
/// The derived order is the extended order `≤_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct ColoredReflection {
    pub color: usize,
    pub index: usize,
}

impl ColoredReflection {
    pub fn new(color: usize, index: usize) -> Self {
        ColoredReflection { color, index }
    }
}

impl From<(usize, usize)> for ColoredReflection {
    fn from((color, index): (usize, usize)) -> Self {
        ColoredReflection { color, index }
    }
}

impl From<ColoredReflection> for (usize, usize) {
    fn from(r: ColoredReflection) -> Self {
        (r.color, r.index)
    }
}

/// A reduced R-word for `c` realised as a strictly increasing set of
/// letters of `R(c)^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MFactorization {
    m: usize,
    letters: Vec<ColoredReflection>,
    values: Vec<Elem>,
}

impl MFactorization {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn letters(&self) -> &[ColoredReflection] {
        &self.letters
    }

    /// The reflections spelled by the letters.
    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn contains(&self, r: ColoredReflection) -> bool {
        self.letters.binary_search(&r).is_ok()
    }

    pub fn color_sum(&self) -> usize {
        self.letters.iter().map(|r| r.color).sum()
    }

    /// Number of letters `≤_c r`.
    pub fn dimr(&self, r: ColoredReflection) -> usize {
        self.letters.partition_point(|&l| l <= r)
    }
}

impl fmt::Display for MFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|r| format!("{}^{}", r.index + 1, r.color))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Serialize for MFactorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

/// The m-Cambrian lattice of `(W, c)` in its factorization and subword
/// complex models.
#[derive(Clone, Copy, Debug)]
pub struct MCambrian<'a> {
    base: &'a Cambrian<'a>,
    m: usize,
    cap: usize,
}

impl<'a> MCambrian<'a> {
    pub fn new(base: &'a Cambrian<'a>, m: usize) -> Self {
        MCambrian {
            base,
            m,
            cap: DEFAULT_ELEMENT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn base(&self) -> &'a Cambrian<'a> {
        self.base
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.base.system()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn value(&self, r: ColoredReflection) -> Elem {
        self.base.reflection_order().get(r.index)
    }

    /// All letters of `R(c)^{m+1}` in extended order.
    pub fn alphabet(&self) -> impl Iterator<Item = ColoredReflection> {
        let n = self.base.reflection_order().len();
        let m = self.m;
        (0..=m).flat_map(move |c| (0..n).map(move |i| ColoredReflection::new(c, i)))
    }

    /// Validates a set of letters as an m-factorization of `c`.
    pub fn factorization(&self, mut letters: Vec<ColoredReflection>) -> Result<MFactorization> {
        letters.sort_unstable();
        let n = self.base.reflection_order().len();
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFactorization("repeated letter".into()));
        }
        if let Some(r) = letters.iter().find(|r| r.color > self.m || r.index >= n) {
            return Err(Error::InvalidFactorization(format!(
                "letter {r:?} out of range"
            )));
        }
        let sys = self.system();
        let values: Vec<Elem> = letters.iter().map(|&r| self.value(r)).collect();
        let product = values
            .iter()
            .fold(Elem::IDENTITY, |acc, &t| sys.mul(acc, t));
        if product != self.base.coxeter_element() || values.len() != sys.absolute_length(product) {
            return Err(Error::InvalidFactorization(
                "letters do not form a reduced word for c".into(),
            ));
        }
        Ok(MFactorization {
            m: self.m,
            letters,
            values,
        })
    }

    /// The multichain `w_1 ≤_R ... ≤_R w_m` of a factorization: `w_i` is the
    /// product of the letters of color at least `m - i + 1`.
    pub fn to_multichain(&self, f: &MFactorization) -> Vec<Elem> {
        let sys = self.system();
        (1..=self.m)
            .map(|i| {
                f.letters
                    .iter()
                    .zip(&f.values)
                    .filter(|(r, _)| r.color > self.m - i)
                    .fold(Elem::IDENTITY, |acc, (_, &t)| sys.mul(acc, t))
            })
            .collect()
    }

    /// Inverse of [`Self::to_multichain`]: colour `j` carries the c-increasing
    /// word of `w_{m-j+1} w_{m-j}^{-1}`, with `w_0 = e` and `w_{m+1} = c`.
    pub fn from_multichain(&self, chain: &[Elem]) -> Result<MFactorization> {
        let sys = self.system();
        if chain.len() != self.m {
            return Err(Error::InvalidMultichain(format!(
                "expected {} components, got {}",
                self.m,
                chain.len()
            )));
        }
        let c = self.base.coxeter_element();
        let mut ext = vec![Elem::IDENTITY];
        ext.extend_from_slice(chain);
        ext.push(c);
        for w in ext.windows(2) {
            if !sys.contains(w[0]) || !sys.contains(w[1]) || !sys.absolute_le(w[0], w[1]) {
                return Err(Error::InvalidMultichain(
                    "components are not increasing in absolute order".into(),
                ));
            }
        }
        let mut letters = Vec::new();
        for j in 0..=self.m {
            let part = sys.mul(ext[self.m - j + 1], sys.inverse(ext[self.m - j]));
            let word = self
                .base
                .increasing_word(part)
                .map_err(|_| Error::InvalidMultichain("quotient is not noncrossing".into()))?;
            letters.extend(word.iter().map(|&i| ColoredReflection::new(j, i)));
        }
        self.factorization(letters)
    }

    /// All m-multichains of `NC(W, c)`.
    pub fn multichains(&self) -> Result<Vec<Vec<Elem>>> {
        let expected = self.system().fuss_catalan(self.m as u64);
        if expected > self.cap as u128 {
            return Err(Error::CapExceeded {
                what: "m-factorizations",
                cap: self.cap,
            });
        }
        let sys = self.system();
        let nc = self.base.noncrossing();
        let mut out = Vec::new();
        let mut chain = vec![Elem::IDENTITY; self.m];
        fn fill(
            sys: &CoxeterSystem,
            nc: &[Elem],
            i: usize,
            upper: Option<Elem>,
            chain: &mut Vec<Elem>,
            out: &mut Vec<Vec<Elem>>,
        ) {
            if i == 0 {
                out.push(chain.clone());
                return;
            }
            for &w in nc {
                if upper.is_none_or(|u| sys.absolute_le(w, u)) {
                    chain[i - 1] = w;
                    fill(sys, nc, i - 1, Some(w), chain, out);
                }
            }
        }
        fill(sys, nc, self.m, None, &mut chain, &mut out);
        Ok(out)
    }

    /// All m-factorizations, ordered by color sum then letters.
    pub fn factorizations(&self) -> Result<Vec<MFactorization>> {
        let mut out = self
            .multichains()?
            .iter()
            .map(|chain| self.from_multichain(chain))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|a, b| (a.color_sum(), &a.letters).cmp(&(b.color_sum(), &b.letters)));
        Ok(out)
    }

    pub fn bottom(&self) -> MFactorization {
        self.from_multichain(&vec![Elem::IDENTITY; self.m])
            .expect("the trivial multichain is valid")
    }

    pub fn top(&self) -> MFactorization {
        self.from_multichain(&vec![self.base.coxeter_element(); self.m])
            .expect("the constant multichain c is valid")
    }

    /// Increasing rotation at `at = r^{(i)}`: every letter strictly between
    /// `r^{(i)}` and `r^{(i+1)}` is conjugated by `r` and re-placed in color
    /// `i` or `i + 1` according to its position relative to `r`, then
    /// `r^{(i)}` becomes `r^{(i+1)}`. Re-placed letters that commute may
    /// change their relative order; the result is validated as a
    /// factorization of `c`.
    pub fn rotate(&self, f: &MFactorization, at: ColoredReflection) -> Result<MFactorization> {
        if !f.contains(at) {
            return Err(Error::InvalidRotation(
                format!("{at:?}"),
                "letter not in the factorization",
            ));
        }
        if at.color >= self.m {
            return Err(Error::InvalidRotation(
                format!("{at:?}"),
                "letter has the top color",
            ));
        }
        let sys = self.system();
        let order = self.base.reflection_order();
        let r = self.value(at);
        let next = ColoredReflection::new(at.color + 1, at.index);
        let mut letters = Vec::with_capacity(f.letters.len());
        for &q in &f.letters {
            if q == at {
                continue;
            }
            if q > at && q < next {
                let t = sys.conjugate(self.value(q), r);
                let index = order
                    .position(t)
                    .expect("conjugates of reflections are reflections");
                let color = if index > at.index {
                    at.color
                } else {
                    at.color + 1
                };
                letters.push(ColoredReflection::new(color, index));
            } else {
                letters.push(q);
            }
        }
        letters.push(next);
        self.factorization(letters)
    }

    /// Upper covers as `(rotated letter, result)` pairs.
    pub fn upper_covers(&self, f: &MFactorization) -> Vec<(ColoredReflection, MFactorization)> {
        f.letters
            .iter()
            .filter(|r| r.color < self.m)
            .map(|&r| {
                (
                    r,
                    self.rotate(f, r)
                        .expect("rotation of a lower color is defined"),
                )
            })
            .collect()
    }

    /// Transitive closure of increasing rotations.
    pub fn nc_poset(&self) -> Result<FinitePoset<MFactorization>> {
        let elems = self.factorizations()?;
        let index: std::collections::HashMap<&MFactorization, usize> =
            elems.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut edges = Vec::new();
        for (i, f) in elems.iter().enumerate() {
            for (_, g) in self.upper_covers(f) {
                let j = *index
                    .get(&g)
                    .ok_or_else(|| Error::Invariant(format!("rotation of {f} leaves the set")))?;
                edges.push((i, j));
            }
        }
        drop(index);
        FinitePoset::from_covers(elems, edges)
    }

    pub fn subword_complex(&self) -> Result<SubwordComplex<'a>> {
        let q = self.search_word();
        if self.system().fuss_catalan(self.m as u64) > self.cap as u128 {
            return Err(Error::CapExceeded {
                what: "facets",
                cap: self.cap,
            });
        }
        SubwordComplex::new(self.system(), q, Target::DeltaPower(self.m), self.cap)
    }

    /// Flip poset of the subword complex of the m-Cambrian search word.
    pub fn sc_poset(&self) -> Result<FinitePoset<Facet>> {
        self.subword_complex()?.flip_poset()
    }

    /// The factorization read off a facet through the colored root function.
    pub fn facet_to_factorization(&self, facet: &Facet) -> Result<MFactorization> {
        self.facet_to_factorization_in(&self.search_word(), facet)
    }

    /// Same as [`Self::facet_to_factorization`] for a facet of another word
    /// spelling `Δ^m`, such as a shifted search word.
    pub fn facet_to_factorization_in(
        &self,
        word: &[usize],
        facet: &Facet,
    ) -> Result<MFactorization> {
        let sys = self.system();
        let order = self.base.reflection_order();
        let letters = colored_roots(sys, word, facet)
            .into_iter()
            .map(|(color, root)| {
                let t = sys.reflection_of_root(root);
                ColoredReflection::new(color, order.position(t).expect("roots give reflections"))
            })
            .collect();
        self.factorization(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::from_label("A2").unwrap()
    }

    fn r(color: usize, index: usize) -> ColoredReflection {
        ColoredReflection::new(color, index)
    }

    #[test]
    fn one_factorizations_of_a2() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let all = mc.factorizations().unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all[0].letters(), &[r(0, 0), r(0, 2)]);
        assert_eq!(all[4].letters(), &[r(1, 0), r(1, 2)]);
    }

    #[test]
    fn rotations_of_the_bottom() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let bottom = mc.bottom();
        assert_eq!(
            mc.rotate(&bottom, r(0, 0)).unwrap().letters(),
            &[r(0, 1), r(1, 0)]
        );
        assert_eq!(
            mc.rotate(&bottom, r(0, 2)).unwrap().letters(),
            &[r(0, 0), r(1, 2)]
        );
        assert!(mc.rotate(&mc.top(), r(1, 0)).is_err());
        assert!(mc.rotate(&bottom, r(0, 1)).is_err());
    }

    #[test]
    fn multichain_round_trip() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        for m in 1..=3 {
            let mc = MCambrian::new(&camb, m);
            let all = mc.factorizations().unwrap();
            assert_eq!(all.len() as u128, sys.fuss_catalan(m as u64));
            for f in &all {
                assert_eq!(&mc.from_multichain(&mc.to_multichain(f)).unwrap(), f);
            }
        }
        let mc = MCambrian::new(&camb, 1);
        assert_eq!(mc.to_multichain(&mc.bottom()), vec![Elem::IDENTITY]);
        assert_eq!(mc.to_multichain(&mc.top()), vec![camb.coxeter_element()]);
    }

    #[test]
    fn invalid_multichains() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 2);
        let s = sys.generator(0);
        let u = sys.parse_element("sts").unwrap();
        assert!(mc.from_multichain(&[s]).is_err());
        assert!(mc.from_multichain(&[s, u]).is_err());
        assert!(mc.from_multichain(&[u, s]).is_err());
        assert!(mc.from_multichain(&[s, s]).is_ok());
    }

    #[test]
    fn dimr_examples() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let bottom = mc.bottom();
        assert_eq!(bottom.dimr(r(0, 0)), 1);
        assert_eq!(bottom.dimr(r(1, 2)), 2);
    }

    #[test]
    fn serialization_as_pairs() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        assert_eq!(
            serde_json::to_string(&mc.bottom()).unwrap(),
            "[[0,0],[0,2]]"
        );
        let back: Vec<ColoredReflection> = serde_json::from_str("[[0,0],[0,2]]").unwrap();
        assert_eq!(mc.factorization(back).unwrap(), mc.bottom());
    }

    #[test]
    fn nc_poset_is_pentagon() {
        let sys = a2();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let p = MCambrian::new(&camb, 1).nc_poset().unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.hasse_edges().len(), 5);
        assert!(p.is_lattice());
    }
}
