//! Finite Coxeter systems with exact, fully enumerated elements.
//!
//! Every element is the permutation it induces on the (finite) root set, so
//! equality is structural. The whole group is enumerated once at
//! construction; an [`Elem`] is an index into that table.
//!
//! Words are read as group products: the word `s_1 s_2 ... s_k` denotes
//! `s_1 · s_2 · ... · s_k`, and elements act on roots from the left, so
//! `(uv)(b) = u(v(b))`.

mod parabolic;
pub mod roots;
pub mod types;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parabolic::Parabolic;
pub use roots::{Component, ComponentKind};
pub use types::{CoxeterType, TypeLabel};

/// Refuse to enumerate groups larger than this unless asked to.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;

/// Handle to an element of a [`CoxeterSystem`]. Only meaningful together
/// with the system that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word in the simple generators, stored as generator indices.
pub type Word = Vec<usize>;

pub struct CoxeterSystem {
    label: String,
    coxeter_matrix: Vec<Vec<u32>>,
    names: Vec<String>,
    components: Vec<Component>,
    roots: roots::RootModel,
    /// Root permutations, `num_roots` entries per element.
    perms: Vec<u16>,
    lookup: HashMap<Vec<u16>, u32>,
    /// BFS tree: `elem = parent · s_gen`.
    parent: Vec<(u32, u16)>,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
    /// Positive roots in a fixed order; reflection `i` is `s_{positive_roots[i]}`.
    positive_roots: Vec<u16>,
    root_ordinal: Vec<usize>,
    reflections: Vec<Elem>,
    reflection_ordinal: HashMap<Elem, usize>,
    longest: Elem,
    absolute: OnceLock<Vec<u32>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("label", &self.label)
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

fn default_names(rank: usize) -> Vec<String> {
    match rank {
        1 => vec!["s".into()],
        2 => vec!["s".into(), "t".into()],
        _ => (1..=rank).map(|i| format!("s{i}")).collect(),
    }
}

impl CoxeterSystem {
    /// Builds a system from a label such as `A3`, `I2(5)` or `A1xA1`.
    pub fn from_label(label: &str) -> Result<Self> {
        Self::from_label_with_cap(label, DEFAULT_ELEMENT_CAP)
    }

    pub fn from_label_with_cap(label: &str, cap: usize) -> Result<Self> {
        let parsed: TypeLabel = label.parse()?;
        let mut sys = Self::from_coxeter_matrix(&parsed.coxeter_matrix(), None, cap)?;
        sys.label = parsed.to_string();
        Ok(sys)
    }

    /// Builds a system from an arbitrary Coxeter matrix. Finiteness is
    /// established by closing the root orbit; unsupported shapes (cycles,
    /// non-crystallographic bonds in rank at least 3) are rejected.
    pub fn from_coxeter_matrix(
        matrix: &[Vec<u32>],
        names: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != matrix[j][i] {
                    return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
                }
                if i == j && v != 1 {
                    return Err(Error::InvalidMatrix("diagonal entries must be 1".into()));
                }
                if i != j && v < 2 {
                    return Err(Error::InvalidMatrix(
                        "off-diagonal entries must be >= 2".into(),
                    ));
                }
                if v == 0 || v == u32::MAX {
                    return Err(Error::InfiniteGroup);
                }
            }
        }
        let names = names.unwrap_or_else(|| default_names(n));
        if names.len() != n {
            return Err(Error::InvalidMatrix(
                "one name per generator required".into(),
            ));
        }
        let (root_model, components) = roots::build(matrix)?;
        let mut sys = CoxeterSystem {
            label: String::new(),
            coxeter_matrix: matrix.to_vec(),
            names,
            components,
            roots: root_model,
            perms: Vec::new(),
            lookup: HashMap::new(),
            parent: Vec::new(),
            lengths: Vec::new(),
            right: Vec::new(),
            left: Vec::new(),
            inverse: Vec::new(),
            positive_roots: Vec::new(),
            root_ordinal: Vec::new(),
            reflections: Vec::new(),
            reflection_ordinal: HashMap::new(),
            longest: Elem::IDENTITY,
            absolute: OnceLock::new(),
        };
        sys.enumerate(cap)?;
        sys.label = sys.describe_components();
        Ok(sys)
    }

    fn describe_components(&self) -> String {
        if self.rank() == 0 {
            return "A0".into();
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Dihedral(k) => format!("I2({k})"),
                ComponentKind::Crystallographic => format!("W{}", c.generators.len()),
            })
            .collect();
        parts.join("x")
    }

    fn enumerate(&mut self, cap: usize) -> Result<()> {
        let nr = self.roots.len();
        let rank = self.rank();
        let identity: Vec<u16> = (0..nr as u16).collect();
        self.lookup.insert(identity.clone(), 0);
        self.perms.extend_from_slice(&identity);
        self.parent.push((0, 0));
        self.lengths.push(0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(w) = queue.pop_front() {
            for g in 0..rank {
                let base = w as usize * nr;
                let image: Vec<u16> = (0..nr)
                    .map(|b| self.perms[base + self.roots.generators[g][b] as usize])
                    .collect();
                if self.lookup.contains_key(&image) {
                    continue;
                }
                let id = self.parent.len() as u32;
                if id as usize >= cap {
                    return Err(Error::CapExceeded {
                        what: "Coxeter group",
                        cap,
                    });
                }
                self.perms.extend_from_slice(&image);
                self.lookup.insert(image, id);
                self.parent.push((w, g as u16));
                self.lengths.push(self.lengths[w as usize] + 1);
                queue.push_back(id);
            }
        }
        let order = self.parent.len();
        let find = |lookup: &HashMap<Vec<u16>, u32>, p: Vec<u16>| -> u32 { lookup[&p] };
        self.right = vec![0; order * rank];
        self.left = vec![0; order * rank];
        self.inverse = vec![0; order];
        for w in 0..order {
            let p = &self.perms[w * nr..(w + 1) * nr];
            for g in 0..rank {
                let s = &self.roots.generators[g];
                let r: Vec<u16> = (0..nr).map(|b| p[s[b] as usize]).collect();
                let l: Vec<u16> = (0..nr).map(|b| s[p[b] as usize]).collect();
                self.right[w * rank + g] = find(&self.lookup, r);
                self.left[w * rank + g] = find(&self.lookup, l);
            }
            let mut inv = vec![0u16; nr];
            for (b, &img) in p.iter().enumerate() {
                inv[img as usize] = b as u16;
            }
            self.inverse[w] = find(&self.lookup, inv);
        }

        self.positive_roots = (0..nr as u16)
            .filter(|&r| self.roots.positive[r as usize])
            .collect();
        self.root_ordinal = vec![usize::MAX; nr];
        for (k, &r) in self.positive_roots.iter().enumerate() {
            self.root_ordinal[r as usize] = k;
            self.root_ordinal[self.roots.negation[r as usize] as usize] = k;
        }
        // s_{w(a_g)} = w s_g w^{-1}
        let mut refl = vec![None; self.positive_roots.len()];
        for w in 0..order {
            for g in 0..rank {
                let root = self.perms[w * nr + self.roots.simple[g] as usize];
                let k = self.root_ordinal[root as usize];
                if refl[k].is_none() {
                    let e = Elem(w as u32);
                    refl[k] = Some(self.mul(self.mul(e, self.generator(g)), self.inverse(e)));
                }
            }
        }
        self.reflections = refl
            .into_iter()
            .map(|r| r.expect("every root is in the orbit of a simple root"))
            .collect();
        self.reflection_ordinal = self
            .reflections
            .iter()
            .enumerate()
            .map(|(k, &t)| (t, k))
            .collect();
        self.longest = (0..order)
            .max_by_key(|&w| self.lengths[w])
            .map(|w| Elem(w as u32))
            .unwrap_or(Elem::IDENTITY);
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.coxeter_matrix.len()
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Degrees of all irreducible factors, merged and sorted.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .components
            .iter()
            .flat_map(|c| c.degrees.iter().copied())
            .collect();
        d.sort_unstable();
        d
    }

    /// Product over irreducible factors of `prod_i (m h + d_i) / d_i`.
    pub fn fuss_catalan(&self, m: u64) -> u128 {
        self.components
            .iter()
            .map(|c| {
                let h = c.coxeter_number() as u128;
                let num: u128 = c
                    .degrees
                    .iter()
                    .map(|&d| m as u128 * h + d as u128)
                    .product();
                let den: u128 = c.degrees.iter().map(|&d| d as u128).product();
                num / den
            })
            .product()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order() as u32).map(Elem)
    }

    pub fn contains(&self, w: Elem) -> bool {
        w.index() < self.order()
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn generator(&self, g: usize) -> Elem {
        Elem(self.right[g])
    }

    /// Root permutation of `w`.
    pub fn perm(&self, w: Elem) -> &[u16] {
        let nr = self.roots.len();
        &self.perms[w.index() * nr..(w.index() + 1) * nr]
    }

    /// Looks up the element inducing a given root permutation.
    pub fn element_from_perm(&self, perm: &[u16]) -> Option<Elem> {
        self.lookup.get(perm).map(|&i| Elem(i))
    }

    pub fn mul_generator(&self, w: Elem, g: usize) -> Elem {
        Elem(self.right[w.index() * self.rank() + g])
    }

    pub fn generator_mul(&self, g: usize, w: Elem) -> Elem {
        Elem(self.left[w.index() * self.rank() + g])
    }

    /// Group product `a · b`.
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let mut gens = Vec::with_capacity(self.lengths[b.index()] as usize);
        let mut cur = b.0;
        while cur != 0 {
            let (p, g) = self.parent[cur as usize];
            gens.push(g as usize);
            cur = p;
        }
        gens.iter()
            .rev()
            .fold(a, |acc, &g| self.mul_generator(acc, g))
    }

    /// Checked product for handles that may come from elsewhere.
    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::InvalidArgument(
                "element does not belong to this system".into(),
            ));
        }
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inverse[w.index()])
    }

    pub fn conjugate(&self, w: Elem, by: Elem) -> Elem {
        self.mul(self.mul(by, w), self.inverse(by))
    }

    pub fn length(&self, w: Elem) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Product of a word, validating its letters.
    pub fn word_element(&self, word: &[usize]) -> Result<Elem> {
        if let Some(&bad) = word.iter().find(|&&g| g >= self.rank()) {
            return Err(Error::InvalidWord(format!(
                "generator index {bad} out of range"
            )));
        }
        Ok(self.eval(word))
    }

    pub(crate) fn eval(&self, word: &[usize]) -> Elem {
        word.iter()
            .fold(Elem::IDENTITY, |acc, &g| self.mul_generator(acc, g))
    }

    pub fn is_left_descent(&self, w: Elem, g: usize) -> bool {
        self.length(self.generator_mul(g, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: Elem, g: usize) -> bool {
        self.length(self.mul_generator(w, g)) < self.length(w)
    }

    pub fn left_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank())
            .filter(|&g| self.is_left_descent(w, g))
            .collect()
    }

    pub fn right_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank())
            .filter(|&g| self.is_right_descent(w, g))
            .collect()
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self, w: Elem) -> Word {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != Elem::IDENTITY {
            let g = (0..self.rank())
                .find(|&g| self.is_left_descent(cur, g))
                .expect("non-identity element has a left descent");
            out.push(g);
            cur = self.generator_mul(g, cur);
        }
        out
    }

    pub fn longest_element(&self) -> Elem {
        self.longest
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn is_positive_root(&self, root: usize) -> bool {
        self.roots.positive[root]
    }

    pub fn simple_root(&self, g: usize) -> usize {
        self.roots.simple[g] as usize
    }

    pub fn apply_to_root(&self, w: Elem, root: usize) -> usize {
        self.perm(w)[root] as usize
    }

    pub fn apply_generator_to_root(&self, g: usize, root: usize) -> usize {
        self.roots.generators[g][root] as usize
    }

    /// Number of reflections (equivalently, positive roots).
    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn reflections(&self) -> &[Elem] {
        &self.reflections
    }

    /// Reflection along `root` (positive or negative).
    pub fn reflection_of_root(&self, root: usize) -> Elem {
        self.reflections[self.root_ordinal[root]]
    }

    /// Positive root of a reflection.
    pub fn root_of_reflection(&self, t: Elem) -> Option<usize> {
        self.reflection_ordinal
            .get(&t)
            .map(|&k| self.positive_roots[k] as usize)
    }

    pub fn is_reflection(&self, w: Elem) -> bool {
        self.reflection_ordinal.contains_key(&w)
    }

    /// Left inversion set `{t in R : l(tw) < l(w)}`, in reflection order of
    /// the positive roots.
    pub fn inversion_set(&self, w: Elem) -> Vec<Elem> {
        let inv = self.inverse(w);
        self.positive_roots
            .iter()
            .enumerate()
            .filter(|(_, &b)| !self.roots.positive[self.apply_to_root(inv, b as usize)])
            .map(|(k, _)| self.reflections[k])
            .collect()
    }

    /// Number of positive roots sent to negative roots; equals `length`.
    pub fn count_inverted_roots(&self, w: Elem) -> usize {
        self.positive_roots
            .iter()
            .filter(|&&b| !self.roots.positive[self.apply_to_root(w, b as usize)])
            .count()
    }

    /// Weak order: `u <= w` iff `l(w) = l(u) + l(u^{-1} w)`.
    pub fn weak_le(&self, u: Elem, w: Elem) -> bool {
        self.length(u) + self.length(self.mul(self.inverse(u), w)) == self.length(w)
    }

    fn absolute_table(&self) -> &[u32] {
        self.absolute.get_or_init(|| {
            let mut dist = vec![u32::MAX; self.order()];
            dist[0] = 0;
            let mut queue = VecDeque::from([Elem::IDENTITY]);
            while let Some(w) = queue.pop_front() {
                let d = dist[w.index()];
                for &t in &self.reflections {
                    let v = self.mul(w, t);
                    if dist[v.index()] == u32::MAX {
                        dist[v.index()] = d + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
    }

    /// Reflection length `l_R(w)`.
    pub fn absolute_length(&self, w: Elem) -> usize {
        self.absolute_table()[w.index()] as usize
    }

    /// Absolute order: `u <=_R w` iff `l_R(u) + l_R(u^{-1} w) = l_R(w)`.
    pub fn absolute_le(&self, u: Elem, w: Elem) -> bool {
        self.absolute_length(u) + self.absolute_length(self.mul(self.inverse(u), w))
            == self.absolute_length(w)
    }

    /// Order of `w` as a group element.
    pub fn element_order(&self, w: Elem) -> usize {
        let mut k = 1;
        let mut cur = w;
        while cur != Elem::IDENTITY {
            cur = self.mul(cur, w);
            k += 1;
        }
        k
    }

    /// Parses a word written with generator names. Words containing
    /// whitespace are split into tokens; otherwise names are matched
    /// greedily. `e`, `ε` and the empty string denote the identity. Tokens
    /// `s1`, `s2`, ... are accepted as 1-based generator indices.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "e" || text == "ε" {
            return Ok(Vec::new());
        }
        let by_name = |tok: &str| -> Option<usize> {
            self.names.iter().position(|n| n == tok).or_else(|| {
                tok.strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= self.rank())
                    .map(|i| i - 1)
            })
        };
        if text.contains(char::is_whitespace) {
            return text
                .split_whitespace()
                .map(|tok| {
                    by_name(tok)
                        .ok_or_else(|| Error::InvalidWord(format!("unknown generator `{tok}`")))
                })
                .collect();
        }
        let mut out = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((g, n)) => {
                    out.push(g);
                    rest = &rest[n.len()..];
                }
                None => {
                    return Err(Error::InvalidWord(format!("cannot parse `{text}`")));
                }
            }
        }
        Ok(out)
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let w = self.parse_word(text)?;
        Ok(self.eval(&w))
    }

    /// Renders a word; names are concatenated when all are single characters.
    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            " "
        };
        word.iter()
            .map(|&g| self.names[g].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn format_element(&self, w: Elem) -> String {
        self.format_word(&self.reduced_word(w))
    }

    /// Reduced word as generator names, the serialized form of an element.
    pub fn element_names(&self, w: Elem) -> Vec<String> {
        self.reduced_word(w)
            .into_iter()
            .map(|g| self.names[g].clone())
            .collect()
    }

    pub fn element_from_names(&self, names: &[String]) -> Result<Elem> {
        let word = names
            .iter()
            .map(|n| {
                self.names
                    .iter()
                    .position(|m| m == n)
                    .ok_or_else(|| Error::InvalidWord(format!("unknown generator `{n}`")))
            })
            .collect::<Result<Word>>()?;
        Ok(self.eval(&word))
    }

    pub fn parabolic_subgroup(&self, reflections: &[Elem]) -> Result<Parabolic> {
        parabolic::parabolic_subgroup(self, reflections)
    }

    /// Canonical Coxeter generators of the reflection subgroup generated by
    /// `gens`: reflections `t` of the subgroup such that no other
    /// reflection of the subgroup lies in the inversion set of `t`.
    pub fn canonical_generators(&self, gens: &[Elem]) -> Vec<Elem> {
        parabolic::canonical_generators(self, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(label).unwrap()
    }

    #[test]
    fn classical_orders() {
        for (label, order) in [
            ("A0", 1),
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("D4", 192),
            ("F4", 1152),
            ("G2", 12),
            ("I2(4)", 8),
            ("I2(5)", 10),
            ("I2(7)", 14),
            ("A1xA1", 4),
            ("A2xA1", 12),
        ] {
            assert_eq!(sys(label).order(), order, "{label}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = CoxeterSystem::from_label_with_cap("A4", 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn generators_are_involutions_and_braid() {
        for label in ["A3", "B3", "I2(5)", "G2"] {
            let w = sys(label);
            for i in 0..w.rank() {
                let s = w.generator(i);
                assert_eq!(w.mul(s, s), Elem::IDENTITY);
                for j in 0..w.rank() {
                    let st = w.mul(s, w.generator(j));
                    assert_eq!(w.element_order(st) as u32, w.coxeter_matrix()[i][j]);
                }
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let a2 = sys("A2");
        let s = a2.generator(0);
        assert_eq!(a2.mul(Elem::IDENTITY, s), s);
        assert_eq!(a2.mul(s, s), Elem::IDENTITY);
        assert_eq!(
            a2.parse_element("stst").unwrap(),
            a2.parse_element("ts").unwrap()
        );
    }

    #[test]
    fn lengths_and_longest() {
        let a2 = sys("A2");
        assert_eq!(a2.length(Elem::IDENTITY), 0);
        assert_eq!(a2.length(a2.longest_element()), 3);
        assert_eq!(a2.left_descents(a2.longest_element()), vec![0, 1]);
        assert_eq!(sys("I2(4)").length(sys("I2(4)").longest_element()), 4);
    }

    #[test]
    fn reflections_of_small_groups() {
        let a2 = sys("A2");
        let mut got = a2.reflections().to_vec();
        got.sort();
        let mut want = vec![
            a2.parse_element("s").unwrap(),
            a2.parse_element("t").unwrap(),
            a2.parse_element("sts").unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(sys("A1").num_reflections(), 1);
        assert_eq!(sys("I2(4)").num_reflections(), 4);
    }

    #[test]
    fn inversion_sets() {
        let a2 = sys("A2");
        assert!(a2.inversion_set(Elem::IDENTITY).is_empty());
        assert_eq!(a2.inversion_set(a2.longest_element()).len(), 3);
    }

    #[test]
    fn absolute_lengths() {
        let a2 = sys("A2");
        assert_eq!(a2.absolute_length(Elem::IDENTITY), 0);
        assert_eq!(a2.absolute_length(a2.parse_element("sts").unwrap()), 1);
        assert_eq!(a2.absolute_length(a2.parse_element("st").unwrap()), 2);
        let s = a2.parse_element("s").unwrap();
        let u = a2.parse_element("sts").unwrap();
        let c = a2.parse_element("st").unwrap();
        assert!(!a2.absolute_le(s, u));
        assert!(a2.absolute_le(s, c));
        assert!(a2.absolute_le(Elem::IDENTITY, u));
    }

    #[test]
    fn word_parsing() {
        let a3 = sys("A3");
        assert_eq!(a3.parse_word("s1 s2 s3").unwrap(), vec![0, 1, 2]);
        assert_eq!(a3.parse_word("s1s3").unwrap(), vec![0, 2]);
        assert!(a3.parse_word("s4").is_err());
        let a2 = sys("A2");
        assert_eq!(a2.parse_word("ts").unwrap(), vec![1, 0]);
        assert_eq!(a2.parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(a2.format_word(&[0, 1, 0]), "sts");
    }

    #[test]
    fn degrees_and_fuss_catalan() {
        assert_eq!(sys("A2").fuss_catalan(1), 5);
        assert_eq!(sys("A2").fuss_catalan(2), 12);
        assert_eq!(sys("B2").fuss_catalan(1), 6);
        assert_eq!(sys("A3").fuss_catalan(1), 14);
        assert_eq!(sys("A1xA1").fuss_catalan(2), 9);
        assert_eq!(sys("F4").degrees(), vec![2, 6, 8, 12]);
        assert_eq!(sys("A0").fuss_catalan(3), 1);
    }

    #[test]
    fn invalid_matrices() {
        assert!(CoxeterSystem::from_coxeter_matrix(&[vec![1, 1], vec![1, 1]], None, 100).is_err());
        assert!(CoxeterSystem::from_coxeter_matrix(&[vec![1, 3], vec![2, 1]], None, 100).is_err());
        let h3 = vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]];
        assert!(matches!(
            CoxeterSystem::from_coxeter_matrix(&h3, None, 1000),
            Err(Error::UnsupportedType(_))
        ));
    }
}
