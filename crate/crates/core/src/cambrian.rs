//! Coxeter words, sorting words, sortable elements, reflection orders and
//! the three constructions of the Cambrian lattice.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::coxeter::{CoxeterSystem, Elem, Word};
use crate::error::{Error, Result};
use crate::factorization::{MCambrian, MFactorization};
use crate::orders;
use crate::poset::FinitePoset;
use crate::subword::Facet;

/// A word containing every simple generator exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterWord(Word);

impl CoxeterWord {
    pub fn new(sys: &CoxeterSystem, letters: Word) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted != (0..sys.rank()).collect::<Vec<_>>() {
            return Err(Error::NotCoxeterWord(sys.format_word(&letters)));
        }
        Ok(CoxeterWord(letters))
    }

    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self> {
        match sys.parse_word(text) {
            Ok(w) => Self::new(sys, w),
            Err(_) => Err(Error::NotCoxeterWord(text.to_string())),
        }
    }

    /// `s_1 s_2 ... s_n`.
    pub fn linear(sys: &CoxeterSystem) -> Self {
        CoxeterWord((0..sys.rank()).collect())
    }

    /// Every Coxeter word of the system (all orderings of the generators).
    pub fn all(sys: &CoxeterSystem) -> Vec<Self> {
        (0..sys.rank())
            .permutations(sys.rank())
            .map(CoxeterWord)
            .collect()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn element(&self, sys: &CoxeterSystem) -> Elem {
        sys.eval(&self.0)
    }

    /// Moves the first letter to the end.
    pub fn shifted(&self) -> Self {
        let mut w = self.0.clone();
        if !w.is_empty() {
            w.rotate_left(1);
        }
        CoxeterWord(w)
    }
}

/// A sorting word split into the blocks contributed by consecutive copies
/// of the Coxeter word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortingWord {
    pub blocks: Vec<Word>,
}

impl SortingWord {
    pub fn letters(&self) -> Word {
        self.blocks.concat()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Renders as in `st|s`, `s|`, or `ε` for the identity. Blocks are
    /// separated by `|`; a lone block is closed by `|`.
    pub fn display<'a>(&'a self, sys: &'a CoxeterSystem) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a SortingWord, &'a CoxeterSystem);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let blocks = &self.0.blocks;
                if blocks.is_empty() {
                    return write!(f, "ε");
                }
                let parts: Vec<String> = blocks.iter().map(|b| self.1.format_word(b)).collect();
                write!(f, "{}", parts.join("|"))?;
                if blocks.len() == 1 {
                    write!(f, "|")?;
                }
                Ok(())
            }
        }
        Show(self, sys)
    }
}

/// Leftmost reduced subword of `c^∞` for `w`.
pub fn sorting_word(sys: &CoxeterSystem, c: &CoxeterWord, w: Elem) -> SortingWord {
    let mut blocks = Vec::new();
    let mut cur = w;
    while cur != Elem::IDENTITY {
        let mut block = Vec::new();
        for &g in c.letters() {
            if cur == Elem::IDENTITY {
                break;
            }
            if sys.is_left_descent(cur, g) {
                block.push(g);
                cur = sys.generator_mul(g, cur);
            }
        }
        blocks.push(block);
    }
    SortingWord { blocks }
}

/// `w` is c-sortable when the supports of the blocks of its sorting word
/// are weakly decreasing.
pub fn is_sortable(sys: &CoxeterSystem, c: &CoxeterWord, w: Elem) -> bool {
    sorting_word(sys, c, w)
        .blocks
        .iter()
        .tuple_windows()
        .all(|(a, b)| b.iter().all(|g| a.contains(g)))
}

pub fn sortable_elements(sys: &CoxeterSystem, c: &CoxeterWord) -> Vec<Elem> {
    let mut out: Vec<Elem> = sys.elements().filter(|&w| is_sortable(sys, c, w)).collect();
    orders::sort_elements(sys, &mut out);
    out
}

/// Weak order restricted to the c-sortable elements.
pub fn cambrian_sort_poset(sys: &CoxeterSystem, c: &CoxeterWord) -> FinitePoset<Elem> {
    let elems = sortable_elements(sys, c);
    let copy = elems.clone();
    FinitePoset::from_relation(elems, |i, j| sys.weak_le(copy[i], copy[j]))
        .expect("restriction of the weak order is a partial order")
}

/// `c · w0(c)`.
pub fn cambrian_search_word(sys: &CoxeterSystem, c: &CoxeterWord) -> Word {
    let mut q = c.letters().to_vec();
    q.extend(sorting_word(sys, c, sys.longest_element()).letters());
    q
}

/// The reflection order `t_1 <_c t_2 <_c ... <_c t_N` read off the
/// c-sorting word of `w0`.
#[derive(Clone, Debug)]
pub struct ReflectionOrder {
    reflections: Vec<Elem>,
    position: HashMap<Elem, usize>,
}

impl ReflectionOrder {
    pub fn new(sys: &CoxeterSystem, c: &CoxeterWord) -> Self {
        let word = sorting_word(sys, c, sys.longest_element()).letters();
        let mut prefix = Elem::IDENTITY;
        let mut reflections = Vec::with_capacity(word.len());
        for &g in &word {
            reflections.push(sys.conjugate(sys.generator(g), prefix));
            prefix = sys.mul_generator(prefix, g);
        }
        let position = reflections
            .iter()
            .enumerate()
            .map(|(i, &t)| (t, i))
            .collect();
        ReflectionOrder {
            reflections,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    pub fn reflections(&self) -> &[Elem] {
        &self.reflections
    }

    pub fn get(&self, i: usize) -> Elem {
        self.reflections[i]
    }

    pub fn position(&self, t: Elem) -> Option<usize> {
        self.position.get(&t).copied()
    }
}

/// Everything attached to a choice of Coxeter word: the reflection order,
/// the noncrossing partitions and their c-increasing words.
#[derive(Clone, Debug)]
pub struct Cambrian<'a> {
    sys: &'a CoxeterSystem,
    word: CoxeterWord,
    c: Elem,
    order: ReflectionOrder,
    nc: Vec<Elem>,
    increasing: HashMap<Elem, Vec<usize>>,
}

impl<'a> Cambrian<'a> {
    pub fn new(sys: &'a CoxeterSystem, word: CoxeterWord) -> Result<Self> {
        let c = word.element(sys);
        let order = ReflectionOrder::new(sys, &word);
        if order.len() != sys.num_reflections() {
            return Err(Error::Invariant(
                "reflection order misses reflections".into(),
            ));
        }
        let nc = orders::noncrossing_partitions(sys, c)?;
        let mut increasing = HashMap::with_capacity(nc.len());
        for &w in &nc {
            let words = increasing_words(sys, &order, w);
            if words.len() != 1 {
                return Err(Error::Invariant(format!(
                    "{} has {} c-increasing words",
                    sys.format_element(w),
                    words.len()
                )));
            }
            increasing.insert(w, words.into_iter().next().expect("one word"));
        }
        Ok(Cambrian {
            sys,
            word,
            c,
            order,
            nc,
            increasing,
        })
    }

    pub fn parse(sys: &'a CoxeterSystem, text: &str) -> Result<Self> {
        Self::new(sys, CoxeterWord::parse(sys, text)?)
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn coxeter_word(&self) -> &CoxeterWord {
        &self.word
    }

    pub fn coxeter_element(&self) -> Elem {
        self.c
    }

    pub fn reflection_order(&self) -> &ReflectionOrder {
        &self.order
    }

    /// `NC(W, c)`, sorted by length then reduced word.
    pub fn noncrossing(&self) -> &[Elem] {
        &self.nc
    }

    pub fn is_noncrossing(&self, w: Elem) -> bool {
        self.increasing.contains_key(&w)
    }

    /// The c-increasing word of `w`, as increasing positions in `R(c)`.
    pub fn increasing_word(&self, w: Elem) -> Result<&[usize]> {
        self.increasing
            .get(&w)
            .map(Vec::as_slice)
            .ok_or(Error::NotNoncrossing)
    }

    /// The c-increasing word of `w` as reflections.
    pub fn increasing_reflections(&self, w: Elem) -> Result<Vec<Elem>> {
        Ok(self
            .increasing_word(w)?
            .iter()
            .map(|&i| self.order.get(i))
            .collect())
    }

    pub fn kreweras(&self, w: Elem) -> Result<Elem> {
        orders::kreweras(self.sys, self.c, w)
    }

    pub fn sorting_word(&self, w: Elem) -> SortingWord {
        sorting_word(self.sys, &self.word, w)
    }

    pub fn sortable_elements(&self) -> Vec<Elem> {
        sortable_elements(self.sys, &self.word)
    }

    pub fn sort_poset(&self) -> FinitePoset<Elem> {
        cambrian_sort_poset(self.sys, &self.word)
    }

    pub fn search_word(&self) -> Word {
        cambrian_search_word(self.sys, &self.word)
    }

    /// Cover reflections `w s w^{-1}` for the right descents `s` of `w`.
    pub fn cover_reflections(&self, w: Elem) -> Vec<Elem> {
        self.sys
            .right_descents(w)
            .into_iter()
            .map(|g| self.sys.conjugate(self.sys.generator(g), w))
            .collect()
    }

    /// Sortable element to noncrossing partition: the element whose
    /// c-increasing word consists of the cover reflections of `w`.
    pub fn sortable_to_noncrossing(&self, w: Elem) -> Result<Elem> {
        let mut positions: Vec<usize> = self
            .cover_reflections(w)
            .into_iter()
            .map(|t| self.order.position(t).expect("reflections are ordered"))
            .collect();
        positions.sort_unstable();
        let x = positions.iter().fold(Elem::IDENTITY, |acc, &i| {
            self.sys.mul(acc, self.order.get(i))
        });
        match self.increasing.get(&x) {
            Some(word) if *word == positions => Ok(x),
            _ => Err(Error::Invariant(format!(
                "cover reflections of {} do not form a c-increasing word",
                self.sys.format_element(w)
            ))),
        }
    }
}

/// All reduced increasing subwords of `R(c)` multiplying to `w`, by a
/// depth-first search whose partial products stay below `w` in absolute
/// order.
pub fn increasing_words(sys: &CoxeterSystem, order: &ReflectionOrder, w: Elem) -> Vec<Vec<usize>> {
    let target = sys.absolute_length(w);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        sys: &CoxeterSystem,
        order: &ReflectionOrder,
        w: Elem,
        target: usize,
        start: usize,
        prefix: Elem,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == target {
            if prefix == w {
                out.push(stack.clone());
            }
            return;
        }
        for i in start..order.len() {
            let next = sys.mul(prefix, order.get(i));
            if sys.absolute_length(next) == stack.len() + 1 && sys.absolute_le(next, w) {
                stack.push(i);
                dfs(sys, order, w, target, i + 1, next, stack, out);
                stack.pop();
            }
        }
    }
    dfs(
        sys,
        order,
        w,
        target,
        0,
        Elem::IDENTITY,
        &mut stack,
        &mut out,
    );
    out
}

/// Explicit maps between the three versions of `Camb(W, c)` and the
/// verdict of the isomorphism check.
#[derive(Debug)]
pub struct ThreeVersions {
    pub sort: FinitePoset<Elem>,
    pub sc: FinitePoset<Facet>,
    pub nc: FinitePoset<MFactorization>,
    /// Index in `sort` to index in `sc`.
    pub sort_to_sc: Vec<usize>,
    /// Index in `sc` to index in `nc`.
    pub sc_to_nc: Vec<usize>,
    /// First pair on which an order relation is not preserved.
    pub counterexample: Option<String>,
}

impl ThreeVersions {
    pub fn isomorphic(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Builds `Camb_Sort`, `Camb_SC` and `Camb_NC`, aligns them through the
/// explicit bijections (sortable element to noncrossing partition through
/// cover reflections, facet to factorization through the colored root
/// function) and checks both alignments are order isomorphisms.
pub fn iso_three_versions(camb: &Cambrian<'_>) -> Result<ThreeVersions> {
    let mc = MCambrian::new(camb, 1);
    let sort = camb.sort_poset();
    let sc = mc.sc_poset()?;
    let nc = mc.nc_poset()?;
    let sc_to_nc = sc
        .labels()
        .iter()
        .map(|facet| {
            let f = mc.facet_to_factorization(facet)?;
            nc.index_of(&f)
                .ok_or_else(|| Error::Invariant("facet maps outside the factorizations".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut nc_to_sc = vec![usize::MAX; nc.len()];
    for (i, &j) in sc_to_nc.iter().enumerate() {
        nc_to_sc[j] = i;
    }
    let sort_to_sc = sort
        .labels()
        .iter()
        .map(|&w| {
            let x = camb.sortable_to_noncrossing(w)?;
            let f = mc.from_multichain(&[x])?;
            let j = nc
                .index_of(&f)
                .ok_or_else(|| Error::Invariant("sortable element maps outside".into()))?;
            Ok(nc_to_sc[j])
        })
        .collect::<Result<Vec<_>>>()?;
    let sys = camb.system();
    let mut counterexample = None;
    if let Err((i, j)) = sort.verify_isomorphism(&sc, &sort_to_sc) {
        counterexample = Some(if i == usize::MAX || i == j {
            "Sort -> SC is not a bijection".to_string()
        } else {
            format!(
                "Sort -> SC breaks the pair ({}, {})",
                sys.format_element(*sort.label(i)),
                sys.format_element(*sort.label(j))
            )
        });
    } else if let Err((i, j)) = sc.verify_isomorphism(&nc, &sc_to_nc) {
        counterexample = Some(if i == usize::MAX || i == j {
            "SC -> NC is not a bijection".to_string()
        } else {
            format!(
                "SC -> NC breaks the pair ({}, {})",
                sc.label(i),
                sc.label(j)
            )
        });
    }
    Ok(ThreeVersions {
        sort,
        sc,
        nc,
        sort_to_sc,
        sc_to_nc,
        counterexample,
    })
}
