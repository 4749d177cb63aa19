//! Weak order, absolute order and noncrossing partition lattices.

use itertools::Itertools;

use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Canonical ordering of elements: by length, then lexicographic reduced word.
pub fn sort_elements(sys: &CoxeterSystem, elems: &mut [Elem]) {
    elems.sort_by_cached_key(|&w| (sys.length(w), sys.reduced_word(w)));
}

/// The right weak order on all of `W`.
pub fn weak_order(sys: &CoxeterSystem) -> FinitePoset<Elem> {
    let mut elems: Vec<Elem> = sys.elements().collect();
    sort_elements(sys, &mut elems);
    let pos: Vec<usize> = {
        let mut p = vec![0; sys.order()];
        for (i, w) in elems.iter().enumerate() {
            p[w.index()] = i;
        }
        p
    };
    let edges: Vec<(usize, usize)> = elems
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| {
            (0..sys.rank())
                .filter(move |&g| !sys.is_right_descent(w, g))
                .map(|g| (i, pos[sys.mul_generator(w, g).index()]))
                .collect::<Vec<_>>()
        })
        .collect();
    FinitePoset::from_covers(elems, edges).expect("weak order is acyclic")
}

pub fn absolute_length(sys: &CoxeterSystem, w: Elem) -> usize {
    sys.absolute_length(w)
}

pub fn leq_absolute(sys: &CoxeterSystem, u: Elem, w: Elem) -> bool {
    sys.absolute_le(u, w)
}

/// Whether `c` is the product of some ordering of all simple generators.
pub fn is_coxeter_element(sys: &CoxeterSystem, c: Elem) -> bool {
    (0..sys.rank())
        .permutations(sys.rank())
        .any(|p| sys.eval(&p) == c)
}

/// `NC(W, c) = [e, c]` in absolute order, canonically sorted.
pub fn noncrossing_partitions(sys: &CoxeterSystem, c: Elem) -> Result<Vec<Elem>> {
    if !is_coxeter_element(sys, c) {
        return Err(Error::NotCoxeterWord(sys.format_element(c)));
    }
    let mut out: Vec<Elem> = sys.elements().filter(|&w| sys.absolute_le(w, c)).collect();
    sort_elements(sys, &mut out);
    Ok(out)
}

/// The noncrossing partition lattice with the induced absolute order.
pub fn nc_lattice(sys: &CoxeterSystem, c: Elem) -> Result<FinitePoset<Elem>> {
    let elems = noncrossing_partitions(sys, c)?;
    let copy = elems.clone();
    FinitePoset::from_relation(elems, |i, j| sys.absolute_le(copy[i], copy[j]))
}

/// Kreweras complement `c w^{-1}`.
pub fn kreweras(sys: &CoxeterSystem, c: Elem, w: Elem) -> Result<Elem> {
    if !sys.absolute_le(w, c) {
        return Err(Error::NotNoncrossing);
    }
    Ok(sys.mul(c, sys.inverse(w)))
}
