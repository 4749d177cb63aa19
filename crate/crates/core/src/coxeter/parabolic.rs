use std::collections::{HashSet, VecDeque};

use super::{CoxeterSystem, Elem, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};

/// A parabolic subgroup `W_J` realised as a Coxeter system of its own.
#[derive(Debug)]
pub struct Parabolic {
    pub system: CoxeterSystem,
    /// Images of the subsystem's simple generators (the set `J`).
    pub generators: Vec<Elem>,
    /// An element `w` with `w J w^{-1}` contained in the simple reflections.
    pub conjugator: Elem,
    /// Subsystem element index to element of the ambient group.
    pub embedding: Vec<Elem>,
}

impl Parabolic {
    pub fn embed(&self, w: Elem) -> Elem {
        self.embedding[w.index()]
    }
}

pub(super) fn parabolic_subgroup(sys: &CoxeterSystem, j: &[Elem]) -> Result<Parabolic> {
    if j.iter().any(|&t| !sys.contains(t) || !sys.is_reflection(t)) {
        return Err(Error::NotParabolic);
    }
    let distinct: HashSet<Elem> = j.iter().copied().collect();
    if distinct.len() != j.len() {
        return Err(Error::NotParabolic);
    }
    let simple: HashSet<Elem> = (0..sys.rank()).map(|g| sys.generator(g)).collect();
    let conjugator = sys
        .elements()
        .find(|&w| j.iter().all(|&t| simple.contains(&sys.conjugate(t, w))))
        .ok_or(Error::NotParabolic)?;
    let matrix: Vec<Vec<u32>> = j
        .iter()
        .map(|&a| {
            j.iter()
                .map(|&b| sys.element_order(sys.mul(a, b)) as u32)
                .collect()
        })
        .collect();
    let names = j
        .iter()
        .map(|&t| format!("[{}]", sys.format_element(t)))
        .collect();
    let system = CoxeterSystem::from_coxeter_matrix(&matrix, Some(names), DEFAULT_ELEMENT_CAP)?;
    let mut embedding = vec![Elem::IDENTITY; system.order()];
    for w in system.elements().skip(1) {
        let (p, g) = system.parent[w.index()];
        embedding[w.index()] = sys.mul(embedding[p as usize], j[g as usize]);
    }
    Ok(Parabolic {
        system,
        generators: j.to_vec(),
        conjugator,
        embedding,
    })
}

/// Elements of the subgroup generated by `gens`.
fn closure(sys: &CoxeterSystem, gens: &[Elem]) -> HashSet<Elem> {
    let mut seen = HashSet::from([Elem::IDENTITY]);
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(w) = queue.pop_front() {
        for &g in gens {
            let v = sys.mul(w, g);
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen
}

pub(super) fn canonical_generators(sys: &CoxeterSystem, gens: &[Elem]) -> Vec<Elem> {
    let sub = closure(sys, gens);
    let refl: Vec<Elem> = sys
        .reflections()
        .iter()
        .copied()
        .filter(|t| sub.contains(t))
        .collect();
    let mut out: Vec<Elem> = refl
        .iter()
        .copied()
        .filter(|&t| {
            refl.iter()
                .all(|&u| u == t || sys.length(sys.mul(u, t)) > sys.length(t))
        })
        .collect();
    out.sort_by_key(|&t| (sys.length(t), sys.reduced_word(t)));
    out
}
