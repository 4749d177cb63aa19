//! m-Tamari lattices on m-ballot paths and the interval-count comparison
//! with linear type A m-Cambrian lattices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cambrian::{Cambrian, CoxeterWord};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::factorization::MCambrian;
use crate::poset::FinitePoset;

/// A path of `n` up steps of height `m` and `mn` down steps of height 1
/// that never goes below zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotPath {
    m: usize,
    /// `true` for an up step.
    steps: Vec<bool>,
}

impl BallotPath {
    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    fn heights(&self) -> Vec<usize> {
        let mut h = 0;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        for &up in &self.steps {
            if up {
                h += self.m;
            } else {
                h -= 1;
            }
            out.push(h);
        }
        out
    }

    /// Rotations: for a down step followed by an up step, the excursion
    /// starting at the up step is moved before the down step.
    pub fn rotations(&self) -> Vec<BallotPath> {
        let heights = self.heights();
        let mut out = Vec::new();
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i] || !self.steps[i + 1] {
                continue;
            }
            let start = heights[i + 1];
            let end = (i + 2..=self.steps.len())
                .find(|&j| heights[j] == start)
                .expect("every up step is closed by an excursion");
            let mut steps = self.steps.clone();
            steps[i..end].rotate_left(1);
            out.push(BallotPath { m: self.m, steps });
        }
        out
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            write!(f, "{}", if up { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

impl Serialize for BallotPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn ballot_paths(n: usize, m: usize) -> Vec<BallotPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n * (m + 1));
    fn go(
        n: usize,
        m: usize,
        ups: usize,
        h: usize,
        steps: &mut Vec<bool>,
        out: &mut Vec<BallotPath>,
    ) {
        let downs = steps.len() - ups;
        if ups == n && downs == n * m {
            out.push(BallotPath {
                m,
                steps: steps.clone(),
            });
            return;
        }
        if ups < n {
            steps.push(true);
            go(n, m, ups + 1, h + m, steps, out);
            steps.pop();
        }
        if h > 0 {
            steps.push(false);
            go(n, m, ups, h - 1, steps, out);
            steps.pop();
        }
    }
    go(n, m, 0, 0, &mut steps, &mut out);
    out.sort();
    out
}

/// Fuss–Catalan number `binom((m+1)n, n) / (mn + 1)`.
pub fn fuss_catalan(n: usize, m: usize) -> u128 {
    let top = (m + 1) * n;
    let mut b: u128 = 1;
    for i in 0..n {
        b = b * (top - i) as u128 / (i + 1) as u128;
    }
    b / (m * n + 1) as u128
}

#[derive(Debug)]
pub struct TamariM {
    pub n: usize,
    pub m: usize,
    pub poset: FinitePoset<BallotPath>,
}

pub fn m_tamari_poset(n: usize, m: usize, cap: usize) -> Result<TamariM> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if fuss_catalan(n, m) > cap as u128 {
        return Err(Error::CapExceeded {
            what: "ballot paths",
            cap,
        });
    }
    let paths = ballot_paths(n, m);
    if paths.len() as u128 != fuss_catalan(n, m) {
        return Err(Error::Invariant(
            "ballot path count differs from Fuss–Catalan".into(),
        ));
    }
    let index: std::collections::HashMap<&BallotPath, usize> =
        paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let edges: Vec<(usize, usize)> = paths
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.rotations().into_iter().map(move |q| (i, q)))
        .map(|(i, q)| (i, index[&q]))
        .collect();
    drop(index);
    Ok(TamariM {
        n,
        m,
        poset: FinitePoset::from_covers(paths, edges)?,
    })
}

pub fn count_intervals<L: Clone + Eq + std::hash::Hash>(p: &FinitePoset<L>) -> u128 {
    p.count_intervals()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub m: usize,
    pub tamari_intervals: u128,
    pub cambrian_intervals: u128,
    pub equal: bool,
}

/// The linear type `A_{n-1}` Coxeter system.
pub fn linear_type_a(n: usize) -> Result<CoxeterSystem> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    CoxeterSystem::from_label(&format!("A{}", n - 1))
}

pub fn conjecture_check(n: usize, m: usize, cap: usize) -> Result<ConjectureRow> {
    let tamari = m_tamari_poset(n, m, cap)?;
    let sys = linear_type_a(n)?;
    let camb = Cambrian::new(&sys, CoxeterWord::linear(&sys))?;
    let cambrian = MCambrian::new(&camb, m).with_cap(cap).nc_poset()?;
    let t = tamari.poset.count_intervals();
    let c = cambrian.count_intervals();
    Ok(ConjectureRow {
        n,
        m,
        tamari_intervals: t,
        cambrian_intervals: c,
        equal: t == c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_path_counts() {
        assert_eq!(ballot_paths(3, 1).len(), 5);
        assert_eq!(ballot_paths(2, 2).len(), 3);
        assert_eq!(ballot_paths(3, 2).len(), 12);
        assert_eq!(ballot_paths(1, 4).len(), 1);
        assert_eq!(fuss_catalan(4, 1), 14);
    }

    #[test]
    fn tamari_three() {
        let t = m_tamari_poset(3, 1, 1000).unwrap();
        assert_eq!(t.poset.len(), 5);
        assert_eq!(t.poset.hasse_edges().len(), 5);
        assert_eq!(t.poset.count_intervals(), 13);
        assert!(t.poset.is_lattice());
        assert_eq!(
            t.poset.label(t.poset.bottom().unwrap()).to_string(),
            "UDUDUD"
        );
        assert_eq!(t.poset.label(t.poset.top().unwrap()).to_string(), "UUUDDD");
    }

    #[test]
    fn rotation_example() {
        let p = BallotPath {
            m: 1,
            steps: vec![true, false, true, true, false, false],
        };
        let r: Vec<String> = p.rotations().iter().map(|q| q.to_string()).collect();
        assert_eq!(r, vec!["UUUDDD"]);
    }

    #[test]
    fn trivial_case() {
        let row = conjecture_check(1, 3, 1000).unwrap();
        assert_eq!((row.tamari_intervals, row.cambrian_intervals), (1, 1));
        assert!(row.equal);
    }
}
