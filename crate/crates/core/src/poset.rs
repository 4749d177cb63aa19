//! Finite posets with a dense reachability table.

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A finite poset on labelled elements. Comparability is answered from a
/// precomputed reachability table; the Hasse diagram is derived from it.
#[derive(Clone, Debug)]
pub struct FinitePoset<L> {
    labels: Vec<L>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    hasse: Vec<(usize, usize)>,
    index: HashMap<L, usize>,
}

impl<L: Clone + Eq + Hash> FinitePoset<L> {
    /// Reflexive-transitive closure of the generating relations `edges`
    /// (pairs `i < j`). Fails on cycles.
    pub fn from_covers(
        labels: Vec<L>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut children = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument("edge endpoint out of range".into()));
            }
            if a == b {
                return Err(Error::NotAPartialOrder(format!("loop at element {a}")));
            }
            children[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &children[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotAPartialOrder(
                "generating relation has a cycle".into(),
            ));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &w in &children[v] {
                set.union_with(&up[w]);
            }
            up[v] = set;
        }
        Ok(Self::from_up_sets(labels, up))
    }

    /// Builds a poset from a full comparison predicate, verifying that it is
    /// reflexive, antisymmetric and transitive.
    pub fn from_relation(labels: Vec<L>, le: impl Fn(usize, usize) -> bool + Sync) -> Result<Self> {
        let n = labels.len();
        let up: Vec<FixedBitSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if le(i, j) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::NotAPartialOrder(format!("not reflexive at {i}")));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "antisymmetry fails for {i} and {j}"
                    )));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails above {i} through {j}"
                    )));
                }
            }
        }
        Ok(Self::from_up_sets(labels, up))
    }

    fn from_up_sets(labels: Vec<L>, up: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, set) in up.iter().enumerate() {
            for j in set.ones() {
                down[j].insert(i);
            }
        }
        let mut hasse = Vec::new();
        for i in 0..n {
            let mut strict = up[i].clone();
            strict.set(i, false);
            let mut above_strict = FixedBitSet::with_capacity(n);
            for k in strict.ones() {
                let mut s = up[k].clone();
                s.set(k, false);
                above_strict.union_with(&s);
            }
            for j in strict.ones() {
                if !above_strict.contains(j) {
                    hasse.push((i, j));
                }
            }
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        FinitePoset {
            labels,
            up,
            down,
            hasse,
            index,
        }
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Sub-poset induced on `subset` (indices into this poset).
    pub fn induced(&self, subset: &[usize]) -> FinitePoset<L> {
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let n = subset.len();
        let up = subset
            .iter()
            .map(|&i| {
                let mut set = FixedBitSet::with_capacity(n);
                for (b, &j) in subset.iter().enumerate() {
                    if self.le(i, j) {
                        set.insert(b);
                    }
                }
                set
            })
            .collect();
        Self::from_up_sets(labels, up)
    }

    pub fn map_labels<M: Clone + Eq + Hash>(&self, f: impl Fn(&L) -> M) -> FinitePoset<M> {
        FinitePoset::from_up_sets(self.labels.iter().map(f).collect(), self.up.clone())
    }
}

impl<L> FinitePoset<L> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.hasse.binary_search(&(i, j)).is_ok()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.hasse
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        self.hasse
            .iter()
            .filter(|&&(_, b)| b == j)
            .map(|&(a, _)| a)
            .collect()
    }

    pub fn up_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].ones()
    }

    pub fn down_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[i].ones()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down[i].count_ones(..) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.up[i].count_ones(..) == 1)
            .collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count_ones(..) == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down[i].count_ones(..) == self.len())
    }

    /// Elements of the closed interval `[i, j]`.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        let mut set = self.up[i].clone();
        set.intersect_with(&self.down[j]);
        set.ones().collect()
    }

    /// If `subset` is exactly some interval `[a, b]`, returns `(a, b)`.
    pub fn as_interval(&self, subset: &[usize]) -> Option<(usize, usize)> {
        let lo = subset
            .iter()
            .copied()
            .find(|&a| subset.iter().all(|&x| self.le(a, x)))?;
        let hi = subset
            .iter()
            .copied()
            .find(|&b| subset.iter().all(|&x| self.le(x, b)))?;
        let mut want = self.interval(lo, hi);
        let mut got = subset.to_vec();
        want.sort_unstable();
        got.sort_unstable();
        (want == got).then_some((lo, hi))
    }

    /// All comparable pairs `(x, y)` with `x <= y`.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.up[i].ones().map(move |j| (i, j)))
            .collect()
    }

    pub fn count_intervals(&self) -> u128 {
        self.up.iter().map(|s| s.count_ones(..) as u128).sum()
    }

    /// Number of multichains `x_1 <= x_2 <= ... <= x_k`.
    pub fn count_multichains(&self, k: usize) -> u128 {
        if k == 0 {
            return 1;
        }
        let mut counts = vec![1u128; self.len()];
        for _ in 1..k {
            counts = (0..self.len())
                .map(|y| self.down[y].ones().map(|x| counts[x]).sum())
                .collect();
        }
        counts.iter().sum()
    }

    /// Streams the multichains of length `k` in lexicographic index order.
    pub fn multichains(&self, k: usize) -> Multichains<'_, L> {
        Multichains {
            poset: self,
            k,
            stack: Vec::new(),
            started: false,
        }
    }

    /// All saturated (cover-by-cover) chains from `i` to `j`.
    pub fn saturated_chains(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if !self.le(i, j) {
            return out;
        }
        let mut path = vec![i];
        self.extend_chains(j, &mut path, &mut out);
        out
    }

    fn extend_chains(&self, target: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("path is never empty");
        if last == target {
            out.push(path.clone());
            return;
        }
        for b in self.upper_covers(last) {
            if self.le(b, target) {
                path.push(b);
                self.extend_chains(target, path, out);
                path.pop();
            }
        }
    }

    /// Checks that every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let has_least =
            |set: &FixedBitSet, rel: &[FixedBitSet]| set.ones().any(|a| set.is_subset(&rel[a]));
        for i in 0..n {
            for j in i + 1..n {
                let mut ub = self.up[i].clone();
                ub.intersect_with(&self.up[j]);
                if !has_least(&ub, &self.up) {
                    return false;
                }
                let mut lb = self.down[i].clone();
                lb.intersect_with(&self.down[j]);
                if !has_least(&lb, &self.down) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that `map` (from our indices to `other`'s) is an order
    /// isomorphism. Returns the first offending pair otherwise.
    pub fn verify_isomorphism<M>(
        &self,
        other: &FinitePoset<M>,
        map: &[usize],
    ) -> std::result::Result<(), (usize, usize)> {
        if map.len() != self.len() || other.len() != self.len() {
            return Err((usize::MAX, usize::MAX));
        }
        let mut hit = vec![false; other.len()];
        for (i, &m) in map.iter().enumerate() {
            if m >= other.len() || hit[m] {
                return Err((i, i));
            }
            hit[m] = true;
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.le(i, j) != other.le(map[i], map[j]) {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    fn signature(&self, i: usize) -> (usize, usize, usize, usize) {
        (
            self.down[i].count_ones(..),
            self.up[i].count_ones(..),
            self.lower_covers(i).len(),
            self.upper_covers(i).len(),
        )
    }

    /// Searches for an order isomorphism onto `other` by backtracking.
    pub fn find_isomorphism<M>(&self, other: &FinitePoset<M>) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.hasse.len() != other.hasse.len() {
            return None;
        }
        let sig_a: Vec<_> = (0..n).map(|i| self.signature(i)).collect();
        let sig_b: Vec<_> = (0..n).map(|i| other.signature(i)).collect();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        // Visit elements bottom-up so constraints bite early.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (sig_a[i].0, i));
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.assign(other, &order, 0, &sig_a, &sig_b, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assign<M>(
        &self,
        other: &FinitePoset<M>,
        order: &[usize],
        k: usize,
        sig_a: &[(usize, usize, usize, usize)],
        sig_b: &[(usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..other.len() {
            if used[b] || sig_a[a] != sig_b[b] {
                continue;
            }
            let consistent = order[..k].iter().all(|&x| {
                let y = map[x];
                self.le(x, a) == other.le(y, b) && self.le(a, x) == other.le(b, y)
            });
            if !consistent {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if self.assign(other, order, k + 1, sig_a, sig_b, map, used) {
                return true;
            }
            used[b] = false;
            map[a] = usize::MAX;
        }
        false
    }
}

/// Lazy enumeration of multichains, see [`FinitePoset::multichains`].
pub struct Multichains<'a, L> {
    poset: &'a FinitePoset<L>,
    k: usize,
    stack: Vec<usize>,
    started: bool,
}

impl<L> Multichains<'_, L> {
    /// Smallest element `>= from` lying above `lower` (or any, if `None`).
    fn next_above(&self, lower: Option<usize>, from: usize) -> Option<usize> {
        (from..self.poset.len()).find(|&x| lower.is_none_or(|l| self.poset.le(l, x)))
    }

    fn fill(&mut self) -> bool {
        while self.stack.len() < self.k {
            let lower = self.stack.last().copied();
            match self.next_above(lower, 0) {
                Some(x) => self.stack.push(x),
                None => return false,
            }
        }
        true
    }
}

impl<L> Iterator for Multichains<'_, L> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            if self.k == 0 {
                return Some(Vec::new());
            }
            if self.fill() {
                return Some(self.stack.clone());
            }
            self.stack.clear();
            return None;
        }
        if self.k == 0 {
            return None;
        }
        while let Some(last) = self.stack.pop() {
            let lower = self.stack.last().copied();
            if let Some(x) = self.next_above(lower, last + 1) {
                self.stack.push(x);
                if self.fill() {
                    return Some(self.stack.clone());
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_covers((0..n).collect(), (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn pentagon() -> FinitePoset<usize> {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        FinitePoset::from_covers((0..5).collect(), [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
            .unwrap()
    }

    #[test]
    fn chain_counts() {
        let c = chain(2);
        assert_eq!(c.count_intervals(), 3);
        assert_eq!(c.count_multichains(2), 3);
        assert_eq!(c.multichains(2).count(), 3);
        assert_eq!(c.count_multichains(1), 2);
    }

    #[test]
    fn pentagon_structure() {
        let p = pentagon();
        assert_eq!(p.count_intervals(), 13);
        assert_eq!(p.hasse_edges().len(), 5);
        assert!(p.is_lattice());
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(4));
        assert_eq!(p.saturated_chains(0, 4).len(), 2);
    }

    #[test]
    fn redundant_edges_are_dropped() {
        let p = FinitePoset::from_covers(vec![0, 1, 2], [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.hasse_edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(FinitePoset::from_covers(vec![0, 1], [(0, 1), (1, 0)]).is_err());
        assert!(FinitePoset::from_relation(vec![0, 1], |_, _| true).is_err());
        // Not transitive: 0 <= 1 <= 2 but not 0 <= 2.
        assert!(FinitePoset::from_relation(vec![0, 1, 2], |i, j| i == j || j == i + 1).is_err());
    }

    #[test]
    fn isomorphism_search() {
        let p = pentagon();
        let q = FinitePoset::from_covers(
            vec!['a', 'b', 'c', 'd', 'e'],
            [(4, 0), (0, 3), (3, 1), (4, 2), (2, 1)],
        )
        .unwrap();
        let map = p.find_isomorphism(&q).unwrap();
        assert!(p.verify_isomorphism(&q, &map).is_ok());
        assert!(chain(5).find_isomorphism(&p).is_none());
    }

    #[test]
    fn interval_detection() {
        let p = pentagon();
        assert_eq!(p.as_interval(&[1, 2]), Some((1, 2)));
        assert_eq!(p.as_interval(&[0, 1, 2, 3, 4]), Some((0, 4)));
        assert_eq!(p.as_interval(&[1, 3]), None);
    }

    proptest::proptest! {
        #[test]
        fn multichain_stream_matches_count(edges in proptest::collection::vec((0usize..7, 0usize..7), 0..12), k in 0usize..4) {
            let edges: Vec<_> = edges.into_iter().filter(|(a, b)| a < b).collect();
            let p = FinitePoset::from_covers((0..7).collect::<Vec<usize>>(), edges).unwrap();
            proptest::prop_assert_eq!(p.multichains(k).count() as u128, p.count_multichains(k));
            for i in 0..p.len() {
                for j in 0..p.len() {
                    if p.le(i, j) && p.le(j, i) {
                        proptest::prop_assert_eq!(i, j);
                    }
                }
            }
        }
    }
}
