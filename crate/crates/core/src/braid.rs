//! Positive braids in left-greedy normal form.
//!
//! A positive braid is a product of simple elements (elements of `W`
//! lifted to the Artin monoid). The normal form `f_1 f_2 ... f_k` is
//! left-weighted: every left descent of `f_{i+1}` is a right descent of
//! `f_i`. A positive braid left-divides `Δ^m` exactly when its normal form
//! has at most `m` factors, which is what the search words and subword
//! complexes of the m-Cambrian lattice need.

use crate::coxeter::{CoxeterSystem, Elem};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PositiveBraid {
    factors: Vec<Elem>,
    letters: usize,
}

impl PositiveBraid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_word(sys: &CoxeterSystem, word: &[usize]) -> Self {
        let mut b = Self::new();
        for &g in word {
            b.push(sys, g);
        }
        b
    }

    /// `Δ^m` in normal form.
    pub fn delta_power(sys: &CoxeterSystem, m: usize) -> Self {
        let w0 = sys.longest_element();
        let factors = if w0 == Elem::IDENTITY {
            Vec::new()
        } else {
            vec![w0; m]
        };
        PositiveBraid {
            factors,
            letters: m * sys.length(w0),
        }
    }

    pub fn factors(&self) -> &[Elem] {
        &self.factors
    }

    /// Number of normal-form factors (the `sup` of the braid).
    pub fn sup(&self) -> usize {
        self.factors.len()
    }

    /// Length of the braid as a positive word.
    pub fn len(&self) -> usize {
        self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters == 0
    }

    /// Right-multiplies by the generator `g`.
    pub fn push(&mut self, sys: &CoxeterSystem, g: usize) {
        self.letters += 1;
        match self.factors.last_mut() {
            Some(last) if !sys.is_right_descent(*last, g) => {
                *last = sys.mul_generator(*last, g);
            }
            _ => self.factors.push(sys.generator(g)),
        }
        self.normalize(sys);
    }

    fn normalize(&mut self, sys: &CoxeterSystem) {
        loop {
            let mut changed = false;
            for i in (0..self.factors.len().saturating_sub(1)).rev() {
                changed |= normalize_pair(sys, &mut self.factors, i);
            }
            let before = self.factors.len();
            self.factors.retain(|&f| f != Elem::IDENTITY);
            changed |= before != self.factors.len();
            if !changed {
                break;
            }
        }
    }

    /// Whether this braid left-divides `Δ^m`.
    pub fn divides_delta_power(&self, m: usize) -> bool {
        self.sup() <= m
    }
}

/// Moves letters from the front of `f[i+1]` to the back of `f[i]` while the
/// product stays simple.
fn normalize_pair(sys: &CoxeterSystem, f: &mut [Elem], i: usize) -> bool {
    let mut changed = false;
    loop {
        let (a, b) = (f[i], f[i + 1]);
        let mv =
            (0..sys.rank()).find(|&g| sys.is_left_descent(b, g) && !sys.is_right_descent(a, g));
        match mv {
            Some(g) => {
                f[i] = sys.mul_generator(a, g);
                f[i + 1] = sys.generator_mul(g, b);
                changed = true;
            }
            None => return changed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_are_simple() {
        let a2 = CoxeterSystem::from_label("A2").unwrap();
        let b = PositiveBraid::from_word(&a2, &[0, 1, 0]);
        assert_eq!(b.factors(), &[a2.longest_element()]);
        assert_eq!(b, PositiveBraid::delta_power(&a2, 1));
    }

    #[test]
    fn braid_relation_gives_same_normal_form() {
        let a2 = CoxeterSystem::from_label("A2").unwrap();
        let x = PositiveBraid::from_word(&a2, &[0, 1, 0, 1, 1]);
        let y = PositiveBraid::from_word(&a2, &[1, 0, 1, 1, 1]);
        assert_eq!(x, y);
    }

    #[test]
    fn square_of_generator_needs_two_factors() {
        let a2 = CoxeterSystem::from_label("A2").unwrap();
        let b = PositiveBraid::from_word(&a2, &[0, 0]);
        assert_eq!(b.sup(), 2);
        assert!(!b.divides_delta_power(1));
        assert!(b.divides_delta_power(2));
    }

    #[test]
    fn coxeter_power_is_full_twist() {
        // c^h = Δ^2 in the Artin monoid.
        for (label, h) in [("A2", 3), ("A3", 4), ("B2", 4), ("I2(5)", 5)] {
            let sys = CoxeterSystem::from_label(label).unwrap();
            let c: Vec<usize> = (0..sys.rank()).collect();
            let word: Vec<usize> = c.iter().copied().cycle().take(h * c.len()).collect();
            assert_eq!(
                PositiveBraid::from_word(&sys, &word),
                PositiveBraid::delta_power(&sys, 2),
                "{label}"
            );
        }
    }
}
