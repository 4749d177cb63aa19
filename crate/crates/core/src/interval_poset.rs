//! The poset on Cambrian intervals (and longer multichains), its red
//! elements, and multichain counts.

use num_rational::Ratio;
use serde::Serialize;

use crate::cambrian::Cambrian;
use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{Error, Result};
use crate::factorization::MCambrian;
use crate::poset::FinitePoset;

/// The raw relation between two Cambrian intervals `[u, u']` and `[w, w']`:
/// `u ≤_R w`, `u ≤_R w'` and `u' ≤_R w'`.
pub fn interval_relation(sys: &CoxeterSystem, i: (Elem, Elem), j: (Elem, Elem)) -> bool {
    chain_relation(sys, &[i.0, i.1], &[j.0, j.1])
}

/// Componentwise and one-step diagonal absolute-order comparisons.
pub fn chain_relation(sys: &CoxeterSystem, x: &[Elem], y: &[Elem]) -> bool {
    x.iter().zip(y).all(|(&a, &b)| sys.absolute_le(a, b))
        && x.iter()
            .zip(y.iter().skip(1))
            .all(|(&a, &b)| sys.absolute_le(a, b))
}

/// `CambInt^k`: k-multichains of the Cambrian lattice under the reflexive
/// closure of [`chain_relation`].
#[derive(Debug)]
pub struct CambInt {
    pub k: usize,
    pub poset: FinitePoset<Vec<Elem>>,
    /// `red[i]` when element `i` is not related to itself by the raw relation.
    pub red: Vec<bool>,
}

impl CambInt {
    pub fn red_count(&self) -> usize {
        self.red.iter().filter(|&&r| r).count()
    }

    /// Weakly increasing sequences of length `m` in which no red element
    /// appears twice in a row.
    pub fn count_multichains_no_red_repeat(&self, m: usize) -> u128 {
        count_multichains_no_red_repeat(&self.poset, &self.red, m)
    }
}

/// The k-multichains of `Camb_NC(W, c)`, as sequences of noncrossing
/// partitions.
pub fn cambrian_multichains(camb: &Cambrian<'_>, k: usize) -> Result<Vec<Vec<Elem>>> {
    let one = MCambrian::new(camb, 1);
    let poset = one.nc_poset()?;
    let labels: Vec<Elem> = poset
        .labels()
        .iter()
        .map(|f| one.to_multichain(f)[0])
        .collect();
    Ok(poset
        .multichains(k)
        .map(|chain| chain.into_iter().map(|i| labels[i]).collect())
        .collect())
}

pub fn cambint_poset(camb: &Cambrian<'_>, k: usize) -> Result<CambInt> {
    if k < 2 {
        return Err(Error::InvalidArgument("CambInt needs k >= 2".into()));
    }
    let sys = camb.system();
    let chains = cambrian_multichains(camb, k)?;
    let red: Vec<bool> = chains.iter().map(|x| !chain_relation(sys, x, x)).collect();
    let copy = chains.clone();
    let poset = FinitePoset::from_relation(chains, |i, j| {
        i == j || chain_relation(sys, &copy[i], &copy[j])
    })?;
    Ok(CambInt { k, poset, red })
}

pub fn count_multichains_no_red_repeat<L: Clone + Eq + std::hash::Hash>(
    poset: &FinitePoset<L>,
    red: &[bool],
    m: usize,
) -> u128 {
    if m == 0 {
        return 1;
    }
    let n = poset.len();
    let mut counts = vec![1u128; n];
    for _ in 1..m {
        counts = (0..n)
            .map(|y| {
                poset
                    .down_set(y)
                    .filter(|&x| !(x == y && red[y]))
                    .map(|x| counts[x])
                    .sum()
            })
            .collect();
    }
    counts.iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionCheck {
    pub k: usize,
    pub m: usize,
    /// m-multichains of `CambInt^k` without red repetition.
    pub interval_side: u128,
    /// k-multichains of the m-Cambrian lattice.
    pub cambrian_side: u128,
    pub equal: bool,
}

pub fn multichain_bijection_check(
    camb: &Cambrian<'_>,
    k: usize,
    m: usize,
) -> Result<BijectionCheck> {
    let ci = cambint_poset(camb, k)?;
    let lhs = ci.count_multichains_no_red_repeat(m);
    let rhs = MCambrian::new(camb, m).nc_poset()?.count_multichains(k);
    Ok(BijectionCheck {
        k,
        m,
        interval_side: lhs,
        cambrian_side: rhs,
        equal: lhs == rhs,
    })
}

/// Exact polynomial through `(1, counts[0]), ..., (d, counts[d-1])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFit {
    /// Coefficients in increasing degree.
    pub coefficients: Vec<Ratio<i128>>,
    pub degree: usize,
    /// Value of the fitted polynomial at `max_m + 1`.
    pub predicted: Ratio<i128>,
    pub actual: u128,
    /// Whether the prediction matches the extra count.
    pub fits: bool,
}

impl PolynomialFit {
    pub fn eval(&self, x: i128) -> Ratio<i128> {
        self.coefficients
            .iter()
            .rev()
            .fold(Ratio::from_integer(0), |acc, &c| acc * x + c)
    }
}

/// Interpolates `count(m)` at `m = 1..=max_m` and checks the prediction at
/// `max_m + 1`.
pub fn polynomial_fit(count: impl Fn(usize) -> u128, max_m: usize) -> Result<PolynomialFit> {
    if max_m == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let values: Vec<i128> = (1..=max_m)
        .map(|m| {
            i128::try_from(count(m)).map_err(|_| Error::InvalidArgument("count overflow".into()))
        })
        .collect::<Result<_>>()?;
    // Newton form on the nodes 1, 2, ..., max_m with forward differences.
    let mut diffs = Vec::with_capacity(max_m);
    let mut row = values.clone();
    while !row.is_empty() {
        diffs.push(row[0]);
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let mut coefficients = vec![Ratio::from_integer(0i128); max_m];
    // basis_j(x) = C(x - 1, j) = prod_{t<j} (x - 1 - t) / j!
    let mut basis = vec![Ratio::from_integer(1i128)];
    for (j, &d) in diffs.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coefficients[i] += *b * d;
        }
        let t = Ratio::from_integer(-1 - j as i128);
        let denom = Ratio::from_integer(j as i128 + 1);
        let mut next = vec![Ratio::from_integer(0); basis.len() + 1];
        for (i, &b) in basis.iter().enumerate() {
            next[i] += b * t / denom;
            next[i + 1] += b / denom;
        }
        basis = next;
    }
    while coefficients.len() > 1 && coefficients.last() == Some(&Ratio::from_integer(0)) {
        coefficients.pop();
    }
    let degree = coefficients.len() - 1;
    let actual = count(max_m + 1);
    let mut fit = PolynomialFit {
        coefficients,
        degree,
        predicted: Ratio::from_integer(0),
        actual,
        fits: false,
    };
    fit.predicted = fit.eval(max_m as i128 + 1);
    fit.fits = i128::try_from(actual).is_ok_and(|a| fit.predicted == Ratio::from_integer(a));
    Ok(fit)
}

/// Fits the no-red-repeat multichain counts of a poset with red elements.
pub fn multichain_polynomial_fit<L: Clone + Eq + std::hash::Hash>(
    poset: &FinitePoset<L>,
    red: &[bool],
    max_m: usize,
) -> Result<PolynomialFit> {
    polynomial_fit(|m| count_multichains_no_red_repeat(poset, red, m), max_m)
}
