//! Exact root models: every generator acts as a permutation of a finite
//! root set, so group elements compare structurally.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Upper bound on the size of a root orbit before the group is declared
/// infinite.
const ROOT_LIMIT: usize = 20_000;

/// Shape of one irreducible factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Crystallographic type realised by an integral Cartan matrix.
    Crystallographic,
    /// Dihedral group of order `2k`, roots indexed by `Z / 2k`.
    Dihedral(u32),
}

/// One irreducible factor of a Coxeter system.
#[derive(Clone, Debug)]
pub struct Component {
    pub generators: Vec<usize>,
    pub kind: ComponentKind,
    /// Invariant degrees, ascending.
    pub degrees: Vec<u32>,
}

impl Component {
    pub fn coxeter_number(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(1)
    }
}

/// Permutation data of a finite root system.
#[derive(Clone, Debug, Default)]
pub struct RootModel {
    pub positive: Vec<bool>,
    pub negation: Vec<u16>,
    pub simple: Vec<u16>,
    pub generators: Vec<Vec<u16>>,
}

impl RootModel {
    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    /// Disjoint union; generators of `other` are appended after ours.
    fn extend(&mut self, other: RootModel) {
        let offset = self.len() as u16;
        let total = self.len() + other.len();
        for g in &mut self.generators {
            g.extend(offset..total as u16);
        }
        for g in other.generators {
            let mut perm: Vec<u16> = (0..offset).collect();
            perm.extend(g.into_iter().map(|r| r + offset));
            self.generators.push(perm);
        }
        self.positive.extend(other.positive);
        self.negation
            .extend(other.negation.into_iter().map(|r| r + offset));
        self.simple
            .extend(other.simple.into_iter().map(|r| r + offset));
    }
}

/// Roots of the dihedral group `I2(k)`: root `j` sits at angle `j·π/k`,
/// positive for `j < k`. Simple roots are `0` and `k - 1`.
fn dihedral(k: u32) -> RootModel {
    let k = k as usize;
    let n = 2 * k;
    let reflect =
        |a: usize| -> Vec<u16> { (0..n).map(|j| ((2 * a + k + n - j) % n) as u16).collect() };
    RootModel {
        positive: (0..n).map(|j| j < k).collect(),
        negation: (0..n).map(|j| ((j + k) % n) as u16).collect(),
        simple: vec![0, (k - 1) as u16],
        generators: vec![reflect(0), reflect(k - 1)],
    }
}

/// Orbit of the simple roots under `s_i(b) = b - <a_i^v, b> a_i`, with roots
/// written in the simple-root basis. Also returns the heights of the
/// positive roots.
fn crystallographic(cartan: &[Vec<i64>]) -> Result<(RootModel, Vec<u32>)> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        index.insert(e.clone(), roots.len());
        roots.push(e.clone());
        queue.push_back(e);
    }
    let reflect = |i: usize, b: &[i64]| -> Vec<i64> {
        let pairing: i64 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
        let mut out = b.to_vec();
        out[i] -= pairing;
        out
    };
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let image = reflect(i, &b);
            if !index.contains_key(&image) {
                if roots.len() >= ROOT_LIMIT {
                    return Err(Error::InfiniteGroup);
                }
                index.insert(image.clone(), roots.len());
                roots.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    if roots.len() > u16::MAX as usize {
        return Err(Error::InfiniteGroup);
    }
    let positive: Vec<bool> = roots.iter().map(|b| b.iter().all(|&x| x >= 0)).collect();
    let mut negation = Vec::with_capacity(roots.len());
    for b in &roots {
        let neg: Vec<i64> = b.iter().map(|x| -x).collect();
        let j = *index
            .get(&neg)
            .ok_or_else(|| Error::InvalidMatrix("root system not closed under negation".into()))?;
        negation.push(j as u16);
    }
    let generators = (0..n)
        .map(|i| roots.iter().map(|b| index[&reflect(i, b)] as u16).collect())
        .collect();
    let heights = roots
        .iter()
        .zip(&positive)
        .filter(|(_, &p)| p)
        .map(|(b, _)| b.iter().sum::<i64>() as u32)
        .collect();
    Ok((
        RootModel {
            positive,
            negation,
            simple: (0..n as u16).collect(),
            generators,
        },
        heights,
    ))
}

/// Degrees from the height distribution of positive roots: the exponents
/// form the partition conjugate to `(#roots of height k)_k`.
fn degrees_from_heights(heights: &[u32]) -> Vec<u32> {
    let max = heights.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max + 1];
    for &h in heights {
        counts[h as usize] += 1;
    }
    let rank = counts.get(1).copied().unwrap_or(0);
    let mut degrees: Vec<u32> = (1..=rank)
        .map(|i| counts[1..].iter().filter(|&&c| c >= i).count() as u32 + 1)
        .collect();
    degrees.sort_unstable();
    degrees
}

/// Splits a Coxeter matrix into connected components of its Coxeter graph.
fn connected_components(matrix: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && matrix[i][j] > 2 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Cartan matrix for a tree-shaped crystallographic Coxeter matrix. Double
/// and triple bonds are oriented from the lower to the higher index; on a
/// tree any orientation is symmetrisable.
fn cartan_for_tree(sub: &[Vec<u32>]) -> Result<Vec<Vec<i64>>> {
    let n = sub.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| sub[i][j] > 2)
        .count();
    if edges + 1 != n {
        return Err(Error::UnsupportedType(
            "Coxeter graph with a cycle (not of finite type)".into(),
        ));
    }
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in i + 1..n {
            let (x, y) = match sub[i][j] {
                2 => (0, 0),
                3 => (-1, -1),
                4 => (-1, -2),
                6 => (-1, -3),
                other => {
                    return Err(Error::UnsupportedType(format!(
                        "bond of order {other} in rank {n} is not crystallographic"
                    )))
                }
            };
            a[i][j] = x;
            a[j][i] = y;
        }
    }
    Ok(a)
}

/// Builds the root model of a (possibly reducible) Coxeter matrix, ordering
/// generators as in the matrix.
pub fn build(matrix: &[Vec<u32>]) -> Result<(RootModel, Vec<Component>)> {
    let n = matrix.len();
    let comps = connected_components(matrix);
    let mut model = RootModel {
        generators: Vec::new(),
        ..Default::default()
    };
    let mut components = Vec::new();
    // Per original generator: (component model index, local generator index).
    let mut built: Vec<RootModel> = Vec::new();
    for gens in comps {
        let sub: Vec<Vec<u32>> = gens
            .iter()
            .map(|&i| gens.iter().map(|&j| matrix[i][j]).collect())
            .collect();
        let (local, kind, degrees) = match gens.len() {
            1 => {
                let (m, h) = crystallographic(&[vec![2]])?;
                (m, ComponentKind::Crystallographic, degrees_from_heights(&h))
            }
            2 => {
                let k = sub[0][1];
                (dihedral(k), ComponentKind::Dihedral(k), vec![2, k])
            }
            _ => {
                let cartan = cartan_for_tree(&sub)?;
                let (m, h) = crystallographic(&cartan)?;
                (m, ComponentKind::Crystallographic, degrees_from_heights(&h))
            }
        };
        let mut degrees = degrees;
        degrees.sort_unstable();
        built.push(local);
        components.push(Component {
            generators: gens,
            kind,
            degrees,
        });
    }
    for local in built {
        model.extend(local);
    }
    // `extend` appends generators component by component; restore the
    // original generator order.
    let order: Vec<usize> = components
        .iter()
        .flat_map(|c| c.generators.clone())
        .collect();
    let mut generators = vec![Vec::new(); n];
    let mut simple = vec![0u16; n];
    for (slot, &g) in order.iter().enumerate() {
        generators[g] = std::mem::take(&mut model.generators[slot]);
        simple[g] = model.simple[slot];
    }
    model.generators = generators;
    model.simple = simple;
    if model.len() > u16::MAX as usize {
        return Err(Error::InfiniteGroup);
    }
    Ok((model, components))
}
