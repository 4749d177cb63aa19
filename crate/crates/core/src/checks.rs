//! Named property suites. Each suite runs exhaustively on one instance and
//! reports the first few discrepancies.

use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cambrian::{iso_three_versions, Cambrian, CoxeterWord};
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::factorization::{ColoredReflection, MCambrian, MFactorization};
use crate::interval_poset::multichain_bijection_check;
use crate::poset::FinitePoset;
use crate::tamari::conjecture_check;

const MAX_REPORTED: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Pentagon,
    ThreeVersions,
    MEquivalence,
    Greedy,
    Chains,
    Criterion,
    Lemmas,
    Embedding,
    IntervalBijection,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Pentagon,
        Suite::ThreeVersions,
        Suite::MEquivalence,
        Suite::Greedy,
        Suite::Chains,
        Suite::Criterion,
        Suite::Lemmas,
        Suite::Embedding,
        Suite::IntervalBijection,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pentagon => "pentagon",
            Suite::ThreeVersions => "three-versions",
            Suite::MEquivalence => "m-equivalence",
            Suite::Greedy => "greedy",
            Suite::Chains => "chains",
            Suite::Criterion => "criterion",
            Suite::Lemmas => "lemmas",
            Suite::Embedding => "embedding",
            Suite::IntervalBijection => "interval-bijection",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Parameters a suite may read; unused ones are ignored.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub group: String,
    /// Coxeter words to run on; empty means all of them.
    pub words: Vec<CoxeterWord>,
    pub m: usize,
    pub k: usize,
    /// `(n, m)` pairs for the conjecture suite.
    pub grid: Vec<(usize, usize)>,
    pub cap: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instance: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, instance: String) -> Self {
        SuiteReport {
            suite,
            instance,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < MAX_REPORTED {
            self.failures.push(failure());
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        for f in other.failures {
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(f);
            }
        }
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    if suite == Suite::Pentagon {
        return pentagon();
    }
    if suite == Suite::Conjecture {
        return conjecture(&params.grid, params.cap);
    }
    let sys = CoxeterSystem::from_label_with_cap(&params.group, params.cap)?;
    let words = if params.words.is_empty() {
        CoxeterWord::all(&sys)
    } else {
        params.words.clone()
    };
    let instance = format!("{} m={}", params.group, params.m);
    let reports = words
        .par_iter()
        .map(|word| {
            let camb = Cambrian::new(&sys, word.clone())?;
            let mc = MCambrian::new(&camb, params.m).with_cap(params.cap);
            match suite {
                Suite::ThreeVersions => three_versions(&camb),
                Suite::MEquivalence => m_equivalence(&mc),
                Suite::Greedy => greedy(&mc),
                Suite::Chains => chains(&mc),
                Suite::Criterion => criterion(&mc),
                Suite::Lemmas => lemmas(&mc),
                Suite::Embedding => embedding(&mc),
                Suite::IntervalBijection => interval_bijection(&camb, params.k, params.m),
                Suite::Pentagon | Suite::Conjecture => unreachable!(),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SuiteReport::new(suite, instance);
    for r in reports {
        report.merge(r);
    }
    Ok(report)
}

/// One row of the three-version table: sorting word, facet, and colored
/// letters of the factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub sort: String,
    pub facet: String,
    pub letters: Vec<(usize, usize)>,
}

/// The three versions of `Camb(W, c)` side by side, with covers as pairs
/// of row numbers starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeVersionTable {
    pub rows: Vec<TableRow>,
    pub covers: Vec<(usize, usize)>,
    pub isomorphic: bool,
}

pub fn three_version_table(camb: &Cambrian<'_>) -> Result<ThreeVersionTable> {
    let sys = camb.system();
    let tv = iso_three_versions(camb)?;
    let rows = (0..tv.sort.len())
        .map(|i| {
            let sc = tv.sort_to_sc[i];
            let nc = tv.sc_to_nc[sc];
            TableRow {
                sort: camb
                    .sorting_word(*tv.sort.label(i))
                    .display(sys)
                    .to_string(),
                facet: tv.sc.label(sc).to_string(),
                letters: tv
                    .nc
                    .label(nc)
                    .letters()
                    .iter()
                    .map(|r| (r.color, r.index))
                    .collect(),
            }
        })
        .collect();
    let mut covers: Vec<(usize, usize)> = tv
        .sort
        .hasse_edges()
        .iter()
        .map(|&(a, b)| (a + 1, b + 1))
        .collect();
    covers.sort_unstable();
    Ok(ThreeVersionTable {
        rows,
        covers,
        isomorphic: tv.isomorphic(),
    })
}

/// The type A2 table for `c = st`. Letters are `(color, index)` with
/// reflections ordered `s, sts, t`.
pub fn pentagon_expected() -> ThreeVersionTable {
    let row = |sort: &str, facet: &str, letters: [(usize, usize); 2]| TableRow {
        sort: sort.into(),
        facet: facet.into(),
        letters: letters.to_vec(),
    };
    ThreeVersionTable {
        rows: vec![
            row("ε", "{1,2}", [(0, 0), (0, 2)]),
            row("s|", "{2,3}", [(0, 1), (1, 0)]),
            row("st|", "{3,4}", [(0, 2), (1, 1)]),
            row("t|", "{1,5}", [(0, 0), (1, 2)]),
            row("st|s", "{4,5}", [(1, 0), (1, 2)]),
        ],
        covers: vec![(1, 2), (1, 4), (2, 3), (3, 5), (4, 5)],
        isomorphic: true,
    }
}

/// Renumbers the rows of `table` to follow the sorting words of `reference`.
pub fn align_rows(
    table: &ThreeVersionTable,
    reference: &ThreeVersionTable,
) -> Option<ThreeVersionTable> {
    let perm: Vec<usize> = reference
        .rows
        .iter()
        .map(|r| table.rows.iter().position(|t| t.sort == r.sort))
        .collect::<Option<_>>()?;
    if table.rows.len() != perm.len() {
        return None;
    }
    let mut inverse = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let mut covers: Vec<(usize, usize)> = table
        .covers
        .iter()
        .map(|&(a, b)| (inverse[a - 1] + 1, inverse[b - 1] + 1))
        .collect();
    covers.sort_unstable();
    Some(ThreeVersionTable {
        rows: perm.iter().map(|&i| table.rows[i].clone()).collect(),
        covers,
        isomorphic: table.isomorphic,
    })
}

fn pentagon() -> Result<SuiteReport> {
    let sys = CoxeterSystem::from_label("A2")?;
    let camb = Cambrian::parse(&sys, "st")?;
    let mut report = SuiteReport::new(Suite::Pentagon, "A2 c=st".into());
    report.check(sys.format_word(&camb.search_word()) == "ststs", || {
        "search word".into()
    });
    let expected = pentagon_expected();
    let table = three_version_table(&camb)?;
    match align_rows(&table, &expected) {
        None => report.check(false, || "sortable elements differ".into()),
        Some(aligned) => {
            for (i, (got, want)) in aligned.rows.iter().zip(&expected.rows).enumerate() {
                report.check(got == want, || {
                    format!("row {}: got {got:?}, want {want:?}", i + 1)
                });
            }
            report.check(aligned.covers == expected.covers, || {
                format!("covers {:?}", aligned.covers)
            });
            report.check(aligned.isomorphic, || "versions are not isomorphic".into());
        }
    }
    Ok(report)
}

fn instance_name(mc: &MCambrian<'_>) -> String {
    let sys = mc.system();
    format!(
        "{} c={} m={}",
        sys.label(),
        sys.format_word(mc.base().coxeter_word().letters()),
        mc.m()
    )
}

fn three_versions(camb: &Cambrian<'_>) -> Result<SuiteReport> {
    let sys = camb.system();
    let name = format!(
        "{} c={}",
        sys.label(),
        sys.format_word(camb.coxeter_word().letters())
    );
    let mut report = SuiteReport::new(Suite::ThreeVersions, name.clone());
    let tv = iso_three_versions(camb)?;
    let expected = sys.fuss_catalan(1);
    report.check(tv.sort.len() as u128 == expected, || {
        format!("{name}: {} sortable elements", tv.sort.len())
    });
    report.check(tv.isomorphic(), || {
        format!("{name}: {}", tv.counterexample.clone().unwrap_or_default())
    });
    Ok(report)
}

fn m_equivalence(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::MEquivalence, name.clone());
    let sc = mc.sc_poset()?;
    let nc = mc.nc_poset()?;
    let expected = mc.system().fuss_catalan(mc.m() as u64);
    report.check(sc.len() as u128 == expected, || {
        format!("{name}: {} facets", sc.len())
    });
    report.check(nc.len() as u128 == expected, || {
        format!("{name}: {} factorizations", nc.len())
    });
    let map = sc
        .labels()
        .iter()
        .map(|f| {
            let g = mc.facet_to_factorization(f)?;
            Ok(nc.index_of(&g).unwrap_or(usize::MAX))
        })
        .collect::<Result<Vec<_>>>()?;
    let result = if map.contains(&usize::MAX) {
        Err((usize::MAX, usize::MAX))
    } else {
        sc.verify_isomorphism(&nc, &map)
    };
    report.check(result.is_ok(), || {
        format!("{name}: facet map is not an isomorphism")
    });
    Ok(report)
}

fn greedy(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::Greedy, name.clone());
    let p = mc.nc_poset()?;
    for i in 0..p.len() {
        for j in 0..p.len() {
            let cert = mc.greedy_chain(p.label(i), p.label(j));
            report.check(cert.comparable == p.le(i, j), || {
                format!(
                    "{name}: greedy says {} for {} vs {}",
                    cert.comparable,
                    p.label(i),
                    p.label(j)
                )
            });
        }
    }
    Ok(report)
}

/// Rotated letter of each Hasse edge.
fn edge_letters(
    mc: &MCambrian<'_>,
    p: &FinitePoset<MFactorization>,
) -> HashMap<(usize, usize), ColoredReflection> {
    let mut out = HashMap::new();
    for (i, f) in p.labels().iter().enumerate() {
        for (r, g) in mc.upper_covers(f) {
            if let Some(j) = p.index_of(&g) {
                out.entry((i, j)).or_insert(r);
            }
        }
    }
    out
}

fn chains(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::Chains, name.clone());
    let p = mc.nc_poset()?;
    let letters = edge_letters(mc, &p);
    let mut rotation_edges: Vec<(usize, usize)> = letters.keys().copied().collect();
    rotation_edges.sort_unstable();
    let mut hasse = p.hasse_edges().to_vec();
    hasse.sort_unstable();
    report.check(rotation_edges == hasse, || {
        format!("{name}: covers differ from rotations")
    });
    for i in 0..p.len() {
        for j in 0..p.len() {
            if !p.le(i, j) {
                continue;
            }
            let all = p.saturated_chains(i, j);
            let longest = all.iter().map(Vec::len).max().unwrap_or(0);
            let increasing: Vec<&Vec<usize>> = all
                .iter()
                .filter(|chain| {
                    let rs: Vec<ColoredReflection> =
                        chain.windows(2).map(|w| letters[&(w[0], w[1])]).collect();
                    rs.windows(2).all(|w| w[0] < w[1])
                })
                .collect();
            report.check(increasing.len() == 1, || {
                format!(
                    "{name}: {} increasing chains from {} to {}",
                    increasing.len(),
                    p.label(i),
                    p.label(j)
                )
            });
            if let Some(chain) = increasing.first() {
                report.check(chain.len() == longest, || {
                    format!(
                        "{name}: increasing chain from {} to {} is not longest",
                        p.label(i),
                        p.label(j)
                    )
                });
            }
        }
    }
    Ok(report)
}

fn criterion(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::Criterion, name.clone());
    let p = mc.nc_poset()?;
    let chains: Vec<_> = p.labels().iter().map(|f| mc.to_multichain(f)).collect();
    for i in 0..p.len() {
        for j in 0..p.len() {
            let holds = mc.mleq_criterion(&chains[i], &chains[j])?.holds();
            report.check(holds == p.le(i, j), || {
                format!(
                    "{name}: criterion says {holds} for {} vs {}",
                    p.label(i),
                    p.label(j)
                )
            });
        }
    }
    Ok(report)
}

fn lemmas(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::Lemmas, name.clone());
    let p = mc.nc_poset()?;
    let letters = edge_letters(mc, &p);
    let alphabet: Vec<ColoredReflection> = mc.alphabet().collect();
    for (&(i, j), &rot) in &letters {
        let (f, g) = (p.label(i), p.label(j));
        for &r in alphabet.iter().filter(|&&r| r <= rot) {
            let want = if r == rot { f.dimr(r) - 1 } else { f.dimr(r) };
            report.check(g.dimr(r) == want, || {
                format!("{name}: dimr at {r:?} across {f} -> {g}")
            });
        }
    }
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i == j || !p.le(i, j) {
                continue;
            }
            let (f, g) = (p.label(i), p.label(j));
            let smallest = f.letters().iter().copied().find(|&r| !g.contains(r));
            for chain in p.saturated_chains(i, j) {
                let min = chain.windows(2).map(|w| letters[&(w[0], w[1])]).min();
                report.check(min == smallest, || {
                    format!("{name}: smallest rotation from {f} to {g}")
                });
            }
        }
    }
    for (&(a, b), &r) in &letters {
        for c in p.upper_covers(b) {
            let r2 = letters[&(b, c)];
            if r2 >= r {
                continue;
            }
            let w0 = p.label(a);
            let ok = w0.contains(r2)
                && mc
                    .rotate(w0, r2)
                    .ok()
                    .and_then(|w1| p.index_of(&w1))
                    .is_some_and(|k| p.le(k, c));
            report.check(ok, || {
                format!(
                    "{name}: local reordering at {w0} -> {} -> {}",
                    p.label(b),
                    p.label(c)
                )
            });
        }
    }
    Ok(report)
}

fn embedding(mc: &MCambrian<'_>) -> Result<SuiteReport> {
    let name = instance_name(mc);
    let mut report = SuiteReport::new(Suite::Embedding, name.clone());
    let big = mc.nc_poset()?;
    for small_m in 1..mc.m() {
        let small = MCambrian::new(mc.base(), small_m).with_cap(mc.cap());
        let ps = small.nc_poset()?;
        for offset in 0..=mc.m() - small_m {
            let lo = big.index_of(&mc.monochromatic(offset)?);
            let hi = big.index_of(&mc.monochromatic(offset + small_m)?);
            let image = ps
                .labels()
                .iter()
                .map(|f| Ok(big.index_of(&mc.embed(&small, f, offset)?)))
                .collect::<Result<Option<Vec<usize>>>>()?;
            let (Some(lo), Some(hi), Some(image)) = (lo, hi, image) else {
                report.check(false, || format!("{name}: embedding leaves the lattice"));
                continue;
            };
            let mut sorted = image.clone();
            sorted.sort_unstable();
            let mut interval = big.interval(lo, hi);
            interval.sort_unstable();
            report.check(sorted == interval, || {
                format!("{name}: image of m'={small_m} at {offset} is not the interval")
            });
            let order_ok = (0..ps.len())
                .all(|i| (0..ps.len()).all(|j| ps.le(i, j) == big.le(image[i], image[j])));
            report.check(order_ok, || {
                format!("{name}: embedding m'={small_m} at {offset} is not an order embedding")
            });
        }
        for start in 0..=mc.m() - small_m {
            let proj = big
                .labels()
                .iter()
                .map(|f| Ok(ps.index_of(&mc.project(&small, f, start)?)))
                .collect::<Result<Option<Vec<usize>>>>()?;
            let Some(proj) = proj else {
                report.check(false, || format!("{name}: projection leaves the lattice"));
                continue;
            };
            let monotone = (0..big.len())
                .all(|i| (0..big.len()).all(|j| !big.le(i, j) || ps.le(proj[i], proj[j])));
            report.check(monotone, || {
                format!("{name}: projection to m'={small_m} from {start} is not monotone")
            });
        }
    }
    Ok(report)
}

fn interval_bijection(camb: &Cambrian<'_>, k: usize, m: usize) -> Result<SuiteReport> {
    let sys = camb.system();
    let name = format!(
        "{} c={} k={k} m={m}",
        sys.label(),
        sys.format_word(camb.coxeter_word().letters())
    );
    let mut report = SuiteReport::new(Suite::IntervalBijection, name.clone());
    let b = multichain_bijection_check(camb, k, m)?;
    report.check(b.equal, || {
        format!("{name}: {} vs {}", b.interval_side, b.cambrian_side)
    });
    Ok(report)
}

fn conjecture(grid: &[(usize, usize)], cap: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Conjecture, format!("{} pairs", grid.len()));
    let rows = grid
        .par_iter()
        .map(|&(n, m)| conjecture_check(n, m, cap))
        .collect::<Result<Vec<_>>>()?;
    for row in rows {
        report.check(row.equal, || {
            format!(
                "n={} m={}: {} vs {}",
                row.n, row.m, row.tamari_intervals, row.cambrian_intervals
            )
        });
    }
    Ok(report)
}
