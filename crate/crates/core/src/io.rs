//! JSON and DOT rendering of posets, text formats for factorizations and
//! multichains, and the run configuration shared by the command line.

use std::fmt::Write as _;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::cambrian::{Cambrian, CoxeterWord};
use crate::coxeter::{CoxeterSystem, Elem, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::factorization::{ColoredReflection, MCambrian, MFactorization};
use crate::m_cambrian::{AbortRule, Condition};
use crate::poset::FinitePoset;

pub const SCHEMA_VERSION: u32 = 1;

/// Serialized form of a poset: labels plus Hasse edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub schema: u32,
    pub kind: String,
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl PosetDocument {
    pub fn new<L: Clone + Eq + Hash>(
        kind: &str,
        poset: &FinitePoset<L>,
        label: impl Fn(&L) -> String,
    ) -> Self {
        PosetDocument {
            schema: SCHEMA_VERSION,
            kind: kind.to_string(),
            elements: poset.labels().iter().map(label).collect(),
            covers: poset.hasse_edges().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PosetDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", doc.schema)));
        }
        Ok(doc)
    }

    /// Rebuilds the poset on the string labels.
    pub fn to_poset(&self) -> Result<FinitePoset<String>> {
        FinitePoset::from_covers(self.elements.clone(), self.covers.iter().copied())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name: String = self
            .kind
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, label) in self.elements.iter().enumerate() {
            let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  n{i} [label=\"{escaped}\"];").unwrap();
        }
        for (a, b) in &self.covers {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} ({} elements, {} covers)",
            self.kind,
            self.elements.len(),
            self.covers.len()
        )
        .unwrap();
        for (i, label) in self.elements.iter().enumerate() {
            writeln!(out, "{:>4}  {label}", i + 1).unwrap();
        }
        for (a, b) in &self.covers {
            writeln!(out, "{} < {}", a + 1, b + 1).unwrap();
        }
        out
    }
}

/// A factorization written with reflection names, e.g. `s^0 t^0`.
pub fn format_factorization(mc: &MCambrian<'_>, f: &MFactorization) -> String {
    let sys = mc.system();
    if f.letters().is_empty() {
        return "e".to_string();
    }
    f.letters()
        .iter()
        .map(|&r| format!("{}^{}", sys.format_element(mc.value(r)), r.color))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Reads a factorization from its JSON form `[[color, index], ...]`.
pub fn factorization_from_json(mc: &MCambrian<'_>, text: &str) -> Result<MFactorization> {
    let letters: Vec<ColoredReflection> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    mc.factorization(letters)
}

pub fn factorization_to_json(f: &MFactorization) -> String {
    serde_json::to_string(f).expect("factorizations serialize")
}

/// A multichain written as comma separated reduced words.
pub fn format_multichain(sys: &CoxeterSystem, chain: &[Elem]) -> String {
    chain
        .iter()
        .map(|&w| sys.format_element(w))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Parses `"e, s, s, s"` into group elements.
pub fn parse_multichain(sys: &CoxeterSystem, text: &str) -> Result<Vec<Elem>> {
    text.split(',')
        .map(|part| sys.parse_element(part.trim()))
        .collect()
}

/// Outcome of comparing two m-noncrossing partitions: the greedy
/// certificate and the vertical/diagonal criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub schema: u32,
    pub comparable: bool,
    /// Rotated letters of the c-increasing chain, e.g. `s^0`.
    pub chain: Vec<String>,
    pub witness: Option<WitnessReport>,
    pub criterion: CriterionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub letter: String,
    pub rule: AbortRule,
    pub step: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub holds: bool,
    pub condition: Option<Condition>,
    pub index: Option<usize>,
    pub lower: Option<String>,
    pub upper: Option<String>,
}

fn letter_name(mc: &MCambrian<'_>, r: ColoredReflection) -> String {
    format!("{}^{}", mc.system().format_element(mc.value(r)), r.color)
}

/// Compares two multichains given as text, rejecting chains that are not
/// weakly increasing in absolute order.
pub fn compare_multichains(mc: &MCambrian<'_>, a: &str, b: &str) -> Result<ComparisonReport> {
    let sys = mc.system();
    let (wa, wb) = (parse_multichain(sys, a)?, parse_multichain(sys, b)?);
    let (fa, fb) = (mc.from_multichain(&wa)?, mc.from_multichain(&wb)?);
    let cert = mc.greedy_chain(&fa, &fb);
    let outcome = mc.mleq_criterion(&wa, &wb)?;
    let failure = outcome.failure();
    Ok(ComparisonReport {
        schema: SCHEMA_VERSION,
        comparable: cert.comparable,
        chain: cert.chain.iter().map(|&r| letter_name(mc, r)).collect(),
        witness: cert.witness.map(|w| WitnessReport {
            letter: letter_name(mc, w.letter),
            rule: w.rule,
            step: w.step,
        }),
        criterion: CriterionReport {
            holds: outcome.holds(),
            condition: failure.map(|f| f.condition),
            index: failure.map(|f| f.index),
            lower: failure.map(|f| sys.format_element(f.lower)),
            upper: failure.map(|f| sys.format_element(f.upper)),
        },
    })
}

impl ComparisonReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{}",
            if self.comparable {
                "comparable"
            } else {
                "incomparable"
            }
        )
        .unwrap();
        if self.comparable {
            let chain = if self.chain.is_empty() {
                "(empty)".to_string()
            } else {
                self.chain.join(" < ")
            };
            writeln!(out, "chain: {chain}").unwrap();
        }
        if let Some(w) = &self.witness {
            let rule = serde_json::to_value(w.rule).unwrap();
            writeln!(
                out,
                "greedy abort: {} at step {} ({})",
                w.letter,
                w.step,
                rule.as_str().unwrap_or("")
            )
            .unwrap();
        }
        match (
            &self.criterion.condition,
            self.criterion.index,
            &self.criterion.lower,
            &self.criterion.upper,
        ) {
            (Some(cond), Some(i), Some(lo), Some(hi)) => {
                let rel = if *cond == Condition::Vertical {
                    "≤"
                } else {
                    "≤_R"
                };
                writeln!(
                    out,
                    "{cond} condition fails at index {i}: {lo} {rel} {hi} does not hold"
                )
                .unwrap();
            }
            _ => writeln!(out, "vertical and diagonal conditions hold").unwrap(),
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Dot,
    Json,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(OutputFormat::Dot),
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Group, Coxeter word, parameters and limits of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub group: String,
    /// Generator names in order; empty means the linear word.
    pub coxeter_word: Vec<String>,
    pub m: usize,
    pub k: usize,
    pub format: OutputFormat,
    pub cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: "A2".into(),
            coxeter_word: Vec::new(),
            m: 1,
            k: 2,
            format: OutputFormat::Text,
            cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

impl RunConfig {
    pub fn system(&self) -> Result<CoxeterSystem> {
        CoxeterSystem::from_label_with_cap(&self.group, self.cap)
    }

    /// The configured Coxeter word, checked to be a permutation of the
    /// generators.
    pub fn word(&self, sys: &CoxeterSystem) -> Result<CoxeterWord> {
        if self.coxeter_word.is_empty() {
            return Ok(CoxeterWord::linear(sys));
        }
        CoxeterWord::parse(sys, &self.coxeter_word.join(" "))
    }

    pub fn cambrian<'a>(&self, sys: &'a CoxeterSystem) -> Result<Cambrian<'a>> {
        Cambrian::new(sys, self.word(sys)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let sys = CoxeterSystem::from_label("A2").unwrap();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 1);
        let p = mc.nc_poset().unwrap();
        let doc = PosetDocument::new("nc", &p, |f| format_factorization(&mc, f));
        let back = PosetDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        let q = back.to_poset().unwrap();
        assert_eq!(q.hasse_edges(), p.hasse_edges());
        assert_eq!(doc.elements[0], "s^0 t^0");
    }

    #[test]
    fn dot_is_deterministic() {
        let sys = CoxeterSystem::from_label("A2").unwrap();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let p = camb.sort_poset();
        let a = PosetDocument::new("sort", &p, |&w| sys.format_element(w)).to_dot();
        let b = PosetDocument::new("sort", &camb.sort_poset(), |&w| sys.format_element(w)).to_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches("->").count(), 5);
        assert!(a.starts_with("digraph sort {"));
    }

    #[test]
    fn factorization_json() {
        let sys = CoxeterSystem::from_label("B2").unwrap();
        let camb = Cambrian::new(&sys, CoxeterWord::linear(&sys)).unwrap();
        let mc = MCambrian::new(&camb, 2);
        for f in mc.factorizations().unwrap() {
            assert_eq!(
                factorization_from_json(&mc, &factorization_to_json(&f)).unwrap(),
                f
            );
        }
        assert!(factorization_from_json(&mc, "[[0,0]]").is_err());
        assert!(factorization_from_json(&mc, "nope").is_err());
    }

    #[test]
    fn multichain_text() {
        let sys = CoxeterSystem::from_label("A2").unwrap();
        let chain = parse_multichain(&sys, "e, s, sts, st").unwrap();
        assert_eq!(format_multichain(&sys, &chain), "e, s, sts, st");
        assert!(parse_multichain(&sys, "e, x").is_err());
    }

    #[test]
    fn run_config_words() {
        let cfg = RunConfig {
            coxeter_word: vec!["t".into(), "s".into()],
            ..RunConfig::default()
        };
        let sys = cfg.system().unwrap();
        assert_eq!(cfg.word(&sys).unwrap().letters(), &[1, 0]);
        let bad = RunConfig {
            coxeter_word: vec!["s".into(), "s".into()],
            ..RunConfig::default()
        };
        assert!(bad.word(&sys).is_err());
        let json = serde_json::to_string(&cfg).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&json).unwrap(), cfg);
    }

    #[test]
    fn comparison_example() {
        let sys = CoxeterSystem::from_label("A2").unwrap();
        let camb = Cambrian::parse(&sys, "st").unwrap();
        let mc = MCambrian::new(&camb, 4);
        let yes = compare_multichains(&mc, "e, s, s, s", "sts, sts, st, st").unwrap();
        assert!(yes.comparable && yes.criterion.holds);
        assert!(!yes.chain.is_empty());
        let no = compare_multichains(&mc, "e, s, s, s", "sts, sts, sts, st").unwrap();
        assert!(!no.comparable);
        assert_eq!(no.criterion.condition, Some(Condition::Diagonal));
        assert_eq!(no.criterion.index, Some(2));
        assert!(no
            .to_text()
            .contains("diagonal condition fails at index 2: s ≤_R sts"));
        let same = compare_multichains(&mc, "e, s, s, s", "e, s, s, s").unwrap();
        assert!(same.comparable && same.chain.is_empty());
        assert!(compare_multichains(&mc, "s, e, s, s", "e, s, s, s").is_err());
        assert!(compare_multichains(&mc, "e, s", "e, s, s, s").is_err());
    }
}
