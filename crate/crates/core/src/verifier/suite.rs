//! Batches of instances, listed explicitly or generated from seeded recipes.

use super::pipeline::verify_instance;
use super::report::{Verdict, VerificationReport};
use super::spec::InstanceSpec;
use crate::algebra::{coeff::rat_text, Int, Rat};
use crate::error::{Error, Result};
use crate::systems::{Family, FlagSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Seeded generator of instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Recipe {
    /// `(J1)^4` in `Gr(2,4)` with two seeded totally positive flags between `0` and `inf`.
    Tp22 { count: usize, seed: u64 },
    /// Hypersurface systems at `mp` distinct random rational points.
    Osculating {
        m: usize,
        p: usize,
        count: usize,
        seed: u64,
        #[serde(default = "default_range")]
        range: i64,
    },
}

fn default_range() -> i64 {
    30
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub instances: Vec<InstanceSpec>,
    #[serde(default)]
    pub recipes: Vec<Recipe>,
}

impl SuiteConfig {
    pub fn from_text(text: &str) -> Result<Self> {
        let t = text.trim_start();
        if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
        }
    }

    /// All instances in row order: explicit ones first, then each recipe in turn.
    pub fn expand(&self) -> Vec<InstanceSpec> {
        let mut out = self.instances.clone();
        for r in &self.recipes {
            out.extend(expand_recipe(r));
        }
        out
    }
}

/// `k` distinct rationals `n/d` with `|n| <= range` and `d` in `1..=3`.
pub fn random_points(rng: &mut ChaCha8Rng, k: usize, range: i64) -> Vec<Rat> {
    let mut pool: Vec<Rat> = Vec::new();
    for d in 1..=3i64 {
        for n in -range..=range {
            let r = Rat::new(Int::from(n), Int::from(d));
            if !pool.contains(&r) {
                pool.push(r);
            }
        }
    }
    pool.shuffle(rng);
    pool.truncate(k);
    pool
}

pub fn expand_recipe(r: &Recipe) -> Vec<InstanceSpec> {
    match r {
        Recipe::Tp22 { count, seed } => (0..*count as u64)
            .map(|i| {
                let s = seed.wrapping_add(i);
                let mut spec = InstanceSpec::new(Family::TotalPositivity, 2, 2);
                spec.name = Some(format!("tp22-{}", s));
                spec.data = vec!["J1^4".into()];
                spec.flags = vec![FlagSpec::Tp { seed: 2 * s, factors: None }, FlagSpec::Tp { seed: 2 * s + 1, factors: None }];
                spec
            })
            .collect(),
        Recipe::Osculating { m, p, count, seed, range } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count)
                .map(|i| {
                    let mut pts = random_points(&mut rng, m * p, (*range).max(1));
                    // keep the generator state independent of the shuffle length
                    let _: u32 = rng.gen();
                    pts.sort();
                    let mut spec = InstanceSpec::new(Family::Hypersurface, *m, *p);
                    spec.name = Some(format!("osc-m{}p{}-{}", m, p, i));
                    spec.points = pts.iter().map(rat_text).collect();
                    spec.seed = Some(*seed);
                    spec
                })
                .collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub index: usize,
    pub name: String,
    pub report: Option<VerificationReport>,
    pub error: Option<String>,
}

impl SuiteRow {
    pub fn verdict(&self) -> Verdict {
        self.report.as_ref().map(|r| r.verdict).unwrap_or(Verdict::Internal)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub rows: usize,
    pub all_real: usize,
    pub not_all_real: usize,
    pub degenerate: usize,
    pub budget: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteTable {
    pub rows: Vec<SuiteRow>,
    pub summary: SuiteSummary,
}

/// Run every row, in parallel; rows keep their index order and fail independently.
pub fn run_suite(config: &SuiteConfig) -> SuiteTable {
    let specs = config.expand();
    let rows: Vec<SuiteRow> = specs
        .par_iter()
        .enumerate()
        .map(|(index, spec)| match verify_instance(spec) {
            Ok(r) => SuiteRow { index, name: spec.label(), report: Some(r), error: None },
            Err(e) => SuiteRow { index, name: spec.label(), report: None, error: Some(e.to_string()) },
        })
        .collect();
    let mut summary = SuiteSummary { rows: rows.len(), ..Default::default() };
    for r in &rows {
        if r.report.is_none() {
            summary.errors += 1;
            continue;
        }
        match r.verdict() {
            Verdict::AllReal => summary.all_real += 1,
            Verdict::NotAllReal => summary.not_all_real += 1,
            Verdict::Degenerate => summary.degenerate += 1,
            Verdict::Budget => summary.budget += 1,
            Verdict::Internal => summary.errors += 1,
        }
    }
    SuiteTable { rows, summary }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    name: &'a str,
    verdict: &'a str,
    expected: String,
    dimension: String,
    variable: String,
    degree: String,
    real: String,
    multiplicity_free: String,
    ms: String,
    error: String,
}

impl SuiteTable {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let show = |v: &Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for row in &self.rows {
            let r = row.report.as_ref();
            let rec = CsvRow {
                index: row.index,
                name: &row.name,
                verdict: if r.is_some() { row.verdict().label() } else { "ERROR" },
                expected: r.and_then(|r| r.expected.value.clone()).unwrap_or_default(),
                dimension: r.map(|r| show(&r.quotient_dimension)).unwrap_or_default(),
                variable: r.and_then(|r| r.eliminant_variable.clone()).unwrap_or_default(),
                degree: r.map(|r| show(&r.eliminant_degree)).unwrap_or_default(),
                real: r.map(|r| show(&r.real_roots)).unwrap_or_default(),
                multiplicity_free: r.and_then(|r| r.multiplicity_free).map(|b| b.to_string()).unwrap_or_default(),
                ms: r.and_then(|r| r.timings.as_ref()).map(|t| t.total_ms.to_string()).unwrap_or_default(),
                error: row.error.clone().or_else(|| r.and_then(|r| r.error.clone())).unwrap_or_default(),
            };
            w.serialize(rec).map_err(|e| Error::Internal(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_default()
    }

    /// Worst verdict over all rows, as a process exit status.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            return 3;
        }
        self.rows.iter().map(|r| r.verdict().exit_code()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config() {
        let t = run_suite(&SuiteConfig::default());
        assert!(t.rows.is_empty());
        assert_eq!(t.summary, SuiteSummary::default());
        assert_eq!(t.exit_code(), 0);
    }

    #[test]
    fn recipes_are_deterministic() {
        let r = Recipe::Osculating { m: 2, p: 2, count: 3, seed: 9, range: 30 };
        assert_eq!(expand_recipe(&r), expand_recipe(&r));
        let cfg = SuiteConfig::from_text("[[recipes]]\nkind = \"tp22\"\ncount = 2\nseed = 5\n").unwrap();
        let t = run_suite(&cfg);
        assert_eq!(t.summary.all_real, 2);
        assert!(t.to_csv().unwrap().lines().count() == 3);
    }
}
