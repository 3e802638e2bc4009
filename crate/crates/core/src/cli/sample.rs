//! Seeded random and exhaustive game suites that cross-check the cover test
//! against indifference feasibility and, for 3×3 games, the classifier
//! against the equilibrium oracle.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::matrix_json;
use crate::classify::{classify, non_generic_columns, Classification, RejectReason};
use crate::indifference::{difference_matrix, half_space_cover, solve_indifference};
use crate::model::{int, rat, GameMatrix, Rational};
use crate::oracle::{self, ENUMERATION_CAP};

/// Largest size the exhaustive suite enumerates: `3^(n·n)` games.
pub const EXHAUSTIVE_CAP: usize = 3;
const EXAMPLES_KEPT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerConfig {
    pub n: usize,
    pub count: u64,
    pub seed: u64,
    pub denominator: u64,
    /// Every `n × n` matrix with entries in `{0, 1, 2}` instead of `count`
    /// random ones.
    pub exhaustive: bool,
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.count < 1 {
            return Err("count must be at least 1".into());
        }
        if self.denominator < 1 {
            return Err("denominator must be at least 1".into());
        }
        if self.n < 2 || self.n > ENUMERATION_CAP {
            return Err(format!("n must be between 2 and {ENUMERATION_CAP}"));
        }
        if self.exhaustive && self.n > EXHAUSTIVE_CAP {
            return Err(format!("exhaustive suites need n <= {EXHAUSTIVE_CAP}"));
        }
        Ok(())
    }

    fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "count": self.count,
            "seed": self.seed,
            "denominator": self.denominator,
            "exhaustive": self.exhaustive,
        })
    }
}

/// Entries `p/q` with `q` uniform in `1..=denominator` and `p` uniform in
/// `-q..=q`.
pub fn random_game(rng: &mut ChaCha8Rng, n: usize, denominator: u64) -> GameMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let q = rng.gen_range(1..=denominator) as i64;
                    let p = rng.gen_range(-q..=q);
                    rat(p, q)
                })
                .collect()
        })
        .collect();
    GameMatrix::symmetric(rows).expect("square")
}

fn exhaustive_games(n: usize) -> impl Iterator<Item = GameMatrix> {
    let cells = n * n;
    (0..3u64.pow(cells as u32)).map(move |mut code| {
        let mut entries: Vec<Rational> = Vec::with_capacity(cells);
        for _ in 0..cells {
            entries.push(int((code % 3) as i64));
            code /= 3;
        }
        let rows = entries.chunks(n).map(<[Rational]>::to_vec).collect();
        GameMatrix::symmetric(rows).expect("square")
    })
}

#[derive(Default)]
struct Tally {
    games: u64,
    classes: BTreeMap<String, u64>,
    rejected: BTreeMap<String, u64>,
    non_generic: u64,
    degenerate: u64,
    cover_mismatches: u64,
    classifier_mismatches: u64,
    corollary_mismatches: u64,
    examples: Vec<Value>,
}

impl Tally {
    fn mismatch(&mut self, kind: &str, a: &GameMatrix) {
        if self.examples.len() < EXAMPLES_KEPT {
            self.examples
                .push(json!({ "kind": kind, "game": matrix_json(a) }));
        }
    }

    fn record(&mut self, a: &GameMatrix) {
        self.games += 1;
        let cover = half_space_cover(&difference_matrix(a).expect("n >= 2"));
        if cover.covered != solve_indifference(a).is_indifferent() {
            self.cover_mismatches += 1;
            self.mismatch("cover", a);
        }

        let eq = oracle::symmetric_equilibria(a).expect("within cap");
        if eq.completely_mixed().next().is_some() && !cover.covered {
            self.corollary_mismatches += 1;
            self.mismatch("necessary_condition", a);
        }

        if a.rows() != 3 {
            return;
        }
        if !non_generic_columns(a).is_empty() {
            self.non_generic += 1;
            return;
        }
        let report = classify(a).expect("generic symmetric 3x3");
        match &report.outcome {
            Classification::Classified { class, .. } => {
                *self.classes.entry(class.to_string()).or_default() += 1;
            }
            Classification::Rejected(reason) => {
                *self.rejected.entry(reason_name(reason).into()).or_default() += 1;
            }
        }
        if eq.degenerate {
            self.degenerate += 1;
            return;
        }
        if report.class().is_some() != eq.unique_completely_mixed() {
            self.classifier_mismatches += 1;
            self.mismatch("classifier", a);
        }
    }

    fn mismatches(&self) -> u64 {
        self.cover_mismatches + self.classifier_mismatches + self.corollary_mismatches
    }
}

fn reason_name(r: &RejectReason) -> &'static str {
    match r {
        RejectReason::NonGeneric { .. } => "non_generic",
        RejectReason::PureSymmetricEquilibrium { .. } => "pure_symmetric_equilibrium",
        RejectReason::DominatedStrategy(_) => "dominated_strategy",
        RejectReason::ConditionViolated { .. } => "condition_violated",
        RejectReason::NoClassPattern => "no_class_pattern",
    }
}

pub struct SampleSummary {
    pub result: Value,
    pub mismatches: u64,
}

/// Runs the suite. The config must already be validated.
pub fn run(config: &SamplerConfig) -> SampleSummary {
    let mut tally = Tally::default();
    if config.exhaustive {
        for a in exhaustive_games(config.n) {
            tally.record(&a);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.count {
            let a = random_game(&mut rng, config.n, config.denominator);
            tally.record(&a);
        }
    }
    let result = json!({
        "config": config.to_json(),
        "games": tally.games,
        "classified": tally.classes,
        "rejected": tally.rejected,
        "non_generic": tally.non_generic,
        "degenerate": tally.degenerate,
        "mismatches": {
            "cover_vs_feasibility": tally.cover_mismatches,
            "classifier_vs_oracle": tally.classifier_mismatches,
            "necessary_condition": tally.corollary_mismatches,
            "total": tally.mismatches(),
        },
        "mismatch_examples": tally.examples,
    });
    SampleSummary {
        result,
        mismatches: tally.mismatches(),
    }
}
