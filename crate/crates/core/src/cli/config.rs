//! JSON run configuration.
//!
//! ```json
//! {
//!   "n": 5,
//!   "c": 0.01, "beta": 0.1, "lambda": 0.2,
//!   "social_matrix": [[0.1, 1, -1, 1, -1], ...],
//!   "start": "empty",
//!   "pair_order": "lex",
//!   "max_passes": 10000
//! }
//! ```
//!
//! `start` is `"empty"`, `"complete"`, `{"edges": [[0, 1], ...]}` or
//! `{"random": {"p_edge": 0.5, "seed": 7}}`; `pair_order` is `"lex"` or
//! `{"shuffled": {"seed": 3}}`. `start`, `pair_order`, `max_passes` and
//! `strict_dominance` are optional.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::{PairOrderPolicy, DEFAULT_MAX_PASSES};
use crate::model::{lex_pairs, Network, Params, SocialRangeMatrix, MAX_AGENTS};
use crate::Error as ModelError;

#[derive(Debug, Error, PartialEq)]
#[error("config field `{field}`: {message}")]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError {
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartSpec {
    Empty,
    Complete,
    Edges(Vec<(usize, usize)>),
    Random { p_edge: f64, seed: u64 },
}

impl StartSpec {
    /// Builds the start network. Random starts include each pair
    /// independently with probability `p_edge`, drawn in lexicographic pair
    /// order.
    pub fn build(&self, n: usize) -> crate::Result<Network> {
        match self {
            StartSpec::Empty => Network::empty(n),
            StartSpec::Complete => Network::complete(n),
            StartSpec::Edges(edges) => Network::from_edges(n, edges),
            StartSpec::Random { p_edge, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut net = Network::empty(n)?;
                for (i, j) in lex_pairs(n) {
                    if rng.gen_bool(*p_edge) {
                        net.set(i, j, true);
                    }
                }
                Ok(net)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum OrderSpec {
    Lex,
    Shuffled { seed: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    n: usize,
    c: f64,
    beta: f64,
    lambda: f64,
    social_matrix: Vec<Vec<f64>>,
    #[serde(default = "default_start")]
    start: StartSpec,
    #[serde(default = "default_order")]
    pair_order: OrderSpec,
    #[serde(default = "default_max_passes")]
    max_passes: usize,
    #[serde(default)]
    strict_dominance: bool,
}

fn default_start() -> StartSpec {
    StartSpec::Empty
}

fn default_order() -> OrderSpec {
    OrderSpec::Lex
}

fn default_max_passes() -> usize {
    DEFAULT_MAX_PASSES
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub params: Params,
    pub matrix: SocialRangeMatrix,
    pub start: StartSpec,
    pub pair_order: PairOrderPolicy,
    pub max_passes: usize,
}

impl RunConfig {
    /// Replaces the seeds of a random start and a shuffled pair order.
    pub fn with_seed(mut self, seed: u64) -> Self {
        if let StartSpec::Random { seed: s, .. } = &mut self.start {
            *s = seed;
        }
        if let PairOrderPolicy::Shuffled { seed: s } = &mut self.pair_order {
            *s = seed;
        }
        self
    }

    pub fn start_network(&self) -> crate::Result<Network> {
        self.start.build(self.n)
    }
}

/// Parses and validates a JSON configuration.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        ConfigError::new(
            if path == "." { "<root>".into() } else { path },
            e.inner().to_string(),
        )
    })?;

    if raw.n == 0 || raw.n > MAX_AGENTS {
        return Err(ConfigError::new(
            "n",
            format!("{} is outside 1..={MAX_AGENTS}", raw.n),
        ));
    }
    let params = Params::new(raw.c, raw.beta, raw.lambda).map_err(|e| match e {
        ModelError::InvalidParam { field, reason } => ConfigError::new(field, reason),
        other => ConfigError::new("<params>", other.to_string()),
    })?;
    if raw.social_matrix.len() != raw.n {
        return Err(ConfigError::new(
            "social_matrix",
            format!("{} rows for n = {}", raw.social_matrix.len(), raw.n),
        ));
    }
    let matrix = if raw.strict_dominance {
        SocialRangeMatrix::from_rows_strict(raw.social_matrix)
    } else {
        SocialRangeMatrix::from_rows(raw.social_matrix)
    }
    .map_err(|e| ConfigError::new("social_matrix", e.to_string()))?;

    match &raw.start {
        StartSpec::Edges(edges) => {
            for (k, &(i, j)) in edges.iter().enumerate() {
                if i >= raw.n || j >= raw.n || i == j {
                    return Err(ConfigError::new(
                        format!("start.edges[{k}]"),
                        format!(
                            "({i}, {j}) is not a pair of distinct agents below {}",
                            raw.n
                        ),
                    ));
                }
            }
        }
        StartSpec::Random { p_edge, .. } => {
            if !(0.0..=1.0).contains(p_edge) {
                return Err(ConfigError::new(
                    "start.random.p_edge",
                    format!("{p_edge} is not a probability"),
                ));
            }
        }
        StartSpec::Empty | StartSpec::Complete => {}
    }
    if raw.max_passes == 0 {
        return Err(ConfigError::new("max_passes", "must be at least 1"));
    }

    Ok(RunConfig {
        n: raw.n,
        params,
        matrix,
        start: raw.start,
        pair_order: match raw.pair_order {
            OrderSpec::Lex => PairOrderPolicy::Lexicographic,
            OrderSpec::Shuffled { seed } => PairOrderPolicy::Shuffled { seed },
        },
        max_passes: raw.max_passes,
    })
}
