//! Regime predicates and checkers for the uniqueness results, the addition
//! sufficiency bound, and the case-study observations.

use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_stable, StableSetReport};
use super::sweep::SweepReport;
use crate::dynamics::conditions::{add_holds, PairWeights};
use crate::error::{Error, Result};
use crate::model::{AgentId, Network, Params, SocialRangeMatrix};

/// Bounds of the no-stable-network ratio window observed for the case-study
/// matrix at `λ = 0.2`.
pub const REPORTED_WINDOW: (f64, f64) = (0.044, 0.089);
/// Allowed distance of a swept window edge from [`REPORTED_WINDOW`].
pub const WINDOW_TOLERANCE: f64 = 0.005;

/// `|ln(c/((1-λ)β))| / |ln λ|`: any friend pair whose larger degree is below
/// this value agrees to link.
///
/// Only defined for `c < (1-λ)β`; above that no degree satisfies the
/// underlying inequality even though the absolute values keep the formula
/// positive.
pub fn theorem1_threshold(params: &Params) -> Result<f64> {
    let q = params.cost_benefit_factor();
    if q >= 1.0 {
        return Err(Error::Regime(format!(
            "addition bound needs c < (1-λ)β; c/((1-λ)β) = {q}"
        )));
    }
    Ok(q.ln().abs() / params.lambda().ln().abs())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TheoremBound {
    pub t1: usize,
    pub t2: usize,
    pub threshold: f64,
}

impl TheoremBound {
    pub fn new(params: &Params, ni: usize, nj: usize) -> Result<Self> {
        Ok(TheoremBound {
            t1: ni.max(nj),
            t2: ni.min(nj),
            threshold: theorem1_threshold(params)?,
        })
    }

    pub fn hypothesis_holds(&self) -> bool {
        (self.t1 as f64) < self.threshold
    }
}

/// Evaluates "larger degree below the threshold ⇒ both agree to add" for the
/// friend pair `(i, j)` at degrees `(ni, nj)`. Returns `true` whenever the
/// implication holds, including vacuously.
pub fn check_theorem1(
    params: &Params,
    matrix: &SocialRangeMatrix,
    i: AgentId,
    j: AgentId,
    ni: usize,
    nj: usize,
) -> Result<bool> {
    let n = matrix.n_agents();
    for a in [i, j] {
        if a.0 >= n {
            return Err(Error::AgentOutOfRange {
                index: a.0,
                n_agents: n,
            });
        }
    }
    if i == j {
        return Err(Error::Precondition(format!("agent {i} paired with itself")));
    }
    let f = matrix.get(i.0, j.0);
    if f <= 0.0 {
        return Err(Error::Regime(format!(
            "f[{i}][{j}] = {f} is not a friend weight"
        )));
    }
    let bound = TheoremBound::new(params, ni, nj)?;
    Ok(!bound.hypothesis_holds() || add_holds(PairWeights::of(matrix, i.0, j.0), params, ni, nj))
}

/// `c/β < (1-λ)λ^(n-2)`: all-friends networks of `n` agents settle on the
/// complete network.
pub fn lemma1_applies(params: &Params, n: usize) -> bool {
    params.ratio() < (1.0 - params.lambda()) * params.lambda().powi(n as i32 - 2)
}

/// `c/β > 1-λ`: all-friends networks settle on the empty network.
pub fn lemma2_applies(params: &Params) -> bool {
    params.ratio() > 1.0 - params.lambda()
}

/// `c/β > (1-λ)/(1-fᵢᵢ)`: with `±1` relations only the enemy pairs link.
pub fn corollary1_applies(params: &Params, self_weight: f64) -> Result<bool> {
    if !(self_weight > 0.0 && self_weight < 1.0) {
        return Err(Error::Regime(format!(
            "self weight {self_weight} outside (0, 1) leaves the bound undefined"
        )));
    }
    Ok(params.ratio() > (1.0 - params.lambda()) / (1.0 - self_weight))
}

/// The network a uniqueness regime predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedKind {
    Complete,
    Empty,
    EnemyPairs,
}

pub fn expected_network(
    kind: ExpectedKind,
    n: usize,
    matrix: Option<&SocialRangeMatrix>,
) -> Result<Network> {
    match kind {
        ExpectedKind::Complete => Network::complete(n),
        ExpectedKind::Empty => Network::empty(n),
        ExpectedKind::EnemyPairs => {
            let m = matrix.ok_or_else(|| {
                Error::Precondition("the enemy-pairs network needs a social range matrix".into())
            })?;
            if m.n_agents() != n {
                return Err(Error::DimensionMismatch {
                    network: n,
                    matrix: m.n_agents(),
                });
            }
            let edges: Vec<_> = crate::model::lex_pairs(n)
                .filter(|&(i, j)| m.get(i, j) < 0.0)
                .collect();
            Network::from_edges(n, &edges)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// The predicted network is the only stable one.
    Confirmed,
    /// The predicted network is stable but not alone.
    MembershipOnly,
    /// The predicted network is not stable.
    Refuted,
}

#[derive(Clone, Debug)]
pub struct RegimeCheck {
    pub kind: ExpectedKind,
    pub outcome: Outcome,
    pub expected: Network,
    pub stable_set: StableSetReport,
}

fn off_diagonal_all(matrix: &SocialRangeMatrix, ok: impl Fn(f64) -> bool) -> bool {
    crate::model::lex_pairs(matrix.n_agents()).all(|(i, j)| ok(matrix.get(i, j)))
}

fn regime_preconditions(
    kind: ExpectedKind,
    n: usize,
    matrix: &SocialRangeMatrix,
    params: &Params,
) -> Result<()> {
    let all_friends = || off_diagonal_all(matrix, |f| f == 1.0);
    match kind {
        ExpectedKind::Complete => {
            if !all_friends() {
                return Err(Error::Precondition(
                    "complete-network regime needs fᵢⱼ = 1 for all pairs".into(),
                ));
            }
            if !lemma1_applies(params, n) {
                return Err(Error::Precondition(format!(
                    "c/β = {} is not below (1-λ)λ^(N-2) = {}",
                    params.ratio(),
                    (1.0 - params.lambda()) * params.lambda().powi(n as i32 - 2)
                )));
            }
        }
        ExpectedKind::Empty => {
            if !all_friends() {
                return Err(Error::Precondition(
                    "empty-network regime needs fᵢⱼ = 1 for all pairs".into(),
                ));
            }
            if !lemma2_applies(params) {
                return Err(Error::Precondition(format!(
                    "c/β = {} is not above 1-λ = {}",
                    params.ratio(),
                    1.0 - params.lambda()
                )));
            }
        }
        ExpectedKind::EnemyPairs => {
            if !off_diagonal_all(matrix, |f| f == 1.0 || f == -1.0) {
                return Err(Error::Precondition(
                    "enemy-pairs regime needs fᵢⱼ ∈ {-1, 1} for all pairs".into(),
                ));
            }
            for i in 0..n {
                if !corollary1_applies(params, matrix.get(i, i))? {
                    return Err(Error::Precondition(format!(
                        "c/β = {} is not above (1-λ)/(1-f[{i}][{i}]) = {}",
                        params.ratio(),
                        (1.0 - params.lambda()) / (1.0 - matrix.get(i, i))
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Enumerates the stable set and compares it with the network the regime
/// predicts. Fails if the regime's hypotheses do not hold for the input.
pub fn verify_regime_claim(
    kind: ExpectedKind,
    n: usize,
    matrix: &SocialRangeMatrix,
    params: &Params,
) -> Result<RegimeCheck> {
    if n != matrix.n_agents() {
        return Err(Error::DimensionMismatch {
            network: n,
            matrix: matrix.n_agents(),
        });
    }
    regime_preconditions(kind, n, matrix, params)?;
    let expected = expected_network(kind, n, Some(matrix))?;
    let stable_set = enumerate_stable(n, matrix, params)?;
    let outcome = match (stable_set.contains(&expected), stable_set.count()) {
        (true, 1) => Outcome::Confirmed,
        (true, _) => Outcome::MembershipOnly,
        (false, _) => Outcome::Refuted,
    };
    Ok(RegimeCheck {
        kind,
        outcome,
        expected,
        stable_set,
    })
}

/// Whether more than one bilaterally stable network exists.
pub fn verify_nonuniqueness(
    matrix: &SocialRangeMatrix,
    params: &Params,
) -> Result<(bool, StableSetReport)> {
    let report = enumerate_stable(matrix.n_agents(), matrix, params)?;
    Ok((report.count() >= 2, report))
}

#[derive(Clone, Debug, PartialEq)]
pub struct WindowCheck {
    /// First and last grid ratios without a stable network.
    pub window: Option<(f64, f64)>,
    pub contiguous: bool,
    /// Every grid ratio outside the window has a stable network.
    pub stable_outside: bool,
    pub within_tolerance: bool,
}

impl WindowCheck {
    pub fn confirmed(&self) -> bool {
        self.window.is_some() && self.contiguous && self.stable_outside && self.within_tolerance
    }
}

/// Compares a sweep's zero-count window against [`REPORTED_WINDOW`].
pub fn check_window(sweep: &SweepReport) -> WindowCheck {
    let runs = sweep.zero_runs();
    let window = sweep.zero_window();
    let stable_outside = match window {
        Some((lo, hi)) => sweep
            .points
            .iter()
            .filter(|p| p.ratio < lo || p.ratio > hi)
            .all(|p| p.stable_count >= 1),
        None => true,
    };
    let within_tolerance = window.is_some_and(|(lo, hi)| {
        (lo - REPORTED_WINDOW.0).abs() <= WINDOW_TOLERANCE
            && (hi - REPORTED_WINDOW.1).abs() <= WINDOW_TOLERANCE
    });
    WindowCheck {
        window,
        contiguous: runs.len() == 1,
        stable_outside,
        within_tolerance,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Theorem1Sweep {
    pub checked: usize,
    /// Instances whose hypothesis held, so the conclusion was exercised.
    pub non_vacuous: usize,
    pub failures: usize,
}

/// Runs [`check_theorem1`] on every friend pair of `matrix` at every degree
/// combination possible in an `n`-agent network.
pub fn check_theorem1_exhaustive(
    params: &Params,
    matrix: &SocialRangeMatrix,
) -> Result<Theorem1Sweep> {
    let threshold = theorem1_threshold(params)?;
    let n = matrix.n_agents();
    let mut sweep = Theorem1Sweep::default();
    for (i, j) in crate::model::lex_pairs(n).filter(|&(i, j)| matrix.get(i, j) > 0.0) {
        for ni in 0..n {
            for nj in 0..n {
                sweep.checked += 1;
                if ((ni.max(nj)) as f64) < threshold {
                    sweep.non_vacuous += 1;
                }
                if !check_theorem1(params, matrix, AgentId(i), AgentId(j), ni, nj)? {
                    sweep.failures += 1;
                }
            }
        }
    }
    Ok(sweep)
}
