//! JSON reports emitted by the commands.

use serde::Serialize;

use crate::analysis::{Outcome, RegimeCheck, StableSetReport, Theorem1Sweep, WindowCheck};
use crate::dynamics::{DynamicsStatus, DynamicsTrace, MoveKind};
use crate::model::Params;

#[derive(Debug, Serialize)]
pub struct ParamsRecord {
    pub c: f64,
    pub beta: f64,
    pub lambda: f64,
    pub ratio: f64,
}

impl From<&Params> for ParamsRecord {
    fn from(p: &Params) -> Self {
        ParamsRecord {
            c: p.c(),
            beta: p.beta(),
            lambda: p.lambda(),
            ratio: p.ratio(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MoveRecord {
    pub pass: usize,
    pub kind: MoveKind,
    pub pair: (usize, usize),
    /// Canonical key of the network after the move, in hex.
    pub key: String,
}

#[derive(Debug, Serialize)]
pub struct CycleRecord {
    pub first_repeat_index: usize,
    pub period: usize,
}

#[derive(Debug, Serialize)]
pub struct SimulateReport {
    pub status: &'static str,
    pub passes: usize,
    pub moves: Vec<MoveRecord>,
    pub final_edges: Vec<(usize, usize)>,
    pub stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<CycleRecord>,
}

impl SimulateReport {
    pub fn from_trace(trace: &DynamicsTrace) -> Self {
        let n = trace.start.n_agents();
        let (status, cycle) = match trace.status {
            DynamicsStatus::Stable => ("stable", None),
            DynamicsStatus::Cycle {
                first_repeat_index,
                period,
            } => (
                "cycle",
                Some(CycleRecord {
                    first_repeat_index,
                    period,
                }),
            ),
            DynamicsStatus::IterationCap => ("iteration_cap", None),
        };
        SimulateReport {
            status,
            passes: trace.passes,
            moves: trace
                .moves
                .iter()
                .map(|s| MoveRecord {
                    pass: s.pass,
                    kind: s.mv.kind,
                    pair: (s.mv.pair.0 .0, s.mv.pair.1 .0),
                    key: s.key.to_hex(n),
                })
                .collect(),
            final_edges: trace.final_network.edges(),
            stable: trace.is_stable(),
            cycle,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct StableRecord {
    pub key: String,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct EnumerateReport {
    pub n_agents: usize,
    pub params: ParamsRecord,
    pub total_examined: u64,
    pub stable_count: usize,
    pub stable_networks: Vec<StableRecord>,
}

impl From<&StableSetReport> for EnumerateReport {
    fn from(r: &StableSetReport) -> Self {
        EnumerateReport {
            n_agents: r.n_agents,
            params: (&r.params).into(),
            total_examined: r.total_examined,
            stable_count: r.count(),
            stable_networks: r
                .stable_networks
                .iter()
                .map(|s| StableRecord {
                    key: s.key.to_hex(r.n_agents),
                    edges: s.edges(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
}

#[derive(Debug, Serialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum ClaimDetails {
    Theorem1 {
        threshold: f64,
        checked: usize,
        non_vacuous: usize,
        failures: usize,
    },
    Lemma1(RegimeRecord),
    Lemma2(RegimeRecord),
    Corollary1(RegimeRecord),
    Window {
        zero_window: Option<(f64, f64)>,
        zero_runs: Vec<(f64, f64)>,
        contiguous: bool,
        stable_outside: bool,
        within_tolerance: bool,
        reported: (f64, f64),
        tolerance: f64,
        /// Grid ratios where dynamics from the empty network do not settle.
        unsettled_runs: Vec<(f64, f64)>,
    },
    Nonuniqueness {
        stable_count: usize,
        stable_networks: Vec<StableRecord>,
    },
}

#[derive(Debug, Serialize)]
pub struct RegimeRecord {
    pub outcome: Outcome,
    pub expected_edges: Vec<(usize, usize)>,
    pub expected_is_stable: bool,
    pub unique: bool,
    pub stable_count: usize,
}

impl From<&RegimeCheck> for RegimeRecord {
    fn from(r: &RegimeCheck) -> Self {
        RegimeRecord {
            outcome: r.outcome,
            expected_edges: r.expected.edges(),
            expected_is_stable: r.outcome != Outcome::Refuted,
            unique: r.outcome == Outcome::Confirmed,
            stable_count: r.stable_set.count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub params: ParamsRecord,
    #[serde(flatten)]
    pub details: ClaimDetails,
}

pub(crate) fn theorem1_details(threshold: f64, s: &Theorem1Sweep) -> ClaimDetails {
    ClaimDetails::Theorem1 {
        threshold,
        checked: s.checked,
        non_vacuous: s.non_vacuous,
        failures: s.failures,
    }
}

pub(crate) fn window_details(
    check: &WindowCheck,
    zero_runs: Vec<(f64, f64)>,
    unsettled: Vec<(f64, f64)>,
) -> ClaimDetails {
    ClaimDetails::Window {
        zero_window: check.window,
        zero_runs,
        contiguous: check.contiguous,
        stable_outside: check.stable_outside,
        within_tolerance: check.within_tolerance,
        reported: crate::analysis::REPORTED_WINDOW,
        tolerance: crate::analysis::WINDOW_TOLERANCE,
        unsettled_runs: unsettled,
    }
}
