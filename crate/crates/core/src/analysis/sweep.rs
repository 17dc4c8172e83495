use rayon::prelude::*;

use super::enumerate::{enumerate_stable, StableNetwork};
use crate::dynamics::{run_dynamics, DynamicsStatus, PairOrderPolicy, DEFAULT_MAX_PASSES};
use crate::error::{Error, Result};
use crate::model::{Network, Params, SocialRangeMatrix};

pub const DEFAULT_BETA_ANCHOR: f64 = 0.1;

/// Evenly spaced `c/β` values from `start` to `end` inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioGrid {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl RatioGrid {
    pub fn new(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(start > 0.0 && start.is_finite()) {
            return Err(Error::InvalidParam {
                field: "grid_start",
                reason: format!("{start} must be positive"),
            });
        }
        if !(end >= start && end.is_finite()) {
            return Err(Error::InvalidParam {
                field: "grid_end",
                reason: format!("{end} is below grid start {start}"),
            });
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidParam {
                field: "grid_step",
                reason: format!("{step} must be positive"),
            });
        }
        Ok(RatioGrid { start, end, step })
    }

    /// Grid values, each rounded to 9 decimals so that e.g. `0.044` is the
    /// nearest double to 0.044 rather than an accumulated sum.
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|k| ((self.start + k as f64 * self.step) * 1e9).round() / 1e9)
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub ratio: f64,
    pub stable_count: usize,
    /// Stable network with the smallest canonical key, if any.
    pub example: Option<StableNetwork>,
    /// How the lexicographic dynamics end when started from the empty
    /// network.
    pub empty_start: DynamicsStatus,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub lambda: f64,
    pub beta_anchor: f64,
    pub matrix: SocialRangeMatrix,
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    /// Maximal runs of consecutive grid points with no stable network, as
    /// `(first ratio, last ratio)`.
    pub fn zero_runs(&self) -> Vec<(f64, f64)> {
        runs(&self.points, |p| p.stable_count == 0)
    }

    /// Maximal runs of grid points where the dynamics started from the
    /// empty network fail to settle.
    pub fn unsettled_runs(&self) -> Vec<(f64, f64)> {
        runs(&self.points, |p| p.empty_start != DynamicsStatus::Stable)
    }

    /// First and last grid ratios with zero stable networks.
    pub fn zero_window(&self) -> Option<(f64, f64)> {
        let mut zeros = self.points.iter().filter(|p| p.stable_count == 0);
        let first = zeros.next()?.ratio;
        Some((first, zeros.next_back().map_or(first, |p| p.ratio)))
    }
}

fn runs(points: &[SweepPoint], member: impl Fn(&SweepPoint) -> bool) -> Vec<(f64, f64)> {
    let mut runs = Vec::new();
    let mut current: Option<(f64, f64)> = None;
    for pt in points {
        if member(pt) {
            current = Some(match current {
                Some((lo, _)) => (lo, pt.ratio),
                None => (pt.ratio, pt.ratio),
            });
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    runs.extend(current);
    runs
}

/// Enumerates the stable set at each grid ratio with `c = ratio · beta_anchor`.
pub fn sweep_ratio(
    matrix: &SocialRangeMatrix,
    lambda: f64,
    grid: &RatioGrid,
    beta_anchor: f64,
) -> Result<SweepReport> {
    let params = grid
        .points()
        .into_iter()
        .map(|ratio| Params::from_ratio(ratio, beta_anchor, lambda).map(|p| (ratio, p)))
        .collect::<Result<Vec<_>>>()?;
    let points = params
        .par_iter()
        .map(|&(ratio, p)| {
            let report = enumerate_stable(matrix.n_agents(), matrix, &p)?;
            let empty = Network::empty(matrix.n_agents())?;
            let trace = run_dynamics(
                &empty,
                matrix,
                &p,
                PairOrderPolicy::Lexicographic,
                DEFAULT_MAX_PASSES,
            )?;
            Ok(SweepPoint {
                ratio,
                stable_count: report.count(),
                example: report.stable_networks.into_iter().next(),
                empty_start: trace.status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        lambda,
        beta_anchor,
        matrix: matrix.clone(),
        points,
    })
}
