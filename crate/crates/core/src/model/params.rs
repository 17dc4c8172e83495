use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Link cost `c`, backup benefit `β` and disk failure probability `λ`,
/// each strictly inside `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Params {
    c: f64,
    beta: f64,
    lambda: f64,
}

fn open_unit(field: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value < 1.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParam {
            field,
            reason: format!("{value} is not in the open interval (0, 1)"),
        })
    }
}

impl Params {
    pub fn new(c: f64, beta: f64, lambda: f64) -> Result<Self> {
        Ok(Params {
            c: open_unit("c", c)?,
            beta: open_unit("beta", beta)?,
            lambda: open_unit("lambda", lambda)?,
        })
    }

    /// Parameters with `c = ratio · beta_anchor`.
    pub fn from_ratio(ratio: f64, beta_anchor: f64, lambda: f64) -> Result<Self> {
        Params::new(ratio * beta_anchor, beta_anchor, lambda)
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `c / β`, the only combination of cost and benefit that move
    /// decisions depend on.
    pub fn ratio(&self) -> f64 {
        self.c / self.beta
    }

    /// `c / ((1 - λ)·β)`, the right-hand-side factor of the link conditions.
    pub fn cost_benefit_factor(&self) -> f64 {
        self.c / ((1.0 - self.lambda) * self.beta)
    }

    pub fn lambda_pow(&self, n: usize) -> f64 {
        self.lambda.powi(n as i32)
    }

    /// `β(1 - λⁿ) - c·n`.
    pub fn utility_at(&self, degree: usize) -> f64 {
        self.beta * (1.0 - self.lambda_pow(degree)) - self.c * degree as f64
    }

    /// `β(1 - λ)λⁿ - c`, the utility change of going from degree `n` to `n + 1`.
    pub fn marginal_add(&self, n: usize) -> f64 {
        self.beta * (1.0 - self.lambda) * self.lambda_pow(n) - self.c
    }

    /// `c - β(1 - λ)λⁿ⁻¹`, the utility change of dropping one link from
    /// degree `n ≥ 1`.
    pub fn marginal_delete(&self, n: usize) -> f64 {
        debug_assert!(n >= 1);
        -self.marginal_add(n - 1)
    }
}
