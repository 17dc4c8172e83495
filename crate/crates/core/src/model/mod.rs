//! Domain types of the backup-network formation game and the two utility
//! functions the rest of the crate is built on.
//!
//! An agent's raw utility depends only on its own degree `n`:
//! `u(n) = β(1 - λⁿ) - c·n`, the expected backup benefit minus the cost of
//! maintaining `n` partners. Each agent maximises its *perceived* utility
//! `ũᵢ = Σⱼ fᵢⱼ·uⱼ`, weighting every agent's raw utility (its own included)
//! by the social range matrix.

mod matrix;
mod network;
mod params;

pub use matrix::{Relation, SocialRangeMatrix};
pub use network::{canonical_key, lex_pairs, pair_count, AgentId, Network, NetworkKey, MAX_AGENTS};
pub use params::Params;

use crate::error::{Error, Result};

/// Raw utility of agent `i` in `net`.
pub fn utility(net: &Network, params: &Params, i: AgentId) -> Result<f64> {
    Ok(params.utility_at(net.degree(i)?))
}

/// Perceived utility `Σⱼ fᵢⱼ·uⱼ` of agent `i`, summed over every agent
/// including `i` itself.
pub fn perceived_utility(
    net: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
    i: AgentId,
) -> Result<f64> {
    check_dims(net, matrix)?;
    net.check_agent(i)?;
    Ok((0..net.n_agents())
        .map(|j| matrix.get(i.0, j) * params.utility_at(net.degree_of(j)))
        .sum())
}

/// Change in raw utility when an agent's degree rises from `n` to `n + 1`.
pub fn marginal_utility_add(params: &Params, n: usize) -> f64 {
    params.marginal_add(n)
}

pub(crate) fn check_dims(net: &Network, matrix: &SocialRangeMatrix) -> Result<()> {
    if net.n_agents() != matrix.n_agents() {
        return Err(Error::DimensionMismatch {
            network: net.n_agents(),
            matrix: matrix.n_agents(),
        });
    }
    Ok(())
}
