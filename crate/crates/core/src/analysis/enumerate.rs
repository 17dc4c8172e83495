use rayon::prelude::*;

use crate::dynamics::conditions::{add_holds, delete_holds, PairWeights};
use crate::error::{Error, Result};
use crate::model::{lex_pairs, pair_count, Network, NetworkKey, Params, SocialRangeMatrix};

/// Largest agent count [`enumerate_stable`] accepts (2^28 labeled graphs).
pub const MAX_ENUMERATION_AGENTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableNetwork {
    pub key: NetworkKey,
    pub network: Network,
}

impl StableNetwork {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.network.edges()
    }
}

/// Every bilaterally stable labeled network for one `(F, params)`, sorted by
/// canonical key.
#[derive(Clone, Debug)]
pub struct StableSetReport {
    pub n_agents: usize,
    pub params: Params,
    pub matrix: SocialRangeMatrix,
    pub stable_networks: Vec<StableNetwork>,
    pub total_examined: u64,
}

impl StableSetReport {
    pub fn count(&self) -> usize {
        self.stable_networks.len()
    }

    pub fn contains(&self, net: &Network) -> bool {
        net.n_agents() == self.n_agents
            && self
                .stable_networks
                .binary_search_by(|s| s.key.cmp(&net.canonical_key()))
                .is_ok()
    }

    pub fn networks(&self) -> impl Iterator<Item = &Network> {
        self.stable_networks.iter().map(|s| &s.network)
    }
}

/// Move decisions for one pair at every reachable degree combination.
struct PairTable {
    i: usize,
    j: usize,
    add: [[bool; MAX_ENUMERATION_AGENTS]; MAX_ENUMERATION_AGENTS],
    delete: [[bool; MAX_ENUMERATION_AGENTS]; MAX_ENUMERATION_AGENTS],
}

fn pair_tables(n: usize, matrix: &SocialRangeMatrix, params: &Params) -> Vec<PairTable> {
    lex_pairs(n)
        .map(|(i, j)| {
            let w = PairWeights::of(matrix, i, j);
            let mut table = PairTable {
                i,
                j,
                add: Default::default(),
                delete: Default::default(),
            };
            for ni in 0..n {
                for nj in 0..n {
                    table.add[ni][nj] = add_holds(w, params, ni, nj);
                    table.delete[ni][nj] = ni > 0 && nj > 0 && delete_holds(w, params, ni, nj);
                }
            }
            table
        })
        .collect()
}

fn mask_is_stable(mask: u64, n: usize, tables: &[PairTable]) -> bool {
    let mut degree = [0usize; MAX_ENUMERATION_AGENTS];
    for (k, t) in tables.iter().enumerate() {
        if mask >> k & 1 == 1 {
            degree[t.i] += 1;
            degree[t.j] += 1;
        }
    }
    debug_assert!(degree[..n].iter().all(|&d| d < n));
    tables.iter().enumerate().all(|(k, t)| {
        let (ni, nj) = (degree[t.i], degree[t.j]);
        if mask >> k & 1 == 1 {
            !t.delete[ni][nj]
        } else {
            !t.add[ni][nj]
        }
    })
}

/// Tests every labeled graph on `n` agents for bilateral stability.
pub fn enumerate_stable(
    n: usize,
    matrix: &SocialRangeMatrix,
    params: &Params,
) -> Result<StableSetReport> {
    if n > MAX_ENUMERATION_AGENTS {
        return Err(Error::Capacity {
            n,
            max: MAX_ENUMERATION_AGENTS,
        });
    }
    if n != matrix.n_agents() {
        return Err(Error::DimensionMismatch {
            network: n,
            matrix: matrix.n_agents(),
        });
    }
    let tables = pair_tables(n, matrix, params);
    let total = 1u64 << pair_count(n);
    let mut masks: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&mask| mask_is_stable(mask, n, &tables))
        .collect();
    masks.sort_unstable();
    let stable_networks = masks
        .into_iter()
        .map(|mask| {
            let network = Network::from_pair_mask(n, mask)?;
            Ok(StableNetwork {
                key: network.canonical_key(),
                network,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StableSetReport {
        n_agents: n,
        params: *params,
        matrix: matrix.clone(),
        stable_networks,
        total_examined: total,
    })
}
