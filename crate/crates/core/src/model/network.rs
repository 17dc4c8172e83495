use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest network the dense bitset representation supports.
pub const MAX_AGENTS: usize = 64;

const KEY_WORDS: usize = (MAX_AGENTS * (MAX_AGENTS - 1) / 2).div_ceil(64);

/// Index of an agent, `0..n_agents`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AgentId(pub usize);

impl From<usize> for AgentId {
    fn from(index: usize) -> Self {
        AgentId(index)
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected simple graph over at most 64 agents, one adjacency bitmask
/// per agent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Network {
    rows: Vec<u64>,
}

/// Upper triangle of the adjacency matrix packed as a bit string in
/// lexicographic pair order: bit `k` is the `k`-th pair of
/// `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
///
/// Keys are only comparable between networks with the same agent count.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NetworkKey([u64; KEY_WORDS]);

impl NetworkKey {
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    /// Hex rendering of the words needed for `n_agents` agents, most
    /// significant word first.
    pub fn to_hex(&self, n_agents: usize) -> String {
        let used = pair_count(n_agents).div_ceil(64).max(1);
        self.0[..used]
            .iter()
            .rev()
            .map(|w| format!("{w:016x}"))
            .collect()
    }
}

/// Number of unordered pairs among `n` agents.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All unordered pairs `(i, j)` with `i < j` in lexicographic order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

impl Network {
    pub fn empty(n_agents: usize) -> Result<Self> {
        if n_agents == 0 || n_agents > MAX_AGENTS {
            return Err(Error::NetworkSize(n_agents));
        }
        Ok(Network {
            rows: vec![0; n_agents],
        })
    }

    pub fn complete(n_agents: usize) -> Result<Self> {
        let mut net = Network::empty(n_agents)?;
        let all = if n_agents == 64 {
            u64::MAX
        } else {
            (1u64 << n_agents) - 1
        };
        for (i, row) in net.rows.iter_mut().enumerate() {
            *row = all & !(1u64 << i);
        }
        Ok(net)
    }

    pub fn from_edges(n_agents: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut net = Network::empty(n_agents)?;
        for &(i, j) in edges {
            net.check_pair(AgentId(i), AgentId(j))?;
            net.set(i, j, true);
        }
        Ok(net)
    }

    /// Builds the network whose edges are the set bits of `mask`, bit `k`
    /// standing for the `k`-th pair in lexicographic order.
    pub fn from_pair_mask(n_agents: usize, mask: u64) -> Result<Self> {
        let mut net = Network::empty(n_agents)?;
        if pair_count(n_agents) < 64 && mask >> pair_count(n_agents) != 0 {
            return Err(Error::Precondition(format!(
                "pair mask {mask:#x} has bits beyond the {} pairs of {n_agents} agents",
                pair_count(n_agents)
            )));
        }
        for (k, (i, j)) in lex_pairs(n_agents).take(64).enumerate() {
            if mask >> k & 1 == 1 {
                net.set(i, j, true);
            }
        }
        Ok(net)
    }

    pub fn n_agents(&self) -> usize {
        self.rows.len()
    }

    pub fn check_agent(&self, i: AgentId) -> Result<()> {
        if i.0 >= self.n_agents() {
            return Err(Error::AgentOutOfRange {
                index: i.0,
                n_agents: self.n_agents(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: AgentId, j: AgentId) -> Result<()> {
        self.check_agent(i)?;
        self.check_agent(j)?;
        if i == j {
            return Err(Error::Precondition(format!("self-loop on agent {i}")));
        }
        Ok(())
    }

    pub fn degree(&self, i: AgentId) -> Result<usize> {
        self.check_agent(i)?;
        Ok(self.degree_of(i.0))
    }

    pub(crate) fn degree_of(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n_agents()).map(|i| self.degree_of(i)).collect()
    }

    pub fn has_edge(&self, i: AgentId, j: AgentId) -> Result<bool> {
        self.check_pair(i, j)?;
        Ok(self.linked(i.0, j.0))
    }

    pub(crate) fn linked(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Adds `⟨ij⟩`; fails if the link already exists.
    pub fn add_edge(&mut self, i: AgentId, j: AgentId) -> Result<()> {
        if self.has_edge(i, j)? {
            return Err(Error::Precondition(format!("link {i}-{j} already present")));
        }
        self.set(i.0, j.0, true);
        Ok(())
    }

    /// Removes `⟨ij⟩`; fails if the link is absent.
    pub fn remove_edge(&mut self, i: AgentId, j: AgentId) -> Result<()> {
        if !self.has_edge(i, j)? {
            return Err(Error::Precondition(format!("link {i}-{j} absent")));
        }
        self.set(i.0, j.0, false);
        Ok(())
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, present: bool) {
        if present {
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
        } else {
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        lex_pairs(self.n_agents())
            .filter(|&(i, j)| self.linked(i, j))
            .collect()
    }

    pub fn canonical_key(&self) -> NetworkKey {
        let mut words = [0u64; KEY_WORDS];
        for (k, (i, j)) in lex_pairs(self.n_agents()).enumerate() {
            if self.linked(i, j) {
                words[k / 64] |= 1 << (k % 64);
            }
        }
        NetworkKey(words)
    }
}

impl fmt::Debug for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Network")
            .field("n_agents", &self.n_agents())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Free-function form of [`Network::canonical_key`].
pub fn canonical_key(net: &Network) -> NetworkKey {
    net.canonical_key()
}
