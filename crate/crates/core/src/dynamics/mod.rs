//! Pairwise moves, bilateral stability and the pass-based formation
//! dynamics.

pub mod conditions;

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    check_dims, lex_pairs, AgentId, Network, NetworkKey, Params, SocialRangeMatrix,
};
use conditions::{add_holds, delete_holds, PairWeights};

pub const DEFAULT_MAX_PASSES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Add,
    Delete,
}

/// A link addition or deletion on the unordered pair `(i, j)`, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub pair: (AgentId, AgentId),
}

impl Move {
    pub fn new(kind: MoveKind, a: AgentId, b: AgentId) -> Self {
        let pair = if a <= b { (a, b) } else { (b, a) };
        Move { kind, pair }
    }

    pub fn apply(&self, net: &mut Network) -> Result<()> {
        let (i, j) = self.pair;
        match self.kind {
            MoveKind::Add => net.add_edge(i, j),
            MoveKind::Delete => net.remove_edge(i, j),
        }
    }
}

/// Order in which a pass visits the ordered pairs `(i, j)`, `i ≠ j`.
///
/// Every unordered pair is visited twice per pass, once from each side.
/// Both visits test the same symmetric condition, but moves applied in
/// between can change the endpoints' degrees, so the second visit is not
/// redundant and dropping it changes which networks the dynamics reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairOrderPolicy {
    /// `(0,1), (0,2), .., (1,0), (1,2), ..`, row by row.
    #[default]
    Lexicographic,
    /// One fixed permutation of the lexicographic visits, drawn from the
    /// seed and reused for every pass.
    Shuffled { seed: u64 },
}

impl PairOrderPolicy {
    pub fn visits(&self, n_agents: usize) -> Vec<(usize, usize)> {
        let mut visits: Vec<_> = (0..n_agents)
            .flat_map(|i| (0..n_agents).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        if let PairOrderPolicy::Shuffled { seed } = *self {
            visits.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        visits
    }
}

fn check_pair(net: &Network, matrix: &SocialRangeMatrix, i: AgentId, j: AgentId) -> Result<()> {
    check_dims(net, matrix)?;
    net.check_agent(i)?;
    net.check_agent(j)?;
    if i == j {
        return Err(Error::Precondition(format!("agent {i} paired with itself")));
    }
    Ok(())
}

/// Whether `i` and `j` would both strictly gain perceived utility by adding
/// their (currently absent) link.
pub fn wants_add(
    net: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
    i: AgentId,
    j: AgentId,
) -> Result<bool> {
    check_pair(net, matrix, i, j)?;
    if net.linked(i.0, j.0) {
        return Err(Error::Precondition(format!("link {i}-{j} already present")));
    }
    Ok(add_holds(
        PairWeights::of(matrix, i.0, j.0),
        params,
        net.degree_of(i.0),
        net.degree_of(j.0),
    ))
}

/// Whether `i` and `j` would both strictly gain perceived utility by deleting
/// their (currently present) link.
pub fn wants_delete(
    net: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
    i: AgentId,
    j: AgentId,
) -> Result<bool> {
    check_pair(net, matrix, i, j)?;
    if !net.linked(i.0, j.0) {
        return Err(Error::Precondition(format!("link {i}-{j} absent")));
    }
    Ok(delete_holds(
        PairWeights::of(matrix, i.0, j.0),
        params,
        net.degree_of(i.0),
        net.degree_of(j.0),
    ))
}

/// The move the pair `(i, j)` would agree on in `net`, if any.
pub(crate) fn pair_move(
    net: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
    i: usize,
    j: usize,
) -> Option<MoveKind> {
    let w = PairWeights::of(matrix, i, j);
    let (ni, nj) = (net.degree_of(i), net.degree_of(j));
    if net.linked(i, j) {
        delete_holds(w, params, ni, nj).then_some(MoveKind::Delete)
    } else {
        add_holds(w, params, ni, nj).then_some(MoveKind::Add)
    }
}

/// True iff no absent pair wants to add its link and no linked pair wants
/// to delete it.
pub fn is_bilaterally_stable(
    net: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
) -> Result<bool> {
    check_dims(net, matrix)?;
    Ok(lex_pairs(net.n_agents()).all(|(i, j)| pair_move(net, matrix, params, i, j).is_none()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DynamicsStatus {
    /// A full pass applied no move.
    Stable,
    /// The state after pass `first_repeat_index + period` equals the state
    /// after pass `first_repeat_index` (index 0 is the start).
    Cycle {
        first_repeat_index: usize,
        period: usize,
    },
    IterationCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub pass: usize,
    pub mv: Move,
    pub key: NetworkKey,
}

#[derive(Clone, Debug)]
pub struct DynamicsTrace {
    pub start: Network,
    pub moves: Vec<TraceStep>,
    pub status: DynamicsStatus,
    pub passes: usize,
    /// Network when the run stopped; bilaterally stable iff the status is
    /// [`DynamicsStatus::Stable`].
    pub final_network: Network,
}

impl DynamicsTrace {
    pub fn is_stable(&self) -> bool {
        self.status == DynamicsStatus::Stable
    }

    /// Re-applies every recorded move to the start network.
    pub fn replay(&self) -> Result<Network> {
        let mut net = self.start.clone();
        for step in &self.moves {
            step.mv.apply(&mut net)?;
            if net.canonical_key() != step.key {
                return Err(Error::Precondition(format!(
                    "replayed state diverges at move {:?}",
                    step.mv
                )));
            }
        }
        Ok(net)
    }
}

/// Repeated greedy passes over all ordered pairs, applying each agreed move
/// as soon as it is found, until a pass applies nothing, a pass-boundary
/// state repeats, or `max_passes` passes have run.
pub fn run_dynamics(
    start: &Network,
    matrix: &SocialRangeMatrix,
    params: &Params,
    order: PairOrderPolicy,
    max_passes: usize,
) -> Result<DynamicsTrace> {
    check_dims(start, matrix)?;
    if max_passes == 0 {
        return Err(Error::Precondition("max_passes must be at least 1".into()));
    }
    let visits = order.visits(start.n_agents());
    let mut net = start.clone();
    let mut moves = Vec::new();
    let mut seen: HashMap<NetworkKey, usize> = HashMap::from([(net.canonical_key(), 0)]);

    for pass in 1..=max_passes {
        let before = moves.len();
        for &(i, j) in &visits {
            if let Some(kind) = pair_move(&net, matrix, params, i, j) {
                net.set(i, j, kind == MoveKind::Add);
                moves.push(TraceStep {
                    pass,
                    mv: Move::new(kind, AgentId(i), AgentId(j)),
                    key: net.canonical_key(),
                });
            }
        }
        let status = if moves.len() == before {
            Some(DynamicsStatus::Stable)
        } else if let Some(&first) = seen.get(&net.canonical_key()) {
            Some(DynamicsStatus::Cycle {
                first_repeat_index: first,
                period: pass - first,
            })
        } else {
            seen.insert(net.canonical_key(), pass);
            None
        };
        if let Some(status) = status {
            return Ok(DynamicsTrace {
                start: start.clone(),
                moves,
                status,
                passes: pass,
                final_network: net,
            });
        }
    }
    Ok(DynamicsTrace {
        start: start.clone(),
        moves,
        status: DynamicsStatus::IterationCap,
        passes: max_passes,
        final_network: net,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case_study;

    fn friends_pair() -> SocialRangeMatrix {
        SocialRangeMatrix::friends_all(2, 0.1).unwrap()
    }

    #[test]
    fn wants_add_rejects_existing_link() {
        let net = Network::from_edges(2, &[(0, 1)]).unwrap();
        let err = wants_add(
            &net,
            &friends_pair(),
            &case_study::params(),
            AgentId(0),
            AgentId(1),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn wants_delete_rejects_absent_link() {
        let net = Network::empty(2).unwrap();
        let err = wants_delete(
            &net,
            &friends_pair(),
            &case_study::params(),
            AgentId(0),
            AgentId(1),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn wants_add_rejects_self_pair() {
        let net = Network::empty(2).unwrap();
        let err = wants_add(
            &net,
            &friends_pair(),
            &case_study::params(),
            AgentId(1),
            AgentId(1),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn two_friends_stability() {
        let p = case_study::params();
        let linked = Network::from_edges(2, &[(0, 1)]).unwrap();
        let empty = Network::empty(2).unwrap();
        assert!(is_bilaterally_stable(&linked, &friends_pair(), &p).unwrap());
        assert!(!is_bilaterally_stable(&empty, &friends_pair(), &p).unwrap());
    }

    #[test]
    fn costly_links_leave_empty_network_stable() {
        let p = Params::new(0.9, 0.1, 0.2).unwrap();
        let f = SocialRangeMatrix::friends_all(4, 0.1).unwrap();
        assert!(is_bilaterally_stable(&Network::empty(4).unwrap(), &f, &p).unwrap());
    }

    #[test]
    fn single_agent_is_immediately_stable() {
        let f = SocialRangeMatrix::friends_all(1, 0.1).unwrap();
        let net = Network::empty(1).unwrap();
        let trace = run_dynamics(
            &net,
            &f,
            &case_study::params(),
            PairOrderPolicy::Lexicographic,
            5,
        )
        .unwrap();
        assert_eq!(trace.status, DynamicsStatus::Stable);
        assert_eq!(trace.passes, 1);
        assert!(trace.moves.is_empty());
    }

    #[test]
    fn complete_friends_network_dissolves_when_links_are_costly() {
        let p = Params::new(0.09, 0.1, 0.2).unwrap();
        let f = SocialRangeMatrix::friends_all(3, 0.1).unwrap();
        let start = Network::complete(3).unwrap();
        let trace = run_dynamics(
            &start,
            &f,
            &p,
            PairOrderPolicy::Lexicographic,
            DEFAULT_MAX_PASSES,
        )
        .unwrap();
        assert_eq!(trace.status, DynamicsStatus::Stable);
        assert_eq!(trace.final_network.edge_count(), 0);
        assert_eq!(trace.replay().unwrap(), trace.final_network);
    }

    #[test]
    fn case_study_from_empty_stabilises() {
        let f = case_study::social_matrix();
        let p = case_study::params();
        let trace = run_dynamics(
            &Network::empty(5).unwrap(),
            &f,
            &p,
            PairOrderPolicy::Lexicographic,
            DEFAULT_MAX_PASSES,
        )
        .unwrap();
        assert_eq!(trace.status, DynamicsStatus::Stable);
        assert!(is_bilaterally_stable(&trace.final_network, &f, &p).unwrap());
        assert_eq!(trace.replay().unwrap(), trace.final_network);
    }

    #[test]
    fn empty_window_ratio_cycles() {
        let f = case_study::social_matrix();
        let p = Params::from_ratio(0.06, 0.1, 0.2).unwrap();
        for start in [Network::empty(5).unwrap(), Network::complete(5).unwrap()] {
            let trace = run_dynamics(
                &start,
                &f,
                &p,
                PairOrderPolicy::Lexicographic,
                DEFAULT_MAX_PASSES,
            )
            .unwrap();
            assert!(
                matches!(trace.status, DynamicsStatus::Cycle { .. }),
                "{:?}",
                trace.status
            );
        }
    }

    #[test]
    fn iteration_cap_is_reported() {
        let f = case_study::social_matrix();
        let p = Params::from_ratio(0.06, 0.1, 0.2).unwrap();
        let trace = run_dynamics(
            &Network::empty(5).unwrap(),
            &f,
            &p,
            PairOrderPolicy::Lexicographic,
            1,
        )
        .unwrap();
        assert_eq!(trace.status, DynamicsStatus::IterationCap);
        assert_eq!(trace.passes, 1);
    }

    #[test]
    fn zero_pass_budget_is_rejected() {
        let f = friends_pair();
        let r = run_dynamics(
            &Network::empty(2).unwrap(),
            &f,
            &case_study::params(),
            PairOrderPolicy::Lexicographic,
            0,
        );
        assert!(r.is_err());
    }

    #[test]
    fn lexicographic_visits_cover_both_sides() {
        let v = PairOrderPolicy::Lexicographic.visits(3);
        assert_eq!(v, vec![(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
    }

    #[test]
    fn shuffled_order_is_a_seeded_permutation() {
        let a = PairOrderPolicy::Shuffled { seed: 7 }.visits(6);
        let b = PairOrderPolicy::Shuffled { seed: 7 }.visits(6);
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(sorted, PairOrderPolicy::Lexicographic.visits(6));
        assert_ne!(a, PairOrderPolicy::Shuffled { seed: 8 }.visits(6));
    }

    #[test]
    fn second_visit_changes_the_outcome() {
        // Visiting each unordered pair once per pass cycles on the case
        // study; visiting both sides settles.
        let f = case_study::social_matrix();
        let p = case_study::params();
        let trace = run_dynamics(
            &Network::empty(5).unwrap(),
            &f,
            &p,
            PairOrderPolicy::Lexicographic,
            50,
        )
        .unwrap();
        assert_eq!(trace.status, DynamicsStatus::Stable);
        let mut net = Network::empty(5).unwrap();
        let mut seen = std::collections::HashSet::new();
        let cycled = loop {
            if !seen.insert(net.canonical_key()) {
                break true;
            }
            let mut moved = false;
            for (i, j) in lex_pairs(5) {
                if let Some(kind) = pair_move(&net, &f, &p, i, j) {
                    net.set(i, j, kind == MoveKind::Add);
                    moved = true;
                }
            }
            if !moved {
                break false;
            }
        };
        assert!(cycled);
    }
}
