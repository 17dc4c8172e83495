//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use f2f_formation::analysis::{
    check_theorem1, check_window, enumerate_stable, expected_network, sweep_ratio,
    theorem1_threshold, verify_regime_claim, ExpectedKind, Outcome, RatioGrid, DEFAULT_BETA_ANCHOR,
};
use f2f_formation::case_study;
use f2f_formation::dynamics::conditions::{
    add_deltas, add_inequality, delete_deltas, delete_inequality, PairWeights,
};
use f2f_formation::dynamics::{
    is_bilaterally_stable, run_dynamics, DynamicsStatus, PairOrderPolicy, DEFAULT_MAX_PASSES,
};
use f2f_formation::model::{lex_pairs, AgentId, Network, Params, SocialRangeMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Checked = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Checked,
}

fn ensure(ok: bool, detail: String) -> Checked {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn case_study_convergence() -> Checked {
    let f = case_study::social_matrix();
    let p = case_study::params();
    let trace = run_dynamics(
        &Network::empty(5).unwrap(),
        &f,
        &p,
        PairOrderPolicy::Lexicographic,
        DEFAULT_MAX_PASSES,
    )
    .map_err(|e| e.to_string())?;
    let stable = is_bilaterally_stable(&trace.final_network, &f, &p).unwrap();
    let member = enumerate_stable(5, &f, &p)
        .unwrap()
        .contains(&trace.final_network);
    ensure(
        trace.status == DynamicsStatus::Stable && trace.passes <= 50 && stable && member,
        format!(
            "status {:?} after {} passes, edges {:?}, stable {stable}, enumerated {member}",
            trace.status,
            trace.passes,
            trace.final_network.edges()
        ),
    )
}

fn non_uniqueness() -> Checked {
    let f = case_study::social_matrix();
    let p = case_study::params();
    let set = enumerate_stable(5, &f, &p).unwrap();
    let empty = Network::empty(5).unwrap();
    let reference = run_dynamics(
        &empty,
        &f,
        &p,
        PairOrderPolicy::Lexicographic,
        DEFAULT_MAX_PASSES,
    )
    .unwrap()
    .final_network;
    let mut found = None;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut start = Network::empty(5).unwrap();
        for (i, j) in lex_pairs(5) {
            if rng.gen_bool(0.5) {
                start.add_edge(AgentId(i), AgentId(j)).unwrap();
            }
        }
        let trace = run_dynamics(
            &start,
            &f,
            &p,
            PairOrderPolicy::Shuffled { seed },
            DEFAULT_MAX_PASSES,
        )
        .unwrap();
        if trace.is_stable() && trace.final_network != reference {
            found = Some((seed, trace.final_network));
            break;
        }
    }
    let detail = format!(
        "{} stable networks; alternative endpoint {:?}",
        set.count(),
        found.as_ref().map(|(s, n)| (s, n.edges()))
    );
    ensure(set.count() >= 2 && found.is_some(), detail)
}

fn fmt_runs(runs: &[(f64, f64)]) -> String {
    let parts: Vec<String> = runs
        .iter()
        .map(|(a, b)| format!("[{a:.3}, {b:.3}]"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn empty_window() -> Checked {
    let grid = RatioGrid::new(0.01, 0.12, 0.001).unwrap();
    let sweep = sweep_ratio(
        &case_study::social_matrix(),
        0.2,
        &grid,
        DEFAULT_BETA_ANCHOR,
    )
    .unwrap();
    let check = check_window(&sweep);
    let (min, max) = sweep.points.iter().fold((usize::MAX, 0), |(lo, hi), p| {
        (lo.min(p.stable_count), hi.max(p.stable_count))
    });
    ensure(
        check.confirmed(),
        format!(
            "{} grid points, zero-count window {:?}, stable counts {min}..={max}; empty-start dynamics unsettled on {}",
            sweep.points.len(),
            check.window,
            fmt_runs(&sweep.unsettled_runs())
        ),
    )
}

fn enemy_regime() -> Checked {
    let f = case_study::social_matrix();
    let p = Params::new(0.2, 0.1, 0.2).unwrap();
    let set = enumerate_stable(5, &f, &p).unwrap();
    let enemies = expected_network(ExpectedKind::EnemyPairs, 5, Some(&f)).unwrap();
    let trace = run_dynamics(
        &Network::empty(5).unwrap(),
        &f,
        &p,
        PairOrderPolicy::Lexicographic,
        DEFAULT_MAX_PASSES,
    )
    .unwrap();
    let only = set.count() == 1 && set.contains(&enemies);
    let reached = trace.is_stable() && trace.final_network == enemies;
    ensure(
        only && reached && enemies.edge_count() == 5,
        format!(
            "{} stable network(s), enemy-pairs graph {:?} unique {only}, reached from empty {reached}",
            set.count(),
            enemies.edges()
        ),
    )
}

fn all_friends(rng: &mut ChaCha8Rng) -> (usize, SocialRangeMatrix, f64) {
    let n = rng.gen_range(3..=5);
    let eps = rng.gen_range(0.01..0.99);
    let lambda = rng.gen_range(0.05..0.95);
    (n, SocialRangeMatrix::friends_all(n, eps).unwrap(), lambda)
}

fn regime_draws(
    kind: ExpectedKind,
    seed: u64,
    draw: fn(&mut ChaCha8Rng) -> (usize, SocialRangeMatrix, Params),
) -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut confirmed, mut membership, mut refuted) = (0, 0, 0);
    let mut first_bad = None;
    for k in 0..100 {
        let (n, f, p) = draw(&mut rng);
        let check = verify_regime_claim(kind, n, &f, &p).map_err(|e| format!("draw {k}: {e}"))?;
        match check.outcome {
            Outcome::Confirmed => confirmed += 1,
            Outcome::MembershipOnly => membership += 1,
            Outcome::Refuted => refuted += 1,
        }
        if check.outcome != Outcome::Confirmed && first_bad.is_none() {
            first_bad = Some((k, n, p, check.stable_set.count()));
        }
    }
    let detail = format!("100 draws: {confirmed} unique, {membership} membership only, {refuted} refuted; first non-unique {first_bad:?}");
    let ok = match kind {
        ExpectedKind::EnemyPairs => refuted == 0,
        _ => confirmed == 100,
    };
    ensure(ok, detail)
}

fn lemma1() -> Checked {
    regime_draws(ExpectedKind::Complete, 101, |rng| {
        let (n, f, lambda) = all_friends(rng);
        let bound = (1.0 - lambda) * lambda.powi(n as i32 - 2);
        let ratio = bound * rng.gen_range(0.01..0.99);
        let beta = rng.gen_range(0.05..0.95);
        (n, f, Params::from_ratio(ratio, beta, lambda).unwrap())
    })
}

fn lemma2() -> Checked {
    regime_draws(ExpectedKind::Empty, 202, |rng| {
        let (n, f, lambda) = all_friends(rng);
        let ratio = (1.0 - lambda) * rng.gen_range(1.01..2.0);
        let beta = rng.gen_range(0.05..0.45);
        (n, f, Params::from_ratio(ratio, beta, lambda).unwrap())
    })
}

fn corollary1() -> Checked {
    regime_draws(ExpectedKind::EnemyPairs, 303, |rng| {
        let n = rng.gen_range(3..=5);
        let eps = rng.gen_range(0.01..0.99);
        let lambda = rng.gen_range(0.05..0.95);
        let signs: Vec<Vec<i8>> = {
            let mut s = vec![vec![0i8; n]; n];
            for (i, j) in lex_pairs(n) {
                let v = if rng.gen_bool(0.5) { 1 } else { -1 };
                s[i][j] = v;
                s[j][i] = v;
            }
            s
        };
        let f = SocialRangeMatrix::from_sign_pattern(eps, &signs).unwrap();
        let ratio = (1.0 - lambda) / (1.0 - eps) * rng.gen_range(1.01..2.0);
        let beta = (0.9 / ratio).min(0.95) * rng.gen_range(0.05..1.0);
        (n, f, Params::from_ratio(ratio, beta, lambda).unwrap())
    })
}

fn theorem1() -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let (mut non_vacuous, mut failures) = (0, 0);
    for _ in 0..10_000 {
        let lambda = rng.gen_range(0.02..0.98);
        let beta = rng.gen_range(0.05..0.95);
        let c = (1.0 - lambda) * beta * rng.gen_range(0.01..0.99);
        let p = Params::new(c, beta, lambda).unwrap();
        let (fii, fjj, fij) = (
            rng.gen_range(0.01..1.0),
            rng.gen_range(0.01..1.0),
            rng.gen_range(0.01..=1.0),
        );
        let f = SocialRangeMatrix::from_rows(vec![vec![fii, fij], vec![fij, fjj]]).unwrap();
        let (ni, nj) = (rng.gen_range(0..12), rng.gen_range(0..12));
        if ((ni.max(nj)) as f64) < theorem1_threshold(&p).unwrap() {
            non_vacuous += 1;
        }
        if !check_theorem1(&p, &f, AgentId(0), AgentId(1), ni, nj).map_err(|e| e.to_string())? {
            failures += 1;
        }
    }
    ensure(
        failures == 0 && non_vacuous > 0,
        format!("10000 instances, {non_vacuous} with the hypothesis active, {failures} failures"),
    )
}

fn random_instance(rng: &mut ChaCha8Rng) -> (SocialRangeMatrix, Params, Network, PairOrderPolicy) {
    let n = rng.gen_range(2..=5);
    let mut rows = vec![vec![0.0; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = rng.gen_range(0.01..1.0);
    }
    for (i, j) in lex_pairs(n) {
        let v = match rng.gen_range(0..4) {
            0 => 1.0,
            1 => -1.0,
            2 => 0.0,
            _ => rng.gen_range(-1.0..1.0),
        };
        rows[i][j] = v;
        rows[j][i] = v;
    }
    let f = SocialRangeMatrix::from_rows(rows).unwrap();
    let lambda = rng.gen_range(0.05..0.95);
    let beta = rng.gen_range(0.05..0.95);
    let p = Params::from_ratio(rng.gen_range(0.005..1.2), beta, lambda)
        .unwrap_or_else(|_| Params::new(0.5, 0.9, lambda).unwrap());
    let mut start = Network::empty(n).unwrap();
    for (i, j) in lex_pairs(n) {
        if rng.gen_bool(0.4) {
            start.add_edge(AgentId(i), AgentId(j)).unwrap();
        }
    }
    let order = if rng.gen_bool(0.5) {
        PairOrderPolicy::Lexicographic
    } else {
        PairOrderPolicy::Shuffled { seed: rng.gen() }
    };
    (f, p, start, order)
}

fn oracle_equivalence() -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let (mut settled, mut cycles, mut fixed_points) = (0, 0, 0);
    for k in 0..500 {
        let (f, p, start, order) = random_instance(&mut rng);
        let n = start.n_agents();
        let set = enumerate_stable(n, &f, &p).unwrap();
        let trace = run_dynamics(&start, &f, &p, order, DEFAULT_MAX_PASSES).unwrap();
        match trace.status {
            DynamicsStatus::Stable => {
                settled += 1;
                if !set.contains(&trace.final_network) {
                    return Err(format!(
                        "instance {k}: endpoint {:?} not enumerated",
                        trace.final_network.edges()
                    ));
                }
            }
            DynamicsStatus::Cycle { .. } => cycles += 1,
            DynamicsStatus::IterationCap => return Err(format!("instance {k}: iteration cap")),
        }
        for net in set.networks() {
            let t = run_dynamics(net, &f, &p, order, DEFAULT_MAX_PASSES).unwrap();
            if !t.moves.is_empty() || !t.is_stable() {
                return Err(format!(
                    "instance {k}: stable network {:?} moved",
                    net.edges()
                ));
            }
            fixed_points += 1;
        }
    }
    Ok(format!(
        "500 instances: {settled} settled inside the enumerated set, {cycles} cycled; {fixed_points} enumerated networks are fixed points"
    ))
}

fn form_equivalence() -> Checked {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let (mut accepted, mut disagreements, mut drawn) = (0, 0, 0);
    while accepted < 10_000 {
        drawn += 1;
        let w = PairWeights {
            self_i: rng.gen_range(0.01..1.0),
            self_j: rng.gen_range(0.01..1.0),
            mutual: rng.gen_range(-1.0..1.0),
        };
        let p = Params::new(
            rng.gen_range(0.001..0.99),
            rng.gen_range(0.01..0.99),
            rng.gen_range(0.02..0.98),
        )
        .unwrap();
        let (ni, nj) = (rng.gen_range(1..8), rng.gen_range(1..8));
        let (a, b) = if rng.gen_bool(0.5) {
            (add_deltas(w, &p, ni, nj), add_inequality(w, &p, ni, nj))
        } else {
            (
                delete_deltas(w, &p, ni, nj),
                delete_inequality(w, &p, ni, nj),
            )
        };
        if a.min_abs() <= 1e-12 || b.min_abs() <= 1e-12 {
            continue;
        }
        accepted += 1;
        if a.both_positive() != b.both_positive() {
            disagreements += 1;
        }
    }
    ensure(
        disagreements == 0,
        format!("{accepted} instances ({drawn} drawn), {disagreements} disagreements"),
    )
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "case-study convergence",
            budget: Duration::from_secs(1),
            run: case_study_convergence,
        },
        Criterion {
            id: 2,
            name: "non-uniqueness",
            budget: Duration::from_secs(1),
            run: non_uniqueness,
        },
        Criterion {
            id: 3,
            name: "empty window",
            budget: Duration::from_secs(30),
            run: empty_window,
        },
        Criterion {
            id: 4,
            name: "enemy regime",
            budget: Duration::from_secs(1),
            run: enemy_regime,
        },
        Criterion {
            id: 5,
            name: "complete-network regime",
            budget: Duration::from_secs(60),
            run: lemma1,
        },
        Criterion {
            id: 6,
            name: "empty-network regime",
            budget: Duration::from_secs(60),
            run: lemma2,
        },
        Criterion {
            id: 7,
            name: "enemy-pairs regime",
            budget: Duration::from_secs(60),
            run: corollary1,
        },
        Criterion {
            id: 8,
            name: "friend degree bound",
            budget: Duration::from_secs(5),
            run: theorem1,
        },
        Criterion {
            id: 9,
            name: "dynamics/enumeration oracle",
            budget: Duration::from_secs(120),
            run: oracle_equivalence,
        },
        Criterion {
            id: 10,
            name: "delta/inequality forms",
            budget: Duration::from_secs(1),
            run: form_equivalence,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let result = (c.run)();
        let elapsed = t.elapsed();
        let in_time = elapsed <= c.budget;
        let (pass, detail) = match result {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over budget {:?}", c.budget)),
            Err(d) => (false, d),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} [{:>2}] {} ({:.3}s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
