//! Heavier randomized cross-checks against the oracles. Ignored by default
//! (the acceptance suite runs smaller versions); run with
//! `cargo test -p fptcolor --test soak -- --ignored`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fptcolor::generate::{gen_perturbed, gen_threshold, random_threshold_steps};
use fptcolor::graph::Graph;
use fptcolor::oracle::{oracle_equitable, oracle_precolor, OracleBudget};
use fptcolor::precolor::{verify_solution, PrecolorInstance};
use fptcolor::{solve_equitable_fpt, solve_precolor, EquitableInstance};

/// Wider equitable sweep: up to k = 3, denser and sparser perturbations,
/// both connected and disconnected threshold bases.
#[test]
#[ignore]
fn soak_equitable_fpt() {
    let budget = OracleBudget::with_max_vertices(9);
    let mut rng = ChaCha8Rng::seed_from_u64(0xE0_17);
    for case in 0..10000u32 {
        let base_n = rng.random_range(1..=6usize);
        let k = rng.random_range(0..=3usize);
        let p = [0.0, 0.2, 0.5, 0.8, 1.0][rng.random_range(0..5usize)];
        let steps = random_threshold_steps(base_n, rng.random(), rng.random_bool(0.5));
        let base = gen_threshold(&steps).unwrap();
        let (g, x) = gen_perturbed(&base, k, p, rng.random());
        let n = g.vertex_count();
        let r = rng.random_range(1..=n);
        let inst = EquitableInstance::new(g.clone(), r, x.clone()).unwrap();
        let solver = solve_equitable_fpt(&inst).unwrap();
        let oracle = oracle_equitable(&g, r, &budget).unwrap();
        assert_eq!(
            solver.is_some(),
            oracle.is_some(),
            "case {case}: {g:?} r={r} X={x:?}"
        );
    }
}

/// Wider precoloring sweep, including degenerate shapes: empty modulator,
/// fully precolored graphs, tight budgets.
#[test]
#[ignore]
fn soak_precolor() {
    let budget = OracleBudget::with_max_vertices(11);
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E_C0);
    for case in 0..10000u32 {
        let base_n = rng.random_range(1..=7usize);
        let k = rng.random_range(0..=3usize);
        let p = [0.0, 0.3, 0.7, 1.0][rng.random_range(0..4usize)];
        let (g, x) = gen_perturbed(&Graph::complete(base_n), k, p, rng.random());
        let n = g.vertex_count();
        let r = rng.random_range(1..=n);
        let dens = [0.0, 0.35, 0.8][rng.random_range(0..3usize)];
        let mut pre: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..n {
            if rng.random_bool(dens) {
                let blocked: BTreeSet<usize> = g
                    .neighbors(v)
                    .iter()
                    .filter_map(|u| pre.get(u).copied())
                    .collect();
                let open: Vec<usize> = (1..=r).filter(|c| !blocked.contains(c)).collect();
                if !open.is_empty() {
                    pre.insert(v, open[rng.random_range(0..open.len())]);
                }
            }
        }
        let inst = PrecolorInstance::new(g.clone(), x.clone(), r, pre.clone()).unwrap();
        let solver = solve_precolor(&inst);
        let oracle = oracle_precolor(&inst, &budget).unwrap();
        assert_eq!(
            solver.is_some(),
            oracle.is_some(),
            "case {case}: {g:?} r={r} X={x:?} pre={pre:?}"
        );
        if let Some(c) = solver {
            assert!(verify_solution(&inst, &c), "case {case} witness invalid");
        }
    }
}
