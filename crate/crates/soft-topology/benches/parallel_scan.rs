//! Sequential versus parallel execution of the crate's three bulk-scan
//! shapes: exhaustive enumeration (collect every hit), witness search
//! (first hit in index order) and randomized trials. Run with
//! `cargo bench -p soft-topology`; build with `--no-default-features`
//! to check the sequential-only configuration still compiles (the
//! parallel side of each comparison is then skipped).

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use soft_topology::{
    enumerate_soft_sets, exec, random_soft_set, trial_seed, validate, Context,
    EnumerationBudget, SoftSet, SoftTopology,
};
use std::sync::Arc;

fn powerset(ctx: &Arc<Context>) -> Vec<SoftSet> {
    enumerate_soft_sets(ctx, &EnumerationBudget::default()).expect("small shape")
}

fn family(sets: &[SoftSet], mask: usize) -> Vec<SoftSet> {
    (0..sets.len())
        .filter(|&id| mask >> id & 1 == 1)
        .map(|id| sets[id].clone())
        .collect()
}

/// Validate all 2^16 candidate families over a 2×2 table, keeping the
/// valid ones — the enumeration workload.
fn bench_enumeration(c: &mut Criterion) {
    let ctx = Context::numbered(2, 2).expect("fixed shape");
    let sets = powerset(&ctx);
    let candidates = 1usize << sets.len();
    let keep = |mask: usize| {
        let fam = family(&sets, mask);
        validate(&ctx, &fam)
            .expect("shared context")
            .is_valid()
            .then_some(mask)
    };
    let expected = exec::filter_map_collect_seq(candidates, keep).len();
    assert_eq!(expected, 355);

    let mut group = c.benchmark_group("enumerate_topologies_2x2");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| exec::filter_map_collect_seq(candidates, keep).len())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| exec::filter_map_collect_par(candidates, keep).len())
    });
    group.finish();
}

/// Find the canonically first candidate family that is a topology with at
/// least six members — the witness-search workload, with the hit deep
/// enough in the index range to matter.
fn bench_witness_search(c: &mut Criterion) {
    let ctx = Context::numbered(2, 2).expect("fixed shape");
    let sets = powerset(&ctx);
    let candidates = 1usize << sets.len();
    let find = |mask: usize| {
        let fam = family(&sets, mask);
        (fam.len() >= 6
            && validate(&ctx, &fam)
                .expect("shared context")
                .is_valid())
        .then_some(mask)
    };
    let expected = exec::scan_first_seq(candidates, find);
    assert!(expected.is_some());

    let mut group = c.benchmark_group("first_large_topology_2x2");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| exec::scan_first_seq(candidates, find))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let hit = exec::scan_first_par(candidates, find);
            assert_eq!(hit, expected);
            hit
        })
    });
    group.finish();
}

/// Generate a seeded random topology per trial and test soft T0 — the
/// randomized-oracle workload.
fn bench_random_trials(c: &mut Criterion) {
    let ctx = Context::numbered(3, 2).expect("fixed shape");
    let trial = |t: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(7, t as u64));
        let f = random_soft_set(&ctx, &mut rng);
        let g = random_soft_set(&ctx, &mut rng);
        let top = SoftTopology::generate(&ctx, &[f, g]).expect("shared context");
        top.is_t0().holds.then_some(t)
    };
    let trials = 4096;

    let mut group = c.benchmark_group("random_t0_trials_3x2");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| exec::filter_map_collect_seq(trials, trial).len())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| exec::filter_map_collect_par(trials, trial).len())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_witness_search,
    bench_random_trials
);
criterion_main!(benches);
