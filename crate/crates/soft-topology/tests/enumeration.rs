//! Behaviour of the exhaustive enumerators and the proposition registry on
//! small contexts: census counts against the independent crisp recount,
//! determinism of the listings, lattice closure of the census under meet and
//! join, and a light randomized sweep over every registered proposition.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use soft_topology::{
    check_all, check_proposition, count_topologies, enumerate_soft_sets, enumerate_topologies,
    proposition_names, shapes_up_to, Context, EnumerationBudget, Error, SoftSet, SoftTopology,
};

#[test]
fn census_counts_match_the_crisp_recount_on_every_small_shape() {
    let budget = EnumerationBudget::default();
    // The recount works on plain set families over `cells` unlabeled cells,
    // so every shape with the same table size must report the same count.
    let expected = [(1usize, 1u64), (2, 4), (3, 29), (4, 355)];
    for (cells, count) in expected {
        assert_eq!(count_topologies(cells).unwrap(), count, "crisp count at {cells} cells");
    }
    for (points, parameters) in shapes_up_to(4) {
        let ctx = Context::numbered(points, parameters).unwrap();
        let census = enumerate_topologies(&ctx, &budget).unwrap();
        assert_eq!(
            census.len() as u64,
            count_topologies(points * parameters).unwrap(),
            "census at {points}x{parameters}"
        );
        assert!(census.iter().all(|t| t.revalidate().is_valid()));
    }
}

#[test]
fn topology_listing_is_deterministic_and_duplicate_free() {
    let ctx = Context::numbered(2, 2).unwrap();
    let budget = EnumerationBudget::default();
    let first = enumerate_topologies(&ctx, &budget).unwrap();
    let second = enumerate_topologies(&ctx, &budget).unwrap();
    assert_eq!(first, second);

    // The indiscrete family has the smallest encoding and the discrete one
    // the largest, so they bracket the listing.
    assert_eq!(first.first().unwrap().opens().len(), 2);
    assert_eq!(first.last().unwrap().opens().len(), 16);

    let mut families: Vec<Vec<SoftSet>> =
        first.iter().map(|t| t.opens().to_vec()).collect();
    families.sort();
    families.dedup();
    assert_eq!(families.len(), first.len());
}

#[test]
fn census_is_closed_under_meet_and_join() {
    let ctx = Context::numbered(2, 2).unwrap();
    let budget = EnumerationBudget::default();
    let census = enumerate_topologies(&ctx, &budget).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let a = &census[rng.gen_range(0..census.len())];
        let b = &census[rng.gen_range(0..census.len())];
        let meet = SoftTopology::meet(&[a.clone(), b.clone()]).unwrap();
        let join = SoftTopology::join(&[a.clone(), b.clone()]).unwrap();
        assert!(census.contains(&meet), "meet escaped the census");
        assert!(census.contains(&join), "join escaped the census");
        // The lattice order sandwiches both combinations.
        assert!(meet.opens().iter().all(|s| a.opens().contains(s)));
        assert!(a.opens().iter().all(|s| join.opens().contains(s)));
    }
}

#[test]
fn soft_set_listing_agrees_with_the_census_members() {
    // Every open of every enumerated topology appears in the soft-set
    // listing, and the discrete topology uses all of it.
    let ctx = Context::numbered(1, 3).unwrap();
    let budget = EnumerationBudget::default();
    let sets = enumerate_soft_sets(&ctx, &budget).unwrap();
    let census = enumerate_topologies(&ctx, &budget).unwrap();
    assert_eq!(sets.len(), 8);
    assert_eq!(census.len(), 29);
    for topology in &census {
        assert!(topology.opens().iter().all(|s| sets.contains(s)));
    }
    assert_eq!(census.last().unwrap().opens(), &sets[..]);
}

#[test]
fn every_registered_proposition_passes_a_light_sweep() {
    // Trimmed random lanes keep this quick; the exhaustive lanes are
    // unaffected by the trial count.
    let budget = EnumerationBudget {
        trials: 120,
        ..EnumerationBudget::default()
    };
    let reports = check_all(&budget);
    assert_eq!(reports.len(), proposition_names().len());
    for report in &reports {
        assert!(report.pass, "{} failed: {:?}", report.name, report.finding);
        assert!(report.cases > 0, "{} ran no cases", report.name);
        if report.name.ends_with("-search") {
            let finding = report.finding.as_ref().expect("search without a witness");
            assert!(!finding.description.is_empty());
        } else {
            assert!(report.finding.is_none(), "{} left a finding", report.name);
        }
    }
}

#[test]
fn single_proposition_lookup_is_by_exact_name() {
    let budget = EnumerationBudget {
        trials: 60,
        ..EnumerationBudget::default()
    };
    let report = check_proposition("commutativity", &budget).unwrap();
    assert!(report.pass);
    assert_eq!(report.name, "commutativity");

    match check_proposition("no-such-law", &budget) {
        Err(Error::UnknownProposition(name)) => assert_eq!(name, "no-such-law"),
        other => panic!("expected an unknown-proposition error, got {other:?}"),
    }
}
