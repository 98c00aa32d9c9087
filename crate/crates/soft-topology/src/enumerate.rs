//! Exhaustive and randomized generation of soft sets and soft topologies.
//!
//! Over a finite context everything is enumerable: there are `2^cells` soft
//! sets and finitely many soft topologies. The enumerators here are the
//! workhorses of the proposition oracles — exhaustive sweeps over every
//! context small enough, seeded random sweeps above that. All listings are
//! in canonical order and all randomness is ChaCha8 from explicit seeds, so
//! every run of every sweep is reproducible.

use crate::bits::Bits;
use crate::context::Context;
use crate::error::Error;
use crate::exec;
use crate::softset::SoftSet;
use crate::topology::{validate, SoftTopology};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Hard ceiling on membership-table size for topology enumeration: the
/// candidate space is `2^(2^cells)` families.
pub const TOPOLOGY_ENUMERATION_LIMIT: usize = 4;

/// Resource limits for the enumerators and the proposition oracles.
#[derive(Debug, Clone)]
pub struct EnumerationBudget {
    /// Largest membership table (`points × parameters`) for which all soft
    /// sets may be materialised.
    pub max_cells: usize,
    /// Largest family list an enumerator may return.
    pub max_families: usize,
    /// Base seed for every randomized lane.
    pub seed: u64,
    /// Number of random trials per randomized lane.
    pub trials: usize,
    /// Universe size of the randomized lanes.
    pub random_points: usize,
    /// Parameter count of the randomized lanes.
    pub random_parameters: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_cells: 12,
            max_families: 1 << 16,
            seed: 0,
            trials: 5000,
            random_points: 3,
            random_parameters: 2,
        }
    }
}

/// Every soft set over the context, in canonical order.
///
/// The list has `2^cells` entries, so the context must fit the budget's
/// `max_cells`.
pub fn enumerate_soft_sets(
    ctx: &Arc<Context>,
    budget: &EnumerationBudget,
) -> Result<Vec<SoftSet>, Error> {
    let cells = ctx.cells();
    if cells > budget.max_cells {
        return Err(Error::BudgetExceeded(format!(
            "{cells} cells would enumerate 2^{cells} soft sets (max_cells = {})",
            budget.max_cells
        )));
    }
    Ok((0..1usize << cells)
        .map(|v| SoftSet::from_bits(ctx, Bits::from_index(cells, v)))
        .collect())
}

/// Every soft topology over the context, in canonical order (ascending
/// family encoding).
///
/// Candidates are all families containing the null and absolute soft sets;
/// each one goes through the ordinary axiom checker. Limited to
/// [`TOPOLOGY_ENUMERATION_LIMIT`] cells.
pub fn enumerate_topologies(
    ctx: &Arc<Context>,
    budget: &EnumerationBudget,
) -> Result<Vec<SoftTopology>, Error> {
    let cells = ctx.cells();
    if cells > TOPOLOGY_ENUMERATION_LIMIT || cells > budget.max_cells {
        return Err(Error::BudgetExceeded(format!(
            "topology enumeration needs 2^(2^{cells}) candidate families \
             (limit is {TOPOLOGY_ENUMERATION_LIMIT} cells)"
        )));
    }
    let all_sets = enumerate_soft_sets(ctx, budget)?;
    let ids = all_sets.len(); // 2^cells subset ids; id 0 is null, the top id is absolute
    let forced: u64 = 1 | 1 << (ids - 1);
    let free = ids - 2;
    let topologies: Vec<SoftTopology> = exec::filter_map_collect(1 << free, |v| {
        let mut family_mask = forced;
        for k in 0..free {
            if v >> k & 1 == 1 {
                family_mask |= 1 << (k + 1);
            }
        }
        let family: Vec<SoftSet> = (0..ids)
            .filter(|&id| family_mask >> id & 1 == 1)
            .map(|id| all_sets[id].clone())
            .collect();
        let report = validate(ctx, &family).expect("enumerated sets share the context");
        report
            .is_valid()
            .then(|| SoftTopology::from_valid(ctx, family))
    });
    if topologies.len() > budget.max_families {
        return Err(Error::BudgetExceeded(format!(
            "{} topologies exceed max_families = {}",
            topologies.len(),
            budget.max_families
        )));
    }
    Ok(topologies)
}

/// One uniformly random soft set (each cell is present with probability
/// one half).
pub fn random_soft_set(ctx: &Arc<Context>, rng: &mut impl Rng) -> SoftSet {
    let cells = ctx.cells();
    let mut bits = Bits::zero(cells);
    for cell in 0..cells {
        if rng.gen::<bool>() {
            bits.set(cell, true);
        }
    }
    SoftSet::from_bits(ctx, bits)
}

/// The soft topology generated by `generators` random soft sets drawn from
/// a fresh ChaCha8 stream seeded with `seed`.
pub fn random_topology(
    ctx: &Arc<Context>,
    seed: u64,
    generators: usize,
) -> Result<SoftTopology, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets: Vec<SoftSet> = (0..generators)
        .map(|_| random_soft_set(ctx, &mut rng))
        .collect();
    SoftTopology::generate(ctx, &sets)
}

/// Derives an independent per-trial seed from a base seed (splitmix64 of
/// the trial offset), so trials can run in any order or in parallel.
pub fn trial_seed(base: u64, trial: u64) -> u64 {
    let mut z = base.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// All `(points, parameters)` shapes with at most `cells` table cells,
/// ordered by cell count, then by point count.
pub fn shapes_up_to(cells: usize) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = (1..=cells)
        .flat_map(|n| (1..=cells).map(move |m| (n, m)))
        .filter(|(n, m)| n * m <= cells)
        .collect();
    shapes.sort_by_key(|&(n, m)| (n * m, n));
    shapes
}
