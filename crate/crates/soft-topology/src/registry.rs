//! The proposition registry: named, machine-checkable statements about
//! soft sets, soft topologies and soft N-spaces.
//!
//! Every entry packages one algebraic or topological law (or one
//! counterexample search) together with the brute-force strategy that
//! checks it:
//!
//! * **laws** sweep an exhaustive lane first — all soft sets over a 2×2
//!   table for the set algebra, all soft topologies (and for space laws,
//!   all ordered pairs of them) over every context with at most four table
//!   cells — and then a seeded randomized lane of configurable size. A law
//!   passes when no violation is found; a violation is returned as a
//!   replayable workspace.
//! * **searches** look for an object whose existence refutes a tempting
//!   converse (a union of two topologies that is not a topology; a pooled
//!   2-wise T0 space with no T0 component). A search passes when it finds
//!   its witness, and the witness ships in the report the same way.
//!
//! Both lanes are deterministic: exhaustive scans are index-ordered, random
//! lanes derive one ChaCha8 stream per trial from the budget seed.

use crate::context::Context;
use crate::crisp::{self, CrispFamily};
use crate::enumerate::{
    enumerate_topologies, random_soft_set, shapes_up_to, trial_seed, EnumerationBudget,
    TOPOLOGY_ENUMERATION_LIMIT,
};
use crate::error::Error;
use crate::exec;
use crate::nspace::{PooledFamily, SoftNSpace};
use crate::softset::{SoftPoint, SoftSet};
use crate::topology::{validate, SoftTopology};
use crate::workspace::Workspace;
use crate::bits::Bits;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Outcome of checking one registry entry.
#[derive(Debug, Clone)]
pub struct PropReport {
    pub name: &'static str,
    pub summary: &'static str,
    /// Laws pass when no violation was found; searches pass when their
    /// witness was found.
    pub pass: bool,
    /// Situations examined (exhaustive cases plus random trials).
    pub cases: u64,
    /// The interesting object, if any: a law's counterexample or a search's
    /// witness, as a replayable workspace.
    pub finding: Option<Finding>,
}

/// A concrete configuration worth looking at, packaged for replay.
#[derive(Debug, Clone)]
pub struct Finding {
    pub description: String,
    pub workspace: Workspace,
}

struct Outcome {
    pass: bool,
    cases: u64,
    finding: Option<Finding>,
}

struct Entry {
    name: &'static str,
    summary: &'static str,
    run: fn(&EnumerationBudget) -> Outcome,
}

/// Names of all registry entries, in registry order.
pub fn proposition_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Checks one entry by name.
pub fn check_proposition(name: &str, budget: &EnumerationBudget) -> Result<PropReport, Error> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownProposition(name.to_string()))?;
    let outcome = (entry.run)(budget);
    Ok(PropReport {
        name: entry.name,
        summary: entry.summary,
        pass: outcome.pass,
        cases: outcome.cases,
        finding: outcome.finding,
    })
}

/// Checks every entry, in registry order.
pub fn check_all(budget: &EnumerationBudget) -> Vec<PropReport> {
    ENTRIES
        .iter()
        .map(|e| check_proposition(e.name, budget).expect("registry names are known"))
        .collect()
}

// ---------------------------------------------------------------------------
// Shared lane machinery
// ---------------------------------------------------------------------------

fn lane_budget(budget: &EnumerationBudget) -> EnumerationBudget {
    EnumerationBudget {
        max_cells: budget.max_cells.max(TOPOLOGY_ENUMERATION_LIMIT),
        max_families: budget.max_families.max(512),
        ..budget.clone()
    }
}

fn all_sets(ctx: &Arc<Context>) -> Vec<SoftSet> {
    let cells = ctx.cells();
    (0..1usize << cells)
        .map(|v| SoftSet::from_bits(ctx, Bits::from_index(cells, v)))
        .collect()
}

/// Probe sets for per-topology laws: the full powerset when it is small,
/// otherwise a seeded sample.
fn probe_sets(ctx: &Arc<Context>, rng: &mut ChaCha8Rng) -> Vec<SoftSet> {
    if ctx.cells() <= 8 {
        all_sets(ctx)
    } else {
        (0..128).map(|_| random_soft_set(ctx, rng)).collect()
    }
}

fn finding_with_sets(ctx: &Arc<Context>, description: String, sets: &[SoftSet]) -> Finding {
    let mut ws = Workspace::new(ctx);
    for (i, set) in sets.iter().enumerate() {
        ws.add_set(&format!("F{}", i + 1), set.clone())
            .expect("generated names are fresh and unreserved");
    }
    Finding {
        description,
        workspace: ws,
    }
}

fn finding_with_families(
    ctx: &Arc<Context>,
    description: String,
    families: &[(String, Vec<SoftSet>)],
) -> Finding {
    Finding {
        description,
        workspace: Workspace::from_named_families(ctx, "F", families)
            .expect("computed families share the context"),
    }
}

fn topology_finding(ctx: &Arc<Context>, description: String, top: &SoftTopology) -> Finding {
    finding_with_families(
        ctx,
        description,
        &[("tau1".to_string(), top.opens().to_vec())],
    )
}

fn space_finding(ctx: &Arc<Context>, description: String, space: &SoftNSpace) -> Finding {
    let families: Vec<(String, Vec<SoftSet>)> = space
        .topologies()
        .iter()
        .enumerate()
        .map(|(i, t)| (format!("tau{}", i + 1), t.opens().to_vec()))
        .collect();
    finding_with_families(ctx, description, &families)
}

/// Exhaustive triples over a 2×2 table, then random triples: the lane for
/// the pure set algebra.
fn set_triple_law(
    budget: &EnumerationBudget,
    law: impl Fn(&SoftSet, &SoftSet, &SoftSet) -> bool + Sync + Send,
) -> Outcome {
    let ctx = Context::numbered(2, 2).expect("fixed lane shape");
    let sets = all_sets(&ctx);
    let k = sets.len();
    let total = k * k * k;
    let hit = exec::scan_first(total, |idx| {
        let (f, g, h) = (&sets[idx / (k * k)], &sets[idx / k % k], &sets[idx % k]);
        if law(f, g, h) {
            None
        } else {
            Some((idx, f.clone(), g.clone(), h.clone()))
        }
    });
    if let Some((idx, f, g, h)) = hit {
        return Outcome {
            pass: false,
            cases: idx as u64 + 1,
            finding: Some(finding_with_sets(
                &ctx,
                "the law fails for the sets F1, F2, F3".to_string(),
                &[f, g, h],
            )),
        };
    }
    let rctx = Context::numbered(budget.random_points, budget.random_parameters)
        .expect("budget shapes are positive");
    let hit = exec::scan_first(budget.trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(budget.seed, t as u64));
        let f = random_soft_set(&rctx, &mut rng);
        let g = random_soft_set(&rctx, &mut rng);
        let h = random_soft_set(&rctx, &mut rng);
        if law(&f, &g, &h) {
            None
        } else {
            Some((t, f, g, h))
        }
    });
    match hit {
        Some((t, f, g, h)) => Outcome {
            pass: false,
            cases: total as u64 + t as u64 + 1,
            finding: Some(finding_with_sets(
                &rctx,
                format!("the law fails for the sets F1, F2, F3 (trial {t})"),
                &[f, g, h],
            )),
        },
        None => Outcome {
            pass: true,
            cases: (total + budget.trials) as u64,
            finding: None,
        },
    }
}

fn random_topology_for_trial(ctx: &Arc<Context>, seed: u64) -> SoftTopology {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generators = rng.gen_range(0..=3);
    let sets: Vec<SoftSet> = (0..generators)
        .map(|_| random_soft_set(ctx, &mut rng))
        .collect();
    SoftTopology::generate(ctx, &sets).expect("generated sets share the context")
}

fn random_space_for_trial(ctx: &Arc<Context>, seed: u64) -> SoftNSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3);
    let topologies: Vec<SoftTopology> = (0..n)
        .map(|_| {
            let generators = rng.gen_range(0..=3);
            let sets: Vec<SoftSet> = (0..generators)
                .map(|_| random_soft_set(ctx, &mut rng))
                .collect();
            SoftTopology::generate(ctx, &sets).expect("generated sets share the context")
        })
        .collect();
    SoftNSpace::new(ctx, topologies).expect("at least one component")
}

/// Exhaustive topologies over every small shape, then random topologies:
/// the lane for per-topology laws. The law receives probe sets (the whole
/// powerset where feasible).
fn topology_law(
    budget: &EnumerationBudget,
    law: impl Fn(&SoftTopology, &[SoftSet]) -> Result<(), String> + Sync + Send,
) -> Outcome {
    let lane = lane_budget(budget);
    let mut cases = 0u64;
    for (points, parameters) in shapes_up_to(TOPOLOGY_ENUMERATION_LIMIT) {
        let ctx = Context::numbered(points, parameters).expect("positive shape");
        let probes = all_sets(&ctx);
        let topologies = enumerate_topologies(&ctx, &lane).expect("shape is within limits");
        let hit = exec::scan_first(topologies.len(), |i| {
            law(&topologies[i], &probes).err().map(|msg| (i, msg))
        });
        if let Some((i, msg)) = hit {
            return Outcome {
                pass: false,
                cases: cases + i as u64 + 1,
                finding: Some(topology_finding(&ctx, msg, &topologies[i])),
            };
        }
        cases += topologies.len() as u64;
    }
    let ctx = Context::numbered(budget.random_points, budget.random_parameters)
        .expect("budget shapes are positive");
    let hit = exec::scan_first(budget.trials, |t| {
        let seed = trial_seed(budget.seed, t as u64);
        let top = random_topology_for_trial(&ctx, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, 0x9E37));
        let probes = probe_sets(&ctx, &mut rng);
        law(&top, &probes).err().map(|msg| (t, msg, top))
    });
    match hit {
        Some((t, msg, top)) => Outcome {
            pass: false,
            cases: cases + t as u64 + 1,
            finding: Some(topology_finding(&ctx, format!("{msg} (trial {t})"), &top)),
        },
        None => Outcome {
            pass: true,
            cases: cases + budget.trials as u64,
            finding: None,
        },
    }
}

/// Exhaustive ordered pairs of topologies (N = 2) over every small shape,
/// then random spaces with 1 ≤ N ≤ 3: the lane for space laws.
fn space_law(
    budget: &EnumerationBudget,
    law: impl Fn(&SoftNSpace) -> Result<(), String> + Sync + Send,
) -> Outcome {
    let lane = lane_budget(budget);
    let mut cases = 0u64;
    for (points, parameters) in shapes_up_to(TOPOLOGY_ENUMERATION_LIMIT) {
        let ctx = Context::numbered(points, parameters).expect("positive shape");
        let topologies = enumerate_topologies(&ctx, &lane).expect("shape is within limits");
        let len = topologies.len();
        let hit = exec::scan_first(len * len, |idx| {
            let space = SoftNSpace::new(
                &ctx,
                vec![topologies[idx / len].clone(), topologies[idx % len].clone()],
            )
            .expect("two components over one context");
            law(&space).err().map(|msg| (idx, msg, space))
        });
        if let Some((idx, msg, space)) = hit {
            return Outcome {
                pass: false,
                cases: cases + idx as u64 + 1,
                finding: Some(space_finding(&ctx, msg, &space)),
            };
        }
        cases += (len * len) as u64;
    }
    let ctx = Context::numbered(budget.random_points, budget.random_parameters)
        .expect("budget shapes are positive");
    let hit = exec::scan_first(budget.trials, |t| {
        let space = random_space_for_trial(&ctx, trial_seed(budget.seed, t as u64));
        law(&space).err().map(|msg| (t, msg, space))
    });
    match hit {
        Some((t, msg, space)) => Outcome {
            pass: false,
            cases: cases + t as u64 + 1,
            finding: Some(space_finding(&ctx, format!("{msg} (trial {t})"), &space)),
        },
        None => Outcome {
            pass: true,
            cases: cases + budget.trials as u64,
            finding: None,
        },
    }
}

// ---------------------------------------------------------------------------
// Set algebra helpers (operands always share a context inside the lanes)
// ---------------------------------------------------------------------------

fn u(a: &SoftSet, b: &SoftSet) -> SoftSet {
    a.union(b).expect("lane operands share a context")
}

fn n(a: &SoftSet, b: &SoftSet) -> SoftSet {
    a.intersection(b).expect("lane operands share a context")
}

fn d(a: &SoftSet, b: &SoftSet) -> SoftSet {
    a.difference(b).expect("lane operands share a context")
}

fn le(a: &SoftSet, b: &SoftSet) -> bool {
    a.is_subset(b).expect("lane operands share a context")
}

fn bu(sets: &[SoftSet]) -> SoftSet {
    SoftSet::big_union(sets).expect("lane families are non-empty")
}

fn bn(sets: &[SoftSet]) -> SoftSet {
    SoftSet::big_intersection(sets).expect("lane families are non-empty")
}

// ---------------------------------------------------------------------------
// Entries: soft set algebra
// ---------------------------------------------------------------------------

fn subset_transitive(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        le(f, f) && (!(le(f, g) && le(g, h)) || le(f, h))
    })
}

fn idempotence_identities(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, _, _| {
        let null = SoftSet::null(f.context());
        let abs = SoftSet::absolute(f.context());
        u(f, f) == *f
            && u(f, &null) == *f
            && u(f, &abs) == abs
            && n(f, f) == *f
            && n(f, &null) == null
            && n(f, &abs) == *f
    })
}

fn commutativity(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, _| u(f, g) == u(g, f) && n(f, g) == n(g, f))
}

fn associativity_distributivity(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        u(&u(f, g), h) == u(f, &u(g, h))
            && n(&n(f, g), h) == n(f, &n(g, h))
            && n(f, &u(g, h)) == u(&n(f, g), &n(f, h))
            && u(f, &n(g, h)) == n(&u(f, g), &u(f, h))
    })
}

fn exclusion_contradiction(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, _, _| {
        u(f, &f.complement()).is_absolute() && n(f, &f.complement()).is_null()
    })
}

fn subset_via_operators(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, _| {
        let sub = le(f, g);
        sub == (n(f, g) == *f) && sub == (u(f, g) == *g)
    })
}

fn de_morgan(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, _| {
        u(f, g).complement() == n(&f.complement(), &g.complement())
            && n(f, g).complement() == u(&f.complement(), &g.complement())
            && f.complement().complement() == *f
            && SoftSet::null(f.context()).complement().is_absolute()
            && SoftSet::absolute(f.context()).complement().is_null()
    })
}

fn difference_laws(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, _| {
        let null = SoftSet::null(f.context());
        let abs = SoftSet::absolute(f.context());
        d(f, g) == n(f, &g.complement())
            && d(f, f) == null
            && d(f, &null) == *f
            && d(&null, f) == null
            && d(f, &abs) == null
            && d(&abs, f) == f.complement()
    })
}

fn generalized_fold(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        bu(&[f.clone()]) == *f
            && bn(&[f.clone()]) == *f
            && bu(&[f.clone(), g.clone()]) == u(f, g)
            && bn(&[f.clone(), g.clone()]) == n(f, g)
            && bu(&[f.clone(), g.clone(), h.clone()]) == u(&u(f, g), h)
            && bn(&[f.clone(), g.clone(), h.clone()]) == n(&n(f, g), h)
    })
}

fn family_bounds(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        let family = [f.clone(), g.clone(), h.clone()];
        let top = bu(&family);
        let bottom = bn(&family);
        family.iter().all(|s| le(s, &top) && le(&bottom, s)) && le(&bottom, &top)
    })
}

fn generalized_distributivity(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        n(f, &bu(&[g.clone(), h.clone()])) == bu(&[n(f, g), n(f, h)])
            && u(f, &bn(&[g.clone(), h.clone()])) == bn(&[u(f, g), u(f, h)])
    })
}

fn generalized_de_morgan(budget: &EnumerationBudget) -> Outcome {
    set_triple_law(budget, |f, g, h| {
        let family = [f.clone(), g.clone(), h.clone()];
        let complements = [f.complement(), g.complement(), h.complement()];
        bu(&family).complement() == bn(&complements)
            && bn(&family).complement() == bu(&complements)
    })
}

// ---------------------------------------------------------------------------
// Entries: single soft topologies
// ---------------------------------------------------------------------------

fn closed_family_laws(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, _| {
        let closed = top.closed_family();
        let contains = |s: &SoftSet| closed.binary_search(s).is_ok();
        if !contains(&SoftSet::null(top.context())) || !contains(&SoftSet::absolute(top.context()))
        {
            return Err("the closed family lacks the null or absolute set".to_string());
        }
        for i in 0..closed.len() {
            for j in i + 1..closed.len() {
                if !contains(&u(&closed[i], &closed[j])) {
                    return Err(format!(
                        "the union of closed sets {} and {} is not closed",
                        closed[i], closed[j]
                    ));
                }
                if !contains(&n(&closed[i], &closed[j])) {
                    return Err(format!(
                        "the intersection of closed sets {} and {} is not closed",
                        closed[i], closed[j]
                    ));
                }
            }
        }
        Ok(())
    })
}

fn meet_is_topology(budget: &EnumerationBudget) -> Outcome {
    space_law(budget, |space| {
        let meet = SoftTopology::meet(space.topologies())
            .expect("spaces carry at least one component");
        if !meet.revalidate().is_valid() {
            return Err("the meet violates the axioms".to_string());
        }
        for open in meet.opens() {
            for t in space.topologies() {
                if !t.is_open(open).expect("shared context") {
                    return Err(format!("meet member {open} is not open in every component"));
                }
            }
        }
        // Completeness: anything open everywhere must be in the meet.
        for open in space.topologies()[0].opens() {
            let everywhere = space.topologies()[1..]
                .iter()
                .all(|t| t.is_open(open).expect("shared context"));
            if everywhere && !meet.is_open(open).expect("shared context") {
                return Err(format!("common open {open} is missing from the meet"));
            }
        }
        Ok(())
    })
}

fn neighborhood_axioms(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, probes| {
        let ctx = top.context();
        let cells = ctx.cells();
        let complete = probes.len() == 1 << cells;
        // Neighbourhood flags per soft point per probe set.
        let points: Vec<SoftPoint> = SoftSet::absolute(ctx).soft_points();
        let flags: Vec<Vec<bool>> = points
            .iter()
            .map(|p| {
                probes
                    .iter()
                    .map(|s| top.is_neighborhood(s, p).expect("shared context"))
                    .collect()
            })
            .collect();
        let probe_points: Vec<Vec<usize>> = probes
            .iter()
            .map(|s| s.bits().iter_ones().collect())
            .collect();
        for (pi, p) in points.iter().enumerate() {
            for (si, s) in probes.iter().enumerate() {
                if !flags[pi][si] {
                    continue;
                }
                // (i) a neighbourhood of p contains p
                if !s.contains_soft_point(p).expect("shared context") {
                    return Err(format!("{s} is a neighbourhood of {p} without containing it"));
                }
                // (iii) supersets of a neighbourhood are neighbourhoods
                for (ti, t) in probes.iter().enumerate() {
                    if le(s, t) && !flags[pi][ti] {
                        return Err(format!(
                            "{t} contains the neighbourhood {s} of {p} but is not one"
                        ));
                    }
                }
                // (ii) intersections of neighbourhoods are neighbourhoods
                if complete {
                    for (ti, t) in probes.iter().enumerate() {
                        if flags[pi][ti] {
                            let both = n(s, t);
                            if !flags[pi][both.bits().to_index()] {
                                return Err(format!(
                                    "{s} and {t} are neighbourhoods of {p} but their \
                                     intersection is not"
                                ));
                            }
                        }
                    }
                }
                // (iv) some neighbourhood M of p has s as a neighbourhood of
                // every soft point of M. Soft points enumerate cells in the
                // same parameter-major order as the flag rows, so `flags` can
                // be indexed by cell. Sound only over the full powerset: a
                // sampled pool may miss the witnessing open.
                if complete {
                    let witness = probes.iter().enumerate().any(|(mi, _)| {
                        flags[pi][mi]
                            && probe_points[mi].iter().all(|&cell| flags[cell][si])
                    });
                    if !witness {
                        return Err(format!(
                            "no neighbourhood of {p} inside which {s} is a neighbourhood \
                             of every point"
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

fn open_via_neighborhoods(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, probes| {
        for s in probes {
            let direct = top.is_open(s).expect("shared context");
            let via = top.is_open_via_neighborhoods(s).expect("shared context");
            if direct != via {
                return Err(format!(
                    "openness of {s} disagrees with the neighbourhood characterisation"
                ));
            }
        }
        Ok(())
    })
}

fn closure_basics(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, probes| {
        let null = SoftSet::null(top.context());
        let abs = SoftSet::absolute(top.context());
        if !top.closure(&null).expect("shared context").is_null() {
            return Err("the closure of the null set is not null".to_string());
        }
        if !top.closure(&abs).expect("shared context").is_absolute() {
            return Err("the closure of the absolute set is not absolute".to_string());
        }
        for s in probes {
            let cl = top.closure(s).expect("shared context");
            if !le(s, &cl) {
                return Err(format!("{s} is not contained in its closure"));
            }
            if top.is_closed(s).expect("shared context") != (cl == *s) {
                return Err(format!("{s}: closedness disagrees with closure fixpoint"));
            }
            if top.closure(&cl).expect("shared context") != cl {
                return Err(format!("the closure of {s} is not idempotent"));
            }
        }
        Ok(())
    })
}

fn closure_algebra(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, probes| {
        let complete = probes.len() == 1 << top.context().cells();
        let closures: Vec<SoftSet> = probes
            .iter()
            .map(|s| top.closure(s).expect("shared context"))
            .collect();
        for (i, s) in probes.iter().enumerate() {
            for (j, t) in probes.iter().enumerate() {
                if le(s, t) && !le(&closures[i], &closures[j]) {
                    return Err(format!("closure is not monotone on {s} and {t}"));
                }
                let join = u(s, t);
                let cl_join = if complete {
                    closures[join.bits().to_index()].clone()
                } else {
                    top.closure(&join).expect("shared context")
                };
                if cl_join != u(&closures[i], &closures[j]) {
                    return Err(format!(
                        "the closure of the union of {s} and {t} is not the union of closures"
                    ));
                }
                let meet = n(s, t);
                let cl_meet = if complete {
                    closures[meet.bits().to_index()].clone()
                } else {
                    top.closure(&meet).expect("shared context")
                };
                if !le(&cl_meet, &n(&closures[i], &closures[j])) {
                    return Err(format!(
                        "the closure of the intersection of {s} and {t} exceeds the \
                         intersection of closures"
                    ));
                }
            }
        }
        Ok(())
    })
}

fn separation_chain(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, _| {
        let (t0, t1, t2) = (top.is_t0().holds, top.is_t1().holds, top.is_t2().holds);
        if t2 && !t1 {
            return Err("a T2 topology fails T1".to_string());
        }
        if t1 && !t0 {
            return Err("a T1 topology fails T0".to_string());
        }
        Ok(())
    })
}

fn t1_iff_points_closed(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, _| {
        if top.is_t1().holds != top.points_closed() {
            return Err("T1 disagrees with all soft points being closed".to_string());
        }
        Ok(())
    })
}

fn crisp_slices(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, _| {
        let points = top.context().point_count();
        for e in 0..top.context().parameter_count() {
            let slice = top.crisp_slice(e).expect("parameter in range");
            let family = CrispFamily::new(points, &slice).expect("indices in range");
            if !family.is_topology() {
                return Err(format!(
                    "the crisp slice at parameter {} is not a topology",
                    top.context().parameter(e)
                ));
            }
        }
        Ok(())
    })
}

fn relative_topology(budget: &EnumerationBudget) -> Outcome {
    topology_law(budget, |top, _| {
        let points = top.context().point_count();
        for mask in 1..1usize << points {
            let carrier: Vec<usize> = (0..points).filter(|&x| mask >> x & 1 == 1).collect();
            let rel = top.relative(&carrier).expect("non-empty carrier");
            if !rel.revalidate().is_valid() {
                return Err(format!("the subspace on carrier {carrier:?} is not a topology"));
            }
            for open in top.opens() {
                let restricted = open.restrict(&carrier).expect("carrier in range");
                // The restriction, read over the subspace context.
                let image = rel
                    .opens()
                    .iter()
                    .any(|o| o.rows().iter().enumerate().all(|(e, row)| {
                        let full: Vec<usize> =
                            row.iter().map(|&x| carrier_point(&carrier, x)).collect();
                        full == restricted.row(e)
                    }));
                if !image {
                    return Err(format!(
                        "the restriction of {open} to {carrier:?} is missing from the subspace"
                    ));
                }
            }
            if carrier.len() == points && rel != *top {
                return Err("the subspace on the full carrier differs from the space".to_string());
            }
        }
        Ok(())
    })
}

fn carrier_point(carrier: &[usize], sub_index: usize) -> usize {
    carrier[sub_index]
}

fn union_not_topology_search(budget: &EnumerationBudget) -> Outcome {
    let ctx = Context::numbered(budget.random_points, budget.random_parameters)
        .expect("budget shapes are positive");
    let hit = exec::scan_first(budget.trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(budget.seed, t as u64));
        let a = random_topology_for_trial_rng(&ctx, &mut rng);
        let b = random_topology_for_trial_rng(&ctx, &mut rng);
        let mut pooled: Vec<SoftSet> = a.opens().to_vec();
        pooled.extend(b.opens().iter().cloned());
        let report = validate(&ctx, &pooled).expect("shared context");
        if report.is_valid() {
            None
        } else {
            Some((t, a, b, pooled, report))
        }
    });
    match hit {
        Some((t, a, b, pooled, report)) => {
            let violation = report.violation.expect("invalid reports carry a violation");
            let finding = finding_with_families(
                &ctx,
                format!(
                    "the plain union of tau1 and tau2 (declared as `union`) violates the \
                     axioms: {violation} (trial {t})"
                ),
                &[
                    ("tau1".to_string(), a.opens().to_vec()),
                    ("tau2".to_string(), b.opens().to_vec()),
                    ("union".to_string(), pooled),
                ],
            );
            Outcome {
                pass: true,
                cases: t as u64 + 1,
                finding: Some(finding),
            }
        }
        None => Outcome {
            pass: false,
            cases: budget.trials as u64,
            finding: None,
        },
    }
}

fn random_topology_for_trial_rng(ctx: &Arc<Context>, rng: &mut ChaCha8Rng) -> SoftTopology {
    let generators = rng.gen_range(1..=2);
    let sets: Vec<SoftSet> = (0..generators)
        .map(|_| random_soft_set(ctx, rng))
        .collect();
    SoftTopology::generate(ctx, &sets).expect("generated sets share the context")
}

fn product_equivalence(budget: &EnumerationBudget) -> Outcome {
    let _ = budget; // exhaustive by definition; the sweep is already complete
    let mut cases = 0u64;
    for (points, parameters) in shapes_up_to(TOPOLOGY_ENUMERATION_LIMIT) {
        let ctx = Context::numbered(points, parameters).expect("positive shape");
        let sets = all_sets(&ctx);
        let ids = sets.len();
        let candidates = 1usize << ids;
        let hit = exec::scan_first(candidates, |mask| {
            let family: Vec<SoftSet> = (0..ids)
                .filter(|&id| mask >> id & 1 == 1)
                .map(|id| sets[id].clone())
                .collect();
            let soft_valid = validate(&ctx, &family)
                .expect("shared context")
                .is_valid();
            let crisp_valid =
                CrispFamily::from_soft_family(ctx.cells(), &family).is_topology();
            if soft_valid == crisp_valid {
                None
            } else {
                Some((mask, family, soft_valid))
            }
        });
        if let Some((mask, family, soft_valid)) = hit {
            let finding = finding_with_families(
                &ctx,
                format!(
                    "family encoding {mask}: the soft axiom checker says {soft_valid}, \
                     the crisp product checker disagrees"
                ),
                &[("family".to_string(), family)],
            );
            return Outcome {
                pass: false,
                cases: cases + mask as u64 + 1,
                finding: Some(finding),
            };
        }
        cases += candidates as u64;
    }
    Outcome {
        pass: true,
        cases,
        finding: None,
    }
}

fn topology_counts(budget: &EnumerationBudget) -> Outcome {
    let lane = lane_budget(budget);
    let mut cases = 0u64;
    for cells in 1..=TOPOLOGY_ENUMERATION_LIMIT {
        let census = crisp::count_topologies(cells).expect("cells within census limit");
        for (points, parameters) in shapes_up_to(TOPOLOGY_ENUMERATION_LIMIT) {
            if points * parameters != cells {
                continue;
            }
            let ctx = Context::numbered(points, parameters).expect("positive shape");
            let found = enumerate_topologies(&ctx, &lane)
                .expect("shape is within limits")
                .len() as u64;
            cases += found;
            if found != census {
                return Outcome {
                    pass: false,
                    cases,
                    finding: Some(Finding {
                        description: format!(
                            "over a {points}×{parameters} table the enumerator finds {found} \
                             soft topologies but the dense census finds {census}"
                        ),
                        workspace: Workspace::new(&ctx),
                    }),
                };
            }
        }
    }
    Outcome {
        pass: true,
        cases,
        finding: None,
    }
}

// ---------------------------------------------------------------------------
// Entries: soft N-spaces
// ---------------------------------------------------------------------------

fn nopen_family_inclusions(budget: &EnumerationBudget) -> Outcome {
    space_law(budget, |space| {
        let sup = space.supremum();
        for t in space.topologies() {
            for open in t.opens() {
                if !space.is_n_open(open).expect("shared context") {
                    return Err(format!("component open {open} is not N-open"));
                }
                if !sup.is_open(open).expect("shared context") {
                    return Err(format!("component open {open} is not open in the supremum"));
                }
                let closed = open.complement();
                if !space.is_n_closed(&closed).expect("shared context") {
                    return Err(format!("component closed set {closed} is not N-closed"));
                }
            }
        }
        Ok(())
    })
}

fn componentwise_nwise(budget: &EnumerationBudget, axiom_index: usize) -> Outcome {
    space_law(budget, move |space| {
        let report = |t: &SoftTopology| match axiom_index {
            0 => t.is_t0().holds,
            1 => t.is_t1().holds,
            _ => t.is_t2().holds,
        };
        let any_component = space.topologies().iter().any(report);
        if !any_component {
            return Ok(());
        }
        let nwise = space.nwise(crate::topology::SepAxiom::ALL[axiom_index]);
        if !nwise.holds {
            let (p, q) = nwise.witness.expect("failed axioms carry a witness");
            return Err(format!(
                "a component satisfies the axiom but the space fails it N-wise at {p}, {q}"
            ));
        }
        Ok(())
    })
}

fn nwise_supremum(budget: &EnumerationBudget, axiom_index: usize) -> Outcome {
    space_law(budget, move |space| {
        let axiom = crate::topology::SepAxiom::ALL[axiom_index];
        if !space.nwise(axiom).holds {
            return Ok(());
        }
        let sup = space.supremum();
        let holds = match axiom_index {
            0 => sup.is_t0().holds,
            1 => sup.is_t1().holds,
            _ => sup.is_t2().holds,
        };
        if !holds {
            return Err(format!(
                "the space is N-wise {} but its supremum is not",
                axiom.name()
            ));
        }
        Ok(())
    })
}

fn nwise_hereditary(budget: &EnumerationBudget, axiom_index: usize) -> Outcome {
    space_law(budget, move |space| {
        let axiom = crate::topology::SepAxiom::ALL[axiom_index];
        if !space.nwise(axiom).holds {
            return Ok(());
        }
        let points = space.context().point_count();
        for mask in 1..1usize << points {
            let carrier: Vec<usize> = (0..points).filter(|&x| mask >> x & 1 == 1).collect();
            let sub = space.n_subspace(&carrier).expect("non-empty carrier");
            if !sub.nwise(axiom).holds {
                return Err(format!(
                    "the space is N-wise {} but its subspace on {carrier:?} is not",
                    axiom.name()
                ));
            }
        }
        Ok(())
    })
}

fn componentwise_nwise_t0(budget: &EnumerationBudget) -> Outcome {
    componentwise_nwise(budget, 0)
}

fn componentwise_nwise_t1(budget: &EnumerationBudget) -> Outcome {
    componentwise_nwise(budget, 1)
}

fn componentwise_nwise_t2(budget: &EnumerationBudget) -> Outcome {
    componentwise_nwise(budget, 2)
}

fn nwise_supremum_t0(budget: &EnumerationBudget) -> Outcome {
    nwise_supremum(budget, 0)
}

fn nwise_supremum_t1(budget: &EnumerationBudget) -> Outcome {
    nwise_supremum(budget, 1)
}

fn nwise_supremum_t2(budget: &EnumerationBudget) -> Outcome {
    nwise_supremum(budget, 2)
}

fn nwise_hereditary_t0(budget: &EnumerationBudget) -> Outcome {
    nwise_hereditary(budget, 0)
}

fn nwise_hereditary_t1(budget: &EnumerationBudget) -> Outcome {
    nwise_hereditary(budget, 1)
}

fn nwise_hereditary_t2(budget: &EnumerationBudget) -> Outcome {
    nwise_hereditary(budget, 2)
}

fn nwise_chain(budget: &EnumerationBudget) -> Outcome {
    space_law(budget, |space| {
        let t0 = space.nwise_t0().holds;
        let t1 = space.nwise_t1().holds;
        let t2 = space.nwise_t2().holds;
        if t2 && !t1 {
            return Err("an N-wise T2 space fails N-wise T1".to_string());
        }
        if t1 && !t0 {
            return Err("an N-wise T1 space fails N-wise T0".to_string());
        }
        Ok(())
    })
}

fn pooled_t0_search(budget: &EnumerationBudget) -> Outcome {
    let ctx = Context::numbered(budget.random_points, budget.random_parameters)
        .expect("budget shapes are positive");
    let hit = exec::scan_first(budget.trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(budget.seed, t as u64));
        let a = random_topology_for_trial_rng(&ctx, &mut rng);
        let b = random_topology_for_trial_rng(&ctx, &mut rng);
        if a.is_t0().holds || b.is_t0().holds {
            return None;
        }
        let space = SoftNSpace::new(&ctx, vec![a, b]).expect("two components");
        if space.nwise_t0().holds {
            Some((t, space))
        } else {
            None
        }
    });
    match hit {
        Some((t, space)) => {
            let finding = space_finding(
                &ctx,
                format!(
                    "a 2-wise T0 space with two non-T0 components: the converse of the \
                     componentwise implication fails (trial {t})"
                ),
                &space,
            );
            Outcome {
                pass: true,
                cases: t as u64 + 1,
                finding: Some(finding),
            }
        }
        None => Outcome {
            pass: false,
            cases: budget.trials as u64,
            finding: None,
        },
    }
}

fn pooled_trace_consistency(budget: &EnumerationBudget) -> Outcome {
    space_law(budget, |space| {
        let families: Vec<Vec<SoftSet>> = space
            .topologies()
            .iter()
            .map(|t| t.opens().to_vec())
            .collect();
        let pooled =
            PooledFamily::new(space.context(), &families).expect("shared context");
        let report = space.nwise_t0();
        let trace = pooled.t0_trace();
        let first_unseparated = trace
            .iter()
            .find(|row| row.separator.is_none())
            .map(|row| (row.first.clone(), row.second.clone()));
        if report.holds != first_unseparated.is_none() {
            return Err("the pooled trace disagrees with the N-wise T0 verdict".to_string());
        }
        if let (Some((p, q)), Some((wp, wq))) = (first_unseparated, report.witness) {
            if p != wp || q != wq {
                return Err(format!(
                    "the first unseparated pair in the trace ({p}, {q}) differs from the \
                     reported witness ({wp}, {wq})"
                ));
            }
        }
        Ok(())
    })
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "subset-transitive",
        summary: "soft inclusion is reflexive and transitive",
        run: subset_transitive,
    },
    Entry {
        name: "idempotence-identities",
        summary: "union and intersection are idempotent with null/absolute identities",
        run: idempotence_identities,
    },
    Entry {
        name: "commutativity",
        summary: "union and intersection commute",
        run: commutativity,
    },
    Entry {
        name: "associativity-distributivity",
        summary: "union and intersection associate and distribute over each other",
        run: associativity_distributivity,
    },
    Entry {
        name: "exclusion-contradiction",
        summary: "a soft set joins with its complement to the absolute set and meets it in null",
        run: exclusion_contradiction,
    },
    Entry {
        name: "subset-via-operators",
        summary: "inclusion, intersection-absorption and union-absorption coincide",
        run: subset_via_operators,
    },
    Entry {
        name: "de-morgan",
        summary: "complementation is involutive and swaps union with intersection",
        run: de_morgan,
    },
    Entry {
        name: "difference-laws",
        summary: "difference is intersection with the complement, with its degenerate cases",
        run: difference_laws,
    },
    Entry {
        name: "generalized-fold",
        summary: "family union and intersection agree with iterated binary operations",
        run: generalized_fold,
    },
    Entry {
        name: "family-bounds",
        summary: "every member sits between the family intersection and the family union",
        run: family_bounds,
    },
    Entry {
        name: "generalized-distributivity",
        summary: "binary operations distribute over family union and intersection",
        run: generalized_distributivity,
    },
    Entry {
        name: "generalized-de-morgan",
        summary: "complementation swaps family union with family intersection",
        run: generalized_de_morgan,
    },
    Entry {
        name: "closed-family-laws",
        summary: "closed sets contain null and absolute and are closed under union and intersection",
        run: closed_family_laws,
    },
    Entry {
        name: "meet-is-topology",
        summary: "the intersection of soft topologies is a soft topology (their meet)",
        run: meet_is_topology,
    },
    Entry {
        name: "union-not-topology-search",
        summary: "search: the plain union of two soft topologies can violate the axioms",
        run: union_not_topology_search,
    },
    Entry {
        name: "neighborhood-axioms",
        summary: "soft neighbourhood systems satisfy the four neighbourhood axioms",
        run: neighborhood_axioms,
    },
    Entry {
        name: "open-via-neighborhoods",
        summary: "a soft set is open exactly when it neighbours each of its points",
        run: open_via_neighborhoods,
    },
    Entry {
        name: "closure-basics",
        summary: "closure fixes null/absolute, contains its argument, detects closedness, idempotent",
        run: closure_basics,
    },
    Entry {
        name: "closure-algebra",
        summary: "closure is monotone, additive over unions and subadditive over intersections",
        run: closure_algebra,
    },
    Entry {
        name: "separation-chain",
        summary: "soft T2 implies soft T1 implies soft T0",
        run: separation_chain,
    },
    Entry {
        name: "t1-iff-points-closed",
        summary: "soft T1 holds exactly when every soft point is closed",
        run: t1_iff_points_closed,
    },
    Entry {
        name: "product-equivalence",
        summary: "a family is a soft topology exactly when its graphs form a crisp topology",
        run: product_equivalence,
    },
    Entry {
        name: "topology-counts",
        summary: "the enumerator and the dense crisp census agree on topology counts",
        run: topology_counts,
    },
    Entry {
        name: "crisp-slices",
        summary: "every parameterwise slice of a soft topology is a crisp topology",
        run: crisp_slices,
    },
    Entry {
        name: "relative-topology",
        summary: "restriction to a carrier yields a soft topology containing every restriction",
        run: relative_topology,
    },
    Entry {
        name: "nopen-family-inclusions",
        summary: "component opens are N-open and open in the supremum; dually for closed sets",
        run: nopen_family_inclusions,
    },
    Entry {
        name: "componentwise-nwise-t0",
        summary: "a space with a soft T0 component is N-wise T0",
        run: componentwise_nwise_t0,
    },
    Entry {
        name: "componentwise-nwise-t1",
        summary: "a space with a soft T1 component is N-wise T1",
        run: componentwise_nwise_t1,
    },
    Entry {
        name: "componentwise-nwise-t2",
        summary: "a space with a soft T2 component is N-wise T2",
        run: componentwise_nwise_t2,
    },
    Entry {
        name: "nwise-supremum-t0",
        summary: "an N-wise T0 space has a soft T0 supremum",
        run: nwise_supremum_t0,
    },
    Entry {
        name: "nwise-supremum-t1",
        summary: "an N-wise T1 space has a soft T1 supremum",
        run: nwise_supremum_t1,
    },
    Entry {
        name: "nwise-supremum-t2",
        summary: "an N-wise T2 space has a soft T2 supremum",
        run: nwise_supremum_t2,
    },
    Entry {
        name: "nwise-hereditary-t0",
        summary: "N-wise T0 passes to every componentwise subspace",
        run: nwise_hereditary_t0,
    },
    Entry {
        name: "nwise-hereditary-t1",
        summary: "N-wise T1 passes to every componentwise subspace",
        run: nwise_hereditary_t1,
    },
    Entry {
        name: "nwise-hereditary-t2",
        summary: "N-wise T2 passes to every componentwise subspace",
        run: nwise_hereditary_t2,
    },
    Entry {
        name: "nwise-chain",
        summary: "N-wise T2 implies N-wise T1 implies N-wise T0",
        run: nwise_chain,
    },
    Entry {
        name: "pooled-trace-consistency",
        summary: "the pooled T0 trace agrees with the N-wise T0 verdict and witness",
        run: pooled_trace_consistency,
    },
    Entry {
        name: "pooled-t0-search",
        summary: "search: a 2-wise T0 space need not have any T0 component",
        run: pooled_t0_search,
    },
];
