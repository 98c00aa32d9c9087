//! Soft topologies over a finite context.
//!
//! A soft topology is a family of soft sets containing the null and absolute
//! soft sets and closed under pairwise intersection and union (over a finite
//! context, closure under pairwise union already gives closure under
//! arbitrary union). [`validate`] checks the four axioms over any family and
//! reports the first violation in canonical scan order; [`SoftTopology`]
//! values are valid by construction, so every operation on them can assume
//! the axioms.
//!
//! Alongside the axioms this module implements the derived machinery: closed
//! sets and soft closure, soft neighbourhoods, the meet / generated /
//! join lattice operations, parameterwise crisp slices, the product-space
//! reading of a family, relative (subspace) topologies, and the soft
//! separation axioms T0, T1 and T2 with canonical-first witnesses.

use crate::bits::Bits;
use crate::context::{ensure_same, Context};
use crate::crisp::CrispFamily;
use crate::error::Error;
use crate::exec;
use crate::softset::{SoftPoint, SoftSet};
use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::Arc;

/// Largest membership-table size for which the discrete soft topology may be
/// materialised (`2^cells` soft sets).
pub const DISCRETE_LIMIT: usize = 20;

/// Which topology axiom a family fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// The null soft set is missing.
    MissingNull,
    /// The absolute soft set is missing.
    MissingAbsolute,
    /// The union of two members is missing.
    MissingUnion,
    /// The intersection of two members is missing.
    MissingIntersection,
}

/// The first axiom violation found in a family, in canonical scan order:
/// null, absolute, then unordered member pairs in declaration order with the
/// union checked before the intersection.
#[derive(Debug, Clone)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Positions of the offending pair in the family as given (first
    /// occurrences, when the family declares duplicates). `None` for the
    /// null / absolute axioms.
    pub operands: Option<(usize, usize)>,
    /// The soft set that the axiom requires but the family lacks.
    pub missing: SoftSet,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            ViolationKind::MissingNull => write!(f, "the null soft set is missing"),
            ViolationKind::MissingAbsolute => write!(f, "the absolute soft set is missing"),
            ViolationKind::MissingUnion => {
                let (i, j) = self.operands.expect("union violation carries operands");
                write!(
                    f,
                    "the union of members {} and {} is missing: {}",
                    i + 1,
                    j + 1,
                    self.missing
                )
            }
            ViolationKind::MissingIntersection => {
                let (i, j) = self.operands.expect("intersection violation carries operands");
                write!(
                    f,
                    "the intersection of members {} and {} is missing: {}",
                    i + 1,
                    j + 1,
                    self.missing
                )
            }
        }
    }
}

/// Outcome of checking the soft topology axioms over a family.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    /// Number of distinct soft sets in the family.
    pub distinct_members: usize,
    /// The first violation in canonical order, or `None` when the family is
    /// a soft topology.
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.violation {
            None => write!(f, "valid soft topology ({} members)", self.distinct_members),
            Some(v) => write!(f, "{v}"),
        }
    }
}

/// Checks the soft topology axioms over an arbitrary family.
///
/// The scan order is fixed so that the reported violation is deterministic:
/// the null axiom, the absolute axiom, then every unordered pair of distinct
/// members in declaration order, checking the pair's union before its
/// intersection. Duplicate declarations collapse to their first occurrence.
pub fn validate(ctx: &Arc<Context>, family: &[SoftSet]) -> Result<ValidationReport, Error> {
    for set in family {
        ensure_same(ctx, set.context())?;
    }
    // Deduplicate, remembering the original position of each first occurrence.
    let mut members: Vec<(usize, &SoftSet)> = Vec::new();
    let mut seen: BTreeSet<&Bits> = BTreeSet::new();
    for (i, set) in family.iter().enumerate() {
        if seen.insert(set.bits()) {
            members.push((i, set));
        }
    }
    let present = |bits: &Bits| seen.contains(bits);

    let null = SoftSet::null(ctx);
    if !present(null.bits()) {
        return Ok(ValidationReport {
            distinct_members: members.len(),
            violation: Some(Violation {
                kind: ViolationKind::MissingNull,
                operands: None,
                missing: null,
            }),
        });
    }
    let absolute = SoftSet::absolute(ctx);
    if !present(absolute.bits()) {
        return Ok(ValidationReport {
            distinct_members: members.len(),
            violation: Some(Violation {
                kind: ViolationKind::MissingAbsolute,
                operands: None,
                missing: absolute,
            }),
        });
    }

    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let (pos_a, set_a) = members[a];
            let (pos_b, set_b) = members[b];
            let union = set_a.bits().or(set_b.bits());
            if !present(&union) {
                return Ok(ValidationReport {
                    distinct_members: members.len(),
                    violation: Some(Violation {
                        kind: ViolationKind::MissingUnion,
                        operands: Some((pos_a, pos_b)),
                        missing: SoftSet::from_bits(ctx, union),
                    }),
                });
            }
            let inter = set_a.bits().and(set_b.bits());
            if !present(&inter) {
                return Ok(ValidationReport {
                    distinct_members: members.len(),
                    violation: Some(Violation {
                        kind: ViolationKind::MissingIntersection,
                        operands: Some((pos_a, pos_b)),
                        missing: SoftSet::from_bits(ctx, inter),
                    }),
                });
            }
        }
    }

    Ok(ValidationReport {
        distinct_members: members.len(),
        violation: None,
    })
}

/// A soft separation axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SepAxiom {
    T0,
    T1,
    T2,
}

impl SepAxiom {
    pub const ALL: [SepAxiom; 3] = [SepAxiom::T0, SepAxiom::T1, SepAxiom::T2];

    pub fn name(self) -> &'static str {
        match self {
            SepAxiom::T0 => "t0",
            SepAxiom::T1 => "t1",
            SepAxiom::T2 => "t2",
        }
    }
}

impl FromStr for SepAxiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t0" | "T0" => Ok(SepAxiom::T0),
            "t1" | "T1" => Ok(SepAxiom::T1),
            "t2" | "T2" => Ok(SepAxiom::T2),
            other => Err(format!("unknown separation axiom `{other}`")),
        }
    }
}

/// Outcome of a separation-axiom check.
///
/// When the axiom fails, `witness` is the first offending pair of distinct
/// soft points in canonical order (parameter-major, point-minor; for T1 the
/// pair is ordered, for T0 and T2 it is the unordered pair `(p, q)` with
/// `p < q`).
#[derive(Debug, Clone)]
pub struct SeparationReport {
    pub axiom: SepAxiom,
    pub holds: bool,
    pub witness: Option<(SoftPoint, SoftPoint)>,
}

/// Scans point pairs for one that the opens fail to separate, returning the
/// first failure as a pair of cell indices.
///
/// This is the engine behind every T0/T1/T2 check in the crate, including
/// the N-space variants: an axiom check never looks at anything but a family
/// of open membership tables.
pub(crate) fn first_unseparated_pair(
    cells: usize,
    opens: &[&Bits],
    axiom: SepAxiom,
) -> Option<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = match axiom {
        // T1 quantifies over ordered pairs; T0 and T2 are symmetric.
        SepAxiom::T1 => (0..cells)
            .flat_map(|a| (0..cells).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect(),
        _ => (0..cells)
            .flat_map(|a| (a + 1..cells).map(move |b| (a, b)))
            .collect(),
    };
    exec::scan_first(pairs.len(), |k| {
        let (a, b) = pairs[k];
        let separated = match axiom {
            SepAxiom::T0 => opens.iter().any(|o| o.get(a) != o.get(b)),
            SepAxiom::T1 => opens.iter().any(|o| o.get(a) && !o.get(b)),
            SepAxiom::T2 => opens.iter().any(|oa| {
                oa.get(a) && opens.iter().any(|ob| ob.get(b) && !oa.intersects(ob))
            }),
        };
        if separated {
            None
        } else {
            Some((a, b))
        }
    })
}

pub(crate) fn separation_report(
    ctx: &Arc<Context>,
    opens: &[&Bits],
    axiom: SepAxiom,
) -> SeparationReport {
    let witness = first_unseparated_pair(ctx.cells(), opens, axiom)
        .map(|(a, b)| (SoftPoint::from_cell(ctx, a), SoftPoint::from_cell(ctx, b)));
    SeparationReport {
        axiom,
        holds: witness.is_none(),
        witness,
    }
}

/// A soft topology: a family of soft open sets satisfying the axioms.
///
/// Values are valid by construction and keep their opens sorted in canonical
/// order, so listings, comparisons and membership tests are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftTopology {
    ctx: Arc<Context>,
    opens: Vec<SoftSet>,
}

impl SoftTopology {
    /// Builds a soft topology from a family, after checking the axioms.
    ///
    /// Duplicate members are collapsed. On failure the error carries the
    /// full [`ValidationReport`].
    pub fn new(ctx: &Arc<Context>, family: &[SoftSet]) -> Result<SoftTopology, Error> {
        let report = validate(ctx, family)?;
        if !report.is_valid() {
            return Err(Error::InvalidTopology(Box::new(report)));
        }
        let mut opens: Vec<SoftSet> = family.to_vec();
        opens.sort();
        opens.dedup();
        Ok(SoftTopology {
            ctx: Arc::clone(ctx),
            opens,
        })
    }

    /// Wraps a family already known to satisfy the axioms (sorted or not).
    pub(crate) fn from_valid(ctx: &Arc<Context>, mut opens: Vec<SoftSet>) -> SoftTopology {
        opens.sort();
        opens.dedup();
        debug_assert!(validate(ctx, &opens).map(|r| r.is_valid()).unwrap_or(false));
        SoftTopology {
            ctx: Arc::clone(ctx),
            opens,
        }
    }

    /// The indiscrete soft topology `{null, absolute}`.
    pub fn indiscrete(ctx: &Arc<Context>) -> SoftTopology {
        SoftTopology::from_valid(ctx, vec![SoftSet::null(ctx), SoftSet::absolute(ctx)])
    }

    /// The discrete soft topology: every soft set over the context.
    ///
    /// Materialises `2^cells` soft sets, so it is guarded by
    /// [`DISCRETE_LIMIT`].
    pub fn discrete(ctx: &Arc<Context>) -> Result<SoftTopology, Error> {
        let cells = ctx.cells();
        if cells > DISCRETE_LIMIT {
            return Err(Error::TooLarge {
                what: "the discrete soft topology",
                cells,
                limit: DISCRETE_LIMIT,
            });
        }
        let opens: Vec<SoftSet> = (0..1usize << cells)
            .map(|v| SoftSet::from_bits(ctx, Bits::from_index(cells, v)))
            .collect();
        Ok(SoftTopology {
            ctx: Arc::clone(ctx),
            opens,
        })
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// The soft open sets, in canonical order.
    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    /// Number of soft open sets.
    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    /// Is the soft set open in this topology?
    pub fn is_open(&self, set: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, set.context())?;
        Ok(self.contains_bits(set.bits()))
    }

    /// Is the soft set closed (its complement open)?
    pub fn is_closed(&self, set: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, set.context())?;
        Ok(self.contains_bits(&set.bits().not()))
    }

    fn contains_bits(&self, bits: &Bits) -> bool {
        self.opens
            .binary_search_by(|open| open.bits().cmp(bits))
            .is_ok()
    }

    /// The family of soft closed sets (complements of the opens), in
    /// canonical order.
    pub fn closed_family(&self) -> Vec<SoftSet> {
        let mut closed: Vec<SoftSet> = self
            .opens
            .iter()
            .map(|o| SoftSet::from_bits(&self.ctx, o.bits().not()))
            .collect();
        closed.sort();
        closed
    }

    /// Soft closure: the intersection of all soft closed supersets.
    ///
    /// The absolute soft set is always a closed superset, so the
    /// intersection is over a non-empty family.
    pub fn closure(&self, set: &SoftSet) -> Result<SoftSet, Error> {
        ensure_same(&self.ctx, set.context())?;
        let mut acc = Bits::ones(self.ctx.cells());
        for open in &self.opens {
            let closed = open.bits().not();
            if set.bits().is_subset(&closed) {
                acc = acc.and(&closed);
            }
        }
        Ok(SoftSet::from_bits(&self.ctx, acc))
    }

    /// Is `neighborhood` a soft neighbourhood of the soft point `p` — is
    /// there a soft open set containing `p` and contained in `neighborhood`?
    pub fn is_neighborhood(&self, neighborhood: &SoftSet, p: &SoftPoint) -> Result<bool, Error> {
        ensure_same(&self.ctx, neighborhood.context())?;
        ensure_same(&self.ctx, p.context())?;
        let cell = p.cell();
        Ok(self
            .opens
            .iter()
            .any(|open| open.bits().get(cell) && open.bits().is_subset(neighborhood.bits())))
    }

    /// The neighbourhood characterisation of openness: a soft set is open
    /// exactly when it is a neighbourhood of each of its soft points.
    pub fn is_open_via_neighborhoods(&self, set: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, set.context())?;
        for cell in set.bits().iter_ones() {
            let p = SoftPoint::from_cell(&self.ctx, cell);
            if !self.is_neighborhood(set, &p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The meet of a non-empty family of soft topologies over one context:
    /// the plain intersection of their open families (always a soft
    /// topology).
    pub fn meet(topologies: &[SoftTopology]) -> Result<SoftTopology, Error> {
        let first = topologies.first().ok_or(Error::EmptyFamily)?;
        for t in &topologies[1..] {
            ensure_same(&first.ctx, &t.ctx)?;
        }
        let opens: Vec<SoftSet> = first
            .opens
            .iter()
            .filter(|open| topologies[1..].iter().all(|t| t.contains_bits(open.bits())))
            .cloned()
            .collect();
        Ok(SoftTopology::from_valid(&first.ctx, opens))
    }

    /// The coarsest soft topology containing every set of `family`.
    ///
    /// Seeds the family with the null and absolute soft sets, then
    /// alternates pairwise-intersection and pairwise-union closure passes
    /// until a joint fixpoint is reached.
    pub fn generate(ctx: &Arc<Context>, family: &[SoftSet]) -> Result<SoftTopology, Error> {
        for set in family {
            ensure_same(ctx, set.context())?;
        }
        let mut sets: BTreeSet<Bits> = BTreeSet::new();
        sets.insert(Bits::zero(ctx.cells()));
        sets.insert(Bits::ones(ctx.cells()));
        sets.extend(family.iter().map(|s| s.bits().clone()));
        loop {
            let grew_meet = close_under(&mut sets, Bits::and);
            let grew_join = close_under(&mut sets, Bits::or);
            if !grew_meet && !grew_join {
                break;
            }
        }
        let opens: Vec<SoftSet> = sets
            .into_iter()
            .map(|bits| SoftSet::from_bits(ctx, bits))
            .collect();
        Ok(SoftTopology::from_valid(ctx, opens))
    }

    /// The join (supremum) of a non-empty family of soft topologies: the
    /// coarsest soft topology containing every member's opens. Unlike the
    /// meet, the plain union of the open families is generally **not** a
    /// soft topology, so the union must be closed up.
    pub fn join(topologies: &[SoftTopology]) -> Result<SoftTopology, Error> {
        let first = topologies.first().ok_or(Error::EmptyFamily)?;
        let mut family: Vec<SoftSet> = Vec::new();
        for t in topologies {
            ensure_same(&first.ctx, &t.ctx)?;
            family.extend(t.opens.iter().cloned());
        }
        SoftTopology::generate(&first.ctx, &family)
    }

    /// The crisp slice at one parameter: the family of approximations
    /// `{F(e) : F open}`, deduplicated, as ascending point-index lists in
    /// canonical order. Every slice of a soft topology is a crisp topology
    /// on the universe.
    pub fn crisp_slice(&self, parameter: usize) -> Result<Vec<Vec<usize>>, Error> {
        if parameter >= self.ctx.parameter_count() {
            return Err(Error::InvalidParameter(parameter));
        }
        let n = self.ctx.point_count();
        let mut rows: BTreeSet<Bits> = BTreeSet::new();
        for open in &self.opens {
            rows.insert(Bits::from_fn(n, |x| {
                open.bits().get(self.ctx.cell(parameter, x))
            }));
        }
        Ok(rows.into_iter().map(|r| r.iter_ones().collect()).collect())
    }

    /// Reads the whole topology as a crisp family on the product
    /// `parameters × universe` (each soft set becomes its graph).
    pub fn to_product_topology(&self) -> CrispFamily {
        CrispFamily::from_soft_family(self.ctx.cells(), &self.opens)
    }

    /// The relative (subspace) soft topology on a non-empty carrier.
    ///
    /// The result lives over a fresh context whose universe is the carrier
    /// (in universe order) and whose parameters are unchanged.
    pub fn relative(&self, carrier: &[usize]) -> Result<SoftTopology, Error> {
        let sub = subspace_context(&self.ctx, carrier)?;
        Ok(self.relative_in(&sub.0, &sub.1))
    }

    /// Relative topology over an already-built subspace context. Used when
    /// several topologies are restricted to one carrier and must share the
    /// resulting context.
    pub(crate) fn relative_in(&self, sub: &Arc<Context>, kept: &[usize]) -> SoftTopology {
        let m = self.ctx.parameter_count();
        let n_sub = kept.len();
        let mut opens: BTreeSet<Bits> = BTreeSet::new();
        for open in &self.opens {
            opens.insert(Bits::from_fn(m * n_sub, |cell| {
                let (e, x) = (cell / n_sub, cell % n_sub);
                open.bits().get(self.ctx.cell(e, kept[x]))
            }));
        }
        SoftTopology {
            ctx: Arc::clone(sub),
            opens: opens
                .into_iter()
                .map(|bits| SoftSet::from_bits(sub, bits))
                .collect(),
        }
    }

    fn check_axiom(&self, axiom: SepAxiom) -> SeparationReport {
        let bits: Vec<&Bits> = self.opens.iter().map(SoftSet::bits).collect();
        separation_report(&self.ctx, &bits, axiom)
    }

    /// Soft T0: each pair of distinct soft points has an open containing
    /// exactly one of them.
    pub fn is_t0(&self) -> SeparationReport {
        self.check_axiom(SepAxiom::T0)
    }

    /// Soft T1: for each ordered pair of distinct soft points there is an
    /// open containing the first but not the second.
    pub fn is_t1(&self) -> SeparationReport {
        self.check_axiom(SepAxiom::T1)
    }

    /// Soft T2: each pair of distinct soft points has disjoint opens around
    /// them.
    pub fn is_t2(&self) -> SeparationReport {
        self.check_axiom(SepAxiom::T2)
    }

    /// Are all soft points closed? Equivalent to soft T1.
    pub fn points_closed(&self) -> bool {
        let cells = self.ctx.cells();
        (0..cells).all(|cell| {
            let mut bits = Bits::ones(cells);
            bits.set(cell, false);
            self.contains_bits(&bits)
        })
    }

    /// Checks the axioms on one separated family (see [`validate`]); handy
    /// when a topology was assembled by unchecked internal steps.
    pub fn revalidate(&self) -> ValidationReport {
        validate(&self.ctx, &self.opens).expect("opens share the topology's context")
    }
}

/// One closure pass driver: repeatedly adds `op(a, b)` over all pairs until
/// nothing new appears; reports whether the family grew.
fn close_under(sets: &mut BTreeSet<Bits>, op: impl Fn(&Bits, &Bits) -> Bits) -> bool {
    let mut grew = false;
    loop {
        let items: Vec<Bits> = sets.iter().cloned().collect();
        let mut fresh: Vec<Bits> = Vec::new();
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let r = op(&items[i], &items[j]);
                if !sets.contains(&r) {
                    fresh.push(r);
                }
            }
        }
        if fresh.is_empty() {
            return grew;
        }
        grew = true;
        sets.extend(fresh);
    }
}

/// Builds the subspace context for a carrier: the deduplicated kept point
/// indices in universe order, plus the fresh context over them.
pub(crate) fn subspace_context(
    ctx: &Arc<Context>,
    carrier: &[usize],
) -> Result<(Arc<Context>, Vec<usize>), Error> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let n = ctx.point_count();
    let mut keep = vec![false; n];
    for &x in carrier {
        if x >= n {
            return Err(Error::InvalidPoint(x));
        }
        keep[x] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&x| keep[x]).collect();
    let sub = Context::new(
        kept.iter().map(|&x| ctx.point(x).to_string()),
        ctx.parameters().to_vec(),
    )?;
    Ok((sub, kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<Context> {
        Context::numbered(3, 2).unwrap()
    }

    fn set(ctx: &Arc<Context>, rows: &[&[usize]]) -> SoftSet {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        SoftSet::from_rows(ctx, &rows).unwrap()
    }

    #[test]
    fn indiscrete_and_discrete_are_valid() {
        let ctx = ctx();
        let ind = SoftTopology::indiscrete(&ctx);
        assert_eq!(ind.len(), 2);
        let disc = SoftTopology::discrete(&ctx).unwrap();
        assert_eq!(disc.len(), 1 << 6);
        assert!(disc.revalidate().is_valid());
        let big = Context::numbered(5, 5).unwrap();
        assert!(matches!(
            SoftTopology::discrete(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn validation_reports_first_violation_in_scan_order() {
        let ctx = ctx();
        let null = SoftSet::null(&ctx);
        let abs = SoftSet::absolute(&ctx);
        let f1 = set(&ctx, &[&[1], &[0]]);
        // No null set at all.
        let report = validate(&ctx, &[abs.clone(), f1.clone()]).unwrap();
        assert_eq!(report.violation.as_ref().unwrap().kind, ViolationKind::MissingNull);
        // Null present, absolute missing.
        let report = validate(&ctx, &[null.clone(), f1.clone()]).unwrap();
        assert_eq!(
            report.violation.as_ref().unwrap().kind,
            ViolationKind::MissingAbsolute
        );
        // Union of two incomparable sets missing: reported before the
        // intersection of the same pair is even considered.
        let f2 = set(&ctx, &[&[0], &[0]]);
        let report = validate(&ctx, &[null, abs, f1.clone(), f2.clone()]).unwrap();
        let v = report.violation.unwrap();
        assert_eq!(v.kind, ViolationKind::MissingUnion);
        assert_eq!(v.operands, Some((2, 3)));
        assert_eq!(v.missing, f1.union(&f2).unwrap());
    }

    #[test]
    fn duplicates_collapse_to_first_occurrence() {
        let ctx = ctx();
        let f1 = set(&ctx, &[&[1], &[0]]);
        let family = vec![
            SoftSet::null(&ctx),
            SoftSet::absolute(&ctx),
            f1.clone(),
            f1.clone(),
        ];
        let report = validate(&ctx, &family).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.distinct_members, 3);
        let top = SoftTopology::new(&ctx, &family).unwrap();
        assert_eq!(top.len(), 3);
    }

    #[test]
    fn closure_is_smallest_closed_superset() {
        let ctx = ctx();
        let f1 = set(&ctx, &[&[1], &[0]]);
        let top = SoftTopology::new(
            &ctx,
            &[SoftSet::null(&ctx), SoftSet::absolute(&ctx), f1.clone()],
        )
        .unwrap();
        let cl = top.closure(&f1).unwrap();
        assert!(top.is_closed(&cl).unwrap());
        assert!(f1.is_subset(&cl).unwrap());
        // F1 is not contained in its own complement (the only other closed
        // set), so its closure collapses to the absolute set.
        assert!(cl.is_absolute());
        assert_eq!(top.closure(&cl).unwrap(), cl);
    }

    #[test]
    fn meet_generate_join_relate_as_a_lattice() {
        let ctx = ctx();
        let f1 = set(&ctx, &[&[1], &[0]]);
        let g1 = set(&ctx, &[&[0], &[2]]);
        let t1 = SoftTopology::generate(&ctx, &[f1.clone()]).unwrap();
        let t2 = SoftTopology::generate(&ctx, &[g1.clone()]).unwrap();
        let meet = SoftTopology::meet(&[t1.clone(), t2.clone()]).unwrap();
        assert_eq!(meet, SoftTopology::indiscrete(&ctx));
        let join = SoftTopology::join(&[t1.clone(), t2.clone()]).unwrap();
        for open in t1.opens().iter().chain(t2.opens()) {
            assert!(join.is_open(open).unwrap());
        }
        assert!(join.is_open(&f1.union(&g1).unwrap()).unwrap());
        assert!(join.is_open(&f1.intersection(&g1).unwrap()).unwrap());
        assert!(join.revalidate().is_valid());
    }

    #[test]
    fn discrete_is_t2_indiscrete_is_not_t0() {
        let ctx = ctx();
        let disc = SoftTopology::discrete(&ctx).unwrap();
        assert!(disc.is_t2().holds);
        assert!(disc.is_t1().holds);
        assert!(disc.points_closed());
        let ind = SoftTopology::indiscrete(&ctx);
        let t0 = ind.is_t0();
        assert!(!t0.holds);
        // First pair in canonical order: (h1, e1) against (h2, e1).
        let (p, q) = t0.witness.unwrap();
        assert_eq!((p.to_string(), q.to_string()), ("(h1, e1)".into(), "(h2, e1)".into()));
    }

    #[test]
    fn relative_topology_on_full_carrier_is_identity() {
        let ctx = ctx();
        let f1 = set(&ctx, &[&[1], &[0]]);
        let top = SoftTopology::generate(&ctx, &[f1]).unwrap();
        let rel = top.relative(&[0, 1, 2]).unwrap();
        assert_eq!(rel, top);
    }

    #[test]
    fn neighborhood_characterisation_matches_openness() {
        let ctx = ctx();
        let f1 = set(&ctx, &[&[1], &[0]]);
        let top = SoftTopology::generate(&ctx, &[f1]).unwrap();
        for v in 0..1usize << 6 {
            let s = SoftSet::from_bits(&ctx, Bits::from_index(6, v));
            assert_eq!(
                top.is_open(&s).unwrap(),
                top.is_open_via_neighborhoods(&s).unwrap(),
            );
        }
    }
}
