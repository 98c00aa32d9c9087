//! Soft sets over a finite context, and soft points.
//!
//! A soft set assigns to every parameter a subset of the universe; over a
//! finite context that is exactly a `parameters × points` bit table, stored
//! flat and parameter-major. All set operations are rowwise and therefore
//! plain word operations on the flat table.
//!
//! Two membership notions coexist and are deliberately kept apart:
//!
//! * a *soft point* `(x, e)` belongs to `F` when `x ∈ F(e)` — one cell test
//!   ([`SoftSet::contains_soft_point`]);
//! * a *point* `x` belongs to `F` when `x ∈ F(e)` for **every** parameter
//!   `e` ([`SoftSet::contains_point`]).

use crate::bits::Bits;
use crate::context::{ensure_same, Context};
use crate::error::Error;
use std::cmp::Ordering;
use std::sync::Arc;

/// A soft set: one subset of the universe per parameter.
///
/// Equality is cellwise equality of the membership tables (over equal
/// contexts). The `Ord` implementation is the canonical order used for every
/// deterministic listing in the crate: lexicographic on the flat table,
/// parameter-major, point-minor, absent before present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SoftSet {
    ctx: Arc<Context>,
    bits: Bits,
}

impl SoftSet {
    /// The null soft set: every approximation is empty.
    pub fn null(ctx: &Arc<Context>) -> SoftSet {
        SoftSet {
            ctx: Arc::clone(ctx),
            bits: Bits::zero(ctx.cells()),
        }
    }

    /// The absolute soft set: every approximation is the whole universe.
    pub fn absolute(ctx: &Arc<Context>) -> SoftSet {
        SoftSet {
            ctx: Arc::clone(ctx),
            bits: Bits::ones(ctx.cells()),
        }
    }

    /// The constant soft set whose every approximation is the given carrier.
    ///
    /// The carrier is a non-empty list of point indices; duplicates are
    /// harmless.
    pub fn constant(ctx: &Arc<Context>, carrier: &[usize]) -> Result<SoftSet, Error> {
        if carrier.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let n = ctx.point_count();
        let mut row = vec![false; n];
        for &x in carrier {
            if x >= n {
                return Err(Error::InvalidPoint(x));
            }
            row[x] = true;
        }
        Ok(SoftSet {
            ctx: Arc::clone(ctx),
            bits: Bits::from_fn(ctx.cells(), |cell| row[cell % n]),
        })
    }

    /// Builds a soft set from one point-index list per parameter, in
    /// parameter order.
    pub fn from_rows(ctx: &Arc<Context>, rows: &[Vec<usize>]) -> Result<SoftSet, Error> {
        if rows.len() != ctx.parameter_count() {
            return Err(Error::InvalidParameter(rows.len()));
        }
        let mut bits = Bits::zero(ctx.cells());
        for (e, row) in rows.iter().enumerate() {
            for &x in row {
                if x >= ctx.point_count() {
                    return Err(Error::InvalidPoint(x));
                }
                bits.set(ctx.cell(e, x), true);
            }
        }
        Ok(SoftSet {
            ctx: Arc::clone(ctx),
            bits,
        })
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// The approximation of one parameter, as ascending point indices.
    pub fn row(&self, parameter: usize) -> Vec<usize> {
        let n = self.ctx.point_count();
        (0..n)
            .filter(|&x| self.bits.get(self.ctx.cell(parameter, x)))
            .collect()
    }

    /// All approximations in parameter order.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.ctx.parameter_count())
            .map(|e| self.row(e))
            .collect()
    }

    pub fn is_null(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_absolute(&self) -> bool {
        self.bits.is_ones()
    }

    /// Soft-subset test: every approximation of `self` is contained in the
    /// corresponding approximation of `other`.
    pub fn is_subset(&self, other: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// Parameterwise union.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet, Error> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(self.with_bits(self.bits.or(&other.bits)))
    }

    /// Parameterwise intersection.
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet, Error> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(self.with_bits(self.bits.and(&other.bits)))
    }

    /// Parameterwise complement relative to the universe.
    pub fn complement(&self) -> SoftSet {
        self.with_bits(self.bits.not())
    }

    /// Parameterwise difference `self ∖ other`.
    pub fn difference(&self, other: &SoftSet) -> Result<SoftSet, Error> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(self.with_bits(self.bits.and_not(&other.bits)))
    }

    /// Union of a non-empty family.
    pub fn big_union(sets: &[SoftSet]) -> Result<SoftSet, Error> {
        Self::fold(sets, Bits::or)
    }

    /// Intersection of a non-empty family.
    pub fn big_intersection(sets: &[SoftSet]) -> Result<SoftSet, Error> {
        Self::fold(sets, Bits::and)
    }

    fn fold(sets: &[SoftSet], op: impl Fn(&Bits, &Bits) -> Bits) -> Result<SoftSet, Error> {
        let first = sets.first().ok_or(Error::EmptyFamily)?;
        let mut acc = first.bits.clone();
        for s in &sets[1..] {
            ensure_same(&first.ctx, &s.ctx)?;
            acc = op(&acc, &s.bits);
        }
        Ok(first.with_bits(acc))
    }

    /// True when the intersection of the two soft sets is null.
    pub fn is_disjoint(&self, other: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, &other.ctx)?;
        Ok(!self.bits.intersects(&other.bits))
    }

    /// All soft points of this soft set, in canonical order
    /// (parameter-major, point-minor).
    pub fn soft_points(&self) -> Vec<SoftPoint> {
        self.bits
            .iter_ones()
            .map(|cell| {
                let (parameter, point) = self.ctx.cell_coords(cell);
                SoftPoint {
                    ctx: Arc::clone(&self.ctx),
                    point,
                    parameter,
                }
            })
            .collect()
    }

    /// Soft-point membership: is `x ∈ F(e)` for the point's own parameter?
    pub fn contains_soft_point(&self, p: &SoftPoint) -> Result<bool, Error> {
        ensure_same(&self.ctx, &p.ctx)?;
        Ok(self.bits.get(self.ctx.cell(p.parameter, p.point)))
    }

    /// Point membership: is `x ∈ F(e)` for **every** parameter `e`?
    pub fn contains_point(&self, point: usize) -> Result<bool, Error> {
        if point >= self.ctx.point_count() {
            return Err(Error::InvalidPoint(point));
        }
        Ok((0..self.ctx.parameter_count()).all(|e| self.bits.get(self.ctx.cell(e, point))))
    }

    /// Intersects every approximation with the carrier (a set of point
    /// indices). The result still lives over the original context; use
    /// [`crate::SoftTopology::relative`] for a genuine subspace.
    pub fn restrict(&self, carrier: &[usize]) -> Result<SoftSet, Error> {
        if carrier.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let n = self.ctx.point_count();
        let mut keep = vec![false; n];
        for &x in carrier {
            if x >= n {
                return Err(Error::InvalidPoint(x));
            }
            keep[x] = true;
        }
        let mask = Bits::from_fn(self.ctx.cells(), |cell| keep[cell % n]);
        Ok(self.with_bits(self.bits.and(&mask)))
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn from_bits(ctx: &Arc<Context>, bits: Bits) -> SoftSet {
        debug_assert_eq!(bits.len(), ctx.cells());
        SoftSet {
            ctx: Arc::clone(ctx),
            bits,
        }
    }

    fn with_bits(&self, bits: Bits) -> SoftSet {
        SoftSet {
            ctx: Arc::clone(&self.ctx),
            bits,
        }
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for SoftSet {
    /// Inline rendering such as `{e1: {h2}, e2: {h1, h3}}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for e in 0..self.ctx.parameter_count() {
            if e > 0 {
                write!(f, ", ")?;
            }
            let labels: Vec<&str> = self.row(e).into_iter().map(|x| self.ctx.point(x)).collect();
            write!(f, "{}: {{{}}}", self.ctx.parameter(e), labels.join(", "))?;
        }
        write!(f, "}}")
    }
}

/// A soft point: a single set cell `(x, e)`.
///
/// The order is canonical: parameter-major, point-minor — the same order in
/// which [`SoftSet::soft_points`] lists the points of a soft set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SoftPoint {
    ctx: Arc<Context>,
    point: usize,
    parameter: usize,
}

impl SoftPoint {
    pub fn new(ctx: &Arc<Context>, point: usize, parameter: usize) -> Result<SoftPoint, Error> {
        if point >= ctx.point_count() {
            return Err(Error::InvalidPoint(point));
        }
        if parameter >= ctx.parameter_count() {
            return Err(Error::InvalidParameter(parameter));
        }
        Ok(SoftPoint {
            ctx: Arc::clone(ctx),
            point,
            parameter,
        })
    }

    pub(crate) fn from_cell(ctx: &Arc<Context>, cell: usize) -> SoftPoint {
        let (parameter, point) = ctx.cell_coords(cell);
        SoftPoint {
            ctx: Arc::clone(ctx),
            point,
            parameter,
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn parameter(&self) -> usize {
        self.parameter
    }

    /// The cell index of this point in the flat membership table.
    pub fn cell(&self) -> usize {
        self.ctx.cell(self.parameter, self.point)
    }

    /// Membership in a soft set (single-cell test).
    pub fn is_in(&self, set: &SoftSet) -> Result<bool, Error> {
        set.contains_soft_point(self)
    }

    /// The soft set whose only cell is this point.
    pub fn to_soft_set(&self) -> SoftSet {
        let mut bits = Bits::zero(self.ctx.cells());
        bits.set(self.cell(), true);
        SoftSet::from_bits(&self.ctx, bits)
    }
}

impl Ord for SoftPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.parameter, self.point).cmp(&(other.parameter, other.point))
    }
}

impl PartialOrd for SoftPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SoftPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for SoftPoint {
    /// Rendering such as `(h2, e1)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            self.ctx.point(self.point),
            self.ctx.parameter(self.parameter)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<Context> {
        Context::numbered(3, 2).unwrap()
    }

    #[test]
    fn constant_fills_every_row() {
        let ctx = ctx();
        let c = SoftSet::constant(&ctx, &[0, 2]).unwrap();
        assert_eq!(c.rows(), vec![vec![0, 2], vec![0, 2]]);
        assert!(matches!(
            SoftSet::constant(&ctx, &[]),
            Err(Error::EmptyCarrier)
        ));
        assert!(matches!(
            SoftSet::constant(&ctx, &[7]),
            Err(Error::InvalidPoint(7))
        ));
    }

    #[test]
    fn the_two_membership_notions_differ() {
        let ctx = ctx();
        // F(e1) = {h1, h2}, F(e2) = {h1}.
        let f = SoftSet::from_rows(&ctx, &[vec![0, 1], vec![0]]).unwrap();
        let p = SoftPoint::new(&ctx, 1, 0).unwrap();
        assert!(f.contains_soft_point(&p).unwrap());
        assert!(f.contains_point(0).unwrap());
        assert!(!f.contains_point(1).unwrap()); // h2 missing from F(e2)
    }

    #[test]
    fn soft_points_enumerate_in_canonical_order() {
        let ctx = ctx();
        let f = SoftSet::from_rows(&ctx, &[vec![1, 2], vec![0]]).unwrap();
        let pts: Vec<String> = f.soft_points().iter().map(|p| p.to_string()).collect();
        assert_eq!(pts, vec!["(h2, e1)", "(h3, e1)", "(h1, e2)"]);
        let mut sorted = f.soft_points();
        sorted.sort();
        assert_eq!(sorted, f.soft_points());
    }

    #[test]
    fn restrict_clips_every_row() {
        let ctx = ctx();
        let f = SoftSet::from_rows(&ctx, &[vec![0, 1], vec![1, 2]]).unwrap();
        let r = f.restrict(&[1]).unwrap();
        assert_eq!(r.rows(), vec![vec![1], vec![1]]);
        assert!(r.context() == f.context());
    }

    #[test]
    fn display_is_rowwise() {
        let ctx = ctx();
        let f = SoftSet::from_rows(&ctx, &[vec![1], vec![0, 2]]).unwrap();
        assert_eq!(f.to_string(), "{e1: {h2}, e2: {h1, h3}}");
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = SoftSet::null(&ctx());
        let b = SoftSet::null(&Context::numbered(2, 2).unwrap());
        assert!(matches!(a.union(&b), Err(Error::ContextMismatch)));
    }
}
