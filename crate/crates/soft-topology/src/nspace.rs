//! Soft N-topological spaces: finitely many soft topologies sharing one
//! context.
//!
//! A soft set is *N-open* when at least one component topology contains it,
//! and *N-closed* when its complement is N-open. The pooled family of
//! N-open sets is generally **not** a soft topology, which is why the
//! N-wise separation axioms quantify over the pool directly instead of
//! closing it up. The supremum (join) of the components is the nearest
//! actual soft topology refining every component, and the implication
//! ladder between the three readings —
//!
//! > some component is Ti  ⇒  the space is N-wise Ti  ⇒  the supremum is Ti
//!
//! — is checkable per space via [`SoftNSpace::check_implications`].
//!
//! [`PooledFamily`] exposes the same pooled-pair machinery for raw
//! families that are not required to satisfy the axioms; that permissive
//! mode is what lets diagnostics run on printed families that fail
//! validation.

use crate::bits::Bits;
use crate::context::{ensure_same, Context};
use crate::error::Error;
use crate::softset::{SoftPoint, SoftSet};
use crate::topology::{
    separation_report, subspace_context, SepAxiom, SeparationReport, SoftTopology,
};
use std::sync::Arc;

/// An ordered list of soft topologies over one shared context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftNSpace {
    ctx: Arc<Context>,
    topologies: Vec<SoftTopology>,
}

impl SoftNSpace {
    /// Builds an N-space from its component topologies (at least one).
    ///
    /// The components keep their given order; duplicates are legal (the
    /// axioms never distinguish them) and can be inspected with
    /// [`SoftNSpace::duplicate_components`].
    pub fn new(ctx: &Arc<Context>, topologies: Vec<SoftTopology>) -> Result<SoftNSpace, Error> {
        if topologies.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for t in &topologies {
            ensure_same(ctx, t.context())?;
        }
        Ok(SoftNSpace {
            ctx: Arc::clone(ctx),
            topologies,
        })
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn topologies(&self) -> &[SoftTopology] {
        &self.topologies
    }

    /// The N in "N-topological space".
    pub fn n(&self) -> usize {
        self.topologies.len()
    }

    /// Index pairs `(i, j)`, `i < j`, of components that are equal as
    /// topologies. Purely diagnostic.
    pub fn duplicate_components(&self) -> Vec<(usize, usize)> {
        let mut dups = Vec::new();
        for i in 0..self.topologies.len() {
            for j in i + 1..self.topologies.len() {
                if self.topologies[i] == self.topologies[j] {
                    dups.push((i, j));
                }
            }
        }
        dups
    }

    /// Is the soft set open in at least one component topology?
    pub fn is_n_open(&self, set: &SoftSet) -> Result<bool, Error> {
        for t in &self.topologies {
            if t.is_open(set)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Is the complement of the soft set N-open?
    pub fn is_n_closed(&self, set: &SoftSet) -> Result<bool, Error> {
        ensure_same(&self.ctx, set.context())?;
        self.is_n_open(&set.complement())
    }

    /// The pooled family of N-open sets: components in order, opens in
    /// canonical order within each, first occurrence kept.
    pub fn n_open_family(&self) -> Vec<&SoftSet> {
        pool(self.topologies.iter().map(|t| t.opens()))
    }

    /// The crisp slice of every component at one parameter: N crisp
    /// topologies on the universe, in component order.
    pub fn crisp_n_slice(&self, parameter: usize) -> Result<Vec<Vec<Vec<usize>>>, Error> {
        self.topologies
            .iter()
            .map(|t| t.crisp_slice(parameter))
            .collect()
    }

    /// The componentwise subspace over a non-empty carrier: every component
    /// is restricted to the carrier, and all restrictions share one fresh
    /// subspace context.
    pub fn n_subspace(&self, carrier: &[usize]) -> Result<SoftNSpace, Error> {
        let (sub, kept) = subspace_context(&self.ctx, carrier)?;
        let topologies = self
            .topologies
            .iter()
            .map(|t| t.relative_in(&sub, &kept))
            .collect();
        Ok(SoftNSpace {
            ctx: sub,
            topologies,
        })
    }

    /// The supremum of the components: the coarsest soft topology
    /// containing every N-open set.
    pub fn supremum(&self) -> SoftTopology {
        SoftTopology::join(&self.topologies).expect("an N-space has at least one component")
    }

    /// N-wise separation: the axiom quantified over the pooled N-open
    /// family.
    pub fn nwise(&self, axiom: SepAxiom) -> SeparationReport {
        let bits: Vec<&Bits> = self.n_open_family().iter().map(|s| s.bits()).collect();
        separation_report(&self.ctx, &bits, axiom)
    }

    pub fn nwise_t0(&self) -> SeparationReport {
        self.nwise(SepAxiom::T0)
    }

    pub fn nwise_t1(&self) -> SeparationReport {
        self.nwise(SepAxiom::T1)
    }

    pub fn nwise_t2(&self) -> SeparationReport {
        self.nwise(SepAxiom::T2)
    }

    /// Evaluates every reading of the three separation axioms on this space
    /// and packages the implication ladder between them.
    pub fn check_implications(&self) -> ImplicationsReport {
        let nwise = SepAxiom::ALL.map(|axiom| self.nwise(axiom));
        let component_axioms: Vec<[bool; 3]> = self
            .topologies
            .iter()
            .map(|t| [t.is_t0().holds, t.is_t1().holds, t.is_t2().holds])
            .collect();
        let sup = self.supremum();
        let supremum_axioms = [sup.is_t0().holds, sup.is_t1().holds, sup.is_t2().holds];
        ImplicationsReport {
            nwise,
            component_axioms,
            supremum_axioms,
        }
    }
}

/// Deduplicates a sequence of open families, keeping first occurrences in
/// order.
fn pool<'a>(families: impl Iterator<Item = &'a [SoftSet]>) -> Vec<&'a SoftSet> {
    let mut seen: Vec<&'a SoftSet> = Vec::new();
    for family in families {
        for set in family {
            if !seen.contains(&set) {
                seen.push(set);
            }
        }
    }
    seen
}

/// One implication between two readings of a separation axiom.
#[derive(Debug, Clone, Copy)]
pub struct ImplicationCheck {
    pub axiom: SepAxiom,
    pub antecedent: &'static str,
    pub consequent: &'static str,
    pub antecedent_holds: bool,
    pub consequent_holds: bool,
}

impl ImplicationCheck {
    /// An implication only fails when the antecedent holds and the
    /// consequent does not.
    pub fn ok(&self) -> bool {
        !self.antecedent_holds || self.consequent_holds
    }
}

/// All separation readings of one N-space, plus the implication ladder.
#[derive(Debug, Clone)]
pub struct ImplicationsReport {
    /// N-wise T0/T1/T2, with witnesses where an axiom fails.
    pub nwise: [SeparationReport; 3],
    /// Per component: does it satisfy soft T0/T1/T2 on its own?
    pub component_axioms: Vec<[bool; 3]>,
    /// Does the supremum topology satisfy soft T0/T1/T2?
    pub supremum_axioms: [bool; 3],
}

impl ImplicationsReport {
    /// "Some component is Ti" implies "the space is N-wise Ti".
    pub fn componentwise_to_nwise(&self) -> [ImplicationCheck; 3] {
        [0, 1, 2].map(|i| ImplicationCheck {
            axiom: SepAxiom::ALL[i],
            antecedent: "some component satisfies the axiom",
            consequent: "the space satisfies it N-wise",
            antecedent_holds: self.component_axioms.iter().any(|a| a[i]),
            consequent_holds: self.nwise[i].holds,
        })
    }

    /// "The space is N-wise Ti" implies "the supremum topology is Ti".
    pub fn nwise_to_supremum(&self) -> [ImplicationCheck; 3] {
        [0, 1, 2].map(|i| ImplicationCheck {
            axiom: SepAxiom::ALL[i],
            antecedent: "the space satisfies the axiom N-wise",
            consequent: "the supremum topology satisfies it",
            antecedent_holds: self.nwise[i].holds,
            consequent_holds: self.supremum_axioms[i],
        })
    }

    /// N-wise T2 implies N-wise T1 implies N-wise T0.
    pub fn chain(&self) -> [ImplicationCheck; 2] {
        [(2, 1), (1, 0)].map(|(hi, lo)| ImplicationCheck {
            axiom: SepAxiom::ALL[lo],
            antecedent: "the stronger N-wise axiom holds",
            consequent: "the weaker N-wise axiom holds",
            antecedent_holds: self.nwise[hi].holds,
            consequent_holds: self.nwise[lo].holds,
        })
    }

    /// Do all recorded implications hold on this space?
    pub fn all_hold(&self) -> bool {
        self.componentwise_to_nwise()
            .iter()
            .chain(self.nwise_to_supremum().iter())
            .chain(self.chain().iter())
            .all(ImplicationCheck::ok)
    }
}

/// A pooled family of soft sets that is **not** required to satisfy the
/// topology axioms.
///
/// This is the permissive counterpart of [`SoftNSpace`]: the separation
/// scans quantify over the pooled sets exactly as the N-wise axioms do, but
/// no validation is performed, so printed families with axiom violations
/// can still be diagnosed.
#[derive(Debug, Clone)]
pub struct PooledFamily {
    ctx: Arc<Context>,
    opens: Vec<SoftSet>,
}

/// One row of a T0 separation trace.
#[derive(Debug, Clone)]
pub struct TraceRow {
    pub first: SoftPoint,
    pub second: SoftPoint,
    /// Index into the pooled family of the first set containing exactly one
    /// of the two points, or `None` when the pair is unseparated.
    pub separator: Option<usize>,
}

impl PooledFamily {
    /// Pools raw families in declaration order, keeping first occurrences.
    pub fn new(ctx: &Arc<Context>, families: &[Vec<SoftSet>]) -> Result<PooledFamily, Error> {
        for family in families {
            for set in family {
                ensure_same(ctx, set.context())?;
            }
        }
        let opens = pool(families.iter().map(Vec::as_slice))
            .into_iter()
            .cloned()
            .collect();
        Ok(PooledFamily {
            ctx: Arc::clone(ctx),
            opens,
        })
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// The pooled sets, first occurrences in declaration order.
    pub fn opens(&self) -> &[SoftSet] {
        &self.opens
    }

    /// Separation axiom over the pooled sets.
    pub fn check(&self, axiom: SepAxiom) -> SeparationReport {
        let bits: Vec<&Bits> = self.opens.iter().map(SoftSet::bits).collect();
        separation_report(&self.ctx, &bits, axiom)
    }

    /// For every unordered pair of distinct soft points (canonical order),
    /// the first pooled set containing exactly one of them.
    pub fn t0_trace(&self) -> Vec<TraceRow> {
        let cells = self.ctx.cells();
        let mut rows = Vec::with_capacity(cells * (cells - 1) / 2);
        for a in 0..cells {
            for b in a + 1..cells {
                let separator = self
                    .opens
                    .iter()
                    .position(|o| o.bits().get(a) != o.bits().get(b));
                rows.push(TraceRow {
                    first: SoftPoint::from_cell(&self.ctx, a),
                    second: SoftPoint::from_cell(&self.ctx, b),
                    separator,
                });
            }
        }
        rows
    }
}
