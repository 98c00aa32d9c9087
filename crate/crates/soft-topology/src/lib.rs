//! Soft set theory and soft topology over finite universes, made executable.
//!
//! A *soft set* over a finite universe of points and a finite set of
//! parameters assigns to every parameter a subset of the points — concretely
//! a bit matrix with one row per parameter. This crate implements the full
//! algebra of such sets (union, intersection, complement, difference, the
//! subset order and their family-wise generalisations), *soft topologies*
//! (families of soft sets closed under the usual axioms) with closures,
//! neighbourhoods, separation axioms T0/T1/T2, meets, joins and subspaces,
//! and *soft N-spaces* (finite lists of soft topologies sharing one context)
//! with their pooled N-open families and N-wise separation axioms.
//!
//! Three design rules hold throughout:
//!
//! * **Canonical order.** Soft sets order lexicographically by their flat
//!   bit string (first table cell most significant), soft points by
//!   (parameter, point). Every family is reported in canonical order and
//!   every witness is the canonically first one, so all answers are
//!   reproducible byte for byte.
//! * **Independent oracles.** The [`crisp`] module re-checks the topology
//!   axioms through the product-space correspondence with ordinary
//!   point-set topology, and a dense census counts topologies from first
//!   principles; the [`registry`] module stress-tests every law of the
//!   theory against exhaustive small-case sweeps and seeded random trials.
//! * **Optional data parallelism.** Bulk scans dispatch through [`exec`],
//!   which uses rayon when the `parallel` feature (on by default) is
//!   enabled and index-ordered sequential loops otherwise. Both paths
//!   return identical results, including identical first witnesses.
//!
//! Workspaces ([`Workspace`]) give named soft sets and named families a
//! canonical JSON form for files and command-line tools.

mod bits;
mod context;
pub mod crisp;
mod enumerate;
mod error;
pub mod exec;
mod nspace;
pub mod registry;
mod softset;
mod topology;
mod workspace;

pub use context::Context;
pub use crisp::{count_topologies, CrispFamily};
pub use enumerate::{
    enumerate_soft_sets, enumerate_topologies, random_soft_set, random_topology, shapes_up_to,
    trial_seed, EnumerationBudget, TOPOLOGY_ENUMERATION_LIMIT,
};
pub use error::Error;
pub use nspace::{
    ImplicationCheck, ImplicationsReport, PooledFamily, SoftNSpace, TraceRow,
};
pub use registry::{check_all, check_proposition, proposition_names, Finding, PropReport};
pub use softset::{SoftPoint, SoftSet};
pub use topology::{
    validate, SepAxiom, SeparationReport, SoftTopology, ValidationReport, Violation,
    ViolationKind, DISCRETE_LIMIT,
};
pub use workspace::{Workspace, WorkspaceError, ABS_NAME, NULL_NAME};
