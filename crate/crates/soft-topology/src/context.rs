//! The shared labelling context: a finite universe and a finite parameter
//! list.
//!
//! Every soft set, soft point and soft topology hangs off an
//! `Arc<Context>`. Operations first check that their operands agree on the
//! context (pointer equality short-circuits the common case) and then work
//! purely with indices; labels only matter at the edges (workspace files and
//! command-line output).

use crate::error::Error;
use std::sync::Arc;

/// A finite universe of points together with a finite list of parameters.
///
/// Labels are kept in declaration order; indices into the two lists are the
/// working representation everywhere else. A cell index addresses one entry
/// of the `parameters × points` membership table, parameter-major:
/// `cell = parameter * points + point`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    points: Vec<String>,
    parameters: Vec<String>,
}

impl Context {
    /// Builds a context from point and parameter labels.
    ///
    /// Both lists must be non-empty, and labels must be distinct within each
    /// list (the same label may appear as both a point and a parameter).
    pub fn new<S: Into<String>>(
        points: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Context>, Error> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        for list in [&points, &parameters] {
            for (i, label) in list.iter().enumerate() {
                if list[..i].contains(label) {
                    return Err(Error::DuplicateLabel(label.clone()));
                }
            }
        }
        Ok(Arc::new(Context { points, parameters }))
    }

    /// Convenience constructor with labels `h1..hn` and `e1..em`, matching
    /// the naming style of the worked examples and the oracle lanes.
    pub fn numbered(points: usize, parameters: usize) -> Result<Arc<Context>, Error> {
        Context::new(
            (1..=points).map(|i| format!("h{i}")),
            (1..=parameters).map(|i| format!("e{i}")),
        )
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    /// Number of cells in the membership table (`parameters × points`).
    pub fn cells(&self) -> usize {
        self.points.len() * self.parameters.len()
    }

    pub fn point(&self, index: usize) -> &str {
        &self.points[index]
    }

    pub fn parameter(&self, index: usize) -> &str {
        &self.parameters[index]
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn parameter_index(&self, label: &str) -> Option<usize> {
        self.parameters.iter().position(|p| p == label)
    }

    /// Cell index of `(parameter, point)` in the flat membership table.
    pub fn cell(&self, parameter: usize, point: usize) -> usize {
        debug_assert!(parameter < self.parameters.len() && point < self.points.len());
        parameter * self.points.len() + point
    }

    /// Inverse of [`Context::cell`]: `(parameter, point)` of a cell index.
    pub fn cell_coords(&self, cell: usize) -> (usize, usize) {
        debug_assert!(cell < self.cells());
        (cell / self.points.len(), cell % self.points.len())
    }
}

/// Checks that two handles refer to the same context.
///
/// Distinct allocations with identical labels compare equal; sharing one
/// `Arc` is merely the fast path.
pub(crate) fn ensure_same(a: &Arc<Context>, b: &Arc<Context>) -> Result<(), Error> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}
