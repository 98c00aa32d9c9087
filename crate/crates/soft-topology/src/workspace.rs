//! Workspace files: named contexts, soft sets and topology declarations.
//!
//! A workspace is the interchange format between the library, the
//! command-line front end and the proposition oracles: a JSON document
//! declaring one context, any number of named soft sets, and any number of
//! named families of set names. Declaration order is significant (families
//! are scanned for axiom violations in declaration order) and is preserved
//! on both load and save. Saving is canonical — two equal workspaces always
//! serialise to identical bytes.
//!
//! ```json
//! {
//!   "universe": ["h1", "h2", "h3"],
//!   "parameters": ["e1", "e2"],
//!   "sets": {
//!     "F1": { "e1": ["h2"], "e2": ["h1"] }
//!   },
//!   "topologies": {
//!     "tau1": ["NULL", "ABS", "F1"]
//!   }
//! }
//! ```
//!
//! A set declaration may omit parameters; omitted rows are empty. The names
//! `NULL` and `ABS` are reserved for the null and absolute soft sets — they
//! may be referenced anywhere a set name is expected, but never declared.

use crate::context::{ensure_same, Context};
use crate::error::Error;
use crate::softset::SoftSet;
use indexmap::IndexMap;
use serde::de::{Deserialize, Deserializer, MapAccess, Visitor};
use std::marker::PhantomData;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error as ThisError;

/// The reserved name of the null soft set.
pub const NULL_NAME: &str = "NULL";
/// The reserved name of the absolute soft set.
pub const ABS_NAME: &str = "ABS";

/// Errors arising from workspace files and name resolution.
#[derive(Debug, ThisError)]
pub enum WorkspaceError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    /// Malformed JSON or a malformed document shape; the message carries
    /// serde_json's line and column.
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    /// A name that is not declared (and is not `NULL`/`ABS`).
    #[error("unknown {kind} `{name}`{place}")]
    UnknownLabel {
        kind: &'static str,
        name: String,
        place: String,
    },

    /// A name declared twice, or a duplicated row key inside a set.
    #[error("duplicate {kind} `{name}`{place}")]
    DuplicateName {
        kind: &'static str,
        name: String,
        place: String,
    },

    /// `NULL` or `ABS` used as a declaration name.
    #[error("`{0}` is reserved and cannot be declared")]
    ReservedName(String),

    /// A mathematical error surfaced while assembling the workspace.
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// A loaded workspace: one context plus named sets and named families.
#[derive(Debug, Clone, PartialEq)]
pub struct Workspace {
    ctx: Arc<Context>,
    sets: IndexMap<String, SoftSet>,
    topologies: IndexMap<String, Vec<String>>,
}

impl Workspace {
    /// An empty workspace over a context.
    pub fn new(ctx: &Arc<Context>) -> Workspace {
        Workspace {
            ctx: Arc::clone(ctx),
            sets: IndexMap::new(),
            topologies: IndexMap::new(),
        }
    }

    /// Loads a workspace from a JSON file.
    pub fn load(path: impl AsRef<Path>) -> Result<Workspace, WorkspaceError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| WorkspaceError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Workspace::from_json(&text)
    }

    /// Parses a workspace from JSON text.
    pub fn from_json(text: &str) -> Result<Workspace, WorkspaceError> {
        let raw: RawWorkspace = serde_json::from_str(text)?;
        let ctx = Context::new(raw.universe, raw.parameters)?;
        let mut ws = Workspace::new(&ctx);
        for (name, rows) in raw.sets {
            let mut rows_all: Vec<Vec<usize>> = vec![Vec::new(); ctx.parameter_count()];
            let mut seen_rows = vec![false; ctx.parameter_count()];
            for (parameter, points) in rows.0 {
                let e = ctx.parameter_index(&parameter).ok_or_else(|| {
                    WorkspaceError::UnknownLabel {
                        kind: "parameter",
                        name: parameter.clone(),
                        place: format!(" in set `{name}`"),
                    }
                })?;
                if seen_rows[e] {
                    return Err(WorkspaceError::DuplicateName {
                        kind: "row",
                        name: parameter.clone(),
                        place: format!(" in set `{name}`"),
                    });
                }
                seen_rows[e] = true;
                let mut row = Vec::with_capacity(points.len());
                for point in points {
                    let x = ctx.point_index(&point).ok_or_else(|| {
                        WorkspaceError::UnknownLabel {
                            kind: "point",
                            name: point.clone(),
                            place: format!(" in set `{name}`, row `{parameter}`"),
                        }
                    })?;
                    row.push(x);
                }
                rows_all[e] = row;
            }
            ws.add_set(&name, SoftSet::from_rows(&ctx, &rows_all)?)?;
        }
        for (name, members) in raw.topologies {
            ws.add_topology(&name, members)?;
        }
        Ok(ws)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Declared sets, in declaration order.
    pub fn sets(&self) -> &IndexMap<String, SoftSet> {
        &self.sets
    }

    /// Declared families, in declaration order.
    pub fn topologies(&self) -> &IndexMap<String, Vec<String>> {
        &self.topologies
    }

    /// Declares a named set.
    pub fn add_set(&mut self, name: &str, set: SoftSet) -> Result<(), WorkspaceError> {
        if name == NULL_NAME || name == ABS_NAME {
            return Err(WorkspaceError::ReservedName(name.to_string()));
        }
        ensure_same(&self.ctx, set.context())?;
        if self.sets.contains_key(name) {
            return Err(WorkspaceError::DuplicateName {
                kind: "set",
                name: name.to_string(),
                place: String::new(),
            });
        }
        self.sets.insert(name.to_string(), set);
        Ok(())
    }

    /// Declares a named family of set names (members must already resolve).
    pub fn add_topology(&mut self, name: &str, members: Vec<String>) -> Result<(), WorkspaceError> {
        if name == NULL_NAME || name == ABS_NAME {
            return Err(WorkspaceError::ReservedName(name.to_string()));
        }
        if self.topologies.contains_key(name) {
            return Err(WorkspaceError::DuplicateName {
                kind: "topology",
                name: name.to_string(),
                place: String::new(),
            });
        }
        for member in &members {
            if !self.is_set_name(member) {
                return Err(WorkspaceError::UnknownLabel {
                    kind: "set",
                    name: member.clone(),
                    place: format!(" in topology `{name}`"),
                });
            }
        }
        self.topologies.insert(name.to_string(), members);
        Ok(())
    }

    fn is_set_name(&self, name: &str) -> bool {
        name == NULL_NAME || name == ABS_NAME || self.sets.contains_key(name)
    }

    /// Resolves a set name (`NULL` and `ABS` included) to its soft set.
    pub fn resolve_set(&self, name: &str) -> Result<SoftSet, WorkspaceError> {
        match name {
            NULL_NAME => Ok(SoftSet::null(&self.ctx)),
            ABS_NAME => Ok(SoftSet::absolute(&self.ctx)),
            _ => self
                .sets
                .get(name)
                .cloned()
                .ok_or_else(|| WorkspaceError::UnknownLabel {
                    kind: "set",
                    name: name.to_string(),
                    place: String::new(),
                }),
        }
    }

    /// The member names of a declared family.
    pub fn topology_members(&self, name: &str) -> Result<&[String], WorkspaceError> {
        self.topologies
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| WorkspaceError::UnknownLabel {
                kind: "topology",
                name: name.to_string(),
                place: String::new(),
            })
    }

    /// The member sets of a declared family, in declaration order.
    pub fn family(&self, name: &str) -> Result<Vec<SoftSet>, WorkspaceError> {
        self.topology_members(name)?
            .iter()
            .map(|member| self.resolve_set(member))
            .collect()
    }

    /// A display name for a soft set: `NULL`/`ABS` for the null and
    /// absolute sets, else the first declared set with this value.
    pub fn name_of(&self, set: &SoftSet) -> Option<&str> {
        if set.is_null() {
            return Some(NULL_NAME);
        }
        if set.is_absolute() {
            return Some(ABS_NAME);
        }
        self.sets
            .iter()
            .find(|(_, s)| *s == set)
            .map(|(name, _)| name.as_str())
    }

    /// Builds a workspace around computed families.
    ///
    /// Distinct member sets (other than null/absolute) are declared as
    /// `<prefix>1`, `<prefix>2`, … in order of first appearance; each family
    /// becomes a topology entry whose member list names them.
    pub fn from_named_families(
        ctx: &Arc<Context>,
        prefix: &str,
        families: &[(String, Vec<SoftSet>)],
    ) -> Result<Workspace, WorkspaceError> {
        let mut ws = Workspace::new(ctx);
        // Name the distinct non-trivial sets in order of first appearance.
        for (_, family) in families {
            for set in family {
                if !set.is_null() && !set.is_absolute() && ws.name_of(set).is_none() {
                    let name = format!("{prefix}{}", ws.sets.len() + 1);
                    ws.add_set(&name, set.clone())?;
                }
            }
        }
        for (name, family) in families {
            let members: Vec<String> = family
                .iter()
                .map(|set| {
                    ws.name_of(set)
                        .expect("every member was declared above")
                        .to_string()
                })
                .collect();
            ws.add_topology(name, members)?;
        }
        Ok(ws)
    }

    /// The canonical JSON value of this workspace.
    pub fn to_value(&self) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        let mut sets = Map::new();
        for (name, set) in &self.sets {
            let mut rows = Map::new();
            for e in 0..self.ctx.parameter_count() {
                let row = set.row(e);
                if row.is_empty() {
                    continue; // omitted rows are empty by convention
                }
                let labels: Vec<Value> = row
                    .into_iter()
                    .map(|x| Value::String(self.ctx.point(x).to_string()))
                    .collect();
                rows.insert(self.ctx.parameter(e).to_string(), Value::Array(labels));
            }
            sets.insert(name.clone(), Value::Object(rows));
        }
        let mut topologies = Map::new();
        for (name, members) in &self.topologies {
            let list: Vec<Value> = members
                .iter()
                .map(|m| Value::String(m.clone()))
                .collect();
            topologies.insert(name.clone(), Value::Array(list));
        }
        json!({
            "universe": self.ctx.points(),
            "parameters": self.ctx.parameters(),
            "sets": Value::Object(sets),
            "topologies": Value::Object(topologies),
        })
    }

    /// Canonical pretty-printed JSON (stable byte-for-byte).
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value())
            .expect("workspace values always serialise");
        text.push('\n');
        text
    }

    /// Saves the canonical JSON to a file.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), WorkspaceError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|source| WorkspaceError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Raw document shape. Maps are deserialised as entry lists so that
/// duplicate keys — which `serde_json` maps would silently collapse — are
/// caught and reported.
#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default, deserialize_with = "entry_vec")]
    sets: Vec<(String, RawRows)>,
    #[serde(default, deserialize_with = "entry_vec")]
    topologies: Vec<(String, Vec<String>)>,
}

struct RawRows(Vec<(String, Vec<String>)>);

impl<'de> Deserialize<'de> for RawRows {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        entry_vec(deserializer).map(RawRows)
    }
}

fn entry_vec<'de, D, V>(deserializer: D) -> Result<Vec<(String, V)>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct EntryVisitor<V>(PhantomData<V>);

    impl<'de, V: Deserialize<'de>> Visitor<'de> for EntryVisitor<V> {
        type Value = Vec<(String, V)>;

        fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            f.write_str("a JSON object")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut entries = Vec::new();
            while let Some(entry) = map.next_entry::<String, V>()? {
                entries.push(entry);
            }
            Ok(entries)
        }
    }

    deserializer.deserialize_map(EntryVisitor(PhantomData))
}
