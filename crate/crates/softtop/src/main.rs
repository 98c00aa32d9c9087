//! `softtop` — a command-line workbench for soft sets, soft topologies and
//! soft N-spaces over finite universes.
//!
//! Every subcommand reads a JSON workspace file (`--file`), runs one
//! computation and prints a deterministic report; `--json` switches to a
//! machine-readable envelope `{"ok": ..., "result": ..., "witness": ...}`.
//! Exit codes: 0 = computed / property holds, 1 = computed / property fails
//! (a witness is printed), 2 = usage or input error.

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use soft_topology::{
    check_proposition, validate, Context, EnumerationBudget, SepAxiom, SoftNSpace, SoftPoint,
    SoftSet, SoftTopology, Violation, ViolationKind, Workspace, ABS_NAME, NULL_NAME,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "softtop",
    about = "Soft topology workbench over finite universes",
    version
)]
struct Cli {
    /// Workspace file (JSON) with the universe, parameters, sets and
    /// topologies the command operates on.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the soft topology axioms for a named family.
    Validate {
        /// Name of the topology to check.
        #[arg(short = 't', long = "topology", value_name = "NAME")]
        topology: String,
    },
    /// Intersect topologies: the largest topology inside all of them.
    Meet {
        /// Topology names (repeat the flag).
        #[arg(short = 't', long = "topology", value_name = "NAME", required = true)]
        topology: Vec<String>,
    },
    /// Join topologies: the smallest topology containing all of them.
    Sup {
        /// Topology names (repeat the flag).
        #[arg(short = 't', long = "topology", value_name = "NAME", required = true)]
        topology: Vec<String>,
    },
    /// Generate the smallest topology containing the given sets.
    Generate {
        /// Generating set names, comma-separated.
        #[arg(
            short = 's',
            long = "sets",
            value_name = "NAMES",
            value_delimiter = ',',
            required = true
        )]
        sets: Vec<String>,
    },
    /// Restrict a topology (or a whole N-space) to a sub-universe.
    Subspace {
        /// Single topology to restrict.
        #[arg(
            short = 't',
            long = "topology",
            value_name = "NAME",
            conflicts_with = "space"
        )]
        topology: Option<String>,
        /// N-space form: component topology names, comma-separated.
        #[arg(long, value_name = "NAMES", value_delimiter = ',')]
        space: Option<Vec<String>>,
        /// Point labels of the sub-universe, comma-separated.
        #[arg(long, value_name = "LABELS", value_delimiter = ',', required = true)]
        carrier: Vec<String>,
    },
    /// Slice a topology into one crisp point-set topology per parameter.
    Crisp {
        /// Topology to slice.
        #[arg(short = 't', long = "topology", value_name = "NAME")]
        topology: String,
        /// Restrict the report to one parameter label.
        #[arg(long, value_name = "LABEL")]
        param: Option<String>,
    },
    /// Map a family onto the product space of (point, parameter) pairs and
    /// check whether the graphs form a crisp topology.
    Product {
        /// Family to map.
        #[arg(short = 't', long = "topology", value_name = "NAME")]
        topology: String,
    },
    /// Soft closure of a set in a topology.
    Closure {
        /// Ambient topology.
        #[arg(short = 't', long = "topology", value_name = "NAME")]
        topology: String,
        /// Set whose closure is taken.
        #[arg(short = 's', long = "set", value_name = "NAME")]
        set: String,
    },
    /// List the soft points of a set in canonical order.
    Points {
        /// Set whose soft points are listed.
        #[arg(short = 's', long = "set", value_name = "NAME")]
        set: String,
    },
    /// Check a separation axiom over an N-space (or a single topology).
    Separation {
        /// Component topology names, comma-separated.
        #[arg(long, value_name = "NAMES", value_delimiter = ',', required = true)]
        space: Vec<String>,
        /// Axiom to check: t0, t1 or t2.
        #[arg(long, value_name = "AXIOM")]
        axiom: String,
        /// Pool the declared families as-is, without requiring each
        /// component to satisfy the topology axioms.
        #[arg(long)]
        permissive: bool,
    },
    /// Run one proposition from the built-in registry.
    Oracle {
        /// Registry name of the proposition.
        #[arg(long, value_name = "NAME")]
        prop: String,
        /// Points in the randomized lane's universe.
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Parameters in the randomized lane's context.
        #[arg(long, value_name = "M")]
        m: Option<usize>,
        /// Number of random trials.
        #[arg(long, value_name = "K")]
        trials: Option<usize>,
        /// Seed for the random trials.
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
    },
}

/// One finished computation: the envelope fields plus the text rendering.
struct Report {
    ok: bool,
    result: Value,
    witness: Option<Value>,
    text: String,
}

impl Report {
    fn render(&self, json: bool) -> String {
        if json {
            let envelope = json!({
                "ok": self.ok,
                "result": self.result,
                "witness": self.witness,
            });
            let mut out = serde_json::to_string_pretty(&envelope)
                .expect("envelope serializes");
            out.push('\n');
            out
        } else {
            self.text.clone()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    match &cli.command {
        Command::Validate { topology } => cmd_validate(&load(cli)?, topology),
        Command::Meet { topology } => cmd_meet(&load(cli)?, topology),
        Command::Sup { topology } => cmd_sup(&load(cli)?, topology),
        Command::Generate { sets } => cmd_generate(&load(cli)?, sets),
        Command::Subspace {
            topology,
            space,
            carrier,
        } => cmd_subspace(&load(cli)?, topology.as_deref(), space.as_deref(), carrier),
        Command::Crisp { topology, param } => cmd_crisp(&load(cli)?, topology, param.as_deref()),
        Command::Product { topology } => cmd_product(&load(cli)?, topology),
        Command::Closure { topology, set } => cmd_closure(&load(cli)?, topology, set),
        Command::Points { set } => cmd_points(&load(cli)?, set),
        Command::Separation {
            space,
            axiom,
            permissive,
        } => cmd_separation(&load(cli)?, space, axiom, *permissive),
        Command::Oracle {
            prop,
            n,
            m,
            trials,
            seed,
        } => {
            // An oracle run needs no workspace, but when a file is supplied
            // it must at least load cleanly.
            if cli.file.is_some() {
                load(cli)?;
            }
            cmd_oracle(prop, *n, *m, *trials, *seed)
        }
    }
}

fn load(cli: &Cli) -> Result<Workspace, String> {
    let path = cli
        .file
        .as_ref()
        .ok_or_else(|| "--file is required for this command".to_string())?;
    Workspace::load(path).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

fn label_set(ctx: &Arc<Context>, points: &[usize]) -> String {
    let labels: Vec<&str> = points.iter().map(|&x| ctx.point(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

/// Rows of a soft set as indented `e: {labels}` lines, one per parameter.
fn set_block(set: &SoftSet, indent: &str) -> String {
    let ctx = set.context();
    let mut out = String::new();
    for e in 0..ctx.parameter_count() {
        out.push_str(&format!(
            "{indent}{}: {}\n",
            ctx.parameter(e),
            label_set(ctx, &set.row(e))
        ));
    }
    out
}

/// A soft set's non-empty rows as a JSON object, the workspace file shape.
fn rows_value(set: &SoftSet) -> Value {
    let ctx = set.context();
    let mut rows = Map::new();
    for e in 0..ctx.parameter_count() {
        let row = set.row(e);
        if !row.is_empty() {
            rows.insert(
                ctx.parameter(e).to_string(),
                Value::Array(
                    row.iter()
                        .map(|&x| Value::String(ctx.point(x).to_string()))
                        .collect(),
                ),
            );
        }
    }
    Value::Object(rows)
}

fn point_value(p: &SoftPoint) -> Value {
    let ctx = p.context();
    json!({
        "point": ctx.point(p.point()),
        "parameter": ctx.parameter(p.parameter()),
    })
}

fn context_lines(ctx: &Arc<Context>) -> String {
    format!(
        "universe: {}\nparameters: {}\n",
        ctx.points().join(", "),
        ctx.parameters().join(", ")
    )
}

/// Assigns output names to computed family members: reserved names for the
/// null/absolute sets, declared names where a member equals a workspace set,
/// H1, H2, … for genuinely new sets in order of first appearance (member
/// lists arrive in canonical order).
struct Namer<'a> {
    source: Option<&'a Workspace>,
    out: Workspace,
    fresh: usize,
}

impl<'a> Namer<'a> {
    fn new(ctx: &Arc<Context>, source: Option<&'a Workspace>) -> Namer<'a> {
        Namer {
            source,
            out: Workspace::new(ctx),
            fresh: 0,
        }
    }

    fn name(&mut self, set: &SoftSet) -> Result<String, String> {
        if set.is_null() {
            return Ok(NULL_NAME.to_string());
        }
        if set.is_absolute() {
            return Ok(ABS_NAME.to_string());
        }
        if let Some(existing) = self
            .out
            .sets()
            .iter()
            .find(|(_, s)| *s == set)
            .map(|(n, _)| n.clone())
        {
            return Ok(existing);
        }
        let name = match self.source.and_then(|ws| ws.name_of(set)) {
            Some(declared) => declared.to_string(),
            None => {
                self.fresh += 1;
                format!("H{}", self.fresh)
            }
        };
        self.out
            .add_set(&name, set.clone())
            .map_err(|e| e.to_string())?;
        Ok(name)
    }

    fn add_topology(&mut self, name: &str, opens: &[SoftSet]) -> Result<Vec<String>, String> {
        let members: Vec<String> = opens
            .iter()
            .map(|o| self.name(o))
            .collect::<Result<_, _>>()?;
        self.out
            .add_topology(name, members.clone())
            .map_err(|e| e.to_string())?;
        Ok(members)
    }
}

/// The standard report for commands that output named topologies: header
/// lines per topology, then the definition of every non-reserved member.
fn topology_report(namer: Namer<'_>, headers: &[(String, Vec<String>)]) -> Report {
    let mut text = context_lines(namer.out.context());
    for (name, members) in headers {
        text.push_str(&format!("{name} = {{{}}}\n", members.join(", ")));
    }
    for (name, set) in namer.out.sets() {
        text.push_str(&format!("{name}:\n"));
        text.push_str(&set_block(set, "  "));
    }
    Report {
        ok: true,
        result: namer.out.to_value(),
        witness: None,
        text,
    }
}

/// Text and JSON forms of an axiom violation, with members named.
fn violation_witness(members: &[String], v: &Violation) -> (String, Value) {
    match v.kind {
        ViolationKind::MissingNull => (
            "the null soft set is missing".to_string(),
            json!({"kind": "missing-null"}),
        ),
        ViolationKind::MissingAbsolute => (
            "the absolute soft set is missing".to_string(),
            json!({"kind": "missing-absolute"}),
        ),
        ViolationKind::MissingUnion | ViolationKind::MissingIntersection => {
            let (i, j) = v.operands.expect("pairwise violations carry operands");
            let op = if v.kind == ViolationKind::MissingUnion {
                "union"
            } else {
                "intersection"
            };
            let kind = if v.kind == ViolationKind::MissingUnion {
                "missing-union"
            } else {
                "missing-intersection"
            };
            (
                format!(
                    "the {op} of {} and {} is missing: {}",
                    members[i], members[j], v.missing
                ),
                json!({
                    "kind": kind,
                    "members": [members[i], members[j]],
                    "set": rows_value(&v.missing),
                }),
            )
        }
    }
}

/// Resolves a named family into a validated topology, mapping failure to a
/// usage-level error (the command needs a topology, the family is not one).
fn require_topology(ws: &Workspace, name: &str) -> Result<SoftTopology, String> {
    let family = ws.family(name).map_err(|e| e.to_string())?;
    let report = validate(ws.context(), &family).map_err(|e| e.to_string())?;
    if let Some(v) = &report.violation {
        let members = ws.topology_members(name).map_err(|e| e.to_string())?;
        let (text, _) = violation_witness(members, v);
        return Err(format!("`{name}` is not a soft topology: {text}"));
    }
    SoftTopology::new(ws.context(), &family).map_err(|e| e.to_string())
}

fn point_labels(carrier: &[String], ctx: &Arc<Context>) -> Result<Vec<usize>, String> {
    carrier
        .iter()
        .map(|label| {
            ctx.point_index(label)
                .ok_or_else(|| format!("unknown point label `{label}`"))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_validate(ws: &Workspace, name: &str) -> Result<Report, String> {
    let family = ws.family(name).map_err(|e| e.to_string())?;
    let report = validate(ws.context(), &family).map_err(|e| e.to_string())?;
    let result = json!({
        "topology": name,
        "valid": report.is_valid(),
        "distinct_members": report.distinct_members,
    });
    match &report.violation {
        None => Ok(Report {
            ok: true,
            result,
            witness: None,
            text: format!(
                "{name}: soft topology with {} distinct members\n",
                report.distinct_members
            ),
        }),
        Some(v) => {
            let members = ws.topology_members(name).map_err(|e| e.to_string())?;
            let (line, value) = violation_witness(members, v);
            Ok(Report {
                ok: false,
                result,
                witness: Some(value),
                text: format!("{name}: not a soft topology\nviolation: {line}\n"),
            })
        }
    }
}

fn cmd_meet(ws: &Workspace, names: &[String]) -> Result<Report, String> {
    let tops: Vec<SoftTopology> = names
        .iter()
        .map(|n| require_topology(ws, n))
        .collect::<Result<_, _>>()?;
    let meet = SoftTopology::meet(&tops).map_err(|e| e.to_string())?;
    let mut namer = Namer::new(ws.context(), Some(ws));
    let members = namer.add_topology("meet", meet.opens())?;
    Ok(topology_report(namer, &[("meet".to_string(), members)]))
}

fn cmd_sup(ws: &Workspace, names: &[String]) -> Result<Report, String> {
    let tops: Vec<SoftTopology> = names
        .iter()
        .map(|n| require_topology(ws, n))
        .collect::<Result<_, _>>()?;
    let sup = SoftTopology::join(&tops).map_err(|e| e.to_string())?;
    let mut namer = Namer::new(ws.context(), Some(ws));
    let members = namer.add_topology("sup", sup.opens())?;
    Ok(topology_report(namer, &[("sup".to_string(), members)]))
}

fn cmd_generate(ws: &Workspace, set_names: &[String]) -> Result<Report, String> {
    let sets: Vec<SoftSet> = set_names
        .iter()
        .map(|n| ws.resolve_set(n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let top = SoftTopology::generate(ws.context(), &sets).map_err(|e| e.to_string())?;
    let mut namer = Namer::new(ws.context(), Some(ws));
    let members = namer.add_topology("generated", top.opens())?;
    Ok(topology_report(namer, &[("generated".to_string(), members)]))
}

fn cmd_subspace(
    ws: &Workspace,
    topology: Option<&str>,
    space: Option<&[String]>,
    carrier: &[String],
) -> Result<Report, String> {
    let carrier = point_labels(carrier, ws.context())?;
    let names: Vec<String> = match (topology, space) {
        (Some(t), None) => vec![t.to_string()],
        (None, Some(s)) => s.to_vec(),
        (None, None) => return Err("one of --topology or --space is required".to_string()),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    warn_duplicates(&names);
    let tops: Vec<SoftTopology> = names
        .iter()
        .map(|n| require_topology(ws, n))
        .collect::<Result<_, _>>()?;
    let space = SoftNSpace::new(ws.context(), tops).map_err(|e| e.to_string())?;
    let sub = space.n_subspace(&carrier).map_err(|e| e.to_string())?;
    // The restrictions live over a fresh context, so declared names cannot
    // carry over; everything non-reserved is auto-named.
    let mut namer = Namer::new(sub.context(), None);
    let mut headers = Vec::new();
    for (name, component) in names.iter().zip(sub.topologies()) {
        headers.push((name.clone(), namer.add_topology(name, component.opens())?));
    }
    Ok(topology_report(namer, &headers))
}

fn cmd_crisp(ws: &Workspace, name: &str, param: Option<&str>) -> Result<Report, String> {
    let top = require_topology(ws, name)?;
    let ctx = ws.context();
    let parameters: Vec<usize> = match param {
        Some(label) => vec![ctx
            .parameter_index(label)
            .ok_or_else(|| format!("unknown parameter label `{label}`"))?],
        None => (0..ctx.parameter_count()).collect(),
    };
    let mut text = String::new();
    let mut slices = Map::new();
    for e in parameters {
        let slice = top.crisp_slice(e).map_err(|err| err.to_string())?;
        let rendered: Vec<String> = slice.iter().map(|s| label_set(ctx, s)).collect();
        text.push_str(&format!(
            "{name} at {}: {}\n",
            ctx.parameter(e),
            rendered.join(", ")
        ));
        slices.insert(
            ctx.parameter(e).to_string(),
            Value::Array(
                slice
                    .iter()
                    .map(|s| {
                        Value::Array(
                            s.iter()
                                .map(|&x| Value::String(ctx.point(x).to_string()))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        );
    }
    Ok(Report {
        ok: true,
        result: json!({"topology": name, "slices": slices}),
        witness: None,
        text,
    })
}

fn cmd_product(ws: &Workspace, name: &str) -> Result<Report, String> {
    let family = ws.family(name).map_err(|e| e.to_string())?;
    let ctx = ws.context();
    let crisp = soft_topology::CrispFamily::from_soft_family(ctx.cells(), &family);
    let is_topology = crisp.is_topology();
    let mut text = format!(
        "product points: {} (point, parameter) pairs\nmembers: {}\n",
        ctx.cells(),
        crisp.len()
    );
    let mut members = Vec::new();
    for graph in crisp.member_sets() {
        let pairs: Vec<String> = graph
            .iter()
            .map(|&cell| {
                let (e, x) = ctx.cell_coords(cell);
                format!("({}, {})", ctx.point(x), ctx.parameter(e))
            })
            .collect();
        text.push_str(&format!("{{{}}}\n", pairs.join(", ")));
        members.push(Value::Array(
            graph
                .iter()
                .map(|&cell| {
                    let (e, x) = ctx.cell_coords(cell);
                    json!({"point": ctx.point(x), "parameter": ctx.parameter(e)})
                })
                .collect(),
        ));
    }
    text.push_str(&format!(
        "crisp topology: {}\n",
        if is_topology { "yes" } else { "no" }
    ));
    let result = json!({
        "topology": name,
        "points": ctx.cells(),
        "family": members,
        "is_topology": is_topology,
    });
    if is_topology {
        Ok(Report {
            ok: true,
            result,
            witness: None,
            text,
        })
    } else {
        let report = validate(ctx, &family).map_err(|e| e.to_string())?;
        let v = report.violation.expect("the equivalent soft check fails too");
        let members = ws.topology_members(name).map_err(|e| e.to_string())?;
        let (line, value) = violation_witness(members, &v);
        text.push_str(&format!("violation: {line}\n"));
        Ok(Report {
            ok: false,
            result,
            witness: Some(value),
            text,
        })
    }
}

fn cmd_closure(ws: &Workspace, topology: &str, set: &str) -> Result<Report, String> {
    let top = require_topology(ws, topology)?;
    let target = ws.resolve_set(set).map_err(|e| e.to_string())?;
    let closure = top.closure(&target).map_err(|e| e.to_string())?;
    let already = closure == target;
    let equals = ws.name_of(&closure).map(str::to_string);
    let mut text = format!("closure({set}) in {topology}:\n");
    text.push_str(&set_block(&closure, "  "));
    if let Some(n) = &equals {
        text.push_str(&format!("equals: {n}\n"));
    }
    text.push_str(&format!(
        "{set} already closed: {}\n",
        if already { "yes" } else { "no" }
    ));
    Ok(Report {
        ok: true,
        result: json!({
            "topology": topology,
            "set": set,
            "closure": rows_value(&closure),
            "equals": equals,
            "already_closed": already,
        }),
        witness: None,
        text,
    })
}

fn cmd_points(ws: &Workspace, set: &str) -> Result<Report, String> {
    let target = ws.resolve_set(set).map_err(|e| e.to_string())?;
    let points = target.soft_points();
    let mut text = format!("soft points of {set}: {}\n", points.len());
    for p in &points {
        text.push_str(&format!("{p}\n"));
    }
    Ok(Report {
        ok: true,
        result: json!({
            "set": set,
            "points": points.iter().map(point_value).collect::<Vec<_>>(),
        }),
        witness: None,
        text,
    })
}

fn cmd_separation(
    ws: &Workspace,
    space: &[String],
    axiom: &str,
    permissive: bool,
) -> Result<Report, String> {
    let axiom = SepAxiom::from_str(axiom).map_err(|e| e.to_string())?;
    warn_duplicates(space);
    let report = if permissive {
        let families: Vec<Vec<SoftSet>> = space
            .iter()
            .map(|n| ws.family(n).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        soft_topology::PooledFamily::new(ws.context(), &families)
            .map_err(|e| e.to_string())?
            .check(axiom)
    } else {
        let tops: Vec<SoftTopology> = space
            .iter()
            .map(|n| require_topology(ws, n))
            .collect::<Result<_, _>>()?;
        SoftNSpace::new(ws.context(), tops)
            .map_err(|e| e.to_string())?
            .nwise(axiom)
    };
    let mut text = format!(
        "axiom: {}\nspace: {}\nmode: {}\nholds: {}\n",
        axiom.name(),
        space.join(", "),
        if permissive { "permissive" } else { "strict" },
        if report.holds { "yes" } else { "no" }
    );
    let witness = report.witness.as_ref().map(|(p, q)| {
        text.push_str(&format!("witness: {p}, {q}\n"));
        json!({"first": point_value(p), "second": point_value(q)})
    });
    Ok(Report {
        ok: report.holds,
        result: json!({
            "axiom": axiom.name(),
            "space": space,
            "permissive": permissive,
            "holds": report.holds,
        }),
        witness,
        text,
    })
}

fn cmd_oracle(
    prop: &str,
    n: Option<usize>,
    m: Option<usize>,
    trials: Option<usize>,
    seed: Option<u64>,
) -> Result<Report, String> {
    let defaults = EnumerationBudget::default();
    let budget = EnumerationBudget {
        random_points: n.unwrap_or(defaults.random_points),
        random_parameters: m.unwrap_or(defaults.random_parameters),
        trials: trials.unwrap_or(defaults.trials),
        seed: seed.unwrap_or(defaults.seed),
        ..defaults
    };
    let report = check_proposition(prop, &budget).map_err(|e| e.to_string())?;
    let mut text = format!(
        "prop: {}\nsummary: {}\ncases: {}\npass: {}\n",
        report.name,
        report.summary,
        report.cases,
        if report.pass { "yes" } else { "no" }
    );
    let witness = report.finding.as_ref().map(|f| {
        text.push_str(&format!("finding: {}\nworkspace:\n{}", f.description, f.workspace.to_json()));
        json!({
            "description": f.description,
            "workspace": f.workspace.to_value(),
        })
    });
    Ok(Report {
        ok: report.pass,
        result: json!({
            "prop": report.name,
            "summary": report.summary,
            "cases": report.cases,
            "pass": report.pass,
        }),
        witness,
        text,
    })
}

fn warn_duplicates(names: &[String]) {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            eprintln!("warning: component `{name}` appears more than once in --space");
        }
    }
}
