//! Subcommands and their JSON/CSV output.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hecke_core::alcove::{block_criteria, canonical_orbit, enumerate_equivalent_paths, same_block, sum_bound, LatticePoint};
use hecke_core::diamond::verify_embedding;
use hecke_core::idempotents::{is_evaluable, rank_vector, PathIdempotents};
use hecke_core::llt::decomposition_matrix;
use hecke_core::tableaux::{enumerate_standard_tableaux, Partition, StandardTableau};

use crate::parse::{parse_partition, parse_tableau};
use crate::suites::{run_all, run_suite, suite_id, SuiteOutcome, SUITES};
use crate::svg::SvgScene;

/// Upper limit on conjugate paths drawn by `plot`.
pub const MAX_DRAWN_PATHS: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Invariant(String),
    Io(String),
}

impl CliError {
    /// 1 for bad input or domain errors, 2 for internal invariant failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "domain error: {m}"),
            CliError::Invariant(m) => write!(f, "invariant failure: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hecke_core::Error> for CliError {
    fn from(e: hecke_core::Error) -> Self {
        match e {
            hecke_core::Error::Invariant(m) => CliError::Invariant(m),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Exact computations for Hecke algebras of type A at roots of unity")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The l-core of a partition
    Core {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        l: u32,
    },
    /// Whether two partitions lie in the same block, by three criteria
    Blocks {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: usize,
    },
    /// Standard tableaux of a (skew) shape
    Tableaux {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        inner: Option<String>,
    },
    /// Path idempotent p_t, or the orbit idempotent p_[t] with --orbit
    Idempotent {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        orbit: bool,
    },
    /// Path-orbit counts and the bounds n(lambda, mu)
    Bound {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Decomposition matrix from the canonical basis
    Decomp {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        /// keep the v-graded entries
        #[arg(long)]
        v: bool,
    },
    /// Embedding of the k-row quotient of H_m(x^l)
    Embed {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: u32,
    },
    /// Run verification suites by id or name
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Render the k = 3 alcove geometry as SVG
    Plot {
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        radius: Option<i64>,
        #[arg(long)]
        out: PathBuf,
        /// print path counts next to endpoints
        #[arg(long)]
        labels: bool,
    },
}

/// What a command printed and the exit status it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub stdout: String,
    pub status: u8,
}

impl Response {
    fn ok(stdout: String) -> Self {
        Response { stdout, status: 0 }
    }
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn key(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn emit(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn check_l(l: u32) -> Result<(), CliError> {
    if l < 2 {
        return Err(CliError::Usage(format!("--l {l}: need l >= 2")));
    }
    Ok(())
}

pub fn dispatch(cli: &Cli) -> Result<Response, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Core { lambda, l } => {
            check_l(*l)?;
            let core = parse_partition(lambda)?.l_core(*l);
            Ok(Response::ok(match fmt {
                Format::Json => format!("{}\n", parts(&core)),
                Format::Csv => format!("{}\n", key(&core)),
            }))
        }
        Command::Blocks { lambda, mu, l, k } => {
            check_l(*l)?;
            let (lambda, mu) = (parse_partition(lambda)?, parse_partition(mu)?);
            let c = block_criteria(&lambda, &mu, *l, *k)?;
            let same = same_block(&lambda, &mu, *l, *k)?;
            if c[0] != c[1] || c[1] != c[2] || same != c[1] {
                return Err(CliError::Invariant(format!("block criteria disagree: {c:?}")));
            }
            Ok(Response::ok(match fmt {
                Format::Json => emit(&json!({
                    "lambda": parts(&lambda), "mu": parts(&mu), "l": l, "k": k, "same_block": same,
                    "criteria": {"cores": c[0], "residues": c[1], "orbit": c[2]},
                })),
                Format::Csv => csv(
                    &["lambda", "mu", "l", "k", "same_block", "cores", "residues", "orbit"],
                    &[vec![key(&lambda), key(&mu), l.to_string(), k.to_string(), same.to_string(), c[0].to_string(), c[1].to_string(), c[2].to_string()]],
                ),
            }))
        }
        Command::Tableaux { lambda, inner } => {
            let outer = parse_partition(lambda)?;
            let inner = inner.as_deref().map(parse_partition).transpose()?.unwrap_or_else(Partition::empty);
            let ts = enumerate_standard_tableaux(&outer, &inner)?;
            Ok(Response::ok(match fmt {
                Format::Json => emit(&json!({
                    "outer": parts(&outer), "inner": parts(&inner), "count": ts.len(),
                    "tableaux": ts.iter().map(StandardTableau::rows).collect::<Vec<_>>(),
                })),
                Format::Csv => csv(
                    &["index", "row_word"],
                    &ts.iter()
                        .enumerate()
                        .map(|(i, t)| vec![i.to_string(), t.row_word().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")])
                        .collect::<Vec<_>>(),
                ),
            }))
        }
        Command::Idempotent { tableau, l, orbit } => idempotent(fmt, tableau, *l, *orbit),
        Command::Bound { mu, l, k, lambda } => bound(fmt, mu, *l, *k, lambda.as_deref()),
        Command::Decomp { n, l, v } => {
            check_l(*l)?;
            let m = decomposition_matrix(*n, *l)?;
            Ok(Response::ok(match (fmt, v) {
                (Format::Csv, true) => m.to_csv(),
                (Format::Csv, false) => {
                    let mut header = vec!["lambda".to_string()];
                    header.extend(m.cols.iter().map(|c| c.to_string()));
                    let rows: Vec<Vec<String>> = m
                        .rows
                        .iter()
                        .map(|r| {
                            let mut row = vec![r.to_string()];
                            row.extend(m.cols.iter().map(|c| m.at_one(r, c).to_string()));
                            row
                        })
                        .collect();
                    csv(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows)
                }
                (Format::Json, _) => {
                    let entries: Vec<Vec<Value>> = m
                        .rows
                        .iter()
                        .enumerate()
                        .map(|(r, row)| {
                            m.cols
                                .iter()
                                .enumerate()
                                .map(|(c, col)| if *v { json!(m.entries[r][c].to_compact_string()) } else { json!(m.at_one(row, col)) })
                                .collect()
                        })
                        .collect();
                    emit(&json!({
                        "n": n, "l": l, "graded": v,
                        "rows": m.rows.iter().map(parts).collect::<Vec<_>>(),
                        "cols": m.cols.iter().map(parts).collect::<Vec<_>>(),
                        "entries": entries,
                    }))
                }
            }))
        }
        Command::Embed { m, k, l } => {
            check_l(*l)?;
            let r = verify_embedding(*m, *k, *l)?;
            let ok = r.factorization_ok && r.identity_ok && r.dim_generic == r.dim_expected && r.dim_at_root == r.dim_expected;
            let fields: Vec<(&str, String)> = vec![
                ("m", r.m.to_string()),
                ("k", r.k.to_string()),
                ("l", r.l.to_string()),
                ("n", r.n.to_string()),
                ("r_dim", r.r_dim.to_string()),
                ("range_dim", r.range_dim.to_string()),
                ("factorization_ok", r.factorization_ok.to_string()),
                ("squared_identity_ok", r.squared_identity_ok.to_string()),
                ("identity_ok", r.identity_ok.to_string()),
                ("dim_generic", r.dim_generic.to_string()),
                ("dim_expected", r.dim_expected.to_string()),
                ("dim_at_root", r.dim_at_root.to_string()),
                ("evaluable_in_tableau_basis", r.evaluable_in_tableau_basis.to_string()),
            ];
            let stdout = match fmt {
                Format::Json => emit(&json!({
                    "m": r.m, "k": r.k, "l": r.l, "n": r.n, "r_dim": r.r_dim, "range_dim": r.range_dim,
                    "factorization_ok": r.factorization_ok, "squared_identity_ok": r.squared_identity_ok,
                    "identity_ok": r.identity_ok, "dim_generic": r.dim_generic, "dim_expected": r.dim_expected,
                    "dim_at_root": r.dim_at_root, "evaluable_in_tableau_basis": r.evaluable_in_tableau_basis,
                })),
                Format::Csv => csv(&fields.iter().map(|f| f.0).collect::<Vec<_>>(), &[fields.iter().map(|f| f.1.clone()).collect()]),
            };
            Ok(Response { stdout, status: if ok { 0 } else { 2 } })
        }
        Command::Verify { suite } => {
            let outcomes: Vec<SuiteOutcome> = if suite == "all" {
                run_all()
            } else {
                let id = suite_id(suite).ok_or_else(|| {
                    let names: Vec<&str> = SUITES.iter().map(|s| s.1).collect();
                    CliError::Usage(format!("unknown suite '{suite}', expected all or one of {}", names.join(", ")))
                })?;
                vec![run_suite(id).expect("known suite")]
            };
            let stdout = match fmt {
                Format::Json => emit(&serde_json::to_value(&outcomes).expect("outcomes serialize")),
                Format::Csv => csv(
                    &["id", "suite", "check", "passed", "count", "detail"],
                    &outcomes
                        .iter()
                        .flat_map(|o| {
                            o.checks.iter().map(move |c| {
                                vec![o.id.to_string(), o.name.to_string(), c.name.clone(), c.passed.to_string(), c.count.to_string(), c.detail.clone()]
                            })
                        })
                        .collect::<Vec<_>>(),
                ),
            };
            let status = if outcomes.iter().all(|o| o.passed) { 0 } else { 2 };
            Ok(Response { stdout, status })
        }
        Command::Plot { mu, l, radius, out, labels } => plot(fmt, mu.as_deref(), *l, *radius, out, *labels),
    }
}

fn idempotent(fmt: Format, path: &PathBuf, l: Option<u32>, orbit: bool) -> Result<Response, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let t = parse_tableau(&text)?;
    if let Some(l) = l {
        check_l(l)?;
    }
    if orbit && l.is_none() {
        return Err(CliError::Usage("--orbit needs --l".into()));
    }
    let mut cache = PathIdempotents::new(t.size())?;
    let p = if orbit { cache.orbit(&t, l.unwrap())? } else { cache.path(&t)? };
    let alg = cache.algebra();
    let pole = l.map(|l| is_evaluable(alg, &p, l));
    let ranks = rank_vector(alg, &p, None)?;
    let terms = alg.terms_by_word(&p);
    let stdout = match fmt {
        Format::Json => {
            let pole_json = match &pole {
                Some(Err(w)) => json!({"word": w.word, "coefficient": w.coefficient.to_string(), "order": w.order}),
                _ => Value::Null,
            };
            let rank_json: BTreeMap<String, u64> = ranks.0.iter().map(|(k, v)| (key(k), *v)).collect();
            emit(&json!({
                "tableau": t.rows(), "n": t.size(), "kind": if orbit { "orbit" } else { "path" }, "l": l,
                "terms": terms.iter().map(|(w, c)| json!({"word": w, "coefficient": c.to_string()})).collect::<Vec<_>>(),
                "evaluable": pole.as_ref().map(|r| r.is_ok()), "pole": pole_json, "rank_vector": rank_json,
            }))
        }
        Format::Csv => csv(
            &["word", "coefficient"],
            &terms
                .iter()
                .map(|(w, c)| vec![w.iter().map(usize::to_string).collect::<Vec<_>>().join(" "), c.to_string()])
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Response::ok(stdout))
}

fn bound(fmt: Format, mu: &str, l: u32, k: usize, lambda: Option<&str>) -> Result<Response, CliError> {
    check_l(l)?;
    let mu = parse_partition(mu)?;
    let lambda = lambda.map(parse_partition).transpose()?;
    let summary = canonical_orbit(&mu, l, k)?;
    let sb = sum_bound(&mu, l, k)?;
    let bounds: Vec<(Partition, u64)> = match &lambda {
        Some(la) => {
            if la.size() != mu.size() || la.len() > k {
                return Err(CliError::Domain(format!("{la} must have size {} and at most {k} rows", mu.size())));
            }
            vec![(la.clone(), summary.reduced_counts.get(la).copied().unwrap_or(0))]
        }
        None => summary.reduced_counts.iter().map(|(p, &n)| (p.clone(), n)).collect(),
    };
    let stdout = match fmt {
        Format::Json => {
            let bounds_json: serde_json::Map<String, Value> = bounds.iter().map(|(p, n)| (key(p), json!(n))).collect();
            emit(&json!({
                "mu": parts(&mu), "l": l, "k": k,
                "c": summary.reference.start.0, "r": summary.residues, "steps": summary.reference.steps,
                "endpoints": summary.endpoint_counts.iter().map(|(p, n)| json!({"point": p.0, "N": n})).collect::<Vec<_>>(),
                "bounds": bounds_json,
                "sum_bound": {"value": sb.value(), "exact": sb.is_exact(), "total_paths": sb.total_paths, "paths_at_mu": sb.paths_at_mu},
            }))
        }
        Format::Csv => csv(&["lambda", "n"], &bounds.iter().map(|(p, n)| vec![key(p), n.to_string()]).collect::<Vec<_>>()),
    };
    Ok(Response::ok(stdout))
}

fn plot(fmt: Format, mu: Option<&str>, l: u32, radius: Option<i64>, out: &PathBuf, labels: bool) -> Result<Response, CliError> {
    check_l(l)?;
    let li = l as i64;
    let round_up = |v: i64| (v + li - 1) / li * li;
    let mut scene = match mu {
        None => SvgScene::empty(l, radius.unwrap_or(4 * li)),
        Some(mu) => {
            let mu = parse_partition(mu)?;
            if mu.len() > 3 {
                return Err(CliError::Domain(format!("{mu} has more than 3 rows; plots are drawn for k = 3")));
            }
            let summary = canonical_orbit(&mu, l, 3)?;
            let mut conj = enumerate_equivalent_paths(&summary.reference, l);
            conj.truncate(MAX_DRAWN_PATHS);
            let extent = summary
                .endpoint_counts
                .keys()
                .chain(std::iter::once(&LatticePoint::from_partition(&mu, 3)?))
                .map(|p| p.0[0] - p.0[2])
                .max()
                .unwrap_or(0);
            SvgScene::from_orbit(&summary, conj, l, radius.unwrap_or_else(|| round_up(extent + li)))
        }
    };
    if scene.radius <= 0 {
        return Err(CliError::Usage("--radius must be positive".into()));
    }
    scene.labels = labels;
    let svg = scene.render();
    std::fs::write(out, &svg).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    let stdout = match fmt {
        Format::Json => emit(&json!({
            "out": out.display().to_string(), "l": l, "radius": scene.radius,
            "paths": scene.conjugates.len(), "endpoints": scene.endpoints.len(),
            "critical_points": scene.critical_points().len(),
        })),
        Format::Csv => csv(
            &["out", "l", "radius", "paths", "endpoints"],
            &[vec![out.display().to_string(), l.to_string(), scene.radius.to_string(), scene.conjugates.len().to_string(), scene.endpoints.len().to_string()]],
        ),
    };
    Ok(Response::ok(stdout))
}
