//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 when a verification or geometry check comes out negative, 2 on
//! usage, input or resource errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::auto::{automorphism_report, verify_report, AutoError, SearchConfig, DEFAULT_NODE_BUDGET};
use crate::geometrize::geometrize;
use crate::graph::{from_json, to_dot, to_json, ColoredGraph, GraphBuilder, VertexId};
use crate::group::{make_pair, parse_group_spec, parse_subgroup_spec, GroupPair, DEFAULT_ISO_CAP};
use crate::realize::{realize, self_check};
use crate::refine::{class_size_audit, refine};
use crate::{corpus, sn_an};

#[derive(Debug, Parser)]
#[command(
    name = "incidence",
    version,
    about = "Realize group pairs as incidence systems and geometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Search-node budget per automorphism group computation.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Worker threads for the automorphism search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest group order compared by abstract pair isomorphism.
    #[arg(long, default_value_t = DEFAULT_ISO_CAP)]
    iso_cap: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            node_budget: self.budget,
            jobs: self.jobs.max(1),
            iso_cap: self.iso_cap,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Realize a group pair as an incidence system.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long)]
        normal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check vertex/edge counts and the degree table.
        #[arg(long)]
        self_check: bool,
    },
    /// Subdivide edges and attach rays so that `geometrize` applies.
    Refine {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check the sizes of the two new type classes.
        #[arg(long)]
        audit: bool,
    },
    /// Complete every edge to a chamber.
    Geometrize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Realize, geometrize and verify a group pair.
    Pipeline {
        #[arg(long)]
        group: String,
        #[arg(long)]
        normal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compute the correlation and automorphism groups of a system.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, requires = "expect_normal")]
        expect_group: Option<String>,
        #[arg(long, requires = "expect_group")]
        expect_normal: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check that every flag lies in a chamber.
    CheckGeometry {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Write a built-in example system.
    Example {
        #[command(subcommand)]
        which: ExampleCommand,
    },
    /// Write Graphviz DOT.
    ExportDot {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarize a system.
    Stats {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    Solid,
    Completed,
}

#[derive(Debug, Subcommand)]
enum ExampleCommand {
    /// The (S_n, A_n) system on n points.
    SnAn {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The triangle fixtures.
    Figure1 {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A seeded random proper colored graph.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_types: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> anyhow::Result<ColoredGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("loading {}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => out.write_all(text.as_bytes()).context("writing output"),
    }
}

fn pair_from_specs(group: &str, normal: &str) -> anyhow::Result<GroupPair> {
    let g = parse_group_spec(group).with_context(|| format!("group spec {group:?}"))?;
    let h = parse_subgroup_spec(normal)
        .and_then(|s| s.members(&g))
        .with_context(|| format!("subgroup spec {normal:?}"))?;
    Ok(make_pair(g, h)?)
}

fn single_vertex() -> ColoredGraph {
    let mut b = GraphBuilder::new(vec!["0".into()]);
    b.add_vertex(VertexId::Raw(0), 0);
    b.build().expect("one vertex")
}

/// Human-readable lines, then the JSON report on the last line. Returns
/// whether the pair matched (`None` when nothing was expected).
fn report_groups(
    out: &mut dyn Write,
    g: &ColoredGraph,
    pair: Option<&GroupPair>,
    cfg: &SearchConfig,
) -> anyhow::Result<Option<bool>> {
    let report = automorphism_report(g, cfg)?;
    let orbits = report.sigma_orbits();
    let named: Vec<Vec<&str>> = orbits
        .iter()
        .map(|o| o.iter().map(|&t| g.types()[t].as_str()).collect())
        .collect();
    writeln!(out, "correlations (Aut_cb): order {}", report.cb_order())?;
    writeln!(out, "automorphisms (Aut_c): order {}", report.c_order())?;
    let matched = match pair {
        Some(p) => {
            let verdict = verify_report(&report, p, cfg)?;
            writeln!(
                out,
                "expected pair: orders ({}, {}), match: {}",
                p.group().order(),
                p.subgroup_order(),
                verdict.pair_match
            )?;
            Some(verdict.pair_match)
        }
        None => None,
    };
    let j = json!({
        "cbOrder": report.cb_order(),
        "cOrder": report.c_order(),
        "pairMatch": matched,
        "sigmaOrbits": named,
    });
    writeln!(out, "{j}")?;
    Ok(matched)
}

fn exit_for(matched: Option<bool>) -> i32 {
    if matched == Some(false) {
        1
    } else {
        0
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Build {
            group,
            normal,
            output,
            self_check: check,
        } => {
            let pair = pair_from_specs(&group, &normal)?;
            let g = realize(&pair)?;
            if check {
                self_check(&pair, &g)?;
            }
            emit(out, output.as_deref(), &to_json(&g))?;
            Ok(0)
        }
        Command::Refine { input, output, audit } => {
            let g = read_graph(&input)?;
            let r = refine(&g)?;
            if audit {
                let a = class_size_audit(&g, &r)?;
                eprintln!(
                    "audit ok: M = {}, owners = {}, new classes ({}, {})",
                    a.m, a.owners, a.i0_count, a.i1_count
                );
            }
            emit(out, output.as_deref(), &to_json(&r))?;
            Ok(0)
        }
        Command::Geometrize { input, output } => {
            let g = read_graph(&input)?;
            let r = geometrize(&g)?;
            emit(out, output.as_deref(), &to_json(&r))?;
            Ok(0)
        }
        Command::Pipeline {
            group,
            normal,
            output,
            search,
        } => {
            let pair = pair_from_specs(&group, &normal)?;
            let geo = if pair.group().order() == 1 {
                single_vertex()
            } else {
                geometrize(&realize(&pair)?)?
            };
            let rep = geo.geometry_report();
            if !rep.is_geometry {
                bail!(
                    "pipeline output is not a geometry ({} deficient flags)",
                    rep.deficient_flags.len()
                );
            }
            emit(out, output.as_deref(), &to_json(&geo))?;
            let mut sink: Box<dyn Write> = if output.is_some() {
                Box::new(&mut *out)
            } else {
                Box::new(std::io::sink())
            };
            let matched = report_groups(&mut *sink, &geo, Some(&pair), &search.config())?;
            Ok(exit_for(matched))
        }
        Command::Verify {
            input,
            expect_group,
            expect_normal,
            search,
        } => {
            let g = read_graph(&input)?;
            let pair = match (expect_group, expect_normal) {
                (Some(gs), Some(ns)) => Some(pair_from_specs(&gs, &ns)?),
                _ => None,
            };
            let matched = report_groups(out, &g, pair.as_ref(), &search.config())?;
            Ok(exit_for(matched))
        }
        Command::CheckGeometry { input } => {
            let g = read_graph(&input)?;
            let rep = g.geometry_report();
            writeln!(out, "geometry: {}", rep.is_geometry)?;
            writeln!(out, "chambers: {}", rep.chamber_count)?;
            for f in &rep.deficient_flags {
                let ids: Vec<String> = f.iter().map(|&v| g.id(v).to_string()).collect();
                writeln!(out, "deficient maximal flag: {{{}}}", ids.join(", "))?;
            }
            Ok(if rep.is_geometry { 0 } else { 1 })
        }
        Command::Example { which } => {
            let (g, output) = match which {
                ExampleCommand::SnAn { n, output } => (sn_an::gamma_n(n)?.graph, output),
                ExampleCommand::Figure1 { variant, output } => (
                    match variant {
                        Variant::Solid => sn_an::figure1_solid(),
                        Variant::Completed => sn_an::figure1_completed(),
                    },
                    output,
                ),
                ExampleCommand::Random {
                    seed,
                    max_vertices,
                    max_types,
                    output,
                } => {
                    if max_vertices == 0 || max_types == 0 {
                        bail!("--max-vertices and --max-types must be positive");
                    }
                    (corpus::random_graph(seed, max_vertices, max_types), output)
                }
            };
            emit(out, output.as_deref(), &to_json(&g))?;
            Ok(0)
        }
        Command::ExportDot { input, output } => {
            let g = read_graph(&input)?;
            emit(out, output.as_deref(), &to_dot(&g))?;
            Ok(0)
        }
        Command::Stats { input } => {
            let g = read_graph(&input)?;
            writeln!(out, "{}", stats(&g))?;
            Ok(0)
        }
    }
}

/// Counts, class sizes, degree histogram, min degree, flag rank and the
/// geometry verdict as one JSON object.
pub fn stats(g: &ColoredGraph) -> serde_json::Value {
    let classes: serde_json::Map<String, serde_json::Value> = g
        .types()
        .iter()
        .zip(g.class_sizes())
        .map(|(t, s)| (t.clone(), json!(s)))
        .collect();
    let mut hist = std::collections::BTreeMap::new();
    for v in 0..g.vertex_count() {
        *hist.entry(g.degree(v).to_string()).or_insert(0usize) += 1;
    }
    let rep = g.geometry_report();
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "classSizes": classes,
        "degreeHistogram": hist,
        "minDegree": g.min_degree(),
        "maxFlagRank": g.max_flag_rank(),
        "isGeometry": rep.is_geometry,
        "chambers": rep.chamber_count,
    })
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if let Some(AutoError::GroupTooLarge { .. }) = e.downcast_ref::<AutoError>() {
                let _ = writeln!(err, "hint: raise --iso-cap to compare larger groups");
            }
            if let Some(AutoError::ResourceLimit { .. }) = e.downcast_ref::<AutoError>() {
                let _ = writeln!(err, "hint: raise --budget");
            }
            2
        }
    }
}
