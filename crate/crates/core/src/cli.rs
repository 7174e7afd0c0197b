//! The `hyperspec` command line.
//!
//! Exit codes: 0 on success, 1 on an error or a failed verdict, 2 on a usage
//! error. Vertex indices are 0-based everywhere.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::canon::{canonical_form, generate_with_forms};
use crate::error::{Error, Result};
use crate::extremal::{
    check_enumerable, verify_broom_chain, verify_f_vs_b3, verify_orbit_symmetry, verify_ordering, verify_quintic_monotone,
    BroomChain, OrderingCertificate, QuinticChain,
};
use crate::families::{hyperstar_part, FamilyKind, FamilySpec};
use crate::grafts::{campaign, graft1, graft2, graft3, random_graft1, random_graft2, random_graft3, GraftReport, Verdict};
use crate::hypergraph::Hypergraph;
use crate::numfmt::{sig17, Sig17};
use crate::spectral::{distance_matrix, spectral_radius, SpectralJson, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::spectral::PowerConfig;
use crate::uhg::{from_json, read_uhg, to_uhg, write_uhg, HypergraphJson};

const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Residual tolerance of the power iteration.
    #[arg(long = "tol", global = true, default_value_t = DEFAULT_TOL)]
    pub tolerance: f64,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Base seed for random campaigns.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
}

impl RunConfig {
    fn power(&self) -> PowerConfig {
        PowerConfig { tol: self.tolerance, max_iter: self.max_iter }
    }

    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hyperspec", version, about = "Distance spectral radius of uniform hypergraphs")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member and write it as .uhg.
    Family(FamilyArgs),
    /// Spectral radius and Perron vector of a hypergraph file.
    Rho { input: PathBuf },
    /// Compare the two sides of a graft transformation.
    Graft(GraftArgs),
    /// List the hypertree isomorphism classes with m edges.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the extremal results over all hypertrees with m edges.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
    },
    /// Distance matrix of a hypergraph file.
    Distance { input: PathBuf },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, required_unless_present = "spec")]
    kind: Option<FamilyKind>,
    /// A FamilySpec JSON file instead of flags.
    #[arg(long, conflicts_with = "kind")]
    spec: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Base hypergraph for the rewriting kinds.
    #[arg(long)]
    base: Option<PathBuf>,
    /// Hyperstar parts for edge-split, as edge counts `t1,t2,...`.
    #[arg(long, value_delimiter = ',')]
    stars: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraftArgs {
    #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=3))]
    kind: u8,
    #[arg(long, required_unless_present = "campaign")]
    input: Option<PathBuf>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Graft III parts given as `file.uhg:root`.
    #[arg(long = "part")]
    parts: Vec<String>,
    /// Graft III hyperstar parts as edge counts `t1,t2,...`.
    #[arg(long, value_delimiter = ',')]
    stars: Vec<usize>,
    /// Run this many seeded random instances instead of one explicit graft.
    #[arg(long, conflicts_with = "input")]
    campaign: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Max,
    Min,
    SecondMax,
    SecondMin,
    Broom,
    Quintic,
    Orbit,
}

impl clap::ValueEnum for FamilyKind {
    fn value_variants<'a>() -> &'a [Self] {
        &FamilyKind::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(args, &mut out, &mut err)
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 2 { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    if cli.config.tolerance.is_nan() || cli.config.tolerance <= 0.0 {
        let _ = writeln!(err, "error: --tol must be positive, got {}", cli.config.tolerance);
        return 2;
    }
    if cli.config.max_iter < 1 {
        let _ = writeln!(err, "error: --max-iter must be at least 1");
        return 2;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = std::env::var("HYPERSPEC_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        pool = pool.num_threads(t.max(1));
    }
    let mut buf = Vec::new();
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
        Err(e) => Err(Error::Io(e.to_string())),
    };
    if out.write_all(&buf).and_then(|_| out.flush()).is_err() {
        return 1;
    }
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_graph(path: &Path) -> Result<Hypergraph> {
    if path.extension().is_some_and(|e| e == "json") {
        from_json(&fs::read_to_string(path)?)
    } else {
        read_uhg(path)
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

/// Returns whether every verdict passed.
fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Family(args) => family(args, cfg, out).map(|_| true),
        Command::Rho { input } => rho(input, cfg, out).map(|_| true),
        Command::Graft(args) => graft(args, cfg, out),
        Command::Enumerate { k, m, out: dir } => enumerate(*k, *m, dir.as_deref(), cfg, out).map(|_| true),
        Command::Verify { k, m, theorem } => verify(*k, *m, *theorem, cfg, out),
        Command::Distance { input } => distance(input, cfg, out).map(|_| true),
    }
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec> {
    if let Some(path) = &args.spec {
        return Ok(serde_json::from_str(&fs::read_to_string(path)?)?);
    }
    let kind = args.kind.ok_or_else(|| Error::MissingParameter("kind".into()))?;
    let named = [
        ("n", args.n),
        ("k", args.k),
        ("delta", args.delta),
        ("a", args.a),
        ("u", args.u),
        ("v", args.v),
        ("p", args.p),
        ("q", args.q),
        ("e", args.e),
        ("s", args.s),
    ];
    let params: Vec<(&str, usize)> = named.iter().filter_map(|&(name, v)| v.map(|v| (name, v))).collect();
    let mut spec = FamilySpec::new(kind, &params);
    if let Some(base) = &args.base {
        spec = spec.with_base(&read_graph(base)?);
    }
    if !args.stars.is_empty() {
        let k = match spec.params.get("k") {
            Some(&k) => usize::try_from(k).map_err(|_| Error::InvalidParameter { name: "k".into(), value: k })?,
            None => return Err(Error::MissingParameter("k".into())),
        };
        let parts = args.stars.iter().map(|&t| hyperstar_part(t, k)).collect::<Result<Vec<_>>>()?;
        spec = spec.with_parts(&parts);
    }
    Ok(spec)
}

fn family(args: &FamilyArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let spec = family_spec(args)?;
    let g = spec.materialize()?;
    if let Some(path) = &args.out {
        write_uhg(path, &g)?;
    }
    match cfg.format() {
        Format::Json => {
            #[derive(Serialize)]
            struct FamilyJson<'a> {
                schema: u32,
                spec: &'a FamilySpec,
                graph: HypergraphJson,
                code: String,
            }
            emit_json(out, &FamilyJson { schema: SCHEMA, spec: &spec, graph: (&g).into(), code: canonical_form(&g).to_string() })
        }
        _ if args.out.is_some() => Ok(()),
        _ => {
            write!(out, "{}", to_uhg(&g)?)?;
            Ok(())
        }
    }
}

fn rho(input: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let g = read_graph(input)?;
    let r = spectral_radius(&g, cfg.power())?;
    match cfg.format() {
        Format::Json => {
            let s = SpectralJson::from(&r);
            #[derive(Serialize)]
            struct RhoJson {
                schema: u32,
                n: usize,
                m: usize,
                rho: Sig17,
                perron: Vec<Sig17>,
                residual: Sig17,
                iterations: usize,
            }
            emit_json(
                out,
                &RhoJson {
                    schema: SCHEMA,
                    n: g.n(),
                    m: g.m(),
                    rho: s.rho,
                    perron: s.perron,
                    residual: s.residual,
                    iterations: s.iterations,
                },
            )
        }
        Format::Csv => {
            writeln!(out, "vertex,perron")?;
            for (v, x) in r.perron.iter().enumerate() {
                writeln!(out, "{v},{}", sig17(*x))?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "rho = {}", r.rho)?;
            writeln!(out, "residual = {:e} after {} iterations", r.residual, r.iterations)?;
            let xs: Vec<String> = r.perron.iter().map(|x| format!("{x:.10}")).collect();
            writeln!(out, "perron = [{}]", xs.join(", "))?;
            Ok(())
        }
    }
}

fn need(value: Option<usize>, name: &str) -> Result<usize> {
    value.ok_or_else(|| Error::MissingParameter(name.into()))
}

fn graft_parts(args: &GraftArgs, k: usize) -> Result<Vec<(Hypergraph, usize)>> {
    if !args.stars.is_empty() {
        return args.stars.iter().map(|&t| hyperstar_part(t, k)).collect();
    }
    args.parts
        .iter()
        .map(|p| {
            let (file, root) = p
                .rsplit_once(':')
                .ok_or_else(|| Error::PreconditionViolated(format!("part `{p}` is not `file:root`")))?;
            let root = root
                .parse::<usize>()
                .map_err(|_| Error::PreconditionViolated(format!("bad root in part `{p}`")))?;
            let g = read_graph(Path::new(file))?;
            g.check_vertex(root)?;
            Ok((g, root))
        })
        .collect()
}

fn report_line(r: &GraftReport) -> String {
    format!("{:?}: before {} after {} gap {:e}", r.verdict, r.before_rho, r.after_rho, r.gap)
}

fn graft(args: &GraftArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let power = cfg.power();
    if let Some(count) = args.campaign {
        return graft_campaign(args.kind, cfg.seed..cfg.seed + count, cfg, out);
    }
    let g = read_graph(args.input.as_deref().expect("required by clap"))?;
    let json = cfg.format() == Format::Json;
    match args.kind {
        1 => {
            let r = graft1(&g, need(args.u, "u")?, need(args.p, "p")?, need(args.q, "q")?, power)?;
            if json {
                emit_json(out, &serde_json::json!({ "schema": SCHEMA, "graft": 1, "report": r_raw(&r)? }))?;
            } else {
                writeln!(out, "{}", report_line(&r))?;
            }
            Ok(r.verdict.is_ok())
        }
        2 => {
            let r = graft2(
                &g,
                need(args.u, "u")?,
                need(args.v, "v")?,
                need(args.e, "e")?,
                need(args.p, "p")?,
                need(args.q, "q")?,
                power,
            )?;
            if json {
                emit_json(out, &serde_json::json!({ "schema": SCHEMA, "graft": 2, "report": r_raw(&r)? }))?;
            } else {
                writeln!(out, "toward u: {}", report_line(&r.toward_u))?;
                writeln!(out, "toward v: {}", report_line(&r.toward_v))?;
                writeln!(out, "verdict: {:?}", r.verdict)?;
                if let Some(c) = r.corollary {
                    writeln!(out, "corollary: {c:?}")?;
                }
            }
            Ok(r.verdict.is_ok() && r.corollary.is_none_or(Verdict::is_ok))
        }
        _ => {
            let k = g.uniformity()?;
            let parts = graft_parts(args, k)?;
            let r = graft3(&g, need(args.e, "e")?, need(args.s, "s")?, &parts, power)?;
            if json {
                emit_json(out, &serde_json::json!({ "schema": SCHEMA, "graft": 3, "report": r_raw(&r)? }))?;
            } else {
                writeln!(out, "{}", report_line(&r))?;
                if !r.hypothesis_met {
                    writeln!(out, "hypothesis not met: every part is a single vertex")?;
                }
            }
            Ok(r.verdict.is_ok() || !r.hypothesis_met)
        }
    }
}

/// Embeds an already serialized value without reparsing its numbers.
fn r_raw<T: Serialize>(value: &T) -> Result<Box<serde_json::value::RawValue>> {
    Ok(serde_json::value::RawValue::from_string(serde_json::to_string(value)?)?)
}

fn graft_campaign(kind: u8, seeds: std::ops::Range<u64>, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let power = cfg.power();
    let verdicts: Vec<(u64, Verdict, f64)> = match kind {
        1 => campaign(seeds, |s| random_graft1(s, power).map(|r| (s, r.verdict, r.gap)))?,
        2 => campaign(seeds, |s| {
            random_graft2(s, power).map(|r| {
                let gap = r.toward_u.gap.max(r.toward_v.gap);
                let v = match r.corollary {
                    Some(Verdict::Violation) => Verdict::Violation,
                    _ => r.verdict,
                };
                (s, v, gap)
            })
        })?,
        _ => campaign(seeds, |s| random_graft3(s, power).map(|r| (s, r.verdict, r.gap)))?,
    };
    let count = |v: Verdict| verdicts.iter().filter(|x| x.1 == v).count();
    let (strict, indist, viol) = (count(Verdict::StrictPass), count(Verdict::Indistinguishable), count(Verdict::Violation));
    match cfg.format() {
        Format::Json => {
            #[derive(Serialize)]
            struct Instance {
                seed: u64,
                verdict: Verdict,
                gap: Sig17,
            }
            #[derive(Serialize)]
            struct CampaignJson {
                schema: u32,
                graft: u8,
                instances: usize,
                strict_pass: usize,
                indistinguishable: usize,
                violation: usize,
                results: Vec<Instance>,
            }
            emit_json(
                out,
                &CampaignJson {
                    schema: SCHEMA,
                    graft: kind,
                    instances: verdicts.len(),
                    strict_pass: strict,
                    indistinguishable: indist,
                    violation: viol,
                    results: verdicts.iter().map(|&(seed, verdict, gap)| Instance { seed, verdict, gap: Sig17(gap) }).collect(),
                },
            )?;
        }
        Format::Csv => {
            writeln!(out, "seed,verdict,gap")?;
            for (seed, v, gap) in &verdicts {
                writeln!(out, "{seed},{v:?},{}", sig17(*gap))?;
            }
        }
        Format::Text => {
            writeln!(
                out,
                "graft {kind}: {} instances, {strict} strict, {indist} indistinguishable, {viol} violations",
                verdicts.len()
            )?;
            for (seed, v, gap) in verdicts.iter().filter(|x| x.1 != Verdict::StrictPass) {
                writeln!(out, "  seed {seed}: {v:?} gap {gap:e}")?;
            }
        }
    }
    Ok(viol == 0)
}

fn enumerate(k: usize, m: usize, dir: Option<&Path>, cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let n = check_enumerable(k, m)?;
    let classes = generate_with_forms(k, m);
    let width = classes.len().to_string().len().max(3);
    let names: Vec<String> = (0..classes.len()).map(|i| format!("class_{i:0width$}.uhg")).collect();
    #[derive(Serialize)]
    struct Entry {
        file: String,
        code: String,
        edges: Vec<Vec<usize>>,
    }
    #[derive(Serialize)]
    struct Manifest {
        schema: u32,
        k: usize,
        m: usize,
        n: usize,
        count: usize,
        classes: Vec<Entry>,
    }
    let manifest = Manifest {
        schema: SCHEMA,
        k,
        m,
        n,
        count: classes.len(),
        classes: classes
            .iter()
            .zip(&names)
            .map(|((code, g), file)| Entry { file: file.clone(), code: code.to_string(), edges: g.edges().to_vec() })
            .collect(),
    };
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
        for ((_, g), file) in classes.iter().zip(&names) {
            write_uhg(dir.join(file), g)?;
        }
        fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&manifest)? + "\n")?;
    }
    match cfg.format() {
        Format::Json => emit_json(out, &manifest),
        Format::Csv => {
            writeln!(out, "index,code")?;
            for (i, (code, _)) in classes.iter().enumerate() {
                writeln!(out, "{i},{code}")?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "k = {k}, m = {m}, n = {n}: {} classes", classes.len())?;
            for (code, _) in &classes {
                writeln!(out, "{code}")?;
            }
            Ok(())
        }
    }
}

#[derive(Default, Serialize)]
struct VerifyJson {
    schema: u32,
    k: usize,
    m: usize,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordering: Option<OrderingCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f_vs_b3: Option<GraftReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    broom: Option<BroomChain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quintic: Option<QuinticChain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_max_deviation: Option<Sig17>,
    ok: bool,
}

/// Largest within-orbit Perron spread accepted by `verify --theorem orbit`.
pub const ORBIT_TOLERANCE: f64 = 1e-8;

fn verify(k: usize, m: usize, theorem: Option<Theorem>, cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let n = check_enumerable(k, m)?;
    let power = cfg.power();
    let wants = |t: Theorem| theorem.is_none() || theorem == Some(t);
    let ordering_names: Vec<&str> = [
        (Theorem::Max, "max"),
        (Theorem::Min, "min"),
        (Theorem::SecondMax, "second-max"),
        (Theorem::SecondMin, "second-min"),
    ]
    .iter()
    .filter(|(t, _)| wants(*t))
    .map(|&(_, name)| name)
    .collect();

    let mut report = VerifyJson { schema: SCHEMA, k, m, n, ok: true, ..Default::default() };
    let mut lines = Vec::new();
    if !ordering_names.is_empty() {
        let mut cert = verify_ordering(k, m, power)?;
        cert.claims.retain(|c| ordering_names.contains(&c.theorem));
        for c in &cert.claims {
            let gap = if c.gap.is_nan() { "-".to_string() } else { format!("{:e}", c.gap) };
            let witness = c.witness.as_ref().map_or("-".to_string(), |w| w.to_string());
            lines.push(format!("{}: {:?} witness {} gap {}", c.theorem, c.verdict, witness, gap));
        }
        report.ok &= cert.all_ok();
        report.ordering = Some(cert);
    }
    if wants(Theorem::SecondMax) && k >= 3 && m >= 3 {
        let r = verify_f_vs_b3(n, k, power)?;
        lines.push(format!("f-vs-b3: {}", report_line(&r)));
        report.ok &= r.verdict.is_ok();
        report.f_vs_b3 = Some(r);
    }
    if wants(Theorem::Broom) && m >= 2 {
        let chain = verify_broom_chain(n, k, power)?;
        for s in &chain.steps {
            let argmax = s.argmax.map_or("-".to_string(), |v| format!("{v:?}"));
            lines.push(format!("broom delta {}: rho {} {:?} argmax {}", s.delta, s.rho.0, s.verdict, argmax));
        }
        report.ok &= chain.all_ok();
        report.broom = Some(chain);
    }
    if wants(Theorem::Quintic) && m >= 3 {
        let chain = verify_quintic_monotone(n, k, power)?;
        for s in &chain.steps {
            lines.push(format!(
                "quintic a {}: rho {} root {} error {:e} {:?}",
                s.a, s.rho.0, s.root.0, s.root_error.0, s.verdict
            ));
        }
        report.ok &= chain.all_ok();
        report.quintic = Some(chain);
    }
    if wants(Theorem::Orbit) {
        let dev = generate_with_forms(k, m)
            .iter()
            .map(|(_, g)| verify_orbit_symmetry(g, power))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        lines.push(format!("orbit: max deviation {dev:e}"));
        report.ok &= dev <= ORBIT_TOLERANCE;
        report.orbit_max_deviation = Some(Sig17(dev));
    }
    match cfg.format() {
        Format::Json => emit_json(out, &report)?,
        _ => {
            for l in &lines {
                writeln!(out, "{l}")?;
            }
            writeln!(out, "{}", if report.ok { "ok" } else { "FAILED" })?;
        }
    }
    Ok(report.ok)
}

fn distance(input: &Path, cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let g = read_graph(input)?;
    let dm = distance_matrix(&g)?;
    match cfg.format() {
        Format::Json => {
            #[derive(Serialize)]
            struct DistanceJson {
                schema: u32,
                n: usize,
                diameter: u32,
                matrix: Vec<Vec<u32>>,
            }
            let matrix = (0..dm.n()).map(|u| dm.row(u).to_vec()).collect();
            emit_json(out, &DistanceJson { schema: SCHEMA, n: dm.n(), diameter: dm.diameter(), matrix })
        }
        Format::Csv => {
            write!(out, "{}", dm.to_csv())?;
            Ok(())
        }
        Format::Text => {
            for u in 0..dm.n() {
                let row: Vec<String> = dm.row(u).iter().map(u32::to_string).collect();
                writeln!(out, "{}", row.join(" "))?;
            }
            Ok(())
        }
    }
}
