use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multicirc::graph::{decode_graph6, encode_graph6, to_dot, Graph, NamedGraph, Symbol};
use multicirc::isoreg::{is_k_isoregular, is_locally_3isoregular_at, t_vertex_condition, LocalReport, TVertexReport};
use multicirc::paramtheory::{
    bicirc_odd_family, certify_range, even_m_candidates, feasible_edge_params, feasible_local_params,
    leung_ma_families, replay_batch, replay_certificate, tricirc_families, Certificate, CertificateBatch, Claim,
    EvenFamily, LocalParamSolution, ReplayReport, Verdict,
};
use multicirc::search::{self, SearchResult, SearchSpec, Survivor};
use multicirc::srg::{eigenvalues, hoffman_bound, srg_params, SrgParams};
use multicirc::Error;
use serde::Serialize;

/// Strongly regular multicirculants: construction, isoregularity checks,
/// parameter certificates and exhaustive searches.
#[derive(Parser)]
#[command(name = "multicirc", version)]
struct Cli {
    /// Worker threads for search and certify.
    #[arg(long, global = true, env = "ISOREG_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a tag, symbol or graph6 string.
    Build {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a property; exit 1 when it fails.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Local-parameter systems.
    Params {
        #[command(subcommand)]
        what: ParamsCommand,
    },
    /// Certificates over an index range (e.g. `--range 2..200`).
    Certify {
        #[arg(value_parser = parse_claim)]
        claim: Claim,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        range: (i64, i64),
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exhaustive symbol search, written as JSON lines.
    Search {
        #[arg(value_enum)]
        kind: SearchKind,
        #[arg(long)]
        n: usize,
        /// Target parameters `n,k,λ,μ`.
        #[arg(long, value_parser = parse_params)]
        params: Option<SrgParams>,
        /// Keep only 3-isoregular survivors.
        #[arg(long)]
        iso3: bool,
        /// Restrict odd n to `[S, Ŝ, T]` with `|S| = m(m+1)`, `|T| = m²`.
        #[arg(long)]
        odd_structure: bool,
        /// Unconstrained odd-n run; exit 1 on a 3-isoregular survivor or a structure violation.
        #[arg(long)]
        confirm: bool,
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Parameter tables.
    Families {
        #[arg(value_enum)]
        table: FamilyTable,
        #[arg(long, default_value_t = 10)]
        max: i64,
    },
    /// Revalidate a certificate, certificate batch or search output.
    Replay { file: PathBuf },
}

#[derive(Subcommand)]
enum CheckCommand {
    Srg { graph: String },
    Isoreg {
        graph: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    Local3 {
        graph: String,
        /// Only this vertex; all vertices by default.
        #[arg(long)]
        vertex: Option<usize>,
    },
    Tvertex {
        graph: String,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum ParamsCommand {
    /// Feasible `(Q, R, W, V)` for `(n, k, λ, μ)`.
    Solve {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        /// Edge relations only.
        #[arg(long)]
        edges: bool,
    },
    /// Candidate parameters for even m in family (b) or (c).
    Even {
        m: u64,
        #[arg(long, value_enum)]
        family: EvenFamilyArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Bicirc,
    Tricirc,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyTable {
    BicircOdd,
    LeungMa,
    Tri,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvenFamilyArg {
    B,
    C,
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo = a.trim().parse::<i64>().map_err(|e| format!("bad range start: {e}"))?;
    let hi = b.trim().parse::<i64>().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn parse_params(s: &str) -> Result<SrgParams, String> {
    let v: Vec<u64> = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|e| format!("bad parameter `{x}`: {e}")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [n, k, l, m] => Ok(SrgParams::new(n, k, l, m)),
        _ => Err(format!("expected four parameters n,k,λ,μ, got `{s}`")),
    }
}

/// Resolves a named tag, a symbol, a graph6 file or a graph6 string.
fn load_graph(arg: &str) -> Result<Graph, Error> {
    if let Ok(tag) = arg.parse::<NamedGraph>() {
        return tag.build();
    }
    if let Some((kind, _)) = arg.split_once(':') {
        if matches!(kind, "circ" | "bi" | "tri") {
            return arg.parse::<Symbol>()?.build();
        }
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{arg}: {e}")))?;
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        return decode_graph6(line);
    }
    match decode_graph6(arg) {
        Ok(g) => Ok(g),
        Err(_) if arg.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-') => {
            Err(Error::UnknownGraph(arg.to_string()))
        }
        Err(e) => Err(e),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    match output {
        Some(p) => fs::write(p, text).map_err(io),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

fn emit_json<T: Serialize>(value: &T, output: Option<&Path>) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(&text, output)
}

#[derive(Serialize)]
struct SrgReport {
    graph: String,
    srg: bool,
    params: Option<SrgParams>,
    nontrivial: bool,
    eigenvalues: Option<[String; 3]>,
    hoffman_bound: Option<String>,
}

#[derive(Serialize)]
struct LocalCheck {
    graph: String,
    locally_3isoregular: bool,
    vertices: Vec<LocalReport>,
}

#[derive(Serialize)]
struct TVertexCheck {
    graph: String,
    #[serde(flatten)]
    report: TVertexReport,
}

#[derive(Serialize)]
struct SolveReport {
    params: SrgParams,
    relations: &'static str,
    solutions: Vec<LocalParamSolution>,
}

#[derive(Serialize)]
struct AdjacencyJson {
    graph6: String,
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ReplayOutput {
    Certificates { report: ReplayReport },
    Search { survivors: usize, failures: Vec<String> },
}

fn exit(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn check(what: CheckCommand) -> Result<u8, Error> {
    match what {
        CheckCommand::Srg { graph } => {
            let g = load_graph(&graph)?;
            let params = srg_params(&g);
            let nontrivial = params.is_some_and(|p| p.is_nontrivial());
            let (eig, hoffman) = match params.filter(|p| p.is_nontrivial()) {
                Some(p) => {
                    let e = eigenvalues(&p)?;
                    (Some([e.k.to_string(), e.r.to_string(), e.s.to_string()]), Some(hoffman_bound(&p)?.to_string()))
                }
                None => (None, None),
            };
            let report = SrgReport {
                graph: encode_graph6(&g),
                srg: params.is_some(),
                params,
                nontrivial,
                eigenvalues: eig,
                hoffman_bound: hoffman,
            };
            emit_json(&report, None)?;
            Ok(exit(report.srg))
        }
        CheckCommand::Isoreg { graph, k } => {
            let g = load_graph(&graph)?;
            let report = is_k_isoregular(&g, k)?;
            emit_json(&report, None)?;
            Ok(exit(report.isoregular))
        }
        CheckCommand::Local3 { graph, vertex } => {
            let g = load_graph(&graph)?;
            let vertices: Vec<usize> = match vertex {
                Some(v) => vec![v],
                None => (0..g.order()).collect(),
            };
            let reports = vertices.into_iter().map(|v| is_locally_3isoregular_at(&g, v)).collect::<Result<Vec<_>, _>>()?;
            let all = reports.iter().all(|r| r.locally_3isoregular);
            emit_json(&LocalCheck { graph: encode_graph6(&g), locally_3isoregular: all, vertices: reports }, None)?;
            Ok(exit(all))
        }
        CheckCommand::Tvertex { graph, t } => {
            let g = load_graph(&graph)?;
            let report = t_vertex_condition(&g, t)?;
            let holds = report.holds;
            emit_json(&TVertexCheck { graph: encode_graph6(&g), report }, None)?;
            Ok(exit(holds))
        }
    }
}

/// Indices at which a SOLUTION verdict is consistent with the claim.
fn expected_solutions(claim: Claim) -> &'static [i64] {
    match claim {
        Claim::Tri1 => &[-1],
        _ => &[],
    }
}

fn certify(claim: Claim, (lo, hi): (i64, i64), output: Option<&Path>, jobs: Option<usize>) -> Result<u8, Error> {
    let batch = search::with_jobs(jobs, || certify_range(claim, lo, hi))??;
    let mut text = serde_json::to_string_pretty(&batch)?;
    text.push('\n');
    emit(&text, output)?;
    let solutions: Vec<i64> =
        batch.certificates.iter().filter(|c| c.verdict.solution().is_some()).map(|c| c.index).collect();
    let count = |f: fn(&Verdict) -> bool| batch.certificates.iter().filter(|c| f(&c.verdict)).count();
    eprintln!(
        "{claim} {lo}..{hi}: {} certificates, {} contradiction, {} solution {:?}, {} degenerate",
        batch.certificates.len(),
        count(|v| matches!(v, Verdict::Contradiction { .. })),
        solutions.len(),
        solutions,
        count(|v| matches!(v, Verdict::Degenerate { .. })),
    );
    Ok(exit(solutions.iter().all(|i| expected_solutions(claim).contains(i))))
}

#[allow(clippy::too_many_arguments)]
fn run_search(
    kind: SearchKind,
    n: usize,
    params: Option<SrgParams>,
    iso3: bool,
    odd_structure: bool,
    confirm: bool,
    no_prune: bool,
    no_dedup: bool,
    output: Option<&Path>,
    jobs: Option<usize>,
) -> Result<u8, Error> {
    let result: SearchResult = if confirm {
        if !matches!(kind, SearchKind::Bicirc) {
            return Err(Error::InvalidArgument("--confirm applies to bicirc searches".into()));
        }
        search::with_jobs(jobs, || search::confirm_nonexistence_bicirc_odd(n))??
    } else {
        let mut spec = match kind {
            SearchKind::Bicirc => SearchSpec::bicirculant(n),
            SearchKind::Tricirc => SearchSpec::tricirculant(n),
        };
        spec.target = params;
        spec.require_3iso = iso3;
        spec.prune = !no_prune;
        spec.dedup = !no_dedup;
        if odd_structure {
            spec = spec.odd_structure()?;
        }
        search::with_jobs(jobs, || search::search(&spec))??
    };
    emit(&result.to_json_lines(), output)?;
    let s = &result.stats;
    eprintln!(
        "{} candidates, {} SRG survivors, {} 3-isoregular, {} classes",
        s.candidates,
        s.srg_survivors,
        s.iso3_survivors,
        s.iso_classes.map_or("-".into(), |c| c.to_string())
    );
    if confirm {
        let clean = result.structure.as_ref().is_none_or(|c| c.violations.is_empty());
        return Ok(exit(s.iso3_survivors == 0 && clean));
    }
    Ok(0)
}

fn families(table: FamilyTable, max: i64) -> Result<u8, Error> {
    match table {
        FamilyTable::BicircOdd => {
            let rows = (1..=max.max(0) as u64).map(bicirc_odd_family).collect::<Result<Vec<_>, _>>()?;
            emit_json(&rows, None)?;
        }
        FamilyTable::LeungMa => {
            let rows: Vec<_> = (1..=max.max(0) as u64).flat_map(leung_ma_families).collect();
            emit_json(&rows, None)?;
        }
        FamilyTable::Tri => {
            let rows: Vec<_> = (-max..=max).flat_map(tricirc_families).collect();
            emit_json(&rows, None)?;
        }
    }
    Ok(0)
}

fn replay(file: &Path) -> Result<u8, Error> {
    let text = fs::read_to_string(file).map_err(|e| Error::InvalidArgument(format!("{}: {e}", file.display())))?;
    if let Ok(batch) = serde_json::from_str::<CertificateBatch>(&text) {
        let report = replay_batch(&batch);
        let ok = report.ok();
        emit_json(&ReplayOutput::Certificates { report }, None)?;
        return Ok(exit(ok));
    }
    if let Ok(cert) = serde_json::from_str::<Certificate>(&text) {
        let failures = replay_certificate(&cert);
        let mut report = ReplayReport { certificates: 1, failures, ..Default::default() };
        match cert.verdict {
            Verdict::Contradiction { .. } => report.contradictions = 1,
            Verdict::Solution { .. } => report.solutions = 1,
            Verdict::Degenerate { .. } => report.degenerate = 1,
        }
        let ok = report.ok();
        emit_json(&ReplayOutput::Certificates { report }, None)?;
        return Ok(exit(ok));
    }
    let mut survivors = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| Error::InvalidArgument(format!("{}: line {}: {e}", file.display(), i + 1)))?;
        match value.get("record").and_then(|r| r.as_str()) {
            Some("survivor") => survivors.push(serde_json::from_value::<Survivor>(value)?),
            Some("summary") => {}
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{}: not a certificate, certificate batch or search output",
                    file.display()
                )))
            }
        }
    }
    let failures = search::replay_survivors(&survivors);
    let ok = failures.is_empty();
    emit_json(&ReplayOutput::Search { survivors: survivors.len(), failures }, None)?;
    Ok(exit(ok))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Build { graph, format, output } => {
            let g = load_graph(&graph)?;
            let text = match format {
                Format::Graph6 => format!("{}\n", encode_graph6(&g)),
                Format::Dot => to_dot(&g, &graph),
                Format::Json => {
                    let adj = AdjacencyJson { graph6: encode_graph6(&g), order: g.order(), edges: g.edges().collect() };
                    format!("{}\n", serde_json::to_string_pretty(&adj)?)
                }
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Check { what } => check(what),
        Command::Params { what } => match what {
            ParamsCommand::Solve { n, k, lambda, mu, edges } => {
                let params = SrgParams::new(n, k, lambda, mu);
                let solutions = if edges { feasible_edge_params(&params)? } else { feasible_local_params(&params)? };
                let relations = if edges { "edge" } else { "edge+non-edge" };
                emit_json(&SolveReport { params, relations, solutions }, None)?;
                Ok(0)
            }
            ParamsCommand::Even { m, family } => {
                let family = match family {
                    EvenFamilyArg::B => EvenFamily::B,
                    EvenFamilyArg::C => EvenFamily::C,
                };
                emit_json(&even_m_candidates(m, family)?, None)?;
                Ok(0)
            }
        },
        Command::Certify { claim, range, output } => certify(claim, range, output.as_deref(), cli.jobs),
        Command::Search { kind, n, params, iso3, odd_structure, confirm, no_prune, no_dedup, output } => run_search(
            kind,
            n,
            params,
            iso3,
            odd_structure,
            confirm,
            no_prune,
            no_dedup,
            output.as_deref(),
            cli.jobs,
        ),
        Command::Families { table, max } => families(table, max),
        Command::Replay { file } => replay(&file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
