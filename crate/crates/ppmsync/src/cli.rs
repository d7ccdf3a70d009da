//! The `ppmsync` command-line tool.
//!
//! Every subcommand is deterministic given its flags and seed: identical
//! invocations produce byte-identical output. Exit codes follow script
//! conventions: 0 on success or a passed verification, 1 when a
//! verification or certification fails, 2 on usage errors.
//!
//! Environment: `PPMSYNC_WORKLIMIT` caps certification work (distance
//! evaluations); `PPMSYNC_THREADS` caps worker parallelism — the current
//! pipeline is single-threaded, so any positive value behaves alike, but
//! the variable is validated for forward compatibility.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ppmsync_core::dss::{
    construct_cyclotomic_pair, construct_index1, construct_index2, search_optimal_dss_capped,
    Dss, DssError, SearchOutcome, DEFAULT_NODE_CAP,
};
use ppmsync_core::modem::{
    ser_union_bound_book, simulate_book, simulate_selfsync, ChannelSpec, SyncMode,
};
use ppmsync_core::ooc::{catalog, Codebook, OpticalOrthogonalCode};
use ppmsync_core::selfsync::{certify_words, combine, SelfSyncError, DEFAULT_WORK_LIMIT};

use crate::format::{
    book_from_text, book_to_text, dss_csv_row, BundleDto, CertificateDto, CurvePoint, DssDocument,
    DssDto, OocDto, SimReportDto, CURVE_CSV_HEADER, DSS_CSV_HEADER,
};
use crate::table;

/// Construct, verify, and simulate self-synchronizing PPM codes.
#[derive(Parser)]
#[command(name = "ppmsync", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a difference system from one of the closed-form families.
    ConstructDss(ConstructArgs),
    /// Re-verify a difference system JSON file by exhaustive census.
    VerifyDss(VerifyArgs),
    /// Exhaustively find the minimum-redundancy system for (n, rho).
    SearchDss(SearchArgs),
    /// Validate codewords as an optical orthogonal code and emit JSON.
    BuildOoc(BuildOocArgs),
    /// Expand an OOC JSON file into its cyclic-orbit codebook.
    Expand(ExpandArgs),
    /// Combine a marker system with a payload book into a code bundle.
    Combine(CombineArgs),
    /// Exhaustively certify the comma-free index of a bundle or raw book.
    Certify(CertifyArgs),
    /// Regenerate a reference table and check it against the golden copy.
    Table(TableArgs),
    /// Monte Carlo error-rate curve (with union bound) over a gamma grid.
    Simulate(SimulateArgs),
    /// Union-bound error-rate curve over a gamma grid.
    Bound(BoundArgs),
}

/// Construction family tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Index-1 system over any Z_n, n >= 2.
    Index1,
    /// Index-2 system over any Z_n, n >= 5.
    Index2,
    /// Quartic-residue system over prime n = 1 mod 4 (perfect at n = 16m^2+1).
    Cyc4,
    /// Sextic-residue system over prime n = 1 mod 6 (perfect at n = 108m^2+1).
    Cyc6,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which construction to run.
    #[arg(long, value_enum)]
    thm: Family,
    /// Modulus n.
    #[arg(long)]
    n: Option<u64>,
    /// Scale parameter m (cyc4: n = 16m^2+1; cyc6: n = 108m^2+1).
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Difference system JSON file ({"n":..,"d0":[..],"d1":[..]}).
    #[arg(long)]
    input: PathBuf,
    /// Fail (exit 1) unless the verified index reaches this value.
    #[arg(long)]
    expect_index: Option<u64>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u64,
    /// Target index the system must reach.
    #[arg(long)]
    rho: u64,
    /// Abort after exploring this many partial assignments.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: u64,
}

#[derive(Args)]
struct BuildOocArgs {
    #[arg(long)]
    v: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    lambda: u64,
    /// Codeword as comma-separated residues; repeat per codeword.
    #[arg(long = "codeword", required = true)]
    codewords: Vec<String>,
}

#[derive(Args)]
struct ExpandArgs {
    /// OOC JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Write the book here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CombineArgs {
    /// Marker difference system JSON file.
    #[arg(long)]
    marker: PathBuf,
    /// Payload book text file (header `Q K M d`, then 0/1 words).
    #[arg(long, conflicts_with_all = ["ppm", "mppm_pulses"])]
    payload: Option<PathBuf>,
    /// Use a single-pulse book filling the marker's free capacity.
    #[arg(long, conflicts_with = "mppm_pulses")]
    ppm: bool,
    /// Use a multipulse book with this many pulses per word.
    #[arg(long)]
    mppm_pulses: Option<u64>,
    /// Write the bundle JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Code bundle JSON file to certify.
    #[arg(long, conflicts_with = "book")]
    bundle: Option<PathBuf>,
    /// Raw codebook text file to certify instead of a bundle.
    #[arg(long)]
    book: Option<PathBuf>,
    /// Certification passes (exit 0) only if the index reaches this.
    #[arg(long, default_value_t = 1)]
    threshold: u64,
    /// Cap on distance evaluations (overrides PPMSYNC_WORKLIMIT).
    #[arg(long)]
    work_limit: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to regenerate: table1 or table3.
    which: String,
}

#[derive(Args)]
struct CodeSpec {
    /// Modulation scheme from the catalog (PPM, MPPM, EPPM, GEPPM, AEPPM).
    #[arg(long, conflicts_with = "bundle")]
    scheme: Option<String>,
    /// Symbol count of the catalog entry.
    #[arg(long, requires = "scheme")]
    symbols: Option<u64>,
    /// Pulses per word, to pick between same-size entries.
    #[arg(long, requires = "scheme")]
    pulses: Option<u64>,
    /// Code bundle JSON file (simulates the full synchronized link).
    #[arg(long)]
    bundle: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    code: CodeSpec,
    /// Comma-separated gamma grid in dB.
    #[arg(long, value_delimiter = ',', required = true)]
    gamma_db: Vec<f64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Synchronizer for bundle simulations.
    #[arg(long, value_enum, default_value_t = SyncArg::Hard)]
    sync: SyncArg,
    /// Words per trial for bundle simulations.
    #[arg(long, default_value_t = 4)]
    words: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SyncArg {
    Aligned,
    Hard,
    Soft,
}

impl From<SyncArg> for SyncMode {
    fn from(s: SyncArg) -> SyncMode {
        match s {
            SyncArg::Aligned => SyncMode::Aligned,
            SyncArg::Hard => SyncMode::Hard,
            SyncArg::Soft => SyncMode::Soft,
        }
    }
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    code: CodeSpec,
    /// Comma-separated gamma grid in dB.
    #[arg(long, value_delimiter = ',', required = true)]
    gamma_db: Vec<f64>,
}

/// Writes a line to stdout; when the consumer has gone away (broken
/// pipe, e.g. `ppmsync ... | head`), exits quietly instead of panicking.
fn outln_impl(args: std::fmt::Arguments) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_fmt(args).and_then(|()| stdout.write_all(b"\n")).is_err() {
        std::process::exit(0);
    }
}

/// Writes a line to stderr, swallowing write failures: the diagnostic is
/// lost if the reader left, but the exit code still tells the story.
fn errln_impl(args: std::fmt::Arguments) {
    use std::io::Write;
    let mut stderr = std::io::stderr().lock();
    let _ = stderr.write_fmt(args).and_then(|()| stderr.write_all(b"\n"));
}

/// Like [`outln_impl`] without the trailing newline.
fn out_impl(args: std::fmt::Arguments) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_fmt(args).is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($t:tt)*) => { outln_impl(format_args!($($t)*)) };
}

macro_rules! out {
    ($($t:tt)*) => { out_impl(format_args!($($t)*)) };
}

macro_rules! errln {
    ($($t:tt)*) => { errln_impl(format_args!($($t)*)) };
}

/// A subcommand failure, split by the exit code it should produce.
enum Failure {
    /// Exit 2: bad flags, malformed inputs, inapplicable parameters.
    Usage(String),
    /// Exit 1: a verification, certification, or search did not pass.
    Verification(String),
}

type CmdResult = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn verification<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Verification(e.to_string())
}

/// Parses the process arguments and runs the tool, returning the exit
/// code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Same as [`run`] over explicit arguments (for tests).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(message) = validate_thread_env() {
        errln!("error: {message}");
        return 2;
    }
    let outcome = match &cli.command {
        Command::ConstructDss(args) => cmd_construct(args, cli.format),
        Command::VerifyDss(args) => cmd_verify(args, cli.format),
        Command::SearchDss(args) => cmd_search(args, cli.format),
        Command::BuildOoc(args) => cmd_build_ooc(args, cli.format),
        Command::Expand(args) => cmd_expand(args, cli.format),
        Command::Combine(args) => cmd_combine(args, cli.format),
        Command::Certify(args) => cmd_certify(args, cli.format),
        Command::Table(args) => cmd_table(args),
        Command::Simulate(args) => cmd_simulate(args, cli.format),
        Command::Bound(args) => cmd_bound(args, cli.format),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Verification(message)) => {
            errln!("verification failed: {message}");
            1
        }
        Err(Failure::Usage(message)) => {
            errln!("error: {message}");
            2
        }
    }
}

fn validate_thread_env() -> Result<(), String> {
    match std::env::var("PPMSYNC_THREADS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(t) if t >= 1 => Ok(()),
            _ => Err(format!("PPMSYNC_THREADS must be a positive integer, got {raw:?}")),
        },
        Err(_) => Ok(()),
    }
}

fn effective_work_limit(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var("PPMSYNC_WORKLIMIT") {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| usage(format!("PPMSYNC_WORKLIMIT must be an integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_WORK_LIMIT),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> CmdResult {
    match path {
        Some(p) => {
            std::fs::write(p, content).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
        None => {
            out!("{content}");
            if !content.ends_with('\n') {
                outln!("");
            }
            Ok(())
        }
    }
}

fn set_text(values: &[u64]) -> String {
    let mut out = String::from("{");
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{v}");
    }
    out.push('}');
    out
}

fn print_dss(dss: &Dss, format: Format) {
    let report = dss.verify();
    match format {
        Format::Json => {
            outln!(
                "{}",
                serde_json::to_string_pretty(&DssDocument::new(dss)).expect("serializable")
            );
        }
        Format::Csv => {
            outln!("{DSS_CSV_HEADER}");
            outln!("{}", dss_csv_row(dss, &report));
        }
        Format::Human => {
            outln!("modulus      {}", dss.n());
            outln!("d0           {}", set_text(dss.d0()));
            outln!("d1           {}", set_text(dss.d1()));
            outln!("index        {}", report.index);
            outln!("perfect      {}", report.perfect);
            outln!("regular      {}", report.regular);
            outln!(
                "redundancy   {} (rate {}/{})",
                report.redundancy,
                report.redundancy_rate.num(),
                report.redundancy_rate.den()
            );
            outln!(
                "square-root floor {} (met exactly: {}, met after ceiling: {})",
                report.levenshtein_floor,
                report.meets_levenshtein,
                report.meets_levenshtein_floor
            );
        }
    }
}

/// Maps construction errors to exit classes: everything a caller could
/// have known from the parameters is a usage error.
fn construction_failure(e: DssError) -> Failure {
    usage(e)
}

fn cmd_construct(args: &ConstructArgs, format: Format) -> CmdResult {
    let n_from = |args: &ConstructArgs| -> Result<u64, Failure> {
        match (args.n, args.m) {
            (Some(n), None) => Ok(n),
            _ => Err(usage("this family takes --n (and no --m)")),
        }
    };
    let dss = match args.thm {
        Family::Index1 => construct_index1(n_from(args)?).map_err(construction_failure)?,
        Family::Index2 => construct_index2(n_from(args)?).map_err(construction_failure)?,
        Family::Cyc4 | Family::Cyc6 => {
            let family = match args.thm {
                Family::Cyc4 => table::CyclotomicFamily::Quartic,
                _ => table::CyclotomicFamily::Sextic,
            };
            let n = match (args.n, args.m) {
                (Some(n), None) => n,
                (None, Some(m)) if m >= 1 => family.modulus(m),
                _ => return Err(usage("give exactly one of --n or --m (m >= 1)")),
            };
            construct_cyclotomic_pair(n, family.class_order()).map_err(construction_failure)?
        }
    };
    print_dss(&dss, format);
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> CmdResult {
    let text = read_file(&args.input)?;
    let dto = crate::format::parse_dss_json(&text).map_err(usage)?;
    let dss = dto.into_dss().map_err(usage)?;
    let report = dss.verify();
    print_dss(&dss, format);
    if let Some(expected) = args.expect_index {
        if report.index < expected {
            return Err(verification(format!(
                "index {} below the expected {expected}",
                report.index
            )));
        }
    }
    Ok(())
}

fn cmd_search(args: &SearchArgs, format: Format) -> CmdResult {
    let outcome = search_optimal_dss_capped(args.n, args.rho, args.node_cap).map_err(|e| {
        match e {
            DssError::SearchSpaceExceeded { .. } | DssError::Infeasible { .. } => verification(e),
            other => usage(other),
        }
    })?;
    let SearchOutcome { dss, report, nodes, redundancy } = &outcome;
    match format {
        Format::Human => {
            outln!(
                "minimum redundancy {redundancy} over Z_{} at index >= {} \
                 ({nodes} assignments explored; smaller redundancies exhausted)",
                args.n, args.rho
            );
            print_dss(dss, format);
        }
        Format::Csv => print_dss(dss, format),
        Format::Json => {
            let doc = serde_json::json!({
                "dss": DssDto::from(dss),
                "report": crate::format::DssReportDto::from(report),
                "nodes": nodes,
                "redundancy": redundancy,
            });
            outln!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn parse_codeword(raw: &str) -> Result<Vec<u64>, Failure> {
    raw.split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("codeword {raw:?}: {e}")))
}

fn cmd_build_ooc(args: &BuildOocArgs, format: Format) -> CmdResult {
    let codewords = args
        .codewords
        .iter()
        .map(|raw| parse_codeword(raw))
        .collect::<Result<Vec<_>, _>>()?;
    let code = OpticalOrthogonalCode::new(args.v, args.k, args.lambda, codewords)
        .map_err(verification)?;
    match format {
        Format::Json | Format::Csv => {
            outln!(
                "{}",
                serde_json::to_string_pretty(&OocDto::from(&code)).expect("serializable")
            );
        }
        Format::Human => {
            outln!(
                "({}, {}, {}) optical orthogonal code with {} codeword(s); verified",
                code.v(),
                code.k(),
                code.lambda(),
                code.len()
            );
            for word in code.codewords() {
                outln!("  {}", set_text(word));
            }
        }
    }
    Ok(())
}

fn cmd_expand(args: &ExpandArgs, _format: Format) -> CmdResult {
    let text = read_file(&args.input)?;
    let dto: OocDto = serde_json::from_str(&text).map_err(usage)?;
    let code = dto.into_ooc().map_err(verification)?;
    let book = code.expand_orbits().map_err(verification)?;
    let rendered = book_to_text(&book).map_err(verification)?;
    write_or_print(&args.output, &rendered)
}

fn cmd_combine(args: &CombineArgs, format: Format) -> CmdResult {
    let marker_text = read_file(&args.marker)?;
    let dto = crate::format::parse_dss_json(&marker_text).map_err(usage)?;
    let marker = dto.into_dss().map_err(usage)?;
    let capacity = marker.n() - marker.redundancy();
    let payload = match (&args.payload, args.ppm, args.mppm_pulses) {
        (Some(path), false, None) => book_from_text(&read_file(path)?).map_err(usage)?,
        (None, true, None) => Codebook::ppm(capacity).map_err(usage)?,
        (None, false, Some(k)) => Codebook::mppm(capacity, k).map_err(usage)?,
        _ => return Err(usage("give exactly one of --payload, --ppm, --mppm-pulses")),
    };
    let code = combine(marker, payload).map_err(usage)?;
    let bundle = BundleDto::from(&code);
    let json = serde_json::to_string_pretty(&bundle).expect("serializable");
    if format == Format::Human && args.output.is_some() {
        outln!(
            "combined code over Z_{}: {} words, {} free positions, guaranteed index {}",
            code.n(),
            code.len(),
            code.free_positions().len(),
            code.guaranteed_index()
        );
    }
    write_or_print(&args.output, &json)
}

fn cmd_certify(args: &CertifyArgs, format: Format) -> CmdResult {
    let limit = effective_work_limit(args.work_limit)?;
    let (label, certificate, lower_bound) = match (&args.bundle, &args.book) {
        (Some(path), None) => {
            let dto: BundleDto =
                serde_json::from_str(&read_file(path)?).map_err(usage)?;
            let mut code = dto.into_code().map_err(usage)?;
            let lower = code.guaranteed_index();
            match code.certify(limit) {
                Ok(certificate) => {
                    (path.display().to_string(), Some(certificate.clone()), lower)
                }
                Err(SelfSyncError::WorkLimitExceeded { .. }) => {
                    (path.display().to_string(), None, lower)
                }
                Err(other) => return Err(usage(other)),
            }
        }
        (None, Some(path)) => {
            let book = book_from_text(&read_file(path)?).map_err(usage)?;
            match certify_words(book.words(), None, limit) {
                Ok(certificate) => (path.display().to_string(), Some(certificate), 0),
                Err(SelfSyncError::WorkLimitExceeded { .. }) => {
                    (path.display().to_string(), None, 0)
                }
                Err(other) => return Err(usage(other)),
            }
        }
        _ => return Err(usage("give exactly one of --bundle or --book")),
    };
    match &certificate {
        Some(cert) => {
            let passed = cert.index >= args.threshold;
            match format {
                Format::Json | Format::Csv => {
                    let doc = serde_json::json!({
                        "code": label,
                        "threshold": args.threshold,
                        "passed": passed,
                        "certificate": CertificateDto::from(cert),
                    });
                    outln!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                Format::Human => {
                    outln!("comma-free index {} (threshold {})", cert.index, args.threshold);
                    outln!(
                        "witness: splice of words {} and {} at offset {} vs word {}",
                        cert.witness.x, cert.witness.y, cert.witness.offset, cert.witness.z
                    );
                    if let Some(restricted) = cert.restricted_index {
                        outln!("marker-restricted index {restricted}");
                    }
                    outln!("distance evaluations {}", cert.distance_evaluations);
                }
            }
            if passed {
                Ok(())
            } else {
                Err(verification(format!(
                    "certified index {} below threshold {}",
                    cert.index, args.threshold
                )))
            }
        }
        None => Err(verification(format!(
            "uncertified: work limit {limit} exceeded; index is at least {lower_bound} \
             by the marker guarantee"
        ))),
    }
}

fn cmd_table(args: &TableArgs) -> CmdResult {
    match table::regenerate(&args.which) {
        Ok(csv) => {
            out!("{csv}");
            Ok(())
        }
        Err(table::TableRequestError::Unknown(name)) => {
            Err(usage(format!("unknown table {name:?}; available: table1, table3")))
        }
        Err(table::TableRequestError::Table(e)) => Err(verification(e)),
    }
}

fn list_catalog() -> String {
    let mut out = String::from("available catalog entries (scheme, symbols, pulses):\n");
    for entry in catalog::entries() {
        let _ = writeln!(
            out,
            "  {} --symbols {} --pulses {}  (interval {}, distance {})",
            entry.scheme, entry.symbols, entry.weight, entry.length, entry.distance
        );
    }
    out
}

/// Resolves a `--scheme/--symbols/--pulses` triple against the catalog;
/// failure lists what exists.
fn resolve_catalog_book(spec: &CodeSpec) -> Result<(String, Codebook, usize), Failure> {
    let raw_scheme = spec.scheme.as_deref().expect("caller checked scheme presence");
    let scheme = catalog::Scheme::from_str(raw_scheme)
        .map_err(|_| usage(format!("unknown scheme {raw_scheme:?}\n{}", list_catalog())))?;
    let symbols = spec
        .symbols
        .ok_or_else(|| usage(format!("--symbols is required\n{}", list_catalog())))?;
    let entry = catalog::find_one(scheme, symbols, spec.pulses).ok_or_else(|| {
        usage(format!("no catalog entry matches {scheme} with {symbols} symbols\n{}", list_catalog()))
    })?;
    let book = entry.modulation_book().map_err(usage)?;
    let label = format!("{}-{}", entry.scheme, entry.symbols);
    Ok((label, book, entry.symbols as usize))
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

fn emit_curve(points: &[CurvePoint], reports: &[SimReportDto], format: Format) {
    match format {
        Format::Json => {
            if reports.is_empty() {
                outln!("{}", serde_json::to_string_pretty(points).expect("serializable"));
            } else {
                outln!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
            }
        }
        Format::Csv | Format::Human => {
            outln!("{CURVE_CSV_HEADER}");
            for point in points {
                outln!("{}", point.csv_row());
            }
        }
    }
}

fn cmd_simulate(args: &SimulateArgs, format: Format) -> CmdResult {
    if args.gamma_db.is_empty() {
        return Err(usage("at least one --gamma-db point required"));
    }
    let mut points = Vec::new();
    let mut reports = Vec::new();
    if let Some(path) = &args.code.bundle {
        let dto: BundleDto = serde_json::from_str(&read_file(path)?).map_err(usage)?;
        let code = dto.into_code().map_err(usage)?;
        let label = format!("bundle:{}", path.display());
        for &db in &args.gamma_db {
            let gamma = db_to_linear(db);
            let bound =
                ser_union_bound_book(code.payload().words(), gamma).map_err(usage)?;
            let spec = ChannelSpec { gamma, seed: args.seed, trials: args.trials };
            let report = simulate_selfsync(
                &code,
                code.len(),
                args.words,
                args.sync.into(),
                &spec,
            )
            .map_err(usage)?;
            points.push(CurvePoint {
                gamma_db: db,
                ser_bound: Some(bound),
                ser_mc: Some(report.ser),
                ser_mc_lo: Some(report.ser_lo),
                ser_mc_hi: Some(report.ser_hi),
                sync_err: report.sync_error_rate,
            });
            reports.push(SimReportDto::new(label.clone(), db, &report));
        }
    } else if args.code.scheme.is_some() {
        let (label, book, alphabet) = resolve_catalog_book(&args.code)?;
        for &db in &args.gamma_db {
            let gamma = db_to_linear(db);
            let truncated = book.truncated(alphabet).map_err(usage)?;
            let bound = ser_union_bound_book(truncated.words(), gamma).map_err(usage)?;
            let spec = ChannelSpec { gamma, seed: args.seed, trials: args.trials };
            let report = simulate_book(&book, alphabet, &spec).map_err(usage)?;
            points.push(CurvePoint {
                gamma_db: db,
                ser_bound: Some(bound),
                ser_mc: Some(report.ser),
                ser_mc_lo: Some(report.ser_lo),
                ser_mc_hi: Some(report.ser_hi),
                sync_err: None,
            });
            reports.push(SimReportDto::new(label.clone(), db, &report));
        }
    } else {
        return Err(usage(format!("give --scheme/--symbols or --bundle\n{}", list_catalog())));
    }
    emit_curve(&points, &reports, format);
    Ok(())
}

fn cmd_bound(args: &BoundArgs, format: Format) -> CmdResult {
    if args.gamma_db.is_empty() {
        return Err(usage("at least one --gamma-db point required"));
    }
    let words = if let Some(path) = &args.code.bundle {
        let dto: BundleDto = serde_json::from_str(&read_file(path)?).map_err(usage)?;
        let code = dto.into_code().map_err(usage)?;
        code.payload().words().to_vec()
    } else if args.code.scheme.is_some() {
        let (_, book, alphabet) = resolve_catalog_book(&args.code)?;
        book.truncated(alphabet).map_err(usage)?.words().to_vec()
    } else {
        return Err(usage(format!("give --scheme/--symbols or --bundle\n{}", list_catalog())));
    };
    let mut points = Vec::new();
    for &db in &args.gamma_db {
        let bound = ser_union_bound_book(&words, db_to_linear(db)).map_err(usage)?;
        points.push(CurvePoint {
            gamma_db: db,
            ser_bound: Some(bound),
            ser_mc: None,
            ser_mc_lo: None,
            ser_mc_hi: None,
            sync_err: None,
        });
    }
    emit_curve(&points, &[], format);
    Ok(())
}
