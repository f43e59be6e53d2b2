//! codisc: exact invariants of product domains T^2 x A from the fiber.
//!
//! One job per invocation. Inputs are JSON files; outputs are JSON, CSV,
//! or SVG on stdout or a file. Rationals cross the boundary as "p/q"
//! strings, never floats. Exit codes: 0 success, 2 unreadable or
//! malformed input, 3 domain-invariant violation, 4 computation budget
//! exhausted, 5 obstruction found under --expect-embed.

use clap::{Args, Parser, Subcommand, ValueEnum};
use codisc::capacities::{normalized_capacity, viterbo_probe};
use codisc::distances::{
    hbm_product_distance, hbm_toric_distance, inclusion_distance, pv_polygon, qv_region,
    DistanceError, DistanceValue, DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS,
};
use codisc::ech::{
    ball_capacity, embed_ball_check, flat_capacity, gen_toric_capacity, gromov_width,
    weight_decomposition, EchError, WeightSequence,
};
use codisc::export::{
    analyze_report, capacity_rows_csv, capacity_verdict_json, certificate_json,
    classification_json, distance_json, parse_domain_input, polygon_from_json, polygon_svg,
    rational_str, spectrum_csv, viterbo_probe_json, DomainInput, ExportError,
};
use codisc::geometry::{is_centrally_symmetric, ConvexPolygon, ConvexRegion, StarPolygon};
use codisc::rational::{int, parse_rational, ratio};
use codisc::reeb::{classify, orbit_classes, sys};
use codisc::Rational;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

#[derive(Parser)]
#[command(name = "codisc", version, about = "Exact Reeb dynamics, ECH capacities, and distances for codisc bundles over the 2-torus")]
struct JobConfig {
    #[command(subcommand)]
    command: JobCommand,
}

#[derive(Subcommand)]
enum JobCommand {
    /// Full report on a fiber polygon: systole, volume, ratio, flags.
    Analyze(AnalyzeArgs),
    /// Closed-orbit classes up to an action cutoff.
    Spectrum(SpectrumArgs),
    /// Capacity table c_1..c_kmax of a ball, toric domain, or flat fiber.
    Ech(EchArgs),
    /// Gromov width of a toric domain given by weights or a region.
    Width(IoArgs),
    /// Certificate that a ball embeds (or not) into a toric domain.
    Embed(EmbedArgs),
    /// Inclusion or Banach-Mazur-type distance between two domains.
    Distance(DistanceArgs),
    /// Subclass flags of a fiber polygon.
    Classify(IoArgs),
    /// Width-versus-capacity probe on a symmetric convex fiber.
    Probe(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Action cutoff "p/q" for the orbit arrows in SVG output; default 2*sys.
    #[arg(long)]
    cutoff: Option<String>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Action cutoff "p/q"; default 2*sys.
    #[arg(long)]
    cutoff: Option<String>,
}

#[derive(Args)]
struct EchArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Largest capacity index to tabulate.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    kmax: u64,
    /// Worker threads for independent k values; assembly stays ordered.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Size a of the ball B(a) to embed, as "p/q".
    #[arg(long)]
    ball: String,
    /// Exit with code 5 when the verdict is an obstruction.
    #[arg(long)]
    expect_embed: bool,
}

#[derive(Args)]
struct DistanceArgs {
    /// Input JSON file; pass exactly twice.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Which distance to compute.
    #[arg(long, value_enum, default_value_t = Mode::Inclusion)]
    mode: Mode,
    /// Working precision for transcendental row profiles.
    #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
    precision_bits: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Inclusion,
    HbmProduct,
    HbmToric,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Inclusion => "inclusion",
            Mode::HbmProduct => "hbm_product",
            Mode::HbmToric => "hbm_toric",
        }
    }
}

/// A job failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<ExportError> for Failure {
    fn from(e: ExportError) -> Self {
        let code = match e {
            ExportError::Parse { .. } => 2,
            ExportError::Domain(_) => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<EchError> for Failure {
    fn from(e: EchError) -> Self {
        let code = match e {
            EchError::NonTerminating => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<DistanceError> for Failure {
    fn from(e: DistanceError) -> Self {
        Failure::domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let config = JobConfig::parse();
    match run(config.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: JobCommand) -> Result<(), Failure> {
    match command {
        JobCommand::Analyze(args) => cmd_analyze(args),
        JobCommand::Spectrum(args) => cmd_spectrum(args),
        JobCommand::Ech(args) => cmd_ech(args),
        JobCommand::Width(args) => cmd_width(args),
        JobCommand::Embed(args) => cmd_embed(args),
        JobCommand::Distance(args) => cmd_distance(args),
        JobCommand::Classify(args) => cmd_classify(args),
        JobCommand::Probe(args) => cmd_probe(args),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {}", path.display(), e)))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::parse(format!("cannot write {}: {}", path.display(), e))),
    }
}

fn emit_json(output: Option<&Path>, value: &serde_json::Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    emit(output, &text)
}

fn parse_cutoff(arg: Option<&str>, fiber: &StarPolygon) -> Result<Rational, Failure> {
    match arg {
        None => Ok(ratio(2, 1) * &sys(fiber)),
        Some(s) => {
            let c = parse_rational(s)
                .ok_or_else(|| Failure::parse(format!("cutoff must be a rational p/q, got {s:?}")))?;
            if c <= int(0) {
                return Err(Failure::parse("cutoff must be positive"));
            }
            Ok(c)
        }
    }
}

fn require_format(got: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(Failure::parse(format!("format not available for {command}")))
    }
}

fn unix_ms() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis() as u64).unwrap_or(0)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    require_format(args.format, &[Format::Json, Format::Svg], "analyze")?;
    let fiber = polygon_from_json(&read_input(&args.io.input)?)?;
    match args.format {
        Format::Json => {
            let mut report = analyze_report(&fiber);
            report["timestamp_ms"] = json!(unix_ms());
            emit_json(args.io.output.as_deref(), &report)
        }
        Format::Svg => {
            let cutoff = parse_cutoff(args.cutoff.as_deref(), &fiber)?;
            let classes = orbit_classes(&fiber, &cutoff);
            emit(args.io.output.as_deref(), &polygon_svg(&fiber, &classes))
        }
        Format::Csv => unreachable!("rejected above"),
    }
}

fn cmd_classify(args: IoArgs) -> Result<(), Failure> {
    let fiber = polygon_from_json(&read_input(&args.input)?)?;
    emit_json(args.output.as_deref(), &classification_json(&classify(&fiber)))
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), Failure> {
    require_format(args.format, &[Format::Csv, Format::Svg], "spectrum")?;
    let fiber = polygon_from_json(&read_input(&args.io.input)?)?;
    let cutoff = parse_cutoff(args.cutoff.as_deref(), &fiber)?;
    let classes = orbit_classes(&fiber, &cutoff);
    let text = match args.format {
        Format::Csv => spectrum_csv(&classes),
        Format::Svg => polygon_svg(&fiber, &classes),
        Format::Json => unreachable!("rejected above"),
    };
    emit(args.io.output.as_deref(), &text)
}

/// A capacity domain reduced to its single-index evaluator, so serial
/// and sharded tabulation run the identical code path per k.
enum EchDomain {
    Ball(Rational),
    GenToric(WeightSequence),
    Flat(ConvexPolygon),
}

impl EchDomain {
    fn value(&self, k: u64) -> Rational {
        match self {
            EchDomain::Ball(a) => ball_capacity(a, k),
            EchDomain::GenToric(w) => gen_toric_capacity(w, k),
            EchDomain::Flat(p) => flat_capacity(p, k),
        }
    }

    fn source(&self) -> &'static str {
        match self {
            EchDomain::Ball(_) => "ball",
            EchDomain::GenToric(_) => "gen_toric",
            EchDomain::Flat(_) => "flat",
        }
    }
}

fn ech_domain(input: DomainInput) -> Result<EchDomain, Failure> {
    match input {
        DomainInput::Weights(w) => {
            if w.weights().is_empty() {
                Ok(EchDomain::Ball(w.head().clone()))
            } else {
                Ok(EchDomain::GenToric(w))
            }
        }
        DomainInput::Region(r) => Ok(EchDomain::GenToric(weight_decomposition(&r)?)),
        DomainInput::Fiber(star) => {
            let convex = ConvexPolygon::from_star(star)
                .map_err(|_| Failure::domain("flat capacities need a convex fiber"))?;
            if !is_centrally_symmetric(convex.as_star()) {
                return Err(Failure::domain("flat capacities need a centrally symmetric fiber"));
            }
            Ok(EchDomain::Flat(convex))
        }
        DomainInput::Rows(_) => {
            Err(Failure::domain("row profiles describe distance families, not capacity domains"))
        }
    }
}

/// Tabulates (k, c_k) for k = 1..=k_max, sharding contiguous k ranges
/// across `jobs` threads; the result order never depends on scheduling.
fn capacity_rows(domain: &EchDomain, k_max: u64, jobs: u64) -> Vec<(u64, Rational)> {
    let jobs = jobs.min(k_max) as usize;
    if jobs <= 1 {
        return (1..=k_max).map(|k| (k, domain.value(k))).collect();
    }
    let mut slots: Vec<Option<(u64, Rational)>> = vec![None; k_max as usize];
    let chunk = (k_max as usize).div_ceil(jobs);
    std::thread::scope(|scope| {
        for (index, shard) in slots.chunks_mut(chunk).enumerate() {
            let base = (index * chunk) as u64;
            scope.spawn(move || {
                for (offset, slot) in shard.iter_mut().enumerate() {
                    let k = base + offset as u64 + 1;
                    *slot = Some((k, domain.value(k)));
                }
            });
        }
    });
    slots.into_iter().map(|slot| slot.expect("every index sharded")).collect()
}

fn cmd_ech(args: EchArgs) -> Result<(), Failure> {
    let domain = ech_domain(parse_domain_input(&read_input(&args.io.input)?)?)?;
    let rows = capacity_rows(&domain, args.kmax, args.jobs);
    emit(args.io.output.as_deref(), &capacity_rows_csv(rows, domain.source()))
}

fn toric_weights(input: DomainInput, command: &str) -> Result<WeightSequence, Failure> {
    match input {
        DomainInput::Weights(w) => Ok(w),
        DomainInput::Region(r) => Ok(weight_decomposition(&r)?),
        _ => Err(Failure::domain(format!("{command} needs a weight sequence or a moment region"))),
    }
}

fn cmd_width(args: IoArgs) -> Result<(), Failure> {
    let weights = toric_weights(parse_domain_input(&read_input(&args.input)?)?, "width")?;
    let report = json!({
        "target": weights.to_string(),
        "width": rational_str(&gromov_width(&weights)),
    });
    emit_json(args.output.as_deref(), &report)
}

fn cmd_embed(args: EmbedArgs) -> Result<(), Failure> {
    let a = parse_rational(&args.ball)
        .ok_or_else(|| Failure::parse(format!("ball must be a rational p/q, got {:?}", args.ball)))?;
    if a <= int(0) {
        return Err(Failure::parse("ball size must be positive"));
    }
    let weights = toric_weights(parse_domain_input(&read_input(&args.io.input)?)?, "embed")?;
    let started = Instant::now();
    let mut report = match embed_ball_check(&weights, &a) {
        Ok(cert) => {
            if !cert.embeds() && args.expect_embed {
                return Err(Failure {
                    code: 5,
                    message: format!(
                        "obstruction found: B({}) does not embed into {}",
                        rational_str(&a),
                        weights
                    ),
                });
            }
            certificate_json(&cert)
        }
        // Volume excess is a definitive verdict, not a failed computation.
        Err(EchError::TailBoundFails { sum_sq, head_sq }) => {
            if args.expect_embed {
                return Err(Failure {
                    code: 5,
                    message: format!(
                        "obstruction found: combined volume exceeds the target, {} > {}",
                        rational_str(&sum_sq),
                        rational_str(&head_sq)
                    ),
                });
            }
            json!({
                "target": weights.to_string(),
                "a": rational_str(&a),
                "verdict": "obstructed",
                "method": "volume",
                "sum_of_squares": rational_str(&sum_sq),
                "head_square": rational_str(&head_sq),
            })
        }
        Err(e) => return Err(e.into()),
    };
    report["runtime_ms"] = json!(started.elapsed().as_millis() as u64);
    emit_json(args.io.output.as_deref(), &report)
}

/// One endpoint of a distance computation; `rounded` marks domains built
/// from transcendental row profiles, whose distances are not exact.
enum Endpoint {
    Star(StarPolygon, bool),
    Region(ConvexRegion, bool),
}

fn distance_endpoint(input: DomainInput, mode: Mode, bits: usize) -> Result<Endpoint, Failure> {
    match (mode, input) {
        (Mode::Inclusion | Mode::HbmProduct, DomainInput::Fiber(p)) => Ok(Endpoint::Star(p, false)),
        (Mode::Inclusion | Mode::HbmProduct, DomainInput::Rows(rows)) => {
            Ok(Endpoint::Star(pv_polygon(&rows, bits)?.as_star().clone(), true))
        }
        (Mode::HbmToric, DomainInput::Region(r)) => Ok(Endpoint::Region(r, false)),
        (Mode::HbmToric, DomainInput::Rows(rows)) => {
            Ok(Endpoint::Region(qv_region(&rows, bits)?, true))
        }
        (Mode::Inclusion | Mode::HbmProduct, _) => {
            Err(Failure::domain("this mode compares fiber polygons or row profiles"))
        }
        (Mode::HbmToric, _) => {
            Err(Failure::domain("hbm-toric compares moment regions or row profiles"))
        }
    }
}

fn cmd_distance(args: DistanceArgs) -> Result<(), Failure> {
    if args.input.len() != 2 {
        return Err(Failure::parse(format!(
            "distance needs --input given exactly twice, got {}",
            args.input.len()
        )));
    }
    if args.precision_bits < MIN_PRECISION_BITS {
        return Err(Failure::parse(format!(
            "precision-bits must be at least {MIN_PRECISION_BITS}"
        )));
    }
    let mut endpoints = Vec::with_capacity(2);
    for path in &args.input {
        let input = parse_domain_input(&read_input(path)?)?;
        endpoints.push(distance_endpoint(input, args.mode, args.precision_bits)?);
    }
    let second = endpoints.pop().expect("two endpoints");
    let first = endpoints.pop().expect("two endpoints");
    let value = match (first, second) {
        (Endpoint::Star(a, ra), Endpoint::Star(b, rb)) => {
            let d = match args.mode {
                Mode::Inclusion => inclusion_distance(&a, &b),
                Mode::HbmProduct => hbm_product_distance(&a, &b),
                Mode::HbmToric => unreachable!("toric endpoints are regions"),
            };
            DistanceValue { exact: d.exact && !ra && !rb, ..d }
        }
        (Endpoint::Region(a, ra), Endpoint::Region(b, rb)) => {
            let d = hbm_toric_distance(&a, &b)?;
            DistanceValue { exact: d.exact && !ra && !rb, ..d }
        }
        _ => unreachable!("endpoints follow one mode"),
    };
    emit_json(args.output.as_deref(), &distance_json(&value, args.mode.as_str()))
}

fn cmd_probe(args: IoArgs) -> Result<(), Failure> {
    let fiber = polygon_from_json(&read_input(&args.input)?)?;
    let verdict = normalized_capacity(&fiber).map_err(|e| Failure::domain(e.to_string()))?;
    let probe = viterbo_probe(&fiber);
    let report = json!({
        "capacity": capacity_verdict_json(&verdict),
        "probe": viterbo_probe_json(&probe),
    });
    emit_json(args.output.as_deref(), &report)
}
