//! Command-line surface: parse set files, print decisions, witnesses,
//! certificates, and verification reports.
//!
//! Exit codes: 0 success (and Exists), 2 input or usage error, 3 empty
//! base, 4 search cap exceeded, 5 shell cap exceeded, 10 NotExists or a
//! failed verification, 11 Unknown.

use clap::{Args, Parser, Subcommand, ValueEnum};
use mincomp_core::decide::{
    decide_with, DecideError, DecideOptions, Decision, NonExistenceReason,
};
use mincomp_core::epsets::{parse_epset, write_epset, EPSet, EpsetError};
use mincomp_core::finitegrp::{
    extract_minimal, is_minimal_complement, minimal_r_net, pair_minimal_complement_with,
    FiniteAbelianGroup, GroupError, GroupSubset, MinimalityOutcome, PairCertificate,
    DEFAULT_SEARCH_CAP,
};
use mincomp_core::gallery::{
    diagonal_hyperplane_windows, example_infinite, ksy_adapter, polynomial_image, GalleryError,
    InfiniteFamily, Polynomial,
};
use mincomp_core::oracle::naive_minimality_check;
use mincomp_core::witness::{
    build_witness, parse_witness_dump, user_window_report, verify_window, write_witness_dump,
    WindowReport, WitnessError,
};
use mincomp_core::zlattice::Window;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_INPUT: u8 = 2;
const EXIT_EMPTY_BASE: u8 = 3;
const EXIT_SEARCH_CAP: u8 = 4;
const EXIT_SHELL_CAP: u8 = 5;
const EXIT_NOT_EXISTS: u8 = 10;
const EXIT_UNKNOWN: u8 = 11;

#[derive(Parser)]
#[command(
    name = "mincomp",
    version,
    about = "Minimal additive complements of eventually periodic integer lattice sets"
)]
struct Cli {
    /// Output style; machine mode prints stable key=value lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical decomposition of a set file.
    Decompose {
        file: PathBuf,
    },
    /// Decide whether the set admits a minimal complement.
    Decide {
        file: PathBuf,
    },
    /// Build a witness complement slice and verify it over a core box.
    Witness {
        file: PathBuf,
        /// Shells of the certificate cosets to materialize.
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        shells: i64,
        /// Core box, like "-8..8,-8..8"; defaults to radius 8.
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
        /// Write the kept/removed dump here instead of stdout.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Check a user-supplied complement candidate over a core box.
    Verify {
        file: PathBuf,
        /// Dump file; its K lines are the candidate points.
        #[arg(long)]
        witness: PathBuf,
        /// Core box, like "-8..8,-8..8"; defaults to radius 8.
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
    },
    /// Finite abelian group computations.
    Group {
        /// Invariant factors, comma-separated, like "4" or "2,2".
        #[arg(long)]
        group: String,
        #[command(subcommand)]
        verb: GroupVerb,
    },
    /// Generate the named example families.
    Gallery {
        #[command(subcommand)]
        family: GalleryCmd,
    },
}

#[derive(Subcommand)]
enum GroupVerb {
    /// Greedily extract a minimal complement from a complement.
    ExtractMinimal {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Complement to shrink; "all" is the whole group.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Minimal complement of an ordered pair of disjoint subsets.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        q1: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Minimal r-net for a symmetric generating set containing 0.
    Rnet {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        r: u32,
    },
    /// Product of a lattice-set witness with a finite-group minimal
    /// complement: window verification on the lattice factor, exact
    /// verification on the finite factor.
    Product {
        /// Finite-factor subset whose minimal complement is composed.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Lattice-factor set file; must decide to Exists.
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        shells: i64,
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
    },
}

#[derive(Args)]
struct DecideFlag {
    /// Also run the decision procedure on the generated set.
    #[arg(long)]
    decide: bool,
}

#[derive(Subcommand)]
enum GalleryCmd {
    /// {0} with k-1 rungs along one axis, periods k in each axis.
    Ladder {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[command(flatten)]
        decide: DecideFlag,
    },
    /// {0} with a single unit offset, periods 2 in each axis.
    SingleOffset {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[command(flatten)]
        decide: DecideFlag,
    },
    /// {0} with 2^d - 2 base points on distinct nonzero residues mod 2.
    MissingPair {
        #[arg(long)]
        d: usize,
        /// Base points, like "1,0;0,1".
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        decide: DecideFlag,
    },
    /// Window slices of the diagonal line and a coordinate hyperplane.
    Diagonal {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Box radius.
        #[arg(long, default_value_t = 3)]
        r: i64,
    },
    /// Image of a domain box under coordinate polynomials.
    Poly {
        /// Number of input variables.
        #[arg(long, default_value_t = 1)]
        vars: usize,
        /// Coordinate polynomials, semicolon-separated, like "n;n^2".
        #[arg(long)]
        f: String,
        /// Domain box, like "-10..10".
        #[arg(long, allow_hyphen_values = true)]
        domain: String,
    },
    /// One-dimensional set from residue classes plus finite adjustments.
    Ksy {
        #[arg(long)]
        m: i64,
        /// Residues of the infinite classes, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Extra negative points on the classes.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        y0: String,
        /// Points off the classes.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        y1: String,
        #[command(flatten)]
        decide: DecideFlag,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let cap = search_cap()?;
    let options = DecideOptions { cap, ..DecideOptions::default() };
    let fmt = cli.format;
    match &cli.command {
        Command::Decompose { file } => cmd_decompose(fmt, file),
        Command::Decide { file } => cmd_decide(fmt, file, &options),
        Command::Witness { file, shells, core, dump } => {
            cmd_witness(fmt, file, *shells, core.as_deref(), dump.as_deref(), &options)
        }
        Command::Verify { file, witness, core } => {
            cmd_verify(fmt, file, witness, core.as_deref())
        }
        Command::Group { group, verb } => cmd_group(fmt, group, verb, cap, &options),
        Command::Gallery { family } => cmd_gallery(fmt, family, &options),
    }
}

/// Quotient-order cap for subset searches, overridable by environment.
fn search_cap() -> Result<usize, Failure> {
    match std::env::var("MINCOMP_SEARCH_CAP") {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => Err(fail(
                EXIT_INPUT,
                format!("MINCOMP_SEARCH_CAP must be a positive integer, got `{text}`"),
            )),
        },
        Err(_) => Ok(DEFAULT_SEARCH_CAP),
    }
}

// ---- error mapping ----

fn epset_failure(e: EpsetError) -> Failure {
    let code = match e {
        EpsetError::EmptyBase => EXIT_EMPTY_BASE,
        _ => EXIT_INPUT,
    };
    fail(code, e.to_string())
}

fn group_failure(e: GroupError) -> Failure {
    let code = match e {
        GroupError::SearchTooLarge { .. } => EXIT_SEARCH_CAP,
        _ => EXIT_INPUT,
    };
    fail(code, e.to_string())
}

fn decide_failure(e: DecideError) -> Failure {
    match e {
        DecideError::Group(g) => group_failure(g),
        DecideError::Epset(ep) => epset_failure(ep),
        other => fail(EXIT_INPUT, other.to_string()),
    }
}

fn witness_failure(e: WitnessError) -> Failure {
    match e {
        WitnessError::ShellCapExceeded { .. } => fail(EXIT_SHELL_CAP, e.to_string()),
        WitnessError::MinimalityWitnessMissing(_) => fail(EXIT_NOT_EXISTS, e.to_string()),
        WitnessError::Decide(d) => decide_failure(d),
        WitnessError::Epset(ep) => epset_failure(ep),
        other => fail(EXIT_INPUT, other.to_string()),
    }
}

fn gallery_failure(e: GalleryError) -> Failure {
    match e {
        GalleryError::Epset(ep) => epset_failure(ep),
        other => fail(EXIT_INPUT, other.to_string()),
    }
}

// ---- shared parsing and formatting ----

fn load_epset(file: &PathBuf) -> Result<EPSet, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", file.display())))?;
    let set = parse_epset(&text).map_err(|e| {
        // The parser wraps structural errors; an empty base keeps its
        // dedicated exit code.
        let code = if e.message == EpsetError::EmptyBase.to_string() {
            EXIT_EMPTY_BASE
        } else {
            EXIT_INPUT
        };
        fail(code, format!("{}: {e}", file.display()))
    })?;
    set.canonicalize().map_err(epset_failure)
}

/// "lo..hi,lo..hi" into a window; `dim` fixes the expected arity.
fn parse_core(spec: Option<&str>, dim: usize) -> Result<Window, Failure> {
    let Some(spec) = spec else {
        return Ok(Window::cube(dim, 8));
    };
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for part in spec.split(',') {
        let (a, b) = part
            .trim()
            .split_once("..")
            .ok_or_else(|| fail(EXIT_INPUT, format!("core range `{part}` is not lo..hi")))?;
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|_| fail(EXIT_INPUT, format!("bad core bound `{a}`")))?;
        let b: i64 = b
            .trim()
            .parse()
            .map_err(|_| fail(EXIT_INPUT, format!("bad core bound `{b}`")))?;
        lo.push(a);
        hi.push(b);
    }
    if lo.len() == 1 && dim > 1 {
        lo = vec![lo[0]; dim];
        hi = vec![hi[0]; dim];
    }
    if lo.len() != dim {
        return Err(fail(
            EXIT_INPUT,
            format!("core has {} ranges, the set has dimension {dim}", lo.len()),
        ));
    }
    Window::new(lo, hi).map_err(|e| fail(EXIT_INPUT, e.to_string()))
}

/// Tuples like "0,0;1,0"; for rank-1 groups plain "0,1" lists scalars.
fn parse_tuples(text: &str, rank: usize) -> Result<Vec<Vec<i64>>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let scalar_list = rank == 1 && !text.contains(';');
    let chunks: Vec<&str> = if scalar_list {
        text.split(',').collect()
    } else {
        text.split(';').collect()
    };
    let mut out = Vec::new();
    for chunk in chunks {
        let coords: Vec<i64> = chunk
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| fail(EXIT_INPUT, format!("bad integer `{t}` in `{text}`")))
            })
            .collect::<Result<_, _>>()?;
        out.push(coords);
    }
    Ok(out)
}

fn parse_subset(
    group: &FiniteAbelianGroup,
    text: &str,
    what: &str,
) -> Result<GroupSubset, Failure> {
    if text.trim() == "all" {
        return Ok(group.full_subset());
    }
    let elems = parse_tuples(text, group.factors().len())?;
    if elems.is_empty() {
        return Err(fail(EXIT_INPUT, format!("{what} must not be empty")));
    }
    GroupSubset::new(group, elems).map_err(group_failure)
}

fn parse_group(spec: &str) -> Result<FiniteAbelianGroup, Failure> {
    let factors: Vec<i64> = spec
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| fail(EXIT_INPUT, format!("bad group factor `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    FiniteAbelianGroup::new(factors).map_err(group_failure)
}

fn fmt_tuple(p: &[i64]) -> String {
    format!("({})", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
}

fn fmt_point_set<'a>(points: impl IntoIterator<Item = &'a Vec<i64>>) -> String {
    let parts: Vec<String> = points.into_iter().map(|p| fmt_tuple(p)).collect();
    if parts.is_empty() {
        "(empty)".into()
    } else {
        parts.join(" ")
    }
}

/// Machine encoding of a point set: "0,0;0,1", empty string for empty.
fn machine_point_set<'a>(points: impl IntoIterator<Item = &'a Vec<i64>>) -> String {
    points
        .into_iter()
        .map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn machine_subset(s: &GroupSubset) -> String {
    machine_point_set(s.elements().iter())
}

fn reason_token(reason: &NonExistenceReason) -> &'static str {
    match reason {
        NonExistenceReason::Periodic => "periodic",
        NonExistenceReason::EmptyW1 => "empty_w1",
        NonExistenceReason::SingleSporadicExhausted => "single_sporadic_exhausted",
        NonExistenceReason::NecessaryFails => "necessary_fails",
    }
}

fn reason_text(reason: &NonExistenceReason) -> &'static str {
    match reason {
        NonExistenceReason::Periodic => "the set is periodic",
        NonExistenceReason::EmptyW1 => {
            "every sporadic point sits on a base residue class"
        }
        NonExistenceReason::SingleSporadicExhausted => {
            "single off-class sporadic point and the exhaustive search found no certificate"
        }
        NonExistenceReason::NecessaryFails => "the necessary residue condition fails",
    }
}

// ---- subcommands ----

fn cmd_decompose(fmt: Format, file: &PathBuf) -> CmdResult {
    let set = load_epset(file)?;
    let profile = mincomp_core::epsets::residue_profile(&set).map_err(epset_failure)?;
    let quotient = profile.quotient();
    let q_tuples: Vec<Vec<i64>> =
        profile.q_residues().iter().map(|&i| quotient.residue_tuple(i)).collect();
    let factors = quotient.invariant_factors();
    match fmt {
        Format::Text => {
            print!("{}", write_epset(&set));
            println!("# canonical: true");
            println!("# periodic: {}", profile.is_periodic());
            let factors_text = if factors.is_empty() {
                "trivial".into()
            } else {
                factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
            };
            println!("# quotient order {}, invariant factors: {}", quotient.order(), factors_text);
            println!("# base residues Q: {}", fmt_point_set(q_tuples.iter()));
            println!("# sporadic on base classes W0: {}", fmt_point_set(profile.w0()));
            println!("# sporadic off base classes W1: {}", fmt_point_set(profile.w1()));
        }
        Format::Machine => {
            println!("dim={}", set.dim());
            println!(
                "factors={}",
                factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
            );
            println!("order={}", quotient.order());
            println!("periodic={}", profile.is_periodic());
            println!("sporadic={}", machine_point_set(set.sporadic().iter()));
            println!("base={}", machine_point_set(set.base().iter()));
            println!("q={}", machine_point_set(q_tuples.iter()));
            println!("w0={}", machine_point_set(profile.w0().iter()));
            println!("w1={}", machine_point_set(profile.w1().iter()));
        }
    }
    Ok(0)
}

fn print_certificate(fmt: Format, cert: &PairCertificate) {
    match fmt {
        Format::Text => {
            println!("certificate N: {}", fmt_point_set(cert.n().elements().iter()));
            for (n, q) in cert.witness() {
                println!("  exposes {} via {}", fmt_tuple(n), fmt_tuple(q));
            }
        }
        Format::Machine => {
            println!("certificate={}", machine_subset(cert.n()));
        }
    }
}

fn report_decision(fmt: Format, decision: &Decision) -> u8 {
    match decision {
        Decision::Exists { certificate } => {
            match fmt {
                Format::Text => println!("decision: exists"),
                Format::Machine => println!("outcome=exists"),
            }
            print_certificate(fmt, certificate);
            0
        }
        Decision::NotExists { reason } => {
            match fmt {
                Format::Text => println!("decision: not-exists ({})", reason_text(reason)),
                Format::Machine => {
                    println!("outcome=not_exists");
                    println!("reason={}", reason_token(reason));
                }
            }
            EXIT_NOT_EXISTS
        }
        Decision::Unknown { necessary_certificate } => {
            match fmt {
                Format::Text => {
                    println!("decision: unknown (sufficient search exhausted)");
                    if let Some(n) = necessary_certificate {
                        println!(
                            "necessary condition holds with N: {}",
                            fmt_point_set(n.elements().iter())
                        );
                    }
                }
                Format::Machine => {
                    println!("outcome=unknown");
                    if let Some(n) = necessary_certificate {
                        println!("necessary={}", machine_subset(n));
                    }
                }
            }
            EXIT_UNKNOWN
        }
    }
}

fn cmd_decide(fmt: Format, file: &PathBuf, options: &DecideOptions) -> CmdResult {
    let set = load_epset(file)?;
    let decision = decide_with(&set, options).map_err(decide_failure)?;
    Ok(report_decision(fmt, &decision))
}

fn print_report(fmt: Format, report: &WindowReport) {
    match fmt {
        Format::Text => print!("{report}"),
        Format::Machine => {
            println!("{}", report.machine_line());
            println!("shells_used={}", report.shells_used);
        }
    }
}

fn cmd_witness(
    fmt: Format,
    file: &PathBuf,
    shells: i64,
    core: Option<&str>,
    dump: Option<&std::path::Path>,
    options: &DecideOptions,
) -> CmdResult {
    let set = load_epset(file)?;
    let decision = decide_with(&set, options).map_err(decide_failure)?;
    let certificate = match decision {
        Decision::Exists { certificate } => certificate,
        other => {
            let code = report_decision(fmt, &other);
            let _ = code;
            return Ok(EXIT_NOT_EXISTS);
        }
    };
    let wit = build_witness(&set, &certificate, shells).map_err(witness_failure)?;
    let core = parse_core(core, set.dim())?;
    let report = verify_window(&set, &wit, &core).map_err(witness_failure)?;
    match fmt {
        Format::Text => {
            println!("decision: exists");
            print_certificate(fmt, &certificate);
            println!(
                "witness: {} kept, {} removed within {} shells",
                wit.kept().len(),
                wit.removed().len(),
                wit.shells_processed()
            );
            print_report(fmt, &report);
        }
        Format::Machine => {
            println!("outcome=exists");
            print_certificate(fmt, &certificate);
            println!("shells={}", wit.shells_processed());
            println!("kept={}", wit.kept().len());
            println!("removed={}", wit.removed().len());
            print_report(fmt, &report);
        }
    }
    let dump_text = write_witness_dump(&wit);
    match dump {
        Some(path) => std::fs::write(path, dump_text)
            .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        None => print!("{dump_text}"),
    }
    Ok(if report.passed() { 0 } else { EXIT_NOT_EXISTS })
}

fn cmd_verify(
    fmt: Format,
    file: &PathBuf,
    witness: &PathBuf,
    core: Option<&str>,
) -> CmdResult {
    let set = load_epset(file)?;
    let text = std::fs::read_to_string(witness)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", witness.display())))?;
    let (kept, _removed) = parse_witness_dump(&text)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", witness.display())))?;
    if kept.is_empty() {
        return Err(fail(EXIT_INPUT, "the dump holds no kept (K) points"));
    }
    let core = parse_core(core, set.dim())?;
    let report = user_window_report(&set, &kept, &core).map_err(witness_failure)?;
    print_report(fmt, &report);
    Ok(if report.passed() { 0 } else { EXIT_NOT_EXISTS })
}

fn print_subset_result(fmt: Format, key: &str, set: &GroupSubset) {
    match fmt {
        Format::Text => println!("{key}: {}", fmt_point_set(set.elements().iter())),
        Format::Machine => println!(
            "{}={}",
            key.replace(' ', "_").replace('-', "_"),
            machine_subset(set)
        ),
    }
}

fn cmd_group(
    fmt: Format,
    spec: &str,
    verb: &GroupVerb,
    cap: usize,
    options: &DecideOptions,
) -> CmdResult {
    let group = parse_group(spec)?;
    match verb {
        GroupVerb::ExtractMinimal { w, c } => {
            let w = parse_subset(&group, w, "--w")?;
            let c = parse_subset(&group, c, "--c")?;
            let minimal = extract_minimal(&w, &c).map_err(group_failure)?;
            if !naive_minimality_check(&w, &minimal) {
                return Err(fail(
                    EXIT_INPUT,
                    "internal check failed: extracted set is not minimal",
                ));
            }
            print_subset_result(fmt, "minimal", &minimal);
            if fmt == Format::Machine {
                println!("verified=true");
            }
            Ok(0)
        }
        GroupVerb::Pair { q1, q } => {
            let q1 = parse_subset(&group, q1, "--q1")?;
            let q = parse_subset(&group, q, "--q")?;
            let found = pair_minimal_complement_with(
                &q1,
                &q,
                mincomp_core::search::Execution::default(),
                cap,
            )
            .map_err(group_failure)?;
            match found {
                Some(cert) => {
                    match fmt {
                        Format::Text => println!("pair outcome: exists"),
                        Format::Machine => println!("outcome=exists"),
                    }
                    print_certificate(fmt, &cert);
                    Ok(0)
                }
                None => {
                    match fmt {
                        Format::Text => {
                            println!("pair outcome: none (search was exhaustive)")
                        }
                        Format::Machine => println!("outcome=not_exists"),
                    }
                    Ok(EXIT_NOT_EXISTS)
                }
            }
        }
        GroupVerb::Rnet { a, r } => {
            let a = parse_subset(&group, a, "--a")?;
            let net = minimal_r_net(&a, *r).map_err(group_failure)?;
            print_subset_result(fmt, "net", &net);
            Ok(0)
        }
        GroupVerb::Product { w, file, shells, core } => {
            let w = parse_subset(&group, w, "--w")?;
            let minimal = extract_minimal(&w, &group.full_subset()).map_err(group_failure)?;
            if is_minimal_complement(&w, &minimal).map_err(group_failure)?
                != MinimalityOutcome::Minimal
                || !naive_minimality_check(&w, &minimal)
            {
                return Err(fail(
                    EXIT_INPUT,
                    "internal check failed: finite factor complement is not minimal",
                ));
            }
            let set = load_epset(file)?;
            let decision = decide_with(&set, options).map_err(decide_failure)?;
            let certificate = match decision {
                Decision::Exists { certificate } => certificate,
                other => return Ok(report_decision(fmt, &other)),
            };
            let wit = build_witness(&set, &certificate, *shells).map_err(witness_failure)?;
            let core = parse_core(core.as_deref(), set.dim())?;
            let report = verify_window(&set, &wit, &core).map_err(witness_failure)?;
            match fmt {
                Format::Text => {
                    println!("product outcome: exists");
                    print_subset_result(fmt, "finite factor minimal", &minimal);
                    print_certificate(fmt, &certificate);
                    println!(
                        "lattice factor witness: {} kept within {} shells",
                        wit.kept().len(),
                        wit.shells_processed()
                    );
                    print_report(fmt, &report);
                }
                Format::Machine => {
                    println!("outcome=exists");
                    print_subset_result(fmt, "finite", &minimal);
                    print_certificate(fmt, &certificate);
                    println!("kept={}", wit.kept().len());
                    print_report(fmt, &report);
                }
            }
            Ok(if report.passed() { 0 } else { EXIT_NOT_EXISTS })
        }
    }
}

fn emit_generated(
    fmt: Format,
    set: &EPSet,
    run_decide: bool,
    options: &DecideOptions,
) -> CmdResult {
    print!("{}", write_epset(set));
    if !run_decide {
        return Ok(0);
    }
    let decision = decide_with(set, options).map_err(decide_failure)?;
    if fmt == Format::Text {
        // Keep the set text round-trippable: the decision is a comment.
        let mut lines = Vec::new();
        match &decision {
            Decision::Exists { certificate } => {
                lines.push("decision: exists".to_string());
                lines.push(format!(
                    "certificate N: {}",
                    fmt_point_set(certificate.n().elements().iter())
                ));
            }
            Decision::NotExists { reason } => {
                lines.push(format!("decision: not-exists ({})", reason_text(reason)));
            }
            Decision::Unknown { .. } => lines.push("decision: unknown".to_string()),
        }
        for line in lines {
            println!("# {line}");
        }
        Ok(match decision {
            Decision::Exists { .. } => 0,
            Decision::NotExists { .. } => EXIT_NOT_EXISTS,
            Decision::Unknown { .. } => EXIT_UNKNOWN,
        })
    } else {
        Ok(report_decision(fmt, &decision))
    }
}

fn cmd_gallery(fmt: Format, family: &GalleryCmd, options: &DecideOptions) -> CmdResult {
    match family {
        GalleryCmd::Ladder { d, k, i, decide } => {
            let set = example_infinite(&InfiniteFamily::Ladder { k: *k, i: *i }, *d)
                .map_err(gallery_failure)?;
            emit_generated(fmt, &set, decide.decide, options)
        }
        GalleryCmd::SingleOffset { d, i, decide } => {
            let set = example_infinite(&InfiniteFamily::SingleOffset { i: *i }, *d)
                .map_err(gallery_failure)?;
            emit_generated(fmt, &set, decide.decide, options)
        }
        GalleryCmd::MissingPair { d, f, decide } => {
            let f = parse_tuples(f, *d)?;
            let set = example_infinite(&InfiniteFamily::MissingPair { f }, *d)
                .map_err(gallery_failure)?;
            emit_generated(fmt, &set, decide.decide, options)
        }
        GalleryCmd::Diagonal { d, i, r } => {
            let window = Window::cube(*d, *r);
            let (diag, hyp) =
                diagonal_hyperplane_windows(*d, *i, &window).map_err(gallery_failure)?;
            match fmt {
                Format::Text => {
                    println!("# the diagonal line is not eventually periodic; windows only");
                    println!("diagonal ({} points): {}", diag.len(), fmt_point_set(diag.iter()));
                    println!(
                        "hyperplane x_{i} = 0 ({} points): {}",
                        hyp.len(),
                        fmt_point_set(hyp.iter())
                    );
                }
                Format::Machine => {
                    println!("diagonal={}", machine_point_set(diag.iter()));
                    println!("hyperplane={}", machine_point_set(hyp.iter()));
                }
            }
            Ok(0)
        }
        GalleryCmd::Poly { vars, f, domain } => {
            let polys: Vec<Polynomial> = f
                .split(';')
                .map(|t| Polynomial::parse(*vars, t).map_err(gallery_failure))
                .collect::<Result<_, _>>()?;
            let domain = parse_core(Some(domain), *vars)?;
            let report = polynomial_image(&polys, &domain).map_err(gallery_failure)?;
            match fmt {
                Format::Text => {
                    println!("image points over the domain: {}", report.points.len());
                    for (j, values) in report.coordinate_values.iter().enumerate() {
                        println!(
                            "coordinate {} attains {} values; hyperplane slice has {} points{}",
                            j + 1,
                            values.len(),
                            report.hyperplane_slice[j].len(),
                            if report.minimality_plausible[j] {
                                " (minimality hypothesis plausible, window evidence only)"
                            } else {
                                ""
                            }
                        );
                    }
                }
                Format::Machine => {
                    println!("points={}", report.points.len());
                    for (j, values) in report.coordinate_values.iter().enumerate() {
                        println!(
                            "coord{}_values={} coord{}_slice={} coord{}_plausible={}",
                            j + 1,
                            values.len(),
                            j + 1,
                            report.hyperplane_slice[j].len(),
                            j + 1,
                            report.minimality_plausible[j]
                        );
                    }
                }
            }
            Ok(0)
        }
        GalleryCmd::Ksy { m, x, y0, y1, decide } => {
            let x = parse_scalars(x, "--x")?;
            let y0 = parse_scalars(y0, "--y0")?;
            let y1 = parse_scalars(y1, "--y1")?;
            let set = ksy_adapter(*m, &x, &y0, &y1).map_err(gallery_failure)?;
            emit_generated(fmt, &set, decide.decide, options)
        }
    }
}

fn parse_scalars(text: &str, what: &str) -> Result<Vec<i64>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| fail(EXIT_INPUT, format!("bad integer `{t}` in {what}")))
        })
        .collect()
}
