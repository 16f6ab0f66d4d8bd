//! `symideal`: exact Groebner computations and the cuboid verification
//! procedures from the command line.
//!
//! Verification output is deterministic: timings go to stderr so that two
//! runs against a warm cache produce byte-identical stdout.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use symideal_core::cuboid::{
    catalog, e_form, phi, sym_cofactors, verify_all, verify_factor_conversions,
    verify_kernel_basis, verify_partial_relations, verify_phi_kernel, verify_sym_basis,
    ClaimOutcome, Session, VerificationReport, E_LABELS,
};
use symideal_core::groebner::{buchberger, elimination_ideal, reduce, BasisStore};
use symideal_core::ring::{Polynomial, RingCtx};

#[derive(Parser)]
#[command(
    name = "symideal",
    version,
    about = "Exact lexicographic Groebner bases and the cuboid symmetric-ideal verifier"
)]
struct Cli {
    /// Basis store directory. Defaults to $SYMIDEAL_CACHE, then a per-user
    /// cache directory.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    /// Compute everything in memory, without touching a basis store.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Output format for verification reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Grouped report with one aligned line per claim.
    Text,
    /// One tab-separated `id status witness` record per claim.
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    /// Every procedure, cheapest first.
    All,
    /// The candidate kernel generators vanish under the substitution.
    Phi,
    /// The eliminated kernel basis spans the same ideal as the candidates.
    Kernel,
    /// Partial invariants: equivariance and the rewriting relations.
    Relations,
    /// The eight symmetrized generators and the completeness probe.
    Sym,
    /// Conversions of the previously derived equations, with memberships.
    Conversions,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification procedures and report per-claim outcomes.
    ///
    /// Exit code 0 when every claim passes (corrections allowed), 1 when
    /// any claim fails.
    Verify {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
    },
    /// Reduced lexicographic basis of the system in FILE.
    Gb { file: PathBuf },
    /// Basis of the elimination ideal: drop the first K priority variables.
    Eliminate {
        file: PathBuf,
        /// How many of the highest-priority variables to eliminate.
        #[arg(short, long)]
        k: usize,
    },
    /// Normal form and cofactors of the first polynomial in FILE modulo
    /// the remaining ones.
    Reduce { file: PathBuf },
    /// Evaluate an E-ring polynomial at the elementary multisymmetric
    /// polynomials.
    Phi { poly: String },
    /// Canonical E-ring representative of an invariant polynomial.
    Eform { poly: String },
    /// Express an invariant polynomial over the eight symmetrized
    /// generators with invariant cofactors.
    Sym { poly: String },
    /// Print the catalog of named polynomials.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let mut out = String::new();
    let code = match &cli.command {
        Command::Verify { scope } => {
            let session = open_session(cli)?;
            let reports = match scope {
                Scope::All => verify_all(&session),
                Scope::Phi => vec![verify_phi_kernel()],
                Scope::Kernel => vec![verify_kernel_basis(&session)],
                Scope::Relations => vec![verify_partial_relations()],
                Scope::Sym => vec![verify_sym_basis(&session)],
                Scope::Conversions => vec![verify_factor_conversions(&session)],
            };
            let mut worst = ClaimOutcome::Pass;
            for report in &reports {
                worst = worst.max(report.status());
                render_report(&mut out, report, cli.format);
                eprintln!(
                    "# {} finished in {:.2}s",
                    report.name(),
                    report.elapsed().as_secs_f64()
                );
            }
            if worst == ClaimOutcome::Fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Gb { file } => {
            let (_, polys) = load_system(file)?;
            let gb = buchberger(&polys);
            for g in gb.elements() {
                writeln!(out, "{g}").unwrap();
            }
            ExitCode::SUCCESS
        }
        Command::Eliminate { file, k } => {
            let (_, polys) = load_system(file)?;
            let elements = elimination_ideal(&polys, *k).map_err(|e| e.to_string())?;
            for g in &elements {
                writeln!(out, "{g}").unwrap();
            }
            ExitCode::SUCCESS
        }
        Command::Reduce { file } => {
            let (_, polys) = load_system(file)?;
            let (dividend, divisors) = polys
                .split_first()
                .ok_or_else(|| "the file lists no polynomials".to_string())?;
            if divisors.is_empty() {
                return Err("the file lists no divisors after the first polynomial".into());
            }
            let (rem, cofs) = reduce(dividend, divisors);
            writeln!(out, "remainder: {rem}").unwrap();
            for (c, g) in cofs.coefficients().iter().zip(divisors) {
                writeln!(out, "cofactor of {g}: {c}").unwrap();
            }
            ExitCode::SUCCESS
        }
        Command::Phi { poly } => {
            let cat = catalog();
            let p = cat.e.parse(poly).map_err(|e| e.to_string())?;
            writeln!(out, "{}", phi(&p)).unwrap();
            ExitCode::SUCCESS
        }
        Command::Eform { poly } => {
            let cat = catalog();
            let p = cat.xd.parse(poly).map_err(|e| e.to_string())?;
            let session = open_session(cli)?;
            let representative = e_form(&session, &p).map_err(|e| e.to_string())?;
            writeln!(out, "{representative}").unwrap();
            ExitCode::SUCCESS
        }
        Command::Sym { poly } => {
            let cat = catalog();
            let p = cat.xd.parse(poly).map_err(|e| e.to_string())?;
            let session = open_session(cli)?;
            match sym_cofactors(&session, &p).map_err(|e| e.to_string())? {
                Some(cofs) => {
                    for (k, c) in cofs.iter().enumerate() {
                        if !c.is_zero() {
                            writeln!(out, "ptilde{}: {c}", k + 1).unwrap();
                        }
                    }
                    ExitCode::SUCCESS
                }
                None => {
                    writeln!(out, "not a member of the ideal").unwrap();
                    ExitCode::from(1)
                }
            }
        }
        Command::Catalog => {
            render_catalog(&mut out);
            ExitCode::SUCCESS
        }
    };
    emit(cli, &out)?;
    Ok(code)
}

fn open_session(cli: &Cli) -> Result<Session, String> {
    if cli.no_cache {
        return Ok(Session::in_memory());
    }
    let dir = match &cli.cache {
        Some(dir) => Some(dir.clone()),
        None => default_cache_dir(),
    };
    match dir {
        Some(dir) => {
            let store = BasisStore::open(&dir)
                .map_err(|e| format!("cannot open basis store at {}: {e}", dir.display()))?;
            Ok(Session::new(Some(store)))
        }
        None => Ok(Session::in_memory()),
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Ok(dir) = std::env::var("SYMIDEAL_CACHE") {
        return Some(PathBuf::from(dir));
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        return Some(PathBuf::from(xdg).join("symideal"));
    }
    std::env::var("HOME")
        .ok()
        .map(|home| PathBuf::from(home).join(".cache").join("symideal"))
}

/// Reads a polynomial system: a `#vars: a, b, c` header naming the
/// variables greatest-first, then one polynomial per line. Blank lines and
/// `#` comments are skipped.
fn load_system(path: &Path) -> Result<(Arc<RingCtx>, Vec<Polynomial>), String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut ring: Option<Arc<RingCtx>> = None;
    let mut polys = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#vars:") {
            let names: Vec<&str> = rest.split(',').map(str::trim).collect();
            if names.iter().any(|n| n.is_empty()) {
                return Err(format!("line {}: empty variable name", number + 1));
            }
            ring = Some(RingCtx::lex(&names));
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let ring = ring
            .as_ref()
            .ok_or_else(|| format!("line {}: polynomial before the #vars: header", number + 1))?;
        let poly = ring
            .parse(line)
            .map_err(|e| format!("line {}: {e}", number + 1))?;
        polys.push(poly);
    }
    let ring = ring.ok_or_else(|| "the file has no #vars: header".to_string())?;
    Ok((ring, polys))
}

fn render_report(out: &mut String, report: &VerificationReport, format: Format) {
    match format {
        Format::Records => {
            out.push_str(&report.render_records());
        }
        Format::Text => {
            writeln!(out, "== {} [{}]", report.name(), report.status().as_str()).unwrap();
            let width = report
                .claims()
                .iter()
                .map(|c| c.id.len())
                .max()
                .unwrap_or(0);
            for claim in report.claims() {
                writeln!(
                    out,
                    "  {:width$}  {:21}  {}",
                    claim.id,
                    claim.outcome.as_str(),
                    claim.witness,
                    width = width
                )
                .unwrap();
            }
            out.push('\n');
        }
    }
}

fn render_catalog(out: &mut String) {
    let cat = catalog();
    writeln!(out, "# cuboid equations (left-hand sides)").unwrap();
    for (i, p) in cat.p.iter().enumerate() {
        writeln!(out, "p{i} = {p}").unwrap();
    }
    writeln!(out, "\n# relabeled face generators (c_i carries d_i)").unwrap();
    for (i, c) in cat.c.iter().enumerate() {
        writeln!(out, "c{} = {c}", i + 1).unwrap();
    }
    writeln!(out, "\n# elementary multisymmetric polynomials").unwrap();
    for (label, e) in E_LABELS.iter().zip(&cat.e_xd) {
        writeln!(out, "{label} -> {e}").unwrap();
    }
    writeln!(out, "\n# kernel generators (E-ring)").unwrap();
    for (i, q) in cat.q.iter().enumerate() {
        writeln!(out, "q{} = {q}", i + 1).unwrap();
    }
    writeln!(out, "\n# symmetrized ideal generators").unwrap();
    for (i, p) in cat.ptilde.iter().enumerate() {
        writeln!(out, "ptilde{} = {p}", i + 1).unwrap();
    }
    writeln!(out, "\n# previously derived equations (E-form)").unwrap();
    for (i, p) in cat.eform_prev.iter().enumerate() {
        writeln!(out, "prev{} = {p}", i + 1).unwrap();
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
