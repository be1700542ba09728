//! `rlx` command line. Exit codes: 0 ok, 1 bad input or usage, 2 a theorem
//! check disagreed (an implementation bug, not a property of the input).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use rlat_core::filters::Filter;
use rlat_core::reticulation::build_reticulation;
use rlat_core::{parse_formula, ElemSet, Formula, ResiduatedLattice};
use serde::Serialize;

use crate::corpus::{check_size, env_root, file_name, load_or_generate, write_corpus};
use crate::format::{parse_rlat, print_blat, print_rlat};
use crate::report::{self, analyze, filter_generator, labels_of, render_human, render_theorems_human, set_text, theorem_rows};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rlx", version, about = "Finite residuated lattices: lifting properties, spectra, reticulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and check the axioms.
    Validate { file: PathBuf },
    /// Full report: element classes, filters, spectra, Gelfand, reticulation.
    Analyze {
        file: PathBuf,
        /// Include opens, clopens and separation predicates.
        #[arg(long)]
        topology: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lifting property for a formula, globally or at one filter.
    #[command(group(ArgGroup::new("which").args(["formula", "blp", "ilp", "rlp"]).required(true)))]
    Lp {
        file: PathBuf,
        /// e.g. 'v|!v=1'
        #[arg(long)]
        formula: Option<String>,
        #[arg(long)]
        blp: bool,
        #[arg(long)]
        ilp: bool,
        #[arg(long)]
        rlp: bool,
        /// Comma-separated labels; the filter they generate is used.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate both sides of every implemented theorem.
    CheckTheorems {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// All algebras of size N up to isomorphism.
    Enumerate {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The reticulation L(A) as a .blat lattice.
    Reticulate {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check the reticulation properties; exit 2 if any fails.
        #[arg(long)]
        verify: bool,
    },
    /// A/F as a .rlat algebra.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        filter: String,
    },
}

pub fn load(path: &Path) -> Result<ResiduatedLattice> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let raw = parse_rlat(&text).with_context(|| path.display().to_string())?;
    ResiduatedLattice::validate(&raw).with_context(|| format!("{}: invalid algebra", path.display()))
}

/// The filter generated by comma-separated labels.
pub fn parse_filter(a: &ResiduatedLattice, spec: &str) -> Result<Filter> {
    let mut s = ElemSet::EMPTY;
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let x = a.index_of(tok).ok_or_else(|| anyhow!("unknown element `{tok}` in --filter"))?;
        s.insert(x);
    }
    if s.is_empty() {
        return Err(anyhow!("--filter needs at least one element"));
    }
    Ok(a.generated_filter(s))
}

fn json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(v)?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct LpFilterRow {
    generator: String,
    members: Vec<String>,
    holds: bool,
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct LpOutput {
    formula: String,
    definable_set: Vec<String>,
    global: bool,
    filters: Vec<LpFilterRow>,
}

#[derive(Serialize)]
struct ReticVerify {
    axioms: bool,
    lattice_morphism: bool,
    kernel: bool,
    powers: bool,
    filters: bool,
    spec_homeomorphism: bool,
    max_homeomorphism: bool,
    boolean_center: bool,
    quotients: bool,
}

impl ReticVerify {
    fn all(&self) -> bool {
        self.axioms
            && self.lattice_morphism
            && self.kernel
            && self.powers
            && self.filters
            && self.spec_homeomorphism
            && self.max_homeomorphism
            && self.boolean_center
            && self.quotients
    }

    fn rows(&self) -> [(&'static str, bool); 9] {
        [
            ("axioms", self.axioms),
            ("lattice-morphism", self.lattice_morphism),
            ("kernel", self.kernel),
            ("powers", self.powers),
            ("filters", self.filters),
            ("spec-homeomorphism", self.spec_homeomorphism),
            ("max-homeomorphism", self.max_homeomorphism),
            ("boolean-center", self.boolean_center),
            ("quotients", self.quotients),
        ]
    }
}

fn cmd_lp(a: &ResiduatedLattice, phi: &Formula, filter: Option<&str>, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let filters = match filter {
        Some(spec) => vec![parse_filter(a, spec)?],
        None => a.all_filters(),
    };
    let mut rows = Vec::with_capacity(filters.len());
    for f in filters {
        let r = a.has_phi_lp(phi, f)?;
        rows.push(LpFilterRow {
            generator: filter_generator(a, f),
            members: labels_of(a, f.members()),
            holds: r.holds,
            counterexample: r.counterexample.map(|x| a.label(x).to_string()),
        });
    }
    let o = LpOutput {
        formula: phi.to_string(),
        definable_set: labels_of(a, phi.definable_set(a)),
        global: rows.iter().all(|r| r.holds),
        filters: rows,
    };
    if as_json {
        json(out, &o)?;
    } else {
        writeln!(out, "formula: {}", o.formula)?;
        writeln!(out, "A(phi) = {}", set_text(&o.definable_set))?;
        for r in &o.filters {
            write!(out, "  {} = {}  {}", r.generator, set_text(&r.members), if r.holds { "holds" } else { "fails" })?;
            if let Some(c) = &r.counterexample {
                write!(out, " (class of {c} does not lift)")?;
            }
            writeln!(out)?;
        }
        let scope = if filter.is_some() { "at filter" } else { "globally" };
        writeln!(out, "{} {scope}", if o.global { "holds" } else { "fails" })?;
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(n: usize, out_dir: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    check_size(n)?;
    let root = env_root();
    let algebras = load_or_generate(n, root.as_deref())?;
    if let Some(dir) = out_dir {
        write_corpus(dir, &algebras)?;
    }
    writeln!(out, "size {n}: {} algebras", algebras.len())?;
    for (i, a) in algebras.iter().enumerate() {
        let (hash, _) = report::algebra_hash(a);
        writeln!(out, "{}  {}", file_name(i), hash)?;
    }
    Ok(EXIT_OK)
}

fn cmd_reticulate(a: &ResiduatedLattice, target: Option<&Path>, verify: bool, out: &mut dyn Write) -> Result<i32> {
    let r = build_reticulation(a);
    let l = r.lattice.lattice();
    let lambda: Vec<String> = a.elements().map(|x| format!("{}->{}", a.label(x), l.label(r.lambda[x]))).collect();
    let text = format!("# lambda: {}\n{}", lambda.join(" "), print_blat(l));
    match target {
        Some(p) => fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    if !verify {
        return Ok(EXIT_OK);
    }
    let v = r.verify_retic_properties();
    let rv = ReticVerify {
        axioms: r.check_axioms().is_ok(),
        lattice_morphism: v.lattice_morphism,
        kernel: v.kernel,
        powers: v.powers,
        filters: v.filters,
        spec_homeomorphism: v.spec_homeomorphism,
        max_homeomorphism: v.max_homeomorphism,
        boolean_center: v.boolean_center,
        quotients: v.quotients,
    };
    for (name, ok) in rv.rows() {
        writeln!(out, "# verify {name}: {}", if ok { "ok" } else { "FAILED" })?;
    }
    Ok(if rv.all() { EXIT_OK } else { EXIT_DISAGREE })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Validate { file } => {
            let a = load(&file)?;
            writeln!(out, "ok: {} elements {}", a.size(), set_text(a.labels()))?;
            Ok(EXIT_OK)
        }
        Command::Analyze { file, topology, json: as_json } => {
            let a = load(&file)?;
            let r = analyze(&a, topology);
            if as_json {
                json(out, &r)?;
            } else {
                out.write_all(render_human(&r).as_bytes())?;
            }
            Ok(if r.theorems.disagreements.is_empty() { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Lp { file, formula, blp, ilp, rlp, filter, json: as_json } => {
            let a = load(&file)?;
            let phi = match formula {
                Some(text) => parse_formula(&text).map_err(|e| anyhow!("--formula: {e}"))?,
                None if blp => Formula::blp(),
                None if ilp => Formula::ilp(),
                None => {
                    debug_assert!(rlp);
                    Formula::rlp()
                }
            };
            cmd_lp(&a, &phi, filter.as_deref(), as_json, out)
        }
        Command::CheckTheorems { file, json: as_json } => {
            let a = load(&file)?;
            let rows = theorem_rows(&a);
            if as_json {
                json(out, &rows)?;
            } else {
                out.write_all(render_theorems_human(&rows).as_bytes())?;
            }
            Ok(if rows.iter().all(|r| r.agree) { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Enumerate { n, out: dir } => cmd_enumerate(n, dir.as_deref(), out),
        Command::Reticulate { file, out: target, verify } => {
            let a = load(&file)?;
            cmd_reticulate(&a, target.as_deref(), verify, out)
        }
        Command::Quotient { file, filter } => {
            let a = load(&file)?;
            let f = parse_filter(&a, &filter)?;
            let q = a.quotient(f)?;
            let g = filter_generator(&a, f);
            writeln!(out, "# A/{g} with {g} = {}", set_text(&labels_of(&a, f.members())))?;
            // Each class is named by its least member.
            let classes: Vec<String> = (0..q.quotient.size()).map(|c| format!("{}={}", q.quotient.label(c), set_text(&labels_of(&a, q.class(c))))).collect();
            writeln!(out, "# classes: {}", classes.join(" "))?;
            out.write_all(print_rlat(&q.quotient.to_raw()).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            // clap would exit 2 on usage errors; 2 is reserved here.
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INVALID
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            // Bad files, bad flags, IO: all exit 1. Exit 2 only comes from a
            // verdict, never from an error.
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INVALID
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}
