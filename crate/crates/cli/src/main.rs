//! `logflc`: command-line front end for the log-geometric little-disks
//! toolkit. Exit status is 0 when every check passes, 1 on a failed check
//! or internal error, and 2 on a usage error.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use logflc_core::betti::{
    betti_fld, betti_flc_top, betti_ld, betti_ld_with, betti_mbar, betti_mbar_with, betti_open, betti_open_with,
};
use logflc_core::bv::{bv_dims, check_bv_operad, check_bv_relations, formality_report, ger_dims, BVElement};
use logflc_core::flc::{check_flc_axioms, flc_comp, flc_space, theta_log, AxiomReport};
use logflc_core::verify::{run_all, VerifyConfig};
use logflc_core::weights::{acyclicity_certificate, build_e1, purity_check, AcyclicSpace};
use logflc_core::{enumerate_trees, Error, PoincarePolynomial};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "logflc", version, about = "Exact checks for the log-geometric framed little disks operad")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "FLC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary stratum census of Mbar_{0,n}.
    Strata {
        /// Number of marked points.
        #[arg(long)]
        n: usize,
        /// Only this codimension.
        #[arg(long)]
        codim: Option<usize>,
        /// List the dual trees.
        #[arg(long)]
        list: bool,
    },
    /// Composition and forgetful maps of FLC.
    Flc {
        #[command(subcommand)]
        command: FlcCommand,
    },
    /// Betti numbers from point counts.
    Betti {
        #[arg(long, value_enum)]
        space: BettiSpace,
        /// Marks for `open`/`mbar`, operad arity otherwise.
        #[arg(long)]
        n: usize,
        /// Primes to count over (comma separated); defaults to enough primes from 5.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Weight spectral sequence table and purity identities for M_{0,n}.
    Purity {
        #[arg(long)]
        n: usize,
    },
    /// Proper-acyclicity certificate.
    Acyclic {
        #[arg(long, value_enum)]
        space: AcyclicKind,
        /// Number of points for `p1`.
        #[arg(long)]
        points: Option<usize>,
        /// Arity for `flc`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// BV operad rewriting engine.
    Bv {
        #[command(subcommand)]
        command: BvCommand,
    },
    /// Formal cooperad model.
    Formality {
        #[command(subcommand)]
        command: FormalityCommand,
    },
    /// Run all eight acceptance criteria.
    VerifyAll {
        /// Upper bound on arities and marks.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Seed for the randomized log-map cases.
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum FlcCommand {
    /// The map FLC_n × FLC_m → FLC_{n+m-1} at slot i.
    Comp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// The forgetful map θ_i : FLC_n → pt_log.
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Operad axioms on generic points.
    Axioms {
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
    },
    /// Geometric, log and fiber dimensions of FLC_n.
    Dims {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BvCommand {
    /// Compose two elements read from JSON files `{"arity": n, "expr": "..."}`.
    Compose {
        #[arg(long)]
        expr_file: PathBuf,
        #[arg(long)]
        slot: usize,
        #[arg(long)]
        with: PathBuf,
    },
    /// Basis counts by degree.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Normal form of an expression such as `D(x1*x2) - D(x1)*x2`.
    NormalForm {
        #[arg(long)]
        expr: String,
        /// Defaults to the largest generator index.
        #[arg(long)]
        arity: Option<usize>,
    },
    /// BV relation suite on basis monomials.
    Relations {
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
    },
    /// Operad axioms on basis elements.
    Axioms {
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
    },
}

#[derive(Subcommand, Debug)]
enum FormalityCommand {
    /// Dimensions, zero differential and pushout check.
    Report {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BettiSpace {
    Open,
    Mbar,
    Ld,
    Fld,
    Flc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AcyclicKind {
    P1,
    Flc,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Arity { .. }
            | Error::ArityRange { .. }
            | Error::SlotOutOfRange { .. }
            | Error::InvalidPermutation(_)
            | Error::NotPrime(_)
            | Error::FieldTooSmall(_)
            | Error::Parse { .. }
            | Error::MalformedTerm(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn coeffs(p: &PoincarePolynomial) -> String {
    format!("{:?}", p.coeffs())
}

fn axiom_checks(r: &mut Report, rep: &AxiomReport) {
    for (name, count) in &rep.checked {
        let fails: Vec<&str> =
            rep.failures.iter().filter(|f| f.axiom == *name).map(|f| f.detail.as_str()).take(1).collect();
        let detail = match fails.first() {
            Some(d) => format!("{count} checks; first failure: {d}"),
            None => format!("{count} checks"),
        };
        r.check(*name, fails.is_empty(), detail);
    }
}

fn strata(n: usize, codim: Option<usize>, list: bool) -> Outcome {
    if !(3..=9).contains(&n) {
        return Err(Failure::Usage(format!("--n must be between 3 and 9, got {n}")));
    }
    let arity = n - 1;
    let mut r = Report::new("strata", json!({ "n": n, "codim": codim, "list": list }));
    let codims: Vec<usize> = match codim {
        Some(c) => vec![c],
        None => (0..=n - 3).collect(),
    };
    let mut census = Vec::new();
    for c in codims {
        let trees = enumerate_trees(arity, c);
        r.row(format!("codim {c}"), trees.len());
        if list {
            let shown: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
            r.row("", shown.join("\n"));
        }
        census.push(json!({ "codim": c, "count": trees.len(), "trees": if list { json!(trees) } else { json!(null) } }));
        if c == 1 {
            let expected = (1usize << (n - 1)) - n - 1;
            r.check("divisors = bipartitions", trees.len() == expected, format!("{} = 2^{} - {}", trees.len(), n - 1, n + 1));
        }
    }
    r.result(json!({ "marks": n, "census": census }));
    Ok(r)
}

fn flc(cmd: &FlcCommand) -> Outcome {
    match *cmd {
        FlcCommand::Comp { m, n, i } => {
            let map = flc_comp(m, n, i)?;
            let mut r = Report::new("flc comp", json!({ "m": m, "n": n, "i": i }));
            r.row("source", map.source().base()).row("target", map.target().base());
            r.row("matching", map.matching_lines().join("\n"));
            r.result(&map);
            Ok(r)
        }
        FlcCommand::Theta { n, i } => {
            let theta = theta_log(n, i)?;
            let mut r = Report::new("flc theta", json!({ "n": n, "i": i }));
            r.row("open stratum", theta.log_map.matching_lines().join("\n"));
            let orders: Vec<String> = theta.divisor_orders.iter().map(|(c, o)| format!("{c}: {o}")).collect();
            r.row("divisor orders", orders.join("\n"));
            r.result(&theta);
            Ok(r)
        }
        FlcCommand::Axioms { max_arity } => {
            if max_arity == 0 || max_arity > 5 {
                return Err(Failure::Usage("--max-arity must be between 1 and 5".into()));
            }
            let rep = check_flc_axioms(max_arity);
            let mut r = Report::new("flc axioms", json!({ "max_arity": max_arity }));
            axiom_checks(&mut r, &rep);
            r.result(json!({ "checked": rep.checked, "failures": rep.failures.len() }));
            Ok(r)
        }
        FlcCommand::Dims { n } => {
            let space = flc_space(n)?;
            let d = space.dims();
            let mut r = Report::new("flc dims", json!({ "n": n }));
            r.row("geometric", d.geometric).row("log", d.log).row("fiber", d.fiber);
            r.result(d);
            Ok(r)
        }
    }
}

fn betti(space: BettiSpace, n: usize, primes: &[u64]) -> Outcome {
    let custom = !primes.is_empty();
    let p = match space {
        BettiSpace::Open if custom => betti_open_with(n, primes)?,
        BettiSpace::Open => betti_open(n)?,
        BettiSpace::Mbar if custom => betti_mbar_with(n, primes)?,
        BettiSpace::Mbar => betti_mbar(n)?,
        BettiSpace::Ld if custom => betti_ld_with(n, primes)?,
        BettiSpace::Ld => betti_ld(n)?,
        BettiSpace::Fld => betti_fld(n)?,
        BettiSpace::Flc => betti_flc_top(n)?,
    };
    let name = format!("{space:?}").to_lowercase();
    let mut r = Report::new("betti", json!({ "space": name, "n": n, "primes": primes }));
    r.row("coefficients", coeffs(&p)).row("poincare", &p).row("total", p.total());
    if let BettiSpace::Mbar = space {
        r.check("palindromic", p.is_palindromic(), "");
        r.check("odd degrees vanish", p.odd_coefficients_vanish(), "");
    }
    r.result(json!({ "coefficients": p.coeffs(), "total": p.total() }));
    Ok(r)
}

fn purity(n: usize) -> Outcome {
    let table = build_e1(n)?;
    let mut r = Report::new("purity", json!({ "n": n }));
    let mut lines = Vec::new();
    for w in (0..=2 * table.dim()).rev() {
        let cells: Vec<String> = table.row(w).iter().rev().map(|(_, d)| format!("{d:>4}")).collect();
        lines.push(format!("w={w:<2} {}", cells.join(" ")));
    }
    r.row("E1 (p = 0, 1, ...)", lines.join("\n"));
    let strata: Vec<usize> = table.columns.iter().map(|c| c.strata).collect();
    r.row("strata per codim", format!("{strata:?}"));
    match purity_check(&table) {
        Ok(rep) => {
            for row in &rep.rows {
                r.check(format!("weight {}", row.weight), row.holds, format!("{} = b_{}", row.identity, row.weight / 2));
            }
            r.check("odd weight rows vanish", rep.odd_rows_vanish, "");
            r.check("column 0 = Mbar_0,n", rep.column0_matches_mbar, "");
            r.check("Euler characteristic", rep.euler_matches, format!("{}", table.euler_characteristic()));
            r.row("level", rep.level);
            r.result(json!({ "table": table, "report": rep }));
        }
        Err(Error::PurityViolation(msg)) => {
            r.check("purity", false, msg);
            r.result(json!({ "table": table }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn acyclic(kind: AcyclicKind, points: Option<usize>, n: Option<usize>) -> Outcome {
    let space = match (kind, points, n) {
        (AcyclicKind::P1, Some(d), _) => AcyclicSpace::P1WithPoints(d),
        (AcyclicKind::Flc, _, Some(n)) => AcyclicSpace::Flc(n),
        (AcyclicKind::P1, None, _) => return Err(Failure::Usage("--space p1 needs --points".into())),
        (AcyclicKind::Flc, _, None) => return Err(Failure::Usage("--space flc needs --n".into())),
    };
    if let AcyclicSpace::Flc(k) = space {
        if k > 6 {
            return Err(Failure::Usage("--n must be at most 6".into()));
        }
    }
    let c = acyclicity_certificate(space)?;
    let mut r = Report::new("acyclic", json!({ "space": space }));
    r.row("space", &c.space).row("log dim", c.log_dim);
    r.row("hodge dims", format!("{:?}", c.hodge_dims)).row("betti", coeffs(&c.betti_dims));
    if let Some(coh) = &c.coherent_dims {
        r.row("coherent h^0", format!("{coh:?}"));
    }
    r.row("level", c.level);
    r.check("proper acyclic", c.pass, format!("{:?} vs {}", c.hodge_dims, coeffs(&c.betti_dims)));
    r.result(&c);
    Ok(r)
}

#[derive(Deserialize)]
struct ExprFile {
    arity: usize,
    expr: String,
}

fn read_expr(path: &Path) -> std::result::Result<BVElement, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let f: ExprFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: expected {{\"arity\": n, \"expr\": \"...\"}}: {e}", path.display())))?;
    Ok(BVElement::parse(f.arity, &f.expr)?)
}

fn bv(cmd: &BvCommand) -> Outcome {
    match cmd {
        BvCommand::Compose { expr_file, slot, with } => {
            let a = read_expr(expr_file)?;
            let b = read_expr(with)?;
            let c = a.compose(&b, *slot)?;
            let mut r = Report::new(
                "bv compose",
                json!({ "a": a.to_string(), "b": b.to_string(), "slot": slot }),
            );
            r.row("a", &a).row("b", &b).row(format!("a ∘_{slot} b"), &c);
            r.result(&c);
            Ok(r)
        }
        BvCommand::Dims { n } => {
            let bv = bv_dims(*n)?;
            let ger = ger_dims(*n)?;
            let fld = betti_fld(*n)?;
            let ld = betti_ld(*n)?;
            let mut r = Report::new("bv dims", json!({ "n": n }));
            r.row("bv", coeffs(&bv)).row("ger", coeffs(&ger)).row("bv total", bv.total());
            r.check("bv = fld", bv == fld, coeffs(&fld));
            r.check("ger = ld", ger == ld, coeffs(&ld));
            r.result(json!({ "bv": bv, "ger": ger, "fld": fld, "ld": ld }));
            Ok(r)
        }
        BvCommand::NormalForm { expr, arity } => {
            let e = match arity {
                Some(n) => BVElement::parse(*n, expr)?,
                None => expr.parse::<BVElement>()?,
            };
            let again = e.normal_form()?;
            let mut r = Report::new("bv normal-form", json!({ "expr": expr, "arity": e.arity() }));
            r.row("normal form", &e);
            r.check("idempotent", again == e, "");
            r.result(&e);
            Ok(r)
        }
        BvCommand::Relations { max_arity } => {
            if *max_arity == 0 || *max_arity > 4 {
                return Err(Failure::Usage("--max-arity must be between 1 and 4".into()));
            }
            let rep = check_bv_relations(*max_arity)?;
            let mut r = Report::new("bv relations", json!({ "max_arity": max_arity }));
            axiom_checks(&mut r, &rep);
            r.result(json!({ "checked": rep.checked, "failures": rep.failures.len() }));
            Ok(r)
        }
        BvCommand::Axioms { max_arity } => {
            if *max_arity == 0 || *max_arity > 3 {
                return Err(Failure::Usage("--max-arity must be between 1 and 3".into()));
            }
            let rep = check_bv_operad(*max_arity)?;
            let mut r = Report::new("bv axioms", json!({ "max_arity": max_arity }));
            axiom_checks(&mut r, &rep);
            r.result(json!({ "checked": rep.checked, "failures": rep.failures.len() }));
            Ok(r)
        }
    }
}

fn formality(cmd: &FormalityCommand) -> Outcome {
    let FormalityCommand::Report { n } = *cmd;
    let rep = formality_report(n)?;
    let mut r = Report::new("formality report", json!({ "n": n }));
    r.row("model dims", coeffs(&rep.model.dims)).row("bv dims", coeffs(&rep.bv_dims));
    r.row("ger dims", coeffs(&rep.ger_dims));
    if let Some(q) = &rep.pushout {
        r.row("fld/(1+t)^n", coeffs(q));
    }
    r.check("zero differential", rep.model.zero_differential(), "");
    r.check("identity on graded pieces", rep.model.identity_on_graded_pieces, "");
    r.check("bv = fld", rep.bv_dims == rep.fld, "");
    r.check("ger = ld", rep.ger_dims == rep.ld, "");
    if rep.pushout.is_some() {
        r.check("pushout = ld", rep.pushout.as_ref() == Some(&rep.ld), "");
    }
    r.result(&rep);
    Ok(r)
}

fn verify_all(max_n: usize, seed: u64) -> Outcome {
    if max_n < 4 {
        return Err(Failure::Usage("--max-n must be at least 4".into()));
    }
    let cfg = VerifyConfig { max_n, seed };
    let mut r = Report::new("verify-all", json!({ "max_n": max_n, "seed": seed }));
    let mut verdicts = Vec::new();
    for (v, elapsed) in run_all(&cfg) {
        eprintln!("criterion {}: {:.2}s", v.id, elapsed.as_secs_f64());
        r.check(format!("{}. {}", v.id, v.name), v.pass, v.detail.clone());
        verdicts.push(v);
    }
    r.result(&verdicts);
    Ok(r)
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Strata { n, codim, list } => strata(*n, *codim, *list),
        Command::Flc { command } => flc(command),
        Command::Betti { space, n, primes } => betti(*space, *n, primes),
        Command::Purity { n } => purity(*n),
        Command::Acyclic { space, points, n } => acyclic(*space, *points, *n),
        Command::Bv { command } => bv(command),
        Command::Formality { command } => formality(command),
        Command::VerifyAll { max_n, seed } => verify_all(*max_n, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let start = Instant::now();
    let outcome = dispatch(&cli.command);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    let report = match outcome {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("failed: {}: {}", c.name, c.detail);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
