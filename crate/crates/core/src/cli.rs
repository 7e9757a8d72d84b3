//! Command-line front end: spec files in, text or JSON reports out.

use crate::report::{build_report, Outcome, Report, RunOptions, Scope};
use crate::specfile;
use crate::zoo;
use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "tricat", version, about = "Highest weight theory of graded algebras with a triangular decomposition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// depth bound for resolutions and Ext
    #[arg(long, global = true, default_value_t = 6)]
    pub max_step: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// treat informational negatives (not BGG, not self-injective, ...) as failures
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebra axioms, triangular decomposition, ambidexterity
    Verify { spec: PathBuf },
    /// Simple modules and the head bijection
    Simples { spec: PathBuf },
    /// C_L, C_Δ, D_Δ and their relation
    Matrices { spec: PathBuf },
    /// BGG property and Brauer reciprocity
    Bgg { spec: PathBuf },
    /// Self-injectivity, Nakayama/h/† permutations and tilting objects
    Tilting { spec: PathBuf },
    /// Ext parity, Koszulity and Tate characters
    Kl { spec: PathBuf },
    /// Blocks, families and the block center check
    Blocks { spec: PathBuf },
    /// Everything
    Report { spec: PathBuf },
    /// Build a catalog algebra and print or write its spec file
    Zoo {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// What a run printed and how it ended.
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn scope_of(c: &Command) -> Option<(Scope, &Path)> {
    Some(match c {
        Command::Verify { spec } => (Scope::Verify, spec),
        Command::Simples { spec } => (Scope::Simples, spec),
        Command::Matrices { spec } => (Scope::Matrices, spec),
        Command::Bgg { spec } => (Scope::Bgg, spec),
        Command::Tilting { spec } => (Scope::Tilting, spec),
        Command::Kl { spec } => (Scope::Kl, spec),
        Command::Blocks { spec } => (Scope::Blocks, spec),
        Command::Report { spec } => (Scope::Full, spec),
        Command::Zoo { .. } => return None,
    })
}

fn input_error(msg: String) -> RunOutput {
    RunOutput { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
}

pub fn exit_code(r: &Report, strict: bool) -> i32 {
    if !r.internal_errors().is_empty() {
        EXIT_INTERNAL
    } else if !r.violations().is_empty() || (strict && !r.informational_negatives().is_empty()) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn cache_key(text: &str, cli: &Cli, scope: Scope) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    h.update(format!("|{:?}|{}|{}|{:?}|{}", scope, cli.seed, cli.max_step, cli.format, cli.strict).as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn run(cli: &Cli) -> RunOutput {
    let Some((scope, path)) = scope_of(&cli.command) else {
        let Command::Zoo { name, params, emit } = &cli.command else { unreachable!() };
        return run_zoo(name, params, emit.as_deref());
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return input_error(format!("{}: {e}", path.display())),
    };
    let cache = cli.cache_dir.as_ref().map(|d| d.join(format!("{}.json", cache_key(&text, cli, scope))));
    if let Some(c) = &cache {
        if let Ok(bytes) = std::fs::read_to_string(c) {
            if let Ok((code, stdout)) = serde_json::from_str::<(i32, String)>(&bytes) {
                return RunOutput { stdout, stderr: String::new(), code };
            }
        }
    }
    let bundle = match specfile::load(&text) {
        Ok(b) => b,
        Err(e) => return input_error(format!("{}: {e}", path.display())),
    };
    let opts = RunOptions { seed: cli.seed, max_step: cli.max_step, jobs: cli.jobs.max(1) };
    let report = build_report(&bundle, scope, &opts);
    let code = if scope == Scope::Verify {
        if report.verify.passed() { EXIT_OK } else { EXIT_VIOLATION }
    } else {
        exit_code(&report, cli.strict)
    };
    let stdout = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => render_text(&report, scope),
    };
    if let Some(c) = &cache {
        if let Some(dir) = c.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let _ = std::fs::write(c, serde_json::to_string(&(code, &stdout)).expect("cache entry serializes"));
    }
    RunOutput { stdout, stderr: String::new(), code }
}

fn run_zoo(name: &str, params: &[String], emit: Option<&Path>) -> RunOutput {
    let b = match zoo::by_name(name, params) {
        Ok(b) => b,
        Err(e) => return input_error(e.to_string()),
    };
    let json = specfile::emit(&b) + "\n";
    match emit {
        None => RunOutput { stdout: json, stderr: String::new(), code: EXIT_OK },
        Some(p) => match std::fs::write(p, json) {
            Ok(()) => RunOutput { stdout: format!("wrote {} (dim {})\n", p.display(), b.algebra.dim()), stderr: String::new(), code: EXIT_OK },
            Err(e) => input_error(format!("{}: {e}", p.display())),
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn checks(out: &mut String, items: &[crate::triangular::CheckItem]) {
    for c in items {
        let _ = writeln!(out, "  [{}] {}{}", if c.passed { "ok" } else { "FAIL" }, c.name, if c.detail.is_empty() { String::new() } else { format!("  ({})", c.detail) });
    }
}

fn section<T>(out: &mut String, title: &str, o: &Option<Outcome<T>>, body: impl FnOnce(&mut String, &T)) {
    match o {
        None => {}
        Some(Outcome::Ok(t)) => {
            let _ = writeln!(out, "\n{title}");
            body(out, t);
        }
        Some(Outcome::Error { message, .. }) => {
            let _ = writeln!(out, "\n{title}\n  error: {message}");
        }
    }
}

fn matrix(out: &mut String, name: &str, m: &crate::LaurentMatrix, labels: &[String]) {
    let _ = writeln!(out, "  {name}:");
    let rows: Vec<Vec<String>> = m.rows.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    for (l, r) in rows.iter().enumerate() {
        let label = labels.get(l).cloned().unwrap_or_default();
        let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "    {label:>6} | {}", cells.join("  "));
    }
}

pub fn render_text(r: &Report, scope: Scope) -> String {
    let mut out = String::new();
    let h = &r.header;
    let _ = writeln!(out, "{} over {} (dim {}), seed {}", if h.name.is_empty() { "algebra" } else { &h.name }, h.field, h.dim, h.seed);
    let v = &r.verify;
    let _ = writeln!(out, "  algebra axioms: {}", if v.algebra.passed() { "pass" } else { "FAIL" });
    match &v.triangular {
        None => {
            let _ = writeln!(out, "  triangular decomposition: none given");
        }
        Some(t) => {
            let _ = writeln!(out, "  triangular decomposition: {} (Irr(T) {})", if t.passed() { "pass" } else { "FAIL" }, t.irr_completeness);
            if !t.passed() {
                checks(&mut out, &t.items);
            }
        }
    }
    if let Some(a) = v.ambidextrous {
        let _ = writeln!(out, "  ambidextrous: {a}");
        if let Some(w) = &v.ambidexterity_witness {
            let terms: Vec<String> = w.iter().map(|(i, j, k, c)| format!("{c}·(A+[{i}] ⊗ T[{j}] ⊗ A-[{k}])")).collect();
            let _ = writeln!(out, "  kernel witness: {}", terms.join(" + "));
        }
    }
    if let Some(p) = v.pbw_round_trip {
        let _ = writeln!(out, "  PBW round trip: {}", yes_no(p));
    }
    let labels: Vec<String> = match &r.simples {
        Some(Outcome::Ok(s)) => s.simples.iter().map(|x| x.label.clone()).collect(),
        _ => Vec::new(),
    };
    section(&mut out, "Simples", &r.simples, |out, s| {
        for x in &s.simples {
            let _ = writeln!(out, "  L({}): dim {}, graded dim {}{}", x.label, x.dim, x.graded_dim, if x.rigid { ", rigid" } else { "" });
        }
        checks(out, &s.bijection);
    });
    section(&mut out, "Decomposition matrices", &r.matrices, |out, m| {
        matrix(out, "C_L", &m.matrices.c_l, &labels);
        matrix(out, "C_Δ", &m.matrices.c_delta, &labels);
        matrix(out, "D_Δ", &m.matrices.d_delta, &labels);
        let _ = writeln!(out, "  C_Δ = D_Δ C_L: {}", yes_no(m.relation.product_holds));
        let _ = writeln!(out, "  D_Δ = C_Δ C_L^-1 over Q(t): {}", yes_no(m.relation.inverse_recovers_d));
        let _ = writeln!(out, "  D_Δ(1) matches ungraded recomputation: {}", yes_no(m.ungraded_agrees));
    });
    section(&mut out, "Standard and costandard modules", &r.properties, |out, p| {
        checks(out, &p.highest_weights);
        checks(out, &p.costandard_socles);
        checks(out, &p.endomorphisms);
        checks(out, &p.standard_costandard_ext);
    });
    if let Some(b) = &r.bgg {
        let _ = writeln!(out, "\nBGG");
        let _ = writeln!(out, "  characters of Δ̄ and ∇̄ agree: {}", yes_no(b.character_route));
        if let Some(x) = b.bimodule_route {
            let _ = writeln!(out, "  B- and B+ dual as T-bimodules: {}", yes_no(x));
        }
        for f in &b.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    section(&mut out, "Brauer reciprocity", &r.brauer, |out, b| {
        let _ = writeln!(out, "  holds for all pairs: {} ({})", yes_no(b.holds()), b.method);
        for p in b.pairs.iter().filter(|p| !p.filtration.is_zero() || !p.holds) {
            let (a, m) = (labels.get(p.lambda).cloned().unwrap_or_default(), labels.get(p.mu).cloned().unwrap_or_default());
            let _ = writeln!(out, "  (P({a}):Δ({m})) = {}", p.filtration);
        }
    });
    section(&mut out, "Semisimplicity", &r.semisimplicity, |out, s| {
        let _ = writeln!(out, "  semisimple: {} (Rad A = 0: {})", yes_no(s.semisimple), yes_no(s.radical_zero));
    });
    section(&mut out, "Blocks", &r.blocks, |out, b| {
        let _ = writeln!(out, "  families: {:?}", b.families.families);
        let _ = writeln!(out, "  standard families: {:?}", b.families.standard_families);
        for f in &b.factorization {
            match &f.product {
                Some(p) => {
                    let _ = writeln!(
                        out,
                        "  block {:?}: dim Z c = {}, End(Δ̄) End(∇̄) = {} (equal: {}), (dim λ)^2 = {} (equal: {})",
                        f.labels,
                        f.center,
                        p,
                        yes_no(f.factorizes),
                        f.simple_dim * f.simple_dim,
                        yes_no(f.dim_squared)
                    );
                }
                None => {
                    let _ = writeln!(out, "  block {:?}: dim Z c = {}", f.labels, f.center);
                }
            }
        }
    });
    section(&mut out, "Regular socles", &r.socles, |out, s| {
        let _ = writeln!(out, "  Soc(_A A) degrees {:?}", s.left_degrees);
        let _ = writeln!(out, "  Soc(A_A) degrees {:?}", s.right_degrees);
    });
    section(&mut out, "Tilting", &r.tilting, |out, t| {
        let _ = writeln!(out, "  {}", t.summary);
        for f in &t.self_injectivity.failures {
            let _ = writeln!(out, "  {f}");
        }
        match &t.frobenius {
            Some(f) => {
                let _ = writeln!(out, "  Frobenius certificate in degree {} (symmetric: {})", f.degree, yes_no(f.symmetric));
            }
            None => {
                let _ = writeln!(out, "  no Frobenius certificate found");
            }
        }
        if let Some(Outcome::Ok(d)) = &t.data {
            let fmt = |v: &[crate::hwcat::LabelShift]| -> String {
                v.iter()
                    .enumerate()
                    .map(|(l, x)| format!("{}↦{}[{}]", labels.get(l).cloned().unwrap_or(l.to_string()), labels.get(x.label).cloned().unwrap_or(x.label.to_string()), x.shift))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let _ = writeln!(out, "  ν: {}", fmt(&d.nu));
            let _ = writeln!(out, "  h: {}", fmt(&d.h));
            let _ = writeln!(out, "  †: {}", fmt(&d.dagger));
            checks(out, &d.checks);
        }
    });
    section(&mut out, "Duality", &r.duality, |out, d| checks(out, &d.checks));
    section(&mut out, "KL", &r.kl, |out, k| {
        let _ = writeln!(out, "  {}", k.summary);
        for (name, s) in [("A-", &k.minus), ("A+", &k.plus)] {
            let _ = writeln!(out, "  {name}: Koszul to depth {}: {}", s.koszul.koszul_to_depth, yes_no(s.koszul.holds));
            if let Some(t) = &s.tate {
                let _ = writeln!(out, "  {name}: Tate character matches Betti numbers to depth {}: {}", t.depth, yes_no(t.agrees));
            }
            if let Some(c) = &s.degrees_criterion {
                let _ = writeln!(out, "  {name}: degree criterion: {c:?}");
            }
        }
    });
    if scope != Scope::Verify {
        let viol = r.violations();
        let info = r.informational_negatives();
        if !viol.is_empty() {
            let _ = writeln!(out, "\nviolations: {}", viol.join("; "));
        }
        if !info.is_empty() {
            let _ = writeln!(out, "\nnotes: {}", info.join("; "));
        }
    }
    out
}
