//! `hocart`: validate presentations, compute cohomology, and run the
//! deformation calculus from the command line.
//!
//! [`run`] does all the work and returns the report, so tests drive the
//! CLI without spawning processes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde::Serialize;

use hocart_core::cochain::{Theory, Truncation, Window};
use hocart_core::cohomology::{AssembledComplex, CohomologySummary};
use hocart_core::deformation::{seeded_rng, ClassStatus, DeformationEngine};
use hocart_core::harrison::staircase_reduce;
use hocart_core::io::{
    describe_failures, example_document, map_entries, AnyHopf, CochainDocument, ExampleOptions, FieldSpec, MapEntry,
    PresentationDocument, DMAX_ENV, EXAMPLES,
};
use hocart_core::{AlgebraError, AxiomCheck, DgHopf, Field, Tridegree};

#[derive(Parser, Debug)]
#[command(name = "hocart", version, about = "Exact Hopf, Hochschild, Cartier and Harrison cohomology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Also write the machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Override the document's field: `rational` or `prime:P`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Internal-degree cap for infinite examples (default from HOCART_DMAX).
    #[arg(long, global = true)]
    pub dmax: Option<u32>,
    /// Prime for the fp-trunc example.
    #[arg(long, global = true)]
    pub prime: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every structure axiom.
    Validate { file: String },
    /// Cohomology of one of the four complexes in a window.
    Cohomology {
        file: String,
        #[arg(long)]
        theory: String,
        /// Truncation parameter, at least 3, or `inf`.
        #[arg(long)]
        q: String,
        /// Total degrees to compute; repeat the flag for several.
        #[arg(long, required = true)]
        degree: Vec<i64>,
        #[arg(long)]
        mmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Print representatives in the table as well.
        #[arg(long)]
        reps: bool,
    },
    /// Build a random deformation order by order, certifying each obstruction.
    Deform {
        file: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Trivialize a random deformation and list the gauge.
    Rigidity {
        file: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Staircase-reduce a total cocycle into bidegree (n-1, 1).
    Reduce {
        file: String,
        #[arg(long, value_name = "COCYCLE_FILE")]
        cocycle: PathBuf,
        #[arg(long, default_value = "harrison")]
        theory: String,
        #[arg(long, default_value = "3")]
        q: String,
    },
    /// Emit a built-in presentation document.
    Example { name: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    #[default]
    Ok,
    /// An axiom, solve or trivialization failed.
    Failed,
    /// The input could not be used.
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRecord {
    #[serde(flatten)]
    pub summary: CohomologySummary,
    pub representatives: Vec<CochainDocument>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionRecord {
    pub order: usize,
    pub residual_terms: usize,
    pub cocycle: bool,
    /// `exact` or `nonzero`.
    pub class: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformationRecord {
    pub seed: u64,
    pub order: usize,
    pub h2_dim: usize,
    pub h3_dim: usize,
    pub valid: bool,
    pub obstructions: Vec<ObstructionRecord>,
    pub coefficients: Vec<CochainDocument>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityRecord {
    pub seed: u64,
    pub order: usize,
    pub h2_dim: usize,
    /// `trivialized` or `blocked`.
    pub outcome: String,
    /// Coefficients `φ_1..φ_N` of the gauge, each a (0,1,1) cochain.
    pub gauge: Vec<Vec<MapEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocked_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocking_class: Option<CochainDocument>,
    /// Rank certificate for a blocked order: image rank vs augmented rank.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<(usize, usize)>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionRecord {
    pub steps: usize,
    pub concentrated: bool,
    pub reduced: CochainDocument,
    pub witness: CochainDocument,
}

/// The machine-readable result of one command.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<Window>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub validation: Vec<AxiomCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cohomology: Vec<DegreeRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<RigidityRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<PresentationDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub struct Outcome {
    pub report: RunReport,
    pub human: String,
    pub json_path: Option<PathBuf>,
    pub exit_code: u8,
}

impl Outcome {
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Echo of the arguments, without output-only flags.
fn echo(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--json" {
            it.next();
        } else if a == "--timing" || a.starts_with("--json=") {
        } else {
            out.push(a.clone());
        }
    }
    out
}

/// Parses and runs one command line (`argv[0]` is the program name).
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version arrive as errors that belong on stdout.
            if !e.use_stderr() {
                let report = RunReport { command: echo(argv), status: Status::Ok, ..Default::default() };
                return Outcome { report, human: e.to_string(), json_path: None, exit_code: 0 };
            }
            let report = RunReport { command: echo(argv), status: Status::Error, error: Some(e.to_string()), ..Default::default() };
            return Outcome { report, human: String::new(), json_path: None, exit_code: 2 };
        }
    };
    let start = Instant::now();
    let mut report = RunReport { command: echo(argv), ..Default::default() };
    let mut human = String::new();
    let result = execute(&cli, &mut report, &mut human);
    if let Err(e) = result {
        report.status = Status::Error;
        report.error = Some(format!("{e:#}"));
    }
    if cli.timing {
        let ms = start.elapsed().as_millis() as u64;
        report.timing_ms = Some(ms);
        let _ = writeln!(human, "time: {ms} ms");
    }
    let exit_code = match report.status {
        Status::Ok => 0,
        Status::Failed => 1,
        Status::Error => 2,
    };
    Outcome { report, human, json_path: cli.json.clone(), exit_code }
}

fn dmax(cli: &Cli) -> anyhow::Result<Option<u32>> {
    if let Some(d) = cli.dmax {
        return Ok(Some(d));
    }
    match std::env::var(DMAX_ENV) {
        Ok(v) => v.trim().parse().map(Some).with_context(|| format!("{DMAX_ENV}={v:?} is not a degree")),
        Err(_) => Ok(None),
    }
}

/// A file path, or the name of a built-in example.
fn load_document(cli: &Cli, file: &str) -> anyhow::Result<PresentationDocument> {
    let path = Path::new(file);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {file}"))?;
        return Ok(PresentationDocument::from_json(&text)?);
    }
    if EXAMPLES.contains(&file) {
        return Ok(example_document(file, ExampleOptions { dmax: dmax(cli)?, prime: cli.prime })?);
    }
    bail!("{file}: no such file or built-in example (known: {})", EXAMPLES.join(", "))
}

fn field_override(cli: &Cli) -> anyhow::Result<Option<FieldSpec>> {
    Ok(cli.field.as_deref().map(FieldSpec::parse).transpose()?)
}

macro_rules! with_hopf {
    ($any:expr, $h:ident => $body:expr) => {
        match $any {
            AnyHopf::Rational($h) => $body,
            AnyHopf::Prime($h) => $body,
        }
    };
}

fn execute(cli: &Cli, report: &mut RunReport, out: &mut String) -> anyhow::Result<()> {
    if let Command::Example { name } = &cli.command {
        let doc = example_document(name, ExampleOptions { dmax: dmax(cli)?, prime: cli.prime })?;
        out.push_str(&doc.to_json());
        out.push('\n');
        report.input = Some(name.clone());
        report.field = Some(doc.field.to_string());
        report.document = Some(doc);
        return Ok(());
    }
    let file = match &cli.command {
        Command::Validate { file }
        | Command::Cohomology { file, .. }
        | Command::Deform { file, .. }
        | Command::Rigidity { file, .. }
        | Command::Reduce { file, .. } => file,
        Command::Example { .. } => unreachable!(),
    };
    let doc = load_document(cli, file)?;
    let field = field_override(cli)?.unwrap_or(doc.field);
    report.input = Some(doc.name.clone().unwrap_or_else(|| file.clone()));
    report.field = Some(field.to_string());
    let any = doc.build_any(Some(field))?;
    with_hopf!(any, h => execute_on(cli, &h, report, out))
}

fn execute_on<F: Field>(cli: &Cli, h: &DgHopf<F>, report: &mut RunReport, out: &mut String) -> anyhow::Result<()> {
    let axioms = h.validate();
    let _ = writeln!(out, "{} (dim {}, field {})", report.input.as_deref().unwrap_or("?"), h.dim(), h.field().descriptor());
    if let Some(cap) = h.truncation() {
        let _ = writeln!(out, "quotient by degrees above {cap}; identities checked where no higher degree arises");
    }
    if let Command::Validate { .. } = cli.command {
        let mut checks = axioms.checks.clone();
        if axioms.passed() {
            checks.push(h.check_antipode_antimultiplicative());
            checks.push(h.check_antipode_commutes_with_d());
        }
        let _ = writeln!(out, "{:<28} {:>6} {:>9}  witness", "check", "result", "residual");
        for c in &checks {
            let _ = writeln!(
                out,
                "{:<28} {:>6} {:>9}  {}",
                c.name,
                if c.passed { "ok" } else { "FAIL" },
                c.residual_terms,
                c.witness.as_deref().unwrap_or("")
            );
        }
        if checks.iter().any(|c| !c.passed) {
            report.status = Status::Failed;
        }
        report.validation = checks;
        return Ok(());
    }
    if !axioms.passed() {
        report.validation = axioms.checks.clone();
        report.status = Status::Failed;
        report.error = Some(describe_failures(&axioms));
        return Ok(());
    }
    match &cli.command {
        Command::Cohomology { theory, q, degree, mmax, nmax, reps, .. } => {
            let window = Window {
                theory: Theory::parse(theory)?,
                q: Truncation::parse(q)?,
                restricted: true,
                m_max: *mmax,
                n_max: *nmax,
            };
            cohomology(h, window, degree, *reps, report, out)
        }
        Command::Deform { order, seed, .. } => deform(h, *order, *seed, report, out),
        Command::Rigidity { order, seed, .. } => rigidity(h, *order, *seed, report, out),
        Command::Reduce { cocycle, theory, q, .. } => {
            let window = Window {
                theory: Theory::parse(theory)?,
                q: Truncation::parse(q)?,
                restricted: true,
                m_max: None,
                n_max: None,
            };
            reduce(h, window, cocycle, report, out)
        }
        Command::Validate { .. } | Command::Example { .. } => unreachable!(),
    }
}

fn cochain_line<F: Field>(h: &DgHopf<F>, doc: &CochainDocument) -> String {
    let _ = h;
    let mut s = String::new();
    for part in &doc.parts {
        let [p, m, n] = part.tridegree;
        let _ = write!(s, " ({p},{m},{n}):");
        for e in &part.entries {
            let _ = write!(s, " {}·[{} ↦ {}]", e.coeff, e.source.join("⊗"), e.target.join("⊗"));
        }
    }
    s
}

fn cohomology<F: Field>(
    h: &DgHopf<F>,
    window: Window,
    degrees: &[i64],
    show_reps: bool,
    report: &mut RunReport,
    out: &mut String,
) -> anyhow::Result<()> {
    report.window = Some(window);
    let mut cx = AssembledComplex::new(h, window)?;
    let _ = writeln!(out, "theory {} q {} (restricted)", window.theory, window.q);
    let _ = writeln!(out, "{:>3} {:>5} {:>8} {:>7} {:>6}  components", "r", "dim", "cochains", "kernel", "image");
    for &r in degrees {
        let coh = cx.cohomology(r)?;
        let summary = cx.summary(r)?;
        let representatives: Vec<_> = coh.representatives.iter().map(|x| CochainDocument::from_cochain(h, x)).collect();
        let comps = summary.components.iter().map(Tridegree::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(
            out,
            "{:>3} {:>5} {:>8} {:>7} {:>6}  {}{}",
            r,
            coh.dim,
            coh.cochain_dim,
            coh.kernel_dim,
            coh.image_rank,
            comps,
            if coh.inconclusive { "  (clipped: bound only)" } else { "" }
        );
        if show_reps {
            for doc in &representatives {
                let _ = writeln!(out, "    rep{}", cochain_line(h, doc));
            }
        }
        report.cohomology.push(DegreeRecord { summary, representatives });
    }
    Ok(())
}

fn deform<F: Field>(h: &DgHopf<F>, order: usize, seed: u64, report: &mut RunReport, out: &mut String) -> anyhow::Result<()> {
    if order == 0 {
        bail!("--order must be at least 1");
    }
    let mut engine = DeformationEngine::new(h)?;
    report.window = Some(Window::truncated(Theory::Hopf, 3));
    let h2 = engine.complex().cohomology(2)?.dim;
    let h3 = engine.complex().cohomology(3)?.dim;
    let mut rng = seeded_rng(seed);
    let defm = match engine.random_deformation(order, &mut rng) {
        Ok(d) => d,
        Err(AlgebraError::NoSolution(msg)) => {
            report.status = Status::Failed;
            report.error = Some(msg);
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let mut obstructions = Vec::new();
    let _ = writeln!(out, "H2 = {h2}, H3 = {h3} (Hopf, q = 3)");
    let _ = writeln!(out, "{:>5} {:>9} {:>8}  class", "order", "residual", "cocycle");
    for k in 2..=order {
        let class = engine.classify(&defm.truncated(k - 1), k)?;
        let terms = class.residual.parts.values().map(|m| m.nnz()).sum();
        let name = match class.status {
            ClassStatus::NonzeroClass => "nonzero",
            _ => "exact",
        };
        let _ = writeln!(out, "{k:>5} {terms:>9} {:>8}  {name}", "yes");
        obstructions.push(ObstructionRecord { order: k, residual_terms: terms, cocycle: true, class: name.into() });
    }
    let valid = engine.is_valid(&defm)?;
    let coefficients: Vec<_> = (1..=order).map(|k| CochainDocument::from_cochain(h, &defm.coefficient(k).unwrap())).collect();
    for (k, c) in coefficients.iter().enumerate() {
        let _ = writeln!(out, "t^{}:{}", k + 1, cochain_line(h, c));
    }
    let _ = writeln!(out, "valid to order {order}: {}", if valid { "yes" } else { "NO" });
    if !valid {
        report.status = Status::Failed;
    }
    report.deformation = Some(DeformationRecord { seed, order, h2_dim: h2, h3_dim: h3, valid, obstructions, coefficients });
    Ok(())
}

fn rigidity<F: Field>(h: &DgHopf<F>, order: usize, seed: u64, report: &mut RunReport, out: &mut String) -> anyhow::Result<()> {
    if order == 0 {
        bail!("--order must be at least 1");
    }
    let mut engine = DeformationEngine::new(h)?;
    report.window = Some(Window::truncated(Theory::Hopf, 3));
    let h2 = engine.complex().cohomology(2)?.dim;
    let _ = writeln!(out, "H2 = {h2} (Hopf, q = 3)");
    let mut rng = seeded_rng(seed);
    let defm = engine.random_deformation(order, &mut rng).map_err(|e| anyhow!("generating a deformation: {e}"))?;
    let mut rec = RigidityRecord {
        seed,
        order,
        h2_dim: h2,
        outcome: String::new(),
        gauge: Vec::new(),
        blocked_order: None,
        blocking_class: None,
        ranks: None,
        verified: false,
    };
    match engine.trivialize(&defm)? {
        Ok(g) => {
            let moved = engine.apply_gauge(&defm, &g)?;
            rec.verified = moved.is_trivial();
            rec.outcome = "trivialized".into();
            rec.gauge = g.coefficients.iter().map(|m| map_entries(h, m)).collect();
            let _ = writeln!(out, "trivialized (verified: {})", if rec.verified { "yes" } else { "NO" });
            for (i, entries) in rec.gauge.iter().enumerate() {
                let body: Vec<_> =
                    entries.iter().map(|e| format!("{}·[{} ↦ {}]", e.coeff, e.source.join("⊗"), e.target.join("⊗"))).collect();
                let _ = writeln!(out, "phi_{}: {}", i + 1, if body.is_empty() { "0".into() } else { body.join(" ") });
            }
            if !rec.verified {
                report.status = Status::Failed;
            }
        }
        Err(b) => {
            rec.outcome = "blocked".into();
            rec.blocked_order = Some(b.order);
            rec.ranks = Some((b.image_rank, b.augmented_rank));
            let doc = CochainDocument::from_cochain(h, &b.class);
            let _ = writeln!(
                out,
                "not trivialized: order {} coefficient is not a coboundary (rank {} < {})",
                b.order, b.image_rank, b.augmented_rank
            );
            let _ = writeln!(out, "class:{}", cochain_line(h, &doc));
            rec.blocking_class = Some(doc);
            report.status = Status::Failed;
        }
    }
    report.rigidity = Some(rec);
    Ok(())
}

fn reduce<F: Field>(h: &DgHopf<F>, window: Window, path: &Path, report: &mut RunReport, out: &mut String) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let x = CochainDocument::from_json(&text)?.to_cochain(h)?;
    report.window = Some(window);
    let mut cx = AssembledComplex::new(h, window)?;
    let st = match staircase_reduce(&mut cx, &x) {
        Ok(s) => s,
        Err(e @ (AlgebraError::NoSolution(_) | AlgebraError::Axiom(_))) => {
            report.status = Status::Failed;
            report.error = Some(e.to_string());
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let n = x.degree;
    let concentrated = st.reduced.parts.keys().all(|t| *t == Tridegree::new(n - 1, 1, 1));
    let reduced = CochainDocument::from_cochain(h, &st.reduced);
    let witness = CochainDocument::from_cochain(h, &st.witness);
    let _ = writeln!(out, "{} staircase steps; concentrated in ({},1,1): {}", st.steps, n - 1, if concentrated { "yes" } else { "no" });
    let _ = writeln!(out, "reduced:{}", cochain_line(h, &reduced));
    let _ = writeln!(out, "witness:{}", cochain_line(h, &witness));
    if !concentrated {
        report.status = Status::Failed;
    }
    report.reduction = Some(ReductionRecord { steps: st.steps, concentrated, reduced, witness });
    Ok(())
}
