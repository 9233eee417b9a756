//! Command-line front end: identity kernels, partition tables, special
//! identities and envelope analysis.
//!
//! Results go to standard output, progress to standard error. Exit codes:
//! 0 success, 2 usage or unsupported input, 3 truncated result.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadsys::envelope::{analyze, family, SystemSpec};
use quadsys::free_algebra::{Multidegree, OpKind, QuadPolynomial, TypeTable};
use quadsys::identities::{
    all_identities, confirm_special, extract_module_generators, minimize_generator_set, nonlinear_special_candidates,
    part1_table, partition_reports, sorted_candidates, Linearization, PartitionReport,
};
use quadsys::linalg::{Modulus, DEFAULT_PRIME};
use quadsys::scalar::{is_prime, parse_rational, rat};
use quadsys::symmetric_group::{irreducible_dimension, Partition};

/// Largest irreducible dimension computed without `--stretch`.
const STRETCH_LIMIT: usize = 350;

#[derive(Parser)]
#[command(name = "quadsys", version, about = "Identities of the tetrad and anti-tetrad, and envelopes of quadruple systems")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Working prime; defaults to QUADSYS_PRIME or 101.
    #[arg(long, global = true)]
    prime: Option<u32>,
    /// Worker threads for per-partition parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Tetrad,
    Anti,
}

impl From<Op> for OpKind {
    fn from(op: Op) -> Self {
        match op {
            Op::Tetrad => OpKind::Tetrad,
            Op::Anti => OpKind::AntiTetrad,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Kernel of the multilinear expansion map and its module generators.
    Identities {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        degree: usize,
    },
    /// Per-partition ranks of the symmetry, lifting and expansion matrices.
    Table {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        degree: usize,
        /// Restrict to one partition, e.g. `8,2`.
        #[arg(long)]
        partition: Option<String>,
        /// Include partitions whose irreducible dimension exceeds 350.
        #[arg(long)]
        stretch: bool,
    },
    /// Nonlinear identities from multihomogeneous expansion matrices.
    Special {
        #[arg(long, value_enum)]
        op: Op,
        /// Multidegree such as `a6,b,c,d,e`.
        #[arg(long)]
        multidegree: Option<String>,
        /// With `--minimize`: run every multidegree of this degree (7).
        #[arg(long)]
        degree: Option<usize>,
        /// Reduce the collected generators to an irredundant set.
        #[arg(long)]
        minimize: bool,
        /// LLL parameters applied in turn.
        #[arg(long, value_delimiter = ',', default_value = "3/4")]
        deltas: Vec<String>,
        /// Rows alternate over simple variables; by default on when there
        /// are at least two simple variables.
        #[arg(long)]
        alternate: Option<bool>,
        /// Number of shortest candidates to print.
        #[arg(long, default_value_t = 5)]
        show: usize,
    },
    /// Universal associative envelope of a quadruple system.
    Envelope {
        /// System name such as D11, C111, B2, A2, D-21, B-3.
        #[arg(long)]
        system: String,
        /// Stop completion above this degree; a truncated result is accepted.
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Highest degree listed in the graded dimensions.
        #[arg(long)]
        graded_up_to: Option<usize>,
        /// Allow adjoining a square root to split the center.
        #[arg(long)]
        extend: bool,
    },
}

/// Safety bound applied when no `--degree-bound` is given.
const DEFAULT_DEGREE_BOUND: usize = 16;

enum Failure {
    Usage(String),
    Truncated(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn modulus(flag: Option<u32>) -> Result<Modulus, Failure> {
    let p = match flag {
        Some(p) => p,
        None => match std::env::var("QUADSYS_PRIME") {
            Ok(s) => s.trim().parse().map_err(|_| usage(format!("QUADSYS_PRIME={s} is not an integer")))?,
            Err(_) => DEFAULT_PRIME,
        },
    };
    if !is_prime(p) || p >= 1 << 31 {
        return Err(usage(format!("{p} is not a prime below 2^31")));
    }
    Ok(Modulus::new(p))
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => text(),
    };
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn identity_json(p: &QuadPolynomial, types: &TypeTable) -> Value {
    json!({ "terms": p.len(), "identity": p.display(types), "data": p.to_json() })
}

fn cmd_identities(c: &Common, op: OpKind, degree: usize) -> Outcome {
    if degree != 4 && degree != 7 {
        return Err(usage(format!("degree must be 4 or 7, got {degree}")));
    }
    let m = modulus(c.prime)?;
    let types = TypeTable::new(degree).map_err(usage)?;
    let k = all_identities(degree, op, m).map_err(usage)?;
    eprintln!("expansion matrix: rank {}, nullity {}", k.rank, k.nullity);
    let cands = sorted_candidates(k.identities.clone());
    let ex = extract_module_generators(&cands, degree, op, m);
    let value = json!({
        "op": op.name(),
        "degree": degree,
        "prime": m.p(),
        "rank": k.rank,
        "nullity": k.nullity,
        "kernel": if degree == 4 { k.identities.iter().map(|p| identity_json(p, &types)).collect::<Vec<_>>() } else { Vec::new() },
        "recorded": ex.recorded.iter().map(|p| identity_json(p, &types)).collect::<Vec<_>>(),
        "recorded_dims": ex.dimensions,
        "generators": ex.generators.iter().map(|p| identity_json(p, &types)).collect::<Vec<_>>(),
        "module_dim": ex.dimension,
        "target": ex.target,
    });
    emit(c.format, &value, || {
        let mut s = format!("{} degree {degree}: rank {}, nullity {}\n", op.name(), k.rank, k.nullity);
        if degree == 4 {
            for p in &k.identities {
                s.push_str(&format!("  kernel: {}\n", p.display(&types)));
            }
        }
        for (p, d) in ex.recorded.iter().zip(&ex.dimensions) {
            s.push_str(&format!("  recorded ({} terms, module dim {d}): {}\n", p.len(), p.display(&types)));
        }
        s.push_str(&format!("{} generators, module dim {} of {}\n", ex.generators.len(), ex.dimension, ex.target));
        for p in &ex.generators {
            s.push_str(&format!("  generator ({} terms): {}\n", p.len(), p.display(&types)));
        }
        s
    });
    Ok(())
}

fn row_text(r: &PartitionReport) -> String {
    let lift = r.symmlift.map_or_else(|| "-".to_string(), |x| x.to_string());
    format!(
        "{:<18} {:>5} {:>7}x{:<6} {:>6} {:>6} {:>6}x{:<5} {:>6} {:>6} {:>4}\n",
        r.partition, r.dim, r.sym_rows, r.sym_cols, r.symm, lift, r.exp_rows, r.exp_cols, r.rank, r.null, r.new
    )
}

fn cmd_table(c: &Common, op: OpKind, degree: usize, partition: Option<&str>, stretch: bool) -> Outcome {
    if degree != 7 && degree != 10 {
        return Err(usage(format!("degree must be 7 or 10, got {degree}")));
    }
    let m = modulus(c.prime)?;
    let only: Option<Partition> = match partition {
        Some(s) => {
            let p: Partition = s.parse().map_err(|e| usage(format!("bad partition {s}: {e}")))?;
            if p.size() != degree {
                return Err(usage(format!("{s} is not a partition of {degree}")));
            }
            Some(p)
        }
        None => None,
    };
    let filter = |l: &Partition| match &only {
        Some(p) => p == l,
        None => stretch || irreducible_dimension(l) <= STRETCH_LIMIT,
    };
    if let Some(p) = &only {
        if !stretch && irreducible_dimension(p) > STRETCH_LIMIT {
            return Err(usage(format!("dimension of [{p}] exceeds {STRETCH_LIMIT}; pass --stretch")));
        }
    }
    let progress = |r: &PartitionReport| eprintln!("done {} (d = {}, new = {})", r.partition, r.dim, r.new);
    let run = || partition_reports(degree, op, m, &filter, &progress);
    let rows = match c.workers {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(usage)?.install(run),
        None => run(),
    };
    let value = json!({ "op": op.name(), "degree": degree, "prime": m.p(), "rows": rows });
    emit(c.format, &value, || {
        let mut s = format!(
            "{:<18} {:>5} {:>14} {:>6} {:>6} {:>12} {:>6} {:>6} {:>4}\n",
            "partition", "d", "symmetries", "symm", "lift", "expansion", "rank", "null", "new"
        );
        for r in &rows {
            s.push_str(&row_text(r));
        }
        s
    });
    Ok(())
}

fn linearization_json(l: &Linearization) -> Value {
    match l {
        Linearization::None => json!("multilinear"),
        Linearization::Symmetric(md) => json!({ "symmetric": md.to_string() }),
        Linearization::Mixed(md) => json!({ "mixed": md.to_string() }),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_special(
    c: &Common,
    op: OpKind,
    multidegree: Option<&str>,
    degree: Option<usize>,
    minimize: bool,
    deltas: &[String],
    alternate: Option<bool>,
    show: usize,
) -> Outcome {
    let m = modulus(c.prime)?;
    if minimize || multidegree.is_none() {
        let degree = degree.unwrap_or(7);
        if degree != 7 || multidegree.is_some() {
            return Err(usage("--minimize runs every multidegree of degree 7; omit --multidegree"));
        }
        let types = TypeTable::new(7).map_err(usage)?;
        let res = part1_table(op, m, &|r| eprintln!("done {}: rank {}, nullity {}, new generators {}", r.multidegree, r.rank, r.nullity, r.generators))
            .map_err(usage)?;
        let min = minimize_generator_set(&res.generators, 7, op, m, res.target);
        let value = json!({
            "op": op.name(),
            "prime": m.p(),
            "rows": res.rows,
            "generators_total": res.generators.len(),
            "module_dim": res.dimension,
            "target": res.target,
            "minimized": min.iter().map(|g| json!({
                "terms": g.poly.len(),
                "linearization": linearization_json(&g.linearization),
                "identity": g.poly.display(&types),
                "data": g.poly.to_json(),
            })).collect::<Vec<_>>(),
        });
        emit(c.format, &value, || {
            let mut s = format!("{:<16} {:>6} {:>6} {:>6} {:>6} {:>4}\n", "multidegree", "words", "monos", "rank", "null", "gens");
            for r in &res.rows {
                s.push_str(&format!("{:<16} {:>6} {:>6} {:>6} {:>6} {:>4}\n", r.multidegree, r.words, r.monomials, r.rank, r.nullity, r.generators));
            }
            s.push_str(&format!("{} generators, module dim {} of {}\n", res.generators.len(), res.dimension, res.target));
            s.push_str(&format!("{} after minimization\n", min.len()));
            for g in &min {
                s.push_str(&format!("  ({} terms) {}\n", g.poly.len(), g.poly.display(&types)));
            }
            s
        });
        return Ok(());
    }
    let md: Multidegree = multidegree.expect("checked").parse().map_err(|e| usage(format!("bad multidegree: {e}")))?;
    if md.total() != 7 && md.total() != 10 {
        return Err(usage(format!("unsupported multidegree {md}: total degree must be 7 or 10")));
    }
    let deltas = deltas
        .iter()
        .map(|d| parse_rational(d).ok_or_else(|| usage(format!("bad delta {d}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if deltas.iter().any(|d| *d <= rat(1, 4) || *d > rat(1, 1)) {
        return Err(usage("each delta must lie in (1/4, 1]"));
    }
    let alternate = alternate.unwrap_or(md.simple_tail() >= 2);
    let types = TypeTable::new(md.total()).map_err(usage)?;
    let sc = nonlinear_special_candidates(&md, op, alternate, &deltas, m).map_err(usage)?;
    eprintln!("{}x{} matrix: rank {}, nullity {}", sc.monomials, sc.words, sc.rank, sc.nullity);
    let confirmation = if md.total() == 10 {
        let lambda = Partition::new(md.0.clone());
        Some(confirm_special(&sc.candidates, &md, &lambda, op, m).map_err(usage)?)
    } else {
        None
    };
    let value = json!({
        "op": op.name(),
        "multidegree": md.to_string(),
        "alternate": alternate,
        "prime": m.p(),
        "words": sc.words,
        "monomials": sc.monomials,
        "rank": sc.rank,
        "nullity": sc.nullity,
        "hnf_size": sc.hnf_size,
        "lll_sizes": sc.lll_sizes.iter().map(|(d, s)| json!({ "delta": d.to_string(), "size": s })).collect::<Vec<_>>(),
        "fallback": sc.fallback,
        "candidates": sc.candidates.len(),
        "shortest": sc.candidates.iter().take(show).map(|p| identity_json(p, &types)).collect::<Vec<_>>(),
        "confirmation": confirmation,
        "confirmed": confirmation.as_ref().map(|r| r.increasing.iter().map(|&i| identity_json(&sc.candidates[i], &types)).collect::<Vec<_>>()),
    });
    emit(c.format, &value, || {
        let mut s = format!("{} {md}: {}x{} matrix, rank {}, nullity {}\n", op.name(), sc.monomials, sc.words, sc.rank, sc.nullity);
        if let Some(h) = sc.hnf_size {
            s.push_str(&format!("  lattice size after Hermite: {h:.2}\n"));
        }
        for (d, z) in &sc.lll_sizes {
            s.push_str(&format!("  lattice size after LLL({d}): {z:.2}\n"));
        }
        for p in sc.candidates.iter().take(show) {
            s.push_str(&format!("  candidate ({} terms): {}\n", p.len(), p.display(&types)));
        }
        if let Some(r) = &confirmation {
            s.push_str(&format!(
                "[{}]: symm {}, symm+lift {}, null {}, final rank {}, {} new identities\n",
                r.partition,
                r.symm,
                r.symmlift,
                r.null,
                r.rank,
                r.increasing.len()
            ));
            s.push_str(&format!("  mixed linearization matrix: rank {}, {} nonzero entries\n", r.mixed_rank, r.mixed_nonzeros));
            for &i in &r.increasing {
                s.push_str(&format!("  special: {}\n", sc.candidates[i].display(&types)));
            }
        }
        s
    });
    Ok(())
}

fn cmd_envelope(c: &Common, system: &str, degree_bound: Option<usize>, graded_up_to: Option<usize>, extend: bool) -> Outcome {
    let spec: SystemSpec = system.parse().map_err(usage)?;
    let sys = family(&spec).map_err(usage)?;
    let bound = degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND);
    let graded = graded_up_to.unwrap_or(degree_bound.unwrap_or(12));
    eprintln!("{}: {} relations", sys.name(), sys.relations().len());
    let report = analyze(&sys, Some(bound), graded, extend);
    let value = serde_json::to_value(&report).expect("serializable");
    emit(c.format, &value, || {
        let mut s = format!("{} ({}, dimension {}): {} relations, {}\n", report.system, report.op, report.system_dim, report.relations, report.status);
        s.push_str(&format!("Gröbner basis ({} elements):\n", report.groebner.len()));
        for g in &report.groebner {
            s.push_str(&format!("  {g}\n"));
        }
        match report.dim {
            Some(d) => s.push_str(&format!("dimension {d}\n")),
            None => s.push_str(&format!("graded dimensions {:?}\n", report.graded_dims)),
        }
        if let Some(ss) = report.semisimple {
            s.push_str(&format!("semisimple: {ss}\n"));
        }
        if let Some(z) = &report.center {
            s.push_str(&format!("center ({}): {}\n", z.len(), z.join(", ")));
        }
        if let (Some(ids), Some(dims)) = (&report.idempotents, &report.ideal_dims) {
            s.push_str(&format!("primitive idempotents over {}:\n", report.field.clone().unwrap_or_default()));
            for (e, d) in ids.iter().zip(dims) {
                s.push_str(&format!("  [{d}] {e}\n"));
            }
        }
        if let Some(e) = &report.error {
            s.push_str(&format!("center splitting failed: {e}\n"));
        }
        s
    });
    if report.status.starts_with("truncated") && degree_bound.is_none() {
        return Err(Failure::Truncated(format!("completion stopped at degree {bound}; pass --degree-bound to accept a truncated basis")));
    }
    if let Some(e) = &report.error {
        let hint = if e.contains("requires adjoining") { "; pass --extend" } else { "" };
        return Err(usage(format!("{e}{hint}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let c = &cli.common;
    match cli.command {
        Command::Identities { op, degree } => cmd_identities(c, op.into(), degree),
        Command::Table { op, degree, partition, stretch } => cmd_table(c, op.into(), degree, partition.as_deref(), stretch),
        Command::Special { op, multidegree, degree, minimize, deltas, alternate, show } => {
            cmd_special(c, op.into(), multidegree.as_deref(), degree, minimize, &deltas, alternate, show)
        }
        Command::Envelope { system, degree_bound, graded_up_to, extend } => {
            cmd_envelope(c, &system, degree_bound, graded_up_to, extend)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Truncated(msg)) => {
            eprintln!("truncated: {msg}");
            ExitCode::from(3)
        }
    }
}
