//! Command implementations for the `hopfpi` binary. Every command renders
//! its report into a string so the output can be tested byte for byte.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hopfpi_core::action::is_h_invariant;
use hopfpi_core::algebra::{jacobson_radical, simple_decomposition, wedderburn_section};
use hopfpi_core::invariants::{
    cocharacter_with, codimension_with, growth_report_with, h_components, pi_exponent, vanishing_report,
    CodimOptions, GrowthOptions, Limits,
};
use hopfpi_core::model::{resolve, Model};
use hopfpi_core::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "hopfpi",
    version,
    about = "Codimensions, cocharacters and PI-exponents of finite-dimensional algebras with a Hopf action",
    after_help = "MODEL is a path to a model file or `zoo:<name>`, e.g. zoo:bahturin-m2."
)]
pub struct Cli {
    /// Largest number of monomials m^n n! an evaluation may use.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub limit_rows: u128,
    /// Largest number of evaluation coordinates dim^n dim.
    #[arg(long, global = true, default_value_t = 4_000_000)]
    pub limit_cols: u128,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a model, including invariance of the radical.
    Check { model: String },
    /// Dimension and nilpotency index of the radical.
    Radical { model: String },
    /// Simple and H-simple components of A/J and the section.
    Decompose { model: String },
    /// The exponent d with a witness chain.
    Exponent { model: String },
    /// The codimension c_n.
    Codim {
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Rank)]
        method: MethodArg,
    },
    /// Cocharacter multiplicities at degree n.
    Cochar {
        model: String,
        #[arg(long)]
        n: usize,
    },
    /// Check that multiplicities vanish on partitions with a long tail.
    Vanishing {
        model: String,
        #[arg(long)]
        n: usize,
    },
    /// Codimension growth table, written as CSV.
    Growth {
        model: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Rank,
    Cochar,
    Both,
}

/// What a command produced: standard output, and an error to report after
/// printing it (used when a report is shown before failing).
pub struct Outcome {
    pub stdout: String,
    pub error: Option<Error>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, error: None }
    }
}

pub fn load(spec: &str) -> Result<Model> {
    resolve(spec, |path| std::fs::read_to_string(path))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let opts = CodimOptions {
        limits: Limits {
            max_rows: cli.limit_rows,
            max_cols: cli.limit_cols,
        },
        ..CodimOptions::default()
    };
    match &cli.command {
        Command::Check { model } => check(&load(model)?).map(Outcome::ok),
        Command::Radical { model } => radical(&load(model)?).map(Outcome::ok),
        Command::Decompose { model } => decompose(&load(model)?).map(Outcome::ok),
        Command::Exponent { model } => exponent(&load(model)?).map(Outcome::ok),
        Command::Codim { model, n, method } => codim(&load(model)?, *n, *method, &opts).map(Outcome::ok),
        Command::Cochar { model, n } => cochar(&load(model)?, *n, &opts).map(Outcome::ok),
        Command::Vanishing { model, n } => vanishing(&load(model)?, *n, &opts),
        Command::Growth { model, max_n, out } => growth(&load(model)?, *max_n, out, &opts),
    }
}

fn check(model: &Model) -> Result<String> {
    let alg = &model.algebra;
    let act = model.action()?;
    let mut out = String::new();
    let _ = writeln!(out, "model: {}", model.name);
    let _ = writeln!(out, "dim: {}", alg.dim());
    let _ = writeln!(out, "unit: {}", alg.unit().map_or("none".to_string(), |u| alg.format_element(u)));
    let _ = writeln!(out, "associativity: ok");
    for g in &model.generators {
        let _ = writeln!(out, "operator {}: {} rule ok", g.name, g.rule.tag());
    }
    let _ = writeln!(out, "zeta basis: {} ({})", act.len(), act.names().join(", "));
    let rad = jacobson_radical(alg);
    let _ = writeln!(out, "radical: dim {}, nilpotency index {}", rad.radical.dim(), rad.nilpotency_index);
    if !is_h_invariant(&rad.radical, &act) {
        return Err(Error::NotHInvariant("the radical is not stable under the action".into()));
    }
    let _ = writeln!(out, "radical invariant: yes");
    let _ = writeln!(out, "status: ok");
    Ok(out)
}

fn radical(model: &Model) -> Result<String> {
    let act = model.action()?;
    let rad = jacobson_radical(&model.algebra);
    let mut out = String::new();
    let _ = writeln!(out, "dim J = {}", rad.radical.dim());
    let _ = writeln!(out, "p = {}", rad.nilpotency_index);
    let _ = writeln!(out, "H-invariant: {}", yes_no(is_h_invariant(&rad.radical, &act)));
    for (i, v) in rad.radical.basis().iter().enumerate() {
        let _ = writeln!(out, "  j{} = {}", i + 1, model.algebra.format_element(v));
    }
    Ok(out)
}

fn decompose(model: &Model) -> Result<String> {
    let alg = &model.algebra;
    let act = model.action()?;
    let (quotient, section) = wedderburn_section(alg)?;
    let q = &quotient.algebra;
    let dec = simple_decomposition(q)?;
    let groups = h_components(&quotient, &act)?;
    let mut out = String::new();
    let _ = writeln!(out, "dim A/J = {}", q.dim());
    let _ = writeln!(out, "simple components: {}", dec.components.len());
    for (i, c) in dec.components.iter().enumerate() {
        let _ = writeln!(out, "  S{} dim {}", i + 1, c.dim());
    }
    let _ = writeln!(out, "H-simple components: {}", groups.len());
    for (i, g) in groups.iter().enumerate() {
        let parts: Vec<String> = g.simple.iter().map(|s| format!("S{}", s + 1)).collect();
        let _ = writeln!(out, "  B{} dim {} = {}", i + 1, g.dim(), parts.join(" + "));
    }
    let _ = writeln!(out, "section: multiplicative, splits the projection");
    for (i, img) in section.images().iter().enumerate() {
        let lifted = alg.format_element(&quotient.lift(&q.basis_element(i)));
        let _ = writeln!(out, "  kappa({lifted} + J) = {}", alg.format_element(img));
    }
    Ok(out)
}

fn exponent(model: &Model) -> Result<String> {
    let act = model.action()?;
    let r = pi_exponent(&model.algebra, &act)?;
    let mut out = String::new();
    let _ = writeln!(out, "d = {}", r.d);
    if r.nilpotent {
        let _ = writeln!(out, "nilpotent: yes (A^{} = 0)", r.nilpotency_index);
        return Ok(out);
    }
    let _ = writeln!(out, "nilpotent: no");
    let dims: Vec<String> = r
        .group_dims
        .iter()
        .enumerate()
        .map(|(i, d)| format!("B{} dim {d}", i + 1))
        .collect();
    let _ = writeln!(out, "H-simple components: {}", dims.join(", "));
    let chain: Vec<String> = r.witness.iter().map(|i| format!("B{}", i + 1)).collect();
    let _ = writeln!(out, "witness chain: {}", chain.join(" A+ "));
    if let Some(c) = &r.certificate {
        let _ = writeln!(out, "nonzero product: {}", model.algebra.format_element(c));
    }
    Ok(out)
}

fn codim(model: &Model, n: usize, method: MethodArg, opts: &CodimOptions) -> Result<String> {
    let act = model.action()?;
    let alg = &model.algebra;
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    match method {
        MethodArg::Rank => {
            let r = codimension_with(alg, &act, n, opts)?;
            let _ = writeln!(out, "c = {}", r.c);
            let _ = writeln!(out, "method = rank ({})", r.certificate.tag());
        }
        MethodArg::Cochar => {
            let r = cocharacter_with(alg, &act, n, opts)?;
            let _ = writeln!(out, "c = {}", r.codimension);
            let _ = writeln!(out, "method = cocharacter ({})", r.certificate.tag());
        }
        MethodArg::Both => {
            let a = codimension_with(alg, &act, n, opts)?;
            let b = cocharacter_with(alg, &act, n, opts)?;
            if a.c != b.codimension {
                return Err(Error::Violation(format!(
                    "rank method gives {}, cocharacter gives {}",
                    a.c, b.codimension
                )));
            }
            let _ = writeln!(out, "c = {}", a.c);
            let _ = writeln!(out, "method = rank ({}), cocharacter ({}): agree", a.certificate.tag(), b.certificate.tag());
        }
    }
    Ok(out)
}

fn cochar(model: &Model, n: usize, opts: &CodimOptions) -> Result<String> {
    let act = model.action()?;
    let r = cocharacter_with(&model.algebra, &act, n, opts)?;
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}");
    let width = r
        .multiplicities
        .iter()
        .map(|(p, _)| p.to_string().len())
        .max()
        .unwrap_or(0)
        .max("partition".len());
    let _ = writeln!(out, "{:<width$}  {:>12}  {:>10}", "partition", "multiplicity", "f^lambda");
    for (p, m) in &r.multiplicities {
        let _ = writeln!(out, "{:<width$}  {:>12}  {:>10}", p.to_string(), m, p.dim_irreducible());
    }
    let _ = writeln!(out, "colength = {}", r.colength);
    let _ = writeln!(out, "c = {}", r.codimension);
    Ok(out)
}

fn vanishing(model: &Model, n: usize, opts: &CodimOptions) -> Result<Outcome> {
    let act = model.action()?;
    let r = vanishing_report(&model.algebra, &act, n, opts)?;
    let mut out = String::new();
    let _ = writeln!(out, "n = {n}, d = {}, p = {}", r.d, r.p);
    if r.constrained.is_empty() {
        let _ = writeln!(out, "no constrained partitions");
    } else {
        let _ = writeln!(out, "constrained partitions: {}", r.constrained.len());
        for (p, kills) in &r.direct_checks {
            let m = r
                .multiplicities
                .iter()
                .find(|(q, _)| q == p)
                .map_or(0, |(_, m)| *m);
            let _ = writeln!(
                out,
                "  {p}: m = {m}, e*_T annihilates: {}",
                yes_no(*kills)
            );
        }
    }
    let _ = writeln!(out, "verdict: {}", if r.passed() { "pass" } else { "violation" });
    let error = (!r.passed()).then(|| Error::Violation(r.violations.join("; ")));
    Ok(Outcome { stdout: out, error })
}

fn growth(model: &Model, max_n: usize, path: &PathBuf, opts: &CodimOptions) -> Result<Outcome> {
    let act = model.action()?;
    let gopts = GrowthOptions {
        codim: opts.clone(),
        ..GrowthOptions::default()
    };
    let report = growth_report_with(&model.algebra, &act, max_n, &gopts);
    std::fs::write(path, report.to_csv())
        .map_err(|e| Error::Io(format!("cannot write `{}`: {e}", path.display())))?;
    let mut out = String::new();
    match (&report.d, &report.exponent_error) {
        (Some(d), _) => {
            let _ = writeln!(out, "d = {d}");
        }
        (None, Some(e)) => {
            let _ = writeln!(out, "d unavailable: error[{}]: {e}", e.code());
        }
        (None, None) => {}
    }
    let _ = writeln!(out, "{:>3}  {:>12}  {:>9}  {:>10}  sandwich", "n", "c", "colength", "root");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{:>3}  {:>12}  {:>9}  {:>10.6}  {}",
            row.n,
            row.c,
            row.colength,
            row.root(),
            row.sandwich.tag()
        );
    }
    let _ = writeln!(
        out,
        "sandwich: d^n/n^{b} <= c <= n^{b} d^n on this finite window only (evidence, not a proof)",
        b = report.band
    );
    if let Some(e) = &report.stopped {
        let _ = writeln!(out, "table stopped after n = {}: error[{}]: {e}", report.rows.len(), e.code());
    }
    let _ = writeln!(out, "wrote {}", path.display());
    Ok(Outcome::ok(out))
}
