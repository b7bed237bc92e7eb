//! Model files and the `zoo:` catalogue.
//!
//! A model file is line oriented; `#` starts a comment.
//!
//! ```text
//! hopfpi-model v1
//! name M2-transpose
//! dim 4
//! basis e11 e12 e21 e22
//! unit 1 0 0 1                 # optional
//! const 0 0 0 1                # e_0 e_0 = 1 e_0   (zero-based indices)
//! ...
//! op T antiautomorphism        # automorphism | antiautomorphism | derivation | generalized
//! row 1 0 0 0                  # dim rows; row r, column c = coefficient of e_r in T(e_c)
//! ...
//! end
//! ```
//!
//! A `generalized` operator lists one or more quadruple lines before `end`:
//! `quad a.. | b.. | c.. | d..`, each part holding one coefficient per
//! operator of the list `[id, op_0, op_1, ...]`, meaning
//! `h(xy) = Σ (a x)(b y) + (c y)(d x)`.

use std::fmt::Write as _;

use crate::action::{operator_algebra_basis, Generator, HActionData, ProductRule, Quadruple};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::Matrix;
use crate::zoo;

pub const HEADER: &str = "hopfpi-model v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub name: String,
    pub algebra: Algebra,
    pub generators: Vec<Generator>,
}

impl Model {
    pub fn new(name: impl Into<String>, algebra: Algebra, generators: Vec<Generator>) -> Self {
        Self {
            name: name.into(),
            algebra,
            generators,
        }
    }

    /// Verifies every product rule and builds the operator basis.
    pub fn action(&self) -> Result<HActionData> {
        operator_algebra_basis(&self.algebra, self.generators.clone())
    }

    pub fn to_text(&self) -> String {
        serialize(self)
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their one-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

struct Line<'a> {
    number: usize,
    toks: Vec<(usize, &'a str)>,
    end_column: usize,
}

impl<'a> Line<'a> {
    fn keyword(&self) -> &'a str {
        self.toks[0].1
    }

    fn args(&self) -> &[(usize, &'a str)] {
        &self.toks[1..]
    }

    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        parse_error(self.number, column, message)
    }

    fn expect_args(&self, count: usize) -> Result<()> {
        let args = self.args();
        if args.len() < count {
            return Err(self.err(self.end_column, format!("`{}` needs {count} argument(s)", self.keyword())));
        }
        if args.len() > count {
            return Err(self.err(args[count].0, "unexpected extra argument"));
        }
        Ok(())
    }

    fn usize_at(&self, k: usize) -> Result<usize> {
        let (col, t) = self.args()[k];
        t.parse()
            .map_err(|_| self.err(col, format!("expected a nonnegative integer, found `{t}`")))
    }

    fn scalar_of(&self, (col, t): (usize, &str)) -> Result<Scalar> {
        scalar::parse(t).map_err(|_| self.err(col, format!("expected a rational number, found `{t}`")))
    }

    fn scalars(&self, toks: &[(usize, &'a str)]) -> Result<Vec<Scalar>> {
        toks.iter().map(|&t| self.scalar_of(t)).collect()
    }
}

fn parse_rule_tag(line: &Line, (col, tag): (usize, &str)) -> Result<ProductRule> {
    Ok(match tag {
        "automorphism" => ProductRule::Automorphism,
        "antiautomorphism" => ProductRule::AntiAutomorphism,
        "derivation" => ProductRule::Derivation,
        "generalized" => ProductRule::Generalized(Vec::new()),
        other => return Err(line.err(col, format!("unknown rule `{other}`"))),
    })
}

struct PendingOp {
    name: String,
    rule: ProductRule,
    rows: Vec<Vec<Scalar>>,
    start: usize,
}

/// Parses a model and validates it: associativity, the unit, and every
/// declared product rule.
pub fn parse(text: &str) -> Result<Model> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let toks = tokens(content);
            (!toks.is_empty()).then(|| Line {
                number: i + 1,
                end_column: content.trim_end().chars().count() + 1,
                toks,
            })
        })
        .collect();
    let Some(first) = lines.first() else {
        return Err(parse_error(1, 1, format!("empty model; expected `{HEADER}`")));
    };
    let header: Vec<&str> = first.toks.iter().map(|t| t.1).collect();
    if header.join(" ") != HEADER {
        return Err(first.err(1, format!("expected header `{HEADER}`")));
    }

    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut unit: Option<Vec<Scalar>> = None;
    let mut constants = Vec::new();
    let mut ops: Vec<PendingOp> = Vec::new();
    let mut current: Option<PendingOp> = None;

    for line in &lines[1..] {
        let kw = line.keyword();
        if let Some(op) = current.as_mut() {
            match kw {
                "row" => {
                    let d = dim.expect("dim precedes op");
                    let row = line.scalars(line.args())?;
                    if row.len() != d {
                        return Err(line.err(line.toks[0].0, format!("row has {} entries, expected {d}", row.len())));
                    }
                    if op.rows.len() == d {
                        return Err(line.err(line.toks[0].0, format!("operator `{}` has more than {d} rows", op.name)));
                    }
                    op.rows.push(row);
                }
                "quad" => {
                    let ProductRule::Generalized(quads) = &mut op.rule else {
                        return Err(line.err(line.toks[0].0, "`quad` is only allowed for generalized rules"));
                    };
                    let mut parts: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
                    for &(col, t) in line.args() {
                        if t == "|" {
                            parts.push(Vec::new());
                        } else {
                            parts.last_mut().expect("nonempty").push((col, t));
                        }
                    }
                    if parts.len() != 4 {
                        return Err(line.err(line.toks[0].0, "a quadruple has four `|`-separated parts"));
                    }
                    let p: Vec<Vec<Scalar>> = parts.iter().map(|t| line.scalars(t)).collect::<Result<_>>()?;
                    let mut it = p.into_iter();
                    quads.push(Quadruple {
                        first: it.next().expect("four parts"),
                        second: it.next().expect("four parts"),
                        third: it.next().expect("four parts"),
                        fourth: it.next().expect("four parts"),
                    });
                }
                "end" => {
                    line.expect_args(0)?;
                    let d = dim.expect("dim precedes op");
                    if op.rows.len() != d {
                        return Err(line.err(1, format!("operator `{}` has {} rows, expected {d}", op.name, op.rows.len())));
                    }
                    if matches!(&op.rule, ProductRule::Generalized(q) if q.is_empty()) {
                        return Err(line.err(1, format!("generalized operator `{}` has no quadruples", op.name)));
                    }
                    ops.push(current.take().expect("inside op"));
                }
                other => return Err(line.err(line.toks[0].0, format!("unexpected `{other}` inside operator block"))),
            }
            continue;
        }
        match kw {
            "name" => {
                if line.args().is_empty() {
                    return Err(line.err(line.end_column, "`name` needs a value"));
                }
                name = Some(line.args().iter().map(|t| t.1).collect::<Vec<_>>().join(" "));
            }
            "dim" => {
                line.expect_args(1)?;
                if dim.is_some() {
                    return Err(line.err(1, "`dim` given twice"));
                }
                dim = Some(line.usize_at(0)?);
            }
            "basis" => {
                let d = dim.ok_or_else(|| line.err(1, "`basis` before `dim`"))?;
                line.expect_args(d)?;
                labels = Some(line.args().iter().map(|t| t.1.to_string()).collect());
            }
            "unit" => {
                let d = dim.ok_or_else(|| line.err(1, "`unit` before `dim`"))?;
                line.expect_args(d)?;
                unit = Some(line.scalars(line.args())?);
            }
            "const" => {
                let d = dim.ok_or_else(|| line.err(1, "`const` before `dim`"))?;
                line.expect_args(4)?;
                let mut idx = [0usize; 3];
                for (k, slot) in idx.iter_mut().enumerate() {
                    *slot = line.usize_at(k)?;
                    if *slot >= d {
                        return Err(line.err(line.args()[k].0, format!("index {} out of range for dimension {d}", *slot)));
                    }
                }
                constants.push((idx[0], idx[1], idx[2], line.scalar_of(line.args()[3])?));
            }
            "op" => {
                if dim.is_none() {
                    return Err(line.err(1, "`op` before `dim`"));
                }
                line.expect_args(2)?;
                let (_, op_name) = line.args()[0];
                if ops.iter().any(|o| o.name == op_name) {
                    return Err(line.err(line.args()[0].0, format!("operator `{op_name}` declared twice")));
                }
                current = Some(PendingOp {
                    name: op_name.to_string(),
                    rule: parse_rule_tag(line, line.args()[1])?,
                    rows: Vec::new(),
                    start: line.number,
                });
            }
            "row" | "quad" | "end" => return Err(line.err(1, format!("`{kw}` outside an operator block"))),
            other => return Err(line.err(1, format!("unknown keyword `{other}`"))),
        }
    }
    if let Some(op) = current {
        return Err(parse_error(op.start, 1, format!("operator `{}` is missing `end`", op.name)));
    }
    let last = lines.last().map_or(1, |l| l.number);
    let dim = dim.ok_or_else(|| parse_error(last, 1, "missing `dim`"))?;
    let labels = labels.unwrap_or_else(|| Algebra::default_labels(dim));
    let name = name.unwrap_or_default();
    let algebra = Algebra::new(labels, constants, unit)?;
    let generators = ops
        .into_iter()
        .map(|op| Generator::new(op.name, Matrix::from_rows(op.rows), op.rule))
        .collect::<Vec<_>>();
    let model = Model::new(name, algebra, generators);
    model.action()?;
    Ok(model)
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(scalar::format).collect::<Vec<_>>().join(" ")
}

/// Canonical text form; `parse(serialize(m)) == m`.
pub fn serialize(model: &Model) -> String {
    let alg = &model.algebra;
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    if !model.name.is_empty() {
        let _ = writeln!(out, "name {}", model.name);
    }
    let _ = writeln!(out, "dim {}", alg.dim());
    if alg.dim() > 0 {
        let _ = writeln!(out, "basis {}", alg.labels().join(" "));
    }
    if let Some(u) = alg.unit() {
        let _ = writeln!(out, "unit {}", join(u));
    }
    for (i, j, k, c) in alg.structure_constants() {
        let _ = writeln!(out, "const {i} {j} {k} {}", scalar::format(c));
    }
    for g in &model.generators {
        let _ = writeln!(out, "op {} {}", g.name, g.rule.tag());
        for r in 0..g.matrix.rows() {
            let _ = writeln!(out, "row {}", join(g.matrix.row(r)));
        }
        if let ProductRule::Generalized(quads) = &g.rule {
            for q in quads {
                let parts: Vec<String> = q.parts().iter().map(|p| join(p)).collect();
                let _ = writeln!(out, "quad {}", parts.join(" | "));
            }
        }
        let _ = writeln!(out, "end");
    }
    out
}

/// Names accepted by [`zoo_model`]; `{k}` stands for a positive integer.
pub const ZOO_NAMES: &[&str] = &[
    "point",
    "nil{p}",
    "ut{m}",
    "m{k}",
    "m{k}-transpose",
    "m{k}-ad",
    "m{k}-ad12",
    "bahturin-m{m}",
    "bahturin-ad-m{m}",
    "qq",
    "qq-swap",
    "m{k}-sum-swap",
];

fn numbered<'a>(name: &'a str, prefix: &str, suffix: &str) -> Option<usize> {
    let digits = name.strip_prefix(prefix)?.strip_suffix(suffix)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&k| k >= 1 && k <= 8)
}

/// A built-in model.
pub fn zoo_model(name: &str) -> Result<Model> {
    let model = |alg: Algebra, gens: Vec<Generator>| Ok(Model::new(name, alg, gens));
    if name == "point" {
        return model(zoo::point(), Vec::new());
    }
    if name == "qq" {
        return model(zoo::diagonal(2), Vec::new());
    }
    if name == "qq-swap" {
        return model(zoo::diagonal(2), vec![zoo::permutation_generator("swap", &[1, 0])]);
    }
    if let Some(p) = numbered(name, "nil", "").filter(|&p| p >= 2) {
        return model(zoo::truncated_polynomials(p), Vec::new());
    }
    if let Some(m) = numbered(name, "ut", "") {
        return model(zoo::upper_triangular(m), Vec::new());
    }
    if let Some(m) = numbered(name, "bahturin-ad-m", "") {
        return model(zoo::bahturin(m), zoo::bahturin_adjoint_generators(m));
    }
    if let Some(m) = numbered(name, "bahturin-m", "") {
        return model(zoo::bahturin(m), zoo::bahturin_generators(m));
    }
    if let Some(k) = numbered(name, "m", "") {
        return model(zoo::matrix_algebra(k), Vec::new());
    }
    if let Some(k) = numbered(name, "m", "-transpose") {
        return model(zoo::matrix_algebra(k), zoo::transpose_generators(k));
    }
    if let Some(k) = numbered(name, "m", "-ad") {
        return model(zoo::matrix_algebra(k), zoo::adjoint_generators(k));
    }
    if let Some(k) = numbered(name, "m", "-ad12").filter(|&k| k >= 2) {
        let alg = zoo::matrix_algebra(k);
        let g = zoo::adjoint(&alg, "ad12", &alg.basis_element(zoo::matrix_unit_index(k, 0, 1)));
        return model(alg, vec![g]);
    }
    if let Some(k) = numbered(name, "m", "-sum-swap") {
        let mk = zoo::matrix_algebra(k);
        let d = k * k;
        let perm: Vec<usize> = (0..2 * d).map(|i| (i + d) % (2 * d)).collect();
        return model(zoo::direct_sum(&mk, &mk), vec![zoo::permutation_generator("swap", &perm)]);
    }
    Err(Error::UnknownModel(name.to_string()))
}

/// Resolves `zoo:<name>` or parses model text.
pub fn resolve(spec: &str, read_file: impl FnOnce(&str) -> std::io::Result<String>) -> Result<Model> {
    if let Some(name) = spec.strip_prefix("zoo:") {
        return zoo_model(name);
    }
    let text = read_file(spec).map_err(|e| Error::Io(format!("`{spec}`: {e}")))?;
    parse(&text)
}
