//! Text form of polynomials: `c * x1^op x2 ... + c * ...`, one term per
//! monomial in canonical order, `0` for the zero polynomial. Variables are
//! one-based; the identity operator is written without `^`.

use num_traits::Signed;

use super::{HMonomial, HPolynomial};
use crate::error::{Error, Result};
use crate::linalg::scalar;
use crate::symmetric::Permutation;

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

impl HPolynomial {
    /// Canonical text; `names[k]` is the name of basis operator `k`.
    pub fn to_text(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&scalar::format(&c.abs()));
            out.push_str(" *");
            for (k, &op) in mono.ops.iter().enumerate() {
                out.push_str(&format!(" x{}", mono.sigma.apply(k) + 1));
                if op != 0 {
                    out.push('^');
                    out.push_str(names[op]);
                }
            }
        }
        out
    }

    /// Parses the text form for `n` variables and the given operator names.
    pub fn parse(text: &str, n: usize, names: &[&str]) -> Result<HPolynomial> {
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        let mut start = None;
        for (i, ch) in text.char_indices().chain([(text.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push((text[..s].chars().count() + 1, &text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        let m = names.len();
        let mut f = HPolynomial::zero(n, m);
        if tokens.len() == 1 && tokens[0].1 == "0" {
            return Ok(f);
        }
        let end_column = text.chars().count() + 1;
        let mut pos = 0;
        let mut first = true;
        while pos < tokens.len() || first {
            let mut negative = false;
            if !first {
                match tokens[pos].1 {
                    "+" => {}
                    "-" => negative = true,
                    other => return Err(parse_error(tokens[pos].0, format!("expected `+` or `-`, found `{other}`"))),
                }
                pos += 1;
            }
            let (col, tok) = *tokens
                .get(pos)
                .ok_or_else(|| parse_error(end_column, "expected a coefficient"))?;
            if !first && tok.starts_with('-') {
                return Err(parse_error(col, "sign must be a separate token"));
            }
            let mut coeff = scalar::parse(tok).map_err(|_| parse_error(col, format!("bad coefficient `{tok}`")))?;
            if negative {
                coeff = -coeff;
            }
            pos += 1;
            match tokens.get(pos) {
                Some((_, "*")) => pos += 1,
                Some((c, t)) => return Err(parse_error(*c, format!("expected `*`, found `{t}`"))),
                None => return Err(parse_error(end_column, "expected `*`")),
            }
            let mut images = Vec::new();
            let mut ops = Vec::new();
            while let Some(&(col, tok)) = tokens.get(pos) {
                if tok == "+" || tok == "-" {
                    break;
                }
                let (var, op) = match tok.split_once('^') {
                    Some((v, o)) => (v, Some(o)),
                    None => (tok, None),
                };
                let index: usize = var
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i| i >= 1 && i <= n)
                    .ok_or_else(|| parse_error(col, format!("bad variable `{var}`")))?;
                let op_index = match op {
                    None | Some("id") => 0,
                    Some(name) => names
                        .iter()
                        .position(|x| *x == name)
                        .ok_or_else(|| parse_error(col, format!("unknown operator `{name}`")))?,
                };
                images.push(index - 1);
                ops.push(op_index);
                pos += 1;
            }
            let sigma = Permutation::new(images)
                .ok()
                .filter(|p| p.len() == n)
                .ok_or_else(|| parse_error(col, format!("term is not multilinear in x1..x{n}")))?;
            f.add_term(HMonomial { sigma, ops }, coeff)?;
            first = false;
        }
        Ok(f)
    }
}
