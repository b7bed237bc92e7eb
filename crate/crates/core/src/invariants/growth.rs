use std::fmt::Write as _;

use num_bigint::BigUint;

use super::codim::{cocharacter_and_checks, CodimOptions};
use super::exponent::pi_exponent;
use crate::action::HActionData;
use crate::algebra::Algebra;
use crate::error::Error;
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthOptions {
    pub codim: CodimOptions,
    /// Band exponent `B` of the sandwich `d^n / n^B ≤ c_n ≤ n^B d^n`.
    pub band: u32,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        Self {
            codim: CodimOptions::default(),
            band: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SandwichFlag {
    Pass,
    Fail,
    Skipped,
}

impl SandwichFlag {
    pub fn tag(self) -> &'static str {
        match self {
            SandwichFlag::Pass => "pass",
            SandwichFlag::Fail => "fail",
            SandwichFlag::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: usize,
    pub c: u64,
    pub colength: u64,
    /// `c_{n+1} / c_n`, absent on the last row or when `c_n = 0`.
    pub ratio: Option<Scalar>,
    pub sandwich: SandwichFlag,
    /// Whether the `n`-th root did not drop from the previous row.
    pub root_nondecreasing: Option<bool>,
}

impl GrowthRow {
    /// Display only.
    pub fn root(&self) -> f64 {
        (self.c as f64).powf(1.0 / self.n as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub d: Option<usize>,
    /// Why `d` is missing.
    pub exponent_error: Option<Error>,
    pub band: u32,
    pub rows: Vec<GrowthRow>,
    /// The error that ended the table early.
    pub stopped: Option<Error>,
}

/// `d^n ≤ c n^B` and `c ≤ n^B d^n`, in exact integers.
pub fn in_sandwich(c: u64, n: usize, d: usize, band: u32) -> bool {
    let c = BigUint::from(c);
    let dn = BigUint::from(d).pow(n as u32);
    let nb = BigUint::from(n).pow(band);
    dn <= &c * &nb && c <= nb * dn
}

/// `c_{n+1}^{1/(n+1)} ≥ c_n^{1/n}`, i.e. `c_{n+1}^n ≥ c_n^{n+1}`.
pub fn root_nondecreasing(c_n: u64, n: usize, c_next: u64) -> bool {
    BigUint::from(c_next).pow(n as u32) >= BigUint::from(c_n).pow(n as u32 + 1)
}

pub fn growth_report(alg: &Algebra, act: &HActionData, n_max: usize) -> GrowthReport {
    growth_report_with(alg, act, n_max, &GrowthOptions::default())
}

/// Codimensions and colengths for `n = 1..=n_max`. The table stops at the
/// first row that fails (typically on a size limit).
pub fn growth_report_with(alg: &Algebra, act: &HActionData, n_max: usize, opts: &GrowthOptions) -> GrowthReport {
    let (d, exponent_error) = match pi_exponent(alg, act) {
        Ok(r) => (Some(r.d), None),
        Err(e) => (None, Some(e)),
    };
    let mut rows: Vec<GrowthRow> = Vec::new();
    let mut stopped = None;
    for n in 1..=n_max {
        let (coch, _) = match cocharacter_and_checks(alg, act, n, &opts.codim, Vec::new()) {
            Ok(r) => r,
            Err(e) => {
                stopped = Some(e);
                break;
            }
        };
        let c = coch.codimension;
        let sandwich = match d {
            Some(d) if n >= 3 && d > 1 => {
                if in_sandwich(c, n, d, opts.band) {
                    SandwichFlag::Pass
                } else {
                    SandwichFlag::Fail
                }
            }
            _ => SandwichFlag::Skipped,
        };
        let root_ok = rows.last().map(|prev| root_nondecreasing(prev.c, prev.n, c));
        if let Some(prev) = rows.last_mut() {
            if prev.c != 0 {
                prev.ratio = Some(Scalar::new(c.into(), prev.c.into()));
            }
        }
        rows.push(GrowthRow {
            n,
            c,
            colength: coch.colength,
            ratio: None,
            sandwich,
            root_nondecreasing: root_ok,
        });
    }
    GrowthReport {
        d,
        exponent_error,
        band: opts.band,
        rows,
        stopped,
    }
}

impl GrowthReport {
    /// CSV with columns `n,c,colength,ratio,root,d,flags`. Flags are
    /// `;`-separated `key=value` pairs; the sandwich flag is a finite-window
    /// probe and is labelled as such.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,c,colength,ratio,root,d,flags\n");
        let d = self.d.map_or(String::new(), |d| d.to_string());
        for row in &self.rows {
            let ratio = row
                .ratio
                .as_ref()
                .map_or(String::new(), |r| format!("{}/{}", r.numer(), r.denom()));
            let root = match row.root_nondecreasing {
                Some(true) => "nondecreasing",
                Some(false) => "decreasing",
                None => "first",
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{:.6},{},sandwich_probe_B{}={};root={}",
                row.n,
                row.c,
                row.colength,
                ratio,
                row.root(),
                d,
                self.band,
                row.sandwich.tag(),
                root
            );
        }
        out
    }
}
