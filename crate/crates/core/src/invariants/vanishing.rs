use super::codim::{cocharacter_and_checks, CodimOptions};
use super::exponent::pi_exponent;
use crate::action::HActionData;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::symmetric::{partitions, young_symmetrizer, Partition, SymmetrizerKind, Tableau};

/// Result of checking that `m(A, H, λ) = 0` whenever `Σ_{k>d} λ_k ≥ p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: usize,
    pub d: usize,
    pub p: usize,
    /// Partitions of `n` covered by the constraint.
    pub constrained: Vec<Partition>,
    pub multiplicities: Vec<(Partition, u64)>,
    /// For each constrained `λ`: whether `e*_T` of the canonical tableau
    /// annihilates `P^H_n` modulo identities.
    pub direct_checks: Vec<(Partition, bool)>,
    pub violations: Vec<String>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Builds the report without failing on violations.
pub fn vanishing_report(alg: &Algebra, act: &HActionData, n: usize, opts: &CodimOptions) -> Result<VanishingReport> {
    let exp = pi_exponent(alg, act)?;
    let (d, p) = (exp.d, exp.nilpotency_index);
    let constrained: Vec<Partition> = partitions(n)
        .into_iter()
        .filter(|l| l.tail_below(d) >= p)
        .collect();
    let symmetrizers = constrained
        .iter()
        .map(|l| young_symmetrizer(&Tableau::canonical(l), SymmetrizerKind::EStar))
        .collect();
    let (coch, kills) = cocharacter_and_checks(alg, act, n, opts, symmetrizers)?;
    let mut violations = Vec::new();
    for (lambda, &k) in constrained.iter().zip(&kills) {
        let m = coch.multiplicity(lambda);
        if m != 0 {
            violations.push(format!("m{lambda} = {m}, expected 0"));
        }
        if !k {
            violations.push(format!("e*_T for {lambda} does not map P_{n} into the identities"));
        }
    }
    Ok(VanishingReport {
        n,
        d,
        p,
        direct_checks: constrained.iter().cloned().zip(kills).collect(),
        constrained,
        multiplicities: coch.multiplicities,
        violations,
    })
}

/// Like [`vanishing_report`], but a violation is an error.
pub fn verify_cocharacter_vanishing(alg: &Algebra, act: &HActionData, n: usize) -> Result<VanishingReport> {
    let report = vanishing_report(alg, act, n, &CodimOptions::default())?;
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Violation(report.violations.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn point_keeps_only_the_trivial_character() {
        let pt = zoo::point();
        let r = verify_cocharacter_vanishing(&pt, &HActionData::trivial(&pt), 4).unwrap();
        assert_eq!((r.d, r.p), (1, 1));
        assert_eq!(r.constrained.len(), 4);
        assert!(r.direct_checks.iter().all(|(_, k)| *k));
    }

    #[test]
    fn matrix_algebra_is_unconstrained() {
        let m2 = zoo::matrix_algebra(2);
        let r = verify_cocharacter_vanishing(&m2, &HActionData::trivial(&m2), 4).unwrap();
        assert!(r.constrained.is_empty());
    }

    #[test]
    fn upper_triangular() {
        let ut2 = zoo::upper_triangular(2);
        let r = verify_cocharacter_vanishing(&ut2, &HActionData::trivial(&ut2), 5).unwrap();
        assert_eq!((r.d, r.p), (2, 2));
        assert!(r.constrained.contains(&Partition::new(vec![2, 1, 1, 1]).unwrap()));
        assert!(!r.constrained.contains(&Partition::new(vec![3, 1, 1]).unwrap()));
    }
}
