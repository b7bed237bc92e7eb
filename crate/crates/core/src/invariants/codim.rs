use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::image::{compute, Limits, Problem, Requests, Summary};
use crate::action::HActionData;
use crate::algebra::Algebra;
use crate::error::{check_dim, Error, Result};
use crate::linalg::modular::{certify, run_with_prime, Certified, PrimeJob, PrimeSets};
use crate::linalg::{Field, Matrix, RankCertificate, Rationals, Scalar};
use crate::poly::{enumerate_basis, HMonomial, HPolynomial};
use crate::symmetric::{character_table, factorial, GroupAlgebraElement, Partition, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Rank,
    Cocharacter,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Rank => "rank",
            Method::Cocharacter => "cocharacter",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimOptions {
    pub limits: Limits,
    pub primes: PrimeSets,
    /// Also return a basis of the multilinear identities.
    pub identity_basis: bool,
}

impl Default for CodimOptions {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            primes: PrimeSets::standard(),
            identity_basis: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimensionResult {
    pub n: usize,
    pub c: u64,
    pub method: Method,
    pub certificate: RankCertificate,
    pub identity_basis: Option<Vec<HPolynomial>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterResult {
    pub n: usize,
    /// Every partition of `n` in reverse lexicographic order, zeros included.
    pub multiplicities: Vec<(Partition, u64)>,
    pub colength: u64,
    /// `Σ m(λ) f^λ`.
    pub codimension: u64,
    pub certificate: RankCertificate,
}

impl CocharacterResult {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities
            .iter()
            .find(|(p, _)| p == lambda)
            .map_or(0, |(_, m)| *m)
    }
}

struct ImageJob<'a> {
    prob: &'a Problem,
    req: &'a Requests,
}

impl PrimeJob for ImageJob<'_> {
    type Output = Option<Summary>;

    fn run<F: Field<Elem = u64> + Clone>(&self, field: F) -> Option<Summary> {
        compute(field, self.prob, self.req)
    }
}

/// Rank of the evaluation problem plus the requested traces and checks,
/// certified across two prime sets with an exact fallback.
pub(crate) fn analyze(
    alg: &Algebra,
    act: &HActionData,
    n: usize,
    opts: &CodimOptions,
    req: &Requests,
) -> Result<(Summary, RankCertificate)> {
    check_dim(alg.dim(), act.algebra_dim())?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    opts.limits.check(n, act.len(), alg.dim())?;
    let prob = Problem::new(alg, act, n);
    let job = ImageJob { prob: &prob, req };
    match certify(&opts.primes, |i| run_with_prime(&job, i), |s| s.rank) {
        Certified::Agreed(s) => Ok((s, RankCertificate::PrimeAgreement)),
        Certified::Disagreed => {
            let s = compute(Rationals, &prob, req).expect("rationals accept every constant");
            Ok((s, RankCertificate::ExactFallback))
        }
    }
}

/// `c^H_n`: the dimension of `P^H_n` modulo the identities of `A`.
pub fn codimension_rank(alg: &Algebra, act: &HActionData, n: usize) -> Result<CodimensionResult> {
    codimension_with(alg, act, n, &CodimOptions::default())
}

pub fn codimension_with(
    alg: &Algebra,
    act: &HActionData,
    n: usize,
    opts: &CodimOptions,
) -> Result<CodimensionResult> {
    let (s, certificate) = analyze(alg, act, n, opts, &Requests::default())?;
    let identity_basis = if opts.identity_basis {
        let basis = identity_basis(alg, act, n, &opts.limits)?;
        let total = crate::poly::basis_size(n, act.len());
        if basis.len() as u128 + s.rank as u128 != total {
            return Err(Error::Violation(format!(
                "identity basis has {} elements but the codimension is {} out of {total}",
                basis.len(),
                s.rank
            )));
        }
        Some(basis)
    } else {
        None
    };
    Ok(CodimensionResult {
        n,
        c: s.rank as u64,
        method: Method::Rank,
        certificate,
        identity_basis,
    })
}

/// The literal evaluation matrix: one row per canonical monomial, one column
/// per (basis tuple, output coordinate), tuple entries most significant first.
pub fn evaluation_matrix(
    alg: &Algebra,
    act: &HActionData,
    n: usize,
    limits: &Limits,
) -> Result<(Vec<HMonomial>, Matrix)> {
    check_dim(alg.dim(), act.algebra_dim())?;
    limits.check(n, act.len(), alg.dim())?;
    let dim = alg.dim();
    let monomials = enumerate_basis(n, act.len(), limits.max_rows)?;
    let images = crate::poly::operator_images(alg, act);
    let tuples = dim.pow(n as u32);
    let rows: Vec<Vec<Scalar>> = monomials
        .iter()
        .map(|mono| {
            let mut row = Vec::with_capacity(tuples * dim);
            for code in 0..tuples {
                let mut t = vec![0; n];
                let mut c = code;
                for k in (0..n).rev() {
                    t[k] = c % dim;
                    c /= dim;
                }
                let mut prod = images[mono.ops[0]][t[mono.sigma.apply(0)]].clone();
                for k in 1..n {
                    prod = alg.mul(&prod, &images[mono.ops[k]][t[mono.sigma.apply(k)]]);
                }
                row.extend(prod);
            }
            row
        })
        .collect();
    let m = if rows.is_empty() {
        Matrix::zeros(0, tuples * dim)
    } else {
        Matrix::from_rows(rows)
    };
    Ok((monomials, m))
}

/// A basis of `P^H_n ∩ Id^H(A)`, read off the left kernel of the evaluation
/// matrix.
pub fn identity_basis(alg: &Algebra, act: &HActionData, n: usize, limits: &Limits) -> Result<Vec<HPolynomial>> {
    let (monomials, m) = evaluation_matrix(alg, act, n, limits)?;
    // Columns that vanish identically do not constrain the kernel.
    let keep: Vec<usize> = (0..m.cols())
        .filter(|&c| (0..m.rows()).any(|r| !m.get(r, c).is_zero()))
        .collect();
    let transposed = Matrix::from_rows(
        keep.iter()
            .map(|&c| m.column(c))
            .collect::<Vec<_>>(),
    );
    let kernel = if keep.is_empty() {
        (0..monomials.len())
            .map(|i| crate::linalg::scalar::unit_vector(monomials.len(), i))
            .collect()
    } else {
        transposed.kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            HPolynomial::from_terms(
                n,
                act.len(),
                monomials
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mono, c)| (mono.clone(), c)),
            )
        })
        .collect()
}

/// The multiplicities `m(A, H, λ)` of the irreducible characters in the
/// cocharacter of `P^H_n` modulo identities.
pub fn cocharacter_multiplicities(alg: &Algebra, act: &HActionData, n: usize) -> Result<CocharacterResult> {
    cocharacter_with(alg, act, n, &CodimOptions::default())
}

pub fn cocharacter_with(alg: &Algebra, act: &HActionData, n: usize, opts: &CodimOptions) -> Result<CocharacterResult> {
    let (res, _) = cocharacter_and_checks(alg, act, n, opts, Vec::new())?;
    Ok(res)
}

/// Cocharacter plus, for each supplied group algebra element, whether it
/// annihilates the quotient of `P^H_n` by the identities.
pub(crate) fn cocharacter_and_checks(
    alg: &Algebra,
    act: &HActionData,
    n: usize,
    opts: &CodimOptions,
    annihilators: Vec<GroupAlgebraElement>,
) -> Result<(CocharacterResult, Vec<bool>)> {
    let table = character_table(n);
    let req = Requests {
        traces: table
            .partitions
            .iter()
            .map(|mu| Permutation::of_cycle_type(mu.parts()))
            .collect(),
        annihilators,
    };
    let (s, certificate) = analyze(alg, act, n, opts, &req)?;
    let res = multiplicities_from_traces(n, &s.traces, s.rank as u64, certificate)?;
    Ok((res, s.annihilates))
}

/// Decomposes a class function given on `partitions(n)` into irreducibles.
fn multiplicities_from_traces(
    n: usize,
    traces: &[i64],
    rank: u64,
    certificate: RankCertificate,
) -> Result<CocharacterResult> {
    let table = character_table(n);
    let order = BigInt::from(factorial(n));
    let mut multiplicities = Vec::with_capacity(table.partitions.len());
    let mut colength = 0u64;
    let mut codimension = 0u128;
    for (lambda, chars) in table.partitions.iter().zip(&table.values) {
        let mut sum = BigInt::zero();
        for ((mu, &chi), &psi) in table.partitions.iter().zip(traces).zip(chars) {
            sum += BigInt::from(mu.class_size()) * BigInt::from(chi) * BigInt::from(psi);
        }
        let (q, r) = sum.div_rem(&order);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NonintegralMultiplicity {
                partition: lambda.to_string(),
                value: crate::linalg::scalar::format(&Scalar::new(sum, order.clone())),
            });
        }
        let m = q.to_u64().expect("multiplicity fits in u64");
        colength += m;
        codimension += m as u128 * lambda.dim_irreducible();
        multiplicities.push((lambda.clone(), m));
    }
    if codimension != rank as u128 {
        return Err(Error::Violation(format!(
            "Σ m(λ) f^λ = {codimension} differs from the rank {rank}"
        )));
    }
    Ok(CocharacterResult {
        n,
        multiplicities,
        colength,
        codimension: codimension as u64,
        certificate,
    })
}

/// `c^H_n` obtained from the cocharacter instead of the rank.
pub fn codimension_cocharacter(alg: &Algebra, act: &HActionData, n: usize) -> Result<CodimensionResult> {
    let res = cocharacter_multiplicities(alg, act, n)?;
    Ok(CodimensionResult {
        n,
        c: res.codimension,
        method: Method::Cocharacter,
        certificate: res.certificate,
        identity_basis: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::operator_algebra_basis;
    use crate::poly::is_identity;
    use crate::zoo;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn point_and_nil() {
        let pt = zoo::point();
        let triv = HActionData::trivial(&pt);
        for n in 1..=5 {
            assert_eq!(codimension_rank(&pt, &triv, n).unwrap().c, 1);
            let ch = cocharacter_multiplicities(&pt, &triv, n).unwrap();
            assert_eq!(ch.colength, 1);
            assert_eq!(ch.multiplicity(&p(&[n])), 1);
        }
        let nil = zoo::truncated_polynomials(3);
        let triv = HActionData::trivial(&nil);
        let c: Vec<u64> = (1..=5).map(|n| codimension_rank(&nil, &triv, n).unwrap().c).collect();
        assert_eq!(c, vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn upper_triangular_cocharacter() {
        let ut2 = zoo::upper_triangular(2);
        let triv = HActionData::trivial(&ut2);
        let ch = cocharacter_multiplicities(&ut2, &triv, 2).unwrap();
        assert_eq!(ch.multiplicity(&p(&[2])), 1);
        assert_eq!(ch.multiplicity(&p(&[1, 1])), 1);
        let ch = cocharacter_multiplicities(&ut2, &triv, 4).unwrap();
        assert_eq!(ch.codimension, 18);
    }

    #[test]
    fn identity_basis_is_identities() {
        let ut2 = zoo::upper_triangular(2);
        let triv = HActionData::trivial(&ut2);
        let opts = CodimOptions {
            identity_basis: true,
            ..CodimOptions::default()
        };
        let res = codimension_with(&ut2, &triv, 3, &opts).unwrap();
        let basis = res.identity_basis.unwrap();
        assert!(basis.is_empty());
        let res = codimension_with(&ut2, &triv, 4, &opts).unwrap();
        let basis = res.identity_basis.unwrap();
        assert_eq!(basis.len(), 24 - 18);
        for f in &basis {
            assert!(is_identity(f, &ut2, &triv).unwrap());
        }
    }

    #[test]
    fn literal_matrix_agrees_with_structured_rank() {
        let m2 = zoo::matrix_algebra(2);
        let t = operator_algebra_basis(&m2, zoo::transpose_generators(2)).unwrap();
        for n in 1..=2 {
            let (_, m) = evaluation_matrix(&m2, &t, n, &Limits::default()).unwrap();
            assert_eq!(m.rank() as u64, codimension_rank(&m2, &t, n).unwrap().c);
        }
    }

    #[test]
    fn single_prime_sets_and_limits() {
        let b = zoo::bahturin(2);
        let act = operator_algebra_basis(&b, zoo::bahturin_generators(2)).unwrap();
        let opts = CodimOptions {
            primes: PrimeSets::single(),
            ..CodimOptions::default()
        };
        let a = codimension_with(&b, &act, 2, &opts).unwrap();
        let b2 = codimension_rank(&b, &act, 2).unwrap();
        assert_eq!(a.c, b2.c);
        let tight = CodimOptions {
            limits: Limits {
                max_rows: 10,
                max_cols: 10,
            },
            ..CodimOptions::default()
        };
        assert!(matches!(codimension_with(&b, &act, 2, &tight), Err(Error::SizeLimit { .. })));
    }
}
