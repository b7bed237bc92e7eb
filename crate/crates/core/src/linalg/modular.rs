//! Multimodular rank computation.
//!
//! Ranks are computed modulo a fixed, documented sequence of primes just
//! below `2^31`. Reduction modulo `p` can only lower the rank, so within a
//! set of primes the largest modular rank is kept. A result is certified
//! when two disjoint prime sets produce the same answer; otherwise the
//! caller falls back to exact arithmetic.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::field::{Field, PrimeField};
use super::matrix::{bareiss_rank_integer, Matrix};

/// The fixed prime sequence: the six largest primes below `2^31`, in
/// decreasing order.
pub const PRIMES: [u64; 6] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
];

/// Work that can be carried out over any of the fixed prime fields.
pub trait PrimeJob: Sync {
    type Output: Send;
    fn run<F: Field<Elem = u64> + Clone>(&self, field: F) -> Self::Output;
}

/// Runs `job` over the field `Z / PRIMES[index]`.
pub fn run_with_prime<J: PrimeJob>(job: &J, index: usize) -> J::Output {
    match index {
        0 => job.run(PrimeField::<{ PRIMES[0] }>),
        1 => job.run(PrimeField::<{ PRIMES[1] }>),
        2 => job.run(PrimeField::<{ PRIMES[2] }>),
        3 => job.run(PrimeField::<{ PRIMES[3] }>),
        4 => job.run(PrimeField::<{ PRIMES[4] }>),
        5 => job.run(PrimeField::<{ PRIMES[5] }>),
        _ => panic!("prime index {index} out of range"),
    }
}

/// Two disjoint sets of indices into [`PRIMES`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSets {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl PrimeSets {
    /// `{p0, p1}` against `{p2, p3}`.
    pub fn standard() -> Self {
        Self {
            first: vec![0, 1],
            second: vec![2, 3],
        }
    }

    /// `{p0}` against `{p1}`; used for the large evaluation problems.
    pub fn single() -> Self {
        Self {
            first: vec![0],
            second: vec![1],
        }
    }
}

/// Outcome of a certified multimodular computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certified<T> {
    /// Both prime sets produced this value.
    Agreed(T),
    /// The sets disagreed (or had no usable prime); exact fallback needed.
    Disagreed,
}

/// Evaluates `eval` on every prime of both sets (in parallel) and compares
/// the best value of each set, "best" meaning largest `rank_of`. A prime for
/// which `eval` returns `None` (bad reduction) is ignored.
pub fn certify<T, E, R>(sets: &PrimeSets, eval: E, rank_of: R) -> Certified<T>
where
    T: PartialEq + Send,
    E: Fn(usize) -> Option<T> + Sync,
    R: Fn(&T) -> usize,
{
    let all: Vec<usize> = sets.first.iter().chain(&sets.second).copied().collect();
    let mut results: Vec<(usize, Option<T>)> =
        all.par_iter().map(|&i| (i, eval(i))).collect();
    let mut best = |set: &[usize]| -> Option<T> {
        let mut chosen: Option<T> = None;
        for (i, r) in results.iter_mut() {
            if !set.contains(i) {
                continue;
            }
            if let Some(v) = r.take() {
                let better = chosen.as_ref().map_or(true, |c| rank_of(&v) > rank_of(c));
                if better {
                    chosen = Some(v);
                }
            }
        }
        chosen
    };
    let a = best(&sets.first);
    let b = best(&sets.second);
    match (a, b) {
        (Some(a), Some(b)) if a == b => Certified::Agreed(a),
        _ => Certified::Disagreed,
    }
}

/// How a multimodular rank was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankCertificate {
    /// Two disjoint prime sets produced the same value.
    PrimeAgreement,
    /// Largest modular rank over all primes, whose product exceeds the
    /// Hadamard bound on every minor.
    HadamardBound,
    BareissFallback,
    /// Elimination over the rationals.
    ExactFallback,
}

impl RankCertificate {
    pub fn tag(self) -> &'static str {
        match self {
            RankCertificate::PrimeAgreement => "prime-agreement",
            RankCertificate::HadamardBound => "hadamard-bound",
            RankCertificate::BareissFallback => "bareiss-fallback",
            RankCertificate::ExactFallback => "exact-fallback",
        }
    }
}

/// Each row rescaled to a primitive integer vector. The rank is unchanged,
/// and no nonzero row can vanish modulo a prime.
fn primitive_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if gcd.is_zero() {
                return ints;
            }
            ints.into_iter().map(|x| x / &gcd).collect()
        })
        .collect()
}

/// Square of a bound on `|det|` of every square submatrix: the product of
/// the `min(rows, cols)` largest squared row norms, or the same over
/// columns if smaller.
fn hadamard_bound_squared(a: &[Vec<BigInt>], cols: usize) -> BigInt {
    let k = a.len().min(cols);
    let top = |mut norms: Vec<BigInt>| -> BigInt {
        norms.sort_unstable_by(|x, y| y.cmp(x));
        norms.into_iter().take(k).filter(|x| !x.is_zero()).product()
    };
    let row_norms = a.iter().map(|row| row.iter().map(|x| x * x).sum()).collect();
    let col_norms = (0..cols).map(|c| a.iter().map(|row| &row[c] * &row[c]).sum()).collect();
    top(row_norms).min(top(col_norms))
}

/// Most primes [`multimodular_rank`] will use before switching to
/// fraction-free elimination.
pub const MAX_RANK_PRIMES: usize = 1024;

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n > 1;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The largest primes below `2^31` in decreasing order; [`PRIMES`] is the
/// first six of them.
pub fn prime_sequence(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let mut cache = CACHE
        .get_or_init(|| Mutex::new(PRIMES.to_vec()))
        .lock()
        .expect("prime cache lock");
    let mut next = *cache.last().expect("nonempty") - 2;
    while cache.len() < count {
        if is_prime(next) {
            cache.push(next);
        }
        next -= 2;
    }
    cache[..count].to_vec()
}

/// Rank of an integer matrix modulo a prime below `2^31`.
fn rank_mod(a: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let modulus = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.mod_floor(&modulus).to_u64().expect("reduced below p"))
                .collect()
        })
        .collect();
    let inverse = |x: u64| -> u64 {
        // x^(p-2) mod p
        let (mut base, mut exp, mut acc) = (x, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse(rows[rank][col]);
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&x| x * inv % p).collect();
        for row in rows[rank + 1..].iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                row[c] = (row[c] + p - f * pivot_row[c] % p) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank with the certificate that produced it.
///
/// Rows are first made primitive integer vectors. A rank drop modulo `p`
/// means `p` divides every maximal nonzero minor, so once the product of
/// the primes used exceeds the Hadamard bound the largest modular rank is
/// the true rank. Past [`MAX_RANK_PRIMES`] the rank comes from
/// fraction-free elimination instead.
pub fn multimodular_rank_certified(m: &Matrix) -> (usize, RankCertificate) {
    let mut a = primitive_rows(m);
    let bound = hadamard_bound_squared(&a, m.cols());
    // Every prime exceeds 2^30, so `count` of them multiply past the bound.
    let count = (bound.bits() / 60 + 1) as usize;
    if count > MAX_RANK_PRIMES {
        return (bareiss_rank_integer(&mut a, m.cols()), RankCertificate::BareissFallback);
    }
    let rank = prime_sequence(count)
        .par_iter()
        .map(|&p| rank_mod(&a, m.cols(), p))
        .max()
        .unwrap_or(0);
    (rank, RankCertificate::HadamardBound)
}

/// Exact rank of `m`, computed modulo word-sized primes when the Hadamard
/// bound allows it and by fraction-free elimination otherwise.
pub fn multimodular_rank(m: &Matrix) -> usize {
    multimodular_rank_certified(m).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar;
    use crate::linalg::Scalar;

    #[test]
    fn primes_are_prime() {
        for p in PRIMES {
            assert!(p < 1 << 31);
            let mut d = 2u64;
            while d * d <= p {
                assert!(p % d != 0, "{p} divisible by {d}");
                d += 1;
            }
        }
    }

    #[test]
    fn sequence_extends_the_fixed_primes() {
        let seq = prime_sequence(40);
        assert_eq!(seq[..6], PRIMES);
        assert!(seq.windows(2).all(|w| w[0] > w[1]));
        assert!(seq.iter().all(|&p| is_prime(p) && p > 1 << 30));
    }

    #[test]
    fn identity_rank() {
        assert_eq!(multimodular_rank(&Matrix::identity(100)), 100);
    }

    #[test]
    fn rank_drop_mod_first_prime_is_detected() {
        // det = p0, so the rank drops only modulo the first prime.
        let p0 = PRIMES[0] as i64;
        let m = Matrix::from_i64(&[vec![1, 1], vec![1, 1 + p0]]);
        assert_eq!(multimodular_rank_certified(&m), (2, RankCertificate::HadamardBound));
    }

    #[test]
    fn rank_drop_modulo_many_primes_is_detected() {
        let p: BigInt = PRIMES[..5].iter().map(|&p| BigInt::from(p)).product();
        let one = scalar::int(1);
        let m = Matrix::from_rows(vec![
            vec![one.clone(), one.clone()],
            vec![one.clone(), Scalar::from_integer(p + 1)],
        ]);
        assert_eq!(multimodular_rank_certified(&m), (2, RankCertificate::HadamardBound));
    }

    #[test]
    fn huge_minors_fall_back() {
        let p: BigInt = prime_sequence(MAX_RANK_PRIMES + 1).iter().map(|&p| BigInt::from(p)).product();
        let one = scalar::int(1);
        let m = Matrix::from_rows(vec![
            vec![one.clone(), one.clone()],
            vec![one.clone(), Scalar::from_integer(p + 1)],
        ]);
        assert_eq!(multimodular_rank_certified(&m), (2, RankCertificate::BareissFallback));
    }

    #[test]
    fn rows_divisible_by_every_prime_are_rescaled() {
        let all: i128 = PRIMES[..4].iter().map(|&p| p as i128).product();
        let big = Scalar::from_integer(BigInt::from(all));
        let m = Matrix::from_rows(vec![
            vec![big.clone(), big.clone() * scalar::int(3)],
            vec![scalar::int(0), scalar::frac(1, 2)],
        ]);
        assert_eq!(multimodular_rank_certified(&m), (2, RankCertificate::HadamardBound));
    }

    #[test]
    fn denominator_divisible_by_prime_skips_it() {
        let m = Matrix::from_rows(vec![vec![
            scalar::Scalar::new(1.into(), (PRIMES[0]).into()),
            scalar::int(0),
        ]]);
        assert_eq!(multimodular_rank(&m), 1);
    }
}
