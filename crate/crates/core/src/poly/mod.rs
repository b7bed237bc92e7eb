//! Multilinear H-polynomials: the spaces `P^H_n`, evaluation, the `S_n`
//! action and alternation.

mod text;

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::action::HActionData;
use crate::algebra::{Algebra, Element};
use crate::error::{check_dim, Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::symmetric::{factorial, Permutation};

/// `x^{γ_{ops[0]}}_{σ(1)} x^{γ_{ops[1]}}_{σ(2)} ⋯`: position `k` carries the
/// variable `sigma(k)` (zero-based) with operator `ops[k]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HMonomial {
    pub sigma: Permutation,
    pub ops: Vec<usize>,
}

impl HMonomial {
    pub fn new(sigma: Permutation, ops: Vec<usize>) -> Result<Self> {
        check_dim(sigma.len(), ops.len())?;
        Ok(Self { sigma, ops })
    }

    /// `x_1 x_2 ⋯ x_n` without operators.
    pub fn plain(n: usize) -> Self {
        Self {
            sigma: Permutation::identity(n),
            ops: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.ops.len()
    }

    /// Relabels variable `i` as `τ(i)`.
    pub fn sn_act(&self, tau: &Permutation) -> HMonomial {
        HMonomial {
            sigma: tau.compose(&self.sigma),
            ops: self.ops.clone(),
        }
    }
}

/// Size of `P^H_n`: `m^n n!`.
pub fn basis_size(n: usize, m: usize) -> u128 {
    (m as u128).saturating_pow(n as u32).saturating_mul(factorial(n))
}

pub const DEFAULT_BASIS_LIMIT: u128 = 1_000_000;

/// The monomial basis of `P^H_n` in canonical order: permutations in
/// lexicographic order, then operator vectors lexicographically.
pub fn enumerate_basis(n: usize, m: usize, limit: u128) -> Result<Vec<HMonomial>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("P^H_n needs n >= 1 and m >= 1".into()));
    }
    let size = basis_size(n, m);
    if size > limit {
        return Err(Error::SizeLimit {
            what: "monomials m^n n!",
            size,
            limit,
        });
    }
    let ops_count = m.pow(n as u32);
    let mut out = Vec::with_capacity(size as usize);
    for sigma in Permutation::all(n) {
        for code in 0..ops_count {
            let mut ops = vec![0; n];
            let mut c = code;
            for k in (0..n).rev() {
                ops[k] = c % m;
                c /= m;
            }
            out.push(HMonomial {
                sigma: sigma.clone(),
                ops,
            });
        }
    }
    Ok(out)
}

/// An element of `P^H_n` with exact coefficients; `m = dim ζ(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolynomial {
    n: usize,
    m: usize,
    terms: BTreeMap<HMonomial, Scalar>,
}

impl HPolynomial {
    pub fn zero(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: usize, mono: HMonomial) -> Result<Self> {
        let mut f = Self::zero(mono.n(), m);
        f.add_term(mono, scalar::one())?;
        Ok(f)
    }

    pub fn from_terms(n: usize, m: usize, terms: impl IntoIterator<Item = (HMonomial, Scalar)>) -> Result<Self> {
        let mut f = Self::zero(n, m);
        for (mono, c) in terms {
            f.add_term(mono, c)?;
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<HMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: HMonomial, c: Scalar) -> Result<()> {
        check_dim(self.n, mono.n())?;
        if let Some(&bad) = mono.ops.iter().find(|&&o| o >= self.m) {
            return Err(Error::InvalidArgument(format!(
                "operator index {bad} out of range for m = {}",
                self.m
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
        Ok(())
    }

    pub fn add(&self, other: &HPolynomial) -> Result<HPolynomial> {
        check_dim(self.n, other.n)?;
        check_dim(self.m, other.m)?;
        let mut f = self.clone();
        for (mono, c) in &other.terms {
            f.add_term(mono.clone(), c.clone())?;
        }
        Ok(f)
    }

    pub fn sub(&self, other: &HPolynomial) -> Result<HPolynomial> {
        self.add(&other.scale(&-scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> HPolynomial {
        if c.is_zero() {
            return Self::zero(self.n, self.m);
        }
        HPolynomial {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Renames the variables by `τ`; `(τ_1 τ_2) f = τ_1 (τ_2 f)`.
    pub fn sn_act(&self, tau: &Permutation) -> Result<HPolynomial> {
        check_dim(self.n, tau.len())?;
        Ok(HPolynomial {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.sn_act(tau), v.clone())).collect(),
        })
    }

    /// `Σ_{τ ∈ Sym(X)} sign(τ) τ f` for a set `X` of zero-based variables.
    pub fn alternate(&self, set: &[usize]) -> Result<HPolynomial> {
        let set = self.check_set(set)?;
        let mut out = Self::zero(self.n, self.m);
        for local in Permutation::all(set.len()) {
            let mut images: Vec<usize> = (0..self.n).collect();
            for (a, &x) in set.iter().enumerate() {
                images[x] = set[local.apply(a)];
            }
            let tau = Permutation::new(images)?;
            let term = self.sn_act(&tau)?.scale(&scalar::int(tau.sign()));
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Whether every transposition of two variables of `X` negates `f`.
    pub fn is_alternating_in(&self, set: &[usize]) -> Result<bool> {
        let set = self.check_set(set)?;
        let neg = self.scale(&-scalar::one());
        for w in set.windows(2) {
            if self.sn_act(&Permutation::transposition(self.n, w[0], w[1]))? != neg {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_set(&self, set: &[usize]) -> Result<Vec<usize>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != set.len() || s.last().is_some_and(|&x| x >= self.n) {
            return Err(Error::InvalidArgument(format!(
                "{set:?} is not a set of variables among {} variables",
                self.n
            )));
        }
        Ok(s)
    }
}

/// `γ_k(e_i)` for every basis operator and basis vector.
pub(crate) fn operator_images(alg: &Algebra, act: &HActionData) -> Vec<Vec<Element>> {
    act.zeta()
        .iter()
        .map(|z| (0..alg.dim()).map(|i| z.matrix.column(i)).collect())
        .collect()
}

fn evaluate_with(f: &HPolynomial, alg: &Algebra, image: impl Fn(usize, usize) -> Element) -> Element {
    let mut out = alg.zero();
    for (mono, c) in &f.terms {
        let mut prod = image(mono.ops[0], mono.sigma.apply(0));
        for k in 1..f.n {
            if scalar::is_zero_vec(&prod) {
                break;
            }
            prod = alg.mul(&prod, &image(mono.ops[k], mono.sigma.apply(k)));
        }
        scalar::add_scaled(&mut out, c, &prod);
    }
    out
}

/// Substitutes `x_i^{γ_j} ↦ γ_j(a_i)` and multiplies left to right.
pub fn evaluate(f: &HPolynomial, args: &[Element], alg: &Algebra, act: &HActionData) -> Result<Element> {
    check_dim(f.n, args.len())?;
    check_dim(act.len(), f.m)?;
    check_dim(alg.dim(), act.algebra_dim())?;
    for a in args {
        check_dim(alg.dim(), a.len())?;
    }
    Ok(evaluate_with(f, alg, |op, var| act.apply(op, args[var].as_slice())))
}

/// Whether `f` vanishes on every tuple of basis elements, which by
/// multilinearity is the same as vanishing on all of `A`.
pub fn is_identity(f: &HPolynomial, alg: &Algebra, act: &HActionData) -> Result<bool> {
    check_dim(act.len(), f.m)?;
    check_dim(alg.dim(), act.algebra_dim())?;
    let dim = alg.dim();
    if f.is_zero() || dim == 0 {
        return Ok(true);
    }
    let images = operator_images(alg, act);
    let tuples = (dim as u128).checked_pow(f.n as u32).ok_or(Error::SizeLimit {
        what: "basis tuples dim^n",
        size: u128::MAX,
        limit: u64::MAX as u128,
    })?;
    let nonzero = (0..tuples as u64).into_par_iter().any(|code| {
        let mut t = vec![0usize; f.n];
        let mut c = code as usize;
        for k in (0..f.n).rev() {
            t[k] = c % dim;
            c /= dim;
        }
        let v = evaluate_with(f, alg, |op, var| images[op][t[var]].clone());
        !scalar::is_zero_vec(&v)
    });
    Ok(!nonzero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::operator_algebra_basis;
    use crate::linalg::scalar::int;
    use crate::zoo;

    fn commutator(m: usize) -> HPolynomial {
        let x1x2 = HMonomial::plain(2);
        let x2x1 = x1x2.sn_act(&Permutation::transposition(2, 0, 1));
        HPolynomial::from_terms(2, m, [(x1x2, int(1)), (x2x1, int(-1))]).unwrap()
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(enumerate_basis(1, 1, DEFAULT_BASIS_LIMIT).unwrap(), vec![HMonomial::plain(1)]);
        let b = enumerate_basis(2, 1, DEFAULT_BASIS_LIMIT).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[1].sigma, Permutation::transposition(2, 0, 1));
        let b = enumerate_basis(2, 2, DEFAULT_BASIS_LIMIT).unwrap();
        assert_eq!(b.len(), 8);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(enumerate_basis(8, 6, DEFAULT_BASIS_LIMIT), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn evaluation() {
        let m2 = zoo::matrix_algebra(2);
        let triv = HActionData::trivial(&m2);
        let e11 = m2.basis_element(0);
        let e12 = m2.basis_element(1);
        let x1x2 = HPolynomial::from_monomial(1, HMonomial::plain(2)).unwrap();
        assert_eq!(evaluate(&x1x2, &[e11.clone(), e12.clone()], &m2, &triv).unwrap(), e12);
        assert_eq!(evaluate(&commutator(1), &[e11, e12.clone()], &m2, &triv).unwrap(), e12);

        let t = operator_algebra_basis(&m2, zoo::transpose_generators(2)).unwrap();
        let x1t = HPolynomial::from_monomial(
            2,
            HMonomial::new(Permutation::identity(1), vec![1]).unwrap(),
        )
        .unwrap();
        assert_eq!(evaluate(&x1t, &[e12], &m2, &t).unwrap(), m2.basis_element(2));
    }

    #[test]
    fn relabeling() {
        let f = HPolynomial::from_monomial(1, HMonomial::plain(2)).unwrap();
        let swapped = f.sn_act(&Permutation::transposition(2, 0, 1)).unwrap();
        assert_eq!(
            swapped.terms().keys().next().unwrap().sigma,
            Permutation::transposition(2, 0, 1)
        );
        assert_eq!(f.sn_act(&Permutation::identity(2)).unwrap(), f);
        // (1 2 3) · x1^γ x2 x3 = x2^γ x3 x1
        let g = HPolynomial::from_monomial(2, HMonomial::new(Permutation::identity(3), vec![1, 0, 0]).unwrap())
            .unwrap();
        let c = Permutation::cycle(3, &[0, 1, 2]);
        let h = g.sn_act(&c).unwrap();
        let mono = h.terms().keys().next().unwrap();
        assert_eq!(mono.sigma.images(), &[1, 2, 0]);
        assert_eq!(mono.ops, vec![1, 0, 0]);
    }

    #[test]
    fn alternation() {
        let f = HPolynomial::from_monomial(1, HMonomial::plain(2)).unwrap();
        assert_eq!(f.alternate(&[0, 1]).unwrap(), commutator(1));
        let g = HPolynomial::from_monomial(1, HMonomial::plain(3)).unwrap();
        let a = g.alternate(&[0, 2]).unwrap();
        assert_eq!(a.alternate(&[0, 2]).unwrap(), a.scale(&int(2)));
        assert!(a.is_alternating_in(&[0, 2]).unwrap());
        assert!(!a.is_alternating_in(&[0, 1]).unwrap());
        let m2 = zoo::matrix_algebra(2);
        let triv = HActionData::trivial(&m2);
        let x = m2.basis_element(1);
        let y = m2.basis_element(2);
        let v = evaluate(&a, &[x.clone(), y, x], &m2, &triv).unwrap();
        assert!(scalar::is_zero_vec(&v));
    }

    #[test]
    fn identities() {
        let q = zoo::point();
        assert!(is_identity(&commutator(1), &q, &HActionData::trivial(&q)).unwrap());
        let m2 = zoo::matrix_algebra(2);
        assert!(!is_identity(&commutator(1), &m2, &HActionData::trivial(&m2)).unwrap());
        let nil = zoo::truncated_polynomials(3);
        let cube = HPolynomial::from_monomial(1, HMonomial::plain(3)).unwrap();
        assert!(is_identity(&cube, &nil, &HActionData::trivial(&nil)).unwrap());
    }
}
