//! Finite-dimensional associative algebras given by structure constants.

mod decompose;
mod quotient;
mod radical;
mod section;

pub use decompose::{center, minimal_polynomial, rational_roots, simple_decomposition, SemisimpleDecomposition};
pub use quotient::Quotient;
pub use radical::{jacobson_radical, RadicalData};
pub use section::{lift_idempotent, matrix_units, wedderburn_section, Section};

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{Matrix, Subspace};

/// Coordinates of an algebra element in the structure-constant basis.
pub type Element = Vec<Scalar>;

/// An associative algebra over the rationals, `e_i * e_j = Σ_k c_ijk e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    /// Sparse product table indexed by `i * dim + j`, sorted by `k`.
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Element>,
}

impl Algebra {
    /// Builds and validates an algebra: the constants must be associative and
    /// a declared unit must act as the identity.
    pub fn new(
        labels: Vec<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Element>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(labels, constants, unit)?;
        alg.check_associativity()?;
        alg.check_unit()?;
        Ok(alg)
    }

    /// Builds an algebra without checking associativity or the unit; only
    /// index ranges are validated. Repeated `(i, j, k)` entries accumulate.
    pub fn new_unchecked(
        labels: Vec<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<Element>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut dense: Vec<Vec<Scalar>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Validation(format!(
                    "structure constant ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                *slot = scalar::zeros(dim);
            }
            slot[k] += c;
        }
        let products = dense
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        if let Some(u) = &unit {
            check_dim(dim, u.len())?;
        }
        Ok(Self {
            labels,
            products,
            unit,
        })
    }

    /// Labels `e0, e1, ...`.
    pub fn default_labels(dim: usize) -> Vec<String> {
        (0..dim).map(|i| format!("e{i}")).collect()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `e11 + 2 e12 - 1/2 e21`, or `0`.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (label, c) in self.labels.iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&scalar::format(&mag));
                out.push(' ');
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    /// Nonzero constants `(i, j, k, c)` in lexicographic order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let dim = self.dim();
        self.products
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / dim, ij % dim, *k, c)))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        scalar::unit_vector(self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        scalar::zeros(self.dim())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Element> {
        check_dim(self.dim(), a.len())?;
        check_dim(self.dim(), b.len())?;
        Ok(self.mul(a, b))
    }

    /// `multiply` without dimension checks.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let dim = self.dim();
        let mut out = scalar::zeros(dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = &self.products[i * dim + j];
                if prod.is_empty() {
                    continue;
                }
                let c = ai * bj;
                for (k, ck) in prod {
                    out[*k] += &c * ck;
                }
            }
        }
        out
    }

    /// Reports the first triple in lexicographic order where
    /// `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.dim();
        let basis: Vec<Element> = (0..n).map(|i| self.basis_element(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&basis[i], &basis[j]);
                for k in 0..n {
                    let left = self.mul(&ij, &basis[k]);
                    let jk = self.mul(&basis[j], &basis[k]);
                    let right = self.mul(&basis[i], &jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        let Some(u) = &self.unit else {
            return Ok(());
        };
        for i in 0..self.dim() {
            let e = self.basis_element(i);
            if self.mul(u, &e) != e || self.mul(&e, u) != e {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    /// Solves for a two-sided unit; `None` if the algebra has none.
    pub fn find_unit(&self) -> Option<Element> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        let n = self.dim();
        if n == 0 {
            return Some(Vec::new());
        }
        // Unknown u: u e_i = e_i and e_i u = e_i, linear in u.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            let left = self.right_mult_matrix(&self.basis_element(i));
            let right = self.left_mult_matrix(&self.basis_element(i));
            for m in [left, right] {
                for r in 0..n {
                    rows.push(m.row(r).to_vec());
                    rhs.push(if r == i { scalar::one() } else { scalar::zero() });
                }
            }
        }
        Matrix::from_rows(rows).solve(&rhs).ok().flatten()
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Element> = (0..n).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Matrix::from_columns(&cols, n)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Element> = (0..n).map(|j| self.mul(&self.basis_element(j), a)).collect();
        Matrix::from_columns(&cols, n)
    }

    /// `span{ u v }` for `u ∈ U`, `v ∈ V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), u.ambient())?;
        u.product(v, |a, b| self.mul(a, b))
    }

    /// `S·A⁺ = S·A + S`.
    pub fn times_unital_hull(&self, s: &Subspace) -> Result<Subspace> {
        let full = Subspace::full(self.dim());
        self.subspace_product(s, &full)?.sum(s)
    }

    /// Whether `W` is a two-sided ideal.
    pub fn is_ideal(&self, w: &Subspace) -> Result<bool> {
        let full = Subspace::full(self.dim());
        Ok(w.contains_subspace(&self.subspace_product(&full, w)?)?
            && w.contains_subspace(&self.subspace_product(w, &full)?)?)
    }

    /// Smallest two-sided ideal containing the given vectors.
    pub fn ideal_generated(&self, gens: &[Element]) -> Subspace {
        let n = self.dim();
        let basis: Vec<Element> = (0..n).map(|i| self.basis_element(i)).collect();
        closure(n, gens.to_vec(), |v| {
            basis
                .iter()
                .flat_map(|b| [self.mul(b, v), self.mul(v, b)])
                .collect()
        })
    }

    pub fn is_nilpotent(&self) -> bool {
        let full = Subspace::full(self.dim());
        let mut power = full.clone();
        for _ in 0..=self.dim() {
            if power.is_zero() {
                return true;
            }
            power = self.subspace_product(&power, &full).expect("same ambient");
        }
        power.is_zero()
    }

    /// Integer power `a^k`, `k >= 1`.
    pub fn pow(&self, a: &[Scalar], k: usize) -> Element {
        assert!(k >= 1);
        let mut acc = a.to_vec();
        for _ in 1..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// Smallest subspace containing `seeds` and closed under `step`, computed by
/// a worklist over newly added basis vectors.
pub(crate) fn closure<S>(ambient: usize, seeds: Vec<Element>, mut step: S) -> Subspace
where
    S: FnMut(&[Scalar]) -> Vec<Element>,
{
    use crate::linalg::{Echelon, Rationals};
    let mut ech = Echelon::new(Rationals, ambient);
    let mut queue: Vec<Element> = Vec::new();
    for s in seeds {
        if ech.insert(s.clone()) {
            queue.push(s);
        }
    }
    while let Some(v) = queue.pop() {
        for w in step(&v) {
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Subspace::span(ambient, ech.rows().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use crate::zoo;

    #[test]
    fn element_formatting() {
        use crate::linalg::scalar::frac;
        let m2 = zoo::matrix_algebra(2);
        assert_eq!(m2.format_element(&[int(1), int(0), int(-2), frac(1, 2)]), "e11 - 2 e21 + 1/2 e22");
        assert_eq!(m2.format_element(&[int(-1), int(0), int(0), int(0)]), "-e11");
        assert_eq!(m2.format_element(&m2.zero()), "0");
    }

    #[test]
    fn matrix_unit_products() {
        let m2 = zoo::matrix_algebra(2);
        // basis e11, e12, e21, e22
        let e11 = m2.basis_element(0);
        let e12 = m2.basis_element(1);
        assert_eq!(m2.multiply(&e11, &e12).unwrap(), e12);
        assert!(scalar::is_zero_vec(&m2.multiply(&e12, &e12).unwrap()));
        assert!(m2.multiply(&e11, &[int(1)]).is_err());
    }

    #[test]
    fn truncated_polynomial_square() {
        let nil = zoo::truncated_polynomials(3);
        let x = nil.basis_element(0);
        assert_eq!(nil.mul(&x, &x), nil.basis_element(1));
        assert!(nil.is_nilpotent());
    }

    #[test]
    fn associativity_violation_is_reported() {
        assert!(zoo::matrix_algebra(2).check_associativity().is_ok());
        // Redefine e11 * e12 := e21.
        let m2 = zoo::matrix_algebra(2);
        let constants: Vec<_> = m2
            .structure_constants()
            .map(|(i, j, k, c)| {
                if (i, j) == (0, 1) {
                    (i, j, 2, c.clone())
                } else {
                    (i, j, k, c.clone())
                }
            })
            .collect();
        let broken = Algebra::new_unchecked(m2.labels().to_vec(), constants, None).unwrap();
        // (e11 e11) e12 = e21 but e11 (e11 e12) = e11 e21 = 0.
        assert_eq!(broken.check_associativity(), Err(Error::NotAssociative(0, 0, 1)));
        let null = Algebra::new(vec!["z".into()], [], None).unwrap();
        assert!(null.check_associativity().is_ok());
    }

    #[test]
    fn unit_is_found() {
        let ut2 = zoo::upper_triangular(2);
        let unit = Algebra::new_unchecked(ut2.labels().to_vec(), ut2.structure_constants().map(|(i, j, k, c)| (i, j, k, c.clone())), None)
            .unwrap()
            .find_unit()
            .unwrap();
        assert_eq!(Some(&unit), ut2.unit());
        assert!(zoo::truncated_polynomials(3).find_unit().is_none());
    }
}
