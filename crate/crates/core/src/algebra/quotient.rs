use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::Subspace;

/// `A/I` for a two-sided ideal `I`, realized on the coordinate complement of
/// `I`'s echelon pivots: quotient basis vector `t` is the class of
/// `e_{complement[t]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: Algebra,
    pub ideal: Subspace,
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn new(alg: &Algebra, ideal: &Subspace) -> Result<Self> {
        if !alg.is_ideal(ideal)? {
            return Err(Error::InvalidArgument(
                "quotient by a subspace that is not a two-sided ideal".into(),
            ));
        }
        let complement = ideal.free_columns();
        let labels = complement.iter().map(|&i| alg.labels()[i].clone()).collect();
        let project = |v: Element| -> Element {
            let r = ideal.reduce(&v);
            complement.iter().map(|&i| r[i].clone()).collect()
        };
        let mut constants = Vec::new();
        for (s, &i) in complement.iter().enumerate() {
            for (t, &j) in complement.iter().enumerate() {
                let prod = alg.mul(&alg.basis_element(i), &alg.basis_element(j));
                for (k, c) in project(prod).into_iter().enumerate() {
                    if !num_traits::Zero::is_zero(&c) {
                        constants.push((s, t, k, c));
                    }
                }
            }
        }
        let mut algebra = Algebra::new_unchecked(labels, constants, None)?;
        let unit = match alg.unit() {
            Some(u) => Some(project(u.clone())),
            None => algebra.find_unit(),
        };
        algebra.unit = unit;
        Ok(Self {
            algebra,
            ideal: ideal.clone(),
            complement,
        })
    }

    /// The projection `π: A → A/I`.
    pub fn project(&self, v: &[Scalar]) -> Element {
        let r = self.ideal.reduce(v);
        self.complement.iter().map(|&i| r[i].clone()).collect()
    }

    /// The canonical preimage of a quotient element, supported on the
    /// complement coordinates.
    pub fn lift(&self, q: &[Scalar]) -> Element {
        let mut v = scalar::zeros(self.ideal.ambient());
        for (c, &i) in q.iter().zip(&self.complement) {
            v[i] = c.clone();
        }
        v
    }

    /// Image in the quotient of a subspace of `A`.
    pub fn project_subspace(&self, w: &Subspace) -> Subspace {
        Subspace::span(
            self.complement.len(),
            w.basis().iter().map(|v| self.project(v)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::jacobson_radical;
    use crate::zoo;

    #[test]
    fn ut2_mod_radical_is_two_points() {
        let ut2 = zoo::upper_triangular(2);
        let j = jacobson_radical(&ut2).radical;
        let q = Quotient::new(&ut2, &j).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(q.complement, vec![0, 2]);
        let a = q.algebra.basis_element(0);
        let b = q.algebra.basis_element(1);
        assert_eq!(q.algebra.mul(&a, &a), a);
        assert!(scalar::is_zero_vec(&q.algebra.mul(&a, &b)));
        assert!(q.algebra.check_associativity().is_ok());
        assert_eq!(q.project(&ut2.basis_element(1)), scalar::zeros(2));
        assert_eq!(q.project(&q.lift(&b)), b);
    }

    #[test]
    fn non_ideal_is_rejected() {
        let m2 = zoo::matrix_algebra(2);
        let w = Subspace::span(4, [m2.basis_element(1)]);
        assert!(Quotient::new(&m2, &w).is_err());
    }
}
