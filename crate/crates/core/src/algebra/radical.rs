use num_traits::Zero;

use super::{Algebra, Element};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{Matrix, Subspace};

/// The Jacobson radical `J` and its nilpotency index `p`: the least `p`
/// with `J^p = 0`, so `p = 1` exactly when `J = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalData {
    pub radical: Subspace,
    pub nilpotency_index: usize,
}

/// Trace of left multiplication by `λ·1 + a` on the unital hull of
/// dimension `hull_dim`.
fn hull_trace(alg: &Algebra, hull_dim: usize, lambda: &Scalar, a: &[Scalar]) -> Scalar {
    let tr_a: Scalar = (0..alg.dim())
        .map(|j| alg.mul(a, &alg.basis_element(j))[j].clone())
        .sum();
    tr_a + lambda * Scalar::from_integer(hull_dim.into())
}

/// Dickson's criterion in characteristic zero: `J` is the radical of the
/// bilinear form `(x, y) ↦ Tr(L_{xy})` on the unital hull.
pub fn jacobson_radical(alg: &Algebra) -> RadicalData {
    let n = alg.dim();
    let formal_unit = !alg.has_unit();
    let hull_dim = if formal_unit { n + 1 } else { n };
    // Hull element k: basis e_k for k < n, the formal unit for k == n.
    let split = |k: usize| -> (Scalar, Element) {
        if k < n {
            (Scalar::zero(), alg.basis_element(k))
        } else {
            (scalar::one(), alg.zero())
        }
    };
    let mut gram = Matrix::zeros(hull_dim, hull_dim);
    for i in 0..hull_dim {
        let (li, ai) = split(i);
        for j in i..hull_dim {
            let (lj, aj) = split(j);
            // (li + ai)(lj + aj) = li lj + (li aj + lj ai + ai aj)
            let lambda = &li * &lj;
            let mut a = alg.mul(&ai, &aj);
            scalar::add_scaled(&mut a, &li, &aj);
            scalar::add_scaled(&mut a, &lj, &ai);
            let t = hull_trace(alg, hull_dim, &lambda, &a);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    let kernel = gram.kernel();
    let radical = Subspace::span(n, kernel.into_iter().map(|v| {
        debug_assert!(!formal_unit || v[n].is_zero(), "radical meets the formal unit");
        v[..n].to_vec()
    }));
    let nilpotency_index = nilpotency_index(alg, &radical);
    RadicalData {
        radical,
        nilpotency_index,
    }
}

/// Least `p >= 1` with `I^p = 0`. Panics if `I` is not nilpotent.
pub(crate) fn nilpotency_index(alg: &Algebra, ideal: &Subspace) -> usize {
    let mut power = ideal.clone();
    let mut p = 1;
    while !power.is_zero() {
        assert!(p <= alg.dim() + 1, "ideal is not nilpotent");
        power = alg.subspace_product(&power, ideal).expect("same ambient");
        p += 1;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn semisimple_has_zero_radical() {
        let r = jacobson_radical(&zoo::matrix_algebra(2));
        assert!(r.radical.is_zero());
        assert_eq!(r.nilpotency_index, 1);
    }

    #[test]
    fn upper_triangular_radical() {
        let ut2 = zoo::upper_triangular(2);
        let r = jacobson_radical(&ut2);
        // basis e11, e12, e22
        assert_eq!(r.radical, Subspace::span(3, [ut2.basis_element(1)]));
        assert_eq!(r.nilpotency_index, 2);
        assert!(ut2.is_ideal(&r.radical).unwrap());
        let ut3 = zoo::upper_triangular(3);
        let r3 = jacobson_radical(&ut3);
        assert_eq!((r3.radical.dim(), r3.nilpotency_index), (3, 3));
    }

    #[test]
    fn nilpotent_algebra_is_its_own_radical() {
        let nil = zoo::truncated_polynomials(3);
        let r = jacobson_radical(&nil);
        assert_eq!(r.radical.dim(), 2);
        assert_eq!(r.nilpotency_index, 3);
    }

    #[test]
    fn bahturin_radical_is_the_d_block() {
        let a = zoo::bahturin(2);
        let r = jacobson_radical(&a);
        assert_eq!(r.radical.dim(), 4);
        assert_eq!(r.nilpotency_index, 2);
        // basis: C entries 0..4, D entries 4..8
        let d_block = Subspace::span(8, (4..8).map(|i| a.basis_element(i)));
        assert_eq!(r.radical, d_block);
    }
}
