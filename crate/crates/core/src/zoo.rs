//! Built-in algebras and actions.

use crate::action::{Generator, ProductRule};
use crate::algebra::Algebra;
use crate::linalg::scalar::{self, int, Scalar};
use crate::linalg::Matrix;

fn build(labels: Vec<String>, constants: Vec<(usize, usize, usize, Scalar)>, unit: Option<Vec<Scalar>>) -> Algebra {
    Algebra::new(labels, constants, unit).expect("zoo algebra is valid")
}

/// The one-dimensional algebra `Q`.
pub fn point() -> Algebra {
    build(vec!["1".into()], vec![(0, 0, 0, int(1))], Some(vec![int(1)]))
}

/// `xQ[x]/(x^p)` with basis `x, x^2, ..., x^{p-1}`.
pub fn truncated_polynomials(p: usize) -> Algebra {
    assert!(p >= 1);
    let dim = p - 1;
    let labels = (1..p)
        .map(|a| if a == 1 { "x".to_string() } else { format!("x^{a}") })
        .collect();
    let mut constants = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            // x^{a+1} x^{b+1} = x^{a+b+2}
            if a + b + 2 < p {
                constants.push((a, b, a + b + 1, int(1)));
            }
        }
    }
    build(labels, constants, None)
}

/// Index of `e_ij` in the row-major basis of `M_k`.
pub fn matrix_unit_index(k: usize, i: usize, j: usize) -> usize {
    i * k + j
}

/// Full matrix algebra `M_k` with row-major basis `e11, e12, ...`.
pub fn matrix_algebra(k: usize) -> Algebra {
    let mut labels = Vec::new();
    for i in 0..k {
        for j in 0..k {
            labels.push(format!("e{}{}", i + 1, j + 1));
        }
    }
    let mut constants = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                constants.push((i * k + j, j * k + l, i * k + l, int(1)));
            }
        }
    }
    let mut unit = scalar::zeros(k * k);
    for i in 0..k {
        unit[i * k + i] = int(1);
    }
    build(labels, constants, Some(unit))
}

/// Positions `(i, j)` with `i <= j`, in row-major order.
pub fn upper_triangular_positions(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect()
}

/// Upper triangular matrices `UT_m`, basis `e_ij` (`i <= j`) row-major.
pub fn upper_triangular(m: usize) -> Algebra {
    let pos = upper_triangular_positions(m);
    let index = |i: usize, j: usize| pos.iter().position(|&p| p == (i, j)).expect("upper");
    let labels = pos.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut constants = Vec::new();
    for &(i, j) in &pos {
        for l in j..m {
            constants.push((index(i, j), index(j, l), index(i, l), int(1)));
        }
    }
    let mut unit = scalar::zeros(pos.len());
    for i in 0..m {
        unit[index(i, i)] = int(1);
    }
    build(labels, constants, Some(unit))
}

/// `Q^k` with orthogonal idempotents `e1, ..., ek`.
pub fn diagonal(k: usize) -> Algebra {
    let labels = (1..=k).map(|i| format!("e{i}")).collect();
    let constants = (0..k).map(|i| (i, i, i, int(1))).collect();
    build(labels, constants, Some(vec![int(1); k]))
}

/// `A ⊕ B`; a label of `B` that collides with one of `A` gets a prime.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let da = a.dim();
    let mut labels: Vec<String> = a.labels().to_vec();
    for l in b.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut constants: Vec<(usize, usize, usize, Scalar)> =
        a.structure_constants().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
    constants.extend(
        b.structure_constants()
            .map(|(i, j, k, c)| (i + da, j + da, k + da, c.clone())),
    );
    let unit = match (a.unit(), b.unit()) {
        (Some(u), Some(v)) => Some(u.iter().chain(v).cloned().collect()),
        _ => None,
    };
    build(labels, constants, unit)
}

/// The block algebra `{(C D; 0 0)} ⊆ M_{2m}`, stored as pairs `(C, D)`
/// with `(C, D)(C', D') = (CC', CD')`. Basis: entries of `C` row-major,
/// then entries of `D` row-major.
pub fn bahturin(m: usize) -> Algebra {
    let mut labels = Vec::new();
    for block in ["c", "d"] {
        for i in 0..m {
            for j in 0..m {
                labels.push(format!("{block}{}{}", i + 1, j + 1));
            }
        }
    }
    let c = |i: usize, j: usize| i * m + j;
    let d = |i: usize, j: usize| m * m + i * m + j;
    let mut constants = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                constants.push((c(i, j), c(j, l), c(i, l), int(1)));
                constants.push((c(i, j), d(j, l), d(i, l), int(1)));
            }
        }
    }
    build(labels, constants, None)
}

/// The automorphism `e_i ↦ e_{perm[i]}` of an algebra whose basis is
/// permuted by it.
pub fn permutation_generator(name: &str, perm: &[usize]) -> Generator {
    let n = perm.len();
    let mut m = Matrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m.set(p, i, int(1));
    }
    Generator::new(name, m, ProductRule::Automorphism)
}

/// Transpose on `M_k`, an anti-automorphism.
pub fn transpose_generators(k: usize) -> Vec<Generator> {
    let perm: Vec<usize> = (0..k * k).map(|ij| (ij % k) * k + ij / k).collect();
    let mut g = permutation_generator("T", &perm);
    g.rule = ProductRule::AntiAutomorphism;
    vec![g]
}

/// `ad(a) = [a, -]` as a derivation.
pub fn adjoint(alg: &Algebra, name: &str, a: &[Scalar]) -> Generator {
    let l = alg.left_mult_matrix(a);
    let r = alg.right_mult_matrix(a);
    let m = l.add(&r.scale(&int(-1))).expect("same shape");
    Generator::new(name, m, ProductRule::Derivation)
}

/// `ad(e_ij)` for every matrix unit of `M_k`, i.e. the adjoint action of
/// the Lie algebra `gl_k`.
pub fn adjoint_generators(k: usize) -> Vec<Generator> {
    let alg = matrix_algebra(k);
    (0..k * k)
        .map(|ij| {
            let name = format!("ad{}{}", ij / k + 1, ij % k + 1);
            adjoint(&alg, &name, &alg.basis_element(ij))
        })
        .collect()
}

/// `φ(C, D) = (C, C + D)` on the block algebra.
pub fn bahturin_generators(m: usize) -> Vec<Generator> {
    let n = 2 * m * m;
    let mut phi = Matrix::identity(n);
    for c in 0..m * m {
        phi.set(m * m + c, c, int(1));
    }
    vec![Generator::new("phi", phi, ProductRule::Automorphism)]
}

/// The adjoint action of the block algebra on itself, one derivation per
/// basis element.
pub fn bahturin_adjoint_generators(m: usize) -> Vec<Generator> {
    let alg = bahturin(m);
    (0..alg.dim())
        .map(|i| {
            let name = format!("ad_{}", alg.labels()[i]);
            adjoint(&alg, &name, &alg.basis_element(i))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(truncated_polynomials(3).dim(), 2);
        assert_eq!(upper_triangular(3).dim(), 6);
        assert_eq!(bahturin(2).dim(), 8);
        assert!(!bahturin(2).has_unit());
        assert_eq!(direct_sum(&matrix_algebra(2), &point()).dim(), 5);
    }
}
