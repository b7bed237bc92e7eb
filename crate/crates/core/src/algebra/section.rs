//! Idempotent lifting and the Wedderburn–Malcev section `κ: A/J → A`.

use num_traits::Zero;

use super::{jacobson_radical, minimal_polynomial, rational_roots, simple_decomposition, Algebra, Element, Quotient};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{Matrix, Subspace};

/// Lifts `e0` with `e0² - e0 ∈ J` to an exact idempotent `e ≡ e0 (mod J)` by
/// iterating `e ← 3e² - 2e³`, which squares the nilpotent defect each step.
pub fn lift_idempotent(alg: &Algebra, radical: &Subspace, e0: &[Scalar]) -> Result<Element> {
    let defect = |e: &[Scalar]| scalar::sub_vec(&alg.mul(e, e), e);
    if !radical.contains(&defect(e0))? {
        return Err(Error::NotApproxIdempotent);
    }
    let p = super::radical::nilpotency_index(alg, radical);
    let max_steps = (usize::BITS - p.leading_zeros()) as usize + 1;
    let mut e = e0.to_vec();
    for _ in 0..=max_steps {
        if scalar::is_zero_vec(&defect(&e)) {
            return Ok(e);
        }
        let e2 = alg.mul(&e, &e);
        let e3 = alg.mul(&e2, &e);
        e = scalar::sub_vec(&scalar::scale_vec(&scalar::int(3), &e2), &scalar::scale_vec(&scalar::int(2), &e3));
    }
    Err(Error::Violation("idempotent lifting did not converge".into()))
}

/// `(1 - ε) x (1 - ε)` computed inside `A`.
fn corner_complement(alg: &Algebra, eps: &[Scalar], x: &[Scalar]) -> Element {
    let ex = alg.mul(eps, x);
    let xe = alg.mul(x, eps);
    let exe = alg.mul(&ex, eps);
    let mut out = x.to_vec();
    scalar::add_scaled(&mut out, &-scalar::one(), &ex);
    scalar::add_scaled(&mut out, &-scalar::one(), &xe);
    scalar::add_scaled(&mut out, &scalar::one(), &exe);
    out
}

/// Matrix units `E_ij` (`k × k`) of a split simple two-sided ideal
/// `component` with unit `unit` inside the semisimple algebra `alg`.
///
/// A primitive idempotent `f` is found by repeatedly cutting the corner
/// `fCf` with the left identity of a proper right ideal `y·fCf`, where `y` is
/// a zero divisor `x - λf` for a rational eigenvalue `λ` of a corner element.
pub fn matrix_units(alg: &Algebra, component: &Subspace, unit: &[Scalar]) -> Result<Vec<Vec<Element>>> {
    let n = alg.dim();
    let comp_basis = component.basis();
    let mut f = unit.to_vec();
    loop {
        let corner = Subspace::span(n, comp_basis.iter().map(|b| alg.mul(&alg.mul(&f, b), &f)));
        if corner.dim() == 1 {
            break;
        }
        let y = find_zero_divisor(alg, &corner, &f)?;
        let ideal = Subspace::span(n, corner.basis().iter().map(|r| alg.mul(&y, r)));
        f = left_identity(alg, &ideal)?;
    }
    let left = Subspace::span(n, comp_basis.iter().map(|b| alg.mul(b, &f)));
    let right = Subspace::span(n, comp_basis.iter().map(|b| alg.mul(&f, b)));
    let k = left.dim();
    if right.dim() != k || k * k != component.dim() {
        return Err(Error::SplitFailure(format!(
            "simple component of dimension {} is not a full matrix algebra over the rationals",
            component.dim()
        )));
    }
    let fpiv = f.iter().position(|c| !c.is_zero()).expect("nonzero idempotent");
    let mut gram = Matrix::zeros(k, k);
    for (l, v) in right.basis().iter().enumerate() {
        for (i, u) in left.basis().iter().enumerate() {
            let vu = alg.mul(v, u);
            gram.set(l, i, &vu[fpiv] / &f[fpiv]);
        }
    }
    let dual = gram
        .inverse()
        .ok_or_else(|| Error::SplitFailure("degenerate pairing between Cf and fC".into()))?;
    let w: Vec<Element> = (0..k)
        .map(|j| {
            let mut acc = scalar::zeros(n);
            for (l, v) in right.basis().iter().enumerate() {
                scalar::add_scaled(&mut acc, dual.get(j, l), v);
            }
            acc
        })
        .collect();
    Ok(left
        .basis()
        .iter()
        .map(|u| w.iter().map(|wj| alg.mul(u, wj)).collect())
        .collect())
}

fn find_zero_divisor(alg: &Algebra, corner: &Subspace, f: &[Scalar]) -> Result<Element> {
    let basis = corner.basis();
    let mut candidates: Vec<Element> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            for c in 1..=3 {
                let mut x = basis[i].clone();
                scalar::add_scaled(&mut x, &scalar::int(c), &basis[j]);
                candidates.push(x);
            }
        }
    }
    for x in candidates {
        let mp = minimal_polynomial(alg, f, &x);
        if mp.len() <= 2 {
            continue;
        }
        if let Some(lambda) = rational_roots(&mp)?.first() {
            let mut y = x;
            scalar::add_scaled(&mut y, &-lambda.clone(), f);
            return Ok(y);
        }
    }
    Err(Error::SplitFailure(format!(
        "no rational zero divisor found in a corner of dimension {}",
        corner.dim()
    )))
}

/// An element `g ∈ I` with `g x = x` for all `x ∈ I`; for a right ideal of a
/// semisimple algebra it is an idempotent generator.
fn left_identity(alg: &Algebra, ideal: &Subspace) -> Result<Element> {
    let n = alg.dim();
    let basis = ideal.basis();
    let m = basis.len();
    let mut rows = Vec::with_capacity(m * n);
    let mut rhs = Vec::with_capacity(m * n);
    for bi in basis {
        let prods: Vec<Element> = basis.iter().map(|bj| alg.mul(bj, bi)).collect();
        for coord in 0..n {
            rows.push(prods.iter().map(|p| p[coord].clone()).collect());
            rhs.push(bi[coord].clone());
        }
    }
    let coeffs = Matrix::from_rows(rows)
        .solve(&rhs)?
        .ok_or_else(|| Error::SplitFailure("right ideal has no left identity".into()))?;
    let mut g = scalar::zeros(n);
    for (c, b) in coeffs.iter().zip(basis) {
        scalar::add_scaled(&mut g, c, b);
    }
    Ok(g)
}

/// A multiplicative linear map `κ: A/J → A` with `π∘κ = id`, stored as a
/// `dim A × dim A/J` matrix acting on quotient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub kappa: Matrix,
}

impl Section {
    pub fn apply(&self, q: &[Scalar]) -> Element {
        self.kappa.mul_vec(q).expect("quotient coordinates")
    }

    /// Images of the quotient basis.
    pub fn images(&self) -> Vec<Element> {
        (0..self.kappa.cols()).map(|c| self.kappa.column(c)).collect()
    }

    /// Checks `π∘κ = id` and `κ(x̄ȳ) = κ(x̄)κ(ȳ)` on all basis pairs.
    pub fn verify(&self, alg: &Algebra, quotient: &Quotient) -> Result<()> {
        let qalg = &quotient.algebra;
        let images = self.images();
        for (i, img) in images.iter().enumerate() {
            if quotient.project(img) != qalg.basis_element(i) {
                return Err(Error::Violation(format!("π∘κ differs from the identity on basis element {i}")));
            }
        }
        for i in 0..qalg.dim() {
            for j in 0..qalg.dim() {
                let prod = qalg.mul(&qalg.basis_element(i), &qalg.basis_element(j));
                if self.apply(&prod) != alg.mul(&images[i], &images[j]) {
                    return Err(Error::Violation(format!("κ is not multiplicative on ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// The conjugate section `x ↦ (1 + j) κ(x) (1 + j)^{-1}` for `j ∈ J`.
    pub fn conjugated(&self, alg: &Algebra, radical: &Subspace, j: &[Scalar]) -> Result<Section> {
        if !radical.contains(j)? {
            return Err(Error::InvalidArgument("conjugating element must lie in the radical".into()));
        }
        // (1 + j)^{-1} = 1 - j + j² - ..., finite since j is nilpotent;
        // `inv_tail` holds the part without the leading 1.
        let mut inv_tail = scalar::zeros(alg.dim());
        let mut power = j.to_vec();
        let mut sign = -scalar::one();
        while !scalar::is_zero_vec(&power) {
            scalar::add_scaled(&mut inv_tail, &sign, &power);
            power = alg.mul(&power, j);
            sign = -sign;
        }
        let images: Vec<Element> = self
            .images()
            .into_iter()
            .map(|x| {
                // (1 + j) x (1 + t) = x + jx + xt + jxt
                let jx = alg.mul(j, &x);
                let left = scalar::add_vec(&x, &jx);
                let right = alg.mul(&left, &inv_tail);
                scalar::add_vec(&left, &right)
            })
            .collect();
        Ok(Section {
            kappa: Matrix::from_columns(&images, alg.dim()),
        })
    }
}

/// Computes a Wedderburn–Malcev section: lifts a complete set of orthogonal
/// diagonal matrix units of every simple block of `A/J` to orthogonal
/// idempotents of `A`, then lifts the off-diagonal units through the first
/// row and column of each block. Verified before returning.
pub fn wedderburn_section(alg: &Algebra) -> Result<(Quotient, Section)> {
    let radical = jacobson_radical(alg).radical;
    let quotient = Quotient::new(alg, &radical)?;
    let qalg = &quotient.algebra;
    let dec = simple_decomposition(qalg)?;

    let mut blocks: Vec<Vec<Vec<Element>>> = Vec::new();
    for (comp, e) in dec.components.iter().zip(&dec.central_idempotents) {
        blocks.push(matrix_units(qalg, comp, e)?);
    }

    // Lift the diagonal units one at a time inside the complementary corner.
    let mut eps_sum = alg.zero();
    let mut lifted_diag: Vec<Vec<Element>> = Vec::new();
    for block in &blocks {
        let mut diag = Vec::new();
        for (i, row) in block.iter().enumerate() {
            let pre = quotient.lift(&row[i]);
            let start = corner_complement(alg, &eps_sum, &pre);
            let eps = lift_idempotent(alg, &radical, &start)?;
            eps_sum = scalar::add_vec(&eps_sum, &eps);
            diag.push(eps);
        }
        lifted_diag.push(diag);
    }

    let mut lifted_units: Vec<Vec<Vec<Element>>> = Vec::new();
    for (block, diag) in blocks.iter().zip(&lifted_diag) {
        let k = block.len();
        let mut first_row = vec![diag[0].clone()];
        let mut first_col = vec![diag[0].clone()];
        for j in 1..k {
            let a = alg.mul(&alg.mul(&diag[0], &quotient.lift(&block[0][j])), &diag[j]);
            let b = alg.mul(&alg.mul(&diag[j], &quotient.lift(&block[j][0])), &diag[0]);
            let ab = alg.mul(&a, &b);
            let inv = corner_inverse(alg, &diag[0], &ab)?;
            first_row.push(a);
            first_col.push(alg.mul(&b, &inv));
        }
        let units: Vec<Vec<Element>> = (0..k)
            .map(|i| (0..k).map(|j| alg.mul(&first_col[i], &first_row[j])).collect())
            .collect();
        lifted_units.push(units);
    }

    // Express the quotient basis in matrix units and map through the lifts.
    let q_units: Vec<Element> = blocks.iter().flatten().flatten().cloned().collect();
    let a_units: Vec<Element> = lifted_units.iter().flatten().flatten().cloned().collect();
    let qdim = qalg.dim();
    let change = Matrix::from_columns(&q_units, qdim)
        .inverse()
        .ok_or_else(|| Error::Violation("matrix units do not form a basis of the quotient".into()))?;
    let images: Vec<Element> = (0..qdim)
        .map(|l| {
            let mut acc = alg.zero();
            for (u, unit) in a_units.iter().enumerate() {
                scalar::add_scaled(&mut acc, change.get(u, l), unit);
            }
            acc
        })
        .collect();
    let section = Section {
        kappa: Matrix::from_columns(&images, alg.dim()),
    };
    section.verify(alg, &quotient)?;
    Ok((quotient, section))
}

/// Inverse of `u` in the corner `εAε` (unit `ε`), valid when `u - ε` is
/// nilpotent.
fn corner_inverse(alg: &Algebra, eps: &[Scalar], u: &[Scalar]) -> Result<Element> {
    let n = scalar::sub_vec(u, eps);
    let mut inv = eps.to_vec();
    let mut power = n.clone();
    let mut sign = -scalar::one();
    for _ in 0..=alg.dim() {
        if scalar::is_zero_vec(&power) {
            return Ok(inv);
        }
        scalar::add_scaled(&mut inv, &sign, &power);
        power = alg.mul(&power, &n);
        sign = -sign;
    }
    Err(Error::Violation("corner element is not unipotent".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn lifting_fixed_points() {
        let ut2 = zoo::upper_triangular(2);
        let j = jacobson_radical(&ut2).radical;
        let e11 = ut2.basis_element(0);
        assert_eq!(lift_idempotent(&ut2, &j, &e11).unwrap(), e11);
        assert_eq!(lift_idempotent(&ut2, &j, &ut2.zero()).unwrap(), ut2.zero());
        let e12 = ut2.basis_element(1);
        assert!(matches!(lift_idempotent(&ut2, &j, &e12), Ok(ref z) if scalar::is_zero_vec(z)));
        let not_idem = scalar::scale_vec(&scalar::int(2), &e11);
        assert_eq!(lift_idempotent(&ut2, &j, &not_idem), Err(Error::NotApproxIdempotent));
    }

    #[test]
    fn lifting_needs_iteration_in_ut3() {
        // basis e11 e12 e13 e22 e23 e33
        let ut3 = zoo::upper_triangular(3);
        let j = jacobson_radical(&ut3).radical;
        let e0 = scalar::add_vec(
            &scalar::add_vec(&ut3.basis_element(0), &ut3.basis_element(1)),
            &ut3.basis_element(4),
        );
        assert_ne!(ut3.mul(&e0, &e0), e0);
        let e = lift_idempotent(&ut3, &j, &e0).unwrap();
        assert_eq!(ut3.mul(&e, &e), e);
        assert!(j.contains(&scalar::sub_vec(&e, &e0)).unwrap());
    }

    #[test]
    fn matrix_units_of_m2() {
        let m2 = zoo::matrix_algebra(2);
        let units = matrix_units(&m2, &Subspace::full(4), m2.unit().unwrap()).unwrap();
        assert_eq!(units.len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let expect = if j == k { units[i][l].clone() } else { m2.zero() };
                        assert_eq!(m2.mul(&units[i][j], &units[k][l]), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn sections() {
        let (_, s) = wedderburn_section(&zoo::matrix_algebra(2)).unwrap();
        assert_eq!(s.kappa, Matrix::identity(4));

        let ut2 = zoo::upper_triangular(2);
        let (q, s) = wedderburn_section(&ut2).unwrap();
        let k11 = s.apply(&q.algebra.basis_element(0));
        assert_eq!(q.project(&k11), q.algebra.basis_element(0));
        assert_eq!(ut2.mul(&k11, &k11), k11);
        let k22 = s.apply(&q.algebra.basis_element(1));
        assert!(scalar::is_zero_vec(&ut2.mul(&k11, &k22)));
        assert_eq!(scalar::add_vec(&k11, &k22), ut2.unit().unwrap().clone());

        let a = zoo::bahturin(2);
        let (q, s) = wedderburn_section(&a).unwrap();
        assert_eq!(q.complement, vec![0, 1, 2, 3]);
        // κ(C̄) = (C, 0)
        for c in 0..4 {
            assert_eq!(s.apply(&q.algebra.basis_element(c)), a.basis_element(c));
        }
    }

    #[test]
    fn conjugated_section_is_a_section() {
        let ut2 = zoo::upper_triangular(2);
        let (q, s) = wedderburn_section(&ut2).unwrap();
        let j = jacobson_radical(&ut2).radical;
        let t = s.conjugated(&ut2, &j, &ut2.basis_element(1)).unwrap();
        assert_ne!(t, s);
        t.verify(&ut2, &q).unwrap();
        // (1 + e12) e11 (1 - e12) = e11 - e12
        let k11 = t.apply(&q.algebra.basis_element(0));
        assert_eq!(k11, scalar::sub_vec(&ut2.basis_element(0), &ut2.basis_element(1)));
    }
}
