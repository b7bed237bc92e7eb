//! Center, primitive central idempotents and the Wedderburn–Artin splitting
//! of a semisimple algebra into simple two-sided ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{jacobson_radical, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{Matrix, Subspace};

/// `{ z : z e_i = e_i z for all i }`.
pub fn center(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    if n == 0 {
        return Subspace::zero(0);
    }
    // Block i encodes z ↦ z e_i - e_i z = (R_{e_i} - L_{e_i}) z.
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let e = alg.basis_element(i);
        let r = alg.right_mult_matrix(&e);
        let l = alg.left_mult_matrix(&e);
        for k in 0..n {
            rows.push(scalar::sub_vec(r.row(k), l.row(k)));
        }
    }
    Subspace::span(n, Matrix::from_rows(rows).kernel())
}

/// Monic minimal polynomial of `x` inside the subalgebra with unit `unit`,
/// as coefficients `c_0, ..., c_{d-1}, 1` (lowest degree first).
pub fn minimal_polynomial(alg: &Algebra, unit: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let n = alg.dim();
    let mut powers: Vec<Element> = vec![unit.to_vec()];
    loop {
        let next = alg.mul(powers.last().expect("nonempty"), x);
        let m = Matrix::from_columns(&powers, n);
        if let Ok(Some(c)) = m.solve(&next) {
            let mut poly: Vec<Scalar> = c.into_iter().map(|v| -v).collect();
            poly.push(Scalar::one());
            return poly;
        }
        powers.push(next);
        assert!(powers.len() <= n + 2, "minimal polynomial degree exceeds dimension");
    }
}

fn eval_poly(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

fn divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    let v = v.abs();
    let Some(small) = v.to_u64() else {
        return Err(Error::SplitFailure("polynomial coefficients too large for rational root search".into()));
    };
    if small > 1 << 40 {
        return Err(Error::SplitFailure("polynomial coefficients too large for rational root search".into()));
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

/// Distinct rational roots of a polynomial (coefficients lowest degree
/// first), in increasing order. Rational root theorem on the integral
/// primitive form.
pub fn rational_roots(poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return Ok(roots);
    };
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let high = ints.iter().rposition(|c| !c.is_zero()).expect("nonzero");
    if high == low {
        return Ok(roots);
    }
    let ps = divisors(&ints[low])?;
    let qs = divisors(&ints[high])?;
    for p in &ps {
        for q in &qs {
            for sign in [-1, 1] {
                let cand = Scalar::new(p * sign, q.clone());
                if eval_poly(poly, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// The semisimple algebra as a direct sum of simple two-sided ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleDecomposition {
    pub components: Vec<Subspace>,
    pub central_idempotents: Vec<Element>,
}

/// Splits `e` (a central idempotent) into primitive central idempotents.
fn split_idempotent(alg: &Algebra, center_basis: &[Element], e: Element, out: &mut Vec<Element>) -> Result<()> {
    let n = alg.dim();
    let local = Subspace::span(n, center_basis.iter().map(|z| alg.mul(z, &e)));
    if local.dim() <= 1 {
        out.push(e);
        return Ok(());
    }
    for z in local.basis() {
        let mp = minimal_polynomial(alg, &e, z);
        if mp.len() <= 2 {
            continue;
        }
        let roots = rational_roots(&mp)?;
        if roots.len() + 1 < mp.len() {
            return Err(Error::SplitFailure(format!(
                "central element has a minimal polynomial of degree {} with only {} rational roots",
                mp.len() - 1,
                roots.len()
            )));
        }
        // Lagrange idempotents: Π_{μ≠λ} (z - μ e) / (λ - μ).
        for lambda in &roots {
            let mut idem = e.clone();
            for mu in roots.iter().filter(|m| *m != lambda) {
                let mut factor = z.clone();
                scalar::add_scaled(&mut factor, &-mu.clone(), &e);
                let factor = scalar::scale_vec(&(lambda - mu).recip(), &factor);
                idem = alg.mul(&idem, &factor);
            }
            split_idempotent(alg, center_basis, idem, out)?;
        }
        return Ok(());
    }
    Err(Error::SplitFailure(format!(
        "center component of dimension {} is a field extension of the rationals",
        local.dim()
    )))
}

/// Wedderburn–Artin decomposition of a semisimple algebra, by splitting the
/// unit with the minimal polynomials of central elements. Components are
/// ordered by decreasing dimension, ties broken by the first pivot column.
pub fn simple_decomposition(alg: &Algebra) -> Result<SemisimpleDecomposition> {
    let n = alg.dim();
    if n == 0 {
        return Ok(SemisimpleDecomposition {
            components: Vec::new(),
            central_idempotents: Vec::new(),
        });
    }
    if !jacobson_radical(alg).radical.is_zero() {
        return Err(Error::InvalidArgument(
            "simple decomposition requires a semisimple algebra".into(),
        ));
    }
    let unit = alg
        .find_unit()
        .ok_or_else(|| Error::InvalidArgument("semisimple algebra without unit".into()))?;
    let z = center(alg);
    let mut idempotents = Vec::new();
    split_idempotent(alg, z.basis(), unit, &mut idempotents)?;
    let mut parts: Vec<(Subspace, Element)> = idempotents
        .into_iter()
        .map(|e| {
            let comp = Subspace::span(n, (0..n).map(|i| alg.mul(&e, &alg.basis_element(i))));
            (comp, e)
        })
        .collect();
    parts.sort_by(|a, b| {
        b.0.dim()
            .cmp(&a.0.dim())
            .then(a.0.pivots().first().cmp(&b.0.pivots().first()))
    });
    let (components, central_idempotents) = parts.into_iter().unzip();
    Ok(SemisimpleDecomposition {
        components,
        central_idempotents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{frac, int};
    use crate::zoo;

    #[test]
    fn centers() {
        let m2 = zoo::matrix_algebra(2);
        let z = center(&m2);
        assert_eq!(z, Subspace::span(4, [m2.unit().unwrap().clone()]));
        assert_eq!(center(&zoo::diagonal(2)).dim(), 2);
        let ut2 = zoo::upper_triangular(2);
        assert_eq!(center(&ut2), Subspace::span(3, [ut2.unit().unwrap().clone()]));
    }

    #[test]
    fn roots() {
        // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
        let p = vec![int(0), frac(-3, 2), frac(5, 2), int(1)];
        assert_eq!(rational_roots(&p).unwrap(), vec![int(-3), int(0), frac(1, 2)]);
        // t^2 - 2 has none
        assert!(rational_roots(&[int(-2), int(0), int(1)]).unwrap().is_empty());
    }

    #[test]
    fn decompositions() {
        let d = simple_decomposition(&zoo::matrix_algebra(2)).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].dim(), 4);
        let d = simple_decomposition(&zoo::diagonal(2)).unwrap();
        assert_eq!(d.components.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 1]);
        let sum = zoo::direct_sum(&zoo::matrix_algebra(2), &zoo::point());
        let d = simple_decomposition(&sum).unwrap();
        assert_eq!(d.components.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![4, 1]);
        for (i, e) in d.central_idempotents.iter().enumerate() {
            assert_eq!(&sum.mul(e, e), e);
            for (j, f) in d.central_idempotents.iter().enumerate() {
                if i != j {
                    assert!(scalar::is_zero_vec(&sum.mul(e, f)));
                }
            }
        }
    }

    #[test]
    fn non_split_center_fails() {
        // Q(sqrt 2) with basis 1, s and s^2 = 2.
        let alg = Algebra::new(
            vec!["1".into(), "s".into()],
            [
                (0, 0, 0, int(1)),
                (0, 1, 1, int(1)),
                (1, 0, 1, int(1)),
                (1, 1, 0, int(2)),
            ],
            Some(vec![int(1), int(0)]),
        )
        .unwrap();
        assert!(matches!(simple_decomposition(&alg), Err(Error::SplitFailure(_))));
    }
}
