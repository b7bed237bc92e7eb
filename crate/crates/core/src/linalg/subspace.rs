use num_traits::Zero;

use super::echelon::Echelon;
use super::field::Rationals;
use super::matrix::Matrix;
use super::scalar::{self, Scalar};
use crate::error::{check_dim, Result};

/// A linear subspace of `Q^ambient`, stored by its reduced row echelon basis.
///
/// The basis is canonical: equal subspaces always have bit-identical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| scalar::unit_vector(ambient, i)))
    }

    /// Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut ech = Echelon::new(Rationals, ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
            if !ech.is_full() {
                ech.insert(v);
            }
        }
        let (basis, pivots) = ech.into_rows();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the components along the basis pivots; the result is zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                scalar::add_scaled(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        Ok(scalar::is_zero_vec(&self.reduce(v)))
    }

    /// Coordinates of `v` with respect to the echelon basis, `None` when `v`
    /// is outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (row, c) in self.basis.iter().zip(&coords) {
            scalar::add_scaled(&mut w, &-c.clone(), row);
        }
        scalar::is_zero_vec(&w).then_some(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        Ok(other
            .basis
            .iter()
            .all(|v| scalar::is_zero_vec(&self.reduce(v))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        Ok(Self::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    /// Intersection by the Zassenhaus algorithm: reduce `[u | u]` and
    /// `[v | 0]` together; rows whose left half vanishes span `U ∩ V`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let n = self.ambient;
        let rows = self
            .basis
            .iter()
            .map(|u| {
                let mut r = u.clone();
                r.extend(u.iter().cloned());
                r
            })
            .chain(other.basis.iter().map(|v| {
                let mut r = v.clone();
                r.extend(scalar::zeros(n));
                r
            }));
        let mut ech = Echelon::new(Rationals, 2 * n);
        for r in rows {
            ech.insert(r);
        }
        let (rows, pivots) = ech.into_rows();
        Ok(Self::span(
            n,
            rows.into_iter()
                .zip(pivots)
                .filter(|(_, p)| *p >= n)
                .map(|(r, _)| r[n..].to_vec()),
        ))
    }

    /// `span{ mult(u, v) : u ∈ basis(self), v ∈ basis(other) }`.
    pub fn product<M>(&self, other: &Subspace, mut mult: M) -> Result<Subspace>
    where
        M: FnMut(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    {
        check_dim(self.ambient, other.ambient)?;
        let mut ech = Echelon::new(Rationals, self.ambient);
        for u in &self.basis {
            for v in &other.basis {
                if ech.is_full() {
                    break;
                }
                ech.insert(mult(u, v));
            }
        }
        let (basis, pivots) = ech.into_rows();
        Ok(Self {
            ambient: self.ambient,
            basis,
            pivots,
        })
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        check_dim(self.ambient, map.cols())?;
        let vecs: Result<Vec<_>> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Ok(Self::span(map.rows(), vecs?))
    }

    /// Complementary coordinate indices: the non-pivot columns.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors
/// (not necessarily echelon).
#[derive(Clone, Debug)]
pub struct CoordinateSystem {
    span: Subspace,
    /// Row `r` expresses echelon basis vector `r` in the original vectors.
    transform: Vec<Vec<Scalar>>,
}

impl CoordinateSystem {
    /// Panics if the vectors are dependent.
    pub fn new(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = vectors.len();
        let mut ech = Echelon::new(Rationals, ambient + m);
        for (i, v) in vectors.iter().enumerate() {
            let mut row = v.clone();
            row.extend(scalar::unit_vector(m, i));
            ech.insert(row);
        }
        let (rows, pivots) = ech.into_rows();
        assert!(
            pivots.iter().all(|&p| p < ambient),
            "coordinate system vectors are linearly dependent"
        );
        let span = Subspace {
            ambient,
            basis: rows.iter().map(|r| r[..ambient].to_vec()).collect(),
            pivots,
        };
        let transform = rows.into_iter().map(|r| r[ambient..].to_vec()).collect();
        Self { span, transform }
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn len(&self) -> usize {
        self.transform.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transform.is_empty()
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let echelon_coords = self.span.coordinates(v)?;
        let mut out = scalar::zeros(self.transform.len());
        for (c, t) in echelon_coords.iter().zip(&self.transform) {
            scalar::add_scaled(&mut out, c, t);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::span(3, [v(&[1, 0, 0])]);
        let e2 = Subspace::span(3, [v(&[0, 1, 0])]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        let a = Subspace::span(2, [v(&[1, 0])]);
        let b = Subspace::span(2, [v(&[1, 1])]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(e1.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let w = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = u.intersect(&w).unwrap();
        assert_eq!(i, Subspace::span(3, [v(&[0, 2, 0])]));
        assert_eq!(u.sum(&w).unwrap().dim() + i.dim(), u.dim() + w.dim());
    }

    #[test]
    fn coordinates_roundtrip() {
        let u = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 7, 9]);
        let c = u.coordinates(&x).unwrap();
        let mut back = scalar::zeros(3);
        for (b, ci) in u.basis().iter().zip(&c) {
            scalar::add_scaled(&mut back, ci, b);
        }
        assert_eq!(back, x);
        assert!(u.coordinates(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn coordinate_system() {
        let vecs = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let cs = CoordinateSystem::new(3, &vecs);
        assert_eq!(cs.coordinates(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(cs.coordinates(&v(&[1, 0, 0])), None);
    }
}
