//! Incremental row echelon bases over an arbitrary [`Field`].

use super::field::Field;

/// A list of linearly independent rows kept in semi-echelon form: every row
/// is normalized so its pivot (first nonzero entry) is one, and every row has
/// zeros at the pivots of all rows inserted before it.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    reduced: bool,
}

impl<F: Field + Clone> Echelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            reduced: true,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` in place against the current rows.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        debug_assert_eq!(v.len(), self.cols);
        let f = &self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[piv]) {
                let c = f.neg(&v[piv]);
                f.axpy(&mut v[piv..], &c, &row[piv..]);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        self.reduce(&mut v);
        self.push_reduced(v)
    }

    /// Adds an already reduced vector. Returns `false` for the zero vector.
    fn push_reduced(&mut self, mut v: Vec<F::Elem>) -> bool {
        let f = &self.field;
        let Some(piv) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[piv]);
        f.scale(&mut v[piv..], &inv);
        self.rows.push(v);
        self.pivots.push(piv);
        self.reduced = false;
        true
    }

    /// Brings the rows into reduced row echelon form: rows sorted by pivot,
    /// pivots equal to one, zeros above and below every pivot.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<F::Elem>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let f = &self.field;
        // After sorting, rows below a pivot are already zero in its column
        // (their first nonzero entry lies further right); clear above.
        for k in (0..rows.len()).rev() {
            let piv = pivots[k];
            let (head, tail) = rows.split_at_mut(k);
            let pivot_row = &tail[0];
            for other in head.iter_mut() {
                if !f.is_zero(&other[piv]) {
                    let c = f.neg(&other[piv]);
                    f.axpy(&mut other[piv..], &c, &pivot_row[piv..]);
                }
            }
        }
        self.rows = rows;
        self.pivots = pivots;
        self.reduced = true;
    }

    pub fn into_rows(mut self) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
        self.make_reduced();
        (self.rows, self.pivots)
    }
}

/// Rank of a list of rows over `field`.
pub fn rank_of_rows<F: Field + Clone>(field: F, cols: usize, rows: impl IntoIterator<Item = Vec<F::Elem>>) -> usize {
    let mut ech = Echelon::new(field, cols);
    for r in rows {
        ech.insert(r);
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};
    use crate::linalg::{scalar, Scalar};

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| scalar::int(x)).collect()
    }

    #[test]
    fn reduced_form_is_canonical() {
        let mut a = Echelon::new(Rationals, 3);
        a.insert(q(&[0, 1, 1]));
        a.insert(q(&[1, 1, 0]));
        let mut b = Echelon::new(Rationals, 3);
        b.insert(q(&[1, 2, 1]));
        b.insert(q(&[2, 3, 1]));
        a.make_reduced();
        b.make_reduced();
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.rows()[0], q(&[1, 0, -1]));
    }

    #[test]
    fn modular_rank() {
        let f = PrimeField::<7>;
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 7 % 7]];
        assert_eq!(rank_of_rows(f, 3, rows), 1);
    }
}
