use std::collections::BTreeMap;

use num_traits::Zero;

use super::partition::Partition;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};

/// A Young tableau: a bijective filling of the diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidArgument(format!("{rows:?} is not a filling by 1..={n}")));
            }
            seen[e] = true;
        }
        Ok(Self { shape, rows })
    }

    /// Row-major filling `1..=n`.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let row: Vec<usize> = (next..next + p).collect();
                next += p;
                row
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        rows_ok && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// The tableau with every entry `e` replaced by `σ(e)`.
    pub fn permuted(&self, sigma: &Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&e| sigma.apply(e - 1) + 1).collect())
                .collect(),
        }
    }

    /// `R_T`: permutations preserving every row setwise.
    pub fn row_group(&self) -> Vec<Permutation> {
        group_of_blocks(self.shape.n(), &self.rows)
    }

    /// `C_T`: permutations preserving every column setwise.
    pub fn column_group(&self) -> Vec<Permutation> {
        group_of_blocks(self.shape.n(), &self.columns())
    }
}

/// The direct product of the symmetric groups on the given blocks of
/// one-based entries.
fn group_of_blocks(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = Permutation::all(block.len());
        let mut next = Vec::with_capacity(group.len() * local.len());
        for g in &group {
            for l in &local {
                let mut images = g.images().to_vec();
                for (a, &e) in block.iter().enumerate() {
                    images[e - 1] = g.apply(block[l.apply(a)] - 1);
                }
                next.push(Permutation::new(images).expect("block permutation"));
            }
        }
        group = next;
    }
    group
}

/// All standard tableaux of a shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next > shape.n() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape.parts()[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                rec(shape, next + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, &mut vec![Vec::new(); shape.len()], &mut out);
    out
}

/// An element of the group algebra `Q S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(Permutation::identity(n))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let mut e = Self::zero(p.len());
        e.add_term(p, scalar::one());
        e
    }

    /// `Σ_{σ ∈ group} sign(σ)^{signed} σ`.
    pub fn sum_of(n: usize, group: &[Permutation], signed: bool) -> Self {
        let mut e = Self::zero(n);
        for p in group {
            let c = if signed { scalar::int(p.sign()) } else { scalar::one() };
            e.add_term(p.clone(), c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, p: Permutation, c: Scalar) {
        assert_eq!(p.len(), self.n, "permutation of the wrong degree");
        let entry = self.terms.entry(p.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero(self.n);
        for (p, v) in &self.terms {
            e.add_term(p.clone(), c * v);
        }
        e
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (p, v) in &other.terms {
            e.add_term(p.clone(), v.clone());
        }
        e
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                e.add_term(p.compose(q), a * b);
            }
        }
        e
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerKind {
    /// `e_T = a_T b_T`
    E,
    /// `e*_T = b_T a_T`
    EStar,
}

/// The Young symmetrizer of a tableau, from the row sum `a_T` and the signed
/// column sum `b_T`.
pub fn young_symmetrizer(t: &Tableau, kind: SymmetrizerKind) -> GroupAlgebraElement {
    let n = t.shape().n();
    let a = GroupAlgebraElement::sum_of(n, &t.row_group(), false);
    let b = GroupAlgebraElement::sum_of(n, &t.column_group(), true);
    match kind {
        SymmetrizerKind::E => a.mul(&b),
        SymmetrizerKind::EStar => b.mul(&a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn groups_of_canonical_tableau() {
        let t = Tableau::canonical(&p(&[2, 1]));
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(t.row_group().len(), 2);
        assert_eq!(t.column_group().len(), 2);
        assert!(t.column_group().contains(&Permutation::transposition(3, 0, 2)));
        assert!(t.is_standard());
    }

    #[test]
    fn single_row_and_column() {
        let n = 3;
        let row = young_symmetrizer(&Tableau::canonical(&p(&[3])), SymmetrizerKind::E);
        assert_eq!(row, GroupAlgebraElement::sum_of(n, &Permutation::all(n), false));
        let col = young_symmetrizer(&Tableau::canonical(&p(&[1, 1, 1])), SymmetrizerKind::E);
        assert_eq!(col, GroupAlgebraElement::sum_of(n, &Permutation::all(n), true));
    }

    #[test]
    fn quasi_idempotent() {
        let e = young_symmetrizer(&Tableau::canonical(&p(&[2, 1])), SymmetrizerKind::E);
        assert_eq!(e.mul(&e), e.scale(&scalar::int(3)));
    }

    #[test]
    fn standard_counts() {
        for l in partitions(5) {
            let st = standard_tableaux(&l);
            assert!(st.iter().all(Tableau::is_standard));
            assert_eq!(st.len() as u128, l.dim_irreducible());
        }
    }
}
