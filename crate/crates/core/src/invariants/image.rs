//! The image of `P^H_n` under evaluation on basis tuples.
//!
//! A monomial `x^{h_1}_{σ(1)} ⋯ x^{h_n}_{σ(n)}` evaluates to the map
//! `t ↦ γ_{h_1}(e_{t_{σ(1)}}) ⋯ γ_{h_n}(e_{t_{σ(n)}})`, a vector indexed by
//! pairs (basis tuple `t`, output coordinate `r`). The row space `W` of the
//! evaluation matrix is therefore the `S_n`-closure of the space `V_n`
//! spanned by the monomials with `σ = id`, and `V_n` is built one factor at
//! a time. Only columns that can possibly be nonzero are stored.

use std::collections::HashMap;

use num_traits::Zero;

use crate::action::HActionData;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, Scalar};
use crate::symmetric::{GroupAlgebraElement, Permutation};

/// Size limits for the evaluation problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Bound on `m^n n!`, the number of monomials.
    pub max_rows: u128,
    /// Bound on `dim^n · dim`, the number of evaluation coordinates.
    pub max_cols: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_rows: 1_000_000,
            max_cols: 4_000_000,
        }
    }
}

impl Limits {
    pub fn check(&self, n: usize, m: usize, dim: usize) -> Result<()> {
        let rows = crate::poly::basis_size(n, m);
        if rows > self.max_rows {
            return Err(Error::SizeLimit {
                what: "monomials m^n n!",
                size: rows,
                limit: self.max_rows,
            });
        }
        let cols = (dim as u128)
            .saturating_pow(n as u32)
            .saturating_mul(dim as u128);
        if cols > self.max_cols {
            return Err(Error::SizeLimit {
                what: "evaluation columns dim^n dim",
                size: cols,
                limit: self.max_cols,
            });
        }
        Ok(())
    }
}

type Sparse = Vec<(usize, Scalar)>;

/// Field-independent description of an evaluation problem.
pub(crate) struct Problem {
    pub n: usize,
    pub dim: usize,
    /// `products[r][s]`: `e_r · γ_j(e_s)` for every operator `j`, indexed
    /// `[j][r][s]`.
    products: Vec<Vec<Vec<Sparse>>>,
    /// `images[j][s] = γ_j(e_s)`.
    images: Vec<Vec<Sparse>>,
}

fn sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl Problem {
    pub fn new(alg: &Algebra, act: &HActionData, n: usize) -> Self {
        let dim = alg.dim();
        let images: Vec<Vec<Sparse>> = act
            .zeta()
            .iter()
            .map(|z| (0..dim).map(|s| sparse(&z.matrix.column(s))).collect())
            .collect();
        let products = images
            .iter()
            .map(|img| {
                (0..dim)
                    .map(|r| {
                        let er = alg.basis_element(r);
                        img.iter()
                            .map(|g| {
                                let mut v = vec![Scalar::zero(); dim];
                                for (s, c) in g {
                                    v[*s] = c.clone();
                                }
                                sparse(&alg.mul(&er, &v))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            n,
            dim,
            products,
            images,
        }
    }
}

/// What to compute on top of the rank.
#[derive(Clone, Debug, Default)]
pub(crate) struct Requests {
    /// Traces of these permutations on `W`.
    pub traces: Vec<Permutation>,
    /// Whether each element annihilates `W`.
    pub annihilators: Vec<GroupAlgebraElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Summary {
    pub rank: usize,
    pub traces: Vec<i64>,
    pub annihilates: Vec<bool>,
}

fn to_field<F: Field>(field: &F, v: &Sparse) -> Option<Vec<(usize, F::Elem)>> {
    v.iter()
        .map(|(i, c)| field.from_scalar(c).map(|e| (*i, e)))
        .collect()
}

fn decode(mut col: usize, n: usize, dim: usize) -> (Vec<usize>, usize) {
    let r = col % dim;
    col /= dim;
    let mut t = vec![0; n];
    for k in (0..n).rev() {
        t[k] = col % dim;
        col /= dim;
    }
    (t, r)
}

fn encode(t: &[usize], r: usize, dim: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * dim + x) * dim + r
}

/// The column support of `W` together with the index lookup.
struct Support {
    cols: Vec<usize>,
    index: HashMap<usize, usize>,
}

impl Support {
    fn new(mut cols: Vec<usize>) -> Self {
        cols.sort_unstable();
        cols.dedup();
        let index = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Self { cols, index }
    }

    fn len(&self) -> usize {
        self.cols.len()
    }

    /// `map[i]` = position of the column `(t∘τ, r)` for column `i = (t, r)`.
    /// `None` if the support is not closed under `τ`.
    fn permutation_map(&self, tau: &Permutation, n: usize, dim: usize) -> Option<Vec<usize>> {
        self.cols
            .iter()
            .map(|&c| {
                let (t, r) = decode(c, n, dim);
                let moved: Vec<usize> = (0..n).map(|k| t[tau.apply(k)]).collect();
                self.index.get(&encode(&moved, r, dim)).copied()
            })
            .collect()
    }
}

fn permute<E: Clone>(row: &[E], map: &[usize]) -> Vec<E> {
    map.iter().map(|&j| row[j].clone()).collect()
}

/// Computes the summary over `field`, or `None` when some input constant
/// has no image in the field.
pub(crate) fn compute<F: Field + Clone>(field: F, prob: &Problem, req: &Requests) -> Option<Summary> {
    let (n, dim) = (prob.n, prob.dim);
    let images: Vec<Vec<Vec<(usize, F::Elem)>>> = prob
        .images
        .iter()
        .map(|img| img.iter().map(|v| to_field(&field, v)).collect())
        .collect::<Option<_>>()?;
    let products: Vec<Vec<Vec<Vec<(usize, F::Elem)>>>> = prob
        .products
        .iter()
        .map(|pj| {
            pj.iter()
                .map(|pr| pr.iter().map(|v| to_field(&field, v)).collect())
                .collect()
        })
        .collect::<Option<_>>()?;
    let empty = Summary {
        rank: 0,
        traces: vec![0; req.traces.len()],
        annihilates: vec![true; req.annihilators.len()],
    };
    if n == 0 || dim == 0 {
        return Some(empty);
    }

    // Level one: the maps e_s ↦ γ_j(e_s).
    let mut support = Support::new(
        prob.images
            .iter()
            .flat_map(|img| {
                img.iter()
                    .enumerate()
                    .flat_map(|(s, v)| v.iter().map(move |(r, _)| s * dim + r))
            })
            .collect(),
    );
    let mut ech = Echelon::new(field.clone(), support.len());
    for img in &images {
        let mut row = vec![field.zero(); support.len()];
        for (s, v) in img.iter().enumerate() {
            for (r, c) in v {
                row[support.index[&(s * dim + r)]] = c.clone();
            }
        }
        ech.insert(row);
    }

    for _ in 1..n {
        if ech.rank() == 0 {
            return Some(empty);
        }
        let mut next_cols = Vec::new();
        for &col in &support.cols {
            let (t, r) = (col / dim, col % dim);
            for pj in &prob.products {
                for (s, v) in pj[r].iter().enumerate() {
                    next_cols.extend(v.iter().map(|(r2, _)| (t * dim + s) * dim + r2));
                }
            }
        }
        let next = Support::new(next_cols);
        let mut next_ech = Echelon::new(field.clone(), next.len());
        'rows: for row in ech.rows() {
            for pj in &products {
                if next_ech.is_full() {
                    break 'rows;
                }
                let mut out = vec![field.zero(); next.len()];
                for (idx, val) in row.iter().enumerate() {
                    if field.is_zero(val) {
                        continue;
                    }
                    let col = support.cols[idx];
                    let (t, r) = (col / dim, col % dim);
                    for (s, v) in pj[r].iter().enumerate() {
                        for (r2, c) in v {
                            let k = next.index[&((t * dim + s) * dim + r2)];
                            out[k] = field.add(&out[k], &field.mul(val, c));
                        }
                    }
                }
                next_ech.insert(out);
            }
        }
        support = next;
        ech = next_ech;
    }
    if ech.rank() == 0 {
        return Some(empty);
    }

    // Close the support under permutations of tuple positions.
    let adjacent: Vec<Permutation> = (0..n.saturating_sub(1))
        .map(|i| Permutation::transposition(n, i, i + 1))
        .collect();
    let mut cols = support.cols.clone();
    let mut seen: std::collections::HashSet<usize> = cols.iter().copied().collect();
    let mut frontier = cols.clone();
    while let Some(c) = frontier.pop() {
        let (t, r) = decode(c, n, dim);
        for s in &adjacent {
            let moved: Vec<usize> = (0..n).map(|k| t[s.apply(k)]).collect();
            let d = encode(&moved, r, dim);
            if seen.insert(d) {
                cols.push(d);
                frontier.push(d);
            }
        }
    }
    let full = Support::new(cols);
    let maps: Vec<Vec<usize>> = adjacent
        .iter()
        .map(|s| full.permutation_map(s, n, dim).expect("support is closed"))
        .collect();

    let mut w = Echelon::new(field.clone(), full.len());
    let mut queue: Vec<Vec<F::Elem>> = Vec::new();
    for row in ech.rows() {
        let mut v = vec![field.zero(); full.len()];
        for (idx, x) in row.iter().enumerate() {
            v[full.index[&support.cols[idx]]] = x.clone();
        }
        if w.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if w.is_full() {
            break;
        }
        for map in &maps {
            let u = permute(&v, map);
            if w.insert(u.clone()) {
                queue.push(u);
            }
        }
    }
    let rank = w.rank();
    let (rows, pivots) = w.into_rows();

    let mut traces = Vec::with_capacity(req.traces.len());
    for tau in &req.traces {
        let map = full.permutation_map(tau, n, dim).expect("support is closed");
        let mut tr = field.zero();
        for (row, &p) in rows.iter().zip(&pivots) {
            tr = field.add(&tr, &row[map[p]]);
        }
        traces.push(field.to_signed_integer(&tr)?);
    }

    let mut annihilates = Vec::with_capacity(req.annihilators.len());
    for g in &req.annihilators {
        let terms: Vec<(Vec<usize>, F::Elem)> = g
            .terms()
            .iter()
            .map(|(p, c)| {
                field
                    .from_scalar(c)
                    .map(|e| (full.permutation_map(p, n, dim).expect("support is closed"), e))
            })
            .collect::<Option<_>>()?;
        let kills = rows.iter().all(|row| {
            let mut acc = vec![field.zero(); full.len()];
            for (map, c) in &terms {
                field.axpy(&mut acc, c, &permute(row, map));
            }
            acc.iter().all(|x| field.is_zero(x))
        });
        annihilates.push(kills);
    }

    Some(Summary {
        rank,
        traces,
        annihilates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::operator_algebra_basis;
    use crate::linalg::{PrimeField, Rationals};
    use crate::zoo;

    fn rank(alg: &Algebra, act: &HActionData, n: usize) -> usize {
        let prob = Problem::new(alg, act, n);
        let q = compute(Rationals, &prob, &Requests::default()).unwrap().rank;
        let p = compute(PrimeField::<2147483647>, &prob, &Requests::default()).unwrap().rank;
        assert_eq!(p, q);
        q
    }

    #[test]
    fn upper_triangular_codimensions() {
        let ut2 = zoo::upper_triangular(2);
        let triv = HActionData::trivial(&ut2);
        let c: Vec<usize> = (1..=5).map(|n| rank(&ut2, &triv, n)).collect();
        assert_eq!(c, vec![1, 2, 6, 18, 50]);
    }

    #[test]
    fn small_cases() {
        let p = zoo::point();
        assert_eq!(rank(&p, &HActionData::trivial(&p), 4), 1);
        let nil = zoo::truncated_polynomials(3);
        let c: Vec<usize> = (1..=4).map(|n| rank(&nil, &HActionData::trivial(&nil), n)).collect();
        assert_eq!(c, vec![1, 1, 0, 0]);
        let m2 = zoo::matrix_algebra(2);
        let t = operator_algebra_basis(&m2, zoo::transpose_generators(2)).unwrap();
        assert_eq!(rank(&m2, &t, 1), 2);
    }

    #[test]
    fn traces_on_the_point() {
        let p = zoo::point();
        let prob = Problem::new(&p, &HActionData::trivial(&p), 3);
        let req = Requests {
            traces: vec![Permutation::identity(3), Permutation::transposition(3, 0, 1)],
            annihilators: vec![GroupAlgebraElement::identity(3)],
        };
        let s = compute(Rationals, &prob, &req).unwrap();
        assert_eq!(s.traces, vec![1, 1]);
        assert_eq!(s.annihilates, vec![false]);
    }

    #[test]
    fn limits() {
        let l = Limits::default();
        assert!(l.check(4, 10, 4).is_ok());
        assert!(matches!(l.check(8, 6, 2), Err(Error::SizeLimit { .. })));
        assert!(matches!(l.check(10, 1, 8), Err(Error::SizeLimit { .. })));
    }
}
