use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::Matrix;

/// Four coefficient vectors `(h', h'', h''', h'''')` over a list of operators,
/// contributing `(h' a)(h'' b) + (h''' b)(h'''' a)` to `h(ab)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub first: Vec<Scalar>,
    pub second: Vec<Scalar>,
    pub third: Vec<Scalar>,
    pub fourth: Vec<Scalar>,
}

impl Quadruple {
    pub fn parts(&self) -> [&Vec<Scalar>; 4] {
        [&self.first, &self.second, &self.third, &self.fourth]
    }
}

/// How an operator interacts with the product.
///
/// `Generalized` quadruples are expressed over the declared operator list
/// `[id, generator_0, generator_1, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductRule {
    /// `h(ab) = (ha)(hb)`
    Automorphism,
    /// `h(ab) = (hb)(ha)`
    AntiAutomorphism,
    /// `h(ab) = (ha)b + a(hb)`
    Derivation,
    /// `h(ab) = ab`
    Unit,
    Generalized(Vec<Quadruple>),
}

impl ProductRule {
    pub fn tag(&self) -> &'static str {
        match self {
            ProductRule::Automorphism => "automorphism",
            ProductRule::AntiAutomorphism => "antiautomorphism",
            ProductRule::Derivation => "derivation",
            ProductRule::Unit => "unit",
            ProductRule::Generalized(_) => "generalized",
        }
    }
}

/// A product rule written against an operator list `Γ`:
/// `h(ab) = Σ S_kl (Γ_k a)(Γ_l b) + Σ T_kl (Γ_k b)(Γ_l a)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleTensor {
    pub straight: BTreeMap<(usize, usize), Scalar>,
    pub swapped: BTreeMap<(usize, usize), Scalar>,
}

fn accumulate(map: &mut BTreeMap<(usize, usize), Scalar>, key: (usize, usize), c: Scalar) {
    let entry = map.entry(key).or_insert_with(Scalar::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

fn add_outer(map: &mut BTreeMap<(usize, usize), Scalar>, c: &Scalar, u: &[Scalar], v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (k, uk) in u.iter().enumerate() {
        if uk.is_zero() {
            continue;
        }
        let cu = c * uk;
        for (l, vl) in v.iter().enumerate() {
            if !vl.is_zero() {
                accumulate(map, (k, l), &cu * vl);
            }
        }
    }
}

impl RuleTensor {
    /// Translates a declared rule. `own` is the operator's coordinate vector
    /// in the target list and `declared[i]` the coordinates of the i-th
    /// declared operator (`declared[0]` is the identity).
    pub fn from_rule(rule: &ProductRule, own: &[Scalar], declared: &[Vec<Scalar>]) -> Result<Self> {
        let id = &declared[0];
        let one = scalar::one();
        let mut t = RuleTensor::default();
        match rule {
            ProductRule::Automorphism => add_outer(&mut t.straight, &one, own, own),
            ProductRule::AntiAutomorphism => add_outer(&mut t.swapped, &one, own, own),
            ProductRule::Derivation => {
                add_outer(&mut t.straight, &one, own, id);
                add_outer(&mut t.straight, &one, id, own);
            }
            ProductRule::Unit => add_outer(&mut t.straight, &one, id, id),
            ProductRule::Generalized(quads) => {
                let m = declared.first().map_or(0, Vec::len);
                let combine = |coeffs: &[Scalar]| -> Result<Vec<Scalar>> {
                    if coeffs.len() != declared.len() {
                        return Err(Error::Validation(format!(
                            "quadruple has {} coefficients, expected {}",
                            coeffs.len(),
                            declared.len()
                        )));
                    }
                    let mut out = scalar::zeros(m);
                    for (c, d) in coeffs.iter().zip(declared) {
                        scalar::add_scaled(&mut out, c, d);
                    }
                    Ok(out)
                };
                for q in quads {
                    let [a, b, c, d] = q.parts().map(|v| combine(v));
                    add_outer(&mut t.straight, &one, &a?, &b?);
                    add_outer(&mut t.swapped, &one, &c?, &d?);
                }
            }
        }
        Ok(t)
    }

    /// First basis pair `(i, j)` where `op(e_i e_j)` differs from the right
    /// hand side of the rule evaluated with `ops`.
    pub fn first_violation(&self, alg: &Algebra, op: &Matrix, ops: &[Matrix]) -> Option<(usize, usize)> {
        let n = alg.dim();
        // images[k][i] = Γ_k e_i
        let images: Vec<Vec<Element>> = ops
            .iter()
            .map(|g| (0..n).map(|i| g.column(i)).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let prod = alg.mul(&alg.basis_element(i), &alg.basis_element(j));
                let lhs = op.mul_vec(&prod).expect("square operator");
                let mut rhs = scalar::zeros(n);
                for ((k, l), c) in &self.straight {
                    scalar::add_scaled(&mut rhs, c, &alg.mul(&images[*k][i], &images[*l][j]));
                }
                for ((k, l), c) in &self.swapped {
                    scalar::add_scaled(&mut rhs, c, &alg.mul(&images[*k][j], &images[*l][i]));
                }
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Rule of `outer ∘ inner`, where `comp[p][k]` are the coordinates of
    /// `Γ_p Γ_k` in the operator list.
    pub fn compose(outer: &RuleTensor, inner: &RuleTensor, comp: &[Vec<Vec<Scalar>>]) -> RuleTensor {
        let mut t = RuleTensor::default();
        let mut push = |straight: bool, c: Scalar, u: &[Scalar], v: &[Scalar]| {
            let map = if straight { &mut t.straight } else { &mut t.swapped };
            add_outer(map, &c, u, v);
        };
        for ((k, l), h) in &inner.straight {
            for ((p, q), g) in &outer.straight {
                push(true, g * h, &comp[*p][*k], &comp[*q][*l]);
            }
            for ((p, q), g) in &outer.swapped {
                push(false, g * h, &comp[*p][*l], &comp[*q][*k]);
            }
        }
        for ((k, l), h) in &inner.swapped {
            for ((p, q), g) in &outer.straight {
                push(false, g * h, &comp[*p][*k], &comp[*q][*l]);
            }
            for ((p, q), g) in &outer.swapped {
                push(true, g * h, &comp[*p][*l], &comp[*q][*k]);
            }
        }
        t
    }

    pub fn scaled(&self, c: &Scalar) -> RuleTensor {
        let mut t = RuleTensor::default();
        for (key, v) in &self.straight {
            accumulate(&mut t.straight, *key, c * v);
        }
        for (key, v) in &self.swapped {
            accumulate(&mut t.swapped, *key, c * v);
        }
        t
    }

    pub fn add_assign(&mut self, other: &RuleTensor) {
        for (key, v) in &other.straight {
            accumulate(&mut self.straight, *key, v.clone());
        }
        for (key, v) in &other.swapped {
            accumulate(&mut self.swapped, *key, v.clone());
        }
    }

    /// Re-expresses the tensor after a change of operator list, where
    /// `change[k]` gives old operator `k` in new coordinates.
    pub fn rebased(&self, change: &[Vec<Scalar>]) -> RuleTensor {
        let mut t = RuleTensor::default();
        for ((k, l), c) in &self.straight {
            add_outer(&mut t.straight, c, &change[*k], &change[*l]);
        }
        for ((k, l), c) in &self.swapped {
            add_outer(&mut t.swapped, c, &change[*k], &change[*l]);
        }
        t
    }

    /// The same rule as explicit quadruples over an operator list of length
    /// `m`, one quadruple per nonzero entry.
    pub fn to_quadruples(&self, m: usize) -> Vec<Quadruple> {
        let unit = |k: usize, c: Scalar| {
            let mut v = scalar::zeros(m);
            v[k] = c;
            v
        };
        let zero = scalar::zeros(m);
        let mut out = Vec::new();
        for ((k, l), c) in &self.straight {
            out.push(Quadruple {
                first: unit(*k, c.clone()),
                second: unit(*l, scalar::one()),
                third: zero.clone(),
                fourth: zero.clone(),
            });
        }
        for ((k, l), c) in &self.swapped {
            out.push(Quadruple {
                first: zero.clone(),
                second: zero.clone(),
                third: unit(*k, c.clone()),
                fourth: unit(*l, scalar::one()),
            });
        }
        out
    }
}

/// Checks `rule` for `op` on every basis pair. `declared` is the list of
/// generator matrices that `Generalized` quadruples refer to (after the
/// implicit identity).
pub fn verify_product_rule(
    alg: &Algebra,
    name: &str,
    op: &Matrix,
    rule: &ProductRule,
    declared: &[Matrix],
) -> Result<()> {
    let n = alg.dim();
    if op.rows() != n || op.cols() != n {
        return Err(Error::Validation(format!(
            "operator `{name}` is {}x{}, algebra has dimension {n}",
            op.rows(),
            op.cols()
        )));
    }
    // Operator list: [op, id, declared...]; the rule refers to its own
    // operator through slot 0.
    let mut ops = vec![op.clone(), Matrix::identity(n)];
    ops.extend(declared.iter().cloned());
    let len = ops.len();
    let own = scalar::unit_vector(len, 0);
    let declared_coords: Vec<Vec<Scalar>> = (1..len).map(|i| scalar::unit_vector(len, i)).collect();
    let tensor = RuleTensor::from_rule(rule, &own, &declared_coords)?;
    match tensor.first_violation(alg, op, &ops) {
        None => Ok(()),
        Some((i, j)) => Err(Error::RuleViolation {
            op: name.to_string(),
            i,
            j,
        }),
    }
}
