//! Generalized H-actions, represented by the image `ζ(H) ⊆ End(A)` together
//! with product rules for every basis operator.

mod grouping;
mod rule;

pub use grouping::{h_simple_grouping, induced_quotient_action, is_h_invariant, HComponent};
pub use rule::{verify_product_rule, ProductRule, Quadruple, RuleTensor};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::{CoordinateSystem, Echelon, Matrix, Rationals, Subspace};

/// A declared operator. Matrices act on column vectors: entry `(r, c)` is
/// the coefficient of `e_r` in `γ(e_c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub matrix: Matrix,
    pub rule: ProductRule,
}

impl Generator {
    pub fn new(name: impl Into<String>, matrix: Matrix, rule: ProductRule) -> Self {
        Self {
            name: name.into(),
            matrix,
            rule,
        }
    }
}

/// One basis operator of `ζ(H)`: the composition of generators along
/// `word` (leftmost applied last), with a product rule over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaElement {
    pub name: String,
    pub word: Vec<usize>,
    pub matrix: Matrix,
    pub rule: RuleTensor,
}

/// The generators of an action and a basis of the unital operator algebra
/// they generate. The first basis element is always the identity.
#[derive(Clone, Debug)]
pub struct HActionData {
    dim: usize,
    generators: Vec<Generator>,
    zeta: Vec<ZetaElement>,
    coords: CoordinateSystem,
}

fn flatten(m: &Matrix) -> Element {
    m.entries().to_vec()
}

impl HActionData {
    /// The trivial action: `ζ(H) = span{id}`.
    pub fn trivial(alg: &Algebra) -> Self {
        operator_algebra_basis(alg, Vec::new()).expect("trivial action is valid")
    }

    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn zeta(&self) -> &[ZetaElement] {
        &self.zeta
    }

    /// `m = dim ζ(H)`.
    pub fn len(&self) -> usize {
        self.zeta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeta.is_empty()
    }

    pub fn operators(&self) -> Vec<&Matrix> {
        self.zeta.iter().map(|z| &z.matrix).collect()
    }

    pub fn names(&self) -> Vec<&str> {
        self.zeta.iter().map(|z| z.name.as_str()).collect()
    }

    /// `ζ(H)` as a subspace of `End(A)`, flattened row-major.
    pub fn span(&self) -> &Subspace {
        self.coords.span()
    }

    /// Coordinates of an operator in the basis, if it lies in `ζ(H)`.
    pub fn coordinates(&self, op: &Matrix) -> Option<Vec<Scalar>> {
        if op.rows() != self.dim || op.cols() != self.dim {
            return None;
        }
        self.coords.coordinates(&flatten(op))
    }

    pub fn apply(&self, k: usize, v: &[Scalar]) -> Element {
        self.zeta[k].matrix.mul_vec(v).expect("dimension checked")
    }

    /// Whether the trivial action: only the identity operator.
    pub fn is_trivial(&self) -> bool {
        self.zeta.len() == 1
    }

    /// Checks every basis rule on every basis pair.
    pub fn verify_rules(&self, alg: &Algebra) -> Result<()> {
        let ops: Vec<Matrix> = self.zeta.iter().map(|z| z.matrix.clone()).collect();
        for z in &self.zeta {
            if let Some((i, j)) = z.rule.first_violation(alg, &z.matrix, &ops) {
                return Err(Error::RuleViolation {
                    op: z.name.clone(),
                    i,
                    j,
                });
            }
        }
        Ok(())
    }

    /// The same action with a different basis of `ζ(H)`. The new operators
    /// must span the same space; their rules are obtained by linearity.
    pub fn rebased(&self, names: Vec<String>, ops: Vec<Matrix>) -> Result<Self> {
        let m = self.zeta.len();
        if ops.len() != m || names.len() != m {
            return Err(Error::InvalidArgument(format!("a basis of ζ(H) needs {m} operators")));
        }
        let flat: Vec<Element> = ops.iter().map(flatten).collect();
        if Subspace::span(self.dim * self.dim, flat.clone()) != *self.span() {
            return Err(Error::InvalidArgument("operators do not form a basis of ζ(H)".into()));
        }
        let coords = CoordinateSystem::new(self.dim * self.dim, &flat);
        // change[k]: old basis element k in new coordinates.
        let change: Vec<Vec<Scalar>> = self
            .zeta
            .iter()
            .map(|z| coords.coordinates(&flatten(&z.matrix)).expect("same span"))
            .collect();
        let mut zeta = Vec::with_capacity(m);
        for ((name, op), f) in names.into_iter().zip(ops).zip(&flat) {
            let old = self.coords.coordinates(f).expect("same span");
            let mut rule = RuleTensor::default();
            for (c, z) in old.iter().zip(&self.zeta) {
                rule.add_assign(&z.rule.scaled(c));
            }
            zeta.push(ZetaElement {
                name,
                word: Vec::new(),
                matrix: op,
                rule: rule.rebased(&change),
            });
        }
        Ok(Self {
            dim: self.dim,
            generators: self.generators.clone(),
            zeta,
            coords,
        })
    }
}

/// Verifies the generators and closes them to a basis of the unital
/// operator algebra they generate. Words are enumerated by length, then
/// lexicographically, and only words that enlarge the span are extended.
pub fn operator_algebra_basis(alg: &Algebra, generators: Vec<Generator>) -> Result<HActionData> {
    let n = alg.dim();
    let declared: Vec<Matrix> = generators.iter().map(|g| g.matrix.clone()).collect();
    for g in &generators {
        verify_product_rule(alg, &g.name, &g.matrix, &g.rule, &declared)?;
    }
    let mut ech = Echelon::new(Rationals, n * n);
    let identity = Matrix::identity(n);
    ech.insert(flatten(&identity));
    let mut basis: Vec<(Vec<usize>, Matrix)> = vec![(Vec::new(), identity)];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &b in &frontier {
            for (g, gen) in generators.iter().enumerate() {
                let op = basis[b].1.mul(&gen.matrix).expect("square");
                if ech.insert(flatten(&op)) {
                    let mut word = basis[b].0.clone();
                    word.push(g);
                    next.push(basis.len());
                    basis.push((word, op));
                }
            }
        }
        frontier = next;
    }
    let flat: Vec<Element> = basis.iter().map(|(_, m)| flatten(m)).collect();
    let coords = CoordinateSystem::new(n * n, &flat);
    let m = basis.len();
    let coord_of = |op: &Matrix| coords.coordinates(&flatten(op)).expect("closed under composition");
    let comp: Vec<Vec<Vec<Scalar>>> = basis
        .iter()
        .map(|(_, p)| basis.iter().map(|(_, k)| coord_of(&p.mul(k).expect("square"))).collect())
        .collect();
    // Declared list [id, generators...] in basis coordinates.
    let mut declared_coords = vec![scalar::unit_vector(m, 0)];
    declared_coords.extend(declared.iter().map(coord_of));
    let gen_rules: Vec<RuleTensor> = generators
        .iter()
        .enumerate()
        .map(|(g, gen)| RuleTensor::from_rule(&gen.rule, &declared_coords[g + 1], &declared_coords))
        .collect::<Result<_>>()?;
    let mut zeta: Vec<ZetaElement> = Vec::with_capacity(m);
    for (word, matrix) in basis {
        let rule = match word.split_last() {
            None => RuleTensor::from_rule(&ProductRule::Unit, &declared_coords[0], &declared_coords)?,
            Some((&last, prefix)) => {
                let prefix_rule = zeta
                    .iter()
                    .find(|z| z.word == prefix)
                    .map(|z| z.rule.clone())
                    .expect("prefixes are basis words");
                RuleTensor::compose(&prefix_rule, &gen_rules[last], &comp)
            }
        };
        let name = if word.is_empty() {
            "id".to_string()
        } else {
            word.iter().map(|&g| generators[g].name.as_str()).collect::<Vec<_>>().join(".")
        };
        zeta.push(ZetaElement {
            name,
            word,
            matrix,
            rule,
        });
    }
    Ok(HActionData {
        dim: n,
        generators,
        zeta,
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn closure_sizes() {
        let m2 = zoo::matrix_algebra(2);
        assert_eq!(HActionData::trivial(&m2).len(), 1);
        let act = operator_algebra_basis(&m2, zoo::transpose_generators(2)).unwrap();
        assert_eq!(act.names(), vec!["id", "T"]);
        let b = zoo::bahturin(2);
        let act = operator_algebra_basis(&b, zoo::bahturin_generators(2)).unwrap();
        assert_eq!(act.len(), 2);
        // (φ - id)^2 = 0, hence φ^2 = 2φ - id.
        let phi = &act.zeta()[1].matrix;
        let phi2 = phi.mul(phi).unwrap();
        assert_eq!(act.coordinates(&phi2), Some(vec![scalar::int(-1), scalar::int(2)]));
        let act = operator_algebra_basis(&m2, zoo::adjoint_generators(2)).unwrap();
        assert_eq!(act.len(), 10);
    }

    #[test]
    fn declared_rules() {
        let m2 = zoo::matrix_algebra(2);
        for g in zoo::transpose_generators(2)
            .into_iter()
            .chain(zoo::adjoint_generators(2))
        {
            verify_product_rule(&m2, &g.name, &g.matrix, &g.rule, &[]).unwrap();
        }
        let b = zoo::bahturin(2);
        let phi = &zoo::bahturin_generators(2)[0];
        verify_product_rule(&b, "phi", &phi.matrix, &ProductRule::Automorphism, &[]).unwrap();
        // φ is not a derivation.
        assert!(matches!(
            verify_product_rule(&b, "phi", &phi.matrix, &ProductRule::Derivation, &[]),
            Err(Error::RuleViolation { .. })
        ));
        // Transpose is not an automorphism of M2.
        let t = &zoo::transpose_generators(2)[0];
        assert!(verify_product_rule(&m2, "T", &t.matrix, &ProductRule::Automorphism, &[]).is_err());
    }

    #[test]
    fn closure_rules_verify() {
        let cases = [
            (zoo::matrix_algebra(2), zoo::adjoint_generators(2)),
            (zoo::matrix_algebra(2), zoo::transpose_generators(2)),
            (zoo::bahturin(2), zoo::bahturin_generators(2)),
            (zoo::bahturin(2), zoo::bahturin_adjoint_generators(2)),
        ];
        for (alg, gens) in cases {
            let act = operator_algebra_basis(&alg, gens).unwrap();
            act.verify_rules(&alg).unwrap();
            let ops = act.operators();
            for a in &ops {
                for b in &ops {
                    assert!(act.coordinates(&a.mul(b).unwrap()).is_some());
                }
            }
        }
    }

    #[test]
    fn generalized_rule_over_declared_list() {
        // ad(e12) written as a generalized rule: h(ab) = (h a)(id b) + (id a)(h b).
        let m2 = zoo::matrix_algebra(2);
        let ad = zoo::adjoint_generators(2).remove(1);
        let q = |v: &[i64]| v.iter().map(|&x| scalar::int(x)).collect::<Vec<_>>();
        let rule = ProductRule::Generalized(vec![
            Quadruple {
                first: q(&[0, 1]),
                second: q(&[1, 0]),
                third: q(&[0, 0]),
                fourth: q(&[0, 0]),
            },
            Quadruple {
                first: q(&[1, 0]),
                second: q(&[0, 1]),
                third: q(&[0, 0]),
                fourth: q(&[0, 0]),
            },
        ]);
        let gens = vec![Generator::new("ad", ad.matrix.clone(), rule.clone())];
        let act = operator_algebra_basis(&m2, gens).unwrap();
        act.verify_rules(&m2).unwrap();
        let bad = ProductRule::Generalized(vec![Quadruple {
            first: q(&[0, 1]),
            second: q(&[1, 0]),
            third: q(&[0, 0]),
            fourth: q(&[0, 0]),
        }]);
        assert!(verify_product_rule(&m2, "ad", &ad.matrix, &bad, std::slice::from_ref(&ad.matrix)).is_err());
    }

    #[test]
    fn rebased_rules_verify() {
        let b = zoo::bahturin(2);
        let act = operator_algebra_basis(&b, zoo::bahturin_generators(2)).unwrap();
        let phi = act.zeta()[1].matrix.clone();
        let id = act.zeta()[0].matrix.clone();
        // Basis (3φ - id, 2 id).
        let ops = vec![
            phi.scale(&scalar::int(3)).add(&id.scale(&scalar::int(-1))).unwrap(),
            id.scale(&scalar::int(2)),
        ];
        let re = act.rebased(vec!["a".into(), "b".into()], ops).unwrap();
        re.verify_rules(&b).unwrap();
    }
}
