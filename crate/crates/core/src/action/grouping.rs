use super::{operator_algebra_basis, Generator, HActionData};
use crate::algebra::{closure, Algebra, Quotient, SemisimpleDecomposition};
use crate::error::{Error, Result};
use crate::linalg::scalar;
use crate::linalg::{Matrix, Subspace};

/// Whether `γ(W) ⊆ W` for every basis operator of `ζ(H)`.
pub fn is_h_invariant(w: &Subspace, act: &HActionData) -> bool {
    act.zeta().iter().all(|z| {
        w.basis()
            .iter()
            .all(|v| w.contains(&z.matrix.mul_vec(v).expect("dimension")).unwrap_or(false))
    })
}

/// The action induced on `A/I` for an invariant ideal `I`. Generators keep
/// their names and rules; the basis of `ζ(H)` is recomputed on the quotient.
pub fn induced_quotient_action(act: &HActionData, quotient: &Quotient) -> Result<HActionData> {
    if !is_h_invariant(&quotient.ideal, act) {
        return Err(Error::NotHInvariant("the ideal is not stable under the action".into()));
    }
    let q = quotient.complement.len();
    let generators = act
        .generators()
        .iter()
        .map(|g| {
            let cols: Vec<_> = (0..q)
                .map(|t| {
                    let lifted = quotient.lift(&scalar::unit_vector(q, t));
                    quotient.project(&g.matrix.mul_vec(&lifted).expect("dimension"))
                })
                .collect();
            Generator::new(g.name.clone(), Matrix::from_columns(&cols, q), g.rule.clone())
        })
        .collect();
    operator_algebra_basis(&quotient.algebra, generators)
}

/// A union of simple components of a semisimple algebra that is an
/// H-simple H-invariant ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComponent {
    /// Indices into the decomposition's component list, increasing.
    pub simple: Vec<usize>,
    pub space: Subspace,
}

impl HComponent {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Groups the simple components of a semisimple algebra into H-simple
/// blocks: components `i`, `j` are joined when some operator maps `C_i`
/// nontrivially into `C_j`. Each block is checked to be invariant and to
/// contain no proper nonzero invariant ideal.
pub fn h_simple_grouping(
    alg: &Algebra,
    dec: &SemisimpleDecomposition,
    act: &HActionData,
) -> Result<Vec<HComponent>> {
    let q = dec.components.len();
    let mut parent: Vec<usize> = (0..q).collect();
    for (i, comp) in dec.components.iter().enumerate() {
        for z in act.zeta() {
            let image = comp.image(&z.matrix)?;
            for (j, e) in dec.central_idempotents.iter().enumerate() {
                if i == j {
                    continue;
                }
                let hits = image
                    .basis()
                    .iter()
                    .any(|v| !scalar::is_zero_vec(&alg.mul(e, v)));
                if hits {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; q];
    for i in 0..q {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(g) => groups[g].push(i),
            None => {
                root_of[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }
    let n = alg.dim();
    let mut out = Vec::with_capacity(groups.len());
    for simple in groups {
        let space = Subspace::span(
            n,
            simple
                .iter()
                .flat_map(|&i| dec.components[i].basis().iter().cloned()),
        );
        if !is_h_invariant(&space, act) {
            return Err(Error::NotHInvariant(format!(
                "block built from simple components {simple:?} is not stable"
            )));
        }
        for &i in &simple {
            for v in dec.components[i].basis() {
                let generated = closure(n, vec![v.clone()], |x| {
                    let mut next: Vec<_> = space
                        .basis()
                        .iter()
                        .flat_map(|b| [alg.mul(b, x), alg.mul(x, b)])
                        .collect();
                    next.extend((0..act.len()).map(|k| act.apply(k, x)));
                    next
                });
                if generated != space {
                    return Err(Error::NotHSimple(format!(
                        "block built from simple components {simple:?} has a proper invariant ideal of dimension {}",
                        generated.dim()
                    )));
                }
            }
        }
        out.push(HComponent { simple, space });
    }
    Ok(out)
}
