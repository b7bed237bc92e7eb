use crate::action::{h_simple_grouping, induced_quotient_action, is_h_invariant, HActionData, HComponent};
use crate::algebra::{jacobson_radical, simple_decomposition, wedderburn_section, Algebra, Element, Quotient, Section};
use crate::error::{check_dim, Error, Result};
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentResult {
    pub d: usize,
    /// Indices into `group_dims` of an optimal chain, in chain order.
    pub witness: Vec<usize>,
    /// A nonzero element of the optimal chain product.
    pub certificate: Option<Element>,
    pub nilpotent: bool,
    /// Dimensions of the H-simple components of `A/J`.
    pub group_dims: Vec<usize>,
    pub radical_dim: usize,
    pub nilpotency_index: usize,
}

/// Overrides for [`pi_exponent_with`].
#[derive(Clone, Debug, Default)]
pub struct ExponentOptions {
    /// A section to use instead of the computed one.
    pub section: Option<Section>,
    /// Processes the H-simple components in this order; indices in the
    /// result refer to the reordered list.
    pub component_order: Option<Vec<usize>>,
}

/// The exponent `d`: the largest total dimension of distinct H-simple
/// components `B_{i_1}, …, B_{i_r}` with
/// `(Hκ(B_{i_1})) A⁺ (Hκ(B_{i_2})) A⁺ ⋯ (Hκ(B_{i_r})) ≠ 0`.
pub fn pi_exponent(alg: &Algebra, act: &HActionData) -> Result<ExponentResult> {
    pi_exponent_with(alg, act, &ExponentOptions::default())
}

pub fn pi_exponent_with(alg: &Algebra, act: &HActionData, opts: &ExponentOptions) -> Result<ExponentResult> {
    check_dim(alg.dim(), act.algebra_dim())?;
    let rad = jacobson_radical(alg);
    let radical_dim = rad.radical.dim();
    if radical_dim == alg.dim() {
        return Ok(ExponentResult {
            d: 0,
            witness: Vec::new(),
            certificate: None,
            nilpotent: true,
            group_dims: Vec::new(),
            radical_dim,
            nilpotency_index: rad.nilpotency_index,
        });
    }
    if !is_h_invariant(&rad.radical, act) {
        return Err(Error::NotHInvariant("the radical is not stable under the action".into()));
    }
    let (quotient, computed) = wedderburn_section(alg)?;
    let section = match &opts.section {
        Some(s) => {
            s.verify(alg, &quotient)?;
            s
        }
        None => &computed,
    };
    let mut groups = h_components(&quotient, act)?;
    if let Some(order) = &opts.component_order {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..groups.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not an ordering of {} components",
                groups.len()
            )));
        }
        groups = order.iter().map(|&i| groups[i].clone()).collect();
    }

    let n = alg.dim();
    let orbits: Vec<Subspace> = groups
        .iter()
        .map(|g| {
            Subspace::span(
                n,
                g.space.basis().iter().flat_map(|b| {
                    let kb = section.apply(b);
                    act.zeta()
                        .iter()
                        .map(move |z| z.matrix.mul_vec(&kb).expect("dimension"))
                        .collect::<Vec<_>>()
                }),
            )
        })
        .collect();
    let dims: Vec<usize> = groups.iter().map(HComponent::dim).collect();

    let mut best = Best::default();
    let mut used = vec![false; groups.len()];
    let mut chain = Vec::new();
    for i in 0..groups.len() {
        used[i] = true;
        chain.push(i);
        extend(alg, &orbits, &dims, orbits[i].clone(), dims[i], &mut used, &mut chain, &mut best)?;
        chain.pop();
        used[i] = false;
    }
    Ok(ExponentResult {
        d: best.d,
        witness: best.witness,
        certificate: best.certificate,
        nilpotent: false,
        group_dims: dims,
        radical_dim,
        nilpotency_index: rad.nilpotency_index,
    })
}

/// H-simple components of `A/J` under the induced action.
pub fn h_components(quotient: &Quotient, act: &HActionData) -> Result<Vec<HComponent>> {
    let induced = induced_quotient_action(act, quotient)?;
    let dec = simple_decomposition(&quotient.algebra)?;
    h_simple_grouping(&quotient.algebra, &dec, &induced)
}

#[derive(Default)]
struct Best {
    d: usize,
    witness: Vec<usize>,
    certificate: Option<Element>,
}

#[allow(clippy::too_many_arguments)]
fn extend(
    alg: &Algebra,
    orbits: &[Subspace],
    dims: &[usize],
    space: Subspace,
    total: usize,
    used: &mut [bool],
    chain: &mut Vec<usize>,
    best: &mut Best,
) -> Result<()> {
    if space.is_zero() {
        return Ok(());
    }
    if total > best.d {
        best.d = total;
        best.witness = chain.clone();
        best.certificate = space.basis().first().cloned();
    }
    let hull = alg.times_unital_hull(&space)?;
    for j in 0..orbits.len() {
        if used[j] {
            continue;
        }
        let next = alg.subspace_product(&hull, &orbits[j])?;
        used[j] = true;
        chain.push(j);
        extend(alg, orbits, dims, next, total + dims[j], used, chain, best)?;
        chain.pop();
        used[j] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::operator_algebra_basis;
    use crate::zoo;

    #[test]
    fn basic_exponents() {
        let m2 = zoo::matrix_algebra(2);
        assert_eq!(pi_exponent(&m2, &HActionData::trivial(&m2)).unwrap().d, 4);
        let pt = zoo::point();
        assert_eq!(pi_exponent(&pt, &HActionData::trivial(&pt)).unwrap().d, 1);
        let nil = zoo::truncated_polynomials(3);
        let r = pi_exponent(&nil, &HActionData::trivial(&nil)).unwrap();
        assert_eq!((r.d, r.nilpotent, r.nilpotency_index), (0, true, 3));
    }

    #[test]
    fn upper_triangular_chain() {
        let ut2 = zoo::upper_triangular(2);
        let r = pi_exponent(&ut2, &HActionData::trivial(&ut2)).unwrap();
        assert_eq!(r.d, 2);
        assert_eq!(r.witness.len(), 2);
        // The chain e11 · e12 · e22 spans e12.
        assert_eq!(r.certificate.unwrap(), ut2.basis_element(1));
        let ut3 = zoo::upper_triangular(3);
        assert_eq!(pi_exponent(&ut3, &HActionData::trivial(&ut3)).unwrap().d, 3);
    }

    #[test]
    fn bahturin_and_direct_sums() {
        let b = zoo::bahturin(2);
        let act = operator_algebra_basis(&b, zoo::bahturin_generators(2)).unwrap();
        let r = pi_exponent(&b, &act).unwrap();
        assert_eq!((r.d, r.radical_dim, r.nilpotency_index), (4, 4, 2));
        let qq = zoo::diagonal(2);
        assert_eq!(pi_exponent(&qq, &HActionData::trivial(&qq)).unwrap().d, 1);
        let swap = operator_algebra_basis(&qq, vec![zoo::permutation_generator("s", &[1, 0])]).unwrap();
        assert_eq!(pi_exponent(&qq, &swap).unwrap().d, 2);
    }

    #[test]
    fn component_order_does_not_matter() {
        let ut2 = zoo::upper_triangular(2);
        let triv = HActionData::trivial(&ut2);
        let opts = ExponentOptions {
            component_order: Some(vec![1, 0]),
            ..ExponentOptions::default()
        };
        assert_eq!(pi_exponent_with(&ut2, &triv, &opts).unwrap().d, 2);
        let bad = ExponentOptions {
            component_order: Some(vec![0, 0]),
            ..ExponentOptions::default()
        };
        assert!(pi_exponent_with(&ut2, &triv, &bad).is_err());
    }
}
