use crate::action::HActionData;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::poly::{is_identity, HPolynomial};

/// Whether `f` is alternating in each of the (zero-based) variable sets and
/// is not an identity of `A`. The sets must be pairwise disjoint and of
/// equal size.
pub fn verify_witness(f: &HPolynomial, sets: &[Vec<usize>], alg: &Algebra, act: &HActionData) -> Result<bool> {
    if let Some(first) = sets.first() {
        if sets.iter().any(|s| s.len() != first.len()) {
            return Err(Error::InvalidArgument("variable sets differ in size".into()));
        }
    }
    let mut seen = vec![false; f.n()];
    for s in sets {
        for &x in s {
            if x >= f.n() {
                return Err(Error::InvalidArgument(format!("variable {x} out of range")));
            }
            if seen[x] {
                return Err(Error::InvalidArgument(format!("variable {x} appears in two sets")));
            }
            seen[x] = true;
        }
    }
    for s in sets {
        if !f.is_alternating_in(s)? {
            return Ok(false);
        }
    }
    Ok(!is_identity(f, alg, act)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::HMonomial;
    use crate::linalg::scalar::int;
    use crate::symmetric::Permutation;
    use crate::zoo;

    fn commutator() -> HPolynomial {
        let m = HMonomial::plain(2);
        let swapped = m.sn_act(&Permutation::transposition(2, 0, 1));
        HPolynomial::from_terms(2, 1, [(m, int(1)), (swapped, int(-1))]).unwrap()
    }

    #[test]
    fn commutator_witness() {
        let m2 = zoo::matrix_algebra(2);
        let pt = zoo::point();
        let f = commutator();
        assert!(verify_witness(&f, &[vec![0, 1]], &m2, &HActionData::trivial(&m2)).unwrap());
        assert!(!verify_witness(&f, &[vec![0, 1]], &pt, &HActionData::trivial(&pt)).unwrap());
    }

    #[test]
    fn standard_polynomial_is_an_identity_of_m2() {
        let m2 = zoo::matrix_algebra(2);
        let st4 = HPolynomial::from_monomial(1, HMonomial::plain(4))
            .unwrap()
            .alternate(&[0, 1, 2, 3])
            .unwrap();
        assert!(!verify_witness(&st4, &[vec![0, 1, 2, 3]], &m2, &HActionData::trivial(&m2)).unwrap());
        let st3 = HPolynomial::from_monomial(1, HMonomial::plain(3))
            .unwrap()
            .alternate(&[0, 1, 2])
            .unwrap();
        assert!(verify_witness(&st3, &[vec![0, 1, 2]], &m2, &HActionData::trivial(&m2)).unwrap());
    }

    #[test]
    fn bad_sets() {
        let m2 = zoo::matrix_algebra(2);
        let triv = HActionData::trivial(&m2);
        let f = commutator();
        assert!(verify_witness(&f, &[vec![0], vec![0]], &m2, &triv).is_err());
        assert!(verify_witness(&f, &[vec![0], vec![]], &m2, &triv).is_err());
        assert!(verify_witness(&f, &[vec![0], vec![1]], &m2, &triv).unwrap());
    }
}
