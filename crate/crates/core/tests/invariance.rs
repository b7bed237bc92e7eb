use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hopfpi_core::action::{operator_algebra_basis, Generator, HActionData, ProductRule, Quadruple};
use hopfpi_core::algebra::Algebra;
use hopfpi_core::invariants::{codimension_rank, pi_exponent, vanishing_report, CodimOptions};
use hopfpi_core::linalg::scalar::int;
use hopfpi_core::linalg::Matrix;
use hopfpi_core::model::zoo_model;
use hopfpi_core::poly::{enumerate_basis, is_identity, HPolynomial};
use hopfpi_core::symmetric::{apply_group_element, young_symmetrizer, Partition, Permutation, SymmetrizerKind, Tableau};

fn load(name: &str) -> (Algebra, HActionData) {
    let m = zoo_model(name).unwrap();
    let act = m.action().unwrap();
    (m.algebra, act)
}

fn codims(alg: &Algebra, act: &HActionData, max_n: usize) -> Vec<u64> {
    (1..=max_n).map(|n| codimension_rank(alg, act, n).unwrap().c).collect()
}

#[test]
fn codimensions_do_not_depend_on_the_declared_rule() {
    // On a commutative algebra `s(ab) = (sa)(sb) = (sb)(sa)`, so the swap
    // admits two different valid rules over the list [id, s].
    let (alg, act) = load("qq-swap");
    let swap = act.generators()[0].matrix.clone();
    let swapped = ProductRule::Generalized(vec![Quadruple {
        first: vec![int(0), int(0)],
        second: vec![int(0), int(0)],
        third: vec![int(0), int(1)],
        fourth: vec![int(0), int(1)],
    }]);
    let other = operator_algebra_basis(&alg, vec![Generator::new("s", swap, swapped)]).unwrap();
    assert_eq!(codims(&alg, &act, 5), codims(&alg, &other, 5));
    assert_eq!(pi_exponent(&alg, &act).unwrap().d, pi_exponent(&alg, &other).unwrap().d);
}

#[test]
fn codimensions_do_not_depend_on_the_operator_basis() {
    for name in ["m2-transpose", "bahturin-m2", "qq-swap"] {
        let (alg, act) = load(name);
        let ops: Vec<Matrix> = act.operators().into_iter().cloned().collect();
        let m = ops.len();
        // Reverse the basis and mix the first two operators.
        let mut rebased: Vec<Matrix> = ops.iter().rev().cloned().collect();
        if m >= 2 {
            rebased[0] = rebased[0].add(&rebased[1]).unwrap();
        }
        let names = (0..m).map(|k| format!("g{k}")).collect();
        let other = act.rebased(names, rebased).unwrap();
        other.verify_rules(&alg).unwrap();
        assert_eq!(codims(&alg, &act, 4), codims(&alg, &other, 4), "{name}");
    }
}

#[test]
fn exponent_is_stable_under_relabelled_actions() {
    let (alg, act) = load("bahturin-m2");
    let ops: Vec<Matrix> = act.operators().into_iter().cloned().collect();
    let names = (0..ops.len()).map(|k| format!("g{k}")).collect();
    let other = act.rebased(names, ops.into_iter().rev().collect()).unwrap();
    assert_eq!(pi_exponent(&alg, &other).unwrap().d, 4);
}

/// `e*_T` for a non-canonical tableau also kills every monomial modulo
/// identities when `λ` is constrained.
#[test]
fn vanishing_holds_for_other_tableaux() {
    let (alg, act) = load("ut2");
    let n = 5;
    let lambda = Partition::new(vec![2, 1, 1, 1]).unwrap();
    let basis = enumerate_basis(n, act.len(), 1_000_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2 {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut rng);
        let sigma = Permutation::new(images).unwrap();
        let t = Tableau::canonical(&lambda).permuted(&sigma);
        let e = young_symmetrizer(&t, SymmetrizerKind::EStar);
        for mono in &basis {
            let f = HPolynomial::from_monomial(act.len(), mono.clone()).unwrap();
            let g = apply_group_element(&e, &f).unwrap();
            assert!(is_identity(&g, &alg, &act).unwrap(), "{t:?}");
        }
    }
}

#[test]
fn vanishing_across_the_zoo() {
    let opts = CodimOptions::default();
    for name in ["point", "nil3", "ut2", "ut3", "m2-transpose", "bahturin-m2", "qq", "qq-swap"] {
        let (alg, act) = load(name);
        for n in 1..=4 {
            let r = vanishing_report(&alg, &act, n, &opts).unwrap();
            assert!(r.passed(), "{name} n={n}: {:?}", r.violations);
        }
    }
}

#[test]
fn ut3_codimensions_bounded_by_exponent_power() {
    let (alg, act) = load("ut3");
    let d = pi_exponent(&alg, &act).unwrap().d;
    assert_eq!(d, 3);
    let cs = codims(&alg, &act, 4);
    assert_eq!(cs[0], 1);
    for w in cs.windows(2) {
        assert!(w[0] <= w[1]);
    }
}
