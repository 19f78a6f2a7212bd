use super::fixtures::{c2_swap_module, yd_catalog};
use super::*;
use crate::bialgebra::catalog::{catalog, cyclic_group, sweedler, truncated_monoid};
use crate::linalg::{Budget, FieldSpec, SparseMatrix};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn all_bialgebras() -> Vec<Bialgebra> {
    let mut v: Vec<Bialgebra> = ["cyclic-group(2)", "cyclic-group(3)", "sweedler", "dual-of(sweedler)", "truncated-monoid"]
        .iter()
        .map(|n| catalog(n, q()).unwrap())
        .collect();
    v.push(cyclic_group(2, FieldSpec::prime(2).unwrap()).unwrap());
    v
}

fn checks(r: &DefectReport) -> Vec<Check> {
    r.iter().map(|d| d.check).collect()
}

#[test]
fn trivial_module_is_yd_everywhere() {
    for b in all_bialgebras() {
        assert!(check_yd(&b, &trivial_yd(&b)).unwrap().is_empty(), "{}", b.name());
    }
}

#[test]
fn trivial_module_is_not_a_hopf_module() {
    // ε(a)·1⊗1 against 1⊗a: only equal when A is one-dimensional.
    let b = cyclic_group(2, q()).unwrap();
    let r = check_hopf_module(&b, &trivial_yd(&b)).unwrap();
    assert_eq!(checks(&r), vec![Check::HopfLeftRight]);
    assert_eq!(r[0].witness, vec![1, 0]);
}

#[test]
fn c2_sign_in_degree_g_is_yd() {
    let b = cyclic_group(2, q()).unwrap();
    let m = one_dimensional(&b, "s", &[q().one(), q().from_i64(-1)], 1, ModuleClass::Yd).unwrap();
    assert!(check_yd(&b, &m).unwrap().is_empty());
}

#[test]
fn c2_coaction_through_one_plus_g_fails() {
    let b = cyclic_group(2, q()).unwrap();
    let m = StructuredModule::new("bad", q(), 1, ModuleClass::Yd)
        .with_left_action(vec![vec![vec![(0, q().one())]], vec![vec![(0, q().from_i64(-1))]]])
        .unwrap()
        .with_right_coaction(vec![vec![(0, 0, q().from_i64(3)), (0, 1, q().from_i64(3))]])
        .unwrap();
    let r = check_yd(&b, &m).unwrap();
    assert!(r.iter().any(|d| d.check == Check::RightCoactionCoassociativity));
}

#[test]
fn regular_module_is_hopf_for_every_catalog_entry() {
    for b in all_bialgebras() {
        assert!(check_hopf_module(&b, &regular_hopf_module(&b)).unwrap().is_empty(), "{}", b.name());
        assert!(check_hopf_bimodule(&b, &regular_bimodule(&b)).unwrap().is_empty(), "{}", b.name());
    }
}

#[test]
fn sweedler_with_constant_coaction_fails_at_x() {
    let h = sweedler(q()).unwrap();
    let constant: Vec<CoproductTerms> = (0..4).map(|u| vec![(u, 0, q().one())]).collect();
    let mut m = regular_hopf_module(&h);
    m.right_coaction = Some(CoactionTensor::new(Side::Right, 4, constant.clone()).unwrap());
    let r = check_hopf_module(&h, &m).unwrap();
    assert!(r.iter().any(|d| d.check == Check::HopfLeftRight && d.witness == vec![2, 0]));

    let mut bi = regular_bimodule(&h);
    bi.right_coaction = Some(CoactionTensor::new(Side::Right, 4, constant).unwrap());
    let r = check_hopf_bimodule(&h, &bi).unwrap();
    assert!(r.iter().any(|d| d.check == Check::HopfRightRight));
}

#[test]
fn free_bimodule_passes() {
    for b in [sweedler(q()).unwrap(), cyclic_group(2, q()).unwrap()] {
        let m = free_hopf_bimodule(1, &b, Budget::default()).unwrap();
        assert_eq!(m.dim, b.dim() * b.dim());
        assert!(check_hopf_bimodule(&b, &m).unwrap().is_empty(), "{}", b.name());
    }
}

#[test]
fn free_hopf_modules() {
    let c2 = cyclic_group(2, q()).unwrap();
    let m = free_hopf_module(1, &c2, Budget::default()).unwrap();
    assert_eq!(m.dim, 2);
    assert!(check_hopf_module(&c2, &m).unwrap().is_empty());
    let h = sweedler(q()).unwrap();
    let m = free_hopf_module(2, &h, Budget::default()).unwrap();
    assert_eq!(m.dim, 8);
    assert!(check_hopf_module(&h, &m).unwrap().is_empty());
    assert_eq!(coinvariants(&h, &m).unwrap().dim(), 2);
    let m = free_hopf_module(3, &h, Budget::default()).unwrap();
    assert_eq!(coinvariants(&h, &m).unwrap().dim(), 3);
}

#[test]
fn coinvariants_examples() {
    let h = sweedler(q()).unwrap();
    let c = coinvariants(&h, &regular_hopf_module(&h)).unwrap();
    assert_eq!(c.dim(), 1);
    assert!(c.contains(&vec![(0, q().one())]));
    let b = cyclic_group(2, q()).unwrap();
    let m = from_matrices(
        &b,
        "flat",
        &[SparseMatrix::identity(3, q()), SparseMatrix::identity(3, q())],
        &[0, 0, 0],
        ModuleClass::Plain,
    )
    .unwrap();
    assert_eq!(coinvariants(&b, &m).unwrap().dim(), 3);
}

#[test]
fn decomposition_of_free_and_regular() {
    let h = sweedler(q()).unwrap();
    let m = free_hopf_module(2, &h, Budget::default()).unwrap();
    let dec = fundamental_decomposition(&h, &m).unwrap();
    assert_eq!(dec.coinvariants.dim(), 2);
    let reg = regular_hopf_module(&h);
    let dec = fundamental_decomposition(&h, &reg).unwrap();
    assert_eq!(dec.coinvariants.dim(), 1);
    assert_eq!(dec.forward, SparseMatrix::identity(4, q()));
}

#[test]
fn decomposition_needs_skew_antipode() {
    let t = truncated_monoid(q()).unwrap();
    let m = regular_hopf_module(&t);
    assert!(matches!(fundamental_decomposition(&t, &m), Err(Error::Unsupported(_))));
}

#[test]
fn conjugation_preserves_structure() {
    let h = sweedler(q()).unwrap();
    let p = SparseMatrix::from_dense(
        q(),
        &[vec![1, 2, 0, 0], vec![0, 1, 0, 3], vec![1, 0, 1, 0], vec![0, 0, 1, 1]],
    );
    let m = conjugate(&regular_hopf_module(&h), &p).unwrap();
    assert_ne!(m.left_action, regular_hopf_module(&h).left_action);
    assert!(check_hopf_module(&h, &m).unwrap().is_empty());
    let dec = fundamental_decomposition(&h, &m).unwrap();
    assert_eq!(dec.coinvariants.dim(), 1);
}

#[test]
fn yd_catalog_entries_pass() {
    let fields = [q(), FieldSpec::prime(2).unwrap()];
    for f in fields {
        let b = cyclic_group(2, f).unwrap();
        let cat = yd_catalog(&b).unwrap();
        assert_eq!(cat.len(), if f.characteristic() == 2 { 2 } else { 4 });
        for (label, m) in cat {
            assert!(check_yd(&b, &m).unwrap().is_empty(), "{label} over {f}");
        }
    }
    for b in [cyclic_group(3, q()).unwrap(), sweedler(q()).unwrap()] {
        for (label, m) in yd_catalog(&b).unwrap() {
            assert!(check_yd(&b, &m).unwrap().is_empty(), "{label}");
        }
    }
}

#[test]
fn sweedler_sign_in_degree_one_is_not_yd() {
    let h = sweedler(q()).unwrap();
    let chi = [q().one(), q().from_i64(-1), q().zero(), q().zero()];
    for (deg, ok) in [(0, false), (1, true)] {
        let m = one_dimensional(&h, "s", &chi, deg, ModuleClass::Yd).unwrap();
        assert_eq!(check_yd(&h, &m).unwrap().is_empty(), ok, "degree {deg}");
    }
}

#[test]
fn swap_module_violates_only_yd() {
    let b = cyclic_group(2, q()).unwrap();
    let m = c2_swap_module(&b).unwrap();
    assert!(check_structures(&b, &m).unwrap().is_empty());
    let r = check_yd(&b, &m).unwrap();
    assert!(!r.is_empty());
    assert!(r.iter().all(|d| d.check == Check::YetterDrinfeld));
}

#[test]
fn missing_structure_is_an_error() {
    let b = cyclic_group(2, q()).unwrap();
    let m = StructuredModule::new("bare", q(), 1, ModuleClass::Plain);
    assert!(matches!(check_yd(&b, &m), Err(Error::StructureMissing(_))));
    assert!(matches!(check_hopf_bimodule(&b, &trivial_yd(&b)), Err(Error::StructureMissing(_))));
}
