use super::*;
use crate::bialgebra::catalog::{cyclic_group, sweedler, truncated_monoid};
use crate::bialgebra::Bialgebra;
use crate::linalg::{Budget, FieldSpec, SparseVec};
use crate::structures::fixtures::{c2_swap_module, yd_catalog};
use crate::structures::{free_hopf_module, regular_bimodule, regular_hopf_module, trivial_yd, StructuredModule};

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn budget() -> Budget {
    Budget::default()
}

fn yd_faces<'a>(b: &'a Bialgebra, m: &'a StructuredModule, n: &'a StructuredModule) -> ModuleFaces<'a> {
    ModuleFaces::new(b, m, n, Variant::YetterDrinfeld, budget()).unwrap()
}

fn run(name: &str, b: &Bialgebra, m: &StructuredModule, n: &StructuredModule, qmax: usize) -> CohomologyReport {
    let reg = Registry::builtin();
    let input = TheoryInput { b, m, n, qmax, budget: budget() };
    run_theory(reg.get(name).unwrap(), &input).unwrap()
}

#[test]
fn gs_dimension_example() {
    let b = cyclic_group(2, q()).unwrap();
    assert_eq!(GsFaces::new(&b, budget()).dim(2, 1), 8);
}

#[test]
fn gs_faces_match_engine_at_trivial_coefficients() {
    for b in [sweedler(q()).unwrap(), cyclic_group(3, q()).unwrap()] {
        let k = trivial_yd(&b);
        let eng = yd_faces(&b, &k, &k);
        let gs = GsFaces::new(&b, budget());
        for total in 0..=3 {
            for n in 0..=total {
                let p = total - n;
                for i in 0..=n + 1 {
                    assert_eq!(gs.face_b(n, p, i).unwrap(), eng.face_b(n, p, i).unwrap(), "b_{i} ({n},{p})");
                }
                for j in 0..=p + 1 {
                    assert_eq!(gs.face_c(n, p, j).unwrap(), eng.face_c(n, p, j).unwrap(), "c_{j} ({n},{p})");
                }
            }
        }
    }
}

#[test]
fn faces_of_both_variants_on_trivial_coefficients() {
    // Only c₀ at n = 0 and b_{n+1} at p = 0 are forced to agree.
    let b = cyclic_group(2, q()).unwrap();
    let k = trivial_yd(&b);
    let yd = yd_faces(&b, &k, &k);
    let hopf = ModuleFaces::new(&b, &k, &k, Variant::Hopf, budget()).unwrap();
    assert_eq!(yd.face_c(0, 1, 0).unwrap(), hopf.face_c(0, 1, 0).unwrap());
    assert_eq!(yd.face_b(2, 0, 3).unwrap(), hopf.face_b(2, 0, 3).unwrap());
    assert_ne!(yd.face_c(1, 0, 0).unwrap(), hopf.face_c(1, 0, 0).unwrap());
    assert_ne!(yd.face_b(0, 1, 1).unwrap(), hopf.face_b(0, 1, 1).unwrap());
}

#[test]
fn identities_hold_for_yd_catalog() {
    for b in [cyclic_group(2, q()).unwrap(), cyclic_group(3, q()).unwrap(), sweedler(q()).unwrap()] {
        let cat = yd_catalog(&b).unwrap();
        let (m, n) = (&cat[0].1, &cat[cat.len() - 1].1);
        let r = verify_bicomplex_identities(&yd_faces(&b, m, n), 4).unwrap();
        assert!(r.passed(), "{}: {:?}", b.name(), r.failures.first());
        assert!(r.checked > 50);
    }
}

#[test]
fn identities_hold_for_hopf_modules() {
    for b in [cyclic_group(2, q()).unwrap(), sweedler(q()).unwrap()] {
        let m = regular_hopf_module(&b);
        let n = free_hopf_module(2, &b, budget()).unwrap();
        let f = ModuleFaces::new(&b, &m, &n, Variant::Hopf, budget()).unwrap();
        assert!(verify_bicomplex_identities(&f, 3).unwrap().passed(), "{}", b.name());
    }
}

#[test]
fn identity_failures_are_located() {
    let b = cyclic_group(2, q()).unwrap();
    let bad = c2_swap_module(&b).unwrap();
    let k = trivial_yd(&b);
    let r = verify_bicomplex_identities(&yd_faces(&b, &bad, &k), 2).unwrap();
    assert!(!r.passed());
    assert!(r.failures.iter().any(|f| f.family == IdentityFamily::Mixed && (f.n, f.p) == (0, 0)));
}

#[test]
fn face_index_out_of_range() {
    let b = cyclic_group(2, q()).unwrap();
    let k = trivial_yd(&b);
    let f = yd_faces(&b, &k, &k);
    assert!(matches!(f.face_b(1, 0, 3), Err(crate::Error::IndexOutOfRange(_))));
    assert!(matches!(f.face_c(0, 1, 3), Err(crate::Error::IndexOutOfRange(_))));
}

#[test]
fn trivial_coefficients_h0() {
    for b in [cyclic_group(2, q()).unwrap(), sweedler(q()).unwrap()] {
        let k = trivial_yd(&b);
        let r = run("yd", &b, &k, &k, 3);
        assert_eq!(r.h(0), Some(1), "{}", b.name());
        assert!(r.identities.as_ref().unwrap().passed());
    }
}

#[test]
fn total_differential_squares_to_zero() {
    let b = sweedler(q()).unwrap();
    let cat = yd_catalog(&b).unwrap();
    let bc = Bicomplex::from_source("yd", &yd_faces(&b, &cat[1].1, &cat[0].1), 4).unwrap();
    for q in 1..4 {
        let d1 = bc.total_differential(q).unwrap();
        let d0 = bc.total_differential(q - 1).unwrap();
        assert!(d1.mul(&d0).unwrap().is_zero(), "q = {q}");
    }
}

fn to_total(z: &Z1B1, v: &SparseVec) -> SparseVec {
    // Tot¹ lists the (0,1) block before the (1,0) block.
    let pair = z.split(v);
    let off = z.rho_dim();
    let mut out = pair.rho.clone();
    out.extend(pair.omega.iter().map(|(i, s)| (i + off, s.clone())));
    out
}

fn z1_agrees(variant: Variant, theory: &str, b: &Bialgebra, m: &StructuredModule, n: &StructuredModule) -> usize {
    let z = z1_b1_explicit(variant, b, m, n).unwrap();
    let faces = ModuleFaces::new(b, m, n, variant, budget()).unwrap();
    let bc = Bicomplex::from_source(theory, &faces, 2).unwrap();
    let ker = crate::linalg::Subspace::kernel_of(&bc.total_differential(1).unwrap()).unwrap();
    let im = crate::linalg::Subspace::image_of(&bc.total_differential(0).unwrap()).unwrap();
    let mapped: Vec<SparseVec> = z.z1.basis().iter().map(|v| to_total(&z, v)).collect();
    let mapped = crate::linalg::Subspace::span(ker.ambient(), q(), &mapped).unwrap();
    assert!(mapped.same_span(&ker), "Z¹ under the identity bijection");
    let mapped_b: Vec<SparseVec> = z.b1.basis().iter().map(|v| to_total(&z, v)).collect();
    let mapped_b = crate::linalg::Subspace::span(im.ambient(), q(), &mapped_b).unwrap();
    assert!(mapped_b.same_span(&im), "B¹ under the identity bijection");
    z.h1()
}

#[test]
fn explicit_z1_matches_total_complex() {
    let b = cyclic_group(3, q()).unwrap();
    let cat = yd_catalog(&b).unwrap();
    for (_, m) in &cat {
        for (_, n) in &cat {
            z1_agrees(Variant::YetterDrinfeld, "yd", &b, m, n);
        }
    }
    let h = sweedler(q()).unwrap();
    let cat = yd_catalog(&h).unwrap();
    z1_agrees(Variant::YetterDrinfeld, "yd", &h, &cat[0].1, &cat[1].1);
    let reg = regular_hopf_module(&h);
    assert_eq!(z1_agrees(Variant::Hopf, "hopf", &h, &reg, &reg), 0);
}

#[test]
fn flipped_block_sign_is_not_the_bijection() {
    // with (ω′, ρ′) ↦ (ω′, -ρ′) the mixed equation changes sign on one side
    let h = sweedler(q()).unwrap();
    let cat = yd_catalog(&h).unwrap();
    let (m, n) = (&cat[0].1, &cat[1].1);
    let z = z1_b1_explicit(Variant::YetterDrinfeld, &h, m, n).unwrap();
    let bc = Bicomplex::from_source("yd", &yd_faces(&h, m, n), 2).unwrap();
    let ker = crate::linalg::Subspace::kernel_of(&bc.total_differential(1).unwrap()).unwrap();
    let minus = q().from_i64(-1);
    let flipped: Vec<SparseVec> = z
        .z1
        .basis()
        .iter()
        .map(|v| {
            let mut p = z.split(v);
            p.rho = crate::linalg::sparse::scale_vec(&p.rho, &minus);
            to_total(&z, &z.stack(&p))
        })
        .collect();
    let flipped = crate::linalg::Subspace::span(ker.ambient(), q(), &flipped).unwrap();
    assert!(!flipped.same_span(&ker));
}

#[test]
fn extensions_from_cocycles() {
    let h = sweedler(q()).unwrap();
    let cat = yd_catalog(&h).unwrap();
    let (m, n) = (&cat[0].1, &cat[1].1);
    let z = z1_b1_explicit(Variant::YetterDrinfeld, &h, m, n).unwrap();
    assert!(z.z1.dim() > z.b1.dim(), "needs a non-trivial class");
    for v in z.z1.basis() {
        let (ext, ok) = build_extension(Variant::YetterDrinfeld, &h, m, n, &z.split(v)).unwrap();
        assert!(ok);
        assert_eq!(ext.dim, 2);
    }
    let zero = CocyclePair { omega: vec![], rho: vec![] };
    let first = z.split(&z.z1.basis()[0]);
    assert!(extensions_equivalent(&z, &zero, &zero).unwrap());
    let bnd = z.split(&z.b1.basis().first().cloned().unwrap_or_default());
    assert!(extensions_equivalent(&z, &zero, &bnd).unwrap());
    let not_bnd = z.z1.basis().iter().find(|v| !z.b1.contains(v)).unwrap();
    assert!(!extensions_equivalent(&z, &zero, &z.split(not_bnd)).unwrap());
    // a non-cocycle breaks the axioms
    let ambient = z.omega_dim() + z.rho_dim();
    let bad = (0..ambient).map(|i| vec![(i, q().one())]).find(|v| !z.z1.contains(v)).unwrap();
    let (_, ok) = build_extension(Variant::YetterDrinfeld, &h, m, n, &z.split(&bad)).unwrap();
    assert!(!ok);
    assert!(matches!(extensions_equivalent(&z, &first, &z.split(&bad)), Err(crate::Error::Precondition(_))));
}

#[test]
fn homotopies_sweep_kernels() {
    let h = sweedler(q()).unwrap();
    let m = free_hopf_module(1, &h, budget()).unwrap();
    let f = ModuleFaces::new(&h, &m, &m, Variant::Hopf, budget()).unwrap();
    let dm1 = f.dm(1, 0).unwrap();
    let ker = crate::linalg::Subspace::kernel_of(&dm1).unwrap();
    assert!(ker.dim() > 0);
    let dm0 = f.dm(0, 0).unwrap();
    for g in ker.basis() {
        let fv = row_homotopy(&h, 1, 1, 0, 0, g, budget()).unwrap();
        assert_eq!(&dm0.mul_vec(&fv), g);
    }
    let dc1 = f.dc(0, 1).unwrap();
    let dc0 = f.dc(0, 0).unwrap();
    for g in crate::linalg::Subspace::kernel_of(&dc1).unwrap().basis() {
        let fv = col_homotopy(&h, 1, 1, 0, 0, g, budget()).unwrap();
        assert_eq!(&dc0.mul_vec(&fv), g);
    }
    assert!(row_homotopy(&h, 1, 1, 0, 0, &vec![], budget()).unwrap().is_empty());
    let not_cocycle = (0..dm1.cols()).map(|i| vec![(i, q().one())]).find(|v| !ker.contains(v)).unwrap();
    assert!(matches!(
        row_homotopy(&h, 1, 1, 0, 0, &not_cocycle, budget()),
        Err(crate::Error::Precondition(_))
    ));
}

#[test]
fn vanishing_on_free_modules() {
    let h = sweedler(q()).unwrap();
    let r = hopf_vanishing_check(&h, 1, 1, 3, budget()).unwrap();
    assert_eq!(r.direct.h_vector(), vec![1, 0, 0]);
    assert!(r.agree && r.vanishes);
    let c2 = cyclic_group(2, q()).unwrap();
    let r = hopf_vanishing_check(&c2, 2, 1, 2, budget()).unwrap();
    assert_eq!(r.direct.h(1), Some(0));
    assert_eq!(r.direct.h(0), Some(2));
}

#[test]
fn vanishing_general_needs_skew_antipode() {
    let t = truncated_monoid(q()).unwrap();
    let m = regular_hopf_module(&t);
    assert!(matches!(hopf_vanishing_general(&t, &m, &m, 2, budget()), Err(crate::Error::Unsupported(_))));
    let h = sweedler(q()).unwrap();
    let a = regular_hopf_module(&h);
    let r = hopf_vanishing_general(&h, &a, &a, 3, budget()).unwrap();
    assert_eq!(r.direct.h_vector(), vec![1, 0, 0]);
    assert_eq!(r.coinvariants, Some((1, 1)));
}

#[test]
fn restricted_right_linear_maps() {
    let b = cyclic_group(2, q()).unwrap();
    let a = regular_bimodule(&b);
    let r = restricted_bicomplex(&b, &a, &a, Restriction::Right, 2, budget()).unwrap();
    assert_eq!(r.subspaces[0][0].dim(), 2);
    assert!(r.closure.is_empty());
}

#[test]
fn restricted_two_sided_closure_on_sweedler() {
    let h = sweedler(q()).unwrap();
    let a = regular_bimodule(&h);
    for which in [Restriction::Right, Restriction::Left, Restriction::TwoSided] {
        let r = restricted_bicomplex(&h, &a, &a, which, 2, budget()).unwrap();
        assert!(r.closure.is_empty(), "{which:?}: {:?}", r.closure.first());
        assert!(r.restricted.is_some());
    }
}

#[test]
fn registry_lookup() {
    let reg = Registry::builtin();
    assert_eq!(reg.names(), vec!["yd", "hopf", "gs", "r", "l", "t"]);
    assert!(matches!(reg.get("nope"), Err(crate::Error::Invalid(_))));
    let mut reg = Registry::builtin();
    struct Dup;
    impl Theory for Dup {
        fn name(&self) -> &'static str {
            "yd"
        }
        fn description(&self) -> &'static str {
            ""
        }
        fn validate(&self, _: &TheoryInput) -> crate::Result<Vec<(String, crate::structures::Defect)>> {
            Ok(vec![])
        }
        fn faces<'a>(&self, i: &TheoryInput<'a>) -> crate::Result<Box<dyn FaceSource + 'a>> {
            Ok(Box::new(GsFaces::new(i.b, i.budget)))
        }
        fn bicomplex(&self, i: &TheoryInput) -> crate::Result<Bicomplex> {
            Bicomplex::from_source("yd", &GsFaces::new(i.b, i.budget), i.qmax)
        }
    }
    assert!(reg.register(Box::new(Dup)).is_err());
}

#[test]
fn invalid_inputs_are_rejected_by_run() {
    let b = cyclic_group(2, q()).unwrap();
    let bad = c2_swap_module(&b).unwrap();
    let reg = Registry::builtin();
    let input = TheoryInput { b: &b, m: &bad, n: &bad, qmax: 2, budget: budget() };
    assert!(matches!(run_theory(reg.get("yd").unwrap(), &input), Err(crate::Error::Precondition(_))));
}

#[test]
fn budget_is_enforced() {
    let h = sweedler(q()).unwrap();
    let k = trivial_yd(&h);
    let f = ModuleFaces::new(&h, &k, &k, Variant::YetterDrinfeld, Budget(100)).unwrap();
    assert!(matches!(f.face_b(2, 2, 0), Err(crate::Error::BudgetExceeded { .. })));
}

#[test]
fn homotopy_sweep_reproduces_every_kernel_vector() {
    let b = sweedler(FieldSpec::Rational).unwrap();
    let sweep = homotopy_sweep(&b, 1, 1, 2, Budget::default()).unwrap();
    assert!(sweep.passed());
    assert_eq!(sweep.rows.len(), 6);
    assert!(sweep.rows.iter().all(|r| r.kernel_dim > 0));
}
