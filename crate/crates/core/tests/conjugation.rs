//! Hopf modules presented in a scrambled basis behave like the originals.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ydcoh::bialgebra::catalog::{cyclic_group, sweedler};
use ydcoh::bialgebra::Bialgebra;
use ydcoh::bicomplex::hopf_vanishing_general;
use ydcoh::linalg::{Budget, FieldSpec, SparseMatrix};
use ydcoh::structures::{
    check_hopf_module, conjugate, free_hopf_module, fundamental_decomposition, regular_hopf_module,
};

fn scrambled_modules(b: &Bialgebra, seed: u64) -> Vec<ydcoh::structures::StructuredModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = [regular_hopf_module(b), free_hopf_module(2, b, Budget::default()).unwrap()];
    base.iter()
        .map(|m| conjugate(m, &common::random_invertible(&mut rng, m.dim, b.field())).unwrap())
        .collect()
}

#[test]
fn conjugates_stay_hopf_modules_and_decompose() {
    for b in [sweedler(common::q()).unwrap(), cyclic_group(3, common::q()).unwrap(), cyclic_group(2, common::f2()).unwrap()] {
        for seed in 0..4 {
            for m in scrambled_modules(&b, seed) {
                assert!(check_hopf_module(&b, &m).unwrap().is_empty(), "{} seed {seed}", m.name);
                let dec = fundamental_decomposition(&b, &m).unwrap();
                assert_eq!(dec.coinvariants.dim() * b.dim(), m.dim);
                let id = SparseMatrix::identity(m.dim, b.field());
                assert_eq!(dec.forward.mul(&dec.inverse).unwrap(), id);
            }
        }
    }
}

#[test]
fn morphism_spaces_are_basis_independent() {
    // conjugated tables are dense; a large prime keeps the dense oracle fast
    let b = sweedler(FieldSpec::Prime { p: 10007 }).unwrap();
    let plain = [regular_hopf_module(&b), free_hopf_module(2, &b, Budget::default()).unwrap()];
    for seed in 0..3 {
        let twisted = scrambled_modules(&b, seed);
        for (x, y) in plain.iter().zip(&twisted) {
            for (u, v) in plain.iter().zip(&twisted) {
                let before = common::equivariant_dim(&b, x, u, common::MODULE_AND_COMODULE);
                let after = common::equivariant_dim(&b, y, v, common::MODULE_AND_COMODULE);
                assert_eq!(before, after);
                // Hopf module maps between free modules are maps of coinvariants
                assert_eq!(before, (x.dim / 4) * (u.dim / 4));
            }
        }
    }
}

#[test]
fn cohomology_vanishes_on_a_scrambled_regular_module() {
    let b = sweedler(common::q()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = regular_hopf_module(&b);
    let a = conjugate(&base, &common::sparse_invertible(&mut rng, base.dim, b.field())).unwrap();
    assert!(check_hopf_module(&b, &a).unwrap().is_empty());
    assert_ne!(a, base);
    let r = hopf_vanishing_general(&b, &a, &a, 3, Budget::default()).unwrap();
    assert_eq!(r.direct.h_vector(), vec![1, 0, 0]);
    assert!(r.agree);
}
