//! Small Yetter-Drinfel'd modules used as test and CLI fixtures.

use super::{from_matrices, one_dimensional, trivial_yd, ModuleClass, StructuredModule};
use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, SparseMatrix};

fn cyclic_order(b: &Bialgebra) -> Option<usize> {
    b.name().strip_prefix("k[C")?.strip_suffix(']')?.parse().ok()
}

fn sign_character(field: FieldSpec, n: usize) -> Vec<Scalar> {
    (0..n).map(|k| field.from_i64(if k % 2 == 0 { 1 } else { -1 })).collect()
}

/// Cyclic-group generator acting on the 2-dimensional rational
/// representation of `C₃`: the companion matrix of `t² + t + 1`.
fn c3_rotation_powers(field: FieldSpec) -> Vec<SparseMatrix> {
    let r = SparseMatrix::from_dense(field, &[vec![0, -1], vec![1, -1]]);
    let r2 = r.mul(&r).expect("square");
    vec![SparseMatrix::identity(2, field), r, r2]
}

/// The catalog of YD modules for a catalog bialgebra, each paired with a
/// short label. Every entry passes `check_yd`.
///
/// * `k[Cn]`: the trivial character in every degree, plus the sign
///   character in every degree when `n` is even and the characteristic is
///   not 2; for `n = 3` also the 2-dimensional rational representation in
///   degrees `1` and `g`.
/// * `sweedler`: the trivial module and the sign character (`g ↦ -1`,
///   `x ↦ 0`) in degree `g`.
/// * anything else: the trivial module only.
pub fn yd_catalog(b: &Bialgebra) -> Result<Vec<(String, StructuredModule)>> {
    let f = b.field();
    let mut out = Vec::new();
    if let Some(n) = cyclic_order(b) {
        let triv: Vec<Scalar> = (0..n).map(|_| f.one()).collect();
        for h in 0..n {
            let label = format!("triv/g^{h}");
            out.push((label.clone(), one_dimensional(b, &label, &triv, h, ModuleClass::Yd)?));
        }
        if n % 2 == 0 && f.characteristic() != 2 {
            let sign = sign_character(f, n);
            for h in 0..n {
                let label = format!("sign/g^{h}");
                out.push((label.clone(), one_dimensional(b, &label, &sign, h, ModuleClass::Yd)?));
            }
        }
        if n == 3 {
            let powers = c3_rotation_powers(f);
            for h in 0..2 {
                let label = format!("rot2/g^{h}");
                out.push((label.clone(), from_matrices(b, &label, &powers, &[h, h], ModuleClass::Yd)?));
            }
        }
    } else if b.name() == "sweedler" {
        out.push(("triv".to_string(), trivial_yd(b).with_name("triv")));
        let chi = vec![f.one(), f.from_i64(-1), f.zero(), f.zero()];
        out.push(("sign/g".to_string(), one_dimensional(b, "sign/g", &chi, 1, ModuleClass::Yd)?));
    } else {
        out.push(("triv".to_string(), trivial_yd(b).with_name("triv")));
    }
    Ok(out)
}

/// Over `k[C₂]`: a 2-dimensional module and comodule, `m₀` in degree 1 and
/// `m₁` in degree `g`, with `g` swapping them. Both structures are valid but
/// the action does not preserve degrees, so the YD condition fails.
pub fn c2_swap_module(b: &Bialgebra) -> Result<StructuredModule> {
    if cyclic_order(b) != Some(2) {
        return Err(Error::Precondition(format!(
            "swap module is defined over k[C2], got {}",
            b.name()
        )));
    }
    let f = b.field();
    let swap = SparseMatrix::from_dense(f, &[vec![0, 1], vec![1, 0]]);
    from_matrices(
        b,
        "swap",
        &[SparseMatrix::identity(2, f), swap],
        &[0, 1],
        ModuleClass::Plain,
    )
}
