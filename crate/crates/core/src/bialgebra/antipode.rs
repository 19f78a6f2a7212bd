use super::Bialgebra;
use crate::linalg::{solve, SparseMatrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AntipodeKind {
    /// `Σ S(a₁)a₂ = ε(a)1 = Σ a₁S(a₂)`
    Antipode,
    /// `Σ S̄(a₂)a₁ = ε(a)1 = Σ a₂S̄(a₁)`
    Skew,
}

/// A solved (skew) antipode; column `a` of `map` is the image of `e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipode {
    pub kind: AntipodeKind,
    pub map: SparseMatrix,
}

impl Antipode {
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.map.mul_vec(x)
    }

    pub fn image(&self, a: usize) -> SparseVec {
        self.map.mul_vec(&vec![(a, self.map.field().one())])
    }
}

/// Solves the stacked convolution identities as one linear system in the
/// `d²` entries of the map. Unknown `x·d + b` is the coefficient of `e_x` in
/// `S(e_b)`; equation `(side, a, y)` is the `e_y` coefficient of the identity
/// at `e_a`. Returns `None` when the system is inconsistent.
pub fn solve_antipode(b: &Bialgebra, kind: AntipodeKind) -> Option<Antipode> {
    let d = b.dim();
    let f = b.field();
    let mut trip = Vec::new();
    let mut rhs = Vec::new();
    for side in 0..2 {
        for a in 0..d {
            for (a1, a2, s) in b.comult(a) {
                // (which leg goes through S, which leg is the other factor, S-image on the left?)
                let (through, other, s_left) = match (kind, side) {
                    (AntipodeKind::Antipode, 0) => (*a1, *a2, true),
                    (AntipodeKind::Antipode, _) => (*a2, *a1, false),
                    (AntipodeKind::Skew, 0) => (*a2, *a1, true),
                    (AntipodeKind::Skew, _) => (*a1, *a2, false),
                };
                for x in 0..d {
                    let prod = if s_left { b.mult(x, other) } else { b.mult(other, x) };
                    for (y, t) in prod {
                        let row = (side * d + a) * d + y;
                        trip.push((row, x * d + through, s * t));
                    }
                }
            }
            let eps = b.counit_of(a);
            if !eps.is_zero() {
                for (y, u) in b.unit() {
                    rhs.push(((side * d + a) * d + y, eps * u));
                }
            }
        }
    }
    let system = SparseMatrix::from_triplets(2 * d * d, d * d, f, trip).ok()?;
    let rhs = crate::linalg::normalize_terms(rhs);
    let sol = solve(&system, &rhs).ok()??;
    let map = SparseMatrix::from_triplets(
        d,
        d,
        f,
        sol.into_iter().map(|(k, v)| (k / d, k % d, v)),
    )
    .ok()?;
    let out = Antipode { kind, map };
    debug_assert!(convolution_defects(b, &out).is_empty());
    Some(out)
}

/// Basis elements at which a convolution identity fails (empty iff valid).
pub fn convolution_defects(b: &Bialgebra, s: &Antipode) -> Vec<usize> {
    let mut bad = Vec::new();
    for a in 0..b.dim() {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (a1, a2, c) in b.comult(a) {
            let e1 = b.basis_vec(*a1);
            let e2 = b.basis_vec(*a2);
            let (l, r) = match s.kind {
                AntipodeKind::Antipode => (
                    b.mul_vec(&s.apply(&e1), &e2),
                    b.mul_vec(&e1, &s.apply(&e2)),
                ),
                AntipodeKind::Skew => (
                    b.mul_vec(&s.apply(&e2), &e1),
                    b.mul_vec(&e2, &s.apply(&e1)),
                ),
            };
            left.extend(l.into_iter().map(|(i, v)| (i, c * &v)));
            right.extend(r.into_iter().map(|(i, v)| (i, c * &v)));
        }
        let target = crate::linalg::sparse::scale_vec(b.unit(), b.counit_of(a));
        if crate::linalg::normalize_terms(left) != target
            || crate::linalg::normalize_terms(right) != target
        {
            bad.push(a);
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::catalog::{cyclic_group, sweedler, truncated_monoid};
    use crate::linalg::FieldSpec;

    #[test]
    fn group_antipode_is_inverse_map() {
        let c2 = cyclic_group(2, FieldSpec::Rational).unwrap();
        let s = solve_antipode(&c2, AntipodeKind::Antipode).unwrap();
        assert_eq!(s.map, SparseMatrix::identity(2, FieldSpec::Rational));
        let c3 = cyclic_group(3, FieldSpec::Rational).unwrap();
        let s = solve_antipode(&c3, AntipodeKind::Antipode).unwrap();
        assert_eq!(s.image(1), c3.basis_vec(2));
    }

    #[test]
    fn sweedler_antipode() {
        let q = FieldSpec::Rational;
        let h = sweedler(q).unwrap();
        let s = solve_antipode(&h, AntipodeKind::Antipode).unwrap();
        assert_eq!(s.image(1), h.basis_vec(1));
        assert_eq!(s.image(2), vec![(3, q.from_i64(-1))]);
        assert!(convolution_defects(&h, &s).is_empty());
        let sk = solve_antipode(&h, AntipodeKind::Skew).unwrap();
        assert!(convolution_defects(&h, &sk).is_empty());
        let id = SparseMatrix::identity(4, q);
        assert_eq!(s.map.mul(&sk.map).unwrap(), id);
        assert_eq!(sk.map.mul(&s.map).unwrap(), id);
    }

    #[test]
    fn truncated_monoid_has_none() {
        let t = truncated_monoid(FieldSpec::Rational).unwrap();
        assert!(solve_antipode(&t, AntipodeKind::Antipode).is_none());
        assert!(solve_antipode(&t, AntipodeKind::Skew).is_none());
    }
}
