//! Sign, side and ordering conventions that the algorithms rely on. Every
//! report echoes these strings.

/// Differential of the total complex on the `(n, p)` block.
pub const TOTAL_DIFFERENTIAL: &str = "D = d_m + (-1)^n d_c on Y^{n,p}";

/// How a pair `(ω′, ρ′)` sits in `Tot¹ = Y^{1,0} ⊕ Y^{0,1}`.
pub const Z1_EMBEDDING: &str = "(omega', rho') -> (omega', rho'), no sign change";

/// Product of the Drinfel'd double on `A*⊗A`.
pub const DOUBLE_PRODUCT: &str = "(phi#a)(psi#b) = sum phi*(a_1 -> psi <- Sbar(a_3)) # a_2 b, \
(a->psi)(x) = psi(x a), (psi<-a)(x) = psi(a x), (phi*psi)(x) = sum phi(x_1) psi(x_2)";

/// Left `D(A)`-module attached to a left-right YD module.
pub const DOUBLE_ACTION: &str = "(phi#a).m = sum phi((a.m)_1) (a.m)_0";

/// Forward map of the fundamental theorem for left-right Hopf modules.
pub const FUNDAMENTAL_FORWARD: &str = "V (x) A -> M, v (x) a |-> a.v, V = M^coA";

/// Inverse map of the fundamental theorem; `S̄` is the skew antipode.
pub const FUNDAMENTAL_INVERSE: &str = "M -> V (x) A, m |-> sum P(m_0) (x) m_1, P(m) = sum Sbar(m_1).m_0";

/// Hopf bimodule compatibilities checked by `check_hopf_bimodule`.
pub const HOPF_BIMODULE_AXIOMS: &str = "lambda(a.m) = a_1 m_(-1) (x) a_2.m_(0); \
rho(a.m) = a_1.m_0 (x) a_2 m_1; lambda(m.a) = m_(-1) a_1 (x) m_(0).a_2; \
rho(m.a) = m_0.a_1 (x) m_1 a_2; (lambda (x) id) rho = (id (x) rho) lambda";

/// Basis index conventions for `Hom(Aⁿ⊗M, N⊗Aᵖ)`.
pub const HOM_INDEXING: &str = "in = ((j1 d + j2) d ... + jn) dimM + u; \
out = v d^p + (k1 d^(p-1) + ... + kp); coordinate = in (dimN d^p) + out";

pub fn all() -> Vec<(&'static str, &'static str)> {
    vec![
        ("total-differential", TOTAL_DIFFERENTIAL),
        ("z1-embedding", Z1_EMBEDDING),
        ("double-product", DOUBLE_PRODUCT),
        ("double-action", DOUBLE_ACTION),
        ("fundamental-forward", FUNDAMENTAL_FORWARD),
        ("fundamental-inverse", FUNDAMENTAL_INVERSE),
        ("hopf-bimodule-axioms", HOPF_BIMODULE_AXIOMS),
        ("hom-indexing", HOM_INDEXING),
    ]
}
