//! Small bialgebras used as fixtures and by `catalog-emit`.

use super::{verify_bialgebra, Bialgebra, CoproductTerms};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, SparseVec};

/// Algebra of a finite monoid given by its multiplication table, with every
/// basis element grouplike. `table[i][j]` is the index of `i·j`.
pub fn monoid_algebra(name: &str, table: &[Vec<usize>], field: FieldSpec) -> Result<Bialgebra> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidGroupTable("table must be square and nonempty".into()));
    }
    if table.iter().flatten().any(|&k| k >= n) {
        return Err(Error::InvalidGroupTable("entry out of range".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidGroupTable(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
    let one = field.one();
    let mult = table
        .iter()
        .map(|row| row.iter().map(|&c| vec![(c, one.clone())]).collect())
        .collect();
    let comult: Vec<CoproductTerms> = (0..n).map(|a| vec![(a, a, one.clone())]).collect();
    let counit: SparseVec = (0..n).map(|a| (a, one.clone())).collect();
    Bialgebra::new(name, field, n, mult, vec![(identity, one.clone())], comult, counit)
}

/// Group algebra `k[G]`; the table must define a group.
pub fn group_algebra(name: &str, table: &[Vec<usize>], field: FieldSpec) -> Result<Bialgebra> {
    let b = monoid_algebra(name, table, field)?;
    let e = b.unit()[0].0;
    for a in 0..table.len() {
        if !(0..table.len()).any(|x| table[a][x] == e && table[x][a] == e) {
            return Err(Error::InvalidGroupTable(format!("element {a} has no inverse")));
        }
    }
    Ok(b)
}

pub fn cyclic_group(n: usize, field: FieldSpec) -> Result<Bialgebra> {
    if n == 0 {
        return Err(Error::InvalidGroupTable("cyclic group of order 0".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(&format!("k[C{n}]"), &table, field)
}

/// `{1, t}` with `t² = t` and `t` grouplike: a bialgebra with no antipode.
pub fn truncated_monoid(field: FieldSpec) -> Result<Bialgebra> {
    monoid_algebra("k[{1,t}], t^2=t", &[vec![0, 1], vec![1, 1]], field)
}

/// Sweedler's four-dimensional Hopf algebra, basis `{1, g, x, gx}` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`,
/// `ε(g) = 1`, `ε(x) = 0`.
pub fn sweedler(field: FieldSpec) -> Result<Bialgebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicConflict(
            "Sweedler's algebra needs characteristic != 2".into(),
        ));
    }
    // basis index = a + 2b for g^a x^b
    let one = field.one();
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = vec![vec![Vec::new(); 4]; 4];
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, e) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + e >= 2 {
                continue;
            }
            // (g^a x^b)(g^c x^e) = (-1)^{bc} g^{a+c} x^{b+e}
            let sign = if b * c % 2 == 1 { -&one } else { one.clone() };
            mult[idx(a, b)][idx(c, e)] = vec![(idx((a + c) % 2, b + e), sign)];
        }
    }
    let comult: Vec<CoproductTerms> = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        vec![(2, 0, one.clone()), (1, 2, one.clone())],
        // Δ(gx) = gx⊗g + 1⊗gx
        vec![(3, 1, one.clone()), (0, 3, one.clone())],
    ];
    let counit = vec![(0, one.clone()), (1, one.clone())];
    Bialgebra::new("sweedler", field, 4, mult, vec![(0, one.clone())], comult, counit)
}

/// The dual bialgebra on the dual basis: `μ* = Δᵀ`, `Δ* = μᵀ`, `η* = ε`, `ε* = η`.
pub fn dual_of(b: &Bialgebra) -> Result<Bialgebra> {
    let d = b.dim();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for c in 0..d {
        for (i, j, s) in b.comult(c) {
            mult[*i][*j].push((c, s.clone()));
        }
    }
    let mut comult: Vec<CoproductTerms> = vec![Vec::new(); d];
    for x in 0..d {
        for y in 0..d {
            for (c, s) in b.mult(x, y) {
                comult[*c].push((x, y, s.clone()));
            }
        }
    }
    let name = match b.name().strip_prefix("dual-of(").and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual-of({})", b.name()),
    };
    Bialgebra::new(
        name,
        b.field(),
        d,
        mult,
        b.counit().clone(),
        comult,
        b.unit().clone(),
    )
}

/// Catalog lookup by name, verified before returning.
pub fn catalog(name: &str, field: FieldSpec) -> Result<Bialgebra> {
    let b = match name {
        "sweedler" => sweedler(field)?,
        "truncated-monoid" => truncated_monoid(field)?,
        _ => {
            if let Some(n) = name
                .strip_prefix("cyclic-group(")
                .and_then(|r| r.strip_suffix(')'))
            {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad cyclic order in {name:?}")))?;
                cyclic_group(n, field)?
            } else if let Some(inner) = name.strip_prefix("dual-of(").and_then(|r| r.strip_suffix(')')) {
                dual_of(&catalog(inner, field)?)?
            } else {
                return Err(Error::Invalid(format!("unknown catalog entry {name:?}")));
            }
        }
    };
    let violations = verify_bialgebra(&b);
    if !violations.is_empty() {
        return Err(Error::Invalid(format!(
            "catalog entry {name} violates {}",
            violations[0].axiom
        )));
    }
    Ok(b)
}
