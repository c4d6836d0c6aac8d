//! Fixture algebras and the example constructions they come from.
//!
//! Every fixture is generated by code from its defining formula, never from a
//! hand-entered table; the tables asserted in tests are regression pins taken
//! after first derivation.

use crate::algebra::{AlgebraTable, Element, Kind, Side};
use crate::error::{Error, Result};
use crate::identities::{self, Suite};
use crate::linalg::{q, qr, Matrix, Q};
use num::{One, Zero};

/// The base field as a one-dimensional algebra, e² = e.
pub fn field_k() -> AlgebraTable {
    let mut t = AlgebraTable::new_single("k", 1);
    t.set_product(Side::Left, 0, 0, 0, q(1));
    t
}

/// The zero algebra of a given dimension.
pub fn zero_algebra(dim: usize) -> AlgebraTable {
    AlgebraTable::new_single("zero", dim)
}

/// k ⊕ k with orthogonal idempotents e1, e2.
pub fn kk() -> AlgebraTable {
    let mut t = field_k().direct_sum(&field_k()).expect("same kind");
    t.name = "kk".into();
    t.basis_labels = vec!["e1".into(), "e2".into()];
    t
}

/// Strictly upper-triangular 3×3 matrices under x∘y = xy + yx.
/// Basis p = E12, q = E23, r = E13; p∘q = q∘p = r, everything else 0.
pub fn nil3() -> AlgebraTable {
    // derive from 3×3 matrix units rather than typing the table
    let units = [(0usize, 1usize), (1, 2), (0, 2)];
    let mut t = AlgebraTable::new_single("nil3", 3);
    t.basis_labels = vec!["p".into(), "q".into(), "r".into()];
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            // E_{ab}E_{cd} + E_{cd}E_{ab}
            let mut prod = vec![Q::zero(); 3];
            if b == c {
                if let Some(k) = units.iter().position(|&u| u == (a, d)) {
                    prod[k] += Q::one();
                }
            }
            if d == a {
                if let Some(k) = units.iter().position(|&u| u == (c, b)) {
                    prod[k] += Q::one();
                }
            }
            for (k, v) in prod.into_iter().enumerate() {
                t.set_product(Side::Left, i, j, k, v);
            }
        }
    }
    t
}

/// Upper-triangular 2×2 matrices with the associative product.
/// Basis E11, E12, E22. Noncommutative, so it fails every LJ-type suite.
pub fn uppertri2() -> AlgebraTable {
    let units = [(0usize, 0usize), (0, 1), (1, 1)];
    let mut t = AlgebraTable::new_single("uppertri2", 3);
    t.basis_labels = vec!["e11".into(), "e12".into(), "e22".into()];
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            if b == c {
                if let Some(k) = units.iter().position(|&u| u == (a, d)) {
                    t.set_product(Side::Left, i, j, k, q(1));
                }
            }
        }
    }
    t
}

/// uppertri2 viewed as a dialgebra with ⊢ = ⊣ = the associative product.
pub fn uppertri2_sym() -> AlgebraTable {
    let u = uppertri2();
    symmetric_double(&u)
}

/// View a single-operation table as a double one with ⊣ equal to ⊢
/// (not the opposite-product convention).
pub fn symmetric_double(a: &AlgebraTable) -> AlgebraTable {
    let mut t = AlgebraTable::new_double(&a.name, a.dim);
    t.basis_labels = a.basis_labels.clone();
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in 0..a.dim {
                let c = a.structure_constant(Side::Left, i, j, k);
                t.set_product(Side::Left, i, j, k, c.clone());
                t.set_product(Side::Right, i, j, k, c);
            }
        }
    }
    t
}

/// 2×2 symmetric matrices under x∘y = (xy + yx)/2.
/// Basis a = E11, b = E22, c = E12 + E21.
pub fn sym2() -> AlgebraTable {
    // generate from the matrix representation
    let reps: [Matrix; 3] = [
        Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(0)]], 2),
        Matrix::from_rows(vec![vec![q(0), q(0)], vec![q(0), q(1)]], 2),
        Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]], 2),
    ];
    let coords = |m: &Matrix| -> Vec<Q> {
        // invert the basis map: m = a·E11 + b·E22 + c·(E12+E21)
        vec![m[(0, 0)].clone(), m[(1, 1)].clone(), m[(0, 1)].clone()]
    };
    let mut t = AlgebraTable::new_single("sym2", 3);
    t.basis_labels = vec!["a".into(), "b".into(), "c".into()];
    let half = qr(1, 2);
    for i in 0..3 {
        for j in 0..3 {
            let p = reps[i].mul(&reps[j]).add(&reps[j].mul(&reps[i])).scale(&half);
            let v = coords(&p);
            for k in 0..3 {
                t.set_product(Side::Left, i, j, k, v[k].clone());
            }
        }
    }
    t
}

/// Four-dimensional left Leibniz (here: Lie) algebra, basis x, a, b, c with
/// [x,a] = b, [x,b] = c, antisymmetric, all other brackets zero.
pub fn heis4() -> AlgebraTable {
    let mut t = AlgebraTable::new_single("heis4", 4);
    t.basis_labels = vec!["x".into(), "a".into(), "b".into(), "c".into()];
    t.set_product(Side::Left, 0, 1, 2, q(1));
    t.set_product(Side::Left, 1, 0, 2, q(-1));
    t.set_product(Side::Left, 0, 2, 3, q(1));
    t.set_product(Side::Left, 2, 0, 3, q(-1));
    t
}

/// Leibniz-Jordan algebra on A ⊕ M from a Jordan algebra A and a Jordan
/// A-bimodule M: (a+x)(b+y) = ab + a·y.
///
/// `action[i]` is the matrix of the action of the i-th A-basis element on M.
/// The Jordan-bimodule condition is checked by verifying that the symmetric
/// split extension (a+x)(b+y) = ab + a·y + b·x is a Jordan algebra.
pub fn make_bimodule_lj(a: &AlgebraTable, action: &[Matrix]) -> Result<AlgebraTable> {
    assert_eq!(a.kind, Kind::Single);
    assert_eq!(action.len(), a.dim);
    let m_dim = if action.is_empty() { 0 } else { action[0].rows };
    for m in action {
        if m.rows != m_dim || m.cols != m_dim {
            return Err(Error::DimensionMismatch { expected: m_dim, got: m.rows });
        }
    }
    let dim = a.dim + m_dim;
    let build = |symmetric: bool| -> AlgebraTable {
        let mut t = AlgebraTable::new_single("bimodule-lj", dim);
        let mut labels = a.basis_labels.clone();
        labels.extend((1..=m_dim).map(|i| format!("m{i}")));
        t.basis_labels = labels;
        for i in 0..a.dim {
            for j in 0..a.dim {
                let p = a.basis_product(Side::Left, i, j);
                for k in 0..a.dim {
                    t.set_product(Side::Left, i, j, k, p[k].clone());
                }
            }
            for j in 0..m_dim {
                for k in 0..m_dim {
                    t.set_product(Side::Left, i, a.dim + j, a.dim + k, action[i][(k, j)].clone());
                    if symmetric {
                        t.set_product(Side::Left, a.dim + j, i, a.dim + k, action[i][(k, j)].clone());
                    }
                }
            }
        }
        t
    };
    let sym = build(true);
    if !identities::suite(&sym, Suite::Jordan)?.pass {
        return Err(Error::BimoduleConditionFailed);
    }
    Ok(build(false))
}

/// e acting as the identity on a rank-1 module: ee = e, en = n, ne = nn = 0.
pub fn bimod2() -> AlgebraTable {
    let mut t = make_bimodule_lj(&field_k(), &[Matrix::identity(1)]).expect("valid bimodule");
    t.name = "bimod2".into();
    t.basis_labels = vec!["e".into(), "n".into()];
    t
}

/// e acting by 1/2 on a rank-1 module: ee = e, em = m/2, me = mm = 0.
pub fn bimod2h() -> AlgebraTable {
    let half = Matrix::from_rows(vec![vec![qr(1, 2)]], 1);
    let mut t = make_bimodule_lj(&field_k(), &[half]).expect("valid bimodule");
    t.name = "bimod2h".into();
    t.basis_labels = vec!["e".into(), "m".into()];
    t
}

/// Leibniz-Jordan algebra of a symmetric bilinear form on X, on the space
/// k ⊕ X ⊕ X̃: (α+x+ã)(β+y+b̃) = αβ + g(x+a, y+b) + αy + αb̃ + β(x̃+ã).
pub fn make_bilinear_form_lj(gram: &Matrix) -> Result<AlgebraTable> {
    let d = gram.rows;
    if gram.cols != d {
        return Err(Error::DimensionMismatch { expected: d, got: gram.cols });
    }
    for i in 0..d {
        for j in 0..d {
            if gram[(i, j)] != gram[(j, i)] {
                return Err(Error::Other("bilinear form is not symmetric".into()));
            }
        }
    }
    let dim = 1 + 2 * d;
    let mut t = AlgebraTable::new_single("bform", dim);
    let mut labels = vec!["u".into()];
    labels.extend((1..=d).map(|i| format!("x{i}")));
    labels.extend((1..=d).map(|i| format!("x~{i}")));
    t.basis_labels = labels;
    // coordinates: u = 0, x_i = 1+i, x̃_i = 1+d+i (0-based below)
    t.set_product(Side::Left, 0, 0, 0, q(1)); // αβ
    for i in 0..d {
        // u·x_i = x_i ; u·x̃_i = x̃_i  (α y, α b̃)
        t.set_product(Side::Left, 0, 1 + i, 1 + i, q(1));
        t.set_product(Side::Left, 0, 1 + d + i, 1 + d + i, q(1));
        // x_i·u = x̃_i ; x̃_i·u = x̃_i  (β(x̃ + ã))
        t.set_product(Side::Left, 1 + i, 0, 1 + d + i, q(1));
        t.set_product(Side::Left, 1 + d + i, 0, 1 + d + i, q(1));
        for j in 0..d {
            // g(x+a, y+b) lands in k for all four X/X̃ pairings
            let g = gram[(i, j)].clone();
            t.set_product(Side::Left, 1 + i, 1 + j, 0, g.clone());
            t.set_product(Side::Left, 1 + i, 1 + d + j, 0, g.clone());
            t.set_product(Side::Left, 1 + d + i, 1 + j, 0, g.clone());
            t.set_product(Side::Left, 1 + d + i, 1 + d + j, 0, g);
        }
    }
    Ok(t)
}

/// dim X = 1, gram = [1].
pub fn bform1() -> AlgebraTable {
    let mut t = make_bilinear_form_lj(&Matrix::identity(1)).expect("symmetric");
    t.name = "bform1".into();
    t
}

/// dim X = 2, gram = identity.
pub fn bform2() -> AlgebraTable {
    let mut t = make_bilinear_form_lj(&Matrix::identity(2)).expect("symmetric");
    t.name = "bform2".into();
    t
}

/// Quotient construction from a Leibniz algebra L and an element x with
/// [x,[x,[x,a]]] = 0 for all a: the space L/{a : [x,[x,a]] = 0} under the
/// product ab = [[x,a],b].
pub fn make_quasi_jordan(l: &AlgebraTable, x: &Element) -> Result<AlgebraTable> {
    if !identities::suite(l, Suite::Leibniz)?.pass {
        return Err(Error::SuiteFailed { suite: "leibniz" });
    }
    let ad = l.left_mult_matrix(Side::Left, x);
    let ad2 = ad.mul(&ad);
    let ad3 = ad2.mul(&ad);
    if !ad3.is_zero() {
        let bad = (0..l.dim)
            .find(|&j| !crate::linalg::vec_is_zero(&ad3.col(j)))
            .unwrap_or(0);
        return Err(Error::AdNilpotencyFailed { index: bad });
    }
    let kernel = crate::linalg::kernel_basis(&ad2);
    let ker = crate::linalg::Subspace::span(&kernel, l.dim)?;
    let comp = ker.non_pivots();
    let qdim = comp.len();
    // projection to the complement coordinates modulo the kernel
    let mut proj = Matrix::zero(qdim, l.dim);
    for j in 0..l.dim {
        let mut v = vec![Q::zero(); l.dim];
        v[j] = Q::one();
        let red = ker.reduce(&v)?;
        for (r, &cc) in comp.iter().enumerate() {
            proj[(r, j)] = red[cc].clone();
        }
    }
    // the product on representatives, projected
    let mut t = AlgebraTable::new_single("quasi-jordan", qdim);
    t.basis_labels = comp.iter().map(|&cc| format!("[{}]", l.basis_labels[cc])).collect();
    for (qi, &ci) in comp.iter().enumerate() {
        for (qj, &cj) in comp.iter().enumerate() {
            let xa = l.product(Side::Left, x, &Element::basis(l.dim, ci));
            let p = l.product(Side::Left, &xa, &Element::basis(l.dim, cj));
            let pv = proj.apply(&p.0);
            for k in 0..qdim {
                t.set_product(Side::Left, qi, qj, k, pv[k].clone());
            }
        }
    }
    // well-definedness: products with kernel representatives stay in the kernel
    for kb in ker.basis_rows() {
        let kb = Element(kb);
        let xk = l.product(Side::Left, x, &kb);
        for j in 0..l.dim {
            let ej = Element::basis(l.dim, j);
            let p1 = l.product(Side::Left, &xk, &ej);
            let xj = l.product(Side::Left, x, &ej);
            let p2 = l.product(Side::Left, &xj, &kb);
            if !ker.contains(&p1.0)? || !ker.contains(&p2.0)? {
                return Err(Error::IllDefinedMap);
            }
        }
    }
    Ok(t)
}

/// Associative dialgebra on a bimodule M over an associative algebra B via a
/// bimodule map f: M → B, with x ⊢ y = f(x)·y and x ⊣ y = x·f(y).
///
/// `left_action[i]` / `right_action[i]` are the matrices of m ↦ e_i·m and
/// m ↦ m·e_i for the B-basis e_i.
pub fn make_bimodule_map_diassoc(
    b: &AlgebraTable,
    m_dim: usize,
    f: &Matrix,
    left_action: &[Matrix],
    right_action: &[Matrix],
) -> Result<AlgebraTable> {
    assert_eq!(b.kind, Kind::Single);
    if f.rows != b.dim || f.cols != m_dim {
        return Err(Error::DimensionMismatch { expected: b.dim, got: f.rows });
    }
    let act = |acts: &[Matrix], coef: &[Q], v: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); m_dim];
        for (i, ci) in coef.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let av = acts[i].apply(v);
            for k in 0..m_dim {
                out[k] += ci * &av[k];
            }
        }
        out
    };
    // f is a bimodule map: f(b·m) = b f(m), f(m·b) = f(m) b
    for i in 0..b.dim {
        for j in 0..m_dim {
            let m = {
                let mut v = vec![Q::zero(); m_dim];
                v[j] = Q::one();
                v
            };
            let ei = vec![Q::zero(); b.dim]
                .iter()
                .enumerate()
                .map(|(k, _)| if k == i { Q::one() } else { Q::zero() })
                .collect::<Vec<_>>();
            let bm = act(left_action, &ei, &m);
            let lhs = f.apply(&bm);
            let fm = f.apply(&m);
            let rhs = b.product(Side::Left, &Element(ei.clone()), &Element(fm.clone())).0;
            if lhs != rhs {
                return Err(Error::BimoduleMapConditionFailed);
            }
            let mb = act(right_action, &ei, &m);
            let lhs = f.apply(&mb);
            let rhs = b.product(Side::Left, &Element(fm), &Element(ei)).0;
            if lhs != rhs {
                return Err(Error::BimoduleMapConditionFailed);
            }
        }
    }
    let mut t = AlgebraTable::new_double("bimodule-map-diassoc", m_dim);
    for i in 0..m_dim {
        let mut mi = vec![Q::zero(); m_dim];
        mi[i] = Q::one();
        let fmi = f.apply(&mi);
        for j in 0..m_dim {
            let mut mj = vec![Q::zero(); m_dim];
            mj[j] = Q::one();
            // m_i ⊢ m_j = f(m_i)·m_j
            let lv = act(left_action, &fmi, &mj);
            // m_i ⊣ m_j = m_i·f(m_j)
            let fmj = f.apply(&mj);
            let rv = act(right_action, &fmj, &mi);
            for k in 0..m_dim {
                t.set_product(Side::Left, i, j, k, lv[k].clone());
                t.set_product(Side::Right, i, j, k, rv[k].clone());
            }
        }
    }
    Ok(t)
}

/// Two-dimensional associative dialgebra: M = k², B = k, f = projection to
/// the first coordinate. s⊢s = s, s⊢t = t, t⊢· = 0; s⊣s = s, t⊣s = t, ·⊣t = 0.
pub fn diassoc2() -> AlgebraTable {
    let b = field_k();
    let f = Matrix::from_rows(vec![vec![q(1), q(0)]], 2);
    let id = Matrix::identity(2);
    let mut t =
        make_bimodule_map_diassoc(&b, 2, &f, &[id.clone()], &[id]).expect("valid bimodule map");
    t.name = "diassoc2".into();
    t.basis_labels = vec!["s".into(), "t".into()];
    t
}

/// Truncated-polynomial triangular fixture: strictly upper-triangular 3×3
/// matrices whose (1,2) and (1,3) entries live in D = k[x]/(x^N) and whose
/// (2,3) entry lives in k, where D carries the dialgebra structure
/// f ⊢ g = f(0)g, f ⊣ g = f·g(0). The returned table is the single-operation
/// algebra under a∘b = a⊢b + b⊣a. Its commutator span is nonzero while the
/// cube vanishes, which breaks the bar-quotient comparison downstream.
pub fn make_trunc_triangular(n: usize) -> AlgebraTable {
    assert!(n >= 2, "truncation must be at least 2");
    // basis: u_k = x^k E12 (k < n), w_k = x^k E13 (k < n), v = E23
    let dim = 2 * n + 1;
    let mut a = AlgebraTable::new_double("trunc-tri", dim);
    let mut labels: Vec<String> = (0..n).map(|k| format!("x{k}e12")).collect();
    labels.extend((0..n).map(|k| format!("x{k}e13")));
    labels.push("e23".into());
    a.basis_labels = labels;
    let v_idx = 2 * n;
    for k in 0..n {
        // u_k ⊢ v = (x^k ⊢ 1) E13 = δ_{k,0} E13
        if k == 0 {
            a.set_product(Side::Left, k, v_idx, n, q(1));
        }
        // u_k ⊣ v = (x^k ⊣ 1) E13 = x^k E13
        a.set_product(Side::Right, k, v_idx, n + k, q(1));
    }
    let mut j = a.plus_algebra().expect("double table");
    j.name = format!("trunc{n}");
    j.basis_labels = a.basis_labels;
    j
}

/// make_trunc_triangular(3), the default counterexample size.
pub fn trunc3() -> AlgebraTable {
    make_trunc_triangular(3)
}

/// A fixture together with its declared suite outcomes.
pub struct Fixture {
    pub name: &'static str,
    pub table: AlgebraTable,
    /// Where the table comes from (the generating construction).
    pub provenance: &'static str,
    pub expected: Vec<(Suite, bool)>,
}

impl Fixture {
    /// Re-verify the declared outcomes; error names the first mismatch.
    pub fn verify(&self) -> Result<()> {
        for &(s, want) in &self.expected {
            let got = identities::suite(&self.table, s)?.pass;
            if got != want {
                return Err(Error::Other(format!(
                    "fixture {}: suite {} expected pass={want}, got {got}",
                    self.name,
                    s.name()
                )));
            }
        }
        Ok(())
    }
}

/// The full fixture registry, each entry self-verified on construction.
pub fn all_fixtures() -> Vec<Fixture> {
    let lj_pass = vec![(Suite::Lj, true), (Suite::JordanDi, true)];
    vec![
        Fixture {
            name: "bimod2",
            table: bimod2(),
            provenance: "rank-1 Jordan bimodule over the base field, identity action",
            expected: lj_pass.clone(),
        },
        Fixture {
            name: "bimod2h",
            table: bimod2h(),
            provenance: "rank-1 Jordan bimodule over the base field, action by 1/2",
            expected: lj_pass.clone(),
        },
        Fixture {
            name: "bform1",
            table: bform1(),
            provenance: "symmetric bilinear form construction, dim X = 1, gram [1]",
            expected: lj_pass.clone(),
        },
        Fixture {
            name: "bform2",
            table: bform2(),
            provenance: "symmetric bilinear form construction, dim X = 2, identity gram",
            expected: lj_pass.clone(),
        },
        Fixture {
            name: "nil3",
            table: nil3(),
            provenance: "strictly upper-triangular 3x3 matrices under anticommutator",
            expected: vec![(Suite::Jordan, true), (Suite::Lj, true)],
        },
        Fixture {
            name: "kk",
            table: kk(),
            provenance: "direct sum of two copies of the base field",
            expected: vec![(Suite::Jordan, true), (Suite::Lj, true)],
        },
        Fixture {
            name: "sym2",
            table: sym2(),
            provenance: "2x2 symmetric matrices under halved anticommutator",
            expected: vec![(Suite::Jordan, true), (Suite::Lj, true)],
        },
        Fixture {
            name: "uppertri2",
            table: uppertri2(),
            provenance: "upper-triangular 2x2 matrices, associative product",
            expected: vec![(Suite::Lj, false), (Suite::JordanDi, false)],
        },
        Fixture {
            name: "diassoc2",
            table: diassoc2(),
            provenance: "bimodule-map dialgebra over the base field, f = first coordinate",
            expected: vec![(Suite::ZeroDi, true), (Suite::Diassoc, true), (Suite::Dialt, true)],
        },
        Fixture {
            name: "heis4",
            table: heis4(),
            provenance: "4-dimensional nilpotent Lie algebra with a cube-zero adjoint",
            expected: vec![(Suite::Leibniz, true)],
        },
        Fixture {
            name: "trunc3",
            table: trunc3(),
            provenance: "triangular matrices over truncated polynomials, anticommutator of the evaluation dialgebra",
            expected: vec![(Suite::Lj, true)],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Subspace, vec_sub};

    #[test]
    fn fixtures_self_verify() {
        for f in all_fixtures() {
            f.verify().unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn bimod2_table_pin() {
        let t = bimod2();
        assert_eq!(t.dim, 2);
        assert_eq!(t.basis_product(Side::Left, 0, 0), vec![q(1), q(0)]);
        assert_eq!(t.basis_product(Side::Left, 0, 1), vec![q(0), q(1)]);
        assert_eq!(t.basis_product(Side::Left, 1, 0), vec![q(0), q(0)]);
        assert_eq!(t.basis_product(Side::Left, 1, 1), vec![q(0), q(0)]);
    }

    #[test]
    fn bimod2h_table_pin() {
        let t = bimod2h();
        assert_eq!(t.basis_product(Side::Left, 0, 1), vec![q(0), qr(1, 2)]);
        assert_eq!(t.basis_product(Side::Left, 1, 0), vec![q(0), q(0)]);
    }

    #[test]
    fn zero_action_bimodule_passes() {
        let t = make_bimodule_lj(&field_k(), &[Matrix::zero(1, 1)]).unwrap();
        assert!(identities::suite(&t, Suite::Lj).unwrap().pass);
        assert!(t.basis_product(Side::Left, 0, 1).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn non_jordan_bimodule_rejected() {
        // the "module" of uppertri2 over itself by left multiplication only
        // does not satisfy the Jordan bimodule condition
        let u = uppertri2();
        let acts: Vec<Matrix> = (0..3)
            .map(|i| u.left_mult_matrix(Side::Left, &Element::basis(3, i)))
            .collect();
        assert!(matches!(
            make_bimodule_lj(&u, &acts),
            Err(Error::BimoduleConditionFailed)
        ));
    }

    #[test]
    fn bform1_table_pin() {
        let t = bform1();
        assert_eq!(t.dim, 3);
        let rows: Vec<Vec<Q>> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| t.basis_product(Side::Left, i, j))
            .collect();
        // uu=u, ux=x, ux̃=x̃, xu=x̃, xx=u, xx̃=u, x̃u=x̃, x̃x=u, x̃x̃=u
        let e = |k: usize| {
            let mut v = vec![q(0); 3];
            v[k] = q(1);
            v
        };
        assert_eq!(rows[0], e(0));
        assert_eq!(rows[1], e(1));
        assert_eq!(rows[2], e(2));
        assert_eq!(rows[3], e(2));
        assert_eq!(rows[4], e(0));
        assert_eq!(rows[5], e(0));
        assert_eq!(rows[6], e(2));
        assert_eq!(rows[7], e(0));
        assert_eq!(rows[8], e(0));
    }

    #[test]
    fn bform_zero_gram() {
        let t = make_bilinear_form_lj(&Matrix::zero(1, 1)).unwrap();
        // products into k vanish except the unit actions
        assert_eq!(t.basis_product(Side::Left, 1, 1), vec![q(0); 3]);
        assert_eq!(t.basis_product(Side::Left, 0, 1)[1], q(1));
        assert!(identities::suite(&t, Suite::Lj).unwrap().pass);
    }

    #[test]
    fn bform_rejects_asymmetric() {
        let g = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]], 2);
        assert!(make_bilinear_form_lj(&g).is_err());
    }

    #[test]
    fn bform1_u_is_left_unit() {
        let t = bform1();
        let u = Element::basis(3, 0);
        for j in 0..3 {
            let ej = Element::basis(3, j);
            assert_eq!(t.product(Side::Left, &u, &ej), ej);
        }
    }

    #[test]
    fn quasi_jordan_heis4() {
        let l = heis4();
        let x = Element::basis(4, 0);
        let t = make_quasi_jordan(&l, &x).unwrap();
        assert_eq!(t.dim, 1);
        assert_eq!(t.basis_product(Side::Left, 0, 0), vec![q(0)]);
        assert!(identities::suite(&t, Suite::Lj).unwrap().pass);
    }

    #[test]
    fn quasi_jordan_central_element() {
        let l = heis4();
        let c = Element::basis(4, 3); // central
        let t = make_quasi_jordan(&l, &c).unwrap();
        assert_eq!(t.dim, 0);
    }

    #[test]
    fn quasi_jordan_abelian() {
        let l = zero_algebra(2);
        let t = make_quasi_jordan(&l, &Element::basis(2, 0)).unwrap();
        assert_eq!(t.dim, 0);
    }

    #[test]
    fn quasi_jordan_rejects_non_nilpotent() {
        // sl2-like: [x,a] = a is not ad-nilpotent
        let mut l = AlgebraTable::new_single("solv2", 2);
        l.set_product(Side::Left, 0, 1, 1, q(1));
        l.set_product(Side::Left, 1, 0, 1, q(-1));
        let x = Element::basis(2, 0);
        assert!(matches!(
            make_quasi_jordan(&l, &x),
            Err(Error::AdNilpotencyFailed { .. })
        ));
    }

    #[test]
    fn diassoc2_table_pin() {
        let t = diassoc2();
        assert_eq!(t.basis_product(Side::Left, 0, 0), vec![q(1), q(0)]);
        assert_eq!(t.basis_product(Side::Left, 0, 1), vec![q(0), q(1)]);
        assert_eq!(t.basis_product(Side::Left, 1, 0), vec![q(0), q(0)]);
        assert_eq!(t.basis_product(Side::Left, 1, 1), vec![q(0), q(0)]);
        assert_eq!(t.basis_product(Side::Right, 0, 0), vec![q(1), q(0)]);
        assert_eq!(t.basis_product(Side::Right, 1, 0), vec![q(0), q(1)]);
        assert_eq!(t.basis_product(Side::Right, 0, 1), vec![q(0), q(0)]);
        assert_eq!(t.basis_product(Side::Right, 1, 1), vec![q(0), q(0)]);
    }

    #[test]
    fn bimodule_map_zero_f() {
        let t = make_bimodule_map_diassoc(
            &field_k(),
            2,
            &Matrix::zero(1, 2),
            &[Matrix::identity(2)],
            &[Matrix::identity(2)],
        )
        .unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(t.basis_product(Side::Left, i, j).iter().all(|c| c.is_zero()));
                assert!(t.basis_product(Side::Right, i, j).iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn bimodule_map_identity_recovers_product() {
        // M = B = uppertri2, f = id: ⊢ = ⊣ = the product of B
        let b = uppertri2();
        let acts_l: Vec<Matrix> = (0..3)
            .map(|i| b.left_mult_matrix(Side::Left, &Element::basis(3, i)))
            .collect();
        let acts_r: Vec<Matrix> = (0..3)
            .map(|i| b.right_mult_matrix(Side::Left, &Element::basis(3, i)))
            .collect();
        let t = make_bimodule_map_diassoc(&b, 3, &Matrix::identity(3), &acts_l, &acts_r).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.basis_product(Side::Left, i, j), b.basis_product(Side::Left, i, j));
                assert_eq!(t.basis_product(Side::Right, i, j), b.basis_product(Side::Left, i, j));
            }
        }
        assert!(identities::suite(&t, Suite::ZeroDi).unwrap().pass);
        assert!(identities::suite(&t, Suite::Diassoc).unwrap().pass);
    }

    #[test]
    fn bimodule_map_rejects_non_map() {
        // f sending the module generator to something not compatible with the action
        let b = kk();
        // M = k with e1 acting as 1 on both sides, e2 as 0; f(m) = e2 is not a map
        let f = Matrix::from_rows(vec![vec![q(0)], vec![q(1)]], 1);
        let one = Matrix::identity(1);
        let zero = Matrix::zero(1, 1);
        assert!(matches!(
            make_bimodule_map_diassoc(&b, 1, &f, &[one.clone(), zero.clone()], &[one, zero]),
            Err(Error::BimoduleMapConditionFailed)
        ));
    }

    #[test]
    fn trunc_triangular_properties() {
        for n in [2usize, 3] {
            let j = make_trunc_triangular(n);
            assert_eq!(j.dim, 2 * n + 1);
            assert!(identities::suite(&j, Suite::Lj).unwrap().pass, "trunc{n} LJ");
            // J² = span{w_k}, J³ = 0
            let full = Subspace::full(j.dim);
            let j2 = j.subspace_product(&full, &full, Side::Left).unwrap();
            assert_eq!(j2.dim(), n);
            let j3a = j.subspace_product(&j2, &full, Side::Left).unwrap();
            let j3b = j.subspace_product(&full, &j2, Side::Left).unwrap();
            assert!(j3a.is_zero() && j3b.is_zero());
            // commutator span = x·k[x]E13, dimension n−1, nonzero
            let mut rows = Vec::new();
            for a in 0..j.dim {
                for b in 0..j.dim {
                    rows.push(vec_sub(
                        &j.basis_product(Side::Left, a, b),
                        &j.basis_product(Side::Left, b, a),
                    ));
                }
            }
            let comm = Subspace::span(&rows, j.dim).unwrap();
            assert_eq!(comm.dim(), n - 1);
            assert!(!comm.is_zero());
            // bar quotient dimension (2n+1) − (n−1) = n+2
            let (bar, _) = j.bar_quotient().unwrap();
            assert_eq!(bar.dim, n + 2);
        }
    }

    #[test]
    fn nil3_and_sym2_pins() {
        let t = nil3();
        assert_eq!(t.basis_product(Side::Left, 0, 1), vec![q(0), q(0), q(1)]);
        assert_eq!(t.basis_product(Side::Left, 1, 0), vec![q(0), q(0), q(1)]);
        assert_eq!(t.basis_product(Side::Left, 0, 0), vec![q(0); 3]);
        assert_eq!(t.basis_product(Side::Left, 2, 0), vec![q(0); 3]);

        let s = sym2();
        assert_eq!(s.basis_product(Side::Left, 0, 0), vec![q(1), q(0), q(0)]);
        assert_eq!(s.basis_product(Side::Left, 0, 1), vec![q(0); 3]);
        assert_eq!(s.basis_product(Side::Left, 0, 2), vec![q(0), q(0), qr(1, 2)]);
        assert_eq!(s.basis_product(Side::Left, 2, 2), vec![q(1), q(1), q(0)]);
    }
}
