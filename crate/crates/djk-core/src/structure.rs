//! Structure theory: power and solvability chains, left-multiplication
//! envelopes, U-operators and the Pierce decomposition relative to an
//! idempotent, idempotent lifting, and nil-element utilities.

use crate::algebra::{AlgebraTable, Element, Kind, Side};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, q, solve, vec_is_zero, Matrix, Q, Subspace};

/// Which descending chain of subspaces to compute.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainKind {
    /// Aⁿ = Σ_{i=1}^{n−1} A^{n−i}Aⁱ (nilpotency)
    Full,
    /// A^⟨n⟩ = A·A^⟨n−1⟩ (left nilpotency)
    Left,
    /// A^(n) = (A^(n−1))² (solvability)
    Square,
    /// A^[n] = (A^[n−1])³ (cubic solvability); entries checked to be ideals
    Cubic,
    /// J^(n+1) = Pⁿ·Pⁿ + J(Pⁿ·Pⁿ) + (Pⁿ·Pⁿ)J (strong solvability);
    /// entries checked to be ideals
    Penico,
}

impl ChainKind {
    pub fn name(self) -> &'static str {
        match self {
            ChainKind::Full => "full",
            ChainKind::Left => "left",
            ChainKind::Square => "square",
            ChainKind::Cubic => "cubic",
            ChainKind::Penico => "penico",
        }
    }

    pub fn parse(s: &str) -> Option<ChainKind> {
        match s {
            "full" => Some(ChainKind::Full),
            "left" => Some(ChainKind::Left),
            "square" => Some(ChainKind::Square),
            "cubic" => Some(ChainKind::Cubic),
            "penico" => Some(ChainKind::Penico),
            _ => None,
        }
    }

    pub fn all() -> [ChainKind; 5] {
        [ChainKind::Full, ChainKind::Left, ChainKind::Square, ChainKind::Cubic, ChainKind::Penico]
    }
}

/// A computed descending chain. `chain[0]` is always the whole algebra;
/// `index` is the first n (1-based, so chain[n−1] = 0) at which the chain
/// reaches zero, absent when it stabilizes at a nonzero subspace.
pub struct ChainReport {
    pub kind: ChainKind,
    pub chain: Vec<Subspace>,
    pub stabilized: bool,
    pub index: Option<usize>,
}

fn both_sided_cube(a: &AlgebraTable, s: &Subspace) -> Result<Subspace> {
    let s2 = a.subspace_product(s, s, Side::Left)?;
    a.subspace_product(&s2, s, Side::Left)?.sum(&a.subspace_product(s, &s2, Side::Left)?)
}

/// Compute the chosen power chain for a single-operation table.
pub fn power_chain(a: &AlgebraTable, kind: ChainKind) -> Result<ChainReport> {
    assert_eq!(a.kind, Kind::Single, "power chains use the single-operation view");
    let full_space = Subspace::full(a.dim);
    let cap = 2 * a.dim + 2;
    let mut chain: Vec<Subspace> = vec![full_space.clone()];
    // for the full chain every earlier power participates in the next one
    let mut stabilized = false;
    let mut index = None;
    for step in 1..=cap {
        let next = match kind {
            ChainKind::Full => {
                // A^{n+1} = Σ_{i=1}^{n} A^{n+1−i}Aⁱ with chain[k] = A^{k+1}
                let n1 = step + 1;
                let mut acc = Subspace::zero(a.dim);
                for i in 1..n1 {
                    let t = a.subspace_product(&chain[n1 - i - 1], &chain[i - 1], Side::Left)?;
                    acc = acc.sum(&t)?;
                }
                acc
            }
            ChainKind::Left => a.subspace_product(&full_space, chain.last().unwrap(), Side::Left)?,
            ChainKind::Square => {
                let prev = chain.last().unwrap();
                a.subspace_product(prev, prev, Side::Left)?
            }
            ChainKind::Cubic => both_sided_cube(a, chain.last().unwrap())?,
            ChainKind::Penico => {
                let prev = chain.last().unwrap();
                let sq = a.subspace_product(prev, prev, Side::Left)?;
                let l = a.subspace_product(&full_space, &sq, Side::Left)?;
                let r = a.subspace_product(&sq, &full_space, Side::Left)?;
                sq.sum(&l)?.sum(&r)?
            }
        };
        if matches!(kind, ChainKind::Cubic | ChainKind::Penico) {
            a.check_ideal(&next)?;
        }
        let repeat = next.dim() == chain.last().unwrap().dim()
            && chain.last().unwrap().contains_subspace(&next)?;
        let zero = next.is_zero();
        chain.push(next);
        if zero {
            index = Some(chain.len());
            stabilized = true;
            break;
        }
        if repeat {
            stabilized = true;
            chain.pop(); // drop the duplicate entry
            break;
        }
    }
    if !stabilized {
        return Err(Error::Other(format!(
            "chain did not terminate within {cap} steps (non-decreasing chain?)"
        )));
    }
    Ok(ChainReport { kind, chain, stabilized, index })
}

/// The associative subalgebra of End J generated by {ℓ_a : a ∈ generators},
/// returned as a matrix basis together with its nilpotency index (smallest n
/// with every length-n product zero), absent when not nilpotent.
pub fn left_mult_envelope(
    a: &AlgebraTable,
    generators: &Subspace,
) -> Result<(Vec<Matrix>, Option<usize>)> {
    assert_eq!(generators.ambient_dim, a.dim);
    let flat_dim = a.dim * a.dim;
    let mut basis: Vec<Matrix> = Vec::new();
    let mut span = Subspace::zero(flat_dim);
    let add = |m: Matrix, basis: &mut Vec<Matrix>, span: &mut Subspace| -> Result<bool> {
        if span.contains(&m.flatten())? {
            return Ok(false);
        }
        *span = span.sum(&Subspace::span(&[m.flatten()], flat_dim)?)?;
        basis.push(m);
        Ok(true)
    };
    let gens: Vec<Matrix> = generators
        .basis_rows()
        .into_iter()
        .map(|v| a.left_mult_matrix(Side::Left, &Element(v)))
        .collect();
    for g in &gens {
        add(g.clone(), &mut basis, &mut span)?;
    }
    // close under right multiplication by generators
    let mut frontier: Vec<Matrix> = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let p = m.mul(g);
                if add(p.clone(), &mut basis, &mut span)? {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    // nilpotency index of the envelope: E¹ = span, Eⁿ⁺¹ = Eⁿ·E¹
    let mut power: Vec<Matrix> = basis.clone();
    let mut n = 1usize;
    let mut index = None;
    loop {
        if power.iter().all(|m| m.is_zero()) {
            index = Some(n);
            break;
        }
        if n > flat_dim + 1 {
            break; // dimension of a strictly decreasing flag is bounded
        }
        let mut rows = Vec::new();
        for m in &power {
            for g in &basis {
                rows.push(m.mul(g).flatten());
            }
        }
        let sp = Subspace::span(&rows, flat_dim)?;
        power = sp
            .basis_rows()
            .into_iter()
            .map(|v| Matrix::from_fn(a.dim, a.dim, |r, c| v[r * a.dim + c].clone()))
            .collect();
        n += 1;
    }
    Ok((basis, index))
}

/// U_{a,b} = ℓ_aℓ_b + ℓ_bℓ_a − ℓ_{ab}.
pub fn u_operator(j: &AlgebraTable, a: &Element, b: &Element) -> Matrix {
    assert_eq!(j.kind, Kind::Single);
    let la = j.left_mult_matrix(Side::Left, a);
    let lb = j.left_mult_matrix(Side::Left, b);
    let lab = j.left_mult_matrix(Side::Left, &j.product(Side::Left, a, b));
    la.mul(&lb).add(&lb.mul(&la)).sub(&lab)
}

/// Pierce decomposition of J relative to an idempotent e.
pub struct PierceReport {
    pub j1: Subspace,
    pub j_half: Subspace,
    pub j0: Subspace,
    pub u_e: Matrix,
    pub u_half: Matrix,
    pub u_0: Matrix,
    pub table_violations: Vec<String>,
}

impl PierceReport {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.j1.dim(), self.j_half.dim(), self.j0.dim())
    }
}

fn column_span(m: &Matrix) -> Result<Subspace> {
    let cols: Vec<Vec<Q>> = (0..m.cols).map(|c| m.col(c)).collect();
    Subspace::span(&cols, m.rows)
}

/// Decompose J = J₁ ⊕ J_{1/2} ⊕ J₀ via the projectors U_e = 2ℓ_e² − ℓ_e,
/// U_{1−e,e} = 2ℓ_e − 2ℓ_e², U_{1−e} = 2ℓ_e² − 3ℓ_e + id.
pub fn pierce_decompose(j: &AlgebraTable, e: &Element) -> Result<PierceReport> {
    assert_eq!(j.kind, Kind::Single);
    if j.product(Side::Left, e, e) != *e {
        return Err(Error::NotIdempotent);
    }
    let le = j.left_mult_matrix(Side::Left, e);
    let id = Matrix::identity(j.dim);
    // ℓ_e(2ℓ_e − 1)(ℓ_e − 1) = 0 — the cube relation behind the projectors
    let cube = le
        .mul(&le.scale(&q(2)).sub(&id))
        .mul(&le.sub(&id));
    if !cube.is_zero() {
        return Err(Error::MinimalPolynomialViolation);
    }
    let le2 = le.mul(&le);
    let u_e = le2.scale(&q(2)).sub(&le);
    let u_half = le.scale(&q(2)).sub(&le2.scale(&q(2)));
    let u_0 = le2.scale(&q(2)).sub(&le.scale(&q(3))).add(&id);
    let j1 = column_span(&u_e)?;
    let j_half = column_span(&u_half)?;
    let j0 = column_span(&u_0)?;
    let mut violations = Vec::new();
    // direct sum
    if j1.dim() + j_half.dim() + j0.dim() != j.dim {
        violations.push("component dimensions do not sum to dim J".to_string());
    }
    for (name, s, t) in [
        ("J1 ∩ J1/2", &j1, &j_half),
        ("J1 ∩ J0", &j1, &j0),
        ("J1/2 ∩ J0", &j_half, &j0),
    ] {
        if !s.intersect(t)?.is_zero() {
            violations.push(format!("{name} is nonzero"));
        }
    }
    // eigenspace characterization J_i = {x : ex = ix}
    for (name, s, lambda) in [
        ("J1", &j1, q(1)),
        ("J1/2", &j_half, crate::linalg::qr(1, 2)),
        ("J0", &j0, q(0)),
    ] {
        let shifted = le.sub(&id.scale(&lambda));
        let eig = Subspace::span(&kernel_basis(&shifted), j.dim)?;
        if !(eig.contains_subspace(s)? && s.contains_subspace(&eig)?) {
            violations.push(format!("{name} differs from the ℓ_e eigenspace"));
        }
    }
    // multiplication table
    let prod = |s: &Subspace, t: &Subspace| j.subspace_product(s, t, Side::Left);
    let check_in = |violations: &mut Vec<String>, label: &str, p: Subspace, target: &Subspace| -> Result<()> {
        if !target.contains_subspace(&p)? {
            violations.push(format!("{label} not contained in its Pierce target"));
        }
        Ok(())
    };
    check_in(&mut violations, "J1·J1", prod(&j1, &j1)?, &j1)?;
    check_in(&mut violations, "J0·J0", prod(&j0, &j0)?, &j0)?;
    check_in(&mut violations, "J0·J1", prod(&j0, &j1)?, &Subspace::zero(j.dim))?;
    check_in(&mut violations, "J1·J0", prod(&j1, &j0)?, &Subspace::zero(j.dim))?;
    check_in(&mut violations, "J0·J1/2", prod(&j0, &j_half)?, &j_half)?;
    check_in(&mut violations, "J1/2·J0", prod(&j_half, &j0)?, &j_half)?;
    check_in(&mut violations, "J1·J1/2", prod(&j1, &j_half)?, &j_half)?;
    check_in(&mut violations, "J1/2·J1", prod(&j_half, &j1)?, &j_half)?;
    check_in(&mut violations, "J1/2·J1/2", prod(&j_half, &j_half)?, &j0.sum(&j1)?)?;
    Ok(PierceReport { j1, j_half, j0, u_e, u_half, u_0, table_violations: violations })
}

fn lift_precondition(j: &AlgebraTable, e0: &Element) -> Result<Element> {
    let h = j.product(Side::Left, e0, e0).sub(e0);
    if !j.bar_ideal().contains(&h.0)? {
        return Err(Error::NotIdempotentModuloBar);
    }
    Ok(h)
}

/// The closed-form idempotent lift e₀ + 2e₀(e₀h) + e₀h, h = e₀² − e₀,
/// applied verbatim. The boolean reports whether the output actually squares
/// to itself — the formula is recorded as-is and not corrected, and on some
/// inputs the flag is false (see lift_idempotent_linear for the exact solve).
pub fn lift_idempotent_paper(j: &AlgebraTable, e0: &Element) -> Result<(Element, bool)> {
    let h = lift_precondition(j, e0)?;
    let e0h = j.product(Side::Left, e0, &h);
    let e0e0h = j.product(Side::Left, e0, &e0h);
    let result = e0.add(&e0e0h.scale(&q(2))).add(&e0h);
    let ok = j.product(Side::Left, &result, &result) == result;
    Ok((result, ok))
}

/// Idempotent lift by exact linear algebra: find u in the ideal generated by
/// h = e₀² − e₀ with (id − ℓ_{e₀})u = h; then (e₀+u)² = e₀ + h + e₀u = e₀+u
/// because u lies in the bar ideal and the bar ideal annihilates J from the
/// left in an LJ-algebra. Returns None when the linear system is unsolvable.
pub fn lift_idempotent_linear(j: &AlgebraTable, e0: &Element) -> Result<Option<Element>> {
    let h = lift_precondition(j, e0)?;
    if h.is_zero() {
        return Ok(Some(e0.clone()));
    }
    let orbit = j.ideal_closure(&Subspace::span(&[h.0.clone()], j.dim)?)?;
    let vs = orbit.basis_rows();
    let le0 = j.left_mult_matrix(Side::Left, e0);
    let op = Matrix::identity(j.dim).sub(&le0);
    let cols: Vec<Vec<Q>> = vs.iter().map(|v| op.apply(v)).collect();
    let m = Matrix::from_fn(j.dim, vs.len(), |r, c| cols[c][r].clone());
    let Some(coeffs) = solve(&m, &h.0) else {
        return Ok(None);
    };
    let mut u = Element::zero(j.dim);
    for (c, v) in coeffs.iter().zip(&vs) {
        u = u.add(&Element(v.clone()).scale(c));
    }
    let e = e0.add(&u);
    if j.product(Side::Left, &e, &e) != e {
        return Err(Error::Other(
            "lifted element is not idempotent (input violates the LJ assumptions)".into(),
        ));
    }
    Ok(Some(e))
}

/// Smallest N ≤ bound such that every bracketing of aᴹ vanishes for all
/// N ≤ M ≤ bound, computed by enumerating bracketing values bottom-up.
pub fn nil_index(j: &AlgebraTable, a: &Element, bound: usize) -> Result<Option<usize>> {
    assert_eq!(j.kind, Kind::Single);
    assert!(bound >= 1);
    let mut values: Vec<Vec<Vec<Q>>> = vec![Vec::new(); bound + 1];
    values[1] = vec![a.0.clone()];
    for n in 2..=bound {
        let mut set: Vec<Vec<Q>> = Vec::new();
        for i in 1..n {
            for x in values[i].clone() {
                for y in values[n - i].clone() {
                    let p = j.product(Side::Left, &Element(x.clone()), &Element(y.clone())).0;
                    if !set.contains(&p) {
                        set.push(p);
                    }
                }
            }
        }
        values[n] = set;
    }
    let all_zero =
        |n: usize| -> bool { values[n].iter().all(|v| vec_is_zero(v)) };
    for n in 1..=bound {
        if (n..=bound).all(all_zero) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::identities::{self, Suite};
    use crate::linalg::qr;

    #[test]
    fn full_chain_nil3() {
        let r = power_chain(&gallery::nil3(), ChainKind::Full).unwrap();
        assert_eq!(r.index, Some(3));
        assert_eq!(r.chain[1].dim(), 1); // J² = span{r}
        assert!(r.chain[1].contains(&vec![q(0), q(0), q(1)]).unwrap());
        assert!(r.chain[2].is_zero());
    }

    #[test]
    fn full_chain_bimod2_stabilizes() {
        let r = power_chain(&gallery::bimod2(), ChainKind::Full).unwrap();
        assert!(r.stabilized);
        assert_eq!(r.index, None);
        assert_eq!(r.chain.last().unwrap().dim(), 2); // J² = J since e is idempotent
    }

    #[test]
    fn zero_algebra_every_chain_index_two() {
        for kind in ChainKind::all() {
            let r = power_chain(&gallery::zero_algebra(3), kind).unwrap();
            assert_eq!(r.index, Some(2), "kind {}", kind.name());
        }
    }

    #[test]
    fn chains_strictly_decreasing_until_stabilization() {
        for t in [gallery::nil3(), gallery::trunc3(), gallery::bimod2(), gallery::bform1()] {
            for kind in ChainKind::all() {
                let r = power_chain(&t, kind).unwrap();
                for w in r.chain.windows(2) {
                    assert!(
                        w[0].dim() > w[1].dim(),
                        "{} chain {} not strictly decreasing",
                        t.name,
                        kind.name()
                    );
                    assert!(w[0].contains_subspace(&w[1]).unwrap());
                }
            }
        }
    }

    #[test]
    fn penico_trunc3() {
        // J² has dimension 3 (the w-span) and J³ = 0, so the Penico chain
        // reaches zero at step 3
        let r = power_chain(&gallery::trunc3(), ChainKind::Penico).unwrap();
        assert_eq!(r.chain[1].dim(), 3);
        assert_eq!(r.index, Some(3));
    }

    #[test]
    fn solvable_sandwich_square_vs_cubic() {
        // J^(2i) ⊆ J^[i] ⊆ J^(i), and termination of one implies the other
        for t in [gallery::nil3(), gallery::trunc3(), gallery::bform1()] {
            let sq = power_chain(&t, ChainKind::Square).unwrap();
            let cu = power_chain(&t, ChainKind::Cubic).unwrap();
            assert_eq!(sq.index.is_some(), cu.index.is_some(), "{}", t.name);
            for i in 1..cu.chain.len() {
                // chain[k] = C_{k+1}; compare J^[i] against J^(i) and J^(2i)
                if i < sq.chain.len() {
                    assert!(sq.chain[i].contains_subspace(&cu.chain[i]).unwrap());
                }
                let k2 = (2 * (i + 1) - 1).min(sq.chain.len() - 1);
                if 2 * (i + 1) - 1 < sq.chain.len() {
                    assert!(cu.chain[i].contains_subspace(&sq.chain[k2]).unwrap());
                }
            }
        }
    }

    #[test]
    fn left_nilpotent_iff_nilpotent_with_bound() {
        for t in [gallery::nil3(), gallery::trunc3(), gallery::zero_algebra(2)] {
            let left = power_chain(&t, ChainKind::Left).unwrap();
            let full = power_chain(&t, ChainKind::Full).unwrap();
            let (Some(n), Some(m)) = (left.index, full.index) else {
                panic!("{} expected nilpotent", t.name)
            };
            assert!(m <= 1 << (n + 1), "{}: full index {m} exceeds 2^{}", t.name, n + 1);
        }
        // converse direction on a non-nilpotent fixture: both chains stabilize
        let left = power_chain(&gallery::bimod2(), ChainKind::Left).unwrap();
        let full = power_chain(&gallery::bimod2(), ChainKind::Full).unwrap();
        assert!(left.index.is_none() && full.index.is_none());
    }

    #[test]
    fn finitely_generated_solvable_is_nilpotent_on_fixtures() {
        for t in [gallery::nil3(), gallery::trunc3(), gallery::zero_algebra(2)] {
            let sq = power_chain(&t, ChainKind::Square).unwrap();
            let full = power_chain(&t, ChainKind::Full).unwrap();
            if sq.index.is_some() {
                assert!(full.index.is_some(), "{}", t.name);
            }
        }
    }

    #[test]
    fn envelope_nil3() {
        let t = gallery::nil3();
        let (basis, index) = left_mult_envelope(&t, &Subspace::full(3)).unwrap();
        // ℓ_p (q ↦ r) and ℓ_q (p ↦ r) are independent; all products vanish
        assert_eq!(basis.len(), 2);
        assert_eq!(index, Some(2));
    }

    #[test]
    fn envelope_bimod2_not_nilpotent() {
        let t = gallery::bimod2();
        let (basis, index) = left_mult_envelope(&t, &Subspace::full(2)).unwrap();
        assert!(index.is_none());
        // ℓ_e is the identity matrix
        let id = Matrix::identity(2);
        let flat = Subspace::span(
            &basis.iter().map(|m| m.flatten()).collect::<Vec<_>>(),
            4,
        )
        .unwrap();
        assert!(flat.contains(&id.flatten()).unwrap());
    }

    #[test]
    fn envelope_zero_algebra() {
        let (basis, index) = left_mult_envelope(&gallery::zero_algebra(2), &Subspace::full(2)).unwrap();
        assert!(basis.is_empty());
        assert_eq!(index, Some(1));
    }

    #[test]
    fn u_operator_examples() {
        let kk = gallery::kk();
        let e1 = Element::basis(2, 0);
        let u = u_operator(&kk, &e1, &e1);
        assert_eq!(u, Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(0)]], 2));
        let z = Element::zero(2);
        assert!(u_operator(&kk, &z, &e1).is_zero());
        // bimod2h: ℓ_e = diag(1, 1/2), U_e = 2ℓ_e² − ℓ_e = diag(1, 0)
        let bh = gallery::bimod2h();
        let e = Element::basis(2, 0);
        let u = u_operator(&bh, &e, &e);
        assert_eq!(u, Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(0)]], 2));
    }

    #[test]
    fn pierce_kk() {
        let r = pierce_decompose(&gallery::kk(), &Element::basis(2, 0)).unwrap();
        assert_eq!(r.dims(), (1, 0, 1));
        assert!(r.table_violations.is_empty());
    }

    #[test]
    fn pierce_sym2() {
        // e = E11: eigenvalues of ℓ_e on (E11, E12+E21, E22) are 1, 1/2, 0
        let r = pierce_decompose(&gallery::sym2(), &Element::basis(3, 0)).unwrap();
        assert_eq!(r.dims(), (1, 1, 1));
        assert!(r.table_violations.is_empty(), "{:?}", r.table_violations);
    }

    #[test]
    fn pierce_bimod2() {
        let r = pierce_decompose(&gallery::bimod2(), &Element::basis(2, 0)).unwrap();
        assert_eq!(r.dims(), (2, 0, 0));
        assert!(r.table_violations.is_empty());
    }

    #[test]
    fn pierce_rejects_non_idempotent() {
        assert!(matches!(
            pierce_decompose(&gallery::kk(), &Element(vec![q(2), q(0)])),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn pierce_projectors_idempotent_orthogonal_sum_to_identity() {
        for (t, e) in [
            (gallery::kk(), Element::basis(2, 0)),
            (gallery::sym2(), Element::basis(3, 0)),
            (gallery::bimod2(), Element::basis(2, 0)),
            (gallery::bimod2h(), Element::basis(2, 0)),
            (gallery::bform1(), Element::basis(3, 0)),
        ] {
            let r = pierce_decompose(&t, &e).unwrap();
            assert!(r.table_violations.is_empty(), "{}: {:?}", t.name, r.table_violations);
            // U_e + 2U_{1−e,e} + U_{1−e} = id
            let sum = r.u_e.add(&r.u_half.scale(&q(2))).add(&r.u_0);
            assert_eq!(sum, Matrix::identity(t.dim), "{}", t.name);
            for p in [&r.u_e, &r.u_0] {
                assert_eq!(&p.mul(p), p, "{}: projector not idempotent", t.name);
            }
            assert!(r.u_e.mul(&r.u_0).is_zero(), "{}", t.name);
            assert!(r.u_0.mul(&r.u_e).is_zero(), "{}", t.name);
        }
    }

    #[test]
    fn operator_suite_iff_lj_suite() {
        let pass = [gallery::nil3(), gallery::bimod2(), gallery::bform1(), gallery::trunc3()];
        let fail = [gallery::uppertri2(), gallery::heis4()];
        for t in pass {
            assert!(identities::suite(&t, Suite::Lj).unwrap().pass, "{}", t.name);
            assert!(identities::operator_suite(&t).unwrap().pass, "{}", t.name);
        }
        for t in fail {
            let lj = identities::suite(&t, Suite::Lj).unwrap().pass;
            let op = identities::operator_suite(&t).unwrap().pass;
            assert_eq!(lj, op, "{}", t.name);
            assert!(!lj, "{}", t.name);
        }
    }

    #[test]
    fn lift_paper_trivial_when_already_idempotent() {
        let t = gallery::bimod2();
        let e = Element::basis(2, 0);
        let (out, ok) = lift_idempotent_paper(&t, &e).unwrap();
        assert_eq!(out, e);
        assert!(ok);
    }

    #[test]
    fn lift_paper_bimod2h_regression() {
        // e₀ = e + m: h = −m/2, the closed formula returns e + m/2, whose
        // square is e + m/4 — the flag records that this is not idempotent
        let t = gallery::bimod2h();
        let e0 = Element(vec![q(1), q(1)]);
        let (out, ok) = lift_idempotent_paper(&t, &e0).unwrap();
        assert_eq!(out, Element(vec![q(1), qr(1, 2)]));
        assert!(!ok);
        let sq = t.product(Side::Left, &out, &out);
        assert_eq!(sq, Element(vec![q(1), qr(1, 4)]));
    }

    #[test]
    fn lift_paper_rejects_bad_residue() {
        // e₁ + e₂ in k⊕k is idempotent, but e₁ + 2e₂ is not even idempotent
        // modulo the (zero) bar ideal
        let t = gallery::kk();
        assert!(matches!(
            lift_idempotent_paper(&t, &Element(vec![q(1), q(2)])),
            Err(Error::NotIdempotentModuloBar)
        ));
    }

    #[test]
    fn lift_linear_bimod2h() {
        // ℓ_{e₀} acts by 1/2 on span{m}, so u = 2h = −m and the lift is e
        let t = gallery::bimod2h();
        let e0 = Element(vec![q(1), q(1)]);
        let e = lift_idempotent_linear(&t, &e0).unwrap().unwrap();
        assert_eq!(e, Element::basis(2, 0));
    }

    #[test]
    fn lift_linear_trivial() {
        let t = gallery::bimod2();
        let e0 = Element::basis(2, 0);
        assert_eq!(lift_idempotent_linear(&t, &e0).unwrap(), Some(e0));
    }

    /// dim-2 table with e² = e + m, em = m, me = mm = 0: ℓ_e fixes the orbit
    /// of h = m, so id − ℓ_{e₀} is singular there and no lift exists.
    fn obstructed_fixture() -> AlgebraTable {
        let mut t = AlgebraTable::new_single("obstructed", 2);
        t.basis_labels = vec!["e".into(), "m".into()];
        t.set_product(Side::Left, 0, 0, 0, q(1));
        t.set_product(Side::Left, 0, 0, 1, q(1));
        t.set_product(Side::Left, 0, 1, 1, q(1));
        t
    }

    #[test]
    fn lift_linear_obstruction_returns_absent() {
        let t = obstructed_fixture();
        // no element e + αm is idempotent: (e+αm)² = e + (1+α)m
        let e0 = Element::basis(2, 0);
        assert_eq!(lift_idempotent_linear(&t, &e0).unwrap(), None);
    }

    #[test]
    fn nil_index_examples() {
        let t = gallery::nil3();
        assert_eq!(nil_index(&t, &Element::basis(3, 0), 8).unwrap(), Some(2));
        // (p+q)² = 2r and everything of length ≥ 3 vanishes
        assert_eq!(nil_index(&t, &Element(vec![q(1), q(1), q(0)]), 8).unwrap(), Some(3));
        // an idempotent is not nil
        assert_eq!(nil_index(&gallery::bimod2(), &Element::basis(2, 0), 8).unwrap(), None);
        // the zero element is nil of index 1
        assert_eq!(nil_index(&t, &Element::zero(3), 8).unwrap(), Some(1));
    }
}
