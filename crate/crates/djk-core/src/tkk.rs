//! Di-endomorphisms as action pairs, quasi-derivations, the structure
//! Leibniz algebra S₀(J), and the graded super-structure (TKK-type) Leibniz
//! algebra T(J) = J⁺ ⊕ S₀(J) ⊕ J⁻ with its bar comparison, grading
//! filtration, and current-conformal embedding.

use crate::algebra::{AlgebraTable, Element, Kind, Side};
use crate::conformal::{current_dialgebra, CurElement};
use crate::error::{Error, Result};
use crate::identities::{self, Suite};
use crate::linalg::{kernel_basis, q, vec_is_zero, Matrix, Q, Subspace};
use num::Zero;

/// A di-endomorphism of J stored by its two actions: F is the ⊢-action,
/// G the ⊣-action. Two di-endomorphisms are equal iff both actions agree,
/// which realizes the quotient by maps annihilating J on both sides.
#[derive(Clone, PartialEq, Debug)]
pub struct Diendo {
    pub f: Matrix,
    pub g: Matrix,
}

impl Diendo {
    pub fn zero(n: usize) -> Self {
        Diendo { f: Matrix::zero(n, n), g: Matrix::zero(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.f.rows
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn add(&self, other: &Diendo) -> Diendo {
        Diendo { f: self.f.add(&other.f), g: self.g.add(&other.g) }
    }

    pub fn sub(&self, other: &Diendo) -> Diendo {
        Diendo { f: self.f.sub(&other.f), g: self.g.sub(&other.g) }
    }

    pub fn scale(&self, s: &Q) -> Diendo {
        Diendo { f: self.f.scale(s), g: self.g.scale(s) }
    }

    /// Flat coordinates: F entries then G entries, 2n² total.
    pub fn flatten(&self) -> Vec<Q> {
        let mut v = self.f.flatten();
        v.extend(self.g.flatten());
        v
    }

    pub fn from_flat(v: &[Q], n: usize) -> Diendo {
        assert_eq!(v.len(), 2 * n * n);
        let at = |base: usize, r: usize, c: usize| v[base + r * n + c].clone();
        Diendo {
            f: Matrix::from_fn(n, n, |r, c| at(0, r, c)),
            g: Matrix::from_fn(n, n, |r, c| at(n * n, r, c)),
        }
    }
}

/// The left pseudo-multiplication by a as a di-endomorphism:
/// L_a⊢x = ax, L_a⊣x = xa.
pub fn l_diendo(j: &AlgebraTable, a: &Element) -> Diendo {
    assert_eq!(j.kind, Kind::Single);
    Diendo {
        f: j.left_mult_matrix(Side::Left, a),
        g: j.right_mult_matrix(Side::Left, a),
    }
}

/// φ⊢ψ = (F_φF_ψ, F_φG_ψ); φ⊣ψ = (F_φF_ψ, G_φF_ψ).
pub fn diendo_di_op(phi: &Diendo, psi: &Diendo, side: Side) -> Diendo {
    assert_eq!(phi.dim(), psi.dim());
    let ff = phi.f.mul(&psi.f);
    match side {
        Side::Left => Diendo { f: ff, g: phi.f.mul(&psi.g) },
        Side::Right => Diendo { f: ff, g: phi.g.mul(&psi.f) },
    }
}

/// [φ,ψ] = φ⊢ψ − ψ⊣φ = (F_φF_ψ − F_ψF_φ, F_φG_ψ − G_ψF_φ).
pub fn diendo_bracket(phi: &Diendo, psi: &Diendo) -> Diendo {
    diendo_di_op(phi, psi, Side::Left).sub(&diendo_di_op(psi, phi, Side::Right))
}

/// Check the quasi-derivation conditions D⊢(xy) = (D⊢x)y + x(D⊢y) and
/// D⊣(xy) = y(D⊣x) + x(D⊣y) on all basis pairs; the witness names the first
/// failing pair and condition.
pub fn is_quasi_derivation(j: &AlgebraTable, d: &Diendo) -> (bool, Option<String>) {
    assert_eq!(j.kind, Kind::Single);
    assert_eq!(d.dim(), j.dim);
    for i in 0..j.dim {
        for k in 0..j.dim {
            let x = Element::basis(j.dim, i);
            let y = Element::basis(j.dim, k);
            let xy = j.product(Side::Left, &x, &y);
            let dx = Element(d.f.apply(&x.0));
            let dy = Element(d.f.apply(&y.0));
            let lhs = d.f.apply(&xy.0);
            let rhs = j.product(Side::Left, &dx, &y).add(&j.product(Side::Left, &x, &dy));
            if Element(lhs) != rhs {
                return (false, Some(format!("left Leibniz rule fails on pair ({i},{k})")));
            }
            let gx = Element(d.g.apply(&x.0));
            let gy = Element(d.g.apply(&y.0));
            let lhs = d.g.apply(&xy.0);
            let rhs = j.product(Side::Left, &y, &gx).add(&j.product(Side::Left, &x, &gy));
            if Element(lhs) != rhs {
                return (false, Some(format!("right Leibniz rule fails on pair ({i},{k})")));
            }
        }
    }
    (true, None)
}

/// The space of quasi-derivations as a subspace of flattened (F,G)-pairs
/// (ambient dimension 2n²), computed by solving the homogeneous linear
/// system of the quasi-derivation conditions.
pub fn qder_basis(j: &AlgebraTable) -> Result<Subspace> {
    assert_eq!(j.kind, Kind::Single);
    let n = j.dim;
    let unknowns = 2 * n * n;
    let eqs = 2 * n * n * n; // two conditions × n² pairs × n coordinates
    let mut m = Matrix::zero(eqs, unknowns);
    for u in 0..unknowns {
        let mut flat = vec![Q::zero(); unknowns];
        flat[u] = q(1);
        let d = Diendo::from_flat(&flat, n);
        let mut row = 0;
        for i in 0..n {
            for k in 0..n {
                let x = Element::basis(n, i);
                let y = Element::basis(n, k);
                let xy = j.product(Side::Left, &x, &y);
                let dx = Element(d.f.apply(&x.0));
                let dy = Element(d.f.apply(&y.0));
                let r1 = Element(d.f.apply(&xy.0))
                    .sub(&j.product(Side::Left, &dx, &y))
                    .sub(&j.product(Side::Left, &x, &dy));
                let gx = Element(d.g.apply(&x.0));
                let gy = Element(d.g.apply(&y.0));
                let r2 = Element(d.g.apply(&xy.0))
                    .sub(&j.product(Side::Left, &y, &gx))
                    .sub(&j.product(Side::Left, &x, &gy));
                for c in 0..n {
                    m[(row + c, u)] = r1.0[c].clone();
                    m[(row + n + c, u)] = r2.0[c].clone();
                }
                row += 2 * n;
            }
        }
    }
    Subspace::span(&kernel_basis(&m), unknowns)
}

/// An element of the formal direct sum S(J) = L(J) ⊕ QDer(J): the L-part is
/// kept as its J-label (the preimage under a ↦ L_a), the quasi-derivation
/// part as an action pair.
#[derive(Clone, PartialEq, Debug)]
pub struct SElement {
    pub l: Element,
    pub q: Diendo,
}

impl SElement {
    pub fn zero(n: usize) -> Self {
        SElement { l: Element::zero(n), q: Diendo::zero(n) }
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.q.is_zero()
    }

    pub fn add(&self, other: &SElement) -> SElement {
        SElement { l: self.l.add(&other.l), q: self.q.add(&other.q) }
    }

    pub fn scale(&self, s: &Q) -> SElement {
        SElement { l: self.l.scale(s), q: self.q.scale(s) }
    }

    /// D = L_x + Q ↦ D* = −L_x + Q.
    pub fn star(&self) -> SElement {
        SElement { l: self.l.neg(), q: self.q.clone() }
    }

    /// Flat coordinates: J-label then Diendo, n + 2n² total.
    pub fn flatten(&self) -> Vec<Q> {
        let mut v = self.l.0.clone();
        v.extend(self.q.flatten());
        v
    }

    pub fn from_flat(v: &[Q], n: usize) -> SElement {
        assert_eq!(v.len(), n + 2 * n * n);
        SElement { l: Element(v[..n].to_vec()), q: Diendo::from_flat(&v[n..], n) }
    }

    /// D⊢a = xa + F_Q(a) for D = L_x + Q.
    pub fn act_left(&self, j: &AlgebraTable, a: &Element) -> Element {
        j.product(Side::Left, &self.l, a).add(&Element(self.q.f.apply(&a.0)))
    }

    /// D⊣a = ax + G_Q(a) for D = L_x + Q.
    pub fn act_right(&self, j: &AlgebraTable, a: &Element) -> Element {
        j.product(Side::Left, a, &self.l).add(&Element(self.q.g.apply(&a.0)))
    }
}

/// [(x,Q),(y,R)]_s = (Q⊢y − R⊣x, [L_x,L_y] + [Q,R]).
pub fn structure_bracket(j: &AlgebraTable, u: &SElement, v: &SElement) -> SElement {
    let l = Element(u.q.f.apply(&v.l.0)).sub(&Element(v.q.g.apply(&u.l.0)));
    let lq = diendo_bracket(&l_diendo(j, &u.l), &l_diendo(j, &v.l));
    let qq = diendo_bracket(&u.q, &v.q);
    SElement { l, q: lq.add(&qq) }
}

/// The structure algebra S₀(J): the span of L_{ab} and [L_a,L_b], with a
/// canonical RREF basis over flat (J ⊕ Diendo) coordinates.
pub struct S0 {
    pub basis: Vec<SElement>,
    pub span: Subspace,
    /// span of the flattened [L_a,L_b] generators alone
    pub q_span: Subspace,
    j_dim: usize,
}

impl S0 {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an SElement in the S₀ basis; None if outside the span.
    pub fn coords(&self, e: &SElement) -> Result<Option<Vec<Q>>> {
        self.span.coordinates(&e.flatten())
    }

    pub fn from_coords(&self, c: &[Q]) -> SElement {
        assert_eq!(c.len(), self.basis.len());
        let mut out = SElement::zero(self.j_dim);
        for (s, b) in c.iter().zip(&self.basis) {
            out = out.add(&b.scale(s));
        }
        out
    }
}

/// Build the canonical basis of S₀(J) and verify closure under the
/// structure bracket, including that every produced quasi-derivation part
/// stays inside span{[L_a,L_b]}.
pub fn s0_basis(j: &AlgebraTable) -> Result<S0> {
    assert_eq!(j.kind, Kind::Single);
    let n = j.dim;
    let flat_dim = n + 2 * n * n;
    let mut gens = Vec::new();
    let mut qgens = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let a = Element::basis(n, i);
            let b = Element::basis(n, k);
            let ab = j.product(Side::Left, &a, &b);
            gens.push(SElement { l: ab, q: Diendo::zero(n) }.flatten());
            let br = diendo_bracket(&l_diendo(j, &a), &l_diendo(j, &b));
            qgens.push(SElement { l: Element::zero(n), q: br.clone() }.flatten());
            gens.push(qgens.last().unwrap().clone());
        }
    }
    let span = Subspace::span(&gens, flat_dim)?;
    let q_span = Subspace::span(&qgens, flat_dim)?;
    let basis: Vec<SElement> =
        span.basis_rows().into_iter().map(|v| SElement::from_flat(&v, n)).collect();
    let s0 = S0 { basis, span, q_span, j_dim: n };
    // closure under the structure bracket
    for (i, u) in s0.basis.iter().enumerate() {
        for (k, v) in s0.basis.iter().enumerate() {
            let b = structure_bracket(j, u, v);
            if s0.coords(&b)?.is_none() {
                return Err(Error::ClosureViolation { i, j: k });
            }
            // the quasi-derivation part alone must be an L-bracket combination
            let qonly = SElement { l: Element::zero(n), q: b.q.clone() };
            if !s0.q_span.contains(&qonly.flatten())? {
                return Err(Error::ClosureViolation { i, j: k });
            }
        }
    }
    Ok(s0)
}

/// The super-structure Leibniz algebra T(J) = J⁺ ⊕ S₀(J) ⊕ J⁻ with its
/// bracket table, grading, and the canonical injections.
pub struct TkkAlgebra {
    pub table: AlgebraTable,
    pub j_dim: usize,
    pub s0: S0,
}

impl TkkAlgebra {
    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn s0_offset(&self) -> usize {
        self.j_dim
    }

    pub fn minus_offset(&self) -> usize {
        self.j_dim + self.s0.dim()
    }

    /// a ↦ a⁺ in T(J) coordinates.
    pub fn plus(&self, a: &Element) -> Element {
        let mut v = vec![Q::zero(); self.dim()];
        v[..self.j_dim].clone_from_slice(&a.0);
        Element(v)
    }

    /// a ↦ a⁻ in T(J) coordinates.
    pub fn minus(&self, a: &Element) -> Element {
        let mut v = vec![Q::zero(); self.dim()];
        let o = self.minus_offset();
        v[o..o + self.j_dim].clone_from_slice(&a.0);
        Element(v)
    }

    /// An S₀ element in T(J) coordinates; None if outside S₀.
    pub fn s_part(&self, d: &SElement) -> Result<Option<Element>> {
        let Some(c) = self.s0.coords(d)? else { return Ok(None) };
        let mut v = vec![Q::zero(); self.dim()];
        v[self.j_dim..self.j_dim + c.len()].clone_from_slice(&c);
        Ok(Some(Element(v)))
    }

    /// The involution a⁺ + D + b⁻ ↦ b⁺ + D* + a⁻ as a matrix.
    pub fn star_matrix(&self) -> Result<Matrix> {
        let n = self.j_dim;
        let s = self.s0.dim();
        let mut m = Matrix::zero(self.dim(), self.dim());
        for i in 0..n {
            m[(n + s + i, i)] = q(1);
            m[(i, n + s + i)] = q(1);
        }
        for k in 0..s {
            let starred = self.s0.basis[k].star();
            let c = self
                .s0
                .coords(&starred)?
                .ok_or(Error::Other("S0 is not closed under the * involution".into()))?;
            for (r, val) in c.into_iter().enumerate() {
                m[(n + r, n + k)] = val;
            }
        }
        Ok(m)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        self.table.product(Side::Left, x, y)
    }
}

/// Build T(J) and verify the Z₃-grading, the Leibniz identity on all basis
/// triples, and that the * map is an automorphism.
pub fn tkk_build(j: &AlgebraTable) -> Result<TkkAlgebra> {
    if !identities::suite(j, Suite::Lj)?.pass {
        return Err(Error::SuiteFailed { suite: "lj" });
    }
    let n = j.dim;
    let s0 = s0_basis(j)?;
    let s = s0.dim();
    let dim = 2 * n + s;
    let mut table = AlgebraTable::new_single(&format!("tkk({})", j.name), dim);
    let mut labels: Vec<String> = j.basis_labels.iter().map(|l| format!("{l}+")).collect();
    labels.extend((1..=s).map(|k| format!("D{k}")));
    labels.extend(j.basis_labels.iter().map(|l| format!("{l}-")));
    table.basis_labels = labels;
    let set = |bi: usize, bj: usize, v: &Element, table: &mut AlgebraTable| {
        for (k, c) in v.0.iter().enumerate() {
            if !c.is_zero() {
                table.set_product(Side::Left, bi, bj, k, c.clone());
            }
        }
    };
    let s_coords_elem = |d: &SElement, tk: &S0| -> Result<Vec<Q>> {
        tk.coords(d)?.ok_or(Error::Other("bracket leaves S0".into()))
    };
    // assemble via a temporary TkkAlgebra for the coordinate helpers
    let holder = TkkAlgebra { table: AlgebraTable::new_single("tmp", dim), j_dim: n, s0 };
    for i in 0..n {
        for k in 0..n {
            let a = Element::basis(n, i);
            let b = Element::basis(n, k);
            let ab = j.product(Side::Left, &a, &b);
            let br = diendo_bracket(&l_diendo(j, &a), &l_diendo(j, &b));
            // [a⁺, b⁻] = −L_{ab} + [L_a, L_b]
            let d = SElement { l: ab.neg(), q: br.clone() };
            let c = s_coords_elem(&d, &holder.s0)?;
            let mut v = Element::zero(dim);
            v.0[n..n + s].clone_from_slice(&c);
            set(i, n + s + k, &v, &mut table);
            // [a⁻, b⁺] = L_{ab} + [L_a, L_b]
            let d = SElement { l: ab, q: br };
            let c = s_coords_elem(&d, &holder.s0)?;
            let mut v = Element::zero(dim);
            v.0[n..n + s].clone_from_slice(&c);
            set(n + s + i, k, &v, &mut table);
        }
    }
    for k in 0..s {
        let d = holder.s0.basis[k].clone();
        let dstar = d.star();
        for i in 0..n {
            let a = Element::basis(n, i);
            // [a⁻, D] = −(D⊣a)⁻
            set(n + s + i, n + k, &holder.minus(&d.act_right(j, &a).neg()), &mut table);
            // [a⁺, D] = −(D*⊣a)⁺
            set(i, n + k, &holder.plus(&dstar.act_right(j, &a).neg()), &mut table);
            // [D, a⁻] = (D⊢a)⁻
            set(n + k, n + s + i, &holder.minus(&d.act_left(j, &a)), &mut table);
            // [D, a⁺] = (D*⊢a)⁺
            set(n + k, i, &holder.plus(&dstar.act_left(j, &a)), &mut table);
        }
        for l in 0..s {
            let br = structure_bracket(j, &holder.s0.basis[k], &holder.s0.basis[l]);
            let c = s_coords_elem(&br, &holder.s0)?;
            let mut v = Element::zero(dim);
            v.0[n..n + s].clone_from_slice(&c);
            set(n + k, n + l, &v, &mut table);
        }
    }
    let tkk = TkkAlgebra { table, j_dim: n, s0: holder.s0 };
    // Z₃-grading: assign degrees +1 (J⁺), 0 (S₀), −1 (J⁻) and check that
    // basis brackets land in the component of the summed degree
    let degree = |idx: usize| -> i32 {
        if idx < n {
            1
        } else if idx < n + s {
            0
        } else {
            -1
        }
    };
    for bi in 0..dim {
        for bj in 0..dim {
            let p = tkk.table.basis_product(Side::Left, bi, bj);
            let want = (degree(bi) + degree(bj) + 3) % 3; // in Z/3
            for (k, c) in p.iter().enumerate() {
                if !c.is_zero() && (degree(k) + 3) % 3 != want as i32 {
                    return Err(Error::Other(format!(
                        "grading violated at bracket ({bi},{bj}) -> {k}"
                    )));
                }
            }
        }
    }
    if !identities::suite(&tkk.table, Suite::Leibniz)?.pass {
        return Err(Error::SuiteFailed { suite: "leibniz" });
    }
    // * is an automorphism
    let star = tkk.star_matrix()?;
    for bi in 0..dim {
        for bj in 0..dim {
            let x = Element::basis(dim, bi);
            let y = Element::basis(dim, bj);
            let lhs = Element(star.apply(&tkk.bracket(&x, &y).0));
            let rhs = tkk.bracket(&Element(star.apply(&x.0)), &Element(star.apply(&y.0)));
            if lhs != rhs {
                return Err(Error::Other(format!("* is not an automorphism at ({bi},{bj})")));
            }
        }
    }
    Ok(tkk)
}

/// The comparison of T(J)/I₀ with T(J̄).
pub struct TauReport {
    /// componentwise epimorphism T(J) → T(J̄) in basis coordinates
    pub tau: Matrix,
    /// Span{[x,y]_t + [y,x]_t}
    pub i0: Subspace,
    pub kernel: Subspace,
    /// kernel == I₀, i.e. the induced map T(J)/I₀ → T(J̄) is an isomorphism
    pub iso_flag: bool,
    pub source: TkkAlgebra,
    pub target: TkkAlgebra,
}

/// Generator-based linear extension: given source generators (columns of
/// `src`) and their intended images (columns of `img`), verify the map is
/// well defined on the span (every relation among sources kills the images)
/// and return the matrix of the induced map on `basis` (RREF rows of the
/// source span).
fn extend_from_generators(
    src: &Matrix,
    img: &Matrix,
    basis: &Subspace,
) -> Result<Vec<Vec<Q>>> {
    for k in kernel_basis(src) {
        if !vec_is_zero(&img.apply(&k)) {
            return Err(Error::IllDefinedMap);
        }
    }
    let mut images = Vec::new();
    for b in basis.basis_rows() {
        let c = crate::linalg::solve(src, &b)
            .ok_or(Error::Other("basis vector outside generator span".into()))?;
        images.push(img.apply(&c));
    }
    Ok(images)
}

/// Build T(J̄), the canonical epimorphism τ: T(J) → T(J̄), I₀, and Ker τ.
pub fn tau_to_bar(j: &AlgebraTable) -> Result<TauReport> {
    let source = tkk_build(j)?;
    let (bar, proj) = j.bar_quotient()?;
    let target = tkk_build(&bar)?;
    let n = j.dim;
    let m = bar.dim;
    // τ on the S₀ part: defined on generators L_{ab} ↦ L_{φ(a)φ(b)} and
    // [L_a,L_b] ↦ [L_{φa},L_{φb}], then extended to the RREF basis
    let sflat = n + 2 * n * n;
    let tflat = m + 2 * m * m;
    let mut src_cols: Vec<Vec<Q>> = Vec::new();
    let mut img_cols: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let a = Element::basis(n, i);
            let b = Element::basis(n, k);
            let ab = j.product(Side::Left, &a, &b);
            src_cols.push(SElement { l: ab.clone(), q: Diendo::zero(n) }.flatten());
            let pab = Element(proj.apply(&ab.0));
            img_cols.push(SElement { l: pab, q: Diendo::zero(m) }.flatten());
            let br = diendo_bracket(&l_diendo(j, &a), &l_diendo(j, &b));
            src_cols.push(SElement { l: Element::zero(n), q: br }.flatten());
            let pa = Element(proj.apply(&a.0));
            let pb = Element(proj.apply(&b.0));
            let bbr = diendo_bracket(&l_diendo(&bar, &pa), &l_diendo(&bar, &pb));
            img_cols.push(SElement { l: Element::zero(m), q: bbr }.flatten());
        }
    }
    let src = Matrix::from_fn(sflat, src_cols.len(), |r, c| src_cols[c][r].clone());
    let img = Matrix::from_fn(tflat, img_cols.len(), |r, c| img_cols[c][r].clone());
    let s0_images = extend_from_generators(&src, &img, &source.s0.span)?;
    // assemble τ
    let mut tau = Matrix::zero(target.dim(), source.dim());
    for i in 0..n {
        let pa = Element(proj.apply(&Element::basis(n, i).0));
        for (r, v) in target.plus(&pa).0.into_iter().enumerate() {
            tau[(r, i)] = v;
        }
        for (r, v) in target.minus(&pa).0.into_iter().enumerate() {
            let val = v;
            if !val.is_zero() {
                tau[(r, source.minus_offset() + i)] = val;
            }
        }
    }
    for (k, img_flat) in s0_images.iter().enumerate() {
        let d = SElement::from_flat(img_flat, m);
        let e = target
            .s_part(&d)?
            .ok_or(Error::Other("τ image leaves S0 of the quotient".into()))?;
        for (r, v) in e.0.into_iter().enumerate() {
            if !v.is_zero() {
                tau[(r, source.s0_offset() + k)] = v;
            }
        }
    }
    // I₀ = Span{[x,y]_t + [y,x]_t}
    let mut rows = Vec::new();
    for bi in 0..source.dim() {
        for bj in 0..source.dim() {
            let x = Element::basis(source.dim(), bi);
            let y = Element::basis(source.dim(), bj);
            rows.push(source.bracket(&x, &y).add(&source.bracket(&y, &x)).0);
        }
    }
    let i0 = Subspace::span(&rows, source.dim())?;
    let kernel = Subspace::span(&kernel_basis(&tau), source.dim())?;
    let iso_flag = kernel.dim() == i0.dim() && kernel.contains_subspace(&i0)?;
    Ok(TauReport { tau, i0, kernel, iso_flag, source, target })
}

/// The embedding of T(J) into the truncated current dialgebra over T(Ĵ).
pub struct CurEmbedReport {
    pub source: TkkAlgebra,
    /// T(Ĵ) for the ordinary Jordan algebra Ĵ (the split null extension)
    pub hat_tkk: TkkAlgebra,
    /// truncated current dialgebra over the T(Ĵ) bracket table
    pub current: AlgebraTable,
    pub psi: Matrix,
    pub trunc: usize,
}

/// ψ: T(J) → (Cur T(Ĵ))^(0): a± ↦ 1⊗ā± + T⊗a±, L_a ↦ 1⊗ℓ_{ā} + T⊗ℓ_a,
/// [L_a,L_b] ↦ 1⊗[ℓ_{ā},ℓ_{b̄}] + T⊗[ℓ_{ā},ℓ_b]; verified well-defined,
/// injective, and a homomorphism of Leibniz algebras. Since T(Ĵ) is a Lie
/// algebra, its current conformal algebra has x⊢y = −y⊣x, and the Leibniz
/// bracket on the dialgebra is the left operation x₍₀₎y itself.
pub fn tkk_cur_embed(j: &AlgebraTable) -> Result<CurEmbedReport> {
    let source = tkk_build(j)?;
    let ext = j.split_null_extension()?;
    let hat = ext.hat.clone();
    let hat_tkk = tkk_build(&hat)?;
    let trunc = 1;
    let current = current_dialgebra(&hat_tkk.table, trunc)?;
    let n = j.dim;
    let hd = hat.dim;
    let bd = ext.bar.dim;
    // Ĵ-coordinates of ā (bar copy) and a (module copy)
    let bar_of = |a: &Element| -> Element {
        let mut v = vec![Q::zero(); hd];
        v[..bd].clone_from_slice(&ext.projection.apply(&a.0));
        Element(v)
    };
    let mod_of = |a: &Element| -> Element {
        let mut v = vec![Q::zero(); hd];
        v[bd..].clone_from_slice(&a.0);
        Element(v)
    };
    let tdim = hat_tkk.dim();
    let cur_flat = |deg0: &Element, deg1: &Element| -> Vec<Q> {
        let mut e = CurElement::zero(tdim, trunc);
        e.comps[0] = deg0.0.clone();
        e.comps[1] = deg1.0.clone();
        e.flatten()
    };
    // S₀ part via generators, with a well-definedness check
    let sflat = n + 2 * n * n;
    let mut src_cols: Vec<Vec<Q>> = Vec::new();
    let mut img_cols: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let a = Element::basis(n, i);
            let b = Element::basis(n, k);
            // L_{ab} ↦ 1⊗ℓ_{\overline{ab}} + T⊗ℓ_{ab}: in T(Ĵ) the element
            // ℓ_x is the S-element with label x and zero quasi-derivation
            let ab = j.product(Side::Left, &a, &b);
            src_cols.push(SElement { l: ab.clone(), q: Diendo::zero(n) }.flatten());
            let d0 = hat_tkk
                .s_part(&SElement { l: bar_of(&ab), q: Diendo::zero(hd) })?
                .ok_or(Error::Other("ℓ-label outside S0 of T(Ĵ)".into()))?;
            let d1 = hat_tkk
                .s_part(&SElement { l: mod_of(&ab), q: Diendo::zero(hd) })?
                .ok_or(Error::Other("ℓ-label outside S0 of T(Ĵ)".into()))?;
            img_cols.push(cur_flat(&d0, &d1));
            // [L_a,L_b] ↦ 1⊗[ℓ_ā,ℓ_b̄] + T⊗[ℓ_ā,ℓ_b]
            let br = diendo_bracket(&l_diendo(j, &a), &l_diendo(j, &b));
            src_cols.push(SElement { l: Element::zero(n), q: br }.flatten());
            let q0 = diendo_bracket(&l_diendo(&hat, &bar_of(&a)), &l_diendo(&hat, &bar_of(&b)));
            let q1 = diendo_bracket(&l_diendo(&hat, &bar_of(&a)), &l_diendo(&hat, &mod_of(&b)));
            let d0 = hat_tkk
                .s_part(&SElement { l: Element::zero(hd), q: q0 })?
                .ok_or(Error::Other("bracket image outside S0 of T(Ĵ)".into()))?;
            let d1 = hat_tkk
                .s_part(&SElement { l: Element::zero(hd), q: q1 })?
                .ok_or(Error::Other("bracket image outside S0 of T(Ĵ)".into()))?;
            img_cols.push(cur_flat(&d0, &d1));
        }
    }
    let src = Matrix::from_fn(sflat, src_cols.len(), |r, c| src_cols[c][r].clone());
    let img =
        Matrix::from_fn(current.dim, img_cols.len(), |r, c| img_cols[c][r].clone());
    let s0_images = extend_from_generators(&src, &img, &source.s0.span)?;
    let mut psi = Matrix::zero(current.dim, source.dim());
    for i in 0..n {
        let a = Element::basis(n, i);
        let col_p = cur_flat(&hat_tkk.plus(&bar_of(&a)), &hat_tkk.plus(&mod_of(&a)));
        let col_m = cur_flat(&hat_tkk.minus(&bar_of(&a)), &hat_tkk.minus(&mod_of(&a)));
        for r in 0..current.dim {
            psi[(r, i)] = col_p[r].clone();
            psi[(r, source.minus_offset() + i)] = col_m[r].clone();
        }
    }
    for (k, img_flat) in s0_images.iter().enumerate() {
        for (r, v) in img_flat.iter().enumerate() {
            psi[(r, source.s0_offset() + k)] = v.clone();
        }
    }
    // injectivity
    let cols: Vec<Vec<Q>> = (0..source.dim()).map(|c| psi.col(c)).collect();
    let (_, rank, _) = crate::linalg::rref(&Matrix::from_rows(cols, current.dim));
    if rank != source.dim() {
        return Err(Error::Other("current embedding of T(J) is not injective".into()));
    }
    // homomorphism of Leibniz algebras: the target bracket is the left
    // 0-product, and ⊣ must be its opposite negated (Lie-type target)
    for bi in 0..source.dim() {
        for bj in 0..source.dim() {
            let x = Element::basis(source.dim(), bi);
            let y = Element::basis(source.dim(), bj);
            let lhs = psi.apply(&source.bracket(&x, &y).0);
            let px = Element(psi.apply(&x.0));
            let py = Element(psi.apply(&y.0));
            let rhs = current.product(Side::Left, &px, &py);
            let opp = current.product(Side::Right, &py, &px).neg();
            if rhs != opp {
                return Err(Error::Other(format!(
                    "target is not Lie-type at ({bi},{bj}): ⊢ differs from −⊣ᵒᵖ"
                )));
            }
            if Element(lhs) != rhs {
                return Err(Error::Other(format!(
                    "current embedding is not a homomorphism at ({bi},{bj})"
                )));
            }
        }
    }
    Ok(CurEmbedReport { source, hat_tkk, current, psi, trunc })
}

/// For a nilpotent J, check that a ∈ Jⁿ implies L_a, a⁺, a⁻ ∈ T(J)^⌈n/2⌉
/// (terms of the full power chain of T(J)).
pub fn grading_filtration_check(j: &AlgebraTable) -> Result<bool> {
    let tkk = tkk_build(j)?;
    let jchain = crate::structure::power_chain(j, crate::structure::ChainKind::Full)?;
    let tchain = crate::structure::power_chain(&tkk.table, crate::structure::ChainKind::Full)?;
    for (k, term) in jchain.chain.iter().enumerate().skip(1) {
        let nn = k + 1; // term = Jⁿ
        let half = nn.div_ceil(2);
        let Some(ts) = tchain.chain.get(half - 1) else {
            continue; // chain already stabilized below this depth
        };
        for a in term.basis_rows() {
            let a = Element(a);
            if !ts.contains(&tkk.plus(&a).0)? || !ts.contains(&tkk.minus(&a).0)? {
                return Ok(false);
            }
            let Some(la) = tkk.s_part(&SElement { l: a.clone(), q: Diendo::zero(j.dim) })? else {
                return Ok(false);
            };
            if !ts.contains(&la.0)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
