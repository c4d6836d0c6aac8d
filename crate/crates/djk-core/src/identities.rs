//! Polynomial identities as formal term combinations, polarization of
//! non-multilinear identities, exhaustive multilinear checking on basis
//! tuples, and the named identity suites for the varieties in play.

use crate::algebra::{AlgebraTable, Element, Side};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Which operation a binary node applies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Op {
    /// The single product of an ordinary algebra.
    Circ,
    /// ⊢
    L,
    /// ⊣
    R,
}

/// A monomial: a binary tree with variable-indexed leaves (1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Term {
    Var(usize),
    App(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn app(op: Op, l: Term, r: Term) -> Term {
        Term::App(op, Box::new(l), Box::new(r))
    }

    /// Leaf variable indices, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Term::Var(v) => vec![*v],
            Term::App(_, l, r) => {
                let mut out = l.leaves();
                out.extend(r.leaves());
                out
            }
        }
    }

    fn degree_of(&self, var: usize) -> usize {
        self.leaves().iter().filter(|&&v| v == var).count()
    }

    fn eval(&self, table: &AlgebraTable, assign: &[Element]) -> Element {
        match self {
            Term::Var(v) => assign[*v - 1].clone(),
            Term::App(op, l, r) => {
                let lv = l.eval(table, assign);
                let rv = r.eval(table, assign);
                match op {
                    Op::Circ | Op::L => table.product(Side::Left, &lv, &rv),
                    Op::R => table.product(Side::Right, &lv, &rv),
                }
            }
        }
    }

    /// Serialization used for the canonical length-lexicographic term order.
    fn key(&self) -> String {
        match self {
            Term::Var(v) => format!("x{v}"),
            Term::App(op, l, r) => {
                let s = match op {
                    Op::Circ => "*",
                    Op::L => "|-",
                    Op::R => "-|",
                };
                format!("({} {} {})", l.key(), s, r.key())
            }
        }
    }

    /// Rebuild the term applying a map at each leaf occurrence, indexed by
    /// the running occurrence count per variable.
    fn relabel(&self, counters: &mut BTreeMap<usize, usize>, map: &dyn Fn(usize, usize) -> usize) -> Term {
        match self {
            Term::Var(v) => {
                let c = counters.entry(*v).or_insert(0);
                let occ = *c;
                *c += 1;
                Term::Var(map(*v, occ))
            }
            Term::App(op, l, r) => {
                let nl = l.relabel(counters, map);
                let nr = r.relabel(counters, map);
                Term::app(*op, nl, nr)
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// A formal linear combination of monomials, sharing a variable set 1..k.
#[derive(Clone, PartialEq, Debug)]
pub struct IdentityPoly {
    pub name: String,
    pub vars: usize,
    /// Canonically ordered (length-lex on the serialization), coefficients
    /// nonzero, terms distinct.
    pub terms: Vec<(Q, Term)>,
}

impl IdentityPoly {
    pub fn new(name: &str, vars: usize, terms: Vec<(Q, Term)>) -> IdentityPoly {
        let mut merged: BTreeMap<(usize, String), (Q, Term)> = BTreeMap::new();
        for (c, t) in terms {
            let k = t.key();
            let e = merged.entry((k.len(), k)).or_insert_with(|| (Q::zero(), t));
            e.0 += c;
        }
        let terms = merged.into_values().filter(|(c, _)| !c.is_zero()).collect();
        IdentityPoly { name: name.to_string(), vars, terms }
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.iter().all(|(_, t)| {
            let l = t.leaves();
            l.len() == self.vars && (1..=self.vars).all(|v| t.degree_of(v) == 1)
        })
    }

    /// Degree of each variable (must be uniform across terms to be defined).
    fn multidegree(&self) -> Result<Vec<usize>> {
        let mut deg = vec![0usize; self.vars];
        for v in 1..=self.vars {
            let d = self.terms.first().map(|(_, t)| t.degree_of(v)).unwrap_or(0);
            for (_, t) in &self.terms {
                if t.degree_of(v) != d {
                    return Err(Error::NotHomogeneous { var: v });
                }
            }
            deg[v - 1] = d;
        }
        Ok(deg)
    }

    pub fn eval(&self, table: &AlgebraTable, assign: &[Element]) -> Element {
        let mut acc = Element::zero(table.dim);
        for (c, t) in &self.terms {
            acc = acc.add(&t.eval(table, assign).scale(c));
        }
        acc
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut np = p.clone();
            np.insert(i, n - 1);
            out.push(np);
        }
    }
    out
}

/// Full multilinearization of a multihomogeneous identity.
///
/// A variable of degree d is replaced by d fresh variables, and each term is
/// summed over all assignments of the fresh variables to its occurrences.
/// Over a field of characteristic 0 the original identity holds in an algebra
/// iff the polarized one does.
pub fn polarize(p: &IdentityPoly) -> Result<Vec<IdentityPoly>> {
    let deg = p.multidegree()?;
    if p.is_multilinear() {
        return Ok(vec![p.clone()]);
    }
    // fresh-variable blocks, in variable order
    let mut start = vec![0usize; p.vars + 1];
    for v in 1..=p.vars {
        start[v] = start[v - 1] + deg[v - 1];
    }
    let new_vars = start[p.vars];
    // choose one permutation per variable of degree > 1, occurrence -> fresh
    let mut out_terms: Vec<(Q, Term)> = Vec::new();
    for (c, t) in &p.terms {
        let mut choices: Vec<Vec<Vec<usize>>> = Vec::new(); // per var, list of perms
        for v in 1..=p.vars {
            choices.push(permutations(deg[v - 1]));
        }
        let mut idx = vec![0usize; p.vars];
        loop {
            let assign: Vec<&Vec<usize>> =
                (0..p.vars).map(|v| &choices[v][idx[v]]).collect();
            let mut counters = BTreeMap::new();
            let nt = t.relabel(&mut counters, &|v: usize, occ: usize| {
                start[v - 1] + assign[v - 1][occ] + 1
            });
            out_terms.push((c.clone(), nt));
            // odometer
            let mut k = 0;
            loop {
                if k == p.vars {
                    break;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == p.vars {
                break;
            }
        }
    }
    Ok(vec![IdentityPoly::new(&format!("{}-polarized", p.name), new_vars, out_terms)])
}

/// One failing basis tuple for one identity.
#[derive(Clone, Debug)]
pub struct Witness {
    pub identity: String,
    /// 0-based basis indices, one per variable.
    pub tuple: Vec<usize>,
    pub value: Vec<Q>,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn merge(suite: &str, parts: Vec<CheckReport>) -> CheckReport {
        let mut witnesses = Vec::new();
        for p in parts {
            witnesses.extend(p.witnesses);
        }
        CheckReport { suite: suite.to_string(), pass: witnesses.is_empty(), witnesses }
    }
}

/// Evaluate a multilinear identity on every basis tuple (lexicographic
/// order); record the first failing tuple, if any.
pub fn check_identity(table: &AlgebraTable, p: &IdentityPoly) -> Result<CheckReport> {
    if !p.is_multilinear() {
        let v = (1..=p.vars)
            .find(|&v| p.terms.iter().any(|(_, t)| t.degree_of(v) != 1))
            .unwrap_or(1);
        return Err(Error::NotMultilinear { var: v });
    }
    let n = table.dim;
    let mut witnesses = Vec::new();
    let mut tuple = vec![0usize; p.vars];
    if n > 0 {
        'outer: loop {
            let assign: Vec<Element> =
                tuple.iter().map(|&i| Element::basis(n, i)).collect();
            let v = p.eval(table, &assign);
            if !v.is_zero() {
                witnesses.push(Witness { identity: p.name.clone(), tuple: tuple.clone(), value: v.0 });
                break 'outer;
            }
            let mut k = p.vars;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                tuple[k] += 1;
                if tuple[k] < n {
                    break;
                }
                tuple[k] = 0;
                if k == 0 {
                    break 'outer;
                }
            }
        }
    }
    Ok(CheckReport { suite: p.name.clone(), pass: witnesses.is_empty(), witnesses })
}

fn v(i: usize) -> Term {
    Term::Var(i)
}

fn c(op: Op, l: Term, r: Term) -> Term {
    Term::app(op, l, r)
}

/// The six monomials of the multilinear Jordan identity J(x1,x2,x3,x4),
/// with signs, built with the given product symbol.
fn j_terms(op: Op) -> Vec<(Q, Term)> {
    vec![
        (q(1), c(op, v(1), c(op, v(2), c(op, v(3), v(4))))),
        (q(1), c(op, c(op, v(2), c(op, v(1), v(3))), v(4))),
        (q(1), c(op, v(3), c(op, v(2), c(op, v(1), v(4))))),
        (q(-1), c(op, c(op, v(1), v(2)), c(op, v(3), v(4)))),
        (q(-1), c(op, c(op, v(1), v(3)), c(op, v(2), v(4)))),
        (q(-1), c(op, c(op, v(3), v(2)), c(op, v(1), v(4)))),
    ]
}

/// J(x1,x2,x3,x4) = 0 as an identity in the single product.
pub fn jordan_j() -> IdentityPoly {
    IdentityPoly::new("J", 4, j_terms(Op::Circ))
}

/// x1((x4x3)x2) + x4((x3x1)x2) + x3((x4x1)x2)
///   − (x4x3)(x1x2) − (x1x3)(x4x2) − (x4x1)(x3x2) = 0.
pub fn lj_tri() -> IdentityPoly {
    let o = Op::Circ;
    IdentityPoly::new(
        "tri",
        4,
        vec![
            (q(1), c(o, v(1), c(o, c(o, v(4), v(3)), v(2)))),
            (q(1), c(o, v(4), c(o, c(o, v(3), v(1)), v(2)))),
            (q(1), c(o, v(3), c(o, c(o, v(4), v(1)), v(2)))),
            (q(-1), c(o, c(o, v(4), v(3)), c(o, v(1), v(2)))),
            (q(-1), c(o, c(o, v(1), v(3)), c(o, v(4), v(2)))),
            (q(-1), c(o, c(o, v(4), v(1)), c(o, v(3), v(2)))),
        ],
    )
}

/// [x1,x2]x3 = (x1x2)x3 − (x2x1)x3 = 0.
pub fn lj_comm() -> IdentityPoly {
    let o = Op::Circ;
    IdentityPoly::new(
        "comm-ann",
        3,
        vec![
            (q(1), c(o, c(o, v(1), v(2)), v(3))),
            (q(-1), c(o, c(o, v(2), v(1)), v(3))),
        ],
    )
}

/// Left Leibniz identity x1(x2x3) − (x1x2)x3 − x2(x1x3) = 0, where the
/// single product is the bracket.
pub fn leibniz_identity() -> IdentityPoly {
    let o = Op::Circ;
    IdentityPoly::new(
        "leibniz",
        3,
        vec![
            (q(1), c(o, v(1), c(o, v(2), v(3)))),
            (q(-1), c(o, c(o, v(1), v(2)), v(3))),
            (q(-1), c(o, v(2), c(o, v(1), v(3)))),
        ],
    )
}

fn zero_di_identities() -> Vec<IdentityPoly> {
    vec![
        IdentityPoly::new(
            "0-left",
            3,
            vec![
                (q(1), c(Op::L, c(Op::R, v(1), v(2)), v(3))),
                (q(-1), c(Op::L, c(Op::L, v(1), v(2)), v(3))),
            ],
        ),
        IdentityPoly::new(
            "0-right",
            3,
            vec![
                (q(1), c(Op::R, v(1), c(Op::L, v(2), v(3)))),
                (q(-1), c(Op::R, v(1), c(Op::R, v(2), v(3)))),
            ],
        ),
    ]
}

/// The three dialgebra associators, as 2-term identity polynomials.
fn associator(tag: &str, outer: Op, inner: Op, perm: [usize; 3]) -> IdentityPoly {
    // ((a inner b) outer c) − (a inner' ...) is not the shape we want; build
    // the standard associator (x,y,z) = (x∘y)∘z − x∘(y∘z) with the two ops
    // determined by the subscript: ⊢ uses ⊢ twice, ⊣ uses ⊣ twice,
    // × uses (x⊢y)⊣z − x⊢(y⊣z).
    let (o1, o2) = (inner, outer);
    let [a, b, zc] = perm;
    IdentityPoly::new(
        tag,
        3,
        vec![
            (q(1), c(o2, c(o1, v(a), v(b)), v(zc))),
            (q(-1), c(o1, v(a), c(o2, v(b), v(zc)))),
        ],
    )
}

fn assoc_l(perm: [usize; 3]) -> Vec<(Q, Term)> {
    associator("", Op::L, Op::L, perm).terms
}
fn assoc_r(perm: [usize; 3]) -> Vec<(Q, Term)> {
    associator("", Op::R, Op::R, perm).terms
}
fn assoc_x(perm: [usize; 3]) -> Vec<(Q, Term)> {
    associator("", Op::R, Op::L, perm).terms
}

fn diassoc_identities() -> Vec<IdentityPoly> {
    vec![
        IdentityPoly::new("assoc-left", 3, assoc_l([1, 2, 3])),
        IdentityPoly::new("assoc-right", 3, assoc_r([1, 2, 3])),
        IdentityPoly::new("assoc-mixed", 3, assoc_x([1, 2, 3])),
    ]
}

fn dialt_identities() -> Vec<IdentityPoly> {
    let sum = |name: &str, a: Vec<(Q, Term)>, b: Vec<(Q, Term)>| {
        let mut t = a;
        t.extend(b);
        IdentityPoly::new(name, 3, t)
    };
    vec![
        sum("alt-1", assoc_l([1, 2, 3]), assoc_l([2, 1, 3])),
        sum("alt-2", assoc_r([1, 2, 3]), assoc_r([1, 3, 2])),
        sum("alt-3", assoc_r([1, 2, 3]), assoc_x([2, 1, 3])),
        sum("alt-4", assoc_x([1, 2, 3]), assoc_l([1, 3, 2])),
    ]
}

/// Direct the operations of a monomial toward the (unique) occurrence of
/// `dotted`: each node's dash points at the subtree or side holding it.
fn direct_term(t: &Term, dotted: usize) -> Term {
    let leaves = t.leaves();
    let pos = leaves.iter().position(|&l| l == dotted).expect("dotted var present");
    fn walk(t: &Term, offset: usize, pos: usize) -> Term {
        match t {
            Term::Var(u) => Term::Var(*u),
            Term::App(_, l, r) => {
                let lw = l.leaves().len();
                // the right subtree starts at leaf position offset + lw;
                // the dash points at the marked leaf, so it points right
                // exactly when that leaf sits at or past the split point
                let op = if pos >= offset + lw { Op::L } else { Op::R };
                Term::app(op, walk(l, offset, pos), walk(r, offset + lw, pos))
            }
        }
    }
    walk(t, 0, pos)
}

/// The four dotted variants of the Jordan identity, as dialgebra identities.
pub fn dotted_j(i: usize) -> IdentityPoly {
    let terms = j_terms(Op::Circ)
        .into_iter()
        .map(|(coef, t)| (coef, direct_term(&t, i)))
        .collect();
    IdentityPoly::new(&format!("J-dot{i}"), 4, terms)
}

fn jordan_di_identities() -> Vec<IdentityPoly> {
    let mut out = vec![IdentityPoly::new(
        "left-right-swap",
        2,
        vec![(q(1), c(Op::L, v(1), v(2))), (q(-1), c(Op::R, v(2), v(1)))],
    )];
    out.extend(zero_di_identities());
    out.extend((1..=4).map(dotted_j));
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    ZeroDi,
    Diassoc,
    Dialt,
    Leibniz,
    Jordan,
    Lj,
    JordanDi,
    Operator,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::ZeroDi => "zero-di",
            Suite::Diassoc => "diassoc",
            Suite::Dialt => "dialt",
            Suite::Leibniz => "leibniz",
            Suite::Jordan => "jordan",
            Suite::Lj => "lj",
            Suite::JordanDi => "jordan-di",
            Suite::Operator => "operator",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        match s.to_ascii_lowercase().as_str() {
            "zero-di" | "zero_di" | "zerodi" => Some(Suite::ZeroDi),
            "diassoc" => Some(Suite::Diassoc),
            "dialt" => Some(Suite::Dialt),
            "leibniz" => Some(Suite::Leibniz),
            "jordan" => Some(Suite::Jordan),
            "lj" => Some(Suite::Lj),
            "jordan-di" | "jordan_di" | "jordandi" => Some(Suite::JordanDi),
            "operator" => Some(Suite::Operator),
            _ => None,
        }
    }

    pub fn all() -> [Suite; 8] {
        [
            Suite::ZeroDi,
            Suite::Diassoc,
            Suite::Dialt,
            Suite::Leibniz,
            Suite::Jordan,
            Suite::Lj,
            Suite::JordanDi,
            Suite::Operator,
        ]
    }
}

/// Run a named identity suite on a table.
pub fn suite(table: &AlgebraTable, name: Suite) -> Result<CheckReport> {
    let ids: Vec<IdentityPoly> = match name {
        Suite::ZeroDi => zero_di_identities(),
        Suite::Diassoc => diassoc_identities(),
        Suite::Dialt => dialt_identities(),
        Suite::Leibniz => vec![leibniz_identity()],
        Suite::Jordan => vec![
            IdentityPoly::new(
                "commutativity",
                2,
                vec![(q(1), c(Op::Circ, v(1), v(2))), (q(-1), c(Op::Circ, v(2), v(1)))],
            ),
            jordan_j(),
        ],
        Suite::Lj => vec![lj_comm(), jordan_j(), lj_tri()],
        Suite::JordanDi => jordan_di_identities(),
        Suite::Operator => return operator_suite(table),
    };
    let mut parts = Vec::new();
    for id in ids {
        parts.push(check_identity(table, &id)?);
    }
    Ok(CheckReport::merge(name.name(), parts))
}

/// The left-multiplication-operator form of the LJ identity system, checked
/// as matrix identities over all needed basis tuples.
pub fn operator_suite(table: &AlgebraTable) -> Result<CheckReport> {
    let n = table.dim;
    let l = |x: &Element| table.left_mult_matrix(Side::Left, x);
    let mut witnesses = Vec::new();
    // l_{ab} = l_{ba}
    'raz: for a in 0..n {
        for b in 0..n {
            let ea = Element::basis(n, a);
            let eb = Element::basis(n, b);
            let ab = table.product(Side::Left, &ea, &eb);
            let ba = table.product(Side::Left, &eb, &ea);
            let d = l(&ab).sub(&l(&ba));
            if !d.is_zero() {
                witnesses.push(Witness {
                    identity: "op-swap".into(),
                    tuple: vec![a, b],
                    value: d.flatten(),
                });
                break 'raz;
            }
        }
    }
    // l_t l_z l_y + l_y l_z l_t + l_{(yt)z} = l_{tz} l_y + l_{yt} l_z + l_{zy} l_t
    // and [l_y, l_{tz}] + [l_z, l_{yt}] + [l_t, l_{zy}] = 0
    let mut found_dva = false;
    let mut found_tri = false;
    'dva: for yi in 0..n {
        for zi in 0..n {
            for ti in 0..n {
                let y = Element::basis(n, yi);
                let z = Element::basis(n, zi);
                let t = Element::basis(n, ti);
                let ly = l(&y);
                let lz = l(&z);
                let lt = l(&t);
                let yt = table.product(Side::Left, &y, &t);
                let tz = table.product(Side::Left, &t, &z);
                let zy = table.product(Side::Left, &z, &y);
                let ytz = table.product(Side::Left, &yt, &z);
                if !found_dva {
                    let lhs = lt.mul(&lz).mul(&ly).add(&ly.mul(&lz).mul(&lt)).add(&l(&ytz));
                    let rhs = l(&tz).mul(&ly).add(&l(&yt).mul(&lz)).add(&l(&zy).mul(&lt));
                    let d = lhs.sub(&rhs);
                    if !d.is_zero() {
                        witnesses.push(Witness {
                            identity: "op-triple".into(),
                            tuple: vec![yi, zi, ti],
                            value: d.flatten(),
                        });
                        found_dva = true;
                    }
                }
                if !found_tri {
                    let comm = |a: &crate::linalg::Matrix, b: &crate::linalg::Matrix| {
                        a.mul(b).sub(&b.mul(a))
                    };
                    let s = comm(&ly, &l(&tz)).add(&comm(&lz, &l(&yt))).add(&comm(&lt, &l(&zy)));
                    if !s.is_zero() {
                        witnesses.push(Witness {
                            identity: "op-comm".into(),
                            tuple: vec![yi, zi, ti],
                            value: s.flatten(),
                        });
                        found_tri = true;
                    }
                }
                if found_dva && found_tri {
                    break 'dva;
                }
            }
        }
    }
    Ok(CheckReport { suite: "operator".into(), pass: witnesses.is_empty(), witnesses })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variety {
    Associative,
    Alternative,
    Jordan,
    Lie,
}

fn single_variety_identities(var: Variety) -> Vec<IdentityPoly> {
    let o = Op::Circ;
    match var {
        Variety::Associative => vec![IdentityPoly::new(
            "associativity",
            3,
            vec![(q(1), c(o, c(o, v(1), v(2)), v(3))), (q(-1), c(o, v(1), c(o, v(2), v(3))))],
        )],
        Variety::Alternative => {
            let asc = |a: usize, b: usize, zc: usize| {
                vec![
                    (q(1), c(o, c(o, v(a), v(b)), v(zc))),
                    (q(-1), c(o, v(a), c(o, v(b), v(zc)))),
                ]
            };
            let sum = |name: &str, x: Vec<(Q, Term)>, y: Vec<(Q, Term)>| {
                let mut t = x;
                t.extend(y);
                IdentityPoly::new(name, 3, t)
            };
            vec![
                sum("left-alternative", asc(1, 2, 3), asc(2, 1, 3)),
                sum("right-alternative", asc(1, 2, 3), asc(1, 3, 2)),
            ]
        }
        Variety::Jordan => vec![
            IdentityPoly::new(
                "commutativity",
                2,
                vec![(q(1), c(o, v(1), v(2))), (q(-1), c(o, v(2), v(1)))],
            ),
            jordan_j(),
        ],
        Variety::Lie => vec![
            IdentityPoly::new(
                "anticommutativity",
                2,
                vec![(q(1), c(o, v(1), v(2))), (q(1), c(o, v(2), v(1)))],
            ),
            IdentityPoly::new(
                "jacobi",
                3,
                vec![
                    (q(1), c(o, c(o, v(1), v(2)), v(3))),
                    (q(1), c(o, c(o, v(2), v(3)), v(1))),
                    (q(1), c(o, c(o, v(3), v(1)), v(2))),
                ],
            ),
        ],
    }
}

impl Variety {
    pub fn name(&self) -> &'static str {
        match self {
            Variety::Associative => "associative",
            Variety::Alternative => "alternative",
            Variety::Jordan => "jordan",
            Variety::Lie => "lie",
        }
    }
}

/// Membership of a 0-dialgebra in the dialgebra variety attached to an
/// ordinary variety: the bar quotient and the split null extension must both
/// satisfy the ordinary identities.
pub fn variety_membership(table: &AlgebraTable, var: Variety) -> Result<CheckReport> {
    let zd = suite(table, Suite::ZeroDi)?;
    if !zd.pass {
        let mut r = zd;
        r.suite = format!("variety-{}", var.name());
        return Ok(r);
    }
    let ext = table.as_double().split_null_extension()?;
    let ids = single_variety_identities(var);
    let mut parts = Vec::new();
    for id in &ids {
        let mut r = check_identity(&ext.bar, id)?;
        for w in &mut r.witnesses {
            w.identity = format!("bar:{}", w.identity);
        }
        parts.push(r);
    }
    for id in &ids {
        let mut r = check_identity(&ext.hat, id)?;
        for w in &mut r.witnesses {
            w.identity = format!("hat:{}", w.identity);
        }
        parts.push(r);
    }
    Ok(CheckReport::merge(&format!("variety-{}", var.name()), parts))
}
