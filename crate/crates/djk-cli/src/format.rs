//! Line-oriented, diff-friendly text format for structure-constant algebras.
//!
//! Grammar (UTF-8, `#` starts a comment, blank lines ignored, indices 1-based):
//!
//! ```text
//! algebra NAME
//! kind single|double
//! dim N
//! prod I J = C1*eK1 [+ C2*eK2 ...]      # single-operation tables
//! left I J = ...                        # double-operation tables
//! right I J = ...
//! ```
//!
//! Rationals are written `p` or `p/q`. Unspecified products are zero.

use djk_core::{AlgebraTable, Kind, Side, Q};
use num::Zero;
use std::fmt;
use std::str::FromStr;

#[derive(Debug)]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError { line, msg: msg.into() }
}

fn parse_rational(s: &str, line: usize) -> Result<Q, FormatError> {
    Q::from_str(s).map_err(|_| err(line, format!("malformed rational `{s}`")))
}

fn parse_index(s: &str, dim: usize, line: usize) -> Result<usize, FormatError> {
    let i: usize =
        s.parse().map_err(|_| err(line, format!("malformed basis index `{s}`")))?;
    if i == 0 || i > dim {
        return Err(err(line, format!("basis index {i} out of range 1..={dim}")));
    }
    Ok(i - 1)
}

/// Parse the right-hand side of a product line into (coefficient, index) pairs.
fn parse_terms(rhs: &str, dim: usize, line: usize) -> Result<Vec<(Q, usize)>, FormatError> {
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for term in rhs.split('+') {
        let term = term.trim();
        let Some((coef, basis)) = term.split_once('*') else {
            return Err(err(line, format!("malformed term `{term}` (expected C*eK)")));
        };
        let c = parse_rational(coef.trim(), line)?;
        let basis = basis.trim();
        let Some(idx) = basis.strip_prefix('e') else {
            return Err(err(line, format!("malformed basis reference `{basis}`")));
        };
        out.push((c, parse_index(idx, dim, line)?));
    }
    Ok(out)
}

/// Parse an algebra file into a fully populated table; unspecified products
/// default to zero.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraTable, FormatError> {
    let mut name: Option<String> = None;
    let mut kind: Option<Kind> = None;
    let mut dim: Option<usize> = None;
    let mut table: Option<AlgebraTable> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(lineno, format!("malformed line `{content}`")))?;
        let rest = rest.trim();
        match head {
            "algebra" => {
                if rest.is_empty() {
                    return Err(err(lineno, "missing algebra name"));
                }
                name = Some(rest.to_string());
            }
            "kind" => {
                kind = Some(match rest {
                    "single" => Kind::Single,
                    "double" => Kind::Double,
                    other => {
                        return Err(err(lineno, format!("unknown kind `{other}`")))
                    }
                });
            }
            "dim" => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| err(lineno, format!("malformed dimension `{rest}`")))?;
                dim = Some(n);
            }
            "prod" | "left" | "right" => {
                if table.is_none() {
                    let (Some(name), Some(kind), Some(dim)) = (&name, kind, dim) else {
                        return Err(err(
                            lineno,
                            "product line before complete header (algebra/kind/dim)",
                        ));
                    };
                    table = Some(match kind {
                        Kind::Single => AlgebraTable::new_single(name, dim),
                        Kind::Double => AlgebraTable::new_double(name, dim),
                    });
                }
                let t = table.as_mut().unwrap();
                let side = match (head, t.kind) {
                    ("prod", Kind::Single) => Side::Left,
                    ("left", Kind::Double) => Side::Left,
                    ("right", Kind::Double) => Side::Right,
                    ("prod", Kind::Double) => {
                        return Err(err(lineno, "`prod` lines need kind single"))
                    }
                    _ => {
                        return Err(err(
                            lineno,
                            format!("`{head}` lines need kind double"),
                        ))
                    }
                };
                let Some((lhs, rhs)) = rest.split_once('=') else {
                    return Err(err(lineno, "missing `=` in product line"));
                };
                let idx: Vec<&str> = lhs.split_whitespace().collect();
                if idx.len() != 2 {
                    return Err(err(lineno, "expected two basis indices before `=`"));
                }
                let n = t.dim;
                let i = parse_index(idx[0], n, lineno)?;
                let j = parse_index(idx[1], n, lineno)?;
                for (c, k) in parse_terms(rhs, n, lineno)? {
                    t.set_product(side, i, j, k, c);
                }
            }
            other => return Err(err(lineno, format!("unknown directive `{other}`"))),
        }
    }
    if let Some(t) = table {
        return Ok(t);
    }
    // header-only file: a zero algebra
    match (name, kind, dim) {
        (Some(name), Some(kind), Some(dim)) => Ok(match kind {
            Kind::Single => AlgebraTable::new_single(&name, dim),
            Kind::Double => AlgebraTable::new_double(&name, dim),
        }),
        _ => Err(err(
            text.lines().count() + 1,
            "incomplete file: need algebra, kind, and dim lines",
        )),
    }
}

fn emit_side(out: &mut String, t: &AlgebraTable, side: Side, keyword: &str) {
    for i in 0..t.dim {
        for j in 0..t.dim {
            let p = t.basis_product(side, i, j);
            let terms: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}*e{}", c, k + 1))
                .collect();
            if !terms.is_empty() {
                out.push_str(&format!(
                    "{keyword} {} {} = {}\n",
                    i + 1,
                    j + 1,
                    terms.join(" + ")
                ));
            }
        }
    }
}

/// Emit the canonical text form: header, then nonzero product lines in
/// row-major basis order. parse(emit(A)) reproduces A's tensors exactly,
/// and emit is a fixed point of parse∘emit on its own output.
pub fn emit_algebra_file(t: &AlgebraTable) -> String {
    let name: String =
        t.name.chars().map(|c| if c.is_whitespace() { '-' } else { c }).collect();
    let mut out = format!(
        "algebra {}\nkind {}\ndim {}\n",
        name,
        match t.kind {
            Kind::Single => "single",
            Kind::Double => "double",
        },
        t.dim
    );
    match t.kind {
        Kind::Single => emit_side(&mut out, t, Side::Left, "prod"),
        Kind::Double => {
            emit_side(&mut out, t, Side::Left, "left");
            emit_side(&mut out, t, Side::Right, "right");
        }
    }
    out
}

/// Parse a comma-separated coordinate vector like `1,-1/2,0`.
pub fn parse_element(s: &str, dim: usize) -> Result<Vec<Q>, FormatError> {
    let coords: Vec<&str> = s.split(',').map(str::trim).collect();
    if coords.len() != dim {
        return Err(err(0, format!("expected {dim} coordinates, got {}", coords.len())));
    }
    coords.iter().map(|c| parse_rational(c, 0)).collect()
}
