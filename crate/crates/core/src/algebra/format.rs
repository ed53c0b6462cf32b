//! Line-oriented text format for form algebras.
//!
//! ```text
//! formalgebra v1
//! d 2
//! q 4
//! h 1 4 4
//! mult 1
//! v0 * b2 -> 1*b0
//! v2 * b0 -> -1*b0
//! ```
//!
//! `mult i` opens the block for `m_i: V ⊗ H^i → H^{i+1}`; blocks appear in
//! order starting from 1, and an omitted tail means those multiplications
//! are unavailable. Entry lines give `m_i(e_j, b_a)` as a sum of
//! `coeff*b<c>` terms with exact rational coefficients `p/q`. Blank lines and
//! `#` comments are ignored; anything else is rejected.

use std::fmt::Write as _;

use super::{FormAlgebra, StructureTensor};
use crate::error::{Error, Result};
use crate::scalar::{Field, FieldScalar};

pub const HEADER: &str = "formalgebra v1";

/// Canonical serialization: zero entries omitted, entries sorted by
/// `(j, a)`, terms by `c`, coefficients in lowest terms.
pub fn serialize(a: &FormAlgebra) -> Result<String> {
    if a.field() != Field::Rational {
        return Err(Error::FieldMismatch(Field::Rational, a.field()));
    }
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "d {}", a.dim()).unwrap();
    writeln!(out, "q {}", a.irregularity()).unwrap();
    let h: Vec<String> = a.hodge().iter().map(ToString::to_string).collect();
    writeln!(out, "h {}", h.join(" ")).unwrap();
    for (idx, m) in a.mults.iter().enumerate() {
        writeln!(out, "mult {}", idx + 1).unwrap();
        let (q, src, _) = m.shape();
        for j in 0..q {
            for b in 0..src {
                let terms: Vec<String> = m
                    .image(j, b)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| format!("{x}*b{c}"))
                    .collect();
                if !terms.is_empty() {
                    writeln!(out, "v{j} * b{b} -> {}", terms.join(" + ")).unwrap();
                }
            }
        }
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<FormAlgebra> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: String| Error::Parse { line, msg };

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => return Err(err(n, format!("expected header `{HEADER}`, found `{other}`"))),
        None => return Err(err(0, "empty input".into())),
    }

    let mut d: Option<usize> = None;
    let mut q: Option<usize> = None;
    let mut h: Option<Vec<usize>> = None;
    let mut mults: Vec<(StructureTensor, Vec<bool>)> = Vec::new();

    for (n, line) in lines {
        let (word, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(w, r)| (w, r.trim()));
        match word {
            "d" | "q" => {
                if !mults.is_empty() {
                    return Err(err(n, format!("`{word}` after a mult block")));
                }
                let v: usize = rest.parse().map_err(|_| err(n, format!("bad integer `{rest}`")))?;
                let slot = if word == "d" { &mut d } else { &mut q };
                if slot.replace(v).is_some() {
                    return Err(err(n, format!("duplicate `{word}`")));
                }
            }
            "h" => {
                if !mults.is_empty() || h.is_some() {
                    return Err(err(n, "misplaced or duplicate `h`".into()));
                }
                let list = rest
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| err(n, format!("bad integer `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                h = Some(list);
            }
            "mult" => {
                let (Some(d), Some(q), Some(h)) = (d, q, h.as_ref()) else {
                    return Err(err(n, "`mult` before `d`, `q` and `h`".into()));
                };
                let i: usize = rest.parse().map_err(|_| err(n, format!("bad integer `{rest}`")))?;
                if i != mults.len() + 1 {
                    return Err(err(n, format!("expected `mult {}`, found `mult {i}`", mults.len() + 1)));
                }
                if i + 1 > d || i + 1 >= h.len() {
                    return Err(err(n, format!("`mult {i}` exceeds d = {d}")));
                }
                let (src, tgt) = (h[i], h[i + 1]);
                mults.push((StructureTensor::zeros(Field::Rational, q, src, tgt), vec![false; q * src]));
            }
            w if w.starts_with('v') => {
                let Some((tensor, seen)) = mults.last_mut() else {
                    return Err(err(n, "entry outside a mult block".into()));
                };
                let (j, b, terms) = parse_entry(line).map_err(|m| err(n, m))?;
                let (q, src, tgt) = tensor.shape();
                if j >= q || b >= src {
                    return Err(err(n, format!("index out of range: v{j} * b{b} (q = {q}, source dim {src})")));
                }
                if std::mem::replace(&mut seen[j * src + b], true) {
                    return Err(err(n, format!("duplicate entry for v{j} * b{b}")));
                }
                let mut row = vec![Field::Rational.zero(); tgt];
                for (c, x) in terms {
                    if c >= tgt {
                        return Err(err(n, format!("b{c} out of range (target dim {tgt})")));
                    }
                    row[c] = &row[c] + &x;
                }
                for (c, x) in row.into_iter().enumerate() {
                    tensor.set(j, b, c, x);
                }
            }
            other => return Err(err(n, format!("unknown directive `{other}`"))),
        }
    }

    let d = d.ok_or_else(|| err(0, "missing `d`".into()))?;
    let q = q.ok_or_else(|| err(0, "missing `q`".into()))?;
    let h = h.ok_or_else(|| err(0, "missing `h`".into()))?;
    FormAlgebra::new(d, q, h, Field::Rational, mults.into_iter().map(|(t, _)| t).collect())
}

fn parse_index(token: &str, prefix: char) -> std::result::Result<usize, String> {
    token
        .trim()
        .strip_prefix(prefix)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| format!("expected `{prefix}<int>`, found `{}`", token.trim()))
}

type Entry = (usize, usize, Vec<(usize, FieldScalar)>);

fn parse_entry(line: &str) -> std::result::Result<Entry, String> {
    let (lhs, rhs) = line.split_once("->").ok_or("missing `->`")?;
    let (v, b) = lhs.split_once('*').ok_or("expected `v<j> * b<a>`")?;
    let j = parse_index(v, 'v')?;
    let a = parse_index(b, 'b')?;
    let mut terms = Vec::new();
    for term in rhs.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err("empty term".into());
        }
        let (coef, basis) = match term.rsplit_once('*') {
            Some((c, b)) => {
                (FieldScalar::parse_rational(c).ok_or_else(|| format!("bad coefficient `{}`", c.trim()))?, b)
            }
            None => match term.strip_prefix('-') {
                Some(b) => (Field::Rational.from_i64(-1), b),
                None => (Field::Rational.one(), term),
            },
        };
        terms.push((parse_index(basis, 'b')?, coef));
    }
    Ok((j, a, terms))
}
