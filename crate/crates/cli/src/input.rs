//! Reading algebra files, subspace basis files and bivector expressions.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use grassbgg::algebra::format;
use grassbgg::{ExactMatrix, ExteriorElement, Field, FieldScalar, FormAlgebra};

/// Reads a file, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn load_algebra(path: &Path) -> Result<FormAlgebra> {
    let text = read_text(path)?;
    format::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// One row per basis vector of `W`, `q` whitespace-separated rationals per
/// row; blank lines and `#` comments are skipped.
pub fn parse_basis(text: &str, q: usize) -> Result<ExactMatrix> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| FieldScalar::parse_rational(t).with_context(|| format!("line {}: bad number `{t}`", n + 1)))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != q {
            bail!("line {}: expected {q} entries, found {}", n + 1, row.len());
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("basis file has no rows");
    }
    Ok(ExactMatrix::from_rows(Field::Rational, rows)?)
}

/// Parses sums like `e0^e1 + e2^e3` or `2*e0^e1 - 1/3*e1^e4` into an
/// element of `Λ^2 V`, `dim V = q`.
pub fn parse_bivector(expr: &str, q: usize) -> Result<ExteriorElement> {
    let f = Field::Rational;
    let mut acc = ExteriorElement::zero(f, q, 2);
    let normalized = expr.replace('-', "+-");
    for term in normalized.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (neg, term) = match term.strip_prefix('-') {
            Some(t) => (true, t.trim()),
            None => (false, term),
        };
        let (coef, word) = match term.rsplit_once('*') {
            Some((c, w)) => (FieldScalar::parse_rational(c).with_context(|| format!("bad coefficient `{c}`"))?, w),
            None => (f.one(), term),
        };
        let idx = word
            .split('^')
            .map(|e| {
                e.trim()
                    .strip_prefix('e')
                    .and_then(|i| i.parse::<usize>().ok())
                    .with_context(|| format!("bad factor `{e}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        if idx.len() != 2 {
            bail!("`{term}` is not a product of two basis vectors");
        }
        let coef = if neg { -coef } else { coef };
        acc = acc.try_add(&ExteriorElement::monomial(f, q, &idx)?.scale(&coef)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivectors() {
        let f = Field::Rational;
        let v = parse_bivector("e0^e1 - 2*e3^e2", 4).unwrap();
        assert_eq!(v.coefficient(&[0, 1]), f.one());
        assert_eq!(v.coefficient(&[2, 3]), f.from_i64(2));
        assert!(parse_bivector("e0^e1^e2", 4).is_err());
        assert!(parse_bivector("e0^e9", 4).is_err());
    }

    #[test]
    fn basis_files() {
        let m = parse_basis("# W\n1 0 0\n0 1/2 -1\n", 3).unwrap();
        assert_eq!(m.rows(), 2);
        assert!(parse_basis("1 0\n", 3).is_err());
    }
}
