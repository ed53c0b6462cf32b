//! Elements of exterior powers `Λ^n V` in the basis of sorted index tuples.

use std::collections::BTreeMap;
use std::fmt;

use crate::basis::{sort_with_sign, Basis};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, FieldScalar};

/// A homogeneous element of `Λ^n V`, `dim V = ambient`. Zero coefficients are
/// never stored, so structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    degree: usize,
    ambient: usize,
    field: Field,
    terms: BTreeMap<Vec<usize>, FieldScalar>,
}

impl ExteriorElement {
    pub fn zero(field: Field, ambient: usize, degree: usize) -> Self {
        ExteriorElement { degree, ambient, field, terms: BTreeMap::new() }
    }

    /// The scalar `c` in degree 0.
    pub fn scalar(ambient: usize, c: FieldScalar) -> Self {
        let mut e = Self::zero(c.field(), ambient, 0);
        e.insert(Vec::new(), c);
        e
    }

    /// `e_{i1} ∧ ... ∧ e_{in}` for an arbitrary index word (sign from sorting;
    /// zero on a repeated index).
    pub fn monomial(field: Field, ambient: usize, word: &[usize]) -> Result<Self> {
        if let Some(&i) = word.iter().find(|&&i| i >= ambient) {
            return Err(Error::OutOfRange { what: "basis index", detail: format!("{i} >= {ambient}") });
        }
        let mut e = Self::zero(field, ambient, word.len());
        if let Some((key, odd)) = sort_with_sign(word) {
            e.insert(key, if odd { -field.one() } else { field.one() });
        }
        Ok(e)
    }

    /// A degree-1 element from its coordinates.
    pub fn vector(field: Field, coords: &[FieldScalar]) -> Result<Self> {
        Self::from_coords(field, coords.len(), 1, coords)
    }

    /// Element with the given coordinates in the lexicographic basis.
    pub fn from_coords(field: Field, ambient: usize, degree: usize, coords: &[FieldScalar]) -> Result<Self> {
        let basis = Basis::exterior(ambient, degree);
        if coords.len() != basis.len() {
            return Err(Error::Dimension(format!(
                "Λ^{degree} of a {ambient}-dimensional space has dimension {}, got {} coordinates",
                basis.len(),
                coords.len()
            )));
        }
        let mut e = Self::zero(field, ambient, degree);
        for (key, c) in basis.iter().zip(coords) {
            field.check(c.field())?;
            e.insert(key.to_vec(), c.clone());
        }
        Ok(e)
    }

    pub fn to_coords(&self) -> Vec<FieldScalar> {
        let basis = Basis::exterior(self.ambient, self.degree);
        let mut out = vec![self.field.zero(); basis.len()];
        for (key, c) in &self.terms {
            out[basis.position(key).expect("stored key is a basis tuple")] = c.clone();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &FieldScalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, key: &[usize]) -> FieldScalar {
        self.terms.get(key).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn insert(&mut self, key: Vec<usize>, c: FieldScalar) {
        debug_assert_eq!(key.len(), self.degree);
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        self.field.check(other.field)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::Dimension(format!("adding degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldScalar) -> Result<Self> {
        self.field.check(c.field())?;
        let mut out = Self::zero(self.field, self.ambient, self.degree);
        for (k, x) in &self.terms {
            out.insert(k.clone(), x * c);
        }
        Ok(out)
    }

    /// Exterior product. Terms sharing an index vanish; the sign is the
    /// parity of the permutation sorting the concatenated index word.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.ambient, self.degree + other.degree);
        let mut word = Vec::with_capacity(out.degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                word.clear();
                word.extend_from_slice(ka);
                word.extend_from_slice(kb);
                if let Some((key, odd)) = sort_with_sign(&word) {
                    let c = ca * cb;
                    out.insert(key, if odd { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Wedge of a list of elements, left to right; the empty product is 1.
    pub fn wedge_all(field: Field, ambient: usize, factors: &[ExteriorElement]) -> Result<Self> {
        factors.iter().try_fold(Self::scalar(ambient, field.one()), |acc, f| acc.wedge(f))
    }

    /// Nonzero `ω ∈ Λ^n V` is decomposable iff its annihilator
    /// `{v : v ∧ ω = 0}` has dimension exactly `n`.
    pub fn is_decomposable(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree == 0 {
            return true;
        }
        let columns: Vec<Vec<FieldScalar>> = (0..self.ambient)
            .map(|i| {
                let e = Self::monomial(self.field, self.ambient, &[i]).expect("index in range");
                e.wedge(self).expect("compatible").to_coords()
            })
            .collect();
        let len = columns[0].len();
        let m = ExactMatrix::from_columns(self.field, len, &columns).expect("uniform columns");
        self.ambient - m.rank() == self.degree
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx: Vec<String> = k.iter().map(|i| format!("e{i}")).collect();
                if k.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", idx.join("^"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Field = Field::Rational;

    fn e(q: usize, word: &[usize]) -> ExteriorElement {
        ExteriorElement::monomial(F, q, word).unwrap()
    }

    #[test]
    fn repeated_factor_vanishes() {
        assert!(e(4, &[0]).wedge(&e(4, &[0])).unwrap().is_zero());
    }

    #[test]
    fn antisymmetry() {
        let ab = e(4, &[0]).wedge(&e(4, &[1])).unwrap();
        let ba = e(4, &[1]).wedge(&e(4, &[0])).unwrap();
        assert_eq!(ab, ba.scale(&F.from_i64(-1)).unwrap());
    }

    #[test]
    fn disjoint_sorted_blocks() {
        let w = e(4, &[0, 1]).wedge(&e(4, &[2, 3])).unwrap();
        assert_eq!(w.coefficient(&[0, 1, 2, 3]), F.one());
        assert_eq!(w.terms().count(), 1);
    }

    #[test]
    fn overflowing_degree_is_zero() {
        let w = e(3, &[0, 1]).wedge(&e(3, &[1, 2])).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn compatibility_errors() {
        assert!(matches!(e(3, &[0]).wedge(&e(4, &[0])), Err(Error::AmbientMismatch(3, 4))));
        let p = ExteriorElement::monomial(Field::Prime(5), 3, &[0]).unwrap();
        assert!(matches!(e(3, &[1]).wedge(&p), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn coordinates_round_trip() {
        let x = e(4, &[2, 0]).try_add(&e(4, &[1, 3])).unwrap();
        let c = x.to_coords();
        assert_eq!(c.len(), 6);
        assert_eq!(ExteriorElement::from_coords(F, 4, 2, &c).unwrap(), x);
    }

    #[test]
    fn decomposability() {
        assert!(e(4, &[0, 1]).is_decomposable());
        let v = e(4, &[0, 1]).try_add(&e(4, &[2, 3])).unwrap();
        assert!(!v.is_decomposable());
        let f = e(4, &[0, 1]).try_add(&e(4, &[0, 2])).unwrap();
        assert!(f.is_decomposable());
    }
}
