//! Elements of symmetric powers `Σ^m W` in the monomial basis.
//!
//! Monomials are sorted index words with no multinomial normalization: the
//! product `w_0 · w_1` is the basis monomial `[0, 1]` with coefficient 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricElement {
    degree: usize,
    ambient: usize,
    field: Field,
    terms: BTreeMap<Vec<usize>, FieldScalar>,
}

impl SymmetricElement {
    pub fn zero(field: Field, ambient: usize, degree: usize) -> Self {
        SymmetricElement { degree, ambient, field, terms: BTreeMap::new() }
    }

    /// The monomial `w_{i1} ... w_{im}` with coefficient 1, any index order.
    pub fn monomial(field: Field, ambient: usize, word: &[usize]) -> Result<Self> {
        if let Some(&i) = word.iter().find(|&&i| i >= ambient) {
            return Err(Error::OutOfRange { what: "basis index", detail: format!("{i} >= {ambient}") });
        }
        let mut key = word.to_vec();
        key.sort_unstable();
        let mut s = Self::zero(field, ambient, word.len());
        s.insert(key, field.one());
        Ok(s)
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

    pub fn coefficient(&self, key: &[usize]) -> FieldScalar {
        self.terms.get(key).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &FieldScalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn insert(&mut self, key: Vec<usize>, c: FieldScalar) {
        let next = &self.coefficient(&key) + &c;
        if next.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, next);
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

    /// Commutative product: monomial keys merge as multiset unions.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.ambient, self.degree + other.degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut key: Vec<usize> = ka.iter().chain(kb).copied().collect();
                key.sort_unstable();
                out.insert(key, ca * cb);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SymmetricElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx: Vec<String> = k.iter().map(|i| format!("w{i}")).collect();
                format!("{c}*{}", idx.join("."))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
