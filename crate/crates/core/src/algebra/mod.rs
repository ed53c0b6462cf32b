//! Graded algebras of holomorphic forms given by structure constants.
//!
//! A [`FormAlgebra`] stores the graded dimensions `h[0..=d]` and, for each
//! available degree `i >= 1`, the multiplication `m_i: V ⊗ H^i → H^{i+1}`.
//! `m_0: V ⊗ H^0 → H^1` is the identification `v ⊗ 1 ↦ v` and is implicit.
//! Only the degree-one multiplications are stored: they are all the
//! complexes and the maps `ψ_n` need.

mod fixtures;
pub mod format;

use std::fmt;
use std::sync::OnceLock;

pub use fixtures::{fixture_abelian, fixture_ideal_quotient, fixture_product_of_curves, fixture_quotient};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, FieldScalar};

/// Dense tensor for `m_i`: entry `(v, a, c)` is the coefficient of `b_c` in
/// `m_i(e_v, b_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    q: usize,
    source: usize,
    target: usize,
    data: Vec<FieldScalar>,
}

impl StructureTensor {
    pub fn zeros(field: Field, q: usize, source: usize, target: usize) -> Self {
        StructureTensor { q, source, target, data: vec![field.zero(); q * source * target] }
    }

    pub fn new(q: usize, source: usize, target: usize, data: Vec<FieldScalar>) -> Result<Self> {
        if data.len() != q * source * target {
            return Err(Error::Malformed(format!(
                "structure tensor {q}x{source}x{target} needs {} entries, got {}",
                q * source * target,
                data.len()
            )));
        }
        Ok(StructureTensor { q, source, target, data })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.q, self.source, self.target)
    }

    /// `m(e_v, b_a)` as a coordinate vector in the target.
    pub fn image(&self, v: usize, a: usize) -> &[FieldScalar] {
        let start = (v * self.source + a) * self.target;
        &self.data[start..start + self.target]
    }

    pub(crate) fn set(&mut self, v: usize, a: usize, c: usize, x: FieldScalar) {
        self.data[(v * self.source + a) * self.target + c] = x;
    }

    fn entries(&self) -> impl Iterator<Item = &FieldScalar> {
        self.data.iter()
    }
}

/// First violated constraint found by [`FormAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UnitDegree {
        h0: usize,
    },
    Irregularity {
        h1: usize,
        q: usize,
    },
    /// `m_{i+1}(v, m_i(w, α)) + m_{i+1}(w, m_i(v, α))` has a nonzero
    /// coefficient at `component`.
    Anticommutativity {
        degree: usize,
        v: usize,
        w: usize,
        alpha: usize,
        component: usize,
        value: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitDegree { h0 } => write!(f, "h[0] = {h0}, expected 1"),
            Violation::Irregularity { h1, q } => write!(f, "h[1] = {h1} differs from q = {q}"),
            Violation::Anticommutativity { degree, v, w, alpha, component, value } => write!(
                f,
                "anticommutativity violated in degree {degree}: m(v{v}, m(v{w}, b{alpha})) + m(v{w}, m(v{v}, b{alpha})) has coefficient {value} at b{component}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
    /// Number of anticommutativity identities checked.
    pub identities_checked: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Matrix of `ψ_n: Λ^n V → H^n` in the lexicographic basis of `Λ^n V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiMap {
    pub degree: usize,
    pub matrix: ExactMatrix,
}

impl PsiMap {
    /// `ψ_n(x)` for an element of `Λ^n V`.
    pub fn apply(&self, x: &ExteriorElement) -> Result<Vec<FieldScalar>> {
        if x.degree() != self.degree {
            return Err(Error::Dimension(format!("ψ_{} applied to a degree-{} element", self.degree, x.degree())));
        }
        self.matrix.mul_vec(&x.to_coords())
    }
}

#[derive(Debug)]
pub struct FormAlgebra {
    d: usize,
    q: usize,
    h: Vec<usize>,
    field: Field,
    mults: Vec<StructureTensor>,
    validity: OnceLock<ValidationReport>,
}

impl Clone for FormAlgebra {
    fn clone(&self) -> Self {
        FormAlgebra {
            d: self.d,
            q: self.q,
            h: self.h.clone(),
            field: self.field,
            mults: self.mults.clone(),
            validity: self.validity.clone(),
        }
    }
}

impl PartialEq for FormAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
            && self.q == other.q
            && self.h == other.h
            && self.field == other.field
            && self.mults == other.mults
    }
}

impl Eq for FormAlgebra {}

impl FormAlgebra {
    /// Assembles an algebra. `mults[i - 1]` is `m_i`; fewer than `d - 1`
    /// tensors means the higher multiplications are unavailable. Structural
    /// problems (shape, field) are errors; algebraic ones are reported by
    /// [`FormAlgebra::validate`].
    pub fn new(d: usize, q: usize, h: Vec<usize>, field: Field, mults: Vec<StructureTensor>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Malformed("dimension d must be positive".into()));
        }
        if h.len() != d + 1 {
            return Err(Error::Malformed(format!("h has {} entries, expected d + 1 = {}", h.len(), d + 1)));
        }
        if mults.len() > d - 1 {
            return Err(Error::Malformed(format!("{} multiplication blocks for d = {d}", mults.len())));
        }
        for (idx, m) in mults.iter().enumerate() {
            let i = idx + 1;
            if m.shape() != (q, h[i], h[i + 1]) {
                return Err(Error::Malformed(format!(
                    "m_{i} has shape {:?}, expected {:?}",
                    m.shape(),
                    (q, h[i], h[i + 1])
                )));
            }
            if let Some(bad) = m.entries().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field, bad.field()));
            }
        }
        Ok(FormAlgebra { d, q, h, field, mults, validity: OnceLock::new() })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn irregularity(&self) -> usize {
        self.q
    }

    pub fn hodge(&self) -> &[usize] {
        &self.h
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Highest degree reachable by stored multiplications.
    pub fn top_degree(&self) -> usize {
        self.mults.len() + 1
    }

    /// `m_i` for `1 <= i < top_degree()`.
    pub fn mult(&self, i: usize) -> Option<&StructureTensor> {
        i.checked_sub(1).and_then(|j| self.mults.get(j))
    }

    /// `m_i(v, α)` for a vector `v ∈ V` and `α ∈ H^i`, both in coordinates.
    /// Degree 0 is the identification `H^0 ⊗ V = V`.
    pub fn multiply(&self, i: usize, v: &[FieldScalar], alpha: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
        if v.len() != self.q || alpha.len() != self.h[i.min(self.d)] {
            return Err(Error::Dimension(format!(
                "m_{i} applied to vectors of length {} and {}",
                v.len(),
                alpha.len()
            )));
        }
        if i == 0 {
            return Ok(v.iter().map(|x| x * &alpha[0]).collect());
        }
        let m = self.mult(i).ok_or(Error::Unavailable { degree: i + 1, top: self.top_degree() })?;
        let mut out = vec![self.field.zero(); self.h[i + 1]];
        for (c, vc) in v.iter().enumerate() {
            if vc.is_zero() {
                continue;
            }
            for (a, xa) in alpha.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                let coef = vc * xa;
                for (t, y) in m.image(c, a).iter().enumerate() {
                    if !y.is_zero() {
                        out[t] = &out[t] + &(&coef * y);
                    }
                }
            }
        }
        Ok(out)
    }

    fn unit(&self, len: usize, i: usize) -> Vec<FieldScalar> {
        let mut v = vec![self.field.zero(); len];
        v[i] = self.field.one();
        v
    }

    /// Checks `h[0] = 1`, `h[1] = q` and the exact anticommutativity identity
    /// `m_{i+1}(v, m_i(w, α)) = -m_{i+1}(w, m_i(v, α))` for every pair of
    /// basis vectors (including `v = w`) and basis `α` of `H^i`, in every
    /// degree where `m_{i+1}` is stored.
    pub fn validate(&self) -> ValidationReport {
        self.validity.get_or_init(|| self.compute_validation()).clone()
    }

    fn compute_validation(&self) -> ValidationReport {
        let mut checked = 0;
        let done = |violation, checked| ValidationReport { violation: Some(violation), identities_checked: checked };
        if self.h[0] != 1 {
            return done(Violation::UnitDegree { h0: self.h[0] }, 0);
        }
        if self.h[1] != self.q {
            return done(Violation::Irregularity { h1: self.h[1], q: self.q }, 0);
        }
        for i in 0..self.mults.len() {
            for v in 0..self.q {
                for w in v..self.q {
                    for alpha in 0..self.h[i] {
                        let a = self.unit(self.h[i], alpha);
                        let ev = self.unit(self.q, v);
                        let ew = self.unit(self.q, w);
                        let vw =
                            self.multiply(i + 1, &ev, &self.multiply(i, &ew, &a).expect("shapes")).expect("shapes");
                        let wv =
                            self.multiply(i + 1, &ew, &self.multiply(i, &ev, &a).expect("shapes")).expect("shapes");
                        checked += 1;
                        for (component, (x, y)) in vw.iter().zip(&wv).enumerate() {
                            let s = x + y;
                            if !s.is_zero() {
                                return done(
                                    Violation::Anticommutativity {
                                        degree: i,
                                        v,
                                        w,
                                        alpha,
                                        component,
                                        value: s.to_string(),
                                    },
                                    checked,
                                );
                            }
                        }
                    }
                }
            }
        }
        ValidationReport { violation: None, identities_checked: checked }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra(v.to_string())),
        }
    }

    /// `ψ_n` by iterated multiplication,
    /// `ψ_n(e_{i1} ∧ ... ∧ e_{in}) = m(e_{i1}, m(e_{i2}, ... m(e_{i(n-1)}, e_{in})))`.
    pub fn psi(&self, n: usize) -> Result<PsiMap> {
        if n == 0 || n > self.d {
            return Err(Error::OutOfRange {
                what: "ψ degree",
                detail: format!("need 1 <= n <= d = {}, got {n}", self.d),
            });
        }
        if n > self.top_degree() {
            return Err(Error::Unavailable { degree: n, top: self.top_degree() });
        }
        self.ensure_valid()?;
        let basis = Basis::exterior(self.q, n);
        let mut columns = Vec::with_capacity(basis.len());
        for key in basis.iter() {
            let last = key[n - 1];
            let mut alpha = self.unit(self.q, last);
            for (deg, &idx) in key[..n - 1].iter().rev().enumerate() {
                alpha = self.multiply(deg + 1, &self.unit(self.q, idx), &alpha)?;
            }
            columns.push(alpha);
        }
        let matrix = ExactMatrix::from_columns(self.field, self.h[n], &columns)?;
        Ok(PsiMap { degree: n, matrix })
    }

    /// The same algebra with structure constants reduced into `target`.
    pub fn reduce(&self, target: Field) -> Result<FormAlgebra> {
        let mults = self
            .mults
            .iter()
            .map(|m| {
                let data = m.data.iter().map(|x| x.reduce(target)).collect::<Result<Vec<_>>>()?;
                StructureTensor::new(m.q, m.source, m.target, data)
            })
            .collect::<Result<Vec<_>>>()?;
        FormAlgebra::new(self.d, self.q, self.h.clone(), target, mults)
    }
}
