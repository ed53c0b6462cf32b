//! Synthetic form algebras with known `ker ψ_2`.

use super::{FormAlgebra, StructureTensor};
use crate::basis::{binomial, sort_with_sign, Basis};
use crate::error::{Error, Result};
use crate::exterior::ExteriorElement;
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, FieldScalar};

const F: Field = Field::Rational;

/// The exterior algebra `Λ^• V`, `dim V = q`, as the algebra of a
/// `q`-dimensional torus: `d = q`, `h[n] = C(q, n)`, every `ψ_n` the identity.
pub fn fixture_abelian(q: usize) -> Result<FormAlgebra> {
    if q == 0 {
        return Err(Error::OutOfRange { what: "irregularity", detail: "q must be positive".into() });
    }
    let h: Vec<usize> = (0..=q).map(|n| binomial(q, n)).collect();
    let mut mults = Vec::new();
    for i in 1..q {
        let src = Basis::exterior(q, i);
        let tgt = Basis::exterior(q, i + 1);
        let mut m = StructureTensor::zeros(F, q, src.len(), tgt.len());
        for v in 0..q {
            for (a, key) in src.iter().enumerate() {
                let word: Vec<usize> = std::iter::once(v).chain(key.iter().copied()).collect();
                if let Some((sorted, odd)) = sort_with_sign(&word) {
                    let c = tgt.position(&sorted).expect("sorted tuple");
                    m.set(v, a, c, F.from_i64(if odd { -1 } else { 1 }));
                }
            }
        }
        mults.push(m);
    }
    FormAlgebra::new(q, q, h, F, mults)
}

/// Model of a product of curves of genera `g1`, `g2`: `V = V1 ⊕ V2`,
/// `H^2 = V1 ⊗ V2` with basis `(a, b)` ordered lexicographically, and
/// `ψ_2(v ∧ w)` the `V1 ⊗ V2` component of `v ∧ w`. Hence
/// `ker ψ_2 = Λ^2 V1 ⊕ Λ^2 V2`.
pub fn fixture_product_of_curves(g1: usize, g2: usize) -> Result<FormAlgebra> {
    if g1 == 0 || g2 == 0 {
        return Err(Error::OutOfRange { what: "genus", detail: format!("need g1, g2 >= 1, got ({g1}, {g2})") });
    }
    let q = g1 + g2;
    let mut m = StructureTensor::zeros(F, q, q, g1 * g2);
    for v in 0..q {
        for a in 0..q {
            match (v < g1, a < g1) {
                (true, false) => m.set(v, a, v * g2 + (a - g1), F.one()),
                (false, true) => m.set(v, a, a * g2 + (v - g1), -F.one()),
                _ => {}
            }
        }
    }
    FormAlgebra::new(2, q, vec![1, q, g1 * g2], F, vec![m])
}

/// `H^2 = Λ^2 V / K` with `m_1` the projection, so `ker ψ_2 = K` exactly.
/// Only `m_1` is stored; higher `h[p]` are the dimensions of the
/// corresponding ideal quotient, but their multiplications are absent.
pub fn fixture_quotient(q: usize, d: usize, kernel: &[ExteriorElement]) -> Result<FormAlgebra> {
    build_quotient(q, d, kernel, 2)
}

/// `Λ^• V / (K)` truncated at degree `d`, with all multiplications stored.
/// Its `ker ψ_2` is `K` and `ψ_n` vanishes on the degree-`n` part of the
/// ideal generated by `K`.
pub fn fixture_ideal_quotient(q: usize, d: usize, kernel: &[ExteriorElement]) -> Result<FormAlgebra> {
    build_quotient(q, d, kernel, d)
}

/// Projection `Λ^p V → Λ^p V / I_p` onto the span of the non-pivot basis
/// tuples of the reduced echelon form of `I_p`.
struct QuotientDegree {
    images: Vec<Vec<FieldScalar>>,
    /// Basis tuples (by index) spanning the complement, in slot order.
    complement: Vec<usize>,
}

fn quotient_degree(q: usize, p: usize, kernel: &[ExteriorElement]) -> Result<QuotientDegree> {
    let basis = Basis::exterior(q, p);
    let rows: Vec<Vec<FieldScalar>> = if p < 2 {
        Vec::new()
    } else {
        let tails = Basis::exterior(q, p - 2);
        let mut rows = Vec::new();
        for k in kernel {
            for t in tails.iter() {
                let e = ExteriorElement::monomial(F, q, t)?;
                rows.push(k.wedge(&e)?.to_coords());
            }
        }
        rows
    };
    let (rref, pivots) = if rows.is_empty() {
        (ExactMatrix::zeros(0, basis.len(), F), Vec::new())
    } else {
        ExactMatrix::from_rows(F, rows)?.rref()
    };
    let mut slot = vec![None; basis.len()];
    let mut next = 0;
    for (c, s) in slot.iter_mut().enumerate() {
        if !pivots.contains(&c) {
            *s = Some(next);
            next += 1;
        }
    }
    let dim = next;
    let complement = (0..basis.len()).filter(|&c| slot[c].is_some()).collect();
    let images = (0..basis.len())
        .map(|c| {
            let mut v = vec![F.zero(); dim];
            match slot[c] {
                Some(s) => v[s] = F.one(),
                None => {
                    let row = pivots.iter().position(|&pc| pc == c).expect("pivot column");
                    for (f, s) in slot.iter().enumerate() {
                        if let Some(s) = s {
                            v[*s] = -rref.get(row, f);
                        }
                    }
                }
            }
            v
        })
        .collect();
    Ok(QuotientDegree { images, complement })
}

fn build_quotient(q: usize, d: usize, kernel: &[ExteriorElement], top: usize) -> Result<FormAlgebra> {
    if d < 2 {
        return Err(Error::OutOfRange { what: "dimension", detail: format!("quotient fixtures need d >= 2, got {d}") });
    }
    for k in kernel {
        if k.degree() != 2 || k.ambient() != q {
            return Err(Error::Dimension(format!("kernel generators must be bivectors on {q} letters")));
        }
        F.check(k.field())?;
    }
    if !kernel.is_empty() {
        let coords: Vec<Vec<FieldScalar>> = kernel.iter().map(ExteriorElement::to_coords).collect();
        if ExactMatrix::from_rows(F, coords)?.rank() != kernel.len() {
            return Err(Error::DependentBasis);
        }
    }
    let degrees = (0..=d).map(|p| quotient_degree(q, p, kernel)).collect::<Result<Vec<_>>>()?;
    let h: Vec<usize> = degrees.iter().map(|g| g.complement.len()).collect();
    let mut mults = Vec::new();
    for i in 1..top.min(d) {
        let src = Basis::exterior(q, i);
        let tgt = Basis::exterior(q, i + 1);
        let mut m = StructureTensor::zeros(F, q, h[i], h[i + 1]);
        for v in 0..q {
            for (a, &c) in degrees[i].complement.iter().enumerate() {
                let word: Vec<usize> = std::iter::once(v).chain(src.get(c).iter().copied()).collect();
                if let Some((sorted, odd)) = sort_with_sign(&word) {
                    let image = &degrees[i + 1].images[tgt.position(&sorted).expect("sorted tuple")];
                    for (t, x) in image.iter().enumerate() {
                        m.set(v, a, t, if odd { -x } else { x.clone() });
                    }
                }
            }
        }
        mults.push(m);
    }
    FormAlgebra::new(d, q, h, F, mults)
}
