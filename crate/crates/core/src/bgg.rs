//! The complexes `C_{r,n,W}` at a point `W` of the Grassmannian:
//!
//! `Σ^r W → Σ^{r-1} W ⊗ H^1 → ... → Σ^{r-n} W ⊗ H^n`
//!
//! with `μ_i((w_1 ... w_{r-i}) ⊗ α) = Σ_j (w_1 ... ŵ_j ... w_{r-i}) ⊗ (w_j ∧ α)`.
//!
//! Bases: `Σ^m W` uses sorted index words over the rows of the basis matrix
//! of `W`, and the tensor product is ordered monomial-major.

use rayon::prelude::*;

use crate::algebra::FormAlgebra;
use crate::basis::{binomial, Basis};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::random::{derive_seed, random_subspace_in};
use crate::scalar::FieldScalar;

fn check_subspace(a: &FormAlgebra, w: &ExactMatrix) -> Result<()> {
    a.field().check(w.field())?;
    if w.cols() != a.irregularity() {
        return Err(Error::Dimension(format!("W has {} columns, expected q = {}", w.cols(), a.irregularity())));
    }
    let rank = w.rank_with_bound(w.rows());
    if w.rows() == 0 || rank != w.rows() {
        return Err(Error::RankDeficient { rank, expected: w.rows() });
    }
    Ok(())
}

/// Matrix of `μ_i` on `Σ^{r-i} W ⊗ H^i`.
pub fn build_mu(a: &FormAlgebra, w: &ExactMatrix, r: usize, i: usize) -> Result<ExactMatrix> {
    check_subspace(a, w)?;
    a.ensure_valid()?;
    let n = r.min(a.dim());
    if i >= n {
        return Err(Error::OutOfRange { what: "μ index", detail: format!("need i < min(r, d) = {n}, got {i}") });
    }
    if i >= a.top_degree() {
        return Err(Error::Unavailable { degree: i + 1, top: a.top_degree() });
    }
    Ok(mu_unchecked(a, w, r, i))
}

fn mu_unchecked(a: &FormAlgebra, w: &ExactMatrix, r: usize, i: usize) -> ExactMatrix {
    let field = a.field();
    let k = w.rows();
    let h = a.hodge();
    let (hs, ht) = (h[i], h[i + 1]);
    let source = Basis::symmetric(k, r - i);
    let target = Basis::symmetric(k, r - i - 1);

    // images[l][a] = m_i(w_l, b_a)
    let images: Vec<Vec<Vec<FieldScalar>>> = (0..k)
        .map(|l| {
            (0..hs)
                .map(|b| {
                    let mut alpha = vec![field.zero(); hs];
                    alpha[b] = field.one();
                    a.multiply(i, w.row(l), &alpha).expect("shapes checked")
                })
                .collect()
        })
        .collect();

    let mut m = ExactMatrix::zeros(target.len() * ht, source.len() * hs, field);
    let mut reduced = Vec::with_capacity(r);
    for (s, mono) in source.iter().enumerate() {
        let mut j = 0;
        while j < mono.len() {
            let l = mono[j];
            let mult = mono[j..].iter().take_while(|&&x| x == l).count();
            reduced.clear();
            reduced.extend_from_slice(&mono[..j]);
            reduced.extend_from_slice(&mono[j + 1..]);
            let t = target.position(&reduced).expect("monomial with one factor removed");
            let coef = field.from_i64(mult as i64);
            for (b, image) in images[l].iter().enumerate() {
                for (c, x) in image.iter().enumerate() {
                    if !x.is_zero() {
                        m.add_to(t * ht + c, s * hs + b, &(&coef * x));
                    }
                }
            }
            j += mult;
        }
    }
    m
}

/// The realized complex at one point `W`.
#[derive(Clone, Debug)]
pub struct ComplexInstance {
    pub r: usize,
    /// Length actually built: `min(r, d)` unless the algebra lacks the
    /// needed multiplications.
    pub n: usize,
    /// `true` when `n < min(r, d)` because of missing multiplications.
    pub truncated: bool,
    pub w: ExactMatrix,
    pub mus: Vec<ExactMatrix>,
}

impl ComplexInstance {
    /// `dim Σ^{r-i} W ⊗ H^i` for `i = 0..=n`.
    pub fn term_dims(&self) -> Vec<usize> {
        let k = self.w.rows();
        let mut dims: Vec<usize> = self.mus.iter().map(ExactMatrix::cols).collect();
        dims.push(self.mus.last().map_or(binomial(k + self.r - 1, self.r), ExactMatrix::rows));
        dims
    }
}

/// Assembles `μ_0, ..., μ_{n-1}` and checks `μ_{i+1} μ_i = 0`.
pub fn build_complex(a: &FormAlgebra, w: &ExactMatrix, r: usize) -> Result<ComplexInstance> {
    if r == 0 {
        return Err(Error::OutOfRange { what: "r", detail: "r must be positive".into() });
    }
    check_subspace(a, w)?;
    a.ensure_valid()?;
    let full = r.min(a.dim());
    let n = full.min(a.top_degree());
    let mus: Vec<ExactMatrix> = (0..n).map(|i| mu_unchecked(a, w, r, i)).collect();
    for (i, pair) in mus.windows(2).enumerate() {
        if !pair[1].mul(&pair[0])?.is_zero() {
            return Err(Error::Internal(format!(
                "μ_{} μ_{i} != 0 on a validated algebra (r = {r}, dim W = {})",
                i + 1,
                w.rows()
            )));
        }
    }
    Ok(ComplexInstance { r, n, truncated: n < full, w: w.clone(), mus })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub ranks: Vec<usize>,
    pub injective_at_0: bool,
    /// Exactness at `Σ^{r-i} W ⊗ H^i` for `i = 1..n-1`.
    pub exact_middle_degrees: Vec<bool>,
    /// Dimension of the cokernel of the last map.
    pub coker_dim: usize,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.injective_at_0 && self.exact_middle_degrees.iter().all(|&b| b)
    }
}

pub fn exactness_at(c: &ComplexInstance) -> ExactnessReport {
    let mut ranks: Vec<usize> = Vec::with_capacity(c.mus.len());
    for (i, m) in c.mus.iter().enumerate() {
        // im μ_{i-1} ⊆ ker μ_i bounds the rank from above
        let upper = match i {
            0 => m.rows().min(m.cols()),
            _ => m.rows().min(m.cols() - ranks[i - 1]),
        };
        ranks.push(m.rank_with_bound(upper));
    }
    let injective_at_0 = c.mus.first().is_none_or(|m| ranks[0] == m.cols());
    let exact_middle_degrees = (1..c.mus.len()).map(|i| ranks[i] + ranks[i - 1] == c.mus[i].cols()).collect();
    let coker_dim = c.mus.last().map_or(0, |m| m.rows() - ranks[ranks.len() - 1]);
    ExactnessReport { ranks, injective_at_0, exact_middle_degrees, coker_dim }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub dim_w: usize,
    pub r: usize,
    pub n_exact: usize,
    pub n_total: usize,
    /// Smallest failing sample index and its subspace.
    pub first_failure: Option<(usize, ExactMatrix)>,
    /// Cokernel dimension of each sample, by sample index.
    pub coker_dims: Vec<usize>,
}

/// Samples `W ∈ G_{2k}` and checks exactness of `C_{r,W}` at each sample.
pub fn generic_exactness_sample(
    a: &FormAlgebra,
    k: usize,
    r: usize,
    samples: usize,
    seed: u64,
) -> Result<SampleReport> {
    sample_exactness(a, 2 * k, r, samples, seed)
}

/// Same as [`generic_exactness_sample`] for subspaces of any dimension.
/// Sample `i` uses the subspace seeded by `derive_seed(seed, i)`, so tallies
/// do not depend on evaluation order.
pub fn sample_exactness(a: &FormAlgebra, dim_w: usize, r: usize, samples: usize, seed: u64) -> Result<SampleReport> {
    if dim_w == 0 || dim_w > a.irregularity() {
        return Err(Error::OutOfRange {
            what: "subspace dimension",
            detail: format!("need 1 <= dim W <= q = {}, got {dim_w}", a.irregularity()),
        });
    }
    a.ensure_valid()?;
    let outcomes = (0..samples)
        .into_par_iter()
        .map(|i| {
            let w = random_subspace_in(a.field(), a.irregularity(), dim_w, derive_seed(seed, i as u64))?;
            let c = build_complex(a, &w, r)?;
            Ok((exactness_at(&c), w))
        })
        .collect::<Result<Vec<_>>>()?;
    let n_exact = outcomes.iter().filter(|(rep, _)| rep.is_exact()).count();
    let first_failure =
        outcomes.iter().enumerate().find(|(_, (rep, _))| !rep.is_exact()).map(|(i, (_, w))| (i, w.clone()));
    let coker_dims = outcomes.iter().map(|(rep, _)| rep.coker_dim).collect();
    Ok(SampleReport { dim_w, r, n_exact, n_total: samples, first_failure, coker_dims })
}

/// Compares `C_{r,<w>}` with the wedge-by-`w` complex
/// `H^0 → H^1 → ... → H^n`, `α ↦ w ∧ α`: true iff every map has the same
/// kernel and image as its counterpart. They differ by the scalars `r - i`
/// on the one-dimensional symmetric factors.
pub fn derivative_complex_check(a: &FormAlgebra, w: &[FieldScalar], r: usize) -> Result<bool> {
    if w.iter().all(FieldScalar::is_zero) {
        return Err(Error::ZeroVector);
    }
    let wm = ExactMatrix::from_rows(a.field(), vec![w.to_vec()])?;
    let c = build_complex(a, &wm, r)?;
    let h = a.hodge();
    for (i, mu) in c.mus.iter().enumerate() {
        let columns = (0..h[i])
            .map(|b| {
                let mut alpha = vec![a.field().zero(); h[i]];
                alpha[b] = a.field().one();
                a.multiply(i, w, &alpha)
            })
            .collect::<Result<Vec<_>>>()?;
        let direct = ExactMatrix::from_columns(a.field(), h[i + 1], &columns)?;
        if mu.kernel() != direct.kernel() || mu.column_space() != direct.column_space() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{fixture_abelian, fixture_product_of_curves, fixture_quotient};
    use crate::exterior::ExteriorElement;
    use crate::random::random_subspace;
    use crate::scalar::Field;

    const F: Field = Field::Rational;

    fn coordinate_plane(q: usize, idx: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(idx.len(), q, F, |i, j| if idx[i] == j { F.one() } else { F.zero() })
    }

    #[test]
    fn mu0_formula_for_r2() {
        let a = fixture_abelian(4).unwrap();
        let w = random_subspace(4, 2, 3).unwrap();
        let mu0 = build_mu(&a, &w, 2, 0).unwrap();
        // source Σ²W basis: w0², w0w1, w1²; target W ⊗ V ordered (w_l, e_c)
        let col = |s: usize| mu0.column(s);
        let expect = |pairs: &[(usize, usize, i64)]| {
            let mut v = vec![F.zero(); 8];
            for &(l, row, c) in pairs {
                for j in 0..4 {
                    let x = &F.from_i64(c) * w.get(row, j);
                    v[l * 4 + j] = &v[l * 4 + j] + &x;
                }
            }
            v
        };
        // μ0(w0 w1) = w0 ⊗ w1 + w1 ⊗ w0
        assert_eq!(col(1), expect(&[(0, 1, 1), (1, 0, 1)]));
        // μ0(w0²) = 2 w0 ⊗ w0
        assert_eq!(col(0), expect(&[(0, 0, 2)]));
    }

    #[test]
    fn mu1_on_coordinate_plane() {
        let a = fixture_abelian(4).unwrap();
        let w = coordinate_plane(4, &[0, 1]);
        let mu1 = build_mu(&a, &w, 2, 1).unwrap();
        // source W ⊗ V: (w0, e1) has index 1; e0∧e1 is basis 0 of Λ²
        let col = mu1.column(1);
        assert_eq!(col[0], F.one());
        assert!(col[1..].iter().all(FieldScalar::is_zero));
    }

    #[test]
    fn complex_shapes() {
        let a = fixture_abelian(4).unwrap();
        let c = build_complex(&a, &random_subspace(4, 2, 1).unwrap(), 2).unwrap();
        assert_eq!(c.term_dims(), vec![3, 8, 6]);
        let p = fixture_product_of_curves(2, 2).unwrap();
        let c = build_complex(&p, &random_subspace(4, 2, 1).unwrap(), 2).unwrap();
        assert_eq!(c.term_dims(), vec![3, 8, 4]);
        let c = build_complex(&p, &random_subspace(4, 3, 1).unwrap(), 1).unwrap();
        assert_eq!(c.n, 1);
        // r = 1 is the inclusion W → V
        assert_eq!(c.mus[0], c.w.transpose());
    }

    #[test]
    fn abelian_cokernel() {
        let a = fixture_abelian(6).unwrap();
        for k in 1..=3 {
            let c = build_complex(&a, &random_subspace(6, 2 * k, k as u64).unwrap(), 2).unwrap();
            let rep = exactness_at(&c);
            assert!(rep.is_exact());
            assert_eq!(rep.coker_dim, binomial(6 - 2 * k, 2));
        }
    }

    #[test]
    fn product_probe_fails_in_the_middle() {
        let a = fixture_product_of_curves(2, 2).unwrap();
        let c = build_complex(&a, &coordinate_plane(4, &[0, 1]), 2).unwrap();
        let rep = exactness_at(&c);
        assert!(rep.injective_at_0);
        assert_eq!(rep.exact_middle_degrees, vec![false]);
        // e0 ⊗ e1 - e1 ⊗ e0 is a cycle outside im μ0
        let mut x = vec![F.zero(); 8];
        x[1] = F.one();
        x[4] = -F.one();
        assert!(c.mus[1].mul_vec(&x).unwrap().iter().all(FieldScalar::is_zero));
        let span =
            ExactMatrix::from_columns(F, 8, &[c.mus[0].column(0), c.mus[0].column(1), c.mus[0].column(2), x]).unwrap();
        assert_eq!(span.rank(), 4);
    }

    #[test]
    fn rank_deficient_subspace() {
        let a = fixture_abelian(3).unwrap();
        let w = ExactMatrix::from_ints(F, &[vec![1, 0, 0], vec![2, 0, 0]]).unwrap();
        assert!(matches!(build_complex(&a, &w, 2), Err(Error::RankDeficient { .. })));
        assert!(matches!(build_mu(&a, &coordinate_plane(3, &[0]), 2, 2), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn quotient_truncation_is_flagged() {
        let k = ExteriorElement::monomial(F, 4, &[0, 1]).unwrap();
        let a = fixture_quotient(4, 3, &[k]).unwrap();
        let c = build_complex(&a, &random_subspace(4, 2, 0).unwrap(), 3).unwrap();
        assert!(c.truncated);
        assert_eq!(c.n, 2);
        assert!(matches!(build_mu(&a, &random_subspace(4, 2, 0).unwrap(), 3, 2), Err(Error::Unavailable { .. })));
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = fixture_abelian(6).unwrap();
        let r1 = generic_exactness_sample(&a, 2, 2, 8, 11).unwrap();
        let r2 = generic_exactness_sample(&a, 2, 2, 8, 11).unwrap();
        assert_eq!(r1, r2);
        assert_eq!((r1.n_exact, r1.n_total), (8, 8));
        assert!(generic_exactness_sample(&a, 4, 2, 1, 0).is_err());
    }

    #[test]
    fn derivative_complex() {
        let a = fixture_abelian(4).unwrap();
        let w: Vec<FieldScalar> = [1, -2, 0, 3].iter().map(|&x| F.from_i64(x)).collect();
        assert!(derivative_complex_check(&a, &w, 4).unwrap());
        assert!(derivative_complex_check(&a, &w, 1).unwrap());
        let p = fixture_product_of_curves(2, 3).unwrap();
        let w: Vec<FieldScalar> = [2, 1, -1, 4, 5].iter().map(|&x| F.from_i64(x)).collect();
        assert!(derivative_complex_check(&p, &w, 2).unwrap());
        assert!(matches!(
            derivative_complex_check(&a, &[F.zero(), F.zero(), F.zero(), F.zero()], 2),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn derivative_scalars_can_vanish_in_positive_characteristic() {
        // μ_0 on Σ^3<w> carries the factor 3, which is zero in F_3
        let a = fixture_abelian(3).unwrap().reduce(Field::Prime(3)).unwrap();
        let f = Field::Prime(3);
        let w = vec![f.one(), f.zero(), f.zero()];
        assert!(!derivative_complex_check(&a, &w, 3).unwrap());
    }
}
