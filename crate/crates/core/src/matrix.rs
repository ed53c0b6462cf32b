//! Dense exact matrices with rank, kernel, echelon form and determinant.
//!
//! Storage is row-major. Over `F_p` all elimination runs on raw `u64`
//! residues. Over `Q`, [`ExactMatrix::rank`] first reduces an integer
//! rescaling of the matrix modulo a large prime: a full-rank reduction
//! certifies full rank over `Q` (some maximal minor is nonzero mod p, hence
//! nonzero). Otherwise it falls back to exact rational elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{bigint_mod, inv_mod, mul_mod, sub_mod, Field, FieldScalar};

/// Modulus for the rational rank fast path (the Mersenne prime 2^61 - 1).
const CERT_PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<FieldScalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, field: Field, data: Vec<FieldScalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(ExactMatrix { rows, cols, field, data })
    }

    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        ExactMatrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: Field, mut f: impl FnMut(usize, usize) -> FieldScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                assert_eq!(x.field(), field, "from_fn produced an entry in the wrong field");
                data.push(x);
            }
        }
        ExactMatrix { rows, cols, field, data }
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(field: Field, rows: Vec<Vec<FieldScalar>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(n, m, field, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    /// The matrix whose columns are the given vectors, all of length `len`.
    pub fn from_columns(field: Field, len: usize, columns: &[Vec<FieldScalar>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != len) {
            return Err(Error::Dimension("column length mismatch".into()));
        }
        let mut out = Self::zeros(len, columns.len(), field);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                field.check(x.field())?;
                out.data[i * columns.len() + j] = x.clone();
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldScalar {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, x: FieldScalar) {
        debug_assert_eq!(x.field(), self.field);
        self.data[i * self.cols + j] = x;
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, x: &FieldScalar) {
        let k = i * self.cols + j;
        self.data[k] = &self.data[k] + x;
    }

    pub fn row(&self, i: usize) -> &[FieldScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), self.field, |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn scale(&self, c: &FieldScalar) -> Result<Self> {
        self.field.check(c.field())?;
        Ok(ExactMatrix { data: self.data.iter().map(|x| x * c).collect(), ..self.clone() })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.field.check(other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() })
    }

    /// Matrix product `self * rhs`, skipping zero entries of both factors.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.field.check(rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if let Some(out) = self.mul_small_integers(rhs) {
            return Ok(out);
        }
        let rhs_rows: Vec<Vec<(usize, &FieldScalar)>> =
            (0..rhs.rows).map(|k| rhs.row(k).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()).collect();
        let mut out = Self::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &rhs_rows[k] {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Entries as `i64` when the matrix is rational with integer entries
    /// that fit.
    fn small_integers(&self) -> Option<Vec<i64>> {
        self.data
            .iter()
            .map(|x| x.as_rational().filter(|q| q.is_integer()).and_then(|q| i64::try_from(q.numer()).ok()))
            .collect()
    }

    /// Exact product in `i128` when both factors have small integer entries
    /// and `inner * max|a| * max|b|` cannot overflow.
    fn mul_small_integers(&self, rhs: &Self) -> Option<Self> {
        let a = self.small_integers()?;
        let b = rhs.small_integers()?;
        let max = |v: &[i64]| v.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0);
        let bound = max(&a).checked_mul(max(&b))?.checked_mul(self.cols.max(1) as u128)?;
        if bound > i128::MAX as u128 {
            return None;
        }
        let rhs_rows: Vec<Vec<(usize, i128)>> = (0..rhs.rows)
            .map(|k| {
                (0..rhs.cols).filter(|&j| b[k * rhs.cols + j] != 0).map(|j| (j, b[k * rhs.cols + j] as i128)).collect()
            })
            .collect();
        let mut acc = vec![0i128; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = a[i * self.cols + k] as i128;
                if x == 0 {
                    continue;
                }
                for &(j, y) in &rhs_rows[k] {
                    acc[i * rhs.cols + j] += x * y;
                }
            }
        }
        let data = acc.into_iter().map(|x| FieldScalar::Rational(BigRational::from_integer(BigInt::from(x)))).collect();
        Some(ExactMatrix { rows: self.rows, cols: rhs.cols, field: self.field, data })
    }

    pub fn mul_vec(&self, v: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        if let Some(bad) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Maps every entry into `target` (rational to `F_p` reduction).
    pub fn reduce(&self, target: Field) -> Result<Self> {
        let data = self.data.iter().map(|x| x.reduce(target)).collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, field: target, data })
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.rank_with_bound(self.rows.min(self.cols))
    }

    /// Exact rank, given a known upper bound. The modular fast path returns
    /// as soon as a reduction attains `upper`.
    pub fn rank_with_bound(&self, upper: usize) -> usize {
        match self.field {
            Field::Prime(p) => {
                let mut m = self.to_residues();
                rank_mod(&mut m, self.rows, self.cols, p)
            }
            Field::Rational => {
                if self.rows == 0 || self.cols == 0 {
                    return 0;
                }
                let mut m = self.integer_rows_mod(CERT_PRIME);
                let lower = rank_mod(&mut m, self.rows, self.cols, CERT_PRIME);
                if lower >= upper {
                    return lower;
                }
                self.rref().1.len()
            }
        }
    }

    /// Reduced row echelon form and pivot columns. Deterministic: pivots are
    /// taken top to bottom, left to right.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        match self.field {
            Field::Prime(p) => {
                let mut m = self.to_residues();
                let pivots = rref_mod(&mut m, self.rows, self.cols, p);
                let data = m.into_iter().map(|v| Field::Prime(p).from_i64(v as i64)).collect();
                (ExactMatrix { data, ..self.clone() }, pivots)
            }
            Field::Rational => {
                let mut m: Vec<BigRational> =
                    self.data.iter().map(|x| x.as_rational().expect("rational entry").clone()).collect();
                let pivots = rref_rational(&mut m, self.rows, self.cols);
                let data = m.into_iter().map(FieldScalar::Rational).collect();
                (ExactMatrix { data, ..self.clone() }, pivots)
            }
        }
    }

    /// Basis of the null space read off the reduced echelon form: one vector
    /// per free column `f`, with a 1 in position `f`.
    pub fn kernel(&self) -> Vec<Vec<FieldScalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Canonical basis of the column space: nonzero rows of the reduced
    /// echelon form of the transpose.
    pub fn column_space(&self) -> Vec<Vec<FieldScalar>> {
        let (r, pivots) = self.transpose().rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    pub fn det(&self) -> Result<FieldScalar> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[c * n + c].clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                if m[i * n + c].is_zero() {
                    continue;
                }
                let f = &m[i * n + c] * &inv;
                for j in c..n {
                    let t = &f * &m[c * n + j];
                    m[i * n + j] = &m[i * n + j] - &t;
                }
            }
        }
        Ok(det)
    }

    fn to_residues(&self) -> Vec<u64> {
        self.data.iter().map(|x| x.as_mod().expect("residue entry").value()).collect()
    }

    /// Each row scaled by the lcm of its denominators, reduced mod `p`. The
    /// scaling is by nonzero rationals, so rank over `Q` is unchanged.
    fn integer_rows_mod(&self, p: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row: Vec<&BigRational> = self.row(i).iter().map(|x| x.as_rational().expect("rational entry")).collect();
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            for q in row {
                if q.is_zero() {
                    out.push(0);
                } else {
                    out.push(bigint_mod(&(q.numer() * (&lcm / q.denom())), p));
                }
            }
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of a residue matrix; destroys its input.
pub(crate) fn rank_mod(m: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in c..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(m[rank * cols + c], p);
        for i in rank + 1..rows {
            let a = m[i * cols + c];
            if a == 0 {
                continue;
            }
            let f = mul_mod(a, inv, p);
            for j in c..cols {
                let t = mul_mod(f, m[rank * cols + j], p);
                m[i * cols + j] = sub_mod(m[i * cols + j], t, p);
            }
        }
        rank += 1;
    }
    rank
}

/// In-place reduced row echelon form over `F_p`; returns pivot columns.
pub(crate) fn rref_mod(m: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(piv * cols + j, r * cols + j);
        }
        let inv = inv_mod(m[r * cols + c], p);
        for j in c..cols {
            m[r * cols + j] = mul_mod(m[r * cols + j], inv, p);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let a = m[i * cols + c];
            if a == 0 {
                continue;
            }
            for j in c..cols {
                let t = mul_mod(a, m[r * cols + j], p);
                m[i * cols + j] = sub_mod(m[i * cols + j], t, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rref_rational(m: &mut [BigRational], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            m.swap(piv * cols + j, r * cols + j);
        }
        let inv = m[r * cols + c].recip();
        for j in c..cols {
            if !m[r * cols + j].is_zero() {
                m[r * cols + j] = &m[r * cols + j] * &inv;
            }
        }
        let pivot_row: Vec<(usize, BigRational)> =
            (c..cols).filter(|&j| !m[r * cols + j].is_zero()).map(|j| (j, m[r * cols + j].clone())).collect();
        for i in 0..rows {
            if i == r || m[i * cols + c].is_zero() {
                continue;
            }
            let a = m[i * cols + c].clone();
            for (j, x) in &pivot_row {
                let k = i * cols + j;
                m[k] = &m[k] - &(&a * x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of `rows x cols` residues given row-major; keeps the input intact.
pub fn rank_residues(m: &[u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut m = m.to_vec();
    rank_mod(&mut m, rows, cols, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_ints(Field::Rational, rows).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let id = ExactMatrix::identity(3, Field::Rational);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel().is_empty());
        let z = ExactMatrix::zeros(2, 5, Field::Rational);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 5);
    }

    #[test]
    fn kernel_is_in_echelon_form() {
        let m = q(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        let f = Field::Rational;
        assert_eq!(k[0], vec![f.from_i64(-2), f.one(), f.zero()]);
        assert_eq!(k[1], vec![f.from_i64(-3), f.zero(), f.one()]);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(FieldScalar::is_zero));
        }
    }

    #[test]
    fn rank_falls_back_when_not_full() {
        // rank 2 in a 3x3; the modular path cannot certify it
        let m = q(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det().unwrap(), Field::Rational.zero());
    }

    #[test]
    fn rational_and_modular_ranks_agree_on_regressions() {
        let cases = [
            vec![vec![2, 0, 1], vec![1, 3, 5], vec![0, 6, 9]],
            vec![vec![1, 1, 1, 1], vec![1, 2, 4, 8], vec![1, 3, 9, 27]],
            vec![vec![6, 4], vec![3, 2]],
        ];
        for rows in cases {
            let m = q(&rows);
            let r = m.rank();
            for p in [5, 7, 11, 32003] {
                assert_eq!(m.reduce(Field::Prime(p)).unwrap().rank(), r, "p = {p}");
            }
        }
        // p divides a pivot: rank drops mod 3 only
        let m = q(&[vec![3, 0], vec![0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.reduce(Field::Prime(3)).unwrap().rank(), 1);
    }

    #[test]
    fn determinant() {
        let m = q(&[vec![0, 2], vec![3, 1]]);
        assert_eq!(m.det().unwrap(), Field::Rational.from_i64(-6));
        let m = q(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(m.det().unwrap(), Field::Rational.from_i64(4));
    }

    #[test]
    fn product_and_mismatch() {
        let a = q(&[vec![1, 2], vec![3, 4]]);
        let b = q(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), q(&[vec![2, 1], vec![4, 3]]));
        assert!(a.mul(&q(&[vec![1, 2, 3]])).is_err());
        let c = ExactMatrix::identity(2, Field::Prime(5));
        assert!(matches!(a.mul(&c), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn integer_fast_path_matches_rational_product() {
        let f = Field::Rational;
        let a = q(&[vec![3, -2, 0], vec![7, 1, 5]]);
        let b = q(&[vec![1, 4], vec![0, -6], vec![2, 2]]);
        let half = f.from_ratio(1, 2).unwrap();
        // a fractional entry forces the general path; undo it afterwards
        let slow = a.scale(&half).unwrap().mul(&b).unwrap().scale(&f.from_i64(2)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), slow);
        let big = q(&[vec![i64::MAX]]);
        assert_eq!(
            big.mul(&big).unwrap().get(0, 0),
            &FieldScalar::Rational(BigRational::from_integer(BigInt::from(i64::MAX) * BigInt::from(i64::MAX)))
        );
    }

    #[test]
    fn column_space_is_canonical() {
        let a = q(&[vec![1, 1], vec![1, 1], vec![0, 0]]);
        let b = q(&[vec![2, 0], vec![2, 0], vec![0, 0]]);
        assert_eq!(a.column_space(), b.column_space());
    }

    #[test]
    fn mixed_entries_rejected() {
        let data = vec![Field::Rational.one(), Field::Prime(3).one()];
        assert!(ExactMatrix::new(1, 2, Field::Rational, data).is_err());
        assert!(ExactMatrix::new(1, 3, Field::Rational, vec![]).is_err());
    }
}
