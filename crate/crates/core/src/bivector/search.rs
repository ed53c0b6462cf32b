//! Minimal rank of a nonzero bivector in a linear subspace `K ⊂ Λ^2 V`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{pfaffian_on, Bivector};
use crate::basis::{combinations, Basis};
use crate::error::{Error, Result};
use crate::matrix::{rank_residues, ExactMatrix};
use crate::scalar::{bigint_mod, is_prime, Field, FieldScalar};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const CONSENSUS_PRIMES: [u64; 3] = [5, 7, 11];
/// Random coefficients are integers in `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 9;
/// Integer roots are only searched when the constant and leading
/// coefficients of the restricted Pfaffian stay below this size.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;
const CHUNK: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every point of `P(K ⊗ F_p)`.
    ExhaustiveFp { p: u64, budget: u64 },
    /// Exhaustive search over several primes; reports the minimum.
    Consensus { primes: Vec<u64>, budget: u64 },
    /// Random integer combinations followed by descent along lines.
    RandomizedQ { samples: usize, seed: u64 },
}

impl SearchMode {
    pub fn consensus() -> Self {
        SearchMode::Consensus { primes: CONSENSUS_PRIMES.to_vec(), budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ExhaustiveFp,
    Consensus,
    RandomizedQ,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ExhaustiveFp => "exhaustive-fp",
            Method::Consensus => "consensus",
            Method::RandomizedQ => "randomized-q",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeResult {
    pub p: u64,
    /// `None` if the prime was skipped.
    pub min_rank: Option<usize>,
    pub points: u128,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug)]
pub struct RankCertificate {
    pub method: Method,
    pub q: usize,
    pub dim_k: usize,
    /// Smallest rank of a nonzero element found; `None` iff `K = 0`.
    pub min_rank: Option<usize>,
    /// Witness as a combination of the given basis of `K`, over the field
    /// the witness lives in.
    pub coefficients: Vec<FieldScalar>,
    pub witness: Option<Bivector>,
    pub per_prime: Vec<PrimeResult>,
    /// All non-skipped primes reported the same minimum.
    pub primes_agree: bool,
    /// The value was computed over a finite field and may differ from the
    /// minimum over `C`.
    pub char0_caveat: bool,
    /// The value is only an upper bound for the minimum over `Q` (and `C`).
    pub upper_bound_only: bool,
    pub samples: usize,
    pub seed: Option<u64>,
}

impl RankCertificate {
    /// Recompute the witness from the coefficients and check its rank.
    pub fn recheck(&self, k: &[Bivector]) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(self.min_rank.is_none() && k.is_empty());
        };
        let field = w.field();
        let basis = match field {
            Field::Rational => k.to_vec(),
            Field::Prime(p) => {
                reduce_basis(k, p)?.into_iter().map(|g| residue_bivector(self.q, p, &g)).collect::<Result<Vec<_>>>()?
            }
        };
        let again = combine(field, self.q, &basis, &self.coefficients)?;
        Ok(&again == w && Some(again.rank()) == self.min_rank)
    }
}

fn check_subspace(k: &[Bivector]) -> Result<(usize, Option<Field>)> {
    let Some(first) = k.first() else {
        return Ok((0, None));
    };
    let (q, field) = (first.ambient(), first.field());
    for g in k {
        field.check(g.field())?;
        if g.ambient() != q {
            return Err(Error::AmbientMismatch(q, g.ambient()));
        }
    }
    let coords: Vec<Vec<FieldScalar>> = k.iter().map(Bivector::to_coords).collect();
    if ExactMatrix::from_rows(field, coords)?.rank() != k.len() {
        return Err(Error::DependentBasis);
    }
    Ok((q, Some(field)))
}

/// Minimal rank over the nonzero elements of `span(k)`.
pub fn min_rank_in_subspace(k: &[Bivector], mode: &SearchMode) -> Result<RankCertificate> {
    let (q, field) = check_subspace(k)?;
    let method = match mode {
        SearchMode::ExhaustiveFp { .. } => Method::ExhaustiveFp,
        SearchMode::Consensus { .. } => Method::Consensus,
        SearchMode::RandomizedQ { .. } => Method::RandomizedQ,
    };
    let mut cert = RankCertificate {
        method,
        q,
        dim_k: k.len(),
        min_rank: None,
        coefficients: Vec::new(),
        witness: None,
        per_prime: Vec::new(),
        primes_agree: true,
        char0_caveat: method != Method::RandomizedQ,
        upper_bound_only: method == Method::RandomizedQ,
        samples: 0,
        seed: None,
    };
    let Some(field) = field else {
        return Ok(cert);
    };
    match mode {
        SearchMode::ExhaustiveFp { p, budget } => {
            if !is_prime(*p) {
                return Err(Error::NotPrime(*p));
            }
            if let Field::Prime(fp) = field {
                if fp != *p {
                    return Err(Error::FieldMismatch(field, Field::Prime(*p)));
                }
            }
            let gens = reduce_basis(k, *p)?;
            if residue_rank(&gens, *p) < k.len() {
                return Err(Error::BadReduction { value: "basis of K".into(), p: *p });
            }
            let found = exhaustive(q, *p, &gens, *budget)?;
            cert.per_prime.push(PrimeResult { p: *p, min_rank: Some(found.rank), points: found.points, skipped: None });
            fill_from_prime(&mut cert, q, *p, &gens, &found)?;
        }
        SearchMode::Consensus { primes, budget } => {
            field.check(Field::Rational)?;
            let mut best: Option<(u64, Vec<Vec<u64>>, Found)> = None;
            for &p in primes {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                let gens = reduce_basis(k, p)?;
                if residue_rank(&gens, p) < k.len() {
                    let skipped = Some("basis of K is dependent mod p".to_string());
                    cert.per_prime.push(PrimeResult { p, min_rank: None, points: 0, skipped });
                    continue;
                }
                let found = exhaustive(q, p, &gens, *budget)?;
                cert.per_prime.push(PrimeResult { p, min_rank: Some(found.rank), points: found.points, skipped: None });
                if best.as_ref().is_none_or(|(_, _, b)| found.rank < b.rank) {
                    best = Some((p, gens, found));
                }
            }
            let Some((p, gens, found)) = best else {
                return Err(Error::OutOfRange { what: "primes", detail: "no usable prime for this subspace".into() });
            };
            let ranks: Vec<usize> = cert.per_prime.iter().filter_map(|r| r.min_rank).collect();
            cert.primes_agree = ranks.windows(2).all(|w| w[0] == w[1]);
            fill_from_prime(&mut cert, q, p, &gens, &found)?;
        }
        SearchMode::RandomizedQ { samples, seed } => {
            field.check(Field::Rational)?;
            let (coefficients, witness) = randomized(q, k, *samples, *seed)?;
            cert.min_rank = Some(witness.rank());
            cert.coefficients = coefficients;
            cert.witness = Some(witness);
            cert.samples = *samples;
            cert.seed = Some(*seed);
        }
    }
    Ok(cert)
}

/// Lift the coefficients of a finite-field witness to `Q` (centered
/// representatives) and evaluate on the rational basis. Since reduction can
/// only lower rank, a lifted rank equal to the `F_p` rank shows that this
/// rank is attained over `Q`.
pub fn confirm_over_rationals(cert: &RankCertificate, k: &[Bivector]) -> Result<Option<(Vec<FieldScalar>, Bivector)>> {
    let Some(w) = &cert.witness else {
        return Ok(None);
    };
    if w.field() == Field::Rational {
        return Ok(Some((cert.coefficients.clone(), w.clone())));
    }
    check_subspace(k)?;
    let coeffs: Vec<FieldScalar> = cert.coefficients.iter().map(|c| FieldScalar::Rational(c.lift_centered())).collect();
    let lifted = combine(Field::Rational, cert.q, k, &coeffs)?;
    Ok(Some((coeffs, lifted)))
}

fn combine(field: Field, q: usize, basis: &[Bivector], coeffs: &[FieldScalar]) -> Result<Bivector> {
    let mut acc = Bivector::from_matrix(ExactMatrix::zeros(q, q, field))?;
    for (g, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.try_add(&g.scale(c)?)?;
        }
    }
    Ok(acc)
}

/// Upper-triangular coordinates of each generator mod `p`. Rational
/// generators are first cleared of denominators, which keeps the span.
fn reduce_basis(k: &[Bivector], p: u64) -> Result<Vec<Vec<u64>>> {
    k.iter()
        .map(|g| {
            let coords = g.to_coords();
            match g.field() {
                Field::Rational => {
                    let rats: Vec<&BigRational> = coords.iter().map(|c| c.as_rational().expect("rational")).collect();
                    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                    Ok(rats.iter().map(|r| bigint_mod(&(r.numer() * (&lcm / r.denom())), p)).collect())
                }
                Field::Prime(fp) if fp == p => {
                    Ok(coords.iter().map(|c| c.as_mod().expect("residue").value()).collect())
                }
                other => Err(Error::FieldMismatch(other, Field::Prime(p))),
            }
        })
        .collect()
}

fn residue_rank(gens: &[Vec<u64>], p: u64) -> usize {
    if gens.is_empty() {
        return 0;
    }
    let flat: Vec<u64> = gens.concat();
    rank_residues(&flat, gens.len(), gens[0].len(), p)
}

fn residue_bivector(q: usize, p: u64, coords: &[u64]) -> Result<Bivector> {
    let f = Field::Prime(p);
    let c: Vec<FieldScalar> = coords.iter().map(|&x| f.from_i64(x as i64)).collect();
    Bivector::from_coords(f, q, &c)
}

struct Found {
    rank: usize,
    tuple: Vec<u64>,
    points: u128,
}

fn projective_count(p: u64, m: usize) -> u128 {
    let p = p as u128;
    match p.checked_pow(m as u32) {
        Some(pm) => (pm - 1) / (p - 1),
        None => u128::MAX,
    }
}

/// The `idx`-th point of `P^{m-1}(F_p)` in lexicographic order of its
/// normalized representative (first nonzero coordinate equal to 1).
fn point(mut idx: u64, m: usize, p: u64, out: &mut [u64]) {
    out.fill(0);
    for lead in (0..m).rev() {
        let size = p.pow((m - 1 - lead) as u32);
        if idx < size {
            out[lead] = 1;
            for pos in (lead + 1..m).rev() {
                out[pos] = idx % p;
                idx /= p;
            }
            return;
        }
        idx -= size;
    }
    unreachable!("index beyond the projective space");
}

fn exhaustive(q: usize, p: u64, gens: &[Vec<u64>], budget: u64) -> Result<Found> {
    let m = gens.len();
    let total = projective_count(p, m);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { points: total, budget });
    }
    let total = total as u64;
    let pairs = Basis::exterior(q, 2);
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|k| (k[0], k[1])).collect();
    let rank_at = |idx: u64, tuple: &mut Vec<u64>, mat: &mut Vec<u64>| -> usize {
        point(idx, m, p, tuple);
        mat.fill(0);
        for (slot, &(i, j)) in pairs.iter().enumerate() {
            let mut acc: u128 = 0;
            for (g, &t) in gens.iter().zip(tuple.iter()) {
                acc += t as u128 * g[slot] as u128;
            }
            let x = (acc % p as u128) as u64;
            mat[i * q + j] = x;
            mat[j * q + i] = if x == 0 { 0 } else { p - x };
        }
        rank_residues(mat, q, q, p)
    };
    let mut best: Option<(usize, u64)> = None;
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let local = (start..end)
            .into_par_iter()
            .map_init(|| (vec![0u64; m], vec![0u64; q * q]), |(t, mat), idx| (rank_at(idx, t, mat), idx))
            .min();
        if let Some(l) = local {
            if best.is_none_or(|b| l < b) {
                best = Some(l);
            }
        }
        start = end;
        // 2 is the smallest nonzero rank; the earliest chunk holding one
        // already contains the lexicographically first witness
        if best.is_some_and(|(r, _)| r == 2) {
            break;
        }
    }
    let (rank, idx) = best.expect("nonempty projective space");
    let mut tuple = vec![0; m];
    point(idx, m, p, &mut tuple);
    Ok(Found { rank, tuple, points: total as u128 })
}

fn fill_from_prime(cert: &mut RankCertificate, q: usize, p: u64, gens: &[Vec<u64>], found: &Found) -> Result<()> {
    let f = Field::Prime(p);
    let coefficients: Vec<FieldScalar> = found.tuple.iter().map(|&t| f.from_i64(t as i64)).collect();
    let basis = gens.iter().map(|g| residue_bivector(q, p, g)).collect::<Result<Vec<_>>>()?;
    let witness = combine(f, q, &basis, &coefficients)?;
    if witness.rank() != found.rank {
        return Err(Error::Internal("finite-field witness rank changed on recomputation".into()));
    }
    cert.min_rank = Some(found.rank);
    cert.coefficients = coefficients;
    cert.witness = Some(witness);
    Ok(())
}

fn randomized(q: usize, k: &[Bivector], samples: usize, seed: u64) -> Result<(Vec<FieldScalar>, Bivector)> {
    let f = Field::Rational;
    let m = k.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<i64>> = (0..m).map(|j| (0..m).map(|i| (i == j) as i64).collect()).collect();
    while candidates.len() < m + samples {
        let c: Vec<i64> = (0..m).map(|_| rng.random_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
        if c.iter().any(|&x| x != 0) {
            candidates.push(c);
        }
    }
    let mut best: Option<(usize, Vec<FieldScalar>, Bivector)> = None;
    for c in candidates {
        let coeffs: Vec<FieldScalar> = c.iter().map(|&x| f.from_i64(x)).collect();
        let w = combine(f, q, k, &coeffs)?;
        let r = w.rank();
        if best.as_ref().is_none_or(|(b, _, _)| r < *b) {
            best = Some((r, coeffs, w));
        }
    }
    let (mut rank, mut coeffs, mut w) = best.expect("at least one candidate");
    'descent: while rank > 2 {
        for (j, dir) in k.iter().enumerate() {
            for t in line_drop_candidates(&w, dir)? {
                let cand = w.try_add(&dir.scale(&t)?)?;
                let r = cand.rank();
                if r < rank && r > 0 {
                    coeffs[j] = &coeffs[j] + &t;
                    rank = r;
                    w = cand;
                    continue 'descent;
                }
            }
        }
        break;
    }
    Ok((coeffs, w))
}

/// Nonzero rational `t` where a nonvanishing principal Pfaffian of maximal
/// order of `w` vanishes on `w + t·dir`. Every rank drop along the line
/// happens at such a `t`.
fn line_drop_candidates(w: &Bivector, dir: &Bivector) -> Result<Vec<FieldScalar>> {
    let size = w.rank();
    let Some(support) = combinations(w.ambient(), size).into_iter().find(|s| !pfaffian_on(w.matrix(), s).is_zero())
    else {
        return Err(Error::Internal("no nonvanishing principal Pfaffian of maximal order".into()));
    };
    let f = Field::Rational;
    // Pf_S(w + t dir) has degree <= size / 2 in t
    let xs: Vec<BigRational> = (0..=size / 2).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
    let ys = xs
        .iter()
        .map(|x| {
            let line = w.try_add(&dir.scale(&FieldScalar::Rational(x.clone()))?)?;
            Ok(pfaffian_on(line.matrix(), &support).as_rational().expect("rational").clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate(&xs, &ys);
    Ok(rational_roots(&poly)
        .into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| f.from_rational(&r).expect("rational"))
        .collect())
}

/// Newton interpolation; returns coefficients from the constant term up.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// Rational roots by the rational root theorem, ascending. Polynomials
/// with oversized constant or leading coefficients yield no candidates.
pub(crate) fn rational_roots(poly: &[BigRational]) -> Vec<BigRational> {
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.is_empty() {
        return roots;
    }
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    if low > 0 {
        roots.push(BigRational::zero());
        ints.drain(..low);
    }
    if ints.len() < 2 {
        return roots;
    }
    let (Some(c0), Some(cn)) = (ints[0].abs().to_u64(), ints[ints.len() - 1].abs().to_u64()) else {
        return roots;
    };
    if c0 > DIVISOR_LIMIT || cn > DIVISOR_LIMIT {
        return roots;
    }
    let eval = |x: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for num in divisors(c0) {
        for den in divisors(cn) {
            for sign in [-1i64, 1] {
                let x = BigRational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                if eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::ExteriorElement;

    const F: Field = Field::Rational;

    fn biv(q: usize, terms: &[(usize, usize, i64)]) -> Bivector {
        let e = terms.iter().fold(ExteriorElement::zero(F, q, 2), |acc, &(i, j, c)| {
            acc.try_add(&ExteriorElement::monomial(F, q, &[i, j]).unwrap().scale(&F.from_i64(c)).unwrap()).unwrap()
        });
        Bivector::from_exterior(&e).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn projective_enumeration_order() {
        let mut t = vec![0; 2];
        let pts: Vec<Vec<u64>> = (0..4)
            .map(|i| {
                point(i, 2, 3, &mut t);
                t.clone()
            })
            .collect();
        assert_eq!(pts, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(projective_count(3, 2), 4);
        assert_eq!(projective_count(5, 3), 31);
    }

    #[test]
    fn roots() {
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        assert_eq!(rational_roots(&[rat(1, 1), rat(-3, 1), rat(2, 1)]), vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(rational_roots(&[rat(0, 1), rat(1, 3)]), vec![rat(0, 1)]);
        assert!(rational_roots(&[rat(1, 1), rat(0, 1), rat(1, 1)]).is_empty());
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let xs: Vec<BigRational> = (0..3).map(|i| rat(i, 1)).collect();
        let ys: Vec<BigRational> = xs.iter().map(|x| x * x * rat(3, 1) - rat(1, 2)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![rat(-1, 2), rat(0, 1), rat(3, 1)]);
    }

    #[test]
    fn pencil_contains_rank_two() {
        // e01 + e23 and e01 - e23 span a plane containing e01
        let k = [biv(4, &[(0, 1, 1), (2, 3, 1)]), biv(4, &[(0, 1, 1), (2, 3, -1)])];
        let c = min_rank_in_subspace(&k, &SearchMode::consensus()).unwrap();
        assert_eq!(c.min_rank, Some(2));
        assert!(c.primes_agree && c.char0_caveat);
        assert!(c.recheck(&k).unwrap());
        let (_, lifted) = confirm_over_rationals(&c, &k).unwrap().unwrap();
        assert_eq!(lifted.rank(), 2);

        let r = min_rank_in_subspace(&k, &SearchMode::RandomizedQ { samples: 3, seed: 1 }).unwrap();
        assert_eq!(r.min_rank, Some(2));
        assert!(r.upper_bound_only && r.recheck(&k).unwrap());
    }

    #[test]
    fn descent_finds_hidden_rank_two() {
        // e01 + e23 + e45 and e01: random combinations have rank 6 or 4,
        // descent must reach the decomposable line
        let k = [biv(6, &[(0, 1, 3), (2, 3, 1), (4, 5, 1)]), biv(6, &[(2, 3, 1), (4, 5, 1)])];
        let r = min_rank_in_subspace(&k, &SearchMode::RandomizedQ { samples: 0, seed: 0 }).unwrap();
        assert_eq!(r.min_rank, Some(2));
    }

    #[test]
    fn single_generator() {
        let k = [biv(4, &[(0, 1, 1), (2, 3, 1)])];
        let c = min_rank_in_subspace(&k, &SearchMode::ExhaustiveFp { p: 7, budget: 10 }).unwrap();
        assert_eq!(c.min_rank, Some(4));
        assert_eq!(c.per_prime[0].points, 1);
    }

    #[test]
    fn empty_and_errors() {
        let c = min_rank_in_subspace(&[], &SearchMode::consensus()).unwrap();
        assert_eq!(c.min_rank, None);
        let g = biv(4, &[(0, 1, 1)]);
        assert!(matches!(
            min_rank_in_subspace(&[g.clone(), g.clone()], &SearchMode::consensus()),
            Err(Error::DependentBasis)
        ));
        let k = [biv(4, &[(0, 1, 1)]), biv(4, &[(0, 2, 1)]), biv(4, &[(1, 3, 1)])];
        assert!(matches!(
            min_rank_in_subspace(&k, &SearchMode::ExhaustiveFp { p: 11, budget: 100 }),
            Err(Error::BudgetExceeded { points: 133, budget: 100 })
        ));
    }

    #[test]
    fn bad_prime_is_skipped() {
        // e01 + 5 e23 and e01 become dependent mod 5
        let k = [biv(4, &[(0, 1, 1), (2, 3, 5)]), biv(4, &[(0, 1, 1)])];
        let c = min_rank_in_subspace(&k, &SearchMode::consensus()).unwrap();
        assert!(c.per_prime[0].skipped.is_some());
        assert_eq!(c.min_rank, Some(2));
    }
}
