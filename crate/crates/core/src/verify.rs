//! End-to-end check of an algebra: minimal rank in `ker ψ_2`, admissible
//! range of `r`, bound table against `h^{2,0}`, and sampled exactness of the
//! `r = 2` complexes over the admissible Grassmannians.

use crate::algebra::FormAlgebra;
use crate::bgg::generic_exactness_sample;
use crate::bivector::{min_rank_in_subspace, Bivector, RankCertificate, SearchMode};
use crate::bounds::{admissible_k, evaluate, BoundReport, Verdict};
use crate::error::{Error, Result};
use crate::random::derive_seed;
use crate::report::{join, rank_str, Report};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Exactness samples per admissible `k`; 0 skips the section.
    pub exactness_samples: usize,
    pub primes: Vec<u64>,
    pub budget: u64,
    /// Random combinations for the rational upper bound.
    pub rational_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            exactness_samples: 5,
            primes: crate::bivector::CONSENSUS_PRIMES.to_vec(),
            budget: crate::bivector::DEFAULT_BUDGET,
            rational_samples: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violated,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violated => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub report: Report,
    pub status: Status,
    pub bounds: BoundReport,
    pub certificate: Option<RankCertificate>,
}

/// `ker ψ_2` as bivectors, in the reduced echelon basis.
pub fn kernel_psi2(a: &FormAlgebra) -> Result<Vec<Bivector>> {
    let psi = a.psi(2)?;
    psi.matrix.kernel().into_iter().map(|v| Bivector::from_coords(a.field(), a.irregularity(), &v)).collect()
}

pub fn verify(a: &FormAlgebra, opts: &VerifyOptions) -> Result<VerifyOutcome> {
    a.field().check(Field::Rational)?;
    let validation = a.validate();
    if let Some(v) = validation.violation {
        return Err(Error::InvalidAlgebra(v.to_string()));
    }
    let (q, d) = (a.irregularity(), a.dim());
    let h20 = a.hodge()[2];
    let mut report = Report::new();
    report
        .section("algebra")
        .kv("d", d)
        .kv("q", q)
        .kv("h", join(a.hodge(), " "))
        .kv("top_degree", a.top_degree())
        .kv("identities_checked", validation.identities_checked);

    let kernel = kernel_psi2(a)?;
    report.section("ker_psi2").kv("dim", kernel.len()).kv("primes", join(&opts.primes, " ")).kv("budget", opts.budget);
    let consensus =
        min_rank_in_subspace(&kernel, &SearchMode::Consensus { primes: opts.primes.clone(), budget: opts.budget });
    let certificate = match consensus {
        Ok(c) => Some(c),
        Err(Error::BudgetExceeded { points, .. }) => {
            report.kv("consensus", format!("skipped ({points} points exceed the budget)"));
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(c) = &certificate {
        let per_prime = c.per_prime.iter().map(|r| match &r.skipped {
            Some(_) => format!("{}:skipped", r.p),
            None => format!("{}:{}", r.p, rank_str(r.min_rank)),
        });
        report
            .kv("per_prime", if c.per_prime.is_empty() { "none".to_string() } else { join(per_prime, " ") })
            .kv("primes_agree", c.primes_agree)
            .kv("min_rank", rank_str(c.min_rank))
            .kv("char0_caveat", c.char0_caveat)
            .kv("witness", c.witness.as_ref().map_or("none".to_string(), |w| w.to_exterior().to_string()));
    }
    let rational_seed = derive_seed(opts.seed, 0);
    let rational = min_rank_in_subspace(
        &kernel,
        &SearchMode::RandomizedQ { samples: opts.rational_samples, seed: rational_seed },
    )?;
    report
        .kv("rational_samples", opts.rational_samples)
        .kv("rational_upper_bound", rank_str(rational.min_rank))
        .kv("rational_witness", rational.witness.as_ref().map_or("none".to_string(), |w| w.to_exterior().to_string()));

    let k_star = match &certificate {
        Some(c) => admissible_k(q, c.min_rank),
        None => 0,
    };
    report.kv("admissible_k", k_star);

    let bounds = evaluate(q, d, h20, k_star)?;
    report.section("bounds").kv("h20", h20);
    for row in &bounds.rows {
        report.kv(format!("r{}.bound", row.r), row.bound).kv(format!("r{}.verdict", row.r), row.verdict);
    }
    match bounds.aggregate {
        Some((r, b)) => report.kv("aggregate", b).kv("aggregate_r", r),
        None => report.kv("aggregate", "none"),
    };
    report
        .kv("aggregate_verdict", bounds.aggregate_verdict)
        .kv("closed_form", bounds.closed_form)
        .kv("closed_form_verdict", bounds.closed_form_verdict);

    let mut inexact = Vec::new();
    if opts.exactness_samples > 0 && k_star > 0 {
        report.section("exactness").kv("r", 2).kv("samples", opts.exactness_samples);
        for k in 1..=k_star {
            let s = generic_exactness_sample(a, k, 2, opts.exactness_samples, derive_seed(opts.seed, k as u64))?;
            report.kv(format!("k{k}.exact"), format!("{}/{}", s.n_exact, s.n_total));
            report.kv(format!("k{k}.coker_dims"), join(&s.coker_dims, " "));
            if s.n_exact < s.n_total {
                inexact.push(k);
            }
        }
    }

    let status = if bounds.any_violated() { Status::Violated } else { Status::Ok };
    report.section("summary").kv("status", if status == Status::Ok { "ok" } else { "violated" });
    let message = if status == Status::Violated {
        "bound violated under a certified min-rank hypothesis: the complex min rank may be lower than the certified one, see char0_caveat".to_string()
    } else if certificate.is_none() {
        "min rank not certified, bounds not applicable".to_string()
    } else if k_star == 0 {
        "hypothesis fails at k=1, bounds not applicable".to_string()
    } else {
        let (_, b) = bounds.aggregate.expect("admissible rows");
        let head = if h20 as i64 == b {
            format!("equality: h^{{2,0}} = bound = {b}")
        } else {
            format!("holds: h^{{2,0}} = {h20} >= bound = {b}")
        };
        if bounds.closed_form_verdict == Verdict::NotApplicable {
            format!("{head}; hypothesis fails at k={}, larger r not applicable", k_star + 1)
        } else {
            head
        }
    };
    report.kv("message", message);
    if !inexact.is_empty() {
        report.kv("warning", format!("inexact samples at admissible k = {}", join(&inexact, " ")));
    }
    Ok(VerifyOutcome { report, status, bounds, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{fixture_abelian, fixture_product_of_curves, fixture_quotient};
    use crate::exterior::ExteriorElement;

    #[test]
    fn product_hypothesis_fails() {
        let a = fixture_product_of_curves(2, 2).unwrap();
        let out = verify(&a, &VerifyOptions::default()).unwrap();
        assert_eq!(out.status, Status::Ok);
        assert_eq!(out.report.get("ker_psi2", "min_rank"), Some("2"));
        assert_eq!(out.report.get("summary", "message"), Some("hypothesis fails at k=1, bounds not applicable"));
    }

    #[test]
    fn abelian_equality() {
        let a = fixture_abelian(4).unwrap();
        let out = verify(&a, &VerifyOptions::default()).unwrap();
        assert_eq!(out.report.get("summary", "message"), Some("equality: h^{2,0} = bound = 6"));
        assert_eq!(out.report.get("exactness", "k2.exact"), Some("5/5"));
    }

    #[test]
    fn quotient_partial_range() {
        let f = Field::Rational;
        let k = ExteriorElement::monomial(f, 4, &[0, 1])
            .unwrap()
            .try_add(&ExteriorElement::monomial(f, 4, &[2, 3]).unwrap())
            .unwrap();
        let a = fixture_quotient(4, 3, &[k]).unwrap();
        let out = verify(&a, &VerifyOptions::default()).unwrap();
        assert_eq!(out.bounds.admissible_k, 1);
        assert_eq!(
            out.report.get("summary", "message"),
            Some("equality: h^{2,0} = bound = 5; hypothesis fails at k=2, larger r not applicable")
        );
    }
}
