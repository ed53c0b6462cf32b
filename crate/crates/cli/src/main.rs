use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use grassbgg::algebra::{fixture_abelian, fixture_ideal_quotient, fixture_product_of_curves, fixture_quotient, format};
use grassbgg::bgg::{build_complex, exactness_at, sample_exactness};
use grassbgg::bivector::{confirm_over_rationals, min_rank_in_subspace, SearchMode, CONSENSUS_PRIMES, DEFAULT_BUDGET};
use grassbgg::bounds::{bound_rhs, Verdict};
use grassbgg::report::{join, rank_str, Report};
use grassbgg::verify::{kernel_psi2, verify, VerifyOptions};
use grassbgg::FormAlgebra;

mod input;

#[derive(Parser)]
#[command(
    name = "grassbgg",
    version,
    about = "Exact checks of Grassmannian BGG complexes and h^{2,0} bounds on form algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the anticommutativity identities.
    Validate { file: PathBuf },
    /// Matrix rank and kernel of ψ_n.
    Psi {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Minimal rank of a nonzero element of ker ψ_2.
    Minrank {
        file: PathBuf,
        /// `consensus`, `fp:<p>` or `rand:<samples>`.
        #[arg(long, default_value = "consensus")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also report whether every nonzero element has rank > 2k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exactness of C_{r,W}, sampled over G_{2k} (or G_dim), or at the subspace in `--at`.
    Bgg {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        /// Half the dimension of W.
        #[arg(long)]
        k: Option<usize>,
        /// Dimension of W, for odd dimensions.
        #[arg(long, conflicts_with = "k")]
        dim: Option<usize>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Basis file for W: one row of q rationals per basis vector.
        #[arg(long, conflicts_with_all = ["k", "dim"])]
        at: Option<PathBuf>,
    },
    /// The per-r bound table and its closed form against h^{2,0}.
    Bounds { file: PathBuf },
    /// Min rank, admissible r, bounds and sampled exactness in one report.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exactness samples per admissible k.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Print a built-in algebra: `abelian <q>`, `product <g1> <g2>`,
    /// `quotient <q> <d> <bivector>...`, `ideal-quotient <q> <d> <bivector>...`.
    Fixtures {
        name: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Validate { file } => validate(&input::load_algebra(&file)?),
        Command::Psi { file, n } => psi(&input::load_algebra(&file)?, n),
        Command::Minrank { file, mode, seed, k, budget } => {
            minrank(&input::load_algebra(&file)?, &mode, seed, k, budget)
        }
        Command::Bgg { file, r, k, dim, samples, seed, at } => {
            let a = input::load_algebra(&file)?;
            match at {
                Some(path) => bgg_at(&a, r, &input::read_text(&path)?),
                None => {
                    let dim_w = match (k, dim) {
                        (Some(k), _) => 2 * k,
                        (None, Some(d)) => d,
                        (None, None) => bail!("one of --k, --dim or --at is required"),
                    };
                    bgg_sample(&a, r, dim_w, samples, seed)
                }
            }
        }
        Command::Bounds { file } => bounds(&input::load_algebra(&file)?),
        Command::Verify { file, seed, samples } => {
            let a = input::load_algebra(&file)?;
            let opts = VerifyOptions { seed, exactness_samples: samples, ..VerifyOptions::default() };
            let out = verify(&a, &opts)?;
            print!("{}", out.report);
            Ok(out.status.exit_code() as u8)
        }
        Command::Fixtures { name, params } => {
            print!("{}", format::serialize(&fixture(&name, &params)?)?);
            Ok(0)
        }
    }
}

fn validate(a: &FormAlgebra) -> Result<u8> {
    let v = a.validate();
    let mut r = Report::new();
    r.section("validate")
        .kv("d", a.dim())
        .kv("q", a.irregularity())
        .kv("h", join(a.hodge(), " "))
        .kv("top_degree", a.top_degree())
        .kv("identities_checked", v.identities_checked)
        .kv("valid", v.is_valid());
    if let Some(violation) = &v.violation {
        r.kv("violation", violation);
    }
    print!("{r}");
    Ok(if v.is_valid() { 0 } else { 1 })
}

fn psi(a: &FormAlgebra, n: usize) -> Result<u8> {
    let p = a.psi(n)?;
    let kernel = p.matrix.kernel();
    let mut r = Report::new();
    r.section("psi")
        .kv("n", n)
        .kv("rows", p.matrix.rows())
        .kv("cols", p.matrix.cols())
        .kv("rank", p.matrix.rank())
        .kv("kernel_dim", kernel.len());
    for (i, v) in kernel.iter().enumerate() {
        let e = grassbgg::ExteriorElement::from_coords(a.field(), a.irregularity(), n, v)?;
        r.kv(format!("kernel.{i}"), e);
    }
    print!("{r}");
    Ok(0)
}

fn parse_mode(mode: &str, seed: u64, budget: u64) -> Result<SearchMode> {
    if mode == "consensus" {
        return Ok(SearchMode::Consensus { primes: CONSENSUS_PRIMES.to_vec(), budget });
    }
    if let Some(p) = mode.strip_prefix("fp:") {
        return Ok(SearchMode::ExhaustiveFp { p: p.parse().with_context(|| format!("bad prime `{p}`"))?, budget });
    }
    if let Some(s) = mode.strip_prefix("rand:") {
        return Ok(SearchMode::RandomizedQ {
            samples: s.parse().with_context(|| format!("bad sample count `{s}`"))?,
            seed,
        });
    }
    bail!("unknown mode `{mode}` (expected consensus, fp:<p> or rand:<samples>)")
}

fn minrank(a: &FormAlgebra, mode: &str, seed: u64, k: Option<usize>, budget: u64) -> Result<u8> {
    let mode = parse_mode(mode, seed, budget)?;
    let kernel = kernel_psi2(a)?;
    let c = min_rank_in_subspace(&kernel, &mode)?;
    let mut r = Report::new();
    r.section("minrank").kv("q", a.irregularity()).kv("dim_ker_psi2", kernel.len()).kv("method", c.method);
    match &mode {
        SearchMode::ExhaustiveFp { p, .. } => r.kv("prime", p).kv("budget", budget),
        SearchMode::Consensus { primes, .. } => r.kv("primes", join(primes, " ")).kv("budget", budget),
        SearchMode::RandomizedQ { samples, seed } => r.kv("samples", samples).kv("seed", seed),
    };
    for pr in &c.per_prime {
        let value = match &pr.skipped {
            Some(why) => format!("skipped ({why})"),
            None => format!("{} over {} points", rank_str(pr.min_rank), pr.points),
        };
        r.kv(format!("p{}", pr.p), value);
    }
    r.kv("min_rank", rank_str(c.min_rank))
        .kv("primes_agree", c.primes_agree)
        .kv("char0_caveat", c.char0_caveat)
        .kv("upper_bound_only", c.upper_bound_only);
    if let Some(w) = &c.witness {
        r.kv("witness", w.to_exterior()).kv("coefficients", join(&c.coefficients, " "));
        r.kv("recheck", c.recheck(&kernel)?);
        if let Some((_, lifted)) = confirm_over_rationals(&c, &kernel)? {
            r.kv("rational_witness_rank", lifted.rank());
        }
    }
    if let Some(k) = k {
        let holds = c.min_rank.is_none_or(|m| m > 2 * k);
        r.section("hypothesis").kv("k", k).kv("rank_exceeds_2k", holds);
    }
    print!("{r}");
    Ok(0)
}

fn bgg_at(a: &FormAlgebra, r: usize, basis: &str) -> Result<u8> {
    let w = input::parse_basis(basis, a.irregularity())?;
    let c = build_complex(a, &w, r)?;
    let e = exactness_at(&c);
    let mut rep = Report::new();
    rep.section("bgg")
        .kv("r", r)
        .kv("dim_w", w.rows())
        .kv("n", c.n)
        .kv("truncated", c.truncated)
        .kv("term_dims", join(c.term_dims(), " "))
        .kv("ranks", join(&e.ranks, " "))
        .kv("injective_at_0", e.injective_at_0)
        .kv("exact_middle", join(&e.exact_middle_degrees, " "))
        .kv("coker_dim", e.coker_dim)
        .kv("exact", e.is_exact());
    print!("{rep}");
    Ok(0)
}

fn bgg_sample(a: &FormAlgebra, r: usize, dim_w: usize, samples: usize, seed: u64) -> Result<u8> {
    let s = sample_exactness(a, dim_w, r, samples, seed)?;
    let mut rep = Report::new();
    rep.section("bgg")
        .kv("r", r)
        .kv("dim_w", dim_w)
        .kv("samples", samples)
        .kv("seed", seed)
        .kv("exact", format!("{}/{}", s.n_exact, s.n_total))
        .kv("coker_dims", join(&s.coker_dims, " "));
    if let Some((i, _)) = &s.first_failure {
        rep.kv("first_failure", i);
    }
    print!("{rep}");
    Ok(0)
}

fn bounds(a: &FormAlgebra) -> Result<u8> {
    let t = bound_rhs(a.irregularity(), a.dim())?;
    let h20 = a.hodge()[2] as i64;
    let mut r = Report::new();
    r.section("bounds").kv("q", t.q).kv("d", t.d).kv("h20", h20);
    for (rr, b) in &t.rows {
        r.kv(format!("r{rr}.bound"), b).kv(format!("r{rr}.h20_meets"), h20 >= *b);
    }
    r.kv("closed_form", t.value).kv("argmax_r", t.argmax.map_or("none".to_string(), |x| x.to_string()));
    r.kv(
        "hypothesis",
        format!("unchecked; bounds are {} until `verify` certifies the min rank", Verdict::NotApplicable),
    );
    print!("{r}");
    Ok(0)
}

fn fixture(name: &str, params: &[String]) -> Result<FormAlgebra> {
    let int = |i: usize| -> Result<usize> {
        let s = params.get(i).with_context(|| format!("`{name}` needs more parameters"))?;
        s.parse().with_context(|| format!("bad integer `{s}`"))
    };
    let arity = |n: usize| -> Result<()> {
        if params.len() != n {
            bail!("`{name}` takes {n} parameters, got {}", params.len());
        }
        Ok(())
    };
    Ok(match name {
        "abelian" => {
            arity(1)?;
            fixture_abelian(int(0)?)?
        }
        "product" => {
            arity(2)?;
            fixture_product_of_curves(int(0)?, int(1)?)?
        }
        "quotient" | "ideal-quotient" => {
            let (q, d) = (int(0)?, int(1)?);
            let kernel = params[2..].iter().map(|e| input::parse_bivector(e, q)).collect::<Result<Vec<_>>>()?;
            if name == "quotient" {
                fixture_quotient(q, d, &kernel)?
            } else {
                fixture_ideal_quotient(q, d, &kernel)?
            }
        }
        other => bail!("unknown fixture `{other}` (abelian, product, quotient, ideal-quotient)"),
    })
}
