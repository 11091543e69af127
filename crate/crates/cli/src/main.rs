//! Command-line front end: Schur expansions, product and perp expansions, and
//! the verification suites.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use skewgroth::grothendieck::{g_schur, g_skew_det, G_schur, G_skew_double_det, G_skew_single_det};
use skewgroth::noncomm::{
    expand_sG_double, expand_sG_single, expand_sg, perp_expand_G, perp_expand_g, Expansion, SkewSum,
};
use skewgroth::serialize::{expansion_latex, expansion_to_json, symfunc_latex, symfunc_to_json};
use skewgroth::verify::{run_suite, Suite};
use skewgroth::{BetaPoly, Error, Partition, SkewShape, SymFunc};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "skewgroth", version, about = "Skew stable Grothendieck polynomials over Q[β]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "latex")]
    json: bool,
    /// Emit LaTeX instead of JSON.
    #[arg(long, global = true)]
    latex: bool,
    /// Substitute a rational value `p/q` for β before printing.
    #[arg(long, global = true, value_name = "p/q", allow_hyphen_values = true)]
    beta_rational: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of G_λ, g_λ, G_{λ\\μ}, G_{λ/μ} or g_{λ/μ}.
    Expand {
        #[arg(value_parser = ["G", "g", "G//", "G/", "g/"])]
        family: String,
        /// `3,1`, `-` for the empty partition, or `3,1/1` for skew families.
        #[arg(allow_hyphen_values = true)]
        shape: String,
        /// Degree bound for the G families; defaults to |λ| + 2.
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Expansion of s_ν G_{λ\\μ}, s_ν G_{λ/μ} or s_ν g_{λ/μ} in skew polynomials.
    Product {
        #[arg(value_parser = ["sG//", "sG/", "sg"])]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        /// Operator count; defaults to the smallest legal value.
        #[arg(long)]
        r: Option<usize>,
        /// Second alphabet size for the G kinds; defaults to ℓ(μ).
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Expansion of s_ν^⊥ G_{λ/μ} or s_ν^⊥ g_{λ/μ} in skew polynomials.
    Perp {
        #[arg(value_parser = ["sG", "sg"])]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        /// Operator count; defaults to max(ℓ(λ), 1).
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run an identity suite and report each check group.
    Verify {
        #[arg(value_parser = ["duality", "determinants", "expansions", "knuth", "oracle", "all"])]
        suite: String,
        /// Largest number of boxes in the shapes checked.
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Degree bound; defaults to max + 2.
        #[arg(long)]
        degree: Option<usize>,
        /// Variable count for oracle checks.
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
}

enum Failure {
    Parse(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::NotPartition(_) => Failure::Parse(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn parse_partition(s: &str) -> Outcome<Partition> {
    Ok(s.trim().parse::<Partition>()?)
}

fn parse_skew(s: &str) -> Outcome<SkewShape> {
    let (outer, inner) = match s.split_once('/') {
        Some((o, i)) => (parse_partition(o)?, parse_partition(i)?),
        None => (parse_partition(s)?, Partition::empty()),
    };
    Ok(SkewShape::new(outer, inner)?)
}

fn parse_beta(s: &str) -> Outcome<BigRational> {
    let bad = || Failure::Parse(format!("expected p/q for --beta-rational, got {s:?}"));
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p = p.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    let q = q.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
    if q == 0.into() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

fn print_symfunc(f: SymFunc, out: &Output) -> Outcome<()> {
    let f = match &out.beta_rational {
        Some(b) => f.eval_beta(&parse_beta(b)?),
        None => f,
    };
    println!("{}", if out.latex { symfunc_latex(&f) } else { symfunc_to_json(&f) });
    Ok(())
}

fn print_expansion(mut e: Expansion, out: &Output) -> Outcome<()> {
    if let Some(b) = &out.beta_rational {
        let b = parse_beta(b)?;
        e.terms = SkewSum::from_terms(e.terms.terms().iter().map(|(s, c)| (s.clone(), BetaPoly::constant(c.eval(&b)))));
    }
    println!("{}", if out.latex { expansion_latex(&e) } else { expansion_to_json(&e) });
    Ok(())
}

fn straight(shape: &SkewShape, family: &str) -> Outcome<Partition> {
    if shape.inner().is_empty() {
        Ok(shape.outer().clone())
    } else {
        Err(Failure::Parse(format!("family {family} takes a partition, not a skew shape")))
    }
}

fn run(cli: Cli) -> Outcome<bool> {
    match cli.command {
        Command::Expand { family, shape, degree, output } => {
            let shape = parse_skew(&shape)?;
            let (o, i) = (shape.outer(), shape.inner());
            let d = degree.unwrap_or(o.size() + 2);
            let f = match family.as_str() {
                "G" => G_schur(&straight(&shape, "G")?, d),
                "g" => g_schur(&straight(&shape, "g")?),
                "G//" => G_skew_double_det(o, i, d),
                "G/" => G_skew_single_det(o, i, d),
                _ => g_skew_det(o, i),
            };
            print_symfunc(f, &output)?;
        }
        Command::Product { kind, nu, shape, r, s, output } => {
            let nu = parse_partition(&nu)?;
            let shape = parse_skew(&shape)?;
            let (lam, mu) = (shape.outer(), shape.inner());
            let e = if kind == "sg" {
                expand_sg(&nu, lam, mu, r.unwrap_or(lam.len() + nu.len()))?
            } else {
                let s = s.unwrap_or(mu.len());
                let r = r.unwrap_or(lam.len().max(s));
                if kind == "sG//" {
                    expand_sG_double(&nu, lam, mu, r, s)?
                } else {
                    expand_sG_single(&nu, lam, mu, r, s)?
                }
            };
            print_expansion(e, &output)?;
        }
        Command::Perp { kind, nu, shape, r, output } => {
            let nu = parse_partition(&nu)?;
            let shape = parse_skew(&shape)?;
            let (lam, mu) = (shape.outer(), shape.inner());
            let r = r.unwrap_or(lam.len().max(1));
            let e = if kind == "sg" { perp_expand_g(&nu, lam, mu, r)? } else { perp_expand_G(&nu, lam, mu, r)? };
            print_expansion(e, &output)?;
        }
        Command::Verify { suite, max, degree, vars } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(suite, max, degree.unwrap_or(max + 2), vars);
            let mut ok = true;
            for rep in &reports {
                println!("{rep}");
                ok &= rep.passed();
            }
            let checks: usize = reports.iter().map(|r| r.checked).sum();
            println!("{} {checks} checks in {} groups", if ok { "PASS" } else { "FAIL" }, reports.len());
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PRECONDITION)
        }
    }
}
