mod input;
mod jet_expr;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use semiring_pss::jets::{jet_in_positivator, jet_is_positive, SignSequence};
use semiring_pss::poly::{power_universal, verify_curious_identity};
use semiring_pss::pss::{dominance_decide, Budget, Certificate, DecisionOutcome};
use semiring_pss::rational::parse_rational;
use semiring_pss::sample::seed_from_env;
use semiring_pss::spectrum::{
    enumerate_spectrum_boundary, evaluate, lev, strict_dominance_check, DominanceVerdict, SpectrumPoint, TieLocus,
};

/// Exact preordered-semiring tools: polynomial dominance, spectra and jets.
///
/// Polynomial arguments are file paths or inline text, either JSON
/// (`{"vars":2,"terms":[{"exp":[1,0],"coeff":"3/2"}]}`) or a univariate
/// literal such as `1+2X+X^2`. Set SEMIRING_PSS_SEED to fix sampling.
#[derive(Parser)]
#[command(name = "semiring-pss", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide x <= y up to a catalyst, or refute it on the spectrum.
    Dominance {
        x: String,
        y: String,
        #[arg(long, default_value_t = 24)]
        kmax: u32,
        #[arg(long, default_value_t = 24)]
        nmax: u32,
        /// Random points for multivariate real sampling.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the compactified spectrum and write NDJSON records.
    Spectrum {
        x: String,
        y: String,
        #[arg(long, default_value_t = 10)]
        resolution: u32,
        /// Output file; records go to stdout when absent.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Verify the polynomial identity in the A_i, B_j, X, Y variables.
    Identity {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate a jet expression in R[X]/(X^n) and test positivity.
    Jet {
        #[arg(long)]
        n: usize,
        /// Sign sequence such as "+,-"; all plus by default.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        expr: String,
    },
    /// Evaluate a polynomial at a projective spectrum point "r0:r1:...".
    Eval {
        p: String,
        #[arg(long)]
        point: String,
    },
}

/// Successful run: 0 when decided, 2 when the answer is open.
enum Status {
    Decided,
    Open,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(Status::Decided) => ExitCode::SUCCESS,
        Ok(Status::Open) => ExitCode::from(2),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Result<Status> {
    match cmd {
        Command::Dominance { x, y, kmax, nmax, samples, json } => {
            let budget = Budget { k_max: kmax, n_max: nmax, seed: seed_from_env(), samples };
            dominance(&x, &y, &budget, json, out)
        }
        Command::Spectrum { x, y, resolution, out: path, samples } => spectrum(&x, &y, resolution, path, samples, out),
        Command::Identity { n } => identity(n, out),
        Command::Jet { n, signs, expr } => jet(n, signs, &expr, out),
        Command::Eval { p, point } => eval(&p, &point, out),
    }
}

fn describe(v: &DominanceVerdict) -> String {
    match v {
        DominanceVerdict::StrictEverywhere => "strict everywhere".into(),
        DominanceVerdict::RefutedAt { point, x_value, y_value } => {
            format!("refuted at {point}: x = {x_value}, y = {y_value}")
        }
        DominanceVerdict::TieAt { locus: TieLocus::Exact(p) } => format!("tie at {p}"),
        DominanceVerdict::TieAt { locus: TieLocus::RealRootInterval { lo, hi } } => {
            format!("tie at a real root in ({lo}, {hi})")
        }
        DominanceVerdict::UnknownHeuristic(r) => format!(
            "no refutation in {} grid and {} random points, min gap {}",
            r.grid_points, r.random_points, r.min_real_gap
        ),
    }
}

fn dominance(x: &str, y: &str, budget: &Budget, as_json: bool, out: &mut impl Write) -> Result<Status> {
    let (x, y) = input::pair(x, y)?;
    let u = power_universal(x.vars());
    let outcome = dominance_decide(&x, &y, &u, budget)?;
    let status = match outcome {
        DecisionOutcome::BudgetExhausted { .. } => Status::Open,
        _ => Status::Decided,
    };
    if as_json {
        let v = match &outcome {
            DecisionOutcome::WitnessFound { power, catalytic } => json!({
                "verdict": "witness-found",
                "power": Certificate::power(power, &u),
                "catalytic": Certificate::catalytic(catalytic),
                "verified_range": power.verified_range,
            }),
            DecisionOutcome::ImpossibleForever { refutation } => json!({
                "verdict": "impossible",
                "refutation": refutation,
            }),
            DecisionOutcome::BudgetExhausted { verdict, k_max, n_max } => json!({
                "verdict": "budget-exhausted",
                "spectrum": verdict,
                "k_max": k_max,
                "n_max": n_max,
            }),
        };
        writeln!(out, "{}", serde_json::to_string(&v)?)?;
        return Ok(status);
    }
    match &outcome {
        DecisionOutcome::WitnessFound { power, catalytic } => {
            writeln!(out, "verdict: witness found")?;
            writeln!(out, "power witness: k = {}, n = {}, verified n in {:?}", power.k, power.n, power.verified_range)?;
            writeln!(out, "catalyst: {}", catalytic.a)?;
            writeln!(out, "certificate: {}", Certificate::catalytic(catalytic).to_json())?;
        }
        DecisionOutcome::ImpossibleForever { refutation } => {
            writeln!(out, "verdict: impossible")?;
            writeln!(out, "counterexample: {}", describe(refutation))?;
        }
        DecisionOutcome::BudgetExhausted { verdict, k_max, n_max } => {
            writeln!(out, "verdict: budget exhausted (k <= {k_max}, n <= {n_max})")?;
            writeln!(out, "spectrum: {}", describe(verdict))?;
        }
    }
    Ok(status)
}

fn spectrum(
    x: &str,
    y: &str,
    resolution: u32,
    path: Option<String>,
    samples: usize,
    out: &mut impl Write,
) -> Result<Status> {
    let (x, y) = input::pair(x, y)?;
    let records = enumerate_spectrum_boundary(&x, &y, resolution)?;
    let mut body = String::new();
    for r in &records {
        body.push_str(&r.to_ndjson());
        body.push('\n');
    }
    match &path {
        Some(p) => fs::write(p, &body).with_context(|| format!("writing {p}"))?,
        None => out.write_all(body.as_bytes())?,
    }
    let verdict = strict_dominance_check(&x, &y, seed_from_env(), samples)?;
    let summary = format!("records: {}\nverdict: {}\n", records.len(), describe(&verdict));
    if path.is_some() {
        out.write_all(summary.as_bytes())?;
    } else {
        eprint!("{summary}");
    }
    Ok(match verdict {
        DominanceVerdict::UnknownHeuristic(_) => Status::Open,
        _ => Status::Decided,
    })
}

fn identity(n: usize, out: &mut impl Write) -> Result<Status> {
    let r = verify_curious_identity(n);
    if !r.equal || !r.matches_closed_form {
        bail!("identity fails for n = {n}");
    }
    writeln!(out, "EQUAL")?;
    writeln!(out, "terms: {}", r.term_count())?;
    Ok(Status::Decided)
}

fn jet(n: usize, signs: Option<String>, expr: &str, out: &mut impl Write) -> Result<Status> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let eps: SignSequence = match signs {
        Some(s) => s.parse()?,
        None => SignSequence::all_plus(n),
    };
    if eps.len() != n {
        bail!("expected {n} signs, got {}", eps.len());
    }
    let a = jet_expr::evaluate(expr, n)?;
    writeln!(out, "jet: {a}")?;
    writeln!(out, "positive: {}", jet_is_positive(&a, &eps)?)?;
    writeln!(out, "positivator: {}", jet_in_positivator(&a, &eps)?)?;
    Ok(Status::Decided)
}

fn eval(p: &str, point: &str, out: &mut impl Write) -> Result<Status> {
    let p = input::polynomial(p)?;
    let coords = point
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(':')
        .map(parse_rational)
        .collect::<semiring_pss::Result<Vec<_>>>()?;
    let phi = SpectrumPoint::from_projective(&coords)?;
    if phi.dim() != p.vars() {
        bail!("point has {} coordinates after r0, polynomial has {} variables", phi.dim(), p.vars());
    }
    writeln!(out, "point: {phi}")?;
    match phi {
        SpectrumPoint::RealEval(_) => writeln!(out, "value: {}", evaluate(&p, &phi)?)?,
        SpectrumPoint::TropicalDir(_) => writeln!(out, "exponent: {}", evaluate(&p, &phi)?)?,
    }
    if !p.is_zero() {
        writeln!(out, "lev: {}", lev(&p, &phi, &power_universal(p.vars()))?)?;
    }
    Ok(Status::Decided)
}
