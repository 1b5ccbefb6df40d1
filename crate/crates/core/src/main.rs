use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use twistlab::braid::{normal_form, parse_word, BraidWord};
use twistlab::families::{asymptotic_csv, asymptotic_table, family_script, FamilyId};
use twistlab::moves::{verify_script, MoveScript};
use twistlab::seifert::{
    format_rational, lt_signature, profile_csv, seifert_matrix, signature_arcs,
};
use twistlab::torus::{
    claimed_untwisting_bound, genus_torus, sigma_hat_torus, sigma_table_csv, sigma_torus,
    torus_jumps, TorusParams,
};
use twistlab::{selftest, Error};

/// Braid words, torus-knot signatures and untwisting certificates.
#[derive(Parser)]
#[command(name = "twistlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Garside normal form, permutation and closure components of a word.
    Nf {
        #[arg(long, short)]
        strands: usize,
        /// Letters a..y / A..Y with optional ^k, or a signed list like [1,-2].
        word: String,
    },
    /// Seifert matrix invariants of a knot closure.
    Invariants {
        #[arg(long, short)]
        strands: usize,
        word: String,
        /// Evaluate the signature at s = num/den (repeatable).
        #[arg(long = "s", value_name = "NUM/DEN")]
        points: Vec<String>,
        /// Print the signature profile as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Jump data for T(p,q), or with --table a CSV sweep of T(p,n) for n up to the second number.
    Torus {
        p: i64,
        q: i64,
        #[arg(long)]
        table: bool,
    },
    /// Replay a move script and print its certificate.
    Verify { script: std::path::PathBuf },
    /// Generate the untwisting script of a family member.
    Family {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Doubling table as CSV.
    Asymptotics {
        #[arg(long, default_value_t = 10)]
        kmax: u32,
    },
    /// Run the acceptance checks; one JSON record per criterion.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("values serialize") + "\n"));
}

fn cmd_nf(strands: usize, text: &str) -> Outcome {
    let w = parse_word(text, strands)?;
    let nf = normal_form(&w);
    let factors: Vec<String> = nf
        .factors()
        .iter()
        .map(|f| BraidWord::new(strands, f.to_letters()).map(|w| w.to_text()))
        .collect::<twistlab::Result<_>>()?;
    print_json(&json!({
        "input": text,
        "strands": strands,
        "infimum": nf.infimum(),
        "factors": factors,
        "normal_form": nf.to_word().to_text(),
        "is_identity": nf.is_identity(),
        "permutation": w.permutation().mapping,
        "components": w.closure_components(),
        "exponent_sum": w.exponent_sum(),
    }));
    Ok(())
}

fn cmd_invariants(strands: usize, text: &str, points: &[String], csv: bool) -> Outcome {
    let w = parse_word(text, strands)?;
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components }.into());
    }
    let v = seifert_matrix(&w)?;
    if csv {
        emit(&profile_csv(&v)?);
        return Ok(());
    }
    let arcs = signature_arcs(&v)?;
    let sigma_hat = arcs.iter().map(|a| a.sigma.abs()).max().unwrap_or(0);
    let mut values = Vec::new();
    for p in points {
        let s: BigRational = p
            .parse()
            .map_err(|_| Failure::Usage(format!("cannot read {p:?} as num/den")))?;
        let lt = lt_signature(&v, &s)?;
        values.push(json!({
            "s": format_rational(&lt.s),
            "sigma": lt.sigma,
            "positive_knot_sign": lt.positive_knot_sign(),
            "certified": lt.certified,
        }));
    }
    print_json(&json!({
        "word": w.to_text(),
        "strands": strands,
        "seifert_size": v.size(),
        "genus": v.size() / 2,
        "alexander": v.alexander_poly().to_string(),
        "sigma_hat": sigma_hat,
        "arcs": arcs.iter().map(|a| json!({
            "s_lo": format!("{:.12}", a.s_lo),
            "s_hi": format!("{:.12}", a.s_hi),
            "sigma": a.sigma,
        })).collect::<Vec<_>>(),
        "values": values,
    }));
    Ok(())
}

fn cmd_torus(p: i64, q: i64, table: bool) -> Outcome {
    if table {
        emit(&sigma_table_csv(p, q)?);
        return Ok(());
    }
    let t = TorusParams::new(p, q)?;
    let prof = torus_jumps(&t);
    print_json(&json!({
        "p": t.p(),
        "q": t.q(),
        "sigma": sigma_torus(&t),
        "sigma_hat": sigma_hat_torus(&t),
        "genus": genus_torus(&t),
        "claimed_untwisting_bound": claimed_untwisting_bound(&t),
        "jump_count": prof.jumps.len(),
        "jumps": prof.jumps.iter().zip(&prof.cumulative).map(|(j, c)| json!({
            "x": format_rational(&j.x),
            "delta": j.delta,
            "after": c,
        })).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn cmd_verify(path: &std::path::Path) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let script = MoveScript::from_json(&text)?;
    let cert = verify_script(&script)?;
    emit(&(cert.to_json() + "\n"));
    eprintln!("{}", cert.summary());
    if cert.verified {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_family(name: &str, k: Option<usize>, n: Option<usize>) -> Outcome {
    let family: FamilyId = name.parse()?;
    let (want, got, other) = if family.takes_n() {
        ("--n", n, k)
    } else {
        ("--k", k, n)
    };
    if other.is_some() {
        return Err(Failure::Usage(format!("{family} takes {want} only")));
    }
    let param = got.ok_or_else(|| Failure::Usage(format!("{family} needs {want}")))?;
    let script = family_script(family, param)?;
    emit(&(script.to_json() + "\n"));
    Ok(())
}

fn cmd_asymptotics(kmax: u32) -> Outcome {
    emit(&asymptotic_csv(&asymptotic_table(kmax)?));
    Ok(())
}

fn cmd_selftest(only: Option<u8>) -> Outcome {
    let results = match only {
        Some(id) => vec![selftest::run_criterion(id)
            .ok_or_else(|| Failure::Usage(format!("no criterion {id}; expected 1..=8")))?],
        None => selftest::run_all(),
    };
    for r in &results {
        eprintln!("{}", r.line());
    }
    print_json(&serde_json::to_value(&results).expect("results serialize"));
    if results.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Nf { strands, word } => cmd_nf(*strands, word),
        Command::Invariants {
            strands,
            word,
            points,
            csv,
        } => cmd_invariants(*strands, word, points, *csv),
        Command::Torus { p, q, table } => cmd_torus(*p, *q, *table),
        Command::Verify { script } => cmd_verify(script),
        Command::Family { family, k, n } => cmd_family(family, *k, *n),
        Command::Asymptotics { kmax } => cmd_asymptotics(*kmax),
        Command::Selftest { criterion } => cmd_selftest(*criterion),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
