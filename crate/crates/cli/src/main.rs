use std::process::ExitCode;

use bintersect_cli::Report;
use bintersect_core::{
    characterize_traced, classify_infinite_form, fixtures, verify, Error, InfiniteFormDetail,
    IntersectionDescription, Shape, TraceEvent, Word,
};
use clap::{Args, Parser, Subcommand};

const INVALID_INPUT: u8 = 2;
const INCONSISTENT: u8 = 3;
const NOT_EQUAL: u8 = 4;

/// Describe the intersection of two free monoids {x,y}* and {u,v}*.
#[derive(Parser)]
#[command(name = "bintersect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the shape and generators of the intersection.
    Characterize(CodeArgs),
    /// Characterize, then compare with brute force up to a length.
    Verify(CodeArgs),
    /// Run the built-in examples against their expected values.
    Fixtures {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 24)]
        verify_max_len: usize,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    /// Print the structured report.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 24)]
    verify_max_len: usize,
    /// Log every matcher step to stderr.
    #[arg(long)]
    trace: bool,
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::InternalInconsistency(_)
        | Error::DecompositionFailure(..)
        | Error::MissingBlock(_) => INCONSISTENT,
        _ => INVALID_INPUT,
    }
}

struct Described {
    words: [Word; 4],
    desc: IntersectionDescription,
    detail: Option<InfiniteFormDetail>,
}

fn describe(args: &CodeArgs) -> Result<Described, Error> {
    let words = [&args.x, &args.y, &args.u, &args.v].map(|s| Word::from(s.as_str()));
    let [x, y, u, v] = &words;
    let trace = args.trace;
    let mut log = |e: &TraceEvent| {
        if trace {
            eprintln!("{e}");
        }
    };
    let desc = characterize_traced(x, y, u, v, &mut log)?;
    let detail = match desc.shape {
        Shape::InfiniteFamily(_) => Some(classify_infinite_form(&desc)?),
        _ => None,
    };
    Ok(Described {
        words,
        desc,
        detail,
    })
}

fn codes(args: &CodeArgs, check: bool) -> ExitCode {
    let d = match describe(args) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    let [x, y, u, v] = &d.words;
    let verification = check.then(|| verify(x, y, u, v, &d.desc, args.verify_max_len));
    let report = Report::new(&d.desc, d.detail.as_ref(), verification.as_ref());
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    match verification {
        Some(v) if !v.equal => ExitCode::from(NOT_EQUAL),
        _ => ExitCode::SUCCESS,
    }
}

fn run_fixtures(json: bool, max_len: usize) -> ExitCode {
    let mut rows = Vec::new();
    for fx in fixtures::all() {
        let problems = match fixtures::check(&fx) {
            Ok((desc, mut problems)) => {
                let v = verify(&fx.x, &fx.y, &fx.u, &fx.v, &desc, max_len);
                if !v.equal {
                    problems.push(format!(
                        "verify at {max_len}: missing {:?}, extra {:?}",
                        v.missing, v.extra
                    ));
                }
                problems
            }
            Err(e) => vec![e.to_string()],
        };
        rows.push((fx.name, problems));
    }
    let failed = rows.iter().filter(|(_, p)| !p.is_empty()).count();
    if json {
        let value: Vec<serde_json::Value> = rows
            .iter()
            .map(|(name, problems)| {
                serde_json::json!({"name": name, "ok": problems.is_empty(), "problems": problems})
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("plain values serialize")
        );
    } else {
        for (name, problems) in &rows {
            if problems.is_empty() {
                println!("ok        {name}");
            } else {
                println!("MISMATCH  {name}: {}", problems.join("; "));
            }
        }
        println!("{} of {} fixtures match", rows.len() - failed, rows.len());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INCONSISTENT)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Characterize(args) => codes(&args, false),
        Command::Verify(args) => codes(&args, true),
        Command::Fixtures {
            json,
            verify_max_len,
        } => run_fixtures(json, verify_max_len),
    }
}
