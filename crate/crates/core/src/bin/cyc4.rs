use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyc4::census::{write_census, CensusOptions};
use cyc4::centralizer::centralizer_search;
use cyc4::classify::classify;
use cyc4::coset::{coset_enumerate, resolve_max_cosets, Enumeration, EnumerationOptions, Strategy};
use cyc4::parse::{parse_presentation, parse_words};
use cyc4::shiftext::abelianize;
use cyc4::verify::{self, Tier};
use cyc4::words::{canonical_rep, orbit, ParamTuple};
use cyc4::{Error, Result};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "cyc4", version, about = "Cyclically presented groups with length-four positive relators")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TupleArgs {
    n: u32,
    #[arg(allow_negative_numbers = true)]
    j: i64,
    #[arg(allow_negative_numbers = true)]
    k: i64,
    #[arg(allow_negative_numbers = true)]
    l: i64,
}

impl TupleArgs {
    fn tuple(&self) -> Result<ParamTuple> {
        ParamTuple::new(self.n, self.j, self.k, self.l)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Classification report for the group on x_i x_{i+j} x_{i+k} x_{i+l}.
    Classify(TupleArgs),
    /// The orbit of the defining word under the symmetry group, with its canonical member.
    Orbit(TupleArgs),
    /// Classify every tuple for n = 1..=N as JSON lines.
    Census {
        #[arg(long)]
        n_max: u32,
        /// One tuple per orbit.
        #[arg(long)]
        dedup: bool,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Coset enumeration; prints the index (the group order for the trivial subgroup).
    Enumerate {
        /// Presentation text, or a file containing it.
        #[arg(long)]
        pres: String,
        /// Comma-separated subgroup generators.
        #[arg(long, default_value = "")]
        subgroup: String,
        #[arg(long)]
        max_cosets: Option<usize>,
        #[arg(long, value_enum, default_value = "hlt")]
        strategy: StrategyArg,
    },
    /// Smith normal form of the relation matrix.
    Abelianize(TupleArgs),
    /// Words centralizing a generator, found from fixed columns of the coset table.
    Centralizer {
        #[arg(long)]
        pres: String,
        /// Generator letter whose cyclic subgroup is enumerated.
        #[arg(long)]
        subgroup_gen: String,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// How many candidates to certify.
        #[arg(long, default_value_t = 3)]
        checks: usize,
    },
    /// Run the built-in golden checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
}

fn read_presentation(arg: &str) -> Result<cyc4::fp::Presentation> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('<') && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::BadShape(format!("{arg}: {e}")))?;
        return parse_presentation(&text);
    }
    parse_presentation(arg)
}

/// Prints one result; a closed stdout (e.g. piped into `head`) is not an error.
fn emit(json: bool, value: serde_json::Value, human: impl FnOnce() -> String) {
    let text = if json { value.to_string() } else { human() };
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn big_json(d: &num_bigint::BigInt) -> serde_json::Value {
    match u64::try_from(d) {
        Ok(v) => v.into(),
        Err(_) => d.to_string().into(),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Classify(args) => {
            let r = classify(&args.tuple()?);
            emit(json, serde_json::to_value(&r).expect("report serializes"), || {
                let order = r.predicted_order.map_or("-".to_string(), |o| o.to_string());
                let kind = r.iso_type.map_or("-".to_string(), |t| t.to_string());
                format!(
                    "tuple       {}\nA B C       {} {} {}\nc gamma     {} {}\ntype        {kind}\nfinite      {}\norder       {order}\naspherical  {:?}\nfixed point {}\nfree        {:?}\nclause      {}\nnote        {}",
                    r.tuple, r.conditions.a, r.conditions.b, r.conditions.c, r.c, r.gamma, r.finite,
                    r.aspherical, r.fixed_point, r.free_action, r.fired_clause, r.structure_note
                )
            });
            Ok(0)
        }
        Command::Orbit(args) => {
            let w = args.tuple()?.word();
            let members: Vec<String> = orbit(&w).iter().map(|m| m.to_string()).collect();
            let rep = canonical_rep(&w).to_string();
            emit(json, json!({ "word": w.to_string(), "canonical": rep, "size": members.len(), "orbit": members }), || {
                format!("canonical {rep}\nsize {}\n{}", members.len(), members.join("\n"))
            });
            Ok(0)
        }
        Command::Census { n_max, dedup, out, jobs } => {
            let opts = CensusOptions { n_max, dedup, jobs: jobs.max(1) };
            let io_err = |e: io::Error| Error::BadShape(e.to_string());
            let lines = match &out {
                Some(path) => {
                    let mut f = BufWriter::new(File::create(path).map_err(io_err)?);
                    write_census(&opts, &mut f).map_err(io_err)?
                }
                None => write_census(&opts, &mut io::stdout().lock()).map_err(io_err)?,
            };
            if let Some(path) = out {
                emit(json, json!({ "lines": lines, "out": path }), || format!("{lines} lines written to {path}"));
            }
            Ok(0)
        }
        Command::Enumerate { pres, subgroup, max_cosets, strategy } => {
            let p = read_presentation(&pres)?;
            let h = parse_words(&subgroup, &p)?;
            let opts = EnumerationOptions {
                max_cosets: resolve_max_cosets(max_cosets),
                strategy: match strategy {
                    StrategyArg::Hlt => Strategy::Hlt,
                    StrategyArg::Felsch => Strategy::Felsch,
                },
                ..Default::default()
            };
            match coset_enumerate(&p, &h, &opts)? {
                Enumeration::Complete(t) => {
                    let index = t.index();
                    emit(json, json!({ "complete": true, "index": index, "stats": t.stats }), || index.to_string());
                    Ok(0)
                }
                Enumeration::Overflow { limit, stats } => {
                    emit(json, json!({ "complete": false, "limit": limit, "stats": stats }), || {
                        format!("overflow: more than {limit} cosets")
                    });
                    Ok(EXIT_RESOURCE)
                }
            }
        }
        Command::Abelianize(args) => {
            let s = abelianize(&args.tuple()?);
            emit(json, json!({ "invariant_factors": s.invariant_factors.iter().map(big_json).collect::<Vec<_>>(), "free_rank": s.free_rank, "group": s.to_string() }), || {
                s.to_string()
            });
            Ok(0)
        }
        Command::Centralizer { pres, subgroup_gen, max_cosets, checks } => {
            let p = read_presentation(&pres)?;
            let gen = p.generator_index(&subgroup_gen).ok_or_else(|| Error::UnknownGenerator(subgroup_gen.clone()))?;
            let opts = EnumerationOptions::with_max_cosets(resolve_max_cosets(max_cosets));
            let report = centralizer_search(&p, gen, &opts, checks)?;
            let overflow = report.index.is_none();
            emit(json, serde_json::to_value(&report).expect("report serializes"), || {
                let mut lines = vec![format!(
                    "index {}\nfixed columns {}",
                    report.index.map_or("overflow".into(), |i| i.to_string()),
                    report.fixed_columns
                )];
                for c in &report.candidates {
                    let status = c.certification.map_or("unchecked".to_string(), |x| format!("{:?}", x.verdict));
                    lines.push(format!("{status:<18} {}", c.text));
                }
                lines.join("\n")
            });
            Ok(if overflow { EXIT_RESOURCE } else { 0 })
        }
        Command::VerifyPaper { tier, max_cosets } => {
            let tier = match tier {
                TierArg::Fast => Tier::Fast,
                TierArg::Full => Tier::Full,
            };
            let results = verify::run(tier, resolve_max_cosets(max_cosets), |r| {
                let mark = if r.skipped { "SKIP" } else if r.passed { "PASS" } else { "FAIL" };
                emit(json, serde_json::to_value(r).expect("result serializes"), || {
                    format!("[{mark}] {:>2} {:<26} {:>8.2}s  {}", r.id, r.name, r.seconds, r.detail)
                });
                let _ = io::stdout().flush();
            });
            Ok(if results.iter().all(|r| r.passed) { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Overflow(_) => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            })
        }
    }
}
