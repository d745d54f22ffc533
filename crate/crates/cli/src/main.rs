use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perm_witness::config::{DEFAULT_GROUP_CAP, DEFAULT_ITERATION_CAP, DEFAULT_SEARCH_BUDGET, DEFAULT_SEED};
use perm_witness::corpus::{enumerate_solvable, CorpusError, Family};
use perm_witness::coset::CosetError;
use perm_witness::group::GroupError;
use perm_witness::oracle::{reg_count, verify_certificate, OracleError, RegMode};
use perm_witness::{solve, Ambient, Config, PermGroup, Permutation, WitnessCertificate, WitnessError};
use serde_json::json;

#[derive(Parser)]
#[command(name = "perm-witness", version, about = "Trivial-intersection certificates for solvable permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a certificate for G in the ambient group.
    Solve {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a certificate read from a file, or stdin with `-`.
    Verify {
        path: String,
        #[command(flatten)]
        common: Common,
    },
    /// Count regular orbits of the ambient group on m-tuples of cosets of G.
    Reg {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[command(flatten)]
        common: Common,
    },
    /// Write the catalog of solvable subgroups of S_n up to conjugacy.
    Enumerate {
        #[arg(long)]
        degree: usize,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Generators and order of the intersection of G^x over the given x.
    Intersect {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, num_args = 1.., required = true)]
        conj: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Degree n; implied by --family.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = AmbientArg::Symmetric)]
    ambient: AmbientArg,
    /// Generators in cycle notation, e.g. "(1,2,3)(4,5)".
    #[arg(long, num_args = 0..)]
    gens: Vec<String>,
    /// Named family such as wreath(3,2), direct(2,3) or agl1(5).
    #[arg(long, conflicts_with = "gens")]
    family: Option<String>,
}

#[derive(Args)]
struct Common {
    /// Largest group order enumerated element by element.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    cap_group: u128,
    /// Largest tuple scan for exact counts.
    #[arg(long, default_value_t = DEFAULT_ITERATION_CAP)]
    cap_iter: u128,
    /// Candidate evaluations allowed per search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Common {
    fn config(&self) -> Config {
        Config {
            group_cap: self.cap_group,
            iteration_cap: self.cap_iter,
            search_budget: self.budget,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AmbientArg {
    Symmetric,
    Alternating,
}

impl From<AmbientArg> for Ambient {
    fn from(a: AmbientArg) -> Ambient {
        match a {
            AmbientArg::Symmetric => Ambient::Symmetric,
            AmbientArg::Alternating => Ambient::Alternating,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Bound,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failure with its exit code and a one-line reason.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

const REFUTED: u8 = 1;
const USAGE: u8 = 2;
const CAP: u8 = 3;
const EXHAUSTED: u8 = 4;

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    fn cap(message: impl Into<String>) -> Failure {
        Failure {
            code: CAP,
            kind: "cap",
            message: message.into(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Failure {
        match e {
            GroupError::CapExceeded { .. } => Failure::cap(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<CosetError> for Failure {
    fn from(e: CosetError) -> Failure {
        match e {
            CosetError::IndexCapExceeded { .. } => Failure::cap(e.to_string()),
            CosetError::Group(g) => g.into(),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        match e {
            OracleError::CapExceeded { .. } => Failure::cap(e.to_string()),
            OracleError::Group(g) => g.into(),
            OracleError::Coset(c) => c.into(),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Failure {
        match e {
            WitnessError::SearchExhausted(why) => Failure {
                code: EXHAUSTED,
                kind: "search-exhausted",
                message: why,
            },
            WitnessError::Rejected(why) => Failure {
                code: REFUTED,
                kind: "refuted",
                message: why,
            },
            WitnessError::Group(g) => g.into(),
            WitnessError::Coset(c) => c.into(),
            WitnessError::Oracle(o) => o.into(),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Failure {
        Failure::usage(e.to_string())
    }
}

fn read_group(args: &GroupArgs) -> Result<(PermGroup, Ambient), Failure> {
    let ambient = Ambient::from(args.ambient);
    let group = match &args.family {
        Some(tag) => {
            let family: Family = tag.parse().map_err(|e: CorpusError| Failure::usage(e.to_string()))?;
            if args.degree.is_some_and(|d| d != family.degree()) {
                return Err(Failure::usage(format!("{tag} has degree {}", family.degree())));
            }
            family.group()?
        }
        None => {
            let degree = args
                .degree
                .ok_or_else(|| Failure::usage("--degree is required unless --family is given"))?;
            PermGroup::from_cycle_strings(degree, &args.gens)?
        }
    };
    Ok((group, ambient))
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::usage(format!("write failed: {e}")))
}

fn certificate_text(cert: &WitnessCertificate) -> String {
    let mut s = format!(
        "degree {} ambient {}\ngenerators {}\nconjugators {}\ntrace {}\nverified {}",
        cert.degree,
        cert.ambient,
        cert.generators.join(" "),
        cert.conjugators.join(" "),
        cert.trace.join(" > "),
        cert.verified
    );
    if let Some(tuples) = &cert.regular_tuples {
        for t in tuples {
            s.push_str(&format!("\ntuple {}", t.join(" ")));
        }
    }
    s
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { group, common } => {
            let (g, ambient) = read_group(&group)?;
            let cert = solve(&g, ambient, &common.config())?;
            match common.format {
                Format::Json => emit(out, &cert.to_json()),
                Format::Text => emit(out, &certificate_text(&cert)),
            }
        }
        Command::Verify { path, common } => {
            let text = if path == "-" {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
                buf
            } else {
                fs::read_to_string(&path).map_err(|e| Failure::usage(format!("{path}: {e}")))?
            };
            let cert = WitnessCertificate::from_json(&text).map_err(|e| Failure::usage(format!("certificate: {e}")))?;
            let report = verify_certificate(&cert, &common.config())?;
            match common.format {
                Format::Json => emit(out, &serde_json::to_string_pretty(&report).expect("report serializes"))?,
                Format::Text => {
                    let order = report
                        .intersection_order
                        .map_or("unknown".to_string(), |o| o.to_string());
                    emit(out, &format!("ok {}\nintersection order {order}", report.certificate_ok))?;
                    for p in &report.problems {
                        emit(out, &format!("problem {p}"))?;
                    }
                }
            }
            if !report.caps_hit.is_empty() {
                Err(Failure::cap(report.caps_hit.join("; ")))
            } else if !report.certificate_ok {
                Err(Failure {
                    code: REFUTED,
                    kind: "refuted",
                    message: report.problems.join("; "),
                })
            } else {
                Ok(())
            }
        }
        Command::Reg { group, m, mode, common } => {
            let (g, ambient) = read_group(&group)?;
            let mode = match mode {
                ModeArg::Exact => RegMode::Exact,
                ModeArg::Bound => RegMode::Bound,
            };
            let count = reg_count(&g, ambient, m, mode, &common.config())?;
            match common.format {
                Format::Json => {
                    let doc = json!({
                        "degree": g.degree(),
                        "ambient": ambient,
                        "m": m,
                        "count": count,
                    });
                    emit(out, &serde_json::to_string_pretty(&doc).expect("count serializes"))
                }
                Format::Text => match count.value() {
                    Some(v) => emit(out, &format!("reg {v}")),
                    None => emit(out, &format!("reg >= {}", count.lower_bound())),
                },
            }
        }
        Command::Enumerate { degree, output, common } => {
            let catalog = enumerate_solvable(degree)?;
            let text = match common.format {
                Format::Json => catalog.to_json(),
                Format::Text => catalog
                    .entries
                    .iter()
                    .map(|e| format!("{} [{}] {}", e.order, e.tags.join(","), e.generators.join(" ")))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            match output {
                Some(path) => fs::write(&path, text + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
                None => emit(out, &text),
            }
        }
        Command::Intersect { group, conj, common } => {
            let (g, _) = read_group(&group)?;
            let xs = conj
                .iter()
                .map(|s| Permutation::parse_cycles(s, g.degree()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::usage(e.to_string()))?;
            let inter = g.intersect_conjugates(&xs, common.cap_group)?;
            let gens: Vec<String> = inter.generators().iter().map(ToString::to_string).collect();
            match common.format {
                Format::Json => {
                    let doc = json!({"degree": g.degree(), "generators": gens, "order": inter.order()});
                    emit(out, &serde_json::to_string_pretty(&doc).expect("intersection serializes"))
                }
                Format::Text => emit(out, &format!("order {}\ngenerators {}", inter.order(), gens.join(" "))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or_default();
            eprintln!("error: usage: {}", line.trim_start_matches("error: "));
            return ExitCode::from(USAGE);
        }
    };
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}: {}", f.kind, f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}
