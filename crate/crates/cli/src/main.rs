//! `efdepth` — generate the registry graphs, evaluate and synthesize
//! first-order sentences, solve Ehrenfeucht-Fraisse games exactly, verify
//! scripted Duplicator policies, and emit machine-checkable bound
//! certificates.
//!
//! Exit codes: 0 success / true, 1 false or negative result, 2 usage or
//! input error, 3 verification failure, 4 solver budget exceeded.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use efdepth_core::cert::{
    certify_lower_with_budget, certify_upper, general_lower_bound, run_suite, search_pair,
    CertError, SuiteLevel, SuiteOptions,
};
use efdepth_core::game::{
    extract_distinguishing, scripted_policy, play_interactive, solve_with_budget,
    solve_with_strategy, verify_policy, GameError, Role, DEFAULT_NODE_BUDGET,
};
use efdepth_core::graph::{
    decode, encode, gen_instance, generate, GenTarget, GraphFormat, InstanceBundle,
};
use efdepth_core::logic::{evaluate, parse, print, synth_thm11, Assignment};
use efdepth_core::Graph;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "efdepth", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph or a named instance bundle.
    ///
    /// Specs: path(L), cycle(L), complete(L), empty(L),
    /// complete_multipartite(n1,...,nk), almost_multipartite(classes,parts,
    /// components), thm1_2(m), thm2(m,k,(n1,...,nk)), thm3_c5, thm3_g41,
    /// thm3_diamond, thm3_g311.
    Gen {
        /// Family or instance spec, e.g. "path(4)" or "thm2(1,2,(2,2))"
        spec: String,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Output format for single graphs
        #[arg(long, value_enum, default_value_t = FormatArg::G6)]
        format: FormatArg,
        /// For instance bundles: emit just this member as a plain graph
        #[arg(long, value_enum)]
        role: Option<RoleArg>,
    },
    /// Evaluate a sentence on a graph; prints true/false.
    Eval {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        graph: String,
    },
    /// Print the quantifier depth of a formula.
    Depth {
        #[arg(long)]
        formula: String,
    },
    /// Synthesize the depth-(v(H)+3) sentence for "contains P3 + K1 + H".
    Synth {
        /// Graph file (or "-") holding H
        #[arg(long)]
        target: String,
    },
    /// Solve the r-round game on two graphs; prints the winner.
    Ef {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rounds: usize,
        /// Write the winning side's strategy table as JSON
        #[arg(long)]
        strategy: Option<PathBuf>,
        /// Solver state budget
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Exhaustively verify a scripted Duplicator policy on its instance.
    #[command(name = "verify-policy")]
    VerifyPolicy {
        /// Policy name: thm1_2 or thm2
        #[arg(long)]
        name: String,
        /// Instance spec the policy plays on, e.g. "thm1_2(2)"
        #[arg(long)]
        instance: String,
    },
    /// Extract a sentence separating two graphs from a Spoiler win.
    Distinguish {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rounds: usize,
    },
    /// Play the game interactively against the engine.
    Play {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rounds: usize,
        #[arg(long = "as", value_enum)]
        role: PlayRole,
    },
    /// Certify a lower bound D[F] >= r+1 from a host pair.
    #[command(name = "certify-lower")]
    CertifyLower {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rounds: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a sentence against brute force on all graphs up to a size.
    #[command(name = "certify-upper")]
    CertifyUpper {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        formula: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Arithmetic lower bound for D[F]; prints the integer bound.
    Bound {
        #[arg(long)]
        pattern: String,
        /// Also maximize over the edge complement
        #[arg(long)]
        complement: bool,
    },
    /// Search small host pairs for a lower-bound certificate.
    #[command(name = "search-pair")]
    SearchPair {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        rounds: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Maximum number of games to solve
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Run the verification suite and print the pass/fail table.
    Suite {
        #[arg(long, value_enum, default_value_t = LevelArg::Core)]
        level: LevelArg,
        /// Seed for the randomized battery
        #[arg(long, default_value_t = 0xefde)]
        seed: u64,
        /// Directory to write certificate files into
        #[arg(long = "cert-dir")]
        cert_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Pattern,
    Positive,
    Negative,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayRole {
    Spoiler,
    Duplicator,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Core,
    Extended,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(classify(&e))
        }
    }
}

/// Maps library failures onto the exit-code contract.
fn classify(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(game) = cause.downcast_ref::<GameError>() {
            return match game {
                GameError::BudgetExceeded { .. } => 4,
                GameError::NoSpoilerWin => 1,
                GameError::PolicyMismatch(_)
                | GameError::PolicyStuck { .. }
                | GameError::UnknownPolicy(_) => 3,
                _ => 2,
            };
        }
        if let Some(cert) = cause.downcast_ref::<CertError>() {
            return match cert {
                CertError::Game(GameError::BudgetExceeded { .. }) => 4,
                CertError::PatternInNegative
                | CertError::PatternMissingFromPositive
                | CertError::SpoilerWins { .. } => 3,
                _ => 2,
            };
        }
    }
    2
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Gen {
            spec,
            output,
            format,
            role,
        } => {
            let target: GenTarget = spec.parse().map_err(|e: String| anyhow!(e))?;
            let text = match target {
                GenTarget::Family(f) => {
                    if role.is_some() {
                        bail!("--role only applies to instance bundles");
                    }
                    render_graph(&generate(&f)?, format)?
                }
                GenTarget::Instance(inst) => {
                    let bundle = gen_instance(&inst)?;
                    match role {
                        Some(r) => render_graph(bundle_member(&bundle, r), format)?,
                        None => render_bundle(&bundle)?,
                    }
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Eval { formula, graph } => {
            let f = read_formula(&formula)?;
            let g = read_graph(&graph)?;
            let value = evaluate(&f, &g, &Assignment::new())?;
            println!("{value}");
            Ok(if value { 0 } else { 1 })
        }
        Command::Depth { formula } => {
            let f = read_formula(&formula)?;
            println!("{}", f.quantifier_depth());
            Ok(0)
        }
        Command::Synth { target } => {
            let h = read_graph(&target)?;
            println!("{}", print(&synth_thm11(&h)));
            Ok(0)
        }
        Command::Ef {
            left,
            right,
            rounds,
            strategy,
            budget,
        } => {
            let g = read_graph(&left)?;
            let h = read_graph(&right)?;
            if let Some(path) = strategy {
                let (outcome, table) = solve_with_strategy(&g, &h, rounds, budget)?;
                std::fs::write(&path, serde_json::to_string_pretty(&table)?)
                    .with_context(|| format!("writing {}", path.display()))?;
                eprintln!(
                    "strategy table: {} entries for the {}",
                    table.moves.len(),
                    outcome.winner
                );
                println!("{}", outcome.winner);
            } else {
                let outcome = solve_with_budget(&g, &h, rounds, budget)?;
                println!("{}", outcome.winner);
            }
            Ok(0)
        }
        Command::VerifyPolicy { name, instance } => {
            let target: GenTarget = instance.parse().map_err(|e: String| anyhow!(e))?;
            let GenTarget::Instance(inst) = target else {
                bail!("--instance must name an instance, not a plain family");
            };
            let policy = scripted_policy(&inst)?;
            if policy.name() != name {
                bail!(
                    "policy `{name}` does not match instance `{inst}` (expected `{}`)",
                    policy.name()
                );
            }
            let bundle = gen_instance(&inst)?;
            let (ok, counterexample) = verify_policy(
                &bundle.positive,
                &bundle.negative,
                bundle.rounds,
                policy.as_ref(),
            );
            if ok {
                println!("ok");
                eprintln!(
                    "policy `{name}` holds on every Spoiler line of {} rounds",
                    bundle.rounds
                );
                Ok(0)
            } else {
                println!("{}", counterexample.expect("failure carries a transcript"));
                Ok(3)
            }
        }
        Command::Distinguish {
            left,
            right,
            rounds,
        } => {
            let g = read_graph(&left)?;
            let h = read_graph(&right)?;
            let f = extract_distinguishing(&g, &h, rounds)?;
            println!("{}", print(&f));
            Ok(0)
        }
        Command::Play {
            left,
            right,
            rounds,
            role,
        } => {
            let g = read_graph(&left)?;
            let h = read_graph(&right)?;
            let role = match role {
                PlayRole::Spoiler => Role::Spoiler,
                PlayRole::Duplicator => Role::Duplicator,
            };
            let stdin = std::io::stdin();
            let stdout = std::io::stdout();
            play_interactive(&g, &h, rounds, role, stdin.lock(), stdout.lock())?;
            Ok(0)
        }
        Command::CertifyLower {
            pattern,
            left,
            right,
            rounds,
            budget,
            output,
        } => {
            let f = read_graph(&pattern)?;
            let g = read_graph(&left)?;
            let h = read_graph(&right)?;
            let cert = certify_lower_with_budget(&f, &g, &h, rounds, budget)?;
            let json = cert.to_json();
            if let Some(path) = &output {
                std::fs::write(path, &json)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!("{json}");
            Ok(0)
        }
        Command::CertifyUpper {
            pattern,
            formula,
            max_n,
            output,
        } => {
            let pat = read_graph(&pattern)?;
            let f = read_formula(&formula)?;
            let (cert, counterexample) = certify_upper(&pat, &f, max_n)?;
            eprintln!(
                "note: agreement checked on every graph up to {max_n} vertices; \
                 this is instance verification, not a proof over all graphs"
            );
            let json = cert.to_json();
            if let Some(path) = &output {
                std::fs::write(path, &json)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!("{json}");
            match counterexample {
                None => Ok(0),
                Some(g) => {
                    let g6 = String::from_utf8(encode(&g, GraphFormat::Graph6)?).unwrap();
                    eprintln!("counterexample graph: {g6}");
                    Ok(3)
                }
            }
        }
        Command::Bound {
            pattern,
            complement,
        } => {
            let f = read_graph(&pattern)?;
            let (real, bound) = general_lower_bound(&f, complement)?;
            eprintln!("real-valued maximum: {real}");
            println!("{bound}");
            Ok(0)
        }
        Command::SearchPair {
            pattern,
            rounds,
            max_n,
            budget,
        } => {
            let f = read_graph(&pattern)?;
            let outcome = search_pair(&f, rounds, max_n, budget)?;
            eprintln!("games solved: {}", outcome.games_solved);
            match outcome.certificate {
                Some(cert) => {
                    println!("{}", cert.to_json());
                    Ok(0)
                }
                None => {
                    println!("none");
                    if outcome.budget_exhausted {
                        eprintln!("search stopped on budget");
                        Ok(4)
                    } else {
                        Ok(1)
                    }
                }
            }
        }
        Command::Suite {
            level,
            seed,
            cert_dir,
        } => {
            let level = match level {
                LevelArg::Core => SuiteLevel::Core,
                LevelArg::Extended => SuiteLevel::Extended,
            };
            let report = run_suite(level, &SuiteOptions { seed, cert_dir });
            println!("{report}");
            Ok(if report.passed { 0 } else { 3 })
        }
    }
}

fn bundle_member(bundle: &InstanceBundle, role: RoleArg) -> &Graph {
    match role {
        RoleArg::Pattern => &bundle.pattern,
        RoleArg::Positive => &bundle.positive,
        RoleArg::Negative => &bundle.negative,
    }
}

fn render_graph(g: &Graph, format: FormatArg) -> Result<String> {
    let bytes = match format {
        FormatArg::G6 => {
            let mut b = encode(g, GraphFormat::Graph6)?;
            b.push(b'\n');
            b
        }
        FormatArg::Edgelist => encode(g, GraphFormat::EdgeList)?,
    };
    Ok(String::from_utf8(bytes).expect("both encodings are ASCII"))
}

fn render_bundle(bundle: &InstanceBundle) -> Result<String> {
    let g6 = |g: &Graph| -> Result<String> {
        Ok(String::from_utf8(encode(g, GraphFormat::Graph6)?).unwrap())
    };
    Ok(format!(
        "pattern {}\npositive {}\nnegative {}\nrounds {}\n",
        g6(&bundle.pattern)?,
        g6(&bundle.positive)?,
        g6(&bundle.negative)?,
        bundle.rounds
    ))
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Reads a graph argument: a path, or "-" for stdin. Format is sniffed:
/// edge-list text starts with `n ` or a `#` comment, anything else is
/// graph6.
fn read_graph(arg: &str) -> Result<Graph> {
    let bytes = read_source(arg).with_context(|| format!("reading graph `{arg}`"))?;
    let text_start = bytes
        .iter()
        .position(|b| !b.is_ascii_whitespace())
        .unwrap_or(0);
    let body = &bytes[text_start..];
    let g = if body.starts_with(b"n ") || body.starts_with(b"n\t") || body.starts_with(b"#") {
        decode(body, GraphFormat::EdgeList)?
    } else {
        let end = body
            .iter()
            .position(|b| b.is_ascii_whitespace())
            .unwrap_or(body.len());
        decode(&body[..end], GraphFormat::Graph6)?
    };
    Ok(g)
}

/// Reads a formula argument: "-" for stdin, an existing file path, or the
/// formula text itself.
fn read_formula(arg: &str) -> Result<efdepth_core::Formula> {
    let text = if arg == "-" {
        String::from_utf8(read_stdin()?).context("formula on stdin must be UTF-8")?
    } else if std::path::Path::new(arg).exists() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    Ok(parse(text.trim())?)
}

fn read_source(arg: &str) -> Result<Vec<u8>> {
    if arg == "-" {
        read_stdin()
    } else {
        Ok(std::fs::read(arg)?)
    }
}

fn read_stdin() -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    std::io::stdin().read_to_end(&mut buf)?;
    Ok(buf)
}
