//! Command-line front end over the automaton file format with
//! deterministic text, structured (JSON), DOT and CSV outputs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use zenomata::automaton::ReversibleAutomaton;
use zenomata::logic::{build_partition_logic, partitions_up_to, PartitionLogic};
use zenomata::perm::{enumerate_permutations, is_doubly_stochastic, perm_from_matrix, SquareMatrix};
use zenomata::qubit::{classical_fixed_point_search, eigensystem_not, fixed_point_not, OneQubitOperator};
use zenomata::zeno::{diagonal_adversary, run_zeno, DeciderSpec, ToyProgram, ZenoSchedule};

#[derive(Parser)]
#[command(
    name = "zenomata",
    version,
    about = "Reversible automata, their experiment logics, squeezed schedules and the qubit fixed point"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an automaton file and summarize its permutation
    Validate {
        /// Automaton file (JSON with states/inputs/delta/lambda)
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evolve the canonical label vector, or one feedback trajectory
    Evolve {
        path: PathBuf,
        /// Number of evolution steps
        #[arg(long, default_value_t = 1)]
        steps: u64,
        /// Start pair `state,symbol`; selects trajectory mode
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Partition the states by the outputs an input word produces
    Experiment {
        path: PathBuf,
        /// Input word: symbols concatenated, or comma-separated
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Paste the experiment partitions into a logic and classify it
    Logic {
        path: PathBuf,
        /// Explore all nonempty words up to this length
        #[arg(long, default_value_t = 1)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all permutations of a degree, or analyze a matrix file
    Permgroup {
        /// Degree to enumerate
        #[arg(long)]
        n: Option<usize>,
        /// Matrix file: first line the dimension, then one row per line
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Tolerance for the doubly-stochastic check
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Proper-time schedule values and scheduled program runs
    Zeno {
        /// Squeeze factor, strictly between 0 and 1
        #[arg(long)]
        k: f64,
        /// Print tau_t for this cycle count
        #[arg(long)]
        t: Option<u64>,
        /// Program file to run under the schedule
        #[arg(long)]
        program: Option<PathBuf>,
        /// Input encoding for the program
        #[arg(long, default_value = "0")]
        input: String,
        /// Proper-time budget; defaults to the limit span
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Confront a decider with its diagonal adversary
    Diagonal {
        /// constant-halts | constant-loops | step-bounded:N | exact-meta
        #[arg(long)]
        decider: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the bit flip, its eigensystem, fixed point and probabilities
    QubitDemo {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
    Csv,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(err: E) -> Self {
        CliError::Domain(err.to_string())
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            1
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Validate { path, format } => {
            only(format, &[Format::Text, Format::Structured, Format::Dot])?;
            validate(&path, format)
        }
        Command::Evolve {
            path,
            steps,
            start,
            format,
        } => {
            only(format, &[Format::Text, Format::Structured, Format::Csv])?;
            evolve(&path, steps, start.as_deref(), format)
        }
        Command::Experiment { path, word, format } => {
            only(format, &[Format::Text, Format::Structured])?;
            experiment(&path, &word, format)
        }
        Command::Logic {
            path,
            max_len,
            format,
        } => {
            only(format, &[Format::Text, Format::Structured, Format::Dot])?;
            logic(&path, max_len, format)
        }
        Command::Permgroup {
            n,
            matrix,
            tol,
            format,
        } => {
            only(format, &[Format::Text, Format::Structured, Format::Csv])?;
            permgroup(n, matrix.as_deref(), tol, format)
        }
        Command::Zeno {
            k,
            t,
            program,
            input,
            budget,
            format,
        } => {
            only(format, &[Format::Text, Format::Structured])?;
            zeno(k, t, program.as_deref(), &input, budget, format)
        }
        Command::Diagonal { decider, format } => {
            only(format, &[Format::Text, Format::Structured])?;
            diagonal(&decider, format)
        }
        Command::QubitDemo { format } => {
            only(format, &[Format::Text, Format::Structured])?;
            Ok(qubit_demo(format))
        }
    }
}

fn only(format: Format, supported: &[Format]) -> Result<(), CliError> {
    if supported.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "format {:?} is not supported by this subcommand",
            format
        )))
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load_automaton(path: &Path) -> Result<ReversibleAutomaton, CliError> {
    Ok(ReversibleAutomaton::from_json(&read_file(path)?)?)
}

fn render_word(automaton: &ReversibleAutomaton, word: &[String]) -> String {
    if automaton.inputs().iter().all(|i| i.chars().count() == 1) {
        word.concat()
    } else {
        word.join(",")
    }
}

fn validate(path: &Path, format: Format) -> Result<String, CliError> {
    let automaton = load_automaton(path)?;
    let perm = automaton.to_permutation();
    Ok(match format {
        Format::Text => format!(
            "valid reversible automaton, {} states, {} symbols, permutation order {}\n",
            automaton.n_states(),
            automaton.n_inputs(),
            perm.order()
        ),
        Format::Structured => {
            let value = json!({
                "states": automaton.n_states(),
                "symbols": automaton.n_inputs(),
                "permutation": perm.to_string(),
                "order": perm.order(),
            });
            format!("{value:#}\n")
        }
        Format::Dot => automaton.to_dot(),
        _ => unreachable!(),
    })
}

fn evolve(
    path: &Path,
    steps: u64,
    start: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let automaton = load_automaton(path)?;
    if let Some(start) = start {
        let (state, symbol) = start.split_once(',').ok_or_else(|| {
            CliError::Usage("--start takes a `state,symbol` pair".to_string())
        })?;
        let trajectory = automaton.run_feedback(state.trim(), symbol.trim(), steps)?;
        return Ok(match format {
            Format::Text => format!("{trajectory}\n"),
            Format::Structured => {
                let value = json!({
                    "start": [state.trim(), symbol.trim()],
                    "steps": steps,
                    "trajectory": trajectory.steps(),
                });
                format!("{value:#}\n")
            }
            Format::Csv => {
                let mut out = String::from("step,state,symbol\n");
                for (n, (s, i)) in trajectory.steps().iter().enumerate() {
                    let _ = writeln!(out, "{n},{s},{i}");
                }
                out
            }
            _ => unreachable!(),
        });
    }

    let psi0 = automaton.canonical_labels();
    let columns: Vec<_> = (0..=steps)
        .map(|n| automaton.evolve_labels(&psi0, n))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (n, column) in columns.iter().enumerate() {
                let _ = writeln!(out, "N={n}: {column}");
            }
            out
        }
        Format::Structured => {
            let value = json!({
                "steps": steps,
                "columns": columns
                    .iter()
                    .map(|c| c.labels().to_vec())
                    .collect::<Vec<_>>(),
            });
            format!("{value:#}\n")
        }
        Format::Csv => {
            let mut out = String::from("step,index,state,symbol\n");
            for (n, column) in columns.iter().enumerate() {
                for (idx, (s, i)) in column.labels().iter().enumerate() {
                    let _ = writeln!(out, "{n},{},{s},{i}", idx + 1);
                }
            }
            out
        }
        _ => unreachable!(),
    })
}

fn experiment(path: &Path, word_text: &str, format: Format) -> Result<String, CliError> {
    let automaton = load_automaton(path)?;
    let word = automaton.parse_word(word_text)?;
    let partition = zenomata::logic::experiment_partition(&automaton, &word)?;
    Ok(match format {
        Format::Text => format!("{partition}\n"),
        Format::Structured => {
            let value = json!({
                "word": word,
                "partition": partition.block_names(),
            });
            format!("{value:#}\n")
        }
        _ => unreachable!(),
    })
}

fn logic_atoms(logic: &PartitionLogic) -> Vec<String> {
    logic
        .atoms()
        .into_iter()
        .map(|idx| logic.render_element(idx))
        .collect()
}

fn logic(path: &Path, max_len: usize, format: Format) -> Result<String, CliError> {
    let automaton = load_automaton(path)?;
    if max_len == 0 || max_len > 12 {
        return Err(CliError::Usage(
            "--max-len must lie between 1 and 12".to_string(),
        ));
    }
    let found = partitions_up_to(&automaton, max_len)?;
    let partitions: Vec<_> = found.iter().map(|d| d.partition.clone()).collect();
    let logic = build_partition_logic(&partitions)?;
    let triple = logic.find_nondistributive_triple();

    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "partitions: {}", found.len());
            for discovered in &found {
                let _ = writeln!(
                    out,
                    "  v({}) = {}",
                    render_word(&automaton, &discovered.witness),
                    discovered.partition
                );
            }
            let _ = writeln!(out, "elements: {}", logic.element_count());
            let _ = writeln!(out, "atoms: {}", logic_atoms(&logic).join(" "));
            let _ = writeln!(out, "MO2: {}", if logic.is_mo2() { "yes" } else { "no" });
            match triple {
                Some((x, y, z)) => {
                    let lhs = logic.meet(x, logic.join(y, z).expect("triple joins")).expect("triple meets");
                    let rhs = logic
                        .join(
                            logic.meet(x, y).expect("triple meets"),
                            logic.meet(x, z).expect("triple meets"),
                        )
                        .expect("triple joins");
                    let _ = writeln!(
                        out,
                        "nondistributive triple: x={}, y={}, z={}: x/\\(y\\/z) = {}, (x/\\y)\\/(x/\\z) = {}",
                        logic.render_element(x),
                        logic.render_element(y),
                        logic.render_element(z),
                        logic.render_element(lhs),
                        logic.render_element(rhs),
                    );
                }
                None => {
                    let _ = writeln!(out, "nondistributive triple: none");
                }
            }
            out
        }
        Format::Structured => {
            let value = json!({
                "partitions": found
                    .iter()
                    .map(|d| json!({
                        "witness": render_word(&automaton, &d.witness),
                        "partition": d.partition.block_names(),
                    }))
                    .collect::<Vec<_>>(),
                "elements": logic.element_count(),
                "atoms": logic_atoms(&logic),
                "mo2": logic.is_mo2(),
                "nondistributive_triple": triple.map(|(x, y, z)| json!({
                    "x": logic.render_element(x),
                    "y": logic.render_element(y),
                    "z": logic.render_element(z),
                })),
            });
            format!("{value:#}\n")
        }
        Format::Dot => logic.to_dot(),
        _ => unreachable!(),
    })
}

fn permgroup(
    n: Option<usize>,
    matrix: Option<&Path>,
    tol: f64,
    format: Format,
) -> Result<String, CliError> {
    match (n, matrix) {
        (Some(n), None) => {
            let perms = enumerate_permutations(n)?;
            Ok(match format {
                Format::Text => {
                    let mut out = format!("{} permutations of degree {n}\n", perms.len());
                    for p in &perms {
                        let _ = writeln!(out, "map={p} order={}", p.order());
                    }
                    out
                }
                Format::Structured => {
                    let value = json!({
                        "degree": n,
                        "count": perms.len(),
                        "permutations": perms
                            .iter()
                            .map(|p| json!({"map": p.to_string(), "order": p.order()}))
                            .collect::<Vec<_>>(),
                    });
                    format!("{value:#}\n")
                }
                Format::Csv => {
                    let mut out = String::from("map,order\n");
                    for p in &perms {
                        let _ = writeln!(out, "\"{p}\",{}", p.order());
                    }
                    out
                }
                _ => unreachable!(),
            })
        }
        (None, Some(path)) => {
            let m = SquareMatrix::parse(&read_file(path)?)?;
            let stochastic = is_doubly_stochastic(&m, tol);
            let perm = perm_from_matrix(&m);
            Ok(match format {
                Format::Text => {
                    let mut out = format!(
                        "doubly stochastic (tol {tol}): {}\n",
                        if stochastic { "yes" } else { "no" }
                    );
                    match &perm {
                        Ok(p) => {
                            let _ = writeln!(out, "permutation: {p}");
                            let _ = writeln!(out, "order: {}", p.order());
                        }
                        Err(e) => {
                            let _ = writeln!(out, "permutation: no ({e})");
                        }
                    }
                    out
                }
                Format::Structured => {
                    let value = json!({
                        "n": m.n(),
                        "doubly_stochastic": stochastic,
                        "tol": tol,
                        "permutation": perm.as_ref().ok().map(|p| p.to_string()),
                        "order": perm.as_ref().ok().map(|p| p.order()),
                        "rejection": perm.as_ref().err().map(|e| e.to_string()),
                    });
                    format!("{value:#}\n")
                }
                Format::Csv => {
                    let mut out = String::from("n,doubly_stochastic,permutation,order\n");
                    let (map, order) = match &perm {
                        Ok(p) => (format!("\"{p}\""), p.order().to_string()),
                        Err(_) => (String::new(), String::new()),
                    };
                    let _ = writeln!(out, "{},{},{},{}", m.n(), stochastic, map, order);
                    out
                }
                _ => unreachable!(),
            })
        }
        _ => Err(CliError::Usage(
            "pass exactly one of --n or --matrix".to_string(),
        )),
    }
}

fn zeno(
    k: f64,
    t: Option<u64>,
    program: Option<&Path>,
    input: &str,
    budget: Option<f64>,
    format: Format,
) -> Result<String, CliError> {
    let schedule = ZenoSchedule::new(k)?;
    if t.is_none() && program.is_none() {
        return Err(CliError::Usage(
            "pass --t for schedule values and/or --program for a run".to_string(),
        ));
    }
    if budget.is_some() && program.is_none() {
        return Err(CliError::Usage("--budget requires --program".to_string()));
    }

    let mut text = String::new();
    let mut value = json!({"k": k, "tau_inf": schedule.limit_time()});
    if let Some(t) = t {
        let tau = schedule.proper_time(t);
        let _ = writeln!(text, "tau_{t} = {tau}, tau_inf = {}", schedule.limit_time());
        value["t"] = json!(t);
        value["tau_t"] = json!(tau);
    }
    if let Some(path) = program {
        let program = ToyProgram::decode(&read_file(path)?)?;
        let budget = budget.unwrap_or_else(|| schedule.limit_time());
        let outcome = run_zeno(&program, input, &schedule, budget)?;
        let _ = writeln!(text, "{outcome}");
        value["budget"] = json!(budget);
        value["outcome"] = serde_json::to_value(&outcome).expect("outcome serializes");
    }
    Ok(match format {
        Format::Text => text,
        Format::Structured => format!("{value:#}\n"),
        _ => unreachable!(),
    })
}

fn diagonal(decider: &str, format: Format) -> Result<String, CliError> {
    let spec = DeciderSpec::parse(decider)?;
    let (_, report) = diagonal_adversary(&spec);
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "decider: {spec}");
            let _ = writeln!(out, "adversary: {}", report.adversary);
            let _ = writeln!(out, "verdict on self-application: {}", report.verdict);
            let _ = writeln!(out, "actual behavior: {}", report.outcome);
            let _ = writeln!(
                out,
                "decider defeated: {}",
                if report.defeated { "yes" } else { "no" }
            );
            out
        }
        Format::Structured => {
            let value = serde_json::to_value(&report).expect("report serializes");
            format!("{value:#}\n")
        }
        _ => unreachable!(),
    })
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re + 0.0)
    } else {
        format!("({},{})", z.re + 0.0, z.im + 0.0)
    }
}

fn qubit_demo(format: Format) -> String {
    let not = OneQubitOperator::not();
    let eigen = eigensystem_not();
    let star = fixed_point_not();
    let residual = not.apply(&star).distance(&star);
    let (p0, p1) = star.probabilities();
    let witnesses = classical_fixed_point_search();

    match format {
        Format::Text => {
            let mut out = String::from("NOT matrix:\n");
            for row in not.entries() {
                let _ = writeln!(
                    out,
                    "  ({} {})",
                    fmt_complex(row[0]),
                    fmt_complex(row[1])
                );
            }
            out.push_str("eigensystem:\n");
            for (value, state) in &eigen {
                let _ = writeln!(out, "  eigenvalue {value:+}: {state}");
            }
            let _ = writeln!(out, "fixed point: {star}");
            let _ = writeln!(out, "fixed point invariance residual: {residual}");
            let _ = writeln!(out, "measurement probabilities: p0 = {p0}, p1 = {p1}");
            let _ = writeln!(
                out,
                "classical fixed points of NOT: {} (NOT(0)=1, NOT(1)=0)",
                if witnesses.is_empty() {
                    "none".to_string()
                } else {
                    format!("{witnesses:?}")
                }
            );
            out
        }
        Format::Structured => {
            let amplitudes = |q: &zenomata::qubit::Qubit| {
                let (a, b) = q.amplitudes();
                json!({"a": [a.re, a.im], "b": [b.re, b.im]})
            };
            let value = json!({
                "eigensystem": eigen
                    .iter()
                    .map(|(v, q)| json!({"eigenvalue": v, "state": amplitudes(q)}))
                    .collect::<Vec<_>>(),
                "fixed_point": amplitudes(&star),
                "invariance_residual": residual,
                "probabilities": [p0, p1],
                "classical_fixed_points": witnesses,
            });
            format!("{value:#}\n")
        }
        _ => unreachable!(),
    }
}
