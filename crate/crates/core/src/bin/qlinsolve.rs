//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 validation error, 4 synthesis failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qlinsolve::family::{enumerate_family, matrix_for, render_equations, ColumnClass, FamilyLabel};
use qlinsolve::linsys::{self, RealMatrix, RealVector};
use qlinsolve::sim::{self, outcome_label, DEFAULT_SHOTS};
use qlinsolve::synth::{self, SynthesisResult, DEFAULT_MAX_GATES};
use qlinsolve::tomo::{self, FidelityConvention, TomographyMode};
use qlinsolve::{grover, qasm, table1, Error, QuantumState};

#[derive(Parser)]
#[command(name = "qlinsolve", version, about = "Solve ±1/2 orthogonal linear systems as two-qubit circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Browse the 48 coefficient matrices.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Solve A·x = y classically and show the probability readout.
    Solve(SolveArgs),
    /// Synthesize circuits for the inverse operator.
    Synth(SynthArgs),
    /// Simulate a label's circuit and sample measurement shots.
    Run(RunArgs),
    /// Simulate the eight benchmark circuits against recorded hardware percentages.
    Table1(Table1Args),
    /// Tomography of a label's solution state.
    Tomo(TomoArgs),
    /// Grover search demo: closed form against simulation.
    Grover(GroverArgs),
    /// Export a label's circuit as OpenQASM 2.0.
    Qasm(QasmArgs),
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// One line per matrix: label, subset and the 16 entries.
    List {
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        output: Format,
    },
    /// Matrix and equations for one label.
    Show {
        label: FamilyLabel,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        output: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Qasm,
}

#[derive(Args)]
#[group(id = "system", required = true, multiple = false)]
struct SystemSource {
    /// Family label such as A_1234.
    #[arg(long)]
    label: Option<FamilyLabel>,
    /// CSV file with one matrix row per line.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
#[group(multiple = false)]
struct RhsSource {
    /// Right-hand side as inline CSV (`0,1,0,0`) or a CSV file.
    #[arg(long)]
    y: Option<String>,
    /// Right-hand side as a basis vector index.
    #[arg(long)]
    basis: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    system: SystemSource,
    #[command(flatten)]
    rhs: RhsSource,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    output: Format,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, conflicts_with_all = ["all", "matrix"])]
    label: Option<FamilyLabel>,
    /// Synthesize the inverse operator of a CSV matrix.
    #[arg(long, conflicts_with = "all")]
    matrix: Option<PathBuf>,
    /// All 48 labels.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_GATES)]
    max_gates: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    label: FamilyLabel,
    /// Initial basis state index.
    #[arg(long, default_value_t = 0)]
    basis: usize,
    #[arg(long, default_value_t = DEFAULT_SHOTS, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Global depolarizing strength applied before sampling.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_GATES)]
    max_gates: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    output: Format,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, default_value_t = DEFAULT_SHOTS, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
    /// Row `i` is sampled with seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    output: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum FidelityArg {
    Overlap,
    Root,
}

#[derive(Args)]
struct TomoArgs {
    #[arg(long)]
    label: FamilyLabel,
    #[arg(long, default_value_t = 0)]
    basis: usize,
    /// Exact expectation values instead of sampled ones.
    #[arg(long, conflicts_with = "shots")]
    analytic: bool,
    /// Shots per measurement setting.
    #[arg(long, default_value_t = 8192, value_parser = clap::value_parser!(u64).range(1..))]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, value_enum, default_value_t = FidelityArg::Overlap)]
    fidelity: FidelityArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
}

#[derive(Args)]
struct GroverArgs {
    /// Number of qubits.
    #[arg(long)]
    n: usize,
    /// Marked basis indices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    marked: Vec<usize>,
    /// Iterations; defaults to the optimal count.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct QasmArgs {
    #[arg(long)]
    label: FamilyLabel,
    #[arg(long, default_value_t = DEFAULT_MAX_GATES)]
    max_gates: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotFound { .. } => 4,
        _ => 3,
    }
}

fn execute(command: Command) -> Result<String, Error> {
    match command {
        Command::Family(FamilyCommand::List { class, output }) => family_list(class, output),
        Command::Family(FamilyCommand::Show { label, output }) => family_show(label, output),
        Command::Solve(args) => solve(args),
        Command::Synth(args) => synth_cmd(args),
        Command::Run(args) => run(args),
        Command::Table1(args) => table1_cmd(args),
        Command::Tomo(args) => tomo_cmd(args),
        Command::Grover(args) => {
            let report = grover::grover_report(args.n, &args.marked, args.k)?;
            Ok(pretty(&serde_json::to_value(report).expect("serializable")))
        }
        Command::Qasm(args) => qasm::to_qasm(&synth::synthesize_label(args.label, args.max_gates)?.circuit),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_values(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn family_list(class: Option<ClassArg>, output: Format) -> Result<String, Error> {
    let class = class.map(|c| match c {
        ClassArg::A => ColumnClass::A,
        ClassArg::B => ColumnClass::B,
    });
    let specs: Vec<_> = enumerate_family().into_iter().filter(|s| class.is_none_or(|c| s.label.class == c)).collect();
    match output {
        Format::Json => Ok(pretty(&serde_json::to_value(&specs).expect("serializable"))),
        _ => Ok(specs
            .iter()
            .map(|s| format!("{}\t{}\t{}\n", s.label, s.subset, csv_values(s.matrix.entries().iter().copied())))
            .collect()),
    }
}

fn family_show(label: FamilyLabel, output: Format) -> Result<String, Error> {
    let spec = enumerate_family().into_iter().find(|s| s.label == label).expect("every label is enumerated");
    if output == Format::Json {
        return Ok(pretty(&serde_json::to_value(&spec).expect("serializable")));
    }
    let mut out = format!("{} (subset {})\n{}", spec.label, spec.subset, spec.matrix);
    for eq in &spec.equations {
        let _ = writeln!(out, "  {eq}");
    }
    Ok(out)
}

fn load_matrix(source: &SystemSource) -> Result<(String, RealMatrix), Error> {
    match (&source.label, &source.matrix) {
        (Some(label), _) => Ok((label.to_string(), matrix_for(*label))),
        (None, Some(path)) => Ok((path.display().to_string(), RealMatrix::from_csv_path(path)?)),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn load_rhs(rhs: &RhsSource, dim: usize) -> Result<RealVector, Error> {
    match (&rhs.y, rhs.basis) {
        (Some(text), _) => {
            let path = Path::new(text);
            if path.is_file() {
                let content = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{text}: {e}")))?;
                RealVector::from_csv_str(&content)
            } else {
                RealVector::from_csv_str(text)
            }
        }
        (None, Some(index)) if index >= dim => Err(Error::DimensionMismatch { expected: dim, got: index + 1 }),
        (None, Some(index)) => Ok(RealVector::basis(dim, index)),
        (None, None) => Ok(RealVector::basis(dim, 0)),
    }
}

fn solve(args: SolveArgs) -> Result<String, Error> {
    let (name, a) = load_matrix(&args.system)?;
    let y = load_rhs(&args.rhs, a.dim())?;
    let x = linsys::solve(&a, &y)?;
    let residual = linsys::residual(&a, &x, &y)?;
    let probs: Vec<f64> = x.iter().map(|v| v * v).collect();
    let readout = sim::amplitudes_from_probabilities(&probs)?;
    let equations = render_equations(&a, &y);
    if args.output == Format::Json {
        return Ok(pretty(&json!({
            "system": name,
            "y": y.as_slice(),
            "x": x.as_slice(),
            "residual": residual,
            "probabilities": probs,
            "sqrt_probability_readout": readout,
            "equations": equations,
        })));
    }
    let mut out = format!("system: {name}\n");
    for eq in &equations {
        let _ = writeln!(out, "  {eq}");
    }
    let _ = writeln!(out, "x (signed solution):           {}", fmt_vec(x.as_slice()));
    let _ = writeln!(out, "probabilities |x_i|^2:         {}", fmt_vec(&probs));
    let _ = writeln!(out, "sqrt readout (signs lost):     {}", fmt_vec(&readout));
    let _ = writeln!(out, "residual max|A·x - y|:         {residual:e}");
    Ok(out)
}

fn fmt_vec(values: &[f64]) -> String {
    let cells: Vec<String> = values.iter().map(|v| format!("{:.6}", if *v == 0.0 { 0.0 } else { *v })).collect();
    format!("[{}]", cells.join(", "))
}

fn synth_cmd(args: SynthArgs) -> Result<String, Error> {
    let results: Vec<(Option<FamilyLabel>, SynthesisResult)> = if args.all {
        synth::synthesize_family(args.max_gates)?.into_iter().map(|(l, r)| (Some(l), r)).collect()
    } else if let Some(label) = args.label {
        vec![(Some(label), synth::synthesize_label(label, args.max_gates)?)]
    } else if let Some(path) = &args.matrix {
        let u = linsys::inverse_operator(&RealMatrix::from_csv_path(path)?)?;
        vec![(None, synth::synthesize(&u, args.max_gates)?)]
    } else {
        return Err(Error::InvalidLabel("one of --label, --matrix or --all is required".into()));
    };
    match args.output {
        Format::Qasm => {
            let mut out = String::new();
            for (label, r) in &results {
                if results.len() > 1 {
                    let _ = writeln!(out, "// {}", label.map(|l| l.to_string()).unwrap_or_default());
                }
                out.push_str(&qasm::to_qasm(&r.circuit)?);
            }
            Ok(out)
        }
        Format::Table | Format::Csv => Ok(results
            .iter()
            .map(|(label, r)| {
                let gates: Vec<String> = r.circuit.gates().iter().map(ToString::to_string).collect();
                format!(
                    "{}\t{}\t{:+}\t{}\n",
                    label.map(|l| l.to_string()).unwrap_or_else(|| "matrix".into()),
                    r.gate_count,
                    r.matched_sign,
                    gates.join(" ")
                )
            })
            .collect()),
        Format::Json => {
            if results.len() == 1 {
                Ok(pretty(&results[0].1.to_json(results[0].0)))
            } else {
                Ok(pretty(&serde_json::Value::Array(results.iter().map(|(l, r)| r.to_json(*l)).collect())))
            }
        }
    }
}

fn percent_cells(freqs: &[f64]) -> Vec<String> {
    freqs.iter().map(|f| format!("{:.3}", 100.0 * f)).collect()
}

fn run(args: RunArgs) -> Result<String, Error> {
    let table = qlinsolve::sample_label(args.label, args.basis, args.shots, args.seed, args.noise, args.max_gates)?;
    let freqs = table.frequencies();
    let outcomes: Vec<String> = (0..freqs.len()).map(|i| outcome_label(i, table.n_qubits)).collect();
    match args.output {
        Format::Json => Ok(pretty(&json!({
            "label": args.label.to_string(),
            "shots": table.shots,
            "seed": table.seed,
            "counts": table.counts,
            "frequencies": table.frequency_map(),
        }))),
        Format::Csv => {
            let header: Vec<String> = outcomes.iter().map(|o| table1::padded_outcome(o)).collect();
            Ok(format!("circuit name,{}\n{},{}\n", header.join(","), args.label, percent_cells(&freqs).join(",")))
        }
        _ => {
            let mut out = format!("{} (shots {}, seed {})\n", args.label, table.shots, table.seed);
            for (i, o) in outcomes.iter().enumerate() {
                let _ = writeln!(out, "  {o} ({})  {:>6} counts  {:>7.3}%", table1::padded_outcome(o), table.count(i), 100.0 * freqs[i]);
            }
            Ok(out)
        }
    }
}

fn table1_cmd(args: Table1Args) -> Result<String, Error> {
    let rows = table1::simulate(args.shots, args.seed)?;
    match args.output {
        Format::Json => Ok(pretty(&serde_json::Value::Array(
            rows.iter()
                .map(|row| {
                    let (name, reported, table, p) = (row.label.to_string(), row.reported_percent, &row.table, row.p_value);
                    let reported: BTreeMap<String, f64> =
                        (0..4).map(|i| (table1::padded_outcome(&outcome_label(i, 2)), reported[i])).collect();
                    json!({
                        "label": name,
                        "shots": table.shots,
                        "seed": table.seed,
                        "counts": table.counts,
                        "frequencies": table.frequency_map(),
                        "reported_percent": reported,
                        "chi_square_p": p,
                    })
                })
                .collect(),
        ))),
        Format::Table => {
            let mut out = String::from("circuit   simulated % (0000 0001 0010 0011)        reported %\n");
            for row in &rows {
                let (name, reported, table) = (row.label, row.reported_percent, &row.table);
                let sim_cells = percent_cells(&table.frequencies());
                let rep_cells: Vec<String> = reported.iter().map(|v| format!("{v:.3}")).collect();
                let _ = writeln!(out, "{name}    {}    {}", sim_cells.join(" "), rep_cells.join(" "));
            }
            Ok(out)
        }
        _ => {
            let mut out = String::from(
                "circuit name,sim_0000,sim_0001,sim_0010,sim_0011,reported_0000,reported_0001,reported_0010,reported_0011,chi_square_p\n",
            );
            for row in &rows {
                let (name, reported, table, p) = (row.label, row.reported_percent, &row.table, row.p_value);
                let reported: Vec<String> = reported.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{name},{},{},{p:.4}", percent_cells(&table.frequencies()).join(","), reported.join(","));
            }
            Ok(out)
        }
    }
}

fn tomo_cmd(args: TomoArgs) -> Result<String, Error> {
    let result = synth::synthesize_label(args.label, DEFAULT_MAX_GATES)?;
    let ideal: QuantumState = sim::run(&result.circuit, args.basis)?;
    let prepared = tomo::apply_depolarizing(&tomo::density_from_state(&ideal), args.noise)?;
    let mode = if args.analytic { TomographyMode::Analytic } else { TomographyMode::Sampled { shots: args.shots, seed: args.seed } };
    let table = tomo::pauli_expectations(&prepared, mode);
    let rho = tomo::reconstruct(&table);
    let convention = match args.fidelity {
        FidelityArg::Overlap => FidelityConvention::Overlap,
        FidelityArg::Root => FidelityConvention::Root,
    };
    let fidelity = tomo::fidelity_with(&rho, &ideal, convention)?;
    match args.output {
        Format::Csv => Ok(format!("# {} fidelity {fidelity:.6}\n{}", args.label, rho.to_csv())),
        _ => Ok(pretty(&json!({
            "label": args.label.to_string(),
            "mode": mode,
            "noise": args.noise,
            "expectations": table.values,
            "density_matrix": rho.to_json(),
            "ideal_density_matrix": tomo::density_from_state(&ideal).to_json(),
            "fidelity_convention": match convention { FidelityConvention::Overlap => "overlap", FidelityConvention::Root => "root" },
            "fidelity": (fidelity * 1e6).round() / 1e6,
        }))),
    }
}
