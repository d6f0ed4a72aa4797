//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success, 1 negative answer (no cover within `--max-k`, or a
//! solution that does not reproduce the matrix), 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modresc_core::{
    biclique_to_clique_cover, generate_planted, kernelize, maximal_bicliques, saturate, solve_modresc, verify_solution,
    Algorithm, BicliqueCover, BipartiteGraph, Error as CoreError, SolverConfig, Strategy,
};

use crate::dot::render_cover;
use crate::format::{load_matrix, parse_solution_json, read_input, write_matrix, FormatError};
use crate::report::{biclique_line, kernel_json, trace_lines, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::InfeasibleWithinBudget { .. }) => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "modresc", version, about = "Minimum mod/resc gene pairs via exact biclique edge cover")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Find the fewest mod/resc gene pairs explaining a compatibility matrix.
    Solve(SolveArgs),
    /// Check that M ⊗ R reproduces a matrix.
    Verify(VerifyArgs),
    /// Apply the reduction rules and print the kernel with its trace.
    Kernelize(KernelizeArgs),
    /// List the maximal bicliques of a matrix's bipartite graph.
    Enumerate(InputArg),
    /// Print the saturated graph (both classes made into cliques) as an edge list.
    Transform(TransformArgs),
    /// Write a random instance with a planted solution.
    Generate(GenerateArgs),
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// Matrix file ('-' for standard input).
    pub matrix: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgorithmArg {
    Partition,
    Subsets,
    Branch,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Incremental,
    Dichotomy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Matrix file ('-' for standard input).
    pub matrix: PathBuf,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Branch)]
    pub algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Dichotomy)]
    pub strategy: StrategyArg,
    /// Give up (exit 1) if more than this many gene pairs are needed.
    #[arg(long)]
    pub max_k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Byte-stable output (reports 0 ms).
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub deterministic: bool,
    /// Search the input graph directly, without reduction rules.
    #[arg(long)]
    pub no_kernel: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Also write the cover as a Graphviz file.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Matrix file.
    pub matrix: PathBuf,
    /// JSON file with "M" and "R" arrays (e.g. a `solve` report).
    pub solution: Option<PathBuf>,
    /// Mod matrix as a text file (instead of SOLUTION).
    #[arg(long = "mod", requires = "resc", conflicts_with = "solution")]
    pub mod_file: Option<PathBuf>,
    /// Resc matrix as a text file (instead of SOLUTION).
    #[arg(long, requires = "mod_file")]
    pub resc: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KernelizeArgs {
    pub matrix: PathBuf,
    /// Also check the kernel against the per-side 2^k size bound for this budget.
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    pub matrix: PathBuf,
    /// Transform the kernel instead of the input graph.
    #[arg(long)]
    pub kernelize: bool,
    /// Solve the graph and also print the matching clique cover.
    #[arg(long)]
    pub with_cover: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub cols: usize,
    /// Number of planted gene pairs.
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.4)]
    pub left_density: f64,
    #[arg(long, default_value_t = 0.4)]
    pub right_density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write PREFIX.C.txt, PREFIX.M.txt, PREFIX.R.txt and PREFIX.planted.json.
    /// Without it, only C is printed to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Kernelize(a) => cmd_kernelize(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a.matrix, out),
        Command::Transform(a) => cmd_transform(&a, out),
        Command::Generate(a) => cmd_generate(&a, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Write { path: "<stdout>".into(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.display().to_string(), source })
}

pub fn solver_config(a: &SolveArgs) -> SolverConfig {
    SolverConfig {
        algorithm: match a.algorithm {
            AlgorithmArg::Partition => Algorithm::Partition,
            AlgorithmArg::Subsets => Algorithm::Subsets,
            AlgorithmArg::Branch => Algorithm::Branch,
        },
        strategy: match a.strategy {
            StrategyArg::Incremental => Strategy::Incremental,
            StrategyArg::Dichotomy => Strategy::Dichotomy,
        },
        max_k: a.max_k,
        kernelize: !a.no_kernel,
        deterministic: a.deterministic,
        seed: a.seed,
    }
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = load_matrix(&a.matrix)?;
    let config = solver_config(a);
    let started = Instant::now();
    let solution = solve_modresc(&c, &config)?;
    let ms = started.elapsed().as_millis() as u64;
    let report = RunReport::new(&c, &config, &solution, ms);
    if let Some(path) = &a.dot {
        write_file(path, &render_cover(&BipartiteGraph::from_biadjacency(&c), &solution.cover))?;
    }
    match a.format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            emit(out, &text)?;
        }
        OutputFormat::Text => emit(out, &report.to_text())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = load_matrix(&a.matrix)?;
    let pair = match (&a.solution, &a.mod_file, &a.resc) {
        (Some(path), None, None) => parse_solution_json(&read_input(path)?)?,
        (None, Some(m), Some(r)) => modresc_core::ModRescPair::new(load_matrix(m)?, load_matrix(r)?)?,
        _ => return Err(CliError::Usage("give either SOLUTION or both --mod and --resc".into())),
    };
    if verify_solution(&c, &pair)? {
        emit(out, &format!("ok: M ⊗ R reproduces the {}x{} matrix with k = {}\n", c.rows(), c.cols(), pair.gene_count()))?;
        Ok(EXIT_OK)
    } else {
        let product = pair.product();
        let diff = (0..c.rows())
            .flat_map(|i| (0..c.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| product.get(i, j) != c.get(i, j))
            .count();
        emit(out, &format!("mismatch: M ⊗ R differs from the matrix in {diff} entries\n"))?;
        Ok(EXIT_NEGATIVE)
    }
}

pub fn cmd_kernelize(a: &KernelizeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = load_matrix(&a.matrix)?;
    let kr = kernelize(&BipartiteGraph::from_biadjacency(&c), a.budget);
    match a.format {
        OutputFormat::Json => {
            let mut v = kernel_json(&kr);
            if a.budget.is_some() {
                v["verdict"] = format!("{:?}", kr.verdict).into();
            }
            emit(out, &(serde_json::to_string_pretty(&v).expect("json") + "\n"))?;
        }
        OutputFormat::Text => {
            let mut text = format!(
                "# kernel {}x{}, offset {}\n",
                kr.kernel.left_count(),
                kr.kernel.right_count(),
                kr.parameter_offset
            );
            if let Some(k) = a.budget {
                text.push_str(&format!("# verdict for k = {k}: {:?}\n", kr.verdict));
            }
            if kr.kernel.left_count() == 0 || kr.kernel.right_count() == 0 {
                text.push_str("# empty kernel\n");
            } else {
                text.push_str(&write_matrix(&kr.kernel.to_biadjacency()));
            }
            text.push_str("# trace\n");
            for line in trace_lines(&kr) {
                text.push_str(&format!("# {line}\n"));
            }
            emit(out, &text)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_enumerate(matrix: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = BipartiteGraph::from_biadjacency(&load_matrix(matrix)?);
    let mut text = String::new();
    for b in maximal_bicliques(&g) {
        text.push_str(&biclique_line(&b.left.to_vec(), &b.right.to_vec()));
        text.push('\n');
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

pub fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = BipartiteGraph::from_biadjacency(&load_matrix(&a.matrix)?);
    let g = if a.kernelize { kernelize(&input, None).kernel } else { input };
    let s = saturate(&g);
    let n = g.left_count();
    let mut text = format!(
        "# {} vertices, {} edges; rows are 0..{}, columns are {}..{}\n",
        s.vertex_count(),
        s.edge_count(),
        n,
        n,
        s.vertex_count()
    );
    for (u, v) in s.edges() {
        text.push_str(&format!("{u} {v}\n"));
    }
    if a.with_cover {
        let config = SolverConfig { kernelize: false, ..SolverConfig::default() };
        let cover: BicliqueCover = modresc_core::min_cover(&g, &config)?.cover;
        let cliques = biclique_to_clique_cover(&cover, &g)?;
        text.push_str(&format!("# clique cover of size {}\n", cliques.size()));
        for c in &cliques.cliques {
            let members: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            text.push_str(&format!("# clique {}\n", members.join(" ")));
        }
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.rows == 0 || a.cols == 0 {
        return Err(CliError::Usage("--rows and --cols must be at least 1".into()));
    }
    let (c, pair) = generate_planted(a.rows, a.cols, a.k, a.left_density, a.right_density, a.seed)?;
    let header = format!(
        "# planted instance: {}x{}, k = {}, densities {}/{}, seed {}\n",
        a.rows, a.cols, a.k, a.left_density, a.right_density, a.seed
    );
    match &a.out {
        None => emit(out, &(header + &write_matrix(&c)))?,
        Some(prefix) => {
            let path = |ext: &str| {
                let mut p = prefix.clone().into_os_string();
                p.push(ext);
                PathBuf::from(p)
            };
            let files = [path(".C.txt"), path(".M.txt"), path(".R.txt"), path(".planted.json")];
            write_file(&files[0], &(header.clone() + &write_matrix(&c)))?;
            write_file(&files[1], &(header.clone() + &write_matrix(&pair.mod_genes)))?;
            write_file(&files[2], &(header + &write_matrix(&pair.resc_genes)))?;
            let planted = serde_json::json!({
                "seed": a.seed,
                "k": a.k,
                "M": pair.mod_genes.to_rows(),
                "R": pair.resc_genes.to_rows(),
            });
            write_file(&files[3], &(serde_json::to_string_pretty(&planted).expect("json") + "\n"))?;
            let summary = serde_json::json!({
                "seed": a.seed,
                "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            });
            emit(out, &(serde_json::to_string_pretty(&summary).expect("json") + "\n"))?;
        }
    }
    Ok(EXIT_OK)
}
