//! `secureset` command-line front end.
//!
//! Exit status: 0 positive answer or success, 1 negative answer, 2 usage or
//! input error, 3 resource budget refusal. Reports go to `out`, diagnostics
//! to `err`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use secureset::format::{parse_instance, parse_solution, serialize_instance, serialize_solution};
use secureset::qbf::{self, normalize, parse_qdnf, Normalization, QSat2Formula, DEFAULT_EVAL_CAP};
use secureset::reductions::{
    self, parse_map, serialize_map, Reduction, ReductionError, ReductionMap, Source, SourceSolution, CHAIN,
};
use secureset::security::{self, SecurityError, DEFAULT_ORACLE_CAP, WITNESS_SEARCHES};
use secureset::solver::{solve, SolveError, SolverConfig, DEFAULT_MAX_CANDIDATES};
use secureset::{Graph, Instance, VertexSet};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Default vertex limit per `chain` stage. The later stages grow by cliques
/// of size ~2n, so their edge count is roughly quadratic in this.
pub const DEFAULT_MAX_STAGE_SIZE: usize = 100_000;

#[derive(Debug, Parser)]
#[command(name = "secureset", version, about = "Secure sets: checking, solving and hardness reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a vertex set is secure; prints an attack witness if not.
    Check {
        instance: PathBuf,
        solution: PathBuf,
        /// Witness search strategy.
        #[arg(long, default_value = "bnb", value_parser = clap::builder::PossibleValuesParser::new(WITNESS_SEARCHES))]
        witness_search: String,
        /// Largest set the exhaustive strategy will enumerate.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_subset: usize,
    },
    /// Decide whether a vertex set is a defensive alliance.
    Alliance { instance: PathBuf, solution: PathBuf },
    /// Find a minimum qualifying secure set.
    Solve {
        instance: PathBuf,
        /// Search nodes visited before giving up.
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u64,
    },
    /// Evaluate an ∃∀ DNF formula by brute force.
    QbfEval {
        formula: PathBuf,
        /// Most variables evaluated.
        #[arg(long, default_value_t = DEFAULT_EVAL_CAP)]
        max_vars: usize,
    },
    /// Apply one reduction, writing the output instance and its map.
    Reduce {
        /// Registered reduction name.
        kind: String,
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Map an input-side solution forward through a map.
    Lift {
        /// Vertex solution (`s ...`) or, for formula maps, assignment (`v ...`).
        solution: PathBuf,
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Output instance the map was produced with.
        #[arg(long)]
        target: PathBuf,
    },
    /// Map an output-side solution back through a map.
    Project {
        solution: PathBuf,
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Run the whole chain from a formula down to a plain instance.
    Chain {
        formula: PathBuf,
        /// Directory receiving stage<i>.ss and stage<i>.map.
        outdir: PathBuf,
        /// Refuse to build any stage with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_MAX_STAGE_SIZE)]
        max_size: usize,
    },
}

/// Reasons a command stops without an answer.
#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_USAGE,
            Failure::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Budget(_) => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SecurityError> for Failure {
    fn from(e: SecurityError) -> Self {
        match e {
            SecurityError::CapExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("write failed: {e}"))
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_formula(path: &Path) -> Result<QSat2Formula, Failure> {
    parse_qdnf(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<ReductionMap, Failure> {
    parse_map(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A non-empty vertex set, checked against `g`.
fn load_set(path: &Path, g: &Graph) -> Result<VertexSet, Failure> {
    let set = parse_solution(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        .ok_or_else(|| Failure::Input(format!("{}: solution is `s NONE`", path.display())))?;
    if set.is_empty() {
        return Err(Failure::Input(format!("{}: empty vertex set", path.display())));
    }
    g.check_set(&set).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(set)
}

fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn reduction_failure(e: ReductionError) -> Failure {
    Failure::Input(e.to_string())
}

fn check(out: &mut dyn Write, inst: &Path, sol: &Path, strategy: &str, cap: usize) -> Outcome {
    let inst = load_instance(inst)?;
    let g = inst.graph();
    let s = load_set(sol, g)?;
    let search = security::witness_search(strategy, cap)
        .ok_or_else(|| Failure::Input(format!("unknown witness search {strategy:?}")))?;
    match search.find(g, &s)? {
        Some(w) => {
            writeln!(out, "INSECURE")?;
            writeln!(out, "w {} | defenders={} attackers={}", ids(&w.subset), w.defenders, w.attackers)?;
            Ok(false)
        }
        None => {
            writeln!(out, "SECURE")?;
            if let Some(why) = inst.constraint_violation(&s) {
                writeln!(out, "c not a solution of the instance: {why}")?;
                return Ok(false);
            }
            Ok(true)
        }
    }
}

fn alliance(out: &mut dyn Write, inst: &Path, sol: &Path) -> Outcome {
    let inst = load_instance(inst)?;
    let g = inst.graph();
    let s = load_set(sol, g)?;
    for &v in &s {
        let x: VertexSet = [v].into_iter().collect();
        let b = security::attack_balance(g, &s, &x)?;
        if !b.holds() {
            writeln!(out, "NOT-ALLIANCE")?;
            writeln!(out, "w {} | defenders={} attackers={}", v + 1, b.defenders, b.attackers)?;
            return Ok(false);
        }
    }
    writeln!(out, "ALLIANCE")?;
    Ok(true)
}

fn solve_cmd(out: &mut dyn Write, inst: &Path, max_candidates: u64) -> Outcome {
    let inst = load_instance(inst)?;
    let report = solve(&inst, &SolverConfig { max_candidates })?;
    writeln!(
        out,
        "c variant {} candidates {} nodes {}",
        report.variant, report.candidates_examined, report.nodes
    )?;
    if let Some(note) = &report.note {
        writeln!(out, "c {note}")?;
    }
    write!(out, "{}", serialize_solution(report.result.as_ref().map(|s| s.members())))?;
    Ok(report.result.is_some())
}

fn qbf_eval(out: &mut dyn Write, formula: &Path, cap: usize) -> Outcome {
    let f = load_formula(formula)?;
    let verdict = qbf::eval_qsat2(&f, cap).map_err(|e| match e {
        qbf::QbfError::CapExceeded(..) => Failure::Budget(e.to_string()),
        other => Failure::Input(other.to_string()),
    })?;
    if verdict.truth {
        writeln!(out, "TRUE")?;
        if let Some(w) = &verdict.witness {
            writeln!(out, "v {w}")?;
        }
    } else {
        writeln!(out, "FALSE")?;
    }
    Ok(verdict.truth)
}

/// Normalizes a formula; `Err(Ok(truth))` when normalization decides it.
fn normalized(out: &mut dyn Write, f: &QSat2Formula) -> Result<Result<QSat2Formula, bool>, Failure> {
    Ok(match normalize(f) {
        Normalization::Normalized(g) => Ok(g),
        Normalization::TriviallyTrue(w) => {
            writeln!(out, "c formula decided by normalization: a term has no universal literal")?;
            writeln!(out, "TRUE")?;
            writeln!(out, "v {w}")?;
            Err(true)
        }
        Normalization::TriviallyFalse => {
            writeln!(out, "c formula decided by normalization: every term is contradictory")?;
            writeln!(out, "FALSE")?;
            Err(false)
        }
    })
}

/// Runs `r`; `Ok(None)` when the input is trivially negative.
fn apply(out: &mut dyn Write, r: &dyn Reduction, source: &Source) -> Result<Option<reductions::Reduced>, Failure> {
    match r.reduce(source) {
        Ok(red) => Ok(Some(red)),
        Err(ReductionError::TriviallyNegative(why)) => {
            writeln!(out, "c {}: input is trivially negative: {why}", r.name())?;
            writeln!(out, "s NONE")?;
            Ok(None)
        }
        Err(e) => Err(reduction_failure(e)),
    }
}

fn describe(out: &mut dyn Write, prefix: &str, inst: &Instance) -> std::io::Result<()> {
    writeln!(
        out,
        "c {prefix}vertices {} edges {} k {} {} forbidden {} necessary {} pairs {}",
        inst.graph().vertex_count(),
        inst.graph().edge_count(),
        inst.k(),
        if inst.exact() { "exact" } else { "at-most" },
        inst.forbidden().len(),
        inst.necessary().len(),
        inst.pairs().len()
    )
}

fn reduce_cmd(out: &mut dyn Write, kind: &str, input: &Path, output: &Path, map: &Path) -> Outcome {
    let r = reductions::reduction(kind).ok_or_else(|| {
        let names: Vec<_> = reductions::registry().iter().map(|r| r.name()).collect();
        Failure::Input(format!("unknown reduction {kind:?}; known: {}", names.join(", ")))
    })?;
    let source = if r.takes_formula() {
        match normalized(out, &load_formula(input)?)? {
            Ok(f) => Source::Formula(f),
            Err(truth) => return Ok(truth),
        }
    } else {
        Source::Instance(load_instance(input)?)
    };
    let Some(red) = apply(out, r, &source)? else { return Ok(false) };
    write_file(output, &serialize_instance(&red.instance))?;
    write_file(map, &serialize_map(&red.map))?;
    describe(out, "", &red.instance)?;
    Ok(true)
}

fn lift_cmd(out: &mut dyn Write, sol: &Path, output: &Path, map: &Path, target: &Path) -> Outcome {
    let map = load_map(map)?;
    let target = load_instance(target)?;
    let text = read(sol)?;
    let source = if map.kind == reductions::MapKind::Qsat2Essfnc {
        SourceSolution::Assignment(
            qbf::parse_assignment(&text).map_err(|e| Failure::Input(format!("{}: {e}", sol.display())))?,
        )
    } else {
        match parse_solution(&text).map_err(|e| Failure::Input(format!("{}: {e}", sol.display())))? {
            Some(s) => SourceSolution::Vertices(s),
            None => return Err(Failure::Input(format!("{}: nothing to lift from `s NONE`", sol.display()))),
        }
    };
    match reductions::lift(&map, &target, &source) {
        Ok(set) => {
            let text = serialize_solution(Some(&set));
            write_file(output, &text)?;
            write!(out, "{text}")?;
            Ok(true)
        }
        Err(ReductionError::InvalidSolution(why)) => {
            writeln!(out, "c input is not a solution: {why}")?;
            writeln!(out, "s NONE")?;
            Ok(false)
        }
        Err(e) => Err(reduction_failure(e)),
    }
}

fn project_cmd(out: &mut dyn Write, sol: &Path, output: &Path, map: &Path) -> Outcome {
    let map = load_map(map)?;
    let set = parse_solution(&read(sol)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", sol.display())))?
        .ok_or_else(|| Failure::Input(format!("{}: nothing to project from `s NONE`", sol.display())))?;
    let text = match reductions::project(&map, &set).map_err(reduction_failure)? {
        SourceSolution::Assignment(a) => qbf::serialize_assignment(&a),
        SourceSolution::Vertices(s) => serialize_solution(Some(&s)),
    };
    write_file(output, &text)?;
    write!(out, "{text}")?;
    Ok(true)
}

fn chain(out: &mut dyn Write, formula: &Path, outdir: &Path, max_size: usize) -> Outcome {
    let f = match normalized(out, &load_formula(formula)?)? {
        Ok(f) => f,
        Err(truth) => return Ok(truth),
    };
    fs::create_dir_all(outdir).map_err(|e| Failure::Input(format!("{}: {e}", outdir.display())))?;
    let mut source = Source::Formula(f);
    for (i, name) in CHAIN.iter().enumerate() {
        let stage = i + 1;
        let r = reductions::reduction(name).expect("chain reductions are registered");
        let predicted = r.predicted_size(&source).map_err(reduction_failure)?;
        if predicted > max_size {
            return Err(Failure::Budget(format!(
                "stage {stage} ({name}) would have {predicted} vertices, above --max-size {max_size}"
            )));
        }
        let Some(red) = apply(out, r, &source)? else { return Ok(false) };
        write_file(&outdir.join(format!("stage{stage}.ss")), &serialize_instance(&red.instance))?;
        write_file(&outdir.join(format!("stage{stage}.map")), &serialize_map(&red.map))?;
        describe(out, &format!("stage {stage} {name}: "), &red.instance)?;
        source = Source::Instance(red.instance);
    }
    Ok(true)
}

fn dispatch(out: &mut dyn Write, command: Command) -> Outcome {
    match command {
        Command::Check { instance, solution, witness_search, max_subset } => {
            check(out, &instance, &solution, &witness_search, max_subset)
        }
        Command::Alliance { instance, solution } => alliance(out, &instance, &solution),
        Command::Solve { instance, max_candidates } => solve_cmd(out, &instance, max_candidates),
        Command::QbfEval { formula, max_vars } => qbf_eval(out, &formula, max_vars),
        Command::Reduce { kind, input, output, map } => reduce_cmd(out, &kind, &input, &output, &map),
        Command::Lift { solution, output, map, target } => lift_cmd(out, &solution, &output, &map, &target),
        Command::Project { solution, output, map } => project_cmd(out, &solution, &output, &map),
        Command::Chain { formula, outdir, max_size } => chain(out, &formula, &outdir, max_size),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_POSITIVE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(out, cli.command) {
        Ok(true) => EXIT_POSITIVE,
        Ok(false) => EXIT_NEGATIVE,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
