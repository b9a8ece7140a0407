use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invpres::builtins::{builtin, Builtin};
use invpres::schutz::{all_schutzenberger_graphs, schutzenberger_graph};
use invpres::verify::{verify, VerifyConfig};
use invpres::{
    stephen_graph, CrossedModule, Error, FiniteInverseMonoid, LauschModule, Presentation,
    Letter, StephenBudget, Word,
};
use serde_json::json;

const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "invpres", version, about = "Inverse monoid presentations: graphs, relation modules, identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schützenberger graphs, one per idempotent or for `--word`.
    Sgraph(Common),
    /// Ranks and structure maps of the relation module.
    Relmod(Common),
    /// Kernel bases of the boundary onto the relation module.
    Identities(Common),
    /// Runs the property suite and compares against the golden summary.
    Verify(Common),
    /// Prints the seed-independent summary used as golden output.
    Summary(Common),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Args, Clone)]
struct Common {
    /// A presentation file or `builtin:NAME`.
    input: String,
    #[arg(long, default_value_t = 10_000)]
    budget_expansions: usize,
    #[arg(long, default_value_t = 10_000)]
    budget_vertices: usize,
    /// Shorthand that sets the expansion budget.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    require_converged: bool,
    /// Build the graph of this word instead of every idempotent.
    #[arg(long)]
    word: Option<String>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFinishedWithinBudget => EXIT_BUDGET,
            Error::Parse { .. }
            | Error::UnknownGenerator(_)
            | Error::MalformedToken(_)
            | Error::InvalidGeneratorName(_)
            | Error::DuplicateGenerator(_)
            | Error::UnknownBuiltin(_)
            | Error::InvalidBudget => EXIT_INPUT,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

struct Input {
    presentation: Presentation,
    builtin: Option<Builtin>,
}

impl Input {
    fn load(spec: &str) -> Result<Input, Failure> {
        if spec.starts_with("builtin:") {
            let b = builtin(spec)?;
            return Ok(Input {
                presentation: b.presentation.clone(),
                builtin: Some(b),
            });
        }
        let text = std::fs::read_to_string(spec).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{spec}: {e}"),
        })?;
        Ok(Input {
            presentation: Presentation::parse(&text)?,
            builtin: None,
        })
    }

    fn table(&self) -> Option<FiniteInverseMonoid> {
        self.builtin.as_ref().and_then(|b| b.table.clone())
    }

    fn monoid(&self, budget: StephenBudget) -> Result<FiniteInverseMonoid, Failure> {
        match &self.builtin {
            Some(b) => Ok(b.monoid(budget)?),
            None => Ok(invpres::enumerate_monoid(&self.presentation, budget)?),
        }
    }
}

impl Common {
    fn budget(&self) -> Result<StephenBudget, Failure> {
        let expansions = self.budget.unwrap_or(self.budget_expansions);
        Ok(StephenBudget::new(expansions, self.budget_vertices)?)
    }
}

fn cmd_sgraph(c: &Common) -> Outcome {
    let input = Input::load(&c.input)?;
    let budget = c.budget()?;
    let format = c.format.unwrap_or(Format::Dot);
    let graphs = match &c.word {
        Some(w) => {
            let w = input.presentation.parse_word(w)?;
            let name = input.presentation.alphabet().format_word(&w);
            vec![(name, stephen_graph(&input.presentation, &w, budget))]
        }
        None => match input.monoid(budget) {
            Ok(m) => all_schutzenberger_graphs(&m)
                .into_iter()
                .map(|(e, g)| (m.name(e).to_string(), g))
                .collect(),
            // Idempotents are unknown; show the truncated graph of 1.
            Err(f) if f.code == EXIT_BUDGET => {
                vec![("1".to_string(), stephen_graph(&input.presentation, &Word::empty(), budget))]
            }
            Err(f) => return Err(f),
        },
    };
    let truncated = graphs.iter().any(|(_, g)| !g.is_converged());
    let mut out = String::new();
    match format {
        Format::Dot => {
            for (name, g) in &graphs {
                out.push_str(&g.to_dot(name));
            }
        }
        Format::Json => {
            let items: Vec<_> = graphs
                .iter()
                .map(|(name, g)| json!({ "word": name, "graph": g.to_json() }))
                .collect();
            out = serde_json::to_string_pretty(&items).expect("serializable") + "\n";
        }
        Format::Table => {
            out.push_str("word\tvertices\tedges\tcycle rank\tstatus\n");
            for (name, g) in &graphs {
                let status = if g.is_converged() { "converged" } else { "truncated" };
                let _ = writeln!(
                    out,
                    "{name}\t{}\t{}\t{}\t{status}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.cycle_rank()
                );
            }
        }
    }
    let code = if truncated && c.require_converged { EXIT_BUDGET } else { 0 };
    Ok((out, code))
}

fn cmd_relmod(c: &Common) -> Outcome {
    let input = Input::load(&c.input)?;
    let module = LauschModule::new(input.monoid(c.budget()?)?);
    let out = match c.format.unwrap_or(Format::Table) {
        Format::Json => serde_json::to_string_pretty(&module.to_json()).expect("serializable") + "\n",
        _ => module.table(),
    };
    Ok((out, 0))
}

fn cmd_identities(c: &Common) -> Outcome {
    let input = Input::load(&c.input)?;
    let x = CrossedModule::new(&input.presentation, input.monoid(c.budget()?)?)?;
    let report = x.verify_exact_sequence()?;
    let out = match c.format.unwrap_or(Format::Table) {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("serializable") + "\n",
        _ => report.table(),
    };
    Ok((out, 0))
}

/// Seed-independent facts: sizes, graph shapes, ranks, exact sequence.
fn summary(input: &Input, budget: StephenBudget) -> Result<String, Failure> {
    let mut out = input.presentation.to_text();
    let m = match input.monoid(budget) {
        Ok(m) => m,
        Err(f) if f.code == EXIT_BUDGET => {
            out.push_str("enumeration: not finished within budget\n");
            // x⁻¹x for the first generator x.
            let w = Word::new(vec![Letter::new(0, true), Letter::positive(0)]);
            let g = stephen_graph(&input.presentation, &w, budget);
            let _ = writeln!(
                out,
                "graph of {}: {} vertices, cycle rank {}, {}",
                input.presentation.alphabet().format_word(&w),
                g.vertex_count(),
                g.cycle_rank(),
                if g.is_converged() { "converged" } else { "truncated" }
            );
            return Ok(out);
        }
        Err(f) => return Err(f),
    };
    let _ = writeln!(out, "elements: {}", m.size());
    for &e in m.idempotents() {
        let g = schutzenberger_graph(&m, e)?;
        let _ = writeln!(out, "graph {}: {} vertices, {} edges", m.name(e), g.vertex_count(), g.edge_count());
    }
    let x = CrossedModule::new(&input.presentation, m)?;
    out.push_str(&x.relation_module().table());
    out.push_str(&x.verify_exact_sequence()?.table());
    Ok(out)
}

fn golden(name: &str) -> Option<&'static str> {
    match name {
        "semilattice" => Some(include_str!("../golden/semilattice.txt")),
        "bicyclic" => Some(include_str!("../golden/bicyclic.txt")),
        "i2" => Some(include_str!("../golden/i2.txt")),
        "semilattice0" => Some(include_str!("../golden/semilattice0.txt")),
        _ => None,
    }
}

fn cmd_summary(c: &Common) -> Outcome {
    let input = Input::load(&c.input)?;
    Ok((summary(&input, c.budget()?)?, 0))
}

fn cmd_verify(c: &Common) -> Outcome {
    let input = Input::load(&c.input)?;
    let budget = c.budget()?;
    let cfg = VerifyConfig {
        samples: c.samples,
        seed: c.seed,
        budget,
    };
    let report = verify(&input.presentation, input.table(), &cfg);
    let golden = match input.builtin.as_ref().and_then(|b| golden(b.name)) {
        Some(expected) => Some(summary(&input, budget)? == expected),
        None => None,
    };
    let passed = report.passed() && golden != Some(false);
    let out = match c.format.unwrap_or(Format::Table) {
        Format::Json => {
            let v = json!({ "report": report.to_json(), "golden": golden, "passed": passed });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        _ => {
            let mut out = String::new();
            for check in &report.checks {
                let tag = if check.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{tag}\t{}\t{}", check.name, check.detail);
            }
            match golden {
                Some(true) => out.push_str("PASS\tgolden\tsummary matches\n"),
                Some(false) => out.push_str("FAIL\tgolden\tsummary differs from the golden file\n"),
                None => {}
            }
            out.push_str(if passed { "PASS\n" } else { "FAIL\n" });
            out
        }
    };
    Ok((out, if passed { 0 } else { EXIT_VERIFY }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (Command::Sgraph(c)
    | Command::Relmod(c)
    | Command::Identities(c)
    | Command::Verify(c)
    | Command::Summary(c)) = &cli.command;
    if let Some(n) = c.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("invpres: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    let result = match &cli.command {
        Command::Sgraph(c) => cmd_sgraph(c),
        Command::Relmod(c) => cmd_relmod(c),
        Command::Identities(c) => cmd_identities(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Summary(c) => cmd_summary(c),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("invpres: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
