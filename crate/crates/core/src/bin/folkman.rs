//! Command-line front end.
//!
//! Exit status: 0 for success or a true answer, 1 for a false answer,
//! 2 for errors (including usage errors).

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use folkman::bounds::{self, KnownConstants, Verdict};
use folkman::clique::{clique_number, has_clique, independence_number, is_plus_kt};
use folkman::graph::read_graph6_file;
use folkman::pipeline::{format_table, run_pipeline, PipelineConfig, RunOptions, StepReport};
use folkman::search::{run_algorithm_1, run_algorithm_2};
use folkman::{arrows, canonical_form, find_free_partition, ArrowVector, Error, FamilySpec, Graph, GraphSet};

#[derive(Parser)]
#[command(name = "folkman", version, about = "Vertex Folkman number search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide G ->v (a_1, ..., a_s); prints a free partition when false.
    Arrows {
        /// graph6 string or a file whose first line is one
        graph: String,
        /// e.g. "2 2 7" or "2,2,7"
        vector: ArrowVector,
    },
    /// Clique number.
    Omega { graph: String },
    /// Independence number.
    Alpha { graph: String },
    /// Whether every missing edge would create a new K_t.
    PlusK { graph: String, t: usize },
    /// Canonical graph6 of every line of a file ("-" for stdin).
    Canon {
        file: String,
        /// Print each isomorphism class once, sorted.
        #[arg(long)]
        dedup: bool,
    },
    /// One extension step over graph6 input files.
    Extend {
        /// a;q;n;r;t, e.g. "2,2,7;8;19;2;3"
        #[arg(long)]
        spec: FamilySpec,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        input2: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        algorithm: u8,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a pipeline file.
    Pipeline {
        config: PathBuf,
        #[arg(long)]
        output_dir: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        /// Ignore existing checkpoints.
        #[arg(long)]
        fresh: bool,
        /// Validate only.
        #[arg(long)]
        check: bool,
        /// Print key-value reports instead of the table.
        #[arg(long)]
        kv: bool,
    },
    /// Bound calculus.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Check that a graph lies in H(a; q): K_q-free and arrowing.
    VerifyWitness {
        graph: String,
        vector: ArrowVector,
        q: usize,
    },
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Whether F_v(a; q) exists.
    Exists { vector: ArrowVector, q: usize },
    /// F_v(a; m) and its extremal graph.
    ValueAtM { vector: ArrowVector },
    /// All vectors with the given m and p.
    #[command(name = "same-m-p")]
    SameMP { m: usize, p: usize },
    /// Upper bound on alpha for members of H(a; m - 1; n).
    AlphaBound { vector: ArrowVector, n: usize },
    /// Lower bound from the (2, 2, p; p + 1) base plus alpha(i, p) terms.
    Composite {
        vector: ArrowVector,
        /// Lower bound on alpha(i, p), as i=value; repeatable.
        #[arg(long = "alpha", value_parser = parse_alpha)]
        alphas: Vec<(usize, usize)>,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// F_v(2_r, p; r + p - 1) from a value at r0.
    Project { r0: usize, base: usize, r: usize },
    /// Lower bound F_v(a; q) >= n + 1 from saved step reports.
    Certificate {
        vector: ArrowVector,
        q: usize,
        n: usize,
        /// Directory holding *.report.toml files.
        #[arg(long)]
        reports: PathBuf,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Print the constants registry.
    Registry {
        #[arg(long)]
        registry: Option<PathBuf>,
    },
}

fn parse_alpha(s: &str) -> Result<(usize, usize), String> {
    let (i, v) = s.split_once('=').ok_or("expected i=value")?;
    Ok((i.trim().parse().map_err(|_| "bad i")?, v.trim().parse().map_err(|_| "bad value")?))
}

fn read_graph(arg: &str) -> folkman::Result<Graph> {
    if Path::new(arg).is_file() {
        return read_graph6_file(arg)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Config(format!("{arg}: no graph in file")));
    }
    Graph::from_graph6(arg)
}

fn registry(path: &Option<PathBuf>) -> folkman::Result<KnownConstants> {
    match path {
        Some(p) => KnownConstants::load(p),
        None => Ok(KnownConstants::builtin()),
    }
}

fn answer(b: bool) -> ExitCode {
    println!("{b}");
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> folkman::Result<ExitCode> {
    match cli.command {
        Command::Arrows { graph, vector } => {
            let g = read_graph(&graph)?;
            match find_free_partition(&g, &vector) {
                None => Ok(answer(true)),
                Some(parts) => {
                    let code = answer(false);
                    for (a, part) in vector.entries().iter().zip(parts) {
                        let vs: Vec<String> = part.iter().map(|v| v.to_string()).collect();
                        println!("K{a}-free: {}", vs.join(" "));
                    }
                    Ok(code)
                }
            }
        }
        Command::Omega { graph } => {
            println!("{}", clique_number(&read_graph(&graph)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Alpha { graph } => {
            println!("{}", independence_number(&read_graph(&graph)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::PlusK { graph, t } => Ok(answer(is_plus_kt(&read_graph(&graph)?, t))),
        Command::Canon { file, dedup } => {
            let graphs = if file == "-" {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text).map_err(|e| Error::Config(format!("stdin: {e}")))?;
                text.lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(Graph::from_graph6)
                    .collect::<folkman::Result<Vec<_>>>()?
            } else {
                read_graph6_file(&file)?
            };
            if dedup {
                let set: GraphSet = graphs.iter().collect();
                print!("{}", set.to_graph6_text());
            } else {
                for g in &graphs {
                    println!("{}", canonical_form(g));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { spec, input, input2, algorithm, output } => {
            let a1 = GraphSet::load(&input)?;
            let out = match (algorithm, input2) {
                (1, _) => run_algorithm_1(&spec, &a1)?,
                (_, Some(p)) => run_algorithm_2(&spec, &a1, &GraphSet::load(&p)?)?,
                (_, None) => return Err(Error::Config("algorithm 2 needs --input2".into())),
            };
            match output {
                Some(path) => {
                    let manifest = folkman::canon::SetManifest::new(spec.to_string(), "extend");
                    out.save(&path, &manifest)?;
                    println!("{}: {} graphs", spec, out.len());
                }
                None => print!("{}", out.to_graph6_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pipeline { config, output_dir, workers, fresh, check, kv } => {
            let cfg = PipelineConfig::load(&config)?;
            cfg.validate()?;
            if check {
                println!("ok: {} bases, {} steps", cfg.bases.len(), cfg.steps.len());
                return Ok(ExitCode::SUCCESS);
            }
            let opts = RunOptions { output_dir, workers, fresh };
            let reports = run_pipeline(&cfg, &opts, |r| {
                eprintln!("{}: {} maximal ({:.2}s{})", r.spec, r.maximal, r.seconds, if r.resumed { ", resumed" } else { "" });
            })?;
            if kv {
                for r in &reports {
                    println!("[[report]]\n{}", r.to_toml());
                }
            } else {
                print!("{}", format_table(&reports));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound(b) => run_bound(b),
        Command::VerifyWitness { graph, vector, q } => {
            let g = read_graph(&graph)?;
            if has_clique(&g, q) {
                println!("false: contains K{q} (omega = {})", clique_number(&g));
                return Ok(ExitCode::from(1));
            }
            if !arrows(&g, &vector) {
                println!("false: does not arrow {vector}");
                return Ok(ExitCode::from(1));
            }
            println!("true: {}-vertex graph in H({}; {q})", g.order(), vector.entries_text());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_bound(cmd: BoundCommand) -> folkman::Result<ExitCode> {
    match cmd {
        BoundCommand::Exists { vector, q } => Ok(answer(bounds::exists_folkman(&vector, q))),
        BoundCommand::ValueAtM { vector } => {
            let x = bounds::value_at_q_equals_m(&vector)?;
            println!("F_v({}; {}) = {}", vector.canonical().entries_text(), vector.m(), x.value);
            println!("extremal: {}", x.extremal);
            Ok(ExitCode::SUCCESS)
        }
        BoundCommand::SameMP { m, p } => {
            for v in bounds::same_m_p_vectors(m, p)? {
                println!("{v}");
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundCommand::AlphaBound { vector, n } => {
            match bounds::independence_upper_bound(&vector, n) {
                Some(b) => println!("alpha <= {b}"),
                None => println!("no bound (n >= m + 3p)"),
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundCommand::Composite { vector, alphas, registry: reg } => {
            let alphas: BTreeMap<usize, usize> = alphas.into_iter().collect();
            let v = bounds::composite_lower_bound(&registry(&reg)?, &vector, &alphas)?;
            println!("F_v({}; {}) >= {v}", vector.canonical().entries_text(), vector.m() - 1);
            Ok(ExitCode::SUCCESS)
        }
        BoundCommand::Project { r0, base, r } => {
            println!("{}", bounds::project_twos_sequence(r0, base, r)?);
            Ok(ExitCode::SUCCESS)
        }
        BoundCommand::Certificate { vector, q, n, reports, registry: reg } => {
            let known = registry(&reg)?;
            let mut all: Vec<StepReport> = Vec::new();
            let entries = fs::read_dir(&reports).map_err(|e| Error::Config(format!("{}: {e}", reports.display())))?;
            for entry in entries.flatten() {
                let path = entry.path();
                if path.to_string_lossy().ends_with(".report.toml") {
                    let text = fs::read_to_string(&path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                    all.push(toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?);
                }
            }
            let verdict = bounds::verify_lower_bound_certificate(&known, &vector, q, n, &all);
            println!("{verdict}");
            Ok(if matches!(verdict, Verdict::Proven { .. }) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        BoundCommand::Registry { registry: reg } => {
            let known = registry(&reg)?;
            for c in &known.folkman {
                println!("F_v({}; {}) = {}  [{}]", c.a.entries_text(), c.q, c.value, c.citation);
            }
            for c in &known.ramsey {
                println!("R({}, {}) = {}  [{}]", c.s, c.t, c.value, c.citation);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
