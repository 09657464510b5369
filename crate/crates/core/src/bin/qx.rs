use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qindex::bounds::{das_bound, merris_bound};
use qindex::patterns::{contains_cycle, parse_pattern_list};
use qindex::search::{count_sharded, enumerate, find_extremal_sharded, EnumerationSpec, Objective};
use qindex::spectra::{mu_index, q_index};
use qindex::verify::report::{render, ReportFormat};
use qindex::verify::{fmt_sig, run_suite, SuiteConfig, Verdict};
use qindex::{families, graph6, FamilySpec, Graph, Result};

#[derive(Parser)]
#[command(name = "qx", version, about = "Q-index tools and exhaustive extremal verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family (F:9, S:9,2, S+:10,2, T2:8, K1T:7, ...) and report q.
    Family { spec: FamilySpec },
    /// Signless-Laplacian spectral radius of a graph6 graph.
    Q { graph6: String },
    /// Adjacency spectral radius of a graph6 graph.
    Mu { graph6: String },
    /// Merris and Das upper bounds with their slack.
    Bounds { graph6: String },
    /// Whether the graph contains a cycle of length k.
    Cycles {
        graph6: String,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive maximum of q (or mu) over graphs avoiding the given patterns.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Comma-separated list such as C4,C5 or P5.
        #[arg(long, default_value = "")]
        forbid: String,
        #[arg(long, default_value = "q")]
        objective: Objective,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Lift the desk-scale order limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// Suite file, or `default`.
        #[arg(long, default_value = "default")]
        suite: String,
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the suite's shard count.
        #[arg(long)]
        shards: Option<usize>,
    },
    /// List one graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        forbid: String,
        #[arg(long)]
        connected: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only print the class count, split over this many shards.
        #[arg(long)]
        count_shards: Option<usize>,
        #[arg(long)]
        allow_large: bool,
    },
}

fn decode(s: &str) -> Result<Graph> {
    graph6::decode(s.trim())
}

fn spec_for(n: usize, forbid: &str, connected: bool, allow_large: bool) -> Result<EnumerationSpec> {
    let mut spec = EnumerationSpec::new(n).connected(connected);
    for p in parse_pattern_list(forbid)? {
        spec = spec.forbid(p);
    }
    spec.allow_large = allow_large;
    Ok(spec)
}

fn print_bounds(g: &Graph) -> Result<()> {
    match merris_bound(g) {
        Ok(m) => println!("merris  {} (vertex {}, slack {})", fmt_sig(m.value), m.vertex.unwrap_or(0), fmt_sig(m.slack)),
        Err(e) => println!("merris  n/a ({e})"),
    }
    match das_bound(g) {
        Ok(d) if g.is_connected() => println!("das     {} (slack {})", fmt_sig(d.value), fmt_sig(d.slack)),
        Ok(d) => println!("das     {} (slack {}, graph is disconnected)", fmt_sig(d.value), fmt_sig(d.slack)),
        Err(e) => println!("das     n/a ({e})"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Family { spec } => {
            let g = families::build(&spec)?;
            println!("family  {spec}");
            println!("graph6  {}", graph6::encode(&g));
            println!("q       {}", fmt_sig(q_index(&g)?.value));
            match families::q_closed(&spec) {
                Some(c) => println!("closed  {}", fmt_sig(c)),
                None => println!("closed  n/a"),
            }
            if spec.kind == families::FamilyKind::Friendship {
                if let Ok((lo, hi)) = families::friendship_bounds(spec.n) {
                    println!("interval ({}, {})", fmt_sig(lo), fmt_sig(hi));
                }
            }
            print_bounds(&g)?;
        }
        Command::Q { graph6 } => println!("{}", fmt_sig(q_index(&decode(&graph6)?)?.value)),
        Command::Mu { graph6 } => println!("{}", fmt_sig(mu_index(&decode(&graph6)?)?.value)),
        Command::Bounds { graph6 } => {
            let g = decode(&graph6)?;
            println!("q       {}", fmt_sig(q_index(&g)?.value));
            print_bounds(&g)?;
        }
        Command::Cycles { graph6, k } => {
            let found = contains_cycle(&decode(&graph6)?, k)?;
            println!("C{k} {}", if found { "present" } else { "absent" });
        }
        Command::Extremal { n, forbid, objective, connected, shards, allow_large } => {
            let spec = spec_for(n, &forbid, connected, allow_large)?;
            let out = find_extremal_sharded(&spec, objective, shards.max(1))?;
            println!("max {objective} = {}", fmt_sig(out.max_value));
            for (g6, v) in out.maximizer_graph6.iter().zip(&out.maximizer_values) {
                println!("{g6}\t{}", fmt_sig(*v));
            }
            eprintln!(
                "{} classes, {} spectra, {:.3} s",
                out.graphs_examined,
                out.spectra_evaluated,
                out.wall_time.as_secs_f64()
            );
        }
        Command::Verify { suite, format, out, shards } => {
            let mut cfg = SuiteConfig::load(&suite)?;
            if let Some(s) = shards {
                cfg.shards = s.max(1);
            }
            let certs = run_suite(&cfg)?;
            let text = render(&certs, format)?;
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            let failed: Vec<_> = certs.iter().filter(|c| c.verdict == Verdict::Fails).collect();
            eprintln!("{} certificates, {} failing", certs.len(), failed.len());
            for c in &failed {
                eprintln!("FAILS {} n={}: {}", c.claim, c.n, c.note);
            }
            if !failed.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Enumerate { n, forbid, connected, out, count_shards, allow_large } => {
            let spec = spec_for(n, &forbid, connected, allow_large)?;
            if let Some(s) = count_shards {
                let counts = count_sharded(&spec, s.max(1))?;
                println!("{}", counts.iter().sum::<u64>());
                return Ok(ExitCode::SUCCESS);
            }
            let mut sink: Box<dyn Write> = match out {
                Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
                None => Box::new(std::io::BufWriter::new(std::io::stdout().lock())),
            };
            let mut io_err = None;
            let count = enumerate(&spec, |g| {
                if io_err.is_none() {
                    if let Err(e) = writeln!(sink, "{}", graph6::encode(g)) {
                        io_err = Some(e);
                    }
                }
            })?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            sink.flush()?;
            eprintln!("{count} classes");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
