//! `swapgraph`: command-line access to 2-swap configuration graphs.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use swapgraph_core::oracle::{self, check_isomorphism_map, ConfigGraph, PathValidator};
use swapgraph_core::pathfinder::{greedy_path, probe_conjecture};
use swapgraph_core::structure::{
    canonical_ball_map, clique_number, cliques_per_vertex, diameter_formula,
    total_maximal_cliques_paper, witness_pair,
};
use swapgraph_core::{Checkpoint, Enumerator, Error, ParikhVector, Swap, Word};

const SKIPPED: &str = "SKIPPED (too large)";

#[derive(Parser)]
#[command(
    name = "swapgraph",
    version,
    about = "Explore 2-swap configuration graphs of words"
)]
struct Cli {
    /// Largest explicit graph the brute-force commands will build.
    #[arg(long, global = true, env = "SWAPGRAPH_MAX_VERTICES", default_value_t = oracle::DEFAULT_VERTEX_CAP)]
    max_vertices: usize,

    /// Alphabet size for words given as comma-separated symbols.
    #[arg(long, global = true)]
    alphabet_size: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream a Hamiltonian path of G(P) as swaps "i j", starting at WORD.
    Enumerate {
        /// Start word; may be omitted with --resume.
        word: Option<String>,
        /// Also print the word reached after each swap.
        #[arg(long)]
        verbose: bool,
        /// Stop after this many swaps.
        #[arg(long)]
        limit: Option<u64>,
        /// Where to write a checkpoint when --limit stops the stream early.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from a checkpoint file.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Check a swap stream read from standard input, one "i j" per line.
    Verify {
        word: String,
        /// Also require every word of G(P) to be visited exactly once.
        #[arg(long)]
        hamiltonian: bool,
    },
    /// Closed-form diameter next to the brute-force value.
    Diameter { parikh: ParikhVector },
    /// Exact distance between two words by breadth-first search.
    Distance { w: String, v: String },
    /// A swap sequence from W to V of length at most n - max P[i].
    Path { w: String, v: String },
    /// Clique counts: closed forms and brute-force totals.
    Cliques { parikh: ParikhVector },
    /// The pair of words realising the diameter.
    Witness { parikh: ParikhVector },
    /// Check that the canonical position map is an isomorphism of radius-R balls.
    BallIso { u: String, v: String, r: usize },
    /// Compare greedy path lengths with exact distances.
    Probe {
        parikh: ParikhVector,
        /// Number of sampled source words; 0 means all of them.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print every compared pair, not only the mismatches.
        #[arg(long)]
        all: bool,
    },
    /// Measure enumeration delay on balanced random words (CSV).
    BenchDelay {
        /// Comma-separated word lengths.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "8,16,32,64,128,256,512,1024"
        )]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Swaps observed per size.
        #[arg(long, default_value_t = 100_000)]
        outputs: u64,
    },
    /// Export G(P).
    Graph {
        parikh: ParikhVector,
        #[arg(long, value_enum, default_value_t = GraphFormat::Adjacency)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    /// "id: word: neighbour ids"
    Adjacency,
    /// "u v" per edge
    Edges,
}

/// Why a command stopped without success.
enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check ran and did not hold: exit code 1.
    Check,
    /// Downstream closed the pipe; not an error.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

/// Writes one line and flushes, so pipes see output as it is produced.
struct Out<W: Write>(W);

impl<W: Write> Out<W> {
    fn line(&mut self, s: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.0, "{s}")?;
        self.0.flush()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = Out(stdout.lock());
    match run(&cli, &mut out) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("swapgraph: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run<W: Write>(cli: &Cli, out: &mut Out<W>) -> Outcome {
    let word = |s: &str| Word::parse(s, cli.alphabet_size);
    let cap = cli.max_vertices;
    match &cli.command {
        Command::Enumerate {
            word: start,
            verbose,
            limit,
            checkpoint,
            resume,
        } => {
            let start = start.as_deref().map(word).transpose()?;
            enumerate(
                out,
                start,
                *verbose,
                *limit,
                checkpoint.as_ref(),
                resume.as_ref(),
            )
        }
        Command::Verify {
            word: w,
            hamiltonian,
        } => verify(out, &word(w)?, *hamiltonian),
        Command::Diameter { parikh } => {
            let formula = diameter_formula(parikh);
            match ConfigGraph::build(parikh, cap) {
                Ok(g) => out.line(format!("formula={formula} oracle={}", g.diameter()))?,
                Err(Error::TooLarge { .. }) => {
                    out.line(format!("formula={formula} oracle={SKIPPED}"))?
                }
                Err(e) => return Err(e.into()),
            }
            Ok(())
        }
        Command::Distance { w, v } => {
            let (w, v) = (word(w)?, word(v)?);
            match oracle::bfs_distance_implicit(&w, &v, cap) {
                Ok(d) => out.line(format!("distance={d}"))?,
                Err(Error::TooLarge { .. }) => out.line(format!("distance={SKIPPED}"))?,
                Err(e) => return Err(e.into()),
            }
            Ok(())
        }
        Command::Path { w, v } => {
            for s in greedy_path(&word(w)?, &word(v)?)? {
                out.line(s)?;
            }
            Ok(())
        }
        Command::Cliques { parikh } => {
            // clique search keeps a bitset adjacency matrix, so it has its own cap
            let clique_cap = cap.min(oracle::DEFAULT_CLIQUE_CAP);
            let oracle_total = ConfigGraph::build(parikh, clique_cap)
                .and_then(|g| g.maximal_cliques(clique_cap))
                .map(|c| c.len().to_string());
            let oracle_total = match oracle_total {
                Ok(t) => t,
                Err(Error::TooLarge { .. }) => SKIPPED.to_string(),
                Err(e) => return Err(e.into()),
            };
            out.line(format!(
                "clique_number={} per_vertex={} formula_total={} oracle_total={oracle_total}",
                clique_number(parikh),
                cliques_per_vertex(parikh),
                total_maximal_cliques_paper(parikh),
            ))?;
            Ok(())
        }
        Command::Witness { parikh } => {
            let wp = witness_pair(parikh);
            let distance = match oracle::bfs_distance_implicit(&wp.w, &wp.v, cap) {
                Ok(d) => d.to_string(),
                Err(Error::TooLarge { .. }) => SKIPPED.to_string(),
                Err(e) => return Err(e.into()),
            };
            out.line(format!("{} {} distance={distance}", wp.w, wp.v))?;
            Ok(())
        }
        Command::BallIso { u, v, r } => {
            let (u, v) = (word(u)?, word(v)?);
            let pi = canonical_ball_map(&u, &v)?;
            let g = ConfigGraph::build(&u.parikh(), cap)?;
            let (bu, bv) = (g.ball(&u, *r)?, g.ball(&v, *r)?);
            let ok = check_isomorphism_map(&bu, &bv, &pi);
            let pi: Vec<String> = pi.iter().map(ToString::to_string).collect();
            out.line(format!(
                "pi={} ball_size={} isomorphic={ok}",
                pi.join(","),
                bu.len()
            ))?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Probe {
            parikh,
            samples,
            seed,
            all,
        } => {
            let mut lines = Vec::new();
            let summary = probe_conjecture(parikh, *samples, *seed, cap, |r| {
                if *all || !r.matches() {
                    lines.push(r.to_string());
                }
            })?;
            out.line(&summary)?;
            for l in lines {
                out.line(l)?;
            }
            Ok(())
        }
        Command::BenchDelay {
            sizes,
            sigma,
            seed,
            outputs,
        } => bench_delay(out, sizes, *sigma, *seed, *outputs),
        Command::Graph { parikh, format } => {
            let g = ConfigGraph::build(parikh, cap)?;
            match format {
                GraphFormat::Adjacency => g.write_adjacency(&mut out.0)?,
                GraphFormat::Edges => g.write_edge_list(&mut out.0)?,
            }
            out.0.flush()?;
            Ok(())
        }
    }
}

fn enumerate<W: Write>(
    out: &mut Out<W>,
    start: Option<Word>,
    verbose: bool,
    limit: Option<u64>,
    checkpoint: Option<&PathBuf>,
    resume: Option<&PathBuf>,
) -> Outcome {
    let mut e = match (resume, start) {
        (Some(path), start) => {
            let cp: Checkpoint = fs::read_to_string(path)?.parse()?;
            if let Some(s) = start {
                if s != cp.start {
                    return Err(Failure::Usage(format!(
                        "checkpoint starts at {}, not {s}",
                        cp.start
                    )));
                }
            }
            Enumerator::resume(&cp)?
        }
        (None, Some(start)) => Enumerator::new(&start)?,
        (None, None) => return Err(Failure::Usage("enumerate needs a word or --resume".into())),
    };
    let mut word = e.current_word();
    let mut emitted = 0u64;
    while limit.is_none_or(|k| emitted < k) {
        let Some(s) = e.next() else {
            return Ok(());
        };
        emitted += 1;
        if verbose {
            word.swap_in_place(s)?;
            out.line(format!("{s} -> {word}"))?;
        } else {
            out.line(s)?;
        }
    }
    let cp = e.checkpoint();
    match checkpoint {
        Some(path) => fs::write(path, cp.to_string())?,
        None => eprint!("{cp}"),
    }
    Ok(())
}

fn verify<W: Write>(out: &mut Out<W>, start: &Word, hamiltonian: bool) -> Outcome {
    let mut validator = PathValidator::new(start, hamiltonian);
    for line in io::stdin().lock().lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let ok = match line.parse::<Swap>() {
            Ok(s) => validator.push(s),
            Err(_) => {
                validator.fail();
                false
            }
        };
        if !ok {
            break;
        }
    }
    let r = validator.report();
    let failure = r.failure_step.map_or("none".to_string(), |k| k.to_string());
    out.line(format!(
        "{} valid={} visits_all={} repeats={} failure_step={failure} steps={} visited={}",
        if r.passed() { "PASS" } else { "FAIL" },
        r.valid,
        r.visits_all,
        r.repeats,
        r.steps,
        r.visited
    ))?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn bench_delay<W: Write>(
    out: &mut Out<W>,
    sizes: &[usize],
    sigma: usize,
    seed: u64,
    outputs: u64,
) -> Outcome {
    if sigma == 0 {
        return Err(Failure::Usage("--sigma must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.line("n,sigma,max_ops,outputs")?;
    for &n in sizes {
        let mut symbols: Vec<usize> = (0..n).map(|k| k % sigma + 1).collect();
        symbols.shuffle(&mut rng);
        let start = Word::new(&symbols, sigma)?;
        let mut e = Enumerator::new(&start)?;
        while e.delay_stats().outputs < outputs && e.next().is_some() {}
        let s = e.delay_stats();
        out.line(format!(
            "{n},{sigma},{},{}",
            s.max_ops_between_outputs, s.outputs
        ))?;
    }
    Ok(())
}
