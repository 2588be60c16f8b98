//! Command dispatch. [`run`] is the whole program minus process plumbing,
//! so tests can drive it directly.
//!
//! Exit codes: 0 on success or a true verdict, 1 on bad input, 2 when a
//! check fails or a verdict is false.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cvector_core::enumeration::{bfs_exchange, verify_all, DEFAULT_ROOT_DEPTH};
use cvector_core::exceptional::{
    all_factorizations, hurwitz_orbit, is_cvector_collection, mu_rev, ClassSeq, Factorization,
};
use cvector_core::exchange::{ExchangeMatrix, MutationWord};
use cvector_core::framework::{b_from_c, framework_mutate, CTuple};
use cvector_core::linalg::{IntMatrix, Vector};
use cvector_core::roots::RootLatticeForms;

use crate::error::{input, CliError, Result};
use crate::formats::{
    render_dot, render_graph_text, render_inline, render_records, render_report, render_seed,
    render_tuple, render_verdict, GraphRecords,
};
use crate::input::{parse_matrix, parse_vectors, parse_word, read_source};

#[derive(Debug, Parser)]
#[command(
    name = "cvector",
    version,
    about = "Exact c-vector computations for acyclic exchange matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MatrixArg {
    /// JSON document {"B": [[..]], "d": [..]}: a path, `-` for stdin, or inline
    #[arg(long)]
    matrix: String,
}

#[derive(Debug, Args)]
struct WordArg {
    /// Comma-separated 1-based mutation labels
    #[arg(long, default_value = "")]
    word: String,
}

#[derive(Debug, Args)]
struct RootDepthArg {
    /// Reflection depth for real-root enumeration
    #[arg(long, default_value_t = DEFAULT_ROOT_DEPTH)]
    root_depth: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    /// DOT
    Graph,
    /// JSON Lines
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the extended matrix after a mutation word
    Mutate {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        word: WordArg,
    },
    /// Print the c-vectors after a mutation word, cross-checked against the framework
    Cvectors {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        word: WordArg,
    },
    /// Decide whether n vectors are the c-vectors of some seed
    CheckCvectors {
        #[command(flatten)]
        matrix: MatrixArg,
        /// JSON array of vectors: a path, `-`, or inline
        #[arg(long)]
        vectors: String,
        #[command(flatten)]
        roots: RootDepthArg,
    },
    /// Breadth-first exchange graph
    Enumerate {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every consistency check over the exchange graph
    Verify {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Apply the reversal operator to a class sequence (default: simples)
    Murev {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        vectors: Option<String>,
    },
    /// Hurwitz orbit of a factorization of the Coxeter element (default: simples)
    HurwitzOrbit {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        vectors: Option<String>,
        #[command(flatten)]
        roots: RootDepthArg,
    },
    /// Every reflection factorization of the Coxeter element
    Factorizations {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        roots: RootDepthArg,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        Self {
            code: 2,
            stdout,
            stderr,
        }
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command, &mut Sources::new(stdin)) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

/// Stdin may back at most one document.
struct Sources<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl<'a> Sources<'a> {
    fn new(stdin: &'a mut dyn Read) -> Self {
        Self { stdin, used: false }
    }

    fn read(&mut self, arg: &str) -> Result<String> {
        if arg == "-" {
            if self.used {
                return Err(input("stdin can supply only one document"));
            }
            self.used = true;
        }
        read_source(arg, self.stdin)
    }

    fn matrix(&mut self, arg: &MatrixArg) -> Result<ExchangeMatrix> {
        parse_matrix(&self.read(&arg.matrix)?)
    }

    fn vectors(&mut self, arg: &str, rank: usize) -> Result<Vec<Vector>> {
        parse_vectors(&self.read(arg)?, rank)
    }

    /// Exactly `rank` vectors.
    fn tuple(&mut self, arg: &str, rank: usize) -> Result<Vec<Vector>> {
        let vs = self.vectors(arg, rank)?;
        if vs.len() != rank {
            return Err(input(format!(
                "expected {rank} vectors, found {}",
                vs.len()
            )));
        }
        Ok(vs)
    }
}

fn word(b: &ExchangeMatrix, arg: &WordArg) -> Result<MutationWord> {
    Ok(MutationWord::from_one_based(
        &parse_word(&arg.word)?,
        b.rank(),
    )?)
}

fn lines<'a>(items: impl IntoIterator<Item = &'a Factorization>) -> String {
    items
        .into_iter()
        .map(|f| {
            let roots: Vec<Vector> = f.roots().iter().map(|r| r.coords().to_vec()).collect();
            render_inline(&roots) + "\n"
        })
        .collect()
}

fn dispatch(command: Command, src: &mut Sources<'_>) -> Result<Outcome> {
    match command {
        Command::Mutate { matrix, word: w } => {
            let b = src.matrix(&matrix)?;
            let seed = b.initial_seed().apply_word(&word(&b, &w)?)?;
            Ok(Outcome::ok(render_seed(&seed)))
        }
        Command::Cvectors { matrix, word: w } => {
            let b = src.matrix(&matrix)?;
            let w = word(&b, &w)?;
            let c = b.initial_seed().apply_word(&w)?.c_vectors();
            let forms = RootLatticeForms::from_exchange(&b);
            let mut tuple = CTuple::base(b.rank());
            for &k in w.labels() {
                tuple = match framework_mutate(&forms, &tuple, k) {
                    Ok(t) => t,
                    Err(e) => {
                        return Ok(Outcome::failed(
                            render_tuple(&c),
                            format!("framework: {e}\n"),
                        ))
                    }
                };
            }
            if tuple.entries() != c.as_slice() {
                let msg = format!("framework disagrees: {}\n", render_inline(tuple.entries()));
                return Ok(Outcome::failed(render_tuple(&c), msg));
            }
            Ok(Outcome::ok(render_tuple(&c)))
        }
        Command::CheckCvectors {
            matrix,
            vectors,
            roots,
        } => {
            let b = src.matrix(&matrix)?;
            let vs = src.tuple(&vectors, b.rank())?;
            let forms = RootLatticeForms::from_exchange(&b);
            let system = forms.real_roots(roots.root_depth);
            let verdict = is_cvector_collection(&forms, &system, &vs)?;
            if verdict.is_accepted() {
                let top = b_from_c(&forms, &CTuple::new(vs.clone()))?;
                let m = top.vstack(&IntMatrix::from_columns(&vs)?);
                Ok(Outcome::ok(render_verdict(&verdict, Some(&m))))
            } else {
                Ok(Outcome::failed(
                    render_verdict(&verdict, None),
                    String::new(),
                ))
            }
        }
        Command::Enumerate {
            matrix,
            depth,
            format,
        } => {
            let b = src.matrix(&matrix)?;
            let g = GraphRecords::from_graph(&bfs_exchange(&b, depth)?, b.rank());
            Ok(Outcome::ok(match format {
                Format::Text => render_graph_text(&g),
                Format::Graph => render_dot(&g),
                Format::Records => render_records(&g),
            }))
        }
        Command::Verify { matrix, depth } => {
            let b = src.matrix(&matrix)?;
            let report = verify_all(&b, depth);
            let text = render_report(&report);
            Ok(if report.passed() {
                Outcome::ok(text)
            } else {
                Outcome::failed(text, String::new())
            })
        }
        Command::Murev { matrix, vectors } => {
            let b = src.matrix(&matrix)?;
            let s = match vectors {
                Some(arg) => ClassSeq::new(src.tuple(&arg, b.rank())?),
                None => ClassSeq::simples(b.rank()),
            };
            let forms = RootLatticeForms::from_exchange(&b);
            Ok(Outcome::ok(render_tuple(mu_rev(&forms, &s)?.classes())))
        }
        Command::HurwitzOrbit {
            matrix,
            vectors,
            roots,
        } => {
            let b = src.matrix(&matrix)?;
            let forms = RootLatticeForms::from_exchange(&b);
            let start = match vectors {
                Some(arg) => Factorization::new(&forms, src.tuple(&arg, b.rank())?)?,
                None => Factorization::simple(&forms),
            };
            let system = forms.real_roots(roots.root_depth);
            Ok(Outcome::ok(lines(&hurwitz_orbit(&forms, &system, &start)?)))
        }
        Command::Factorizations { matrix, roots } => {
            let b = src.matrix(&matrix)?;
            let forms = RootLatticeForms::from_exchange(&b);
            let system = forms.real_roots(roots.root_depth);
            Ok(Outcome::ok(lines(&all_factorizations(&forms, &system)?)))
        }
    }
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}
