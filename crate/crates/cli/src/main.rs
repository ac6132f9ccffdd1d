use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braidet::record::{compute, Input, Route};
use braidet::table::{cmd_table, TableFormat};
use braidet::verify::{self, Grid, SuiteReport};
use braidet::{pool, Error, Result};
use braidet_core::braid::TghwParams;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "braidet", version, about = "Knot determinants and Alexander polynomials of closed 3-braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant, Alexander polynomial and classification, one JSON line per input.
    Det {
        /// `m1,m2,n,l` literals (or braid words with --word). Read from stdin, one per line, when absent.
        #[arg(allow_hyphen_values = true)]
        inputs: Vec<String>,
        /// Treat inputs as braid words such as "s1^3 s2^-1".
        #[arg(long)]
        word: bool,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
    },
    /// Determinant table for a parameter file.
    Table {
        paramfile: PathBuf,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Upper bound for weaving (n), torus (q) and one-five (n).
        #[arg(long)]
        max: Option<u32>,
        /// Hybrid suite bound on m.
        #[arg(long)]
        m_max: Option<u32>,
        /// Hybrid suite bound on n.
        #[arg(long)]
        n_max: Option<u32>,
        /// One-five suite twist range [-l_max, l_max].
        #[arg(long)]
        l_max: Option<u32>,
        /// Route grid `m1_max,m2_max,n_max,l_max`.
        #[arg(long)]
        grid: Option<Grid>,
        /// Number of random words for burau-props.
        #[arg(long, default_value_t = 1000)]
        words: usize,
        /// Maximum random word length for burau-props.
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Print the family braid word for `m1,m2,n,l`.
    Expand {
        #[arg(allow_hyphen_values = true)]
        params: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Weaving,
    Hybrid,
    Torus,
    OneFive,
    Routes,
    BurauProps,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("braidet: {e}");
            ExitCode::from(&e)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let pool = pool::thread_pool()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Det {
            inputs,
            word,
            route,
        } => {
            let inputs = if inputs.is_empty() {
                read_stdin_lines()?
            } else {
                inputs
            };
            let parsed = inputs
                .iter()
                .map(|s| {
                    if word {
                        Input::parse_word(s)
                    } else {
                        Input::parse_params(s)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let records: Vec<_> =
                pool.install(|| parsed.par_iter().map(|i| compute(i, route)).collect());
            for record in records {
                let record = record?;
                writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?;
            }
        }
        Command::Table { paramfile, format } => {
            let text = std::fs::read_to_string(&paramfile).map_err(|e| {
                Error::Input(format!("{}: {e}", paramfile.display()))
            })?;
            let rendered = pool.install(|| cmd_table(&text, format))?;
            out.write_all(rendered.as_bytes())?;
        }
        Command::Verify {
            suite,
            max,
            m_max,
            n_max,
            l_max,
            grid,
            words,
            max_len,
            seed,
        } => {
            let l = l_max.unwrap_or(3) as i32;
            let grid = grid.unwrap_or(Grid {
                m1_max: 6,
                m2_max: 6,
                n_max: 8,
                l_max: 3,
            });
            let selected: &[Suite] = match suite {
                Suite::All => &[
                    Suite::Weaving,
                    Suite::Hybrid,
                    Suite::Torus,
                    Suite::OneFive,
                    Suite::Routes,
                    Suite::BurauProps,
                ],
                ref one => std::slice::from_ref(one),
            };
            let reports: Vec<SuiteReport> = pool.install(|| {
                selected
                    .iter()
                    .map(|s| match s {
                        Suite::Weaving => verify::weaving(max.unwrap_or(30)),
                        Suite::Hybrid => verify::hybrid(m_max.unwrap_or(15), n_max.unwrap_or(15)),
                        Suite::Torus => verify::torus(max.unwrap_or(50)),
                        Suite::OneFive => verify::one_five(max.unwrap_or(20), -l..=l),
                        Suite::Routes => verify::routes(grid),
                        Suite::BurauProps => verify::burau_props(words, max_len, seed),
                        Suite::All => unreachable!("expanded above"),
                    })
                    .collect()
            });
            let mut failed = 0;
            for report in &reports {
                writeln!(out, "{}", serde_json::to_string(report).expect("serializable"))?;
                for f in &report.failures {
                    eprintln!(
                        "FAIL {} {} [{}]: {} != {}",
                        report.suite, f.input, f.check, f.left, f.right
                    );
                }
                failed += report.failures.len();
            }
            if failed > 0 {
                out.flush()?;
                return Err(Error::Verification { failed });
            }
        }
        Command::Expand { params } => {
            let p: TghwParams = params
                .parse()
                .map_err(|e| Error::Input(format!("{params:?}: {e}")))?;
            writeln!(out, "{}", p.expand())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn read_stdin_lines() -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            lines.push(trimmed.to_string());
        }
    }
    Ok(lines)
}
