use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pseudocone::analysis::{analyze, AnalysisOptions, AnalysisReport, Caps};
use pseudocone::construct::{circulant, cyclic_code_from_generator, cyclic_parity_check, eg_point_hyperplane_h, hamming_simplex_h};
use pseudocone::decode::{simulate, to_csv, DecodeError, SimConfig, TrialPolicy};
use pseudocone::gf2::{BinaryMatrix, Gf2Error};
use pseudocone::io::{parse_matrix, serialize_alist};

#[derive(Parser)]
#[command(name = "pseudocone", version, about = "Pseudo-codeword analysis of binary LDPC codes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest n for extreme-ray enumeration
    #[arg(long, global = true, default_value_t = Caps::default().ray_n)]
    cap_ray_n: usize,
    /// Largest code dimension for codeword enumeration
    #[arg(long, global = true, default_value_t = Caps::default().codeword_k)]
    cap_codeword_k: usize,
    /// Largest n for the stopping-set branch and bound
    #[arg(long, global = true, default_value_t = Caps::default().stopping_n)]
    cap_stopping_n: usize,
    /// Largest n for listing every stopping set
    #[arg(long, global = true, default_value_t = Caps::default().exhaustive_n)]
    cap_exhaustive_n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; falls back to PSEUDOCONE_THREADS
    #[arg(long, global = true, env = "PSEUDOCONE_THREADS")]
    threads: Option<usize>,
    /// Include per-step timings in reports
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a parity-check matrix and write it as alist
    Construct {
        #[command(subcommand)]
        kind: Construction,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Analyze a matrix; without flags only structure and bounds are computed
    Analyze {
        file: PathBuf,
        #[arg(long)]
        rays: bool,
        #[arg(long)]
        stopping: bool,
        #[arg(long)]
        exhaustive_stopping: bool,
        #[arg(long)]
        min_distance: bool,
        /// Same as all four flags above
        #[arg(long)]
        all: bool,
        /// 1-based support of a minimum-weight codeword
        #[arg(long, value_delimiter = ',')]
        witness: Option<Vec<usize>>,
    },
    /// Run every analysis and report the optimality certificate
    Certify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        witness: Option<Vec<usize>>,
    },
    /// LP versus ML word-error rates over AWGN, as CSV
    Simulate {
        file: PathBuf,
        /// E_b/N_0 points in dB
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        snr: Vec<f64>,
        /// Trials per point, or the trial ceiling with --min-ml-errors
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop a point once this many ML errors are seen
        #[arg(long)]
        min_ml_errors: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the extreme rays of the fundamental cone
    Rays { file: PathBuf },
}

#[derive(Subcommand)]
enum Construction {
    /// Square circulant from its first row, e.g. 1101000
    Circulant { first_row: String },
    /// All non-zero simplex codewords as rows
    HammingSimplex { r: usize },
    /// Point-hyperplane incidence of EG(m, 2^s) without the origin
    Eg { m: usize, s: u32 },
    /// Cyclic code of length n from the exponents of g(x)
    Cyclic {
        n: usize,
        #[arg(value_delimiter = ',', required = true)]
        g: Vec<usize>,
        /// Write the generator matrix instead of the parity-check matrix
        #[arg(long)]
        generator_matrix: bool,
    },
}

enum Failure {
    Cap(String),
    Error(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.to_string())
    }
}

fn read_matrix(path: &Path) -> Result<BinaryMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Error(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(report: &AnalysisReport, global: &Global) -> Result<(), Failure> {
    let text = match global.format {
        Format::Json => report.to_json(global.timing),
        Format::Text => report.to_text(global.timing),
    };
    print!("{text}");
    if report.caps_hit.is_empty() {
        Ok(())
    } else {
        let names: Vec<&str> = report.caps_hit.iter().map(|c| c.cap).collect();
        Err(Failure::Cap(format!("caps exceeded: {}", names.join(", "))))
    }
}

fn zero_based(witness: Option<Vec<usize>>) -> Result<Option<Vec<usize>>, Failure> {
    witness
        .map(|w| {
            w.into_iter()
                .map(|i| i.checked_sub(1).ok_or_else(|| Failure::Error("witness indices are 1-based".into())))
                .collect()
        })
        .transpose()
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let caps = Caps {
        ray_n: g.cap_ray_n,
        codeword_k: g.cap_codeword_k,
        stopping_n: g.cap_stopping_n,
        exhaustive_n: g.cap_exhaustive_n,
    };
    match cli.command {
        Command::Construct { kind, output } => {
            let h = match kind {
                Construction::Circulant { first_row } => {
                    let bits = first_row
                        .chars()
                        .filter(|c| !c.is_whitespace() && *c != ',')
                        .map(|c| match c {
                            '0' => Ok(0u8),
                            '1' => Ok(1u8),
                            other => Err(Failure::Error(format!("`{other}` is not a bit"))),
                        })
                        .collect::<Result<Vec<u8>, _>>()?;
                    circulant(&bits)?
                }
                Construction::HammingSimplex { r } => hamming_simplex_h(r)?,
                Construction::Eg { m, s } => eg_point_hyperplane_h(m, s)?,
                Construction::Cyclic { n, g, generator_matrix } => {
                    if generator_matrix {
                        cyclic_code_from_generator(n, &g)?
                    } else {
                        cyclic_parity_check(n, &g)?
                    }
                }
            };
            write_out(output.as_deref(), &serialize_alist(&h))
        }
        Command::Analyze {
            file,
            rays,
            stopping,
            exhaustive_stopping,
            min_distance,
            all,
            witness,
        } => {
            let h = read_matrix(&file)?;
            let opts = AnalysisOptions {
                min_distance: min_distance || all,
                stopping: stopping || all,
                exhaustive_stopping: exhaustive_stopping || all,
                rays: rays || all,
                witness: zero_based(witness)?,
                caps,
            };
            emit(&analyze(&h, &file.display().to_string(), &opts)?, g)
        }
        Command::Certify { file, witness } => {
            let h = read_matrix(&file)?;
            let opts = AnalysisOptions {
                witness: zero_based(witness)?,
                caps,
                ..AnalysisOptions::everything()
            };
            emit(&analyze(&h, &file.display().to_string(), &opts)?, g)
        }
        Command::Rays { file } => {
            let h = read_matrix(&file)?;
            let opts = AnalysisOptions {
                rays: true,
                caps,
                ..AnalysisOptions::default()
            };
            emit(&analyze(&h, &file.display().to_string(), &opts)?, g)
        }
        Command::Simulate {
            file,
            snr,
            trials,
            seed,
            min_ml_errors,
            output,
        } => {
            let h = read_matrix(&file)?;
            let policy = match min_ml_errors {
                Some(min_errors) => TrialPolicy::UntilMlErrors {
                    min_errors,
                    max_trials: trials,
                },
                None => TrialPolicy::Fixed(trials),
            };
            let cfg = SimConfig {
                codeword_cap: caps.codeword_k,
                ..SimConfig::new(snr, policy, seed)
            };
            let points = simulate(&h, &cfg).map_err(|e| match e {
                DecodeError::RowWeightTooLarge { .. } | DecodeError::Code(Gf2Error::DimensionTooLarge { .. }) => {
                    Failure::Cap(e.to_string())
                }
                other => Failure::Error(other.to_string()),
            })?;
            write_out(output.as_deref(), &to_csv(&points))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Cap(msg)) => {
            eprintln!("pseudocone: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Error(msg)) => {
            eprintln!("pseudocone: error: {msg}");
            ExitCode::from(1)
        }
    }
}
