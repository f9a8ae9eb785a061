//! `sbrep`: superboolean representations of hereditary collections.
//!
//! Exit codes: 0 success, 1 verification failed, 2 input or limit error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use sbrep::catalog;
use sbrep::format::{self, MatrixFile};
use sbrep::hereditary::{AxiomReport, AXIOM_GROUND_LIMIT};
use sbrep::represent::{self, Alphabet, Representation};
use sbrep::{ElementSet, HereditaryCollection};

#[derive(Parser)]
#[command(name = "sbrep", version, about = "Superboolean representations of hereditary collections and matroids")]
struct Cli {
    /// Write the result here instead of standard output (a directory for `examples`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Run exhaustive checks beyond the default ground-set limit.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank (and permanent or determinant when square) of an `sb` or `gf` matrix.
    Rank { matrix: PathBuf },
    /// PR, BR, matroid and exchange-property report for an `hc` collection.
    Check { collection: PathBuf },
    /// Build a superboolean matrix representing a collection.
    Represent {
        collection: PathBuf,
        #[arg(long, value_enum, default_value_t = From::Bases)]
        from: From,
        /// Drop repeated rows and rows without a 1.
        #[arg(long)]
        reduce: bool,
    },
    /// Check that a matrix represents a collection.
    Verify { matrix: PathBuf, collection: PathBuf },
    /// Boolean representation of the vector matroid of a `gf` matrix.
    BooleanFromField {
        matrix: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Block-diagonal sum of boolean `sb` matrices.
    DirectSum {
        #[arg(num_args = 2.., required = true)]
        matrices: Vec<PathBuf>,
    },
    /// Dual collection.
    Dual { collection: PathBuf },
    /// Minor: delete then contract (1-based, comma separated).
    Minor {
        collection: PathBuf,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Graphic matroid of a `graph` file.
    Graphic { graph: PathBuf },
    /// Write a catalog example: fano, nonfano, fano-sum, mk4, w3, u <m> <n>, k4.
    Examples {
        name: String,
        args: Vec<usize>,
    },
    /// Smallest number of rows of a representing matrix.
    Minrows {
        collection: PathBuf,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Sb)]
        alphabet: AlphabetArg,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum From {
    Bases,
    Circuits,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Bool,
    Sb,
}

/// Verification failure, reported with exit code 1.
#[derive(Debug)]
struct Mismatch(String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Mismatch {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Mismatch>() => {
            eprintln!("verification failed: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_hc(path: &Path) -> anyhow::Result<HereditaryCollection> {
    format::parse_hc(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse_ids(text: &str, n: usize) -> anyhow::Result<ElementSet> {
    let mut set = ElementSet::EMPTY;
    for token in text.split(',').filter(|t| !t.is_empty()) {
        let e: usize = token
            .trim()
            .parse()
            .with_context(|| format!("invalid element `{token}`"))?;
        if e == 0 || e > n {
            bail!("element {e} is outside 1..={n}");
        }
        set.insert(e - 1);
    }
    Ok(set)
}

fn ensure_verified(r: &Representation, h: &HereditaryCollection) -> anyhow::Result<()> {
    let found = r.vector_hc();
    if found != *h {
        let x = found.first_disagreement(h).expect("collections differ");
        return Err(Mismatch(format!(
            "column set {x} is {} in the matrix but {} in the collection",
            if found.contains(x) { "independent" } else { "dependent" },
            if h.contains(x) { "independent" } else { "dependent" },
        ))
        .into());
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Rank { matrix } => {
            let text = read(matrix)?;
            let out = match format::parse_matrix(&text)? {
                MatrixFile::Superboolean(a) => {
                    let mut out = format!("rank={}\n", a.rank());
                    if a.is_square() {
                        out += &format!("permanent={}\n", a.permanent()?);
                    }
                    out
                }
                MatrixFile::Field(a) => {
                    let mut out = format!("rank={}\n", a.gf_rank());
                    if a.rows() == a.cols() {
                        out += &format!("determinant={}\n", a.determinant()?);
                    }
                    out
                }
            };
            emit(cli, &out)
        }
        Command::Check { collection } => {
            let h = read_hc(collection)?;
            if cli.force && h.ground_size() > AXIOM_GROUND_LIMIT {
                eprintln!(
                    "forcing exhaustive checks over 2^{} subsets",
                    h.ground_size()
                );
            }
            let r = AxiomReport::compute(&h, cli.force)?;
            let out = format!(
                "PR={}\nBR={}\nMT={}\nEP={}\nDEP={}\nSEP={}\nrank={}\nbases={}\n",
                yes_no(r.pr),
                yes_no(r.br),
                yes_no(r.matroid),
                yes_no(r.exchange.ep),
                yes_no(r.exchange.dep),
                yes_no(r.exchange.sep),
                r.rank,
                r.basis_count,
            );
            emit(cli, &out)
        }
        Command::Represent {
            collection,
            from,
            reduce,
        } => {
            let h = read_hc(collection)?;
            let mut r = match from {
                From::Bases => represent::represent_from_bases(&h),
                From::Circuits => represent::represent_from_circuits(&h)?,
            };
            if *reduce {
                r = represent::reduce_rows(&r);
            }
            ensure_verified(&r, &h)?;
            emit(cli, &format::print_sb(r.matrix()))
        }
        Command::Verify { matrix, collection } => {
            let h = read_hc(collection)?;
            let found = match format::parse_matrix(&read(matrix)?)? {
                MatrixFile::Superboolean(a) => Representation::new(a),
                MatrixFile::Field(a) => {
                    if a.cols() != h.ground_size() {
                        bail!(sbrep::Error::GroundSizeMismatch {
                            left: a.cols(),
                            right: h.ground_size()
                        });
                    }
                    let m = a.vector_matroid();
                    if m != h {
                        let x = m.first_disagreement(&h).expect("collections differ");
                        return Err(Mismatch(format!("column set {x} disagrees")).into());
                    }
                    return emit(cli, "verified\n");
                }
            };
            if found.ground_size() != h.ground_size() {
                bail!(sbrep::Error::GroundSizeMismatch {
                    left: found.ground_size(),
                    right: h.ground_size()
                });
            }
            ensure_verified(&found, &h)?;
            emit(cli, "verified\n")
        }
        Command::BooleanFromField { matrix, reduce } => {
            let a = format::parse_gf(&read(matrix)?)?;
            let mut r = represent::boolean_from_field(&a)?;
            if *reduce {
                r = represent::reduce_rows(&r);
            }
            ensure_verified(&r, &a.vector_matroid())?;
            emit(cli, &format::print_sb(r.matrix()))
        }
        Command::DirectSum { matrices } => {
            let reps = matrices
                .iter()
                .map(|p| {
                    let a = format::parse_sb(&read(p)?, true)
                        .with_context(|| format!("parsing {}", p.display()))?;
                    Ok(Representation::boolean(a)?)
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            let sum = represent::direct_sum_rep(&reps);
            emit(cli, &format::print_sb(sum.matrix()))
        }
        Command::Dual { collection } => {
            let h = read_hc(collection)?;
            emit(cli, &format::print_hc(&h.dual()))
        }
        Command::Minor {
            collection,
            delete,
            contract,
        } => {
            let h = read_hc(collection)?;
            let d = parse_ids(delete, h.ground_size())?;
            let c = parse_ids(contract, h.ground_size())?;
            let minor = h.minor(d, c)?;
            let labels: Vec<String> = minor.labels.iter().map(|l| (l + 1).to_string()).collect();
            eprintln!("elements 1..={} are original {}", labels.len(), labels.join(" "));
            emit(cli, &format::print_hc(&minor.collection))
        }
        Command::Graphic { graph } => {
            let g = format::parse_graph(&read(graph)?)?;
            let m = g.graphic_matroid();
            if g.is_connected() {
                eprintln!(
                    "boolean incidence matrix gives the same matroid: {}",
                    yes_no(g.boolean_graphic_equals_gf2()?)
                );
            }
            emit(cli, &format::print_hc(&m))
        }
        Command::Examples { name, args } => {
            let entry = catalog::lookup(name, args)?;
            entry.self_check().map_err(Mismatch)?;
            let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let stem = entry.name.replace(' ', "-");
            let mut files = vec![(format!("{stem}.hc"), format::print_hc(&entry.collection))];
            for (label, a) in &entry.sb {
                files.push((format!("{stem}.{label}.sb"), format::print_sb(a)));
            }
            for (label, a) in &entry.gf {
                files.push((format!("{stem}.{label}.gf"), format::print_gf(a)));
            }
            if let Some(g) = &entry.graph {
                files.push((format!("{stem}.graph"), format::print_graph(g)));
            }
            println!("{}: {}", entry.name, entry.note);
            for (file, text) in files {
                let path = dir.join(&file);
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Minrows {
            collection,
            alphabet,
            cap,
        } => {
            let h = read_hc(collection)?;
            let alphabet = match alphabet {
                AlphabetArg::Bool => Alphabet::Boolean,
                AlphabetArg::Sb => Alphabet::SuperBoolean,
            };
            let out = match represent::min_rows(&h, alphabet, *cap)? {
                Some((m, r)) => format!("m={m}\n{}", format::print_sb(r.matrix())),
                None => "none within cap\n".to_string(),
            };
            emit(cli, &out)
        }
    }
}
