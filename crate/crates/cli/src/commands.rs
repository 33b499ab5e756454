use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use conjulin::embedding::{interlacing_report, solve_real_via_complex, RealSystem};
use conjulin::instances::{self, rng};
use conjulin::reduction::{is_reducible, reduce, reduction_matrices, solve};
use conjulin::{ConjugateSystem, Tolerance};
use tempfile::NamedTempFile;

use crate::mtx::{self, MtxError};
use crate::report::{pairs, Report};

pub const TOL_ENV: &str = "CONJULIN_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_IRREDUCIBLE: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;
pub const EXIT_NOT_POSITIVE_DEFINITE: i32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Matrix(#[from] MtxError),
    #[error(transparent)]
    Solver(#[from] conjulin::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid tolerance {0:?}")]
    Tolerance(String),
    #[error("--n must be at least 1")]
    EmptyInstance,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(conjulin::Error::NotPositiveDefinite { .. }) => EXIT_NOT_POSITIVE_DEFINITE,
            _ => EXIT_ERROR,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

#[derive(Debug, Parser)]
#[command(name = "conjulin", version, about = "Solve and reduce conjugate-linear systems Mz + N conj(z) = p")]
pub struct Cli {
    /// Residual tolerance; the rank tolerance is set to 1e-2 of it.
    /// Overrides CONJULIN_TOL.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the reduction Az = b and write A, b, U, V next to the report.
    Reduce {
        #[arg(long = "M")]
        m: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        #[arg(long = "p")]
        p: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve Mz + N conj(z) = p and report the affine solution set.
    Solve {
        #[arg(long = "M")]
        m: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        #[arg(long = "p")]
        p: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a real SPD system Ax = b through its complex Schur form.
    Embed {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long = "b")]
        b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Spectra, interlacing and condition numbers of a real SPD matrix.
    Analyze {
        #[arg(long = "A")]
        a: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a deterministic random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Spd,
    Unique,
    Reducible,
    Irreducible,
}

/// Files written together: everything goes to temporaries in the target
/// directory first and is renamed into place by `commit`.
#[derive(Default)]
struct Staged {
    files: Vec<(NamedTempFile, PathBuf)>,
}

impl Staged {
    fn add(&mut self, path: PathBuf, contents: &str) -> Result<(), CliError> {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d.to_owned(),
            _ => PathBuf::from("."),
        };
        let mut tmp = NamedTempFile::new_in(&dir).map_err(io_err(&dir))?;
        tmp.write_all(contents.as_bytes()).map_err(io_err(&path))?;
        tmp.as_file().sync_all().map_err(io_err(&path))?;
        self.files.push((tmp, path));
        Ok(())
    }

    fn commit(self) -> Result<(), CliError> {
        for (tmp, path) in self.files {
            tmp.persist(&path).map_err(|e| CliError::Io {
                path: path.clone(),
                source: e.error,
            })?;
        }
        Ok(())
    }
}

fn sibling(report: &Path, name: &str) -> PathBuf {
    report.with_file_name(name)
}

pub fn resolve_tolerance(flag: Option<f64>, env: Option<String>) -> Result<Tolerance, CliError> {
    let value = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s.trim().parse().map_err(|_| CliError::Tolerance(s.clone()))?,
        (None, None) => return Ok(Tolerance::default()),
    };
    Tolerance::with_residual(value).map_err(|_| CliError::Tolerance(value.to_string()))
}

fn load_system(m: &Path, n: &Path, p: &Path) -> Result<ConjugateSystem, CliError> {
    let sys = ConjugateSystem::new(mtx::read_complex(m)?, mtx::read_complex(n)?, mtx::read_complex_vector(p)?)?;
    Ok(sys)
}

fn cmd_reduce(sys: &ConjugateSystem, out: &Path, tol: &Tolerance) -> Result<i32, CliError> {
    let mut report = Report::new("reduce", tol);
    let mut staged = Staged::default();
    let reducible = is_reducible(sys.m(), sys.n(), tol)?;
    report.reducible = Some(reducible);
    if reducible {
        let cert = reduction_matrices(sys.m(), sys.n(), tol)?;
        let red = reduce(sys, &cert);
        // coefficient of conj(z) after reduction
        let cancel = &(&cert.u * sys.n()) + &(&cert.v * &sys.m().conj());
        report.residual = cancel.frobenius_norm();
        report.row_set = Some(cert.row_set.clone());
        staged.add(sibling(out, "A.mtx"), &mtx::format_complex(&red.a))?;
        staged.add(sibling(out, "b.mtx"), &mtx::format_complex_vector(&red.b))?;
        staged.add(sibling(out, "U.mtx"), &mtx::format_complex(&cert.u))?;
        staged.add(sibling(out, "V.mtx"), &mtx::format_complex(&cert.v))?;
    }
    staged.add(out.to_owned(), &report.to_json())?;
    staged.commit()?;
    Ok(if reducible { EXIT_OK } else { EXIT_IRREDUCIBLE })
}

fn cmd_solve(sys: &ConjugateSystem, out: &Path, tol: &Tolerance) -> Result<i32, CliError> {
    let result = solve(sys, tol)?;
    let mut report = Report::new("solve", tol).with_solutions(&result.solutions);
    report.reducible = Some(result.reducible);
    report.residual = result.verification_residual;
    let mut staged = Staged::default();
    staged.add(out.to_owned(), &report.to_json())?;
    staged.commit()?;
    Ok(if result.solutions.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn cmd_embed(a: &Path, b: &Path, out: &Path, tol: &Tolerance) -> Result<i32, CliError> {
    let sys = RealSystem::new(mtx::read_real(a)?, mtx::read_real_vector(b)?)?;
    let spectra = interlacing_report(&sys, tol)?;
    let sol = solve_real_via_complex(&sys, tol)?;
    let mut report = Report::new("embed", tol).with_spectra(&spectra);
    report.x = Some(sol.x.clone());
    report.z = Some(pairs(&sol.z));
    report.residual = sol.residual;
    let mut staged = Staged::default();
    staged.add(sibling(out, "S.mtx"), &mtx::format_complex(&sol.schur))?;
    staged.add(sibling(out, "q.mtx"), &mtx::format_complex_vector(&sol.q))?;
    staged.add(out.to_owned(), &report.to_json())?;
    staged.commit()?;
    Ok(EXIT_OK)
}

fn cmd_analyze(a: &Path, out: Option<&Path>, tol: &Tolerance) -> Result<i32, CliError> {
    let a = mtx::read_real(a)?;
    let trace = a.trace();
    let zeros = vec![0.0; a.rows()];
    let sys = RealSystem::new(a, zeros)?;
    let spectra = interlacing_report(&sys, tol)?;
    let mut report = Report::new("analyze", tol).with_spectra(&spectra);
    report.residual = (spectra.eig_a.iter().sum::<f64>() - trace).abs();
    match out {
        Some(path) => {
            let mut staged = Staged::default();
            staged.add(path.to_owned(), &report.to_json())?;
            staged.commit()?;
        }
        None => print!("{}", report.to_json()),
    }
    Ok(EXIT_OK)
}

fn cmd_gen(kind: Kind, n: usize, seed: u64, out: &Path, tol: &Tolerance) -> Result<i32, CliError> {
    if n == 0 {
        return Err(CliError::EmptyInstance);
    }
    fs::create_dir_all(out).map_err(io_err(out))?;
    let mut g = rng(seed);
    let mut staged = Staged::default();
    if kind == Kind::Spd {
        let a = instances::spd_matrix(&mut g, n);
        let b = instances::real_vector(&mut g, n);
        staged.add(out.join("A.mtx"), &mtx::format_real(&a))?;
        staged.add(out.join("b.mtx"), &mtx::format_real_vector(&b))?;
    } else {
        let (m, nn) = match kind {
            Kind::Unique => instances::unique_pair(&mut g, n, tol)?,
            Kind::Reducible => instances::checked_reducible_pair(&mut g, n, tol)?,
            Kind::Irreducible => instances::checked_irreducible_pair(&mut g, n, tol)?,
            Kind::Spd => unreachable!(),
        };
        let sys = instances::forward_system(&mut g, m, nn);
        staged.add(out.join("M.mtx"), &mtx::format_complex(sys.m()))?;
        staged.add(out.join("N.mtx"), &mtx::format_complex(sys.n()))?;
        staged.add(out.join("p.mtx"), &mtx::format_complex_vector(sys.p()))?;
    }
    staged.commit()?;
    Ok(EXIT_OK)
}

pub fn execute(cli: &Cli, env_tol: Option<String>) -> Result<i32, CliError> {
    let tol = resolve_tolerance(cli.tol, env_tol)?;
    match &cli.command {
        Command::Reduce { m, n, p, out } => cmd_reduce(&load_system(m, n, p)?, out, &tol),
        Command::Solve { m, n, p, out } => cmd_solve(&load_system(m, n, p)?, out, &tol),
        Command::Embed { a, b, out } => cmd_embed(a, b, out, &tol),
        Command::Analyze { a, out } => cmd_analyze(a, out.as_deref(), &tol),
        Command::Gen { kind, n, seed, out } => cmd_gen(*kind, *n, *seed, out, &tol),
    }
}

/// Runs a parsed command line and maps the outcome to an exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli, std::env::var(TOL_ENV).ok()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("conjulin: {e}");
            e.exit_code()
        }
    }
}
