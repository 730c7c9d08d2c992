//! Command-line front end: argument parsing, dispatch, and report rendering.
//!
//! [`run`] is the whole program minus process I/O, so tests drive it directly.

pub mod export;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starconf::decomp::{
    criterion, criterion_with_floor, resurgence_scan, symbolic_in_power,
    verify_power_decomposition, verify_saturation,
};
use starconf::hilbert::{generic_hvector, h_vector_with, ss_hvector_formula};
use starconf::resolution::{
    en_rank, euler_check, hb_matrix, predicted_minor_family, skeleton_resolution, ss_resolution,
    verify_hb,
};
use starconf::star::{
    alpha_symbolic_formula, is_matroid, omega_symbolic_formula, skeleton_complex, skeleton_ideal,
    symbolic_power_with, wk_ideal, wk_step_check,
};
use starconf::{Error, Limits, StarConfig};

use crate::export::{export_script, parse_forms, Target};
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "starconf",
    version,
    about = "Exact computations for monomial star configurations"
)]
pub struct Cli {
    /// Output format; csv is only available for `scan`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Largest degree at which a Hilbert function is evaluated.
    #[arg(long, global = true, env = "STARCONF_DEGREE_CAP")]
    pub degree_cap: Option<usize>,
    /// Largest number of exponent tuples scanned when enumerating a symbolic power.
    #[arg(long, global = true, env = "STARCONF_ENUM_LIMIT")]
    pub enum_limit: Option<u64>,
    /// Largest ordinary power exponent r (default 8 for s <= 4, 5 for s = 5).
    #[arg(long, global = true, env = "STARCONF_MAX_POWER")]
    pub max_power: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Star {
    /// Number of hyperplanes.
    #[arg(long)]
    pub s: usize,
    /// Codimension of the skeleton.
    #[arg(long)]
    pub c: usize,
}

impl Star {
    fn config(self) -> Result<StarConfig, Error> {
        StarConfig::new(self.s, self.c)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, h-vector, degree and initial degree of the skeleton ideal.
    Skeleton {
        #[command(flatten)]
        star: Star,
        /// Ambient dimension n (c <= n < s) reported alongside; defaults to s - 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Minimal generators of a symbolic power, with alpha and omega against their formulas.
    Symbolic {
        #[command(flatten)]
        star: Star,
        #[arg(long)]
        l: u32,
    },
    /// h-vector of a symbolic power, compared with the closed form for l = 1, 2.
    Hvector {
        #[command(flatten)]
        star: Star,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Resolution of the symbolic square and the Eagon-Northcott ranks, with Euler checks.
    Betti {
        #[command(flatten)]
        star: Star,
    },
    /// Hilbert-Burch matrix Delta_m of the codimension-2 skeleton and its maximal minors.
    Hb {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: u32,
    },
    /// Primary decomposition of I^l and the saturation identity.
    Decomp {
        #[command(flatten)]
        star: Star,
        #[arg(long)]
        l: u32,
    },
    /// Whether I^(m) is contained in I^r.
    Containment {
        #[command(flatten)]
        star: Star,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Containment grid over m <= mmax, r <= rmax and the resurgence data.
    Scan {
        #[command(flatten)]
        star: Star,
        #[arg(long)]
        mmax: u32,
        #[arg(long)]
        rmax: u32,
    },
    /// Matroid check of the skeleton complex and its Stanley-Reisner ideal.
    Matroid {
        #[command(flatten)]
        star: Star,
    },
    /// Basic double link chain W_0, ..., W_s in codimension 2.
    Wk {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: u32,
    },
    /// Macaulay2 or Singular script testing the decomposition for given linear forms.
    Export {
        #[command(flatten)]
        star: Star,
        #[arg(long)]
        l: u32,
        /// Ambient dimension n; inferred from the forms when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        target: Target,
        /// Coefficients of the s forms, e.g. "1,0,0;0,1,0;0,0,1;1,1,1". Default: coordinate forms.
        #[arg(long)]
        forms: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Skeleton { .. } => "skeleton",
            Command::Symbolic { .. } => "symbolic",
            Command::Hvector { .. } => "hvector",
            Command::Betti { .. } => "betti",
            Command::Hb { .. } => "hb",
            Command::Decomp { .. } => "decomp",
            Command::Containment { .. } => "containment",
            Command::Scan { .. } => "scan",
            Command::Matroid { .. } => "matroid",
            Command::Wk { .. } => "wk",
            Command::Export { .. } => "export",
        }
    }
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn limits_of(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(e) = cli.enum_limit {
        l.enumeration = e;
    }
    l.max_power = cli.max_power;
    l.degree_cap = cli.degree_cap;
    l
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::Resource { .. } => Status::Resource,
        _ => Status::Usage,
    }
}

fn gens_text(ideal: &starconf::MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| g.to_string()).collect()
}

pub fn execute(command: &Command, limits: &Limits) -> Result<CommandResult, Error> {
    Ok(match *command {
        Command::Skeleton { star, n } => {
            let mut cfg = star.config()?;
            if let Some(n) = n {
                cfg = cfg.with_ambient(n)?;
            }
            let ideal = skeleton_ideal(&cfg);
            let h = h_vector_with(&ideal, cfg.c(), limits)?;
            CommandResult::Skeleton(SkeletonReport {
                s: cfg.s(),
                c: cfg.c(),
                n: cfg.ambient(),
                generator_count: ideal.len(),
                generators: gens_text(&ideal),
                degree: h.degree(),
                h_vector: h.entries,
                expected_h_vector: generic_hvector(&cfg).entries,
                alpha: ideal.alpha()?,
                eagon_northcott_ranks: (1..=cfg.c())
                    .map(|i| en_rank(cfg.s(), cfg.c(), i))
                    .collect::<Result<_, _>>()?,
            })
        }
        Command::Symbolic { star, l } => {
            let cfg = star.config()?;
            let ideal = symbolic_power_with(&cfg, l, limits)?;
            CommandResult::Symbolic(SymbolicReport {
                s: cfg.s(),
                c: cfg.c(),
                l,
                generator_count: ideal.len(),
                generators_by_degree: ideal.degree_histogram(),
                generators: gens_text(&ideal),
                alpha: ideal.alpha()?,
                omega: ideal.omega()?,
                alpha_formula: alpha_symbolic_formula(&cfg, l)?,
                omega_formula: omega_symbolic_formula(&cfg, l)?,
            })
        }
        Command::Hvector { star, l } => {
            let cfg = star.config()?;
            let ideal = symbolic_power_with(&cfg, l, limits)?;
            let h = h_vector_with(&ideal, cfg.c(), limits)?;
            let formula = match l {
                1 => Some(generic_hvector(&cfg).entries),
                2 => Some(ss_hvector_formula(&cfg).entries),
                _ => None,
            };
            CommandResult::Hvector(HvectorReport {
                s: cfg.s(),
                c: cfg.c(),
                l,
                degree: h.degree(),
                h_vector: h.entries,
                formula,
            })
        }
        Command::Betti { star } => {
            let cfg = star.config()?;
            let square = ss_resolution(&cfg)?;
            let skeleton = skeleton_resolution(&cfg)?;
            let sq_ideal = symbolic_power_with(&cfg, 2, limits)?;
            CommandResult::Betti(BettiReport {
                s: cfg.s(),
                c: cfg.c(),
                symbolic_square_euler: euler_check(&square, &sq_ideal)?,
                symbolic_square: square,
                skeleton_euler: euler_check(&skeleton, &skeleton_ideal(&cfg))?,
                skeleton,
            })
        }
        Command::Hb { s, m } => {
            let mat = hb_matrix(s, m)?;
            let matrix = (0..mat.rows())
                .map(|r| (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect())
                .collect();
            CommandResult::Hb(HbReport {
                matrix,
                predicted_family: predicted_minor_family(s, m)
                    .iter()
                    .map(|t| t.to_string())
                    .collect(),
                verification: verify_hb(s, m)?,
            })
        }
        Command::Decomp { star, l } => {
            let cfg = star.config()?;
            CommandResult::Decomp(DecompReport {
                s: cfg.s(),
                c: cfg.c(),
                l,
                power_decomposition: verify_power_decomposition(&cfg, l, limits)?,
                saturation: verify_saturation(&cfg, l, limits)?,
            })
        }
        Command::Containment { star, m, r } => {
            let cfg = star.config()?;
            let contained = symbolic_in_power(&cfg, m, r, limits)?;
            let n = cfg.s() as u32 - 1;
            let applies = n >= 3 && cfg.c() as u32 == n - 1;
            CommandResult::Containment(ContainmentPair {
                s: cfg.s(),
                c: cfg.c(),
                m,
                r,
                contained,
                criterion_not_contained: applies.then(|| criterion(n, m, r)).transpose()?,
                floor_criterion_not_contained: applies
                    .then(|| criterion_with_floor(n, m, r))
                    .transpose()?,
            })
        }
        Command::Scan { star, mmax, rmax } => {
            CommandResult::Scan(resurgence_scan(&star.config()?, mmax, rmax, limits)?)
        }
        Command::Matroid { star } => {
            let cfg = star.config()?;
            let cx = skeleton_complex(&cfg)?;
            CommandResult::Matroid(MatroidReport {
                s: cfg.s(),
                c: cfg.c(),
                facet_count: cx.facets().len(),
                is_matroid: is_matroid(&cx),
                stanley_reisner_matches: cx.stanley_reisner_ideal() == skeleton_ideal(&cfg),
            })
        }
        Command::Wk { s, l } => {
            let two = StarConfig::new(s, 2)?;
            let steps = (0..s)
                .map(|k| wk_step_check(s, l, k))
                .collect::<Result<_, _>>()?;
            CommandResult::Wk(WkReport {
                s,
                l,
                start_is_symbolic: wk_ideal(s, l, 0)? == symbolic_power_with(&two, l, limits)?,
                end_is_symbolic: wk_ideal(s, l, s)? == symbolic_power_with(&two, l + 2, limits)?,
                steps,
            })
        }
        Command::Export {
            star,
            l,
            n,
            target,
            ref forms,
        } => {
            let parsed = forms.as_deref().map(parse_forms).transpose()?;
            CommandResult::Export(export_script(
                target,
                star.s,
                star.c,
                l,
                n,
                parsed.as_deref(),
            )?)
        }
    })
}

fn wants_json(args: &[OsString]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn json(envelope: &Envelope) -> String {
    let mut s = serde_json::to_string_pretty(envelope).expect("reports serialize");
    s.push('\n');
    s
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            let stdout = if wants_json(&args) {
                json(&Envelope {
                    command: String::new(),
                    caps: Limits::default(),
                    status: Status::Usage,
                    reason: Some(e.kind().to_string()),
                    result: None,
                })
            } else {
                String::new()
            };
            return Outcome {
                code: 2,
                stdout,
                stderr: text,
            };
        }
    };
    let limits = limits_of(&cli);
    let outcome = with_threads(cli.threads, || render(&cli, &limits));
    match (&cli.output, outcome) {
        (Some(path), Ok(o)) => match std::fs::write(path, &o.stdout) {
            Ok(()) => Outcome {
                stdout: String::new(),
                ..o
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        (_, Ok(o)) => o,
        (_, Err(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        },
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> R + Send,
) -> Result<R, String> {
    match threads {
        None => Ok(f()),
        Some(0) => Err("error: --threads must be at least 1\n".to_string()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| format!("error: cannot start {n} threads: {e}\n")),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R>(threads: Option<usize>, f: impl FnOnce() -> R) -> Result<R, String> {
    match threads {
        Some(0) => Err("error: --threads must be at least 1\n".to_string()),
        _ => Ok(f()),
    }
}

fn render(cli: &Cli, limits: &Limits) -> Outcome {
    let name = cli.command.name();
    if cli.format == Format::Csv && name != "scan" {
        let msg = format!("csv output is only available for scan, not {name}");
        return Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        };
    }
    let result = execute(&cli.command, limits);
    let (status, reason, result) = match result {
        Ok(r) => match r.failure() {
            Some(why) => (Status::Failed, Some(why), Some(r)),
            None => (Status::Ok, None, Some(r)),
        },
        Err(e) => {
            let status = status_of(&e);
            let mut why = e.to_string();
            if status == Status::Resource {
                why.push_str("; raise it with the matching cap flag (see --help)");
            }
            (status, Some(why), None)
        }
    };
    let code = status.exit_code();
    match cli.format {
        Format::Json => Outcome {
            code,
            stdout: json(&Envelope {
                command: name.to_string(),
                caps: *limits,
                status,
                reason,
                result,
            }),
            stderr: String::new(),
        },
        Format::Text | Format::Csv => {
            let mut stdout = match (&result, cli.format) {
                (Some(CommandResult::Scan(r)), Format::Csv) => match scan_csv(r) {
                    Ok(s) => s,
                    Err(e) => {
                        return Outcome {
                            code: 2,
                            stdout: String::new(),
                            stderr: format!("error: {e}\n"),
                        }
                    }
                },
                (Some(r), _) => r.render_text(),
                (None, _) => String::new(),
            };
            let mut stderr = String::new();
            match status {
                Status::Ok => {}
                Status::Failed => {
                    let why = reason.unwrap_or_default();
                    if cli.format == Format::Text {
                        stdout.push_str(&format!("FAILED: {why}\n"));
                    }
                    stderr.push_str(&format!("check failed: {why}\n"));
                }
                Status::Usage | Status::Resource => {
                    stderr.push_str(&format!("error: {}\n", reason.unwrap_or_default()));
                }
            }
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
    }
}
