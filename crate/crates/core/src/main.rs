use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cone_zeta::cli::render::{self, Format};
use cone_zeta::cli::{self, CheckStatus, ProblemConfig};
use cone_zeta::{Error, Result};

#[derive(Parser)]
#[command(name = "cone-zeta", version, about = "Singular structure of zeta functions on cones and the interval model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Problem definition (JSON).
    #[arg(long, conflicts_with = "example")]
    config: Option<PathBuf>,
    /// Use a built-in example instead of a config file.
    #[arg(long)]
    example: Option<String>,
    /// Largest exponent ξ kept in the expansion.
    #[arg(long)]
    ximax: Option<f64>,
    /// Window |ℓ| ≤ lmax for powers of x.
    #[arg(long)]
    lmax: Option<i32>,
    /// Upper end of the eigenvalue scan in μ.
    #[arg(long)]
    mumax: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Lagrangian and report decomposability and split angles.
    Validate(Common),
    /// Pole and log ledger of the zeta function.
    Structure(Common),
    /// Eigenvalues of the interval model.
    Eigs(Common),
    /// Numerical identity checks on the configured problem.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Multiply every tau by this factor in the asymptotic check.
        #[arg(long, default_value_t = 1.0)]
        tau_scale: f64,
    },
    /// List built-in examples, or run one against its closed-form ledger.
    Examples {
        name: Option<String>,
        /// Print the example's config JSON instead of running it.
        #[arg(long)]
        dump_config: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn load(c: &Common) -> Result<ProblemConfig> {
    let mut cfg = match (&c.config, &c.example) {
        (Some(path), _) => ProblemConfig::from_path(path)?,
        (None, Some(name)) => {
            cli::builtin(name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown example '{name}'; choose one of {}", cli::NAMES.join(", "))))?
                .config
        }
        (None, None) => return Err(Error::InvalidInput("pass --config PATH or --example NAME".into())),
    };
    if let Some(v) = c.ximax {
        cfg.options.xi_max = v;
    }
    if let Some(v) = c.lmax {
        cfg.options.l_max = v;
    }
    if let Some(v) = c.mumax {
        cfg.options.mu_max = v;
    }
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, cfg_out: Option<&String>, text: &str) -> Result<()> {
    match out.clone().or_else(|| cfg_out.map(PathBuf::from)) {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate(c) => {
            let cfg = load(&c)?;
            let v = cli::validate(&cfg)?;
            let text = match c.format {
                Format::Json => render::json(&v),
                _ => render::validate_text(&v),
            };
            emit(&c.out, cfg.options.out.as_ref(), &text)?;
            Ok(if v.ok { 0 } else { 1 })
        }
        Command::Structure(c) => {
            let cfg = load(&c)?;
            let r = cli::structure(&cfg)?;
            let text = match c.format {
                Format::Text => render::ledger_text(&r),
                Format::Csv => render::ledger_csv(&r),
                Format::Json => render::json(&r),
            };
            emit(&c.out, cfg.options.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Eigs(c) => {
            let cfg = load(&c)?;
            let s = cli::eigs(&cfg)?;
            for w in &s.warnings {
                eprintln!("warning: {w}");
            }
            let text = match c.format {
                Format::Text => render::spectrum_text(&s),
                Format::Csv => render::spectrum_csv(&s),
                Format::Json => render::json(&s),
            };
            emit(&c.out, cfg.options.out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Verify { common: c, tau_scale } => {
            let cfg = load(&c)?;
            let rows = cli::verify(&cfg, tau_scale)?;
            let text = match c.format {
                Format::Text => render::checks_text(&rows),
                Format::Csv => render::checks_csv(&rows),
                Format::Json => render::json(&rows),
            };
            emit(&c.out, cfg.options.out.as_ref(), &text)?;
            let failed: Vec<_> = rows.iter().filter(|r| r.status == CheckStatus::Fail).collect();
            for r in &failed {
                eprintln!("FAILED {} {}: error {:.3e} > tolerance {:.3e}", r.check, r.param, r.error, r.tolerance);
            }
            Ok(if failed.is_empty() { 0 } else { 1 })
        }
        Command::Examples { name, dump_config, out, format } => {
            let Some(name) = name else {
                let mut text = String::new();
                for n in cli::NAMES {
                    let b = cli::builtin(n).expect("listed example exists");
                    text.push_str(&format!("{:<16} {}\n", b.name, b.description));
                }
                emit(&out, None, &text)?;
                return Ok(0);
            };
            if dump_config {
                let b = cli::builtin(&name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown example '{name}'; choose one of {}", cli::NAMES.join(", "))))?;
                emit(&out, None, &(b.config.to_json() + "\n"))?;
                return Ok(0);
            }
            let x = cli::example(&name)?;
            let text = match format {
                Format::Text => render::example_text(&x),
                Format::Csv => render::ledger_csv(&x.report),
                Format::Json => render::json(&x),
            };
            emit(&out, None, &text)?;
            Ok(0)
        }
    }
}

fn configure_threads() {
    if let Ok(v) = std::env::var("CONE_ZETA_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring CONE_ZETA_THREADS={v:?} (expected a positive integer)"),
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
