use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use tbk_core::census::{write_atomic, write_census};
use tbk_core::dihedral::mod2_oracle;
use tbk_core::exact::PolyF2;
use tbk_core::knot::{canonical_qs, TwoBridgeForm};
use tbk_core::prep::word_image;
use tbk_core::report::{to_json, to_markdown, to_table, TOOLKIT_VERSION};
use tbk_core::verdict::{analyze, AnalysisConfig, ReportStatus};
use tbk_core::Error;

const EXIT_CONTRADICTION: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;

/// Commensurability invariants of 2-bridge knot complements.
#[derive(Parser)]
#[command(name = "tbk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Table,
}

#[derive(clap::Args, Clone)]
struct Limits {
    /// Largest common denominator accepted for a square-root witness.
    #[arg(long, value_name = "N")]
    denominator_bound: Option<String>,
    /// Largest Hensel modulus, in bits, used when factoring over the integers.
    #[arg(long, value_name = "BITS")]
    precision_bits: Option<u64>,
}

impl Limits {
    fn is_default(&self) -> bool {
        self.denominator_bound.is_none() && self.precision_bits.is_none()
    }

    fn config(&self) -> Result<AnalysisConfig, Error> {
        let mut cfg = AnalysisConfig::default();
        if let Some(b) = &self.denominator_bound {
            let n: BigInt = b
                .parse()
                .map_err(|_| Error::InvalidInput(format!("--denominator-bound {b} is not an integer")))?;
            if n < BigInt::from(1) {
                return Err(Error::InvalidInput("--denominator-bound must be positive".into()));
            }
            cfg.sqrt.denominator_bound = n;
        }
        if let Some(bits) = self.precision_bits {
            if bits == 0 {
                return Err(Error::InvalidInput("--precision-bits must be positive".into()));
            }
            cfg.sqrt.factor.max_modulus_bits = bits;
        }
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the 2-bridge knot with normal form (P, Q).
    Analyze {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        limits: Limits,
    },
    /// Analyze every hyperbolic 2-bridge knot with p up to MAX_P.
    Census {
        #[arg(long)]
        max_p: u64,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare every Riley polynomial for P, reduced mod 2, with the
    /// cyclotomic trace product.
    Oracle { p: u64 },
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::InvalidInput(_) => EXIT_INVALID,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_CONTRADICTION,
    })
}

fn cached_json(dir: &Path, p: i64, q: i64, cfg: &AnalysisConfig) -> Result<(String, bool), Error> {
    let path = dir.join(format!("v{TOOLKIT_VERSION}")).join(format!("{p}_{q}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        let ok = !text.contains("\"status\": \"contradiction\"");
        return Ok((text, ok));
    }
    let report = analyze(p, q, cfg)?;
    let text = to_json(&report);
    std::fs::create_dir_all(path.parent().unwrap())?;
    write_atomic(&path, text.as_bytes())?;
    Ok((text, report.status == ReportStatus::Ok))
}

fn cmd_analyze(p: i64, q: i64, format: Format, limits: &Limits) -> Result<ExitCode, Error> {
    let cfg = limits.config()?;
    let cache = std::env::var_os("TBK_CACHE_DIR").filter(|d| !d.is_empty());
    let (text, ok) = match (format, cache) {
        (Format::Json, Some(dir)) if limits.is_default() => cached_json(Path::new(&dir), p, q, &cfg)?,
        _ => {
            let r = analyze(p, q, &cfg)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Md => to_markdown(&r),
                Format::Table => to_table(&r),
            };
            (text, r.status == ReportStatus::Ok)
        }
    };
    print!("{text}");
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CONTRADICTION) })
}

fn cmd_census(max_p: u64, out: &Path, jobs: usize, limits: &Limits) -> Result<ExitCode, Error> {
    let cfg = limits.config()?;
    let s = write_census(max_p, out, jobs, &cfg)?;
    println!(
        "{} knots, {} factors, {} contradictions, {} squarefree violations, qi absent {}",
        s.knots,
        s.factors,
        s.contradictions.len(),
        s.squarefree_mod2_violations,
        s.qi_certified_absent_rate
    );
    Ok(if s.contradictions.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CONTRADICTION) })
}

fn cmd_oracle(p: u64) -> Result<ExitCode, Error> {
    let oracle = mod2_oracle(p)?;
    println!("oracle({p}) = {oracle}");
    let mut all = true;
    for q in canonical_qs(p) {
        let k = TwoBridgeForm::new(p, q)?;
        let reduced = PolyF2::from_poly_z(&word_image(&k.riley_word()).a);
        let same = reduced == oracle;
        all &= same;
        println!("q = {q}: {}", if same { "MATCH" } else { "MISMATCH" });
        if !same {
            println!("  reduction = {reduced}");
        }
    }
    println!("{}", if all { "MATCH" } else { "MISMATCH" });
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(EXIT_CONTRADICTION) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { p, q, format, limits } => cmd_analyze(*p, *q, *format, limits),
        Command::Census { max_p, out, jobs, limits } => cmd_census(*max_p, out, *jobs, limits),
        Command::Oracle { p } => cmd_oracle(*p),
    };
    result.unwrap_or_else(|e| fail(&e))
}
