use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use diskspec::counting::count;
use diskspec::nodal::{classify_first_nodal_line, critical_angle, NodalLineKind, DEFAULT_DEGENERACY_TOL};
use diskspec::olver::{envelope_constants, sup_lambda, variation_report, VariationTarget};
use diskspec::spectrum::{first_eigenvalues_with, DomainSpec, EigenvalueRecord, EnumerationOptions};
use diskspec::Error;

const EXIT_CHECK: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "diskspec", version, about = "Dirichlet spectra of the disk and of circular sectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the first m eigenvalues, one row per rank.
    #[command(group(ArgGroup::new("domain").required(true).args(["disk", "sector"])))]
    Spectrum {
        #[arg(long)]
        disk: bool,
        #[arg(long, requires = "alpha")]
        sector: bool,
        /// Sector opening angle in radians.
        #[arg(long, requires = "sector")]
        alpha: Option<f64>,
        #[arg(short, long)]
        m: usize,
        #[arg(long, value_enum, default_value = "2col")]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Only consider modes with nodal count at most 0.7·m.
        #[arg(long)]
        pleijel: bool,
    },
    /// Count the disk eigenvalues up to lambda.
    Count {
        lambda: f64,
        /// Also print the two-term Weyl remainder.
        #[arg(long)]
        weyl: bool,
    },
    /// Classify the first nodal line of the sector with angle alpha.
    Nodal {
        #[arg(long)]
        alpha: f64,
    },
    /// Angle at which the first nodal line switches from circle to ray.
    CriticalAngle,
    /// Recompute the error-envelope constants and compare with the reference values.
    OlverCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    #[value(name = "2col")]
    TwoCol,
    #[value(name = "4col")]
    FourCol,
}

enum Failure {
    Check(String),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("SPECTRUM_THREADS").ok().and_then(|v| v.trim().parse().ok()) {
        diskspec::par::limit_threads(n);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Spectrum { disk, alpha, m, format, output, pleijel, .. } => {
            let domain = if disk { DomainSpec::Disk } else { DomainSpec::Sector { alpha: alpha.unwrap_or(f64::NAN) } };
            spectrum(domain, m, format, output, pleijel)
        }
        Command::Count { lambda, weyl } => count_cmd(lambda, weyl),
        Command::Nodal { alpha } => nodal(alpha),
        Command::CriticalAngle => critical(),
        Command::OlverCheck => olver_check(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("diskspec: {msg}");
            ExitCode::from(EXIT_CHECK)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("diskspec: {msg}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("diskspec: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn spectrum(domain: DomainSpec, m: usize, format: Format, output: Option<PathBuf>, pleijel: bool) -> Outcome {
    domain.validate()?;
    if m == 0 {
        return Err(Failure::Usage("-m must be at least 1".into()));
    }
    // Open the file first so an unwritable path fails before the work.
    let sink: Box<dyn Write> = match &output {
        Some(p) => Box::new(File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    let opts = EnumerationOptions { pleijel, ..EnumerationOptions::default() };
    let recs = first_eigenvalues_with(domain, m, &opts)?;
    let mut w = BufWriter::new(sink);
    for r in &recs {
        write_row(&mut w, r, format)?;
    }
    w.flush()?;
    Ok(())
}

fn write_row(w: &mut impl Write, r: &EigenvalueRecord, format: Format) -> io::Result<()> {
    match format {
        Format::TwoCol => writeln!(w, "{} {:.6}", r.rank, r.lambda),
        Format::FourCol => writeln!(w, "{} {:.6} {} {}", r.rank, r.lambda, r.n, r.k),
    }
}

/// C-style `%.12E`: mantissa with 12 decimals, signed exponent of at least two digits.
fn sci12(x: f64) -> String {
    let s = format!("{x:.12E}");
    let (mantissa, exp) = s.split_once('E').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

fn count_cmd(lambda: f64, weyl: bool) -> Outcome {
    let c = count(lambda)?;
    println!("{} {}", sci12(lambda), c.count);
    if c.on_boundary {
        eprintln!("diskspec: warning: an eigenvalue lies within rounding of lambda");
    }
    if weyl {
        let rem = c.count as f64 - 0.25 * lambda + 0.5 * lambda.sqrt();
        let cube = lambda.cbrt();
        println!("remainder={rem:.6} lambda^(1/3)={cube:.6} ratio={:.6}", rem / cube);
    }
    Ok(())
}

fn nodal(alpha: f64) -> Outcome {
    let c = classify_first_nodal_line(alpha, DEFAULT_DEGENERACY_TOL)?;
    match (c.kind, c.parameter) {
        (NodalLineKind::RadialCircle, Some(r)) => println!("radial r={r:.6} lambda2={:.6}", c.lambda2),
        (NodalLineKind::AngularRay, Some(t)) => println!("angular theta={t:.6} lambda2={:.6}", c.lambda2),
        _ => println!("critical lambda2={:.6} multiplicity={}", c.lambda2, c.multiplicity2),
    }
    Ok(())
}

fn critical() -> Outcome {
    let (nu0, alpha0) = critical_angle()?;
    println!("nu0={nu0:.12} alpha0={alpha0:.12}");
    Ok(())
}

fn olver_check() -> Outcome {
    let b0 = variation_report(VariationTarget::B0)?;
    let b1 = variation_report(VariationTarget::B1)?;
    let sup = sup_lambda()?;
    let env = envelope_constants()?;
    let rows = [
        ("variation B0", b0.total_variation, 0.105059042134, 1e-9),
        ("variation B1", b1.total_variation, 0.006613368457, 1e-9),
        ("stationary z B0", b0.stationary_points_z[0], 1.979495483061, 1e-8),
        ("stationary z1 B1", b1.stationary_points_z[0], 0.138560281581, 1e-8),
        ("stationary z2 B1", b1.stationary_points_z[1], 1.418538099456, 1e-8),
        ("B0 at z", b0.values_at_points[0], 0.010862854400, 1e-9),
        ("B1 at z1", b1.values_at_points[0], -0.004008186698, 1e-9),
        ("B1 at z2", b1.values_at_points[1], -0.000639161111, 1e-9),
        ("lambda_sup", sup.sup_value, 1.039522542988, 1e-6),
        ("argmax x", sup.argmax_x, 1.321915092767, 1e-5),
        ("A", env.a_rounded_s2, 0.049784723505, 1e-9),
        ("B", env.b, 0.768158487672, 1e-9),
    ];
    let mut failed = 0;
    println!("{:<18} {:>18} {:>18} {:>8}  status", "quantity", "computed", "reference", "tol");
    for (name, got, want, tol) in rows {
        let ok = (got - want).abs() <= tol;
        failed += usize::from(!ok);
        println!("{name:<18} {got:>18.12} {want:>18.12} {tol:>8.0e}  {}", if ok { "PASS" } else { "FAIL" });
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} constant check(s) failed")));
    }
    Ok(())
}
