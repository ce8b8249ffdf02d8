//! `g2convex`: scans, checks and certificates for convex presentations of
//! genus-two translation surfaces.
//!
//! Exit codes: 0 when every expected property held, 2 when the run found a
//! property violation, 1 on usage or I/O errors.

mod commands;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "g2convex", version, about = "Convex presentations of genus-two eigenform surfaces")]
struct Cli {
    /// Worker threads for scans and searches (defaults to all cores).
    #[arg(long, global = true, env = "G2CONVEX_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenforms in H(2): prototype scans and canonical octagons.
    #[command(subcommand)]
    H2(H2Command),
    /// Eigenforms in H(1,1): decagon checks, grid searches and splitting.
    #[command(subcommand)]
    H11(H11Command),
    /// Closed-form constructions for large discriminants.
    #[command(subcommand)]
    Bigd(BigdCommand),
    /// Bounded lattice-polygon certificates.
    #[command(subcommand)]
    Cert(CertCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ProtoArgs {
    #[arg(allow_negative_numbers = true)]
    pub d: i64,
    #[arg(allow_negative_numbers = true)]
    pub a: i64,
    #[arg(allow_negative_numbers = true)]
    pub b: i64,
    #[arg(allow_negative_numbers = true)]
    pub c: i64,
    #[arg(allow_negative_numbers = true)]
    pub e: i64,
}

#[derive(Subcommand, Debug)]
enum H2Command {
    /// Classify every symbol with discriminant in a range.
    Scan {
        #[arg(long, default_value_t = 5)]
        from: i64,
        #[arg(long, default_value_t = 199)]
        to: i64,
        /// List symbols without any convex octagon instead of those without
        /// a strictly convex one.
        #[arg(long)]
        convex: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Flowdown and canonical octagon of one prototype.
    Poly {
        #[command(flatten)]
        proto: ProtoArgs,
        /// Render the prototype and its octagon to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum H11Command {
    /// Canonical decagon of one prototype with rational rel parameters.
    Check {
        #[command(flatten)]
        proto: ProtoArgs,
        /// Horizontal rel parameter, e.g. 0.9 or 9/10.
        x: String,
        /// Vertical rel parameter.
        y: String,
        #[arg(long, default_value_t = g2convex::h11::DEFAULT_MAX_ITER)]
        max_iter: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Search an Nx by Ny grid of rel parameters over every prototype.
    Search {
        #[arg(allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = 64)]
        nx: u64,
        #[arg(long, default_value_t = 64)]
        ny: u64,
        #[arg(long, default_value_t = g2convex::h11::DEFAULT_MAX_ITER)]
        max_iter: u64,
        /// Stop at the first strictly convex hit.
        #[arg(long)]
        first_hit: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Split the cone point of a strictly convex canonical octagon.
    Split {
        #[command(flatten)]
        proto: ProtoArgs,
        /// Splitting length; omit to report only the threshold.
        #[arg(long)]
        eps: Option<String>,
        /// Direction as two rationals "ux,uy" (default: sum of the two
        /// edges at the cone point).
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum BigdCommand {
    /// Construct and verify prototypes for every admissible D in a range.
    Sweep {
        #[arg(long, default_value_t = 200)]
        from: i64,
        #[arg(long, default_value_t = 2000)]
        to: i64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum CertCommand {
    /// Lattice pentagons below an area bound passing the angle restriction.
    Pentagons {
        #[arg(long, default_value = "5")]
        area: String,
        #[arg(long = "box", default_value_t = 12)]
        bbox: i64,
        /// Skip the adjacent-angles restriction.
        #[arg(long)]
        no_angles: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Lattice octagons with eight boundary points.
    Octagons {
        #[arg(long = "box", default_value_t = 10)]
        bbox: i64,
        #[arg(long, default_value_t = 0)]
        max_interior: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Smallest area of a strictly convex lattice n-gon.
    MinArea {
        n: usize,
        #[arg(long = "box", default_value_t = 3)]
        bbox: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Integer solutions of the normalised pentagon inequality system.
    Case1 {
        #[arg(long, default_value_t = 50)]
        range: i64,
        #[command(flatten)]
        output: Output,
    },
}

/// How a command ended when it did not fail outright.
pub enum Status {
    Ok,
    Violation,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    if let Some(n) = cli.workers {
        anyhow::ensure!(n >= 1, "--workers must be at least 1");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::H2(H2Command::Scan { from, to, convex, output }) => commands::h2_scan(from, to, convex, &output),
        Command::H2(H2Command::Poly { proto, svg, output }) => commands::h2_poly(&proto, svg.as_deref(), &output),
        Command::H11(H11Command::Check { proto, x, y, max_iter, svg, output }) => {
            commands::h11_check(&proto, &x, &y, max_iter, svg.as_deref(), &output)
        }
        Command::H11(H11Command::Search { d, nx, ny, max_iter, first_hit, output }) => {
            commands::h11_search(d, nx, ny, max_iter, first_hit, &output)
        }
        Command::H11(H11Command::Split { proto, eps, u, svg, output }) => {
            commands::h11_split(&proto, eps.as_deref(), u.as_deref(), svg.as_deref(), &output)
        }
        Command::Bigd(BigdCommand::Sweep { from, to, output }) => commands::bigd_sweep(from, to, &output),
        Command::Cert(CertCommand::Pentagons { area, bbox, no_angles, output }) => {
            commands::cert_pentagons(&area, bbox, !no_angles, &output)
        }
        Command::Cert(CertCommand::Octagons { bbox, max_interior, output }) => {
            commands::cert_octagons(bbox, max_interior, &output)
        }
        Command::Cert(CertCommand::MinArea { n, bbox, output }) => commands::cert_min_area(n, bbox, &output),
        Command::Cert(CertCommand::Case1 { range, output }) => commands::cert_case1(range, &output),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap reports usage errors with code 2, which is reserved for violations
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
