//! `guinness` command-line tool.
//!
//! Every subcommand writes deterministic output: plain text by default, or
//! JSON with `--format json` (one object, or one object per line for
//! streaming commands). Exit status is 0 on success, 1 on a domain error and
//! 2 on a usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use guinness_core::guinness::{self, DEFAULT_DIGIT_BUDGET};
use guinness_core::orbit::{self, DEFAULT_POINT_CAP};
use guinness_core::prng::{self, Lehmer, MiddleSquare, OrbitGenerator, Significance, TestConfig};
use guinness_core::tiling;
use guinness_core::{multiply, GuinnessKind, OmegaSpace, Point};

pub mod records;

use records::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "guinness",
    version,
    about = "Orbits of the carry map f_n and Guinness numbers"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Whole,
    Half,
}

impl From<Kind> for GuinnessKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Whole => GuinnessKind::Whole,
            Kind::Half => GuinnessKind::Half,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Orbit,
    Lehmer,
    MiddleSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Alpha {
    #[value(name = "0.01")]
    OnePercent,
    #[value(name = "0.05")]
    FivePercent,
}

#[derive(Debug, Args)]
pub struct Range {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub from: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub to: u64,
    /// Worker threads; output does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Debug, Args)]
pub struct Seed {
    /// Seed point x; defaults to the standard point (n, 0).
    #[arg(long, requires = "y")]
    pub x: Option<u64>,
    #[arg(long, requires = "x")]
    pub y: Option<u64>,
}

impl Seed {
    fn point(&self, space: &OmegaSpace) -> Point {
        match (self.x, self.y) {
            (Some(x), Some(y)) => Point::new(x, y),
            _ => space.standard_point(),
        }
    }
}

fn positive() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Whole / one-half / neither, with the standard orbit length.
    Classify {
        #[arg(long, value_parser = positive())]
        n: u64,
    },
    /// All n in a range of the given kind, one per line.
    Scan {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Consecutive one-half Guinness pairs in a range.
    Twins {
        #[command(flatten)]
        range: Range,
    },
    /// Orbit-length signature of Ω_n.
    Decompose {
        #[arg(long, value_parser = positive())]
        n: u64,
        /// Refuse sets with more points than this.
        #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
        cap: u64,
    },
    /// Self-conjugate orbits by length and count of conjugate pairs.
    Census {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
        cap: u64,
    },
    /// Fixed points of f_n.
    FixedPoints {
        #[arg(long, value_parser = positive())]
        n: u64,
    },
    /// Stream the digits of G_n to a file (default G_<n>.txt).
    Digits {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that moving the first k digits of G_n to the end divides it by n.
    VerifyRotation {
        #[arg(long, value_parser = positive())]
        n: u64,
        /// Largest digit count materialized.
        #[arg(long, default_value_t = DEFAULT_DIGIT_BUDGET)]
        budget: u64,
    },
    /// m · n by chained carry steps.
    Multiply {
        #[arg(long)]
        m: String,
        #[arg(long, value_parser = positive())]
        n: u64,
    },
    /// Orbit pseudorandom pairs "u v", one per line.
    Prng {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[command(flatten)]
        seed: Seed,
    },
    /// Uniformity, gap, maximum-of-t and poker tests on a generator stream.
    Tests {
        #[arg(long, value_enum, default_value_t = Source::Orbit)]
        source: Source,
        /// n for the orbit source.
        #[arg(long, default_value_t = 2000, value_parser = positive())]
        n: u64,
        /// Initial state for the Lehmer and middle-square sources.
        #[arg(long)]
        state: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Alpha::OnePercent)]
        alpha: Alpha,
    },
    /// PPM of Ω_n coloured by conjugate-closed orbit groups, tiled rows × cols.
    Tile {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        rows: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        cols: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        cell: u64,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// PPM with the points of one orbit in black on white.
    OrbitPlot {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[command(flatten)]
        seed: Seed,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        cell: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Io(io::Error),
}

impl From<guinness_core::Error> for Failure {
    fn from(e: guinness_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<u8, Failure>;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out).and_then(|code| {
        out.flush()?;
        Ok(code)
    }) {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { n } => {
            let c = guinness::classify(*n)?;
            if json {
                json_line(out, &c)?;
            } else {
                writeln!(
                    out,
                    "{} k={} {} orbit_length={}",
                    c.n,
                    c.k,
                    c.kind.as_str(),
                    c.standard_orbit_length
                )?;
            }
        }
        Command::Scan { range, kind } => {
            let found =
                guinness::scan_parallel(range.from, range.to, (*kind).into(), range.jobs as usize)?;
            for c in &found {
                if json {
                    json_line(out, c)?;
                } else {
                    writeln!(out, "{}", c.n)?;
                }
            }
        }
        Command::Twins { range } => {
            for (n, next) in guinness::twins_parallel(range.from, range.to, range.jobs as usize)? {
                if json {
                    json_line(out, &TwinRecord { n, next })?;
                } else {
                    writeln!(out, "{n} {next}")?;
                }
            }
        }
        Command::Decompose { n, cap } => {
            let space = OmegaSpace::new(*n)?;
            let signature = orbit::decompose_capped(&space, *cap)?;
            if json {
                json_line(out, &DecomposeRecord::new(&space, signature))?;
            } else {
                writeln!(out, "Ω_{n} ~ {signature}")?;
            }
        }
        Command::Census { n, cap } => {
            let space = OmegaSpace::new(*n)?;
            let census = orbit::conjugacy_census_capped(&space, *cap)?;
            let record = CensusRecord::new(&space, &census);
            if json {
                json_line(out, &record)?;
            } else {
                writeln!(out, "orbits {}", record.orbit_count)?;
                writeln!(out, "conjugate_pairs {}", record.conjugate_pair_count)?;
                for e in &record.self_conjugate {
                    writeln!(out, "self_conjugate length={} count={}", e.length, e.count)?;
                }
            }
        }
        Command::FixedPoints { n } => {
            let space = OmegaSpace::new(*n)?;
            let points = space.fixed_points();
            if json {
                json_line(
                    out,
                    &FixedPointsRecord {
                        n: *n,
                        count: points.len() as u64,
                        points,
                    },
                )?;
            } else {
                for p in points {
                    writeln!(out, "{} {}", p.x, p.y)?;
                }
            }
        }
        Command::Digits { n, out: path } => {
            let stream = guinness::digit_stream(*n)?;
            let path = path
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("G_{n}.txt")));
            let k = stream.k();
            let digits = stream.write_to(File::create(&path)?)?;
            if json {
                json_line(
                    out,
                    &DigitsRecord {
                        n: *n,
                        k,
                        digits,
                        path: path.display().to_string(),
                    },
                )?;
            } else {
                writeln!(out, "{digits}")?;
            }
        }
        Command::VerifyRotation { n, budget } => {
            let check = guinness::verify_rotation_with_budget(*n, *budget)?;
            if json {
                json_line(out, &check)?;
            } else {
                let verdict = if check.holds { "holds" } else { "fails" };
                writeln!(
                    out,
                    "{verdict} n={} digits={} prefix={}",
                    check.n, check.digit_count, check.prefix
                )?;
            }
            if !check.holds {
                return Ok(EXIT_DOMAIN);
            }
        }
        Command::Multiply { m, n } => {
            let product = multiply(m, *n)?;
            if json {
                json_line(
                    out,
                    &MultiplyRecord {
                        m: m.clone(),
                        n: *n,
                        product,
                    },
                )?;
            } else {
                writeln!(out, "{product}")?;
            }
        }
        Command::Prng { n, count, seed } => {
            let space = OmegaSpace::new(*n)?;
            let mut gen = OrbitGenerator::new(space, seed.point(&space))?;
            let mut out = BufWriter::new(out);
            for _ in 0..*count {
                let p = gen.next_point();
                if json {
                    let (u, v) = gen.to_unit(p);
                    json_line(
                        &mut out,
                        &PairRecord {
                            x: p.x,
                            y: p.y,
                            u,
                            v,
                        },
                    )?;
                } else {
                    writeln!(out, "{}", gen.format_pair(p))?;
                }
            }
            out.flush()?;
        }
        Command::Tests {
            source,
            n,
            state,
            samples,
            alpha,
        } => {
            let sample: Vec<f64> = match source {
                Source::Orbit => OrbitGenerator::standard(OmegaSpace::new(*n)?)
                    .first_components()
                    .take(*samples)
                    .collect(),
                Source::Lehmer => Lehmer::new(state.unwrap_or(1)).take(*samples).collect(),
                Source::MiddleSquare => {
                    let seed = state.unwrap_or(1234);
                    let gen = u32::try_from(seed)
                        .ok()
                        .and_then(MiddleSquare::new)
                        .ok_or_else(|| {
                            Failure::Domain(format!(
                                "middle-square state {seed} is not in 0..=9999"
                            ))
                        })?;
                    gen.take(*samples).collect()
                }
            };
            let config = TestConfig {
                significance: match alpha {
                    Alpha::OnePercent => Significance::OnePercent,
                    Alpha::FivePercent => Significance::FivePercent,
                },
                ..TestConfig::default()
            };
            for r in prng::run_tests(&sample, &config)? {
                if json {
                    json_line(out, &r)?;
                } else {
                    writeln!(
                        out,
                        "{} statistic={:.4} dof={} threshold={:.4} {}",
                        r.test,
                        r.statistic,
                        r.degrees_of_freedom,
                        r.threshold,
                        if r.pass { "pass" } else { "fail" }
                    )?;
                }
            }
        }
        Command::Tile {
            n,
            rows,
            cols,
            cell,
            out: path,
        } => {
            let space = OmegaSpace::new(*n)?;
            let img = tiling::render_tiling(&space, *rows, *cols, *cell)?;
            emit_image(out, &img, path.as_deref(), json)?;
        }
        Command::OrbitPlot {
            n,
            seed,
            cell,
            out: path,
        } => {
            let space = OmegaSpace::new(*n)?;
            let img = tiling::render_orbit_plot(&space, seed.point(&space), *cell)?;
            emit_image(out, &img, path.as_deref(), json)?;
        }
    }
    Ok(EXIT_OK)
}

fn emit_image(
    out: &mut dyn Write,
    img: &tiling::Image,
    path: Option<&Path>,
    json: bool,
) -> Result<(), Failure> {
    match path {
        None => img.write_ppm(out)?,
        Some(path) => {
            img.write_ppm(BufWriter::new(File::create(path)?))?;
            let record = ImageRecord {
                width: img.width(),
                height: img.height(),
                path: path.display().to_string(),
            };
            if json {
                json_line(out, &record)?;
            } else {
                writeln!(out, "{}x{} {}", record.width, record.height, record.path)?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct PairRecord {
    x: u64,
    y: u64,
    u: f64,
    v: f64,
}
