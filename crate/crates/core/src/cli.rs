//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification (`spectrum --compare`)
//! fails, 2 on usage or budget errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{contraction_probe, Alphabet, Automaton, TailWord};
use crate::hanoi::{distance_vs_diameter_report, frame_stewart_count, puzzle_distance, DiskConfig};
use crate::schreier::{
    diameter, export_graph, fit_growth, growth_ball_with_budget, growth_exponent_diagnostics,
    growth_function, DiameterMode, GraphFormat, LevelGraph, MAX_BALL_VERTICES, MAX_LEVEL_VERTICES,
};
use crate::spectral::{
    chung_bound_check, closed_form_spectrum, compare_spectra, gap_series, julia_approximation,
    kns_weights, level_spectrum, GapSource, Scale, SpectrumReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hanoi-groups",
    version,
    about = "Schreier graphs, spectra and growth of the Hanoi Towers groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Vertex budget for graph construction.
    #[arg(long, global = true)]
    pub max_vertices: Option<u64>,
    /// Allow --max-vertices above the built-in budgets.
    #[arg(long = "unsafe", global = true)]
    pub allow_unsafe: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScaleArg {
    #[value(name = "T")]
    T,
    #[value(name = "M")]
    M,
}

impl From<ScaleArg> for Scale {
    fn from(s: ScaleArg) -> Scale {
        match s {
            ScaleArg::T => Scale::T,
            ScaleArg::M => Scale::M,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Closed,
    Numeric,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum of Γ_n: closed form (k=3), numeric, or both compared.
    Spectrum {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, conflicts_with_all = ["numeric", "compare"])]
        closed: bool,
        #[arg(long, conflicts_with = "compare")]
        numeric: bool,
        /// Compute both and match them; exits 1 on mismatch.
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum, default_value = "T")]
        scale: ScaleArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Matching tolerance for --compare (on the chosen scale).
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Diameter of Γ_n.
    Diameter {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, conflicts_with = "sweep")]
        exact: bool,
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 8)]
        sweeps: usize,
    },
    /// Growth function γ(0..r) of the orbital graph around 000...
    Growth {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(long)]
        radius: u32,
        /// Also emit the log-log and polylog fits.
        #[arg(long)]
        fit: bool,
        #[arg(long)]
        fit_min: Option<usize>,
        #[arg(long)]
        fit_max: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Spectral gaps δ(1..levels).
    Gap {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum, default_value = "closed")]
        source: SourceArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// The k-peg puzzle: distances, Frame-Stewart counts, diameter report.
    Hanoi {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, group = "what")]
        distance: bool,
        #[arg(long, group = "what")]
        fs: bool,
        #[arg(long, group = "what")]
        report: bool,
    },
    /// Export Γ_n (or a ball of the orbital graph) as DOT or CSV.
    Export {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(long, conflicts_with = "csv")]
        dot: bool,
        #[arg(long)]
        csv: bool,
        /// Export the radius-r ball around 000... instead of Γ_n.
        #[arg(long)]
        ball_radius: Option<u32>,
    },
    /// The automaton of H(k) as JSON.
    Automaton {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
    },
    /// Empirical section-descent probe.
    Probe {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Atoms of the limiting spectral measure up to a depth (k=3).
    Kns {
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Backward-orbit cloud of f(x) = x^2 - x - 3 from 0.
    Julia {
        #[arg(long)]
        depth: usize,
    },
    /// Diameter bound from the lazy-walk spectrum.
    Chung {
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
    },
}

/// Parses `args` and runs the command; the binary's whole body.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let mut file;
    let sink: &mut dyn Write = match &cli.global.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => out,
    };
    let code = match execute(&cli, sink, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    };
    if sink.flush().is_err() {
        return EXIT_USAGE;
    }
    code
}

fn level_budget(g: &GlobalOpts) -> Result<u64> {
    match g.max_vertices {
        None => Ok(MAX_LEVEL_VERTICES),
        Some(m) if m <= MAX_LEVEL_VERTICES || g.allow_unsafe => Ok(m),
        Some(m) => Err(Error::InvalidArgument(format!(
            "--max-vertices {m} exceeds the default budget {MAX_LEVEL_VERTICES}; pass --unsafe to allow it"
        ))),
    }
}

fn ball_budget(g: &GlobalOpts) -> Result<usize> {
    match g.max_vertices {
        None => Ok(MAX_BALL_VERTICES),
        Some(m) if m <= MAX_BALL_VERTICES as u64 || g.allow_unsafe => Ok(m as usize),
        Some(m) => Err(Error::InvalidArgument(format!(
            "--max-vertices {m} exceeds the default budget {MAX_BALL_VERTICES}; pass --unsafe to allow it"
        ))),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let global = &cli.global;
    match &cli.command {
        Command::Spectrum {
            k,
            n,
            closed,
            numeric,
            compare,
            scale,
            format,
            tol,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let scale = Scale::from(*scale);
            let wants_closed = *closed || *compare || (!*numeric && *k == 3);
            if wants_closed && *k != 3 {
                return Err(Error::InvalidArgument(
                    "closed form available only for k=3".into(),
                ));
            }
            if *compare {
                let closed = closed_form_spectrum(*n)?.on_scale(scale);
                let numeric = level_spectrum(alphabet, *n, scale)?;
                let report = compare_spectra(&numeric, &closed, *tol)?;
                match format {
                    Format::Json => json_line(out, &report)?,
                    Format::Csv => {
                        writeln!(out, "level,distinct,max_deviation,matched")?;
                        writeln!(
                            out,
                            "{},{},{},{}",
                            n,
                            closed.distinct_value_count(),
                            report.max_deviation,
                            report.matched
                        )?;
                    }
                }
                if !report.matched {
                    writeln!(err, "spectrum mismatch at level {n}: {report:?}")?;
                    return Ok(EXIT_VERIFICATION_FAILED);
                }
                return Ok(EXIT_OK);
            }
            let report = if wants_closed {
                SpectrumReport::from_closed(&closed_form_spectrum(*n)?, scale)
            } else {
                SpectrumReport::from_numeric(&level_spectrum(alphabet, *n, scale)?, *n, scale)
            };
            match format {
                Format::Json => writeln!(out, "{}", report.to_json())?,
                Format::Csv => report.write_csv(out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Diameter {
            k,
            n,
            exact: _,
            sweep,
            sweeps,
        } => {
            let g = LevelGraph::build(Alphabet::new(*k)?, *n, level_budget(global)?)?;
            let mode = if *sweep {
                DiameterMode::DoubleSweep { sweeps: *sweeps }
            } else {
                DiameterMode::Exact
            };
            let m = diameter(&g, mode)?;
            if m.lower_bound {
                writeln!(out, "{} (lower bound)", m.diameter)?;
            } else {
                writeln!(out, "{}", m.diameter)?;
            }
            Ok(EXIT_OK)
        }
        Command::Growth {
            k,
            radius,
            fit,
            fit_min,
            fit_max,
            format,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let gamma = growth_function(alphabet, &TailWord::xi(), *radius, ball_budget(global)?)?;
            let fit_report = if *fit {
                Some(match (fit_min, fit_max) {
                    (None, None) => growth_exponent_diagnostics(&gamma, *k)?,
                    (lo, hi) => {
                        fit_growth(&gamma, *k, lo.unwrap_or(1), hi.unwrap_or(gamma.len() - 1))?
                    }
                })
            } else {
                None
            };
            match format {
                Format::Csv => {
                    writeln!(out, "r,gamma")?;
                    for (r, g) in gamma.iter().enumerate() {
                        writeln!(out, "{r},{g}")?;
                    }
                    if let Some(f) = &fit_report {
                        json_line(err, f)?;
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct GrowthOut<'a> {
                        k: usize,
                        gamma: &'a [u64],
                        fit: Option<crate::schreier::FitReport>,
                    }
                    json_line(
                        out,
                        &GrowthOut {
                            k: *k,
                            gamma: &gamma,
                            fit: fit_report,
                        },
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gap {
            k,
            levels,
            source,
            format,
        } => {
            let source = match source {
                SourceArg::Closed => GapSource::Closed,
                SourceArg::Numeric => GapSource::Numeric,
            };
            let series = gap_series(Alphabet::new(*k)?, *levels, source)?;
            match format {
                Format::Json => json_line(out, &series)?,
                Format::Csv => {
                    writeln!(out, "n,lambda,delta")?;
                    for r in &series.rows {
                        writeln!(out, "{},{},{}", r.n, r.lambda, r.delta)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Hanoi {
            n,
            k,
            distance: _,
            fs,
            report,
        } => {
            if *fs {
                Alphabet::new(*k)?;
                writeln!(out, "{}", frame_stewart_count(*n, *k))?;
            } else if *report {
                let r = distance_vs_diameter_report(*n, *k)?;
                writeln!(
                    out,
                    "n,distance,frame_stewart,diameter,distance_below_diameter"
                )?;
                for row in &r.rows {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        row.n,
                        row.distance,
                        row.frame_stewart,
                        row.diameter,
                        row.distance_below_diameter
                    )?;
                }
            } else {
                let d = puzzle_distance(*k, &DiskConfig::tower(0, *n), &DiskConfig::tower(1, *n))?;
                writeln!(out, "{d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Export {
            k,
            n,
            dot,
            csv: _,
            ball_radius,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let format = if *dot {
                GraphFormat::Dot
            } else {
                GraphFormat::Csv
            };
            match ball_radius {
                Some(r) => {
                    let ball = growth_ball_with_budget(
                        alphabet,
                        &TailWord::xi(),
                        *r,
                        ball_budget(global)?,
                    )?;
                    export_graph(&ball, format, out)?;
                }
                None => {
                    let g = LevelGraph::build(alphabet, *n, level_budget(global)?)?;
                    export_graph(&g, format, out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Automaton { k } => {
            writeln!(out, "{}", Automaton::hanoi(Alphabet::new(*k)?).to_json())?;
            Ok(EXIT_OK)
        }
        Command::Probe {
            k,
            max_length,
            samples,
        } => {
            let report = contraction_probe(Alphabet::new(*k)?, *max_length, *samples, global.seed)?;
            json_line(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::Kns { depth, format } => {
            let measure = kns_weights(*depth)?;
            match format {
                Format::Json => json_line(out, &measure)?,
                Format::Csv => {
                    writeln!(out, "value,weight,provenance,depth")?;
                    for a in &measure.atoms {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            a.value,
                            a.weight,
                            a.provenance.name(),
                            a.provenance.depth().unwrap_or(0)
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Julia { depth } => {
            let j = julia_approximation(*depth, &[0.0])?;
            writeln!(out, "x")?;
            for x in &j.points {
                writeln!(out, "{x}")?;
            }
            writeln!(
                err,
                "points={} min={} max={} largest_gap=({}, {})",
                j.points.len(),
                j.min,
                j.max,
                j.largest_gap.0,
                j.largest_gap.1
            )?;
            Ok(EXIT_OK)
        }
        Command::Chung { k, n } => {
            let r = chung_bound_check(Alphabet::new(*k)?, *n)?;
            json_line(out, &r)?;
            Ok(if r.holds {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
    }
}
