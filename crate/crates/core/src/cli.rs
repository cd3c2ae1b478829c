//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for unreadable, malformed or invalid input,
//! 2 when the fairing search fails.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::arc::{self, DEFAULT_EI};
use crate::error::Error;
use crate::io::{
    emit_document, format_number, parse_document, render_svg, render_svg_many, AngleUnit, ParseOptions,
    PolyarcDocument, RenderOptions,
};
use crate::optimize::{smooth, GssConfig, Objective};
use crate::polycurve::SplineFamily;

#[derive(Debug, Parser)]
#[command(name = "arcspline", version, about = "Polyarcs, arc splines and their fairing")]
pub struct Cli {
    /// Read and write all angles (flags and files) in degrees
    #[arg(long, global = true)]
    pub degrees: bool,

    /// Treat the input curve as closed regardless of the document
    #[arg(long, global = true)]
    pub closed: bool,

    /// Output file (default: standard output)
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print length, area and bending energy, totals and per segment
    Info {
        /// Polyarc document, `-` for standard input
        file: PathBuf,
        /// Bending rigidity EI
        #[arg(long, default_value_t = DEFAULT_EI)]
        ei: f64,
    },
    /// Build the arc spline with a given first arc angle
    Spline {
        /// Polyarc document, `-` for standard input
        file: PathBuf,
        /// First arc angle
        #[arg(long, allow_hyphen_values = true)]
        theta0: f64,
    },
    /// Draw a range of family members into one SVG
    Family {
        /// Polyarc document, `-` for standard input
        file: PathBuf,
        /// First value of the first arc angle
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        /// Last value, included when the steps land on it
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Find the family member minimizing length, area or energy
    Smooth {
        /// Polyarc document, `-` for standard input
        file: PathBuf,
        /// length, area or energy
        #[arg(long, value_parser = parse_objective)]
        objective: Objective,
        /// Lower search bound (default -344°)
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<f64>,
        /// Upper search bound (default 344°)
        #[arg(long, allow_hyphen_values = true)]
        up: Option<f64>,
        /// Search tolerance (default 0.6°)
        #[arg(long)]
        tol: Option<f64>,
        /// Spacing of the global scan before refinement (default 0.6°, 0 disables)
        #[arg(long)]
        scan_step: Option<f64>,
        /// Bending rigidity EI
        #[arg(long, default_value_t = DEFAULT_EI)]
        ei: f64,
        /// Also draw the optimal spline to this SVG file
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Print points along the curve, evenly spaced per segment
    Sample {
        /// Polyarc document, `-` for standard input
        file: PathBuf,
        /// Points per segment, both ends included
        #[arg(short = 'n', long = "points", default_value_t = 16)]
        points: usize,
    },
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Stroke width in pixels
    #[arg(long, default_value_t = 1.5)]
    pub stroke_width: f64,
    /// Margin as a fraction of the drawing size
    #[arg(long, default_value_t = 0.05)]
    pub padding: f64,
}

impl RenderArgs {
    fn options(&self) -> RenderOptions {
        RenderOptions {
            stroke_width: self.stroke_width,
            padding: self.padding,
            ..RenderOptions::default()
        }
    }
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Optimization(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Optimization(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let unit = if cli.degrees {
        AngleUnit::Degrees
    } else {
        AngleUnit::Radians
    };
    let load = |file: &Path, stderr: &mut dyn Write| -> Result<PolyarcDocument, Failure> {
        let text = read_input(file)?;
        let opts = ParseOptions {
            angle_unit: cli.degrees.then_some(AngleUnit::Degrees),
            closed: cli.closed.then_some(true),
        };
        let doc = parse_document(&text, &opts).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
        for w in &doc.warnings {
            let _ = writeln!(stderr, "warning: {w}");
        }
        Ok(doc)
    };

    match &cli.command {
        Command::Info { file, ei } => {
            let doc = load(file, stderr)?;
            let text = info_report(&doc, *ei, unit)?;
            write_output(cli.output.as_deref(), &text, stdout)
        }
        Command::Spline { file, theta0 } => {
            let doc = load(file, stderr)?;
            let family = SplineFamily::from_polyarc(&doc.polyarc)?;
            let spline = family.propagate(unit.to_radians(*theta0))?;
            let text = emit_document(&spline, unit, doc.units.as_deref());
            let mut report = format!("g1 defect: {}\n", format_number(spline.g1_defect()?));
            if let Some(d) = spline.closing_g1_defect()? {
                report.push_str(&format!("closing g1 defect: {}\n", format_number(d)));
            }
            write_output(cli.output.as_deref(), &text, stdout)?;
            let sink: &mut dyn Write = if cli.output.is_some() { stdout } else { stderr };
            let _ = sink.write_all(report.as_bytes());
            Ok(())
        }
        Command::Family {
            file,
            from,
            to,
            step,
            render,
        } => {
            let doc = load(file, stderr)?;
            let family = SplineFamily::from_polyarc(&doc.polyarc)?;
            if !(*step > 0.0) || !(from <= to) {
                return Err(Failure::Input("need --step > 0 and --from <= --to".into()));
            }
            let count = ((to - from) / step + 1e-9).floor() as usize + 1;
            let mut curves = Vec::with_capacity(count);
            for k in 0..count {
                let theta0 = from + k as f64 * step;
                match family.propagate(unit.to_radians(theta0)) {
                    Ok(pa) => curves.push(pa),
                    Err(e) => {
                        let _ = writeln!(stderr, "warning: skipping theta0 = {theta0}: {e}");
                    }
                }
            }
            let svg = render_svg_many(&curves, &render.options())?;
            write_output(cli.output.as_deref(), &svg, stdout)?;
            let _ = writeln!(stderr, "{} curves", curves.len());
            Ok(())
        }
        Command::Smooth {
            file,
            objective,
            lo,
            up,
            tol,
            scan_step,
            ei,
            svg,
            render,
        } => {
            let doc = load(file, stderr)?;
            let family = SplineFamily::from_polyarc(&doc.polyarc)?;
            let mut cfg = GssConfig::default();
            if let Some(lo) = lo {
                cfg.lo = unit.to_radians(*lo);
            }
            if let Some(up) = up {
                cfg.up = unit.to_radians(*up);
            }
            if let Some(tol) = tol {
                cfg.tol = unit.to_radians(*tol);
            }
            if let Some(step) = scan_step {
                cfg.scan_step = unit.to_radians(*step);
            }
            cfg.validate()?;
            let best = smooth(&family, *objective, &cfg, *ei).map_err(|e| match e {
                Error::IterationLimit(_) | Error::FullCircle(_) => Failure::Optimization(e.to_string()),
                other => Failure::from(other),
            })?;
            let angle_label = if cli.degrees { "[°]" } else { "[rad]" };
            let mut table = String::new();
            table.push_str(&format!(
                "{:<12} {:>14} {:>14} {:>14} {:>14}\n",
                "minimize by",
                format!("theta0 {angle_label}"),
                "L",
                "A",
                "U"
            ));
            table.push_str(&format!(
                "{:<12} {:>14.6} {:>14.6} {:>14.6} {:>14.6}\n",
                capitalize(objective.as_str()),
                unit.from_radians(best.theta0),
                best.metrics.length,
                best.metrics.area,
                best.metrics.energy
            ));
            table.push_str(&format!(
                "reductions: {}, evaluations: {}\n",
                best.reductions, best.evaluations
            ));
            let _ = stdout.write_all(table.as_bytes());
            if let Some(path) = &cli.output {
                let text = emit_document(&best.spline, unit, doc.units.as_deref());
                write_file(path, &text)?;
            }
            if let Some(path) = svg {
                write_file(path, &render_svg(&best.spline, &render.options())?)?;
            }
            Ok(())
        }
        Command::Sample { file, points } => {
            let doc = load(file, stderr)?;
            let mut text = String::new();
            for p in doc.polyarc.sample(*points)? {
                text.push_str(&format!("{} {}\n", format_number(p.x), format_number(p.y)));
            }
            write_output(cli.output.as_deref(), &text, stdout)
        }
    }
}

fn info_report(doc: &PolyarcDocument, ei: f64, unit: AngleUnit) -> Result<String, Failure> {
    let pa = &doc.polyarc;
    let mut s = String::new();
    let units = doc.units.as_deref().map(|u| format!(" [{u}]")).unwrap_or_default();
    s.push_str(&format!(
        "segments: {} ({})\n",
        pa.segment_count(),
        if pa.is_closed() { "closed" } else { "open" }
    ));
    s.push_str(&format!("length{units}: {}\n", format_number(pa.total_length()?)));
    s.push_str(&format!("area: {}\n", format_number(pa.total_area()?)));
    s.push_str(&format!(
        "abs segment area: {}\n",
        format_number(pa.abs_segment_area()?)
    ));
    s.push_str(&format!(
        "energy (EI = {}): {}\n",
        format_number(ei),
        format_number(pa.total_energy(ei)?)
    ));
    if pa.segment_count() > 0 {
        s.push_str(&format!(
            "{:>4} {:>14} {:>14} {:>14} {:>14} {:>14} {:>14}\n",
            "i",
            "c",
            format!("theta [{}]", if unit == AngleUnit::Degrees { "deg" } else { "rad" }),
            "R",
            "L",
            "A",
            "U"
        ));
    }
    for (i, seg) in pa.segments().enumerate() {
        let c = seg.chord_len();
        let r = if seg.theta == 0.0 {
            f64::INFINITY
        } else {
            arc::radius(c, seg.theta).map_err(|e| Failure::from(e.at_segment(i)))?
        };
        s.push_str(&format!(
            "{:>4} {:>14.6} {:>14.6} {:>14.6} {:>14.6} {:>14.6} {:>14.6}\n",
            i,
            c,
            unit.from_radians(seg.theta),
            r,
            seg.length()?,
            seg.segment_area()?,
            seg.bending_energy(ei)?
        ));
    }
    Ok(s)
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().chain(c).collect(),
        None => String::new(),
    }
}

fn read_input(file: &Path) -> Result<String, Failure> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))
    }
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => write_file(p, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}"))),
    }
}
