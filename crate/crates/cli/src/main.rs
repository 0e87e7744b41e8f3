mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sidon_core::bounds::{bound_rows, CSV_HEADER};
use sidon_core::codes::{covering_radius, min_distance_class, DEFAULT_RADIUS_CAP};
use sidon_core::enumerate::{enumerate_maximal_streaming, EnumOptions, EnumResult, WeightClass};
use sidon_core::gf2core::span_dim;
use sidon_core::io::{
    format_set, format_set_bits, parse_set_literal, parse_witness_file, write_witness,
};
use sidon_core::sidon::report;
use sidon_core::PointSet;

/// Sidon sets in F_2^t, their codes, and bounds on their size.
#[derive(Debug, Parser)]
#[command(name = "sidon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyse one set (or every line of a witness file).
    Check {
        #[arg(long)]
        dim: u32,
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        set: Option<String>,
        /// One set per line, as written by `enumerate --witnesses`.
        #[arg(long)]
        file: Option<PathBuf>,
        /// One JSON object per set instead of key=value lines.
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = Format::Decimal)]
        format: Format,
    },
    /// Count maximal Sidon sets containing {0, e_1, ..., e_t}.
    Enumerate {
        #[arg(long)]
        dim: u32,
        /// Dimension-8 subtask W4..W8, keyed by the largest weight in the set.
        #[arg(long)]
        weight_class: Option<WeightClass>,
        #[arg(long, env = "SIDON_WORKERS")]
        workers: Option<usize>,
        /// Write every maximal set found, one per line.
        #[arg(long)]
        witnesses: Option<PathBuf>,
        /// Permit the dimension-8 W8 / unrestricted runs and dimensions above 8.
        #[arg(long)]
        allow_long_run: bool,
    },
    /// CSV table of upper bounds on smax(t).
    Bounds {
        #[arg(long)]
        t_min: u32,
        #[arg(long)]
        t_max: u32,
    },
    /// Re-run the reproduction checks and print a PASS/FAIL table.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Level::Fast)]
        level: verify::Level,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Decimal,
    Bits,
}

/// Failure carrying the process exit code.
struct Fail {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: 2,
        message: message.into(),
    }
}

fn io_fail(e: io::Error) -> Fail {
    // a closed pipe is not worth a diagnostic
    if e.kind() == io::ErrorKind::BrokenPipe {
        return Fail {
            code: 0,
            message: String::new(),
        };
    }
    Fail {
        code: 1,
        message: format!("i/o error: {e}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Check {
            dim,
            set,
            file,
            json,
            format,
        } => check(&mut out, dim, set.as_deref(), file, json, format),
        Command::Enumerate {
            dim,
            weight_class,
            workers,
            witnesses,
            allow_long_run,
        } => enumerate(
            &mut out,
            dim,
            weight_class,
            workers,
            witnesses,
            allow_long_run,
        ),
        Command::Bounds { t_min, t_max } => bounds(&mut out, t_min, t_max),
        Command::Verify { level } => verify::run(&mut out, level),
    };
    let flushed = out.flush().map_err(io_fail);
    match result.and(flushed) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("sidon: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn check(
    out: &mut impl Write,
    dim: u32,
    set: Option<&str>,
    file: Option<PathBuf>,
    as_json: bool,
    format: Format,
) -> Result<(), Fail> {
    let sets = match (set, file) {
        (Some(lit), _) => vec![parse_set_literal(dim, lit).map_err(|e| usage(e.to_string()))?],
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            parse_witness_file(dim, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(usage("one of --set or --file is required")),
    };
    for (i, m) in sets.iter().enumerate() {
        if as_json {
            writeln!(out, "{}", check_json(m, format)).map_err(io_fail)?;
        } else {
            if i > 0 {
                writeln!(out).map_err(io_fail)?;
            }
            for (key, value) in check_fields(m, format) {
                writeln!(out, "{key}={value}").map_err(io_fail)?;
            }
        }
    }
    Ok(())
}

fn render(m: &PointSet, format: Format) -> String {
    match format {
        Format::Decimal => format_set(m),
        Format::Bits => format_set_bits(m),
    }
}

/// Parameters of the code whose check matrix has the elements of `m` as
/// columns; `R` is `none` when the columns do not span the space.
struct CodeSummary {
    n: usize,
    k: usize,
    d_class: String,
    radius: Option<u32>,
}

fn code_summary(m: &PointSet) -> Option<CodeSummary> {
    if m.contains(0) {
        return None;
    }
    let d_class = min_distance_class(m).ok()?.to_string();
    Some(CodeSummary {
        n: m.len(),
        k: m.len() - span_dim(m) as usize,
        d_class,
        radius: covering_radius(m, DEFAULT_RADIUS_CAP).ok(),
    })
}

fn check_fields(m: &PointSet, format: Format) -> Vec<(&'static str, String)> {
    let r = report(m);
    let mut fields = vec![
        ("set", render(m, format)),
        ("size", m.len().to_string()),
        ("is_sidon", r.is_sidon.to_string()),
        ("is_sum_free", r.is_sum_free.to_string()),
        ("is_maximal_sidon", r.is_maximal_sidon.to_string()),
        ("two_star_count", r.two_star_count.to_string()),
        ("three_sum_count", r.three_sum_count.to_string()),
        ("candidate_count", r.candidate_count.to_string()),
    ];
    if let Some(c) = code_summary(m) {
        fields.push(("n", c.n.to_string()));
        fields.push(("k", c.k.to_string()));
        fields.push(("d_class", c.d_class));
        fields.push(("R", c.radius.map_or("none".into(), |r| r.to_string())));
    }
    fields
}

fn check_json(m: &PointSet, format: Format) -> serde_json::Value {
    let mut v = json!({
        "dim": m.dim(),
        "set": render(m, format),
        "size": m.len(),
        "report": report(m),
    });
    if let Some(c) = code_summary(m) {
        v["code"] = json!({ "n": c.n, "k": c.k, "d_class": c.d_class, "R": c.radius });
    }
    v
}

/// Runs kept behind `--allow-long-run`: the whole dimension-8 search and
/// its W8 subtask (minutes on one core here, days for the original
/// unordered search), and every larger dimension.
fn needs_long_run(dim: u32, class: Option<WeightClass>) -> bool {
    dim > 8 || (dim == 8 && matches!(class, None | Some(WeightClass::W8)))
}

fn enumerate(
    out: &mut impl Write,
    dim: u32,
    weight_class: Option<WeightClass>,
    workers: Option<usize>,
    witnesses: Option<PathBuf>,
    allow_long_run: bool,
) -> Result<(), Fail> {
    if needs_long_run(dim, weight_class) && !allow_long_run {
        let what = match weight_class {
            Some(c) => format!("dimension {dim}, class {c}"),
            None => format!("dimension {dim}"),
        };
        return Err(usage(format!(
            "{what} is a long run; pass --allow-long-run to start it anyway"
        )));
    }
    let workers = match workers {
        Some(0) => return Err(usage("--workers must be at least 1")),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let opts = EnumOptions {
        weight_class,
        workers,
        ..EnumOptions::default()
    };

    let mut sink_file = match &witnesses {
        Some(path) => Some(BufWriter::new(
            File::create(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        )),
        None => None,
    };
    let mut write_err: Option<io::Error> = None;
    let start = Instant::now();
    let result = enumerate_maximal_streaming(dim, &opts, &mut |m| {
        if let (Some(f), None) = (sink_file.as_mut(), &write_err) {
            if let Err(e) = write_witness(f, m) {
                write_err = Some(e);
            }
        }
    })
    .map_err(|e| usage(e.to_string()))?;
    let elapsed = start.elapsed();
    if let Some(e) = write_err {
        return Err(io_fail(e));
    }
    if let Some(mut f) = sink_file {
        f.flush().map_err(io_fail)?;
    }
    print_enum(out, dim, weight_class, &result).map_err(io_fail)?;
    writeln!(out, "wall_time_s={:.3}", elapsed.as_secs_f64()).map_err(io_fail)
}

fn print_enum(
    out: &mut impl Write,
    dim: u32,
    class: Option<WeightClass>,
    r: &EnumResult,
) -> io::Result<()> {
    writeln!(out, "dim={dim}")?;
    if let Some(c) = class {
        writeln!(out, "weight_class={c}")?;
    }
    writeln!(out, "# maximal sets by size, every insertion order counted")?;
    for (size, count) in &r.ordered_histogram {
        writeln!(out, "{size}: {count}")?;
    }
    writeln!(out, "# distinct maximal sets by size")?;
    for (size, count) in &r.size_histogram {
        writeln!(out, "distinct {size}: {count}")?;
    }
    writeln!(out, "nodes_visited={}", r.nodes_visited)
}

fn bounds(out: &mut impl Write, t_min: u32, t_max: u32) -> Result<(), Fail> {
    if t_min < 1 || t_min > t_max {
        return Err(usage(format!(
            "need 1 <= t-min <= t-max, got {t_min}..{t_max}"
        )));
    }
    writeln!(out, "{CSV_HEADER}").map_err(io_fail)?;
    for row in bound_rows(t_min, t_max) {
        writeln!(out, "{}", row.to_csv()).map_err(io_fail)?;
    }
    Ok(())
}
