//! Command-line front end: counts, exports, Hamiltonian walks, series,
//! tables and verification suites.

pub mod error;
pub mod export;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horadam::hamilton::{hamiltonian_cycle, hamiltonian_path, path_endpoints, CycleOutcome};
use horadam::sequences::{
    cube_coefficients, cube_number, cube_polynomial, degree_rows, edge_count, edge_counts, vertex_count,
    vertex_counts,
};
use horadam::series::{GeneratingFunction, Order};
use horadam::{build_graph, Params};

pub use error::CliError;
use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "horadam", version, about = "Horadam cubes: counts, exports and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    n: usize,
}

impl Shape {
    fn params(&self) -> Result<Params, CliError> {
        Ok(Params::new(self.a, self.b, self.n)?)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Count {
    Vertices,
    Edges,
    Degrees,
    Cubes,
    CubeNumber,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ImportFormat {
    Edgelist,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "S")]
    S,
    #[value(name = "E")]
    E,
    #[value(name = "Delta")]
    Delta,
    #[value(name = "A")]
    A,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one counting sequence value; coefficient lists are space-separated from index 0.
    Count {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum)]
        what: Count,
    },
    /// Export the graph.
    Graph {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        /// Color DOT vertices by the proper 2-coloring.
        #[arg(long)]
        color: bool,
    },
    /// Read an exported graph and check it against a fresh build.
    Import {
        #[arg(long, value_enum, default_value = "edgelist")]
        format: ImportFormat,
        file: String,
    },
    /// Print a Hamiltonian path, or with --cycle a Hamiltonian cycle.
    Hamilton {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        cycle: bool,
    },
    /// Expand a generating function.
    Series {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum)]
        which: Which,
        /// Highest power of x.
        #[arg(long, default_value_t = Order::DEFAULT.x)]
        order: usize,
        /// Highest power of y (bivariate series only).
        #[arg(long, default_value_t = Order::DEFAULT.y)]
        y_order: usize,
    },
    /// Vertex, edge, degree and cube tables for one (a, b).
    Tables {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Run verification suites over a parameter grid and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Inclusive range `lo:hi`.
        #[arg(long, default_value = "1:3", value_parser = parse_range)]
        a_range: RangeInclusive<u32>,
        #[arg(long, default_value = "1:3", value_parser = parse_range)]
        b_range: RangeInclusive<u32>,
        /// Include the wall-clock duration (makes the output vary between runs).
        #[arg(long)]
        timings: bool,
    },
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = text.split_once(':').unwrap_or((text, text));
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start in {text:?}"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end in {text:?}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("range {text:?} must satisfy 1 <= lo <= hi"));
    }
    Ok(lo..=hi)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn count(p: &Params, what: Count) -> Result<String, CliError> {
    Ok(match what {
        Count::Vertices => vertex_count(p).to_string(),
        Count::Edges => edge_count(p).to_string(),
        Count::Degrees => join(degree_rows(p.a, p.b, p.n)?.pop().unwrap_or_default()),
        Count::Cubes => join(cube_coefficients(p).values),
        Count::CubeNumber => cube_number(p).to_string(),
    })
}

fn hamilton(p: &Params, cycle: bool) -> Result<String, CliError> {
    let g = build_graph(p)?;
    let mut out = format!("# {p}; {}\n", export::convention(p));
    let walk = if cycle {
        match hamiltonian_cycle(&g)? {
            CycleOutcome::Cycle(walk) => {
                out.push_str(&format!("# hamiltonian cycle of {} vertices\n", walk.vertices.len()));
                walk
            }
            CycleOutcome::Impossible { reason } => {
                out.push_str(&format!("# no hamiltonian cycle: {reason}\n"));
                return Ok(out);
            }
            CycleOutcome::NotGuaranteed => {
                out.push_str("# no construction: outside the classes with a known hamiltonian cycle\n");
                return Ok(out);
            }
        }
    } else {
        let contract = path_endpoints(p)?;
        out.push_str(&format!(
            "# hamiltonian path from {} to {}\n",
            contract.start.render(p),
            contract.end.render(p)
        ));
        hamiltonian_path(&g)?
    };
    for v in walk.vertices {
        out.push_str(&g.vertex(v).render(p));
        out.push('\n');
    }
    Ok(out)
}

fn series(a: u32, b: u32, which: Which, order: Order) -> Result<String, CliError> {
    Params::new(a, b, 0)?;
    let gf = match which {
        Which::S => GeneratingFunction::Vertices,
        Which::E => GeneratingFunction::Edges,
        Which::Delta => GeneratingFunction::Degrees,
        Which::A => GeneratingFunction::Cubes,
    };
    Ok(gf.expand(a, b, order)?.to_string())
}

fn tables(a: u32, b: u32, max_n: usize) -> Result<String, CliError> {
    let p = Params::new(a, b, max_n)?;
    let mut out = format!("# a={a} b={b}\n\nn\ts_n\te_n\n");
    let (s, e) = (vertex_counts(a, b, max_n), edge_counts(a, b, max_n));
    for n in 0..=max_n {
        out.push_str(&format!("{n}\t{}\t{}\n", s[n], e[n]));
    }
    out.push_str("\ndegree distribution (n: count of degree 0, 1, ..)\n");
    for (n, row) in degree_rows(a, b, max_n)?.iter().enumerate() {
        out.push_str(&format!("{n}: {}\n", join(row)));
    }
    out.push_str("\ncube polynomials\n");
    for n in 0..=max_n {
        out.push_str(&format!("{n}: {}\n", cube_polynomial(&p.with_n(n))));
    }
    Ok(out)
}

fn import(format: ImportFormat, file: &str) -> Result<String, CliError> {
    let text = std::fs::read_to_string(file).map_err(|source| CliError::Io {
        path: file.to_string(),
        source,
    })?;
    let g = match format {
        ImportFormat::Edgelist => export::read_edge_list(&text)?,
        ImportFormat::Json => export::read_json(&text)?,
    };
    let p = *g.params();
    if build_graph(&p)? != g {
        return Err(CliError::CheckFailed(format!("{file} is not the graph of {p}")));
    }
    Ok(format!("{p}: {} vertices, {} edges, identical to a fresh build\n", g.order(), g.size()))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match cli.command {
        Command::Count { shape, what } => format!("{}\n", count(&shape.params()?, what)?),
        Command::Graph { shape, format, color } => {
            let g = build_graph(&shape.params()?)?;
            match format {
                Format::Edgelist => export::edge_list(&g),
                Format::Dot => export::dot(&g, color),
                Format::Json => export::json(&g),
            }
        }
        Command::Import { format, file } => import(format, &file)?,
        Command::Hamilton { shape, cycle } => hamilton(&shape.params()?, cycle)?,
        Command::Series {
            a,
            b,
            which,
            order,
            y_order,
        } => series(a, b, which, Order::new(order, y_order))?,
        Command::Tables { a, b, max_n } => tables(a, b, max_n)?,
        Command::Verify {
            suite,
            max_n,
            a_range,
            b_range,
            timings,
        } => {
            let started = Instant::now();
            let mut report = verify::run_suite(suite, a_range, b_range, max_n)?;
            if timings {
                report.duration_ms = Some(started.elapsed().as_millis());
            }
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            out.write_all(text.as_bytes())?;
            if !report.passed() {
                return Err(CliError::CheckFailed(format!("{} checks failed", report.failed)));
            }
            return Ok(());
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// status: 0 on success, 1 on a failed check, 2 on usage errors, 3 when a
/// resource cap is hit.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
