use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use origami_census::{
    bound_csv, constructive_census, cross_check, parallel_census, polygon_dump, render_svg,
    render_text, summary_csv, to_jsonl, TimedCensus, CLI_LONG_GENUS,
};
use origami_census_core::bounds::bound_table;
use origami_census_core::census::verify_one;
use origami_census_core::menage::{
    enumerate_menage, gilbert_classes, is_all_opposite, menage_number,
};
use origami_census_core::polygon::origami_to_polygon;
use origami_census_core::{CycleSeq, Origami, Perm, SymmetryGroup};

#[derive(Parser)]
#[command(
    name = "origami-census",
    version,
    about = "Census of minimal filling pairs through [1,1]-origamis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count classes in one genus.
    Count(CensusArgs),
    /// List classes in one genus as JSON lines.
    Enumerate(CensusArgs),
    /// Full diagnostic for one gluing.
    Verify(PermArgs),
    /// Dump the complementary polygon of a gluing.
    Polygon(PermArgs),
    /// Ménage numbers and rotation classes.
    Menage(MenageArgs),
    /// Upper bounds on the class count.
    Bound(BoundArgs),
    /// Draw a gluing.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Mirror,
    Full,
}

impl From<GroupArg> for SymmetryGroup {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Mirror => SymmetryGroup::Mirror,
            GroupArg::Full => SymmetryGroup::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Construct,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: available cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Needed from genus 7 on.
    #[arg(long)]
    allow_long: bool,
    #[arg(long, value_enum, default_value = "brute")]
    method: MethodArg,
    /// Run both methods and fail unless they agree.
    #[arg(long)]
    cross_check: bool,
    #[arg(long, value_enum, default_value = "mirror")]
    group: GroupArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PermArgs {
    /// 1-based cycle notation, e.g. "(1 2 5 3 4)".
    #[arg(long)]
    perm: String,
    /// Number of squares; defaults to the largest label.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "mirror")]
    group: GroupArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MenageArgs {
    #[arg(long)]
    n: usize,
    /// List class representatives instead of counting.
    #[arg(long)]
    classes: bool,
    /// Drop the all-opposite class.
    #[arg(long)]
    exclude_opposite: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, required_unless_present = "table")]
    genus: Option<u32>,
    /// Rows for g = 3..=max.
    #[arg(long, requires = "max")]
    table: bool,
    #[arg(long)]
    max: Option<u32>,
    /// Fill the count column by running censuses up to this genus.
    #[arg(long, default_value_t = 6)]
    census_up_to: u32,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    allow_long: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Text,
    Svg,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    perm: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: RenderFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(anyhow::Error),
    Check(anyhow::Error),
}

impl From<origami_census_core::Error> for Failure {
    fn from(e: origami_census_core::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Check(e)) => {
            eprintln!("check failed: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Check),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Check(e.into()))
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_perm(text: &str, n: Option<usize>) -> Result<Perm, Failure> {
    match n {
        Some(n) => Ok(Perm::parse_cycles(text, n)?),
        None => Ok(text.parse::<CycleSeq>()?.to_perm()),
    }
}

fn census(args: &CensusArgs) -> Result<TimedCensus, Failure> {
    if args.genus >= CLI_LONG_GENUS && !args.allow_long {
        return Err(usage(anyhow!(
            "genus {} scans {}! gluings; pass --allow-long",
            args.genus,
            2 * args.genus - 2
        )));
    }
    if args.workers == Some(0) {
        return Err(usage(anyhow!("--workers must be positive")));
    }
    let group = args.group.into();
    let workers = args.workers.unwrap_or_else(default_workers);
    let brute = || parallel_census(args.genus, group, workers, args.allow_long).map_err(usage);
    let built = || constructive_census(args.genus, group, args.allow_long).map_err(usage);
    let primary = match args.method {
        MethodArg::Brute => brute()?,
        MethodArg::Construct => built()?,
    };
    if args.cross_check && args.genus >= 3 {
        let other = match args.method {
            MethodArg::Brute => built()?,
            MethodArg::Construct => brute()?,
        };
        cross_check(&primary.result, &other.result).map_err(Failure::Check)?;
    }
    eprintln!(
        "genus {}: {} classes, {} labelled, {:.3}s on {} worker(s)",
        primary.result.genus,
        primary.result.count(),
        primary.result.ordered_count,
        primary.elapsed.as_secs_f64(),
        primary.workers
    );
    Ok(primary)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count(args) => {
            let t = census(&args)?;
            let text = match args.format.unwrap_or(Format::Text) {
                Format::Text => format!("{}\n", t.result.count()),
                Format::Csv => summary_csv(&t.result),
                Format::Jsonl => to_jsonl(&t.result),
            };
            emit(&args.output, &text)
        }
        Command::Enumerate(args) => {
            let t = census(&args)?;
            let text = match args.format.unwrap_or(Format::Jsonl) {
                Format::Jsonl => to_jsonl(&t.result),
                Format::Csv => summary_csv(&t.result),
                Format::Text => t
                    .result
                    .classes
                    .iter()
                    .map(|c| format!("{}\n", c.representative().cycle_seq()))
                    .collect(),
            };
            emit(&args.output, &text)
        }
        Command::Verify(args) => {
            let p = parse_perm(&args.perm, args.n)?;
            let r = verify_one(&p, args.group.into());
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut text = format!(
                "permutation: {p}\nsquares: {}\nn-cycle: {}\n",
                r.n,
                yes(r.is_n_cycle)
            );
            if r.is_n_cycle {
                text.push_str(&format!(
                    "vertices: {}\neuler characteristic: {}\ngenus: {}\nstratum: {:?}\n\
                     coherent minimal pair: {}\nvalid via trace: {}\ncanonical diffs: {}\norbit size: {}\n",
                    r.vertex_count,
                    r.euler_char,
                    r.genus,
                    r.stratum,
                    yes(r.coherent_minimal),
                    yes(r.valid_via_trace),
                    r.canonical.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                    r.orbit_size
                ));
            }
            let verdict = if r.coherent_minimal {
                "valid"
            } else {
                "invalid"
            };
            text.push_str(&format!("verdict: {verdict}\n"));
            emit(&args.output, &text)
        }
        Command::Polygon(args) => {
            let o = Origami::new(parse_perm(&args.perm, args.n)?)?;
            let t = origami_to_polygon(&o).map_err(|e| Failure::Check(e.into()))?;
            emit(&args.output, &polygon_dump(&t))
        }
        Command::Menage(args) => {
            if args.n == 0 {
                return Err(usage(anyhow!("--n must be positive")));
            }
            let text = if args.classes {
                let mut text = String::new();
                for c in gilbert_classes(args.n) {
                    if args.exclude_opposite
                        && args.n % 2 == 1
                        && is_all_opposite(&c.representative)?
                    {
                        continue;
                    }
                    let images: Vec<String> = c
                        .representative
                        .perm()
                        .images()
                        .iter()
                        .map(|v| (v + 1).to_string())
                        .collect();
                    text.push_str(&format!("{}\tsize {}\n", images.join(" "), c.size));
                }
                text
            } else if args.exclude_opposite {
                let count = enumerate_menage(args.n)
                    .filter(|p| args.n % 2 == 0 || !is_all_opposite(p).unwrap_or(false))
                    .count();
                format!("{count}\n")
            } else {
                format!("{}\n", menage_number(args.n))
            };
            emit(&args.output, &text)
        }
        Command::Bound(args) => {
            let (lo, hi) = if args.table {
                (3, args.max.expect("clap enforces --max"))
            } else {
                let g = args.genus.expect("clap enforces --genus");
                (g, g)
            };
            if lo < 3 || hi < lo {
                return Err(usage(anyhow!("bounds need genus >= 3")));
            }
            let workers = args.workers.unwrap_or_else(default_workers);
            let reports = bound_table(hi)?;
            let mut rows = Vec::new();
            for b in reports.into_iter().filter(|b| b.genus >= lo) {
                let count = if b.genus <= args.census_up_to
                    && (b.genus < CLI_LONG_GENUS || args.allow_long)
                {
                    let t =
                        parallel_census(b.genus, SymmetryGroup::Mirror, workers, args.allow_long)
                            .map_err(usage)?;
                    Some(t.result.count())
                } else {
                    None
                };
                rows.push((b, count));
            }
            emit(&args.output, &bound_csv(&rows))
        }
        Command::Render(args) => {
            let o = Origami::new(parse_perm(&args.perm, args.n)?)?;
            let text = match args.format {
                RenderFormat::Text => render_text(&o),
                RenderFormat::Svg => render_svg(&o),
            };
            emit(&args.output, &text)
        }
    }
}
