//! Parallel census runner, output formats and rendering for the
//! `origami-census` command.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use origami_census_core::bounds::BoundReport;
use origami_census_core::census::{
    enumerate_constructive, genus2_census, scan_prefix, squares_for_genus, CensusResult, Method,
    PairClass, Tally,
};
use origami_census_core::perm::NCycles;
use origami_census_core::polygon::TracedPolygon;
use origami_census_core::{Origami, SymmetryGroup};
use rayon::prelude::*;
use serde::Serialize;

/// Genus from which the command line asks for `--allow-long`.
pub const CLI_LONG_GENUS: u32 = 7;

/// A census with its wall time.
#[derive(Debug, Clone)]
pub struct TimedCensus {
    /// The result.
    pub result: CensusResult,
    /// Wall time of the run.
    pub elapsed: Duration,
    /// Worker threads used.
    pub workers: usize,
}

/// Brute-force census split over prefix partitions on `workers` threads.
/// The result does not depend on `workers`.
pub fn parallel_census(
    genus: u32,
    group: SymmetryGroup,
    workers: usize,
    allow_long: bool,
) -> Result<TimedCensus> {
    let start = Instant::now();
    if genus == 2 {
        return Ok(TimedCensus {
            result: genus2_census(group),
            elapsed: start.elapsed(),
            workers: 1,
        });
    }
    let n = squares_for_genus(genus, allow_long)?;
    let depth = if n > 6 { 3 } else { 1 };
    let prefixes = NCycles::prefixes(n, depth);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .context("building worker pool")?;
    let tallies: Vec<Tally> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|p| scan_prefix(n, p, group, 1))
            .collect::<std::result::Result<_, _>>()
    })?;
    let tally = tallies.into_iter().fold(Tally::default(), Tally::merge);
    let result = CensusResult::from_canonical(
        genus,
        n,
        tally.canonical,
        tally.ordered,
        Method::BruteForce,
        group,
    );
    Ok(TimedCensus {
        result,
        elapsed: start.elapsed(),
        workers: workers.max(1),
    })
}

/// Constructive census, timed.
pub fn constructive_census(
    genus: u32,
    group: SymmetryGroup,
    allow_long: bool,
) -> Result<TimedCensus> {
    let start = Instant::now();
    let result = enumerate_constructive(genus, group, allow_long)?;
    Ok(TimedCensus {
        result,
        elapsed: start.elapsed(),
        workers: 1,
    })
}

/// Fails when the two censuses found different class sets.
pub fn cross_check(a: &CensusResult, b: &CensusResult) -> Result<()> {
    if a.canonical_set() != b.canonical_set() {
        bail!(
            "cross-check failed at genus {}: {} vs {} classes",
            a.genus,
            a.count(),
            b.count()
        );
    }
    Ok(())
}

/// One JSON line per class.
#[derive(Debug, Serialize)]
pub struct ClassRecord<'a> {
    /// Genus.
    pub genus: u32,
    /// Squares.
    pub n: usize,
    /// Canonical difference sequence.
    pub canonical_diffs: &'a [usize],
    /// Labelled origamis in the class.
    pub orbit_size: usize,
    /// Zero orders.
    pub stratum: &'a [usize],
}

impl<'a> ClassRecord<'a> {
    fn new(n: usize, c: &'a PairClass) -> Self {
        ClassRecord {
            genus: c.genus,
            n,
            canonical_diffs: c.canonical.diffs(),
            orbit_size: c.orbit_size,
            stratum: &c.stratum,
        }
    }
}

/// Classes as JSON lines, sorted by canonical form.
pub fn to_jsonl(r: &CensusResult) -> String {
    let mut out = String::new();
    for c in &r.classes {
        out.push_str(&serde_json::to_string(&ClassRecord::new(r.n, c)).expect("plain data"));
        out.push('\n');
    }
    out
}

/// `genus,squares,count,asymptotic_bound` with one row.
pub fn summary_csv(r: &CensusResult) -> String {
    let bound = origami_census_core::bounds::asymptotic_bound(r.genus)
        .map(|b| b.to_string())
        .unwrap_or_default();
    format!(
        "genus,squares,count,asymptotic_bound\n{},{},{},{}\n",
        r.genus,
        r.n,
        r.count(),
        bound
    )
}

/// Bound rows; `count` is left empty where no census was run.
pub fn bound_csv(rows: &[(BoundReport, Option<usize>)]) -> String {
    let mut out = String::from(
        "genus,squares,count,asymptotic_bound,exact_bound,exact_bound_excl_opposite\n",
    );
    for (b, count) in rows {
        let count = count.map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            b.genus, b.squares, count, b.asymptotic, b.exact_bound, b.exact_bound_excl
        );
    }
    out
}

/// `slot_index curve label direction`, one line per side.
pub fn polygon_dump(t: &TracedPolygon) -> String {
    let mut out = String::new();
    for s in t.sides() {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            s.index,
            s.curve,
            s.label,
            s.direction.symbol()
        );
    }
    out
}

/// A row of cells with each top-gluing target written above its cell.
pub fn render_text(o: &Origami) -> String {
    let n = o.squares();
    let p = o.vertical();
    let width = n.to_string().len() + 2;
    let mut top = String::from("p(i) ");
    let mut rule = String::from("     +");
    let mut cells = String::from("  i  |");
    for i in 0..n {
        let _ = write!(top, "{:^w$} ", p.apply(i) + 1, w = width);
        rule.push_str(&"-".repeat(width));
        rule.push('+');
        let _ = write!(cells, "{:^w$}|", i + 1, w = width);
    }
    format!("{}\n{rule}\n{cells}\n{rule}\n", top.trim_end())
}

/// The same row as SVG, with an arrow from each cell's top to its target label.
pub fn render_svg(o: &Origami) -> String {
    let n = o.squares();
    let p = o.vertical();
    let cell = 40;
    let (w, h) = (cell * n + 20, 2 * cell + 40);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    out.push_str(concat!(
        r#"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" "#,
        r#"markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#,
        "\n"
    ));
    for i in 0..n {
        let x = 10 + cell * i;
        let y = cell + 20;
        let cx = x + cell / 2;
        let _ = writeln!(
            out,
            r#"  <rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"  <text x="{cx}" y="{}" text-anchor="middle">{}</text>"#,
            y + cell / 2 + 5,
            i + 1
        );
        let _ = writeln!(
            out,
            r#"  <line x1="{cx}" y1="{y}" x2="{cx}" y2="{}" stroke="gray" marker-end="url(#arrow)"/>"#,
            y - 18
        );
        let _ = writeln!(
            out,
            r#"  <text x="{cx}" y="{}" text-anchor="middle">{}</text>"#,
            y - 22,
            p.apply(i) + 1
        );
    }
    out.push_str("</svg>\n");
    out
}
