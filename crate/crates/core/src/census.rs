//! Enumeration of minimal filling pairs per genus.
//!
//! The search space is every `n`-cycle with `n = 2g − 1`. Each class has
//! exactly one member whose own difference sequence is canonical, so a scan
//! only keeps those and never needs a shared set. Prefix partitions make the
//! scan trivially parallel; see [`scan_prefix`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::menage::{gilbert_classes, is_all_opposite};
use crate::origami::{is_canonical, vertex_count, Origami, SymmetryGroup};
use crate::perm::{next_permutation, DiffSeq, NCycles, Perm};
use crate::polygon::{construct_from_class, is_valid_pair_via_trace};
use crate::{Error, Result};

/// Smallest genus refused without an explicit override.
pub const LONG_GENUS: u32 = 8;

/// How a census was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Every `n`-cycle tested.
    BruteForce,
    /// Ménage classes pushed through the polygon construction.
    Construction,
}

/// One equivalence class of pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairClass {
    /// Canonical difference sequence; the sort key.
    pub canonical: DiffSeq,
    /// Genus of the surface.
    pub genus: u32,
    /// Number of labelled origamis in the class.
    pub orbit_size: usize,
    /// Zero orders of the vertex, largest first.
    pub stratum: Vec<usize>,
}

impl PairClass {
    /// Builds the class record from its canonical sequence.
    pub fn from_canonical(canonical: DiffSeq, group: SymmetryGroup) -> Self {
        let o = Origami::from_diff_seq(&canonical).expect("canonical forms are cycles");
        let surface = o.surface();
        PairClass {
            orbit_size: orbit_size(canonical.diffs(), group),
            genus: surface.genus,
            stratum: o.stratum(),
            canonical,
        }
    }

    /// The origami whose difference sequence is the canonical one.
    pub fn representative(&self) -> Origami {
        Origami::from_diff_seq(&self.canonical).expect("canonical forms are cycles")
    }

    /// Every labelled origami in the class, sorted.
    pub fn representatives(&self, group: SymmetryGroup) -> Vec<Origami> {
        self.representative()
            .symmetry_orbit(group)
            .into_iter()
            .map(|p| Origami::new(p).expect("orbit of an n-cycle"))
            .collect()
    }
}

/// Orbit size from the difference sequence alone: group order divided by
/// the number of group elements fixing it. Shifts rotate the sequence, the
/// mirror negates it and the flip negates and reverses it.
pub fn orbit_size(d: &[usize], group: SymmetryGroup) -> usize {
    let n = d.len();
    let fixes = |f: &dyn Fn(usize) -> usize| {
        (0..n)
            .filter(|&r| (0..n).all(|k| f((r + k) % n) == d[k]))
            .count()
    };
    let mut stab = fixes(&|i| d[i]) + fixes(&|i| n - d[i]);
    if group == SymmetryGroup::Full {
        stab += fixes(&|i| d[n - 1 - i]) + fixes(&|i| n - d[n - 1 - i]);
    }
    group.order(n) / stab
}

/// The outcome of a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    /// Genus.
    pub genus: u32,
    /// Squares per origami.
    pub n: usize,
    /// Classes sorted by canonical form.
    pub classes: Vec<PairClass>,
    /// How they were found.
    pub method: Method,
    /// Relabelling group used for deduplication.
    pub group: SymmetryGroup,
    /// Labelled origamis accepted (sum of orbit sizes).
    pub ordered_count: u64,
}

impl CensusResult {
    /// Number of classes.
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Builds the result from possibly repeated canonical sequences.
    pub fn from_canonical(
        genus: u32,
        n: usize,
        mut canonical: Vec<DiffSeq>,
        ordered_count: u64,
        method: Method,
        group: SymmetryGroup,
    ) -> Self {
        canonical.sort_unstable();
        canonical.dedup();
        let classes = canonical
            .into_iter()
            .map(|c| PairClass::from_canonical(c, group))
            .collect();
        CensusResult {
            genus,
            n,
            classes,
            method,
            group,
            ordered_count,
        }
    }

    /// Set of canonical forms.
    pub fn canonical_set(&self) -> BTreeSet<DiffSeq> {
        self.classes.iter().map(|c| c.canonical.clone()).collect()
    }
}

/// Partial census over one prefix partition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    /// Accepted labelled origamis.
    pub ordered: u64,
    /// Canonical sequences of the accepted classes met in this partition.
    pub canonical: Vec<DiffSeq>,
}

impl Tally {
    /// Combines two partitions.
    pub fn merge(mut self, other: Tally) -> Tally {
        self.ordered += other.ordered;
        self.canonical.extend(other.canonical);
        self
    }
}

/// Squares for a genus-`g` minimal pair, with the long-run gate applied.
pub fn squares_for_genus(g: u32, allow_long: bool) -> Result<usize> {
    if g < 3 {
        return Err(Error::Genus {
            genus: g,
            reason: "minimal pairs with 2g-1 crossings need g >= 3",
        });
    }
    if g >= LONG_GENUS && !allow_long {
        return Err(Error::Genus {
            genus: g,
            reason: "search space too large without an override",
        });
    }
    Ok(2 * g as usize - 1)
}

/// Scans the `n`-cycles whose cycle notation starts with `prefix`, keeping
/// those with exactly `vertices` vertex classes.
pub fn scan_prefix(
    n: usize,
    prefix: &[usize],
    group: SymmetryGroup,
    vertices: usize,
) -> Result<Tally> {
    let first = NCycles::with_prefix(n, prefix)?
        .next()
        .ok_or(Error::Empty)?;
    let mut entries = first.entries().to_vec();
    let fixed = prefix.len();
    let mut p = vec![0; n];
    let mut inv = vec![0; n];
    let mut diffs = vec![0; n];
    let mut tally = Tally::default();
    loop {
        for k in 0..n {
            let a = entries[k];
            let b = entries[(k + 1) % n];
            p[a] = b;
            inv[b] = a;
        }
        let accept = if vertices == 1 {
            single_vertex(&p, &inv)
        } else {
            vertex_count(&p) == vertices
        };
        if accept {
            tally.ordered += 1;
            for k in 0..n {
                diffs[k] = (entries[(k + 1) % n] + n - entries[k]) % n;
            }
            if is_canonical(&diffs, group) {
                tally
                    .canonical
                    .push(DiffSeq::from_vec_unchecked(diffs.clone()));
            }
        }
        if !next_permutation(&mut entries[fixed..]) {
            break;
        }
    }
    Ok(tally)
}

// one walk around the vertex at square 0's corner covers all n corners
#[inline]
fn single_vertex(p: &[usize], inv: &[usize]) -> bool {
    let n = p.len();
    let mut m = 0;
    for step in 1..=n {
        m = inv[(p[(m + 1) % n] + n - 1) % n];
        if m == 0 {
            return step == n;
        }
    }
    false
}

/// Tests every `n`-cycle for `n = 2g − 1`, sequentially.
pub fn enumerate_brute(g: u32, group: SymmetryGroup, allow_long: bool) -> Result<CensusResult> {
    let n = squares_for_genus(g, allow_long)?;
    let tally = scan_prefix(n, &[0], group, 1)?;
    Ok(CensusResult::from_canonical(
        g,
        n,
        tally.canonical,
        tally.ordered,
        Method::BruteForce,
        group,
    ))
}

/// Pushes every usable ménage class at `n = 2g − 1` through the polygon
/// construction.
pub fn enumerate_constructive(
    g: u32,
    group: SymmetryGroup,
    allow_long: bool,
) -> Result<CensusResult> {
    let n = squares_for_genus(g, allow_long)?;
    let mut canonical = Vec::new();
    for c in gilbert_classes(n) {
        if is_all_opposite(&c.representative)? {
            continue;
        }
        for (_, o) in construct_from_class(&c)? {
            canonical.push(o.canonical_form(group));
        }
    }
    canonical.sort_unstable();
    canonical.dedup();
    let ordered = canonical
        .iter()
        .map(|c| orbit_size(c.diffs(), group) as u64)
        .sum();
    Ok(CensusResult::from_canonical(
        g,
        n,
        canonical,
        ordered,
        Method::Construction,
        group,
    ))
}

/// Genus 2: four squares and two vertex classes (`χ = −2`).
pub fn genus2_census(group: SymmetryGroup) -> CensusResult {
    let tally = scan_prefix(4, &[0], group, 2).expect("valid prefix");
    CensusResult::from_canonical(
        2,
        4,
        tally.canonical,
        tally.ordered,
        Method::BruteForce,
        group,
    )
}

/// Everything known about one gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Squares.
    pub n: usize,
    /// Whether `p` is a single `n`-cycle; the other fields are only
    /// meaningful when it is.
    pub is_n_cycle: bool,
    /// Vertex classes.
    pub vertex_count: usize,
    /// Euler characteristic.
    pub euler_char: i64,
    /// Genus.
    pub genus: u32,
    /// Zero orders.
    pub stratum: Vec<usize>,
    /// Single vertex with `n ≥ 3`.
    pub coherent_minimal: bool,
    /// Polygon trace verdict.
    pub valid_via_trace: bool,
    /// Canonical difference sequence.
    pub canonical: Option<DiffSeq>,
    /// Orbit size under the group.
    pub orbit_size: usize,
}

/// Full diagnostic for one vertical gluing.
pub fn verify_one(p: &Perm, group: SymmetryGroup) -> VerifyReport {
    let n = p.len();
    match Origami::new(p.clone()) {
        Ok(o) => {
            let s = o.surface();
            let canonical = o.canonical_form(group);
            VerifyReport {
                n,
                is_n_cycle: true,
                vertex_count: s.vertex_count,
                euler_char: s.euler_char,
                genus: s.genus,
                stratum: o.stratum(),
                coherent_minimal: o.is_coherent_minimal_pair(),
                valid_via_trace: is_valid_pair_via_trace(&o),
                orbit_size: orbit_size(o.diff_seq().diffs(), group),
                canonical: Some(canonical),
            }
        }
        Err(_) => VerifyReport {
            n,
            is_n_cycle: false,
            vertex_count: 0,
            euler_char: 0,
            genus: 0,
            stratum: Vec::new(),
            coherent_minimal: false,
            valid_via_trace: false,
            canonical: None,
            orbit_size: 0,
        },
    }
}
