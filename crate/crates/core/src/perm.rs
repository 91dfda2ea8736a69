//! Permutations of `0..n`, single-cycle notation and difference sequences.
//!
//! Indices are 0-based internally. The textual form is the 1-based cycle
//! notation `(1 2 5 3 4)`, each cycle starting at its smallest element.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A permutation of `0..n`, stored by images: `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image list, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotABijection { n });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// The rotation `i ↦ i + a (mod n)`. With `a = 1` this is the standard
    /// horizontal gluing `h` of a `[1,1]`-origami.
    pub fn rotation(n: usize, a: usize) -> Self {
        Perm {
            images: (0..n).map(|i| (i + a) % n).collect(),
        }
    }

    /// Number of points acted on.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    /// Always false; a permutation acts on at least one point.
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// The image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        self.check_size(other)?;
        Ok(Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// The commutator `a ∘ b ∘ a⁻¹ ∘ b⁻¹`.
    pub fn commutator(a: &Perm, b: &Perm) -> Result<Perm> {
        a.check_size(b)?;
        let (ai, bi) = (a.inverse(), b.inverse());
        Ok(Perm {
            images: (0..a.len())
                .map(|i| a.apply(b.apply(ai.apply(bi.apply(i)))))
                .collect(),
        })
    }

    /// `c⁻¹ ∘ self ∘ c`.
    pub fn conjugate_by(&self, c: &Perm) -> Result<Perm> {
        self.check_size(c)?;
        let ci = c.inverse();
        Ok(Perm {
            images: (0..self.len())
                .map(|i| ci.apply(self.apply(c.apply(i))))
                .collect(),
        })
    }

    /// Disjoint cycles, each listed from its minimal element, sorted by that
    /// element. Fixed points appear as cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of disjoint cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        count
    }

    /// Whether this is a single cycle through all `n` points.
    pub fn is_n_cycle(&self) -> bool {
        let n = self.len();
        let mut i = 0;
        for step in 1..=n {
            i = self.images[i];
            if i == 0 {
                return step == n;
            }
        }
        false
    }

    /// Cycle notation of an `n`-cycle, starting at 0.
    pub fn to_cycle_seq(&self) -> Result<CycleSeq> {
        if !self.is_n_cycle() {
            return Err(Error::NotAnNCycle { n: self.len() });
        }
        let mut entries = Vec::with_capacity(self.len());
        let mut i = 0;
        for _ in 0..self.len() {
            entries.push(i);
            i = self.images[i];
        }
        Ok(CycleSeq { entries })
    }

    /// Parses 1-based cycle notation such as `(1 2 5 3 4)` or `(1 2)(3 4 5)`
    /// into a permutation of `0..n`. Points not mentioned are fixed.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let cycles = parse_cycle_groups(text)?;
        let mut images: Vec<Option<usize>> = vec![None; n];
        for cycle in &cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::Parse(alloc::format!("entry {v} outside 1..={n}")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > n || images[v - 1].is_some() {
                    return Err(Error::NotABijection { n });
                }
                images[v - 1] = Some(next - 1);
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.unwrap_or(i))
            .collect();
        Perm::from_images(images)
    }

    fn check_size(&self, other: &Perm) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

fn parse_cycle_groups(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    let mut out = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(alloc::format!("expected '(' in {text:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(alloc::format!("unclosed '(' in {text:?}")))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(Error::Parse("empty cycle".to_string()));
        }
        out.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write_cycle(f, &cycle)?;
        }
        Ok(())
    }
}

fn write_cycle(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in entries.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", v + 1)?;
    }
    f.write_str(")")
}

/// An `n`-cycle in cycle notation `(a_0 a_1 … a_{n−1})` with `a_0 = 0`,
/// sending `a_i ↦ a_{i+1 mod n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSeq {
    entries: Vec<usize>,
}

impl CycleSeq {
    /// Builds a cycle from entries, rotating it to start at 0.
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        Perm::from_images(entries.clone())?;
        let zero = entries.iter().position(|&v| v == 0).unwrap_or(0);
        entries.rotate_left(zero);
        Ok(CycleSeq { entries })
    }

    /// The entries, starting with 0.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The permutation this cycle describes.
    pub fn to_perm(&self) -> Perm {
        let n = self.len();
        let mut images = vec![0; n];
        for k in 0..n {
            images[self.entries[k]] = self.entries[(k + 1) % n];
        }
        Perm { images }
    }

    /// Consecutive differences `a_{i+1} − a_i (mod n)`.
    pub fn to_diff_seq(&self) -> DiffSeq {
        let n = self.len();
        DiffSeq {
            diffs: (0..n)
                .map(|k| (self.entries[(k + 1) % n] + n - self.entries[k]) % n)
                .collect(),
        }
    }
}

impl fmt::Display for CycleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycle(f, &self.entries)
    }
}

impl FromStr for CycleSeq {
    type Err = Error;

    /// Parses a single 1-based cycle; its length fixes `n`.
    fn from_str(s: &str) -> Result<Self> {
        let groups = parse_cycle_groups(s)?;
        if groups.len() != 1 {
            return Err(Error::Parse(alloc::format!(
                "expected a single cycle, found {}",
                groups.len()
            )));
        }
        let n = groups[0].len();
        let entries = groups[0]
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .filter(|&v| v < n)
                    .ok_or_else(|| Error::Parse(alloc::format!("entry {v} outside 1..={n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleSeq::new(entries).map_err(|_| Error::NotABijection { n })
    }
}

/// The cyclic sequence of consecutive differences of an `n`-cycle.
///
/// Adding a constant to every cycle entry leaves it unchanged, which makes
/// it the natural key for relabelling-invariant comparisons.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffSeq {
    diffs: Vec<usize>,
}

impl DiffSeq {
    /// Validates a difference sequence: no zero step, distinct partial sums,
    /// total `≡ 0 (mod n)`.
    pub fn new(diffs: Vec<usize>) -> Result<Self> {
        let d = DiffSeq { diffs };
        d.to_cycle_seq()?;
        Ok(d)
    }

    pub(crate) fn from_vec_unchecked(diffs: Vec<usize>) -> Self {
        DiffSeq { diffs }
    }

    /// The modulus `n`, equal to the length.
    pub fn modulus(&self) -> usize {
        self.diffs.len()
    }

    /// The differences, each in `1..n`.
    pub fn diffs(&self) -> &[usize] {
        &self.diffs
    }

    /// Integrates the differences from 0, rejecting anything that is not an
    /// `n`-cycle.
    pub fn to_cycle_seq(&self) -> Result<CycleSeq> {
        let n = self.modulus();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n];
        let mut entries = Vec::with_capacity(n);
        let mut acc = 0usize;
        for &d in &self.diffs {
            if d == 0 || d >= n || seen[acc] {
                return Err(Error::NotACycleDiff);
            }
            seen[acc] = true;
            entries.push(acc);
            acc = (acc + d) % n;
        }
        if acc != 0 {
            return Err(Error::NotACycleDiff);
        }
        Ok(CycleSeq { entries })
    }

    /// `−d (mod n)` termwise.
    pub fn negated(&self) -> DiffSeq {
        let n = self.modulus();
        DiffSeq {
            diffs: self.diffs.iter().map(|&d| (n - d) % n).collect(),
        }
    }

    /// The sequence read backwards.
    pub fn reversed(&self) -> DiffSeq {
        let mut diffs = self.diffs.clone();
        diffs.reverse();
        DiffSeq { diffs }
    }

    /// Lexicographically least cyclic rotation.
    pub fn min_rotation(&self) -> DiffSeq {
        let n = self.modulus();
        let mut best = self.diffs.clone();
        let mut buf = self.diffs.clone();
        for _ in 1..n {
            buf.rotate_left(1);
            if buf < best {
                best.copy_from_slice(&buf);
            }
        }
        DiffSeq { diffs: best }
    }
}

impl fmt::Display for DiffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.diffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Iterator over all `(n − 1)!` `n`-cycles, in lexicographic order of the
/// entries following the fixed `a_0 = 0`.
///
/// A fixed prefix restricts the stream to one partition; the partitions for
/// all prefixes of a given depth tile the full stream in order.
#[derive(Debug, Clone)]
pub struct NCycles {
    entries: Vec<usize>,
    fixed: usize,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl NCycles {
    /// All `n`-cycles on `0..n`.
    pub fn new(n: usize) -> Self {
        NCycles::with_prefix(n, &[0]).expect("[0] is a valid prefix")
    }

    /// The `n`-cycles whose cycle notation starts with `prefix` (which must
    /// begin with 0 and have distinct entries below `n`).
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if prefix.first() != Some(&0) || prefix.len() > n {
            return Err(Error::Parse("prefix must start with 0".to_string()));
        }
        let mut used = vec![false; n];
        for &v in prefix {
            if v >= n || used[v] {
                return Err(Error::NotABijection { n });
            }
            used[v] = true;
        }
        let mut entries = prefix.to_vec();
        entries.extend((0..n).filter(|&v| !used[v]));
        Ok(NCycles {
            entries,
            fixed: prefix.len(),
            state: IterState::Fresh,
        })
    }

    /// All valid prefixes of the given depth (including the leading 0), in
    /// lexicographic order.
    pub fn prefixes(n: usize, depth: usize) -> Vec<Vec<usize>> {
        let depth = depth.clamp(1, n.max(1));
        let mut out = Vec::new();
        let mut cur = vec![0usize];
        let mut used = vec![false; n];
        if n > 0 {
            used[0] = true;
        }
        fn rec(
            n: usize,
            depth: usize,
            cur: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == depth {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, depth, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        if n > 0 {
            rec(n, depth, &mut cur, &mut used, &mut out);
        }
        out
    }
}

impl Iterator for NCycles {
    type Item = CycleSeq;

    fn next(&mut self) -> Option<CycleSeq> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !next_permutation(&mut self.entries[self.fixed..]) {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(CycleSeq {
            entries: self.entries.clone(),
        })
    }
}

/// Advances `s` to its lexicographic successor; false when `s` was the last.
pub(crate) fn next_permutation(s: &mut [usize]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize) -> Perm {
        Perm::rotation(n, 1)
    }

    fn cyc(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = cyc("(1 3)(2 4 5)", 5);
        assert_eq!(Perm::identity(5).compose(&q).unwrap(), q);
        assert_eq!(h(3).compose(&h(3)).unwrap().images(), &[2, 0, 1]);
        assert_eq!(q.compose(&q.inverse()).unwrap(), Perm::identity(5));
        assert_eq!(
            h(3).compose(&h(4)),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_reverses_cycle_notation() {
        assert_eq!(Perm::identity(4).inverse(), Perm::identity(4));
        let p = cyc("(1 2 5 3 4)", 5);
        assert_eq!(p.inverse(), cyc("(1 4 3 5 2)", 5));
        assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(Perm::commutator(&h(5), &h(5)).unwrap(), Perm::identity(5));
        let c = Perm::commutator(&h(5), &cyc("(1 2 5 3 4)", 5)).unwrap();
        assert_eq!(c.cycle_count(), 1);
        assert_eq!(
            Perm::commutator(&h(3), &h(3).inverse()).unwrap(),
            Perm::identity(3)
        );
    }

    #[test]
    fn cycles_are_normalized() {
        assert_eq!(Perm::identity(4).cycles().len(), 4);
        assert_eq!(h(6).cycles(), vec![vec![0, 1, 2, 3, 4, 5]]);
        let p = Perm::from_images(vec![2, 4, 0, 3, 1]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(p.to_string(), "(1 3)(2 5)(4)");
    }

    #[test]
    fn n_cycle_counts() {
        assert_eq!(NCycles::new(3).count(), 2);
        assert_eq!(NCycles::new(4).count(), 6);
        assert_eq!(NCycles::new(5).count(), 24);
        let mut fact = 1;
        for n in 1..=8 {
            if n > 1 {
                fact *= n - 1;
            }
            assert_eq!(NCycles::new(n).count(), fact, "n = {n}");
        }
    }

    #[test]
    fn n_cycles_are_lexicographic_and_partitioned() {
        let all: Vec<_> = NCycles::new(6).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let glued: Vec<_> = NCycles::prefixes(6, 3)
            .iter()
            .flat_map(|p| NCycles::with_prefix(6, p).unwrap())
            .collect();
        assert_eq!(glued, all);
        for c in &all {
            assert!(c.to_perm().is_n_cycle());
        }
    }

    #[test]
    fn difference_sequence_examples() {
        let c: CycleSeq = "(1 2 5 3 4)".parse().unwrap();
        assert_eq!(c.to_diff_seq().diffs(), &[1, 3, 3, 1, 2]);
        let c: CycleSeq = "(1 5 2 4 3)".parse().unwrap();
        assert_eq!(c.to_diff_seq().diffs(), &[4, 2, 2, 4, 3]);
        let std = h(7).to_cycle_seq().unwrap();
        assert_eq!(std.to_diff_seq().diffs(), &[1; 7]);
    }

    #[test]
    fn diff_seq_rejects_collisions() {
        assert_eq!(DiffSeq::new(vec![1, 1, 1, 1]).unwrap().modulus(), 4);
        assert_eq!(DiffSeq::new(vec![2, 2, 2, 2]), Err(Error::NotACycleDiff));
        assert_eq!(DiffSeq::new(vec![1, 0, 2]), Err(Error::NotACycleDiff));
        assert_eq!(DiffSeq::new(vec![1, 1, 2]), Err(Error::NotACycleDiff));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse_cycles("(1 2 2 3 4)", 5).is_err());
        assert!(Perm::parse_cycles("(1 2 6)", 5).is_err());
        assert!(Perm::parse_cycles("1 2 3", 3).is_err());
        assert!(Perm::parse_cycles("(1 2", 3).is_err());
        assert!("(1 2)(3)".parse::<CycleSeq>().is_err());
        assert_eq!(
            Perm::parse_cycles("(2 3)", 4).unwrap().images(),
            &[0, 2, 1, 3]
        );
    }

    #[test]
    fn cycle_seq_display_round_trips() {
        let c: CycleSeq = "(3 4 1 2 5)".parse().unwrap();
        assert_eq!(c.to_string(), "(1 2 5 3 4)");
        assert_eq!(c.to_perm().to_cycle_seq().unwrap(), c);
    }
}
