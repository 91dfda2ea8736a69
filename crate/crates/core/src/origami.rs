//! `[1,1]`-origamis: `n` unit squares, square `i` glued on its right to
//! square `i + 1 (mod n)` and on its top to the bottom of square `p(i)`,
//! with `p` a single `n`-cycle.
//!
//! The horizontal and vertical core curves of such an origami are a coherent
//! filling pair crossing once per square. The pair is minimally intersecting
//! exactly when all square corners are identified to a single vertex.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{CycleSeq, DiffSeq, Perm};
use crate::{Error, Result};

/// Relabelling group used to identify origamis describing the same pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SymmetryGroup {
    /// Shifts along the horizontal annulus together with the left–right
    /// mirror: order `2n`, acting freely on minimal pairs. Counting orbits of
    /// this group gives the class counts 1, 8, 436, 23904, … for g = 3, 4, 5, 6.
    #[default]
    Mirror,
    /// Shifts, the left–right mirror and the top–bottom flip: order `4n`.
    Full,
}

impl SymmetryGroup {
    /// Group order for origamis with `n` squares.
    pub fn order(self, n: usize) -> usize {
        match self {
            SymmetryGroup::Mirror => 2 * n,
            SymmetryGroup::Full => 4 * n,
        }
    }
}

/// Vertex data of an origami.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceData {
    /// Number of vertex classes `V`.
    pub vertex_count: usize,
    /// Number of squares around each vertex, largest first. Sums to `n`.
    pub cone_orders: Vec<usize>,
    /// `χ = V − n` (`2n` edges, `n` faces).
    pub euler_char: i64,
    /// `g = (2 − χ) / 2`.
    pub genus: u32,
}

/// A `[1,1]`-origami given by its vertical gluing permutation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Origami {
    p: Perm,
}

impl Origami {
    /// Wraps a vertical gluing, which must be a single `n`-cycle.
    pub fn new(p: Perm) -> Result<Self> {
        if !p.is_n_cycle() {
            return Err(Error::NotAnNCycle { n: p.len() });
        }
        Ok(Origami { p })
    }

    /// Parses a single 1-based cycle such as `(1 2 5 3 4)`.
    pub fn from_cycle_notation(text: &str) -> Result<Self> {
        let c: CycleSeq = text.parse()?;
        Ok(Origami { p: c.to_perm() })
    }

    /// Builds the origami whose vertical cycle has this difference sequence.
    pub fn from_diff_seq(d: &DiffSeq) -> Result<Self> {
        Ok(Origami {
            p: d.to_cycle_seq()?.to_perm(),
        })
    }

    /// Number of squares.
    pub fn squares(&self) -> usize {
        self.p.len()
    }

    /// Vertical gluing: the top of square `i` meets the bottom of `p(i)`.
    pub fn vertical(&self) -> &Perm {
        &self.p
    }

    /// Horizontal gluing `i ↦ i + 1`.
    pub fn horizontal(&self) -> Perm {
        Perm::rotation(self.squares(), 1)
    }

    /// Cycle notation of the vertical gluing.
    pub fn cycle_seq(&self) -> CycleSeq {
        self.p
            .to_cycle_seq()
            .expect("vertical gluing is an n-cycle")
    }

    /// Difference sequence of the vertical cycle.
    pub fn diff_seq(&self) -> DiffSeq {
        self.cycle_seq().to_diff_seq()
    }

    /// Vertex classes are the cycles of the commutator `[h, p]`.
    pub fn surface(&self) -> SurfaceData {
        let comm = Perm::commutator(&self.horizontal(), &self.p).expect("same size");
        let mut cone_orders: Vec<usize> = comm.cycles().iter().map(Vec::len).collect();
        cone_orders.sort_unstable_by(|a, b| b.cmp(a));
        let vertex_count = cone_orders.len();
        let euler_char = vertex_count as i64 - self.squares() as i64;
        SurfaceData {
            vertex_count,
            cone_orders,
            euler_char,
            genus: ((2 - euler_char) / 2) as u32,
        }
    }

    /// Zero orders of the induced abelian differential, largest first.
    pub fn stratum(&self) -> Vec<usize> {
        self.surface()
            .cone_orders
            .into_iter()
            .filter(|&l| l > 1)
            .map(|l| l - 1)
            .collect()
    }

    /// Whether the core curves form a coherent minimally intersecting filling
    /// pair for `g ≥ 3`: a single vertex class, hence one complementary disk.
    pub fn is_coherent_minimal_pair(&self) -> bool {
        self.squares() >= 3 && vertex_count(self.p.images()) == 1
    }

    /// Relabels squares along the horizontal annulus: `p ↦ h⁻¹ p h`.
    pub fn shift(&self) -> Origami {
        let n = self.squares();
        let images = (0..n).map(|i| (self.p.apply((i + 1) % n) + n - 1) % n);
        Origami {
            p: Perm::from_images_unchecked(images.collect()),
        }
    }

    /// Left–right reflection, renormalised so `h` stays standard:
    /// `p ↦ r p r⁻¹` with `r(i) = −i`.
    pub fn mirror_h(&self) -> Origami {
        let n = self.squares();
        let images = (0..n).map(|i| (n - self.p.apply((n - i) % n)) % n);
        Origami {
            p: Perm::from_images_unchecked(images.collect()),
        }
    }

    /// Top–bottom reflection: `p ↦ p⁻¹`.
    pub fn flip_v(&self) -> Origami {
        Origami {
            p: self.p.inverse(),
        }
    }

    /// Orbit of the vertical gluing under the chosen relabelling group.
    pub fn symmetry_orbit(&self, group: SymmetryGroup) -> BTreeSet<Perm> {
        let mut orbit = BTreeSet::new();
        let mut frontier = vec![self.clone()];
        orbit.insert(self.p.clone());
        while let Some(o) = frontier.pop() {
            let mut next = vec![o.shift(), o.mirror_h()];
            if group == SymmetryGroup::Full {
                next.push(o.flip_v());
            }
            for m in next {
                if orbit.insert(m.p.clone()) {
                    frontier.push(m);
                }
            }
        }
        orbit
    }

    /// Lexicographically least difference sequence over the orbit; equal
    /// exactly for equivalent origamis.
    pub fn canonical_form(&self, group: SymmetryGroup) -> DiffSeq {
        canonical_diffs(&self.diff_seq(), group)
    }
}

/// Least rotation over `d` and `−d` (and, for the full group, the reversed
/// sequences too).
pub fn canonical_diffs(d: &DiffSeq, group: SymmetryGroup) -> DiffSeq {
    let mut candidates = vec![d.clone(), d.negated()];
    if group == SymmetryGroup::Full {
        candidates.push(d.reversed());
        candidates.push(d.negated().reversed());
    }
    candidates
        .iter()
        .map(DiffSeq::min_rotation)
        .min()
        .expect("non-empty candidate set")
}

/// Whether `diffs` is already the canonical form of its class.
///
/// Used by the census hot loop: every class contains exactly one `n`-cycle
/// whose own difference sequence is canonical.
pub(crate) fn is_canonical(diffs: &[usize], group: SymmetryGroup) -> bool {
    let n = diffs.len();
    if rotation_below(diffs, |i| diffs[i]) || rotation_below(diffs, |i| n - diffs[i]) {
        return false;
    }
    if group == SymmetryGroup::Full
        && (rotation_below(diffs, |i| diffs[n - 1 - i])
            || rotation_below(diffs, |i| n - diffs[n - 1 - i]))
    {
        return false;
    }
    true
}

// Some rotation of the sequence `i ↦ cand(i)` is strictly below `target`.
#[inline]
fn rotation_below(target: &[usize], cand: impl Fn(usize) -> usize) -> bool {
    let n = target.len();
    (0..n).any(|r| {
        for (k, &t) in target.iter().enumerate() {
            let c = cand((r + k) % n);
            if c != t {
                return c < t;
            }
        }
        false
    })
}

/// Number of cycles of `[h, p]` computed directly from the images of `p`.
pub(crate) fn vertex_count(p: &[usize]) -> usize {
    let n = p.len();
    let mut inv = vec![0; n];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut m = start;
        while !seen[m] {
            seen[m] = true;
            // walk once around a vertex: right, up, left, down
            m = inv[(p[(m + 1) % n] + n - 1) % n];
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Origami {
        Origami::from_cycle_notation(s).unwrap()
    }

    fn torus(n: usize) -> Origami {
        Origami::new(Perm::rotation(n, 1)).unwrap()
    }

    #[test]
    fn rejects_multi_cycle_gluing() {
        let p = Perm::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
        assert_eq!(Origami::new(p), Err(Error::NotAnNCycle { n: 5 }));
    }

    #[test]
    fn torus_data() {
        for n in 1..8 {
            let s = torus(n).surface();
            assert_eq!((s.vertex_count, s.euler_char, s.genus), (n, 0, 1));
            assert!(torus(n).stratum().is_empty());
        }
        assert!(!torus(5).is_coherent_minimal_pair());
    }

    #[test]
    fn genus_three_example() {
        let g3 = o("(1 2 5 3 4)");
        let s = g3.surface();
        assert_eq!((s.vertex_count, s.euler_char, s.genus), (1, -4, 3));
        assert_eq!(s.cone_orders, vec![5]);
        assert_eq!(g3.stratum(), vec![4]);
        assert!(g3.is_coherent_minimal_pair());
    }

    #[test]
    fn genus_two_four_squares() {
        let mut strata = Vec::new();
        for c in crate::perm::NCycles::new(4) {
            let org = Origami::new(c.to_perm()).unwrap();
            let s = org.surface();
            let is_torus =
                c.to_perm() == Perm::rotation(4, 1) || c.to_perm() == Perm::rotation(4, 3);
            if is_torus {
                assert_eq!(s.genus, 1);
            } else {
                assert_eq!((s.vertex_count, s.euler_char, s.genus), (2, -2, 2));
                strata.push(org.stratum());
            }
        }
        assert_eq!(strata.len(), 4);
        // cone orders (3, 1): one double zero plus a marked point
        assert!(strata.iter().all(|z| z == &vec![2]));
    }

    #[test]
    fn genus_five_examples() {
        assert!(o("(1 3 9 7 6 8 5 4 2)").is_coherent_minimal_pair());
        assert!(o("(1 2 4 5 8 6 7 9 3)").is_coherent_minimal_pair());
        // The second cycle with its last three entries rotated: three vertex classes.
        let rotated_tail = o("(1 2 4 5 8 6 3 7 9)");
        assert!(!rotated_tail.is_coherent_minimal_pair());
        assert_eq!(rotated_tail.surface().vertex_count, 3);
        assert_eq!(rotated_tail.surface().genus, 4);
    }

    #[test]
    fn symmetries() {
        let g3 = o("(1 2 5 3 4)");
        assert_eq!(
            g3.shift().diff_seq().min_rotation(),
            g3.diff_seq().min_rotation()
        );
        assert_eq!(
            g3.mirror_h().diff_seq().min_rotation(),
            o("(1 5 2 4 3)").diff_seq().min_rotation()
        );
        assert_eq!(g3.flip_v().flip_v(), g3);
        assert_eq!(g3.mirror_h().mirror_h(), g3);
        let mut s = g3.clone();
        for _ in 0..5 {
            s = s.shift();
        }
        assert_eq!(s, g3);
    }

    #[test]
    fn orbits() {
        let g3 = o("(1 2 5 3 4)");
        for group in [SymmetryGroup::Mirror, SymmetryGroup::Full] {
            let orbit = g3.symmetry_orbit(group);
            assert_eq!(orbit.len(), 10);
            for q in &orbit {
                let other = Origami::new(q.clone()).unwrap();
                assert_eq!(other.symmetry_orbit(group), orbit);
                assert_eq!(other.canonical_form(group), g3.canonical_form(group));
            }
        }
        let t = torus(5);
        let orbit = t.symmetry_orbit(SymmetryGroup::Full);
        let expect: BTreeSet<_> = [Perm::rotation(5, 1), Perm::rotation(5, 4)]
            .into_iter()
            .collect();
        assert_eq!(orbit, expect);
    }

    #[test]
    fn canonical_form_examples() {
        for group in [SymmetryGroup::Mirror, SymmetryGroup::Full] {
            assert_eq!(
                o("(1 2 5 3 4)").canonical_form(group),
                o("(1 5 2 4 3)").canonical_form(group)
            );
        }
        assert_ne!(
            o("(1 2 4 5 8 6 7 9 3)").canonical_form(SymmetryGroup::Mirror),
            o("(1 3 9 7 6 8 5 4 2)").canonical_form(SymmetryGroup::Mirror)
        );
        // they are top-bottom flips of each other
        assert_eq!(
            o("(1 2 4 5 8 6 7 9 3)").canonical_form(SymmetryGroup::Full),
            o("(1 3 9 7 6 8 5 4 2)").canonical_form(SymmetryGroup::Full)
        );
    }

    #[test]
    fn is_canonical_matches_canonical_diffs() {
        for group in [SymmetryGroup::Mirror, SymmetryGroup::Full] {
            for c in crate::perm::NCycles::new(7) {
                let d = c.to_diff_seq();
                let canon = canonical_diffs(&d, group);
                assert_eq!(is_canonical(d.diffs(), group), canon == d);
            }
        }
    }
}
