//! The complementary `4n`-gon of a minimal filling pair.
//!
//! Cutting the surface along `α ∪ β` leaves one disk whose boundary
//! alternates `α`-sides and `β`-sides. The `2n` `α`-sides are indexed
//! clockwise from `0`. Even slots hold the lower copy of an `α`-arc
//! ("white", traversed `−`), odd slots the upper copy ("black", `+`). The
//! `β`-side `B_s` sits between `α`-slots `s` and `s + 1`.
//!
//! White seat `i` is slot `2i`, black seat `j` is slot `2j − 1`, so a
//! ménage permutation `P` glues slot `2i` to slot `2P(i) − 1`; the seating
//! constraint says exactly that no two adjacent sides are glued.
//!
//! Gluing upper slot `u` to lower slot `w` forces
//! `label(B_{u−1}) = label(B_w) + 1` and `label(B_u) = label(B_{w−1}) + 1`.
//! The `β`-sides after lower copies form the fixed chain (seeded with label
//! `1` at `B_0`), the ones after upper copies form the symbolic chain
//! (seeded with `x` at `B_{2n−1}`).

use alloc::vec;
use alloc::vec::Vec;

use crate::menage::{enumerate_menage, GilbertClass, MenagePerm};
use crate::origami::{vertex_count, Origami};
use crate::perm::Perm;
use crate::{Error, Result};

/// Cyclic distance between 1-based `α`-slots `i` and `j` of a `2n`-slot
/// boundary: `min(|i − j|, 2n − |i − j|)`.
pub fn distance(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == j || i == 0 || j == 0 || i > 2 * n || j > 2 * n {
        return Err(Error::InvalidSlot { i, j, n });
    }
    let d = i.abs_diff(j);
    Ok(d.min(2 * n - d))
}

/// Traversal direction of a polygon side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Clockwise.
    Plus,
    /// Counterclockwise.
    Minus,
}

impl Direction {
    /// `'+'` or `'-'`.
    pub fn symbol(self) -> char {
        match self {
            Direction::Plus => '+',
            Direction::Minus => '-',
        }
    }
}

/// A perfect matching of the `2n` `α`-slots, each lower copy glued to an
/// upper copy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonMatching {
    labels: Vec<usize>,
    partner: Vec<usize>,
}

impl PolygonMatching {
    /// The matching gluing white seat `i` to black seat `P(i)`. Arc labels
    /// are numbered by first appearance clockwise from slot `0`.
    pub fn from_menage(p: &MenagePerm) -> Result<Self> {
        let n = p.len();
        if n.is_multiple_of(2) {
            return Err(Error::EvenArcCount { n });
        }
        if crate::menage::is_all_opposite(p)? {
            return Err(Error::AllOpposite);
        }
        Ok(Self::from_menage_unchecked(p))
    }

    fn from_menage_unchecked(p: &MenagePerm) -> Self {
        let n = p.len();
        let mut partner = vec![0; 2 * n];
        for i in 0..n {
            let black = (2 * p.apply(i) + 2 * n - 1) % (2 * n);
            partner[2 * i] = black;
            partner[black] = 2 * i;
        }
        let mut labels = vec![usize::MAX; 2 * n];
        let mut next = 0;
        for s in 0..2 * n {
            if labels[s] == usize::MAX {
                labels[s] = next;
                labels[partner[s]] = next;
                next += 1;
            }
        }
        PolygonMatching { labels, partner }
    }

    /// Reads a boundary word of 1-based arc labels, e.g. `[1,2,3,4,5,1,4,5,2,3]`.
    /// Each label must occur twice, once on an even and once on an odd slot.
    pub fn from_labels(word: &[usize]) -> Result<Self> {
        if word.is_empty() || word.len() % 2 == 1 {
            return Err(Error::InvalidMatching(
                "boundary word must have even length",
            ));
        }
        let n = word.len() / 2;
        let mut first = vec![usize::MAX; n];
        let mut partner = vec![usize::MAX; 2 * n];
        for (s, &l) in word.iter().enumerate() {
            if l == 0 || l > n {
                return Err(Error::InvalidMatching("label out of range"));
            }
            let f = first[l - 1];
            if f == usize::MAX {
                first[l - 1] = s;
            } else if partner[f] != usize::MAX {
                return Err(Error::InvalidMatching("label used more than twice"));
            } else if f % 2 == s % 2 {
                return Err(Error::InvalidMatching("both copies on the same side of α"));
            } else {
                partner[f] = s;
                partner[s] = f;
            }
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidMatching("label used only once"));
        }
        Ok(PolygonMatching {
            labels: word.iter().map(|l| l - 1).collect(),
            partner,
        })
    }

    /// Number of `α`-arcs.
    pub fn arcs(&self) -> usize {
        self.labels.len() / 2
    }

    /// 1-based arc label per slot.
    pub fn labels(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l + 1).collect()
    }

    /// The slot glued to slot `s` (0-based).
    pub fn partner(&self, s: usize) -> usize {
        self.partner[s]
    }

    /// Direction of `α`-slot `s`: lower copies `−`, upper copies `+`.
    pub fn direction(s: usize) -> Direction {
        if s.is_multiple_of(2) {
            Direction::Minus
        } else {
            Direction::Plus
        }
    }

    /// Glued distances, one per white seat in seat order.
    pub fn distances(&self) -> Vec<usize> {
        let n = self.arcs();
        (0..n)
            .map(|i| {
                let d = (2 * i).abs_diff(self.partner[2 * i]);
                d.min(2 * n - d)
            })
            .collect()
    }

    /// The seating `i ↦ j` with white `i` glued to black `j`.
    pub fn to_menage(&self) -> Perm {
        let n = self.arcs();
        let images = (0..n)
            .map(|i| self.partner[2 * i].div_ceil(2) % n)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Distance checks: every glued distance is odd, none is `1`,
    /// and they are not all `n`.
    pub fn check_distances(&self) -> DistanceReport {
        let d = self.distances();
        let n = self.arcs();
        DistanceReport {
            all_odd: d.iter().all(|x| x % 2 == 1),
            none_adjacent: d.iter().all(|&x| x != 1),
            not_all_opposite: d.iter().any(|&x| x != n),
        }
    }

    /// Whether the two matchings agree after turning the polygon by an even
    /// number of slots.
    pub fn equivalent_under_rotation(&self, other: &PolygonMatching) -> bool {
        let n = self.arcs();
        if other.arcs() != n {
            return false;
        }
        (0..n).any(|k| {
            let shift = 2 * k;
            (0..2 * n).all(|s| {
                let t = (s + shift) % (2 * n);
                other.partner[t] == (self.partner[s] + shift) % (2 * n)
            })
        })
    }

    /// Forces the `β`-labels implied by the gluing.
    pub fn propagate_beta_labels(&self) -> Result<BetaLabeling> {
        let n = self.arcs();
        let total = 2 * n;
        let mut next = vec![usize::MAX; total];
        for u in (1..total).step_by(2) {
            let w = self.partner[u];
            next[(w + total - 1) % total] = u;
            next[w] = (u + total - 1) % total;
        }
        // label along `next` grows by one; each chain must close after n sides
        let walk = |start: usize| -> Result<Vec<usize>> {
            let mut value = vec![usize::MAX; n];
            let mut s = start;
            for k in 0..n {
                let slot = &mut value[s / 2];
                if *slot != usize::MAX {
                    return Err(Error::LabelConflict);
                }
                *slot = k;
                s = next[s];
            }
            if s != start {
                return Err(Error::LabelConflict);
            }
            Ok(value)
        };
        let fixed = walk(0)?;
        let symbolic = walk(total - 1)?;
        let upper_alpha = (0..n).map(|k| self.labels[2 * k + 1]).collect();
        Ok(BetaLabeling {
            fixed,
            symbolic,
            upper_alpha,
        })
    }
}

/// Outcome of the distance checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceReport {
    /// Every glued pair is an odd distance apart.
    pub all_odd: bool,
    /// No side is glued to a neighbour.
    pub none_adjacent: bool,
    /// Some side is not glued to its antipode.
    pub not_all_opposite: bool,
}

impl DistanceReport {
    /// All three hold.
    pub fn holds(&self) -> bool {
        self.all_odd && self.none_adjacent && self.not_all_opposite
    }
}

/// `β`-labels forced by a matching, with one unresolved offset `x`.
///
/// Internally labels are `0..n`; `B_{2k}` carries `fixed[k]` and
/// `B_{2k+1}` carries `x + symbolic[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaLabeling {
    fixed: Vec<usize>,
    symbolic: Vec<usize>,
    upper_alpha: Vec<usize>,
}

/// What substituting an offset produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    /// A valid origami.
    Origami(Origami),
    /// Some `α`-arc has the same square on both sides; carries those arcs'
    /// 1-based labels.
    SelfGlued {
        /// Offending `α`-arc labels, ascending.
        alpha_labels: Vec<usize>,
    },
    /// The horizontal successor of the `β`-labels splits into several
    /// cycles, so the squares do not close up into one annulus.
    MultiCycle {
        /// Number of cycles.
        cycles: usize,
    },
}

impl Resolution {
    /// The origami, if any.
    pub fn origami(self) -> Option<Origami> {
        match self {
            Resolution::Origami(o) => Some(o),
            _ => None,
        }
    }
}

impl BetaLabeling {
    /// Number of `α`-arcs.
    pub fn arcs(&self) -> usize {
        self.fixed.len()
    }

    /// 1-based labels of the fixed chain, `B_0, B_2, …`.
    pub fn fixed_labels(&self) -> Vec<usize> {
        self.fixed.iter().map(|l| l + 1).collect()
    }

    /// Offsets `k` of the symbolic chain (`B_1, B_3, …` read `x + k`).
    pub fn symbolic_offsets(&self) -> &[usize] {
        &self.symbolic
    }

    /// All `2n` 1-based `β`-labels `B_0 … B_{2n−1}` for offset `x ∈ 1..=n`.
    pub fn labels_with(&self, x: usize) -> Result<Vec<usize>> {
        let n = self.arcs();
        if x == 0 || x > n {
            return Err(Error::OffsetOutOfRange { x, n });
        }
        Ok((0..n)
            .flat_map(|k| [self.fixed[k] + 1, (x - 1 + self.symbolic[k]) % n + 1])
            .collect())
    }

    /// Substitutes the offset `x ∈ 1..=n`.
    pub fn resolve_offset(&self, x: usize) -> Result<Resolution> {
        let n = self.arcs();
        if x == 0 || x > n {
            return Err(Error::OffsetOutOfRange { x, n });
        }
        // horizontal successor on β-labels
        let mut succ = vec![0; n];
        let mut self_glued = Vec::new();
        for k in 0..n {
            let from = self.fixed[k];
            let to = (x - 1 + self.symbolic[k]) % n;
            succ[from] = to;
            if from == to {
                self_glued.push(self.upper_alpha[k] + 1);
            }
        }
        if !self_glued.is_empty() {
            self_glued.sort_unstable();
            return Ok(Resolution::SelfGlued {
                alpha_labels: self_glued,
            });
        }
        let succ = Perm::from_images_unchecked(succ);
        let cycles = succ.cycle_count();
        if cycles > 1 {
            return Ok(Resolution::MultiCycle { cycles });
        }
        // square j is the j-th label met along the annulus from label 1;
        // vertical gluing is label + 1
        let mut order = Vec::with_capacity(n);
        let mut index = vec![0; n];
        let mut t = 0;
        for j in 0..n {
            order.push(t);
            index[t] = j;
            t = succ.apply(t);
        }
        let images = order.iter().map(|&l| index[(l + 1) % n]).collect();
        Ok(Resolution::Origami(Origami::new(
            Perm::from_images_unchecked(images),
        )?))
    }

    /// Every offset with its outcome, `x = 1..=n`.
    pub fn resolve_all(&self) -> Vec<(usize, Resolution)> {
        (1..=self.arcs())
            .map(|x| (x, self.resolve_offset(x).expect("offset in range")))
            .collect()
    }
}

/// Matching, label propagation and offset resolution for one seating: every valid `(x, origami)`.
///
/// A seating whose labels conflict yields nothing.
pub fn construct_from_menage(p: &MenagePerm) -> Result<Vec<(usize, Origami)>> {
    let m = PolygonMatching::from_menage(p)?;
    let labeling = match m.propagate_beta_labels() {
        Ok(l) => l,
        Err(Error::LabelConflict) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(labeling
        .resolve_all()
        .into_iter()
        .filter_map(|(x, r)| r.origami().map(|o| (x, o)))
        .collect())
}

/// [`construct_from_menage`] on the class representative.
pub fn construct_from_class(c: &GilbertClass) -> Result<Vec<(usize, Origami)>> {
    construct_from_menage(&c.representative)
}

/// Runs the construction over every ménage permutation of `0..n`, not only
/// class representatives. Used to check that representatives suffice.
pub fn construct_exhaustive(n: usize) -> Vec<Origami> {
    let mut out = Vec::new();
    for p in enumerate_menage(n) {
        if let Ok(list) = construct_from_menage(&p) {
            out.extend(list.into_iter().map(|(_, o)| o));
        }
    }
    out
}

/// A side of the traced polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonSide {
    /// 1-based position among the `4n` sides; `α`-sides are odd.
    pub index: usize,
    /// `'a'` or `'b'`.
    pub curve: char,
    /// 1-based arc label.
    pub label: usize,
    /// Traversal direction.
    pub direction: Direction,
}

/// A polygon read off an origami, with both curves labelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedPolygon {
    /// The `α`-gluing; labels are the origami's square numbers.
    pub matching: PolygonMatching,
    /// 1-based `β`-labels `B_0 … B_{2n−1}`, normalised so `B_0 = 1`.
    pub beta: Vec<usize>,
}

impl TracedPolygon {
    /// All `4n` sides clockwise. `β`-sides after a lower copy run `+`, the
    /// others `−`.
    pub fn sides(&self) -> Vec<PolygonSide> {
        let labels = self.matching.labels();
        let mut out = Vec::with_capacity(2 * labels.len());
        for (s, (&a, &b)) in labels.iter().zip(&self.beta).enumerate() {
            out.push(PolygonSide {
                index: 2 * s + 1,
                curve: 'a',
                label: a,
                direction: PolygonMatching::direction(s),
            });
            out.push(PolygonSide {
                index: 2 * s + 2,
                curve: 'b',
                label: b,
                direction: if s % 2 == 0 {
                    Direction::Plus
                } else {
                    Direction::Minus
                },
            });
        }
        out
    }

    /// The symbolic offset this polygon realises (`B_{2n−1}`).
    pub fn offset(&self) -> usize {
        *self.beta.last().expect("non-empty polygon")
    }
}

/// Walks around the complementary region starting from the lower copy of
/// square `0`'s bottom arc: from a lower copy `ℓ` the next side is the
/// upper copy of `p⁻¹(ℓ)`, and from an upper copy `m` the lower copy of
/// `p(m + 1) − 1`. Fails unless the walk visits all `2n` slots before
/// returning.
pub fn origami_to_polygon(o: &Origami) -> Result<TracedPolygon> {
    let n = o.squares();
    let p = o.vertical();
    let inv = p.inverse();
    // position along the vertical cycle
    let mut tau = vec![0; n];
    let mut x = 0;
    for t in 0..n {
        tau[x] = t;
        x = p.apply(x);
    }
    let mut word = Vec::with_capacity(2 * n);
    let mut raw_beta = Vec::with_capacity(2 * n);
    let mut lower = 0;
    loop {
        let upper = inv.apply(lower);
        word.push(lower + 1);
        raw_beta.push((tau[lower] + n - 1) % n);
        word.push(upper + 1);
        raw_beta.push(tau[(upper + 1) % n]);
        lower = (p.apply((upper + 1) % n) + n - 1) % n;
        if lower == 0 || word.len() >= 2 * n {
            break;
        }
    }
    if lower != 0 || word.len() != 2 * n {
        return Err(Error::TraceIncomplete {
            filled: word.len(),
            total: 2 * n,
        });
    }
    let matching = PolygonMatching::from_labels(&word).map_err(|_| Error::TraceIncomplete {
        filled: word.len(),
        total: 2 * n,
    })?;
    let base = raw_beta[0];
    let beta = raw_beta.iter().map(|b| (b + n - base) % n + 1).collect();
    Ok(TracedPolygon { matching, beta })
}

/// The trace succeeds and every glued distance is odd.
pub fn is_valid_pair_via_trace(o: &Origami) -> bool {
    match origami_to_polygon(o) {
        Ok(t) => t.matching.check_distances().all_odd,
        Err(_) => false,
    }
}

/// `true` when `vertex_count` and the trace agree; exposed for checks.
pub fn trace_agrees_with_vertices(o: &Origami) -> bool {
    is_valid_pair_via_trace(o) == (vertex_count(o.vertical().images()) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::menage::gilbert_classes;
    use crate::origami::SymmetryGroup;
    use crate::perm::NCycles;
    use alloc::collections::BTreeSet;

    const LOOP: [usize; 10] = [1, 2, 3, 4, 5, 1, 4, 5, 2, 3];

    fn loop_matching() -> PolygonMatching {
        PolygonMatching::from_labels(&LOOP).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(distance(1, 2, 5), Ok(1));
        assert_eq!(distance(1, 10, 5), Ok(1));
        assert_eq!(distance(1, 6, 5), Ok(5));
        assert!(distance(3, 3, 5).is_err());
        assert!(distance(0, 3, 5).is_err());
    }

    #[test]
    fn loop_is_a_seating() {
        let m = loop_matching();
        assert_eq!(m.distances(), vec![5, 3, 3, 3, 3]);
        assert!(m.check_distances().holds());
        let p = m.to_menage();
        assert_eq!(p.images(), &[3, 0, 4, 2, 1]);
        let back = PolygonMatching::from_menage(&MenagePerm::new(p).unwrap()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.labels(), LOOP.to_vec());
    }

    #[test]
    fn rejects_bad_words() {
        assert!(PolygonMatching::from_labels(&[1, 1, 2, 2, 3]).is_err());
        assert!(PolygonMatching::from_labels(&[1, 2, 1, 2]).is_err());
        assert!(PolygonMatching::from_labels(&[1, 2, 2, 3, 3, 3]).is_err());
        let opp = MenagePerm::all_opposite(5).unwrap();
        assert_eq!(PolygonMatching::from_menage(&opp), Err(Error::AllOpposite));
        let even = MenagePerm::shift(4, 2).unwrap();
        assert!(PolygonMatching::from_menage(&even).is_err());
    }

    #[test]
    fn genus_three_offsets() {
        let labeling = loop_matching().propagate_beta_labels().unwrap();
        assert_eq!(labeling.fixed_labels().len(), 5);
        let results = labeling.resolve_all();
        let valid: Vec<_> = results
            .iter()
            .filter(|(_, r)| matches!(r, Resolution::Origami(_)))
            .map(|(x, _)| *x)
            .collect();
        assert_eq!(valid, vec![3, 4]);
        for (x, r) in &results {
            if [1, 2, 5].contains(x) {
                assert!(matches!(r, Resolution::SelfGlued { .. }), "x = {x}");
            }
        }
        let three = labeling.resolve_offset(3).unwrap().origami().unwrap();
        assert_eq!(three, Origami::from_cycle_notation("(1 2 5 3 4)").unwrap());
        let four = labeling.resolve_offset(4).unwrap().origami().unwrap();
        let reference = Origami::from_cycle_notation("(1 5 2 4 3)").unwrap();
        assert_eq!(
            four.diff_seq().min_rotation(),
            reference.diff_seq().min_rotation()
        );
        assert_eq!(
            three.canonical_form(SymmetryGroup::Mirror),
            four.canonical_form(SymmetryGroup::Mirror)
        );
        assert!(labeling.resolve_offset(0).is_err());
        assert!(labeling.resolve_offset(6).is_err());
    }

    #[test]
    fn other_genus_three_classes_yield_nothing() {
        let m = loop_matching();
        let mut hits = 0;
        for c in gilbert_classes(5) {
            if crate::menage::is_all_opposite(&c.representative).unwrap() {
                continue;
            }
            let made = construct_from_class(&c).unwrap();
            let here = PolygonMatching::from_menage(&c.representative).unwrap();
            if here.equivalent_under_rotation(&m) {
                assert_eq!(made.len(), 2);
                hits += 1;
            } else {
                assert!(made.is_empty());
            }
        }
        assert_eq!(hits, 1);
    }

    #[test]
    fn opposite_self_glues_everywhere() {
        let opp = MenagePerm::all_opposite(7).unwrap();
        let m = PolygonMatching::from_menage_unchecked(&opp);
        if let Ok(l) = m.propagate_beta_labels() {
            assert!(l
                .resolve_all()
                .iter()
                .all(|(_, r)| matches!(r, Resolution::SelfGlued { .. })));
        }
    }

    #[test]
    fn trace_round_trip() {
        let o = Origami::from_cycle_notation("(1 2 5 3 4)").unwrap();
        let t = origami_to_polygon(&o).unwrap();
        assert!(t.matching.equivalent_under_rotation(&loop_matching()));
        let labeling = t.matching.propagate_beta_labels().unwrap();
        assert_eq!(labeling.labels_with(t.offset()).unwrap(), t.beta);
        let back = labeling
            .resolve_offset(t.offset())
            .unwrap()
            .origami()
            .unwrap();
        assert_eq!(back.diff_seq().min_rotation(), o.diff_seq().min_rotation());
        assert_eq!(t.sides().len(), 20);
    }

    #[test]
    fn torus_fails_trace() {
        let h = Origami::new(Perm::rotation(5, 1)).unwrap();
        assert!(origami_to_polygon(&h).is_err());
        assert!(!is_valid_pair_via_trace(&h));
    }

    #[test]
    fn trace_matches_vertex_count() {
        for n in [5, 7] {
            for c in NCycles::new(n) {
                let o = Origami::new(c.to_perm()).unwrap();
                assert!(trace_agrees_with_vertices(&o), "{}", o.vertical());
            }
        }
    }

    #[test]
    fn offsets_bounded_and_valid() {
        for n in [5, 7] {
            for p in enumerate_menage(n) {
                if crate::menage::is_all_opposite(&p).unwrap() {
                    continue;
                }
                let made = construct_from_menage(&p).unwrap();
                assert!(made.len() < n);
                assert!(made.iter().all(|(_, o)| o.is_coherent_minimal_pair()));
            }
        }
    }

    #[test]
    fn genus_five_class_gives_two() {
        let p1 = Origami::from_cycle_notation("(1 2 4 5 8 6 7 9 3)").unwrap();
        let t = origami_to_polygon(&p1).unwrap();
        assert!(t.matching.check_distances().holds());
        let seat = MenagePerm::new(t.matching.to_menage()).unwrap();
        let made = construct_from_menage(&seat).unwrap();
        let classes: BTreeSet<_> = made
            .iter()
            .map(|(_, o)| o.canonical_form(SymmetryGroup::Mirror))
            .collect();
        assert!(classes.len() >= 2);
        assert!(classes.contains(&p1.canonical_form(SymmetryGroup::Mirror)));
        let reference = Origami::from_cycle_notation("(1 2 4 5 8 6 3 7 9)").unwrap();
        assert!(origami_to_polygon(&reference).is_err());
    }
}
