//! Ménage permutations and their rotation classes.
//!
//! A ménage permutation of `0..n` avoids `P(i) = i` and `P(i) = i + 1`
//! (mod `n`). Conjugating by a rotation `C: i ↦ i + a` gives another one;
//! the orbits of that action are the Gilbert classes. For odd `n` they are
//! exactly the ways to glue the `α`-sides of the `4n`-gon up to rotation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::perm::Perm;
use crate::{Error, Result};

/// Whether `P(i) ∉ {i, i + 1 mod n}` for every `i`.
pub fn is_menage(p: &Perm) -> bool {
    let n = p.len();
    (0..n).all(|i| {
        let v = p.apply(i);
        v != i && v != (i + 1) % n
    })
}

/// A permutation satisfying the ménage constraint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MenagePerm(Perm);

impl MenagePerm {
    /// Validates the ménage constraint.
    pub fn new(p: Perm) -> Result<Self> {
        if !is_menage(&p) {
            return Err(Error::NotMenage);
        }
        Ok(MenagePerm(p))
    }

    /// The constant shift `i ↦ i + c`, a ménage permutation for `c ∉ {0, 1}`.
    pub fn shift(n: usize, c: usize) -> Result<Self> {
        MenagePerm::new(Perm::rotation(n, c % n.max(1)))
    }

    /// The unique permutation gluing every `α`-side to its antipode
    /// (`i ↦ i + (n + 1)/2`), for odd `n`.
    pub fn all_opposite(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenArcCount { n });
        }
        MenagePerm::shift(n, n.div_ceil(2))
    }

    /// Seats per side.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Underlying permutation.
    pub fn perm(&self) -> &Perm {
        &self.0
    }

    /// Image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    /// `C⁻¹ P C` for the rotation `C: i ↦ i + a`.
    pub fn rotate(&self, a: usize) -> MenagePerm {
        MenagePerm(Perm::from_images_unchecked(rotated_images(
            self.0.images(),
            a,
        )))
    }
}

fn rotated_images(images: &[usize], a: usize) -> Vec<usize> {
    let n = images.len();
    (0..n)
        .map(|i| (images[(i + a) % n] + n - a % n) % n)
        .collect()
}

/// Whether the induced `α`-matching glues every side to its antipode.
pub fn is_all_opposite(p: &MenagePerm) -> Result<bool> {
    let n = p.len();
    if n.is_multiple_of(2) {
        return Err(Error::EvenArcCount { n });
    }
    let half = n.div_ceil(2);
    Ok((0..n).all(|i| p.apply(i) == (i + half) % n))
}

/// Position-wise backtracking over ménage permutations, yielding them in
/// lexicographic order of their image lists.
#[derive(Debug, Clone)]
pub struct MenageIter {
    n: usize,
    images: Vec<Option<usize>>,
    used: Vec<bool>,
    fresh: bool,
    done: bool,
}

/// All ménage permutations of `0..n`.
pub fn enumerate_menage(n: usize) -> MenageIter {
    MenageIter {
        n,
        images: vec![None; n],
        used: vec![false; n],
        fresh: true,
        done: n == 0,
    }
}

impl Iterator for MenageIter {
    type Item = MenagePerm;

    fn next(&mut self) -> Option<MenagePerm> {
        if self.done {
            return None;
        }
        let n = self.n;
        let mut d = if self.fresh { 0 } else { n - 1 };
        self.fresh = false;
        loop {
            let start = match self.images[d].take() {
                Some(prev) => {
                    self.used[prev] = false;
                    prev + 1
                }
                None => 0,
            };
            let forbidden = (d, (d + 1) % n);
            let found = (start..n).find(|&v| !self.used[v] && v != forbidden.0 && v != forbidden.1);
            match found {
                Some(v) => {
                    self.images[d] = Some(v);
                    self.used[v] = true;
                    if d == n - 1 {
                        let images = self.images.iter().map(|v| v.expect("filled")).collect();
                        return Some(MenagePerm(Perm::from_images_unchecked(images)));
                    }
                    d += 1;
                }
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    d -= 1;
                }
            }
        }
    }
}

/// Touchard's closed form
/// `Σ_{k=0..n} (−1)^k · 2n/(2n−k) · C(2n−k, k) · (n−k)!`, exact.
pub fn menage_number(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for k in 0..=n {
        let m = 2 * n - k;
        // 2n/(2n−k) · C(2n−k, k) is an integer
        let coeff = binomial(m, k) * BigUint::from(2 * n) / BigUint::from(m);
        let term = coeff * factorial(n - k);
        if k % 2 == 0 {
            plus += term;
        } else {
            minus += term;
        }
    }
    plus - minus
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn binomial(m: usize, k: usize) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(m - i) / BigUint::from(i + 1);
    }
    acc
}

/// One rotation class of ménage permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GilbertClass {
    /// Lexicographically least image list among the conjugates.
    pub representative: MenagePerm,
    /// Orbit size; divides `n`.
    pub size: usize,
}

impl GilbertClass {
    /// All members of the class.
    pub fn members(&self) -> Vec<MenagePerm> {
        let mut out: Vec<_> = (0..self.representative.len())
            .map(|a| self.representative.rotate(a))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Partition of the ménage permutations of `0..n` into rotation classes,
/// sorted by representative.
pub fn gilbert_classes(n: usize) -> Vec<GilbertClass> {
    let mut out = Vec::new();
    let mut buf = vec![0usize; n];
    for p in enumerate_menage(n) {
        let images = p.perm().images();
        let mut stabilizer = 1;
        let mut minimal = true;
        for a in 1..n {
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = (images[(i + a) % n] + n - a) % n;
            }
            match buf.as_slice().cmp(images) {
                core::cmp::Ordering::Less => {
                    minimal = false;
                    break;
                }
                core::cmp::Ordering::Equal => stabilizer += 1,
                core::cmp::Ordering::Greater => {}
            }
        }
        if minimal {
            out.push(GilbertClass {
                representative: p,
                size: n / stabilizer,
            });
        }
    }
    out
}

/// Number of rotation classes by Burnside's lemma: the identity fixes every
/// ménage permutation, and a rotation with `gcd(a, n) = d < n` fixes those
/// determined by `d` independent shifts.
pub fn gilbert_class_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let mut total = menage_number(n);
    let mut by_divisor: Vec<Option<BigUint>> = vec![None; n + 1];
    for a in 1..n {
        let d = a.gcd(&n);
        let fixed = by_divisor[d].get_or_insert_with(|| rotation_fixed_count(n, d));
        total += &*fixed;
    }
    total / BigUint::from(n)
}

/// Ménage permutations commuting with the rotation by `d` (where `d | n`).
///
/// Such a permutation is `i ↦ i + c_i` with `c_i` depending on `i mod d`,
/// and `i ↦ (i + c_i) mod d` a permutation `σ` of `Z_d`. For each `σ` the
/// choices are independent, so the count is the permanent of the `d × d`
/// matrix `n/d − [j − i ≡ 0] − [j − i ≡ 1]` (indices mod `d`).
fn rotation_fixed_count(n: usize, d: usize) -> BigUint {
    let m = n / d;
    let entry = |i: usize, j: usize| -> usize {
        let r = (j + d - i) % d;
        let mut forbidden = 0;
        if r == 0 {
            forbidden += 1;
        }
        if r == 1 % d {
            forbidden += 1;
        }
        m.saturating_sub(forbidden)
    };
    // permanent by DP over column subsets, row = popcount
    let mut dp = vec![BigUint::zero(); 1 << d];
    dp[0] = BigUint::one();
    for mask in 0usize..(1 << d) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == d {
            continue;
        }
        let cur = dp[mask].clone();
        for col in 0..d {
            if mask & (1 << col) == 0 {
                let e = entry(row, col);
                if e > 0 {
                    dp[mask | (1 << col)] += &cur * BigUint::from(e);
                }
            }
        }
    }
    dp[(1 << d) - 1].clone()
}
