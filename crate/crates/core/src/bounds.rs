//! Upper bounds on the number of classes in genus `g`.
//!
//! With `A(g)` the number of rotation classes of ménage permutations on
//! `2g − 1` seats, each class yields at most `2g − 2` origamis, and each
//! pair is counted at least twice, so there are at most `(g − 1)·A(g)`
//! classes (`(g − 1)·(A(g) − 1)` once the all-opposite class is dropped).
//! Asymptotically this is `(g − 1)(2g − 2)!/e²`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::menage::{factorial, gilbert_class_count};
use crate::{Error, Result};

/// Bounds for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Genus.
    pub genus: u32,
    /// Squares, `2g − 1`.
    pub squares: usize,
    /// Rotation classes of ménage permutations on `2g − 1` seats.
    pub gilbert_classes: BigUint,
    /// `(g − 1)·A(g)`.
    pub exact_bound: BigUint,
    /// `(g − 1)·(A(g) − 1)`.
    pub exact_bound_excl: BigUint,
    /// `⌊(g − 1)(2g − 2)!/e²⌋`.
    pub asymptotic: BigUint,
}

fn check(g: u32) -> Result<usize> {
    if g < 3 {
        return Err(Error::Genus {
            genus: g,
            reason: "bounds are stated for g >= 3",
        });
    }
    Ok(2 * g as usize - 1)
}

/// All bounds for genus `g ≥ 3`.
pub fn bound_report(g: u32) -> Result<BoundReport> {
    let n = check(g)?;
    let a = gilbert_class_count(n);
    let gm1 = BigUint::from(g - 1);
    Ok(BoundReport {
        genus: g,
        squares: n,
        exact_bound: &gm1 * &a,
        exact_bound_excl: &gm1 * (&a - 1u32),
        asymptotic: asymptotic_bound(g)?,
        gilbert_classes: a,
    })
}

/// Reports for `g = 3..=g_max`.
pub fn bound_table(g_max: u32) -> Result<Vec<BoundReport>> {
    check(g_max)?;
    (3..=g_max).map(bound_report).collect()
}

/// `⌊(g − 1)(2g − 2)!/e²⌋`, exact.
pub fn asymptotic_bound(g: u32) -> Result<BigUint> {
    asymptotic_bound_with_terms(g, 16)
}

/// As [`asymptotic_bound`], starting from `terms` terms of the series for
/// `e²` and doubling until the bracket decides the floor.
pub fn asymptotic_bound_with_terms(g: u32, terms: usize) -> Result<BigUint> {
    check(g)?;
    let numerator = BigUint::from(g - 1) * factorial(2 * g as usize - 2);
    let mut k = terms.max(4);
    loop {
        let (lower, upper, den) = e_squared_bracket(k);
        // numerator/upper ≤ numerator/e² ≤ numerator/lower
        let lo = &numerator * &den / upper;
        let hi = &numerator * &den / lower;
        if lo == hi {
            return Ok(lo);
        }
        k *= 2;
    }
}

/// Rational bracket `lower/den < e² < upper/den` from the first `k + 1`
/// terms of `Σ 2^j/j!`, with the tail bounded by a geometric series.
pub fn e_squared_bracket(k: usize) -> (BigUint, BigUint, BigUint) {
    let den = BigUint::from(k) * factorial(k + 1);
    let mut lower = BigUint::zero();
    // den / j! computed downward from j = k + 1
    let mut ratio = BigUint::from(k);
    let mut two_pow = BigUint::one() << (k + 1);
    let tail = &two_pow * BigUint::from(k + 2);
    for j in (0..=k).rev() {
        ratio *= BigUint::from(j + 1);
        two_pow >>= 1;
        lower += &two_pow * &ratio;
    }
    let upper = &lower + tail;
    (lower, upper, den)
}

/// `A(g)·e²/(2g − 2)!`, which tends to 1.
pub fn class_ratio(g: u32) -> Result<f64> {
    let n = check(g)?;
    let a = gilbert_class_count(n).to_f64().unwrap_or(f64::INFINITY);
    let f = factorial(n - 1).to_f64().unwrap_or(f64::INFINITY);
    Ok(a * core::f64::consts::E * core::f64::consts::E / f)
}
