use alloc::string::String;

/// Errors raised by the core crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A permutation must act on at least one point.
    #[error("permutation must act on at least one point")]
    Empty,
    /// The image list is not a bijection of `0..n`.
    #[error("not a bijection of 0..{n}")]
    NotABijection {
        /// Claimed size.
        n: usize,
    },
    /// Two permutations of different sizes were combined.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch {
        /// Size of the left operand.
        left: usize,
        /// Size of the right operand.
        right: usize,
    },
    /// The permutation is not a single cycle through every point.
    #[error("permutation is not a single {n}-cycle")]
    NotAnNCycle {
        /// Number of points.
        n: usize,
    },
    /// A difference sequence whose partial sums repeat (or contain a zero step).
    #[error("difference sequence does not describe an n-cycle")]
    NotACycleDiff,
    /// Cycle notation could not be parsed.
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
    /// The permutation violates the ménage constraint.
    #[error("not a ménage permutation")]
    NotMenage,
    /// The construction needs an odd number of arcs.
    #[error("arc count {n} must be odd")]
    EvenArcCount {
        /// Offending arc count.
        n: usize,
    },
    /// Every α-side is glued to its antipode; no surface of this kind exists.
    #[error("all-opposite matching cannot bound a minimal filling pair")]
    AllOpposite,
    /// A slot index is out of range or repeated.
    #[error("invalid slot pair ({i}, {j}) for {n} arcs")]
    InvalidSlot {
        /// First slot (1-based).
        i: usize,
        /// Second slot (1-based).
        j: usize,
        /// Arc count.
        n: usize,
    },
    /// A polygon label sequence is not a valid white/black matching.
    #[error("invalid α-matching: {0}")]
    InvalidMatching(&'static str),
    /// Label propagation forced two different labels onto one β-side.
    #[error("β-label propagation conflict: the matching admits no labelling")]
    LabelConflict,
    /// The origami-to-polygon walk closed up before visiting every slot.
    #[error("trace closed after {filled} of {total} α-slots")]
    TraceIncomplete {
        /// Slots written before the walk returned to its start.
        filled: usize,
        /// Slots in the polygon.
        total: usize,
    },
    /// Offset outside `1..=n`.
    #[error("offset {x} outside 1..={n}")]
    OffsetOutOfRange {
        /// Requested offset.
        x: usize,
        /// Arc count.
        n: usize,
    },
    /// The requested genus is outside the supported range.
    #[error("genus {genus} unsupported: {reason}")]
    Genus {
        /// Requested genus.
        genus: u32,
        /// Why it was refused.
        reason: &'static str,
    },
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;
