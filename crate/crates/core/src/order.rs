//! Outcomes of comparing two elements of a preordered structure.

use serde::{Deserialize, Serialize};

/// Five-valued comparison. `Equivalent` means both `a <= b` and `b <= a`
/// hold; it is never conflated with equality of representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    LessStrict,
    GreaterStrict,
    Equivalent,
    Incomparable,
    /// Only produced by semi-decision procedures that ran out of budget.
    Unknown,
}

impl Comparison {
    /// Combines the two one-sided facts `a <= b` and `b <= a`.
    pub fn from_relations(le: bool, ge: bool) -> Self {
        match (le, ge) {
            (true, true) => Comparison::Equivalent,
            (true, false) => Comparison::LessStrict,
            (false, true) => Comparison::GreaterStrict,
            (false, false) => Comparison::Incomparable,
        }
    }

    pub fn from_ordering(o: std::cmp::Ordering) -> Self {
        match o {
            std::cmp::Ordering::Less => Comparison::LessStrict,
            std::cmp::Ordering::Equal => Comparison::Equivalent,
            std::cmp::Ordering::Greater => Comparison::GreaterStrict,
        }
    }

    /// `a <= b`.
    pub fn is_le(self) -> bool {
        matches!(self, Comparison::LessStrict | Comparison::Equivalent)
    }

    /// `a >= b`.
    pub fn is_ge(self) -> bool {
        matches!(self, Comparison::GreaterStrict | Comparison::Equivalent)
    }

    pub fn is_lt(self) -> bool {
        self == Comparison::LessStrict
    }

    pub fn is_gt(self) -> bool {
        self == Comparison::GreaterStrict
    }

    /// The comparison of `b` against `a`.
    pub fn reverse(self) -> Self {
        match self {
            Comparison::LessStrict => Comparison::GreaterStrict,
            Comparison::GreaterStrict => Comparison::LessStrict,
            other => other,
        }
    }

    /// Componentwise (product) combination.
    pub fn meet(self, other: Self) -> Self {
        use Comparison::*;
        if self == Unknown || other == Unknown {
            return Unknown;
        }
        Comparison::from_relations(self.is_le() && other.is_le(), self.is_ge() && other.is_ge())
    }
}

impl std::fmt::Display for Comparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Comparison::LessStrict => "LessStrict",
            Comparison::GreaterStrict => "GreaterStrict",
            Comparison::Equivalent => "Equivalent",
            Comparison::Incomparable => "Incomparable",
            Comparison::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::Comparison::*;

    #[test]
    fn meet_is_componentwise() {
        assert_eq!(LessStrict.meet(GreaterStrict), Incomparable);
        assert_eq!(LessStrict.meet(Equivalent), LessStrict);
        assert_eq!(Equivalent.meet(Equivalent), Equivalent);
        assert_eq!(GreaterStrict.meet(Incomparable), Incomparable);
        assert_eq!(Unknown.meet(LessStrict), Unknown);
    }

    #[test]
    fn reverse_roundtrip() {
        for c in [LessStrict, GreaterStrict, Equivalent, Incomparable, Unknown] {
            assert_eq!(c.reverse().reverse(), c);
        }
    }
}
