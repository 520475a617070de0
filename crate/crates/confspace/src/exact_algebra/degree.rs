use std::fmt;

/// A degree value with a `-inf` sentinel for the zero element.
///
/// Keeps filtration membership total: the zero element lies in every
/// filtration level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, Degree::NegInf)
    }

    /// Degree of a product: sums, absorbing `-inf`.
    pub fn plus(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }

    pub fn shift(self, by: i64) -> Degree {
        match self {
            Degree::Finite(a) => Degree::Finite(a + by),
            Degree::NegInf => Degree::NegInf,
        }
    }

    /// `self <= level` as filtration membership.
    pub fn within(self, level: i64) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Finite(d) => d <= level,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl From<i64> for Degree {
    fn from(d: i64) -> Self {
        Degree::Finite(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_membership() {
        assert!(Degree::NegInf < Degree::Finite(i64::MIN));
        assert!(Degree::Finite(1) < Degree::Finite(2));
        assert!(Degree::NegInf.within(-1_000_000));
        assert!(Degree::Finite(2).within(2));
        assert!(!Degree::Finite(3).within(2));
        assert_eq!(Degree::Finite(2).plus(Degree::NegInf), Degree::NegInf);
        assert_eq!(Degree::Finite(2).plus(Degree::Finite(-5)), Degree::Finite(-3));
    }
}
