//! Finite part sets: the `A` in `P_A(n)`.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// Errors from [`PartSet`] construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartSetError {
    #[error("part set must be nonempty")]
    Empty,
    #[error("parts must be positive, got 0")]
    ZeroPart,
    #[error("lcm of parts overflows u64")]
    LcmOverflow,
}

/// A finite set of distinct positive integer parts, kept strictly increasing.
///
/// The least common multiple `L` and the gcd `g` of the parts are computed
/// once at construction. `g > 1` is allowed; counting tables for such sets
/// contain zeros at the non-multiples of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartSet {
    parts: Vec<u64>,
    lcm: u64,
    gcd: u64,
}

impl PartSet {
    /// Build a part set from arbitrary input parts: sorts, deduplicates,
    /// rejects empty input and zero parts.
    pub fn new(parts: impl IntoIterator<Item = u64>) -> Result<Self, PartSetError> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        if parts.iter().any(|&p| p == 0) {
            return Err(PartSetError::ZeroPart);
        }
        parts.sort_unstable();
        parts.dedup();
        if parts.is_empty() {
            return Err(PartSetError::Empty);
        }
        let mut lcm = 1u64;
        let mut gcd = 0u64;
        for &p in &parts {
            lcm = lcm
                .checked_div(lcm.gcd(&p))
                .and_then(|l| l.checked_mul(p))
                .ok_or(PartSetError::LcmOverflow)?;
            gcd = gcd.gcd(&p);
        }
        Ok(PartSet { parts, lcm, gcd })
    }

    /// The parts, strictly increasing.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    /// Least common multiple of the parts (the natural quasi-polynomial modulus).
    pub fn modulus(&self) -> u64 {
        self.lcm
    }

    /// Greatest common divisor of the parts.
    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// Largest part.
    pub fn max_part(&self) -> u64 {
        *self.parts.last().unwrap()
    }

    /// Product of all parts (exact, as u128 to keep head-room).
    pub fn product(&self) -> u128 {
        self.parts.iter().map(|&p| p as u128).product()
    }

    /// Parse a comma-separated list such as `"1,2,3"`.
    pub fn parse(spec: &str) -> Result<Self, String> {
        let parts: Result<Vec<u64>, _> = spec
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect();
        let parts = parts.map_err(|e| format!("bad part list {spec:?}: {e}"))?;
        PartSet::new(parts).map_err(|e| e.to_string())
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_and_caches() {
        let a = PartSet::new([3, 1, 2, 3]).unwrap();
        assert_eq!(a.parts(), &[1, 2, 3]);
        assert_eq!(a.modulus(), 6);
        assert_eq!(a.gcd(), 1);
        assert_eq!(a.max_part(), 3);
    }

    #[test]
    fn order_independent() {
        let a = PartSet::new([5, 2, 9]).unwrap();
        let b = PartSet::new([9, 5, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn gcd_greater_than_one_allowed() {
        let a = PartSet::new([2, 4, 6]).unwrap();
        assert_eq!(a.gcd(), 2);
        assert_eq!(a.modulus(), 12);
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert_eq!(PartSet::new([]), Err(PartSetError::Empty));
        assert_eq!(PartSet::new([0, 1]), Err(PartSetError::ZeroPart));
    }

    #[test]
    fn parses_lists() {
        assert_eq!(PartSet::parse("1, 2,3").unwrap().parts(), &[1, 2, 3]);
        assert!(PartSet::parse("1,x").is_err());
    }
}
