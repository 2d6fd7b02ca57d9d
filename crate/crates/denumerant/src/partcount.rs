//! Exact computation of the restricted partition function `P_A(n)`.
//!
//! [`count_table`] is the coin-DP ground truth used as the oracle everywhere
//! else in the crate. [`sertoz_count`] is the closed form for two coprime
//! parts; [`p3_closed`] and [`p4_closed`] are the nearest-integer closed
//! forms for `A = {1,2,3}` and `A = {1,2,3,4}`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partset::PartSet;

/// Errors from the closed-form counting routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("closed form needs exactly two parts, got {0}")]
    WrongArity(usize),
    #[error("closed form needs coprime parts, gcd is {0}")]
    NonCoprime(u64),
    #[error("table limit {requested} exceeds budget {budget}")]
    BudgetExceeded { requested: u64, budget: u64 },
}

/// Default cap on table sizes; guards against accidental huge allocations.
pub const TABLE_BUDGET: u64 = 200_000_000;

/// A dense table of `P_A(n)` for `0 <= n <= limit`.
///
/// `values[0] = 1` (the empty partition) and `values[n] = 0` whenever
/// `gcd(A)` does not divide `n`. Values are arbitrary precision from the
/// start; growth is polynomial for fixed `A` but exceeds 64 bits quickly.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    set: PartSet,
    values: Vec<BigUint>,
}

impl PartitionTable {
    /// The part set the table was built for.
    pub fn set(&self) -> &PartSet {
        &self.set
    }

    /// Inclusive upper limit of the table.
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// `P_A(n)`; panics if `n` is beyond the limit.
    pub fn value(&self, n: u64) -> &BigUint {
        &self.values[n as usize]
    }

    /// All values, indexed by `n`.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Build the table of `P_A(n)` for `0 <= n <= limit` by the coin-change
/// recurrence, iterating parts in ascending order with an in-place prefix
/// update. Deterministic regardless of thread count; the table is immutable
/// afterwards and safe to share.
pub fn count_table(set: &PartSet, limit: u64) -> PartitionTable {
    try_count_table(set, limit, TABLE_BUDGET).expect("table within default budget")
}

/// As [`count_table`], with an explicit budget on the table size.
pub fn try_count_table(
    set: &PartSet,
    limit: u64,
    budget: u64,
) -> Result<PartitionTable, CountError> {
    if limit > budget {
        return Err(CountError::BudgetExceeded {
            requested: limit,
            budget,
        });
    }
    let n = limit as usize;
    let mut values = vec![BigUint::zero(); n + 1];
    values[0] = BigUint::one();
    for &part in set.parts() {
        let a = part as usize;
        if a > n {
            continue;
        }
        for i in a..=n {
            // values[i] += values[i - a]; split to satisfy the borrow checker
            let (lo, hi) = values.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }
    Ok(PartitionTable {
        set: set.clone(),
        values,
    })
}

/// `P_A(n)` for a single `n` (builds a fresh table; use [`count_table`] for ranges).
pub fn count_single(set: &PartSet, n: u64) -> BigUint {
    count_table(set, n).value(n).clone()
}

/// Closed form for `A = {a1, a2}` with coprime parts:
/// `P_A(n) = (n + a1*a1' + a2*a2')/(a1*a2) - 1`, where `a_i * a_i'` is
/// congruent to `-n` modulo the other part and `1 <= a_i' <= ` other part.
pub fn sertoz_count(set: &PartSet, n: u64) -> Result<BigUint, CountError> {
    if set.len() != 2 {
        return Err(CountError::WrongArity(set.len()));
    }
    if set.gcd() != 1 {
        return Err(CountError::NonCoprime(set.gcd()));
    }
    let a1 = set.parts()[0];
    let a2 = set.parts()[1];
    // residue r in [1, m] with a * r = -n (mod m)
    let cofactor = |a: u64, m: u64| -> u64 {
        let inv = mod_inverse(a % m, m);
        let target = (m - n % m) % m;
        let r = (inv as u128 * target as u128 % m as u128) as u64;
        if r == 0 {
            m
        } else {
            r
        }
    };
    let a1p = cofactor(a1, a2);
    let a2p = cofactor(a2, a1);
    let num = n as u128 + a1 as u128 * a1p as u128 + a2 as u128 * a2p as u128;
    let den = a1 as u128 * a2 as u128;
    debug_assert_eq!(num % den, 0);
    Ok(BigUint::from(num / den - 1))
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 guaranteed by the caller
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Nearest integer to `(n+3)^2 / 12`, which equals `P_{1,2,3}(n)`.
pub fn p3_closed(n: u64) -> BigUint {
    let n = BigInt::from(n);
    let sq = (&n + 3) * (&n + 3);
    // (k + 6) div 12 is the nearest integer; k = (n+3)^2 is never 6 mod 12
    let rounded: BigInt = (sq + 6) / 12;
    rounded.to_biguint().unwrap()
}

/// Nearest integer to `(n+1)(n^2+23n+85)/144 - (n+4)/8 * floor((n+1)/2)`,
/// which equals `P_{1,2,3,4}(n)`.
pub fn p4_closed(n: u64) -> BigUint {
    let n = BigInt::from(n);
    let half = (&n + 1) / 2; // floor
    // value = (n+1)(n^2+23n+85)/144 - (n+4)*half/8, rounded to nearest.
    // Put everything over 144: (n+1)(n^2+23n+85) - 18*(n+4)*half, then
    // nearest integer of t/144 is floor((2t + 144) / 288).
    let t = (&n + 1) * ((&n) * (&n) + 23 * &n + 85) - 18 * (&n + 4) * half;
    let rounded: BigInt = (2 * t + 144) / 288;
    rounded.to_biguint().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(parts: &[u64]) -> PartSet {
        PartSet::new(parts.iter().copied()).unwrap()
    }

    /// Exhaustive oracle: count multisets by brute-force recursion.
    fn enumerate(parts: &[u64], n: u64) -> u64 {
        fn go(parts: &[u64], n: u64) -> u64 {
            match parts.split_last() {
                None => u64::from(n == 0),
                Some((&last, rest)) => {
                    let mut total = 0;
                    let mut used = 0;
                    while used <= n {
                        total += go(rest, n - used);
                        used += last;
                    }
                    total
                }
            }
        }
        go(parts, n)
    }

    #[test]
    fn table_matches_enumeration() {
        let a = set(&[1, 2, 3]);
        let table = count_table(&a, 30);
        for n in 0..=30 {
            assert_eq!(table.value(n), &BigUint::from(enumerate(&[1, 2, 3], n)));
        }
        assert_eq!(table.value(4), &BigUint::from(4u32));
    }

    #[test]
    fn empty_partition_counts_once() {
        for parts in [&[1u64, 2, 3][..], &[2, 3], &[7]] {
            assert_eq!(count_table(&set(parts), 0).value(0), &BigUint::one());
        }
    }

    #[test]
    fn known_value_n49() {
        // P_{1,2,3}(49) = 225, i.e. the residue-1 piece at n = 8
        let table = count_table(&set(&[1, 2, 3]), 49);
        assert_eq!(table.value(49), &BigUint::from(225u32));
    }

    #[test]
    fn two_part_table() {
        let table = count_table(&set(&[2, 3]), 18);
        assert_eq!(table.value(18), &BigUint::from(4u32));
        assert_eq!(table.value(1), &BigUint::zero());
    }

    #[test]
    fn gcd_zero_pattern() {
        let a = set(&[2, 4]);
        let table = count_table(&a, 10);
        for n in 0..=10 {
            assert_eq!(table.value(n).is_zero(), n % 2 == 1, "n = {n}");
        }
    }

    #[test]
    fn coin_recurrence_against_largest_part() {
        // removing the largest part a: values[n] = values'[n] + values[n - a]
        for parts in [&[1u64, 2, 3][..], &[2, 3, 7], &[1, 4, 5, 10]] {
            let a = set(parts);
            let big = a.max_part();
            let smaller = set(&parts[..parts.len() - 1]);
            let t = count_table(&a, 60);
            let s = count_table(&smaller, 60);
            for n in 0..=60u64 {
                let expect = if n >= big {
                    s.value(n) + t.value(n - big)
                } else {
                    s.value(n).clone()
                };
                assert_eq!(t.value(n), &expect);
            }
        }
    }

    #[test]
    fn scaling_identity() {
        // A = {1, p*a2, ..., p*ak} vs B = {1, a2, ..., ak}: P_A(p n) = P_B(n)
        for p in [2u64, 3] {
            for tail in [&[2u64, 5][..], &[3, 4], &[2, 3, 7]] {
                let b: Vec<u64> = std::iter::once(1).chain(tail.iter().copied()).collect();
                let a: Vec<u64> = std::iter::once(1)
                    .chain(tail.iter().map(|&x| p * x))
                    .collect();
                let ta = count_table(&set(&a), 40 * p);
                let tb = count_table(&set(&b), 40);
                for n in 0..=40 {
                    assert_eq!(ta.value(p * n), tb.value(n), "p={p} tail={tail:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn sertoz_matches_dp() {
        for parts in [[2u64, 3], [3, 5], [4, 9], [5, 7]] {
            let a = set(&parts);
            let table = count_table(&a, 200);
            for n in 0..=200 {
                assert_eq!(
                    sertoz_count(&a, n).unwrap(),
                    table.value(n).clone(),
                    "A={a} n={n}"
                );
            }
        }
    }

    #[test]
    fn sertoz_known_values() {
        assert_eq!(sertoz_count(&set(&[2, 3]), 18).unwrap(), BigUint::from(4u32));
        assert_eq!(sertoz_count(&set(&[2, 3]), 1).unwrap(), BigUint::zero());
        assert_eq!(sertoz_count(&set(&[3, 5]), 15).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn sertoz_rejects_bad_sets() {
        assert_eq!(
            sertoz_count(&set(&[2, 4]), 5),
            Err(CountError::NonCoprime(2))
        );
        assert_eq!(
            sertoz_count(&set(&[1, 2, 3]), 5),
            Err(CountError::WrongArity(3))
        );
    }

    #[test]
    fn sertoz_floor_bound() {
        // value is floor(n / (a1 a2)) or that plus one
        let a = set(&[3, 7]);
        for n in 0..=300u64 {
            let v = sertoz_count(&a, n).unwrap();
            let floor = BigUint::from(n / 21);
            assert!(v == floor || v == &floor + 1u32, "n={n} v={v}");
        }
    }

    #[test]
    fn closed_forms_small() {
        let t3 = count_table(&set(&[1, 2, 3]), 100);
        let t4 = count_table(&set(&[1, 2, 3, 4]), 100);
        for n in 0..=100 {
            assert_eq!(&p3_closed(n), t3.value(n), "p3 at {n}");
            assert_eq!(&p4_closed(n), t4.value(n), "p4 at {n}");
        }
    }

    #[test]
    fn budget_guard() {
        let e = try_count_table(&set(&[1, 2]), 100, 10).unwrap_err();
        assert!(matches!(e, CountError::BudgetExceeded { .. }));
    }
}
