//! Pell equations `u^2 - D v^2 = 1`: fundamental solutions by the continued
//! fraction expansion of `sqrt(D)`, and the recurrence stream of all positive
//! solutions.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PellError {
    #[error("{0} is a perfect square; u^2 - {0} v^2 = 1 has no nontrivial solutions")]
    SquareD(u64),
}

/// Iterator over the positive solutions of `u^2 - D v^2 = 1`, starting from
/// the fundamental solution and closed under
/// `(u, v) -> (u1 u + D v1 v, u1 v + v1 u)`.
#[derive(Debug, Clone)]
pub struct PellStream {
    d: u64,
    fundamental: (BigInt, BigInt),
    current: Option<(BigInt, BigInt)>,
}

impl PellStream {
    pub fn new(d: u64) -> Result<Self, PellError> {
        let fundamental = pell_fundamental(d)?;
        Ok(PellStream {
            d,
            fundamental,
            current: None,
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn fundamental(&self) -> &(BigInt, BigInt) {
        &self.fundamental
    }
}

impl Iterator for PellStream {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<(BigInt, BigInt)> {
        let next = match &self.current {
            None => self.fundamental.clone(),
            Some((u, v)) => {
                let (u1, v1) = &self.fundamental;
                (
                    u1 * u + BigInt::from(self.d) * v1 * v,
                    u1 * v + v1 * u,
                )
            }
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// Minimal positive solution of `u^2 - D v^2 = 1`, from the continued
/// fraction expansion of `sqrt(D)`. Errors when `D` is a perfect square.
pub fn pell_fundamental(d: u64) -> Result<(BigInt, BigInt), PellError> {
    let a0 = num_integer::Roots::sqrt(&d);
    if a0 * a0 == d {
        return Err(PellError::SquareD(d));
    }
    // expansion state: sqrt(D) = (m + sqrt(D)) / q with small m, q
    let mut m = 0u64;
    let mut q = 1u64;
    let mut a = a0;
    // convergents h/k
    let mut h_prev = BigInt::one();
    let mut h = BigInt::from(a0);
    let mut k_prev = BigInt::from(0u32);
    let mut k = BigInt::one();
    let dd = BigInt::from(d);
    loop {
        if &h * &h - &dd * &k * &k == BigInt::one() {
            return Ok((h, k));
        }
        m = a * q - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

/// First `count` positive solutions, strictly increasing in both coordinates.
pub fn pell_take(d: u64, count: usize) -> Result<Vec<(BigInt, BigInt)>, PellError> {
    Ok(PellStream::new(d)?.take(count).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(pell_fundamental(3).unwrap(), (big(2), big(1)));
        assert_eq!(pell_fundamental(2).unwrap(), (big(3), big(2)));
        assert_eq!(pell_fundamental(4), Err(PellError::SquareD(4)));
        assert_eq!(pell_fundamental(1), Err(PellError::SquareD(1)));
        // a famously large one
        assert_eq!(
            pell_fundamental(61).unwrap(),
            (
                "1766319049".parse().unwrap(),
                "226153980".parse().unwrap()
            )
        );
    }

    #[test]
    fn take_examples() {
        assert_eq!(pell_take(3, 2).unwrap(), vec![(big(2), big(1)), (big(7), big(4))]);
        assert_eq!(pell_take(3, 1).unwrap(), vec![(big(2), big(1))]);
        assert_eq!(
            pell_take(2, 3).unwrap(),
            vec![(big(3), big(2)), (big(17), big(12)), (big(99), big(70))]
        );
    }

    #[test]
    fn stream_satisfies_relation() {
        for d in 2..=200u64 {
            let Ok(stream) = PellStream::new(d) else {
                continue;
            };
            let dd = BigInt::from(d);
            let mut prev = (BigInt::from(0), BigInt::from(0));
            for (u, v) in stream.take(20) {
                assert_eq!(&u * &u - &dd * &v * &v, BigInt::one(), "d = {d}");
                assert!(u > prev.0 && v > prev.1, "strictly increasing, d = {d}");
                prev = (u, v);
            }
        }
    }

    #[test]
    fn fundamental_is_minimal() {
        // brute force over v, capped: the cap only skips D whose fundamental
        // v exceeds it (those are still checked for the Pell relation above)
        let cap = 120_000u64;
        for d in 2..=500u64 {
            let Ok((u1, v1)) = pell_fundamental(d) else {
                continue;
            };
            if v1 > BigInt::from(cap) {
                continue;
            }
            let dd = BigInt::from(d);
            let mut found = None;
            for v in 1..=u64::try_from(&v1).unwrap() {
                let rhs = BigInt::one() + &dd * v * v;
                if let Some(u) = crate::ratpoly::exact_sqrt_int(&rhs) {
                    found = Some((u, BigInt::from(v)));
                    break;
                }
            }
            assert_eq!(found, Some((u1, v1)), "d = {d}");
        }
    }
}
