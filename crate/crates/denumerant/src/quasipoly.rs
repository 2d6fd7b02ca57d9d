//! Quasi-polynomial structure of `P_A`: the residue pieces `P_A(Ln + i)`.
//!
//! For a finite part set the counting function agrees with one of `L`
//! polynomials depending on `n mod L` (`L` = lcm of the parts), exactly and
//! from `n = 0` on, because the generating function is a proper rational
//! function. Pieces are constructed by interpolation against the DP oracle
//! and certified two ways: extra verification points, plus (for sub-moduli)
//! a symbolic gluing proof through the full-modulus pieces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::partcount::{count_table, PartitionTable};
use crate::partset::PartSet;
use crate::ratpoly::{interpolate, rat, RatPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuasiError {
    #[error("P_{set}({modulus}n + {residue}) does not agree with a single polynomial")]
    NotPolynomial {
        set: String,
        modulus: u64,
        residue: u64,
    },
}

/// One residue piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub poly: RatPoly,
    /// True when the residue class is empty (`gcd(A)` does not divide it),
    /// making the piece the zero polynomial.
    pub empty_residue: bool,
}

/// The full quasi-polynomial decomposition of `P_A` at some modulus:
/// `pieces[i]` evaluated at `n` equals `P_A(modulus * n + i)` for all
/// `n >= 0`.
#[derive(Debug, Clone)]
pub struct QuasiPoly {
    set: PartSet,
    modulus: u64,
    pieces: Vec<Piece>,
}

impl QuasiPoly {
    pub fn set(&self) -> &PartSet {
        &self.set
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn piece(&self, residue: u64) -> &Piece {
        &self.pieces[residue as usize]
    }

    /// Re-express at a coarser step `target` (any multiple of the modulus):
    /// the piece at residue `j` of the result is
    /// `P_A(target * n + j) = piece_{j mod L}((target/L) n + (j - j mod L)/L)`.
    pub fn refine(&self, target: u64) -> QuasiPoly {
        assert_eq!(target % self.modulus, 0, "target must be a multiple");
        let step = rat((target / self.modulus) as i64);
        let pieces = (0..target)
            .map(|j| {
                let rho = j % self.modulus;
                let offset = rat(((j - rho) / self.modulus) as i64);
                let base = &self.pieces[rho as usize];
                Piece {
                    poly: base.poly.compose_linear(&step, &offset),
                    empty_residue: base.empty_residue,
                }
            })
            .collect();
        QuasiPoly {
            set: self.set.clone(),
            modulus: target,
            pieces,
        }
    }
}

/// Number of interpolation points for a set of `k` parts (the piece degree
/// is at most `k - 1`).
fn construction_points(set: &PartSet) -> usize {
    set.len()
}

/// Verification points beyond construction.
fn verification_points(set: &PartSet) -> usize {
    3 * set.len()
}

/// First sample offset: smallest `n` with `modulus * n + residue >=
/// max(A)`, so interpolation starts past the recurrence boundary.
fn sample_offset(set: &PartSet, modulus: u64, residue: u64) -> u64 {
    if residue >= set.max_part() {
        0
    } else {
        (set.max_part() - residue).div_ceil(modulus)
    }
}

/// Table limit needed to construct and verify one piece.
fn table_limit(set: &PartSet, modulus: u64, residue: u64) -> u64 {
    let points = (construction_points(set) + verification_points(set)) as u64;
    modulus * (sample_offset(set, modulus, residue) + points - 1) + residue
}

/// Interpolate and verify a single piece from a prepared table. The table
/// must reach [`table_limit`].
fn piece_from_table(
    table: &PartitionTable,
    modulus: u64,
    residue: u64,
) -> Result<Piece, QuasiError> {
    let set = table.set();
    let k = construction_points(set);
    let extra = verification_points(set);
    let n0 = sample_offset(set, modulus, residue);
    let value_at = |n: u64| -> BigRational {
        BigRational::from_integer(BigInt::from(table.value(modulus * n + residue).clone()))
    };
    let not_poly = || QuasiError::NotPolynomial {
        set: set.to_string(),
        modulus,
        residue,
    };

    let points: Vec<(BigRational, BigRational)> = (n0..n0 + (k + extra) as u64)
        .map(|n| (rat(n as i64), value_at(n)))
        .collect();
    if points.iter().all(|(_, y)| y.is_zero()) {
        // empty residue class; only possible when gcd(A) > 1
        debug_assert!(set.gcd() > 1 && residue % set.gcd() != 0);
        return Ok(Piece {
            poly: RatPoly::zero(),
            empty_residue: true,
        });
    }
    let poly = interpolate(&points, k - 1).map_err(|_| not_poly())?;
    // divisibility is residue-determined, so zero/nonzero values never mix
    debug_assert!(set.gcd() == 1 || residue % set.gcd() == 0);
    // the identity extends to all n >= 0 (proper rational generating
    // function); spot-check below the sampling window
    for n in 0..n0 {
        if poly.evaluate(&rat(n as i64)) != value_at(n) {
            return Err(not_poly());
        }
    }
    Ok(Piece {
        poly,
        empty_residue: false,
    })
}

/// Decompose `P_A` into its `L` residue pieces at the natural modulus
/// `L = lcm(A)`. Total for every part set; empty residue classes (possible
/// only when `gcd(A) > 1`) come back as zero polynomials flagged
/// `empty_residue`.
pub fn decompose(set: &PartSet) -> QuasiPoly {
    let modulus = set.modulus();
    let points = (construction_points(set) + verification_points(set)) as u64;
    let limit = modulus * (1 + points - 1) + modulus;
    let table = count_table(set, limit);
    let pieces = (0..modulus)
        .map(|r| piece_from_table(&table, modulus, r).expect("full-modulus piece is exact"))
        .collect();
    QuasiPoly {
        set: set.clone(),
        modulus,
        pieces,
    }
}

/// Try to express `P_A(M n + r)` as a single polynomial for an arbitrary
/// modulus `M` (not necessarily related to `lcm(A)`).
///
/// The candidate is built by interpolation and screened on extra sample
/// points, then *proved* by gluing: for every class of `n` modulo
/// `lcm(M,L)/M` the candidate must agree symbolically with the
/// corresponding full-modulus piece under the appropriate affine
/// substitution. Only proved pieces are returned.
pub fn try_piece(set: &PartSet, modulus: u64, residue: u64) -> Result<RatPoly, QuasiError> {
    assert!(modulus > 0 && residue < modulus, "need 0 <= r < M");
    let l = set.modulus();
    let t = lcm_u64(modulus, l);
    let classes = t / modulus;
    let stride = t / l;

    // one table covers the candidate construction and every glued piece
    let mut limit = table_limit(set, modulus, residue);
    for class in 0..classes {
        let rho = (modulus * class + residue) % l;
        limit = limit.max(table_limit(set, l, rho));
    }
    let table = count_table(set, limit);

    let candidate = piece_from_table(&table, modulus, residue)?;

    // symbolic gluing proof through the exact full-modulus pieces
    for class in 0..classes {
        let shifted = modulus * class + residue;
        let rho = shifted % l;
        let offset = (shifted - rho) / l;
        let base = piece_from_table(&table, l, rho).expect("full-modulus piece is exact");
        let lhs = candidate
            .poly
            .compose_linear(&rat(classes as i64), &rat(class as i64));
        let rhs = base
            .poly
            .compose_linear(&rat(stride as i64), &rat(offset as i64));
        if lhs != rhs {
            return Err(QuasiError::NotPolynomial {
                set: set.to_string(),
                modulus,
                residue,
            });
        }
    }
    Ok(candidate.poly)
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    use num_integer::Integer;
    a.lcm(&b)
}

/// Closed-form pieces for `A = {1, 2, a}`, `a >= 3`, at modulus `2a`.
///
/// For even `a = 2c`:
/// `P_A(4cn+i) = 2cn^2 + (c + 2*floor(i/2) + 2)n + k_i` with
/// `k_i = floor(i/2) + 1` for `i < 2c` and `k_i = 2*floor(i/2) + 2 - c`
/// for `i >= 2c`. For odd `a = 2c+1`:
/// `P_A(2(2c+1)n+i) = (2c+1)n^2 + (c + i + 2)n + k_i` with
/// `k_i = floor(i/2) + 1` for `i <= 2c` and `k_i = i - c + 1` above.
///
/// The upper-branch constants are the DP-verified ones; they differ from a
/// commonly printed variant (`2*floor(i/2) + 2 - a` resp. `i + 1 - a`),
/// which fails already at `n = 0`.
pub fn closed_form_12a(a: u64) -> QuasiPoly {
    assert!(a >= 3, "closed form requires a >= 3");
    let set = PartSet::new([1, 2, a]).unwrap();
    let modulus = 2 * a;
    let mut pieces = Vec::with_capacity(modulus as usize);
    if a % 2 == 0 {
        let c = (a / 2) as i64;
        for i in 0..modulus as i64 {
            let half = i / 2;
            let constant = if i < 2 * c { half + 1 } else { 2 * half + 2 - c };
            pieces.push(Piece {
                poly: RatPoly::from_ints(&[constant, c + 2 * half + 2, 2 * c]),
                empty_residue: false,
            });
        }
    } else {
        let c = ((a - 1) / 2) as i64;
        for i in 0..modulus as i64 {
            let constant = if i <= 2 * c { i / 2 + 1 } else { i - c + 1 };
            pieces.push(Piece {
                poly: RatPoly::from_ints(&[constant, c + i + 2, 2 * c + 1]),
                empty_residue: false,
            });
        }
    }
    QuasiPoly {
        set,
        modulus,
        pieces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::ratio;

    fn set(parts: &[u64]) -> PartSet {
        PartSet::new(parts.iter().copied()).unwrap()
    }

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_ints(coeffs)
    }

    #[test]
    fn p3_pieces_match_printed_forms() {
        let qp = decompose(&set(&[1, 2, 3]));
        assert_eq!(qp.modulus(), 6);
        let expected = [
            p(&[1, 3, 3]),                    // 3n^2+3n+1
            &p(&[1, 1]) * &p(&[1, 3]),        // (n+1)(3n+1)
            &p(&[1, 1]) * &p(&[2, 3]),        // (n+1)(3n+2)
            (&p(&[1, 1]) * &p(&[1, 1])).scale(&rat(3)), // 3(n+1)^2
            &p(&[1, 1]) * &p(&[4, 3]),        // (n+1)(3n+4)
            &p(&[1, 1]) * &p(&[5, 3]),        // (n+1)(3n+5)
        ];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(&qp.piece(i as u64).poly, want, "residue {i}");
        }
    }

    #[test]
    fn p4_residue_zero_piece() {
        let qp = decompose(&set(&[1, 2, 3, 4]));
        assert_eq!(qp.modulus(), 12);
        assert_eq!(qp.piece(0).poly, p(&[1, 6, 15, 12]));
    }

    #[test]
    fn single_part_set() {
        let qp = decompose(&set(&[1]));
        assert_eq!(qp.modulus(), 1);
        assert_eq!(qp.piece(0).poly, p(&[1]));
    }

    #[test]
    fn gcd_two_set_has_empty_residues() {
        let qp = decompose(&set(&[2, 4]));
        assert_eq!(qp.modulus(), 4);
        assert!(qp.piece(1).empty_residue);
        assert!(qp.piece(3).empty_residue);
        assert!(!qp.piece(0).empty_residue);
        assert!(qp.piece(1).poly.is_zero());
    }

    #[test]
    fn try_piece_sub_modulus_for_p4() {
        // P_4(6n+3) = (3/2)(n+1)^2(n+2)
        let piece = try_piece(&set(&[1, 2, 3, 4]), 6, 3).unwrap();
        let want = (&p(&[1, 1]).pow(2) * &p(&[2, 1])).scale(&ratio(3, 2));
        assert_eq!(piece, want);
    }

    #[test]
    fn try_piece_rejects_non_polynomial_progression() {
        let err = try_piece(&set(&[1, 2, 3]), 3, 0).unwrap_err();
        assert!(matches!(err, QuasiError::NotPolynomial { .. }));
    }

    #[test]
    fn try_piece_coarser_modulus() {
        // modulus 12 = 2 * lcm for {1,2,6}
        let piece = try_piece(&set(&[1, 2, 6]), 12, 0).unwrap();
        assert_eq!(piece, p(&[1, 5, 6]));
    }

    #[test]
    fn closed_form_examples() {
        let even = closed_form_12a(6);
        assert_eq!(even.piece(0).poly, p(&[1, 5, 6]));
        let odd = closed_form_12a(9);
        assert_eq!(odd.piece(0).poly, p(&[1, 6, 9])); // (3n+1)^2
        // the DP-checked constant for a = 5, i = 9 (upper branch)
        let a5 = closed_form_12a(5);
        assert_eq!(a5.piece(9).poly, p(&[8, 13, 5]));
        let table = count_table(&set(&[1, 2, 5]), 10 * 6 + 9);
        for n in 0..=5u64 {
            assert_eq!(
                a5.piece(9).poly.evaluate(&rat(n as i64)),
                BigRational::from_integer(BigInt::from(table.value(10 * n + 9).clone()))
            );
        }
    }

    #[test]
    fn closed_form_matches_decomposition() {
        for a in 3..=12u64 {
            let closed = closed_form_12a(a);
            let direct = decompose(&set(&[1, 2, a]));
            let refined = direct.refine(closed.modulus());
            for i in 0..closed.modulus() {
                assert_eq!(
                    closed.piece(i).poly,
                    refined.piece(i).poly,
                    "a = {a}, residue {i}"
                );
            }
        }
    }

    #[test]
    fn even_a_adjacent_pieces_coincide() {
        for a in [4u64, 6, 10] {
            let qp = closed_form_12a(a);
            for i in (0..qp.modulus()).step_by(2) {
                assert_eq!(qp.piece(i).poly, qp.piece(i + 1).poly, "a={a} i={i}");
            }
        }
    }

    #[test]
    fn odd_a_consecutive_equal_values() {
        // for positive n, P_A(n) = P_A(n+1) exactly at n = 2j, 1 <= j <= (a-3)/2
        for a in [5u64, 7, 9, 11] {
            let table = count_table(&set(&[1, 2, a]), 4 * a + 1);
            let hits: Vec<u64> = (1..=4 * a - 1)
                .filter(|&n| table.value(n) == table.value(n + 1))
                .collect();
            let want: Vec<u64> = (1..=(a - 3) / 2).map(|j| 2 * j).collect();
            assert_eq!(hits, want, "a = {a}");
        }
    }

    #[test]
    fn leading_coefficient_law() {
        // deg = |A|-1 and leading coefficient L^(|A|-1) / ((|A|-1)! prod(A))
        for parts in [&[1u64, 2, 3][..], &[1, 2, 5], &[2, 3, 5], &[1, 3, 4, 5]] {
            let a = set(parts);
            let qp = decompose(&a);
            let k = a.len();
            let fact: i64 = (1..=(k - 1) as i64).product();
            let lead = BigRational::new(
                BigInt::from(a.modulus()).pow((k - 1) as u32),
                BigInt::from(fact) * BigInt::from(a.product()),
            );
            for piece in qp.pieces() {
                assert_eq!(piece.poly.deg(), Some(k - 1));
                assert_eq!(piece.poly.leading().unwrap(), &lead);
            }
        }
    }
}
