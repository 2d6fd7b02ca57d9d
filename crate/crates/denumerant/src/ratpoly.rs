//! Dense univariate polynomials over the rationals, exact everywhere.
//!
//! This is the algebraic kernel behind the quasi-polynomial and Diophantine
//! analyses: arithmetic, interpolation, Yun squarefree decomposition,
//! polynomial square roots, and resultant-based discriminants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("duplicate abscissa {0} in interpolation input")]
    DuplicateAbscissa(String),
    #[error("surplus interpolation point ({x}, {y}) is off the fitted curve")]
    InconsistentPoints { x: String, y: String },
    #[error("need at least {need} points for degree {degree}, got {got}")]
    TooFewPoints { need: usize, got: usize, degree: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("discriminant needs degree 2..=4, got {0}")]
    DegreeUnsupported(usize),
}

/// Shorthand for an integer as a `BigRational`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den` as a `BigRational`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Floor square root paired with an exactness check.
pub fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a nonnegative `BigInt`, if it is a perfect square.
pub fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(&n.magnitude().clone());
    (&r * &r == *n.magnitude()).then(|| BigInt::from(r))
}

/// Exact square root of a rational, if it is the square of a rational.
/// The result carries a positive sign.
pub fn exact_sqrt_rat(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_sqrt_int(r.numer())?;
    let den = exact_sqrt_int(r.denom())?;
    Some(BigRational::new(num, den))
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient `i` multiplies `n^i`; the vector never has a trailing zero,
/// and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    /// The monomial `n`.
    pub fn var() -> Self {
        RatPoly::from_coeffs(vec![rat(0), rat(1)])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    /// Build from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 through [`RatPoly::deg`]'s
    /// `None`.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the common `deg(0) = 0` convention for sizing loops.
    pub fn degree_or_zero(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `n^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.clone()))
    }

    /// Evaluate at an integer, returning the integer value if the result is
    /// integral.
    pub fn evaluate_at_int(&self, x: i64) -> BigRational {
        self.evaluate_int(&BigInt::from(x))
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divide every coefficient by the leading one.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Substitute `n -> alpha*n + beta`.
    pub fn compose_linear(&self, alpha: &BigRational, beta: &BigRational) -> RatPoly {
        let inner = RatPoly::from_coeffs(vec![beta.clone(), alpha.clone()]);
        self.compose(&inner)
    }

    /// Substitute `n -> g(n)` (Horner over polynomials).
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &RatPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.deg().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.deg() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            rem = &rem - &RatPoly::from_coeffs(sub);
        }
        (RatPoly::from_coeffs(quot), rem)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Write as `content * primitive` with `primitive` an integer-coefficient
    /// polynomial of content 1 and positive leading coefficient.
    /// Returns `(content, primitive integer coefficients ascending)`.
    pub fn primitive_integer_form(&self) -> (BigRational, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRational::zero(), Vec::new());
        }
        let den = self.denominator_lcm();
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), prim)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients rendered as `"num/den"` strings (JSON form).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())?;
                }
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

/// Unique polynomial of degree at most `degree` through the first
/// `degree + 1` points; any surplus points must lie on it.
pub fn interpolate(
    points: &[(BigRational, BigRational)],
    degree: usize,
) -> Result<RatPoly, PolyError> {
    if points.len() < degree + 1 {
        return Err(PolyError::TooFewPoints {
            need: degree + 1,
            got: points.len(),
            degree,
        });
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(PolyError::DuplicateAbscissa(xi.to_string()));
            }
        }
    }
    // Newton's divided differences on the first degree+1 points.
    let base = &points[..degree + 1];
    let mut table: Vec<BigRational> = base.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs_newton = vec![table[0].clone()];
    for level in 1..base.len() {
        for i in 0..(base.len() - level) {
            let num = &table[i + 1] - &table[i];
            let den = &base[i + level].0 - &base[i].0;
            table[i] = num / den;
        }
        table.truncate(base.len() - level);
        coeffs_newton.push(table[0].clone());
    }
    // expand the Newton form into the monomial basis
    let mut poly = RatPoly::zero();
    let mut basis = RatPoly::one();
    for (k, c) in coeffs_newton.iter().enumerate() {
        poly = &poly + &basis.scale(c);
        if k + 1 < coeffs_newton.len() {
            let shift = RatPoly::from_coeffs(vec![-&base[k].0, rat(1)]);
            basis = &basis * &shift;
        }
    }
    for (x, y) in points.iter().skip(degree + 1) {
        if &poly.evaluate(x) != y {
            return Err(PolyError::InconsistentPoints {
                x: x.to_string(),
                y: y.to_string(),
            });
        }
    }
    Ok(poly)
}

/// Yun's squarefree decomposition over the rationals.
///
/// Returns `(content, factors)` with monic, pairwise coprime, squarefree
/// factors and `content * prod factor_i ^ mult_i` reconstructing the input.
pub fn squarefree_decompose(
    f: &RatPoly,
) -> Result<(BigRational, Vec<(RatPoly, usize)>), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut factors: Vec<(RatPoly, usize)> = Vec::new();
    if f.deg() == Some(0) {
        return Ok((f.coeff(0), factors));
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let mut d = &fp.div_exact(&a0).expect("gcd divides f'") - &b.derivative();
    let mut mult = 1usize;
    while b.deg().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("factor divides");
        let c = d.div_exact(&a).expect("factor divides");
        d = &c - &b.derivative();
        if a.deg().unwrap_or(0) > 0 {
            factors.push((a, mult));
        }
        mult += 1;
    }
    let mut product = RatPoly::one();
    for (g, m) in &factors {
        product = &product * &g.pow(*m);
    }
    let content = f
        .div_exact(&product)
        .expect("squarefree product divides input");
    debug_assert_eq!(content.deg(), Some(0));
    Ok((content.coeff(0), factors))
}

/// Exact polynomial square root: `g` with `g^2 = f` and positive leading
/// coefficient, or `None` when `f` is not a square in `Q[n]`.
pub fn perfect_square_root(f: &RatPoly) -> Option<RatPoly> {
    let d = f.deg()?;
    if d % 2 != 0 {
        return None;
    }
    let half = d / 2;
    let lead = exact_sqrt_rat(f.leading().unwrap())?;
    let mut g = vec![BigRational::zero(); half + 1];
    g[half] = lead;
    let two_lead = &g[half] + &g[half];
    for j in (0..half).rev() {
        // coefficient of n^(j + half) in g^2, with g_j still unknown
        let mut acc = BigRational::zero();
        for i in (j + 1)..=half {
            let l = j + half - i;
            if l > half || l <= j {
                continue;
            }
            acc += &g[i] * &g[l];
        }
        g[j] = (f.coeff(j + half) - acc) / &two_lead;
    }
    let g = RatPoly::from_coeffs(g);
    (&(&g * &g) == f).then_some(g)
}

/// Resultant of two rational polynomials via the Sylvester determinant.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> BigRational {
    let (df, dg) = match (f.deg(), g.deg()) {
        (Some(a), Some(b)) => (a, b),
        _ => return BigRational::zero(),
    };
    if df == 0 {
        return pow_rat(&f.coeff(0), dg);
    }
    if dg == 0 {
        return pow_rat(&g.coeff(0), df);
    }
    let size = df + dg;
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for row in 0..dg {
        for (k, c) in f.coeffs.iter().enumerate() {
            m[row][row + (df - k)] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in g.coeffs.iter().enumerate() {
            m[dg + row][row + (dg - k)] = c.clone();
        }
    }
    determinant(&mut m)
}

fn pow_rat(base: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn determinant(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Discriminant via `(-1)^(d(d-1)/2) * res(f, f') / lc(f)`, for degree 2..=4.
pub fn discriminant(f: &RatPoly) -> Result<BigRational, PolyError> {
    let d = f.deg().unwrap_or(0);
    if !(2..=4).contains(&d) {
        return Err(PolyError::DegreeUnsupported(d));
    }
    let res = resultant(f, &f.derivative());
    let signed = if (d * (d - 1) / 2) % 2 == 0 { res } else { -res };
    Ok(signed / f.leading().unwrap())
}

/// Quadratic discriminant closed form `b^2 - 4ac`; independent route used to
/// cross-check [`discriminant`].
pub fn discriminant_deg2(f: &RatPoly) -> Result<BigRational, PolyError> {
    if f.deg() != Some(2) {
        return Err(PolyError::DegreeUnsupported(f.degree_or_zero()));
    }
    let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    Ok(&b * &b - rat(4) * a * c)
}

/// Cubic discriminant closed form; independent route used to cross-check
/// [`discriminant`].
pub fn discriminant_deg3(f: &RatPoly) -> Result<BigRational, PolyError> {
    if f.deg() != Some(3) {
        return Err(PolyError::DegreeUnsupported(f.degree_or_zero()));
    }
    let (d, c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    Ok(rat(18) * &a * &b * &c * &d - rat(4) * &b * &b * &b * &d + &b * &b * &c * &c
        - rat(4) * &a * &c * &c * &c
        - rat(27) * &a * &a * &d * &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_ints(coeffs)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        let f = RatPoly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(f.deg(), Some(0));
        assert!(RatPoly::from_coeffs(vec![rat(0)]).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        // 3n^2 + 3n + 1 at 0
        assert_eq!(p(&[1, 3, 3]).evaluate(&rat(0)), rat(1));
        // (n+1)(3n+1) at 8 = 9 * 25
        let f = &p(&[1, 1]) * &p(&[1, 3]);
        assert_eq!(f.evaluate(&rat(8)), rat(225));
    }

    #[test]
    fn compose_linear_examples() {
        // n^2 at n -> 2n+1
        let f = p(&[0, 0, 1]).compose_linear(&rat(2), &rat(1));
        assert_eq!(f, p(&[1, 4, 4]));
    }

    #[test]
    fn division_round_trip() {
        let f = p(&[2, 0, -3, 1]);
        let g = p(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
    }

    #[test]
    fn interpolation_examples() {
        // DP samples of the residue-0 piece of P_{1,2,3}: 3n^2+3n+1
        let pts = vec![
            (rat(0), rat(1)),
            (rat(1), rat(7)),
            (rat(2), rat(19)),
        ];
        assert_eq!(interpolate(&pts, 2).unwrap(), p(&[1, 3, 3]));

        let constant = interpolate(&[(rat(0), rat(5))], 0).unwrap();
        assert_eq!(constant, p(&[5]));

        let off = vec![
            (rat(0), rat(0)),
            (rat(1), rat(1)),
            (rat(2), rat(4)),
            (rat(3), rat(10)),
        ];
        assert!(matches!(
            interpolate(&off, 2),
            Err(PolyError::InconsistentPoints { .. })
        ));

        let dup = vec![(rat(0), rat(0)), (rat(0), rat(1)), (rat(2), rat(4))];
        assert!(matches!(
            interpolate(&dup, 2),
            Err(PolyError::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn squarefree_known_shapes() {
        // 108(n+1)(2n+1)^2 -> content 432, monic (n+1), (n+1/2)^2
        let f = &p(&[108]).scale(&rat(1))
            * &(&p(&[1, 1]) * &(&p(&[1, 2]) * &p(&[1, 2])));
        let (content, factors) = squarefree_decompose(&f).unwrap();
        assert_eq!(content, rat(432));
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], (p(&[1, 1]), 1));
        assert_eq!(
            factors[1],
            (RatPoly::from_coeffs(vec![ratio(1, 2), rat(1)]), 2)
        );

        // (4n+1)^2 (15n+1)^2: one squarefree factor of multiplicity 2
        let g = &p(&[1, 4]) * &p(&[1, 15]);
        let (_, factors) = squarefree_decompose(&(&g * &g)).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].1, 2);
        assert_eq!(factors[0].0, g.monic());

        let (content, factors) = squarefree_decompose(&p(&[0, 1])).unwrap();
        assert_eq!(content, rat(1));
        assert_eq!(factors, vec![(p(&[0, 1]), 1)]);

        assert_eq!(
            squarefree_decompose(&RatPoly::zero()),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_factors_are_coprime_and_reconstruct() {
        let f = &(&p(&[1, 1]).pow(3) * &p(&[2, 3]).pow(2)) * &p(&[-5, 0, 1]);
        let (content, factors) = squarefree_decompose(&f).unwrap();
        let mut product = RatPoly::constant(content);
        for (g, m) in &factors {
            product = &product * &g.pow(*m);
        }
        assert_eq!(product, f);
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                assert_eq!(factors[i].0.gcd(&factors[j].0), RatPoly::one());
            }
        }
    }

    #[test]
    fn square_root_examples() {
        let g = &p(&[1, 4]) * &p(&[1, 15]);
        assert_eq!(perfect_square_root(&(&g * &g)).unwrap(), g);
        assert_eq!(perfect_square_root(&p(&[1, 6, 9])).unwrap(), p(&[1, 3]));
        assert_eq!(perfect_square_root(&p(&[1, 3, 3])), None);
        // negated square is not a square
        let neg = (&g * &g).scale(&rat(-1));
        assert_eq!(perfect_square_root(&neg), None);
    }

    #[test]
    fn square_root_normalizes_sign() {
        let g = p(&[3, -2]); // negative leading coefficient
        let root = perfect_square_root(&(&g * &g)).unwrap();
        assert_eq!(root, p(&[-3, 2]));
    }

    #[test]
    fn discriminant_examples() {
        // quadratic: b^2 - 4ac
        let f = p(&[5, 3, 1]);
        assert_eq!(discriminant(&f).unwrap(), rat(9 - 20));
        // double root forces zero
        let g = &p(&[1, 1]) * &p(&[1, 1]);
        assert_eq!(discriminant(&g).unwrap(), rat(0));
        let cubic = &(&p(&[1, 1]) * &p(&[1, 2])) * &p(&[1, 2]);
        assert_eq!(discriminant(&cubic).unwrap(), rat(0));
        assert!(matches!(
            discriminant(&p(&[1, 1])),
            Err(PolyError::DegreeUnsupported(1))
        ));
        assert!(matches!(
            discriminant(&p(&[0, 0, 0, 0, 0, 1])),
            Err(PolyError::DegreeUnsupported(5))
        ));
    }

    #[test]
    fn discriminant_routes_agree() {
        // a fixed sweep of small polynomials plays the role of random inputs
        let mut count = 0;
        for a in [1i64, 2, -3] {
            for b in [-2i64, 0, 5] {
                for c in [1i64, -4, 7] {
                    let f2 = p(&[c, b, a]);
                    assert_eq!(
                        discriminant(&f2).unwrap(),
                        discriminant_deg2(&f2).unwrap()
                    );
                    for d in [-1i64, 3] {
                        let f3 = p(&[d, c, b, a]);
                        assert_eq!(
                            discriminant(&f3).unwrap(),
                            discriminant_deg3(&f3).unwrap()
                        );
                        count += 1;
                    }
                }
            }
        }
        assert!(count >= 50);
    }

    #[test]
    fn resultant_shared_root_is_zero() {
        let f = &p(&[-1, 1]) * &p(&[2, 1]);
        let g = &p(&[-1, 1]) * &p(&[7, 1]);
        assert_eq!(resultant(&f, &g), rat(0));
        let h = p(&[1, 1]);
        assert_eq!(resultant(&f, &h), f.evaluate(&rat(-1)) * rat(1));
    }

    #[test]
    fn primitive_integer_form_round_trip() {
        let f = RatPoly::from_coeffs(vec![ratio(3, 2), rat(-6), ratio(9, 4)]);
        let (content, ints) = f.primitive_integer_form();
        let back = RatPoly::from_coeffs(
            ints.iter()
                .map(|c| BigRational::from_integer(c.clone()) * &content)
                .collect(),
        );
        assert_eq!(back, f);
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        assert_eq!(g, BigInt::one());
        assert!(ints.last().unwrap() > &BigInt::zero());
    }
}
