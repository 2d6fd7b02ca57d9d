//! Bivariate polynomials in `m` and `n` over the rationals.
//!
//! A [`BiPoly`] is stored as a polynomial in `m` whose coefficients are
//! [`RatPoly`] values in `n`. This module carries the discriminant pipeline
//! (`Disc_m`, then `Disc_n` of the result), a heuristic but
//! verified-exact bivariate factor search, and `mod p` non-solvability
//! certificates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ratpoly::{
    exact_sqrt_rat, interpolate, rat, squarefree_decompose, PolyError, RatPoly,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BiPolyError {
    #[error("discriminant needs degree 2..=4 in the chosen variable, got {0}")]
    DegreeUnsupported(usize),
    #[error("prime {0} is out of the supported range (must be prime and <= 97)")]
    PrimeOutOfRange(u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Polynomial in two variables, dense in `m` with `RatPoly`-in-`n`
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    // index = power of m; no trailing zero coefficient
    coeffs: Vec<RatPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<RatPoly>) -> Self {
        let mut p = BiPoly { coeffs };
        p.trim();
        p
    }

    /// Embed a polynomial in `m`.
    pub fn from_poly_in_m(f: &RatPoly) -> Self {
        BiPoly::from_coeffs(
            f.coeffs()
                .iter()
                .map(|c| RatPoly::constant(c.clone()))
                .collect(),
        )
    }

    /// Embed a polynomial in `n`.
    pub fn from_poly_in_n(f: &RatPoly) -> Self {
        BiPoly::from_coeffs(vec![f.clone()])
    }

    /// `p(m) - q(n)` — the equal-values difference polynomial.
    pub fn difference(p: &RatPoly, q: &RatPoly) -> Self {
        &BiPoly::from_poly_in_m(p) - &BiPoly::from_poly_in_n(q)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_m(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_n(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.deg()).max()
    }

    /// Coefficient of `m^i` as a polynomial in `n`.
    pub fn coeff_m(&self, i: usize) -> RatPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn coeffs_m(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Leading coefficient in `m`.
    pub fn leading_m(&self) -> Option<&RatPoly> {
        self.coeffs.last()
    }

    /// Substitute a value for `n`, leaving a polynomial in `m`.
    pub fn eval_n(&self, n: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c.evaluate(n)).collect())
    }

    /// Substitute a value for `m`, leaving a polynomial in `n`.
    pub fn eval_m(&self, m: &BigRational) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(m) + c;
        }
        acc
    }

    /// Full evaluation at `(m, n)`.
    pub fn eval(&self, m: &BigRational, n: &BigRational) -> BigRational {
        self.eval_n(n).evaluate(m)
    }

    /// Substitute polynomials in a shared parameter: `F(m(u), n(u))`.
    pub fn compose_univariate(&self, m_of_u: &RatPoly, n_of_u: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m_of_u) + &c.compose(n_of_u);
        }
        acc
    }

    pub fn derivative_m(&self) -> BiPoly {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&rat(i as i64)))
                .collect(),
        )
    }

    /// Exchange the roles of `m` and `n`.
    pub fn swap_vars(&self) -> BiPoly {
        let dn = self.deg_n().unwrap_or(0);
        let cols: Vec<RatPoly> = (0..=dn)
            .map(|j| RatPoly::from_coeffs(self.coeffs.iter().map(|c| c.coeff(j)).collect()))
            .collect();
        BiPoly::from_coeffs(cols)
    }

    pub fn scale(&self, k: &BigRational) -> BiPoly {
        BiPoly::from_coeffs(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    /// Division by a divisor that is monic in `m`; returns `(quotient,
    /// remainder)` with `deg_m(remainder) < deg_m(divisor)`.
    pub fn div_rem_monic_m(&self, divisor: &BiPoly) -> (BiPoly, BiPoly) {
        let dd = divisor.deg_m().expect("nonzero divisor");
        debug_assert!(is_one_poly(divisor.leading_m().unwrap()));
        let mut rem = self.clone();
        let mut quot: Vec<RatPoly> = vec![RatPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.deg_m() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_m().unwrap().clone();
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut sub = vec![RatPoly::zero(); shift];
            for c in &divisor.coeffs {
                sub.push(c * &factor);
            }
            rem = &rem - &BiPoly::from_coeffs(sub);
        }
        (BiPoly::from_coeffs(quot), rem)
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()))
    }

    /// Integer matrix of coefficients `[m-power][n-power]` after clearing
    /// denominators and dividing by the content. Returns the rational
    /// content, so `content * matrix` reconstructs the input.
    pub fn primitive_integer_matrix(&self) -> Option<(BigRational, Vec<Vec<BigInt>>)> {
        if self.is_zero() {
            return None;
        }
        let den = self.denominator_lcm();
        let dn = self.deg_n().unwrap_or(0);
        let mut rows = Vec::with_capacity(self.coeffs.len());
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            let mut row = Vec::with_capacity(dn + 1);
            for j in 0..=dn {
                let q = c.coeff(j);
                let v = q.numer() * (&den / q.denom());
                content = content.gcd(&v);
                row.push(v);
            }
            rows.push(row);
        }
        for row in &mut rows {
            for v in row.iter_mut() {
                *v /= &content;
            }
        }
        Some((BigRational::new(content, den), rows))
    }
}

fn is_one_poly(f: &RatPoly) -> bool {
    f.deg() == Some(0) && f.coeff(0).is_one()
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*m")?,
                _ => write!(f, "({c})*m^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs((0..len).map(|i| &self.coeff_m(i) + &rhs.coeff_m(i)).collect())
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_coeffs((0..len).map(|i| &self.coeff_m(i) - &rhs.coeff_m(i)).collect())
    }
}

impl std::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![RatPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::from_coeffs(coeffs)
    }
}

/// Discriminant with respect to `m`: the resultant of `F` and its
/// `m`-derivative (Sylvester determinant over `Q[n]`, computed by exact
/// fraction-free elimination), divided by the leading coefficient and signed.
pub fn discriminant_in_m(f: &BiPoly) -> Result<RatPoly, BiPolyError> {
    let d = f.deg_m().unwrap_or(0);
    if !(2..=4).contains(&d) {
        return Err(BiPolyError::DegreeUnsupported(d));
    }
    let fp = f.derivative_m();
    let res = sylvester_resultant_polys(&f.coeffs, &fp.coeffs);
    let signed = if (d * (d - 1) / 2) % 2 == 0 {
        res
    } else {
        res.scale(&rat(-1))
    };
    Ok(signed
        .div_exact(f.leading_m().unwrap())
        .expect("leading coefficient divides the resultant"))
}

/// Sylvester resultant of two polynomials whose coefficients live in `Q[n]`,
/// by Bareiss fraction-free elimination (all divisions stay exact in `Q[n]`).
fn sylvester_resultant_polys(f: &[RatPoly], g: &[RatPoly]) -> RatPoly {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    if df == 0 {
        return f[0].pow(dg);
    }
    if dg == 0 {
        return g[0].pow(df);
    }
    let size = df + dg;
    let mut m = vec![vec![RatPoly::zero(); size]; size];
    for row in 0..dg {
        for (k, c) in f.iter().enumerate() {
            m[row][row + (df - k)] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in g.iter().enumerate() {
            m[dg + row][row + (dg - k)] = c.clone();
        }
    }
    bareiss_determinant(&mut m)
}

fn bareiss_determinant(m: &mut [Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return RatPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = RatPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.scale(&rat(-1))
    } else {
        det
    }
}

/// `Disc_n(Disc_m(F))` — zero is a necessary condition for a quadratic-vs-
/// cubic equal-value problem to admit infinitely many integer solutions.
pub fn double_discriminant(f: &BiPoly) -> Result<BigRational, BiPolyError> {
    let inner = discriminant_in_m(f)?;
    crate::ratpoly::discriminant(&inner).map_err(|e| match e {
        PolyError::DegreeUnsupported(d) => BiPolyError::DegreeUnsupported(d),
        _ => BiPolyError::ZeroPolynomial,
    })
}

// ---------------------------------------------------------------------------
// univariate factorization over Q (degrees up to 4)
// ---------------------------------------------------------------------------

/// Monic irreducible factors with multiplicities;
/// `content * prod(factor^mult)` reconstructs the input. `complete = false`
/// is reported when a divisor enumeration had to be cut off.
pub struct UniFactorization {
    pub content: BigRational,
    pub factors: Vec<(RatPoly, usize)>,
    pub complete: bool,
}

pub fn factor_univariate(f: &RatPoly) -> UniFactorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let (content, squarefree) = squarefree_decompose(f).expect("nonzero");
    let mut factors: Vec<(RatPoly, usize)> = Vec::new();
    let mut complete = true;
    for (part, mult) in squarefree {
        let (irr, ok) = factor_squarefree(&part);
        complete &= ok;
        for g in irr {
            factors.push((g, mult));
        }
    }
    factors.sort();
    UniFactorization {
        content,
        factors,
        complete,
    }
}

/// Factor a monic squarefree polynomial of degree <= 4 into monic
/// irreducibles.
fn factor_squarefree(f: &RatPoly) -> (Vec<RatPoly>, bool) {
    let mut out = Vec::new();
    let mut work = f.monic();
    let mut complete = true;

    while !work.is_zero() && work.coeff(0).is_zero() && work.deg() != Some(0) {
        out.push(RatPoly::var());
        work = work.div_exact(&RatPoly::var()).unwrap();
    }

    let (roots, roots_complete) = rational_roots(&work);
    complete &= roots_complete;
    for r in roots {
        let linear = RatPoly::from_coeffs(vec![-&r, rat(1)]);
        while let Some(q) = work.div_exact(&linear) {
            out.push(linear.clone());
            work = q;
        }
    }

    match work.deg() {
        None | Some(0) => {}
        Some(1) => out.push(work.monic()),
        Some(2) => out.extend(split_quadratic(&work)),
        Some(3) => out.push(work.monic()), // no rational root left: irreducible
        Some(4) => {
            let (quads, ok) = split_quartic(&work);
            complete &= ok;
            out.extend(quads);
        }
        Some(d) => {
            debug_assert!(d <= 4, "factorization limited to degree 4, got {d}");
            out.push(work.monic());
            complete = false;
        }
    }
    (out, complete)
}

/// Monic quadratic: split over Q when the discriminant is a rational square.
fn split_quadratic(f: &RatPoly) -> Vec<RatPoly> {
    let b = f.coeff(1);
    let c = f.coeff(0);
    let disc = &b * &b - rat(4) * &c;
    match exact_sqrt_rat(&disc) {
        Some(s) => {
            let two = rat(2);
            let r1 = (-&b + &s) / &two;
            let r2 = (-&b - &s) / &two;
            vec![
                RatPoly::from_coeffs(vec![-&r1, rat(1)]),
                RatPoly::from_coeffs(vec![-&r2, rat(1)]),
            ]
        }
        None => vec![f.clone()],
    }
}

/// Monic quartic with no rational roots: try all 2+2 splits through the
/// resolvent cubic.
fn split_quartic(f: &RatPoly) -> (Vec<RatPoly>, bool) {
    let a3 = f.coeff(3);
    // depress with x = y - a3/4
    let shift = -&a3 / rat(4);
    let depressed = f.compose_linear(&rat(1), &shift);
    let p = depressed.coeff(2);
    let q = depressed.coeff(1);
    let r = depressed.coeff(0);
    let mut complete = true;

    let try_split = |u: &BigRational, v: &BigRational, w: &BigRational| -> Option<Vec<RatPoly>> {
        let g1 = RatPoly::from_coeffs(vec![v.clone(), u.clone(), rat(1)]);
        let g2 = RatPoly::from_coeffs(vec![w.clone(), -u, rat(1)]);
        (&g1 * &g2 == depressed).then(|| {
            vec![
                g1.compose_linear(&rat(1), &(-&shift)).monic(),
                g2.compose_linear(&rat(1), &(-&shift)).monic(),
            ]
        })
    };

    if q.is_zero() {
        // biquadratic: y^4 + p y^2 + r = (y^2 - z1)(y^2 - z2)
        let disc = &p * &p - rat(4) * &r;
        if let Some(s) = exact_sqrt_rat(&disc) {
            let z1 = (-&p + &s) / rat(2);
            let z2 = (-&p - &s) / rat(2);
            if let Some(split) = try_split(&rat(0), &-&z1, &-&z2) {
                let mut out = Vec::new();
                for g in split {
                    out.extend(split_quadratic(&g));
                }
                return (out, complete);
            }
        }
        // (y^2 + uy + v)(y^2 - uy + v) with v^2 = r, u^2 = 2v - p
        if let Some(vroot) = exact_sqrt_rat(&r) {
            for v in [vroot.clone(), -&vroot] {
                let u2 = rat(2) * &v - &p;
                if let Some(u) = exact_sqrt_rat(&u2) {
                    if !u.is_zero() {
                        if let Some(split) = try_split(&u, &v, &v) {
                            let mut out = Vec::new();
                            for g in split {
                                out.extend(split_quadratic(&g));
                            }
                            return (out, complete);
                        }
                    }
                }
            }
        }
        return (vec![f.clone()], complete);
    }

    // resolvent cubic in z = u^2: z^3 + 2p z^2 + (p^2 - 4r) z - q^2
    let resolvent = RatPoly::from_coeffs(vec![
        -(&q * &q),
        &p * &p - rat(4) * &r,
        rat(2) * &p,
        rat(1),
    ]);
    let (roots, ok) = rational_roots(&resolvent);
    complete &= ok;
    for z in roots {
        if z.is_negative() || z.is_zero() {
            continue;
        }
        if let Some(u) = exact_sqrt_rat(&z) {
            let w = (&p + &z + &q / &u) / rat(2);
            let v = (&p + &z - &q / &u) / rat(2);
            if let Some(split) = try_split(&u, &v, &w) {
                let mut out = Vec::new();
                for g in split {
                    out.extend(split_quadratic(&g));
                }
                return (out, complete);
            }
        }
    }
    (vec![f.clone()], complete)
}

/// All rational roots of `f`, with a completeness flag (false when the
/// divisor enumeration hit a cap).
fn rational_roots(f: &RatPoly) -> (Vec<BigRational>, bool) {
    if f.deg().unwrap_or(0) == 0 {
        return (Vec::new(), true);
    }
    let (_, prim) = f.primitive_integer_form();
    let lead = prim.last().unwrap().clone();
    let low = match prim.iter().find(|c| !c.is_zero()) {
        Some(c) => c.clone(),
        None => return (Vec::new(), true),
    };
    let (num_divs, ok1) = divisors(&low);
    let (den_divs, ok2) = divisors(&lead);
    let mut roots = Vec::new();
    for r in &num_divs {
        for s in &den_divs {
            for cand in [
                BigRational::new(r.clone(), s.clone()),
                BigRational::new(-r, s.clone()),
            ] {
                if f.evaluate(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    if f.coeff(0).is_zero() && !roots.contains(&BigRational::zero()) {
        roots.push(BigRational::zero());
    }
    roots.sort();
    (roots, ok1 && ok2)
}

const DIVISOR_CAP: usize = 100_000;

/// Positive divisors of |n|, via trial division plus Pollard rho on u128.
/// The flag is false when the value did not fit or the list was truncated.
fn divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    let mag = n.magnitude();
    if mag.is_zero() {
        return (vec![BigInt::one()], true);
    }
    let small: u128 = match mag.try_into() {
        Ok(v) => v,
        Err(_) => return (vec![BigInt::one(), n.abs()], false),
    };
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut rest = small;
    for p in [2u128, 3, 5, 7] {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
    }
    let mut d = 11u128;
    while d * d <= rest && d < 100_000 {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 2;
    }
    let mut stack = Vec::new();
    if rest > 1 {
        stack.push(rest);
    }
    while let Some(v) = stack.pop() {
        if is_prime_u128(v) {
            match primes.iter_mut().find(|(p, _)| *p == v) {
                Some((_, e)) => *e += 1,
                None => primes.push((v, 1)),
            }
        } else {
            let f = pollard_rho(v);
            stack.push(f);
            stack.push(v / f);
        }
    }
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = 1u128;
            for _ in 0..=e {
                match d.checked_mul(pk) {
                    Some(v) => next.push(v),
                    None => return (divs.into_iter().map(BigInt::from).collect(), false),
                }
                pk = match pk.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
            }
        }
        next.sort_unstable();
        next.dedup();
        divs = next;
        if divs.len() > DIVISOR_CAP {
            divs.truncate(DIVISOR_CAP);
            return (divs.into_iter().map(BigInt::from).collect(), false);
        }
    }
    (divs.into_iter().map(BigInt::from).collect(), true)
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let (Ok(a64), Ok(b64)) = (u64::try_from(a), u64::try_from(b)) {
        if u64::try_from(m).is_ok() {
            return (a64 as u128 * b64 as u128) % m;
        }
    }
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u128(x.abs_diff(y), n);
        }
        if d != n && d != 0 {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// ---------------------------------------------------------------------------
// bivariate factor search
// ---------------------------------------------------------------------------

/// Result of [`bifactor_search`]: `content * prod(factors)` equals the input
/// exactly. `exhaustive = false` flags that some candidate enumeration was
/// cut short, so "no further factor" is not a completeness claim.
pub struct BiFactorization {
    pub content: BigRational,
    pub factors: Vec<BiPoly>,
    pub exhaustive: bool,
}

impl BiFactorization {
    /// Multiply the factorization back together.
    pub fn reconstruct(&self) -> BiPoly {
        let mut acc = BiPoly::from_poly_in_n(&RatPoly::constant(self.content.clone()));
        for f in &self.factors {
            acc = &acc * f;
        }
        acc
    }
}

/// Default number of probe abscissas (`n = 0..6`).
pub const DEFAULT_PROBES: usize = 6;

const COMBO_CAP: usize = 50_000;

/// Heuristic bivariate factorization: factor `F(m, n0)` over Q at several
/// integer probes `n0`, lift candidate factors by interpolating their
/// coefficients in `n`, and keep only candidates verified by exact bivariate
/// division. Every returned factorization is exact; lower-degree factors are
/// preferred when several lifts verify.
pub fn bifactor_search(f: &BiPoly, probes: usize) -> BiFactorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let probes = probes.max(f.deg_n().unwrap_or(0) + 2);

    // degenerate inputs short-circuit to the univariate routine
    if f.deg_m() == Some(0) {
        let uni = factor_univariate(&f.coeff_m(0));
        return BiFactorization {
            content: uni.content,
            factors: uni
                .factors
                .iter()
                .flat_map(|(g, m)| std::iter::repeat(g.clone()).take(*m))
                .map(|g| BiPoly::from_poly_in_n(&g))
                .collect(),
            exhaustive: uni.complete,
        };
    }
    if f.deg_n().is_none() || f.deg_n() == Some(0) {
        let uni = factor_univariate(&f.swap_vars().coeff_m(0));
        return BiFactorization {
            content: uni.content,
            factors: uni
                .factors
                .iter()
                .flat_map(|(g, m)| std::iter::repeat(g.clone()).take(*m))
                .map(|g| BiPoly::from_poly_in_m(&g))
                .collect(),
            exhaustive: uni.complete,
        };
    }

    let lead = f.leading_m().unwrap().clone();
    if lead.deg() != Some(0) {
        // leading coefficient depends on n; try the swapped orientation
        if f.swap_vars().leading_m().unwrap().deg() == Some(0) {
            let swapped = bifactor_search(&f.swap_vars(), probes);
            return BiFactorization {
                content: swapped.content,
                factors: swapped.factors.iter().map(|g| g.swap_vars()).collect(),
                exhaustive: swapped.exhaustive,
            };
        }
        return BiFactorization {
            content: BigRational::one(),
            factors: vec![f.clone()],
            exhaustive: false,
        };
    }

    let content = lead.coeff(0);
    let monic = f.scale(&content.recip());
    let mut exhaustive = true;
    let mut factors = Vec::new();
    let mut stack = vec![monic];
    while let Some(g) = stack.pop() {
        if g.deg_m() == Some(0) {
            continue;
        }
        match find_monic_factor(&g, probes, &mut exhaustive) {
            Some(h) => {
                let (q, r) = g.div_rem_monic_m(&h);
                debug_assert!(r.is_zero());
                stack.push(h);
                stack.push(q);
            }
            None => factors.push(g),
        }
    }
    factors.sort_by_key(|g| (g.deg_m(), format!("{g}")));
    BiFactorization {
        content,
        factors,
        exhaustive,
    }
}

/// Search for a proper monic-in-`m` factor of `g` (monic in `m`), lowest
/// `m`-degree first.
fn find_monic_factor(g: &BiPoly, probes: usize, exhaustive: &mut bool) -> Option<BiPoly> {
    let dm = g.deg_m().unwrap();
    if dm <= 1 {
        return None;
    }
    let dn = g.deg_n().unwrap_or(0);

    let mut slices: Vec<Vec<(RatPoly, usize)>> = Vec::with_capacity(probes);
    for t in 0..probes {
        let slice = g.eval_n(&rat(t as i64));
        let uni = factor_univariate(&slice);
        *exhaustive &= uni.complete;
        slices.push(uni.factors);
    }

    for e in 1..dm {
        let mut candidates: Vec<Vec<RatPoly>> = Vec::with_capacity(probes);
        for slice in &slices {
            let mut cands = degree_e_products(slice, e);
            cands.sort();
            cands.dedup();
            if cands.is_empty() {
                break;
            }
            candidates.push(cands);
        }
        if candidates.len() < probes {
            continue;
        }
        let combos: usize = candidates.iter().map(|c| c.len()).product();
        if combos > COMBO_CAP {
            *exhaustive = false;
            continue;
        }
        let mut index = vec![0usize; probes];
        loop {
            if let Some(candidate) = lift_candidate(&candidates, &index, e, dn) {
                let (_, r) = g.div_rem_monic_m(&candidate);
                if r.is_zero() {
                    return Some(candidate);
                }
            }
            let mut pos = 0;
            loop {
                if pos == probes {
                    break;
                }
                index[pos] += 1;
                if index[pos] < candidates[pos].len() {
                    break;
                }
                index[pos] = 0;
                pos += 1;
            }
            if pos == probes {
                break;
            }
        }
    }
    None
}

/// All distinct monic products of sub-multisets of `factors` with total
/// degree `e`.
fn degree_e_products(factors: &[(RatPoly, usize)], e: usize) -> Vec<RatPoly> {
    fn go(
        factors: &[(RatPoly, usize)],
        idx: usize,
        remaining: usize,
        acc: &RatPoly,
        out: &mut Vec<RatPoly>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        if idx == factors.len() {
            return;
        }
        let (g, mult) = &factors[idx];
        let d = g.deg().unwrap_or(0);
        let mut power = RatPoly::one();
        for k in 0..=*mult {
            if d == 0 || k * d > remaining {
                if k == 0 {
                    go(factors, idx + 1, remaining, acc, out);
                }
                break;
            }
            go(factors, idx + 1, remaining - k * d, &(acc * &power), out);
            power = &power * g;
        }
    }
    let mut out = Vec::new();
    go(factors, 0, e, &RatPoly::one(), &mut out);
    out
}

/// Interpolate a candidate bivariate factor from one slice-candidate per
/// probe; rejects immediately when an interpolated coefficient exceeds the
/// `n`-degree bound.
fn lift_candidate(
    candidates: &[Vec<RatPoly>],
    index: &[usize],
    e: usize,
    dn_bound: usize,
) -> Option<BiPoly> {
    let probes = candidates.len();
    let mut coeffs: Vec<RatPoly> = Vec::with_capacity(e + 1);
    for j in 0..e {
        let pts: Vec<(BigRational, BigRational)> = (0..probes)
            .map(|t| (rat(t as i64), candidates[t][index[t]].coeff(j)))
            .collect();
        let poly = interpolate(&pts, probes - 1).ok()?;
        if poly.deg().unwrap_or(0) > dn_bound {
            return None;
        }
        coeffs.push(poly);
    }
    coeffs.push(RatPoly::one());
    Some(BiPoly::from_coeffs(coeffs))
}

// ---------------------------------------------------------------------------
// mod-p obstructions
// ---------------------------------------------------------------------------

/// Certificate that `F(m, n) = 0` has no solutions modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPCertificate {
    pub prime: u64,
    pub no_solutions: bool,
}

/// Exhaustively test `F = 0 (mod p)` over all of `(Z/p)^2` after clearing
/// denominators and content. True iff no residue pair is a root.
pub fn no_solutions_mod_p(f: &BiPoly, p: u64) -> Result<ModPCertificate, BiPolyError> {
    if p > 97 || !is_prime_u128(p as u128) {
        return Err(BiPolyError::PrimeOutOfRange(p));
    }
    let (_, matrix) = f
        .primitive_integer_matrix()
        .ok_or(BiPolyError::ZeroPolynomial)?;
    let pb = BigInt::from(p);
    let rows: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| u64::try_from(c.mod_floor(&pb)).expect("residue fits"))
                .collect()
        })
        .collect();
    for m in 0..p {
        for n in 0..p {
            let mut acc = 0u64;
            let mut mpow = 1u64;
            for row in &rows {
                let mut inner = 0u64;
                let mut npow = 1u64;
                for &c in row {
                    inner = (inner + c * npow) % p;
                    npow = npow * n % p;
                }
                acc = (acc + inner * mpow) % p;
                mpow = mpow * m % p;
            }
            if acc == 0 {
                return Ok(ModPCertificate {
                    prime: p,
                    no_solutions: false,
                });
            }
        }
    }
    Ok(ModPCertificate {
        prime: p,
        no_solutions: true,
    })
}
