//! Certified real algebraic numbers.
//!
//! A value is an irreducible primitive integer polynomial with positive
//! leading coefficient together with an isolating rational interval. Equality
//! is decidable: two values are equal exactly when they share the minimal
//! polynomial and isolate the same root. Sums and products go through
//! resultants and re-factorization, so every comparison downstream stays
//! exact; no floating point is consulted anywhere.

use super::factor::{distinct_factors, is_irreducible};
use super::matrix::Matrix;
use super::poly::{interpolate, Polynomial};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

type IntPoly = Polynomial<BigInt>;
type RatPoly = Polynomial<BigRational>;

#[derive(Clone)]
pub struct AlgebraicReal {
    minpoly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    root_index: u32,
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.root_index == other.root_index
    }
}

impl Eq for AlgebraicReal {}

impl std::hash::Hash for AlgebraicReal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.minpoly.hash(state);
        self.root_index.hash(state);
    }
}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl AlgebraicReal {
    // -- constructors --------------------------------------------------

    pub fn from_bigint(n: BigInt) -> Self {
        let r = BigRational::from_integer(n);
        Self::from_rational(r)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        // q x - p, primitive with positive leading coefficient.
        let minpoly = Polynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicReal {
            minpoly,
            lo: r.clone(),
            hi: r,
            root_index: 0,
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The positive square root of a positive integer. Perfect squares
    /// collapse to a degree-one minimal polynomial.
    pub fn sqrt_integer(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("sqrt_integer requires n >= 1".into()));
        }
        let s = n.isqrt();
        if s * s == n {
            return Ok(Self::from_integer(s as i64));
        }
        let minpoly = Polynomial::new(vec![BigInt::from(-(n as i128)), BigInt::zero(), BigInt::one()]);
        let lo = BigRational::from_integer(BigInt::from(s));
        let hi = BigRational::from_integer(BigInt::from(s + 1));
        Ok(AlgebraicReal {
            minpoly,
            lo,
            hi,
            root_index: 1, // roots are -sqrt(n) < sqrt(n)
        })
    }

    /// Build from explicit parts, verifying every representation invariant:
    /// primitive irreducible minimal polynomial with positive leading
    /// coefficient, and an interval isolating exactly one real root.
    pub fn from_parts_checked(minpoly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        let Some(deg) = minpoly.degree() else {
            return Err(Error::InvalidArgument("zero minimal polynomial".into()));
        };
        if deg == 0 {
            return Err(Error::InvalidArgument("constant minimal polynomial".into()));
        }
        if minpoly != minpoly.primitive_part() {
            return Err(Error::InvalidArgument(
                "minimal polynomial must be primitive with positive leading coefficient".into(),
            ));
        }
        if lo > hi {
            return Err(Error::InvalidArgument("empty isolating interval".into()));
        }
        if deg == 1 {
            let root = -BigRational::new(minpoly.coeff(0), minpoly.coeff(1));
            if root < lo || root > hi {
                return Err(Error::InvalidArgument(
                    "interval does not contain the root".into(),
                ));
            }
            return Ok(Self::from_rational(root));
        }
        if !is_irreducible(&minpoly) {
            return Err(Error::InvalidArgument(
                "minimal polynomial is reducible".into(),
            ));
        }
        let chain = sturm_chain(&minpoly);
        let inside = count_roots_between(&chain, &lo, &hi);
        if inside != 1 {
            return Err(Error::InvalidArgument(format!(
                "interval isolates {inside} roots, expected exactly 1"
            )));
        }
        let bound = root_bound(&minpoly);
        let below = count_roots_between(&chain, &-bound, &lo);
        Ok(AlgebraicReal {
            minpoly,
            lo,
            hi,
            root_index: below as u32,
        })
    }

    /// All real roots of an irreducible polynomial, ascending.
    pub fn roots_of_irreducible(minpoly: &IntPoly) -> Vec<Self> {
        let deg = minpoly.degree().expect("nonzero polynomial");
        if deg == 1 {
            let root = -BigRational::new(minpoly.coeff(0), minpoly.coeff(1));
            return vec![Self::from_rational(root)];
        }
        isolate_roots(minpoly)
            .into_iter()
            .enumerate()
            .map(|(i, (lo, hi))| AlgebraicReal {
                minpoly: minpoly.clone(),
                lo,
                hi,
                root_index: i as u32,
            })
            .collect()
    }

    // -- accessors ------------------------------------------------------

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    /// Index of this root among the ascending real roots of the minimal
    /// polynomial.
    pub fn root_index(&self) -> u32 {
        self.root_index
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.degree() == 1 {
            Some(-BigRational::new(self.minpoly.coeff(0), self.minpoly.coeff(1)))
        } else {
            None
        }
    }

    /// The integer value, when the number is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.to_rational().map_or(false, |r| r.is_zero())
    }

    // -- interval refinement ---------------------------------------------

    fn refine_step(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        // Irreducible minpoly of degree >= 2 has no rational roots, so the
        // sign at a rational midpoint is never zero.
        let flo = sign_at(&self.minpoly, &self.lo);
        let fmid = sign_at(&self.minpoly, &mid);
        if flo * fmid < 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// A copy whose isolating interval has width at most `width`.
    pub fn refined(&self, width: &BigRational) -> Self {
        let mut out = self.clone();
        while &(&out.hi - &out.lo) > width {
            out.refine_step();
        }
        out
    }

    /// Approximate value as f64 (interval midpoint after refinement).
    pub fn approx_f64(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let eps = BigRational::new(BigInt::one(), BigInt::from(1u64 << 60));
        let fine = self.refined(&eps);
        let mid = (&fine.lo + &fine.hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    // -- comparison -------------------------------------------------------

    pub fn compare(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if let (Some(a), Some(b)) = (self.to_rational(), other.to_rational()) {
            return a.cmp(&b);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.refine_step();
            b.refine_step();
        }
    }

    // -- arithmetic ---------------------------------------------------------

    pub fn neg(&self) -> Self {
        if let Some(r) = self.to_rational() {
            return Self::from_rational(-r);
        }
        let flipped: IntPoly = Polynomial::new(
            self.minpoly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
        .primitive_part();
        let total = count_real_roots(&flipped) as u32;
        AlgebraicReal {
            minpoly: flipped,
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            root_index: total - 1 - self.root_index,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if let Some(r) = self.to_rational() {
            return other.shift(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.shift(&r);
        }
        let candidates = resultant_sum(&self.minpoly, &other.minpoly);
        self.select_root(other, candidates, |a, b| (a.0 + b.0, a.1 + b.1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some(r) = self.to_rational() {
            return other.scale_by(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale_by(&r);
        }
        let candidates = resultant_product(&self.minpoly, &other.minpoly);
        self.select_root(other, candidates, |a, b| {
            let p1 = a.0 * b.0;
            let p2 = a.0 * b.1;
            let p3 = a.1 * b.0;
            let p4 = a.1 * b.1;
            let lo = p1.clone().min(p2.clone()).min(p3.clone()).min(p4.clone());
            let hi = p1.max(p2).max(p3).max(p4);
            (lo, hi)
        })
    }

    /// The square, via the degree-preserving even/odd split:
    /// if f(x) = e(x^2) + x o(x^2) kills a, then e(x)^2 - x o(x)^2 kills a^2.
    pub fn square(&self) -> Self {
        if let Some(r) = self.to_rational() {
            return Self::from_rational(&r * &r);
        }
        let n = self.minpoly.coeffs().len();
        let mut even = Vec::with_capacity(n / 2 + 1);
        let mut odd = Vec::with_capacity(n / 2 + 1);
        for (i, c) in self.minpoly.coeffs().iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        let e = Polynomial::new(even);
        let o = Polynomial::new(odd);
        let x = Polynomial::monomial(1, BigInt::one());
        let h = &(&e * &e) - &(&x * &(&o * &o));
        let candidates = candidate_roots(&h);
        let mut mine = self.clone();
        loop {
            let (sq_lo, sq_hi) = if mine.lo.is_negative() && mine.hi.is_positive() {
                let m = mine.lo.abs().max(mine.hi.abs());
                (BigRational::zero(), &m * &m)
            } else {
                let a = mine.lo.abs().min(mine.hi.abs());
                let b = mine.lo.abs().max(mine.hi.abs());
                (&a * &a, &b * &b)
            };
            if let Some(hit) = unique_candidate(&candidates, &sq_lo, &sq_hi) {
                return hit;
            }
            mine.refine_step();
        }
    }

    fn shift(&self, r: &BigRational) -> Self {
        if let Some(mine) = self.to_rational() {
            return Self::from_rational(&mine + r);
        }
        if r.is_zero() {
            return self.clone();
        }
        // Roots translate by r, preserving order and index.
        let composed = compose_rational(&self.minpoly, &-r.clone());
        AlgebraicReal {
            minpoly: composed,
            lo: &self.lo + r,
            hi: &self.hi + r,
            root_index: self.root_index,
        }
    }

    fn scale_by(&self, r: &BigRational) -> Self {
        if let Some(mine) = self.to_rational() {
            return Self::from_rational(&mine * r);
        }
        if r.is_zero() {
            return Self::zero();
        }
        // Substitute x/r; roots scale by r.
        let deg = self.degree();
        let num = r.numer();
        let den = r.denom();
        // f(x / r) cleared: coefficient i gets den^i * num^(deg - i).
        let coeffs: Vec<BigInt> = self
            .minpoly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * pow_int(den, i) * pow_int(num, deg - i))
            .collect();
        let scaled = Polynomial::new(coeffs).primitive_part();
        let (mut lo, mut hi) = (&self.lo * r, &self.hi * r);
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        let total = count_real_roots(&scaled) as u32;
        let root_index = if r.is_positive() {
            self.root_index
        } else {
            total - 1 - self.root_index
        };
        AlgebraicReal {
            minpoly: scaled,
            lo,
            hi,
            root_index,
        }
    }

    fn select_root(
        &self,
        other: &Self,
        vanishing: IntPoly,
        combine: impl Fn((&BigRational, &BigRational), (&BigRational, &BigRational)) -> (BigRational, BigRational),
    ) -> Self {
        let candidates = candidate_roots(&vanishing);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let (lo, hi) = combine((&a.lo, &a.hi), (&b.lo, &b.hi));
            if let Some(hit) = unique_candidate(&candidates, &lo, &hi) {
                return hit;
            }
            a.refine_step();
            b.refine_step();
        }
    }
}

/// All real roots of every distinct irreducible factor, as algebraic reals.
fn candidate_roots(vanishing: &IntPoly) -> Vec<AlgebraicReal> {
    let mut out = Vec::new();
    for factor in distinct_factors(vanishing) {
        out.extend(AlgebraicReal::roots_of_irreducible(&factor));
    }
    out
}

/// Return the single candidate whose value could lie in [lo, hi], or `None`
/// if the bracket still admits several. Candidate intervals are refined as
/// needed so the test is exact.
fn unique_candidate(
    candidates: &[AlgebraicReal],
    lo: &BigRational,
    hi: &BigRational,
) -> Option<AlgebraicReal> {
    let mut hits = Vec::new();
    for cand in candidates {
        let mut c = cand.clone();
        // Shrink the candidate until it is inside or outside the bracket.
        loop {
            if &c.lo > hi || &c.hi < lo {
                break; // outside
            }
            if &c.lo >= lo && &c.hi <= hi {
                hits.push(cand.clone());
                break;
            }
            if c.lo == c.hi {
                // Rational candidate on the boundary counts as inside.
                hits.push(cand.clone());
                break;
            }
            c.refine_step();
        }
        if hits.len() > 1 {
            return None;
        }
    }
    hits.into_iter().next()
}

// ---------------------------------------------------------------------------
// Sturm machinery.
// ---------------------------------------------------------------------------

fn sign_at(f: &IntPoly, x: &BigRational) -> i32 {
    let v = f.to_rational().eval(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_chain(f: &IntPoly) -> Vec<RatPoly> {
    let mut chain = vec![f.to_rational(), f.to_rational().derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut prev = 0i32;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Number of distinct real roots in (a, b], for a squarefree chain source.
fn count_roots_between(chain: &[RatPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// A rational bound strictly exceeding the absolute value of every root.
fn root_bound(f: &IntPoly) -> BigRational {
    let lc = f.leading_coeff().unwrap().abs();
    let mut max = BigRational::zero();
    for c in f.coeffs() {
        let ratio = BigRational::new(c.abs(), lc.clone());
        if ratio > max {
            max = ratio;
        }
    }
    max + BigRational::from_integer(BigInt::from(2))
}

fn count_real_roots(f: &IntPoly) -> usize {
    if f.degree() == Some(1) {
        return 1;
    }
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    count_roots_between(&chain, &-bound.clone(), &bound)
}

/// Isolating intervals for all real roots of an irreducible polynomial of
/// degree >= 2, ascending. Endpoints are rational and never roots.
fn isolate_roots(f: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots_between(&chain, &lo, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
                // mid is rational, hence not a root of an irreducible
                // polynomial of degree >= 2.
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

// ---------------------------------------------------------------------------
// Resultants via evaluation and interpolation.
// ---------------------------------------------------------------------------

/// Sylvester resultant of two integer polynomials (in one variable).
fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let m = f.degree().expect("nonzero");
    let n = g.degree().expect("nonzero");
    if m == 0 {
        return pow_int(f.leading_coeff().unwrap(), n);
    }
    if n == 0 {
        return pow_int(g.leading_coeff().unwrap(), m);
    }
    let size = m + n;
    let mat = Matrix::from_fn(size, size, |r, c| {
        if r < n {
            // row of f coefficients, high degree first, shifted by r
            let idx = m as isize - (c as isize - r as isize);
            if idx < 0 || idx > m as isize {
                BigInt::zero()
            } else {
                f.coeff(idx as usize)
            }
        } else {
            let rr = r - n;
            let idx = n as isize - (c as isize - rr as isize);
            if idx < 0 || idx > n as isize {
                BigInt::zero()
            } else {
                g.coeff(idx as usize)
            }
        }
    });
    mat.det_bareiss()
}

/// A polynomial vanishing on all sums a + b of roots of f and g:
/// Res_y(f(y), g(x - y)), computed by evaluation and interpolation.
fn resultant_sum(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let deg = m * n;
    let points: Vec<(BigRational, BigRational)> = (0..=deg as i64)
        .map(|t| {
            // g(t - y) as a polynomial in y.
            let sub = Polynomial::new(vec![BigInt::from(t), BigInt::from(-1)]);
            let gty = g.compose(&sub);
            let r = resultant(f, &gty);
            (
                BigRational::from_integer(BigInt::from(t)),
                BigRational::from_integer(r),
            )
        })
        .collect();
    interpolate(&points)
        .clear_denominators()
}

/// A polynomial vanishing on all products a * b of roots of f and g:
/// Res_y(f(y), y^n g(x / y)); g must have nonzero constant coefficient.
fn resultant_product(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    debug_assert!(!g.coeff(0).is_zero());
    let deg = m * n;
    let points: Vec<(BigRational, BigRational)> = (0..=deg as i64)
        .map(|t| {
            // y^n g(t/y) = sum_j g_j t^j y^(n-j)
            let tb = BigInt::from(t);
            let mut coeffs = vec![BigInt::zero(); n + 1];
            for j in 0..=n {
                coeffs[n - j] = g.coeff(j) * pow_int(&tb, j);
            }
            let gt = Polynomial::new(coeffs);
            let r = if gt.is_zero() {
                BigInt::zero()
            } else {
                resultant(f, &gt)
            };
            (
                BigRational::from_integer(tb),
                BigRational::from_integer(r),
            )
        })
        .collect();
    interpolate(&points)
        .clear_denominators()
}

fn compose_rational(f: &IntPoly, shift: &BigRational) -> IntPoly {
    // f(x + shift) over Q, then primitive integer part.
    let fq = f.to_rational();
    let sub = Polynomial::new(vec![shift.clone(), BigRational::one()]);
    fq.compose(&sub).clear_denominators()
}

fn pow_int(a: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= a;
    }
    acc
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(
                f,
                "root#{} of {:?} (~{:.6})",
                self.root_index,
                self.minpoly,
                self.approx_f64()
            ),
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        // positive square roots print exactly
        if self.degree() == 2
            && self.minpoly.coeff(1).is_zero()
            && self.minpoly.coeff(2).is_one()
            && self.root_index == 1
        {
            return write!(f, "sqrt({})", -self.minpoly.coeff(0));
        }
        write!(f, "{:.6}", self.approx_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: u64) -> AlgebraicReal {
        AlgebraicReal::sqrt_integer(n).unwrap()
    }

    #[test]
    fn integer_embedding() {
        assert_eq!(
            AlgebraicReal::from_integer(0).minpoly(),
            &Polynomial::from_i64(&[0, 1])
        );
        assert_eq!(
            AlgebraicReal::from_integer(4).minpoly(),
            &Polynomial::from_i64(&[-4, 1])
        );
        assert_eq!(AlgebraicReal::from_integer(6).to_integer(), Some(BigInt::from(6)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt(2).minpoly(), &Polynomial::from_i64(&[-2, 0, 1]));
        assert_eq!(sqrt(4), AlgebraicReal::from_integer(2));
        assert_eq!(sqrt(3).minpoly(), &Polynomial::from_i64(&[-3, 0, 1]));
        assert!(sqrt(2).to_integer().is_none());
    }

    #[test]
    fn sqrt_squares_back() {
        for n in 1..=50u64 {
            let s = sqrt(n);
            assert_eq!(s.mul(&s), AlgebraicReal::from_integer(n as i64), "n = {n}");
            assert_eq!(s.square(), AlgebraicReal::from_integer(n as i64));
        }
    }

    #[test]
    fn sum_of_roots() {
        // sqrt(2) + sqrt(2) = 2 sqrt(2), minimal polynomial x^2 - 8.
        let s = sqrt(2).add(&sqrt(2));
        assert_eq!(s.minpoly(), &Polynomial::from_i64(&[-8, 0, 1]));
        // Interval-arithmetic oracle at 1e-12.
        let approx = s.approx_f64();
        assert!((approx - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn mixed_sum_and_product() {
        // sqrt(2) + sqrt(3) has minimal polynomial x^4 - 10x^2 + 1.
        let s = sqrt(2).add(&sqrt(3));
        assert_eq!(s.minpoly(), &Polynomial::from_i64(&[1, 0, -10, 0, 1]));
        // sqrt(2) * sqrt(3) = sqrt(6)
        assert_eq!(sqrt(2).mul(&sqrt(3)), sqrt(6));
        // sqrt(2) * sqrt(2) = 2
        assert_eq!(sqrt(2).mul(&sqrt(2)), AlgebraicReal::from_integer(2));
        // 1 + 0 = 1
        assert_eq!(
            AlgebraicReal::one().add(&AlgebraicReal::zero()),
            AlgebraicReal::one()
        );
    }

    #[test]
    fn comparisons() {
        use std::cmp::Ordering::*;
        assert_eq!(sqrt(2).compare(&AlgebraicReal::one()), Greater);
        assert_eq!(sqrt(2).compare(&sqrt(2)), Equal);
        let three_halves = AlgebraicReal::from_rational(BigRational::new(
            BigInt::from(3),
            BigInt::from(2),
        ));
        assert_eq!(sqrt(2).compare(&three_halves), Less);
    }

    #[test]
    fn golden_ratio_arithmetic() {
        // (1+sqrt(5))/2 is the positive root of x^2 - x - 1.
        let phi_poly = Polynomial::from_i64(&[-1, -1, 1]);
        let roots = AlgebraicReal::roots_of_irreducible(&phi_poly);
        assert_eq!(roots.len(), 2);
        let phi = roots[1].clone();
        assert!(phi.compare(&AlgebraicReal::one()) == Ordering::Greater);
        // phi^2 = phi + 1
        assert_eq!(phi.square(), phi.add(&AlgebraicReal::one()));
    }

    #[test]
    fn refined_interval_contains_numeric_root() {
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12));
        for n in [2u64, 3, 5, 7, 11] {
            let s = sqrt(n).refined(&eps);
            let (lo, hi) = s.interval();
            let numeric = (n as f64).sqrt();
            assert!(lo.to_f64().unwrap() <= numeric + 1e-12);
            assert!(hi.to_f64().unwrap() >= numeric - 1e-12);
            assert!(&(hi - lo) <= &eps);
        }
    }

    #[test]
    fn from_parts_validation() {
        let ok = AlgebraicReal::from_parts_checked(
            Polynomial::from_i64(&[-2, 0, 1]),
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::from(2)),
        )
        .unwrap();
        assert_eq!(ok, sqrt(2));
        // reducible polynomial rejected
        assert!(AlgebraicReal::from_parts_checked(
            Polynomial::from_i64(&[-4, 0, 1]),
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::from(3)),
        )
        .is_err());
        // interval with both roots rejected
        assert!(AlgebraicReal::from_parts_checked(
            Polynomial::from_i64(&[-2, 0, 1]),
            BigRational::from_integer(BigInt::from(-2)),
            BigRational::from_integer(BigInt::from(2)),
        )
        .is_err());
    }
}
