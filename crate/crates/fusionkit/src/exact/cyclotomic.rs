//! Exact cyclotomic numbers: elements of Q(zeta_n) over the power basis
//! 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
//! polynomial and always stored at the minimal conductor. Equality is
//! coefficientwise on the canonical form.

use super::algebraic::AlgebraicReal;
use super::matrix::{solve_rational, Matrix};
use super::poly::Polynomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

type IntPoly = Polynomial<BigInt>;

#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>, // fixed length phi(conductor)
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers.
// ---------------------------------------------------------------------------

pub(crate) fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn prime_divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

/// The n-th cyclotomic polynomial, cached.
pub(crate) fn cyclotomic_poly(n: u32) -> IntPoly {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        Polynomial::from_i64(&[-1, 1])
    } else {
        // (x^n - 1) / prod_{d | n, d < n} Phi_d
        let mut num = {
            let mut c = vec![BigInt::zero(); n as usize + 1];
            c[0] = BigInt::from(-1);
            c[n as usize] = BigInt::one();
            Polynomial::new(c)
        };
        for d in divisors(n) {
            if d < n {
                let (q, r) = num.div_rem(&cyclotomic_poly(d));
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    cache
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// Nonzero coefficients of the n-th cyclotomic polynomial as
/// (degree, coefficient) pairs, ascending, in machine integers.
pub(crate) fn cyclotomic_poly_sparse(n: u32) -> Vec<(usize, i64)> {
    cyclotomic_poly(n)
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_i64().expect("cyclotomic coefficients are small here")))
        .collect()
}

// ---------------------------------------------------------------------------
// Raw coefficient-vector arithmetic at a fixed conductor. Used directly by
// hot loops (Verlinde sums) that lift a whole matrix to one conductor first.
// ---------------------------------------------------------------------------

pub(crate) mod raw {
    use super::*;

    /// Reduce a dense coefficient vector (any length, exponent basis) to the
    /// power basis of Q(zeta_n): fold exponents mod n, then take the
    /// remainder modulo Phi_n.
    pub fn reduce(mut v: Vec<BigRational>, n: u32) -> Vec<BigRational> {
        let nu = n as usize;
        let phi = euler_phi(n) as usize;
        if v.len() > nu {
            for i in (nu..v.len()).rev() {
                let c = std::mem::replace(&mut v[i], BigRational::zero());
                if !c.is_zero() {
                    let j = i % nu;
                    v[j] = &v[j] + &c;
                }
            }
            v.truncate(nu);
        }
        if v.len() > phi {
            let phi_poly: Vec<BigRational> = cyclotomic_poly(n)
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            for i in (phi..v.len()).rev() {
                let c = std::mem::replace(&mut v[i], BigRational::zero());
                if c.is_zero() {
                    continue;
                }
                // subtract c * x^(i - phi) * Phi_n  (Phi_n monic of degree phi)
                let shift = i - phi;
                for (j, pc) in phi_poly.iter().enumerate().take(phi) {
                    let delta = &c * pc;
                    v[shift + j] = &v[shift + j] - &delta;
                }
            }
            v.truncate(phi);
        }
        v.resize(phi, BigRational::zero());
        v
    }

    pub fn mul(a: &[BigRational], b: &[BigRational], n: u32) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); a.len() + b.len()];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                acc[i + j] = &acc[i + j] + &(ai * bj);
            }
        }
        reduce(acc, n)
    }

    pub fn add_assign(a: &mut [BigRational], b: &[BigRational]) {
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x = &*x + y;
        }
    }

    pub fn conj(a: &[BigRational], n: u32) -> Vec<BigRational> {
        galois(a, n, n - 1)
    }

    /// Apply the Galois map zeta -> zeta^k (gcd(k, n) = 1).
    pub fn galois(a: &[BigRational], n: u32, k: u32) -> Vec<BigRational> {
        if n == 1 {
            return a.to_vec();
        }
        let nu = n as usize;
        let mut v = vec![BigRational::zero(); nu];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * k as u64 % n as u64) as usize;
                v[e] = &v[e] + c;
            }
        }
        reduce(v, n)
    }

    pub fn is_zero(a: &[BigRational]) -> bool {
        a.iter().all(|c| c.is_zero())
    }
}

// ---------------------------------------------------------------------------
// Rebase matrices (conductor minimization), cached per (n, m).
// ---------------------------------------------------------------------------

fn rebase_matrix(n: u32, m: u32) -> Matrix<BigRational> {
    static CACHE: OnceLock<Mutex<BTreeMap<(u32, u32), Matrix<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(mat) = cache.lock().unwrap().get(&(n, m)) {
        return mat.clone();
    }
    let phi_n = euler_phi(n) as usize;
    let phi_m = euler_phi(m) as usize;
    let step = (n / m) as usize;
    let mut cols = Vec::with_capacity(phi_m);
    for j in 0..phi_m {
        let mut v = vec![BigRational::zero(); j * step + 1];
        v[j * step] = BigRational::one();
        cols.push(raw::reduce(v, n));
    }
    let mat = Matrix::from_fn(phi_n, phi_m, |r, c| cols[c][r].clone());
    cache.lock().unwrap().insert((n, m), mat.clone());
    mat
}

impl Cyclotomic {
    // -- construction ----------------------------------------------------

    fn make(conductor: u32, dense: Vec<BigRational>) -> Self {
        let coeffs = raw::reduce(dense, conductor);
        let mut out = Cyclotomic { conductor, coeffs };
        out.minimize();
        out
    }

    fn minimize(&mut self) {
        'outer: loop {
            if self.conductor == 1 {
                return;
            }
            for p in prime_divisors(self.conductor) {
                let m = self.conductor / p;
                let mat = rebase_matrix(self.conductor, m);
                if let Some(new_coeffs) = solve_rational(&mat, &self.coeffs) {
                    self.conductor = m;
                    self.coeffs = new_coeffs;
                    continue 'outer;
                }
            }
            return;
        }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// zeta_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root of unity order must be >= 1".into()));
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        Ok(Self::make(n, v))
    }

    /// Parse a reduced representation, canonicalizing it.
    pub fn from_parts(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be >= 1".into()));
        }
        if coeffs.len() != euler_phi(conductor) as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for conductor {}, got {}",
                euler_phi(conductor),
                conductor,
                coeffs.len()
            )));
        }
        Ok(Self::make(conductor, coeffs))
    }

    pub(crate) fn from_reduced_vec(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), euler_phi(conductor) as usize);
        let mut out = Cyclotomic { conductor, coeffs };
        out.minimize();
        out
    }

    // -- accessors ---------------------------------------------------------

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        raw::is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Coefficient vector lifted to the power basis of Q(zeta_n) for any
    /// multiple n of the conductor.
    pub(crate) fn lift_coeffs(&self, n: u32) -> Vec<BigRational> {
        assert_eq!(n % self.conductor, 0, "conductor must divide target");
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut v = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i * step] = c.clone();
            }
        }
        raw::reduce(v, n)
    }

    // -- arithmetic -------------------------------------------------------

    fn common_conductor(&self, other: &Self) -> u32 {
        num_integer::lcm(self.conductor as u64, other.conductor as u64) as u32
    }

    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        // Galois maps preserve the conductor, so no re-minimization needed.
        Cyclotomic {
            conductor: self.conductor,
            coeffs: raw::conj(&self.coeffs, self.conductor),
        }
    }

    /// The Galois map zeta_n -> zeta_n^k; k must be coprime to the conductor.
    pub fn galois(&self, k: u32) -> Result<Self> {
        if num_integer::gcd(k as u64, self.conductor as u64) != 1 {
            return Err(Error::InvalidArgument(
                "galois exponent must be coprime to the conductor".into(),
            ));
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: raw::galois(&self.coeffs, self.conductor, k % self.conductor),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.is_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.conductor;
        let phi = self.coeffs.len();
        // Columns are the coefficient vectors of a * zeta^j.
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut v = vec![BigRational::zero(); j + 1];
            v[j] = BigRational::one();
            cols.push(raw::mul(&self.coeffs, &raw::reduce(v, n), n));
        }
        let mat = Matrix::from_fn(phi, phi, |r, c| cols[c][r].clone());
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let x = solve_rational(&mat, &rhs).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_reduced_vec(n, raw::reduce(x, n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Smallest k <= bound with self^k = 1, if any.
    pub fn root_of_unity_order(&self, bound: u32) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut pow = self.clone();
        for k in 1..=bound {
            if pow.is_one() {
                return Some(k);
            }
            pow = &pow * self;
        }
        None
    }

    // -- embeddings ---------------------------------------------------------

    /// Numerical value under the principal embedding zeta_n = e^(2 pi i / n).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (i as f64) / n;
            acc += Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle);
        }
        acc
    }

    /// The nonnegative real square root of an integer, as a cyclotomic
    /// number under the principal embedding.
    pub fn sqrt_integer(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        // n = s^2 * t with t squarefree.
        let mut s = 1u64;
        let mut t = 1u64;
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                s *= p.pow(e / 2);
                if e % 2 == 1 {
                    t *= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            t *= m;
        }
        let mut acc = Self::from_integer(s as i64);
        let mut rest = t;
        let mut q = 2u64;
        while rest > 1 {
            if rest % q == 0 {
                rest /= q;
                acc = &acc * &sqrt_prime(q as u32);
            } else {
                q += 1;
            }
        }
        acc
    }

    /// Embed a real algebraic number of degree at most 2 (an integer,
    /// rational, or quadratic irrationality) as a cyclotomic number.
    pub fn embed_algebraic(a: &AlgebraicReal) -> Result<Self> {
        if let Some(r) = a.to_rational() {
            return Ok(Self::from_rational(r));
        }
        if a.degree() != 2 {
            return Err(Error::Unsupported(format!(
                "cyclotomic embedding only supports algebraic degree <= 2, got {}",
                a.degree()
            )));
        }
        let c0 = a.minpoly().coeff(0);
        let c1 = a.minpoly().coeff(1);
        let c2 = a.minpoly().coeff(2);
        let disc = &c1 * &c1 - BigInt::from(4) * &c2 * &c0;
        let disc_u64 = disc
            .to_u64()
            .ok_or_else(|| Error::Unsupported("discriminant out of range".into()))?;
        let sq = Self::sqrt_integer(disc_u64);
        // Roots (-c1 +- sqrt(disc)) / (2 c2), ascending with the minus sign
        // first since c2 > 0.
        let sign = if a.root_index() == 1 { 1i64 } else { -1 };
        let num = &Self::from_rational(BigRational::from_integer(-c1))
            + &(&sq * &Self::from_integer(sign));
        let den = BigRational::from_integer(BigInt::from(2) * c2);
        Ok(&num * &Self::from_rational(den.recip()))
    }

    /// Sort/dedup key on the canonical form.
    pub fn canonical_key(&self) -> (u32, Vec<(BigInt, BigInt)>) {
        (
            self.conductor,
            self.coeffs
                .iter()
                .map(|c| (c.numer().clone(), c.denom().clone()))
                .collect(),
        )
    }
}

/// sqrt(p) for p prime, under the principal embedding: zeta_8 + zeta_8^-1
/// for p = 2, and the quadratic Gauss sum (times -i when p = 3 mod 4) for
/// odd p.
fn sqrt_prime(p: u32) -> Cyclotomic {
    if p == 2 {
        let mut v = vec![BigRational::zero(); 4];
        v[1] = BigRational::one();
        v[3] = -BigRational::one();
        return Cyclotomic::make(8, v);
    }
    let mut v = vec![BigRational::zero(); p as usize];
    for k in 1..p {
        let ls = legendre(k as u64, p as u64);
        v[k as usize] = BigRational::from_integer(BigInt::from(ls));
    }
    let gauss = Cyclotomic::make(p, v);
    if p % 4 == 1 {
        gauss
    } else {
        // gauss = i * sqrt(p); multiply by -i = zeta_4^3.
        let minus_i = Cyclotomic::root_of_unity(4, 3).unwrap();
        &gauss * &minus_i
    }
}

fn legendre(k: u64, p: u64) -> i64 {
    // k^((p-1)/2) mod p
    let mut acc = 1u64;
    let mut base = k % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else if acc == p - 1 {
        -1
    } else {
        0
    }
}

// ---------------------------------------------------------------------------
// Operator impls.
// ---------------------------------------------------------------------------

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Cyclotomic {
        let n = self.common_conductor(rhs);
        let mut a = self.lift_coeffs(n);
        let b = rhs.lift_coeffs(n);
        raw::add_assign(&mut a, &b);
        Cyclotomic::from_reduced_vec(n, a)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        let n = self.common_conductor(rhs);
        let a = self.lift_coeffs(n);
        let b = rhs.lift_coeffs(n);
        Cyclotomic::from_reduced_vec(n, raw::mul(&a, &b, n))
    }
}

impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Self) -> Cyclotomic {
        self * &rhs.inv().expect("division by zero cyclotomic")
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Self) -> Cyclotomic {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_one(&self) -> bool {
        Cyclotomic::is_one(self)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.is_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = zeta(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn conductor_minimization() {
        // zeta_6 lives in Q(zeta_3)
        assert_eq!(zeta(6, 1).conductor(), 3);
        // zeta_8^2 = i has conductor 4
        assert_eq!(zeta(8, 2).conductor(), 4);
        // zeta_2 = -1 is rational
        assert_eq!(zeta(2, 1), Cyclotomic::from_integer(-1));
        // zeta_5 stays at 5
        assert_eq!(zeta(5, 1).conductor(), 5);
    }

    #[test]
    fn real_cyclotomic_sqrt2() {
        let z8 = zeta(8, 1);
        let s = &z8 + &z8.conj();
        assert_eq!(s, Cyclotomic::sqrt_integer(2));
        // numerical oracle at 1e-12, then exact reconstruction
        let val = s.to_complex();
        assert!((val.re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(val.im.abs() < 1e-12);
        assert_eq!(&s * &s, Cyclotomic::from_integer(2));
    }

    #[test]
    fn sqrt_embeddings_square_correctly() {
        for n in [2u64, 3, 5, 6, 7, 8, 11, 12, 15] {
            let s = Cyclotomic::sqrt_integer(n);
            assert_eq!(&s * &s, Cyclotomic::from_integer(n as i64), "n = {n}");
            let val = s.to_complex();
            assert!((val.re - (n as f64).sqrt()).abs() < 1e-9, "n = {n}");
            assert!(val.im.abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn additive_identity_and_inverse() {
        let a = zeta(12, 5);
        assert_eq!(&a + &Cyclotomic::zero(), a);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Cyclotomic::one());
        assert!(Cyclotomic::zero().inv().is_err());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let a = &zeta(8, 1) + &zeta(12, 7);
        assert_eq!(a.conj().conj(), a);
        // a * conj(a) is real: equal to its own conjugate
        let norm = &a * &a.conj();
        assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn root_of_unity_order_detection() {
        assert_eq!(zeta(16, 1).root_of_unity_order(64), Some(16));
        assert_eq!(zeta(16, 2).root_of_unity_order(64), Some(8));
        assert_eq!(Cyclotomic::from_integer(-1).root_of_unity_order(64), Some(2));
        assert_eq!(Cyclotomic::from_integer(2).root_of_unity_order(64), None);
        let sum = &zeta(4, 1) + &Cyclotomic::one();
        assert_eq!(sum.root_of_unity_order(64), None);
    }

    #[test]
    fn embed_quadratic_algebraic() {
        let s2 = AlgebraicReal::sqrt_integer(2).unwrap();
        assert_eq!(
            Cyclotomic::embed_algebraic(&s2).unwrap(),
            Cyclotomic::sqrt_integer(2)
        );
        let phi_poly = Polynomial::from_i64(&[-1, -1, 1]);
        let roots = AlgebraicReal::roots_of_irreducible(&phi_poly);
        let phi = Cyclotomic::embed_algebraic(&roots[1]).unwrap();
        // golden ratio satisfies x^2 = x + 1
        assert_eq!(&phi * &phi, &phi + &Cyclotomic::one());
        let val = phi.to_complex();
        assert!((val.re - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn galois_permutes_roots() {
        let a = zeta(5, 1);
        let b = a.galois(2).unwrap();
        assert_eq!(b, zeta(5, 2));
        assert!(a.galois(5).is_err());
    }
}
