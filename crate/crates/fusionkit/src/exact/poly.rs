//! Dense univariate polynomials over a generic coefficient type.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector. Generic operations only assume the
//! `num_traits` interfaces; the exact instantiations used throughout the
//! crate are [`crate::IntPoly`] and [`crate::RatPoly`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(deg: usize, c: T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Zero + Clone>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Zero + Clone + Mul<Output = T>> Polynomial<T> {
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Substitute `other` for the variable.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> Self
    where
        T: One,
    {
        let mut base = self.clone();
        let mut acc = Self::constant(T::one());
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

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| nat_mul(c, i))
            .collect();
        Self::new(coeffs)
    }
}

/// `c` added to itself `n` times, by doubling.
fn nat_mul<T: Zero + Clone>(c: &T, n: usize) -> T {
    match n {
        0 => T::zero(),
        1 => c.clone(),
        _ => {
            let half = nat_mul(c, n / 2);
            let twice = half.clone() + half;
            if n % 2 == 1 {
                twice + c.clone()
            } else {
                twice
            }
        }
    }
}

impl<T: Zero + Clone> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl<T: Zero + Clone + Sub<Output = T>> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl<T: Zero + Clone + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Zero + Clone + Mul<Output = T>> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.clone() * b.clone();
                let cell = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = cell + prod;
            }
        }
        Polynomial::new(out)
    }
}

impl<T> Polynomial<T>
where
    T: Zero + One + Clone + PartialEq + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    /// Euclidean division; requires exact coefficient division (a field, or a
    /// monic divisor over an integral domain).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap().clone() / lc.clone();
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let sub = divisor.scale(&factor);
            let mut shifted = vec![T::zero(); shift];
            shifted.extend(sub.coeffs);
            rem = &rem - &Polynomial::new(shifted);
        }
        (Polynomial::new(quot), rem)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let lc = lc.clone();
                self.map(|c| c.clone() / lc.clone())
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Polynomial<BigInt> {
    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the content and normalize the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            g = -g;
        }
        self.map(|c| c / &g)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl Polynomial<BigRational> {
    /// Scale by the lcm of denominators and return the primitive integer part.
    pub fn clear_denominators(&self) -> Polynomial<BigInt> {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Polynomial::new(ints).primitive_part()
    }

    /// Exact conversion; `None` if any coefficient has a denominator.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(Polynomial::new(out))
    }
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Polynomial<BigRational> {
    let mut result = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Polynomial::new(vec![-xj.clone(), BigRational::one()]);
            denom *= xi - xj;
        }
        result = &result + &basis.scale(&(yi / denom));
    }
    result
}

impl<T: fmt::Display + Zero + Clone> fmt::Debug for Polynomial<T> {
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
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 1 + 2x
        let b = p(&[-1, 1]); // x - 1
        assert_eq!(&a * &b, p(&[-1, -1, 2]));
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(7));
    }

    #[test]
    fn derivative_and_compose() {
        let f = p(&[1, 0, -3, 2]); // 2x^3 - 3x^2 + 1
        assert_eq!(f.derivative(), p(&[0, -6, 6]));
        let shifted = f.compose(&p(&[1, 1])); // f(x+1)
        assert_eq!(shifted.eval(&BigInt::zero()), f.eval(&BigInt::one()));
    }

    #[test]
    fn rational_div_rem() {
        let f = p(&[-2, 0, 1]).to_rational(); // x^2 - 2
        let g = p(&[1, 1]).to_rational(); // x + 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(&(&q * &g) + &r, f);
        assert_eq!(r.degree(), Some(0));
    }

    #[test]
    fn gcd_and_primitive() {
        let f = p(&[-2, 0, 1]);
        let g = p(&[-4, 0, 2]);
        assert_eq!(g.primitive_part(), f);
        let h = (&f.to_rational()).gcd(&g.to_rational());
        assert_eq!(h.clear_denominators(), f);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[5, -1, 3]).to_rational();
        let pts: Vec<_> = (0..5)
            .map(|t| {
                let x = BigRational::from_integer(BigInt::from(t));
                let y = f.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&pts), f);
    }
}
