//! Exact factorization of integer polynomials into irreducibles over Q.
//!
//! Pipeline: primitive part, squarefree decomposition (Yun), then Zassenhaus
//! on each squarefree part: factor modulo a small odd prime (distinct-degree
//! plus Cantor-Zassenhaus splitting), Hensel-lift to a modulus past the
//! Mignotte bound, and recombine lifted factors by subset search.
//! Instances in this crate are tiny (degree <= ~20, small coefficients).

use super::poly::Polynomial;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

type IntPoly = Polynomial<BigInt>;

// ---------------------------------------------------------------------------
// Arithmetic in Fp[x] for small odd primes.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
struct FpPoly {
    p: u64,
    c: Vec<u64>, // low to high, trimmed, entries < p
}

impl FpPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        for v in &mut c {
            *v %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    fn constant(p: u64, v: u64) -> Self {
        Self::new(p, vec![v])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|v| v.mod_floor(&pb).to_u64().unwrap())
            .collect();
        Self::new(p, c)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    fn lc(&self) -> u64 {
        *self.c.last().expect("leading coefficient of zero")
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = rhs.c.get(i).copied().unwrap_or(0);
            *slot = (a + b) % p;
        }
        Self::new(p, out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = rhs.c.get(i).copied().unwrap_or(0);
            *slot = (a + p - b) % p;
        }
        Self::new(p, out)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                let v = (out[i + j] as u128 + (a as u128) * (b as u128)) % p;
                out[i + j] = v as u64;
            }
        }
        Self::new(self.p, out)
    }

    fn scale(&self, k: u64) -> Self {
        let p = self.p as u128;
        Self::new(
            self.p,
            self.c
                .iter()
                .map(|&v| ((v as u128 * k as u128) % p) as u64)
                .collect(),
        )
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        let dd = d.deg();
        let dinv = inv_mod(d.lc(), p);
        let mut rem = self.clone();
        let qlen = self.c.len().saturating_sub(dd);
        let mut q = vec![0u64; qlen];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = ((rem.lc() as u128 * dinv as u128) % p as u128) as u64;
            let shift = rd - dd;
            q[shift] = factor;
            let mut sub = vec![0u64; shift];
            sub.extend(d.scale(factor).c);
            rem = rem.sub(&Self::new(p, sub));
        }
        (Self::new(p, q), rem)
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*rhs = g.
    fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::constant(p, 1), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = inv_mod(r0.lc(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &v)| ((v as u128 * (i as u128 % p)) % p) as u64)
            .collect();
        Self::new(self.p, c)
    }

    fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::constant(self.p, 1);
        let mut base = self.rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        result
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid over i128.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

/// Deterministic xorshift generator for Cantor-Zassenhaus splitting.
struct SplitRng(u64);

impl SplitRng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Factor a monic squarefree polynomial over Fp (p odd) into monic
/// irreducibles, by distinct-degree then equal-degree splitting.
fn factor_fp_squarefree(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.p;
    let mut result = Vec::new();
    let mut rest = f.monic();
    let mut h = FpPoly::x(p);
    let mut d = 0usize;
    while rest.deg() > 0 {
        d += 1;
        if 2 * d > rest.deg() {
            result.push(rest.clone());
            break;
        }
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = h.sub(&FpPoly::x(p)).gcd(&rest);
        if g.degree().map_or(false, |gd| gd > 0) {
            let mut pieces = vec![g.clone()];
            let mut rng = SplitRng(0x9e3779b97f4a7c15 ^ (d as u64));
            let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let mut split = Vec::new();
            while let Some(piece) = pieces.pop() {
                if piece.deg() == d {
                    split.push(piece);
                    continue;
                }
                // Random w^((p^d-1)/2) - 1 splits with probability >= 1/2.
                let w = FpPoly::new(
                    p,
                    (0..piece.deg()).map(|_| rng.next() % p).collect::<Vec<_>>(),
                );
                if w.is_zero() {
                    pieces.push(piece);
                    continue;
                }
                let b = w
                    .pow_mod(&exp, &piece)
                    .sub(&FpPoly::constant(p, 1))
                    .gcd(&piece);
                match b.degree() {
                    Some(bd) if bd > 0 && bd < piece.deg() => {
                        let (q, r) = piece.div_rem(&b);
                        debug_assert!(r.is_zero());
                        pieces.push(b);
                        pieces.push(q.monic());
                    }
                    _ => pieces.push(piece),
                }
            }
            result.extend(split);
            let (q, r) = rest.div_rem(&g);
            debug_assert!(r.is_zero());
            rest = q.monic();
        }
    }
    result.sort_by(|a, b| (a.c.len(), &a.c).cmp(&(b.c.len(), &b.c)));
    result
}

// ---------------------------------------------------------------------------
// Hensel lifting.
// ---------------------------------------------------------------------------

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    f.map(|c| c.mod_floor(m))
}

fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / BigInt::from(2);
    f.map(|c| {
        let r = c.mod_floor(m);
        if r > half {
            r - m
        } else {
            r
        }
    })
}

fn fp_to_int(f: &FpPoly) -> IntPoly {
    Polynomial::new(f.c.iter().map(|&v| BigInt::from(v)).collect())
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_mod(&(a * b), m)
}

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
/// to the same congruences mod m^2, with h monic throughout.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = reduce_mod(&(f - &(g * h)), &m2);
    let (q, r) = mul_mod(s, &e, &m2).div_rem(h);
    let g_new = reduce_mod(&(&(g + &mul_mod(t, &e, &m2)) + &mul_mod(&q, g, &m2)), &m2);
    let h_new = reduce_mod(&(h + &r), &m2);
    let b = reduce_mod(
        &(&(&mul_mod(s, &g_new, &m2) + &mul_mod(t, &h_new, &m2)) - &Polynomial::constant(BigInt::one())),
        &m2,
    );
    let (c, d) = mul_mod(s, &b, &m2).div_rem(&h_new);
    let s_new = reduce_mod(&(s - &d), &m2);
    let t_new = reduce_mod(&(&(t - &mul_mod(t, &b, &m2)) - &mul_mod(&c, &g_new, &m2)), &m2);
    (g_new, h_new, s_new, t_new)
}

/// Lift a pairwise-coprime monic factorization of monic `f` from mod p to
/// mod `target` (a power of p), recursing on a balanced factor tree.
fn hensel_lift_tree(f: &IntPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![reduce_mod(f, target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let prod = |fs: &[FpPoly]| {
        fs.iter()
            .fold(FpPoly::constant(p, 1), |acc, x| acc.mul(x))
    };
    let g0 = prod(left);
    let h0 = prod(right);
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert_eq!(one.degree(), Some(0));
    let mut g = fp_to_int(&g0);
    let mut h = fp_to_int(&h0);
    let mut s = fp_to_int(&s0);
    let mut t = fp_to_int(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    // m is now a power of p at least target; reduce to keep numbers small.
    g = reduce_mod(&g, target);
    h = reduce_mod(&h, target);
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus.
// ---------------------------------------------------------------------------

const PRIMES: [u64; 15] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Coefficient bound for monic factors of a monic integer polynomial
/// (a generous Landau-Mignotte style bound).
fn factor_coeff_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let sum: BigInt = f.coeffs().iter().map(|c| c.abs()).sum();
    (BigInt::one() << (n + 1)) * (sum + BigInt::one())
}

/// Factor a monic squarefree integer polynomial of degree >= 1 into monic
/// irreducibles over Z.
fn zassenhaus_monic(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().expect("nonzero polynomial");
    debug_assert!(f.is_monic());
    if n == 1 {
        return vec![f.clone()];
    }
    // Pick an odd prime keeping f squarefree, preferring few modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut seen = 0;
    for &p in PRIMES.iter() {
        let fp = FpPoly::from_int_poly(f, p);
        if fp.degree() != Some(n) {
            continue;
        }
        if fp.gcd(&fp.derivative()).deg() != 0 {
            continue;
        }
        let factors = factor_fp_squarefree(&fp);
        let better = best
            .as_ref()
            .map_or(true, |(_, cur)| factors.len() < cur.len());
        if better {
            best = Some((p, factors));
        }
        seen += 1;
        if seen >= 3 || best.as_ref().map_or(false, |(_, v)| v.len() <= 2) {
            break;
        }
    }
    let (p, modular) = best.expect("a squarefree reduction exists for squarefree input");
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = factor_coeff_bound(f);
    let mut target = BigInt::from(p);
    let two_bound = BigInt::from(2) * &bound;
    while target <= two_bound {
        target *= BigInt::from(p);
    }
    let lifted = hensel_lift_tree(f, &modular, p, &target);

    let mut active: Vec<IntPoly> = lifted;
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= active.len() {
        let combos = combinations(active.len(), size);
        for combo in combos {
            let mut cand = Polynomial::constant(BigInt::one());
            for &i in &combo {
                cand = mul_mod(&cand, &active[i], &target);
            }
            let cand = symmetric_mod(&cand, &target);
            let (q, r) = rest.div_rem(&cand);
            if r.is_zero() {
                found.push(cand);
                rest = q;
                let keep: Vec<IntPoly> = active
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                active = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.degree().map_or(false, |d| d >= 1) {
        found.push(rest);
    }
    found.sort_by_key(poly_sort_key);
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn poly_sort_key(f: &IntPoly) -> (usize, Vec<BigInt>) {
    (f.coeffs().len(), f.coeffs().to_vec())
}

/// Squarefree decomposition over Q by Yun's algorithm.
/// Returns (squarefree primitive part, multiplicity) pairs.
fn squarefree_parts(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let fq = f.to_rational();
    let deriv = fq.derivative();
    let g = fq.gcd(&deriv);
    if g.degree() == Some(0) || g.is_zero() {
        return vec![(f.primitive_part(), 1)];
    }
    let mut parts = Vec::new();
    let mut w = fq.div_rem(&g).0;
    let mut y = deriv.div_rem(&g).0;
    let mut i = 1usize;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree().map_or(false, |d| d >= 1) {
                parts.push((w.clear_denominators(), i));
            }
            break;
        }
        let gi = w.gcd(&z);
        if gi.degree().map_or(false, |d| d >= 1) {
            parts.push((gi.clear_denominators(), i));
        }
        w = w.div_rem(&gi).0;
        y = z.div_rem(&gi).0;
        i += 1;
        if w.degree() == Some(0) {
            break;
        }
    }
    parts
}

/// Full factorization of a nonzero integer polynomial into primitive
/// irreducible factors with positive leading coefficients, with
/// multiplicities. The content is discarded.
pub fn factor(f: &Polynomial<BigInt>) -> Vec<(Polynomial<BigInt>, usize)> {
    assert!(!f.is_zero(), "factor of the zero polynomial");
    let mut work = f.primitive_part();
    let mut result: Vec<(IntPoly, usize)> = Vec::new();
    if work.degree() == Some(0) {
        return result;
    }
    // Powers of x.
    let trailing = work.coeffs().iter().take_while(|c| c.is_zero()).count();
    if trailing > 0 {
        result.push((Polynomial::monomial(1, BigInt::one()), trailing));
        let coeffs = work.coeffs()[trailing..].to_vec();
        work = Polynomial::new(coeffs);
    }
    if work.degree() == Some(0) {
        result.sort_by(|a, b| poly_sort_key(&a.0).cmp(&poly_sort_key(&b.0)));
        return result;
    }
    for (part, mult) in squarefree_parts(&work) {
        for irr in factor_squarefree_primitive(&part) {
            result.push((irr, mult));
        }
    }
    result.sort_by(|a, b| poly_sort_key(&a.0).cmp(&poly_sort_key(&b.0)));
    result
}

/// Factor a primitive squarefree polynomial (degree >= 1).
fn factor_squarefree_primitive(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().expect("nonzero");
    if n == 1 {
        return vec![f.clone()];
    }
    if f.is_monic() {
        return zassenhaus_monic(f);
    }
    // Monicization: g(x) = a^(n-1) f(x/a) is monic; factors map back by
    // x -> a x and taking primitive parts.
    let a = f.leading_coeff().unwrap().clone();
    let g = Polynomial::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == n {
                    BigInt::one()
                } else {
                    c * pow_big(&a, n - 1 - i)
                }
            })
            .collect(),
    );
    // A monic factor h of g pulls back to the primitive part of h(a*x).
    zassenhaus_monic(&g)
        .into_iter()
        .map(|h| {
            Polynomial::new(
                h.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * pow_big(&a, j))
                    .collect::<Vec<_>>(),
            )
            .primitive_part()
        })
        .collect()
}

fn pow_big(a: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= a;
    }
    acc
}

/// True when the polynomial is irreducible over Q (degree >= 1).
pub fn is_irreducible(f: &Polynomial<BigInt>) -> bool {
    if f.degree().map_or(true, |d| d == 0) {
        return false;
    }
    let prim = f.primitive_part();
    let factors = factor(&prim);
    factors.len() == 1 && factors[0].1 == 1 && factors[0].0 == prim
}

/// The distinct irreducible factors (the radical's factorization).
pub fn distinct_factors(f: &Polynomial<BigInt>) -> Vec<Polynomial<BigInt>> {
    factor(f).into_iter().map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        Polynomial::from_i64(coeffs)
    }

    #[test]
    fn fp_roundtrip_division() {
        let f = FpPoly::new(7, vec![3, 0, 1, 5]);
        let g = FpPoly::new(7, vec![2, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
    }

    #[test]
    fn fp_factor_splits_completely() {
        // x^2 - 1 = (x-1)(x+1) over F7
        let f = FpPoly::new(7, vec![6, 0, 1]);
        let fac = factor_fp_squarefree(&f);
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].mul(&fac[1]), f);
    }

    #[test]
    fn factors_product_of_quadratics() {
        // (x^2-2)(x^2-3) = x^4 - 5x^2 + 6
        let f = p(&[6, 0, -5, 0, 1]);
        let fac = factor(&f);
        assert_eq!(
            fac,
            vec![(p(&[-3, 0, 1]), 1), (p(&[-2, 0, 1]), 1)]
        );
    }

    #[test]
    fn irreducible_quartics() {
        // minimal polynomial of sqrt(2)+sqrt(3)
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])));
        // x^4 + 1 factors mod every prime but is irreducible over Q
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])));
        assert!(is_irreducible(&p(&[-2, 0, 1])));
        assert!(!is_irreducible(&p(&[-4, 0, 1])));
    }

    #[test]
    fn cyclotomic_factorization_of_x12_minus_1() {
        let f = {
            let mut c = vec![BigInt::zero(); 13];
            c[0] = BigInt::from(-1);
            c[12] = BigInt::from(1);
            Polynomial::new(c)
        };
        let fac = factor(&f);
        // x^12 - 1 = product of cyclotomics for d | 12: six factors.
        assert_eq!(fac.len(), 6);
        assert!(fac.iter().all(|(_, m)| *m == 1));
        let degs: Vec<usize> = fac.iter().map(|(f, _)| f.degree().unwrap()).collect();
        let mut sorted = degs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2, 2, 2, 4]);
    }

    #[test]
    fn multiplicities_detected() {
        // x^2 (x-1)^3 (x^2-2)
        let f = {
            let x = p(&[0, 1]);
            let a = x.pow(2);
            let b = p(&[-1, 1]).pow(3);
            let c = p(&[-2, 0, 1]);
            &(&a * &b) * &c
        };
        let fac = factor(&f);
        assert_eq!(
            fac,
            vec![
                (p(&[-1, 1]), 3),
                (p(&[0, 1]), 2),
                (p(&[-2, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn non_monic_factorization() {
        // (2x+1)(3x-2) = 6x^2 - x - 2
        let f = p(&[-2, -1, 6]);
        let fac = factor(&f);
        assert_eq!(fac.len(), 2);
        let prod = &fac[0].0 * &fac[1].0;
        assert_eq!(prod.primitive_part(), f.primitive_part());
    }
}
