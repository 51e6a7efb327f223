use std::fmt;
use std::sync::Arc;

use crate::bigmath::is_prime;
use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of some `GF(p^m)`, stored as its canonical code.
///
/// The code reads as the base-`p` digits of the coefficient vector over the
/// prime field, lowest degree first. Codes are totally ordered, which the
/// greedy constructions use to break ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(u32);

impl Fe {
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Unchecked; callers guarantee `code < q`.
    pub(crate) fn from_code(code: u32) -> Fe {
        Fe(code)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic defining polynomial over GF(p), `m + 1` coefficients low to high.
    modulus: Vec<u32>,
    /// Antilog/log tables for extension fields; empty for prime fields.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field `GF(p^m)`. Cloning is cheap; clones compare equal.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus {:?})",
            self.0.p, self.0.m, self.0.modulus
        )
    }
}

impl Field {
    /// `GF(p^m)` defined by the smallest monic irreducible of degree `m`.
    ///
    /// Candidates `x^m + c_{m-1} x^{m-1} + .. + c_0` are ranked by the integer
    /// `sum c_i p^i`.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::check_order(p, m)?;
        let p32 = p as u32;
        if m == 1 {
            return Ok(Self::build(p32, 1, vec![0, 1]));
        }
        let count = p.pow(m);
        for code in 0..count {
            let mut poly = digits(code, p32, m as usize);
            poly.push(1);
            if gfp_is_irreducible(&poly, p32) {
                return Ok(Self::build(p32, m, poly));
            }
        }
        Err(Error::Internal(format!(
            "no irreducible of degree {m} over GF({p})"
        )))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = crate::bigmath::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, m)
    }

    /// `GF(p^m)` with a caller-supplied monic modulus (coefficients low to high).
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<Self> {
        let m = modulus
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::invalid("empty modulus"))? as u32;
        Self::check_order(p, m)?;
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| c as u64 >= p) {
            return Err(Error::invalid(
                "modulus must be monic with coefficients in 0..p",
            ));
        }
        if !gfp_is_irreducible(&modulus, p as u32) {
            return Err(Error::invalid("modulus is reducible"));
        }
        Ok(Self::build(p as u32, m, modulus))
    }

    fn check_order(p: u64, m: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::ScaleCap {
                what: "field order",
                value: q,
                cap: MAX_FIELD_ORDER as u128,
            });
        }
        Ok(())
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(m);
        let (exp, log) = if m == 1 {
            (Vec::new(), Vec::new())
        } else {
            log_tables(p, q, &modulus)
        };
        Field(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            exp,
            log,
        }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    pub fn elem(&self, code: u64) -> Result<Fe> {
        if code >= self.0.q as u64 {
            return Err(Error::invalid(format!(
                "{code} is not an element of GF({})",
                self.0.q
            )));
        }
        Ok(Fe(code as u32))
    }

    /// Reduces an arbitrary integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        let p = self.0.p as i64;
        Fe(v.rem_euclid(p) as u32)
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.q).map(Fe)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if self.0.m == 1 {
            return Fe(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        if self.0.m == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        let n = self.0.q - 1;
        let e = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Fe(self.0.exp[(if e >= n { e - n } else { e }) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        if self.0.m == 1 {
            return Ok(self.pow(a, (self.0.p - 2) as u64));
        }
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Ok(Fe(self.0.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((code % p as u64) as u32);
        code /= p as u64;
    }
    out
}

const MAX_DEGREE: usize = 20;

fn unpack(mut code: u32, p: u32, m: usize) -> [u32; MAX_DEGREE] {
    let mut d = [0u32; MAX_DEGREE];
    for slot in d.iter_mut().take(m) {
        *slot = code % p;
        code /= p;
    }
    d
}

fn repack(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Multiplication of raw codes modulo the defining polynomial, without tables.
fn raw_mul(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    let (da, db) = (unpack(a, p, m), unpack(b, p, m));
    let p64 = p as u64;
    let mut prod = [0u64; 2 * MAX_DEGREE];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p64;
        }
    }
    for d in (m..2 * m).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (k, &mk) in modulus[..m].iter().enumerate() {
            let idx = d - m + k;
            prod[idx] = (prod[idx] + (p64 - c) * mk as u64) % p64;
        }
        prod[d] = 0;
    }
    prod[..m]
        .iter()
        .rev()
        .fold(0u32, |acc, &c| acc * p + c as u32)
}

fn raw_pow(mut a: u32, mut e: u64, p: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, a, p, modulus);
        }
        a = raw_mul(a, a, p, modulus);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_tables(p: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = q - 1;
    let m = modulus.len() - 1;
    let factors = prime_factors(n as u64);
    let primitive = |g: u32| {
        factors
            .iter()
            .all(|&r| raw_pow(g, n as u64 / r, p, modulus) != 1)
    };
    // the class of x, when primitive, is multiplied by with a shift
    let x = p;
    let g = std::iter::once(x)
        .chain(2..q)
        .find(|&g| primitive(g))
        .expect("the multiplicative group is cyclic");
    let mut exp = Vec::with_capacity(n as usize);
    let mut cur = 1u32;
    let mut digits = unpack(1, p, m);
    for _ in 0..n {
        exp.push(cur);
        if g == x {
            let top = digits[m - 1];
            for i in (1..m).rev() {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for k in 0..m {
                    digits[k] = ((digits[k] as u64 + (p - top) as u64 * modulus[k] as u64)
                        % p as u64) as u32;
                }
            }
            cur = repack(&digits[..m], p);
        } else {
            cur = raw_mul(cur, g, p, modulus);
        }
    }
    let mut log = vec![0u32; q as usize];
    for (i, &e) in exp.iter().enumerate() {
        log[e as usize] = i as u32;
    }
    (exp, log)
}

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree `1..=deg/2`. Coefficients are low to high and the input is monic.
fn gfp_is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if gfp_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn gfp_rem_is_zero(a: &[u32], monic: &[u32], p: u32) -> bool {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    let p = p as u64;
    for top in (d..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (k, &mk) in monic.iter().enumerate() {
            let idx = top - d + k;
            r[idx] = (r[idx] + (p - c) * mk as u64) % p;
        }
    }
    r[..d].iter().all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.order(), 5);
        assert!(f5.is_prime_field());
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(37, 1).unwrap().order(), 37);
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(Field::new(2, 21).unwrap_err().is_scale_cap());
        // x^3 + x + 1 is the first irreducible cubic over GF(2)
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert!(Field::with_modulus(2, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn inverse_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.inv(Fe(3)).unwrap(), Fe(2));
        assert_eq!(f5.inv(Fe(0)), Err(Error::ZeroInverse));
        for a in f5.elements() {
            assert_eq!(f5.mul(a, f5.one()), a);
        }
    }

    #[test]
    fn lagrange_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1), f.one(), "q={q} a={a}");
            }
        }
    }

    #[test]
    fn axioms_exhaustive_small() {
        for q in [4u64, 8, 9, 25] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), Fe(raw_mul(a.0, b.0, f.p(), f.modulus())));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
