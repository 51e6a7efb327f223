use std::fmt;

use super::field::{Fe, Field};
use crate::error::{Error, Result};

/// A polynomial over a [`Field`], coefficients low to high with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<u32> = self.coeffs.iter().map(|c| c.code()).collect();
        write!(f, "Poly{c:?}")
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// From canonical element codes, low degree first.
    pub fn from_codes(field: &Field, codes: &[u64]) -> Result<Self> {
        let coeffs = codes
            .iter()
            .map(|&c| field.elem(c))
            .collect::<Result<_>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: &Field, c: Fe) -> Self {
        Poly::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - root`.
    pub fn linear_root(field: &Field, root: Fe) -> Self {
        Poly::new(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::constant(&self.field, self.field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let d = divisor.degree().ok_or(Error::ZeroInverse)?;
        let lead_inv = f.inv(divisor.coeffs[d])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - d] = c;
            for (k, &dk) in divisor.coeffs.iter().enumerate() {
                rem[top - d + k] = f.sub(rem[top - d + k], f.mul(c, dk));
            }
        }
        rem.truncate(d);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => self.scale(self.field.inv(lead).expect("nonzero lead")),
        }
    }

    /// `f(a x + b)`, the image of `f` under the substitution `x -> a x + b`.
    pub fn substitute_affine(&self, a: Fe, b: Fe) -> Poly {
        let f = &self.field;
        let lin = Poly::new(f, vec![b, a]);
        let mut acc = Poly::zero(f);
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .mul(&lin)
                .expect("same field")
                .add(&Poly::constant(f, c))
                .expect("same field");
        }
        acc
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        let f = &self.field;
        let q = f.order() as u64;
        for d in 1..=deg / 2 {
            for code in 0..q.pow(d as u32) {
                let mut c = code;
                let mut coeffs: Vec<Fe> = (0..d)
                    .map(|_| {
                        let e = Fe::from_code((c % q) as u32);
                        c /= q;
                        e
                    })
                    .collect();
                coeffs.push(f.one());
                if self
                    .rem(&Poly::new(f, coeffs))
                    .expect("nonzero divisor")
                    .is_zero()
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = f5();
        assert_eq!(Poly::zero(&f).eval(f.elem(3).unwrap()), f.zero());
        let g = Poly::from_codes(&f, &[1, 0, 1]).unwrap();
        assert_eq!(g.eval(f.elem(2).unwrap()), f.zero());
        let c = Poly::constant(&f, f.elem(4).unwrap());
        for x in f.elements() {
            assert_eq!(c.eval(x), f.elem(4).unwrap());
        }
    }

    #[test]
    fn division_and_gcd() {
        let f = f5();
        let a = Poly::from_codes(&f, &[2, 3, 0, 1]).unwrap();
        let b = Poly::from_codes(&f, &[1, 2]).unwrap();
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(qt.mul(&b).unwrap().add(&r).unwrap(), a);
        assert!(r.degree().unwrap_or(0) < 1);
        let x1 = Poly::linear_root(&f, f.elem(1).unwrap());
        let x2 = Poly::linear_root(&f, f.elem(2).unwrap());
        let g = x1.mul(&x2).unwrap().gcd(&x1.pow(3)).unwrap();
        assert_eq!(g, x1);
    }

    #[test]
    fn affine_substitution() {
        let f = f5();
        let g = Poly::from_codes(&f, &[1, 2, 3]).unwrap();
        let (a, b) = (f.elem(2).unwrap(), f.elem(4).unwrap());
        let h = g.substitute_affine(a, b);
        for x in f.elements() {
            assert_eq!(h.eval(x), g.eval(f.add(f.mul(a, x), b)));
        }
    }

    #[test]
    fn irreducibility() {
        let f = f5();
        assert!(Poly::from_codes(&f, &[2, 0, 1]).unwrap().is_irreducible()); // x^2 + 2
        assert!(!Poly::from_codes(&f, &[1, 0, 1]).unwrap().is_irreducible()); // roots 2, 3
        assert!(Poly::from_codes(&f, &[3, 1]).unwrap().is_irreducible());
    }

    #[test]
    fn mismatched_fields() {
        let a = Poly::x(&f5());
        let b = Poly::x(&Field::new(7, 1).unwrap());
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
    }
}
