use num_bigint::BigUint;
use num_traits::One;

use super::field::{Fe, Field};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Order of the unit group of `F_r[x] / ((x - a)^(delta - 1))`, namely `r^(delta-2) (r-1)`.
pub fn unit_group_size(r: u64, delta: u32) -> Result<BigUint> {
    if delta < 2 {
        return Err(Error::invalid(format!(
            "delta must be at least 2, got {delta}"
        )));
    }
    Ok(crate::bigmath::pow(r, (delta - 2) as u64) * BigUint::from(r - 1))
}

/// Residues are encoded as `u128`, so `r^deg` must stay below `2^128`.
fn check_encodable(field: &Field, degree: usize) -> Result<()> {
    let bits = (field.order() as f64).log2() * degree as f64;
    if bits >= 127.0 {
        return Err(Error::ScaleCap {
            what: "residue ring size in bits",
            value: bits.ceil() as u128,
            cap: 127,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModulusKind {
    /// `(x - alpha)^exponent`.
    RootPower {
        alpha: Fe,
        exponent: u32,
    },
    Irreducible,
}

/// The ring `F[x] / (f(x))` for a monic modulus `f`, restricted to its units.
#[derive(Debug, Clone)]
pub struct ResidueRing {
    field: Field,
    modulus: Poly,
    kind: ModulusKind,
}

/// A unit of a [`ResidueRing`]: its canonical representative of degree below
/// `deg f`, stored as exactly `deg f` coefficients (low to high).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitResidue {
    coeffs: Vec<Fe>,
}

impl UnitResidue {
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }
}

impl ResidueRing {
    /// Modulus `(x - alpha)^(delta - 1)`.
    pub fn root_power(field: &Field, alpha: Fe, delta: u32) -> Result<Self> {
        if delta < 2 {
            return Err(Error::invalid(format!(
                "delta must be at least 2, got {delta}"
            )));
        }
        let exponent = delta - 1;
        check_encodable(field, exponent as usize)?;
        let modulus = Poly::linear_root(field, alpha).pow(exponent as u64);
        Ok(ResidueRing {
            field: field.clone(),
            modulus,
            kind: ModulusKind::RootPower { alpha, exponent },
        })
    }

    /// Modulus given by an irreducible polynomial, made monic.
    pub fn irreducible(modulus: &Poly) -> Result<Self> {
        if !modulus.is_irreducible() {
            return Err(Error::invalid("residue modulus is not irreducible"));
        }
        check_encodable(modulus.field(), modulus.degree().unwrap_or(0))?;
        Ok(ResidueRing {
            field: modulus.field().clone(),
            modulus: modulus.monic(),
            kind: ModulusKind::Irreducible,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn kind(&self) -> &ModulusKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("modulus is nonzero")
    }

    pub fn unit_count(&self) -> BigUint {
        let r = self.field.order() as u64;
        let e = self.degree() as u64;
        match self.kind {
            ModulusKind::RootPower { .. } => crate::bigmath::pow(r, e - 1) * BigUint::from(r - 1),
            ModulusKind::Irreducible => crate::bigmath::pow(r, e) - BigUint::one(),
        }
    }

    pub fn one(&self) -> UnitResidue {
        let mut coeffs = vec![self.field.zero(); self.degree()];
        coeffs[0] = self.field.one();
        UnitResidue { coeffs }
    }

    /// Canonical residue of `g`, which must be coprime to the modulus.
    pub fn reduce(&self, g: &Poly) -> Result<UnitResidue> {
        if g.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let r = g.rem(&self.modulus)?;
        let unit = match self.kind {
            ModulusKind::RootPower { alpha, .. } => !r.eval(alpha).is_zero(),
            ModulusKind::Irreducible => !r.is_zero(),
        };
        if !unit {
            return Err(Error::NonUnit);
        }
        Ok(self.pad(&r))
    }

    fn pad(&self, r: &Poly) -> UnitResidue {
        let coeffs = (0..self.degree()).map(|i| r.coeff(i)).collect();
        UnitResidue { coeffs }
    }

    pub fn to_poly(&self, a: &UnitResidue) -> Poly {
        Poly::new(&self.field, a.coeffs.clone())
    }

    pub fn mul(&self, a: &UnitResidue, b: &UnitResidue) -> UnitResidue {
        let f = &self.field;
        let e = self.degree();
        let mut prod = vec![f.zero(); 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        let m = self.modulus.coeffs();
        for top in (e..prod.len()).rev() {
            let c = prod[top];
            if c.is_zero() {
                continue;
            }
            for (k, &mk) in m.iter().enumerate().take(e) {
                prod[top - e + k] = f.sub(prod[top - e + k], f.mul(c, mk));
            }
        }
        prod.truncate(e);
        UnitResidue { coeffs: prod }
    }

    pub fn pow(&self, a: &UnitResidue, mut k: u64) -> UnitResidue {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Canonical integer encoding: `sum code(c_i) r^i`.
    pub fn encode(&self, a: &UnitResidue) -> u128 {
        let r = self.field.order() as u128;
        a.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, c| acc * r + c.code() as u128)
    }

    /// Every unit, by exhaustive enumeration of the `r^deg` residues.
    pub fn units(&self) -> Vec<UnitResidue> {
        let r = self.field.order() as u64;
        let e = self.degree() as u32;
        (0..r.pow(e))
            .filter_map(|mut code| {
                let coeffs: Vec<Fe> = (0..e)
                    .map(|_| {
                        let c = Fe::from_code((code % r) as u32);
                        code /= r;
                        c
                    })
                    .collect();
                self.reduce(&Poly::new(&self.field, coeffs)).ok()
            })
            .collect()
    }
}
