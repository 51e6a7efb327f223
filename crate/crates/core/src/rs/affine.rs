use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{Fe, Field, Poly};

/// `sigma_{a,b}: x -> a x + b` with `a != 0`.
///
/// On rational places it acts by `alpha -> a^{-1} (alpha - b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: Fe,
    b: Fe,
}

impl Serialize for AffineMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a.code(), self.b.code()).serialize(s)
    }
}

impl AffineMap {
    pub fn new(field: &Field, a: Fe, b: Fe) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::invalid("affine map needs a nonzero slope"));
        }
        field.elem(b.code() as u64)?;
        Ok(AffineMap { a, b })
    }

    pub fn identity(field: &Field) -> Self {
        AffineMap {
            a: field.one(),
            b: field.zero(),
        }
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    pub fn b(&self) -> Fe {
        self.b
    }

    pub fn is_identity(&self, field: &Field) -> bool {
        self.a == field.one() && self.b.is_zero()
    }

    /// `sigma(f)(x) = f(a x + b)`.
    pub fn act_on_poly(&self, f: &Poly) -> Poly {
        f.substitute_affine(self.a, self.b)
    }
}

/// Image of the place at `alpha`: `a^{-1} (alpha - b)`.
pub fn affine_apply(field: &Field, s: &AffineMap, alpha: Fe) -> Fe {
    field
        .div(field.sub(alpha, s.b), s.a)
        .expect("slope is nonzero")
}

/// The unique map sending the places at `src` to those at `dst`.
pub fn affine_through(field: &Field, src: (Fe, Fe), dst: (Fe, Fe)) -> Result<AffineMap> {
    if src.0 == src.1 || dst.0 == dst.1 {
        return Err(Error::invalid(
            "affine_through needs two distinct source and two distinct target points",
        ));
    }
    // beta_1 a + b = alpha_1, beta_2 a + b = alpha_2
    let a = field.div(field.sub(src.0, src.1), field.sub(dst.0, dst.1))?;
    let b = field.sub(src.0, field.mul(dst.0, a));
    Ok(AffineMap { a, b })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPoints {
    All,
    Empty,
    One(u32),
}

pub fn affine_fixed_points(field: &Field, s: &AffineMap) -> FixedPoints {
    if s.a == field.one() {
        return if s.b.is_zero() {
            FixedPoints::All
        } else {
            FixedPoints::Empty
        };
    }
    let alpha = field.div(s.b, field.sub(field.one(), s.a)).expect("a != 1");
    FixedPoints::One(alpha.code())
}
