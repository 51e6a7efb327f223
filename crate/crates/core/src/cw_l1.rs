//! Constant-weight L1 codes by pigeonhole over a residue ring.
//!
//! Each composition `a` of the Johnson space is sent to the unit
//! `prod_i (x - alpha_i)^(a_i)` of `F_r[x] / (f)`. Two compositions in the same
//! fiber are at L1 distance at least `2 delta`, so the largest fiber is a code.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::code::{min_pairwise, Code};
use crate::error::{Error, Result};
use crate::galois::{Fe, Field, Poly, ResidueRing, UnitResidue};
use crate::metrics::{johnson_size, johnson_space, l1_len, Composition};

/// Largest Johnson space the construction will enumerate.
pub const MAX_COMPOSITIONS: u128 = 10_000_000;

/// Parameters of the construction. Unset fields are filled in by [`L1Params::resolve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L1Params {
    pub q: u32,
    pub n: u32,
    pub delta: u32,
    /// Size of the residue field; the smallest prime above `q` when unset.
    pub r: Option<u64>,
    /// Root of the modulus `(x - alpha)^(delta - 1)`, as an element code.
    pub alpha: u64,
    /// Irreducible modulus of degree `delta - 1` (codes, low to high), replacing the root power.
    pub irreducible_modulus: Option<Vec<u64>>,
}

impl L1Params {
    pub fn new(q: u32, n: u32, delta: u32) -> Self {
        L1Params {
            q,
            n,
            delta,
            r: None,
            alpha: 0,
            irreducible_modulus: None,
        }
    }

    pub fn with_r(mut self, r: u64) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_alpha(mut self, alpha: u64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_irreducible_modulus(mut self, codes: Vec<u64>) -> Self {
        self.irreducible_modulus = Some(codes);
        self
    }

    /// Validates the parameters and builds the ring and evaluation points.
    pub fn resolve(&self) -> Result<L1Setup> {
        let (q, delta) = (self.q, self.delta);
        if q < 2 {
            return Err(Error::invalid(format!("q must be at least 2, got {q}")));
        }
        if delta < 2 {
            return Err(Error::invalid(format!(
                "delta must be at least 2, got {delta}"
            )));
        }
        if self.n < delta {
            return Err(Error::invalid(format!(
                "weight n = {} is smaller than delta = {delta}",
                self.n
            )));
        }
        match &self.irreducible_modulus {
            None => {
                let r = match self.r {
                    Some(r) => r,
                    None => auto_r(q),
                };
                let field = Field::of_order(r)?;
                if r < q as u64 + 1 {
                    return Err(Error::invalid(format!(
                        "r = {r} must be at least q + 1 = {}",
                        q + 1
                    )));
                }
                let alpha = field.elem(self.alpha)?;
                let ring = ResidueRing::root_power(&field, alpha, delta)?;
                let alphas = field
                    .elements()
                    .filter(|&e| e != alpha)
                    .take(q as usize)
                    .collect();
                Ok(L1Setup {
                    ring,
                    alphas,
                    alpha: Some(alpha),
                })
            }
            Some(codes) => {
                let r = self.r.unwrap_or(q as u64);
                let field = Field::of_order(r)?;
                if r < q as u64 {
                    return Err(Error::invalid(format!("r = {r} must be at least q = {q}")));
                }
                let modulus = Poly::from_codes(&field, codes)?;
                if modulus.degree() != Some(delta as usize - 1) {
                    return Err(Error::invalid(format!(
                        "modulus must have degree delta - 1 = {}",
                        delta - 1
                    )));
                }
                if delta == 2 {
                    return Err(Error::invalid("an irreducible modulus needs delta >= 3"));
                }
                let ring = ResidueRing::irreducible(&modulus)?;
                let alphas = field.elements().take(q as usize).collect();
                Ok(L1Setup {
                    ring,
                    alphas,
                    alpha: None,
                })
            }
        }
    }
}

/// Smallest prime in `[q + 1, 2(q + 1)]`.
pub fn auto_r(q: u32) -> u64 {
    crate::bigmath::next_prime_above(q as u64)
}

/// Resolved ring and evaluation points.
#[derive(Debug, Clone)]
pub struct L1Setup {
    pub ring: ResidueRing,
    pub alphas: Vec<Fe>,
    pub alpha: Option<Fe>,
}

impl L1Setup {
    pub fn r(&self) -> u64 {
        self.ring.field().order() as u64
    }

    fn linear_units(&self) -> Result<Vec<UnitResidue>> {
        let f = self.ring.field();
        self.alphas
            .iter()
            .map(|&a| self.ring.reduce(&Poly::linear_root(f, a)))
            .collect()
    }
}

/// `prod_i (x - alpha_i)^(a_i)` in the residue ring.
pub fn pi_map(a: &Composition, setup: &L1Setup) -> Result<UnitResidue> {
    if a.q() as usize != setup.alphas.len() {
        return Err(Error::invalid(format!(
            "composition has {} bins, expected {}",
            a.q(),
            setup.alphas.len()
        )));
    }
    let ring = &setup.ring;
    let units = setup.linear_units()?;
    Ok(a.counts()
        .iter()
        .zip(&units)
        .fold(ring.one(), |acc, (&c, u)| {
            ring.mul(&acc, &ring.pow(u, c as u64))
        }))
}

#[derive(Debug, Clone, Serialize)]
pub struct L1Report {
    pub q: u32,
    pub n: u32,
    pub delta: u32,
    pub r: u64,
    pub alpha: Option<u32>,
    pub alphas: Vec<u32>,
    pub modulus: Vec<u32>,
    /// Coefficients of the chosen fiber's unit, low to high.
    pub bucket_unit: Vec<u32>,
    pub size: u64,
    pub johnson_size: u64,
    pub unit_group_size: String,
    pub guaranteed_lower_bound: u64,
    /// `None` when the code has fewer than two members.
    pub verified_min_l1: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct L1Construction {
    pub code: Code,
    pub report: L1Report,
    /// Fiber sizes keyed by residue encoding.
    pub bucket_sizes: HashMap<u128, u64>,
}

/// Largest fiber of the residue map over `J_q(n)`, ties to the smallest residue encoding.
pub fn construct_l1(params: &L1Params) -> Result<L1Construction> {
    let setup = params.resolve()?;
    let total = johnson_size(params.q, params.n);
    if total > MAX_COMPOSITIONS {
        return Err(Error::ScaleCap {
            what: "compositions",
            value: total,
            cap: MAX_COMPOSITIONS,
        });
    }
    let ring = &setup.ring;
    let units = setup.linear_units()?;
    // powers[i][c] = (x - alpha_i)^c
    let powers: Vec<Vec<UnitResidue>> = units
        .iter()
        .map(|u| {
            std::iter::successors(Some(ring.one()), |p| Some(ring.mul(p, u)))
                .take(params.n as usize + 1)
                .collect()
        })
        .collect();
    let image = |a: &Composition| {
        let key = a
            .counts()
            .iter()
            .enumerate()
            .fold(ring.one(), |acc, (i, &c)| {
                ring.mul(&acc, &powers[i][c as usize])
            });
        ring.encode(&key)
    };

    let mut bucket_sizes: HashMap<u128, u64> = HashMap::new();
    for a in johnson_space(params.q, params.n) {
        *bucket_sizes.entry(image(&a)).or_default() += 1;
    }
    let (&best, _) = bucket_sizes
        .iter()
        .max_by(|(ka, ca), (kb, cb)| ca.cmp(cb).then(kb.cmp(ka)))
        .ok_or_else(|| Error::Internal("empty Johnson space".into()))?;
    let members: Vec<Composition> = johnson_space(params.q, params.n)
        .filter(|a| image(a) == best)
        .collect();

    let unit = pi_map(&members[0], &setup)?;
    let verified_min_l1 = match min_pairwise(
        &members.iter().map(Composition::counts).collect::<Vec<_>>(),
        l1_len,
    ) {
        Ok(md) => Some(md.distance),
        Err(Error::UndefinedDistance(_)) => None,
        Err(e) => return Err(e),
    };
    let units_total = ring.unit_count();
    let guaranteed = crate::bigmath::div_ceil(&BigUint::from(total), &units_total);
    let report = L1Report {
        q: params.q,
        n: params.n,
        delta: params.delta,
        r: setup.r(),
        alpha: setup.alpha.map(Fe::code),
        alphas: setup.alphas.iter().map(|a| a.code()).collect(),
        modulus: ring.modulus().codes(),
        bucket_unit: unit.coeffs().iter().map(|c| c.code()).collect(),
        size: members.len() as u64,
        johnson_size: total as u64,
        unit_group_size: units_total.to_string(),
        guaranteed_lower_bound: guaranteed.to_u64().unwrap_or(u64::MAX),
        verified_min_l1,
    };
    let code = Code::cwl1(params.q, params.n, members)?;
    Ok(L1Construction {
        code,
        report,
        bucket_sizes,
    })
}

/// Outcome of [`verify_l1_code`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct L1Verification {
    pub ok: bool,
    /// First pair (in lexicographic order) closer than `2 delta`, with its distance.
    pub witness: Option<(usize, usize, u64)>,
}

/// Checks that every pair of a CWL1 code is at L1 distance at least `2 delta`.
pub fn verify_l1_code(code: &Code, delta: u32) -> Result<L1Verification> {
    let comps = code.compositions().ok_or(Error::IncompatibleMetric {
        metric: "L1",
        kind: code.kind().tag(),
    })?;
    let rows: Vec<&[u32]> = comps.iter().map(Composition::counts).collect();
    let md = match min_pairwise(&rows, l1_len) {
        Ok(md) => md,
        Err(Error::UndefinedDistance(_)) => {
            return Ok(L1Verification {
                ok: true,
                witness: None,
            })
        }
        Err(e) => return Err(e),
    };
    if md.distance >= 2 * delta as u64 {
        return Ok(L1Verification {
            ok: true,
            witness: None,
        });
    }
    // report the first violating pair rather than the first minimizing one
    let bound = 2 * delta as u64;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let d = l1_len(rows[i], rows[j]);
            if d < bound {
                return Ok(L1Verification {
                    ok: false,
                    witness: Some((i, j, d)),
                });
            }
        }
    }
    Err(Error::Internal(
        "minimum below bound but no violating pair".into(),
    ))
}

/// `prod_{u_i > v_i} (x - alpha_i)^(u_i - v_i) - prod_{v_i > u_i} (x - alpha_i)^(v_i - u_i)`.
///
/// When `u` and `v` share a fiber this is divisible by the ring modulus.
pub fn difference_polynomial(u: &Composition, v: &Composition, setup: &L1Setup) -> Result<Poly> {
    if u.q() != v.q() || u.q() as usize != setup.alphas.len() {
        return Err(Error::invalid(
            "composition bin counts differ from the setup",
        ));
    }
    let f = setup.ring.field();
    let one = Poly::constant(f, f.one());
    let (mut pos, mut neg) = (one.clone(), one);
    for ((&a, &b), &alpha) in u.counts().iter().zip(v.counts()).zip(&setup.alphas) {
        let lin = Poly::linear_root(f, alpha);
        if a > b {
            pos = pos.mul(&lin.pow((a - b) as u64))?;
        } else if b > a {
            neg = neg.mul(&lin.pow((b - a) as u64))?;
        }
    }
    pos.sub(&neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn comp(c: &[u32]) -> Composition {
        Composition::new(c.to_vec()).unwrap()
    }

    #[test]
    fn pi_map_examples() {
        let setup = L1Params::new(2, 3, 2).with_r(3).resolve().unwrap();
        let f = setup.ring.field().clone();
        assert_eq!(setup.alphas, vec![f.elem(1).unwrap(), f.elem(2).unwrap()]);
        assert_eq!(
            pi_map(&comp(&[2, 1]), &setup).unwrap().coeffs(),
            &[f.elem(1).unwrap()]
        );
        assert_eq!(
            pi_map(&comp(&[3, 0]), &setup).unwrap().coeffs(),
            &[f.elem(2).unwrap()]
        );
    }

    #[test]
    fn small_construction() {
        let c = construct_l1(&L1Params::new(2, 3, 2).with_r(3)).unwrap();
        assert_eq!(c.report.size, 2);
        assert_eq!(c.report.verified_min_l1, Some(4));
        assert_eq!(
            c.code.compositions().unwrap(),
            &[comp(&[2, 1]), comp(&[0, 3])]
        );
        assert_eq!(c.bucket_sizes.values().sum::<u64>(), 4);
    }

    #[test]
    fn auto_r_and_guarantee() {
        assert_eq!(auto_r(4), 5);
        assert_eq!(auto_r(2), 3);
        assert_eq!(auto_r(6), 7);
        let c = construct_l1(&L1Params::new(4, 8, 2)).unwrap();
        assert_eq!(c.report.r, 5);
        assert_eq!(c.report.guaranteed_lower_bound, 42);
        assert!(c.report.size >= 42);
        assert!(c.report.verified_min_l1.unwrap() >= 4);
    }

    #[test]
    fn invalid_specs() {
        assert!(L1Params::new(4, 8, 2).with_r(4).resolve().is_err());
        assert!(L1Params::new(4, 8, 2).with_r(6).resolve().is_err());
        assert!(L1Params::new(4, 8, 1).resolve().is_err());
        assert!(L1Params::new(4, 1, 2).resolve().is_err());
        assert!(L1Params::new(2, 3, 2)
            .with_r(3)
            .with_alpha(3)
            .resolve()
            .is_err());
        let big = L1Params::new(30, 30, 2);
        assert!(construct_l1(&big).unwrap_err().is_scale_cap());
    }

    #[test]
    fn verify_examples() {
        let single = Code::cwl1(2, 3, vec![comp(&[3, 0])]).unwrap();
        assert!(verify_l1_code(&single, 2).unwrap().ok);
        let far = Code::cwl1(2, 3, vec![comp(&[3, 0]), comp(&[0, 3])]).unwrap();
        assert!(verify_l1_code(&far, 2).unwrap().ok);
        let near = Code::cwl1(2, 3, vec![comp(&[2, 1]), comp(&[1, 2])]).unwrap();
        assert_eq!(
            verify_l1_code(&near, 2).unwrap(),
            L1Verification {
                ok: false,
                witness: Some((0, 1, 2))
            }
        );
    }

    #[test]
    fn construction_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let param_sets = [
            L1Params::new(3, 6, 2),
            L1Params::new(3, 7, 3),
            L1Params::new(4, 6, 3).with_r(7).with_alpha(2),
            L1Params::new(2, 9, 4),
            L1Params::new(3, 6, 3).with_irreducible_modulus(vec![1, 0, 1]),
        ];
        for params in param_sets {
            let c = construct_l1(&params).unwrap();
            let setup = params.resolve().unwrap();
            assert_eq!(c.bucket_sizes.values().sum::<u64>(), c.report.johnson_size);
            assert!(c.report.size >= c.report.guaranteed_lower_bound);
            assert!(verify_l1_code(&c.code, params.delta).unwrap().ok);
            let members = c.code.compositions().unwrap();
            let unit = pi_map(&members[0], &setup).unwrap();
            assert!(members.iter().all(|m| pi_map(m, &setup).unwrap() == unit));
            for _ in 0..20 {
                let i = rng.gen_range(0..members.len());
                let j = rng.gen_range(0..members.len());
                let h = difference_polynomial(&members[i], &members[j], &setup).unwrap();
                assert!(h.rem(setup.ring.modulus()).unwrap().is_zero());
            }
        }
    }
}
