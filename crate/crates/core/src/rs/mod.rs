//! Reed-Solomon codes viewed under the insdel metric.

mod affine;
mod criterion;
mod witness;

pub use affine::{affine_apply, affine_fixed_points, affine_through, AffineMap, FixedPoints};
pub use criterion::{
    check_rs2_criterion, construct_rs2, construct_rs2_in, greedy_evaluation_vector, rs2_threshold,
    CriterionWitness, Rs2Verdict,
};
pub use witness::{
    close_pair_witness, invertible_index_pair, IndexPair, WitnessCase, WitnessCertificate,
};

use std::collections::HashSet;

use crate::code::{min_pairwise, MinDistance};
use crate::error::{Error, Result};
use crate::galois::{Fe, Field, Poly};
use crate::metrics::{hamming_len, insdel_len};

/// Default cap on `q^k` messages for exhaustive sweeps.
pub const MAX_MESSAGES: u128 = 10_000;

/// `RS(n, k)`: evaluations of all polynomials of degree below `k` at `alphas`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCode {
    field: Field,
    alphas: Vec<Fe>,
    k: usize,
}

impl RsCode {
    pub fn new(field: &Field, alphas: Vec<Fe>, k: usize) -> Result<Self> {
        let n = alphas.len();
        if k == 0 || k > n {
            return Err(Error::invalid(format!(
                "dimension k = {k} must lie in 1..={n}"
            )));
        }
        let mut seen = HashSet::new();
        for (i, a) in alphas.iter().enumerate() {
            if a.code() >= field.order() {
                return Err(Error::invalid(format!(
                    "alpha code {} is not in GF({})",
                    a.code(),
                    field.order()
                )));
            }
            if !seen.insert(*a) {
                return Err(Error::invalid(format!(
                    "evaluation point {} repeats at position {}",
                    a.code(),
                    i + 1
                )));
            }
        }
        Ok(RsCode {
            field: field.clone(),
            alphas,
            k,
        })
    }

    /// Evaluation points given by element codes.
    pub fn from_codes(field: &Field, codes: &[u64], k: usize) -> Result<Self> {
        let alphas = codes
            .iter()
            .map(|&c| field.elem(c))
            .collect::<Result<_>>()?;
        RsCode::new(field, alphas, k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alphas(&self) -> &[Fe] {
        &self.alphas
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(f(alpha_1), ..., f(alpha_n))`.
    pub fn encode(&self, f: &Poly) -> Result<Vec<Fe>> {
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if let Some(d) = f.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooHigh {
                    degree: d,
                    bound: self.k - 1,
                });
            }
        }
        Ok(self.alphas.iter().map(|&a| f.eval(a)).collect())
    }

    /// Codeword as element codes, ready for the word metrics.
    pub fn encode_codes(&self, f: &Poly) -> Result<Vec<u32>> {
        Ok(self.encode(f)?.into_iter().map(Fe::code).collect())
    }

    /// Message polynomial with coefficient codes given by the base-`q` digits of `index`.
    pub fn message(&self, mut index: u128) -> Poly {
        let q = self.field.order() as u128;
        let coeffs = (0..self.k)
            .map(|_| {
                let c = (index % q) as u64;
                index /= q;
                self.field.elem(c).expect("digit below q")
            })
            .collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn message_count(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.k as u32)
    }

    /// All codewords in message order, refusing beyond `max_messages`.
    pub fn codewords(&self, max_messages: u128) -> Result<Vec<Vec<u32>>> {
        let m = self.message_count();
        if m > max_messages {
            return Err(Error::ScaleCap {
                what: "RS messages q^k",
                value: m,
                cap: max_messages,
            });
        }
        (0..m)
            .map(|i| self.encode_codes(&self.message(i)))
            .collect()
    }
}

/// Exact minimum insdel distance over all codeword pairs.
pub fn rs_exhaustive_insdel(code: &RsCode, max_messages: u128) -> Result<MinDistance> {
    let words = code.codewords(max_messages)?;
    min_pairwise(&words, |u, v| insdel_len(u, v) as u64)
}

/// Exact minimum Hamming distance over all codeword pairs.
pub fn rs_exhaustive_hamming(code: &RsCode, max_messages: u128) -> Result<MinDistance> {
    let words = code.codewords(max_messages)?;
    min_pairwise(&words, |u, v| hamming_len(u, v) as u64)
}
