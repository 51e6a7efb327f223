//! Explicit codeword pairs showing `d_I(RS(n, k)) <= 2n - 4k + 4` for `k >= 3`.

use serde::Serialize;

use super::RsCode;
use crate::error::{Error, Result};
use crate::galois::{Fe, Field, Matrix, Poly};
use crate::metrics::{insdel_len, lcs_len};

/// Strictly increasing index vectors, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexPair {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
}

impl IndexPair {
    pub fn one_based(&self) -> IndexPair {
        IndexPair {
            i: self.i.iter().map(|x| x + 1).collect(),
            j: self.j.iter().map(|x| x + 1).collect(),
        }
    }
}

/// Square matrix with entry `(p, l) = alpha_{i_l}^(p+1) - alpha_{j_l}^(p+1)`.
fn power_difference_matrix(field: &Field, alphas: &[Fe], pair: &IndexPair) -> Matrix {
    let s = pair.i.len();
    let mut m = Matrix::zeros(field, s, s);
    for p in 0..s {
        for l in 0..s {
            let e = p as u64 + 1;
            m[(p, l)] = field.sub(
                field.pow(alphas[pair.i[l]], e),
                field.pow(alphas[pair.j[l]], e),
            );
        }
    }
    m
}

/// `det` of the power-difference matrix whose last column is `x^p - beta^p`, as a polynomial in `x`.
fn extension_polynomial(field: &Field, alphas: &[Fe], pair: &IndexPair, beta: Fe) -> Result<Poly> {
    let s = pair.i.len() + 1;
    let mut acc = Poly::zero(field);
    for p in 0..s {
        let minor_rows: Vec<Vec<Fe>> = (0..s)
            .filter(|&r| r != p)
            .map(|r| {
                let e = r as u64 + 1;
                (0..s - 1)
                    .map(|l| {
                        field.sub(
                            field.pow(alphas[pair.i[l]], e),
                            field.pow(alphas[pair.j[l]], e),
                        )
                    })
                    .collect()
            })
            .collect();
        let minor = if s == 1 {
            field.one()
        } else {
            Matrix::from_rows(field, minor_rows)?.det()?
        };
        let cofactor = if (p + s - 1).is_multiple_of(2) {
            minor
        } else {
            field.neg(minor)
        };
        let e = p as u64 + 1;
        let mut entry = vec![field.zero(); p + 2];
        entry[0] = field.neg(field.pow(beta, e));
        entry[p + 1] = field.one();
        acc = acc.add(&Poly::new(field, entry).scale(cofactor))?;
    }
    Ok(acc)
}

/// Index vectors of length `k - 1` with `j_l < i_l <= k(k+1)/2 - 2` (1-based) and an
/// invertible power-difference matrix, built one coordinate at a time.
pub fn invertible_index_pair(code: &RsCode, k: usize) -> Result<IndexPair> {
    if k < 3 {
        return Err(Error::invalid(format!(
            "index construction needs k >= 3, got {k}"
        )));
    }
    let bound = k * (k + 1) / 2 - 2;
    if code.n() < bound {
        return Err(Error::invalid(format!(
            "need n >= k(k+1)/2 - 2 = {bound}, got n = {}",
            code.n()
        )));
    }
    let field = code.field();
    let alphas = code.alphas();
    let mut pair = IndexPair {
        i: vec![2, 3],
        j: vec![0, 2],
    };
    for s in 3..k {
        let top = (s + 1) * (s + 2) / 2 - 2;
        let j_next = pair.j[s - 2] + 1;
        let poly = extension_polynomial(field, alphas, &pair, alphas[j_next])?;
        let i_next = (pair.i[s - 2] + 1..top)
            .find(|&c| !poly.eval(alphas[c]).is_zero())
            .ok_or_else(|| Error::Internal(format!("no admissible index at step {s}")))?;
        pair.i.push(i_next);
        pair.j.push(j_next);
    }
    if power_difference_matrix(field, alphas, &pair)
        .det()?
        .is_zero()
    {
        return Err(Error::Internal(
            "index construction produced a singular matrix".into(),
        ));
    }
    Ok(pair)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// The nullspace vector has a nonzero constant coordinate.
    ConstantTerm,
    /// Every nullspace vector starts with zero.
    NoConstantTerm,
}

/// Two distinct messages whose codewords agree on `2k - 2` increasing position pairs.
#[derive(Debug, Clone)]
pub struct WitnessCertificate {
    pub f: Poly,
    pub g: Poly,
    /// `f(alpha_{i_l}) = g(alpha_{j_l})` for every `l`.
    pub indices: IndexPair,
    pub case: WitnessCase,
    pub lcs: usize,
    pub insdel: usize,
    /// `2n - 4k + 4`.
    pub bound: usize,
}

pub fn close_pair_witness(code: &RsCode) -> Result<WitnessCertificate> {
    let (n, k) = (code.n(), code.k());
    if k < 3 {
        return Err(Error::invalid(format!("witness needs k >= 3, got {k}")));
    }
    let need = k * (k + 1) / 2 + k - 3;
    if n < need {
        return Err(Error::invalid(format!(
            "witness needs n >= k(k+1)/2 + k - 3 = {need}, got n = {n}"
        )));
    }
    let field = code.field();
    let alphas = code.alphas();
    let mut idx = invertible_index_pair(code, k)?;
    let (i_last, j_last) = (idx.i[k - 2], idx.j[k - 2]);
    idx.i.extend(i_last + 1..i_last + k);
    idx.j.extend(j_last + 1..j_last + k);

    let cols = 2 * k - 2;
    let mut a = Matrix::zeros(field, 2 * k - 1, cols);
    for l in 0..cols {
        a[(0, l)] = field.one();
        for p in 1..k {
            a[(p, l)] = field.pow(alphas[idx.i[l]], p as u64);
            a[(k - 1 + p, l)] = field.pow(alphas[idx.j[l]], p as u64);
        }
    }
    let basis = a.left_nullspace();
    let v = basis
        .first()
        .ok_or_else(|| Error::Internal("empty nullspace".into()))?;
    let case = if v[0].is_zero() {
        WitnessCase::NoConstantTerm
    } else {
        WitnessCase::ConstantTerm
    };
    let f = Poly::new(field, v[..k].to_vec());
    let g = Poly::new(
        field,
        std::iter::once(field.zero())
            .chain(v[k..].iter().map(|&b| field.neg(b)))
            .collect(),
    );
    if f == g {
        return Err(Error::Internal("degenerate nullspace vector".into()));
    }
    for l in 0..cols {
        if f.eval(alphas[idx.i[l]]) != g.eval(alphas[idx.j[l]]) {
            return Err(Error::Internal(format!("evaluations disagree at pair {l}")));
        }
    }
    let (cf, cg) = (code.encode_codes(&f)?, code.encode_codes(&g)?);
    let lcs = lcs_len(&cf, &cg);
    if lcs < cols {
        return Err(Error::Internal(format!(
            "common subsequence {lcs} shorter than {cols}"
        )));
    }
    Ok(WitnessCertificate {
        f,
        g,
        indices: idx,
        case,
        lcs,
        insdel: insdel_len(&cf, &cg),
        bound: 2 * n + 4 - 4 * k,
    })
}
