//! Two-dimensional RS codes of insdel distance `2n - 4`.
//!
//! `RS(n, 2)` reaches `2n - 4` exactly when no affine map sends one triple of
//! evaluation points onto another, position by position. The greedy builder
//! adds points that avoid every such coincidence.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::affine::{affine_apply, affine_fixed_points, affine_through, AffineMap, FixedPoints};
use super::RsCode;
use crate::error::{Error, Result};
use crate::galois::{Fe, Field, MAX_FIELD_ORDER};

/// Index triples `i`, `j` (0-based) and the map with `sigma(alpha_i) = alpha_j` coordinatewise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CriterionWitness {
    pub i: [usize; 3],
    pub j: [usize; 3],
    pub sigma: AffineMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rs2Verdict {
    pub holds: bool,
    pub witness: Option<CriterionWitness>,
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn hamming3(x: &[usize; 3], y: &[usize; 3]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Searches ordered triple pairs at Hamming distance at least 2 for an affine
/// coincidence; the first one in lexicographic order is the witness.
pub fn check_rs2_criterion(code: &RsCode) -> Result<Rs2Verdict> {
    if code.k() != 2 {
        return Err(Error::invalid(format!(
            "the criterion applies to k = 2, got k = {}",
            code.k()
        )));
    }
    if code.n() < 3 {
        return Err(Error::invalid(format!(
            "the criterion needs n >= 3, got n = {}",
            code.n()
        )));
    }
    let f = code.field();
    let al = code.alphas();
    let ts = triples(code.n());
    let witness = ts.par_iter().find_map_first(|i| {
        ts.iter().find_map(|j| {
            if hamming3(i, j) < 2 {
                return None;
            }
            let sigma = affine_through(f, (al[i[0]], al[i[1]]), (al[j[0]], al[j[1]]))
                .expect("distinct points");
            (affine_apply(f, &sigma, al[i[2]]) == al[j[2]]).then_some(CriterionWitness {
                i: *i,
                j: *j,
                sigma,
            })
        })
    });
    Ok(Rs2Verdict {
        holds: witness.is_none(),
        witness,
    })
}

/// `n (n-1)^2 (n-2)^2 / 4`; field sizes strictly above it admit the greedy construction.
pub fn rs2_threshold(n: usize) -> u128 {
    let n = n as u128;
    n * (n - 1).pow(2) * (n - 2).pow(2) / 4
}

/// Greedy evaluation vector: `0, 1, 2`, then each next point is the smallest
/// element outside the forbidden set of the points chosen so far.
pub fn greedy_evaluation_vector(field: &Field, n: usize) -> Result<Vec<Fe>> {
    if field.order() < 3 {
        return Err(Error::invalid(
            "the greedy construction needs at least three field elements",
        ));
    }
    let mut alphas: Vec<Fe> = (0..3.min(n))
        .map(|c| field.elem(c as u64).expect("small code"))
        .collect();
    while alphas.len() < n {
        let m = alphas.len();
        let forbidden: HashSet<Fe> = (0..m)
            .into_par_iter()
            .flat_map_iter(|i| {
                let alphas = &alphas;
                (i + 1..m).flat_map(move |j| {
                    (0..m).flat_map(move |k| {
                        (k + 1..m).flat_map(move |l| {
                            let sigma = affine_through(
                                field,
                                (alphas[i], alphas[j]),
                                (alphas[k], alphas[l]),
                            )
                            .expect("distinct points");
                            let fixed = match affine_fixed_points(field, &sigma) {
                                FixedPoints::One(c) => {
                                    Some(field.elem(c as u64).expect("valid code"))
                                }
                                _ => None,
                            };
                            alphas
                                .iter()
                                .map(move |&t| affine_apply(field, &sigma, t))
                                .chain(fixed)
                        })
                    })
                })
            })
            .collect();
        let next = field
            .elements()
            .find(|e| !forbidden.contains(e))
            .ok_or_else(|| {
                Error::invalid(format!(
                    "GF({}) has no admissible point at position {}",
                    field.order(),
                    m + 1
                ))
            })?;
        alphas.push(next);
    }
    Ok(alphas)
}

/// Greedy construction over the given field, which must exceed the threshold.
pub fn construct_rs2_in(field: &Field, n: usize) -> Result<RsCode> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "construct-rs2 needs n >= 4, got {n}"
        )));
    }
    let t = rs2_threshold(n);
    if (field.order() as u128) <= t {
        return Err(Error::invalid(format!(
            "q = {} must exceed n(n-1)^2(n-2)^2/4 = {t}",
            field.order()
        )));
    }
    let code = RsCode::new(field, greedy_evaluation_vector(field, n)?, 2)?;
    let verdict = check_rs2_criterion(&code)?;
    if !verdict.holds {
        return Err(Error::Internal(format!(
            "greedy vector fails the criterion: {:?}",
            verdict.witness
        )));
    }
    Ok(code)
}

/// Greedy construction over `GF(q)`, defaulting to the smallest prime above the threshold.
pub fn construct_rs2(n: usize, q: Option<u64>) -> Result<RsCode> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "construct-rs2 needs n >= 4, got {n}"
        )));
    }
    let q = match q {
        Some(q) => q,
        None => {
            let t = rs2_threshold(n);
            if t >= MAX_FIELD_ORDER as u128 {
                return Err(Error::ScaleCap {
                    what: "field order",
                    value: t + 1,
                    cap: MAX_FIELD_ORDER as u128,
                });
            }
            crate::bigmath::next_prime_above(t as u64)
        }
    };
    let field = Field::of_order(q)?;
    construct_rs2_in(&field, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Poly;
    use crate::metrics::lcs_len;
    use crate::rs::{rs_exhaustive_insdel, MAX_MESSAGES};

    #[test]
    fn thresholds() {
        assert_eq!(rs2_threshold(4), 36);
        assert_eq!(rs2_threshold(5), 180);
    }

    #[test]
    fn matches_exhaustive_small() {
        let f = Field::prime(7).unwrap();
        for codes in [[0u64, 1, 2], [0, 1, 3], [2, 5, 6]] {
            let code = RsCode::from_codes(&f, &codes, 2).unwrap();
            let exact = rs_exhaustive_insdel(&code, MAX_MESSAGES).unwrap().distance;
            assert_eq!(check_rs2_criterion(&code).unwrap().holds, exact == 2);
        }
        let code = RsCode::from_codes(&f, &[0, 1, 2, 3], 2).unwrap();
        let verdict = check_rs2_criterion(&code).unwrap();
        let exact = rs_exhaustive_insdel(&code, MAX_MESSAGES).unwrap().distance;
        assert_eq!(verdict.holds, exact == 4);
        // an arithmetic progression is shifted onto itself
        assert!(!verdict.holds);
    }

    #[test]
    fn witness_realizes_long_common_subsequence() {
        let f = Field::prime(11).unwrap();
        let code = RsCode::from_codes(&f, &[0, 1, 2, 3, 4], 2).unwrap();
        let w = check_rs2_criterion(&code).unwrap().witness.unwrap();
        let cf = code.encode_codes(&Poly::x(&f)).unwrap();
        let g = w.sigma.act_on_poly(&Poly::x(&f));
        let cg = code.encode_codes(&g).unwrap();
        assert_ne!(cf, cg);
        assert!(lcs_len(&cf, &cg) >= 3);
    }

    #[test]
    fn greedy_n4_over_f37() {
        let code = construct_rs2(4, None).unwrap();
        assert_eq!(code.field().order(), 37);
        assert_eq!(
            rs_exhaustive_insdel(&code, MAX_MESSAGES).unwrap().distance,
            4
        );
    }

    #[test]
    fn greedy_prefixes_pass() {
        let field = Field::prime(1009).unwrap();
        let alphas = greedy_evaluation_vector(&field, 7).unwrap();
        for m in 3..=7 {
            let code = RsCode::new(&field, alphas[..m].to_vec(), 2).unwrap();
            assert!(check_rs2_criterion(&code).unwrap().holds, "prefix {m}");
        }
    }

    #[test]
    fn rejects_small_fields() {
        assert!(construct_rs2(4, Some(31)).is_err());
        assert!(construct_rs2(3, None).is_err());
        assert!(construct_rs2(40, None).unwrap_err().is_scale_cap());
    }
}
