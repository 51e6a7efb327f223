//! Projection and support-counting checks on explicit codes, and the
//! small code beating `q^(n - d/2)`.

use std::collections::HashSet;

use serde::Serialize;

use crate::code::{code_min_distance, Code, Metric};
use crate::error::{Error, Result};
use crate::metrics::Word;

fn words_of(c: &Code) -> Result<&[Word]> {
    c.words()
        .ok_or_else(|| Error::invalid("expected an INSDEL code"))
}

/// Restriction of every word to the positions in `positions` (sorted, deduplicated).
/// Repeated projections are merged, keeping first occurrences.
pub fn project_code(c: &Code, positions: &[usize]) -> Result<Code> {
    let words = words_of(c)?;
    let mut r = positions.to_vec();
    r.sort_unstable();
    r.dedup();
    if let Some(&bad) = r.iter().find(|&&i| i >= c.n()) {
        return Err(Error::invalid(format!(
            "position {bad} is outside 0..{}",
            c.n()
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        let sym: Vec<u32> = r.iter().map(|&i| w.symbols()[i]).collect();
        if seen.insert(sym.clone()) {
            out.push(Word::new(c.q(), sym)?);
        }
    }
    Code::insdel(c.q(), r.len(), out)
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CubeCheck {
    pub hamming_distance: u64,
    /// `|c| == q^(n - d_H + 1)`.
    pub singleton_optimal: bool,
    pub subsets_checked: usize,
    /// Every projection onto `n - d_H + 1` positions is the full cube.
    pub all_full: bool,
}

/// For a Hamming Singleton-optimal code, every projection onto `n - d_H + 1`
/// positions must be all of `[q]^(n - d_H + 1)`.
pub fn full_projection_check(c: &Code) -> Result<CubeCheck> {
    let dh = code_min_distance(c, Metric::Hamming)?.distance;
    let width = c.n() - dh as usize + 1;
    let cube = (c.q() as u128)
        .checked_pow(width as u32)
        .unwrap_or(u128::MAX);
    let optimal = c.len() as u128 == cube;
    let mut checked = 0;
    let mut all_full = optimal;
    if optimal {
        for r in subsets(c.n(), width) {
            checked += 1;
            if project_code(c, &r)?.len() as u128 != cube {
                all_full = false;
                break;
            }
        }
    }
    Ok(CubeCheck {
        hamming_distance: dh,
        singleton_optimal: optimal,
        subsets_checked: checked,
        all_full,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportReport {
    pub ok: bool,
    /// Support set (0-based positions) and the number of codewords with exactly that support.
    pub counts: Vec<(Vec<usize>, u64)>,
}

/// Counts codewords of each exact support of size `n - k + 1`; in a Singleton-optimal
/// code containing zero every count is `q - 1`.
pub fn verify_support_structure(c: &Code, k: usize) -> Result<SupportReport> {
    let words = words_of(c)?;
    let n = c.n();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k must lie in 1..={n}, got {k}")));
    }
    let expected_size = (c.q() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if c.len() as u128 != expected_size {
        return Err(Error::invalid(format!(
            "code has {} words, expected q^k = {expected_size}",
            c.len()
        )));
    }
    let dh = code_min_distance(c, Metric::Hamming)?.distance;
    if dh != (n - k + 1) as u64 {
        return Err(Error::invalid(format!(
            "Hamming distance {dh} differs from n - k + 1 = {}",
            n - k + 1
        )));
    }
    if !words.iter().any(|w| w.symbols().iter().all(|&s| s == 0)) {
        return Err(Error::invalid("code does not contain the zero word"));
    }
    let supports: Vec<Vec<usize>> = words
        .iter()
        .map(|w| (0..n).filter(|&i| w.symbols()[i] != 0).collect())
        .collect();
    let target = c.q() as u64 - 1;
    let counts: Vec<(Vec<usize>, u64)> = subsets(n, n - k + 1)
        .into_iter()
        .map(|r| {
            let cnt = supports.iter().filter(|s| **s == r).count() as u64;
            (r, cnt)
        })
        .collect();
    Ok(SupportReport {
        ok: counts.iter().all(|(_, c)| *c == target),
        counts,
    })
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub code: Code,
    /// Verified minimum insdel distance, `2n - 2`.
    pub distance: u64,
}

/// The `q` constant words plus `(0, 1, ..., n-1)`: `q + 1` words at insdel distance `2n - 2`.
pub fn remark_counterexample(q: u32, n: u32) -> Result<Counterexample> {
    if n < 2 || n > q {
        return Err(Error::invalid(format!(
            "need 2 <= n <= q, got q={q}, n={n}"
        )));
    }
    let mut words: Vec<Word> = (0..q)
        .map(|c| Word::constant(q, c, n as usize))
        .collect::<Result<_>>()?;
    words.push(Word::new(q, (0..n).collect())?);
    let code = Code::insdel(q, n as usize, words)?;
    let distance = code_min_distance(&code, Metric::Insdel)?.distance;
    if distance != 2 * n as u64 - 2 {
        return Err(Error::Internal(format!(
            "counterexample has distance {distance}"
        )));
    }
    Ok(Counterexample { code, distance })
}
