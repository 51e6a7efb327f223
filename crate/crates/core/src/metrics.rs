//! Words over `{0, .., q-1}`, symbol-count compositions, and the Hamming,
//! insertion-deletion and L1 metrics that relate them.
//!
//! The insdel distance of two words is the least number of single-symbol
//! insertions and deletions turning one into the other. It is computed from
//! the longest common subsequence as `|u| + |v| - 2 * lcs(u, v)`, which for
//! equal lengths is `2n - 2 * lcs(u, v)`.
//!
//! [`phi`] sends a word to its symbol-count profile in the Johnson space
//! `J_q(n)` and [`psi`] sends a profile to the unique sorted word having it.
//! On sorted words the insdel distance coincides with the L1 distance of the
//! profiles, which is what makes constant-weight L1 codes liftable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of symbols drawn from `{0, .., q-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    q: u32,
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(q: u32, symbols: Vec<u32>) -> Result<Self> {
        check_alphabet(q)?;
        if let Some(&s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::SymbolOutOfRange { symbol: s, q });
        }
        Ok(Word { q, symbols })
    }

    /// The constant word `(c, c, .., c)` of length `n`.
    pub fn constant(q: u32, c: u32, n: usize) -> Result<Self> {
        Word::new(q, vec![c; n])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    /// True when the symbols are non-decreasing, i.e. the word lies in the image of [`psi`].
    pub fn is_sorted(&self) -> bool {
        self.symbols.windows(2).all(|w| w[0] <= w[1])
    }
}

/// A point of the Johnson space `J_q(n)`: `q` nonnegative counts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    counts: Vec<u32>,
}

impl Composition {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        check_alphabet(counts.len() as u32)?;
        Ok(Composition { counts })
    }

    /// Builds a composition and checks that its weight equals `n`.
    pub fn with_weight(counts: Vec<u32>, n: u64) -> Result<Self> {
        let c = Composition::new(counts)?;
        if c.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                actual: c.weight(),
            });
        }
        Ok(c)
    }

    /// Number of bins.
    pub fn q(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn weight(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }
}

fn check_alphabet(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::invalid(format!(
            "alphabet size must be at least 2, got {q}"
        )));
    }
    Ok(())
}

fn same_alphabet(u: &Word, v: &Word) -> Result<()> {
    if u.q != v.q {
        return Err(Error::AlphabetMismatch {
            left: u.q,
            right: v.q,
        });
    }
    Ok(())
}

/// Length of a longest common subsequence, by the classic dynamic program.
///
/// Only two rows of the table are kept, sized by the shorter argument.
pub fn lcs_len(u: &[u32], v: &[u32]) -> usize {
    let (outer, inner) = if u.len() >= v.len() { (u, v) } else { (v, u) };
    if inner.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; inner.len() + 1];
    let mut cur = vec![0usize; inner.len() + 1];
    for &a in outer {
        for (j, &b) in inner.iter().enumerate() {
            cur[j + 1] = if a == b {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[inner.len()]
}

/// Insdel distance on raw symbol slices: `|u| + |v| - 2 * lcs(u, v)`.
pub fn insdel_len(u: &[u32], v: &[u32]) -> usize {
    u.len() + v.len() - 2 * lcs_len(u, v)
}

pub fn lcs_length(u: &Word, v: &Word) -> Result<usize> {
    same_alphabet(u, v)?;
    Ok(lcs_len(&u.symbols, &v.symbols))
}

pub fn insdel_distance(u: &Word, v: &Word) -> Result<usize> {
    same_alphabet(u, v)?;
    Ok(insdel_len(&u.symbols, &v.symbols))
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    same_alphabet(u, v)?;
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(hamming_len(&u.symbols, &v.symbols))
}

pub(crate) fn hamming_len(u: &[u32], v: &[u32]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

pub fn l1_distance(a: &Composition, b: &Composition) -> Result<u64> {
    if a.q() != b.q() {
        return Err(Error::AlphabetMismatch {
            left: a.q(),
            right: b.q(),
        });
    }
    Ok(l1_len(&a.counts, &b.counts))
}

pub(crate) fn l1_len(a: &[u32], b: &[u32]) -> u64 {
    a.iter().zip(b).map(|(&x, &y)| x.abs_diff(y) as u64).sum()
}

/// Symbol-count profile of a word.
pub fn phi(u: &Word) -> Composition {
    let mut counts = vec![0u32; u.q as usize];
    for &s in &u.symbols {
        counts[s as usize] += 1;
    }
    Composition { counts }
}

/// The sorted word with `counts[s]` copies of each symbol `s`.
pub fn psi(a: &Composition) -> Word {
    let symbols = a
        .counts
        .iter()
        .enumerate()
        .flat_map(|(s, &c)| std::iter::repeat_n(s as u32, c as usize))
        .collect();
    Word { q: a.q(), symbols }
}

/// Iterates `J_q(n)` in colexicographic order (last coordinate most significant).
///
/// For `q = 2, n = 3` this yields `(3,0), (2,1), (1,2), (0,3)`.
pub fn johnson_space(q: u32, n: u32) -> JohnsonSpace {
    let mut first = vec![0u32; q as usize];
    if let Some(x) = first.first_mut() {
        *x = n;
    }
    JohnsonSpace {
        next: (q >= 1).then_some(first),
    }
}

pub struct JohnsonSpace {
    next: Option<Vec<u32>>,
}

impl Iterator for JohnsonSpace {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let q = succ.len();
        if let Some(i) = (0..q.saturating_sub(1)).find(|&i| succ[i] > 0) {
            let v = succ[i];
            succ[i] = 0;
            succ[i + 1] += 1;
            succ[0] = v - 1;
            self.next = Some(succ);
        }
        Some(Composition { counts: cur })
    }
}

/// `|J_q(n)| = binom(n + q - 1, n)` as an exact integer, saturating at `u128::MAX`.
pub fn johnson_size(q: u32, n: u32) -> u128 {
    crate::bigmath::binomial_u128(n as u64 + q as u64 - 1, n as u64).unwrap_or(u128::MAX)
}
