//! Exact `I_q(n, d)` by maximum-clique search on the compatibility graph of `[q]^n`.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::metrics::{insdel_len, Word};

/// Largest word space searched exactly.
pub const MAX_VERTICES: u128 = 4096;

#[derive(Debug, Clone)]
pub struct ExactIq {
    pub size: usize,
    /// An optimal code, words in lexicographic order.
    pub code: Code,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactIqReport {
    pub q: u32,
    pub n: u32,
    pub d: u32,
    pub size: usize,
    pub code: Vec<Vec<u32>>,
    pub nodes: u64,
}

impl ExactIq {
    pub fn report(&self, d: u32) -> ExactIqReport {
        ExactIqReport {
            q: self.code.q(),
            n: self.code.n() as u32,
            d,
            size: self.size,
            code: self
                .code
                .words()
                .unwrap_or_default()
                .iter()
                .map(|w| w.symbols().to_vec())
                .collect(),
            nodes: self.nodes,
        }
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    budget: u64,
    timed_out: bool,
}

impl Search<'_> {
    /// Greedy sequential coloring of `p`: vertices in nondecreasing color order.
    fn color_sort(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncolored = p.clone();
        let mut out = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.clear(v);
                q.clear(v);
                q.and_not_assign(&self.adj[v]);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: Bits) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(dl) = self.deadline {
                if Instant::now() > dl {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let order = self.color_sort(&p);
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= self.best.len() {
                return;
            }
            current.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.clear(v);
            if self.timed_out {
                return;
            }
        }
    }
}

/// Exact `I_q(n, d)` with an optimal code. `max_seconds` bounds the search time.
pub fn exact_iq(q: u32, n: u32, d: u32, max_seconds: Option<u64>) -> Result<ExactIq> {
    if q < 2 || n == 0 {
        return Err(Error::invalid(format!(
            "need q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    if d % 2 == 1 || d < 2 || d > 2 * n {
        return Err(Error::invalid(format!(
            "d must be even and lie in 2..={}, got {d}",
            2 * n
        )));
    }
    let total = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
    if total > MAX_VERTICES {
        return Err(Error::ScaleCap {
            what: "q^n vertices",
            value: total,
            cap: MAX_VERTICES,
        });
    }
    let v = total as usize;
    let words: Vec<Vec<u32>> = (0..v)
        .map(|mut x| {
            let mut w = vec![0u32; n as usize];
            for s in w.iter_mut().rev() {
                *s = (x % q as usize) as u32;
                x /= q as usize;
            }
            w
        })
        .collect();
    let raw: Vec<Vec<usize>> = (0..v)
        .into_par_iter()
        .map(|i| {
            (0..v)
                .filter(|&j| j != i && insdel_len(&words[i], &words[j]) >= d as usize)
                .collect()
        })
        .collect();

    // search in degree-descending order, ties by index
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(raw[i].len()), i));
    let mut pos = vec![0; v];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    let adj: Vec<Bits> = order
        .iter()
        .map(|&i| {
            let mut b = Bits::empty(v);
            for &j in &raw[i] {
                b.set(pos[j]);
            }
            b
        })
        .collect();

    let mut all = Bits::empty(v);
    for i in 0..v {
        all.set(i);
    }
    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        nodes: 0,
        deadline: max_seconds.map(|s| Instant::now() + Duration::from_secs(s)),
        budget: max_seconds.unwrap_or(0),
        timed_out: false,
    };
    search.expand(&mut Vec::new(), all);
    if search.timed_out {
        return Err(Error::Timeout(search.budget));
    }
    let mut members: Vec<usize> = search.best.iter().map(|&p| order[p]).collect();
    members.sort_unstable();
    let code_words = members
        .iter()
        .map(|&i| Word::new(q, words[i].clone()))
        .collect::<Result<_>>()?;
    Ok(ExactIq {
        size: members.len(),
        code: Code::insdel(q, n as usize, code_words)?,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{code_min_distance, Metric};

    #[test]
    fn exact_values() {
        assert_eq!(exact_iq(2, 3, 2, None).unwrap().size, 8);
        assert_eq!(exact_iq(2, 3, 6, None).unwrap().size, 2);
        assert_eq!(exact_iq(3, 3, 6, None).unwrap().size, 3);
        let mid = exact_iq(2, 3, 4, None).unwrap();
        assert_eq!(mid.size, 2);
        assert!(
            code_min_distance(&mid.code, Metric::Insdel)
                .unwrap()
                .distance
                >= 4
        );
    }

    #[test]
    fn caps_and_domain() {
        assert!(exact_iq(2, 13, 4, None).unwrap_err().is_scale_cap());
        assert!(exact_iq(2, 3, 3, None).is_err());
        assert!(exact_iq(2, 3, 8, None).is_err());
    }

    #[test]
    fn witness_is_deterministic() {
        let a = exact_iq(3, 4, 4, None).unwrap();
        let b = exact_iq(3, 4, 4, None).unwrap();
        assert_eq!(a.code, b.code);
        assert!(code_min_distance(&a.code, Metric::Insdel).unwrap().distance >= 4);
    }
}
