//! Reference computations that share no code with the dynamic programs in
//! [`crate::metrics`]. Slow by design; used to cross-check the fast paths.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};

/// Words are packed 4 bits per symbol, so the oracle handles `q <= 16`
/// and lengths up to 30.
const MAX_SYMBOL: u32 = 16;
const MAX_LEN: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Packed(u128);

impl Packed {
    fn pack(w: &[u32]) -> Self {
        let mut x = w.len() as u128;
        for (i, &s) in w.iter().enumerate() {
            x |= (s as u128) << (8 + 4 * i);
        }
        Packed(x)
    }

    fn len(self) -> usize {
        (self.0 & 0xff) as usize
    }

    fn symbol(self, i: usize) -> u32 {
        ((self.0 >> (8 + 4 * i)) & 0xf) as u32
    }

    fn body(self) -> u128 {
        self.0 >> 8
    }

    fn from_body(body: u128, len: usize) -> Self {
        Packed(body << 8 | len as u128)
    }

    fn delete(self, i: usize) -> Self {
        let b = self.body();
        let low = b & ((1u128 << (4 * i)) - 1);
        let high = (b >> (4 * (i + 1))) << (4 * i);
        Packed::from_body(low | high, self.len() - 1)
    }

    fn insert(self, i: usize, s: u32) -> Self {
        let b = self.body();
        let low = b & ((1u128 << (4 * i)) - 1);
        let high = (b >> (4 * i)) << (4 * (i + 1));
        Packed::from_body(low | (s as u128) << (4 * i) | high, self.len() + 1)
    }
}

fn is_subsequence_of(w: Packed, v: &[u32]) -> bool {
    let mut it = v.iter();
    (0..w.len()).all(|i| {
        let s = w.symbol(i);
        it.any(|&x| x == s)
    })
}

/// Shortest path from `u` to `v` in the graph whose edges insert or delete one
/// symbol, by A* search.
///
/// Any edit path can be reordered so that every deletion precedes every
/// insertion without growing, so the search runs a deletion phase followed by
/// an insertion phase whose words must stay subsequences of `v`. The heuristic
/// is the total symbol-count difference, which one edit changes by exactly one.
pub fn edit_graph_distance(q: u32, u: &[u32], v: &[u32]) -> Result<usize> {
    if q > MAX_SYMBOL || u.len() > MAX_LEN || v.len() > MAX_LEN {
        return Err(Error::invalid(format!(
            "oracle handles q <= {MAX_SYMBOL} and words of length <= {MAX_LEN}"
        )));
    }
    if let Some(&s) = u.iter().chain(v).find(|&&s| s >= q) {
        return Err(Error::SymbolOutOfRange { symbol: s, q });
    }
    let mut target = [0i32; MAX_SYMBOL as usize];
    for &s in v {
        target[s as usize] += 1;
    }
    let gap = |w: Packed| -> [i32; MAX_SYMBOL as usize] {
        let mut c = target;
        for i in 0..w.len() {
            c[w.symbol(i) as usize] -= 1;
        }
        c
    };
    let goal = Packed::pack(v);
    let start = (Packed::pack(u), false);
    let h0: usize = gap(start.0).iter().map(|x| x.unsigned_abs() as usize).sum();
    let mut best: HashMap<(Packed, bool), usize> = HashMap::new();
    let mut heap = BinaryHeap::new();
    best.insert(start, 0);
    heap.push(Reverse((h0, Reverse(0usize), start)));
    while let Some(Reverse((f, Reverse(g), state))) = heap.pop() {
        let (w, inserting) = state;
        if w == goal {
            return Ok(g);
        }
        if best.get(&state).is_some_and(|&b| b < g) {
            continue;
        }
        let h = f - g;
        // per symbol: how many more copies `v` has than `w`
        let c = gap(w);
        let ng = g + 1;
        let mut push = |next: (Packed, bool), nh: usize| {
            if best.get(&next).is_none_or(|&b| ng < b) {
                best.insert(next, ng);
                heap.push(Reverse((ng + nh, Reverse(ng), next)));
            }
        };
        if !inserting {
            for i in 0..w.len() {
                let s = w.symbol(i);
                if i > 0 && s == w.symbol(i - 1) {
                    continue;
                }
                let nh = if c[s as usize] < 0 { h - 1 } else { h + 1 };
                push((w.delete(i), false), nh);
            }
        }
        if w.len() < v.len() {
            for i in 0..=w.len() {
                for s in 0..q {
                    if c[s as usize] <= 0 || (i > 0 && s == w.symbol(i - 1)) {
                        continue;
                    }
                    let next = w.insert(i, s);
                    if is_subsequence_of(next, v) {
                        push((next, true), h - 1);
                    }
                }
            }
        }
    }
    Err(Error::Internal("edit graph search exhausted".into()))
}

/// Longest common subsequence by enumerating every subsequence of the shorter word.
pub fn lcs_by_enumeration(u: &[u32], v: &[u32]) -> Result<usize> {
    let (short, long) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    if short.len() > 20 {
        return Err(Error::invalid(
            "enumeration oracle handles words of length <= 20",
        ));
    }
    let is_subsequence = |s: &[u32]| {
        let mut it = long.iter();
        s.iter().all(|c| it.any(|x| x == c))
    };
    let mut best = 0;
    for mask in 0u32..(1 << short.len()) {
        let len = mask.count_ones() as usize;
        if len <= best {
            continue;
        }
        let sub: Vec<u32> = (0..short.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| short[i])
            .collect();
        if is_subsequence(&sub) {
            best = len;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_distances() {
        assert_eq!(
            edit_graph_distance(3, &[0, 0, 1, 2, 0], &[0, 2, 0, 0, 1]).unwrap(),
            4
        );
        assert_eq!(edit_graph_distance(2, &[0, 0, 0], &[1, 1, 1]).unwrap(), 6);
        assert_eq!(edit_graph_distance(2, &[], &[1, 0]).unwrap(), 2);
        assert_eq!(edit_graph_distance(2, &[1, 0], &[1, 0]).unwrap(), 0);
        assert_eq!(
            lcs_by_enumeration(&[0, 0, 1, 2, 0], &[0, 2, 0, 0, 1]).unwrap(),
            3
        );
        assert_eq!(lcs_by_enumeration(&[], &[0]).unwrap(), 0);
    }

    fn unrestricted_bfs(q: u32, u: &[u32], v: &[u32]) -> usize {
        let cap = u.len() + v.len();
        let mut seen = std::collections::HashSet::from([u.to_vec()]);
        let mut layer = vec![u.to_vec()];
        for d in 0.. {
            if layer.iter().any(|w| w == v) {
                return d;
            }
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..w.len() {
                    let mut x = w.clone();
                    x.remove(i);
                    next.push(x);
                }
                if w.len() < cap {
                    for i in 0..=w.len() {
                        for s in 0..q {
                            let mut x = w.clone();
                            x.insert(i, s);
                            next.push(x);
                        }
                    }
                }
            }
            layer = next
                .into_iter()
                .filter(|w| seen.insert(w.clone()))
                .collect();
        }
        unreachable!()
    }

    fn all_words(q: u32, n: usize) -> Vec<Vec<u32>> {
        (0..q.pow(n as u32))
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let s = x % q;
                        x /= q;
                        s
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn matches_unrestricted_search() {
        for (q, max) in [(2u32, 4usize), (3, 3)] {
            let words: Vec<Vec<u32>> = (0..=max).flat_map(|n| all_words(q, n)).collect();
            for u in &words {
                for v in &words {
                    assert_eq!(
                        edit_graph_distance(q, u, v).unwrap(),
                        unrestricted_bfs(q, u, v),
                        "{u:?} {v:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(edit_graph_distance(2, &[2], &[0]).is_err());
        assert!(edit_graph_distance(17, &[0], &[0]).is_err());
    }
}
