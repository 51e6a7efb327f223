//! Codes and their plain-text file format.
//!
//! ```text
//! KIND q n M
//! <M rows>
//! ```
//!
//! `KIND` is `INSDEL` (rows are `n` symbols in `0..q`) or `CWL1` (rows are
//! `q` counts summing to `n`). Lines starting with `#` are comments.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{hamming_len, insdel_len, l1_len, Composition, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CodeKind {
    Insdel,
    Cwl1,
}

impl CodeKind {
    pub fn tag(self) -> &'static str {
        match self {
            CodeKind::Insdel => "INSDEL",
            CodeKind::Cwl1 => "CWL1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Metric {
    Insdel,
    Hamming,
    L1,
}

impl Metric {
    fn name(self) -> &'static str {
        match self {
            Metric::Insdel => "INSDEL",
            Metric::Hamming => "HAMMING",
            Metric::L1 => "L1",
        }
    }
}

/// A set of distinct equal-length words, or of equal-weight compositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Code {
    Insdel {
        q: u32,
        n: usize,
        words: Vec<Word>,
    },
    Cwl1 {
        q: u32,
        n: u32,
        compositions: Vec<Composition>,
    },
}

/// Result of a pairwise minimum-distance sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinDistance {
    pub distance: u64,
    /// Member indices of the first minimizing pair in lexicographic pair order.
    pub pair: (usize, usize),
}

impl Code {
    pub fn insdel(q: u32, n: usize, words: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.q() != q {
                return Err(Error::AlphabetMismatch {
                    left: q,
                    right: w.q(),
                });
            }
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
            if !seen.insert(w.symbols()) {
                return Err(Error::DuplicateMember(i));
            }
        }
        Ok(Code::Insdel { q, n, words })
    }

    pub fn cwl1(q: u32, n: u32, compositions: Vec<Composition>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(compositions.len());
        for (i, c) in compositions.iter().enumerate() {
            if c.q() != q {
                return Err(Error::AlphabetMismatch {
                    left: q,
                    right: c.q(),
                });
            }
            if c.weight() != n as u64 {
                return Err(Error::WeightMismatch {
                    expected: n as u64,
                    actual: c.weight(),
                });
            }
            if !seen.insert(c.counts()) {
                return Err(Error::DuplicateMember(i));
            }
        }
        Ok(Code::Cwl1 { q, n, compositions })
    }

    pub fn kind(&self) -> CodeKind {
        match self {
            Code::Insdel { .. } => CodeKind::Insdel,
            Code::Cwl1 { .. } => CodeKind::Cwl1,
        }
    }

    pub fn q(&self) -> u32 {
        match self {
            Code::Insdel { q, .. } | Code::Cwl1 { q, .. } => *q,
        }
    }

    /// Word length (INSDEL) or weight (CWL1).
    pub fn n(&self) -> usize {
        match self {
            Code::Insdel { n, .. } => *n,
            Code::Cwl1 { n, .. } => *n as usize,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Code::Insdel { words, .. } => words.len(),
            Code::Cwl1 { compositions, .. } => compositions.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn words(&self) -> Option<&[Word]> {
        match self {
            Code::Insdel { words, .. } => Some(words),
            Code::Cwl1 { .. } => None,
        }
    }

    pub fn compositions(&self) -> Option<&[Composition]> {
        match self {
            Code::Cwl1 { compositions, .. } => Some(compositions),
            Code::Insdel { .. } => None,
        }
    }

    pub(crate) fn rows(&self) -> Vec<&[u32]> {
        match self {
            Code::Insdel { words, .. } => words.iter().map(Word::symbols).collect(),
            Code::Cwl1 { compositions, .. } => {
                compositions.iter().map(Composition::counts).collect()
            }
        }
    }

    /// Serializes in the code text format. Parsing the output yields an equal code.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} {} {}",
            self.kind().tag(),
            self.q(),
            self.n(),
            self.len()
        );
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty input".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be `KIND q n M`".into(),
            });
        }
        let num = |s: &str, what: &str| -> Result<u64> {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: hline,
                msg: format!("bad {what}: {s:?}"),
            })
        };
        let q = num(fields[1], "q")? as u32;
        let n = num(fields[2], "n")?;
        let m = num(fields[3], "M")? as usize;
        let kind = match fields[0] {
            "INSDEL" => CodeKind::Insdel,
            "CWL1" => CodeKind::Cwl1,
            other => {
                return Err(Error::Parse {
                    line: hline,
                    msg: format!("unknown kind {other:?}"),
                })
            }
        };
        let width = match kind {
            CodeKind::Insdel => n as usize,
            CodeKind::Cwl1 => q as usize,
        };

        let mut rows = Vec::with_capacity(m);
        for (line, l) in lines.by_ref() {
            let row: Vec<u32> = l
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line,
                    msg: "row entries must be nonnegative integers".into(),
                })?;
            if row.len() != width {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {width} entries, found {}", row.len()),
                });
            }
            rows.push((line, row));
            if rows.len() > m {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than the declared {m} rows"),
                });
            }
        }
        if rows.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("declared {m} rows, found {}", rows.len()),
            });
        }

        let with_line = |line: usize| {
            move |e: Error| Error::Parse {
                line,
                msg: e.to_string(),
            }
        };
        match kind {
            CodeKind::Insdel => {
                let words = rows
                    .into_iter()
                    .map(|(line, r)| Word::new(q, r).map_err(with_line(line)))
                    .collect::<Result<Vec<_>>>()?;
                Code::insdel(q, n as usize, words)
            }
            CodeKind::Cwl1 => {
                let comps = rows
                    .into_iter()
                    .map(|(line, r)| Composition::with_weight(r, n).map_err(with_line(line)))
                    .collect::<Result<Vec<_>>>()?;
                Code::cwl1(q, n as u32, comps)
            }
        }
    }
}

/// Exact minimum distance over all unordered pairs, with the first minimizing pair.
///
/// Rows are swept in parallel; the reduction keys on `(distance, i, j)` so the
/// result is identical to a sequential sweep.
pub fn code_min_distance(code: &Code, metric: Metric) -> Result<MinDistance> {
    let dist: fn(&[u32], &[u32]) -> u64 = match (code.kind(), metric) {
        (CodeKind::Insdel, Metric::Insdel) => |u, v| insdel_len(u, v) as u64,
        (CodeKind::Insdel, Metric::Hamming) => |u, v| hamming_len(u, v) as u64,
        (CodeKind::Cwl1, Metric::L1) => l1_len,
        (kind, metric) => {
            return Err(Error::IncompatibleMetric {
                metric: metric.name(),
                kind: kind.tag(),
            });
        }
    };
    min_pairwise(&code.rows(), dist)
}

pub(crate) fn min_pairwise<T: AsRef<[u32]> + Sync>(
    rows: &[T],
    dist: impl Fn(&[u32], &[u32]) -> u64 + Sync,
) -> Result<MinDistance> {
    if rows.len() < 2 {
        return Err(Error::UndefinedDistance(rows.len()));
    }
    let best = (0..rows.len() - 1)
        .into_par_iter()
        .map(|i| {
            let u = rows[i].as_ref();
            (i + 1..rows.len())
                .map(|j| (dist(u, rows[j].as_ref()), i, j))
                .min()
                .expect("non-empty row range")
        })
        .min()
        .expect("at least one pair");
    Ok(MinDistance {
        distance: best.0,
        pair: (best.1, best.2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(q: u32, rows: &[&[u32]]) -> Vec<Word> {
        rows.iter()
            .map(|r| Word::new(q, r.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn min_distance_examples() {
        let c = Code::insdel(2, 3, words(2, &[&[0, 0, 0], &[1, 1, 1]])).unwrap();
        let md = code_min_distance(&c, Metric::Insdel).unwrap();
        assert_eq!(
            md,
            MinDistance {
                distance: 6,
                pair: (0, 1)
            }
        );

        let cube = Code::insdel(2, 2, words(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])).unwrap();
        assert_eq!(
            code_min_distance(&cube, Metric::Insdel).unwrap().distance,
            2
        );
        assert_eq!(
            code_min_distance(&cube, Metric::Hamming).unwrap().distance,
            1
        );

        // constants of F_5 plus one word of distinct symbols
        let mut rows: Vec<Vec<u32>> = (0..5).map(|c| vec![c; 4]).collect();
        rows.push(vec![0, 1, 2, 3]);
        let ws = rows.into_iter().map(|r| Word::new(5, r).unwrap()).collect();
        let c = Code::insdel(5, 4, ws).unwrap();
        assert_eq!(code_min_distance(&c, Metric::Insdel).unwrap().distance, 6);
    }

    #[test]
    fn first_minimizing_pair_is_reported() {
        let c = Code::insdel(2, 2, words(2, &[&[0, 0], &[1, 1], &[0, 1], &[1, 0]])).unwrap();
        // (0,1) has distance 4; (0,2) is the first pair at distance 2
        assert_eq!(code_min_distance(&c, Metric::Insdel).unwrap().pair, (0, 2));
    }

    #[test]
    fn degenerate_codes() {
        let single = Code::insdel(2, 1, words(2, &[&[0]])).unwrap();
        assert_eq!(
            code_min_distance(&single, Metric::Insdel),
            Err(Error::UndefinedDistance(1))
        );
        let empty = Code::insdel(2, 1, vec![]).unwrap();
        assert_eq!(
            code_min_distance(&empty, Metric::Insdel),
            Err(Error::UndefinedDistance(0))
        );
        assert!(matches!(
            code_min_distance(&single, Metric::L1),
            Err(Error::IncompatibleMetric { .. })
        ));
    }

    #[test]
    fn rejects_duplicates_and_bad_lengths() {
        assert_eq!(
            Code::insdel(2, 1, words(2, &[&[0], &[0]])),
            Err(Error::DuplicateMember(1))
        );
        assert!(Code::insdel(2, 2, words(2, &[&[0]])).is_err());
    }

    #[test]
    fn text_format() {
        let text = "# a comment\nCWL1 2 3 2\n0 3\n2 1\n";
        let c = Code::from_text(text).unwrap();
        assert_eq!(c.kind(), CodeKind::Cwl1);
        assert_eq!(c.len(), 2);
        assert_eq!(c.to_text(), "CWL1 2 3 2\n0 3\n2 1\n");
        assert_eq!(Code::from_text(&c.to_text()).unwrap(), c);

        let err = Code::from_text("INSDEL 2 3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(Code::from_text("INSDEL 2 3 2\n0 1 1\n").is_err());
        assert!(Code::from_text("CWL1 2 3 1\n1 1\n").is_err());
        assert!(Code::from_text("FOO 2 3 0\n").is_err());
    }
}
