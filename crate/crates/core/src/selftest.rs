//! The desk-scale acceptance suite, runnable from the library, the CLI and the test harness.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    exact_iq, remark_counterexample, singleton_insdel, sub_singleton_bound,
    verify_support_structure,
};
use crate::code::{code_min_distance, Code, Metric};
use crate::cw_l1::{construct_l1, L1Params};
use crate::error::{Error, Result};
use crate::galois::{Fe, Field, Poly};
use crate::lift::{lift, max_pairs_from_env, DistanceStatus};
use crate::metrics::{insdel_len, johnson_space, l1_distance, psi, Word};
use crate::oracle::edit_graph_distance;
use crate::rs::{
    affine_apply, affine_fixed_points, affine_through, check_rs2_criterion, close_pair_witness,
    construct_rs2, invertible_index_pair, rs2_threshold, rs_exhaustive_insdel, AffineMap,
    FixedPoints, IndexPair, RsCode, MAX_MESSAGES,
};

const SEED: u64 = 0x1d5e_1c0d;

pub const CRITERIA: [(u32, &str, u64); 11] = [
    (1, "metric oracle equivalence", 60),
    (2, "L1 distance equals insdel distance of sorted words", 1),
    (3, "pigeonhole construction q=4 n=8 delta=2 r=5", 30),
    (4, "greedy RS(n,2) at n=4 and n=5", 660),
    (5, "RS(n,2) criterion equals exhaustive sweep", 300),
    (6, "RS(n,3) witness pair", 5),
    (7, "exact I_q(n,d) endpoint values", 300),
    (8, "strict sub-Singleton", 300),
    (9, "q+1 words at distance 2n-2", 1),
    (10, "support sets of RS(4,2) over F_5", 1),
    (11, "affine group on rational places", 10),
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: u64,
}

type Check = (bool, String);

fn words(q: u32, n: usize) -> Vec<Vec<u32>> {
    (0..(q as usize).pow(n as u32))
        .map(|mut x| {
            let mut w = vec![0u32; n];
            for s in w.iter_mut().rev() {
                *s = (x % q as usize) as u32;
                x /= q as usize;
            }
            w
        })
        .collect()
}

fn metric_oracle() -> Result<Check> {
    let mut exhaustive = 0usize;
    for n in 1..=5 {
        let ws = words(2, n);
        let bad = (0..ws.len())
            .into_par_iter()
            .map(|i| {
                (0..ws.len())
                    .map(|j| {
                        edit_graph_distance(2, &ws[i], &ws[j])
                            .map(|d| (d != insdel_len(&ws[i], &ws[j])) as usize)
                    })
                    .sum::<Result<usize>>()
            })
            .sum::<Result<usize>>()?;
        if bad > 0 {
            return Ok((false, format!("{bad} disagreements on [2]^{n}")));
        }
        exhaustive += ws.len() * ws.len();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for t in 0..200 {
        let q = rng.gen_range(2..=4u32);
        let n = rng.gen_range(1..=10usize);
        let u: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        let (a, b) = (edit_graph_distance(q, &u, &v)?, insdel_len(&u, &v));
        if a != b {
            return Ok((
                false,
                format!("random pair {t}: {u:?} {v:?} search {a} vs {b}"),
            ));
        }
    }
    Ok((
        true,
        format!("{exhaustive} ordered pairs over [2]^1..[2]^5 and 200 random pairs agree"),
    ))
}

fn lift_identity() -> Result<Check> {
    let space: Vec<_> = johnson_space(3, 4).collect();
    let mut pairs = 0;
    for (i, a) in space.iter().enumerate() {
        for b in &space[i + 1..] {
            pairs += 1;
            let dl = l1_distance(a, b)?;
            let di = insdel_len(psi(a).symbols(), psi(b).symbols()) as u64;
            if dl != di {
                return Ok((false, format!("{a:?} {b:?}: L1 {dl} vs insdel {di}")));
            }
        }
    }
    Ok((
        space.len() == 15 && pairs == 105,
        format!("{} compositions, {pairs} pairs", space.len()),
    ))
}

fn pigeonhole_construction() -> Result<Check> {
    let built = construct_l1(&L1Params::new(4, 8, 2).with_r(5))?;
    let lifted = lift(&built.code, max_pairs_from_env()?)?;
    let size = lifted.code.len();
    let verified = lifted.report.status == DistanceStatus::Verified;
    let dist = lifted.report.min_insdel.unwrap_or(0);
    Ok((
        size >= 42 && built.report.guaranteed_lower_bound == 42 && verified && dist >= 4,
        format!(
            "size {size} (guarantee {}), verified d_I {dist}",
            built.report.guaranteed_lower_bound
        ),
    ))
}

fn greedy_rs2() -> Result<Check> {
    let t4 = rs2_threshold(4);
    let c4 = construct_rs2(4, None)?;
    let holds4 = check_rs2_criterion(&c4)?.holds;
    let d4 = rs_exhaustive_insdel(&c4, MAX_MESSAGES)?.distance;
    let c5 = construct_rs2(5, None)?;
    let holds5 = check_rs2_criterion(&c5)?.holds;
    let codes = |c: &RsCode| c.alphas().iter().map(|a| a.code()).collect::<Vec<_>>();
    Ok((
        t4 == 36
            && c4.field().order() == 37
            && holds4
            && d4 == 4
            && c5.field().order() == 181
            && holds5,
        format!(
            "n=4: q={} alphas {:?} exhaustive d_I {d4}; n=5: q={} alphas {:?} criterion {holds5}",
            c4.field().order(),
            codes(&c4),
            c5.field().order(),
            codes(&c5)
        ),
    ))
}

fn criterion_vs_sweep() -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut holding = 0;
    let mut total = 0;
    for (q, n) in [(7u64, 3usize), (7, 4), (11, 4), (13, 5)] {
        let field = Field::prime(q)?;
        let elements: Vec<Fe> = field.elements().collect();
        for _ in 0..50 {
            let alphas: Vec<Fe> = elements.choose_multiple(&mut rng, n).copied().collect();
            let code = RsCode::new(&field, alphas, 2)?;
            let verdict = check_rs2_criterion(&code)?.holds;
            let exact = rs_exhaustive_insdel(&code, MAX_MESSAGES)?.distance == 2 * n as u64 - 4;
            if verdict != exact {
                let codes: Vec<u32> = code.alphas().iter().map(|a| a.code()).collect();
                return Ok((
                    false,
                    format!("q={q} alphas {codes:?}: criterion {verdict}, sweep {exact}"),
                ));
            }
            holding += verdict as usize;
            total += 1;
        }
    }
    Ok((
        true,
        format!("{total} vectors agree ({holding} reach 2n-4)"),
    ))
}

fn rs3_witness() -> Result<Check> {
    let mut parts = Vec::new();
    let mut ok = true;
    for q in [7u64, 11, 101] {
        let field = Field::of_order(q)?;
        let code = RsCode::from_codes(&field, &(0..6).collect::<Vec<_>>(), 3)?;
        let base = invertible_index_pair(&code, 3)?.one_based();
        let w = close_pair_witness(&code)?;
        let good =
            base == IndexPair {
                i: vec![3, 4],
                j: vec![1, 3],
            } && w.f != w.g
                && w.lcs >= 4
                && w.insdel <= 4;
        ok &= good;
        parts.push(format!(
            "q={q}: f={:?} g={:?} lcs {}",
            w.f.codes(),
            w.g.codes(),
            w.lcs
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn exact_values() -> Result<Check> {
    let cases = [
        (2, 3, 2, 8),
        (2, 3, 6, 2),
        (3, 3, 6, 3),
        (2, 4, 2, 16),
        (2, 4, 8, 2),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (q, n, d, want) in cases {
        let got = exact_iq(q, n, d, None)?;
        let dist = code_min_distance(&got.code, Metric::Insdel)?.distance;
        ok &= got.size == want && dist >= d as u64;
        parts.push(format!("I_{q}({n},{d})={}", got.size));
    }
    Ok((ok, parts.join(" ")))
}

fn sub_singleton() -> Result<Check> {
    let mut parts = Vec::new();
    let mut ok = true;
    for q in [2u32, 3] {
        for n in [3u32, 4] {
            for d in (4..=2 * n - 2).step_by(2) {
                let exact = BigUint::from(exact_iq(q, n, d, None)?.size);
                let singleton = singleton_insdel(q, n, d)?;
                let (bound, clause) = sub_singleton_bound(q, n, d)?;
                ok &= exact < singleton && exact <= bound;
                parts.push(format!(
                    "I_{q}({n},{d})={exact}<{singleton},<={bound}({})",
                    clause.label()
                ));
            }
        }
    }
    Ok((ok, parts.join(" ")))
}

fn counterexample() -> Result<Check> {
    let c = remark_counterexample(5, 4)?;
    let verified = code_min_distance(&c.code, Metric::Insdel)?.distance;
    Ok((
        c.code.len() == 6 && verified == 6 && c.code.len() > 5,
        format!("{} words, d_I {verified}, q^(n-d/2) = 5", c.code.len()),
    ))
}

fn support_sets() -> Result<Check> {
    let field = Field::prime(5)?;
    let rs = RsCode::from_codes(&field, &[0, 1, 2, 3], 2)?;
    let words = rs
        .codewords(MAX_MESSAGES)?
        .into_iter()
        .map(|w| Word::new(5, w))
        .collect::<Result<Vec<_>>>()?;
    let report = verify_support_structure(&Code::insdel(5, 4, words)?, 2)?;
    let summary: Vec<String> = report
        .counts
        .iter()
        .map(|(r, c)| format!("{r:?}:{c}"))
        .collect();
    Ok((report.ok && report.counts.len() == 4, summary.join(" ")))
}

fn affine_suite() -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    let mut maps_checked = 0usize;
    for q in [5u64, 7, 13] {
        let f = Field::prime(q)?;
        let els: Vec<Fe> = f.elements().collect();
        for &a1 in &els {
            for &a2 in &els {
                for &b1 in &els {
                    for &b2 in &els {
                        if a1 == a2 || b1 == b2 {
                            continue;
                        }
                        let s = affine_through(&f, (a1, a2), (b1, b2))?;
                        if affine_apply(&f, &s, a1) != b1 || affine_apply(&f, &s, a2) != b2 {
                            return Ok((
                                false,
                                format!("GF({q}): no map for ({a1:?},{a2:?}) -> ({b1:?},{b2:?})"),
                            ));
                        }
                    }
                }
            }
        }
        for &a in &els[1..] {
            for &b in &els {
                let s = AffineMap::new(&f, a, b)?;
                maps_checked += 1;
                if s.is_identity(&f) {
                    continue;
                }
                let fixed: Vec<Fe> = els
                    .iter()
                    .copied()
                    .filter(|&x| affine_apply(&f, &s, x) == x)
                    .collect();
                let reported = match affine_fixed_points(&f, &s) {
                    FixedPoints::One(c) => vec![f.elem(c as u64)?],
                    _ => vec![],
                };
                if fixed.len() > 1 || fixed != reported {
                    return Ok((false, format!("GF({q}): map {s:?} fixes {fixed:?}")));
                }
            }
        }
        for _ in 0..500 {
            let deg = rng.gen_range(0..6);
            let poly = Poly::new(
                &f,
                (0..=deg)
                    .map(|_| els[rng.gen_range(0..els.len())])
                    .collect(),
            );
            let s = AffineMap::new(
                &f,
                els[rng.gen_range(1..els.len())],
                els[rng.gen_range(0..els.len())],
            )?;
            let alpha = els[rng.gen_range(0..els.len())];
            if poly.eval(alpha) != s.act_on_poly(&poly).eval(affine_apply(&f, &s, alpha)) {
                return Ok((
                    false,
                    format!("GF({q}): place action fails for {s:?} at {alpha:?}"),
                ));
            }
        }
    }
    Ok((
        true,
        format!("2-transitivity exhaustive, {maps_checked} maps, 1500 place-action samples"),
    ))
}

/// Runs criterion `id` (1 to 11).
pub fn run(id: u32) -> Result<CriterionOutcome> {
    let &(_, name, budget) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::invalid(format!("no criterion {id}")))?;
    let start = Instant::now();
    let result = match id {
        1 => metric_oracle(),
        2 => lift_identity(),
        3 => pigeonhole_construction(),
        4 => greedy_rs2(),
        5 => criterion_vs_sweep(),
        6 => rs3_witness(),
        7 => exact_values(),
        8 => sub_singleton(),
        9 => counterexample(),
        10 => support_sets(),
        _ => affine_suite(),
    };
    let elapsed = start.elapsed();
    let (pass, mut detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    let in_budget = elapsed <= Duration::from_secs(budget);
    if !in_budget {
        detail.push_str(&format!(" (over the {budget} s budget)"));
    }
    Ok(CriterionOutcome {
        id,
        name,
        pass: pass && in_budget,
        detail,
        seconds: elapsed.as_secs_f64(),
        budget_seconds: budget,
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|c| run(c.0).expect("criterion ids are valid"))
        .collect()
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {} [{:.2} s]: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}
