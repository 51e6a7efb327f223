//! Size and distance bounds for insdel codes, in exact arithmetic.

mod clique;
mod structure;

pub use clique::{exact_iq, ExactIq, MAX_VERTICES};
pub use structure::{
    full_projection_check, project_code, remark_counterexample, verify_support_structure,
    Counterexample, CubeCheck, SupportReport,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bigmath::{binomial, factorial, pow};
use crate::error::{Error, Result};

fn check_even_distance(n: u32, d: u32) -> Result<()> {
    if d % 2 == 1 {
        return Err(Error::invalid(format!(
            "insdel distance between equal-length words is even, got d = {d}"
        )));
    }
    if d < 2 || d > 2 * n {
        return Err(Error::invalid(format!(
            "d must lie in 2..={}, got {d}",
            2 * n
        )));
    }
    Ok(())
}

/// `q^(n - d/2 + 1)`.
pub fn singleton_insdel(q: u32, n: u32, d: u32) -> Result<BigUint> {
    check_even_distance(n, d)?;
    Ok(pow(q as u64, (n - d / 2 + 1) as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// Exact values at `d = 2` and `d = 2n`.
    #[serde(rename = "i")]
    Exact,
    /// `floor((q^(n-d/2+1) + q^(n-d/2)) / 2)` for `4 <= d <= 2n - 2`.
    #[serde(rename = "ii")]
    Halved,
    /// `q^(n-d/2)` for `2q <= d <= 2n - 2`.
    #[serde(rename = "iii")]
    LargeDistance,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Exact => "i",
            Clause::Halved => "ii",
            Clause::LargeDistance => "iii",
        }
    }
}

/// Every clause of the sub-Singleton bound that applies to `(q, n, d)`.
pub fn sub_singleton_clauses(q: u32, n: u32, d: u32) -> Result<Vec<(Clause, BigUint)>> {
    check_even_distance(n, d)?;
    let (qq, e) = (q as u64, (n - d / 2) as u64);
    let mut out = Vec::new();
    if d == 2 {
        out.push((Clause::Exact, pow(qq, n as u64)));
    } else if d == 2 * n {
        out.push((Clause::Exact, BigUint::from(q)));
    }
    if 4 <= d && d + 2 <= 2 * n {
        out.push((Clause::Halved, (pow(qq, e + 1) + pow(qq, e)) / 2u32));
    }
    if 2 * q <= d && d + 2 <= 2 * n {
        out.push((Clause::LargeDistance, pow(qq, e)));
    }
    Ok(out)
}

/// The tightest applicable clause.
pub fn sub_singleton_bound(q: u32, n: u32, d: u32) -> Result<(BigUint, Clause)> {
    sub_singleton_clauses(q, n, d)?
        .into_iter()
        .map(|(c, v)| (v, c))
        .min()
        .ok_or_else(|| Error::Internal(format!("no clause applies to q={q}, n={n}, d={d}")))
}

/// `q^(n + d/2) / (sum_{i <= d/2} binom(n, i) (q-1)^i)^2`.
pub fn levenshtein_lower(q: u32, n: u32, d: u32) -> Result<BigRational> {
    check_even_distance(n, d)?;
    let t = d / 2;
    let ball: BigUint = (0..=t as u64)
        .map(|i| binomial(n as u64, i) * pow(q as u64 - 1, i))
        .sum();
    let num = pow(q as u64, (n + t) as u64);
    Ok(BigRational::new(
        BigInt::from(num),
        BigInt::from(&ball * &ball),
    ))
}

pub fn floor_rational(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// Branch of the case split on `k` against `(n + 1) / 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KRegime {
    /// `3k > n + 1`.
    Large,
    /// `3k < n + 1`.
    Small,
    /// `3k = n + 1`: both branches hold.
    Boundary,
}

fn regime(n: u32, k: u32) -> KRegime {
    match (3 * k).cmp(&(n + 1)) {
        std::cmp::Ordering::Greater => KRegime::Large,
        std::cmp::Ordering::Less => KRegime::Small,
        std::cmp::Ordering::Equal => KRegime::Boundary,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportBound {
    pub q: u32,
    pub n: u32,
    pub k: u32,
    pub delta: u32,
    pub regime: KRegime,
    pub h: u32,
    /// Right-hand side binomial, as a decimal string.
    pub rhs: String,
    pub bound_applies: bool,
    /// `2n - 2k + 2 - 2 delta`, reported when the bound applies.
    pub d_max: Option<u32>,
}

/// Decides `q^delta <= (q - 1) * rhs` for Singleton-optimal codes of size `q^k`.
///
/// When it holds, every such code has insdel distance at most `2n - 2k + 2 - 2 delta`.
pub fn support_threshold(q: u32, n: u32, k: u32, delta: u32) -> Result<SupportBound> {
    if q < 2 {
        return Err(Error::invalid(format!("q must be at least 2, got {q}")));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k must lie in 1..={n}, got {k}")));
    }
    if delta < 2 || delta > n - k + 1 {
        return Err(Error::invalid(format!(
            "delta must lie in 2..={}, got {delta}",
            n - k + 1
        )));
    }
    let (nn, kk) = (n as u64, k as u64);
    let large = || binomial((nn + kk + 4) / 2, kk - 1);
    let small = || {
        if nn > kk {
            binomial(nn - kk - 1, kk - 1)
        } else {
            BigUint::zero()
        }
    };
    let reg = regime(n, k);
    let (rhs, h) = match reg {
        KRegime::Large => (large(), (n - k) / 2 + 2),
        KRegime::Small => (small(), k + 1),
        KRegime::Boundary => (large().max(small()), k + 1),
    };
    if h > n - k + 1 {
        return Err(Error::invalid(format!(
            "support size h = {h} exceeds n - k + 1 = {}",
            n - k + 1
        )));
    }
    let applies = pow(q as u64, delta as u64) <= BigUint::from(q - 1) * &rhs;
    Ok(SupportBound {
        q,
        n,
        k,
        delta,
        regime: reg,
        h,
        rhs: rhs.to_string(),
        bound_applies: applies,
        d_max: applies.then(|| 2 * n + 2 - 2 * k - 2 * delta),
    })
}

/// Field-size threshold `T = base^(1/root)`: every `q <= T` satisfies the support bound's premise.
#[derive(Debug, Clone, Serialize)]
pub struct FieldThreshold {
    pub n: u32,
    pub k: u32,
    pub delta: u32,
    pub regime: KRegime,
    /// Exact `base`, as `num/den`.
    pub base: String,
    pub root: u32,
    /// Largest integer `q` with `q^root <= base`.
    pub max_q: String,
    pub approx: f64,
    #[serde(skip)]
    base_value: BigRational,
}

impl FieldThreshold {
    pub fn base_value(&self) -> &BigRational {
        &self.base_value
    }

    /// Whether `q` is at or below the threshold.
    pub fn admits(&self, q: u64) -> bool {
        BigRational::from_integer(BigInt::from(pow(q, self.root as u64))) <= self.base_value
    }
}

/// The closed-form field-size threshold. The large-`k` branch is used only for `3k > n + 1`.
pub fn field_threshold(n: u32, k: u32, delta: u32) -> Result<FieldThreshold> {
    if delta < 2 {
        return Err(Error::invalid(format!(
            "delta must be at least 2, got {delta}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k must lie in 1..={n}, got {k}")));
    }
    let root = delta - 1;
    let reg = if 3 * k > n + 1 {
        KRegime::Large
    } else {
        KRegime::Small
    };
    let base = match reg {
        KRegime::Large => {
            let e = (n + k + 4) / (2 * root);
            BigRational::from_integer(BigInt::from(pow(2, (e * root) as u64)))
        }
        _ => {
            let span = (n as i64 + 1 - 2 * k as i64).max(0) as u64;
            let num = pow(span, (k - 1) as u64);
            let den = factorial((k - 1) as u64) * 2u32;
            BigRational::new(BigInt::from(num), BigInt::from(den))
        }
    };
    let floor = base.floor().to_integer().to_biguint().unwrap_or_default();
    let max_q = floor.nth_root(root);
    let approx = base
        .to_f64()
        .unwrap_or(f64::INFINITY)
        .powf(1.0 / root as f64);
    Ok(FieldThreshold {
        n,
        k,
        delta,
        regime: reg,
        base: format!("{}/{}", base.numer(), base.denom()),
        root,
        max_q: max_q.to_string(),
        approx,
        base_value: base,
    })
}

fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// `2^((1-r) n H_2(r/(1-r)) / (delta - 1))` with `r = k/n`; the leading-order
/// field-size threshold for small `k`, without its `1 + o(1)` factor.
pub fn field_threshold_asymptote(n: u32, k: u32, delta: u32) -> Result<f64> {
    if delta < 2 || k == 0 || 3 * k > n + 1 {
        return Err(Error::invalid(
            "asymptote needs delta >= 2 and 1 <= k <= (n+1)/3",
        ));
    }
    let r = k as f64 / n as f64;
    Ok(2f64.powf((1.0 - r) * n as f64 * binary_entropy(r / (1.0 - r)) / (delta - 1) as f64))
}

/// `(q^2 + q) / 2`, the cap on codes of distance `2n - 2` for `n >= 3`.
pub fn near_maximal_distance_cap(q: u32) -> u64 {
    (q as u64 * q as u64 + q as u64) / 2
}

/// Everything the calculators know about `(q, n, d)`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub q: u32,
    pub n: u32,
    pub d: u32,
    pub singleton: String,
    pub sub_singleton: String,
    pub sub_singleton_clause: Clause,
    pub sub_singleton_clauses: Vec<(Clause, String)>,
    pub levenshtein: String,
    pub levenshtein_floor: String,
    /// Present at `d = 2n - 2` with `n >= 3`.
    pub near_maximal_cap: Option<u64>,
    /// Present at `d = 2n - 2` with `n >= q + 1`: at most `q` codewords.
    pub alphabet_cap: Option<u32>,
    /// Pigeonhole guarantee with `delta = d/2`, when `delta >= 2`.
    pub lift_guarantee: Option<String>,
}

pub fn bounds_report(q: u32, n: u32, d: u32) -> Result<BoundsReport> {
    if q < 2 || n == 0 {
        return Err(Error::invalid(format!(
            "need q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    let (sub_singleton, clause) = sub_singleton_bound(q, n, d)?;
    let lev = levenshtein_lower(q, n, d)?;
    let delta = d / 2;
    let lift = if delta >= 2 {
        Some(crate::lift::lift_guarantee(q, n, delta)?.guarantee)
    } else {
        None
    };
    Ok(BoundsReport {
        q,
        n,
        d,
        singleton: singleton_insdel(q, n, d)?.to_string(),
        sub_singleton: sub_singleton.to_string(),
        sub_singleton_clause: clause,
        sub_singleton_clauses: sub_singleton_clauses(q, n, d)?
            .into_iter()
            .map(|(c, v)| (c, v.to_string()))
            .collect(),
        levenshtein: format!("{}/{}", lev.numer(), lev.denom()),
        levenshtein_floor: floor_rational(&lev).to_string(),
        near_maximal_cap: (n >= 3 && d + 2 == 2 * n).then(|| near_maximal_distance_cap(q)),
        alphabet_cap: (n > q && d + 2 == 2 * n).then_some(q),
        lift_guarantee: lift,
    })
}

/// `true` when `x` is an integer.
pub fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_insdel(2, 3, 2).unwrap(), big(8));
        assert_eq!(singleton_insdel(2, 3, 6).unwrap(), big(2));
        assert_eq!(singleton_insdel(2, 3, 4).unwrap(), big(4));
        assert!(singleton_insdel(2, 3, 3).is_err());
        assert!(singleton_insdel(2, 3, 8).is_err());
    }

    #[test]
    fn sub_singleton_examples() {
        assert_eq!(
            sub_singleton_bound(2, 3, 4).unwrap(),
            (big(2), Clause::LargeDistance)
        );
        let clauses = sub_singleton_clauses(2, 3, 4).unwrap();
        assert!(clauses.contains(&(Clause::Halved, big(3))));
        assert_eq!(
            sub_singleton_bound(2, 4, 6).unwrap(),
            (big(2), Clause::LargeDistance)
        );
        assert_eq!(
            sub_singleton_bound(3, 3, 6).unwrap(),
            (big(3), Clause::Exact)
        );
        assert_eq!(
            sub_singleton_bound(3, 3, 4).unwrap(),
            (big(6), Clause::Halved)
        );
        assert_eq!(
            sub_singleton_bound(5, 4, 2).unwrap(),
            (big(625), Clause::Exact)
        );
        // never above the Singleton ceiling
        for q in 2..6 {
            for n in 1..7 {
                for d in (2..=2 * n).step_by(2) {
                    assert!(
                        sub_singleton_bound(q, n, d).unwrap().0
                            <= singleton_insdel(q, n, d).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn levenshtein_examples() {
        let x = levenshtein_lower(2, 3, 2).unwrap();
        assert_eq!(x, BigRational::one());
        assert!(levenshtein_lower(2, 3, 0).is_err());
        let y = levenshtein_lower(3, 4, 4).unwrap();
        assert_eq!(
            y,
            BigRational::new(BigInt::from(729), BigInt::from(33 * 33))
        );
    }

    #[test]
    fn support_threshold_examples() {
        let b = support_threshold(3, 20, 2, 2).unwrap();
        assert_eq!(b.regime, KRegime::Small);
        assert_eq!(b.rhs, "17");
        assert!(b.bound_applies);
        assert_eq!(b.d_max, Some(34));
        let b = support_threshold(1000, 20, 2, 5).unwrap();
        assert!(!b.bound_applies);
        assert_eq!(b.d_max, None);
        let b = support_threshold(2, 8, 3, 2).unwrap();
        assert_eq!(b.regime, KRegime::Boundary);
        assert_eq!(b.rhs, binomial(7, 2).to_string());
        assert!(support_threshold(3, 20, 2, 1).is_err());
    }

    #[test]
    fn field_threshold_examples() {
        let t = field_threshold(10, 2, 2).unwrap();
        assert_eq!(t.base, "7/2");
        assert_eq!(t.max_q, "3");
        assert!(t.admits(3) && !t.admits(4));
        let t = field_threshold(10, 4, 2).unwrap();
        assert_eq!(t.regime, KRegime::Large);
        assert_eq!(t.max_q, "512");
        let t = field_threshold(10, 4, 3).unwrap();
        assert_eq!(t.max_q, "16");
    }

    #[test]
    fn field_threshold_small_regime_implies_premise() {
        for n in 4..40 {
            for k in 2..=(n + 1) / 3 {
                for delta in 2..=(n - k + 1).min(6) {
                    let t = field_threshold(n, k, delta).unwrap();
                    let max_q: u64 = t.max_q.parse().unwrap();
                    for q in 2..=max_q.min(200) {
                        assert!(
                            support_threshold(q as u32, n, k, delta)
                                .unwrap()
                                .bound_applies
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn field_threshold_large_regime_can_miss_premise() {
        let t = field_threshold(10, 4, 2).unwrap();
        assert!(t.admits(512));
        assert!(!support_threshold(512, 10, 4, 2).unwrap().bound_applies);
    }

    #[test]
    fn thresholds_shrink_with_delta() {
        for n in 6..30 {
            for k in 2..n / 2 {
                let mut prev: Option<f64> = None;
                for delta in 2..8 {
                    let t = field_threshold(n, k, delta).unwrap();
                    if t.base_value() <= &BigRational::one() {
                        continue;
                    }
                    if let Some(p) = prev {
                        assert!(t.approx <= p + 1e-9);
                    }
                    prev = Some(t.approx);
                }
            }
        }
    }

    #[test]
    fn report_collects_everything() {
        let r = bounds_report(2, 3, 4).unwrap();
        assert_eq!(r.singleton, "4");
        assert_eq!(r.sub_singleton, "2");
        assert_eq!(r.near_maximal_cap, Some(3));
        assert_eq!(r.alphabet_cap, Some(2));
        assert!(field_threshold_asymptote(30, 5, 2).unwrap() > 1.0);
    }
}
