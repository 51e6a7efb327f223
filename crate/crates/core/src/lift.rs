//! Lifting constant-weight L1 codes to insdel codes through `psi`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bigmath::{binomial, div_ceil, log_big, pow};
use crate::code::{code_min_distance, Code, Metric};
use crate::error::{Error, Result};
use crate::metrics::psi;

/// Default cap on pairwise LCS computations, overridable through `INSDEL_MAX_PAIRS`.
pub const DEFAULT_MAX_PAIRS: u128 = 10_000_000;

/// Reads `INSDEL_MAX_PAIRS`, falling back to [`DEFAULT_MAX_PAIRS`].
pub fn max_pairs_from_env() -> Result<u128> {
    match std::env::var("INSDEL_MAX_PAIRS") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::invalid(format!(
                "INSDEL_MAX_PAIRS must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_PAIRS),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStatus {
    /// Checked by an exhaustive pairwise sweep.
    Verified,
    /// Carried over from the L1 distance without enumeration.
    InheritedUnverified,
    /// Fewer than two members.
    Undefined,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftReport {
    pub q: u32,
    pub n: usize,
    pub size: usize,
    pub min_l1: Option<u64>,
    pub min_insdel: Option<u64>,
    pub status: DistanceStatus,
    pub pairs: u128,
    pub max_pairs: u128,
}

#[derive(Debug, Clone)]
pub struct Lifted {
    pub code: Code,
    pub report: LiftReport,
}

/// Applies `psi` to every member, then certifies the insdel distance when the
/// pair count is within `max_pairs`.
pub fn lift(source: &Code, max_pairs: u128) -> Result<Lifted> {
    let comps = source
        .compositions()
        .ok_or_else(|| Error::invalid("lift expects a CWL1 code"))?;
    let words = comps.iter().map(psi).collect();
    let code = Code::insdel(source.q(), source.n(), words)?;
    let m = code.len() as u128;
    let pairs = m * m.saturating_sub(1) / 2;
    let min_l1 = optional(code_min_distance(source, Metric::L1))?;
    let (min_insdel, status) = if min_l1.is_none() {
        (None, DistanceStatus::Undefined)
    } else if pairs <= max_pairs {
        (
            optional(code_min_distance(&code, Metric::Insdel))?,
            DistanceStatus::Verified,
        )
    } else {
        (min_l1, DistanceStatus::InheritedUnverified)
    };
    if status == DistanceStatus::Verified && min_insdel != min_l1 {
        return Err(Error::Internal(format!(
            "lifted distance {min_insdel:?} differs from L1 distance {min_l1:?}"
        )));
    }
    let report = LiftReport {
        q: code.q(),
        n: code.n(),
        size: code.len(),
        min_l1,
        min_insdel,
        status,
        pairs,
        max_pairs,
    };
    Ok(Lifted { code, report })
}

fn optional(r: Result<crate::code::MinDistance>) -> Result<Option<u64>> {
    match r {
        Ok(md) => Ok(Some(md.distance)),
        Err(Error::UndefinedDistance(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Size guarantee of the lifted pigeonhole construction against the insdel Singleton ceiling.
#[derive(Debug, Clone, Serialize)]
pub struct LiftGuarantee {
    pub q: u32,
    pub n: u32,
    pub delta: u32,
    /// `ceil(binom(n+q-1, n) / ((2q+2)^(delta-2) (2q+1)))`.
    pub guarantee: String,
    /// `q^(n - delta + 1)`.
    pub singleton_ceiling: String,
    pub log_q_guarantee: f64,
    pub ceiling_exponent: i64,
    /// `ceiling_exponent - log_q_guarantee`.
    pub rate_gap: f64,
}

impl LiftGuarantee {
    pub fn guarantee_value(&self) -> BigUint {
        self.guarantee.parse().expect("decimal")
    }

    pub fn ceiling_value(&self) -> BigUint {
        self.singleton_ceiling.parse().expect("decimal")
    }
}

pub fn lift_guarantee(q: u32, n: u32, delta: u32) -> Result<LiftGuarantee> {
    if q < 2 || delta < 2 || n < delta {
        return Err(Error::invalid(format!(
            "need q >= 2, delta >= 2, n >= delta; got q={q}, n={n}, delta={delta}"
        )));
    }
    let (qq, nn, dd) = (q as u64, n as u64, delta as u64);
    let denom = pow(2 * qq + 2, dd - 2) * BigUint::from(2 * qq + 1);
    let guarantee = div_ceil(&binomial(nn + qq - 1, nn), &denom);
    let exponent = nn - dd + 1;
    let ceiling = pow(qq, exponent);
    let log_q = log_big(&guarantee, q as f64);
    Ok(LiftGuarantee {
        q,
        n,
        delta,
        guarantee: guarantee.to_string(),
        singleton_ceiling: ceiling.to_string(),
        log_q_guarantee: log_q,
        ceiling_exponent: exponent as i64,
        rate_gap: exponent as f64 - log_q,
    })
}

/// Ratio guarantee / ceiling as a float, for trend tables.
pub fn guarantee_ratio(g: &LiftGuarantee) -> f64 {
    let num = g.guarantee_value().to_f64().unwrap_or(f64::INFINITY);
    let den = g.ceiling_value().to_f64().unwrap_or(f64::INFINITY);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::Composition;

    fn cwl1(q: u32, n: u32, rows: &[&[u32]]) -> Code {
        Code::cwl1(
            q,
            n,
            rows.iter()
                .map(|r| Composition::new(r.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn lift_examples() {
        let l = lift(&cwl1(2, 3, &[&[3, 0], &[0, 3]]), DEFAULT_MAX_PAIRS).unwrap();
        let rows: Vec<&[u32]> = l
            .code
            .words()
            .unwrap()
            .iter()
            .map(|w| w.symbols())
            .collect();
        assert_eq!(rows, vec![&[0, 0, 0][..], &[1, 1, 1]]);
        assert_eq!(l.report.min_insdel, Some(6));
        assert_eq!(l.report.status, DistanceStatus::Verified);

        let l = lift(&cwl1(2, 3, &[&[0, 3], &[2, 1]]), DEFAULT_MAX_PAIRS).unwrap();
        let rows: Vec<&[u32]> = l
            .code
            .words()
            .unwrap()
            .iter()
            .map(|w| w.symbols())
            .collect();
        assert_eq!(rows, vec![&[1, 1, 1][..], &[0, 0, 1]]);
        assert_eq!(l.report.min_insdel, Some(4));
    }

    #[test]
    fn cap_marks_distance_inherited() {
        let l = lift(&cwl1(2, 3, &[&[3, 0], &[0, 3], &[2, 1]]), 2).unwrap();
        assert_eq!(l.report.status, DistanceStatus::InheritedUnverified);
        assert_eq!(l.report.min_insdel, Some(2));
        let single = lift(&cwl1(2, 3, &[&[3, 0]]), 0).unwrap();
        assert_eq!(single.report.status, DistanceStatus::Undefined);
        assert!(single.code.words().unwrap()[0].is_sorted());
    }

    #[test]
    fn guarantee_examples() {
        let g = lift_guarantee(4, 8, 2).unwrap();
        assert_eq!(g.guarantee, "19");
        assert_eq!(g.singleton_ceiling, "16384");
        let mut prev = f64::INFINITY;
        for q in [8, 16, 32, 64] {
            let g = lift_guarantee(q, 6, 2).unwrap();
            assert!(g.guarantee_value() <= g.ceiling_value());
            let ratio = guarantee_ratio(&g);
            assert!(ratio < prev);
            prev = ratio;
        }
        assert!(lift_guarantee(4, 8, 1).is_err());
    }
}
