//! Report assembly: canonical JSON values for every CLI command, reused by
//! the C bindings.  Canonical form means sorted object keys (the default
//! `serde_json::Value` map) and integers rendered as decimal strings, so a
//! report parses and re-serializes byte-identically.

use crate::error::Result;
use crate::fusion::{self, FusionResult};
use crate::gpring;
use crate::partition::{parse_composition, Partition};
use crate::qpoly::{QPoly, QSeries};
use crate::verify::{self, CriterionResult};
use crate::wedge;
use crate::winf;
use crate::Error;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

pub fn qpoly_json(p: &QPoly) -> Value {
    Value::Object(p.to_json_map().into_iter().map(|(k, v)| (k, Value::String(v))).collect())
}

pub fn qseries_json(s: &QSeries) -> Value {
    Value::Object(s.to_json_map().into_iter().map(|(k, v)| (k, Value::String(v))).collect())
}

fn components_json(components: &std::collections::BTreeMap<Partition, QPoly>) -> Value {
    Value::Object(
        components.iter().map(|(mu, c)| (mu.to_string(), qpoly_json(c))).collect::<Map<_, _>>(),
    )
}

fn points_json(points: &[BigRational]) -> Value {
    Value::Array(points.iter().map(|p| Value::String(p.to_string())).collect())
}

/// Serializes a value in the canonical form (compact, sorted keys).
pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("report values serialize")
}

pub fn parse_points(s: &str) -> Result<Vec<BigRational>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map(|v| BigRational::from_integer(v.into()))
                .map_err(|_| Error::InvalidPartition(format!("bad point {t:?}")))
        })
        .collect()
}

/// `ring --mu ...`: Hilbert series, isotypic decomposition, filtered
/// dimensions, and the two cross-checks.
pub fn ring_report(mu: &Partition, points: Option<Vec<BigRational>>, elapsed_ms: u128) -> Result<Value> {
    let pts = points.unwrap_or_else(|| gpring::default_points(mu.len()));
    let decomp = gpring::rmu_decompose(mu)?;
    let amu = gpring::amu_graded_dims(mu, &pts)?;

    let kostka_match = match gpring::check_gp_theorem(mu) {
        Ok(_) => true,
        Err(Error::CheckFailed(_)) => false,
        Err(e) => return Err(e),
    };
    let hilbert_coeffs: Vec<u64> = (0..=decomp.hilbert.max_exp().unwrap_or(0))
        .map(|d| u64::try_from(decomp.hilbert.coeff(d).magnitude().clone()).unwrap_or(0))
        .collect();
    let fstar_match = amu == hilbert_coeffs;

    Ok(json!({
        "command": "ring",
        "mu": mu.to_string(),
        "points": points_json(&pts),
        "hilbert": qpoly_json(&decomp.hilbert),
        "decomposition": components_json(&decomp.components),
        "amu_dims": amu,
        "checks": { "kostka_match": kostka_match, "fstar_match": fstar_match },
        "elapsed_ms": elapsed_ms as u64,
    }))
}

/// `fusion --mu ... --n ...`: graded dimensions, decomposition, checks.
pub fn fusion_report(
    mu: &[u32],
    n: usize,
    points: Option<Vec<BigRational>>,
    elapsed_ms: u128,
) -> Result<Value> {
    let r: FusionResult = fusion::fusion_character(mu, n, points.as_deref())?;
    let kostka_match = match fusion::check_fusion_kostka(&r) {
        Ok(()) => true,
        Err(Error::CheckFailed(_)) => false,
        Err(e) => return Err(e),
    };
    let z_independence = match fusion::check_z_independence(mu, n) {
        Ok(()) => true,
        Err(Error::CheckFailed(_)) => false,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "command": "fusion",
        "mu": mu.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
        "n": n,
        "points": points_json(&r.points),
        "total_dim": r.total_dim,
        "dims_per_degree": r.dims_per_degree,
        "decomposition": components_json(&r.components),
        "checks": { "kostka_match": kostka_match, "z_independence": z_independence },
        "elapsed_ms": elapsed_ms as u64,
    }))
}

/// `wedge --N ... --n ...`: both routes' component polynomials (in `q^-1`)
/// and the agreement/identity checks.
pub fn wedge_report(n_boxes: u32, rank: usize, elapsed_ms: u128) -> Result<Value> {
    let chars = wedge::character_route_components(n_boxes, rank)?;
    let brute = wedge::brute_force_route_components(n_boxes, rank)?;
    let routes_agree = chars == brute;
    let c = wedge::wedge_char(n_boxes, rank)?;
    Ok(json!({
        "command": "wedge",
        "N": n_boxes,
        "n": rank,
        "character_route": components_json(&chars),
        "brute_force_route": components_json(&brute),
        "total": qpoly_json(&c.total),
        "checks": { "routes_agree": routes_agree, "identity_ok": c.identity_ok },
        "elapsed_ms": elapsed_ms as u64,
    }))
}

/// `winf --mu ... --n ...`: the truncated W-algebra character plus the
/// stabilization sweep of the normalized hook-formula sequence.
pub fn winf_report(
    mu_bar: &Partition,
    n: usize,
    i: Option<u32>,
    depth: i64,
    m_max: u32,
    elapsed_ms: u128,
) -> Result<Value> {
    let series = winf::winf_char(mu_bar, n, depth)?;
    let i = i.unwrap_or(mu_bar.size() % n as u32);
    let limit = winf::limit_stabilization(mu_bar, n, i, depth, m_max)?;
    let terms: Vec<Value> = limit
        .terms
        .iter()
        .map(|t| {
            json!({
                "m": t.m,
                "N": t.n_boxes,
                "normalized": qpoly_json(&t.normalized),
            })
        })
        .collect();
    Ok(json!({
        "command": "winf",
        "mu": mu_bar.to_string(),
        "n": n,
        "i": i,
        "depth": depth,
        "mmax": m_max,
        "series": qseries_json(&series),
        "stabilization": {
            "terms": terms,
            "agree_depths": limit.agree,
            "stabilized_from": limit.stabilized_from,
            "window": limit.window.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "winf_shift": limit.winf_shift,
        },
        "checks": {
            "stabilized": limit.stabilized_from.is_some(),
            "winf_match": limit.winf_match,
            "nonnegative": series.all_coeffs_nonnegative(),
        },
        "elapsed_ms": elapsed_ms as u64,
    }))
}

/// `hooks --mu ... --n ...`: the factorization identity comparison.
pub fn hooks_report(mu: &Partition, n: usize, elapsed_ms: u128) -> Result<Value> {
    let r = winf::hook_factorization_check(mu, n)?;
    Ok(json!({
        "command": "hooks",
        "mu": mu.to_string(),
        "n": n,
        "hook_product": qpoly_json(&r.hook_product),
        "checks": { "corrected_ok": r.corrected_ok, "printed_ok": r.printed_ok },
        "elapsed_ms": elapsed_ms as u64,
    }))
}

/// `kostka --lambda ... --mu ...`: one or more computation routes with
/// cross-method agreement flags.
pub struct KostkaComputation {
    pub lambda: Partition,
    pub mu: Partition,
    pub method: String,
    pub k: QPoly,
    pub ktilde: QPoly,
    pub hook_matches: Option<bool>,
    pub ring_matches: Option<bool>,
}

pub fn kostka_report(c: &KostkaComputation, elapsed_ms: u128) -> Value {
    let mut checks = Map::new();
    if let Some(b) = c.hook_matches {
        checks.insert("hook_matches".into(), Value::Bool(b));
    }
    if let Some(b) = c.ring_matches {
        checks.insert("ring_matches".into(), Value::Bool(b));
    }
    json!({
        "command": "kostka",
        "lambda": c.lambda.to_string(),
        "mu": c.mu.to_string(),
        "method": c.method,
        "k": qpoly_json(&c.k),
        "ktilde": qpoly_json(&c.ktilde),
        "checks": Value::Object(checks),
        "elapsed_ms": elapsed_ms as u64,
    })
}

pub fn verify_report(level: verify::Level, results: &[CriterionResult], elapsed_ms: u128) -> Value {
    let pass = results.iter().all(|r| r.pass);
    let items: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "criterion": r.id,
                "name": r.name,
                "pass": r.pass,
                "detail": r.detail,
                "elapsed_ms": r.elapsed_ms as u64,
            })
        })
        .collect();
    json!({
        "command": "verify",
        "level": level.name(),
        "criteria": items,
        "pass": pass,
        "elapsed_ms": elapsed_ms as u64,
    })
}

/// Shared by the CLI and the C API: composition string like "2,1".
pub fn parse_mu_composition(s: &str) -> Result<Vec<u32>> {
    parse_composition(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_roundtrips() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        let v = ring_report(&mu, None, 0).unwrap();
        let s = canonical_json(&v);
        let reparsed: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(canonical_json(&reparsed), s);
    }

    #[test]
    fn ring_report_fields() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        let v = ring_report(&mu, None, 0).unwrap();
        assert_eq!(v["hilbert"]["0"], "1");
        assert_eq!(v["hilbert"]["1"], "2");
        assert_eq!(v["checks"]["kostka_match"], true);
        assert_eq!(v["checks"]["fstar_match"], true);
        assert_eq!(v["decomposition"]["2,1"]["1"], "1");
    }

    #[test]
    fn parse_points_rejects_garbage() {
        assert!(parse_points("1,x").is_err());
        assert_eq!(parse_points("0,1").unwrap().len(), 2);
    }
}
