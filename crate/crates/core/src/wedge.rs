//! The reduced wedge product at finite `N`: the `N`-th wedge power of the
//! fundamental evaluation module modulo the negative Heisenberg (power-sum)
//! operators.
//!
//! Degrees live in `t^{-1}`, so graded characters are reported as Laurent
//! polynomials in `q^{-1}` (all exponents nonpositive); the underlying
//! computation runs in positive variables and negates degrees at the end.

use crate::error::{Error, Result};
use crate::fusion::peel_dominant_weights;
use crate::gpring::{coset_character, rmu_decompose};
use crate::kostka::kostka_hook;
use crate::partition::{sln_irrep_dim, Partition};
use crate::qpoly::QPoly;
use crate::symgroup::{class_size, factorial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Graded multiplicities of the irreducible `sl_n`-modules in the reduced
/// wedge product, as polynomials in `q^{-1}`.
pub struct WedgeDecomposition {
    pub n_boxes: u32,
    pub rank: usize,
    pub components: BTreeMap<Partition, QPoly>,
}

/// Multiplicity of `pi_mu` from the character route:
/// `K_{mu,(1^N)}(q^{-1})`.
pub fn character_route_components(n_boxes: u32, rank: usize) -> Result<BTreeMap<Partition, QPoly>> {
    let mut out = BTreeMap::new();
    for mu in Partition::all_with_max_len(n_boxes, rank) {
        out.insert(mu.clone(), kostka_hook(&mu)?.substitute_inverse());
    }
    Ok(out)
}

/// Multiplicity of `pi_mu` from the brute-force route: alternating-isotype
/// multiplicities of the weight spaces of `pi^{(x)N} (x) R_N`, degree by
/// degree, peeled into irreducibles; degrees are negated at the end.
pub fn brute_force_route_components(n_boxes: u32, rank: usize) -> Result<BTreeMap<Partition, QPoly>> {
    let ring = rmu_decompose(&Partition::column(n_boxes))?;
    let classes = Partition::all(n_boxes);
    let sizes: Vec<BigRational> =
        classes.iter().map(|r| BigRational::from_integer(class_size(r))).collect();
    let signs: Vec<BigRational> = classes
        .iter()
        .map(|r| {
            let s: i64 = if (n_boxes as usize - r.len()) % 2 == 0 { 1 } else { -1 };
            BigRational::from_integer(BigInt::from(s))
        })
        .collect();
    let nfact = BigRational::from_integer(factorial(n_boxes));
    let weights = Partition::all_with_max_len(n_boxes, rank);
    // Permutation character of S_N on words of content beta.
    let word_chars: Vec<crate::symgroup::ClassFunction> =
        weights.iter().map(coset_character).collect();

    let mut components: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for (d, trace) in ring.traces.iter().enumerate() {
        let mut residual: BTreeMap<Partition, u64> = BTreeMap::new();
        let mut any = false;
        for (beta, wchar) in weights.iter().zip(&word_chars) {
            // multiplicity of the sign character in (words of weight beta) (x) R_N[d]
            let mut acc = BigRational::zero();
            for (i, rho) in classes.iter().enumerate() {
                acc += &sizes[i] * &signs[i] * wchar.get(rho) * trace.get(rho);
            }
            let m = acc / &nfact;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::BadMultiplicity {
                    label: format!("sign isotype of weight {beta} at degree {d}"),
                    value: m.to_string(),
                });
            }
            let m = u64::try_from(m.to_integer().magnitude().clone()).expect("small");
            if m > 0 {
                any = true;
            }
            residual.insert(beta.clone(), m);
        }
        if !any {
            continue;
        }
        let peeled = peel_dominant_weights(n_boxes, rank, residual)
            .map_err(|e| Error::CheckFailed(format!("wedge degree {d}: {e}")))?;
        for (mu, mult) in peeled {
            components
                .entry(mu)
                .or_insert_with(QPoly::zero)
                .add_term(-(d as i64), BigInt::from(mult));
        }
    }
    Ok(components)
}

/// Computes the reduced wedge decomposition by both routes and insists they
/// agree exactly.
pub fn reduced_wedge_decompose(n_boxes: u32, rank: usize) -> Result<WedgeDecomposition> {
    if n_boxes == 0 || rank < 2 {
        return Err(Error::InvalidPartition(format!(
            "need N >= 1 and n >= 2, got N={n_boxes}, n={rank}"
        )));
    }
    let chars = character_route_components(n_boxes, rank)?;
    let brute = brute_force_route_components(n_boxes, rank)?;
    let keys: std::collections::BTreeSet<&Partition> =
        chars.keys().chain(brute.keys()).collect();
    for mu in keys {
        let a = chars.get(mu).cloned().unwrap_or_else(QPoly::zero);
        let b = brute.get(mu).cloned().unwrap_or_else(QPoly::zero);
        if a != b {
            return Err(Error::CheckFailed(format!(
                "wedge routes disagree at mu={mu} for N={n_boxes}, n={rank}: character {a}, brute force {b}"
            )));
        }
    }
    Ok(WedgeDecomposition { n_boxes, rank, components: chars })
}

/// Character-level report: per-component polynomials in `q^{-1}`, the total
/// graded dimension, and the conjugation identity
/// `q^{-N(N-1)/2} K_{mu',(1^N)}(q) = K_{mu,(1^N)}(q^{-1})`.
pub struct WedgeChar {
    pub n_boxes: u32,
    pub rank: usize,
    pub components: BTreeMap<Partition, QPoly>,
    pub total: QPoly,
    pub identity_ok: bool,
}

pub fn wedge_char(n_boxes: u32, rank: usize) -> Result<WedgeChar> {
    let components = character_route_components(n_boxes, rank)?;
    let mut total = QPoly::zero();
    for (mu, comp) in &components {
        let dim = sln_irrep_dim(mu, rank)?;
        total += &comp.scale(&BigInt::from(dim));
    }
    // At q = 1 the total must be n^N (Schur-Weyl dimension count).
    let expect = BigInt::from(rank as u64).pow(n_boxes);
    if total.eval_one() != expect {
        return Err(Error::CheckFailed(format!(
            "wedge character totals {} at q=1, expected {expect}",
            total.eval_one()
        )));
    }
    // Conjugation identity for the Kostka polynomial, tested for all mu of
    // size N (not only those with at most `rank` rows).
    let shift = -((n_boxes as i64) * (n_boxes as i64 - 1) / 2);
    let mut identity_ok = true;
    for mu in Partition::all(n_boxes) {
        let lhs = kostka_hook(&mu.conjugate())?.shift(shift);
        let rhs = kostka_hook(&mu)?.substitute_inverse();
        if lhs != rhs {
            identity_ok = false;
        }
    }
    Ok(WedgeChar { n_boxes, rank, components, total, identity_ok })
}

/// The normalized character of the truncated level-1 wedge space: the
/// reduced wedge character scaled by `q^{n(mu_0')}` so that the component of
/// the balanced partition `mu_0` starts at degree zero.
pub struct NormalizedWedgeChar {
    pub i: u32,
    pub m: u32,
    pub rank: usize,
    pub n_boxes: u32,
    pub mu0: Partition,
    pub shift: u64,
    pub components: BTreeMap<Partition, QPoly>,
}

pub fn normalized_wedge_char(i: u32, m: u32, rank: usize) -> Result<NormalizedWedgeChar> {
    let n = rank as u32;
    if i > n {
        return Err(Error::IndexOutOfRange { index: i as usize, range: format!("0..={n}") });
    }
    // i = n folds into the next block
    let (i, m) = if i == n { (0, m + 1) } else { (i, m) };
    let n_boxes = n * m + i;
    if n_boxes == 0 {
        return Err(Error::InvalidPartition("N = nm + i must be positive".into()));
    }
    let mut mu0_conj_parts = vec![n; m as usize];
    if i > 0 {
        mu0_conj_parts.push(i);
    }
    let mu0_conj = Partition::new(mu0_conj_parts).expect("sorted by construction");
    let mu0 = mu0_conj.conjugate();
    let shift = mu0_conj.nstat();

    let mut components = BTreeMap::new();
    let mut max_exp: Option<(i64, Partition)> = None;
    let mut max_unique = true;
    for mu in Partition::all_with_max_len(n_boxes, rank) {
        let comp = kostka_hook(&mu)?.substitute_inverse().shift(shift as i64);
        if let Some(e) = comp.max_exp() {
            match &max_exp {
                None => max_exp = Some((e, mu.clone())),
                Some((best, _)) if e > *best => {
                    max_exp = Some((e, mu.clone()));
                    max_unique = true;
                }
                Some((best, _)) if e == *best => max_unique = false,
                _ => {}
            }
        }
        components.insert(mu, comp);
    }
    match &max_exp {
        Some((0, who)) if *who == mu0 && max_unique => {}
        other => {
            return Err(Error::CheckFailed(format!(
                "normalization failed for (i={i}, m={m}, n={rank}): top exponent {other:?}, expected 0 uniquely at {mu0}"
            )));
        }
    }
    Ok(NormalizedWedgeChar { i, m, rank, n_boxes, mu0, shift, components })
}
