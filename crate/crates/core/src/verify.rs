//! The bundled verification suite: each acceptance criterion as a callable
//! check, shared between the `verify` CLI command and the acceptance tests.

use crate::error::{Error, Result};
use crate::fusion::{
    check_fusion_kostka, check_z_independence, fusion_character, schur_weyl_check,
};
use crate::gpring::{
    amu_graded_dims, check_gp_theorem, cmu_generators, default_points, geometric_points,
    rmu_decompose, rmu_hilbert,
};
use crate::kostka::{charge_kostka, kostka_hook, tilde_transform};
use crate::partition::{sln_irrep_dim, Partition};
use crate::qpoly::QPoly;
use crate::slice::quotient_dims;
use crate::tableau::ssyt_count;
use crate::wedge::{reduced_wedge_decompose, wedge_char};
use crate::winf::{hook_factorization_check, limit_stabilization};
use num_bigint::BigInt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    /// Small bounds, sub-second run.
    Quick,
    /// The full published bounds (N up to 5 or 6 per criterion).
    Full,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
        }
    }
}

/// Outcome of one criterion.
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

/// Options threaded through the suite; `corrupt_generators` is the negative
/// control hook: it drops one generator of `J_{(1^N)}` inside criterion 1,
/// which must then fail and name the offending degree.
#[derive(Clone, Copy, Default)]
pub struct VerifyOptions {
    pub corrupt_generators: bool,
}

fn run_criterion<F>(id: u32, name: &'static str, body: F) -> CriterionResult
where
    F: FnOnce() -> Result<String>,
{
    let start = std::time::Instant::now();
    match body() {
        Ok(detail) => {
            CriterionResult { id, name, pass: true, detail, elapsed_ms: start.elapsed().as_millis() }
        }
        Err(e) => CriterionResult {
            id,
            name,
            pass: false,
            detail: e.to_string(),
            elapsed_ms: start.elapsed().as_millis(),
        },
    }
}

/// Coefficient list of `prod_{i=1}^{N} (1 + q + ... + q^{i-1})`.
fn poincare_polynomial(n: u32) -> QPoly {
    let mut p = QPoly::one();
    for i in 1..=n {
        let factor = QPoly::from_pairs((0..i as i64).map(|e| (e, 1)));
        p = &p * &factor;
    }
    p
}

/// Criterion 1: the Hilbert series of the coinvariant ring `R_{(1^N)}` is
/// the Poincare polynomial of `S_N`, for `N = 2..=bound`.
pub fn criterion_1(level: Level, opts: VerifyOptions) -> CriterionResult {
    let bound = match level {
        Level::Quick => 4,
        Level::Full => 5,
    };
    run_criterion(1, "coinvariant Hilbert series", move || {
        for n in 2..=bound {
            let mu = Partition::column(n);
            let mut gens = cmu_generators(&mu).generators;
            if opts.corrupt_generators {
                gens.pop();
            }
            let dims = quotient_dims(&gens, n as usize, mu.nstat() as u32 + 1)?;
            let expected = poincare_polynomial(n);
            for d in 0..dims.dims.len().max(expected.max_exp().unwrap_or(0) as usize + 1) {
                let got = dims.dims.get(d).copied().unwrap_or(0);
                let want = expected.coeff(d as i64);
                if BigInt::from(got) != want {
                    return Err(Error::CheckFailed(format!(
                        "[gp-ring/rmu_hilbert] mu=(1^{n}): degree {d}: got {got}, expected {want}"
                    )));
                }
            }
        }
        Ok(format!("Hilbert series of R_(1^N) match for N = 2..={bound}"))
    })
}

/// Criterion 2: the Garsia-Procesi theorem `ch_q M_{lambda,mu} =
/// ~K_{lambda,mu}(q)` for every pair of partitions of `N = 2..=bound`,
/// with the charge statistic as the independent oracle.
pub fn criterion_2(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 4,
        Level::Full => 5,
    };
    run_criterion(2, "GP theorem vs charge oracle", move || {
        let mut pairs = 0;
        for n in 2..=bound {
            let count = Partition::all(n).len();
            for mu in Partition::all(n) {
                check_gp_theorem(&mu)?;
                pairs += count;
            }
        }
        Ok(format!("ring route equals charge route on {pairs} (lambda, mu) pairs, N = 2..={bound}"))
    })
}

/// Criterion 3: for column content, the ring route agrees with the hook
/// formula through the tilde transform, `N = 2..=bound`.
pub fn criterion_3(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 4,
        Level::Full => 6,
    };
    run_criterion(3, "hook formula consistency", move || {
        for n in 2..=bound {
            let col = Partition::column(n);
            let decomp = rmu_decompose(&col)?;
            for lambda in Partition::all(n) {
                let expected = tilde_transform(&kostka_hook(&lambda)?, &col)?;
                let got = decomp.component(&lambda);
                if got != expected {
                    return Err(Error::CheckFailed(format!(
                        "[gp-ring/rmu_decompose] mu=(1^{n}), lambda=({lambda}): ring {got}, hook {expected}"
                    )));
                }
            }
        }
        Ok(format!("hook route equals ring route for N = 2..={bound}"))
    })
}

/// Criterion 4: the filtered `A_mu` dimensions from orbit evaluation equal
/// the `R_mu` Hilbert coefficients, two point choices, all `mu` of size up
/// to the bound.
pub fn criterion_4(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 4,
        Level::Full => 5,
    };
    run_criterion(4, "A_mu filtered dimensions", move || {
        for n in 1..=bound {
            for mu in Partition::all(n) {
                let hilbert = rmu_hilbert(&mu)?;
                for points in [default_points(mu.len()), geometric_points(mu.len())] {
                    let dims = amu_graded_dims(&mu, &points)?;
                    let expected: Vec<BigInt> =
                        (0..dims.len()).map(|d| hilbert.coeff(d as i64)).collect();
                    let got: Vec<BigInt> = dims.iter().map(|&d| BigInt::from(d)).collect();
                    if got != expected
                        || hilbert.max_exp().unwrap_or(0) as usize + 1 != dims.len()
                    {
                        return Err(Error::CheckFailed(format!(
                            "[gp-ring/amu_graded_dims] mu=({mu}): got {got:?}, expected {expected:?}"
                        )));
                    }
                }
            }
        }
        Ok(format!("orbit evaluation matches Hilbert series for all mu, N <= {bound}"))
    })
}

/// Criterion 5: the fusion main theorem: components equal tilde Kostka
/// polynomials, total dimension is the product of factor dimensions, the
/// result is independent of the evaluation points, and the Schur-Weyl
/// cross-check passes for column content.
pub fn criterion_5(level: Level) -> CriterionResult {
    let (bound, extras, sw_bound) = match level {
        Level::Quick => (3u32, false, 3u32),
        Level::Full => (4, true, 4),
    };
    run_criterion(5, "fusion main theorem", move || {
        let mut cases = 0;
        for n in [2usize, 3] {
            for size in 1..=bound {
                for mu in Partition::all(size) {
                    let r = fusion_character(mu.parts(), n, None)?;
                    let mut expect = 1u64;
                    for &m in mu.parts() {
                        expect *= sln_irrep_dim(&Partition::row(m), n)?;
                    }
                    if r.total_dim != expect {
                        return Err(Error::CheckFailed(format!(
                            "[fusion/generate_filtration] mu=({mu}), n={n}: dim {} != {expect}",
                            r.total_dim
                        )));
                    }
                    check_fusion_kostka(&r)?;
                    check_z_independence(mu.parts(), n)?;
                    cases += 1;
                }
            }
        }
        if extras {
            let mu = vec![1u32; 5];
            let r = fusion_character(&mu, 2, None)?;
            check_fusion_kostka(&r)?;
            check_z_independence(&mu, 2)?;
            cases += 1;
        }
        for n in [2usize, 3] {
            for nb in 2..=sw_bound {
                schur_weyl_check(nb, n)?;
            }
        }
        if extras {
            schur_weyl_check(5, 2)?;
        }
        Ok(format!("fusion characters equal ~K on {cases} mu cases; Schur-Weyl checks pass"))
    })
}

/// Criterion 6: the reduced wedge decomposition agrees between the
/// brute-force alternating-isotype route and the conjugate-Kostka character
/// route.
pub fn criterion_6(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 3,
        Level::Full => 4,
    };
    run_criterion(6, "reduced wedge routes", move || {
        for n_boxes in 1..=bound {
            for rank in [2usize, 3] {
                reduced_wedge_decompose(n_boxes, rank)?;
                let c = wedge_char(n_boxes, rank)?;
                if !c.identity_ok {
                    return Err(Error::CheckFailed(format!(
                        "[wedge/wedge_char] conjugation identity fails for N={n_boxes}"
                    )));
                }
            }
        }
        Ok(format!("both routes agree for N <= {bound}, n in {{2,3}}"))
    })
}

/// Criterion 7: the hook-product factorization with the corrected exponent
/// `mu_i + n - i` holds for all `|mu| <= bound`, `l(mu) <= n <= 4`, and the
/// printed exponent `mu_i + i` demonstrably fails on `mu=(2,1), n=2`.
pub fn criterion_7(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 6,
        Level::Full => 8,
    };
    run_criterion(7, "hook-product factorization", move || {
        for size in 1..=bound {
            for n in 1..=4usize {
                for mu in Partition::all_with_max_len(size, n) {
                    hook_factorization_check(&mu, n)?;
                }
            }
        }
        let witness = hook_factorization_check(&Partition::new(vec![2, 1]).unwrap(), 2)?;
        if witness.printed_ok {
            return Err(Error::CheckFailed(
                "the printed exponent mu_i + i unexpectedly matches on mu=(2,1), n=2".into(),
            ));
        }
        Ok(format!(
            "corrected exponent holds for |mu| <= {bound}, n <= 4; printed exponent fails on (2,1), n=2"
        ))
    })
}

/// Criterion 8: the normalized hook-formula sequence stabilizes (depth 5 by
/// `m <= 8`) and the stabilized window matches the W-algebra character up to
/// one overall monomial, for `n = 2` and `mu_bar` in `{(), (1), (2)}`.
pub fn criterion_8(_level: Level) -> CriterionResult {
    run_criterion(8, "W-limit stabilization", move || {
        for parts in [vec![], vec![1u32], vec![2]] {
            let mu_bar = Partition::from_composition(parts);
            let i = mu_bar.size() % 2;
            let r = limit_stabilization(&mu_bar, 2, i, 5, 8)?;
            match r.stabilized_from {
                Some(m) if m <= 8 => {}
                other => {
                    return Err(Error::CheckFailed(format!(
                        "[winf/limit_stabilization] mu_bar=({mu_bar}): no depth-5 stabilization by m=8 (got {other:?})"
                    )));
                }
            }
            if !r.winf_match {
                return Err(Error::CheckFailed(format!(
                    "[winf/limit_stabilization] mu_bar=({mu_bar}): stabilized window {:?} does not match winf_char",
                    r.window
                )));
            }
        }
        Ok("depth-5 windows stabilize by m <= 8 and match winf_char".into())
    })
}

/// Criterion 9: specialization sanity: `K(1)` counts tableaux, every graded
/// multiplicity is a nonnegative integer, and `~K_{lambda,mu} = 0` unless
/// `mu <= lambda` in dominance.
pub fn criterion_9(level: Level) -> CriterionResult {
    let bound = match level {
        Level::Quick => 4,
        Level::Full => 5,
    };
    run_criterion(9, "specialization sanity", move || {
        for n in 1..=bound {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = charge_kostka(&lambda, &mu)?;
                    if k.eval_one() != BigInt::from(ssyt_count(&lambda, mu.parts())) {
                        return Err(Error::CheckFailed(format!(
                            "K_({lambda}),({mu})(1) != tableau count"
                        )));
                    }
                    let tilde = tilde_transform(&k, &mu)?;
                    if !tilde.all_coeffs_nonnegative() || tilde.has_negative_exp() {
                        return Err(Error::CheckFailed(format!(
                            "~K_({lambda}),({mu}) is not a nonnegative polynomial"
                        )));
                    }
                    let dominated = mu.dominance_leq(&lambda)?;
                    if tilde.is_zero() == dominated {
                        return Err(Error::CheckFailed(format!(
                            "~K_({lambda}),({mu}) violates dominance vanishing"
                        )));
                    }
                }
            }
            // hook route at q=1 counts standard tableaux
            for mu in Partition::all(n) {
                let k = kostka_hook(&mu)?;
                if !k.all_coeffs_nonnegative()
                    || k.eval_one() != BigInt::from(ssyt_count(&mu, &vec![1; n as usize]))
                {
                    return Err(Error::CheckFailed(format!("hook formula fails sanity at {mu}")));
                }
            }
        }
        // ring multiplicities are nonnegative integers by construction; spot
        // check the assembled polynomials anyway
        for mu in Partition::all(4) {
            let d = rmu_decompose(&mu)?;
            for comp in d.components.values() {
                if !comp.all_coeffs_nonnegative() {
                    return Err(Error::CheckFailed(format!(
                        "negative graded multiplicity in R_({mu})"
                    )));
                }
            }
        }
        Ok(format!("q=1 counts, nonnegativity and dominance vanishing hold for N <= {bound}"))
    })
}

/// Runs the whole suite at the given level.
pub fn run_all(level: Level, opts: VerifyOptions) -> Vec<CriterionResult> {
    vec![
        criterion_1(level, opts),
        criterion_2(level),
        criterion_3(level),
        criterion_4(level),
        criterion_5(level),
        criterion_6(level),
        criterion_7(level),
        criterion_8(level),
        criterion_9(level),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        for r in run_all(Level::Quick, VerifyOptions::default()) {
            assert!(r.pass, "criterion {}: {}", r.id, r.detail);
        }
    }

    #[test]
    fn corrupted_generators_fail_with_offending_degree() {
        let r = criterion_1(Level::Quick, VerifyOptions { corrupt_generators: true });
        assert!(!r.pass);
        assert!(r.detail.contains("degree"), "detail: {}", r.detail);
        assert!(r.detail.contains("rmu_hilbert"), "detail: {}", r.detail);
    }
}
