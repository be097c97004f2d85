//! Garsia-Procesi rings `R_mu`: generator sets, Hilbert series, isotypic
//! decomposition into Specht modules, and the filtered route through orbit
//! evaluation.

use crate::error::{Error, Result};
use crate::kostka::tilde_kostka;
use crate::multipoly::{
    cycle_type_representative, cycle_type_second_representative, elementary_symmetric, MultiPoly,
};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::slice::{orbit_evaluation_ranks, quotient_trace, SliceSequence};
use crate::symgroup::{decompose_character, factorial, ClassFunction};
use crate::tableau::ssyt_count;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// The deduplicated generator set of the ideal `J_mu`.
pub struct GPIdealSpec {
    pub mu: Partition,
    pub generators: Vec<MultiPoly>,
}

/// `d_k(mu) = N - (mu'_1 + ... + mu'_{N-k})`.
pub fn dk(mu: &Partition, k: u32) -> Result<u32> {
    let n = mu.size();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k as usize, range: format!("1..={n}") });
    }
    let conj = mu.conjugate();
    let head: u32 = (0..(n - k) as usize).map(|j| conj.part(j)).sum();
    Ok(n - head)
}

/// The generator set `C_mu`: for each `k`, the elementary symmetric
/// polynomials `E_r(z_{i_1},...,z_{i_k})` with `k - d_k < r <= k`, over all
/// `k`-subsets of the variables (the full `S_N`-orbit), deduplicated.
pub fn cmu_generators(mu: &Partition) -> GPIdealSpec {
    let n = mu.size() as usize;
    let mut gens: BTreeSet<MultiPoly> = BTreeSet::new();
    for k in 1..=n {
        let d = dk(mu, k as u32).expect("k in range");
        if d == 0 {
            continue;
        }
        let lo = (k as u32 - d.min(k as u32)) + 1; // first r with k - d < r
        for subset in k_subsets(n, k) {
            for r in lo..=(k as u32) {
                let e = elementary_symmetric(n, r as usize, &subset).expect("r <= k");
                gens.insert(e);
            }
        }
    }
    GPIdealSpec { mu: mu.clone(), generators: gens.into_iter().collect() }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// `N!/prod(mu_i!)`, the dimension of `R_mu`.
pub fn coset_count(mu: &Partition) -> BigInt {
    let mut denom = BigInt::one();
    for &p in mu.parts() {
        denom *= factorial(p);
    }
    factorial(mu.size()) / denom
}

/// Hilbert series of `R_mu`, computed by row reduction of the ideal slices.
pub fn rmu_hilbert(mu: &Partition) -> Result<QPoly> {
    if mu.is_empty() {
        return Err(Error::InvalidPartition("empty partition has no ring".into()));
    }
    let spec = cmu_generators(mu);
    let n = mu.size() as usize;
    let top = mu.nstat();
    let mut seq = SliceSequence::new(&spec.generators, n)?;
    let mut hilbert = QPoly::zero();
    let mut zero_run = 0;
    for d in 0..=(top + 1) {
        let basis = seq.advance();
        let dim = basis.quotient_dim() as i64;
        hilbert.add_term(d as i64, BigInt::from(dim));
        zero_run = if dim == 0 { zero_run + 1 } else { 0 };
        if zero_run >= 2 {
            break;
        }
    }
    if hilbert.eval_one() != coset_count(mu) {
        return Err(Error::CheckFailed(format!(
            "Hilbert series of R_{mu} sums to {} instead of {}",
            hilbert.eval_one(),
            coset_count(mu)
        )));
    }
    if hilbert.max_exp() != Some(top as i64) {
        return Err(Error::CheckFailed(format!(
            "top degree of R_{mu} is {:?}, expected {top}",
            hilbert.max_exp()
        )));
    }
    Ok(hilbert)
}

/// The graded `S_N`-decomposition of `R_mu`.
pub struct GradedSNDecomposition {
    pub mu: Partition,
    /// `lambda -> ch_q` of the multiplicity space `M_{lambda,mu}`.
    pub components: BTreeMap<Partition, QPoly>,
    pub hilbert: QPoly,
    /// Character of each graded slice, kept for downstream consumers.
    pub traces: Vec<ClassFunction>,
}

impl GradedSNDecomposition {
    pub fn component(&self, lambda: &Partition) -> QPoly {
        self.components.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }
}

/// Decomposes `R_mu` degree by degree into Specht isotypes via quotient
/// traces, one permutation representative per cycle type.
///
/// Postconditions checked here: integral nonnegative multiplicities, the
/// trivial component is exactly 1, components vanish unless `mu <= lambda`
/// in dominance, and `q = 1` recovers the Kostka numbers.
pub fn rmu_decompose(mu: &Partition) -> Result<GradedSNDecomposition> {
    if mu.is_empty() {
        return Err(Error::InvalidPartition("empty partition has no ring".into()));
    }
    let n = mu.size();
    let nvars = n as usize;
    let spec = cmu_generators(mu);
    let top = mu.nstat();
    let classes = Partition::all(n);
    let reps: Vec<Vec<usize>> = classes.iter().map(cycle_type_representative).collect();
    let second_reps: Vec<Vec<usize>> =
        classes.iter().map(cycle_type_second_representative).collect();

    let mut seq = SliceSequence::new(&spec.generators, nvars)?;
    let mut traces: Vec<ClassFunction> = Vec::new();
    let mut hilbert = QPoly::zero();
    let mut zero_run = 0;
    for d in 0..=(top + 1) {
        let basis = seq.advance();
        let dim = basis.quotient_dim();
        hilbert.add_term(d as i64, BigInt::from(dim));
        let mut f = ClassFunction::new(n);
        if dim > 0 {
            for (i, rho) in classes.iter().enumerate() {
                let t = quotient_trace(basis, &reps[i]);
                // cheap guard for small N: a second representative of the
                // same class must give the same trace
                if n <= 4 {
                    let t2 = quotient_trace(basis, &second_reps[i]);
                    if t != t2 {
                        return Err(Error::NotInvariant(format!(
                            "traces differ between representatives of class ({rho}) at degree {d}"
                        )));
                    }
                }
                f.set(rho, t);
            }
        }
        traces.push(f);
        zero_run = if dim == 0 { zero_run + 1 } else { 0 };
        if zero_run >= 2 {
            break;
        }
    }

    let mut components: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for (d, f) in traces.iter().enumerate() {
        let m = decompose_character(f).map_err(|e| match e {
            Error::BadMultiplicity { label, value } => Error::BadMultiplicity {
                label: format!("{label} at degree {d} of R_{mu}"),
                value,
            },
            other => other,
        })?;
        for (lambda, mult) in m {
            components.entry(lambda).or_insert_with(QPoly::zero).add_term(d as i64, mult);
        }
    }

    // Postconditions.
    let trivial = components.get(&Partition::row(n)).cloned().unwrap_or_else(QPoly::zero);
    if trivial != QPoly::one() {
        return Err(Error::CheckFailed(format!(
            "trivial isotype of R_{mu} is {trivial}, expected 1"
        )));
    }
    for (lambda, comp) in &components {
        let count = ssyt_count(lambda, mu.parts());
        if comp.eval_one() != BigInt::from(count) {
            return Err(Error::CheckFailed(format!(
                "component {lambda} of R_{mu} evaluates to {} at q=1, expected {count}",
                comp.eval_one()
            )));
        }
        if !comp.is_zero() && !mu.dominance_leq(lambda)? {
            return Err(Error::CheckFailed(format!(
                "component {lambda} of R_{mu} should vanish by dominance"
            )));
        }
    }
    Ok(GradedSNDecomposition { mu: mu.clone(), components, hilbert, traces })
}

/// Filtered graded dimensions of `A_mu` from cumulative evaluation ranks at
/// the orbit of the point built from `points` (one per part).
pub fn amu_graded_dims(mu: &Partition, points: &[BigRational]) -> Result<Vec<u64>> {
    let ranks = orbit_evaluation_ranks(mu, points)?;
    let mut dims = Vec::with_capacity(ranks.len());
    let mut prev = 0u64;
    for r in ranks {
        dims.push(r - prev);
        prev = r;
    }
    Ok(dims)
}

/// Default evaluation points `1, 2, ..., l`.
pub fn default_points(l: usize) -> Vec<BigRational> {
    (0..l).map(|i| BigRational::from_integer(BigInt::from(i as i64 + 1))).collect()
}

/// Alternative points `1, 3, 9, ...` guarding against accidental degeneration.
pub fn geometric_points(l: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(l);
    let mut v = BigInt::one();
    for _ in 0..l {
        out.push(BigRational::from_integer(v.clone()));
        v *= 3;
    }
    out
}

/// Verifies the Garsia-Procesi theorem for one `mu`: every component of
/// `rmu_decompose` equals the tilde-transformed charge Kostka polynomial.
pub fn check_gp_theorem(mu: &Partition) -> Result<GradedSNDecomposition> {
    let decomp = rmu_decompose(mu)?;
    let n = mu.size();
    for lambda in Partition::all(n) {
        let expected = tilde_kostka(&lambda, mu)?;
        let got = decomp.component(&lambda);
        if got != expected {
            return Err(Error::CheckFailed(format!(
                "M_({lambda}),({mu}): ring route gives {got}, charge route gives {expected}"
            )));
        }
    }
    Ok(decomp)
}

/// The permutation character of `S_N` on cosets of the Young subgroup
/// `S_mu`, i.e. the ungraded character of `R_mu`.
pub fn coset_character(mu: &Partition) -> ClassFunction {
    let n = mu.size();
    let mut f = ClassFunction::new(n);
    for rho in Partition::all(n) {
        let v = fixed_points_on_cosets(mu, &rho);
        f.set(&rho, BigRational::from_integer(v));
    }
    f
}

/// Number of points of the orbit of `X_mu` fixed by a permutation of cycle
/// type `rho`: assignments of the cycles to the (labelled) parts of `mu`
/// filling each part exactly.
fn fixed_points_on_cosets(mu: &Partition, rho: &Partition) -> BigInt {
    fn rec(cycles: &[u32], remaining: &mut Vec<u32>) -> BigInt {
        let Some((&c, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for i in 0..remaining.len() {
            if remaining[i] >= c {
                remaining[i] -= c;
                total += rec(rest, remaining);
                remaining[i] += c;
            }
        }
        total
    }
    let mut rem: Vec<u32> = mu.parts().to_vec();
    rec(rho.parts(), &mut rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostka::kostka_hook;
    use crate::kostka::tilde_transform;
    use crate::symgroup::character_table;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dk_examples() {
        let mu = p(&[1, 1, 1]);
        assert_eq!(dk(&mu, 1).unwrap(), 0);
        assert_eq!(dk(&mu, 2).unwrap(), 0);
        assert_eq!(dk(&mu, 3).unwrap(), 3);
        let mu = p(&[3]);
        for k in 1..=3 {
            assert_eq!(dk(&mu, k).unwrap(), k);
        }
        assert_eq!(dk(&p(&[2, 1]), 2).unwrap(), 1);
        assert!(dk(&p(&[2, 1]), 4).is_err());
    }

    #[test]
    fn cmu_for_column_is_elementary_basis() {
        for n in 2..=4u32 {
            let spec = cmu_generators(&Partition::column(n));
            assert_eq!(spec.generators.len(), n as usize);
            let all: Vec<usize> = (0..n as usize).collect();
            for r in 1..=n as usize {
                let e = elementary_symmetric(n as usize, r, &all).unwrap();
                assert!(spec.generators.contains(&e), "missing E_{r}");
            }
        }
    }

    #[test]
    fn cmu_for_row_contains_all_variables() {
        let spec = cmu_generators(&p(&[3]));
        // every E_r of every nonempty subset: 3 singletons + 3+3 pairs + ... = sum_k C(3,k)*k
        let expected: usize = (1..=3).map(|k| binom(3, k) * k).sum();
        assert_eq!(spec.generators.len(), expected);
        for i in 0..3 {
            assert!(spec.generators.contains(&MultiPoly::var(3, i)));
        }
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn cmu_21_matches_the_known_set() {
        let spec = cmu_generators(&p(&[2, 1]));
        // {z1 z2, z1 z3, z2 z3} union {E1, E2, E3}
        assert_eq!(spec.generators.len(), 6);
        let all: Vec<usize> = vec![0, 1, 2];
        for r in 1..=3 {
            assert!(spec.generators.contains(&elementary_symmetric(3, r, &all).unwrap()));
        }
        for pair in [[0, 1], [0, 2], [1, 2]] {
            assert!(spec
                .generators
                .contains(&elementary_symmetric(3, 2, &pair.to_vec()).unwrap()));
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(rmu_hilbert(&p(&[1, 1, 1])).unwrap(), QPoly::from_pairs([(0, 1), (1, 2), (2, 2), (3, 1)]));
        assert_eq!(rmu_hilbert(&p(&[3])).unwrap(), QPoly::one());
        assert_eq!(rmu_hilbert(&p(&[2, 1])).unwrap(), QPoly::from_pairs([(0, 1), (1, 2)]));
    }

    #[test]
    fn decompose_small_examples() {
        let d = rmu_decompose(&p(&[1, 1, 1])).unwrap();
        assert_eq!(d.component(&p(&[2, 1])), QPoly::from_pairs([(1, 1), (2, 1)]));
        assert_eq!(d.component(&p(&[3])), QPoly::one());
        assert_eq!(d.component(&p(&[1, 1, 1])), QPoly::q_power(3));

        let d = rmu_decompose(&p(&[2, 1])).unwrap();
        assert_eq!(d.component(&p(&[2, 1])), QPoly::q_power(1));
        assert_eq!(d.component(&p(&[3])), QPoly::one());
        assert!(d.component(&p(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn gp_theorem_up_to_4() {
        for n in 1..=4u32 {
            for mu in Partition::all(n) {
                check_gp_theorem(&mu).unwrap();
            }
        }
    }

    #[test]
    fn hook_route_matches_ring_route_for_columns() {
        for n in 1..=4u32 {
            let col = Partition::column(n);
            let d = rmu_decompose(&col).unwrap();
            for lambda in Partition::all(n) {
                let expected = tilde_transform(&kostka_hook(&lambda).unwrap(), &col).unwrap();
                assert_eq!(d.component(&lambda), expected, "lambda={lambda}");
            }
        }
    }

    #[test]
    fn amu_examples() {
        let dims = amu_graded_dims(&p(&[2, 1]), &default_points(2)).unwrap();
        assert_eq!(dims, vec![1, 2]);
        let dims = amu_graded_dims(&p(&[4]), &default_points(1)).unwrap();
        assert_eq!(dims, vec![1]);
        let dims = amu_graded_dims(
            &p(&[1, 1]),
            &[BigRational::zero(), BigRational::one()],
        )
        .unwrap();
        assert_eq!(dims, vec![1, 1]);
    }

    #[test]
    fn amu_matches_hilbert_up_to_4() {
        for n in 1..=4u32 {
            for mu in Partition::all(n) {
                let hilbert = rmu_hilbert(&mu).unwrap();
                for pts in [default_points(mu.len()), geometric_points(mu.len())] {
                    let dims = amu_graded_dims(&mu, &pts).unwrap();
                    let expect: Vec<u64> = (0..dims.len())
                        .map(|d| {
                            u64::try_from(hilbert.coeff(d as i64).magnitude().clone()).unwrap()
                        })
                        .collect();
                    assert_eq!(dims, expect, "mu={mu}");
                    assert_eq!(
                        dims.iter().sum::<u64>().to_string(),
                        coset_count(&mu).to_string()
                    );
                }
            }
        }
    }

    #[test]
    fn coset_character_decomposes_like_the_ring() {
        // ungraded character of R_mu = permutation character on cosets of S_mu
        for n in 2..=4u32 {
            for mu in Partition::all(n) {
                let f = coset_character(&mu);
                let decomp = decompose_character(&f).unwrap();
                let ring = rmu_decompose(&mu).unwrap();
                let table = character_table(n);
                for lambda in &table.partitions {
                    let graded = ring.component(lambda).eval_one();
                    let flat =
                        decomp.get(lambda).cloned().unwrap_or_else(num_bigint::BigInt::zero);
                    assert_eq!(graded, flat, "mu={mu} lambda={lambda}");
                }
            }
        }
    }
}
