//! The graded tensor product of symmetric-power evaluation modules: explicit
//! filtration generation at distinct points, degreewise decomposition into
//! irreducible `sl_n`-modules, and the resulting graded characters.

use crate::error::{Error, Result};
use crate::gpring::rmu_decompose;
use crate::kostka::tilde_kostka;
use crate::partition::{sln_irrep_dim, Partition};
use crate::qpoly::QPoly;
use crate::slnmod::{build_sym_module, SymPowerModule};
use crate::tableau::ssyt_count;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// One echelon basis vector of the filtration, tagged with the filtration
/// degree at which it first appeared and its (pure) `gl_n`-weight.
struct BasisVector {
    coords: Vec<BigRational>,
    degree: u32,
    weight: Vec<u32>,
}

/// The `t`-degree filtration of the cyclic span of the highest weight
/// vectors inside the tensor product of evaluation modules.
pub struct FilteredSpace {
    pub mu: Vec<u32>,
    pub n: usize,
    pub points: Vec<BigRational>,
    pub total_dim: u64,
    pub dims_per_degree: Vec<u64>,
    basis: Vec<BasisVector>,
}

struct TensorLayout {
    factors: Vec<SymPowerModule>,
    strides: Vec<usize>,
    total: usize,
    /// Per global index, the per-factor basis indices.
    unravel: Vec<Vec<usize>>,
}

impl TensorLayout {
    fn new(mu: &[u32], n: usize) -> Self {
        let factors: Vec<SymPowerModule> = mu.iter().map(|&m| build_sym_module(n, m)).collect();
        let mut strides = vec![0usize; factors.len()];
        let mut total = 1usize;
        for (i, f) in factors.iter().enumerate().rev() {
            strides[i] = total;
            total *= f.dim();
        }
        let mut unravel = Vec::with_capacity(total);
        for g in 0..total {
            let mut rem = g;
            let mut idx = Vec::with_capacity(factors.len());
            for stride in &strides {
                idx.push(rem / stride);
                rem %= stride;
            }
            unravel.push(idx);
        }
        TensorLayout { factors, strides, total, unravel }
    }

    fn weight_of(&self, global: usize) -> Vec<u32> {
        let n = self.factors[0].n;
        let mut w = vec![0u32; n];
        for (i, f) in self.factors.iter().enumerate() {
            for (a, &e) in f.weight(self.unravel[global][i]).iter().enumerate() {
                w[a] += e as u32;
            }
        }
        w
    }

    /// Applies the fusion operator `E_{ab} (x) t^k` (coproduct with the
    /// factor-`i` action scaled by `z_i^k`) to a dense vector.
    fn apply_operator(
        &self,
        a: usize,
        b: usize,
        powers: &[Vec<BigRational>],
        k: usize,
        v: &[BigRational],
    ) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.total];
        for (g, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, f) in self.factors.iter().enumerate() {
                let zk = &powers[i][k];
                if zk.is_zero() {
                    continue;
                }
                if let Some((tgt, coeff)) = f.apply_e(a, b, self.unravel[g][i]) {
                    let g2 =
                        g - self.unravel[g][i] * self.strides[i] + tgt * self.strides[i];
                    out[g2] += c * zk * BigRational::from_integer(BigInt::from(coeff));
                }
            }
        }
        out
    }
}

/// The fusion operator `sum_i z_i^k E_{ab}^{(i)}` as columns of a dense
/// matrix on the tensor product; the filtration itself applies operators to
/// vectors directly.
pub fn fusion_operator(
    mu: &[u32],
    n: usize,
    points: &[BigRational],
    a: usize,
    b: usize,
    k: usize,
) -> Result<Vec<Vec<BigRational>>> {
    validate_inputs(mu, n, points)?;
    if a >= n || b >= n || a == b {
        return Err(Error::IndexOutOfRange { index: a.max(b), range: format!("0..{n}") });
    }
    let layout = TensorLayout::new(mu, n);
    let powers = point_powers(points, k);
    let mut cols = Vec::with_capacity(layout.total);
    for g in 0..layout.total {
        let mut e = vec![BigRational::zero(); layout.total];
        e[g] = BigRational::from_integer(BigInt::from(1));
        cols.push(layout.apply_operator(a, b, &powers, k, &e));
    }
    Ok(cols)
}

/// `powers[i][k] = z_i^k` for `k = 0..=kmax`.
fn point_powers(points: &[BigRational], kmax: usize) -> Vec<Vec<BigRational>> {
    points
        .iter()
        .map(|z| {
            let mut row = Vec::with_capacity(kmax + 1);
            let mut cur = BigRational::from_integer(BigInt::from(1));
            for _ in 0..=kmax {
                row.push(cur.clone());
                cur *= z;
            }
            row
        })
        .collect()
}

fn validate_inputs(mu: &[u32], n: usize, points: &[BigRational]) -> Result<()> {
    if mu.is_empty() || mu.iter().any(|&m| m == 0) {
        return Err(Error::InvalidPartition(format!("{mu:?} is not a valid composition")));
    }
    if n < 2 {
        return Err(Error::LengthExceedsRank { len: 2, rank: n });
    }
    if points.len() != mu.len() {
        return Err(Error::IndexOutOfRange {
            index: points.len(),
            range: format!("one point per part: {}", mu.len()),
        });
    }
    for (i, a) in points.iter().enumerate() {
        for b in points.iter().skip(i + 1) {
            if a == b {
                return Err(Error::RepeatedPoints);
            }
        }
    }
    Ok(())
}

impl FilteredSpace {
    /// Dimension of `F^{(<= d)}`.
    pub fn cumulative_dim(&self, d: u32) -> u64 {
        self.dims_per_degree.iter().take(d as usize + 1).sum()
    }

    /// Weight multiset of the degree-`d` graded slice.
    fn weights_at(&self, d: u32) -> BTreeMap<Vec<u32>, u64> {
        let mut out = BTreeMap::new();
        for v in self.basis.iter().filter(|v| v.degree == d) {
            *out.entry(v.weight.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Generates the `t`-degree filtration of `U(n_- (x) C[t]) w_mu` by
/// breadth-first closure under the lowering fusion operators, degrees
/// ascending, with `t`-degrees capped at `N - 1` (`N = |mu|`; interpolation
/// at the evaluation points makes higher `t`-degrees redundant).
pub fn generate_filtration(mu: &[u32], n: usize, points: &[BigRational]) -> Result<FilteredSpace> {
    let size: u32 = mu.iter().sum();
    generate_filtration_with_kmax(mu, n, points, (size as usize).saturating_sub(1))
}

/// The same closure with an explicit bound on the applied `t`-degrees; the
/// cap-sufficiency tests compare this against the default bound.
pub fn generate_filtration_with_kmax(
    mu: &[u32],
    n: usize,
    points: &[BigRational],
    kmax: usize,
) -> Result<FilteredSpace> {
    validate_inputs(mu, n, points)?;
    let layout = TensorLayout::new(mu, n);
    let powers = point_powers(points, kmax);
    let mut target = 1u64;
    for &m in mu {
        target *= sln_irrep_dim(&Partition::row(m), n)?;
    }
    // Filtration degrees cannot exceed n(mu); one extra level absorbs the
    // redundant candidates produced by the last genuine level.
    let degree_cap = Partition::from_composition(mu.to_vec()).nstat() as u32 + kmax as u32 + 1;

    let mut basis: Vec<BasisVector> = Vec::new();
    let mut pivot_of: BTreeMap<usize, usize> = BTreeMap::new();

    // Echelon insertion without back-substitution, so every stored row stays
    // inside the filtration level it is tagged with.
    fn insert(
        layout: &TensorLayout,
        basis: &mut Vec<BasisVector>,
        pivot_of: &mut BTreeMap<usize, usize>,
        mut v: Vec<BigRational>,
        degree: u32,
    ) -> Option<usize> {
        loop {
            let lead = v.iter().position(|c| !c.is_zero())?;
            match pivot_of.get(&lead) {
                None => {
                    let lc = v[lead].clone();
                    for c in v.iter_mut() {
                        *c = &*c / &lc;
                    }
                    let weight = layout.weight_of(lead);
                    basis.push(BasisVector { coords: v, degree, weight });
                    pivot_of.insert(lead, basis.len() - 1);
                    return Some(basis.len() - 1);
                }
                Some(&row) => {
                    let factor = v[lead].clone();
                    let other = &basis[row].coords;
                    for (c, o) in v.iter_mut().zip(other) {
                        *c -= &factor * o;
                    }
                }
            }
        }
    }

    // Cyclic vector: tensor of highest weight vectors.
    let mut w = vec![BigRational::zero(); layout.total];
    let hw: usize = layout
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| f.highest_weight_index() * layout.strides[i])
        .sum();
    w[hw] = BigRational::from_integer(BigInt::from(1));

    let mut pending: BTreeMap<u32, Vec<Vec<BigRational>>> = BTreeMap::new();
    pending.entry(0).or_default().push(w);
    let mut total = 0u64;

    'outer: while let Some((&d, _)) = pending.iter().next() {
        if d > degree_cap {
            return Err(Error::FiltrationIncomplete { got: total, expected: target });
        }
        let batch = pending.remove(&d).unwrap();
        for v in batch {
            let Some(idx) = insert(&layout, &mut basis, &mut pivot_of, v, d) else {
                continue;
            };
            total += 1;
            if total == target {
                break 'outer;
            }
            let row = basis[idx].coords.clone();
            for a in 0..n {
                for b in 0..a {
                    for k in 0..=kmax {
                        let image = layout.apply_operator(a, b, &powers, k, &row);
                        if image.iter().any(|c| !c.is_zero()) {
                            pending.entry(d + k as u32).or_default().push(image);
                        }
                    }
                }
            }
        }
    }

    if total != target {
        return Err(Error::FiltrationIncomplete { got: total, expected: target });
    }
    let max_degree = basis.iter().map(|v| v.degree).max().unwrap_or(0);
    let mut dims = vec![0u64; max_degree as usize + 1];
    for v in &basis {
        dims[v.degree as usize] += 1;
    }
    Ok(FilteredSpace {
        mu: mu.to_vec(),
        n,
        points: points.to_vec(),
        total_dim: total,
        dims_per_degree: dims,
        basis,
    })
}

/// Degree-by-degree decomposition of the associated graded space into
/// irreducible `sl_n`-modules.
pub struct GradedSlnDecomposition {
    pub per_degree: Vec<BTreeMap<Partition, u64>>,
    pub components: BTreeMap<Partition, QPoly>,
}

pub fn graded_decompose(fs: &FilteredSpace) -> Result<GradedSlnDecomposition> {
    let mut per_degree = Vec::new();
    for d in 0..fs.dims_per_degree.len() as u32 {
        let weights = fs.weights_at(d);
        per_degree.push(peel_weights(weights, d, fs.n)?);
    }
    let mut components: BTreeMap<Partition, QPoly> = BTreeMap::new();
    for (d, layer) in per_degree.iter().enumerate() {
        for (lambda, &mult) in layer {
            components
                .entry(lambda.clone())
                .or_insert_with(QPoly::zero)
                .add_term(d as i64, BigInt::from(mult));
        }
    }
    Ok(GradedSlnDecomposition { per_degree, components })
}

/// Number of distinct coordinate permutations of the sorted weight padded to
/// `n` coordinates.
fn orbit_size_of_weight(sorted: &Partition, n: usize) -> u64 {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for i in 0..n {
        *counts.entry(sorted.part(i)).or_insert(0) += 1;
    }
    let fact = |k: u64| (1..=k).product::<u64>();
    let mut denom = 1u64;
    for &c in counts.values() {
        denom *= fact(c);
    }
    fact(n as u64) / denom
}

/// Peels a Weyl-invariant weight multiset into irreducible multiplicities,
/// dominance-maximal weight first, ties broken lexicographically.
fn peel_weights(
    weights: BTreeMap<Vec<u32>, u64>,
    degree: u32,
    n: usize,
) -> Result<BTreeMap<Partition, u64>> {
    // Weyl invariance: the multiplicity depends only on the sorted weight,
    // and every permutation of a present weight must be present.
    let mut dominant: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut by_sorted: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    for (w, m) in &weights {
        let sorted = Partition::from_composition(w.clone());
        by_sorted.entry(sorted).or_default().push(*m);
    }
    for (sorted, ms) in &by_sorted {
        let orbit = orbit_size_of_weight(sorted, n);
        if ms.len() as u64 != orbit || ms.iter().any(|&m| m != ms[0]) {
            return Err(Error::CheckFailed(format!(
                "weight multiplicities at degree {degree} are not Weyl-invariant near {sorted}"
            )));
        }
        dominant.insert(sorted.clone(), ms[0]);
    }

    let total: u32 = dominant.keys().next().map(|p| p.size()).unwrap_or(0);
    peel_dominant_weights(total, n, dominant)
        .map_err(|e| Error::CheckFailed(format!("degree {degree}: {e}")))
}

/// Subtracts irreducible `sl_n` characters from a dominant-weight
/// multiplicity table, dominance-maximal weight first with lexicographic
/// tie-breaking, until every residual reaches zero.
pub(crate) fn peel_dominant_weights(
    n_boxes: u32,
    rank: usize,
    mut residual: BTreeMap<Partition, u64>,
) -> Result<BTreeMap<Partition, u64>> {
    let universe = Partition::all_with_max_len(n_boxes, rank);
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    loop {
        let live: Vec<Partition> =
            residual.iter().filter(|(_, &m)| m > 0).map(|(k, _)| k.clone()).collect();
        if live.is_empty() {
            break;
        }
        let mut maximal: Vec<&Partition> = Vec::new();
        'cand: for cand in &live {
            for other in &live {
                if other != cand && cand.dominance_leq(other)? {
                    continue 'cand;
                }
            }
            maximal.push(cand);
        }
        let lambda = (*maximal
            .iter()
            .max_by(|a, b| a.parts().cmp(b.parts()))
            .expect("nonempty"))
        .clone();
        let mult = residual[&lambda];
        for nu in &universe {
            let k = ssyt_count(&lambda, nu.parts());
            if k == 0 {
                continue;
            }
            let sub = mult * k;
            let entry = residual.entry(nu.clone()).or_insert(0);
            if *entry < sub {
                return Err(Error::BadMultiplicity {
                    label: format!("weight {nu}"),
                    value: format!("{} - {}", *entry, sub),
                });
            }
            *entry -= sub;
        }
        *out.entry(lambda).or_insert(0) += mult;
    }
    Ok(out)
}

/// Result of a fusion character computation at one set of points.
pub struct FusionResult {
    pub mu: Vec<u32>,
    pub n: usize,
    pub points: Vec<BigRational>,
    pub total_dim: u64,
    pub dims_per_degree: Vec<u64>,
    pub components: BTreeMap<Partition, QPoly>,
}

/// Graded character of the fusion product: builds the filtration at the
/// given points (defaults to `0, 1, 2, ...`) and decomposes it.
pub fn fusion_character(
    mu: &[u32],
    n: usize,
    points: Option<&[BigRational]>,
) -> Result<FusionResult> {
    let default: Vec<BigRational> = default_fusion_points(mu.len());
    let pts = points.unwrap_or(&default);
    let fs = generate_filtration(mu, n, pts)?;
    let decomp = graded_decompose(&fs)?;
    Ok(FusionResult {
        mu: mu.to_vec(),
        n,
        points: pts.to_vec(),
        total_dim: fs.total_dim,
        dims_per_degree: fs.dims_per_degree,
        components: decomp.components,
    })
}

pub fn default_fusion_points(m: usize) -> Vec<BigRational> {
    (0..m).map(|i| BigRational::from_integer(BigInt::from(i as i64))).collect()
}

pub fn alternate_fusion_points(m: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(m);
    let mut v = BigInt::from(1);
    for _ in 0..m {
        out.push(BigRational::from_integer(v.clone()));
        v *= 3;
    }
    out
}

/// Checks the main character identity for one `mu`: every component of the
/// fusion product equals the tilde Kostka polynomial of the sorted `mu`.
pub fn check_fusion_kostka(result: &FusionResult) -> Result<()> {
    let sorted = Partition::from_composition(result.mu.clone());
    let n_total = sorted.size();
    for lambda in Partition::all_with_max_len(n_total, result.n) {
        let expected = tilde_kostka(&lambda, &sorted)?;
        let got = result.components.get(&lambda).cloned().unwrap_or_else(QPoly::zero);
        if got != expected {
            return Err(Error::CheckFailed(format!(
                "fusion component {lambda} for mu={:?}, n={}: got {got}, expected {expected}",
                result.mu, result.n
            )));
        }
    }
    for lambda in result.components.keys() {
        if lambda.len() > result.n {
            return Err(Error::CheckFailed(format!(
                "fusion component {lambda} exceeds rank {}",
                result.n
            )));
        }
    }
    Ok(())
}

/// Z-independence: the decomposition is identical at a second point set.
pub fn check_z_independence(mu: &[u32], n: usize) -> Result<()> {
    let a = fusion_character(mu, n, None)?;
    let alt = alternate_fusion_points(mu.len());
    let b = fusion_character(mu, n, Some(&alt))?;
    if a.components != b.components || a.dims_per_degree != b.dims_per_degree {
        return Err(Error::CheckFailed(format!(
            "fusion decomposition for mu={mu:?}, n={n} depends on the evaluation points"
        )));
    }
    Ok(())
}

/// Report of the Schur-Weyl cross-check for `mu = (1^N)`.
pub struct SchurWeylReport {
    pub n_boxes: u32,
    pub rank: usize,
    pub fusion_dims: Vec<u64>,
    pub ring_dims: Vec<u64>,
    pub degrees_checked: usize,
}

/// Verifies, degree by degree, that the filtration of `(1^N)` matches the
/// Specht-isotype data of the coinvariant ring: graded dimensions agree with
/// `sum_lambda dim(pi_lambda) * [q^d] M_{lambda,(1^N)}`, and the graded
/// character identity holds weight by weight.
pub fn schur_weyl_check(n_boxes: u32, rank: usize) -> Result<SchurWeylReport> {
    let mu = vec![1u32; n_boxes as usize];
    let fs = generate_filtration(&mu, rank, &default_fusion_points(n_boxes as usize))?;
    let ring = rmu_decompose(&Partition::column(n_boxes))?;

    let top = ring.hilbert.max_exp().unwrap_or(0) as usize;
    let mut ring_dims = vec![0u64; top + 1];
    for (lambda, comp) in &ring.components {
        if lambda.len() > rank {
            continue;
        }
        let dim = sln_irrep_dim(lambda, rank)?;
        for (&e, c) in comp.iter() {
            let c: u64 = u64::try_from(c.magnitude().clone()).expect("small");
            ring_dims[e as usize] += dim * c;
        }
    }
    while ring_dims.last() == Some(&0) {
        ring_dims.pop();
    }
    if ring_dims != fs.dims_per_degree {
        return Err(Error::CheckFailed(format!(
            "graded dimensions differ for N={n_boxes}, n={rank}: fusion {:?} vs ring {:?}",
            fs.dims_per_degree, ring_dims
        )));
    }

    // Total character identity, weight by weight and degree by degree.
    for d in 0..fs.dims_per_degree.len() as u32 {
        let mut by_weight = fs.weights_at(d);
        for lambda in Partition::all_with_max_len(n_boxes, rank) {
            let coeff = ring.component(&lambda).coeff(d as i64);
            if coeff.is_zero() {
                continue;
            }
            let coeff: u64 = u64::try_from(coeff.magnitude().clone()).expect("small");
            for (w, m) in by_weight.iter_mut() {
                let k = ssyt_count(&lambda, w);
                let sub = coeff * k;
                if *m < sub {
                    return Err(Error::CheckFailed(format!(
                        "weight {w:?} at degree {d} undercounts for N={n_boxes}, n={rank}"
                    )));
                }
                *m -= sub;
            }
        }
        if by_weight.values().any(|&m| m != 0) {
            return Err(Error::CheckFailed(format!(
                "character identity fails at degree {d} for N={n_boxes}, n={rank}"
            )));
        }
    }
    Ok(SchurWeylReport {
        n_boxes,
        rank,
        fusion_dims: fs.dims_per_degree.clone(),
        ring_dims,
        degrees_checked: fs.dims_per_degree.len(),
    })
}
