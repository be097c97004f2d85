//! Graded linear algebra for homogeneous ideals: degree-slice echelon bases,
//! quotient dimensions, traces of permutation actions, and evaluation ranks
//! at point orbits.
//!
//! All elimination is exact rational Gaussian elimination with pivots chosen
//! along the fixed monomial order.  Bases are kept fully reduced, which keeps
//! every row supported on its pivot column plus the (small) set of
//! non-pivot columns.

use crate::error::{Error, Result};
use crate::multipoly::{monomials_of_degree, permute_poly, Monomial, MultiPoly};
use crate::partition::Partition;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

type SparseRow = Vec<(u32, BigRational)>;

fn row_sub(a: &SparseRow, c: &BigRational, b: &SparseRow) -> SparseRow {
    // a - c*b, both sorted by column
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = -(c * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon structure over a fixed column range.
#[derive(Default)]
struct Rref {
    rows: Vec<SparseRow>,
    row_of_pivot: HashMap<u32, usize>,
    /// Non-pivot columns -> rows with a nonzero entry there.
    incidence: HashMap<u32, HashSet<usize>>,
}

impl Rref {
    fn new() -> Self {
        Rref::default()
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces `row` against the basis (all pivot columns eliminated).
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let hit = row
                .iter()
                .find_map(|(c, _)| self.row_of_pivot.get(c).map(|&r| (*c, r)));
            match hit {
                None => return row,
                Some((col, r)) => {
                    let coeff = row.iter().find(|(c, _)| *c == col).unwrap().1.clone();
                    row = row_sub(&row, &coeff, &self.rows[r]);
                }
            }
        }
    }

    /// Inserts a row; returns true if the rank grew.
    fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        // Pivot: leading entry in the fixed column order.
        let (pcol, pcoeff) = row[0].clone();
        if !pcoeff.is_one() {
            let inv = BigRational::one() / pcoeff;
            for (_, v) in row.iter_mut() {
                *v = &*v * &inv;
            }
        }
        let idx = self.rows.len();
        // Back-substitution: clear the new pivot column from existing rows.
        if let Some(users) = self.incidence.remove(&pcol) {
            for j in users {
                let coeff = self.rows[j]
                    .iter()
                    .find(|(c, _)| *c == pcol)
                    .map(|(_, v)| v.clone())
                    .unwrap();
                let old_cols: Vec<u32> = self.rows[j].iter().map(|(c, _)| *c).collect();
                self.rows[j] = row_sub(&self.rows[j], &coeff, &row);
                let new_cols: HashSet<u32> = self.rows[j].iter().map(|(c, _)| *c).collect();
                for c in old_cols {
                    if c != pcol && !new_cols.contains(&c) {
                        if let Some(s) = self.incidence.get_mut(&c) {
                            s.remove(&j);
                        }
                    }
                }
                for &(c, _) in self.rows[j].iter() {
                    if !self.row_of_pivot.contains_key(&c) && c != self.pivot_of_row(j) {
                        self.incidence.entry(c).or_default().insert(j);
                    }
                }
            }
        }
        for &(c, _) in row.iter().skip(1) {
            self.incidence.entry(c).or_default().insert(idx);
        }
        self.row_of_pivot.insert(pcol, idx);
        self.rows.push(row);
        true
    }

    fn pivot_of_row(&self, idx: usize) -> u32 {
        self.rows[idx][0].0
    }
}

/// Echelonized basis of a subspace of the degree-`d` homogeneous component
/// of the polynomial ring, over the fixed monomial order.
pub struct GradedSliceBasis {
    pub degree: u32,
    pub nvars: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    rref: Rref,
}

impl GradedSliceBasis {
    fn empty(nvars: usize, degree: u32) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        GradedSliceBasis { degree, nvars, monomials, index, rref: Rref::new() }
    }

    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    /// Number of degree-`d` monomials.
    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    /// Dimension of the quotient slice.
    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim() - self.rank()
    }

    /// Monomials without a pivot, the normal-form basis of the quotient.
    pub fn complement_monomials(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.rref.row_of_pivot.contains_key(&(*i as u32)))
            .map(|(_, m)| m.clone())
            .collect()
    }

    pub fn pivot_monomials(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .enumerate()
            .filter(|(i, _)| self.rref.row_of_pivot.contains_key(&(*i as u32)))
            .map(|(_, m)| m.clone())
            .collect()
    }

    fn poly_to_row(&self, p: &MultiPoly) -> Result<SparseRow> {
        let mut row: SparseRow = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let idx = self
                .index
                .get(m)
                .copied()
                .ok_or_else(|| Error::NonHomogeneous(format!("{p:?} off degree {}", self.degree)))?;
            row.push((idx, c.clone()));
        }
        row.sort_by_key(|(c, _)| *c);
        Ok(row)
    }

    fn row_to_poly(&self, row: &SparseRow) -> MultiPoly {
        let mut p = MultiPoly::zero(self.nvars);
        for (c, v) in row {
            p.add_term(self.monomials[*c as usize].clone(), v.clone());
        }
        p
    }

    fn insert_poly(&mut self, p: &MultiPoly) -> Result<bool> {
        let row = self.poly_to_row(p)?;
        Ok(self.rref.insert(row))
    }

    /// Normal form of a degree-`d` polynomial against the basis.  The result
    /// is supported on complement monomials and reducing it again is a no-op.
    pub fn reduce(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let row = self.poly_to_row(p)?;
        Ok(self.row_to_poly(&self.rref.reduce(row)))
    }

    /// Is `p` in the spanned subspace?
    pub fn contains(&self, p: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Basis rows as polynomials.
    pub fn basis_polys(&self) -> Vec<MultiPoly> {
        self.rref.rows.iter().map(|r| self.row_to_poly(r)).collect()
    }

    /// Coefficient of the complement monomial `target` in the normal form of
    /// the monomial with index `source`.
    fn nf_coeff(&self, source: u32, target: u32) -> BigRational {
        match self.rref.row_of_pivot.get(&source) {
            None => {
                if source == target {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
            Some(&r) => {
                // NF(pivot) = -(non-pivot part of the row)
                self.rref.rows[r]
                    .iter()
                    .skip(1)
                    .find(|(c, _)| *c == target)
                    .map(|(_, v)| -v.clone())
                    .unwrap_or_else(BigRational::zero)
            }
        }
    }
}

/// Degree-`d` slice of the homogeneous ideal generated by `gens`: the span of
/// all `m * g` with `deg(m) + deg(g) = d`.  Built directly; for whole-degree
/// sweeps prefer [`SliceSequence`].
pub fn ideal_slice(gens: &[MultiPoly], nvars: usize, d: u32) -> Result<GradedSliceBasis> {
    let mut basis = GradedSliceBasis::empty(nvars, d);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let gd = g.homogeneous_degree()?;
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - gd) {
            basis.insert_poly(&g.mul_monomial(&m))?;
        }
    }
    Ok(basis)
}

/// Iterator over the slices of a homogeneous ideal, degree by degree.  The
/// degree-`d` slice is spanned by `z_i * (degree d-1 slice)` together with
/// the generators of degree `d`, which keeps candidate rows thin.
pub struct SliceSequence {
    nvars: usize,
    gens_by_degree: BTreeMap<u32, Vec<MultiPoly>>,
    current: Option<GradedSliceBasis>,
    next_degree: u32,
}

impl SliceSequence {
    pub fn new(gens: &[MultiPoly], nvars: usize) -> Result<Self> {
        let mut gens_by_degree: BTreeMap<u32, Vec<MultiPoly>> = BTreeMap::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            gens_by_degree.entry(g.homogeneous_degree()?).or_default().push(g.clone());
        }
        Ok(SliceSequence { nvars, gens_by_degree, current: None, next_degree: 0 })
    }

    /// Builds and returns the slice basis for the next degree.
    pub fn advance(&mut self) -> &GradedSliceBasis {
        let d = self.next_degree;
        let mut basis = GradedSliceBasis::empty(self.nvars, d);
        if let Some(prev) = &self.current {
            for poly in prev.basis_polys() {
                for i in 0..self.nvars {
                    let shifted = poly.mul_monomial(&Monomial::var(self.nvars, i));
                    basis.insert_poly(&shifted).expect("degree bookkeeping");
                }
            }
        }
        if let Some(gens) = self.gens_by_degree.get(&d) {
            for g in gens {
                basis.insert_poly(g).expect("degree bookkeeping");
            }
        }
        self.next_degree += 1;
        self.current = Some(basis);
        self.current.as_ref().unwrap()
    }

    pub fn current(&self) -> Option<&GradedSliceBasis> {
        self.current.as_ref()
    }
}

/// Quotient slice dimensions for `d = 0..` until the budget runs out.
pub struct QuotientDims {
    pub dims: Vec<u64>,
    /// True when the quotient provably has no further nonzero slices.
    pub exhausted: bool,
}

/// Dimensions of the graded quotient by the ideal generated by the
/// homogeneous `gens`, for degrees `0..=d_max`, with early stop after two
/// consecutive zero slices (a full slice propagates, so later slices are
/// certainly zero too).
pub fn quotient_dims(gens: &[MultiPoly], nvars: usize, d_max: u32) -> Result<QuotientDims> {
    let mut seq = SliceSequence::new(gens, nvars)?;
    let mut dims = Vec::new();
    let mut zero_run = 0;
    for _ in 0..=d_max {
        let basis = seq.advance();
        let dim = basis.quotient_dim() as u64;
        dims.push(dim);
        zero_run = if dim == 0 { zero_run + 1 } else { 0 };
        if zero_run >= 2 {
            break;
        }
    }
    Ok(QuotientDims { dims, exhausted: zero_run >= 2 })
}

/// Trace of the permutation action on the quotient slice: the action is taken
/// on the complement (normal-form) monomials and reduced modulo the slice.
///
/// Degreewise invariance of the ideal under `sigma` is a precondition; it is
/// verified separately by [`check_invariance`] because the full check costs a
/// reduction per basis row.
pub fn quotient_trace(basis: &GradedSliceBasis, sigma: &[usize]) -> BigRational {
    let mut trace = BigRational::zero();
    for (i, m) in basis.monomials.iter().enumerate() {
        let i = i as u32;
        if basis.rref.row_of_pivot.contains_key(&i) {
            continue;
        }
        let image = m.permute(sigma);
        let j = basis.index[&image];
        trace += basis.nf_coeff(j, i);
    }
    trace
}

/// Verifies that the spanned subspace is stable under `sigma` by reducing the
/// image of every basis row.
pub fn check_invariance(basis: &GradedSliceBasis, sigma: &[usize]) -> Result<()> {
    for poly in basis.basis_polys() {
        let image = permute_poly(sigma, &poly);
        if !basis.contains(&image)? {
            return Err(Error::NotInvariant(format!(
                "degree {} slice moved by {:?}",
                basis.degree, sigma
            )));
        }
    }
    Ok(())
}

/// Cumulative ranks of the evaluation of all monomials of degree `<= d` at
/// the `S_N`-orbit of the point determined by `mu` and `points` (the first
/// `mu_1` coordinates equal `points[0]`, the next `mu_2` equal `points[1]`,
/// and so on).  Ranks are reported for `d = 0, 1, ...` until they stabilize
/// at the orbit size `N!/prod(mu_i!)`.
pub fn orbit_evaluation_ranks(mu: &Partition, points: &[BigRational]) -> Result<Vec<u64>> {
    if points.len() != mu.len() {
        return Err(Error::IndexOutOfRange {
            index: points.len(),
            range: format!("exactly {} points", mu.len()),
        });
    }
    for (i, a) in points.iter().enumerate() {
        for b in points.iter().skip(i + 1) {
            if a == b {
                return Err(Error::RepeatedPoints);
            }
        }
    }
    let n = mu.size() as usize;
    let mut base: Vec<BigRational> = Vec::with_capacity(n);
    for (i, &m) in mu.parts().iter().enumerate() {
        for _ in 0..m {
            base.push(points[i].clone());
        }
    }
    // Distinct permutations of the multiset = the orbit.
    let mut orbit: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut sorted = base.clone();
    sorted.sort();
    permute_multiset(&mut sorted, 0, &mut orbit);
    let orbit: Vec<Vec<BigRational>> = orbit.into_iter().collect();
    let orbit_size = orbit.len();

    // Coordinate value vectors z_i over the orbit, for the slice recursion.
    let coords: Vec<Vec<BigRational>> =
        (0..n).map(|i| orbit.iter().map(|pt| pt[i].clone()).collect()).collect();

    let dense_to_sparse = |v: &[BigRational]| -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as u32, x.clone()))
            .collect()
    };

    let mut cumulative = Rref::new();
    let ones = vec![BigRational::one(); orbit_size];
    cumulative.insert(dense_to_sparse(&ones));
    let mut slice_vectors: Vec<Vec<BigRational>> = vec![ones];
    let mut ranks = vec![cumulative.rank() as u64];

    let cap = mu.nstat() + 2;
    let mut d = 0u64;
    while cumulative.rank() < orbit_size {
        d += 1;
        if d > cap {
            return Err(Error::CheckFailed(format!(
                "evaluation ranks for mu={mu} did not reach the orbit size {orbit_size} by degree {cap}"
            )));
        }
        let mut slice = Rref::new();
        let mut next_vectors = Vec::new();
        for v in &slice_vectors {
            for zi in &coords {
                let w: Vec<BigRational> = v.iter().zip(zi).map(|(a, b)| a * b).collect();
                if slice.insert(dense_to_sparse(&w)) {
                    next_vectors.push(w.clone());
                    cumulative.insert(dense_to_sparse(&w));
                }
            }
        }
        slice_vectors = next_vectors;
        ranks.push(cumulative.rank() as u64);
    }
    Ok(ranks)
}

fn permute_multiset(vals: &mut Vec<BigRational>, start: usize, out: &mut BTreeSet<Vec<BigRational>>) {
    if start == vals.len() {
        out.insert(vals.clone());
        return;
    }
    let mut seen: BTreeSet<BigRational> = BTreeSet::new();
    for i in start..vals.len() {
        if seen.contains(&vals[i]) {
            continue;
        }
        seen.insert(vals[i].clone());
        vals.swap(start, i);
        permute_multiset(vals, start + 1, out);
        vals.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{elementary_symmetric, MultiPoly};
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e(nvars: usize, m: usize) -> MultiPoly {
        let all: Vec<usize> = (0..nvars).collect();
        elementary_symmetric(nvars, m, &all).unwrap()
    }

    #[test]
    fn slice_examples() {
        // {z1+z2} at degree 1 has rank 1
        let b = ideal_slice(&[e(2, 1)], 2, 1).unwrap();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.quotient_dim(), 1);

        // {E1,E2} in two variables fill degree 2 entirely
        let b = ideal_slice(&[e(2, 1), e(2, 2)], 2, 2).unwrap();
        assert_eq!(b.rank(), 3);
        assert_eq!(b.quotient_dim(), 0);

        // no generators: rank 0
        let b = ideal_slice(&[], 3, 2).unwrap();
        assert_eq!(b.rank(), 0);
        assert_eq!(b.quotient_dim(), 6);
    }

    #[test]
    fn slice_rejects_non_homogeneous() {
        let mut g = e(2, 1);
        g.add_term(Monomial::one(2), rat(1));
        assert!(ideal_slice(&[g], 2, 2).is_err());
    }

    #[test]
    fn rank_independent_of_order_and_scaling() {
        let gens = [e(3, 1), e(3, 2), e(3, 3)];
        let shuffled = [e(3, 3).scale(&rat(-7)), e(3, 1).scale(&rat(2)), e(3, 2)];
        for d in 0..=4 {
            let a = ideal_slice(&gens, 3, d).unwrap();
            let b = ideal_slice(&shuffled, 3, d).unwrap();
            assert_eq!(a.rank(), b.rank(), "degree {d}");
            assert_eq!(a.pivot_monomials(), b.pivot_monomials(), "degree {d}");
        }
    }

    #[test]
    fn reduction_is_idempotent() {
        let basis = ideal_slice(&[e(3, 1), e(3, 2)], 3, 3).unwrap();
        for m in monomials_of_degree(3, 3) {
            let nf = basis.reduce(&MultiPoly::monomial(m, rat(1))).unwrap();
            let nf2 = basis.reduce(&nf).unwrap();
            assert_eq!(nf, nf2);
        }
    }

    #[test]
    fn coinvariant_dims_n3() {
        let gens = [e(3, 1), e(3, 2), e(3, 3)];
        let q = quotient_dims(&gens, 3, 5).unwrap();
        assert_eq!(q.dims, vec![1, 2, 2, 1, 0, 0]);
        assert!(q.exhausted);
    }

    #[test]
    fn sequence_matches_direct_slices() {
        let gens = [e(3, 1), e(3, 2), e(3, 3)];
        let mut seq = SliceSequence::new(&gens, 3).unwrap();
        for d in 0..=4 {
            let inc = seq.advance();
            let direct = ideal_slice(&gens, 3, d).unwrap();
            assert_eq!(inc.rank(), direct.rank(), "degree {d}");
            assert_eq!(inc.pivot_monomials(), direct.pivot_monomials(), "degree {d}");
        }
    }

    #[test]
    fn trace_examples() {
        let gens = [e(3, 1), e(3, 2), e(3, 3)];
        // identity trace = quotient dimension
        let id = vec![0usize, 1, 2];
        let b1 = ideal_slice(&gens, 3, 1).unwrap();
        assert_eq!(quotient_trace(&b1, &id), rat(2));
        // transposition on the degree-1 slice of the coinvariant ring: 0
        let swap = vec![1usize, 0, 2];
        assert_eq!(quotient_trace(&b1, &swap), rat(0));
        // 3-cycle on the top slice: sign of a 3-cycle = +1
        let cyc = vec![1usize, 2, 0];
        let b3 = ideal_slice(&gens, 3, 3).unwrap();
        assert_eq!(quotient_trace(&b3, &cyc), rat(1));
        check_invariance(&b1, &swap).unwrap();
        check_invariance(&b3, &cyc).unwrap();
    }

    #[test]
    fn invariance_check_catches_unstable_spans() {
        // <z1> is not stable under the transposition (1 2)
        let z1 = MultiPoly::var(2, 0);
        let b = ideal_slice(&[z1], 2, 1).unwrap();
        let swap = vec![1usize, 0];
        assert!(check_invariance(&b, &swap).is_err());
    }

    #[test]
    fn orbit_rank_examples() {
        // single point: ranks stay 1
        let r = orbit_evaluation_ranks(&p(&[3]), &[rat(5)]).unwrap();
        assert_eq!(r, vec![1]);
        // mu=(1,1), points (0,1): ranks 1,2
        let r = orbit_evaluation_ranks(&p(&[1, 1]), &[rat(0), rat(1)]).unwrap();
        assert_eq!(r, vec![1, 2]);
        // mu=(2,1), points (1,2): ranks 1,3
        let r = orbit_evaluation_ranks(&p(&[2, 1]), &[rat(1), rat(2)]).unwrap();
        assert_eq!(r, vec![1, 3]);
        assert!(orbit_evaluation_ranks(&p(&[1, 1]), &[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn orbit_rank_stabilizes_at_orbit_size() {
        for n in 1..=4u32 {
            for mu in Partition::all(n) {
                let pts: Vec<BigRational> = (0..mu.len()).map(|i| rat(i as i64 + 1)).collect();
                let ranks = orbit_evaluation_ranks(&mu, &pts).unwrap();
                let expect: u64 = {
                    let mut f = 1u64;
                    for k in 2..=n as u64 {
                        f *= k;
                    }
                    let mut denom = 1u64;
                    for &part in mu.parts() {
                        for k in 2..=part as u64 {
                            denom *= k;
                        }
                    }
                    f / denom
                };
                assert_eq!(*ranks.last().unwrap(), expect, "mu={mu}");
            }
        }
    }
}
