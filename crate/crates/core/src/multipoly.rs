//! Multivariate polynomials over exact rationals in variables `z_1..z_N`.
//!
//! Monomials carry a fixed graded-lexicographic order which every consumer
//! (echelon bases, pivot choices) relies on for determinism.

use crate::error::{Error, Result};
use crate::partition::Partition;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a fixed number of variables.  Ordered by total degree,
/// then lexicographically on the exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `z_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// Image under a permutation of variables: `z_i -> z_{sigma(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma[i]] = e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in decreasing
/// monomial order (the pivot order used by the slice bases).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u8; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left as u8;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u8;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Polynomial: monomial -> nonzero rational coefficient.  The derived order
/// is only used for canonical deduplication of generator sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MultiPoly::monomial(Monomial::var(nvars, i), BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// Total degree if homogeneous, error otherwise.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::NonHomogeneous(format!("{self:?}")))
                }
                _ => {}
            }
        }
        Ok(deg.unwrap_or(0))
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in self.terms.iter() {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if c.is_one() && m.degree() > 0 {
                    format!("{m:?}")
                } else if m.degree() == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*{m:?}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Elementary symmetric polynomial `E_m` in the variables indexed by `vars`
/// (0-based), inside the ring with `nvars` variables.
pub fn elementary_symmetric(nvars: usize, m: usize, vars: &[usize]) -> Result<MultiPoly> {
    if m > vars.len() {
        return Err(Error::IndexOutOfRange {
            index: m,
            range: format!("0..={}", vars.len()),
        });
    }
    let mut out = MultiPoly::zero(nvars);
    let mut subset = Vec::with_capacity(m);
    fn rec(
        nvars: usize,
        vars: &[usize],
        m: usize,
        start: usize,
        subset: &mut Vec<usize>,
        out: &mut MultiPoly,
    ) {
        if subset.len() == m {
            let mut exps = vec![0u8; nvars];
            for &v in subset.iter() {
                exps[v] = 1;
            }
            out.add_term(Monomial::new(exps), BigRational::one());
            return;
        }
        for i in start..vars.len() {
            subset.push(vars[i]);
            rec(nvars, vars, m, i + 1, subset, out);
            subset.pop();
        }
    }
    rec(nvars, vars, m, 0, &mut subset, &mut out);
    Ok(out)
}

/// Power sum `z_1^a + ... + z_N^a`.
pub fn power_sum(a: u32, nvars: usize) -> MultiPoly {
    debug_assert!(a >= 1);
    let mut out = MultiPoly::zero(nvars);
    for i in 0..nvars {
        let mut exps = vec![0u8; nvars];
        exps[i] = a as u8;
        out.add_term(Monomial::new(exps), BigRational::one());
    }
    out
}

/// Action of a permutation on a polynomial: `z_i -> z_{sigma(i)}`.
pub fn permute_poly(sigma: &[usize], p: &MultiPoly) -> MultiPoly {
    MultiPoly {
        nvars: p.nvars(),
        terms: p.terms.iter().map(|(m, c)| (m.permute(sigma), c.clone())).collect(),
    }
}

/// The canonical permutation of cycle type `rho` (cycles on consecutive
/// blocks), as the image array `sigma[i]`.
pub fn cycle_type_representative(rho: &Partition) -> Vec<usize> {
    let n = rho.size() as usize;
    let mut sigma = vec![0usize; n];
    let mut start = 0;
    for &part in rho.parts() {
        let len = part as usize;
        for j in 0..len {
            sigma[start + j] = start + (j + 1) % len;
        }
        start += len;
    }
    sigma
}

/// A second representative of the same cycle type: cycles on consecutive
/// blocks taken in reverse block order.
pub fn cycle_type_second_representative(rho: &Partition) -> Vec<usize> {
    let n = rho.size() as usize;
    let mut sigma = vec![0usize; n];
    let mut start = 0;
    for &part in rho.parts().iter().rev() {
        let len = part as usize;
        for j in 0..len {
            sigma[start + j] = start + (j + 1) % len;
        }
        start += len;
    }
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn elementary_symmetric_examples() {
        let e1 = elementary_symmetric(3, 1, &[0, 1, 2]).unwrap();
        let expected = MultiPoly::var(3, 0).add(&MultiPoly::var(3, 1)).add(&MultiPoly::var(3, 2));
        assert_eq!(e1, expected);

        let e2 = elementary_symmetric(2, 2, &[0, 1]).unwrap();
        assert_eq!(e2.num_terms(), 1);
        assert_eq!(e2.homogeneous_degree().unwrap(), 2);

        let e2of3 = elementary_symmetric(3, 2, &[0, 1, 2]).unwrap();
        assert_eq!(e2of3.num_terms(), 3);

        let e0 = elementary_symmetric(3, 0, &[0, 1, 2]).unwrap();
        assert_eq!(e0, MultiPoly::constant(3, rat(1)));

        assert!(elementary_symmetric(3, 3, &[0, 1]).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let p2 = power_sum(2, 2);
        assert_eq!(p2.num_terms(), 2);
        assert_eq!(p2.homogeneous_degree().unwrap(), 2);
        let p1 = power_sum(1, 2);
        assert_eq!(p1, elementary_symmetric(2, 1, &[0, 1]).unwrap());
    }

    #[test]
    fn permute_examples() {
        let p = MultiPoly::var(3, 0); // z1
        let id = vec![0, 1, 2];
        assert_eq!(permute_poly(&id, &p), p);
        let swap = vec![1, 0, 2]; // (1 2)
        assert_eq!(permute_poly(&swap, &p), MultiPoly::var(3, 1));
        // (1 2 3): z1*z2^2 -> z2*z3^2
        let cycle = vec![1, 2, 0];
        let m = Monomial::new(vec![1, 2, 0]);
        let q = MultiPoly::monomial(m, rat(1));
        let expect = MultiPoly::monomial(Monomial::new(vec![0, 1, 2]), rat(1));
        assert_eq!(permute_poly(&cycle, &q), expect);
    }

    #[test]
    fn representative_has_right_cycle_type() {
        let rho = Partition::new(vec![3, 2]).unwrap();
        let sigma = cycle_type_representative(&rho);
        assert_eq!(sigma, vec![1, 2, 0, 4, 3]);
        let tau = cycle_type_second_representative(&rho);
        assert_eq!(tau, vec![1, 0, 3, 4, 2]);
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(d + N - 1, N - 1)
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        // strictly decreasing in the fixed order
        let ms = monomials_of_degree(3, 4);
        for w in ms.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn eval_simple() {
        let p = power_sum(2, 2);
        let v = p.eval(&[rat(2), rat(3)]);
        assert_eq!(v, rat(13));
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u8..3, nvars), -5i64..6),
            0..6,
        )
        .prop_map(move |terms| {
            let mut p = MultiPoly::zero(nvars);
            for (exps, c) in terms {
                p.add_term(Monomial::new(exps), BigRational::from_integer(BigInt::from(c)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn permutation_is_ring_homomorphism(a in arb_poly(3), b in arb_poly(3)) {
            let sigma = vec![2, 0, 1];
            let lhs = permute_poly(&sigma, &a.mul(&b));
            let rhs = permute_poly(&sigma, &a).mul(&permute_poly(&sigma, &b));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes(a in arb_poly(3), b in arb_poly(3)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
