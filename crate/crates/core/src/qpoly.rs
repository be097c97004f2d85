//! Laurent polynomials and truncated power series in `q` with
//! arbitrary-precision integer coefficients.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Laurent polynomial in `q`: a map exponent -> coefficient with no zero
/// coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigInt::one())
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPoly { coeffs }
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        QPoly::monomial(e, BigInt::one())
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitution `q -> 1/q`.
    pub fn substitute_inverse(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Value at `q = 1` (the coefficient sum).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect() }
    }

    pub fn has_negative_exp(&self) -> bool {
        self.min_exp().is_some_and(|e| e < 0)
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Exact division, failing on a nonzero remainder.  The divisor's lowest
    /// coefficient must be a unit so the quotient stays integral.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision(0));
        }
        let dlow = divisor.min_exp().unwrap();
        let dhigh = divisor.max_exp().unwrap();
        let unit = divisor.coeff(dlow);
        assert!(
            unit.magnitude().is_one(),
            "exact_div requires a divisor with unit lowest coefficient"
        );
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        // In an exact division the quotient's top exponent is bounded by
        // self.max - dhigh; a step past that bound certifies a remainder.
        let self_max = self.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(rlow) = rem.min_exp() {
            let e = rlow - dlow;
            if e + dhigh > self_max {
                return Err(Error::InexactDivision(rlow));
            }
            let c = &rem.coeff(rlow) / &unit;
            let term = QPoly::monomial(e, c);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    /// Map for JSON serialization: exponent string -> coefficient string.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in rhs.coeffs.iter() {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in self.coeffs.iter() {
            for (&e2, c2) in rhs.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter() {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `(q)_m = prod_{i=1}^m (1 - q^i)`, with `(q)_0 = 1`.
pub fn q_pochhammer(m: u32) -> QPoly {
    let mut p = QPoly::one();
    for i in 1..=m {
        p = &p * &QPoly::from_pairs([(0, 1), (i as i64, -1)]);
    }
    p
}

/// Power series in `q` truncated at a fixed order: coefficients are exact for
/// every exponent up to and including `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    order: i64,
    coeffs: BTreeMap<i64, BigInt>,
}

impl QSeries {
    pub fn zero(order: i64) -> Self {
        QSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: i64) -> Self {
        let mut s = QSeries::zero(order);
        if order >= 0 {
            s.coeffs.insert(0, BigInt::one());
        }
        s
    }

    pub fn from_qpoly(p: &QPoly, order: i64) -> Self {
        QSeries {
            order,
            coeffs: p.iter().filter(|(&e, _)| e <= order).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_vec(&self) -> Vec<BigInt> {
        (0..=self.order).map(|e| self.coeff(e)).collect()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in self.coeffs.iter() {
            for (&e2, c2) in rhs.coeffs.iter() {
                let e = e1 + e2;
                if e <= order {
                    let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
                    *entry += c1 * c2;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        QSeries { order, coeffs }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> QSeries {
        let c0 = self.coeff(0);
        assert!(
            c0.magnitude().is_one() && self.min_exp() == Some(0),
            "series inverse requires a unit constant term"
        );
        let mut inv: BTreeMap<i64, BigInt> = BTreeMap::new();
        inv.insert(0, c0.clone()); // 1/c0 = c0 for a unit
        for e in 1..=self.order {
            // coefficient of q^e in self*inv must vanish
            let mut acc = BigInt::zero();
            for (&k, c) in self.coeffs.range(1..=e) {
                if let Some(ic) = inv.get(&(e - k)) {
                    acc += c * ic;
                }
            }
            let val = -(&c0 * acc); // divide by c0 = multiply for a unit
            if !val.is_zero() {
                inv.insert(e, val);
            }
        }
        QSeries { order: self.order, coeffs: inv }
    }

    pub fn pow(&self, k: u32) -> QSeries {
        let mut out = QSeries::one(self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = QPoly { coeffs: self.coeffs.clone() };
        write!(f, "{} + O(q^{})", p, self.order + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `1/(q)_infinity` truncated at `order`: the partition generating function.
pub fn inverse_pochhammer_series(order: i64) -> QSeries {
    q_pochhammer_series(order).inverse()
}

/// `(q)_infinity` truncated at `order` (factors beyond the order drop out).
pub fn q_pochhammer_series(order: i64) -> QSeries {
    let m = order.max(0) as u32;
    QSeries::from_qpoly(&q_pochhammer(m), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(0), QPoly::one());
        assert_eq!(q_pochhammer(1), QPoly::from_pairs([(0, 1), (1, -1)]));
        assert_eq!(
            q_pochhammer(3),
            QPoly::from_pairs([(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)])
        );
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = QPoly::from_pairs([(0, 1), (1, 2), (3, -1)]);
        let b = QPoly::from_pairs([(0, 1), (2, 5)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_fails() {
        let a = QPoly::from_pairs([(0, 1), (1, 1)]);
        let b = QPoly::from_pairs([(0, 1), (1, -1)]);
        assert!(matches!(a.exact_div(&b), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn substitute_inverse_and_shift() {
        let p = QPoly::from_pairs([(1, 1), (2, 1)]);
        assert_eq!(p.substitute_inverse(), QPoly::from_pairs([(-1, 1), (-2, 1)]));
        assert_eq!(p.shift(3), QPoly::from_pairs([(4, 1), (5, 1)]));
        assert_eq!(p.eval_one(), BigInt::from(2));
    }

    #[test]
    fn series_inverse_is_partition_gf() {
        let inv = inverse_pochhammer_series(10);
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (e, &c) in expected.iter().enumerate() {
            assert_eq!(inv.coeff(e as i64), BigInt::from(c));
        }
    }

    #[test]
    fn series_mul_truncates_to_smaller_order() {
        let a = QSeries::from_qpoly(&QPoly::from_pairs([(0, 1), (1, 1)]), 5);
        let b = QSeries::from_qpoly(&QPoly::from_pairs([(0, 1), (1, -1)]), 3);
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 3);
        assert_eq!(prod.coeff(0), BigInt::one());
        assert_eq!(prod.coeff(1), BigInt::zero());
        assert_eq!(prod.coeff(2), -BigInt::one());
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec((-6i64..10, -9i64..10), 0..8)
            .prop_map(|pairs| QPoly::from_pairs(pairs))
    }

    proptest! {
        #[test]
        fn mul_distributes(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes(a in arb_qpoly(), b in arb_qpoly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn substitute_inverse_is_involution(a in arb_qpoly()) {
            prop_assert_eq!(a.substitute_inverse().substitute_inverse(), a);
        }

        #[test]
        fn exact_div_undoes_mul(a in arb_qpoly(), b in arb_qpoly()) {
            // force divisor with unit lowest coefficient
            let mut d = b;
            d.add_term(-7, num_bigint::BigInt::from(1) - d.coeff(-7));
            let prod = &a * &d;
            prop_assert_eq!(prod.exact_div(&d).unwrap(), a);
        }
    }
}
