//! Kostka polynomials by closed formula and by the charge statistic.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::{q_pochhammer, QPoly};
use crate::tableau::{charge_of_word, ssyt_enumerate};
use num_bigint::BigInt;

/// `K_{mu,(1^N)}(q)` by the hook-product formula
/// `q^{n(mu')} (q)_N / prod_{x in mu} (1 - q^{h(x)})`.
///
/// The division is exact for every partition; a nonzero remainder signals a
/// hook computation bug and is surfaced as an error.
pub fn kostka_hook(mu: &Partition) -> Result<QPoly> {
    let n = mu.size();
    let mut poly = q_pochhammer(n).shift(mu.conjugate().nstat() as i64);
    for h in mu.hooks() {
        let factor = QPoly::from_pairs([(0, 1), (h as i64, -1)]);
        poly = poly.exact_div(&factor)?;
    }
    Ok(poly)
}

/// `~K_{lambda,mu}(q) = q^{n(mu)} K_{lambda,mu}(1/q)`.
///
/// For a genuine Kostka polynomial the result has no negative exponents; a
/// negative exponent is flagged rather than silently returned.
pub fn tilde_transform(k: &QPoly, mu: &Partition) -> Result<QPoly> {
    let out = k.substitute_inverse().shift(mu.nstat() as i64);
    if let Some(e) = out.min_exp() {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
    }
    Ok(out)
}

/// `K_{lambda,mu}(q)` as the charge generating function over semistandard
/// tableaux of shape `lambda` and content `mu`.  The independent oracle for
/// the ring and fusion routes.
pub fn charge_kostka(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
    }
    let mut out = QPoly::zero();
    for t in ssyt_enumerate(lambda, mu.parts()) {
        let c = charge_of_word(&t.reading_word());
        out.add_term(c as i64, BigInt::from(1));
    }
    Ok(out)
}

/// `~K_{lambda,mu}(q)` straight from the charge oracle.
pub fn tilde_kostka(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    tilde_transform(&charge_kostka(lambda, mu)?, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::ssyt_count;
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_examples() {
        assert_eq!(kostka_hook(&p(&[2, 1])).unwrap(), QPoly::from_pairs([(1, 1), (2, 1)]));
        for n in 1..=6 {
            assert_eq!(kostka_hook(&Partition::column(n)).unwrap(), QPoly::one());
            let row = kostka_hook(&Partition::row(n)).unwrap();
            assert_eq!(row, QPoly::q_power((n as i64 * (n as i64 - 1)) / 2));
        }
    }

    #[test]
    fn hook_nonnegative_and_counts_standard_tableaux() {
        for n in 1..=8 {
            for mu in Partition::all(n) {
                let k = kostka_hook(&mu).unwrap();
                assert!(k.all_coeffs_nonnegative(), "negative coefficient in K for {mu}");
                let syt = ssyt_count(&mu, &vec![1; n as usize]);
                assert_eq!(k.eval_one(), BigInt::from(syt), "K(1) != #SYT for {mu}");
            }
        }
    }

    #[test]
    fn charge_matches_hook_for_column_content() {
        for n in 1..=6 {
            let col = Partition::column(n);
            for lambda in Partition::all(n) {
                assert_eq!(
                    charge_kostka(&lambda, &col).unwrap(),
                    kostka_hook(&lambda).unwrap(),
                    "lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn charge_examples() {
        assert_eq!(
            charge_kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            QPoly::from_pairs([(1, 1), (2, 1)])
        );
        assert_eq!(charge_kostka(&p(&[3, 2]), &p(&[3, 2])).unwrap(), QPoly::one());
        assert!(charge_kostka(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
        assert!(charge_kostka(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn charge_vanishes_unless_dominated() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = charge_kostka(&lambda, &mu).unwrap();
                    let dom = mu.dominance_leq(&lambda).unwrap();
                    assert_eq!(!k.is_zero(), dom, "lambda={lambda} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_transform(&QPoly::one(), &p(&[4])).unwrap(), QPoly::one());
        assert_eq!(
            tilde_transform(&QPoly::from_pairs([(1, 1), (2, 1)]), &p(&[1, 1, 1])).unwrap(),
            QPoly::from_pairs([(1, 1), (2, 1)])
        );
        assert_eq!(
            tilde_transform(&QPoly::q_power(3), &p(&[1, 1, 1])).unwrap(),
            QPoly::one()
        );
        assert!(matches!(
            tilde_transform(&QPoly::q_power(4), &p(&[1, 1, 1])),
            Err(Error::NegativeExponent(-1))
        ));
    }

    #[test]
    fn tilde_of_charge_is_polynomial_with_small_constant() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = charge_kostka(&lambda, &mu).unwrap();
                    let t = tilde_transform(&k, &mu).unwrap();
                    assert!(!t.has_negative_exp());
                    let c0 = t.coeff(0);
                    assert!(c0.is_zero() || c0 == BigInt::from(1), "lambda={lambda} mu={mu}");
                }
            }
        }
    }
}
