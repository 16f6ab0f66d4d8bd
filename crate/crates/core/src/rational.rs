//! Exact rational coefficients.
//!
//! Coefficients are arbitrary-precision reduced fractions. `num_rational`'s
//! `BigRational` already maintains the invariants this crate relies on: the
//! stored fraction is fully reduced and the denominator is positive. The
//! constructors below are thin conveniences for building coefficients from
//! machine integers.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// The rational number `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The reduced fraction `n/d`. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn constructors_reduce_and_normalize_sign() {
        let half = ratio(2, 4);
        assert_eq!(half, ratio(1, 2));
        assert!(half.denom().is_positive());

        let neg = ratio(3, -6);
        assert_eq!(neg, ratio(-1, 2));
        assert!(neg.denom().is_positive());
        assert!(neg.numer().is_negative());

        assert!(int(0).is_zero());
        assert!(int(1).is_one());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = ratio(1, 6) + ratio(1, 3);
        assert_eq!(a, ratio(1, 2));
        let b = ratio(2, 3) * ratio(9, 4);
        assert_eq!(b, ratio(3, 2));
        assert!(b.denom().is_positive());
    }

    #[test]
    #[should_panic]
    fn zero_denominator_panics() {
        let _ = ratio(1, 0);
    }
}
