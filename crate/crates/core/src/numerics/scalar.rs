//! Elements of the quadratic field Q(√n).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::integer::Roots;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::NumericsError;

/// Returns `Some(s)` when `n == s * s`.
pub fn perfect_square_root(n: u64) -> Option<u64> {
    let s = n.sqrt();
    (s * s == n).then_some(s)
}

/// An exact value `a + b·√n` with rational `a`, `b` and a positive integer radicand `n`.
///
/// When the radicand is a perfect square the surd part is folded into the rational
/// part at construction, so every value has exactly one representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rational: BigRational,
    surd: BigRational,
    radicand: u64,
}

impl ExactScalar {
    /// Builds `a + b·√radicand`.
    ///
    /// Panics if `radicand == 0`.
    pub fn new(a: BigRational, b: BigRational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        match perfect_square_root(radicand) {
            Some(s) => ExactScalar {
                rational: a + b * BigRational::from_integer(BigInt::from(s)),
                surd: BigRational::zero(),
                radicand,
            },
            None => ExactScalar {
                rational: a,
                surd: b,
                radicand,
            },
        }
    }

    pub fn zero(radicand: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::zero(), radicand)
    }

    pub fn one(radicand: u64) -> Self {
        Self::integer(1, radicand)
    }

    pub fn integer(value: i64, radicand: u64) -> Self {
        Self::new(BigRational::from_integer(value.into()), BigRational::zero(), radicand)
    }

    /// The rational number `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64, radicand: u64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero(), radicand)
    }

    /// `(num_a/den_a) + (num_b/den_b)·√radicand`.
    pub fn from_parts(num_a: i64, den_a: i64, num_b: i64, den_b: i64, radicand: u64) -> Self {
        Self::new(
            BigRational::new(num_a.into(), den_a.into()),
            BigRational::new(num_b.into(), den_b.into()),
            radicand,
        )
    }

    /// `√radicand` itself.
    pub fn sqrt_radicand(radicand: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), radicand)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.surd.is_zero() {
            return a;
        }
        let b = self.surd.to_f64().unwrap_or(f64::NAN);
        a + b * (self.radicand as f64).sqrt()
    }

    fn check_radicand(&self, other: &Self) -> Result<(), NumericsError> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(NumericsError::RadicandMismatch {
                left: self.radicand,
                right: other.radicand,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_radicand(other)?;
        Ok(ExactScalar {
            rational: &self.rational + &other.rational,
            surd: &self.surd + &other.surd,
            radicand: self.radicand,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_radicand(other)?;
        Ok(ExactScalar {
            rational: &self.rational - &other.rational,
            surd: &self.surd - &other.surd,
            radicand: self.radicand,
        })
    }

    /// `(a+b√n)(c+d√n) = (ac + bdn) + (ad + bc)√n`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_radicand(other)?;
        let n = BigRational::from_integer(BigInt::from(self.radicand));
        let rational = &self.rational * &other.rational + &self.surd * &other.surd * n;
        let surd = &self.rational * &other.surd + &self.surd * &other.rational;
        Ok(ExactScalar {
            rational,
            surd,
            radicand: self.radicand,
        })
    }

    /// Conjugate `a − b√n`.
    pub fn conjugate(&self) -> Self {
        ExactScalar {
            rational: self.rational.clone(),
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }

    /// Field norm `a² − b²n`, which is nonzero for every nonzero element.
    pub fn norm(&self) -> BigRational {
        let n = BigRational::from_integer(BigInt::from(self.radicand));
        &self.rational * &self.rational - &self.surd * &self.surd * n
    }

    /// Inverse through the conjugate: `(a − b√n) / (a² − b²n)`.
    pub fn inv(&self) -> Result<Self, NumericsError> {
        if self.is_zero() {
            return Err(NumericsError::DivisionByZero);
        }
        let norm = self.norm();
        let conj = self.conjugate();
        Ok(ExactScalar {
            rational: conj.rational / &norm,
            surd: conj.surd / norm,
            radicand: self.radicand,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, NumericsError> {
        self.check_radicand(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Exact sign of the real number `a + b√n`.
    pub fn signum(&self) -> Ordering {
        let a = self.rational.cmp(&BigRational::zero());
        let b = self.surd.cmp(&BigRational::zero());
        match (a, b) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (sa, sb) if sa == sb => sa,
            (sa, _) => {
                // opposite signs: compare a² against b²n
                let a2 = &self.rational * &self.rational;
                let b2n = &self.surd
                    * &self.surd
                    * BigRational::from_integer(BigInt::from(self.radicand));
                match a2.cmp(&b2n) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Exact comparison as real numbers.
    pub fn exact_cmp(&self, other: &Self) -> Result<Ordering, NumericsError> {
        Ok(self.checked_sub(other)?.signum())
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Integer value, if this is a rational integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.surd.is_zero() && self.rational.is_integer() {
            self.rational.to_integer().to_i64()
        } else {
            None
        }
    }

    /// `[a_num, a_den, b_num, b_den]` as decimal strings (arbitrary precision safe).
    pub fn to_parts_strings(&self) -> [String; 4] {
        [
            self.rational.numer().to_string(),
            self.rational.denom().to_string(),
            self.surd.numer().to_string(),
            self.surd.denom().to_string(),
        ]
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `p/q` or `p/q+r/s*sqrt(n)` (the rational part is always printed).
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_ratio(&self.rational, f)?;
        if !self.surd.is_zero() {
            if self.surd.is_positive() {
                write!(f, "+")?;
            }
            fmt_ratio(&self.surd, f)?;
            write!(f, "*sqrt({})", self.radicand)?;
        }
        Ok(())
    }
}

// Operator forms panic on radicand mismatch; use the `checked_*` methods for
// values that may come from different fields.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.$checked(rhs).expect("radicand mismatch")
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$checked(&rhs).expect("radicand mismatch")
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$checked(rhs).expect("radicand mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            rational: -&self.rational,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_product_is_norm() {
        let x = ExactScalar::from_parts(1, 1, 1, 1, 2);
        let y = ExactScalar::from_parts(1, 1, -1, 1, 2);
        assert_eq!(&x * &y, ExactScalar::integer(-1, 2));
    }

    #[test]
    fn inverse_of_sqrt_two() {
        let x = ExactScalar::sqrt_radicand(2);
        let inv = x.inv().unwrap();
        assert_eq!(inv, ExactScalar::from_parts(0, 1, 1, 2, 2));
        assert_eq!(&x * &inv, ExactScalar::one(2));
    }

    #[test]
    fn perfect_square_folds_surd() {
        let x = ExactScalar::from_parts(0, 1, 1, 1, 4);
        assert_eq!(x.rational_part(), &BigRational::from_integer(2.into()));
        assert!(x.surd_part().is_zero());
        assert_eq!(x, ExactScalar::integer(2, 4));
    }

    #[test]
    fn mismatch_and_zero_division_are_errors() {
        let x = ExactScalar::one(2);
        let y = ExactScalar::one(3);
        assert!(matches!(
            x.checked_add(&y),
            Err(NumericsError::RadicandMismatch { left: 2, right: 3 })
        ));
        assert!(matches!(ExactScalar::zero(5).inv(), Err(NumericsError::DivisionByZero)));
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 3 - 2√2 ≈ 0.17 > 0, 2 - √5 < 0, 1 - √1 == 0
        assert_eq!(ExactScalar::from_parts(3, 1, -2, 1, 2).signum(), Ordering::Greater);
        assert_eq!(ExactScalar::from_parts(2, 1, -1, 1, 5).signum(), Ordering::Less);
        assert_eq!(ExactScalar::from_parts(1, 1, -1, 1, 1).signum(), Ordering::Equal);
    }

    #[test]
    fn display_format() {
        assert_eq!(ExactScalar::ratio(121, 16, 16).to_string(), "121/16");
        assert_eq!(ExactScalar::from_parts(3, 2, -1, 4, 8).to_string(), "3/2-1/4*sqrt(8)");
        assert_eq!(ExactScalar::sqrt_radicand(2).to_string(), "0+1*sqrt(2)");
    }

    fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| ExactScalar::from_parts(a, b, c, d, 5))
    }

    proptest! {
        #[test]
        fn field_inverse_is_exact(x in arb_scalar()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), ExactScalar::one(5));
        }

        #[test]
        fn addition_is_associative(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!((&x + &y) + &z, &x + &(&y + &z));
        }

        #[test]
        fn multiplication_distributes(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&x * &(&y + &z), (&x * &y) + (&x * &z));
        }

        #[test]
        fn float_value_tracks_exact_value(x in arb_scalar(), y in arb_scalar()) {
            let p = &x * &y;
            prop_assert!((p.to_f64() - x.to_f64() * y.to_f64()).abs() < 1e-9 * (1.0 + p.to_f64().abs()));
        }
    }
}
