use num::{BigInt, BigRational, One, Signed, Zero};

use super::text::parse_rational;
use super::{Field, RatFunc, Ring, RingDesc, ScalarError};

/// Arbitrary-precision rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn sqrt_bigint(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Ring for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_rational(q: Rational, _: &()) -> Self {
        q
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn lift(&self) -> RatFunc {
        RatFunc::constant(self.clone(), &super::no_vars())
    }

    fn lower(value: &RatFunc, _: &()) -> Option<Self> {
        value.as_constant()
    }

    fn descriptor(_: &()) -> RingDesc {
        RingDesc::Rational
    }

    fn ctx_from_desc(desc: &RingDesc) -> Option<()> {
        matches!(desc, RingDesc::Rational).then_some(())
    }

    fn parse_in(text: &str, _: &()) -> Result<Self, ScalarError> {
        parse_rational(text, 0)
    }

    fn matrix_det(m: &crate::matrix::Matrix<Self>) -> Self {
        crate::matrix::field_det(m)
    }

    fn matrix_inverse(
        m: &crate::matrix::Matrix<Self>,
    ) -> Result<crate::matrix::Matrix<Self>, crate::matrix::MatrixError> {
        crate::matrix::field_inverse(m)
    }
}

impl Field for Rational {
    fn sqrt_exact(&self) -> Option<Self> {
        let n = sqrt_bigint(self.numer())?;
        let d = sqrt_bigint(self.denom())?;
        Some(Rational::new(n, d))
    }
}
