//! Rational functions over the rationals in reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::gcd;
use super::text::{format_ratfunc, parse_ratfunc};
use super::{Field, MultiPoly, Rational, Ring, RingDesc, ScalarError, Vars};

/// Quotient of two polynomials, kept with coprime numerator and denominator
/// and a denominator whose graded-lex leading coefficient is 1.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.vars(), den.vars(), "ring mismatch");
        if num.is_zero() {
            return RatFunc {
                den: MultiPoly::one(num.vars()),
                num,
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.as_constant().is_some() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::from_coprime(num, den)
    }

    fn from_coprime(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let s = lc.recip();
            RatFunc {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        RatFunc { num: p, den }
    }

    pub fn constant(c: Rational, vars: &Vars) -> Self {
        Self::from_poly(MultiPoly::constant(c, vars))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::from_poly(MultiPoly::var(vars, name))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn as_poly(&self) -> Option<MultiPoly> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn reembed(&self, target: &Vars) -> Option<Self> {
        Some(RatFunc {
            num: self.num.reembed(target)?,
            den: self.den.reembed(target)?,
        })
    }

    /// Image under the substitution homomorphism sending each variable either
    /// to its binding or to the target variable of the same name.
    pub fn substitute(
        &self,
        bindings: &dyn Fn(&str) -> Option<RatFunc>,
        target: &Vars,
    ) -> Result<RatFunc, ScalarError> {
        let mut values = Vec::with_capacity(self.vars().len());
        for name in self.vars().iter() {
            let value = match bindings(name) {
                Some(v) => {
                    if v.vars() != target {
                        return Err(ScalarError::RingMismatch {
                            left: RatFunc::descriptor(v.vars()).to_string(),
                            right: RatFunc::descriptor(target).to_string(),
                        });
                    }
                    v
                }
                None => RatFunc::from_poly(
                    MultiPoly::try_var(target, name)
                        .ok_or_else(|| ScalarError::UnboundVariable(name.clone()))?,
                ),
            };
            values.push(value);
        }
        let n = self.num.eval(&values, target)?;
        let d = self.den.eval(&values, target)?;
        if d.is_zero() {
            return Err(ScalarError::OutsideDomain {
                denominator: self.den.to_string(),
            });
        }
        Ok(n / d)
    }

    /// Equality decided by cross multiplication.
    pub fn cross_eq(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.as_constant().is_some() {
                return RatFunc::from_coprime(&self.num + &other.num, self.den.clone());
            }
            return RatFunc::new(&self.num + &other.num, self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let sd = self.den.div_exact(&g).unwrap();
        let od = other.den.div_exact(&g).unwrap();
        let num = &self.num * &od + &other.num * &sd;
        let den = &self.den * &od;
        RatFunc::new(num, den)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::zero(self.vars());
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::from_coprime(n1 * &n2, d1 * &d2)
    }

    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn recip_ref(&self) -> Self {
        assert!(!self.num.is_zero(), "division by zero");
        RatFunc::from_coprime(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.vars() != other.vars() {
            return false;
        }
        (self.num == other.num && self.den == other.den) || self.cross_eq(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ratfunc(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(&self, rhs)
            }
        }
        impl<'a, 'b> $tr<&'a RatFunc> for &'b RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                $body(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_ref(b));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_ref(b));
forward_binop!(Div, div, |a: &RatFunc, b: &RatFunc| a
    .mul_ref(&b.recip_ref()));

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Ring for RatFunc {
    type Ctx = Vars;

    fn ctx(&self) -> Vars {
        self.vars().clone()
    }

    fn zero(ctx: &Vars) -> Self {
        RatFunc::from_poly(MultiPoly::zero(ctx))
    }

    fn one(ctx: &Vars) -> Self {
        RatFunc::constant(super::int(1), ctx)
    }

    fn from_rational(q: Rational, ctx: &Vars) -> Self {
        RatFunc::constant(q, ctx)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| self.recip_ref())
    }

    fn lift(&self) -> RatFunc {
        self.clone()
    }

    fn lower(value: &RatFunc, ctx: &Vars) -> Option<Self> {
        if value.vars() == ctx {
            Some(value.clone())
        } else {
            value.reembed(ctx)
        }
    }

    fn descriptor(ctx: &Vars) -> RingDesc {
        RingDesc::RatFunc(ctx.clone())
    }

    fn ctx_from_desc(desc: &RingDesc) -> Option<Vars> {
        match desc {
            RingDesc::RatFunc(v) => Some(v.clone()),
            _ => None,
        }
    }

    fn parse_in(text: &str, ctx: &Vars) -> Result<Self, ScalarError> {
        parse_ratfunc(text, ctx)
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

impl Field for RatFunc {
    fn sqrt_exact(&self) -> Option<Self> {
        // num/den is a square iff num*den is, and then sqrt = sqrt(num*den)/den.
        let root = (&self.num * &self.den).sqrt_exact()?;
        Some(RatFunc::new(root, self.den.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, vars};

    #[test]
    fn canonical_form_cancels() {
        let vs = vars(&["b", "x"]);
        let b = RatFunc::var(&vs, "b");
        let x = RatFunc::var(&vs, "x");
        let r = (b.clone() * &x) / (x.clone() * &x);
        assert_eq!(r.num(), &MultiPoly::var(&vs, "b"));
        assert_eq!(r.den(), &MultiPoly::var(&vs, "x"));
        assert_eq!((x.clone() / &x), RatFunc::one(&vs));
    }

    #[test]
    fn inverse_of_variable() {
        let vs = vars(&["x"]);
        let x = RatFunc::var(&vs, "x");
        let inv = x.unit_inverse().unwrap();
        assert_eq!(inv.to_string(), "(1)/(1*x^1)");
        assert_eq!(inv * &x, RatFunc::one(&vs));
    }

    #[test]
    fn substitution_into_rational() {
        let vs = vars(&["b", "x"]);
        let b = RatFunc::var(&vs, "b");
        let x = RatFunc::var(&vs, "x");
        let e = b / (x.clone() * &x);
        let target = crate::scalar::no_vars();
        let bind = |n: &str| match n {
            "b" => Some(RatFunc::constant(int(1), &target)),
            "x" => Some(RatFunc::constant(int(2), &target)),
            _ => None,
        };
        let v = e.substitute(&bind, &target).unwrap();
        assert_eq!(v.as_constant(), Some(rat(1, 4)));

        let zero = |n: &str| (n == "x").then(|| RatFunc::constant(int(0), &target));
        let inv_x = x.unit_inverse().unwrap();
        let partial = crate::scalar::vars(&["b"]);
        let err = inv_x
            .substitute(
                &|n: &str| zero(n).map(|_| RatFunc::zero(&partial)),
                &partial,
            )
            .unwrap_err();
        assert!(matches!(err, ScalarError::OutsideDomain { .. }));
    }

    #[test]
    fn square_root_of_rational_function() {
        let vs = vars(&["b", "c"]);
        let b = RatFunc::var(&vs, "b");
        let c = RatFunc::var(&vs, "c");
        let s = b.clone() / &c;
        assert_eq!((s.clone() * &s).sqrt_exact(), Some(s.clone()));
        assert!(s.sqrt_exact().is_none());
    }
}
