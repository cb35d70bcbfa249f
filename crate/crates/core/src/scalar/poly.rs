//! Sparse polynomials over the rationals, with non-negative exponents
//! ([`MultiPoly`]) or arbitrary integer exponents ([`Laurent`]).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num::Signed;

use super::text::{format_poly, parse_poly};
use super::{int, RatFunc, Rational, Ring, RingDesc, ScalarError, Vars};

pub trait Exponent: Copy + Ord + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const SIGNED: bool;
    fn to_i64(self) -> i64;
    fn from_i64(v: i64) -> Option<Self>;
    fn zero() -> Self {
        Self::from_i64(0).unwrap()
    }
}

impl Exponent for u32 {
    const SIGNED: bool = false;
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        u32::try_from(v).ok()
    }
}

impl Exponent for i32 {
    const SIGNED: bool = true;
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        i32::try_from(v).ok()
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<E>(pub(crate) Vec<E>);

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![E::zero(); n])
    }

    pub fn exps(&self) -> &[E] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.to_i64()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| e.to_i64() == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| E::from_i64(a.to_i64() + b.to_i64()).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Quotient `self / other`, `None` when an exponent would leave the
    /// exponent domain.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| E::from_i64(a.to_i64() - b.to_i64()))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with rational coefficients in a fixed, ordered set of variables.
#[derive(Clone, Debug)]
pub struct SparsePoly<E: Exponent> {
    vars: Vars,
    terms: BTreeMap<Monomial<E>, Rational>,
}

pub type MultiPoly = SparsePoly<u32>;
pub type Laurent = SparsePoly<i32>;

impl<E: Exponent> PartialEq for SparsePoly<E> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<E: Exponent> Eq for SparsePoly<E> {}

impl<E: Exponent> Hash for SparsePoly<E> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<E: Exponent> SparsePoly<E> {
    pub fn zero(vars: &Vars) -> Self {
        SparsePoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, vars: &Vars) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn monomial(vars: &Vars, m: Monomial<E>, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `name` of the ring, if it exists.
    pub fn try_var(vars: &Vars, name: &str) -> Option<Self> {
        let idx = vars.iter().position(|v| v == name)?;
        let mut m = Monomial::one(vars.len());
        m.0[idx] = E::from_i64(1).unwrap();
        Some(Self::monomial(vars, m, int(1)))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        Self::try_var(vars, name).unwrap_or_else(|| panic!("no variable {name} in ring"))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<E>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(int(0)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Greatest term under the graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial<E>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| int(0))
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| m.0[idx].to_i64())
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree_in(&self, idx: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| m.0[idx].to_i64())
            .min()
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial<E>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial<E>, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(int(1), &self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_ctx(&self, other: &Self) {
        if self.vars != other.vars {
            panic!(
                "ring mismatch: {} vs {}",
                Self::descriptor(&self.vars),
                Self::descriptor(&other.vars)
            );
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg_ref(&self) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Evaluates the polynomial after mapping variable `i` to `values[i]`.
    /// Negative exponents require the corresponding value to be a unit.
    pub fn eval<T: Ring>(&self, values: &[T], ctx: &T::Ctx) -> Result<T, ScalarError> {
        assert_eq!(values.len(), self.vars.len());
        let mut inverses: Vec<Option<T>> = vec![None; values.len()];
        let mut acc = T::zero(ctx);
        for (m, c) in &self.terms {
            let mut term = T::from_rational(c.clone(), ctx);
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e == 0 {
                    continue;
                }
                let base = if e > 0 {
                    values[i].clone()
                } else {
                    if inverses[i].is_none() {
                        let inv =
                            values[i]
                                .unit_inverse()
                                .ok_or_else(|| ScalarError::OutsideDomain {
                                    denominator: self.vars[i].clone(),
                                })?;
                        inverses[i] = Some(inv);
                    }
                    inverses[i].clone().unwrap()
                };
                for _ in 0..e.unsigned_abs() {
                    term = term * &base;
                }
            }
            acc = acc + &term;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial over another variable list, matching by name.
    pub fn reembed(&self, target: &Vars) -> Option<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![E::zero(); target.len()];
            for (i, e) in m.0.iter().enumerate() {
                if e.to_i64() != 0 {
                    exps[map[i]?] = *e;
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Some(out)
    }

    /// Converts between exponent domains, when every exponent fits.
    pub fn convert<F: Exponent>(&self) -> Option<SparsePoly<F>> {
        let mut out = SparsePoly::<F>::zero(&self.vars);
        for (m, c) in &self.terms {
            let exps =
                m.0.iter()
                    .map(|e| F::from_i64(e.to_i64()))
                    .collect::<Option<Vec<_>>>()?;
            out.add_term(Monomial(exps), c.clone());
        }
        Some(out)
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check_ctx(divisor);
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut quotient = Self::zero(&self.vars);
        let mut rem = self.clone();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            rem = rem.sub_ref(&divisor.mul_term(&m, &c));
            quotient.add_term(m, c);
        }
        Some(quotient)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

impl MultiPoly {
    /// Square root as a polynomial, if `self` is a perfect square.
    pub fn sqrt_exact(&self) -> Option<Self> {
        use super::Field;
        let Some((lm, lc)) = self.leading() else {
            return Some(self.clone());
        };
        if lm.0.iter().any(|e| e % 2 != 0) {
            return None;
        }
        let root_m = Monomial(lm.0.iter().map(|e| e / 2).collect());
        let root_c = lc.sqrt_exact()?;
        let twice_lead = (root_m.clone(), &root_c * int(2));
        let mut root = Self::monomial(&self.vars, root_m, root_c);
        let bound = self.terms.len() * self.terms.len() + 16;
        for _ in 0..bound {
            let rest = self.sub_ref(&root.mul_ref(&root));
            let Some((rm, rc)) = rest.leading() else {
                return Some(root);
            };
            let m = rm.div(&twice_lead.0)?;
            if m >= twice_lead.0 {
                return None;
            }
            let c = rc / &twice_lead.1;
            root.add_term(m, c);
        }
        None
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<E: Exponent> $tr<SparsePoly<E>> for SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $method(self, rhs: SparsePoly<E>) -> SparsePoly<E> {
                self.$inner(&rhs)
            }
        }
        impl<'a, E: Exponent> $tr<&'a SparsePoly<E>> for SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $method(self, rhs: &'a SparsePoly<E>) -> SparsePoly<E> {
                self.$inner(rhs)
            }
        }
        impl<'a, 'b, E: Exponent> $tr<&'a SparsePoly<E>> for &'b SparsePoly<E> {
            type Output = SparsePoly<E>;
            fn $method(self, rhs: &'a SparsePoly<E>) -> SparsePoly<E> {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<E: Exponent> Neg for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        self.neg_ref()
    }
}

impl<E: Exponent> Neg for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        self.neg_ref()
    }
}

impl<E: Exponent> Display for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl<E: Exponent> Ring for SparsePoly<E> {
    type Ctx = Vars;

    fn ctx(&self) -> Vars {
        self.vars.clone()
    }

    fn zero(ctx: &Vars) -> Self {
        SparsePoly::zero(ctx)
    }

    fn one(ctx: &Vars) -> Self {
        SparsePoly::constant(int(1), ctx)
    }

    fn from_rational(q: Rational, ctx: &Vars) -> Self {
        SparsePoly::constant(q, ctx)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let inv =
            m.0.iter()
                .map(|e| E::from_i64(-e.to_i64()))
                .collect::<Option<Vec<_>>>()?;
        Some(Self::monomial(&self.vars, Monomial(inv), c.recip()))
    }

    fn lift(&self) -> RatFunc {
        let n = self.vars.len();
        let shift: Vec<i64> = (0..n).map(|i| (-self.min_degree_in(i)).max(0)).collect();
        let mut num = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let exps =
                m.0.iter()
                    .zip(&shift)
                    .map(|(e, s)| (e.to_i64() + s) as u32)
                    .collect();
            num.add_term(Monomial(exps), c.clone());
        }
        let den = MultiPoly::monomial(
            &self.vars,
            Monomial(shift.iter().map(|&s| s as u32).collect()),
            int(1),
        );
        RatFunc::new(num, den)
    }

    fn lower(value: &RatFunc, ctx: &Vars) -> Option<Self> {
        let value = if value.vars() == ctx {
            value.clone()
        } else {
            value.reembed(ctx)?
        };
        let den = value.den();
        if !den.is_monomial() {
            return None;
        }
        let (dm, dc) = den.leading().unwrap();
        let shift: Vec<i64> = dm.0.iter().map(|e| e.to_i64()).collect();
        let scale = dc.recip();
        let mut out = SparsePoly::<E>::zero(ctx);
        for (m, c) in value.num().terms() {
            let exps =
                m.0.iter()
                    .zip(&shift)
                    .map(|(e, s)| E::from_i64(e.to_i64() - s))
                    .collect::<Option<Vec<_>>>()?;
            out.add_term(Monomial(exps), c * &scale);
        }
        Some(out)
    }

    fn descriptor(ctx: &Vars) -> RingDesc {
        if E::SIGNED {
            RingDesc::Laurent(ctx.clone())
        } else {
            RingDesc::Poly(ctx.clone())
        }
    }

    fn ctx_from_desc(desc: &RingDesc) -> Option<Vars> {
        match (desc, E::SIGNED) {
            (RingDesc::Laurent(v), true) | (RingDesc::Poly(v), false) => Some(v.clone()),
            _ => None,
        }
    }

    fn parse_in(text: &str, ctx: &Vars) -> Result<Self, ScalarError> {
        parse_poly(text, ctx, 0)
    }
}

impl<E: Exponent> SparsePoly<E> {
    /// Sign of the leading coefficient; used to compare polynomials up to sign.
    pub fn leading_is_negative(&self) -> bool {
        self.leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
    }
}
