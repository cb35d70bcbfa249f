//! Runtime-tagged scalars, used where the ring is only known from input.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{vars, Laurent, MultiPoly, RatFunc, Rational, Ring, ScalarError, Vars};

/// Names a ring instance: the kind of ring and its ordered variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDesc {
    Rational,
    Poly(Vars),
    RatFunc(Vars),
    Laurent(Vars),
}

impl RingDesc {
    pub fn vars(&self) -> Vars {
        match self {
            RingDesc::Rational => super::no_vars(),
            RingDesc::Poly(v) | RingDesc::RatFunc(v) | RingDesc::Laurent(v) => v.clone(),
        }
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, vs) = match self {
            RingDesc::Rational => return f.write_str("rational"),
            RingDesc::Poly(v) => ("poly", v),
            RingDesc::RatFunc(v) => ("ratfunc", v),
            RingDesc::Laurent(v) => ("laurent", v),
        };
        write!(f, "{kind}:{}", vs.join(","))
    }
}

impl FromStr for RingDesc {
    type Err = ScalarError;

    /// Parses `rational`, `poly:a,b`, `ratfunc:a,b` or `laurent:t,q`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        if s == "rational" {
            return Ok(RingDesc::Rational);
        }
        let bad = |m: &str| ScalarError::Parse {
            position: 0,
            message: format!("{m}: {s:?}"),
        };
        let (kind, names) = s.split_once(':').ok_or_else(|| bad("unknown ring"))?;
        let names: Vec<&str> = if names.is_empty() {
            Vec::new()
        } else {
            names.split(',').collect()
        };
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || names[..i].contains(n) {
                return Err(bad("invalid variable list"));
            }
        }
        let vs = vars(&names);
        match kind {
            "poly" => Ok(RingDesc::Poly(vs)),
            "ratfunc" => Ok(RingDesc::RatFunc(vs)),
            "laurent" if (1..=2).contains(&names.len()) => Ok(RingDesc::Laurent(vs)),
            "laurent" => Err(bad("Laurent rings take one or two variables")),
            _ => Err(bad("unknown ring")),
        }
    }
}

/// A scalar tagged with its ring.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Poly(MultiPoly),
    RatFunc(RatFunc),
    Laurent(Laurent),
}

macro_rules! same_ring {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (Scalar::Rational($x), Scalar::Rational($y)) => Ok(Scalar::Rational($body)),
            (Scalar::Poly($x), Scalar::Poly($y)) if $x.vars() == $y.vars() => {
                Ok(Scalar::Poly($body))
            }
            (Scalar::RatFunc($x), Scalar::RatFunc($y)) if $x.vars() == $y.vars() => {
                Ok(Scalar::RatFunc($body))
            }
            (Scalar::Laurent($x), Scalar::Laurent($y)) if $x.vars() == $y.vars() => {
                Ok(Scalar::Laurent($body))
            }
            (a, b) => Err(ScalarError::RingMismatch {
                left: a.ring().to_string(),
                right: b.ring().to_string(),
            }),
        }
    };
}

impl Scalar {
    pub fn ring(&self) -> RingDesc {
        match self {
            Scalar::Rational(_) => RingDesc::Rational,
            Scalar::Poly(p) => RingDesc::Poly(p.vars().clone()),
            Scalar::RatFunc(r) => RingDesc::RatFunc(r.vars().clone()),
            Scalar::Laurent(l) => RingDesc::Laurent(l.vars().clone()),
        }
    }

    pub fn lift(&self) -> RatFunc {
        match self {
            Scalar::Rational(q) => q.lift(),
            Scalar::Poly(p) => p.lift(),
            Scalar::RatFunc(r) => r.clone(),
            Scalar::Laurent(l) => l.lift(),
        }
    }

    /// Brings a rational function into the ring `desc`, if it lies there.
    pub fn lower(value: &RatFunc, desc: &RingDesc) -> Option<Scalar> {
        Some(match desc {
            RingDesc::Rational => Scalar::Rational(Rational::lower(value, &())?),
            RingDesc::Poly(v) => Scalar::Poly(MultiPoly::lower(value, v)?),
            RingDesc::RatFunc(v) => Scalar::RatFunc(RatFunc::lower(value, v)?),
            RingDesc::Laurent(v) => Scalar::Laurent(Laurent::lower(value, v)?),
        })
    }

    pub fn parse(text: &str, desc: &RingDesc) -> Result<Scalar, ScalarError> {
        Ok(match desc {
            RingDesc::Rational => Scalar::Rational(Rational::parse_in(text, &())?),
            RingDesc::Poly(v) => Scalar::Poly(MultiPoly::parse_in(text, v)?),
            RingDesc::RatFunc(v) => Scalar::RatFunc(RatFunc::parse_in(text, v)?),
            RingDesc::Laurent(v) => Scalar::Laurent(Laurent::parse_in(text, v)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => Ring::is_zero(q),
            Scalar::Poly(p) => p.is_zero(),
            Scalar::RatFunc(r) => Ring::is_zero(r),
            Scalar::Laurent(l) => l.is_zero(),
        }
    }

    pub fn ring_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        same_ring!(self, other, |a, b| a.clone() + b)
    }

    pub fn ring_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        same_ring!(self, other, |a, b| a.clone() * b)
    }

    pub fn ring_neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Poly(p) => Scalar::Poly(-p),
            Scalar::RatFunc(r) => Scalar::RatFunc(-r),
            Scalar::Laurent(l) => Scalar::Laurent(-l),
        }
    }

    pub fn scalar_invert(&self) -> Result<Scalar, ScalarError> {
        let inv = match self {
            Scalar::Rational(q) => q.unit_inverse().map(Scalar::Rational),
            Scalar::Poly(p) => p.unit_inverse().map(Scalar::Poly),
            Scalar::RatFunc(r) => r.unit_inverse().map(Scalar::RatFunc),
            Scalar::Laurent(l) => l.unit_inverse().map(Scalar::Laurent),
        };
        inv.ok_or_else(|| ScalarError::NotUnit {
            element: self.to_string(),
            ring: self.ring().to_string(),
        })
    }

    /// Applies the substitution homomorphism and brings the result into
    /// `target`. Every binding must already lie in `target`; variables without
    /// a binding are carried to the target variable of the same name.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Scalar>,
        target: &RingDesc,
    ) -> Result<Scalar, ScalarError> {
        let tv = target.vars();
        let mut lifted = BTreeMap::new();
        for (name, value) in bindings {
            if value.ring() != *target {
                return Err(ScalarError::RingMismatch {
                    left: value.ring().to_string(),
                    right: target.to_string(),
                });
            }
            lifted.insert(name.as_str(), value.lift());
        }
        let image = self
            .lift()
            .substitute(&|n: &str| lifted.get(n).cloned(), &tv)?;
        Scalar::lower(&image, target).ok_or_else(|| ScalarError::NotRepresentable {
            value: image.to_string(),
            ring: target.to_string(),
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Poly(p) => write!(f, "{p}"),
            Scalar::RatFunc(r) => write!(f, "{r}"),
            Scalar::Laurent(l) => write!(f, "{l}"),
        }
    }
}
