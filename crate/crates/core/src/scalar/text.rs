//! Bit-exact text forms for scalars.
//!
//! Grammar (no whitespace):
//! - rational: `-?digits` or `-?digits/digits` with a positive denominator
//! - polynomial: `0`, or terms joined by `+`, each term `coef(*var^exp)*` with
//!   variables in ring order and nonzero exponents
//! - rational function: a polynomial, or `(poly)/(poly)`

use num::{BigInt, One, Zero};

use super::poly::{Exponent, Monomial, SparsePoly};
use super::{MultiPoly, RatFunc, Rational, ScalarError, Vars};

fn err(position: usize, message: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        position,
        message: message.into(),
    }
}

fn parse_integer(s: &str, offset: usize, signed: bool) -> Result<BigInt, ScalarError> {
    let digits = if signed {
        s.strip_prefix('-').unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(offset, format!("expected integer, found {s:?}")));
    }
    s.parse::<BigInt>().map_err(|e| err(offset, e.to_string()))
}

pub(crate) fn parse_rational(s: &str, offset: usize) -> Result<Rational, ScalarError> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s, offset, true)?)),
        Some((p, q)) => {
            let p = parse_integer(p, offset, true)?;
            let q_off = offset + s.find('/').unwrap() + 1;
            let q = parse_integer(q, q_off, false)?;
            if q.is_zero() {
                return Err(err(q_off, "zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

pub(crate) fn format_poly<E: Exponent>(p: &SparsePoly<E>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let vars = p.vars();
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        if i > 0 {
            out.push('+');
        }
        out.push_str(&c.to_string());
        for (name, e) in vars.iter().zip(m.exps()) {
            if e.to_i64() != 0 {
                out.push_str(&format!("*{name}^{e}"));
            }
        }
    }
    out
}

pub(crate) fn parse_poly<E: Exponent>(
    s: &str,
    vars: &Vars,
    offset: usize,
) -> Result<SparsePoly<E>, ScalarError> {
    if s.is_empty() {
        return Err(err(offset, "empty polynomial"));
    }
    let mut out = SparsePoly::<E>::zero(vars);
    let mut pos = offset;
    for term in s.split('+') {
        let mut factors = term.split('*');
        let coef_text = factors.next().unwrap_or("");
        let coef = parse_rational(coef_text, pos)?;
        let mut exps = vec![E::zero(); vars.len()];
        let mut last: Option<usize> = None;
        let mut fpos = pos + coef_text.len() + 1;
        for factor in factors {
            let (name, exp) = factor
                .split_once('^')
                .ok_or_else(|| err(fpos, format!("expected var^exp, found {factor:?}")))?;
            let idx = vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| err(fpos, format!("unknown variable {name:?}")))?;
            if last.is_some_and(|l| l >= idx) {
                return Err(err(fpos, format!("variable {name:?} out of order")));
            }
            last = Some(idx);
            let e_off = fpos + name.len() + 1;
            let e = parse_integer(exp, e_off, E::SIGNED)?;
            let e = i64::try_from(e)
                .ok()
                .and_then(E::from_i64)
                .filter(|e| e.to_i64() != 0)
                .ok_or_else(|| err(e_off, format!("invalid exponent {exp:?}")))?;
            exps[idx] = e;
            fpos += factor.len() + 1;
        }
        if coef.is_zero() && s != "0" {
            return Err(err(pos, "zero coefficient"));
        }
        out.add_term(Monomial(exps), coef);
        pos += term.len() + 1;
    }
    Ok(out)
}

pub(crate) fn format_ratfunc(r: &RatFunc) -> String {
    if r.den().as_constant().is_some_and(|c| c.is_one()) {
        format_poly(r.num())
    } else {
        format!("({})/({})", format_poly(r.num()), format_poly(r.den()))
    }
}

pub(crate) fn parse_ratfunc(s: &str, vars: &Vars) -> Result<RatFunc, ScalarError> {
    if let Some(inner) = s.strip_prefix('(') {
        let split = inner
            .find(")/(")
            .ok_or_else(|| err(0, "expected (numerator)/(denominator)"))?;
        let num_text = &inner[..split];
        let den_text = inner[split + 3..]
            .strip_suffix(')')
            .ok_or_else(|| err(s.len(), "missing closing parenthesis"))?;
        let num: MultiPoly = parse_poly(num_text, vars, 1)?;
        let den: MultiPoly = parse_poly(den_text, vars, split + 4)?;
        if den.is_zero() {
            return Err(err(split + 4, "zero denominator"));
        }
        Ok(RatFunc::new(num, den))
    } else {
        Ok(RatFunc::from_poly(parse_poly(s, vars, 0)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, vars, Laurent};

    #[test]
    fn rationals_round_trip() {
        assert_eq!(parse_rational("-3/4", 0).unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7", 0).unwrap(), rat(7, 1));
        assert!(parse_rational("3/-4", 0).is_err());
        assert!(parse_rational("3/0", 0).is_err());
        assert!(parse_rational("1.5", 0).is_err());
        assert!(parse_rational("", 0).is_err());
    }

    #[test]
    fn polynomials_round_trip() {
        let vs = vars(&["w", "x", "y"]);
        for text in ["0", "1*w^2+1*x^1*y^1+-1", "-3/2*x^1", "5"] {
            let p: MultiPoly = parse_poly(text, &vs, 0).unwrap();
            assert_eq!(format_poly(&p), text);
        }
        assert!(parse_poly::<u32>("1*y^1*x^1", &vs, 0).is_err());
        assert!(parse_poly::<u32>("x^1", &vs, 0).is_err());
        assert!(parse_poly::<u32>("1*x^-1", &vs, 0).is_err());
        assert!(parse_poly::<u32>("1*z^1", &vs, 0).is_err());
        assert!(parse_poly::<u32>("1*x^0", &vs, 0).is_err());
        assert!(parse_poly::<u32>("1 + 1*x^1", &vs, 0).is_err());
    }

    #[test]
    fn laurent_accepts_negative_exponents() {
        let vs = vars(&["t"]);
        let p: Laurent = parse_poly("1*t^-1", &vs, 0).unwrap();
        assert_eq!(format_poly(&p), "1*t^-1");
    }

    #[test]
    fn rational_functions_round_trip() {
        let vs = vars(&["b", "x"]);
        for text in ["(1*b^1)/(1*x^2)", "1*b^1+1"] {
            let r = parse_ratfunc(text, &vs).unwrap();
            assert_eq!(format_ratfunc(&r), text);
        }
        assert!(parse_ratfunc("(1)/(0)", &vs).is_err());
    }
}
