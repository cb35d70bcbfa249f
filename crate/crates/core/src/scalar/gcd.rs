//! Multivariate polynomial gcd over the rationals by recursive primitive
//! pseudo-remainder sequences.

use std::collections::BTreeMap;

use num::One;

use super::poly::Monomial;
use super::{MultiPoly, Rational};

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let vars = a.vars().clone();
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return MultiPoly::constant(Rational::one(), &vars);
    }
    if a.is_monomial() {
        return monomial_gcd(a, b);
    }
    if b.is_monomial() {
        return monomial_gcd(b, a);
    }
    if a == b {
        return a.monic();
    }
    if coprime_by_images(a, b) {
        return MultiPoly::constant(Rational::one(), &vars);
    }
    let v = (0..vars.len())
        .find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .expect("non-constant polynomial has a variable");
    if a.degree_in(v) == 0 {
        return gcd(a, &content(b, v));
    }
    if b.degree_in(v) == 0 {
        return gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);

    // Monic normalisation keeps rational coefficients from growing along the
    // remainder sequence.
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa.monic(), pb.monic())
    } else {
        (pb.monic(), pa.monic())
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            g = MultiPoly::constant(Rational::one(), &vars);
            break;
        }
        f = g;
        g = primitive_part(&r, v).monic();
    }
    (c * primitive_part(&g, v)).monic()
}

/// Sound coprimality test: if for every variable some specialisation of the
/// others keeps both leading coefficients nonzero and yields a constant
/// univariate gcd, the gcd has degree zero in every variable.
fn coprime_by_images(a: &MultiPoly, b: &MultiPoly) -> bool {
    let n = a.vars().len();
    let active = (0..n)
        .filter(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .count();
    if active < 2 {
        return false;
    }
    (0..n).all(|v| {
        if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
            return true;
        }
        (0..4i64).any(|attempt| {
            let point: Vec<Rational> = (0..n)
                .map(|i| Rational::from_integer((3 + 5 * i as i64 + 11 * attempt).into()))
                .collect();
            let (sa, sb) = (specialise(a, v, &point), specialise(b, v, &point));
            sa.degree_in(v) == a.degree_in(v)
                && sb.degree_in(v) == b.degree_in(v)
                && gcd(&sa, &sb).degree_in(v) == 0
        })
    })
}

/// Substitutes `point` for every variable except `v`.
fn specialise(p: &MultiPoly, v: usize, point: &[Rational]) -> MultiPoly {
    let mut out = MultiPoly::zero(p.vars());
    for (m, c) in p.terms() {
        let mut coeff = c.clone();
        for (i, (e, x)) in m.exps().iter().zip(point).enumerate() {
            if i != v {
                coeff *= num::pow(x.clone(), *e as usize);
            }
        }
        out.add_term(var_power(p.vars(), v, m.exps()[v]), coeff);
    }
    out
}

/// Gcd of a monomial with an arbitrary polynomial: the componentwise minimum
/// of exponents over all terms.
fn monomial_gcd(mono: &MultiPoly, other: &MultiPoly) -> MultiPoly {
    let (m, _) = mono.leading().unwrap();
    let mut exps = m.exps().to_vec();
    for (om, _) in other.terms() {
        for (e, o) in exps.iter_mut().zip(om.exps()) {
            *e = (*e).min(*o);
        }
    }
    MultiPoly::monomial(mono.vars(), Monomial(exps), Rational::one())
}

/// Coefficients of `p` viewed as a polynomial in variable `v`.
fn coefficients(p: &MultiPoly, v: usize) -> BTreeMap<u32, MultiPoly> {
    let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.exps()[v];
        let mut exps = m.exps().to_vec();
        exps[v] = 0;
        out.entry(d)
            .or_insert_with(|| MultiPoly::zero(p.vars()))
            .add_term(Monomial(exps), c.clone());
    }
    out
}

fn content(p: &MultiPoly, v: usize) -> MultiPoly {
    coefficients(p, v)
        .values()
        .fold(MultiPoly::zero(p.vars()), |acc, c| gcd(&acc, c))
}

fn primitive_part(p: &MultiPoly, v: usize) -> MultiPoly {
    p.div_exact(&content(p, v)).expect("content divides")
}

fn var_power(vars: &super::Vars, v: usize, k: u32) -> Monomial<u32> {
    let mut exps = vec![0u32; vars.len()];
    exps[v] = k;
    Monomial(exps)
}

fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: usize) -> MultiPoly {
    let n = g.degree_in(v);
    let gc = coefficients(g, v);
    let lead_g = gc[&(n as u32)].clone();
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(v) >= n {
        let dr = r.degree_in(v);
        let lead_r = coefficients(&r, v)[&(dr as u32)].clone();
        let shift = var_power(r.vars(), v, (dr - n) as u32);
        r = &lead_g * &r - lead_r.mul_term(&shift, &Rational::one()) * g;
    }
    r
}
