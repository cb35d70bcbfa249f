//! The classified local families: eight for two-strand twisted virtual
//! braids, seven for `n >= 3` strands, thirteen for the two-strand singular
//! twisted virtual braid monoid.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{RepError, Representation};
use crate::matrix::Matrix;
use crate::presentation::{Generator, Structure};
use crate::scalar::{Field, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    /// Local representations of `TVB_2`, 1..=8.
    Zeta(u8),
    /// Homogeneous local representations of `TVB_n`, `n >= 3`, 1..=7.
    ZetaPrime(u8),
    /// Local representations of `STVB_2`, 1..=13.
    Eta(u8),
    Burau,
    Lkb,
}

impl FamilyId {
    pub fn zetas() -> impl Iterator<Item = FamilyId> {
        (1..=8).map(FamilyId::Zeta)
    }

    pub fn zeta_primes() -> impl Iterator<Item = FamilyId> {
        (1..=7).map(FamilyId::ZetaPrime)
    }

    pub fn etas() -> impl Iterator<Item = FamilyId> {
        (1..=13).map(FamilyId::Eta)
    }

    pub fn all() -> Vec<FamilyId> {
        let mut v: Vec<_> = Self::zetas()
            .chain(Self::zeta_primes())
            .chain(Self::etas())
            .collect();
        v.extend([FamilyId::Burau, FamilyId::Lkb]);
        v
    }

    pub fn structure(self) -> Structure {
        match self {
            FamilyId::Zeta(_) | FamilyId::ZetaPrime(_) => Structure::TVB,
            FamilyId::Eta(_) => Structure::STVB,
            FamilyId::Burau | FamilyId::Lkb => Structure::B,
        }
    }

    pub fn is_local(self) -> bool {
        !matches!(self, FamilyId::Burau | FamilyId::Lkb)
    }

    /// Parameter names in their conventional order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::Zeta(1) => &["b", "d", "x"],
            FamilyId::Zeta(2) => &["b", "d", "w", "x"],
            FamilyId::Zeta(3 | 4) => &["a", "b", "c", "d"],
            FamilyId::Zeta(5 | 6) => &["a", "c", "d"],
            FamilyId::Zeta(7 | 8) => &["d", "y"],
            FamilyId::ZetaPrime(1..=4) => &["c", "s"],
            FamilyId::ZetaPrime(5 | 6) => &["x"],
            FamilyId::Eta(1) => &["a", "b", "x", "f", "g"],
            FamilyId::Eta(2) => &["a", "b", "x", "z", "f", "g"],
            FamilyId::Eta(3 | 4) => &["a", "b", "c", "d", "f", "g"],
            FamilyId::Eta(5 | 9) => &["a", "f", "g", "h", "k"],
            FamilyId::Eta(6 | 10) => &["a", "c", "d", "f", "h"],
            FamilyId::Eta(7 | 8) => &["a", "c", "y", "f", "h"],
            FamilyId::Eta(11..=13) => &["a", "d", "f", "k"],
            _ => &[],
        }
    }

    /// Checks the strand count the family is defined for.
    pub fn check_strands(self, n: usize) -> Result<(), RepError> {
        let ok = match self {
            FamilyId::Zeta(_) | FamilyId::Eta(_) => n == 2,
            FamilyId::ZetaPrime(_) | FamilyId::Lkb => n >= 3,
            FamilyId::Burau => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(RepError::InvalidParams(format!(
                "{self} is not defined for n = {n}"
            )))
        }
    }

    fn valid(self) -> bool {
        match self {
            FamilyId::Zeta(i) => (1..=8).contains(&i),
            FamilyId::ZetaPrime(i) => (1..=7).contains(&i),
            FamilyId::Eta(i) => (1..=13).contains(&i),
            _ => true,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Zeta(i) => write!(f, "zeta{i}"),
            FamilyId::ZetaPrime(i) => write!(f, "zetap{i}"),
            FamilyId::Eta(i) => write!(f, "eta{i}"),
            FamilyId::Burau => f.write_str("burau"),
            FamilyId::Lkb => f.write_str("lkb"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, RepError> {
        let num = |rest: &str| rest.parse::<u8>().ok();
        let id = match s {
            "burau" => Some(FamilyId::Burau),
            "lkb" => Some(FamilyId::Lkb),
            _ => {
                if let Some(r) = s.strip_prefix("zetap") {
                    num(r).map(FamilyId::ZetaPrime)
                } else if let Some(r) = s.strip_prefix("zeta") {
                    num(r).map(FamilyId::Zeta)
                } else if let Some(r) = s.strip_prefix("eta") {
                    num(r).map(FamilyId::Eta)
                } else {
                    None
                }
            }
        };
        id.filter(|f| f.valid())
            .ok_or_else(|| RepError::InvalidParams(format!("unknown family {s:?}")))
    }
}

/// 2x2 blocks of a homogeneous local representation: `sigma_i`, `rho_i` and
/// `tau_i` act by their block on coordinates `i, i+1`, `gamma_j` on `j, j+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalBlocks<T: Ring> {
    pub sigma: Matrix<T>,
    pub rho: Matrix<T>,
    pub gamma: Matrix<T>,
    pub tau: Option<Matrix<T>>,
}

/// Assembles the `(n+1)`-dimensional local representation from its blocks.
pub fn local_representation<T: Ring>(
    structure: Structure,
    n: usize,
    blocks: &LocalBlocks<T>,
) -> Result<Representation<T>, RepError> {
    let total = n + 1;
    let mut images = BTreeMap::new();
    for fam in structure.families() {
        for i in 1..=fam.max_index(n) {
            let block = match fam {
                crate::presentation::Family::Sigma => &blocks.sigma,
                crate::presentation::Family::Rho => &blocks.rho,
                crate::presentation::Family::Gamma => &blocks.gamma,
                _ => blocks.tau.as_ref().ok_or_else(|| {
                    RepError::InvalidParams(format!("no block for {fam} generators"))
                })?,
            };
            images.insert(Generator::new(fam, i), block.block_embed(i, total)?);
        }
    }
    Representation::new(structure, n, images)
}

/// A family together with values for its parameters.
#[derive(Clone, Debug)]
pub struct FamilyParams<F: Field> {
    pub family: FamilyId,
    pub n: usize,
    pub bindings: BTreeMap<String, F>,
    pub ctx: F::Ctx,
}

struct Env<'a, F: Field> {
    p: &'a BTreeMap<String, F>,
    ctx: &'a F::Ctx,
}

impl<F: Field> Env<'_, F> {
    fn v(&self, name: &str) -> F {
        self.p[name].clone()
    }
    fn k(&self, i: i64) -> F {
        F::from_int(i, self.ctx)
    }
    fn m(&self, a: F, b: F, c: F, d: F) -> Matrix<F> {
        Matrix::from_rows_in(vec![vec![a, b], vec![c, d]], self.ctx.clone())
    }
    fn diag(&self, a: i64, d: i64) -> Matrix<F> {
        self.m(self.k(a), self.k(0), self.k(0), self.k(d))
    }
    fn scalar(&self, a: F) -> Matrix<F> {
        self.m(a.clone(), self.k(0), self.k(0), a)
    }
}

impl<F: Field> FamilyParams<F> {
    /// Validates parameter names, strand count and the family's domain conditions.
    pub fn new(
        family: FamilyId,
        n: usize,
        bindings: BTreeMap<String, F>,
        ctx: F::Ctx,
    ) -> Result<Self, RepError> {
        if !family.is_local() {
            return Err(RepError::InvalidParams(format!(
                "{family} has no parameters"
            )));
        }
        family.check_strands(n)?;
        let names = family.param_names();
        if let Some(missing) = names.iter().find(|p| !bindings.contains_key(**p)) {
            return Err(RepError::InvalidParams(format!(
                "{family}: missing parameter {missing}"
            )));
        }
        if let Some(extra) = bindings.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(RepError::InvalidParams(format!(
                "{family}: unknown parameter {extra}"
            )));
        }
        let fp = FamilyParams {
            family,
            n,
            bindings,
            ctx,
        };
        if let Some(violated) = fp.conditions().into_iter().find(|(_, ok)| !ok) {
            return Err(RepError::Constraint {
                family: family.to_string(),
                condition: violated.0,
            });
        }
        Ok(fp)
    }

    pub fn get(&self, name: &str) -> Option<&F> {
        self.bindings.get(name)
    }

    /// The domain conditions, in evaluation order, with whether each holds.
    /// Later conditions are only evaluated when earlier ones hold.
    pub fn conditions(&self) -> Vec<(String, bool)> {
        let e = Env {
            p: &self.bindings,
            ctx: &self.ctx,
        };
        let nz = |s: &str, v: F| (s.to_string(), !v.is_zero());
        let mut out = Vec::new();
        let mut push = |c: (String, bool)| {
            let ok = c.1;
            out.push(c);
            ok
        };
        let v = |n: &str| e.v(n);
        match self.family {
            FamilyId::Zeta(1) => {
                let _ = push(nz("x != 0", v("x")))
                    && push(nz(
                        "b^2-d^2*x^2 != 0",
                        v("b") * v("b") - v("d") * v("d") * v("x") * v("x"),
                    ));
            }
            FamilyId::Zeta(2) => {
                if push(nz("x != 0", v("x"))) {
                    let (b, d, w, x) = (v("b"), v("d"), v("w"), v("x"));
                    let dx = d.clone() * &x;
                    let bw = b.clone() * &w;
                    let stated = !d.is_zero() || (dx != b.clone() - &bw && dx != -b.clone() - &bw);
                    let _ = push(("d != 0 or d*x != ±b-b*w".to_string(), stated))
                        && push(nz(
                            "det(sigma_1 block) = (d*x+b*w-b)(d*x+b*w+b)/x^2 != 0",
                            (dx.clone() + &bw - &b) * (dx + &bw + &b),
                        ));
                }
            }
            FamilyId::Zeta(3 | 4) | FamilyId::Eta(3 | 4) => {
                let ok = push(nz("a*d-b*c != 0", v("a") * v("d") - v("b") * v("c")));
                if ok && matches!(self.family, FamilyId::Eta(_)) {
                    push(nz("b != 0", v("b")));
                }
            }
            FamilyId::Zeta(5 | 6) => {
                let _ =
                    push(nz("a*d != 0", v("a") * v("d"))) && push(nz("a != d", v("a") - v("d")));
            }
            FamilyId::Zeta(7 | 8) => {
                push(nz("d != 0", v("d")));
            }
            FamilyId::ZetaPrime(1..=4) => {
                let _ = push(nz("c != 0", v("c"))) && push(nz("s != 0", v("s")));
            }
            FamilyId::ZetaPrime(5 | 6) => {
                push(nz("x != 0", v("x")));
            }
            FamilyId::Eta(1) => {
                let _ = push(nz("x != 0", v("x")))
                    && push(nz(
                        "a^2*x^2-b^2 != 0",
                        v("a") * v("a") * v("x") * v("x") - v("b") * v("b"),
                    ));
            }
            FamilyId::Eta(2) => {
                let (a, b, x, z) = (v("a"), v("b"), v("x"), v("z"));
                let _ = push(nz("x != 0", x.clone()))
                    && push(nz(
                        "a^2*x^2+2*a*b*x*z-b^2+b^2*z^2 != 0",
                        a.clone() * &a * &x * &x + e.k(2) * &a * &b * &x * &z - b.clone() * &b
                            + b.clone() * &b * &z * &z,
                    ));
            }
            FamilyId::Eta(5 | 9) => {
                push(nz("a != 0", v("a")));
            }
            FamilyId::Eta(6 | 10) => {
                let _ = push(nz("a*d != 0", v("a") * v("d"))) && push(nz("c != 0", v("c")));
            }
            FamilyId::Eta(7) => {
                let _ = push(nz("y != 0", v("y")))
                    && push(nz(
                        "a*(-2*c+a*y) != 0",
                        v("a") * (v("a") * v("y") - e.k(2) * v("c")),
                    ));
            }
            FamilyId::Eta(8) => {
                let _ = push(nz("y != 0", v("y")))
                    && push(nz(
                        "a*(2*c+a*y) != 0",
                        v("a") * (v("a") * v("y") + e.k(2) * v("c")),
                    ));
            }
            FamilyId::Eta(11..=13) => {
                push(nz("a*d != 0", v("a") * v("d")));
            }
            _ => {}
        }
        out
    }

    /// The 2x2 blocks exactly as displayed for the family.
    pub fn blocks(&self) -> LocalBlocks<F> {
        let e = Env {
            p: &self.bindings,
            ctx: &self.ctx,
        };
        let v = |n: &str| e.v(n);
        let k = |i: i64| e.k(i);
        let one = || k(1);
        let zero = || k(0);
        let id = || e.diag(1, 1);
        let neg_id = || e.diag(-1, -1);
        let flip = || e.diag(-1, 1);
        let (sigma, rho, gamma, tau) = match self.family {
            FamilyId::Zeta(1) => {
                let (b, d, x) = (v("b"), v("d"), v("x"));
                let x2 = x.clone() * &x;
                (
                    e.m(d.clone(), b.clone(), b / &x2, d),
                    e.m(zero(), x.clone(), x.inv(), zero()),
                    flip(),
                    None,
                )
            }
            FamilyId::Zeta(2) => {
                let (b, d, w, x) = (v("b"), v("d"), v("w"), v("x"));
                let x2 = x.clone() * &x;
                (
                    e.m(
                        (k(2) * &b * &w + d.clone() * &x) / &x,
                        b.clone(),
                        (b.clone() - b.clone() * &w * &w) / &x2,
                        d,
                    ),
                    e.m(w.clone(), x.clone(), (one() - w.clone() * &w) / &x, -w),
                    id(),
                    None,
                )
            }
            FamilyId::Zeta(i @ (3 | 4)) => (
                e.m(v("a"), v("b"), v("c"), v("d")),
                if i == 3 { neg_id() } else { id() },
                id(),
                None,
            ),
            FamilyId::Zeta(5) => {
                let (a, c, d) = (v("a"), v("c"), v("d"));
                let entry = k(2) * &c / (d.clone() - &a);
                (
                    e.m(a, zero(), c, d),
                    e.m(k(-1), zero(), entry, one()),
                    id(),
                    None,
                )
            }
            FamilyId::Zeta(6) => {
                let (a, c, d) = (v("a"), v("c"), v("d"));
                let entry = k(2) * &c / (a.clone() - &d);
                (
                    e.m(a, zero(), c, d),
                    e.m(one(), zero(), entry, k(-1)),
                    id(),
                    None,
                )
            }
            FamilyId::Zeta(i @ (7 | 8)) => {
                let y = v("y");
                let rho = if i == 7 {
                    e.m(one(), zero(), y, k(-1))
                } else {
                    e.m(k(-1), zero(), y, one())
                };
                (e.scalar(v("d")), rho, id(), None)
            }
            FamilyId::ZetaPrime(i @ 1..=4) => {
                let (c, s) = (v("c"), v("s"));
                let b = s.clone() * &s * &c;
                let sign = if i % 2 == 1 { k(-1) } else { one() };
                let rho = e.m(zero(), sign.clone() * &s, sign * &s.inv(), zero());
                (
                    e.m(zero(), b, c, zero()),
                    rho,
                    if i <= 2 { flip() } else { id() },
                    None,
                )
            }
            FamilyId::ZetaPrime(i @ (5 | 6)) => {
                let x = v("x");
                (
                    id(),
                    e.m(zero(), x.clone(), x.inv(), zero()),
                    if i == 5 { flip() } else { id() },
                    None,
                )
            }
            FamilyId::ZetaPrime(_) => (id(), id(), id(), None),
            FamilyId::Eta(1) => {
                let (a, b, x, f, g) = (v("a"), v("b"), v("x"), v("f"), v("g"));
                let x2 = x.clone() * &x;
                (
                    e.m(a.clone(), b.clone(), b / &x2, a),
                    e.m(zero(), x.clone(), x.inv(), zero()),
                    flip(),
                    Some(e.m(f.clone(), g.clone(), g / &x2, f)),
                )
            }
            FamilyId::Eta(2) => {
                let (a, b, x, z, f, g) = (v("a"), v("b"), v("x"), v("z"), v("f"), v("g"));
                let x2 = x.clone() * &x;
                let z2 = z.clone() * &z;
                (
                    e.m(
                        a.clone(),
                        b.clone(),
                        (b.clone() - b.clone() * &z2) / &x2,
                        (a * &x + k(2) * &b * &z) / &x,
                    ),
                    e.m(-z.clone(), x.clone(), (one() - z2.clone()) / &x, z.clone()),
                    id(),
                    Some(e.m(
                        f.clone(),
                        g.clone(),
                        (g.clone() - g.clone() * &z2) / &x2,
                        (f * &x + k(2) * &g * &z) / &x,
                    )),
                )
            }
            FamilyId::Eta(i @ (3 | 4)) => {
                let (a, b, c, d, f, g) = (v("a"), v("b"), v("c"), v("d"), v("f"), v("g"));
                let t21 = c.clone() * &g / &b;
                let t22 = (b.clone() * &f - a.clone() * &g + d.clone() * &g) / &b;
                (
                    e.m(a, b, c, d),
                    if i == 3 { neg_id() } else { id() },
                    id(),
                    Some(e.m(f, g, t21, t22)),
                )
            }
            FamilyId::Eta(i @ (5 | 9)) => (
                e.scalar(v("a")),
                if i == 5 { neg_id() } else { id() },
                id(),
                Some(e.m(v("f"), v("g"), v("h"), v("k"))),
            ),
            FamilyId::Eta(i @ (6 | 10)) => {
                let (a, c, d, f, h) = (v("a"), v("c"), v("d"), v("f"), v("h"));
                let t22 = (c.clone() * &f - a.clone() * &h + d.clone() * &h) / &c;
                (
                    e.m(a, zero(), c, d),
                    if i == 6 { neg_id() } else { id() },
                    id(),
                    Some(e.m(f, zero(), h, t22)),
                )
            }
            FamilyId::Eta(i @ (7 | 8)) => {
                let (a, c, y, f, h) = (v("a"), v("c"), v("y"), v("f"), v("h"));
                let sgn = if i == 7 { k(-2) } else { k(2) };
                let s22 = (sgn.clone() * &c + a.clone() * &y) / &y;
                let t22 = (sgn * &h + f.clone() * &y) / &y;
                let rho = if i == 7 {
                    e.m(one(), zero(), y.clone(), k(-1))
                } else {
                    e.m(k(-1), zero(), y.clone(), one())
                };
                (
                    e.m(a, zero(), c, s22),
                    rho,
                    id(),
                    Some(e.m(f, zero(), h, t22)),
                )
            }
            FamilyId::Eta(i @ 11..=13) => {
                let rho = match i {
                    11 => e.diag(1, -1),
                    12 => e.diag(-1, 1),
                    _ => id(),
                };
                (
                    e.m(v("a"), zero(), zero(), v("d")),
                    rho,
                    id(),
                    Some(e.m(v("f"), zero(), zero(), v("k"))),
                )
            }
            FamilyId::Zeta(_) | FamilyId::Eta(_) | FamilyId::Burau | FamilyId::Lkb => {
                unreachable!("validated in FamilyParams::new")
            }
        };
        LocalBlocks {
            sigma,
            rho,
            gamma,
            tau,
        }
    }

    pub fn build(&self) -> Result<Representation<F>, RepError> {
        local_representation(self.family.structure(), self.n, &self.blocks())
    }
}
