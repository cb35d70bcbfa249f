//! Generators, words and defining relations of the braid-like structures.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("presentations need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("no inverse in monoid: {0}")]
    NoInverse(String),
    #[error("generator {0} is not part of this presentation")]
    UnknownGenerator(String),
    #[error("cannot parse {text:?}: {message}")]
    Parse { text: String, message: String },
}

/// Generator families, in the order they appear in presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Sigma,
    Rho,
    Gamma,
    Tau,
    TauBar,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Sigma,
        Family::Rho,
        Family::Gamma,
        Family::Tau,
        Family::TauBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sigma => "sigma",
            Family::Rho => "rho",
            Family::Gamma => "gamma",
            Family::Tau => "tau",
            Family::TauBar => "tau_bar",
        }
    }

    /// Largest index for `n` strands.
    pub fn max_index(self, n: usize) -> usize {
        if self == Family::Gamma {
            n
        } else {
            n - 1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| PresentationError::Parse {
                text: s.to_string(),
                message: "unknown generator family".into(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: usize,
}

impl Generator {
    pub fn new(family: Family, index: usize) -> Self {
        Generator { family, index }
    }
    pub fn sigma(i: usize) -> Self {
        Self::new(Family::Sigma, i)
    }
    pub fn rho(i: usize) -> Self {
        Self::new(Family::Rho, i)
    }
    pub fn gamma(i: usize) -> Self {
        Self::new(Family::Gamma, i)
    }
    pub fn tau(i: usize) -> Self {
        Self::new(Family::Tau, i)
    }
    pub fn tau_bar(i: usize) -> Self {
        Self::new(Family::TauBar, i)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.index)
    }
}

impl FromStr for Generator {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| PresentationError::Parse {
            text: s.to_string(),
            message: m.into(),
        };
        let (fam, idx) = s
            .split_once(':')
            .ok_or_else(|| bad("expected family:index"))?;
        let index: usize = idx.parse().map_err(|_| bad("invalid index"))?;
        if index == 0 {
            return Err(bad("indices start at 1"));
        }
        Ok(Generator {
            family: fam.parse()?,
            index,
        })
    }
}

/// A generator raised to +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn exponent(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.gen, self.exponent())
    }
}

impl FromStr for Letter {
    type Err = PresentationError;
    /// Accepts `sigma:1`, `sigma:1^1` and `sigma:1^-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (g, inverse) = match s.split_once('^') {
            None => (s, false),
            Some((g, "1")) => (g, false),
            Some((g, "-1")) => (g, true),
            Some(_) => {
                return Err(PresentationError::Parse {
                    text: s.to_string(),
                    message: "exponent must be 1 or -1".into(),
                })
            }
        };
        Ok(Letter {
            gen: g.parse()?,
            inverse,
        })
    }
}

/// A product of letters, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Word made of positive powers of the given generators.
    pub fn of(gens: &[Generator]) -> Self {
        Word(
            gens.iter()
                .map(|&gen| Letter {
                    gen,
                    inverse: false,
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Cancels adjacent `g g^-1` and `g^-1 g` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(prev) if prev.gen == l.gen && prev.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    /// Reversed word with flipped exponents; fails on generators of a
    /// monoid family.
    pub fn invert(&self, monoid_families: &BTreeSet<Family>) -> Result<Word, PresentationError> {
        if let Some(l) = self
            .0
            .iter()
            .find(|l| monoid_families.contains(&l.gen.family))
        {
            return Err(PresentationError::NoInverse(l.to_string()));
        }
        Ok(Word(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    inverse: !l.inverse,
                })
                .collect(),
        ))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|l| l.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(letters: &[S]) -> Result<Word, PresentationError> {
        letters
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.to_strings();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = PresentationError;
    /// Letters separated by whitespace or commas; `e` or the empty string is
    /// the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::empty());
        }
        let parts: Vec<&str> = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        Word::from_strings(&parts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    B,
    VB,
    TVB,
    SM,
    SB,
    STVB,
    STVG,
}

impl Structure {
    pub const ALL: [Structure; 7] = [
        Structure::B,
        Structure::VB,
        Structure::TVB,
        Structure::SM,
        Structure::SB,
        Structure::STVB,
        Structure::STVG,
    ];

    pub fn families(self) -> Vec<Family> {
        use Family::*;
        match self {
            Structure::B => vec![Sigma],
            Structure::VB => vec![Sigma, Rho],
            Structure::TVB => vec![Sigma, Rho, Gamma],
            Structure::SM => vec![Sigma, Tau],
            Structure::SB => vec![Sigma, Tau, TauBar],
            Structure::STVB => vec![Sigma, Rho, Gamma, Tau],
            Structure::STVG => vec![Sigma, Rho, Gamma, Tau, TauBar],
        }
    }

    /// Families whose generators have no inverse.
    pub fn monoid_families(self) -> BTreeSet<Family> {
        match self {
            Structure::SM | Structure::STVB => BTreeSet::from([Family::Tau]),
            _ => BTreeSet::new(),
        }
    }

    pub fn is_group(self) -> bool {
        self.monoid_families().is_empty()
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Structure::B => "B",
            Structure::VB => "VB",
            Structure::TVB => "TVB",
            Structure::SM => "SM",
            Structure::SB => "SB",
            Structure::STVB => "STVB",
            Structure::STVG => "STVG",
        };
        f.write_str(s)
    }
}

impl FromStr for Structure {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Structure::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| PresentationError::Parse {
                text: s.to_string(),
                message: "unknown structure".into(),
            })
    }
}

/// A defining relation `lhs = rhs`, tagged with the name of its schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub tag: String,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub structure: Structure,
    pub n: usize,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub monoid_families: BTreeSet<Family>,
}

impl Presentation {
    pub fn has_generator(&self, g: &Generator) -> bool {
        self.generators.contains(g)
    }

    /// Checks that a word uses declared generators and respects monoid rules.
    pub fn validate_word(&self, w: &Word) -> Result<(), PresentationError> {
        for l in &w.0 {
            if !self.has_generator(&l.gen) {
                return Err(PresentationError::UnknownGenerator(l.gen.to_string()));
            }
            if l.inverse && self.monoid_families.contains(&l.gen.family) {
                return Err(PresentationError::NoInverse(l.gen.to_string()));
            }
        }
        Ok(())
    }

    /// Reads a presentation file: the structure and strand count fix the
    /// generators, and the relations are taken from the file.
    pub fn from_json(json: &PresentationJson) -> Result<Self, PresentationError> {
        let structure: Structure = json.structure.parse()?;
        let mut p = build_presentation(structure, json.n)?;
        let declared: Vec<String> = p.generators.iter().map(|g| g.to_string()).collect();
        if declared != json.generators {
            return Err(PresentationError::Parse {
                text: json.generators.join(" "),
                message: format!(
                    "generators of {structure} on {} strands are {}",
                    json.n,
                    declared.join(" ")
                ),
            });
        }
        let mut relations = Vec::with_capacity(json.relations.len());
        for r in &json.relations {
            let rel = Relation {
                tag: r.tag.clone(),
                lhs: Word::from_strings(&r.lhs)?,
                rhs: Word::from_strings(&r.rhs)?,
            };
            p.validate_word(&rel.lhs)?;
            p.validate_word(&rel.rhs)?;
            relations.push(rel);
        }
        p.relations = relations;
        Ok(p)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            structure: self.structure.to_string(),
            n: self.n,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    tag: r.tag.clone(),
                    lhs: r.lhs.to_strings(),
                    rhs: r.rhs.to_strings(),
                })
                .collect(),
            monoid_families: self.monoid_families.iter().map(|f| f.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub tag: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub structure: String,
    pub n: usize,
    pub generators: Vec<String>,
    pub relations: Vec<RelationJson>,
    pub monoid_families: Vec<String>,
}

struct Builder {
    n: usize,
    relations: Vec<Relation>,
}

type G = fn(usize) -> Generator;

impl Builder {
    fn push(&mut self, tag: &str, lhs: &[Generator], rhs: &[Generator]) {
        self.relations.push(Relation {
            tag: tag.into(),
            lhs: Word::of(lhs),
            rhs: Word::of(rhs),
        });
    }

    fn range(&self, f: G) -> std::ops::RangeInclusive<usize> {
        1..=f(1).family.max_index(self.n)
    }

    /// `x_i y_j = y_j x_i` for `|i-j| >= 2`; unordered pairs when `x == y`.
    fn far_commute(&mut self, tag: &str, x: G, y: G) {
        let same = x(1).family == y(1).family;
        for i in self.range(x) {
            for j in self.range(y) {
                if i.abs_diff(j) >= 2 && (!same || i < j) {
                    self.push(tag, &[x(i), y(j)], &[y(j), x(i)]);
                }
            }
        }
    }

    /// Relations indexed by `i = 1..=n-2`.
    fn adjacent(&mut self, tag: &str, f: impl Fn(usize) -> (Vec<Generator>, Vec<Generator>)) {
        for i in 1..self.n.saturating_sub(1) {
            let (l, r) = f(i);
            self.push(tag, &l, &r);
        }
    }

    fn each(
        &mut self,
        tag: &str,
        upto: usize,
        f: impl Fn(usize) -> (Vec<Generator>, Vec<Generator>),
    ) {
        for i in 1..=upto {
            let (l, r) = f(i);
            self.push(tag, &l, &r);
        }
    }

    fn braid(&mut self) {
        use Generator as g;
        self.adjacent("sigma-braid", |i| {
            (
                vec![g::sigma(i), g::sigma(i + 1), g::sigma(i)],
                vec![g::sigma(i + 1), g::sigma(i), g::sigma(i + 1)],
            )
        });
        self.far_commute("sigma-far-commute", g::sigma, g::sigma);
    }

    fn virtual_rel(&mut self) {
        use Generator as g;
        let m = self.n - 1;
        self.each("rho-involution", m, |i| {
            (vec![g::rho(i), g::rho(i)], vec![])
        });
        self.far_commute("rho-far-commute", g::rho, g::rho);
        self.adjacent("rho-braid", |i| {
            (
                vec![g::rho(i), g::rho(i + 1), g::rho(i)],
                vec![g::rho(i + 1), g::rho(i), g::rho(i + 1)],
            )
        });
        self.far_commute("sigma-rho-far-commute", g::sigma, g::rho);
        self.adjacent("rho-sigma-mixed-braid", |i| {
            (
                vec![g::rho(i), g::rho(i + 1), g::sigma(i)],
                vec![g::sigma(i + 1), g::rho(i), g::rho(i + 1)],
            )
        });
    }

    fn twisted(&mut self) {
        use Generator as g;
        let n = self.n;
        self.each("gamma-involution", n, |i| {
            (vec![g::gamma(i), g::gamma(i)], vec![])
        });
        self.far_commute_all("gamma-commute", g::gamma);
        self.far_commute("gamma-rho-far-commute", g::gamma, g::rho);
        self.far_commute("gamma-sigma-far-commute", g::gamma, g::sigma);
        self.each("rho-gamma-swap", n - 1, |i| {
            (
                vec![g::rho(i), g::gamma(i)],
                vec![g::gamma(i + 1), g::rho(i)],
            )
        });
        self.each("rho-sigma-twist", n - 1, |i| {
            (
                vec![g::rho(i), g::sigma(i), g::rho(i)],
                vec![
                    g::gamma(i + 1),
                    g::gamma(i),
                    g::sigma(i),
                    g::gamma(i),
                    g::gamma(i + 1),
                ],
            )
        });
    }

    /// `x_i x_j = x_j x_i` for all `i < j`.
    fn far_commute_all(&mut self, tag: &str, x: G) {
        for i in self.range(x) {
            for j in self.range(x) {
                if i < j {
                    self.push(tag, &[x(i), x(j)], &[x(j), x(i)]);
                }
            }
        }
    }

    fn singular(&mut self, t: G, suffix: &str) {
        use Generator as g;
        let tag = |base: &str| format!("{base}{suffix}");
        self.far_commute(&tag("tau-far-commute"), t, t);
        self.far_commute(&tag("tau-sigma-far-commute"), t, g::sigma);
        self.each(&tag("tau-sigma-commute"), self.n - 1, |i| {
            (vec![t(i), g::sigma(i)], vec![g::sigma(i), t(i)])
        });
        self.adjacent(&tag("tau-slide-up"), |i| {
            (
                vec![g::sigma(i), g::sigma(i + 1), t(i)],
                vec![t(i + 1), g::sigma(i), g::sigma(i + 1)],
            )
        });
        self.adjacent(&tag("tau-slide-down"), |i| {
            (
                vec![g::sigma(i + 1), g::sigma(i), t(i + 1)],
                vec![t(i), g::sigma(i + 1), g::sigma(i)],
            )
        });
    }

    fn singular_twisted(&mut self, t: G, suffix: &str) {
        use Generator as g;
        let tag = |base: &str| format!("{base}{suffix}");
        self.far_commute(&tag("tau-rho-far-commute"), t, g::rho);
        self.adjacent(&tag("rho-tau-mixed-braid"), |i| {
            (
                vec![g::rho(i), t(i + 1), g::rho(i)],
                vec![g::rho(i + 1), t(i), g::rho(i + 1)],
            )
        });
        self.far_commute(&tag("tau-gamma-far-commute"), t, g::gamma);
        self.each(&tag("rho-tau-twist"), self.n - 1, |i| {
            (
                vec![g::rho(i), t(i), g::rho(i)],
                vec![
                    g::gamma(i + 1),
                    g::gamma(i),
                    t(i),
                    g::gamma(i),
                    g::gamma(i + 1),
                ],
            )
        });
    }

    fn tau_inverses(&mut self) {
        use Generator as g;
        self.each("tau-bar-inverse", self.n - 1, |i| {
            (vec![g::tau(i), g::tau_bar(i)], vec![])
        });
        self.each("tau-bar-inverse", self.n - 1, |i| {
            (vec![g::tau_bar(i), g::tau(i)], vec![])
        });
    }
}

/// Generators and the complete defining relation list of `structure` on `n`
/// strands. Each relation carries the name of its schema; copies with
/// `tau_bar` substituted for `tau` carry the name suffixed with `-bar`.
pub fn build_presentation(
    structure: Structure,
    n: usize,
) -> Result<Presentation, PresentationError> {
    if n < 2 {
        return Err(PresentationError::TooFewStrands(n));
    }
    let generators = structure
        .families()
        .into_iter()
        .flat_map(|f| (1..=f.max_index(n)).map(move |i| Generator::new(f, i)))
        .collect();
    let mut b = Builder {
        n,
        relations: Vec::new(),
    };
    b.braid();
    use Structure::*;
    if matches!(structure, VB | TVB | STVB | STVG) {
        b.virtual_rel();
    }
    if matches!(structure, TVB | STVB | STVG) {
        b.twisted();
    }
    if matches!(structure, SM | SB | STVB | STVG) {
        b.singular(Generator::tau, "");
    }
    if matches!(structure, STVB | STVG) {
        b.singular_twisted(Generator::tau, "");
    }
    if matches!(structure, SB | STVG) {
        b.singular(Generator::tau_bar, "-bar");
    }
    if structure == STVG {
        b.singular_twisted(Generator::tau_bar, "-bar");
    }
    if matches!(structure, SB | STVG) {
        b.tau_inverses();
    }
    if structure == STVG {
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) >= 2 {
                    b.push(
                        "tau-tau_bar-far-commute",
                        &[Generator::tau(j), Generator::tau_bar(i)],
                        &[Generator::tau_bar(i), Generator::tau(j)],
                    );
                }
            }
        }
    }
    Ok(Presentation {
        structure,
        n,
        generators,
        relations: b.relations,
        monoid_families: structure.monoid_families(),
    })
}
