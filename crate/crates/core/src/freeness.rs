//! Triangular automorphisms `x1 ↦ x1 + n(a0 + a1 x2)`,
//! `x2 ↦ x2 + m(b0 + b1 x1)` with coefficients in the subalgebra `R`
//! generated by `x3..xn`, and words in them.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraError, AlgebraMap, Element, PbwAlgebra};
use crate::autgroup::AffineAuto;
use crate::expr::{parse_scalar, ExprError};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreenessError {
    #[error("not an automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("{0} is not in R + R x1 + R x2")]
    NotInModule(String),
    #[error("leading coefficient mismatch: expected {expected}, found {found}")]
    LeadingMismatch { expected: String, found: String },
    #[error("word syntax error at column {column}: {message}")]
    WordSyntax { column: usize, message: String },
    #[error("tau expansion needs a word g^n_z h^m_(z-1) ... g^n_1")]
    NotATauWord,
    #[error("need at least 3 generators, found {0}")]
    TooFewGenerators(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Something that acts on `V_n(A)` by substituting generator images.
pub trait Automorphism {
    fn algebra_map<A: PbwAlgebra + ?Sized>(&self, alg: &A) -> AlgebraMap;

    fn is_valid_for<A: PbwAlgebra + ?Sized>(&self, alg: &A) -> bool {
        self.algebra_map(alg).is_valid(alg).unwrap_or(false)
    }
}

impl Automorphism for AffineAuto {
    fn algebra_map<A: PbwAlgebra + ?Sized>(&self, _alg: &A) -> AlgebraMap {
        self.to_map()
    }
}

/// `x_moved ↦ x_moved + exponent * (a0 + a1 * x_partner)`, other
/// generators fixed. `moved` is 0 for `x1` and 1 for `x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryAuto {
    pub moved: usize,
    pub a0: Element,
    pub a1: Element,
    pub exponent: Scalar,
}

impl ElementaryAuto {
    pub fn new(moved: usize, a0: Element, a1: Element) -> Self {
        assert!(moved < 2, "only x1 or x2 can be moved");
        ElementaryAuto {
            moved,
            a0,
            a1,
            exponent: Scalar::one(),
        }
    }

    pub fn partner(&self) -> usize {
        1 - self.moved
    }

    /// `self^e`, defined for any scalar `e`.
    pub fn pow(&self, e: &Scalar) -> ElementaryAuto {
        ElementaryAuto {
            exponent: &self.exponent * e,
            ..self.clone()
        }
    }

    /// True when `a0` and `a1` avoid `x1` and `x2`.
    pub fn coefficients_in_r(&self) -> bool {
        in_r(&self.a0) && in_r(&self.a1)
    }

    fn moved_image<A: PbwAlgebra + ?Sized>(&self, pres: &A) -> Element {
        let n = pres.ngens();
        let shift = &self.a0 + &pres.mul(&self.a1, &Element::var(n, self.partner()));
        &Element::var(n, self.moved) + &shift.scale(&self.exponent)
    }
}

fn in_r(u: &Element) -> bool {
    u.iter().all(|(m, _)| m.0.iter().take(2).all(|&e| e == 0))
}

impl Automorphism for ElementaryAuto {
    fn algebra_map<A: PbwAlgebra + ?Sized>(&self, pres: &A) -> AlgebraMap {
        elementary_map(self, pres)
    }

    fn is_valid_for<A: PbwAlgebra + ?Sized>(&self, pres: &A) -> bool {
        self.coefficients_in_r() && elementary_map(self, pres).is_valid(pres).unwrap_or(false)
    }
}

/// Generator images of `e` in `pres`.
pub fn elementary_map<A: PbwAlgebra + ?Sized>(e: &ElementaryAuto, pres: &A) -> AlgebraMap {
    let n = pres.ngens();
    let mut images: Vec<Element> = (0..n).map(|i| Element::var(n, i)).collect();
    images[e.moved] = e.moved_image(pres);
    AlgebraMap::new(images)
}

impl fmt::Display for ElementaryAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, p) = (self.moved + 1, self.partner() + 1);
        let wrap = |u: &Element| {
            if u.len() > 1 {
                format!("({u})")
            } else {
                u.to_string()
            }
        };
        let mut shift = Vec::new();
        if !self.a0.is_zero() {
            shift.push(self.a0.to_string());
        }
        if !self.a1.is_zero() {
            shift.push(if self.a1.as_constant().is_some_and(|c| c.is_one()) {
                format!("x{p}")
            } else {
                format!("{}*x{p}", wrap(&self.a1))
            });
        }
        let shift = match shift.len() {
            0 => "0".to_string(),
            1 => shift.pop().unwrap(),
            _ => match shift[1].strip_prefix('-') {
                Some(rest) => format!("({} - {rest})", shift[0]),
                None => format!("({} + {})", shift[0], shift[1]),
            },
        };
        write!(f, "x{i} -> x{i} + ")?;
        if !self.exponent.is_one() {
            let e = self.exponent.to_string();
            if e.contains(['+', ' ']) || e.starts_with('-') {
                write!(f, "({e})*")?;
            } else {
                write!(f, "{e}*")?;
            }
        }
        write!(f, "{shift}")
    }
}

/// True iff `e` preserves every defining relation of `pres` and its
/// coefficients lie in `R`.
pub fn validate_elementary<A: PbwAlgebra + ?Sized>(e: &ElementaryAuto, pres: &A) -> bool {
    e.is_valid_for(pres)
}

/// Applies a valid automorphism to `u`.
pub fn apply_auto<T: Automorphism + fmt::Display, A: PbwAlgebra + ?Sized>(
    e: &T,
    u: &Element,
    pres: &A,
) -> Result<Element, FreenessError> {
    if !e.is_valid_for(pres) {
        return Err(FreenessError::InvalidAutomorphism(e.to_string()));
    }
    Ok(e.algebra_map(pres).apply(pres, u))
}

/// Writes `u = d0 + Σ_k d_k x_{heads[k]}` with every `d` in `R`.
/// `heads` are 0-based indices among `{0, 1}`.
pub fn left_r_decompose<A: PbwAlgebra + ?Sized>(
    u: &Element,
    pres: &A,
    heads: &[usize],
) -> Result<(Element, Vec<Element>), FreenessError> {
    let n = pres.ngens();
    let mut rest = u.clone();
    let mut ds = vec![Element::zero(); heads.len()];
    loop {
        let Some((m, c)) = rest
            .iter()
            .rev()
            .find(|(m, _)| heads.iter().any(|&h| m.0[h] > 0))
            .map(|(m, c)| (m.clone(), c.clone()))
        else {
            return Ok((rest, ds));
        };
        let present: Vec<usize> = (0..heads.len()).filter(|&k| m.0[heads[k]] > 0).collect();
        let bad = present.len() != 1
            || m.0[heads[present[0]]] != 1
            || m.0.iter().take(2).enumerate().any(|(i, &e)| e > 0 && !heads.contains(&i));
        if bad {
            return Err(FreenessError::NotInModule(u.to_string()));
        }
        let k = present[0];
        let mut r_part = m.clone();
        r_part.0[heads[k]] = 0;
        let prod = pres.mul(&Element::term(r_part.clone(), Scalar::one()), &Element::var(n, heads[k]));
        let coef = c.try_div(&prod.coeff(&m))?;
        ds[k].add_term(r_part, coef.clone());
        rest.add_scaled(&prod, &-coef);
    }
}

/// For odd `n >= 3`, `g: x1 ↦ x1 + Ω(x2,...,xn)` and
/// `h: x2 ↦ x2 + Ω(x1,x3,...,xn)`, decomposed as `a0 + a1 x2` and
/// `b0 + b1 x1`. For even `n` the maps are returned but are not
/// automorphisms.
pub fn omega_generators<A: PbwAlgebra + ?Sized>(pres: &A) -> Result<(ElementaryAuto, ElementaryAuto), FreenessError> {
    let n = pres.ngens();
    if n < 3 {
        return Err(FreenessError::TooFewGenerators(n));
    }
    let tail: Vec<usize> = (3..=n).collect();
    let mut idx_g = vec![2];
    idx_g.extend(&tail);
    let mut idx_h = vec![1];
    idx_h.extend(&tail);
    let (a0, a1) = left_r_decompose(&pres.omega(&idx_g)?, pres, &[1])?;
    let (b0, b1) = left_r_decompose(&pres.omega(&idx_h)?, pres, &[0])?;
    Ok((
        ElementaryAuto::new(0, a0, a1.into_iter().next().unwrap()),
        ElementaryAuto::new(1, b0, b1.into_iter().next().unwrap()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    G,
    H,
}

impl Letter {
    fn other(self) -> Letter {
        match self {
            Letter::G => Letter::H,
            Letter::H => Letter::G,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syllable {
    pub letter: Letter,
    pub exponent: Scalar,
}

/// A word `s_k ... s_1` in `g` and `h`, written left to right; `s_1`
/// acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeWord {
    syllables: Vec<Syllable>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    /// Merges adjacent syllables in the same letter and drops zero
    /// exponents.
    pub fn new(syllables: Vec<Syllable>) -> Self {
        let mut out: Vec<Syllable> = Vec::with_capacity(syllables.len());
        for s in syllables {
            match out.last_mut() {
                Some(last) if last.letter == s.letter => {
                    last.exponent = &last.exponent + &s.exponent;
                    if last.exponent.is_zero() {
                        out.pop();
                    }
                }
                _ if s.exponent.is_zero() => {}
                _ => out.push(s),
            }
        }
        FreeWord { syllables: out }
    }

    pub fn from_ints(word: &[(Letter, i64)]) -> Self {
        FreeWord::new(
            word.iter()
                .map(|&(letter, e)| Syllable {
                    letter,
                    exponent: Scalar::from_int(e),
                })
                .collect(),
        )
    }

    /// Parses `h^2 g^-1 h g^(1/2)`; `*` between syllables is optional.
    pub fn parse(text: &str) -> Result<Self, FreenessError> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut syllables = Vec::new();
        let err = |column: usize, message: &str| FreenessError::WordSyntax {
            column: column + 1,
            message: message.to_string(),
        };
        while pos < bytes.len() {
            let c = bytes[pos];
            if c.is_ascii_whitespace() || c == b'*' {
                pos += 1;
                continue;
            }
            let letter = match c {
                b'g' => Letter::G,
                b'h' => Letter::H,
                _ => return Err(err(pos, "expected g or h")),
            };
            pos += 1;
            let mut exponent = Scalar::one();
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                let start = pos;
                if bytes.get(pos) == Some(&b'(') {
                    let close = text[pos..]
                        .find(')')
                        .map(|k| pos + k)
                        .ok_or_else(|| err(pos, "unclosed parenthesis"))?;
                    exponent = parse_scalar(&text[pos + 1..close], None).map_err(|e| match e {
                        ExprError::Syntax { column, message } => err(pos + column, &message),
                        other => err(pos, &other.to_string()),
                    })?;
                    pos = close + 1;
                } else {
                    if bytes.get(pos) == Some(&b'-') {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let value: i64 = text[start..pos]
                        .parse()
                        .map_err(|_| err(start, "expected an integer exponent"))?;
                    exponent = Scalar::from_int(value);
                }
            }
            syllables.push(Syllable { letter, exponent });
        }
        Ok(FreeWord::new(syllables))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// All reduced words with `1..=max_len` syllables and exponents from
    /// `exponents`.
    pub fn enumerate(max_len: usize, exponents: &[i64]) -> Vec<FreeWord> {
        let mut out = Vec::new();
        let mut frontier: Vec<Vec<(Letter, i64)>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let letters = match w.last() {
                    None => vec![Letter::G, Letter::H],
                    Some(&(l, _)) => vec![l.other()],
                };
                for l in letters {
                    for &e in exponents {
                        let mut v = w.clone();
                        v.push((l, e));
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().map(|w| FreeWord::from_ints(w)));
            frontier = next;
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| {
                let l = match s.letter {
                    Letter::G => "g",
                    Letter::H => "h",
                };
                match s.exponent.as_integer() {
                    Some(k) => format!("{l}^{k}"),
                    None => format!("{l}^({})", s.exponent),
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `τ_z(x1) = d0 + d1 x1 + d2 x2 + leading x2` with `d0, d1, d2, leading`
/// in `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauExpansion {
    pub z: usize,
    #[serde(serialize_with = "crate::report::display")]
    pub d0: Element,
    #[serde(serialize_with = "crate::report::display")]
    pub d1: Element,
    #[serde(serialize_with = "crate::report::display")]
    pub d2: Element,
    #[serde(serialize_with = "crate::report::display")]
    pub leading: Element,
}

impl TauExpansion {
    pub fn reconstruct<A: PbwAlgebra + ?Sized>(&self, pres: &A) -> Element {
        let n = pres.ngens();
        let x1 = Element::var(n, 0);
        let x2 = Element::var(n, 1);
        &(&self.d0 + &pres.mul(&self.d1, &x1)) + &pres.mul(&(&self.d2 + &self.leading), &x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordVerdict {
    Identity,
    NotIdentity,
}

/// A validated pair `(g, h)` acting on `V_n(A)`.
#[derive(Clone)]
pub struct WordEvaluator<'a> {
    pres: &'a dyn PbwAlgebra,
    g: ElementaryAuto,
    h: ElementaryAuto,
}

impl<'a> WordEvaluator<'a> {
    pub fn new(pres: &'a dyn PbwAlgebra, g: ElementaryAuto, h: ElementaryAuto) -> Result<Self, FreenessError> {
        for (e, moved) in [(&g, 0), (&h, 1)] {
            if e.moved != moved || !validate_elementary(e, pres) {
                return Err(FreenessError::InvalidAutomorphism(e.to_string()));
            }
        }
        Ok(WordEvaluator { pres, g, h })
    }

    /// The pair from [`omega_generators`].
    pub fn omega(pres: &'a dyn PbwAlgebra) -> Result<Self, FreenessError> {
        let (g, h) = omega_generators(pres)?;
        WordEvaluator::new(pres, g, h)
    }

    pub fn g(&self) -> &ElementaryAuto {
        &self.g
    }

    pub fn h(&self) -> &ElementaryAuto {
        &self.h
    }

    fn letter(&self, l: Letter) -> &ElementaryAuto {
        match l {
            Letter::G => &self.g,
            Letter::H => &self.h,
        }
    }

    /// Generator images of the composite; the rightmost syllable acts
    /// first.
    pub fn compose(&self, w: &FreeWord) -> AlgebraMap {
        let pres = self.pres;
        let n = pres.ngens();
        let mut images: Vec<Element> = (0..n).map(|i| Element::var(n, i)).collect();
        // psi <- psi ∘ s; psi fixes R, so only the moved image changes.
        for s in w.syllables() {
            let e = self.letter(s.letter);
            let (i, p) = (e.moved, e.partner());
            let shift = &e.a0 + &pres.mul(&e.a1, &images[p]);
            images[i] = &images[i] + &shift.scale(&(&e.exponent * &s.exponent));
        }
        AlgebraMap::new(images)
    }

    pub fn free_witness(&self, w: &FreeWord) -> WordVerdict {
        if self.compose(w).is_identity() {
            WordVerdict::Identity
        } else {
            WordVerdict::NotIdentity
        }
    }

    /// Splits `τ_z(x1)` over `{1, x1, x2}` and checks it against the
    /// recursion for `d0, d1, d2` and the closed-form leading coefficient
    /// `(∏ m_s)(∏ n_s) a1 (b1 a1)^(z-1)`.
    pub fn tau_expansion(&self, w: &FreeWord) -> Result<TauExpansion, FreenessError> {
        let syl = w.syllables();
        let shape_ok = syl.len() % 2 == 1
            && syl.iter().enumerate().all(|(k, s)| {
                s.letter == if k % 2 == 0 { Letter::G } else { Letter::H }
            });
        if !shape_ok {
            return Err(FreenessError::NotATauWord);
        }
        let pres = self.pres;
        let n = pres.ngens();
        let mul = |x: &Element, y: &Element| pres.mul(x, y);
        let (a0, a1) = (&self.g.a0, &self.g.a1);
        let (b0, b1) = (&self.h.a0, &self.h.a1);
        let ge = &self.g.exponent;
        let he = &self.h.exponent;
        // n_1 is the rightmost g-exponent, m_1 the rightmost h-exponent.
        let ns: Vec<Scalar> = syl.iter().rev().step_by(2).map(|s| &s.exponent * ge).collect();
        let ms: Vec<Scalar> = syl.iter().rev().skip(1).step_by(2).map(|s| &s.exponent * he).collect();
        let z = ns.len();

        let mut d0 = a0.scale(&ns[0]);
        let mut d1 = Element::one(n);
        let mut d2 = Element::zero();
        let mut lead = a1.scale(&ns[0]);
        for s in 1..z {
            let (nz, m) = (&ns[s], &ms[s - 1]);
            // h^m g^n-image pieces: x2 ↦ x2 + c0 + m b1 x1 + m b1 n a1 x2.
            let c0 = &b0.scale(m) + &mul(b1, a0).scale(&(m * nz));
            let mb1 = b1.scale(m);
            let mb1na1 = mul(b1, a1).scale(&(m * nz));
            let new_d0 = &(&(&d0 + &mul(&d1, a0).scale(nz)) + &mul(&d2, &c0)) + &mul(&lead, &c0);
            let new_d1 = &(&d1 + &mul(&d2, &mb1)) + &mul(&lead, &mb1);
            let new_d2 = &(&(&mul(&d1, a1).scale(nz) + &d2) + &mul(&d2, &mb1na1)) + &lead;
            lead = mul(&lead, &mb1na1);
            d0 = new_d0;
            d1 = new_d1;
            d2 = new_d2;
        }

        let coef: Scalar = ms.iter().chain(&ns).product();
        let mut closed = a1.clone();
        let b1a1 = mul(b1, a1);
        for _ in 1..z {
            closed = mul(&closed, &b1a1);
        }
        let closed = closed.scale(&coef);
        if closed != lead {
            return Err(FreenessError::LeadingMismatch {
                expected: closed.to_string(),
                found: lead.to_string(),
            });
        }

        let image = self.compose(w).images()[0].clone();
        let (e0, es) = left_r_decompose(&image, pres, &[0, 1])?;
        let found_x2 = &es[1] - &d2;
        if e0 != d0 || es[0] != d1 || found_x2 != lead {
            return Err(FreenessError::LeadingMismatch {
                expected: lead.to_string(),
                found: found_x2.to_string(),
            });
        }
        Ok(TauExpansion {
            z,
            d0,
            d1,
            d2,
            leading: lead,
        })
    }

    /// Evaluates every word in parallel; returns the words that act as the
    /// identity.
    pub fn identity_words(&self, words: &[FreeWord]) -> Vec<FreeWord> {
        words
            .par_iter()
            .filter(|w| self.free_witness(w) == WordVerdict::Identity)
            .cloned()
            .collect()
    }
}
