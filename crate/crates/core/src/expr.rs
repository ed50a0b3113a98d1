//! Parser for scalar and algebra-element literals.
//!
//! Grammar: sums and differences of products; `*`, `/` and juxtaposition
//! multiply (left-associative); `^` takes an integer exponent (optionally
//! negative, optionally parenthesized) and binds tighter than unary minus;
//! `[u, v]` is the commutator `uv - vu`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{Element, PbwAlgebra};
use crate::scalar::{NumberField, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unbound name `{0}`")]
    UnboundName(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Symbol(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Commutator(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else if c == '−' {
            out.push((Tok::Op('-'), col));
            i += 1;
        } else {
            return Err(ExprError::Syntax {
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            column: self.col(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('(') | Tok::Op('['))
        )
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_factor() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let col = self.col();
        let Some(Tok::Int(k)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        self.pos += 1;
        if paren {
            self.expect(')')?;
        }
        let k = k.to_i64().ok_or(ExprError::Syntax {
            column: col,
            message: "exponent too large".into(),
        })?;
        Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                Ok(Expr::Int(k))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Symbol(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op('[')) => {
                self.pos += 1;
                let u = self.expr()?;
                self.expect(',')?;
                let v = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Commutator(Box::new(u), Box::new(v)))
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Interprets parsed expressions in some ring.
pub trait Evaluator {
    type Value: Clone;

    fn int(&self, k: &BigInt) -> Result<Self::Value, ExprError>;
    fn symbol(&self, name: &str) -> Result<Self::Value, ExprError>;
    fn add(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError>;
    fn neg(&self, x: &Self::Value) -> Result<Self::Value, ExprError>;
    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError>;
    fn div(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError>;
    fn pow(&self, x: &Self::Value, k: i64) -> Result<Self::Value, ExprError>;
}

impl Expr {
    pub fn eval<E: Evaluator>(&self, ev: &E) -> Result<E::Value, ExprError> {
        Ok(match self {
            Expr::Int(k) => ev.int(k)?,
            Expr::Symbol(s) => ev.symbol(s)?,
            Expr::Neg(x) => ev.neg(&x.eval(ev)?)?,
            Expr::Add(x, y) => ev.add(&x.eval(ev)?, &y.eval(ev)?)?,
            Expr::Sub(x, y) => ev.add(&x.eval(ev)?, &ev.neg(&y.eval(ev)?)?)?,
            Expr::Mul(x, y) => ev.mul(&x.eval(ev)?, &y.eval(ev)?)?,
            Expr::Div(x, y) => ev.div(&x.eval(ev)?, &y.eval(ev)?)?,
            Expr::Pow(x, k) => ev.pow(&x.eval(ev)?, *k)?,
            Expr::Commutator(x, y) => {
                let (u, v) = (x.eval(ev)?, y.eval(ev)?);
                ev.add(&ev.mul(&u, &v)?, &ev.neg(&ev.mul(&v, &u)?)?)?
            }
        })
    }
}

/// Scalars in `Q(a)(q)`; `a` is available only when a field is given.
pub struct ScalarEvaluator<'a> {
    pub field: Option<&'a Arc<NumberField>>,
}

impl Evaluator for ScalarEvaluator<'_> {
    type Value = Scalar;

    fn int(&self, k: &BigInt) -> Result<Scalar, ExprError> {
        Ok(Scalar::from_rational(k.clone().into()))
    }

    fn symbol(&self, name: &str) -> Result<Scalar, ExprError> {
        match (name, self.field) {
            ("q", _) => Ok(Scalar::q()),
            ("a", Some(f)) => Ok(Scalar::generator(f)),
            ("a", None) => Err(ExprError::Domain(
                "symbol `a` used without a `minpoly a = ...` declaration".into(),
            )),
            _ => Err(ExprError::UnboundName(name.to_string())),
        }
    }

    fn add(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, ExprError> {
        Ok(x.try_add(y)?)
    }

    fn neg(&self, x: &Scalar) -> Result<Scalar, ExprError> {
        Ok(-x)
    }

    fn mul(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, ExprError> {
        Ok(x.try_mul(y)?)
    }

    fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, ExprError> {
        Ok(x.try_div(y)?)
    }

    fn pow(&self, x: &Scalar, k: i64) -> Result<Scalar, ExprError> {
        Ok(x.pow(k)?)
    }
}

/// Parses a scalar literal such as `-a^2`, `q^16` or `3/2*q`.
pub fn parse_scalar(text: &str, field: Option<&Arc<NumberField>>) -> Result<Scalar, ExprError> {
    parse(text)?.eval(&ScalarEvaluator { field })
}

/// Noncommutative expressions in an algebra. Names resolve first to the
/// explicit bindings, then to generators `x1..xn`, then to scalars.
pub struct ElementEvaluator<'a> {
    pub alg: &'a dyn PbwAlgebra,
    pub bindings: &'a HashMap<String, Element>,
    /// Whether `a` names the number-field generator.
    pub has_minpoly: bool,
}

impl Evaluator for ElementEvaluator<'_> {
    type Value = Element;

    fn int(&self, k: &BigInt) -> Result<Element, ExprError> {
        Ok(self.alg.constant(Scalar::from_rational(k.clone().into())))
    }

    fn symbol(&self, name: &str) -> Result<Element, ExprError> {
        if let Some(u) = self.bindings.get(name) {
            return Ok(u.clone());
        }
        if let Some(i) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
            let n = self.alg.ngens();
            if i == 0 || i > n {
                return Err(ExprError::Domain(format!(
                    "generator {name} out of range x1..x{n}"
                )));
            }
            return Ok(self.alg.generator(i - 1));
        }
        let field = self.has_minpoly.then(|| self.alg.field());
        let c = ScalarEvaluator { field }.symbol(name)?;
        Ok(self.alg.constant(c))
    }

    fn add(&self, x: &Element, y: &Element) -> Result<Element, ExprError> {
        Ok(x + y)
    }

    fn neg(&self, x: &Element) -> Result<Element, ExprError> {
        Ok(-x)
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element, ExprError> {
        Ok(self.alg.mul(x, y))
    }

    fn div(&self, x: &Element, y: &Element) -> Result<Element, ExprError> {
        let c = y
            .as_constant()
            .ok_or_else(|| ExprError::Domain("division by a non-constant element".into()))?;
        Ok(x.scale(&c.inv()?))
    }

    fn pow(&self, x: &Element, k: i64) -> Result<Element, ExprError> {
        if k >= 0 {
            return Ok(self.alg.pow(x, k as u32));
        }
        let c = x
            .as_constant()
            .ok_or_else(|| ExprError::Domain("negative power of a non-constant element".into()))?;
        Ok(self.alg.constant(c.pow(k)?))
    }
}

/// Parses an element expression in generators `x1..xn`.
pub fn parse_element(
    text: &str,
    alg: &dyn PbwAlgebra,
    has_minpoly: bool,
) -> Result<Element, ExprError> {
    let bindings = HashMap::new();
    parse(text)?.eval(&ElementEvaluator {
        alg,
        bindings: &bindings,
        has_minpoly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;

    fn sixth() -> Arc<NumberField> {
        Arc::new(NumberField::new(vec![1.into(), (-1).into(), 1.into()]).unwrap())
    }

    #[test]
    fn scalar_literals() {
        let k = sixth();
        let a = Scalar::generator(&k);
        assert_eq!(parse_scalar("-a^2", Some(&k)).unwrap(), -(&a * &a));
        assert_eq!(parse_scalar("q^16", None).unwrap(), Scalar::q().pow(16).unwrap());
        assert_eq!(
            parse_scalar("3/2*q", None).unwrap(),
            &Scalar::from_ratio(3, 2) * &Scalar::q()
        );
        assert_eq!(parse_scalar("q^-1 * q^(-1)", None).unwrap(), Scalar::q().pow(-2).unwrap());
        assert_eq!(parse_scalar("q^x", None).unwrap_err(), ExprError::Syntax {
            column: 3,
            message: "expected an integer exponent".into()
        });
        assert!(matches!(parse_scalar("a", None), Err(ExprError::Domain(_))));
        assert!(matches!(parse_scalar("b", None), Err(ExprError::UnboundName(_))));
        assert!(matches!(parse_scalar("1/(q-q)", None), Err(ExprError::Scalar(_))));
    }

    #[test]
    fn displayed_scalars_reparse() {
        let k = sixth();
        let a = Scalar::generator(&k);
        let q = Scalar::q();
        let samples = [
            (&q + &a).try_div(&(&q * &q - &Scalar::from_int(3))).unwrap(),
            Scalar::from_ratio(-7, 3),
            (&a - &Scalar::one()) * q.pow(5).unwrap(),
            Scalar::one().try_div(&(&q * &Scalar::from_int(2))).unwrap(),
            -q.pow(2).unwrap().try_div(&(&q + &a)).unwrap(),
        ];
        for s in samples {
            assert_eq!(parse_scalar(&s.to_string(), Some(&k)).unwrap(), s, "{s}");
        }
    }

    #[test]
    fn element_words_and_commutators() {
        let w3 = Presentation::weyl(3);
        let nf = parse_element("x3 x2 x1", &w3, false).unwrap();
        assert_eq!(nf.to_string(), "-x1*x2*x3 + x3 - x2 + x1");
        let c = parse_element("[x1, x2]", &w3, false).unwrap();
        assert_eq!(c, parse_element("2*x1*x2 - 1", &w3, false).unwrap());
        let half = parse_element("x1/2 - q*x2^2", &w3, false).unwrap();
        assert_eq!(half.to_string(), "-q*x2^2 + 1/2*x1");
        assert!(parse_element("x4", &w3, false).is_err());
        assert!(parse_element("x1/x2", &w3, false).is_err());
    }
}
