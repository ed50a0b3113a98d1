//! Exact scalars in `K = Q(a)(q)`: rational functions in the transcendental
//! `q` whose coefficients lie in a number field `Q(a)`.
//!
//! Values are kept canonical (monic denominator, coprime numerator and
//! denominator, rational constants stored as plain rationals), so equality
//! and hashing are structural.

mod number_field;
mod qpoly;
mod sqrt;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use number_field::NumberField;
pub(crate) use number_field::{format_rational, rational_sqrt};
use number_field::{Nf, RATIONALS};
use qpoly::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-invertible element: {0}")]
    NonInvertible(String),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("scalars belong to different number fields")]
    FieldMismatch,
}

/// An element of `Q(a)(q)`.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

#[derive(Clone, Debug)]
enum Repr {
    Rat(BigRational),
    Func(Box<RatFunc>),
}

#[derive(Clone, Debug)]
struct RatFunc {
    num: QPoly,
    den: QPoly,
    /// `None` when every coefficient is rational.
    field: Option<Arc<NumberField>>,
}

fn join_fields(
    x: &Option<Arc<NumberField>>,
    y: &Option<Arc<NumberField>>,
) -> Result<Option<Arc<NumberField>>, ScalarError> {
    match (x, y) {
        (None, f) | (f, None) => Ok(f.clone()),
        (Some(f), Some(g)) if Arc::ptr_eq(f, g) || f == g => Ok(Some(f.clone())),
        _ => Err(ScalarError::FieldMismatch),
    }
}

fn field_ref(f: &Option<Arc<NumberField>>) -> &NumberField {
    f.as_deref().unwrap_or(&RATIONALS)
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Rat(BigRational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Rat(BigRational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Rat(BigRational::from_integer(n.into())))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(Repr::Rat(r))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar(Repr::Rat(BigRational::new(n.into(), d.into())))
    }

    /// The transcendental `q`.
    pub fn q() -> Self {
        Scalar::from_parts(qpoly::q_power(1), qpoly::one(), None)
            .expect("q is a valid scalar")
    }

    /// The generator `a` of `field`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        if let Some(r) = field.rational_generator() {
            return Scalar(Repr::Rat(r));
        }
        let a = Nf::from_vec(vec![BigRational::zero(), BigRational::one()]);
        Scalar::from_parts(vec![a], qpoly::one(), Some(field.clone()))
            .expect("generator is a valid scalar")
    }

    fn from_parts(
        num: QPoly,
        den: QPoly,
        field: Option<Arc<NumberField>>,
    ) -> Result<Self, ScalarError> {
        let k = field_ref(&field);
        if qpoly::is_zero(&den) {
            return Err(ScalarError::DivisionByZero);
        }
        if qpoly::is_zero(&num) {
            return Ok(Scalar::zero());
        }
        let (num, den) = if den.len() == 1 {
            let inv = den[0].inv(k)?;
            (qpoly::scale(&num, &inv, k), qpoly::one())
        } else {
            let g = qpoly::gcd(&num, &den, k)?;
            let (mut n, mut d) = if qpoly::is_one(&g) {
                (num, den)
            } else {
                (
                    qpoly::divrem(&num, &g, k)?.0,
                    qpoly::divrem(&den, &g, k)?.0,
                )
            };
            let lc = d.last().unwrap().clone();
            if !lc.is_one() {
                let inv = lc.inv(k)?;
                n = qpoly::scale(&n, &inv, k);
                d = qpoly::scale(&d, &inv, k);
            }
            (n, d)
        };
        if num.len() == 1 && den.len() == 1 {
            if let Some(r) = num[0].as_rational() {
                return Ok(Scalar(Repr::Rat(r)));
            }
        }
        let field = if qpoly::all_rational(&num) && qpoly::all_rational(&den) {
            None
        } else {
            field
        };
        Ok(Scalar(Repr::Func(Box::new(RatFunc { num, den, field }))))
    }

    fn parts(&self) -> (QPoly, QPoly, Option<Arc<NumberField>>) {
        match &self.0 {
            Repr::Rat(r) => (qpoly::from_rational(r.clone()), qpoly::one(), None),
            Repr::Func(f) => (f.num.clone(), f.den.clone(), f.field.clone()),
        }
    }

    /// The number field this scalar needs, if its coefficients are not all
    /// rational.
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Func(f) => f.field.as_ref(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Func(_) => None,
        }
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// True when the scalar does not involve `q`.
    pub fn is_q_free(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => true,
            Repr::Func(f) => f.num.len() == 1 && f.den.len() == 1,
        }
    }

    /// Sign of the leading coefficient (highest power of `q`, then of `a`).
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_negative(),
            Repr::Func(f) => f.num.last().is_some_and(Nf::is_negative_leading),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if let (Repr::Rat(x), Repr::Rat(y)) = (&self.0, &other.0) {
            return Ok(Scalar(Repr::Rat(x + y)));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (n1, d1, f1) = self.parts();
        let (n2, d2, f2) = other.parts();
        let field = join_fields(&f1, &f2)?;
        let k = field_ref(&field);
        if d1 == d2 {
            return Scalar::from_parts(qpoly::add(&n1, &n2), d1, field);
        }
        let num = qpoly::add(&qpoly::mul(&n1, &d2, k), &qpoly::mul(&n2, &d1, k));
        let den = qpoly::mul(&d1, &d2, k);
        Scalar::from_parts(num, den, field)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if let (Repr::Rat(x), Repr::Rat(y)) = (&self.0, &other.0) {
            return Ok(Scalar(Repr::Rat(x * y)));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar::zero());
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        let (n1, d1, f1) = self.parts();
        let (n2, d2, f2) = other.parts();
        let field = join_fields(&f1, &f2)?;
        let k = field_ref(&field);
        Scalar::from_parts(qpoly::mul(&n1, &n2, k), qpoly::mul(&d1, &d2, k), field)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match &self.0 {
            Repr::Rat(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Repr::Rat(r) => Ok(Scalar(Repr::Rat(r.recip()))),
            Repr::Func(f) => Scalar::from_parts(f.den.clone(), f.num.clone(), f.field.clone()),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        if let Repr::Rat(r) = &base.0 {
            return Ok(Scalar(Repr::Rat(num_traits::pow(r.clone(), e as usize))));
        }
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.try_mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// A square root in `K`, normalized to have positive leading
    /// coefficient, or `None` when the scalar is not a square in `K`.
    pub fn try_sqrt(&self, field: &Arc<NumberField>) -> Option<Scalar> {
        if let Repr::Rat(r) = &self.0 {
            if let Some(s) = rational_sqrt(r) {
                return Some(Scalar(Repr::Rat(s)));
            }
        }
        let (num, den, own) = self.parts();
        let field = join_fields(&own, &Some(field.clone())).ok()?;
        let k = field_ref(&field);
        let n = qpoly::sqrt(&num, k)?;
        let d = qpoly::sqrt(&den, k)?;
        Scalar::from_parts(n, d, field).ok()
    }

    /// True when the printed form is a top-level sum and needs parentheses
    /// as a factor.
    pub fn is_sum(&self) -> bool {
        match &self.0 {
            Repr::Rat(_) => false,
            Repr::Func(f) => qpoly::is_one(&f.den) && poly_terms(&f.num).len() > 1,
        }
    }

    fn kind_rank(&self) -> u8 {
        match &self.0 {
            Repr::Rat(_) => 0,
            Repr::Func(_) => 1,
        }
    }
}

fn cmp_qpoly(x: &QPoly, y: &QPoly) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| {
        x.iter()
            .rev()
            .zip(y.iter().rev())
            .map(|(a, b)| a.cmp_structural(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rat(x), Repr::Rat(y)) => x == y,
            (Repr::Func(f), Repr::Func(g)) => f.num == g.num && f.den == g.den,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Rat(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            Repr::Func(f) => {
                1u8.hash(state);
                f.num.hash(state);
                f.den.hash(state);
            }
        }
    }
}

/// Total order used for deterministic tie-breaking: non-negative values
/// first, then rationals before functions of `q`, then structurally.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.is_negative()
            .cmp(&other.is_negative())
            .then_with(|| self.kind_rank().cmp(&other.kind_rank()))
            .then_with(|| match (&self.0, &other.0) {
                (Repr::Rat(x), Repr::Rat(y)) => x.cmp(y),
                (Repr::Func(f), Repr::Func(g)) => cmp_qpoly(&f.den, &g.den)
                    .then_with(|| cmp_qpoly(&f.num, &g.num)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic across number fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $assign_trait<&Scalar> for Scalar {
            fn $assign(&mut self, rhs: &Scalar) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<Scalar> for Scalar {
            fn $assign(&mut self, rhs: Scalar) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

checked_binop!(Add, add, try_add, AddAssign, add_assign);
checked_binop!(Sub, sub, try_sub, SubAssign, sub_assign);
checked_binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
            Repr::Func(f) => Scalar(Repr::Func(Box::new(RatFunc {
                num: qpoly::neg(&f.num),
                den: f.den.clone(),
                field: f.field.clone(),
            }))),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Scalar> for Scalar {
    fn product<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Printed summands of a polynomial in `q`, highest power first.
fn poly_terms(p: &QPoly) -> Vec<String> {
    let mut out = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let qpow = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        if k == 0 {
            for (i, r) in c.0.iter().enumerate().rev() {
                if !r.is_zero() {
                    let mut single = vec![BigRational::zero(); i + 1];
                    single[i] = r.clone();
                    out.push(number_field::format_univariate(&single, "a"));
                }
            }
        } else if c.is_one() {
            out.push(qpow);
        } else if c.term_count() == 1 {
            let s = c.to_string_in("a");
            if s == "-1" {
                out.push(format!("-{qpow}"));
            } else {
                out.push(format!("{s}*{qpow}"));
            }
        } else {
            out.push(format!("({})*{qpow}", c.to_string_in("a")));
        }
    }
    out
}

fn join_terms(terms: &[String]) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => f.write_str(&format_rational(r)),
            Repr::Func(rf) => {
                let num_terms = poly_terms(&rf.num);
                let num = join_terms(&num_terms);
                if qpoly::is_one(&rf.den) {
                    return f.write_str(&num);
                }
                let den = join_terms(&poly_terms(&rf.den));
                if num_terms.len() > 1 {
                    write!(f, "({num})/({den})")
                } else {
                    write!(f, "{num}/({den})")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sixth() -> Arc<NumberField> {
        Arc::new(NumberField::new(vec![1.into(), (-1).into(), 1.into()]).unwrap())
    }

    #[test]
    fn rational_function_canonical_form() {
        let q = Scalar::q();
        let one = Scalar::one();
        let x = (&q * &q - &one).try_div(&(&q - &one)).unwrap();
        assert_eq!(x, &q + &one);
        assert_eq!(x.to_string(), "q + 1");
        let y = one.try_div(&(&q * &Scalar::from_int(2))).unwrap();
        assert_eq!(y.to_string(), "1/2/(q)");
        assert_eq!(&y * &q, Scalar::from_ratio(1, 2));
        assert!((&y * &q).as_rational().is_some());
    }

    #[test]
    fn display_forms() {
        let k = sixth();
        let a = Scalar::generator(&k);
        let q = Scalar::q();
        assert_eq!((&a * &a).to_string(), "a - 1");
        assert_eq!((-(&a * &a)).to_string(), "-a + 1");
        assert_eq!((Scalar::from_ratio(3, 2) * &q).to_string(), "3/2*q");
        let t = &(&a - &Scalar::one()) * &q.pow(2).unwrap();
        assert_eq!(t.to_string(), "(a - 1)*q^2");
        assert!(!t.is_sum());
        assert!((&q + &Scalar::one()).is_sum());
        let r = (&q + &Scalar::one()).try_div(&(&q - &a)).unwrap();
        assert_eq!(r.to_string(), "(q + 1)/(q - a)");
    }

    #[test]
    fn field_mismatch_is_reported() {
        let k = sixth();
        let other = Arc::new(NumberField::new(vec![1.into(), 0.into(), 1.into()]).unwrap());
        let a = Scalar::generator(&k);
        let i = Scalar::generator(&other);
        assert_eq!(a.try_add(&i), Err(ScalarError::FieldMismatch));
        // Rational-coefficient values combine with either field.
        assert!((Scalar::q() + &a).try_mul(&Scalar::q()).is_ok());
    }

    #[test]
    fn negative_exponents_and_zero_division() {
        let q = Scalar::q();
        assert_eq!(q.pow(-2).unwrap() * q.pow(2).unwrap(), Scalar::one());
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn square_roots() {
        let k = sixth();
        let q = Scalar::q();
        let s = (&q + &Scalar::generator(&k)).try_div(&(&q * &q + &Scalar::one())).unwrap();
        let sq = &s * &s;
        let root = sq.try_sqrt(&k).unwrap();
        assert_eq!(&root * &root, sq);
        assert!(!root.is_negative());
        assert!(q.try_sqrt(&k).is_none());
        assert!(Scalar::from_int(2).try_sqrt(&k).is_none());
        let m3 = Scalar::from_int(-3).try_sqrt(&k).unwrap();
        assert_eq!(&m3 * &m3, Scalar::from_int(-3));
    }

    #[test]
    fn order_puts_positive_first() {
        let mut v = vec![Scalar::from_int(-1), Scalar::q(), Scalar::one(), -Scalar::q()];
        v.sort();
        assert_eq!(v, vec![Scalar::one(), Scalar::q(), Scalar::from_int(-1), -Scalar::q()]);
    }
}
