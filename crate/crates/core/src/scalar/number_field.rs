//! Number fields `Q(a) = Q[a]/(m(a))` and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarError;

/// A number field given by a monic integer minimal polynomial `m(a)`.
///
/// Degree one means the field is `Q` itself and the symbol `a` names the
/// rational root of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    /// Coefficients of `m`, ascending, last entry 1.
    minpoly: Vec<BigInt>,
}

pub(crate) static RATIONALS: LazyLock<NumberField> = LazyLock::new(NumberField::rationals);

impl NumberField {
    /// Builds `Q[a]/(m)` from ascending integer coefficients of `m`.
    ///
    /// Rejects non-monic input and, for degree at least two, any `m` with a
    /// rational root. Other reducible inputs surface later as
    /// [`ScalarError::NonInvertible`].
    pub fn new(minpoly: Vec<BigInt>) -> Result<Self, ScalarError> {
        let mut minpoly = minpoly;
        while minpoly.last().is_some_and(Zero::is_zero) {
            minpoly.pop();
        }
        if minpoly.len() < 2 {
            return Err(ScalarError::InvalidMinpoly(
                "minimal polynomial must have degree at least 1".into(),
            ));
        }
        if !minpoly.last().unwrap().is_one() {
            return Err(ScalarError::InvalidMinpoly(
                "minimal polynomial must be monic".into(),
            ));
        }
        let field = NumberField { minpoly };
        if field.degree() >= 2 {
            if let Some(root) = field.rational_root() {
                return Err(ScalarError::InvalidMinpoly(format!(
                    "{} has the rational root {}",
                    field.minpoly_string(),
                    root
                )));
            }
        }
        Ok(field)
    }

    /// `Q`, presented as `Q[a]/(a)`.
    pub fn rationals() -> Self {
        NumberField {
            minpoly: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// The cyclotomic field `Q(zeta_n)` with `a = zeta_n`.
    pub fn cyclotomic(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        NumberField {
            minpoly: cyclotomic_polynomial(order),
        }
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    /// `m(a)` rendered in the scalar literal grammar, e.g. `a^2 - a + 1`.
    pub fn minpoly_string(&self) -> String {
        let coeffs: Vec<BigRational> = self
            .minpoly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        format_univariate(&coeffs, "a")
    }

    /// For degree one, the rational value of `a`.
    pub fn rational_generator(&self) -> Option<BigRational> {
        (self.degree() == 1).then(|| BigRational::from_integer(-self.minpoly[0].clone()))
    }

    fn rational_root(&self) -> Option<BigInt> {
        // Monic integer polynomial: rational roots are integers dividing m(0).
        let c0 = &self.minpoly[0];
        if c0.is_zero() {
            return Some(BigInt::zero());
        }
        let bound = c0.abs();
        let eval = |x: &BigInt| {
            self.minpoly
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * x + c)
        };
        let limit: BigInt = BigInt::from(1_000_000u32);
        if bound > limit {
            // Divisor enumeration is impractical; fall back to lazy detection.
            return None;
        }
        let mut d = BigInt::one();
        while d <= bound {
            if (&bound % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if eval(&cand).is_zero() {
                        return Some(cand);
                    }
                }
            }
            d += 1;
        }
        None
    }

    /// Reduces a coefficient vector modulo `m`.
    pub(crate) fn reduce(&self, mut c: Vec<BigRational>) -> Nf {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = c.len() - d;
            for i in 0..d {
                if !self.minpoly[i].is_zero() {
                    c[k + i] -= &top * BigRational::from_integer(self.minpoly[i].clone());
                }
            }
        }
        Nf::from_vec(c)
    }
}

fn cyclotomic_polynomial(order: u32) -> Vec<BigInt> {
    // Phi_n = (a^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num: Vec<BigRational> = vec![BigRational::zero(); order as usize + 1];
    num[0] = -BigRational::one();
    num[order as usize] = BigRational::one();
    for d in 1..order {
        if order.is_multiple_of(d) {
            let phi: Vec<BigRational> = cyclotomic_polynomial(d)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            let (q, r) = upoly_divrem(&num, &phi);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}

/// An element of a number field: rational coefficients in powers of `a`,
/// ascending, trimmed (empty means zero). Always reduced modulo `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Nf(pub(crate) Vec<BigRational>);

impl Nf {
    pub fn zero() -> Self {
        Nf(Vec::new())
    }

    pub fn one() -> Self {
        Nf(vec![BigRational::one()])
    }

    pub fn from_rational(r: BigRational) -> Self {
        Nf::from_vec(vec![r])
    }

    pub fn from_vec(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Nf(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.0.len() <= 1
    }

    /// Number of nonzero terms in powers of `a`.
    pub fn term_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    /// Sign of the top coefficient.
    pub fn is_negative_leading(&self) -> bool {
        self.0.last().is_some_and(Signed::is_negative)
    }

    pub fn add(&self, other: &Nf) -> Nf {
        let len = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let x = self.0.get(i);
            let y = other.0.get(i);
            out.push(match (x, y) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        Nf::from_vec(out)
    }

    pub fn neg(&self) -> Nf {
        Nf(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Nf) -> Nf {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Nf {
        if r.is_zero() {
            return Nf::zero();
        }
        Nf(self.0.iter().map(|c| c * r).collect())
    }

    pub fn mul(&self, other: &Nf, field: &NumberField) -> Nf {
        if self.is_zero() || other.is_zero() {
            return Nf::zero();
        }
        if self.0.len() == 1 {
            return other.scale(&self.0[0]);
        }
        if other.0.len() == 1 {
            return self.scale(&other.0[0]);
        }
        let mut prod = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.0.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        field.reduce(prod)
    }

    /// Multiplicative inverse; `NonInvertible` when the element shares a
    /// factor with `m` (only possible for reducible `m`).
    pub fn inv(&self, field: &NumberField) -> Result<Nf, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.0.len() == 1 {
            return Ok(Nf(vec![self.0[0].recip()]));
        }
        let m: Vec<BigRational> = field
            .minpoly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // Extended Euclid tracking only the cofactor of `self`.
        let (mut r0, mut r1) = (m, self.0.clone());
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = upoly_divrem(&r0, &r1);
            let s2 = upoly_sub(&s0, &upoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(ScalarError::NonInvertible(format!(
                "element shares a factor with {}",
                field.minpoly_string()
            )));
        }
        let c = r0[0].recip();
        Ok(field.reduce(s0.into_iter().map(|x| x * &c).collect()))
    }

    pub fn cmp_structural(&self, other: &Nf) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        format_univariate(&self.0, var)
    }
}

pub(crate) fn upoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

pub(crate) fn upoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Quotient and remainder of univariate rational polynomials (ascending).
pub(crate) fn upoly_divrem(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Vec<BigRational> = a.to_vec();
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lc = b.last().unwrap();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lc;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    while q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }
    (q, r)
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders ascending rational coefficients as a polynomial in `var`,
/// highest power first.
pub(crate) fn format_univariate(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        let body = match k {
            0 => format_rational(&abs),
            _ => {
                let pow = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if abs.is_one() {
                    pow
                } else {
                    format!("{}*{}", format_rational(&abs), pow)
                }
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[a]/({})", self.minpoly_string())
    }
}

pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(coeffs: &[i64]) -> NumberField {
        NumberField::new(coeffs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    fn nf(coeffs: &[i64]) -> Nf {
        Nf::from_vec(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn a_squared_reduces_mod_sixth_cyclotomic() {
        let k = field(&[1, -1, 1]);
        let a = nf(&[0, 1]);
        assert_eq!(a.mul(&a, &k), nf(&[-1, 1]));
        assert_eq!(a.mul(&a, &k).mul(&a, &k), nf(&[-1]));
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let k = field(&[1, -1, 1]);
        let x = nf(&[2, 3]);
        let inv = x.inv(&k).unwrap();
        assert!(x.mul(&inv, &k).is_one());
    }

    #[test]
    fn rejects_rational_roots_and_non_monic() {
        assert!(NumberField::new(vec![BigInt::from(-1), 0.into(), 1.into()]).is_err());
        assert!(NumberField::new(vec![BigInt::from(1), 0.into(), 2.into()]).is_err());
        assert!(NumberField::new(vec![BigInt::from(1), 0.into(), 1.into()]).is_ok());
    }

    #[test]
    fn reducible_quartic_hits_zero_divisor() {
        // (a^2 + 1)(a^2 + 2) has no rational root but is reducible.
        let k = field(&[2, 0, 3, 0, 1]);
        let x = nf(&[1, 0, 1]);
        assert!(matches!(x.inv(&k), Err(ScalarError::NonInvertible(_))));
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(NumberField::cyclotomic(1).minpoly_string(), "a - 1");
        assert_eq!(NumberField::cyclotomic(4).minpoly_string(), "a^2 + 1");
        assert_eq!(NumberField::cyclotomic(6).minpoly_string(), "a^2 - a + 1");
        assert_eq!(
            NumberField::cyclotomic(5).minpoly_string(),
            "a^4 + a^3 + a^2 + a + 1"
        );
    }
}
