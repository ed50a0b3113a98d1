//! Commutative polynomials in `y1..yn`, used for the central subalgebra
//! generated by the squares `y_i = x_i^2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Element, Monomial};
use crate::perm::Perm;
use crate::scalar::{Scalar, ScalarError};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterPoly(Element);

impl CenterPoly {
    pub fn zero() -> Self {
        CenterPoly(Element::zero())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        CenterPoly(Element::constant(n, c))
    }

    /// `y_{i+1}` for 0-based `i`.
    pub fn var(n: usize, i: usize) -> Self {
        CenterPoly(Element::var(n, i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        CenterPoly(Element::from_terms(terms))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> &Element {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Leading term under graded-lex with `y1 > ... > yn`.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.0.leading_term()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.0.coeff(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        self.0.add_term(m, c);
    }

    pub fn add_scaled(&mut self, other: &CenterPoly, c: &Scalar) {
        self.0.add_scaled(&other.0, c);
    }

    pub fn scale(&self, c: &Scalar) -> CenterPoly {
        CenterPoly(self.0.scale(c))
    }

    pub fn mul(&self, other: &CenterPoly) -> CenterPoly {
        let mut out = Element::zero();
        for (m1, c1) in self.0.iter() {
            for (m2, c2) in other.0.iter() {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), c1 * c2);
            }
        }
        CenterPoly(out)
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &CenterPoly) -> Result<Option<CenterPoly>, ScalarError> {
        let Some((lm, lc)) = d.leading_term() else {
            return Err(ScalarError::DivisionByZero);
        };
        let (lm, lc_inv) = (lm.clone(), lc.inv()?);
        let mut rem = self.0.clone();
        let mut quot = Element::zero();
        while let Some((m, c)) = rem.leading_term() {
            if m.0.iter().zip(&lm.0).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let shift = Monomial(m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect());
            let coef = c * &lc_inv;
            for (dm, dc) in d.0.iter() {
                let e = dm.0.iter().zip(&shift.0).map(|(a, b)| a + b).collect();
                rem.add_term(Monomial(e), -(dc * &coef));
            }
            quot.add_term(shift, coef);
        }
        Ok(Some(CenterPoly(quot)))
    }

    /// Scales so the leading coefficient is 1.
    pub fn normalized(&self) -> Result<CenterPoly, ScalarError> {
        match self.leading_term() {
            None => Ok(CenterPoly::zero()),
            Some((_, c)) => Ok(self.scale(&c.inv()?)),
        }
    }

    /// Substitutes `y_i ↦ c_i * y_{σ(i)}`.
    pub fn substitute(&self, sigma: &Perm, c: &[Scalar]) -> CenterPoly {
        let mut out = Element::zero();
        for (m, coef) in self.0.iter() {
            let mut e = vec![0; m.0.len()];
            let mut k = coef.clone();
            for (i, &ei) in m.0.iter().enumerate() {
                e[sigma.apply(i)] = ei;
                if ei > 0 {
                    k = &k * &c[i].pow(ei as i64).expect("nonzero substitution scalar");
                }
            }
            out.add_term(Monomial(e), k);
        }
        CenterPoly(out)
    }

    /// The same polynomial as an algebra element with `y_i = x_i^2`.
    pub fn to_element(&self) -> Element {
        Element::from_terms(
            self.0
                .iter()
                .map(|(m, c)| (Monomial(m.0.iter().map(|e| 2 * e).collect()), c.clone())),
        )
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.0.filtration_degree()
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render("y"))
    }
}

impl Add for &CenterPoly {
    type Output = CenterPoly;
    fn add(self, rhs: &CenterPoly) -> CenterPoly {
        CenterPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &CenterPoly {
    type Output = CenterPoly;
    fn sub(self, rhs: &CenterPoly) -> CenterPoly {
        CenterPoly(&self.0 - &rhs.0)
    }
}

impl Mul for &CenterPoly {
    type Output = CenterPoly;
    fn mul(self, rhs: &CenterPoly) -> CenterPoly {
        CenterPoly::mul(self, rhs)
    }
}

impl Neg for &CenterPoly {
    type Output = CenterPoly;
    fn neg(self) -> CenterPoly {
        CenterPoly(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(n: usize, i: usize) -> CenterPoly {
        CenterPoly::var(n, i)
    }

    #[test]
    fn exact_division_round_trip() {
        let a = &(&y(2, 0) * &y(2, 1)) - &CenterPoly::constant(2, Scalar::from_ratio(1, 4));
        let b = &y(2, 0) + &CenterPoly::constant(2, Scalar::q());
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), Some(a.clone()));
        assert_eq!(prod.div_exact(&a).unwrap(), Some(b.clone()));
        assert_eq!(a.div_exact(&b).unwrap(), None);
    }

    #[test]
    fn display_uses_y_names() {
        let a = &(&y(2, 0) * &y(2, 1)) - &CenterPoly::constant(2, Scalar::from_ratio(1, 4));
        assert_eq!(a.to_string(), "y1*y2 - 1/4");
    }

    #[test]
    fn substitution_permutes_and_scales() {
        let p = &y(3, 0) * &y(3, 0);
        let sigma = Perm::parse(3, "(123)").unwrap();
        let s = p.substitute(&sigma, &[Scalar::from_int(2), Scalar::one(), Scalar::one()]);
        assert_eq!(s, (&y(3, 1) * &y(3, 1)).scale(&Scalar::from_int(4)));
    }
}
