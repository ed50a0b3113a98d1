//! Normal-form arithmetic in algebras with a PBW basis of ordered monomials
//! `x1^e1 * ... * xn^en`.

mod element;
mod map;
mod presentation;

use std::collections::HashMap;
use std::sync::Arc;

pub use element::{Element, Monomial, Parity};
pub use map::AlgebraMap;
pub use presentation::Presentation;

use crate::scalar::{NumberField, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("generator index {index} out of range 1..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("element has {found} variables, algebra has {expected}")]
    PresentationMismatch { expected: usize, found: usize },
    #[error("generator index {0} repeated")]
    RepeatedIndex(usize),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An algebra on generators `x1..xn` whose ordered monomials form a basis.
///
/// Implementors supply the product of two basis monomials; everything else
/// is derived by bilinearity.
pub trait PbwAlgebra: Sync {
    fn ngens(&self) -> usize;

    fn field(&self) -> &Arc<NumberField>;

    /// Normal form of the product `x^e * x^f`.
    fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> Element;

    /// Whether sending `x_i` to `images[i]` respects every defining
    /// relation.
    fn relations_preserved(&self, images: &[Element]) -> Result<bool, AlgebraError>;

    fn check(&self, u: &Element) -> Result<(), AlgebraError> {
        match u.nvars() {
            Some(found) if found != self.ngens() => Err(AlgebraError::PresentationMismatch {
                expected: self.ngens(),
                found,
            }),
            _ => Ok(()),
        }
    }

    /// Checked product.
    fn multiply(&self, u: &Element, v: &Element) -> Result<Element, AlgebraError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    /// Product of elements already known to live in this algebra.
    fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in u.iter() {
            for (m2, c2) in v.iter() {
                let prod = self.mul_monomials(m1, m2);
                out.add_scaled(&prod, &(c1 * c2));
            }
        }
        out
    }

    fn one(&self) -> Element {
        Element::one(self.ngens())
    }

    /// Generator with 0-based index.
    fn generator(&self, i: usize) -> Element {
        Element::var(self.ngens(), i)
    }

    fn constant(&self, c: Scalar) -> Element {
        Element::constant(self.ngens(), c)
    }

    fn pow(&self, u: &Element, k: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, u);
        }
        acc
    }

    fn commutator(&self, u: &Element, v: &Element) -> Element {
        &self.mul(u, v) - &self.mul(v, u)
    }

    /// Normal form of a word of 1-based generator indices; the empty word
    /// is `1`.
    fn normal_form(&self, word: &[usize]) -> Result<Element, AlgebraError> {
        let n = self.ngens();
        let mut acc = self.one();
        for &index in word {
            if index == 0 || index > n {
                return Err(AlgebraError::IndexOutOfRange { index, n });
            }
            acc = self.mul(&acc, &self.generator(index - 1));
        }
        Ok(acc)
    }

    fn is_central(&self, u: &Element) -> bool {
        (0..self.ngens()).all(|i| {
            let x = self.generator(i);
            self.mul(u, &x) == self.mul(&x, u)
        })
    }

    /// Alternating sum over all orderings of the given distinct 1-based
    /// generators, signed by the permutation relative to the given order.
    fn omega(&self, indices: &[usize]) -> Result<Element, AlgebraError> {
        let n = self.ngens();
        for (k, &index) in indices.iter().enumerate() {
            if index == 0 || index > n {
                return Err(AlgebraError::IndexOutOfRange { index, n });
            }
            if indices[..k].contains(&index) {
                return Err(AlgebraError::RepeatedIndex(index));
            }
        }
        let mut memo = HashMap::new();
        Ok(omega_rec(self, indices, (1u64 << indices.len()) - 1, &mut memo))
    }

    /// The sign `s` with `x_i * omega = s * omega * x_i`, if any.
    fn anticommutation_sign(&self, omega: &Element, i: usize) -> Option<i32> {
        let x = self.generator(i);
        let left = self.mul(&x, omega);
        let right = self.mul(omega, &x);
        if left == right {
            Some(1)
        } else if left == -&right {
            Some(-1)
        } else {
            None
        }
    }
}

// Expands along the first letter: each choice of `s_k` from the remaining
// positions contributes (-1)^(rank of k among them).
fn omega_rec<A: PbwAlgebra + ?Sized>(
    alg: &A,
    indices: &[usize],
    mask: u64,
    memo: &mut HashMap<u64, Element>,
) -> Element {
    if mask == 0 {
        return alg.one();
    }
    if let Some(e) = memo.get(&mask) {
        return e.clone();
    }
    let mut out = Element::zero();
    let mut rank = 0;
    for (k, &index) in indices.iter().enumerate() {
        if mask >> k & 1 == 0 {
            continue;
        }
        let rest = omega_rec(alg, indices, mask & !(1 << k), memo);
        let term = alg.mul(&alg.generator(index - 1), &rest);
        let sign = if rank % 2 == 0 { 1 } else { -1 };
        out.add_scaled(&term, &Scalar::from_int(sign));
        rank += 1;
    }
    memo.insert(mask, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn generic3() -> Presentation {
        Presentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[
                (1, 2, Scalar::from_int(2)),
                (1, 3, Scalar::from_int(3)),
                (2, 3, Scalar::from_int(5)),
            ],
        )
        .unwrap()
    }

    /// Sum over all orderings by explicit permutation enumeration.
    fn omega_brute(alg: &Presentation, indices: &[usize]) -> Element {
        let t = indices.len();
        let mut out = Element::zero();
        for p in Perm::all(t) {
            let word: Vec<usize> = (0..t).map(|k| indices[p.apply(k)]).collect();
            let sign = if p.is_even() { 1 } else { -1 };
            out.add_scaled(&alg.normal_form(&word).unwrap(), &Scalar::from_int(sign));
        }
        out
    }

    #[test]
    fn omega_matches_brute_force() {
        let alg = generic3();
        for s in [vec![1], vec![1, 2], vec![2, 3], vec![3, 1], vec![1, 2, 3], vec![3, 1, 2]] {
            assert_eq!(alg.omega(&s).unwrap(), omega_brute(&alg, &s));
        }
    }

    #[test]
    fn omega_small_cases() {
        let alg = generic3();
        assert_eq!(alg.omega(&[1]).unwrap(), alg.generator(0));
        // x1 x2 - x2 x1 = 2 x1 x2 - a12
        let expected = &Element::term(Monomial(vec![1, 1, 0]), Scalar::from_int(2))
            - &alg.constant(Scalar::from_int(2));
        assert_eq!(alg.omega(&[1, 2]).unwrap(), expected);
        let om = alg.omega(&[1, 2, 3]).unwrap();
        assert_eq!(om.filtration_degree(), Some(3));
        assert!(alg.is_central(&om));
        assert!(matches!(alg.omega(&[1, 1]), Err(AlgebraError::RepeatedIndex(1))));
    }

    #[test]
    fn index_errors() {
        let alg = generic3();
        assert!(matches!(
            alg.normal_form(&[4]),
            Err(AlgebraError::IndexOutOfRange { index: 4, n: 3 })
        ));
        assert_eq!(alg.normal_form(&[]).unwrap(), alg.one());
        let wrong = Element::var(2, 0);
        assert!(matches!(
            alg.multiply(&wrong, &alg.generator(0)),
            Err(AlgebraError::PresentationMismatch { expected: 3, found: 2 })
        ));
    }
}
