//! Algebra endomorphisms given by the images of the generators.

use std::collections::HashMap;

use super::{AlgebraError, Element, PbwAlgebra};

/// The map `x_i ↦ images[i]`, extended multiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    images: Vec<Element>,
}

impl AlgebraMap {
    pub fn new(images: Vec<Element>) -> Self {
        AlgebraMap { images }
    }

    pub fn identity(n: usize) -> Self {
        AlgebraMap {
            images: (0..n).map(|i| Element::var(n, i)).collect(),
        }
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        let n = self.images.len();
        self.images
            .iter()
            .enumerate()
            .all(|(i, u)| *u == Element::var(n, i))
    }

    pub fn is_valid<A: PbwAlgebra + ?Sized>(&self, alg: &A) -> Result<bool, AlgebraError> {
        alg.relations_preserved(&self.images)
    }

    /// Image of `u`, substituting into each ordered monomial.
    pub fn apply<A: PbwAlgebra + ?Sized>(&self, alg: &A, u: &Element) -> Element {
        let mut powers: HashMap<(usize, u32), Element> = HashMap::new();
        let mut out = Element::zero();
        for (m, c) in u.iter() {
            let mut acc = alg.one();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power(alg, &self.images[i], i, e, &mut powers);
                acc = alg.mul(&acc, &p);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose<A: PbwAlgebra + ?Sized>(&self, alg: &A, inner: &AlgebraMap) -> AlgebraMap {
        AlgebraMap {
            images: inner.images.iter().map(|u| self.apply(alg, u)).collect(),
        }
    }
}

fn power<A: PbwAlgebra + ?Sized>(
    alg: &A,
    base: &Element,
    i: usize,
    e: u32,
    cache: &mut HashMap<(usize, u32), Element>,
) -> Element {
    if e == 1 {
        return base.clone();
    }
    if let Some(p) = cache.get(&(i, e)) {
        return p.clone();
    }
    let half = power(alg, base, i, e / 2, cache);
    let mut p = alg.mul(&half, &half);
    if e % 2 == 1 {
        p = alg.mul(&p, base);
    }
    cache.insert((i, e), p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::scalar::Scalar;

    #[test]
    fn swap_on_w2() {
        let w2 = Presentation::weyl(2);
        let swap = AlgebraMap::new(vec![w2.generator(1), w2.generator(0)]);
        assert!(swap.is_valid(&w2).unwrap());
        let u = w2.normal_form(&[1, 1, 2]).unwrap();
        let image = swap.apply(&w2, &u);
        assert_eq!(image, w2.normal_form(&[2, 2, 1]).unwrap());
        assert!(swap.compose(&w2, &swap).is_identity());
    }

    #[test]
    fn scaling_that_breaks_relations() {
        let w2 = Presentation::weyl(2);
        let bad = AlgebraMap::new(vec![w2.generator(0).scale(&Scalar::from_int(2)), w2.generator(1)]);
        assert!(!bad.is_valid(&w2).unwrap());
        let neg = AlgebraMap::new(vec![-&w2.generator(0), -&w2.generator(1)]);
        assert!(neg.is_valid(&w2).unwrap());
    }
}
