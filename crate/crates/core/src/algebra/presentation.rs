//! The algebras `V_n(A)`: generators `x1..xn` with
//! `x_i x_j + x_j x_i = a_ij` for `i != j`.

use std::sync::Arc;

use super::{AlgebraError, Element, Monomial, PbwAlgebra};
use crate::scalar::{NumberField, Scalar};

/// Dimension `n` and the symmetric parameter matrix `(a_ij)`; the diagonal
/// is stored as zero and never read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    a: Vec<Vec<Scalar>>,
    field: Arc<NumberField>,
}

impl Presentation {
    /// Builds a presentation from a full matrix, checking symmetry.
    pub fn new(field: Arc<NumberField>, matrix: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let n = matrix.len();
        if n < 2 {
            return Err(AlgebraError::InvalidPresentation(format!(
                "need at least 2 generators, got {n}"
            )));
        }
        if matrix.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::InvalidPresentation("matrix is not square".into()));
        }
        let mut a = matrix;
        for i in 0..n {
            a[i][i] = Scalar::zero();
            for j in 0..n {
                if a[i][j] != a[j][i] {
                    return Err(AlgebraError::InvalidPresentation(format!(
                        "a[{},{}] != a[{},{}]",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                if let Some(f) = a[i][j].field() {
                    if **f != *field {
                        return Err(crate::scalar::ScalarError::FieldMismatch.into());
                    }
                }
            }
        }
        Ok(Presentation { n, a, field })
    }

    /// Builds from 1-based upper-triangular entries `(i, j, a_ij)` with
    /// `i < j`; missing entries are zero.
    pub fn from_upper(
        n: usize,
        field: Arc<NumberField>,
        entries: &[(usize, usize, Scalar)],
    ) -> Result<Self, AlgebraError> {
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, j, c) in entries {
            if !(1 <= *i && i < j && *j <= n) {
                return Err(AlgebraError::InvalidPresentation(format!(
                    "entry a[{i},{j}] is not above the diagonal of a {n}x{n} matrix"
                )));
            }
            m[i - 1][j - 1] = c.clone();
            m[j - 1][i - 1] = c.clone();
        }
        Presentation::new(field, m)
    }

    /// Entries from a function of 0-based `(i, j)`, `i < j`.
    pub fn from_fn(
        n: usize,
        field: Arc<NumberField>,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Result<Self, AlgebraError> {
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = f(i, j);
                m[i][j] = c.clone();
                m[j][i] = c;
            }
        }
        Presentation::new(field, m)
    }

    /// `W_n`: every `a_ij = 1`.
    pub fn weyl(n: usize) -> Self {
        Presentation::from_fn(n, Arc::new(NumberField::rationals()), |_, _| Scalar::one())
            .expect("W_n is a valid presentation for n >= 2")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_ij` for 0-based indices.
    pub fn a(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.a
    }

    pub fn number_field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// True when every off-diagonal entry is nonzero.
    pub fn all_nonzero(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| !self.a[i][j].is_zero()))
    }

    /// `x_j * u` for a 0-based generator `j`.
    pub fn left_mul_generator(&self, j: usize, u: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in u.iter() {
            let e = &m.0;
            // Passing x_j leftward over x_i^{e_i} flips the sign e_i times;
            // an odd e_i also leaves a_ij x_i^{e_i - 1} behind.
            let mut parity = 0u32;
            for i in 0..j {
                if e[i] % 2 == 1 && !self.a[i][j].is_zero() {
                    let mut f = e.clone();
                    f[i] -= 1;
                    let coef = c * &self.a[i][j];
                    out.add_term(Monomial(f), if parity.is_multiple_of(2) { coef } else { -coef });
                }
                parity += e[i];
            }
            let mut f = e.clone();
            f[j] += 1;
            out.add_term(
                Monomial(f),
                if parity.is_multiple_of(2) { c.clone() } else { -c },
            );
        }
        out
    }
}

impl PbwAlgebra for Presentation {
    fn ngens(&self) -> usize {
        self.n
    }

    fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> Element {
        // x^e = (prod x_i^{2 k_i}) * b_eps with the squares central, so
        // x^e * x^f = squares * (b_eps * x^f).
        let mut acc = Element::term(y.clone(), Scalar::one());
        for j in (0..self.n).rev() {
            if x.0[j] % 2 == 1 {
                acc = self.left_mul_generator(j, &acc);
            }
        }
        if x.0.iter().all(|&e| e < 2) {
            return acc;
        }
        Element::from_terms(acc.into_terms().into_iter().map(|(mut m, c)| {
            for (k, &e) in x.0.iter().enumerate() {
                m.0[k] += e - e % 2;
            }
            (m, c)
        }))
    }

    fn relations_preserved(&self, images: &[Element]) -> Result<bool, AlgebraError> {
        if images.len() != self.n {
            return Err(AlgebraError::PresentationMismatch {
                expected: self.n,
                found: images.len(),
            });
        }
        for u in images {
            self.check(u)?;
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                let lhs = &self.mul(&images[i], &images[j]) + &self.mul(&images[j], &images[i]);
                if lhs != self.constant(self.a[i][j].clone()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
