//! Trace-form discriminant of `V_n(A)` over the central subalgebra
//! `C = k[y1..yn]`, `y_i = x_i^2`, with respect to the basis of square-free
//! monomials `b_eps`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Element, Monomial, PbwAlgebra, Presentation};
use crate::autgroup::AffineAuto;
use crate::poly::CenterPoly;
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiscriminantError {
    #[error("trace matrix is singular")]
    ZeroDeterminant,
    #[error("g(d) is not a scalar multiple of d")]
    NotProportional,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Square-free monomial `b_eps`; bit `i` of `eps` marks `x_{i+1}`.
pub fn basis_monomial(n: usize, eps: u32) -> Monomial {
    Monomial((0..n).map(|i| eps >> i & 1).collect())
}

/// Writes `u = Σ_eps c_eps(y) b_eps`; zero components are omitted.
pub fn central_decompose(u: &Element) -> BTreeMap<u32, CenterPoly> {
    let mut out: BTreeMap<u32, CenterPoly> = BTreeMap::new();
    for (m, c) in u.iter() {
        let n = m.nvars();
        let eps = m.0.iter().enumerate().fold(0u32, |acc, (i, e)| acc | (e % 2) << i);
        let y = Monomial(m.0.iter().map(|e| e / 2).collect());
        out.entry(eps)
            .or_insert_with(CenterPoly::zero)
            .add_term(y, c.clone());
        debug_assert_eq!(n, m.nvars());
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Inverse of [`central_decompose`].
pub fn reconstruct(n: usize, parts: &BTreeMap<u32, CenterPoly>) -> Element {
    let mut out = Element::zero();
    for (&eps, p) in parts {
        for (m, c) in p.terms().iter() {
            let e = (0..n).map(|i| 2 * m.0[i] + (eps >> i & 1)).collect();
            out.add_term(Monomial(e), c.clone());
        }
    }
    out
}

/// Trace of left multiplication by `u` on the free `C`-module with basis
/// `{b_eps}`.
pub fn internal_trace(pres: &Presentation, u: &Element) -> CenterPoly {
    let n = pres.n();
    let mut out = CenterPoly::zero();
    for eps in 0..1u32 << n {
        let b = Element::term(basis_monomial(n, eps), Scalar::one());
        if let Some(c) = central_decompose(&pres.mul(u, &b)).get(&eps) {
            out = &out + c;
        }
    }
    out
}

/// The `2^n x 2^n` matrix `tr(b_eps * b_eps')`.
pub fn trace_matrix(pres: &Presentation) -> Vec<Vec<CenterPoly>> {
    let n = pres.n();
    let size = 1usize << n;
    let basis: Vec<Element> = (0..size as u32)
        .map(|e| Element::term(basis_monomial(n, e), Scalar::one()))
        .collect();
    let basis_traces: Vec<CenterPoly> = basis
        .par_iter()
        .map(|b| internal_trace(pres, b))
        .collect();
    (0..size)
        .into_par_iter()
        .map(|i| {
            (0..size)
                .map(|j| {
                    let mut entry = CenterPoly::zero();
                    for (delta, c) in central_decompose(&pres.mul(&basis[i], &basis[j])) {
                        let t = &basis_traces[delta as usize];
                        if !t.is_zero() {
                            entry = &entry + &(&c * t);
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination after splitting the matrix into
/// the blocks given by connected components of its nonzero pattern.
pub fn determinant(matrix: &[Vec<CenterPoly>], n: usize) -> Result<CenterPoly, DiscriminantError> {
    let size = matrix.len();
    let mut component = vec![usize::MAX; size];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..size {
        if component[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = vec![start];
        component[start] = id;
        let mut k = 0;
        while k < block.len() {
            let i = block[k];
            for j in 0..size {
                if component[j] == usize::MAX
                    && (!matrix[i][j].is_zero() || !matrix[j][i].is_zero())
                {
                    component[j] = id;
                    block.push(j);
                }
            }
            k += 1;
        }
        block.sort_unstable();
        blocks.push(block);
    }
    let dets: Vec<Result<CenterPoly, DiscriminantError>> = blocks
        .par_iter()
        .map(|block| {
            let sub: Vec<Vec<CenterPoly>> = block
                .iter()
                .map(|&i| block.iter().map(|&j| matrix[i][j].clone()).collect())
                .collect();
            bareiss(sub, n)
        })
        .collect();
    let mut det = CenterPoly::constant(n, Scalar::one());
    for d in dets {
        det = &det * &d?;
    }
    Ok(det)
}

fn bareiss(mut m: Vec<Vec<CenterPoly>>, n: usize) -> Result<CenterPoly, DiscriminantError> {
    let size = m.len();
    let mut prev = CenterPoly::constant(n, Scalar::one());
    let mut negate = false;
    for k in 0..size {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return Err(DiscriminantError::ZeroDeterminant);
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)?
                    .expect("Bareiss quotients are exact");
            }
            m[i][k] = CenterPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[derive(Clone, Debug, Serialize)]
pub struct Discriminant {
    pub n: usize,
    /// Determinant of the trace matrix scaled to leading coefficient 1.
    #[serde(serialize_with = "crate::report::display")]
    pub poly: CenterPoly,
    /// The raw leading coefficient removed by normalization.
    #[serde(serialize_with = "crate::report::display")]
    pub unit: Scalar,
    /// Set for odd `n`, where `C` is smaller than the center.
    pub note: Option<String>,
}

impl Discriminant {
    pub fn leading_monomial(&self) -> &Monomial {
        self.poly.leading_term().expect("discriminant is nonzero").0
    }
}

pub fn discriminant(pres: &Presentation) -> Result<Discriminant, DiscriminantError> {
    let n = pres.n();
    let det = determinant(&trace_matrix(pres), n)?;
    let unit = det
        .leading_term()
        .ok_or(DiscriminantError::ZeroDeterminant)?
        .1
        .clone();
    Ok(Discriminant {
        n,
        poly: det.normalized()?,
        unit,
        note: (n % 2 == 1).then(|| "discriminant over C, not over Z(A)".to_string()),
    })
}

/// The unit `c` with `g(d) = c * d`, where `g` acts by
/// `y_i ↦ r_i^2 y_{σ(i)}`.
pub fn check_disc_invariance(d: &Discriminant, g: &AffineAuto) -> Result<Scalar, DiscriminantError> {
    let squares: Vec<Scalar> = g.scalars().iter().map(|r| r * r).collect();
    let image = d.poly.substitute(g.perm(), &squares);
    let (m, c) = d.poly.leading_term().ok_or(DiscriminantError::ZeroDeterminant)?;
    let ratio = image.coeff(m).try_div(c)?;
    if ratio.is_zero() || image != d.poly.scale(&ratio) {
        return Err(DiscriminantError::NotProportional);
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::scalar::NumberField;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn two(a12: Scalar) -> Presentation {
        Presentation::from_upper(2, Arc::new(NumberField::rationals()), &[(1, 2, a12)]).unwrap()
    }

    fn y(n: usize, i: usize) -> CenterPoly {
        CenterPoly::var(n, i)
    }

    /// Full left-multiplication matrix of `u` over the basis, from products
    /// with every basis element.
    fn left_matrix(pres: &Presentation, u: &Element) -> Vec<Vec<CenterPoly>> {
        let n = pres.n();
        let size = 1usize << n;
        let mut cols = vec![vec![CenterPoly::zero(); size]; size];
        for eps in 0..size {
            let b = Element::term(basis_monomial(n, eps as u32), Scalar::one());
            for (delta, c) in central_decompose(&pres.mul(u, &b)) {
                cols[delta as usize][eps] = c;
            }
        }
        cols
    }

    /// Laplace expansion along the first row.
    fn laplace(m: &[Vec<CenterPoly>], n: usize) -> CenterPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut out = CenterPoly::zero();
        for j in 0..m.len() {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<CenterPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, c)| c.clone())
                        .collect()
                })
                .collect();
            let sign = Scalar::from_int(if j % 2 == 0 { 1 } else { -1 });
            out.add_scaled(&(&m[0][j] * &laplace(&minor, n)), &sign);
        }
        out
    }

    #[test]
    fn decomposition_examples() {
        let n = 3;
        let x1_cubed = Element::term(Monomial(vec![3, 0, 0]), Scalar::one());
        let parts = central_decompose(&x1_cubed);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&1], y(n, 0));
        let one = central_decompose(&Element::one(n));
        assert_eq!(one[&0], CenterPoly::constant(n, Scalar::one()));
        let u = Element::from_terms([
            (Monomial(vec![1, 2, 0]), Scalar::one()),
            (Monomial(vec![1, 0, 0]), Scalar::one()),
        ]);
        assert_eq!(central_decompose(&u)[&1], &y(n, 1) + &CenterPoly::constant(n, Scalar::one()));
    }

    #[test]
    fn trace_examples() {
        let p = Presentation::weyl(3);
        let x1 = p.generator(0);
        assert_eq!(internal_trace(&p, &p.one()), CenterPoly::constant(3, Scalar::from_int(8)));
        assert!(internal_trace(&p, &x1).is_zero());
        assert_eq!(internal_trace(&p, &p.mul(&x1, &x1)), y(3, 0).scale(&Scalar::from_int(8)));
        // Agrees with the diagonal of the explicit matrix.
        let u = p.normal_form(&[2, 1, 3, 3]).unwrap();
        let m = left_matrix(&p, &u);
        let mut diag = CenterPoly::zero();
        for (i, row) in m.iter().enumerate() {
            diag = &diag + &row[i];
        }
        assert_eq!(internal_trace(&p, &u), diag);
    }

    #[test]
    fn two_generator_discriminants() {
        // For n = 2 the raw determinant is -256 (y1 y2 - a^2/4)^2; the
        // value below was obtained from the explicit 4x4 matrix by Laplace
        // expansion and matches the normalized square.
        for a in [Scalar::zero(), Scalar::one(), Scalar::q()] {
            let p = two(a.clone());
            let tm = trace_matrix(&p);
            let raw = laplace(&tm, 2);
            let base = &(&y(2, 0) * &y(2, 1))
                - &CenterPoly::constant(2, (&a * &a).try_div(&Scalar::from_int(4)).unwrap());
            let expected = &base * &base;
            assert_eq!(raw, expected.scale(&Scalar::from_int(-256)));
            let d = discriminant(&p).unwrap();
            assert_eq!(d.poly, expected);
            assert_eq!(d.leading_monomial(), &Monomial(vec![2, 2]));
            assert!(d.note.is_none());
        }
    }

    #[test]
    fn bareiss_matches_laplace_on_three_generators() {
        let p = Presentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[(1, 2, Scalar::one()), (1, 3, Scalar::from_int(2)), (2, 3, Scalar::q())],
        )
        .unwrap();
        let tm = trace_matrix(&p);
        let lap = laplace(&tm, 3);
        assert_eq!(determinant(&tm, 3).unwrap(), lap);
        let d = discriminant(&p).unwrap();
        assert!(d.note.is_some());
    }

    #[test]
    fn invariance_under_simple_maps() {
        let d = discriminant(&Presentation::weyl(2)).unwrap();
        let id = AffineAuto::new(Perm::identity(2), vec![Scalar::one(); 2]);
        assert_eq!(check_disc_invariance(&d, &id).unwrap(), Scalar::one());
        let neg = AffineAuto::new(Perm::identity(2), vec![Scalar::from_int(-1); 2]);
        assert_eq!(check_disc_invariance(&d, &neg).unwrap(), Scalar::one());
        let bad = AffineAuto::new(Perm::identity(2), vec![Scalar::from_int(2), Scalar::one()]);
        assert!(matches!(
            check_disc_invariance(&d, &bad),
            Err(DiscriminantError::NotProportional)
        ));
    }

    fn small_element() -> impl Strategy<Value = Element> {
        prop::collection::vec((prop::collection::vec(0u32..5, 3), -3i64..4), 0..5).prop_map(
            |terms| {
                Element::from_terms(
                    terms
                        .into_iter()
                        .map(|(e, c)| (Monomial(e), Scalar::from_int(c))),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn decompose_then_reconstruct(u in small_element()) {
            prop_assert_eq!(reconstruct(3, &central_decompose(&u)), u);
        }

        #[test]
        fn trace_is_symmetric(
            a in prop::collection::vec(-3i64..4, 3),
            u in small_element(), v in small_element(),
        ) {
            let p = Presentation::from_upper(
                3,
                Arc::new(NumberField::rationals()),
                &[
                    (1, 2, Scalar::from_int(a[0])),
                    (1, 3, Scalar::from_int(a[1])),
                    (2, 3, Scalar::from_int(a[2])),
                ],
            ).unwrap();
            prop_assert_eq!(internal_trace(&p, &p.mul(&u, &v)), internal_trace(&p, &p.mul(&v, &u)));
        }

        #[test]
        fn leading_monomial_for_two_generators(a in -20i64..20, b in 1i64..5) {
            prop_assume!(a != 0);
            let p = two(Scalar::from_ratio(a, b));
            let d = discriminant(&p).unwrap();
            prop_assert_eq!(d.leading_monomial(), &Monomial(vec![2, 2]));
        }
    }
}
