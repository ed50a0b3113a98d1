//! Square roots inside a number field.
//!
//! Degrees one and two are solved in closed form. For higher degrees a
//! candidate root is recovered from the complex embeddings and accepted only
//! after exact verification, so a returned root is always correct; very large
//! coefficients can be missed.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::number_field::{rational_sqrt, Nf, NumberField};

pub(crate) fn nf_sqrt(x: &Nf, field: &NumberField) -> Option<Nf> {
    if x.is_zero() {
        return Some(Nf::zero());
    }
    if let Some(r) = x.as_rational() {
        if let Some(s) = rational_sqrt(&r) {
            return Some(Nf::from_rational(s));
        }
    }
    let root = match field.degree() {
        1 => None,
        2 => quadratic_sqrt(x, field),
        _ => embedding_sqrt(x, field),
    }?;
    Some(normalize_sign(root))
}

fn normalize_sign(root: Nf) -> Nf {
    if root.is_negative_leading() {
        root.neg()
    } else {
        root
    }
}

fn quadratic_sqrt(x: &Nf, field: &NumberField) -> Option<Nf> {
    let m = field.minpoly();
    let b = BigRational::from_integer(m[1].clone());
    let c = BigRational::from_integer(m[0].clone());
    let disc = &b * &b - BigRational::from_integer(4.into()) * &c;
    let two = BigRational::from_integer(2.into());
    let x0 = x.0.first().cloned().unwrap_or_else(BigRational::zero);
    let x1 = x.0.get(1).cloned().unwrap_or_else(BigRational::zero);
    // x = u + v*sqrt(D) with sqrt(D) = 2a + b.
    let u = &x0 - &x1 * &b / &two;
    let v = &x1 / &two;
    // p + r*sqrt(D) = (p + r*b) + 2r*a
    let to_nf = |p: BigRational, r: BigRational| {
        Nf::from_vec(vec![&p + &r * &b, &two * &r])
    };
    let check = |cand: Nf| (cand.mul(&cand, field) == *x).then_some(cand);
    if v.is_zero() {
        if let Some(p) = rational_sqrt(&u) {
            return check(to_nf(p, BigRational::zero()));
        }
        let r = rational_sqrt(&(&u / &disc))?;
        return check(to_nf(BigRational::zero(), r));
    }
    let norm = &u * &u - &disc * &v * &v;
    let s = rational_sqrt(&norm)?;
    for half in [(&u + &s) / &two, (&u - &s) / &two] {
        if let Some(p) = rational_sqrt(&half) {
            if p.is_zero() {
                continue;
            }
            let r = &v / (&two * &p);
            if let Some(root) = check(to_nf(p, r)) {
                return Some(root);
            }
        }
    }
    None
}

fn embedding_sqrt(x: &Nf, field: &NumberField) -> Option<Nf> {
    let d = field.degree();
    if d > 12 {
        return None;
    }
    let roots = complex_roots(field.minpoly())?;
    let values: Vec<Complex64> = roots
        .iter()
        .map(|alpha| {
            x.0.iter()
                .enumerate()
                .map(|(k, c)| alpha.powu(k as u32) * c.to_f64().unwrap_or(f64::NAN))
                .sum::<Complex64>()
                .sqrt()
        })
        .collect();
    for signs in 0u32..(1 << d) {
        let w: Vec<Complex64> = values
            .iter()
            .enumerate()
            .map(|(k, v)| if signs >> k & 1 == 1 { -v } else { *v })
            .collect();
        let Some(coeffs) = solve_vandermonde(&roots, &w) else {
            continue;
        };
        if coeffs.iter().any(|c| c.im.abs() > 1e-6 * (1.0 + c.re.abs())) {
            continue;
        }
        let Some(rats) = coeffs
            .iter()
            .map(|c| rationalize(c.re))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let cand = Nf::from_vec(rats);
        if cand.mul(&cand, field) == *x {
            return Some(cand);
        }
    }
    None
}

/// Durand-Kerner iteration for the complex roots of a monic polynomial.
fn complex_roots(minpoly: &[BigInt]) -> Option<Vec<Complex64>> {
    let coeffs: Vec<f64> = minpoly.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let d = coeffs.len() - 1;
    let eval = |z: Complex64| {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots.iter().all(|z| z.re.is_finite() && z.im.is_finite()).then_some(roots)
}

fn solve_vandermonde(nodes: &[Complex64], rhs: &[Complex64]) -> Option<Vec<Complex64>> {
    let d = nodes.len();
    let mut m: Vec<Vec<Complex64>> = nodes
        .iter()
        .zip(rhs)
        .map(|(z, w)| {
            let mut row: Vec<Complex64> = (0..d).map(|k| z.powu(k as u32)).collect();
            row.push(*w);
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))?;
        if m[pivot][col].norm() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..d {
            if row != col {
                let f = m[row][col] / m[col][col];
                for k in col..=d {
                    let v = m[col][k];
                    m[row][k] -= f * v;
                }
            }
        }
    }
    Some((0..d).map(|i| m[i][d] / m[i][i]).collect())
}

/// Continued-fraction approximation with denominator at most 10^7, accepted
/// only within a tight tolerance.
fn rationalize(x: f64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rest = x;
    for _ in 0..40 {
        let a = rest.floor() as i128;
        (h0, h1) = (h1, a.checked_mul(h1)?.checked_add(h0)?);
        (k0, k1) = (k1, a.checked_mul(k1)?.checked_add(k0)?);
        if k1 > 10_000_000 {
            return None;
        }
        if (h1 as f64 / k1 as f64 - x).abs() <= 1e-9 * (1.0 + x.abs()) {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = rest - rest.floor();
        if frac.abs() < 1e-15 {
            return None;
        }
        rest = 1.0 / frac;
    }
    None
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
    fn quadratic_roots_of_unity() {
        // a is a primitive sixth root of unity; a - 1 = a^2.
        let k = field(&[1, -1, 1]);
        let root = nf_sqrt(&nf(&[-1, 1]), &k).unwrap();
        assert_eq!(root.mul(&root, &k), nf(&[-1, 1]));
        // -3 = (2a - 1)^2
        let root = nf_sqrt(&nf(&[-3]), &k).unwrap();
        assert_eq!(root.mul(&root, &k), nf(&[-3]));
        // a itself is not a square: sqrt(zeta_6) = zeta_12.
        assert!(nf_sqrt(&nf(&[0, 1]), &k).is_none());
        assert!(nf_sqrt(&nf(&[-1]), &k).is_none());
    }

    #[test]
    fn cubic_field_roots_are_verified() {
        // a^3 = 2
        let k = field(&[-2, 0, 0, 1]);
        let s = nf(&[1, 1, 3]);
        let sq = s.mul(&s, &k);
        let root = nf_sqrt(&sq, &k).unwrap();
        assert_eq!(root.mul(&root, &k), sq);
        assert!(nf_sqrt(&nf(&[0, 1]), &k).is_none());
    }

    #[test]
    fn rational_inputs() {
        let k = field(&[1, 0, 1]);
        assert_eq!(nf_sqrt(&nf(&[4]), &k), Some(nf(&[2])));
        // -1 = a^2 in Q(i)
        let r = nf_sqrt(&nf(&[-1]), &k).unwrap();
        assert_eq!(r.mul(&r, &k), nf(&[-1]));
        assert!(nf_sqrt(&nf(&[2]), &k).is_none());
    }
}
