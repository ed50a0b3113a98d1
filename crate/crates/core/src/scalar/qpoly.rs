//! Univariate polynomials in `q` with number-field coefficients.
//!
//! Coefficients are ascending in `q`; the vector is trimmed so the zero
//! polynomial is empty.

use num_rational::BigRational;
use num_traits::Zero;

use super::number_field::{Nf, NumberField};
use super::sqrt::nf_sqrt;
use super::ScalarError;

pub(crate) type QPoly = Vec<Nf>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Nf::is_zero) {
        p.pop();
    }
}

pub(crate) fn is_one(p: &QPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(b.len());
    let mut out: QPoly = (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &QPoly) -> QPoly {
    a.iter().map(Nf::neg).collect()
}

pub(crate) fn scale(a: &QPoly, c: &Nf, field: &NumberField) -> QPoly {
    if c.is_zero() {
        return Vec::new();
    }
    if c.is_one() {
        return a.clone();
    }
    let mut out: QPoly = a.iter().map(|x| x.mul(c, field)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &QPoly, b: &QPoly, field: &NumberField) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return scale(b, &a[0], field);
    }
    if b.len() == 1 {
        return scale(a, &b[0], field);
    }
    let mut out = vec![Nf::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y, field));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn divrem(
    a: &QPoly,
    b: &QPoly,
    field: &NumberField,
) -> Result<(QPoly, QPoly), ScalarError> {
    if b.is_empty() {
        return Err(ScalarError::DivisionByZero);
    }
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let lc_inv = b.last().unwrap().inv(field)?;
    let mut q = vec![Nf::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().mul(&lc_inv, field);
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&c.mul(bc, field));
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    Ok((q, r))
}

pub(crate) fn make_monic(a: &QPoly, field: &NumberField) -> Result<QPoly, ScalarError> {
    match a.last() {
        None => Ok(Vec::new()),
        Some(lc) if lc.is_one() => Ok(a.clone()),
        Some(lc) => Ok(scale(a, &lc.inv(field)?, field)),
    }
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &QPoly, b: &QPoly, field: &NumberField) -> Result<QPoly, ScalarError> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, field)?;
        x = std::mem::replace(&mut y, r);
    }
    make_monic(&x, field)
}

/// Square root in `K0[q]` when one exists.
pub(crate) fn sqrt(p: &QPoly, field: &NumberField) -> Option<QPoly> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let deg = p.len() - 1;
    if deg % 2 == 1 {
        return None;
    }
    let half = deg / 2;
    let lead = nf_sqrt(p.last().unwrap(), field)?;
    let two_lead_inv = lead
        .scale(&BigRational::from_integer(2.into()))
        .inv(field)
        .ok()?;
    // s[k] is the coefficient of q^(half - k) in the root.
    let mut s: Vec<Nf> = vec![lead];
    for k in 1..=half {
        let mut acc = p[deg - k].clone();
        for i in 1..k {
            acc = acc.sub(&s[i].mul(&s[k - i], field));
        }
        s.push(acc.mul(&two_lead_inv, field));
    }
    let root: QPoly = {
        let mut r: QPoly = s.into_iter().rev().collect();
        trim(&mut r);
        r
    };
    (mul(&root, &root, field) == *p).then_some(root)
}

pub(crate) fn all_rational(p: &QPoly) -> bool {
    p.iter().all(Nf::is_rational)
}

pub(crate) fn one() -> QPoly {
    vec![Nf::one()]
}

pub(crate) fn is_zero(p: &QPoly) -> bool {
    p.is_empty()
}

pub(crate) fn q_power(k: usize) -> QPoly {
    let mut p = vec![Nf::zero(); k + 1];
    p[k] = Nf::one();
    p
}

pub(crate) fn from_rational(r: BigRational) -> QPoly {
    if r.is_zero() {
        Vec::new()
    } else {
        vec![Nf::from_rational(r)]
    }
}
