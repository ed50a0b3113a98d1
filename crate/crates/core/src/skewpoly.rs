//! Skew polynomial rings `x_j x_i = p_ij x_i x_j` (`i < j`), the exponent
//! sets `T_s`, and triangular automorphisms built from them.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraError, Element, Monomial, PbwAlgebra};
use crate::freeness::{validate_elementary, ElementaryAuto};
use crate::scalar::{NumberField, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkewError {
    #[error("need n >= 3, found {0}")]
    TooFewGenerators(usize),
    #[error("p[{0},{1}] must be nonzero")]
    ZeroParameter(usize, usize),
    #[error("exponent vector has {found} entries, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("no root-of-unity structure declared")]
    NoStructure,
    #[error("{0:?} is not in T_{1}")]
    NotInTs(Vec<u64>, usize),
    #[error("exponent vectors must start with 1 and have some nonzero tail entry")]
    DegenerateExponents,
    #[error("constructed map is not an automorphism")]
    InvalidConstruction,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `p_ij = ζ^{e_ij}` with `ζ` a primitive `N`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootStructure {
    pub order: u32,
    pub exponents: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPresentation {
    n: usize,
    p: Vec<Vec<Scalar>>,
    field: Arc<NumberField>,
    roots: Option<RootStructure>,
}

impl SkewPresentation {
    /// `entries` are 1-based `(i, j, p_ij)` with `i < j`; missing entries are 1.
    pub fn from_upper(
        n: usize,
        field: Arc<NumberField>,
        entries: &[(usize, usize, Scalar)],
    ) -> Result<Self, SkewError> {
        if n < 3 {
            return Err(SkewError::TooFewGenerators(n));
        }
        let mut p = vec![vec![Scalar::one(); n]; n];
        for (i, j, v) in entries {
            let (i, j) = (i - 1, j - 1);
            if v.is_zero() {
                return Err(SkewError::ZeroParameter(i + 1, j + 1));
            }
            p[j][i] = v.inv().expect("nonzero");
            p[i][j] = v.clone();
        }
        Ok(SkewPresentation {
            n,
            p,
            field,
            roots: None,
        })
    }

    /// `p_ij = ζ^{e_ij}` over the `N`-th cyclotomic field; `entries` are
    /// 1-based `(i, j, e_ij)` with `i < j`, missing entries 0.
    pub fn from_roots(n: usize, order: u32, entries: &[(usize, usize, i64)]) -> Result<Self, SkewError> {
        let field = Arc::new(NumberField::cyclotomic(order));
        let zeta = Scalar::generator(&field);
        let mut e = vec![vec![0i64; n]; n];
        for &(i, j, v) in entries {
            let m = v.rem_euclid(order as i64);
            e[i - 1][j - 1] = m;
            e[j - 1][i - 1] = (-m).rem_euclid(order as i64);
        }
        let upper: Vec<(usize, usize, Scalar)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i + 1, j + 1, zeta.pow(e[i][j]).expect("root of unity is nonzero")))
            .collect();
        let mut sp = SkewPresentation::from_upper(n, field, &upper)?;
        sp.roots = Some(RootStructure {
            order,
            exponents: e,
        });
        Ok(sp)
    }

    /// The commutative polynomial ring in `n` variables.
    pub fn commutative(n: usize) -> Result<Self, SkewError> {
        SkewPresentation::from_upper(n, Arc::new(NumberField::rationals()), &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_ij`, 0-based, with `p_ji = p_ij^{-1}` and `p_ii = 1`.
    pub fn p(&self, i: usize, j: usize) -> &Scalar {
        &self.p[i][j]
    }

    pub fn roots(&self) -> Option<&RootStructure> {
        self.roots.as_ref()
    }

    pub fn number_field(&self) -> &Arc<NumberField> {
        &self.field
    }
}

impl PbwAlgebra for SkewPresentation {
    fn ngens(&self) -> usize {
        self.n
    }

    fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// `x^e x^f = (∏_{b < a} p_ba^{e_a f_b}) x^{e+f}`.
    fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> Element {
        let mut c = Scalar::one();
        for a in 0..self.n {
            if x.0[a] == 0 {
                continue;
            }
            for b in 0..a {
                let k = x.0[a] as i64 * y.0[b] as i64;
                if k != 0 {
                    c = &c * &self.p[b][a].pow(k).expect("nonzero parameter");
                }
            }
        }
        let e = x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect();
        Element::term(Monomial(e), c)
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
                let lhs = self.mul(&images[j], &images[i]);
                let rhs = self.mul(&images[i], &images[j]).scale(&self.p[i][j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Normal form of a word of 1-based generator indices: a scalar times the
/// sorted monomial.
pub fn skew_normal_form(word: &[usize], sp: &SkewPresentation) -> Result<Element, SkewError> {
    Ok(sp.normal_form(word)?)
}

/// Exponent vector `d` with `d_s` omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TsQuery {
    pub s: usize,
    pub d: Vec<u64>,
}

impl TsQuery {
    /// `s` is 1-based.
    pub fn new(s: usize, d: Vec<u64>) -> Self {
        TsQuery { s, d }
    }

    fn full(&self, n: usize) -> Vec<u64> {
        let mut out = self.d.clone();
        out.insert(self.s - 1, 0);
        out.truncate(n);
        out
    }
}

/// Checks `∏_{j != s} p_ij^{d_j} = p_is` for every `i != s`.
pub fn ts_membership(sp: &SkewPresentation, query: &TsQuery) -> Result<bool, SkewError> {
    let n = sp.n;
    if query.d.len() != n - 1 || query.s == 0 || query.s > n {
        return Err(SkewError::WrongLength {
            expected: n - 1,
            found: query.d.len(),
        });
    }
    let s = query.s - 1;
    let d = query.full(n);
    Ok((0..n).filter(|&i| i != s).all(|i| {
        let prod: Scalar = (0..n)
            .filter(|&j| j != s && d[j] > 0)
            .map(|j| sp.p[i][j].pow(d[j] as i64).expect("nonzero"))
            .product();
        prod == sp.p[i][s]
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TsSolution {
    pub s: usize,
    /// A solution of the congruences in `[0, N)^{n-1}`, if any.
    pub particular: Option<Vec<i64>>,
    /// Triangular basis of the homogeneous solution lattice.
    pub lattice: Vec<Vec<i64>>,
    pub box_bound: u64,
    /// Members of `T_s` with every entry at most `box_bound`, sorted.
    pub members: Vec<Vec<u64>>,
}

/// Solves `Σ_{j != s} e_ij d_j ≡ e_is (mod N)` for `i != s` through the
/// Smith normal form, then lists the lattice points in `[0, box]^{n-1}`.
pub fn ts_solve(sp: &SkewPresentation, s: usize, box_bound: u64) -> Result<TsSolution, SkewError> {
    let roots = sp.roots.as_ref().ok_or(SkewError::NoStructure)?;
    let n = sp.n;
    if s == 0 || s > n {
        return Err(SkewError::WrongLength { expected: n, found: s });
    }
    let s0 = s - 1;
    let big_n = roots.order as i128;
    let others: Vec<usize> = (0..n).filter(|&j| j != s0).collect();
    let m = others.len();
    // [E | N I] (d, k)^T = b
    let mut a = vec![vec![0i128; 2 * m]; m];
    let mut b = vec![0i128; m];
    for (r, &i) in others.iter().enumerate() {
        for (c, &j) in others.iter().enumerate() {
            a[r][c] = roots.exponents[i][j] as i128;
        }
        a[r][m + r] = big_n;
        b[r] = roots.exponents[i][s0] as i128;
    }
    let snf = smith_normal_form(&a);
    let empty = TsSolution {
        s,
        particular: None,
        lattice: Vec::new(),
        box_bound,
        members: Vec::new(),
    };
    let Some(x) = snf.solve(&b) else {
        return Ok(empty);
    };
    let particular: Vec<i128> = x[..m].iter().map(|v| v.rem_euclid(big_n)).collect();
    let mut gens: Vec<Vec<i128>> = snf.kernel().into_iter().map(|k| k[..m].to_vec()).collect();
    gens.extend((0..m).map(|i| {
        let mut v = vec![0; m];
        v[i] = big_n;
        v
    }));
    let basis = triangular_basis(gens, m, big_n);
    let members = lattice_points_in_box(&particular, &basis, box_bound as i128);
    Ok(TsSolution {
        s,
        particular: Some(particular.iter().map(|&v| v as i64).collect()),
        lattice: basis.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect(),
        box_bound,
        members,
    })
}

/// Every member of `T_s` in `[0, box]^{n-1}` by direct evaluation of the
/// defining products.
pub fn ts_scan(sp: &SkewPresentation, s: usize, box_bound: u64) -> Result<Vec<Vec<u64>>, SkewError> {
    let m = sp.n - 1;
    let side = box_bound + 1;
    let total = side.pow(m as u32);
    let mut out: Vec<Vec<u64>> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut d = vec![0u64; m];
            for k in (0..m).rev() {
                d[k] = idx % side;
                idx /= side;
            }
            let q = TsQuery::new(s, d);
            match ts_membership(sp, &q) {
                Ok(true) => Some(Ok(q.d)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<_, _>>()?;
    out.sort();
    Ok(out)
}

/// `U A V = D` with `D` diagonal (`d_1 | d_2 | ...`, nonnegative).
pub struct Smith {
    pub u: Vec<Vec<i128>>,
    pub d: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub rank: usize,
}

impl Smith {
    /// Some integer solution of `A x = b`.
    pub fn solve(&self, b: &[i128]) -> Option<Vec<i128>> {
        let rows = self.d.len();
        let cols = self.v.len();
        let c: Vec<i128> = (0..rows)
            .map(|i| (0..rows).map(|k| self.u[i][k] * b[k]).sum())
            .collect();
        let mut y = vec![0i128; cols];
        for i in 0..rows {
            if i < self.rank {
                if c[i] % self.d[i][i] != 0 {
                    return None;
                }
                y[i] = c[i] / self.d[i][i];
            } else if c[i] != 0 {
                return None;
            }
        }
        Some((0..cols).map(|i| (0..cols).map(|k| self.v[i][k] * y[k]).sum()).collect())
    }

    /// A basis of the integer kernel of `A`.
    pub fn kernel(&self) -> Vec<Vec<i128>> {
        let cols = self.v.len();
        (self.rank..cols)
            .map(|k| (0..cols).map(|i| self.v[i][k]).collect())
            .collect()
    }
}

pub fn smith_normal_form(a: &[Vec<i128>]) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let ident = |k: usize| -> Vec<Vec<i128>> {
        (0..k).map(|i| (0..k).map(|j| (i == j) as i128).collect()).collect()
    };
    let mut d = a.to_vec();
    let mut u = ident(rows);
    let mut v = ident(cols);
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| d[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return Smith { u, d, v, rank };
            };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(p);
                if q != 0 {
                    for j in 0..cols {
                        d[i][j] -= q * d[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(p);
                if q != 0 {
                    for i in 0..rows {
                        d[i][j] -= q * d[i][t];
                    }
                    for i in 0..cols {
                        v[i][j] -= q * v[i][t];
                    }
                }
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        d[t][j] += d[i][j];
                    }
                    for j in 0..rows {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for j in 0..cols {
                d[t][j] = -d[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
        rank = t + 1;
    }
    Smith { u, d, v, rank }
}

/// Basis `v_0, ..., v_{m-1}` of the lattice spanned by `gens` (which must
/// contain `N Z^m`) with `v_k[j] = 0` for `j < k` and `v_k[k] > 0`.
fn triangular_basis(mut gens: Vec<Vec<i128>>, m: usize, big_n: i128) -> Vec<Vec<i128>> {
    let mut basis = Vec::with_capacity(m);
    for k in 0..m {
        // Euclid on column k until a single generator is nonzero there.
        loop {
            gens.retain(|g| g.iter().any(|&x| x != 0));
            let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| gens[i][k] != 0).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&i| gens[i][k].abs());
            let piv = idx[0];
            let pv = gens[piv].clone();
            for &i in &idx[1..] {
                let q = gens[i][k].div_euclid(pv[k]);
                for j in 0..m {
                    gens[i][j] -= q * pv[j];
                }
            }
        }
        let pos = gens
            .iter()
            .position(|g| g[k] != 0)
            .expect("generators span a full-rank lattice");
        let mut v = gens.swap_remove(pos);
        if v[k] < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        for x in v.iter_mut().skip(k + 1) {
            *x = x.rem_euclid(big_n);
        }
        basis.push(v);
    }
    basis
}

fn lattice_points_in_box(base: &[i128], basis: &[Vec<i128>], bound: i128) -> Vec<Vec<u64>> {
    fn rec(
        k: usize,
        cur: Vec<i128>,
        basis: &[Vec<i128>],
        bound: i128,
        out: &mut Vec<Vec<u64>>,
    ) {
        if k == basis.len() {
            out.push(cur.iter().map(|&x| x as u64).collect());
            return;
        }
        let p = basis[k][k];
        let lo = (-cur[k]).div_euclid(p) + ((-cur[k]).rem_euclid(p) != 0) as i128;
        let hi = (bound - cur[k]).div_euclid(p);
        for c in lo..=hi {
            let next: Vec<i128> = cur.iter().zip(&basis[k]).map(|(x, b)| x + c * b).collect();
            rec(k + 1, next, basis, bound, out);
        }
    }
    let mut out = Vec::new();
    if basis.is_empty() {
        return out;
    }
    // Parallel over the first coordinate's slices.
    let p = basis[0][0];
    let lo = (-base[0]).div_euclid(p) + ((-base[0]).rem_euclid(p) != 0) as i128;
    let hi = (bound - base[0]).div_euclid(p);
    let slices: Vec<Vec<Vec<u64>>> = (lo..=hi)
        .into_par_iter()
        .map(|c| {
            let start: Vec<i128> = base.iter().zip(&basis[0]).map(|(x, b)| x + c * b).collect();
            let mut local = Vec::new();
            rec(1, start, basis, bound, &mut local);
            local
        })
        .collect();
    out.extend(slices.into_iter().flatten());
    out.sort();
    out
}

/// `g: x1 ↦ x1 + x2 x3^{d3}...xn^{dn}` and `h: x2 ↦ x2 + x1 x3^{d'3}...`,
/// for `d = (1, d3, ..., dn) ∈ T_1` and `d' = (1, d'3, ..., d'n) ∈ T_2`.
pub fn corollary28_autos(
    sp: &SkewPresentation,
    d: &[u64],
    d_prime: &[u64],
) -> Result<(ElementaryAuto, ElementaryAuto), SkewError> {
    let n = sp.n;
    for v in [d, d_prime] {
        if v.len() != n - 1 {
            return Err(SkewError::WrongLength {
                expected: n - 1,
                found: v.len(),
            });
        }
    }
    if d[0] != 1 || d_prime[0] != 1 || d[1..].iter().chain(&d_prime[1..]).all(|&x| x == 0) {
        return Err(SkewError::DegenerateExponents);
    }
    for (s, v) in [(1, d), (2, d_prime)] {
        if !ts_membership(sp, &TsQuery::new(s, v.to_vec()))? {
            return Err(SkewError::NotInTs(v.to_vec(), s));
        }
    }
    // a1 = ∏_{j>=3} p_{j,partner}^{d_j} x3^{d3}...xn^{dn}, so that
    // a1 * x_partner = x_partner x3^{d3}...xn^{dn}.
    let build = |moved: usize, tail: &[u64]| {
        let partner = 1 - moved;
        let mut e = vec![0u32; n];
        let mut c = Scalar::one();
        for (k, &dj) in tail.iter().enumerate() {
            let j = k + 2;
            e[j] = dj as u32;
            if dj > 0 {
                c = &c * &sp.p[j][partner].pow(dj as i64).expect("nonzero");
            }
        }
        ElementaryAuto::new(moved, Element::zero(), Element::term(Monomial(e), c))
    };
    let g = build(0, &d[1..]);
    let h = build(1, &d_prime[1..]);
    if !validate_elementary(&g, sp) || !validate_elementary(&h, sp) {
        return Err(SkewError::InvalidConstruction);
    }
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::{FreeWord, WordEvaluator, WordVerdict};
    use proptest::prelude::*;

    fn generic3() -> SkewPresentation {
        SkewPresentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[
                (1, 2, Scalar::q()),
                (1, 3, Scalar::from_int(2)),
                (2, 3, Scalar::from_int(3)),
            ],
        )
        .unwrap()
    }

    fn mono(e: &[u32], c: Scalar) -> Element {
        Element::term(Monomial(e.to_vec()), c)
    }

    #[test]
    fn normal_forms() {
        let sp = generic3();
        assert_eq!(skew_normal_form(&[2, 1], &sp).unwrap(), mono(&[1, 1, 0], Scalar::q()));
        assert_eq!(skew_normal_form(&[1, 1, 2], &sp).unwrap(), mono(&[2, 1, 0], Scalar::one()));
        assert_eq!(
            skew_normal_form(&[3, 2, 1], &sp).unwrap(),
            mono(&[1, 1, 1], &Scalar::q() * &Scalar::from_int(6))
        );
        assert!(skew_normal_form(&[4], &sp).is_err());
    }

    fn inversion_oracle(sp: &SkewPresentation, word: &[usize]) -> Scalar {
        let mut c = Scalar::one();
        for a in 0..word.len() {
            for b in a + 1..word.len() {
                let (i, j) = (word[b] - 1, word[a] - 1);
                if i < j {
                    c = &c * sp.p(i, j);
                }
            }
        }
        c
    }

    #[test]
    fn roots_of_unity_parameters() {
        let sp = SkewPresentation::from_roots(3, 4, &[(1, 2, 1), (1, 3, 2), (2, 3, 3)]).unwrap();
        let zeta = Scalar::generator(sp.number_field());
        assert_eq!(sp.p(0, 1), &zeta);
        assert_eq!(&(sp.p(0, 1) * sp.p(1, 0)), &Scalar::one());
        assert_eq!(sp.p(0, 2), &Scalar::from_int(-1));
        let c = SkewPresentation::from_roots(3, 1, &[]).unwrap();
        assert!(c.p(0, 1).is_one());
    }

    #[test]
    fn commutative_ring_has_full_ts() {
        let sp = SkewPresentation::from_roots(4, 1, &[]).unwrap();
        let sol = ts_solve(&sp, 2, 2).unwrap();
        assert_eq!(sol.members.len(), 27);
        assert_eq!(sol.lattice, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let comm = SkewPresentation::commutative(4).unwrap();
        assert!(ts_membership(&comm, &TsQuery::new(3, vec![5, 0, 2])).unwrap());
    }

    #[test]
    fn transcendental_parameters() {
        let sp = generic3();
        // d = 0 is a member iff p_is = 1 for all i != s.
        assert!(!ts_membership(&sp, &TsQuery::new(1, vec![0, 0])).unwrap());
        let ones = SkewPresentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[(1, 2, Scalar::q())],
        )
        .unwrap();
        assert!(ts_membership(&ones, &TsQuery::new(3, vec![0, 0])).unwrap());
        assert_eq!(ts_solve(&sp, 1, 3), Err(SkewError::NoStructure));
    }

    #[test]
    fn inconsistent_congruences() {
        // For s = 3: p_13 needs zeta^{2 d2} = zeta^1 (mod 4), impossible.
        let sp = SkewPresentation::from_roots(3, 4, &[(1, 2, 2), (1, 3, 1), (2, 3, 0)]).unwrap();
        let sol = ts_solve(&sp, 3, 6).unwrap();
        assert_eq!(sol.particular, None);
        assert!(sol.members.is_empty());
        assert!(ts_scan(&sp, 3, 6).unwrap().is_empty());
    }

    #[test]
    fn members_are_infinite_once_nonempty() {
        let sp = SkewPresentation::from_roots(3, 4, &[(1, 2, 1), (1, 3, 2), (2, 3, 3)]).unwrap();
        for s in 1..=3 {
            let sol = ts_solve(&sp, s, 8).unwrap();
            assert_eq!(sol.members, ts_scan(&sp, s, 8).unwrap());
            if let Some(first) = sol.members.first() {
                for v in &sol.lattice {
                    let shifted: Vec<u64> = first
                        .iter()
                        .zip(v)
                        .map(|(&a, &b)| (a as i64 + b.rem_euclid(4) + 4) as u64)
                        .collect();
                    assert!(ts_membership(&sp, &TsQuery::new(s, shifted)).unwrap());
                }
            }
        }
    }

    #[test]
    fn smith_form_reconstructs() {
        let a = vec![vec![2i128, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_normal_form(&a);
        let diag: Vec<i128> = (0..3).map(|i| s.d[i][i]).collect();
        assert_eq!(diag, vec![2, 6, 12]);
        let mul = |x: &[Vec<i128>], y: &[Vec<i128>]| -> Vec<Vec<i128>> {
            (0..x.len())
                .map(|i| (0..y[0].len()).map(|j| (0..y.len()).map(|k| x[i][k] * y[k][j]).sum()).collect())
                .collect()
        };
        assert_eq!(mul(&mul(&s.u, &a), &s.v), s.d);
    }

    #[test]
    fn corollary_construction() {
        let sp = SkewPresentation::commutative(4).unwrap();
        let (g, h) = corollary28_autos(&sp, &[1, 1, 0], &[1, 1, 0]).unwrap();
        assert_eq!(sp.mul(&g.a1, &Element::var(4, 1)), mono(&[0, 1, 1, 0], Scalar::one()));
        let ev = WordEvaluator::new(&sp, g, h).unwrap();
        for w in FreeWord::enumerate(3, &[1, -1, 2]) {
            assert_eq!(ev.free_witness(&w), WordVerdict::NotIdentity, "{w}");
        }
        assert_eq!(
            corollary28_autos(&sp, &[1, 0, 0], &[1, 0, 0]),
            Err(SkewError::DegenerateExponents)
        );
        let skew = SkewPresentation::from_roots(3, 4, &[(1, 2, 1), (1, 3, 2), (2, 3, 3)]).unwrap();
        assert!(matches!(
            corollary28_autos(&skew, &[1, 1], &[1, 1]),
            Err(SkewError::NotInTs(_, _))
        ));
    }

    #[test]
    fn corollary_on_a_genuinely_skew_ring() {
        // N = 2, p12 = 1, p13 = p23 = -1: d = (1, 2) lies in T_1 and T_2.
        let sp = SkewPresentation::from_roots(3, 2, &[(1, 3, 1), (2, 3, 1)]).unwrap();
        let (g, h) = corollary28_autos(&sp, &[1, 2], &[1, 2]).unwrap();
        let ev = WordEvaluator::new(&sp, g, h).unwrap();
        for w in FreeWord::enumerate(3, &[1, -1]) {
            assert_eq!(ev.free_witness(&w), WordVerdict::NotIdentity, "{w}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn normal_form_scalar_counts_inversions(word in prop::collection::vec(1usize..4, 0..7)) {
            let sp = generic3();
            let nf = skew_normal_form(&word, &sp).unwrap();
            let mut e = vec![0u32; 3];
            for &w in &word { e[w - 1] += 1; }
            prop_assert_eq!(nf, mono(&e, inversion_oracle(&sp, &word)));
        }

        #[test]
        fn solver_matches_scan(
            n in 3usize..5,
            order in 1u32..7,
            raw in prop::collection::vec(0i64..6, 6),
            s in 1usize..5,
        ) {
            let s = s.min(n);
            let mut entries = Vec::new();
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    entries.push((i, j, raw[k]));
                    k += 1;
                }
            }
            let sp = SkewPresentation::from_roots(n, order, &entries).unwrap();
            let sol = ts_solve(&sp, s, 4).unwrap();
            prop_assert_eq!(sol.members, ts_scan(&sp, s, 4).unwrap());
        }
    }
}
