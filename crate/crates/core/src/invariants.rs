//! Fixed subrings `V_n(A)^G` for finite groups `G`, truncated at a
//! filtration degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraMap, Element, Monomial, PbwAlgebra, Presentation};
use crate::autgroup::AffineAuto;
use crate::expr::{parse, ElementEvaluator, ExprError};
use crate::freeness::{Automorphism, ElementaryAuto};
use crate::perm::Perm;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("{0} is not an automorphism of the presentation")]
    InvalidElement(String),
    #[error("elements are not closed under composition")]
    NotClosed,
    #[error("group generated exceeds {0} elements")]
    TooLarge(usize),
    #[error("unknown group name {0:?}; expected S<k>, pm1, S<k>_x_pm1")]
    UnknownGroup(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// A finite group of automorphisms, stored as generator images.
#[derive(Clone, Debug)]
pub struct FiniteActionGroup {
    n: usize,
    elements: Vec<AlgebraMap>,
    labels: Vec<String>,
}

const MAX_GROUP: usize = 100_000;

impl FiniteActionGroup {
    /// The group generated by affine automorphisms, each validated.
    pub fn generated_by(pres: &Presentation, gens: &[AffineAuto]) -> Result<Self, InvariantError> {
        let n = pres.n();
        for g in gens {
            if !g.is_valid_for(pres) {
                return Err(InvariantError::InvalidElement(g.to_string()));
            }
        }
        let mut seen = std::collections::BTreeSet::from([AffineAuto::identity(n)]);
        let mut queue = vec![AffineAuto::identity(n)];
        while let Some(x) = queue.pop() {
            for s in gens {
                let y = s.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_GROUP {
                        return Err(InvariantError::TooLarge(MAX_GROUP));
                    }
                    queue.push(y);
                }
            }
        }
        let elements: Vec<AffineAuto> = seen.into_iter().collect();
        Ok(FiniteActionGroup {
            n,
            labels: elements.iter().map(|g| g.to_string()).collect(),
            elements: elements.iter().map(|g| g.to_map()).collect(),
        })
    }

    /// `S<k>` (permutations of `x1..xk`), `pm1` (`±1`) or `S<k>_x_pm1`.
    pub fn named(name: &str, pres: &Presentation) -> Result<Self, InvariantError> {
        let n = pres.n();
        let unknown = || InvariantError::UnknownGroup(name.to_string());
        let (sym, pm) = match name {
            "pm1" => (None, true),
            _ => {
                let (head, pm) = match name.strip_suffix("_x_pm1") {
                    Some(h) => (h, true),
                    None => (name, false),
                };
                let k: usize = head
                    .strip_prefix('S')
                    .and_then(|d| d.parse().ok())
                    .filter(|&k| (1..=n).contains(&k))
                    .ok_or_else(unknown)?;
                (Some(k), pm)
            }
        };
        let mut gens = Vec::new();
        if let Some(k) = sym {
            for i in 0..k.saturating_sub(1) {
                let p = Perm::from_cycles(n, &[vec![i, i + 1]]).expect("transposition");
                gens.push(AffineAuto::new(p, vec![Scalar::one(); n]));
            }
        }
        if pm {
            gens.push(AffineAuto::minus_one(n));
        }
        FiniteActionGroup::generated_by(pres, &gens)
    }

    /// An explicit list of elementary automorphisms, checked for validity
    /// and closure under composition.
    pub fn from_elementary<A: PbwAlgebra + ?Sized>(
        alg: &A,
        elems: &[ElementaryAuto],
    ) -> Result<Self, InvariantError> {
        let n = alg.ngens();
        let mut maps = vec![AlgebraMap::identity(n)];
        let mut labels = vec!["id".to_string()];
        for e in elems {
            if !e.is_valid_for(alg) {
                return Err(InvariantError::InvalidElement(e.to_string()));
            }
            let m = e.algebra_map(alg);
            if !maps.contains(&m) {
                maps.push(m);
                labels.push(e.to_string());
            }
        }
        for a in &maps {
            for b in &maps {
                if !maps.contains(&a.compose(alg, b)) {
                    return Err(InvariantError::NotClosed);
                }
            }
        }
        Ok(FiniteActionGroup {
            n,
            elements: maps,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[AlgebraMap] {
        &self.elements
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_fixed<A: PbwAlgebra + ?Sized>(&self, alg: &A, u: &Element) -> bool {
        self.elements.iter().all(|g| g.apply(alg, u) == *u)
    }
}

/// `(1/|G|) Σ_g g(u)`.
pub fn reynolds<A: PbwAlgebra + ?Sized>(group: &FiniteActionGroup, u: &Element, alg: &A) -> Element {
    let mut acc = Element::zero();
    for g in &group.elements {
        acc = &acc + &g.apply(alg, u);
    }
    acc.scale(&Scalar::from_ratio(1, group.order() as i64))
}

/// PBW monomials of degree at most `d`, ascending.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial(vec![0; n])];
    let mut layer = out.clone();
    for _ in 0..d {
        let mut next = std::collections::BTreeSet::new();
        for m in &layer {
            for i in 0..n {
                let mut e = m.0.clone();
                e[i] += 1;
                next.insert(Monomial(e));
            }
        }
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
    }
    out.sort();
    out
}

/// Reduced row echelon form keyed by leading monomial (largest in the
/// graded-lex order), pivot coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<Monomial, Element>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    /// Reduces `u` against the current rows.
    pub fn reduce(&self, u: &Element) -> Element {
        let mut r = u.clone();
        loop {
            let hit = r
                .iter()
                .rev()
                .find(|(m, _)| self.rows.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                Some((m, c)) => r.add_scaled(&self.rows[&m], &-c),
                None => return r,
            }
        }
    }

    /// Adds `u` if it is independent of the rows; returns whether it was.
    pub fn insert(&mut self, u: &Element) -> bool {
        let r = self.reduce(u);
        let Some((lm, lc)) = r.leading_term().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let r = r.scale(&lc.inv().expect("nonzero leading coefficient"));
        for row in self.rows.values_mut() {
            let c = row.coeff(&lm);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(lm, r);
        true
    }

    pub fn contains(&self, u: &Element) -> bool {
        self.reduce(u).is_zero()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in ascending order of leading monomial.
    pub fn rows(&self) -> impl Iterator<Item = &Element> {
        self.rows.values()
    }
}

/// A noncommutative polynomial in the generators `g1, g2, ...`, as words
/// of 0-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Vec<usize>, Scalar)>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (word, c) in &self.terms {
            let body = render_word(word);
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            let coeff = if abs.is_one() && !body.is_empty() {
                String::new()
            } else if abs.is_sum() {
                format!("({abs})")
            } else {
                abs.to_string()
            };
            let text = match (coeff.is_empty(), body.is_empty()) {
                (true, _) => body,
                (false, true) => coeff,
                (false, false) => format!("{coeff}*{body}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{text}")?,
                (true, false) => f.write_str(&text)?,
                (false, true) => write!(f, " - {text}")?,
                (false, false) => write!(f, " + {text}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn render_word(word: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < word.len() {
        let mut run = 1;
        while k + run < word.len() && word[k + run] == word[k] {
            run += 1;
        }
        parts.push(if run == 1 {
            format!("g{}", word[k] + 1)
        } else {
            format!("g{}^{}", word[k] + 1, run)
        });
        k += run;
    }
    parts.join("*")
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantBasisReport {
    pub degree_bound: u32,
    /// `dim (F_d)^G` for `d = 0..=degree_bound`.
    pub dims: Vec<usize>,
    #[serde(serialize_with = "crate::report::display_seq")]
    pub basis: Vec<Element>,
    #[serde(serialize_with = "crate::report::display_seq")]
    pub generators: Vec<Element>,
    pub generator_degrees: Vec<u32>,
    pub relation_bound: Option<u32>,
    #[serde(serialize_with = "crate::report::display_seq")]
    pub relations: Vec<Relation>,
}

/// Echelon basis of `(F_D)^G`: the Reynolds image of the PBW basis of
/// `F_D`, with per-degree dimensions.
pub fn invariant_basis<A: PbwAlgebra + ?Sized>(
    group: &FiniteActionGroup,
    degree: u32,
    alg: &A,
) -> (Echelon, Vec<usize>) {
    let monos = monomials_up_to(alg.ngens(), degree);
    let images: Vec<Element> = monos
        .par_iter()
        .map(|m| reynolds(group, &Element::term(m.clone(), Scalar::one()), alg))
        .collect();
    let mut ech = Echelon::new();
    for u in &images {
        ech.insert(u);
    }
    let mut dims = vec![0usize; degree as usize + 1];
    for row in ech.rows() {
        let d = row.filtration_degree().unwrap_or(0) as usize;
        for slot in dims.iter_mut().skip(d) {
            *slot += 1;
        }
    }
    (ech, dims)
}

/// Words in generators of the given degrees with total degree at most
/// `bound`, paired with their values.
fn words_up_to<A: PbwAlgebra + ?Sized>(
    gens: &[Element],
    degrees: &[u32],
    bound: u32,
    alg: &A,
) -> Vec<(Vec<usize>, u32, Element)> {
    let mut out = vec![(Vec::new(), 0u32, alg.one())];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, d, val) in &frontier {
            for (k, g) in gens.iter().enumerate() {
                let nd = d + degrees[k];
                if nd <= bound && degrees[k] > 0 {
                    let mut nw = w.clone();
                    nw.push(k);
                    next.push((nw, nd, alg.mul(val, g)));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Greedy generators: scanning the echelon basis by degree, an invariant
/// is added when it is outside the span of products of earlier
/// generators of total degree at most `degree`.
pub fn algebra_generators<A: PbwAlgebra + ?Sized>(
    group: &FiniteActionGroup,
    degree: u32,
    alg: &A,
) -> (Vec<Element>, Vec<u32>) {
    let (basis, _) = invariant_basis(group, degree, alg);
    let mut candidates: Vec<&Element> = basis.rows().collect();
    candidates.sort_by_key(|u| u.filtration_degree().unwrap_or(0));
    let mut gens: Vec<Element> = Vec::new();
    let mut degs: Vec<u32> = Vec::new();
    let mut span = Echelon::new();
    span.insert(&alg.one());
    let mut span_deg = 0;
    for u in candidates {
        let d = u.filtration_degree().unwrap_or(0);
        if d == 0 {
            continue;
        }
        if d > span_deg {
            span = Echelon::new();
            for (_, _, val) in words_up_to(&gens, &degs, degree, alg) {
                span.insert(&val);
            }
            span_deg = d;
        }
        if !span.contains(u) {
            gens.push(u.clone());
            degs.push(d);
            for (_, _, val) in words_up_to(&gens, &degs, degree, alg) {
                span.insert(&val);
            }
        }
    }
    (gens, degs)
}

/// Linear dependencies among words in `gens` of weighted degree at most
/// `bound`, as a basis of the relation space.
pub fn relations<A: PbwAlgebra + ?Sized>(
    gens: &[Element],
    degrees: &[u32],
    bound: u32,
    alg: &A,
) -> Vec<Relation> {
    let words = words_up_to(gens, degrees, bound, alg);
    // Semi-echelon rows keyed by leading monomial, each remembering which
    // combination of words produced it.
    let mut rows: BTreeMap<Monomial, (Element, BTreeMap<usize, Scalar>)> = BTreeMap::new();
    let mut found = Vec::new();
    for (k, (_, _, val)) in words.iter().enumerate() {
        let mut r = val.clone();
        let mut combo = BTreeMap::from([(k, Scalar::one())]);
        while let Some((m, c)) = r.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let Some((row, rc)) = rows.get(&m) else { break };
            r.add_scaled(row, &-&c);
            for (i, x) in rc {
                let e = combo.entry(*i).or_insert_with(Scalar::zero);
                *e = &*e - &(&c * x);
            }
        }
        combo.retain(|_, c| !c.is_zero());
        match r.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            None => {
                let mut terms: Vec<(Vec<usize>, Scalar)> =
                    combo.into_iter().map(|(i, c)| (words[i].0.clone(), c)).collect();
                terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
                found.push(Relation { terms });
            }
            Some((m, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                let combo = combo.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
                rows.insert(m, (r.scale(&inv), combo));
            }
        }
    }
    found
}

/// Full report: basis, generators and, when `relation_bound` is given,
/// relations among the generators.
pub fn invariant_report<A: PbwAlgebra + ?Sized>(
    group: &FiniteActionGroup,
    degree: u32,
    relation_bound: Option<u32>,
    alg: &A,
) -> InvariantBasisReport {
    let (basis, dims) = invariant_basis(group, degree, alg);
    let (generators, generator_degrees) = algebra_generators(group, degree, alg);
    let relations = relation_bound
        .map(|b| relations(&generators, &generator_degrees, b, alg))
        .unwrap_or_default();
    InvariantBasisReport {
        degree_bound: degree,
        dims,
        basis: basis.rows().cloned().collect(),
        generators,
        generator_degrees,
        relation_bound,
        relations,
    }
}

/// Evaluates `text` with names bound to elements and reports whether it
/// vanishes.
pub fn verify_relation(
    text: &str,
    bindings: &HashMap<String, Element>,
    alg: &dyn PbwAlgebra,
) -> Result<bool, InvariantError> {
    let value = parse(text)?.eval(&ElementEvaluator {
        alg,
        bindings,
        has_minpoly: false,
    })?;
    Ok(value.is_zero())
}

/// True iff `1` lies in the span of `x_i x_j + x_j x_i`, `i < j`.
pub fn strong_grading_check(pres: &Presentation) -> bool {
    let n = pres.n();
    (0..n).any(|i| {
        (i + 1..n).any(|j| {
            let (xi, xj) = (pres.generator(i), pres.generator(j));
            let s = &pres.mul(&xi, &xj) + &pres.mul(&xj, &xi);
            s.as_constant().is_some_and(|c| !c.is_zero())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::NumberField;
    use std::sync::Arc;

    fn x(n: usize, i: usize) -> Element {
        Element::var(n, i)
    }

    fn generic(n: usize) -> Presentation {
        Presentation::from_fn(n, Arc::new(NumberField::rationals()), |i, j| {
            Scalar::from_int((i + 2 * j) as i64 % 5)
        })
        .unwrap()
    }

    fn binomial(n: u64, k: u64) -> usize {
        (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i) as usize
    }

    /// dim of the common fixed space of G on F_D via the kernel of the
    /// stacked maps g - id, by Gaussian elimination on coordinates.
    fn fixed_dim_oracle(group: &FiniteActionGroup, degree: u32, alg: &Presentation) -> usize {
        let monos = monomials_up_to(alg.n(), degree);
        let cols = monos.len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for g in group.elements() {
            let images: Vec<Element> =
                monos.iter().map(|m| g.apply(alg, &Element::term(m.clone(), Scalar::one()))).collect();
            for (r, m) in monos.iter().enumerate() {
                let mut row = vec![Scalar::zero(); cols];
                for (c, img) in images.iter().enumerate() {
                    row[c] = img.coeff(m);
                }
                row[r] = &row[r] - &Scalar::one();
                rows.push(row);
            }
        }
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
            rows.swap(rank, p);
            let inv = rows[rank][c].inv().unwrap();
            let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
            for r in 0..rows.len() {
                if r != rank && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in 0..cols {
                        rows[r][k] = &rows[r][k] - &(&f * &pivot[k]);
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        cols - rank
    }

    #[test]
    fn reynolds_examples() {
        let w2 = Presentation::weyl(2);
        let pm = FiniteActionGroup::named("pm1", &w2).unwrap();
        assert_eq!(pm.order(), 2);
        assert!(reynolds(&pm, &x(2, 0), &w2).is_zero());
        let x1x2 = w2.mul(&x(2, 0), &x(2, 1));
        assert_eq!(reynolds(&pm, &x1x2, &w2), x1x2);
        let s2 = FiniteActionGroup::named("S2", &w2).unwrap();
        assert_eq!(
            reynolds(&s2, &x(2, 0), &w2),
            (&x(2, 0) + &x(2, 1)).scale(&Scalar::from_ratio(1, 2))
        );
        assert_eq!(FiniteActionGroup::named("S2_x_pm1", &w2).unwrap().order(), 4);
        assert!(FiniteActionGroup::named("S2", &generic(2)).is_ok());
        assert!(matches!(
            FiniteActionGroup::named("S3", &generic(3)),
            Err(InvariantError::InvalidElement(_))
        ));
        assert!(matches!(
            FiniteActionGroup::named("Z7", &w2),
            Err(InvariantError::UnknownGroup(_))
        ));
    }

    #[test]
    fn basis_dimensions() {
        for n in 2..=3 {
            let p = generic(n);
            let pm = FiniteActionGroup::named("pm1", &p).unwrap();
            let (_, dims) = invariant_basis(&pm, 2, &p);
            assert_eq!(dims[2], 1 + n * (n + 1) / 2);
            let trivial = FiniteActionGroup::generated_by(&p, &[]).unwrap();
            let (_, dims) = invariant_basis(&trivial, 3, &p);
            assert_eq!(dims[3], binomial(n as u64 + 3, n as u64));
        }
        let w2 = Presentation::weyl(2);
        let g = FiniteActionGroup::named("S2_x_pm1", &w2).unwrap();
        let (ech, _) = invariant_basis(&g, 2, &w2);
        let sq = &w2.mul(&x(2, 0), &x(2, 0)) + &w2.mul(&x(2, 1), &x(2, 1));
        assert!(ech.contains(&sq));
        for row in ech.rows() {
            assert!(g.is_fixed(&w2, row));
            assert_eq!(reynolds(&g, row, &w2), *row);
        }
    }

    #[test]
    fn reynolds_dims_match_fixed_point_solve() {
        let cases: Vec<(Presentation, u32)> = vec![(Presentation::weyl(2), 4), (Presentation::weyl(3), 3)];
        for (p, d) in cases {
            for name in ["pm1", "S2_x_pm1"] {
                let g = FiniteActionGroup::named(name, &p).unwrap();
                let (_, dims) = invariant_basis(&g, d, &p);
                assert_eq!(dims[d as usize], fixed_dim_oracle(&g, d, &p), "{name}");
            }
        }
    }

    #[test]
    fn weyl_two_symmetric_invariants() {
        let w2 = Presentation::weyl(2);
        let s2 = FiniteActionGroup::named("S2", &w2).unwrap();
        let (gens, degs) = algebra_generators(&s2, 3, &w2);
        assert_eq!(degs, vec![1, 3]);
        let u = &x(2, 0) + &x(2, 1);
        let v = &w2.pow(&x(2, 0), 3) + &w2.pow(&x(2, 1), 3);
        let mut span = Echelon::new();
        for (_, _, val) in words_up_to(&gens, &degs, 3, &w2) {
            span.insert(&val);
        }
        assert!(span.contains(&u) && span.contains(&v));
    }

    #[test]
    fn even_part_is_generated_in_degree_two() {
        let p = generic(3);
        let pm = FiniteActionGroup::named("pm1", &p).unwrap();
        let (gens, degs) = algebra_generators(&pm, 4, &p);
        assert!(degs.iter().all(|&d| d == 2));
        assert_eq!(gens.len(), 6);
    }

    #[test]
    fn identity_group_generators() {
        let p = generic(3);
        let g = FiniteActionGroup::generated_by(&p, &[]).unwrap();
        let (gens, degs) = algebra_generators(&g, 2, &p);
        assert_eq!(degs, vec![1, 1, 1]);
        let mut e = Echelon::new();
        for u in &gens {
            e.insert(u);
        }
        for i in 0..3 {
            assert!(e.contains(&x(3, i)));
        }
    }

    #[test]
    fn example_relations() {
        let w2 = Presentation::weyl(2);
        let u = &x(2, 0) + &x(2, 1);
        let v = &w2.pow(&x(2, 0), 3) + &w2.pow(&x(2, 1), 3);
        let b: HashMap<String, Element> = [("u".to_string(), u), ("v".to_string(), v)].into();
        let r3 = "2*u^6 - 3*u^3*v - 3*v*u^3 + 4*v^2 - 5*u^4 + 3*u^2 + 4*(u*v + v*u)";
        assert!(verify_relation(r3, &b, &w2).unwrap());
        assert!(verify_relation("[u^2, v]", &b, &w2).unwrap());
        assert!(verify_relation("[u, v^2]", &b, &w2).unwrap());
        assert!(!verify_relation("[u, v]", &b, &w2).unwrap());
        assert!(matches!(
            verify_relation("u*w", &b, &w2),
            Err(InvariantError::Expr(ExprError::UnboundName(_)))
        ));
    }

    #[test]
    fn relation_search_finds_commutator() {
        let w2 = Presentation::weyl(2);
        let u = &x(2, 0) + &x(2, 1);
        let v = &w2.pow(&x(2, 0), 3) + &w2.pow(&x(2, 1), 3);
        let rels = relations(&[u.clone(), v.clone()], &[1, 3], 6, &w2);
        assert!(!rels.is_empty());
        let b: HashMap<String, Element> = [("g1".to_string(), u), ("g2".to_string(), v)].into();
        for r in &rels {
            assert!(verify_relation(&r.to_string(), &b, &w2).unwrap(), "{r}");
        }
    }

    #[test]
    fn strong_grading() {
        assert!(strong_grading_check(&Presentation::weyl(3)));
        let zero = Presentation::from_fn(3, Arc::new(NumberField::rationals()), |_, _| Scalar::zero()).unwrap();
        assert!(!strong_grading_check(&zero));
        let ex = Presentation::from_fn(6, Arc::new(NumberField::rationals()), |i, j| {
            if i.min(j) == 0 && i.max(j) == 1 { Scalar::zero() } else { Scalar::one() }
        })
        .unwrap();
        assert!(strong_grading_check(&ex));
    }

    #[test]
    fn elementary_groups_must_close() {
        let w3 = Presentation::weyl(3);
        let (g, _) = crate::freeness::omega_generators(&w3).unwrap();
        assert!(matches!(
            FiniteActionGroup::from_elementary(&w3, &[g]),
            Err(InvariantError::NotClosed)
        ));
    }
}
