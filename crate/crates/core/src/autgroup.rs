//! Affine automorphisms `x_i ↦ r_i x_{σ(i)}` of `V_n(A)`: the scaling
//! solver, group enumeration, homological determinants and Gorenstein
//! certificates.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{AlgebraMap, Element, Presentation};
use crate::perm::{self, Perm};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error("presentations have {0} and {1} generators")]
    DimensionMismatch(usize, usize),
    #[error("group has a positive-dimensional torus on which hdet is not identically 1")]
    InfiniteGroup,
    #[error("certificates are only available in characteristic 0, not {0}")]
    UnsupportedCharacteristic(u64),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The automorphism `x_i ↦ r_i x_{σ(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineAuto {
    perm: Perm,
    r: Vec<Scalar>,
}

impl AffineAuto {
    pub fn new(perm: Perm, r: Vec<Scalar>) -> Self {
        assert_eq!(perm.len(), r.len(), "permutation and scalars disagree on n");
        AffineAuto { perm, r }
    }

    pub fn identity(n: usize) -> Self {
        AffineAuto::new(Perm::identity(n), vec![Scalar::one(); n])
    }

    /// The automorphism `x_i ↦ -x_i`.
    pub fn minus_one(n: usize) -> Self {
        AffineAuto::new(Perm::identity(n), vec![Scalar::from_int(-1); n])
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineAuto) -> AffineAuto {
        let r = (0..self.n())
            .map(|i| &other.r[i] * &self.r[other.perm.apply(i)])
            .collect();
        AffineAuto::new(self.perm.compose(&other.perm), r)
    }

    pub fn inverse(&self) -> AffineAuto {
        let inv = self.perm.inverse();
        let r = (0..self.n())
            .map(|k| self.r[inv.apply(k)].inv().expect("scalars are nonzero"))
            .collect();
        AffineAuto::new(inv, r)
    }

    /// Homological determinant `∏ r_i`; the permutation part contributes 1.
    pub fn hdet(&self) -> Scalar {
        self.r.iter().product()
    }

    /// Checks `a_ij = r_i r_j a_{σ(i)σ(j)}` for all `i != j`.
    pub fn is_valid_for(&self, pres: &Presentation) -> bool {
        let n = pres.n();
        n == self.n()
            && self.r.iter().all(|r| !r.is_zero())
            && (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let rhs = &(&self.r[i] * &self.r[j])
                        * pres.a(self.perm.apply(i), self.perm.apply(j));
                    *pres.a(i, j) == rhs
                })
            })
    }

    pub fn to_map(&self) -> AlgebraMap {
        let n = self.n();
        AlgebraMap::new(
            (0..n)
                .map(|i| Element::var(n, self.perm.apply(i)).scale(&self.r[i]))
                .collect(),
        )
    }

    pub fn apply(&self, pres: &Presentation, u: &Element) -> Element {
        self.to_map().apply(pres, u)
    }
}

impl fmt::Display for AffineAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.r.iter().map(|s| s.to_string()).collect();
        write!(f, "g({},({}))", self.perm, r.join(","))
    }
}

impl Serialize for AffineAuto {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AffineAuto", 2)?;
        st.serialize_field("perm", &self.perm.to_string())?;
        st.serialize_field(
            "r",
            &self.r.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// How the free parameter of one connected component is pinned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    /// Unconstrained torus coordinate with the given index.
    Free(usize),
    /// `t` ranges over these values (the two square roots of a constant).
    Roots(Vec<Scalar>),
}

/// One connected component of the constraint graph: `r_v = k_v t^{s_v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub coeffs: Vec<Scalar>,
    pub signs: Vec<i8>,
    pub param: Param,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub n: usize,
    pub free: usize,
    pub components: Vec<Component>,
}

impl Parametrization {
    /// All scaling vectors obtained from given free-parameter values.
    pub fn instantiate(&self, params: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.n]];
        for comp in &self.components {
            let ts: Vec<Scalar> = match &comp.param {
                Param::Free(k) => vec![params[*k].clone()],
                Param::Roots(v) => v.clone(),
            };
            let mut next = Vec::with_capacity(out.len() * ts.len());
            for partial in &out {
                for t in &ts {
                    let mut r = partial.clone();
                    for (idx, &v) in comp.vertices.iter().enumerate() {
                        let tp = t.pow(comp.signs[idx] as i64).expect("t is nonzero");
                        r[v] = &comp.coeffs[idx] * &tp;
                    }
                    next.push(r);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// `hdet = constant * ∏ t_k^{exponents[k]}` for each choice of the
    /// pinned roots, as `(constant, exponents)` pairs.
    pub fn hdet_forms(&self) -> Vec<(Scalar, Vec<i32>)> {
        let mut out = vec![(Scalar::one(), vec![0i32; self.free])];
        for comp in &self.components {
            let kprod: Scalar = comp.coeffs.iter().product();
            let tsum: i32 = comp.signs.iter().map(|&s| s as i32).sum();
            match &comp.param {
                Param::Free(k) => {
                    for (c, e) in out.iter_mut() {
                        *c = &*c * &kprod;
                        e[*k] += tsum;
                    }
                }
                Param::Roots(roots) => {
                    let mut next = Vec::new();
                    for (c, e) in &out {
                        for t in roots {
                            let tp = t.pow(tsum as i64).expect("t is nonzero");
                            next.push((&(c * &kprod) * &tp, e.clone()));
                        }
                    }
                    out = next;
                }
            }
        }
        out
    }
}

/// Solutions `r` of `r_i r_j = a_ij / b_{σ(i)σ(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalingSolutionSet {
    /// No solution in `K`. Nonempty `radicands` means the only obstruction
    /// was `t^2 = c` with `c` not a square in `K`: solutions exist over
    /// `K(sqrt c)`; `over_closure` then counts them over the algebraic
    /// closure (`None` for infinitely many).
    Empty {
        radicands: Vec<Scalar>,
        over_closure: Option<u64>,
    },
    Finite(Vec<Vec<Scalar>>),
    Parametrized(Parametrization),
}

impl ScalingSolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, ScalingSolutionSet::Empty { .. })
    }

    pub fn radicands(&self) -> &[Scalar] {
        match self {
            ScalingSolutionSet::Empty { radicands, .. } => radicands,
            _ => &[],
        }
    }

    /// Number of solutions over the algebraic closure of `K`, `None` when
    /// infinite.
    pub fn closure_count(&self) -> Option<u64> {
        match self {
            ScalingSolutionSet::Empty { over_closure, .. } => *over_closure,
            ScalingSolutionSet::Finite(v) => Some(v.len() as u64),
            ScalingSolutionSet::Parametrized(_) => None,
        }
    }

    pub fn free_parameters(&self) -> usize {
        match self {
            ScalingSolutionSet::Parametrized(p) => p.free,
            _ => 0,
        }
    }

    /// Explicit solutions: all of them when finite, the ones with every
    /// free parameter set to 1 when parametrized.
    pub fn representatives(&self) -> Vec<Vec<Scalar>> {
        match self {
            ScalingSolutionSet::Empty { .. } => Vec::new(),
            ScalingSolutionSet::Finite(v) => v.clone(),
            ScalingSolutionSet::Parametrized(p) => p.instantiate(&vec![Scalar::one(); p.free]),
        }
    }
}

/// Solves `a_ij = r_i r_j b_{σ(i)σ(j)}` for all `i < j` over a spanning
/// forest of the constraint graph.
pub fn solve_scaling(
    a: &Presentation,
    b: &Presentation,
    sigma: &Perm,
) -> Result<ScalingSolutionSet, AutError> {
    let n = a.n();
    if b.n() != n || sigma.len() != n {
        return Err(AutError::DimensionMismatch(n, b.n()));
    }
    let empty = || {
        Ok(ScalingSolutionSet::Empty {
            radicands: Vec::new(),
            over_closure: Some(0),
        })
    };
    let mut adj: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let aij = a.a(i, j);
            let bij = b.a(sigma.apply(i), sigma.apply(j));
            match (aij.is_zero(), bij.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let w = aij.try_div(bij)?;
                    adj[i].push((j, w.clone()));
                    adj[j].push((i, w));
                }
                _ => return empty(),
            }
        }
    }
    let field = a.number_field();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut radicands = Vec::new();
    let mut free = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        // Breadth-first: r_v = k_v * t^{s_v} with t = r_root.
        let mut k: Vec<Option<(Scalar, i8)>> = vec![None; n];
        k[root] = Some((Scalar::one(), 1));
        seen[root] = true;
        let mut order = vec![root];
        let mut head = 0;
        let mut t_squared: Option<Scalar> = None;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let (ku, su) = k[u].clone().unwrap();
            for (v, w) in &adj[u] {
                match &k[*v] {
                    None => {
                        k[*v] = Some((w.try_div(&ku)?, -su));
                        seen[*v] = true;
                        order.push(*v);
                    }
                    Some((kv, sv)) => {
                        let kk = &ku * kv;
                        if su + sv == 0 {
                            if kk != *w {
                                return empty();
                            }
                        } else {
                            // k_u k_v t^{±2} = w
                            let c = if su + sv > 0 { w.try_div(&kk)? } else { kk.try_div(w)? };
                            match &t_squared {
                                None => t_squared = Some(c),
                                Some(prev) if *prev == c => {}
                                Some(_) => return empty(),
                            }
                        }
                    }
                }
            }
        }
        order.sort_unstable();
        let coeffs = order.iter().map(|&v| k[v].clone().unwrap().0).collect();
        let signs = order.iter().map(|&v| k[v].clone().unwrap().1).collect();
        let param = match t_squared {
            None => {
                free += 1;
                Param::Free(free - 1)
            }
            Some(c) => match c.try_sqrt(field) {
                Some(t) => Param::Roots(vec![t.clone(), -t]),
                None => {
                    radicands.push(c);
                    Param::Roots(Vec::new())
                }
            },
        };
        components.push(Component {
            vertices: order,
            coeffs,
            signs,
            param,
        });
    }
    if !radicands.is_empty() {
        let pinned = components.iter().filter(|c| matches!(c.param, Param::Roots(_))).count();
        return Ok(ScalingSolutionSet::Empty {
            radicands,
            over_closure: (free == 0).then(|| 1u64 << pinned),
        });
    }
    let p = Parametrization {
        n,
        free,
        components,
    };
    Ok(if free == 0 {
        ScalingSolutionSet::Finite(p.instantiate(&[]))
    } else {
        ScalingSolutionSet::Parametrized(p)
    })
}

/// A constraint `constant * ∏ t_k^{exponents[k]} = 1` cutting a coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusCondition {
    #[serde(serialize_with = "crate::report::display")]
    pub constant: Scalar,
    pub exponents: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub perm: Perm,
    pub solutions: ScalingSolutionSet,
    /// Present only in subgroups cut out of a torus by `hdet = 1`.
    pub conditions: Vec<TorusCondition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GroupOrder {
    Finite(u64),
    Infinite(&'static str),
}

impl GroupOrder {
    pub fn finite(&self) -> Option<u64> {
        match self {
            GroupOrder::Finite(k) => Some(*k),
            GroupOrder::Infinite(_) => None,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(k) => write!(f, "{k}"),
            GroupOrder::Infinite(s) => f.write_str(s),
        }
    }
}

/// The affine automorphism group, one coset per permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescription {
    pub n: usize,
    pub cosets: Vec<Coset>,
    pub torus_rank: usize,
    pub perm_image: Vec<Perm>,
    pub order: GroupOrder,
    /// Every element when finite; coset representatives with free
    /// parameters set to 1 otherwise.
    pub finite_part: Vec<AffineAuto>,
    /// Cosets whose scalings exist only over a quadratic extension of `K`.
    pub needs_sqrt: Vec<Coset>,
    /// Permutation image over the algebraic closure of `K`.
    pub closure_perm_image: Vec<Perm>,
    pub closure_order: GroupOrder,
}

impl GroupDescription {
    fn assemble(n: usize, cosets: Vec<Coset>, needs_sqrt: Vec<Coset>) -> Self {
        let torus_rank = cosets
            .iter()
            .find(|c| c.perm.is_identity())
            .map_or(0, |c| {
                c.solutions.free_parameters().saturating_sub(c.conditions.len())
            });
        let finite = cosets
            .iter()
            .all(|c| !matches!(c.solutions, ScalingSolutionSet::Parametrized(_)));
        let finite_part: Vec<AffineAuto> = cosets
            .iter()
            .flat_map(|c| {
                c.solutions
                    .representatives()
                    .into_iter()
                    .map(|r| AffineAuto::new(c.perm.clone(), r))
                    .collect::<Vec<_>>()
            })
            .collect();
        let order = if finite {
            GroupOrder::Finite(finite_part.len() as u64)
        } else {
            GroupOrder::Infinite("infinite")
        };
        let mut closure_perm_image: Vec<Perm> =
            cosets.iter().chain(&needs_sqrt).map(|c| c.perm.clone()).collect();
        closure_perm_image.sort();
        let closure_order = match cosets
            .iter()
            .chain(&needs_sqrt)
            .map(|c| c.solutions.closure_count())
            .sum::<Option<u64>>()
        {
            Some(k) if finite => GroupOrder::Finite(k),
            _ => GroupOrder::Infinite("infinite"),
        };
        GroupDescription {
            n,
            perm_image: cosets.iter().map(|c| c.perm.clone()).collect(),
            cosets,
            torus_rank,
            order,
            finite_part,
            closure_perm_image,
            closure_order,
            needs_sqrt,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order.finite().is_some()
    }

    /// Elements with trivial permutation part.
    pub fn kernel(&self) -> Vec<&AffineAuto> {
        self.finite_part
            .iter()
            .filter(|g| g.perm().is_identity())
            .collect()
    }

    /// For finite groups: closed under composition and inverses.
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&AffineAuto> = self.finite_part.iter().collect();
        self.is_finite()
            && set.contains(&AffineAuto::identity(self.n))
            && self.finite_part.par_iter().all(|g| {
                set.contains(&g.inverse())
                    && self.finite_part.iter().all(|h| set.contains(&g.compose(h)))
            })
    }
}

impl Serialize for GroupDescription {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GroupDescription", 6)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("torus_rank", &self.torus_rank)?;
        st.serialize_field(
            "perm_image",
            &self.perm_image.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        )?;
        st.serialize_field("elements", &self.finite_part)?;
        let sqrt: Vec<serde_json::Value> = self
            .needs_sqrt
            .iter()
            .map(|c| {
                serde_json::json!({
                    "perm": c.perm.to_string(),
                    "radicands": c.solutions.radicands().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        st.serialize_field("needs_quadratic_extension", &sqrt)?;
        st.serialize_field("closure_order", &self.closure_order)?;
        st.end()
    }
}

/// `G(A)`: the union of scaling solutions over all permutations, in
/// lexicographic permutation order.
pub fn affine_automorphisms(pres: &Presentation) -> Result<GroupDescription, AutError> {
    let n = pres.n();
    let perms: Vec<Perm> = Perm::all(n).collect();
    let solved: Vec<(Perm, ScalingSolutionSet)> = perms
        .into_par_iter()
        .map(|sigma| solve_scaling(pres, pres, &sigma).map(|s| (sigma, s)))
        .collect::<Result<_, _>>()?;
    let mut cosets = Vec::new();
    let mut needs_sqrt = Vec::new();
    for (perm, solutions) in solved {
        if solutions.is_empty() {
            if !solutions.radicands().is_empty() {
                needs_sqrt.push(Coset {
                    perm,
                    solutions,
                    conditions: Vec::new(),
                });
            }
            continue;
        }
        for r in solutions.representatives() {
            let g = AffineAuto::new(perm.clone(), r);
            assert!(g.is_valid_for(pres), "scaling solver produced invalid {g}");
        }
        cosets.push(Coset {
            perm,
            solutions,
            conditions: Vec::new(),
        });
    }
    Ok(GroupDescription::assemble(n, cosets, needs_sqrt))
}

/// `G_1(A)`: the elements with `hdet = 1`.
pub fn g1_subgroup(group: &GroupDescription) -> GroupDescription {
    let mut cosets = Vec::new();
    for coset in &group.cosets {
        match &coset.solutions {
            ScalingSolutionSet::Empty { .. } => {}
            ScalingSolutionSet::Finite(rs) => {
                let kept: Vec<Vec<Scalar>> = rs
                    .iter()
                    .filter(|r| r.iter().product::<Scalar>().is_one())
                    .cloned()
                    .collect();
                if !kept.is_empty() {
                    cosets.push(Coset {
                        perm: coset.perm.clone(),
                        solutions: ScalingSolutionSet::Finite(kept),
                        conditions: Vec::new(),
                    });
                }
            }
            ScalingSolutionSet::Parametrized(p) => {
                let forms = p.hdet_forms();
                let mut conditions = Vec::new();
                let mut keep = false;
                for (c, e) in forms {
                    if e.iter().all(|&x| x == 0) {
                        keep |= c.is_one();
                    } else {
                        keep = true;
                        conditions.push(TorusCondition {
                            constant: c,
                            exponents: e,
                        });
                    }
                }
                if keep {
                    cosets.push(Coset {
                        perm: coset.perm.clone(),
                        solutions: coset.solutions.clone(),
                        conditions: if conditions.len() == 1 { conditions } else { conditions.into_iter().take(1).collect() },
                    });
                }
            }
        }
    }
    GroupDescription::assemble(group.n, cosets, Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateReason {
    /// Every element of the group has `hdet = 1`.
    HdetTrivial,
    /// `n` is even, the kernel of the permutation image is `{±1}` and the
    /// permutation image of the full group is perfect, forcing `hdet = 1`
    /// on every subgroup.
    PerfectPermutationImage,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Certificate {
    Certified { reasons: Vec<CertificateReason> },
    NotCertified {
        witness: AffineAuto,
        #[serde(serialize_with = "crate::report::display")]
        hdet: Scalar,
    },
}

/// Decides whether `hdet` is trivial on `sub`, a subgroup of `G(A)`,
/// which certifies the fixed subring as filtered AS Gorenstein.
/// `characteristic` must be 0.
pub fn gorenstein_certificate(
    pres: &Presentation,
    sub: &GroupDescription,
    characteristic: u64,
) -> Result<Certificate, AutError> {
    if characteristic != 0 {
        return Err(AutError::UnsupportedCharacteristic(characteristic));
    }
    let mut reasons = Vec::new();
    let mut witness = None;
    if sub.is_finite() {
        witness = sub.finite_part.iter().find(|g| !g.hdet().is_one()).cloned();
    } else {
        for coset in &sub.cosets {
            let trivial = match &coset.solutions {
                ScalingSolutionSet::Parametrized(p) => p
                    .hdet_forms()
                    .iter()
                    .all(|(c, e)| c.is_one() && e.iter().all(|&x| x == 0)),
                other => other.representatives().iter().all(|r| r.iter().product::<Scalar>().is_one()),
            };
            if !trivial {
                return Err(AutError::InfiniteGroup);
            }
        }
    }
    if witness.is_none() {
        reasons.push(CertificateReason::HdetTrivial);
    }
    if perfect_route_applies(pres)? {
        reasons.push(CertificateReason::PerfectPermutationImage);
    }
    Ok(match (reasons.is_empty(), witness) {
        (false, _) => Certificate::Certified { reasons },
        (true, Some(g)) => Certificate::NotCertified {
            hdet: g.hdet(),
            witness: g,
        },
        (true, None) => unreachable!("no witness implies trivial hdet"),
    })
}

fn perfect_route_applies(pres: &Presentation) -> Result<bool, AutError> {
    let n = pres.n();
    if n % 2 == 1 {
        return Ok(false);
    }
    let full = affine_automorphisms(pres)?;
    if !full.is_finite() {
        return Ok(false);
    }
    let kernel: BTreeSet<&AffineAuto> = full.kernel().into_iter().collect();
    let pm: BTreeSet<AffineAuto> = [AffineAuto::identity(n), AffineAuto::minus_one(n)].into();
    let kernel_is_pm = kernel.len() == 2 && pm.iter().all(|g| kernel.contains(g));
    Ok(kernel_is_pm && perm::is_perfect(n, &full.perm_image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::NumberField;
    use std::sync::Arc;

    fn example_1_2() -> Presentation {
        let k = Arc::new(NumberField::new(vec![1.into(), (-1).into(), 1.into()]).unwrap());
        let a = Scalar::generator(&k);
        Presentation::from_upper(
            4,
            k,
            &[
                (1, 2, Scalar::one()),
                (1, 3, Scalar::from_int(-1)),
                (1, 4, Scalar::one()),
                (2, 3, Scalar::one()),
                (2, 4, -(&a * &a)),
                (3, 4, -a.clone()),
            ],
        )
        .unwrap()
    }

    fn zero_presentation(n: usize) -> Presentation {
        Presentation::from_fn(n, Arc::new(NumberField::rationals()), |_, _| Scalar::zero()).unwrap()
    }

    #[test]
    fn weyl_identity_scalings() {
        let w4 = Presentation::weyl(4);
        let s = solve_scaling(&w4, &w4, &Perm::identity(4)).unwrap();
        assert_eq!(
            s,
            ScalingSolutionSet::Finite(vec![vec![Scalar::one(); 4], vec![Scalar::from_int(-1); 4]])
        );
    }

    #[test]
    fn example_witness_is_a_solution() {
        let p = example_1_2();
        let a = Scalar::generator(p.number_field());
        let sigma = Perm::parse(4, "(123)").unwrap();
        let s = solve_scaling(&p, &p, &sigma).unwrap();
        let target = vec![Scalar::one(), Scalar::one(), Scalar::from_int(-1), a.clone()];
        assert!(s.representatives().contains(&target));
        let g = AffineAuto::new(sigma, target);
        assert!(g.is_valid_for(&p));
        assert_eq!(g.hdet(), -a);
    }

    #[test]
    fn unconstrained_presentation_is_a_torus() {
        let p = zero_presentation(3);
        match solve_scaling(&p, &p, &Perm::identity(3)).unwrap() {
            ScalingSolutionSet::Parametrized(par) => assert_eq!(par.free, 3),
            other => panic!("expected a torus, got {other:?}"),
        }
        let g = affine_automorphisms(&p).unwrap();
        assert_eq!(g.torus_rank, 3);
        assert!(!g.is_finite());
        assert_eq!(g.perm_image.len(), 6);
    }

    #[test]
    fn composition_and_inverse() {
        let p = example_1_2();
        let group = affine_automorphisms(&p).unwrap();
        for g in &group.finite_part {
            let gi = g.inverse();
            assert_eq!(g.compose(&gi), AffineAuto::identity(4));
            for h in group.finite_part.iter().take(5) {
                assert_eq!(g.compose(h).hdet(), &g.hdet() * &h.hdet());
                // Composition agrees with composing the algebra maps.
                let lhs = g.compose(h).to_map();
                let rhs = g.to_map().compose(&p, &h.to_map());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weyl_four_group() {
        let w4 = Presentation::weyl(4);
        let g = affine_automorphisms(&w4).unwrap();
        assert_eq!(g.order, GroupOrder::Finite(48));
        assert_eq!(g.perm_image.len(), 24);
        assert!(g.is_closed());
        assert_eq!(g1_subgroup(&g).order, GroupOrder::Finite(48));
        assert_eq!(
            gorenstein_certificate(&w4, &g, 0).unwrap(),
            Certificate::Certified {
                reasons: vec![CertificateReason::HdetTrivial]
            }
        );
        assert!(matches!(
            gorenstein_certificate(&w4, &g, 3),
            Err(AutError::UnsupportedCharacteristic(3))
        ));
    }

    #[test]
    fn example_group_is_not_certified() {
        let p = example_1_2();
        let g = affine_automorphisms(&p).unwrap();
        let g1 = g1_subgroup(&g);
        assert!(g1.finite_part.len() < g.finite_part.len());
        match gorenstein_certificate(&p, &g, 0).unwrap() {
            Certificate::NotCertified { witness, hdet } => {
                assert!(g.finite_part.contains(&witness));
                assert!(!hdet.is_one());
            }
            c => panic!("unexpected {c:?}"),
        }
        let trivial = GroupDescription::assemble(
            4,
            vec![Coset {
                perm: Perm::identity(4),
                solutions: ScalingSolutionSet::Finite(vec![vec![Scalar::one(); 4]]),
                conditions: Vec::new(),
            }],
            Vec::new(),
        );
        assert_eq!(g1_subgroup(&trivial), trivial);
        assert!(matches!(
            gorenstein_certificate(&p, &trivial, 0).unwrap(),
            Certificate::Certified { .. }
        ));
    }

    #[test]
    fn torus_with_nontrivial_hdet_is_refused() {
        let p = zero_presentation(2);
        let g = affine_automorphisms(&p).unwrap();
        assert!(matches!(gorenstein_certificate(&p, &g, 0), Err(AutError::InfiniteGroup)));
        let g1 = g1_subgroup(&g);
        assert_eq!(g1.torus_rank, 1);
    }
}
