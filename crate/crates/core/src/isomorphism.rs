//! Isomorphism testing between presentations through permutation-scaling
//! witnesses, and the normal form `a12 = a13 = a23 = a1i = 1`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraMap, Element, Presentation};
use crate::autgroup::{solve_scaling, AutError, ScalingSolutionSet};
use crate::perm::Perm;
use crate::scalar::Scalar;

/// `a'_ij = λ_i λ_j a_{σ(i)σ(j)}`: the map `x_i ↦ λ_i x_{σ(i)}` from
/// `V(A')` to `V(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub perm: Perm,
    pub lambdas: Vec<Scalar>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> Self {
        IsoWitness {
            perm: Perm::identity(n),
            lambdas: vec![Scalar::one(); n],
        }
    }

    /// Checks the witness identity for every pair.
    pub fn holds(&self, a: &Presentation, a_prime: &Presentation) -> bool {
        let n = a.n();
        a_prime.n() == n
            && self.lambdas.len() == n
            && self.lambdas.iter().all(|l| !l.is_zero())
            && (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let rhs = &(&self.lambdas[i] * &self.lambdas[j])
                        * a.a(self.perm.apply(i), self.perm.apply(j));
                    *a_prime.a(i, j) == rhs
                })
            })
    }

    /// The witness for the opposite direction.
    pub fn inverse(&self) -> IsoWitness {
        let inv = self.perm.inverse();
        let lambdas = (0..self.lambdas.len())
            .map(|k| self.lambdas[inv.apply(k)].inv().expect("nonzero scaling"))
            .collect();
        IsoWitness { perm: inv, lambdas }
    }

    pub fn to_map(&self) -> AlgebraMap {
        let n = self.lambdas.len();
        AlgebraMap::new(
            (0..n)
                .map(|i| Element::var(n, self.perm.apply(i)).scale(&self.lambdas[i]))
                .collect(),
        )
    }

    /// The presentation `λ_i λ_j a_{σ(i)σ(j)}` obtained from `a`.
    pub fn transform(&self, a: &Presentation) -> Presentation {
        Presentation::from_fn(a.n(), Arc::clone(a.number_field()), |i, j| {
            &(&self.lambdas[i] * &self.lambdas[j]) * a.a(self.perm.apply(i), self.perm.apply(j))
        })
        .expect("scaled presentation is symmetric")
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.lambdas.iter().map(|s| s.to_string()).collect();
        write!(f, "sigma = {}, lambda = ({})", self.perm, l.join(","))
    }
}

impl Serialize for IsoWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IsoWitness", 2)?;
        st.serialize_field("perm", &self.perm.to_string())?;
        st.serialize_field(
            "lambda",
            &self.lambdas.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// `complete` is true when the absence of a witness rules out any
/// isomorphism (even `n`); for odd `n` only affine-diagonal witnesses
/// are searched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IsoVerdict {
    Isomorphic { witness: IsoWitness, complete: bool },
    NotIsomorphic { complete: bool },
    UndecidedNeedsSqrt {
        #[serde(serialize_with = "crate::report::display_seq")]
        radicands: Vec<Scalar>,
    },
}

impl IsoVerdict {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoVerdict::Isomorphic { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic { .. } => "isomorphic",
            IsoVerdict::NotIsomorphic { .. } => "not-isomorphic",
            IsoVerdict::UndecidedNeedsSqrt { .. } => "undecided-needs-sqrt",
        }
    }
}

/// Searches all permutations in lexicographic order for a witness
/// `a'_ij = λ_i λ_j a_{σ(i)σ(j)}`. When none exists over `K` but some
/// permutation fails only for lack of a square root, the answer is
/// `UndecidedNeedsSqrt`.
pub fn is_isomorphic(a: &Presentation, a_prime: &Presentation) -> Result<IsoVerdict, AutError> {
    let n = a.n();
    if a_prime.n() != n {
        return Err(AutError::DimensionMismatch(n, a_prime.n()));
    }
    let perms: Vec<Perm> = Perm::all(n).collect();
    let results: Vec<ScalingSolutionSet> = perms
        .par_iter()
        .map(|sigma| solve_scaling(a_prime, a, sigma))
        .collect::<Result<_, _>>()?;
    let mut radicands = Vec::new();
    for (sigma, sols) in perms.into_iter().zip(results) {
        if let Some(lambdas) = sols.representatives().into_iter().next() {
            let witness = IsoWitness { perm: sigma, lambdas };
            assert!(witness.holds(a, a_prime), "solver produced invalid witness {witness}");
            return Ok(IsoVerdict::Isomorphic {
                witness,
                complete: n.is_multiple_of(2),
            });
        }
        for r in sols.radicands() {
            if !radicands.contains(r) {
                radicands.push(r.clone());
            }
        }
    }
    Ok(if radicands.is_empty() {
        IsoVerdict::NotIsomorphic {
            complete: n.is_multiple_of(2),
        }
    } else {
        IsoVerdict::UndecidedNeedsSqrt { radicands }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    #[serde(skip)]
    pub presentation: Presentation,
    /// Witness relating the result to the input (`σ = id`).
    pub witness: IsoWitness,
    pub applied: bool,
    #[serde(serialize_with = "crate::report::display_seq")]
    pub missing_sqrt: Vec<Scalar>,
    pub reason: Option<String>,
}

/// Rescales `x_i ↦ λ_i x_i` so that `a12 = a13 = a23 = 1` and `a1i = 1`
/// for `i > 3`; for `n = 2` only `a12 = 1` is arranged.
pub fn canonical_scaling(pres: &Presentation) -> CanonicalForm {
    let n = pres.n();
    let unchanged = |reason: &str, missing: Vec<Scalar>| CanonicalForm {
        presentation: pres.clone(),
        witness: IsoWitness::identity(n),
        applied: false,
        missing_sqrt: missing,
        reason: Some(reason.to_string()),
    };
    if n < 2 {
        return unchanged("no relations to normalize", Vec::new());
    }
    if !pres.all_nonzero() {
        return unchanged("some a_ij vanish", Vec::new());
    }
    let a = |i: usize, j: usize| pres.a(i, j);
    let inv = |s: &Scalar| s.inv().expect("entries are nonzero");
    let lambdas = if n == 2 {
        vec![inv(a(0, 1)), Scalar::one()]
    } else {
        let c = a(1, 2).try_div(&(a(0, 1) * a(0, 2))).expect("entries are nonzero");
        let Some(l1) = c.try_sqrt(pres.number_field()) else {
            return unchanged("square root missing in K", vec![c]);
        };
        let mut l = vec![l1.clone()];
        l.extend((1..n).map(|i| inv(&(&l1 * a(0, i)))));
        l
    };
    let witness = IsoWitness {
        perm: Perm::identity(n),
        lambdas,
    };
    let presentation = witness.transform(pres);
    debug_assert!(witness.holds(pres, &presentation));
    CanonicalForm {
        presentation,
        witness,
        applied: true,
        missing_sqrt: Vec::new(),
        reason: None,
    }
}

/// `a12 = q^k`, all other entries 1, for `k = 1..=count`; pairwise
/// non-isomorphic for `n >= 4`.
pub fn non_isomorphic_family(n: usize, count: u32) -> Vec<Presentation> {
    (1..=count as i64)
        .map(|k| {
            let qk = Scalar::q().pow(k).expect("q is nonzero");
            Presentation::from_fn(n, Arc::new(crate::scalar::NumberField::rationals()), |i, j| {
                if (i, j) == (0, 1) || (i, j) == (1, 0) {
                    qk.clone()
                } else {
                    Scalar::one()
                }
            })
            .expect("symmetric")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::NumberField;
    use proptest::prelude::*;

    fn constant(n: usize, c: i64) -> Presentation {
        Presentation::from_fn(n, Arc::new(NumberField::rationals()), |_, _| Scalar::from_int(c)).unwrap()
    }

    fn q_powers(exps: &[i64]) -> Presentation {
        let mut k = exps.iter();
        let n = ((1.0 + (1.0 + 8.0 * exps.len() as f64).sqrt()) / 2.0).round() as usize;
        let mut entries = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                entries.push((i, j, Scalar::q().pow(*k.next().unwrap()).unwrap()));
            }
        }
        Presentation::from_upper(n, Arc::new(NumberField::rationals()), &entries).unwrap()
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let p = q_powers(&[1, 2, 4, 8, 16, 32]);
        let v = is_isomorphic(&p, &p).unwrap();
        assert_eq!(v.witness(), Some(&IsoWitness::identity(4)));
    }

    #[test]
    fn uniform_scaling() {
        let w4 = Presentation::weyl(4);
        let v = is_isomorphic(&w4, &constant(4, 4)).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.perm, Perm::identity(4));
        assert_eq!(w.lambdas, vec![Scalar::from_int(2); 4]);
        assert!(matches!(v, IsoVerdict::Isomorphic { complete: true, .. }));
    }

    #[test]
    fn zero_pattern_obstructs() {
        let w4 = Presentation::weyl(4);
        let p = Presentation::from_fn(4, Arc::new(NumberField::rationals()), |i, j| {
            if i.min(j) == 0 && i.max(j) == 1 { Scalar::zero() } else { Scalar::one() }
        })
        .unwrap();
        assert_eq!(is_isomorphic(&w4, &p).unwrap(), IsoVerdict::NotIsomorphic { complete: true });
        assert_eq!(
            is_isomorphic(&Presentation::weyl(4), &Presentation::weyl(3)),
            Err(AutError::DimensionMismatch(4, 3))
        );
    }

    #[test]
    fn distinct_q_powers_are_not_weyl() {
        let p = q_powers(&[1, 2, 4, 8, 16, 32]);
        assert_eq!(
            is_isomorphic(&p, &Presentation::weyl(4)).unwrap(),
            IsoVerdict::NotIsomorphic { complete: true }
        );
    }

    #[test]
    fn sqrt_obstruction_is_reported() {
        // q W3 is isomorphic to W3 only over Q(q)(sqrt q).
        let p = Presentation::from_fn(3, Arc::new(NumberField::rationals()), |_, _| Scalar::q()).unwrap();
        match is_isomorphic(&Presentation::weyl(3), &p).unwrap() {
            IsoVerdict::UndecidedNeedsSqrt { radicands } => assert!(!radicands.is_empty()),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn canonical_forms() {
        let w5 = Presentation::weyl(5);
        let c = canonical_scaling(&w5);
        assert!(c.applied);
        assert_eq!(c.presentation, w5);
        assert_eq!(c.witness, IsoWitness::identity(5));

        let c = canonical_scaling(&constant(4, 4));
        assert_eq!(c.presentation, Presentation::weyl(4));
        assert_eq!(c.witness.lambdas, vec![Scalar::from_ratio(1, 2); 4]);

        let q2 = Scalar::q().pow(2).unwrap();
        let p = Presentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[(1, 2, q2.clone()), (1, 3, Scalar::one()), (2, 3, Scalar::one())],
        )
        .unwrap();
        let c = canonical_scaling(&p);
        assert!(c.applied);
        assert_eq!(c.witness.lambdas[0], Scalar::q().inv().unwrap());
        assert_eq!(c.presentation, Presentation::weyl(3));

        let odd = Presentation::from_upper(
            3,
            Arc::new(NumberField::rationals()),
            &[(1, 2, Scalar::q()), (1, 3, Scalar::one()), (2, 3, Scalar::one())],
        )
        .unwrap();
        let c = canonical_scaling(&odd);
        assert!(!c.applied);
        assert_eq!(c.missing_sqrt, vec![Scalar::q().inv().unwrap()]);
    }

    #[test]
    fn family_is_pairwise_distinct() {
        let fam = non_isomorphic_family(4, 3);
        for i in 0..fam.len() {
            for j in i + 1..fam.len() {
                assert_eq!(
                    is_isomorphic(&fam[i], &fam[j]).unwrap(),
                    IsoVerdict::NotIsomorphic { complete: true }
                );
            }
        }
    }

    fn arb_case() -> impl Strategy<Value = (Vec<i64>, usize, Vec<(i64, i64)>)> {
        (
            prop::collection::vec(-4i64..5, 6),
            0usize..24,
            prop::collection::vec((-3i64..4, -2i64..3), 4),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn recovery_and_symmetry((exps, sigma_idx, lam) in arb_case()) {
            let a = q_powers(&exps);
            let sigma = Perm::all(4).nth(sigma_idx).unwrap();
            let lambdas: Vec<Scalar> = lam
                .iter()
                .map(|&(c, k)| {
                    let c = if c == 0 { 1 } else { c };
                    &Scalar::from_int(c) * &Scalar::q().pow(k).unwrap()
                })
                .collect();
            let planted = IsoWitness { perm: sigma, lambdas };
            let a_prime = planted.transform(&a);
            prop_assert!(planted.holds(&a, &a_prime));
            let found = is_isomorphic(&a, &a_prime).unwrap();
            let w = found.witness().expect("planted witness exists").clone();
            prop_assert!(w.holds(&a, &a_prime));
            prop_assert!(w.inverse().holds(&a_prime, &a));
            prop_assert!(is_isomorphic(&a_prime, &a).unwrap().witness().is_some());
        }

        #[test]
        fn canonical_scaling_is_idempotent(exps in prop::collection::vec(-3i64..4, 6)) {
            let once = canonical_scaling(&q_powers(&exps));
            if once.applied {
                let twice = canonical_scaling(&once.presentation);
                prop_assert_eq!(&twice.presentation, &once.presentation);
                prop_assert_eq!(twice.witness, IsoWitness::identity(4));
            }
        }
    }
}
