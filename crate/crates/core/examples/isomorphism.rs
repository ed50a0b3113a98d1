//! Recovering a planted (σ, λ) rescaling and separating a family of
//! non-isomorphic presentations.

use qweyl::isomorphism::{canonical_scaling, is_isomorphic, non_isomorphic_family, IsoWitness};
use qweyl::perm::Perm;
use qweyl::presfile::parse_weyl;
use qweyl::scalar::Scalar;

fn main() {
    let a = parse_weyl("n = 4\na[1,2] = q\na[1,3] = 2\na[1,4] = q^-1\na[2,3] = 3\na[2,4] = 1\na[3,4] = q^2\n").unwrap();
    let planted = IsoWitness {
        perm: Perm::parse(4, "(1342)").unwrap(),
        lambdas: vec![Scalar::q(), -Scalar::one(), Scalar::from_int(2), Scalar::q().pow(-1).unwrap()],
    };
    let a_prime = planted.transform(&a);
    let verdict = is_isomorphic(&a, &a_prime).unwrap();
    println!("planted {planted}\nfound   {}", verdict.witness().unwrap());

    let family = non_isomorphic_family(4, 5);
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            println!("q^{} vs q^{}: {}", i + 1, j + 1, is_isomorphic(&family[i], &family[j]).unwrap().label());
        }
    }
    let c = canonical_scaling(&a);
    println!("canonical scaling applied: {} ({:?})", c.applied, c.reason);
}
