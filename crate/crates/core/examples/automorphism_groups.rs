//! Affine automorphism groups, the trivial-hdet subgroup and the
//! Gorenstein certificate.

use qweyl::autgroup::{affine_automorphisms, Certificate, g1_subgroup, gorenstein_certificate};
use qweyl::presfile::parse_weyl;

const SIXTH_ROOT: &str = "n = 4
minpoly a = a^2 - a + 1
a[1,2] = 1
a[1,3] = -1
a[1,4] = 1
a[2,3] = 1
a[2,4] = -a^2
a[3,4] = -a
";

fn main() {
    for (name, text) in [
        ("W4", "n = 4\na[1,2] = 1\na[1,3] = 1\na[1,4] = 1\na[2,3] = 1\na[2,4] = 1\na[3,4] = 1\n"),
        ("sixth root", SIXTH_ROOT),
        ("q powers", "n = 4\na[1,2] = q\na[1,3] = q^2\na[1,4] = q^4\na[2,3] = q^8\na[2,4] = q^16\na[3,4] = q^32\n"),
        ("zero", "n = 3\n"),
    ] {
        let p = parse_weyl(text).unwrap();
        let g = affine_automorphisms(&p).unwrap();
        println!("{name}: |G| = {}, torus rank {}, {} permutations", g.order, g.torus_rank, g.perm_image.len());
        if !g.needs_sqrt.is_empty() {
            println!("  over the closure: |G| = {}", g.closure_order);
        }
        if g.is_finite() {
            let g1 = g1_subgroup(&g);
            println!("  |G1| = {}", g1.order);
            match gorenstein_certificate(&p, &g, 0).unwrap() {
                Certificate::Certified { reasons } => println!("  hdet trivial: {reasons:?}"),
                Certificate::NotCertified { witness, hdet } => {
                    println!("  not certified: hdet({witness}) = {hdet}")
                }
            }
        }
    }
}
