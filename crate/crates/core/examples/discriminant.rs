//! Discriminants for n = 2 and W4, and their invariance under Aut(W4).

use qweyl::algebra::Presentation;
use qweyl::autgroup::affine_automorphisms;
use qweyl::discriminant::{check_disc_invariance, discriminant};
use qweyl::presfile::parse_weyl;

fn main() {
    for a12 in ["0", "1", "q"] {
        let p = parse_weyl(&format!("n = 2\na[1,2] = {a12}\n")).unwrap();
        let d = discriminant(&p).unwrap();
        println!("a12 = {a12}: d = {}", d.poly);
    }
    let w4 = Presentation::weyl(4);
    let d = discriminant(&w4).unwrap();
    println!("W4: leading monomial {:?}, {} terms", d.leading_monomial(), d.poly.len());
    let group = affine_automorphisms(&w4).unwrap();
    for g in group.finite_part.iter().take(6) {
        println!("  {g}: g(d) = {} * d", check_disc_invariance(&d, g).unwrap());
    }
}
