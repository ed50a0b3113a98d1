//! Normal forms and products in W3 and in a presentation over Q(a).

use qweyl::algebra::PbwAlgebra;
use qweyl::expr::parse_element;
use qweyl::presfile::parse_weyl;

fn main() {
    let w3 = parse_weyl("n = 3\na[1,2] = 1\na[1,3] = 1\na[2,3] = 1\n").unwrap();
    for word in [vec![2, 1], vec![3, 2, 1], vec![1, 2, 1, 2]] {
        println!("{word:?} -> {}", w3.normal_form(&word).unwrap());
    }
    let u = parse_element("x1 + x2", &w3, false).unwrap();
    println!("(x1 + x2)^2 = {}", w3.pow(&u, 2));
    println!("[x1, x2] = {}", w3.commutator(&w3.generator(0), &w3.generator(1)));

    let twisted = parse_weyl("n = 2\nminpoly a = a^2 - a + 1\na[1,2] = a + q\n").unwrap();
    let v = parse_element("a*x1 - x2/q", &twisted, true).unwrap();
    println!("v = {v}\nv^2 = {}", twisted.pow(&v, 2));
}
