//! W2 under the swap x1 <-> x2: generators u = x1 + x2, v = x1^3 + x2^3
//! and the relations among them.

use std::collections::HashMap;

use qweyl::algebra::{Element, PbwAlgebra, Presentation};
use qweyl::invariants::{invariant_report, verify_relation, FiniteActionGroup};

fn main() {
    let w2 = Presentation::weyl(2);
    let s2 = FiniteActionGroup::named("S2", &w2).unwrap();
    let report = invariant_report(&s2, 6, Some(6), &w2);
    println!("dims: {:?}", report.dims);
    for (g, d) in report.generators.iter().zip(&report.generator_degrees) {
        println!("generator of degree {d}: {g}");
    }
    for r in &report.relations {
        println!("relation: {r}");
    }

    let x = |i| Element::var(2, i);
    let u = &x(0) + &x(1);
    let v = &w2.pow(&x(0), 3) + &w2.pow(&x(1), 3);
    let bindings: HashMap<String, Element> = [("u".into(), u), ("v".into(), v)].into();
    for r in ["[u^2, v]", "[u, v^2]", "u*v - v*u"] {
        println!("{r} = 0: {}", verify_relation(r, &bindings, &w2).unwrap());
    }
}
