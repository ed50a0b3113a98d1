//! Whether x_i commutes or anticommutes with Omega(x1, ..., xt) inside a
//! generic n = 5 presentation.

use std::sync::Arc;

use qweyl::algebra::{PbwAlgebra, Presentation};
use qweyl::scalar::{NumberField, Scalar};

fn main() {
    let n = 5;
    let p = Presentation::from_fn(n, Arc::new(NumberField::rationals()), |i, j| {
        Scalar::from_int((2 * i + 3 * j) as i64 % 7 + 1)
    })
    .unwrap();
    for t in 2..=4 {
        let idx: Vec<usize> = (1..=t).collect();
        let omega = p.omega(&idx).unwrap();
        let signs: Vec<_> = (0..n).map(|i| p.anticommutation_sign(&omega, i)).collect();
        println!("t = {t}: signs for x1..x5 = {signs:?}, (-1)^(t-1) = {}", if t % 2 == 0 { -1 } else { 1 });
    }
}
