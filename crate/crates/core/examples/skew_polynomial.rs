//! T_s membership through the Smith normal form and the triangular
//! automorphisms it enables.

use qweyl::freeness::{FreeWord, WordEvaluator};
use qweyl::skewpoly::{corollary28_autos, skew_normal_form, ts_solve, SkewPresentation};

fn main() {
    let sp = SkewPresentation::from_roots(3, 4, &[(1, 2, 1), (1, 3, 2), (2, 3, 1)]).unwrap();
    println!("x3 x2 x1 = {}", skew_normal_form(&[3, 2, 1], &sp).unwrap());
    for s in 1..=3 {
        let sol = ts_solve(&sp, s, 6).unwrap();
        println!(
            "T_{s}: particular {:?}, lattice {:?}, {} members in [0,6]^2",
            sol.particular,
            sol.lattice,
            sol.members.len()
        );
    }

    let comm = SkewPresentation::commutative(4).unwrap();
    let (g, h) = corollary28_autos(&comm, &[1, 1, 0], &[1, 1, 0]).unwrap();
    let ev = WordEvaluator::new(&comm, g, h).unwrap();
    let words = FreeWord::enumerate(3, &[1, -1, 2, -2]);
    println!("g: {}\nh: {}\n{} words, {} trivial", ev.g(), ev.h(), words.len(), ev.identity_words(&words).len());
}
