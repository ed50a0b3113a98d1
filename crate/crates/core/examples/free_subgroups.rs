//! The two elementary automorphisms built from Omega on W3 generate a
//! free group: no short reduced word acts trivially.

use qweyl::algebra::Presentation;
use qweyl::freeness::{FreeWord, WordEvaluator};

fn main() {
    let w3 = Presentation::weyl(3);
    let ev = WordEvaluator::omega(&w3).unwrap();
    println!("g: {}\nh: {}", ev.g(), ev.h());
    let words = FreeWord::enumerate(4, &[1, -1, 2, -2]);
    let trivial = ev.identity_words(&words);
    println!("{} reduced words of length <= 4, {} act trivially", words.len(), trivial.len());

    let w = FreeWord::parse("g^2 h^-1 g^3").unwrap();
    let t = ev.tau_expansion(&w).unwrap();
    println!("{w}(x1) = ({}) + ({})*x1 + ({} + {})*x2", t.d0, t.d1, t.d2, t.leading);
}
