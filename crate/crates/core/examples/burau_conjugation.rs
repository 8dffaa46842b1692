//! On classical braids every switch is conjugate to a Burau switch.
//!
//! cargo run --example burau_conjugation

use vkl::braidrep::{parse_braid, represent};
use vkl::switchlab::{budapest, burau_conjugator};

fn main() {
    let s = budapest();
    let n = 3;
    let c = burau_conjugator(&s, n).unwrap();
    println!("Q = {}", c.burau_parameter);
    println!("M =\n{}\n", c.m);

    for word in ["s1", "s1 -s2 s1", "s2 s2 s1 -s2"] {
        let w = parse_braid(word, n).unwrap();
        let lhs = c.m.mul(&represent(&w, &s).unwrap()).unwrap();
        let rhs = represent(&w, &c.s_prime).unwrap().mul(&c.m).unwrap();
        println!("{word:<14} M rho(w) = rho'(w) M: {}", lhs.equals(&rhs));
    }
}
