//! The three Kishino knots: the Alexander switch separates K1 from K2, and
//! the Budapest switch sees K3, which the Alexander switch misses.
//!
//! cargo run --example kishino

use vkl::detinv::{check_minor_independence, classicality_obstruction, delta1};
use vkl::exactalg::RatFun;
use vkl::knots::builtin;
use vkl::switchlab::{budapest, switch_by_name};

fn main() {
    let alexander = switch_by_name("alexander", &[]).unwrap();
    let budapest_t = budapest().augment(&RatFun::var("t")).unwrap();

    for name in ["kishino1", "kishino2", "kishino3"] {
        let k = builtin(name).unwrap();
        let pa = k.presentation(&alexander).unwrap();
        let pb = k.presentation(&budapest_t).unwrap();
        println!("{name}: {}", k.note);
        println!("  alexander   Delta_1 = {}", delta1(&pa, &alexander).unwrap());
        println!("  budapest(t) Delta_1 = {}", delta1(&pb, &budapest_t).unwrap());
        println!("  {:?}", classicality_obstruction(&pb, &budapest_t).unwrap());
    }

    let k3 = builtin("kishino3").unwrap();
    let p = k3.presentation(&budapest_t).unwrap();
    println!("\nminors of K3:\n{}", check_minor_independence(&p, &budapest_t).unwrap());
}
