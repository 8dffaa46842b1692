//! Build the catalog switches and check the seven axioms on each.
//!
//! cargo run --example switches

use vkl::exactalg::RatFun;
use vkl::switchlab::{budapest, e2, make_alexander, verify_switch};

fn main() {
    let alexander = make_alexander(RatFun::var("B").into(), RatFun::var("C").into()).unwrap();
    let budapest_t = budapest().augment(&RatFun::var("t")).unwrap();
    let (e2, check) = e2(&RatFun::var("a"), &RatFun::var("b"), &RatFun::var("c")).unwrap();

    for s in [&alexander, &budapest(), &budapest_t, &e2] {
        println!("{s}");
        println!("{}\n", verify_switch(s));
    }
    println!("{check}");
}
