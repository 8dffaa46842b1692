//! Matrices of virtual braids under a switch, and the defining relations of VB_n.
//!
//! cargo run --example braid_representation

use vkl::braidrep::{check_vb_relations, parse_braid, represent};
use vkl::exactalg::RatFun;
use vkl::switchlab::{budapest, make_alexander};

fn main() {
    let alexander = make_alexander(RatFun::var("B").into(), RatFun::var("C").into()).unwrap();
    let beta = parse_braid("s2 s1 v2 -s1 -s2 v1", 3).unwrap();
    println!("rho({beta}) under the Alexander switch:\n{}\n", represent(&beta, &alexander).unwrap());

    let s = budapest().augment(&RatFun::var("t")).unwrap();
    let w = parse_braid("s1 v1", 2).unwrap();
    println!("rho({w}) under {}:\n{}\n", s.name, represent(&w, &s).unwrap());

    let checks = check_vb_relations(&s, 4).unwrap();
    let bad: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
    println!("{} relations of VB_4 checked, {} fail", checks.len(), bad.len());
}
