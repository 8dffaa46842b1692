//! Delta_0 and Delta_1 of the virtual trefoil from its crossing list and from a braid.
//!
//! cargo run --example diagram_invariants

use vkl::braidrep::parse_braid;
use vkl::detinv::{delta0, delta1};
use vkl::diagmod::{diagram_from_braid, parse_diagram, presentation_from_braid, presentation_from_diagram};
use vkl::switchlab::switch_by_name;

const VIRTUAL_TREFOIL: &str = "
# one virtual crossing between the two classical ones
X + 2 1 3 4
X + 3 4 1 2
";

fn main() {
    let d = parse_diagram(VIRTUAL_TREFOIL).unwrap();
    let w = parse_braid("s1 s1 v1", 2).unwrap();
    println!("closure of {w} as a diagram:\n{}", diagram_from_braid(&w).unwrap());

    for name in ["alexander", "budapest", "e1", "e2"] {
        let s = switch_by_name(name, &[]).unwrap();
        let dp = presentation_from_diagram(&d, &s).unwrap();
        let bp = presentation_from_braid(&w, &s).unwrap();
        let (a, b) = (delta0(&dp, &s).unwrap(), delta0(&bp, &s).unwrap());
        println!("{:<10} Delta_0 = {a}", s.name);
        println!("{:<10} Delta_1 = {}", "", delta1(&dp, &s).unwrap());
        assert_eq!(a, b);
    }
}
