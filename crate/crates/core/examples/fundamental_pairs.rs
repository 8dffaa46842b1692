//! Matching pairs (A, B) and the equation they must satisfy to form a switch.
//!
//! cargo run --example fundamental_pairs

use vkl::quat::{fundamental_defect, fundamental_holds, is_matching, AlgebraParams, Quaternion};
use vkl::switchlab::{make_noncommuting, verify_switch};

fn main() {
    let p = AlgebraParams::classical();
    // the Budapest pair
    let a = Quaternion::from_ints([1, 1, 0, 0], &p);
    let b = Quaternion::from_ints([0, 0, 1, 0], &p);
    println!("A = {a}, B = {b}");
    println!("matching: {}, equation holds: {}", is_matching(&a, &b), fundamental_holds(&a, &b).unwrap());
    let s = make_noncommuting(a.into(), b.into()).unwrap();
    println!("{s}\n{}\n", verify_switch(&s));

    let a = Quaternion::from_ints([1, 2, 0, 0], &p);
    let b = Quaternion::from_ints([0, 0, 1, 0], &p);
    println!("A = {a}, B = {b}");
    println!("defect c = {}", fundamental_defect(&a, &b).unwrap().to_quat());
    match make_noncommuting(a.into(), b.into()) {
        Ok(_) => println!("unexpectedly a switch"),
        Err(e) => println!("rejected: {e}"),
    }
}
