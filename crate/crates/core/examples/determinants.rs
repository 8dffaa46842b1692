//! The quaternionic determinant d on small matrices over two algebras.
//!
//! cargo run --example determinants

use vkl::detinv::{det_d, det_d_cofactor, embed};
use vkl::quat::{AlgebraParams, Quaternion};
use vkl::ring::{Mat, Ring, RingElem};

fn quat(c: [i64; 4], p: &AlgebraParams) -> RingElem {
    Quaternion::from_ints(c, p).into()
}

fn main() {
    for p in [AlgebraParams::classical(), AlgebraParams::matrix()] {
        let ring = Ring::Quaternion(p.clone());
        let m = Mat::from_rows(
            &ring,
            vec![
                vec![quat([1, 1, 0, 0], &p), quat([0, 0, 1, 0], &p)],
                vec![quat([0, 2, 0, 1], &p), quat([3, 0, 0, -1], &p)],
            ],
        );
        let d = det_d(&m).unwrap();
        println!("over {p}:\n{m}");
        println!("d = {d}  (cofactor expansion agrees: {})", d == det_d_cofactor(&m).unwrap());
        println!("complex image is {}x{}\n", embed(&m).unwrap().len(), embed(&m).unwrap().len());
    }

    // d is multiplicative and ignores row swaps
    let p = AlgebraParams::classical();
    let ring = Ring::Quaternion(p.clone());
    let a = Mat::from_rows(
        &ring,
        vec![
            vec![quat([0, 1, 0, 0], &p), quat([1, 0, 0, 0], &p)],
            vec![quat([0, 0, 1, 0], &p), quat([2, 0, 0, 1], &p)],
        ],
    );
    let b = a.hermitian();
    println!(
        "d(AB) = {}, d(A) d(B) = {}",
        det_d(&a.mul(&b).unwrap()).unwrap(),
        &det_d(&a).unwrap() * &det_d(&b).unwrap()
    );
}
