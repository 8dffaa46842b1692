//! The determinant functional `d`.
//!
//! Over a commutative ring `d` is the ordinary determinant. Over a quaternion
//! algebra with `lambda, mu` in `{+1, -1}` every entry is expanded through
//! the embedding
//!
//! ```text
//! i -> [[0, s], [-s, 0]],  j -> [[0, r], [r, 0]],  k = ij,
//! s = sqrt(-lambda),  r = sqrt(mu)
//! ```
//!
//! into a `2n x 2n` commutative matrix, whose ordinary determinant is taken.
//! With `lambda, mu = +-1` both roots are `1` or `I`, so everything stays in
//! the Gaussian rationals.

use std::collections::HashMap;

use crate::exactalg::{poly_gcd, MPoly, RatFun};
use crate::quat::{AlgebraParams, Quaternion};
use crate::ring::{Mat, Ring, RingElem};

use super::DetError;

fn sqrt_pm1(sign: i8) -> RatFun {
    if sign == 1 {
        RatFun::one()
    } else {
        RatFun::i()
    }
}

/// Images of `i`, `j`, `k` in `M_2` over the Gaussian rationals.
pub fn embedding_units(params: &AlgebraParams) -> Result<[[[RatFun; 2]; 2]; 3], DetError> {
    let (l, m) = params.signs().ok_or_else(|| DetError::UnsupportedParams(Box::new(params.clone())))?;
    let s = sqrt_pm1(-l);
    let r = sqrt_pm1(m);
    let z = RatFun::zero;
    let i = [[z(), s.clone()], [-&s, z()]];
    let j = [[z(), r.clone()], [r, z()]];
    let k = crate::quat::mat2_mul(&i, &j);
    Ok([i, j, k])
}

fn embed_quat(q: &Quaternion, units: &[[[RatFun; 2]; 2]; 3]) -> [[RatFun; 2]; 2] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let mut acc = if r == c { q.c[0].clone() } else { RatFun::zero() };
            for (n, u) in units.iter().enumerate() {
                if !q.c[n + 1].is_zero() && !u[r][c].is_zero() {
                    acc = &acc + &(&q.c[n + 1] * &u[r][c]);
                }
            }
            acc
        })
    })
}

/// Expands a matrix over the switch ring into the commutative matrix whose
/// ordinary determinant is `d`.
pub fn embed(m: &Mat) -> Result<Vec<Vec<RatFun>>, DetError> {
    match &m.ring {
        Ring::Commutative => Ok((0..m.rows)
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|e| match e {
                        RingElem::Scalar(s) => s.clone(),
                        RingElem::Quat(q) => q.c[0].clone(),
                    })
                    .collect()
            })
            .collect()),
        Ring::Quaternion(p) => {
            let units = embedding_units(p)?;
            let n = m.rows;
            let mut out = vec![vec![RatFun::zero(); 2 * m.cols]; 2 * n];
            for r in 0..n {
                for c in 0..m.cols {
                    let q = match m.get(r, c) {
                        RingElem::Quat(q) => q.clone(),
                        RingElem::Scalar(s) => Quaternion::scalar(s.clone(), p),
                    };
                    let b = embed_quat(&q, &units);
                    for (dr, row) in b.into_iter().enumerate() {
                        for (dc, v) in row.into_iter().enumerate() {
                            out[2 * r + dr][2 * c + dc] = v;
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    let g = poly_gcd(a, b);
    (a * b).div_exact(&g).unwrap()
}

/// Multiplies each row by the lcm of its denominators. Returns the
/// polynomial matrix and the product of the multipliers.
pub fn clear_denominators(m: &[Vec<RatFun>]) -> (Vec<Vec<MPoly>>, MPoly) {
    let mut total = MPoly::one();
    let rows = m
        .iter()
        .map(|row| {
            let mut l = MPoly::one();
            for e in row {
                if !e.is_zero() && !e.den().is_one() {
                    l = lcm(&l, e.den());
                }
            }
            total = &total * &l;
            row.iter()
                .map(|e| if e.is_zero() { MPoly::zero() } else { &e.num().clone() * &l.div_exact(e.den()).unwrap() })
                .collect()
        })
        .collect();
    (rows, total)
}

/// Fraction-free Gaussian elimination (Bareiss) over a polynomial ring.
pub fn bareiss(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        // smallest nonzero pivot keeps intermediate entries small
        let Some(p) = (k..n).filter(|&r| !m[r][k].is_zero()).min_by_key(|&r| m[r][k].nterms()) else {
            return MPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                row[j] = v.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            row[k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Determinant by Laplace expansion along rows, memoized on column subsets.
/// Division free, so it is independent of [`bareiss`].
pub fn laplace(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    assert!(n <= 20, "laplace expansion is for small matrices");
    // memo[mask] = det of rows (n - |mask|).. and columns in mask
    let mut memo: HashMap<u32, MPoly> = HashMap::new();
    memo.insert(0, MPoly::one());
    for size in 1..=n {
        let row = n - size;
        let masks: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == size).collect();
        for mask in masks {
            let mut acc = MPoly::zero();
            let mut sign_neg = false;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let sub = &memo[&(mask & !(1 << c))];
                if !m[row][c].is_zero() && !sub.is_zero() {
                    let term = &m[row][c] * sub;
                    acc = if sign_neg { &acc - &term } else { &acc + &term };
                }
                sign_neg = !sign_neg;
            }
            memo.insert(mask, acc);
        }
        // entries of size-2 are no longer needed
        if size >= 2 {
            memo.retain(|k, _| k.count_ones() as usize >= size - 1);
        }
    }
    memo.remove(&((1u32 << n) - 1)).unwrap()
}

/// Ordinary determinant of a commutative matrix of rational functions.
pub fn det_commutative(m: &[Vec<RatFun>]) -> RatFun {
    let (p, l) = clear_denominators(m);
    RatFun::new(bareiss(p), l).unwrap()
}

/// Same value as [`det_commutative`] computed by cofactor expansion.
pub fn det_commutative_cofactor(m: &[Vec<RatFun>]) -> RatFun {
    let (p, l) = clear_denominators(m);
    RatFun::new(laplace(&p), l).unwrap()
}

/// `d(M)` for a square matrix over the switch ring.
pub fn det_d(m: &Mat) -> Result<RatFun, DetError> {
    if m.rows != m.cols {
        return Err(DetError::NotSquare(m.rows, m.cols));
    }
    Ok(det_commutative(&embed(m)?))
}

/// `d(M)` through cofactor expansion of the embedded matrix.
pub fn det_d_cofactor(m: &Mat) -> Result<RatFun, DetError> {
    if m.rows != m.cols {
        return Err(DetError::NotSquare(m.rows, m.cols));
    }
    Ok(det_commutative_cofactor(&embed(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_ratfun;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    #[test]
    fn one_by_one_is_norm() {
        for p in [AlgebraParams::classical(), AlgebraParams::matrix(), AlgebraParams::from_ints(1, 1).unwrap()] {
            let q = Quaternion::new([rf("x"), rf("y"), rf("2"), rf("z")], p.clone());
            let m = Mat::from_rows(&Ring::Quaternion(p), vec![vec![RingElem::Quat(q.clone())]]);
            assert_eq!(det_d(&m).unwrap(), q.norm());
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        for p in [
            AlgebraParams::classical(),
            AlgebraParams::from_ints(1, -1).unwrap(),
            AlgebraParams::from_ints(1, 1).unwrap(),
        ] {
            let u = embedding_units(&p).unwrap();
            let i2 = crate::quat::mat2_mul(&u[0], &u[0]);
            assert_eq!(i2[0][0], p.lambda);
            let j2 = crate::quat::mat2_mul(&u[1], &u[1]);
            assert_eq!(j2[1][1], p.mu);
        }
    }

    #[test]
    fn algorithms_agree() {
        let m: Vec<Vec<RatFun>> = vec![
            vec![rf("x"), rf("1/t"), rf("y+1")],
            vec![rf("t"), rf("0"), rf("x*y")],
            vec![rf("I"), rf("x-1"), rf("3/(x+t)")],
        ];
        assert_eq!(det_commutative(&m), det_commutative_cofactor(&m));
        let z = vec![vec![rf("x"), rf("y")], vec![rf("2*x"), rf("2*y")]];
        assert!(det_commutative(&z).is_zero());
    }

    #[test]
    fn unsupported_parameters() {
        let p = AlgebraParams::from_ints(2, -1).unwrap();
        let m = Mat::identity(&Ring::Quaternion(p), 1);
        assert!(matches!(det_d(&m), Err(DetError::UnsupportedParams(_))));
    }
}
