//! Generalized quaternion algebras `(lambda, mu / F)` over rational functions.
//!
//! Basis `1, i, j, k` with `i^2 = lambda`, `j^2 = mu`, `ij = -ji = k`.
//! `(-1, -1)` gives the classical quaternions and `(-1, 1)` is `M_2(F)`,
//! bridged to explicit 2x2 matrices by [`mat2_bridge`].

use std::fmt;

use thiserror::Error;

use crate::exactalg::{AlgebraError, RatFun};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuatError {
    #[error("quaternions from different algebras: {0} vs {1}")]
    ParamsMismatch(String, String),
    #[error("{0} is not invertible (norm is zero)")]
    NotInvertible(String),
    #[error("algebra parameters must be nonzero constants")]
    BadParams,
    #[error("the 2x2 matrix model needs parameters (-1, 1), got {0}")]
    NotMatrixAlgebra(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraParams {
    pub lambda: RatFun,
    pub mu: RatFun,
}

impl AlgebraParams {
    pub fn new(lambda: RatFun, mu: RatFun) -> Result<Self, QuatError> {
        if lambda.is_zero() || mu.is_zero() || lambda.as_constant().is_none() || mu.as_constant().is_none() {
            return Err(QuatError::BadParams);
        }
        Ok(Self { lambda, mu })
    }

    pub fn from_ints(lambda: i64, mu: i64) -> Result<Self, QuatError> {
        Self::new(RatFun::from_int(lambda), RatFun::from_int(mu))
    }

    /// The classical (Hamilton) quaternions, `(-1, -1)`.
    pub fn classical() -> Self {
        Self::from_ints(-1, -1).unwrap()
    }

    /// `M_2(F)` as the algebra `(-1, 1)`.
    pub fn matrix() -> Self {
        Self::from_ints(-1, 1).unwrap()
    }

    /// Both parameters in `{+1, -1}`, as `(lambda, mu)`.
    pub fn signs(&self) -> Option<(i8, i8)> {
        let sign = |r: &RatFun| {
            if *r == RatFun::one() {
                Some(1)
            } else if *r == RatFun::from_int(-1) {
                Some(-1)
            } else {
                None
            }
        };
        Some((sign(&self.lambda)?, sign(&self.mu)?))
    }

    pub fn is_matrix_algebra(&self) -> bool {
        self.signs() == Some((-1, 1))
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion {
    pub c: [RatFun; 4],
    pub params: AlgebraParams,
}

/// A pure quaternion, kept as its three coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureQuat {
    pub c: [RatFun; 3],
    pub params: AlgebraParams,
}

fn check(a: &AlgebraParams, b: &AlgebraParams) -> Result<(), QuatError> {
    if a == b {
        Ok(())
    } else {
        Err(QuatError::ParamsMismatch(a.to_string(), b.to_string()))
    }
}

impl Quaternion {
    pub fn new(c: [RatFun; 4], params: AlgebraParams) -> Self {
        Self { c, params }
    }

    pub fn from_ints(c: [i64; 4], params: &AlgebraParams) -> Self {
        Self::new(c.map(RatFun::from_int), params.clone())
    }

    pub fn scalar(s: RatFun, params: &AlgebraParams) -> Self {
        Self::new([s, RatFun::zero(), RatFun::zero(), RatFun::zero()], params.clone())
    }

    pub fn zero(params: &AlgebraParams) -> Self {
        Self::scalar(RatFun::zero(), params)
    }

    pub fn one(params: &AlgebraParams) -> Self {
        Self::scalar(RatFun::one(), params)
    }

    pub fn i(params: &AlgebraParams) -> Self {
        Self::from_ints([0, 1, 0, 0], params)
    }

    pub fn j(params: &AlgebraParams) -> Self {
        Self::from_ints([0, 0, 1, 0], params)
    }

    pub fn k(params: &AlgebraParams) -> Self {
        Self::from_ints([0, 0, 0, 1], params)
    }

    pub fn scalar_part(&self) -> &RatFun {
        &self.c[0]
    }

    pub fn pure_part(&self) -> PureQuat {
        PureQuat { c: [self.c[1].clone(), self.c[2].clone(), self.c[3].clone()], params: self.params.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(RatFun::is_zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.c[1..].iter().all(RatFun::is_zero)
    }

    pub fn add(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        Ok(Self::new(std::array::from_fn(|n| &self.c[n] + &o.c[n]), self.params.clone()))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        Ok(Self::new(std::array::from_fn(|n| &self.c[n] - &o.c[n]), self.params.clone()))
    }

    pub fn neg(&self) -> Self {
        Self::new(std::array::from_fn(|n| -&self.c[n]), self.params.clone())
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        Self::new(std::array::from_fn(|n| &self.c[n] * s), self.params.clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        let (l, m) = (&self.params.lambda, &self.params.mu);
        let lm = l * m;
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        let s = &(&(&(a0 * b0) + &(l * &(a1 * b1))) + &(m * &(a2 * b2))) - &(&lm * &(a3 * b3));
        let x = &(&(a0 * b1) + &(a1 * b0)) - &(m * &(&(a2 * b3) - &(a3 * b2)));
        let y = &(&(a0 * b2) + &(a2 * b0)) - &(l * &(&(a3 * b1) - &(a1 * b3)));
        let z = &(&(&(a0 * b3) + &(a3 * b0)) + &(a1 * b2)) - &(a2 * b1);
        Ok(Self::new([s, x, y, z], self.params.clone()))
    }

    pub fn conj(&self) -> Self {
        Self::new([self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3]], self.params.clone())
    }

    /// `N(A) = a0^2 - lambda a1^2 - mu a2^2 + lambda mu a3^2`.
    pub fn norm(&self) -> RatFun {
        self.dot(self).unwrap()
    }

    /// `tr(A) = 2 a0`.
    pub fn trace(&self) -> RatFun {
        self.c[0].scale(&crate::exactalg::GaussRat::from_int(2))
    }

    /// The symmetric bilinear form `A.B = a0b0 - lambda a1b1 - mu a2b2 + lambda mu a3b3`.
    pub fn dot(&self, o: &Self) -> Result<RatFun, QuatError> {
        check(&self.params, &o.params)?;
        let (l, m) = (&self.params.lambda, &self.params.mu);
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &o.c;
        Ok(&(&(&(a0 * b0) - &(l * &(a1 * b1))) - &(m * &(a2 * b2))) + &(&(l * m) * &(a3 * b3)))
    }

    pub fn inv(&self) -> Result<Self, QuatError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(QuatError::NotInvertible(self.to_string()));
        }
        Ok(self.conj().scale(&n.inv()?))
    }

    pub fn is_invertible(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn commutes_with(&self, o: &Self) -> Result<bool, QuatError> {
        Ok(self.mul(o)? == o.mul(self)?)
    }

    /// Applies `f` to every coordinate.
    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        Self::new(std::array::from_fn(|n| f(&self.c[n])), self.params.clone())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut parts = Vec::new();
        for (n, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match (n, c.is_one()) {
                (0, _) => c.render(),
                (_, true) => names[n].to_string(),
                _ => format!("({})*{}", c.render(), names[n]),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl PureQuat {
    pub fn new(c: [RatFun; 3], params: AlgebraParams) -> Self {
        Self { c, params }
    }

    pub fn from_ints(c: [i64; 3], params: &AlgebraParams) -> Self {
        Self::new(c.map(RatFun::from_int), params.clone())
    }

    pub fn to_quat(&self) -> Quaternion {
        Quaternion::new([RatFun::zero(), self.c[0].clone(), self.c[1].clone(), self.c[2].clone()], self.params.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(RatFun::is_zero)
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        Self::new(std::array::from_fn(|n| &self.c[n] * s), self.params.clone())
    }

    pub fn add(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        Ok(Self::new(std::array::from_fn(|n| &self.c[n] + &o.c[n]), self.params.clone()))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        Ok(Self::new(std::array::from_fn(|n| &self.c[n] - &o.c[n]), self.params.clone()))
    }

    /// Restriction of the bilinear form: `-lambda a1b1 - mu a2b2 + lambda mu a3b3`.
    pub fn dot(&self, o: &Self) -> Result<RatFun, QuatError> {
        self.to_quat().dot(&o.to_quat())
    }

    pub fn norm(&self) -> RatFun {
        self.to_quat().norm()
    }

    /// Cross product: the symbolic determinant with first row
    /// `(-mu i, -lambda j, k)`.
    pub fn cross(&self, o: &Self) -> Result<Self, QuatError> {
        check(&self.params, &o.params)?;
        let (l, m) = (&self.params.lambda, &self.params.mu);
        let [a1, a2, a3] = &self.c;
        let [b1, b2, b3] = &o.c;
        Ok(Self::new(
            [-&(m * &(&(a2 * b3) - &(a3 * b2))), -&(l * &(&(a3 * b1) - &(a1 * b3))), &(a1 * b2) - &(a2 * b1)],
            self.params.clone(),
        ))
    }
}

/// `a x (b x c)` and the scalar triple product `[a, b, c] = a . (b x c)`.
pub fn triple_products(a: &PureQuat, b: &PureQuat, c: &PureQuat) -> Result<(PureQuat, RatFun), QuatError> {
    let bc = b.cross(c)?;
    Ok((a.cross(&bc)?, a.dot(&bc)?))
}

/// `tr(A) = N(A) != 0`.
pub fn is_balanced(a: &Quaternion) -> bool {
    let n = a.norm();
    !n.is_zero() && n == a.trace()
}

/// `A` balanced, `A.B = 0`, both invertible and not commuting. Degenerate
/// inputs give `false`.
pub fn is_matching(a: &Quaternion, b: &Quaternion) -> bool {
    if a.params != b.params || !a.is_invertible() || !b.is_invertible() {
        return false;
    }
    if a.pure_part().cross(&b.pure_part()).unwrap().is_zero() {
        return false;
    }
    is_balanced(a) && a.dot(b).unwrap().is_zero()
}

/// Checks `A^-1 B^-1 A B - B A^-1 B^-1 A = B^-1 A B - A` by direct
/// expansion. `A`, `B` and `A - 1` must be invertible.
pub fn fundamental_holds(a: &Quaternion, b: &Quaternion) -> Result<bool, QuatError> {
    check(&a.params, &b.params)?;
    let ai = a.inv()?;
    let bi = b.inv()?;
    a.sub(&Quaternion::one(&a.params))?.inv()?;
    let lhs = ai.mul(&bi)?.mul(a)?.mul(b)?.sub(&b.mul(&ai)?.mul(&bi)?.mul(a)?)?;
    let rhs = bi.mul(a)?.mul(b)?.sub(a)?;
    Ok(lhs == rhs)
}

/// The pure quaternion whose vanishing is equivalent to the fundamental
/// equation:
/// `(tr A - N A) N(b) a + (N A - tr A)(a.b) b + (b0 (N A - tr A) + 2 A.B) a x b`.
pub fn fundamental_defect(a: &Quaternion, b: &Quaternion) -> Result<PureQuat, QuatError> {
    check(&a.params, &b.params)?;
    let (pa, pb) = (a.pure_part(), b.pure_part());
    let na = a.norm();
    let tr = a.trace();
    let t1 = pa.scale(&(&(&tr - &na) * &pb.norm()));
    let t2 = pb.scale(&(&(&na - &tr) * &pa.dot(&pb)?));
    let coef = &(b.scalar_part() * &(&na - &tr)) + &a.dot(b)?.scale(&crate::exactalg::GaussRat::from_int(2));
    let t3 = pa.cross(&pb)?.scale(&coef);
    t1.add(&t2)?.add(&t3)
}

/// A 2x2 matrix `[[m00, m01], [m10, m11]]` of rational functions.
pub type Mat2 = [[RatFun; 2]; 2];

/// `a0 + a1 i + a2 j + a3 k  ->  [[a0+a3, a2+a1], [a2-a1, a0-a3]]`, the Pauli
/// model of `(-1, 1)`.
pub fn mat2_bridge(a: &Quaternion) -> Result<Mat2, QuatError> {
    if !a.params.is_matrix_algebra() {
        return Err(QuatError::NotMatrixAlgebra(a.params.to_string()));
    }
    let [a0, a1, a2, a3] = &a.c;
    Ok([[a0 + a3, a2 + a1], [a2 - a1, a0 - a3]])
}

/// Inverse of [`mat2_bridge`].
pub fn mat2_to_quat(m: &Mat2) -> Quaternion {
    let half = crate::exactalg::GaussRat::from_ratio(1, 2);
    let [[al, be], [ga, de]] = m;
    Quaternion::new(
        [(al + de).scale(&half), (be - ga).scale(&half), (be + ga).scale(&half), (al - de).scale(&half)],
        AlgebraParams::matrix(),
    )
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|r| std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])))
}

pub fn mat2_det(a: &Mat2) -> RatFun {
    &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
}

pub fn mat2_adj(a: &Mat2) -> Mat2 {
    [[a[1][1].clone(), -&a[0][1]], [-&a[1][0], a[0][0].clone()]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> AlgebraParams {
        AlgebraParams::classical()
    }

    #[test]
    fn multiplication_table() {
        for p in [h(), AlgebraParams::matrix(), AlgebraParams::from_ints(1, -1).unwrap()] {
            let (i, j, k) = (Quaternion::i(&p), Quaternion::j(&p), Quaternion::k(&p));
            let l = Quaternion::scalar(p.lambda.clone(), &p);
            let m = Quaternion::scalar(p.mu.clone(), &p);
            assert_eq!(i.mul(&j).unwrap(), k);
            assert_eq!(j.mul(&i).unwrap(), k.neg());
            assert_eq!(i.mul(&i).unwrap(), l);
            assert_eq!(j.mul(&j).unwrap(), m);
            assert_eq!(i.mul(&k).unwrap(), j.scale(&p.lambda));
            assert_eq!(j.mul(&k).unwrap(), i.scale(&p.mu).neg());
            assert_eq!(k.mul(&k).unwrap(), Quaternion::scalar(-&(&p.lambda * &p.mu), &p));
        }
    }

    #[test]
    fn small_examples() {
        let one_i = Quaternion::from_ints([1, 1, 0, 0], &h());
        let j = Quaternion::j(&h());
        assert_eq!(one_i.mul(&j).unwrap(), Quaternion::from_ints([0, 0, 1, 1], &h()));
        assert_eq!(one_i.norm(), RatFun::from_int(2));
        assert!(one_i.mul(&one_i.inv().unwrap()).unwrap() == Quaternion::one(&h()));
        assert_eq!(one_i.inv().unwrap(), Quaternion::from_ints([1, -1, 0, 0], &h()).scale(&RatFun::from_ratio(1, 2)));
        // j^-1 = j / mu
        let p = AlgebraParams::from_ints(1, -1).unwrap();
        assert_eq!(Quaternion::j(&p).inv().unwrap(), Quaternion::j(&p).scale(&p.mu.inv().unwrap()));
        assert_eq!(one_i.dot(&j).unwrap(), RatFun::zero());
    }

    #[test]
    fn isotropic_element_is_rejected() {
        let m = AlgebraParams::matrix();
        let a = Quaternion::from_ints([0, 1, 1, 0], &m);
        assert!(matches!(a.inv(), Err(QuatError::NotInvertible(_))));
    }

    #[test]
    fn mismatched_params() {
        let a = Quaternion::i(&h());
        let b = Quaternion::i(&AlgebraParams::matrix());
        assert!(matches!(a.mul(&b), Err(QuatError::ParamsMismatch(..))));
    }

    #[test]
    fn unit_triple_product() {
        let p = h();
        let (i, j, k) = (
            PureQuat::from_ints([1, 0, 0], &p),
            PureQuat::from_ints([0, 1, 0], &p),
            PureQuat::from_ints([0, 0, 1], &p),
        );
        assert_eq!(triple_products(&i, &j, &k).unwrap().1, RatFun::one());
        assert!(i.cross(&i).unwrap().is_zero());
    }

    #[test]
    fn budapest_pair_and_commuting_pair() {
        let a = Quaternion::from_ints([1, 1, 0, 0], &h());
        let b = Quaternion::j(&h());
        assert!(is_balanced(&a));
        assert!(is_matching(&a, &b));
        assert!(fundamental_holds(&a, &b).unwrap());
        assert!(!is_matching(&a, &Quaternion::i(&h())));
    }

    #[test]
    fn non_definite_dependency() {
        // a = i + t j - k, b = j over (-1, 1): a - t b + a x b = 0
        let m = AlgebraParams::matrix();
        let t = RatFun::var("t");
        let a = PureQuat::new([RatFun::one(), t.clone(), RatFun::from_int(-1)], m.clone());
        let b = PureQuat::from_ints([0, 1, 0], &m);
        let axb = a.cross(&b).unwrap();
        assert_eq!(axb, PureQuat::from_ints([-1, 0, 1], &m));
        assert!(a.sub(&b.scale(&t)).unwrap().add(&axb).unwrap().is_zero());
    }

    #[test]
    fn pauli_matrices() {
        let m = AlgebraParams::matrix();
        let k = mat2_bridge(&Quaternion::k(&m)).unwrap();
        assert_eq!(k, [[RatFun::one(), RatFun::zero()], [RatFun::zero(), RatFun::from_int(-1)]]);
        assert!(matches!(mat2_bridge(&Quaternion::k(&h())), Err(QuatError::NotMatrixAlgebra(_))));
    }
}
