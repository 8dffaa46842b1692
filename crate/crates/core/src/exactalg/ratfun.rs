//! Reduced fractions of multivariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussrat::GaussRat;
use super::gcd::poly_gcd;
use super::mpoly::MPoly;
use super::AlgebraError;

/// `num / den` with `gcd(num, den) = 1` and `den` normalized (Gaussian
/// integer coefficients, coprime components, positive integer leading
/// coefficient). Structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        Self { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: MPoly::from_int(n), den: MPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_const(GaussRat::from_ratio(n, d))
    }

    pub fn from_const(c: GaussRat) -> Self {
        Self { num: MPoly::constant(c), den: MPoly::one() }
    }

    /// The imaginary unit as a constant function.
    pub fn i() -> Self {
        Self::from_const(GaussRat::i())
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MPoly::var(name))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::one().with_vars(p.vars());
        Self { num: p, den }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero { denominator: "0".into() });
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return Self { den: MPoly::one().with_vars(num.vars()), num };
        }
        if den.is_constant() {
            let s = den.leading_coeff().inv().unwrap();
            let one = MPoly::one().with_vars(den.vars());
            return Self { num: num.scale(&s), den: one };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) =
            if g.is_constant() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        let s = den.normalizing_scalar();
        Self { num: num.scale(&s), den: den.scale(&s) }
    }

    /// Assembles a fraction whose parts are already coprime and normalized.
    pub(crate) fn from_reduced_parts(num: MPoly, den: MPoly) -> Self {
        Self { num, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero { denominator: self.render() });
        }
        // already coprime: only the unit normalization changes
        let s = self.num.normalizing_scalar();
        Ok(Self { num: self.den.scale(&s), den: self.num.scale(&s) })
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero { denominator: other.render() });
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        let den = base.den.pow(k);
        let s = den.normalizing_scalar();
        Ok(Self { num: base.num.pow(k).scale(&s), den: den.scale(&s) })
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Complex conjugation of the coefficients.
    pub fn conj_coeffs(&self) -> Self {
        let conj =
            |p: &MPoly| MPoly::from_terms(p.vars().clone(), p.terms().iter().map(|(e, c)| (e.clone(), c.conj())));
        Self::reduce(conj(&self.num), conj(&self.den))
    }

    /// Substitutes `value` for the variable `var`. Panics if the
    /// denominator vanishes; see [`RatFun::try_subs`].
    pub fn subs(&self, var: &str, value: &RatFun) -> RatFun {
        self.try_subs(var, value).expect("substitution made the denominator vanish")
    }

    pub fn try_subs(&self, var: &str, value: &RatFun) -> Result<RatFun, AlgebraError> {
        fn subs_poly(p: &MPoly, var: &str, value: &RatFun) -> RatFun {
            let Some(idx) = p.var_index(var) else {
                return RatFun::from_poly(p.clone());
            };
            let coeffs = p.coeffs_in(idx);
            // Horner in the substituted variable
            let mut acc = RatFun::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &RatFun::from_poly(c.clone());
            }
            acc
        }
        subs_poly(&self.num, var, value).div(&subs_poly(&self.den, var, value))
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let wrap = |p: &MPoly| {
            let s = p.render();
            if p.nterms() == 1 && !s.contains('+') && !s.starts_with('-') && !s.contains('*') && !s.contains('/') {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::reduce(&self.num + &o.num, self.den.clone());
        }
        RatFun::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun { num: &self.num * &o.num, den: MPoly::one() };
        }
        // cross-cancel before multiplying
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let s = den.normalizing_scalar();
        RatFun { num: num.scale(&s), den: den.scale(&s) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}
