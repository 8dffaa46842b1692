//! Collapsing the orbit of a rational function under multiplication by
//! monomials in designated unit variables and by nonzero constants.

use super::mpoly::{Exps, MPoly};
use super::ratfun::RatFun;
use super::AlgebraError;

/// Multiplies `f` by the monomial in `unit_vars` that leaves neither the
/// numerator nor the denominator divisible by any of them, then scales so
/// both are primitive with positive leading coefficient.
pub fn laurent_normalize(f: &RatFun, unit_vars: &[&str]) -> Result<RatFun, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let strip = |p: &MPoly| -> MPoly {
        let mc = p.monomial_content();
        let m: Exps =
            p.vars().iter().zip(mc.iter()).map(|(v, &e)| if unit_vars.contains(&v.as_str()) { e } else { 0 }).collect();
        p.div_monomial(&m).normalized()
    };
    Ok(RatFun::from_reduced_parts(strip(f.num()), strip(f.den())))
}

/// [`laurent_normalize`] with a single Laurent variable.
pub fn laurent_normalize_t(f: &RatFun, tvar: &str) -> Result<RatFun, AlgebraError> {
    laurent_normalize(f, &[tvar])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_ratfun;

    fn norm(s: &str) -> String {
        laurent_normalize_t(&parse_ratfun(s).unwrap(), "t").unwrap().render()
    }

    #[test]
    fn clears_negative_powers() {
        assert_eq!(norm("2*t^-2+5+2*t^2"), "2+5*t^2+2*t^4");
        assert_eq!(norm("t^3"), "1");
        assert_eq!(norm("-4*t+8*t^2"), "-1+2*t");
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(laurent_normalize_t(&RatFun::zero(), "t"), Err(AlgebraError::ZeroInput));
    }

    #[test]
    fn keeps_non_unit_denominators() {
        assert_eq!(norm("(1+t)/(t^2*(a-1))"), "(1+t)/(-1+a)");
    }
}
