//! Data derived from a switch: sideways matrices, the Burau conjugator, and
//! the Yang-Baxter and elementary-factorization checks.

use crate::ring::{Mat, MatError, Ring, RingElem};

use super::{make_burau, Switch, SwitchError};

/// The vertical actions at a crossing.
#[derive(Clone, Debug)]
pub struct SidewaysPair {
    /// `S+-`, bottom to top.
    pub up: Mat,
    /// `S-+`, top to bottom.
    pub down: Mat,
    /// `lambda = B^-1 (1 - A)`.
    pub diag_unit: RingElem,
}

impl SidewaysPair {
    /// `S+-(a, a) = (lambda a, lambda a)` and `S-+(a, a) = (lambda^-1 a, lambda^-1 a)`,
    /// i.e. the row sums are `lambda` and `lambda^-1`.
    pub fn preserves_diagonal(&self) -> Result<bool, SwitchError> {
        let li = self.diag_unit.inv()?;
        for (m, target) in [(&self.up, &self.diag_unit), (&self.down, &li)] {
            for r in 0..2 {
                if !m.get(r, 0).add(m.get(r, 1))?.equals(target) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Sideways matrices of `S`. The identity switch (`1 - A = 0`) is reported
/// as degenerate.
pub fn sideways(s: &Switch) -> Result<SidewaysPair, SwitchError> {
    let one = s.ring.one();
    let one_a = one.sub(&s.a)?;
    if one_a.is_zero() {
        return Err(SwitchError::Degenerate("1 - A = 0, so lambda = 0 is not a unit".into()));
    }
    let bi = s.b.inv().map_err(|_| SwitchError::NotUnit("B"))?;
    let ci = s.c.inv().map_err(|_| SwitchError::NotUnit("C"))?;
    let (a, b, c, d) = (&s.a, &s.b, &s.c, &s.d);
    let dbi = d.mul(&bi)?;
    let up = Mat::from_rows(&s.ring, vec![vec![dbi.clone(), c.sub(&dbi.mul(a)?)?], vec![bi.clone(), bi.mul(a)?.neg()]]);
    let aci = a.mul(&ci)?;
    let down = Mat::from_rows(&s.ring, vec![vec![ci.mul(d)?.neg(), ci.clone()], vec![b.sub(&aci.mul(d)?)?, aci]]);
    let lambda = bi.mul(&one_a)?;
    if !lambda.is_unit() {
        return Err(SwitchError::Degenerate(format!("lambda = {lambda} is not a unit")));
    }
    let one_d = one.sub(d)?.inv().map_err(|_| SwitchError::NotUnit("1 - D"))?;
    if !one_d.mul(c)?.equals(&lambda) {
        return Err(SwitchError::Degenerate("B^-1 (1 - A) differs from (1 - D)^-1 C".into()));
    }
    Ok(SidewaysPair { up, down, diag_unit: lambda })
}

/// `S^-1` read as a switch.
pub fn inverse_switch(s: &Switch) -> Result<Switch, SwitchError> {
    let m = s.inverse()?;
    let mut t = Switch::unchecked(
        &format!("{}^-1", s.name),
        s.ring.clone(),
        [m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()],
    );
    t.unit_vars = s.unit_vars.clone();
    Ok(t)
}

/// Conjugation data turning a non-commuting switch representation into Burau.
#[derive(Clone, Debug)]
pub struct BurauConjugator {
    pub m: Mat,
    /// `S' = [[0, 1], [Q, 1 - Q]]`.
    pub s_prime: Switch,
    /// `Q = (1 - A)(1 - D)`.
    pub burau_parameter: RingElem,
}

/// `M` has first row `(1, 0, ...)`; each later row is `A` followed by the
/// previous row multiplied on the left by `B`.
pub fn burau_conjugator(s: &Switch, n: usize) -> Result<BurauConjugator, SwitchError> {
    if !s.is_noncommuting() {
        return Err(SwitchError::Commuting);
    }
    let one = s.ring.one();
    let q = one.sub(&s.a)?.mul(&one.sub(&s.d)?)?;
    let mut s_prime = make_burau(q.clone())?;
    s_prime.unit_vars = s.unit_vars.clone();
    let mut m = Mat::zeros(&s.ring, n, n);
    if n > 0 {
        m.set(0, 0, one);
    }
    for r in 1..n {
        m.set(r, 0, s.a.clone());
        for c in 1..=r {
            let v = s.b.mul(m.get(r - 1, c - 1))?;
            m.set(r, c, v);
        }
    }
    Ok(BurauConjugator { m, s_prime, burau_parameter: q })
}

/// `(S x id)(id x S)(S x id) = (id x S)(S x id)(id x S)` on 3x3 block matrices.
pub fn yang_baxter_holds(s: &Switch) -> Result<bool, MatError> {
    let m = s.matrix();
    let s1 = Mat::embed_block(&m, 3, 0);
    let s2 = Mat::embed_block(&m, 3, 1);
    let lhs = s1.mul(&s2)?.mul(&s1)?;
    let rhs = s2.mul(&s1)?.mul(&s2)?;
    Ok(lhs.equals(&rhs))
}

/// `S = diag(A, 1) [[1, 0], [C, 1]] diag(1, 1 - A^-1) [[1, A^-1 B], [0, 1]]`.
pub fn elementary_factorization_holds(s: &Switch) -> Result<bool, SwitchError> {
    let r: &Ring = &s.ring;
    let ai = s.a.inv().map_err(|_| SwitchError::NotUnit("A"))?;
    let (z, o) = (r.zero(), r.one());
    let f1 = Mat::from_rows(r, vec![vec![s.a.clone(), z.clone()], vec![z.clone(), o.clone()]]);
    let f2 = Mat::from_rows(r, vec![vec![o.clone(), z.clone()], vec![s.c.clone(), o.clone()]]);
    let f3 = Mat::from_rows(r, vec![vec![o.clone(), z.clone()], vec![z.clone(), o.sub(&ai)?]]);
    let f4 = Mat::from_rows(r, vec![vec![o.clone(), ai.mul(&s.b)?], vec![z, o]]);
    Ok(f1.mul(&f2)?.mul(&f3)?.mul(&f4)?.equals(&s.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RatFun;
    use crate::switchlab::{budapest, e1, identity, make_alexander, verify_switch};

    #[test]
    fn budapest_sideways() {
        let s = budapest();
        let p = sideways(&s).unwrap();
        assert!(p.preserves_diagonal().unwrap());
        let inv = sideways(&inverse_switch(&s).unwrap()).unwrap();
        assert!(inv.up.equals(&p.down.inverse().unwrap()));
        assert!(inv.down.equals(&p.up.inverse().unwrap()));
    }

    #[test]
    fn identity_is_degenerate() {
        assert!(matches!(sideways(&identity(&Ring::Commutative)), Err(SwitchError::Degenerate(_))));
    }

    #[test]
    fn alexander_lambda_is_b_inverse() {
        let s = make_alexander(RatFun::var("B").into(), RatFun::var("C").into()).unwrap();
        let p = sideways(&s).unwrap();
        assert!(p.diag_unit.equals(&RatFun::var("B").inv().unwrap().into()));
    }

    #[test]
    fn conjugator_budapest_n2() {
        let s = budapest();
        let c = burau_conjugator(&s, 2).unwrap();
        assert!(verify_switch(&c.s_prime).passes());
        let lhs = c.m.mul(&s.matrix()).unwrap();
        let rhs = c.s_prime.matrix().mul(&c.m).unwrap();
        assert!(lhs.equals(&rhs));
        // A^2 + BC = Q + (1 - Q) A
        let one = s.ring.one();
        let q = &c.burau_parameter;
        let l = s.a.mul(&s.a).unwrap().add(&s.b.mul(&s.c).unwrap()).unwrap();
        let r = q.add(&one.sub(q).unwrap().mul(&s.a).unwrap()).unwrap();
        assert!(l.equals(&r));
    }

    #[test]
    fn e1_q_commutes_with_b() {
        let v = RatFun::var;
        let (s, _) = e1(&v("x"), &v("y"), &v("z")).unwrap();
        let c = burau_conjugator(&s, 3).unwrap();
        let q = &c.burau_parameter;
        assert!(q.mul(&s.b).unwrap().equals(&s.b.mul(q).unwrap()));
    }

    #[test]
    fn yang_baxter_and_factorization() {
        let s = budapest();
        assert!(yang_baxter_holds(&s).unwrap());
        assert!(elementary_factorization_holds(&s).unwrap());
    }
}
