//! Multivariate polynomial gcd over the Gaussian rationals.
//!
//! Recursive on a main variable with the subresultant PRS, after a few cheap
//! reductions (monomial content, variables occurring on one side only, trial
//! division, univariate Euclid).

use smallvec::SmallVec;

use super::gaussrat::GaussRat;
use super::mpoly::{unify, Exps, MPoly, Vars};

/// Greatest common divisor in canonical form (see
/// [`MPoly::normalized`]). `gcd(0, q)` is `q` normalized.
pub fn poly_gcd(p: &MPoly, q: &MPoly) -> MPoly {
    let (p, q) = unify(p, q);
    let vars = p.vars().clone();
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MPoly::one().with_vars(&vars);
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let m: Exps = mp.iter().zip(&mq).map(|(a, b)| *a.min(b)).collect();
    let p1 = p.div_monomial(&mp);
    let q1 = q.div_monomial(&mq);
    let g = if p1.is_constant() || q1.is_constant() { MPoly::one().with_vars(&vars) } else { gcd_core(&p1, &q1) };
    g.mul_monomial(&m, &GaussRat::one()).normalized()
}

/// Gcd of a list, stopping early once it reaches a unit.
pub fn poly_gcd_many<'a>(items: impl IntoIterator<Item = &'a MPoly>) -> MPoly {
    let mut g = MPoly::zero();
    for p in items {
        g = poly_gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

// Both arguments share variables, are nonconstant and have no monomial factor.
fn gcd_core(p: &MPoly, q: &MPoly) -> MPoly {
    let vars = p.vars().clone();
    let occ_p = p.occurring();
    let occ_q = q.occurring();
    let only_p: Vec<usize> = occ_p.iter().copied().filter(|i| !occ_q.contains(i)).collect();
    let only_q: Vec<usize> = occ_q.iter().copied().filter(|i| !occ_p.contains(i)).collect();
    if !only_p.is_empty() {
        return gcd_against_coeffs(q, &p.coeffs_wrt(&only_p));
    }
    if !only_q.is_empty() {
        return gcd_against_coeffs(p, &q.coeffs_wrt(&only_q));
    }
    let (small, big) = if q.nterms() <= p.nterms() { (q, p) } else { (p, q) };
    if big.div_exact(small).is_some() {
        return small.normalized();
    }
    if occ_p.len() == 1 {
        return univariate_gcd(p, q, occ_p[0]);
    }
    // main variable: smallest combined degree keeps the PRS short
    let main =
        *occ_p.iter().min_by_key(|&&i| (p.degree_in(i).max(q.degree_in(i)), p.degree_in(i) + q.degree_in(i))).unwrap();
    let cp = p.coeffs_in(main);
    let cq = q.coeffs_in(main);
    let cont_p = poly_gcd_many(cp.iter().filter(|c| !c.is_zero()));
    let cont_q = poly_gcd_many(cq.iter().filter(|c| !c.is_zero()));
    let cont = poly_gcd(&cont_p, &cont_q);
    let pp: Vec<MPoly> = cp.iter().map(|c| c.div_exact(&cont_p).unwrap()).collect();
    let qq: Vec<MPoly> = cq.iter().map(|c| c.div_exact(&cont_q).unwrap()).collect();
    let g = subresultant_prs(pp, qq);
    let g = primitive_part(&g);
    let g = MPoly::from_coeffs_in(&vars, main, &g);
    (&cont * &g).normalized()
}

fn gcd_against_coeffs(base: &MPoly, coeffs: &[MPoly]) -> MPoly {
    let mut g = base.clone();
    for c in coeffs {
        g = poly_gcd(&g, c);
        if g.is_constant() {
            return g;
        }
    }
    g.normalized()
}

fn degree(a: &[MPoly]) -> usize {
    a.len() - 1
}

fn trim_poly(mut a: Vec<MPoly>) -> Vec<MPoly> {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
    a
}

fn is_zero_poly(a: &[MPoly]) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let n = degree(b);
    let lb = b[n].clone();
    let mut r: Vec<MPoly> = a.to_vec();
    let mut e = degree(a) as i64 - n as i64 + 1;
    while !is_zero_poly(&r) && degree(&r) >= n {
        let dr = degree(&r);
        let lr = r[dr].clone();
        let k = dr - n;
        let mut next: Vec<MPoly> = r.iter().map(|c| &lb * c).collect();
        for (i, bc) in b.iter().enumerate() {
            let sub = &lr * bc;
            next[i + k] = &next[i + k] - &sub;
        }
        debug_assert!(next[dr].is_zero());
        r = trim_poly(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| &f * c).collect();
    }
    r
}

fn subresultant_prs(a: Vec<MPoly>, b: Vec<MPoly>) -> Vec<MPoly> {
    let (mut a, mut b) = if degree(&a) >= degree(&b) { (a, b) } else { (b, a) };
    let vars: Vars = a[0].vars().clone();
    let mut g = MPoly::one().with_vars(&vars);
    let mut h = MPoly::one().with_vars(&vars);
    loop {
        let delta = (degree(&a) - degree(&b)) as u32;
        let r = prem(&a, &b);
        if is_zero_poly(&r) {
            return b;
        }
        if degree(&r) == 0 {
            return vec![MPoly::one().with_vars(&vars)];
        }
        let div = &g * &h.pow(delta);
        a = b;
        b = r.iter().map(|c| c.div_exact(&div).expect("subresultant division")).collect();
        g = a[degree(&a)].clone();
        h = if delta == 0 { h } else { g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update") };
    }
}

fn primitive_part(a: &[MPoly]) -> Vec<MPoly> {
    let c = poly_gcd_many(a.iter().filter(|c| !c.is_zero()));
    a.iter().map(|x| x.div_exact(&c).unwrap()).collect()
}

fn univariate_gcd(p: &MPoly, q: &MPoly, idx: usize) -> MPoly {
    let dense = |m: &MPoly| -> Vec<GaussRat> {
        let mut v = vec![GaussRat::zero(); m.degree_in(idx) as usize + 1];
        for (e, c) in m.terms() {
            v[e[idx] as usize] = c.clone();
        }
        v
    };
    let mut a = dense(p);
    let mut b = dense(q);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !(b.len() == 1 && b[0].is_zero()) {
        // a mod b
        let lb_inv = b.last().unwrap().inv().unwrap();
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let k = a.len() - b.len();
            let f = a.last().unwrap() * &lb_inv;
            for (i, bc) in b.iter().enumerate() {
                let s = bc * &f;
                a[i + k] -= &s;
            }
            a.pop();
            while a.len() > 1 && a.last().unwrap().is_zero() {
                a.pop();
            }
            if a.is_empty() {
                a.push(GaussRat::zero());
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let vars = p.vars().clone();
    let nv = vars.len();
    let terms = a.into_iter().enumerate().map(|(k, c)| {
        let mut e: Exps = SmallVec::from_elem(0, nv);
        e[idx] = k as u16;
        (e, c)
    });
    MPoly::from_terms(vars, terms).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> MPoly {
        MPoly::var(n)
    }
    fn c(n: i64) -> MPoly {
        MPoly::from_int(n)
    }

    #[test]
    fn factor_cancellation() {
        let x = v("x");
        let p = &(&x * &x) - &c(1);
        let q = &x - &c(1);
        assert_eq!(poly_gcd(&p, &q), q);
        assert_eq!(poly_gcd(&p, &MPoly::zero()), p.normalized());
        assert!(poly_gcd(&p, &(&x + &c(2))).is_one());
    }

    #[test]
    fn k3_minor_values() {
        let t = v("t");
        let t2 = &t * &t;
        let p = &(&c(2) + &t2.scale(&GaussRat::from_int(5))) + &(&t2 * &t2).scale(&GaussRat::from_int(2));
        let q = &(&c(2) + &t2.scale(&GaussRat::from_int(2))) * &p;
        assert_eq!(poly_gcd(&p, &q), p.normalized());
    }

    #[test]
    fn multivariate_common_factor() {
        let (a, b, cc) = (v("a"), v("b"), v("c"));
        let r = &(&(&a * &b) - &cc) + &c(1);
        let p = &r * &(&a + &(&b * &b));
        let q = &r * &(&(&a * &cc) - &b);
        assert_eq!(poly_gcd(&p, &q), r.normalized());
        let q2 = &r.pow(2) * &(&a - &c(3));
        assert_eq!(poly_gcd(&p.pow(2), &q2), r.pow(2).normalized());
    }

    #[test]
    fn gaussian_coefficients() {
        let x = v("x");
        let i = MPoly::constant(GaussRat::i());
        let p = &(&x * &x) + &c(1); // (x+i)(x-i)
        let q = &x - &i;
        assert_eq!(poly_gcd(&p, &q), q.normalized());
    }
}
