//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Variables are kept sorted by name, so two polynomials built in different
//! orders always share one graded-lex term order once unified.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::gaussrat::GaussRat;

pub type Exps = SmallVec<[u16; 6]>;
pub type Vars = Arc<[String]>;

/// Graded lexicographic comparison: total degree first, then the first
/// variable is most significant.
pub fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn empty_vars() -> Vars {
    Arc::from(Vec::<String>::new())
}

#[derive(Clone, Debug)]
pub struct MPoly {
    vars: Vars,
    /// Sorted by descending graded-lex order; no zero coefficients.
    terms: Vec<(Exps, GaussRat)>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self { vars: empty_vars(), terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Exps::new(), c)] };
        Self { vars: empty_vars(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRat::from_int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut e = Exps::new();
        e.push(1);
        Self { vars: Arc::from(vec![name.to_string()]), terms: vec![(e, GaussRat::one())] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms. `vars` must be sorted and duplicate-free.
    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Exps, GaussRat)>) -> Self {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]));
        let mut acc: HashMap<Exps, GaussRat> = HashMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), vars.len());
            if c.is_zero() {
                continue;
            }
            acc.entry(e).and_modify(|x| *x += &c).or_insert(c);
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: Vars, acc: HashMap<Exps, GaussRat>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        Self { vars, terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, GaussRat)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.first().map(|t| t.1.clone()).unwrap_or_else(GaussRat::zero))
    }

    pub fn leading(&self) -> Option<&(Exps, GaussRat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> GaussRat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(GaussRat::zero)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, idx: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[idx]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn occurring(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.iter().any(|(e, _)| e[i] > 0)).collect()
    }

    /// Re-expresses the polynomial over a sorted superset of its variables.
    pub fn with_vars(&self, vars: &Vars) -> MPoly {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Self { vars: vars.clone(), terms: self.terms.clone() };
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable missing from target set"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Exps = SmallVec::from_elem(0, vars.len());
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect::<Vec<_>>();
        // remapping into a sorted superset preserves the relative order of
        // the old variables, and the new ones are all zero, so the term order
        // is unchanged
        Self { vars: vars.clone(), terms }
    }

    /// Drops variables that do not occur.
    pub fn trim(&self) -> MPoly {
        let occ = self.occurring();
        if occ.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vars = occ.iter().map(|&i| self.vars[i].clone()).collect::<Vec<_>>().into();
        let terms = self.terms.iter().map(|(e, c)| (occ.iter().map(|&i| e[i]).collect::<Exps>(), c.clone())).collect();
        Self { vars, terms }
    }

    pub fn scale(&self, c: &GaussRat) -> MPoly {
        if c.is_zero() {
            return Self { vars: self.vars.clone(), terms: Vec::new() };
        }
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, exps: &[u16], c: &GaussRat) -> MPoly {
        if c.is_zero() {
            return Self { vars: self.vars.clone(), terms: Vec::new() };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one().with_vars(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (a, d) = unify(self, d);
        if a.is_zero() {
            return Some(a.into_owned());
        }
        let vars = a.vars.clone();
        if d.is_constant() {
            let inv = d.leading_coeff().inv().unwrap();
            return Some(a.scale(&inv));
        }
        let (dl_e, dl_c) = d.terms[0].clone();
        let dl_inv = dl_c.inv().unwrap();
        let mut rem: std::collections::BTreeMap<GrlexKey, GaussRat> =
            a.terms.iter().map(|(e, c)| (GrlexKey(e.clone()), c.clone())).collect();
        let mut quot: Vec<(Exps, GaussRat)> = Vec::new();
        while let Some((k, c)) = rem.pop_last() {
            let e = k.0;
            if e.iter().zip(&dl_e).any(|(x, y)| x < y) {
                return None;
            }
            let qe: Exps = e.iter().zip(&dl_e).map(|(x, y)| x - y).collect();
            let qc = &c * &dl_inv;
            for (de, dc) in d.terms.iter().skip(1) {
                let pe: Exps = de.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let pc = dc * &qc;
                let key = GrlexKey(pe);
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &pc;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -pc);
                    }
                }
            }
            quot.push((qe, qc));
        }
        // quotient terms were produced in strictly descending order
        Some(MPoly { vars, terms: quot })
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exps {
        let mut m: Exps = SmallVec::from_elem(0, self.vars.len());
        let mut first = true;
        for (e, _) in &self.terms {
            if first {
                m = e.clone();
                first = false;
            } else {
                for (a, b) in m.iter_mut().zip(e) {
                    *a = (*a).min(*b);
                }
            }
        }
        m
    }

    /// Divides by a monomial that is known to divide every term.
    pub fn div_monomial(&self, m: &[u16]) -> MPoly {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone())).collect(),
        }
    }

    /// The scalar `s` such that `s * self` has Gaussian-integer coefficients
    /// whose integer components are coprime and a positive integer leading
    /// coefficient. This picks one representative of each orbit under
    /// nonzero constants.
    pub fn normalizing_scalar(&self) -> GaussRat {
        if self.is_zero() {
            return GaussRat::one();
        }
        let monic = self.leading_coeff().inv().unwrap();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(&(c * &monic).denom_lcm());
        }
        let mut g = BigInt::zero();
        let den_r = BigRational::from_integer(den.clone());
        for (_, c) in &self.terms {
            let x = (c * &monic).scale(&den_r);
            g = g.gcd(&x.numer_gcd());
        }
        monic.scale(&BigRational::new(den, g))
    }

    pub fn normalized(&self) -> MPoly {
        self.scale(&self.normalizing_scalar())
    }

    /// Splits into coefficients with respect to variable `idx`:
    /// `self = sum_k coeffs[k] * x^k`, coefficients free of `x`.
    pub fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let deg = self.degree_in(idx) as usize;
        let mut buckets: Vec<Vec<(Exps, GaussRat)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let k = e[idx] as usize;
            let mut ne = e.clone();
            ne[idx] = 0;
            buckets[k].push((ne, c.clone()));
        }
        // filtering one exponent out of a descending list keeps it descending
        buckets.into_iter().map(|terms| MPoly { vars: self.vars.clone(), terms }).collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(vars: &Vars, idx: usize, coeffs: &[MPoly]) -> MPoly {
        let mut all = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let c = c.with_vars(vars);
            for (e, x) in c.terms {
                let mut ne = e;
                ne[idx] += k as u16;
                all.push((ne, x));
            }
        }
        MPoly::from_terms(vars.clone(), all)
    }

    /// Groups terms by their exponents on the variables in `idxs`, returning
    /// the coefficient polynomials (free of those variables).
    pub fn coeffs_wrt(&self, idxs: &[usize]) -> Vec<MPoly> {
        let mut groups: HashMap<Exps, Vec<(Exps, GaussRat)>> = HashMap::new();
        for (e, c) in &self.terms {
            let key: Exps = idxs.iter().map(|&i| e[i]).collect();
            let mut ne = e.clone();
            for &i in idxs {
                ne[i] = 0;
            }
            groups.entry(key).or_default().push((ne, c.clone()));
        }
        let mut out: Vec<MPoly> = groups.into_values().map(|terms| MPoly { vars: self.vars.clone(), terms }).collect();
        // smallest first so gcd loops hit a unit early
        out.sort_by_key(|p| (p.nterms(), p.total_degree()));
        out
    }

    /// Evaluates variable `idx` at a constant.
    pub fn eval_var(&self, idx: usize, v: &GaussRat) -> MPoly {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = e.clone();
            let k = ne[idx];
            ne[idx] = 0;
            (ne, c * &v.pow(k as u32))
        });
        MPoly::from_terms(self.vars.clone(), terms)
    }

    /// Renders in ascending graded-lex order, e.g. `2+5*t^2+2*t^4`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], x) })
                .collect();
            let s = if mono.is_empty() {
                c.render(false)
            } else {
                let m = mono.join("*");
                if c.is_one() {
                    m
                } else if (-c).is_one() {
                    format!("-{m}")
                } else {
                    format!("{}*{}", c.render(true), m)
                }
            };
            if idx > 0 && !s.starts_with('-') {
                out.push('+');
            }
            out.push_str(&s);
        }
        out
    }
}

/// Wrapper giving exponent vectors the graded-lex order for ordered maps.
#[derive(Clone, PartialEq, Eq, Debug)]
struct GrlexKey(Exps);

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex(&self.0, &other.0)
    }
}

fn merge_vars(a: &Vars, b: &Vars) -> Vars {
    let mut all: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    all.sort();
    all.dedup();
    all.into()
}

/// Brings two polynomials onto a common variable set.
pub fn unify<'a>(a: &'a MPoly, b: &'a MPoly) -> (std::borrow::Cow<'a, MPoly>, std::borrow::Cow<'a, MPoly>) {
    use std::borrow::Cow;
    if Arc::ptr_eq(&a.vars, &b.vars) || a.vars[..] == b.vars[..] {
        return (Cow::Borrowed(a), Cow::Borrowed(b));
    }
    if b.vars.iter().all(|v| a.vars.contains(v)) {
        return (Cow::Borrowed(a), Cow::Owned(b.with_vars(&a.vars)));
    }
    if a.vars.iter().all(|v| b.vars.contains(v)) {
        return (Cow::Owned(a.with_vars(&b.vars)), Cow::Borrowed(b));
    }
    let vars = merge_vars(&a.vars, &b.vars);
    (Cow::Owned(a.with_vars(&vars)), Cow::Owned(b.with_vars(&vars)))
}

fn add_sorted(a: &MPoly, b: &MPoly, negate_b: bool) -> MPoly {
    let (a, b) = unify(a, b);
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        let ord = if i == a.terms.len() {
            Ordering::Less
        } else if j == b.terms.len() {
            Ordering::Greater
        } else {
            grlex(&a.terms[i].0, &b.terms[j].0)
        };
        match ord {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (e, c) = &b.terms[j];
                out.push((e.clone(), if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    MPoly { vars: a.vars.clone(), terms: out }
}

impl<'a> std::ops::Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        add_sorted(self, o, false)
    }
}

impl<'a> std::ops::Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        add_sorted(self, o, true)
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl<'a> std::ops::Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let (a, b) = unify(self, o);
        if a.is_zero() || b.is_zero() {
            return MPoly { vars: a.vars.clone(), terms: Vec::new() };
        }
        if b.terms.len() == 1 {
            return a.mul_monomial(&b.terms[0].0, &b.terms[0].1);
        }
        if a.terms.len() == 1 {
            return b.mul_monomial(&a.terms[0].0, &a.terms[0].1);
        }
        let mut acc: HashMap<Exps, GaussRat> = HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        MPoly::from_map(a.vars.clone(), acc)
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MPoly {}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var("x")
    }
    fn t() -> MPoly {
        MPoly::var("t")
    }

    #[test]
    fn arithmetic_and_order() {
        let p = &(&x() * &x()) - &MPoly::from_int(1);
        let q = &x() - &MPoly::from_int(1);
        let r = p.div_exact(&q).unwrap();
        assert_eq!(r, &x() + &MPoly::from_int(1));
        assert!(p.div_exact(&(&x() + &MPoly::from_int(2))).is_none());
        let s = &(&t() * &t()).scale(&GaussRat::from_int(5)) + &MPoly::from_int(2);
        assert_eq!(s.render(), "2+5*t^2");
    }

    #[test]
    fn mixed_variable_sets_unify() {
        let a = &x() + &t();
        let b = &t() + &x();
        assert_eq!(a, b);
        assert_eq!(a.vars().as_ref(), &["t".to_string(), "x".to_string()]);
        assert_eq!((&a - &b).render(), "0");
    }

    #[test]
    fn normalizing_scalar_gives_primitive_positive() {
        // -4t + 8t^2  ->  -t + 2t^2 after content, leading term t^2 positive
        let p = &t().scale(&GaussRat::from_int(-4)) + &(&t() * &t()).scale(&GaussRat::from_int(8));
        assert_eq!(p.normalized().render(), "-t+2*t^2");
        let q = p.scale(&GaussRat::i());
        assert_eq!(q.normalized(), p.normalized());
    }
}
