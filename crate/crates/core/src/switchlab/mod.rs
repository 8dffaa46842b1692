//! Linear switches `S = [[A, B], [C, D]]`, the seven-axiom verifier, the
//! switch catalog and derived data (sideways matrices, Burau conjugator).

mod catalog;
mod derived;

use std::fmt;

pub use catalog::{
    budapest, catalog_names, e1, e2, identity, make_alexander, make_burau, make_noncommuting, printed_check_by_name,
    switch_by_name, EntryDiscrepancy, PrintedCheck,
};
pub use derived::{
    burau_conjugator, elementary_factorization_holds, inverse_switch, sideways, yang_baxter_holds, BurauConjugator,
    SidewaysPair,
};

use crate::detinv::det_d;
use crate::exactalg::RatFun;
use crate::quat::QuatError;
use crate::ring::{Mat, MatError, Ring, RingElem};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("{0} is not invertible")]
    NotUnit(&'static str),
    #[error("A and B commute")]
    Commuting,
    #[error("A and B do not satisfy the fundamental equation")]
    FundamentalFails,
    #[error("B and C do not commute")]
    NotCommuting,
    #[error("degenerate switch: {0}")]
    Degenerate(String),
    #[error("unknown switch {0:?}")]
    UnknownSwitch(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error(transparent)]
    Quat(#[from] QuatError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// A 2x2 block switch over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Switch {
    pub name: String,
    pub ring: Ring,
    pub a: RingElem,
    pub b: RingElem,
    pub c: RingElem,
    pub d: RingElem,
    /// Commuting variables whose monomials count as units for invariants.
    pub unit_vars: Vec<String>,
}

impl Switch {
    /// Builds a switch without checking the axioms.
    pub fn unchecked(name: &str, ring: Ring, [a, b, c, d]: [RingElem; 4]) -> Self {
        let lift = |x: RingElem| match (&ring, x) {
            (Ring::Quaternion(_), RingElem::Scalar(s)) => ring.scalar(s),
            (_, x) => x,
        };
        Self { name: name.into(), a: lift(a), b: lift(b), c: lift(c), d: lift(d), ring, unit_vars: Vec::new() }
    }

    pub fn with_unit_vars(mut self, vars: &[&str]) -> Self {
        for v in vars {
            if !self.unit_vars.iter().any(|u| u == v) {
                self.unit_vars.push((*v).to_string());
            }
        }
        self.unit_vars.sort();
        self
    }

    pub fn matrix(&self) -> Mat {
        Mat::from_rows(&self.ring, vec![vec![self.a.clone(), self.b.clone()], vec![self.c.clone(), self.d.clone()]])
    }

    pub fn inverse(&self) -> Result<Mat, SwitchError> {
        Ok(self.matrix().inverse()?)
    }

    /// Whether `A` and `B` commute (Alexander-type) or not.
    pub fn is_noncommuting(&self) -> bool {
        match (self.a.mul(&self.b), self.b.mul(&self.a)) {
            (Ok(x), Ok(y)) => !x.equals(&y),
            _ => false,
        }
    }

    /// `S(t) = [[A, tB], [t^-1 C, D]]`.
    pub fn augment(&self, t: &RatFun) -> Result<Switch, SwitchError> {
        let ti = t.inv().map_err(|_| SwitchError::NotUnit("t"))?;
        let mut s = self.clone();
        s.b = self.b.scale(t);
        s.c = self.c.scale(&ti);
        if !t.is_one() {
            s.name = format!("{}(t={t})", self.name);
        }
        if t.is_polynomial() && t.num().is_monomial() {
            let vars: Vec<String> = t.num().occurring().into_iter().map(|i| t.num().vars()[i].clone()).collect();
            let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
            s = s.with_unit_vars(&refs);
        }
        Ok(s)
    }
}

impl fmt::Display for Switch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over {}", self.name, self.ring)?;
        writeln!(f, "  A = {}", self.a)?;
        writeln!(f, "  B = {}", self.b)?;
        writeln!(f, "  C = {}", self.c)?;
        write!(f, "  D = {}", self.d)
    }
}

pub const AXIOMS: [&str; 7] =
    ["A = A^2 + BAC", "[B,A] = BAD", "[C,D] = CDA", "D = D^2 + CDB", "[A,C] = DAC", "[D,B] = ADB", "[C,B] = ADA - DAD"];

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub index: usize,
    pub statement: &'static str,
    /// `lhs - rhs`, zero when the axiom holds.
    pub residual: RingElem,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct SwitchReport {
    pub name: String,
    pub axioms: Vec<AxiomCheck>,
    /// `d(S)` when the ring supports it.
    pub det: Option<RatFun>,
    pub invertible: bool,
}

impl SwitchReport {
    pub fn passes(&self) -> bool {
        self.invertible && self.axioms.iter().all(AxiomCheck::holds)
    }

    pub fn failed_axioms(&self) -> Vec<usize> {
        self.axioms.iter().filter(|a| !a.holds()).map(|a| a.index).collect()
    }
}

impl fmt::Display for SwitchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "switch {}", self.name)?;
        for a in &self.axioms {
            if a.holds() {
                writeln!(f, "  axiom {}: {:<18} pass", a.index, a.statement)?;
            } else {
                writeln!(f, "  axiom {}: {:<18} FAIL  residual {}", a.index, a.statement, a.residual)?;
            }
        }
        match &self.det {
            Some(d) => writeln!(f, "  invertible: {}  d(S) = {d}", if self.invertible { "yes" } else { "no" })?,
            None => writeln!(f, "  invertible: {}", if self.invertible { "yes" } else { "no" })?,
        }
        write!(f, "verdict: {}", if self.passes() { "switch" } else { "NOT a switch" })
    }
}

fn residuals(s: &Switch) -> Result<[RingElem; 7], QuatError> {
    let (a, b, c, d) = (&s.a, &s.b, &s.c, &s.d);
    let m = |x: &RingElem, y: &RingElem| x.mul(y);
    let m3 = |x: &RingElem, y: &RingElem, z: &RingElem| x.mul(y)?.mul(z);
    let br = |x: &RingElem, y: &RingElem| m(x, y)?.sub(&m(y, x)?);
    Ok([
        a.sub(&m(a, a)?.add(&m3(b, a, c)?)?)?,
        br(b, a)?.sub(&m3(b, a, d)?)?,
        br(c, d)?.sub(&m3(c, d, a)?)?,
        d.sub(&m(d, d)?.add(&m3(c, d, b)?)?)?,
        br(a, c)?.sub(&m3(d, a, c)?)?,
        br(d, b)?.sub(&m3(a, d, b)?)?,
        br(c, b)?.sub(&m3(a, d, a)?.sub(&m3(d, a, d)?)?)?,
    ])
}

/// Evaluates the seven axiom residuals and the invertibility of `S`.
/// Never fails: problems show up in the report.
pub fn verify_switch(s: &Switch) -> SwitchReport {
    let axioms = match residuals(s) {
        Ok(r) => r
            .into_iter()
            .enumerate()
            .map(|(i, residual)| AxiomCheck { index: i + 1, statement: AXIOMS[i], residual })
            .collect(),
        Err(_) => Vec::new(),
    };
    let det = det_d(&s.matrix()).ok();
    let invertible = match &det {
        Some(d) => !d.is_zero(),
        None => s.inverse().is_ok(),
    };
    let invertible = invertible && axioms.len() == 7;
    SwitchReport { name: s.name.clone(), axioms, det, invertible }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{AlgebraParams, Quaternion};

    #[test]
    fn identity_and_budapest_pass() {
        assert!(verify_switch(&identity(&Ring::Commutative)).passes());
        let r = verify_switch(&budapest());
        assert!(r.passes(), "{r}");
        assert!(r.det.unwrap().is_one());
    }

    #[test]
    fn all_ones_fails() {
        let one = RingElem::Scalar(RatFun::one());
        let s = Switch::unchecked("ones", Ring::Commutative, [one.clone(), one.clone(), one.clone(), one]);
        let r = verify_switch(&s);
        assert!(!r.invertible);
        assert!(!r.passes());
        assert_eq!(r.failed_axioms(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn budapest_entries() {
        let p = AlgebraParams::classical();
        let s = budapest();
        assert_eq!(s.c, RingElem::Quat(Quaternion::j(&p).neg()));
        assert_eq!(s.d, RingElem::Quat(Quaternion::from_ints([1, 1, 0, 0], &p)));
    }

    #[test]
    fn augmentation_by_one_is_identity() {
        let s = budapest();
        assert_eq!(s.augment(&RatFun::one()).unwrap(), s);
        let t = s.augment(&RatFun::var("t")).unwrap();
        assert!(verify_switch(&t).passes());
        assert_eq!(t.unit_vars, vec!["t".to_string()]);
    }
}
