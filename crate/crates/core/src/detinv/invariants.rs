//! `Delta_0`, `Delta_1` and the table of codimension-one minors.

use std::fmt;

use crate::diagmod::{PresentationMatrix, Provenance};
use crate::exactalg::{laurent_normalize, poly_gcd, unify, GaussRat, MPoly, RatFun};
use crate::ring::Mat;
use crate::switchlab::Switch;

use super::{det_d, DetError};

/// Which multipliers an invariant is taken modulo.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitOrbit {
    /// Nonzero constants are always quotiented out.
    pub monomial_vars: Vec<String>,
}

impl fmt::Display for UnitOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("nonzero constants")?;
        for v in &self.monomial_vars {
            write!(f, ", powers of {v}")?;
        }
        Ok(())
    }
}

/// A value in canonical form for its unit orbit. Zero stays zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPoly {
    pub value: RatFun,
    pub unit_orbit: UnitOrbit,
}

impl InvariantPoly {
    pub fn canonical(f: &RatFun, unit_vars: &[String]) -> Self {
        let refs: Vec<&str> = unit_vars.iter().map(String::as_str).collect();
        let value = if f.is_zero() { RatFun::zero() } else { laurent_normalize(f, &refs).unwrap() };
        Self { value, unit_orbit: UnitOrbit { monomial_vars: unit_vars.to_vec() } }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.value.is_one()
    }

    pub fn render(&self) -> String {
        self.value.render()
    }
}

impl fmt::Display for InvariantPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `Delta_0 = d(P)` up to units.
pub fn delta0(p: &PresentationMatrix, s: &Switch) -> Result<InvariantPoly, DetError> {
    Ok(InvariantPoly::canonical(&det_d(&p.matrix)?, &s.unit_vars))
}

fn raw_minors(m: &Mat) -> Result<Vec<Vec<RatFun>>, DetError> {
    if m.rows != m.cols {
        return Err(DetError::NotSquare(m.rows, m.cols));
    }
    (0..m.rows).map(|r| (0..m.cols).map(|c| det_d(&m.minor(r, c))).collect()).collect()
}

/// `d` of every codimension-one submatrix, row-major, each in canonical form.
pub fn minor_table(p: &PresentationMatrix, s: &Switch) -> Result<Vec<Vec<InvariantPoly>>, DetError> {
    Ok(raw_minors(&p.matrix)?
        .iter()
        .map(|row| row.iter().map(|f| InvariantPoly::canonical(f, &s.unit_vars)).collect())
        .collect())
}

/// Greatest common divisor of all codimension-one minors. Each minor is
/// cleared to its numerator first; a `1 x 1` matrix gives the empty
/// determinant `1`.
pub fn delta1(p: &PresentationMatrix, s: &Switch) -> Result<InvariantPoly, DetError> {
    let m = &p.matrix;
    if m.rows != m.cols {
        return Err(DetError::NotSquare(m.rows, m.cols));
    }
    let mut g = MPoly::zero();
    'outer: for r in 0..m.rows {
        for c in 0..m.cols {
            let d = det_d(&m.minor(r, c))?;
            if d.is_zero() {
                continue;
            }
            g = if g.is_zero() { d.num().normalized() } else { poly_gcd(&g, d.num()) };
            if g.is_constant() {
                break 'outer;
            }
        }
    }
    Ok(InvariantPoly::canonical(&RatFun::from_poly(g), &s.unit_vars))
}

/// Minor values with their multiplicities, in order of first appearance.
#[derive(Clone, Debug)]
pub struct MinorReport {
    pub table: Vec<Vec<InvariantPoly>>,
    pub distinct: Vec<(InvariantPoly, usize)>,
}

impl MinorReport {
    /// All minors agree up to units.
    pub fn homogeneous(&self) -> bool {
        self.distinct.len() <= 1
    }

    pub fn count(&self) -> usize {
        self.distinct.iter().map(|(_, n)| n).sum()
    }
}

impl fmt::Display for MinorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.table.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                writeln!(f, "minor[{},{}] = {v}", r + 1, c + 1)?;
            }
        }
        write!(f, "{} distinct value(s) up to units", self.distinct.len())
    }
}

/// Compares all codimension-one minors up to units. Homogeneity is
/// expected for closures of classical braids.
pub fn check_minor_independence(p: &PresentationMatrix, s: &Switch) -> Result<MinorReport, DetError> {
    let table = minor_table(p, s)?;
    let mut distinct: Vec<(InvariantPoly, usize)> = Vec::new();
    for v in table.iter().flatten() {
        match distinct.iter_mut().find(|(w, _)| w == v) {
            Some((_, n)) => *n += 1,
            None => distinct.push((v.clone(), 1)),
        }
    }
    Ok(MinorReport { table, distinct })
}

/// A monomial on which two values disagree, with its coefficient in each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMismatch {
    pub monomial: String,
    pub computed: GaussRat,
    pub expected: GaussRat,
}

impl fmt::Display for MonomialMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: computed {}, expected {}", self.monomial, self.computed, self.expected)
    }
}

/// Compares the numerators of two canonical forms over a common denominator.
/// Empty exactly when they are equal.
pub fn monomial_discrepancy(computed: &InvariantPoly, expected: &InvariantPoly) -> Vec<MonomialMismatch> {
    let (c, e) = (&computed.value, &expected.value);
    let (cn, en) =
        if c.den() == e.den() { (c.num().clone(), e.num().clone()) } else { (c.num() * e.den(), e.num() * c.den()) };
    let (cn, en) = unify(&cn, &en);
    let coeff = |p: &MPoly, x: &[u16]| {
        p.terms().iter().find(|(y, _)| &y[..] == x).map(|t| t.1.clone()).unwrap_or_else(GaussRat::zero)
    };
    (&*cn - &*en)
        .terms()
        .iter()
        .map(|(x, _)| MonomialMismatch {
            monomial: MPoly::from_terms(cn.vars().clone(), [(x.clone(), GaussRat::one())]).render(),
            computed: coeff(&cn, x),
            expected: coeff(&en, x),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classicality {
    ConsistentWithClassical,
    NotClassical(String),
}

/// `Delta_0 != 0`, or for braid closures unequal minors, rule out a
/// classical knot. Never asserts that a knot is classical.
pub fn classicality_obstruction(p: &PresentationMatrix, s: &Switch) -> Result<Classicality, DetError> {
    let d0 = delta0(p, s)?;
    if !d0.is_zero() {
        return Ok(Classicality::NotClassical(format!("Delta_0 = {d0} is nonzero")));
    }
    if p.provenance == Provenance::Braid {
        let rep = check_minor_independence(p, s)?;
        if !rep.homogeneous() {
            return Ok(Classicality::NotClassical(format!(
                "codimension-one minors take {} distinct values",
                rep.distinct.len()
            )));
        }
    }
    Ok(Classicality::ConsistentWithClassical)
}
