//! Virtual braid words and their matrix images under a switch.
//!
//! `s<k>` is `sigma_k`, `-s<k>` its inverse and `v<k>` the virtual
//! generator `tau_k`. Words are taken literally. Letters act on column
//! vectors in reading order, so the image of `l1 l2 ... lk` is
//! `rho(lk) ... rho(l2) rho(l1)`.

use std::fmt;

use crate::ring::{Mat, RingElem};
use crate::switchlab::{burau_conjugator, Switch, SwitchError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Sigma(usize),
    SigmaInv(usize),
    Tau(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) | Letter::Tau(i) => i,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Sigma(i) => Letter::SigmaInv(i),
            Letter::SigmaInv(i) => Letter::Sigma(i),
            t => t,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "-s{i}"),
            Letter::Tau(i) => write!(f, "v{i}"),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("generator index {index} out of range 1..={max} for {strands} strands")]
    IndexRange { index: usize, max: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("word contains a virtual generator")]
    Virtual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualBraidWord {
    pub strands: usize,
    pub letters: Vec<Letter>,
}

impl VirtualBraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for l in &letters {
            let i = l.index();
            if i == 0 || i >= strands {
                return Err(BraidError::IndexRange { index: i, max: strands - 1, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn is_classical(&self) -> bool {
        !self.letters.iter().any(|l| matches!(l, Letter::Tau(_)))
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Swaps every crossing sign.
    pub fn mirror(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|&l| match l {
                Letter::Tau(_) => l,
                _ => l.inverse(),
            })
            .collect();
        Self { strands: self.strands, letters }
    }
}

impl fmt::Display for VirtualBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn parse_braid(text: &str, strands: usize) -> Result<VirtualBraidWord, BraidError> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            let (ctor, digits): (fn(usize) -> Letter, &str) = if let Some(d) = tok.strip_prefix("-s") {
                (Letter::SigmaInv, d)
            } else if let Some(d) = tok.strip_prefix('s') {
                (Letter::Sigma, d)
            } else if let Some(d) = tok.strip_prefix('v') {
                (Letter::Tau, d)
            } else {
                return Err(BraidError::UnknownToken(tok.into()));
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(BraidError::UnknownToken(tok.into()));
            }
            digits.parse().map(ctor).map_err(|_| BraidError::UnknownToken(tok.into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    VirtualBraidWord::new(strands, letters)
}

/// Images of the three kinds of generators as 2x2 blocks.
pub struct Generators {
    s: Mat,
    s_inv: Mat,
    t: Mat,
}

impl Generators {
    pub fn new(s: &Switch) -> Result<Self, SwitchError> {
        let r = &s.ring;
        let t = Mat::from_rows(r, vec![vec![r.zero(), r.one()], vec![r.one(), r.zero()]]);
        Ok(Self { s: s.matrix(), s_inv: s.inverse()?, t })
    }

    /// `(id)^{i-1} x block x (id)^{n-i-1}`.
    pub fn letter(&self, l: Letter, n: usize) -> Mat {
        let block = match l {
            Letter::Sigma(_) => &self.s,
            Letter::SigmaInv(_) => &self.s_inv,
            Letter::Tau(_) => &self.t,
        };
        Mat::embed_block(block, n, l.index() - 1)
    }
}

/// Multiplies `acc` on the left by a block placed at `at`, touching only
/// the two affected rows.
fn left_apply(acc: &mut Mat, block: &Mat, at: usize) -> Result<(), SwitchError> {
    for c in 0..acc.cols {
        let (x, y) = (acc.get(at, c).clone(), acc.get(at + 1, c).clone());
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let u = block.get(0, 0).mul(&x)?.add(&block.get(0, 1).mul(&y)?)?;
        let v = block.get(1, 0).mul(&x)?.add(&block.get(1, 1).mul(&y)?)?;
        acc.set(at, c, u);
        acc.set(at + 1, c, v);
    }
    Ok(())
}

/// `rho(S, n)(w)`.
pub fn represent(w: &VirtualBraidWord, s: &Switch) -> Result<Mat, SwitchError> {
    let g = Generators::new(s)?;
    let mut acc = Mat::identity(&s.ring, w.strands);
    for &l in &w.letters {
        let block = match l {
            Letter::Sigma(_) => &g.s,
            Letter::SigmaInv(_) => &g.s_inv,
            Letter::Tau(_) => &g.t,
        };
        left_apply(&mut acc, block, l.index() - 1)?;
    }
    Ok(acc)
}

/// `M rho(S, n)(w) = rho(S', n)(w) M` for a classical word.
pub fn check_burau_equivalence(w: &VirtualBraidWord, s: &Switch) -> Result<bool, SwitchError> {
    if !w.is_classical() {
        return Err(SwitchError::Degenerate(BraidError::Virtual.to_string()));
    }
    let c = burau_conjugator(s, w.strands)?;
    let lhs = c.m.mul(&represent(w, s)?)?;
    let rhs = represent(w, &c.s_prime)?.mul(&c.m)?;
    Ok(lhs.equals(&rhs))
}

/// One instance of a defining relation of `VB_n`.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub lhs: VirtualBraidWord,
    pub rhs: VirtualBraidWord,
    pub holds: bool,
}

/// All defining relations of `VB_n`, instantiated for every admissible index.
pub fn vb_relations(n: usize) -> Vec<(VirtualBraidWord, VirtualBraidWord)> {
    use Letter::{Sigma as S, Tau as T};
    let w = |ls: Vec<Letter>| VirtualBraidWord { strands: n, letters: ls };
    let mut out = Vec::new();
    for i in 1..n {
        out.push((w(vec![T(i), T(i)]), w(vec![])));
        for j in 1..n {
            if i + 1 < j {
                out.push((w(vec![S(i), S(j)]), w(vec![S(j), S(i)])));
                out.push((w(vec![T(i), T(j)]), w(vec![T(j), T(i)])));
            }
            if i.abs_diff(j) > 1 {
                out.push((w(vec![S(i), T(j)]), w(vec![T(j), S(i)])));
            }
        }
        if i + 1 < n {
            out.push((w(vec![S(i), S(i + 1), S(i)]), w(vec![S(i + 1), S(i), S(i + 1)])));
            out.push((w(vec![T(i), T(i + 1), T(i)]), w(vec![T(i + 1), T(i), T(i + 1)])));
            out.push((w(vec![S(i), T(i + 1), T(i)]), w(vec![T(i + 1), T(i), S(i + 1)])));
        }
    }
    out
}

pub fn check_vb_relations(s: &Switch, n: usize) -> Result<Vec<RelationCheck>, SwitchError> {
    vb_relations(n)
        .into_iter()
        .map(|(l, r)| {
            let holds = represent(&l, s)?.equals(&represent(&r, s)?);
            Ok(RelationCheck { lhs: l, rhs: r, holds })
        })
        .collect()
}

/// `P = A^-1 B^-1 A`, fixing the row vector `(P^{n-1}, ..., P, 1)`.
pub fn left_fixed_ratio(s: &Switch) -> Result<RingElem, SwitchError> {
    let ai = s.a.inv().map_err(|_| SwitchError::NotUnit("A"))?;
    let bi = s.b.inv().map_err(|_| SwitchError::NotUnit("B"))?;
    Ok(ai.mul(&bi)?.mul(&s.a)?)
}

/// `Q_r = B^-1 (1 - A)`, fixing the column vector `(1, Q_r, ..., Q_r^{n-1})`.
pub fn right_fixed_ratio(s: &Switch) -> Result<RingElem, SwitchError> {
    let bi = s.b.inv().map_err(|_| SwitchError::NotUnit("B"))?;
    Ok(bi.mul(&s.ring.one().sub(&s.a)?)?)
}

/// Checks both fixed-vector identities for every `sigma_i` on `n` strands.
pub fn fixed_vectors_hold(s: &Switch, n: usize) -> Result<bool, SwitchError> {
    let p = left_fixed_ratio(s)?;
    let q = right_fixed_ratio(s)?;
    let row = Mat::from_rows(&s.ring, vec![(0..n).map(|k| p.pow((n - 1 - k) as u32)).collect::<Result<_, _>>()?]);
    let col = Mat::from_rows(&s.ring, (0..n).map(|k| q.pow(k as u32).map(|x| vec![x])).collect::<Result<_, _>>()?);
    let g = Generators::new(s)?;
    for i in 1..n {
        let m = g.letter(Letter::Sigma(i), n);
        if !row.mul(&m)?.equals(&row) || !m.mul(&col)?.equals(&col) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_ratfun, RatFun};
    use crate::switchlab::{budapest, make_alexander};

    #[test]
    fn parse_and_print() {
        let w = parse_braid("v2 s1 s2 s1 v2 -s1 -s2 -s1", 3).unwrap();
        assert_eq!(w.letters.len(), 8);
        assert_eq!(parse_braid(&w.to_string(), 3).unwrap(), w);
        assert!(!w.is_classical());
        assert_eq!(parse_braid("s3", 3), Err(BraidError::IndexRange { index: 3, max: 2, strands: 3 }));
        assert!(matches!(parse_braid("x1", 3), Err(BraidError::UnknownToken(_))));
        assert!(matches!(parse_braid("s", 3), Err(BraidError::UnknownToken(_))));
        assert!(matches!(parse_braid("s0", 3), Err(BraidError::IndexRange { .. })));
        assert_eq!(parse_braid("", 1).unwrap().letters, vec![]);
    }

    #[test]
    fn alexander_printed_beta() {
        let s = make_alexander(RatFun::var("B").into(), RatFun::var("C").into()).unwrap();
        let w = parse_braid("s2 s1 v2 -s1 -s2 v1", 3).unwrap();
        let m = represent(&w, &s).unwrap();
        let e = |t: &str| RingElem::Scalar(parse_ratfun(t).unwrap());
        let expected = Mat::from_rows(
            &s.ring,
            vec![
                vec![e("1"), e("0"), e("(1/C-B)*(B-1)")],
                vec![e("0"), e("1"), e("(1/C-B)*(1-B)")],
                vec![e("0"), e("0"), e("1")],
            ],
        );
        assert!(m.equals(&expected), "{m}");
    }

    #[test]
    fn image_is_antihomomorphic_product() {
        let s = budapest();
        let g = Generators::new(&s).unwrap();
        let w = parse_braid("s1 v2 -s1 s2", 3).unwrap();
        let mut expected = Mat::identity(&s.ring, 3);
        for &l in &w.letters {
            expected = g.letter(l, 3).mul(&expected).unwrap();
        }
        assert!(represent(&w, &s).unwrap().equals(&expected));
        let both = VirtualBraidWord { strands: 3, letters: [w.letters.clone(), w.inverse().letters].concat() };
        assert!(represent(&both, &s).unwrap().is_identity());
    }

    #[test]
    fn relations_budapest() {
        let s = budapest();
        for r in check_vb_relations(&s, 4).unwrap() {
            assert!(r.holds, "{} = {}", r.lhs, r.rhs);
        }
        assert!(fixed_vectors_hold(&s, 3).unwrap());
        let w = parse_braid("s1 s2", 3).unwrap();
        assert!(check_burau_equivalence(&w, &s).unwrap());
        assert!(check_burau_equivalence(&parse_braid("v1", 2).unwrap(), &s).is_err());
    }
}
