//! Virtual link diagrams as crossing lists, and presentation matrices of
//! the switch module.
//!
//! A diagram file has one line per classical crossing:
//!
//! ```text
//! # virtual trefoil
//! X + 2 1 3 4
//! X + 3 4 1 2
//! ```
//!
//! read as `X <sign> in1 in2 out1 out2` over semi-arc ids `1..2n`. Virtual
//! crossings are not recorded: semi-arc labels pass straight through them.
//! A positive crossing imposes `out1 = A in1 + B in2`, `out2 = C in1 + D in2`;
//! a negative one `in1 = A out1 + B out2`, `in2 = C out1 + D out2`.

use std::collections::HashMap;
use std::fmt;

use crate::braidrep::{represent, Letter, VirtualBraidWord};
use crate::ring::Mat;
use crate::switchlab::{Switch, SwitchError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: Sign,
    pub in1: usize,
    pub in2: usize,
    pub out1: usize,
    pub out2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossingDiagram {
    pub crossings: Vec<Crossing>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram has no classical crossings")]
    Empty,
    #[error("line {0}: bad sign {1:?}, expected + or -")]
    BadSign(usize, String),
    #[error("line {0}: {1}")]
    BadLine(usize, String),
    #[error("semi-arc {0} is an input more than once")]
    RepeatedInput(usize),
    #[error("semi-arc {0} is an output more than once")]
    RepeatedOutput(usize),
    #[error("semi-arc {0} is never an {1}")]
    Missing(usize, &'static str),
    #[error("semi-arc {0} is outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("braid closure has a component without classical crossings")]
    FreeComponent,
}

impl CrossingDiagram {
    /// Checks that every id in `1..=2n` is an input exactly once and an
    /// output exactly once.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let m = 2 * crossings.len();
        let mut ins = vec![false; m + 1];
        let mut outs = vec![false; m + 1];
        for x in &crossings {
            for id in [x.in1, x.in2, x.out1, x.out2] {
                if id == 0 || id > m {
                    return Err(DiagramError::OutOfRange(id, m));
                }
            }
            for id in [x.in1, x.in2] {
                if std::mem::replace(&mut ins[id], true) {
                    return Err(DiagramError::RepeatedInput(id));
                }
            }
            for id in [x.out1, x.out2] {
                if std::mem::replace(&mut outs[id], true) {
                    return Err(DiagramError::RepeatedOutput(id));
                }
            }
        }
        if let Some(id) = (1..=m).find(|&i| !ins[i]) {
            return Err(DiagramError::Missing(id, "input"));
        }
        if let Some(id) = (1..=m).find(|&i| !outs[i]) {
            return Err(DiagramError::Missing(id, "output"));
        }
        Ok(Self { crossings })
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Flips every crossing sign.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                sign: match x.sign {
                    Sign::Positive => Sign::Negative,
                    Sign::Negative => Sign::Positive,
                },
                ..*x
            })
            .collect();
        Self { crossings }
    }
}

impl fmt::Display for CrossingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            let s = if x.sign == Sign::Positive { '+' } else { '-' };
            writeln!(f, "X {s} {} {} {} {}", x.in1, x.in2, x.out1, x.out2)?;
        }
        Ok(())
    }
}

pub fn parse_diagram(text: &str) -> Result<CrossingDiagram, DiagramError> {
    let mut crossings = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "X" {
            return Err(DiagramError::BadLine(n + 1, format!("expected 'X', found {:?}", toks[0])));
        }
        if toks.len() != 6 {
            return Err(DiagramError::BadLine(n + 1, format!("expected 6 fields, found {}", toks.len())));
        }
        let sign = match toks[1] {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            s => return Err(DiagramError::BadSign(n + 1, s.into())),
        };
        let mut ids = [0usize; 4];
        for (k, t) in toks[2..].iter().enumerate() {
            ids[k] = t.parse().map_err(|_| DiagramError::BadLine(n + 1, format!("bad semi-arc id {t:?}")))?;
        }
        let [in1, in2, out1, out2] = ids;
        crossings.push(Crossing { sign, in1, in2, out1, out2 });
    }
    CrossingDiagram::new(crossings)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `2n x 2n`, one row pair per crossing.
    Diagram,
    /// `rho(w) - id` for a braid closure.
    Braid,
}

#[derive(Clone, Debug)]
pub struct PresentationMatrix {
    pub matrix: Mat,
    pub provenance: Provenance,
}

fn add_entry(m: &mut Mat, r: usize, c: usize, v: &crate::ring::RingElem) -> Result<(), SwitchError> {
    let x = m.get(r, c).add(v)?;
    m.set(r, c, x);
    Ok(())
}

pub fn presentation_from_diagram(d: &CrossingDiagram, s: &Switch) -> Result<PresentationMatrix, SwitchError> {
    let n = 2 * d.len();
    let mut m = Mat::zeros(&s.ring, n, n);
    let minus_one = s.ring.one().neg();
    for (k, x) in d.crossings.iter().enumerate() {
        // each row reads: dst = P src1 + Q src2
        let (src, dst) = match x.sign {
            Sign::Positive => ([x.in1, x.in2], [x.out1, x.out2]),
            Sign::Negative => ([x.out1, x.out2], [x.in1, x.in2]),
        };
        for (row, (p, q)) in [(&s.a, &s.b), (&s.c, &s.d)].into_iter().enumerate() {
            let r = 2 * k + row;
            add_entry(&mut m, r, src[0] - 1, p)?;
            add_entry(&mut m, r, src[1] - 1, q)?;
            add_entry(&mut m, r, dst[row] - 1, &minus_one)?;
        }
    }
    Ok(PresentationMatrix { matrix: m, provenance: Provenance::Diagram })
}

pub fn presentation_from_braid(w: &VirtualBraidWord, s: &Switch) -> Result<PresentationMatrix, SwitchError> {
    let rho = represent(w, s)?;
    let matrix = rho.sub(&Mat::identity(&s.ring, w.strands))?;
    Ok(PresentationMatrix { matrix, provenance: Provenance::Braid })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// Crossing list of the closure of `w`. Semi-arcs are numbered in order of
/// first appearance.
pub fn diagram_from_braid(w: &VirtualBraidWord) -> Result<CrossingDiagram, DiagramError> {
    let n = w.strands;
    let mut pos: Vec<usize> = (0..n).collect();
    let mut next = n;
    let mut raw = Vec::new();
    for &l in &w.letters {
        let i = l.index() - 1;
        match l {
            Letter::Tau(_) => pos.swap(i, i + 1),
            Letter::Sigma(_) | Letter::SigmaInv(_) => {
                let sign = if matches!(l, Letter::Sigma(_)) { Sign::Positive } else { Sign::Negative };
                let (o1, o2) = (next, next + 1);
                next += 2;
                raw.push(Crossing { sign, in1: pos[i], in2: pos[i + 1], out1: o1, out2: o2 });
                pos[i] = o1;
                pos[i + 1] = o2;
            }
        }
    }
    if raw.is_empty() {
        return Err(DiagramError::Empty);
    }
    let mut parent: Vec<usize> = (0..next).collect();
    for (k, &p) in pos.iter().enumerate() {
        let (a, b) = (find(&mut parent, k), find(&mut parent, p));
        parent[a] = b;
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut label = |x: usize, parent: &mut Vec<usize>| {
        let r = find(parent, x);
        let fresh = ids.len() + 1;
        *ids.entry(r).or_insert(fresh)
    };
    let crossings: Vec<Crossing> = raw
        .iter()
        .map(|x| Crossing {
            sign: x.sign,
            in1: label(x.in1, &mut parent),
            in2: label(x.in2, &mut parent),
            out1: label(x.out1, &mut parent),
            out2: label(x.out2, &mut parent),
        })
        .collect();
    for k in 0..n {
        let r = find(&mut parent, k);
        if !ids.contains_key(&r) {
            return Err(DiagramError::FreeComponent);
        }
    }
    CrossingDiagram::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidrep::parse_braid;
    use crate::ring::RingElem;
    use crate::switchlab::budapest;

    const VT: &str = "# virtual trefoil\nX + 2 1 3 4\nX + 3 4 1 2\n";

    #[test]
    fn parse_errors() {
        assert_eq!(parse_diagram("# nothing\n"), Err(DiagramError::Empty));
        assert_eq!(parse_diagram("X + 1 2 3 3\nX + 3 4 1 2"), Err(DiagramError::RepeatedOutput(3)));
        assert_eq!(parse_diagram("X * 1 2 3 4"), Err(DiagramError::BadSign(1, "*".into())));
        assert!(matches!(parse_diagram("X + 1 2 3"), Err(DiagramError::BadLine(1, _))));
        assert_eq!(parse_diagram("X + 1 2 1 5"), Err(DiagramError::OutOfRange(5, 2)));
        let d = parse_diagram(VT).unwrap();
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn virtual_trefoil_rows() {
        let s = budapest();
        let p = presentation_from_diagram(&parse_diagram(VT).unwrap(), &s).unwrap();
        let m = &p.matrix;
        let neg = s.ring.one().neg();
        // c = A b + B a
        assert_eq!(m.row(0), &[s.b.clone(), s.a.clone(), neg.clone(), s.ring.zero()]);
        // b = C c + D d
        assert_eq!(m.row(3), &[s.ring.zero(), neg, s.c.clone(), s.d.clone()]);
        for r in 0..4 {
            assert_eq!(m.row(r).iter().filter(|e: &&RingElem| !e.is_zero()).count(), 3);
        }
    }

    #[test]
    fn braid_closure_diagram() {
        let w = parse_braid("s1 s1 v1", 2).unwrap();
        let d = diagram_from_braid(&w).unwrap();
        assert_eq!(d, parse_diagram("X + 1 2 3 4\nX + 3 4 2 1").unwrap());
        let w = parse_braid("s1 -s2 s1 -s2", 3).unwrap();
        assert_eq!(diagram_from_braid(&w).unwrap().len(), 4);
        assert_eq!(diagram_from_braid(&parse_braid("s1", 3).unwrap()), Err(DiagramError::FreeComponent));
    }

    #[test]
    fn empty_braid_presentation() {
        let s = budapest();
        let p = presentation_from_braid(&parse_braid("", 1).unwrap(), &s).unwrap();
        assert_eq!((p.matrix.rows, p.matrix.cols), (1, 1));
        assert!(p.matrix.get(0, 0).is_zero());
    }
}
