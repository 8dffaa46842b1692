//! Switch rings: either commutative rational functions or a generalized
//! quaternion algebra over them, plus dense matrices with entries in either.

use std::fmt;

use crate::exactalg::{AlgebraError, RatFun};
use crate::quat::{AlgebraParams, QuatError, Quaternion};

/// Which ring the entries of a switch or matrix live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Commutative,
    Quaternion(AlgebraParams),
}

impl Ring {
    pub fn zero(&self) -> RingElem {
        self.scalar(RatFun::zero())
    }

    pub fn one(&self) -> RingElem {
        self.scalar(RatFun::one())
    }

    pub fn from_int(&self, n: i64) -> RingElem {
        self.scalar(RatFun::from_int(n))
    }

    /// Embeds a scalar (central element).
    pub fn scalar(&self, s: RatFun) -> RingElem {
        match self {
            Ring::Commutative => RingElem::Scalar(s),
            Ring::Quaternion(p) => RingElem::Quat(Quaternion::scalar(s, p)),
        }
    }

    pub fn is_commutative(&self) -> bool {
        matches!(self, Ring::Commutative)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Commutative => f.write_str("commutative rational functions"),
            Ring::Quaternion(p) if p.is_matrix_algebra() => write!(f, "2x2 matrices, quaternion algebra {p}"),
            Ring::Quaternion(p) => write!(f, "quaternion algebra {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum RingElem {
    Scalar(RatFun),
    Quat(Quaternion),
}

impl From<Quaternion> for RingElem {
    fn from(q: Quaternion) -> Self {
        RingElem::Quat(q)
    }
}

impl From<RatFun> for RingElem {
    fn from(s: RatFun) -> Self {
        RingElem::Scalar(s)
    }
}

impl RingElem {
    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Scalar(s) => s.is_zero(),
            RingElem::Quat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Scalar(s) => s.is_one(),
            RingElem::Quat(q) => q.is_scalar() && q.c[0].is_one(),
        }
    }

    fn lift(a: &RingElem, b: &RingElem) -> Option<(Quaternion, Quaternion)> {
        match (a, b) {
            (RingElem::Quat(x), RingElem::Quat(y)) => Some((x.clone(), y.clone())),
            (RingElem::Scalar(s), RingElem::Quat(y)) => Some((Quaternion::scalar(s.clone(), &y.params), y.clone())),
            (RingElem::Quat(x), RingElem::Scalar(s)) => Some((x.clone(), Quaternion::scalar(s.clone(), &x.params))),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, QuatError> {
        match (self, o) {
            (RingElem::Scalar(a), RingElem::Scalar(b)) => Ok(RingElem::Scalar(a + b)),
            _ => {
                let (x, y) = Self::lift(self, o).unwrap();
                Ok(RingElem::Quat(x.add(&y)?))
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self, QuatError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            RingElem::Scalar(a) => RingElem::Scalar(-a),
            RingElem::Quat(q) => RingElem::Quat(q.neg()),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, QuatError> {
        match (self, o) {
            (RingElem::Scalar(a), RingElem::Scalar(b)) => Ok(RingElem::Scalar(a * b)),
            (RingElem::Scalar(s), RingElem::Quat(q)) | (RingElem::Quat(q), RingElem::Scalar(s)) => {
                Ok(RingElem::Quat(q.scale(s)))
            }
            (RingElem::Quat(a), RingElem::Quat(b)) => Ok(RingElem::Quat(a.mul(b)?)),
        }
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        match self {
            RingElem::Scalar(a) => RingElem::Scalar(a * s),
            RingElem::Quat(q) => RingElem::Quat(q.scale(s)),
        }
    }

    /// The norm for quaternions, the element itself for scalars: this is
    /// `d` of a 1x1 matrix in the respective ring.
    pub fn norm(&self) -> RatFun {
        match self {
            RingElem::Scalar(a) => a.clone(),
            RingElem::Quat(q) => q.norm(),
        }
    }

    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn inv(&self) -> Result<Self, QuatError> {
        match self {
            RingElem::Scalar(a) => {
                if a.is_zero() {
                    Err(QuatError::NotInvertible("0".into()))
                } else {
                    Ok(RingElem::Scalar(a.inv()?))
                }
            }
            RingElem::Quat(q) => Ok(RingElem::Quat(q.inv()?)),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self, QuatError> {
        let mut acc = match self {
            RingElem::Scalar(_) => RingElem::Scalar(RatFun::one()),
            RingElem::Quat(q) => RingElem::Quat(Quaternion::one(&q.params)),
        };
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn conj(&self) -> Self {
        match self {
            RingElem::Scalar(a) => RingElem::Scalar(a.clone()),
            RingElem::Quat(q) => RingElem::Quat(q.conj()),
        }
    }

    /// Applies `f` to every scalar coordinate.
    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        match self {
            RingElem::Scalar(a) => RingElem::Scalar(f(a)),
            RingElem::Quat(q) => RingElem::Quat(q.map(f)),
        }
    }

    /// Equality that treats a scalar and the matching scalar quaternion as equal.
    pub fn equals(&self, o: &Self) -> bool {
        match Self::lift(self, o) {
            Some((x, y)) => x == y,
            None => self == o,
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Scalar(a) => write!(f, "{a}"),
            RingElem::Quat(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    Shape(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Quat(#[from] QuatError),
}

impl From<AlgebraError> for MatError {
    fn from(e: AlgebraError) -> Self {
        MatError::Quat(QuatError::Algebra(e))
    }
}

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub ring: Ring,
    pub rows: usize,
    pub cols: usize,
    data: Vec<RingElem>,
}

impl Mat {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { ring: ring.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RingElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[RingElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, o: &Mat) -> Result<Mat, MatError> {
        if self.cols != o.rows {
            return Err(MatError::Shape(self.rows, self.cols, o.rows, o.cols));
        }
        let mut out = Mat::zeros(&self.ring, self.rows, o.cols);
        for r in 0..self.rows {
            for c in 0..o.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), o.get(k, c));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Mat) -> Result<Mat, MatError> {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Mat) -> Result<Mat, MatError> {
        self.zip(o, |a, b| a.sub(b))
    }

    fn zip(&self, o: &Mat, f: impl Fn(&RingElem, &RingElem) -> Result<RingElem, QuatError>) -> Result<Mat, MatError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(MatError::Shape(self.rows, self.cols, o.rows, o.cols));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect::<Result<Vec<_>, _>>()?;
        Ok(Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn map(&self, f: impl Fn(&RingElem) -> RingElem) -> Mat {
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise equality, treating scalars and scalar quaternions alike.
    pub fn equals(&self, o: &Mat) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.data.iter().zip(&o.data).all(|(a, b)| a.equals(b))
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&Mat::identity(&self.ring, self.rows))
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Conjugate transpose `M*`.
    pub fn hermitian(&self) -> Mat {
        self.transpose().map(RingElem::conj)
    }

    /// Submatrix with one row and one column removed.
    pub fn minor(&self, row: usize, col: usize) -> Mat {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != row) {
            for c in (0..self.cols).filter(|&c| c != col) {
                data.push(self.get(r, c).clone());
            }
        }
        Mat { ring: self.ring.clone(), rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Block-diagonal embedding of `block` at rows/columns `at..at+k`
    /// inside an `n x n` identity.
    pub fn embed_block(block: &Mat, n: usize, at: usize) -> Mat {
        let mut m = Mat::identity(&block.ring, n);
        for r in 0..block.rows {
            for c in 0..block.cols {
                m.set(at + r, at + c, block.get(r, c).clone());
            }
        }
        m
    }

    /// Inverse by Gauss-Jordan elimination with left row operations,
    /// pivoting on units.
    pub fn inverse(&self) -> Result<Mat, MatError> {
        if self.rows != self.cols {
            return Err(MatError::Shape(self.rows, self.cols, self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(&self.ring, n);
        for col in 0..n {
            let pivot = match (col..n).find(|&r| a.get(r, col).is_unit()) {
                Some(p) => p,
                None => {
                    // zero divisors: try to manufacture a unit pivot from a row sum
                    let mut found = None;
                    'outer: for r in col..n {
                        for s in col..n {
                            if r != s && a.get(r, col).add(a.get(s, col))?.is_unit() {
                                found = Some((r, s));
                                break 'outer;
                            }
                        }
                    }
                    let (r, s) = found.ok_or(MatError::Singular)?;
                    for c in 0..n {
                        let v = a.get(r, c).add(a.get(s, c))?;
                        a.set(r, c, v);
                        let w = inv.get(r, c).add(inv.get(s, c))?;
                        inv.set(r, c, w);
                    }
                    r
                }
            };
            if pivot != col {
                for c in 0..n {
                    let (x, y) = (a.get(pivot, c).clone(), a.get(col, c).clone());
                    a.set(pivot, c, y);
                    a.set(col, c, x);
                    let (x, y) = (inv.get(pivot, c).clone(), inv.get(col, c).clone());
                    inv.set(pivot, c, y);
                    inv.set(col, c, x);
                }
            }
            let pinv = a.get(col, col).inv()?;
            for c in 0..n {
                let v = pinv.mul(a.get(col, c))?;
                a.set(col, c, v);
                let w = pinv.mul(inv.get(col, c))?;
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let v = a.get(r, c).sub(&f.mul(a.get(col, c))?)?;
                    a.set(r, c, v);
                    let w = inv.get(r, c).sub(&f.mul(inv.get(col, c))?)?;
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(" | "))?;
        }
        Ok(())
    }
}
