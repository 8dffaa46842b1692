//! Independent reference arithmetic for the integration tests: Hamilton
//! quaternions over `Q`, their complex 2x2 model, exact complex
//! elimination, and seeded generators.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use vkl::exactalg::{GaussRat, RatFun};
use vkl::quat::{AlgebraParams, Quaternion};
use vkl::ring::RingElem;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cx {
    pub re: Q,
    pub im: Q,
}

impl Cx {
    pub fn new(re: Q, im: Q) -> Self {
        Cx { re, im }
    }
    pub fn zero() -> Self {
        Cx::new(Q::zero(), Q::zero())
    }
    pub fn one() -> Self {
        Cx::new(Q::one(), Q::zero())
    }
    pub fn i() -> Self {
        Cx::new(Q::zero(), Q::one())
    }
    pub fn real(r: Q) -> Self {
        Cx::new(r, Q::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &Cx) -> Cx {
        Cx::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    pub fn inv(&self) -> Cx {
        let n = &self.re * &self.re + &self.im * &self.im;
        Cx::new(&self.re / &n, -(&self.im / &n))
    }
}

/// `a0 + a1 i + a2 j + a3 k` with `i^2 = j^2 = -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct H(pub [Q; 4]);

impl H {
    pub fn ints(c: [i64; 4]) -> H {
        H(c.map(|x| q(x, 1)))
    }
    pub fn scalar(s: Q) -> H {
        H([s, Q::zero(), Q::zero(), Q::zero()])
    }
    pub fn add(&self, o: &H) -> H {
        H(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }
    pub fn sub(&self, o: &H) -> H {
        H(std::array::from_fn(|k| &self.0[k] - &o.0[k]))
    }
    pub fn scale(&self, s: &Q) -> H {
        H(std::array::from_fn(|k| &self.0[k] * s))
    }
    pub fn mul(&self, o: &H) -> H {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &o.0;
        H([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }
    pub fn norm(&self) -> Q {
        self.0.iter().map(|x| x * x).sum()
    }
    pub fn inv(&self) -> H {
        let n = self.norm();
        let [a0, a1, a2, a3] = &self.0;
        H([a0 / &n, -(a1 / &n), -(a2 / &n), -(a3 / &n)])
    }
    /// `i -> diag(I, -I)`, `j -> [[0, 1], [-1, 0]]`, `k -> [[0, I], [I, 0]]`.
    pub fn to_cx(&self) -> [[Cx; 2]; 2] {
        let [a0, a1, a2, a3] = self.0.clone();
        [[Cx::new(a0.clone(), a1.clone()), Cx::new(a2.clone(), a3.clone())], [Cx::new(-a2, a3), Cx::new(a0, -a1)]]
    }
    pub fn to_ring(&self) -> RingElem {
        let c = self.0.clone().map(|x| RatFun::from_const(GaussRat::from_rational(x)));
        Quaternion::new(c, AlgebraParams::classical()).into()
    }
}

pub type CxMat = Vec<Vec<Cx>>;

pub fn cx_identity(n: usize) -> CxMat {
    (0..n).map(|r| (0..n).map(|c| if r == c { Cx::one() } else { Cx::zero() }).collect()).collect()
}

pub fn cx_mul(a: &CxMat, b: &CxMat) -> CxMat {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|r| (0..m).map(|c| (0..b.len()).fold(Cx::zero(), |acc, k| acc.add(&a[r][k].mul(&b[k][c])))).collect())
        .collect()
}

/// Gaussian elimination with the first nonzero pivot.
pub fn cx_det(m: &CxMat) -> Cx {
    let mut a = m.clone();
    let n = a.len();
    let mut det = Cx::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Cx::zero() };
        if p != col {
            a.swap(p, col);
            det = Cx::zero().sub(&det);
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv();
        for r in col + 1..n {
            let f = a[r][col].mul(&inv);
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a[r][c].sub(&f.mul(&a[col][c]));
                a[r][c] = v;
            }
        }
    }
    det
}

pub fn cx_inverse(m: &CxMat) -> CxMat {
    let n = m.len();
    let mut a: CxMat = m.iter().zip(cx_identity(n)).map(|(r, e)| r.iter().cloned().chain(e).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(p, col);
        let inv = a[col][col].inv();
        for c in 0..2 * n {
            a[col][c] = a[col][c].mul(&inv);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[r][c].sub(&f.mul(&a[col][c]));
                    a[r][c] = v;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Deletes quaternion row `r` and column `c`, i.e. two complex rows and columns.
pub fn cx_quat_minor(m: &CxMat, r: usize, c: usize) -> CxMat {
    m.iter()
        .enumerate()
        .filter(|(i, _)| i / 2 != r)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| j / 2 != c).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Budapest switch `[[A, tB], [C/t, D]]` from `A = 1+i`, `B = j` and the
/// non-commuting formulas for `C`, `D`.
pub fn budapest_h(t: &Q) -> [H; 4] {
    let a = H::ints([1, 1, 0, 0]);
    let b = H::ints([0, 0, 1, 0]);
    let one = H::ints([1, 0, 0, 0]);
    let conj = a.inv().mul(&b.inv()).mul(&a);
    let c = conj.mul(&one.sub(&a));
    let d = one.sub(&conj.mul(&b));
    [a, b.scale(t), c.scale(&(Q::one() / t)), d]
}

/// `rho(w) - id` from scratch, as a `2n x 2n` complex matrix, for words in
/// `s<i>`, `-s<i>`, `v<i>`. The word `l1 ... lk` maps to `rho(lk)...rho(l1)`.
pub fn rho_cx(word: &str, n: usize, s: &[H; 4]) -> CxMat {
    let blocks: Vec<[[Cx; 2]; 2]> = s.iter().map(H::to_cx).collect();
    let gen = |i: usize| -> CxMat {
        let mut m = cx_identity(2 * n);
        for (bi, (br, bc)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            for r in 0..2 {
                for c in 0..2 {
                    m[2 * (i + br) + r][2 * (i + bc) + c] = blocks[bi][r][c].clone();
                }
            }
        }
        m
    };
    let swap = |i: usize| -> CxMat {
        let mut m = cx_identity(2 * n);
        for r in 0..2 {
            m[2 * i + r][2 * i + r] = Cx::zero();
            m[2 * i + 2 + r][2 * i + 2 + r] = Cx::zero();
            m[2 * i + r][2 * i + 2 + r] = Cx::one();
            m[2 * i + 2 + r][2 * i + r] = Cx::one();
        }
        m
    };
    let mut out = cx_identity(2 * n);
    for tok in word.split_whitespace() {
        let (kind, idx) = tok.split_at(tok.len() - 1);
        let i: usize = idx.parse::<usize>().unwrap() - 1;
        let g = match kind {
            "s" => gen(i),
            "-s" => cx_inverse(&gen(i)),
            "v" => swap(i),
            _ => panic!("bad token {tok}"),
        };
        out = cx_mul(&g, &out);
    }
    for (k, row) in out.iter_mut().enumerate() {
        row[k] = row[k].sub(&Cx::one());
    }
    out
}

/// Value of `f` with every variable bound to a rational.
pub fn eval(f: &RatFun, vals: &[(&str, Q)]) -> Cx {
    let mut g = f.clone();
    for (v, x) in vals {
        g = g.subs(v, &RatFun::from_const(GaussRat::from_rational(x.clone())));
    }
    let c = g.as_constant().expect("all variables bound");
    Cx::new(c.re, c.im)
}

pub fn rational(rng: &mut ChaCha8Rng, span: i64) -> Q {
    let n = rng.gen_range(-span..=span);
    let d = rng.gen_range(1..=span);
    q(n, d)
}

fn h_to_quat(h: &H) -> Quaternion {
    let RingElem::Quat(q) = h.to_ring() else { unreachable!() };
    q
}

/// A random matching pair over the classical quaternions. `A - 1` runs over
/// rational points of the unit sphere, which makes `A` balanced; `B` is
/// then projected onto the orthogonal complement of `A`.
pub fn matching_pair(rng: &mut ChaCha8Rng) -> (Quaternion, Quaternion) {
    loop {
        let (u, v, w) = (rational(rng, 5), rational(rng, 5), rational(rng, 5));
        let s = &u * &u + &v * &v + &w * &w;
        let den = &s + Q::one();
        let x0 = (&s - Q::one()) / &den;
        let two = q(2, 1);
        let pa = [&two * &u / &den, &two * &v / &den, &two * &w / &den];
        let a = H([&x0 + Q::one(), pa[0].clone(), pa[1].clone(), pa[2].clone()]);
        if a.0[0].is_zero() || pa.iter().all(Zero::is_zero) {
            continue;
        }
        let b0 = rational(rng, 4);
        let p = [rational(rng, 4), rational(rng, 4), rational(rng, 4)];
        let adot = |x: &[Q; 3]| &pa[0] * &x[0] + &pa[1] * &x[1] + &pa[2] * &x[2];
        let k = -(&a.0[0] * &b0 + adot(&p)) / adot(&pa);
        let pb: [Q; 3] = std::array::from_fn(|i| &p[i] + &k * &pa[i]);
        let cross =
            [&pa[1] * &pb[2] - &pa[2] * &pb[1], &pa[2] * &pb[0] - &pa[0] * &pb[2], &pa[0] * &pb[1] - &pa[1] * &pb[0]];
        if cross.iter().all(Zero::is_zero) {
            continue;
        }
        let b = H([b0, pb[0].clone(), pb[1].clone(), pb[2].clone()]);
        return (h_to_quat(&a), h_to_quat(&b));
    }
}

/// Random `A`, `B` over the classical quaternions with small coordinates
/// that are invertible, do not commute, have `A != 1` and do not form a
/// matching pair.
pub fn non_matching_pair(rng: &mut ChaCha8Rng) -> (Quaternion, Quaternion) {
    loop {
        let a = H(std::array::from_fn(|_| rational(rng, 3)));
        let b = H(std::array::from_fn(|_| rational(rng, 3)));
        let (qa, qb) = (h_to_quat(&a), h_to_quat(&b));
        let a_minus_one = a.sub(&H::ints([1, 0, 0, 0]));
        if a.norm().is_zero() || b.norm().is_zero() || a_minus_one.norm().is_zero() {
            continue;
        }
        if qa.commutes_with(&qb).unwrap() || vkl::quat::is_matching(&qa, &qb) {
            continue;
        }
        return (qa, qb);
    }
}

/// A random word on `n` strands with `len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize, virtual_letters: bool) -> String {
    let kinds: &[&str] = if virtual_letters { &["s", "-s", "v"] } else { &["s", "-s"] };
    (0..len)
        .map(|_| format!("{}{}", kinds[rng.gen_range(0..kinds.len())], rng.gen_range(1..n)))
        .collect::<Vec<_>>()
        .join(" ")
}
