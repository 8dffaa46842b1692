//! Named switches: identity, Alexander, Burau, the non-commuting family,
//! Budapest and the matrix switches E1, E2.

use std::fmt;

use crate::exactalg::{parse_ratfun, RatFun};
use crate::quat::{fundamental_holds, mat2_bridge, mat2_to_quat, AlgebraParams, Mat2, Quaternion};
use crate::ring::{Ring, RingElem};

use super::{Switch, SwitchError};

pub fn identity(ring: &Ring) -> Switch {
    Switch::unchecked("identity", ring.clone(), [ring.one(), ring.zero(), ring.zero(), ring.one()])
}

fn single_var(e: &RingElem) -> Option<String> {
    let RingElem::Scalar(f) = e else { return None };
    let p = f.num();
    if f.is_polynomial() && p.is_monomial() && p.total_degree() == 1 && p.leading_coeff().is_one() {
        p.occurring().first().map(|&i| p.vars()[i].clone())
    } else {
        None
    }
}

/// `[[0, B], [C, 1 - BC]]` for commuting units `B`, `C`.
pub fn make_alexander(b: RingElem, c: RingElem) -> Result<Switch, SwitchError> {
    if !b.is_unit() {
        return Err(SwitchError::NotUnit("B"));
    }
    if !c.is_unit() {
        return Err(SwitchError::NotUnit("C"));
    }
    if !b.mul(&c)?.equals(&c.mul(&b)?) {
        return Err(SwitchError::NotCommuting);
    }
    let ring = match (&b, &c) {
        (RingElem::Quat(q), _) | (_, RingElem::Quat(q)) => Ring::Quaternion(q.params.clone()),
        _ => Ring::Commutative,
    };
    let d = ring.one().sub(&b.mul(&c)?)?;
    let vars: Vec<String> = [single_var(&b), single_var(&c)].into_iter().flatten().collect();
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ok(Switch::unchecked("alexander", ring.clone(), [ring.zero(), b, c, d]).with_unit_vars(&refs))
}

/// The Alexander switch with `B = 1`.
pub fn make_burau(c: RingElem) -> Result<Switch, SwitchError> {
    let one = match &c {
        RingElem::Quat(q) => RingElem::Quat(Quaternion::one(&q.params)),
        RingElem::Scalar(_) => RingElem::Scalar(RatFun::one()),
    };
    let mut s = make_alexander(one, c)?;
    s.name = "burau".into();
    Ok(s)
}

/// `[[A, B], [C, D]]` with `C = A^-1 B^-1 A (1 - A)` and
/// `D = 1 - A^-1 B^-1 A B`.
pub fn make_noncommuting(a: RingElem, b: RingElem) -> Result<Switch, SwitchError> {
    let (RingElem::Quat(qa), RingElem::Quat(qb)) = (&a, &b) else {
        return Err(SwitchError::Commuting);
    };
    let ring = Ring::Quaternion(qa.params.clone());
    let one = ring.one();
    let ai = a.inv().map_err(|_| SwitchError::NotUnit("A"))?;
    one.sub(&a)?.inv().map_err(|_| SwitchError::NotUnit("A - 1"))?;
    let bi = b.inv().map_err(|_| SwitchError::NotUnit("B"))?;
    if qa.commutes_with(qb)? {
        return Err(SwitchError::Commuting);
    }
    if !fundamental_holds(qa, qb)? {
        return Err(SwitchError::FundamentalFails);
    }
    let conj = ai.mul(&bi)?.mul(&a)?;
    let c = conj.mul(&one.sub(&a)?)?;
    let d = one.sub(&conj.mul(&b)?)?;
    Ok(Switch::unchecked("non-commuting", ring, [a, b, c, d]))
}

/// `[[1+i, j], [-j, 1+i]]` over the classical quaternions.
pub fn budapest() -> Switch {
    let p = AlgebraParams::classical();
    let a = Quaternion::from_ints([1, 1, 0, 0], &p);
    let mut s = make_noncommuting(a.into(), Quaternion::j(&p).into()).expect("budapest inputs are valid");
    s.name = "budapest".into();
    s
}

/// One entry where a printed matrix disagrees with the derived one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryDiscrepancy {
    pub block: char,
    pub row: usize,
    pub col: usize,
    pub printed: RatFun,
    pub derived: RatFun,
}

/// Derived `C`, `D` of a matrix switch compared with reference forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedCheck {
    pub switch: String,
    pub mismatches: Vec<EntryDiscrepancy>,
}

impl PrintedCheck {
    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for PrintedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.consistent() {
            return write!(f, "{}: derived C, D agree with the reference matrices", self.switch);
        }
        write!(
            f,
            "{}: {} entries of the reference C, D differ from the derived ones",
            self.switch,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            let ratio = m.derived.div(&m.printed).map(|r| r.render()).unwrap_or_else(|_| "-".into());
            write!(
                f,
                "\n  {}[{},{}]: reference {}  derived {}  derived/reference {}",
                m.block, m.row, m.col, m.printed, m.derived, ratio
            )?;
        }
        Ok(())
    }
}

/// Substitutes simultaneously, so values may mention the replaced names.
fn subs_all(f: &RatFun, bindings: &[(&str, &RatFun)]) -> Option<RatFun> {
    let mut g = f.clone();
    for (k, (name, _)) in bindings.iter().enumerate() {
        g = g.subs(name, &RatFun::var(&format!("zz_tmp{k}")));
    }
    for (k, (_, value)) in bindings.iter().enumerate() {
        g = g.try_subs(&format!("zz_tmp{k}"), value).ok()?;
    }
    Some(g)
}

fn mat2(rows: [[&str; 2]; 2], bindings: &[(&str, &RatFun)]) -> Result<Mat2, SwitchError> {
    let mut out: Mat2 = Default::default();
    for r in 0..2 {
        for c in 0..2 {
            let f = parse_ratfun(rows[r][c]).expect("built-in expression parses");
            let bad = bindings.iter().any(|(n, _)| n.starts_with("zz_tmp"));
            if bad {
                return Err(SwitchError::BadParam("reserved variable name".into()));
            }
            out[r][c] = subs_all(&f, bindings)
                .ok_or_else(|| SwitchError::BadParam(format!("entry {} is undefined for these values", rows[r][c])))?;
        }
    }
    Ok(out)
}

fn matrix_switch(
    name: &str,
    a: [[&str; 2]; 2],
    b: [[&str; 2]; 2],
    c: [[&str; 2]; 2],
    d: [[&str; 2]; 2],
    bindings: &[(&str, &RatFun)],
) -> Result<(Switch, PrintedCheck), SwitchError> {
    let qa = mat2_to_quat(&mat2(a, bindings)?);
    let qb = mat2_to_quat(&mat2(b, bindings)?);
    let mut s = make_noncommuting(qa.into(), qb.into())?;
    s.name = name.into();
    let mut mismatches = Vec::new();
    for (block, printed, derived) in [('C', c, &s.c), ('D', d, &s.d)] {
        let printed = mat2(printed, bindings)?;
        let RingElem::Quat(q) = derived else { unreachable!() };
        let derived = mat2_bridge(q)?;
        for r in 0..2 {
            for col in 0..2 {
                if printed[r][col] != derived[r][col] {
                    mismatches.push(EntryDiscrepancy {
                        block,
                        row: r + 1,
                        col: col + 1,
                        printed: printed[r][col].clone(),
                        derived: derived[r][col].clone(),
                    });
                }
            }
        }
    }
    Ok((s, PrintedCheck { switch: name.into(), mismatches }))
}

/// `E2`: `A = diag(a, a/(a-1))`, `B` of determinant one; `C`, `D` derived.
pub fn e2(a: &RatFun, b: &RatFun, c: &RatFun) -> Result<(Switch, PrintedCheck), SwitchError> {
    matrix_switch(
        "e2",
        [["a", "0"], ["0", "a/(a-1)"]],
        [["b", "c"], ["(b^2+a-1)/(c*(1-a))", "b/(1-a)"]],
        [["b", "c/(1-a)^2"], ["(1-a)*(b^2+a-1)/c", "b/(1-a)"]],
        [
            ["(2-3*a+a*b^2+a^2-2*b^2)/(1-a)^2", "(a-2)*b*c/(1-a)^2"],
            ["(a-2)*b*(b^2+a-1)/(c*(1-a))", "(2-3*a+a*b^2+a^2-2*b^2)/(1-a)"],
        ],
        &[("a", a), ("b", b), ("c", c)],
    )
}

/// `E1`: `A = [[2, 0], [x, 2]]`, `B` of determinant one; `C`, `D` derived.
pub fn e1(x: &RatFun, y: &RatFun, z: &RatFun) -> Result<(Switch, PrintedCheck), SwitchError> {
    matrix_switch(
        "e1",
        [["2", "0"], ["x", "2"]],
        [["y", "z"], ["(x*y*z-2*y^2-2)/(2*z)", "(x*z-2*y)/2"]],
        [["y+x*z", "z"], ["-(x^2*z^2+3*x*y*z+2*y^2+2)/(2*z)", "-x*z/2-y"]],
        [["x*y*z/2", "x*z^2/2"], ["-x*(2*y^2+x*y*z-2)/4", "-x*z*(x*z+2*y)/4"]],
        &[("x", x), ("y", y), ("z", z)],
    )
}

/// Catalog names with a one-line description and their parameters.
pub fn catalog_names() -> &'static [(&'static str, &'static str)] {
    &[
        ("identity", "the identity switch (commutative)"),
        ("alexander", "[[0, B], [C, 1-BC]], params B, C"),
        ("burau", "[[0, 1], [C, 1-C]], param C"),
        ("budapest", "[[1+i, j], [-j, 1+i]] over the classical quaternions"),
        ("e1", "2x2 matrix switch, A = [[2,0],[x,2]], augmented by t; params x, y, z, t"),
        ("e2", "2x2 matrix switch, A = diag(a, a/(a-1)), augmented by t; params a, b, c, t"),
        (
            "quat",
            "non-commuting switch over (lambda, mu) from A = a0+a1 i+a2 j+a3 k and B = b0+...; defaults give budapest",
        ),
    ]
}

/// Looks up a catalog switch. `params` binds parameter names to
/// expressions; unbound parameters stay symbolic.
pub fn switch_by_name(name: &str, params: &[(String, String)]) -> Result<Switch, SwitchError> {
    let allowed: &[&str] = match name {
        "identity" | "budapest" => &[],
        "alexander" => &["B", "C"],
        "burau" => &["C"],
        "e1" => &["x", "y", "z", "t"],
        "e2" => &["a", "b", "c", "t"],
        "quat" => &["lambda", "mu", "a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"],
        _ => return Err(SwitchError::UnknownSwitch(name.into())),
    };
    let mut vals = Vec::new();
    for (k, v) in params {
        if !allowed.contains(&k.as_str()) {
            return Err(SwitchError::BadParam(format!("switch {name} has no parameter {k:?}")));
        }
        let f = parse_ratfun(v).map_err(|e| SwitchError::BadParam(format!("{k}={v}: {e}")))?;
        vals.push((k.as_str(), f));
    }
    let get =
        |k: &str| vals.iter().rev().find(|(n, _)| *n == k).map(|(_, f)| f.clone()).unwrap_or_else(|| RatFun::var(k));
    let unit = |k: &str| -> Result<RatFun, SwitchError> {
        let f = get(k);
        if f.is_zero() {
            return Err(SwitchError::BadParam(format!("{k} must be nonzero")));
        }
        Ok(f)
    };
    match name {
        "identity" => Ok(identity(&Ring::Commutative)),
        "budapest" => Ok(budapest()),
        "alexander" => make_alexander(unit("B")?.into(), unit("C")?.into()),
        "burau" => make_burau(unit("C")?.into()),
        "quat" => {
            let def = |k: &str, d: i64| {
                vals.iter().rev().find(|(n, _)| *n == k).map(|(_, f)| f.clone()).unwrap_or(RatFun::from_int(d))
            };
            let params = AlgebraParams::new(def("lambda", -1), def("mu", -1))?;
            let coords =
                |p: &str, d: [i64; 4]| -> [RatFun; 4] { std::array::from_fn(|i| def(&format!("{p}{i}"), d[i])) };
            let a = Quaternion::new(coords("a", [1, 1, 0, 0]), params.clone());
            let b = Quaternion::new(coords("b", [0, 0, 1, 0]), params);
            let mut s = make_noncommuting(a.into(), b.into())?;
            s.name = "quat".into();
            Ok(s)
        }
        "e1" => {
            let (s, _) = e1(&get("x"), &get("y"), &unit("z")?)?;
            let mut s = s.augment(&unit("t")?)?;
            s.name = "e1".into();
            Ok(s)
        }
        _ => {
            let (s, _) = e2(&get("a"), &get("b"), &unit("c")?)?;
            let mut s = s.augment(&unit("t")?)?;
            s.name = "e2".into();
            Ok(s)
        }
    }
}

/// The printed-versus-derived comparison for `e1` and `e2`; `None` for
/// switches that are not given in printed form.
pub fn printed_check_by_name(name: &str, params: &[(String, String)]) -> Result<Option<PrintedCheck>, SwitchError> {
    let names: [&str; 3] = match name {
        "e1" => ["x", "y", "z"],
        "e2" => ["a", "b", "c"],
        _ => return Ok(None),
    };
    let mut args = names.map(RatFun::var);
    for (k, v) in params {
        if let Some(i) = names.iter().position(|n| n == k) {
            args[i] = parse_ratfun(v).map_err(|e| SwitchError::BadParam(format!("{k}={v}: {e}")))?;
        }
    }
    let [p, q, r] = &args;
    let (_, check) = if name == "e1" { e1(p, q, r)? } else { e2(p, q, r)? };
    Ok(Some(check))
}
