//! Catalog of exact integer identities satisfied by the embedded data:
//! fiber factorizations of the correspondence polynomials at complex
//! multiplication points, discriminants and resultants splitting into class
//! polynomials, parametrization and curve-pair identities, explicit point
//! maps, and the class polynomial pipelines through the fifth-power relation.
//!
//! Every check runs over the integers.  An entry either states that two
//! expressions over the stored records are equal, that they differ (used to
//! pin a stored resultant value to the right cofactor pair), or names a
//! structural check on one level's parametrization bundle.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bipoly::BiIntPoly;
use crate::data::{compose_fraction, DataSet, FrickeLevelData, Record};
use crate::intpoly::IntPoly;
use crate::resultant::{
    discriminant_bivar_x, discriminant_bivar_y, discriminant_int, resultant_bivar_int,
    resultant_bivar_int_y, resultant_int,
};
use crate::Witness;

/// Exact integer expression over the stored records.
#[derive(Clone, Debug)]
pub enum Expr {
    /// A stored record: integer, univariate polynomial, or two-variable grid.
    Rec(&'static str),
    /// Correspondence grid of a level.
    Corr(u64),
    /// Class polynomial for discriminant -d.
    Class(u64),
    Lit(i64),
    /// The monic linear monomial in one variable.
    Var,
    /// Var + a.
    Lin(i64),
    Neg(Box<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, usize),
    /// Substitute an integer for the first variable of a grid.
    SubstX(Box<Expr>, i64),
    /// Substitute an integer for the second variable of a grid.
    SubstY(Box<Expr>, i64),
    /// Resultant eliminating the first grid variable; with two univariate
    /// operands the first variable is the only one and the result is a number.
    ResX(Box<Expr>, Box<Expr>),
    /// Resultant eliminating the second grid variable; univariate operands
    /// are read as polynomials in the second variable.
    ResY(Box<Expr>, Box<Expr>),
    /// Discriminant of a univariate polynomial.
    Disc(Box<Expr>),
    /// Discriminant of a grid with respect to its first variable.
    DiscX(Box<Expr>),
    /// Discriminant of a grid with respect to its second variable.
    DiscY(Box<Expr>),
    /// Evaluate a univariate polynomial at an integer.
    Eval(Box<Expr>, i64),
    /// Swap the two variables of a grid.
    Transpose(Box<Expr>),
}

impl Expr {
    fn pow(self, e: usize) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    fn at_x(self, v: i64) -> Expr {
        Expr::SubstX(Box::new(self), v)
    }

    fn at_y(self, v: i64) -> Expr {
        Expr::SubstY(Box::new(self), v)
    }

    fn value_at(self, v: i64) -> Expr {
        Expr::Eval(Box::new(self), v)
    }

    fn transposed(self) -> Expr {
        Expr::Transpose(Box::new(self))
    }
}

fn rec(name: &'static str) -> Expr {
    Expr::Rec(name)
}

fn corr(n: u64) -> Expr {
    Expr::Corr(n)
}

fn class(d: u64) -> Expr {
    Expr::Class(d)
}

fn lit(v: i64) -> Expr {
    Expr::Lit(v)
}

fn var() -> Expr {
    Expr::Var
}

fn lin(a: i64) -> Expr {
    Expr::Lin(a)
}

fn mul<const K: usize>(parts: [Expr; K]) -> Expr {
    Expr::Mul(parts.into_iter().collect())
}

fn res_x(f: Expr, g: Expr) -> Expr {
    Expr::ResX(Box::new(f), Box::new(g))
}

fn res_y(f: Expr, g: Expr) -> Expr {
    Expr::ResY(Box::new(f), Box::new(g))
}

fn disc(f: Expr) -> Expr {
    Expr::Disc(Box::new(f))
}

fn disc_x(f: Expr) -> Expr {
    Expr::DiscX(Box::new(f))
}

fn disc_y(f: Expr) -> Expr {
    Expr::DiscY(Box::new(f))
}

/// Which curve of a level's pair a structural check refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Dom,
    Img,
}

/// One verifiable statement about the stored data.
#[derive(Clone, Debug)]
pub enum Check {
    /// Both expressions evaluate to the same exact value.
    Eq(Expr, Expr),
    /// The expressions evaluate to different values.
    Neq(Expr, Expr),
    /// Both parametrization sheets satisfy the correspondence identically.
    ParamOnCurve(u64),
    /// Over the z-line the correspondence in its first variable splits into
    /// the two parametrized sheets once denominators are cleared.
    TwoSheets(u64),
    /// The level's j fraction is the j-invariant of the stored curve.
    JForm(u64, Side),
    /// The parametrization sheets, rewritten in the curve parameter, are the
    /// stored j fractions of the curve pair (level 7).
    SheetMatch(Side),
    /// The rational point map lands on the image curve.
    PointMap(u64),
}

/// A catalog entry: stable identifier, reporting group, and its check.
#[derive(Clone, Debug)]
pub struct NamedIdentity {
    pub id: &'static str,
    pub group: &'static str,
    pub check: Check,
}

/// Result of running one catalog entry.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub id: &'static str,
    pub group: &'static str,
    pub pass: bool,
    /// First point of disagreement when the check fails.
    pub witness: Option<Witness>,
    /// Computed left side as decimal coefficient strings, ascending, when the
    /// check produces a single number or univariate polynomial.
    pub coeffs: Vec<String>,
}

/// Computed value of an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Val {
    Int(BigInt),
    Poly(IntPoly),
    Grid(BiIntPoly),
}

fn val_mul(a: Val, b: Val) -> Val {
    match (a, b) {
        (Val::Int(x), Val::Int(y)) => Val::Int(x * y),
        (Val::Int(x), Val::Poly(p)) | (Val::Poly(p), Val::Int(x)) => Val::Poly(p.mul_scalar(&x)),
        (Val::Poly(x), Val::Poly(y)) => Val::Poly(x.mul(&y)),
        (Val::Int(x), Val::Grid(g)) | (Val::Grid(g), Val::Int(x)) => Val::Grid(g.mul_scalar(&x)),
        (Val::Grid(x), Val::Grid(y)) => Val::Grid(x.mul(&y)),
        _ => panic!("cannot multiply a univariate polynomial by a grid"),
    }
}

fn eval_expr(ds: &DataSet, e: &Expr) -> Val {
    match e {
        Expr::Rec(name) => match ds.record(name) {
            Record::Int(v) => Val::Int(v.clone()),
            Record::Poly(v) => Val::Poly(v.clone()),
            Record::Grid(v) => Val::Grid(v.clone()),
            other => panic!("record {name:?} is not usable in an expression: {other:?}"),
        },
        Expr::Corr(n) => Val::Grid(ds.corr(*n).clone()),
        Expr::Class(d) => Val::Poly(ds.class_poly(*d).clone()),
        Expr::Lit(v) => Val::Int(BigInt::from(*v)),
        Expr::Var => Val::Poly(IntPoly::from_i64(&[0, 1])),
        Expr::Lin(a) => Val::Poly(IntPoly::linear(*a)),
        Expr::Neg(inner) => match eval_expr(ds, inner) {
            Val::Int(v) => Val::Int(-v),
            Val::Poly(v) => Val::Poly(v.neg()),
            Val::Grid(v) => Val::Grid(v.neg()),
        },
        Expr::Mul(parts) => parts
            .iter()
            .map(|p| eval_expr(ds, p))
            .reduce(val_mul)
            .expect("products in the catalog are nonempty"),
        Expr::Pow(inner, k) => match eval_expr(ds, inner) {
            Val::Int(v) => Val::Int(v.pow(u32::try_from(*k).expect("exponent fits u32"))),
            Val::Poly(v) => Val::Poly(v.pow(*k)),
            Val::Grid(v) => Val::Grid(v.pow(*k)),
        },
        Expr::SubstX(inner, v) => match eval_expr(ds, inner) {
            Val::Grid(g) => Val::Poly(g.subst_x(&BigInt::from(*v))),
            other => panic!("first-variable substitution needs a grid, got {other:?}"),
        },
        Expr::SubstY(inner, v) => match eval_expr(ds, inner) {
            Val::Grid(g) => Val::Poly(g.subst_y(&BigInt::from(*v))),
            other => panic!("second-variable substitution needs a grid, got {other:?}"),
        },
        Expr::ResX(f, g) => match (eval_expr(ds, f), eval_expr(ds, g)) {
            (Val::Poly(a), Val::Poly(b)) => Val::Int(resultant_int(&a, &b)),
            (a, b) => {
                let lift = |v: Val| match v {
                    Val::Grid(g) => g,
                    Val::Poly(p) => BiIntPoly::from_poly_x(&p),
                    Val::Int(v) => BiIntPoly::from_poly_x(&IntPoly::constant(v)),
                };
                Val::Poly(resultant_bivar_int(&lift(a), &lift(b)))
            }
        },
        Expr::ResY(f, g) => match (eval_expr(ds, f), eval_expr(ds, g)) {
            (Val::Poly(a), Val::Poly(b)) => Val::Int(resultant_int(&a, &b)),
            (a, b) => {
                let lift = |v: Val| match v {
                    Val::Grid(g) => g,
                    Val::Poly(p) => BiIntPoly::from_poly_y(&p),
                    Val::Int(v) => BiIntPoly::from_poly_y(&IntPoly::constant(v)),
                };
                Val::Poly(resultant_bivar_int_y(&lift(a), &lift(b)))
            }
        },
        Expr::Disc(f) => match eval_expr(ds, f) {
            Val::Poly(p) => Val::Int(discriminant_int(&p)),
            other => panic!("discriminant needs a univariate polynomial, got {other:?}"),
        },
        Expr::DiscX(f) => match eval_expr(ds, f) {
            Val::Grid(g) => Val::Poly(discriminant_bivar_x(&g)),
            other => panic!("grid discriminant needs a grid, got {other:?}"),
        },
        Expr::DiscY(f) => match eval_expr(ds, f) {
            Val::Grid(g) => Val::Poly(discriminant_bivar_y(&g)),
            other => panic!("grid discriminant needs a grid, got {other:?}"),
        },
        Expr::Eval(f, v) => match eval_expr(ds, f) {
            Val::Poly(p) => Val::Int(p.eval_i64(*v)),
            other => panic!("evaluation needs a univariate polynomial, got {other:?}"),
        },
        Expr::Transpose(f) => match eval_expr(ds, f) {
            Val::Grid(g) => Val::Grid(g.transpose()),
            other => panic!("transpose needs a grid, got {other:?}"),
        },
    }
}

/// Drop a value to the simplest kind that represents it.
fn lower(v: Val) -> Val {
    match v {
        Val::Grid(g) if g.deg_x() == 0 => lower(Val::Poly(g.row(0))),
        Val::Poly(p) if p.deg0() == 0 => Val::Int(p.coeff(0)),
        other => other,
    }
}

fn poly_witness(a: &IntPoly, b: &IntPoly) -> Option<Witness> {
    for i in 0..=a.deg0().max(b.deg0()) {
        let (ca, cb) = (a.coeff(i), b.coeff(i));
        if ca != cb {
            return Some(Witness {
                index: i,
                expected: cb.to_string(),
                actual: ca.to_string(),
            });
        }
    }
    None
}

fn grid_witness(a: &BiIntPoly, b: &BiIntPoly) -> Option<Witness> {
    for i in 0..=a.deg_x().max(b.deg_x()) {
        let (ra, rb) = (a.row(i), b.row(i));
        if ra == rb {
            continue;
        }
        for j in 0..=ra.deg0().max(rb.deg0()) {
            let (ca, cb) = (ra.coeff(j), rb.coeff(j));
            if ca != cb {
                return Some(Witness {
                    index: j,
                    expected: format!("{cb} (row {i})"),
                    actual: format!("{ca} (row {i})"),
                });
            }
        }
    }
    None
}

/// First disagreement between two lowered values; None means equal.
fn value_witness(a: &Val, b: &Val) -> Option<Witness> {
    match (a, b) {
        (Val::Int(x), Val::Int(y)) => (x != y).then(|| Witness {
            index: 0,
            expected: y.to_string(),
            actual: x.to_string(),
        }),
        (Val::Poly(x), Val::Poly(y)) => poly_witness(x, y),
        (Val::Grid(x), Val::Grid(y)) => grid_witness(x, y),
        _ => Some(Witness {
            index: 0,
            expected: kind_name(b).into(),
            actual: kind_name(a).into(),
        }),
    }
}

fn kind_name(v: &Val) -> &'static str {
    match v {
        Val::Int(_) => "a number",
        Val::Poly(_) => "a univariate polynomial",
        Val::Grid(_) => "a two-variable polynomial",
    }
}

fn coeff_strings(v: &Val) -> Vec<String> {
    match v {
        Val::Int(x) => vec![x.to_string()],
        Val::Poly(p) => (0..=p.deg0()).map(|i| p.coeff(i).to_string()).collect(),
        Val::Grid(_) => Vec::new(),
    }
}

type CheckResult = (bool, Option<Witness>, Vec<String>);

/// c4, c6 and the discriminant of a Weierstrass coefficient vector over Z[t].
fn curve_invariants(a: &[IntPoly; 5]) -> (IntPoly, IntPoly, IntPoly) {
    let [a1, a2, a3, a4, a6] = a;
    let s = |v: i64| BigInt::from(v);
    let b2 = a1.mul(a1).add(&a2.mul_scalar(&s(4)));
    let b4 = a4.mul_scalar(&s(2)).add(&a1.mul(a3));
    let b6 = a3.mul(a3).add(&a6.mul_scalar(&s(4)));
    let b8 = a1
        .mul(a1)
        .mul(a6)
        .add(&a2.mul(a6).mul_scalar(&s(4)))
        .sub(&a1.mul(a3).mul(a4))
        .add(&a2.mul(a3).mul(a3))
        .sub(&a4.mul(a4));
    let c4 = b2.mul(&b2).sub(&b4.mul_scalar(&s(24)));
    let c6 = b2
        .mul(&b2)
        .mul(&b2)
        .neg()
        .add(&b2.mul(&b4).mul_scalar(&s(36)))
        .sub(&b6.mul_scalar(&s(216)));
    let disc = b2
        .mul(&b2)
        .mul(&b8)
        .neg()
        .sub(&b4.mul(&b4).mul(&b4).mul_scalar(&s(8)))
        .sub(&b6.mul(&b6).mul_scalar(&s(27)))
        .add(&b2.mul(&b4).mul(&b6).mul_scalar(&s(9)));
    (c4, c6, disc)
}

/// The j-invariant of one side of a level's curve pair as a fraction in the
/// curve parameter, taken from the stored forms or from the parametrization
/// sheets rewritten through z(parameter).
pub(crate) fn level_j_fraction(lvl: &FrickeLevelData, side: Side) -> (IntPoly, IntPoly) {
    if let Some(jf) = &lvl.j_forms {
        return match side {
            Side::Dom => (jf.dom_num.clone(), jf.dom_den.clone()),
            Side::Img => (jf.img_num.clone(), jf.img_den.clone()),
        };
    }
    let (num, den) = sheet_fraction(lvl, side);
    match &lvl.z_of_param {
        Some((zn, zd)) => compose_fraction(num, den, zn, zd),
        None => (num.clone(), den.clone()),
    }
}

/// The parametrization sheet carrying the j-invariant of the given side.
fn sheet_fraction(lvl: &FrickeLevelData, side: Side) -> (&IntPoly, &IntPoly) {
    let use_x2 = match side {
        Side::Dom => lvl.sheets_swapped,
        Side::Img => !lvl.sheets_swapped,
    };
    if use_x2 {
        (&lvl.par.x2_num, &lvl.par.x2_den)
    } else {
        (&lvl.par.x_num, &lvl.par.x_den)
    }
}

fn param_on_curve(ds: &DataSet, n: u64) -> CheckResult {
    let lvl = ds.level(n).expect("catalog levels are stored");
    let par = &lvl.par;
    for (label, xn, xd) in [
        (1usize, &par.x_num, &par.x_den),
        (2, &par.x2_num, &par.x2_den),
    ] {
        let r = lvl.corr.subst_fractions(xn, xd, &par.y_num, &par.y_den);
        if !r.is_zero() {
            let i = (0..=r.deg0()).find(|&i| !r.coeff(i).is_zero()).unwrap_or(0);
            let w = Witness {
                index: i,
                expected: "0".into(),
                actual: format!("{} (sheet {label})", r.coeff(i)),
            };
            return (false, Some(w), Vec::new());
        }
    }
    (true, None, Vec::new())
}

fn two_sheets(ds: &DataSet, n: u64) -> CheckResult {
    let lvl = ds.level(n).expect("catalog levels are stored");
    let corr = &lvl.corr;
    let par = &lvl.par;
    let dy = corr.deg_y();
    let clear = |row: &IntPoly| {
        let mut acc = IntPoly::zero();
        for j in 0..=row.deg0() {
            let c = row.coeff(j);
            if c.is_zero() {
                continue;
            }
            let term = par.y_num.pow(j).mul(&par.y_den.pow(dy - j)).mul_scalar(&c);
            acc = acc.add(&term);
        }
        acc
    };
    let lhs = BiIntPoly::new((0..=corr.deg_x()).map(|i| clear(&corr.row(i))).collect());
    let sheet1 = BiIntPoly::new(vec![par.x_num.neg(), par.x_den.clone()]);
    let sheet2 = BiIntPoly::new(vec![par.x2_num.neg(), par.x2_den.clone()]);
    let rhs = sheet1.mul(&sheet2);
    match grid_witness(&lhs, &rhs) {
        None => (true, None, Vec::new()),
        Some(w) => (false, Some(w), Vec::new()),
    }
}

fn j_form(ds: &DataSet, n: u64, side: Side) -> CheckResult {
    let lvl = ds.level(n).expect("catalog levels are stored");
    let (jn, jd) = level_j_fraction(lvl, side);
    let curve = match side {
        Side::Dom => &lvl.curve_dom,
        Side::Img => &lvl.curve_img,
    };
    let (c4, c6, disc) = curve_invariants(curve);
    let c4_cubed = c4.mul(&c4).mul(&c4);
    let formal = c4_cubed.sub(&c6.mul(&c6));
    let scaled = disc.mul_scalar(&BigInt::from(1728));
    if let Some(w) = poly_witness(&formal, &scaled) {
        return (false, Some(w), Vec::new());
    }
    match poly_witness(&c4_cubed.mul(&jd), &jn.mul(&disc)) {
        None => (true, None, Vec::new()),
        Some(w) => (false, Some(w), Vec::new()),
    }
}

fn sheet_match(ds: &DataSet, side: Side) -> CheckResult {
    let lvl = ds.level(7).expect("level 7 is stored");
    let jf = lvl.j_forms.as_ref().expect("level 7 stores j fractions");
    let (zn, zd) = lvl
        .z_of_param
        .as_ref()
        .expect("level 7 stores z in the curve parameter");
    let (num, den) = sheet_fraction(lvl, side);
    let (cn, cd) = compose_fraction(num, den, zn, zd);
    let (tn, td) = match side {
        Side::Dom => (&jf.dom_num, &jf.dom_den),
        Side::Img => (&jf.img_num, &jf.img_den),
    };
    match poly_witness(&cn.mul(td), &tn.mul(&cd)) {
        None => (true, None, Vec::new()),
        Some(w) => (false, Some(w), Vec::new()),
    }
}

type Pair = (BiIntPoly, BiIntPoly);

/// Product in Z[t][x][y] / (y^2 = p + q y), elements stored as (e0, e1)
/// meaning e0 + e1 y.
fn pair_mul(a: &Pair, b: &Pair, p: &BiIntPoly, q: &BiIntPoly) -> Pair {
    let e1f1 = a.1.mul(&b.1);
    (
        a.0.mul(&b.0).add(&e1f1.mul(p)),
        a.0.mul(&b.1).add(&a.1.mul(&b.0)).add(&e1f1.mul(q)),
    )
}

fn point_map(ds: &DataSet, n: u64) -> CheckResult {
    let lvl = ds.level(n).expect("catalog levels are stored");
    let iso = lvl.iso.as_ref().expect("point map data stored for this level");
    let lift = BiIntPoly::from_poly_x;
    let x = BiIntPoly::from_poly_y(&IntPoly::from_i64(&[0, 1]));

    // Square of the domain y-coordinate: y^2 = p + q y on the domain curve.
    let [a1, a2, _a3, a4, a6] = &lvl.curve_dom;
    let p = x
        .pow(3)
        .add(&lift(a2).mul(&x.pow(2)))
        .add(&lift(a4).mul(&x))
        .add(&lift(a6));
    let q = lift(a1).mul(&x).add(&lift(&lvl.curve_dom[2])).neg();

    let [b1, b2, b3, b4, b6] = &lvl.curve_img;
    let u_num = &iso.u_num;
    let u_den = &iso.u_den;
    let v_den = &iso.v_den;
    let w: Pair = (iso.v_y0.clone(), iso.v_y1.clone());

    // The image coordinates are u = u_num/u_den and v = (v_y0 + v_y1 y)/v_den.
    // Multiply the image curve equation through by v_den^2 u_den^3; both
    // sides stay polynomial with no divisibility assumptions.
    let d2 = u_den.mul(u_den);
    let d3 = d2.mul(u_den);
    let e2 = v_den.mul(v_den);
    let w_sq = pair_mul(&w, &w, &p, &q);
    let g = lift(b1)
        .mul(u_num)
        .mul(v_den)
        .mul(&d2)
        .add(&lift(b3).mul(v_den).mul(&d3));
    let lhs: Pair = (
        w_sq.0.mul(&d3).add(&w.0.mul(&g)),
        w_sq.1.mul(&d3).add(&w.1.mul(&g)),
    );
    let u2 = u_num.mul(u_num);
    let u3 = u2.mul(u_num);
    let rhs = u3
        .mul(&e2)
        .add(&lift(b2).mul(&u2).mul(&e2).mul(u_den))
        .add(&lift(b4).mul(u_num).mul(&e2).mul(&d2))
        .add(&lift(b6).mul(&e2).mul(&d3));

    if let Some(w) = grid_witness(&lhs.1, &BiIntPoly::zero()) {
        return (false, Some(w), Vec::new());
    }
    if let Some(w) = grid_witness(&lhs.0, &rhs) {
        return (false, Some(w), Vec::new());
    }

    if n == 7 {
        // The v denominator is the u denominator times the kernel polynomial
        // x (x - d^2 + d)(x - d^3 + d^2).
        let kernel = x
            .mul(&lift(&IntPoly::from_i64(&[0, -1, 1])).sub(&x))
            .mul(&lift(&IntPoly::from_i64(&[0, 0, -1, 1])).sub(&x));
        if let Some(w) = grid_witness(&kernel.mul(u_den), v_den) {
            return (false, Some(w), Vec::new());
        }
    }
    (true, None, Vec::new())
}

fn eq(id: &'static str, l: Expr, r: Expr) -> NamedIdentity {
    NamedIdentity {
        id,
        group: "identity",
        check: Check::Eq(l, r),
    }
}

fn neq(id: &'static str, l: Expr, r: Expr) -> NamedIdentity {
    NamedIdentity {
        id,
        group: "identity",
        check: Check::Neq(l, r),
    }
}

fn pipe(id: &'static str, l: Expr, r: Expr) -> NamedIdentity {
    NamedIdentity {
        id,
        group: "pipeline",
        check: Check::Eq(l, r),
    }
}

fn structural(id: &'static str, check: Check) -> NamedIdentity {
    NamedIdentity {
        id,
        group: "identity",
        check,
    }
}

/// The full identity catalog over the stored data.
pub fn catalog() -> Vec<NamedIdentity> {
    let mut out = Vec::new();

    // Discriminants of the correspondence in each variable.
    out.push(eq(
        "n2-disc-x",
        disc_x(corr(2)),
        mul([var(), lin(-256), lin(-81).pow(2)]),
    ));
    out.push(eq(
        "n2-disc-y",
        disc_y(corr(2)),
        mul([lit(4), var().pow(2), lin(-1728), class(7).pow(2)]),
    ));
    out.push(eq(
        "n3-disc-x",
        disc_x(corr(3)),
        mul([var(), lin(-108), lin(-8).pow(2), lin(-64).pow(2)]),
    ));
    out.push(eq(
        "n3-disc-y",
        disc_y(corr(3)),
        mul([
            lit(27),
            var().pow(2),
            lin(-1728).pow(2),
            class(8).pow(2),
            class(11).pow(2),
        ])
        .neg(),
    ));
    out.push(eq(
        "n5-disc-x",
        disc_x(corr(5)),
        mul([
            var().pow(2),
            lin(-4).pow(2),
            lin(-18).pow(2),
            lin(-36).pow(2),
            rec("fix5_m20"),
        ]),
    ));
    out.push(eq(
        "n5-disc-y",
        disc_y(corr(5)),
        mul([
            lit(5).pow(5),
            var().pow(4),
            lin(-1728).pow(4),
            class(11).pow(2),
            class(16).pow(2),
            class(19).pow(2),
        ]),
    ));
    out.push(eq(
        "n7-disc-x",
        disc_x(corr(7)),
        mul([
            lin(1),
            lin(-27),
            var().pow(2),
            lin(-2).pow(2),
            lin(-8).pow(2),
            lin(-24).pow(2),
            rec("fix7_m24").pow(2),
        ]),
    ));
    out.push(eq(
        "n7-disc-y",
        disc_y(corr(7)),
        mul([
            lit(7).pow(7),
            var().pow(6),
            lin(-1728).pow(4),
            class(12).pow(2),
            class(19).pow(2),
            class(27).pow(2),
            class(24).pow(2),
        ])
        .neg(),
    ));

    // The displayed forms ordered by the other variable are transposes.
    out.push(eq("n5-swap-display", corr(5).transposed(), rec("corr5_ydisp")));
    out.push(eq("n7-swap-display", corr(7).transposed(), rec("corr7_ydisp")));

    // Level 5 fibers over complex multiplication points and their partners.
    out.push(eq(
        "n5-fiber-j1728",
        corr(5).at_x(1728),
        mul([var().pow(2), rec("cof5_m4").pow(2)]),
    ));
    out.push(eq("n5-fiber-y0", corr(5).at_y(0), lin(-1728).pow(2)));
    out.push(eq(
        "n5-fiber-jm32768",
        corr(5).at_x(-32768),
        mul([lin(-4).pow(2), rec("cof5_m11")]),
    ));
    out.push(eq("n5-fiber-y4", corr(5).at_y(4), class(11).pow(2)));
    out.push(eq(
        "n5-fiber-j287496",
        corr(5).at_x(287496),
        mul([lin(-18).pow(2), rec("cof5_m16")]),
    ));
    out.push(eq("n5-fiber-y18", corr(5).at_y(18), class(16).pow(2)));
    out.push(eq(
        "n5-fiber-jm884736",
        corr(5).at_x(-884736),
        mul([lin(-36).pow(2), rec("cof5_m19")]),
    ));
    out.push(eq("n5-fiber-y36", corr(5).at_y(36), class(19).pow(2)));
    out.push(eq(
        "n5-fiber-j0",
        corr(5).at_x(0),
        rec("cof5_m3").pow(3),
    ));
    out.push(eq(
        "n5-cof-m4-value",
        rec("cof5_m4").value_at(0),
        rec("ival5_m4_at0"),
    ));
    out.push(eq(
        "n5-cof-m11-value",
        rec("cof5_m11").value_at(4),
        rec("ival5_m11_at4"),
    ));
    out.push(eq(
        "n5-cof-m16-value",
        rec("cof5_m16").value_at(18),
        rec("ival5_m16_at18"),
    ));
    out.push(eq(
        "n5-cof-m19-value",
        rec("cof5_m19").value_at(36),
        rec("ival5_m19_at36"),
    ));
    out.push(eq(
        "n5-fix-resultant",
        res_y(corr(5), rec("fix5_m20")),
        class(20).pow(2),
    ));
    out.push(eq(
        "n5-class20-fiber",
        res_x(class(20), corr(5)),
        mul([rec("fix5_m20"), rec("cof5_m20")]),
    ));
    out.push(eq(
        "n5-cof-m20-resultant",
        res_y(rec("fix5_m20"), rec("cof5_m20")),
        rec("ival5_m20_res"),
    ));
    out.push(eq(
        "n5-class100-from-fiber",
        res_y(corr(5), rec("cof5_m4")),
        mul([lin(-1728).pow(2), class(100)]),
    ));
    out.push(eq(
        "n5-class100-fiber",
        res_x(class(100), corr(5)),
        mul([rec("cof5_m4"), rec("cof5_m100")]),
    ));
    out.push(eq(
        "n5-cof-m100-resultant",
        res_y(rec("cof5_m4"), rec("cof5_m100")),
        rec("ival5_m100_res"),
    ));
    out.push(eq(
        "n5-class75-from-fiber",
        res_y(corr(5), rec("cof5_m3")),
        mul([var().pow(2), class(75)]),
    ));
    out.push(eq(
        "n5-class75-fiber",
        res_x(class(75), corr(5)),
        mul([rec("cof5_m3"), rec("cof5_m75")]),
    ));
    out.push(eq(
        "n5-cof-m75-resultant",
        res_y(rec("cof5_m3"), rec("cof5_m75")),
        rec("ival5_m75_res"),
    ));
    out.push(eq(
        "n5-branch-y-discriminant",
        disc(mul([var(), lin(-4), lin(-18), lin(-36), rec("fix5_m20")])),
        rec("ival5_ydisc"),
    ));
    out.push(eq(
        "n5-branch-x-discriminant",
        disc(mul([var(), lin(-1728), class(11), class(16), class(19)])),
        rec("ival5_xdisc"),
    ));

    // Level 7 fibers, the fixed-point factor, and the class chains.
    out.push(eq(
        "n7-fiber-jm3375",
        corr(7).at_x(-3375),
        mul([lin(1), rec("cof7_m7")]),
    ));
    out.push(eq(
        "n7-fiber-j16581375",
        corr(7).at_x(16581375),
        mul([lin(-27), rec("cof7_m28")]),
    ));
    out.push(eq(
        "n7-elliptic-resultant",
        res_y(mul([lin(1), lin(-27)]), corr(7)),
        mul([class(7).pow(2), class(28).pow(2)]),
    ));
    out.push(eq(
        "n7-cof-m7-value",
        rec("cof7_m7").value_at(-1),
        rec("ival7_m7_atm1"),
    ));
    out.push(eq(
        "n7-cof-m28-value",
        rec("cof7_m28").value_at(27),
        rec("ival7_m28_at27"),
    ));
    out.push(eq(
        "n7-fiber-j0",
        corr(7).at_x(0),
        mul([var().pow(2), rec("cof7_m3").pow(3)]),
    ));
    out.push(eq("n7-fiber-y0", corr(7).at_y(0), var().pow(2)));
    out.push(eq(
        "n7-fiber-j54000",
        corr(7).at_x(54000),
        mul([lin(-2).pow(2), rec("cof7_m12")]),
    ));
    out.push(eq("n7-fiber-y2", corr(7).at_y(2), class(12).pow(2)));
    out.push(eq(
        "n7-fiber-jm884736",
        corr(7).at_x(-884736),
        mul([lin(-8).pow(2), rec("cof7_m19")]),
    ));
    out.push(eq("n7-fiber-y8", corr(7).at_y(8), class(19).pow(2)));
    out.push(eq(
        "n7-fiber-jm12288000",
        corr(7).at_x(-12288000),
        mul([lin(-24).pow(2), rec("cof7_m27")]),
    ));
    out.push(eq("n7-fiber-y24", corr(7).at_y(24), class(27).pow(2)));
    out.push(eq(
        "n7-cof-m3-value",
        rec("cof7_m3").value_at(0),
        rec("ival7_m3_at0"),
    ));
    out.push(eq(
        "n7-cof-m12-value",
        rec("cof7_m12").value_at(2),
        rec("ival7_m12_at2"),
    ));
    out.push(eq(
        "n7-cof-m19-value",
        rec("cof7_m19").value_at(8),
        rec("ival7_m19_at8"),
    ));
    out.push(eq(
        "n7-cof-m27-value",
        rec("cof7_m27").value_at(24),
        rec("ival7_m27_at24"),
    ));
    out.push(eq(
        "n7-fix-resultant",
        res_y(corr(7), rec("fix7_m24")),
        class(24).pow(2),
    ));
    out.push(eq(
        "n7-class24-fiber",
        res_x(class(24), corr(7)),
        mul([rec("fix7_m24").pow(2), rec("cof7_m24")]),
    ));
    out.push(eq(
        "n7-cof-m24-resultant",
        res_y(rec("fix7_m24"), rec("cof7_m24")),
        rec("ival7_m24_res"),
    ));
    out.push(eq(
        "n7-branch-y-discriminant",
        disc(mul([
            var(),
            lin(1),
            lin(-27),
            lin(-2),
            lin(-8),
            lin(-24),
            rec("fix7_m24"),
        ])),
        rec("ival7_ydisc"),
    ));
    out.push(eq(
        "n7-class147-from-fiber",
        res_y(corr(7), rec("cof7_m3")),
        mul([var().pow(2), class(147)]),
    ));
    out.push(eq(
        "n7-class147-fiber",
        res_x(class(147), corr(7)),
        mul([rec("cof7_m3"), rec("cof7_m147")]),
    ));
    out.push(eq(
        "n7-cof-m147-resultant",
        res_y(rec("cof7_m3"), rec("cof7_m147")),
        rec("ival7_m147_res"),
    ));
    out.push(neq(
        "n7-cof-m147-distinct",
        res_y(rec("cof7_m4"), rec("cof7_m147")),
        rec("ival7_m147_res"),
    ));
    out.push(eq(
        "n7-fiber-j1728",
        corr(7).at_x(1728),
        rec("cof7_m4").pow(2),
    ));
    out.push(eq(
        "n7-class196-from-fiber",
        res_y(corr(7), rec("cof7_m4")),
        mul([lin(-1728).pow(4), class(196)]),
    ));
    out.push(eq(
        "n7-class196-fiber",
        res_x(class(196), corr(7)),
        mul([rec("cof7_m4"), rec("cof7_m196")]),
    ));
    out.push(eq(
        "n7-cof-m196-resultant",
        res_y(rec("cof7_m4"), rec("cof7_m196")),
        rec("ival7_m196_res"),
    ));

    // Level 2 fibers.
    out.push(eq(
        "n2-fiber-j1728",
        corr(2).at_x(1728),
        mul([var(), rec("cof2_m4").pow(2)]),
    ));
    out.push(eq("n2-fiber-y0", corr(2).at_y(0), lin(-1728).pow(2)));
    out.push(eq(
        "n2-fiber-j8000",
        corr(2).at_x(8000),
        mul([lin(-256), rec("cof2_m8")]),
    ));
    out.push(eq("n2-fiber-y256", corr(2).at_y(256), class(8).pow(2)));
    out.push(eq(
        "n2-fiber-jm3375",
        corr(2).at_x(-3375),
        mul([lin(-81).pow(2), rec("cof2_m7")]),
    ));
    out.push(eq("n2-fiber-y81", corr(2).at_y(81), class(7).pow(2)));
    out.push(eq("n2-fiber-j0", corr(2).at_x(0), rec("cof2_m3").pow(3)));
    out.push(eq(
        "n2-fiber-ym144",
        corr(2).at_y(-144),
        mul([var(), class(12)]),
    ));
    out.push(eq(
        "n2-fiber-j54000",
        corr(2).at_x(54000),
        mul([rec("cof2_m3"), rec("cof2_m12")]),
    ));
    out.push(eq(
        "n2-cof-m12-resultant",
        res_y(rec("cof2_m3"), rec("cof2_m12")),
        rec("ival2_m12_res"),
    ));
    out.push(eq(
        "n2-fiber-y648",
        corr(2).at_y(648),
        mul([lin(-1728), class(16)]),
    ));
    out.push(eq(
        "n2-fiber-j287496",
        corr(2).at_x(287496),
        mul([rec("cof2_m4"), rec("cof2_m16")]),
    ));
    out.push(eq(
        "n2-cof-m16-resultant",
        res_y(rec("cof2_m4"), rec("cof2_m16")),
        rec("ival2_m16_res"),
    ));

    // Level 3 fibers.
    out.push(eq("n3-fiber-y0", corr(3).at_y(0), var().pow(2)));
    out.push(eq("n3-fiber-y108", corr(3).at_y(108), class(12).pow(2)));
    out.push(eq(
        "n3-fiber-j0",
        corr(3).at_x(0),
        mul([var(), rec("cof3_m3").pow(3)]),
    ));
    out.push(eq(
        "n3-fiber-j54000",
        corr(3).at_x(54000),
        mul([lin(-108), rec("cof3_m12")]),
    ));
    out.push(eq(
        "n3-fiber-j8000",
        corr(3).at_x(8000),
        mul([lin(-8).pow(2), rec("cof3_m8")]),
    ));
    out.push(eq("n3-fiber-y8", corr(3).at_y(8), class(8).pow(2)));
    out.push(eq(
        "n3-fiber-jm32768",
        corr(3).at_x(-32768),
        mul([lin(-64).pow(2), rec("cof3_m11")]),
    ));
    out.push(eq("n3-fiber-y64", corr(3).at_y(64), class(11).pow(2)));
    out.push(eq(
        "n3-fiber-ym192",
        corr(3).at_y(-192),
        mul([var(), class(27)]),
    ));
    out.push(eq(
        "n3-fiber-jm12288000",
        corr(3).at_x(-12288000),
        mul([rec("cof3_m3"), rec("cof3_m27")]),
    ));
    out.push(eq(
        "n3-cof-m27-resultant",
        res_y(rec("cof3_m3"), rec("cof3_m27")),
        rec("ival3_m27_res"),
    ));
    out.push(eq(
        "n3-fiber-j1728",
        corr(3).at_x(1728),
        rec("cof3_m4").pow(2),
    ));
    out.push(eq(
        "n3-class36-from-fiber",
        res_y(corr(3), rec("cof3_m4")),
        mul([lin(-1728).pow(2), class(36)]),
    ));
    out.push(eq(
        "n3-class36-fiber",
        res_x(class(36), corr(3)),
        mul([rec("cof3_m4"), rec("cof3_m36")]),
    ));
    out.push(eq(
        "n3-cof-m36-resultant",
        res_y(rec("cof3_m4"), rec("cof3_m36")),
        rec("ival3_m36_res"),
    ));

    // Parametrizations and curve pairs.
    for n in [2u64, 3, 5, 7] {
        let on_curve = match n {
            2 => "n2-param-on-curve",
            3 => "n3-param-on-curve",
            5 => "n5-param-on-curve",
            _ => "n7-param-on-curve",
        };
        let sheets = match n {
            2 => "n2-two-sheets",
            3 => "n3-two-sheets",
            5 => "n5-two-sheets",
            _ => "n7-two-sheets",
        };
        let (jd, ji) = match n {
            2 => ("n2-j-domain", "n2-j-image"),
            3 => ("n3-j-domain", "n3-j-image"),
            5 => ("n5-j-domain", "n5-j-image"),
            _ => ("n7-j-domain", "n7-j-image"),
        };
        out.push(structural(on_curve, Check::ParamOnCurve(n)));
        out.push(structural(sheets, Check::TwoSheets(n)));
        out.push(structural(jd, Check::JForm(n, Side::Dom)));
        out.push(structural(ji, Check::JForm(n, Side::Img)));
    }
    out.push(structural("n7-sheet-domain", Check::SheetMatch(Side::Dom)));
    out.push(structural("n7-sheet-image", Check::SheetMatch(Side::Img)));
    out.push(structural("n2-point-map", Check::PointMap(2)));
    out.push(structural("n7-point-map", Check::PointMap(7)));

    // Class polynomial pipelines through the fifth-power relation.
    out.push(pipe(
        "quartic-level5-resultant",
        res_x(rec("rr_quartic"), rec("rr_level5")),
        rec("rr_f5"),
    ));
    out.push(pipe(
        "quartic-level7-resultant",
        res_x(rec("rr_quartic"), rec("rr_level7")),
        rec("rr_f196"),
    ));
    out.push(pipe(
        "f5-class100-power",
        res_x(rec("rr_f5"), rec("rr_j_rel")),
        mul([lit(5).pow(300), class(100).pow(10)]),
    ));
    out.push(pipe(
        "f196-class196-power",
        res_x(rec("rr_f196"), rec("rr_j_rel")),
        mul([lit(5).pow(480), class(196).pow(8)]),
    ));
    out.push(pipe(
        "p196-class196-power",
        res_x(rec("rr_p196"), rec("rr_j_rel")),
        mul([lit(5).pow(120), class(196).pow(4)]),
    ));

    out
}

/// Run one catalog entry against a data set.
pub fn run_entry(ds: &DataSet, entry: &NamedIdentity) -> IdentityOutcome {
    let (pass, witness, coeffs) = match &entry.check {
        Check::Eq(l, r) => {
            let lv = lower(eval_expr(ds, l));
            let rv = lower(eval_expr(ds, r));
            let coeffs = coeff_strings(&lv);
            match value_witness(&lv, &rv) {
                None => (true, None, coeffs),
                Some(w) => (false, Some(w), coeffs),
            }
        }
        Check::Neq(l, r) => {
            let lv = lower(eval_expr(ds, l));
            let rv = lower(eval_expr(ds, r));
            let coeffs = coeff_strings(&lv);
            match value_witness(&lv, &rv) {
                Some(_) => (true, None, coeffs),
                None => {
                    let w = Witness {
                        index: 0,
                        expected: "two distinct values".into(),
                        actual: "both sides agree".into(),
                    };
                    (false, Some(w), coeffs)
                }
            }
        }
        Check::ParamOnCurve(n) => param_on_curve(ds, *n),
        Check::TwoSheets(n) => two_sheets(ds, *n),
        Check::JForm(n, side) => j_form(ds, *n, *side),
        Check::SheetMatch(side) => sheet_match(ds, *side),
        Check::PointMap(n) => point_map(ds, *n),
    };
    IdentityOutcome {
        id: entry.id,
        group: entry.group,
        pass,
        witness,
        coeffs,
    }
}

/// Run the whole catalog.
pub fn run_all(ds: &DataSet) -> Vec<IdentityOutcome> {
    catalog().iter().map(|e| run_entry(ds, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::data;
    use std::collections::BTreeSet;

    fn collect_recs(e: &Expr, names: &mut BTreeSet<&'static str>) {
        match e {
            Expr::Rec(name) => {
                names.insert(name);
            }
            Expr::Neg(a)
            | Expr::Pow(a, _)
            | Expr::SubstX(a, _)
            | Expr::SubstY(a, _)
            | Expr::Disc(a)
            | Expr::DiscX(a)
            | Expr::DiscY(a)
            | Expr::Eval(a, _)
            | Expr::Transpose(a) => collect_recs(a, names),
            Expr::ResX(a, b) | Expr::ResY(a, b) => {
                collect_recs(a, names);
                collect_recs(b, names);
            }
            Expr::Mul(parts) => {
                for p in parts {
                    collect_recs(p, names);
                }
            }
            Expr::Corr(_) | Expr::Class(_) | Expr::Lit(_) | Expr::Var | Expr::Lin(_) => {}
        }
    }

    #[test]
    fn catalog_is_well_formed_and_covers_stored_values() {
        let ds = data();
        let cat = catalog();
        let ids: BTreeSet<&str> = cat.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), cat.len(), "catalog ids must be unique");
        assert!(cat.len() >= 110);

        let mut referenced = BTreeSet::new();
        for entry in &cat {
            if let Check::Eq(l, r) | Check::Neq(l, r) = &entry.check {
                collect_recs(l, &mut referenced);
                collect_recs(r, &mut referenced);
            }
        }
        for name in ds.names() {
            let expects_value = name.starts_with("ival")
                || name.starts_with("cof")
                || name.starts_with("fix")
                || name.starts_with("rr_");
            if expects_value && name != "rr_j_rel" {
                assert!(
                    referenced.iter().any(|r| *r == name),
                    "stored value {name} is not covered by the catalog"
                );
            }
        }
    }

    #[test]
    fn full_catalog_passes() {
        let outcomes = run_all(data());
        let failures: Vec<String> = outcomes
            .iter()
            .filter(|o| !o.pass)
            .map(|o| format!("{}: {:?}", o.id, o.witness))
            .collect();
        assert!(failures.is_empty(), "failing identities: {failures:?}");
    }

    #[test]
    fn witness_reports_first_difference() {
        let bad = NamedIdentity {
            id: "test-mismatch",
            group: "identity",
            check: Check::Eq(lin(1).pow(2), rec("cof7_m3")),
        };
        let out = run_entry(data(), &bad);
        assert!(!out.pass);
        let w = out.witness.expect("mismatch must produce a witness");
        assert_eq!(w.index, 0);
        assert_eq!(w.expected, "448");
        assert_eq!(w.actual, "1");
        assert_eq!(out.coeffs, vec!["1", "2", "1"]);
    }

    #[test]
    fn distinctness_check_needs_disagreement() {
        let flipped = NamedIdentity {
            id: "test-agreeing-neq",
            group: "identity",
            check: Check::Neq(rec("ival7_m147_res"), rec("ival7_m147_res")),
        };
        let out = run_entry(data(), &flipped);
        assert!(!out.pass);
        assert!(out.witness.is_some());
    }
}
