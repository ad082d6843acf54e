//! Embedded exact integer data: correspondence polynomials, class polynomials,
//! ramification cofactors, parametrizations, curve pairs, and isogeny maps.
//!
//! The data file is a line-oriented record format `name : variables : payload`.
//! Empty variables mean an integer (decimal or factored `p1^e1*p2^e2`, optional
//! leading minus). A single variable means dense ascending coefficients. Two
//! variables mean rows by first-variable degree, `' ; '`-separated, each row
//! ascending in the second variable. The variable pair `w,<param>` marks a
//! five-row Weierstrass coefficient vector a1;a2;a3;a4;a6. The variable `set`
//! marks a list of primes.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::BiIntPoly;
use crate::intpoly::IntPoly;
use crate::{Error, Result};

const RAW: &str = include_str!("../data/constants.txt");

/// One parsed record from the data file.
#[derive(Clone, Debug, PartialEq)]
pub enum Record {
    Int(BigInt),
    Poly(IntPoly),
    Grid(BiIntPoly),
    Curve([IntPoly; 5]),
    Set(Vec<u64>),
}

fn parse_int(text: &str, line: &str) -> Result<BigInt> {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let mut value = if body.contains('*') || body.contains('^') {
        let mut acc = BigInt::one();
        for tok in body.split('*') {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let base: BigInt = base
                .parse()
                .map_err(|_| Error::Data(format!("bad factored integer {tok:?} in {line:?}")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Data(format!("bad exponent in {tok:?} in {line:?}")))?;
            acc *= base.pow(exp);
        }
        acc
    } else {
        body.parse()
            .map_err(|_| Error::Data(format!("bad integer {text:?} in {line:?}")))?
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

fn parse_poly(text: &str, line: &str) -> Result<IntPoly> {
    let mut coeffs = Vec::new();
    for tok in text.split_whitespace() {
        coeffs.push(
            tok.parse::<BigInt>()
                .map_err(|_| Error::Data(format!("bad coefficient {tok:?} in {line:?}")))?,
        );
    }
    if coeffs.is_empty() {
        return Err(Error::Data(format!("empty polynomial payload in {line:?}")));
    }
    Ok(IntPoly::new(coeffs))
}

fn parse_rows(text: &str, line: &str) -> Result<Vec<IntPoly>> {
    text.split(" ; ").map(|row| parse_poly(row, line)).collect()
}

/// Parse the record text into a name-keyed map. Exposed for format tests.
pub fn parse_records(text: &str) -> Result<BTreeMap<String, Record>> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(3, ':');
        let name = parts
            .next()
            .ok_or_else(|| Error::Data(format!("missing name in {line:?}")))?
            .trim();
        let vars = parts
            .next()
            .ok_or_else(|| Error::Data(format!("missing variables in {line:?}")))?
            .trim();
        let payload = parts
            .next()
            .ok_or_else(|| Error::Data(format!("missing payload in {line:?}")))?
            .trim();
        if name.is_empty() {
            return Err(Error::Data(format!("empty record name in {line:?}")));
        }
        let rec = if vars.is_empty() {
            Record::Int(parse_int(payload, line)?)
        } else if vars == "set" {
            let mut set = Vec::new();
            for tok in payload.split_whitespace() {
                set.push(
                    tok.parse::<u64>()
                        .map_err(|_| Error::Data(format!("bad set entry {tok:?} in {line:?}")))?,
                );
            }
            Record::Set(set)
        } else if let Some((first, _)) = vars.split_once(',') {
            let rows = parse_rows(payload, line)?;
            if first == "w" {
                let rows: [IntPoly; 5] = rows
                    .try_into()
                    .map_err(|_| Error::Data(format!("curve record needs 5 rows in {line:?}")))?;
                Record::Curve(rows)
            } else {
                Record::Grid(BiIntPoly::new(rows))
            }
        } else {
            Record::Poly(parse_poly(payload, line)?)
        };
        if out.insert(name.to_string(), rec).is_some() {
            return Err(Error::Data(format!("duplicate record name {name:?}")));
        }
    }
    Ok(out)
}

/// Character exponent selector for the congruence side factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharSelector {
    /// delta = (1 - (-3/p)) / 2
    Delta,
    /// 2 * delta
    TwoDelta,
    /// eps = (1 - (-4/p)) / 2
    Eps,
    /// mu = (1 - (-N/p)) / 2 for the level N
    Mu,
}

impl CharSelector {
    /// Exponent value given the three character bits.
    pub fn exponent(self, delta: u32, eps: u32, mu: u32) -> u32 {
        match self {
            CharSelector::Delta => delta,
            CharSelector::TwoDelta => 2 * delta,
            CharSelector::Eps => eps,
            CharSelector::Mu => mu,
        }
    }
}

/// Rational isogeny map on the domain curve: u = u_num/u_den and
/// v = (v_y0 + v_y1*y)/v_den, grids parameter-major with x ascending per row.
#[derive(Clone, Debug)]
pub struct IsogenyMap {
    pub u_num: BiIntPoly,
    pub u_den: BiIntPoly,
    pub v_y0: BiIntPoly,
    pub v_y1: BiIntPoly,
    pub v_den: BiIntPoly,
}

/// Genus-0 parametrization fractions in the uniformizer z.
#[derive(Clone, Debug)]
pub struct ParamData {
    pub x_num: IntPoly,
    pub x_den: IntPoly,
    pub y_num: IntPoly,
    pub y_den: IntPoly,
    pub x2_num: IntPoly,
    pub x2_den: IntPoly,
}

/// Printed j-invariant fractions of the level-7 curve pair in its parameter.
#[derive(Clone, Debug)]
pub struct JForms {
    pub dom_num: IntPoly,
    pub dom_den: IntPoly,
    pub img_num: IntPoly,
    pub img_den: IntPoly,
}

/// Everything needed to work at one Fricke level.
#[derive(Clone, Debug)]
pub struct FrickeLevelData {
    pub n: u8,
    /// Correspondence polynomial, rows by X-degree, each ascending in Y.
    pub corr: BiIntPoly,
    /// Left congruence factors with their character exponents.
    pub a_side: Vec<(IntPoly, CharSelector)>,
    /// Right congruence factors with their character exponents.
    pub b_side: Vec<(IntPoly, CharSelector)>,
    /// Primes whose congruence needs a direct check rather than the generic argument.
    pub excluded: Vec<u64>,
    /// Parametrization fractions in z.
    pub par: ParamData,
    /// Degenerate parameter values: roots of this polynomial in the curve parameter.
    pub locus: IntPoly,
    /// Domain and image Weierstrass coefficients in the curve parameter.
    pub curve_dom: [IntPoly; 5],
    pub curve_img: [IntPoly; 5],
    /// Fraction expressing z in the curve parameter; None means z is the parameter.
    pub z_of_param: Option<(IntPoly, IntPoly)>,
    /// True when x(z(param)) is the image j-invariant rather than the domain one.
    pub sheets_swapped: bool,
    /// Printed j fractions in the curve parameter (level 7 only).
    pub j_forms: Option<JForms>,
    /// Explicit point map (levels 2 and 7).
    pub iso: Option<IsogenyMap>,
}

/// Parsed data file plus the assembled per-level bundles.
pub struct DataSet {
    recs: BTreeMap<String, Record>,
    levels: BTreeMap<u8, FrickeLevelData>,
}

impl DataSet {
    fn rec(&self, name: &str) -> &Record {
        self.recs
            .get(name)
            .unwrap_or_else(|| panic!("missing data record {name:?}"))
    }

    /// Look up a record of any kind; panics on a missing name.
    pub fn record(&self, name: &str) -> &Record {
        self.rec(name)
    }

    pub fn int(&self, name: &str) -> &BigInt {
        match self.rec(name) {
            Record::Int(v) => v,
            other => panic!("record {name:?} is not an integer: {other:?}"),
        }
    }

    pub fn poly(&self, name: &str) -> &IntPoly {
        match self.rec(name) {
            Record::Poly(v) => v,
            other => panic!("record {name:?} is not a polynomial: {other:?}"),
        }
    }

    pub fn grid(&self, name: &str) -> &BiIntPoly {
        match self.rec(name) {
            Record::Grid(v) => v,
            other => panic!("record {name:?} is not a grid: {other:?}"),
        }
    }

    pub fn curve(&self, name: &str) -> &[IntPoly; 5] {
        match self.rec(name) {
            Record::Curve(v) => v,
            other => panic!("record {name:?} is not a curve: {other:?}"),
        }
    }

    pub fn set(&self, name: &str) -> &[u64] {
        match self.rec(name) {
            Record::Set(v) => v,
            other => panic!("record {name:?} is not a set: {other:?}"),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.recs.keys().map(|s| s.as_str())
    }

    /// Correspondence polynomial for level n in {2, 3, 5, 7}.
    pub fn corr(&self, n: u64) -> &BiIntPoly {
        self.grid(&format!("corr{n}"))
    }

    /// Class polynomial for discriminant -d, d positive.
    pub fn class_poly(&self, d: u64) -> &IntPoly {
        self.poly(&format!("class_m{d}"))
    }

    /// Discriminant magnitudes with a stored class polynomial, ascending.
    pub fn class_discs(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .recs
            .keys()
            .filter_map(|k| k.strip_prefix("class_m"))
            .filter_map(|d| d.parse().ok())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn level(&self, n: u64) -> Result<&FrickeLevelData> {
        u8::try_from(n)
            .ok()
            .and_then(|k| self.levels.get(&k))
            .ok_or(Error::BadLevel(n))
    }

    pub fn new(text: &str) -> Result<DataSet> {
        let recs = parse_records(text)?;
        let mut ds = DataSet {
            recs,
            levels: BTreeMap::new(),
        };
        for n in [2u8, 3, 5, 7] {
            let level = ds.build_level(n);
            ds.levels.insert(n, level);
        }
        Ok(ds)
    }

    fn build_level(&self, n: u8) -> FrickeLevelData {
        let y = IntPoly::from_i64(&[0, 1]);
        let (a_side, b_side): (Vec<(IntPoly, CharSelector)>, Vec<(IntPoly, CharSelector)>) =
            match n {
                2 => (
                    vec![
                        (y.clone(), CharSelector::Eps),
                        (IntPoly::from_i64(&[-256, 1]), CharSelector::Mu),
                    ],
                    vec![
                        (self.poly("cof2_m3").clone(), CharSelector::TwoDelta),
                        (self.poly("cof2_m4").clone(), CharSelector::Eps),
                    ],
                ),
                3 => (
                    vec![
                        (y.clone(), CharSelector::Delta),
                        (IntPoly::from_i64(&[-108, 1]), CharSelector::Delta),
                    ],
                    vec![
                        (self.poly("cof3_m3").clone(), CharSelector::TwoDelta),
                        (self.poly("cof3_m4").clone(), CharSelector::Eps),
                    ],
                ),
                5 => (
                    vec![(self.poly("fix5_m20").clone(), CharSelector::Mu)],
                    vec![
                        (self.poly("cof5_m3").clone(), CharSelector::TwoDelta),
                        (self.poly("cof5_m4").clone(), CharSelector::Eps),
                    ],
                ),
                7 => (
                    // (Y + 1)(Y - 27) expanded
                    vec![(IntPoly::from_i64(&[-27, -26, 1]), CharSelector::Mu)],
                    vec![
                        (self.poly("cof7_m3").clone(), CharSelector::TwoDelta),
                        (self.poly("cof7_m4").clone(), CharSelector::Eps),
                    ],
                ),
                _ => unreachable!("levels are 2, 3, 5, 7"),
            };
        let par = ParamData {
            x_num: self.poly(&format!("par{n}_x_num")).clone(),
            x_den: self.poly(&format!("par{n}_x_den")).clone(),
            y_num: self.poly(&format!("par{n}_y_num")).clone(),
            y_den: self.poly(&format!("par{n}_y_den")).clone(),
            x2_num: self.poly(&format!("par{n}_x2_num")).clone(),
            x2_den: self.poly(&format!("par{n}_x2_den")).clone(),
        };
        let z_of_param = match n {
            // z = (b^2 - 1) / b relates the curve parameter b to the uniformizer
            5 => Some((IntPoly::from_i64(&[-1, 0, 1]), IntPoly::from_i64(&[0, 1]))),
            7 => Some((
                self.poly("z_of_d_num").clone(),
                self.poly("z_of_d_den").clone(),
            )),
            _ => None,
        };
        let j_forms = (n == 7).then(|| JForms {
            dom_num: self.poly("j7_dom_num").clone(),
            dom_den: self.poly("j7_dom_den").clone(),
            img_num: self.poly("j7_img_num").clone(),
            img_den: self.poly("j7_img_den").clone(),
        });
        let iso = match n {
            2 => Some(IsogenyMap {
                u_num: self.grid("iso2_u_num").clone(),
                u_den: BiIntPoly::from_poly_y(self.poly("iso2_u_den")),
                v_y0: BiIntPoly::zero(),
                v_y1: self.grid("iso2_v_y1").clone(),
                v_den: BiIntPoly::from_poly_y(self.poly("iso2_v_den")),
            }),
            // stored x-major; normalize to parameter-major rows
            7 => Some(IsogenyMap {
                u_num: self.grid("iso7_u_num").transpose(),
                u_den: self.grid("iso7_u_den").transpose(),
                v_y0: self.grid("iso7_v_y0").transpose(),
                v_y1: self.grid("iso7_v_y1").transpose(),
                v_den: self.grid("iso7_v_den").transpose(),
            }),
            _ => None,
        };
        FrickeLevelData {
            n,
            corr: self.corr(n.into()).clone(),
            a_side,
            b_side,
            excluded: self.set(&format!("excl{n}")).to_vec(),
            par,
            locus: self.poly(&format!("locus{n}")).clone(),
            curve_dom: self.curve(&format!("curve{n}_dom")).clone(),
            curve_img: self.curve(&format!("curve{n}_img")).clone(),
            z_of_param,
            sheets_swapped: n == 7,
            j_forms,
            iso,
        }
    }
}

/// The embedded data set, parsed once.
pub fn data() -> &'static DataSet {
    static DATA: OnceLock<DataSet> = OnceLock::new();
    DATA.get_or_init(|| DataSet::new(RAW).expect("embedded data file is well formed"))
}

/// Compose a fraction num/den with an inner fraction zn/zd, clearing by
/// zd^D with D = max(deg num, deg den). Returns the cleared (num, den) pair
/// representing num(zn/zd)/den(zn/zd).
pub fn compose_fraction(
    num: &IntPoly,
    den: &IntPoly,
    zn: &IntPoly,
    zd: &IntPoly,
) -> (IntPoly, IntPoly) {
    let d = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
    let clear = |f: &IntPoly| {
        let mut acc = IntPoly::zero();
        for i in 0..=d {
            let c = f.coeff(i);
            if c.is_zero() {
                continue;
            }
            let term = zn.pow(i).mul(&zd.pow(d - i));
            acc = acc.add(&term.mul_scalar(&c));
        }
        acc
    };
    (clear(num), clear(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_embedded_file() {
        let ds = data();
        assert_eq!(ds.class_discs().len(), 15);
        assert_eq!(
            *ds.class_poly(7),
            IntPoly::from_i64(&[3375, 1]),
            "smallest class polynomial"
        );
        // corr2 = X^2 - X(Y^2 - 207Y + 3456) + (Y + 144)^3
        let c2 = ds.corr(2);
        assert_eq!(c2.deg_x(), 2);
        assert_eq!(c2.deg_y(), 3);
        assert_eq!(c2.row(1), IntPoly::from_i64(&[-3456, 207, -1]));
        assert_eq!(ds.set("excl2"), &[2, 3, 5, 7, 11]);
        assert_eq!(ds.set("excl7").len(), 35);
        assert_eq!(ds.int("ival7_m3_at0"), &BigInt::from(448));
        assert_eq!(ds.int("ival5_m4_at0"), &BigInt::from(-6480));
    }

    #[test]
    fn level_bundles_are_consistent() {
        let ds = data();
        for n in [2u64, 3, 5, 7] {
            let lv = ds.level(n).unwrap();
            assert_eq!(lv.corr.deg_x(), 2);
            assert!(lv.excluded.contains(&2));
            assert_eq!(lv.curve_dom.len(), 5);
            // the locus vanishes nowhere we evaluate: nonzero polynomial
            assert!(lv.locus.degree().is_some());
        }
        assert!(ds.level(2).unwrap().iso.is_some());
        assert!(ds.level(3).unwrap().iso.is_none());
        assert!(ds.level(7).unwrap().j_forms.is_some());
        assert!(ds.level(4).is_err());
        // iso7 grids are parameter-major after the load transpose
        let iso = ds.level(7).unwrap().iso.clone().unwrap();
        assert_eq!(iso.u_num.deg_y(), 7, "u numerator has x-degree 7");
        assert_eq!(iso.u_den.deg_y(), 6, "u denominator has x-degree 6");
    }

    #[test]
    fn parser_rejects_malformed_records() {
        assert!(parse_records("name only line").is_err());
        assert!(parse_records("f : X : 1 two 3").is_err());
        assert!(parse_records("v :  : 2^x*3").is_err());
        assert!(parse_records("s : set : 5 -7").is_err());
        assert!(parse_records("c : w,z : 1 ; 2").is_err());
        assert!(parse_records("a : X : 1 2\na : X : 1 2").is_err());
        let ok = parse_records("a : X : 3 1\nb :  : -2^3*5\n# comment\n\nc : set : 2 3").unwrap();
        assert_eq!(ok.len(), 3);
        assert_eq!(ok["b"], Record::Int(BigInt::from(-40)));
    }

    #[test]
    fn fraction_composition_clears_uniformly() {
        // (z^2 + 1)/z at z = (b^2 - 1)/b: cleared by b^2
        let num = IntPoly::from_i64(&[1, 0, 1]);
        let den = IntPoly::from_i64(&[0, 1]);
        let zn = IntPoly::from_i64(&[-1, 0, 1]);
        let zd = IntPoly::from_i64(&[0, 1]);
        let (cn, cd) = compose_fraction(&num, &den, &zn, &zd);
        // num part: (b^2-1)^2 + b^2, den part: b(b^2-1)
        assert_eq!(cn, IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cd, IntPoly::from_i64(&[0, -1, 0, 1]));
    }
}
