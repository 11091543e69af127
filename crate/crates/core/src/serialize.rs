//! JSON and LaTeX forms of symmetric functions, expansions and polynomials.
//!
//! A coefficient in `ℚ[β]` is written as `[[beta_exp, numerator, denominator], …]`.
//! Integers that do not fit in 64 bits are written as decimal strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::beta::BetaPoly;
use crate::error::{Error, Result};
use crate::noncomm::{Basis, Expansion, SkewSum};
use crate::oracle::MultiPoly;
use crate::partition::{Partition, SkewShape};
use crate::symfunc::SymFunc;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn from_big(n: &BigInt) -> Self {
        n.to_i64().map(Int::Small).unwrap_or_else(|| Int::Big(n.to_string()))
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            Int::Small(n) => Ok(BigInt::from(*n)),
            Int::Big(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        }
    }
}

type Coeff = Vec<(usize, Int, Int)>;

fn coeff_out(c: &BetaPoly) -> Coeff {
    c.terms().map(|(e, q)| (e, Int::from_big(q.numer()), Int::from_big(q.denom()))).collect()
}

fn coeff_in(c: &Coeff) -> Result<BetaPoly> {
    let mut out = BetaPoly::zero();
    for (e, n, d) in c {
        let d = d.to_big()?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        out += &BetaPoly::monomial(BigRational::new(n.to_big()?, d), *e);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    outer: Partition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
struct SkewTerm {
    outer: Partition,
    inner: Partition,
    coeff: Coeff,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    basis: String,
    validity_mod: Option<usize>,
    terms: Vec<SkewTerm>,
}

#[derive(Serialize, Deserialize)]
struct PolyTerm {
    exps: Vec<u32>,
    coeff: Coeff,
}

fn to_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn symfunc_to_json(f: &SymFunc) -> String {
    let terms: Vec<SchurTerm> =
        f.terms().iter().map(|(nu, c)| SchurTerm { outer: nu.clone(), coeff: coeff_out(c) }).collect();
    to_string(&terms)
}

/// The JSON form carries no degree bound, so the caller supplies it.
pub fn symfunc_from_json(s: &str, degree_bound: usize) -> Result<SymFunc> {
    let terms: Vec<SchurTerm> = from_str(s)?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        pairs.push((t.outer, coeff_in(&t.coeff)?));
    }
    Ok(SymFunc::from_terms(pairs, degree_bound))
}

pub fn expansion_to_json(e: &Expansion) -> String {
    let terms = e
        .terms
        .terms()
        .iter()
        .map(|(s, c)| SkewTerm { outer: s.outer().clone(), inner: s.inner().clone(), coeff: coeff_out(c) })
        .collect();
    to_string(&ExpansionJson { basis: e.basis.tag().to_string(), validity_mod: e.validity_mod, terms })
}

pub fn expansion_from_json(s: &str) -> Result<Expansion> {
    let raw: ExpansionJson = from_str(s)?;
    let basis = match raw.basis.as_str() {
        "G//" => Basis::DoubleG,
        "G/" => Basis::SingleG,
        "g" => Basis::Dual,
        other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
    };
    let mut terms = SkewSum::zero();
    for t in raw.terms {
        terms.add_term(SkewShape::new(t.outer, t.inner)?, &coeff_in(&t.coeff)?);
    }
    Ok(Expansion { basis, validity_mod: raw.validity_mod, terms })
}

pub fn multipoly_to_json(p: &MultiPoly) -> String {
    let terms: Vec<PolyTerm> = p.terms().map(|(e, c)| PolyTerm { exps: e.to_vec(), coeff: coeff_out(c) }).collect();
    to_string(&terms)
}

/// An empty list is the zero polynomial in `nvars` variables.
pub fn multipoly_from_json(s: &str, nvars: usize) -> Result<MultiPoly> {
    let terms: Vec<PolyTerm> = from_str(s)?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        pairs.push((t.exps, coeff_in(&t.coeff)?));
    }
    MultiPoly::from_terms(nvars, pairs)
}

fn rational_latex(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn beta_power_latex(e: usize) -> String {
    match e {
        0 => String::new(),
        1 => "\\beta".into(),
        _ => format!("\\beta^{{{e}}}"),
    }
}

/// Renders `c` as a signed prefix for a basis element: `(sign, body)` where
/// `body` is empty for a unit coefficient.
fn coeff_latex(c: &BetaPoly) -> (bool, String) {
    if let Some(e) = c.monomial_exponent() {
        let q = c.coeff(e);
        let neg = q.is_negative();
        let a = q.abs();
        let num = if a.is_one() { String::new() } else { rational_latex(&a) };
        return (neg, format!("{num}{}", beta_power_latex(e)));
    }
    let mut body = String::new();
    for (k, (e, q)) in c.terms().enumerate() {
        let sign = if q.is_negative() {
            "-"
        } else if k > 0 {
            "+"
        } else {
            ""
        };
        let a = q.abs();
        let num = if a.is_one() && e > 0 { String::new() } else { rational_latex(&a) };
        let _ = write!(body, "{}{sign}{num}{}", if k > 0 { " " } else { "" }, beta_power_latex(e));
    }
    (false, format!("({body})"))
}

fn join_latex<I: IntoIterator<Item = (BetaPoly, String)>>(items: I) -> String {
    let mut out = String::new();
    for (c, sym) in items {
        let (neg, body) = coeff_latex(&c);
        let unit = body.is_empty();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
        if sym.is_empty() && unit {
            out.push('1');
        } else if !sym.is_empty() {
            if !unit {
                out.push(' ');
            }
            out.push_str(&sym);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn partition_latex(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".into()
    } else {
        format!("({p})")
    }
}

pub fn symfunc_latex(f: &SymFunc) -> String {
    join_latex(f.terms().iter().map(|(nu, c)| {
        let sym = if nu.is_empty() { String::new() } else { format!("s_{{{}}}", partition_latex(nu)) };
        (c.clone(), sym)
    }))
}

fn skew_latex(basis: Basis, shape: &SkewShape) -> String {
    let (o, i) = (shape.outer(), shape.inner());
    let (letter, sep) = match basis {
        Basis::DoubleG => ("G", "\\backslash\\!\\backslash"),
        Basis::SingleG => ("G", "/"),
        Basis::Dual => ("g", "/"),
    };
    if i.is_empty() {
        format!("{letter}_{{{}}}", partition_latex(o))
    } else {
        format!("{letter}_{{{}{sep}{}}}", partition_latex(o), partition_latex(i))
    }
}

pub fn expansion_latex(e: &Expansion) -> String {
    let body = join_latex(e.terms.terms().iter().map(|(s, c)| (c.clone(), skew_latex(e.basis, s))));
    match e.validity_mod {
        Some(n) => format!("{body} \\pmod{{I_{{{n}}}}}"),
        None => body,
    }
}
