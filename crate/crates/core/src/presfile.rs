//! The plain-text presentation format.
//!
//! ```text
//! # comments run to end of line
//! n = 4
//! minpoly a = a^2 - a + 1
//! a[1,2] = 1
//! a[2,4] = -a^2
//! ```
//!
//! Skew files use `p[i,j] = <scalar>` entries, or `zeta N` followed by
//! integer `e[i,j] = <int>` entries meaning `p_ij = ζ_N^{e_ij}`. Absent
//! `a` entries are 0; absent `p` entries are 1.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::Presentation;
use crate::expr::{parse, parse_scalar, Evaluator, ExprError};
use crate::scalar::{NumberField, Scalar};
use crate::skewpoly::SkewPresentation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    Range { line: usize, message: String },
    #[error("line {line}: duplicate entry for [{i},{j}]")]
    DuplicateEntry { line: usize, i: usize, j: usize },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedFile {
    Weyl(Presentation),
    Skew(SkewPresentation),
}

impl ParsedFile {
    pub fn n(&self) -> usize {
        match self {
            ParsedFile::Weyl(p) => p.n(),
            ParsedFile::Skew(s) => s.n(),
        }
    }

    pub fn has_minpoly(&self) -> bool {
        let field = match self {
            ParsedFile::Weyl(p) => p.number_field(),
            ParsedFile::Skew(s) => s.number_field(),
        };
        declares_minpoly(field)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    A,
    P,
    E,
}

struct Entry {
    line: usize,
    kind: Kind,
    i: usize,
    j: usize,
    rhs: String,
    rhs_col: usize,
}

/// Parses either file flavour.
pub fn parse_presentation(text: &str) -> Result<ParsedFile, FileError> {
    let mut n: Option<(usize, usize)> = None;
    let mut minpoly: Option<(usize, Vec<BigInt>)> = None;
    let mut zeta: Option<(usize, u32)> = None;
    let mut entries: Vec<Entry> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let lead = body.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let perr = |column: usize, message: &str| FileError::Parse {
            line,
            column: column + 1,
            message: message.to_string(),
        };
        if let Some(rest) = trimmed.strip_prefix("zeta") {
            let value: u32 = rest
                .trim()
                .parse()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| perr(lead + 4, "expected a positive integer order"))?;
            if zeta.replace((line, value)).is_some() {
                return Err(perr(lead, "zeta declared twice"));
            }
            continue;
        }
        let Some(eq) = trimmed.find('=') else {
            return Err(perr(lead, "expected `key = value`"));
        };
        let key = trimmed[..eq].trim();
        let rhs = trimmed[eq + 1..].trim();
        let rhs_col = lead + eq + 1 + (trimmed[eq + 1..].len() - trimmed[eq + 1..].trim_start().len());
        if rhs.is_empty() {
            return Err(perr(rhs_col, "missing value"));
        }
        match key {
            "n" => {
                let v: usize = rhs.parse().map_err(|_| perr(rhs_col, "expected an integer"))?;
                if v == 0 {
                    return Err(FileError::Range {
                        line,
                        message: "n must be positive".into(),
                    });
                }
                if n.replace((line, v)).is_some() {
                    return Err(perr(lead, "n declared twice"));
                }
            }
            "minpoly a" => {
                let coeffs = parse_minpoly(rhs).map_err(|e| match e {
                    ExprError::Syntax { column, message } => perr(rhs_col + column - 1, &message),
                    other => perr(rhs_col, &other.to_string()),
                })?;
                if minpoly.replace((line, coeffs)).is_some() {
                    return Err(perr(lead, "minpoly declared twice"));
                }
            }
            _ => {
                let (kind, inner) = match key.as_bytes().first() {
                    Some(b'a') => (Kind::A, &key[1..]),
                    Some(b'p') => (Kind::P, &key[1..]),
                    Some(b'e') => (Kind::E, &key[1..]),
                    _ => return Err(perr(lead, &format!("unknown key `{key}`"))),
                };
                let inner = inner.trim();
                let idx = inner
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| perr(lead + 1, "expected [i,j]"))?;
                let mut parts = idx.split(',').map(|s| s.trim().parse::<usize>());
                let (Some(Ok(i)), Some(Ok(j)), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(perr(lead + 1, "expected [i,j] with integer indices"));
                };
                entries.push(Entry {
                    line,
                    kind,
                    i,
                    j,
                    rhs: rhs.to_string(),
                    rhs_col,
                });
            }
        }
    }

    let (_, n) = n.ok_or_else(|| FileError::Invalid("missing `n = ...` line".into()))?;
    let field = match &minpoly {
        Some((line, coeffs)) => Arc::new(
            NumberField::new(coeffs.clone()).map_err(|e| FileError::Range {
                line: *line,
                message: e.to_string(),
            })?,
        ),
        None => Arc::new(NumberField::rationals()),
    };
    let has_minpoly = minpoly.is_some();
    let kinds: Vec<Kind> = entries.iter().map(|e| e.kind).collect();
    let skew = zeta.is_some() || kinds.iter().any(|&k| k != Kind::A);
    if skew && kinds.contains(&Kind::A) {
        return Err(FileError::Invalid("a[i,j] entries cannot be mixed with skew entries".into()));
    }
    if zeta.is_some() && kinds.contains(&Kind::P) {
        return Err(FileError::Invalid("use e[i,j] entries with zeta, not p[i,j]".into()));
    }
    if zeta.is_none() && kinds.contains(&Kind::E) {
        return Err(FileError::Invalid("e[i,j] entries need a `zeta N` line".into()));
    }

    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in &entries {
        if e.i == 0 || e.j > n || e.i >= e.j {
            return Err(FileError::Range {
                line: e.line,
                message: format!("[{},{}] needs 1 <= i < j <= {n}", e.i, e.j),
            });
        }
        if seen.insert((e.i, e.j), e.line).is_some() {
            return Err(FileError::DuplicateEntry {
                line: e.line,
                i: e.i,
                j: e.j,
            });
        }
    }
    let scalar = |e: &Entry| -> Result<Scalar, FileError> {
        parse_scalar(&e.rhs, has_minpoly.then_some(&field)).map_err(|err| match err {
            ExprError::Syntax { column, message } => FileError::Parse {
                line: e.line,
                column: e.rhs_col + column,
                message,
            },
            other => FileError::Parse {
                line: e.line,
                column: e.rhs_col + 1,
                message: other.to_string(),
            },
        })
    };

    if let Some((zline, order)) = zeta {
        if has_minpoly {
            return Err(FileError::Invalid("zeta files define their own field; drop minpoly".into()));
        }
        let mut ints = Vec::new();
        for e in &entries {
            let v: i64 = e.rhs.parse().map_err(|_| FileError::Parse {
                line: e.line,
                column: e.rhs_col + 1,
                message: "expected an integer exponent".into(),
            })?;
            ints.push((e.i, e.j, v));
        }
        let sp = SkewPresentation::from_roots(n, order, &ints).map_err(|err| FileError::Range {
            line: zline,
            message: err.to_string(),
        })?;
        return Ok(ParsedFile::Skew(sp));
    }
    let mut values = Vec::new();
    for e in &entries {
        values.push((e.i, e.j, scalar(e)?));
    }
    if skew {
        let sp = SkewPresentation::from_upper(n, field, &values)
            .map_err(|err| FileError::Invalid(err.to_string()))?;
        Ok(ParsedFile::Skew(sp))
    } else {
        let p = Presentation::from_upper(n, field, &values)
            .map_err(|err| FileError::Invalid(err.to_string()))?;
        Ok(ParsedFile::Weyl(p))
    }
}

/// Parses a file that must describe a `V_n(A)` presentation.
pub fn parse_weyl(text: &str) -> Result<Presentation, FileError> {
    match parse_presentation(text)? {
        ParsedFile::Weyl(p) => Ok(p),
        ParsedFile::Skew(_) => Err(FileError::Invalid("expected a[i,j] entries, found a skew presentation".into())),
    }
}

/// Canonical text for a presentation; parsing it back yields an equal
/// presentation.
pub fn write_presentation(p: &Presentation) -> String {
    let n = p.n();
    let mut out = format!("n = {n}\n");
    if declares_minpoly(p.number_field()) {
        out.push_str(&format!("minpoly a = {}\n", p.number_field().minpoly_string()));
    }
    for i in 0..n {
        for j in i + 1..n {
            let v = p.a(i, j);
            if !v.is_zero() {
                out.push_str(&format!("a[{},{}] = {v}\n", i + 1, j + 1));
            }
        }
    }
    out
}

pub fn write_skew(sp: &SkewPresentation) -> String {
    let n = sp.n();
    let mut out = format!("n = {n}\n");
    match sp.roots() {
        Some(r) => {
            out.push_str(&format!("zeta {}\n", r.order));
            for i in 0..n {
                for j in i + 1..n {
                    if r.exponents[i][j] != 0 {
                        out.push_str(&format!("e[{},{}] = {}\n", i + 1, j + 1, r.exponents[i][j]));
                    }
                }
            }
        }
        None => {
            if declares_minpoly(sp.number_field()) {
                out.push_str(&format!("minpoly a = {}\n", sp.number_field().minpoly_string()));
            }
            for i in 0..n {
                for j in i + 1..n {
                    if !sp.p(i, j).is_one() {
                        out.push_str(&format!("p[{},{}] = {}\n", i + 1, j + 1, sp.p(i, j)));
                    }
                }
            }
        }
    }
    out
}

fn declares_minpoly(field: &NumberField) -> bool {
    field.minpoly() != NumberField::rationals().minpoly()
}

/// Polynomials in `a` with rational coefficients, ascending.
struct PolyEval;

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

impl Evaluator for PolyEval {
    type Value = Vec<BigRational>;

    fn int(&self, k: &BigInt) -> Result<Self::Value, ExprError> {
        Ok(trim(vec![BigRational::from_integer(k.clone())]))
    }

    fn symbol(&self, name: &str) -> Result<Self::Value, ExprError> {
        match name {
            "a" => Ok(vec![BigRational::zero(), BigRational::one()]),
            _ => Err(ExprError::UnboundName(name.to_string())),
        }
    }

    fn add(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError> {
        let len = x.len().max(y.len());
        let zero = BigRational::zero();
        Ok(trim(
            (0..len)
                .map(|k| x.get(k).unwrap_or(&zero) + y.get(k).unwrap_or(&zero))
                .collect(),
        ))
    }

    fn neg(&self, x: &Self::Value) -> Result<Self::Value, ExprError> {
        Ok(x.iter().map(|c| -c).collect())
    }

    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError> {
        if x.is_empty() || y.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = vec![BigRational::zero(); x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(trim(out))
    }

    fn div(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value, ExprError> {
        match y.as_slice() {
            [c] => Ok(x.iter().map(|v| v / c).collect()),
            _ => Err(ExprError::Domain("minpoly may only divide by nonzero integers".into())),
        }
    }

    fn pow(&self, x: &Self::Value, k: i64) -> Result<Self::Value, ExprError> {
        if k < 0 {
            return Err(ExprError::Domain("negative powers are not allowed in minpoly".into()));
        }
        let mut acc = vec![BigRational::one()];
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }
}

fn parse_minpoly(text: &str) -> Result<Vec<BigInt>, ExprError> {
    let coeffs = parse(text)?.eval(&PolyEval)?;
    coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(ExprError::Domain(format!("coefficient {c} is not an integer")))
            }
        })
        .collect()
}

/// SHA-256 of the file text, hex encoded.
pub fn digest(text: &str) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn weyl_two() {
        let p = parse_weyl("n = 2\na[1,2] = 1\n").unwrap();
        assert_eq!(p, Presentation::weyl(2));
    }

    #[test]
    fn example_with_minpoly() {
        let text = "# sixth roots\nn = 4\nminpoly a = a^2 - a + 1\na[1,2] = 1\na[1,3] = -1\na[1,4] = 1\na[2,3] = 1\na[2,4] = -a^2\na[3,4] = -a  # trailing\n";
        let p = parse_weyl(text).unwrap();
        let a = Scalar::generator(p.number_field());
        assert_eq!(p.a(2, 3), &-a.clone());
        assert_eq!(p.a(3, 1), &-(&a * &a));
        assert_eq!(parse_weyl(&write_presentation(&p)).unwrap(), p);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_presentation("n = 2\na[2,1] = 1"),
            Err(FileError::Range { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("n = 2\na[1,2] = 1\na[1,2] = 2"),
            Err(FileError::DuplicateEntry { line: 3, i: 1, j: 2 })
        ));
        assert!(matches!(
            parse_presentation("n = 2\na[1,2] = 1 +"),
            Err(FileError::Parse { line: 2, column: 13, .. })
        ));
        assert!(matches!(
            parse_presentation("n = 2\nminpoly a = a^2 + $"),
            Err(FileError::Parse { line: 2, column: 19, .. })
        ));
        assert!(matches!(
            parse_presentation("n = 3\na[1,4] = 1"),
            Err(FileError::Range { .. })
        ));
        assert!(matches!(parse_presentation("a[1,2] = 1"), Err(FileError::Invalid(_))));
        assert!(matches!(
            parse_presentation("n = 2\nb[1,2] = 1"),
            Err(FileError::Parse { line: 2, column: 1, .. })
        ));
        assert!(matches!(
            parse_presentation("n = 2\nminpoly a = a^2 - 1"),
            Err(FileError::Range { line: 2, .. })
        ));
    }

    #[test]
    fn skew_files() {
        let f = parse_presentation("n = 3\nzeta 4\ne[1,2] = 1\ne[2,3] = 3\n").unwrap();
        let ParsedFile::Skew(sp) = f else { panic!("expected skew") };
        assert_eq!(sp.roots().unwrap().exponents[1][2], 3);
        assert_eq!(parse_presentation(&write_skew(&sp)).unwrap(), ParsedFile::Skew(sp));
        let f = parse_presentation("n = 3\np[1,2] = q\np[1,3] = 2").unwrap();
        let ParsedFile::Skew(sp) = f else { panic!("expected skew") };
        assert_eq!(sp.p(1, 0), &Scalar::q().inv().unwrap());
        assert_eq!(parse_presentation(&write_skew(&sp)).unwrap(), ParsedFile::Skew(sp));
        assert!(matches!(
            parse_presentation("n = 3\np[1,2] = q\na[1,3] = 2"),
            Err(FileError::Invalid(_))
        ));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-5i64..6, 1i64..4, -3i64..4, -2i64..3).prop_map(|(num, den, k, shift)| {
            let base = &Scalar::from_ratio(num, den) * &Scalar::q().pow(k).unwrap();
            &base + &Scalar::from_int(shift)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn round_trip(entries in prop::collection::vec(arb_scalar(), 6), ext in any::<bool>()) {
            let field = if ext {
                Arc::new(NumberField::new(vec![1.into(), (-1).into(), 1.into()]).unwrap())
            } else {
                Arc::new(NumberField::rationals())
            };
            let a = Scalar::generator(&field);
            let mut it = entries.into_iter();
            let mut upper = Vec::new();
            for i in 1..=4 {
                for j in i + 1..=4 {
                    let v = it.next().unwrap();
                    let v = if ext && (i + j) % 2 == 0 { &v * &a } else { v };
                    upper.push((i, j, v));
                }
            }
            let p = Presentation::from_upper(4, field, &upper).unwrap();
            let text = write_presentation(&p);
            prop_assert_eq!(parse_weyl(&text).unwrap(), p);
        }
    }
}
