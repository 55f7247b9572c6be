//! Canonical JSON for ring elements, matrices, certificates and GE factor lists.
//!
//! Objects are written with sorted keys and no whitespace, so equal values
//! always serialize to identical bytes. Readers accept JSON numbers where a
//! decimal string is expected; writers always emit strings.

use idemfact_core::certify::Certificate;
use idemfact_core::ge::GEFactor;
use idemfact_core::rings::{
    ConcreteRing, EuclideanDomain, Fraction, GaussInt, GaussianIntegers, Integers, Poly, PolyModP,
    Rationals, RingDescriptor,
};
use idemfact_core::Matrix;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// Malformed input, located by a JSON path such as `$.factors[2].entries[0][1]`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ParseError at {path}: {message}")]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

impl ParseError {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

/// Parses text into a JSON value; syntax errors are located by line and column.
pub fn parse_json(text: &str) -> ParseResult<Value> {
    serde_json::from_str(text).map_err(|e| {
        ParseError::new(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// A ring whose elements have a JSON text encoding.
pub trait JsonRing: ConcreteRing {
    fn encode(&self, e: &Self::Elem) -> Value;
    fn decode(&self, v: &Value, path: &str) -> ParseResult<Self::Elem>;
}

fn decimal(v: &Value, path: &str) -> ParseResult<BigInt> {
    let text = match v {
        Value::String(s) => s.as_str(),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            return Ok(n.to_string().parse().expect("integral number"))
        }
        _ => return Err(ParseError::new(path, "expected a decimal integer string")),
    };
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(path, format!("invalid integer {text:?}")));
    }
    text.parse()
        .map_err(|_| ParseError::new(path, format!("invalid integer {text:?}")))
}

fn array<'a>(v: &'a Value, path: &str) -> ParseResult<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| ParseError::new(path, "expected an array"))
}

impl JsonRing for Integers {
    fn encode(&self, e: &BigInt) -> Value {
        Value::String(e.to_string())
    }

    fn decode(&self, v: &Value, path: &str) -> ParseResult<BigInt> {
        decimal(v, path)
    }
}

impl JsonRing for Rationals {
    fn encode(&self, e: &Fraction<BigInt>) -> Value {
        if e.den == BigInt::from(1) {
            Value::String(e.num.to_string())
        } else {
            Value::String(format!("{}/{}", e.num, e.den))
        }
    }

    fn decode(&self, v: &Value, path: &str) -> ParseResult<Fraction<BigInt>> {
        let (num, den) = match v.as_str().and_then(|s| s.split_once('/')) {
            Some((n, d)) => (
                decimal(&Value::from(n), path)?,
                decimal(&Value::from(d), path)?,
            ),
            None => (decimal(v, path)?, BigInt::from(1)),
        };
        self.fraction(num, den)
            .map_err(|_| ParseError::new(path, "zero denominator"))
    }
}

impl JsonRing for GaussianIntegers {
    fn encode(&self, e: &GaussInt) -> Value {
        json!([e.re.to_string(), e.im.to_string()])
    }

    fn decode(&self, v: &Value, path: &str) -> ParseResult<GaussInt> {
        match array(v, path)?.as_slice() {
            [re, im] => Ok(GaussInt::new(
                decimal(re, &format!("{path}[0]"))?,
                decimal(im, &format!("{path}[1]"))?,
            )),
            _ => Err(ParseError::new(path, "expected [re, im]")),
        }
    }
}

impl JsonRing for PolyModP {
    fn encode(&self, e: &Poly) -> Value {
        Value::Array(
            e.coeffs()
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }

    fn decode(&self, v: &Value, path: &str) -> ParseResult<Poly> {
        let p = self.modulus();
        let mut coeffs = Vec::new();
        for (k, c) in array(v, path)?.iter().enumerate() {
            let at = format!("{path}[{k}]");
            let c = decimal(c, &at)?;
            match u64::try_from(&c) {
                Ok(r) if r < p => coeffs.push(r),
                _ => {
                    return Err(ParseError::new(
                        at,
                        format!("coefficient {c} is not a residue mod {p}"),
                    ))
                }
            }
        }
        Ok(self.poly(&coeffs))
    }
}

pub fn encode_descriptor(d: RingDescriptor) -> Value {
    match d {
        RingDescriptor::Integer => json!({"kind": "integer"}),
        RingDescriptor::Rational => json!({"kind": "rational"}),
        RingDescriptor::Gauss => json!({"kind": "gauss"}),
        RingDescriptor::PolyMod(p) => json!({"kind": "polymod", "p": p}),
    }
}

pub fn decode_descriptor(v: &Value, path: &str) -> ParseResult<RingDescriptor> {
    let obj = object(v, path)?;
    let kind = field(obj, "kind", path)?
        .as_str()
        .ok_or_else(|| ParseError::new(format!("{path}.kind"), "expected a string"))?;
    match kind {
        "integer" => Ok(RingDescriptor::Integer),
        "rational" => Ok(RingDescriptor::Rational),
        "gauss" => Ok(RingDescriptor::Gauss),
        "polymod" => {
            let at = format!("{path}.p");
            let p = field(obj, "p", path)?
                .as_u64()
                .ok_or_else(|| ParseError::new(&at, "expected a positive integer"))?;
            RingDescriptor::poly_mod(p).map_err(|e| ParseError::new(at, e.to_string()))
        }
        other => Err(ParseError::new(
            format!("{path}.kind"),
            format!("unknown ring kind {other:?}"),
        )),
    }
}

/// Parses the `--ring` flag: `integer`, `rational`, `gauss` or `polymod:<p>`.
pub fn parse_ring_flag(s: &str) -> Result<RingDescriptor, String> {
    match s {
        "integer" => Ok(RingDescriptor::Integer),
        "rational" => Ok(RingDescriptor::Rational),
        "gauss" => Ok(RingDescriptor::Gauss),
        _ => {
            let p = s
                .strip_prefix("polymod:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    format!("unknown ring {s:?}; expected integer, rational, gauss or polymod:<p>")
                })?;
            RingDescriptor::poly_mod(p).map_err(|e| e.to_string())
        }
    }
}

fn object<'a>(v: &'a Value, path: &str) -> ParseResult<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| ParseError::new(path, "expected an object"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> ParseResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| ParseError::new(path, format!("missing field {key:?}")))
}

fn count(obj: &Map<String, Value>, key: &str, path: &str) -> ParseResult<usize> {
    field(obj, key, path)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| ParseError::new(format!("{path}.{key}"), "expected a nonnegative integer"))
}

pub fn encode_matrix<R: JsonRing>(m: &Matrix<R>) -> Value {
    let ring = m.ring();
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(|e| ring.encode(e)).collect()))
        .collect();
    json!({
        "cols": m.cols(),
        "entries": rows,
        "ring": encode_descriptor(ring.descriptor()),
        "rows": m.rows(),
    })
}

/// The ring descriptor stored in a matrix or certificate object.
pub fn peek_descriptor(v: &Value) -> ParseResult<RingDescriptor> {
    let obj = object(v, "$")?;
    decode_descriptor(field(obj, "ring", "$")?, "$.ring")
}

pub fn decode_matrix<R: JsonRing>(ring: &R, v: &Value, path: &str) -> ParseResult<Matrix<R>> {
    let obj = object(v, path)?;
    let d = decode_descriptor(field(obj, "ring", path)?, &format!("{path}.ring"))?;
    if d != ring.descriptor() {
        return Err(ParseError::new(
            format!("{path}.ring"),
            "matrix ring differs from the enclosing ring",
        ));
    }
    let rows = count(obj, "rows", path)?;
    let cols = count(obj, "cols", path)?;
    let at = format!("{path}.entries");
    let entries = array(field(obj, "entries", path)?, &at)?;
    if entries.len() != rows {
        return Err(ParseError::new(
            at,
            format!("expected {rows} rows, found {}", entries.len()),
        ));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let rat = format!("{at}[{i}]");
        let row = array(row, &rat)?;
        if row.len() != cols {
            return Err(ParseError::new(
                rat,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        for (j, e) in row.iter().enumerate() {
            out.push(ring.decode(e, &format!("{rat}[{j}]"))?);
        }
    }
    Matrix::new(ring.clone(), rows, cols, out).map_err(|e| ParseError::new(path, e.to_string()))
}

pub fn encode_certificate<R: JsonRing>(c: &Certificate<R>) -> Value {
    json!({
        "factors": c.factors.iter().map(encode_matrix).collect::<Vec<_>>(),
        "meta": {"algorithm": c.algorithm, "count": c.count()},
        "ring": encode_descriptor(c.ring().descriptor()),
        "target": encode_matrix(&c.target),
    })
}

/// A decoded certificate with the factor count its metadata claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedCertificate<R: EuclideanDomain> {
    pub certificate: Certificate<R>,
    pub claimed_count: usize,
}

pub fn decode_certificate<R: JsonRing>(ring: &R, v: &Value) -> ParseResult<DecodedCertificate<R>> {
    let obj = object(v, "$")?;
    let d = decode_descriptor(field(obj, "ring", "$")?, "$.ring")?;
    if d != ring.descriptor() {
        return Err(ParseError::new("$.ring", "unexpected ring"));
    }
    let target = decode_matrix(ring, field(obj, "target", "$")?, "$.target")?;
    let factors = array(field(obj, "factors", "$")?, "$.factors")?
        .iter()
        .enumerate()
        .map(|(k, f)| decode_matrix(ring, f, &format!("$.factors[{k}]")))
        .collect::<ParseResult<Vec<_>>>()?;
    let meta = object(field(obj, "meta", "$")?, "$.meta")?;
    let algorithm = field(meta, "algorithm", "$.meta")?
        .as_str()
        .ok_or_else(|| ParseError::new("$.meta.algorithm", "expected a string"))?;
    let claimed_count = count(meta, "count", "$.meta")?;
    Ok(DecodedCertificate {
        certificate: Certificate::new(target, factors, algorithm),
        claimed_count,
    })
}

pub fn encode_ge_factor<R: JsonRing>(ring: &R, f: &GEFactor<R::Elem>) -> Value {
    match f {
        GEFactor::Elementary { i, j, c } => {
            json!({"c": ring.encode(c), "i": i, "j": j, "kind": "elementary"})
        }
        GEFactor::DiagUnits(u) => {
            json!({"kind": "diag", "units": u.iter().map(|x| ring.encode(x)).collect::<Vec<_>>()})
        }
        GEFactor::Swap { i, j } => json!({"i": i, "j": j, "kind": "swap"}),
    }
}

pub fn decode_ge_factor<R: JsonRing>(
    ring: &R,
    v: &Value,
    path: &str,
) -> ParseResult<GEFactor<R::Elem>> {
    let obj = object(v, path)?;
    let kind = field(obj, "kind", path)?.as_str().unwrap_or_default();
    match kind {
        "elementary" => Ok(GEFactor::Elementary {
            i: count(obj, "i", path)?,
            j: count(obj, "j", path)?,
            c: ring.decode(field(obj, "c", path)?, &format!("{path}.c"))?,
        }),
        "diag" => {
            let at = format!("{path}.units");
            let units = array(field(obj, "units", path)?, &at)?
                .iter()
                .enumerate()
                .map(|(k, u)| ring.decode(u, &format!("{at}[{k}]")))
                .collect::<ParseResult<_>>()?;
            Ok(GEFactor::DiagUnits(units))
        }
        "swap" => Ok(GEFactor::Swap {
            i: count(obj, "i", path)?,
            j: count(obj, "j", path)?,
        }),
        other => Err(ParseError::new(
            format!("{path}.kind"),
            format!("unknown factor kind {other:?}"),
        )),
    }
}

pub fn encode_ge_list<R: JsonRing>(ring: &R, factors: &[GEFactor<R::Elem>]) -> Value {
    json!({
        "factors": factors.iter().map(|f| encode_ge_factor(ring, f)).collect::<Vec<_>>(),
        "ring": encode_descriptor(ring.descriptor()),
    })
}

pub fn decode_ge_list<R: JsonRing>(ring: &R, v: &Value) -> ParseResult<Vec<GEFactor<R::Elem>>> {
    let obj = object(v, "$")?;
    array(field(obj, "factors", "$")?, "$.factors")?
        .iter()
        .enumerate()
        .map(|(k, f)| decode_ge_factor(ring, f, &format!("$.factors[{k}]")))
        .collect()
}
