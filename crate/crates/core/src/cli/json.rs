//! JSON payload parsing and deterministic number formatting.

use serde_json::{Map, Number, Value};

use crate::charpoly::MatrixParabola;
use crate::classify::EquivalenceCertificate;
use crate::construction::ManifoldData;
use crate::error::Error;
use crate::symmat::{Matrix, SymMatrix};

/// Malformed input versus a well-formed input rejected by the library.
pub enum Failure {
    Malformed(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(msg) => Failure::Malformed(msg),
            other => Failure::Domain(other),
        }
    }
}

pub type Parsed<T> = std::result::Result<T, Failure>;

fn malformed<T>(msg: impl Into<String>) -> Parsed<T> {
    Err(Failure::Malformed(msg.into()))
}

/// Parses a payload, unwrapping a response envelope if one is given.
pub fn parse_payload(text: &str) -> Parsed<Value> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("invalid JSON: {e}")))?;
    match value {
        Value::Object(ref obj) if obj.contains_key("ok") && obj.contains_key("result") => {
            if obj.get("ok") != Some(&Value::Bool(true)) {
                return malformed("input envelope carries an error");
            }
            Ok(obj["result"].clone())
        }
        other => Ok(other),
    }
}

fn field<'a>(obj: &'a Value, key: &str) -> Parsed<&'a Value> {
    match obj.get(key) {
        Some(v) => Ok(v),
        None => malformed(format!("missing field \"{key}\"")),
    }
}

fn number(v: &Value, what: &str) -> Parsed<f64> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => malformed(format!("{what} must be a finite number")),
    }
}

pub fn parse_usize(v: &Value, what: &str) -> Parsed<usize> {
    match v.as_u64() {
        Some(x) => Ok(x as usize),
        None => malformed(format!("{what} must be a non-negative integer")),
    }
}

pub fn parse_matrix(v: &Value, what: &str) -> Parsed<Matrix> {
    let Some(rows) = v.as_array() else {
        return malformed(format!("{what} must be an array of rows"));
    };
    let rows = rows
        .iter()
        .map(|row| match row.as_array() {
            Some(cells) => cells.iter().map(|c| number(c, what)).collect::<Parsed<Vec<f64>>>(),
            None => malformed(format!("{what} must be an array of rows")),
        })
        .collect::<Parsed<Vec<_>>>()?;
    Ok(Matrix::from_rows(&rows)?)
}

pub fn parse_sym(v: &Value, what: &str, tol: f64) -> Parsed<SymMatrix> {
    Ok(SymMatrix::try_from_matrix(&parse_matrix(v, what)?, tol)?)
}

pub fn parse_parabola(v: &Value, tol: f64) -> Parsed<MatrixParabola> {
    Ok(MatrixParabola::new(
        parse_sym(field(v, "A")?, "A", tol)?,
        parse_sym(field(v, "B")?, "B", tol)?,
        parse_sym(field(v, "C")?, "C", tol)?,
    )?)
}

pub fn parse_manifold(v: &Value) -> Parsed<ManifoldData> {
    let n = parse_usize(field(v, "n")?, "n")?;
    let a_prime = parse_matrix(field(v, "a_prime")?, "a_prime")?;
    let a_dblprime = parse_matrix(field(v, "a_dblprime")?, "a_dblprime")?;
    let lattice = parse_matrix(field(v, "lattice")?, "lattice")?;
    Ok(ManifoldData::build(n, &a_prime, &a_dblprime, &lattice)?)
}

/// `{"X", "alpha", "beta", "integral"?}`; without `integral` the
/// certificate is integral exactly when all entries of `X` are integers.
pub fn parse_certificate(v: &Value) -> Parsed<EquivalenceCertificate> {
    let x = parse_matrix(field(v, "X")?, "X")?;
    let alpha = number(field(v, "alpha")?, "alpha")?;
    let beta = number(field(v, "beta")?, "beta")?;
    let integral = match v.get("integral") {
        Some(Value::Bool(b)) => *b,
        Some(_) => return malformed("integral must be a boolean"),
        None => x.to_rows().iter().flatten().all(|c| c.fract() == 0.0),
    };
    Ok(EquivalenceCertificate::new(x, alpha, beta, integral)?)
}

pub fn manifold_json(data: &ManifoldData) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(data.n()));
    obj.insert("a_prime".into(), rows_json(&data.a_prime().to_matrix()));
    obj.insert("a_dblprime".into(), rows_json(data.a_dblprime()));
    obj.insert("lattice".into(), rows_json(data.lattice()));
    Value::Object(obj)
}

pub fn rows_json(m: &Matrix) -> Value {
    serde_json::to_value(m).expect("matrices serialize")
}

pub fn certificate_json(cert: &EquivalenceCertificate) -> Value {
    let mut obj = Map::new();
    obj.insert("X".into(), rows_json(&cert.x));
    obj.insert("alpha".into(), Value::from(cert.alpha));
    obj.insert("beta".into(), Value::from(cert.beta));
    Value::Object(obj)
}

/// Rounds to 12 significant digits, prints integral values as integers and
/// folds `-0` into `0`.
pub fn round_value(v: Value) -> Value {
    match v {
        Value::Number(num) if num.is_f64() => round_number(num.as_f64().unwrap_or(0.0)),
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(obj) => Value::Object(obj.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

fn round_number(x: f64) -> Value {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        return Value::from(0);
    }
    if rounded.fract() == 0.0 && rounded.abs() < 1e15 {
        return Value::from(rounded as i64);
    }
    Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}
