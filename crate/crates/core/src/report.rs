//! Key-value reports printed by the command-line tool.
//!
//! Text form: one `key: value` line per field. Machine form: a single-line
//! JSON object with keys in insertion order. Scalars are JSON numbers in
//! float mode and `"p/q"` strings in exact mode; matrices are arrays of rows.

use serde_json::{Map, Value};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
}

/// JSON value of a scalar: a number for floats, a canonical token string for
/// exact values.
pub fn scalar_value<T: Scalar>(v: &T) -> Value {
    if T::EXACT {
        Value::String(v.to_token())
    } else {
        float_value(v.to_f64())
    }
}

fn float_value(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(v.to_string()), Value::Number)
}

pub fn matrix_value<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(scalar_value).collect())).collect())
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn insert_f64(&mut self, key: &str, v: f64) -> &mut Self {
        self.insert(key, float_value(v))
    }

    pub fn insert_f64s(&mut self, key: &str, vs: &[f64]) -> &mut Self {
        self.insert(key, Value::Array(vs.iter().copied().map(float_value).collect()))
    }

    pub fn insert_scalar<T: Scalar>(&mut self, key: &str, v: &T) -> &mut Self {
        self.insert(key, scalar_value(v))
    }

    pub fn insert_matrix<T: Scalar>(&mut self, key: &str, m: &Matrix<T>) -> &mut Self {
        self.insert(key, matrix_value(m))
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.keys().map(String::as_str)
    }

    pub fn to_text(&self) -> String {
        self.fields
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.fields).expect("maps of JSON values serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        Ok(Self { fields: serde_json::from_str(line.trim())? })
    }
}
