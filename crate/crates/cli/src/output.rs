use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use laplace_qho::{BigRational, ExactScalar};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::Format;

/// Lossless `p/q` rendering, also for integers (`2/1`).
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn scalar(s: &ExactScalar) -> Value {
    json!({ "rational": rational(s.rational()), "pi_half_exp": s.pi_half_exp() })
}

/// Arbitrary-size integer as a JSON number.
pub fn big_integer(i: &num_bigint::BigInt) -> Value {
    Value::Number(i.to_string().parse().expect("integer literal"))
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Int(i64),
    Float(f64),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => float(*x),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        self.columns.iter().zip(row).map(|(c, v)| ((*c).to_owned(), v.to_json())).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn to_csv(&self) -> io::Result<Vec<u8>> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv))?;
        }
        w.into_inner().map_err(|e| e.into_error())
    }
}

#[derive(Debug, Serialize)]
pub struct Meta<C: Serialize> {
    pub version: &'static str,
    pub config: C,
}

pub fn meta<C: Serialize>(config: C) -> Meta<C> {
    Meta { version: env!("CARGO_PKG_VERSION"), config }
}

/// Writes either the JSON document or the CSV table to `out` (stdout if unset).
pub fn emit(format: Format, json_doc: &Value, table: &Table, out: Option<&Path>) -> io::Result<()> {
    let bytes = match format {
        Format::Json => {
            let mut b = serde_json::to_vec_pretty(json_doc)?;
            b.push(b'\n');
            b
        }
        Format::Csv => table.to_csv()?,
    };
    match out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(&bytes)?;
            f.flush()
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()
        }
    }
}
