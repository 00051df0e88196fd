use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A scalar table with a header row.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// What a command produced: always a JSON document, and a CSV-able table
/// when the result is scalar.
pub struct Rendered {
    pub json: Value,
    pub table: Option<Table>,
}

impl Rendered {
    pub fn json(json: Value) -> Self {
        Rendered { json, table: None }
    }

    pub fn with_table(json: Value, table: Table) -> Self {
        Rendered {
            json,
            table: Some(table),
        }
    }
}

pub fn to_bytes(rendered: &Rendered, format: Format) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&rendered.json).map_err(|e| e.to_string())?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let table = rendered
                .table
                .as_ref()
                .ok_or("this output contains polynomials; use --format json")?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.headers).map_err(|e| e.to_string())?;
            for row in &table.rows {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            w.into_inner().map_err(|e| e.to_string())
        }
    }
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => File::create(path)?.write_all(bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}
