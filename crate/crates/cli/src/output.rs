use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::Outcome;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit(format: Format, out: &Outcome) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = stdout.lock();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &out.payload)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "m,count")?;
            for (m, c) in out.table.as_deref().unwrap_or_default() {
                writeln!(w, "{m},{c}")?;
            }
        }
        Format::Text => match &out.text {
            Some(lines) => {
                for l in lines {
                    writeln!(w, "{l}")?;
                }
            }
            None => write_text(&mut w, &out.payload)?,
        },
    }
    w.flush()
}

/// Top-level keys one per line; nested values as compact JSON.
fn write_text(w: &mut impl Write, v: &Value) -> io::Result<()> {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::String(s) => writeln!(w, "{k}: {s}")?,
                    other => writeln!(w, "{k}: {other}")?,
                }
            }
            Ok(())
        }
        other => writeln!(w, "{other}"),
    }
}
