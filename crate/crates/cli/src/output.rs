use std::io::Write;

use fslp_core::display::format_sig;

use crate::args::Format;
use crate::error::CliError;

/// Shortest round-trip representation unless a digit count is given.
pub fn num(x: f64, precision: Option<usize>) -> String {
    match precision {
        Some(p) => format_sig(x, p),
        None => format!("{x:?}"),
    }
}

/// Rows of already formatted cells, printed as CSV or an aligned table.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
            Format::Table => {
                let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                for row in &self.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:>w$}"))
                        .collect();
                    padded.join("  ")
                };
                writeln!(out, "{}", line(self.headers.clone()))?;
                for row in &self.rows {
                    let cells = row.iter().map(|c| if c.is_empty() { "-" } else { c.as_str() }).collect();
                    writeln!(out, "{}", line(cells))?;
                }
            }
            Format::Json => unreachable!("JSON is written from serde values"),
        }
        Ok(())
    }
}

pub fn write_json(value: &serde_json::Value, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
