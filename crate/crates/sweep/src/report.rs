//! Report emission: JSONL (one record per line, summary as a final object)
//! or CSV (header row, records, summary as a `#` footer).

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::config::OutputFormat;
use crate::record::{Summary, SweepRecord};
use crate::SweepError;

pub const CSV_HEADER: &str = "parameters,case,status,certificate,roots,millis,seed";

pub struct ReportWriter {
    out: Box<dyn Write + Send>,
    format: OutputFormat,
}

impl ReportWriter {
    /// Fresh report to a file (truncates).
    pub fn create(path: &Path, format: OutputFormat) -> Result<Self, SweepError> {
        let file = File::create(path)?;
        let mut w = ReportWriter {
            out: Box::new(BufWriter::new(file)),
            format,
        };
        w.write_header()?;
        Ok(w)
    }

    /// Continue an existing report (header already present).
    pub fn append(path: &Path, format: OutputFormat) -> Result<Self, SweepError> {
        let file = OpenOptions::new().append(true).open(path)?;
        Ok(ReportWriter {
            out: Box::new(BufWriter::new(file)),
            format,
        })
    }

    /// Report to stdout.
    pub fn stdout(format: OutputFormat) -> Result<Self, SweepError> {
        let mut w = ReportWriter {
            out: Box::new(std::io::stdout()),
            format,
        };
        w.write_header()?;
        Ok(w)
    }

    fn write_header(&mut self) -> Result<(), SweepError> {
        if self.format == OutputFormat::Csv {
            writeln!(self.out, "{CSV_HEADER}")?;
        }
        Ok(())
    }

    pub fn write_record(&mut self, record: &SweepRecord) -> Result<(), SweepError> {
        match self.format {
            OutputFormat::Jsonl => {
                let line = serde_json::to_string(record)
                    .map_err(|e| SweepError::Malformed(e.to_string()))?;
                writeln!(self.out, "{line}")?;
            }
            OutputFormat::Csv => {
                let cells = [
                    record.parameters.cell(),
                    record.case.clone().unwrap_or_default(),
                    record.status.clone(),
                    record.certificate.clone(),
                    record.roots.join(";"),
                    record.millis.to_string(),
                    record.seed.to_string(),
                ];
                let row: Vec<String> = cells.iter().map(|c| csv_quote(c)).collect();
                writeln!(self.out, "{}", row.join(","))?;
            }
        }
        Ok(())
    }

    pub fn write_summary(&mut self, summary: &Summary) -> Result<(), SweepError> {
        let body = serde_json::to_string(summary)
            .map_err(|e| SweepError::Malformed(e.to_string()))?;
        match self.format {
            OutputFormat::Jsonl => writeln!(self.out, "{{\"summary\":{body}}}")?,
            OutputFormat::Csv => writeln!(self.out, "# summary {body}")?,
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), SweepError> {
        self.out.flush()?;
        Ok(())
    }
}

fn csv_quote(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Truncate a partially-written report back to exactly `records` record
/// lines (plus the CSV header), dropping any trailing partial line or stale
/// summary. Returns an error when the file holds fewer records.
pub fn truncate_to_records(
    path: &Path,
    format: OutputFormat,
    records: u64,
) -> Result<(), SweepError> {
    let body = std::fs::read_to_string(path)?;
    let keep_prefix_lines = match format {
        OutputFormat::Jsonl => 0usize,
        OutputFormat::Csv => 1,
    };
    let mut kept: Vec<&str> = Vec::new();
    let mut record_count = 0u64;
    for (i, line) in body.lines().enumerate() {
        if i < keep_prefix_lines {
            kept.push(line);
            continue;
        }
        if record_count == records {
            break;
        }
        if is_summary_line(line, format) {
            break;
        }
        kept.push(line);
        record_count += 1;
    }
    if record_count < records {
        return Err(SweepError::Malformed(format!(
            "report has {record_count} records but checkpoint claims {records}"
        )));
    }
    let mut rewritten = kept.join("\n");
    if !rewritten.is_empty() {
        rewritten.push('\n');
    }
    std::fs::write(path, rewritten)?;
    Ok(())
}

fn is_summary_line(line: &str, format: OutputFormat) -> bool {
    match format {
        OutputFormat::Jsonl => line.starts_with("{\"summary\":"),
        OutputFormat::Csv => line.starts_with('#'),
    }
}
