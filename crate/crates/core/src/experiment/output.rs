use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::ExperimentError;

/// Version of the CSV layouts, written in the leading comment line.
pub const SCHEMA_VERSION: u32 = 1;

/// Fixed 17-significant-digit scientific notation.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub(crate) fn format_opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

pub(crate) fn write_csv(
    path: &Path,
    form: &str,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), ExperimentError> {
    let fail = |e: &dyn std::fmt::Display| ExperimentError::Output {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let mut file = BufWriter::new(File::create(path).map_err(|e| fail(&e))?);
    writeln!(file, "# hfgen {form} schema v{SCHEMA_VERSION}").map_err(|e| fail(&e))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(header).map_err(|e| fail(&e))?;
    for r in rows {
        w.write_record(r).map_err(|e| fail(&e))?;
    }
    w.flush().map_err(|e| fail(&e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
        assert_eq!(format_float(-0.7), "-6.9999999999999996e-1");
        assert_eq!(format_float(0.1).parse::<f64>().unwrap(), 0.1);
        assert_eq!(format_opt(None), "");
    }
}
